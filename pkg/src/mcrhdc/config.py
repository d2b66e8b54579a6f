import os

from dotenv import load_dotenv

load_dotenv()

DATA_DIR = os.environ.get("DATA_DIR", f"{os.path.expanduser('~')}/mcrhdc")


MCRHDC_DATA_DIR = os.environ.get("MCRHDC_DATA_DIR", f"{DATA_DIR}/data")


####################################
# Config for Logging
####################################
MCRHDC_LOG_LEVEL = os.environ.get("MCRHDC_LOG_LEVEL", "INFO").upper()


####################################
# Config for Experiments
####################################
MCRHDC_SEED = int(os.environ.get("MCRHDC_SEED", "2024"))
MCRHDC_JOBS = int(os.environ.get("MCRHDC_JOBS", "1"))


####################################
# Config for Fixed-point Arithmetic
####################################
# Q6.10 by default: sign + 5 integer bits + 10 fraction bits
MCRHDC_FP_TOTAL_BITS = int(os.environ.get("MCRHDC_FP_TOTAL_BITS", "16"))
MCRHDC_FP_FRAC_BITS = int(os.environ.get("MCRHDC_FP_FRAC_BITS", "10"))
# zero-magnitude window for the integer-mean fallback, in LSBs (2^-(frac-2))
MCRHDC_EPSILON_LSB = int(os.environ.get("MCRHDC_EPSILON_LSB", "4"))


####################################
# Config for Microbenchmarks
####################################
MCRHDC_MICROBENCH_MIN_SPEEDUP = float(os.environ.get("MCRHDC_MICROBENCH_MIN_SPEEDUP", "5.0"))
