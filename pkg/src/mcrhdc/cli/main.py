"""
``mcrhdc`` command line.

Subcommands ``capacity``, ``classify``, ``latency``, ``microbench`` and ``hv``
each run one harness and write a self-describing result table; ``rerun``
repeats the experiment recorded in an earlier result file.

Exit codes: 0 on success, 2 on a configuration error, 1 on a runtime error.
"""
import argparse
import sys
from typing import Callable, Dict, List, Optional

import pandas as pd
from pydantic import ValidationError

from mcrhdc.base import ExperimentConfig
from mcrhdc.errors import InvalidArgumentError, UnsupportedError
from mcrhdc.utils.io import read_results, write_results
from mcrhdc.utils.logger import get_logger, set_log_level

logger = get_logger("cli")

EXIT_OK = 0
EXIT_RUNTIME_ERROR = 1
EXIT_CONFIG_ERROR = 2

COMMON_KEYS = ("format", "jobs", "out", "log_level", "progress")


def int_list(text: str) -> List[int]:
    """``"8,16,32"`` or an inclusive range ``"10:400:10"``."""
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) != 3 or parts[2] < 1:
                raise ValueError
            start, stop, step = parts
            return list(range(start, stop + 1, step))
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list or start:stop:step, got {text!r}")


def str_list(text: str) -> List[str]:
    return [p.strip() for p in text.split(",") if p.strip()]


def frequency(text: str):
    if text == "auto":
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected MHz or 'auto', got {text!r}")


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=["csv", "json"], help="Result format (default csv)")
    common.add_argument("--out", help="Result file; stdout when omitted")
    common.add_argument("--jobs", type=int, help="Worker cap (default $MCRHDC_JOBS)")
    common.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING, ...")
    common.add_argument("--no-progress", dest="progress", action="store_false", help="Hide progress bars")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="mcrhdc", description="Modular composite representation experiments")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text,
                              argument_default=argparse.SUPPRESS)

    p = add("capacity", "Information-capacity sweep")
    p.add_argument("--models", type=str_list, help="e.g. mcr16,mcr8,mcr4,bsc,mapi4,mapi32,fhrr (mcr<N>: r=N)")
    p.add_argument("--d", type=int_list, help="Codebook sizes")
    p.add_argument("--m", type=int_list, help="Sequence lengths, list or start:stop:step")
    p.add_argument("--dim", type=int, help="Dimensionality D")
    p.add_argument("--codebooks", type=int, help="Codebooks per cell")
    p.add_argument("--sequences", type=int, help="Sequences per codebook")
    p.add_argument("--seed", type=int)
    p.add_argument("--arithmetic", choices=["reference", "fast"])
    p.add_argument("--normalize-every-step", dest="normalize_every_step", action="store_true",
                   help="Normalize after every superposition step")

    p = add("classify", "Classification benchmark")
    p.add_argument("--data", dest="data_dir", help="Dataset directory (default $MCRHDC_DATA_DIR)")
    p.add_argument("--datasets", type=str_list, required=True)
    p.add_argument("--models", type=str_list, help="e.g. mcr4:64,mcr4:256,bsc:1024 (mcr<N>: N bits)")
    p.add_argument("--dim", type=int, help="D for tokens without a :D suffix")
    p.add_argument("--levels", type=int)
    p.add_argument("--epochs", type=int)
    p.add_argument("--eps", type=float)
    p.add_argument("--omega", type=float)
    p.add_argument("--runs", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--arithmetic", choices=["reference", "fast"])

    p = add("latency", "Analytic accelerator latency model")
    p.add_argument("--simd", type=int_list)
    p.add_argument("--dim", dest="dims", type=int_list, help="HVDIM values")
    p.add_argument("--r", type=int_list)
    p.add_argument("--fp", type=int)
    p.add_argument("--classes", type=int)
    p.add_argument("--features", type=int)
    p.add_argument("--freq", type=frequency, help="Clock in MHz, or 'auto'")
    p.add_argument("--dataset", help="Dataset-shape preset, e.g. ISOLET")
    p.add_argument("--compare-bsc", dest="compare_bsc", action="store_true")
    p.add_argument("--bsc-dim", dest="bsc_dims", type=int_list, help="HVDIM values of the BSC rows")

    p = add("microbench", "Reference versus packed fast-path throughput")
    p.add_argument("--ops", type=str_list, help="bind,unbind,distance,normalize")
    p.add_argument("--models", type=str_list, help="MCR tokens, mcr<N>: r=N")
    p.add_argument("--dim", dest="dims", type=int_list)
    p.add_argument("--repetitions", type=int)
    p.add_argument("--batch", type=int)
    p.add_argument("--min-speedup", dest="min_speedup", type=float)
    p.add_argument("--seed", type=int)

    p = add("hv", "Create, convert or inspect .mcrv hypervector files")
    p.add_argument("action", choices=["random", "inspect", "pack", "unpack"])
    p.add_argument("--r", type=int)
    p.add_argument("--dim", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--input")
    p.add_argument("--output")

    p = add("rerun", "Repeat the experiment recorded in a result file")
    p.add_argument("result", help="CSV or JSON result file")
    return parser


def resolve_config(args: Dict) -> ExperimentConfig:
    """Turn parsed flags into a validated :class:`ExperimentConfig`."""
    args = dict(args)
    top = {k: args.pop(k) for k in ("format", "jobs", "out") if k in args}
    for key in COMMON_KEYS:
        args.pop(key, None)
    subcommand = args.pop("subcommand")
    if subcommand == "rerun":
        header, _ = read_results(args.pop("result"))
        return ExperimentConfig.from_config({**header, **top})
    return ExperimentConfig.from_config({"subcommand": subcommand, "params": args, **top})


def _harness(subcommand: str) -> Callable:
    if subcommand == "capacity":
        from mcrhdc.capacity.bench import run_capacity_sweep
        return run_capacity_sweep
    elif subcommand == "classify":
        from mcrhdc.classifier.benchmark import run_benchmark
        return run_benchmark
    elif subcommand == "latency":
        from mcrhdc.latency.sweep import run_latency_sweep
        return run_latency_sweep
    elif subcommand == "microbench":
        from mcrhdc.cli.microbench import run_microbench
        return run_microbench
    from mcrhdc.cli.hv import run_hv
    return run_hv


def run_experiment(experiment: ExperimentConfig, show_progress: Optional[bool] = None) -> pd.DataFrame:
    harness = _harness(experiment.subcommand)
    if experiment.subcommand in ("capacity", "classify"):
        return harness(experiment.params, jobs=experiment.jobs, show_progress=show_progress)
    return harness(experiment.params)


def parse_and_dispatch(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = vars(parser.parse_args(argv))
    except SystemExit as e:
        # --help exits 0, usage errors 2
        return e.code if isinstance(e.code, int) else EXIT_OK
    if "log_level" in args:
        try:
            set_log_level(args["log_level"])
        except ValueError as e:
            logger.error(f"invalid log level: {e}")
            return EXIT_CONFIG_ERROR
    show_progress = False if args.get("progress") is False else None

    try:
        experiment = resolve_config(args)
        table = run_experiment(experiment, show_progress)
        write_results(table, experiment.result_header(), experiment.format, experiment.out)
    except (ValidationError, InvalidArgumentError, UnsupportedError) as e:
        logger.error(f"configuration error: {e}")
        return EXIT_CONFIG_ERROR
    except Exception as e:
        logger.error(f"{type(e).__name__}: {e}")
        logger.debug("traceback", exc_info=True)
        return EXIT_RUNTIME_ERROR
    if experiment.out:
        logger.info(f"results written to {experiment.out}")
    return EXIT_OK


def main() -> int:
    return parse_and_dispatch(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
