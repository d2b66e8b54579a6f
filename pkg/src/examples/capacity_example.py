"""Information capacity of MCR-16 against BSC and FHRR at D=500."""
from mcrhdc.base import CapacityConfig
from mcrhdc.capacity import run_capacity_sweep

if __name__ == "__main__":
    config = CapacityConfig(models=["mcr16", "mcr4", "bsc", "fhrr"], d=[15], m=[10, 50, 100], dim=500,
                            codebooks=2, sequences=10)
    table = run_capacity_sweep(config, jobs=4)
    print(table[["model", "m", "mean_accuracy", "I_tot", "I_bit"]].to_string(index=False))
