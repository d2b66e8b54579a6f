"""Predicted inference latency of a small MCR unit against a wide BSC unit."""
from mcrhdc.latency import DATASET_SHAPES, LatencySpec, bsc_inference_cycles, inference_cycles

if __name__ == "__main__":
    for name, (features, classes) in DATASET_SHAPES.items():
        mcr = inference_cycles(LatencySpec(simd=8, r=16, dim=64, classes=classes), features)
        bsc = bsc_inference_cycles(LatencySpec(simd=32, r=16, dim=1024, classes=classes), features)
        print(f"{name:>16}: MCR-4 D=64 {mcr.total:>7} cycles | BSC D=1024 {bsc.total:>7} cycles "
              f"| {bsc.total / mcr.total:.2f}x")
