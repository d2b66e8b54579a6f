from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from mcrhdc.config import MCRHDC_DATA_DIR, MCRHDC_JOBS, MCRHDC_MICROBENCH_MIN_SPEEDUP, MCRHDC_SEED
from mcrhdc.errors import InvalidArgumentError

Arithmetic = Literal["reference", "fast"]
OutputFormat = Literal["csv", "json"]


class BaseConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_config(cls, config: dict):
        if not config:
            return None
        return cls(**config)

    def to_dict(self) -> dict:
        """JSON-serializable view, embedded verbatim in result files."""
        return self.model_dump(mode="json")


def _positive(name: str, values: List[int], minimum: int = 1) -> List[int]:
    if not values:
        raise InvalidArgumentError(f"{name} must not be empty")
    bad = [v for v in values if v < minimum]
    if bad:
        raise InvalidArgumentError(f"{name} values must be >= {minimum}, got {bad}")
    return values


class CapacityConfig(BaseConfig):
    models: List[str] = Field(default=["mcr16", "mcr8", "mcr4", "bsc", "mapi4", "mapi32", "fhrr"],
                              description="Model tokens; mcr<N> means modulus N")
    d: List[int] = Field(default=[15], description="Codebook sizes")
    m: List[int] = Field(default=[10, 50, 100, 200, 400], description="Sequence lengths")
    dim: int = Field(default=500, description="Hypervector dimensionality D")
    codebooks: int = Field(default=5, description="Independent random codebooks per cell")
    sequences: int = Field(default=20, description="Random sequences per codebook")
    seed: int = Field(default=MCRHDC_SEED, description="Root seed")
    arithmetic: Arithmetic = Field(default="reference", description="MCR arithmetic path")
    normalize_every_step: bool = Field(default=False, description="Normalize after every superposition step")

    @field_validator("d")
    @classmethod
    def validate_d(cls, v: List[int]) -> List[int]:
        return _positive("d", v, minimum=2)

    @field_validator("m")
    @classmethod
    def validate_m(cls, v: List[int]) -> List[int]:
        return _positive("m", v)

    @model_validator(mode="after")
    def validate_counts(self) -> "CapacityConfig":
        for name in ("dim", "codebooks", "sequences"):
            if getattr(self, name) < 1:
                raise InvalidArgumentError(f"{name} must be >= 1, got {getattr(self, name)}")
        if not self.models:
            raise InvalidArgumentError("models must not be empty")
        return self


class ClassifyConfig(BaseConfig):
    data_dir: str = Field(default=MCRHDC_DATA_DIR, description="Directory holding <name>.csv + <name>.json")
    datasets: List[str] = Field(..., description="Dataset names")
    models: List[str] = Field(default=["mcr4:64", "mcr4:256", "mcr4:1024", "bsc:1024", "mapi4:1024", "mapc32:1024"],
                              description="Model tokens; mcr<N> means N bits per component")
    dim: int = Field(default=1024, description="Default D for tokens without a :D suffix")
    levels: int = Field(default=1024, description="Thermometer quantization levels L")
    epochs: int = Field(default=10, description="Training epochs (1 = centroid only)")
    eps: float = Field(default=0.01, description="LVQ2.1 learning rate")
    omega: float = Field(default=0.1, description="LVQ2.1 window width")
    runs: int = Field(default=20, description="Independent seeds per (dataset, model)")
    seed: int = Field(default=MCRHDC_SEED, description="Root seed")
    arithmetic: Arithmetic = Field(default="reference", description="MCR arithmetic path")

    @model_validator(mode="after")
    def validate_training(self) -> "ClassifyConfig":
        if not self.datasets:
            raise InvalidArgumentError("datasets must not be empty")
        if self.levels < 2:
            raise InvalidArgumentError(f"levels must be >= 2, got {self.levels}")
        if self.epochs < 1 or self.runs < 1 or self.dim < 1:
            raise InvalidArgumentError("epochs, runs and dim must be >= 1")
        if self.eps <= 0:
            raise InvalidArgumentError(f"eps must be > 0, got {self.eps}")
        if not 0 < self.omega < 1:
            raise InvalidArgumentError(f"omega must lie in (0, 1), got {self.omega}")
        return self


class LatencyConfig(BaseConfig):
    simd: List[int] = Field(default=[8, 16, 32, 64], description="SIMD lane counts")
    dims: List[int] = Field(default=[64, 512, 2048], description="HVDIM values")
    r: List[int] = Field(default=[16], description="Moduli")
    fp: int = Field(default=16, description="Fixed-point bits of the accumulator datapath")
    classes: int = Field(default=1, description="HVCLASS (prototypes searched)")
    features: int = Field(default=1, description="Input features per sample")
    freq: Optional[Union[float, Literal["auto"]]] = Field(default=None,
                                                          description="Clock in MHz, or 'auto' for the reference clocks")
    dataset: Optional[str] = Field(default=None, description="Dataset-shape preset overriding classes/features")
    compare_bsc: bool = Field(default=False, description="Add the BSC accelerator counterpart rows")
    bsc_dims: Optional[List[int]] = Field(default=None,
                                          description="HVDIM values of the BSC counterpart; defaults to dims")

    @model_validator(mode="after")
    def validate_grid(self) -> "LatencyConfig":
        for simd in _positive("simd", self.simd):
            if simd & (simd - 1):
                raise InvalidArgumentError(f"SIMD must be a power of two, got {simd}")
        for r in _positive("r", self.r, minimum=4):
            if r & (r - 1):
                raise InvalidArgumentError(f"r must be a power of two, got {r}")
        _positive("dims", self.dims)
        if self.bsc_dims is not None:
            _positive("bsc_dims", self.bsc_dims)
        if self.classes < 1 or self.features < 1:
            raise InvalidArgumentError("classes and features must be >= 1")
        if isinstance(self.freq, float) and self.freq <= 0:
            raise InvalidArgumentError(f"freq must be > 0, got {self.freq}")
        return self


class MicrobenchConfig(BaseConfig):
    ops: List[Literal["bind", "unbind", "distance", "normalize"]] = Field(default=["bind", "distance"])
    models: List[str] = Field(default=["mcr16"], description="MCR model tokens; mcr<N> means modulus N")
    dims: List[int] = Field(default=[256, 1024, 2048, 4096, 16384])
    repetitions: int = Field(default=50, description="Timed repetitions per cell")
    batch: int = Field(default=64, description="Vectors per timed call")
    min_speedup: float = Field(default=MCRHDC_MICROBENCH_MIN_SPEEDUP, description="Reported fast-path speedup bar")
    seed: int = Field(default=MCRHDC_SEED)

    @model_validator(mode="after")
    def validate_counts(self) -> "MicrobenchConfig":
        if self.repetitions < 1:
            raise InvalidArgumentError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.batch < 1:
            raise InvalidArgumentError(f"batch must be >= 1, got {self.batch}")
        _positive("dims", self.dims)
        if not self.ops or not self.models:
            raise InvalidArgumentError("ops and models must not be empty")
        return self


class HvConfig(BaseConfig):
    action: Literal["random", "inspect", "pack", "unpack"]
    r: Optional[int] = Field(default=None, description="Modulus for random/pack")
    dim: Optional[int] = Field(default=None, description="Dimension for random")
    seed: int = Field(default=MCRHDC_SEED)
    input: Optional[str] = Field(default=None, description="Input file")
    output: Optional[str] = Field(default=None, description="Output file")


class ExperimentConfig(BaseConfig):
    """A fully resolved CLI invocation."""
    subcommand: Literal["capacity", "classify", "latency", "microbench", "hv"]
    format: OutputFormat = Field(default="csv")
    jobs: int = Field(default=MCRHDC_JOBS, description="Worker cap")
    out: Optional[str] = Field(default=None, description="Output path; stdout when unset")
    params: Union[CapacityConfig, ClassifyConfig, LatencyConfig, MicrobenchConfig, HvConfig]

    @field_validator("jobs")
    @classmethod
    def validate_jobs(cls, v: int) -> int:
        if v < 1:
            raise InvalidArgumentError(f"jobs must be >= 1, got {v}")
        return v

    @classmethod
    def from_config(cls, config: dict):
        if not config:
            return None
        params_type = {
            "capacity": CapacityConfig,
            "classify": ClassifyConfig,
            "latency": LatencyConfig,
            "microbench": MicrobenchConfig,
            "hv": HvConfig,
        }[config["subcommand"]]
        return cls(**{**config, "params": params_type.from_config(config.get("params") or {}) or params_type()})

    def result_header(self) -> dict:
        """The part of the config that determines results; ``out`` and ``jobs`` do not."""
        return {"subcommand": self.subcommand, "params": self.params.to_dict()}
