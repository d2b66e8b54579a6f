from mcrhdc.mcr import (
    CartesianAccumulator,
    bind,
    compare_normalizations,
    distance,
    normalize_reference,
    normalize_wta,
    permute_cyclic,
    search,
    unbind,
)
from mcrhdc.models import ModelDescriptor, ModelFactory, ModelFamily, VSAModel, parse_model_token
from mcrhdc.ring import Hypervector, Modulus, RandomSource, random_hypervector

__version__ = "0.1.0"

__all__ = [
    "CartesianAccumulator",
    "Hypervector",
    "ModelDescriptor",
    "ModelFactory",
    "ModelFamily",
    "Modulus",
    "RandomSource",
    "VSAModel",
    "bind",
    "compare_normalizations",
    "distance",
    "normalize_reference",
    "normalize_wta",
    "parse_model_token",
    "permute_cyclic",
    "random_hypervector",
    "search",
    "unbind",
]
