from mcrhdc.models.base import DenseAccumulator, GenericHV, ModelDescriptor, ModelFamily, VSAModel, cosine_distance
from mcrhdc.models.factory import ModelFactory, parse_model_list, parse_model_token, resolve_model_tokens

__all__ = [
    "DenseAccumulator",
    "GenericHV",
    "ModelDescriptor",
    "ModelFactory",
    "ModelFamily",
    "VSAModel",
    "cosine_distance",
    "parse_model_list",
    "parse_model_token",
    "resolve_model_tokens",
]
