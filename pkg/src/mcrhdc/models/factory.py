import re
from typing import List, Literal, Optional, Sequence

from mcrhdc.config import MCRHDC_SEED
from mcrhdc.errors import InvalidArgumentError
from mcrhdc.models.base import ModelDescriptor, ModelFamily, VSAModel
from mcrhdc.utils.logger import get_logger

logger = get_logger("models")

TokenContext = Literal["capacity", "classify"]

_TOKEN = re.compile(
    r"^(?:(?P<bsc>bsc)|(?P<fhrr>fhrr)|(?P<mapc>mapc32)|mapi(?P<mapi>\d+)"
    r"|mcr-r(?P<r>\d+)|mcr-b(?P<bits>\d+)|mcr(?P<n>\d+))(?::(?P<dim>\d+))?$"
)


def parse_model_token(token: str, context: TokenContext = "capacity", dim: Optional[int] = None,
                      arithmetic: str = "reference") -> ModelDescriptor:
    """
    Parse a model token such as ``mcr16``, ``mcr-b4:256``, ``mapi3`` or ``bsc:1024``.

    A bare ``mcr<N>`` reads as a modulus in the capacity harness and as a bit
    width (``r = 2^N``) in the classifier, matching how each harness names its
    models; ``mcr-r<r>`` and ``mcr-b<bits>`` are unambiguous everywhere. A
    ``:<D>`` suffix overrides ``dim``.
    """
    match = _TOKEN.match(token.strip().lower())
    if not match:
        raise InvalidArgumentError(f"malformed model token: {token!r}")
    groups = match.groupdict()
    if groups["dim"] is not None:
        dim = int(groups["dim"])
    if dim is None:
        raise InvalidArgumentError(f"model token {token!r} has no dimension and no default was given")

    fields = {"dim": dim}
    if groups["bsc"]:
        fields["family"] = ModelFamily.BSC
    elif groups["fhrr"]:
        fields["family"] = ModelFamily.FHRR
    elif groups["mapc"]:
        fields["family"] = ModelFamily.MAP_C
    elif groups["mapi"] is not None:
        fields.update(family=ModelFamily.MAP_I, int_bits=int(groups["mapi"]))
    else:
        if groups["r"] is not None:
            r = int(groups["r"])
        elif groups["bits"] is not None:
            r = 1 << int(groups["bits"])
        elif context == "classify":
            r = 1 << int(groups["n"])
        else:
            r = int(groups["n"])
        fields.update(family=ModelFamily.MCR, r=r, arithmetic=arithmetic)
    return ModelDescriptor(**fields)


def parse_model_list(tokens: str, context: TokenContext = "capacity", dim: Optional[int] = None,
                     arithmetic: str = "reference") -> List[ModelDescriptor]:
    items = [t for t in tokens.split(",") if t.strip()]
    if not items:
        raise InvalidArgumentError("model list is empty")
    return [parse_model_token(t, context, dim, arithmetic) for t in items]


def resolve_model_tokens(tokens: Sequence[str], context: TokenContext = "capacity", dim: Optional[int] = None,
                         arithmetic: str = "reference") -> List[ModelDescriptor]:
    """Parse ``tokens`` in order, dropping aliases of a model already listed (``mcr16`` and ``mcr-r16``)."""
    descriptors: List[ModelDescriptor] = []
    for token in tokens:
        descriptor = parse_model_token(token, context, dim, arithmetic)
        if descriptor in descriptors:
            logger.warning(f"model {token!r} repeats {descriptor.label}:{descriptor.dim}; skipped")
            continue
        descriptors.append(descriptor)
    return descriptors


class ModelFactory:

    @staticmethod
    def get_model(descriptor: ModelDescriptor, seed: int = MCRHDC_SEED, **kwargs) -> VSAModel:
        if descriptor.family == ModelFamily.MCR:
            from mcrhdc.models.mcr import MCRModel
            return MCRModel(descriptor, seed, **kwargs)
        elif descriptor.family == ModelFamily.BSC:
            from mcrhdc.models.bsc import BSCModel
            return BSCModel(descriptor, seed)
        elif descriptor.family in (ModelFamily.MAP_I, ModelFamily.MAP_C):
            from mcrhdc.models.map import MAPModel
            return MAPModel(descriptor, seed)
        elif descriptor.family == ModelFamily.FHRR:
            from mcrhdc.models.fhrr import FHRRModel
            return FHRRModel(descriptor, seed)
        else:
            raise InvalidArgumentError(f"Model family {descriptor.family} is not supported")
