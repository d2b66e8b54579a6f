from mcrhdc.ring.hypervector import Hypervector, pack, unpack, payload_size
from mcrhdc.ring.kernels import PackedKernel, lane_width
from mcrhdc.ring.modulus import Modulus, mod_reduce
from mcrhdc.ring.random import RandomSource, random_components, random_hypervector

__all__ = [
    "Hypervector",
    "Modulus",
    "PackedKernel",
    "RandomSource",
    "lane_width",
    "mod_reduce",
    "pack",
    "payload_size",
    "random_components",
    "random_hypervector",
    "unpack",
]
