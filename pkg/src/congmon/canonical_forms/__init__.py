"""A_n, its powers, the six congruence canonical blocks and path relabelings."""

from .blocks import BLOCK_KINDS, CanonicalBlock, assemble, make_block, make_I, make_J
from .paths import (
    PowerDecomposition,
    decompose_An_power,
    make_An,
    make_An_power,
    make_sigma,
    path_adjacency,
    relabeled_path_target,
    sigma_target,
)

__all__ = [
    "BLOCK_KINDS",
    "CanonicalBlock",
    "PowerDecomposition",
    "assemble",
    "decompose_An_power",
    "make_An",
    "make_An_power",
    "make_I",
    "make_J",
    "make_block",
    "make_sigma",
    "path_adjacency",
    "relabeled_path_target",
    "sigma_target",
]
