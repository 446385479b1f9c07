"""Rowmotion, homomesy and the AST bijection on 321-avoiders, Dyck words, antichains and matchings."""
from .core import (
    AntichainA,
    AntichainB,
    DomainError,
    DyckWord,
    NoncrossingMatching,
    OrderSubset,
    Orbit,
    PartialMatching,
    Permutation,
    Tableau,
)

__all__ = [
    "AntichainA",
    "AntichainB",
    "DomainError",
    "DyckWord",
    "NoncrossingMatching",
    "OrderSubset",
    "Orbit",
    "PartialMatching",
    "Permutation",
    "Tableau",
]
__version__ = "0.1.0"
