from enum import Enum


class Family(str, Enum):
    """CB: d-cuphs (complete bipartite for graphs). CM: all (d,k)-cuphs."""

    CB = "cb"
    CM = "cm"


class Mode(str, Enum):
    COVER = "cover"
    PARTITION = "partition"


class Relax(str, Enum):
    FRACTIONAL = "fractional"
    INTEGRAL = "integral"


class DenseMethod(str, Enum):
    EXACT = "exact"
    MC = "mc"
