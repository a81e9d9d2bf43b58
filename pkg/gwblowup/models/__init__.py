# Models package
from .curve import CurveClass, Key, KnownValue, SplitPair, WeightedSplit
from .status import EnumReason, EnumStatus

__all__ = [
    "CurveClass",
    "Key",
    "KnownValue",
    "SplitPair",
    "WeightedSplit",
    "EnumReason",
    "EnumStatus",
]
