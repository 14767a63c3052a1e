"""Fat simplex category: objects, morphisms, words and normal forms."""

from ._fatdelta import (
    FatDeltaError,
    FatMorphism,
    FatObject,
    Letter,
    MonotoneMap,
    NormalForm,
    Word,
    audit,
    check_relations,
    factor,
    hom,
    normalize,
    objects,
    render,
    ternary,
    words_equal,
)

__all__ = [
    "FatDeltaError",
    "FatMorphism",
    "FatObject",
    "Letter",
    "MonotoneMap",
    "NormalForm",
    "Word",
    "audit",
    "check_relations",
    "factor",
    "hom",
    "normalize",
    "objects",
    "render",
    "ternary",
    "words_equal",
]
