"""Computations with Legendrian front diagrams: classical invariants, front
moves, oriented surgery, family generators, and surgery-unknotting bounds."""

from .front import (
    Event,
    OrientedFront,
    classical_invariants,
    components,
    ev,
    format_word,
    orient,
    reverse_orientation,
    tb_r,
    validate,
    word,
)

__all__ = [
    "Event",
    "OrientedFront",
    "classical_invariants",
    "components",
    "ev",
    "format_word",
    "orient",
    "reverse_orientation",
    "tb_r",
    "validate",
    "word",
]
