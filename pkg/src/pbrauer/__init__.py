"""Exact computations in the two-parameter partial Brauer algebras R_n(d, dp)."""

from ._accel import backend
from .algebra import (Element, decorated, format_element, ideal_membership, multiply, omega,
                      presentation_check, to_decorated, u_hat, u_hat_all)
from .cells import DeltaModule, delta_module, labels, simple_dims
from .diagram import (Diagram, compose, enumerate_diagrams, identity, parse_text, star,
                      stats, tensor, to_text)
from .scalar import DELTA, DELTA_PRIME, ONE, ZERO, Scalar, evaluate, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "backend", "Element", "decorated", "format_element", "ideal_membership", "multiply",
    "omega", "presentation_check", "to_decorated", "u_hat", "u_hat_all", "DeltaModule",
    "delta_module", "labels", "simple_dims", "Diagram", "compose", "enumerate_diagrams",
    "identity", "parse_text", "star", "stats", "tensor", "to_text", "DELTA", "DELTA_PRIME",
    "ONE", "ZERO", "Scalar", "evaluate", "parse_scalar", "__version__",
]
