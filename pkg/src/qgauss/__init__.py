"""Exact q-binomial coefficients and Boolean-algebra decompositions."""

from .qpoly import Polynomial, gaussian_oracle

__version__ = "0.1.0"
__all__ = ["Polynomial", "gaussian_oracle", "__version__"]
