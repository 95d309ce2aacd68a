"""Exact real-eigenvalue statistics of the elliptic real Ginibre ensemble."""
from .algebra import Poly, SurdValue, catalan, double_factorial, pochhammer, poly_eval_surd
from .params import ModelParams

__all__ = ["Poly", "SurdValue", "ModelParams", "catalan", "double_factorial", "pochhammer",
           "poly_eval_surd"]
__version__ = "0.1.0"
