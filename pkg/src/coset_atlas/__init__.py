"""Exact coset weight distributions of the twisted-cubic [q+1, q-3, 5]_q code."""

from . import code, cubic, errors, geom, gf, oracle, report, verify
from .code import CosetClass, TwistedCubicCode, build_code
from .cubic import CubicGeometry, build_geometry
from .gf import FieldSpec, build_field, field_of_order

__version__ = "0.1.0"

__all__ = [
    "code", "cubic", "errors", "geom", "gf", "oracle", "report", "verify",
    "CosetClass", "TwistedCubicCode", "build_code", "CubicGeometry", "build_geometry",
    "FieldSpec", "build_field", "field_of_order",
]
