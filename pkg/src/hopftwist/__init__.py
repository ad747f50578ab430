"""Exact computations with Hopf 2-cocycles on function algebras of algebraic groups."""

from .analysis import center_upto, simplicity_verdict, snf, structure_report, support_report, torus_support
from .builtins import builtin, builtin_names
from .cocycle import (
    Bicharacter,
    Convolution,
    ExpBivector,
    ExplicitSeries,
    Trivial,
    borel_builtin,
    cocycle_axiom_check,
    eval_J,
    eval_Jinv,
    eval_Q,
    eval_RJ,
)
from .documents import parse_document, serialize
from .hopfmodel import Element, GroupData, coproduct, counit, validate_hopf
from .liecore import Bivector, Derivation, LieAlgebra, cybe_check, invert_bivector, prop54_decompose
from .scalars import Scalar
from .twistalg import TwistedAlgebra, derive_presentation, normal_form, twisted_product

__version__ = "0.1.0"
