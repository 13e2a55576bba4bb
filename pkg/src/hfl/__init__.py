"""Exact computations with the semisimple Hopf algebras H_{2n^2}.

Submodules: cyclotomic (scalars), hopf (the algebra), center (idempotents),
repr (simple modules and the trace oracle), fusion (closed-form fusion
rules), presentation (generators and relations of the Grothendieck ring).
"""

from .center import center_basis, e_idem, f_idem, primitive_central_idempotents
from .cyclotomic import CycNum, cyc_from_root_power
from .fusion import fuse, fusion_table
from .hopf import AlgElem, HopfAlgebra, TensorElem, algebra
from .labels import FusionVector, OneDim, TwoDim, simple_labels
from .presentation import IntPoly, fibonacci_poly, presentation_relations
from .repr import build_simple, decompose, tensor_rep

__all__ = [
    "AlgElem",
    "CycNum",
    "FusionVector",
    "HopfAlgebra",
    "IntPoly",
    "OneDim",
    "TensorElem",
    "TwoDim",
    "algebra",
    "build_simple",
    "center_basis",
    "cyc_from_root_power",
    "decompose",
    "e_idem",
    "f_idem",
    "fibonacci_poly",
    "fuse",
    "fusion_table",
    "presentation_relations",
    "primitive_central_idempotents",
    "simple_labels",
    "tensor_rep",
]
