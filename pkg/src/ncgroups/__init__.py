"""Exact Fredholm-module and cyclic-cocycle computations for the infinite
dihedral group and the crossed product Z x| Z."""

from .cyclic import (
    Cochain0,
    S0,
    b0,
    b1,
    coboundary_feasible,
    cocycle1_from_cd,
    is_trace,
    make_psi,
    make_psi_k,
    pair0,
    solve_1coboundary,
    solve_2coboundary_psik,
)
from .fredholm import chern_pair_even, chern_pair_odd, make_module, pairing_table, verify_module
from .homotopy import build_F0, build_Ft, doubled_module, homotopy_report, rep2d
from .ring import RingElement, alpha_minus1, projection
from .scalar import Gaussian

__version__ = "0.1.0"
