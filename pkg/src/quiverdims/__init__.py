"""Exact computations for finite-dimensional quiver algebras: Serre functor
iterates, fractional Calabi-Yau certificates, exceptional collections and
bounds on Rouquier and diagonal dimension."""
from .linalg import QQ, Field, Matrix, parse_field
from .quiver import Quiver, classify_underlying, coxeter_number
from .algebra import FiniteDimAlgebra, build_algebra, tensor_algebra
from .catalog import catalog, CATALOG_NAMES
from .modules import RightModule, projective, injective, simple, representation
from .complexes import PerfectComplex, min_resolution, gldim, hom_dims
from .serre import serre_apply, serre_iterate, fcy_certificate, fcy_holds, ls_us_estimate, nilpotence_degree
from .exceptional import (ExcCollection, run_script, run_named_script, script_text, end_algebra,
                          rdim_bounds, ddim_bounds)
from .psi import psi, psi_graded_dims, verify_exact, kw_bounds, av_dims

__version__ = "0.1.0"
