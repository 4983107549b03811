"""Explicit presentations of mod-p Iwasawa algebras of pro-p Iwahori subgroups,
with graded straightening and desk-scale verification."""

from .errors import (CartanTypeError, ConsistencyError, IwasawaError, PrecisionError, PrimeTooSmallError,
                     ResourceCapError, RootError)
from .grading import brute_force_count, graded_dim_omega, graded_dims
from .kernels import BACKEND
from .ordering import generator_table, longest_word, papi_order, reduced_words, verify_compatible
from .presentation import build_presentation, export_presentation, generate_relations, parse_presentation, \
    primed_form, verify_primed
from .roots import CartanType, RootSystem, build_root_system
from .straighten import GradedElement, Rewriter, confluence_probe, graded_dim_upper_bound

__version__ = "0.1.0"
