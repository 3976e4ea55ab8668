"""Exact toolkit for quadratic independence of adjoint-orbit coordinates."""
from .cartan import CartanDatum, cartan_matrix, gamma, path
from .rootsystem import RootSystem, SignTable, close_roots, extraspecial_signs
from .algebra import LieAlgebra, ad_matrix, bracket, build_algebra, chevalley_algebra, validate

__version__ = "0.1.0"
