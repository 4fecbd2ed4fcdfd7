"""Exact-arithmetic classification of invariant algebraic differential
modules on reductive groups: fundamental groups from root data, character
multiset moduli, torus monodromy invariants, determinant reduction for GL_r,
and de Rham cohomology."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
