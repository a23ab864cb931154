"""Maxwell pole decompositions of solid harmonics and binary-form invariants.

Thin convenience layer over the compiled extension.  Polynomials in (x, y, z)
are exchanged as lists of (p, q, r, coefficient) monomial tuples; binary forms
as coefficient lists b_0..b_d of sum_k b_k xi^{d-k} eta^k.
"""

try:
    from harmonia._core import *  # noqa: F401,F403
    from harmonia import _core as core  # noqa: F401
except ImportError:  # extension on sys.path directly (build-tree layout)
    from _core import *  # noqa: F401,F403
    import _core as core  # noqa: F401

__all__ = [name for name in dir(core) if not name.startswith("_")]
