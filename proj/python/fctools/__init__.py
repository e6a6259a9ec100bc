"""Exact computations with fully commutative elements of the affine
Coxeter types B and D: classification by normal form, rank-raising
tower maps, Hecke and Temperley-Lieb morphism images, and the named
verification suites.

The compiled extension lives next to this file after an installed
build; during in-tree testing it is importable from the build
directory on sys.path.
"""

try:
    from ._fc import *  # noqa: F401,F403
    from ._fc import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree: extension built by the top-level CMake
    from _fc import *  # noqa: F401,F403

__all__ = [
    "System",
    "tower_image",
    "injection_image",
    "hecke_image",
    "tl_image",
    "suite_names",
    "run_suite",
]
