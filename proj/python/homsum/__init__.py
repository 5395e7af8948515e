"""Exact (co)homology calculator for bundles pulled back over connected sums.

Conventions at the boundary:
  * a finitely generated abelian group is a ``(rank, [d1, d2, ...])`` tuple
    with the torsion coefficients in invariant-factor order,
  * a graded group is a ``{degree: group}`` dict with trivial degrees omitted,
  * matrices are lists of rows of (arbitrarily large) ints.
"""

from homsum._core import (
    __version__,
    canonical_form,
    chain_homology,
    check_poincare,
    cohomology,
    cokernel,
    gysin,
    homology,
    pullback,
    smith_normal_form,
    verify_split,
    wall,
)

__all__ = [
    "__version__",
    "canonical_form",
    "chain_homology",
    "check_poincare",
    "cohomology",
    "cokernel",
    "gysin",
    "homology",
    "pullback",
    "smith_normal_form",
    "verify_split",
    "wall",
]
