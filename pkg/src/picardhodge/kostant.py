"""Boundary cohomology of an irreducible representation, degree by degree.

For the Borel of GL3 x Gm, the degree-``k`` Lie algebra cohomology of the
unipotent radical acting on the irreducible module of highest weight ``lam``
is a direct sum of one-dimensional torus characters: one summand
``rho_shift(sigma, lam)`` for each Weyl element ``sigma`` of length ``k``.
Since no element has length above 3, every degree from 4 on vanishes.
"""

from __future__ import annotations

from typing import NamedTuple

from .weights import WEYL_GROUP, Character, require_dominant, rho_shift


class KostantLayer(NamedTuple):
    """All cohomology characters in one degree."""

    degree: int
    characters: tuple[Character, ...]


def kostant_cohomology(lam, k: int) -> list[Character]:
    """Characters of the degree-``k`` cohomology at highest weight ``lam``.

    Sorted lexicographically so output is reproducible.  Empty for ``k >= 4``
    (vanishing, not an error); raises ``ValueError`` for a non-dominant
    ``lam`` or a negative ``k``.

    >>> kostant_cohomology((1, 0, 0, 0), 1)
    [Character(x=-1, y=2, z=0, w=0), Character(x=1, y=-1, z=1, w=0)]
    """
    lam = require_dominant(lam)
    if k < 0:
        raise ValueError(f"cohomological degree must be >= 0, got {k}")
    return sorted(rho_shift(sigma, lam) for sigma in WEYL_GROUP if sigma.length == k)


def kostant_table(lam) -> list[KostantLayer]:
    """The four nonvanishing layers, degrees 0 through 3."""
    return [KostantLayer(k, tuple(kostant_cohomology(lam, k))) for k in range(4)]


if __name__ == "__main__":
    import doctest
    doctest.testmod()
