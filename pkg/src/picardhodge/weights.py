"""Weight lattice and Weyl group combinatorics for GL3 x Gm.

Characters of the maximal torus (diagonal matrices times the scalar factor)
are written additively as integer 4-tuples ``(x, y, z, w)`` of exponents in
the standard character basis.  With the upper-triangular Borel the positive
roots are ``e12``, ``e23`` and ``e13``, where ``eij`` carries ``+1`` in slot
``i`` and ``-1`` in slot ``j``; half their sum is ``RHO = (1, 0, -1, 0)``.
The Weyl group is the symmetric group on the first three coordinates; the
fourth coordinate never moves.
"""

from __future__ import annotations

from typing import NamedTuple


class Character(NamedTuple):
    """A torus character, as exponents of the four standard characters."""

    x: int
    y: int
    z: int
    w: int

    def __add__(self, other):
        return Character(self.x + other[0], self.y + other[1],
                         self.z + other[2], self.w + other[3])

    def __sub__(self, other):
        return Character(self.x - other[0], self.y - other[1],
                         self.z - other[2], self.w - other[3])

    def __neg__(self):
        return Character(-self.x, -self.y, -self.z, -self.w)

    def __mul__(self, n):
        return Character(n * self.x, n * self.y, n * self.z, n * self.w)

    __rmul__ = __mul__


def is_dominant(chi) -> bool:
    """True when the first three coordinates are weakly decreasing."""
    return chi[0] >= chi[1] >= chi[2]


def require_dominant(lam) -> Character:
    """Coerce to :class:`Character`, rejecting non-dominant tuples."""
    lam = Character(*lam)
    if not is_dominant(lam):
        raise ValueError(f"highest weight must be dominant (x >= y >= z), got {tuple(lam)}")
    return lam


class WeylElement(NamedTuple):
    """A permutation of the first three coordinates, with its length."""

    name: str
    images: tuple[int, int, int]

    #: number of positive roots mapped to negative roots; see
    #: :func:`root_counting_length` for the defining count.
    length: int

    def apply(self, chi) -> Character:
        """Permute the first three coordinates: slot ``i`` moves to slot
        ``images[i]``, the fourth coordinate stays put."""
        moved = [0, 0, 0]
        for src, dst in enumerate(self.images):
            moved[dst - 1] = chi[src]
        return Character(moved[0], moved[1], moved[2], chi[3])


IDENTITY = WeylElement("e", (1, 2, 3), 0)

#: The six elements, in cycle notation, grouped by length 0, 1, 1, 2, 2, 3.
WEYL_GROUP = (
    IDENTITY,
    WeylElement("(12)", (2, 1, 3), 1),
    WeylElement("(23)", (1, 3, 2), 1),
    WeylElement("(123)", (2, 3, 1), 2),
    WeylElement("(132)", (3, 1, 2), 2),
    WeylElement("(13)", (3, 2, 1), 3),
)

WEYL_BY_NAME = {sigma.name: sigma for sigma in WEYL_GROUP}

_BY_IMAGES = {sigma.images: sigma for sigma in WEYL_GROUP}


def compose(sigma: WeylElement, tau: WeylElement) -> WeylElement:
    """``sigma`` after ``tau``."""
    return _BY_IMAGES[tuple(sigma.images[t - 1] for t in tau.images)]


def inverse(sigma: WeylElement) -> WeylElement:
    inv = [0, 0, 0]
    for src, dst in enumerate(sigma.images):
        inv[dst - 1] = src + 1
    return _BY_IMAGES[tuple(inv)]


def weyl_length(sigma: WeylElement) -> int:
    """Length of ``sigma``: ``0`` for the identity up to ``3`` for (13)."""
    return sigma.length


POSITIVE_ROOTS = (
    Character(1, -1, 0, 0),   # e12
    Character(0, 1, -1, 0),   # e23
    Character(1, 0, -1, 0),   # e13
)

#: Half the sum of the positive roots, which here equals e13.
RHO = Character(1, 0, -1, 0)


def root_counting_length(sigma: WeylElement) -> int:
    """Count the positive roots alpha with ``inverse(sigma)(alpha)`` negative.

    This is the defining formula for the length; the stored
    ``WeylElement.length`` values are a lookup table checked against it once
    at import time.
    """
    inv = inverse(sigma)
    return sum(1 for alpha in POSITIVE_ROOTS if inv.apply(alpha) not in POSITIVE_ROOTS)


def rho_shift(sigma: WeylElement, lam) -> Character:
    """The shifted Weyl action ``sigma(lam + RHO) - RHO``.

    >>> rho_shift(WEYL_BY_NAME["(13)"], (2, 1, 0, 5))
    Character(x=-2, y=1, z=4, w=5)
    """
    return sigma.apply(Character(*lam) + RHO) - RHO


def _check_length_table() -> None:
    for sigma in WEYL_GROUP:
        derived = root_counting_length(sigma)
        if derived != sigma.length:
            raise AssertionError(
                f"length table corrupt at {sigma.name}: stored {sigma.length}, derived {derived}")


_check_length_table()


if __name__ == "__main__":
    import doctest
    doctest.testmod()
