"""Exact weight-multiset arithmetic for GL3 x Gm modules.

A weight multiset maps each torus character to a positive integer
multiplicity; its total mass is the dimension of the module it describes.
Everything is exact: multiplicities are plain Python integers, so even the
conservation check against ``comb(24, 12)`` costs nothing special.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .weights import Character, is_dominant, require_dominant

WeightMultiset = dict[Character, int]


class NotACharacterError(ValueError):
    """The multiset is not the character of any GL3 x Gm module."""


def irrep_dimension(lam) -> int:
    """Dimension of the irreducible module with highest weight ``lam``:
    ``(a-b+1)(b-c+1)(a-c+2)/2`` in rank 3.

    >>> irrep_dimension((1, 0, 0, 0))
    3
    >>> irrep_dimension((1, 0, -1, 0))
    8
    """
    a, b, c, _ = require_dominant(lam)
    return (a - b + 1) * (b - c + 1) * (a - c + 2) // 2


@lru_cache(maxsize=None)
def _irrep_weights(lam: Character) -> tuple[tuple[Character, int], ...]:
    # Gelfand-Tsetlin enumeration after shifting (a, b, c) to a partition;
    # the fourth coordinate rides along unchanged.
    a, b, c, d = lam
    shift = max(0, -c)
    top1, top2, top3 = a + shift, b + shift, c + shift
    counts: dict[Character, int] = {}
    for m12 in range(top2, top1 + 1):
        for m22 in range(top3, top2 + 1):
            for m11 in range(m22, m12 + 1):
                chi = Character(
                    m11 - shift,
                    m12 + m22 - m11 - shift,
                    top1 + top2 + top3 - m12 - m22 - shift,
                    d,
                )
                counts[chi] = counts.get(chi, 0) + 1
    return tuple(sorted(counts.items()))


def irrep_character(lam) -> WeightMultiset:
    """Weight multiset of the irreducible module with highest weight ``lam``.

    The highest weight itself appears with multiplicity 1 and the total mass
    equals :func:`irrep_dimension`.

    >>> irrep_character((1, 0, 0, 2)) == {
    ...     Character(1, 0, 0, 2): 1,
    ...     Character(0, 1, 0, 2): 1,
    ...     Character(0, 0, 1, 2): 1,
    ... }
    True
    """
    return dict(_irrep_weights(require_dominant(lam)))


#: Torus weights of the degree-one cohomology of one abelian threefold fiber,
#: i.e. of F(0,0,-1,0) + F(1,0,0,-1); six weights, each of multiplicity one.
H1_WEIGHTS = (
    Character(-1, 0, 0, 0),
    Character(0, -1, 0, 0),
    Character(0, 0, -1, 0),
    Character(1, 0, 0, -1),
    Character(0, 1, 0, -1),
    Character(0, 0, 1, -1),
)


def exterior_power_weights(r: int, p: int) -> WeightMultiset:
    """Weight multiset of the ``p``-th exterior power of ``r`` copies of the
    rank-6 package ``F(0,0,-1,0) + F(1,0,0,-1)``.

    Computed by capacity-bounded DP over the six distinct weights in
    :data:`H1_WEIGHTS`, each available ``r`` times: the mass at
    ``sum(k_i * w_i)`` accumulates ``prod(comb(r, k_i))`` over all choices
    with ``sum(k_i) = p``.  Never enumerates the ``comb(6r, p)`` subsets.
    Empty when ``p`` is negative or exceeds ``6r``.
    """
    if r < 0:
        raise ValueError(f"need a nonnegative number of copies, got r={r}")
    if p < 0 or p > 6 * r:
        return {}
    layers: list[dict[Character, int]] = [{Character(0, 0, 0, 0): 1}]
    layers += [{} for _ in range(p)]
    for wgt in H1_WEIGHTS:
        nxt: list[dict[Character, int]] = [{} for _ in range(p + 1)]
        for taken, layer in enumerate(layers):
            for k in range(min(r, p - taken) + 1):
                factor = comb(r, k)
                step = wgt * k
                bucket = nxt[taken + k]
                for chi, mass in layer.items():
                    key = chi + step
                    bucket[key] = bucket.get(key, 0) + mass * factor
        layers = nxt
    return layers[p]


def decompose(multiset) -> list[tuple[Character, int]]:
    """Write a weight multiset as a sum of irreducible characters.

    Greedy peeling: repeatedly take the lexicographically greatest dominant
    weight still present, record it with its current multiplicity, and
    subtract that many copies of its irreducible character.  Returns
    ``(highest weight, multiplicity)`` pairs in decreasing lexicographic
    order; summing ``mult * irrep_character(lam)`` over them reconstructs the
    input exactly.  Raises :class:`NotACharacterError` when the input is not
    an actual character (a subtraction would go negative, or weights remain
    but none is dominant).

    >>> decompose({Character(0, 0, 0, 4): 7})
    [(Character(x=0, y=0, z=0, w=4), 7)]
    """
    remaining: dict[Character, int] = {}
    for chi, mult in multiset.items():
        if mult < 0:
            raise NotACharacterError(f"negative multiplicity {mult} at {tuple(chi)}")
        if mult:
            remaining[Character(*chi)] = mult
    terms: list[tuple[Character, int]] = []
    while remaining:
        lam = max((chi for chi in remaining if is_dominant(chi)), default=None)
        if lam is None:
            raise NotACharacterError("nonempty multiset with no dominant weight")
        mult = remaining[lam]
        terms.append((lam, mult))
        for chi, count in _irrep_weights(lam):
            left = remaining.get(chi, 0) - mult * count
            if left < 0:
                raise NotACharacterError(
                    f"multiplicity of {tuple(chi)} drops below zero while peeling {tuple(lam)}")
            if left:
                remaining[chi] = left
            else:
                remaining.pop(chi, None)
    return terms


@lru_cache(maxsize=None)
def _exterior_terms(r: int, p: int) -> tuple[tuple[Character, int], ...]:
    return tuple(decompose(exterior_power_weights(r, p)))


def exterior_decomposition(r: int, p: int) -> list[tuple[Character, int]]:
    """Cached irreducible decomposition of :func:`exterior_power_weights`."""
    return list(_exterior_terms(r, p))


def exterior_dual(lam, r: int) -> Character:
    """The pairing ``(a, b, c, d) -> (-c, -b, -a, -3r - d)``, a bijection
    between the supports of the ``p``-th and ``(6r - p)``-th exterior powers
    that preserves multiplicities."""
    a, b, c, d = lam
    return Character(-c, -b, -a, -3 * r - d)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
