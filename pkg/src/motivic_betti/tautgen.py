"""The minimal generator system for the moduli Chow ring, and its counting.

For degree ``d >= 5`` the cohomology ring of the moduli space of semistable
one-dimensional sheaves carries a minimal generating set of ``3d - 7``
tautological classes: two of degree 1 and three of each degree from 2
through ``d - 2``.  The number ``a_{2i}`` of degree-``i`` monomials in the
free commutative algebra on these generators is the ``z^{2i}`` coefficient
of a product of geometric series, one factor per generator.

In low degrees ``a_{2i}`` agrees with the stable Hilbert-scheme Betti
numbers (that agreement is what makes the set minimal); at ``i = d - 1``
and ``i = d`` it falls short by exactly 3 and 9.  Comparing against the
moduli Betti table then counts the independent relations in each degree:
none through ``d - 1``, and three in degree ``d``.

A brute-force enumeration oracle (no generating functions) double-checks
every monomial count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .hilb import HilbCache
from .series import TruncatedSeries, geometric


@dataclass(frozen=True)
class GeneratorSystem:
    """Degrees of the tautological generators for a given ``d``.

    ``degrees`` maps generator degree to multiplicity: exactly two of
    degree 1 and exactly three of each degree in ``2 .. d-2``, for a total
    of ``3d - 7``.
    """

    d: int
    degrees: Mapping[int, int]

    def __post_init__(self):
        if self.d < 5:
            raise ValueError(f"generator system needs d >= 5, got {self.d}")
        expected = {1: 2, **{j: 3 for j in range(2, self.d - 1)}}
        if dict(self.degrees) != expected:
            raise ValueError("degree multiset does not match the generator set")

    @property
    def count(self) -> int:
        return sum(self.degrees.values())


def generator_system(d: int) -> GeneratorSystem:
    """The generator degree multiset for degree ``d`` (``d >= 5``).

    The classes come in one pair of degree-1 generators plus, for each
    ``k`` in ``3 .. d-1``, a triple of generators of degree ``k - 1``.
    """
    if d < 5:
        raise ValueError(f"generator system needs d >= 5, got {d}")
    degrees = {1: 2}
    for k in range(3, d):
        degrees[k - 1] = 3
    return GeneratorSystem(d, degrees)


def monomial_series(d: int, cap: int) -> TruncatedSeries:
    """Monomial-counting series of the generator system, truncated at ``cap``.

    Product over generators of ``1/(1 - z^{2*degree})``; the coefficient of
    ``z^{2i}`` counts the monomials of weighted degree ``i`` in the free
    commutative monoid on the generators.
    """
    system = generator_system(d)
    acc = TruncatedSeries.one(cap)
    for degree, multiplicity in sorted(system.degrees.items()):
        factor = geometric(2 * degree, cap)
        for _ in range(multiplicity):
            acc = acc * factor
    return acc


def monomial_count_bruteforce(degrees: Mapping[int, int], i: int) -> int:
    """Count monomials of weighted degree ``i`` by explicit enumeration.

    Walks the generators one by one, choosing each exponent outright and
    descending on the remainder; no generating functions anywhere, so this
    is an independent oracle for :func:`monomial_series`.
    """
    if i < 0:
        raise ValueError(f"degree must be >= 0, got {i}")
    flat: list[int] = []
    for degree, multiplicity in sorted(degrees.items()):
        flat.extend([degree] * multiplicity)

    def count(idx: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        if idx == len(flat):
            return 0
        step = flat[idx]
        total = 0
        used = 0
        while used <= remaining:
            total += count(idx + 1, remaining - used)
            used += step
        return total

    return count(0, i)


def a_coeff(d: int, i: int) -> int:
    """``a_{2i}``: the number of degree-``i`` monomials in the generators."""
    if i < 0:
        raise ValueError(f"degree must be >= 0, got {i}")
    return monomial_series(d, 2 * i + 1).coeff(2 * i)


def relation_count(
    d: int, chi: int, i: int, cache: Optional[HilbCache] = None
) -> int:
    """Independent relations among the generators in degree ``i``.

    ``a_{2i}`` minus the moduli Betti number ``b_{2i}``; the Betti table
    stops at ``i = d``, so larger degrees raise rather than guess.
    """
    from .betti import m_betti_table

    if i < 0:
        raise ValueError(f"degree must be >= 0, got {i}")
    if i > d:
        raise ValueError(
            f"relation counts are only available through degree d={d}, got {i}"
        )
    table = m_betti_table(d, chi, cache)
    return a_coeff(d, i) - table.rows[i].b2k
