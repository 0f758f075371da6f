"""Poincare polynomials of Hilbert schemes of points on the plane.

Goettsche's formula packages the Betti numbers of all the punctual Hilbert
schemes ``Hilb^n(P^2)`` into one product of geometric series,

    prod_{k >= 1} (1 - z^{2k-2} t^k)^{-1} (1 - z^{2k} t^k)^{-1}
                  (1 - z^{2k+2} t^k)^{-1},

where the coefficient of ``z^i t^n`` is ``b_i(Hilb^n)``.  Odd-degree Betti
numbers vanish and each ``Hilb^n`` is smooth projective of dimension
``2n``, so the ``t^n`` row is a palindromic polynomial of degree ``4n``.

The low half of each row stabilizes: ``b_{2s}(Hilb^n)`` is independent of
``n`` once ``2s <= n``, and the stable values are generated by

    R(z) = 1/(1 - z^2)^2 * prod_{m >= 2} 1/(1 - z^{2m})^3.

Two independent cross-checks live here as well: an Euler-number oracle
that counts three-colored partitions by direct recursion (the ``z -> 1``
specialization of the product is ``prod (1 - t^k)^{-3}``), and a disk
cache with bit-exact round-trips so the quadratically-growing rows are
computed once.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional, Union

from .series import BivariateSeries, IntPoly, TruncatedSeries, geometric

CACHE_FORMAT_VERSION = 1
GENERATOR_TAG = "goettsche-p2-triple-product"


@dataclass(frozen=True)
class HilbPoincare:
    """Poincare polynomial of ``Hilb^n(P^2)`` in the variable ``z``.

    Validated on construction: unit constant term, vanishing odd part,
    palindromic coefficients, degree exactly ``4n`` for ``n >= 1``.
    """

    n: int
    poly: IntPoly

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        c = self.poly.coeffs
        if self.n == 0:
            if c != (1,):
                raise ValueError("Hilb^0 is a point; its polynomial is 1")
            return
        if self.poly.degree != 4 * self.n:
            raise ValueError(
                f"degree {self.poly.degree} != 4n = {4 * self.n}"
            )
        if c[0] != 1:
            raise ValueError(f"constant term must be 1, got {c[0]}")
        if any(c[i] for i in range(1, len(c), 2)):
            raise ValueError("odd-degree Betti numbers must vanish")
        if any(c[i] != c[4 * self.n - i] for i in range(len(c))):
            raise ValueError("coefficients must be palindromic")

    def betti(self, i: int) -> int:
        """``b_i(Hilb^n)``; zero for odd or out-of-range ``i``."""
        return self.poly[i]

    def euler(self) -> int:
        return self.poly.evaluate(1)


class HilbCache:
    """Memory plus optional on-disk store of :class:`HilbPoincare` rows.

    One JSON file per ``n`` (``hilb_<n>.json``) holding the coefficient
    vector as decimal strings, so no integer width is ever a concern.
    Writes go to a temp file in the same directory and are renamed into
    place; concurrent readers never observe a torn file.
    """

    def __init__(self, directory: Union[str, Path, None] = None):
        self.directory = Path(directory) if directory is not None else None
        self._memory: dict[int, HilbPoincare] = {}

    def path_for(self, n: int) -> Optional[Path]:
        if self.directory is None:
            return None
        return self.directory / f"hilb_{n}.json"

    def get(self, n: int) -> Optional[HilbPoincare]:
        hit = self._memory.get(n)
        if hit is not None:
            return hit
        path = self.path_for(n)
        if path is None or not path.exists():
            return None
        hp = _decode_cache_file(path.read_text(encoding="utf-8"), n)
        self._memory[n] = hp
        return hp

    def put(self, hp: HilbPoincare) -> None:
        self._memory[hp.n] = hp
        path = self.path_for(hp.n)
        if path is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = encode_cache_entry(hp)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def encode_cache_entry(hp: HilbPoincare) -> str:
    obj = {
        "n": hp.n,
        "coeffs": [str(c) for c in hp.poly.coeffs],
        "generator": GENERATOR_TAG,
        "version": CACHE_FORMAT_VERSION,
    }
    return json.dumps(obj, indent=2) + "\n"


def _decode_cache_file(text: str, expected_n: int) -> HilbPoincare:
    obj = json.loads(text)
    if obj.get("version") != CACHE_FORMAT_VERSION:
        raise ValueError(f"unsupported cache version {obj.get('version')!r}")
    if obj.get("n") != expected_n:
        raise ValueError(f"cache file claims n={obj.get('n')!r}, expected {expected_n}")
    coeffs = [int(c) for c in obj["coeffs"]]
    return HilbPoincare(expected_n, IntPoly(coeffs))


def _product_rows(tcap: int, zcap: int) -> list[list[int]]:
    """Rows of the triple product, as mutable coefficient lists.

    Multiplying a series by ``(1 - z^a t^k)^{-1}`` is the row recurrence
    ``row[m] += z^a * row[m-k]`` taken in increasing ``m``, which costs one
    shifted addition per row instead of a full convolution.
    """
    rows = [[0] * zcap for _ in range(tcap)]
    if zcap > 0:
        rows[0][0] = 1
    for k in range(1, tcap):
        for a in (2 * k - 2, 2 * k, 2 * k + 2):
            for m in range(k, tcap):
                src = rows[m - k]
                dst = rows[m]
                for j in range(zcap - a):
                    c = src[j]
                    if c:
                        dst[j + a] += c
    return rows


def goettsche_bivariate(tcap: int, zcap: int) -> BivariateSeries:
    """The triple product expanded below the caps.

    Only factors with ``k < tcap`` are multiplied: the ``k``-th factor is
    congruent to 1 modulo ``t^k``, so the rest cannot touch the window.
    """
    if tcap < 1 or zcap < 1:
        raise ValueError(f"caps must be >= 1, got ({tcap}, {zcap})")
    rows = _product_rows(tcap, zcap)
    return BivariateSeries(
        {m: IntPoly(row) for m, row in enumerate(rows)}, tcap, zcap
    )


def hilb_poincare(n: int, cache: Optional[HilbCache] = None) -> HilbPoincare:
    """Poincare polynomial of ``Hilb^n(P^2)``, from the ``t^n`` row.

    The row is extracted with ``zcap = 4n + 1``, i.e. the complete
    polynomial; since the odd Betti numbers vanish, the signed coefficient
    sum in the product equals the Poincare polynomial itself.  One product
    expansion yields every row ``m <= n``, so all of them are cached.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if cache is not None:
        hit = cache.get(n)
        if hit is not None:
            return hit
    rows = _product_rows(n + 1, 4 * n + 1)
    result: Optional[HilbPoincare] = None
    for m in range(n + 1):
        hp = HilbPoincare(m, IntPoly(rows[m]))
        if cache is not None and cache.get(m) is None:
            cache.put(hp)
        if m == n:
            result = hp
    assert result is not None
    return result


def stable_series(cap: int) -> TruncatedSeries:
    """Generating series of the stable Betti numbers, truncated at ``cap``.

    ``R(z) = 1/(1-z^2)^2 * prod_{m >= 2} 1/(1-z^{2m})^3``; factors with
    ``2m >= cap`` are identically 1 below the cap, so the product is
    finite and exact.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    acc = geometric(2, cap) * geometric(2, cap)
    m = 2
    while 2 * m < cap:
        g = geometric(2 * m, cap)
        acc = acc * g * g * g
        m += 1
    return acc


def stable_betti(s: int) -> int:
    """The stable value of ``b_{2s}(Hilb^n)``, valid whenever ``2s <= n``."""
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    return stable_series(2 * s + 1).coeff(2 * s)


@lru_cache(maxsize=None)
def _colored_bounded(total: int, largest: int) -> int:
    """Three-colored partitions of ``total`` into parts of size <= ``largest``.

    A part size used ``m`` times contributes a size-``m`` multiset of the
    three colors, of which there are ``(m+2 choose 2)``.
    """
    if total == 0:
        return 1
    if largest == 0:
        return 0
    count = 0
    m = 0
    while m * largest <= total:
        multisets = (m + 2) * (m + 1) // 2
        count += multisets * _colored_bounded(total - m * largest, largest - 1)
        m += 1
    return count


def colored_partition_euler(n: int) -> int:
    """Euler number of ``Hilb^n(P^2)`` by counting three-colored partitions.

    Direct recursion over part sizes; deliberately shares no code with the
    product expansion so the two routes check each other.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _colored_bounded(n, n)
