"""Permutation and antichain statistics, exact homomesy reports, fixed-point counts."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import bijections as bj
from .core import (
    AntichainA,
    DomainError,
    Permutation,
    enumerate_antichains,
    enumerate_antichains_B,
    enumerate_avoiders,
    is_321_avoiding,
    reverse_complement,
)
from .dynamics import DYNAMICS, orbits, rowmotion_A

DEFAULT_MAX_N = 10


def inversions(p: Permutation) -> int:
    im = p.images
    return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])


def inversions_from_weak_excedances(p: Permutation) -> int:
    """inv = sum of (value - position) over weak excedances; valid for 321-avoiders only."""
    return sum(j - i for i, j in p.weak_excedances())


def _inv_checked(p: Permutation) -> int:
    inv = inversions(p)
    if is_321_avoiding(p) and inv != inversions_from_weak_excedances(p):
        raise AssertionError(f"inversion formulas disagree on {p}")
    return inv


_PERM_STATS: dict[str, Callable[[Permutation], int]] = {
    "fp": lambda p: sum(1 for i, v in enumerate(p.images, start=1) if v == i),
    "exc": lambda p: sum(1 for i, v in enumerate(p.images, start=1) if v > i),
    "wexc": lambda p: sum(1 for i, v in enumerate(p.images, start=1) if v >= i),
    "inv": _inv_checked,
    "sgn": lambda p: -1 if _inv_checked(p) % 2 else 1,
}


def perm_stat(name: str, p: Permutation) -> Fraction:
    try:
        f = _PERM_STATS[name]
    except KeyError:
        raise DomainError(f"unknown permutation statistic {name!r}") from None
    return Fraction(f(p))


def _check_index(i: int, lo: int, hi: int, what: str) -> None:
    if not lo <= i <= hi:
        raise DomainError(f"{what} index {i} outside {lo}..{hi}")


def h_perm(i: int, p: Permutation) -> Fraction:
    _check_index(i, 1, p.n - 1, "h")
    inv = p.inverse()
    return Fraction(int(inv(i + 1) < i + 1) + int(p(i) > i))


def l_perm(i: int, p: Permutation) -> Fraction:
    _check_index(i, 1, p.n, "l")
    inv = p.inverse()
    return Fraction(int(inv(i) <= i) + int(p(i) > i))


def h_antichain(i: int, a: AntichainA) -> Fraction:
    n = a.n
    _check_index(i, 1, n - 1, "h")
    els = set(a.elements)
    total = sum(1 for j in range(1, i + 1) if (j, i) in els)
    total += sum(1 for j in range(i, n) if (i, j) in els)
    return Fraction(total)


def fp_antichain(a: AntichainA) -> Fraction:
    """Fixed points of the rowmotion preimage, read off the antichain's rank-0 elements."""
    n = a.n
    if n == 1:
        # the indicator sum is empty; the unique permutation of size 1 has one fixed point
        return Fraction(1)
    one = [0] + [int((k, k) in a) for k in range(1, n)]
    total = one[1] + one[n - 1]
    total += sum(min(one[k], one[k + 1]) for k in range(1, n - 1))
    return Fraction(total)


def l_antichain(i: int, a: AntichainA) -> Fraction:
    n = a.n
    _check_index(i, 2, n - 1, "l")
    els = set(a.elements)
    total = sum(1 for j in range(1, i) if (j, i) in els)
    total += sum(1 for j in range(i, n) if (i - 1, j) in els)
    total += max(int((i - 1, i - 1) in els), int((i, i) in els))
    return Fraction(total)


# ---------------------------------------------------------------------------
# statistic registry, keyed by (name, object type)

_INDEXED = re.compile(r"^([hl])(\d+)$")


def resolve_statistic(name: str, kind: type) -> Callable[[object], Fraction]:
    """Look up a statistic for objects of ``kind``; incompatible pairs fail here."""
    if kind is Permutation:
        if name in _PERM_STATS:
            return lambda p: perm_stat(name, p)
        m = _INDEXED.match(name)
        if m:
            i = int(m.group(2))
            return (lambda p: h_perm(i, p)) if m.group(1) == "h" else (lambda p: l_perm(i, p))
    if kind is AntichainA:
        if name == "card":
            return lambda a: Fraction(len(a))
        m = _INDEXED.match(name)
        if m and m.group(1) == "h":
            i = int(m.group(2))
            return lambda a: h_antichain(i, a)
    raise DomainError(f"statistic {name!r} is not defined on {kind.__name__}")


@dataclass(frozen=True)
class OrbitSummary:
    representative: object
    size: int
    sum: Fraction
    average: Fraction


@dataclass(frozen=True)
class HomomesyReport:
    statistic: str
    dynamic: str
    n: int
    orbits: tuple[OrbitSummary, ...]
    homomesic: bool
    c: Fraction | None

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    def to_dict(self) -> dict:
        from .core import dump

        def frac(x: Fraction) -> list[int]:
            return [x.numerator, x.denominator]

        def scalar(x: Fraction):
            return x.numerator if x.denominator == 1 else frac(x)

        return {
            "statistic": self.statistic,
            "dynamic": self.dynamic,
            "n": self.n,
            "orbits": [
                {"rep": dump(o.representative), "size": o.size, "sum": scalar(o.sum), "avg": frac(o.average)}
                for o in self.orbits
            ],
            "homomesic": self.homomesic,
            "c": frac(self.c) if self.c is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def domain_for(kind: type, n: int):
    if kind is Permutation:
        return enumerate_avoiders(n)
    if kind is AntichainA:
        return enumerate_antichains(n)
    from .core import enumerate_dyck

    return enumerate_dyck(n)


def homomesy_report(stat: str, dynamic: str, n: int, max_n: int = DEFAULT_MAX_N) -> HomomesyReport:
    if n > max_n:
        raise DomainError(f"n={n} exceeds the size cap {max_n}")
    try:
        kind, f = DYNAMICS[dynamic]
    except KeyError:
        raise DomainError(f"unknown dynamic {dynamic!r}") from None
    g = resolve_statistic(stat, kind)
    summaries = []
    for orb in orbits(domain_for(kind, n), f):
        total = sum((g(x) for x in orb.elements), Fraction(0))
        summaries.append(OrbitSummary(orb.representative, orb.size, total, total / orb.size))
    averages = {s.average for s in summaries}
    homomesic = len(averages) == 1
    return HomomesyReport(stat, dynamic, n, tuple(summaries), homomesic,
                          next(iter(averages)) if homomesic else None)


# ---------------------------------------------------------------------------
# fixed points of LKA . rowmotion


def count_fixed_lka_ra(n: int) -> int:
    return sum(1 for a in enumerate_antichains(n) if bj.lka(rowmotion_A(a)) == a)


def count_321_involutions(n: int) -> int:
    return sum(1 for p in enumerate_avoiders(n) if p.is_involution())


def count_fixed_lka_ra_B(m: int) -> int:
    count = 0
    for a in enumerate_antichains_B(m):
        full = bj.hat(a)
        if bj.lka(rowmotion_A(full)) == full:
            count += 1
    return count


def count_123_involutions_rc_fixed(m: int) -> int:
    """123-avoiding involutions of size 2m fixed by reverse-complement, reached by reversing 321-avoiders."""
    count = 0
    for p in enumerate_avoiders(2 * m):
        q = Permutation(p.images[::-1])
        if q.is_involution() and reverse_complement(q) == q:
            count += 1
    return count


def central_binomial(n: int) -> int:
    return comb(n, n // 2)
