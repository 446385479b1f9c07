"""Rowmotion avatars, Dyck promotion, matching rotation, AST and orbits."""
from __future__ import annotations

from typing import Callable

from . import bijections as bj
from .core import (
    AntichainA,
    AntichainB,
    DomainError,
    DyckWord,
    NoncrossingMatching,
    Orbit,
    OrderSubset,
    Permutation,
    Tableau,
    contains,
    poset_A,
    require_321_avoiding,
    reverse_complement,
)
from .tableaux import promotion_syt


# ---------------------------------------------------------------------------
# transfer maps on A^(n-1)


def _maximal(n: int, members) -> AntichainA:
    members = set(members)
    return AntichainA(n, [x for x in members if not any(y != x and contains(y, x) for y in members)])


def _minimal(n: int, members) -> AntichainA:
    members = set(members)
    return AntichainA(n, [x for x in members if not any(y != x and contains(x, y) for y in members)])


def up_transfer(ideal: OrderSubset) -> AntichainA:
    """Maximal elements of an order ideal."""
    _require_kind(ideal, "ideal")
    return _maximal(ideal.n, ideal.members)


def up_transfer_inv(a: AntichainA) -> OrderSubset:
    """Order ideal generated by ``a``."""
    return OrderSubset(a.n, [x for x in poset_A(a.n) if any(contains(y, x) for y in a.elements)], "ideal")


def down_transfer(f: OrderSubset) -> AntichainA:
    """Minimal elements of an order filter."""
    _require_kind(f, "filter")
    return _minimal(f.n, f.members)


def down_transfer_inv(a: AntichainA) -> OrderSubset:
    return OrderSubset(a.n, [x for x in poset_A(a.n) if any(contains(x, y) for y in a.elements)], "filter")


def complement(s: OrderSubset) -> OrderSubset:
    flipped = "filter" if s.kind == "ideal" else "ideal"
    inside = set(s.members)
    return OrderSubset(s.n, [x for x in poset_A(s.n) if x not in inside], flipped)


def _require_kind(s: OrderSubset, kind: str) -> None:
    if s.kind != kind:
        raise DomainError(f"expected an order {kind}, got an order {s.kind}")


# ---------------------------------------------------------------------------
# rowmotion


def rowmotion_A_poset(a: AntichainA) -> AntichainA:
    """Minimal elements of the complement of the ideal generated by ``a``."""
    return down_transfer(complement(up_transfer_inv(a)))


def rowmotion_A(a: AntichainA, cross_check: bool = False) -> AntichainA:
    out = bj.ant_map(bj.path_map(a))
    if cross_check and out != rowmotion_A_poset(a):
        raise AssertionError(f"rowmotion implementations disagree on {a}")
    return out


def rowmotion_A_inv(a: AntichainA) -> AntichainA:
    """Maximal elements of the complement of the filter generated by ``a``."""
    return up_transfer(complement(down_transfer_inv(a)))


def rowmotion_I(ideal: OrderSubset) -> OrderSubset:
    _require_kind(ideal, "ideal")
    return up_transfer_inv(down_transfer(complement(ideal)))


def rowmotion_F(f: OrderSubset) -> OrderSubset:
    _require_kind(f, "filter")
    return complement(up_transfer_inv(down_transfer(f)))


def rowmotion_D(d: DyckWord) -> DyckWord:
    return bj.path_map(bj.ant_map(d))


def rowmotion_D_inv(d: DyckWord) -> DyckWord:
    return bj.ant_inv(bj.path_inv(d))


def rowmotion_S_antichain(p: Permutation) -> Permutation:
    require_321_avoiding(p)
    return bj.exc_inv(rowmotion_A(bj.exc_map(p)))


def rowmotion_S(p: Permutation, cross_check: bool = False) -> Permutation:
    """Rowmotion on 321-avoiders, computed as E_v^-1 . E_p."""
    out = bj.e_v_inv(bj.e_p(p))
    if cross_check and out != rowmotion_S_antichain(p):
        raise AssertionError(f"rowmotion implementations disagree on {p}")
    return out


def rowmotion_S_inv(p: Permutation) -> Permutation:
    return bj.e_p_inv(bj.e_v(p))


# ---------------------------------------------------------------------------
# promotion and rotation


def _first_return(steps: str) -> int:
    height = 0
    for x, s in enumerate(steps):
        height += 1 if s == "U" else -1
        if height == 0:
            return x
    raise DomainError(f"{steps!r} never returns to the axis")


def promotion_dyck(d: DyckWord) -> DyckWord:
    """U A D B  ->  A U B D."""
    k = _first_return(d.steps)
    inner, rest = d.steps[1:k], d.steps[k + 1:]
    return DyckWord(inner + "U" + rest + "D")


def promotion_dyck_inv(d: DyckWord) -> DyckWord:
    body = d.steps[:-1]
    # the single unmatched U of A U B separates A from B
    stack: list[int] = []
    for x, s in enumerate(body):
        if s == "U":
            stack.append(x)
        elif stack:
            stack.pop()
    k = stack[0]
    return DyckWord("U" + body[:k] + "D" + body[k + 1:])


def rotate(m: NoncrossingMatching, k: int = 1) -> NoncrossingMatching:
    size = 2 * m.n
    return NoncrossingMatching(m.n, [((x - 1 + k) % size + 1, (y - 1 + k) % size + 1) for x, y in m.arcs])


def is_centrally_symmetric(m: NoncrossingMatching) -> bool:
    return rotate(m, m.n) == m


# ---------------------------------------------------------------------------
# Armstrong-Stump-Thomas


def _nearest(start: int, step: int, size: int, taken: list[bool]) -> int:
    v = start
    for _ in range(size - 1):
        v = (v - 1 + step) % size + 1
        if not taken[v]:
            return v
    raise DomainError("no unmatched vertex left")


def ast_steps(a: AntichainA) -> list[tuple[int, int]]:
    """Arcs of the AST matching in the order the greedy rule adds them.

    Step i starts at j+1 when [i, j] is in ``a`` and scans counterclockwise
    (decreasing labels); otherwise it starts at 2n+1-i and scans clockwise
    (increasing labels).  Both scans wrap around between 1 and 2n.
    """
    n = a.n
    size = 2 * n
    taken = [False] * (size + 1)
    right_end = {i: j for i, j in a.elements}
    arcs = []
    for i in range(1, n + 1):
        if i in right_end:
            v, direction = right_end[i] + 1, -1
        else:
            v, direction = size + 1 - i, +1
        if taken[v]:
            raise DomainError(f"vertex {v} already matched while processing {a}")
        w = _nearest(v, direction, size, taken)
        taken[v] = taken[w] = True
        arcs.append((v, w))
    return arcs


def ast(a: AntichainA) -> NoncrossingMatching:
    return NoncrossingMatching(a.n, ast_steps(a))


def ast_b(a: AntichainB) -> NoncrossingMatching:
    return ast(bj.hat(a))


def bottoms(m: NoncrossingMatching) -> frozenset[int]:
    """Lower endpoint of each arc: y when x+y <= 2n+1, else x."""
    return frozenset(y if x + y <= 2 * m.n + 1 else x for x, y in m.arcs)


def matching_from_bottoms(b, n: int) -> NoncrossingMatching:
    """Rebuild the unique noncrossing matching with bottom set ``b``.

    Left-half bottoms ī take label i; the other labels go to the right-half
    bottoms in increasing order.  Each bottom in label order is then joined to
    the nearest unmatched vertex weakly above it.
    """
    b = sorted(set(b))
    size = 2 * n
    if len(b) != n or any(not 1 <= v <= size for v in b):
        raise DomainError(f"{b} is not a set of {n} vertices of 1..{size}")
    labels: dict[int, int] = {}
    for v in b:
        if v > n:
            labels[size + 1 - v] = v
    free = iter(i for i in range(1, n + 1) if i not in labels)
    for v in b:
        if v <= n:
            labels[next(free)] = v
    taken = [False] * (size + 1)
    arcs = []
    for i in range(1, n + 1):
        v = labels[i]
        if taken[v]:
            raise DomainError(f"bottom {v} was used as a top")
        level = v if v <= n else size + 1 - v
        # vertices weakly above v: 1..level on the right, its mirror images on the left
        if v > n:
            candidates = [*range(v + 1, size + 1), *range(1, level + 1)]
        else:
            candidates = [*range(v - 1, 0, -1), *range(size, size - level, -1)]
        w = next((c for c in candidates if not taken[c]), None)
        if w is None:
            raise DomainError(f"bottom set {b} admits no matching")
        taken[v] = taken[w] = True
        arcs.append((v, w))
    try:
        return NoncrossingMatching(n, arcs)
    except DomainError as exc:
        raise DomainError(f"bottom set {b} admits no matching") from exc


# ---------------------------------------------------------------------------
# orbits

DYNAMICS: dict[str, tuple[type, Callable]] = {
    "rs": (Permutation, rowmotion_S),
    "rs_inv": (Permutation, rowmotion_S_inv),
    "ra": (AntichainA, rowmotion_A),
    "ra_inv": (AntichainA, rowmotion_A_inv),
    "ri": (OrderSubset, rowmotion_I),
    "rf": (OrderSubset, rowmotion_F),
    "rd": (DyckWord, rowmotion_D),
    "rd_inv": (DyckWord, rowmotion_D_inv),
    "pro": (DyckWord, promotion_dyck),
    "pro_inv": (DyckWord, promotion_dyck_inv),
    "pro_syt": (Tableau, promotion_syt),
    "rot": (NoncrossingMatching, rotate),
    "lk": (DyckWord, bj.lk),
    "lka": (AntichainA, bj.lka),
    "lks": (Permutation, bj.lks),
    "rc": (Permutation, reverse_complement),
}

DEFAULT_ORBIT_CAP = 10_000


def orbit_of(x, dynamic: str | Callable, cap: int = DEFAULT_ORBIT_CAP) -> Orbit:
    """Iterate until the first return to ``x``; elements start at ``x``."""
    if isinstance(dynamic, str):
        try:
            kind, f = DYNAMICS[dynamic]
        except KeyError:
            raise DomainError(f"unknown dynamic {dynamic!r}") from None
        if not isinstance(x, kind):
            raise DomainError(f"dynamic {dynamic!r} acts on {kind.__name__}, got {type(x).__name__}")
    else:
        f = dynamic
    elements = [x]
    y = f(x)
    while y != x:
        elements.append(y)
        if len(elements) > cap:
            raise RuntimeError(f"no return to the start within {cap} steps; the map is not a bijection here")
        y = f(y)
    return Orbit(tuple(elements), min(elements), len(elements))


def orbits(domain, dynamic: str | Callable) -> list[Orbit]:
    """Partition ``domain`` into orbits, sorted by representative."""
    seen = set()
    found = []
    for x in domain:
        if x in seen:
            continue
        orb = orbit_of(x, dynamic)
        seen.update(orb.elements)
        found.append(orb)
    found.sort(key=lambda o: o.representative)
    return found
