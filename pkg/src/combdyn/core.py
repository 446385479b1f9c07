"""Domain types, validation, enumerators and word-level Dyck path helpers.

Every value here is an immutable, hashable dataclass.  Each type is totally
ordered by its serialization order so that orbit representatives are
deterministic.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

Interval = tuple[int, int]
Vertex = int

TUNNEL_KINDS = ("left", "right", "centered", "left-across", "right-across")


class DomainError(ValueError):
    """An object violates an invariant, or an operation's precondition fails."""


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise DomainError("permutation must have size n >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"images {images} are not a bijection on 1..{len(images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse space-separated images ("2 4 1 3"); a bare digit string is accepted for n <= 9."""
        text = text.strip()
        tokens = text.split()
        if len(tokens) == 1 and len(text) > 1 and text.isdigit():
            tokens = list(text)
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"cannot parse permutation from {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def compact(self) -> str:
        """Concatenated one-line notation (only unambiguous for n <= 9)."""
        return "".join(map(str, self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_involution(self) -> bool:
        return self.inverse() == self

    def is_321_avoiding(self) -> bool:
        return is_321_avoiding(self)

    def excedances(self) -> list[tuple[int, int]]:
        return [(i, v) for i, v in enumerate(self.images, start=1) if v > i]

    def weak_excedances(self) -> list[tuple[int, int]]:
        return [(i, v) for i, v in enumerate(self.images, start=1) if v >= i]


def is_321_avoiding(p: Permutation) -> bool:
    """True iff ``p`` has no decreasing subsequence of length 3.

    Linear scan: ``p`` avoids 321 exactly when the entries that are not
    left-to-right maxima form an increasing sequence.
    """
    current_max = 0
    last_small = 0
    for v in p.images:
        if v > current_max:
            current_max = v
        elif v < last_small:
            return False
        else:
            last_small = v
    return True


def require_321_avoiding(p: Permutation) -> None:
    if not is_321_avoiding(p):
        raise DomainError(f"permutation {p} is not 321-avoiding")


def reverse_complement(p: Permutation) -> Permutation:
    n = p.n
    return Permutation(tuple(n + 1 - p(n + 1 - i) for i in range(1, n + 1)))


def enumerate_avoiders(n: int) -> Iterator[Permutation]:
    """All 321-avoiding permutations of size n, in lexicographic order."""
    if n < 1:
        raise DomainError("enumerate_avoiders requires n >= 1")
    prefix: list[int] = []
    used = [False] * (n + 2)

    def completable(current_max: int, last_small: int) -> bool:
        # the smallest unused value must not be stranded below last_small
        for v in range(1, n + 1):
            if not used[v]:
                return v > current_max or v > last_small
        return True

    def extend(current_max: int, last_small: int) -> Iterator[Permutation]:
        if len(prefix) == n:
            yield Permutation(tuple(prefix))
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if v > current_max:
                state = (v, last_small)
            elif v > last_small:
                state = (current_max, v)
            else:
                continue
            used[v] = True
            prefix.append(v)
            if completable(*state):
                yield from extend(*state)
            prefix.pop()
            used[v] = False

    yield from extend(0, 0)


# ---------------------------------------------------------------------------
# Dyck words


@dataclass(frozen=True, order=True)
class DyckWord:
    """A balanced U/D word; ordering is plain string order of ``steps``."""

    steps: str

    def __post_init__(self):
        steps = self.steps
        if not isinstance(steps, str):
            steps = "".join(steps)
            object.__setattr__(self, "steps", steps)
        if not steps:
            raise DomainError("Dyck word must have semilength n >= 1")
        height = 0
        for s in steps:
            if s == "U":
                height += 1
            elif s == "D":
                height -= 1
            else:
                raise DomainError(f"invalid step {s!r} in {steps!r}")
            if height < 0:
                raise DomainError(f"{steps!r} goes below the axis")
        if height != 0:
            raise DomainError(f"{steps!r} is not balanced")

    @classmethod
    def parse(cls, text: str) -> DyckWord:
        return cls(text.strip().upper())

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """h[x] is the height after x steps, for x = 0..2n."""
        h = [0]
        for s in self.steps:
            h.append(h[-1] + (1 if s == "U" else -1))
        return h

    def peaks(self) -> list[tuple[int, int]]:
        """Peak vertices (x, h): step x is U and step x+1 is D (1-indexed)."""
        h = self.heights()
        w = self.steps
        return [(x, h[x]) for x in range(1, len(w)) if w[x - 1] == "U" and w[x] == "D"]

    def valleys(self) -> list[tuple[int, int]]:
        h = self.heights()
        w = self.steps
        return [(x, h[x]) for x in range(1, len(w)) if w[x - 1] == "D" and w[x] == "U"]

    def reflect(self) -> DyckWord:
        """Reverse the word and swap U with D."""
        swap = {"U": "D", "D": "U"}
        return DyckWord("".join(swap[s] for s in reversed(self.steps)))

    def is_symmetric(self) -> bool:
        return self.reflect() == self


def word_from_peaks(peaks: Sequence[tuple[int, int]], n: int) -> DyckWord:
    """The Dyck word of semilength n whose peak vertices are exactly ``peaks``."""
    out: list[str] = []
    x, h = 0, 0
    for px, ph in sorted(peaks):
        dx, dh = px - x, ph - h
        down = (dx - dh) // 2
        up = dx - down
        out.append("D" * down + "U" * up)
        x, h = px, ph
    out.append("D" * h)
    word = "".join(out)
    if len(word) != 2 * n:
        raise DomainError(f"peaks {list(peaks)} do not describe a Dyck word of semilength {n}")
    return DyckWord(word)


def word_from_valleys(valleys: Sequence[tuple[int, int]], n: int) -> DyckWord:
    """The Dyck word of semilength n whose valley vertices are exactly ``valleys``."""
    out: list[str] = []
    x, h = 0, 0
    for vx, vh in [*sorted(valleys), (2 * n, 0)]:
        dx, dh = vx - x, vh - h
        up = (dx + dh) // 2
        down = dx - up
        if up < 0 or down < 0:
            raise DomainError(f"valleys {list(valleys)} do not describe a Dyck word of semilength {n}")
        out.append("U" * up + "D" * down)
        x, h = vx, vh
    return DyckWord("".join(out))


def enumerate_dyck(n: int) -> Iterator[DyckWord]:
    """Dyck words of semilength n in string order ('D' < 'U')."""
    if n < 1:
        raise DomainError("enumerate_dyck requires n >= 1")
    buf: list[str] = []

    def extend(ups: int, downs: int) -> Iterator[DyckWord]:
        if ups == n and downs == n:
            yield DyckWord("".join(buf))
            return
        if downs < ups:
            buf.append("D")
            yield from extend(ups, downs + 1)
            buf.pop()
        if ups < n:
            buf.append("U")
            yield from extend(ups + 1, downs)
            buf.pop()

    yield from extend(0, 0)


@dataclass(frozen=True)
class Tunnel:
    open: int
    close: int
    kind: str


def classify_tunnel(open_: int, close: int, n: int) -> str:
    if close <= n:
        return "left"
    if open_ >= n + 1:
        return "right"
    s = open_ + close
    if s == 2 * n + 1:
        return "centered"
    return "left-across" if s < 2 * n + 1 else "right-across"


def tunnel_pairs(steps: str) -> list[tuple[int, int]]:
    """Parenthesis matching of a lattice word (U opens, D closes); 1-indexed, sorted by opener."""
    stack: list[int] = []
    pairs = []
    for x, s in enumerate(steps, start=1):
        if s == "U":
            stack.append(x)
        else:
            pairs.append((stack.pop(), x))
    return sorted(pairs)


def tunnels(d: DyckWord) -> list[Tunnel]:
    return [Tunnel(o, c, classify_tunnel(o, c, d.n)) for o, c in tunnel_pairs(d.steps)]


# ---------------------------------------------------------------------------
# root posets and antichains


def contains(outer: Interval, inner: Interval) -> bool:
    return outer[0] <= inner[0] and inner[1] <= outer[1]


def _normalize_intervals(elements) -> tuple[Interval, ...]:
    try:
        items = {(int(a), int(b)) for a, b in elements}
    except (TypeError, ValueError) as exc:
        raise DomainError(f"cannot read intervals from {elements!r}") from exc
    return tuple(sorted(items))


def _check_antichain(elements: tuple[Interval, ...]) -> None:
    for x in elements:
        for y in elements:
            if x != y and contains(x, y):
                raise DomainError(f"{list(x)} contains {list(y)}: not an antichain")


def poset_A(n: int) -> list[Interval]:
    """Elements of the type A root poset A^(n-1)."""
    return [(a, b) for a in range(1, n) for b in range(a, n)]


def poset_B(m: int) -> list[Interval]:
    return [(a, b) for a in range(1, 2 * m) for b in range(a, 2 * m) if a + b <= 2 * m]


@dataclass(frozen=True, order=True)
class AntichainA:
    """Antichain of A^(n-1); ``n`` is the Catalan parameter, elements satisfy b <= n-1."""

    n: int
    elements: tuple[Interval, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("poset parameter n must be >= 1")
        elements = _normalize_intervals(self.elements)
        object.__setattr__(self, "elements", elements)
        for a, b in elements:
            if not 1 <= a <= b <= self.n - 1:
                raise DomainError(f"[{a},{b}] is not an element of A^{self.n - 1}")
        _check_antichain(elements)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return dump_intervals(self.elements)


@dataclass(frozen=True, order=True)
class AntichainB:
    m: int
    elements: tuple[Interval, ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("poset parameter m must be >= 1")
        elements = _normalize_intervals(self.elements)
        object.__setattr__(self, "elements", elements)
        for a, b in elements:
            if not (1 <= a <= b <= 2 * self.m - 1 and a + b <= 2 * self.m):
                raise DomainError(f"[{a},{b}] is not an element of B^{self.m}")
        _check_antichain(elements)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return dump_intervals(self.elements)


@dataclass(frozen=True, order=True)
class OrderSubset:
    """An order ideal or filter of A^(n-1)."""

    n: int
    members: tuple[Interval, ...]
    kind: str = "ideal"

    def __post_init__(self):
        if self.kind not in ("ideal", "filter"):
            raise DomainError(f"kind must be 'ideal' or 'filter', got {self.kind!r}")
        members = _normalize_intervals(self.members)
        object.__setattr__(self, "members", members)
        universe = set(poset_A(self.n))
        inside = set(members)
        if not inside <= universe:
            raise DomainError(f"members outside A^{self.n - 1}: {sorted(inside - universe)}")
        for x in members:
            for y in universe - inside:
                below = contains(x, y) if self.kind == "ideal" else contains(y, x)
                if below:
                    raise DomainError(f"{self.kind} {list(members)} is not closed: missing {list(y)}")

    def __contains__(self, item) -> bool:
        return tuple(item) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return dump_intervals(self.members)


def _enumerate_interval_antichains(allowed) -> Iterator[tuple[Interval, ...]]:
    # sorted antichain elements have strictly increasing left and right endpoints,
    # so a preorder walk over increasing pairs gives lexicographic order
    elements = sorted(allowed)
    chosen: list[Interval] = []

    def extend(start: int) -> Iterator[tuple[Interval, ...]]:
        yield tuple(chosen)
        for k in range(start, len(elements)):
            a, b = elements[k]
            if chosen and (a <= chosen[-1][0] or b <= chosen[-1][1]):
                continue
            chosen.append((a, b))
            yield from extend(k + 1)
            chosen.pop()

    yield from extend(0)


def enumerate_antichains(n: int) -> Iterator[AntichainA]:
    """Every antichain of A^(n-1) once, in lexicographic order of sorted elements."""
    if n < 1:
        raise DomainError("enumerate_antichains requires n >= 1")
    for els in _enumerate_interval_antichains(poset_A(n)):
        yield AntichainA(n, els)


def enumerate_antichains_B(m: int) -> Iterator[AntichainB]:
    if m < 1:
        raise DomainError("enumerate_antichains_B requires m >= 1")
    for els in _enumerate_interval_antichains(poset_B(m)):
        yield AntichainB(m, els)


# ---------------------------------------------------------------------------
# matchings


def _normalize_arcs(arcs) -> tuple[tuple[int, int], ...]:
    try:
        return tuple(sorted((min(int(x), int(y)), max(int(x), int(y))) for x, y in arcs))
    except (TypeError, ValueError) as exc:
        raise DomainError(f"cannot read arcs from {arcs!r}") from exc


def _check_noncrossing(arcs: Sequence[tuple[int, int]]) -> None:
    for i, (a, b) in enumerate(arcs):
        for c, d in arcs[i + 1:]:
            if a < c < b < d or c < a < d < b:
                raise DomainError(f"arcs {(a, b)} and {(c, d)} cross")


@dataclass(frozen=True, order=True)
class NoncrossingMatching:
    """Perfect noncrossing matching of 1..2n; vertex ī is 2n+1-i."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = _normalize_arcs(self.arcs)
        object.__setattr__(self, "arcs", arcs)
        ends = sorted(v for arc in arcs for v in arc)
        if ends != list(range(1, 2 * self.n + 1)):
            raise DomainError(f"arcs {list(arcs)} are not a perfect matching of 1..{2 * self.n}")
        _check_noncrossing(arcs)

    @classmethod
    def from_arcs(cls, arcs) -> NoncrossingMatching:
        arcs = list(arcs)
        return cls(len(arcs), arcs)

    def partner(self, v: int) -> int:
        for x, y in self.arcs:
            if x == v:
                return y
            if y == v:
                return x
        raise KeyError(v)

    def bar(self, i: int) -> int:
        return 2 * self.n + 1 - i

    def __str__(self) -> str:
        return json.dumps([list(a) for a in self.arcs], separators=(",", ":"))


@dataclass(frozen=True, order=True)
class PartialMatching:
    size: int
    arcs: tuple[tuple[int, int], ...]
    unmatched: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        arcs = _normalize_arcs(self.arcs)
        object.__setattr__(self, "arcs", arcs)
        ends = [v for arc in arcs for v in arc]
        if len(set(ends)) != len(ends) or any(not 1 <= v <= self.size for v in ends):
            raise DomainError(f"arcs {list(arcs)} are not disjoint pairs inside 1..{self.size}")
        _check_noncrossing(arcs)
        rest = tuple(sorted(set(range(1, self.size + 1)) - set(ends)))
        if self.unmatched is not None and tuple(sorted(self.unmatched)) != rest:
            raise DomainError("unmatched vertices disagree with the arcs")
        object.__setattr__(self, "unmatched", rest)

    def relabel(self, f) -> PartialMatching:
        return PartialMatching(self.size, [(f(x), f(y)) for x, y in self.arcs])


# ---------------------------------------------------------------------------
# tableaux

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class Tableau:
    """Standard filling of a (possibly skew) shape; ``None`` marks inner cells.

    Rows are listed top to bottom (English notation); the outer shape is the
    row lengths and the inner shape counts the leading ``None`` in each row.
    """

    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(None if v is None else int(v) for v in row) for row in self.rows)
        rows = tuple(row for row in rows if row)
        object.__setattr__(self, "rows", rows)
        outer = self.outer
        inner = self.inner
        if any(outer[i] < outer[i + 1] for i in range(len(outer) - 1)):
            raise DomainError(f"outer shape {outer} is not a partition")
        if any(inner[i] < inner[i + 1] for i in range(len(inner) - 1)):
            raise DomainError(f"inner shape {inner} is not a partition")
        for r, row in enumerate(rows):
            if any(v is None for v in row[inner[r]:]):
                raise DomainError("inner cells must come first in each row")
        entries = sorted(v for row in rows for v in row if v is not None)
        if entries != list(range(1, len(entries) + 1)):
            raise DomainError(f"entries must be 1..{len(entries)}")
        for r, row in enumerate(rows):
            for c in range(inner[r], len(row) - 1):
                if row[c] >= row[c + 1]:
                    raise DomainError(f"row {r + 1} is not increasing")
            if r + 1 < len(rows):
                below = rows[r + 1]
                for c in range(inner[r], min(len(row), len(below))):
                    if below[c] is not None and below[c] <= row[c]:
                        raise DomainError(f"column {c + 1} is not increasing")

    @classmethod
    def from_rows(cls, rows) -> Tableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def outer(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def inner(self) -> tuple[int, ...]:
        out = []
        for row in self.rows:
            k = 0
            while k < len(row) and row[k] is None:
                k += 1
            out.append(k)
        while out and out[-1] == 0:
            out.pop()
        return tuple(out) + (0,) * (len(self.rows) - len(out))

    @property
    def shape(self) -> tuple[int, ...]:
        return self.outer

    @property
    def size(self) -> int:
        return sum(1 for row in self.rows for v in row if v is not None)

    def is_straight(self) -> bool:
        return not any(self.inner)

    def position(self, entry: int) -> Cell:
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                if v == entry:
                    return r, c
        raise KeyError(entry)

    def row_of(self, entry: int) -> int:
        return self.position(entry)[0]

    def row_sets(self) -> list[set[int]]:
        return [{v for v in row if v is not None} for row in self.rows]

    def __str__(self) -> str:
        return json.dumps([list(r) for r in self.rows], separators=(",", ":"))


# ---------------------------------------------------------------------------
# orbits


@dataclass(frozen=True)
class Orbit:
    """A cycle of a bijection, listed from ``start`` in application order."""

    elements: tuple
    representative: object
    size: int


# ---------------------------------------------------------------------------
# serialization


def dump_intervals(elements) -> str:
    return json.dumps([list(e) for e in elements], separators=(",", ":"))


def dump(obj, fmt: str = "text") -> str:
    """Serialize a domain object per the documented wire formats."""
    if isinstance(obj, Permutation):
        return json.dumps(list(obj.images)) if fmt == "json" else str(obj)
    if isinstance(obj, DyckWord):
        return json.dumps(obj.steps) if fmt == "json" else obj.steps
    if isinstance(obj, (AntichainA, AntichainB)):
        return dump_intervals(obj.elements)
    if isinstance(obj, OrderSubset):
        return dump_intervals(obj.members)
    if isinstance(obj, NoncrossingMatching):
        return str(obj)
    if isinstance(obj, PartialMatching):
        return json.dumps({"arcs": [list(a) for a in obj.arcs], "unmatched": list(obj.unmatched)},
                          separators=(",", ":"))
    if isinstance(obj, Tableau):
        return str(obj)
    if isinstance(obj, tuple) and all(isinstance(t, Tableau) for t in obj):
        return json.dumps([[list(r) for r in t.rows] for t in obj], separators=(",", ":"))
    if isinstance(obj, (set, frozenset)):
        return json.dumps(sorted(obj))
    return json.dumps(obj)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {text!r}") from exc


def parse_antichain(text: str, n: int) -> AntichainA:
    return AntichainA(n, _load_json(text))


def parse_antichain_B(text: str, m: int) -> AntichainB:
    return AntichainB(m, _load_json(text))


def parse_matching(text: str) -> NoncrossingMatching:
    return NoncrossingMatching.from_arcs(_load_json(text))


def parse_tableau(text: str) -> Tableau:
    return Tableau.from_rows(_load_json(text))


def infer_antichain_n(elements) -> int:
    """Smallest n whose poset A^(n-1) holds all ``elements``."""
    return max((b for _, b in elements), default=0) + 1
