"""RSK, the RSKD path encoding, toggles, promotion, evacuation and jeu de taquin."""
from __future__ import annotations

from bisect import bisect_right

from .core import (
    DomainError,
    DyckWord,
    PartialMatching,
    Permutation,
    Tableau,
    require_321_avoiding,
)


def _require_straight(t: Tableau) -> None:
    if not t.is_straight():
        raise DomainError("operation requires a straight-shape tableau")


def rsk(p: Permutation) -> tuple[Tableau, Tableau]:
    """Row insertion; returns (insertion tableau P, recording tableau Q)."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(p.images, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    return Tableau.from_rows(P), Tableau.from_rows(Q)


def rsk_inv(P: Tableau, Q: Tableau) -> Permutation:
    if P.shape != Q.shape:
        raise DomainError(f"shape mismatch: {P.shape} vs {Q.shape}")
    _require_straight(P)
    _require_straight(Q)
    rows = [list(r) for r in P.rows]
    images = [0] * P.size
    for step in range(P.size, 0, -1):
        r, c = Q.position(step)
        x = rows[r].pop(c)
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            # largest entry smaller than x gets bumped up
            k = bisect_right(row, x) - 1
            row[k], x = x, row[k]
        images[step - 1] = x
    return Permutation(tuple(images))


def rskd(p: Permutation) -> DyckWord:
    """Dyck word whose first half reads P's top row and second half reads Q's, mirrored."""
    require_321_avoiding(p)
    P, Q = rsk(p)
    n = p.n
    top_p, top_q = set(P.rows[0]), set(Q.rows[0])
    steps = [""] * (2 * n)
    for i in range(1, n + 1):
        steps[i - 1] = "U" if i in top_p else "D"
        steps[2 * n - i] = "D" if i in top_q else "U"
    return DyckWord("".join(steps))


def rskd_inv(d: DyckWord) -> Permutation:
    n = d.n
    first, second = d.steps[:n], d.steps[n:][::-1]
    P = _two_row_tableau(n, [i for i in range(1, n + 1) if first[i - 1] == "U"])
    Q = _two_row_tableau(n, [i for i in range(1, n + 1) if second[i - 1] == "D"])
    return rsk_inv(P, Q)


def _two_row_tableau(size: int, top: list[int]) -> Tableau:
    bottom = sorted(set(range(1, size + 1)) - set(top))
    return Tableau.from_rows([top, bottom] if bottom else [top])


def tab(d: DyckWord) -> Tableau:
    top = [x for x, s in enumerate(d.steps, start=1) if s == "U"]
    bottom = [x for x, s in enumerate(d.steps, start=1) if s == "D"]
    return Tableau.from_rows([top, bottom])


def tab_inv(t: Tableau) -> DyckWord:
    return DyckWord(lattice_word(t))


def lattice_word(t: Tableau) -> str:
    """Step x is U when x sits in the top row, D otherwise (at most two rows)."""
    if len(t.rows) > 2:
        raise DomainError("lattice word needs a tableau with at most two rows")
    top = set(v for v in t.rows[0] if v is not None)
    return "".join("U" if x in top else "D" for x in range(1, t.size + 1))


def toggle(t: Tableau, i: int) -> Tableau:
    """Bender-Knuth toggle: swap i and i+1 unless they share a row or a column."""
    _require_straight(t)
    if not 1 <= i <= t.size - 1:
        raise DomainError(f"toggle index {i} outside 1..{t.size - 1}")
    (r1, c1), (r2, c2) = t.position(i), t.position(i + 1)
    if r1 == r2 or c1 == c2:
        return t
    rows = [list(r) for r in t.rows]
    rows[r1][c1], rows[r2][c2] = i + 1, i
    return Tableau.from_rows(rows)


def _toggle_sweep(t: Tableau, top: int) -> Tableau:
    for i in range(1, top + 1):
        t = toggle(t, i)
    return t


def promotion_syt(t: Tableau) -> Tableau:
    """t_{N-1} ... t_2 t_1, with t_1 applied first."""
    _require_straight(t)
    return _toggle_sweep(t, t.size - 1)


def evacuation(t: Tableau) -> Tableau:
    """(t_1)(t_2 t_1)...(t_{N-1}...t_1): the longest sweep is applied first."""
    _require_straight(t)
    for top in range(t.size - 1, 0, -1):
        t = _toggle_sweep(t, top)
    return t


def _inner_corner(rows: list[list[int | None]]) -> tuple[int, int] | None:
    # rightmost inner cell of the topmost row whose last inner cell has no inner cell below
    inner = [sum(1 for v in row if v is None) for row in rows]
    for r, mu in enumerate(inner):
        if mu and (r + 1 == len(rows) or inner[r + 1] < mu):
            return r, mu - 1
    return None


def _slide(rows: list[list[int | None]], r: int, c: int) -> None:
    while True:
        right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
        below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[r][c], rows[r][c + 1] = right, None
            c += 1
        else:
            rows[r][c], rows[r + 1][c] = below, None
            r += 1
    rows[r].pop(c)


def jdt_rectify(t: Tableau) -> Tableau:
    """Rectify a skew standard tableau by jeu de taquin slides."""
    rows = [list(r) for r in t.rows]
    while any(v is None for row in rows for v in row):
        _slide(rows, *_inner_corner(rows))
        rows = [row for row in rows if row]
    return Tableau.from_rows(rows)


def rotate_complement(t: Tableau) -> Tableau:
    """Rotate by 180 degrees and replace each entry i with N+1-i; the result is skew."""
    _require_straight(t)
    width, N = t.shape[0], t.size
    rows = []
    for row in reversed(t.rows):
        rows.append([None] * (width - len(row)) + [N + 1 - v for v in reversed(row)])
    return Tableau.from_rows(rows)


def evac_via_rotation(t: Tableau) -> Tableau:
    return jdt_rectify(rotate_complement(t))


def partial_match(t: Tableau) -> PartialMatching:
    """Partial matching M(T): tunnels of the lattice word, unmatched U steps left open."""
    _require_straight(t)
    word = lattice_word(t)
    stack: list[int] = []
    arcs = []
    for x, s in enumerate(word, start=1):
        if s == "U":
            stack.append(x)
        else:
            arcs.append((stack.pop(), x))
    return PartialMatching(t.size, arcs)


def standard_tableaux(shape: tuple[int, ...]):
    """All standard Young tableaux of a straight shape, generated by placing 1..N in order."""
    total = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def place(k: int):
        if k > total:
            yield Tableau.from_rows([list(r) for r in rows])
            return
        for r, length in enumerate(shape):
            if len(rows[r]) < length and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(k)
                yield from place(k + 1)
                rows[r].pop()

    yield from place(1)


def two_row_shapes(size: int) -> list[tuple[int, ...]]:
    return [(size - k, k) if k else (size,) for k in range(size // 2 + 1)]

