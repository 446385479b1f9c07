"""Registry of exhaustively checkable identities, one id per stated invariant."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import comb
from typing import Callable

from . import bijections as bj
from . import dynamics as dy
from . import statistics as st
from . import tableaux as tb
from .core import (
    DyckWord,
    NoncrossingMatching,
    Permutation,
    Tableau,
    dump,
    enumerate_antichains,
    enumerate_antichains_B,
    enumerate_avoiders,
    enumerate_dyck,
    reverse_complement,
)


@dataclass(frozen=True)
class Theorem:
    id: str
    summary: str
    check: Callable[[int], "CheckOutcome"]
    lo: int
    hi: int
    param: str = "n"


@dataclass
class CheckOutcome:
    counterexample: str | None = None
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class VerificationResult:
    theorem: str
    n_range: tuple[int, int]
    passed: bool
    counterexample: str | None
    elapsed: float
    details: dict

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "range": list(self.n_range),
            "passed": self.passed,
            "counterexample": self.counterexample,
            "elapsed": round(self.elapsed, 6),
            "details": self.details,
        }


def _first_failure(domain, predicate, show=dump) -> CheckOutcome:
    for x in domain:
        if not predicate(x):
            return CheckOutcome(show(x))
    return CheckOutcome()


def _sgn(p: Permutation) -> int:
    return int(st.perm_stat("sgn", p))


# ---------------------------------------------------------------------------
# core


def _catalan(n: int) -> CheckOutcome:
    counts = {
        "avoiders": sum(1 for _ in enumerate_avoiders(n)),
        "antichains": sum(1 for _ in enumerate_antichains(n)),
        "dyck": sum(1 for _ in enumerate_dyck(n)),
    }
    expected = comb(2 * n, n) // (n + 1)
    bad = None if set(counts.values()) == {expected} else f"n={n}: {counts} vs {expected}"
    return CheckOutcome(bad, {n: expected})


def _rc_involution(n: int) -> CheckOutcome:
    def ok(p):
        q = reverse_complement(p)
        return reverse_complement(q) == p and q.inverse() == reverse_complement(p.inverse())

    return _first_failure((Permutation(t) for t in permutations(range(1, n + 1))), ok)


def _vertex_parity(n: int) -> CheckOutcome:
    return _first_failure(enumerate_dyck(n),
                          lambda d: all((x + h) % 2 == 0 for x, h in d.peaks() + d.valleys()))


# ---------------------------------------------------------------------------
# bijections


def _exc_factorizations(n: int) -> CheckOutcome:
    return _first_failure(
        enumerate_avoiders(n),
        lambda p: bj.path_map(bj.exc_map(p)) == bj.e_p(p) and bj.ant_map(bj.e_v(p)) == bj.exc_map(p),
    )


def _involutions(n: int) -> CheckOutcome:
    out = _first_failure(enumerate_dyck(n), lambda d: bj.lk(bj.lk(d)) == d)
    if out.counterexample is None:
        out = _first_failure(enumerate_antichains(n), lambda a: bj.lka(bj.lka(a)) == a)
    if out.counterexample is None:
        out = _first_failure(enumerate_avoiders(n), lambda p: bj.lks(bj.lks(p)) == p)
    return out


def _lka_by_paths(n: int) -> CheckOutcome:
    return _first_failure(enumerate_antichains(n), lambda a: bj.lka(a) == bj.lka_by_paths(a))


def _dv_lk(n: int) -> CheckOutcome:
    return _first_failure(enumerate_avoiders(n), lambda p: bj.d_v(p) == bj.lk(bj.e_p(p)))


def _round_trips(n: int) -> CheckOutcome:
    def perm_ok(p):
        return (bj.e_p_inv(bj.e_p(p)) == p and bj.e_v_inv(bj.e_v(p)) == p
                and bj.exc_inv(bj.exc_map(p)) == p and tb.rskd_inv(tb.rskd(p)) == p)

    def word_ok(d):
        return (bj.e_p(bj.e_p_inv(d)) == d and bj.e_v(bj.e_v_inv(d)) == d
                and bj.ant_inv(bj.ant_map(d)) == d and bj.path_map(bj.path_inv(d)) == d
                and bj.match_inv(bj.match_map(d)) == d and tb.tab_inv(tb.tab(d)) == d)

    def antichain_ok(a):
        return bj.ant_map(bj.ant_inv(a)) == a and bj.path_inv(bj.path_map(a)) == a

    out = _first_failure(enumerate_avoiders(n), perm_ok)
    if out.counterexample is None:
        out = _first_failure(enumerate_dyck(n), word_ok)
    if out.counterexample is None:
        out = _first_failure(enumerate_antichains(n), antichain_ok)
    return out


# ---------------------------------------------------------------------------
# tableaux


def _rskd_inverse_reflects(n: int) -> CheckOutcome:
    return _first_failure(enumerate_avoiders(n), lambda p: tb.rskd(p.inverse()) == tb.rskd(p).reflect())


def _rskd_symmetric(n: int) -> CheckOutcome:
    return _first_failure(enumerate_avoiders(n), lambda p: tb.rskd(p).is_symmetric() == p.is_involution())


def _rsk_rc(n: int) -> CheckOutcome:
    def ok(p):
        P, Q = tb.rsk(p)
        return tb.rsk(reverse_complement(p)) == (tb.evacuation(P), tb.evacuation(Q))

    return _first_failure((Permutation(t) for t in permutations(range(1, n + 1))), ok)


def _rsk_rows(n: int) -> CheckOutcome:
    def longest_decreasing(p):
        best = []
        for k, v in enumerate(p.images):
            best.append(1 + max((best[j] for j in range(k) if p.images[j] > v), default=0))
        return max(best)

    return _first_failure((Permutation(t) for t in permutations(range(1, n + 1))),
                          lambda p: len(tb.rsk(p)[0].rows) == longest_decreasing(p))


def _rskd_promotion(n: int) -> CheckOutcome:
    return _first_failure(enumerate_avoiders(n),
                          lambda p: tb.rskd(dy.rowmotion_S(p)) == dy.promotion_dyck_inv(tb.rskd(p)))


def _tab_promotion(n: int) -> CheckOutcome:
    return _first_failure(enumerate_dyck(n),
                          lambda d: tb.tab(dy.promotion_dyck(d)) == tb.promotion_syt(tb.tab(d)))


def _small_tableaux(size: int):
    for shape in tb.two_row_shapes(size):
        yield from tb.standard_tableaux(shape)


def _evacuation_rotation(size: int) -> CheckOutcome:
    """Both evacuations agree on tableaux with at most two rows and ``size`` boxes, and on SYT(k,k)."""
    out = _first_failure(_small_tableaux(size), lambda t: tb.evacuation(t) == tb.evac_via_rotation(t))
    if out.counterexample is None and size <= 5:
        out = _first_failure(tb.standard_tableaux((size, size)),
                             lambda t: tb.evacuation(t) == tb.evac_via_rotation(t))
    return out


def _evacuation_matching(size: int) -> CheckOutcome:
    def ok(t: Tableau):
        return tb.partial_match(tb.evacuation(t)) == tb.partial_match(t).relabel(lambda k: size + 1 - k)

    return _first_failure(_small_tableaux(size), ok)


def _evacuation_involution(size: int) -> CheckOutcome:
    return _first_failure(_small_tableaux(size), lambda t: tb.evacuation(tb.evacuation(t)) == t)


# ---------------------------------------------------------------------------
# dynamics


def _rowmotion_a_formulas(n: int) -> CheckOutcome:
    def ok(a):
        b = dy.rowmotion_A(a)
        return b == dy.rowmotion_A_poset(a) and dy.rowmotion_A_inv(b) == a

    return _first_failure(enumerate_antichains(n), ok)


def _rowmotion_s_formulas(n: int) -> CheckOutcome:
    def ok(p):
        q = dy.rowmotion_S(p)
        return q == dy.rowmotion_S_antichain(p) and dy.rowmotion_S_inv(q) == p

    return _first_failure(enumerate_avoiders(n), ok)


def _ri_conjugation(n: int) -> CheckOutcome:
    def ok(a):
        ideal = dy.up_transfer_inv(a)
        f = dy.down_transfer_inv(a)
        return (dy.rowmotion_I(ideal) == dy.up_transfer_inv(dy.rowmotion_A(a))
                and dy.rowmotion_F(f) == dy.down_transfer_inv(dy.rowmotion_A(a)))

    return _first_failure(enumerate_antichains(n), ok)


def _rd_conjugation(n: int) -> CheckOutcome:
    return _first_failure(enumerate_antichains(n),
                          lambda a: bj.path_map(dy.rowmotion_A(a)) == dy.rowmotion_D(bj.path_map(a)))


def _ast_equals_rskd(n: int) -> CheckOutcome:
    return _first_failure(enumerate_antichains(n),
                          lambda a: dy.ast(a) == bj.match_map(tb.rskd(bj.exc_inv(a))))


def _ast_equivariance(n: int) -> CheckOutcome:
    return _first_failure(enumerate_antichains(n), lambda a: dy.ast(dy.rowmotion_A(a)) == dy.rotate(dy.ast(a)))


def _lka_conjugation(n: int) -> CheckOutcome:
    return _first_failure(enumerate_antichains(n),
                          lambda a: bj.lka(dy.rowmotion_A(a)) == dy.rowmotion_A_inv(bj.lka(a)))


def _lks_conjugation(n: int) -> CheckOutcome:
    def ok(p):
        left = bj.lks(dy.rowmotion_S_inv(p))
        return (left == dy.rowmotion_S(bj.lks(p))
                and left == bj.exc_inv(bj.lka(dy.rowmotion_A(bj.exc_map(p))))
                and p.inverse() == dy.rowmotion_S(bj.lks(p)))

    return _first_failure(enumerate_avoiders(n), ok)


def _rowmotion_power_reflects(n: int) -> CheckOutcome:
    def ok(a):
        b = a
        for _ in range(n):
            b = dy.rowmotion_A(b)
        return set(b.elements) == {(n - j, n - i) for i, j in a.elements}

    return _first_failure(enumerate_antichains(n), ok)


def _rowmotion_s_halves(n: int) -> CheckOutcome:
    def ok(p):
        q = dy.rowmotion_S(p)
        return bj.e_p(q) == dy.rowmotion_D(bj.e_p(p)) and bj.d_v(q) == dy.rowmotion_D_inv(bj.d_v(p))

    return _first_failure(enumerate_avoiders(n), ok)


def _bottoms_round_trip(n: int) -> CheckOutcome:
    return _first_failure((bj.match_map(d) for d in enumerate_dyck(n)),
                          lambda m: dy.matching_from_bottoms(dy.bottoms(m), n) == m)


def centrally_symmetric_matchings(n: int) -> list[NoncrossingMatching]:
    return [m for m in (bj.match_map(d) for d in enumerate_dyck(n)) if dy.is_centrally_symmetric(m)]


def _type_b_ast(m: int) -> CheckOutcome:
    images = []
    for a in enumerate_antichains_B(m):
        x = dy.ast_b(a)
        if not dy.is_centrally_symmetric(x):
            return CheckOutcome(dump(a))
        images.append(x)
    ok = len(set(images)) == len(images) == comb(2 * m, m)
    return CheckOutcome(None if ok else f"m={m}: {len(set(images))} distinct of {len(images)}",
                        {m: len(images)})


def _csnc_rskd(n: int) -> CheckOutcome:
    domain = [p for p in enumerate_avoiders(n) if p == reverse_complement(p).inverse()]
    images = [bj.match_map(tb.rskd(p)) for p in domain]
    target = set(centrally_symmetric_matchings(n))
    ok = len(set(images)) == len(images) and set(images) == target
    return CheckOutcome(None if ok else f"n={n}: {len(set(images))} images vs {len(target)} CSNC",
                        {n: len(target)})


# ---------------------------------------------------------------------------
# statistics


def _homomesy(stat_names: Callable[[int], list[str]], dynamic: str, value):
    def check(n: int) -> CheckOutcome:
        for name in stat_names(n):
            rep = st.homomesy_report(name, dynamic, n, max_n=n)
            target = value(n) if callable(value) else value
            if not rep.homomesic or rep.c != target:
                bad = next(o for o in rep.orbits if o.average != target)
                return CheckOutcome(f"{name}: orbit of {dump(bad.representative)} averages {bad.average}")
        return CheckOutcome()

    return check


def _upshift(n: int) -> CheckOutcome:
    def ok(p):
        s = dy.rowmotion_S(p)
        pinv, sinv = p.inverse(), s.inverse()
        first = all((pinv(i) <= i) == (sinv(i + 1) < i + 1) for i in range(1, n))
        second = all((p(i) >= i) == (s(i - 1) > i - 1) for i in range(2, n + 1))
        return first and second

    return _first_failure(enumerate_avoiders(n), ok)


def _fp_identity(n: int) -> CheckOutcome:
    def ok(p):
        ls = sum(st.l_perm(i, p) for i in range(1, n + 1))
        hs = sum(st.h_perm(i, p) for i in range(1, n))
        return st.perm_stat("fp", p) == ls - hs

    return _first_failure(enumerate_avoiders(n), ok)


def _antichain_translations(n: int) -> CheckOutcome:
    def ok(p):
        a = bj.exc_map(p)
        shifted = bj.exc_map(dy.rowmotion_S(p))
        return (all(st.h_antichain(i, a) == st.h_perm(i, p) for i in range(1, n))
                and st.fp_antichain(shifted) == st.perm_stat("fp", p)
                and all(st.l_antichain(i, shifted) == st.l_perm(i, p) for i in range(2, n)))

    return _first_failure(enumerate_avoiders(n), ok)


def _sign(n: int) -> CheckOutcome:
    factor = 1 if n % 2 else -1
    return _first_failure(enumerate_avoiders(n),
                          lambda p: _sgn(dy.rowmotion_S(p)) == _sgn(bj.lks(p)) == factor * _sgn(p))


def _lk_no_fixed(n: int) -> CheckOutcome:
    fixed = sum(1 for d in enumerate_dyck(n) if bj.lk(d) == d)
    if n % 2 == 0 and fixed:
        return CheckOutcome(next(dump(d) for d in enumerate_dyck(n) if bj.lk(d) == d), {n: fixed})
    return CheckOutcome(None, {n: fixed})


def _exc_orbits(n: int) -> CheckOutcome:
    for orb in dy.orbits(enumerate_avoiders(n), "rs"):
        for images in ({bj.exc_map(p) for p in orb.elements},
                       {bj.exc_map(p.inverse()) for p in orb.elements}):
            start = next(iter(images))
            if set(dy.orbit_of(start, "ra").elements) != images:
                return CheckOutcome(dump(orb.representative))
    return CheckOutcome()


def _lka_ra_count(n: int) -> CheckOutcome:
    count = st.count_fixed_lka_ra(n)
    ok = count == comb(n, n // 2) == st.count_321_involutions(n)
    return CheckOutcome(None if ok else f"n={n}: {count} fixed, expected {comb(n, n // 2)}", {n: count})


def _lka_ra_count_b(m: int) -> CheckOutcome:
    count = st.count_fixed_lka_ra_B(m)
    ok = count == 2 ** m == st.count_123_involutions_rc_fixed(m)
    return CheckOutcome(None if ok else f"m={m}: {count} fixed, expected {2 ** m}", {m: count})


THEOREMS: dict[str, Theorem] = {t.id: t for t in [
    Theorem("catalan", "avoiders, antichains and Dyck words are Catalan-counted", _catalan, 1, 10),
    Theorem("rc-involution", "reverse-complement is an involution commuting with inverse", _rc_involution, 1, 7),
    Theorem("vertex-parity", "peak and valley vertices have x+h even", _vertex_parity, 1, 10),
    Theorem("exc-factorization", "path(exc(p)) = e_p(p) and ant(e_v(p)) = exc(p)", _exc_factorizations, 1, 8),
    Theorem("involutions", "lk, lka and lks are involutions", _involutions, 1, 8),
    Theorem("lka-by-paths", "lka = ant . lk . ant^-1", _lka_by_paths, 1, 8),
    Theorem("dv-equals-lk", "d_v(p) = lk(e_p(p))", _dv_lk, 1, 8),
    Theorem("round-trips", "every bijection round-trips with its inverse", _round_trips, 1, 8),
    Theorem("rskd-inverse", "rskd(p^-1) is the reflection of rskd(p)", _rskd_inverse_reflects, 1, 7),
    Theorem("rskd-symmetric", "rskd(p) is symmetric iff p is an involution", _rskd_symmetric, 1, 7),
    Theorem("rsk-rc", "RSK(p^rc) = (evac P, evac Q)", _rsk_rc, 1, 6),
    Theorem("rsk-rows", "rows of P = longest decreasing subsequence", _rsk_rows, 1, 6),
    Theorem("rskd-promotion", "rskd . rho_S = pro^-1 . rskd", _rskd_promotion, 1, 7),
    Theorem("tab-promotion", "Tab . pro = Pro . Tab", _tab_promotion, 1, 7),
    Theorem("evacuation-rotation", "toggle evacuation = rotate-complement-rectify", _evacuation_rotation, 1, 10),
    Theorem("evacuation-matching", "M(evac T) = M(T) relabeled k -> N+1-k", _evacuation_matching, 1, 10),
    Theorem("evacuation-involution", "evac . evac = id", _evacuation_involution, 1, 10),
    Theorem("rowmotion-a-formulas", "both rho_A formulas agree; rho_A^-1 inverts", _rowmotion_a_formulas, 1, 8),
    Theorem("rowmotion-s-formulas", "both rho_S formulas agree; rho_S^-1 inverts", _rowmotion_s_formulas, 1, 8),
    Theorem("ri-conjugation", "rho_I and rho_F are conjugate to rho_A", _ri_conjugation, 1, 7),
    Theorem("rd-conjugation", "path . rho_A = rho_D . path", _rd_conjugation, 1, 8),
    Theorem("ast-equals-rskd", "AST = Match . RSKD . Exc^-1", _ast_equals_rskd, 1, 8),
    Theorem("ast-equivariance", "AST . rho_A = Rot . AST", _ast_equivariance, 1, 7),
    Theorem("lka-conjugation", "lka . rho_A = rho_A^-1 . lka", _lka_conjugation, 1, 7),
    Theorem("lks-conjugation", "lks . rho_S^-1 = rho_S . lks = Exc^-1 . lka . rho_A . Exc; p^-1 = rho_S(lks p)",
            _lks_conjugation, 1, 7),
    Theorem("rowmotion-power", "rho_A^n reflects antichains", _rowmotion_power_reflects, 1, 7),
    Theorem("rowmotion-s-halves", "e_p and d_v intertwine rho_S with rho_D and rho_D^-1", _rowmotion_s_halves, 1, 7),
    Theorem("bottoms-round-trip", "matching_from_bottoms . bottoms = id", _bottoms_round_trip, 1, 6),
    Theorem("type-b-ast", "ast_b is injective into centrally symmetric matchings", _type_b_ast, 1, 4, "m"),
    Theorem("csnc-rskd", "match . rskd maps {p = (p^rc)^-1} onto CSNC", _csnc_rskd, 1, 8),
    Theorem("fp-homomesy", "fp is 1-mesic under rho_S", _homomesy(lambda n: ["fp"], "rs", 1), 1, 8),
    Theorem("h-homomesy", "every h_i is 1-mesic under rho_S",
            _homomesy(lambda n: [f"h{i}" for i in range(1, n)], "rs", 1), 1, 8),
    Theorem("l-homomesy", "every l_i is 1-mesic under rho_S",
            _homomesy(lambda n: [f"l{i}" for i in range(1, n + 1)], "rs", 1), 1, 8),
    Theorem("card-homomesy", "antichain cardinality is (n-1)/2-mesic under rho_A",
            _homomesy(lambda n: ["card"], "ra", lambda n: st.Fraction(n - 1, 2)), 1, 8),
    Theorem("sgn-homomesy", "sgn is 0-mesic under rho_S for even n",
            _homomesy(lambda n: ["sgn"] if n % 2 == 0 else [], "rs", 0), 1, 8),
    Theorem("upshift", "indicator shifts between p and rho_S(p)", _upshift, 1, 7),
    Theorem("fp-identity", "fp = sum l_i - sum h_i", _fp_identity, 1, 8),
    Theorem("antichain-translations", "h, fp and l agree with their antichain versions", _antichain_translations, 1, 6),
    Theorem("sign", "sgn(rho_S p) = sgn(lks p) = (-1)^(n+1) sgn(p)", _sign, 1, 8),
    Theorem("lk-no-fixed", "lk has no fixed points for even n", _lk_no_fixed, 1, 10),
    Theorem("exc-orbits", "Exc images of rho_S orbits are rho_A orbits", _exc_orbits, 1, 6),
    Theorem("lka-ra-count", "#{A : lka(rho_A A) = A} = C(n, n//2)", _lka_ra_count, 2, 10),
    Theorem("lka-ra-count-b", "type B fixed count is 2^m", _lka_ra_count_b, 1, 5, "m"),
]}


def _run_one(args: tuple[str, int]) -> tuple[int, CheckOutcome]:
    theorem_id, n = args
    return n, THEOREMS[theorem_id].check(n)


def verify(theorem_id: str, hi: int | None = None, lo: int | None = None, jobs: int = 1) -> VerificationResult:
    """Run ``theorem_id`` for every size in lo..hi; stops at the first counterexample."""
    theorem = THEOREMS[theorem_id]
    lo = theorem.lo if lo is None else max(lo, theorem.lo)
    hi = theorem.hi if hi is None else hi
    sizes = list(range(lo, hi + 1))
    start = time.perf_counter()
    details: dict = {}
    counterexample = None
    if jobs > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, [(theorem_id, n) for n in sizes]))
    else:
        results = []
        for n in sizes:
            results.append(_run_one((theorem_id, n)))
            if results[-1][1].counterexample is not None:
                break
    for _, outcome in sorted(results, key=lambda r: r[0]):
        details.update(outcome.details)
        if outcome.counterexample is not None:
            counterexample = outcome.counterexample
            break
    return VerificationResult(theorem_id, (lo, hi), counterexample is None, counterexample,
                              time.perf_counter() - start, {str(k): v for k, v in details.items()})
