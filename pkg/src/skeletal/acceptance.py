"""Acceptance checks shared by ``skeletal verify`` and the test suite.

Each check returns a :class:`Result`; ``run_all`` prints one line per check.
``quick=True`` shrinks the grids so the CLI can give a fast smoke run.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from . import chipfire, cyclic, enumeration, firstreturn, labeled, paths, stats
from .paths import Params

SEED = 20240611


@dataclass
class Result:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


class _Failures:
    """Collects the first few mismatches for the detail line."""

    def __init__(self, limit: int = 3):
        self.count = 0
        self.samples: List[str] = []
        self.limit = limit

    def check(self, ok: bool, what) -> None:
        if not ok:
            self.count += 1
            if len(self.samples) < self.limit:
                self.samples.append(what() if callable(what) else str(what))

    def summary(self, ok_text: str) -> str:
        if not self.count:
            return ok_text
        return f"{self.count} failures, e.g. " + "; ".join(self.samples)


def _timed(number: int, name: str, body: Callable[[], tuple]) -> Result:
    t0 = time.perf_counter()
    try:
        passed, detail = body()
    except Exception as exc:  # a crash is a failure, not an abort of the suite
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    return Result(number, name, passed, detail, time.perf_counter() - t0)


def _grid(n_max, m_max, c_max, n_min=1, m_min=0):
    for n in range(n_min, n_max + 1):
        for m in range(m_min, m_max + 1):
            for c in range(1, c_max + 1):
                yield Params(n, m, c)


# 1 -------------------------------------------------------------------------

def ballot_counts(quick: bool = False) -> Result:
    def body():
        bad = _Failures()
        points = 0
        for p in _grid(4 if quick else 6, 3, 3):
            formula = enumeration.ballot_count(p)
            for k in range(p.n):
                got = len(enumeration.enumerate_skv(k, p))
                points += 1
                bad.check(got == formula, lambda: f"(n,m,c,k)=({p.n},{p.m},{p.c},{k}) {got}!={formula}")
        return not bad.count, bad.summary(f"{points} (n,m,c,k) points match the ballot formula")
    return _timed(1, "ballot counts", body)


# 2 -------------------------------------------------------------------------

def _example_checks():
    """(label, actual, expected) triples for the worked examples."""
    out = []

    def add(label, actual, expected):
        out.append((label, actual, expected))

    # n = 3, m = c = 1: the three families of five paths
    p = Params(3, 1, 1)
    skv_expected = {
        0: {(1, 1, 1), (0, 0, 1), (1, 0, 1), (0, 1, 1), (-1, 0, 1)},
        1: {(1, 1, 1), (1, 1, 2), (1, 2, 1), (0, 1, 1), (0, 1, 2)},
        2: {(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2), (1, 2, 3)},
    }
    words_expected = {
        0: {"NENENE", "ENENNE", "NEENNE", "ENNENE", "EENNNE"},
        1: {"NENENE", "NENNEE", "NNEENE", "ENNENE", "ENNNEE"},
        2: {"NENENE", "NENNEE", "NNEENE", "NNENEE", "NNNEEE"},
    }
    for k in range(3):
        vecs = enumeration.enumerate_skv(k, p)
        add(f"skv_{k} (n=3)", set(vecs), skv_expected[k])
        words = {paths.step_word(paths.path_of_area_vector(g, p), 0, 3) for g in vecs}
        add(f"skp_{k} words (n=3)", words, words_expected[k])
    shifted = {paths.step_word(paths.path_of_area_vector(g, p), -1, 2) for g in skv_expected[0]}
    add("shifted skp_0 words", shifted, {"ENENEN", "ENEENN", "EEENNN", "EENENN", "EENNEN"})

    # n = 14, c = 4, m = 1: a single path
    p = Params(14, 1, 4)
    xs = (0, 0, 0, 4, 4, 4, 5, 9, 13, 13, 13, 13, 13, 14)
    g = paths.area_vector_of_path(xs, p)
    add("path word (n=14)", paths.step_word(xs, 0, 14), "NNNEEEENNNENEEEENEEEENNNNNEN")
    add("area vector (n=14)", g, (4, 5, 6, 3, 4, 5, 5, 2, -1, 0, 1, 2, 3, 3))
    add("skeletal k (n=14)", [k for k in range(14) if paths.is_k_skeletal(g, k, p)], [2, 3])

    # the same parameters: a whole class and its positivity counts
    g = (3, 4, 5, 5, 2, -1, 0, 1, 2, 3, 3, 0, 1, 2)
    add("C^-14 g", cyclic.cycle_power(g, -14, p), (7, 8, 9, 9, 6, 3, 4, 5, 6, 7, 7, 4, 5, 6))
    gplus = (3, 4, 5, 6, 7, 7, 4, 5, 6, 3, 4, 5, 5, 2)
    add("Dyck representative", cyclic.dyck_representative(g, p), gplus)
    add("Dyck offset", cyclic.dyck_offset(g, p), -9)
    walk = cyclic.enumerate_class(g, p)
    gp = (4, 5, 6, 3, 4, 5, 5, 2, -1, 0, 1, 2, 3, 3)
    gpp = (2, -1, 0, 1, 2, 3, 3, 0, 1, 2, -1, 0, 1, 1)
    add("class walk", list(walk.elements), [(gplus, 0), (gp, 6), (g, 9), (gpp, 13)])
    add("class pos", [paths.pos(v) for v in walk.vectors], [14, 4, 2, 2])
    add("class run multisets", {tuple(sorted(paths.runs(v, 1))) for v in walk.vectors}, {(1, 1, 1, 3, 3, 5)})
    add("skeletal ranges",
        [[k for k in range(14) if paths.is_k_skeletal(v, k, p)] for v in walk.vectors],
        [list(range(4, 14)), [2, 3], [], [0, 1]])

    # rational parameters
    p = Params.of(2, Fraction(3, 2), Fraction(1, 2))
    half = Fraction(1, 2)
    add("Q map (1/2,2)", cyclic.map_k_to_kprime_with_offset((half, 2), 1, 0, p), ((-1, half), 6))
    add("Q map (1/2,1)", cyclic.map_k_to_kprime_with_offset((half, 1), 1, 0, p), ((0, half), 2))
    lattice = [xs for xs in itertools.combinations_with_replacement(range(4), 2)]
    ints = {k: sorted(paths.step_word(xs, 0, 3) for xs in lattice
                      if paths.is_k_skeletal(paths.area_vector_of_path(xs, p), k, p)) for k in (0, 1)}
    add("integral paths Q", ints, {0: [], 1: ["NENEE", "NNEEE"]})

    # n = 12, m = 2, c = 6: a function and its image
    p = Params(12, 2, 6)
    f = (4, 12, 6, 1, 12, 16, 1, 1, 16, 17, 1, 16)
    lp = labeled.labeled_path_of_fn(f, p)
    add("fn area vector", lp.g, (5, 7, 9, 11, 10, 10, 6, 8, 6, 8, 10, 11))
    add("fn label word", lp.w, (4, 7, 8, 11, 1, 3, 2, 5, 6, 9, 12, 10))
    walk = cyclic.enumerate_class(lp.g, p)
    add("fn class", walk.vectors, [
        lp.g,
        (6, 8, 6, 8, 10, 11, -1, 1, 3, 5, 4, 4),
        (6, 8, 10, 11, -1, 1, 3, 5, 4, 4, 0, 2),
        (-1, 1, 3, 5, 4, 4, 0, 2, 0, 2, 4, 5),
    ])
    add("fn class pos", [paths.pos(v) for v in walk.vectors], [12, 5, 1, 3])
    add("fn class runs", {tuple(sorted(paths.runs(v, 2))) for v in walk.vectors}, {(1, 1, 1, 2, 3, 4)})
    lp4 = labeled.map_labeled_k_to_kprime(lp, 7, 4, p)
    add("mapped label word", lp4.w, (2, 5, 6, 9, 12, 10, 4, 7, 8, 11, 1, 3))
    add("skf_7 -> skf_4", labeled.map_fn_k_to_kprime(f, 7, 4, p), (22, 0, 24, 19, 0, 4, 19, 19, 4, 5, 19, 4))

    # n = 6, m = 2, c = 4: chip moves
    p = Params(6, 2, 4)
    D = (4, 1, 5, 5, 14, 8)
    lp = chipfire.chip_to_labeled(D, p)
    xs = paths.path_of_area_vector(lp.g, p)
    add("chip path", xs, (1, 4, 5, 5, 8, 14))
    add("chip labels", lp.w, (2, 1, 3, 4, 6, 5))
    add("chip area vector", lp.g, (3, 2, 3, 5, 4, 0))
    add("chip word", paths.step_word(xs, 0, 14), "ENEEENENNEEENEEEEEEN")
    add("fire {5}", (chipfire.fire(D, [5], p), chipfire.can_fire(D, [5], p)), ((6, 3, 7, 7, 0, 10), True))
    add("fire sizes >= 2",
        [any(chipfire.can_fire(D, S, p) for S in itertools.combinations(range(1, 7), f)) for f in range(2, 7)],
        [False] * 5)
    add("borrow sizes", [chipfire.exists_legal_borrow_of_size(D, q, p) for q in range(1, 7)],
        [True, True, False, True, True, True])
    add("borrow sizes (scan)", [chipfire.exists_legal_borrow_of_size_brute(D, q, p) for q in range(1, 7)],
        [True, True, False, True, True, True])
    B = chipfire.borrow(D, [2, 1, 3, 4], p)
    add("borrow {1,2,3,4}", B, (12, 9, 13, 13, 6, 0))
    add("borrowed area vector", chipfire.chip_to_labeled(B, p).g, (4, 0, -1, -2, -1, 1))

    # first return, m = 2, k = 1
    word = "N" + "NEEE" + "E" + "NNENEEENNEEENEEEEEE"
    add("phi", firstreturn.phi(word, 2, 1), "NNEEEE" "EEN" "NENEEE" "ENNEEE" "NEEE")
    add("psi(phi)", firstreturn.psi(firstreturn.phi(word, 2, 1), 2, 1), word)
    add("decompose", firstreturn.decompose(word, 2), ("NEEE", "E", "NNENEEENNEEENEEEEEE"))
    return out


def worked_examples(quick: bool = False) -> Result:
    def body():
        checks = _example_checks()
        bad = [label for label, actual, expected in checks if actual != expected]
        if bad:
            return False, f"{len(bad)}/{len(checks)} mismatched: " + ", ".join(bad[:5])
        return True, f"{len(checks)} worked-example values reproduced exactly"
    return _timed(2, "worked examples", body)


# 3 -------------------------------------------------------------------------

def parking_counts(quick: bool = False) -> Result:
    def body():
        bad = _Failures()
        points = largest = 0
        for p in _grid(4 if quick else 5, 2, 2):
            formula = enumeration.parking_count(p)
            for k in range(p.n):
                got = len(enumeration.enumerate_skf(k, p))
                points += 1
                largest = max(largest, got)
                bad.check(got == formula, lambda: f"(n,m,c,k)=({p.n},{p.m},{p.c},{k}) {got}!={formula}")
        return not bad.count, bad.summary(f"{points} points match the parking formula, largest {largest}")
    return _timed(3, "parking counts", body)


# 4 -------------------------------------------------------------------------

def _targets(k: int, n: int, everything: bool):
    return range(n) if everything else sorted({(k + 1) % n, n - 1 - k})


def bijection_round_trips(quick: bool = False) -> Result:
    """Every element goes k -> k' -> k and lands on the k' family.

    Small heights use all pairs (k, k'); larger ones use k' = k+1 (mod n)
    and k' = n-1-k, which already chains every family to every other.
    """
    def body():
        bad = _Failures()
        calls = 0
        for p in _grid(4 if quick else 6, 3, 3):
            fams = [enumeration.enumerate_skv(k, p) for k in range(p.n)]
            sets = [set(f) for f in fams]
            for k in range(p.n):
                for kp in _targets(k, p.n, p.n <= 4):
                    image = set()
                    for g in fams[k]:
                        h = cyclic.map_k_to_kprime(g, k, kp, p)
                        back = cyclic.map_k_to_kprime(h, kp, k, p)
                        calls += 2
                        image.add(h)
                        bad.check(back == g, lambda: f"skv {p} {k}->{kp}: {g}")
                    bad.check(image == sets[kp], lambda: f"skv image {p} {k}->{kp}")
        for p in _grid(4 if quick else 5, 2, 2):
            fams = [enumeration.enumerate_skf(k, p) for k in range(p.n)]
            sets = [set(f) for f in fams]
            for k in range(p.n):
                for kp in _targets(k, p.n, p.n <= 3):
                    image = set()
                    for f in fams[k]:
                        h = labeled.map_fn_k_to_kprime(f, k, kp, p)
                        back = labeled.map_fn_k_to_kprime(h, kp, k, p)
                        calls += 2
                        image.add(h)
                        bad.check(back == f, lambda: f"skf {p} {k}->{kp}: {f}")
                    bad.check(image == sets[kp], lambda: f"skf image {p} {k}->{kp}")
        words = 0
        for m in (1, 2, 3):
            for n in range(1, (4 if quick else 6) + 1):
                dyck = firstreturn.augmented_dyck_paths(n, m)
                bad.check(len(dyck) == firstreturn.fuss_catalan(n, m), f"|D_{n}^{m}|={len(dyck)}")
                for k in range(n):
                    image = set()
                    for word in dyck:
                        out = firstreturn.phi(word, m, k)
                        image.add(out)
                        words += 1
                        bad.check(firstreturn.is_augmented_skeletal(out, m, k)
                                  and firstreturn.psi(out, m, k) == word,
                                  lambda: f"phi m={m} k={k}: {word}")
                    bad.check(len(image) == len(dyck), f"phi not injective n={n} m={m} k={k}")
        return not bad.count, bad.summary(f"{calls} map calls and {words} phi/psi round trips exact")
    return _timed(4, "bijection round trips", body)


# 5 -------------------------------------------------------------------------

def chip_equivalence(quick: bool = False) -> Result:
    def body():
        bad = _Failures()
        checked = 0
        for p in _grid(3 if quick else 4, 2, 2):
            top = p.m * (p.n - 1) + p.c - 1
            for D in itertools.product(range(top + 1), repeat=p.n):
                for k in range(p.n):
                    a = chipfire.is_k_skeletal_chip(D, k, p)
                    b = chipfire.is_k_skeletal_chip_fast(D, k, p)
                    c = labeled.is_k_skeletal_fn(D, k, p)
                    checked += 1
                    bad.check(a == b == c, lambda: f"{p} D={D} k={k}: {a},{b},{c}")
        return not bad.count, bad.summary(f"{checked} (D, k) pairs agree across three predicates")
    return _timed(5, "chip equivalence", body)


# 6 -------------------------------------------------------------------------

def kernels_for(p: Params):
    """Built-in kernels whose center is ``p.c``."""
    out = [stats.StatKernel.range(p.c), stats.StatKernel.trapezoid(p.m, p.c)]
    if p.c == 1:
        out += [stats.StatKernel.indicator(), stats.StatKernel.slope(p.m)]
    return out


def random_area_vector(rng: random.Random, p: Params, spread: int = 6) -> tuple:
    g = [rng.randint(-spread, spread)]
    for _ in range(p.n - 1):
        g.append(g[-1] + p.m - rng.randint(0, spread))
    return tuple(g)


def statistic_invariance(quick: bool = False) -> Result:
    def body():
        rng = random.Random(SEED)
        bad = _Failures()
        samples = 1000 if quick else 10_000
        kinds = [("range", None), ("trapezoid", None), ("indicator", 1), ("slope", 1)]
        for kind, need_c in kinds:
            for _ in range(samples):
                n = rng.randint(1, 8)
                m = rng.randint(0, 3)
                c = need_c or rng.randint(1, 3)
                p = Params(n, m, c)
                kernel = stats.kernel_for(f"{kind}-dinv", p)
                g = random_area_vector(rng, p)
                a = stats.stat(g, kernel)
                b = stats.stat(cyclic.cycle(g, p), kernel)
                bad.check(a == b, lambda: f"{kind} {p} g={g}")
        polys = 0
        for p in _grid(4 if quick else 5, 2, 2):
            for kernel in kernels_for(p):
                ref = None
                for k in range(p.n):
                    poly = stats.generating_poly(enumeration.enumerate_skv(k, p), lambda g: stats.stat(g, kernel))
                    polys += 1
                    ref = ref or poly
                    bad.check(poly == ref, lambda: f"{kernel.kind} {p} k={k}: {poly} vs {ref}")
        for n in range(1, 5):
            p = Params(n, 1, 1)
            ref = None
            for k in range(n):
                fam = [labeled.labeled_path_of_fn(f, p) for f in enumeration.enumerate_skf(k, p)]
                poly = stats.generating_poly(fam, lambda lp: stats.labeled_dinv(lp.g, lp.w, p))
                polys += 1
                ref = ref or poly
                bad.check(poly == ref, lambda: f"labeled dinv n={n} k={k}: {poly} vs {ref}")
        return not bad.count, bad.summary(
            f"{4 * samples} pointwise checks and {polys} polynomials agree across k")
    return _timed(6, "statistic invariance", body)


# 7 -------------------------------------------------------------------------

def first_return_recursion(quick: bool = False) -> Result:
    def body():
        bad = _Failures()
        for m in range(0, 4):
            for n in range(0, 9):
                a = firstreturn.fuss_catalan_recursive(n, m)
                b = firstreturn.fuss_catalan(n, m)
                bad.check(a == b, f"n={n} m={m}: {a}!={b}")
        return not bad.count, bad.summary("recursion equals the closed form for n<=8, m<=3")
    return _timed(7, "first-return recursion", body)


# 8 -------------------------------------------------------------------------

def property_suite(quick: bool = False) -> Result:
    def body():
        rng = random.Random(SEED + 8)
        bad = _Failures()
        samples = 1000 if quick else 10_000
        for _ in range(samples):
            n, m, c = rng.randint(1, 8), rng.randint(0, 3), rng.randint(1, 4)
            p = Params(n, m, c)
            g = random_area_vector(rng, p)
            xs = paths.path_of_area_vector(g, p)
            bad.check(paths.area_vector_of_path(xs, p) == g, lambda: f"path round trip {p} {g}")

            D = tuple(rng.randint(-5, 20) for _ in range(n))
            S = [v for v in range(1, n + 1) if rng.random() < 0.5] or [1]
            bad.check(chipfire.borrow(chipfire.fire(D, S, p), S, p) == D, lambda: f"fire/borrow {p} {D} {S}")
            bad.check(chipfire.fire(chipfire.borrow(D, S, p), S, p) == D, lambda: f"borrow/fire {p} {D} {S}")

            h = cyclic.dyck_representative(g, p) if cyclic.is_in_S(g, p) else None
            if h is None:
                continue
            walk = cyclic.enumerate_class(g, p)
            ref = paths.run_multiset(h, p)
            bad.check(g in walk.vectors and all(paths.run_multiset(v, p) == ref for v in walk.vectors),
                      lambda: f"runs along class {p} {g}")
            members = walk.vectors
            if n <= 6:
                bad.check(sorted(v for v, _ in cyclic.brute_force_class(g, p)) == sorted(members),
                          lambda: f"class walk vs scan {p} {g}")
            for k in range(n):
                hits = [v for v in members if paths.is_k_skeletal(v, k, p)]
                bad.check(len(hits) == 1 and hits[0] == cyclic.k_skeletal_representative(g, k, p)[0],
                          lambda: f"unique rep {p} {g} k={k}: {len(hits)}")
        # exhaustive: every S-vector over small parameters sits in a class
        # with exactly one k-skeletal member for each k
        classes = 0
        for p in _grid(4, 2, 2):
            dycks = enumeration.enumerate_skv(p.n - 1, p)
            seen = set()
            for g in dycks:
                members = cyclic.enumerate_class(g, p).vectors
                seen.update(members)
                classes += 1
                for k in range(p.n):
                    bad.check(sum(paths.is_k_skeletal(v, k, p) for v in members) == 1,
                              lambda: f"exhaustive unique {p} {g} k={k}")
            for k in range(p.n):
                bad.check(set(enumeration.enumerate_skv(k, p)) <= seen, lambda: f"orphan skv {p} k={k}")
        return not bad.count, bad.summary(f"{samples} random samples and {classes} exhaustive classes clean")
    return _timed(8, "property suite", body)


# 9 -------------------------------------------------------------------------

def dinv_area_offset(quick: bool = False) -> Result:
    def body():
        p = Params(3, 1, 1)
        top = enumeration.enumerate_skv(p.n - 1, p)
        normalized = stats.Poly.from_exponents(paths.area(g) - p.n for g in top)
        raw = stats.Poly.from_exponents(paths.area(g) for g in top)
        notes = []
        ok = True
        for k in range(p.n):
            d = stats.generating_poly(enumeration.enumerate_skv(k, p), stats.dinv)
            if d != normalized:
                ok = False
                notes.append(f"k={k}: dinv {d} vs area-n {normalized}")
            if d == raw:
                ok = False
                notes.append(f"k={k}: unnormalized identity unexpectedly holds")
        detail = f"dinv = {normalized} = area-n for all k; area gives {raw}, which differs"
        return ok, "; ".join(notes) if notes else detail
    return _timed(9, "dinv vs area offset", body)


CRITERIA = [
    ballot_counts,
    worked_examples,
    parking_counts,
    bijection_round_trips,
    chip_equivalence,
    statistic_invariance,
    first_return_recursion,
    property_suite,
    dinv_area_offset,
]


def run_all(quick: bool = False, log: Optional[Callable[[str], None]] = print) -> List[Result]:
    results = []
    for check in CRITERIA:
        res = check(quick)
        results.append(res)
        if log:
            log(res.line())
    return results
