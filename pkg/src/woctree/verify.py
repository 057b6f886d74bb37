"""Cross-engine and bijection checks shared by the CLI and the test-suite.

Each check returns ``(ok, detail)``.  Functions from :mod:`counting` are
looked up through the module at call time, so patching one of them is
visible here.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bijections, counting, engines, sequences, series
from .core import contains_perm_pattern, descents
from .treesim import enumerate_leaves, oracle_tally

__all__ = ["Check", "CheckResult", "checks", "run_checks", "SCOPES"]

SCOPES = ("quick", "all")


@dataclass(frozen=True)
class Check:
    name: str
    func: Callable[[int], tuple[bool, str]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}\t{self.name}" + (f"\t{self.detail}" if self.detail else "")


def _first_diff(label, got, want):
    for i, (g, w) in enumerate(zip(got, want), 1):
        if g != w:
            return f"{label}: n={i} got {g}, expected {w}"
    if len(got) < len(want):
        return f"{label}: only {len(got)} terms, expected {len(want)}"
    return ""


def _engines_agree(cond: str, n_max: int, which=engines.ENGINES):
    p = engines.resolve_condition(cond)
    tallies = {e: engines.run_engine(e, p, n_max) for e in which}
    ref = tallies[which[0]]
    for e, t in tallies.items():
        if t != ref:
            for col in ("a", "delta", "b", "w"):
                msg = _first_diff(f"{cond} {e}.{col} vs {which[0]}", getattr(t, col), getattr(ref, col))
                if msg:
                    return ref, msg
    return ref, ""


def _sequence_check(cond, n_max, expected, which=engines.ENGINES):
    try:
        ref, msg = _engines_agree(cond, n_max, which)
    except ArithmeticError as exc:
        return False, f"{cond}: {exc}"
    if msg:
        return False, msg
    for col, want in expected.items():
        want = want[:n_max]
        msg = _first_diff(f"{cond}.{col}", getattr(ref, col)[: len(want)], want)
        if msg:
            return False, msg
    return True, f"n<={n_max}"


def check_size2(n):
    for cond, want in (("tie", sequences.TIE_W), ("lt", sequences.LT_W), ("le", sequences.LE_W)):
        ok, msg = _sequence_check(cond, n, {"w": want}, ("sim", "formula"))
        if not ok:
            return ok, msg
    return True, f"n<={n}"


def check_strict123(n):
    return _sequence_check("strict123", n, {"a": sequences.STRICT123_A, "w": sequences.STRICT123_W})


def check_weak123(n):
    return _sequence_check("weak123", n, {"a": sequences.WEAK123_A, "w": sequences.WEAK123_W})


def check_mixed123(n):
    return _sequence_check("mixed123", n, {"a": sequences.MIXED123_A, "w": sequences.MIXED123_W})


def check_kequal(n):
    ok, msg = _sequence_check("kequal:3", n, {"w": sequences.KEQUAL3_W}, ("sim", "formula"))
    if not ok:
        return ok, msg
    two = engines.formula_tally(engines.resolve_condition("kequal:2"), n)
    tie = engines.run_engine("formula", engines.resolve_condition("tie"), n)
    k2 = [counting.counts_kequal(2, m).w for m in range(1, n + 1)]
    if two != tie or tuple(k2) != tie.w:
        return False, "kequal:2 differs from the tie condition"
    return True, f"n<={n}"


def check_mixed_eq(n):
    for cond in ("lt-eq", "le-eq"):
        ok, msg = _sequence_check(cond, n, {}, ("sim", "formula"))
        if not ok:
            return ok, msg
    for m in range(1, 3 * n):
        if counting.counts_lt_eq(m).delta != counting.lt_eq_delta_closed(m):
            return False, f"lt-eq delta_{m}: recurrence and closed form differ"
    return True, f"n<={n}"


def check_series_identities(n):
    order = max(n, 8) + 4
    checks = [
        ("G", "Gderiv", order), ("L", "Lderiv", order),
    ]
    for left, right, N in checks:
        if not series.gf(left, N).agrees_with(series.gf(right, N), N):
            return False, f"{left} != {right} to order {N}"
    N = 2 * order
    x = series.x_series(N)
    cat = series.gf("C", N)
    lhs = series.gf("A3", N) + 1
    rhs = cat.compose(x * (1 - x) * 2).scale(Fraction(1, 2)) + Fraction(1, 2)
    if not lhs.agrees_with(rhs, N):
        return False, "E(x,2) is not C(2x(1-x))/2"
    if not (series.gf("A4", N) + 1).agrees_with(cat.compose(x * (1 + x)), N):
        return False, "1 + A4 is not C(x(1+x))"
    ns = [series.as_count(c) for c in series.gf("C", 10).coeffs]
    if ns != [counting.catalan(m) for m in range(11)]:
        return False, "Catalan series"
    rng = random.Random(2024)
    for _ in range(20):
        s = series.TruncatedSeries([1] + [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(10)])
        if not (s.sqrt() * s.sqrt()).agrees_with(s, 10):
            return False, f"sqrt round-trip fails for {s.coeffs}"
    return True, f"orders {order}/{N}"


def check_narayana(n):
    for m in range(1, 2 * n + 1):
        total = sum(counting.narayana(m, v) for v in range(m))
        if total != counting.catalan(m):
            return False, f"sum of Narayana numbers at {m} is {total}, not C_{m}"
        paths = Counter(p.word.count("DU") for p in bijections.iter_dyck_paths(m)) if m <= 10 else None
        if paths is not None and any(paths[v] != counting.narayana(m, v) for v in range(m)):
            return False, f"valley census of Dyck paths disagrees at {m}"
    return True, f"n<={2 * n}"


def check_weighted_counts(n):
    top = min(n + 2, 10)
    for m in range(1, top + 1):
        got = (bijections.weighted_count(bijections.SEC3, m),
               bijections.weighted_count(bijections.SEC4, m),
               bijections.weighted_count(bijections.SEC5, m))
        want = (counting.counts_123(m).a, counting.counts_leq_leq(m).a, counting.counts_leq_lt(m).a)
        if got != want:
            return False, f"n={m}: weighted {got} vs formula {want}"
    return True, f"n<={top}"


def check_321(n):
    top = min(n, 8)
    for m in range(1, top + 1):
        image = {bijections.dyck_to_321avoider(p) for p in bijections.iter_dyck_paths(m)}
        if len(image) != counting.catalan(m):
            return False, f"n={m}: image has {len(image)} permutations"
        if any(contains_perm_pattern(q, (3, 2, 1)) for q in image):
            return False, f"n={m}: an image contains 321"
        for p in bijections.iter_dyck_paths(m):
            if bijections.avoider321_to_dyck(bijections.dyck_to_321avoider(p)) != p:
                return False, f"round trip fails on {p.word}"
    return True, f"n<={top}"


def _decoder_check(n, variant, cond, decode, encode):
    p = engines.resolve_condition(cond)
    for m in range(1, n + 1):
        decoded = []
        for cp in bijections.iter_colored(m, variant):
            c = decode(cp)
            if encode(c) != cp:
                return False, f"{cond}: round trip fails on {cp}"
            decoded.append(c)
        if len(set(decoded)) != len(decoded):
            return False, f"{cond}: decode is not injective at n={m}"
        if set(decoded) != set(enumerate_leaves(p, m, "active")):
            return False, f"{cond}: image differs from the active set at n={m}"
    return True, f"n<={n}"


def check_sec4_chains(n):
    return _decoder_check(min(n, 6), bijections.SEC4, "weak123",
                          bijections.prop41_decode, bijections.prop41_encode)


def check_sec5_chains(n):
    return _decoder_check(min(n, 6), bijections.SEC5, "mixed123",
                          bijections.prop51_decode, bijections.prop51_encode)


def check_phi(n):
    p = engines.resolve_condition("mixed123")
    top = min(n, 7)
    for m in range(3, top + 1):
        chains = list(enumerate_leaves(p, m, "inactive_at_n"))
        images = []
        for c in chains:
            u = bijections.phi(c)
            if bijections.phi_inverse(u) != c:
                return False, f"phi round trip fails on {c}"
            images.append(u)
        if len(set(images)) != len(images):
            return False, f"phi is not injective at n={m}"
        perms = Counter()
        for u in images:
            perms[u.perm] += 1
        by_d = Counter()
        for perm, mult in perms.items():
            d = len(descents(perm))
            if mult != 2 ** d:
                return False, f"{perm} appears {mult} times, expected 2^{d}"
            by_d[d] += 1
        for d in counting.ell213_support(m):
            if by_d[d] != counting.ell213(m, d):
                return False, f"n={m}: {by_d[d]} images with {d} descents, expected {counting.ell213(m, d)}"
        delta = sum(2 ** d * counting.ell213(m, d) for d in counting.ell213_support(m))
        if delta != len(chains):
            return False, f"n={m}: weighted sum {delta} vs {len(chains)} chains"
    return True, f"n<={top}"


def check_fubini_bound(n):
    for cond in engines.NAMED_CONDITIONS:
        t = engines.run_engine("sim", engines.resolve_condition(cond), n)
        for m in range(1, n + 1):
            f = counting.fubini(m)
            if t.w[m - 1] > f:
                return False, f"{cond}: w_{m} exceeds f_{m}"
            before = t.b[m - 2] if m >= 2 else 0
            if (t.w[m - 1] == f) != (before == 0):
                return False, f"{cond}: equality w_{m} = f_{m} misplaced"
    return True, f"n<={n}"


def check_oracle(n):
    top = min(n, 7)
    for cond in engines.NAMED_CONDITIONS:
        p = engines.resolve_condition(cond)
        if oracle_tally(p, top) != engines.run_engine("sim", p, top):
            return False, f"{cond}: oracle and tree disagree"
    return True, f"n<={top}"


def checks() -> list[Check]:
    return [
        Check("size2-sequences", check_size2),
        Check("strict123-engines", check_strict123),
        Check("weak123-engines", check_weak123),
        Check("mixed123-engines", check_mixed123),
        Check("kequal", check_kequal),
        Check("mixed-equality", check_mixed_eq),
        Check("series-identities", check_series_identities),
        Check("narayana", check_narayana),
        Check("weighted-dyck-counts", check_weighted_counts),
        Check("dyck-321", check_321),
        Check("sec4-chains", check_sec4_chains),
        Check("sec5-chains", check_sec5_chains),
        Check("phi", check_phi),
        Check("fubini-bound", check_fubini_bound),
        Check("oracle", check_oracle),
    ]


def run_checks(scope: str = "quick") -> list[CheckResult]:
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}")
    n = 6 if scope == "quick" else 9
    out = []
    for chk in checks():
        try:
            ok, detail = chk.func(n)
        except Exception as exc:  # a crash is a failed check, not a crashed report
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(chk.name, ok, detail))
    return out
