"""Cross-verification suites: every closed form, bijection and series
identity diffed against the brute-force enumeration oracle.

Each check is a pure function returning a CheckResult; suites are fixed
ordered lists of checks so reports are deterministic regardless of how
they are executed.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from . import bijections, formulas
from .enumeration import StatKind, count_table, enumerate_paths, table_polynomial
from .paths import stats
from .series import (
    IdentityReport,
    ONE,
    X_INV,
    ZSeries,
    X,
    catalan_double_ascent_series,
    catalan_peak_series,
    catalan_valley_series,
    flawed_double_ascent_series,
    flawed_peak_series,
    oracle_coefficient_poly,
    peak_discriminant,
    run_identity_suite,
)

THREADS_ENV_VAR = "DYCKFLAWS_THREADS"


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "check": self.name,
            "status": "pass" if self.passed else "fail",
            "detail": self.detail or None,
        }


def _ok(name: str) -> CheckResult:
    return CheckResult(name, True)


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


# --- oracle self-consistency ----------------------------------------------

def check_row_sums(n_max: int) -> CheckResult:
    """Every flaw class of every statistic table sums to a Catalan number."""
    name = "row_sums_are_catalan"
    for n in range(n_max + 1):
        cn = formulas.catalan(n)
        for stat in StatKind:
            table = count_table(n, stat)
            for m in range(n + 1):
                if table.row_sum(m) != cn:
                    return _fail(name, f"n={n} stat={stat.value} m={m}")
    return _ok(name)


def check_grand_totals(n_max: int) -> CheckResult:
    name = "totals_are_central_binomials"
    for n in range(n_max + 1):
        for stat in StatKind:
            if count_table(n, stat).total() != comb(2 * n, n):
                return _fail(name, f"n={n} stat={stat.value}")
    return _ok(name)


def check_reciprocity(n_max: int) -> CheckResult:
    """Peak counts satisfy (m, k) -> (n-m, n-k) symmetry."""
    name = "peak_reciprocity"
    for n in range(1, n_max + 1):
        table = count_table(n, StatKind.PEAK)
        for m in range(n + 1):
            for k in range(n + 1):
                if table.count(m, k) != table.count(n - m, n - k):
                    return _fail(name, f"n={n} m={m} k={k}")
    return _ok(name)


def check_valley_complement(n_max: int) -> CheckResult:
    """Valley table at (m, k) equals peak table at (n-m, k)."""
    name = "valley_table_is_complemented_peak_table"
    for n in range(n_max + 1):
        peaks = count_table(n, StatKind.PEAK)
        valleys = count_table(n, StatKind.VALLEY)
        for m in range(n + 1):
            for k in range(n + 1):
                if valleys.count(m, k) != peaks.count(n - m, k):
                    return _fail(name, f"n={n} m={m} k={k}")
    return _ok(name)


def check_descent_ascent(n_max: int) -> CheckResult:
    name = "descent_table_equals_ascent_table"
    for n in range(n_max + 1):
        if (
            count_table(n, StatKind.DOUBLE_DESCENT).entries
            != count_table(n, StatKind.DOUBLE_ASCENT).entries
        ):
            return _fail(name, f"n={n}")
    return _ok(name)


def check_valley_peak_shift(n_max: int) -> CheckResult:
    """On flawless paths, k valleys means k+1 peaks."""
    name = "flawless_valley_peak_shift"
    for n in range(1, n_max + 1):
        peaks = count_table(n, StatKind.PEAK)
        valleys = count_table(n, StatKind.VALLEY)
        for k in range(n + 1):
            if valleys.count(0, k) != peaks.count(0, k + 1):
                return _fail(name, f"n={n} k={k}")
    return _ok(name)


# --- closed forms against the oracle ---------------------------------------

def check_narayana_peak(n_max: int) -> CheckResult:
    name = "flawless_peaks_are_narayana"
    for n in range(1, n_max + 1):
        table = count_table(n, StatKind.PEAK)
        for k in range(n + 2):
            if table.count(0, k) != formulas.narayana_peak(n, k):
                return _fail(name, f"n={n} k={k}")
    return _ok(name)


def check_ascent_chung_feller(n_max: int) -> CheckResult:
    """Double-ascent counts are flaw-independent and Narayana-valued."""
    name = "ascent_counts_flaw_independent"
    for n in range(1, n_max + 1):
        table = count_table(n, StatKind.DOUBLE_ASCENT)
        for m in range(n + 1):
            for k in range(n + 1):
                if table.count(m, k) != formulas.narayana_ascent(n, k):
                    return _fail(name, f"n={n} m={m} k={k}")
    return _ok(name)


def check_one_flaw(n_max: int) -> CheckResult:
    name = "one_flaw_closed_form"
    for n in range(2, n_max + 1):
        table = count_table(n, StatKind.PEAK)
        for k in range(n + 1):
            if table.count(1, k) != formulas.one_flaw_peak(n, k):
                return _fail(name, f"n={n} k={k}")
    return _ok(name)


def check_pair_sums(n_max: int) -> CheckResult:
    """p(n,m,k) + p(n,m,n-k) is flaw-independent with the stated value."""
    name = "pair_sum_closed_form"
    for n in range(2, n_max + 1):
        table = count_table(n, StatKind.PEAK)
        for k in range(1, n // 2 + 1):
            expected = formulas.peak_pair_sum(n, k)
            for m in range(1, n):
                if table.count(m, k) + table.count(m, n - k) != expected:
                    return _fail(name, f"n={n} m={m} k={k} (reflection form)")
                if table.count(m, k) + table.count(n - m, k) != expected:
                    return _fail(name, f"n={n} m={m} k={k} (complement form)")
    return _ok(name)


def check_central_peak(n_max: int) -> CheckResult:
    name = "central_coefficient_closed_form"
    for half in range(1, n_max // 2 + 1):
        n = 2 * half
        table = count_table(n, StatKind.PEAK)
        expected = formulas.central_peak(half)
        for m in range(1, n):
            if table.count(m, half) != expected:
                return _fail(name, f"n={n} m={m}")
    return _ok(name)


def check_recurrence(n_max: int) -> CheckResult:
    name = "recurrence_matches_oracle"
    for n in range(n_max + 1):
        for m in range(n + 1):
            if formulas.recurrence_peak_poly(n, m) != table_polynomial(
                n, m, StatKind.PEAK
            ):
                return _fail(name, f"n={n} m={m}")
    return _ok(name)


def check_narayana_row_sums(n_max: int) -> CheckResult:
    name = "narayana_row_sums_are_catalan"
    for n in range(1, n_max + 1):
        cn = formulas.catalan(n)
        peak_sum = sum(formulas.narayana_peak(n, k) for k in range(n + 1))
        ascent_sum = sum(formulas.narayana_ascent(n, k) for k in range(n))
        if peak_sum != cn or ascent_sum != cn:
            return _fail(name, f"n={n}")
    return _ok(name)


def check_recurrence_index_forms(n_max: int) -> CheckResult:
    name = "recurrence_index_forms_agree"
    for n in range(min(n_max, 8) + 1):
        for m in range(n + 1):
            if formulas._recurrence_statement_form(n, m) != formulas.recurrence_peak_poly(n, m):
                return _fail(name, f"n={n} m={m}")
    return _ok(name)


# --- bijections --------------------------------------------------------------

def check_involutions(n_max: int) -> CheckResult:
    """complement and reverse_complement square to the identity and
    transport statistics as advertised."""
    name = "involutions_and_stat_transport"
    for n in range(min(n_max, 8) + 1):
        for p in enumerate_paths(n):
            sp = stats(p)
            c = bijections.complement(p)
            if bijections.complement(c) != p:
                return _fail(name, f"complement not involutive on {p}")
            sc = stats(c)
            if (sc.flaws, sc.peaks, sc.valleys, sc.double_ascents,
                    sc.double_descents) != (
                    n - sp.flaws, sp.valleys, sp.peaks,
                    sp.double_descents, sp.double_ascents):
                return _fail(name, f"complement transport on {p}")
            r = bijections.reverse_complement(p)
            if bijections.reverse_complement(r) != p:
                return _fail(name, f"reverse_complement not involutive on {p}")
            sr = stats(r)
            if (sr.flaws, sr.peaks, sr.valleys, sr.double_ascents,
                    sr.double_descents) != (
                    sp.flaws, sp.peaks, sp.valleys,
                    sp.double_descents, sp.double_ascents):
                return _fail(name, f"reverse_complement transport on {p}")
    return _ok(name)


def check_flaw_step_bijection(n_max: int) -> CheckResult:
    """cf_step is a double-ascent-preserving bijection between adjacent
    flaw classes, with cf_step_inverse its two-sided inverse."""
    name = "flaw_step_bijection"
    for n in range(1, n_max + 1):
        buckets: dict = defaultdict(dict)
        for p in enumerate_paths(n):
            s = stats(p)
            buckets[s.flaws][p] = s.double_ascents
        cn = formulas.catalan(n)
        for m in range(n):
            images = set()
            for p, ascents in buckets[m].items():
                q = bijections.cf_step(p)
                sq = stats(q)
                if sq.flaws != m + 1:
                    return _fail(name, f"n={n} {p}: flaws {sq.flaws} != {m + 1}")
                if sq.double_ascents != ascents:
                    return _fail(name, f"n={n} {p}: ascent count changed")
                if bijections.cf_step_inverse(q) != p:
                    return _fail(name, f"n={n} {p}: inverse mismatch")
                images.add(q)
            if len(images) != cn or images != set(buckets[m + 1]):
                return _fail(name, f"n={n} m={m}: image is not the next class")
        for m in range(1, n + 1):
            for q in buckets[m]:
                if bijections.cf_step(bijections.cf_step_inverse(q)) != q:
                    return _fail(name, f"n={n} {q}: step of inverse mismatch")
    return _ok(name)


# --- series ------------------------------------------------------------------

def check_series_oracle_match(order: int, n_max: int) -> CheckResult:
    name = "trivariate_series_match_oracle"
    limit = min(order, n_max)
    peak = flawed_peak_series(order)
    ascent = flawed_double_ascent_series(order)
    for n in range(limit + 1):
        if peak.coeff(n) != oracle_coefficient_poly(n, StatKind.PEAK):
            return _fail(name, f"peak series at n={n}")
        if ascent.coeff(n) != oracle_coefficient_poly(n, StatKind.DOUBLE_ASCENT):
            return _fail(name, f"ascent series at n={n}")
    return _ok(name)


def check_series_roundtrips(order: int) -> CheckResult:
    """Every inverse and square root taken in the suite multiplies back."""
    name = "inverse_and_sqrt_roundtrips"
    p0 = catalan_peak_series(order)
    v0 = catalan_valley_series(order)
    a0 = catalan_double_ascent_series(order)
    v0y = v0.substitute_yz()
    a0y = a0.substitute_yz()
    one = ZSeries.constant(1, order)
    inverted = [
        v0,
        1 - ((p0 + (X - 1)) * v0y).shift_z(1),
        1 - (a0 - 1) * (a0y - 1) * X,
    ]
    for i, s in enumerate(inverted):
        if s * s.inverse() != one:
            return _fail(name, f"inverse roundtrip #{i}")
    for i, s in enumerate([peak_discriminant(order),
                           peak_discriminant(order).substitute_yz()]):
        root = s.sqrt()
        if root * root != s:
            return _fail(name, f"sqrt roundtrip #{i}")
    return _ok(name)


def check_series_exponents(order: int) -> CheckResult:
    """Final series carry no negative exponents; the auxiliary pair-sum
    series is allowed its lone x^-1 term at order 1, which cancels in
    the identity it feeds."""
    name = "final_series_exponents_nonnegative"
    p0 = catalan_peak_series(order)
    v0 = catalan_valley_series(order)
    peak_full = flawed_peak_series(order)
    ascent_full = flawed_double_ascent_series(order)
    pair_sum = (
        peak_full
        + peak_full.map_coeffs(
            lambda n, c: c.map_exponents(lambda kx, ky, n=n: (kx, n - ky))
        )
        + 2
        - v0
        - v0.substitute_yz()
        - p0
        - p0.substitute_yz()
    )
    if peak_full.has_negative_exponent():
        return _fail(name, "peak series")
    if ascent_full.has_negative_exponent():
        return _fail(name, "ascent series")
    if pair_sum.has_negative_exponent():
        return _fail(name, "pair-sum series")
    alpha = (
        p0 * (X_INV + 1)
        - (p0 * (X_INV - 1)).shift_z(1)
        - p0 * v0.inverse()
        - ZSeries.constant(X_INV, order)
    )
    for n in range(order + 1):
        if n == 1:
            continue
        if alpha.coeff(n).has_negative_exponent():
            return _fail(name, f"auxiliary series at n={n}")
    return _ok(name)


# --- suite assembly ----------------------------------------------------------

ORACLE_CHECKS: list[Callable[[int], CheckResult]] = [
    check_row_sums,
    check_grand_totals,
    check_reciprocity,
    check_valley_complement,
    check_descent_ascent,
    check_valley_peak_shift,
]

FORMULA_CHECKS: list[Callable[[int], CheckResult]] = [
    check_narayana_peak,
    check_ascent_chung_feller,
    check_one_flaw,
    check_pair_sums,
    check_central_peak,
    check_recurrence,
    check_narayana_row_sums,
    check_recurrence_index_forms,
]

BIJECTION_CHECKS: list[Callable[[int], CheckResult]] = [
    check_involutions,
    check_flaw_step_bijection,
]

SUITE_NAMES = ("oracle", "formulas", "bijections", "series")


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_all(tasks: list[Callable[[], CheckResult]], threads: int) -> list[CheckResult]:
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(task) for task in tasks]
            return [f.result() for f in futures]
    return [task() for task in tasks]


def run_suite(
    name: str, n_max: int, order: int, threads: Optional[int] = None
) -> dict:
    """Run one named suite; returns {"suite", "status", "checks", ...}."""
    threads = thread_count() if threads is None else threads
    identities: list[IdentityReport] = []
    if name == "oracle":
        checks = _run_all([lambda f=f: f(n_max) for f in ORACLE_CHECKS], threads)
    elif name == "formulas":
        checks = _run_all([lambda f=f: f(n_max) for f in FORMULA_CHECKS], threads)
    elif name == "bijections":
        checks = _run_all([lambda f=f: f(n_max) for f in BIJECTION_CHECKS], threads)
    elif name == "series":
        identities = run_identity_suite(order)
        checks = _run_all(
            [
                lambda: check_series_oracle_match(order, n_max),
                lambda: check_series_roundtrips(order),
                lambda: check_series_exponents(order),
            ],
            threads,
        )
    else:
        raise ValueError(f"unknown suite {name!r}")
    passed = all(c.passed for c in checks) and all(
        r.status == "pass" for r in identities
    )
    doc = {
        "suite": name,
        "status": "pass" if passed else "fail",
        "checks": [c.to_json_dict() for c in checks],
    }
    if name == "series":
        doc["identities"] = [r.to_json_dict() for r in identities]
    return doc


def run_suites(names, n_max: int, order: int, threads: Optional[int] = None) -> dict:
    suites = [run_suite(name, n_max, order, threads) for name in names]
    passed = all(s["status"] == "pass" for s in suites)
    return {"status": "pass" if passed else "fail", "suites": suites}
