"""Identity-verification engine: expand both sides exactly, compare, report.

Every check fully expands its two sides to canonical form and compares the
serialized strings; the comparator shares no simplification logic with the
producers, so a pass can never be vacuous.  Reports are sorted by identity
name and then by parameter map, which makes the output independent of how
many worker threads computed them.

Timing is measured per report but serialized as 0 unless explicitly
requested, so that two runs of the same suite are byte-identical.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .hypergeom import (
    chu_vandermonde_rhs,
    hyp2f1_terminating,
    lemma_lhs,
    lemma_rhs,
    pochhammer,
    pochhammer_reflect,
    pochhammer_split_even,
    pochhammer_split_odd,
)
from .multipoly import MultiPoly
from .sequences import omega, seq_u, seq_v, seq_w
from .symfun import power_sum_newton, power_sum_waring, specialize_two_letters
from .theta import theta_general, theta_gp, theta_m1, theta_m2

IDENTITIES = (
    "chu_vandermonde",
    "corollary1",
    "corollary2_vs_m2",
    "fundamental",
    "lemma1",
    "pochhammer_transforms",
    "theorem1",
    "waring_vs_newton",
)

# Grid defaults, one per identity; chosen so the whole default suite stays
# well under a minute while covering the full acceptance ranges.
_DEFAULT_K = {
    "theorem1": 6,
    "corollary1": 12,
    "corollary2_vs_m2": 25,
    "lemma1": 40,
    "waring_vs_newton": 20,
}
_DEFAULT_M = {"theorem1": 5, "fundamental": 12}
_DEFAULT_N = {"theorem1": 5, "fundamental": 12}

CHU_SAMPLES = 200
_CHU_MAX_N = 12
_TRANSFORM_BASES = (
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(1),
    Fraction(-1),
    Fraction(3, 2),
    Fraction(-7, 3),
)
_TRANSFORM_MAX_N = 12


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity instance; ``status`` is pass iff lhs == rhs."""

    identity: str
    params: Mapping[str, int]
    status: str
    lhs: str
    rhs: str
    elapsed_micros: int


@dataclass
class SuiteConfig:
    """Grid bounds and execution knobs for :func:`run_suite`.

    ``None`` bounds fall back to each identity's own default.  ``rng_seed``
    only affects the randomized Chu-Vandermonde corpus.
    """

    k_max: int | None = None
    m_max: int | None = None
    n_max: int | None = None
    j_max: int | None = None
    identities: tuple[str, ...] = IDENTITIES
    jobs: int = 1
    format: str = "text"
    rng_seed: int = 1


def _report(identity: str, params: Mapping[str, int], lhs: str, rhs: str, started: int) -> VerificationReport:
    elapsed = (time.perf_counter_ns() - started) // 1000
    status = "pass" if lhs == rhs else "fail"
    return VerificationReport(identity, dict(sorted(params.items())), status, lhs, rhs, elapsed)


# Power caches shared across grid cells; all cached values are immutable.
@lru_cache(maxsize=None)
def _w_power(n: int, e: int) -> MultiPoly:
    if e == 0:
        return MultiPoly.const(1)
    return _w_power(n, e - 1) * seq_w(n)


@lru_cache(maxsize=None)
def _w_pair(n: int, m: int) -> MultiPoly:
    return seq_w(n) * seq_w(n + m)


@lru_cache(maxsize=None)
def _pair_power(n: int, m: int, r: int) -> MultiPoly:
    if r == 0:
        return MultiPoly.const(1)
    return _pair_power(n, m, r - 1) * _w_pair(n, m)


@lru_cache(maxsize=None)
def _omega_power(e: int) -> MultiPoly:
    if e == 0:
        return MultiPoly.const(1)
    return _omega_power(e - 1) * omega()


def verify_theorem1(k: int, m: int, n: int) -> VerificationReport:
    """Check ``W_n^2k + W_{n+m}^2k`` against its coefficient expansion."""
    started = time.perf_counter_ns()
    lhs = _w_power(n, 2 * k) + _w_power(n + m, 2 * k)
    rhs = MultiPoly.zero()
    for r in range(k + 1):
        rhs = rhs + theta_general(k, r, m) * _omega_power(k - r) * _pair_power(n, m, r)
    return _report("theorem1", {"k": k, "m": m, "n": n}, lhs.serialize(), rhs.serialize(), started)


def verify_fundamental(m: int, n: int) -> VerificationReport:
    """Check the quadratic case directly, without the coefficient machinery."""
    started = time.perf_counter_ns()
    wn = seq_w(n)
    wnm = seq_w(n + m)
    lhs = wn * wn + wnm * wnm
    rhs = seq_v(m) * wn * wnm + (seq_u(m) ** 2) * omega()
    return _report("fundamental", {"m": m, "n": n}, lhs.serialize(), rhs.serialize(), started)


def verify_corollary1(k_max: int) -> list[VerificationReport]:
    """General coefficients at steps 1 and 2 against their closed forms."""
    reports = []
    for k in range(1, k_max + 1):
        for r in range(k + 1):
            for m, closed in ((1, theta_m1), (2, theta_m2)):
                started = time.perf_counter_ns()
                lhs = theta_general(k, r, m).serialize()
                rhs = closed(k, r).serialize()
                reports.append(_report("corollary1", {"k": k, "r": r, "m": m}, lhs, rhs, started))
    return reports


def verify_corollary2(k_max: int) -> list[VerificationReport]:
    """Step-2 closed form against the alternative single-sum form."""
    reports = []
    for k in range(1, k_max + 1):
        for r in range(k + 1):
            started = time.perf_counter_ns()
            lhs = theta_m2(k, r).serialize()
            rhs = theta_gp(k, r).serialize()
            reports.append(_report("corollary2_vs_m2", {"k": k, "r": r}, lhs, rhs, started))
    return reports


def verify_corollaries(k_max: int) -> list[VerificationReport]:
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    return verify_corollary1(k_max) + verify_corollary2(k_max)


def verify_lemma(k_max: int, j_max: int | None = None) -> list[VerificationReport]:
    """Alternating sum vs product form over the full triangular grid."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    reports = []
    for k in range(1, k_max + 1):
        top = 2 * (k - 1) if j_max is None else min(2 * (k - 1), j_max)
        for j in range(top + 1):
            started = time.perf_counter_ns()
            lhs = str(lemma_lhs(k, j))
            rhs = str(lemma_rhs(k, j))
            reports.append(_report("lemma1", {"k": k, "j": j}, lhs, rhs, started))
    return reports


def verify_waring(k_max: int) -> list[VerificationReport]:
    """Partition expansion vs recurrence oracle, plus the two-letter collapse."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    x1 = MultiPoly.var("x1")
    x2 = MultiPoly.var("x2")
    reports = []
    for k in range(1, k_max + 1):
        started = time.perf_counter_ns()
        expansion = power_sum_waring(k)
        lhs = expansion.expr.serialize()
        rhs = power_sum_newton(k, k).expr.serialize()
        reports.append(_report("waring_vs_newton", {"k": k, "variant": 0}, lhs, rhs, started))

        started = time.perf_counter_ns()
        lhs = specialize_two_letters(expansion, x1, x2).serialize()
        rhs = (x1**k + x2**k).serialize()
        reports.append(_report("waring_vs_newton", {"k": k, "variant": 1}, lhs, rhs, started))
    return reports


def _chu_corpus(seed: int, samples: int) -> list[tuple[int, int, Fraction, Fraction]]:
    rng = random.Random(seed)
    corpus = []
    for index in range(samples):
        n = rng.randint(0, _CHU_MAX_N)
        a = Fraction(rng.randint(-12, 12), rng.randint(1, 8))
        while True:
            c = Fraction(rng.randint(-12, 12), rng.randint(1, 8))
            # (c)_j vanishes for some j <= n exactly when c is an integer
            # in (-n, 0]; those draws would be poles, not counterexamples.
            if not (n >= 1 and c.denominator == 1 and -(n - 1) <= c <= 0):
                break
        corpus.append((index, n, a, c))
    return corpus


def verify_chu(seed: int, samples: int = CHU_SAMPLES) -> list[VerificationReport]:
    """Seeded random terminating-sum instances against the closed form."""
    reports = []
    for index, n, a, c in _chu_corpus(seed, samples):
        started = time.perf_counter_ns()
        lhs = str(hyp2f1_terminating(n, a, c))
        rhs = str(chu_vandermonde_rhs(n, a, c))
        params = {
            "sample": index,
            "n": n,
            "a_num": a.numerator,
            "a_den": a.denominator,
            "c_num": c.numerator,
            "c_den": c.denominator,
        }
        reports.append(_report("chu_vandermonde", params, lhs, rhs, started))
    return reports


def verify_pochhammer_transforms() -> list[VerificationReport]:
    """Fixed corpus for the three rising-factorial transformation rules."""
    reports = []
    for a in _TRANSFORM_BASES:
        base_params = {"a_num": a.numerator, "a_den": a.denominator}
        for n in range(_TRANSFORM_MAX_N + 1):
            started = time.perf_counter_ns()
            lhs = str(pochhammer_split_even(a, n))
            rhs = str(pochhammer(a, 2 * n))
            reports.append(
                _report("pochhammer_transforms", {"op": 0, "n": n, **base_params}, lhs, rhs, started)
            )
            started = time.perf_counter_ns()
            lhs = str(pochhammer_split_odd(a, n))
            rhs = str(pochhammer(a, 2 * n + 1))
            reports.append(
                _report("pochhammer_transforms", {"op": 1, "n": n, **base_params}, lhs, rhs, started)
            )
        for N in range(_TRANSFORM_MAX_N + 1):
            for n in range(N + 1):
                if not pochhammer(-a - N + 1, n):
                    continue  # reflection denominator vanishes; out of domain
                started = time.perf_counter_ns()
                lhs = str(pochhammer_reflect(a, N, n))
                rhs = str(pochhammer(a, N - n))
                reports.append(
                    _report(
                        "pochhammer_transforms",
                        {"op": 2, "N": N, "n": n, **base_params},
                        lhs,
                        rhs,
                        started,
                    )
                )
    return reports


def _sort_key(report: VerificationReport):
    return (report.identity, tuple(sorted(report.params.items())))


def _validate_config(cfg: SuiteConfig) -> None:
    unknown = set(cfg.identities) - set(IDENTITIES)
    if unknown:
        raise ValueError(f"unknown identities: {sorted(unknown)}")
    if cfg.jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {cfg.jobs}")
    needs_k = set(cfg.identities) & set(_DEFAULT_K)
    if needs_k and cfg.k_max is not None and cfg.k_max < 1:
        raise ValueError(f"k_max must be >= 1 for {sorted(needs_k)}, got {cfg.k_max}")
    for name, value in (("m_max", cfg.m_max), ("n_max", cfg.n_max), ("j_max", cfg.j_max)):
        if value is not None and value < 0:
            raise ValueError(f"{name} must be >= 0, got {value}")


def _suite_thunks(cfg: SuiteConfig) -> list[Callable[[], list[VerificationReport]]]:
    thunks: list[Callable[[], list[VerificationReport]]] = []
    selected = set(cfg.identities)

    def bound(explicit: int | None, defaults: Mapping[str, int], identity: str) -> int:
        return explicit if explicit is not None else defaults[identity]

    if "theorem1" in selected:
        k_top = bound(cfg.k_max, _DEFAULT_K, "theorem1")
        m_top = bound(cfg.m_max, _DEFAULT_M, "theorem1")
        n_top = bound(cfg.n_max, _DEFAULT_N, "theorem1")
        for k in range(1, k_top + 1):
            for m in range(m_top + 1):
                for n in range(n_top + 1):
                    thunks.append(lambda k=k, m=m, n=n: [verify_theorem1(k, m, n)])
    if "fundamental" in selected:
        m_top = bound(cfg.m_max, _DEFAULT_M, "fundamental")
        n_top = bound(cfg.n_max, _DEFAULT_N, "fundamental")
        for m in range(m_top + 1):
            for n in range(n_top + 1):
                thunks.append(lambda m=m, n=n: [verify_fundamental(m, n)])
    if "corollary1" in selected:
        k_top = bound(cfg.k_max, _DEFAULT_K, "corollary1")
        thunks.append(lambda k_top=k_top: verify_corollary1(k_top))
    if "corollary2_vs_m2" in selected:
        k_top = bound(cfg.k_max, _DEFAULT_K, "corollary2_vs_m2")
        thunks.append(lambda k_top=k_top: verify_corollary2(k_top))
    if "lemma1" in selected:
        k_top = bound(cfg.k_max, _DEFAULT_K, "lemma1")
        thunks.append(lambda k_top=k_top: verify_lemma(k_top, cfg.j_max))
    if "waring_vs_newton" in selected:
        k_top = bound(cfg.k_max, _DEFAULT_K, "waring_vs_newton")
        thunks.append(lambda k_top=k_top: verify_waring(k_top))
    if "chu_vandermonde" in selected:
        thunks.append(lambda: verify_chu(cfg.rng_seed))
    if "pochhammer_transforms" in selected:
        thunks.append(verify_pochhammer_transforms)
    return thunks


def run_suite(cfg: SuiteConfig) -> tuple[list[VerificationReport], dict[str, int]]:
    """Run all selected grids, possibly on several threads, in stable order."""
    _validate_config(cfg)
    thunks = _suite_thunks(cfg)
    if cfg.jobs == 1:
        batches = [thunk() for thunk in thunks]
    else:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            batches = list(pool.map(lambda thunk: thunk(), thunks))
    reports = sorted((report for batch in batches for report in batch), key=_sort_key)
    passed = sum(1 for report in reports if report.status == "pass")
    summary = {"total": len(reports), "pass": passed, "fail": len(reports) - passed}
    return reports, summary


def render_json(reports: Iterable[VerificationReport], summary: Mapping[str, int], timings: bool = False) -> str:
    lines = []
    for report in reports:
        lines.append(
            json.dumps(
                {
                    "identity": report.identity,
                    "params": report.params,
                    "status": report.status,
                    "lhs": report.lhs,
                    "rhs": report.rhs,
                    "elapsed_micros": report.elapsed_micros if timings else 0,
                }
            )
        )
    lines.append(json.dumps({"total": summary["total"], "pass": summary["pass"], "fail": summary["fail"]}))
    return "\n".join(lines) + "\n"


def render_text(reports: Iterable[VerificationReport], summary: Mapping[str, int], timings: bool = False) -> str:
    lines = []
    for report in reports:
        params = " ".join(f"{key}={value}" for key, value in report.params.items())
        line = f"{report.status} {report.identity} {params}"
        if timings:
            line += f" ({report.elapsed_micros} us)"
        lines.append(line)
    lines.append(f"total={summary['total']} pass={summary['pass']} fail={summary['fail']}")
    return "\n".join(lines) + "\n"
