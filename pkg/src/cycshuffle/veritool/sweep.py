"""
Exhaustive and sampled verification sweeps.

Each selected check runs over every canonical pair with ``m + n`` up to
``max_total`` and every ``k`` in ``0..m+n-1``.  The work is cut into units
``(check, total, m)``; units may run in worker processes, and results are
merged in unit order so the report does not depend on ``jobs``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .. import theorems
from ..errors import DomainError, IntegralityError, ResourceGuardError
from ..permcore import (
    LinearPerm,
    cyclic_descent_number,
    cyclic_major_index,
    descent_number,
    major_index,
    split,
)
from ..qpoly import ZERO, QPoly
from ..shuffle import (
    DEFAULT_ORACLE_BOUND,
    cyclic_shuffles,
    cyclic_shuffles_oracle,
    interleavings,
)
from ..theorems import CyclicShufflePair, PsiImage, binomial
from . import pairs as pairgen

__all__ = [
    "THEOREMS",
    "EXHAUSTIVE_LIMIT",
    "SAMPLE_LIMIT",
    "SCHEMA_VERSION",
    "SweepConfig",
    "VerificationReport",
    "run_sweep",
    "check_stanley",
    "check_cyclic",
    "check_agrr",
    "check_bijection",
    "check_counts",
]

THEOREMS = ("stanley", "cyclic", "agrr", "bijection", "counts")
# linear pairs on N letters number (N+1)!, so N = 9 is already ~10 min of CPU
EXHAUSTIVE_LIMIT = 9
SAMPLE_LIMIT = 14
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SweepConfig:
    max_total: int = 8
    oracle_bound: Optional[int] = None
    theorems: tuple[str, ...] = THEOREMS
    sample: Optional[tuple[int, int]] = None
    sample_total: Optional[int] = None
    output_format: str = "json"
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.oracle_bound is None:
            object.__setattr__(self, "oracle_bound", min(7, self.max_total))
        if self.sample is not None and self.sample_total is None:
            object.__setattr__(self, "sample_total", self.max_total + 2)
        unknown = set(self.theorems) - set(THEOREMS)
        if unknown:
            raise ValueError(f"unknown theorems {sorted(unknown)}")
        object.__setattr__(self, "theorems", tuple(t for t in THEOREMS if t in self.theorems))
        if self.max_total < 2:
            raise ValueError("max_total must be at least 2")
        if self.oracle_bound > self.max_total:
            raise ValueError("oracle_bound may not exceed max_total")
        if self.output_format not in ("json", "tsv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    def echo(self) -> dict:
        """The config as reported; ``jobs`` is left out since it cannot change results."""
        sample = None
        if self.sample is not None:
            sample = {"count": self.sample[0], "seed": self.sample[1], "total": self.sample_total}
        return {
            "max_total": self.max_total,
            "oracle_bound": self.oracle_bound,
            "theorems": list(self.theorems),
            "sample": sample,
            "output_format": self.output_format,
        }


@dataclass
class VerificationReport:
    config: SweepConfig
    cases_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0
    rollup: dict[str, dict[str, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "config": self.config.echo(),
            "cases_checked": self.cases_checked,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms,
            "rollup": self.rollup,
        }


def _poly_failure(theorem: str, pair: str, k, expected: QPoly, actual: QPoly, witness) -> dict:
    return {
        "theorem": theorem,
        "pair": pair,
        "k": k,
        "expected": expected.to_pairs(),
        "actual": actual.to_pairs(),
        "expected_text": str(expected),
        "actual_text": str(actual),
        "witness": witness,
    }


def _plain_failure(theorem: str, pair: str, k, expected, actual, witness) -> dict:
    return {
        "theorem": theorem,
        "pair": pair,
        "k": k,
        "expected": expected,
        "actual": actual,
        "expected_text": str(expected),
        "actual_text": str(actual),
        "witness": witness,
    }


def _linear_label(sigma, pi) -> str:
    return ",".join(map(str, sigma)) + " | " + ",".join(map(str, pi))


# Each checker returns (cases, failures) for one instance.  "expected" is the
# closed form, "actual" the brute-force value.

def check_stanley(sigma: tuple, pi: tuple) -> tuple[int, list[dict]]:
    total = len(sigma) + len(pi)
    lhs = theorems.shuffle_maj_gfs(sigma, pi)
    failures = []
    for k in range(total):
        rhs = theorems.stanley_rhs(sigma, pi, k)
        got = lhs.get(k, ZERO)
        if rhs != got:
            witness = {"des": descent_number(sigma), "des_pi": descent_number(pi),
                       "maj": major_index(sigma), "maj_pi": major_index(pi)}
            failures.append(_poly_failure("stanley", _linear_label(sigma, pi), k, rhs, got, witness))
    return total, failures


def check_cyclic(pair: CyclicShufflePair) -> tuple[int, list[dict]]:
    total = pair.m + pair.n
    lhs = theorems.cyclic_shuffle_maj_gfs(pair.csigma, pair.cpi)
    failures = []
    for k in range(total):
        rhs = theorems.cyclic_stanley_rhs(pair, k)
        got = lhs.get(k, ZERO)
        if rhs != got:
            witness = {"m": pair.m, "n": pair.n, "r": pair.r, "s": pair.s,
                       "classes": [str(a) for a in cyclic_shuffles(pair.csigma, pair.cpi)
                                   if cyclic_descent_number(a) == k]}
            failures.append(_poly_failure("cyclic", str(pair), k, rhs, got, witness))
    return total, failures


def check_agrr(pair: CyclicShufflePair) -> tuple[int, list[dict]]:
    m, n, r, s = pair.m, pair.n, pair.r, pair.s
    total = m + n
    brute: dict[int, int] = {}
    for a in cyclic_shuffles(pair.csigma, pair.cpi):
        d = cyclic_descent_number(a)
        brute[d] = brute.get(d, 0) + 1
    failures = []
    closed_sum = 0
    for k in range(total):
        try:
            closed = theorems.agrr_count(m, n, r, s, k)
        except (IntegralityError, DomainError) as exc:
            failures.append(_plain_failure("agrr", str(pair), k, None, brute.get(k, 0),
                                           {"error": str(exc)}))
            continue
        closed_sum += closed
        values = {
            "agrr_count": closed,
            "agrr_split_count": theorems.agrr_split_count(m, n, r, s, k),
            "cyclic_rhs_at_one": theorems.cyclic_stanley_rhs(pair, k).eval_at_one(),
            "brute_force": brute.get(k, 0),
        }
        if len(set(values.values())) != 1:
            failures.append(_plain_failure("agrr", str(pair), k, closed, brute.get(k, 0), values))
    expected_total = theorems.cyclic_shuffle_count(m, n)
    if closed_sum != expected_total and not failures:
        failures.append(_plain_failure("agrr", str(pair), None, expected_total, closed_sum,
                                       {"what": "sum over k of agrr_count"}))
    return total + 1, failures


def check_bijection(pair: CyclicShufflePair, oracle_bound: int) -> tuple[int, list[dict]]:
    """Round trips, image set and the two statistic relations, element by element.

    The cyclic shuffles come from the exhaustive oracle whenever it is within
    bounds, so the check does not lean on the construction it is testing.
    """
    total = pair.m + pair.n
    if total <= oracle_bound:
        source = cyclic_shuffles_oracle(pair.csigma, pair.cpi, bound=oracle_bound)
    else:
        source = cyclic_shuffles(pair.csigma, pair.cpi)
    label = str(pair)
    failures = []

    def fail(what, expected, actual, **witness):
        failures.append(_plain_failure("bijection", label, None, expected, actual,
                                       {"what": what, **witness}))

    images = []
    for alpha in source:
        img = theorems.psi_forward(alpha, pair)
        images.append((img.anchor, img.word.letters))
        word = img.word.letters
        d = descent_number(word)
        if cyclic_descent_number(alpha) != d + 1:
            fail("cdes = des + 1", d + 1, cyclic_descent_number(alpha), alpha=str(alpha))
        if cyclic_major_index(alpha) != major_index(word) + d + 1:
            fail("cmaj = maj + des + 1", major_index(word) + d + 1, cyclic_major_index(alpha),
                 alpha=str(alpha))
        back = theorems.psi_inverse(img, pair)
        if back != alpha:
            fail("psi_inverse(psi_forward(alpha)) = alpha", str(alpha), str(back))

    if len(set(images)) != len(images):
        fail("psi_forward injective", len(images), len(set(images)))

    target = {
        (i, w)
        for i in pair.cpi.letters
        for w in interleavings(pair.sigma_tail, split(pair.cpi, i).letters)
    }
    if set(images) != target:
        fail("image equals union of anchored linear shuffles", len(target), len(set(images)),
             missing=sorted(map(str, target - set(images)))[:10],
             extra=sorted(map(str, set(images) - target))[:10])
    for anchor, word in sorted(target):
        img = PsiImage(anchor, LinearPerm(word))
        again = theorems.psi_forward(theorems.psi_inverse(img, pair), pair)
        if again != img:
            fail("psi_forward(psi_inverse(x)) = x", str(img), str(again))
    return 1, failures


def check_counts(pair: CyclicShufflePair, oracle_bound: int) -> tuple[int, list[dict]]:
    m, n = pair.m, pair.n
    label = str(pair)
    failures = []
    cases = 2
    fast = cyclic_shuffles(pair.csigma, pair.cpi)
    want = theorems.cyclic_shuffle_count(m, n)
    if len(fast) != want:
        failures.append(_plain_failure("counts", label, None, want, len(fast),
                                       {"what": "number of cyclic shuffles"}))
    lin = sum(1 for _ in interleavings(pair.csigma.letters, pair.cpi.letters))
    if lin != binomial(m + n, m):
        failures.append(_plain_failure("counts", label, None, binomial(m + n, m), lin,
                                       {"what": "number of linear shuffles of the representatives"}))
    if m + n <= oracle_bound:
        cases += 1
        oracle = cyclic_shuffles_oracle(pair.csigma, pair.cpi, bound=oracle_bound)
        if oracle.as_set() != fast.as_set():
            failures.append(_plain_failure(
                "counts", label, None, len(oracle), len(fast),
                {"what": "cyclic_shuffles equals oracle",
                 "only_oracle": sorted(str(a) for a in oracle.as_set() - fast.as_set()),
                 "only_fast": sorted(str(a) for a in fast.as_set() - oracle.as_set())}))
    return cases, failures


def _run_instances(theorem: str, instances: Iterable, oracle_bound: int) -> tuple[int, list[dict]]:
    cases = 0
    failures: list[dict] = []
    for inst in instances:
        if theorem == "stanley":
            c, f = check_stanley(*inst)
        elif theorem == "cyclic":
            c, f = check_cyclic(inst)
        elif theorem == "agrr":
            c, f = check_agrr(inst)
        elif theorem == "bijection":
            c, f = check_bijection(inst, oracle_bound)
        else:
            c, f = check_counts(inst, oracle_bound)
        cases += c
        failures.extend(f)
    return cases, failures


def _run_unit(unit: tuple) -> tuple[int, list[dict]]:
    theorem, total, m, oracle_bound = unit
    if theorem == "stanley":
        instances = pairgen.enumerate_linear_pairs(total, m)
    else:
        instances = pairgen.enumerate_pairs(total, m)
    return _run_instances(theorem, instances, oracle_bound)


def _units(config: SweepConfig) -> list[tuple]:
    units = []
    for theorem in config.theorems:
        for total in range(2, config.max_total + 1):
            ms = range(total + 1) if theorem == "stanley" else range(1, total)
            units.extend((theorem, total, m, config.oracle_bound) for m in ms)
    return units


def run_sweep(config: SweepConfig) -> VerificationReport:
    """Run every selected check and collect a report."""
    if config.max_total > EXHAUSTIVE_LIMIT:
        raise ResourceGuardError(
            f"exhaustive sweep to m+n = {config.max_total} exceeds the limit {EXHAUSTIVE_LIMIT}; "
            "use sampling for larger sizes"
        )
    if config.oracle_bound > DEFAULT_ORACLE_BOUND:
        raise ResourceGuardError(
            f"oracle bound {config.oracle_bound} exceeds the limit {DEFAULT_ORACLE_BOUND}"
        )
    if config.sample is not None and config.sample_total > SAMPLE_LIMIT:
        raise ResourceGuardError(
            f"sampled size {config.sample_total} exceeds the limit {SAMPLE_LIMIT}"
        )

    start = time.perf_counter()
    units = _units(config)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_unit, units))
    else:
        results = [_run_unit(u) for u in units]

    report = VerificationReport(config)
    report.rollup = {t: {"cases": 0, "failures": 0} for t in config.theorems}
    for (theorem, *_), (cases, failures) in zip(units, results):
        report.rollup[theorem]["cases"] += cases
        report.rollup[theorem]["failures"] += len(failures)
        report.cases_checked += cases
        report.failures.extend(failures)

    if config.sample is not None:
        count, seed = config.sample
        total = config.sample_total
        for theorem in config.theorems:
            if theorem == "stanley":
                instances = pairgen.sample_linear_pairs(total, count, seed)
            else:
                instances = pairgen.sample_pairs(total, count, seed)
            cases, failures = _run_instances(theorem, instances, config.oracle_bound)
            key = f"{theorem}:sampled"
            report.rollup[key] = {"cases": cases, "failures": len(failures)}
            report.cases_checked += cases
            for f in failures:
                f["sampled"] = True
            report.failures.extend(failures)

    report.elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
    return report
