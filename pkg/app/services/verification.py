"""
Exhaustive verification suites. Each suite returns CheckResults; `run_all`
strings them together in a fixed order so repeated runs print identical reports.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional, Tuple

from app.models.schemas import (
    CheckResult,
    ClosureRule,
    FamilyId,
    GroupSeries,
    GroupType,
    Series,
    Side,
    VerificationReport,
)
from app.services import decomp, families, springer
from app.services.families import EXHAUSTIVE_CAP
from app.utils.errors import check_cap

logger = logging.getLogger(__name__)

BIPARTITION_COUNTS = (1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481)

# a closure the checker must reject
SENSITIVITY_RULE = ClosureRule(left=FamilyId.B, right=FamilyId.B, target=FamilyId.B)

FIXED_POINT_FAMILY: Dict[Series, FamilyId] = {Series.A: FamilyId.C, Series.B: FamilyId.B, Series.D: FamilyId.DD}


def _padded(parts: Tuple[int, ...], length: int) -> Tuple[int, ...]:
    return parts + (0,) * (length - len(parts))


def _raw_dd(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> bool:
    size = max(len(lam), len(mu))
    return all(y <= x for x, y in zip(_padded(lam, size), _padded(mu, size)))


def _raw_b(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> bool:
    size = max(len(lam), len(mu))
    return all(y <= x + 2 for x, y in zip(_padded(lam, size), _padded(mu, size)))


# (family, n, expected) recounted straight from partition pairs
RAW_COUNTS: Tuple[Tuple[FamilyId, int, int, Callable], ...] = (
    (FamilyId.DD, 2, 3, _raw_dd),
    (FamilyId.DD, 4, 10, _raw_dd),
    (FamilyId.B, 3, 9, _raw_b),
)


def closure_checks(max_n: int) -> List[CheckResult]:
    results = []
    for rule in families.CLOSURE_RULES:
        report = families.verify_closure(rule, max_n, cap=None)
        detail = f"{report.checked} sums"
        if report.counterexample:
            x, y = report.counterexample
            detail = f"counterexample {x.text()} + {y.text()}"
        results.append(CheckResult(name=f"closure {rule}", passed=report.passed, detail=detail))
    report = families.verify_closure(SENSITIVITY_RULE, max_n, cap=None)
    results.append(
        CheckResult(
            name=f"closure {SENSITIVITY_RULE} rejected",
            passed=not report.passed,
            detail="counterexample found" if not report.passed else "no counterexample",
        )
    )
    return results


def chain_checks(max_n: int) -> List[CheckResult]:
    return [
        CheckResult(name=f"chain {name}", passed=witness is None, detail="" if witness is None else witness.text())
        for name, witness in families.verify_chains(max_n, cap=None)
    ]


def cardinality_checks(max_n: int) -> List[CheckResult]:
    results = []
    actual = [len(families.enumerate_family(FamilyId.C, n, cap=None)) for n in range(max_n + 1)]
    expected = [families.bipartition_count(n) for n in range(max_n + 1)]
    known = list(BIPARTITION_COUNTS[: max_n + 1])
    results.append(
        CheckResult(
            name="card C(n) = bipartition convolution",
            passed=actual == expected and actual[: len(known)] == known,
            detail=" ".join(map(str, actual)),
        )
    )
    for family, n, count, raw in RAW_COUNTS:
        if n > max_n:
            continue
        listed = len(families.enumerate_family(family, n, cap=None))
        recounted = sum(1 for lam, mu in families.bipartitions(n) if raw(lam, mu))
        results.append(
            CheckResult(
                name=f"card {family.label}({n}) = {count}",
                passed=listed == recounted == count,
                detail=f"enumerated {listed}; recounted {recounted}",
            )
        )
    return results


def decomposition_checks(max_n: int, with_oracle: bool = True) -> List[CheckResult]:
    results = []
    for series in Series:
        report = decomp.verify_decompositions(series, max_n, with_oracle=with_oracle, cap=None)
        detail = f"{report.checked} inputs; {report.terminal} terminal; {report.split} split; {report.both} terminal and splittable"
        if report.failures:
            detail = report.failures[0]
        results.append(CheckResult(name=f"decomposition {series.label}", passed=report.passed, detail=detail))
    return results


def fixed_point_checks(max_n: int) -> List[CheckResult]:
    results = []
    for series, family in FIXED_POINT_FAMILY.items():
        bad = [
            n
            for n in range(max_n + 1)
            if springer.t2_fixed_point(series, n, cap=None) != families.enumerate_family(family, n, cap=None)
        ]
        results.append(
            CheckResult(
                name=f"fixed point {series.label} = {family.label}",
                passed=not bad,
                detail="" if not bad else f"differs at n={bad[0]}",
            )
        )
    return results


def springer_checks(max_n: int) -> List[CheckResult]:
    results = []
    for series in GroupSeries:
        bad: Optional[str] = None
        for n in range(series.min_rank, max_n + 1):
            mapping = springer.tau(GroupType(series=series, n=n))
            if not mapping.injective or len(mapping.pairs) + len(mapping.unhit) != len(springer.springer_set(mapping.group, Side.ALGEBRA).labels):
                bad = str(mapping.group)
                break
        results.append(CheckResult(name=f"tau injective for type {series.value}", passed=bad is None, detail=bad or ""))
    if max_n >= 4:
        d4 = GroupType(series=GroupSeries.D, n=4)
        labels = springer.springer_set(d4, Side.ALGEBRA).labels
        doubled = {label.pair for label in labels if label.split}
        results.append(
            CheckResult(
                name="D_4 algebra side: 12 labels with 2 doubled fibers",
                passed=len(labels) == 12 and len(doubled) == 2,
                detail=f"{len(labels)} labels; {len(doubled)} doubled",
            )
        )
        results.append(CheckResult(name="tau(D_4) bijective", passed=springer.tau(d4).bijective))
    if max_n >= 3:
        c3 = springer.tau(GroupType(series=GroupSeries.C, n=3))
        results.append(
            CheckResult(
                name="tau(C_3) injective with 1 unhit label",
                passed=c3.injective and len(c3.unhit) == 1,
                detail=" ".join(label.text() for label in c3.unhit),
            )
        )
        results.append(CheckResult(name="tau(B_3) bijective", passed=springer.tau(GroupType(series=GroupSeries.B, n=3)).bijective))
    return results


def exceptional_checks() -> List[CheckResult]:
    expected = {
        ("F4", 2): [("1_3", 12), ("2_3", 4)],
        ("E7", 2): [("84'_a", 15)],
        ("E8", 2): [("50_x", 8), ("700_xx", 16)],
    }
    results = []
    for group_type, p in springer.exceptional_cases():
        record = springer.exceptional_delta(group_type, p)
        got = [(entry.name, entry.b_value) for entry in record.added]
        results.append(
            CheckResult(
                name=f"exceptional {group_type} p={p}",
                passed=got == expected.get((group_type, p), []),
                detail=" ".join(f"{name}:{b}" for name, b in got),
            )
        )
    return results


def run_all(max_n: int, cap: Optional[int] = EXHAUSTIVE_CAP) -> VerificationReport:
    check_cap(max_n, cap)
    report = VerificationReport(max_n=max_n)
    for suite in (closure_checks, chain_checks, cardinality_checks, decomposition_checks, fixed_point_checks, springer_checks):
        report.checks.extend(suite(max_n))
    report.checks.extend(exceptional_checks())
    failed = [c.name for c in report.checks if not c.passed]
    logger.info("%d checks, %d failed", len(report.checks), len(failed))
    return report
