"""
Constructive decomposition of symbol pairs.

Each series has an input family, a terminal family and a split shape:

    A-case: C   -> c1C, or C(m) + C(m'),   m >= 1, m' >= 1
    B-case: bC  -> b1C, or bC(m) + dD(m'), m >= 0, m' >= 2
    D-case: dD  -> d1D, or dD(m) + dD(m'), m >= 2, m' >= 2

`decompose_step` follows the case analysis of the existence proof branch by
branch; `oracle_decompositions` finds every split by brute force and is used
to cross-check it.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from app.models.schemas import Decomposition, DecompositionReport, FamilyId, Leaf, Series, SymbolPair
from app.services import seqcore
from app.services.families import EXHAUSTIVE_CAP, enumerate_family, member
from app.utils.errors import DecompositionError, NotInFamily, NotNormalized, SymbolError, check_cap

logger = logging.getLogger(__name__)

INPUT_FAMILY: Dict[Series, FamilyId] = {Series.A: FamilyId.C, Series.B: FamilyId.B, Series.D: FamilyId.DD}
TERMINAL_FAMILY: Dict[Series, FamilyId] = {Series.A: FamilyId.C1, Series.B: FamilyId.B1, Series.D: FamilyId.D1}
LEFT_FAMILY: Dict[Series, FamilyId] = {Series.A: FamilyId.C, Series.B: FamilyId.B, Series.D: FamilyId.DD}
RIGHT_FAMILY: Dict[Series, FamilyId] = {Series.A: FamilyId.C, Series.B: FamilyId.DD, Series.D: FamilyId.DD}
# (least m, least m')
SIZE_BOUNDS: Dict[Series, Tuple[int, int]] = {Series.A: (1, 1), Series.B: (0, 2), Series.D: (2, 2)}
LEFT_SERIES: Dict[Series, Series] = {Series.A: Series.A, Series.B: Series.B, Series.D: Series.D}
RIGHT_SERIES: Dict[Series, Series] = {Series.A: Series.A, Series.B: Series.D, Series.D: Series.D}


class _Branch(NamedTuple):
    verdict: str  # "terminal" | "split" | "reduce"
    case: str
    left: Optional[SymbolPair] = None
    right: Optional[SymbolPair] = None


def _block(k: int, start: int, start_prime: int) -> SymbolPair:
    """The pair with 1 on [start, k] in a_* and 1 on [start_prime, k] in a'_*, 0 elsewhere."""
    return SymbolPair.of(
        tuple(1 if i >= start else 0 for i in range(k + 1)),
        tuple(1 if i >= start_prime else 0 for i in range(k + 1)),
    )


def _split(c: SymbolPair, b: SymbolPair, case: str) -> _Branch:
    return _Branch("split", case, seqcore.subtract(c, b), b)


def _first_nonzero(seq) -> int:
    return next(i for i, x in enumerate(seq) if x > 0)


def _proof_a(c: SymbolPair) -> _Branch:
    n, k = c.n, c.k
    for prime, case in ((False, "a1"), (True, "a2")):
        seq = c.a_prime if prime else c.a
        s = next((i for i in range(k) if seq[i] < seq[i + 1]), None)
        if s is None:
            continue
        r = k - s
        b = _block(k, k + 1, s + 1) if prime else _block(k, s + 1, k + 1)
        if r < n:
            return _split(c, b, case)
        return _Branch("terminal", case)
    return _Branch("terminal", "a3")


def _locate_t_s(c: SymbolPair, l: int, slack: int) -> Optional[Tuple[int, int]]:
    """
    Find 0 < t <= s <= k with a'_j = a_j + slack on [s+1, k], a'_j < a_j + slack
    on [t, s] and a_{t-1} < a_t, taking s maximal; None when a'_j = a_j + slack on [l, k].
    """
    k = c.k
    strict = [i for i in range(l, k + 1) if c.a_prime[i] < c.a[i] + slack]
    if not strict:
        return None
    s = max(strict)
    equal = [i for i in range(l, s + 1) if c.a_prime[i] == c.a[i] + slack]
    t = max(equal) + 1 if equal else l
    return t, s


def _proof_b(c: SymbolPair) -> _Branch:
    n, k = c.n, c.k
    if n == 0 or not any(c.a):
        return _Branch("terminal", "b3")
    l = _first_nonzero(c.a)
    found = _locate_t_s(c, l, 2)
    if found is not None:
        t, s = found
        r = 2 * k - t - s + 1
        b = _block(k, t, s + 1)
        if r >= 2:
            return _split(c, b, "b1")
        return _Branch("reduce", "b1", seqcore.subtract(c, b))
    rises = [s for s in range(l, k) if c.a_prime[s] < c.a_prime[s + 1]]
    if rises:
        s = max(rises)
        return _split(c, _block(k, s + 1, s + 1), "b2")
    return _Branch("terminal", "b2")


def _proof_d(c: SymbolPair) -> _Branch:
    n, k = c.n, c.k
    if n == 0 or not any(c.a):
        return _Branch("terminal", "c3")
    l = _first_nonzero(c.a)
    found = _locate_t_s(c, l, 0)
    if found is not None:
        t, s = found
        r = 2 * k - t - s + 1
        b = _block(k, t, s + 1)
        if r == 1:
            return _Branch("reduce", "c1", seqcore.subtract(c, b))
        if r <= n - 2:
            return _split(c, b, "c1")
        return _Branch("terminal", "c1")
    rises = [s for s in range(l, k) if c.a_prime[s] < c.a_prime[s + 1]]
    if rises:
        s = max(rises)
        r = 2 * k - 2 * s
        if r <= n - 2:
            return _split(c, _block(k, s + 1, s + 1), "c2")
    return _Branch("terminal", "c2")


_PROOFS = {Series.A: _proof_a, Series.B: _proof_b, Series.D: _proof_d}


def _check_split(p: SymbolPair, series: Series, left: SymbolPair, right: SymbolPair) -> None:
    lo, lo_prime = SIZE_BOUNDS[series]
    problems = []
    if seqcore.add(left, right) != p:
        problems.append("parts do not sum to the input")
    if not member(left, LEFT_FAMILY[series]):
        problems.append(f"left part not in {LEFT_FAMILY[series].label}")
    if not member(right, RIGHT_FAMILY[series]):
        problems.append(f"right part not in {RIGHT_FAMILY[series].label}")
    if left.n < lo or right.n < lo_prime:
        problems.append(f"sizes ({left.n}, {right.n}) break the bounds ({lo}, {lo_prime})")
    if problems:
        raise DecompositionError(f"{series.label} split of {p.text()}: " + "; ".join(problems))


def _require_input(p: SymbolPair, series: Series) -> None:
    family = INPUT_FAMILY[series]
    if not member(p, family):
        raise NotInFamily(f"{p.text()} is not in {family.label}, the input family of the {series.label}")


def decompose_step(p: SymbolPair, series: Series, eager: bool = False) -> Decomposition:
    """
    One step of the decomposition.

    Returns Terminal exactly when p lies in the series' terminal family. With
    eager=True the proof's case analysis runs even on terminal inputs, so a
    terminal pair may still come back split.
    """
    series = Series(series)
    _require_input(p, series)
    if not seqcore.has_zero_column(p):
        raise NotNormalized(f"{p.text()} needs a leading zero column (normalize it first)")
    terminal_family = TERMINAL_FAMILY[series]
    if not eager and member(p, terminal_family):
        return Decomposition(kind="terminal", proof_case=None)

    proof = _PROOFS[series]
    current, carry, outer_case = p, 0, None
    while True:
        branch = proof(current)
        logger.debug("%s on %s: %s [%s]", series.label, current.text(), branch.verdict, branch.case)
        if branch.verdict == "reduce":
            # a_k lowered by one; the unit goes back into the right part afterwards
            carry += 1
            outer_case = outer_case or branch.case
            current = branch.left
            continue
        if branch.verdict == "terminal":
            if not eager:
                raise DecompositionError(f"{series.label} analysis ended terminal on {p.text()}, which is not in {terminal_family.label}")
            return Decomposition(kind="terminal", proof_case=outer_case or branch.case)
        left, right = branch.left, branch.right
        for _ in range(carry):
            right = seqcore.add_unit(right, right.k)
        _check_split(p, series, left, right)
        return Decomposition(
            kind="split",
            left=left,
            right=right,
            m=left.n,
            m_prime=right.n,
            proof_case=outer_case or branch.case,
        )


def atomize(p: SymbolPair, series: Series) -> List[Leaf]:
    """Split recursively until every part is terminal; leaves in left-to-right order."""
    series = Series(series)
    step = decompose_step(p, series)
    if not step.is_split:
        return [Leaf(pair=p, series=series, family=TERMINAL_FAMILY[series])]
    return atomize(step.left, LEFT_SERIES[series]) + atomize(step.right, RIGHT_SERIES[series])


def _component_splits(seq: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """All x with x and seq - x both nondecreasing and nonnegative."""

    def _extend(i: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if i == len(seq):
            yield prefix
            return
        if i == 0:
            lo, hi = 0, seq[0]
        else:
            lo, hi = prefix[-1], prefix[-1] + seq[i] - seq[i - 1]
        for v in range(lo, hi + 1):
            yield from _extend(i + 1, prefix + (v,))

    yield from _extend(0, ())


def oracle_decompositions(p: SymbolPair, series: Series, cap: Optional[int] = EXHAUSTIVE_CAP) -> List[Decomposition]:
    """Every split of p allowed for the series, found by exhausting all entrywise splits."""
    series = Series(series)
    _require_input(p, series)
    check_cap(p.n, cap)
    lo, lo_prime = SIZE_BOUNDS[series]
    left_family, right_family = LEFT_FAMILY[series], RIGHT_FAMILY[series]
    found = []
    for xa in _component_splits(p.a.root):
        for xa_prime in _component_splits(p.a_prime.root):
            m = sum(xa) + sum(xa_prime)
            if m < lo or p.n - m < lo_prime:
                continue
            left = SymbolPair.of(xa, xa_prime)
            right = seqcore.subtract(p, left)
            if member(left, left_family) and member(right, right_family):
                found.append(Decomposition(kind="split", left=left, right=right, m=m, m_prime=p.n - m))
    found.sort(key=lambda d: (d.left.sort_key, d.right.sort_key))
    return found


def verify_decompositions(
    series: Series,
    max_n: int,
    with_oracle: bool = True,
    cap: Optional[int] = EXHAUSTIVE_CAP,
) -> DecompositionReport:
    """Run decompose_step on every input-family member up to max_n and audit each answer."""
    series = Series(series)
    check_cap(max_n, cap)
    report = DecompositionReport(series=series, max_n=max_n)
    terminal_family = TERMINAL_FAMILY[series]
    for n in range(max_n + 1):
        for p in enumerate_family(INPUT_FAMILY[series], n, cap=None):
            report.checked += 1
            try:
                step = decompose_step(p, series)
            except SymbolError as e:
                report.failures.append(f"{p.text()}: {e}")
                continue
            is_terminal = member(p, terminal_family)
            if step.is_split:
                report.split += 1
                if is_terminal:
                    report.failures.append(f"{p.text()}: split although in {terminal_family.label}")
            else:
                report.terminal += 1
                if not is_terminal:
                    report.failures.append(f"{p.text()}: terminal although not in {terminal_family.label}")
            if not with_oracle:
                continue
            oracle = oracle_decompositions(p, series, cap=None)
            report.oracle_checked += 1
            if step.is_split and (step.left, step.right) not in [(d.left, d.right) for d in oracle]:
                report.failures.append(f"{p.text()}: split [{step.proof_case}] missing from the oracle")
            if not is_terminal and not oracle:
                report.failures.append(f"{p.text()}: neither terminal nor decomposable")
            if is_terminal and oracle:
                report.both += 1
    logger.info(
        "%s up to n=%d: %d inputs, %d terminal, %d split, %d failures",
        series.label, max_n, report.checked, report.terminal, report.split, len(report.failures),
    )
    return report
