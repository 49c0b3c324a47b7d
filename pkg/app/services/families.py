"""
Membership predicates and ordered enumerators for the nine decorated families
of pairs, plus exhaustive checkers for closure under addition and the chain
inclusions between families.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from app.models.schemas import ClosureReport, ClosureRule, FamilyId, SymbolPair
from app.services import seqcore
from app.utils.errors import check_cap
from config.settings import Limits

logger = logging.getLogger(__name__)

ENUMERATE_CAP = Limits().enumerate_cap
EXHAUSTIVE_CAP = Limits().exhaustive_cap


def _in_d(p: SymbolPair) -> bool:
    return p.total_a > p.total_a_prime or p.is_diagonal


def _prime_below(p: SymbolPair, slack: int) -> bool:
    # a'_i <= a_i + slack for all i in [0, k]
    return all(y <= x + slack for x, y in zip(p.a, p.a_prime))


def _shifted_below(p: SymbolPair, slack: int) -> bool:
    # a_i <= a'_{i+1} + slack for all i in [0, k-1]
    return all(p.a[i] <= p.a_prime[i + 1] + slack for i in range(p.k))


_PREDICATES: Dict[FamilyId, Callable[[SymbolPair], bool]] = {
    FamilyId.C: lambda p: True,
    FamilyId.D: _in_d,
    FamilyId.B: lambda p: _prime_below(p, 2),
    FamilyId.B1: lambda p: _prime_below(p, 2) and _shifted_below(p, 0),
    FamilyId.B2: lambda p: _prime_below(p, 2) and _shifted_below(p, 2),
    FamilyId.C1: lambda p: _shifted_below(p, 1) and _prime_below(p, 1),
    FamilyId.DD: lambda p: _in_d(p) and _prime_below(p, 0),
    FamilyId.D1: lambda p: _in_d(p) and _prime_below(p, 0) and _shifted_below(p, 2),
    FamilyId.D2: lambda p: _in_d(p) and _prime_below(p, 0) and _shifted_below(p, 4),
}

# C, bC and dD are closed under the sums below.
CLOSURE_RULES: Tuple[ClosureRule, ...] = (
    ClosureRule(left=FamilyId.C, right=FamilyId.C, target=FamilyId.C),
    ClosureRule(left=FamilyId.B, right=FamilyId.DD, target=FamilyId.B),
    ClosureRule(left=FamilyId.DD, right=FamilyId.DD, target=FamilyId.DD),
)

CHAINS: Tuple[Tuple[FamilyId, ...], ...] = (
    (FamilyId.B1, FamilyId.B2, FamilyId.B),
    (FamilyId.C1, FamilyId.B2, FamilyId.C),
    (FamilyId.D1, FamilyId.D2, FamilyId.DD),
)


def member(p: SymbolPair, family: FamilyId) -> bool:
    """Evaluate the family's defining inequalities at the pair's own k."""
    return _PREDICATES[FamilyId(family)](p)


def parse_rule(text: str) -> ClosureRule:
    """Parse `LEFT+RIGHT=TARGET`, e.g. `b+dd=b`."""
    try:
        lhs, target = text.split("=")
        left, right = lhs.split("+")
        return ClosureRule(left=FamilyId(left.strip()), right=FamilyId(right.strip()), target=FamilyId(target.strip()))
    except ValueError as e:
        raise ValueError(f"closure rule must look like LEFT+RIGHT=TARGET, got {text!r}") from e


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Partitions of n, parts in nonincreasing order, in reverse lexicographic order."""
    if n == 0:
        return ((),)

    def _gen(remaining: int, largest: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in _gen(remaining - part, part):
                yield (part,) + rest

    return tuple(_gen(n, n))


def partition_count(n: int) -> int:
    return len(partitions(n))


def bipartition_count(n: int) -> int:
    """Oracle: sum over m of p(m) p(n - m)."""
    return sum(partition_count(m) * partition_count(n - m) for m in range(n + 1))


def bipartitions(n: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    for m in range(n + 1):
        for lam in partitions(m):
            for mu in partitions(n - m):
                yield lam, mu


@lru_cache(maxsize=None)
def _all_pairs(n: int, k: int) -> Tuple[SymbolPair, ...]:
    pairs = [seqcore.from_bipartition(lam, mu, k) for lam, mu in bipartitions(n)]
    return tuple(sorted(pairs, key=lambda p: p.sort_key))


def enumerate_family(
    family: FamilyId,
    n: int,
    cap: Optional[int] = ENUMERATE_CAP,
    k: Optional[int] = None,
) -> List[SymbolPair]:
    """All members of `family` of size n at k = n + 1 (or the given k >= n + 1), in lexicographic order."""
    check_cap(n, cap)
    k = seqcore.canonical_k(n) if k is None else max(k, seqcore.canonical_k(n))
    predicate = _PREDICATES[FamilyId(family)]
    return [p for p in _all_pairs(n, k) if predicate(p)]


def verify_closure(rule: ClosureRule, max_n: int, cap: Optional[int] = EXHAUSTIVE_CAP) -> ClosureReport:
    """Check sum(x, y) in target for x in left(m), y in right(m'), m + m' <= max_n, at k = max_n + 1."""
    check_cap(max_n, cap)
    k = seqcore.canonical_k(max_n)
    by_size = {
        family: [enumerate_family(family, m, cap=None, k=k) for m in range(max_n + 1)]
        for family in {rule.left, rule.right}
    }
    checked = 0
    for m in range(max_n + 1):
        for m_prime in range(max_n - m + 1):
            for x in by_size[rule.left][m]:
                for y in by_size[rule.right][m_prime]:
                    checked += 1
                    if not member(seqcore.add(x, y), rule.target):
                        logger.info("closure %s fails at m=%d m'=%d", rule, m, m_prime)
                        return ClosureReport(rule=str(rule), max_n=max_n, passed=False, checked=checked, counterexample=(x, y))
    logger.info("closure %s holds up to n=%d (%d sums)", rule, max_n, checked)
    return ClosureReport(rule=str(rule), max_n=max_n, passed=True, checked=checked)


def verify_chains(max_n: int, cap: Optional[int] = EXHAUSTIVE_CAP) -> List[Tuple[str, Optional[SymbolPair]]]:
    """For each chain F1 ⊆ F2 ⊆ F3 return its name and the first pair breaking it (None if it holds)."""
    check_cap(max_n, cap)
    results = []
    for chain in CHAINS:
        name = " ⊆ ".join(f.label for f in chain)
        witness = None
        for n in range(max_n + 1):
            for p in _all_pairs(n, seqcore.canonical_k(n)):
                flags = [member(p, f) for f in chain]
                if any(inner and not outer for inner, outer in zip(flags, flags[1:])):
                    witness = p
                    break
            if witness is not None:
                break
        results.append((name, witness))
    return results
