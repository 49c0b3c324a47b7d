"""
Bounded nondecreasing sequences and symbol pairs: construction, addition,
padding and the canonical (stable-range) representative.
"""

from __future__ import annotations

import logging
from typing import Iterable, Sequence

from app.models.schemas import SymbolPair
from app.utils.errors import LengthMismatch, NotNondecreasing, NotStabilizable

logger = logging.getLogger(__name__)


def _check_seq(entries: Sequence[int], name: str) -> tuple[int, ...]:
    entries = tuple(entries)
    if any(isinstance(x, bool) or not isinstance(x, int) for x in entries):
        raise NotNondecreasing(f"{name} must hold natural numbers, got {list(entries)}")
    if not entries:
        raise NotNondecreasing(f"{name} is empty")
    if entries[0] < 0:
        raise NotNondecreasing(f"{name} has negative entries: {list(entries)}")
    for i in range(len(entries) - 1):
        if entries[i] > entries[i + 1]:
            raise NotNondecreasing(f"{name} decreases at index {i}: {list(entries)}")
    return entries


def make_pair(a: Iterable[int], a_prime: Iterable[int]) -> SymbolPair:
    """Validated constructor; raises NotNondecreasing or LengthMismatch."""
    a = _check_seq(list(a), "a")
    a_prime = _check_seq(list(a_prime), "a_prime")
    if len(a) != len(a_prime):
        raise LengthMismatch(f"a has length {len(a)}, a_prime has length {len(a_prime)}")
    return SymbolPair.of(a, a_prime)


def zero_pair(k: int) -> SymbolPair:
    return SymbolPair.of((0,) * (k + 1), (0,) * (k + 1))


def canonical_k(n: int) -> int:
    return n + 1


def add(p: SymbolPair, q: SymbolPair) -> SymbolPair:
    """Entrywise sum of both components."""
    if p.k != q.k:
        raise LengthMismatch(f"cannot add pairs with k={p.k} and k={q.k}")
    return SymbolPair.of(
        tuple(x + y for x, y in zip(p.a, q.a)),
        tuple(x + y for x, y in zip(p.a_prime, q.a_prime)),
    )


def subtract(p: SymbolPair, q: SymbolPair) -> SymbolPair:
    """p - q; only defined when the difference is again a valid pair."""
    if p.k != q.k:
        raise LengthMismatch(f"cannot subtract pairs with k={p.k} and k={q.k}")
    return SymbolPair.of(
        tuple(x - y for x, y in zip(p.a, q.a)),
        tuple(x - y for x, y in zip(p.a_prime, q.a_prime)),
    )


def pad(p: SymbolPair, m: int) -> SymbolPair:
    """Apply the imbedding (a_0..a_k) -> (0, a_0..a_k) m times to both components."""
    if m <= 0:
        return p
    zeros = (0,) * m
    return SymbolPair.of(zeros + p.a.root, zeros + p.a_prime.root)


def normalize(p: SymbolPair) -> SymbolPair:
    """The representative with k = n + 1."""
    target = canonical_k(p.n)
    if p.k <= target:
        return pad(p, target - p.k)
    excess = p.k - target
    if any(p.a[:excess]) or any(p.a_prime[:excess]):
        raise NotStabilizable(f"cannot drop {excess} leading entries of {p.text()}")
    return SymbolPair.of(p.a.root[excess:], p.a_prime.root[excess:])


def is_normalized(p: SymbolPair) -> bool:
    return p.k == canonical_k(p.n)


def has_zero_column(p: SymbolPair) -> bool:
    """True when a_0 = a'_0 = 0, i.e. k is large enough for the decomposition proofs."""
    return p.k >= 1 and p.a[0] == 0 and p.a_prime[0] == 0


def add_unit(p: SymbolPair, index: int, prime: bool = False) -> SymbolPair:
    """Add 1 at position `index` of one component."""
    a, a_prime = list(p.a), list(p.a_prime)
    target = a_prime if prime else a
    target[index] += 1
    return SymbolPair.of(a, a_prime)


def from_bipartition(lam: Sequence[int], mu: Sequence[int], k: int) -> SymbolPair:
    """Render a pair of partitions as two nondecreasing sequences of length k + 1."""
    if len(lam) > k + 1 or len(mu) > k + 1:
        raise LengthMismatch(f"partitions {tuple(lam)}, {tuple(mu)} need more than {k + 1} slots")
    a = (0,) * (k + 1 - len(lam)) + tuple(sorted(lam))
    a_prime = (0,) * (k + 1 - len(mu)) + tuple(sorted(mu))
    return SymbolPair.of(a, a_prime)
