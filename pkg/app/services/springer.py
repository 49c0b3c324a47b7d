"""
Orbit-set parametrizations for adjoint groups of type B, C, D in characteristic 2.

Irreducible representations of the Weyl group of type B_n / C_n are labelled
by pairs in C(n); for type D_n a pair (a, a') with |a| >= |a'| labels one
representation, or two (marked I and II) when a = a'.

    side       B_n          C_n          D_n
    algebra    bC(n)        C(n)         zeta^-1(dD(n))
    group      b2C(n)       b2C(n)       zeta^-1(d2D(n))
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from app.models.schemas import (
    CountsRow,
    DeltaEntry,
    ExceptionalDelta,
    FamilyId,
    GroupSeries,
    GroupType,
    OrbitLabel,
    Series,
    Side,
    SpringerSet,
    SymbolPair,
    TauMapping,
)
from app.services import seqcore
from app.services.decomp import TERMINAL_FAMILY
from app.services.families import EXHAUSTIVE_CAP, enumerate_family, member
from app.utils.errors import NotInFamily, UnknownCase, check_cap

logger = logging.getLogger(__name__)

SPRINGER_FAMILY: Dict[Tuple[GroupSeries, Side], FamilyId] = {
    (GroupSeries.B, Side.ALGEBRA): FamilyId.B,
    (GroupSeries.C, Side.ALGEBRA): FamilyId.C,
    (GroupSeries.D, Side.ALGEBRA): FamilyId.DD,
    (GroupSeries.B, Side.GROUP): FamilyId.B2,
    (GroupSeries.C, Side.GROUP): FamilyId.B2,
    (GroupSeries.D, Side.GROUP): FamilyId.D2,
}

# (type, p) -> (added names with b-values, note); empty additions mean fS_g = fS_G
_EXCEPTIONAL: Dict[Tuple[str, int], Tuple[Tuple[Tuple[str, int], ...], Optional[str]]] = {
    ("G2", 2): ((), None),
    ("G2", 3): ((), None),
    ("F4", 2): (
        (("1_3", 12), ("2_3", 4)),
        "obtained by j-induction from subgroups of type B4 and C3xA1",
    ),
    ("F4", 3): ((), None),
    ("E6", 2): ((), None),
    ("E6", 3): ((), None),
    ("E7", 2): ((("84'_a", 15),), None),
    ("E7", 3): ((), None),
    ("E8", 2): (
        (("50_x", 8), ("700_xx", 16)),
        "obtained by j-induction from E7xA1 applied to 15'_a(x)sgn and 84'_a(x)sgn",
    ),
    ("E8", 3): ((), None),
    ("E8", 5): ((), None),
}


def good_characteristic_note(series: GroupSeries) -> str:
    return (
        f"type {GroupSeries(series).value}: when p is 1 or a good prime the nilpotent and unipotent "
        "parametrizations coincide (fS_g = fS_G), so nothing is computed"
    )


def zeta_fiber(p: SymbolPair, n: Optional[int] = None) -> List[OrbitLabel]:
    """Type-D labels over a pair of dD: two (I, II) when a = a', one otherwise."""
    if not member(p, FamilyId.DD):
        raise NotInFamily(f"{p.text()} is not in dD")
    n = p.n if n is None else n
    if p.is_diagonal:
        return [OrbitLabel(pair=p, split=mark, series=GroupSeries.D, n=n) for mark in ("I", "II")]
    return [OrbitLabel(pair=p, series=GroupSeries.D, n=n)]


def springer_set(group: GroupType, side: Side) -> SpringerSet:
    side = Side(side)
    family = SPRINGER_FAMILY[(group.series, side)]
    pairs = enumerate_family(family, group.n, cap=None)
    if group.series is GroupSeries.D:
        labels = [label for p in pairs for label in zeta_fiber(p, group.n)]
    else:
        labels = [OrbitLabel(pair=p, series=group.series, n=group.n) for p in pairs]
    warnings = []
    if not group.in_classical_range:
        warnings.append(f"{group} is below the classical rank range (rank >= {group.series.min_rank})")
        logger.warning(warnings[-1])
    return SpringerSet(group=group, side=side, labels=labels, warnings=warnings)


def tau(group: GroupType) -> TauMapping:
    """The inclusion of group-side labels into algebra-side labels."""
    domain = springer_set(group, Side.GROUP).labels
    codomain = springer_set(group, Side.ALGEBRA).labels
    hit, targets = set(domain), set(codomain)
    missing = [label for label in domain if label not in targets]
    if missing:
        raise NotInFamily(f"{len(missing)} group-side labels of {group} are not algebra-side labels")
    return TauMapping(
        group=group,
        pairs=[(label, label) for label in domain],
        unhit=[label for label in codomain if label not in hit],
    )


def counts(series: GroupSeries, max_n: int, cap: Optional[int] = EXHAUSTIVE_CAP) -> List[CountsRow]:
    series = GroupSeries(series)
    check_cap(max_n, cap)
    rows = []
    for n in range(series.min_rank, max_n + 1):
        group = GroupType(series=series, n=n)
        card_group = len(springer_set(group, Side.GROUP).labels)
        card_algebra = len(springer_set(group, Side.ALGEBRA).labels)
        rows.append(
            CountsRow(series=series, n=n, card_group=card_group, card_algebra=card_algebra, difference=card_algebra - card_group)
        )
    return rows


def exceptional_delta(group_type: str, p: int) -> ExceptionalDelta:
    key = (group_type.upper(), int(p))
    if key not in _EXCEPTIONAL:
        raise UnknownCase(f"no recorded bad-prime case for type {key[0]} with p={key[1]}")
    added, note = _EXCEPTIONAL[key]
    return ExceptionalDelta(
        group_type=key[0],
        p=key[1],
        added=[DeltaEntry(name=name, b_value=b) for name, b in added],
        note=note,
    )


def exceptional_cases() -> List[Tuple[str, int]]:
    return list(_EXCEPTIONAL)


def t2_fixed_point(series: Series, n: int, cap: Optional[int] = EXHAUSTIVE_CAP) -> List[SymbolPair]:
    """
    Rebuild the algebra-side set of size n from terminal pairs and sums:

        A: T(n) = c1C(n) + {x + y : x in T(m),   y in T(m'),   m, m' >= 1}
        B: T(n) = b1C(n) + {x + y : x in T(m),   y in T_D(m'), m' >= 2}
        D: T(n) = d1D(n) + {x + y : x in T(m),   y in T(m'),   m, m' >= 2}

    with all sums taken at k = n + 1. Tables are built per call.
    """
    series = Series(series)
    check_cap(n, cap)
    k = seqcore.canonical_k(n)
    tables: Dict[Series, List[List[SymbolPair]]] = {}

    def build(s: Series) -> List[List[SymbolPair]]:
        if s in tables:
            return tables[s]
        right = Series.D if s is Series.B else s
        lo, lo_prime = {Series.A: (1, 1), Series.B: (0, 2), Series.D: (2, 2)}[s]
        table: List[List[SymbolPair]] = []
        tables[s] = table
        right_table = table if right is s else build(right)
        for size in range(n + 1):
            found = set(enumerate_family(TERMINAL_FAMILY[s], size, cap=None, k=k))
            for m in range(lo, size - lo_prime + 1):
                for x in table[m]:
                    for y in right_table[size - m]:
                        found.add(seqcore.add(x, y))
            table.append(sorted(found, key=lambda p: p.sort_key))
        logger.debug("%s table sizes: %s", s.label, [len(row) for row in table])
        return table

    return list(build(series)[n])
