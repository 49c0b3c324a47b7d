import pytest

from app.models.schemas import FamilyId, GroupSeries, GroupType, Series, Side
from app.services import families, seqcore, springer
from app.utils.errors import NotInFamily, UnknownCase


def group(series, n):
    return GroupType(series=GroupSeries(series), n=n)


def test_c2_algebra_side_has_five_labels():
    labels = springer.springer_set(group("C", 2), Side.ALGEBRA).labels
    assert len(labels) == 5
    assert all(label.split is None for label in labels)


def test_d4_algebra_side_doubles_diagonal_pairs():
    labels = springer.springer_set(group("D", 4), Side.ALGEBRA).labels
    assert len(labels) == 12
    doubled = [label for label in labels if label.split]
    assert [label.split for label in doubled] == ["I", "II", "I", "II"]
    assert all(label.pair.is_diagonal for label in doubled)


def test_small_rank_warns():
    result = springer.springer_set(group("C", 1), Side.ALGEBRA)
    assert result.warnings
    assert len(result.labels) == 2


def test_zeta_fiber():
    marks = [label.split for label in springer.zeta_fiber(seqcore.make_pair([0, 1], [0, 1]))]
    assert marks == ["I", "II"]
    assert len(springer.zeta_fiber(seqcore.make_pair([0, 2], [0, 0]))) == 1
    with pytest.raises(NotInFamily):
        springer.zeta_fiber(seqcore.make_pair([0, 0], [0, 2]))


def test_tau_c3_misses_one_label():
    mapping = springer.tau(group("C", 3))
    assert mapping.injective
    assert not mapping.bijective
    assert len(mapping.pairs) == 9
    assert [label.pair.bipartition() for label in mapping.unhit] == [((), (3,))]


@pytest.mark.parametrize("series, n", [("B", 3), ("D", 4)])
def test_tau_bijective(series, n):
    assert springer.tau(group(series, n)).bijective


@pytest.mark.parametrize(
    "series, max_n, rows",
    [
        ("C", 3, [(2, 5, 5, 0), (3, 9, 10, 1)]),
        ("B", 3, [(2, 5, 5, 0), (3, 9, 9, 0)]),
        ("D", 4, [(4, 12, 12, 0)]),
    ],
)
def test_counts(series, max_n, rows):
    got = springer.counts(GroupSeries(series), max_n)
    assert [(r.n, r.card_group, r.card_algebra, r.difference) for r in got] == rows


def test_exceptional_records():
    f4 = springer.exceptional_delta("F4", 2)
    assert [(e.name, e.b_value) for e in f4.added] == [("1_3", 12), ("2_3", 4)]
    assert "B4" in f4.note
    assert [e.name for e in springer.exceptional_delta("e7", 2).added] == ["84'_a"]
    assert [(e.name, e.b_value) for e in springer.exceptional_delta("E8", 2).added] == [("50_x", 8), ("700_xx", 16)]
    assert springer.exceptional_delta("G2", 3).added == []


def test_exceptional_unknown_case():
    with pytest.raises(UnknownCase):
        springer.exceptional_delta("G2", 5)


def test_good_characteristic_note():
    assert "fS_g = fS_G" in springer.good_characteristic_note(GroupSeries.C)


@pytest.mark.parametrize(
    "series, family",
    [(Series.A, FamilyId.C), (Series.B, FamilyId.B), (Series.D, FamilyId.DD)],
)
def test_fixed_point(series, family):
    for n in range(6):
        assert springer.t2_fixed_point(series, n) == families.enumerate_family(family, n)
