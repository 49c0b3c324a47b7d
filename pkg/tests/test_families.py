import pytest

from app.models.schemas import ClosureRule, FamilyId
from app.services import families, seqcore
from app.utils.errors import CapExceeded


def pair(a, a_prime):
    return seqcore.make_pair(a, a_prime)


def test_member_examples():
    assert families.member(pair([0, 0, 0], [0, 0, 2]), FamilyId.B)
    assert not families.member(pair([0, 0, 1], [0, 0, 2]), FamilyId.DD)


def test_zero_pair_is_in_every_family():
    for family in FamilyId:
        assert families.member(seqcore.zero_pair(3), family)


def test_d_accepts_equal_components_only_when_diagonal():
    assert families.member(pair([0, 1], [0, 1]), FamilyId.D)
    assert not families.member(pair([0, 2], [1, 1]), FamilyId.D)
    assert families.member(pair([0, 2], [0, 1]), FamilyId.D)


@pytest.mark.parametrize("n, expected", enumerate([1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481]))
def test_enumerate_c_counts_bipartitions(n, expected):
    assert len(families.enumerate_family(FamilyId.C, n)) == expected
    assert families.bipartition_count(n) == expected


def test_enumerate_dd_2():
    assert families.enumerate_family(FamilyId.DD, 2) == [
        pair([0, 0, 0, 1], [0, 0, 0, 1]),
        pair([0, 0, 0, 2], [0, 0, 0, 0]),
        pair([0, 0, 1, 1], [0, 0, 0, 0]),
    ]


def test_enumerate_c_0_is_the_zero_pair():
    assert families.enumerate_family(FamilyId.C, 0) == [seqcore.zero_pair(1)]


@pytest.mark.parametrize(
    "family, n, expected",
    [
        (FamilyId.DD, 4, 10),
        (FamilyId.B, 3, 9),
        (FamilyId.B2, 3, 9),
    ],
)
def test_family_sizes(family, n, expected):
    assert len(families.enumerate_family(family, n)) == expected


def test_d2_agrees_with_dd_at_4():
    assert families.enumerate_family(FamilyId.D2, 4) == families.enumerate_family(FamilyId.DD, 4)


def test_enumeration_is_sorted_and_canonical():
    pairs = families.enumerate_family(FamilyId.C, 4)
    assert pairs == sorted(pairs)
    assert all(p.k == 5 and p.n == 4 for p in pairs)


def test_enumerate_respects_cap():
    with pytest.raises(CapExceeded):
        families.enumerate_family(FamilyId.C, 13)


def test_parse_rule():
    assert families.parse_rule("b+dd=b") == ClosureRule(left=FamilyId.B, right=FamilyId.DD, target=FamilyId.B)
    with pytest.raises(ValueError):
        families.parse_rule("b+dd")
    with pytest.raises(ValueError):
        families.parse_rule("b+x=b")


@pytest.mark.parametrize("rule", families.CLOSURE_RULES, ids=str)
def test_closure_rules_hold(rule):
    report = families.verify_closure(rule, 4)
    assert report.passed
    assert report.counterexample is None
    assert report.checked > 0


def test_closure_finds_counterexample():
    rule = families.parse_rule("b+b=b")
    report = families.verify_closure(rule, 4)
    assert not report.passed
    x, y = report.counterexample
    assert families.member(x, FamilyId.B)
    assert families.member(y, FamilyId.B)
    assert not families.member(seqcore.add(x, y), FamilyId.B)
    assert x.n + y.n <= 4


def test_closure_report_dumps_pass():
    report = families.verify_closure(families.CLOSURE_RULES[0], 2)
    assert report.model_dump(by_alias=True)["pass"] is True


def test_closure_respects_cap():
    with pytest.raises(CapExceeded):
        families.verify_closure(families.CLOSURE_RULES[0], 11)


def test_chains_hold():
    results = families.verify_chains(6)
    assert [name for name, _ in results] == ["b1C ⊆ b2C ⊆ bC", "c1C ⊆ b2C ⊆ C", "d1D ⊆ d2D ⊆ dD"]
    assert all(witness is None for _, witness in results)


@pytest.mark.exhaustive
@pytest.mark.parametrize("rule", families.CLOSURE_RULES, ids=str)
def test_closure_rules_hold_to_eight(rule):
    assert families.verify_closure(rule, 8).passed


@pytest.mark.exhaustive
def test_chains_hold_to_ten():
    assert all(witness is None for _, witness in families.verify_chains(10))
