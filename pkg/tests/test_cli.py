import json

import pytest
from click.testing import CliRunner

from app.cli import cli
from app.utils import errors


D_PAIR = '{"a": [0, 3, 3], "a_prime": [0, 0, 0]}'


@pytest.fixture
def runner():
    return CliRunner()


def test_enumerate_json(runner):
    result = runner.invoke(cli, ["enumerate", "--family", "dd", "--n", "2", "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert len(data) == 3
    assert data[0] == {"a": [0, 0, 0, 1], "a_prime": [0, 0, 0, 1]}


def test_enumerate_csv(runner):
    result = runner.invoke(cli, ["enumerate", "--family", "dd", "--n", "2", "--format", "csv"])
    assert result.exit_code == 0
    assert result.output == "a,a_prime\n0 0 0 1,0 0 0 1\n0 0 0 2,0 0 0 0\n0 0 1 1,0 0 0 0\n"


def test_enumerate_cap(runner):
    result = runner.invoke(cli, ["enumerate", "--family", "c", "--n", "13"])
    assert result.exit_code == 3


def test_unknown_family_is_a_usage_error(runner):
    result = runner.invoke(cli, ["enumerate", "--family", "x", "--n", "2"])
    assert result.exit_code == 2


def test_member(runner):
    result = runner.invoke(cli, ["member", "--family", "b", "--pair", '{"a": [0, 0, 0], "a_prime": [0, 0, 2]}'])
    assert result.exit_code == 0
    assert json.loads(result.output)["member"] is True


def test_decompose_text(runner):
    result = runner.invoke(cli, ["decompose", "--series", "d", "--pair", D_PAIR, "--format", "text"])
    assert result.exit_code == 0
    assert result.output == "split [c1] m=4 m'=2: (0 2 2 | 0 0 0) + (0 1 1 | 0 0 0)\n"


def test_decompose_terminal_json(runner):
    pair = '{"a": [0, 1, 2], "a_prime": [0, 0, 0]}'
    result = runner.invoke(cli, ["decompose", "--series", "a", "--pair", pair])
    assert json.loads(result.output) == {"kind": "terminal"}
    eager = runner.invoke(cli, ["decompose", "--series", "a", "--pair", pair, "--eager"])
    assert json.loads(eager.output)["left"] == {"a": [0, 0, 1], "a_prime": [0, 0, 0]}


@pytest.mark.parametrize(
    "args, code",
    [
        (["decompose", "--series", "a", "--pair", '{"a": [1, 0], "a_prime": [0, 0]}'], 4),
        (["decompose", "--series", "a", "--pair", '{"a": [0, 1], "a_prime": [0, 0, 0]}'], 9),
        (["member", "--family", "c", "--pair", '{"a": [0, 1.5], "a_prime": [0, 2]}'], 4),
        (["member", "--family", "c", "--pair", '{"a": [0, "x"], "a_prime": [0, 2]}'], 4),
        (["member", "--family", "c", "--pair", '{"a": [0, true], "a_prime": [0, 1]}'], 4),
        (["member", "--family", "c", "--pair", '{"a": 3, "a_prime": [0, 2]}'], 2),
        (["member", "--family", "c", "--pair", "[0, 1]"], 2),
        (["springer-set", "--type", "c", "--n", "3", "--side", "group", "--p", "4"], 2),
        (["exceptional", "--type", "e8", "--p", "9"], 2),
        (["decompose", "--series", "d", "--pair", '{"a": [0, 0], "a_prime": [0, 1]}'], 5),
        (["decompose", "--series", "a", "--pair", '{"a": [1, 1], "a_prime": [0, 0]}'], 6),
        (["decompose", "--series", "a", "--pair", "not json"], 2),
        (["exceptional", "--type", "g2", "--p", "5"], 7),
        (["verify", "--max-n", "3"], 2),
        (["verify", "--all", "--max-n", "11"], 3),
    ],
)
def test_exit_codes(runner, args, code):
    assert runner.invoke(cli, args).exit_code == code


def test_atomize_csv(runner):
    result = runner.invoke(cli, ["atomize", "--series", "d", "--pair", D_PAIR, "--format", "csv"])
    assert result.exit_code == 0
    assert result.output == "a,a_prime,series,family\n0 2 2,0 0 0,d,d1\n0 1 1,0 0 0,d,d1\n"


def test_verify_closure_text(runner):
    result = runner.invoke(cli, ["verify", "--closure", "dd+dd=dd", "--max-n", "4", "--format", "text"])
    assert result.exit_code == 0
    assert result.output == "pass\n"


def test_verify_closure_failure(runner):
    result = runner.invoke(cli, ["verify", "--closure", "b+b=b", "--max-n", "4"])
    assert result.exit_code == 1
    assert json.loads(result.output)["pass"] is False


def test_verify_decompositions(runner):
    result = runner.invoke(cli, ["verify", "--prop12", "--series", "d", "--max-n", "6"])
    assert result.exit_code == 0
    (report,) = json.loads(result.output)
    assert report["series"] == "d"
    assert report["pass"] is True


def test_verify_all_is_byte_identical(runner):
    first = runner.invoke(cli, ["verify", "--all", "--max-n", "4", "--format", "csv"])
    second = runner.invoke(cli, ["verify", "--all", "--max-n", "4", "--format", "csv"])
    assert first.exit_code == 0
    assert first.output == second.output
    assert first.output.startswith("check,result,detail\n")


def test_counts_csv(runner):
    result = runner.invoke(cli, ["counts", "--series", "c", "--max-n", "3", "--format", "csv"])
    assert result.exit_code == 0
    assert result.output == "series,n,card_group,card_algebra,difference\nC,2,5,5,0\nC,3,9,10,1\n"


def test_springer_set_json(runner):
    result = runner.invoke(cli, ["springer-set", "--type", "d", "--n", "4", "--side", "algebra"])
    assert result.exit_code == 0
    labels = json.loads(result.output)
    assert len(labels) == 12
    assert {label["split"] for label in labels} == {None, "I", "II"}
    assert labels[0]["series"] == "D"


def test_springer_set_good_characteristic(runner):
    result = runner.invoke(cli, ["springer-set", "--type", "c", "--n", "3", "--side", "group", "--p", "3"])
    assert result.exit_code == 0
    assert "fS_g = fS_G" in result.output


def test_tau(runner):
    result = runner.invoke(cli, ["tau", "--type", "c", "--n", "3"])
    data = json.loads(result.output)
    assert data["injective"] is True
    assert data["bijective"] is False
    assert len(data["unhit"]) == 1


def test_exceptional(runner):
    result = runner.invoke(cli, ["exceptional", "--type", "f4", "--p", "2", "--format", "csv"])
    assert result.exit_code == 0
    assert result.output == "type,p,name,b_value\nF4,2,1_3,12\nF4,2,2_3,4\n"


def test_output_file(runner, tmp_path):
    target = tmp_path / "dd.json"
    result = runner.invoke(cli, ["enumerate", "--family", "dd", "--n", "2", "--output", str(target)])
    assert result.exit_code == 0
    assert result.output == ""
    assert len(json.loads(target.read_text())) == 3


@pytest.mark.exhaustive
def test_verify_decompositions_to_eight(runner):
    result = runner.invoke(cli, ["verify", "--prop12", "--series", "d", "--max-n", "8"])
    assert result.exit_code == 0


def test_fractional_entry_is_not_truncated(runner):
    result = runner.invoke(cli, ["member", "--family", "c", "--pair", '{"a": [0, 1.5], "a_prime": [0, 2]}'])
    assert result.exit_code == 4
    assert '"member"' not in result.output
    assert not isinstance(result.exception, ValueError)


def test_exit_codes_are_distinct():
    codes = [cls.exit_code for cls in (
        errors.SymbolError, errors.NotNondecreasing, errors.LengthMismatch, errors.NotInFamily,
        errors.NotNormalized, errors.CapExceeded, errors.UnknownCase, errors.NotStabilizable,
        errors.DecompositionError,
    )]
    assert len(set(codes)) == len(codes)
    assert not {0, 1, 2} & set(codes)
