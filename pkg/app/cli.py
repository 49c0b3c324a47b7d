"""Command-line front end: `symbols VERB [options]`."""

from __future__ import annotations

import json
import logging
import sys
from typing import Any, Iterable, Optional, Sequence

import click
from pydantic import ValidationError

from app.models.schemas import FamilyId, GroupSeries, GroupType, Series, Side, SymbolPair
from app.services import decomp, families, seqcore, springer, verification
from app.services.formatting import FORMATS, render, seq_cell
from app.utils.errors import SymbolError, check_cap
from config.settings import Limits

logger = logging.getLogger(__name__)

EXIT_VERIFICATION_FAILED = 1

PAIR_HINT = 'expected JSON like {"a": [0, 1], "a_prime": [0, 1]}'


class PairParam(click.ParamType):
    name = "PAIR"

    def convert(self, value, param, ctx):
        if isinstance(value, SymbolPair):
            return value
        try:
            data = json.loads(value)
            a, a_prime = data["a"], data["a_prime"]
        except (ValueError, KeyError, TypeError):
            self.fail(PAIR_HINT, param, ctx)
        if not isinstance(a, list) or not isinstance(a_prime, list):
            self.fail(PAIR_HINT, param, ctx)
        try:
            return seqcore.make_pair(a, a_prime)
        except SymbolError:
            raise
        except (ValueError, TypeError, ValidationError) as e:
            self.fail(f"invalid pair: {e}", param, ctx)


class RuleParam(click.ParamType):
    name = "LEFT+RIGHT=TARGET"

    def convert(self, value, param, ctx):
        try:
            return families.parse_rule(value)
        except ValueError as e:
            self.fail(str(e), param, ctx)


class SymbolsGroup(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except SymbolError as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(e.exit_code)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except Exception as e:
            logger.debug("unexpected failure", exc_info=True)
            click.echo(f"internal error: {e}", err=True)
            ctx.exit(SymbolError.exit_code)


FAMILY_CHOICE = click.Choice([f.value for f in FamilyId])
SERIES_CHOICE = click.Choice([s.value for s in Series])
TYPE_CHOICE = click.Choice(["b", "c", "d"])


def _prime(ctx, param, value):
    if value is not None and (value < 2 or any(value % d == 0 for d in range(2, int(value**0.5) + 1))):
        raise click.BadParameter(f"{value} is not a prime")
    return value


def output_options(f):
    f = click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)(f)
    f = click.option("--output", "output", type=click.Path(dir_okay=False, writable=True), default=None)(f)
    f = click.option("--unsafe-cap", is_flag=True, help="Lift the size caps.")(f)
    return f


def _caps(unsafe_cap: bool) -> tuple[Optional[int], Optional[int]]:
    if unsafe_cap:
        return None, None
    limits = Limits()
    return limits.enumerate_cap, limits.exhaustive_cap


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _show(fmt: str, output: Optional[str], data: Any, headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    _emit(render(fmt, data, headers, rows), output)


def _pair_rows(pairs: Iterable[SymbolPair]):
    return [(seq_cell(p.a), seq_cell(p.a_prime)) for p in pairs]


@click.group(cls=SymbolsGroup)
@click.option("--log-level", default="WARNING", show_default=True, help="Log level for messages on stderr.")
def cli(log_level: str) -> None:
    """Symbol-pair families, their decompositions and the orbit parametrizations they describe."""
    logging.basicConfig(level=log_level.upper(), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


@cli.command("enumerate")
@click.option("--family", type=FAMILY_CHOICE, required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@output_options
def enumerate_cmd(family: str, n: int, fmt: str, output: Optional[str], unsafe_cap: bool) -> None:
    """List a family at size n (k = n + 1)."""
    enumerate_cap, _ = _caps(unsafe_cap)
    pairs = families.enumerate_family(FamilyId(family), n, cap=enumerate_cap)
    _show(fmt, output, pairs, ("a", "a_prime"), _pair_rows(pairs))


@cli.command("member")
@click.option("--family", type=FAMILY_CHOICE, required=True)
@click.option("--pair", type=PairParam(), required=True)
@output_options
def member_cmd(family: str, pair: SymbolPair, fmt: str, output: Optional[str], unsafe_cap: bool) -> None:
    """Test a pair against a family's inequalities."""
    result = families.member(pair, FamilyId(family))
    data = {"pair": pair, "family": family, "member": result}
    _show(fmt, output, data, ("family", "member"), [(family, str(result).lower())])


@cli.command("decompose")
@click.option("--series", type=SERIES_CHOICE, required=True)
@click.option("--pair", type=PairParam(), required=True)
@click.option("--eager", is_flag=True, help="Follow the proof's case analysis even for terminal inputs.")
@output_options
def decompose_cmd(series: str, pair: SymbolPair, eager: bool, fmt: str, output: Optional[str], unsafe_cap: bool) -> None:
    """One decomposition step."""
    step = decomp.decompose_step(pair, Series(series), eager=eager)
    if step.is_split:
        row = (step.kind, step.m, step.m_prime, step.proof_case,
               seq_cell(step.left.a), seq_cell(step.left.a_prime), seq_cell(step.right.a), seq_cell(step.right.a_prime))
    else:
        row = (step.kind, None, None, step.proof_case, None, None, None, None)
    if fmt == "text":
        _emit(step.text(), output)
        return
    headers = ("kind", "m", "m_prime", "proof_case", "left_a", "left_a_prime", "right_a", "right_a_prime")
    _show(fmt, output, step.as_json(), headers, [row])


@cli.command("atomize")
@click.option("--series", type=SERIES_CHOICE, required=True)
@click.option("--pair", type=PairParam(), required=True)
@output_options
def atomize_cmd(series: str, pair: SymbolPair, fmt: str, output: Optional[str], unsafe_cap: bool) -> None:
    """Split recursively down to terminal pairs."""
    leaves = decomp.atomize(pair, Series(series))
    rows = [(seq_cell(leaf.pair.a), seq_cell(leaf.pair.a_prime), leaf.series.value, leaf.family.value) for leaf in leaves]
    _show(fmt, output, leaves, ("a", "a_prime", "series", "family"), rows)


@cli.command("verify")
@click.option("--closure", "rule", type=RuleParam(), default=None)
@click.option("--prop12", is_flag=True)
@click.option("--chains", is_flag=True)
@click.option("--fixed-point", is_flag=True)
@click.option("--all", "run_all", is_flag=True)
@click.option("--series", type=SERIES_CHOICE, default=None, help="Restrict --prop12 to one series.")
@click.option("--max-n", "max_n", type=click.IntRange(min=0), default=8, show_default=True)
@output_options
def verify_cmd(rule, prop12: bool, chains: bool, fixed_point: bool, run_all: bool, series: Optional[str],
               max_n: int, fmt: str, output: Optional[str], unsafe_cap: bool) -> None:
    """Exhaustive checks; exit status 1 when any fails."""
    chosen = [flag for flag in (rule is not None, prop12, chains, fixed_point, run_all) if flag]
    if len(chosen) != 1:
        raise click.UsageError("choose exactly one of --closure, --prop12, --chains, --fixed-point, --all")
    _, exhaustive_cap = _caps(unsafe_cap)
    check_cap(max_n, exhaustive_cap)

    if rule is not None:
        report = families.verify_closure(rule, max_n, cap=None)
        if fmt == "text":
            text = "pass" if report.passed else "fail: {} + {}".format(*(p.text() for p in report.counterexample))
            _emit(text, output)
        else:
            cx = report.counterexample
            row = (report.rule, report.max_n, str(report.passed).lower(), report.checked,
                   cx[0].text() if cx else None, cx[1].text() if cx else None)
            _show(fmt, output, report, ("rule", "max_n", "pass", "checked", "left", "right"), [row])
        passed = report.passed
    elif prop12:
        chosen_series = [Series(series)] if series else list(Series)
        reports = [decomp.verify_decompositions(s, max_n, cap=None) for s in chosen_series]
        passed = all(r.passed for r in reports)
        data = [{**r.model_dump(mode="json"), "pass": r.passed} for r in reports]
        rows = [(r.series.value, r.max_n, r.checked, r.terminal, r.split, r.oracle_checked, r.both,
                 len(r.failures), str(r.passed).lower()) for r in reports]
        headers = ("series", "max_n", "checked", "terminal", "split", "oracle_checked", "both", "failures", "pass")
        _show(fmt, output, data, headers, rows)
    else:
        if chains:
            checks = verification.chain_checks(max_n)
        elif fixed_point:
            checks = verification.fixed_point_checks(max_n)
        else:
            checks = verification.run_all(max_n, cap=None).checks
        passed = all(c.passed for c in checks)
        data = {"max_n": max_n, "checks": checks, "pass": passed}
        rows = [(c.name, "pass" if c.passed else "fail", c.detail) for c in checks]
        _show(fmt, output, data, ("check", "result", "detail"), rows)
    if not passed:
        sys.exit(EXIT_VERIFICATION_FAILED)


@cli.command("springer-set")
@click.option("--type", "group_type", type=TYPE_CHOICE, required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--side", type=click.Choice([s.value for s in Side]), required=True)
@click.option("--p", "p", type=int, default=2, show_default=True, callback=_prime, help="Characteristic (a prime); only 2 is computed.")
@output_options
def springer_set_cmd(group_type: str, n: int, side: str, p: int, fmt: str, output: Optional[str], unsafe_cap: bool) -> None:
    """Labels of the orbit set on the group or algebra side."""
    series = GroupSeries(group_type.upper())
    if p != 2:
        _emit(springer.good_characteristic_note(series), output)
        return
    enumerate_cap, _ = _caps(unsafe_cap)
    check_cap(n, enumerate_cap)
    result = springer.springer_set(GroupType(series=series, n=n), Side(side))
    rows = [(seq_cell(label.pair.a), seq_cell(label.pair.a_prime), label.split) for label in result.labels]
    _show(fmt, output, result.labels, ("a", "a_prime", "split"), rows)


@cli.command("tau")
@click.option("--type", "group_type", type=TYPE_CHOICE, required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@output_options
def tau_cmd(group_type: str, n: int, fmt: str, output: Optional[str], unsafe_cap: bool) -> None:
    """Group-side labels mapped into algebra-side labels."""
    enumerate_cap, _ = _caps(unsafe_cap)
    check_cap(n, enumerate_cap)
    mapping = springer.tau(GroupType(series=GroupSeries(group_type.upper()), n=n))
    data = {
        "group": str(mapping.group),
        "pairs": [{"from": source, "to": target} for source, target in mapping.pairs],
        "unhit": mapping.unhit,
        "injective": mapping.injective,
        "bijective": mapping.bijective,
    }
    rows = [(source.text(), target.text()) for source, target in mapping.pairs]
    rows += [("", label.text()) for label in mapping.unhit]
    _show(fmt, output, data, ("group_label", "algebra_label"), rows)


@cli.command("counts")
@click.option("--series", type=TYPE_CHOICE, required=True)
@click.option("--max-n", "max_n", type=click.IntRange(min=0), required=True)
@output_options
def counts_cmd(series: str, max_n: int, fmt: str, output: Optional[str], unsafe_cap: bool) -> None:
    """Cardinalities of both sides for every rank up to max-n."""
    _, exhaustive_cap = _caps(unsafe_cap)
    rows = springer.counts(GroupSeries(series.upper()), max_n, cap=exhaustive_cap)
    table = [(r.series.value, r.n, r.card_group, r.card_algebra, r.difference) for r in rows]
    _show(fmt, output, rows, ("series", "n", "card_group", "card_algebra", "difference"), table)


@cli.command("exceptional")
@click.option("--type", "group_type", type=click.Choice(["g2", "f4", "e6", "e7", "e8"]), required=True)
@click.option("--p", "p", type=int, required=True, callback=_prime)
@output_options
def exceptional_cmd(group_type: str, p: int, fmt: str, output: Optional[str], unsafe_cap: bool) -> None:
    """Representations added on the algebra side for an exceptional type at a bad prime."""
    record = springer.exceptional_delta(group_type, p)
    rows = [(record.group_type, record.p, entry.name, entry.b_value) for entry in record.added]
    _show(fmt, output, record, ("type", "p", "name", "b_value"), rows)


def main() -> None:
    cli(prog_name="symbols")


if __name__ == "__main__":
    main()
