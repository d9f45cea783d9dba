"""Command-line front door: solve, analyze, strategy, verify, search, play, serve.

Pizzas are read from files or inline with the ``inline:`` prefix, e.g.
``pizza solve inline:1,0,1,0``.  Exact fractions are printed as ``p/q``,
never as decimals.  Exit codes: 0 ok, 2 parse error, 3 claim violation
found, 4 infeasible search refused, 1 anything else.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from .core import (
    IllegalMoveError,
    ParseError,
    Pizza,
    PizzaError,
    Player,
    apply_move,
    legal_moves,
    move_for_piece,
    new_game,
    parse_pizza,
    serialize_pizza,
)
from . import analysis, harness
from .solver import (
    StrategyError,
    best_move_hints,
    evaluate_bob,
    evaluate_vs_adversary,
    optimal_value,
)
from . import strategies as strat

EXIT_PARSE = 2
EXIT_VIOLATION = 3
EXIT_INFEASIBLE = 4


def _load_pizza(spec: str) -> Pizza:
    if spec.startswith("inline:"):
        return parse_pizza(spec[len("inline:") :])
    return parse_pizza(Path(spec).read_text())


def _ratio(value: int, total: int) -> Fraction | None:
    if total == 0:
        return None
    return Fraction(value, total)


def _ratio_str(value: int, total: int) -> str:
    frac = _ratio(value, total)
    if frac is None:
        return "n/a"
    return f"{frac.numerator}/{frac.denominator}"


def _ratio_json(value: int, total: int) -> dict | None:
    frac = _ratio(value, total)
    if frac is None:
        return None
    return {"num": frac.numerator, "den": frac.denominator}


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
def main() -> None:
    """Exact solver and strategy toolkit for the circular pizza game."""


@main.command("solve")
@click.argument("pizza_spec")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def cmd_solve(pizza_spec: str, as_json: bool) -> None:
    """Optimal value, ratio to total and one principal line."""
    try:
        pizza = _load_pizza(pizza_spec)
    except (ParseError, OSError) as exc:
        _fail(str(exc), EXIT_PARSE)
    result = optimal_value(pizza)
    if as_json:
        click.echo(
            json.dumps(
                {
                    "sizes": list(pizza.sizes),
                    "value": result.value,
                    "total": pizza.total,
                    "ratio": _ratio_json(result.value, pizza.total),
                    "line": list(result.line),
                    "nodes": result.nodes,
                }
            )
        )
        return
    click.echo(f"value {result.value} of total {pizza.total}")
    click.echo(f"ratio {_ratio_str(result.value, pizza.total)}")
    click.echo("line " + " ".join(str(p) for p in result.line))


@main.command("analyze")
@click.argument("pizza_spec")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def cmd_analyze(pizza_spec: str, as_json: bool) -> None:
    """Hardness, best-answer table summary and tripartition."""
    try:
        pizza = _load_pizza(pizza_spec)
    except (ParseError, OSError) as exc:
        _fail(str(exc), EXIT_PARSE)
    report = analysis.analysis_report(pizza)
    report["optimal"] = optimal_value(pizza).value
    report["optimal_ratio"] = _ratio_json(report["optimal"], pizza.total)
    if as_json:
        click.echo(json.dumps(report))
        return
    click.echo(f"pizza {serialize_pizza(pizza)} (n={pizza.n}, total={pizza.total})")
    click.echo(f"hardness {report['hardness']}")
    click.echo(
        f"best follow value {report['best_fb_value']}"
        + (
            f" (witness piece {report['fb_witness']})"
            if report["fb_witness"] is not None
            else ""
        )
    )
    click.echo(f"optimal {report['optimal']} of total {pizza.total}")
    if "tripartition" in report:
        tri = report["tripartition"]
        cuts = tri["cuts"]
        click.echo(
            f"cuts worst={cuts['worst']} mid={cuts['mid']} best={cuts['best']}"
        )
        for label in ("B", "M", "W"):
            part = tri["parts"][label]
            click.echo(
                f"part {label}: pieces {part['pieces']} major {part['major_size']} "
                f"minor {part['minor_size']}"
            )


@main.command("strategy")
@click.argument("pizza_spec")
@click.argument("strategy_id")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def cmd_strategy(pizza_spec: str, strategy_id: str, as_json: bool) -> None:
    """Exact adversarial value of a strategy and one worst-case line."""
    try:
        pizza = _load_pizza(pizza_spec)
    except (ParseError, OSError) as exc:
        _fail(str(exc), EXIT_PARSE)
    try:
        strategy = strat.strategy_from_id(pizza, strategy_id)
    except (StrategyError, PizzaError) as exc:
        _fail(str(exc), 1)
    if strategy.seat is Player.BOB:
        result = evaluate_bob(pizza, strategy)
        payload = {
            "sizes": list(pizza.sizes),
            "strategy": strategy.strategy_id,
            "seat": "bob",
            "bob_value": result.bob_value,
            "alice_value": result.alice_value,
            "total": pizza.total,
            "line": list(result.line),
        }
        if as_json:
            click.echo(json.dumps(payload))
            return
        click.echo(
            f"strategy {strategy.strategy_id}: bob guaranteed {result.bob_value} "
            f"of total {pizza.total} (alice best {result.alice_value})"
        )
        click.echo("line " + " ".join(str(p) for p in result.line))
        return
    result = evaluate_vs_adversary(pizza, strategy)
    payload = {
        "sizes": list(pizza.sizes),
        "strategy": strategy.strategy_id,
        "seat": "alice",
        "value": result.value,
        "total": pizza.total,
        "ratio": _ratio_json(result.value, pizza.total),
        "line": list(result.line),
    }
    if as_json:
        click.echo(json.dumps(payload))
        return
    click.echo(
        f"strategy {strategy.strategy_id}: alice guaranteed {result.value} "
        f"of total {pizza.total} (ratio {_ratio_str(result.value, pizza.total)})"
    )
    click.echo("line " + " ".join(str(p) for p in result.line))


def _parse_int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


@main.command("verify")
@click.option("--claim", "claim_id", required=True, help="registered claim id")
@click.option("--ns", default="1,2,3,4,5,6,7,8,9", show_default=True, help="piece counts, comma separated")
@click.option("--alphabet", default="0,1,2", show_default=True, help="piece sizes, comma separated")
@click.option("--no-canonical", is_flag=True, help="enumerate all sequences, not one per symmetry class")
@click.option("--random-count", type=int, default=0, help="use a seeded random family instead")
@click.option("--random-n", type=int, default=9)
@click.option("--random-max", type=int, default=4)
@click.option("--seed", type=int, default=0)
@click.option("--pizzas-file", type=click.Path(exists=True), default=None, help="file with one pizza per line")
@click.option("--out", type=click.Path(), default=None, help="write the JSON report here")
@click.option("--list-claims", is_flag=True, help="list known claim ids and exit")
def cmd_verify(
    claim_id, ns, alphabet, no_canonical, random_count, random_n, random_max,
    seed, pizzas_file, out, list_claims,
) -> None:
    """Check one registered claim over a pizza family."""
    if list_claims:
        for cid in sorted(harness.CLAIMS):
            click.echo(f"{cid}: {harness.CLAIMS[cid].description}")
        return
    try:
        if pizzas_file:
            family = [
                parse_pizza(line)
                for line in Path(pizzas_file).read_text().splitlines()
                if line.strip()
            ]
            family_desc = f"file:{pizzas_file}"
        elif random_count:
            family = [
                harness.random_pizza(random_n, random_max, seed + i)
                for i in range(random_count)
            ]
            family_desc = (
                f"random(n={random_n}, max={random_max}, seed={seed}, "
                f"count={random_count})"
            )
        else:
            ns_list = _parse_int_list(ns)
            alpha = _parse_int_list(alphabet)
            family = [
                p
                for n in ns_list
                for p in harness.enumerate_pizzas(n, alpha, canonical=not no_canonical)
            ]
            family_desc = f"exhaustive(ns={ns_list}, alphabet={alpha}, canonical={not no_canonical})"
    except (ParseError, PizzaError) as exc:
        _fail(str(exc), EXIT_PARSE)
    try:
        report = harness.verify_family(family, claim_id, family_desc)
    except PizzaError as exc:
        _fail(str(exc), 1)
    click.echo(report.summary())
    if out:
        Path(out).write_text(json.dumps(report.to_json(), indent=2) + "\n")
        click.echo(f"report written to {out}")
    if not report.ok:
        for violation in report.violations[:10]:
            click.echo(f"violation: {violation}")
        sys.exit(EXIT_VIOLATION)


@main.command("search")
@click.option("--n", type=int, help="piece count")
@click.option("--alphabet", default="0,1,2", show_default=True)
@click.option("--predicate", default="total9-optimal4", show_default=True,
              help="named predicate: " + ", ".join(sorted(harness.SEARCH_PREDICATES)))
@click.option("--total", type=int, default=None, help="restrict to an exact total")
@click.option("--force", is_flag=True, help="run even if the space is huge")
@click.option("--out", type=click.Path(), default=None)
@click.option("--minimality", is_flag=True,
              help="opt-in long scan: all n up to --n-max, pizzas where optimal play does not beat 4/9")
@click.option("--n-max", type=int, default=20, show_default=True)
@click.option("--checkpoint", type=click.Path(), default=None,
              help="resumable progress file for --minimality")
def cmd_search(n, alphabet, predicate, total, force, out, minimality, n_max, checkpoint) -> None:
    """Enumerate canonical pizzas matching an extremal predicate."""
    try:
        alpha = _parse_int_list(alphabet)
    except ValueError:
        _fail("alphabet must be a comma-separated list of integers", EXIT_PARSE)
    if minimality:
        findings = harness.minimality_scan(alpha, n_max=n_max, checkpoint_path=checkpoint)
        click.echo(f"minimality scan over n<=({n_max}): {len(findings)} findings")
        for p in findings:
            click.echo(serialize_pizza(p))
        if out:
            Path(out).write_text(
                json.dumps({"findings": [list(p.sizes) for p in findings]}, indent=2)
                + "\n"
            )
        return
    if n is None:
        _fail("--n is required unless --minimality is given", EXIT_PARSE)
    try:
        found = harness.find_extremal(n, alpha, predicate, total=total, force=force)
    except PizzaError as exc:
        message = str(exc)
        if "exceeds" in message:
            _fail(message, EXIT_INFEASIBLE)
        _fail(message, 1)
    click.echo(f"{len(found)} canonical pizzas match {predicate!r} at n={n}")
    for p in found:
        click.echo(serialize_pizza(p))
    if out:
        Path(out).write_text(
            json.dumps(
                {
                    "n": n,
                    "alphabet": alpha,
                    "predicate": predicate,
                    "found": [list(p.sizes) for p in found],
                },
                indent=2,
            )
            + "\n"
        )


def _render_board(state) -> str:
    pizza = state.pizza
    eaters: dict[int, str] = {}
    for i, move in enumerate(state.history):
        eaters[move.piece] = "A" if i % 2 == 0 else "B"
    cells = []
    available = {m.piece for m in legal_moves(state)}
    for i, size in enumerate(pizza.sizes):
        mark = eaters.get(i, "*" if i in available else ".")
        cells.append(f"{i}:{size}{mark}")
    return "  ".join(cells)


@main.command("play")
@click.argument("pizza_spec")
@click.option("--as", "role", type=click.Choice(["alice", "bob"]), default="alice", show_default=True)
@click.option("--opponent", default="optimal", show_default=True, help="engine strategy id")
@click.option("--hints", is_flag=True, help="print optimal what-if values each turn")
def cmd_play(pizza_spec: str, role: str, opponent: str, hints: bool) -> None:
    """Play one game in the terminal against an engine strategy."""
    try:
        pizza = _load_pizza(pizza_spec)
    except (ParseError, OSError) as exc:
        _fail(str(exc), EXIT_PARSE)
    human = Player.ALICE if role == "alice" else Player.BOB
    engine_seat = human.opponent
    try:
        engine = strat.strategy_from_id(pizza, opponent, seat=engine_seat)
    except (StrategyError, PizzaError) as exc:
        _fail(str(exc), 1)
    state = new_game(pizza)
    sigma = engine.initial()
    click.echo(f"pizza {serialize_pizza(pizza)}; you play {human.value}")
    if engine_seat is Player.ALICE:
        opening = engine.opening()
        state = apply_move(state, move_for_piece(state, opening))
        click.echo(f"engine opens with piece {opening}")
    while not state.finished:
        click.echo(_render_board(state))
        if hints:
            values = best_move_hints(state)
            click.echo(
                "hints: "
                + "  ".join(f"{p}->{v}" for p, v in sorted(values.items()))
            )
        piece = click.prompt("your piece", type=int)
        try:
            state = apply_move(state, move_for_piece(state, piece))
        except (IllegalMoveError, PizzaError) as exc:
            click.echo(f"illegal: {exc}")
            continue
        if state.finished:
            break
        move, sigma = engine.respond_state(state, sigma)
        state = apply_move(state, move)
        click.echo(f"engine eats piece {move.piece}")
    alice_score, bob_score = state.scores
    click.echo(_render_board(state))
    click.echo(f"final scores: alice {alice_score}, bob {bob_score}")
    your = state.score_of(human)
    click.echo(
        f"you ate {your} of {pizza.total} "
        f"(ratio {_ratio_str(your, pizza.total)})"
    )


@main.command("serve")
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--bind", default="127.0.0.1", show_default=True)
def cmd_serve(port: int, bind: str) -> None:
    """Run the HTTP API for the browser UI."""
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=bind, port=port)


if __name__ == "__main__":
    main()
