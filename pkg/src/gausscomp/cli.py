"""Command-line interface.

Exit codes: 0 success, 1 verification or property failure, 2 usage or
parse error, 3 discriminant ratio not a rational square.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field

from .bilinear import BilinearLaw, measure, theorem_clauses, verify
from .compose import compose
from .errors import CompositionError, NonSquareRatio, UsageError
from .forms import Form, invariants, represent_search, trigroup_check
from .fuzz import run_identities
from .lawio import dumps_law, load_law, parse_form

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONSQUARE = 0, 1, 2, 3

# a leading '-' would make argparse read "-1,0,5" as an option
_NEG_LITERAL = re.compile(r"^\(?-\d+\s*,")


@dataclass
class CliConfig:
    command: str
    seed: int = 0
    trials: int = 1000
    bound: int = 100
    value_bound: int = 30
    args: list = field(default_factory=list)


def _fmt(q) -> str:
    return str(q)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _cmd_invariants(cfg: CliConfig) -> int:
    inv = invariants(parse_form(cfg.args[0]))
    for name in ("delta", "delta_prime", "sigma", "disc", "theta"):
        print(f"{name}={getattr(inv, name)}")
    return EXIT_OK


def _cmd_verify(cfg: CliConfig) -> int:
    f, fp, F, law = load_law(cfg.args[0])
    try:
        nu, nup, delta = measure(f, fp, F, law)
    except CompositionError as exc:
        print(f"not a composition: {exc}", file=sys.stderr)
        return EXIT_FAIL
    clauses = theorem_clauses(f, fp, F, nu, nup, delta)
    print(f"nu={_fmt(nu)}")
    print(f"nu_prime={_fmt(nup)}")
    print(f"Delta={_fmt(delta)}")
    print(f"direct={_bool(nu > 0 and nup > 0)}")
    for name, ok in clauses.items():
        print(f"{name}: {'pass' if ok else 'fail'}")
    return EXIT_OK if all(clauses.values()) else EXIT_FAIL


def _cmd_compose(cfg: CliConfig) -> int:
    f, fp = parse_form(cfg.args[0]), parse_form(cfg.args[1])
    try:
        rep = compose(f, fp)
    except NonSquareRatio as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NONSQUARE
    v = rep.result
    sys.stdout.write(dumps_law(v.f, v.fprime, v.F, v.law))
    return EXIT_OK


def _cmd_identities(cfg: CliConfig) -> int:
    if cfg.trials < 1:
        raise UsageError("--trials must be positive")
    if cfg.seed < 0:
        raise UsageError("--seed must be nonnegative")
    tallies = run_identities(cfg.seed, cfg.trials)
    print(f"seed={cfg.seed} trials={cfg.trials}")
    failed = 0
    for name, t in tallies.items():
        print(f"{name}: passed={t.passed} failed={t.failed} skipped={t.skipped}")
        failed += t.failed
    return EXIT_OK if failed == 0 else EXIT_FAIL


def _cmd_represent(cfg: CliConfig) -> int:
    f = parse_form(cfg.args[0])
    try:
        m = int(cfg.args[1])
    except ValueError:
        raise UsageError(f"bad integer token {cfg.args[1]!r}") from None
    w = represent_search(f, m, cfg.bound)
    print("none" if w is None else f"({w.x},{w.y})")
    return EXIT_OK


def _cmd_trigroup(cfg: CliConfig) -> int:
    f = parse_form(cfg.args[0])
    failing = trigroup_check(f, cfg.value_bound, cfg.bound)
    if not failing:
        print("ok")
        return EXIT_OK
    for t in failing:
        print(" ".join(map(str, t)))
    return EXIT_FAIL


def demo_laws() -> list[tuple[str, Form, Form, Form, BilinearLaw]]:
    """The worked identities: sums of squares, x^2 + d y^2 for d = 1..10,
    and (2,2,3) * (2,2,3) = (1,0,5)."""
    out = [(
        "sum of two squares",
        Form(1, 0, 1), Form(1, 0, 1), Form(1, 0, 1),
        BilinearLaw.from_list([(1, 0), (0, 1), (0, 1), (-1, 0)]),
    )]
    for d in range(1, 11):
        f = Form(1, 0, d)
        out.append((f"x^2+{d}y^2", f, f, f,
                    BilinearLaw.from_list([(1, 0), (0, 1), (0, 1), (-d, 0)])))
    out.append((
        "(2,2,3) with itself",
        Form(2, 2, 3), Form(2, 2, 3), Form(1, 0, 5),
        BilinearLaw.from_list([(2, 0), (1, 1), (1, 1), (-2, 1)]),
    ))
    return out


def _cmd_demo(cfg: CliConfig) -> int:
    ok = True
    for label, f, fp, F, law in demo_laws():
        try:
            v = verify(f, fp, F, law)
            line = f"nu={v.nu} nu_prime={v.nuprime} Delta={v.delta_cap} direct={_bool(v.direct)}"
            good = v.direct
        except CompositionError as exc:
            line, good = f"FAILED: {exc}", False
        ok &= good
        print(f"{label}: {f} x {fp} -> {F}: {line}")
    rep = compose(Form(2, 2, 3), Form(2, 2, 3))
    same = rep.result.F == Form(1, 0, 5) and rep.result.law == demo_laws()[-1][4]
    ok &= same
    print(f"compose (2,2,3) (2,2,3) -> {rep.result.F}, law matches worked example: {_bool(same)}")
    failing = trigroup_check(Form(2, 2, 3), 30, 200)
    ok &= not failing
    print(f"trigroup (2,2,3) value_bound=30 search_bound=200: "
          f"{'ok' if not failing else failing}")
    return EXIT_OK if ok else EXIT_FAIL


_HANDLERS = {
    "invariants": _cmd_invariants,
    "verify": _cmd_verify,
    "compose": _cmd_compose,
    "identities": _cmd_identities,
    "represent": _cmd_represent,
    "trigroup": _cmd_trigroup,
    "demo": _cmd_demo,
}


def run(cfg: CliConfig) -> int:
    try:
        return _HANDLERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gausscomp", description="Gauss composition of binary quadratic forms")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="print delta, delta', sigma, d, theta")
    s.add_argument("form")

    s = sub.add_parser("verify", help="verify a law JSON file ('-' for stdin)")
    s.add_argument("path")

    s = sub.add_parser("compose", help="construct a direct composition law")
    s.add_argument("form")
    s.add_argument("form_prime")

    s = sub.add_parser("identities", help="seeded fuzz of the determinant identities")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=1000)

    s = sub.add_parser("represent", help="search for f(x, y) == m in a box")
    s.add_argument("form")
    s.add_argument("m")
    s.add_argument("--bound", type=int, default=100)

    s = sub.add_parser("trigroup", help="desk-scale check of the trigroup law")
    s.add_argument("form")
    s.add_argument("--value-bound", type=int, default=30)
    s.add_argument("--bound", type=int, default=100)

    sub.add_parser("demo", help="reproduce the worked examples")
    return p


def parse_config(argv) -> CliConfig:
    argv = [" " + a if _NEG_LITERAL.match(a) else a for a in argv]
    ns = build_parser().parse_args(argv)
    positional = [getattr(ns, k) for k in ("form", "form_prime", "path", "m") if hasattr(ns, k)]
    return CliConfig(
        command=ns.command,
        seed=getattr(ns, "seed", 0),
        trials=getattr(ns, "trials", 1000),
        bound=getattr(ns, "bound", 100),
        value_bound=getattr(ns, "value_bound", 30),
        args=positional,
    )


def main(argv=None) -> int:
    cfg = parse_config(sys.argv[1:] if argv is None else argv)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
