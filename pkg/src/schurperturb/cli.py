"""Command-line surface: set parsing, subcommands, verification suites and
stable result emission.

Exit codes: 0 success, 1 property violation found, 2 usage error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from itertools import combinations

from .bounds import triple_moments
from .colouring_hypergraph import ContainerLike, codegree_delta, ha_stats_fast
from .constructions import (
    DenseZeroStatement,
    L1,
    L2,
    claim48_partition,
    construct_by_name,
    mod5_construction,
)
from .intset import IntSet, enumerate_large_sum_free, schur_triples
from .montecarlo import (
    RngSpec,
    SweepCurve,
    default_grid,
    sweep,
    theoretical_thresholds,
)
from .solver import (
    BLUE,
    RED,
    ColourConstraint,
    DEFAULT_BUDGET,
    SchurStatus,
    Status,
    check_hmin_properties,
    find_loose_cycle,
    find_schur_colouring,
    is_schur,
    minimal_obstruction,
    validate_colouring,
)
from .wickets import count_wickets

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_Z95 = 1.959963984540054


class UsageError(ValueError):
    pass


def parse_set(text: str, n: int | None = None) -> IntSet:
    """Set literal "a-b,c,d-e", or "construct:<name>" for named sets."""
    if text.startswith("construct:"):
        obj = construct_by_name(text[len("construct:") :], n)
        if isinstance(obj, tuple):  # (set, colouring)
            return obj[0]
        if isinstance(obj, DenseZeroStatement):
            return obj.A
        return obj
    try:
        return IntSet.from_runs(text, n)
    except ValueError as exc:
        raise UsageError(f"bad set literal {text!r}: {exc}") from exc


def _fmt(x: float) -> str:
    return format(x, ".12g")


def wilson_interval(successes: int, trials: int) -> tuple[float, float]:
    """95% Wilson score interval (lo, hi) for a binomial proportion."""
    if trials == 0:
        return 0.0, 1.0
    z2 = _Z95 * _Z95
    phat = successes / trials
    denom = 1 + z2 / trials
    centre = (phat + z2 / (2 * trials)) / denom
    half = (
        _Z95
        * math.sqrt(phat * (1 - phat) / trials + z2 / (4 * trials * trials))
        / denom
    )
    return max(0.0, centre - half), min(1.0, centre + half)


def curve_csv(curve: SweepCurve) -> str:
    lines = ["p,trials,schur,not_schur,unknown,mean_sample_size"]
    for pt in curve.points:
        lines.append(
            ",".join(
                [
                    _fmt(pt.p),
                    str(pt.trials),
                    str(pt.schur),
                    str(pt.not_schur),
                    str(pt.unknown),
                    _fmt(pt.mean_sample_size),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def curve_plotdata(curve: SweepCurve) -> str:
    """(x, y, yerr) lines; y is schur_fraction, yerr the Wilson half-widths."""
    lines = []
    for pt in curve.points:
        decided = pt.schur + pt.not_schur
        lo, hi = wilson_interval(pt.schur, decided)
        y = pt.schur_fraction
        lines.append(f"{_fmt(pt.p)} {_fmt(y)} {_fmt(max(y - lo, hi - y))}")
    return "\n".join(lines) + ("\n" if lines else "")


def emit_records(curve: SweepCurve, fmt: str) -> str:
    """Bit-stable serialization of a sweep in the requested format."""
    if fmt == "json":
        return curve.to_json() + "\n"
    if fmt == "csv":
        return curve_csv(curve)
    if fmt == "plotdata":
        return curve_plotdata(curve)
    raise UsageError(f"unknown format {fmt!r}")


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------- commands


def cmd_check_schur(args) -> int:
    s = parse_set(args.set, args.n)
    verdict = is_schur(s, args.budget)
    print(verdict.name.title().replace("_", ""))
    return EXIT_BUDGET if verdict is SchurStatus.UNKNOWN else EXIT_OK


def _load_container(path: str) -> ContainerLike:
    try:
        with open(path) as fh:
            return ContainerLike.from_json_dict(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        raise UsageError(f"cannot read container {path}: {exc}") from exc


def cmd_colour(args) -> int:
    s = parse_set(args.set, args.n)
    allowed: dict[int, frozenset[str]] = {}
    if args.container:
        c = _load_container(args.container)
        for e in s:
            cols = frozenset(
                col
                for col, side in ((RED, c.red_side), (BLUE, c.blue_side))
                if e in side
            )
            allowed[e] = cols
    if args.force_blue:
        for e in parse_set(args.force_blue, s.n):
            allowed[e] = frozenset((BLUE,))
    outcome = find_schur_colouring(s, ColourConstraint(allowed), args.budget)
    result = {"status": outcome.status.value, "nodes": outcome.nodes_explored}
    if outcome.witness is not None:
        result["red"] = sorted(outcome.witness.red())
        result["blue"] = sorted(outcome.witness.blue())
    print(json.dumps(result, sort_keys=True))
    if outcome.status is Status.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_OK if outcome.status is Status.COLOURABLE else EXIT_VIOLATION


def cmd_construct(args) -> int:
    obj = construct_by_name(args.name, args.n)
    colouring = None
    if isinstance(obj, tuple):
        s, colouring = obj
    elif isinstance(obj, DenseZeroStatement):
        s = obj.A
        colouring = obj.colouring_for(obj.A)
    else:
        s = obj
    out = {"n": s.n, "set": s.to_runs(), "size": len(s)}
    if colouring is not None:
        out["red"] = sorted(colouring.red())
        out["blue"] = sorted(colouring.blue())
    if args.validate:
        if colouring is None:
            raise UsageError(f"construction {args.name!r} carries no colouring")
        bad = validate_colouring(s, colouring)
        out["valid"] = not bad
        print(json.dumps(out, sort_keys=True))
        print("valid" if not bad else f"invalid: {len(bad)} monochromatic edges")
        return EXIT_OK if not bad else EXIT_VIOLATION
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_obstruction(args) -> int:
    base = parse_set(args.base, args.n)
    perturb = parse_set(args.perturb, args.n)
    n = max(base.n, perturb.n)
    base = IntSet(n, base)
    union = base.union(IntSet(n, perturb))
    constraints = ColourConstraint.force_blue(base)
    result = minimal_obstruction(union, constraints, args.budget)
    if result.status is Status.BUDGET_EXCEEDED:
        print(json.dumps({"status": result.status.value}, sort_keys=True))
        return EXIT_BUDGET
    if result.status is Status.COLOURABLE:
        print(json.dumps({"status": result.status.value}, sort_keys=True))
        return EXIT_OK
    report = check_hmin_properties(result.hypergraph, base)
    out = {
        "status": result.status.value,
        "edges": [list(e) for e in result.hypergraph.edges],
        "uniform3": report.uniform3,
        "one_base_per_edge": report.one_base_per_edge,
        "linear": report.linear,
    }
    if report.uniform3:
        cycle = find_loose_cycle(result.hypergraph, base)
        out["loose_cycle"] = cycle.to_json_dict() if cycle else None
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_wickets(args) -> int:
    s = parse_set(args.set, args.n)
    chi = parse_set(args.chi, s.n) if args.chi else None
    print(count_wickets(s, chi, method=args.method))
    return EXIT_OK


def cmd_ha_stats(args) -> int:
    base = parse_set(args.base, args.n)
    stats = ha_stats_fast(base, args.n)
    out = {
        "edge_count": stats.edge_count,
        "average_degree": _fmt(stats.average_degree),
        "max_pair_degree": stats.max_pair_degree,
        "max_triple_degree": stats.max_triple_degree,
        "max_quad_degree": stats.max_quad_degree,
    }
    if args.tau is not None:
        out["codegree_delta"] = _fmt(codegree_delta(stats, args.n, args.tau))
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def _workers(args) -> int:
    if args.workers is not None:
        return args.workers
    return int(os.environ.get("SCHURPERTURB_WORKERS", "1"))


def cmd_sweep(args) -> int:
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}") from exc
    try:
        n = int(cfg["n"])
        base_name = cfg["base"]
        trials = int(cfg["trials"])
        seed = cfg["seed"]
    except KeyError as exc:
        raise UsageError(f"config missing required key {exc}") from exc
    if seed is None:
        raise UsageError("sweep requires an explicit seed")
    budget = int(cfg.get("budget", DEFAULT_BUDGET))
    grid = cfg.get("p_grid", "auto")
    if grid == "auto":
        centre = cfg.get("center")
        if centre is None:
            raise UsageError("auto grid requires a 'center' probability")
        grid = default_grid(float(centre))
    grid = [float(p) for p in grid]
    base_set = parse_set(base_name, n)
    if base_set.n != n:
        base_set = IntSet(n, base_set)
    curve = sweep(
        base_set,
        n,
        grid,
        trials,
        RngSpec(int(seed)),
        budget=budget,
        workers=_workers(args),
        base=base_name,
    )
    if args.out:
        _write(args.out + ".json", emit_records(curve, "json"))
        _write(args.out + ".csv", emit_records(curve, "csv"))
        _write(args.out + ".plot", emit_records(curve, "plotdata"))
    else:
        sys.stdout.write(emit_records(curve, "json"))
    return EXIT_OK


def cmd_thresholds(args) -> int:
    record = theoretical_thresholds(args.n, args.t, args.s)
    out = {k: (None if v is None else _fmt(v)) for k, v in record.items()}
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_plot_data(args) -> int:
    try:
        with open(args.results) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read results {args.results}: {exc}") from exc
    lines = []
    for pt in data.get("points", []):
        decided = pt["schur"] + pt["not_schur"]
        lo, hi = wilson_interval(pt["schur"], decided)
        y = pt["schur"] / decided if decided else 0.0
        lines.append(f"{pt['p']} {_fmt(y)} {_fmt(max(y - lo, hi - y))}")
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ------------------------------------------------------------ verify suites


def _suite_hu(args) -> list[str]:
    failures = []
    n_max = args.n_max if args.n_max is not None else 16
    for n in range(10, n_max + 1):
        threshold = math.ceil(4 * n / 5)
        universe = list(range(1, n + 1))
        for size in range(threshold + 1, n + 1):
            for combo in combinations(universe, size):
                s = IntSet(n, combo)
                if is_schur(s) is not SchurStatus.SCHUR:
                    failures.append(f"hu: {s!r} not Schur")
    for n in (10, 15):
        if n > n_max:
            continue
        a, colouring = mod5_construction(n)
        if len(a) != math.ceil(4 * n / 5):
            failures.append(f"hu: mod5({n}) has wrong size {len(a)}")
        if validate_colouring(a, colouring):
            failures.append(f"hu: mod5({n}) colouring not proper")
        if is_schur(a) is not SchurStatus.NOT_SCHUR:
            failures.append(f"hu: mod5({n}) unexpectedly Schur")
    return failures


def _suite_prop31(args) -> list[str]:
    failures = []
    limit = args.n_max if args.n_max is not None else 30
    for a in range(1, limit + 1):
        for d in range(1, limit + 1):
            for x in range(1, limit + 1):
                sets = []
                if max(a + 3 * d, x + d, a + x + 3 * d) <= limit:
                    sets.append(("L1", L1(a, x, d)))
                if x > a + 3 * d and x > d and max(x, a + 3 * d) <= limit:
                    sets.append(("L2", L2(a, x, d)))
                for name, s in sets:
                    if is_schur(s) is not SchurStatus.SCHUR:
                        failures.append(f"prop31: {name}({a},{x},{d}) not Schur")
    rng = random.Random(args.seed if args.seed is not None else 20260824)
    trials = args.trials if args.trials is not None else 200
    done = 0
    while done < trials:
        a = rng.randint(1, 40)
        d = rng.randint(1, 40)
        x = rng.randint(1, 160)
        if max(a + 3 * d, x + d, a + x + 3 * d) <= 200:
            if is_schur(L1(a, x, d)) is not SchurStatus.SCHUR:
                failures.append(f"prop31: L1({a},{x},{d}) not Schur")
            done += 1
        if x > a + 3 * d and x > d and x <= 200 and done < trials:
            if is_schur(L2(a, x, d)) is not SchurStatus.SCHUR:
                failures.append(f"prop31: L2({a},{x},{d}) not Schur")
            done += 1
    return failures


def _suite_stability(args) -> list[str]:
    failures = []
    n_max = args.n_max if args.n_max is not None else 22
    for n in range(10, n_max + 1):
        min_size = math.floor(2 * n / 5 + 1) + 1
        for s in enumerate_large_sum_free(n, min_size):
            elems = s.elements()
            odd_only = all(e % 2 for e in elems)
            if not odd_only and elems[0] <= len(elems):
                failures.append(f"stability: {s!r} neither odd-only nor top-heavy")
    return failures


def _suite_claim48(args) -> list[str]:
    failures = []
    n_max = args.n_max if args.n_max is not None else 200
    for n in range(1, n_max + 1):
        for alpha in range(1, n + 1):
            part = claim48_partition(n, alpha)
            seen: set[int] = set()
            for pair in part.pairs:
                u, v = sorted(pair)
                if seen & pair:
                    failures.append(f"claim48: overlap in ({n},{alpha})")
                seen |= pair
                if u + alpha != v and u + v != alpha:
                    failures.append(f"claim48: pair {sorted(pair)} misses alpha={alpha}")
            if len(part.Q) < part.eta - 3:
                failures.append(f"claim48: |Q| too small for ({n},{alpha})")
            if 2 * part.eta < n:
                failures.append(f"claim48: eta < n/2 for ({n},{alpha})")
    return failures


def _suite_wickets(args) -> list[str]:
    failures = []
    n_max = args.n_max if args.n_max is not None else 24
    rng = random.Random(args.seed if args.seed is not None else 20260824)
    for n in range(1, n_max + 1):
        s = IntSet.full(n)
        if count_wickets(s, method="ie") != count_wickets(s, method="enumerate"):
            failures.append(f"wickets: [n]={n} fast/slow mismatch")
    for _ in range(args.trials if args.trials is not None else 25):
        n = rng.randint(10, n_max)
        members = [e for e in range(1, n + 1) if rng.random() < 0.6]
        s = IntSet(n, members)
        if count_wickets(s, method="ie") != count_wickets(s, method="enumerate"):
            failures.append(f"wickets: random set at n={n} fast/slow mismatch")
    return failures


def _suite_moments(args) -> list[str]:
    failures = []
    rng = random.Random(args.seed if args.seed is not None else 20260824)
    for _ in range(args.trials if args.trials is not None else 100):
        n = rng.randint(10, 60)
        members = [e for e in range(1, n + 1) if rng.random() < 0.7]
        s = IntSet(n, members)
        p = rng.uniform(0.01, 0.5)
        triples = list(schur_triples(s, nondegenerate_only=True))
        m = triple_moments(triples, n, p)
        if m.delta_exact > m.delta_star:
            failures.append(f"moments: delta_exact > delta_star at n={n}, p={p}")
    return failures


_SUITES = {
    "hu": _suite_hu,
    "prop31": _suite_prop31,
    "stability": _suite_stability,
    "claim48": _suite_claim48,
    "wickets": _suite_wickets,
    "moments": _suite_moments,
}


def cmd_verify(args) -> int:
    failures = _SUITES[args.suite](args)
    for line in failures:
        print(f"FAIL {line}")
    print(f"suite {args.suite}: {'ok' if not failures else f'{len(failures)} failures'}")
    return EXIT_OK if not failures else EXIT_VIOLATION


# ---------------------------------------------------------------- dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurperturb",
        description="Schur sets under random perturbation: solver, "
        "constructions, bounds and Monte Carlo sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("check-schur", cmd_check_schur, help="decide whether a set is Schur")
    p.add_argument("set")
    p.add_argument("--n", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = add("colour", cmd_colour, help="find a Schur colouring under constraints")
    p.add_argument("set")
    p.add_argument("--n", type=int)
    p.add_argument("--force-blue", dest="force_blue")
    p.add_argument("--container")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = add("construct", cmd_construct, help="instantiate a named construction")
    p.add_argument("name")
    p.add_argument("--n", type=int)
    p.add_argument("--validate", action="store_true")

    p = add("obstruction", cmd_obstruction, help="minimal obstruction of a perturbed base")
    p.add_argument("base")
    p.add_argument("perturb")
    p.add_argument("--n", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = add("wickets", cmd_wickets, help="count ordered wickets")
    p.add_argument("set")
    p.add_argument("--n", type=int)
    p.add_argument("--chi")
    p.add_argument("--method", choices=("ie", "enumerate"), default="ie")

    p = add("ha-stats", cmd_ha_stats, help="colouring-hypergraph statistics")
    p.add_argument("base")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=float)

    p = add("sweep", cmd_sweep, help="probability sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.add_argument("--workers", type=int)

    p = add("verify", cmd_verify, help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)

    p = add("thresholds", cmd_thresholds, help="theoretical threshold formulas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)

    p = add("plot-data", cmd_plot_data, help="emit (x, y, yerr) from sweep results")
    p.add_argument("results")
    p.add_argument("--out")

    return parser


def cli_dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
