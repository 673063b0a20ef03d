"""``evencycle`` command line.

Exit codes: 0 witness found / check passed, 1 none / check negative,
2 usage or input error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import bench as bench_mod
from .detector import DetectorConfig, detect_cycle_through
from .finder import Verdict, decide_even_cycle, find_even_cycle
from .gadget import UnsupportedParameter, build_gadget
from .generators import gen_c4_free_polarity, gen_high_girth, gen_planted_cycle, gen_random
from .graph import (
    Graph,
    GraphFormatError,
    density_shortcut,
    parse_graph,
    parse_order_spec,
    read_header,
    serialize_graph,
)
from .oracle import BudgetExceeded, oracle_count_k_walks, oracle_cycle_through, oracle_find_triangle, oracle_has_cycle
from .snorm import (
    CheckSkipped,
    check_kwalks_set,
    check_modified_bs,
    check_zero_one_norm_bound,
    estimate_matrix_snorm_diagnostic,
    snorm,
)
from .walks import check_lower_bound, count_capped_walks

EXIT_OK, EXIT_NONE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Out:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def line(self, text: str = "") -> None:
        print(text)

    def info(self, text: str) -> None:
        if not self.quiet:
            print(text, file=sys.stderr)

    def json(self, obj) -> None:
        print(json.dumps(obj, indent=2, sort_keys=True))


def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _load(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _cycle_out(out: _Out, args, cycle, extra: dict | None = None) -> int:
    if args.json:
        payload = {"cycle": list(cycle.vertices) if cycle is not None else None}
        payload.update(extra or {})
        out.json(payload)
    else:
        out.line(str(cycle) if cycle is not None else "none")
    return EXIT_OK if cycle is not None else EXIT_NONE


# ---------------------------------------------------------------------------
# subcommands


def cmd_find(args, out: _Out) -> int:
    text = _read_text(args.file)
    if args.decide:
        header = read_header(text)
        if header is not None and density_shortcut(header, args.k) == "yes":
            if args.json or args.report == "json":
                out.json({"verdict": Verdict.YES_DENSITY.value, "result": None})
            else:
                out.line("yes (edge density)")
            return EXIT_OK
    g = parse_graph(text)
    delta = args.delta if args.delta is not None else 1e-6 / max(g.n, 1)
    cfg = DetectorConfig(args.k, delta, args.seed, "exhaustive" if args.exhaustive else "randomized")
    if args.decide:
        decision = decide_even_cycle(g, args.k, cfg)
        report = decision.report
        if args.json or args.report == "json":
            payload = {"verdict": decision.verdict.value}
            payload.update(report.to_json() if report else {"result": None})
            out.json(payload)
        elif decision.verdict is Verdict.YES_DENSITY:
            out.line("yes (edge density)")
        else:
            out.line(str(report.result) if report.result else "none")
        return EXIT_NONE if decision.verdict is Verdict.NO else EXIT_OK
    report = find_even_cycle(g, args.k, cfg)
    if args.json or args.report == "json":
        out.json(report.to_json())
    else:
        out.line(str(report.result) if report.result else "none")
        out.info(
            f"edges_touched={report.edges_touched} invocations={report.detector_invocations} "
            f"time={report.wall_time:.3f}s"
        )
    return EXIT_OK if report.found else EXIT_NONE


def cmd_detect(args, out: _Out) -> int:
    g = _load(args.file)
    cfg = DetectorConfig(args.k, args.delta, args.seed, "exhaustive" if args.exhaustive else "randomized")
    return _cycle_out(out, args, detect_cycle_through(g, args.node, cfg))


def cmd_oracle(args, out: _Out) -> int:
    g = _load(args.file)
    if args.oracle_cmd == "cycle":
        if args.node is None:
            cyc = oracle_has_cycle(g, args.length, budget=args.budget)
        else:
            cyc = oracle_cycle_through(g, args.node, args.length, budget=args.budget)
        return _cycle_out(out, args, cyc)
    if args.oracle_cmd == "triangle":
        tri = oracle_find_triangle(g)
        if args.json:
            out.json({"triangle": list(tri) if tri else None})
        else:
            out.line(" ".join(map(str, tri)) if tri else "none")
        return EXIT_OK if tri else EXIT_NONE
    S = range(g.n) if args.set is None else [int(t) for t in args.set.split(",") if t]
    count = oracle_count_k_walks(g, S, args.k)
    if args.json:
        out.json({"k": args.k, "walks": count})
    else:
        out.line(str(count))
    return EXIT_OK


def cmd_walks(args, out: _Out) -> int:
    g = _load(args.file)
    order = parse_order_spec(args.order, g)
    census = count_capped_walks(g, order, args.k)
    chk = check_lower_bound(g, census)
    payload = {
        "k": args.k,
        "order": args.order,
        "total": census.total,
        "bound_lemma3": float(chk.bound),
        "ratio": chk.ratio,
        "holds": chk.holds,
    }
    if args.per_start:
        payload["per_start"] = list(census.per_start)
    out.json(payload)
    return EXIT_OK if chk.holds else EXIT_NONE


def cmd_snorm(args, out: _Out) -> int:
    if args.snorm_cmd == "vec":
        val = snorm(args.values)
        if args.json:
            out.json({"snorm": val})
        else:
            out.line(repr(val))
        return EXIT_OK
    g = _load(args.file)
    rng = random.Random(args.seed)
    n = g.n
    worst = 0.0
    ok = True
    for _ in range(args.samples):
        S = rng.sample(range(n), rng.randint(1, n)) if n else []
        for k in range(1, args.k + 1):
            chk = check_kwalks_set(g, S, k)
            ok &= chk.holds
            worst = max(worst, chk.ratio)
    payload: dict = {"kwalks_set": {"holds": ok, "max_ratio": worst, "samples": args.samples}}
    try:
        bs_ok, bs_worst = True, 0.0
        pairs = [(range(n), range(n))]
        pairs += [(rng.sample(range(n), rng.randint(0, n)), rng.sample(range(n), rng.randint(0, n))) for _ in range(args.samples)]
        check_modified_bs(g, [], [], args.k)  # verifies the precondition once
        for A, B in pairs:
            chk = check_modified_bs(g, A, B, args.k, assume_free=True)
            bs_ok &= chk.holds
            bs_worst = max(bs_worst, chk.ratio)
        payload["modified_bs"] = {"holds": bs_ok, "max_ratio": bs_worst}
        ok &= bs_ok
    except CheckSkipped as exc:
        payload["modified_bs"] = {"skipped": str(exc)}
    except ValueError as exc:
        payload["modified_bs"] = {"not_applicable": str(exc)}
    diag = estimate_matrix_snorm_diagnostic(g, args.k, args.samples, args.seed)
    payload["matrix_snorm_diagnostic"] = {"max_ratio": diag.max_ratio, "violations": list(diag.violations)}
    if 0 < n <= 12:
        rep = check_zero_one_norm_bound(g, samples=max(args.samples, 1), seed=args.seed)
        payload["zero_one_bound"] = {"C": rep.C, "max_ratio": rep.max_ratio, "violations": rep.violations}
        ok &= rep.holds
    out.json(payload)
    return EXIT_OK if ok else EXIT_NONE


def cmd_gadget(args, out: _Out) -> int:
    g = _load(args.file)
    gad = build_gadget(g, args.k)
    sys.stdout.write(serialize_graph(gad.graph))
    if args.map:
        Path(args.map).write_text(
            json.dumps({"k": gad.k, "x": gad.x, "chain": gad.chain, "node_origin": gad.origin_json()}) + "\n"
        )
    return EXIT_OK


def cmd_gen(args, out: _Out) -> int:
    kind = args.gen_cmd
    if kind == "random":
        g = gen_random(args.n, args.m, args.seed)
    elif kind == "planted":
        g, cyc = gen_planted_cycle(args.n, args.m, args.k, args.seed)
        out.info(f"planted: {cyc}")
    elif kind == "polarity":
        g = gen_c4_free_polarity(args.q)
    else:
        g = gen_high_girth(args.n, args.girth, args.seed)
        out.info(f"n={g.n} m={g.m}")
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def cmd_bench(args, out: _Out) -> int:
    rows = bench_mod.bench_scaling(args.family, args.k, args.sizes, args.seed, args.reps)
    text = bench_mod.rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    slope = bench_mod.fit_slope(rows)
    if slope is not None:
        target = 2 * args.k / (args.k + 1)
        out.info(f"fitted slope log(edges_touched)/log(m) = {slope:.3f} (work exponent 2k/(k+1) = {target:.3f})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed (default 0)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="no diagnostics on stderr")

    p = argparse.ArgumentParser(prog="evencycle", description="Find 2k-cycles in sparse undirected graphs.")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", default=False)
    p.add_argument("--quiet", action="store_true", default=False)
    sub = p.add_subparsers(dest="cmd", required=True)

    f = sub.add_parser("find", parents=[common], help="find a 2k-cycle")
    f.add_argument("--k", type=int, required=True)
    mode = f.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="deterministic detector")
    mode.add_argument("--delta", type=float, help="per-vertex failure bound (default 1e-6/n)")
    f.add_argument("--report", choices=["text", "json"], default="text")
    f.add_argument("--decide", action="store_true", help="answer yes from the edge count when dense enough")
    f.add_argument("file")
    f.set_defaults(func=cmd_find)

    d = sub.add_parser("detect", parents=[common], help="2k-cycle through one vertex")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--node", type=int, required=True)
    d.add_argument("--delta", type=float, default=1e-6)
    d.add_argument("--exhaustive", action="store_true")
    d.add_argument("file")
    d.set_defaults(func=cmd_detect)

    o = sub.add_parser("oracle", parents=[common], help="brute-force reference answers")
    osub = o.add_subparsers(dest="oracle_cmd", required=True)
    oc = osub.add_parser("cycle", parents=[common])
    oc.add_argument("--length", type=int, required=True)
    oc.add_argument("--node", type=int)
    oc.add_argument("--budget", type=int, default=10**8)
    oc.add_argument("file")
    ow = osub.add_parser("walks", parents=[common])
    ow.add_argument("--k", type=int, required=True)
    ow.add_argument("--set", help="comma-separated start vertices (default: all)")
    ow.add_argument("file")
    ot = osub.add_parser("triangle", parents=[common])
    ot.add_argument("file")
    o.set_defaults(func=cmd_oracle)

    w = sub.add_parser("walks", parents=[common], help="capped k-walk census")
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--order", default="degree", help="degree | id | random:<seed>")
    w.add_argument("--per-start", action="store_true")
    w.add_argument("file")
    w.set_defaults(func=cmd_walks)

    s = sub.add_parser("snorm", parents=[common], help="level-set norm tools")
    ssub = s.add_subparsers(dest="snorm_cmd", required=True)
    sv = ssub.add_parser("vec", parents=[common])
    sv.add_argument("values", nargs="+", type=float)
    sc = ssub.add_parser("check", parents=[common])
    sc.add_argument("--k", type=int, required=True)
    sc.add_argument("--samples", type=int, default=200)
    sc.add_argument("file")
    s.set_defaults(func=cmd_snorm)

    gd = sub.add_parser("gadget", parents=[common], help="triangle-to-2k-cycle gadget")
    gd.add_argument("--k", type=int, required=True)
    gd.add_argument("--map", help="write the vertex origin map as JSON here")
    gd.add_argument("file")
    gd.set_defaults(func=cmd_gadget)

    gn = sub.add_parser("gen", parents=[common], help="generate an instance")
    gsub = gn.add_subparsers(dest="gen_cmd", required=True)
    gr = gsub.add_parser("random", parents=[common])
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("--m", type=int, required=True)
    gp = gsub.add_parser("planted", parents=[common])
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--m", type=int, required=True)
    gp.add_argument("--k", type=int, required=True)
    gq = gsub.add_parser("polarity", parents=[common])
    gq.add_argument("--q", type=int, required=True)
    gh = gsub.add_parser("highgirth", parents=[common])
    gh.add_argument("--n", type=int, required=True)
    gh.add_argument("--girth", type=int, default=8)
    gn.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", parents=[common], help="scaling study, CSV on stdout")
    b.add_argument("--family", required=True, help="polarity | highgirth:<g0> | random:<avg degree>")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--sizes", type=int, nargs="+", required=True)
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.quiet)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"evencycle: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphFormatError, UnsupportedParameter, ValueError, OSError) as exc:
        print(f"evencycle: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
