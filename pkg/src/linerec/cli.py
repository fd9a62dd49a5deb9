"""Command-line harness: instance generation, reconstruction, bit sweeps.

Subcommands
-----------
generate     write a seeded (graph, configuration, lengths) instance
reconstruct  run the pipeline on a lengths file (labeled with --graph)
sweep        search the bits needed for the relation step per vertex count
kbasis       reconstruct through short-cycle enumeration

Exit codes: 0 success, 2 detected failure, 3 input/parse error.
"""

import argparse
import csv
import hashlib
import random
import sys
import time
from dataclasses import dataclass, field
from math import ceil

from .exact import rank
from .graphs import (
    Graph,
    InfeasibleFamily,
    generate_graph,
    incidence_matrix,
    configuration_orientation,
    is_isomorphic,
    measure,
    read_graph,
    read_values,
    sample_generic_configuration,
    write_graph,
    write_values,
)
from .lll import build_lattice, lll_reduce, norm_sq
from .pipeline import (
    NoiseModel,
    reconstruct_kbasis,
    reconstruct_labeled,
    reconstruct_labeled_percycle,
    reconstruct_unlabeled,
)
from .relations import NoMediumVectors, compute_relations

FAMILIES = ("cycle", "near3regular", "complete")
CSV_HEADER = ["family", "n", "m", "b_required", "trials", "successes", "wall_ms"]
EXHAUSTED = "ExhaustedWindow"


def derive_seed(*parts) -> int:
    """Stable 64-bit seed from the master seed and context labels."""
    digest = hashlib.sha256(":".join(str(p) for p in parts).encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass
class SweepConfig:
    family: str
    n_range: list[int]
    target_rate: float = 0.9
    trials: int = 50
    optimistic: bool = False
    noise: NoiseModel = field(default_factory=lambda: NoiseModel("random"))
    seed: int = 0
    ensembles: int = 5  # near-3-regular only: take the max bits over these

    def __post_init__(self):
        if not 0 < self.target_rate < 1:
            raise ValueError("target_rate must be in (0, 1)")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


def _spans_cycle_space(rows, incidence, c: int) -> bool:
    """True iff ``rows`` is a basis of the left null space of the incidence matrix."""
    if len(rows) != c:
        return False
    n = len(incidence[0]) if incidence else 0
    for row in rows:
        for v in range(n):
            if sum(row[e] * incidence[e][v] for e in range(len(row))) != 0:
                return False
    return rank(rows) == c


def _trial_success(g: Graph, bits: int, cfg: SweepConfig, trial_seed: int) -> bool:
    rng = random.Random(trial_seed)
    p = sample_generic_configuration(g, bits, rng)
    eps = cfg.noise.sample(g.m, rng)
    l = [a + b for a, b in zip(measure(g, p), eps)]
    incidence = incidence_matrix(g, configuration_orientation(g, p))
    c = g.m - g.n + 1
    if cfg.optimistic:
        reduced = lll_reduce(build_lattice(l))
        reduced.sort(key=norm_sq)
        rows = [vec[: g.m] for vec in reduced[:c]]
        return _spans_cycle_space(rows, incidence, c)
    try:
        basis = compute_relations(l)
    except NoMediumVectors:
        return False
    return _spans_cycle_space([list(r) for r in basis.rows], incidence, c)


def _success_rate(
    g: Graph, bits: int, cfg: SweepConfig, ensemble: int, full: bool
) -> tuple[bool, int, int]:
    """(meets target, successes, trials run); stops early unless ``full``."""
    need = ceil(cfg.target_rate * cfg.trials)
    allowed_failures = cfg.trials - need
    successes = failures = 0
    for t in range(cfg.trials):
        seed = derive_seed(cfg.seed, cfg.family, g.n, ensemble, t)
        if _trial_success(g, bits, cfg, seed):
            successes += 1
        else:
            failures += 1
        if not full:
            if failures > allowed_failures:
                return False, successes, t + 1
            if successes >= need:
                return True, successes, t + 1
    return successes >= need, successes, cfg.trials


def _search_bits(g: Graph, cfg: SweepConfig, ensemble: int) -> tuple[int | None, int]:
    """Minimal b in [4, 2m^2] meeting the target rate, plus full-trial successes."""
    hi = 2 * g.m * g.m
    b = 4
    last_fail = b - 1
    first_ok = None
    while True:
        ok, _, _ = _success_rate(g, b, cfg, ensemble, full=False)
        if ok:
            first_ok = b
            break
        last_fail = b
        if b >= hi:
            break
        b = min(2 * b, hi)
    if first_ok is None:
        return None, 0
    while first_ok - last_fail > 1:
        mid = (first_ok + last_fail) // 2
        ok, _, _ = _success_rate(g, mid, cfg, ensemble, full=False)
        if ok:
            first_ok = mid
        else:
            last_fail = mid
    _, successes, _ = _success_rate(g, first_ok, cfg, ensemble, full=True)
    return first_ok, successes


def _sweep_row(cfg: SweepConfig, n: int) -> list:
    t0 = time.perf_counter()
    best_b, best_successes = None, 0
    ensembles = cfg.ensembles if cfg.family == "near3regular" else 1
    for ensemble in range(ensembles):
        g = generate_graph(cfg.family, n, derive_seed(cfg.seed, "graph", cfg.family, n, ensemble))
        b, successes = _search_bits(g, cfg, ensemble)
        if b is None:
            best_b = None
            break
        if best_b is None or b > best_b:
            best_b, best_successes = b, successes
    wall_ms = int((time.perf_counter() - t0) * 1000)
    m = generate_graph(cfg.family, n, derive_seed(cfg.seed, "graph", cfg.family, n, 0)).m
    if best_b is None:
        return [cfg.family, n, m, EXHAUSTED, cfg.trials, 0, wall_ms]
    return [cfg.family, n, m, best_b, cfg.trials, best_successes, wall_ms]


def _spot_check_monotonicity(cfg: SweepConfig, rows: list[list]) -> None:
    """Compare success rates at b_required -/+ 4 for the smallest n; log violations."""
    numeric = [r for r in rows if r[3] != EXHAUSTED]
    if not numeric:
        return
    n, b_req = numeric[0][1], numeric[0][3]
    g = generate_graph(cfg.family, n, derive_seed(cfg.seed, "graph", cfg.family, n, 0))
    lo_b = max(4, b_req - 4)
    hi_b = min(2 * g.m * g.m, b_req + 4)
    _, lo_s, lo_t = _success_rate(g, lo_b, cfg, 0, full=True)
    _, hi_s, hi_t = _success_rate(g, hi_b, cfg, 0, full=True)
    if lo_s / lo_t > hi_s / hi_t:
        print(
            f"warning: success rate not monotone near n={n}: "
            f"rate({lo_b})={lo_s}/{lo_t} > rate({hi_b})={hi_s}/{hi_t}",
            file=sys.stderr,
        )


def run_sweep(cfg: SweepConfig) -> list[list]:
    rows = [_sweep_row(cfg, n) for n in cfg.n_range]
    _spot_check_monotonicity(cfg, rows)
    return rows


def write_sweep_outputs(rows: list[list], out_path: str) -> None:
    with open(out_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        writer.writerows(rows)
    gp_path = out_path + ".gp"
    with open(gp_path, "w") as fh:
        fh.write(
            "set datafile separator ','\n"
            "set logscale xy\n"
            "set xlabel 'n'\nset ylabel 'bits required'\n"
            f"plot '{out_path}' every ::1 using 2:4 with linespoints title 'b_required'\n"
        )


# --- subcommand drivers ---


def _cmd_generate(args) -> int:
    try:
        g = generate_graph(args.family, args.n, derive_seed(args.seed, "graph"))
    except InfeasibleFamily as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    rng = random.Random(derive_seed(args.seed, "config"))
    p = sample_generic_configuration(g, args.bits, rng)
    noise = NoiseModel(args.noise)
    eps = noise.sample(g.m, rng)
    l = [a + b for a, b in zip(measure(g, p), eps)]
    write_graph(g, args.prefix + ".graph")
    write_values(p, args.prefix + ".config")
    write_values(l, args.prefix + ".lengths")
    print(f"wrote {args.prefix}.graph {args.prefix}.config {args.prefix}.lengths")
    return 0


def _read_inputs(args):
    lengths = read_values(args.lengths)
    graph = read_graph(args.graph) if getattr(args, "graph", None) else None
    return lengths, graph


def _print_report(result, elapsed: float) -> None:
    print(f"status: {result.status.value}")
    if result.reason:
        print(f"reason: {result.reason}")
    if result.graph is not None:
        print(f"n: {result.graph.n}")
        print(f"m: {result.graph.m}")
    if result.relation_count is not None:
        print(f"c: {result.relation_count}")
    if result.residual is not None:
        print(f"residual: {float(result.residual):.6g}")
    if result.undetected_risk:
        print("undetected_risk: true")
    for stage, seconds in result.stage_seconds.items():
        print(f"time_{stage}_ms: {seconds * 1000:.1f}")
    print(f"time_total_ms: {elapsed * 1000:.1f}")


def _cmd_reconstruct(args) -> int:
    try:
        lengths, graph = _read_inputs(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    t0 = time.perf_counter()
    if graph is None:
        result = reconstruct_unlabeled(lengths, max_vertices=args.max_vertices)
    elif args.per_cycle:
        result = reconstruct_labeled_percycle(graph, lengths)
    else:
        result = reconstruct_labeled(graph, lengths)
    _print_report(result, time.perf_counter() - t0)
    return 0 if result.ok else 2


def _cmd_kbasis(args) -> int:
    try:
        lengths, graph = _read_inputs(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    t0 = time.perf_counter()
    result = reconstruct_kbasis(lengths, args.k)
    _print_report(result, time.perf_counter() - t0)
    bits = max(lengths).bit_length() if lengths else 0
    print(f"bits_used: {bits}")
    if result.ok and graph is not None:
        match = result.graph is not None and is_isomorphic(result.graph, graph)
        print(f"graph_match: {'true' if match else 'false'}")
        if not match:
            return 2
    return 0 if result.ok else 2


def _parse_n_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in text.split(",")]


def _cmd_sweep(args) -> int:
    try:
        cfg = SweepConfig(
            family=args.family,
            n_range=_parse_n_range(args.n_range),
            target_rate=args.target_rate,
            trials=args.trials,
            optimistic=args.optimistic,
            noise=NoiseModel(args.noise),
            seed=args.seed,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    rows = run_sweep(cfg)
    write_sweep_outputs(rows, args.out)
    print(",".join(CSV_HEADER))
    for row in rows:
        print(",".join(str(x) for x in row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linerec",
        description="Reconstruct graphs and 1D layouts from unlabeled edge lengths",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a seeded instance to files")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--bits", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--noise", choices=("none", "random"), default="none")
    gen.add_argument("--prefix", default="instance")
    gen.set_defaults(func=_cmd_generate)

    rec = sub.add_parser("reconstruct", help="reconstruct from a lengths file")
    rec.add_argument("lengths", help="file with one integer length per line")
    rec.add_argument("--graph", help="graph file for the labeled setting")
    rec.add_argument("--per-cycle", action="store_true", dest="per_cycle")
    rec.add_argument("--max-vertices", type=int, default=16)
    rec.set_defaults(func=_cmd_reconstruct)

    swp = sub.add_parser("sweep", help="search bits required per vertex count")
    swp.add_argument("--family", choices=FAMILIES, required=True)
    swp.add_argument("--n-range", required=True, help="e.g. 4:10 or 4,6,8")
    swp.add_argument("--trials", type=int, default=50)
    swp.add_argument("--target-rate", type=float, default=0.9)
    swp.add_argument("--noise", choices=("none", "random"), default="random")
    swp.add_argument("--optimistic", action="store_true")
    swp.add_argument("--seed", type=int, default=0)
    swp.add_argument("--out", default="sweep.csv")
    swp.set_defaults(func=_cmd_sweep)

    kb = sub.add_parser("kbasis", help="reconstruct via short-cycle enumeration")
    kb.add_argument("lengths")
    kb.add_argument("--graph", required=True)
    kb.add_argument("--k", type=int, default=3)
    kb.set_defaults(func=_cmd_kbasis)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
