"""
Entrypoint for the friends-and-strangers toolkit.

Exit codes: 0 success, 1 counterexample found, 2 usage or parameter error,
3 budget or capability exceeded.
"""
import sys
from math import factorial

from core.coxeter import LabeledWalk, classify_prediction, find_anchored_walks, reduce_anchored, replay
from core.cycle_space import component_report
from core.errors import (
    CapabilityError,
    FSError,
    ReductionInvariantError,
    TheoremViolation,
)
from core.families import cycle
from core.fs_engine import fs_component_of, fs_components, iter_components, star_components_predicted
from core.graph import (
    bipartition,
    domination_number,
    has_triangle,
    is_biconnected,
    is_connected,
    max_degree,
    min_degree,
)
from core.permutations import identity, unrank
from core.utils import Stopwatch
from core.verify import SweepConfig, run_sweep
from io_utils import config_loader
from io_utils.graph_io import component_to_dot, graph_to_dict, graph_to_dot, load_graph, parse_labels, parse_permutation
from io_utils.report_writer import render, write_report
from metrics.logger import log_debug, log_error, log_info, log_warn, set_verbosity
from metrics.monitor import monitor_resources

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_CAPABILITY = 3


def _is_star(g):
    return g.n >= 3 and g.num_edges == g.n - 1 and max_degree(g) == g.n - 1


def cmd_components(cfg):
    opts = cfg.options
    x, x_name = load_graph(opts["x"])
    y, y_name = load_graph(opts["y"])
    census = fs_components(x, y, cfg.budget, cfg.chunk)
    report = {"command": "components", "x": x_name, "y": y_name, "n": x.n,
              "vertices": factorial(x.n), "census": census.to_dict()}
    if _is_star(x):
        report["star_prediction"] = star_components_predicted(y).to_dict()
    dot = None
    if cfg.fmt == "dot":
        start = parse_permutation(opts["start"], x.n) if opts.get("start") else census.reps[0]
        dot = component_to_dot(fs_component_of(x, y, start, cfg.budget), f"FS({x_name}, {y_name})")
    return report, dot, True


def cmd_verify(cfg):
    opts = cfg.options
    sweep = run_sweep(opts["theorem"], SweepConfig(opts.get("n_max"), cfg.seed, cfg.budget,
                                                   opts.get("samples", 200), opts.get("count", 1000)))
    if not sweep.ok:
        log_warn(f"{len(sweep.counterexamples)} counterexamples for {sweep.theorem}")
    return sweep.to_dict(), None, sweep.ok


def cmd_cyclespace(cfg):
    opts = cfg.options
    x, x_name = load_graph(opts["x"])
    y, y_name = load_graph(opts["y"])
    if x.n >= 3 and x != cycle(x.n):
        log_warn("hexagon generators assume X is Cycle_n labelled in cyclic order")
    if opts.get("component") is not None:
        components = [fs_component_of(x, y, unrank(opts["component"], x.n), cfg.budget)]
    else:
        components = list(iter_components(x, y, cfg.budget, cfg.chunk))
    rows = [{"rep": c.vertices[0].to_list(), **component_report(c)} for c in components]
    report = {
        "command": "cyclespace",
        "x": x_name,
        "y": y_name,
        "components": rows,
        "all_spans_squares": all(r["spans_squares"] for r in rows),
        "all_spans_squares_hexagons": all(r["spans_squares_hexagons"] for r in rows),
    }
    dot = component_to_dot(components[0], f"FS({x_name}, {y_name})") if cfg.fmt == "dot" else None
    return report, dot, True


def _reduce_one(w, y):
    predicted = classify_prediction(w, y)
    result = reduce_anchored(w, y)
    replayed = replay(w, result.log, y)
    ok = predicted == result.classification and replayed == result.walk
    return predicted, result, ok


def cmd_reduce(cfg):
    opts = cfg.options
    y, y_name = load_graph(opts["y"])
    n = opts.get("n") or y.n
    start = parse_permutation(opts["start"], n) if opts.get("start") else identity(n)
    w = LabeledWalk(start, parse_labels(opts["labels"]))
    predicted, result, ok = _reduce_one(w, y)
    report = {"command": "reduce", "y": y_name, "n": n, "walk": w.to_dict(),
              "predicted": predicted, **result.to_dict()}
    return report, None, ok


def cmd_fuzz_reduce(cfg):
    opts = cfg.options
    y, y_name = load_graph(opts["y"])
    n = opts.get("n") or y.n
    rows, failures = [], 0
    for w in find_anchored_walks(y, n, opts.get("count", 100), seed=cfg.seed):
        row = {"walk": w.to_dict()}
        try:
            predicted, result, ok = _reduce_one(w, y)
            row.update({"predicted": predicted, "classification": result.classification,
                        "moves": len(result.log), "ok": ok})
        except FSError as exc:
            ok = False
            row.update({"error": f"{type(exc).__name__}: {exc}", "ok": False})
        failures += not ok
        rows.append(row)
    log_info(f"Reduced {len(rows)} anchored walks, {failures} failures")
    report = {"command": "fuzz-reduce", "y": y_name, "n": n, "seed": cfg.seed,
              "walks": rows, "failures": failures}
    return report, None, failures == 0


def cmd_show(cfg):
    g, name = load_graph(cfg.options["graph"])
    biconnected, cuts = is_biconnected(g)
    sides = bipartition(g)
    report = {
        "command": "show",
        "name": name,
        "graph": graph_to_dict(g, name),
        "connected": is_connected(g),
        "biconnected": biconnected,
        "cut_vertices": cuts,
        "bipartition": [sorted(s) for s in sides] if sides else None,
        "min_degree": min_degree(g),
        "max_degree": max_degree(g),
        "has_triangle": has_triangle(g),
        "domination_number": domination_number(g) if g.n else 0,
    }
    if g.n >= 3:
        report["star_prediction"] = star_components_predicted(g).to_dict()
    return report, graph_to_dot(g, name), True


COMMAND_HANDLERS = {
    "components": cmd_components,
    "verify": cmd_verify,
    "cyclespace": cmd_cyclespace,
    "reduce": cmd_reduce,
    "fuzz-reduce": cmd_fuzz_reduce,
    "show": cmd_show,
}


def main(argv=None):
    args = config_loader.parse_args(argv)
    cfg = config_loader.build_run_config(args)
    set_verbosity(cfg.quiet, cfg.verbose)
    try:
        with Stopwatch() as clock:
            report, dot, ok = COMMAND_HANDLERS[cfg.command](cfg)
        if cfg.timing:
            report["elapsed_sec"] = round(clock.elapsed, 3)
        write_report(render(report, cfg.fmt, dot), cfg.out)
    except CapabilityError as exc:
        log_error(str(exc))
        return EXIT_CAPABILITY
    except (TheoremViolation, ReductionInvariantError) as exc:
        log_error(str(exc))
        return EXIT_COUNTEREXAMPLE
    except FSError as exc:
        log_error(str(exc))
        return EXIT_USAGE
    log_info(f"Total processing time: {clock.elapsed:.2f} seconds")
    usage = monitor_resources()
    log_debug(f"cpu {usage['cpu_percent']}%, memory {usage['memory_percent']}% ({usage['memory_used'] / 2**20:.0f} MiB used)")
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


if __name__ == "__main__":
    sys.exit(main())
