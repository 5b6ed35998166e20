"""
Handles command-line argument parsing and builds the RunConfig the commands run on.
"""
import argparse
from dataclasses import dataclass, field

from core.fs_engine import DEFAULT_CHUNK
from core.utils import DEFAULT_SEED
from core.verify import SWEEPS
from io_utils.report_writer import FORMATS
from metrics.monitor import DEFAULT_BUDGET

COMMANDS = ("components", "verify", "cyclespace", "reduce", "fuzz-reduce", "show")


@dataclass
class RunConfig:
    """Everything a command needs, detached from argparse."""

    command: str
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET
    out: str = None
    fmt: str = "json"
    chunk: int = DEFAULT_CHUNK
    quiet: bool = False
    verbose: bool = False
    timing: bool = False
    options: dict = field(default_factory=dict)


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _shared_flags():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"Random seed (default {DEFAULT_SEED})")
    shared.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                        help="Largest n! a census may enumerate (default 10!)")
    shared.add_argument("--out", default=None, help="Report path; '-' or omitted writes to stdout")
    shared.add_argument("--format", dest="fmt", choices=FORMATS, default="json")
    shared.add_argument("--chunk", type=_positive, default=DEFAULT_CHUNK, help="Ranks per vectorized census chunk")
    shared.add_argument("--quiet", action="store_true", help="Silence [INFO] lines and progress bars")
    shared.add_argument("--verbose", action="store_true", help="Print [DEBUG] lines")
    shared.add_argument("--timing", action="store_true", help="Embed wall time in the report")
    return shared


def build_parser():
    shared = _shared_flags()
    parser = argparse.ArgumentParser(description="Friends-and-strangers graph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("components", parents=[shared], help="Component census of FS(X, Y)")
    p.add_argument("x", help="X graph: family spec (e.g. star:7) or JSON file")
    p.add_argument("y", help="Y graph: family spec (e.g. theta0) or JSON file")
    p.add_argument("--start", default=None, help="Permutation whose component --format dot renders")

    p = sub.add_parser("verify", parents=[shared], help="Sweep a theorem against exact censuses")
    p.add_argument("theorem", choices=sorted(SWEEPS))
    p.add_argument("--n-max", dest="n_max", type=_positive, default=None,
                   help="Largest n in the sweep (theorem-specific default)")
    p.add_argument("--samples", type=_positive, default=200, help="Random graphs drawn at n = 8")
    p.add_argument("--count", type=_positive, default=1000, help="Anchored walks for the isocycles sweep")

    p = sub.add_parser("cyclespace", parents=[shared], help="Cycle-space report per component of FS(X, Y)")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--component", type=int, default=None, help="Representative rank of one component")

    p = sub.add_parser("reduce", parents=[shared], help="Reduce an anchored walk in FS(Cycle_n, Y)")
    p.add_argument("--y", required=True)
    p.add_argument("--n", type=_positive, default=None, help="Cycle length (defaults to |V(Y)|)")
    p.add_argument("--labels", required=True, help='Comma-separated labels, e.g. "12,13,23,12"')
    p.add_argument("--start", default=None, help="Start permutation (defaults to the identity)")

    p = sub.add_parser("fuzz-reduce", parents=[shared], help="Reduce seeded random anchored walks")
    p.add_argument("--y", required=True)
    p.add_argument("--n", type=_positive, default=None)
    p.add_argument("--count", type=_positive, default=100)

    p = sub.add_parser("show", parents=[shared], help="Structural summary of one graph")
    p.add_argument("graph")
    return parser


def parse_args(argv=None):
    return build_parser().parse_args(argv)


def build_run_config(args):
    """Split the namespace into shared RunConfig fields and command options."""
    shared = {"command", "seed", "budget", "out", "fmt", "chunk", "quiet", "verbose", "timing"}
    values = vars(args)
    return RunConfig(
        command=args.command,
        seed=args.seed,
        budget=args.budget,
        out=args.out,
        fmt=args.fmt,
        chunk=args.chunk,
        quiet=args.quiet,
        verbose=args.verbose,
        timing=args.timing,
        options={k: v for k, v in values.items() if k not in shared},
    )
