"""
Command line interface.

Subcommands::

    rtucker compress       --input X --method M (--rank r1,..,rd | --tolerance eps) --out DIR
    rtucker bench-hilbert  --input hilbert:d,I --rank r,r',...
    rtucker bench-adaptive --sizes 25,50,100 --tolerance 1e-3,1e-4
    rtucker bench-sparse   --input sparse:n,gamma|x.tns --rank r,r',... [--strides ...]
    rtucker verify DIR     --input X

CSV rows go to stdout (and are appended to ``--csv`` when given); logs go to
stderr. Exit status is 0 on success, 1 on a numerical or verification failure
and 2 on a usage error.
"""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from . import __version__
from .algorithms import MethodDefinition, TuckerConfig, get_method, list_methods
from .bench import (
    ADAPTIVE_TOLERANCES,
    HILBERT_METHODS,
    SPARSE_METHODS,
    SPARSE_SEEDS,
    RunRecord,
    append_csv,
    bench_adaptive,
    bench_hilbert,
    bench_sparse,
    format_csv,
    timed_run,
    verify_archive,
)
from .config import config
from .datasets import (
    condense_mode,
    gen_hilbert,
    gen_synthetic_sparse,
    read_dense,
    read_tns,
    save_tucker,
    subsample,
)
from .tensor import Tensor
from .utils.errors import InvalidArgumentError, handle_error
from .utils.logging_config import configure_logging
from .utils.validators import (
    InputSpec,
    parse_input_spec,
    parse_int_list,
    parse_order,
    validate_mode,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Generator seed for ``sparse:n,gamma`` inputs, so verify rebuilds the same tensor
SYNTHETIC_SEED = 0


def load_input(text: str) -> Tensor:
    """Load or generate the tensor described by an ``--input`` argument."""
    spec = parse_input_spec(text)
    return _load(spec)


def _load(spec: InputSpec) -> Tensor:
    if spec.path is not None:
        return read_tns(spec.path) if spec.kind == "tns" else read_dense(spec.path)
    if spec.kind == "hilbert":
        d, size = (int(v) for v in spec.params)
        return gen_hilbert((size,) * d)
    n, gamma = spec.params
    if n != int(n) or n < 1:
        raise InvalidArgumentError(f"Synthetic size must be a positive integer, got {n}")
    return gen_synthetic_sparse(int(n), gamma, seed=SYNTHETIC_SEED)


def _float_list(text: str, name: str) -> list[float]:
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise InvalidArgumentError(f"Invalid {name} list '{text}'") from e
    if not values:
        raise InvalidArgumentError(f"Empty {name} list")
    return values


def _emit(records: Sequence[RunRecord], csv_path: str | None) -> None:
    sys.stdout.write(format_csv(records))
    sys.stdout.flush()
    if csv_path:
        append_csv(records, csv_path)
        logger.info(f"Appended {len(records)} row(s) to {csv_path}")


def _require_method(name: str) -> MethodDefinition:
    method = get_method(name)
    if method is None:
        raise InvalidArgumentError(f"Unknown method '{name}'")
    return method


def cmd_compress(args: argparse.Namespace) -> int:
    method = _require_method(args.method)
    if method.needs_ranks and not args.rank:
        raise InvalidArgumentError(f"Method '{method.name}' needs --rank")
    if method.needs_tolerance and args.tolerance is None:
        raise InvalidArgumentError(f"Method '{method.name}' needs --tolerance")

    x = load_input(args.input)
    cfg = TuckerConfig(
        ranks=tuple(parse_int_list(args.rank, "rank")) if method.needs_ranks else None,
        oversampling=args.oversample,
        power=args.power,
        order=parse_order(args.order, x.ndim),
        tolerance=float(args.tolerance) if method.needs_tolerance else None,
        block_size=args.block,
        seed=args.seed,
        selection=args.selection,
    )
    t, record = timed_run(x, method, cfg)
    save_tucker(t, args.out, rel_error=record.rel_error)
    _emit([record], args.csv)
    return EXIT_OK


def cmd_bench_hilbert(args: argparse.Namespace) -> int:
    spec = parse_input_spec(args.input)
    if spec.kind != "hilbert":
        raise InvalidArgumentError(f"bench-hilbert needs --input hilbert:d,I, got '{args.input}'")
    d, size = (int(v) for v in spec.params)
    methods = parse_methods(args.methods) if args.methods else HILBERT_METHODS
    records = bench_hilbert(
        d,
        size,
        parse_int_list(args.rank, "rank"),
        p=args.oversample,
        trials=args.trials,
        seed=args.seed,
        power=args.power,
        methods=methods,
    )
    _emit(records, args.csv)
    return EXIT_OK


def cmd_bench_adaptive(args: argparse.Namespace) -> int:
    tolerances = (
        _float_list(args.tolerance, "tolerance") if args.tolerance else ADAPTIVE_TOLERANCES
    )
    order = parse_order(args.order, args.modes) if args.order else None
    records = bench_adaptive(
        sizes=parse_int_list(args.sizes, "size"),
        tolerances=tolerances,
        d=args.modes,
        block_size=args.block,
        seed=args.seed,
        order=order,
        compare=args.compare,
    )
    _emit(records, args.csv)
    return EXIT_OK


def cmd_bench_sparse(args: argparse.Namespace) -> int:
    x = load_input(args.input)
    if args.condense is not None:
        x = condense_mode(x, validate_mode(args.condense - 1, x.ndim))
    if args.strides:
        x = subsample(x, parse_int_list(args.strides, "stride"))
    logger.info(f"bench-sparse input {x.shape} with {x.nnz} nonzeros")

    methods = parse_methods(args.methods) if args.methods else SPARSE_METHODS
    trials = args.trials or len(SPARSE_SEEDS)
    records = bench_sparse(
        x,
        parse_int_list(args.rank, "rank"),
        p=args.oversample,
        seeds=tuple(range(args.seed, args.seed + trials)),
        order=parse_order(args.order, x.ndim),
        power=args.power,
        methods=methods,
    )
    _emit(records, args.csv)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    x = load_input(args.input)
    report = verify_archive(args.archive, x)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status} {check.name}"
        if not check.passed and check.message:
            line += f": {check.message}"
        print(line)
    if not report.passed:
        report.raise_for_failures()
    return EXIT_OK


def parse_methods(text: str) -> list[str]:
    names = [item.strip() for item in text.split(",") if item.strip()]
    for name in names:
        _require_method(name)
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rtucker", description="Randomized and structure-preserving Tucker decompositions"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Logging level (default from env)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, rank_help: str) -> None:
        p.add_argument("--rank", help=rank_help)
        p.add_argument(
            "--oversample", type=int, default=config.default_oversampling, help="Oversampling p"
        )
        p.add_argument("--power", type=int, default=0, help="Subspace iterations q")
        p.add_argument("--seed", type=int, default=0, help="Base seed of the sketch streams")
        p.add_argument("--csv", help="Append the CSV rows to this file")

    compress = sub.add_parser("compress", help="Decompose one tensor and write an archive")
    compress.add_argument("--input", required=True, help="path.tns|path.npy|hilbert:d,I|sparse:n,g")
    compress.add_argument("--method", required=True, choices=list_methods())
    common(compress, "Target ranks r1,...,rd")
    compress.add_argument("--tolerance", type=float, help="Relative error tolerance (adaptive)")
    compress.add_argument("--block", type=int, default=1, help="Adaptive block size b")
    compress.add_argument("--order", default="auto", help="auto or a 1-based permutation")
    compress.add_argument("--selection", choices=["srrqr", "pivoted-qr"], default="srrqr")
    compress.add_argument("--out", required=True, help="Archive directory")
    compress.set_defaults(func=cmd_compress)

    hilbert = sub.add_parser("bench-hilbert", help="Fixed-rank methods on a Hilbert tensor")
    hilbert.add_argument("--input", default="hilbert:5,25", help="hilbert:d,I")
    common(hilbert, "Rank sweep r,r',... (same rank in every mode)")
    hilbert.add_argument("--trials", type=int, default=None, help="Runs per method and rank")
    hilbert.add_argument("--methods", help="Comma-separated subset of methods")
    hilbert.set_defaults(func=cmd_bench_hilbert, rank="1,2,3,4,5,6,7,8,9,10")

    adaptive = sub.add_parser("bench-adaptive", help="Adaptive R-STHOSVD over a tolerance sweep")
    adaptive.add_argument("--modes", type=int, default=3, help="Number of modes d")
    adaptive.add_argument("--sizes", default="25,50,100", help="Hilbert mode sizes")
    adaptive.add_argument("--tolerance", help="Tolerance sweep eps,eps',...")
    adaptive.add_argument("--block", type=int, default=1, help="Adaptive block size b")
    adaptive.add_argument("--order", default=None, help="1-based permutation (default 1..d)")
    adaptive.add_argument("--seed", type=int, default=0)
    adaptive.add_argument("--compare", action="store_true", help="Add STHOSVD at the same ranks")
    adaptive.add_argument("--csv", help="Append the CSV rows to this file")
    adaptive.set_defaults(func=cmd_bench_adaptive)

    sparse = sub.add_parser("bench-sparse", help="Sequential methods on a sparse tensor")
    sparse.add_argument("--input", default="sparse:200,200", help="path.tns|sparse:n,gamma")
    common(sparse, "Rank sweep r,r',... (same rank in every mode)")
    sparse.add_argument("--order", default="auto", help="auto or a 1-based permutation")
    sparse.add_argument(
        "--trials", type=int, default=None, help="Seeds per randomized method (default 5)"
    )
    sparse.add_argument("--methods", help="Comma-separated subset of methods")
    sparse.add_argument("--condense", type=int, help="Sum out this 1-based mode first")
    sparse.add_argument("--strides", help="Keep every s_k-th slice of mode k, s1,...,sd")
    sparse.set_defaults(func=cmd_bench_sparse, rank="10,20,30")

    verify = sub.add_parser("verify", help="Check an archive against its original tensor")
    verify.add_argument("archive", help="Archive directory")
    verify.add_argument("--input", required=True, help="The tensor that was compressed")
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    configure_logging(args.log_level or config.log_level)
    try:
        return int(args.func(args))
    except (InvalidArgumentError, ValidationError) as e:
        error = handle_error(e, args.command)
        print(f"rtucker {args.command}: {error['error']}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        error = handle_error(e, args.command)
        print(f"rtucker {args.command}: {error['error']}", file=sys.stderr)
        return EXIT_FAILURE


def run() -> None:
    sys.exit(main())
