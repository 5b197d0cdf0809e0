"""Command line interface.

Exit codes: 0 on success (and for verified claims), 1 when a check or
verification fails, 2 for invalid input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .blockops import (
    PipelineError,
    pipeline_symbolic,
    pipeline_validate,
)
from .literals import (
    LiteralError,
    certificate_from_json,
    parse_function,
    parse_pipeline,
    parse_weight_tuple,
)
from .piecewise import NotSymbolicError
from .polynomials import _frac_str
from .streams import parse_blocks, stream_prefix
from .suites import (
    suite_diamond,
    suite_fzip,
    suite_interleave,
    suite_moves,
    suite_quadweights,
)
from .weights import (
    ProvedSymbolic,
    Refuted,
    VerifiedToDepth,
    certificate_check,
    weight_product_symbolic,
    weight_product_values,
)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="streamdeg",
        description="Exact algebra and transducers for block-encoded streams.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stream", help="print a bit prefix of the stream of f")
    s.add_argument("function", help="function literal, e.g. 'poly: n'")
    s.add_argument("--bits", type=int, default=64)

    s = sub.add_parser("blocks", help="decode a 01-word into block sizes")
    s.add_argument("word")

    s = sub.add_parser("wp", help="product of a weight tuple with f")
    s.add_argument("weights", help="JSON rows, constant last, e.g. '[[1,2,0]]'")
    s.add_argument("function")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument(
        "--symbolic", action="store_true", help="print the piecewise form (default)"
    )
    mode.add_argument(
        "--numeric", type=int, metavar="N", help="print the first N values instead"
    )

    s = sub.add_parser("fst", help="compile a pipeline to one transducer")
    s.add_argument("pipeline", help="e.g. 'drop 1 | add {0}%%2 3'")
    s.add_argument("--run", metavar="FUNC", help="run it on the stream of FUNC")
    s.add_argument("--bits", type=int, default=256)
    s.add_argument("--dot", action="store_true", help="print graphviz instead")

    s = sub.add_parser("pipeline", help="apply or validate a pipeline symbolically")
    s.add_argument("pipeline")
    s.add_argument("function")
    s.add_argument("--validate", action="store_true")

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument(
        "suite", choices=["quadweights", "fzip", "moves", "interleave", "diamond"]
    )
    s.add_argument("--grid", type=int, default=20)
    s.add_argument("--bits", type=int, default=2000)
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("cert", help="check a certificate file")
    s.add_argument("path")
    s.add_argument("--depth", type=int, help="override the pointwise depth")
    return p


def _cmd_stream(args) -> int:
    f = parse_function(args.function)
    print(stream_prefix(f, args.bits))
    return 0


def _cmd_blocks(args) -> int:
    seq = parse_blocks(args.word)
    sizes = " ".join(str(s) for s in seq.sizes)
    print(f"blocks: {sizes}" if sizes else "blocks:")
    partial = "none" if seq.trailing_partial is None else seq.trailing_partial
    print(f"partial: {partial}")
    return 0


def _cmd_wp(args) -> int:
    ws = parse_weight_tuple(args.weights)
    f = parse_function(args.function)
    if args.numeric is not None:
        vals = weight_product_values(ws, f, args.numeric)
        print(" ".join(_frac_str(v) for v in vals))
        return 0
    print(weight_product_symbolic(ws, f.as_piecewise()))
    return 0


def _cmd_fst(args) -> int:
    pipe = parse_pipeline(args.pipeline)
    t = pipe.compile()
    if args.dot:
        print(t.to_dot())
        return 0
    if args.run:
        f = parse_function(args.run)
        print(t.run(stream_prefix(f, args.bits)))
        return 0
    print(f"pipeline: {pipe.literal()}")
    print(f"states: {t.n_states}")
    return 0


def _cmd_pipeline(args) -> int:
    pipe = parse_pipeline(args.pipeline)
    f = parse_function(args.function).as_piecewise()
    if args.validate:
        violations = pipeline_validate(f, pipe)
        if not violations:
            print("valid")
            return 0
        for v in violations:
            print(f"op {v.op_index} ({v.op.literal()}): {v.reason}")
            if v.suggestion is not None:
                print(f"suggestion: {v.suggestion.literal()}")
        return 1
    state = pipeline_symbolic(f, pipe)
    print(state)
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "quadweights":
        lines, ok = suite_quadweights(args.grid)
    elif args.suite == "fzip":
        lines, ok = suite_fzip(bits=args.bits)
    elif args.suite == "moves":
        lines, ok = suite_moves(bits=args.bits)
    elif args.suite == "interleave":
        lines, ok = suite_interleave(count=args.count, seed=args.seed)
    else:
        lines, ok = suite_diamond(count=args.count, seed=args.seed, bits=args.bits)
    for line in lines:
        print(line)
    return 0 if ok else 1


def _cmd_cert(args) -> int:
    cert = certificate_from_json(Path(args.path).read_text())
    res = certificate_check(cert, depth=args.depth)
    if isinstance(res, ProvedSymbolic):
        print("proved: symbolic forms coincide")
        return 0
    if isinstance(res, VerifiedToDepth):
        print(f"verified pointwise to depth {res.depth}")
        return 0
    assert isinstance(res, Refuted)
    print(f"refuted at n={res.index}")
    return 1


_COMMANDS = {
    "stream": _cmd_stream,
    "blocks": _cmd_blocks,
    "wp": _cmd_wp,
    "fst": _cmd_fst,
    "pipeline": _cmd_pipeline,
    "verify": _cmd_verify,
    "cert": _cmd_cert,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except PipelineError as e:
        print(f"not applicable: {e}", file=sys.stderr)
        return 1
    except (LiteralError, NotSymbolicError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
