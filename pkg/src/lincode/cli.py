"""Command-line front end.

Exit codes: 0 success, 1 failed identity check, 2 bad input, 3 degenerate
generator, 4 budget exceeded, 5 non-decodable word, 6 inconsistent ``--d``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from lincode.code import LinearCode, cyclic_generator_matrix, macwilliams_transform
from lincode.decoder import AlreadyCodeword, Decoded, decode
from lincode.errors import (
    BudgetExceededError,
    DegenerateGeneratorError,
    InconsistentDistanceError,
    ShapeError,
)
from lincode.gf import PrimeField
from lincode.matrixfile import MatrixFileError, format_matrix, format_vector, parse_word, read_matrix
from lincode.mindist import DEFAULT_MAX_WORK, min_distance
from lincode.oracle import oracle_min_distance, oracle_nearest, span_weight_distribution

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_BUDGET = 4
EXIT_NON_DECODABLE = 5
EXIT_INCONSISTENT_D = 6


def _support(v: Sequence[int]) -> str:
    return "{" + " ".join(str(i + 1) for i, x in enumerate(v) if x) + "}"


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _load_code(path: str) -> LinearCode:
    return LinearCode(read_matrix(path))


def cmd_mindist(args) -> int:
    code = _load_code(args.matrix)
    rep = min_distance(code, start_level=args.start_level, max_work=args.max_work, threads=args.threads)
    levels = [
        {"j": j, "subsets": rep.subsets_examined[j], "hits": rep.hits[j]} for j in sorted(rep.subsets_examined)
    ]
    if args.format == "json":
        _emit_json(
            {
                "q": code.q,
                "n": code.n,
                "k": code.k,
                "d": rep.d,
                "X": [list(x.coords) for x in rep.X],
                "Y": [list(y) for y in rep.Y],
                "levels": levels,
            }
        )
        return EXIT_OK
    print(f"code: q={code.q} n={code.n} k={code.k}")
    print(f"d = {rep.d}")
    print("levels:")
    for lv in levels:
        print(f"  j={lv['j']} subsets={lv['subsets']} hits={lv['hits']}")
    print(f"X ({len(rep.X)} points):")
    for i, x in enumerate(rep.X, start=1):
        print(f"  x{i} = {format_vector(x.coords)}")
    print(f"Y ({len(rep.Y)} codewords of weight {rep.d}):")
    for i, y in enumerate(rep.Y, start=1):
        print(f"  y{i} = {format_vector(y)}  support {_support(y)}")
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _load_code(args.matrix)
    w = parse_word(args.word, code.q, code.n)
    res = decode(code, w, d=args.d, threads=args.threads)
    if isinstance(res, Decoded):
        payload = {
            "verdict": "decoded",
            "e": list(res.e),
            "v": list(res.v),
            "error_positions": list(res.error_positions),
            "corrections": res.corrections,
        }
        status = EXIT_OK
    elif isinstance(res, AlreadyCodeword):
        payload = {"verdict": "already-codeword", "e": list(res.e), "v": list(res.v), "error_positions": [], "corrections": 0}
        status = EXIT_OK
    else:
        payload = {"verdict": "non-decodable", "radius_tried": res.radius_tried}
        status = EXIT_NON_DECODABLE
    if args.format == "json":
        _emit_json(payload)
        return status
    print(f"w = {format_vector(w)}")
    if status == EXIT_NON_DECODABLE:
        print("non-decodable")
        print(f"radius tried: {res.radius_tried}")
        return status
    print(f"verdict: {payload['verdict']}")
    print(f"e = {format_vector(payload['e'])}")
    print(f"v = {format_vector(payload['v'])}")
    positions = " ".join(str(p) for p in payload["error_positions"]) or "none"
    print(f"corrected positions: {positions}")
    return status


def cmd_wdist(args) -> int:
    code = _load_code(args.matrix)
    wd = code.weight_distribution()
    if args.format == "json":
        _emit_json({"q": code.q, "n": code.n, "k": code.k, "alpha": list(wd.alpha), "d": wd.min_distance})
        return EXIT_OK
    print(f"code: q={code.q} n={code.n} k={code.k}")
    for i, a in enumerate(wd.alpha):
        if a:
            print(f"  alpha[{i}] = {a}")
    print(f"W(X,Y) = {wd.polynomial()}")
    return EXIT_OK


def cmd_dual(args) -> int:
    code = _load_code(args.matrix)
    text = format_matrix(code.dual_matrix())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_macwilliams_check(args) -> int:
    code = _load_code(args.matrix)
    predicted = macwilliams_transform(code.weight_distribution(), code.q, code.k).alpha
    direct = span_weight_distribution(code.dual_matrix())
    ok = direct == predicted
    if args.format == "json":
        _emit_json({"transform": list(predicted), "dual": list(direct), "holds": ok})
    else:
        print(f"transform of W_C: {format_vector(predicted)}")
        print(f"dual enumerated:  {format_vector(direct)}")
        print("identity holds" if ok else "identity FAILS")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_oracle_mindist(args) -> int:
    code = _load_code(args.matrix)
    d, words = oracle_min_distance(code)
    if args.format == "json":
        _emit_json({"d": d, "codewords": [list(w) for w in words]})
        return EXIT_OK
    print(f"d = {d}")
    print(f"minimum-weight codewords ({len(words)}):")
    for w in words:
        print(f"  {format_vector(w)}")
    return EXIT_OK


def cmd_oracle_decode(args) -> int:
    code = _load_code(args.matrix)
    w = parse_word(args.word, code.q, code.n)
    dist, near = oracle_nearest(code, w)
    if args.format == "json":
        _emit_json({"distance": dist, "nearest": [list(v) for v in near], "unique": len(near) == 1})
        return EXIT_OK
    print(f"distance = {dist}")
    print(f"nearest codewords ({len(near)}{', tie' if len(near) > 1 else ''}):")
    for v in near:
        print(f"  {format_vector(v)}")
    return EXIT_OK


def cmd_gen_cyclic(args) -> int:
    g = [int(t) for t in args.g.replace(",", " ").split()]
    G = cyclic_generator_matrix(g, args.n, PrimeField(args.q))
    text = format_matrix(G)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lincode", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, threads=False):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if threads:
            sp.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)

    sp = sub.add_parser("mindist", help="minimum distance and all minimum-weight codewords")
    sp.add_argument("matrix")
    sp.add_argument("--start-level", type=_positive, default=1, help="known lower bound on d")
    sp.add_argument("--max-work", type=_positive, default=DEFAULT_MAX_WORK, help="cap on column subsets examined")
    common(sp, threads=True)
    sp.set_defaults(func=cmd_mindist)

    sp = sub.add_parser("decode", help="bounded-distance decoding of a received word")
    sp.add_argument("matrix")
    sp.add_argument("word", help="word file or comma-separated entries")
    sp.add_argument("--d", type=int, default=None, help="known minimum distance")
    common(sp, threads=True)
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("wdist", help="weight distribution by enumeration")
    sp.add_argument("matrix")
    common(sp)
    sp.set_defaults(func=cmd_wdist)

    sp = sub.add_parser("dual", help="write a generator matrix of the dual code")
    sp.add_argument("matrix")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("macwilliams-check", help="compare the MacWilliams transform with the enumerated dual")
    sp.add_argument("matrix")
    common(sp)
    sp.set_defaults(func=cmd_macwilliams_check)

    sp = sub.add_parser("oracle-mindist", help="minimum distance by brute force")
    sp.add_argument("matrix")
    common(sp)
    sp.set_defaults(func=cmd_oracle_mindist)

    sp = sub.add_parser("oracle-decode", help="nearest codewords by brute force")
    sp.add_argument("matrix")
    sp.add_argument("word")
    common(sp)
    sp.set_defaults(func=cmd_oracle_decode)

    sp = sub.add_parser("gen-cyclic", help="generator matrix of a cyclic code")
    sp.add_argument("--g", required=True, help="coefficients of g(x), constant term first, e.g. 1,0,1,1")
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen_cyclic)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DegenerateGeneratorError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except InconsistentDistanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT_D
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (MatrixFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

if __name__ == "__main__":
    sys.exit(main())
