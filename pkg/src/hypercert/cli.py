"""Command-line front end.

Exit codes: 0 success, 2 parse/validation error, 3 brute-force cap exceeded,
4 certificate search failed, 5 certificate rejected.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

from . import __version__
from .anf import cut_decompose
from .certificate import CertificateRejected, check_certificate, search_and_verify
from .demos import DEMO_NAMES, instance_text, run_demo
from .documents import CertificateDocument, DocumentError, Instance, load_instance, parse_certificate
from .f2 import bilinear_slice, is_purely_bilinear, rank_f2
from .generators import planted_bridges, random_cut, random_hypergraph
from .oracle import OracleLimits, ResourceLimitError, schmidt_rank

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_SEARCH_FAILED = 4
EXIT_REJECTED = 5

ENV_PREFIX = "HYPERCERT_"


def _env_int(name: str, default):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {ENV_PREFIX}{name}={raw!r} is not an integer") from None


def _limits(args) -> OracleLimits:
    return OracleLimits(max_side=args.max_side, max_total=args.max_total)


def _add_cap_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-side", type=int, default=_env_int("MAX_SIDE", 14),
                   help="largest cut side for brute force (env HYPERCERT_MAX_SIDE)")
    p.add_argument("--max-total", type=int, default=_env_int("MAX_TOTAL", 26),
                   help="largest |A|+|B| for brute force (env HYPERCERT_MAX_TOTAL)")


def cmd_rank(args) -> int:
    inst = load_instance(args.instance)
    sr = schmidt_rank(inst.graph, inst.cut, _limits(args))
    print(f"exact_schmidt_rank: {sr}")
    if sr & (sr - 1) == 0:
        print(f"log2_rank: {sr.bit_length() - 1}")
    else:
        print(f"log2_rank: not an integer (log2 = {math.log2(sr):.6f})")
    return EXIT_OK


def cmd_slice(args) -> int:
    inst = load_instance(args.instance)
    _, _, f_ab = cut_decompose(inst.graph.phase_polynomial(), inst.cut)
    gamma = bilinear_slice(f_ab, inst.cut)
    exact = is_purely_bilinear(f_ab)
    print("gamma_ab:")
    for row in gamma.to_rows():
        print("  " + " ".join(map(str, row)))
    print(f"rank_f2: {rank_f2(gamma)}")
    if exact:
        print(f"exact: yes (cross phase is purely bilinear, SR = 2^{rank_f2(gamma)})")
    else:
        print("exact: no (higher-degree cross terms present; 2^rank is not reliable)")
    return EXIT_OK


def _search(inst: Instance, args):
    a, b = len(inst.cut.a_vertices), len(inst.cut.b_vertices)
    r_max = args.r_max if args.r_max is not None else max(1, min(a, b))
    best = search_and_verify(inst.graph, inst.cut, r_max, args.restarts, args.seed)
    reversed_cut = False
    if args.symmetric:
        mirror = search_and_verify(inst.graph, inst.cut.reversed(), r_max, args.restarts, args.seed)
        if mirror is not None and (best is None or mirror.t > best.t):
            best, reversed_cut = mirror, True
    return best, reversed_cut


def cmd_certify(args) -> int:
    inst = load_instance(args.instance)
    cert, reversed_cut = _search(inst, args)
    if cert is None:
        print("certificate search failed: no residual-free core found", file=sys.stderr)
        return EXIT_SEARCH_FAILED
    doc = CertificateDocument(inst.digest(), cert, reversed_cut)
    report = sys.stdout if args.output else sys.stderr
    print(f"certificate: t={cert.t} bound={cert.bound} orientation={'B|A' if reversed_cut else 'A|B'}", file=report)
    if args.cross_check:
        try:
            sr = schmidt_rank(inst.graph, inst.cut, _limits(args))
        except ResourceLimitError as exc:
            print(f"cross-check skipped: {exc}", file=report)
        else:
            print(f"cross-check: exact_schmidt_rank={sr} bound={cert.bound} "
                  f"{'ok' if cert.bound <= sr else 'VIOLATED'}", file=report)
            if cert.bound > sr:
                return 1
    if args.output:
        Path(args.output).write_text(doc.dumps(), encoding="utf-8")
        print(f"wrote {args.output}", file=report)
    else:
        sys.stdout.write(doc.dumps())
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = load_instance(args.instance)
    try:
        doc = parse_certificate(Path(args.certificate).read_text(encoding="utf-8"))
    except DocumentError as exc:
        print(f"error: {args.certificate}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if doc.instance_hash != inst.digest():
        print("rejected: hash mismatch")
        return EXIT_REJECTED
    cut = inst.cut.reversed() if doc.reversed_cut else inst.cut
    try:
        check_certificate(inst.graph, cut, doc.certificate)
    except CertificateRejected as exc:
        print(f"rejected: {exc.reason}")
        if exc.detail:
            print(f"detail: {exc.detail}")
        return EXIT_REJECTED
    print(f"accepted: SR >= {doc.certificate.bound} (t = {doc.certificate.t})")
    return EXIT_OK


def cmd_demo(args) -> int:
    if args.write_instance:
        Path(args.write_instance).write_text(instance_text(args.name), encoding="utf-8")
    report = run_demo(args.name)
    print(report)
    return EXIT_OK if report.ok else 1


def cmd_gen(args) -> int:
    import random

    if args.kind == "bridges":
        g, cut = planted_bridges(args.r, args.block_size)
    else:
        rng = random.Random(args.seed)
        g = random_hypergraph(rng, args.n, args.edges, args.min_degree, args.max_degree)
        cut = random_cut(rng, args.n)
    text = Instance(g, cut).dumps()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercert", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="exact Schmidt rank by brute force")
    p.add_argument("instance")
    _add_cap_flags(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("slice", help="bilinear slice Gamma_AB and its F2 rank")
    p.add_argument("instance")
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("certify", help="search for a residual-free core certificate")
    p.add_argument("instance")
    p.add_argument("--r-max", type=int, default=_env_int("R_MAX", None),
                   help="largest core size tried (default min(|A|,|B|); env HYPERCERT_R_MAX)")
    p.add_argument("--seed", type=int, default=_env_int("SEED", 0), help="restart seed (env HYPERCERT_SEED)")
    p.add_argument("--restarts", type=int, default=_env_int("RESTARTS", 0),
                   help="randomized greedy restarts per size (env HYPERCERT_RESTARTS)")
    p.add_argument("--symmetric", action="store_true", help="also search with A and B swapped")
    p.add_argument("--cross-check", action="store_true", help="compare the bound with the exact rank when within cap")
    p.add_argument("-o", "--output", help="write the certificate here instead of standard output")
    _add_cap_flags(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="independently recheck a certificate")
    p.add_argument("instance")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="run a bundled worked instance")
    p.add_argument("name", choices=DEMO_NAMES)
    p.add_argument("--write-instance", metavar="PATH", help="also save the bundled instance file")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("kind", choices=("bridges", "random"))
    p.add_argument("--r", type=int, default=3, help="number of planted bridges")
    p.add_argument("--block-size", type=int, default=2, help="|T_k| of each planted bridge")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--edges", type=int, default=6)
    p.add_argument("--min-degree", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
