"""Command line interface: ``cubetile <subcommand> ...``.

Exit status: 0 on success (including negative verdicts), 1 on errors, 2 when
a cross-check finds the tiling and spectrum verdicts in disagreement.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import cubeset
from .analysis import (
    CSV_HEADER,
    DEFAULT_EPS,
    DEFAULT_N,
    NotOrthogonal,
    check_orthogonality,
    has_face_twin,
    not_orthogonal_verdict,
    spectrum_verdict,
)
from .crosscheck import cross_check, default_samples
from .exact import CubesetError, Window, format_point
from .generators import gen_lattice, gen_random_slides, gen_shifted_columns
from .tiling import check_tiling, enumerate_tilings
from .transforms import SlideSpec, integerize_steps, slide

log = logging.getLogger("cubetile")

EXIT_OK, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2


def _int_list(text: str) -> list:
    return [int(v) for v in text.split(",") if v.strip()]


def _rational_list(text: str) -> list:
    return [Fraction(v.strip()) for v in text.split(",") if v.strip()]


def _emit(s, out):
    if out:
        cubeset.dump(s, out)
    else:
        print(cubeset.dumps(s))


def cmd_check_tiling(args):
    print(check_tiling(cubeset.load(args.file), budget=args.budget))
    return EXIT_OK


def cmd_check_orthogonal(args):
    s = cubeset.load(args.file)
    window = Window.radius(args.window, s.dim) if args.window else None
    report = check_orthogonality(s, window)
    for line in report.lines():
        print(line)
    if report.empty:
        print("ORTHOGONAL")
    return EXIT_OK


def _samples_for(s, path):
    if path:
        return list(cubeset.load(path).offsets)
    return default_samples(s, check_tiling(s) if s.is_periodic else None)


def _write_csv(path, rows, header):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def cmd_spectrum(args):
    s = cubeset.load(args.file)
    samples = _samples_for(s, args.samples)
    try:
        verdict = spectrum_verdict(s, samples, args.n, args.eps)
    except NotOrthogonal as exc:
        verdict = not_orthogonal_verdict(exc.report)
    for r in verdict.reports:
        print(f"{format_point(r.sample_point)}  partial={r.partial_sum:.17g}  tail<={r.tail_bound:.3g}  {r.verdict}")
    print(verdict)
    if args.csv:
        _write_csv(args.csv, [r.csv_row() for r in verdict.reports], CSV_HEADER)
    return EXIT_OK


def _cross_one(job):
    path, n, eps = job
    return cross_check(cubeset.load(path), n=n, eps=eps, set_id=path)


def cmd_cross_check(args):
    jobs = [(p, args.n, args.eps) for p in args.files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_cross_one, jobs))
    else:
        results = [_cross_one(j) for j in jobs]
    rows = []
    for res in results:
        print(res.summary())
        rows.extend([res.set_id] + r.csv_row() for r in res.reports)
    if args.csv:
        _write_csv(args.csv, rows, ["set"] + CSV_HEADER)
    return EXIT_OK if all(r.agreement for r in results) else EXIT_DISAGREE


def cmd_slide(args):
    s = cubeset.load(args.file)
    if not 1 <= args.axis <= s.dim:
        raise ValueError(f"--axis must be between 1 and {s.dim}")
    _emit(slide(s, SlideSpec(args.axis - 1, Fraction(args.anchor), Fraction(args.shift))), args.output)
    return EXIT_OK


def cmd_integerize(args):
    s = cubeset.load(args.file)
    for spec, s in integerize_steps(s, args.n):
        log.info("%s", spec)
        if args.trace:
            print(cubeset.dumps(s))
    if not args.trace:
        _emit(s, args.output)
    elif args.output:
        cubeset.dump(s, args.output)
    return EXIT_OK


def cmd_enumerate(args):
    period = _int_list(args.period)
    count = 0
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        for s in enumerate_tilings(args.dim, period, args.den, dedup=args.dedup, budget=args.budget):
            out.write(cubeset.dumps(s) + "\n")
            count += 1
            if args.limit and count >= args.limit:
                break
    finally:
        if args.output:
            out.close()
    log.info("%d tilings", count)
    return EXIT_OK


def cmd_gen(args):
    if args.kind == "lattice":
        s = gen_lattice(args.dim)
    elif args.kind == "columns":
        axis = args.axis - 1 if args.axis else None
        s = gen_shifted_columns(args.dim, _int_list(args.period), _rational_list(args.shifts), axis)
    else:
        s = gen_random_slides(args.seed, args.dim, args.steps)
    _emit(s, args.output)
    return EXIT_OK


def cmd_twins(args):
    pair = has_face_twin(cubeset.load(args.file))
    print("none" if pair is None else f"{format_point(pair[0])} | {format_point(pair[1])}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubetile", description="Cube tilings and exponential bases of the unit cube.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-tiling", help="exact tiling verdict for a periodic set")
    c.add_argument("file")
    c.add_argument("--budget", type=int, default=10 ** 8, help="maximum torus grid cells")
    c.set_defaults(func=cmd_check_tiling)

    c = sub.add_parser("check-orthogonal", help="list non-orthogonal pairs")
    c.add_argument("file")
    c.add_argument("--window", type=int, help="restrict to the box (-N-1, N+1)^d")
    c.set_defaults(func=cmd_check_orthogonal)

    c = sub.add_parser("spectrum", help="completeness sums at sample points")
    c.add_argument("file")
    c.add_argument("--n", type=int, default=DEFAULT_N)
    c.add_argument("--eps", type=float, default=DEFAULT_EPS)
    c.add_argument("--samples", help="cubeset file whose offsets are the sample points")
    c.add_argument("--csv")
    c.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("cross-check", help="tiling verdict vs spectrum verdict")
    c.add_argument("files", nargs="+")
    c.add_argument("--n", type=int, default=DEFAULT_N)
    c.add_argument("--eps", type=float, default=DEFAULT_EPS)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--csv")
    c.set_defaults(func=cmd_cross_check)

    c = sub.add_parser("slide", help="slide along an axis")
    c.add_argument("file")
    c.add_argument("--axis", type=int, required=True, help="1-based axis index")
    c.add_argument("--anchor", required=True)
    c.add_argument("--shift", required=True)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_slide)

    c = sub.add_parser("integerize", help="slide the set onto Z^d inside (-N, N)^d")
    c.add_argument("file")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--trace", action="store_true", help="print every intermediate set (JSON lines)")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_integerize)

    c = sub.add_parser("enumerate", help="all torus tilings on the 1/q grid (JSON lines)")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--period", required=True, help="comma separated, e.g. 2,2")
    c.add_argument("--den", type=int, required=True)
    c.add_argument("--dedup", action="store_true", help="one tiling per torus translation class")
    c.add_argument("--limit", type=int, default=0)
    c.add_argument("--budget", type=int, default=10 ** 8)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("gen", help="generate a set")
    c.add_argument("kind", choices=["lattice", "columns", "random"])
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--period", default="", help="columns: comma separated periods")
    c.add_argument("--shifts", default="", help="columns: comma separated shifts in [0,1)")
    c.add_argument("--axis", type=int, help="columns: 1-based column axis (default last)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--steps", type=int, default=5)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_gen)

    c = sub.add_parser("twins", help="find two cubes sharing a full face")
    c.add_argument("file")
    c.set_defaults(func=cmd_twins)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (CubesetError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
