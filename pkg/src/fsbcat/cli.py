"""Command-line entry point ``fsbcat``.

Results go to stdout, progress and errors to stderr.  Exit status is 0 when
everything requested succeeded, 1 when a verification check failed or a
computation raised, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from . import limits
from .arrangements import ArrIsoType, flats_B, flat_to_json
from .fsb_core import enumerate_hom, hom_count, orbit_classes
from .kl_engine import CacheMismatch, KLTable, default_engine
from .series import FitError, LimitDiverges, RationalFunction, pole_set, residue_at
from .suites import SUITES, fit_dmod, fit_projective, run_suite

log = logging.getLogger("fsbcat")


def _emit(rows: list[dict], fmt: str, text: str | None = None, many: bool = False) -> None:
    if fmt == "json":
        print(json.dumps(rows if many or len(rows) != 1 else rows[0], sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for r in rows:
                writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        sys.stdout.write(buf.getvalue())
    else:
        print(text if text is not None else "\n".join(" ".join(str(v) for v in r.values()) for r in rows))


def cmd_hom(args) -> int:
    if args.orbits:
        phis = orbit_classes(args.n, args.d)
    elif args.list:
        phis = enumerate_hom(args.n, args.d)
    else:
        count = hom_count(args.n, args.d)
        _emit([{"n": args.n, "d": args.d, "count": count}], args.format, str(count))
        return 0
    rows = [{"images": list(p.images)} for p in phis]
    _emit(rows, args.format, "\n".join(" ".join(map(str, p.images)) for p in phis), many=True)
    return 0


def cmd_kl(args) -> int:
    T = ArrIsoType(args.n) if args.type == "B" else ArrIsoType.type_A(args.n)
    engine = default_engine()
    poly = engine.kl_poly(T)
    if args.coeff is not None:
        c = int(poly[args.coeff])
        _emit([{"type": str(T), "coeff": args.coeff, "value": c}], args.format, str(c))
    else:
        coeffs = [int(x) for x in poly.to_list()]
        _emit([{"type": str(T), "coeffs": coeffs}], args.format, poly.format())
    return 0


def cmd_flats(args) -> int:
    flats = flats_B(args.n)
    if args.format == "json":
        print(flat_to_json(flats))
    else:
        rows = [{"dim": f.dim, "zero_block": sorted(f.zero_block), "blocks": [list(b) for b in f.blocks]}
                for f in flats]
        _emit(rows, args.format, many=True)
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.max_n, args.d)
    ok = all(c.passed for c in checks)
    report = {"suite": args.suite, "passed": ok, "checks": [c.to_json() for c in checks]}
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    elif args.format == "csv":
        _emit([{"name": c.name, "status": "pass" if c.passed else "fail", "detail": c.detail} for c in checks], "csv")
    else:
        for c in checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if c.detail and not c.passed else ""))
        print(f"suite {args.suite}: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def _describe(fit: RationalFunction, j: int) -> dict:
    out = {"function": str(fit), "json": fit.to_json(), "poles": sorted(pole_set(fit)), "j": j}
    try:
        out["residue"] = str(residue_at(fit, j))
    except LimitDiverges as exc:
        out["residue"] = None
        out["residue_error"] = str(exc)
    return out


def cmd_series(args) -> int:
    if args.source == "dmod":
        if args.i is None:
            raise SystemExit("series dmod needs --i")
        fit = fit_dmod(args.i, args.terms, args.pole_bound, args.mult_bound)
        j = 4 * args.i - 1
    else:
        if args.d is None:
            raise SystemExit("series projective needs --d")
        fit = fit_projective(args.d, args.terms or 20, args.mult_bound or 2)
        j = 2 * args.d + 1
    info = _describe(fit, j)
    if args.format == "json":
        print(json.dumps(info, sort_keys=True))
    else:
        res = info["residue"] if info["residue"] is not None else "limit diverges"
        text = f"{info['function']}\npoles: {{{', '.join(map(str, info['poles']))}}}\nresidue-at-{j}: {res}"
        _emit([{"function": info["function"], "poles": info["poles"], "residue": res}], args.format, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cache", help="KL cache file (default: $FSBCAT_KL_CACHE)")
    common.add_argument("--config", help="JSON file overriding size limits")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    p = argparse.ArgumentParser(prog="fsbcat", description="Computations in the type B surjection category.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hom", parents=[common], help="morphisms [-n,n] -> [-d,d]")
    h.add_argument("n", type=int)
    h.add_argument("d", type=int)
    g = h.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    g.add_argument("--orbits", action="store_true")
    h.set_defaults(func=cmd_hom)

    k = sub.add_parser("kl", parents=[common], help="Kazhdan-Lusztig polynomial")
    k.add_argument("n", type=int)
    k.add_argument("--type", choices=("A", "B"), default="B")
    k.add_argument("--coeff", type=int)
    k.set_defaults(func=cmd_kl)

    f = sub.add_parser("flats", parents=[common], help="flats of B_n")
    f.add_argument("n", type=int)
    f.set_defaults(func=cmd_flats)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--d", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", parents=[common], help="fit a Hilbert series")
    s.add_argument("source", choices=("dmod", "projective"))
    s.add_argument("--i", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--fit", action="store_true", help="fit a rational function (the only mode)")
    s.add_argument("--terms", type=int)
    s.add_argument("--pole-bound", type=int)
    s.add_argument("--mult-bound", type=int)
    s.set_defaults(func=cmd_series)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        if args.config:
            limits.load_limits(args.config)
        cache = args.cache or os.environ.get("FSBCAT_KL_CACHE")
        engine = default_engine()
        if cache and os.path.exists(cache):
            engine.table.entries.update(KLTable.load(cache).entries)
        status = args.func(args)
        if cache:
            engine.table.store(cache)
        return status
    except (limits.ResourceLimitError, FitError, CacheMismatch, ValueError, KeyError, OSError) as exc:
        print(f"fsbcat: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
