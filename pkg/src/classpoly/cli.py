"""Command line front end.

Subcommands:

* ``classes``    - table of conjugacy classes in a length window
* ``classpoly``  - class polynomial decomposition of one element
* ``adlv``       - nonemptiness/dimension report for one (element, class) pair
* ``scan``       - bulk table over all (w, b) within the bounds
* ``svg``        - rank-2 alcove diagram (figure file + companion CSV)
* ``selfcheck``  - run the acceptance criteria

Element grammar: whitespace-separated generator words (``s0 s1 s0``),
translation literals (``t[1,0] s1``), or canonical keys (``t[1,0].u[1]``).
Class grammar: ``kappa=[...] nu=[p/q,...]`` or ``of ELEMENT``.

Exit codes: 0 ok, 2 input error, 3 resource limit, 4 selfcheck failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .adlv import dim_adlv, sigma_class_from_invariant, sigma_class_of, sigma_classes_window
from .affine_weyl import encode_element, length, parse_element
from .cache import ClassPolyCache
from .conjugacy import ClassInvariant, coset_elements_by_length, enumerate_classes
from .errors import InputError, IntegrityError, PreconditionError, ResourceLimitError
from .hecke_cocenter import get_engine
from .laurent import NEG_INFINITY
from .root_datum import build_root_datum, load_root_datum


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-p", "--preset", help="named preset datum (e.g. SL3, PGL2, Sp4)")
    parser.add_argument("--datum", help="path to an explicit datum JSON file")
    parser.add_argument("--max-len", type=int, default=6, metavar="N",
                        help="length bound for enumerations (default 6)")
    parser.add_argument("--kappa-window", type=int, default=1, metavar="K",
                        help="bound on free Kottwitz coordinates (default 1)")
    parser.add_argument("--nu-bound", type=int, default=8, metavar="N",
                        help="bound on <nu, 2 rho> for class windows (default 8)")
    parser.add_argument("--cache", metavar="PATH", help="JSON-lines class polynomial cache")
    parser.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    parser.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="parallel workers for scans (default 1)")
    parser.add_argument("--limit-nodes", type=int, default=None, metavar="N",
                        help="hard bound on reduction nodes")
    parser.add_argument("--pivot", default="canonical", metavar="RULE",
                        help="pivot rule: canonical|reversed|seeded:N")
    parser.add_argument("-o", "--output", metavar="PATH",
                        help="output file (default stdout; required for svg)")


def _build_datum(args):
    if args.datum and args.preset:
        raise InputError("give either --preset or --datum, not both")
    if args.datum:
        return load_root_datum(args.datum)
    if args.preset:
        return build_root_datum(args.preset)
    raise InputError("a datum is required (--preset NAME or --datum FILE)")


def _engine(args, datum):
    cache = ClassPolyCache(args.cache) if args.cache else None
    return get_engine(datum, pivot=args.pivot, max_nodes=args.limit_nodes, cache=cache)


def _parse_class_spec(datum, text: str):
    text = text.strip()
    if text.startswith("of "):
        return sigma_class_of(parse_element(datum, text[3:]))
    kappa = None
    nu = None
    for token in text.split():
        if token.startswith("kappa=[") and token.endswith("]"):
            body = token[len("kappa=["):-1]
            kappa = [int(x) for x in body.split(",")] if body else []
        elif token.startswith("nu=[") and token.endswith("]"):
            body = token[len("nu=["):-1]
            nu = [Fraction(x) for x in body.split(",")] if body else []
        else:
            raise InputError(f"bad class spec token {token!r}")
    if kappa is None or nu is None:
        raise InputError("class spec needs kappa=[...] and nu=[...], or 'of ELEMENT'")
    if len(nu) != datum.rank:
        raise InputError(f"nu must have {datum.rank} coordinates")
    inv = ClassInvariant(datum.pi1_element(kappa), tuple(nu))
    return sigma_class_from_invariant(datum, inv)


def _emit(args, rows, fieldnames) -> str:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    return json.dumps(rows, sort_keys=True, indent=2) + "\n"


def _write(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_dim(dim):
    return "-inf" if dim == NEG_INFINITY else dim


# -- subcommands ----------------------------------------------------------------


def cmd_classes(args) -> int:
    datum = _build_datum(args)
    window = None if datum.pi1_is_finite() else args.kappa_window
    classes = enumerate_classes(datum, args.max_len, kappa_window=window)
    rows = [{
        "class_id": c.class_id,
        "min_length": c.min_length,
        "kappa": list(c.invariant.kappa.coords),
        "nu": [str(x) for x in c.invariant.newton],
        "straight": c.straight,
    } for c in classes]
    rows.sort(key=lambda r: (r["min_length"], r["class_id"]))
    if args.format == "csv":
        for r in rows:
            r["kappa"] = ";".join(str(x) for x in r["kappa"])
            r["nu"] = ";".join(r["nu"])
    _write(args, _emit(args, rows, ["class_id", "min_length", "kappa", "nu", "straight"]))
    return 0


def cmd_classpoly(args) -> int:
    datum = _build_datum(args)
    engine = _engine(args, datum)
    w = parse_element(datum, args.element)
    dec = engine.class_polynomials(w)
    rows = []
    for cid, poly in dec.items():
        cls = engine.class_info(cid)
        rows.append({
            "class_id": cid,
            "len_O": cls.min_length,
            "kappa": list(cls.invariant.kappa.coords),
            "nu": [str(x) for x in cls.invariant.newton],
            "deg_f": _fmt_dim(poly.degree()),
            "f": [list(p) for p in poly.to_pairs()],
            "f_str": str(poly),
        })
    rows.sort(key=lambda r: (r["len_O"], r["class_id"]))
    if args.format == "csv":
        for r in rows:
            r["kappa"] = ";".join(str(x) for x in r["kappa"])
            r["nu"] = ";".join(r["nu"])
            r["f"] = json.dumps(r["f"])
    _write(args, _emit(args, rows,
                       ["class_id", "len_O", "kappa", "nu", "deg_f", "f", "f_str"]))
    return 0


def cmd_adlv(args) -> int:
    datum = _build_datum(args)
    engine = _engine(args, datum)
    w = parse_element(datum, args.element)
    b = _parse_class_spec(datum, args.class_spec)
    report = dim_adlv(w, b, engine=engine)
    doc = report.to_json_dict()
    if args.format == "csv":
        rows = []
        base = {"w": doc["w"],
                "kappa": ";".join(str(x) for x in doc["b"]["kappa"]),
                "nu": ";".join(doc["b"]["nu"]),
                "nonempty": doc["nonempty"], "dim": doc["dim"]}
        if doc["terms"]:
            for t in doc["terms"]:
                rows.append({**base, "class_id": t["class_id"], "len_O": t["len_O"],
                             "deg_f": t["deg_f"], "f": json.dumps(t["f"])})
        else:
            rows.append({**base, "class_id": "", "len_O": "", "deg_f": "", "f": ""})
        _write(args, _emit(args, rows,
                           ["w", "kappa", "nu", "nonempty", "dim",
                            "class_id", "len_O", "deg_f", "f"]))
    else:
        _write(args, json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return 0


def cmd_scan(args) -> int:
    datum = _build_datum(args)
    engine = _engine(args, datum)
    window = None if datum.pi1_is_finite() else args.kappa_window
    bs = sigma_classes_window(datum, args.nu_bound, kappa_window=window)
    kappas = datum.pi1_all() if datum.pi1_is_finite() \
        else datum.pi1_window(args.kappa_window)
    elements = []
    for kappa in kappas:
        for level in coset_elements_by_length(datum, kappa, args.max_len):
            elements.extend(level)

    def evaluate(w):
        out = []
        for b in bs:
            rep = dim_adlv(w, b, engine=engine, with_methods=False)
            out.append({
                "w": encode_element(w),
                "len_w": length(w),
                "kappa": list(b.invariant.kappa.coords),
                "nu": [str(x) for x in b.invariant.newton],
                "nonempty": rep.nonempty,
                "dim": _fmt_dim(rep.dim),
            })
        return out

    rows = []
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            for chunk in pool.map(evaluate, elements):
                rows.extend(chunk)
    else:
        for w in elements:
            rows.extend(evaluate(w))
    rows.sort(key=lambda r: (r["len_w"], r["w"], r["kappa"], r["nu"]))
    if args.format == "csv":
        for r in rows:
            r["kappa"] = ";".join(str(x) for x in r["kappa"])
            r["nu"] = ";".join(r["nu"])
    _write(args, _emit(args, rows, ["w", "len_w", "kappa", "nu", "nonempty", "dim"]))
    return 0


def cmd_svg(args) -> int:
    from .diagram import render_alcove_diagram

    datum = _build_datum(args)
    engine = _engine(args, datum)
    b = _parse_class_spec(datum, args.class_spec)
    out = args.output or f"adlv_{datum.name}_len{args.max_len}.svg"
    fig_path, csv_path = render_alcove_diagram(datum, b, args.max_len, out, engine=engine)
    sys.stdout.write(f"{fig_path}\n{csv_path}\n")
    return 0


def cmd_selfcheck(args) -> int:
    from .selfcheck import run_acceptance

    only = args.only.split(",") if args.only else None
    results = run_acceptance(only=only, quick=args.quick, max_len=args.acceptance_len)
    return 0 if all(r.passed for r in results) else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="classpoly",
        description="Class polynomials of extended affine Weyl groups and "
                    "affine Deligne-Lusztig nonemptiness/dimension.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="conjugacy classes in a length window")
    _common_flags(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("classpoly", help="class polynomial decomposition of an element")
    _common_flags(p)
    p.add_argument("element", help="element, e.g. 's0 s1 s0' or 't[1,0] s1'")
    p.set_defaults(func=cmd_classpoly)

    p = sub.add_parser("adlv", help="nonemptiness/dimension report for (w, b)")
    _common_flags(p)
    p.add_argument("element")
    p.add_argument("class_spec", help="'kappa=[...] nu=[...]' or 'of ELEMENT'")
    p.set_defaults(func=cmd_adlv)

    p = sub.add_parser("scan", help="bulk verdict table over all (w, b) in bounds")
    _common_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("svg", help="rank-2 alcove diagram with annotations")
    _common_flags(p)
    p.add_argument("class_spec")
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("selfcheck", help="run the acceptance criteria")
    _common_flags(p)
    p.add_argument("--only", help="comma-separated criteria, e.g. C1,C5")
    p.add_argument("--quick", action="store_true", help="reduced smoke windows")
    p.add_argument("--acceptance-len", type=int, default=None,
                   help="override the acceptance length window")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PreconditionError, IntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())
