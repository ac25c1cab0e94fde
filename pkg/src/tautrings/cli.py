from __future__ import annotations

import argparse
import json
import os
import random
import signal
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import boundary, closedforms, correlators, jacobian, relationgen, stablegraphs, tautring
from .cache import CacheError, CacheFile
from .exactmath import GeneratorTable, GradedPolynomial, graded_quotient

__all__ = ["run", "main"]

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_CHECK_FAILED = 3


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _plain_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else _frac_str(x)


def _parse_ints(text: str) -> List[int]:
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


class _Output:
    def __init__(self, fmt: str) -> None:
        self.fmt = fmt

    def emit(self, payload: Dict[str, Any], plain: str, csv: Optional[str] = None) -> None:
        if self.fmt == "json":
            print(json.dumps(payload, sort_keys=True))
        elif self.fmt == "csv":
            print(csv if csv is not None else plain)
        else:
            print(plain)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"),
                        default="plain")
    common.add_argument("--cache", default=os.environ.get("TAUTRINGS_CACHE"),
                        help="path of the persistent value cache")
    common.add_argument("--no-cache", action="store_true",
                        help="ignore any cache file for this invocation")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized property commands")
    common.add_argument("--max-seconds", type=int, default=None,
                        help="abort with exit code 1 after this wall-clock budget")

    ap = argparse.ArgumentParser(
        prog="tautrings",
        parents=[common],
        description="Exact computations with tautological rings of moduli "
                    "of curves: psi-class intersection numbers, Hodge-"
                    "integral closed forms, FZ/stable-quotient relations, "
                    "graded ring checks, genus-0 boundary presentations, "
                    "stable graphs and Jacobian sl2 operators.")
    sub = ap.add_subparsers(dest="command", required=True,
                            parser_class=lambda **kw: argparse.ArgumentParser(
                                parents=[common], **kw))

    c = sub.add_parser("correlator", help="psi-class intersection number")
    c.add_argument("genus", type=int)
    c.add_argument("exponents", help="comma-separated psi exponents")

    h = sub.add_parser("hodge", help="Hodge-integral closed forms")
    h.add_argument("flavor", choices=("lambda-g", "lambda-pair"))
    h.add_argument("genus", type=int)
    h.add_argument("exponents", help="comma-separated psi exponents")

    lk = sub.add_parser("lambda-in-kappa", help="lambda classes in odd kappas")
    lk.add_argument("genus", type=int)

    e = sub.add_parser("euler", help="orbifold Euler characteristic")
    e.add_argument("genus", type=int)
    e.add_argument("markings", type=int)

    for name in ("fz", "sq"):
        f = sub.add_parser(name, help=f"{name.upper()} kappa relations")
        f.add_argument("genus", type=int)
        f.add_argument("max_degree", type=int)

    r = sub.add_parser("ring-dims", help="graded dimensions of the ring model")
    r.add_argument("genus", type=int)

    go = sub.add_parser("gorenstein", help="Gorenstein verification (exit 3 on failure)")
    go.add_argument("genus", type=int)

    k = sub.add_parser("keel", help="genus-0 boundary presentation dimensions")
    k.add_argument("markings", type=int)

    h2 = sub.add_parser("h2", help="rank of the second cohomology presentation")
    h2.add_argument("genus", type=int)
    h2.add_argument("markings", type=int)

    gr = sub.add_parser("graphs", help="stable graphs of type (g, n)")
    gr.add_argument("genus", type=int)
    gr.add_argument("markings", type=int)
    gr.add_argument("--list", action="store_true", help="emit the graphs too")

    ja = sub.add_parser("jac-apply", help="apply a Jacobian operator")
    ja.add_argument("operator", choices=("D", "e", "h", "h-raw"))
    ja.add_argument("genus", type=int)
    ja.add_argument("poly", help="polynomial as JSON (export format)")

    pd = sub.add_parser("presentation-dims",
                        help="graded quotient dims of a JSON presentation")
    pd.add_argument("presentation", help="JSON or @file with generators/relations")
    return ap


def _cmd_correlator(args, out: _Output) -> int:
    table = correlators.default_table
    cache = None
    if args.cache and not args.no_cache:
        cache = CacheFile(args.cache).load()
        cache.attach_correlators(table)
    value = correlators.psi_intersection(args.genus, _parse_ints(args.exponents),
                                         table)
    if cache is not None:
        cache.collect(table)
        cache.save()
    out.emit({"genus": args.genus, "exponents": _parse_ints(args.exponents),
              "value": _frac_str(value)},
             _plain_frac(value), _frac_str(value))
    return EXIT_OK


def _cmd_hodge(args, out: _Output) -> int:
    alpha = _parse_ints(args.exponents)
    if args.flavor == "lambda-g":
        value = closedforms.lambda_g_eval(args.genus, alpha)
    else:
        value = closedforms.lambda_gm1_lambda_g_eval(args.genus, alpha)
    out.emit({"flavor": args.flavor, "genus": args.genus, "alpha": alpha,
              "value": _frac_str(value)},
             _plain_frac(value), _frac_str(value))
    return EXIT_OK


def _cmd_lambda_in_kappa(args, out: _Output) -> int:
    lams = closedforms.lambda_from_kappa(args.genus, args.genus)
    payload = {"genus": args.genus,
               "lambda": [p.export() for p in lams]}
    plain = "\n".join(f"lambda_{i} = {p!r}" for i, p in enumerate(lams))
    out.emit(payload, plain)
    return EXIT_OK


def _cmd_euler(args, out: _Output) -> int:
    value = closedforms.euler_orbifold(args.genus, args.markings)
    out.emit({"genus": args.genus, "markings": args.markings,
              "value": _frac_str(value)},
             _plain_frac(value), _frac_str(value))
    return EXIT_OK


def _cmd_relations(args, out: _Output, source: str) -> int:
    if source == "FZ":
        rels = relationgen.fz_relation_set(args.genus, args.max_degree)
    else:
        rels = relationgen.sq_relation_set(args.genus, args.max_degree)
    payload = {"source": source, "genus": args.genus,
               "relations": [r.export() for r in rels]}
    plain = "\n".join(
        f"{r.source} r={r.r} index={list(r.index)}: {r.polynomial!r}" for r in rels)
    out.emit(payload, plain if rels else "(none)")
    return EXIT_OK


def _cmd_ring_dims(args, out: _Output) -> int:
    dims = tautring.ring_dims(args.genus)
    out.emit({"dims": dims}, " ".join(str(d) for d in dims),
             ",".join(str(d) for d in dims))
    return EXIT_OK


def _cmd_gorenstein(args, out: _Output) -> int:
    report = tautring.gorenstein_check(args.genus)
    ratio = (closedforms.hyperelliptic_coeff(args.genus)
             if args.genus >= 3 else None)
    payload = report.export()
    payload["socle_ratio"] = _frac_str(ratio) if ratio is not None else None
    plain = (f"dims {report.dims} pairing-ranks {report.pairing_ranks} "
             f"gorenstein {report.gorenstein}")
    out.emit(payload, plain)
    return EXIT_OK if report.gorenstein else EXIT_CHECK_FAILED


def _cmd_keel(args, out: _Output) -> int:
    dims = boundary.keel_ring_dims(args.markings)
    out.emit({"dims": dims}, " ".join(str(d) for d in dims),
             ",".join(str(d) for d in dims))
    return EXIT_OK


def _cmd_h2(args, out: _Output) -> int:
    pres = boundary.h2_presentation(args.genus, args.markings)
    rank = pres.rank()
    out.emit({"genus": args.genus, "markings": args.markings, "rank": rank,
              "generators": pres.names},
             str(rank), str(rank))
    return EXIT_OK


def _cmd_graphs(args, out: _Output) -> int:
    graphs = stablegraphs.enumerate_graphs(args.genus, args.markings)
    payload: Dict[str, Any] = {"genus": args.genus, "markings": args.markings,
                               "count": len(graphs)}
    if args.list:
        payload["graphs"] = [g.export() for g in graphs]
        plain = "\n".join(repr(g) for g in graphs)
    else:
        plain = str(len(graphs))
    out.emit(payload, plain, str(len(graphs)))
    return EXIT_OK


def _parse_jac_poly(text: str) -> jacobian.JacPolynomial:
    data = json.loads(text)
    acc = jacobian.JacPolynomial()
    for term in data:
        num, _, den = term["coeff"].partition("/")
        coeff = Fraction(int(num), int(den or 1))
        mono = jacobian.jac_monomial(term.get("psi_power", 0),
                                     term.get("factors", []))
        acc = acc + mono * coeff
    return acc


def _cmd_jac_apply(args, out: _Output) -> int:
    ctx = jacobian.JacContext(args.genus)
    poly = _parse_jac_poly(args.poly)
    if args.operator == "D":
        res = jacobian.apply_D(poly, ctx)
    elif args.operator == "e":
        res = jacobian.normalize(jacobian.apply_e(poly), ctx)
    elif args.operator == "h":
        res = jacobian.apply_h(poly, ctx)
    else:
        res = jacobian.apply_h_raw(poly, ctx)
    out.emit({"operator": args.operator, "genus": args.genus,
              "result": res.export()}, repr(res))
    return EXIT_OK


def _cmd_presentation_dims(args, out: _Output) -> int:
    text = args.presentation
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    gens = GeneratorTable([(n, int(d)) for n, d in data["generators"]])
    rels = []
    for rel in data.get("relations", []):
        terms = {}
        for expvec, coeff in rel:
            num, _, den = coeff.partition("/")
            terms[tuple(int(e) for e in expvec)] = Fraction(int(num), int(den or 1))
        rels.append(GradedPolynomial(gens, terms))
    report = graded_quotient(gens, rels, int(data["max_degree"]),
                             with_pairings=bool(data.get("pairings", False)))
    out.emit(report.export(), " ".join(str(d) for d in report.dims),
             ",".join(str(d) for d in report.dims))
    return EXIT_OK


_HANDLERS = {
    "correlator": _cmd_correlator,
    "hodge": _cmd_hodge,
    "lambda-in-kappa": _cmd_lambda_in_kappa,
    "euler": _cmd_euler,
    "ring-dims": _cmd_ring_dims,
    "gorenstein": _cmd_gorenstein,
    "keel": _cmd_keel,
    "h2": _cmd_h2,
    "graphs": _cmd_graphs,
    "jac-apply": _cmd_jac_apply,
    "presentation-dims": _cmd_presentation_dims,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.seed is not None:
        random.seed(args.seed)
    if args.max_seconds:
        def _timeout(signum, frame):
            raise TimeoutError(f"exceeded --max-seconds={args.max_seconds}")
        signal.signal(signal.SIGALRM, _timeout)
        signal.alarm(args.max_seconds)
    out = _Output(args.format)
    try:
        if args.command == "fz":
            return _cmd_relations(args, out, "FZ")
        if args.command == "sq":
            return _cmd_relations(args, out, "SQ")
        return _HANDLERS[args.command](args, out)
    except (ValueError, CacheError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TimeoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        if args.max_seconds:
            signal.alarm(0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
