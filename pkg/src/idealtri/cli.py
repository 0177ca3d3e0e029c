"""Command-line front end: analysis pipelines emitting JSON reports.

Single inputs produce one JSON document; a census file (one signature
per line, '#' comments) produces one JSON line per input line, in input
order.  Exit codes: 0 success, 2 malformed input, 3 I/O failure,
4 inapplicable request, 1 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cohomology import bound_certificate, check_identities, classify_rank2, cocycle_space, rank2_subgroups, Cocycle
from .isosig import MalformedSignature, decode, encode_canonical, read_census
from .lst import detect_degree3, maximal_extension, pairwise_intersection
from .monodromy import MonodromyError, bundle_certificate, word_analysis
from .moves import enumerate_moves
from .search import PREDICATES, bounded_move_search, enumerate_complexes
from .surfaces import canonical_surface, euler_characteristic
from .triangulation import InvalidTriangulation, anatomy_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MALFORMED = 2
EXIT_IO = 3
EXIT_INAPPLICABLE = 4


class CliError(Exception):
    def __init__(self, code, kind, message):
        super().__init__(message)
        self.code = code
        self.kind = kind


def _emit(payload, out):
    json.dump(payload, out, sort_keys=True, separators=(",", ":"))
    out.write("\n")


def _load(sig):
    try:
        return decode(sig)
    except MalformedSignature as exc:
        raise CliError(EXIT_MALFORMED, "malformed-signature", str(exc))
    except InvalidTriangulation as exc:
        raise CliError(EXIT_MALFORMED, "invalid-triangulation", str(exc))


def _inputs(value):
    """A literal signature, or a census file of signatures."""
    import os
    if os.path.exists(value):
        try:
            with open(value, "r", encoding="utf-8") as fh:
                return read_census(fh.read()), True
        except OSError as exc:
            raise CliError(EXIT_IO, "io", str(exc))
    return [value], False


def _report_decode(sig):
    tri = _load(sig)
    return {
        "signature": sig,
        "tetrahedra": tri.n,
        "closed": tri.is_closed,
        "orientable": tri.is_orientable,
        "vertices": len(tri.vertex_classes),
        "edges": len(tri.edge_classes),
        "links": [{"euler": v.link_euler, "orientable": v.link_orientable,
                   "torus": v.is_torus_link} for v in tri.vertex_classes],
        "gluings": [[list(tri.gluings[t][f]) if tri.gluings[t][f] else None
                     for f in range(4)] for t in range(tri.n)],
    }


def _report_encode(sig):
    tri = _load(sig)
    return {"signature": sig, "canonical": encode_canonical(tri)}


def _report_analyze(sig):
    tri = _load(sig)
    report = anatomy_report(tri)
    report["signature"] = sig
    report["orientable"] = tri.is_orientable
    report["links"] = [{"euler": v.link_euler, "torus": v.is_torus_link}
                       for v in tri.vertex_classes]
    report["degree_histogram"] = {str(k): v for k, v
                                  in report["degree_histogram"].items()}
    return report


def _report_cohomology(sig):
    tri = _load(sig)
    basis = cocycle_space(tri)
    return {
        "signature": sig,
        "tetrahedra": tri.n,
        "rank": basis.rank,
        "basis": [sorted(c.odd_edges()) for c in basis.vectors],
    }


def _report_certificate(sig):
    tri = _load(sig)
    if not tri.is_closed:
        raise CliError(EXIT_INAPPLICABLE, "inapplicable",
                       "certificates need a closed triangulation")
    basis = cocycle_space(tri)
    cert = bound_certificate(tri)
    report = {
        "signature": sig,
        "tetrahedra": tri.n,
        "rank": basis.rank,
        "certificate_found": cert is not None,
    }
    if cert is not None:
        rc = cert.colouring
        chis = cert.chi
        identities = check_identities(rc, *chis)
        report.update({
            "subgroup": [sorted(Cocycle(tri, m).odd_edges())
                         for m in cert.subgroup],
            "surfaces": [canonical_surface(tri, p).coordinate_vector()
                         for p in rc.phi],
            "chi": list(chis),
            "sum_neg_chi": cert.sum_neg_chi,
            "tetrahedra_even": cert.even_count_check,
            "n_qtt": rc.counts["qtt"], "n_qq": rc.counts["qq"],
            "n_tt": rc.counts["tt"], "n_empty": rc.counts["empty"],
            "n_qqq": rc.counts["qqq"],
            "e0even": rc.e0,
            "e_histogram": {str(k): v for k, v in rc.e0_histogram.items()},
            "identities_hold": all(
                v["holds"] for v in identities.values()
                if isinstance(v, dict) and "holds" in v),
            "orientation_types": list(cert.orientation_types),
        })
    else:
        # report identity checks over every rank-2 subgroup anyway
        subgroup_reports = []
        for sg in rank2_subgroups(basis):
            rc = classify_rank2(tri, Cocycle(tri, sg[0]), Cocycle(tri, sg[1]))
            chis = [euler_characteristic(canonical_surface(tri, p))
                    for p in rc.phi]
            identities = check_identities(rc, *chis)
            subgroup_reports.append(all(
                v["holds"] for v in identities.values()
                if isinstance(v, dict) and "holds" in v))
        report["subgroups_checked"] = len(subgroup_reports)
        report["identities_hold"] = all(subgroup_reports)
    return report


def _report_monodromy(word):
    try:
        analysis = word_analysis(word)
        bc = bundle_certificate(word)
    except MonodromyError as exc:
        raise CliError(EXIT_MALFORMED, "bad-word", str(exc))
    report = {
        "word": word,
        "trace": analysis.trace,
        "mod2_order": analysis.mod2_order,
        "cover_degree": bc.cover_degree,
        "covered_word": bc.covered_word,
        "tetrahedra": bc.tetrahedra,
        "signature": encode_canonical(bc.bundle.tri),
        "certificate_found": bc.found,
        "convention": "letters layer positionally; closure takes the "
                      "lexicographically least admissible signature",
    }
    if bc.found:
        report.update({
            "sum_neg_chi": bc.sum_neg_chi,
            "chi": list(bc.certificate.chi),
            "horizontal_quads": list(bc.horizontal_counts),
        })
    return report


def _report_lst(sig):
    tri = _load(sig)
    certs, failures = detect_degree3(tri)
    maximal = [maximal_extension(c, tri) for c in certs]
    intersections = []
    for i in range(len(maximal)):
        for j in range(i + 1, len(maximal)):
            kind, detail = pairwise_intersection(maximal[i], maximal[j], tri)
            intersections.append({"pair": [i, j], "kind": kind,
                                  "shared": detail})
    return {
        "signature": sig,
        "degree3_edges": [e.index for e in tri.edge_classes if e.degree == 3],
        "certificates": [{
            "edge": c.edge, "core": c.core, "tets": list(c.tets),
            "params": list(c.params), "word": c.word, "maximal": c.maximal,
            "boundary_edges": [list(b) for b in c.boundary_edges],
        } for c in maximal],
        "failures": [{"edge": f.edge, "reason": f.reason} for f in failures],
        "intersections": intersections,
    }


def _report_moves(sig):
    tri = _load(sig)
    sites = enumerate_moves(tri)
    return {
        "signature": sig,
        "sites": [{"kind": s.kind, "index": s.index, "axis": s.axis,
                   "tets": list(s.tets)} for s in sites],
    }


def _report_enumerate(n, filter_name):
    if filter_name not in PREDICATES:
        raise CliError(EXIT_USAGE, "unknown-filter",
                       f"unknown filter {filter_name!r}; "
                       f"choose from {sorted(PREDICATES)}")
    predicate = PREDICATES[filter_name]
    boundary = 2 if filter_name == "degree3-lst-context" else 0
    found = enumerate_complexes(n, predicate, boundary_faces=boundary)
    return {
        "tetrahedra": n,
        "filter": filter_name,
        "boundary_faces": boundary,
        "count": len(found),
        "signatures": sorted(found),
    }


def _report_minsearch(sig, cap, depth):
    tri = _load(sig)
    result = bounded_move_search(tri, cap, depth)
    return {
        "signature": sig,
        "start_tetrahedra": tri.n,
        "cap": cap,
        "depth": depth,
        "reachable": len(result.reachable),
        "min_tetrahedra": result.min_tetrahedra,
        "smaller_admissible": list(result.smaller_admissible),
        "truncated": result.truncated,
    }


def build_parser():
    parser = argparse.ArgumentParser(
        prog="idealtri",
        description="ideal triangulations: anatomy, GF(2) cohomology, "
                    "canonical surfaces, complexity certificates")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    for name, needs in [("decode", "input"), ("encode", "input"),
                        ("analyze", "input"), ("cohomology", "input"),
                        ("certificate", "input"), ("lst", "input"),
                        ("moves", "input")]:
        p = sub.add_parser(name)
        p.add_argument(needs, help="isomorphism signature or census file")

    p = sub.add_parser("monodromy")
    p.add_argument("--word", required=True, help="positive word over R, L")

    p = sub.add_parser("enumerate")
    p.add_argument("--tets", type=int, required=True)
    p.add_argument("--filter", default="all", dest="filter_name")

    p = sub.add_parser("minsearch")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=3)
    p.add_argument("--depth", type=int, default=6)
    return parser


_SINGLE = {
    "decode": _report_decode,
    "encode": _report_encode,
    "analyze": _report_analyze,
    "cohomology": _report_cohomology,
    "certificate": _report_certificate,
    "lst": _report_lst,
    "moves": _report_moves,
}


def run(argv, out=None):
    """Entry point; returns the exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command is None:
        parser.print_usage(out)
        return EXIT_USAGE
    try:
        if args.command in _SINGLE:
            sigs, batch = _inputs(args.input)
            reports = [_SINGLE[args.command](s) for s in sigs]
            if batch:
                for r in reports:
                    _emit(r, out)
            else:
                _emit(reports[0], out)
        elif args.command == "monodromy":
            _emit(_report_monodromy(args.word), out)
        elif args.command == "enumerate":
            _emit(_report_enumerate(args.tets, args.filter_name), out)
        elif args.command == "minsearch":
            _emit(_report_minsearch(args.input, args.cap, args.depth), out)
        return EXIT_OK
    except CliError as exc:
        _emit({"error": {"kind": exc.kind, "message": str(exc)}}, out)
        return exc.code
    except ValueError as exc:
        _emit({"error": {"kind": "invalid-input", "message": str(exc)}}, out)
        return EXIT_MALFORMED


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
