"""Command line interface: case files, reports, batch tables.

Case file schema (JSON object):
  name: string
  vertices: integer vertex count
  edges: array of [u, v, weight]
  symmetry: {vertex_perm: array, order: int,
             kind: "periodic" | "strong_inversion", lift_sign: 1 | -1}
  positive_crossings: optional int
  sigma: optional int (overrides the computed signature)
  bounds: optional object with BoundsInput fields

Exit codes: 0 computed (any verdict), 2 input error, 3 theorem hypothesis
unmet (e.g. the lattice is not positive definite). Obstruction verdicts are
data, not exit statuses.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .bounds import BoundsInput, BoundsReport, aggregate
from .checkerboard import (CheckerboardGraph, SymmetrySpec, gl_lattice,
                           induced_isometry, is_automorphism, knot_signature)
from .embedsearch import (ObstructionReport, donaldson_obstruction,
                          enumerate_embeddings, orbit_classes)
from .gsignature import gsig_involution, gsig_periodic
from .lattice import GramLattice, is_positive_definite, signature

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3


class CaseError(Exception):
    """Input validation failure with a machine-readable code."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code

    def __str__(self):
        return f"{self.code}: {self.args[0]}"


class HypothesisError(Exception):
    """A theorem hypothesis is not met; the computation does not apply."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code

    def __str__(self):
        return f"{self.code}: {self.args[0]}"


@dataclass(frozen=True)
class KnotCase:
    name: str
    graph: CheckerboardGraph
    symmetry: SymmetrySpec
    positive_crossings: Optional[int] = None
    sigma_K: Optional[int] = None
    bounds_extras: Optional[BoundsInput] = None

    def sigma(self) -> Optional[int]:
        if self.sigma_K is not None:
            return self.sigma_K
        if self.positive_crossings is not None:
            return knot_signature(self.graph, self.positive_crossings)
        return None


_BOUNDS_FIELDS = ("period_n", "sigma_K", "sigma_quotient", "g4top_quotient",
                  "linking_lambda", "gsig", "equivariant_unknotting_moves",
                  "g4_K", "genus_upper")


def parse_case(text: str) -> KnotCase:
    """Parse and fully validate one case document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CaseError("SCHEMA", f"not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise CaseError("SCHEMA", "top level must be an object")
    for key in ("name", "vertices", "edges", "symmetry"):
        if key not in doc:
            raise CaseError("SCHEMA", f"missing required field '{key}'")
    name = doc["name"]
    if not isinstance(name, str):
        raise CaseError("SCHEMA", "'name' must be a string")
    try:
        edges = [tuple(e) for e in doc["edges"]]
        for u, v, w in edges:
            if u == v:
                raise CaseError("LOOP_EDGE",
                                f"loop edge at vertex {u} not allowed")
        graph = CheckerboardGraph(doc["vertices"], edges, name=name)
    except CaseError:
        raise
    except (TypeError, ValueError) as e:
        raise CaseError("SCHEMA", f"bad graph: {e}") from e
    sym = doc["symmetry"]
    if not isinstance(sym, dict):
        raise CaseError("SCHEMA", "'symmetry' must be an object")
    try:
        spec = SymmetrySpec(sym["vertex_perm"], sym["order"],
                            sym.get("kind", "strong_inversion"),
                            sym.get("lift_sign", 1))
    except KeyError as e:
        raise CaseError("SCHEMA", f"symmetry missing field {e}") from e
    except (TypeError, ValueError) as e:
        raise CaseError("SCHEMA", f"bad symmetry: {e}") from e
    if not is_automorphism(graph, spec.vertex_perm):
        raise CaseError("NOT_AUTOMORPHISM",
                        "vertex_perm does not preserve the weighted edges")
    pc = doc.get("positive_crossings")
    sig = doc.get("sigma")
    if pc is not None and sig is not None:
        if knot_signature(graph, pc) != sig:
            raise CaseError("SIGMA_MISMATCH",
                            "supplied sigma disagrees with the "
                            "Gordon-Litherland signature formula")
    extras = None
    if "bounds" in doc:
        b = doc["bounds"]
        if not isinstance(b, dict):
            raise CaseError("SCHEMA", "'bounds' must be an object")
        unknown = set(b) - set(_BOUNDS_FIELDS)
        if unknown:
            raise CaseError("SCHEMA", f"unknown bounds fields: {sorted(unknown)}")
        extras = BoundsInput(**b)
    return KnotCase(name=name, graph=graph, symmetry=spec,
                    positive_crossings=pc, sigma_K=sig, bounds_extras=extras)


def serialize_case(case: KnotCase) -> str:
    doc = {
        "name": case.name,
        "vertices": case.graph.vertex_count,
        "edges": [list(e) for e in case.graph.edges],
        "symmetry": {
            "vertex_perm": list(case.symmetry.vertex_perm),
            "order": case.symmetry.order,
            "kind": case.symmetry.kind,
            "lift_sign": case.symmetry.lift_sign,
        },
    }
    if case.positive_crossings is not None:
        doc["positive_crossings"] = case.positive_crossings
    if case.sigma_K is not None:
        doc["sigma"] = case.sigma_K
    if case.bounds_extras is not None:
        b = {f: getattr(case.bounds_extras, f) for f in _BOUNDS_FIELDS
             if getattr(case.bounds_extras, f) is not None}
        doc["bounds"] = b
    return json.dumps(doc, indent=2)


def _rational(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f}"


def obstruction_to_dict(rep: ObstructionReport) -> dict:
    return {
        "k": rep.k,
        "class_count": rep.class_count,
        "obstructed": rep.obstructed,
        "conclusion": rep.conclusion,
        "per_class": [
            {
                "embedding": [list(r) for r in E.matrix],
                "delta": None if d is None else
                {"perm": list(d.perm), "signs": list(d.signs)},
            }
            for E, d in rep.per_class
        ],
    }


def bounds_to_dict(rep: BoundsReport) -> dict:
    return {
        "lower_bounds": [{"name": b.name, "value": _rational(b.value),
                          "ceiling": b.ceiling} for b in rep.lower_bounds],
        "upper_bounds": [{"name": n, "value": v} for n, v in rep.upper_bounds],
        "best_lower": rep.best_lower,
        "best_upper": rep.best_upper,
        "consistent": rep.consistent,
    }


def _obstruct_case(case: KnotCase, drop_vertex: Optional[int],
                   sign_mode: str, threads: int) -> dict:
    G = gl_lattice(case.graph, drop_vertex)
    if not is_positive_definite(G):
        raise HypothesisError(
            "NOT_DEFINITE",
            "Gordon-Litherland lattice is not positive definite; the "
            "embedding theorem does not apply")
    sigma = case.sigma()
    if sigma is None:
        raise CaseError("MISSING_SIGMA",
                        "need 'sigma' or 'positive_crossings' to set k")
    R = induced_isometry(case.graph, case.symmetry, drop_vertex)
    rep = donaldson_obstruction(G, R, sigma, case.symmetry.order,
                                sign_mode=sign_mode, threads=threads)
    out = obstruction_to_dict(rep)
    out["name"] = case.name
    out["sigma"] = sigma
    return out


def _print_obstruction(doc: dict, out):
    print(f"case: {doc['name']}", file=out)
    print(f"sigma(K) = {doc['sigma']},  k = {doc['k']}", file=out)
    print(f"embedding classes: {doc['class_count']}", file=out)
    for idx, cls in enumerate(doc["per_class"]):
        status = "delta found" if cls["delta"] is not None else "no delta"
        print(f"  class {idx}: {status}", file=out)
    print(f"obstructed: {doc['obstructed']}", file=out)
    print(doc["conclusion"], file=out)


def _print_bounds(doc: dict, out):
    for b in doc["lower_bounds"]:
        print(f"lower  {b['name']:24s} {b['value']:>8s}  "
              f"(>= {b['ceiling']})", file=out)
    for u in doc["upper_bounds"]:
        print(f"upper  {u['name']:24s} {u['value']:>8d}", file=out)
    print(f"best lower: {doc['best_lower']}   best upper: "
          f"{doc['best_upper']}   consistent: {doc['consistent']}", file=out)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise CaseError("IO", f"cannot read {path}: {e}") from e


def cmd_obstruct(args, out) -> int:
    case = parse_case(_read(args.file))
    doc = _obstruct_case(case, args.drop_vertex, args.sign_mode, args.threads)
    if args.json:
        print(json.dumps(doc, indent=2), file=out)
    else:
        _print_obstruction(doc, out)
    return EXIT_OK


def cmd_gsig(args, out) -> int:
    if args.period is not None:
        if args.sigma is None or args.quotient_sigma is None:
            raise CaseError("SCHEMA",
                            "--period needs --sigma and --quotient-sigma")
        val = gsig_periodic(args.period, args.sigma, args.quotient_sigma)
        doc = {"gsig": _rational(val), "method": "periodic-quotient-formula"}
    elif args.gram is not None:
        raw = json.loads(_read(args.gram))
        if not isinstance(raw, dict) or "gram" not in raw or "involution" not in raw:
            raise CaseError("SCHEMA",
                            "--gram file needs 'gram' and 'involution' matrices")
        try:
            rep = gsig_involution(GramLattice(raw["gram"]), raw["involution"])
        except ValueError as e:
            raise HypothesisError("NOT_INVOLUTION", str(e)) from e
        doc = {"gsig": _rational(rep.gsig), "sigma_plus": rep.sigma_plus,
               "sigma_minus": rep.sigma_minus, "dims": list(rep.dims),
               "method": "eigenspace-restriction"}
    elif args.file is not None:
        case = parse_case(_read(args.file))
        if case.symmetry.order != 2:
            raise HypothesisError("NOT_INVOLUTION",
                                  "eigenspace path needs an order-2 symmetry")
        G = gl_lattice(case.graph, args.drop_vertex)
        R = induced_isometry(case.graph, case.symmetry, args.drop_vertex)
        try:
            rep = gsig_involution(G, R)
        except ValueError as e:
            raise HypothesisError("NOT_INVOLUTION", str(e)) from e
        doc = {"name": case.name, "gsig": _rational(rep.gsig),
               "sigma_plus": rep.sigma_plus, "sigma_minus": rep.sigma_minus,
               "dims": list(rep.dims), "method": "eigenspace-restriction"}
    else:
        raise CaseError("SCHEMA",
                        "give a case file, --gram, or --period flags")
    if args.json:
        print(json.dumps(doc, indent=2), file=out)
    else:
        for k, v in doc.items():
            print(f"{k}: {v}", file=out)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    inp = BoundsInput(period_n=args.period, sigma_K=args.sigma,
                      sigma_quotient=args.quotient_sigma,
                      g4top_quotient=args.quotient_g4top,
                      linking_lambda=args.linking,
                      gsig=None if args.gsig is None else Fraction(args.gsig),
                      equivariant_unknotting_moves=args.unknotting_moves,
                      g4_K=args.g4, genus_upper=args.genus_upper)
    doc = bounds_to_dict(aggregate(inp))
    if args.json:
        print(json.dumps(doc, indent=2), file=out)
    else:
        _print_bounds(doc, out)
    return EXIT_OK


def cmd_embed(args, out) -> int:
    raw = json.loads(_read(args.gram))
    gram = raw["gram"] if isinstance(raw, dict) else raw
    G = GramLattice(gram)
    if not is_positive_definite(G):
        raise HypothesisError("NOT_DEFINITE",
                              "form is not positive definite")
    embs = enumerate_embeddings(G, args.k, threads=args.threads)
    classes = orbit_classes(embs)
    doc = {
        "k": args.k,
        "embedding_count": len(embs),
        "class_count": len(classes),
        "classes": [{"representative": [list(r) for r in rep.matrix],
                     "orbit_size": size} for rep, size in classes],
    }
    if args.json:
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(f"embeddings: {doc['embedding_count']}   "
              f"classes: {doc['class_count']}", file=out)
        for idx, cls in enumerate(doc["classes"]):
            print(f"  class {idx} (orbit size {cls['orbit_size']}):", file=out)
            for row in cls["representative"]:
                print(f"    {row}", file=out)
    return EXIT_OK


def _batch_row(path: Path, sign_mode: str) -> dict:
    try:
        case = parse_case(path.read_text())
        doc = _obstruct_case(case, None, sign_mode, 1)
        binp = case.bounds_extras or BoundsInput()
        if binp.sigma_K is None:
            binp = BoundsInput(**{**{f: getattr(binp, f) for f in _BOUNDS_FIELDS},
                                  "sigma_K": doc["sigma"]})
        brep = aggregate(binp, obstruction=_rebuild_obstruction(doc))
        return {
            "name": case.name,
            "file": path.name,
            "sigma": doc["sigma"],
            "k": doc["k"],
            "classes": doc["class_count"],
            "obstructed": doc["obstructed"],
            "best_lower": brep.best_lower,
            "best_upper": brep.best_upper,
        }
    except (CaseError, HypothesisError) as e:
        return {"name": path.stem, "file": path.name, "error": str(e)}


def _rebuild_obstruction(doc: dict) -> ObstructionReport:
    return ObstructionReport(k=doc["k"], class_count=doc["class_count"],
                             per_class=(), obstructed=doc["obstructed"],
                             conclusion=doc["conclusion"])


def cmd_batch(args, out) -> int:
    root = Path(args.directory)
    if not root.is_dir():
        raise CaseError("IO", f"not a directory: {args.directory}")
    files = sorted(root.glob("*.json"))
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(lambda p: _batch_row(p, args.sign_mode),
                                 files))
    else:
        rows = [_batch_row(p, args.sign_mode) for p in files]
    rows.sort(key=lambda r: r["name"])
    if args.json:
        for row in rows:
            print(json.dumps(row, sort_keys=True), file=out)
        return EXIT_OK
    header = (f"{'name':16s} {'sigma':>5s} {'k':>3s} {'classes':>7s} "
              f"{'obstructed':>10s} {'lower':>5s} {'upper':>5s}")
    print(header, file=out)
    for row in rows:
        if "error" in row:
            print(f"{row['name']:16s} ERROR {row['error']}", file=out)
        else:
            print(f"{row['name']:16s} {row['sigma']:>5d} {row['k']:>3d} "
                  f"{row['classes']:>7d} {str(row['obstructed']):>10s} "
                  f"{str(row['best_lower']):>5s} {str(row['best_upper']):>5s}",
                  file=out)
    return EXIT_OK


def _default_threads() -> int:
    env = os.environ.get("EQKNOT_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="eqknot",
        description="Equivariant 4-genus obstructions and bounds for "
                    "symmetric knots, in exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true",
                        help="emit the JSON report")
        sp.add_argument("--threads", type=int, default=_default_threads(),
                        help="worker threads (or EQKNOT_THREADS)")

    ob = sub.add_parser("obstruct", help="equivariant embedding obstruction")
    ob.add_argument("file")
    ob.add_argument("--sign-mode", choices=("strict", "both"),
                    default="strict")
    ob.add_argument("--drop-vertex", type=int, default=None,
                    dest="drop_vertex")
    common(ob)
    ob.set_defaults(func=cmd_obstruct)

    gs = sub.add_parser("gsig", help="g-signature")
    gs.add_argument("file", nargs="?", default=None)
    gs.add_argument("--gram", default=None,
                    help="JSON file with 'gram' and 'involution' matrices")
    gs.add_argument("--period", type=int, default=None)
    gs.add_argument("--sigma", type=int, default=None)
    gs.add_argument("--quotient-sigma", type=int, default=None,
                    dest="quotient_sigma")
    gs.add_argument("--drop-vertex", type=int, default=None,
                    dest="drop_vertex")
    common(gs)
    gs.set_defaults(func=cmd_gsig)

    bd = sub.add_parser("bounds", help="aggregate genus bounds")
    bd.add_argument("--period", type=int, default=None)
    bd.add_argument("--sigma", type=int, default=None)
    bd.add_argument("--quotient-sigma", type=int, default=None,
                    dest="quotient_sigma")
    bd.add_argument("--quotient-g4top", type=int, default=None,
                    dest="quotient_g4top")
    bd.add_argument("--lambda", type=int, default=None, dest="linking")
    bd.add_argument("--gsig", default=None,
                    help="g-signature value (integer or fraction)")
    bd.add_argument("--unknotting-moves", type=int, default=None,
                    dest="unknotting_moves")
    bd.add_argument("--g4", type=int, default=None)
    bd.add_argument("--genus-upper", type=int, default=None,
                    dest="genus_upper")
    common(bd)
    bd.set_defaults(func=cmd_bounds)

    em = sub.add_parser("embed", help="enumerate lattice embeddings")
    em.add_argument("--gram", required=True,
                    help="JSON file with the Gram matrix")
    em.add_argument("--k", type=int, required=True)
    common(em)
    em.set_defaults(func=cmd_embed)

    bt = sub.add_parser("batch", help="process a directory of case files")
    bt.add_argument("directory")
    bt.add_argument("--sign-mode", choices=("strict", "both"),
                    default="strict")
    common(bt)
    bt.set_defaults(func=cmd_batch)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CaseError as e:
        print(f"error {e}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesisError as e:
        print(f"error {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    raise SystemExit(main())
