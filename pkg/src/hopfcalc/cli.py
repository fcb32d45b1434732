"""Command line entry point: ``hopfcalc <command> ...``.

Exit status is 0 when every check passes, 1 when a mathematical check
fails and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io, presets, probe
from .algebra import AlgebraError, HopfAlgebra, check_hopf_axioms
from .bicrossed import bicrossed_product
from .double import canonical_double_actions, drinfeld_double
from .field import Field, FieldError
from .matched_pair import (MatchedPairError, canonical_pair, census_h4h4, check_matched_pair,
                           h4_trivial_pair)
from .morphism import MorphismError, are_isomorphic, automorphism_group, isomorphism_classes

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(args) -> Field:
    if getattr(args, "prime", None) is not None:
        return Field(args.prime)
    return Field.parse(args.field)


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    payload = io.dumps(doc)
    if getattr(args, "out", None):
        Path(args.out).write_text(payload)
    if args.json:
        sys.stdout.write(payload)
    else:
        for line in text_lines:
            print(line)


def load_algebra(source: str, F: Field, lam=None) -> HopfAlgebra:
    path = Path(source)
    if path.is_file():
        return io.algebra_from_json(io.load(path))
    try:
        return presets.by_name(source, F, lam)
    except KeyError as exc:
        raise UsageError(f"{source!r} is neither a file nor a preset ({exc.args[0]})") from None


def load_pair(source: str, F: Field):
    key = source.strip().lower()
    if key in ("trivial", "tensor", "h4xh4"):
        return h4_trivial_pair(F)
    for prefix in ("canonical:", "h16:"):
        if key.startswith(prefix):
            return canonical_pair(F, F(key[len(prefix):]))
    if key == "double":
        return canonical_double_actions(presets.sweedler_h4(F))
    path = Path(source)
    if path.is_file():
        return io.pair_from_json(io.load(path)).verify()
    raise UsageError(f"unknown matched pair {source!r}")


def parse_element(H: HopfAlgebra, text: str) -> np.ndarray:
    """Parse a linear combination of basis products such as ``1 - g`` or ``2x``."""
    F = H.field
    names = list(H.basis)
    try:
        terms = presets._parse_side(text, names, F)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    gens = list(range(H.dim))
    return presets.evaluate_side(H, gens, terms)


# -- commands ------------------------------------------------------------------------


def cmd_verify(args) -> int:
    F = _field(args)
    H = load_algebra(args.algebra, F, args.lam)
    rep = check_hopf_axioms(H)
    _emit(args, rep.to_dict(), rep.lines())
    return OK if rep.passed else FAILED


def cmd_probe(args) -> int:
    F = _field(args)
    H = load_algebra(args.algebra, F, args.lam)
    if args.what == "grouplikes":
        cands = [parse_element(H, c) for c in args.candidate] if args.candidate else None
        found = probe.group_likes(H, cands)
        doc = {"grouplikes": [H.format(v) for v in found]}
        lines = [H.format(v) for v in found]
    elif args.what == "primitives":
        g, h = parse_element(H, args.g), parse_element(H, args.h)
        space = probe.skew_primitives(H, g, h)
        doc = {"dim": space.dim, "basis": space.format()}
        lines = [f"dim {space.dim}"] + space.format()
    elif args.what == "integrals":
        space, unimodular = probe.integrals(H, args.side)
        doc = {"side": args.side, "basis": space.format(), "unimodular": unimodular}
        lines = [f"{args.side} integrals: " + ", ".join(space.format()), f"unimodular: {unimodular}"]
    else:
        ss = probe.is_semisimple(H)
        doc = {"semisimple": ss}
        lines = [f"semisimple: {ss}"]
    _emit(args, doc, lines)
    return OK


def cmd_mp(args) -> int:
    F = _field(args)
    if args.what == "check":
        if not args.file:
            raise UsageError("mp check needs a file")
        mp = io.pair_from_json(io.load(args.file))
        rep = check_matched_pair(mp)
        _emit(args, rep.to_dict(), rep.lines())
        return OK if rep.passed else FAILED
    if args.what == "canonical":
        if args.lam is None:
            raise UsageError("mp canonical needs --lambda")
        mp = canonical_pair(F, F(args.lam))
        doc = io.pair_to_json(mp)
        lines = ["left action:"] + mp.left.format_table() + ["right action:"] + mp.right.format_table()
        _emit(args, doc, lines)
        return OK
    if args.prime is None:
        raise UsageError("mp census needs --prime")
    census = census_h4h4(args.prime, progress=True)
    doc = census.to_dict()
    lines = [f"{k}: {v}" for k, v in doc.items()]
    _emit(args, doc, lines)
    return OK if census.to_dict()["count"] == args.prime + 1 else FAILED


def cmd_bicross(args) -> int:
    F = _field(args)
    mp = load_pair(args.pair, F)
    E = bicrossed_product(mp)
    rep = check_hopf_axioms(E)
    _emit(args, io.algebra_to_json(E), [f"dim {E.dim}, basis {' '.join(E.basis)}"] + rep.lines())
    return OK if rep.passed else FAILED


def cmd_iso(args) -> int:
    F = Field(args.prime)
    E, G = load_pair(args.first, F), load_pair(args.second, F)
    ok, witness = are_isomorphic(E, G, args.prime)
    doc = {"isomorphic": ok}
    if witness is not None:
        doc["witness_matrix"] = [[F.format(c) for c in row] for row in witness.assembled]
    lines = [f"isomorphic: {ok}"] + ([witness.describe()] if witness is not None else [])
    _emit(args, doc, lines)
    return OK


def cmd_aut(args) -> int:
    F = Field(args.prime)
    E = load_pair(args.pair, F)
    rep = automorphism_group(E, args.prime)
    doc = rep.to_dict()
    _emit(args, doc, [f"{k}: {v}" for k, v in doc.items()] + rep.notes)
    return OK if rep.relations_verified else FAILED


def cmd_double(args) -> int:
    F = _field(args)
    H = load_algebra(args.algebra, F, args.lam)
    D = drinfeld_double(H)
    rep = check_hopf_axioms(D)
    _emit(args, io.algebra_to_json(D), [f"dim {D.dim}, basis {' '.join(D.basis)}"] + rep.lines())
    return OK if rep.passed else FAILED


def reproduce(p: int, progress: bool = True) -> dict:
    """Census, bicrossed products, isomorphism classes, automorphisms and the double."""
    F = Field(p)

    def say(msg):
        if progress:
            print(msg, file=sys.stderr)

    say(f"census of matched pairs over F{p}")
    census = census_h4h4(p, progress=progress)
    labels = census.to_dict()["pairs"]
    names = {"trivial": "tensor"}
    names.update({f"lambda={v}": f"h16_{v}" for v in range(p)})
    products = {}
    axioms = True
    for label, mp in zip(labels, census.pairs):
        E = bicrossed_product(mp)
        axioms &= check_hopf_axioms(E).passed
        products[names.get(label, label)] = mp
    say("isomorphism classes")
    keys = list(products)
    classes = isomorphism_classes([products[k] for k in keys], p)
    say("automorphism groups")
    aut = {}
    for key in ("tensor", "h16_0", "h16_1"):
        if key in products:
            aut[key] = automorphism_group(products[key], p).to_dict()
    say("Drinfel'd double of H4")
    double_iso, _ = are_isomorphic(canonical_double_actions(presets.sweedler_h4(F)), canonical_pair(F, 1), p)
    return {
        "prime": p,
        "matched_pairs": len(census.pairs),
        "pairs": labels,
        "bicrossed_axioms_pass": bool(axioms),
        "iso_classes": len(classes),
        "classes": [[keys[i] for i in c] for c in classes],
        "aut_orders": {k: v["order"] for k, v in aut.items()},
        "aut": aut,
        "double_is_h16_1": double_iso,
    }


def cmd_reproduce(args) -> int:
    p = args.prime
    doc = reproduce(p)
    sys.stdout.write(io.dumps(doc))
    if args.out:
        Path(args.out).write_text(io.dumps(doc))
    expected = (
        doc["matched_pairs"] == p + 1 and doc["iso_classes"] == 3 and doc["bicrossed_axioms_pass"]
        and doc["aut_orders"] == {"tensor": 2 * (p - 1) ** 2, "h16_0": 2 * (p - 1) ** 2, "h16_1": 2 * (p - 1)}
        and doc["double_is_h16_1"]
        and all(a["relations_verified"] for a in doc["aut"].values())
    )
    return OK if expected else FAILED


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help="Q or Fp:<p> (default Q)")
    common.add_argument("--lambda", dest="lam", default=None, help="scalar for h16 presets and mp canonical")
    common.add_argument("--prime", type=int, default=None, help="odd prime; overrides --field")
    common.add_argument("--out", default=None, help="write the JSON result to this path")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")

    parser = argparse.ArgumentParser(prog="hopfcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check the Hopf algebra axioms")
    p.add_argument("algebra", help="preset (h4, kc2, k, h4xh4, h16:<lambda>, double) or JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("probe", parents=[common], help="group-likes, skew-primitives, integrals")
    p.add_argument("what", choices=["grouplikes", "primitives", "integrals", "semisimple"])
    p.add_argument("algebra")
    p.add_argument("--g", default="1", help="first anchor for primitives")
    p.add_argument("--h", default="1", help="second anchor for primitives")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--candidate", action="append", help="candidate group-like (repeatable; needed over Q)")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("mp", parents=[common], help="matched pairs")
    p.add_argument("what", choices=["check", "canonical", "census"])
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_mp)

    p = sub.add_parser("bicross", parents=[common], help="bicrossed product of a matched pair")
    p.add_argument("--pair", required=True, help="file, trivial, canonical:<lambda> or double")
    p.set_defaults(func=cmd_bicross)

    p = sub.add_parser("iso", parents=[common], help="decide isomorphism of two bicrossed products")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso, prime_default=True)

    p = sub.add_parser("aut", parents=[common], help="Hopf automorphism group of a bicrossed product")
    p.add_argument("pair")
    p.set_defaults(func=cmd_aut, prime_default=True)

    p = sub.add_parser("double", parents=[common], help="Drinfel'd double of a preset or file")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("reproduce", parents=[common], help="run the whole classification pipeline")
    p.set_defaults(func=cmd_reproduce, prime_default=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if getattr(args, "prime_default", False) and args.prime is None:
        args.prime = 5
    try:
        return args.func(args)
    except (UsageError, FieldError, io.FormatError, probe.ProbeError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (AlgebraError, MatchedPairError, MorphismError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return FAILED


def main() -> None:
    sys.exit(run())
