"""Command-line front end.

    cutsets construct {lemma1|theorem3|lemma3b|tree-chain} ...
    cutsets check {cutset|minimal} --family PATH
    cutsets extract {chain|antichain} --cutset PATH --source PATH
    cutsets analyze --family PATH
    cutsets survey --n N [--minimal-only] [--workers W]
    cutsets verify-paper [--max-n N]

Exit status: 0 success, 1 negative decision, 2 usage or capacity error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .constructions import (
    BlockPartition,
    TreeUniverse,
    leaf_cuts,
    lemma1_chain,
    lemma3b_antichain,
    theorem3_cutset,
    tree_chain_family,
)
from .cutset_analysis import (
    MAX_ANTICHAIN_SEARCH_GROUND,
    contains_maximal_antichain,
    find_avoiding_chain,
    is_cutset,
    is_nontrivial,
    largest_antichain_in_family,
    longest_chain_in_family,
    sole_meeting_members,
    theorem1_extraction,
)
from .errors import CutsetError, UsageError
from .lattice_core import (
    Chain,
    Family,
    elements,
    format_family,
    format_set,
    mask_of,
    read_family,
)
from .survey import MAX_SURVEY_GROUND, census

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text",
                        help="text records or one JSON document")

    parser = _Parser(prog="cutsets", description="Cutsets of finite Boolean lattices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    construct = sub.add_parser("construct", help="emit a constructed family")
    csub = construct.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = csub.add_parser("lemma1", parents=[common], help="maximal chain through a set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", dest="elements", default="-",
                   help="space- or comma-separated elements, '-' for the empty set")
    p = csub.add_parser("theorem3", parents=[common], help="{S : |S & {x,y}| = 1}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p = csub.add_parser("lemma3b", parents=[common], help="block-partition antichain")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p = csub.add_parser("tree-chain", parents=[common], help="chain of down-sets C_f")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)

    check = sub.add_parser("check", help="decide a property of a family")
    chsub = check.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for kind in ("cutset", "minimal"):
        p = chsub.add_parser(kind, parents=[common])
        p.add_argument("--family", required=True)

    extract = sub.add_parser("extract", help="chain/antichain inside a cutset")
    esub = extract.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for kind in ("chain", "antichain"):
        p = esub.add_parser(kind, parents=[common])
        p.add_argument("--cutset", required=True)
        p.add_argument("--source", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report on a family")
    p.add_argument("--family", required=True)

    p = sub.add_parser("survey", parents=[common], help=f"census of all families, n <= {MAX_SURVEY_GROUND}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--minimal-only", action="store_true",
                   help="run the maximal-antichain check on minimal cutsets only")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify-paper", parents=[common], help="run the acceptance suite")
    p.add_argument("--max-n", type=int, default=MAX_SURVEY_GROUND,
                   help="largest n for the census-based check")
    return parser


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _record(fields: dict) -> str:
    return " ".join(f"{k}={_fmt(v)}" for k, v in fields.items())


def _emit(args, out, *, record=None, family=None, extra=None):
    if args.format == "machine":
        doc = dict(extra or {})
        if record:
            doc.update(record)
        if family is not None:
            doc["n"] = family.n
            doc["sets"] = family.as_lists()
        out.write(json.dumps(doc, sort_keys=False) + "\n")
        return
    if family is not None:
        comments = [_record(record)] if record else []
        out.write(format_family(family, comments))
    elif record:
        out.write(_record(record) + "\n")


def _parse_elements(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "-"):
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad element list {text!r}") from None


def cmd_construct(args, out) -> int:
    if args.kind == "lemma1":
        a = mask_of(_parse_elements(args.elements), args.n)
        chain = lemma1_chain(a, args.n)
        _emit(args, out, record={"construction": "lemma1", "set": format_set(a)},
              family=chain.to_family())
    elif args.kind == "theorem3":
        fam = theorem3_cutset(args.x, args.y, args.n)
        _emit(args, out, record={"construction": "theorem3", "x": args.x, "y": args.y},
              family=fam)
    elif args.kind == "lemma3b":
        fam = lemma3b_antichain(BlockPartition(args.p, args.q, args.s))
        _emit(args, out, record={"construction": "lemma3b", "p": args.p, "q": args.q, "s": args.s},
              family=fam)
    else:
        chain = tree_chain_family(args.k, args.depth)
        universe = TreeUniverse(args.k, args.depth)
        collapsed = len(leaf_cuts(universe)) - len(chain)
        record = {"construction": "tree-chain", "k": args.k, "depth": args.depth,
                  "leaves": len(universe.leaves), "distinct": len(chain), "collapsed": collapsed}
        labels = [".".join(map(str, d)) or "e" for d in universe.partials]
        if args.format == "machine":
            _emit(args, out, record=record, family=chain.to_family(),
                  extra={"ground_labels": labels})
        else:
            out.write(f"# ground: {' '.join(f'{i}:{lab}' for i, lab in enumerate(labels))}\n")
            _emit(args, out, record=record, family=chain.to_family())
    return EXIT_OK


def cmd_check(args, out) -> int:
    fam = read_family(args.family)
    cut = is_cutset(fam)
    record = {"is_cutset": cut, "nontrivial": is_nontrivial(fam)}
    if cut:
        sole = set(sole_meeting_members(fam))
        redundant = [m for m in fam if m not in sole]
        record["minimal"] = not redundant
        if redundant:
            record["no_sole_chain"] = ";".join(format_set(m) for m in redundant)
    else:
        record["minimal"] = False
        record["avoiding_chain"] = ",".join(map(str, find_avoiding_chain(fam).perm))
    _emit(args, out, record=record)
    key = "is_cutset" if args.kind == "cutset" else "minimal"
    return EXIT_OK if record[key] else EXIT_NEGATIVE


def cmd_extract(args, out) -> int:
    cutset = read_family(args.cutset)
    source = read_family(args.source)
    if source.n != cutset.n:
        raise UsageError(f"ground mismatch: cutset n={cutset.n}, source n={source.n}")
    antichain = args.kind == "antichain"
    if not antichain:
        Chain.of(source.n, source.members)
    ext = theorem1_extraction(cutset, source.members, antichain=antichain)
    if ext is None:
        _emit(args, out, record={"group_size": 0}, family=Family(cutset.n, ()))
        return EXIT_OK
    record = {"direction": ext.direction.value, "alpha": ext.alpha,
              "group_size": len(ext.group), "collisions": ext.collisions}
    if antichain:
        record["dropped"] = ext.dropped
    _emit(args, out, record=record, family=Family.of(cutset.n, ext.image))
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    fam = read_family(args.family)
    cut = is_cutset(fam)
    record = {"n": fam.n, "size": len(fam), "is_cutset": cut, "nontrivial": is_nontrivial(fam),
              "minimal": cut and len(sole_meeting_members(fam)) == len(fam)}
    chain = longest_chain_in_family(fam)
    anti = largest_antichain_in_family(fam)
    record["longest_chain"] = len(chain)
    record["largest_antichain"] = len(anti)
    if fam.n <= MAX_ANTICHAIN_SEARCH_GROUND:
        found = contains_maximal_antichain(fam)
        record["maximal_antichain"] = "none" if found is None else ";".join(
            format_set(m) for m in found)
    else:
        record["maximal_antichain"] = "skipped"
    if args.format == "machine":
        record["longest_chain_sets"] = [elements(m) for m in chain.sets]
        record["largest_antichain_sets"] = anti.as_lists()
    else:
        record["chain"] = "<".join(format_set(m) for m in chain.sets)
        record["antichain"] = ";".join(format_set(m) for m in anti)
    _emit(args, out, record=record)
    return EXIT_OK


def cmd_survey(args, out) -> int:
    rep = census(args.n, minimal_only=args.minimal_only, workers=args.workers)
    record = rep.counts()
    record["elapsed"] = f"{rep.elapsed:.3f}"
    if args.format == "machine":
        record["dsw_failure_families"] = [f.as_lists() for f in rep.dsw_failures]
        record["elapsed"] = rep.elapsed
    _emit(args, out, record=record)
    if rep.dsw_failures:
        for fam in rep.dsw_failures:
            print(f"error: cutset without a maximal antichain: {fam}", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if not 0 <= args.max_n <= MAX_SURVEY_GROUND:
        raise UsageError(f"--max-n must lie in [0, {MAX_SURVEY_GROUND}]")
    results = acceptance.run_all(max_n=args.max_n)
    if args.format == "machine":
        out.write(json.dumps({"criteria": [r.__dict__ for r in results],
                              "passed": all(r.passed for r in results)}) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


COMMANDS = {
    "construct": cmd_construct,
    "check": cmd_check,
    "extract": cmd_extract,
    "analyze": cmd_analyze,
    "survey": cmd_survey,
    "verify-paper": cmd_verify,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (CutsetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
