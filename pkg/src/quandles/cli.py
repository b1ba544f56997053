"""Command-line interface: one multiplexer over the library's operations.

Exit codes: 0 success, 1 input or usage error, 2 property-verification
failure.  ``--json`` output is canonical (sorted keys, compact separators),
so re-serializing a parsed output reproduces it byte for byte, and results
never depend on ``--threads``.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import constructions, knots, regularity, symmetry
from .groups import (FiniteGroup, GroupAutomorphism, GroupError,
                     parse_generator_lines)
from .quandle import FiniteQuandle, InvalidQuandleError, QuandleError

INPUT_ERRORS = (QuandleError, GroupError, knots.ParseError, knots.InconsistentArcs,
                OSError, ValueError, KeyError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_quandle(path: str) -> FiniteQuandle:
    return FiniteQuandle.from_json(_read_text(path))


def _load_group(args) -> FiniteGroup:
    if getattr(args, "group", None):
        data = json.loads(_read_text(args.group))
        return FiniteGroup.from_dict(data)
    if getattr(args, "gens", None):
        perms = parse_generator_lines(_read_text(args.gens))
        return FiniteGroup.from_permutations(perms)
    raise UsageError("this family needs --group FILE or --gens FILE")


def _load_phi(path: str, group: FiniteGroup) -> GroupAutomorphism:
    data = json.loads(_read_text(path))
    mapping = data["map"] if isinstance(data, dict) else data
    return GroupAutomorphism(group, mapping)


def _parse_indices(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def _closure_cap(default: int, args=None) -> int:
    if args is not None and getattr(args, "cap", None):
        return args.cap
    env = os.environ.get("QUANDLE_CAP")
    return int(env) if env else default


def _word_json(word: symmetry.SignedWord) -> list:
    return [[q, s] for q, s in word.letters]


# ---------------------------------------------------------------------------
# subcommand implementations; each returns the process exit code

def _cmd_make(args, out, err) -> int:
    fam = args.family
    rng = random.Random(args.seed)
    if fam == "trivial":
        q = constructions.trivial(_require(args, "n"))
    elif fam == "dihedral":
        q = constructions.dihedral(_require(args, "n"))
    elif fam == "alexander":
        a = args.a
        if a is None:
            raise UsageError("alexander needs --a")
        try:
            a = int(a)
        except ValueError:
            a = json.loads(a)
        q = constructions.alexander(_require(args, "p"), args.n or 1, a)
    elif fam == "power_cocycle":
        q = constructions.power_cocycle(_require(args, "p"), _require(args, "n"))
    elif fam == "unipotent_class":
        q = constructions.unipotent_class_quandle(_require(args, "p"))
    elif fam == "conj":
        q = constructions.conjugation(_load_group(args))
    elif fam == "conj_class":
        g = _load_group(args)
        if args.element is None:
            raise UsageError("conj_class needs --element INDEX")
        q = constructions.conj_class(g, args.element)
    elif fam == "phi_space":
        g = _load_group(args)
        if not args.phi or args.subgroup is None:
            raise UsageError("phi_space needs --phi FILE and --subgroup INDICES")
        q = constructions.phi_space(g, _load_phi(args.phi, g),
                                    _parse_indices(args.subgroup), rng=rng)
    elif fam == "vedernikov":
        g = _load_group(args)
        if not args.phi:
            raise UsageError("vedernikov needs --phi FILE")
        q = constructions.vedernikov(g, _load_phi(args.phi, g))
    elif fam == "cocycle":
        if not args.abelian or not args.cocycle:
            raise UsageError("cocycle needs --abelian FILE and --cocycle FILE")
        a_grp = FiniteGroup.from_dict(json.loads(_read_text(args.abelian)))
        f = json.loads(_read_text(args.cocycle))
        q = constructions.cocycle_extension(args.x_size or len(f), a_grp, f)
    else:
        raise UsageError(f"unknown family {fam!r}; choices: {', '.join(constructions.FAMILIES)}")
    print(q.to_json(), file=out)
    return 0


def _require(args, name: str) -> int:
    val = getattr(args, name, None)
    if val is None:
        raise UsageError(f"{args.family} needs --{name}")
    return val


def _cmd_check(args, out, err) -> int:
    try:
        q = _load_quandle(args.quandle)
    except InvalidQuandleError as exc:
        if args.json:
            print(_canonical({"valid": False,
                              "violations": [{"axiom": v.axiom,
                                              "witness": list(v.witness)}
                                             for v in exc.violations],
                              "truncated": exc.truncated}), file=out)
        else:
            print("invalid", file=out)
            for v in exc.violations:
                print(f"  {v}", file=out)
        return 1
    if args.json:
        print(_canonical({"valid": True, "size": q.size}), file=out)
    else:
        print(f"valid (size {q.size})", file=out)
    return 0


def _cmd_orbits(args, out, err) -> int:
    q = _load_quandle(args.quandle)
    deco = symmetry.orbits(q)
    if args.json:
        print(_canonical({
            "count": deco.count,
            "orbit_id": list(deco.orbit_id),
            "orbits": [list(o) for o in deco.orbits],
            "basepoints": list(deco.basepoints),
            "witness_words": [_word_json(w) for w in deco.witness_words],
        }), file=out)
    else:
        print(f"{deco.count} orbit(s)", file=out)
        for b, o in zip(deco.basepoints, deco.orbits):
            print(f"  basepoint {b}: {list(o)}", file=out)
    return 0


def _cmd_group(args, out, err, which: str) -> int:
    q = _load_quandle(args.quandle)
    cap = _closure_cap(symmetry.DEFAULT_CAP, args)
    grp = symmetry.inn(q, cap=cap) if which == "inn" else symmetry.tr(q, cap=cap)
    if args.json:
        print(_canonical({"order": grp.order,
                          "domain_size": grp.domain_size,
                          "generators": [list(g) for g in grp.generators],
                          "transitive": grp.is_transitive()}), file=out)
    else:
        print(f"{which}: order {grp.order} on {grp.domain_size} points "
              f"({len(grp.generators)} generators)", file=out)
    return 0


def _cmd_connected(args, out, err) -> int:
    q = _load_quandle(args.quandle)
    rep = symmetry.is_connected(q)
    if args.json:
        print(_canonical({
            "connected": rep.connected,
            "separating_pair": list(rep.separating_pair) if rep.separating_pair else None,
            "forward_saturation_agrees": rep.forward_saturation_agrees,
            "witness_words": ([_word_json(w) for w in rep.witness_words]
                              if rep.witness_words else None),
        }), file=out)
    else:
        print(f"connected: {str(rep.connected).lower()}", file=out)
        if rep.separating_pair:
            print(f"  separated: {rep.separating_pair}", file=out)
    return 0 if rep.forward_saturation_agrees else 2


def _cmd_aut(args, out, err) -> int:
    q = _load_quandle(args.quandle)
    grp = symmetry.aut(q)
    homogeneous = symmetry.is_homogeneous(q)
    if args.json:
        print(_canonical({"order": grp.order, "homogeneous": homogeneous}), file=out)
    else:
        print(f"aut: order {grp.order}, homogeneous: {str(homogeneous).lower()}",
              file=out)
    return 0


def _cmd_iso(args, out, err) -> int:
    q1 = _load_quandle(args.quandle)
    q2 = _load_quandle(args.other)
    f = symmetry.iso_search(q1, q2)
    if args.json:
        print(_canonical({"isomorphic": f is not None,
                          "mapping": list(f) if f else None}), file=out)
    else:
        print("isomorphic" if f else "not isomorphic", file=out)
        if f:
            print(f"  mapping: {list(f)}", file=out)
    return 0


def _cmd_realize(args, out, err) -> int:
    q = _load_quandle(args.quandle)
    cap = _closure_cap(symmetry.REALIZE_CAP, args)
    real = symmetry.coset_realization(q, args.basepoint, cap=cap)
    if args.json:
        print(_canonical({
            "basepoint": real.basepoint,
            "group": real.group.to_dict(),
            "phi": list(real.phi.mapping),
            "stabilizer": list(real.stabilizer),
            "coset_reps": list(real.cosets.reps),
            "pi": list(real.pi),
            "orbit": list(real.orbit),
            "checks": dict(sorted(real.checks.items())),
            "ok": real.ok,
        }), file=out)
    else:
        print(f"orbit of {real.basepoint}: size {len(real.orbit)}", file=out)
        print(f"transvection group order {real.group.order}, "
              f"stabilizer size {len(real.stabilizer)}", file=out)
        for k, v in sorted(real.checks.items()):
            print(f"  {k}: {str(v).lower()}", file=out)
    return 0 if real.ok else 2


def _cmd_sbar(args, out, err) -> int:
    q = _load_quandle(args.quandle)
    cap = _closure_cap(symmetry.DEFAULT_CAP, args)
    rep = symmetry.sbar_hom(q, args.basepoint, cap=cap)
    if args.json:
        print(_canonical({
            "basepoint": rep.basepoint,
            "group_order": rep.group.order,
            "mapping": list(rep.mapping),
            "fibers": [list(f) for f in rep.fibers],
            "injective": rep.injective,
            "is_homomorphism": rep.is_homomorphism,
        }), file=out)
    else:
        print(f"sbar at {rep.basepoint}: homomorphism "
              f"{str(rep.is_homomorphism).lower()}, injective "
              f"{str(rep.injective).lower()}, {len(rep.fibers)} fiber(s)", file=out)
    return 0 if rep.ok else 2


def _cmd_report(args, out, err) -> int:
    q = _load_quandle(args.quandle)
    cap = _closure_cap(symmetry.REALIZE_CAP, args)
    rep = regularity.regularity_report(q, cap=cap)
    if args.json:
        print(_canonical(rep.to_dict()), file=out)
    else:
        flags = rep.flags()
        print(f"size {rep.size}", file=out)
        for name in regularity.CONDITION_NAMES:
            print(f"  {name}: {str(flags[name]).lower()}", file=out)
        for note in rep.notes:
            print(f"  note: {note}", file=out)
    return 0


def _cmd_survey(args, out, err) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise UsageError(f"{args.directory} is not a directory")
    corpus = []
    for path in sorted(directory.glob("*.json")):
        corpus.append((path.stem, FiniteQuandle.from_json(path.read_text())))
    cap = _closure_cap(symmetry.REALIZE_CAP, args)
    result = regularity.implication_survey(corpus, cap=cap)
    if args.json:
        print(_canonical(result.to_dict()), file=out)
    else:
        print(result.format_table(), file=out)
        observed = result.observed()
        if observed:
            print("implications with no counterexample: " + ", ".join(observed),
                  file=out)
    return 0


def _cmd_color(args, out, err) -> int:
    if bool(args.diagram) == bool(args.braid):
        raise UsageError("need exactly one of --diagram FILE or --braid WORD")
    if args.diagram:
        diagram = knots.parse_pd(_read_text(args.diagram))
    else:
        if args.strands is None:
            raise UsageError("--braid needs --strands")
        diagram = knots.parse_braid(args.braid, args.strands)
    q = _load_quandle(args.quandle)
    count = knots.count_colorings(diagram, q, by_orbit=args.by_orbit,
                                  threads=args.threads)
    if args.json:
        print(_canonical({
            "total": count.total,
            "by_orbit": list(count.by_orbit) if count.by_orbit else None,
            "arcs": diagram.arc_count,
            "crossings": len(diagram.crossings),
            "components": diagram.component_count,
        }), file=out)
    else:
        print(f"colorings: {count.total}", file=out)
        if count.by_orbit is not None:
            deco = symmetry.orbits(q)
            for b, c in zip(deco.basepoints, count.by_orbit):
                print(f"  within orbit of {b}: {c}", file=out)
    return 0


def _cmd_action(args, out, err) -> int:
    q = _load_quandle(args.quandle)
    data = json.loads(_read_text(args.action))
    set_size = data["set_size"]
    act = []
    for entry in data["act"]:
        if isinstance(entry, str):
            from .groups import parse_cycles
            act.append(parse_cycles(entry, domain_size=set_size))
        else:
            act.append(tuple(entry))
    action = symmetry.QuandleAction(q, set_size, act)
    cap = _closure_cap(symmetry.DEFAULT_CAP, args)
    opg = symmetry.op_group(action, cap=cap)
    trg = symmetry.tr_action_group(action, cap=cap)
    op_orbits = [sorted(o) for o in opg.orbits()]
    tr_orbits = [sorted(o) for o in trg.orbits()]
    if args.json:
        print(_canonical({
            "op_group_order": opg.order,
            "tr_group_order": trg.order,
            "op_orbits": op_orbits,
            "tr_orbits": tr_orbits,
            "orbits_agree": op_orbits == tr_orbits,
        }), file=out)
    else:
        print(f"op group order {opg.order}, orbits {op_orbits}", file=out)
        print(f"tr group order {trg.order}, orbits {tr_orbits}", file=out)
    return 0


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> _Parser:
    parser = _Parser(prog="quandles",
                     description="finite quandle toolkit: construct, analyze, color")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads for exhaustive sweeps (results identical)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for the sampled well-definedness checks")
    common.add_argument("--cap", type=int, default=None,
                        help="override the group-closure element cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make", parents=[common], help="construct a quandle family")
    p.add_argument("family")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--a", help="invertible scalar, or a JSON matrix")
    p.add_argument("--x-size", type=int, dest="x_size")
    p.add_argument("--group", help="group JSON file {'order','mul','labels'?}")
    p.add_argument("--gens", help="permutation generators, one cycle notation per line")
    p.add_argument("--phi", help="automorphism JSON file {'map': [...]} or bare list")
    p.add_argument("--subgroup", help="comma-separated element indices")
    p.add_argument("--element", type=int, help="class representative index")
    p.add_argument("--abelian", help="abelian coefficient group JSON file")
    p.add_argument("--cocycle", help="JSON table of coefficient indices")

    for name, help_text in [("check", "validate a quandle file"),
                            ("orbits", "inner orbit decomposition"),
                            ("inn", "inner automorphism group"),
                            ("tr", "transvection group"),
                            ("connected", "connectedness with certificate"),
                            ("aut", "full automorphism group (small carriers)"),
                            ("realize", "coset realization of an orbit"),
                            ("sbar", "symmetry-comparison homomorphism"),
                            ("report", "regularity condition report")]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("quandle", help="quandle JSON file, or - for stdin")
        if name in ("realize", "sbar"):
            p.add_argument("--basepoint", type=int, default=0)

    p = sub.add_parser("iso", parents=[common], help="isomorphism search")
    p.add_argument("quandle")
    p.add_argument("other")

    p = sub.add_parser("survey", parents=[common],
                       help="regularity flags across a directory of quandles")
    p.add_argument("directory")

    p = sub.add_parser("color", parents=[common], help="count quandle colorings")
    p.add_argument("--diagram", help="PD code file")
    p.add_argument("--braid", help="braid word, e.g. \"s1 s1 s1\"")
    p.add_argument("--strands", type=int)
    p.add_argument("--quandle", required=True)
    p.add_argument("--by-orbit", action="store_true", dest="by_orbit")

    p = sub.add_parser("action", parents=[common],
                       help="op- and tr-orbits of a quandle action on a set")
    p.add_argument("--quandle", required=True)
    p.add_argument("--action", required=True,
                   help="JSON file {'set_size': m, 'act': [permutations]}")
    return parser


_DISPATCH = {
    "make": _cmd_make,
    "check": _cmd_check,
    "orbits": _cmd_orbits,
    "inn": lambda a, o, e: _cmd_group(a, o, e, "inn"),
    "tr": lambda a, o, e: _cmd_group(a, o, e, "tr"),
    "connected": _cmd_connected,
    "aut": _cmd_aut,
    "iso": _cmd_iso,
    "realize": _cmd_realize,
    "sbar": _cmd_sbar,
    "report": _cmd_report,
    "survey": _cmd_survey,
    "color": _cmd_color,
    "action": _cmd_action,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help prints and exits
            return int(exc.code or 0)
        return _DISPATCH[args.command](args, out, err)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except json.JSONDecodeError as exc:
        print(f"input error: invalid JSON: {exc}", file=err)
        return 1
    except INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
