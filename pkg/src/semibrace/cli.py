"""Command-line front end.

Verbs: validate, analyze, series, ideals, construct, quotient, ybe,
enumerate, search.  Exit codes: 0 ok, 1 parse error, 2 semantic or
validation error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions, enumeration, groups, report
from .core import FiniteLeftSemibrace, validate
from .errors import (
    CapExceeded,
    FileFormatError,
    SemibraceError,
    ValidationError,
)
from .fileformat import (
    StructureFile,
    dump_json,
    load_structure,
    save_structure,
    structure_of,
    structure_to_json,
)
from .subsets import annihilator, generalized_socle, socle


def _resolve(path: str, fixture_dir: str | None) -> Path:
    p = Path(path)
    if p.exists() or fixture_dir is None:
        return p
    alt = Path(fixture_dir) / path
    return alt if alt.exists() else p


def _load(path, fixture_dir) -> FiniteLeftSemibrace:
    sf = load_structure(_resolve(path, fixture_dir))
    return validate(sf.add, sf.mul, sf.labels)


def _emit(args, obj, text_renderer=None):
    if getattr(args, "text", False) and text_renderer is not None:
        print(text_renderer(obj), end="")
    else:
        print(dump_json(obj), end="")


def _render_analysis(rep: dict) -> str:
    lines = []
    sizes = rep["sizes"]
    lines.append(f"order {sizes['B']}  |G| = {sizes['G']}  |E| = {sizes['E']}")
    lines.append(f"G = {{{', '.join(rep['G'])}}}")
    lines.append(f"E = {{{', '.join(rep['E'])}}}")
    e_id = rep["E_is_ideal"]
    if e_id["is_ideal"]:
        lines.append("E is an ideal")
    else:
        w = e_id["witness"]
        lines.append(
            "E is not an ideal: "
            f"{w['conjugator']} ∘ {w['idempotent']} ∘ {w['conjugator']}⁻ = "
            f"{w['conjugate']} ∉ E"
        )
    soc = rep["socles"]
    lines.append(f"Soc = {{{', '.join(soc['soc'])}}}")
    if soc["zoc"] is not None:
        lines.append(f"Zoc = {{{', '.join(soc['zoc'])}}}")
    lines.append(f"Ann = {{{', '.join(soc['ann'])}}}")
    prof = rep["profile"]
    for key in (
        "right_nilpotent",
        "left_nilpotent",
        "strongly_nilpotent",
        "nilpotent",
        "right_nil",
        "left_nil",
        "has_z_series",
        "mul_group_nilpotent",
        "add_group_G_nilpotent",
    ):
        lines.append(f"{key}: {prof[key]}")
    for kind, data in rep["series"].items():
        sep = " ⊇ " if kind in ("right", "left", "strong") else " ⊆ "
        chain = sep.join("{" + ", ".join(t) + "}" for t in data["terms"])
        lines.append(f"{kind}: {chain}")
    ybe_rec = rep["ybe"]
    lines.append(
        "ybe: braid_ok={braid_ok} bijective={bijective} involutive={involutive} "
        "idempotent={idempotent} period={period} s_idempotent={s_idempotent}".format(
            **ybe_rec
        )
    )
    for w in rep["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def cmd_validate(args) -> int:
    B = _load(args.path, args.fixture_dir)
    print(
        f"valid left semi-brace of order {B.n}: "
        f"|G| = {len(B.G)}, |E| = {len(B.E)}"
    )
    return 0


def cmd_analyze(args) -> int:
    B = _load(args.path, args.fixture_dir)
    _emit(args, report.analysis_report(B), _render_analysis)
    return 0


def cmd_series(args) -> int:
    B = _load(args.path, args.fixture_dir)
    _emit(args, report.series_section(B))
    return 0


def cmd_ideals(args) -> int:
    B = _load(args.path, args.fixture_dir)
    _emit(args, report.ideals_report(B, cap=args.cap))
    return 0


def cmd_ybe(args) -> int:
    B = _load(args.path, args.fixture_dir)
    rep = report.analysis_report(B)["ybe"]
    _emit(args, rep)
    return 0


def _subset_from_spec(B: FiniteLeftSemibrace, spec: str):
    named = {
        "E": lambda: B.E,
        "G": lambda: B.G,
        "Soc": lambda: socle(B),
        "Zoc": lambda: generalized_socle(B),
        "Ann": lambda: annihilator(B),
        "zero": lambda: frozenset({0}),
        "B": lambda: frozenset(B.elements()),
    }
    if spec in named:
        return named[spec]()
    if spec.startswith("labels:"):
        wanted = spec[len("labels:"):].split(";")
        index = {B.label(a): a for a in B.elements()}
        missing = [w for w in wanted if w not in index]
        if missing:
            raise SemibraceError(f"unknown labels: {missing}")
        return frozenset(index[w] for w in wanted)
    raise SemibraceError(f"cannot parse subset spec: {spec!r}")


def cmd_quotient(args) -> int:
    B = _load(args.path, args.fixture_dir)
    ideal = _subset_from_spec(B, args.by)
    Q, proj = constructions.quotient(B, ideal)
    sf = structure_of(Q)
    if args.out:
        save_structure(sf, args.out)
        print(f"wrote quotient of order {Q.n} to {args.out}")
    else:
        print(structure_to_json(sf), end="")
    sys.stderr.write(
        "projection: "
        + ", ".join(f"{B.label(a)}→{Q.label(proj[a])}" for a in B.elements())
        + "\n"
    )
    return 0


def _parse_label_map(g: groups.GroupTable, text: str) -> list[tuple[int, int]]:
    index = {lbl: i for i, lbl in enumerate(g.labels or map(str, range(g.order)))}
    pairs = []
    for chunk in text.split(","):
        src, _, dst = chunk.partition(":")
        src, dst = src.strip(), dst.strip()
        if src not in index or dst not in index:
            raise SemibraceError(f"unknown element label in {chunk!r}")
        pairs.append((index[src], index[dst]))
    return pairs


def _extend_endomorphism(g: groups.GroupTable, pairs) -> list[int]:
    """Complete generator images to a full endomorphism by closure."""
    phi = {0: 0}
    frontier = [0]
    for src, dst in pairs:
        phi[src] = dst
        frontier.append(src)
    changed = True
    while changed:
        changed = False
        for a in list(phi):
            for b in list(phi):
                ab = g.mul(a, b)
                img = g.mul(phi[a], phi[b])
                if ab not in phi:
                    phi[ab] = img
                    changed = True
                elif phi[ab] != img:
                    raise SemibraceError("given images are not consistent")
    if len(phi) != g.order:
        raise SemibraceError("given elements do not generate the group")
    return [phi[a] for a in range(g.order)]


def cmd_construct(args) -> int:
    recipe = args.recipe
    if recipe == "trivial":
        g = groups.named_group(args.group)
        labels = args.labels.split(",") if args.labels else None
        B = constructions.trivial_semibrace(g, labels)
    elif recipe == "skewbrace":
        g = groups.named_group(args.group)
        labels = args.labels.split(",") if args.labels else None
        B = constructions.skew_brace_embed(g.table, g.table, labels or g.labels)
    elif recipe == "endo":
        g = groups.named_group(args.group)
        phi = _extend_endomorphism(g, _parse_label_map(g, args.phi))
        B = constructions.from_idempotent_endomorphism(g, phi)
    elif recipe == "direct":
        x = _load(args.left, args.fixture_dir)
        y = _load(args.right, args.fixture_dir)
        B = constructions.direct_product(x, y)
    elif recipe == "semidirect":
        normal = _load(args.normal, args.fixture_dir)
        actor = _load(args.actor, args.fixture_dir)
        action = _parse_action(normal, actor, args.action)
        B = constructions.semidirect_product(normal, actor, action)
    else:
        raise SemibraceError(f"unknown recipe {recipe!r}")
    sf = structure_of(B)
    if args.out:
        save_structure(sf, args.out)
    else:
        print(structure_to_json(sf), end="")
    print(
        f"constructed order {B.n}: |G| = {len(B.G)}, |E| = {len(B.E)}",
        file=sys.stderr,
    )
    return 0


def _parse_action(normal, actor, text: str):
    """Parse 'actorlabel=conj:(x)' (or '=id') assignments on actor
    generators and extend multiplicatively to the whole actor."""
    ident = tuple(range(normal.n))
    actor_index = {actor.label(a): a for a in actor.elements()}
    normal_index = {normal.label(a): a for a in normal.elements()}
    assigned = {0: ident}
    for chunk in text.split(";"):
        lbl, _, spec = chunk.partition("=")
        lbl, spec = lbl.strip(), spec.strip()
        if lbl not in actor_index:
            raise SemibraceError(f"unknown actor element {lbl!r}")
        if spec == "id":
            perm = ident
        elif spec.startswith("conj:"):
            c = spec[len("conj:"):]
            if c not in normal_index:
                raise SemibraceError(f"unknown normal element {c!r}")
            ci = normal_index[c]
            perm = tuple(
                normal.mul[normal.mul[ci][x]][normal.inv[ci]]
                for x in normal.elements()
            )
        else:
            raise SemibraceError(f"cannot parse action spec {spec!r}")
        assigned[actor_index[lbl]] = perm
    changed = True
    while changed:
        changed = False
        for a in list(assigned):
            for b in list(assigned):
                ab = actor.mul[a][b]
                comp = tuple(assigned[a][assigned[b][x]] for x in range(normal.n))
                if ab not in assigned:
                    assigned[ab] = comp
                    changed = True
                elif assigned[ab] != comp:
                    raise SemibraceError("action images are not consistent")
    if len(assigned) != actor.n:
        raise SemibraceError("action given on a non-generating set")
    return tuple(assigned[a] for a in range(actor.n))


def cmd_enumerate(args) -> int:
    result = enumeration.enumerate_semibraces(
        args.order, family_only=args.family_only, cap=args.cap
    )
    payload = {
        "order": result.order,
        "complete": result.complete,
        "count": len(result.structures),
        "structures": [
            {
                "add": [list(r) for r in B.add],
                "mul": [list(r) for r in B.mul],
                "G_size": len(B.G),
                "E_size": len(B.E),
            }
            for B in result.structures
        ],
    }
    _emit(args, payload)
    return 0


def cmd_search(args) -> int:
    rep = enumeration.search_counterexample(args.question, args.max_order, cap=args.cap)
    payload = {
        "question": rep.question,
        "orders_searched": list(rep.orders_searched),
        "exhaustive": rep.exhaustive,
        "witness": None
        if rep.witness is None
        else {
            "add": [list(r) for r in rep.witness.add],
            "mul": [list(r) for r in rep.witness.mul],
        },
    }
    _emit(args, payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="semibrace",
        description="analyze finite left semi-braces given as Cayley tables",
    )
    p.add_argument("--fixture-dir", default=None, help="directory for bare file names")
    sub = p.add_subparsers(dest="command", required=True)

    def add_io(sp):
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON output (default)")
        fmt.add_argument("--text", action="store_true", help="human-readable output")

    sp = sub.add_parser("validate", help="check the semi-brace axioms")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_validate)

    for name, fn in (
        ("analyze", cmd_analyze),
        ("series", cmd_series),
        ("ybe", cmd_ybe),
    ):
        sp = sub.add_parser(name)
        sp.add_argument("path")
        add_io(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("ideals", help="named-subset verdicts and the ideal list")
    sp.add_argument("path")
    sp.add_argument("--cap", type=int, default=10)
    add_io(sp)
    sp.set_defaults(func=cmd_ideals)

    sp = sub.add_parser("quotient")
    sp.add_argument("path")
    sp.add_argument("--by", required=True, help="E|G|Soc|Zoc|Ann|zero|B|labels:a;b")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("construct")
    sp.add_argument("recipe", choices=["trivial", "endo", "semidirect", "direct", "skewbrace"])
    sp.add_argument("--group", help="group name for trivial/endo/skewbrace")
    sp.add_argument("--phi", help="endo generator images, e.g. '(12):(12),(123):id'")
    sp.add_argument("--left", help="left factor file for direct")
    sp.add_argument("--right", help="right factor file for direct")
    sp.add_argument("--normal", help="acted-on factor file for semidirect")
    sp.add_argument("--actor", help="acting factor file for semidirect")
    sp.add_argument("--action", help="e.g. 't=conj:(23)' on actor generators")
    sp.add_argument("--labels", help="comma-separated element labels override")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("enumerate")
    sp.add_argument("order", type=int)
    sp.add_argument("--family-only", action="store_true")
    sp.add_argument("--cap", type=int, default=enumeration.RAW_CAP)
    add_io(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("search")
    sp.add_argument("question", choices=list(enumeration.QUESTIONS))
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--cap", type=int, default=enumeration.RAW_CAP)
    add_io(sp)
    sp.set_defaults(func=cmd_search)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, SemibraceError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
