"""Command line front end.

Exit status: 0 on success, 1 on usage or input errors, 2 when a theorem or
invariant violation is found.
"""
from __future__ import annotations

import argparse
import sys

from . import axioms as ax
from .classify import FLAG_NAMES, classify_subset
from .enumerate import enumerate_gts, enumerate_gts_sampled
from .errors import (
    DefinitionMismatch,
    GTLabError,
    ImplicationViolation,
    InvariantViolation,
    RouteMismatch,
)
from .harness import (
    PREDICATE_IDS,
    CampaignConfig,
    continuity_campaign,
    group_campaign,
    search_counterexample,
    summarize,
    verify_theorems,
)
from .lambda_ops import build
from .maps import PointMap
from .registry import THEOREM_IDS
from .sets import subset_from_labels
from .spacedoc import dumps, load_space

VIOLATIONS = (DefinitionMismatch, ImplicationViolation, InvariantViolation, RouteMismatch)
EMPTY_SPELLINGS = ("", "∅", "{}")


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_set(gs, text: str) -> int:
    text = text.strip()
    if text in EMPTY_SPELLINGS:
        return 0
    return subset_from_labels(gs, [p.strip() for p in text.split(",")])


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None


def fmt_set(gs, mask) -> str:
    return "{" + ",".join(gs.names(mask)) + "}"


def emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(dumps(payload))
    else:
        print("\n".join(lines))


# ---- families and operators ----

def named_families(L) -> dict:
    C, T = L.base, L.space
    full = T.full
    everything = range(1 << T.n)
    return {
        "mu-open": list(T.mu),
        "mu-closed": sorted(full ^ m for m in T.mu),
        "smu-open": list(C.s_mu_open),
        "smu-closed": list(C.s_mu_closed),
        "slambda-open": list(L.s_lambda_open),
        "slambda-closed": list(L.s_lambda_closed),
        "swedge-mu-sets": [A for A in everything if C.wedge[A] == A],
        "svee-mu-sets": [A for A in everything if C.vee[A] == A],
    }


def cmd_validate(args):
    T, _ = load_space(args.space)
    payload = {
        "valid": True,
        "name": T.name,
        "points": len(T.gs),
        "open_sets": len(T.mu),
        "contains_X": T.full in T.mu,
    }
    emit(args, payload, [
        f"valid generalized topology{' ' + T.name if T.name else ''}",
        f"  points: {len(T.gs)}  open sets: {len(T.mu)}  X open: {T.full in T.mu}",
    ])
    return 0


def cmd_families(args):
    T, _ = load_space(args.space)
    fams = named_families(build(T))
    wanted = args.family or list(fams)
    for name in wanted:
        if name not in fams:
            raise UsageError(f"unknown family {name!r}; choose from {', '.join(fams)}")
    payload = {name: sorted(T.gs.names(m) for m in fams[name]) for name in wanted}
    lines = []
    for name in wanted:
        lines.append(f"{name} ({len(fams[name])}):")
        ordered = sorted(fams[name], key=lambda m: (bin(m).count("1"), T.gs.names(m)))
        lines.append("  " + " ".join(fmt_set(T.gs, m) for m in ordered))
    emit(args, payload, lines)
    return 0


def _operator_table(L, op, level, kind=None):
    C = L.base
    if op == "closure":
        return {"mu": C.mu_closure, "smu": C.closure, "slambda": L.closure}[level]
    if op == "interior":
        return {"mu": C.mu_interior, "smu": C.interior, "slambda": L.interior}[level]
    if level == "mu":
        raise UsageError("kernels exist only at levels smu and slambda")
    src = C if level == "smu" else L
    return src.wedge if kind == "wedge" else src.vee


def cmd_operator(args):
    T, _ = load_space(args.space)
    L = build(T)
    A = parse_set(T.gs, args.set)
    kind = getattr(args, "kind", None)
    value = _operator_table(L, args.command, args.level, kind)[A]
    label = args.command if kind is None else f"{kind}-kernel"
    payload = {
        "operator": label,
        "level": args.level,
        "input": T.gs.names(A),
        "result": T.gs.names(value),
    }
    emit(args, payload, [f"{label}[{args.level}] {fmt_set(T.gs, A)} = {fmt_set(T.gs, value)}"])
    return 0


def cmd_classify(args):
    T, _ = load_space(args.space)
    L = build(T)
    subsets = [parse_set(T.gs, args.set)] if args.set is not None else range(1 << T.n)
    records = [classify_subset(L, A) for A in subsets]
    payload = {
        "records": [
            {"subset": T.gs.names(r.subset), "flags": dict(r.flags)} for r in records
        ]
    }
    lines = []
    for r in records:
        lines.append(fmt_set(T.gs, r.subset))
        for name in FLAG_NAMES:
            lines.append(f"  {name:<22} {'yes' if r.flags[name] else 'no'}")
    emit(args, payload, lines)
    return 0


def cmd_axioms(args):
    T, _ = load_space(args.space)
    report = ax.axiom_report(build(T))
    payload = {}
    lines = []
    for name, e in report.entries.items():
        entry = {
            "verdict": e.verdict,
            "routes": [{"route": rid, "holds": ok} for rid, ok in e.routes],
            "witness": e.witness.render(T.gs) if e.witness else None,
        }
        if e.note:
            entry["note"] = e.note
        payload[name] = entry
        shown = ""
        if e.witness:
            w = e.witness.render(T.gs)
            shown = "  witness " + " ".join(
                f"{k}={w[k]}" for k in ("subset", "points") if k in w
            )
        lines.append(f"{name:<10} {'yes' if e.verdict else 'no':<4}({len(e.routes)} routes agree){shown}")
    lines.append(f"note: {ax.COLLAPSE_NOTE}")
    emit(args, payload, lines)
    return 0


def cmd_homeo_group(args):
    T, _ = load_space(args.space)
    L = build(T)
    E = parse_set(T.gs, args.stabilize) if args.stabilize is not None else 0
    group = ax.homeo_group(L, E)
    whole = ax.homeo_group(L, 0)
    subgroup = ax.is_subgroup(group, whole)
    if not subgroup or whole.order % group.order:
        raise ImplicationViolation("stabilizer is a subgroup", T.gs.names(E))

    def as_map(p):
        return {T.gs.labels[i]: T.gs.labels[j] for i, j in enumerate(p)}

    payload = {
        "stabilized": T.gs.names(E),
        "order": group.order,
        "full_group_order": whole.order,
        "subgroup_of_full_group": subgroup,
        "elements": [as_map(p) for p in group.elements],
    }
    lines = [
        f"s-lambda-homeomorphisms fixing {fmt_set(T.gs, E)}: order {group.order} "
        f"(full group order {whole.order})",
    ]
    for p in group.elements:
        lines.append("  " + " ".join(f"{a}->{b}" for a, b in as_map(p).items()))
    emit(args, payload, lines)
    return 0


def _map_from(args, src, src_doc, tgt):
    if args.map:
        pairs = {}
        for item in args.map.split(","):
            if "=" not in item:
                raise UsageError(f"bad map entry {item!r}; expected point=image")
            a, b = item.split("=", 1)
            pairs[a.strip()] = b.strip()
        return PointMap.from_labels(src.gs, tgt.gs, pairs)
    blocks = list(src_doc.maps)
    if tgt.name is not None:
        named = [m for m in blocks if m.get("target_space") == tgt.name]
        blocks = named or blocks
    if not blocks:
        raise UsageError("no --map given and the source document has no map block")
    return PointMap.from_labels(src.gs, tgt.gs, blocks[0]["images"])


def cmd_continuity(args):
    src, src_doc = load_space(args.source)
    tgt, _ = load_space(args.target)
    L1 = build(src)
    f = _map_from(args, src, src_doc, tgt)
    profile = ax.continuity_profile(f, L1, tgt)
    payload = {"map": f.as_labels(), "continuity": profile}
    lines = [f"map: " + " ".join(f"{a}->{b}" for a, b in f.as_labels().items())]
    for kind, ok in profile.items():
        lines.append(f"  {kind + '-continuous':<26} {'yes' if ok else 'no'}")
    if f.is_bijective:
        homeo = ax.is_s_lambda_homeomorphism(f, L1, build(tgt))
        payload["slambda_homeomorphism"] = homeo
        lines.append(f"  {'slambda-homeomorphism':<26} {'yes' if homeo else 'no'}")
    if profile["slambda"] != (profile["sbeta_lambda"] and profile["sg_lambda"]):
        raise ImplicationViolation("T41", profile)
    emit(args, payload, lines)
    return 0


def _config(args, n_range):
    mode = "sampled" if args.sample is not None else "exhaustive"
    return CampaignConfig(
        n_range=n_range,
        mode=mode,
        count=args.sample or 0,
        seed=args.seed,
        theorems=tuple(getattr(args, "theorem", None) or ()) or None,
        jobs=getattr(args, "jobs", 1),
        keep_going=getattr(args, "keep_going", False),
    )


def cmd_enumerate(args):
    lo, hi = parse_range(args.n)
    counts = {}
    spaces = []
    for n in range(lo, hi + 1):
        if args.sample is not None:
            stream = enumerate_gts_sampled(n, args.sample, args.seed)
        else:
            stream = enumerate_gts(n)
        found = list(stream)
        counts[str(n)] = len(found)
        spaces.extend(found)
    payload = {"counts": counts}
    lines = [f"n={n}: {c} generalized topologies" for n, c in counts.items()]
    if not args.count_only:
        payload["spaces"] = [T.describe()["open_sets"] for T in spaces]
        lines += [
            " ".join(fmt_set(T.gs, m) for m in T.mu) for T in spaces
        ]
    emit(args, payload, lines)
    return 0


def cmd_verify(args):
    cfg = _config(args, parse_range(args.n))
    progress = None
    if args.progress:
        count = [0]

        def progress(T):
            count[0] += 1
            if count[0] % 100 == 0:
                print(f"... {count[0]} spaces", file=sys.stderr)

    verdicts = verify_theorems(cfg, progress)
    summary = summarize(verdicts)
    payload = {"campaign": summary}
    failed = summary["failed"]
    lines = [
        f"{summary['spaces']} spaces, {len(summary['theorems'])} theorems, "
        f"{summary['verdicts']} verdicts, {failed} failed"
    ]
    for f in summary["failures"][:20]:
        lines.append(f"FAIL {f['theorem']} on {f['space']}: {f['witness']}")
    if args.with_pairs:
        lo, hi = cfg.n_range
        cont = continuity_campaign(hi)
        groups = group_campaign(hi)
        payload["continuity"] = cont
        payload["groups"] = groups
        failed += cont["failed"] + groups["failed"]
        lines.append(f"continuity: {cont['maps']} maps over {cont['pairs']} pairs, {cont['failed']} failed")
        lines.append(f"groups: {groups['spaces']} spaces, {groups['failed']} failed")
    lines.append("all pass" if not failed else "FAILURES FOUND")
    emit(args, payload, lines)
    return 2 if failed else 0


def cmd_search(args):
    cfg = _config(args, parse_range(args.n))
    result = search_counterexample(args.predicate, cfg)
    payload = result.render()
    if result.found:
        T = result.space
        line = f"found after {result.spaces_scanned} spaces: open sets " + " ".join(
            fmt_set(T.gs, m) for m in T.mu
        )
        if result.subset is not None:
            line += f", subset {fmt_set(T.gs, result.subset)}"
    else:
        line = f"exhausted: no instance in {result.spaces_scanned} spaces"
    emit(args, payload, [line])
    return 0


def build_parser() -> Parser:
    parser = Parser(prog="gtlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    def command(name, func, help_text, space=True):
        p = sub.add_parser(name, help=help_text)
        if space:
            p.add_argument("space", help="space document (JSON)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "check a space document")
    p = command("families", cmd_families, "print named families of sets")
    p.add_argument("--family", action="append", help="family name (repeatable)")
    for name in ("closure", "interior"):
        p = command(name, cmd_operator, f"one {name} query")
        p.add_argument("--set", required=True, help="comma-separated labels")
        p.add_argument("--level", choices=("mu", "smu", "slambda"), default="slambda")
    p = command("kernel", cmd_operator, "one wedge/vee kernel query")
    p.add_argument("--set", required=True)
    p.add_argument("--kind", choices=("wedge", "vee"), default="wedge")
    p.add_argument("--level", choices=("smu", "slambda"), default="smu")
    p = command("classify", cmd_classify, "classify one subset, or all")
    p.add_argument("--set")
    command("axioms", cmd_axioms, "separation axioms by every route")
    p = command("homeo-group", cmd_homeo_group, "s-lambda-homeomorphism group")
    p.add_argument("--stabilize", help="set E fixed setwise")
    p = command("continuity", cmd_continuity, "continuity of a map between two spaces", space=False)
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--map", help="point=image pairs, comma-separated")

    def campaign_flags(p):
        p.add_argument("--n", required=True, help="point count N or range LO..HI")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--exhaustive", action="store_true", help="every space (n <= 4)")
        group.add_argument("--sample", type=int, metavar="COUNT", help="seeded random draws")
        p.add_argument("--seed", type=int, default=0)

    p = command("enumerate", cmd_enumerate, "list generalized topologies", space=False)
    campaign_flags(p)
    p.add_argument("--count-only", action="store_true")
    p = command("verify", cmd_verify, "run the theorem registry", space=False)
    campaign_flags(p)
    p.add_argument("--theorem", action="append", choices=THEOREM_IDS, metavar="ID")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--keep-going", action="store_true")
    p.add_argument("--with-pairs", action="store_true",
                   help="also run the map and stabilizer campaigns")
    p.add_argument("--progress", action="store_true")
    p = command("search", cmd_search, "first instance of a non-reversible implication", space=False)
    p.add_argument("predicate", choices=PREDICATE_IDS)
    campaign_flags(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VIOLATIONS as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 2
    except (GTLabError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
