"""``clutterlab`` command line.

Exit codes: 0 success (or no violations), 1 violations found, 2 usage or
input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import clutter_core as cc
from .clutter_core import ClutterError, MinorSpec, ext_json, ext_str, to_elements
from .harness import campaigns
from .harness.generators import (
    Family,
    GeneratorConfig,
    GeneratorError,
    Kind,
    enumerate_clutters,
    make_family,
    random_clutters,
)
from .obstructions import BudgetExceeded, is_clean
from .params import connectivity, mu1, mu2, mu3, param_report, rainbow_covering_number
from .structure import (
    StructureError,
    check_setcore_geometry,
    core,
    is_tangled,
    min_cover_graph,
    setcore,
)
from .textio import (
    ParseError,
    format_clutter,
    format_clutters,
    format_setsystem,
    parse_clutter,
    parse_setsystem,
    sniff_kind,
)


class UsageError(Exception):
    pass


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _clutter(args) -> cc.Clutter:
    return parse_clutter(_read(args.input))


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _elements(spec: Optional[str]) -> list[int]:
    if not spec or spec == "-":
        return []
    try:
        return [int(x) for x in spec.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad element list {spec!r}") from None


def _family(args) -> Family:
    raw = args.family
    name, _, arg = raw.partition(":")
    name = name.upper().replace("-", "_")
    if name == "CUBOID":
        return Family("CUBOID", points=parse_setsystem(_read(args.input)))
    if name not in ("DELTA", "ODD_HOLE"):
        raise UsageError(f"unknown family {raw!r}; use delta:N, odd-hole:N or cuboid")
    try:
        return Family(name, int(arg))
    except ValueError:
        raise UsageError(f"family {raw!r} needs a size, e.g. {name.lower()}:5") from None


def _config(args) -> GeneratorConfig:
    if args.family:
        return GeneratorConfig(Kind.FAMILY, family=_family(args))
    if args.exhaustive:
        return GeneratorConfig(Kind.EXHAUSTIVE, n=args.n, seed=args.seed, deep=args.deep)
    return GeneratorConfig(
        Kind.RANDOM, n=args.n, count=args.count, seed=args.seed, model=args.model
    )


# -- subcommands ------------------------------------------------------------

def cmd_validate(args) -> int:
    c = _clutter(args)
    _emit(args, format_clutter(c), {"ground_size": c.ground_size, "members": c.member_sets()})
    return 0


def cmd_blocker(args) -> int:
    b = cc.blocker(_clutter(args))
    _emit(args, format_clutter(b), {"ground_size": b.ground_size, "members": b.member_sets()})
    return 0


def cmd_tau(args) -> int:
    t = cc.covering_number(_clutter(args))
    _emit(args, ext_str(t), {"tau": ext_json(t)})
    return 0


def cmd_minor(args) -> int:
    c = _clutter(args)
    spec = MinorSpec.of(_elements(args.delete), _elements(args.contract))
    try:
        m = cc.minor(c, spec)
    except cc.InvalidMinorSpec as exc:
        raise UsageError(str(exc)) from exc
    labels = cc.minor_labels(c.ground_size, spec)
    text = format_clutter(m) + "# labels " + " ".join(map(str, labels)) + "\n"
    _emit(args, text, {"ground_size": m.ground_size, "members": m.member_sets(), "labels": list(labels)})
    return 0


def cmd_is_clean(args) -> int:
    ok, w = is_clean(_clutter(args), args.max_n)
    text = "clean" if ok else "not-clean"
    if w is not None and args.witness:
        text += "\n" + w.line()
    _emit(args, text, {"clean": ok, "witness": None if w is None else w.to_json()})
    return 0


def cmd_is_tangled(args) -> int:
    t = is_tangled(_clutter(args))
    _emit(args, "tangled" if t else "not-tangled", {"tangled": t})
    return 0


def cmd_graph(args) -> int:
    g = min_cover_graph(_clutter(args))
    lines = [f"graph {g.vertex_count} d={g.d}"]
    lines += [f"edge {u} {v}" for u, v in g.edges]
    for i, (u, v) in enumerate(g.components, 1):
        lines.append(f"component {i} U {' '.join(map(str, to_elements(u)))} V {' '.join(map(str, to_elements(v)))}")
    _emit(args, "\n".join(lines), g.to_json())
    return 0


def cmd_core(args) -> int:
    c = _clutter(args)
    k = cc.Clutter._from_masks(c.ground_size, core(c))
    _emit(args, format_clutter(k), {"ground_size": k.ground_size, "members": k.member_sets()})
    return 0


def cmd_setcore(args) -> int:
    c = _clutter(args)
    s = setcore(c)
    payload = s.to_json()
    if args.format == "json":
        payload["geometry"] = check_setcore_geometry(s).to_json() if s.points else None
    _emit(args, format_setsystem(s), payload)
    return 0


def cmd_mu(args) -> int:
    c = _clutter(args)
    mu, w = rainbow_covering_number(c, min_cover_graph(c))
    text = ext_str(mu) + ("" if w is None else "\nwitness " + " ".join(map(str, to_elements(w))))
    _emit(args, text, {"mu": ext_json(mu), "witness": None if w is None else list(to_elements(w))})
    return 0


def cmd_lambda(args) -> int:
    text = _read(args.input)
    if sniff_kind(text) == "clutter":
        s = setcore(parse_clutter(text))
    else:
        s = parse_setsystem(text)
    lam, q = connectivity(s)
    out = ext_str(lam) + ("" if q is None else f"\nwitness {q}")
    _emit(args, out, {"lambda": ext_json(lam), "witness": None if q is None else q.to_json()})
    return 0


def cmd_mu_chain(args) -> int:
    c = _clutter(args)
    g = min_cover_graph(c)
    vals = {
        "mu": rainbow_covering_number(c, g)[0],
        "mu1": mu1(c, g)[0],
        "mu2": mu2(c, g)[0],
        "mu3": mu3(c, g)[0],
    }
    ordered = vals["mu1"] >= vals["mu2"] >= vals["mu3"] >= vals["mu"]
    text = " ".join(f"{k}={ext_str(v)}" for k, v in vals.items()) + ("\nchain ok" if ordered else "\nchain broken")
    _emit(args, text, {**{k: ext_json(v) for k, v in vals.items()}, "chain_ok": ordered})
    return 0 if ordered else 1


def cmd_report(args) -> int:
    c = _clutter(args)
    r = param_report(c)
    payload = r.to_json()
    lines = [" ".join(f"{k}={payload[k]}" for k in ("mu", "mu1", "mu2", "mu3", "lambda"))]
    for k, v in payload["witnesses"].items():
        if v is None:
            continue
        if k == "gsc":
            v = str(r.gsc)
        elif isinstance(v, list):
            v = " ".join(map(str, v))
        lines.append(f"{k} {v}")
    _emit(args, "\n".join(lines), payload)
    return 0


def _campaign(args, fn) -> int:
    rep = fn(_config(args), cap=args.cap, clean_budget=args.max_n)
    payload = rep.to_json()
    lines = [
        f"instances {rep.instances_total}",
        f"tangled {rep.tangled_count}",
        f"clean_tangled {rep.clean_tangled_count}",
        f"violations {rep.violations}",
        f"runtime_ms {rep.runtime_ms:.0f}",
    ]
    for v in rep.violation_details:
        lines.append(f"violation {v.check}: expected {v.expected} got {v.actual}")
    _emit(args, "\n".join(lines), payload)
    return 0 if rep.passed else 1


def cmd_verify_theorem(args) -> int:
    return _campaign(args, campaigns.verify_theorem)


def cmd_verify_lemmas(args) -> int:
    return _campaign(args, campaigns.verify_lemmas)


def cmd_generate(args) -> int:
    cfg = _config(args)
    cfg.check()
    if cfg.kind is Kind.EXHAUSTIVE:
        cs = list(enumerate_clutters(cfg.n))
    elif cfg.kind is Kind.RANDOM:
        cs = list(random_clutters(cfg))
    else:
        cs = [make_family(cfg.family)]
    payload = [{"ground_size": c.ground_size, "members": c.member_sets()} for c in cs]
    _emit(args, format_clutters(cs), payload)
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "blocker": cmd_blocker,
    "tau": cmd_tau,
    "minor": cmd_minor,
    "is-clean": cmd_is_clean,
    "is-tangled": cmd_is_tangled,
    "graph": cmd_graph,
    "core": cmd_core,
    "setcore": cmd_setcore,
    "mu": cmd_mu,
    "lambda": cmd_lambda,
    "mu-chain": cmd_mu_chain,
    "report": cmd_report,
    "verify-theorem": cmd_verify_theorem,
    "verify-lemmas": cmd_verify_lemmas,
    "generate": cmd_generate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", metavar="FILE", help="input file ('-' or omitted: stdin)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-n", type=int, default=None, help="cleanness enumeration bound (default 12)")

    gen = argparse.ArgumentParser(add_help=False)
    gen.add_argument("--n", type=int, default=5)
    gen.add_argument("--count", type=int, default=100)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--family", metavar="NAME", help="delta:N, odd-hole:N, or cuboid (set-system from --input)")
    gen.add_argument("--exhaustive", action="store_true", help="all clutters over ground sizes 0..n")
    gen.add_argument("--deep", action="store_true", help="allow the n=6 exhaustive sweep")
    gen.add_argument("--model", choices=("uniform", "cuboid"), default="uniform")
    gen.add_argument("--cap", type=int, default=campaigns.DEFAULT_VIOLATION_CAP)

    p = argparse.ArgumentParser(prog="clutterlab", description="Clutters, blockers, setcores and rainbow covers.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        parents = [common, gen] if name in ("verify-theorem", "verify-lemmas", "generate") else [common]
        sp = sub.add_parser(name, parents=parents)
        if name == "is-clean":
            sp.add_argument("--witness", action="store_true")
        if name == "minor":
            sp.add_argument("--delete", default="", help="elements to delete, e.g. 1,3")
            sp.add_argument("--contract", default="", help="elements to contract")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, ClutterError, StructureError, GeneratorError, BudgetExceeded, UsageError, OSError) as exc:
        print(f"clutterlab: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
