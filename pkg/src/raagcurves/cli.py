"""Command-line entry point: ``raagcurves <subcommand> ...``.

Exit status is 0 on success, 1 on a domain or validation error (or a failed
verification) and 2 on a usage error.  Errors print one line
``error[<code>]: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .curves import CurveSystem, build_lift, p4_configuration, read_curve_system, read_lift_spec, embedding_pipeline
from .errors import InputError, RaagError
from .datasets import (
    REALISATIONS,
    data_path,
    gamma0_gamma1_bundle,
    load_curves,
    load_k5,
    load_lift,
    load_p4_lift,
    realisation_matches,
)
from .graphs import Graph, find_induced_embeddings, named_graph, read_graph
from .maps import check_all, diagonal_hom, read_map, verify_reduced_preservation
from .surfaces import (
    DEFAULT_BOUNDS,
    enumerate_c4_decompositions,
    euler_characteristic,
    orientation_double_cover,
    parse_surface,
    xi,
    xi_two,
)
from .words import Presentation, equal, is_reduced, normal_form, reduce

DEFAULT_SEED = 0


# -- argument resolution ------------------------------------------------------------


def _graph_arg(spec: str, data_dir) -> Graph:
    """A graph file, ``path:n`` / ``cycle:n`` / ``complete:n`` / ``edgeless:n``, or a bundled name.

Named graphs with at most 26 vertices are labelled a, b, c, ...
"""
    if os.path.exists(spec):
        return read_graph(spec)
    kind, _, n = spec.partition(":")
    if kind in ("path", "cycle", "complete", "edgeless") and n.isdigit():
        g = named_graph(kind, int(n))
        # letters read better in words: path:4 is a-b-c-d
        return g.relabel({i: chr(ord("a") + i) for i in g.vertices}) if len(g) <= 26 else g
    if spec in ("gamma0", "gamma1"):
        return read_graph(data_path(f"{spec}.json", data_dir))
    raise InputError(f"cannot open graph {spec!r}: no such file or named graph")


def _system_arg(spec: str, data_dir) -> CurveSystem:
    if os.path.exists(spec):
        return read_curve_system(spec)
    if spec == "k5":
        return load_k5(data_dir)
    if spec.startswith("p4"):
        _, _, p = spec.partition(":")
        return p4_configuration(int(p) if p.isdigit() else 4)
    if spec.replace(" ", "") in REALISATIONS:
        return load_curves(spec, data_dir)
    raise InputError(f"cannot open curve system {spec!r}: no such file or bundled system")


def _lift_arg(spec: str, data_dir):
    if os.path.exists(spec):
        return read_lift_spec(spec)
    if spec == "p4":
        return load_p4_lift(data_dir)
    if spec.replace(" ", "") in REALISATIONS:
        return load_lift(spec, data_dir)
    raise InputError(f"cannot open lift specification {spec!r}: no such file or bundled lift")


def _surface_arg(text: str):
    return parse_surface(text)


# -- commands: each returns (data, text lines, exit status) -------------------------------


def _words(args, op):
    g = _graph_arg(args.graph, args.data_dir)
    p = Presentation(g, args.flavor)
    w = p.parse(args.word, normalize=args.normalize)
    out = op(w)
    data = {"input": str(w), "result": str(out), "length": len(out)}
    return data, [str(out)], 0


def cmd_reduce(args):
    return _words(args, reduce)


def cmd_normal_form(args):
    return _words(args, normal_form)


def cmd_equal(args):
    g = _graph_arg(args.graph, args.data_dir)
    p = Presentation(g, args.flavor)
    u, w = p.parse(args.u, normalize=args.normalize), p.parse(args.w, normalize=args.normalize)
    eq = equal(u, w)
    data = {"u": str(u), "w": str(w), "equal": eq, "normal_forms": [str(normal_form(u)), str(normal_form(w))]}
    return data, ["true" if eq else "false"], 0


def cmd_is_reduced(args):
    g = _graph_arg(args.graph, args.data_dir)
    w = Presentation(g, args.flavor).parse(args.word, normalize=args.normalize)
    chk = is_reduced(w)
    data = {"word": str(w), "reduced": chk.ok, "witness": list(chk.witness) if chk.witness else None}
    text = "true" if chk.ok else f"false (cancelling positions {chk.witness[0]} and {chk.witness[1]})"
    return data, [text], 0


def cmd_check_map(args):
    f = read_map(args.map)
    res = check_all(f)
    data = {name: {"holds": c.ok, "counterexample": _jsonable(c.witness)} for name, c in res.items()}
    lines = [f"{'predicate':<20} {'holds':<6} counterexample"]
    for name, c in res.items():
        wit = "-" if c.ok else json.dumps(_jsonable(c.witness), sort_keys=True)
        lines.append(f"{name:<20} {str(c.ok).lower():<6} {wit}")
    return data, lines, 0


def cmd_diagonal_hom(args):
    h = diagonal_hom(read_map(args.map), args.flavor)
    data = {"flavor": h.flavor.value, "images": h.describe(), "lipschitz_constant": h.lipschitz_constant, "certificates": h.certificates}
    lines = [f"{u} -> {img}" for u, img in data["images"].items()] + [f"K = {h.lipschitz_constant}"]
    return data, lines, 0


def _report_lines(rep) -> list:
    d = rep.to_dict()
    lines = [
        f"samples                  {d['samples']} (max length {d['max_len']}, seed {d['seed']})",
        f"lipschitz constant K     {d['lipschitz_constant']}",
        f"non-reduced images       {d['non_reduced_images']}",
        f"trivial images           {d['trivial_images']}",
        f"length identity failures {d['length_identity_failures']}",
        f"lipschitz failures       {d['lipschitz_failures']}",
        f"length ratio range       {_fmt(d['min_ratio'])} .. {_fmt(d['max_ratio'])}",
    ]
    for f in d["failures"][:3]:
        lines.append(f"  e.g. {f['word']}  ->  {f['image']}  ({', '.join(f['problems'])})")
    return lines


def cmd_verify_hom(args):
    h = diagonal_hom(read_map(args.map), args.flavor)
    rep = verify_reduced_preservation(h, args.samples, args.max_len, args.seed)
    return rep.to_dict(), _report_lines(rep) + ["PASS" if rep.ok else "FAIL"], 0 if rep.ok else 1


def cmd_xi(args):
    rows = [{"surface": str(s), "xi": xi(s)} for s in map(_surface_arg, args.surfaces)]
    return rows, _value_table(rows, "xi"), 0


def cmd_xi_two(args):
    rows = [{"surface": str(s), "xi_two": xi_two(s)} for s in map(_surface_arg, args.surfaces)]
    return rows, _value_table(rows, "xi_two"), 0


def cmd_double_cover(args):
    rows = []
    for s in map(_surface_arg, args.surfaces):
        c = orientation_double_cover(s)
        rows.append({"surface": str(s), "cover": str(c), "chi": euler_characteristic(s), "cover_chi": euler_characteristic(c)})
    return rows, _value_table(rows, "cover"), 0


def cmd_enumerate(args):
    cases = enumerate_c4_decompositions(args.target, (args.max_genus, args.max_marked))
    data = {"target": args.target, "count": len(cases), "cases": [c.to_dict() for c in cases]}
    lines = [f"{len(cases)} cases for two-sided complexity {args.target}"]
    for k, c in enumerate(cases, 1):
        d = c.to_dict()
        f0 = " | ".join(" + ".join(opt) for opt in d["F0"])
        lines.append(f"({k}) F0 = {f0}   alpha = {d['alpha']}   circles F1/F2 = {d['circles'][0]}/{d['circles'][1]}")
        lines.append(f"    F1 in {{{', '.join(d['F1'])}}}  (zeta {d['zeta'][0]})")
        lines.append(f"    F2 in {{{', '.join(d['F2'])}}}  (zeta {d['zeta'][1]})")
        lines.append(f"    realizable pairs: {len(d['realizable_pairs'])}")
    return data, lines, 0


def cmd_curve_graph(args):
    cs = _system_arg(args.system, args.data_dir)
    g = cs.curve_graph("all" if args.all else "two_sided_only")
    data = {"surface": str(cs.ambient), "graph": g.to_dict()}
    lines = [
        "vertices: " + (" ".join(map(str, g.vertices)) or "(none)"),
        "edges: " + (" ".join(f"{u}-{v}" for u, v in g.sorted_edges()) or "(none)"),
    ]
    status = 0
    if args.match:
        target = _graph_arg(args.match, args.data_dir)
        iso = None
        if len(target) == len(g) and len(target.edges) == len(g.edges):
            emb = find_induced_embeddings(target, g, 1)
            iso = emb[0] if emb else None
        data["isomorphism"] = {str(k): v for k, v in iso.items()} if iso else None
        lines.append(f"isomorphic to {args.match}: {'yes' if iso else 'no'}")
        status = 0 if iso else 1
    _maybe_dot(args, g)
    return data, lines, status


def cmd_lift(args):
    cs = _system_arg(args.system, args.data_dir)
    spec = _lift_arg(args.lift, args.data_dir)
    lifted, proj = build_lift(cs, spec, "all" if args.all else "two_sided_only")
    g = proj.source
    data = {
        "surface": str(cs.ambient),
        "cover": str(lifted.ambient),
        "lifted": lifted.to_dict(),
        "projection": {str(k): v for k, v in proj.assignment.items()},
        "full": True,
        "condition_star": True,
        "lift_graph": g.to_dict(),
    }
    lines = [
        f"cover: {lifted.ambient} ({len(g)} lifted curves, {len(g.edges)} disjoint pairs)",
        "projection: " + " ".join(f"{k}->{v}" for k, v in proj.assignment.items()),
        "projection is full and satisfies condition (*)",
    ]
    _maybe_dot(args, g)
    return data, lines, 0


def cmd_pipeline(args):
    cs = _system_arg(args.system, args.data_dir)
    target = _graph_arg(args.target, args.data_dir)
    spec = _lift_arg(args.lift, args.data_dir)
    report, hom, recipe = embedding_pipeline(cs, target, spec, pseudo_anosov=args.pseudo_anosov)
    data = {"report": report, "recipe": recipe.to_dict()}
    lines = [
        f"surface {report['surface']}, cover {report['cover']}",
        "embedding: " + " ".join(f"{k}->{v}" for k, v in report["embedding"].items()),
        f"lift graph: {report['lift_graph']['vertices']} vertices, {report['lift_graph']['edges']} edges",
        "certified: " + ", ".join(k for k, v in report["certificates"].items() if v),
        f"K = {report['lipschitz_constant']}",
        "twist recipe (exponent n symbolic):",
    ] + ["  " + s for s in recipe.render()]
    lines.append(f"deck-equivariant: {'yes' if report['deck_equivariant'] else 'no'}")
    return data, lines, 0


def cmd_gamma_demo(args):
    b = gamma0_gamma1_bundle(args.data_dir)
    rep = verify_reduced_preservation(b.hom, args.samples, args.max_len, args.seed)
    realisations = {}
    for s in REALISATIONS:
        iso = realisation_matches(load_curves(s, args.data_dir), b.gamma1)
        realisations[s] = {str(k): v for k, v in iso.items()} if iso else None
    ok = rep.ok and all(realisations.values())
    data = {
        "transcription_checks": b.checks,
        "phi": b.hom.describe(),
        "verification": rep.to_dict(),
        "curve_graph_isomorphisms": realisations,
        "ok": ok,
    }
    lines = ["transcription checks:"] + [f"  {k}: {'ok' if v else 'FAILED'}" for k, v in b.checks.items()]
    lines.append("phi: " + ", ".join(f"{u}->{w}" for u, w in data["phi"].items()))
    lines += _report_lines(rep)
    lines += [f"curve graph on {s} isomorphic to G1: {'yes' if v else 'no'}" for s, v in realisations.items()]
    lines.append("PASS" if ok else "FAIL")
    return data, lines, 0 if ok else 1


def cmd_find_induced(args):
    small = _graph_arg(args.small, args.data_dir)
    big = _graph_arg(args.big, args.data_dir)
    limit = None if args.limit == "all" else int(args.limit)
    embs = find_induced_embeddings(small, big, limit)
    data = {"count": len(embs), "embeddings": [{str(k): v for k, v in e.items()} for e in embs]}
    lines = [f"{len(embs)} embedding(s)"] + [" ".join(f"{k}->{v}" for k, v in e.items()) for e in embs]
    return data, lines, 0 if embs else 1


# -- plumbing ---------------------------------------------------------------------------


def _fmt(x):
    return "-" if x is None else f"{x:.3f}"


def _value_table(rows, key) -> list:
    if len(rows) == 1:
        return [str(rows[0][key])]
    w = max(len(r["surface"]) for r in rows)
    return [f"{r['surface']:<{w}}  {r[key]}" for r in rows]


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _maybe_dot(args, g: Graph) -> None:
    if getattr(args, "emit_dot", None):
        with open(args.emit_dot, "w", encoding="utf-8") as fh:
            fh.write(g.to_dot() + "\n")


def _seed(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help=f"sampling seed (default {DEFAULT_SEED})")
    common.add_argument("--data-dir", default="./data", help="directory shadowing the bundled data files")
    common.add_argument("--emit-dot", metavar="PATH", help="write the produced graph in DOT format")

    wordopts = argparse.ArgumentParser(add_help=False)
    wordopts.add_argument("--graph", required=True, help="graph file or path:n, cycle:n, complete:n, edgeless:n")
    wordopts.add_argument("--flavor", choices=("artin", "coxeter"), default="artin")
    wordopts.add_argument("--normalize", action="store_true", help="accept ^-1 in Coxeter words (with a warning)")

    p = argparse.ArgumentParser(prog="raagcurves", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_, parents=(common,)):
        sp = sub.add_parser(name, parents=list(parents), help=help_)
        sp.set_defaults(func=func)
        return sp

    add("reduce", cmd_reduce, "shortest word for the same element", (common, wordopts)).add_argument("word")
    add("normal-form", cmd_normal_form, "lexicographically least reduced word", (common, wordopts)).add_argument("word")
    add("is-reduced", cmd_is_reduced, "reducedness test with witness", (common, wordopts)).add_argument("word")
    sp = add("equal", cmd_equal, "word problem", (common, wordopts))
    sp.add_argument("u")
    sp.add_argument("w")

    add("check-map", cmd_check_map, "all map predicates with counterexamples").add_argument("map")
    sp = add("diagonal-hom", cmd_diagonal_hom, "certified diagonal homomorphism of a map")
    sp.add_argument("map")
    sp.add_argument("--flavor", choices=("artin", "coxeter"), default="artin")
    sp = add("verify-hom", cmd_verify_hom, "sample reduced words through a diagonal homomorphism")
    sp.add_argument("map")
    sp.add_argument("--flavor", choices=("artin", "coxeter"), default="artin")
    sp.add_argument("--samples", type=int, default=2000)
    sp.add_argument("--max-len", type=int, default=20)

    add("xi", cmd_xi, "complexity").add_argument("surfaces", nargs="+")
    add("xi-two", cmd_xi_two, "two-sided complexity").add_argument("surfaces", nargs="+")
    add("double-cover", cmd_double_cover, "orientation double cover").add_argument("surfaces", nargs="+")
    sp = add("enumerate-c4-cases", cmd_enumerate, "decompositions around a 4-cycle of curves")
    sp.add_argument("--target", type=int, default=4)
    sp.add_argument("--max-genus", type=int, default=DEFAULT_BOUNDS[0])
    sp.add_argument("--max-marked", type=int, default=DEFAULT_BOUNDS[1])

    sp = add("curve-graph", cmd_curve_graph, "graph of disjointness of a curve system")
    sp.add_argument("system", help="curve-system file, N{1,6} / N{3,3} / N{5,0}, k5 or p4[:p]")
    sp.add_argument("--all", action="store_true", help="include one-sided curves")
    sp.add_argument("--match", metavar="GRAPH", help="report an isomorphism onto this graph")
    sp = add("lift", cmd_lift, "lift a curve system to the orientation double cover")
    sp.add_argument("system")
    sp.add_argument("lift", help="lift-spec file, a bundled surface name or p4")
    sp.add_argument("--all", action="store_true")
    sp = add("pipeline", cmd_pipeline, "graph -> curves -> lift -> diagonal hom -> twist recipe")
    sp.add_argument("system")
    sp.add_argument("target")
    sp.add_argument("lift")
    sp.add_argument("--pseudo-anosov", action="store_true", help="add a symbolic free pseudo-Anosov factor")
    sp = add("gamma-demo", cmd_gamma_demo, "validate G0/G1 data and sample phi(q) = e f")
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--max-len", type=int, default=20)
    sp = add("find-induced", cmd_find_induced, "induced embeddings of one graph in another")
    sp.add_argument("small")
    sp.add_argument("big")
    sp.add_argument("--limit", default="1", help="positive count or 'all'")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "limit", "all") != "all":
        try:
            if int(args.limit) < 1:
                raise ValueError
        except ValueError:
            print("error[usage]: --limit must be a positive integer or 'all'", file=err)
            return 2
    try:
        data, lines, status = args.func(args)
    except RaagError as exc:
        print(f"error[{exc.code}]: {exc}", file=err)
        return 1
    except OSError as exc:
        print(f"error[io]: {exc.filename or ''}: {exc.strerror}", file=err)
        return 1
    if args.format == "json":
        out.write(json.dumps(_jsonable(data), indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
