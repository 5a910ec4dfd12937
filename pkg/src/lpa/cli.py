"""Command-line front end: ``lpa <command> ...``.

Every command prints one JSON report.  Exit codes: 0 ok, 2 parse or
validation error, 3 relation-check failure, 4 undecided verdict under
``--require-decision``.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path as FsPath

from . import chen, classify, leavitt, moduli
from . import io as lio
from .errors import LpaError
from .field import FieldCtx, Poly
from .graph import Graph
from .rep import Rep
from .structure import (a_dimension, caret_injective, is_full, ker_j, nabla, recover,
                        satisfies_condition_I, sigma)

EXIT_OK, EXIT_INPUT, EXIT_RELATION, EXIT_UNDECIDED = 0, 2, 3, 4


def corpus_dir() -> FsPath:
    return FsPath(str(resources.files("lpa") / "corpus"))


def _graph_arg(text: str) -> Graph:
    for kind in ("bouquet", "line", "circle"):
        if text.startswith(kind + ":"):
            return getattr(Graph, kind)(int(text.split(":", 1)[1]))
    return lio.parse_graph(str(text), FsPath.cwd())


def _dims_arg(g: Graph, text: str) -> dict[str, int]:
    if "=" not in text:
        if len(g.vertices) != 1:
            raise lio.ParseError("bare --dims needs a one-vertex graph; use v=d,...")
        return {g.vertices[0]: int(text)}
    out = {}
    for part in text.split(","):
        k, v = part.split("=")
        out[k.strip()] = int(v)
    return out


def _decision_json(d: classify.Decision) -> dict:
    out = {"answer": d.answer, "reason": d.reason}
    w = d.witness
    if w is not None:
        if hasattr(w, "to_json"):
            out["witness"] = w.to_json()
        elif isinstance(w, tuple):
            out["witness"] = [x.to_json() for x in w]
    return out


def _decided(args, d: classify.Decision) -> dict:
    out = {"results": _decision_json(d)}
    if getattr(args, "require_decision", False) and d.unknown:
        out["exit"] = EXIT_UNDECIDED
    return out


def analyze(r: Rep, seed: int) -> dict:
    s, _ = sigma(r)
    irr = classify.is_irreducible(r, seed=seed) if r.total_dim else None
    ind = classify.is_indecomposable(r, seed=seed) if r.total_dim else None
    return {"valid": True,
            "dims": r.dim_vector(),
            "nondegenerate": caret_injective(r),
            "full": is_full(r),
            "condition_I": satisfies_condition_I(r),
            "a_dimension": a_dimension(r),
            "sigma_dims": s.dims(),
            "ker_j_dims": ker_j(r).dims(),
            "irreducible": irr.answer if irr else "n/a (zero)",
            "indecomposable": ind.answer if ind else "n/a (zero)"}


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> dict:
    r = lio.load_rep(args.rep)
    res = analyze(r, args.seed)
    return {"results": res}


def cmd_functor(args) -> dict:
    r = lio.load_rep(args.rep)
    if args.command == "sigma":
        out = sigma(r)[1]
    elif args.command == "nabla":
        out = nabla(r)[0]
    else:
        out = recover(r)
    if args.output:
        lio.dump_json(out.to_json(), args.output)
    return {"results": {"before": r.dim_vector(), "after": out.dim_vector(), "rep": out.to_json()}}


def cmd_iso(args) -> dict:
    v, w = lio.load_rep(args.rep), lio.load_rep(args.other)
    d = classify.is_isomorphic(v, w, seed=args.seed)
    return _decided(args, d)


def cmd_irr(args) -> dict:
    r = lio.load_rep(args.rep)
    d = classify.is_irreducible(r, seed=args.seed)
    return _decided(args, d)


def cmd_indec(args) -> dict:
    r = lio.load_rep(args.rep)
    d = classify.is_indecomposable(r, seed=args.seed)
    return _decided(args, d)


def cmd_pi_act(args) -> dict:
    r = lio.load_rep(args.rep)
    el = lio.parse_element(lio.load_json(args.element), r)
    ops = lio.parse_operator(lio.load_json(args.operator), r)
    out = leavitt.act_element(el, ops)
    nf = leavitt.normal_form(out)
    F = r.field
    return {"results": {
        "result": out.to_json(),
        "normal_form": [{"path": p.to_json(), "vector": [F.format(a) for a in x]} for p, x in nf.leaves],
        "is_zero": not nf.leaves}}


def cmd_chen(args) -> dict:
    g = _graph_arg(args.graph)
    F = FieldCtx.parse(args.field)
    cyc = args.cycle.split(",") if args.cycle else None
    report = {}
    if args.kind == "cyclic":
        r = chen.chen_cyclic(g, cyc, F.parse_scalar(args.lam), F)
    elif args.kind == "sink":
        r = chen.chen_sink(g, args.vertex, F)
    elif args.kind == "anh-nam":
        r = chen.anh_nam(g, cyc, Poly.from_high(F, [F.parse_scalar(a) for a in args.poly.split(",")]))
    elif args.kind == "twist":
        r = chen.twist_matrix(g, cyc, json.loads(args.matrix), F)
    elif args.kind == "vector":
        r = chen.vector_variant(g, cyc, [F.parse_scalar(a) for a in args.vector.split(",")], F,
                                literal=args.literal)
    elif args.kind == "graded":
        r, rep = chen.graded_trunc(g, args.vertex, cyc, args.depth, F)
        report = rep.to_json()
    else:
        r, rep = chen.irrational_trunc(g, args.prefix.split(","), args.depth, F)
        report = rep.to_json()
    if args.output:
        lio.dump_json(r.to_json(), args.output)
    return {"results": {"rep": r.to_json(), "analysis": analyze(r, args.seed), "chain": report or None}}


def cmd_moduli(args) -> dict:
    if args.kind == "subvariety":
        return {"results": moduli.chen_subvariety_report(args.n, args.d, FieldCtx.parse(args.field))}
    if args.kind == "stabilizer":
        return {"results": moduli.stabilizer_check(lio.load_rep(args.rep)).to_json()}
    g = _graph_arg(args.graph)
    d = _dims_arg(g, args.dims)
    if args.kind == "expected":
        return {"results": {"expected_dim": moduli.expected_dim(g, d)}}
    rep = moduli.enumerate_and_count(g, d, FieldCtx.parse(args.field))
    return {"results": rep.to_json()}


def cmd_verify(args) -> dict:
    r = lio.load_rep(args.rep)
    rep = leavitt.verify_relations(r, args.samples, args.seed)
    out = {"results": rep.to_json()}
    if not rep.ok:
        out["exit"] = EXIT_RELATION
    return out


def repro_checks() -> list[tuple[str, bool, object]]:
    """(name, passed, observed) for each bundled worked example."""
    c = corpus_dir()
    checks = []
    ex1 = lio.load_rep(c / "full_degenerate.json")
    checks.append(("full_degenerate: full", is_full(ex1), is_full(ex1)))
    checks.append(("full_degenerate: degenerate", not caret_injective(ex1), caret_injective(ex1)))
    checks.append(("full_degenerate: A-dimension 1", a_dimension(ex1) == {"v": 1}, a_dimension(ex1)))
    ex2 = lio.load_rep(c / "nondegenerate_not_full.json")
    s, _ = sigma(ex2)
    F = ex2.field
    checks.append(("nondegenerate_not_full: nondegenerate", caret_injective(ex2), caret_injective(ex2)))
    checks.append(("nondegenerate_not_full: not full", not is_full(ex2), is_full(ex2)))
    checks.append(("nondegenerate_not_full: sigma = span{E1}",
                   [list(b) for b in s.basis["v"]] == [[F.one, F.zero, F.zero]], s.basis["v"]))
    checks.append(("nondegenerate_not_full: A-dimension 1", a_dimension(ex2) == {"v": 1}, a_dimension(ex2)))
    rem = lio.load_rep(c / "degenerate_remark.json")
    checks.append(("degenerate_remark: ker_j = V", ker_j(rem).is_full(), ker_j(rem).dims()))
    checks.append(("degenerate_remark: nabla = 0", nabla(rem)[0].total_dim == 0, nabla(rem)[0].dims))
    z = leavitt.is_zero(leavitt.j_embed(rem, "v", [F.zero, F.one]))
    checks.append(("degenerate_remark: [v, E2] = 0", z, z))
    rep = lio.load_rep(c / "caret_rep.json")
    el = lio.parse_element(lio.load_json(c / "caret_element.json"), rep)
    F = rep.field
    v1, v2 = el.terms[rep.graph.path(["e1"])], el.terms[rep.graph.path(["e2"])]
    got = leavitt.act_element(el, lio.parse_operator(lio.load_json(c / "op_e1e2.json"), rep))
    want = leavitt.PiElement.from_terms(rep, [(rep.graph.path([], "v"), rep.act("e2", v1))])
    checks.append(("caret figure: e1e2 snips to [v, v1·e2]", got.terms == want.terms, got))
    got = leavitt.act_element(el, lio.parse_operator(lio.load_json(c / "op_e1star.json"), rep))
    want = leavitt.PiElement.from_terms(rep, [(rep.graph.path(["e1", "e1"]), v1),
                                              (rep.graph.path(["e1", "e2"]), v2)])
    checks.append(("caret figure: e1* glues at the first leaf", got.terms == want.terms, got))
    return checks


def cmd_repro(args) -> dict:
    checks = repro_checks()
    out = {"results": [{"check": n, "passed": bool(ok), "observed": str(obs)} for n, ok, obs in checks]}
    if not all(ok for _, ok, _ in checks):
        out["exit"] = EXIT_RELATION
    return out


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lpa", description="Leavitt path algebra representations via quiver representations")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="predicates and dimensions of a representation")
    p.add_argument("rep")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_analyze)

    for name in ("sigma", "nabla", "recover"):
        p = sub.add_parser(name, help=f"apply {name} and emit the result")
        p.add_argument("rep")
        p.add_argument("-o", "--output")
        p.set_defaults(func=cmd_functor)

    p = sub.add_parser("iso", help="decide isomorphism")
    p.add_argument("rep")
    p.add_argument("other")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--require-decision", action="store_true")
    p.set_defaults(func=cmd_iso)

    for name, fn in (("irr", cmd_irr), ("indec", cmd_indec)):
        p = sub.add_parser(name, help="irreducibility" if name == "irr" else "indecomposability")
        p.add_argument("rep")
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--require-decision", action="store_true")
        p.set_defaults(func=fn)

    p = sub.add_parser("pi-act", help="act on a Pi(V) element by an L-element")
    p.add_argument("--rep", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--operator", required=True)
    p.set_defaults(func=cmd_pi_act)

    p = sub.add_parser("chen", help="construct a (generalized) Chen module")
    p.add_argument("kind", choices=["cyclic", "sink", "anh-nam", "twist", "vector", "graded", "irrational"])
    p.add_argument("--graph", required=True, help="graph file or bouquet:N / line:N / circle:N")
    p.add_argument("--field", default="Q")
    p.add_argument("--cycle", help="comma-separated edge names")
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--poly", help="coefficients, highest degree first")
    p.add_argument("--matrix", help="JSON matrix")
    p.add_argument("--vector", help="coefficients on the tails t0..t(m-1)")
    p.add_argument("--literal", action="store_true", help="vector variant: r·e = v for every edge")
    p.add_argument("--vertex")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--prefix")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_chen)

    p = sub.add_parser("moduli", help="moduli probes")
    p.add_argument("kind", choices=["count", "expected", "stabilizer", "subvariety"])
    p.add_argument("--graph", default="bouquet:2")
    p.add_argument("--dims", default="1")
    p.add_argument("--field", default="F2")
    p.add_argument("--rep")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_moduli)

    p = sub.add_parser("verify", help="check the Leavitt relations on random Pi(V) elements")
    p.add_argument("--rep", required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("repro", help="reproduce every bundled worked example")
    p.set_defaults(func=cmd_repro)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    report = {"command": args.command, "seed": getattr(args, "seed", None),
              "inputs": {k: v for k, v in vars(args).items() if k not in ("func", "command")}}
    code = EXIT_OK
    try:
        out = args.func(args)
        code = out.pop("exit", EXIT_OK)
        report.update(out)
        report["status"] = "ok" if code == EXIT_OK else f"error({code})"
    except (LpaError, OSError, ValueError) as exc:
        code = EXIT_INPUT
        report["status"] = f"error({code}): {type(exc).__name__}: {exc}"
    print(json.dumps(report, indent=2, default=str))
    return code


if __name__ == "__main__":
    sys.exit(main())
