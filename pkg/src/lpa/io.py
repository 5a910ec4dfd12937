"""JSON file formats for graphs, reps, Pi-elements and L-elements."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path as FsPath
from typing import Any

from .errors import LpaError, ParseError
from .field import FieldCtx
from .graph import Graph, Path
from .leavitt import LMonomial, PiElement
from .rep import Rep


def load_json(path: str | os.PathLike) -> Any:
    text = FsPath(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def dump_json(data: Any, path: str | os.PathLike | None = None) -> str:
    text = json.dumps(data, indent=2, sort_keys=False) + "\n"
    if path is not None:
        # atomic write
        path = FsPath(path)
        fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    return text


def _resolve(ref, base: FsPath | None):
    """Inline object, or a file reference relative to ``base``."""
    if isinstance(ref, str):
        p = FsPath(ref)
        if not p.is_absolute() and base is not None:
            p = base / p
        return load_json(p), p.parent
    return ref, base


def parse_field(data) -> FieldCtx:
    try:
        if isinstance(data, str):
            return FieldCtx.parse(data)
        if data["kind"] == "Q":
            return FieldCtx.Q()
        if data["kind"] == "Fp":
            return FieldCtx.Fp(int(data["p"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed field {data!r}: {exc}") from None
    raise ParseError(f"unknown field kind {data!r}")


def parse_graph(data, base: FsPath | None = None) -> Graph:
    data, _ = _resolve(data, base)
    return Graph.from_json(data)


def parse_rep(data, base: FsPath | None = None) -> Rep:
    data, base = _resolve(data, base)
    try:
        g = parse_graph(data["graph"], base)
        F = parse_field(data["field"])
        dims = {str(k): int(v) for k, v in data.get("dims", {}).items()}
        mats = {str(e): [[F.parse_scalar(str(a)) for a in row] for row in M]
                for e, M in data.get("matrices", {}).items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed representation: {exc!r}") from None
    return Rep.build(g, F, dims, mats)


def load_rep(path: str | os.PathLike) -> Rep:
    path = FsPath(path)
    return parse_rep(load_json(path), path.parent)


def parse_element(data, rep: Rep) -> PiElement:
    F = rep.field
    try:
        terms = [(Path.from_json(t["path"]), [F.parse_scalar(str(a)) for a in t["vector"]])
                 for t in data["terms"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed element: {exc!r}") from None
    return PiElement.from_terms(rep, terms)


def parse_operator(data, rep: Rep) -> list[LMonomial]:
    F = rep.field
    try:
        return [LMonomial(F.parse_scalar(str(m.get("coeff", "1"))),
                          Path.from_json(m["p"]), Path.from_json(m["q"]))
                for m in data["monomials"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed operator: {exc!r}") from None


def operator_to_json(ms: list[LMonomial], F: FieldCtx) -> dict:
    return {"monomials": [{"coeff": F.format(m.coeff), "p": m.p.to_json(), "q": m.q.to_json()}
                          for m in ms]}


def subspace_to_json(s) -> dict:
    return s.to_json()


__all__ = ["LpaError", "ParseError", "load_json", "dump_json", "parse_field", "parse_graph",
           "parse_rep", "load_rep", "parse_element", "parse_operator", "operator_to_json"]
