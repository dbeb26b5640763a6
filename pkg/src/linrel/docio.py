"""JSON input documents for relations and pencils.

A document is one JSON object holding either a relation::

    {"relation": {"space_dim": 2,
                  "generators": [{"x": ["0", "0"], "y": ["1", "0"]},
                                 {"x": ["1", "0"], "y": ["0", "0"]}]}}

or a pencil (row-major grids of equal shape)::

    {"pencil": {"E": [["1", "0"]], "F": [["0", "1"]]}}

Scalars are strings in the grammar ``[±]a[/b][[±]c[/d]i]``.  Harness
counterexamples add ``"check"`` and ``"scalars"`` keys; readers ignore keys
they do not know.
"""
from __future__ import annotations

import json

from .exact import ParseError, format_scalar, parse
from .pencil import MatrixPencil
from .relation import LinearRelation
from .rootspace import INF
from .subspace import Matrix

__all__ = ["DocumentError", "load_document", "loads_document", "relation_document", "pencil_document",
           "scalar_text", "parse_point"]


class DocumentError(ValueError):
    """Invalid input document; ``where`` locates the problem."""

    def __init__(self, message, where=""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


def _scalar(text, where):
    if not isinstance(text, str):
        raise DocumentError(f"expected a scalar string, got {type(text).__name__}", where)
    try:
        return parse(text)
    except ParseError as exc:
        raise DocumentError(str(exc), f"{where}[char {exc.position}]") from None


def _vector(items, n, where):
    if not isinstance(items, list):
        raise DocumentError("expected a list of scalars", where)
    if len(items) != n:
        raise DocumentError(f"expected {n} entries, got {len(items)}", where)
    return tuple(_scalar(t, f"{where}[{k}]") for k, t in enumerate(items))


def _grid(rows, where):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DocumentError("expected a list of rows", where)
    if not rows:
        raise DocumentError("empty grid", where)
    n = len(rows[0])
    out = [_vector(r, n, f"{where}[{i}]") for i, r in enumerate(rows)]
    return Matrix(out, n)


def loads_document(text):
    """Parse document text into a LinearRelation or a MatrixPencil."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return from_document(doc)


def from_document(doc):
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object")
    if "relation" in doc:
        rel = doc["relation"]
        if not isinstance(rel, dict):
            raise DocumentError("expected an object", "relation")
        m = rel.get("space_dim")
        if not isinstance(m, int) or m < 1:
            raise DocumentError("space_dim must be a positive integer", "relation.space_dim")
        gens = rel.get("generators", [])
        if not isinstance(gens, list):
            raise DocumentError("expected a list", "relation.generators")
        pairs = []
        for k, g in enumerate(gens):
            where = f"relation.generators[{k}]"
            if not isinstance(g, dict) or "x" not in g or "y" not in g:
                raise DocumentError("generator needs 'x' and 'y'", where)
            pairs.append((_vector(g["x"], m, where + ".x"), _vector(g["y"], m, where + ".y")))
        return LinearRelation.from_generators(m, pairs)
    if "pencil" in doc:
        pen = doc["pencil"]
        if not isinstance(pen, dict) or "E" not in pen or "F" not in pen:
            raise DocumentError("pencil needs 'E' and 'F'", "pencil")
        E = _grid(pen["E"], "pencil.E")
        F = _grid(pen["F"], "pencil.F")
        if E.shape != F.shape:
            raise DocumentError(f"E is {E.shape[0]}x{E.shape[1]} but F is {F.shape[0]}x{F.shape[1]}", "pencil")
        return MatrixPencil(E, F)
    raise DocumentError("document needs a 'relation' or 'pencil' key")


def load_document(path):
    with open(path, encoding="utf-8") as fh:
        return loads_document(fh.read())


def scalar_text(x):
    return "inf" if x is INF else format_scalar(x)


def parse_point(text):
    """A scalar string or ``"inf"``."""
    if text.strip().lower() == "inf":
        return INF
    return parse(text)


def relation_document(A: LinearRelation, **extra):
    gens = [{"x": [format_scalar(c) for c in x], "y": [format_scalar(c) for c in y]} for x, y in A.pairs()]
    doc = {"relation": {"space_dim": A.space_dim, "generators": gens}}
    doc.update(extra)
    return doc


def pencil_document(P: MatrixPencil, **extra):
    grid = lambda M: [[format_scalar(c) for c in r] for r in M.rows]  # noqa: E731
    doc = {"pencil": {"E": grid(P.E), "F": grid(P.F)}}
    doc.update(extra)
    return doc
