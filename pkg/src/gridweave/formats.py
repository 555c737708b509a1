"""Embedding JSON: ``{"m", "n", "points", "graph_hash"}`` with points indexed by vertex id."""

from __future__ import annotations

import json

from .drawing import Embedding
from .graph import Graph


class EmbeddingFormatError(ValueError):
    pass


def embedding_to_json(emb: Embedding, g: Graph | None = None) -> str:
    graph_hash = g.content_hash() if g is not None else None
    rows = ",\n".join(f"    [{p[0]}, {p[1]}, {p[2]}]" for p in emb.points)
    body = f"[\n{rows}\n  ]" if rows else "[]"
    return (
        "{\n"
        f'  "m": {emb.m},\n'
        f'  "n": {emb.n},\n'
        f'  "points": {body},\n'
        f'  "graph_hash": {json.dumps(graph_hash)}\n'
        "}\n"
    )


def embedding_from_json(text: str) -> tuple[Embedding, str | None]:
    """Parse an embedding document; returns (embedding, graph_hash)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EmbeddingFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise EmbeddingFormatError("top level must be an object")
    for key in ("m", "points"):
        if key not in doc:
            raise EmbeddingFormatError(f"missing field {key!r}")
    m = doc["m"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise EmbeddingFormatError("'m' must be a positive integer")
    points = doc["points"]
    if not isinstance(points, list):
        raise EmbeddingFormatError("'points' must be a list")
    for i, p in enumerate(points):
        if (not isinstance(p, list) or len(p) != 3
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in p)):
            raise EmbeddingFormatError(f"point {i} must be a list of 3 integers")
    if "n" in doc and doc["n"] != len(points):
        raise EmbeddingFormatError(f"'n' is {doc['n']} but {len(points)} points are listed")
    graph_hash = doc.get("graph_hash")
    if graph_hash is not None and not isinstance(graph_hash, str):
        raise EmbeddingFormatError("'graph_hash' must be a string or null")
    return Embedding.from_points(m, points), graph_hash
