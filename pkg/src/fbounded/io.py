"""Instance files and ``key = value`` report documents.

Instance format::

    p fbg <n> <m>
    w <vertex> <f-value>      # n lines, ascending vertex id
    e <u> <v>                 # m lines, repeats encode parallel edges

``#`` starts a comment line and blank lines are ignored.
"""
from __future__ import annotations

import os
from collections.abc import Iterable, Mapping, Sequence

from .multigraph import MAX_VERTICES, Multigraph, VertexSet, members, vertex_set


class ParseError(ValueError):
    def __init__(self, lineno: int, cause: str):
        super().__init__(f"line {lineno}: {cause}")
        self.lineno = lineno
        self.cause = cause


def _ints(tokens: list[str], lineno: int, what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"non-integer field in {what} line: {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> tuple[Multigraph, tuple[int, ...]]:
    n = m = None
    header_line = 0
    weights: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind, rest = tokens[0], tokens[1:]
        if n is None:
            if kind != "p" or len(rest) != 3 or rest[0] != "fbg":
                raise ParseError(lineno, "expected header 'p fbg <n> <m>'")
            n, m = _ints(rest[1:], lineno, "header")
            if not 0 <= n <= MAX_VERTICES:
                raise ParseError(lineno, f"vertex count {n} outside 0..{MAX_VERTICES}")
            if m < 0:
                raise ParseError(lineno, f"negative edge count {m}")
            header_line = lineno
            continue
        if kind == "p":
            raise ParseError(lineno, "duplicate header line")
        if kind == "w":
            if len(rest) != 2:
                raise ParseError(lineno, "weight line must be 'w <vertex> <f-value>'")
            v, fv = _ints(rest, lineno, "weight")
            if edges:
                raise ParseError(lineno, "weight line after edge lines")
            if not 0 <= v < n:
                raise ParseError(lineno, f"vertex id {v} out of range 0..{n - 1}")
            if v < len(weights):
                raise ParseError(lineno, f"duplicate weight line for vertex {v}")
            if v != len(weights):
                raise ParseError(lineno, f"weight lines must list vertices in ascending order; expected {len(weights)}, got {v}")
            if fv < 0:
                raise ParseError(lineno, f"negative weight {fv} for vertex {v}")
            weights.append(fv)
        elif kind == "e":
            if len(rest) != 2:
                raise ParseError(lineno, "edge line must be 'e <u> <v>'")
            u, v = _ints(rest, lineno, "edge")
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(lineno, f"vertex id {x} out of range 0..{n - 1}")
            if u == v:
                raise ParseError(lineno, f"loop edge at vertex {u}")
            if len(edges) == m:
                raise ParseError(lineno, f"more edge lines than the declared {m}")
            edges.append((u, v))
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    if n is None:
        raise ParseError(0, "missing header 'p fbg <n> <m>'")
    if len(weights) != n:
        raise ParseError(header_line, f"count mismatch: header declares {n} vertices, found {len(weights)} weight lines")
    if len(edges) != m:
        raise ParseError(header_line, f"count mismatch: header declares {m} edges, found {len(edges)} edge lines")
    return Multigraph(n, tuple(edges)), tuple(weights)


def read_instance(path: str | os.PathLike) -> tuple[Multigraph, tuple[int, ...]]:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def format_instance(G: Multigraph, f: Sequence[int]) -> str:
    lines = [f"p fbg {G.n} {G.m}"]
    lines += [f"w {v} {int(x)}" for v, x in enumerate(f)]
    lines += [f"e {u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def write_instance(path: str | os.PathLike, G: Multigraph, f: Sequence[int]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_instance(G, f))


# key = value documents

def format_ids(ids: Iterable[int] | VertexSet) -> str:
    if isinstance(ids, int):
        ids = members(ids)
    return ",".join(str(i) for i in ids)


def parse_ids(value: str) -> list[int]:
    value = value.strip()
    return [int(x) for x in value.split(",")] if value else []


def format_groups(groups: Iterable[VertexSet]) -> str:
    """Vertex-set lists: groups separated by ``;``, ids by ``,``."""
    return ";".join(format_ids(g) for g in groups)


def parse_groups(value: str) -> list[VertexSet]:
    value = value.strip()
    return [vertex_set(parse_ids(g)) for g in value.split(";")] if value else []


def dump_kv(doc: Mapping[str, object]) -> str:
    return "".join(f"{k} = {v}\n" for k, v in doc.items())


def load_kv(text: str) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(lineno, f"expected 'key = value', got {line!r}")
        out[key.strip()] = value.strip()
    return out
