"""Line-oriented text format for signed graphs.

::

    # comment
    n 3
    e 0 1 +
    e 1 2 -
    l 0 1,-2        (optional vertex label)
    c 0 1           (optional colour of a vertex)

Vertices are 0-indexed.  The writer sorts edges by ``(u, v)`` with ``+``
before ``-``.
"""

from __future__ import annotations

from pathlib import Path

from .core import GraphError, SignedGraph, parse_sign, sign_char


def format_label(lab) -> str:
    if lab is None:
        return ""
    if hasattr(lab, "elements"):
        return ",".join(str(x) for x in lab.elements)
    return str(lab)


def dumps(G: SignedGraph, coloring=None, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {G.n}")
    for u, v, s in G.sorted_edges():
        lines.append(f"e {u} {v} {sign_char(s)}")
    if G.labels is not None:
        for v, lab in enumerate(G.labels):
            if lab is not None:
                lines.append(f"l {v} {format_label(lab)}")
    if coloring is not None:
        for v, c in enumerate(coloring):
            lines.append(f"c {v} {c}")
    return "\n".join(lines) + "\n"


def loads(text: str, with_coloring: bool = False):
    """Parse the text format.  Labels are kept as strings.

    Returns the graph, or ``(graph, colours)`` when ``with_coloring`` is set
    (``colours`` is ``None`` if the file carries none).
    """
    n = None
    edges, labels, colors = [], {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "n":
                if n is not None:
                    raise GraphError("duplicate header")
                n = int(parts[1])
            elif tag == "e":
                edges.append((int(parts[1]), int(parts[2]), parse_sign(parts[3])))
            elif tag == "l":
                labels[int(parts[1])] = parts[2] if len(parts) > 2 else ""
            elif tag == "c":
                colors[int(parts[1])] = int(parts[2])
            else:
                raise GraphError(f"unknown record {tag!r}")
        except (IndexError, ValueError) as exc:
            raise GraphError(f"line {lineno}: {raw!r}: {exc}") from None
    if n is None:
        raise GraphError("missing 'n <N>' header")
    lab = None
    if labels:
        lab = [labels.get(v) for v in range(n)]
    G = SignedGraph(n, edges, lab)
    if not with_coloring:
        return G
    col = None
    if colors:
        if set(colors) != set(range(n)):
            raise GraphError("colouring must cover every vertex")
        col = [colors[v] for v in range(n)]
    return G, col


def read_graph(path, with_coloring: bool = False):
    return loads(Path(path).read_text(encoding="utf-8"), with_coloring)


def write_graph(G: SignedGraph, path, coloring=None, comments=()) -> None:
    Path(path).write_text(dumps(G, coloring, comments), encoding="utf-8")
