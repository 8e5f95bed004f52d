"""
Edge-list text format.

One `u v` pair per line, whitespace separated. Text after `#` is a comment.
Duplicate and reversed edges collapse; self-loops are a parse error. A
`# n: <count>` comment fixes the vertex count when labels are integers, which
lets graphs with isolated vertices round-trip.

Usage:
    from lib.graph.edgelist import read_edge_list, format_edge_list

    graph, labels = read_edge_list('paley13.el')
"""

import re

from lib.utils.errors import GraphFormatError

from .graph import Graph

_VERTEX_COUNT = re.compile(r'^#\s*n\s*[:=]\s*(\d+)\s*$')


def _is_int(label):
    return re.fullmatch(r'[+-]?\d+', label) is not None


def parse_edge_list(text):
    """
    Parse edge-list text.

    Args:
        text: File contents

    Returns:
        tuple: (Graph, list of labels where labels[i] names vertex i)

    Raises:
        GraphFormatError: On malformed lines or self-loops (line number attached)
    """
    declared_n = None
    pairs = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        header = _VERTEX_COUNT.match(stripped)
        if header:
            declared_n = int(header.group(1))
            continue
        body = stripped.split('#', 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 vertex labels, found {len(tokens)}", line_number)
        u, v = tokens
        if u == v or (_is_int(u) and _is_int(v) and int(u) == int(v)):
            raise GraphFormatError(f"self-loop on vertex {u}", line_number)
        pairs.append((u, v, line_number))

    labels = {token for u, v, _ in pairs for token in (u, v)}
    numeric = all(_is_int(label) for label in labels)
    if numeric and declared_n is not None:
        for u, v, line_number in pairs:
            for label in (u, v):
                if not 0 <= int(label) < declared_n:
                    raise GraphFormatError(
                        f"vertex {label} outside declared range 0..{declared_n - 1}", line_number
                    )
        ordered = [str(i) for i in range(declared_n)]
        index = {i: i for i in range(declared_n)}
        edges = [(index[int(u)], index[int(v)]) for u, v, _ in pairs]
        return Graph.from_edges(declared_n, edges), ordered

    if numeric:
        ordered_values = sorted({int(label) for label in labels})
        position = {value: i for i, value in enumerate(ordered_values)}
        edges = [(position[int(u)], position[int(v)]) for u, v, _ in pairs]
        return Graph.from_edges(len(ordered_values), edges), [str(x) for x in ordered_values]

    ordered = sorted(labels)
    position = {label: i for i, label in enumerate(ordered)}
    edges = [(position[u], position[v]) for u, v, _ in pairs]
    return Graph.from_edges(len(ordered), edges), ordered


def read_edge_list(path):
    """Read and parse an edge-list file."""
    with open(path, encoding='utf-8') as handle:
        return parse_edge_list(handle.read())


def format_edge_list(g, header_lines=()):
    """Render g as edge-list text; header lines become `#` comments."""
    lines = [f"# {line}" for line in header_lines]
    lines.append(f"# n: {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return '\n'.join(lines) + '\n'


def write_edge_list(path, g, header_lines=()):
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(format_edge_list(g, header_lines))
