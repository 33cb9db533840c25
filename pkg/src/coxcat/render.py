"""Plain-text renderings: arc diagrams, lattice-path grids, labeled tableaux."""

from __future__ import annotations

from .core import SetPartition, arcs_in_order
from .encode import LatticePath, ShiftedTableau
from .models import order_nc_b
from .signed import SignedPartition


def render_arcs(p: SetPartition | SignedPartition) -> str:
    """Labels on one line, consecutive-element arcs drawn with dots and dashes.

    Signed partitions are drawn with respect to the order 1..n, -1..-n.
    """
    if isinstance(p, SignedPartition):
        order = order_nc_b(p.n)
    else:
        order = tuple(range(1, p.n + 1))
    labels = [str(x) for x in order]
    anchors = []
    pos = 0
    for lab in labels:
        anchors.append(pos)
        pos += len(lab) + 1
    width = max(pos - 1, 0)
    arcs = sorted(arcs_in_order(p.blocks, order), key=lambda e: (e[1] - e[0], e[0]))
    levels: list[list[tuple[int, int]]] = []
    placed: list[tuple[int, int, int]] = []
    for a, b in arcs:
        lvl = 0
        while any(max(a, c) < min(b, d) for c, d in (levels[lvl] if lvl < len(levels) else [])):
            lvl += 1
        if lvl == len(levels):
            levels.append([])
        levels[lvl].append((a, b))
        placed.append((lvl, a, b))
    lines = [[" "] * width for _ in levels]
    for lvl, a, b in placed:
        row = lines[lvl]
        ca, cb = anchors[a], anchors[b]
        for c in range(ca + 1, cb):
            row[c] = "-"
        row[ca] = "."
        row[cb] = "."
    out = ["".join(row).rstrip() for row in reversed(lines)]
    out.append(" ".join(labels))
    return "\n".join(out)


def render_path(p: LatticePath) -> str:
    """Grid of lattice points from y = n down to 0; 'o' marks the path."""
    n = p.n
    on_path = set(p.points())
    rows = []
    for y in range(n, -1, -1):
        rows.append(" ".join("o" if (x, y) in on_path else "." for x in range(n + 1)))
    return "\n".join(rows)


def render_tableau(t: ShiftedTableau) -> str:
    """Row labels on the left, column labels on top, 0/1 cells."""
    cols = t.columns()
    colw = max((len(str(c)) for c in cols), default=1)
    roww = max((len(str(r)) for r in t.rows()), default=1)
    head = " " * (roww + 2) + " ".join(str(c).rjust(colw) for c in cols)
    lines = [head.rstrip()]
    for r in t.rows():
        cells = []
        for c in cols:
            if t.cell_exists(r, c):
                cells.append(("1" if (r, c) in t.ones else "0").rjust(colw))
            else:
                break
        line = str(r).rjust(roww) + " | " + " ".join(cells)
        lines.append(line.rstrip())
    return "\n".join(lines)
