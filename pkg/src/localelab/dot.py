"""Deterministic DOT export of Hasse diagrams.

Frames draw bottom-up by the cover relation.  Assemblies mark closed
sublocales as boxes, open ones as ellipses (closed wins when both), and
one-point sublocales of primes are shaded.  Node order is lexicographic
in the member lists so the output is stable for golden-file tests.
"""

from __future__ import annotations

from . import frames as fr
from . import sublocales as subl


def _quote(s):
    return '"' + s.replace('"', r'\"') + '"'


def frame_dot(frame, name="frame"):
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in range(frame.n):
        lines.append(f"  n{i} [label={_quote(frame.labels[i])}];")
    for i in range(frame.n):
        for j in range(frame.n):
            if frame.covers[i, j]:
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def assembly_dot(assembly, name="assembly"):
    frame = assembly.frame
    closed = {subl.closed_sublocale(frame, a).mask for a in range(frame.n)}
    opens = {subl.open_sublocale(frame, a).mask for a in range(frame.n)}
    shaded = {subl.Sublocale(frame, {frame.top, p}).mask
              for p in fr.primes(frame)}
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, s in enumerate(assembly):
        attrs = [f"label={_quote(repr(s))}"]
        if s.mask in closed:
            attrs.append("shape=box")
        elif s.mask in opens:
            attrs.append("shape=ellipse")
        if s.mask in shaded:
            attrs.append("style=filled")
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    # cover relation of the inclusion order
    k = len(assembly)
    for i in range(k):
        for j in range(k):
            if i == j or not assembly[i].members < assembly[j].members:
                continue
            if not any(assembly[i].members < assembly[m].members
                       < assembly[j].members for m in range(k)):
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def space_dot(space, name="space"):
    """Specialization preorder, drawn on equivalence classes of points."""
    m = space.points
    below = [[all(y in u for u in space.opens if x in u) for y in range(m)]
             for x in range(m)]   # below[x][y]: x in closure of {y}
    classes = []
    assigned = [None] * m
    for x in range(m):
        if assigned[x] is None:
            cls = [y for y in range(m) if below[x][y] and below[y][x]]
            for y in cls:
                assigned[y] = len(classes)
            classes.append(cls)
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, cls in enumerate(classes):
        label = "=".join(str(x) for x in sorted(cls))
        lines.append(f"  n{i} [label={_quote(label)}];")

    def class_lt(i, j):
        return i != j and below[classes[i][0]][classes[j][0]]

    for i in range(len(classes)):
        for j in range(len(classes)):
            if class_lt(i, j) and not any(
                    class_lt(i, k) and class_lt(k, j)
                    for k in range(len(classes))):
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
