#!/usr/bin/env python3
"""Writes data/polytopes/*.json from facet inequalities <n, x> >= offset.

Vertices and edges are computed exactly; the polytopes are simple, so two
vertices span an edge iff they share two facets.
"""
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

# name -> (facets as (normal, offset), xi, expected row)
POLYTOPES = {
    "simplex": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((-1, -1, -1), -4)], (1, 1, 1), "III-1"),
    "v7": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((-1, -1, -1), -4), ((0, 0, -1), -2)], (0, -1, 0), "III-2"),
    "cube": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((-1, 0, 0), -2), ((0, -1, 0), -2), ((0, 0, -1), -2)],
             (1, 1, 1), "I-2"),
    "p1xp2": ([((0, 1, 0), 0), ((0, -1, 0), -2), ((-1, 0, 0), 0), ((0, 0, -1), 0), ((1, 0, 1), -3)], (0, -1, 1), "II-3.2"),
    "p_o_o2": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((0, 0, -1), -2), ((-1, -1, -2), -5)], (1, 1, 1), "II-3.1"),
    "i3": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((0, 0, -1), -2), ((-1, 0, -1), -3), ((0, -1, -1), -3)],
           (1, 1, 1), "I-3"),
    "ii4_1": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((0, -1, 0), -2), ((0, 0, -1), -2), ((-1, 0, -1), -3),
               ((0, -1, -1), -3)], (-1, 1, 0), "II-4.1"),
    "ii4_2": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((-1, 0, 0), -2), ((0, -1, 0), -2), ((0, 0, -1), -2),
               ((-1, 0, -1), -3)], (1, -1, 1), "II-4.2"),
    "iii4_1": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((0, 0, -1), -2), ((-1, -1, -1), -4), ((-1, -1, -2), -5)],
               (1, 1, 1), "III-4.1"),
    "iii4_2": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((0, 0, -1), -2), ((-1, -1, -1), -4), ((1, 1, 0), 1)],
               (-1, 0, 0), "III-4.2"),
    "iii4_3": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((0, 0, -1), -2), ((-1, -1, -1), -4), ((-1, -1, 0), -3)],
               (1, 1, 1), "III-4.3"),
    "iii3_1": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((-1, -1, -1), -4), ((-1, -1, 0), -3)], (1, 1, 1), "III-3.1"),
    "iii4_5": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((0, 0, -1), -2), ((-1, -1, -1), -4), ((1, 1, 0), 1),
                ((1, 1, 1), 2)], (-1, 0, 0), "III-4.5"),
    # product of a line with the one-point blow-up of the plane; no printed row
    "p1xf1": ([((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((0, 0, -1), -2), ((-1, -1, 0), -3), ((0, -1, 0), -2)],
              (1, 1, 1), ""),
}


def solve3(rows, rhs):
    m = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(3):
        p = next((r for r in range(c, 3) if m[r][c] != 0), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        for r in range(3):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [m[i][3] / m[i][i] for i in range(3)]


def build(name, facets):
    dot = lambda n, v: sum(a * b for a, b in zip(n, v))
    verts = {}
    for tri in itertools.combinations(range(len(facets)), 3):
        x = solve3([facets[i][0] for i in tri], [facets[i][1] for i in tri])
        if x is None or any(dot(n, x) < o for n, o in facets):
            continue
        if any(c.denominator != 1 for c in x):
            sys.exit(f"{name}: non-integral vertex {x}")
        verts.setdefault(tuple(int(c) for c in x), set()).update(tri)
    vlist = sorted(verts)
    tight = [frozenset(i for i, (n, o) in enumerate(facets) if dot(n, v) == o) for v in vlist]
    for v, t in zip(vlist, tight):
        if len(t) != 3:
            sys.exit(f"{name}: vertex {v} is not simple")
    edges = [[i, j] for i, j in itertools.combinations(range(len(vlist)), 2) if len(tight[i] & tight[j]) == 2]
    return {
        "name": name,
        "vertices": [list(v) for v in vlist],
        "edges": edges,
        "facets": [{"normal": list(n), "offset": o} for n, o in facets],
        "reflexive": True,
    }


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "polytopes")
    out.mkdir(parents=True, exist_ok=True)
    for name, (facets, xi, label) in POLYTOPES.items():
        doc = build(name, facets)
        doc["xi"] = list(xi)
        doc["label"] = label
        (out / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        print(f"{name}: {len(doc['vertices'])} vertices, {len(doc['edges'])} edges")


if __name__ == "__main__":
    main()
