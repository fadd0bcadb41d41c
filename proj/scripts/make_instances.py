#!/usr/bin/env python3
"""Regenerate the bundled DIMACS clique benchmark instances.

johnson-n-w-d: vertices are the w-element subsets of {1..n} in lexicographic
order; two vertices are adjacent when their binary indicator vectors differ
in at least d positions.

hamming-n-d: vertices are the binary words of length n in numeric order
(vertex id = word + 1); two vertices are adjacent when their Hamming
distance is at least d.

MANN_a9: clique form of the stable-set translation of the Steiner triple
covering problem on 9 points. Vertices 1..9 stand for the 9 points (columns)
and vertices 10..45 for the 36 (triple, point) incidences, listed triple by
triple with the 12 triples in lexicographic order. In the translation a
point vertex conflicts with its own four incidences and the three incidences
of a triple conflict pairwise; the instance is the complement of that
conflict graph (45 vertices, 918 edges).
"""

import itertools
import os

OUT = os.path.join(os.path.dirname(__file__), os.pardir, "data")


def write_clq(name, n, edges, description):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        f.write(f"c {name}\n")
        f.write(f"c {description}\n")
        f.write(f"p edge {n} {len(edges)}\n")
        for u, v in edges:
            f.write(f"e {u} {v}\n")
    print(f"{name}: {n} vertices, {len(edges)} edges")


def johnson(n, w, d):
    subsets = list(itertools.combinations(range(n), w))
    edges = []
    for i, a in enumerate(subsets):
        for j in range(i + 1, len(subsets)):
            b = subsets[j]
            dist = len(set(a) ^ set(b))
            if dist >= d:
                edges.append((i + 1, j + 1))
    return len(subsets), edges


def hamming(n, d):
    size = 1 << n
    edges = []
    for x in range(size):
        for y in range(x + 1, size):
            if bin(x ^ y).count("1") >= d:
                edges.append((x + 1, y + 1))
    return size, edges


def steiner_triples_9():
    """The 12 triples of the unique Steiner triple system on 9 points
    (the lines of the 3x3 affine plane), listed lexicographically."""
    pts = range(9)
    triples = []
    for a, b, c in itertools.combinations(pts, 3):
        rows = {a // 3, b // 3, c // 3}
        cols = {a % 3, b % 3, c % 3}
        if len(rows) == 1 and len(cols) == 3:
            triples.append((a, b, c))  # grid row
        elif len(rows) == 3 and len(cols) == 1:
            triples.append((a, b, c))  # grid column
        elif len(rows) == 3 and len(cols) == 3:
            triples.append((a, b, c))  # transversal line
    return sorted(triples)


def mann_a9():
    triples = steiner_triples_9()
    assert len(triples) == 12
    n = 9 + 3 * len(triples)
    point_vertex = list(range(9))                    # ids 0..8
    inc_vertex = {}                                  # (triple idx, point) -> id
    nxt = 9
    for i, t in enumerate(triples):
        for p in t:
            inc_vertex[(i, p)] = nxt
            nxt += 1
    conflict = set()
    for i, t in enumerate(triples):
        for a, b in itertools.combinations(t, 2):
            conflict.add((inc_vertex[(i, a)], inc_vertex[(i, b)]))
        for p in t:
            conflict.add(tuple(sorted((point_vertex[p], inc_vertex[(i, p)]))))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in conflict:
                edges.append((u + 1, v + 1))
    return n, edges


def main():
    os.makedirs(OUT, exist_ok=True)
    nv, edges = johnson(8, 2, 4)
    write_clq("johnson8-2-4.clq", nv, edges,
              "johnson graph: 2-subsets of an 8-set, adjacent when distance >= 4")
    nv, edges = hamming(6, 2)
    write_clq("hamming6-2.clq", nv, edges,
              "hamming graph: 6-bit words, adjacent when distance >= 2")
    nv, edges = hamming(6, 4)
    write_clq("hamming6-4.clq", nv, edges,
              "hamming graph: 6-bit words, adjacent when distance >= 4")
    nv, edges = mann_a9()
    write_clq("MANN_a9.clq", nv, edges,
              "clique form of the Steiner triple covering problem on 9 points")


if __name__ == "__main__":
    main()
