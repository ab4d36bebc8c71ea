#!/usr/bin/env python3
"""Regenerate the bundled edge lists in src/drgcert/data/.

Each graph is constructed from first principles, validated against its
known order, girth and intersection array, and only then written out.
Run from the repository root:

    PYTHONPATH=src python scripts/build_graph_data.py
"""

from __future__ import annotations

import sys
from itertools import combinations, product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from drgcert.drg import IntersectionArray, intersection_array
from drgcert.graph import Graph, from_edge_list, girth, is_connected
from drgcert.io import write_graph

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "drgcert" / "data"


def check(g: Graph, order: int, want_girth: int, array: str) -> bool:
    if g.n != order or not is_connected(g):
        return False
    if girth(g) != want_girth:
        return False
    ia = intersection_array(g)
    return isinstance(ia, IntersectionArray) and str(ia) == array


def require(g: Graph, order: int, want_girth: int, array: str, name: str) -> Graph:
    if not check(g, order, want_girth, array):
        raise SystemExit(f"{name}: constructed graph failed validation")
    return g


def pappus() -> Graph:
    """Incidence graph of the Pappus configuration: the 9 points of the
    affine plane AG(2,3) and the 9 lines not in one fixed parallel class.
    Points are 0..8 (point (x,y) -> 3x+y), lines are 9..17."""
    directions = [(1, 0), (1, 1), (1, 2)]  # direction (0,1) dropped
    lines = set()
    for dx, dy in directions:
        for x, y in product(range(3), repeat=2):
            line = frozenset(((x + t * dx) % 3, (y + t * dy) % 3) for t in range(3))
            lines.add(line)
    assert len(lines) == 9
    edges = []
    for i, line in enumerate(sorted(lines, key=sorted)):
        for x, y in line:
            edges.append((3 * x + y, 9 + i))
    return require(from_edge_list(18, edges), 18, 6, "{3,2,2,1;1,1,2,3}", "pappus")


def coxeter() -> Graph:
    """Induced subgraph of the Kneser graph K(7,3) on the 28 triples that
    are not lines of the Fano plane."""
    fano = {frozenset({i % 7, (i + 1) % 7, (i + 3) % 7}) for i in range(7)}
    triples = [frozenset(c) for c in combinations(range(7), 3) if frozenset(c) not in fano]
    assert len(triples) == 28
    edges = []
    for i in range(28):
        for j in range(i + 1, 28):
            if not triples[i] & triples[j]:
                edges.append((i, j))
    return require(from_edge_list(28, edges), 28, 7, "{3,2,2,1;1,1,1,2}", "coxeter")


def lcf_graph(n: int, pattern: list[int], repeats: int) -> Graph:
    assert n == len(pattern) * repeats
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i in range(n):
        j = (i + pattern[i % len(pattern)]) % n
        edges.add((min(i, j), max(i, j)))
    return from_edge_list(n, edges)


FOSTER_ARRAY = "{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}"


def foster() -> Graph:
    """Foster graph from its LCF description, with a brute search over
    antisymmetric LCF patterns as a fallback."""
    primary = lcf_graph(90, [17, -9, 37, -37, 9, -17], 15)
    if check(primary, 90, 10, FOSTER_ARRAY):
        return primary
    # fallback: patterns [a,-b,c,-c,b,-a]^15 with odd chord lengths
    for a, b, c in product(range(3, 45, 2), repeat=3):
        g = lcf_graph(90, [a, -b, c, -c, b, -a], 15)
        if check(g, 90, 10, FOSTER_ARRAY):
            return g
    raise SystemExit("foster: no LCF candidate passed validation")


BIGGS_SMITH_ARRAY = "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"


def biggs_smith() -> Graph:
    """Biggs-Smith graph as a Z_17 cover of the H-shaped quotient: hub
    classes U, V and loop classes A, B, C, D with voltages (a, b, c, d).

    Classes occupy index blocks of 17: A=0.., B=17.., C=34.., D=51..,
    U=68.., V=85...  The graph with this intersection array is unique, so
    any voltage choice that passes validation is the right graph.
    """

    def candidate(a: int, b: int, c: int, d: int) -> Graph:
        A, B, C, D, U, V = (17 * t for t in range(6))
        edges = set()
        for i in range(17):
            edges.add(tuple(sorted((U + i, V + i))))
            edges.add(tuple(sorted((U + i, A + i))))
            edges.add(tuple(sorted((U + i, B + i))))
            edges.add(tuple(sorted((V + i, C + i))))
            edges.add(tuple(sorted((V + i, D + i))))
            for base, volt in ((A, a), (B, b), (C, c), (D, d)):
                edges.add(tuple(sorted((base + i, base + (i + volt) % 17))))
        return from_edge_list(102, edges)

    tried = [(1, 2, 4, 8)]
    tried += [q for q in product(range(1, 9), repeat=4) if q != (1, 2, 4, 8)]
    for quad in tried:
        g = candidate(*quad)
        if check(g, 102, 9, BIGGS_SMITH_ARRAY):
            print(f"  biggs_smith voltages: {quad}")
            return g
    raise SystemExit("biggs_smith: no voltage assignment passed validation")


COMMENTS = {
    "pappus": "Pappus graph: point-line incidence of AG(2,3) minus one parallel class",
    "coxeter": "Coxeter graph: non-Fano triples of a 7-set, adjacent when disjoint",
    "foster": "Foster graph: LCF [17,-9,37,-37,9,-17]^15",
    "biggs_smith": "Biggs-Smith graph: Z_17 cover of the H-shaped voltage graph",
}


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    for name, builder in (
        ("pappus", pappus),
        ("coxeter", coxeter),
        ("foster", foster),
        ("biggs_smith", biggs_smith),
    ):
        g = builder()
        path = DATA_DIR / f"{name}.edges"
        write_graph(g, path, "edges", comment=COMMENTS[name])
        print(f"wrote {path} ({g.n} vertices, {g.num_edges} edges)")


if __name__ == "__main__":
    main()
