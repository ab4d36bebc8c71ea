"""Independent reimplementations used as test oracles.

Everything here is deliberately written with different algorithms than
the package: Floyd-Warshall instead of BFS, explicit cycle enumeration
instead of cross-edge detection, full permutation filtering instead of
refinement search.  Slow is fine; these run on small graphs only.
"""

from itertools import combinations, permutations
from random import Random

from drgcert.graph import Graph

INF = float("inf")


def floyd_warshall(g: Graph):
    n = g.n
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        dist[u][v] = 1
        dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def enumerate_girth(g: Graph):
    """Shortest cycle length by enumerating simple cycles.

    Cycles are generated from their smallest vertex s by extending simple
    paths through vertices larger than s; a path of length >= 2 whose end
    is adjacent to s closes a cycle.  Paths at the current best length
    are pruned.
    """
    best = None

    def extend(s, path, on_path):
        nonlocal best
        v = path[-1]
        if best is not None and len(path) >= best:
            return
        for w in g.neighbors(v):
            if w == s and len(path) >= 3:
                if best is None or len(path) < best:
                    best = len(path)
            elif w > s and w not in on_path:
                on_path.add(w)
                path.append(w)
                extend(s, path, on_path)
                path.pop()
                on_path.remove(w)

    for s in range(g.n):
        extend(s, [s], {s})
    return best


def brute_automorphism_count(g: Graph) -> int:
    """Count adjacency-preserving permutations one by one.  n <= 8."""
    if g.n > 8:
        raise ValueError("brute force capped at 8 vertices")
    edges = {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
    count = 0
    for p in permutations(range(g.n)):
        if all((p[u], p[v]) in edges for u, v in g.edges):
            count += 1
    return count


def recount_distance_regular(g: Graph) -> bool:
    """Distance-regularity by tabulating (c, a, b) for every vertex pair."""
    n = g.n
    if n == 0:
        return False
    dist = floyd_warshall(g)
    if any(dist[0][j] == INF for j in range(n)):
        return False
    degrees = {len(g.neighbors(v)) for v in range(n)}
    if len(degrees) != 1:
        return False
    seen = {}
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            i = dist[u][v]
            c = a = b = 0
            for w in g.neighbors(v):
                if dist[u][w] == i - 1:
                    c += 1
                elif dist[u][w] == i:
                    a += 1
                else:
                    b += 1
            if i in seen and seen[i] != (c, a, b):
                return False
            seen[i] = (c, a, b)
    return True


def random_connected_graph(rng: Random, n: int) -> Graph:
    """Connected G(n, p) sample; p varies so sparse and dense cases occur."""
    while True:
        p = rng.uniform(0.25, 0.75)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = Graph(n, edges)
        stack, seen = [0], {0}
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == n:
            return g
