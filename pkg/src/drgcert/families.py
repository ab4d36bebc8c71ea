"""Constructors for the distance-regular graphs handled by this package.

A graph is addressed by a colon-separated spec string such as

    complete:4       hamming:2:4      johnson:6:3      paley:17
    cycle:6          cube:3           kneser:5:2       named:heawood
    complete_bipartite:3              odd:4            crown:5

Parametric families are built directly.  Named graphs are either built
inline or loaded from bundled edge lists, and every named graph is checked
against its known order and intersection array the first time it is built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations, product

from .drg import IntersectionArray, intersection_array
from .graph import (
    Graph,
    bipartite_complement,
    from_edge_list,
    girth,
    line_graph,
)
from .io import from_edge_text

FAMILIES = (
    "complete",
    "cycle",
    "complete_bipartite",
    "crown",
    "cube",
    "hamming",
    "johnson",
    "kneser",
    "odd",
    "paley",
    "named",
)

# families where the single parameter is called n, for labels
_ARITY = {
    "complete": 1,
    "cycle": 1,
    "complete_bipartite": 1,
    "crown": 1,
    "cube": 1,
    "hamming": 2,
    "johnson": 2,
    "kneser": 2,
    "odd": 1,
    "paley": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A parsed family spec: family id plus integer parameters, or a
    registered graph name for the named family."""

    family: str
    params: tuple[int, ...] = ()
    name: str | None = None

    def key(self) -> str:
        if self.family == "named":
            return f"named:{self.name}"
        return ":".join([self.family] + [str(p) for p in self.params])

    def label(self) -> str:
        f, p = self.family, self.params
        if f == "named":
            return _NAMED[self.name].label
        if f == "complete":
            return f"K_{p[0]}"
        if f == "cycle":
            return f"C_{p[0]}"
        if f == "complete_bipartite":
            return f"K_{{{p[0]},{p[0]}}}"
        if f == "crown":
            return f"crown graph on {2 * p[0]} vertices"
        if f == "cube":
            return f"cube Q_{p[0]}"
        if f == "hamming":
            return f"Hamming graph H({p[0]},{p[1]})"
        if f == "johnson":
            return f"Johnson graph J({p[0]},{p[1]})"
        if f == "kneser":
            return f"Kneser graph K({p[0]},{p[1]})"
        if f == "odd":
            return f"odd graph O_{p[0]}"
        return f"Paley graph P_{p[0]}"


def parse_family(text: str) -> FamilySpec:
    """Parse a spec string like "hamming:2:4" or "named:heawood"."""
    parts = text.strip().split(":")
    family = parts[0].strip().lower()
    if family == "named":
        if len(parts) != 2:
            raise ValueError(f"named spec needs exactly one name: {text!r}")
        name = _canonical_name(parts[1])
        if name not in _NAMED:
            known = ", ".join(sorted(_NAMED))
            raise ValueError(f"unknown graph name {parts[1]!r} (known: {known})")
        return FamilySpec("named", (), name)
    if family not in _ARITY:
        raise ValueError(f"unknown family {family!r}")
    if len(parts) - 1 != _ARITY[family]:
        raise ValueError(
            f"family {family} takes {_ARITY[family]} parameter(s), got {text!r}"
        )
    try:
        params = tuple(int(p) for p in parts[1:])
    except ValueError:
        raise ValueError(f"non-integer parameter in {text!r}") from None
    spec = FamilySpec(family, params)
    _validate_params(spec)
    return spec


def _canonical_name(raw: str) -> str:
    return re.sub(r"[\s\-]+", "_", raw.strip().lower())


def _validate_params(spec: FamilySpec) -> None:
    f, p = spec.family, spec.params
    if f == "complete" and p[0] < 1:
        raise ValueError("complete:n needs n >= 1")
    if f == "cycle" and p[0] < 3:
        raise ValueError("cycle:n needs n >= 3")
    if f == "complete_bipartite" and p[0] < 1:
        raise ValueError("complete_bipartite:n needs n >= 1")
    if f == "crown" and p[0] < 3:
        raise ValueError("crown:n needs n >= 3")
    if f == "cube" and p[0] < 1:
        raise ValueError("cube:d needs d >= 1")
    if f == "hamming" and (p[0] < 1 or p[1] < 1):
        raise ValueError("hamming:d:q needs d >= 1 and q >= 1")
    if f == "johnson" and not (1 <= p[1] < p[0]):
        raise ValueError("johnson:n:k needs 1 <= k < n")
    if f == "kneser" and not (p[1] >= 1 and p[0] >= 2 * p[1]):
        raise ValueError("kneser:n:k needs k >= 1 and n >= 2k")
    if f == "odd" and p[0] < 2:
        raise ValueError("odd:k needs k >= 2")
    if f == "paley":
        _paley_field(p[0])


def build(spec: FamilySpec | str) -> Graph:
    """Build the graph for a spec, caching by spec key."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    return _build_cached(spec.key())


def label_for(spec: FamilySpec | str) -> str:
    if isinstance(spec, str):
        spec = parse_family(spec)
    return spec.label()


def list_named() -> list[str]:
    return sorted(_NAMED)


@lru_cache(maxsize=None)
def _build_cached(key: str) -> Graph:
    spec = parse_family(key)
    f, p = spec.family, spec.params
    if f == "named":
        return _build_named(spec.name)
    if f == "complete":
        return complete_graph(p[0])
    if f == "cycle":
        return cycle_graph(p[0])
    if f == "complete_bipartite":
        return complete_bipartite_graph(p[0])
    if f == "crown":
        return crown_graph(p[0])
    if f == "cube":
        return hamming_graph(p[0], 2)
    if f == "hamming":
        return hamming_graph(p[0], p[1])
    if f == "johnson":
        return johnson_graph(p[0], p[1])
    if f == "kneser":
        return kneser_graph(p[0], p[1])
    if f == "odd":
        return odd_graph(p[0])
    return paley_graph(p[0])


# ---------------------------------------------------------------- families


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(n: int) -> Graph:
    """K_{n,n} with sides 0..n-1 and n..2n-1."""
    return from_edge_list(2 * n, [(i, n + j) for i in range(n) for j in range(n)])


def crown_graph(n: int) -> Graph:
    """K_{n,n} minus a perfect matching, n >= 3.  Equivalently the
    complement of two disjoint copies of K_n joined by a matching."""
    edges = [(i, n + j) for i in range(n) for j in range(n) if i != j]
    return from_edge_list(2 * n, edges)


def hamming_graph(d: int, q: int) -> Graph:
    """H(d,q): words of length d over q letters, adjacent when they differ
    in exactly one coordinate."""
    words = list(product(range(q), repeat=d))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(d):
            for letter in range(w[pos] + 1, q):
                other = w[:pos] + (letter,) + w[pos + 1 :]
                edges.append((index[w], index[other]))
    return from_edge_list(len(words), edges)


def johnson_graph(n: int, k: int) -> Graph:
    """J(n,k): k-subsets, adjacent when the intersection has size k-1."""
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    edges = []
    for i in range(len(subsets)):
        for j in range(i + 1, len(subsets)):
            if len(subsets[i] & subsets[j]) == k - 1:
                edges.append((i, j))
    return from_edge_list(len(subsets), edges)


def kneser_graph(n: int, k: int) -> Graph:
    """K(n,k): k-subsets, adjacent when disjoint."""
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    edges = []
    for i in range(len(subsets)):
        for j in range(i + 1, len(subsets)):
            if not subsets[i] & subsets[j]:
                edges.append((i, j))
    return from_edge_list(len(subsets), edges)


def odd_graph(k: int) -> Graph:
    """O_k: (k-1)-subsets of a (2k-1)-set, adjacent when disjoint."""
    return kneser_graph(2 * k - 1, k - 1)


def subset_labels(n: int, k: int) -> tuple[str, ...]:
    """Vertex labels for johnson/kneser/odd graphs, matching their vertex
    order: the k-subsets of {0..n-1} in lexicographic order."""
    return tuple("{" + ",".join(map(str, c)) + "}" for c in combinations(range(n), k))


def word_labels(d: int, q: int) -> tuple[str, ...]:
    return tuple("".join(map(str, w)) for w in product(range(q), repeat=d))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _paley_field(q: int):
    """Return (p, elements, mul) for GF(q), q an odd prime or the square of
    an odd prime with q = 1 mod 4.  Elements are pairs (a, b) = a + b*x."""
    if _is_prime(q):
        if q % 4 != 1:
            raise ValueError(f"paley:q needs q = 1 mod 4, got {q}")
        p = q
        elements = [(a, 0) for a in range(q)]

        def mul(u, v):
            return ((u[0] * v[0]) % p, 0)

        return p, elements, mul
    root = round(q**0.5)
    if root * root != q or not _is_prime(root) or root == 2:
        raise ValueError(f"paley:q needs q an odd prime or its square, got {q}")
    p = root
    # GF(p^2) = Z_p[x] / (x^2 - r) with r the smallest non-residue mod p
    residues = {(a * a) % p for a in range(1, p)}
    r = next(a for a in range(2, p) if a not in residues)
    elements = [(a, b) for b in range(p) for a in range(p)]

    def mul(u, v):
        a1, b1 = u
        a2, b2 = v
        return ((a1 * a2 + r * b1 * b2) % p, (a1 * b2 + a2 * b1) % p)

    return p, elements, mul


def paley_graph(q: int) -> Graph:
    """Paley graph on GF(q), q = 1 mod 4: vertices are field elements,
    adjacent when the difference is a nonzero square.

    For prime q the vertex index is the field element itself.  For q = p^2
    the element a + b*x has index a + b*p.
    """
    p, elements, mul = _paley_field(q)
    index = {e: i for i, e in enumerate(elements)}
    squares = {mul(e, e) for e in elements if e != (0, 0)}
    edges = set()
    for u in elements:
        for s in squares:
            v = ((u[0] + s[0]) % p, (u[1] + s[1]) % p)
            iu, iv = index[u], index[v]
            if iu < iv:
                edges.add((iu, iv))
    return from_edge_list(q, edges)


# ------------------------------------------------------------ named graphs


@dataclass(frozen=True)
class _NamedEntry:
    label: str
    order: int
    array: str
    girth: int | None
    from_file: bool = False


_NAMED = {
    "petersen": _NamedEntry("Petersen graph", 10, "{3,2;1,1}", 5),
    "heawood": _NamedEntry("Heawood graph", 14, "{3,2,2;1,1,3}", 6),
    "pappus": _NamedEntry("Pappus graph", 18, "{3,2,2,1;1,1,2,3}", 6, True),
    "desargues": _NamedEntry("Desargues graph", 20, "{3,2,2,1,1;1,1,2,2,3}", 6),
    "dodecahedron": _NamedEntry("Dodecahedron", 20, "{3,2,1,1,1;1,1,1,2,3}", 5),
    "coxeter": _NamedEntry("Coxeter graph", 28, "{3,2,2,1;1,1,1,2}", 7, True),
    "tutte_8_cage": _NamedEntry("Tutte 8-cage", 30, "{3,2,2,2;1,1,1,3}", 8),
    "foster": _NamedEntry(
        "Foster graph", 90, "{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}", 10, True
    ),
    "biggs_smith": _NamedEntry(
        "Biggs-Smith graph", 102, "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}", 9, True
    ),
    "icosahedron": _NamedEntry("Icosahedron", 12, "{5,2,1;1,2,5}", 3),
    "co_heawood": _NamedEntry("co-Heawood graph", 14, "{4,3,2;1,2,4}", None),
    "line_petersen": _NamedEntry("line graph of Petersen graph", 15, "{4,2,1;1,1,4}", 3),
    "shrikhande": _NamedEntry("Shrikhande graph", 16, "{6,3;1,2}", 3),
    "clebsch": _NamedEntry("Clebsch graph", 16, "{5,4;1,2}", None),
    "hoffman_singleton": _NamedEntry("Hoffman-Singleton graph", 50, "{7,6;1,1}", 5),
}


def _build_named(name: str) -> Graph:
    entry = _NAMED[name]
    if entry.from_file:
        text = resources.files("drgcert").joinpath(f"data/{name}.edges").read_text()
        g = from_edge_text(text)
    else:
        g = _INLINE[name]()
    _check_named(name, entry, g)
    return g


def _check_named(name: str, entry: _NamedEntry, g: Graph) -> None:
    # guards against a bad bundled file or a broken constructor
    if g.n != entry.order:
        raise RuntimeError(f"{name}: expected {entry.order} vertices, got {g.n}")
    ia = intersection_array(g)
    if not isinstance(ia, IntersectionArray) or str(ia) != entry.array:
        raise RuntimeError(f"{name}: intersection array mismatch, got {ia}")
    if entry.girth is not None and girth(g) != entry.girth:
        raise RuntimeError(f"{name}: girth mismatch")


def _fano_lines() -> list[frozenset[int]]:
    # the 7 lines of the Fano plane as difference set translates
    return [frozenset({i % 7, (i + 1) % 7, (i + 3) % 7}) for i in range(7)]


def _petersen() -> Graph:
    return kneser_graph(5, 2)


def _heawood() -> Graph:
    """Point-line incidence graph of the Fano plane.  Points are 0..6,
    lines are 7..13."""
    edges = []
    for i, line in enumerate(_fano_lines()):
        for pt in line:
            edges.append((pt, 7 + i))
    return from_edge_list(14, edges)


def _co_heawood() -> Graph:
    """Point-line non-incidence graph of the Fano plane."""
    return bipartite_complement(_heawood(), range(7), range(7, 14))


def _generalized_petersen(n: int, k: int) -> Graph:
    outer = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n + i) for i in range(n)]
    inner = [(n + i, n + (i + k) % n) for i in range(n)]
    return from_edge_list(2 * n, outer + spokes + inner)


def _desargues() -> Graph:
    return _generalized_petersen(10, 3)


def _dodecahedron() -> Graph:
    return _generalized_petersen(10, 2)


def _perfect_matchings_k6() -> list[frozenset[tuple[int, int]]]:
    def rec(rest: tuple[int, ...]) -> list[list[tuple[int, int]]]:
        if not rest:
            return [[]]
        first = rest[0]
        out = []
        for partner in rest[1:]:
            remainder = tuple(v for v in rest[1:] if v != partner)
            for tail in rec(remainder):
                out.append([(first, partner)] + tail)
        return out

    return [frozenset(m) for m in rec(tuple(range(6)))]


def _tutte_8_cage() -> Graph:
    """Incidence graph of the 2-subsets of a 6-set versus the perfect
    matchings of K_6.  Vertices 0..14 are the pairs, 15..29 the matchings."""
    pairs = list(combinations(range(6), 2))
    matchings = _perfect_matchings_k6()
    edges = []
    for j, m in enumerate(matchings):
        for pair in m:
            edges.append((pairs.index(pair), 15 + j))
    return from_edge_list(30, edges)


def _icosahedron() -> Graph:
    # apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11
    edges = []
    for i in range(5):
        edges.append((0, 1 + i))
        edges.append((11, 6 + i))
        edges.append((1 + i, 1 + (i + 1) % 5))
        edges.append((6 + i, 6 + (i + 1) % 5))
        edges.append((1 + i, 6 + i))
        edges.append((1 + i, 6 + (i + 1) % 5))
    return from_edge_list(12, edges)


def _line_petersen() -> Graph:
    return line_graph(_petersen())


def _shrikhande() -> Graph:
    """Cayley graph of Z_4 x Z_4 with connection set
    {(1,0),(3,0),(0,1),(0,3),(1,1),(3,3)}."""
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for a in range(4):
        for b in range(4):
            u = 4 * a + b
            for da, db in conn:
                v = 4 * ((a + da) % 4) + ((b + db) % 4)
                if u < v:
                    edges.add((u, v))
    return from_edge_list(16, edges)


def _clebsch() -> Graph:
    """Folded 5-cube: 4-bit words, adjacent when the Hamming distance is
    1 or 4."""
    edges = []
    for u in range(16):
        for v in range(u + 1, 16):
            if bin(u ^ v).count("1") in (1, 4):
                edges.append((u, v))
    return from_edge_list(16, edges)


def _hoffman_singleton() -> Graph:
    """Robertson's construction: five pentagons P_0..P_4 and five
    pentagrams Q_0..Q_4, with vertex j of P_h joined to vertex
    h*i + j mod 5 of Q_i.  Vertex j of P_h is 5h + j, vertex j of Q_i
    is 25 + 5i + j."""
    edge_set = set()
    for h in range(5):
        for j in range(5):
            edge_set.add(tuple(sorted((5 * h + j, 5 * h + (j + 1) % 5))))
    for i in range(5):
        for j in range(5):
            edge_set.add(tuple(sorted((25 + 5 * i + j, 25 + 5 * i + (j + 2) % 5))))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edge_set.add(tuple(sorted((5 * h + j, 25 + 5 * i + (h * i + j) % 5))))
    return from_edge_list(50, edge_set)


_INLINE = {
    "petersen": _petersen,
    "heawood": _heawood,
    "co_heawood": _co_heawood,
    "desargues": _desargues,
    "dodecahedron": _dodecahedron,
    "tutte_8_cage": _tutte_8_cage,
    "icosahedron": _icosahedron,
    "line_petersen": _line_petersen,
    "shrikhande": _shrikhande,
    "clebsch": _clebsch,
    "hoffman_singleton": _hoffman_singleton,
}
