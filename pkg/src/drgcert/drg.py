"""Distance-regularity analysis: intersection arrays, SRG parameters, k-sequences."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DisconnectedGraphError, Graph, distances


@dataclass(frozen=True)
class IntersectionArray:
    """The array {b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular graph."""

    b: tuple
    c: tuple

    def __post_init__(self):
        if len(self.b) != len(self.c):
            raise ValueError("b and c sequences must have equal length")
        if not self.b:
            raise ValueError("intersection array must be nonempty")
        if any(x < 1 for x in self.b) or any(x < 1 for x in self.c):
            raise ValueError("intersection numbers must be positive")
        if self.c[0] != 1:
            raise ValueError("c_1 must equal 1")

    @property
    def diameter(self) -> int:
        return len(self.c)

    @property
    def degree(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        """b_i for 0 <= i <= d-1 (b_d is 0 by convention)."""
        return self.b[i] if i < len(self.b) else 0

    def c_at(self, i: int) -> int:
        """c_i for 1 <= i <= d."""
        return self.c[i - 1]

    def __str__(self):
        left = ",".join(str(x) for x in self.b)
        right = ",".join(str(x) for x in self.c)
        return "{" + left + ";" + right + "}"

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        s = text.strip().replace(" ", "")
        if not (s.startswith("{") and s.endswith("}")):
            raise ValueError(f"bad intersection array syntax: {text!r}")
        body = s[1:-1]
        halves = body.split(";")
        if len(halves) != 2:
            raise ValueError(f"bad intersection array syntax: {text!r}")
        b = tuple(int(x) for x in halves[0].split(","))
        c = tuple(int(x) for x in halves[1].split(","))
        return cls(b=b, c=c)


@dataclass(frozen=True)
class NotDistanceRegular:
    """Why a graph failed the distance-regularity test, with a witness pair."""

    witness: tuple
    reason: str

    def __bool__(self):
        return False


def intersection_array(g: Graph, dd=None):
    """IntersectionArray of g, or NotDistanceRegular with a counterexample.

    Disconnected input is an error.  Irregular input is reported as not
    distance-regular, witnessed by two vertices of different degree.
    """
    if dd is None:
        dd = distances(g)
    if not dd.connected:
        raise DisconnectedGraphError("intersection array requires a connected graph")
    if g.n == 1:
        return NotDistanceRegular(witness=(0, 0), reason="trivial graph")
    k = g.regular_degree()
    if k is None:
        degs = g.degrees()
        v = min(range(g.n), key=lambda x: degs[x])
        w = max(range(g.n), key=lambda x: degs[x])
        return NotDistanceRegular(witness=(v, w), reason="not regular")
    d = dd.diameter
    b = [None] * d
    c = [None] * d
    for v in range(g.n):
        drow = dd.dist[v]
        for w in range(g.n):
            i = drow[w]
            if i == 0:
                continue
            bi = sum(1 for x in g.neighbors(w) if drow[x] == i + 1)
            ci = sum(1 for x in g.neighbors(w) if drow[x] == i - 1)
            if i < d:
                if b[i] is None:
                    b[i] = bi
                elif b[i] != bi:
                    return NotDistanceRegular(
                        witness=(v, w), reason=f"b_{i} not constant"
                    )
            elif bi != 0:
                return NotDistanceRegular(witness=(v, w), reason="b_d nonzero")
            if c[i - 1] is None:
                c[i - 1] = ci
            elif c[i - 1] != ci:
                return NotDistanceRegular(witness=(v, w), reason=f"c_{i} not constant")
    b[0] = k
    return IntersectionArray(b=tuple(b), c=tuple(c))


def is_distance_regular(g: Graph) -> bool:
    return isinstance(intersection_array(g), IntersectionArray)


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def feasible(self) -> bool:
        """The standard counting identity k(k - lam - 1) = (n - k - 1) mu."""
        return self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu


def srg_params(g: Graph):
    """(n, k, lambda, mu) when g is strongly regular of diameter 2, else None."""
    dd = distances(g)
    if not dd.connected or dd.diameter != 2:
        return None
    k = g.regular_degree()
    if k is None:
        return None
    lam = None
    mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            count = len(g.neighbors(u) & g.neighbors(v))
            if g.adjacent(u, v):
                if lam is None:
                    lam = count
                elif lam != count:
                    return None
            else:
                if mu is None:
                    mu = count
                elif mu != count:
                    return None
    return SrgParams(n=g.n, k=k, lam=lam, mu=mu)


def k_sequence(ia: IntersectionArray) -> tuple:
    """Sphere sizes (k_0, ..., k_d) from the recurrence k_{i+1} = k_i b_i / c_{i+1}."""
    ks = [1]
    for i in range(ia.diameter):
        num = ks[i] * ia.b[i]
        if num % ia.c[i] != 0:
            raise ValueError(f"non-integral k_{i + 1} in {ia}")
        ks.append(num // ia.c[i])
    return tuple(ks)
