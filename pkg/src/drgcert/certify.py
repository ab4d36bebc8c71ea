"""Rule engine certifying absence of quantum symmetry, class by class.

A graph has no quantum symmetry when its quantum automorphism group
collapses to the classical one.  For distance-regular graphs this can
often be established by finitely checkable combinatorial conditions,
one distance class at a time: each rule below certifies that the
generator pairs indexed by vertex pairs at a fixed distance m behave
classically, provided its stated preconditions hold in the graph.  The
engine records every successful rule application in a certificate that
an independent auditor re-verifies from the graph alone.

Rules that quantify over vertex pairs run in one of two coverage modes.
In orbit mode, legal only when the automorphism group is transitive on
the ordered pairs of every distance class, the representative pair per
class is checked and the group generators are recorded for the auditor.
In all-pairs mode every ordered pair of the class is checked outright.

The engine never concludes that a graph does have quantum symmetry from
rule failure; positive verdicts come only from the knowledge base of
recorded facts.  INCONCLUSIVE is an honest third verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .autgroup import (
    DEFAULT_NODE_BUDGET,
    SearchBudgetExceeded,
    are_isomorphic,
    automorphism_group,
    is_automorphism,
    pair_orbit,
)
from .drg import IntersectionArray, intersection_array
from .expected import HAS_QSYM, NO_QSYM, UNKNOWN
from .families import FamilySpec, build, parse_family
from .graph import (
    DisconnectedGraphError,
    Graph,
    clique_number,
    common_neighbors,
    complement,
    distances,
    girth,
    is_connected,
)
from .io import to_graph6
from .knowledge import UNKNOWN_FACT, verdict_for

INCONCLUSIVE = "INCONCLUSIVE"

FORMAT_VERSION = 1

# distance lookups allowed per class for the witness searches
DEFAULT_SEARCH_BUDGET = 100_000_000

RULE_GIRTH5 = "girth-at-least-5"
RULE_ONE_COMMON = "one-common-neighbor"
RULE_TWO_COMMON = "two-common-neighbors"
RULE_CUBIC_D2 = "cubic-distance-two"
RULE_ARRAY_STEP = "array-step"
RULE_CUBIC_STEP = "cubic-step"
RULE_UNIQUE_FAR = "unique-at-distance"
RULE_PIVOT = "pivot-intersection"
RULE_KRIT = "distance-witness"
RULE_PIVOT_KRIT = "pivot-witness"
RULE_KNOWN = "known-quantum-symmetry"
RULE_COMPLEMENT = "complement-transfer"

RULE_STATEMENTS = {
    RULE_GIRTH5: "girth at least five certifies the adjacency class",
    RULE_ONE_COMMON: "every adjacent pair has exactly one common neighbor",
    RULE_TWO_COMMON: (
        "clique number three with exactly two common neighbors for every "
        "pair at distance one or two"
    ),
    RULE_CUBIC_D2: "cubic graph of girth at least five, adjacency class certified",
    RULE_ARRAY_STEP: (
        "intersection-array step from class m-1 to class m "
        "(variant a: c_2=1 and b_1+1=b_0; b: c_2=1 and b_1+2=b_0; "
        "c: c_2=2, m=2 and b_1+3=b_0; all with c_m >= 2)"
    ),
    RULE_CUBIC_STEP: (
        "cubic intersection-array step (variant i: b_{m-1}=1; "
        "variant ii: b_{m-1}=2, b_m=c_m=1, girth >= 2m)"
    ),
    RULE_UNIQUE_FAR: "every vertex has exactly one vertex at distance m",
    RULE_PIVOT: (
        "pivot vertices with certified classes pin the representative as the "
        "unique vertex of the class with its distance profile"
    ),
    RULE_KRIT: (
        "for every rival p a witness q separates p from j while pinning l as "
        "the unique vertex at the witnessed distances"
    ),
    RULE_PIVOT_KRIT: "pivot profile filter plus witnesses for the surviving rivals",
    RULE_KNOWN: "recorded fact from the knowledge base",
    RULE_COMPLEMENT: "quantum symmetry of a graph and its complement coincide",
}


class _BudgetExceeded(Exception):
    pass


class _Budget:
    """Per-class allowance of elementary distance lookups."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, amount: int) -> None:
        self.used += amount
        if self.used > self.limit:
            raise _BudgetExceeded


@dataclass(frozen=True)
class Application:
    """One successful rule application; m is None for whole-graph rules."""

    rule: str
    m: int | None
    params: dict

    def to_dict(self) -> dict:
        return {"rule": self.rule, "m": self.m, "params": self.params}

    @classmethod
    def from_dict(cls, data: dict) -> "Application":
        return cls(rule=data["rule"], m=data["m"], params=dict(data["params"]))


@dataclass(frozen=True)
class Certificate:
    label: str
    n: int
    degree: int | None
    diameter: int
    girth: int | None
    array: str | None
    mode: str  # "orbit" | "all-pairs" | "knowledge-base"
    verdict: str
    reason: str | None
    kb_verdict: str
    kb_reason: str | None
    certified: tuple
    open_classes: tuple
    applications: tuple
    generators: tuple
    notes: tuple
    graph6: str

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "label": self.label,
            "n": self.n,
            "degree": self.degree,
            "diameter": self.diameter,
            "girth": self.girth,
            "array": self.array,
            "mode": self.mode,
            "verdict": self.verdict,
            "reason": self.reason,
            "kb_verdict": self.kb_verdict,
            "kb_reason": self.kb_reason,
            "certified": list(self.certified),
            "open_classes": list(self.open_classes),
            "applications": [a.to_dict() for a in self.applications],
            "generators": [list(p) for p in self.generators],
            "notes": list(self.notes),
            "graph6": self.graph6,
        }

    def to_json(self) -> str:
        # single line, suitable for batch logs
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        if data.get("format_version") != FORMAT_VERSION:
            raise ValueError(f"unsupported certificate format: {data.get('format_version')!r}")
        return cls(
            label=data["label"],
            n=data["n"],
            degree=data["degree"],
            diameter=data["diameter"],
            girth=data["girth"],
            array=data["array"],
            mode=data["mode"],
            verdict=data["verdict"],
            reason=data["reason"],
            kb_verdict=data["kb_verdict"],
            kb_reason=data["kb_reason"],
            certified=tuple(data["certified"]),
            open_classes=tuple(data["open_classes"]),
            applications=tuple(Application.from_dict(a) for a in data["applications"]),
            generators=tuple(tuple(p) for p in data["generators"]),
            notes=tuple(data["notes"]),
            graph6=data["graph6"],
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"certificate: {self.label}"]
        lines.append(f"  vertices: {self.n}")
        if self.degree is not None:
            lines.append(f"  degree: {self.degree}")
        lines.append(f"  diameter: {self.diameter}")
        if self.girth is not None:
            lines.append(f"  girth: {self.girth}")
        if self.array is not None:
            lines.append(f"  intersection array: {self.array}")
        lines.append(f"  coverage: {self.mode}")
        lines.append(f"  verdict: {self.verdict}")
        if self.reason:
            lines.append(f"  reason: {self.reason}")
        kb = self.kb_verdict
        if self.kb_reason:
            kb += f" ({self.kb_reason})"
        lines.append(f"  knowledge base: {kb}")
        if self.applications:
            lines.append("  applications:")
            for i, app in enumerate(self.applications, start=1):
                where = f"class {app.m}" if app.m is not None else "whole graph"
                params = _render_params(app.params)
                lines.append(f"    {i}. {app.rule}  {where}  {params}".rstrip())
        if self.open_classes:
            lines.append(f"  open classes: {', '.join(str(m) for m in self.open_classes)}")
        else:
            lines.append("  open classes: none")
        if self.generators:
            lines.append(f"  generators recorded: {len(self.generators)}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        lines.append(f"  graph6: {self.graph6}")
        return "\n".join(lines) + "\n"


def _render_params(params: dict) -> str:
    parts = []
    for key, value in params.items():
        if isinstance(value, (list, tuple, dict)):
            parts.append(f"{key}={json.dumps(value, separators=(',', ':'))}")
        else:
            parts.append(f"{key}={value}")
    return " ".join(parts)


@dataclass(frozen=True)
class AuditResult:
    ok: bool
    failure: str | None = None

    def __bool__(self):
        return self.ok


# ------------------------------------------------------------ rule checks
#
# Each _holds function is a plain enumeration of the rule's precondition,
# shared between the engine and the audit for the distance-free rules.


def _one_common_holds(g: Graph) -> bool:
    return all(len(common_neighbors(g, u, v)) == 1 for u, v in g.edges)


def _two_common_holds(g: Graph, dd) -> bool:
    if clique_number(g) != 3:
        return False
    for u in range(g.n):
        row = dd.dist[u]
        for v in range(u + 1, g.n):
            if row[v] in (1, 2) and len(common_neighbors(g, u, v)) != 2:
                return False
    return True


def _unique_far_holds(dd, m: int) -> bool:
    return all(kv[m] == 1 for kv in dd.kseq)


def _array_step_variant(arr: IntersectionArray, m: int) -> str | None:
    """First matching variant label for a step to class m, or None."""
    if arr.diameter < 2 or arr.c_at(m) < 2:
        return None
    b0, b1, c2 = arr.b[0], arr.b[1], arr.c_at(2)
    if c2 == 1 and b1 + 1 == b0:
        return "a"
    if c2 == 1 and b1 + 2 == b0:
        return "b"
    if c2 == 2 and m == 2 and b1 + 3 == b0:
        return "c"
    return None


def _cubic_step_variant(arr: IntersectionArray, m: int, gir: int | None) -> str | None:
    if arr.degree != 3:
        return None
    if arr.b_at(m - 1) == 1:
        return "i"
    if (
        arr.b_at(m - 1) == 2
        and arr.b_at(m) == 1
        and arr.c_at(m) == 1
        and gir is not None
        and gir >= 2 * m
    ):
        return "ii"
    return None


def _pivot_filter(dd, m: int, j: int, l: int, pivots) -> list:
    """Vertices at distance m from l whose distances to every pivot agree
    with j's.  The pivot rule succeeds when this is exactly [j]."""
    out = []
    for p in dd.at_distance(l, m):
        if all(dd.d(p, q) == dd.d(j, q) for q in pivots):
            out.append(p)
    return out


def _witness_valid(dd, m: int, j: int, l: int, p: int, q: int) -> bool:
    """The witness q kills rival p for the pair (j, l): q separates j from
    p, and l is the only vertex at distance d(q,l) from q lying at distance
    m from both j and p."""
    if dd.d(j, q) == dd.d(q, p):
        return False
    s = dd.d(q, l)
    count = 0
    for x in dd.at_distance(q, s):
        if dd.d(x, j) == m and dd.d(x, p) == m:
            count += 1
            if count > 1:
                return False
    return count == 1


# ------------------------------------------------------------- the engine


def _find_pivots(dd, m, j, l, certified, bud):
    others = [p for p in dd.at_distance(l, m) if p != j]
    n = len(dd.dist)
    eligible = [q for q in range(n) if dd.d(q, l) in certified]
    bud.spend(n)
    if not others:
        return ()
    for size in (1, 2, 3):
        for pivots in combinations(eligible, size):
            bud.spend(2 * size * len(others) + 1)
            if not any(
                all(dd.d(p, q) == dd.d(j, q) for q in pivots) for p in others
            ):
                return pivots
    return None


def _krit_analyze(dd, m, j, l, bud):
    """Per rival p, the smallest witness q that kills it; rivals with no
    witness are collected separately."""
    n = len(dd.dist)
    witnesses = []
    unwitnessed = []
    for p in dd.at_distance(l, m):
        if p == j:
            continue
        found = None
        for q in range(n):
            bud.spend(2)
            if dd.d(j, q) == dd.d(q, p):
                continue
            s = dd.d(q, l)
            sphere = dd.at_distance(q, s)
            bud.spend(2 * len(sphere))
            count = 0
            for x in sphere:
                if dd.d(x, j) == m and dd.d(x, p) == m:
                    count += 1
                    if count > 1:
                        break
            if count == 1:
                found = q
                break
        if found is None:
            unwitnessed.append(p)
        else:
            witnesses.append((p, found))
    return witnesses, unwitnessed


def _coverage_pairs(dd, m: int, mode: str) -> list:
    pairs = dd.pairs_at_distance(m)
    if mode == "orbit":
        return pairs[:1]
    return pairs


def _pair_params(mode: str, assignments: list, fields) -> dict:
    """Parameter block for a pair-quantified rule.

    assignments: list of (j, l, payload...) tuples, payload named by fields.
    """
    if mode == "orbit":
        j, l, *payload = assignments[0]
        params = {"coverage": "orbit", "pair": [j, l]}
        for name, value in zip(fields, payload):
            params[name] = value
        return params
    return {
        "coverage": "all-pairs",
        "assignments": [[j, l, *payload] for j, l, *payload in assignments],
    }


def certify(
    g: Graph,
    *,
    family: FamilySpec | str | None = None,
    label: str | None = None,
    mode: str = "auto",
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Certificate:
    """Certify absence of quantum symmetry for a connected graph.

    When a family spec is supplied, the knowledge base is consulted first:
    a recorded HAS_QSYM fact short-circuits the rule engine, and any other
    recorded verdict is carried in the certificate for comparison.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("certification requires a connected graph")
    if mode not in ("auto", "orbit", "all-pairs"):
        raise ValueError(f"unknown coverage mode {mode!r}")

    spec = parse_family(family) if isinstance(family, str) else family
    fact = verdict_for(spec) if spec is not None else UNKNOWN_FACT
    if label is None:
        label = spec.label() if spec is not None else f"graph on {g.n} vertices"

    dd = distances(g)
    diam = dd.diameter
    gir = girth(g)
    arr = intersection_array(g, dd)
    arr = arr if arr else None
    base = {
        "label": label,
        "n": g.n,
        "degree": g.regular_degree(),
        "diameter": diam,
        "girth": gir,
        "array": str(arr) if arr else None,
        "graph6": to_graph6(g),
        "kb_verdict": fact.verdict,
        "kb_reason": fact.reason,
    }

    if fact.verdict == HAS_QSYM:
        app = Application(
            RULE_KNOWN,
            None,
            {
                "family": spec.key(),
                "reason": fact.reason,
                "quantum_group": fact.quantum_group,
            },
        )
        return Certificate(
            mode="knowledge-base",
            verdict=HAS_QSYM,
            reason=fact.reason,
            certified=(),
            open_classes=tuple(range(1, diam + 1)),
            applications=(app,),
            generators=(),
            notes=(),
            **base,
        )

    notes: list = []
    generators: tuple = ()
    if mode == "all-pairs":
        resolved = "all-pairs"
    else:
        try:
            aut = automorphism_group(g, node_budget)
            transitive = all(
                pair_orbit(g.n, aut.generators, dd.pairs_at_distance(m)[0])
                == set(dd.pairs_at_distance(m))
                for m in range(1, diam + 1)
            )
        except SearchBudgetExceeded:
            if mode == "orbit":
                raise
            transitive = False
            notes.append("automorphism search budget exceeded; all-pairs coverage")
        if transitive:
            resolved = "orbit"
            generators = aut.generators
        elif mode == "orbit":
            raise ValueError("orbit mode requires a distance-transitive graph")
        else:
            resolved = "all-pairs"

    certified: set = set()
    apps: list = []

    def pair_rule(rule_id, m, bud):
        assignments = []
        for j, l in _coverage_pairs(dd, m, resolved):
            if rule_id == RULE_PIVOT:
                pivots = _find_pivots(dd, m, j, l, certified, bud)
                if pivots is None:
                    return None
                assignments.append((j, l, list(pivots)))
            elif rule_id == RULE_KRIT:
                witnesses, unwitnessed = _krit_analyze(dd, m, j, l, bud)
                if unwitnessed:
                    return None
                assignments.append((j, l, [list(w) for w in witnesses]))
            else:  # RULE_PIVOT_KRIT
                witnesses, unwitnessed = _krit_analyze(dd, m, j, l, bud)
                dead = set(unwitnessed)
                by_rival = dict(witnesses)
                n = g.n
                eligible = [q for q in range(n) if dd.d(q, l) in certified]
                others = [p for p in dd.at_distance(l, m) if p != j]
                chosen = None
                for size in (0, 1, 2, 3):
                    for pivots in combinations(eligible, size):
                        bud.spend(2 * size * len(others) + 1)
                        survivors = [
                            p
                            for p in others
                            if all(dd.d(p, q) == dd.d(j, q) for q in pivots)
                        ]
                        if not (dead & set(survivors)):
                            chosen = (pivots, survivors)
                            break
                    if chosen:
                        break
                if chosen is None:
                    return None
                pivots, survivors = chosen
                assignments.append(
                    (j, l, list(pivots), [[p, by_rival[p]] for p in survivors])
                )
        fields = {
            RULE_PIVOT: ("pivots",),
            RULE_KRIT: ("witnesses",),
            RULE_PIVOT_KRIT: ("pivots", "witnesses"),
        }[rule_id]
        return Application(rule_id, m, _pair_params(resolved, assignments, fields))

    def searches(m, candidates):
        bud = _Budget(search_budget)
        for rule_id in candidates:
            try:
                app = pair_rule(rule_id, m, bud)
            except _BudgetExceeded:
                notes.append(
                    f"class {m}: search budget of {search_budget} distance "
                    "lookups exhausted"
                )
                return None
            if app is not None:
                return app
        return None

    # class 1: structural rules, then the witness search
    if diam >= 1:
        app = None
        if gir is not None and gir >= 5:
            app = Application(RULE_GIRTH5, 1, {"girth": gir})
        elif _one_common_holds(g):
            app = Application(RULE_ONE_COMMON, 1, {"common_neighbors": 1})
        elif _two_common_holds(g, dd):
            app = Application(RULE_TWO_COMMON, 1, {"clique_number": 3, "common_neighbors": 2})
        else:
            app = searches(1, (RULE_KRIT,))
        if app is not None:
            apps.append(app)
            certified.add(1)

    for m in range(2, diam + 1):
        app = None
        variant = _array_step_variant(arr, m) if arr and (m - 1) in certified else None
        if variant is not None:
            app = Application(
                RULE_ARRAY_STEP,
                m,
                {
                    "variant": variant,
                    "b0": arr.b[0],
                    "b1": arr.b[1],
                    "c2": arr.c_at(2),
                    "c_m": arr.c_at(m),
                },
            )
        if app is None and m == 2 and g.regular_degree() == 3:
            if gir is not None and gir >= 5 and 1 in certified:
                app = Application(RULE_CUBIC_D2, 2, {"degree": 3, "girth": gir})
        if app is None and arr and all(i in certified for i in range(1, m)):
            cv = _cubic_step_variant(arr, m, gir)
            if cv == "i":
                app = Application(RULE_CUBIC_STEP, m, {"variant": "i", "b_prev": 1})
            elif cv == "ii":
                app = Application(
                    RULE_CUBIC_STEP,
                    m,
                    {"variant": "ii", "b_prev": 2, "b_m": 1, "c_m": 1, "girth": gir},
                )
        if app is None and _unique_far_holds(dd, m):
            app = Application(RULE_UNIQUE_FAR, m, {"count": 1})
        if app is None:
            app = searches(m, (RULE_PIVOT, RULE_KRIT, RULE_PIVOT_KRIT))
        if app is not None:
            apps.append(app)
            certified.add(m)

    open_classes = tuple(m for m in range(1, diam + 1) if m not in certified)
    verdict = NO_QSYM if not open_classes else INCONCLUSIVE
    uses_orbit = any(a.params.get("coverage") == "orbit" for a in apps)
    return Certificate(
        mode=resolved,
        verdict=verdict,
        reason=None,
        certified=tuple(sorted(certified)),
        open_classes=open_classes,
        applications=tuple(apps),
        generators=generators if uses_orbit else (),
        notes=tuple(notes),
        **base,
    )


# ------------------------------------------------------- complement route


def transfer_certificate(cert: Certificate, g: Graph, label: str | None = None) -> Certificate:
    """Turn a NO_QSYM certificate for complement(g) into one for g.

    Sound because a graph and its complement have the same automorphisms,
    classical and quantum alike.
    """
    comp = complement(g)
    if cert.verdict != NO_QSYM:
        raise ValueError("complement transfer requires a NO_QSYM certificate")
    if cert.graph6 != to_graph6(comp):
        raise ValueError("certificate does not describe the complement of this graph")
    dd = distances(g)
    diam = dd.diameter
    gir = girth(g)
    arr = intersection_array(g, dd)
    arr = arr if arr else None
    app = Application(RULE_COMPLEMENT, None, {"complement": cert.to_dict()})
    return Certificate(
        label=label or f"complement of {cert.label}",
        n=g.n,
        degree=g.regular_degree(),
        diameter=diam,
        girth=gir,
        array=str(arr) if arr else None,
        mode=cert.mode,
        verdict=NO_QSYM,
        reason=None,
        kb_verdict=UNKNOWN_FACT.verdict,
        kb_reason=UNKNOWN_FACT.reason,
        certified=tuple(range(1, diam + 1)),
        open_classes=(),
        applications=(app,),
        generators=(),
        notes=(),
        graph6=to_graph6(g),
    )


def certify_via_complement(g: Graph, *, label: str | None = None, **options) -> Certificate:
    comp = complement(g)
    if not is_connected(comp):
        raise DisconnectedGraphError("complement is disconnected")
    inner = certify(comp, **options)
    return transfer_certificate(inner, g, label=label)


# ------------------------------------------------------------------ audit


def audit(cert: Certificate, g: Graph) -> AuditResult:
    """Re-verify every claim of a certificate from the graph alone.

    Replays the applications in order, enumerating each rule's
    precondition in full, and checks the bookkeeping that connects the
    applications to the verdict.  Returns a falsy result naming the first
    failure.
    """

    def fail(msg: str) -> AuditResult:
        return AuditResult(False, msg)

    if cert.n != g.n:
        return fail(f"vertex count mismatch: certificate says {cert.n}, graph has {g.n}")
    if cert.graph6 != to_graph6(g):
        return fail("graph6 string does not match the graph")
    if not is_connected(g):
        return fail("graph is disconnected")

    dd = distances(g)
    diam = dd.diameter
    if cert.diameter != diam:
        return fail(f"diameter mismatch: certificate says {cert.diameter}, graph has {diam}")

    if cert.verdict == HAS_QSYM:
        return _audit_has_qsym(cert, g)
    if cert.verdict not in (NO_QSYM, INCONCLUSIVE):
        return fail(f"unknown verdict {cert.verdict!r}")

    gens = cert.generators
    gens_verified = False
    certified: set = set()

    for index, app in enumerate(cert.applications, start=1):
        where = f"application {index} ({app.rule}, m={app.m})"
        if app.rule == RULE_COMPLEMENT:
            result = _audit_complement(app, g)
            if not result.ok:
                return fail(f"{where}: {result.failure}")
            certified.update(range(1, diam + 1))
            continue
        m = app.m
        if not isinstance(m, int) or not (1 <= m <= diam):
            return fail(f"{where}: class out of range")
        if m in certified:
            return fail(f"{where}: class {m} certified twice")
        coverage = app.params.get("coverage")
        if coverage == "orbit" and not gens_verified:
            if not gens:
                return fail(f"{where}: orbit coverage claimed but no generators recorded")
            for p in gens:
                if not is_automorphism(g, p):
                    return fail(f"{where}: recorded generator is not an automorphism")
            gens_verified = True
        result = _audit_application(app, g, dd, certified, gens)
        if not result.ok:
            return fail(f"{where}: {result.failure}")
        certified.add(m)

    if sorted(certified) != sorted(cert.certified):
        return fail("certified class list does not match the applications")
    expected_open = tuple(m for m in range(1, diam + 1) if m not in certified)
    if tuple(cert.open_classes) != expected_open:
        return fail("open class list does not match the applications")
    if cert.verdict == NO_QSYM and expected_open:
        return fail(f"verdict NO_QSYM but classes {list(expected_open)} are unverified")
    if cert.verdict == INCONCLUSIVE and not expected_open:
        return fail("verdict INCONCLUSIVE but every class is certified")
    if cert.verdict == NO_QSYM and cert.kb_verdict == HAS_QSYM:
        return fail("verdict NO_QSYM contradicts a recorded quantum symmetry fact")
    return AuditResult(True)


def _audit_has_qsym(cert: Certificate, g: Graph) -> AuditResult:
    def fail(msg):
        return AuditResult(False, msg)

    if len(cert.applications) != 1 or cert.applications[0].rule != RULE_KNOWN:
        return fail("HAS_QSYM requires exactly one knowledge-base application")
    params = cert.applications[0].params
    key = params.get("family")
    if not isinstance(key, str):
        return fail("knowledge-base application lacks a family")
    try:
        fact = verdict_for(key)
    except ValueError as exc:
        return fail(f"unknown family {key!r}: {exc}")
    if fact.verdict != HAS_QSYM:
        return fail(f"knowledge base does not record quantum symmetry for {key}")
    try:
        reference = build(key)
    except ValueError as exc:
        return fail(f"family {key!r} cannot be rebuilt: {exc}")
    if not are_isomorphic(reference, g):
        return fail(f"graph is not isomorphic to {key}")
    return AuditResult(True)


def _audit_complement(app: Application, g: Graph) -> AuditResult:
    def fail(msg):
        return AuditResult(False, msg)

    data = app.params.get("complement")
    if not isinstance(data, dict):
        return fail("no embedded complement certificate")
    try:
        inner = Certificate.from_dict(data)
    except (KeyError, ValueError, TypeError) as exc:
        return fail(f"embedded certificate malformed: {exc}")
    comp = complement(g)
    if inner.verdict != NO_QSYM:
        return fail("embedded complement certificate is not NO_QSYM")
    if inner.graph6 != to_graph6(comp):
        return fail("embedded certificate does not describe the complement")
    result = audit(inner, comp)
    if not result.ok:
        return fail(f"embedded certificate fails audit: {result.failure}")
    return AuditResult(True)


def _class_pairs_for_audit(app, dd, m, gens):
    """The (pair, claim) list an application must prove, or an error string.

    Orbit coverage: the recorded pair's orbit under the recorded generators
    must be the whole distance class; only the recorded pair is checked.
    All-pairs coverage: the recorded assignments must list every ordered
    pair of the class exactly once.
    """
    coverage = app.params.get("coverage")
    class_pairs = set(dd.pairs_at_distance(m))
    if coverage == "orbit":
        pair = app.params.get("pair")
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            return "orbit coverage without a representative pair"
        j, l = pair
        if (j, l) not in class_pairs:
            return f"representative pair {pair} is not at distance {m}"
        n = len(dd.dist)
        if pair_orbit(n, gens, (j, l)) != class_pairs:
            return "recorded generators do not map the representative onto the class"
        return [(j, l, app.params)]
    if coverage == "all-pairs":
        assignments = app.params.get("assignments")
        if not isinstance(assignments, list):
            return "all-pairs coverage without assignments"
        seen = set()
        out = []
        for entry in assignments:
            j, l = entry[0], entry[1]
            seen.add((j, l))
            out.append((j, l, entry))
        if seen != class_pairs:
            return "assignments do not cover the distance class"
        return out
    return f"unknown coverage {coverage!r}"


def _audit_application(app, g: Graph, dd, certified, gens) -> AuditResult:
    def fail(msg):
        return AuditResult(False, msg)

    m = app.m
    rule = app.rule
    params = app.params

    if rule == RULE_GIRTH5:
        gir = girth(g)
        if m != 1:
            return fail("certifies class 1 only")
        if gir is None or gir < 5:
            return fail(f"girth is {gir}, not at least 5")
        if params.get("girth") != gir:
            return fail(f"recorded girth {params.get('girth')} differs from actual {gir}")
        return AuditResult(True)

    if rule == RULE_ONE_COMMON:
        if m != 1:
            return fail("certifies class 1 only")
        for u, v in sorted(g.edges):
            if len(common_neighbors(g, u, v)) != 1:
                return fail(f"adjacent pair ({u},{v}) has {len(common_neighbors(g, u, v))} common neighbors")
        return AuditResult(True)

    if rule == RULE_TWO_COMMON:
        if m != 1:
            return fail("certifies class 1 only")
        cn = clique_number(g)
        if cn != 3:
            return fail(f"clique number is {cn}, not 3")
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if dd.d(u, v) in (1, 2) and len(common_neighbors(g, u, v)) != 2:
                    return fail(f"pair ({u},{v}) at distance {dd.d(u, v)} has {len(common_neighbors(g, u, v))} common neighbors")
        return AuditResult(True)

    if rule == RULE_CUBIC_D2:
        if m != 2:
            return fail("certifies class 2 only")
        if g.regular_degree() != 3:
            return fail("graph is not cubic")
        gir = girth(g)
        if gir is None or gir < 5:
            return fail(f"girth is {gir}, not at least 5")
        if 1 not in certified:
            return fail("class 1 not certified before this application")
        return AuditResult(True)

    if rule == RULE_ARRAY_STEP:
        arr = intersection_array(g, dd)
        if not arr:
            return fail(f"graph is not distance-regular ({arr.reason})")
        if (m - 1) not in certified:
            return fail(f"class {m - 1} not certified before this application")
        if arr.c_at(m) < 2:
            return fail(f"c_{m} = {arr.c_at(m)} is below 2")
        variant = params.get("variant")
        b0, b1, c2 = arr.b[0], arr.b[1], arr.c_at(2)
        conditions = {
            "a": c2 == 1 and b1 + 1 == b0,
            "b": c2 == 1 and b1 + 2 == b0,
            "c": c2 == 2 and m == 2 and b1 + 3 == b0,
        }
        if variant not in conditions:
            return fail(f"unknown variant {variant!r}")
        if not conditions[variant]:
            return fail(f"variant {variant} condition fails for array {arr}")
        for key, actual in (("b0", b0), ("b1", b1), ("c2", c2), ("c_m", arr.c_at(m))):
            if params.get(key) != actual:
                return fail(f"recorded {key}={params.get(key)} differs from actual {actual}")
        return AuditResult(True)

    if rule == RULE_CUBIC_STEP:
        arr = intersection_array(g, dd)
        if not arr:
            return fail(f"graph is not distance-regular ({arr.reason})")
        if arr.degree != 3:
            return fail("graph is not cubic")
        missing = [i for i in range(1, m) if i not in certified]
        if missing:
            return fail(f"classes {missing} not certified before this application")
        variant = params.get("variant")
        if variant == "i":
            if arr.b_at(m - 1) != 1:
                return fail(f"b_{m - 1} = {arr.b_at(m - 1)}, not 1")
        elif variant == "ii":
            gir = girth(g)
            if arr.b_at(m - 1) != 2 or arr.b_at(m) != 1 or arr.c_at(m) != 1:
                return fail(f"variant ii conditions fail for array {arr}")
            if gir is None or gir < 2 * m:
                return fail(f"girth {gir} is below 2m = {2 * m}")
        else:
            return fail(f"unknown variant {variant!r}")
        return AuditResult(True)

    if rule == RULE_UNIQUE_FAR:
        for v in range(g.n):
            if dd.kseq[v][m] != 1:
                return fail(f"vertex {v} has {dd.kseq[v][m]} vertices at distance {m}")
        return AuditResult(True)

    if rule in (RULE_PIVOT, RULE_KRIT, RULE_PIVOT_KRIT):
        located = _class_pairs_for_audit(app, dd, m, gens)
        if isinstance(located, str):
            return fail(located)
        for j, l, payload in located:
            result = _audit_pair_claim(rule, dd, m, j, l, payload, certified)
            if not result.ok:
                return fail(f"pair ({j},{l}): {result.failure}")
        return AuditResult(True)

    if rule == RULE_KNOWN:
        return fail("knowledge-base facts are valid only in HAS_QSYM certificates")

    return fail(f"unknown rule {rule!r}")


def _payload_field(payload, name: str, orbit_index: int):
    """Field access for both coverage encodings: orbit params store named
    keys, all-pairs assignments store positional entries [j, l, ...]."""
    if isinstance(payload, dict):
        return payload.get(name)
    return payload[orbit_index] if len(payload) > orbit_index else None


def _audit_pair_claim(rule, dd, m, j, l, payload, certified) -> AuditResult:
    def fail(msg):
        return AuditResult(False, msg)

    if dd.d(j, l) != m:
        return fail(f"pair is at distance {dd.d(j, l)}, not {m}")
    rivals = [p for p in dd.at_distance(l, m) if p != j]

    if rule == RULE_PIVOT:
        pivots = _payload_field(payload, "pivots", 2)
        if not isinstance(pivots, (list, tuple)) or len(pivots) > 3:
            return fail("pivot set missing or larger than 3")
        if pivots == [] and rivals:
            return fail("empty pivot set with rivals present")
        for q in pivots:
            t = dd.d(q, l)
            if t not in certified:
                return fail(f"pivot {q} is at distance {t} from l, class {t} not certified")
        survivors = _pivot_filter(dd, m, j, l, pivots)
        if survivors != [j]:
            return fail(f"pivot profile leaves {survivors}, not exactly [{j}]")
        return AuditResult(True)

    if rule == RULE_KRIT:
        witnesses = _payload_field(payload, "witnesses", 2)
        if not isinstance(witnesses, list):
            return fail("witness list missing")
        recorded = {p for p, _ in witnesses}
        if recorded != set(rivals):
            return fail("witness list does not cover every rival exactly")
        for p, q in witnesses:
            if not _witness_valid(dd, m, j, l, p, q):
                return fail(f"witness {q} does not kill rival {p}")
        return AuditResult(True)

    if rule == RULE_PIVOT_KRIT:
        pivots = _payload_field(payload, "pivots", 2)
        witnesses = _payload_field(payload, "witnesses", 3)
        if not isinstance(pivots, (list, tuple)) or len(pivots) > 3:
            return fail("pivot set missing or larger than 3")
        if not isinstance(witnesses, list):
            return fail("witness list missing")
        for q in pivots:
            t = dd.d(q, l)
            if t not in certified:
                return fail(f"pivot {q} is at distance {t} from l, class {t} not certified")
        survivors = [p for p in _pivot_filter(dd, m, j, l, pivots) if p != j]
        recorded = {p for p, _ in witnesses}
        if recorded != set(survivors):
            return fail("witnesses do not cover exactly the surviving rivals")
        for p, q in witnesses:
            if not _witness_valid(dd, m, j, l, p, q):
                return fail(f"witness {q} does not kill rival {p}")
        return AuditResult(True)

    return fail(f"unknown pair rule {rule!r}")
