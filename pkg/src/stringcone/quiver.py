"""Quiver orientations, sink reflections, adapted words, and the Ringel form.

Also houses the Coxeter element machinery: the sink order, its action on
roots and weights, and in type A the cycle built by left/right insertion
together with its segmented rewritings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import (
    DynkinDiagram,
    NotSimplyLacedAD,
    Vector,
    cartan_matrix,
    diagram_type,
    dynkin_diagram,
    num_positive_roots,
    reflect_root,
    reflect_weight,
    simple_root,
)


class QuiverParseError(ValueError):
    """Malformed quiver specification text."""


class NotASink(ValueError):
    """Reflection requested at a vertex that is not a sink."""


class NotAdapted(ValueError):
    """The word is not adapted to the quiver."""


@dataclass(frozen=True, order=True)
class Quiver:
    """An orientation of an A/D tree; arrows are (source, target) pairs."""

    diagram: DynkinDiagram
    arrows: tuple[tuple[int, int], ...]


def quiver(diagram: DynkinDiagram, arrows) -> Quiver:
    canon = tuple(sorted(tuple(a) for a in arrows))
    undirected = tuple(sorted(tuple(sorted(a)) for a in canon))
    if undirected != diagram.edges:
        raise QuiverParseError("arrows do not orient the diagram edges exactly once each")
    return Quiver(diagram, canon)


def parse_quiver(text: str) -> Quiver:
    """Parse "a>b,c>d,..." (whitespace insensitive) into a quiver on vertices 1..n."""
    spec = "".join(text.split())
    if not spec:
        raise QuiverParseError("empty quiver specification")
    arrows = []
    for token in spec.split(","):
        parts = token.split(">")
        if len(parts) != 2 or not parts[0].isdigit() or not parts[1].isdigit():
            raise QuiverParseError(f"bad arrow token {token!r}, expected 'a>b'")
        a, b = int(parts[0]), int(parts[1])
        if a < 1 or b < 1:
            raise QuiverParseError(f"vertices must be positive in token {token!r}")
        arrows.append((a, b))
    n = max(max(a, b) for a, b in arrows)
    present = {v for arrow in arrows for v in arrow}
    missing = sorted(set(range(1, n + 1)) - present)
    if missing:
        raise QuiverParseError(f"vertex gap: {missing} missing below {n}")
    try:
        diagram = dynkin_diagram(n, [tuple(sorted(a)) for a in arrows])
    except NotSimplyLacedAD as exc:
        raise QuiverParseError(str(exc)) from exc
    return quiver(diagram, arrows)


def quiver_spec(q: Quiver) -> str:
    return ",".join(f"{a}>{b}" for a, b in q.arrows)


def all_orientations(diagram: DynkinDiagram) -> tuple[Quiver, ...]:
    """Every orientation of the diagram, in a canonical order."""
    quivers = []
    m = len(diagram.edges)
    for bits in range(1 << m):
        arrows = [
            (a, b) if bits >> k & 1 == 0 else (b, a)
            for k, (a, b) in enumerate(diagram.edges)
        ]
        quivers.append(quiver(diagram, arrows))
    return tuple(sorted(quivers))


def is_sink(q: Quiver, i: int) -> bool:
    return all(src != i for src, _ in q.arrows)


def sinks(q: Quiver) -> tuple[int, ...]:
    return tuple(i for i in range(1, q.diagram.n + 1) if is_sink(q, i))


def reflect_sink(q: Quiver, i: int) -> Quiver:
    """Reverse all arrows ending at the sink i."""
    if not (1 <= i <= q.diagram.n):
        raise NotASink(f"vertex {i} out of range")
    if not is_sink(q, i):
        raise NotASink(f"vertex {i} is not a sink of {quiver_spec(q)}")
    return quiver(q.diagram, [(b, a) if b == i else (a, b) for a, b in q.arrows])


def adapted_word(q: Quiver) -> tuple[int, ...]:
    """Canonical adapted reduced word for w0.

    Greedy: always take the smallest sink of the reflected quiver whose
    simple root keeps the prefix reduced, then reflect at it.
    """
    d = q.diagram
    cm = cartan_matrix(d)
    images = [simple_root(d, j) for j in range(1, d.n + 1)]
    word: list[int] = []
    cur = q
    n_pos = num_positive_roots(d)
    while len(word) < n_pos:
        pick = None
        for i in range(1, d.n + 1):
            if is_sink(cur, i) and all(x >= 0 for x in images[i - 1]):
                pick = i
                break
        assert pick is not None, "no admissible sink; the quiver machinery is broken"
        word.append(pick)
        cur = reflect_sink(cur, pick)
        base = images[pick - 1]
        images = [
            tuple(-x for x in base)
            if j == pick - 1
            else tuple(x - cm[pick - 1][j] * y for x, y in zip(img, base))
            for j, img in enumerate(images)
        ]
    return tuple(word)


def is_adapted(word, q: Quiver) -> bool:
    """True iff each letter is a sink of the successively reflected quiver."""
    cur = q
    for i in word:
        if not (1 <= i <= q.diagram.n) or not is_sink(cur, i):
            return False
        cur = reflect_sink(cur, i)
    return True


@lru_cache(maxsize=None)
def ringel_matrix(q: Quiver) -> tuple[Vector, ...]:
    """Matrix of the homological bilinear form: 1 on the diagonal, -1 on arrows."""
    n = q.diagram.n
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in q.arrows:
        rows[a - 1][b - 1] = -1
    return tuple(tuple(r) for r in rows)


def ringel_form(q: Quiver, b1: Vector, b2: Vector) -> int:
    rm = ringel_matrix(q)
    return sum(b1[i] * rm[i][j] * b2[j] for i in range(q.diagram.n) for j in range(q.diagram.n))


def rho(q: Quiver, i: int) -> Vector:
    """Weight whose omega coordinates are the i-th column of the Ringel matrix."""
    rm = ringel_matrix(q)
    return tuple(rm[k][i - 1] for k in range(q.diagram.n))


def rho_t(q: Quiver, i: int) -> Vector:
    """Weight whose omega coordinates are the i-th row of the Ringel matrix."""
    return tuple(ringel_matrix(q)[i - 1])


def phi_R(q: Quiver, root: Vector) -> Vector:
    """Linear map sending each simple root a_i to -rho_i, evaluated on a root."""
    n = q.diagram.n
    out = [0] * n
    for i in range(n):
        if root[i]:
            r = rho(q, i + 1)
            for k in range(n):
                out[k] -= root[i] * r[k]
    return tuple(out)


@lru_cache(maxsize=None)
def sink_order(q: Quiver) -> tuple[int, ...]:
    """Each vertex once, always the smallest available sink of the reflected quiver."""
    order = []
    cur = q
    remaining = set(range(1, q.diagram.n + 1))
    while remaining:
        i = min(v for v in remaining if is_sink(cur, v))
        order.append(i)
        cur = reflect_sink(cur, i)
        remaining.remove(i)
    return tuple(order)


def coxeter_act_root(q: Quiver, v: Vector) -> Vector:
    """Coxeter element action on a root: sink-order word, first letter innermost."""
    for i in sink_order(q):
        v = reflect_root(q.diagram, i, v)
    return v


def coxeter_act_weight(q: Quiver, v: Vector) -> Vector:
    for i in sink_order(q):
        v = reflect_weight(q.diagram, i, v)
    return v


def coxeter_cycle(q: Quiver) -> tuple[int, ...]:
    """Type A only: the (n+1)-cycle of the Coxeter element, by left/right insertion.

    Working down from vertex n, the value i goes right of everything written
    so far when the edge is i-1 <- i, left when it is i-1 -> i; finally 1 goes
    on the far left.
    """
    if diagram_type(q.diagram) != "A":
        raise NotSimplyLacedAD("Coxeter cycles are a type A construction")
    n = q.diagram.n
    seq = [n + 1]
    arrows = set(q.arrows)
    for i in range(n, 1, -1):
        if (i, i - 1) in arrows:
            seq.append(i)
        else:
            seq.insert(0, i)
    seq.insert(0, 1)
    return tuple(seq)


def segmented_cycle(q: Quiver, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rotate the cycle so positions 1..i hold {1..i} and the rest hold {i+1..n+1}."""
    cyc = coxeter_cycle(q)
    n1 = len(cyc)
    if not (1 <= i <= q.diagram.n):
        raise ValueError(f"segment index {i} out of range")
    low = set(range(1, i + 1))
    for r in range(n1):
        rot = cyc[r:] + cyc[:r]
        if set(rot[:i]) == low:
            return rot[:i], rot[i:]
    raise AssertionError("no segmented rotation; insertion cycle is broken")


def coxeter_permutation(q: Quiver) -> tuple[int, ...]:
    """Type A only: the Coxeter element as a permutation of 1..n+1 (images tuple)."""
    if diagram_type(q.diagram) != "A":
        raise NotSimplyLacedAD("permutation form is a type A construction")
    n = q.diagram.n
    perm = list(range(n + 2))
    for i in sink_order(q):
        # first sink acts innermost: post-compose with the transposition (i, i+1)
        perm = [i + 1 if x == i else i if x == i + 1 else x for x in perm]
    return tuple(perm[1:])


def condition_L(q: Quiver, ar) -> bool:
    """Every indecomposable maps to each simple with multiplicity at most one.

    Tested through the homological form: the map space dimension from the
    module of root b to the simple at i is (b, a_i)_R when the module precedes
    the simple in the translation quiver order, and 0 otherwise.
    """
    d = q.diagram
    for k in range(1, ar.N + 1):
        for i in range(1, d.n + 1):
            if hom_to_simple(q, ar, k, i) > 1:
                return False
    return True


def hom_to_simple(q: Quiver, ar, k: int, i: int) -> int:
    pos_simple = ar.position_by_root[simple_root(q.diagram, i)]
    if not ar.leq(k, pos_simple):
        return 0
    return ringel_form(q, ar.root(k), simple_root(q.diagram, i))
