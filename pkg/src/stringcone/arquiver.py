"""Translation quiver built combinatorially from a word adapted to a quiver.

Positions 1..N carry the roots of the induced reflection ordering.  Arrows
join positions whose letters are adjacent in the diagram with no intermediate
occurrence of either letter; the translation sends a position to the previous
occurrence of the same letter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import (
    Vector,
    diagram_type,
    reflection_ordering,
    simple_root,
)
from .quiver import NotAdapted, Quiver, adapted_word, is_adapted, ringel_form, segmented_cycle


@dataclass(frozen=True)
class ARQuiver:
    quiver: Quiver
    word: tuple[int, ...]
    roots: tuple[Vector, ...]
    arrows: tuple[tuple[int, int], ...]
    tau: dict[int, int]
    position_by_root: dict[Vector, int]
    _reach: tuple[frozenset[int], ...] = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def N(self) -> int:
        return len(self.word)

    @property
    def n(self) -> int:
        return self.quiver.diagram.n

    def root(self, k: int) -> Vector:
        return self.roots[k - 1]

    def level(self, k: int) -> int:
        return self.word[k - 1]

    def level_positions(self, i: int) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.N + 1) if self.word[k - 1] == i)

    def leq(self, k1: int, k2: int) -> bool:
        """Reflexive reachability along arrows."""
        return k2 in self._reach[k1 - 1]

    def is_projective(self, k: int) -> bool:
        return k not in self.tau

    def hammock(self, i: int) -> tuple[int, ...]:
        """Positions whose root involves the simple root at i."""
        return tuple(k for k in range(1, self.N + 1) if self.roots[k - 1][i - 1] > 0)

    def p_set(self, i: int) -> tuple[int, ...]:
        """Positions whose module admits a nonzero map to the simple at i."""
        key = ("p_set", i)
        if key not in self._cache:
            d = self.quiver.diagram
            alpha = simple_root(d, i)
            top = self.position_by_root[alpha]
            self._cache[key] = tuple(
                k
                for k in range(1, self.N + 1)
                if self.leq(k, top) and ringel_form(self.quiver, self.roots[k - 1], alpha) > 0
            )
        return self._cache[key]


def build_ar(q: Quiver, word=None) -> ARQuiver:
    if word is None:
        word = adapted_word(q)
    word = tuple(word)
    if not is_adapted(word, q):
        raise NotAdapted(f"word {word} is not adapted to the quiver")
    roots = reflection_ordering(q.diagram, word)
    adjacent = {tuple(sorted(e)) for e in q.diagram.edges}
    N = len(word)
    arrows = []
    for k in range(1, N + 1):
        for k2 in range(k + 1, N + 1):
            a, b = word[k - 1], word[k2 - 1]
            if tuple(sorted((a, b))) not in adjacent:
                continue
            if all(word[j - 1] not in (a, b) for j in range(k + 1, k2)):
                arrows.append((k, k2))
    tau = {}
    last_seen: dict[int, int] = {}
    for k in range(1, N + 1):
        letter = word[k - 1]
        if letter in last_seen:
            tau[k] = last_seen[letter]
        last_seen[letter] = k
    succ: dict[int, list[int]] = {k: [] for k in range(1, N + 1)}
    for k, k2 in arrows:
        succ[k].append(k2)
    reach: list[frozenset[int]] = [frozenset()] * N
    for k in range(N, 0, -1):
        acc = {k}
        for k2 in succ[k]:
            acc |= reach[k2 - 1]
        reach[k - 1] = frozenset(acc)
    return ARQuiver(
        quiver=q,
        word=word,
        roots=roots,
        arrows=tuple(arrows),
        tau=tau,
        position_by_root={r: k + 1 for k, r in enumerate(roots)},
        _reach=tuple(reach),
    )


def projective_dimension_vector(q: Quiver, i: int) -> Vector:
    """Dimension vector of the projective cover of the simple at i (path counts)."""
    return _path_indicator(q, i, forward=True)


def injective_dimension_vector(q: Quiver, i: int) -> Vector:
    """Dimension vector of the injective envelope of the simple at i."""
    return _path_indicator(q, i, forward=False)


def _path_indicator(q: Quiver, i: int, forward: bool) -> Vector:
    n = q.diagram.n
    step: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in q.arrows:
        if forward:
            step[a].append(b)
        else:
            step[b].append(a)
    seen = {i}
    stack = [i]
    while stack:
        for w in step[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return tuple(1 if v in seen else 0 for v in range(1, n + 1))


@dataclass(frozen=True)
class HammockGrid:
    """Type A only: the [i] x [n+1-i] grid carrying the hammock of type i."""

    type_index: int
    left_segment: tuple[int, ...]
    right_segment: tuple[int, ...]
    cells: dict[tuple[int, int], int]

    def cell_of(self, position: int) -> tuple[int, int]:
        for cell, pos in self.cells.items():
            if pos == position:
                return cell
        raise KeyError(position)

    @staticmethod
    def leq(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
        return c1[0] >= c2[0] and c1[1] >= c2[1]


def grid_A(ar: ARQuiver, i: int) -> HammockGrid:
    """Lay the type-i hammock out on the grid given by the i-segmented cycle.

    The cell (k, l) with 1 <= k <= i < l <= n+1 carries the root spanning the
    interval [j_k, j_l - 1] of the segmented cycle (j_1 .. j_i | j_{i+1} .. j_{n+1}).
    """
    q = ar.quiver
    if diagram_type(q.diagram) != "A":
        raise ValueError("hammock grids exist in type A only")
    n = q.diagram.n
    left, right = segmented_cycle(q, i)
    j = left + right
    cells = {}
    for k in range(1, i + 1):
        for l in range(i + 1, n + 2):
            lo, hi = j[k - 1], j[l - 1]
            assert lo < hi
            root = tuple(1 if lo <= v <= hi - 1 else 0 for v in range(1, n + 1))
            cells[(k, l)] = ar.position_by_root[root]
    assert sorted(cells.values()) == sorted(ar.hammock(i))
    return HammockGrid(i, left, right, cells)


def ar_dot(ar: ARQuiver) -> str:
    """Graphviz rendering, one rank per level, node ids v<k>."""
    lines = ["digraph ar {", "  rankdir=LR;"]
    for i in range(1, ar.n + 1):
        positions = ar.level_positions(i)
        if positions:
            names = " ".join(f"v{k};" for k in positions)
            lines.append(f"  {{ rank=same; {names} }}")
    for k in range(1, ar.N + 1):
        coords = ",".join(str(x) for x in ar.root(k))
        lines.append(f'  v{k} [label="({coords})"];')
    for k, k2 in ar.arrows:
        lines.append(f"  v{k} -> v{k2};")
    lines.append("}")
    return "\n".join(lines) + "\n"
