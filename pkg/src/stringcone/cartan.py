"""Root systems and Weyl group combinatorics for simply laced types A and D.

Everything is exact integer arithmetic.  Roots are coordinate tuples in the
simple-root basis, weights are coordinate tuples in the fundamental-weight
basis; the two bases are never mixed implicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Vector = tuple[int, ...]


class NotSimplyLacedAD(ValueError):
    """The diagram is not a connected tree of type A_n or D_n."""


class NotReducedW0(ValueError):
    """The word is not a reduced expression of the longest Weyl element."""


@dataclass(frozen=True, order=True)
class DynkinDiagram:
    """Tree on vertices 1..n, edges canonically sorted with smaller endpoint first."""

    n: int
    edges: tuple[tuple[int, int], ...]


def dynkin_diagram(n: int, edges) -> DynkinDiagram:
    """Build a validated diagram; anything that is not an A/D tree is rejected."""
    if n < 1:
        raise NotSimplyLacedAD("need at least one vertex")
    canon = tuple(sorted(tuple(sorted(e)) for e in edges))
    if len(set(canon)) != len(canon):
        raise NotSimplyLacedAD("duplicate edge")
    for a, b in canon:
        if a == b:
            raise NotSimplyLacedAD(f"loop at vertex {a}")
        if not (1 <= a <= n and 1 <= b <= n):
            raise NotSimplyLacedAD(f"edge {a}-{b} out of vertex range 1..{n}")
    if len(canon) != n - 1:
        raise NotSimplyLacedAD("not a tree: wrong edge count")
    adj = {v: [] for v in range(1, n + 1)}
    for a, b in canon:
        adj[a].append(b)
        adj[b].append(a)
    seen = {1}
    stack = [1]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise NotSimplyLacedAD("not a tree: disconnected")
    branch = [v for v in adj if len(adj[v]) > 2]
    if any(len(adj[v]) > 3 for v in adj) or len(branch) > 1:
        raise NotSimplyLacedAD("vertex degrees admit only types A and D")
    if branch:
        b = branch[0]
        comps = []
        for start in adj[b]:
            comp = {start}
            stack = [start]
            while stack:
                for w in adj[stack.pop()]:
                    if w != b and w not in comp:
                        comp.add(w)
                        stack.append(w)
            comps.append(len(comp))
        if sorted(comps)[:2] != [1, 1]:
            raise NotSimplyLacedAD("branch legs admit only type D (two legs of length one)")
    return DynkinDiagram(n, canon)


def path_diagram(n: int) -> DynkinDiagram:
    """Type A_n line diagram 1 - 2 - ... - n."""
    return dynkin_diagram(n, [(i, i + 1) for i in range(1, n)])


def d_diagram(n: int) -> DynkinDiagram:
    """Type D_n with fork vertices 1, 2 joined to 3 and tail 3 - 4 - ... - n."""
    if n < 4:
        raise NotSimplyLacedAD("type D needs rank at least 4")
    edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
    return dynkin_diagram(n, edges)


def diagram_type(d: DynkinDiagram) -> str:
    degrees = [0] * (d.n + 1)
    for a, b in d.edges:
        degrees[a] += 1
        degrees[b] += 1
    return "D" if any(deg == 3 for deg in degrees) else "A"


@lru_cache(maxsize=None)
def cartan_matrix(d: DynkinDiagram) -> tuple[Vector, ...]:
    rows = [[2 if i == j else 0 for j in range(d.n)] for i in range(d.n)]
    for a, b in d.edges:
        rows[a - 1][b - 1] = -1
        rows[b - 1][a - 1] = -1
    return tuple(tuple(r) for r in rows)


def simple_root(d: DynkinDiagram, i: int) -> Vector:
    _check_letter(d, i)
    return tuple(1 if j == i - 1 else 0 for j in range(d.n))


def fundamental_weight(d: DynkinDiagram, i: int) -> Vector:
    _check_letter(d, i)
    return tuple(1 if j == i - 1 else 0 for j in range(d.n))


def root_height(v: Vector) -> int:
    return sum(v)


def _check_letter(d: DynkinDiagram, i: int) -> None:
    if not (1 <= i <= d.n):
        raise ValueError(f"letter {i} out of range 1..{d.n}")


def reflect_root(d: DynkinDiagram, i: int, v: Vector) -> Vector:
    """Simple reflection s_i on a vector in simple-root coordinates."""
    _check_letter(d, i)
    row = cartan_matrix(d)[i - 1]
    coef = sum(c * x for c, x in zip(row, v))
    out = list(v)
    out[i - 1] -= coef
    return tuple(out)


def reflect_weight(d: DynkinDiagram, i: int, v: Vector) -> Vector:
    """Simple reflection s_i on a vector in fundamental-weight coordinates.

    Uses s_i(w_j) = w_j - delta_ij a_i, with a_i expressed in the weight basis
    through the Cartan matrix.
    """
    _check_letter(d, i)
    coef = v[i - 1]
    if coef == 0:
        return tuple(v)
    col = [cartan_matrix(d)[k][i - 1] for k in range(d.n)]
    return tuple(x - coef * c for x, c in zip(v, col))


def weyl_act(d: DynkinDiagram, word, v: Vector, basis: str = "root") -> Vector:
    """Apply the group element s_{i1} s_{i2} ... s_{im} to v.

    The last letter acts innermost, so weyl_act(d, (1, 2), v) is s_1(s_2(v)).
    """
    if basis == "root":
        reflect = reflect_root
    elif basis == "weight":
        reflect = reflect_weight
    else:
        raise ValueError(f"unknown basis {basis!r}")
    for i in reversed(tuple(word)):
        v = reflect(d, i, v)
    return v


def alpha_to_omega(d: DynkinDiagram, v: Vector) -> Vector:
    """Convert simple-root coordinates to fundamental-weight coordinates."""
    cm = cartan_matrix(d)
    return tuple(sum(cm[i][j] * v[j] for j in range(d.n)) for i in range(d.n))


def omega_to_alpha(d: DynkinDiagram, v: Vector) -> Vector:
    """Convert weight coordinates back to root coordinates (must land on integers)."""
    cm = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(cartan_matrix(d), v)]
    n = d.n
    for col in range(n):
        piv = next(r for r in range(col, n) if cm[r][col] != 0)
        cm[col], cm[piv] = cm[piv], cm[col]
        inv = 1 / cm[col][col]
        cm[col] = [x * inv for x in cm[col]]
        for r in range(n):
            if r != col and cm[r][col] != 0:
                f = cm[r][col]
                cm[r] = [x - f * y for x, y in zip(cm[r], cm[col])]
    out = [row[n] for row in cm]
    if any(x.denominator != 1 for x in out):
        raise ValueError("weight vector is not in the root lattice")
    return tuple(int(x) for x in out)


def pair_root_weight(root: Vector, weight: Vector) -> int:
    """Cartan pairing of a root (alpha basis) with a weight (omega basis)."""
    return sum(m * w for m, w in zip(root, weight))


@lru_cache(maxsize=None)
def positive_roots(d: DynkinDiagram) -> tuple[Vector, ...]:
    """All positive roots, sorted by height then lexicographically."""
    found = {simple_root(d, i) for i in range(1, d.n + 1)}
    frontier = list(found)
    while frontier:
        v = frontier.pop()
        for i in range(1, d.n + 1):
            w = reflect_root(d, i, v)
            if all(x >= 0 for x in w) and w not in found:
                found.add(w)
                frontier.append(w)
    roots = sorted(found, key=lambda r: (root_height(r), r))
    n = d.n
    expected = n * (n + 1) // 2 if diagram_type(d) == "A" else n * (n - 1)
    assert len(roots) == expected
    return tuple(roots)


@lru_cache(maxsize=None)
def root_index(d: DynkinDiagram) -> dict[Vector, int]:
    """Map each positive root to its index in the canonical ordering."""
    return {r: k for k, r in enumerate(positive_roots(d))}


def is_root(d: DynkinDiagram, v: Vector) -> bool:
    pos = root_index(d)
    return tuple(v) in pos or tuple(-x for x in v) in pos


def num_positive_roots(d: DynkinDiagram) -> int:
    return len(positive_roots(d))


def reflection_ordering(d: DynkinDiagram, word) -> tuple[Vector, ...]:
    """Total order b_1, ..., b_N on positive roots induced by a reduced word for w0.

    b_k = s_{i1} ... s_{i(k-1)}(a_{ik}).  Raises NotReducedW0 unless the word
    has length N and every b_k is a distinct positive root.
    """
    word = tuple(word)
    for i in word:
        _check_letter(d, i)
    n_pos = num_positive_roots(d)
    if len(word) != n_pos:
        raise NotReducedW0(f"word length {len(word)} != {n_pos} positive roots")
    betas = []
    prefix: list[int] = []
    for i in word:
        beta = weyl_act(d, prefix, simple_root(d, i))
        if any(x < 0 for x in beta):
            raise NotReducedW0(f"prefix of length {len(prefix) + 1} is not reduced")
        betas.append(beta)
        prefix.append(i)
    if len(set(betas)) != n_pos:
        raise NotReducedW0("repeated root in the induced ordering")
    return tuple(betas)


def is_reduced_w0(d: DynkinDiagram, word) -> bool:
    try:
        reflection_ordering(d, word)
    except NotReducedW0:
        return False
    return True


@lru_cache(maxsize=None)
def longest_word(d: DynkinDiagram) -> tuple[int, ...]:
    """A canonical reduced word for w0 (greedy smallest extendable letter)."""
    # Track the images w(a_j) of all simple roots; appending s_i on the right
    # maps w(a_j) to w(a_j) - c_ij w(a_i).
    cm = cartan_matrix(d)
    images = [simple_root(d, j) for j in range(1, d.n + 1)]
    word: list[int] = []
    while True:
        ext = [i for i in range(1, d.n + 1) if all(x >= 0 for x in images[i - 1])]
        if not ext:
            break
        i = min(ext)
        word.append(i)
        base = images[i - 1]
        images = [
            tuple(x - cm[i - 1][j] * y for x, y in zip(img, base)) if j != i - 1 else tuple(-x for x in base)
            for j, img in enumerate(images)
        ]
    assert len(word) == num_positive_roots(d)
    return tuple(word)


@lru_cache(maxsize=None)
def w0_involution(d: DynkinDiagram) -> tuple[int, ...]:
    """The diagram automorphism i -> i* with w0(a_i) = -a_{i*}, as a tuple."""
    word = longest_word(d)
    out = []
    for i in range(1, d.n + 1):
        img = weyl_act(d, word, simple_root(d, i))
        neg = tuple(-x for x in img)
        assert root_height(neg) == 1
        out.append(neg.index(1) + 1)
    return tuple(out)
