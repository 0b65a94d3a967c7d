"""String parametrization: raising/lowering operators, the embedding membership
test, brute-force string-set generation, and integer cone point utilities."""

from __future__ import annotations

from itertools import product

from .cartan import DynkinDiagram, Vector, cartan_matrix
from .crystal import CrystalGraph, bfs_crystal


class LetterAbsent(ValueError):
    """No position of the word carries the requested letter."""


def string_r(d: DynkinDiagram, word, a) -> tuple[int, ...]:
    """r_k = a_k + sum_{j<k} c_{i_j, i_k} a_j."""
    cm = cartan_matrix(d)
    word = tuple(word)
    out = []
    for k, ik in enumerate(word):
        out.append(a[k] + sum(cm[ij - 1][ik - 1] * a[j] for j, ij in enumerate(word[:k])))
    return tuple(out)


def _letter_positions(word, i):
    positions = [k for k, letter in enumerate(word) if letter == i]
    if not positions:
        raise LetterAbsent(f"letter {i} does not occur in the word")
    return positions


def string_e(d: DynkinDiagram, word, i: int, a) -> tuple[int, ...]:
    """Raise at the last position where the running maximum is attained."""
    r = string_r(d, word, a)
    positions = _letter_positions(word, i)
    xi = max(r[k] for k in positions)
    k2 = max(k for k in positions if r[k] == xi)
    out = list(a)
    out[k2] += 1
    return tuple(out)


def string_f(d: DynkinDiagram, word, i: int, a):
    """Lower at the first maximum position; None when the entry there is zero."""
    r = string_r(d, word, a)
    positions = _letter_positions(word, i)
    xi = max(r[k] for k in positions)
    k1 = min(k for k in positions if r[k] == xi)
    if a[k1] == 0:
        return None
    out = list(a)
    out[k1] -= 1
    return tuple(out)


def is_string(d: DynkinDiagram, word, a) -> bool:
    """Membership test for the embedded crystal image, by lowering to zero.

    The image is the raising-closure of the zero vector, and lowering undoes
    raising exactly wherever it is defined; so a nonzero point lies in the
    image iff some applicable lowering does (the last raising edge of any
    witnessing path can be peeled off).  Search the lowerings with memoization.
    """
    word = tuple(word)
    letters = sorted(set(word))
    a = tuple(a)
    if any(x < 0 for x in a):
        return False
    seen: dict[tuple[int, ...], bool] = {(0,) * len(word): True}

    def member(v: tuple[int, ...]) -> bool:
        if v in seen:
            return seen[v]
        seen[v] = False  # cycle-safe placeholder; lowering strictly decreases
        result = False
        for i in letters:
            down = string_f(d, word, i, v)
            if down is not None and member(down):
                result = True
                break
        seen[v] = result
        return result

    return member(a)


def strings_in_box(d: DynkinDiagram, word, box: int) -> frozenset[tuple[int, ...]]:
    """The is_string filter of the whole box, memoized over lowering steps.

    Lowering strictly decreases one coordinate, so verdicts can be filled in
    box-lexicographic order with each point looking up its lowered neighbour.
    """
    word = tuple(word)
    n_len = len(word)
    letters = sorted(set(word))
    by_letter = {i: [k for k, letter in enumerate(word) if letter == i] for i in letters}
    cm = cartan_matrix(d)
    cross = {i: [cm[i - 1][letter - 1] for letter in word] for i in letters}
    side = box + 1
    weights = [side**k for k in range(n_len)]
    verdict = bytearray(side**n_len)
    verdict[0] = 1
    found: list[tuple[int, ...]] = [(0,) * n_len]
    r = [0] * n_len
    a = [0] * n_len
    for idx in range(1, side**n_len):
        # advance the mixed-radix counter and patch r incrementally
        pos = 0
        while a[pos] == box:
            delta = -box
            a[pos] = 0
            row = cross[word[pos]]
            r[pos] += delta
            for j in range(pos + 1, n_len):
                r[j] += delta * row[j]
            pos += 1
        a[pos] += 1
        row = cross[word[pos]]
        r[pos] += 1
        for j in range(pos + 1, n_len):
            r[j] += row[j]
        for i in letters:
            positions = by_letter[i]
            xi = max(r[p] for p in positions)
            k1 = min(p for p in positions if r[p] == xi)
            if a[k1] and verdict[idx - weights[k1]]:
                verdict[idx] = 1
                found.append(tuple(a))
                break
    return frozenset(found)


def generate_strings(d: DynkinDiagram, word, box: int) -> frozenset[tuple[int, ...]]:
    """Close the zero vector under all raising operators, pruned to the box.

    Pruning is sound: a raising step only increments one coordinate, so every
    in-box string is reached through intermediates that stay in the box.
    """
    word = tuple(word)
    letters = sorted(set(word))
    zero = (0,) * len(word)
    seen = {zero}
    stack = [zero]
    while stack:
        a = stack.pop()
        r = string_r(d, word, a)
        for i in letters:
            positions = [k for k, letter in enumerate(word) if letter == i]
            xi = max(r[k] for k in positions)
            k2 = max(k for k in positions if r[k] == xi)
            if a[k2] >= box:
                continue
            b = a[:k2] + (a[k2] + 1,) + a[k2 + 1:]
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return frozenset(seen)


def string_crystal(d: DynkinDiagram, word, depth: int) -> CrystalGraph:
    word = tuple(word)
    letters = sorted(set(word))
    zero = (0,) * len(word)
    return bfs_crystal(zero, letters, lambda i, v: string_e(d, word, i, v), depth)


def string_weight(d: DynkinDiagram, word, a) -> Vector:
    """Sum of a_k times the simple root of the k-th letter."""
    out = [0] * d.n
    for value, letter in zip(a, word):
        out[letter - 1] += value
    return tuple(out)


def in_cone(a, normals) -> bool:
    """Exact test of every inequality normal . a >= 0."""
    a = tuple(a)
    for normal in normals:
        if len(normal) != len(a):
            raise ValueError("dimension mismatch between point and normal")
        if sum(x * y for x, y in zip(normal, a)) < 0:
            return False
    return True


def cone_points(normals, box: int, dim: int) -> frozenset[tuple[int, ...]]:
    """Integer points of the box [0..box]^dim satisfying every inequality."""
    normals = [tuple(v) for v in normals]
    return frozenset(a for a in product(range(box + 1), repeat=dim) if in_cone(a, normals))


def cone_points_pruned(normals, box: int, dim: int) -> frozenset[tuple[int, ...]]:
    """Same set as cone_points, by coordinate search with early rejection.

    An inequality is checked as soon as its last supporting coordinate is
    assigned, cutting entire subtrees of the box.
    """
    normals = [tuple(v) for v in normals]
    for normal in normals:
        if len(normal) != dim:
            raise ValueError("dimension mismatch between box and normal")
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(dim)]
    for normal in normals:
        support = [k for k, c in enumerate(normal) if c]
        if support:
            by_last[max(support)].append(normal)
    out: list[tuple[int, ...]] = []
    point = [0] * dim

    def walk(k: int) -> None:
        if k == dim:
            out.append(tuple(point))
            return
        for v in range(box + 1):
            point[k] = v
            if all(
                sum(c * point[j] for j, c in enumerate(normal) if c) >= 0
                for normal in by_last[k]
            ):
                walk(k + 1)
        point[k] = 0

    walk(0)
    return frozenset(out)


def pretty_inequality(vec) -> str:
    """Render a normal as e.g. t4+t5-t3>=0, positive terms before negative."""
    pos = [(k + 1, c) for k, c in enumerate(vec) if c > 0]
    neg = [(k + 1, -c) for k, c in enumerate(vec) if c < 0]
    if not pos and not neg:
        return "0>=0"
    parts = []
    for idx, (k, c) in enumerate(pos):
        term = f"t{k}" if c == 1 else f"{c}t{k}"
        parts.append(term if idx == 0 else "+" + term)
    for k, c in neg:
        term = f"t{k}" if c == 1 else f"{c}t{k}"
        parts.append("-" + term)
    return "".join(parts) + ">=0"


def inequalities_json(typed_normals) -> list[dict]:
    """JSON rows [{"type": i, "normal": [...], "pretty": ...}] in given order."""
    return [
        {"type": i, "normal": list(normal), "pretty": pretty_inequality(normal)}
        for i, normal in typed_normals
    ]
