"""Wiring diagrams of reduced words in type A: crossings, chambers, oriented
path graphs, path contribution vectors, and the staircase correspondence with
antichains for adapted words."""

from __future__ import annotations

from dataclasses import dataclass

from .arquiver import ARQuiver, grid_A
from .cartan import Vector, path_diagram, reflection_ordering
from .lusztig import Antichain
from .quiver import NotAdapted


Node = tuple[str, int] | int  # ("l", j) / ("r", j) borders, int crossing position


@dataclass(frozen=True)
class Chamber:
    band: int
    gap_lo: int
    gap_hi: int
    label: frozenset[int]
    left_cap: int | None
    right_cap: int | None


@dataclass(frozen=True)
class GPPath:
    type_index: int
    crossings: tuple[int, ...]
    wires: tuple[int, ...]  # one per segment, len(crossings) + 1


@dataclass(frozen=True)
class WiringDiagram:
    n: int
    word: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    occupancy: tuple[tuple[int, ...], ...]  # wires per track, per gap 0..N
    wire_route: dict[int, tuple[int, ...]]
    chambers: tuple[Chamber, ...]
    roots: tuple[Vector, ...]

    @property
    def N(self) -> int:
        return len(self.word)

    def level(self, k: int) -> int:
        return self.word[k - 1]

    def crossing_of(self, a: int, b: int) -> int:
        a, b = min(a, b), max(a, b)
        return self.pairs.index((a, b)) + 1

    def left_chamber(self, k: int) -> Chamber:
        return next(c for c in self.chambers if c.right_cap == k)

    def right_chamber(self, k: int) -> Chamber:
        return next(c for c in self.chambers if c.left_cap == k)


def build_wiring(word, n: int) -> WiringDiagram:
    """Simulate n+1 tracks; the k-th letter swaps the two wires at its level."""
    word = tuple(word)
    roots = reflection_ordering(path_diagram(n), word)  # validates reducedness
    tracks = list(range(1, n + 2))
    occupancy = [tuple(tracks)]
    pairs = []
    for t in word:
        a, b = tracks[t - 1], tracks[t]
        assert a < b, "wires meeting twice; the word is not reduced"
        pairs.append((a, b))
        tracks[t - 1], tracks[t] = b, a
        occupancy.append(tuple(tracks))
    for k, (a, b) in enumerate(pairs):
        root = roots[k]
        lo = root.index(1) + 1
        hi = n - tuple(reversed(root)).index(1)
        assert (a, b) == (lo, hi + 1), "crossing pair does not match the root interval"
    route: dict[int, list[int]] = {j: [] for j in range(1, n + 2)}
    for k, (a, b) in enumerate(pairs, start=1):
        route[a].append(k)
        route[b].append(k)
    chambers = []
    N = len(word)
    for band in range(1, n + 1):
        caps = [k for k in range(1, N + 1) if word[k - 1] == band]
        bounds = [0] + caps + [N + 1]
        for idx in range(len(bounds) - 1):
            chambers.append(
                Chamber(
                    band=band,
                    gap_lo=bounds[idx],
                    gap_hi=bounds[idx + 1] - 1,
                    label=frozenset(occupancy[bounds[idx]][:band]),
                    left_cap=bounds[idx] if idx > 0 else None,
                    right_cap=bounds[idx + 1] if idx + 1 < len(bounds) - 1 else None,
                )
            )
    return WiringDiagram(
        n=n,
        word=word,
        pairs=tuple(pairs),
        occupancy=tuple(occupancy),
        wire_route={j: tuple(r) for j, r in route.items()},
        chambers=tuple(chambers),
        roots=roots,
    )


def chamber_weight(n: int, label) -> Vector:
    """Sum over the label of the column weights nu_j = -w_{j-1} + w_j."""
    out = [0] * n
    for j in label:
        if 2 <= j <= n + 1:
            out[j - 2] -= 1
        if j <= n:
            out[j - 1] += 1
    return tuple(out)


def lambda_minus(wd: WiringDiagram, k: int) -> Vector:
    return chamber_weight(wd.n, wd.left_chamber(k).label)


def lambda_plus(wd: WiringDiagram, k: int) -> Vector:
    return chamber_weight(wd.n, wd.right_chamber(k).label)


def chamber_corners(wd: WiringDiagram, c: Chamber) -> frozenset[int]:
    """Crossings on the boundary of a chamber."""
    out = set()
    if c.left_cap is not None:
        out.add(c.left_cap)
    if c.right_cap is not None:
        out.add(c.right_cap)
    for p in range(c.gap_lo + 1, c.gap_hi + 1):
        if wd.word[p - 1] in (c.band - 1, c.band + 1):
            out.add(p)
    return frozenset(out)


def _forward(wire: int, i: int) -> bool:
    # Wires with index <= i travel right to left in the type-i orientation.
    return wire > i


def wire_ascends(wd: WiringDiagram, k: int, wire: int, forward: bool) -> bool:
    """Whether the wire climbs to a higher track through crossing k, seen in its
    travel direction.  The upper-left occupant descends going right."""
    upper_before = wd.occupancy[k - 1][wd.level(k) - 1]
    return wire != upper_before if forward else wire == upper_before


def _other_wire(wd: WiringDiagram, k: int, wire: int) -> int:
    a, b = wd.pairs[k - 1]
    return b if wire == a else a


def _forbidden_straight(wd: WiringDiagram, i: int, k: int, wire: int) -> bool:
    other = _other_wire(wd, k, wire)
    if _forward(wire, i) != _forward(other, i):
        return False
    return wire_ascends(wd, k, wire, _forward(wire, i))


def oriented_graph(wd: WiringDiagram, i: int) -> dict[Node, list[tuple[int, Node]]]:
    """Out-edge lists of the type-i orientation, keyed by vertex."""
    out: dict[Node, list[tuple[int, Node]]] = {}
    for wire in range(1, wd.n + 2):
        nodes: list[Node] = [("l", wire), *wd.wire_route[wire], ("r", wire)]
        if not _forward(wire, i):
            nodes.reverse()
        for a, b in zip(nodes, nodes[1:]):
            out.setdefault(a, []).append((wire, b))
    for v in out:
        out[v].sort(key=str)
    return out


def gp_paths(wd: WiringDiagram, i: int) -> list[GPPath]:
    """All paths from the entry border vertex of type i to its exit vertex that
    never pass straight through a same-direction crossing on the ascending wire."""
    if not (1 <= i <= wd.n):
        raise ValueError(f"type index {i} out of range")
    graph = oriented_graph(wd, i)
    goal: Node = ("l", i)
    found: list[GPPath] = []

    def dfs(node: Node, in_wire: int, crossings: tuple[int, ...], wires: tuple[int, ...]) -> None:
        if node == goal:
            found.append(GPPath(i, crossings, wires))
            return
        if not isinstance(node, int):
            return  # wrong border vertex
        for wire, nxt in graph.get(node, ()):
            if wire == in_wire and _forbidden_straight(wd, i, node, wire):
                continue
            dfs(nxt, wire, crossings + (node,), wires + (wire,))

    ((first_wire, first_node),) = graph[("l", i + 1)]
    dfs(first_node, first_wire, (), (first_wire,))
    found.sort(key=lambda p: (p.crossings, p.wires))
    return found


def is_gp_path(wd: WiringDiagram, path: GPPath) -> bool:
    """Validate endpoints, edge orientation, and absence of forbidden crossings."""
    i = path.type_index
    if len(path.wires) != len(path.crossings) + 1:
        return False
    if path.wires[0] != i + 1 or path.wires[-1] != i:
        return False
    graph = oriented_graph(wd, i)
    node: Node = ("l", i + 1)
    for idx, k in enumerate(path.crossings):
        wire = path.wires[idx]
        if (wire, k) not in graph.get(node, ()):
            return False
        out_wire = path.wires[idx + 1]
        if out_wire not in wd.pairs[k - 1]:
            return False
        if out_wire == wire and _forbidden_straight(wd, i, k, wire):
            return False
        node = k
    return (path.wires[-1], ("l", i)) in graph.get(node, ())


def k_vector(wd: WiringDiagram, path: GPPath) -> Vector:
    """+1 where the path drops to a lower wire index, -1 where it climbs."""
    vec = [0] * wd.N
    for idx, k in enumerate(path.crossings):
        h, l = path.wires[idx], path.wires[idx + 1]
        if h > l:
            vec[k - 1] = 1
        elif h < l:
            vec[k - 1] = -1
    return tuple(vec)


def gp_table(wd: WiringDiagram) -> list[tuple[int, GPPath, Vector]]:
    out = []
    for i in range(1, wd.n + 1):
        for path in gp_paths(wd, i):
            out.append((i, path, k_vector(wd, path)))
    return out


def gp_cone(wd: WiringDiagram, typed: bool = False) -> frozenset:
    """All contribution vectors of all path types."""
    rows = gp_table(wd)
    if typed:
        return frozenset((i, vec) for i, _, vec in rows)
    return frozenset(vec for _, _, vec in rows)


def limiting_path(wd: WiringDiagram, i: int) -> GPPath:
    """Ride wire i+1 to its crossing with wire i, then ride wire i back out."""
    v_alpha = wd.crossing_of(i, i + 1)
    fwd = wd.wire_route[i + 1]
    entry = fwd[: fwd.index(v_alpha) + 1]
    bwd = wd.wire_route[i]
    exit_part = tuple(reversed(bwd[: bwd.index(v_alpha)]))
    crossings = entry + exit_part
    wires = (i + 1,) * len(entry) + (i,) * (len(exit_part) + 1)
    return GPPath(i, crossings, wires)


@dataclass(frozen=True)
class Zones:
    type_index: int
    delta: GPPath
    chambers: tuple[Chamber, ...]
    z_positions: frozenset[int]
    y_positions: frozenset[int]


def zones(wd: WiringDiagram, i: int) -> Zones:
    """Chambers below wire i and above wire i+1, with their rightmost and
    boundary crossings and the limiting path."""
    v_alpha = wd.crossing_of(i, i + 1)
    chosen = tuple(c for c in wd.chambers if i in c.label and (i + 1) not in c.label)
    for c in chosen:
        assert c.right_cap is not None and c.right_cap <= v_alpha
    z = frozenset(c.right_cap for c in chosen)
    y: set[int] = set()
    for c in chosen:
        y |= chamber_corners(wd, c)
    return Zones(i, limiting_path(wd, i), chosen, z, frozenset(y))


def tau_wd(wd: WiringDiagram, k: int) -> int | None:
    """Previous crossing on the same level, when there is one."""
    level = wd.level(k)
    prev = [j for j in range(1, k) if wd.level(j) == level]
    return prev[-1] if prev else None


def path_antichain(wd: WiringDiagram, ar: ARQuiver, path: GPPath) -> Antichain:
    """Positions where the path turns from a forward wire onto a backward one."""
    if tuple(ar.word) != wd.word:
        raise NotAdapted("translation quiver and wiring diagram use different words")
    i = path.type_index
    turns = []
    for idx, k in enumerate(path.crossings):
        h, l = path.wires[idx], path.wires[idx + 1]
        if h > i and l <= i:
            turns.append(k)
    positions = tuple(sorted(turns))
    assert set(positions) <= set(ar.p_set(i))
    return Antichain(i, positions)


def antichain_path(wd: WiringDiagram, ar: ARQuiver, a: Antichain) -> GPPath:
    """Rebuild the staircase path whose turning points realize the antichain.

    Turning points are visited with grid row index strictly decreasing; the
    entry and exit ride the limiting wires i+1 and i, with at most one
    transfer crossing on each side.
    """
    if tuple(ar.word) != wd.word:
        raise NotAdapted("translation quiver and wiring diagram use different words")
    i = a.type_index
    grid = grid_A(ar, i)
    j = grid.left_segment + grid.right_segment
    cells = sorted((grid.cell_of(pos) for pos in a.positions), key=lambda c: -c[0])
    for (k1, l1), (k2, l2) in zip(cells, cells[1:]):
        assert k1 > k2 and l1 < l2, "positions are not an antichain in the grid"
    crossings: list[int] = []
    wires_seq: list[int] = []

    def ride_to(wire: int, target: int, forward: bool) -> None:
        route = list(wd.wire_route[wire])
        if not forward:
            route.reverse()
        pos = route.index(crossings[-1]) + 1 if crossings and crossings[-1] in route else 0
        for k in route[pos:]:
            crossings.append(k)
            wires_seq.append(wire)
            if k == target:
                return
        raise AssertionError("target crossing is not ahead on the wire")

    first_f = j[cells[0][1] - 1]
    if first_f != i + 1:
        ride_to(i + 1, wd.crossing_of(i + 1, first_f), forward=True)
    for idx, (k_cell, l_cell) in enumerate(cells):
        fwire = j[l_cell - 1]
        bwire = j[k_cell - 1]
        ride_to(fwire, wd.crossing_of(bwire, fwire), forward=True)
        if idx + 1 < len(cells):
            next_f = j[cells[idx + 1][1] - 1]
            ride_to(bwire, wd.crossing_of(bwire, next_f), forward=False)
        else:
            if bwire != i:
                ride_to(bwire, wd.crossing_of(bwire, i), forward=False)
            route_i = list(reversed(wd.wire_route[i]))
            pos = route_i.index(crossings[-1]) + 1 if crossings[-1] in route_i else 0
            for k in route_i[pos:]:
                crossings.append(k)
                wires_seq.append(i)
    wires_seq.append(i)
    path = GPPath(i, tuple(crossings), tuple(wires_seq))
    assert is_gp_path(wd, path), "reconstructed staircase is not a valid path"
    assert path_antichain(wd, ar, path) == a
    return path


def wiring_dot(wd: WiringDiagram) -> str:
    """Crossings as nodes, wire segments as edges, one rank per level."""
    lines = ["graph wiring {", "  rankdir=LR;"]
    for band in range(1, wd.n + 1):
        names = " ".join(f"v{k};" for k in range(1, wd.N + 1) if wd.level(k) == band)
        if names:
            lines.append(f"  {{ rank=same; {names} }}")
    for k in range(1, wd.N + 1):
        a, b = wd.pairs[k - 1]
        lines.append(f'  v{k} [label="v{a}{b}"];')
    for wire, route in sorted(wd.wire_route.items()):
        lines.append(f"  l{wire} [shape=plaintext]; r{wire} [shape=plaintext];")
        nodes = [f"l{wire}", *(f"v{k}" for k in route), f"r{wire}"]
        for u, v in zip(nodes, nodes[1:]):
            lines.append(f'  {u} -- {v} [label="L{wire}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def gp_graph_dot(wd: WiringDiagram, i: int) -> str:
    """The oriented type-i graph in graphviz form."""
    graph = oriented_graph(wd, i)

    def name(node: Node) -> str:
        if isinstance(node, int):
            return f"v{node}"
        side, wire = node
        return f"{side}{wire}"

    lines = [f"digraph gp{i} {{", "  rankdir=LR;"]
    for k in range(1, wd.N + 1):
        a, b = wd.pairs[k - 1]
        lines.append(f'  v{k} [label="v{a}{b}"];')
    for node in sorted(graph, key=str):
        for wire, nxt in graph[node]:
            lines.append(f'  {name(node)} -> {name(nxt)} [label="L{wire}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def paths_json(wd: WiringDiagram, type_index: int | None = None) -> list[dict]:
    return [
        {"type": i, "crossings": list(p.crossings), "k": list(vec)}
        for i, p, vec in gp_table(wd)
        if type_index is None or i == type_index
    ]
