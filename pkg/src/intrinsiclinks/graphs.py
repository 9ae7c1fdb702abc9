"""Graphs, cycles, spatial embeddings and planar drawings.

An embedding maps vertices to distinct points of space and edges to
pairwise non-crossing polyline routes; a drawing maps them to the plane and
allows routes to cross, as long as every contact is a transversal crossing
of exactly two sides at an interior point of both.  Validators return
structured violation lists instead of raising so that callers can report
all defects of an instance at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .errors import DrawingNotGeneral, GeneralPositionViolation, PointsNotOnRoute
from .geometry import (
    NON_GENERIC,
    OVERLAP,
    Point2,
    Point3,
    Segment2,
    bounding_box_disjoint3,
    dot2,
    meet_segments3,
    orient2d,
    point_on_segment3,
    seg_intersect2,
)
from .linking import SpatialPolyline, closed_polygon, open_polyline

EdgeKey = tuple[str, str]


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with an explicit vertex order.

    The vertex order fixes every downstream canonical choice: edge keys are
    ordered by vertex index, edge lists are sorted, and "the first vertex"
    is well defined.  Build through `make_graph` or the factories below.
    """

    vertices: tuple[str, ...]
    edges: tuple[EdgeKey, ...]

    def index(self, v: str) -> int:
        return self.vertices.index(v)

    def edge_key(self, u: str, v: str) -> EdgeKey:
        if u == v:
            raise ValueError("loops are not edges")
        return (u, v) if self.index(u) < self.index(v) else (v, u)

    def has_edge(self, u: str, v: str) -> bool:
        return self.edge_key(u, v) in set(self.edges)

    def neighbors(self, v: str) -> tuple[str, ...]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return tuple(sorted(out, key=self.index))

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def edges_at(self, v: str) -> tuple[EdgeKey, ...]:
        return tuple(e for e in self.edges if v in e)

    def cycle_edges(self, cycle: "Cycle") -> tuple[EdgeKey, ...]:
        seq = cycle.vertices
        return tuple(self.edge_key(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def make_graph(vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> Graph:
    verts = tuple(vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("repeated vertex name")
    idx = {v: i for i, v in enumerate(verts)}
    seen: set[EdgeKey] = set()
    for u, v in edges:
        if u not in idx or v not in idx:
            raise ValueError(f"edge ({u}, {v}) uses an undeclared vertex")
        if u == v:
            raise ValueError(f"loop at {u}")
        key = (u, v) if idx[u] < idx[v] else (v, u)
        seen.add(key)
    ordered = tuple(sorted(seen, key=lambda e: (idx[e[0]], idx[e[1]])))
    return Graph(verts, ordered)


def complete_graph(n: int, prefix: str = "v") -> Graph:
    verts = [f"{prefix}{i}" for i in range(1, n + 1)]
    return make_graph(verts, combinations(verts, 2))


def complete_bipartite(m: int, n: int, prefixes: tuple[str, str] = ("a", "b")) -> Graph:
    left = [f"{prefixes[0]}{i}" for i in range(1, m + 1)]
    right = [f"{prefixes[1]}{i}" for i in range(1, n + 1)]
    return make_graph(left + right, ((u, v) for u in left for v in right))


def bipartition(g: Graph) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Two-color a connected bipartite graph; the part holding the first
    vertex comes first.  Raises ValueError when the graph is not bipartite
    or not connected."""
    if not g.vertices:
        raise ValueError("empty graph")
    color: dict[str, int] = {g.vertices[0]: 0}
    queue = [g.vertices[0]]
    while queue:
        v = queue.pop(0)
        for w in g.neighbors(v):
            if w not in color:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                raise ValueError("graph is not bipartite")
    if len(color) != len(g.vertices):
        raise ValueError("graph is not connected")
    part0 = tuple(v for v in g.vertices if color[v] == 0)
    part1 = tuple(v for v in g.vertices if color[v] == 1)
    return part0, part1


def is_complete(g: Graph) -> bool:
    n = len(g.vertices)
    return len(g.edges) == n * (n - 1) // 2


def is_complete_bipartite(g: Graph, m: int, n: int) -> bool:
    try:
        p0, p1 = bipartition(g)
    except ValueError:
        return False
    if sorted((len(p0), len(p1))) != sorted((m, n)):
        return False
    return len(g.edges) == len(p0) * len(p1)


@dataclass(frozen=True)
class Cycle:
    """A cycle as a canonical vertex sequence.

    Canonical form: the lexicographically least vertex comes first and the
    second vertex is the smaller of its two neighbors, so each cycle has
    exactly one representation regardless of rotation or direction.
    """

    vertices: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def disjoint_from(self, other: "Cycle") -> bool:
        return not (self.vertex_set() & other.vertex_set())


def canonical_cycle_order(seq: Sequence[str]) -> tuple[str, ...]:
    seq = tuple(seq)
    n = len(seq)
    start = min(range(n), key=lambda i: seq[i])
    rotated = seq[start:] + seq[:start]
    if rotated[1] > rotated[-1]:
        rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return rotated


def make_cycle(g: Graph, seq: Sequence[str]) -> Cycle:
    seq = tuple(seq)
    if len(seq) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if len(set(seq)) != len(seq):
        raise ValueError("cycle repeats a vertex")
    for i in range(len(seq)):
        if not g.has_edge(seq[i], seq[(i + 1) % len(seq)]):
            raise ValueError(f"({seq[i]}, {seq[(i + 1) % len(seq)]}) is not an edge")
    return Cycle(canonical_cycle_order(seq))


def enumerate_cycles(g: Graph, length: int) -> tuple[Cycle, ...]:
    """All cycles of the given length, canonical and sorted.  Exhaustive
    enumeration; meant for the small graphs this package works with."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    found: set[Cycle] = set()
    for subset in combinations(g.vertices, length):
        first = subset[0]
        for perm in permutations(subset[1:]):
            seq = (first,) + perm
            if all(g.has_edge(seq[i], seq[(i + 1) % length]) for i in range(length)):
                found.add(Cycle(canonical_cycle_order(seq)))
    return tuple(sorted(found, key=lambda c: c.vertices))


def enumerate_disjoint_cycle_pairs(
    g: Graph, len1: int, len2: int
) -> tuple[tuple[Cycle, Cycle], ...]:
    """All unordered pairs of vertex-disjoint cycles of the two lengths."""
    first = enumerate_cycles(g, len1)
    if len1 == len2:
        return tuple(
            (c1, c2)
            for i, c1 in enumerate(first)
            for c2 in first[i + 1 :]
            if c1.disjoint_from(c2)
        )
    second = enumerate_cycles(g, len2)
    return tuple((c1, c2) for c1 in first for c2 in second if c1.disjoint_from(c2))


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    subjects: tuple = ()

    def to_dict(self) -> dict:
        return {"kind": self.kind, "message": self.message, "subjects": list(map(str, self.subjects))}


# ---------------------------------------------------------------------------
# spatial embeddings


@dataclass(frozen=True, eq=True)
class PLEmbedding:
    """Piecewise-linear embedding: positions plus an open polyline route per
    edge, oriented from the smaller-indexed endpoint.  Treat as immutable."""

    graph: Graph
    position: dict[str, Point3]
    route: dict[EdgeKey, SpatialPolyline]

    def __hash__(self):  # pragma: no cover - embeddings are never dict keys
        raise TypeError("embeddings are not hashable")

    def route_chain(self, u: str, v: str) -> tuple[Point3, ...]:
        """Route vertices oriented from u to v."""
        key = self.graph.edge_key(u, v)
        pts = self.route[key].vertices
        return pts if key[0] == u else tuple(reversed(pts))


def make_embedding(
    graph: Graph,
    positions: Mapping[str, Point3],
    routes: Mapping[tuple[str, str], Sequence[Point3]] | None = None,
) -> PLEmbedding:
    """Build an embedding; unspecified routes are straight segments.

    Route point sequences may be given in either orientation and may either
    include or omit the endpoint positions; straight-through interior
    points are dropped.  Structural errors (missing positions, routes whose
    ends match neither endpoint) raise ValueError; geometric violations are
    the business of `validate_embedding`.
    """
    pos = {v: positions[v] for v in graph.vertices}
    built: dict[EdgeKey, SpatialPolyline] = {}
    given: dict[EdgeKey, Sequence[Point3]] = {}
    if routes:
        for (u, v), pts in routes.items():
            given[graph.edge_key(u, v)] = tuple(pts)
    for key in graph.edges:
        pu, pv = pos[key[0]], pos[key[1]]
        pts = list(given.get(key, ()))
        if not pts:
            chain = [pu, pv]
        else:
            if pts[0] != pu and pts[0] != pv and pts[-1] != pu and pts[-1] != pv:
                chain = [pu] + pts + [pv]  # interior points only
            else:
                chain = pts
            if chain[0] == pv and chain[-1] == pu:
                chain = list(reversed(chain))
            if chain[0] != pu or chain[-1] != pv:
                raise ValueError(f"route for {key} does not join its endpoint positions")
        built[key] = open_polyline(chain)
    return PLEmbedding(graph, pos, built)


def _terminal_side_at(poly: SpatialPolyline, p: Point3) -> int | None:
    """Index of the terminal side of an open polyline ending at p, if any."""
    if poly.vertices[0] == p:
        return 0
    if poly.vertices[-1] == p:
        return len(poly.vertices) - 2
    return None


def validate_embedding(emb: PLEmbedding) -> tuple[Violation, ...]:
    """Geometric validation: distinct positions, routes meeting only at
    shared endpoint positions, no route through a foreign vertex."""
    out: list[Violation] = []
    g = emb.graph
    pos = emb.position

    by_point: dict[Point3, list[str]] = {}
    for v in g.vertices:
        by_point.setdefault(pos[v], []).append(v)
    for p, vs in by_point.items():
        if len(vs) > 1:
            out.append(Violation("coincident-vertices", f"vertices {vs} share a position", tuple(vs)))

    usable: list[EdgeKey] = []
    for key in g.edges:
        poly = emb.route.get(key)
        if poly is None:
            out.append(Violation("missing-route", f"edge {key} has no route", (key,)))
            continue
        if poly.closed:
            out.append(Violation("closed-route", f"edge {key} has a closed route", (key,)))
            continue
        if poly.vertices[0] != pos[key[0]] or poly.vertices[-1] != pos[key[1]]:
            out.append(Violation("route-endpoint-mismatch", f"route of {key} does not join its endpoints", (key,)))
        usable.append(key)

    for key in usable:
        poly = emb.route[key]
        for w in g.vertices:
            if w in key:
                continue
            for s in poly.sides():
                if point_on_segment3(pos[w], s):
                    out.append(
                        Violation("vertex-on-route", f"route of {key} passes through vertex {w}", (key, w))
                    )

    edges = usable
    for i, e1 in enumerate(edges):
        r1 = emb.route[e1]
        for e2 in edges[i + 1 :]:
            r2 = emb.route[e2]
            shared = set(e1) & set(e2)
            meet_at = pos[next(iter(shared))] if shared else None
            for i1, s1 in enumerate(r1.sides()):
                for i2, s2 in enumerate(r2.sides()):
                    if bounding_box_disjoint3(s1, s2):
                        continue
                    m = meet_segments3(s1, s2)
                    if m is None:
                        continue
                    if m is OVERLAP:
                        out.append(
                            Violation("routes-overlap", f"routes of {e1} and {e2} overlap", (e1, e2, i1, i2))
                        )
                        continue
                    if meet_at is not None and m == meet_at:
                        if _terminal_side_at(r1, meet_at) == i1 and _terminal_side_at(r2, meet_at) == i2:
                            continue  # legitimate meeting at the shared vertex
                    kind = "routes-cross" if not shared else "adjacent-routes-meet-off-vertex"
                    out.append(
                        Violation(kind, f"routes of {e1} and {e2} meet away from a shared vertex", (e1, e2, i1, i2))
                    )
    return tuple(out)


def _locate_on_route(poly: SpatialPolyline, p: Point3) -> tuple[int, Fraction] | None:
    """Position of p along an open polyline as (side index, parameter in
    [0,1)); the terminal vertex is (last side, 1) normalized to None here
    only when off-route."""
    for i, s in enumerate(poly.sides()):
        if point_on_segment3(p, s):
            d = s.q - s.p
            if d.x != 0:
                t = Fraction(p.x - s.p.x, d.x)
            elif d.y != 0:
                t = Fraction(p.y - s.p.y, d.y)
            else:
                t = Fraction(p.z - s.p.z, d.z)
            if t == 1:
                if i == len(poly.sides()) - 1:
                    return (i, Fraction(1))
                return (i + 1, Fraction(0))
            return (i, Fraction(t))
    return None


def subdivide(emb: PLEmbedding, edge: tuple[str, str], interior_points: Sequence[Point3]) -> PLEmbedding:
    """Replace an edge by a path through new degree-2 vertices placed at the
    given points, which must lie on the existing route, strictly inside it,
    in route order.  The carrier (the union of all routes) is unchanged."""
    g = emb.graph
    key = g.edge_key(*edge)
    if key not in set(g.edges):
        raise ValueError(f"{edge} is not an edge")
    poly = emb.route[key]
    pts = list(interior_points)
    if not pts:
        raise ValueError("need at least one subdivision point")

    params: list[tuple[int, Fraction]] = []
    for p in pts:
        loc = _locate_on_route(poly, p)
        if loc is None:
            raise PointsNotOnRoute(f"{p.coords()} is not on the route of {key}")
        if loc == (0, Fraction(0)) or loc == (len(poly.sides()) - 1, Fraction(1)):
            raise PointsNotOnRoute(f"{p.coords()} is an endpoint of {key}, not interior")
        params.append(loc)
    if any(params[i] >= params[i + 1] for i in range(len(params) - 1)):
        raise PointsNotOnRoute("subdivision points are not in strict route order")

    # walk the chain, splitting at each cut
    pieces: list[list[Point3]] = []
    current: list[Point3] = [poly.vertices[0]]
    cut_iter = iter(list(zip(params, pts)))
    next_cut = next(cut_iter, None)
    for i in range(len(poly.sides())):
        side_end = poly.vertices[i + 1]
        while next_cut is not None and next_cut[0][0] == i:
            cut_point = next_cut[1]
            if current[-1] != cut_point:
                current.append(cut_point)
            pieces.append(current)
            current = [cut_point]
            next_cut = next(cut_iter, None)
        if current[-1] != side_end:
            current.append(side_end)
    pieces.append(current)

    u, v = key
    new_names = []
    existing = set(g.vertices)
    for i in range(len(pts)):
        name = f"{u}.{v}.{i + 1}"
        if name in existing:
            raise ValueError(f"subdivision name {name} collides with an existing vertex")
        new_names.append(name)

    path = [u] + new_names + [v]
    new_vertices = list(g.vertices) + new_names
    new_edges = [e for e in g.edges if e != key]
    new_edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
    new_graph = make_graph(new_vertices, new_edges)

    new_positions = dict(emb.position)
    for name, p in zip(new_names, pts):
        new_positions[name] = p

    new_routes: dict[tuple[str, str], Sequence[Point3]] = {
        e: emb.route[e].vertices for e in g.edges if e != key
    }
    for i in range(len(path) - 1):
        new_routes[(path[i], path[i + 1])] = tuple(pieces[i])
    return make_embedding(new_graph, new_positions, new_routes)


def smooth(emb: PLEmbedding) -> PLEmbedding:
    """Undo subdivisions: repeatedly absorb any degree-2 vertex whose two
    neighbors are not yet adjacent, concatenating the two routes.  Stops
    when no such vertex remains (e.g. a triangle stays a triangle).

    Later-listed vertices are absorbed first.  `subdivide` appends its new
    vertices, so smoothing a subdivision recovers the original vertex set
    even when the whole graph is one cycle."""
    g = emb.graph
    pos = dict(emb.position)
    routes: dict[EdgeKey, SpatialPolyline] = dict(emb.route)
    while True:
        target = None
        for w in reversed(g.vertices):
            if g.degree(w) != 2:
                continue
            u, x = g.neighbors(w)
            if u != x and not g.has_edge(u, x):
                target = (w, u, x)
                break
        if target is None:
            return PLEmbedding(g, pos, routes)
        w, u, x = target
        k1, k2 = g.edge_key(u, w), g.edge_key(w, x)
        chain1 = routes[k1].vertices if k1[0] == u else tuple(reversed(routes[k1].vertices))
        chain2 = routes[k2].vertices if k2[0] == w else tuple(reversed(routes[k2].vertices))
        merged = list(chain1) + list(chain2[1:])
        new_vertices = [v for v in g.vertices if v != w]
        new_edges = [e for e in g.edges if e not in (k1, k2)] + [(u, x)]
        g = make_graph(new_vertices, new_edges)
        del pos[w]
        del routes[k1]
        del routes[k2]
        new_key = g.edge_key(u, x)
        if new_key[0] != u:
            merged = list(reversed(merged))
        routes[new_key] = open_polyline(merged)


def cycle_route(emb: PLEmbedding, cycle: Cycle) -> SpatialPolyline:
    """The closed polygon traced by a cycle's edge routes."""
    points: list[Point3] = []
    seq = cycle.vertices
    for i in range(len(seq)):
        chain = emb.route_chain(seq[i], seq[(i + 1) % len(seq)])
        points.extend(chain[:-1])
    return closed_polygon(points)


# ---------------------------------------------------------------------------
# planar drawings


@dataclass(frozen=True)
class PlanarPolyline:
    """A broken line in the plane.  Unlike its spatial counterpart it may
    cross itself: drawings represent maps, not embeddings.  Corners must
    still be genuine (consecutive sides never continue straight)."""

    vertices: tuple[Point2, ...]
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        n = len(self.vertices)
        if n < 2 or (self.closed and n < 3):
            raise ValueError("polyline needs at least 2 vertices, closed needs 3")
        for i in range(n - 1):
            if self.vertices[i] == self.vertices[i + 1]:
                raise ValueError("consecutive vertices coincide")
        if self.closed and self.vertices[0] == self.vertices[-1]:
            raise ValueError("closed polyline must not repeat its first vertex")
        corner_range = range(n) if self.closed else range(1, n - 1)
        for i in corner_range:
            u = self.vertices[(i - 1) % n]
            v = self.vertices[i]
            w = self.vertices[(i + 1) % n]
            if orient2d(u, v, w) == 0:
                raise ValueError(f"straight-through vertex at index {i}")

    def sides(self) -> tuple[Segment2, ...]:
        v = self.vertices
        out = [Segment2(v[i], v[i + 1]) for i in range(len(v) - 1)]
        if self.closed:
            out.append(Segment2(v[-1], v[0]))
        return tuple(out)


def _drop_straight_corners2(points: list[Point2], closed: bool) -> list[Point2]:
    out: list[Point2] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    if closed and len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        n = len(out)
        rng = range(n) if closed else range(1, n - 1)
        for i in rng:
            if orient2d(out[(i - 1) % n], out[i], out[(i + 1) % n]) == 0:
                del out[i]
                changed = True
                break
    return out


def planar_polyline(points, closed: bool = False) -> PlanarPolyline:
    return PlanarPolyline(tuple(_drop_straight_corners2(list(points), closed)), closed=closed)


@dataclass(frozen=True, eq=True)
class PlanarDrawing:
    """A drawing of a graph: positions in the plane plus a polyline route
    per edge, oriented from the smaller-indexed endpoint."""

    graph: Graph
    position: dict[str, Point2]
    route: dict[EdgeKey, PlanarPolyline]

    def __hash__(self):  # pragma: no cover
        raise TypeError("drawings are not hashable")

    def route_chain(self, u: str, v: str) -> tuple[Point2, ...]:
        key = self.graph.edge_key(u, v)
        pts = self.route[key].vertices
        return pts if key[0] == u else tuple(reversed(pts))


def make_drawing(
    graph: Graph,
    positions: Mapping[str, Point2],
    routes: Mapping[tuple[str, str], Sequence[Point2]] | None = None,
) -> PlanarDrawing:
    """Build a drawing; unspecified routes are straight segments."""
    pos = {v: positions[v] for v in graph.vertices}
    given: dict[EdgeKey, Sequence[Point2]] = {}
    if routes:
        for (u, v), pts in routes.items():
            given[graph.edge_key(u, v)] = tuple(pts)
    built: dict[EdgeKey, PlanarPolyline] = {}
    for key in graph.edges:
        pu, pv = pos[key[0]], pos[key[1]]
        pts = list(given.get(key, ()))
        if not pts:
            chain = [pu, pv]
        else:
            if pts[0] != pu and pts[0] != pv and pts[-1] != pu and pts[-1] != pv:
                chain = [pu] + pts + [pv]
            else:
                chain = pts
            if chain[0] == pv and chain[-1] == pu:
                chain = list(reversed(chain))
            if chain[0] != pu or chain[-1] != pv:
                raise ValueError(f"route for {key} does not join its endpoint positions")
        built[key] = planar_polyline(chain)
    return PlanarDrawing(graph, pos, built)


@dataclass(frozen=True)
class Crossing:
    """A transversal crossing between sides of two distinct edge routes.
    `disjoint` records whether the two edges share no graph vertex; `upper`
    names the edge whose strand passes over, when height data exists."""

    edge1: EdgeKey
    edge2: EdgeKey
    side1: int
    side2: int
    point: Point2
    disjoint: bool
    upper: EdgeKey | None = None


def _terminal_side_at2(poly: PlanarPolyline, p: Point2) -> int | None:
    if poly.vertices[0] == p:
        return 0
    if poly.vertices[-1] == p:
        return len(poly.vertices) - 2
    return None


def _scan_drawing(d: PlanarDrawing):
    """Shared sweep over all side pairs.  Returns (violations, raw
    transversal crossings as (edge1, i1, edge2, i2, point))."""
    out: list[Violation] = []
    g = d.graph

    by_point: dict[Point2, list[str]] = {}
    for v in g.vertices:
        by_point.setdefault(d.position[v], []).append(v)
    for p, vs in by_point.items():
        if len(vs) > 1:
            out.append(Violation("coincident-vertices", f"vertices {vs} share a position", tuple(vs)))

    usable: list[EdgeKey] = []
    for key in g.edges:
        poly = d.route.get(key)
        if poly is None:
            out.append(Violation("missing-route", f"edge {key} has no route", (key,)))
            continue
        if poly.closed:
            out.append(Violation("closed-route", f"edge {key} has a closed route", (key,)))
            continue
        if poly.vertices[0] != d.position[key[0]] or poly.vertices[-1] != d.position[key[1]]:
            out.append(Violation("route-endpoint-mismatch", f"route of {key} does not join its endpoints", (key,)))
        usable.append(key)

    sides: list[tuple[EdgeKey, int, Segment2]] = []
    for key in usable:
        for i, s in enumerate(d.route[key].sides()):
            sides.append((key, i, s))

    crossings: list[tuple[EdgeKey, int, EdgeKey, int, Point2]] = []
    for a in range(len(sides)):
        e1, i1, s1 = sides[a]
        for b in range(a + 1, len(sides)):
            e2, i2, s2 = sides[b]
            if e1 == e2 and abs(i1 - i2) == 1:
                continue  # adjacent sides of one route share their corner
            r = seg_intersect2(s1, s2)
            if r is None:
                continue
            if isinstance(r, Point2):
                crossings.append((e1, i1, e2, i2, r))
                continue
            # degenerate contact: classify by shared endpoints
            ends1 = {s1.p, s1.q}
            ends2 = {s2.p, s2.q}
            common = ends1 & ends2
            if len(common) == 2:
                out.append(Violation("sides-identical", f"{e1}[{i1}] and {e2}[{i2}] coincide", (e1, e2, i1, i2)))
                continue
            if len(common) == 1:
                p = next(iter(common))
                u = next(iter(ends1 - {p}))
                w = next(iter(ends2 - {p}))
                if orient2d(p, u, w) == 0 and dot2(u - p, w - p) > 0:
                    out.append(Violation("sides-overlap", f"{e1}[{i1}] and {e2}[{i2}] overlap", (e1, e2, i1, i2)))
                    continue
                if e1 == e2:
                    out.append(Violation("route-revisits-point", f"route of {e1} revisits {p.coords()}", (e1, i1, i2)))
                    continue
                shared_vertex = next(
                    (x for x in set(e1) & set(e2) if d.position[x] == p), None
                )
                if (
                    shared_vertex is not None
                    and _terminal_side_at2(d.route[e1], p) == i1
                    and _terminal_side_at2(d.route[e2], p) == i2
                ):
                    continue  # the legal meeting at a shared graph vertex
                out.append(Violation("routes-touch", f"routes of {e1} and {e2} touch at {p.coords()}", (e1, e2, i1, i2)))
                continue
            out.append(
                Violation(
                    "degenerate-contact",
                    f"{e1}[{i1}] and {e2}[{i2}] meet at an endpoint of one inside the other, or overlap",
                    (e1, e2, i1, i2),
                )
            )

    seen_points: dict[Point2, list[tuple]] = {}
    for rec in crossings:
        seen_points.setdefault(rec[4], []).append(rec)
    for p, recs in seen_points.items():
        if len(recs) > 1:
            involved = tuple(sorted({(r[0], r[1]) for r in recs} | {(r[2], r[3]) for r in recs}))
            out.append(Violation("triple-point", f"three or more sides pass through {p.coords()}", involved))

    return tuple(out), tuple(crossings)


def validate_drawing(d: PlanarDrawing) -> tuple[Violation, ...]:
    """General-position validation: every contact between route sides is a
    transversal crossing of exactly two sides, interior to both; routes may
    meet endpoint-to-endpoint only at a shared graph vertex."""
    return _scan_drawing(d)[0]


def extract_crossings(d: PlanarDrawing) -> tuple[Crossing, ...]:
    """Every transversal crossing between sides of distinct edge routes, in
    a deterministic order.  Crossings of adjacent edges are included and
    distinguished by the `disjoint` flag; self-crossings of a single route
    are not listed."""
    violations, raw = _scan_drawing(d)
    if violations:
        raise DrawingNotGeneral(f"{len(violations)} general-position violations", violations)
    idx = {v: i for i, v in enumerate(d.graph.vertices)}
    out = []
    for e1, i1, e2, i2, p in raw:
        if e1 == e2:
            continue
        if (idx[e1[0]], idx[e1[1]]) > (idx[e2[0]], idx[e2[1]]):
            e1, e2, i1, i2 = e2, e1, i2, i1
        disjoint = not (set(e1) & set(e2))
        out.append(Crossing(e1, e2, i1, i2, p, disjoint))
    out.sort(key=lambda c: (idx[c.edge1[0]], idx[c.edge1[1]], idx[c.edge2[0]], idx[c.edge2[1]], c.side1, c.side2))
    return tuple(out)


def crossings_between_polylines(a: PlanarPolyline, b: PlanarPolyline) -> int:
    """Number of transversal crossings between two polylines, requiring
    every mutual contact to be a simple crossing (multiplicity-free)."""
    points: list[Point2] = []
    for s in a.sides():
        for t in b.sides():
            r = seg_intersect2(s, t)
            if r is None:
                continue
            if r is NON_GENERIC:
                raise GeneralPositionViolation("degenerate contact between the polylines")
            points.append(r)
    if len(set(points)) != len(points):
        raise GeneralPositionViolation("two crossings coincide")
    return len(points)
