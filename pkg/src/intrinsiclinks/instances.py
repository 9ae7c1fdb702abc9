"""Seeded random instance generation.

Every generator owns a SplitMix64 stream derived from its seed argument, so a
(kind, seed) pair fully determines the output.  Coordinates are integers drawn
uniformly from [-bound, bound], one PRNG call per coordinate in x, y(, z)
order; candidates failing a validity test are discarded and the stream simply
continues.  Generators raise SearchExhausted after max_tries failed candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GeneralPositionViolation, SearchExhausted
from .geometry import Point2, Point3, gp_points2, gp_points3
from .graphs import (
    PLEmbedding,
    PlanarDrawing,
    PlanarPolyline,
    complete_bipartite,
    complete_graph,
    crossings_between_polylines,
    make_drawing,
    make_embedding,
    make_graph,
    planar_polyline,
    subdivide,
    validate_drawing,
    validate_embedding,
)
from .rng import SplitMix64

_K6 = complete_graph(6)
_K5 = complete_graph(5)
_K44 = complete_bipartite(4, 4)
_K33 = complete_bipartite(3, 3)

_TWO_TRIANGLES = make_graph(
    ("t1", "t2", "t3", "u1", "u2", "u3"),
    (("t1", "t2"), ("t2", "t3"), ("t1", "t3"),
     ("u1", "u2"), ("u2", "u3"), ("u1", "u3")),
)


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by all generators and the command-line surface."""

    seed: int = 0
    max_tries: int = 10000
    bound: int = 1000

    def __post_init__(self):
        if self.max_tries <= 0 or self.bound <= 0:
            raise ValueError("max_tries and bound must be positive")


def _point2(rng: SplitMix64, bound: int) -> Point2:
    return Point2(rng.randint(-bound, bound), rng.randint(-bound, bound))


def _point3(rng: SplitMix64, bound: int) -> Point3:
    return Point3(
        rng.randint(-bound, bound),
        rng.randint(-bound, bound),
        rng.randint(-bound, bound),
    )


def gen_points3_general(
    seed: int, count: int, bound: int = 1000, max_tries: int = 10000
) -> list[Point3]:
    """Integer points in the cube, no four coplanar."""
    rng = SplitMix64(seed)
    for _ in range(max_tries):
        pts = [_point3(rng, bound) for _ in range(count)]
        if gp_points3(pts):
            return pts
    raise SearchExhausted(
        f"no general-position {count}-point set in {max_tries} tries (seed {seed})"
    )


def gen_k6_points(seed: int, bound: int = 1000, max_tries: int = 10000) -> list[Point3]:
    return gen_points3_general(seed, 6, bound, max_tries)


def gen_k44_linear(seed: int, bound: int = 1000, max_tries: int = 10000) -> PLEmbedding:
    """Straight-line embedding of the 4+4 complete bipartite graph.

    General position of the 8 points already rules out route crossings and
    vertices on routes (either would force four coplanar points), but the
    validator is consulted anyway; it is cheap and keeps the contract local.
    """
    rng = SplitMix64(seed)
    for _ in range(max_tries):
        pts = [_point3(rng, bound) for _ in range(8)]
        if not gp_points3(pts):
            continue
        emb = make_embedding(_K44, dict(zip(_K44.vertices, pts)))
        if validate_embedding(emb):
            continue
        return emb
    raise SearchExhausted(f"no valid K4,4 embedding in {max_tries} tries (seed {seed})")


def gen_polygon_pair(seed: int, bound: int = 1000, max_tries: int = 10000) -> PLEmbedding:
    """Two disjoint straight triangles in space, as one embedding."""
    rng = SplitMix64(seed)
    for _ in range(max_tries):
        pts = [_point3(rng, bound) for _ in range(6)]
        if not gp_points3(pts):
            continue
        emb = make_embedding(_TWO_TRIANGLES, dict(zip(_TWO_TRIANGLES.vertices, pts)))
        if validate_embedding(emb):
            continue
        return emb
    raise SearchExhausted(f"no valid triangle pair in {max_tries} tries (seed {seed})")


# Subdivided instances start from the moment curve t -> (t, t^2, t^3), whose
# first six integer points are in general position.  The factor 24 makes every
# route-splitting point an integer for 2, 3 and 4 pieces, so the perturbed
# embedding keeps the all-integer predicate fast path.
_MOMENT_SCALE = 24
_JITTER = 12  # half a scaled unit in each coordinate


def gen_k6_pl_subdivided(seed: int, max_tries: int = 10000) -> PLEmbedding:
    """An embedding of a subdivision of K6 with perturbed subdivision vertices.

    Each of the 15 edges is cut into 2 to 4 pieces; the new degree-2 vertices
    are then jittered off the original segments, so smoothing recovers K6 with
    genuinely bent polyline routes.  The perturbed embedding is re-validated
    and rejected candidates are resampled.
    """
    rng = SplitMix64(seed)
    base = {
        f"v{i}": Point3(
            _MOMENT_SCALE * i, _MOMENT_SCALE * i * i, _MOMENT_SCALE * i ** 3
        )
        for i in range(1, 7)
    }
    for _ in range(max_tries):
        emb = make_embedding(_K6, base)
        for edge in _K6.edges:
            pieces = rng.randint(2, 4)
            u = emb.position[edge[0]]
            v = emb.position[edge[1]]
            cuts = [
                Point3(
                    u.x + (v.x - u.x) * Fraction(j, pieces),
                    u.y + (v.y - u.y) * Fraction(j, pieces),
                    u.z + (v.z - u.z) * Fraction(j, pieces),
                )
                for j in range(1, pieces)
            ]
            emb = subdivide(emb, edge, cuts)
        positions = dict(emb.position)
        for name in emb.graph.vertices:
            if name in base:
                continue
            p = positions[name]
            while True:
                dx = rng.randint(-_JITTER, _JITTER)
                dy = rng.randint(-_JITTER, _JITTER)
                dz = rng.randint(-_JITTER, _JITTER)
                if (dx, dy, dz) != (0, 0, 0):
                    break
            positions[name] = Point3(p.x + dx, p.y + dy, p.z + dz)
        jittered = make_embedding(emb.graph, positions)
        if not validate_embedding(jittered):
            return jittered
    raise SearchExhausted(
        f"no valid subdivided K6 embedding in {max_tries} tries (seed {seed})"
    )


def _gen_straight_drawing(graph, seed: int, bound: int, max_tries: int) -> PlanarDrawing:
    # general position of the vertices does not rule out three edges through
    # one point, so the drawing validator has the last word
    rng = SplitMix64(seed)
    n = len(graph.vertices)
    for _ in range(max_tries):
        pts = [_point2(rng, bound) for _ in range(n)]
        if not gp_points2(pts):
            continue
        d = make_drawing(graph, dict(zip(graph.vertices, pts)))
        if validate_drawing(d):
            continue
        return d
    raise SearchExhausted(f"no valid straight drawing in {max_tries} tries (seed {seed})")


def gen_k5_drawing(seed: int, bound: int = 1000, max_tries: int = 10000) -> PlanarDrawing:
    return _gen_straight_drawing(_K5, seed, bound, max_tries)


def gen_k33_drawing(seed: int, bound: int = 1000, max_tries: int = 10000) -> PlanarDrawing:
    return _gen_straight_drawing(_K33, seed, bound, max_tries)


def bend_drawing(
    drawing: PlanarDrawing, seed: int, bound: int = 1000, max_tries: int = 10000
) -> PlanarDrawing:
    """Reroute a random subset of edges through one displaced interior point.

    Vertex positions are kept; each chosen edge runs through a jittered
    near-midpoint of its endpoints, making a polyline drawing of the same
    graph.  At least one edge is always bent.
    """
    g = drawing.graph
    rng = SplitMix64(seed)
    jit = max(1, bound // 10)
    for _ in range(max_tries):
        routes = {}
        for e in g.edges:
            if rng.randrange(2) == 0:
                continue
            u = drawing.position[e[0]]
            v = drawing.position[e[1]]
            mid = Point2(
                (u.x + v.x) // 2 + rng.randint(-jit, jit),
                (u.y + v.y) // 2 + rng.randint(-jit, jit),
            )
            routes[e] = [mid]
        if not routes:
            continue
        try:
            bent = make_drawing(g, drawing.position, routes)
        except ValueError:
            continue
        if validate_drawing(bent):
            continue
        return bent
    raise SearchExhausted(f"no valid bent drawing in {max_tries} tries (seed {seed})")


def move_vertex_star(
    drawing: PlanarDrawing, seed: int, bound: int = 1000, max_tries: int = 10000
) -> PlanarDrawing:
    """Move one seeded-choice vertex and re-draw its incident edges straight.

    All other routes are kept point-for-point, so the result is comparable to
    the input in the one-vertex-star sense.
    """
    g = drawing.graph
    rng = SplitMix64(seed)
    center = g.vertices[rng.randrange(len(g.vertices))]
    kept = {
        e: list(drawing.route[e].vertices[1:-1])
        for e in g.edges
        if center not in e
    }
    for _ in range(max_tries):
        p = _point2(rng, bound)
        if p == drawing.position[center]:
            continue
        positions = dict(drawing.position)
        positions[center] = p
        try:
            moved = make_drawing(g, positions, kept)
        except ValueError:
            continue
        if validate_drawing(moved):
            continue
        return moved
    raise SearchExhausted(f"no valid star move in {max_tries} tries (seed {seed})")


def gen_planar_polygon_pair(
    seed: int, bound: int = 1000, max_tries: int = 10000
) -> tuple[PlanarPolyline, PlanarPolyline]:
    """Two closed planar polylines in mutual general position.

    Sides are 3 to 6 per polygon.  Each polygon may self-intersect; the pair
    is accepted once the mutual crossing test runs cleanly, i.e. all contacts
    between the two are transversal interior crossings.
    """
    rng = SplitMix64(seed)
    for _ in range(max_tries):
        sides1 = rng.randint(3, 6)
        sides2 = rng.randint(3, 6)
        try:
            first = planar_polyline(
                [_point2(rng, bound) for _ in range(sides1)], closed=True
            )
            second = planar_polyline(
                [_point2(rng, bound) for _ in range(sides2)], closed=True
            )
            crossings_between_polylines(first, second)
        except (ValueError, GeneralPositionViolation):
            continue
        return first, second
    raise SearchExhausted(f"no clean polygon pair in {max_tries} tries (seed {seed})")


_GENERATORS = {
    "k6-points": lambda cfg: gen_k6_points(cfg.seed, cfg.bound, cfg.max_tries),
    "k44-linear": lambda cfg: gen_k44_linear(cfg.seed, cfg.bound, cfg.max_tries),
    "k6-pl-subdivided": lambda cfg: gen_k6_pl_subdivided(cfg.seed, cfg.max_tries),
    "k5-drawing": lambda cfg: gen_k5_drawing(cfg.seed, cfg.bound, cfg.max_tries),
    "k33-drawing": lambda cfg: gen_k33_drawing(cfg.seed, cfg.bound, cfg.max_tries),
    "polygon-pair": lambda cfg: gen_polygon_pair(cfg.seed, cfg.bound, cfg.max_tries),
}

INSTANCE_KINDS = tuple(sorted(_GENERATORS))


def generate(kind: str, config: RunConfig = RunConfig()):
    """Dispatch to the generator for an instance kind."""
    try:
        maker = _GENERATORS[kind]
    except KeyError:
        raise ValueError(
            f"unknown instance kind {kind!r}; expected one of {', '.join(INSTANCE_KINDS)}"
        ) from None
    return maker(config)
