"""Projections of spatial embeddings to planar diagrams.

Orthogonal projection flattens an embedding along a direction and keeps,
for every crossing of the resulting drawing, which strand passed in front.
Central projection maps points onto a plane from an extremal viewpoint and
is the bridge between cone counting and diagram counting: two projected
segments cross exactly when one blocks the other's line of sight.

Both projections refuse non-generic directions instead of producing a
defective diagram; callers that need some direction use the seeded search.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import (
    ApexNotExtremal,
    CyclesNotDisjoint,
    EmbeddingInvalid,
    InternalParityFailure,
    ProjectionNotGeneral,
    SearchExhausted,
)
from .geometry import Point2, Point3, cross3, dot3, gp_points2, is_zero3
from .graphs import (
    Crossing,
    Cycle,
    EdgeKey,
    PlanarDrawing,
    PlanarPolyline,
    PLEmbedding,
    extract_crossings,
    make_drawing,
    make_graph,
    validate_drawing,
    validate_embedding,
)

_EX = Point3(Fraction(1), Fraction(0), Fraction(0))
_EZ = Point3(Fraction(0), Fraction(0), Fraction(1))


def canonical_direction(p: Point3) -> Point3:
    """Scale a nonzero vector to coprime integers with the first nonzero
    coordinate positive, so each line through the origin has one name."""
    fr = (p.x, p.y, p.z)
    if all(f == 0 for f in fr):
        raise ValueError("zero vector has no direction")
    m = lcm(*(f.denominator for f in fr))
    ints = [int(f * m) for f in fr]
    g = gcd(*ints)
    ints = [i // g for i in ints]
    first = next(i for i in ints if i != 0)
    if first < 0:
        ints = [-i for i in ints]
    return Point3(*ints)


def plane_basis(d: Point3) -> tuple[Point3, Point3]:
    """Two independent vectors spanning the plane normal to d, with
    (e1, e2, d) positively oriented.  Not normalized: shadow coordinates
    are a fixed invertible linear image of the true orthogonal shadow,
    which preserves incidence, crossings and general position."""
    e1 = cross3(d, _EZ)
    if is_zero3(e1):
        e1 = cross3(d, _EX)
    e2 = cross3(d, e1)
    return e1, e2


@dataclass(frozen=True)
class ProjectedDiagram:
    """A drawing obtained by flattening an embedding, with every crossing
    labeled by the edge whose strand passes in front (larger component
    along the projection direction)."""

    embedding: PLEmbedding
    direction: Point3
    drawing: PlanarDrawing
    crossings: tuple[Crossing, ...]

    def __hash__(self):  # pragma: no cover
        raise TypeError("diagrams are not hashable")

    @property
    def graph(self):
        return self.embedding.graph


def _param_on_side2(seg_p: Point2, seg_q: Point2, p: Point2) -> Fraction:
    dx = seg_q.x - seg_p.x
    if dx != 0:
        return Fraction(p.x - seg_p.x, dx)
    return Fraction(p.y - seg_p.y, seg_q.y - seg_p.y)


def project_orthogonal(
    emb: PLEmbedding, direction: Point3, assume_valid: bool = False
) -> ProjectedDiagram:
    """Flatten an embedding along a direction.

    Raises EmbeddingInvalid when the embedding fails validation (skipped
    under assume_valid, for callers that validated once before a search),
    and ProjectionNotGeneral when the direction flattens a corner, makes a
    side vanish, or yields a drawing with degenerate contacts.
    """
    d = canonical_direction(direction)
    if not assume_valid:
        violations = validate_embedding(emb)
        if violations:
            raise EmbeddingInvalid(f"{len(violations)} embedding violations", violations)
    e1, e2 = plane_basis(d)

    def shadow(p: Point3) -> Point2:
        return Point2(dot3(p, e1), dot3(p, e2))

    pos2 = {v: shadow(p) for v, p in emb.position.items()}
    routes2: dict[EdgeKey, PlanarPolyline] = {}
    for key, poly in emb.route.items():
        pts = tuple(shadow(p) for p in poly.vertices)
        try:
            # sides must stay in bijection with the spatial sides, so no
            # normalizing factory here; a flattened corner is a rejection
            routes2[key] = PlanarPolyline(pts, closed=False)
        except ValueError as ex:
            raise ProjectionNotGeneral(f"route of {key} degenerates in projection: {ex}")
    drawing = PlanarDrawing(emb.graph, pos2, routes2)
    violations = validate_drawing(drawing)
    if violations:
        raise ProjectionNotGeneral(
            f"projected drawing has {len(violations)} degenerate contacts"
        )

    labeled = []
    for c in extract_crossings(drawing):
        h1 = _strand_height(emb, drawing, d, c.edge1, c.side1, c.point)
        h2 = _strand_height(emb, drawing, d, c.edge2, c.side2, c.point)
        if h1 == h2:
            raise InternalParityFailure(
                "two strands of a valid embedding project to equal heights"
            )
        labeled.append(replace(c, upper=c.edge1 if h1 > h2 else c.edge2))
    return ProjectedDiagram(emb, d, drawing, tuple(labeled))


def _strand_height(
    emb: PLEmbedding,
    drawing: PlanarDrawing,
    d: Point3,
    edge: EdgeKey,
    side: int,
    p: Point2,
) -> Fraction:
    t2 = drawing.route[edge].sides()[side]
    u = _param_on_side2(t2.p, t2.q, p)
    s3 = emb.route[edge].sides()[side]
    q3 = s3.p + (s3.q - s3.p).scale(u)
    return dot3(q3, d)


def find_general_projection(
    emb: PLEmbedding, seed: int = 0, max_tries: int = 10000
) -> ProjectedDiagram:
    """Seeded search for a direction whose projection is generic.

    Directions are drawn from an integer cube that doubles in size every 16
    rejections; almost every direction works, so the search normally ends
    within a handful of tries.  Deterministic for a fixed embedding + seed.
    """
    from .rng import SplitMix64

    violations = validate_embedding(emb)
    if violations:
        raise EmbeddingInvalid(f"{len(violations)} embedding violations", violations)
    rng = SplitMix64(seed)
    bound = 8
    rejections = 0
    seen: set[Point3] = set()
    for _ in range(max_tries):
        cand = Point3(*(rng.randint(-bound, bound) for _ in range(3)))
        if cand.x == 0 and cand.y == 0 and cand.z == 0:
            continue
        cand = canonical_direction(cand)
        if cand in seen:
            continue
        seen.add(cand)
        try:
            return project_orthogonal(emb, cand, assume_valid=True)
        except ProjectionNotGeneral:
            rejections += 1
            if rejections % 16 == 0:
                bound *= 2
    raise SearchExhausted(f"no generic projection direction in {max_tries} tries")


def project_central(
    points: Sequence[Point3],
    apex: Point3,
    normal: Point3,
    names: Sequence[str] | None = None,
) -> PlanarDrawing:
    """Project all points except the apex onto a plane below it, from the
    apex, and return the straight-line drawing of the complete graph on the
    images.

    The linear functional x -> <x, normal> must attain its strict maximum
    over the points at the apex; the image plane sits halfway between the
    apex level and the next-highest level, so every other point projects
    into it away from the apex.  Raises ApexNotExtremal when the apex is
    not the unique maximizer and ProjectionNotGeneral when three images
    become collinear or two coincide.
    """
    pts = list(points)
    if apex not in pts:
        raise ValueError("apex must be one of the points")
    others = [p for p in pts if p != apex]
    if len(others) != len(pts) - 1:
        raise ValueError("apex occurs more than once among the points")
    apex_val = dot3(apex, normal)
    vals = [dot3(p, normal) for p in others]
    if any(v >= apex_val for v in vals):
        raise ApexNotExtremal("apex does not strictly maximize the functional")
    plane_val = Fraction(apex_val + max(vals), 2)

    d = canonical_direction(normal)
    e1, e2 = plane_basis(d)
    images = []
    for p, v in zip(others, vals):
        t = Fraction(plane_val - apex_val, v - apex_val)
        q = apex + (p - apex).scale(t)
        images.append(Point2(dot3(q, e1), dot3(q, e2)))
    if not gp_points2(images):
        raise ProjectionNotGeneral("projected points are not in general position")

    if names is None:
        names = [f"p{i}" for i in range(1, len(others) + 1)]
    names = list(names)
    if len(names) != len(others):
        raise ValueError("need one name per non-apex point")
    from itertools import combinations

    graph = make_graph(names, combinations(names, 2))
    drawing = make_drawing(graph, dict(zip(names, images)))
    violations = validate_drawing(drawing)
    if violations:
        raise ProjectionNotGeneral(
            f"central image drawing has {len(violations)} degenerate contacts"
        )
    return drawing


def _cycle_edge_sets(diag: ProjectedDiagram, cycle1: Cycle, cycle2: Cycle):
    g = diag.graph
    if set(cycle1.vertices) & set(cycle2.vertices):
        raise CyclesNotDisjoint(f"{cycle1.vertices} and {cycle2.vertices} share a vertex")
    edge_set = set(g.edges)
    e1 = set(g.cycle_edges(cycle1))
    e2 = set(g.cycle_edges(cycle2))
    if not e1 <= edge_set or not e2 <= edge_set:
        raise ValueError("cycle uses edges absent from the diagram's graph")
    return e1, e2


def front_parity(diag: ProjectedDiagram, first_edges, second_edges) -> int:
    """Parity of crossings between two disjoint edge sets at which the
    front strand belongs to the first set.

    For open strand sets this genuinely depends on the argument order;
    only for a pair of disjoint closed cycles are the two orders forced to
    agree, which is what lk_from_diagram checks and exploits."""
    first = set(first_edges)
    second = set(second_edges)
    if first & second:
        raise ValueError("edge sets overlap")
    n = 0
    for c in diag.crossings:
        if (c.edge1 in first and c.edge2 in second) or (
            c.edge1 in second and c.edge2 in first
        ):
            if c.upper in first:
                n += 1
    return n % 2


def crossing_parities(
    diag: ProjectedDiagram, cycle1: Cycle, cycle2: Cycle
) -> tuple[int, int, int]:
    """(parity of crossings with cycle1 in front, same for cycle2, parity
    of all crossings between the two cycles)."""
    e1, e2 = _cycle_edge_sets(diag, cycle1, cycle2)
    over1 = over2 = total = 0
    for c in diag.crossings:
        if (c.edge1 in e1 and c.edge2 in e2) or (c.edge1 in e2 and c.edge2 in e1):
            total += 1
            if c.upper in e1:
                over1 += 1
            else:
                over2 += 1
    return over1 % 2, over2 % 2, total % 2


def lk_from_diagram(diag: ProjectedDiagram, cycle1: Cycle, cycle2: Cycle) -> int:
    """Mod-2 linking number read off a projected diagram: the parity of
    crossings between the two cycles at which the first passes in front.
    For disjoint closed cycles the choice of 'first' does not matter; that
    equality is enforced, not assumed."""
    over1, over2, total = crossing_parities(diag, cycle1, cycle2)
    if over1 != over2 or total != 0:
        raise InternalParityFailure(
            "front-strand parity depends on the cycle order; diagram data is inconsistent"
        )
    return over1


def check_crossing_parity_identity(
    diag: ProjectedDiagram, cycle1: Cycle, cycle2: Cycle
) -> bool:
    """True when both front-strand parities agree and the total crossing
    count between the cycles is even."""
    over1, over2, total = crossing_parities(diag, cycle1, cycle2)
    return over1 == over2 and total == 0
