"""Two-coloured path graphs, changing trails, and terminal matchings.

Superposing a blue and a green family of nonintersecting lattice paths
gives a graph whose unit edges carry one or both colours.  A changing
trail walks this graph: at every vertex met by both colours it must
switch colour and orientation if an edge of the opposite colour and
opposite orientation leaves the vertex, and must stop otherwise; at a
single-colour vertex it runs straight while it can.  Tracing the trail
through a terminal point and flipping the colours along it is the local
move behind the exchange identities in this package.

Orientation vocabulary: ``forward`` means right-upwards (the paths' own
direction), ``backward`` means left-downwards.
"""

from __future__ import annotations

from dataclasses import dataclass

from .schur import EAST, NORTH, LatticePath, PathFamily

BLUE = "blue"
GREEN = "green"
BLACK = "black"
WHITE = "white"
ODD = "odd"
EVEN = "even"
FORWARD = "forward"
BACKWARD = "backward"
PATH_LIKE = "path_like"
CYCLE_LIKE = "cycle_like"

START = "start"
END = "end"


def other_colour(colour: str) -> str:
    return GREEN if colour == BLUE else BLUE


def other_orientation(orientation: str) -> str:
    return BACKWARD if orientation == FORWARD else FORWARD


@dataclass(frozen=True)
class TwoColouredGraph:
    """Immutable superposition of a blue and a green path family.

    Within one colour each vertex has at most one in- and one out-edge
    (the family is vertex-disjoint), which is what makes changing trails
    deterministic.  An edge used by both families carries both colours.
    """

    blue: PathFamily
    green: PathFamily

    def __post_init__(self):
        if not isinstance(self.blue, PathFamily):
            object.__setattr__(self, "blue", PathFamily(self.blue))
        if not isinstance(self.green, PathFamily):
            object.__setattr__(self, "green", PathFamily(self.green))
        out = {BLUE: {}, GREEN: {}}
        inc = {BLUE: {}, GREEN: {}}
        colours_at: dict[tuple, set] = {}
        edge_colours: dict[tuple, set] = {}
        for colour, family in ((BLUE, self.blue), (GREEN, self.green)):
            for path in family:
                for tail, head in path.edges():
                    out[colour][tail] = (tail, head)
                    inc[colour][head] = (tail, head)
                    edge_colours.setdefault((tail, head), set()).add(colour)
                for v in path.vertices():
                    colours_at.setdefault(v, set()).add(colour)
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inc)
        object.__setattr__(self, "edge_colours", {e: frozenset(cs) for e, cs in edge_colours.items()})
        object.__setattr__(self, "vertices", {v: frozenset(cs) for v, cs in colours_at.items()})

    def is_intersection(self, v) -> bool:
        """True when both colours are incident to v (a mere touch counts)."""
        return len(self.vertices.get(v, ())) == 2

    def colour_edges(self, colour: str) -> frozenset:
        return frozenset(e for e, cs in self.edge_colours.items() if colour in cs)

    def instances(self):
        """All (edge, colour) pairs, doubly-coloured edges contributing two."""
        for edge, colours in self.edge_colours.items():
            for colour in colours:
                yield edge, colour

    def family(self, colour: str) -> PathFamily:
        return self.blue if colour == BLUE else self.green

    def to_json(self) -> dict:
        return {"blue": self.blue.to_text(), "green": self.green.to_text()}

    @classmethod
    def from_json(cls, data: dict) -> "TwoColouredGraph":
        return cls(PathFamily.from_text(data["blue"]), PathFamily.from_text(data["green"]))


def build_graph(blue, green) -> TwoColouredGraph:
    """Superpose two internally nonintersecting families (cross-colour sharing allowed)."""
    return TwoColouredGraph(blue, green)


@dataclass(frozen=True)
class TerminalPoint:
    """Entry of the Q-sequence of non-coincident path terminals.

    Endpoints come first, right to left, then starting points, left to
    right.  Matching colours: among endpoints blue is black and green is
    white; among starting points blue is white and green is black.
    """

    index: int
    location: tuple
    path_colour: str
    matching_colour: str
    parity: str

    @property
    def kind(self) -> str:
        if (self.path_colour, self.matching_colour) in ((BLUE, BLACK), (GREEN, WHITE)):
            return END
        return START


def terminal_points(graph: TwoColouredGraph) -> tuple:
    """The Q-sequence: terminals of exactly one colour, ordered and coloured.

    A lattice point where both a blue and a green path end (or both
    start) is coincident and excluded; trails pass straight through such
    points, so they never terminate a trail.
    """
    return terminal_points_from_sets(
        {p.start for p in graph.blue},
        {p.end for p in graph.blue},
        {p.start for p in graph.green},
        {p.end for p in graph.green},
    )


def terminal_points_from_sets(blue_starts, blue_ends, green_starts, green_ends) -> tuple:
    """Q-sequence computed from bare terminal location sets.

    The sequence depends only on where paths start and end, so terminal
    data can be ordered and coloured before (or without) enumerating any
    family that realizes it.
    """
    blue_ends = set(blue_ends)
    green_ends = set(green_ends)
    blue_starts = set(blue_starts)
    green_starts = set(green_starts)
    top = [(pt, BLUE) for pt in blue_ends - green_ends]
    top += [(pt, GREEN) for pt in green_ends - blue_ends]
    top.sort(key=lambda item: (-item[0][0], item[0][1]))
    bottom = [(pt, BLUE) for pt in blue_starts - green_starts]
    bottom += [(pt, GREEN) for pt in green_starts - blue_starts]
    bottom.sort(key=lambda item: (item[0][0], item[0][1]))
    points = []
    for pt, colour in top:
        idx = len(points) + 1
        points.append(
            TerminalPoint(
                index=idx,
                location=pt,
                path_colour=colour,
                matching_colour=BLACK if colour == BLUE else WHITE,
                parity=ODD if idx % 2 else EVEN,
            )
        )
    for pt, colour in bottom:
        idx = len(points) + 1
        points.append(
            TerminalPoint(
                index=idx,
                location=pt,
                path_colour=colour,
                matching_colour=WHITE if colour == BLUE else BLACK,
                parity=ODD if idx % 2 else EVEN,
            )
        )
    assert len(points) % 2 == 0
    return tuple(points)


@dataclass(frozen=True)
class ChangingTrail:
    """Maximal alternating walk; steps are (edge, colour, orientation) triples.

    Consecutive steps keep colour and orientation together: equal
    colours share the orientation, a colour change flips it.  A
    path_like trail has genuine endpoints; a cycle_like trail closes up
    and its step sequence starts at an arbitrary rotation.
    """

    kind: str
    steps: tuple

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a changing trail has at least one step")
        for (e1, c1, o1), (e2, c2, o2) in zip(self.steps, self.steps[1:]):
            if (c1 == c2) != (o1 == o2):
                raise ValueError("colour change must flip orientation: %r -> %r" % ((e1, c1, o1), (e2, c2, o2)))

    @property
    def start(self):
        return _begin(self.steps[0])

    @property
    def end(self):
        return _arrival(self.steps[-1])

    @property
    def endpoints(self):
        """Terminal vertices (path_like only; None for cycles)."""
        if self.kind != PATH_LIKE:
            return None
        return (self.start, self.end)

    def edge_instances(self) -> frozenset:
        return frozenset((edge, colour) for edge, colour, _ in self.steps)

    def visited_vertices(self):
        """Vertices in walk order: begin of first step, then each arrival."""
        out = [_begin(self.steps[0])]
        out.extend(_arrival(s) for s in self.steps)
        return tuple(out)

    def to_json(self) -> dict:
        pts = self.endpoints
        return {
            "kind": self.kind,
            "start": list(pts[0]) if pts else None,
            "end": list(pts[1]) if pts else None,
            "steps": [[[list(t), list(h)], colour, orientation] for (t, h), colour, orientation in self.steps],
        }


def _begin(step):
    (tail, head), _, orientation = step
    return tail if orientation == FORWARD else head


def _arrival(step):
    (tail, head), _, orientation = step
    return head if orientation == FORWARD else tail


def _leaving(graph, v, colour, orientation):
    table = graph._out if orientation == FORWARD else graph._in
    return table[colour].get(v)


def _arriving(graph, v, colour, orientation):
    table = graph._in if orientation == FORWARD else graph._out
    return table[colour].get(v)


def _successor(graph, step):
    _, colour, orientation = step
    v = _arrival(step)
    if graph.is_intersection(v):
        c2 = other_colour(colour)
        o2 = other_orientation(orientation)
        e2 = _leaving(graph, v, c2, o2)
        return (e2, c2, o2) if e2 is not None else None
    e2 = _leaving(graph, v, colour, orientation)
    return (e2, colour, orientation) if e2 is not None else None


def _predecessor(graph, step):
    _, colour, orientation = step
    v = _begin(step)
    if graph.is_intersection(v):
        c2 = other_colour(colour)
        o2 = other_orientation(orientation)
        e2 = _arriving(graph, v, c2, o2)
        return (e2, c2, o2) if e2 is not None else None
    e2 = _arriving(graph, v, colour, orientation)
    return (e2, colour, orientation) if e2 is not None else None


def _trail_from_step(graph, step0):
    back = [step0]
    seen = {(step0[0], step0[1])}
    kind = PATH_LIKE
    cur = step0
    while True:
        prev = _predecessor(graph, cur)
        if prev is None:
            break
        if prev == step0:
            kind = CYCLE_LIKE
            break
        key = (prev[0], prev[1])
        assert key not in seen, "trail revisited an edge instance going backwards"
        back.append(prev)
        seen.add(key)
        cur = prev
    steps = back[::-1]
    if kind == PATH_LIKE:
        cur = step0
        while True:
            nxt = _successor(graph, cur)
            if nxt is None:
                break
            key = (nxt[0], nxt[1])
            assert key not in seen, "path-like trail revisited an edge instance"
            steps.append(nxt)
            seen.add(key)
            cur = nxt
    return ChangingTrail(kind=kind, steps=tuple(steps))


def _start_instances(graph, location):
    """Edge instances leaving the point that no arrival feeds into.

    A trail ends at v exactly when its reversal starts at v with such an
    instance, so these are the first steps of the trails with an
    endpoint at the location.
    """
    found = []
    for colour in (BLUE, GREEN):
        for orientation in (FORWARD, BACKWARD):
            edge = _leaving(graph, location, colour, orientation)
            if edge is None:
                continue
            step = (edge, colour, orientation)
            if _predecessor(graph, step) is None:
                found.append(step)
    return found


def _seed_step(graph, start):
    spec = tuple(start)
    if len(spec) == 3 and spec[1] in (BLUE, GREEN):
        edge = (tuple(spec[0][0]), tuple(spec[0][1]))
        colour, orientation = spec[1], spec[2]
        if orientation not in (FORWARD, BACKWARD):
            raise ValueError("unknown orientation %r" % (orientation,))
    elif len(spec) == 2 and spec[1] in (BLUE, GREEN):
        edge = (tuple(spec[0][0]), tuple(spec[0][1]))
        colour, orientation = spec[1], FORWARD
    elif len(spec) == 2:
        edge = (tuple(spec[0]), tuple(spec[1]))
        colours = graph.edge_colours.get(edge, frozenset())
        colour = BLUE if BLUE in colours else GREEN
        orientation = FORWARD
    else:
        raise ValueError("cannot interpret trail start %r" % (start,))
    if colour not in graph.edge_colours.get(edge, frozenset()):
        raise ValueError("edge %r does not carry colour %s" % (edge, colour))
    return (edge, colour, orientation)


def trace_trail(graph: TwoColouredGraph, start) -> ChangingTrail:
    """The unique maximal changing trail determined by the given start.

    A TerminalPoint start yields the trail with an endpoint at that
    point, walked away from it.  Otherwise start is an (edge, colour,
    orientation) triple, an (edge, colour) pair (traced forward) or a
    bare edge (its colour picked for it): tracing from any instance of a
    trail recovers the same trail edge set, with the step direction
    following the seed.
    """
    if isinstance(start, TerminalPoint):
        return trail_at_terminal(graph, start.location)
    return _trail_from_step(graph, _seed_step(graph, start))


def trail_at_terminal(graph: TwoColouredGraph, location) -> ChangingTrail:
    """The trail with an endpoint at the given lattice point.

    The first step is the unique leaving edge instance without a
    predecessor; a terminal point another path passes through can be
    interior to that other trail, which is why the terminal's own final
    edge is not necessarily the right seed.
    """
    location = (int(location[0]), int(location[1]))
    candidates = _start_instances(graph, location)
    if not candidates:
        raise ValueError("no changing trail starts at %r" % (location,))
    assert len(candidates) == 1, "multiple changing trails start at %r" % (location,)
    trail = _trail_from_step(graph, candidates[0])
    # terminal-started trails stay clear of doubly-coloured edges, which
    # live on their own two-step cycles
    assert all(
        len(graph.edge_colours[edge]) == 1 for edge, _, _ in trail.steps
    ), "terminal-started trail entered a doubly-coloured edge"
    return trail


def all_trails(graph: TwoColouredGraph) -> tuple:
    """Every maximal changing trail once; their instance sets partition the graph."""
    seen = set()
    trails = []
    for edge in sorted(graph.edge_colours):
        for colour in sorted(graph.edge_colours[edge]):
            if (edge, colour) in seen:
                continue
            trail = trace_trail(graph, (edge, colour, FORWARD))
            trails.append(trail)
            overlap = trail.edge_instances() & seen
            assert not overlap, "trails are not instance-disjoint: %r" % (overlap,)
            seen |= trail.edge_instances()
    return tuple(trails)


def family_from_edges(edges) -> PathFamily:
    """Reassemble one colour's edge set into its nonintersecting family.

    Paths are listed by start, rightmost first.  Raises when the edges
    are not unit right/up steps forming vertex-disjoint monotone paths.
    """
    edges = set((tuple(t), tuple(h)) for t, h in edges)
    out = {}
    inc = {}
    for tail, head in edges:
        dx, dy = head[0] - tail[0], head[1] - tail[1]
        if (dx, dy) not in ((1, 0), (0, 1)):
            raise ValueError("edge %r is not a unit right/up step" % ((tail, head),))
        if tail in out:
            raise ValueError("vertex %r has out-degree 2 within one colour" % (tail,))
        if head in inc:
            raise ValueError("vertex %r has in-degree 2 within one colour" % (head,))
        out[tail] = (tail, head)
        inc[head] = (tail, head)
    starts = [v for v in out if v not in inc]
    paths = []
    used = 0
    for v in sorted(starts, key=lambda p: (-p[0], p[1])):
        cur = v
        steps = []
        while cur in out:
            tail, head = out[cur]
            steps.append(EAST if head[0] > tail[0] else NORTH)
            used += 1
            cur = head
        paths.append(LatticePath(v, "".join(steps)))
    if used != len(edges):
        raise ValueError("edge set contains a cycle")
    return PathFamily(paths)


def decompose_to_families(graph: TwoColouredGraph):
    """(blue, green) families read back off the graph's edge sets."""
    return (
        family_from_edges(graph.colour_edges(BLUE)),
        family_from_edges(graph.colour_edges(GREEN)),
    )


def recolour(graph: TwoColouredGraph, trails) -> TwoColouredGraph:
    """Flip the colour of every edge instance on the given trails.

    The trails must be pairwise instance-disjoint.  The edge multiset is
    untouched, so total path weight is conserved; the flipped edge sets
    are reassembled into families (rightmost start first).
    """
    flips = {BLUE: set(), GREEN: set()}
    seen = set()
    for trail in trails:
        for edge, colour, _ in trail.steps:
            key = (edge, colour)
            if key in seen:
                raise ValueError("overlapping trails share the edge instance %r" % (key,))
            seen.add(key)
            flips[colour].add(edge)
    blue_edges = set(graph.colour_edges(BLUE))
    green_edges = set(graph.colour_edges(GREEN))
    if not flips[BLUE] <= blue_edges or not flips[GREEN] <= green_edges:
        raise ValueError("trail edges do not all belong to the graph")
    new_blue = (blue_edges - flips[BLUE]) | flips[GREEN]
    new_green = (green_edges - flips[GREEN]) | flips[BLUE]
    return TwoColouredGraph(family_from_edges(new_blue), family_from_edges(new_green))


@dataclass(frozen=True)
class NoncrossingMatching:
    """Set of chords on 1..2k indices, no two interleaving."""

    pairs: frozenset

    def __post_init__(self):
        pairs = frozenset((min(a, b), max(a, b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        used = [i for pair in pairs for i in pair]
        if len(used) != len(set(used)):
            raise ValueError("matching repeats an index")
        pl = sorted(pairs)
        for i, (a, b) in enumerate(pl):
            for c, d in pl[i + 1 :]:
                if a < c < b < d:
                    raise ValueError("chords %r and %r cross" % ((a, b), (c, d)))

    def to_json(self):
        return [list(p) for p in sorted(self.pairs)]


def terminal_matching(graph: TwoColouredGraph) -> NoncrossingMatching:
    """Matching on the Q-sequence induced by the path_like changing trails.

    Every chord joins a black to a white point and an odd to an even
    index, and no two chords cross.
    """
    points = terminal_points(graph)
    by_location = {q.location: q for q in points}
    pairs = set()
    for q in points:
        trail = trace_trail(graph, q)
        if trail.kind != PATH_LIKE:
            continue
        a, b = trail.endpoints
        qa = by_location.get(a)
        qb = by_location.get(b)
        if qa is None or qb is None:
            continue
        pair = (min(qa.index, qb.index), max(qa.index, qb.index))
        pairs.add(pair)
        assert qa.matching_colour != qb.matching_colour, "trail joined two %s points" % qa.matching_colour
        assert qa.parity != qb.parity, "trail joined two %s-indexed points" % qa.parity
    return NoncrossingMatching(frozenset(pairs))


def _chords_cross(a, b):
    (a1, a2), (b1, b2) = sorted(a), sorted(b)
    if a1 > b1:
        (a1, a2), (b1, b2) = (b1, b2), (a1, a2)
    return a1 < b1 < a2 < b2


def count_noncrossing_matchings(points: int) -> int:
    """Perfect noncrossing matchings on the given even number of points.

    Counts by brute force over all perfect matchings; every matching
    counted is checked to join odd to even indices, which is forced for
    noncrossing chords.
    """
    points = int(points)
    if points < 0 or points % 2:
        raise ValueError("need an even, nonnegative number of points")

    def matchings(avail):
        if not avail:
            yield ()
            return
        first = avail[0]
        for i in range(1, len(avail)):
            partner = avail[i]
            for rest in matchings(avail[1:i] + avail[i + 1 :]):
                yield ((first, partner),) + rest

    count = 0
    for m in matchings(tuple(range(1, points + 1))):
        if any(_chords_cross(p, q) for i, p in enumerate(m) for q in m[i + 1 :]):
            continue
        assert all(a % 2 != b % 2 for a, b in m)
        count += 1
    return count
