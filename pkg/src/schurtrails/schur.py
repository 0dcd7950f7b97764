"""Semistandard tableaux, Schur polynomials, and lattice-path families.

A tableau of skew shape outer/inner with entries in {1..N} maps to a
family of nonintersecting monotone lattice paths: path i runs from
(inner_i - i + t, 1) to (outer_i - i + t, N) and takes its east steps at
the heights written in row i.  Horizontal steps at height k contribute
x_k, so the total weight of the family equals the tableau weight and the
generating function of either side is the (skew) Schur polynomial.

Schur polynomials are computed two independent ways: summing tableau
weights, and as the determinant det(h_{lambda_i - i + j}) of complete
homogeneous pieces.  Both are exact polynomials at a fixed variable
count N.
"""

from .partitions import Partition, SkewShape
from .polyring import FormalMatrix, Monomial, Polynomial, complete_homogeneous, determinant, formal_h, x_var

EAST = "E"
NORTH = "N"


class Tableau:
    """Filling of a skew board, weakly increasing in rows, strictly in columns."""

    __slots__ = ("shape", "rows", "N")

    def __init__(self, shape, rows, N):
        if not isinstance(shape, SkewShape):
            shape = SkewShape(shape)
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if len(rows) != shape.n_rows:
            raise ValueError("row count %d does not match shape %r" % (len(rows), shape))
        for i, (lo, hi) in enumerate(shape.row_bounds()):
            if len(rows[i]) != hi - lo:
                raise ValueError("row %d has %d entries, shape wants %d" % (i + 1, len(rows[i]), hi - lo))
        for row in rows:
            for v in row:
                if not 1 <= v <= N:
                    raise ValueError("entry %d outside 1..%d" % (v, N))
            for a, b in zip(row, row[1:]):
                if a > b:
                    raise ValueError("row entries must weakly increase: %r" % (row,))
        # column strictness across the skew board
        inner = shape.inner.parts
        for i in range(1, shape.n_rows):
            for col in range(inner[i], shape.outer.parts[i]):  # 0-based columns of row i
                if col >= inner[i - 1] and col < shape.outer.parts[i - 1]:
                    above = rows[i - 1][col - inner[i - 1]]
                    here = rows[i][col - inner[i]]
                    if above >= here:
                        raise ValueError("column %d not strictly increasing" % (col + 1,))
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "N", int(N))

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    def __eq__(self, other):
        if isinstance(other, Tableau):
            return self.shape == other.shape and self.rows == other.rows and self.N == other.N
        return NotImplemented

    def __hash__(self):
        return hash(("Tableau", self.shape, self.rows, self.N))

    def __repr__(self):
        return "Tableau(%r, %r, N=%d)" % (self.shape, self.rows, self.N)

    def reading_word(self):
        return tuple(v for row in self.rows for v in row)

    def to_text(self):
        """Rows separated by ';', entries by ',', skew holes as '·'."""
        inner = self.shape.inner.parts
        bits = []
        for i, row in enumerate(self.rows):
            cells = ["·"] * inner[i] + [str(v) for v in row]
            bits.append(",".join(cells))
        return ";".join(bits)

    @classmethod
    def from_text(cls, text, N):
        rows_txt = text.split(";") if text else []
        outer = []
        inner = []
        rows = []
        for row_txt in rows_txt:
            cells = row_txt.split(",") if row_txt else []
            holes = 0
            while holes < len(cells) and cells[holes] in ("·", "."):
                holes += 1
            entries = []
            for tok in cells[holes:]:
                if tok in ("·", "."):
                    raise ValueError("skew holes must be a prefix of the row: %r" % (row_txt,))
                entries.append(int(tok))
            outer.append(len(cells))
            inner.append(holes)
            rows.append(entries)
        return cls(SkewShape(Partition(outer), Partition(inner)), rows, N)


def enumerate_ssyt(shape, N):
    """All semistandard fillings, in lexicographic order of the reading word."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(shape)
    if N < 1:
        raise ValueError("alphabet bound must be >= 1")
    bounds = shape.row_bounds()
    n_rows = shape.n_rows
    inner = shape.inner.parts
    rows = [[0] * (hi - lo) for lo, hi in bounds]

    cells = [(i, c) for i in range(n_rows) for c in range(bounds[i][0], bounds[i][1])]

    def entry_at(i, col):
        # value at 0-based column col of row i, or None outside the board
        lo, hi = bounds[i]
        if lo <= col < hi:
            return rows[i][col - lo]
        return None

    def fill(pos):
        if pos == len(cells):
            yield Tableau(shape, [list(r) for r in rows], N)
            return
        i, col = cells[pos]
        lo = 1
        if col > inner[i] and col - 1 >= bounds[i][0]:
            lo = max(lo, rows[i][col - 1 - bounds[i][0]])
        if i > 0:
            above = entry_at(i - 1, col)
            if above is not None:
                lo = max(lo, above + 1)
        for v in range(lo, N + 1):
            rows[i][col - bounds[i][0]] = v
            yield from fill(pos + 1)
        rows[i][col - bounds[i][0]] = 0

    yield from fill(0)


def tableau_weight(t):
    """prod_k x_k^(number of entries equal to k)."""
    counts = {}
    for row in t.rows:
        for v in row:
            counts[v] = counts.get(v, 0) + 1
    return Monomial({x_var(k): c for k, c in counts.items()})


def jacobi_trudi_matrix(outer, inner=None, N=None):
    """Matrix with (i,j) entry h_{outer_i - inner_j - i + j}.

    With N given the entries are expanded complete homogeneous
    polynomials in x_1..x_N; with N=None they stay formal h symbols.
    """
    if not isinstance(outer, Partition):
        outer = Partition(outer)
    d = len(outer)
    inner_parts = (0,) * d if inner is None else tuple(inner) + (0,) * (d - len(tuple(inner)))
    h = (lambda m: complete_homogeneous(m, N)) if N is not None else formal_h
    return FormalMatrix(
        [[h(outer.parts[i] - inner_parts[j] - (i + 1) + (j + 1)) for j in range(d)] for i in range(d)]
    )


def schur_poly(shape, N, method="tableaux"):
    """Exact Schur polynomial in x_1..x_N.

    method="tableaux" sums tableau weights and works for skew shapes;
    method="jacobi_trudi" expands the h-determinant and is restricted to
    straight shapes (the determinant form this package treats as
    canonical is stated for straight shapes; see skew_jacobi_trudi for
    the skew determinant as a cross-check extension).
    """
    if isinstance(shape, Partition):
        shape = SkewShape(shape)
    elif not isinstance(shape, SkewShape):
        shape = SkewShape(Partition(shape))
    if method == "tableaux":
        total = Polynomial.zero()
        for t in enumerate_ssyt(shape, N):
            total = total + Polynomial({tableau_weight(t): 1})
        return total
    if method == "jacobi_trudi":
        if not shape.is_straight():
            raise ValueError("jacobi_trudi method is for straight shapes; use skew_jacobi_trudi")
        return determinant(jacobi_trudi_matrix(shape.outer, N=N))
    raise ValueError("unknown method %r" % (method,))


def skew_jacobi_trudi(shape, N):
    """det(h_{outer_i - inner_j - i + j}) for skew shapes (cross-check extension)."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(shape)
    return determinant(jacobi_trudi_matrix(shape.outer, shape.inner.parts, N=N))


class LatticePath:
    """Monotone path: integer start plus a string of E (east) and N (north) steps."""

    __slots__ = ("start", "steps")

    def __init__(self, start, steps=""):
        start = (int(start[0]), int(start[1]))
        steps = str(steps)
        for ch in steps:
            if ch not in (EAST, NORTH):
                raise ValueError("steps must be over {E, N}, got %r" % (ch,))
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "steps", steps)

    def __setattr__(self, name, value):
        raise AttributeError("LatticePath is immutable")

    @property
    def end(self):
        x, y = self.start
        return (x + self.steps.count(EAST), y + self.steps.count(NORTH))

    def vertices(self):
        x, y = self.start
        out = [(x, y)]
        for ch in self.steps:
            if ch == EAST:
                x += 1
            else:
                y += 1
            out.append((x, y))
        return tuple(out)

    def edges(self):
        """Directed unit edges (tail, head) along the path."""
        vs = self.vertices()
        return tuple(zip(vs, vs[1:]))

    def east_heights(self):
        """Heights of the east steps, weakly increasing by monotonicity."""
        _, y = self.start
        out = []
        for ch in self.steps:
            if ch == EAST:
                out.append(y)
            else:
                y += 1
        return tuple(out)

    def __eq__(self, other):
        if isinstance(other, LatticePath):
            return self.start == other.start and self.steps == other.steps
        return NotImplemented

    def __hash__(self):
        return hash(("LatticePath", self.start, self.steps))

    def __repr__(self):
        return "LatticePath(%r, %r)" % (self.start, self.steps)

    def to_text(self):
        return "(%d,%d):%s" % (self.start[0], self.start[1], self.steps)

    @classmethod
    def from_text(cls, text):
        """Parse "(-1,1):EEEENNENN"."""
        text = text.strip()
        if not (text.startswith("(") and ":" in text):
            raise ValueError("bad path text %r" % (text,))
        head, steps = text.split(":", 1)
        xy = head.strip("() ").split(",")
        if len(xy) != 2:
            raise ValueError("bad path start %r" % (head,))
        return cls((int(xy[0]), int(xy[1])), steps.strip())


class PathFamily:
    """Ordered tuple of pairwise vertex-disjoint paths."""

    __slots__ = ("paths",)

    def __init__(self, paths=()):
        paths = tuple(paths)
        for p in paths:
            if not isinstance(p, LatticePath):
                raise TypeError("PathFamily takes LatticePath values")
        seen = {}
        for idx, p in enumerate(paths):
            for v in p.vertices():
                if v in seen:
                    raise ValueError(
                        "paths %d and %d share the lattice point %r" % (seen[v] + 1, idx + 1, v)
                    )
                seen[v] = idx
        object.__setattr__(self, "paths", paths)

    def __setattr__(self, name, value):
        raise AttributeError("PathFamily is immutable")

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)

    def __eq__(self, other):
        if isinstance(other, PathFamily):
            return self.paths == other.paths
        return NotImplemented

    def __hash__(self):
        return hash(("PathFamily", self.paths))

    def __repr__(self):
        return "PathFamily(%r)" % (self.paths,)

    def to_text(self):
        return [p.to_text() for p in self.paths]

    @classmethod
    def from_text(cls, texts):
        return cls(LatticePath.from_text(t) for t in texts)


class TerminalSpec:
    """Start points on y=1 and end points on y=N, x strictly decreasing in path index."""

    __slots__ = ("starts", "ends", "N", "offset")

    def __init__(self, starts, ends, N, offset=0):
        starts = tuple((int(x), int(y)) for x, y in starts)
        ends = tuple((int(x), int(y)) for x, y in ends)
        N = int(N)
        if len(starts) != len(ends):
            raise ValueError("start and end counts differ")
        if any(y != 1 for _, y in starts):
            raise ValueError("starts must lie on y=1")
        if any(y != N for _, y in ends):
            raise ValueError("ends must lie on y=%d" % N)
        for (a, _), (b, _) in zip(starts, starts[1:]):
            if a <= b:
                raise ValueError("start x-coordinates must strictly decrease")
        for (a, _), (b, _) in zip(ends, ends[1:]):
            if a <= b:
                raise ValueError("end x-coordinates must strictly decrease")
        object.__setattr__(self, "starts", starts)
        object.__setattr__(self, "ends", ends)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "offset", int(offset))

    def __setattr__(self, name, value):
        raise AttributeError("TerminalSpec is immutable")

    @classmethod
    def from_shape(cls, shape, N, offset=0):
        """Terminals of the shape's path picture: path i from (inner_i - i + t, 1) to (outer_i - i + t, N)."""
        if not isinstance(shape, SkewShape):
            shape = SkewShape(shape)
        starts = [(shape.inner.parts[i] - (i + 1) + offset, 1) for i in range(shape.n_rows)]
        ends = [(shape.outer.parts[i] - (i + 1) + offset, N) for i in range(shape.n_rows)]
        return cls(starts, ends, N, offset)

    def __repr__(self):
        return "TerminalSpec(starts=%r, ends=%r, N=%d, offset=%d)" % (self.starts, self.ends, self.N, self.offset)


def tableau_to_paths(t, offset=0):
    """Path i starts at (inner_i - i + offset, 1), east steps at the heights of row i."""
    shape = t.shape
    paths = []
    for i in range(shape.n_rows):
        heights = t.rows[i]
        steps = []
        for k in range(1, t.N + 1):
            steps.append(EAST * sum(1 for v in heights if v == k))
            if k < t.N:
                steps.append(NORTH)
        paths.append(LatticePath((shape.inner.parts[i] - (i + 1) + offset, 1), "".join(steps)))
    return PathFamily(paths)


def paths_to_tableau(f, offset=0, N=None):
    """Inverse of tableau_to_paths: read row i off path i's east-step heights.

    N is only consulted for the empty family, whose picture does not
    determine the alphabet bound.
    """
    if len(f) == 0:
        return Tableau(SkewShape(Partition()), [], 1 if N is None else N)
    n_level = {p.end[1] for p in f}
    if {p.start[1] for p in f} != {1} or len(n_level) != 1:
        raise ValueError("family not of tableau type: terminals off the y=1 / y=N lines")
    N = n_level.pop()
    inner = []
    outer = []
    for idx, p in enumerate(f, start=1):
        inner.append(p.start[0] + idx - offset)
        outer.append(p.end[0] + idx - offset)
    try:
        shape = SkewShape(Partition(outer), Partition(inner))
    except ValueError as exc:
        raise ValueError("family not of tableau type: %s" % (exc,))
    rows = [p.east_heights() for p in f]
    try:
        return Tableau(shape, rows, N)
    except ValueError as exc:
        raise ValueError("family not of tableau type: %s" % (exc,))


def path_weight(f):
    """prod over paths and east steps of x_height."""
    counts = {}
    for p in f:
        for k in p.east_heights():
            counts[k] = counts.get(k, 0) + 1
    return Monomial({x_var(k): c for k, c in counts.items()})


def family_generating_function(families):
    """Sum of path weights as a polynomial."""
    total = Polynomial.zero()
    for f in families:
        total = total + Polynomial({path_weight(f): 1})
    return total


def enumerate_families(spec):
    """All nonintersecting families with the given terminals, via the tableau bijection.

    Emits nothing when the terminals are incompatible with any monotone
    nonintersecting family.
    """
    if not isinstance(spec, TerminalSpec):
        raise TypeError("enumerate_families takes a TerminalSpec")
    r = len(spec.starts)
    if r == 0:
        yield PathFamily()
        return
    # normalise to a skew shape: the true offset may differ from spec.offset
    # only by a global translation, which the shift below absorbs
    shift = min(x + i for i, (x, _) in enumerate(spec.starts, start=1))
    inner = [x + i - shift for i, (x, _) in enumerate(spec.starts, start=1)]
    outer = [x + i - shift for i, (x, _) in enumerate(spec.ends, start=1)]
    if any(o < m for o, m in zip(outer, inner)) or any(v < 0 for v in outer):
        return
    shape = SkewShape(Partition(outer), Partition(inner))
    for t in enumerate_ssyt(shape, spec.N):
        yield tableau_to_paths(t, offset=shift)
