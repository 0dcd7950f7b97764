"""Integer partitions, skew shapes, and corner-coordinate surgery.

A partition is stored as a weakly decreasing tuple of nonnegative parts.
Trailing zero parts are significant: (3, 1, 0) and (3, 1) are different
shapes because the declared number of rows feeds into lattice-path
terminal positions.

The corner encoding represents a partition by the column coordinates of
its outside corners x_1 > x_2 > ... > x_n > 0 together with the
cumulative row counts y_i = #{parts >= x_i}.  Border strips are added or
removed by shifting contiguous ranges of these coordinates, and a column
of cells by shifting a prefix of the x's.
"""

BORDER_ADD = "add"
BORDER_REMOVE = "remove"


class Partition:
    """Weakly decreasing tuple of nonnegative integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 0:
                raise ValueError("parts must be nonnegative, got %r" % (p,))
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing, got %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)

    def size(self):
        """Number of cells."""
        return sum(self.parts)

    def without_zeros(self):
        """Copy with zero parts dropped."""
        return Partition(p for p in self.parts if p > 0)

    def contains(self, other):
        """Componentwise containment (other padded with zeros)."""
        other = tuple(other)
        if len(other) > len(self.parts):
            if any(p > 0 for p in other[len(self.parts):]):
                return False
            other = other[: len(self.parts)]
        return all(m <= l for l, m in zip(self.parts, other + (0,) * (len(self.parts) - len(other))))

    def to_text(self):
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def from_text(cls, text):
        """Parse "8,6,5,3,3,1,1"; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError("bad partition text %r" % (text,))
        return cls(parts)


class SkewShape:
    """Pair of partitions outer/inner with inner[i] <= outer[i]."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        if not isinstance(outer, Partition):
            outer = Partition(outer)
        if not isinstance(inner, Partition):
            inner = Partition(inner)
        if len(inner) > len(outer):
            if any(p > 0 for p in inner.parts[len(outer):]):
                raise ValueError("inner shape sticks out of outer: %r / %r" % (outer, inner))
            inner = Partition(inner.parts[: len(outer)])
        # pad inner with zeros to the outer length
        inner = Partition(inner.parts + (0,) * (len(outer) - len(inner)))
        for l, m in zip(outer.parts, inner.parts):
            if m > l:
                raise ValueError("inner shape sticks out of outer: %r / %r" % (outer, inner))
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    def __eq__(self, other):
        if isinstance(other, SkewShape):
            return self.outer == other.outer and self.inner == other.inner
        return NotImplemented

    def __hash__(self):
        return hash(("SkewShape", self.outer.parts, self.inner.parts))

    def __repr__(self):
        return "SkewShape(%r, %r)" % (self.outer.parts, self.inner.parts)

    @property
    def n_rows(self):
        return len(self.outer)

    def size(self):
        return self.outer.size() - self.inner.size()

    def row_bounds(self):
        """Per row i (0-based): half-open column span (inner_i, outer_i), 1-based columns."""
        return tuple((self.inner.parts[i], self.outer.parts[i]) for i in range(len(self.outer)))

    def is_straight(self):
        return self.inner.size() == 0

    def to_text(self):
        return "%s/%s" % (self.outer.to_text(), self.inner.to_text())

    @classmethod
    def from_text(cls, text):
        """Parse "4,3,2/1,0,0" or "4,3,2" (empty inner)."""
        if "/" in text:
            outer, inner = text.split("/", 1)
            return cls(Partition.from_text(outer), Partition.from_text(inner))
        return cls(Partition.from_text(text))


class CornerEncoding:
    """Corner coordinates (x_i, y_i) of a partition.

    For genuine partitions x is strictly decreasing and y strictly
    increasing; after strip surgery the sequences may be merely weakly
    monotone (coordinates that stop being geometric corners).
    """

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        x = tuple(int(v) for v in x)
        y = tuple(int(v) for v in y)
        if len(x) != len(y):
            raise ValueError("corner coordinate lengths differ: %d vs %d" % (len(x), len(y)))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("CornerEncoding is immutable")

    @property
    def n(self):
        return len(self.x)

    def __eq__(self, other):
        if isinstance(other, CornerEncoding):
            return self.x == other.x and self.y == other.y
        return NotImplemented

    def __hash__(self):
        return hash(("CornerEncoding", self.x, self.y))

    def __repr__(self):
        return "CornerEncoding(x=%r, y=%r)" % (self.x, self.y)


class BorderStripSpec:
    """Nested families ((i_1,j_1),...,(i_m,j_m)) of strip operations.

    Validates i_1 < i_2 < ... < i_m <= j_m <= ... <= j_1 (the j's may
    repeat: compositions of that looser form are still meaningful array
    surgery, and one documented composite uses equal j's).
    """

    __slots__ = ("pairs", "direction")

    def __init__(self, pairs, direction):
        pairs = tuple((int(i), int(j)) for i, j in pairs)
        if direction not in (BORDER_ADD, BORDER_REMOVE):
            raise ValueError("direction must be %r or %r" % (BORDER_ADD, BORDER_REMOVE))
        for i, j in pairs:
            if i < 1 or j < 1:
                raise ValueError("corner indices are 1-based positive, got (%d, %d)" % (i, j))
        for (i1, _), (i2, _) in zip(pairs, pairs[1:]):
            if not i1 < i2:
                raise ValueError("i indices must strictly increase: %r" % (pairs,))
        for (_, j1), (_, j2) in zip(pairs, pairs[1:]):
            if not j1 >= j2:
                raise ValueError("j indices must weakly decrease: %r" % (pairs,))
        if pairs and pairs[-1][0] > pairs[-1][1]:
            raise ValueError("innermost pair must satisfy i <= j: %r" % (pairs,))
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "direction", direction)

    def __setattr__(self, name, value):
        raise AttributeError("BorderStripSpec is immutable")

    def __repr__(self):
        return "BorderStripSpec(%r, %r)" % (self.pairs, self.direction)


def corner_encoding(p):
    """Distinct positive part values with cumulative multiplicities.

    (8,6,5,3,3,1,1) -> x=(8,6,5,3,1), y=(1,2,3,5,7).  Zero parts
    contribute no corner; the empty partition has n = 0.
    """
    if not isinstance(p, Partition):
        p = Partition(p)
    xs = []
    ys = []
    count = 0
    for part in p.parts:
        if part == 0:
            break
        count += 1
        if xs and xs[-1] == part:
            ys[-1] = count
        else:
            xs.append(part)
            ys.append(count)
    return CornerEncoding(xs, ys)


def partition_from_corners(e):
    """Inverse of corner_encoding: x_i repeated (y_i - y_{i-1}) times.

    Tolerates the weakly monotone encodings produced by strip surgery:
    zero multiplicities contribute nothing and zero part values are
    dropped.  Rejects y_i < y_{i-1} and negative x_i.
    """
    parts = []
    prev_y = 0
    for xi, yi in zip(e.x, e.y):
        if xi < 0:
            raise ValueError("negative corner column %d" % xi)
        mult = yi - prev_y
        if mult < 0:
            raise ValueError("decreasing row coordinates %r" % (e.y,))
        if xi > 0:
            parts.extend([xi] * mult)
        prev_y = yi
    return Partition(parts)


def _shifted(e, i, j, delta):
    if not (1 <= i <= j <= e.n):
        raise ValueError("corner indices (%d, %d) out of range for n=%d" % (i, j, e.n))
    x = list(e.x)
    y = list(e.y)
    for c in range(i, j):  # x_{i+1} .. x_j, 0-based c = i..j-1
        x[c] += delta
    for c in range(i - 1, j):  # y_i .. y_j
        y[c] += delta
    return CornerEncoding(x, y)


def apply_pi(e, i, j):
    """Add the border strip from corner i to corner j: +1 on x_{i+1}..x_j and y_i..y_j."""
    return _shifted(e, i, j, +1)


def apply_mu(e, i, j):
    """Remove the border strip from corner i to corner j: -1 on x_{i+1}..x_j and y_i..y_j.

    Checked eagerly: the result must keep x weakly decreasing and
    nonnegative, y weakly increasing and nonnegative.  A violation means
    the strip is not removable from this encoding.
    """
    out = _shifted(e, i, j, -1)
    _check_removable(out, i, j)
    return out


def _check_removable(e, i, j):
    x, y = e.x, e.y
    if y and y[0] < 0:
        raise ValueError("strip (%d,%d) not removable: y_1 < 0" % (i, j))
    if x and x[-1] < 0:
        raise ValueError("strip (%d,%d) not removable: x_n < 0" % (i, j))
    for a, b in zip(x, x[1:]):
        if a < b:
            raise ValueError("strip (%d,%d) not removable: x not weakly decreasing" % (i, j))
    for a, b in zip(y, y[1:]):
        if a > b:
            raise ValueError("strip (%d,%d) not removable: y not weakly increasing" % (i, j))


def apply_nested(e, spec):
    """Compose strip operations right-to-left: the last listed pair acts first.

    Removal feasibility is checked at every single step; the first
    infeasible step raises.  Intermediate encodings may be weakly
    monotone only.
    """
    if not isinstance(spec, BorderStripSpec):
        raise TypeError("spec must be a BorderStripSpec")
    out = e
    op = apply_pi if spec.direction == BORDER_ADD else apply_mu
    for i, j in reversed(spec.pairs):
        out = op(out, i, j)
    return out


def apply_omega(p, k, sign):
    """Add (+1) or remove (-1) a column of length y_k: shift x_1..x_k by sign."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    e = corner_encoding(p)
    if not (1 <= k <= e.n):
        raise ValueError("corner index %d out of range for n=%d" % (k, e.n))
    x = list(e.x)
    for c in range(k):
        x[c] += sign
    out = CornerEncoding(x, e.y)
    if sign < 0:
        _check_removable(out, k, k)
    return partition_from_corners(out)


def border_strip_size(e, i, j):
    """Cell count of the strip moved by apply_pi/apply_mu at (i, j).

    Equals x_i - x_{j+1} + y_j - y_i with the convention x_{n+1} = 0;
    derived by Abel summation of the coordinate surgery, and asserted
    against brute-force cell counting in the tests.
    """
    if not (1 <= i <= j <= e.n):
        raise ValueError("corner indices (%d, %d) out of range for n=%d" % (i, j, e.n))
    x_after = e.x[j] if j < e.n else 0
    return e.x[i - 1] - x_after + e.y[j - 1] - e.y[i - 1]


def partition_from_set(t):
    """Partition (t_r - r + 1, ..., t_2 - 1, t_1) of a strictly increasing positive set."""
    elems = sorted(set(int(v) for v in t))
    if len(elems) != len(tuple(t)):
        raise ValueError("set elements must be distinct: %r" % (t,))
    if elems and elems[0] < 1:
        raise ValueError("set elements must be positive: %r" % (t,))
    r = len(elems)
    return Partition(elems[r - 1 - a] - (r - 1 - a) for a in range(r))
