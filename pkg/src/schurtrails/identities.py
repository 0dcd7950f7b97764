"""Exact checkers for Schur-polynomial product identities.

Each checker expands both sides of an identity -- tableau sums for the
Schur factors, signed permutation expansions for the determinant forms
-- and compares them coefficient by coefficient.  The outcome is an
IdentityReport that keeps both polynomials, so a failed check names the
first monomial whose coefficients disagree instead of returning a bare
boolean.

The module also hosts the two combinatorial replays behind the
polynomial identities: explore_orbit closes the trail-recolouring move
over path families with fixed terminals and tallies both sides of the
resulting object bijection, and bijection_audit replays the
window-exchange bijection object by object, checking injectivity,
surjectivity and weight preservation directly.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass, replace as dataclass_replace
from functools import lru_cache

from .partitions import (
    BORDER_ADD,
    BORDER_REMOVE,
    BorderStripSpec,
    Partition,
    SkewShape,
    apply_nested,
    apply_omega,
    corner_encoding,
    partition_from_corners,
    partition_from_set,
)
from .polyring import FormalMatrix, Polynomial, determinant, minor
from .schur import TerminalSpec, enumerate_families, path_weight, schur_poly
from .trails import (
    BLACK,
    BLUE,
    GREEN,
    WHITE,
    build_graph,
    recolour,
    terminal_points_from_sets,
    trail_at_terminal,
)


@lru_cache(maxsize=None)
def _schur_cached(parts: tuple, N: int) -> Polynomial:
    if any(p < 0 for p in parts):
        return Polynomial.zero()
    return schur_poly(SkewShape(Partition(parts)), N)


def schur_of(parts, N: int) -> Polynomial:
    """Schur polynomial of the part sequence in x_1..x_N.

    Window shifts in the exchange identities can push a part down to
    -1; such a factor is a determinant with an impossible row and
    vanishes identically, so any negative part gives the zero
    polynomial.  Results are cached: the checkers reuse the same
    factors heavily.
    """
    return _schur_cached(tuple(int(p) for p in parts), int(N))


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check, with both sides kept for inspection."""

    identity: str
    params: dict
    lhs: Polynomial
    rhs: Polynomial
    equal: bool
    witness: str | None
    elapsed_ms: float

    @property
    def lhs_terms(self) -> int:
        return self.lhs.n_terms()

    @property
    def rhs_terms(self) -> int:
        return self.rhs.n_terms()

    def to_json(self) -> dict:
        payload = {
            "identity": self.identity,
            "params": self.params,
            "equal": self.equal,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload


def _witness(lhs: Polynomial, rhs: Polynomial) -> str | None:
    """First differing monomial in canonical term order, with both coefficients."""
    diff = lhs - rhs
    if diff.is_zero():
        return None
    m = diff.leading_monomial()
    return "%s: %d versus %d" % (m, lhs.coeffs.get(m, 0), rhs.coeffs.get(m, 0))


def _report(identity: str, params: dict, lhs: Polynomial, rhs: Polynomial, started: float) -> IdentityReport:
    return IdentityReport(
        identity=identity,
        params=params,
        lhs=lhs,
        rhs=rhs,
        equal=(lhs == rhs),
        witness=_witness(lhs, rhs),
        elapsed_ms=(time.monotonic() - started) * 1000.0,
    )


def verify_general(lam, N=None) -> IdentityReport:
    """Window-exchange identity for a weakly decreasing sequence of r+1 parts.

    Writing the parts as l_1 >= ... >= l_{r+1}: the product of the
    Schur polynomials of the leading r-part window and the trailing
    r-part window equals the (r-1)-part middle window times the full
    sequence, plus the product of the trailing window lowered by one in
    every part and the leading window raised by one in every part.  A
    lowered window reaching -1 contributes zero.  N defaults to the
    number of parts and is recorded in the report.
    """
    started = time.monotonic()
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    parts = lam.parts
    if len(parts) < 2:
        raise ValueError("need at least two parts, got %r" % (parts,))
    r = len(parts) - 1
    if N is None:
        N = len(parts)
    N = int(N)
    lhs = schur_of(parts[:r], N) * schur_of(parts[1:], N)
    rhs = schur_of(parts[1:r], N) * schur_of(parts, N) + schur_of(
        tuple(p - 1 for p in parts[1:]), N
    ) * schur_of(tuple(p + 1 for p in parts[:r]), N)
    return _report("general", {"lambda": list(parts), "N": N}, lhs, rhs, started)


def verify_kirillov(c, r, N=None) -> IdentityReport:
    """Constant-part preset of the window exchange: lam = (c, ..., c) with r+1 parts.

    The windows collapse to the four rectangles (c^r) squared versus
    (c^{r-1})(c^{r+1}) + ((c-1)^r)((c+1)^r).
    """
    c = int(c)
    r = int(r)
    if c < 0 or r < 1:
        raise ValueError("need c >= 0 and r >= 1, got c=%d r=%d" % (c, r))
    inner = verify_general((c,) * (r + 1), N)
    return dataclass_replace(
        inner, identity="kirillov", params={"c": c, "r": r, "N": inner.params["N"]}
    )


def verify_dodgson(r) -> IdentityReport:
    """Determinant condensation on a generic (r+1) x (r+1) matrix.

    The full determinant times its central minor (rows and columns
    2..r) equals the product of the two principal corner minors minus
    the product of the two off-corner minors.  For r = 1 the central
    minor is the empty determinant, 1.
    """
    started = time.monotonic()
    r = int(r)
    if r < 1:
        raise ValueError("r must be positive, got %d" % r)
    matrix = FormalMatrix.generic(r + 1, r + 1)
    central = tuple(range(2, r + 1))
    head = tuple(range(1, r + 1))
    tail = tuple(range(2, r + 2))
    lhs = determinant(matrix) * minor(matrix, central, central)
    rhs = minor(matrix, head, head) * minor(matrix, tail, tail) - minor(
        matrix, tail, head
    ) * minor(matrix, head, tail)
    return _report("dodgson", {"r": r}, lhs, rhs, started)


def _padded(p: Partition, n: int) -> tuple:
    parts = tuple(p.parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if len(parts) > n:
        raise ValueError("partition %r has more than %d parts" % (tuple(p.parts), n))
    return parts + (0,) * (n - len(parts))


def _coords_to_partition(coords) -> tuple:
    """Sorted endpoint coordinates c_1 > c_2 > ... read back as parts c_i + i."""
    ordered = sorted(coords, reverse=True)
    parts = tuple(c + i for i, c in enumerate(ordered, start=1))
    if any(v < 0 for v in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError("endpoint exchange does not give a partition: %r" % (parts,))
    return parts


def verify_pluecker(n=None, r_list=(), mode="formal", lam=None, sigma=None, N=None) -> IdentityReport:
    """Bracket-exchange identity for a generic 2n x n matrix, or its Schur form.

    Formal mode works in generic entries a_{i,j}: the product of the
    top-block and bottom-block maximal minors equals the sum, over all
    ways to exchange the listed top rows against equally many bottom
    rows (each replacement made in place, order kept), of the two
    resulting bracket products.

    Schur mode replays the same exchange on endpoint coordinates: top
    row p carries lam_p - p, bottom row q carries sigma_q - q, an
    exchange trades the selected top coordinates for a subset of bottom
    ones, and each new coordinate set is re-read as a partition (an
    exchange that does not give one raises).  Factors are then tableau
    expansions in x_1..x_N, with N defaulting to n.
    """
    started = time.monotonic()
    if mode not in ("formal", "schur"):
        raise ValueError("mode must be 'formal' or 'schur', got %r" % (mode,))
    r_list = tuple(sorted(set(int(v) for v in r_list)))
    if mode == "schur":
        if lam is None or sigma is None:
            raise ValueError("schur mode needs lam and sigma")
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        sigma = sigma if isinstance(sigma, Partition) else Partition(sigma)
        if n is None:
            n = max(len(lam.parts), len(sigma.parts), max(r_list, default=1))
    elif n is None:
        raise ValueError("formal mode needs n")
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive, got %d" % n)
    for v in r_list:
        if not 1 <= v <= n:
            raise ValueError("exchanged row %d out of range 1..%d" % (v, n))
    k = len(r_list)

    if mode == "formal":
        matrix = FormalMatrix.generic(2 * n, n)
        all_cols = tuple(range(1, n + 1))
        top = tuple(range(1, n + 1))
        bottom = tuple(range(n + 1, 2 * n + 1))
        lhs = minor(matrix, top, all_cols) * minor(matrix, bottom, all_cols)
        rhs = Polynomial.zero()
        for subset in itertools.combinations(bottom, k):
            first = list(top)
            second = list(bottom)
            for r_i, s_i in zip(r_list, subset):
                first[r_i - 1] = s_i
                second[s_i - n - 1] = r_i
            rhs = rhs + minor(matrix, first, all_cols) * minor(matrix, second, all_cols)
        return _report(
            "pluecker", {"mode": mode, "n": n, "r_list": list(r_list)}, lhs, rhs, started
        )

    if N is None:
        N = n
    N = int(N)
    top_parts = _padded(lam, n)
    bottom_parts = _padded(sigma, n)
    top_coords = [top_parts[p - 1] - p for p in range(1, n + 1)]
    bottom_coords = [bottom_parts[q - 1] - q for q in range(1, n + 1)]
    lhs = schur_of(top_parts, N) * schur_of(bottom_parts, N)
    rhs = Polynomial.zero()
    products = []
    for subset in itertools.combinations(range(1, n + 1), k):
        new_top = [top_coords[p - 1] for p in range(1, n + 1) if p not in r_list]
        new_top += [bottom_coords[s - 1] for s in subset]
        new_bottom = [bottom_coords[q - 1] for q in range(1, n + 1) if q not in subset]
        new_bottom += [top_coords[p - 1] for p in r_list]
        lam2 = _coords_to_partition(new_top)
        sigma2 = _coords_to_partition(new_bottom)
        products.append([list(lam2), list(sigma2)])
        rhs = rhs + schur_of(lam2, N) * schur_of(sigma2, N)
    params = {
        "mode": mode,
        "n": n,
        "r_list": list(r_list),
        "lambda": list(top_parts),
        "sigma": list(bottom_parts),
        "N": N,
        "products": products,
    }
    return _report("pluecker", params, lhs, rhs, started)


def verify_ciucu(T, k, N=None) -> IdentityReport:
    """Balanced-split identity for a set of 2k distinct positive indices.

    Summing s_{lam(A)} * s_{lam(T - A)} over all k-element subsets A of
    T gives 2^k times the product for the alternating split: the
    even-indexed elements t_2, t_4, ... against the odd-indexed ones
    t_1, t_3, ....  lam(S) is the partition whose shifted parts
    enumerate S.  N defaults to k, the number of parts of every shape
    involved.
    """
    started = time.monotonic()
    k = int(k)
    if k < 1:
        raise ValueError("k must be positive, got %d" % k)
    listed = tuple(int(v) for v in T)
    elems = tuple(sorted(listed))
    if len(set(elems)) != len(elems):
        raise ValueError("index set has repeated elements: %r" % (listed,))
    if elems and elems[0] < 1:
        raise ValueError("index set elements must be positive: %r" % (listed,))
    if len(elems) != 2 * k:
        raise ValueError("index set needs exactly 2k = %d elements, got %d" % (2 * k, len(elems)))
    if N is None:
        N = k
    N = int(N)
    lhs = Polynomial.zero()
    for subset in itertools.combinations(elems, k):
        rest = tuple(v for v in elems if v not in subset)
        lhs = lhs + schur_of(partition_from_set(subset), N) * schur_of(partition_from_set(rest), N)
    rhs = (2 ** k) * (
        schur_of(partition_from_set(elems[1::2]), N) * schur_of(partition_from_set(elems[0::2]), N)
    )
    return _report("ciucu", {"T": list(elems), "k": k, "N": N}, lhs, rhs, started)


def _nested_strip_pairs(n: int, k: int):
    """Nonempty pair lists ((i_1,j_1),...,(i_m,j_m)) with i_1<...<i_m <= k <= j_m<...<j_1 <= n."""
    for m in range(1, min(k, n - k + 1) + 1):
        for i_combo in itertools.combinations(range(1, k + 1), m):
            for j_combo in itertools.combinations(range(k, n + 1), m):
                yield tuple(zip(i_combo, tuple(reversed(j_combo))))


def verify_kleber(lam, k, N=None) -> IdentityReport:
    """Square expansion of s_lam pinned at its k-th corner.

    The square equals the product of the column-augmented and
    column-reduced shapes at corner k, plus an alternating sum over
    nested families of border strips straddling corner k: each family
    adds its strips to one factor and removes them from the other, with
    sign (-1)^(m-1) for m nested strips.  A family whose strips cannot
    all be removed contributes zero and is skipped.  N defaults to the
    largest number of parts among the shapes that appear.
    """
    started = time.monotonic()
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    encoding = corner_encoding(lam)
    n = encoding.n
    k = int(k)
    if not 1 <= k <= n:
        raise ValueError("corner index %d out of range for %d corners" % (k, n))
    products = [(1, apply_omega(lam, k, +1).parts, apply_omega(lam, k, -1).parts)]
    for pairs in _nested_strip_pairs(n, k):
        sign = -1 if len(pairs) % 2 == 0 else 1
        grown = partition_from_corners(apply_nested(encoding, BorderStripSpec(pairs, BORDER_ADD))).parts
        try:
            shrunk = partition_from_corners(
                apply_nested(encoding, BorderStripSpec(pairs, BORDER_REMOVE))
            ).parts
        except ValueError:
            continue
        products.append((sign, grown, shrunk))
    if N is None:
        N = max(
            len(lam.parts),
            max((max(len(a), len(b)) for _, a, b in products), default=1),
            1,
        )
    N = int(N)
    lhs = schur_of(lam.parts, N) * schur_of(lam.parts, N)
    rhs = Polynomial.zero()
    for sign, grown, shrunk in products:
        rhs = rhs + sign * (schur_of(grown, N) * schur_of(shrunk, N))
    params = {
        "lambda": list(lam.parts),
        "k": k,
        "N": N,
        "products": [[sign, list(a), list(b)] for sign, a, b in products],
    }
    return _report("kleber", params, lhs, rhs, started)


def _object_id(blue_family, green_family) -> tuple:
    """Hashable identity of a two-family picture.

    Zero-length paths carry no edges, no weight and no enumeration
    freedom (they exist exactly when a start terminal equals an end
    terminal), so they are bookkeeping and excluded from the identity;
    recolouring, which rebuilds families from edge sets, cannot see
    them either.
    """

    def texts(family):
        return tuple(p.to_text() for p in family if p.steps)

    return (texts(blue_family), texts(green_family))


def _layout_families(parts, N, offset) -> list:
    """All nonintersecting families of the straight shape at the offset; none if a part is negative."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        return []
    spec = TerminalSpec.from_shape(SkewShape(Partition(parts)), N, offset)
    return list(enumerate_families(spec))


@dataclass(frozen=True)
class AuditReport:
    """Tallies from replaying the window-exchange bijection object by object."""

    lam: tuple
    N: int
    objects: int
    case_a: int
    case_b: int
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "N": self.N,
            "objects": self.objects,
            "case_a": self.case_a,
            "case_b": self.case_b,
            "elapsed_ms": self.elapsed_ms,
        }


def bijection_audit(lam, N=None) -> AuditReport:
    """Replay the window-exchange bijection and check every object.

    Left-side objects pair a green family of the leading r-part window
    (offset 0) with a blue family of the trailing window (offset -1).
    For each object the changing trail starting at the rightmost
    endpoint is recoloured; the image must land in exactly one of the
    two right-side layouts: case A keeps the trail at the bottom point
    (-1, 1) and realizes the middle-window times full-sequence product,
    case B ends on the top line and realizes the lowered-times-raised
    product.  Raises on any violated check: a trail reaching the
    protected bottom point (-r-1, 1) or any non-terminal, a repeated
    image, an image outside the two layouts, a changed weight, or a
    right-side object never reached.  Returns the tallies on success.
    """
    started = time.monotonic()
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    parts = lam.parts
    if len(parts) < 2:
        raise ValueError("need at least two parts, got %r" % (parts,))
    r = len(parts) - 1
    if N is None:
        N = len(parts)
    N = int(N)

    greens = _layout_families(parts[:r], N, 0)
    blues = _layout_families(parts[1:], N, -1)
    probe = (parts[0] - 1, N)
    keep_end = (-1, 1)
    exchange_end = (parts[-1] - r - 1, N)
    protected = (-r - 1, 1)

    expected = {}
    case_a_total = 0
    for gf in _layout_families(parts[1:r], N, -1):
        for bf in _layout_families(parts, N, 0):
            expected[_object_id(bf, gf)] = "A"
            case_a_total += 1
    case_b_total = 0
    for gf in _layout_families(tuple(p - 1 for p in parts[1:]), N, 0):
        for bf in _layout_families(tuple(p + 1 for p in parts[:r]), N, -1):
            expected[_object_id(bf, gf)] = "B"
            case_b_total += 1
    assert len(expected) == case_a_total + case_b_total, "the two layouts share an object"

    tally = {"A": 0, "B": 0}
    images = set()
    for gf in greens:
        for bf in blues:
            graph = build_graph(bf, gf)
            weight_before = path_weight(bf) * path_weight(gf)
            trail = trail_at_terminal(graph, probe)
            assert trail.start == probe
            far = trail.end
            if far == protected:
                raise RuntimeError("trail from %r reached the protected point %r" % (probe, protected))
            if far not in (keep_end, exchange_end):
                raise RuntimeError("gap trail: far endpoint %r is not an exchange target" % (far,))
            image = recolour(graph, [trail])
            oid = _object_id(image.blue, image.green)
            if oid in images:
                raise RuntimeError("two objects recoloured to the same image %r" % (oid,))
            images.add(oid)
            kind = expected.pop(oid, None)
            if kind is None:
                raise RuntimeError("image %r is not an object of either layout" % (oid,))
            # with N = 1 the two targets can be the same lattice point,
            # and only the image itself tells the cases apart
            if keep_end != exchange_end and kind != ("A" if far == keep_end else "B"):
                raise RuntimeError("far endpoint %r disagrees with the image layout %s" % (far, kind))
            weight_after = path_weight(image.blue) * path_weight(image.green)
            if weight_before != weight_after:
                raise RuntimeError(
                    "recolouring changed the weight: %s -> %s" % (weight_before, weight_after)
                )
            tally[kind] += 1
    if expected:
        raise RuntimeError("%d layout objects were never reached" % (len(expected),))
    return AuditReport(
        lam=parts,
        N=N,
        objects=tally["A"] + tally["B"],
        case_a=tally["A"],
        case_b=tally["B"],
        elapsed_ms=(time.monotonic() - started) * 1000.0,
    )


def _canonical_shape(starts, ends) -> tuple:
    """(outer, inner) of the skew shape drawn by the terminal sets, offset normalized away."""
    if not starts:
        return ((), ())
    ss = sorted((x for x, _ in starts), reverse=True)
    es = sorted((x for x, _ in ends), reverse=True)
    base = min(s + i for i, s in enumerate(ss, start=1))
    inner = tuple(s + i - base for i, s in enumerate(ss, start=1))
    outer = tuple(e + i - base for i, e in enumerate(es, start=1))
    return (outer, inner)


def _canonical_pattern(key) -> tuple:
    """(blue outer, blue inner, green outer, green inner) for a terminal pattern."""
    blue_starts, blue_ends, green_starts, green_ends = key
    return _canonical_shape(blue_starts, blue_ends) + _canonical_shape(green_starts, green_ends)


def _pattern_key(blue_family, green_family) -> tuple:
    return (
        frozenset(p.start for p in blue_family),
        frozenset(p.end for p in blue_family),
        frozenset(p.start for p in green_family),
        frozenset(p.end for p in green_family),
    )


def _pattern_objects(key, N) -> list:
    blue_starts, blue_ends, green_starts, green_ends = key
    by_x = lambda p: -p[0]
    blue_spec = TerminalSpec(sorted(blue_starts, key=by_x), sorted(blue_ends, key=by_x), N)
    green_spec = TerminalSpec(sorted(green_starts, key=by_x), sorted(green_ends, key=by_x), N)
    blues = list(enumerate_families(blue_spec))
    greens = list(enumerate_families(green_spec))
    return [(bf, gf) for bf in blues for gf in greens]


def _side_of(key, original_colours) -> int:
    """0 when every selected point keeps its original colour, 1 when all flipped."""
    if not original_colours:
        return 0
    blue_starts, blue_ends, green_starts, green_ends = key
    flips = set()
    for location, first in original_colours.items():
        in_blue = location in blue_starts or location in blue_ends
        in_green = location in green_starts or location in green_ends
        if in_blue and in_green:
            raise RuntimeError("selected point %r became coincident" % (location,))
        if not in_blue and not in_green:
            raise RuntimeError("selected point %r left the terminal data" % (location,))
        flips.add((BLUE if in_blue else GREEN) != first)
    if len(flips) == 2:
        raise RuntimeError("selected points flipped inconsistently in %r" % (key,))
    return 1 if flips.pop() else 0


def _recoloured(graph, locations):
    """Recolour the distinct trails with an endpoint at the selected points."""
    trails = []
    seen = set()
    for location in locations:
        trail = trail_at_terminal(graph, location)
        instances = trail.edge_instances()
        if instances in seen:
            continue
        seen.add(instances)
        trails.append(trail)
    return recolour(graph, trails)


def _parity_uniform(points) -> bool:
    """All black points share a parity and all white points share a parity."""
    blacks = {p.parity for p in points if p.matching_colour == BLACK}
    whites = {p.parity for p in points if p.matching_colour == WHITE}
    return len(blacks) <= 1 and len(whites) <= 1


@dataclass(frozen=True, eq=False)
class OrbitResult:
    """Terminal patterns reachable under the recolouring move, with object counts.

    Patterns are reported canonically as (blue outer, blue inner, green
    outer, green inner); S0 collects the patterns whose objects keep
    every selected point's original colour, S1 those with every
    selected point flipped.  weight0/weight1 are the summed path
    weights of the two sides.
    """

    initial: tuple
    selected: tuple
    N: int
    S0: frozenset
    S1: frozenset
    counts0: dict
    counts1: dict
    O0_size: int
    O1_size: int
    weight0: Polynomial
    weight1: Polynomial
    degenerate: bool
    parity_uniform: bool

    def to_json(self) -> dict:
        def pattern(q):
            return [list(component) for component in q]

        def side(counts):
            return [
                {"pattern": pattern(q), "objects": counts[q]} for q in sorted(counts)
            ]

        return {
            "initial": pattern(self.initial),
            "selected": [list(p) for p in self.selected],
            "N": self.N,
            "S0": side(self.counts0),
            "S1": side(self.counts1),
            "O0_size": self.O0_size,
            "O1_size": self.O1_size,
            "degenerate": self.degenerate,
            "parity_uniform": self.parity_uniform,
        }


def explore_orbit(blue, green, t=0, selected=(), N=None) -> OrbitResult:
    """Close the trail-recolouring move over families with fixed terminals.

    blue is laid out at offset 0 and green at offset t.  selected names
    indices into the Q-sequence of the initial terminal data; in every
    object the distinct changing trails starting at those lattice
    points are recoloured together, sending the object to one with a
    possibly different terminal pattern.  The walk repeats from every
    pattern reached until no new pattern appears, then both sides of
    the classification are checked: the recolouring must be an
    involution, the two sides must have the same number of objects and
    the same summed weight, and with uniform parities on the Q-sequence
    the original side must consist of the input pattern alone.  With no
    selected points the move is the identity and the result is flagged
    degenerate.
    """
    blue = blue if isinstance(blue, SkewShape) else SkewShape(blue)
    green = green if isinstance(green, SkewShape) else SkewShape(green)
    if N is None:
        N = max(blue.n_rows, green.n_rows, 1)
    N = int(N)
    blue_spec = TerminalSpec.from_shape(blue, N, 0)
    green_spec = TerminalSpec.from_shape(green, N, int(t))
    initial_key = (
        frozenset(blue_spec.starts),
        frozenset(blue_spec.ends),
        frozenset(green_spec.starts),
        frozenset(green_spec.ends),
    )
    q_points = terminal_points_from_sets(*initial_key)
    sel_indices = sorted(set(int(i) for i in selected))
    for i in sel_indices:
        if not 1 <= i <= len(q_points):
            raise ValueError("selected index %d out of range 1..%d" % (i, len(q_points)))
    sel_locations = tuple(q_points[i - 1].location for i in sel_indices)
    original_colours = {
        q_points[i - 1].location: q_points[i - 1].path_colour for i in sel_indices
    }
    parity_uniform = _parity_uniform(q_points)
    degenerate = not sel_locations

    cap = 2 ** len(q_points) if q_points else 1
    pending = deque([initial_key])
    queued = {initial_key}
    processed = set()
    counts = ({}, {})
    weights = [Polynomial.zero(), Polynomial.zero()]
    image_of = {}
    while pending:
        key = pending.popleft()
        if len(processed) >= cap:
            raise RuntimeError("closure exceeded %d terminal patterns without settling" % (cap,))
        processed.add(key)
        side = _side_of(key, original_colours)
        objects = _pattern_objects(key, N)
        if objects:
            canon = _canonical_pattern(key)
            counts[side][canon] = counts[side].get(canon, 0) + len(objects)
        for blue_family, green_family in objects:
            weights[side] = weights[side] + Polynomial(
                {path_weight(blue_family) * path_weight(green_family): 1}
            )
            if degenerate:
                continue
            graph = build_graph(blue_family, green_family)
            image = _recoloured(graph, sel_locations)
            image_of[_object_id(blue_family, green_family)] = _object_id(image.blue, image.green)
            key2 = _pattern_key(image.blue, image.green)
            if key2 not in queued:
                queued.add(key2)
                pending.append(key2)

    for oid, img in image_of.items():
        if image_of.get(img) != oid:
            raise RuntimeError("recolouring from the selected points is not an involution at %r" % (oid,))
    O0_size = sum(counts[0].values())
    O1_size = sum(counts[1].values())
    if not degenerate:
        if O0_size != O1_size:
            raise RuntimeError("the two sides differ in size: %d vs %d" % (O0_size, O1_size))
        if weights[0] != weights[1]:
            raise RuntimeError("the two sides differ in summed weight")
        if parity_uniform and counts[0] and set(counts[0]) != {_canonical_pattern(initial_key)}:
            raise RuntimeError("uniform parities should pin the original side to the input pattern")
    return OrbitResult(
        initial=_canonical_pattern(initial_key),
        selected=sel_locations,
        N=N,
        S0=frozenset(counts[0]),
        S1=frozenset(counts[1]),
        counts0=dict(counts[0]),
        counts1=dict(counts[1]),
        O0_size=O0_size,
        O1_size=O1_size,
        weight0=weights[0],
        weight1=weights[1],
        degenerate=degenerate,
        parity_uniform=parity_uniform,
    )
