"""Sparse multivariate polynomials over the integers.

Variables are alphabet-tagged tuples: ('x', 3) is x_3, ('h', 2) is the
formal symbol h_2, ('a', 1, 2) is the generic matrix entry a_{1,2}.
A monomial keeps its variables sorted; a polynomial maps monomials to
(arbitrary precision) integer coefficients and never stores zeros.
Term order everywhere is graded lexicographic, largest first, so text
output and term listings are canonical.
"""

import itertools
from math import comb


def x_var(i):
    return ("x", int(i))


def h_var(m):
    return ("h", int(m))


def a_var(i, j):
    return ("a", int(i), int(j))


def var_name(v):
    return v[0] + "_".join(str(i) for i in v[1:])


class Monomial:
    """Product of variables with positive integer exponents."""

    __slots__ = ("vars", "_hash")

    def __init__(self, vars=()):
        if isinstance(vars, dict):
            vars = vars.items()
        merged = {}
        for v, e in vars:
            e = int(e)
            if e < 0:
                raise ValueError("negative exponent for %r" % (v,))
            if e:
                merged[v] = merged.get(v, 0) + e
        vs = tuple(sorted(merged.items()))
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "_hash", hash(vs))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def degree(self):
        return sum(e for _, e in self.vars)

    def exponent(self, v):
        for w, e in self.vars:
            if w == v:
                return e
        return 0

    def __mul__(self, other):
        return Monomial(self.vars + other.vars)

    def __eq__(self, other):
        if isinstance(other, Monomial):
            return self.vars == other.vars
        return NotImplemented

    def __hash__(self):
        return self._hash

    def sort_key(self):
        # ascending sort of keys = descending graded-lex order of monomials
        return (-self.degree(), tuple((v, -e) for v, e in self.vars))

    def __repr__(self):
        return "Monomial(%r)" % (self.vars,)

    def __str__(self):
        if not self.vars:
            return "1"
        bits = []
        for v, e in self.vars:
            bits.append(var_name(v) if e == 1 else "%s^%d" % (var_name(v), e))
        return "*".join(bits)


ONE = Monomial()


class Polynomial:
    """Mapping monomial -> nonzero integer coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, dict):
            coeffs = coeffs.items()
        acc = {}
        for m, c in coeffs:
            if not isinstance(m, Monomial):
                m = Monomial(m)
            c = int(c)
            if c:
                acc[m] = acc.get(m, 0) + c
                if not acc[m]:
                    del acc[m]
        object.__setattr__(self, "coeffs", acc)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({ONE: c})

    @classmethod
    def variable(cls, v):
        return cls({Monomial(((v, 1),)): 1})

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        acc = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]
        out = Polynomial.__new__(Polynomial)
        object.__setattr__(out, "coeffs", acc)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        object.__setattr__(out, "coeffs", {m: -c for m, c in self.coeffs.items()})
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial.zero()
            out = Polynomial.__new__(Polynomial)
            object.__setattr__(out, "coeffs", {m: c * other for m, c in self.coeffs.items()})
            return out
        acc = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = m1 * m2
                s = acc.get(m, 0) + c1 * c2
                if s:
                    acc[m] = s
                elif m in acc:
                    del acc[m]
        out = Polynomial.__new__(Polynomial)
        object.__setattr__(out, "coeffs", acc)
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def terms(self):
        """(monomial, coefficient) pairs in descending graded-lex order."""
        return [(m, self.coeffs[m]) for m in sorted(self.coeffs, key=Monomial.sort_key)]

    def n_terms(self):
        return len(self.coeffs)

    def degree(self):
        return max((m.degree() for m in self.coeffs), default=0)

    def leading_monomial(self):
        if not self.coeffs:
            return None
        return min(self.coeffs, key=Monomial.sort_key)

    def substitute(self, mapping):
        """Replace variables by polynomials (or ints); unmapped variables stay."""
        out = Polynomial.zero()
        for m, c in self.coeffs.items():
            term = Polynomial.const(c)
            for v, e in m.vars:
                if v in mapping:
                    repl = mapping[v]
                    if isinstance(repl, int):
                        repl = Polynomial.const(repl)
                    term = term * repl ** e
                else:
                    term = term * Polynomial.variable(v) ** e
                if term.is_zero():
                    break
            out = out + term
        return out

    def __repr__(self):
        return "Polynomial(%s)" % (str(self),)

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for m, c in self.terms():
            mono = str(m)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%d*%s" % (abs(c), mono)
            if not bits:
                bits.append(body if c > 0 else "-" + body)
            else:
                bits.append(("+ " if c > 0 else "- ") + body)
        return " ".join(bits)


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def complete_homogeneous(m, n_vars):
    """Sum of all monomials of degree m in x_1..x_n; 1 for m=0, 0 for m<0.

    Has C(m + n - 1, n - 1) terms.
    """
    if n_vars < 1:
        raise ValueError("need at least one variable")
    if m < 0:
        return Polynomial.zero()
    if m == 0:
        return Polynomial.const(1)
    coeffs = {}
    for combo in itertools.combinations_with_replacement(range(1, n_vars + 1), m):
        mono = Monomial((x_var(i), combo.count(i)) for i in set(combo))
        coeffs[mono] = 1
    assert len(coeffs) == comb(m + n_vars - 1, n_vars - 1)
    return Polynomial(coeffs)


def formal_h(m):
    """The symbol h_m as a polynomial: h_0 = 1, h_{m<0} = 0."""
    if m < 0:
        return Polynomial.zero()
    if m == 0:
        return Polynomial.const(1)
    return Polynomial.variable(h_var(m))


class FormalMatrix:
    """Rectangular matrix of polynomials, 1-based access."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(tuple(self._as_poly(e) for e in row) for row in entries)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("FormalMatrix is immutable")

    @staticmethod
    def _as_poly(e):
        if isinstance(e, Polynomial):
            return e
        if isinstance(e, int):
            return Polynomial.const(e)
        raise TypeError("matrix entries must be Polynomial or int")

    @classmethod
    def generic(cls, n_rows, n_cols, alphabet="a"):
        """Matrix of independent variables ('a', i, j)."""
        return cls(
            [
                [Polynomial.variable((alphabet, i, j)) for j in range(1, n_cols + 1)]
                for i in range(1, n_rows + 1)
            ]
        )

    @property
    def n_rows(self):
        return len(self.entries)

    @property
    def n_cols(self):
        return len(self.entries[0]) if self.entries else 0

    def entry(self, i, j):
        """1-based."""
        return self.entries[i - 1][j - 1]

    def __eq__(self, other):
        if isinstance(other, FormalMatrix):
            return self.entries == other.entries
        return NotImplemented


MAX_EXPANSION_DIM = 6


def determinant(matrix):
    """Full signed permutation expansion; guarded to dimension 6."""
    if matrix.n_rows != matrix.n_cols:
        raise ValueError("determinant of a %dx%d matrix" % (matrix.n_rows, matrix.n_cols))
    d = matrix.n_rows
    if d > MAX_EXPANSION_DIM:
        raise ValueError("dimension %d exceeds the expansion guard (%d)" % (d, MAX_EXPANSION_DIM))
    if d == 0:
        return Polynomial.const(1)
    total = Polynomial.zero()
    for perm in itertools.permutations(range(d)):
        sign = _perm_sign(perm)
        term = Polynomial.const(sign)
        for i, j in enumerate(perm):
            term = term * matrix.entries[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def minor(matrix, rows, cols):
    """Determinant of the listed rows and columns, in the listed order.

    The order matters for the sign: minor(m, (2, 1), (1, 2)) is the
    negative of minor(m, (1, 2), (1, 2)).  Indices are 1-based; listing
    a row twice gives the zero polynomial, as a determinant should.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    for i in rows:
        if not 1 <= i <= matrix.n_rows:
            raise ValueError("row %d out of range" % i)
    for j in cols:
        if not 1 <= j <= matrix.n_cols:
            raise ValueError("column %d out of range" % j)
    sub = FormalMatrix([[matrix.entry(i, j) for j in cols] for i in rows])
    return determinant(sub)
