"""Sparse multivariate polynomials over Q and coordinate systems on
orthogonal/symplectic representation spaces.

A monomial is a tuple of (coordinate index, exponent) pairs sorted by index;
polynomials map monomials to Fraction coefficients.  Output ordering is
graded lexicographic over the fixed coordinate enumeration, so symbolic
expansions and rank computations are reproducible run to run.

Coordinates of the representation space are the free entries of the stored
arrow matrices: every entry for a Q1+ arrow, the upper triangle including
the diagonal for a symmetric fixed-arrow block, and the strict upper
triangle for a skew one.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import RatMatrix
from .quiver import SymmetricQuiver
from .rep import (
    ORTHOGONAL,
    SYMPLECTIC,
    RepresentationError,
    SymmetricRepresentation,
)


class Polynomial:
    """Sparse polynomial: {monomial: coefficient} with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff != 0:
                    self.terms[mono] = Fraction(coeff)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = Fraction(c)
        return cls({(): c}) if c else cls()

    @classmethod
    def variable(cls, idx: int, coeff=1) -> "Polynomial":
        return cls({((idx, 1),): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, Fraction(0)) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        res = Polynomial()
        res.terms = out
        return res

    def __neg__(self) -> "Polynomial":
        res = Polynomial()
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        res = Polynomial()
        if c:
            res.terms = {m: c * k for m, k in self.terms.items()}
        return res

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                new = out.get(mono, Fraction(0)) + c1 * c2
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        res = Polynomial()
        res.terms = out
        return res

    __rmul__ = __mul__

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def evaluate(self, values) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for idx, exp in mono:
                term *= values[idx] ** exp
            total += term
        return total

    def sorted_terms(self):
        """Terms in graded lex order over the coordinate enumeration."""
        def key(mono):
            deg = sum(e for _, e in mono)
            dense = tuple(sorted(mono))
            return (-deg, dense)

        return sorted(self.terms.items(), key=lambda kv: key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono, coeff in self.sorted_terms():
            factors = "*".join(
                f"x{idx}" + (f"^{e}" if e > 1 else "") for idx, e in mono
            )
            bits.append(f"{coeff}" + (f"*{factors}" if factors else ""))
        return " + ".join(bits)


def _merge_monomials(m1, m2):
    out = dict(m1)
    for idx, e in m2:
        out[idx] = out.get(idx, 0) + e
    return tuple(sorted(out.items()))


def monomial_of(pairs) -> tuple:
    return tuple(sorted((i, e) for i, e in pairs if e))


class PolyMatrix:
    """Dense matrix of Polynomials; enough algebra for path products."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0

    @classmethod
    def zero(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls([[Polynomial() for _ in range(cols)] for _ in range(rows)]) \
            if rows else cls._empty(rows, cols)

    @classmethod
    def _empty(cls, rows, cols):
        m = cls([])
        m.rows, m.cols = rows, cols
        m.data = [[Polynomial() for _ in range(cols)] for _ in range(rows)]
        return m

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(
            [[Polynomial.constant(1 if i == j else 0) for j in range(n)] for i in range(n)]
        ) if n else cls.zero(0, 0)

    @classmethod
    def lift(cls, mat: RatMatrix) -> "PolyMatrix":
        return cls.zero(mat.rows, mat.cols) if mat.rows == 0 or mat.cols == 0 else cls(
            [[Polynomial.constant(mat[i, j]) for j in range(mat.cols)] for i in range(mat.rows)]
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            other = PolyMatrix.lift(other)
        if self.cols != other.rows:
            raise RepresentationError(
                f"poly matrix product {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )
        out = PolyMatrix.zero(self.rows, other.cols)
        for i in range(self.rows):
            for j in range(other.cols):
                acc = Polynomial()
                for k in range(self.cols):
                    acc = acc + self.data[i][k] * other.data[k][j]
                out.data[i][j] = acc
        return out

    def __neg__(self):
        return PolyMatrix([[-p for p in row] for row in self.data]) \
            if self.rows else PolyMatrix.zero(self.rows, self.cols)

    def transpose(self) -> "PolyMatrix":
        out = PolyMatrix.zero(self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                out.data[j][i] = self.data[i][j]
        return out

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix([[p.scale(c) for p in row] for row in self.data]) \
            if self.rows else PolyMatrix.zero(self.rows, self.cols)

    def is_skew(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(i, self.cols):
                if not (self.data[i][j] + self.data[j][i]).is_zero():
                    return False
        return True

    def det(self) -> Polynomial:
        if self.rows != self.cols:
            raise RepresentationError("determinant of a non-square poly matrix")
        n = self.rows
        if n == 0:
            return Polynomial.constant(1)
        if n == 1:
            return self.data[0][0]
        # cofactor expansion along the first row; sizes stay small here
        total = Polynomial()
        for j in range(n):
            entry = self.data[0][j]
            if entry.is_zero():
                continue
            minor = PolyMatrix(
                [[self.data[i][k] for k in range(n) if k != j] for i in range(1, n)]
            )
            term = entry * minor.det()
            total = total + (term if j % 2 == 0 else -term)
        return total

    def pfaffian(self) -> Polynomial:
        if self.rows != self.cols:
            raise RepresentationError("pfaffian of a non-square poly matrix")
        n = self.rows
        if n % 2 == 1:
            return Polynomial()
        if n == 0:
            return Polynomial.constant(1)
        if n == 2:
            return self.data[0][1]
        total = Polynomial()
        for j in range(1, n):
            entry = self.data[0][j]
            if entry.is_zero():
                continue
            keep = [i for i in range(1, n) if i != j]
            minor = PolyMatrix([[self.data[a][b] for b in keep] for a in keep])
            term = entry * minor.pfaffian()
            total = total + (term if j % 2 == 1 else -term)
        return total


class CoordinateSystem:
    """Enumeration of the coordinates of SpRep/ORep(Q, beta).

    Each coordinate is (arrow, row, col) into a stored arrow matrix; for the
    fixed arrow only the independent triangle is enumerated.  The class
    builds symbolic stored/unfolded arrow matrices and converts between
    symmetric representations and flat value vectors.
    """

    def __init__(self, quiver: SymmetricQuiver, beta, kind: str):
        if kind not in (ORTHOGONAL, SYMPLECTIC):
            raise RepresentationError(f"unknown kind {kind!r}")
        self.quiver = quiver
        self.beta = tuple(int(b) for b in beta)
        self.kind = kind
        self.coords = []
        for a in quiver.stored_arrows():
            rows = self.beta[quiver.head(a) - 1]
            cols = self.beta[quiver.tail(a) - 1]
            if a == quiver.fixed_arrow:
                if kind == SYMPLECTIC:
                    self.coords.extend((a, p, q) for p in range(rows) for q in range(p, cols))
                else:
                    self.coords.extend((a, p, q) for p in range(rows) for q in range(p + 1, cols))
            else:
                self.coords.extend((a, p, q) for p in range(rows) for q in range(cols))
        self.index = {c: i for i, c in enumerate(self.coords)}

    def __len__(self):
        return len(self.coords)

    def symbolic_stored_map(self, a: int) -> PolyMatrix:
        q = self.quiver
        rows = self.beta[q.head(a) - 1]
        cols = self.beta[q.tail(a) - 1]
        out = PolyMatrix.zero(rows, cols)
        if a == q.fixed_arrow:
            for p in range(rows):
                for c in range(cols):
                    if (a, p, c) in self.index:
                        out.data[p][c] = Polynomial.variable(self.index[(a, p, c)])
                    elif (a, c, p) in self.index:
                        sign = 1 if self.kind == SYMPLECTIC else -1
                        out.data[p][c] = Polynomial.variable(self.index[(a, c, p)], sign)
                    # skew diagonal entries stay zero
        else:
            for p in range(rows):
                for c in range(cols):
                    out.data[p][c] = Polynomial.variable(self.index[(a, p, c)])
        return out

    def symbolic_maps(self) -> dict:
        """Symbolic matrices for all arrows, sigma-images included."""
        q = self.quiver
        maps = {a: self.symbolic_stored_map(a) for a in q.stored_arrows()}
        g = None
        if q.fixed_vertex is not None:
            from .linalg import symplectic_form

            d = self.beta[q.fixed_vertex - 1]
            g = RatMatrix.identity(d) if self.kind == ORTHOGONAL else symplectic_form(d)
        for a in q.q1_plus():
            sa = q.sigma_arrow(a)
            t, h = q.tail(a), q.head(a)
            m = maps[a]
            if h == q.fixed_vertex:
                maps[sa] = -(m.transpose() * g)
            elif t == q.fixed_vertex:
                maps[sa] = -(PolyMatrix.lift(g.inverse()) * m.transpose())
            else:
                maps[sa] = -m.transpose()
        return maps

    def symbolic_path_map(self, path, start: int) -> PolyMatrix:
        maps = self.symbolic_maps()
        out = PolyMatrix.identity(self.beta[start - 1])
        x = start
        for a in path:
            out = maps[a] * out
            x = self.quiver.head(a)
        return out

    def rep_from_values(self, values) -> SymmetricRepresentation:
        q = self.quiver
        maps = {}
        for a in q.stored_arrows():
            rows = self.beta[q.head(a) - 1]
            cols = self.beta[q.tail(a) - 1]
            entries = []
            for p in range(rows):
                for c in range(cols):
                    if (a, p, c) in self.index:
                        entries.append(values[self.index[(a, p, c)]])
                    elif (a, c, p) in self.index:
                        v = values[self.index[(a, c, p)]]
                        entries.append(v if self.kind == SYMPLECTIC else -v)
                    else:
                        entries.append(Fraction(0))
            maps[a] = RatMatrix(rows, cols, entries)
        return SymmetricRepresentation(q, self.kind, self.beta, maps)

    def values_from_rep(self, rep: SymmetricRepresentation):
        if rep.quiver != self.quiver or rep.kind != self.kind or rep.dim != self.beta:
            raise RepresentationError("representation does not match coordinate system")
        return [rep.maps[a][p, q] for (a, p, q) in self.coords]

    def fine_weight(self, coord) -> dict:
        """Extended-torus exponents of a coordinate as {(vertex, slot): exp}.

        Only Q0+ vertices carry torus directions; the sigma-negative copy of
        vertex x scales by the inverse, and the fixed vertex contributes
        nothing.
        """
        a, p, c = coord
        q = self.quiver
        t, h = q.tail(a), q.head(a)
        out: dict = {}
        plus = set(q.q0_plus())

        def bump(vertex, slot, e):
            key = (vertex, slot)
            out[key] = out.get(key, 0) + e
            if not out[key]:
                del out[key]

        if a == q.fixed_arrow:
            x = min(t, h)  # the Q0+ endpoint of the fixed arrow
            # x -> sigma(x) scales by t^-1 on both slots, sigma(x) -> x by t^+1
            e = -1 if t == x else 1
            bump(x, p, e)
            bump(x, c, e)
            return out
        if h in plus:
            bump(h, p, 1)
        if t in plus:
            bump(t, c, -1)
        return out
