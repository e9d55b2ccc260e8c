"""Exact dense linear algebra over the rationals.

Entries are ``fractions.Fraction`` throughout; nothing here ever touches a
float.  Matrices are immutable and every operation returns a new matrix.
Empty (0xm, mx0) matrices are legal: they arise as resolutions of the zero
representation, and det of the 0x0 matrix is 1 (empty product).

The determinant uses fraction-free Bareiss elimination with first-nonzero
pivoting; the Pfaffian uses first-row expansion up to size 8 and skew
congruence (Parlett-Reid style) tridiagonalization above that.  The two
Pfaffian routes, and the combinatorial perfect-matching sum, are compared
against each other in the test suite.
"""

from __future__ import annotations

from fractions import Fraction


class ShapeError(ValueError):
    """Operands with incompatible shapes."""


class SingularMatrixError(ValueError):
    """Inversion attempted on a singular matrix."""


class SkewSymmetryError(ValueError):
    """A matrix required to be skew-symmetric is not."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatMatrix:
    """Immutable dense matrix with Fraction entries, stored row-major."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, entries):
        entries = [_frac(x) for x in entries]
        if len(entries) != rows * cols:
            raise ShapeError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._rows = tuple(
            tuple(entries[i * cols : (i + 1) * cols]) for i in range(rows)
        )

    @classmethod
    def from_rows(cls, data) -> "RatMatrix":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise ShapeError("ragged rows")
        return cls(rows, cols, [x for r in data for x in r])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, values) -> "RatMatrix":
        values = list(values)
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    # -- basic structure ---------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def to_lists(self):
        return [list(r) for r in self._rows]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return (
            isinstance(other, RatMatrix)
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._rows))

    def __repr__(self):
        if self.rows == 0 or self.cols == 0:
            return f"RatMatrix({self.rows}x{self.cols})"
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"RatMatrix[{body}]"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"add {self.shape} vs {other.shape}")
        return RatMatrix(
            self.rows,
            self.cols,
            [a + b for ra, rb in zip(self._rows, other._rows) for a, b in zip(ra, rb)],
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [-x for r in self._rows for x in r])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ShapeError(f"mul {self.shape} vs {other.shape}")
            ot = other.transpose()._rows
            return RatMatrix(
                self.rows,
                other.cols,
                [
                    sum((a * b for a, b in zip(ra, cb)), Fraction(0))
                    for ra in self._rows
                    for cb in ot
                ],
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "RatMatrix":
        c = _frac(c)
        return RatMatrix(self.rows, self.cols, [c * x for r in self._rows for x in r])

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            [self._rows[i][j] for j in range(self.cols) for i in range(self.rows)],
        )

    def is_skew(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == -self._rows[j][i]
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    # -- elimination-based operations ---------------------------------------

    def det(self) -> Fraction:
        """Exact determinant via fraction-free Bareiss elimination."""
        if not self.is_square():
            raise ShapeError(f"det of non-square {self.shape}")
        n = self.rows
        if n == 0:
            return Fraction(1)
        m = self.to_lists()
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            piv = next((i for i in range(k, n) if m[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
                m[i][k] = Fraction(0)
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def check_skew(self):
        if not self.is_square():
            raise ShapeError(f"pfaffian of non-square {self.shape}")
        for i in range(self.rows):
            for j in range(i, self.cols):
                if self._rows[i][j] != -self._rows[j][i]:
                    raise SkewSymmetryError(
                        f"entry ({i},{j})={self._rows[i][j]} vs "
                        f"({j},{i})={self._rows[j][i]} violates skew-symmetry"
                    )

    def pfaffian(self) -> Fraction:
        """Exact Pfaffian; raises SkewSymmetryError on non-skew input.

        Odd-size skew matrices have Pfaffian 0 (no perfect matching); the
        0x0 Pfaffian is 1.
        """
        self.check_skew()
        n = self.rows
        if n % 2 == 1:
            return Fraction(0)
        if n == 0:
            return Fraction(1)
        if n <= 8:
            return _pfaffian_expand(self.to_lists())
        return _pfaffian_eliminate(self.to_lists())

    def rref(self):
        """Reduced row echelon form; returns (RatMatrix, pivot column tuple)."""
        m = self.to_lists()
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return RatMatrix.from_rows(m) if rows else RatMatrix.zero(0, cols), tuple(pivots)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return len(self.rref()[1])

    def kernel_basis(self):
        """Canonical nullspace basis as a list of column matrices.

        Basis vectors come from the RREF free columns, normalized so the
        first nonzero entry is 1; deterministic for a given input.
        """
        cols = self.cols
        if cols == 0:
            return []
        if self.rows == 0:
            return [RatMatrix(cols, 1, [1 if i == j else 0 for i in range(cols)])
                    for j in range(cols)]
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [Fraction(0)] * cols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red[r, fc]
            lead = next(x for x in v if x != 0)
            v = [x / lead for x in v]
            basis.append(RatMatrix(cols, 1, v))
        return basis

    def kernel_matrix(self) -> "RatMatrix":
        """Kernel basis assembled as columns of a single matrix."""
        basis = self.kernel_basis()
        if not basis:
            return RatMatrix.zero(self.cols, 0)
        return hstack(basis)

    def solve(self, b: "RatMatrix"):
        """Particular solution of self * x = b (free variables 0), or None."""
        if b.rows != self.rows:
            raise ShapeError(f"solve {self.shape} vs rhs {b.shape}")
        aug = hstack([self, b])
        red, pivots = aug.rref()
        for r in range(red.rows):
            lead = next((c for c in range(aug.cols) if red[r, c] != 0), None)
            if lead is not None and lead >= self.cols:
                return None
        x = [[Fraction(0)] * b.cols for _ in range(self.cols)]
        for r, pc in enumerate(pivots):
            if pc < self.cols:
                for k in range(b.cols):
                    x[pc][k] = red[r, self.cols + k]
        return RatMatrix.from_rows(x) if self.cols else RatMatrix.zero(0, b.cols)

    def inverse(self) -> "RatMatrix":
        if not self.is_square():
            raise ShapeError(f"inverse of non-square {self.shape}")
        n = self.rows
        if n == 0:
            return self
        aug = hstack([self, RatMatrix.identity(n)])
        red, pivots = aug.rref()
        if len(pivots) != n or any(p >= n for p in pivots):
            raise SingularMatrixError("matrix is singular")
        return RatMatrix.from_rows([red.row(i)[n:] for i in range(n)])


def _pfaffian_expand(m) -> Fraction:
    """First-row expansion: Pf(A) = sum_j (-1)^j a_{0,j} Pf(A with 0,j removed)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 2:
        return m[0][1]
    total = Fraction(0)
    for j in range(1, n):
        if m[0][j] == 0:
            continue
        keep = [i for i in range(1, n) if i != j]
        minor = [[m[a][b] for b in keep] for a in keep]
        term = m[0][j] * _pfaffian_expand(minor)
        total += term if j % 2 == 1 else -term
    return total


def _pfaffian_eliminate(m) -> Fraction:
    """Skew congruence elimination: reduce to 2x2 block diagonal form.

    Unit-determinant congruences leave the Pfaffian fixed; row/column swaps
    flip its sign.  All divisions are exact over Q.
    """
    n = len(m)
    sign = 1
    result = Fraction(1)
    k = 0
    while k < n:
        piv = next((i for i in range(k + 1, n) if m[k][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k + 1:
            for row in m:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            m[k + 1], m[piv] = m[piv], m[k + 1]
            sign = -sign
        b = m[k][k + 1]
        for i in range(k + 2, n):
            alpha = -m[i][k + 1] / b
            beta = m[i][k] / b
            if alpha == 0 and beta == 0:
                continue
            for j in range(n):
                m[i][j] += alpha * m[k][j] + beta * m[k + 1][j]
            for row in m:
                row[i] += alpha * row[k] + beta * row[k + 1]
        result *= b
        k += 2
    return sign * result


def pfaffian_combinatorial(mat: RatMatrix) -> Fraction:
    """Perfect-matching sum definition of the Pfaffian (reference oracle).

    Exponential in the size; intended for cross-validation at size <= 8.
    """
    mat.check_skew()
    n = mat.rows
    if n % 2 == 1:
        return Fraction(0)
    if n == 0:
        return Fraction(1)

    def go(avail, perm):
        if not avail:
            return _perm_sign(perm) * _product(mat, perm)
        i = avail[0]
        total = Fraction(0)
        for j in avail[1:]:
            rest = [x for x in avail if x not in (i, j)]
            total += go(rest, perm + [i, j])
        return total

    return go(list(range(n)), [])


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    pos = {v: i for i, v in enumerate(perm)}
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        cycle = 0
        while not seen[j]:
            seen[j] = True
            j = pos[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def _product(mat, perm) -> Fraction:
    total = Fraction(1)
    for k in range(0, len(perm), 2):
        total *= mat[perm[k], perm[k + 1]]
    return total


def hstack(mats) -> RatMatrix:
    mats = list(mats)
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ShapeError("hstack with differing row counts")
    data = [[x for m in mats for x in m.row(i)] for i in range(rows)]
    if rows == 0:
        return RatMatrix.zero(0, sum(m.cols for m in mats))
    return RatMatrix.from_rows(data)


def vstack(mats) -> RatMatrix:
    mats = list(mats)
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ShapeError("vstack with differing column counts")
    total = sum(m.rows for m in mats)
    if total == 0:
        return RatMatrix.zero(0, cols)
    data = [list(m.row(i)) for m in mats for i in range(m.rows)]
    return RatMatrix.from_rows(data)


def kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Kronecker product, row-major blocks a[i,j] * b."""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    entries = []
    for i in range(a.rows):
        for p in range(b.rows):
            for j in range(a.cols):
                for q in range(b.cols):
                    entries.append(a[i, j] * b[p, q])
    return RatMatrix(rows, cols, entries)


def block_matrix(blocks) -> RatMatrix:
    """Assemble a matrix from a 2d grid of compatible blocks."""
    return vstack([hstack(row) for row in blocks])


def symplectic_form(n: int) -> RatMatrix:
    """The 2m x 2m block form J = [[0, I], [-I, 0]]; n must be even."""
    if n % 2 != 0:
        raise ShapeError(f"symplectic form needs even size, got {n}")
    m = n // 2
    entries = []
    for i in range(n):
        for j in range(n):
            if i < m and j == i + m:
                entries.append(1)
            elif i >= m and j == i - m:
                entries.append(-1)
            else:
                entries.append(0)
    return RatMatrix(n, n, entries)
