"""Representations of type-A quivers and their orthogonal/symplectic forms.

A plain ``Representation`` assigns a dimension to every vertex and an exact
rational matrix to every arrow.  A ``SymmetricRepresentation`` stores only
the independent data of an orthogonal or symplectic representation: the
matrices on Q1+ and on the sigma-fixed arrow, the rest being determined by
the bilinear form.  ``unfold`` produces the full representation using fixed
Gram matrices: identity cross-pairings between x and sigma(x), and on a
sigma-fixed vertex the identity (orthogonal) or the block form J
(symplectic).  With those choices the sigma-image of a map is -transpose,
corrected by the fixed-vertex form where one endpoint is fixed.

Isomorphism testing goes through ``fingerprint``: the multiset of interval
summands, recovered from Hom-dimension counts against all intervals (the
algebra is representation-directed, so that linear system is unitriangular).
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import RatMatrix, ShapeError, hstack, symplectic_form, vstack
from .quiver import Quiver, QuiverError, SymmetricQuiver, check_dim_vector, euler_form

ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"
KINDS = (ORTHOGONAL, SYMPLECTIC)


class RepresentationError(ValueError):
    """Invalid representation data."""


class Representation:
    """Vertex dimensions plus one matrix per arrow (head-dim x tail-dim)."""

    __slots__ = ("quiver", "dim", "maps")

    def __init__(self, quiver: Quiver, dim, maps):
        self.quiver = quiver
        self.dim = check_dim_vector(quiver, dim)
        self.maps = {}
        for a in quiver.arrows():
            m = maps.get(a)
            want = (self.dim[quiver.head(a) - 1], self.dim[quiver.tail(a) - 1])
            if m is None:
                m = RatMatrix.zero(*want)
            if m.shape != want:
                raise RepresentationError(
                    f"arrow a{a}: expected shape {want}, got {m.shape}"
                )
            self.maps[a] = m

    @classmethod
    def zero(cls, quiver: Quiver) -> "Representation":
        return cls(quiver, (0,) * quiver.n, {})

    @classmethod
    def interval(cls, quiver: Quiver, i: int, j: int) -> "Representation":
        """The interval indecomposable V_{i,j}: dimension 1 on i..j."""
        if not (1 <= i <= j <= quiver.n):
            raise RepresentationError(f"bad interval ({i},{j}) on A{quiver.n}")
        dim = tuple(1 if i <= v <= j else 0 for v in quiver.vertices())
        maps = {}
        for a in quiver.arrows():
            if i <= a and a + 1 <= j:
                maps[a] = RatMatrix.identity(1)
        return cls(quiver, dim, maps)

    def dim_at(self, x: int) -> int:
        return self.dim[x - 1]

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.dim)

    def total_dim(self) -> int:
        return sum(self.dim)

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.quiver == other.quiver
            and self.dim == other.dim
            and self.maps == other.maps
        )

    def __repr__(self):
        return f"Representation({self.quiver.label()!r}, dim={self.dim})"

    def path_map(self, path, start: int) -> RatMatrix:
        """Composite matrix along an arrow path beginning at vertex start."""
        out = RatMatrix.identity(self.dim_at(start))
        x = start
        for a in path:
            if self.quiver.tail(a) != x:
                raise RepresentationError(f"path broken at arrow a{a}")
            out = self.maps[a] * out
            x = self.quiver.head(a)
        return out


def direct_sum(v: Representation, w: Representation) -> Representation:
    if v.quiver != w.quiver:
        raise RepresentationError("direct sum over different quivers")
    q = v.quiver
    dim = tuple(a + b for a, b in zip(v.dim, w.dim))
    maps = {}
    for a in q.arrows():
        hv, tv = v.maps[a].shape
        hw, tw = w.maps[a].shape
        top = hstack([v.maps[a], RatMatrix.zero(hv, tw)])
        bot = hstack([RatMatrix.zero(hw, tv), w.maps[a]])
        maps[a] = vstack([top, bot])
    return Representation(q, dim, maps)


def dualize(v: Representation) -> Representation:
    """Duality functor: spaces V(sigma x)^*, maps -V(sigma a)^T.

    The result lives on the sigma-image quiver (equal to the input quiver
    when the orientation is symmetric).
    """
    q = v.quiver
    qd = q.sigma_quiver()
    dim = tuple(v.dim_at(q.sigma_vertex(x)) for x in q.vertices())
    maps = {}
    for a in qd.arrows():
        maps[a] = -v.maps[q.sigma_arrow(a)].transpose()
    return Representation(qd, dim, maps)


def hom_basis(v: Representation, w: Representation):
    """Basis of Hom_Q(V, W): families f with f(ha) V(a) = W(a) f(ta)."""
    if v.quiver != w.quiver:
        raise RepresentationError("hom between representations of different quivers")
    q = v.quiver
    offsets = {}
    total = 0
    for x in q.vertices():
        offsets[x] = total
        total += w.dim_at(x) * v.dim_at(x)
    if total == 0:
        return []

    def pos(x, r, c):
        return offsets[x] + r * v.dim_at(x) + c

    rows = []
    for a in q.arrows():
        t, h = q.tail(a), q.head(a)
        va, wa = v.maps[a], w.maps[a]
        for p in range(w.dim_at(h)):
            for qq in range(v.dim_at(t)):
                row = [Fraction(0)] * total
                for r in range(v.dim_at(h)):
                    row[pos(h, p, r)] += va[r, qq]
                for s in range(w.dim_at(t)):
                    row[pos(t, s, qq)] -= wa[p, s]
                rows.append(row)
    if rows:
        mat = RatMatrix.from_rows(rows)
    else:
        mat = RatMatrix.zero(0, total)
    basis = []
    for col in mat.kernel_basis():
        fam = {}
        for x in q.vertices():
            r, c = w.dim_at(x), v.dim_at(x)
            fam[x] = RatMatrix(r, c, [col[offsets[x] + k, 0] for k in range(r * c)])
        basis.append(fam)
    return basis


def hom_dim(v: Representation, w: Representation) -> int:
    return len(hom_basis(v, w))


def ext_dim(v: Representation, w: Representation) -> int:
    """dim Ext^1 via the Euler identity hom - ext = <dim V, dim W>."""
    e = hom_dim(v, w) - euler_form(v.quiver, v.dim, w.dim)
    if e < 0:
        raise RuntimeError(
            f"negative ext dimension {e}: hom/euler bookkeeping is broken"
        )
    return e


def _interval_order(quiver: Quiver):
    """All intervals of the quiver, topologically ordered by Hom direction."""
    intervals = [(i, j) for i in quiver.vertices() for j in range(i, quiver.n + 1)]
    reps = {ij: Representation.interval(quiver, *ij) for ij in intervals}
    edges = {ij: set() for ij in intervals}
    for src in intervals:
        for dst in intervals:
            if src != dst and hom_dim(reps[src], reps[dst]) > 0:
                edges[src].add(dst)
    ordered = []
    remaining = set(intervals)
    while remaining:
        ready = sorted(
            ij for ij in remaining if not any(src in remaining and ij in edges[src]
                                              for src in remaining if src != ij)
        )
        if not ready:
            raise RuntimeError("interval Hom order has a cycle")
        ordered.extend(ready)
        remaining -= set(ready)
    return ordered, reps


_ORDER_CACHE: dict = {}


def fingerprint(v: Representation):
    """Multiset of interval summands of V, as a sorted tuple of (i, j).

    Uniqueness comes from Krull-Schmidt; the multiplicities solve the
    unitriangular system hom(V, V_I) = sum_J m_J hom(V_J, V_I).
    """
    key = (v.quiver.n, v.quiver.orientation)
    if key not in _ORDER_CACHE:
        _ORDER_CACHE[key] = _interval_order(v.quiver)
    ordered, reps = _ORDER_CACHE[key]
    hom_into = {ij: hom_dim(v, reps[ij]) for ij in ordered}
    pair_hom = {}
    mult = {}
    for idx, tgt in enumerate(ordered):
        acc = hom_into[tgt]
        for src in ordered[:idx]:
            m = mult[src]
            if m:
                pair = pair_hom.get((src, tgt))
                if pair is None:
                    pair = hom_dim(reps[src], reps[tgt])
                    pair_hom[(src, tgt)] = pair
                acc -= m * pair
        if acc < 0:
            raise RuntimeError("fingerprint system inconsistent")
        mult[tgt] = acc
    out = []
    for ij in sorted(mult):
        out.extend([ij] * mult[ij])
    if sum((j - i + 1) * 1 for i, j in out) != v.total_dim():
        raise RuntimeError("fingerprint does not account for the full dimension")
    return tuple(out)


def iso_class_fingerprint(v: Representation):
    return fingerprint(v)


def isomorphic(v: Representation, w: Representation) -> bool:
    return v.quiver == w.quiver and fingerprint(v) == fingerprint(w)


class SymmetricRepresentation:
    """Independent data of an orthogonal or symplectic representation.

    Stores matrices on Q1+ and the sigma-fixed arrow only.  The fixed-arrow
    block is skew-symmetric for orthogonal representations (wedge-square
    coordinates) and symmetric for symplectic ones (divided-square
    coordinates); a symplectic representation also needs an even dimension
    at the sigma-fixed vertex.
    """

    __slots__ = ("quiver", "kind", "dim", "maps")

    def __init__(self, quiver: SymmetricQuiver, kind: str, dim, maps):
        if kind not in KINDS:
            raise RepresentationError(f"kind must be one of {KINDS}")
        self.quiver = quiver
        self.kind = kind
        self.dim = check_dim_vector(quiver, dim)
        for x in quiver.vertices():
            if self.dim[x - 1] != self.dim[quiver.sigma_vertex(x) - 1]:
                raise RepresentationError(
                    f"dimension vector {self.dim} is not sigma-symmetric"
                )
        if kind == SYMPLECTIC and quiver.fixed_vertex is not None:
            if self.dim[quiver.fixed_vertex - 1] % 2 != 0:
                raise RepresentationError(
                    "symplectic representation needs an even dimension at the "
                    f"fixed vertex, got {self.dim[quiver.fixed_vertex - 1]}"
                )
        self.maps = {}
        for a in quiver.stored_arrows():
            m = maps.get(a)
            want = (self.dim[quiver.head(a) - 1], self.dim[quiver.tail(a) - 1])
            if m is None:
                m = RatMatrix.zero(*want)
            if m.shape != want:
                raise RepresentationError(
                    f"arrow a{a}: expected shape {want}, got {m.shape}"
                )
            if a == quiver.fixed_arrow:
                if kind == ORTHOGONAL and not m.is_skew():
                    raise RepresentationError(
                        "orthogonal representation needs a skew-symmetric "
                        f"block on the fixed arrow a{a}"
                    )
                if kind == SYMPLECTIC and not m.is_symmetric():
                    raise RepresentationError(
                        "symplectic representation needs a symmetric block "
                        f"on the fixed arrow a{a}"
                    )
            self.maps[a] = m

    def dim_at(self, x: int) -> int:
        return self.dim[x - 1]

    def fixed_form(self) -> RatMatrix | None:
        """Gram matrix on the sigma-fixed vertex, if there is one."""
        x = self.quiver.fixed_vertex
        if x is None:
            return None
        d = self.dim_at(x)
        if self.kind == ORTHOGONAL:
            return RatMatrix.identity(d)
        return symplectic_form(d)

    def unfold(self) -> Representation:
        """Full representation with sigma-image maps filled in.

        For a: x -> y inside Q0+, V(sigma a) = -V(a)^T; when an endpoint is
        the fixed vertex the Gram matrix G there corrects the formula:
        head fixed gives -V(a)^T G, tail fixed gives -G^{-1} V(a)^T.
        """
        q = self.quiver
        g = self.fixed_form()
        maps = dict(self.maps)
        for a in q.q1_plus():
            sa = q.sigma_arrow(a)
            t, h = q.tail(a), q.head(a)
            m = self.maps[a]
            if h == q.fixed_vertex:
                maps[sa] = -(m.transpose() * g)
            elif t == q.fixed_vertex:
                maps[sa] = -(g.inverse() * m.transpose())
            else:
                maps[sa] = -m.transpose()
        return Representation(q, self.dim, maps)

    def __eq__(self, other):
        return (
            isinstance(other, SymmetricRepresentation)
            and self.quiver == other.quiver
            and self.kind == other.kind
            and self.dim == other.dim
            and self.maps == other.maps
        )

    def __repr__(self):
        return (
            f"SymmetricRepresentation({self.quiver.label()!r}, {self.kind}, "
            f"dim={self.dim})"
        )


def random_matrix(rng, rows: int, cols: int, bound: int = 9) -> RatMatrix:
    return RatMatrix(rows, cols, [rng.fraction(bound) for _ in range(rows * cols)])


def random_representation(quiver: Quiver, dim, rng, bound: int = 9) -> Representation:
    dim = check_dim_vector(quiver, dim)
    maps = {
        a: random_matrix(rng, dim[quiver.head(a) - 1], dim[quiver.tail(a) - 1], bound)
        for a in quiver.arrows()
    }
    return Representation(quiver, dim, maps)


def random_symmetric_representation(
    quiver: SymmetricQuiver, kind: str, dim, rng, bound: int = 9
) -> SymmetricRepresentation:
    dim = check_dim_vector(quiver, dim)
    maps = {}
    for a in quiver.q1_plus():
        maps[a] = random_matrix(
            rng, dim[quiver.head(a) - 1], dim[quiver.tail(a) - 1], bound
        )
    fa = quiver.fixed_arrow
    if fa is not None:
        d = dim[quiver.head(fa) - 1]
        m = random_matrix(rng, d, d, bound)
        if kind == ORTHOGONAL:
            m = m - m.transpose()
        else:
            m = m + m.transpose()
        maps[fa] = m
    return SymmetricRepresentation(quiver, kind, dim, maps)
