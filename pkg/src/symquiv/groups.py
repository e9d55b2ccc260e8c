"""Rational points of the acting groups and their action on representations.

Group elements are sampled exactly: SL via products of elementary shears,
SO and Sp via Cayley transforms of random rational skew/Hamiltonian
matrices (dense rational points, group membership verified exactly after
construction).  A GroupElement stores one block per Q0+ vertex plus one per
sigma-fixed vertex; blocks at sigma-negative vertices are induced by
g_{sigma x} = (g_x^{-1})^T and never stored.

For weight checks the sampler can include torus directions (general GL
blocks at Q0+ vertices); honest SL x SO/Sp elements make every
semi-invariant literally invariant.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import RatMatrix, SingularMatrixError, symplectic_form
from .quiver import SymmetricQuiver
from .rep import ORTHOGONAL, SYMPLECTIC, RepresentationError, SymmetricRepresentation
from .rng import SplitMix64


class GroupSampleError(RuntimeError):
    """Sampling failed repeatedly (probabilistically unreachable)."""


def sample_sl(n: int, rng: SplitMix64) -> RatMatrix:
    """Product of 2n elementary shears; determinant exactly 1."""
    m = RatMatrix.identity(n)
    if n <= 1:
        return m
    for _ in range(2 * n):
        i = rng.randint(0, n - 1)
        j = rng.randint(0, n - 2)
        if j >= i:
            j += 1
        r = rng.fraction(9)
        shear = RatMatrix(
            n,
            n,
            [
                1 if a == b else (r if (a, b) == (i, j) else 0)
                for a in range(n)
                for b in range(n)
            ],
        )
        m = m * shear
    return m


def _cayley(s: RatMatrix) -> RatMatrix:
    n = s.rows
    eye = RatMatrix.identity(n)
    return (eye - s) * (eye + s).inverse()


def sample_so(n: int, rng: SplitMix64, attempts: int = 100) -> RatMatrix:
    """Cayley transform of a random rational skew matrix; in SO(n) exactly."""
    if n == 0:
        return RatMatrix.zero(0, 0)
    for _ in range(attempts):
        entries = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                r = rng.fraction(9)
                entries[i][j] = r
                entries[j][i] = -r
        s = RatMatrix.from_rows(entries)
        try:
            g = _cayley(s)
        except SingularMatrixError:
            continue
        assert (g.transpose() * g) == RatMatrix.identity(n)
        return g
    raise GroupSampleError("could not sample an SO element")


def sample_sp(n: int, rng: SplitMix64, attempts: int = 100) -> RatMatrix:
    """Cayley transform of a random Hamiltonian matrix; g^T J g = J exactly."""
    if n % 2 != 0:
        raise RepresentationError(f"Sp needs even size, got {n}")
    if n == 0:
        return RatMatrix.zero(0, 0)
    jform = symplectic_form(n)
    jinv = jform.inverse()
    for _ in range(attempts):
        entries = [[rng.fraction(9) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                entries[j][i] = entries[i][j]
        sym = RatMatrix.from_rows(entries)
        h = jinv * sym  # J h is symmetric, i.e. h is Hamiltonian
        try:
            g = _cayley(h)
        except SingularMatrixError:
            continue
        assert (g.transpose() * jform * g) == jform
        return g
    raise GroupSampleError("could not sample an Sp element")


def sample_gl(n: int, rng: SplitMix64) -> RatMatrix:
    """Invertible rational matrix with generic determinant (torus x shears)."""
    diag = RatMatrix.diagonal([rng.fraction(9, nonzero=True) for _ in range(n)])
    return sample_sl(n, rng) * diag


class GroupElement:
    """One block per Q0+ vertex, and an isometry block per fixed vertex."""

    __slots__ = ("quiver", "kind", "components")

    def __init__(self, quiver: SymmetricQuiver, kind: str, components: dict):
        self.quiver = quiver
        self.kind = kind
        self.components = dict(components)
        for x, g in self.components.items():
            if g.det() == 0:
                raise RepresentationError(f"singular block at vertex {x}")
        fx = quiver.fixed_vertex
        if fx is not None and fx in self.components:
            g = self.components[fx]
            if kind == ORTHOGONAL:
                ok = g.transpose() * g == RatMatrix.identity(g.rows) and g.det() == 1
            else:
                j = symplectic_form(g.rows)
                ok = g.transpose() * j * g == j
            if not ok:
                raise RepresentationError(
                    f"fixed-vertex block at {fx} is not in the isometry group"
                )

    def block(self, x: int) -> RatMatrix:
        """Block at any vertex; sigma-negative blocks via (g_x^{-1})^T."""
        if x in self.components:
            return self.components[x]
        sx = self.quiver.sigma_vertex(x)
        return self.components[sx].inverse().transpose()

    def compose(self, other: "GroupElement") -> "GroupElement":
        if self.quiver != other.quiver or self.kind != other.kind:
            raise RepresentationError("composing group elements of different type")
        comps = {
            x: self.components[x] * other.components[x] for x in self.components
        }
        return GroupElement(self.quiver, self.kind, comps)


def sample_group_element(
    quiver: SymmetricQuiver, beta, kind: str, rng: SplitMix64, torus: bool = False
) -> GroupElement:
    """Element of SO(Q, beta) / SSp(Q, beta); torus=True widens SL to GL."""
    beta = tuple(beta)
    comps = {}
    for x in quiver.q0_plus():
        d = beta[x - 1]
        comps[x] = sample_gl(d, rng) if torus else sample_sl(d, rng)
    fx = quiver.fixed_vertex
    if fx is not None:
        d = beta[fx - 1]
        if kind == ORTHOGONAL:
            comps[fx] = sample_so(d, rng)
        else:
            comps[fx] = sample_sp(d, rng)
    return GroupElement(quiver, kind, comps)


def act(g: GroupElement, sw: SymmetricRepresentation) -> SymmetricRepresentation:
    """g . W = { g_{ha} W(a) g_{ta}^{-1} } on the stored arrows.

    The fixed-arrow block transforms by congruence with (g_x^{-1})^T, which
    preserves its symmetry type exactly.
    """
    q = sw.quiver
    if g.quiver != q or g.kind != sw.kind:
        raise RepresentationError("group element does not match representation")
    maps = {}
    for a in q.stored_arrows():
        t, h = q.tail(a), q.head(a)
        maps[a] = g.block(h) * sw.maps[a] * g.block(t).inverse()
    return SymmetricRepresentation(q, sw.kind, sw.dim, maps)


def character_value(g: GroupElement, weight) -> Fraction:
    """prod over Q0+ of det(g_x)^{chi(x)} for an integer weight vector."""
    total = Fraction(1)
    for x in g.quiver.q0_plus():
        chi = weight[x - 1]
        if Fraction(chi).denominator != 1:
            raise ValueError(f"character needs integer weight, got {chi} at {x}")
        total *= g.components[x].det() ** int(chi)
    return total


def torus_factor(g: GroupElement, exponents) -> Fraction:
    """prod det(g_x)^{e_x} over Q0+ for descriptor transformation exponents."""
    total = Fraction(1)
    for x, e in zip(g.quiver.q0_plus(), exponents):
        total *= g.components[x].det() ** int(e)
    return total
