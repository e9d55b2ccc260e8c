"""Projective resolutions and the determinantal/Pfaffian semi-invariants.

The canonical resolution of V has P1 = sum_a V(ta) (x) P_{ha} and
P0 = sum_x V(x) (x) P_x with differential v(x)e_{ha} |-> V(a)v(x)e_{ha} - v(x)a.
The minimal resolution is assembled from the interval decomposition: each
interval summand contributes projectives at the +1 positions of its Euler
weight and relations at the -1 positions, with paths pairing each sink to
its neighbouring sources (+ on the left source, - on the right one).

Applying Hom_Q(-, W) to the differential yields a matrix that is square
exactly when <dim V, dim W> = 0; its determinant is the Schofield
semi-invariant.  When V is fixed by C^- nabla and the parity of the chain
matches the kind of W, reversing the column blocks of the minimal-resolution
matrix produces a literally skew-symmetric matrix whose Pfaffian is pf^V.
Skewness is verified structurally before any Pfaffian is taken.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import RatMatrix, SkewSymmetryError, block_matrix, kron
from .poly import CoordinateSystem, PolyMatrix, Polynomial
from .quiver import Quiver, SymmetricQuiver, euler_form, unit_vector
from .rep import (
    ORTHOGONAL,
    SYMPLECTIC,
    Representation,
    RepresentationError,
    SymmetricRepresentation,
    fingerprint,
)


class EulerFormError(ValueError):
    """Hom matrix requested where <dim V, dim W> != 0."""


class ParityError(ValueError):
    """Pfaffian semi-invariant requested with mismatched chain parity."""


class SelfdualityError(ValueError):
    """Pfaffian semi-invariant requested for V not fixed by C^- nabla."""


@dataclass(frozen=True)
class Slot:
    vertex: int
    mult: int
    tag: tuple = ()


@dataclass
class ProjResolution:
    """0 -> P1 -> P0 -> V -> 0 with a path-valued block differential.

    blocks[(h, k)] holds the differential component from P1 slot k into P0
    slot h as a list of (coefficient matrix, arrow path) pairs; the path
    runs from the slot-h vertex to the slot-k vertex.
    """

    quiver: Quiver
    dim_v: tuple
    p0: list
    p1: list
    blocks: dict
    projective_intervals: list = field(default_factory=list)

    def p0_multiplicities(self) -> dict:
        out: dict = {}
        for s in self.p0:
            out[s.vertex] = out.get(s.vertex, 0) + s.mult
        return out

    def p1_multiplicities(self) -> dict:
        out: dict = {}
        for s in self.p1:
            out[s.vertex] = out.get(s.vertex, 0) + s.mult
        return out


def canonical_resolution(v: Representation) -> ProjResolution:
    q = v.quiver
    p0 = [Slot(x, v.dim_at(x)) for x in q.vertices() if v.dim_at(x) > 0]
    p0_index = {s.vertex: i for i, s in enumerate(p0)}
    p1 = []
    blocks: dict = {}
    for a in q.arrows():
        t, h = q.tail(a), q.head(a)
        if v.dim_at(t) == 0:
            continue
        k = len(p1)
        p1.append(Slot(h, v.dim_at(t), tag=("arrow", a)))
        if v.dim_at(h) > 0:
            blocks.setdefault((p0_index[h], k), []).append((v.maps[a], ()))
        blocks.setdefault((p0_index[t], k), []).append(
            (-RatMatrix.identity(v.dim_at(t)), (a,))
        )
    return ProjResolution(q, v.dim, p0, p1, blocks)


def interval_weight_pattern(quiver: Quiver, i: int, j: int):
    """Sources (+1) and sinks (-1) of the Euler weight of the interval [i, j]."""
    sources, sinks = [], []
    for y in quiver.vertices():
        val = 1 if i <= y <= j else 0
        for a in quiver.arrows_into(y):
            if i <= quiver.tail(a) <= j:
                val -= 1
        if val == 1:
            sources.append(y)
        elif val == -1:
            sinks.append(y)
        elif val != 0:
            raise RuntimeError(f"interval weight {val} out of range at vertex {y}")
    return sources, sinks


def minimal_resolution(v: Representation) -> ProjResolution:
    """Minimal projective resolution from the interval decomposition of V."""
    q = v.quiver
    counts: dict = {}
    for ij in fingerprint(v):
        counts[ij] = counts.get(ij, 0) + 1
    p0_items = []
    p1_items = []
    projective = []
    pieces = []
    for idx, (ij, mult) in enumerate(sorted(counts.items())):
        sources, sinks = interval_weight_pattern(q, *ij)
        if not sinks:
            projective.append(ij)
        pieces.append((idx, ij, mult, sources, sinks))
        for s in sources:
            p0_items.append((s, idx, mult))
        for t in sinks:
            p1_items.append((t, idx, mult))
    p0_items.sort()
    p1_items.sort()
    p0 = [Slot(vx, m, tag=("interval", pieces[idx][1])) for vx, idx, m in p0_items]
    p1 = [Slot(vx, m, tag=("interval", pieces[idx][1])) for vx, idx, m in p1_items]
    p0_pos = {(vx, idx): h for h, (vx, idx, _) in enumerate(p0_items)}
    p1_pos = {(vx, idx): k for k, (vx, idx, _) in enumerate(p1_items)}
    blocks: dict = {}
    for idx, ij, mult, sources, sinks in pieces:
        merged = sorted(sources + sinks)
        eye = RatMatrix.identity(mult)
        for t in sinks:
            pos = merged.index(t)
            k = p1_pos[(t, idx)]
            if pos > 0 and merged[pos - 1] in sources:
                s = merged[pos - 1]
                path = q.oriented_path(s, t)
                if path is None:
                    raise RuntimeError(f"no oriented path {s} -> {t} in {q.label()}")
                blocks.setdefault((p0_pos[(s, idx)], k), []).append((eye, path))
            if pos + 1 < len(merged) and merged[pos + 1] in sources:
                s = merged[pos + 1]
                path = q.oriented_path(s, t)
                if path is None:
                    raise RuntimeError(f"no oriented path {s} -> {t} in {q.label()}")
                blocks.setdefault((p0_pos[(s, idx)], k), []).append((-eye, path))
    return ProjResolution(q, v.dim, p0, p1, blocks, projective)


def _assemble(res: ProjResolution, beta, path_eval, kron_eval, block_zero, glue):
    rows = [s.mult * beta[s.vertex - 1] for s in res.p1]
    cols = [s.mult * beta[s.vertex - 1] for s in res.p0]
    grid = []
    for k, s1 in enumerate(res.p1):
        row = []
        for h, s0 in enumerate(res.p0):
            total = None
            for coeff, path in res.blocks.get((h, k), []):
                piece = kron_eval(path_eval(path, s0.vertex), coeff.transpose())
                total = piece if total is None else glue(total, piece)
            if total is None:
                total = block_zero(rows[k], cols[h])
            row.append(total)
        grid.append(row)
    return grid, rows, cols


def hom_matrix(res: ProjResolution, w: Representation) -> RatMatrix:
    """The matrix of Hom_Q(d^V, W); square iff <dim V, dim W> = 0."""
    if w.quiver.n != res.quiver.n or w.quiver.orientation != res.quiver.orientation:
        raise RepresentationError("representation lives on a different quiver")
    e = euler_form(res.quiver, res.dim_v, w.dim)
    if e != 0:
        raise EulerFormError(
            f"hom matrix is not square: <{res.dim_v}, {w.dim}> = {e}"
        )
    grid, rows, cols = _assemble(
        res,
        w.dim,
        lambda path, start: w.path_map(path, start),
        lambda wp, mt: kron(wp, mt),
        RatMatrix.zero,
        lambda a, b: a + b,
    )
    if not rows and not cols:
        return RatMatrix.zero(0, 0)
    if not rows or not cols:
        # one side empty: squareness already guaranteed zero total dimension
        return RatMatrix.zero(sum(rows), sum(cols))
    return block_matrix(grid)


def schofield_eval(v: Representation, w: Representation, resolution: str = "minimal") -> Fraction:
    """c^V(W) = det Hom_Q(d^V, W) over the chosen resolution."""
    if resolution == "minimal":
        res = minimal_resolution(v)
    elif resolution == "canonical":
        res = canonical_resolution(v)
    else:
        raise ValueError(f"unknown resolution {resolution!r}")
    return hom_matrix(res, w).det()


def chain_parity_kind(n: int) -> str:
    """Which kind of symmetric representation makes Hom(d_min, -) skew."""
    return ORTHOGONAL if n % 2 == 0 else SYMPLECTIC


def _reversed_hom_matrix(res: ProjResolution, w: Representation) -> RatMatrix:
    """hom_matrix with P0 column blocks in reversed order."""
    e = euler_form(res.quiver, res.dim_v, w.dim)
    if e != 0:
        raise EulerFormError(
            f"hom matrix is not square: <{res.dim_v}, {w.dim}> = {e}"
        )
    grid, rows, cols = _assemble(
        res,
        w.dim,
        lambda path, start: w.path_map(path, start),
        lambda wp, mt: kron(wp, mt),
        RatMatrix.zero,
        lambda a, b: a + b,
    )
    if not rows or not cols:
        return RatMatrix.zero(sum(rows), sum(cols))
    return block_matrix([list(reversed(row)) for row in grid])


def pfaffian_eval(v: Representation, sw: SymmetricRepresentation) -> Fraction:
    """pf^V(W) = Pf of the (structurally verified) skew Hom(d_min^V, W)."""
    from .functors import is_coxeter_selfdual

    q = sw.quiver
    if v.quiver.orientation != q.orientation or v.quiver.n != q.n:
        raise RepresentationError("V and W live on different quivers")
    want = chain_parity_kind(q.n)
    if sw.kind != want:
        raise ParityError(
            f"A{q.n} admits Pfaffian semi-invariants on {want} representations, "
            f"got {sw.kind}"
        )
    if not is_coxeter_selfdual(v):
        raise SelfdualityError("pf^V needs V isomorphic to C^- nabla V")
    res = minimal_resolution(v)
    mat = _reversed_hom_matrix(res, sw.unfold())
    mat.check_skew()
    return mat.pfaffian()


def weight_of(v: Representation, mode: str = "corrected"):
    """The weight <dim V, -> of c^V, optionally epsilon-corrected.

    Corrected mode zeroes the entries at sigma-fixed vertices, matching the
    character lattice of the acting group (fixed-vertex factors are SO/Sp
    and contribute no determinant characters).
    """
    q = v.quiver
    chi = [
        Fraction(euler_form(q, v.dim, unit_vector(q, y))) for y in q.vertices()
    ]
    if mode == "plain":
        return tuple(chi)
    if mode != "corrected":
        raise ValueError(f"unknown weight mode {mode!r}")
    if q.n % 2 == 1:
        chi[(q.n + 1) // 2 - 1] = Fraction(0)
    return tuple(chi)


def weight_is_symmetric(quiver: Quiver, weight) -> bool:
    return all(
        weight[quiver.sigma_vertex(x) - 1] == -weight[x - 1]
        for x in quiver.vertices()
    )


def torus_exponents(quiver: SymmetricQuiver, weight):
    """Exponents e_x with f(g.W) = prod det(g_x)^{e_x} f(W) over x in Q0+.

    For the extended group with g_{sigma x} = (g_x^{-1})^T the paper weight
    chi acts through det(g_x)^{chi(sigma x) - chi(x)}.
    """
    out = []
    for x in quiver.q0_plus():
        e = weight[quiver.sigma_vertex(x) - 1] - weight[x - 1]
        if Fraction(e).denominator != 1:
            raise ValueError(f"non-integral torus exponent {e} at vertex {x}")
        out.append(int(e))
    return tuple(out)


# -- symbolic evaluation ------------------------------------------------------


def _poly_kron(p: PolyMatrix, m: RatMatrix) -> PolyMatrix:
    rows, cols = p.rows * m.rows, p.cols * m.cols
    out = PolyMatrix.zero(rows, cols)
    for i in range(p.rows):
        for j in range(p.cols):
            for a in range(m.rows):
                for b in range(m.cols):
                    out.data[i * m.rows + a][j * m.cols + b] = p.data[i][j].scale(m[a, b])
    return out


def symbolic_hom_matrix(
    res: ProjResolution, coords: CoordinateSystem, reverse: bool = False
) -> PolyMatrix:
    beta = coords.beta
    e = euler_form(res.quiver, res.dim_v, beta)
    if e != 0:
        raise EulerFormError(f"hom matrix is not square: <{res.dim_v}, {beta}> = {e}")
    maps = coords.symbolic_maps()

    def path_eval(path, start):
        out = PolyMatrix.identity(beta[start - 1])
        for a in path:
            out = maps[a] * out
        return out

    grid, rows, cols = _assemble(
        res,
        beta,
        path_eval,
        _poly_kron,
        PolyMatrix.zero,
        lambda a, b: _poly_add(a, b),
    )
    if reverse:
        grid = [list(reversed(row)) for row in grid]
    return _poly_block(grid, rows, cols if not reverse else list(reversed(cols)))


def _poly_add(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    out = PolyMatrix.zero(a.rows, a.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            out.data[i][j] = a.data[i][j] + b.data[i][j]
    return out


def _poly_block(grid, rows, cols) -> PolyMatrix:
    total_r, total_c = sum(rows), sum(cols)
    out = PolyMatrix.zero(total_r, total_c)
    r0 = 0
    for k, row in enumerate(grid):
        c0 = 0
        for h, blockm in enumerate(row):
            for i in range(blockm.rows):
                for j in range(blockm.cols):
                    out.data[r0 + i][c0 + j] = blockm.data[i][j]
            c0 += cols[h]
        r0 += rows[k]
    return out


def symbolic_det_interval(coords: CoordinateSystem, interval) -> Polynomial:
    j, i = interval
    v = Representation.interval(coords.quiver, j, i)
    res = minimal_resolution(v)
    return symbolic_hom_matrix(res, coords).det()


def symbolic_pf_interval(coords: CoordinateSystem, interval) -> Polynomial:
    j, i = interval
    want = chain_parity_kind(coords.quiver.n)
    if coords.kind != want:
        raise ParityError(
            f"A{coords.quiver.n} admits Pfaffian semi-invariants on {want} "
            f"representations, got {coords.kind}"
        )
    v = Representation.interval(coords.quiver, j, i)
    res = minimal_resolution(v)
    mat = symbolic_hom_matrix(res, coords, reverse=True)
    if not mat.is_skew():
        raise SkewSymmetryError(
            f"symbolic Hom(d_min^V, -) for interval {interval} is not skew"
        )
    return mat.pfaffian()
