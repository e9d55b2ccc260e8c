"""BGP reflection functors, symmetric-pair reflections, Coxeter and duality.

Kernel and cokernel bases are canonicalized through reduced row echelon
form, so every functor is deterministic: reflecting the same representation
twice produces identical matrices, and isomorphism statements in tests go
through interval fingerprints rather than matrix equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import RatMatrix, hstack, vstack
from .quiver import Quiver, QuiverError, SymmetricQuiver
from .rep import Representation, dualize, fingerprint


@dataclass
class ReflectionResult:
    representation: Representation
    quiver: Quiver


def reflect_plus(v: Representation, x: int) -> ReflectionResult:
    """C_x^+ at a sink x: replace V(x) by the kernel of the assembled map."""
    q = v.quiver
    if not q.is_sink(x):
        raise QuiverError(f"vertex {x} is not a sink of {q.label()}")
    arrows_in = q.arrows_into(x)
    blocks = [v.maps[a] for a in arrows_in]
    tails = [q.tail(a) for a in arrows_in]
    assembled = hstack(blocks) if blocks else RatMatrix.zero(v.dim_at(x), 0)
    kernel = assembled.kernel_matrix()
    new_dim = list(v.dim)
    new_dim[x - 1] = kernel.cols
    new_q = q.reflect_at(x)
    maps = {a: m for a, m in v.maps.items() if a not in arrows_in}
    offset = 0
    for a, t in zip(arrows_in, tails):
        d = v.dim_at(t)
        rows = [kernel.row(offset + i) for i in range(d)]
        block = RatMatrix(d, kernel.cols, [e for r in rows for e in r])
        maps[a] = block
        offset += d
    return ReflectionResult(Representation(new_q, new_dim, maps), new_q)


def reflect_minus(v: Representation, x: int) -> ReflectionResult:
    """C_x^- at a source x: replace V(x) by the canonical cokernel."""
    q = v.quiver
    if not q.is_source(x):
        raise QuiverError(f"vertex {x} is not a source of {q.label()}")
    arrows_out = q.arrows_out_of(x)
    blocks = [v.maps[a] for a in arrows_out]
    heads = [q.head(a) for a in arrows_out]
    assembled = vstack(blocks) if blocks else RatMatrix.zero(0, v.dim_at(x))
    # cokernel projection: rows spanning the left null space, RREF-canonical
    left_null = assembled.transpose().kernel_matrix().transpose()
    new_dim = list(v.dim)
    new_dim[x - 1] = left_null.rows
    new_q = q.reflect_at(x)
    maps = {a: m for a, m in v.maps.items() if a not in arrows_out}
    offset = 0
    for a, h in zip(arrows_out, heads):
        d = v.dim_at(h)
        cols = [[left_null[i, offset + j] for j in range(d)] for i in range(left_null.rows)]
        maps[a] = RatMatrix(left_null.rows, d, [e for r in cols for e in r])
        offset += d
    return ReflectionResult(Representation(new_q, new_dim, maps), new_q)


def reflect_pair_plus(v: Representation, x: int) -> ReflectionResult:
    """C^+_{(x, sigma x)} = C^-_{sigma x} C^+_x at an admissible sink x."""
    q = _symmetric(v.quiver)
    if not (q.is_admissible(x) and q.is_sink(x)):
        raise QuiverError(f"vertex {x} is not an admissible sink of {q.label()}")
    step = reflect_plus(v, x)
    out = reflect_minus(step.representation, q.sigma_vertex(x))
    sym = SymmetricQuiver(out.quiver.n, out.quiver.orientation)
    return ReflectionResult(
        Representation(sym, out.representation.dim, out.representation.maps), sym
    )


def reflect_pair_minus(v: Representation, x: int) -> ReflectionResult:
    """C^-_{(x, sigma x)} = C^-_x C^+_{sigma x} at an admissible source x."""
    q = _symmetric(v.quiver)
    if not (q.is_admissible(x) and q.is_source(x)):
        raise QuiverError(f"vertex {x} is not an admissible source of {q.label()}")
    step = reflect_plus(v, q.sigma_vertex(x))
    out = reflect_minus(step.representation, x)
    sym = SymmetricQuiver(out.quiver.n, out.quiver.orientation)
    return ReflectionResult(
        Representation(sym, out.representation.dim, out.representation.maps), sym
    )


def _symmetric(q: Quiver) -> SymmetricQuiver:
    if isinstance(q, SymmetricQuiver):
        return q
    return SymmetricQuiver(q.n, q.orientation)


def sink_order(quiver: Quiver):
    """Admissible vertex ordering for C^+: each vertex a sink when reached."""
    order = []
    q = quiver
    remaining = set(quiver.vertices())
    while remaining:
        x = min(v for v in remaining if q.is_sink(v) or not q.arrows_at(v))
        order.append(x)
        if q.arrows_at(x):
            q = q.reflect_at(x)
        remaining.discard(x)
    return order


def coxeter_plus(v: Representation, order=None) -> Representation:
    """Coxeter functor C^+: composite of C^+_x over an admissible sink order."""
    if order is None:
        order = sink_order(v.quiver)
    cur = v
    for x in order:
        if cur.quiver.arrows_at(x):
            cur = reflect_plus(cur, x).representation
    if cur.quiver.orientation != v.quiver.orientation:
        raise RuntimeError("Coxeter composite did not return to the input quiver")
    return Representation(v.quiver, cur.dim, cur.maps)


def source_order(quiver: Quiver):
    order = []
    q = quiver
    remaining = set(quiver.vertices())
    while remaining:
        x = min(v for v in remaining if q.is_source(v) or not q.arrows_at(v))
        order.append(x)
        if q.arrows_at(x):
            q = q.reflect_at(x)
        remaining.discard(x)
    return order


def coxeter_minus(v: Representation, order=None) -> Representation:
    """Coxeter functor C^-: composite of C^-_x over an admissible source order."""
    if order is None:
        order = source_order(v.quiver)
    cur = v
    for x in order:
        if cur.quiver.arrows_at(x):
            cur = reflect_minus(cur, x).representation
    if cur.quiver.orientation != v.quiver.orientation:
        raise RuntimeError("Coxeter composite did not return to the input quiver")
    return Representation(v.quiver, cur.dim, cur.maps)


def coxeter_dual(v: Representation) -> Representation:
    """C^- after dualizing; fixed points are exactly the sigma-selfdual kind."""
    return coxeter_minus(dualize(v))


def is_coxeter_selfdual(v: Representation) -> bool:
    """Whether V = C^- nabla V up to isomorphism (interval fingerprints)."""
    return fingerprint(coxeter_dual(v)) == fingerprint(v)
