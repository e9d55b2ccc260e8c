"""Type-A quivers and their arrow-reversing involution.

Vertices are numbered 1..n left to right; arrow i joins vertices i and i+1
and is oriented by a direction character: '>' means i -> i+1, '<' means
i+1 -> i.  The involution is sigma(i) = n+1-i on vertices and
sigma(a_i) = a_{n-i} on arrows, which forces orientation[i] == orientation[n-i]
for a symmetric quiver (the middle arrow of an even chain is sigma-fixed and
unconstrained).

Plain ``Quiver`` carries no symmetry requirement: reflection functors at a
single vertex step through non-symmetric orientations, so representations
live over plain quivers and ``SymmetricQuiver`` adds the validation layer.
"""

from __future__ import annotations

RIGHT = ">"
LEFT = "<"


class QuiverError(ValueError):
    """Invalid quiver data."""


class OrientationPathError(RuntimeError):
    """No admissible reflection sequence reaches the target orientation."""


class Quiver:
    """A type-A quiver: n vertices on a line, an orientation per arrow."""

    __slots__ = ("n", "orientation")

    def __init__(self, n: int, orientation):
        orientation = tuple(orientation)
        if n < 1:
            raise QuiverError("need at least one vertex")
        if len(orientation) != n - 1:
            raise QuiverError(f"A{n} needs {n - 1} arrow directions, got {len(orientation)}")
        if any(d not in (RIGHT, LEFT) for d in orientation):
            raise QuiverError(f"directions must be '>' or '<': {orientation}")
        self.n = n
        self.orientation = orientation

    # arrows are indexed 1..n-1

    def arrows(self):
        return range(1, self.n)

    def vertices(self):
        return range(1, self.n + 1)

    def tail(self, a: int) -> int:
        return a if self.orientation[a - 1] == RIGHT else a + 1

    def head(self, a: int) -> int:
        return a + 1 if self.orientation[a - 1] == RIGHT else a

    def arrows_at(self, x: int):
        return [a for a in self.arrows() if a == x or a + 1 == x]

    def arrows_into(self, x: int):
        return [a for a in self.arrows() if self.head(a) == x]

    def arrows_out_of(self, x: int):
        return [a for a in self.arrows() if self.tail(a) == x]

    def is_sink(self, x: int) -> bool:
        at = self.arrows_at(x)
        return bool(at) and all(self.head(a) == x for a in at)

    def is_source(self, x: int) -> bool:
        at = self.arrows_at(x)
        return bool(at) and all(self.tail(a) == x for a in at)

    def sinks(self):
        return [x for x in self.vertices() if self.is_sink(x)]

    def sources(self):
        return [x for x in self.vertices() if self.is_source(x)]

    def is_equioriented(self) -> bool:
        return all(d == RIGHT for d in self.orientation)

    def reflect_at(self, x: int) -> "Quiver":
        """Reverse all arrows incident to x (plain BGP reflection c_x)."""
        if not (self.is_sink(x) or self.is_source(x)):
            raise QuiverError(f"vertex {x} is neither a sink nor a source")
        flipped = list(self.orientation)
        for a in self.arrows_at(x):
            flipped[a - 1] = RIGHT if flipped[a - 1] == LEFT else LEFT
        return Quiver(self.n, flipped)

    def sigma_vertex(self, x: int) -> int:
        return self.n + 1 - x

    def sigma_arrow(self, a: int) -> int:
        return self.n - a

    def sigma_quiver(self) -> "Quiver":
        """The quiver carrying sigma-images of arrows (duality target)."""
        n = self.n
        return Quiver(n, tuple(self.orientation[n - 1 - a] for a in range(1, n)))

    def oriented_path(self, u: int, v: int):
        """Arrow sequence from u to v following orientations, or None.

        The trivial path is (); otherwise every arrow strictly between u and
        v must point from u toward v.
        """
        if u == v:
            return ()
        step = 1 if v > u else -1
        path = []
        x = u
        while x != v:
            a = x if step == 1 else x - 1
            if self.tail(a) != x:
                return None
            path.append(a)
            x += step
        return tuple(path)

    def label(self) -> str:
        return f"A{self.n}:{''.join(self.orientation)}"

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.n == other.n
            and self.orientation == other.orientation
        )

    def __hash__(self):
        return hash((self.n, self.orientation))

    def __repr__(self):
        return f"{type(self).__name__}({self.label()!r})"


class SymmetricQuiver(Quiver):
    """A type-A quiver whose orientation is compatible with sigma."""

    __slots__ = ()

    def __init__(self, n: int, orientation):
        super().__init__(n, orientation)
        for a in self.arrows():
            partner = self.sigma_arrow(a)
            if a == partner:
                continue  # sigma-fixed arrow, automatically compatible
            if self.orientation[a - 1] != self.orientation[partner - 1]:
                raise QuiverError(
                    f"sigma-incompatible orientation: arrow a{a} is "
                    f"{self.orientation[a - 1]} but a{partner} is "
                    f"{self.orientation[partner - 1]}"
                )

    # -- vertex / arrow partitions -----------------------------------------

    @property
    def fixed_vertex(self):
        return (self.n + 1) // 2 if self.n % 2 == 1 else None

    @property
    def fixed_arrow(self):
        return self.n // 2 if self.n % 2 == 0 else None

    def q0_plus(self):
        return list(range(1, self.n // 2 + 1))

    def q0_sigma(self):
        return [self.fixed_vertex] if self.n % 2 == 1 else []

    def q0_minus(self):
        return [x for x in self.vertices() if x > (self.n + 1) // 2]

    def q1_plus(self):
        return [a for a in self.arrows() if 2 * a < self.n]

    def q1_sigma(self):
        return [self.fixed_arrow] if self.n % 2 == 0 else []

    def q1_minus(self):
        return [a for a in self.arrows() if 2 * a > self.n]

    def stored_arrows(self):
        """Arrows carrying independent data: Q1+ then the fixed arrow."""
        return self.q1_plus() + self.q1_sigma()

    # -- admissible reflections ----------------------------------------------

    def admissible_pairs(self):
        """Admissible sink-source pairs (x, sigma(x)), listed with x < sigma(x).

        A sink (or source) x is admissible when no arrow joins x and
        sigma(x); on a line that means x and sigma(x) are not adjacent.
        """
        pairs = []
        for x in self.vertices():
            sx = self.sigma_vertex(x)
            if x >= sx:
                continue
            if abs(x - sx) == 1:
                continue
            if self.is_sink(x) or self.is_source(x):
                pairs.append((x, sx))
        return pairs

    def is_admissible(self, x: int) -> bool:
        sx = self.sigma_vertex(x)
        return (
            x != sx
            and abs(x - sx) != 1
            and (self.is_sink(x) or self.is_source(x))
        )

    def reflect_pair(self, x: int) -> "SymmetricQuiver":
        """Reflect at the admissible pair containing x; stays symmetric."""
        if not self.is_admissible(x):
            raise QuiverError(f"vertex {x} is not part of an admissible pair")
        sx = self.sigma_vertex(x)
        step = self.reflect_at(x).reflect_at(sx)
        return SymmetricQuiver(step.n, step.orientation)


def parse_quiver(spec: str) -> SymmetricQuiver:
    """Parse "A<n>:<dirs>" with dirs in {>,<}^{n-1} into a SymmetricQuiver."""
    spec = spec.strip()
    if not spec.startswith("A") or ":" not in spec:
        raise QuiverError(f"expected 'A<n>:<dirs>', got {spec!r}")
    head, dirs = spec.split(":", 1)
    try:
        n = int(head[1:])
    except ValueError:
        raise QuiverError(f"bad vertex count in {spec!r}") from None
    return SymmetricQuiver(n, tuple(dirs))


def check_dim_vector(quiver: Quiver, alpha) -> tuple:
    alpha = tuple(int(x) for x in alpha)
    if len(alpha) != quiver.n:
        raise QuiverError(
            f"dimension vector length {len(alpha)} != {quiver.n} vertices"
        )
    if any(x < 0 for x in alpha):
        raise QuiverError(f"negative dimension in {alpha}")
    return alpha


def is_symmetric_dim(quiver: Quiver, alpha) -> bool:
    alpha = check_dim_vector(quiver, alpha)
    return all(alpha[x - 1] == alpha[quiver.sigma_vertex(x) - 1] for x in quiver.vertices())


def euler_form(quiver: Quiver, alpha, beta) -> int:
    """Euler form <alpha, beta> = sum a(x)b(x) - sum_{arrows} a(ta)b(ha)."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    if len(alpha) != quiver.n or len(beta) != quiver.n:
        raise QuiverError("dimension vector length mismatch")
    total = sum(a * b for a, b in zip(alpha, beta))
    for a in quiver.arrows():
        total -= alpha[quiver.tail(a) - 1] * beta[quiver.head(a) - 1]
    return total


def unit_vector(quiver: Quiver, x: int) -> tuple:
    return tuple(1 if v == x else 0 for v in quiver.vertices())


def reflect_dim(quiver: Quiver, x: int, alpha) -> tuple:
    """BGP reflection c_x on dimension vectors at a sink or source x."""
    alpha = check_dim_vector(quiver, alpha)
    if not (quiver.is_sink(x) or quiver.is_source(x)):
        raise QuiverError(f"vertex {x} is neither a sink nor a source")
    new = list(alpha)
    neighbors = sum(
        alpha[(a if a + 1 == x else a + 1) - 1] for a in quiver.arrows_at(x)
    )
    new[x - 1] = neighbors - alpha[x - 1]
    return tuple(new)


def reflect_pair_dim(quiver: SymmetricQuiver, x: int, alpha) -> tuple:
    """c_{(x, sigma x)} = c_{sigma x} c_x on dimension vectors."""
    sx = quiver.sigma_vertex(x)
    mid = reflect_dim(quiver, x, alpha)
    return reflect_dim(quiver.reflect_at(x), sx, mid)


def orientation_path(quiver: SymmetricQuiver, target: SymmetricQuiver):
    """Breadth-first sequence of admissible sinks turning quiver into target.

    Each returned vertex is the sink of an admissible sink-source pair of
    the intermediate quiver; replaying reflect_pair at those sinks yields
    the target.  Raises OrientationPathError when the target lies in a
    different reflection class (for even chains the sigma-fixed middle
    arrow can never be reversed).
    """
    if quiver.n != target.n:
        raise QuiverError("orientation_path needs the same underlying graph")
    start = quiver.orientation
    goal = target.orientation
    if start == goal:
        return []
    seen = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for orient in frontier:
            q = SymmetricQuiver(quiver.n, orient)
            for x, sx in q.admissible_pairs():
                sink = x if q.is_sink(x) else sx
                new = q.reflect_pair(sink).orientation
                if new in seen:
                    continue
                seen[new] = (orient, sink)
                if new == goal:
                    path = []
                    cur = new
                    while seen[cur] is not None:
                        prev, s = seen[cur]
                        path.append(s)
                        cur = prev
                    return list(reversed(path))
                nxt.append(new)
        frontier = nxt
    raise OrientationPathError(
        f"no admissible reflection sequence from {quiver.label()} to {target.label()}"
    )


def reachable_orientations(quiver: SymmetricQuiver):
    """All symmetric orientations reachable by admissible pair reflections."""
    seen = {quiver.orientation}
    frontier = [quiver.orientation]
    while frontier:
        nxt = []
        for orient in frontier:
            q = SymmetricQuiver(quiver.n, orient)
            for x, sx in q.admissible_pairs():
                sink = x if q.is_sink(x) else sx
                new = q.reflect_pair(sink).orientation
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return [SymmetricQuiver(quiver.n, o) for o in sorted(seen)]


def all_symmetric_orientations(n: int):
    """Every sigma-compatible orientation of the A_n chain."""
    free = [a for a in range(1, n) if a <= n - a]
    out = []
    for bits in range(1 << len(free)):
        dirs = [None] * (n - 1)
        for k, a in enumerate(free):
            d = RIGHT if (bits >> k) & 1 == 0 else LEFT
            dirs[a - 1] = d
            if a != n - a:
                dirs[n - a - 1] = d
        out.append(SymmetricQuiver(n, dirs))
    return sorted(out, key=lambda q: q.orientation)
