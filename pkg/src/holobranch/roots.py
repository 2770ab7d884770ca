"""Exact root system arithmetic in fundamental-weight coordinates.

Weights are tuples of ints / Fractions over a fixed ambient rational vector
space.  A RootSystem is a list of simple root vectors in that space together
with a Gram matrix for the invariant form (long roots normalized to squared
length 2 in each simple component).  Subsystems (compact roots, fixed-point
subalgebras, Levi factors) share the ambient coordinates and Gram matrix, so
weights of different subsystems can be compared and added directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


Vector = tuple  # tuple of int | Fraction, hash-compatible across the two

# optional global bound on Weyl orbit enumeration; None means unbounded
WEYL_CAP: int | None = None


def set_weyl_cap(cap: int | None) -> None:
    global WEYL_CAP
    WEYL_CAP = cap


def _canon(x) -> int | Fraction:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    return x


def vec(xs: Iterable) -> Vector:
    return tuple(_canon(Fraction(x) if not isinstance(x, (int, Fraction)) else x)
                 for x in xs)


def vadd(a: Vector, b: Vector) -> Vector:
    return tuple(_canon(x + y) for x, y in zip(a, b, strict=True))


def vsub(a: Vector, b: Vector) -> Vector:
    return tuple(_canon(x - y) for x, y in zip(a, b, strict=True))


def vscale(c, a: Vector) -> Vector:
    c = Fraction(c)
    return tuple(_canon(c * x) for x in a)


def vzero(dim: int) -> Vector:
    return (0,) * dim


def mat_vec(m: Sequence[Sequence], v: Vector) -> Vector:
    return tuple(_canon(sum((Fraction(m[i][j]) * v[j] for j in range(len(v))),
                            Fraction(0)))
                 for i in range(len(m)))


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[_canon(sum((Fraction(a[i][t]) * Fraction(b[t][j]) for t in range(k)),
                        Fraction(0)))
             for j in range(m)] for i in range(n)]


def mat_inv(m: Sequence[Sequence]) -> list[list]:
    """Gauss-Jordan inverse over Fraction; raises on singular input."""
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [[_canon(a[i][n + j]) for j in range(n)] for i in range(n)]


def _solve(m: Sequence[Sequence], rhs: Sequence) -> Vector:
    inv = mat_inv(m)
    return mat_vec(inv, vec(rhs))


@dataclass(frozen=True)
class WeylWord:
    """A Weyl group element as a reduced word in simple reflections."""
    word: tuple[int, ...]
    parity: int  # (-1)**length


class RootSystem:
    """A (possibly reducible) root system living in ambient coordinates.

    gram: ambient Gram matrix of the invariant bilinear form.
    simple_roots: vectors in ambient coordinates; need not span the space.
    """

    def __init__(self, gram: Sequence[Sequence], simple_roots: Sequence[Vector],
                 label: str = ""):
        self.gram = [list(map(_canon, row)) for row in gram]
        self.simple_roots = [vec(r) for r in simple_roots]
        self.label = label
        self.rank = len(self.simple_roots)
        self.dim = len(gram)
        # functional for <v, alpha_i^vee> = 2 (v, alpha_i) / (alpha_i, alpha_i)
        self._covs = []
        for a in self.simple_roots:
            ga = mat_vec(self.gram, a)
            norm = sum((x * y for x, y in zip(a, ga)), Fraction(0))
            if norm <= 0:
                raise ValueError("simple root with nonpositive length")
            self._covs.append(tuple(_canon(Fraction(2, 1) * x / norm) for x in ga))
        self._cartan = [[self.pairing(self.simple_roots[j], i)
                         for j in range(self.rank)] for i in range(self.rank)]
        for row in self._cartan:
            for x in row:
                if not isinstance(x, int):
                    raise ValueError("non-integral Cartan matrix; "
                                     "simple roots are not a root basis")
        self._cartan_inv = mat_inv(self._cartan) if self.rank else []
        self._pos_roots: list[Vector] | None = None

    # -- basic form / pairing machinery ------------------------------------

    def inner(self, a: Vector, b: Vector):
        gb = mat_vec(self.gram, b)
        return _canon(sum((x * y for x, y in zip(a, gb)), Fraction(0)))

    def pairing(self, v: Vector, i: int):
        """<v, alpha_i^vee> for the i-th simple root."""
        return _canon(sum((c * x for c, x in zip(self._covs[i], v)), Fraction(0)))

    def pairings(self, v: Vector) -> Vector:
        return tuple(self.pairing(v, i) for i in range(self.rank))

    def coroot_pairing(self, v: Vector, root: Vector):
        """<v, root^vee> for an arbitrary root vector of this system."""
        n = self.inner(root, root)
        return _canon(Fraction(2) * Fraction(self.inner(v, root)) / n)

    @property
    def cartan_matrix(self) -> list[list[int]]:
        return [row[:] for row in self._cartan]

    def root_coords(self, v: Vector) -> Vector:
        """Expansion coefficients of v in the simple roots (v must lie in span)."""
        coeffs = mat_vec(self._cartan_inv, self.pairings(v))
        chk = vzero(self.dim)
        for c, a in zip(coeffs, self.simple_roots):
            chk = vadd(chk, vscale(c, a))
        if chk != vec(v):
            raise ValueError("vector not in root span")
        return coeffs

    def in_root_span(self, v: Vector) -> bool:
        try:
            self.root_coords(v)
            return True
        except ValueError:
            return False

    def height(self, v: Vector):
        return _canon(sum(self.root_coords(v), Fraction(0)))

    # -- reflections and dominance -----------------------------------------

    def reflect(self, v: Vector, i: int) -> Vector:
        return vsub(v, vscale(self.pairing(v, i), self.simple_roots[i]))

    def reflect_root(self, v: Vector, root: Vector) -> Vector:
        return vsub(v, vscale(self.coroot_pairing(v, root), root))

    def is_dominant(self, v: Vector) -> bool:
        return all(self.pairing(v, i) >= 0 for i in range(self.rank))

    def is_dominant_integral(self, v: Vector) -> bool:
        return all(isinstance(self.pairing(v, i), int) and self.pairing(v, i) >= 0
                   for i in range(self.rank))

    def to_dominant(self, v: Vector) -> tuple[Vector, int, bool]:
        """Dominant representative, sign (-1)^length, and singularity flag.

        The sign is meaningless when the weight is singular (some reflection
        fixes it); callers treat singular results as contributing zero.
        """
        v = vec(v)
        parity = 1
        while True:
            for i in range(self.rank):
                if self.pairing(v, i) < 0:
                    v = self.reflect(v, i)
                    parity = -parity
                    break
            else:
                break
        singular = any(self.pairing(v, i) == 0 for i in range(self.rank))
        return v, parity, singular

    # -- positive roots, rho ------------------------------------------------

    @property
    def positive_roots(self) -> list[Vector]:
        if self._pos_roots is None:
            seen = set(self.simple_roots)
            frontier = list(self.simple_roots)
            while frontier:
                nxt = []
                for r in frontier:
                    for i in range(self.rank):
                        s = self.reflect(r, i)
                        if s not in seen:
                            seen.add(s)
                            nxt.append(s)
                frontier = nxt
            pos = []
            for r in seen:
                coeffs = self.root_coords(r)
                if all(c >= 0 for c in coeffs):
                    pos.append(r)
            pos.sort(key=lambda r: (self.height(r), r))
            self._pos_roots = pos
        return self._pos_roots

    @property
    def rho(self) -> Vector:
        half = Fraction(1, 2)
        out = vzero(self.dim)
        for r in self.positive_roots:
            out = vadd(out, vscale(half, r))
        return out

    @property
    def highest_root(self) -> Vector:
        return self.positive_roots[-1]

    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    # -- Weyl group ----------------------------------------------------------

    def weyl_orbit(self, v: Vector) -> list[Vector]:
        v = vec(v)
        seen = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    u = self.reflect(w, i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
            if WEYL_CAP is not None and len(seen) > WEYL_CAP:
                raise ValueError(
                    f"Weyl orbit larger than the configured cap {WEYL_CAP}")
        return sorted(seen)

    def weyl_group_elements(self, cap: int | None = None) -> list[WeylWord]:
        """All Weyl group elements as reduced words, BFS by length.

        Raises if the group order exceeds cap.
        """
        start = self.rho  # strictly dominant regular point of the span
        elems = {start: WeylWord((), 1)}
        frontier = [start]
        out = [elems[start]]
        while frontier:
            nxt = []
            for w in sorted(frontier):
                ww = elems[w]
                for i in range(self.rank):
                    u = self.reflect(w, i)
                    if u not in elems:
                        elems[u] = WeylWord((i,) + ww.word, -ww.parity)
                        nxt.append(u)
                        out.append(elems[u])
                        if cap is not None and len(out) > cap:
                            raise ValueError(
                                f"Weyl group larger than cap {cap}")
            frontier = nxt
        return out

    def weyl_order(self) -> int:
        return len(self.weyl_group_elements())

    def apply_word(self, word: Sequence[int], v: Vector) -> Vector:
        for i in reversed(word):
            v = self.reflect(v, i)
        return v

    def same_weyl_orbit(self, a: Vector, b: Vector) -> bool:
        da, _, _ = self.to_dominant(a)
        db, _, _ = self.to_dominant(b)
        return da == db

    # -- derived systems ------------------------------------------------------

    def subsystem(self, roots: Sequence[Vector], label: str = "") -> "RootSystem":
        return RootSystem(self.gram, roots, label=label)

    def fundamental_weight(self, i: int) -> Vector:
        """Fundamental weight in the span of the simple roots (pairing delta_ij)."""
        out = vzero(self.dim)
        for j in range(self.rank):
            out = vadd(out, vscale(self._cartan_inv[j][i], self.simple_roots[j]))
        return out

    def weight_from_pairings(self, cs: Sequence) -> Vector:
        out = vzero(self.dim)
        for i, c in enumerate(cs):
            if c:
                out = vadd(out, vscale(c, self.fundamental_weight(i)))
        return out

    def component_type(self) -> list[tuple[str, int]]:
        """Cartan types of the connected components, for diagram sanity checks."""
        adj = {i: set() for i in range(self.rank)}
        for i in range(self.rank):
            for j in range(self.rank):
                if i != j and self._cartan[i][j] != 0:
                    adj[i].add(j)
        seen: set[int] = set()
        comps = []
        for i in range(self.rank):
            if i in seen:
                continue
            comp = []
            stack = [i]
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                comp.append(x)
                stack.extend(adj[x] - seen)
            comps.append(sorted(comp))
        out = []
        for comp in comps:
            sub = self.subsystem([self.simple_roots[i] for i in comp])
            out.append((_classify(sub), len(comp)))
        return sorted(out)

    def signature(self) -> str:
        """Stable content hash input identifying this system exactly."""
        return repr((self.gram, self.simple_roots))


def _classify(rs: RootSystem) -> str:
    """Classify an irreducible system by rank and positive root count."""
    n = rs.rank
    npos = rs.num_positive_roots()
    lengths = {rs.inner(a, a) for a in rs.simple_roots}
    if len(lengths) == 1:
        if npos == n * (n + 1) // 2:
            return "A"
        if npos == n * (n - 1):
            return "D"
        if (n, npos) in ((6, 36), (7, 63), (8, 120)):
            return f"E{n}"
        return "?"
    if (n, npos) == (4, 24):
        return "F4"
    if (n, npos) == (2, 6):
        return "G2"
    if npos == n * n:
        if n == 2:
            return "B"  # B2 and C2 coincide; report as B
        short = min(lengths)
        nshort = sum(1 for a in rs.simple_roots if rs.inner(a, a) == short)
        return "B" if nshort == 1 else "C"
    return "?"


# -- standard systems ---------------------------------------------------------

def _standard_cartan(family: str, n: int) -> tuple[list[list[int]], list[Fraction]]:
    """Cartan matrix C[i][j] = <alpha_j, alpha_i^vee> and half-lengths d_i.

    Chain labelings: A_n plain chain; B_n chain with short alpha_n; C_n chain
    with long alpha_n; D_n fork ends alpha_{n-1}, alpha_n on alpha_{n-2};
    E6/E7 Bourbaki (node 2 attached to node 4, chain 1-3-4-5-6[-7]).
    """
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    d = [Fraction(1)] * n
    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        if n < 2:
            raise ValueError("B rank >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n short: <alpha_n, alpha_{n-1}^vee> = -1, reverse -2
        link(n - 2, n - 1, -1, -2)
        d[n - 1] = Fraction(1, 2)
    elif family == "C":
        if n < 2:
            raise ValueError("C rank >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        link(n - 2, n - 1, -2, -1)
        for i in range(n - 1):
            d[i] = Fraction(1, 2)
    elif family == "D":
        if n < 3:
            raise ValueError("D rank >= 3")
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif family in ("E6", "E7", "E8"):
        m = int(family[1])
        if n != m:
            raise ValueError(f"{family} has rank {m}")
        chain = [0, 2, 3, 4, 5, 6, 7][: m - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    else:
        raise ValueError(f"unknown family {family}")
    return C, d


@lru_cache(maxsize=None)
def standard(family: str, rank: int) -> RootSystem:
    """Root system of a simple type in its own fundamental-weight coordinates."""
    C, d = _standard_cartan(family, rank)
    # alpha_j has omega-coordinates C[i][j]; Gram G satisfies G M = diag(d)
    M = [[C[i][j] for j in range(rank)] for i in range(rank)]
    Minv = mat_inv(M)
    G = [[_canon(d[i] * Minv[i][j]) for j in range(rank)] for i in range(rank)]
    assert all(G[i][j] == G[j][i] for i in range(rank) for j in range(rank))
    simple = [tuple(C[i][j] for i in range(rank)) for j in range(rank)]
    return RootSystem(G, simple, label=f"{family}{rank}")


def with_abelian_coords(rs: RootSystem, extra: int) -> RootSystem:
    """Extend ambient space by orthonormal central coordinates."""
    n = rs.dim
    gram = [[rs.gram[i][j] if i < n and j < n else (1 if i == j else 0)
             for j in range(n + extra)] for i in range(n + extra)]
    simple = [tuple(r) + (0,) * extra for r in rs.simple_roots]
    return RootSystem(gram, simple, label=rs.label)


def simple_subset(rs: RootSystem, positives: Sequence[Vector]) -> list[Vector]:
    """Indecomposable elements of a closed positive subset: its simple system."""
    pset = set(vec(p) for p in positives)
    out = []
    for r in pset:
        if not any(vsub(r, s) in pset for s in pset if s != r):
            out.append(r)
    return sorted(out, key=lambda r: (rs.height(r) if rs.in_root_span(r) else 0, r))
