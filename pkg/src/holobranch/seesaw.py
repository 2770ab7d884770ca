"""Branching laws from seesaw pairs of reductive dual pairs.

A pair (G1, H1) with compact H1 sits above (G2, H2) with G2 inside G1
and H1 inside the compact H2.  The oscillator module then restricts in
two ways, so the theta lift of a character of H1 decomposes over G2 into
theta lifts of the characters of H2 containing it.  Two configurations
are implemented: U(m,n) over U(p,q)+U(m-p,n-q) paired against U(1) in
U(1)^2, and O*(2n) over U(m,n-m) paired against Sp(1) in U(2).

All weights here are epsilon-basis tuples; ambient_coords converts to
the fundamental-weight coordinates shared with the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .roots import Vector, vadd, vec, vscale, vzero


class SeesawError(ValueError):
    pass


@dataclass(frozen=True)
class GenuineCharacter:
    """A genuine character of a compact double cover, by its det powers.

    One power per unitary block: (a,) for U(1) or Sp(1) in U(2) context,
    (a, b) for U(1)^2 and U(2).  Powers live in (1/2)Z.
    """
    powers: tuple

    def __post_init__(self):
        object.__setattr__(self, "powers",
                           tuple(Fraction(x) for x in self.powers))


@dataclass(frozen=True)
class SeesawConfig:
    """One of the two implemented seesaw diagrams.

    kind "u": G1 = U(m,n), H1 = U(1) diagonal, G2 = U(p,q) x U(m-p,n-q),
    H2 = U(1) x U(1).  kind "sostar": G1 = O*(2n), H1 = Sp(1),
    G2 = U(m,n-m), H2 = U(2); here q is unused.
    """
    kind: str
    m: int
    n: int
    p: int = 0
    q: int = 0

    def __post_init__(self):
        if self.kind == "u":
            if not (1 <= self.p <= self.m - 1 and 1 <= self.q <= self.n):
                raise SeesawError("u config needs 1 <= p <= m-1, 1 <= q <= n")
        elif self.kind == "sostar":
            if not (self.n >= 3 and 1 <= self.m <= self.n - 1):
                raise SeesawError("sostar config needs n >= 3, 1 <= m <= n-1")
        else:
            raise SeesawError(f"unknown seesaw kind {self.kind!r}")

    @property
    def dim(self) -> int:
        return self.m + self.n if self.kind == "u" else self.n


def _eps_sum(dim: int, idxs, coeff=1) -> Vector:
    out = [Fraction(0)] * dim
    for i in idxs:
        out[i] += Fraction(coeff)
    return vec(out)


def base_character(cfg: SeesawConfig) -> GenuineCharacter:
    """The H1 character whose theta lift is the minimal holomorphic module."""
    if cfg.kind == "u":
        return GenuineCharacter((Fraction(cfg.m - cfg.n, 2),))
    return GenuineCharacter((0,))  # the nontrivial character of Sp(1)~


def h2_character(cfg: SeesawConfig, k: int) -> GenuineCharacter:
    """The k-th member of the H2 character family matched to H1."""
    if cfg.kind == "u":
        a = Fraction(cfg.p - cfg.q, 2) - k
        b = Fraction((cfg.m - cfg.p) - (cfg.n - cfg.q), 2) + k
        return GenuineCharacter((a, b))
    c = cfg.m - Fraction(cfg.n, 2) + k
    return GenuineCharacter((c, c))


def occurrence_obstruction(cfg: SeesawConfig, rho: GenuineCharacter):
    """None if rho occurs in the oscillator module, else the failed condition."""
    if cfg.kind == "u":
        a, b = rho.powers
        blocks = [(a, cfg.p, cfg.q), (b, cfg.m - cfg.p, cfg.n - cfg.q)]
        for c, r, s in blocks:
            if (c - Fraction(r + s, 2)).denominator != 1:
                return f"det power {c} not in (({r}+{s})/2) + Z"
            if s == 0 and c < Fraction(r, 2):
                return f"compact U({r}) block needs det power >= {r}/2, got {c}"
            if r == 0 and c > -Fraction(s, 2):
                return f"compact U({s}) block needs det power <= -{s}/2, got {c}"
        return None
    a, b = rho.powers
    if (a - b).denominator != 1 or a < b:
        return f"U(2) parameter needs a - b in Z>=0, got {a - b}"
    if (a - Fraction(cfg.n, 2)).denominator != 1:
        return f"U(2) parameter needs a in {cfg.n}/2 + Z, got {a}"
    if cfg.m == 1 and b > 1 - Fraction(cfg.n, 2):
        return f"m = 1 needs b <= 1 - {cfg.n}/2, got {b}"
    if cfg.n - cfg.m == 1 and a < Fraction(cfg.n, 2) - 1:
        return f"n - m = 1 needs a >= {cfg.n}/2 - 1, got {a}"
    return None


def seesaw_multiplicity(cfg: SeesawConfig, pi: GenuineCharacter,
                        rho: GenuineCharacter) -> int:
    """dim Hom_{H1}(pi, rho|_{H1}); 0 or 1 in both configurations."""
    if cfg.kind == "u":
        # H1 is the diagonal U(1) in U(1) x U(1)
        return int(sum(rho.powers) == pi.powers[0])
    # irreducibles of U(2) restrict irreducibly to Sp(1); the nontrivial
    # character appears exactly in the determinant powers
    a, b = rho.powers
    return int(a == b)


def theta_lift(cfg: SeesawConfig, rho: GenuineCharacter):
    """Lowest weights of theta(rho), one epsilon-vector per G2 factor.

    Returns None when rho does not occur in the oscillator module.
    """
    if occurrence_obstruction(cfg, rho) is not None:
        return None
    d = cfg.dim
    if cfg.kind == "u":
        m, n, p, q = cfg.m, cfg.n, cfg.p, cfg.q
        blocks = [(range(0, p), range(m + n - q, m + n)),
                  (range(p, m), range(m, m + n - q))]
        out = []
        for c, (rows, cols) in zip(rho.powers, blocks):
            t = c - Fraction(len(rows) - len(cols), 2)
            w = vadd(_eps_sum(d, rows, Fraction(1, 2)),
                     _eps_sum(d, cols, Fraction(-1, 2)))
            if t >= 0:
                w = vadd(w, _eps_sum(d, [rows[0]], t))
            else:
                w = vadd(w, _eps_sum(d, [cols[-1]], t))
            out.append(w)
        return out
    m, n = cfg.m, cfg.n
    k = rho.powers[0] - m + Fraction(n, 2)
    w = vadd(_eps_sum(d, range(0, m)), _eps_sum(d, range(m, n), -1))
    if k <= 0:
        w = vadd(w, _eps_sum(d, [n - 2, n - 1], k))
    else:
        w = vadd(w, _eps_sum(d, [0, 1], k))
    return [w]


def derive_branching(cfg: SeesawConfig, count: int = 5):
    """First terms of the branching series of the base theta lift.

    Walks the H2 character family in both directions from k = 0, keeping
    the members that occur in the oscillator module and pair with the
    base H1 character.  Returns [(k, [factor lowest weights])].
    """
    pi = base_character(cfg)
    out = []
    for step in (1, -1):
        k = 0 if step == 1 else -1
        found = 0
        while found < count:
            rho = h2_character(cfg, k)
            if occurrence_obstruction(cfg, rho) is None:
                if seesaw_multiplicity(cfg, pi, rho) == 1:
                    out.append((k, theta_lift(cfg, rho)))
                    found += 1
                k += step
            else:
                break  # the family leaves the oscillator module for good
    return out


def ambient_coords(cfg: SeesawConfig, w: Vector) -> Vector:
    """Epsilon-basis weight to the shared fundamental-weight coordinates.

    For kind "u" the target is the A series chain (the trace component
    drops out); for kind "sostar" the D series with the fork at the end.
    """
    w = vec(w)
    if cfg.kind == "u":
        return vec(w[i] - w[i + 1] for i in range(cfg.dim - 1))
    # the second block of u(m,n-m) sits conjugated inside so*(2n), so its
    # intrinsic weight coordinates flip sign on the torus
    n = cfg.n
    e = [w[i] if i < cfg.m else -w[i] for i in range(n)]
    return vec([e[i] - e[i + 1] for i in range(n - 1)] + [e[n - 2] + e[n - 1]])
