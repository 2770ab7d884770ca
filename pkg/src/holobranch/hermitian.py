"""The seven Hermitian families and their minimal holomorphic representations.

Each setting fixes a simple root labeling, the noncompact (painted) node,
the lowest K-type parameter c*zeta of the minimal holomorphic
representation, and the grading element z' dual to the painted node.
K-types of the minimal holomorphic representation form the single string
c*zeta + k*beta with beta the highest root.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .roots import RootSystem, Vector, standard, vadd, vec, vscale


@dataclass(frozen=True)
class HermitianSetting:
    """A simple Hermitian Lie algebra with painted Dynkin diagram data."""
    name: str
    rs: RootSystem = field(compare=False)
    painted: int            # 0-based index of the noncompact simple root
    c_zeta: Vector = field(compare=False)
    real_rank: int

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def k_simple(self) -> list[Vector]:
        return [a for i, a in enumerate(self.rs.simple_roots) if i != self.painted]

    @property
    def k_system(self) -> RootSystem:
        return self.rs.subsystem(self.k_simple, label=f"k({self.name})")

    @property
    def beta_highest(self) -> Vector:
        return self.rs.highest_root

    def zgrade(self, v: Vector) -> Fraction:
        """Coefficient of the painted simple root in the expansion of v."""
        ps = self.rs.pairings(v)
        ci = self.rs._cartan_inv
        return sum((Fraction(ci[self.painted][j]) * ps[j]
                    for j in range(self.rs.rank)), Fraction(0))

    @property
    def p_plus(self) -> list[Vector]:
        return [r for r in self.rs.positive_roots
                if self.rs.root_coords(r)[self.painted] == 1]

    def ktype_string(self, k_max: int) -> list[tuple[int, Vector]]:
        """K-types c*zeta + k*beta of the minimal holomorphic representation.

        Only defined for real rank at least two: in real rank one every
        unitary highest weight module has a multiplicity-free K-string and
        the notion of "the" minimal one degenerates.
        """
        if self.real_rank < 2:
            raise ValueError(
                f"{self.name} has real rank {self.real_rank}; the minimal "
                "holomorphic representation requires real rank >= 2")
        if k_max < 0:
            raise ValueError("k_max must be nonnegative")
        beta = self.beta_highest
        return [(k, vadd(self.c_zeta, vscale(k, beta))) for k in range(k_max + 1)]


def _fund(rs: RootSystem, i: int, coeff) -> Vector:
    return vscale(coeff, rs.fundamental_weight(i))


def su(m: int, n: int) -> HermitianSetting:
    if m < 1 or n < 1 or m + n < 3:
        raise ValueError("su(m,n) needs m,n >= 1 and m+n >= 3")
    rs = standard("A", m + n - 1)
    return HermitianSetting(f"su({m},{n})", rs, m - 1,
                            _fund(rs, m - 1, 1), min(m, n))


def so_even(n: int) -> HermitianSetting:
    """so(2,2n), type D_{n+1}, painted first node of the tail."""
    if n < 2:
        raise ValueError("so(2,2n) needs n >= 2")
    rs = standard("D", n + 1)
    return HermitianSetting(f"so(2,{2 * n})", rs, 0,
                            _fund(rs, 0, n - 1), 2)


def so_odd(n: int) -> HermitianSetting:
    """so(2,2n+1), type B_{n+1}, painted first node."""
    if n < 1:
        raise ValueError("so(2,2n+1) needs n >= 1")
    rs = standard("B", n + 1)
    return HermitianSetting(f"so(2,{2 * n + 1})", rs, 0,
                            _fund(rs, 0, Fraction(2 * n - 1, 2)), 2)


def so_star(n: int) -> HermitianSetting:
    if n < 3:
        raise ValueError("so*(2n) needs n >= 3")
    rs = standard("D", n)
    return HermitianSetting(f"so*({2 * n})", rs, n - 1,
                            _fund(rs, n - 1, 2), n // 2)


def sp(n: int) -> HermitianSetting:
    if n < 1:
        raise ValueError("sp(n,R) needs n >= 1")
    rs = standard("A", 1) if n == 1 else standard("C", n)
    return HermitianSetting(f"sp({n},R)", rs, n - 1,
                            _fund(rs, n - 1, Fraction(1, 2)), n)


def e6() -> HermitianSetting:
    rs = standard("E6", 6)
    return HermitianSetting("e6(-14)", rs, 5, _fund(rs, 5, 3), 2)


def e7() -> HermitianSetting:
    rs = standard("E7", 7)
    return HermitianSetting("e7(-25)", rs, 6, _fund(rs, 6, 4), 3)


_NAME_RE = re.compile(
    r"^\s*(su\((\d+),(\d+)\)|so\(2,(\d+)\)|so\*\((\d+)\)|sp\((\d+)(?:,R)?\)"
    r"|e6(?:\(-14\))?|e7(?:\(-25\))?)\s*$")


def setting(name: str) -> HermitianSetting:
    """Parse a family name like 'su(2,3)', 'so(2,7)', 'so*(10)', 'sp(3,R)'."""
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"unknown Hermitian family: {name!r}")
    s = m.group(1)
    if s.startswith("su"):
        return su(int(m.group(2)), int(m.group(3)))
    if s.startswith("so(2,"):
        N = int(m.group(4))
        return so_even(N // 2) if N % 2 == 0 else so_odd((N - 1) // 2)
    if s.startswith("so*"):
        N = int(m.group(5))
        if N % 2:
            raise ValueError("so*(2n) needs even argument")
        return so_star(N // 2)
    if s.startswith("sp"):
        return sp(int(m.group(6)))
    if s.startswith("e6"):
        return e6()
    return e7()
