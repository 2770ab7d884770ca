"""Theta-stable maximal parabolics and derived functor module K-types.

A FactorStructure is a reductive subalgebra given by simple roots in shared
ambient coordinates plus the set of its compact positive roots.  For a
maximal parabolic q(i) attached to a simple root, the K-types of the
associated derived functor module A_q(lambda) are computed by the
generalized Blattner formula, reorganized as a signed sum over the
decomposition of S(u cap p) tensor C_{lambda + 2 rho(u cap p)} into
irreducibles of the compact Levi part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .roots import RootSystem, Vector, simple_subset, vadd, vsub, vec, vzero
from .chars import (decompose_full, shift_char, sym_power_characters)


@dataclass(frozen=True)
class FactorStructure:
    """A factor of a symmetric subalgebra, with its compact positive roots.

    style selects the weight dictionary: "A" means the fundamental weights
    of the simple system as listed; "B" and "D" mean the orthogonal-group
    epsilon dictionary, which differs from the fundamental weights exactly
    at the degenerate ranks so(3) and so(4) where index 1 must keep meaning
    the vector weight e_1.
    """
    name: str
    rs: RootSystem
    compact: frozenset
    style: str = "A"

    @cached_property
    def k_system(self) -> RootSystem:
        pos = [r for r in self.rs.positive_roots if r in self.compact]
        return self.rs.subsystem(simple_subset(self.rs, pos),
                                 label=f"k({self.name})")

    @cached_property
    def noncompact_positive(self) -> list[Vector]:
        return [r for r in self.rs.positive_roots if r not in self.compact]

    @cached_property
    def _degenerate(self) -> bool:
        return ((self.style == "B" and self.rs.rank == 1)
                or (self.style == "D" and self.rs.rank == 2))

    def fund_weight(self, i: int) -> Vector:
        """Weight named by index i (1-based) in this factor's dictionary.

        At the degenerate ranks so(3) and so(2)+so(2) the index 1 keeps
        meaning the vector weight e_1 of the orthogonal-group series, which
        is not the fundamental weight of the small root system.
        """
        if not 1 <= i <= self.rs.rank:
            raise ValueError(f"weight index {i} out of range for {self.name}")
        if self._degenerate and i == 1:
            b = self.rs.simple_roots
            if self.style == "B":
                return b[0]  # e_1 = beta_1 for so(3)
            # e_1 = (beta_1 + beta_2) / 2 for the rank 2 D factor
            return vec(Fraction(x, 2) for x in vadd(b[0], b[1]))
        return self.rs.fundamental_weight(i - 1)

    def parabolic(self, node: int) -> "ParabolicData":
        """Maximal parabolic attached to a node of this factor.

        At the degenerate orthogonal ranks the nilradical of q(1) is cut
        out by the e_1 weight, continuing the isotropic-line parabolic of
        the generic-rank series.
        """
        if self._degenerate and node == 1:
            return ParabolicData(self, node, self.fund_weight(node))
        return ParabolicData(self, node)


@dataclass(frozen=True)
class ParabolicData:
    """Maximal theta-stable parabolic q(node) inside a factor.

    When grading is set, the nilradical is the set of positive roots with
    positive inner product against it, normalized so the smallest positive
    level is 1.  Otherwise the node coefficient of the root is used.
    """
    factor: FactorStructure
    node: int  # 1-based index into the factor's simple roots
    grading: Vector | None = None

    def __post_init__(self):
        if not 1 <= self.node <= self.factor.rs.rank:
            raise ValueError(f"node {self.node} out of range for "
                             f"{self.factor.name}")

    @cached_property
    def _level_unit(self):
        rs = self.factor.rs
        vals = [rs.inner(r, self.grading) for r in rs.positive_roots]
        pos = [v for v in vals if v > 0]
        if not pos:
            raise ValueError("grading vanishes on all positive roots")
        return min(pos)

    def _coeff(self, r: Vector):
        if self.grading is not None:
            return self.factor.rs.inner(r, self.grading) / self._level_unit
        return self.factor.rs.root_coords(r)[self.node - 1]

    @cached_property
    def u_roots(self) -> list[Vector]:
        return [r for r in self.factor.rs.positive_roots if self._coeff(r) >= 1]

    @cached_property
    def levi_roots(self) -> list[Vector]:
        return [r for r in self.factor.rs.positive_roots if self._coeff(r) == 0]

    @cached_property
    def u_cap_p(self) -> list[Vector]:
        return [r for r in self.u_roots if r not in self.factor.compact]

    @cached_property
    def u_is_abelian(self) -> bool:
        return all(self._coeff(r) == 1 for r in self.u_roots)

    @cached_property
    def levi_compact_system(self) -> RootSystem:
        pos = [r for r in self.levi_roots if r in self.factor.compact]
        return self.factor.rs.subsystem(simple_subset(self.factor.rs, pos))

    @cached_property
    def rho(self) -> Vector:
        return self.factor.rs.rho

    @cached_property
    def rho_u(self) -> Vector:
        out = vzero(self.factor.rs.dim)
        for r in self.u_roots:
            out = vadd(out, r)
        return vec(Fraction(x, 2) for x in out)

    @cached_property
    def two_rho_u_cap_p(self) -> Vector:
        out = vzero(self.factor.rs.dim)
        for r in self.u_cap_p:
            out = vadd(out, r)
        return out


def infinitesimal_character(pd: ParabolicData, lam: Vector) -> Vector:
    """A representative of the infinitesimal character of A_q(lam)."""
    return vadd(vec(lam), pd.rho)


def range_check(pd: ParabolicData, lam: Vector) -> str:
    """Classify lam as 'good', 'weakly_fair' or 'outside'."""
    lam = vec(lam)
    rs = pd.factor.rs
    lr = vadd(lam, pd.rho)
    if all(rs.inner(lr, a) > 0 for a in pd.u_roots):
        return "good"
    lru = vadd(lam, pd.rho_u)
    if all(rs.inner(lru, a) >= 0 for a in pd.u_roots):
        return "weakly_fair"
    return "outside"


def aq_ktypes(pd: ParabolicData, lam: Vector, max_degree: int
              ) -> tuple[dict[tuple[int, Vector], int], bool]:
    """K-types of A_q(lam) up to symmetric degree max_degree.

    Returns ((degree, highest weight) -> multiplicity, shortcut) where
    shortcut reports whether every Levi constituent was already dominant
    for the compact part, in which case no sign cancellation occurred and
    the answer is valid even outside the weakly fair range.
    """
    lam = vec(lam)
    shift = vadd(lam, pd.two_rho_u_cap_p)
    lk = pd.levi_compact_system
    k = pd.factor.k_system
    rho_k = k.rho
    sym = sym_power_characters([(w, 1) for w in pd.u_cap_p], max_degree,
                               dim=pd.factor.rs.dim)
    acc: dict[tuple[int, Vector], int] = {}
    shortcut = True
    for j, ch in enumerate(sym):
        for nu, m in decompose_full(lk, shift_char(ch, shift)):
            if not k.is_dominant(nu):
                shortcut = False
            dom, sign, singular = k.to_dominant(vadd(nu, rho_k))
            if singular:
                continue
            mu = vsub(dom, rho_k)
            key = (j, mu)
            acc[key] = acc.get(key, 0) + sign * m
    acc = {key: v for key, v in acc.items() if v != 0}
    # aggregate over degrees must be a true multiplicity
    total: dict[Vector, int] = {}
    for (_, mu), v in acc.items():
        total[mu] = total.get(mu, 0) + v
    bad = {mu: v for mu, v in total.items() if v < 0}
    if bad:
        raise ValueError(f"negative K-type multiplicities {bad}; "
                         "lam outside the valid range")
    return acc, shortcut


def aq_ktype_multiplicity(pd: ParabolicData, lam: Vector, mu: Vector,
                          max_degree: int) -> int:
    """Multiplicity of the K-type with highest weight mu in A_q(lam)."""
    mu = vec(mu)
    acc, _ = aq_ktypes(pd, lam, max_degree)
    return sum(v for (_, m), v in acc.items() if m == mu)


def lowest_ktype(pd: ParabolicData, lam: Vector) -> Vector:
    """The degree zero K-type lam + 2 rho(u cap p)."""
    return vadd(vec(lam), pd.two_rho_u_cap_p)
