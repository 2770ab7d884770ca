"""Machine-readable catalog of symmetric pairs and their branching data.

The catalog ships as a versioned JSON data file whose records store, per
pair family: parameter constraints, the involution action on the ambient
simple roots, the subalgebra factors as symbolic simple-root combinations,
the u(1) normalization node, and both forms of the branching right-hand
side (lowest-weight form and derived-functor form) as k-indexed series.

Symbolic expressions are Python expressions over a restricted namespace:
a(i) is the i-th ambient simple root, s(i,j) the sum a(i)+...+a(j), and
lin([[c,i],...]) a general integer combination.  Weight expressions are
coefficient lists [[index_expr, coeff_expr], ...] over the fundamental
weights of one factor.  Scalars use frac(p, q) for exact rationals.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from .roots import (RootSystem, Vector, mat_inv, mat_mul, mat_vec,
                    simple_subset, vadd, vec, vscale, vzero, _solve)
from .hermitian import HermitianSetting, setting
from .parabolic import FactorStructure, ParabolicData

DATA_VERSION = 1
_DATA_PATH = Path(__file__).parent / "data" / "pairs.json"


class CatalogError(ValueError):
    pass


# ---------------------------------------------------------------------------
# expression evaluation

_SAFE_BUILTINS = {"abs": abs, "min": min, "max": max, "range": range,
                  "sum": sum, "len": len}


def _eval(expr, env):
    if isinstance(expr, (int, float)):
        return expr
    # env goes into globals so that comprehension scopes can see it
    return eval(expr, {"__builtins__": _SAFE_BUILTINS, **env})  # noqa: S307


def _scalar_env(params: dict, k=None) -> dict:
    env = dict(params)
    env["frac"] = Fraction
    if k is not None:
        env["k"] = k
    return env


def _root_env(params: dict, rs: RootSystem) -> dict:
    env = _scalar_env(params)
    dim = rs.dim

    def a(i):
        if not 1 <= i <= rs.rank:
            raise CatalogError(f"simple root index {i} out of range")
        return rs.simple_roots[i - 1]

    def s(i, j):
        out = vzero(dim)
        for t in range(i, j + 1):
            out = vadd(out, a(t))
        return out

    def lin(pairs):
        out = vzero(dim)
        for c, i in pairs:
            out = vadd(out, vscale(c, a(i)))
        return out

    def add(*vs):
        out = vzero(dim)
        for v in vs:
            out = vadd(out, v)
        return out

    env.update(a=a, s=s, lin=lin, add=add, sc=vscale)
    return env


def eval_coeffs(coeffs, params: dict, k=None) -> dict[int, Fraction]:
    """Coefficient list [[index_expr, coeff_expr], ...] -> {index: coeff}."""
    env = _scalar_env(params, k)
    out: dict[int, Fraction] = {}
    for idx_expr, c_expr in coeffs:
        i = _eval(idx_expr, env)
        c = Fraction(_eval(c_expr, env))
        if not isinstance(i, int):
            raise CatalogError(f"non-integer weight index {i!r}")
        out[i] = out.get(i, Fraction(0)) + c
    return {i: c for i, c in out.items() if c}


# ---------------------------------------------------------------------------
# realized objects

@dataclass(frozen=True)
class U1Factor:
    """Abelian summand, normalized by the ambient node where e pairs to 1."""
    node: int               # 1-based ambient simple root index
    evec: Vector            # weight-coordinate vector of e
    norm: Fraction          # <e, e> under the ambient form


@dataclass(frozen=True)
class SeriesTerm:
    """One k-indexed summand of a branching right-hand side."""
    lo: Fraction | None
    hi: Fraction | None
    lo_strict: bool
    hi_strict: bool
    singleton: bool
    factors: tuple          # raw factor specs, aligned with the pair's factors

    def k_start_ascending(self) -> int | None:
        if self.lo is None:
            return None
        k = -(-self.lo.numerator // self.lo.denominator)  # ceil
        if self.lo_strict and k == self.lo:
            k += 1
        return int(k)

    def k_start_descending(self) -> int | None:
        if self.hi is None:
            return None
        k = self.hi.numerator // self.hi.denominator  # floor
        if self.hi_strict and k == self.hi:
            k -= 1
        return int(k)

    def contains(self, k: int) -> bool:
        if self.singleton:
            return False
        if self.lo is not None and (k < self.lo or (self.lo_strict and k == self.lo)):
            return False
        if self.hi is not None and (k > self.hi or (self.hi_strict and k == self.hi)):
            return False
        return True


class PairRealization:
    """A catalog family instantiated at concrete parameters."""

    def __init__(self, record: dict, variant: dict, params: dict,
                 ambient: HermitianSetting, holomorphic: bool = True):
        self.family = record["id"]
        self.record = record
        self.variant = variant
        self.params = dict(params)
        self.ambient = ambient
        self.holomorphic = holomorphic
        self.methods = record.get("methods", {})
        self.reducible_aq = variant.get("reducible_aq", False)
        self.notes = variant.get("notes", "")
        self._build_projection(variant.get("sigma", record.get("sigma")))
        self._build_factors(variant["factors"])
        self.L_terms = [self._term(t) for t in variant.get("L", [])]
        aq = variant.get("Aq")
        self.Aq_terms = [self._term(t) for t in aq] if aq is not None else None

    # -- construction -------------------------------------------------------

    def _build_projection(self, sigma):
        rs = self.ambient.rs
        n = rs.dim
        if sigma is None:
            self.sigma_matrix = None
            self.proj = None
            return
        env = _scalar_env(self.params)
        cols = []
        if "perm" in sigma:
            for i in range(1, rs.rank + 1):
                env["i"] = i
                j = _eval(sigma["perm"], env)
                cols.append(rs.simple_roots[j - 1])
        else:
            beta = rs.highest_root
            for i in range(1, rs.rank + 1):
                env["i"] = i
                img = _eval(sigma["images"], env)
                if img == "minus_beta":
                    cols.append(vscale(-1, beta))
                else:
                    cols.append(rs.simple_roots[img - 1])
        # images are given on the simple-root basis; conjugate into the
        # weight-coordinate basis: C has the simple roots as columns
        C = [[Fraction(rs.simple_roots[j][i]) for j in range(n)]
             for i in range(n)]
        S_alpha = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
        S = mat_mul(S_alpha, mat_inv(C))
        self.sigma_matrix = S
        self.proj = [[(S[i][j] + (1 if i == j else 0)) / 2 for j in range(n)]
                     for i in range(n)]

    def restrict(self, v: Vector) -> Vector:
        if self.proj is None:
            return vec(v)
        return vec(mat_vec(self.proj, vec(v)))

    def _compactness(self, rs: RootSystem) -> frozenset:
        tm = self.variant.get("theta_minus")
        if tm is not None:
            env = _scalar_env(self.params)
            tm = [_eval(x, env) for x in tm]
        out = set()
        for r in rs.positive_roots:
            if tm is not None:
                coords = rs.root_coords(r)
                if sum(coords[i - 1] for i in tm) % 2 == 0:
                    out.add(r)
            else:
                if self.ambient.zgrade(r) == 0:
                    out.add(r)
        return frozenset(out)

    def _build_factors(self, specs):
        rs = self.ambient.rs
        env = _root_env(self.params, rs)
        self.factors = []
        self.structure_factors: list[FactorStructure] = []
        self.u1_factors: list[U1Factor] = []
        struct_roots: list[Vector] = []
        pending = []
        for spec in specs:
            if spec["kind"] == "structure":
                roots = [self.restrict(r) for r in _eval(spec["roots"], env)]
                name = spec.get("name", "factor")
                sub = rs.subsystem(roots, label=name)
                fac = FactorStructure(name, sub, self._compactness(sub),
                                      spec.get("style", "A"))
                self.factors.append(fac)
                self.structure_factors.append(fac)
                struct_roots.extend(roots)
            elif spec["kind"] == "u1":
                node = _eval(spec["node"], _scalar_env(self.params))
                pending.append(node)
                self.factors.append(None)  # placeholder, filled below
            else:
                raise CatalogError(f"unknown factor kind {spec['kind']!r}")
        for idx, fac in enumerate(self.factors):
            if fac is None:
                u1 = self._solve_u1(pending.pop(0), struct_roots)
                self.factors[idx] = u1
                self.u1_factors.append(u1)

    def _solve_u1(self, node: int, struct_roots: list[Vector]) -> U1Factor:
        rs = self.ambient.rs
        n = rs.dim
        basis = [vec(tuple(1 if j == i else 0 for j in range(n)))
                 for i in range(n)]
        rows = [[rs.inner(r, b) for b in basis] for r in struct_roots]
        rhs = [Fraction(0)] * len(struct_roots)
        alpha = rs.simple_roots[node - 1]
        rows.append([rs.inner(alpha, b) for b in basis])
        rhs.append(Fraction(1))
        if len(rows) != n:
            raise CatalogError(
                f"u(1) normalization underdetermined: {len(rows)} conditions "
                f"for rank {n}")
        e = vec(_solve(rows, rhs))
        return U1Factor(node, e, rs.inner(e, e))

    def _term(self, raw: dict) -> SeriesTerm:
        rng = raw.get("range")
        env = _scalar_env(self.params)
        if rng is None:
            return SeriesTerm(None, None, False, False, True,
                              tuple(raw["factors"]))
        lo = rng.get("lo")
        hi = rng.get("hi")
        return SeriesTerm(
            Fraction(_eval(lo, env)) if lo is not None else None,
            Fraction(_eval(hi, env)) if hi is not None else None,
            bool(rng.get("lo_strict", False)),
            bool(rng.get("hi_strict", False)),
            False, tuple(raw["factors"]))

    # -- label machinery ----------------------------------------------------

    @cached_property
    def k_sigma(self) -> RootSystem:
        """Compact part of the subalgebra as one (possibly reducible) system."""
        simple = []
        for fac in self.structure_factors:
            simple.extend(fac.k_system.simple_roots)
        return self.ambient.rs.subsystem(simple, label=f"k^s({self.family})")

    def label(self, v: Vector) -> tuple:
        """Encode a restricted weight as factor pairings plus u(1) charges."""
        parts = []
        for fac in self.factors:
            if isinstance(fac, U1Factor):
                parts.append((self.ambient.rs.inner(v, fac.evec),))
            else:
                parts.append(fac.rs.pairings(v))
        return tuple(parts)

    def grade(self, v: Vector):
        g = self.ambient.zgrade(v) - self.ambient.zgrade(self.ambient.c_zeta)
        if g.denominator != 1:
            raise CatalogError(f"non-integral grade {g} for {v}")
        return int(g)

    def factor_weight(self, fac, coeffs: dict[int, Fraction]) -> Vector:
        """Weight vector from fundamental-weight coefficients of one factor."""
        if isinstance(fac, U1Factor):
            raise CatalogError("abelian factors carry charges, not weights")
        out = vzero(self.ambient.rs.dim)
        if fac.rs.rank == 0:
            # trivial factor: every named weight degenerates to zero
            return out
        for i, c in coeffs.items():
            if not 1 <= i <= fac.rs.rank:
                raise CatalogError(
                    f"weight index {i} out of range for {fac.name}")
            out = vadd(out, vscale(c, fac.fund_weight(i)))
        return out

    def charge_vector(self, fac: U1Factor, a) -> Vector:
        return vscale(Fraction(a) / fac.norm, fac.evec)

    # -- term evaluation ----------------------------------------------------

    def term_factor_data(self, term: SeriesTerm, k):
        """Evaluate a term instance into per-factor structured values.

        Returns a list aligned with self.factors; entries are
        ('L'|'F', weight vector), ('Ls', base, step), ('C', charge),
        ('Aq', ParabolicData, lam vector).
        """
        if len(term.factors) != len(self.factors):
            raise CatalogError("term factor count mismatch")
        out = []
        for fac, spec in zip(self.factors, term.factors):
            if "C" in spec:
                if not isinstance(fac, U1Factor):
                    raise CatalogError("charge on a non-abelian factor")
                a = Fraction(_eval(spec["C"], _scalar_env(self.params, k)))
                out.append(("C", a))
            elif "L" in spec or "F" in spec:
                kind = "L" if "L" in spec else "F"
                coeffs = eval_coeffs(spec[kind], self.params, k)
                out.append((kind, self.factor_weight(fac, coeffs)))
            elif "Ls" in spec:
                base = self.factor_weight(
                    fac, eval_coeffs(spec["Ls"]["base"], self.params, k))
                step = self.factor_weight(
                    fac, eval_coeffs(spec["Ls"]["step"], self.params, k))
                out.append(("Ls", base, step))
            elif "Aq" in spec:
                node = _eval(spec["Aq"]["node"], _scalar_env(self.params, k))
                lam = self.factor_weight(
                    fac, eval_coeffs(spec["Aq"]["lam"], self.params, k))
                out.append(("Aq", fac.parabolic(node), lam))
            else:
                raise CatalogError(f"unknown term factor spec {spec!r}")
        return out

    def term_lowest_vector(self, term: SeriesTerm, k) -> Vector:
        """Restricted weight of the formal lowest K-type of a term instance."""
        total = vzero(self.ambient.rs.dim)
        for fac, data in zip(self.factors, self.term_factor_data(term, k)):
            if data[0] == "C":
                total = vadd(total, self.charge_vector(fac, data[1]))
            elif data[0] in ("L", "F", "Ls"):
                total = vadd(total, data[1])
            else:  # Aq: lam + 2 rho(u cap p)
                pd, lam = data[1], data[2]
                total = vadd(total, vadd(lam, pd.two_rho_u_cap_p))
        return total

    def term_instances(self, term: SeriesTerm, max_grade: int):
        """Yield (k, base_grade) for instances with base grade <= max_grade."""
        if term.singleton:
            yield None, self.grade(self.term_lowest_vector(term, None))
            return

        def walk(k0, step):
            # base grade is eventually increasing in the walk direction, but
            # may dip first; stop only once above the cap and non-decreasing
            k = k0
            prev = None
            cap = abs(k0) + 8 * (max_grade + 2) + 64
            while True:
                if not term.contains(k):
                    return
                if abs(k) > cap:
                    raise CatalogError(
                        f"{self.family}: series index ran past {cap} without "
                        "the base grade exceeding the cut-off")
                g = self.grade(self.term_lowest_vector(term, k))
                if g <= max_grade:
                    yield k, g
                elif prev is not None and g >= prev:
                    return
                prev = g
                k += step

        up = term.k_start_ascending()
        down = term.k_start_descending()
        if up is not None:
            yield from walk(up, 1)
        elif down is not None:
            yield from walk(down, -1)
        else:
            # two-sided series over all integers
            yield from walk(0, 1)
            yield from walk(-1, -1)


# ---------------------------------------------------------------------------
# non-holomorphic records

class NonholRealization(PairRealization):
    """A non-holomorphic pair: folded involution, restricted subalgebra."""

    def __init__(self, record: dict, params: dict, ambient: HermitianSetting):
        variant = dict(record["structure"])
        super().__init__(record, variant, params, ambient, holomorphic=False)
        self.identification = record.get("identification")

    @cached_property
    def k_sigma_folded(self) -> RootSystem:
        """Fixed-part compact system from folding the ambient compact roots."""
        amb = self.ambient.rs
        seen: list[Vector] = []
        for r in amb.positive_roots:
            if self.ambient.zgrade(r) != 0:
                continue
            pr = self.restrict(r)
            if any(x != 0 for x in pr) and pr not in seen:
                seen.append(pr)
        return amb.subsystem(simple_subset(amb, seen),
                             label=f"k^s({self.family})")


# ---------------------------------------------------------------------------
# catalog loading

@dataclass
class FamilyRecord:
    raw: dict

    @property
    def id(self) -> str:
        return self.raw["id"]

    @property
    def params(self) -> list[str]:
        return self.raw.get("params", [])

    def check_params(self, params: dict) -> None:
        missing = [p for p in self.params if p not in params]
        extra = [p for p in params if p not in self.params]
        if missing or extra:
            raise CatalogError(
                f"{self.id}: expects parameters {self.params}, "
                f"got {sorted(params)}")
        env = _scalar_env(params)
        for c in self.raw.get("constraints", []):
            if not _eval(c, env):
                raise CatalogError(f"{self.id}: constraint failed: {c}")

    def select_variant(self, params: dict) -> dict:
        env = _scalar_env(params)
        for v in self.raw["variants"]:
            if _eval(v.get("when", "True"), env):
                return v
        raise CatalogError(f"{self.id}: no variant matches {params}")


def _ambient_setting(desc: str, params: dict) -> HermitianSetting:
    env = _scalar_env(params)
    if "{" in desc:
        import re
        name = re.sub(r"\{([^{}]+)\}",
                      lambda m: str(_eval(m.group(1), env)), desc)
    else:
        name = desc
    return setting(name)


class Catalog:
    def __init__(self, data: dict):
        self.version = data["version"]
        self.families = [FamilyRecord(r) for r in data["families"]]
        self.nonholomorphic = [FamilyRecord(r) for r in data["nonholomorphic"]]

    def find(self, family_id: str) -> FamilyRecord:
        for r in self.families + self.nonholomorphic:
            if r.id == family_id:
                return r
        raise CatalogError(f"unknown pair family {family_id!r}")

    def is_nonhol(self, family_id: str) -> bool:
        return any(r.id == family_id for r in self.nonholomorphic)

    def instantiate(self, family_id: str, **params) -> PairRealization:
        rec = self.find(family_id)
        rec.check_params(params)
        ambient = _ambient_setting(rec.raw["ambient"], params)
        if self.is_nonhol(family_id):
            return NonholRealization(rec.raw, params, ambient)
        variant = rec.select_variant(params)
        return PairRealization(rec.raw, variant, params, ambient)


def _records_checksum(data: dict) -> str:
    body = {k: v for k, v in data.items() if k != "checksum"}
    blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def load_catalog(path: str | Path | None = None) -> Catalog:
    p = Path(path) if path is not None else _DATA_PATH
    try:
        data = json.loads(p.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CatalogError(f"cannot read catalog data {p}: {exc}") from exc
    if data.get("version") != DATA_VERSION:
        raise CatalogError(
            f"catalog version {data.get('version')} != {DATA_VERSION}")
    want = data.get("checksum")
    got = _records_checksum(data)
    if want != got:
        raise CatalogError(
            f"catalog checksum mismatch: recorded {want}, computed {got}")
    return Catalog(data)
