"""Exact character arithmetic for finite dimensional representations.

Characters are plain dicts mapping weight tuples to integer multiplicities.
All computations are exact (Fraction); a character entry is always an int.

Weights may carry components outside the root span of the acting system
(central charges, spectator coordinates); all operations only ever inspect
pairings against the system's simple roots, so such components ride along
untouched.
"""

from __future__ import annotations

from fractions import Fraction

from .roots import RootSystem, Vector, vadd, vsub, vec


def weyl_dim(rs: RootSystem, lam: Vector) -> int:
    """Dimension of the irreducible with highest weight lam."""
    lam = vec(lam)
    rho = rs.rho
    num = Fraction(1)
    den = Fraction(1)
    lr = vadd(lam, rho)
    for a in rs.positive_roots:
        num *= rs.inner(lr, a)
        den *= rs.inner(rho, a)
    d = Fraction(num, den)
    if d.denominator != 1:
        raise ValueError("non-integral Weyl dimension; bad highest weight")
    return int(d)


def _check_hw(rs: RootSystem, lam: Vector) -> None:
    for i in range(rs.rank):
        p = rs.pairing(lam, i)
        if not isinstance(p, int) or p < 0:
            raise ValueError(f"not dominant integral for {rs.label or 'system'}: "
                             f"pairing {p} at node {i + 1}")


def dominant_support(rs: RootSystem, lam: Vector) -> list[Vector]:
    """Dominant weights of the irreducible with highest weight lam.

    Every dominant weight below lam is reachable from a higher one by
    subtracting a single positive root while staying dominant, so a BFS
    over positive-root subtractions finds them all.
    """
    lam = vec(lam)
    _check_hw(rs, lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in rs.positive_roots:
                nu = vsub(mu, a)
                if nu not in seen and rs.is_dominant(nu):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return sorted(seen)


class CharCache:
    """Memo for characters, keyed by system signature and highest weight.

    Dominant characters and fully expanded characters are cached
    separately; the latter dominate run time for the exceptional systems.
    """

    def __init__(self):
        self._store: dict[tuple[str, Vector], dict[Vector, int]] = {}
        self._full: dict[tuple[str, Vector], dict[Vector, int]] = {}

    def get(self, rs: RootSystem, lam: Vector):
        return self._store.get((rs.signature(), vec(lam)))

    def put(self, rs: RootSystem, lam: Vector, val) -> None:
        self._store[(rs.signature(), vec(lam))] = val

    def get_full(self, rs: RootSystem, lam: Vector):
        return self._full.get((rs.signature(), vec(lam)))

    def put_full(self, rs: RootSystem, lam: Vector, val) -> None:
        self._full[(rs.signature(), vec(lam))] = val


_global_cache = CharCache()

CACHE_FORMAT = 2


def load_disk_cache(path) -> int:
    """Merge a cache file written by save_disk_cache; returns entries loaded."""
    import pickle
    from pathlib import Path
    p = Path(path) / f"chars-v{CACHE_FORMAT}.pickle"
    if not p.exists():
        return 0
    with open(p, "rb") as fh:
        payload = pickle.load(fh)
    if payload.get("format") != CACHE_FORMAT:
        return 0
    _global_cache._store.update(payload["store"])
    _global_cache._full.update(payload.get("full", {}))
    return len(payload["store"]) + len(payload.get("full", {}))


def save_disk_cache(path) -> int:
    import pickle
    from pathlib import Path
    Path(path).mkdir(parents=True, exist_ok=True)
    p = Path(path) / f"chars-v{CACHE_FORMAT}.pickle"
    with open(p, "wb") as fh:
        pickle.dump({"format": CACHE_FORMAT, "store": _global_cache._store,
                     "full": _global_cache._full}, fh)
    return len(_global_cache._store) + len(_global_cache._full)


def dominant_character(rs: RootSystem, lam: Vector,
                       cache: CharCache | None = None) -> dict[Vector, int]:
    """Multiplicities of the dominant weights of the irrep with h.w. lam.

    Freudenthal recursion run over the dominant support only; weights hit
    by root shifts are folded back to the dominant chamber.
    """
    cache = cache or _global_cache
    hit = cache.get(rs, lam)
    if hit is not None:
        return hit
    lam = vec(lam)
    support = dominant_support(rs, lam)
    in_support = set(support)
    rho = rs.rho
    lr = vadd(lam, rho)
    top_norm = rs.inner(lr, lr)

    def level(mu):
        return rs.height(vsub(lam, mu))

    order = sorted(support, key=lambda m: (level(m), m))
    mult: dict[Vector, int] = {lam: 1}
    orbit_sizes: dict[Vector, int] = {}
    for mu in order:
        if mu == lam:
            continue
        acc = Fraction(0)
        for a in rs.positive_roots:
            j = 1
            while True:
                nu = vadd(mu, vec(tuple(j * x for x in a)))
                dom, _, _ = rs.to_dominant(nu)
                if dom not in in_support:
                    break
                m = mult.get(dom)
                if m is None:
                    raise RuntimeError("Freudenthal order violated")
                acc += m * rs.inner(nu, a)
                j += 1
        mr = vadd(mu, rho)
        den = top_norm - rs.inner(mr, mr)
        val = Fraction(2) * acc / den
        if val.denominator != 1:
            raise RuntimeError("non-integral Freudenthal multiplicity")
        mult[mu] = int(val)
    mult = {m: c for m, c in mult.items() if c > 0}
    cache.put(rs, lam, mult)
    return mult


def weight_multiplicity(rs: RootSystem, lam: Vector, mu: Vector) -> int:
    dom, _, _ = rs.to_dominant(vec(mu))
    return dominant_character(rs, lam).get(dom, 0)


def full_character(rs: RootSystem, lam: Vector) -> dict[Vector, int]:
    """All weights of the irrep with h.w. lam, by Weyl orbit expansion."""
    hit = _global_cache.get_full(rs, lam)
    if hit is not None:
        return hit
    out: dict[Vector, int] = {}
    for mu, c in dominant_character(rs, lam).items():
        for w in rs.weyl_orbit(mu):
            out[w] = c
    total = sum(out.values())
    expected = weyl_dim(rs, lam)
    if total != expected:
        raise RuntimeError(f"character size {total} != dimension {expected}")
    _global_cache.put_full(rs, vec(lam), out)
    return out


def character_dim(rs: RootSystem, char: dict[Vector, int]) -> int:
    return sum(char.values())


def add_char(a: dict, b: dict, coeff: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) + coeff * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def shift_char(char: dict, w: Vector) -> dict:
    return {vadd(k, w): v for k, v in char.items()}


def tensor_char(a: dict, b: dict) -> dict:
    out: dict[Vector, int] = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = vadd(k1, k2)
            out[k] = out.get(k, 0) + v1 * v2
    return out


def decompose_dominant(rs: RootSystem, char: dict[Vector, int],
                       cache: CharCache | None = None) -> list[tuple[Vector, int]]:
    """Decompose the dominant sector of a character into irreducibles.

    Input maps dominant weights to multiplicities (the full character is
    Weyl invariant, so the dominant sector determines it).  Repeatedly
    strips the highest remaining weight; raises if the input is not a
    nonnegative integral combination of irreducible characters.
    """
    work = {vec(k): v for k, v in char.items() if v}

    rho = rs.rho

    def key(w):
        # (., rho) is strictly positive on positive roots: max is maximal
        return rs.inner(w, rho), w

    out: list[tuple[Vector, int]] = []
    while work:
        w = max(work, key=key)
        c = work[w]
        if c < 0:
            raise ValueError(f"negative multiplicity {c} at {w}: not a character")
        _check_hw(rs, w)
        out.append((w, c))
        for mu, m in dominant_character(rs, w, cache).items():
            nv = work.get(mu, 0) - c * m
            if nv:
                work[mu] = nv
            else:
                work.pop(mu, None)
    return sorted(out)


def decompose_full(rs: RootSystem, char: dict[Vector, int]) -> list[tuple[Vector, int]]:
    """Decompose a full (Weyl invariant) character into irreducibles."""
    dom = {w: c for w, c in char.items() if rs.is_dominant(w)}
    terms = decompose_dominant(rs, dom)
    total = sum(c * weyl_dim(rs, w) for w, c in terms)
    if total != character_dim(rs, char):
        raise ValueError("dimension mismatch: input was not Weyl invariant")
    return terms


def branch(amb: RootSystem, sub: RootSystem, project, lam: Vector,
           check_dim: bool = True) -> list[tuple[Vector, int]]:
    """Restrict the ambient irrep with h.w. lam along the weight map project.

    project maps ambient weight vectors to the subalgebra's coordinate
    space (often the identity, or an averaging projector for folded
    involutions).  Returns the decomposition over sub.
    """
    restricted: dict[Vector, int] = {}
    for w, c in full_character(amb, lam).items():
        pw = vec(project(w))
        if sub.is_dominant(pw):
            restricted[pw] = restricted.get(pw, 0) + c
    terms = decompose_dominant(sub, restricted)
    if check_dim:
        total = sum(c * weyl_dim(sub, w) for w, c in terms)
        expected = weyl_dim(amb, lam)
        if total != expected:
            raise ValueError(f"branching loses dimensions: {total} != {expected}")
    return terms


def sym_power_characters(weights: list[tuple[Vector, int]],
                         max_degree: int,
                         dim: int | None = None) -> list[dict[Vector, int]]:
    """Characters of S^0..S^max_degree of a space with the given weights.

    weights: (weight, multiplicity) pairs of the underlying space.
    dim: coordinate dimension, needed when weights is empty.
    """
    if dim is None:
        if not weights:
            raise ValueError("dim is required for an empty weight list")
        dim = len(weights[0][0])
    table: list[dict[Vector, int]] = [{(0,) * dim: 1}] + [
        {} for _ in range(max_degree)]
    for w, m in weights:
        for _ in range(m):
            # multiply running product by 1/(1 - x^w) up to max_degree
            for d in range(1, max_degree + 1):
                prev = table[d - 1]
                cur = table[d]
                for k, v in prev.items():
                    kk = vadd(k, w)
                    cur[kk] = cur.get(kk, 0) + v
    return table
