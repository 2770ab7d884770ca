#!/usr/bin/env python3
"""Regenerate src/holobranch/data/pairs.json with a fresh checksum.

The branching catalog is data, not code: each record stores the subalgebra
factors as symbolic combinations of ambient simple roots and both forms of
the right-hand side (lowest-weight series and derived-functor series) as
k-indexed terms.  Editing the formulas here and rerunning keeps the
checksum in sync.
"""

import hashlib
import json
import sys
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "holobranch" / "data" / "pairs.json"


# -- small builders ---------------------------------------------------------

def L(*pairs):
    return {"L": [list(p) for p in pairs]}


def F(*pairs):
    return {"F": [list(p) for p in pairs]}


def C(expr):
    return {"C": expr}


def Aq(node, *pairs):
    return {"Aq": {"node": node, "lam": [list(p) for p in pairs]}}


def Ls(base, step):
    return {"Ls": {"base": [list(p) for p in base],
                   "step": [list(p) for p in step]}}


def term(rng, *facs):
    t = {"factors": list(facs)}
    if rng is not None:
        t["range"] = rng
    return t


def ge(lo):
    return {"lo": lo}


def lt(hi):
    return {"hi": hi, "hi_strict": True}


def window(lo, hi):
    return {"lo": lo, "hi": hi, "hi_strict": True}


TWO_SIDED = {}


def struct(name, roots, style=None):
    out = {"kind": "structure", "name": name, "roots": roots}
    if style:
        out["style"] = style
    return out


def u1(node):
    return {"kind": "u1", "node": node}


# -- holomorphic families ---------------------------------------------------

families = []

# su(m,n) -> su(p,q) + su(m-p,n-q) + u(1)
su_charge = "-k + frac(n*p - m*q, m + n)"
su_charge_cpt = "-k + frac(n*(p - m), m + n)"
families.append({
    "id": "su-su-su-u1",
    "ambient": "su({m},{n})",
    "subalgebra": "su(p,q)+su(m-p,n-q)+u(1)",
    "params": ["m", "n", "p", "q"],
    "constraints": ["m >= n", "n >= 1", "1 <= p <= m - 1", "1 <= q <= n"],
    "methods": {"proof": ["dual", "aq"]},
    "sigma": None,
    "variants": [
        {
            "when": "q <= n - 1",
            "factors": [
                struct("su(p,q)",
                       "[a(i) for i in range(1, p)] + [s(p, m + n - q)]"
                       " + [a(i + m + n - p - q) for i in range(p + 1, p + q)]"),
                struct("su(m-p,n-q)",
                       "[a(p + i) for i in range(1, m + n - p - q)]"),
                u1("p"),
            ],
            "L": [
                term(ge(0), L(["p", "1"], ["p + q - 1", "k"]),
                     L(["1", "k"], ["m - p", "1"]), C(su_charge)),
                term(ge(1), L(["1", "k"], ["p", "1"]),
                     L(["m - p", "1"], ["m + n - p - q - 1", "k"]),
                     C("k + frac(n*p - m*q, m + n)")),
            ],
            "Aq": [
                term(ge("frac(p - q, 2)"),
                     Aq("p + q - 1", ["p + q - 1", "k - p"]),
                     Aq(1, ["1", "k - (n - q)"]), C(su_charge)),
                term(window("frac((n - q) - (m - p), 2)", "frac(p - q, 2)"),
                     Aq(1, ["1", "-k - q"]),
                     Aq(1, ["1", "k - (n - q)"]), C(su_charge)),
                term(lt("frac((n - q) - (m - p), 2)"),
                     Aq(1, ["1", "-k - q"]),
                     Aq("m + n - p - q - 1",
                        ["m + n - p - q - 1", "-k - (m - p)"]),
                     C(su_charge)),
            ],
        },
        {
            "when": "q == n",
            "factors": [
                struct("su(p,q)",
                       "[a(i) for i in range(1, p)] + [s(p, m + n - q)]"
                       " + [a(i + m + n - p - q) for i in range(p + 1, p + q)]"),
                struct("su(m-p)",
                       "[a(p + i) for i in range(1, m + n - p - q)]"),
                u1("p"),
            ],
            "L": [
                term(ge(0), L(["p", "1"], ["p + q - 1", "k"]),
                     F(["1", "k"]), C(su_charge_cpt)),
            ],
            "Aq": [
                term(ge("max(frac(0), frac(p - q, 2))"),
                     Aq("p + q - 1", ["p + q - 1", "k - p"]),
                     F(["1", "k"]), C(su_charge_cpt)),
                term(window(0, "frac(p - q, 2)"),
                     Aq(1, ["1", "-k - q"]), F(["1", "k"]), C(su_charge_cpt)),
            ],
        },
    ],
})

# su(n,n) -> so*(2n)
families.append({
    "id": "su-sostar",
    "ambient": "su({n},{n})",
    "subalgebra": "so*(2n)",
    "params": ["n"],
    "constraints": ["n >= 2"],
    "methods": {"proof": ["dual", "aq"]},
    "sigma": {"perm": "2*n - i"},
    "variants": [{
        "factors": [
            struct("so*(2n)",
                   "[a(i) for i in range(1, n)] + [add(a(n - 1), a(n))]",
                   style="D"),
        ],
        "L": [term(ge(0), L(["1", "2*k"], ["n", "2"]))],
        "Aq": [term(ge(0), Aq(1, ["1", "2*k - (n - 2)"]))],
    }],
})

# su(n,n) -> sp(n,R)
families.append({
    "id": "su-sp",
    "ambient": "su({n},{n})",
    "subalgebra": "sp(n,R)",
    "params": ["n"],
    "constraints": ["n >= 2"],
    "methods": {"proof": ["dual"]},
    "sigma": {"perm": "2*n - i"},
    "variants": [{
        "factors": [struct("sp(n,R)", "[a(i) for i in range(1, n + 1)]")],
        "reducible_aq": True,
        "L": [
            term(None, L(["n", "1"])),
            term(None, L(["2", "1"], ["n", "1"])),
        ],
        "Aq": [term(None, Aq(1, ["1", "-n"]))],
    }],
})

# so(2,2n) -> su(1,n) + u(1)
families.append({
    "id": "so-even-u",
    "ambient": "so(2,{2*n})",
    "subalgebra": "su(1,n)+u(1)",
    "params": ["n"],
    "constraints": ["n >= 2"],
    "methods": {"proof": ["aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("su(1,n)", "[a(i) for i in range(1, n + 1)]"),
            u1("n + 1"),
        ],
        "L": [term(ge(0), L(["1", "n - 1"], ["2", "k"]),
                   C("k + frac(n - 1, 2)"))],
        "Aq": [term(ge(0), Aq(2, ["2", "k - 1"]), C("k + frac(n - 1, 2)"))],
    }],
})

# so(2,2n) -> so(2,m) + so(2n-m)
families.append({
    "id": "so-even-so-so",
    "ambient": "so(2,{2*n})",
    "subalgebra": "so(2,m)+so(2n-m)",
    "params": ["n", "m"],
    "constraints": ["n >= 2", "1 <= m <= 2*n - 1"],
    "methods": {"proof": ["fock"]},
    "sigma": None,
    "variants": [
        {
            "when": "m % 2 == 0 and m <= 2*n - 4",
            "factors": [
                struct("so(2,m)",
                       "[a(i) for i in range(1, m//2 + 1)]"
                       " + [add(a(m//2), sc(2, s(m//2 + 1, n - 1)),"
                       " a(n), a(n + 1))]", style="D"),
                struct("so(2n-m)",
                       "[a(i + m//2 + 1) for i in range(1, n - m//2 + 1)]",
                       style="D"),
            ],
            "L": [term(ge(0), L(["1", "n + k - 1"]), F(["1", "k"]))],
            "Aq": [term(ge(0), Aq(1, ["1", "n - m + k - 1"]), F(["1", "k"]))],
        },
        {
            "when": "m % 2 == 0 and m == 2*n - 2",
            "factors": [
                struct("so(2,2n-2)",
                       "[a(i) for i in range(1, n)]"
                       " + [add(a(n - 1), a(n), a(n + 1))]", style="D"),
                u1("n + 1"),
            ],
            "L": [term(TWO_SIDED, L(["1", "n + abs(k) - 1"]), C("k"))],
            "Aq": [term(TWO_SIDED, Aq(1, ["1", "-n + abs(k) + 1"]), C("k"))],
        },
        {
            "when": "m % 2 == 1 and m <= 2*n - 3",
            "sigma": {"perm": "i if i <= n - 1 else 2*n + 1 - i"},
            "factors": [
                struct("so(2,m)",
                       "[a(i) for i in range(1, (m - 1)//2 + 1)]"
                       " + [s((m + 1)//2, n)]", style="B"),
                struct("so(2n-m)",
                       "[a(i + (m + 1)//2) for i in range(1, n - (m - 1)//2)]",
                       style="B"),
            ],
            "L": [term(ge(0), L(["1", "n + k - 1"]), F(["1", "k"]))],
            "Aq": [term(ge(0), Aq(1, ["1", "n - m + k - 1"]), F(["1", "k"]))],
        },
        {
            "when": "m == 2*n - 1",
            "sigma": {"perm": "i if i <= n - 1 else 2*n + 1 - i"},
            "factors": [
                struct("so(2,2n-1)",
                       "[a(i) for i in range(1, n)] + [a(n)]", style="B"),
            ],
            "reducible_aq": True,
            "L": [
                term(None, L(["1", "n - 1"])),
                term(None, L(["1", "n"])),
            ],
            "Aq": [term(None, Aq("n", ["n", "-2"]))],
        },
    ],
})

# so(2,2n+1) -> so(2,m) + so(2n-m+1)
families.append({
    "id": "so-odd-so-so",
    "ambient": "so(2,{2*n + 1})",
    "subalgebra": "so(2,m)+so(2n-m+1)",
    "params": ["n", "m"],
    "constraints": ["n >= 1", "1 <= m <= 2*n"],
    "methods": {"proof": ["fock"]},
    "sigma": None,
    "variants": [
        {
            "when": "m % 2 == 0 and m <= 2*n - 2",
            "factors": [
                struct("so(2,m)",
                       "[a(i) for i in range(1, m//2 + 1)]"
                       " + [add(a(m//2), sc(2, s(m//2 + 1, n + 1)))]",
                       style="D"),
                struct("so(2n-m+1)",
                       "[a(i + m//2 + 1) for i in range(1, n - m//2 + 1)]",
                       style="B"),
            ],
            "L": [term(ge(0), L(["1", "n + k - frac(1, 2)"]), F(["1", "k"]))],
            "Aq": [term(ge(0), Aq(1, ["1", "n - m + k - frac(1, 2)"]),
                        F(["1", "k"]))],
        },
        {
            "when": "m % 2 == 0 and m == 2*n",
            "factors": [
                struct("so(2,2n)",
                       "[a(i) for i in range(1, n + 1)]"
                       " + [add(a(n), sc(2, a(n + 1)))]", style="D"),
            ],
            "L": [
                term(None, L(["1", "n - frac(1, 2)"])),
                term(None, L(["1", "n + frac(1, 2)"])),
            ],
            "Aq": [
                term(None, Aq(1, ["1", "-n - frac(1, 2)"])),
                term(None, Aq(1, ["1", "-n + frac(1, 2)"])),
            ],
        },
        {
            "when": "m % 2 == 1 and m <= 2*n - 3",
            "factors": [
                struct("so(2,m)",
                       "[a(i) for i in range(1, (m - 1)//2 + 1)]"
                       " + [s((m + 1)//2, n + 1)]", style="B"),
                struct("so(2n-m+1)",
                       "[a(i + (m + 1)//2)"
                       " for i in range(1, n - (m - 1)//2)]"
                       " + [add(a(n), sc(2, a(n + 1)))]", style="D"),
            ],
            "L": [term(ge(0), L(["1", "n + k - frac(1, 2)"]), F(["1", "k"]))],
            "Aq": [term(ge(0), Aq(1, ["1", "n - m + k - frac(1, 2)"]),
                        F(["1", "k"]))],
        },
        {
            "when": "m == 2*n - 1",
            "factors": [
                struct("so(2,2n-1)",
                       "[a(i) for i in range(1, n)] + [s(n, n + 1)]",
                       style="B"),
                u1("n + 1"),
            ],
            "L": [term(TWO_SIDED, L(["1", "n + abs(k) - frac(1, 2)"]),
                       C("k"))],
            "Aq": [term(TWO_SIDED, Aq(1, ["1", "-n + abs(k) + frac(1, 2)"]),
                        C("k"))],
        },
    ],
})

# so*(2n) -> su(m,n-m) + u(1)
families.append({
    "id": "sostar-su-u1",
    "ambient": "so*({2*n})",
    "subalgebra": "su(m,n-m)+u(1)",
    "params": ["n", "m"],
    "constraints": ["n >= 3", "1 <= m <= n - 1"],
    "methods": {"proof": ["dual", "aq"]},
    "sigma": None,
    "variants": [
        {
            "when": "2 <= m <= n - 2",
            "factors": [
                struct("su(m,n-m)",
                       "[a(i) for i in range(1, m)]"
                       " + [add(s(m, n - 2), a(n))]"
                       " + [a(m + n - i) for i in range(m + 1, n)]"),
                u1("m"),
            ],
            "L": [
                term(ge(0), L(["m", "2"], ["n - 2", "k"]),
                     C("-k - frac(n, 2) + m")),
                term(ge(1), L(["2", "k"], ["m", "2"]),
                     C("k - frac(n, 2) + m")),
            ],
            "Aq": [
                term(ge("m - frac(n, 2)"),
                     Aq("n - 2", ["n - 2", "k - m"]),
                     C("-k - frac(n, 2) + m")),
                term(lt("m - frac(n, 2)"),
                     Aq(2, ["2", "-k - (n - m)"]),
                     C("-k - frac(n, 2) + m")),
            ],
        },
        {
            "when": "m == 1",
            "factors": [
                struct("su(1,n-1)",
                       "[add(s(1, n - 2), a(n))]"
                       " + [a(n + 1 - i) for i in range(2, n)]"),
                u1(1),
            ],
            "L": [term(ge(0), L(["1", "2"], ["n - 2", "k"]),
                       C("-k - frac(n, 2) + 1"))],
            "Aq": [term(ge(0), Aq("n - 2", ["n - 2", "k - 1"]),
                        C("-k - frac(n, 2) + 1"))],
        },
        {
            "when": "m == n - 1",
            "factors": [
                struct("su(n-1,1)",
                       "[a(i) for i in range(1, n - 1)] + [a(n)]"),
                u1("n - 1"),
            ],
            "L": [term(ge(0), L(["2", "k"], ["n - 1", "2"]),
                       C("k + frac(n, 2) - 1"))],
            "Aq": [term(ge(0), Aq(2, ["2", "k - 1"]),
                        C("k + frac(n, 2) - 1"))],
        },
    ],
})

# so*(2n) -> so*(2m) + so*(2n-2m)
families.append({
    "id": "sostar-sostar",
    "ambient": "so*({2*n})",
    "subalgebra": "so*(2m)+so*(2n-2m)",
    "params": ["n", "m"],
    "constraints": ["n >= 4", "1 <= m <= n - 1"],
    "methods": {"proof": ["dual", "aq"]},
    "sigma": None,
    "variants": [
        {
            "when": "2 <= m <= n - 2",
            "factors": [
                struct("so*(2m)",
                       "[a(i) for i in range(1, m)]"
                       " + [add(a(m - 1), sc(2, s(m, n - 2)),"
                       " a(n - 1), a(n))]", style="D"),
                struct("so*(2n-2m)",
                       "[a(i + m) for i in range(1, n - m + 1)]", style="D"),
            ],
            "L": [term(ge(0), L(["1", "k"], ["m", "2"]),
                       L(["1", "k"], ["n - m", "2"]))],
            "Aq": [term(ge(0), Aq(1, ["1", "k - (m - 2)"]),
                        Aq(1, ["1", "k - (n - m - 2)"]))],
        },
        {
            "when": "m == 1",
            "factors": [
                u1(1),
                struct("so*(2n-2)", "[a(i + 1) for i in range(1, n)]",
                       style="D"),
            ],
            "L": [term(ge(0), C("k + 1"), L(["1", "k"], ["n - 1", "2"]))],
            "Aq": [term(ge(0), C("k + 1"), Aq(1, ["1", "k - (n - 3)"]))],
        },
        {
            "when": "m == n - 1",
            "factors": [
                struct("so*(2n-2)",
                       "[a(i) for i in range(1, n - 1)]"
                       " + [add(a(n - 2), a(n - 1), a(n))]", style="D"),
                u1("n"),
            ],
            "L": [term(ge(0), L(["1", "k"], ["n - 1", "2"]), C("k + 1"))],
            "Aq": [term(ge(0), Aq(1, ["1", "k - (n - 3)"]), C("k + 1"))],
        },
    ],
})

# sp(n,R) -> su(m,n-m) + u(1)
families.append({
    "id": "sp-su-u1",
    "ambient": "sp({n},R)",
    "subalgebra": "su(m,n-m)+u(1)",
    "params": ["n", "m"],
    "constraints": ["n >= 2", "1 <= m <= n - 1"],
    "methods": {"proof": ["dual", "aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("su(m,n-m)",
                   "[a(i) for i in range(1, m)] + [s(m, n)]"
                   " + [a(m + n - i) for i in range(m + 1, n)]"),
            u1("m"),
        ],
        "L": [
            term(ge(0), L(["m", "1"], ["n - 1", "2*k"]),
                 C("-k - frac(n, 4) + frac(m, 2)")),
            term(ge(1), L(["1", "2*k"], ["m", "1"]),
                 C("k - frac(n, 4) + frac(m, 2)")),
        ],
        "Aq": [
            term(ge("frac(2*m - n, 4)"),
                 Aq("n - 1", ["n - 1", "2*k - m"]),
                 C("-k - frac(n, 4) + frac(m, 2)")),
            term(lt("frac(2*m - n, 4)"),
                 Aq(1, ["1", "-2*k - (n - m)"]),
                 C("-k - frac(n, 4) + frac(m, 2)")),
        ],
    }],
})

# sp(n,R) -> sp(m,R) + sp(n-m,R)
families.append({
    "id": "sp-sp-sp",
    "ambient": "sp({n},R)",
    "subalgebra": "sp(m,R)+sp(n-m,R)",
    "params": ["n", "m"],
    "constraints": ["n >= 2", "1 <= m <= n - 1"],
    "methods": {"proof": ["dual"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("sp(m,R)",
                   "[a(i) for i in range(1, m)]"
                   " + [add(sc(2, s(m, n - 1)), a(n))]"),
            struct("sp(n-m,R)",
                   "[a(i + m) for i in range(1, n - m + 1)]"),
        ],
        "L": [
            term(None,
                 Ls([["m", "frac(1, 2)"]], [["1", "2"]]),
                 Ls([["n - m", "frac(1, 2)"]], [["1", "2"]])),
            term(None,
                 Ls([["1", "1"], ["m", "frac(1, 2)"]], [["1", "2"]]),
                 Ls([["1", "1"], ["n - m", "frac(1, 2)"]], [["1", "2"]])),
        ],
        "Aq": None,
    }],
})

# e6(-14) rows
families.append({
    "id": "e6-so28-u1",
    "ambient": "e6(-14)",
    "subalgebra": "so(2,8)+so(2)",
    "params": [],
    "constraints": [],
    "methods": {"proof": ["aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("so(2,8)", "[a(7 - i) for i in range(1, 6)]", style="D"),
            u1(1),
        ],
        "L": [term(ge(0), L(["1", "3"], ["5", "k"]), C("k + 2"))],
        "Aq": [term(ge(0), Aq(5, ["5", "k - 2"]), C("k + 2"))],
    }],
})

families.append({
    "id": "e6-su42-su2",
    "ambient": "e6(-14)",
    "subalgebra": "su(4,2)+su(2)",
    "params": [],
    "constraints": [],
    "methods": {"proof": ["aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("su(4,2)",
                   "[a(2), a(4), a(5), a(6),"
                   " add(a(1), a(2), sc(2, a(3)), sc(2, a(4)), a(5))]"),
            struct("su(2)", "[a(1)]"),
        ],
        "L": [term(ge(0), L(["3", "k"], ["4", "3"]), F(["1", "k"]))],
        "Aq": [term(ge(0), Aq(3, ["3", "k - 2"]), F(["1", "k"]))],
    }],
})

families.append({
    "id": "e6-sostar10-u1",
    "ambient": "e6(-14)",
    "subalgebra": "so*(10)+so(2)",
    "params": [],
    "constraints": [],
    "methods": {"proof": ["aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("so*(10)",
                   "[a(6 - i) for i in range(1, 4)]"
                   " + [a(1), add(a(2), a(4), a(5), a(6))]", style="D"),
            u1(2),
        ],
        "L": [
            term(ge(0), L(["5", "k + 3"]), C("k - 1")),
            term(ge(1), L(["4", "k"], ["5", "3"]), C("-k - 1")),
        ],
        "Aq": [
            term(ge(1), Aq(5, ["5", "k - 5"]), C("k - 1")),
            term(ge(0), Aq(4, ["4", "k - 3"]), C("-k - 1")),
        ],
    }],
})

families.append({
    "id": "e6-su51-sp1",
    "ambient": "e6(-14)",
    "subalgebra": "su(5,1)+sp(1,R)",
    "params": [],
    "constraints": [],
    "methods": {"proof": ["aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("su(5,1)", "[a(1)] + [a(i + 1) for i in range(2, 6)]"),
            struct("sp(1,R)",
                   "[lin([[1, 1], [2, 2], [2, 3], [3, 4], [2, 5], [1, 6]])]"),
        ],
        "L": [term(ge(0), L(["3", "k"], ["5", "3"]),
                   Ls([["1", "k + 3"]], [["1", "2"]]))],
        "Aq": [term(ge(0), Aq(3, ["3", "k - 1"]), Aq(1, ["1", "k + 1"]))],
    }],
})

# e7(-25) rows
families.append({
    "id": "e7-e6-u1",
    "ambient": "e7(-25)",
    "subalgebra": "e6(-14)+so(2)",
    "params": [],
    "constraints": [],
    "methods": {"proof": ["aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("e6(-14)",
                   "[a(6), a(3), a(5), a(4), a(2),"
                   " lin([[1, 1], [1, 3], [1, 4], [1, 5], [1, 6], [1, 7]])]"),
            u1(1),
        ],
        "L": [
            term(ge(0), L(["6", "k + 4"]), C("k - 2")),
            term(ge(1), L(["1", "k"], ["6", "4"]), C("-k - 2")),
        ],
        "Aq": [
            term(ge(2), Aq(6, ["6", "k - 8"]), C("k - 2")),
            term(ge(-1), Aq(1, ["1", "k - 4"]), C("-k - 2")),
        ],
    }],
})

families.append({
    "id": "e7-so210-sp1",
    "ambient": "e7(-25)",
    "subalgebra": "so(2,10)+sp(1,R)",
    "params": [],
    "constraints": [],
    "methods": {"proof": ["aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("so(2,10)", "[a(8 - i) for i in range(1, 7)]"),
            struct("sp(1,R)",
                   "[lin([[2, 1], [2, 2], [3, 3], [4, 4],"
                   " [3, 5], [2, 6], [1, 7]])]"),
        ],
        "L": [term(ge(0), L(["1", "4"], ["5", "k"]),
                   Ls([["1", "k + 4"]], [["1", "2"]]))],
        "Aq": [term(ge(0), Aq(5, ["5", "k - 2"]), Aq(1, ["1", "k + 2"]))],
    }],
})

families.append({
    "id": "e7-su62",
    "ambient": "e7(-25)",
    "subalgebra": "su(6,2)",
    "params": [],
    "constraints": [],
    "methods": {"proof": ["aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("su(6,2)",
                   "[a(1)] + [a(i + 1) for i in range(2, 7)]"
                   " + [lin([[1, 1], [2, 2], [2, 3], [3, 4],"
                   " [2, 5], [1, 6]])]"),
        ],
        "L": [term(ge(0), L(["4", "k"], ["6", "4"]))],
        "Aq": [term(ge(0), Aq(4, ["4", "k - 2"]))],
    }],
})

families.append({
    "id": "e7-sostar12-su2",
    "ambient": "e7(-25)",
    "subalgebra": "so*(12)+su(2)",
    "params": [],
    "constraints": [],
    "methods": {"proof": ["aq"]},
    "sigma": None,
    "variants": [{
        "factors": [
            struct("so*(12)",
                   "[a(7 - i) for i in range(1, 5)]"
                   " + [a(1), add(a(2), a(4), a(5), a(6), a(7))]"),
            struct("su(2)",
                   "[lin([[1, 1], [2, 2], [2, 3], [3, 4], [2, 5], [1, 6]])]"),
        ],
        "L": [term(ge(0), L(["5", "k"], ["6", "4"]), F(["1", "k"]))],
        "Aq": [term(ge(0), Aq(5, ["5", "k - 4"]), F(["1", "k"]))],
    }],
})

# -- non-holomorphic pairs --------------------------------------------------

nonholomorphic = [
    {
        "id": "nonhol-su-sp",
        "ambient": "su({2*m},{2*n})",
        "subalgebra": "sp(m,n)",
        "params": ["m", "n"],
        "constraints": ["m >= n", "n >= 1"],
        "methods": {"proof": ["borel-weil"]},
        "sigma": {"images":
                  "(2*m - i) if i <= 2*m - 1 else"
                  " ('minus_beta' if i == 2*m else 4*m + 2*n - i)"},
        "structure": {
            "factors": [
                struct("sp(m,n)",
                       "[a(i) for i in range(1, m)] + [s(m, 2*m)]"
                       " + [a(2*m + i) for i in range(1, n)] + [a(2*m + n)]"),
            ],
            "theta_minus": ["m"],
        },
        "identification": {
            "kind": "aq",
            "forms": [{"node": 1, "lam": [["1", "-2*n"]]}],
            "orbit_pairs": [[
                {"coeffs": [["2*n", "1"]], "rho": -1},
                {"coeffs": [["1", "-2*n"]], "rho": 1},
            ]],
            "string": [["1", "k"], ["m + 1", "k"], ["m", "-k"]],
        },
    },
    {
        "id": "nonhol-so-even",
        "ambient": "so(2,{2*n})",
        "subalgebra": "so(1,2n)",
        "params": ["n"],
        "constraints": ["n >= 2"],
        "methods": {"proof": ["harmonics"]},
        "sigma": {"images": "'minus_beta' if i == 1 else i"},
        "structure": {
            "factors": [
                struct("so(1,2n)",
                       "[a(i + 1) for i in range(1, n)]"
                       " + [add(s(1, n - 1), a(n + 1))]"),
            ],
            "theta_minus": ["n"],
        },
        "identification": {
            "kind": "aq",
            "forms": [
                {"node": 1, "lam": [["1", "-(n - 1)"]]},
                {"node": "n", "lam": [["n", "-2"]]},
            ],
            "orbit_pairs": [[
                {"coeffs": [["1", "-(n - 1)"]], "rho": 1},
                {"coeffs": [["n", "-2"]], "rho": 1},
            ]],
        },
    },
    {
        "id": "nonhol-so-odd",
        "ambient": "so(2,{2*n + 1})",
        "subalgebra": "so(1,2n+1)",
        "params": ["n"],
        "constraints": ["n >= 1"],
        "methods": {"proof": ["harmonics"]},
        "sigma": {"images": "'minus_beta' if i == 1 else i"},
        "structure": {
            "factors": [
                struct("so(2n+1)",
                       "[a(i + 1) for i in range(1, n + 1)]"),
            ],
            "theta_minus": [],
        },
        "identification": {
            "kind": "rank_defect",
            "harmonic_N": "2*n + 1",
        },
    },
    {
        "id": "nonhol-sp-spc",
        "ambient": "sp({2*n},R)",
        "subalgebra": "sp(n,C)",
        "params": ["n"],
        "constraints": ["n >= 1"],
        "methods": {"proof": ["borel-weil"]},
        "sigma": {"images":
                  "(2*n - i) if i <= 2*n - 1 else 'minus_beta'"},
        "structure": {
            "factors": [
                struct("sp(n)", "[a(i) for i in range(1, n + 1)]"),
            ],
            "theta_minus": [],
        },
        "identification": {
            "kind": "metaplectic_even",
        },
    },
    {
        "id": "nonhol-e6-f4",
        "ambient": "e6(-14)",
        "subalgebra": "f4(-20)",
        "params": [],
        "constraints": [],
        "methods": {"proof": ["borel-weil"]},
        "sigma": {"images":
                  "{1: 1, 2: 5, 3: 3, 4: 4, 5: 2}.get(i, 'minus_beta')"},
        "structure": {
            "factors": [
                struct("f4(-20)",
                       "[a(3), a(4), a(5),"
                       " lin([[1, 1], [1, 3], [1, 4], [1, 5], [1, 6]])]"),
            ],
            "theta_minus": ["4"],
        },
        "identification": {
            "kind": "aq",
            "forms": [{"node": 1, "lam": [["1", "-2"]]}],
        },
    },
]


def main():
    data = {
        "version": 1,
        "families": families,
        "nonholomorphic": nonholomorphic,
    }
    body = {k: v for k, v in data.items() if k != "checksum"}
    blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
    data["checksum"] = hashlib.sha256(blob.encode()).hexdigest()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT} ({OUT.stat().st_size} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
