"""Command line front end.

Subcommands: list (catalog families), verify (grade-by-grade checks),
ktypes (ambient K-type strings), blattner (derived-functor expansions),
seesaw (dual-pair series).  Output formats: human, json, latex.  Flags
mirror the HOLOBRANCH_* environment variables.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import Catalog, CatalogError, _eval, _scalar_env, load_catalog
from .chars import load_disk_cache, save_disk_cache, weyl_dim
from .hermitian import setting
from .parabolic import aq_ktypes
from .roots import set_weyl_cap
from .seesaw import SeesawConfig, ambient_coords, derive_branching, h2_character
from .verify import (verify_nonhol_identification,
                     verify_nonhol_irreducibility, verify_pair)


# ---------------------------------------------------------------------------
# configuration

@dataclass
class RunConfig:
    command: str
    pairs: list = field(default_factory=list)
    all: bool = False
    max_grade: int | None = None
    fmt: str = "human"
    cache_dir: str | None = None
    threads: int = 1
    weyl_cap: int | None = None
    ambient: str | None = None
    g: str | None = None
    term: int = 0
    k: int = 0
    depth: int = 3
    seesaw_config: str | None = None
    seesaw_params: str | None = None
    count: int = 5
    catalog_path: str | None = None


def _env(name: str, default=None):
    return os.environ.get(f"HOLOBRANCH_{name}", default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="holobranch")
    ap.add_argument("--format", choices=["human", "json", "latex"],
                    default=_env("FORMAT", "human"))
    ap.add_argument("--cache-dir", default=_env("CACHE_DIR"))
    ap.add_argument("--threads", type=int, default=int(_env("THREADS", "1")))
    ap.add_argument("--weyl-cap", type=int,
                    default=(int(_env("WEYL_CAP")) if _env("WEYL_CAP") else None))
    ap.add_argument("--catalog", default=_env("CATALOG"))
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="catalog families")
    p.add_argument("--ambient", help="substring filter on the ambient name")

    p = sub.add_parser("verify", help="run branching verifications")
    p.add_argument("--pair", action="append", default=[],
                   help="family id with params (su-sp:n=2) or names "
                        "(su(2,2):sp(2,R))")
    p.add_argument("--all", action="store_true",
                   help="run the whole acceptance matrix")
    p.add_argument("--max-grade", type=int,
                   default=(int(_env("MAX_GRADE")) if _env("MAX_GRADE")
                            else None))

    p = sub.add_parser("ktypes", help="ambient K-type string")
    p.add_argument("--g", required=True, help="ambient name, e.g. sp(2,R)")
    p.add_argument("--max-grade", type=int, default=4)

    p = sub.add_parser("blattner", help="derived-functor K-type expansion")
    p.add_argument("--pair", action="append", default=[], required=True)
    p.add_argument("--term", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--depth", type=int, default=3)

    p = sub.add_parser("seesaw", help="dual-pair branching series")
    p.add_argument("--config", required=True,
                   help="umn-u1 (alias u) or sostar-sp1 (alias sostar)")
    p.add_argument("--params", required=True,
                   help="m,n,p,q for u; n,m for sostar")
    p.add_argument("--count", type=int, default=5)
    return ap


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command, fmt=ns.format,
                    cache_dir=ns.cache_dir, threads=max(1, ns.threads),
                    weyl_cap=ns.weyl_cap, catalog_path=ns.catalog)
    for name in ("pair", "all", "max_grade", "ambient", "g", "term", "k",
                 "depth", "count"):
        if hasattr(ns, name):
            setattr(cfg, "pairs" if name == "pair" else name,
                    getattr(ns, name))
    if ns.command == "seesaw":
        cfg.seesaw_config = ns.config
        cfg.seesaw_params = ns.params
    return cfg


# ---------------------------------------------------------------------------
# pair selectors

_MAX_BRUTE = 8


def _display_name(template: str, params: dict) -> str:
    env = _scalar_env(params)
    out = re.sub(r"\{([^{}]+)\}", lambda m: str(_eval(m.group(1), env)),
                 template)

    def repl(m):
        tok = re.sub(r"(\d)([a-z])", r"\1*\2", m.group(0))
        try:
            return str(_eval(tok, env))
        except Exception:
            return m.group(0)

    return re.sub(r"[a-z0-9\- ]+", repl, out)


def _norm(s: str) -> str:
    return re.sub(r"[\s]", "", s)


def resolve_selector(cat: Catalog, sel: str) -> tuple[str, dict]:
    """'family:key=val,...' or 'ambient:subalgebra' -> (family id, params)."""
    if "=" in sel or ":" not in sel:
        fam, _, tail = sel.partition(":")
        rec = cat.find(fam)
        params = {}
        for piece in filter(None, tail.split(",")):
            key, _, val = piece.partition("=")
            params[key.strip()] = int(val)
        return rec.id, params
    want = _norm(sel)
    for rec in cat.families + cat.nonholomorphic:
        names = rec.params
        space = [range(1, _MAX_BRUTE)] * len(names)
        for combo in itertools.product(*space):
            params = dict(zip(names, combo))
            try:
                rec.check_params(params)
            except CatalogError:
                continue
            shown = (_display_name(rec.raw["ambient"], params) + ":"
                     + _display_name(rec.raw["subalgebra"], params))
            if _norm(shown) == want:
                return rec.id, params
    raise CatalogError(f"no catalog family matches selector {sel!r}")


# ---------------------------------------------------------------------------
# acceptance matrix

ACCEPTANCE_MATRIX = [
    ("su-su-su-u1", {"m": 2, "n": 2, "p": 1, "q": 1}),
    ("su-su-su-u1", {"m": 3, "n": 2, "p": 1, "q": 1}),
    ("su-su-su-u1", {"m": 2, "n": 2, "p": 1, "q": 2}),
    ("su-sostar", {"n": 2}),
    ("su-sostar", {"n": 3}),
    ("su-sp", {"n": 2}),
    ("su-sp", {"n": 3}),
    ("so-even-u", {"n": 2}),
    ("so-even-u", {"n": 3}),
    ("so-even-so-so", {"n": 3, "m": 2}),
    ("so-even-so-so", {"n": 2, "m": 1}),
    ("so-odd-so-so", {"n": 2, "m": 2}),
    ("so-odd-so-so", {"n": 2, "m": 1}),
    ("sostar-su-u1", {"n": 4, "m": 1}),
    ("sostar-su-u1", {"n": 4, "m": 2}),
    ("sostar-sostar", {"n": 4, "m": 2}),
    ("sp-su-u1", {"n": 2, "m": 1}),
    ("sp-sp-sp", {"n": 3, "m": 1}),
    ("e6-so28-u1", {}),
    ("e6-su42-su2", {}),
    ("e6-sostar10-u1", {}),
    ("e6-su51-sp1", {}),
    ("e7-e6-u1", {}),
    ("e7-so210-sp1", {}),
    ("e7-su62", {}),
    ("e7-sostar12-su2", {}),
    ("nonhol-su-sp", {"m": 1, "n": 1}),
    ("nonhol-su-sp", {"m": 2, "n": 1}),
    ("nonhol-so-odd", {"n": 1}),
    ("nonhol-so-even", {"n": 2}),
    ("nonhol-sp-spc", {"n": 1}),
    ("nonhol-e6-f4", {}),
]


def default_max_grade(cat: Catalog, family: str, params: dict) -> int:
    rec = cat.find(family)
    amb = _display_name(rec.raw["ambient"], params)
    if amb.startswith("e7"):
        return 3
    if family == "nonhol-e6-f4":
        return 3
    if amb.startswith("su"):
        m = re.match(r"su\((\d+),(\d+)\)", amb)
        if m and int(m.group(1)) + int(m.group(2)) >= 8:
            return 2
    if family.startswith("nonhol"):
        return 5
    return 4


# ---------------------------------------------------------------------------
# output helpers

def _frac_str(x) -> str:
    return str(x)


def _label_str(pr, lab) -> str:
    parts = []
    for fac, part in zip(pr.factors, lab):
        if hasattr(fac, "rs"):
            parts.append("(" + ",".join(map(_frac_str, part)) + ")")
        else:
            parts.append("C_" + _frac_str(part[0]))
    return " x ".join(parts)


_GREEK = ["\\mu", "\\nu", "\\xi"]


def _label_latex(pr, lab) -> str:
    parts = []
    si = 0
    for fac, part in zip(pr.factors, lab):
        if hasattr(fac, "rs"):
            sym = _GREEK[min(si, len(_GREEK) - 1)]
            si += 1
            terms = [f"{c if c != 1 else ''}{sym}_{{{i + 1}}}"
                     for i, c in enumerate(part) if c != 0]
            parts.append("F(" + ("+".join(terms) or "0") + ")")
        else:
            parts.append(f"\\mathbb{{C}}_{{{part[0]}}}")
    return " \\boxtimes ".join(parts)


def _weight_latex(pairs, sym="\\omega") -> str:
    terms = [f"{c if c != 1 else ''}{sym}_{{{i + 1}}}"
             for i, c in enumerate(pairs) if c != 0]
    return "+".join(terms) or "0"


class Writer:
    """Serialized line output; one writer regardless of worker count."""

    def __init__(self, stream=None):
        self.stream = stream or sys.stdout
        import threading
        self._lock = threading.Lock()

    def line(self, s=""):
        with self._lock:
            print(s, file=self.stream)


# ---------------------------------------------------------------------------
# subcommands

def cmd_list(cfg: RunConfig, cat: Catalog, out: Writer) -> int:
    rows = []
    seen_so = False
    for rec in cat.families:
        amb = re.sub(r"[{}*]", "", rec.raw["ambient"])
        if cfg.ambient and cfg.ambient not in amb:
            continue
        proof = rec.raw.get("methods", {}).get("proof", [])
        rows.append({
            "id": rec.id, "ambient": amb,
            "subalgebra": rec.raw["subalgebra"],
            "params": rec.params,
            "constraints": rec.raw.get("constraints", []),
            "dual_pair": "dual" in proof, "aq": "aq" in proof,
            "fock": "fock" in proof, "kind": "holomorphic",
        })
    for rec in cat.nonholomorphic:
        amb = re.sub(r"[{}*]", "", rec.raw["ambient"])
        if cfg.ambient and cfg.ambient not in amb:
            continue
        if rec.id.startswith("nonhol-so-"):
            if seen_so:
                continue  # odd and even parity share one table row
            seen_so = True
            amb = "so(2,n)"
            sub = "so(1,n)"
        else:
            sub = rec.raw["subalgebra"]
        ident = rec.raw.get("identification") or {}
        rows.append({
            "id": rec.id, "ambient": amb, "subalgebra": sub,
            "params": rec.params,
            "constraints": rec.raw.get("constraints", []),
            "identification": ident.get("kind"), "kind": "nonholomorphic",
        })
    if cfg.fmt == "json":
        out.line(json.dumps({"schema_version": 1, "rows": rows}, indent=2))
        return 0
    if cfg.fmt == "latex":
        out.line("\\begin{tabular}{llll}")
        for r in rows:
            out.line(f"{r['ambient']} & {r['subalgebra']} & {r['kind']} & "
                     f"{','.join(r['params'])} \\\\")
        out.line("\\end{tabular}")
        return 0
    for r in rows:
        flags = []
        for key in ("dual_pair", "aq", "fock"):
            if r.get(key):
                flags.append(key)
        if r.get("identification"):
            flags.append(f"ident={r['identification']}")
        out.line(f"{r['id']:18s} {r['ambient']:14s} -> "
                 f"{r['subalgebra']:28s} [{' '.join(flags)}]"
                 + (f"  params {','.join(r['params'])}" if r["params"] else ""))
    return 0


def _run_one(cat: Catalog, family: str, params: dict, max_grade: int):
    pr = cat.instantiate(family, **params)
    if cat.is_nonhol(family):
        rep = verify_nonhol_irreducibility(pr, max_grade)
        if pr.identification:
            rep2 = verify_nonhol_identification(pr, max_grade)
            rep.methods.update(rep2.methods)
            if not rep2.passed:
                rep.methods["identification"] = False
        return rep
    return verify_pair(pr, max_grade)


def cmd_verify(cfg: RunConfig, cat: Catalog, out: Writer) -> int:
    jobs = []
    if cfg.all:
        for family, params in ACCEPTANCE_MATRIX:
            mg = (cfg.max_grade if cfg.max_grade is not None
                  else default_max_grade(cat, family, params))
            jobs.append((family, params, mg))
    for sel in cfg.pairs:
        family, params = resolve_selector(cat, sel)
        mg = (cfg.max_grade if cfg.max_grade is not None
              else default_max_grade(cat, family, params))
        jobs.append((family, params, mg))
    if not jobs:
        out.line("nothing selected; use --pair or --all")
        return 2

    results = []

    def run(job):
        family, params, mg = job
        t0 = time.monotonic()
        try:
            rep = _run_one(cat, family, params, mg)
            err = None
        except Exception as exc:  # report and keep going
            rep, err = None, str(exc)
        dt = time.monotonic() - t0
        entry = (family, params, mg, rep, err, dt)
        if cfg.fmt == "human":
            status = ("ERROR " + err if err else
                      ("pass" if rep.passed else "FAIL"))
            out.line(f"{family} {params} grade<={mg}: {status} ({dt:.1f}s)")
        return entry

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as ex:
            results = list(ex.map(run, jobs))
    else:
        results = [run(j) for j in jobs]

    ok = all(err is None and rep.passed for _, _, _, rep, err, _ in results)
    if cfg.fmt == "json":
        out.line(json.dumps({
            "schema_version": 1,
            "reports": [rep.to_json() if rep else {"error": err,
                                                   "pair": {"family": f,
                                                            "params": p}}
                        for f, p, _, rep, err, _ in results],
            "passed": ok,
        }, indent=2))
    elif cfg.fmt == "latex":
        for f, p, mg, rep, err, _ in results:
            s = "\\checkmark" if (rep and rep.passed) else "\\times"
            out.line(f"\\texttt{{{f}}} & {p} & {mg} & {s} \\\\")
    else:
        out.line("")
        out.line(f"{sum(1 for *_, rep, err, _ in results if err is None and rep.passed)}"
                 f"/{len(results)} verified")
    return 0 if ok else 1


def cmd_ktypes(cfg: RunConfig, cat: Catalog, out: Writer) -> int:
    amb = setting(cfg.g)
    rows = []
    for k, hw in amb.ktype_string(cfg.max_grade if cfg.max_grade is not None
                                 else 4):
        rows.append({"k": k,
                     "weight": [str(x) for x in amb.rs.pairings(hw)],
                     "dim": weyl_dim(amb.k_system, hw)})
    if cfg.fmt == "json":
        out.line(json.dumps({"schema_version": 1, "g": amb.name,
                             "rows": rows}, indent=2))
    elif cfg.fmt == "latex":
        out.line("\\begin{align*}")
        for r in rows:
            pairs = [Fraction(x) for x in r["weight"]]
            out.line(f"c\\zeta + {r['k']}\\beta &= "
                     f"{_weight_latex(pairs)} \\\\")
        out.line("\\end{align*}")
    else:
        for r in rows:
            out.line(f"k={r['k']}: weight ({', '.join(r['weight'])})"
                     f"  dim {r['dim']}")
    return 0


def cmd_blattner(cfg: RunConfig, cat: Catalog, out: Writer) -> int:
    family, params = resolve_selector(cat, cfg.pairs[0])
    pr = cat.instantiate(family, **params)
    if pr.Aq_terms is None:
        raise CatalogError(f"{family} has no derived-functor series")
    term = pr.Aq_terms[cfg.term]
    data = pr.term_factor_data(term, cfg.k)
    rows = []
    for fac, d in zip(pr.factors, data):
        if d[0] != "Aq":
            continue
        _, pd, lam = d
        kt, shortcut = aq_ktypes(pd, lam, cfg.depth)
        for (deg, mu), mult in sorted(kt.items()):
            rows.append({"factor": fac.name, "degree": deg,
                         "weight": [str(x) for x in fac.rs.pairings(mu)],
                         "mult": mult})
    if cfg.fmt == "json":
        out.line(json.dumps({"schema_version": 1, "pair": family,
                             "k": cfg.k, "rows": rows}, indent=2))
    elif cfg.fmt == "latex":
        out.line("\\begin{align*}")
        for r in rows:
            pairs = [Fraction(x) for x in r["weight"]]
            out.line(f"S^{{{r['degree']}}}:\\ & {r['mult']}\\cdot "
                     f"F({_weight_latex(pairs, chr(92) + 'mu')}) \\\\")
        out.line("\\end{align*}")
    else:
        for r in rows:
            out.line(f"{r['factor']} deg {r['degree']}: "
                     f"({', '.join(r['weight'])}) x{r['mult']}")
    return 0


def cmd_seesaw(cfg: RunConfig, cat: Catalog, out: Writer) -> int:
    kind = {"u": "u", "umn-u1": "u",
            "sostar": "sostar", "sostar-sp1": "sostar"}.get(cfg.seesaw_config)
    if kind is None:
        raise CatalogError(f"unknown seesaw config {cfg.seesaw_config!r}")
    nums = [int(x) for x in cfg.seesaw_params.split(",")]
    if kind == "u":
        sc = SeesawConfig("u", *nums)
    else:
        n, m = nums
        sc = SeesawConfig("sostar", m, n)
    rows = []
    for k, facs in derive_branching(sc, cfg.count):
        rho = h2_character(sc, k)
        rows.append({
            "k": k,
            "h2_powers": [str(x) for x in rho.powers],
            "factors": [[str(x) for x in w] for w in facs],
            "ambient": [[str(x) for x in ambient_coords(sc, w)] for w in facs],
        })
    if cfg.fmt == "json":
        out.line(json.dumps({"schema_version": 1, "config": kind,
                             "rows": rows}, indent=2))
    elif cfg.fmt == "latex":
        for r in rows:
            ws = ", ".join("(" + ",".join(w) + ")" for w in r["factors"])
            out.line(f"k={r['k']}:\\ \\theta \\mapsto {ws} \\\\")
    else:
        for r in rows:
            ws = " x ".join("(" + ",".join(w) + ")" for w in r["factors"])
            out.line(f"k={r['k']}: H2 powers ({','.join(r['h2_powers'])}) "
                     f"-> {ws}")
    return 0


# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    cfg = parse_config(argv if argv is not None else sys.argv[1:])
    out = Writer()
    set_weyl_cap(cfg.weyl_cap)
    if cfg.cache_dir:
        load_disk_cache(cfg.cache_dir)
    try:
        cat = load_catalog(cfg.catalog_path)
        handler = {"list": cmd_list, "verify": cmd_verify,
                   "ktypes": cmd_ktypes, "blattner": cmd_blattner,
                   "seesaw": cmd_seesaw}[cfg.command]
        rc = handler(cfg, cat, out)
    except (CatalogError, ValueError) as exc:
        out.line(f"error: {exc}")
        return 2
    finally:
        if cfg.cache_dir:
            try:
                save_disk_cache(cfg.cache_dir)
            except OSError:
                pass
        set_weyl_cap(None)
    return rc


if __name__ == "__main__":
    sys.exit(main())
