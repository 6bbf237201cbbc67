"""Command-line front end: construct, analyze, table, export, equiv, girth.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch or
violated bound, 3 distance left uncertified (budget exhausted) with --strict.
"""

from __future__ import annotations

import argparse
import json
import operator
import os
import re
import sys
import time
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from . import analysis, binmat, codes, construct, equiv, gf, hqc
from .binmat import BinaryMatrix
from .codes import EvalCode

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- field, points and codes -------------------------------------------------------

def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def field_from_args(a) -> gf.FieldSpec:
    mod = _int_list(a.modulus) if a.modulus else None
    if a.q is not None:
        if a.p is not None or a.r is not None:
            p, r = gf.prime_power(a.q)
            if (a.p or p, a.r or r) != (p, r):
                raise UsageError(f"--q {a.q} disagrees with --p/--r")
        return gf.field_of_order(a.q, mod)
    if a.p is None:
        raise UsageError("give the field with --q or --p/--r")
    return gf.field_new(a.p, a.r or 1, mod)


def parse_points(f: gf.FieldSpec, spec: str | None, n: int | None) -> list[int]:
    """"all", "nonzero", "power" (alpha^0..alpha^(n-1)) or a comma list.

    Without a specifier, n = q (or no n) means all elements and n < q means
    "power", the convention that reproduces the parameter table.
    """
    if spec is None:
        spec = "all" if n is None or n == f.q else "power"
    if spec == "all":
        pts = list(range(f.q))
    elif spec == "nonzero":
        pts = list(range(1, f.q))
    elif spec == "power":
        if n is None:
            raise UsageError("--points power needs --n")
        pts = [int(x) for x in f.power_order[1:]]
    else:
        pts = [gf.index_of(f, gf.parse_element(f, t)) for t in spec.split(",") if t.strip()]
        if n is not None and n != len(pts):
            raise UsageError(f"--n {n} but {len(pts)} points given")
        return pts
    if n is not None:
        if n > len(pts):
            raise UsageError(f"--n {n} exceeds the {len(pts)} available points")
        pts = pts[:n]
    return pts


def code_from_args(a, f: gf.FieldSpec | None = None) -> EvalCode:
    if a.kind == "generic":
        if not a.generator:
            raise UsageError("generic codes need --generator FILE")
        fld = f
        if fld is None and (a.q is not None or a.p is not None):
            fld = field_from_args(a)
        return codes.read_generator(Path(a.generator), fld)
    f = f or field_from_args(a)
    if a.kind == "rs":
        if a.k is None:
            raise UsageError("rs codes need --k")
        return codes.rs_code(f, parse_points(f, a.points, a.n), a.k)
    if a.kind == "rm":
        if a.m is None or a.rho is None:
            raise UsageError("rm codes need --m and --rho")
        return codes.rm_code(f, a.m, a.rho)
    raise UsageError(f"unknown code kind {a.kind!r}")


def describe(c: EvalCode) -> str:
    return f"[{c.n},{c.k}]_{c.q}" if c.kind != "rm" else f"RM(q={c.q}, m={c.m}, rho={c.rho})"


# -- matrix files ---------------------------------------------------------------------

def read_matrix(path: str) -> BinaryMatrix:
    """Dense text or alist, told apart by the second line."""
    p = Path(path)
    lines = p.read_text().strip().splitlines()
    if len(lines) > 1 and re.fullmatch(r"[01]+", lines[1].strip() or "x") and \
            len(lines[0].split()) == 2 and len(lines) == int(lines[0].split()[0]) + 1:
        return binmat.read_dense(p)
    return binmat.read_alist(p)


def write_matrix(H: BinaryMatrix, path: str, fmt: str) -> None:
    if fmt == "alist":
        binmat.write_alist(H, path)
    else:
        binmat.write_dense(H, path)


def format_qary(M: codes.QaryMatrix, notation: str) -> str:
    f = M.field
    lines = [f"{f.q} {M.rows} {M.cols}"]
    for row in M.entries:
        lines.append(" ".join(gf.format_element(f, int(x), notation) for x in row))
    return "\n".join(lines) + "\n"


# -- parameter table data -----------------------------------------------------------------------

def load_table() -> dict:
    text = resources.files("hqcks").joinpath("data/table1.json").read_text()
    return json.loads(text)


def table_code(row: dict, modulus: Sequence[int] | None = None) -> EvalCode:
    f = gf.field_of_order(row["q"], modulus)
    return codes.rs_code(f, parse_points(f, None, row["n"]), row["k"])


_OPS = {"<=": operator.le, "<": operator.lt, "=": operator.eq, "==": operator.eq,
        ">=": operator.ge, ">": operator.gt}


def select_rows(rows: list[dict], spec: str) -> list[dict]:
    """Comma-separated filters: all, trivial, q<=N style, or n/q for one row."""
    keep = set()
    for tok in (t.strip() for t in spec.split(",")):
        if not tok:
            continue
        if tok == "all":
            hit = range(len(rows))
        elif tok == "trivial":
            hit = [i for i, r in enumerate(rows) if r["n"] == 2 and r["q"] in (3, 4, 5, 7)]
        elif m := re.fullmatch(r"q(<=|>=|==|<|>|=)(\d+)", tok):
            op, v = _OPS[m.group(1)], int(m.group(2))
            hit = [i for i, r in enumerate(rows) if op(r["q"], v)]
        elif m := re.fullmatch(r"(\d+)/(\d+)", tok):
            n, q = int(m.group(1)), int(m.group(2))
            hit = [i for i, r in enumerate(rows) if (r["n"], r["q"]) == (n, q)]
            if not hit:
                raise UsageError(f"no table row [{n},2]_{q}")
        else:
            raise UsageError(f"cannot read row filter {tok!r}")
        keep.update(hit)
    return [rows[i] for i in sorted(keep)]


def run_table_row(row: dict, budget: int | None = None, workers: int = 1,
                  method: str = "auto") -> dict:
    c = table_code(row)
    H = construct.build_hc(c)
    p = analysis.code_params(H, budget, method, workers)
    got = {"n_tilde": p.n_tilde, "k_tilde": p.k_tilde,
           "d_tilde": analysis._num(p.d_tilde) if p.certified else None,
           "hc_rows": H.rows, "hc_cols": H.cols}
    mism = [k for k, v in got.items() if k != "d_tilde" and v != row[k]]
    if p.certified and got["d_tilde"] != row["d_tilde"]:
        mism.append("d_tilde")
    elif not p.certified and not p.d_lo <= row["d_tilde"] <= p.d_hi:
        mism.append("d_tilde")
    return {"row": row, "got": got, "params": p, "mismatch": mism}


# -- subcommands -------------------------------------------------------------------------

def cmd_construct(a) -> int:
    c = code_from_args(a)
    H = construct.build_hc(c, a.codeword_budget)
    out = Path(a.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ext = "alist" if a.format == "alist" else "txt"
    write_matrix(H, str(out / f"{a.prefix}hc.{ext}"), a.format)
    M = codes.enumerate_codewords(c, a.codeword_budget)
    (out / f"{a.prefix}mc.txt").write_text(format_qary(M, a.notation))
    codes.write_generator(c, out / f"{a.prefix}generator.txt")
    written = [f"{a.prefix}hc.{ext}", f"{a.prefix}mc.txt", f"{a.prefix}generator.txt"]
    if codes.has_field_partition_property(c):
        try:
            Hp = hqc.extract_poly_matrix(H, c)
        except hqc.HqcError as e:
            print(f"polynomial matrix skipped: {e}", file=sys.stderr)
        else:
            hqc.write_poly_matrix(Hp, out / f"{a.prefix}poly.txt", a.var_base)
            written.append(f"{a.prefix}poly.txt")
    print(f"{describe(c)} H_C {H.rows} x {H.cols}")
    for w in written:
        print(f"wrote {out / w}")
    return EXIT_OK


def _fmt(x) -> str:
    v = analysis._num(x)
    return "none" if v is None else str(v)


def cmd_analyze(a) -> int:
    if a.matrix:
        H = read_matrix(a.matrix)
        c = None
    else:
        if not a.kind:
            raise UsageError("give a code kind or --matrix FILE")
        c = code_from_args(a)
        H = construct.build_hc(c, a.codeword_budget)
    t0 = time.perf_counter()
    p = analysis.code_params(H, a.budget, a.method, a.workers)
    bounds = analysis.check_bounds(c, p, H) if c is not None else []
    g = analysis.girth(H)
    cw, rw = analysis.regularity(H)
    if a.json:
        rep = analysis.report_dict(p, bounds)
        rep.update({"rows": H.rows, "cols": H.cols, "girth": _fmt(g),
                    "col_weights": sorted(cw), "row_weights": sorted(rw),
                    "density": analysis.density(H)})
        if c is not None:
            rep["code"] = describe(c)
        print(json.dumps(rep, indent=2))
    else:
        if c is not None:
            print(f"code {describe(c)}")
        dtxt = _fmt(p.d_tilde) if p.certified else f"{_fmt(p.d_lo)}..{_fmt(p.d_hi)}"
        print(f"[{p.n_tilde},{p.k_tilde},{dtxt}]")
        print(f"H_C {H.rows} x {H.cols}")
        print(f"girth {_fmt(g)}")
        print(f"regularity column {sorted(cw)} row {sorted(rw)}")
        print(f"density {analysis.density(H):.6g}")
        if c is not None and c.known_distance is not None and c.known_distance < c.n:
            print(f"disjunct {construct.disjunct_value(c.n, c.known_distance)}")
        print(f"method {p.d_method} certified={str(p.certified).lower()} "
              f"time {time.perf_counter() - t0:.2f}s")
        for b in bounds:
            print(f"bound {b.name} {b.relation} {_fmt(b.predicted)} observed={_fmt(b.observed)} "
                  f"{analysis._verdict(b)}")
    if not p.certified and a.strict:
        return EXIT_BUDGET
    if any(not b.holds for b in bounds if b.observed is not None):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_table(a) -> int:
    data = load_table()
    rows = select_rows(data["rows"], a.rows)
    results = []
    uncertified = False
    for row in rows:
        res = run_table_row(row, a.budget, a.workers, a.method)
        results.append(res)
        uncertified |= not res["params"].certified
    if a.json:
        print(json.dumps([{"q": r["row"]["q"], "n": r["row"]["n"], "k": r["row"]["k"],
                           **r["got"], "d_lo": analysis._num(r["params"].d_lo),
                           "d_hi": analysis._num(r["params"].d_hi),
                           "certified": r["params"].certified,
                           "best_known_d": r["row"]["best_known_d"],
                           "ok": not r["mismatch"]} for r in results], indent=1))
    else:
        print(f"{'RS code':<12} {'Construction 1':<16} {'H_C dim':<11} {'best known d':<13} status")
        for r in results:
            row, got = r["row"], r["got"]
            pr = r["params"]
            d = got["d_tilde"] if pr.certified else f"{_fmt(pr.d_lo)}..{_fmt(pr.d_hi)}"
            star = "*" if row["meets_best_known"] else ""
            status = "ok" if pr.certified else "open"
            if r["mismatch"]:
                status = "MISMATCH " + ",".join(r["mismatch"])
            print(f"{'[%d,%d]_%d' % (row['n'], row['k'], row['q']):<12} "
                  f"{'[%d,%d,%s]%s' % (got['n_tilde'], got['k_tilde'], d, star):<16} "
                  f"{'%d x %d' % (got['hc_rows'], got['hc_cols']):<11} "
                  f"{row['best_known_d']:<13} {status}")
    if any(r["mismatch"] for r in results):
        return EXIT_MISMATCH
    if uncertified and a.strict:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_export(a) -> int:
    if a.input_format == "poly":
        H = hqc.expand_poly_matrix(hqc.read_poly_matrix(a.input, a.var_base))
    elif a.input_format == "dense":
        H = binmat.read_dense(Path(a.input))
    elif a.input_format == "alist":
        H = binmat.read_alist(Path(a.input))
    else:
        H = read_matrix(a.input)
    if a.output:
        write_matrix(H, a.output, a.to)
    else:
        sys.stdout.write(binmat.write_alist(H) if a.to == "alist" else binmat.write_dense(H))
    return EXIT_OK


def cmd_girth(a) -> int:
    if a.matrix:
        H = read_matrix(a.matrix)
    else:
        if not a.kind:
            raise UsageError("give a code kind or --matrix FILE")
        H = construct.build_hc(code_from_args(a), a.codeword_budget)
    print(_fmt(analysis.girth(H)))
    return EXIT_OK


def cmd_equiv(a) -> int:
    if a.mode == "pair":
        c1 = codes.read_generator(Path(a.first))
        c2 = codes.read_generator(Path(a.second))
        try:
            rep = equiv.binary_params_under_equivalence(c1, c2, a.expect, a.budget, a.workers)
        except equiv.EquivalenceError as e:
            print(f"equivalence check failed: {e}", file=sys.stderr)
            return EXIT_MISMATCH
        print(f"first  {rep.params1.triple()} q-ary enumerator {codes.qary_weight_enumerator(c1)}")
        print(f"second {rep.params2.triple()} q-ary enumerator {codes.qary_weight_enumerator(c2)}")
        print(f"params_equal={str(rep.params_equal).lower()} "
              f"binary_enumerators_equal={str(rep.enumerators_equal).lower()} "
              f"nullspaces_equal={str(rep.nullspaces_equal).lower()}")
        return EXIT_OK
    c = code_from_args(a)
    if a.mode == "random":
        rng = np.random.default_rng(a.seed)
        H = construct.build_hc(c)
        base = analysis.code_params(H, a.budget, workers=a.workers)
        bad = 0
        for _ in range(a.count):
            m = equiv.random_monomial(c.field, c.n, rng, a.permutation_only)
            c2 = equiv.apply_monomial(c, m)
            H2 = construct.build_hc(c2)
            p2 = analysis.code_params(H2, a.budget, workers=a.workers)
            exact = H2 == equiv.transformed_hc(H, m, c.field)
            if p2.triple() != base.triple() or not exact:
                bad += 1
                print(f"transform {m.perm} {m.diag}: {p2.triple()} exact={exact}")
        print(f"{describe(c)} base {base.triple()}; {a.count - bad}/{a.count} transforms agree")
        return EXIT_MISMATCH if bad else EXIT_OK
    rep = equiv.correspondence_hii_to_hc(c, a.budget)
    cw, rw = analysis.regularity(rep.H_II)
    print(f"H_II {rep.H_II.rows} x {rep.H_II.cols} row weights {sorted(rw)} column weights {sorted(cw)}")
    print(f"circulant index q-1: {str(rep.hii_circulant_q_minus_1).lower()}")
    print(f"transformed equals reordered H_C: {str(rep.bit_exact).lower()}")
    print(f"params transformed {rep.params_transformed.triple()} H_C {rep.params_hc.triple()}")
    return EXIT_OK if rep.bit_exact and rep.params_equal else EXIT_MISMATCH


# -- parser -----------------------------------------------------------------------------------

def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("HQC_WORKERS", "1")))
    except ValueError:
        return 1


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value file; command-line flags take precedence")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--budget", type=int, default=None, help="distance search budget")
    p.add_argument("--method", default="auto",
                   choices=["auto", "oracle", "column-search", "information-set"])
    p.add_argument("--strict", action="store_true", help="exit 3 if the distance is not certified")


def _code_opts(p: argparse.ArgumentParser, optional: bool = False) -> None:
    kw = {"nargs": "?", "default": None} if optional else {}
    p.add_argument("kind", choices=["rs", "rm", "generic"], **kw)
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--modulus", help="coefficients in ascending degree, e.g. 1,1,0,1")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--points", help="all, nonzero, power, or a comma list such as 0,1,a")
    p.add_argument("--m", type=int)
    p.add_argument("--rho", type=int)
    p.add_argument("--generator", help="generator matrix file for generic codes")
    p.add_argument("--codeword-budget", type=int, default=codes.DEFAULT_BUDGET)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hqcks", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="write H_C, M_C and the polynomial matrix")
    _common(p)
    _code_opts(p)
    p.add_argument("--out-dir", default=".")
    p.add_argument("--prefix", default="")
    p.add_argument("--format", choices=["dense", "alist"], default="dense")
    p.add_argument("--notation", choices=["index", "symbolic"], default="index")
    p.add_argument("--var-base", type=int, default=0, help="index of the first variable x_i")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="parameters, graph metrics and bounds")
    _common(p)
    _code_opts(p, optional=True)
    p.add_argument("--matrix", help="analyze a dense or alist matrix file instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="recompute the parameter table")
    _common(p)
    p.add_argument("--rows", default="all", help="all, trivial, q<=5, 8/9, ... (comma separated)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("export", help="convert between matrix formats")
    p.add_argument("--config")
    p.add_argument("input")
    p.add_argument("--input-format", choices=["auto", "dense", "alist", "poly"], default="auto")
    p.add_argument("--to", choices=["dense", "alist"], default="alist")
    p.add_argument("--output", "-o")
    p.add_argument("--var-base", type=int, default=0)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("equiv", help="equivalence and Construction 2 checks")
    esub = p.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    e = esub.add_parser("pair", help="compare the binary codes of two generator files")
    _common(e)
    e.add_argument("first")
    e.add_argument("second")
    e.add_argument("--expect", choices=["monomial", "permutation"])
    e = esub.add_parser("random", help="random monomial transforms of one code")
    _common(e)
    _code_opts(e)
    e.add_argument("--count", type=int, default=50)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--permutation-only", action="store_true")
    e = esub.add_parser("c2", help="carry Construction 2's H_II onto H_C")
    _common(e)
    _code_opts(e)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("girth", help="Tanner graph girth")
    p.add_argument("--config")
    _code_opts(p, optional=True)
    p.add_argument("--matrix")
    p.set_defaults(func=cmd_girth)
    return ap


def read_config(path: str) -> dict[str, str]:
    out = {}
    for ln in Path(path).read_text().splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        if "=" not in ln:
            raise UsageError(f"config line without '=': {ln!r}")
        k, v = ln.split("=", 1)
        out[k.strip().replace("-", "_")] = v.strip()
    return out


def _leaf_parser(ap: argparse.ArgumentParser, a) -> argparse.ArgumentParser:
    p = ap._subparsers._group_actions[0].choices[a.command]
    if a.command == "equiv":
        p = p._subparsers._group_actions[0].choices[a.mode]
    return p


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    ap = build_parser()
    a = ap.parse_args(argv)
    if getattr(a, "config", None):
        cfg = read_config(a.config)
        leaf = _leaf_parser(ap, a)
        known = {act.dest: act for act in leaf._actions}
        for k in cfg:
            if k not in known or k in ("kind", "config", "help"):
                raise UsageError(f"unknown config key {k!r}")
        defaults = {}
        for k, v in cfg.items():
            act = known[k]
            if isinstance(act, argparse._StoreTrueAction):
                defaults[k] = v.lower() in ("1", "true", "yes", "on")
            else:
                defaults[k] = act.type(v) if act.type else v
        leaf.set_defaults(**defaults)
        a = ap.parse_args(argv)
    return a


def main(argv: Sequence[str] | None = None) -> int:
    try:
        a = parse_args(argv)
    except SystemExit as e:  # argparse usage errors and --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except UsageError as e:
        print(f"hqcks: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return a.func(a)
    except UsageError as e:
        print(f"hqcks: {e}", file=sys.stderr)
        return EXIT_USAGE
    except codes.BudgetExceeded as e:
        print(f"hqcks: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as e:
        print(f"hqcks: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
