"""Command-line front end: ``affschubert SUBCOMMAND FAMILY N [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .chevalley import j_r0
from .classical_bc import (
    Report,
    build_MND,
    check_conjecture_matrix,
    check_oddball,
    j_sigma_bc,
    pieri_cross,
    special_table,
)
from .localization import check_gkm, set_cache_budget, xi, xi_all
from .peterson import j_coefficient, j_coefficients, structure_constant
from .pieri_sl import (
    diag_check,
    j_sigma_alternating,
    j_sigma_positive,
    verify_appendix_identity,
)
from .poly import NotDivisible, Polynomial
from .rootsys import AffineRoot, ConfigurationError, cartan_data
from .weyl import (
    element,
    enumerate_elements,
    format_word,
    is_grassmannian,
    parse_word,
    reflection,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2

SUITES = ("gkm", "appendixA", "matrixBC", "oddball", "pieri-cross")
TABLES = ("special", "MND")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad input; 2 is reserved for failed checks here
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass
class RunConfig:
    family: str
    n: int
    command: str
    fmt: str = "json"
    cache_budget: int | None = None
    args: dict = field(default_factory=dict)


def _word_arg(text: str):
    try:
        return parse_word(text)
    except ConfigurationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _family_arg(text: str) -> str:
    fam = text.upper()
    if fam not in ("A", "B", "C"):
        raise argparse.ArgumentTypeError(f"family must be one of A, B, C (got {text!r})")
    return fam


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("family", type=_family_arg, help="A (SL_n), B (SO_{2n+1}) or C (Sp_{2n})")
    common.add_argument("n", type=int, help="n of SL_n, SO_{2n+1} or Sp_{2n}")
    common.add_argument("--format", dest="fmt", choices=("json", "text", "latex"), default="json")
    common.add_argument("--cache-budget", type=int, default=None,
                        help="entries kept in the localization cache (env AFFSCHUBERT_CACHE_BUDGET)")

    p = _Parser(prog="affschubert", description="Equivariant Schubert calculus on affine Grassmannians.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("localize", parents=[common], help="xi^v(w)")
    s.add_argument("--v", type=_word_arg, required=True)
    s.add_argument("--w", type=_word_arg, required=True)

    s = sub.add_parser("jclass", parents=[common], help="coefficients j_v^x")
    s.add_argument("--v", type=_word_arg, required=True)
    s.add_argument("--max-len", type=int, default=None)

    s = sub.add_parser("chevalley", parents=[common], help="j_{r_0} from finite data")
    s.add_argument("--max-len", type=int, default=None)

    s = sub.add_parser("pieri", parents=[common], help="j_{sigma_m}^x")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--x", type=_word_arg, required=True)
    s.add_argument("--positive", action="store_true", help="manifestly positive form (type A)")

    s = sub.add_parser("structconst", parents=[common], help="d^w_{uv}")
    s.add_argument("--u", type=_word_arg, required=True)
    s.add_argument("--v", type=_word_arg, required=True)
    s.add_argument("--w", type=_word_arg, required=True)

    s = sub.add_parser("verify", parents=[common], help="run a check suite")
    s.add_argument("--suite", choices=SUITES, required=True)
    s.add_argument("--max-len", type=int, default=None, help="length bound for sweeping suites")

    s = sub.add_parser("tables", parents=[common], help="print special classes or M, N, D")
    s.add_argument("--which", choices=TABLES, required=True)
    return p


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    if ns.n < 1:
        raise UsageError(f"n must be positive (got {ns.n})")
    extra = {k: v for k, v in vars(ns).items() if k not in ("family", "n", "command", "fmt", "cache_budget")}
    cfg = RunConfig(ns.family, ns.n, ns.command, ns.fmt, ns.cache_budget, extra)
    data = _data(cfg)
    for key in ("v", "w", "u", "x"):
        if key in extra:
            element(data, extra[key])
    if extra.get("max_len") is not None and extra["max_len"] < 0:
        raise UsageError("--max-len must be non-negative")
    return cfg


def _data(cfg: RunConfig):
    # A takes n of SL_n (rank n - 1); B and C take the rank
    if cfg.family == "A" and cfg.n < 2:
        raise UsageError("type A needs n >= 2")
    # B_2 coincides with C_2 and is only accepted leniently
    return cartan_data(cfg.family, cfg.n, strict=not (cfg.family == "B" and cfg.n == 2))


# -- output -------------------------------------------------------------------


def _emit_poly(fmt: str, header: dict, f: Polynomial) -> str:
    if fmt == "json":
        return json.dumps({**header, "value": f.to_json()}, indent=2)
    if fmt == "latex":
        return f.to_latex()
    return f.to_text()


def _emit_report(fmt: str, r: Report) -> str:
    if fmt == "json":
        return json.dumps(r.to_json(), indent=2)
    inst = " ".join(f"{k}={v}" for k, v in r.instance.items() if not isinstance(v, list))
    line = f"{r.conjecture} [{inst}]: {r.verdict}"
    if r.witness is not None:
        line += "\nwitness: " + json.dumps(r.witness)
    return line


def _matrix_latex(rows) -> str:
    body = r" \\ ".join(" & ".join(f.to_latex() for f in row) for row in rows)
    return r"\begin{pmatrix} " + body + r" \end{pmatrix}"


# -- commands -----------------------------------------------------------------


def _cmd_localize(cfg: RunConfig):
    data = _data(cfg)
    v, w = element(data, cfg.args["v"]), element(data, cfg.args["w"])
    f = xi(v, w)
    return _emit_poly(cfg.fmt, {"v": format_word(v.word), "w": format_word(w.word)}, f), EXIT_OK


def _emit_j(cfg: RunConfig, j) -> str:
    if cfg.fmt == "json":
        return json.dumps(j.to_json(), indent=2)
    if cfg.fmt == "latex":
        return j.to_latex()
    return j.to_text()


def _cmd_jclass(cfg: RunConfig):
    data = _data(cfg)
    v = element(data, cfg.args["v"])
    if not is_grassmannian(v):
        raise UsageError(f"--v {format_word(cfg.args['v'])} is not a Grassmannian element")
    return _emit_j(cfg, j_coefficients(v, cfg.args["max_len"])), EXIT_OK


def _cmd_chevalley(cfg: RunConfig):
    return _emit_j(cfg, j_r0(_data(cfg), cfg.args["max_len"])), EXIT_OK


def _cmd_pieri(cfg: RunConfig):
    data = _data(cfg)
    m = cfg.args["m"]
    x = element(data, cfg.args["x"])
    header = {"family": cfg.family, "n": cfg.n, "m": m, "x": format_word(x.word)}
    if cfg.family == "A":
        if not (1 <= m <= cfg.n - 1):
            raise UsageError(f"--m must lie in 1..{cfg.n - 1}")
        if cfg.args["positive"]:
            pe = j_sigma_positive(cfg.n, m, x)
            if cfg.fmt == "json":
                return json.dumps({**header, **pe.to_json(), "value": pe.to_polynomial().to_json()}, indent=2), EXIT_OK
            return (pe.to_latex() if cfg.fmt == "latex" else pe.to_text()), EXIT_OK
        return _emit_poly(cfg.fmt, header, j_sigma_alternating(cfg.n, m, x)), EXIT_OK
    if cfg.args["positive"]:
        raise UsageError("--positive is only available in type A")
    k = special_table(cfg.family, cfg.n).k
    if not (1 <= m <= k):
        raise UsageError(f"--m must lie in 1..{k}")
    header["conjectural"] = True
    try:
        f = j_sigma_bc(cfg.family, cfg.n, m, x)
    except NotDivisible as exc:
        r = Report("altPieri", header, "fails", {"reason": str(exc)})
        return _emit_report(cfg.fmt, r), EXIT_FAILED
    return _emit_poly(cfg.fmt, header, f), EXIT_OK


def _cmd_structconst(cfg: RunConfig):
    data = _data(cfg)
    u, v, w = (element(data, cfg.args[k]) for k in ("u", "v", "w"))
    for name, e in (("u", u), ("v", v), ("w", w)):
        if not is_grassmannian(e):
            raise UsageError(f"--{name} is not a Grassmannian element")
    f = structure_constant(u, v, w)
    header = {"u": format_word(u.word), "v": format_word(v.word), "w": format_word(w.word)}
    return _emit_poly(cfg.fmt, header, f), EXIT_OK


def _suite_gkm(cfg: RunConfig) -> Report:
    data = _data(cfg)
    max_len = 4 if cfg.args["max_len"] is None else cfg.args["max_len"]
    inst = {"family": cfg.family, "n": cfg.n, "max_len": max_len}
    roots = []
    for beta in data.positive_roots:
        neg = tuple(-b for b in beta)
        roots.append(AffineRoot(beta, 0))
        roots.append(AffineRoot(beta, 1))
        roots.append(AffineRoot(neg, 1))
    checked = 0
    for w in enumerate_elements(data, max_len):
        for beta in roots:
            other = reflection(data, beta) * w
            for v in xi_all(w):
                if not check_gkm(v, w, beta):
                    return Report("GKM", inst, "fails", {"v": format_word(v.word), "w": format_word(w.word),
                                                         "beta": [list(beta.finite), beta.delta],
                                                         "r_beta w": format_word(other.word)})
                checked += 1
    return Report("GKM", inst, "holds", details={"checked": checked})


def _suite_appendix(cfg: RunConfig) -> Report:
    inst = {"family": cfg.family, "n": cfg.n}
    if cfg.family == "A":
        top = max(cfg.n - 1, 8)
        for p in range(1, top + 1):
            for q in range(p):
                if not verify_appendix_identity(p, q, max(cfg.n, p + 2)):
                    return Report("appendixA", inst, "fails", {"p": p, "q": q})
        for q in range(cfg.n - 1):
            if not diag_check(cfg.n, q):
                return Report("appendixA", inst, "fails", {"diagonal": q + 1})
        return Report("appendixA", inst, "holds", details={"identity_p_max": top})
    # the diagonal identity M_pp N_pp = xi^{t_{p-1}}(t_{p-1}) in the other families
    mnd = build_MND(cfg.family, cfg.n)
    for p in range(mnd.k):
        if mnd.M[p][p] * mnd.N[p][p] != mnd.D[p]:
            return Report("appendixA", inst, "fails", {"diagonal": p + 1})
    return Report("appendixA", inst, "holds")


def _suite_pieri_cross(cfg: RunConfig) -> Report:
    max_len = 6 if cfg.args["max_len"] is None else cfg.args["max_len"]
    if cfg.family != "A":
        return pieri_cross(cfg.family, cfg.n, max_len)
    data = _data(cfg)
    n = cfg.n
    inst = {"family": "A", "n": n, "max_len": max_len}
    checked = 0
    sigmas = {m: element(data, special_table("A", n).sigma[m]) for m in range(1, n)}
    for x in enumerate_elements(data, max_len):
        for m in range(1, n):
            if x.length < m:
                continue
            want = j_coefficient(sigmas[m], x)
            alt = j_sigma_alternating(n, m, x)
            pos = j_sigma_positive(n, m, x)
            if alt != want or pos.to_polynomial() != want or not pos.all_positive():
                return Report("Pieri", inst, "fails",
                              {"m": m, "x": format_word(x.word), "inversion": want.to_json(),
                               "alternating": alt.to_json(), "positive": pos.to_polynomial().to_json()})
            checked += 1
    return Report("Pieri", inst, "holds", details={"checked": checked})


def _cmd_verify(cfg: RunConfig):
    suite = cfg.args["suite"]
    if suite == "gkm":
        r = _suite_gkm(cfg)
    elif suite == "appendixA":
        r = _suite_appendix(cfg)
    elif suite == "matrixBC":
        r = check_conjecture_matrix(cfg.family, cfg.n)
    elif suite == "oddball":
        if cfg.family != "B":
            raise UsageError("the oddball suite concerns type B only")
        if cfg.n < 2:
            raise UsageError("the oddball suite needs n >= 2")
        r = check_oddball(cfg.n)
    else:
        r = _suite_pieri_cross(cfg)
    return _emit_report(cfg.fmt, r), (EXIT_OK if r.holds else EXIT_FAILED)


def _cmd_tables(cfg: RunConfig):
    if cfg.args["which"] == "special":
        rows = special_table(cfg.family, cfg.n).rows()
        if cfg.fmt == "json":
            return json.dumps({"family": cfg.family, "n": cfg.n, "rows": rows}, indent=2), EXIT_OK
        cols = list(rows[0].keys())
        if cfg.fmt == "latex":
            lines = [r"\begin{tabular}{" + "l" * len(cols) + "}", " & ".join(cols) + r" \\"]
            for row in rows:
                lines.append(" & ".join(str(row[c]) or r"\mathrm{id}" for c in cols) + r" \\")
            lines.append(r"\end{tabular}")
            return "\n".join(lines), EXIT_OK
        return "\n".join("  ".join(f"{c}=[{row[c]}]" for c in cols) for row in rows), EXIT_OK
    mnd = build_MND(cfg.family, cfg.n)
    if cfg.fmt == "json":
        return json.dumps(mnd.to_json(), indent=2), EXIT_OK
    if cfg.fmt == "latex":
        diag = [[mnd.D[i] if i == j else Polynomial.zero(mnd.table.data.rank)
                 for j in range(mnd.k)] for i in range(mnd.k)]
        return "\n".join(f"{name} = {_matrix_latex(rows)}"
                         for name, rows in (("M", mnd.M), ("N", mnd.N), ("D", diag))), EXIT_OK
    lines = []
    for name, rows in (("M", mnd.M), ("N", mnd.N)):
        lines.append(f"{name}:")
        lines.extend("  " + " | ".join(f.to_text() for f in row) for row in rows)
    lines.append("D:")
    lines.extend(f"  {f.to_text()}" for f in mnd.D)
    return "\n".join(lines), EXIT_OK


COMMANDS = {
    "localize": _cmd_localize,
    "jclass": _cmd_jclass,
    "chevalley": _cmd_chevalley,
    "pieri": _cmd_pieri,
    "structconst": _cmd_structconst,
    "verify": _cmd_verify,
    "tables": _cmd_tables,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        cfg = parse_config(argv)
        if cfg.cache_budget is not None:
            set_cache_budget(cfg.cache_budget)
        text, code = COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError) as exc:
        # ConfigurationError is a ValueError: bad letters, ranks and ranges
        msg = str(exc)
        if not msg.startswith("usage:"):
            msg = f"{build_parser().format_usage()}affschubert: error: {msg}"
        print(msg, file=err)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    print(text, file=out)
    return code


def main(argv=None) -> int:
    return run(argv)


__all__ = ["RunConfig", "build_parser", "main", "parse_config", "run"]
