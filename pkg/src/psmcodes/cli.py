"""Command line front end.

Exit codes: 0 success, 2 validation failure, 3 decode failure, 4 I/O or
format error, 5 budget exceeded.
"""

from __future__ import annotations

import argparse
import io
import sys
from pathlib import Path

import numpy as np

from . import bounds, channel
from . import example1 as ex
from .code import LinearCode
from .errors import FormatError, PsmcError
from .matrix import MatrixF, rref, save_matrix
from .psmc import PsmcScheme, build_scheme, load_scheme, parse_scheme_text, scheme_checks

MODEL_NAMES = {"nonoverlap": bounds.NON_OVERLAPPING, "overlap": bounds.OVERLAPPING}

BOUNDS_HEADER = "n,q,u,t,s,model,sphere_size,rhs,max_cardinality,k_info"
GV_HEADER = "n_f,k_f,q,d_max"


def parse_range(text: str) -> list[int]:
    """``"0..25"``, ``"3,5,7"``, ``"1..3,9"`` or empty."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise FormatError(f"cannot write {out}: {exc}") from None


def _table(header: str, rows: list[list], fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "csv":
        buf.write(header + "\n")
        for r in rows:
            buf.write(",".join(str(v) for v in r) + "\n")
        return buf.getvalue()
    cols = header.split(",")
    cells = [cols] + [[str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cols))]
    for r in cells:
        buf.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")
    return buf.getvalue()


def _read_vector(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) != 1:
        raise FormatError(f"{path}: expected exactly one line of symbols")
    try:
        return np.array([int(x) for x in lines[0].split()], dtype=np.int64)
    except ValueError:
        raise FormatError(f"{path}: symbols must be decimal integers") from None


def _vector_line(v) -> str:
    return " ".join(str(int(x)) for x in np.ravel(v)) + "\n"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def bounds_rows(ns, qs, us, ts, s, model) -> list[list]:
    rows = []
    for n in ns:
        for q in qs:
            for u in us:
                for t in ts:
                    query = bounds.BoundQuery(n, q, u, t, s, model)
                    res = bounds.sphere_packing(query)
                    rows.append([n, q, u, t, s, model, res.sphere_size, res.rhs,
                                 res.max_cardinality, repr(res.k_info)])
    return rows


def cmd_bounds(args) -> int:
    rows = bounds_rows(parse_range(args.n), parse_range(args.q), parse_range(args.u),
                       parse_range(args.t), args.s, MODEL_NAMES[args.model])
    _emit(_table(BOUNDS_HEADER, rows, args.format), args.out)
    return 0


def cmd_gv(args) -> int:
    if args.construct:
        c = bounds.gv_construct(args.n, args.k, args.d, args.q)
        report = bounds.verify_gv(c.H, args.n, args.k, args.d)
        if args.out:
            save_matrix(c.H, args.out)
        else:
            sys.stdout.write(c.H.to_text())
        status = "ok" if report.ok else "FAILED"
        sys.stdout.write(f"n'={c.n_prime} k'={c.k_prime} d>={args.d} rank={report.rank} "
                         f"all_one={report.rows_sum_zero} independent={report.columns_independent} "
                         f"verify={status}\n")
        return 0 if report.ok else 2
    qs = parse_range(args.q_list) if args.q_list else [args.q]
    rows = []
    for n_f in parse_range(args.nf):
        for q in qs:
            for k_f in parse_range(args.kf):
                if 1 <= k_f <= n_f:
                    rows.append([n_f, k_f, q, bounds.gv_max_d(n_f, k_f, q)])
    _emit(_table(GV_HEADER, rows, args.format), args.out)
    return 0


def _load_scheme(args) -> PsmcScheme:
    if args.scheme is None:
        raise FormatError("--scheme is required")
    return load_scheme(args.scheme)


def cmd_encode(args) -> int:
    scheme = _load_scheme(args)
    msg = _read_vector(args.message)
    if len(msg) != scheme.k1 + scheme.l:
        raise FormatError(f"message must hold k1 + l = {scheme.k1 + scheme.l} symbols")
    stuck = parse_range(args.stuck) if args.stuck else []
    c = scheme.encode(msg[:scheme.k1], msg[scheme.k1:], stuck)
    _emit(_vector_line(c), args.out)
    return 0


def cmd_decode(args) -> int:
    scheme = _load_scheme(args)
    y = _read_vector(args.input)
    if len(y) != scheme.length:
        raise FormatError(f"codeword must hold {scheme.length} symbols")
    m, m_prime = scheme.decode(y)
    _emit(_vector_line(np.concatenate([m, m_prime])), args.out)
    return 0


def cmd_simulate(args) -> int:
    scheme = ex_scheme() if args.scheme is None else _load_scheme(args)
    ts = parse_range(args.t)
    reports = [channel.run_trials(scheme, args.trials, t, MODEL_NAMES[args.model], args.seed, args.u)
               for t in ts]
    rows = [r.csv_row().split(",") for r in reports]
    _emit(_table(channel.CSV_HEADER, rows, args.format), args.out)
    return 0


def verify_report(params: dict) -> tuple[bool, str]:
    checks, info = scheme_checks(**params, exact=True)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + ("" if c.passed else f"  ({c.detail})")
             for c in checks]
    ok = all(c.passed for c in checks)
    values = " ".join(f"{k}={info[k]}" for k in ("d", "d0", "u0") if k in info)
    lines.append(f"{'valid' if ok else 'invalid'} scheme: {values}")
    return ok, "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    if args.scheme is None:
        raise FormatError("--scheme is required")
    try:
        text = Path(args.scheme).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {args.scheme}: {exc}") from None
    ok, report = verify_report(parse_scheme_text(text))
    _emit(report, args.out)
    return 0 if ok else 2


def ex_scheme() -> PsmcScheme:
    return build_scheme(ex.FIELD, ex.N, ex.U, ex.T, ex.L, ex.K1, ex.R, ex.H0, ex.P)


def example1_report() -> tuple[bool, str]:
    """Replay the worked example; one line per check."""
    lines = []
    results = []

    def check(name, ok, detail=""):
        results.append(bool(ok))
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  {detail}" if detail else ""))

    scheme = ex_scheme()
    d = scheme.code.min_distance()
    check("scheme", True, f"n={scheme.n} l={scheme.l} k1={scheme.k1} r={scheme.r} "
          f"u={scheme.u} u0={scheme.u0} t={scheme.t} d={d} d0={scheme.d0}")
    check("code parameters [15,11,3]_4", (scheme.code.n, scheme.code.k, d) == (15, 11, 3))

    c = scheme.encode(ex.M, ex.M_PRIME, ex.PHI)
    check("encode", True, "c = " + _vector_line(c).strip())
    check("codeword in C", scheme.code.contains(c))
    check(f"masked at {ex.PHI}", np.all(c[list(ex.PHI)] != 0))

    F = scheme.field
    good = 0
    total = 0
    for pos in [None] + list(range(scheme.length)):
        for v in ([0] if pos is None else range(1, F.q)):
            y = c.copy()
            if pos is not None:
                y[pos] = F.add(y[pos], v)
            m, mp = scheme.decode(y)
            total += 1
            good += np.array_equal(m, ex.M) and np.array_equal(mp, ex.M_PRIME)
    check("roundtrip under all errors of weight <= 1", good == total, f"{good}/{total}")

    prior = LinearCode(MatrixF(F, ex.G_PRIOR))
    check("prior generator distance >= 3", prior.min_distance() >= 3, f"d={prior.min_distance()}")
    same = rref(MatrixF(F, ex.G))[0] == rref(MatrixF(F, ex.G_PRIOR))[0]
    check("RREF(G) == RREF(G')", same)

    ours = scheme.field.degree * (scheme.k1 + scheme.l) - scheme.l
    lam = scheme.field.degree
    ours_sym = ours // lam
    check("cardinality", scheme.cardinality == 2**ours and ours % lam == 0 and ours_sym > ex.K1_PRIOR,
          f"Construction 1: {F.q}^{ours_sym} > prior: {F.q}^{ex.K1_PRIOR}")
    ok = all(results)
    lines.append("example 1: " + ("all checks passed" if ok else "some checks FAILED"))
    return ok, "\n".join(lines) + "\n"


def cmd_example1(args) -> int:
    if args.write_scheme:
        ex_scheme().save(args.write_scheme)
    ok, report = example1_report()
    _emit(report, args.out)
    return 0 if ok else 2


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="psmcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, model=False, fmt=True):
        p.add_argument("--out", help="output path (default: stdout)")
        if fmt:
            p.add_argument("--format", choices=("csv", "human"), default="csv")
        if model:
            p.add_argument("--model", choices=tuple(MODEL_NAMES), default="nonoverlap")

    p = sub.add_parser("bounds", help="sphere-packing bound table")
    p.add_argument("--n", default="121")
    p.add_argument("--q", default="3")
    p.add_argument("--u", default="0..20")
    p.add_argument("--t", default="0..25")
    p.add_argument("--s", type=int, default=1, help="uniform stuck level")
    common(p, model=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gv", help="GV-type bound table or construction")
    p.add_argument("--nf", default="127")
    p.add_argument("--kf", default="1..127")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--q-list", help="several alphabet sizes, e.g. 2,3")
    p.add_argument("--construct", action="store_true", help="build and verify a parity-check matrix")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    common(p)
    p.set_defaults(func=cmd_gv)

    p = sub.add_parser("encode", help="encode a message file")
    p.add_argument("--scheme")
    p.add_argument("--message", required=True)
    p.add_argument("--stuck", default="", help="stuck positions, e.g. 1,2,9,14")
    common(p, fmt=False)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received word file")
    p.add_argument("--scheme")
    p.add_argument("--input", required=True)
    common(p, fmt=False)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Monte Carlo channel trials")
    p.add_argument("--scheme", help="scheme file (default: the built-in example)")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--t", default="0..1", help="exact error weights to sweep")
    p.add_argument("--u", type=int, help="stuck cells per trial (default: scheme u)")
    p.add_argument("--seed", type=int, default=0)
    common(p, model=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check a scheme file")
    p.add_argument("--scheme")
    common(p, fmt=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example1", help="replay the built-in worked example")
    p.add_argument("--write-scheme", help="also save the example scheme file here")
    common(p, fmt=False)
    p.set_defaults(func=cmd_example1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gv" and args.construct and None in (args.n, args.k, args.d):
        parser.error("--construct needs --n, --k and --d")
    try:
        return args.func(args)
    except PsmcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
