"""Acceptance checks, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed as they happen
(visible with ``-s``) and again in pytest's terminal summary.  Run the file
directly for just the ten lines::

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import functools
import itertools
import sys
import time

import numpy as np
import pytest

from psmcodes import bounds as B
from psmcodes import example1 as ex
from psmcodes.bounds import BoundQuery, NON_OVERLAPPING, OVERLAPPING
from psmcodes.channel import run_trials
from psmcodes.cli import example1_report
from psmcodes.code import LinearCode, error_patterns
from psmcodes.field import gf
from psmcodes.matrix import MatrixF, rref
from psmcodes.psmc import build_scheme

ACCEPTANCE_RESULTS: dict[int, str] = {}

F4 = gf(4)


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except AssertionError as exc:
                secs = time.perf_counter() - start
                msg = str(exc).splitlines()[0] if str(exc) else "assertion failed"
                line = f"criterion {number:2d} FAIL  {title}  ({secs:.1f}s)  {msg}"
                ACCEPTANCE_RESULTS[number] = line
                print(line)
                raise
            secs = time.perf_counter() - start
            line = f"criterion {number:2d} PASS  {title}  ({secs:.1f}s)" + (f"  {detail}" if detail else "")
            ACCEPTANCE_RESULTS[number] = line
            print(line)
        return run
    return wrap


def _scheme():
    return build_scheme(ex.FIELD, ex.N, ex.U, ex.T, ex.L, ex.K1, ex.R, ex.H0, ex.P)


def _add_error(F, c, pos, vals):
    y = c.copy()
    y[list(pos)] = F.add(y[list(pos)], np.asarray(vals, dtype=np.int64))
    return y


# ---------------------------------------------------------------------------

@criterion(1, "Example-1 fidelity")
def test_criterion_1_example_fidelity():
    start = time.perf_counter()
    S = _scheme()
    assert (S.n, S.l, S.k1, S.r, S.u, S.u0, S.t, S.d0) == (14, 4, 6, 4, 4, 2, 1, 3), repr(S)
    # a fresh code object so the exhaustive sweep really runs
    C = LinearCode(MatrixF(F4, ex.G))
    assert (C.n, C.k) == (15, 11)
    d = C.min_distance()
    assert d == 3, f"exhaustive sweep over 4^11 codewords gave d={d}"
    secs = time.perf_counter() - start
    assert secs < 120, f"took {secs:.1f}s"
    return "n=14 l=4 k1=6 r=4 u=4 u0=2 d=3 d0=3"


@criterion(2, "masking and roundtrip on the worked example")
def test_criterion_2_masking_roundtrip():
    S = _scheme()
    c = S.encode(ex.M, ex.M_PRIME, ex.PHI)
    phi = list(ex.PHI)
    assert np.all(c[phi] != 0), f"stuck cells hold {c[phi]}"
    patterns = [((), ())] + list(error_patterns(15, 4, 1))
    assert len(patterns) == 46
    bad = []
    models = {NON_OVERLAPPING: 0, OVERLAPPING: 0}
    for pos, vals in patterns:
        y = _add_error(F4, c, pos, vals)
        m, mp = S.decode(y)
        if not (np.array_equal(m, ex.M) and np.array_equal(mp, ex.M_PRIME)):
            bad.append(pos)
        # tally which patterns each error model admits
        if not set(pos) & set(phi):
            models[NON_OVERLAPPING] += 1
        if np.all(y[phi] != 0):
            models[OVERLAPPING] += 1
    assert not bad, f"wrong message after errors at {bad}"
    return (f"46/46 patterns decode ({models[NON_OVERLAPPING]} admissible non-overlapping, "
            f"{models[OVERLAPPING]} overlapping)")


@criterion(3, "cardinality claims")
def test_criterion_3_cardinality(small_scheme):
    S = small_scheme
    phi = [1, 4, 7]
    words = set()
    count = 0
    for m in itertools.product(range(4), repeat=S.k1):
        for mp in itertools.product(S.field.f_set().tolist(), repeat=S.l):
            words.add(tuple(S.encode(np.array(m), np.array(mp), phi)))
            count += 1
    expected = 2 ** (S.field.degree * (S.k1 + S.l) - S.l)
    assert count == expected == S.cardinality
    assert len(words) == expected, f"{len(words)} distinct encodings of {expected} messages"
    ok, report = example1_report()
    assert "Construction 1: 4^8 > prior: 4^7" in report
    assert _scheme().cardinality == 4**8
    return f"reduced scheme injective on {expected} messages; Example 1: 4^8 > 4^7"


@criterion(4, "RREF equivalence of the two printed generators")
def test_criterion_4_rref_equivalence():
    A = rref(MatrixF(F4, ex.G))[0]
    Bm = rref(MatrixF(F4, ex.G_PRIOR))[0]
    diff = np.argwhere(A.data != Bm.data)
    assert A == Bm, (f"reduced forms differ in {len(diff)} entries, first at "
                     f"{tuple(int(i) for i in diff[0])}")


@criterion(5, "bound degenerations")
def test_criterion_5_degenerations():
    checked = skipped = 0
    for n in range(1, 31):
        for q in (2, 3, 4):
            for u in range(0, min(n, 5) + 1):
                for t in range(0, min(n, 5) + 1):
                    eq1 = B.sp_non_overlapping(BoundQuery(n, q, u, t))
                    eq2 = None
                    if u == 0 or q > 2:
                        eq2 = B.sp_overlapping(BoundQuery(n, q, u, t, 1, OVERLAPPING))
                    else:
                        skipped += 1  # s = 1 = q - 1 is outside the overlapping bound
                    if t == 0:
                        eq3 = B.masking_only_bound(n, q, [1] * u)
                        assert eq1.max_cardinality == eq3, (n, q, u, t)
                        if eq2 is not None:
                            assert eq2.max_cardinality == eq3, (n, q, u, t)
                        checked += 1
                    if u == 0:
                        h = B.hamming_bound(n, q, t)
                        assert eq1.max_cardinality == h, (n, q, u, t)
                        assert eq2.max_cardinality == h, (n, q, u, t)
                        checked += 1
    return f"{checked} identities; {skipped} overlapping points with q=2, s=1 undefined"


def _all_words(n, q):
    idx = np.arange(q**n, dtype=np.int64)
    return np.stack([(idx // q**i) % q for i in range(n)], axis=1).astype(np.int8)


@criterion(6, "sphere sizes against enumeration")
def test_criterion_6_sphere_oracles():
    cases = 0
    # non-overlapping: errors avoid the stuck cells
    for q in (2, 3, 4):
        for n in range(1, 11):
            words = _all_words(n, q)
            x = np.zeros(n, dtype=np.int8)
            x[: n] = q - 1  # stuck cells come first; free cells hold q - 1 too
            diff = words != x
            weight = diff.sum(axis=1)
            for u in range(0, n + 1):
                clean = ~diff[:, :u].any(axis=1)
                counts = np.cumsum(np.bincount(weight[clean], minlength=n + 1))
                for t in range(0, n + 1):
                    assert B.sphere_non_overlapping(n, q, u, t) == counts[t], (n, q, u, t)
                    cases += 1
    # overlapping: stuck cells keep values in [s, q-1]
    for q in (3, 4, 5):
        for s in sorted({1, q - 2}):
            for n in range(1, 9):
                words = _all_words(n, q)
                for x_stuck in (s, q - 1):
                    x = np.full(n, x_stuck, dtype=np.int8)
                    diff = words != x
                    weight = diff.sum(axis=1)
                    for u in range(0, n + 1):
                        ok = np.all(words[:, :u] >= s, axis=1)
                        counts = np.cumsum(np.bincount(weight[ok], minlength=n + 1))
                        for t in range(0, n + 1):
                            got = B.sphere_overlapping(n, q, (s,) * u, t)
                            assert got == counts[t], (n, q, s, u, t)
                            cases += 1
    return f"{cases} (n, q, s, u, t) cases"


@criterion(7, "GV inequality spot values and monotone d_max")
def test_criterion_7_gv_values():
    assert B.gv_lhs(7, 3, 2) == 7 and B.gv_check(7, 4, 3, 2) is True
    assert B.gv_lhs(7, 4, 2) == 22 and B.gv_check(7, 4, 4, 2) is False
    for n_f in (120, 121, 124, 127):
        for q in (2, 3):
            ds = [B.gv_max_d(n_f, k, q) for k in range(1, n_f + 1)]
            assert all(a >= b for a, b in zip(ds, ds[1:])), (n_f, q)
    return "gv_check(7,4,3,2)=True, gv_check(7,4,4,2)=False"


@criterion(8, "GV constructor soundness")
def test_criterion_8_gv_constructor():
    total = 0
    failures = []
    for q in (2, 3):
        for n in range(1, 13):
            for k in range(1, n + 1):
                for d in range(1, min(n, 4) + 1):
                    if not B.gv_check(n, k, d, q):
                        continue
                    c = B.gv_construct(n, k, d, q)
                    rep = B.verify_gv(c.H, n, k, d)
                    total += 1
                    if not (rep.ok and c.k_prime == c.n_prime - (n - k)):
                        failures.append((q, n, k, d, rep))
    assert not failures, f"{len(failures)} of {total} constructions failed, first {failures[0]}"
    return f"{total} constructions verified"


@criterion(9, "GV code to PSMC pipeline")
def test_criterion_9_gv_psmc_pipeline():
    q, u = 3, 2
    res = B.psmc_from_gv(8, 3, 3, q, u)
    P = res.scheme
    assert res.exists and res.t == 1
    F = P.field
    n = P.length
    encodings = decodes = 0
    for m in itertools.product(range(q), repeat=P.k):
        m = np.array(m)
        for size in range(0, u + 1):
            for phi in itertools.combinations(range(n), size):
                c = P.encode(m, phi)
                assert np.all(c[list(phi)] != 0), (m, phi)
                encodings += 1
                for pos, vals in [((), ())] + list(error_patterns(n, q, res.t)):
                    y = _add_error(F, c, pos, vals)
                    assert np.array_equal(P.decode(y), m), (m, phi, pos, vals)
                    decodes += 1
    return f"[{n},{P.k + 1}] code, u=2, t=1: {encodings} encodings, {decodes} decodes"


@criterion(10, "channel contract on the worked example")
def test_criterion_10_channel():
    S = _scheme()
    lines = []
    for model in (NON_OVERLAPPING, OVERLAPPING):
        for t in (0, 1):
            first = run_trials(S, 10_000, t, model, seed=2024)
            again = run_trials(S, 10_000, t, model, seed=2024)
            assert first.failures == 0, first.csv_row()
            assert first.to_csv().encode() == again.to_csv().encode(), "reports differ between runs"
            lines.append(first.csv_row())
    return "; ".join(lines)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
