"""Stuck-cell memory channel: stuck-profile sampling, error injection, trials.

Randomness comes from numpy's PCG64 seeded with ``SeedSequence([seed,
index])`` per trial, so reports are reproducible across platforms and
independent of trial order.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .bounds import MODELS, NON_OVERLAPPING, OVERLAPPING
from .errors import DecodeFailure, ValidationError
from .psmc import StuckProfile

RNG_NAME = "numpy.PCG64/SeedSequence"

CSV_HEADER = "trials,t_actual,model,seed,masking_violations,decode_failures,message_mismatches"


def trial_rng(seed: int, index: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def _rng(seed_or_rng) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return trial_rng(int(seed_or_rng))


def sample_stuck(n: int, u: int, level: int = 1, seed=0) -> StuckProfile:
    """``u`` distinct cells out of ``n`` chosen uniformly, all at ``level``."""
    if not 0 <= u <= n:
        raise ValidationError(f"cannot place {u} stuck cells among {n}")
    rng = _rng(seed)
    positions = sorted(int(p) for p in rng.choice(n, size=u, replace=False))
    return StuckProfile(n, tuple(positions), (level,) * u)


def inject_errors(c, t_actual: int, model: str, phi: StuckProfile, q: int, seed=0) -> np.ndarray:
    """Change exactly ``t_actual`` coordinates of ``c``.

    Non-overlapping errors avoid the stuck cells.  Overlapping errors may hit
    them, but the new value stays at or above the cell's level (and differs
    from the old one); stuck cells with no such value are never selected.
    """
    if model not in MODELS:
        raise ValidationError(f"unknown error model {model!r}")
    c = np.asarray(c, dtype=np.int64)
    n = len(c)
    rng = _rng(seed)
    level = np.zeros(n, dtype=np.int64)
    level[phi.index()] = phi.levels
    stuck = np.zeros(n, dtype=bool)
    stuck[phi.index()] = True

    def admissible(i):
        return [v for v in range(int(level[i]), q) if v != c[i]]

    if model == NON_OVERLAPPING:
        eligible = np.flatnonzero(~stuck)
    else:
        eligible = np.array([i for i in range(n) if not stuck[i] or admissible(i)], dtype=np.int64)
    if t_actual > len(eligible):
        raise ValidationError(
            f"{t_actual} errors requested but only {len(eligible)} cells can be corrupted")
    y = c.copy()
    if t_actual == 0:
        return y
    for i in sorted(rng.choice(eligible, size=t_actual, replace=False)):
        choices = admissible(i)
        y[i] = choices[int(rng.integers(len(choices)))]
    return y


@dataclass(frozen=True)
class TrialReport:
    trials: int
    t_actual: int
    model: str
    seed: int
    masking_violations: int = 0
    decode_failures: int = 0
    message_mismatches: int = 0

    @property
    def failures(self) -> int:
        return self.masking_violations + self.decode_failures + self.message_mismatches

    def csv_row(self) -> str:
        return ",".join(str(v) for v in asdict(self).values())

    def to_csv(self) -> str:
        return f"{CSV_HEADER}\n{self.csv_row()}\n"


def _same_message(a, b) -> bool:
    return len(a) == len(b) and all(np.array_equal(x, y) for x, y in zip(a, b))


def run_trials(scheme, trials: int, t_actual: int, model: str = NON_OVERLAPPING, seed: int = 0,
               u: int | None = None) -> TrialReport:
    """Monte Carlo check of the masking and error-correction contract.

    Each trial draws a message, a stuck profile with ``u`` cells (default:
    the scheme's design value) and ``t_actual`` errors, then encodes, checks
    the stuck constraints, corrupts, decodes and compares.  Failures are
    classified by the first check that fails.

    ``scheme`` may be any object with ``length``, ``u``, ``field``,
    ``random_message(rng)``, ``encode_message(message, profile)`` and
    ``decode_message(word)``.
    """
    if model not in MODELS:
        raise ValidationError(f"unknown error model {model!r}")
    u = scheme.u if u is None else u
    n, q = scheme.length, scheme.field.q
    masking = decode = mismatch = 0
    for index in range(trials):
        rng = trial_rng(seed, index)
        message = scheme.random_message(rng)
        profile = sample_stuck(n, u, 1, rng)
        c = scheme.encode_message(message, profile)
        if not profile.satisfied_by(c):
            masking += 1
            continue
        y = inject_errors(c, t_actual, model, profile, q, rng)
        try:
            decoded = scheme.decode_message(y)
        except DecodeFailure:
            decode += 1
            continue
        if not _same_message(decoded, message):
            mismatch += 1
    return TrialReport(trials, t_actual, model, seed, masking, decode, mismatch)


__all__ = [
    "CSV_HEADER", "NON_OVERLAPPING", "OVERLAPPING", "RNG_NAME", "TrialReport",
    "inject_errors", "run_trials", "sample_stuck", "trial_rng",
]
