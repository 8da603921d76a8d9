r"""
Monte Carlo runs of the stuck-cell channel
==========================================

Random messages, random stuck cells and exactly t_actual errors per trial.
Within the design radius every trial succeeds; beyond it failures appear.
"""

from psmcodes import example1_scheme, run_trials
from psmcodes.channel import CSV_HEADER

scheme = example1_scheme()
print(CSV_HEADER)
for model in ("non_overlapping", "overlapping"):
    for t in (0, 1, 2):
        print(run_trials(scheme, 2000, t, model, seed=7).csv_row())
