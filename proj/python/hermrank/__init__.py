"""Maximum Hermitian rank-metric codes.

Field elements are lists of 2n coefficients over F_q (constant term first),
words are lists of n such elements -- the same layout as the CLI's JSON files.
"""

import json

from ._core import Code, HermrankError

__all__ = ["Code", "HermrankError", "simulate"]


def simulate(code, trials, ranks=None, seed=0, threads=1, mode="arbitrary"):
    """Monte-Carlo decoding run; returns the report as a dict."""
    if ranks is None:
        ranks = list(range(code.radius + 1))
    return json.loads(code.simulate_json(trials, list(ranks), seed, threads, mode))
