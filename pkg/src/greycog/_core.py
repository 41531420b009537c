"""Shared scalar kernels.

All three engines funnel their arithmetic through these two helpers so that
degenerate cases coincide bitwise: a kernel/greyness map with zero greyness,
an interval map with zero-width intervals, and the crisp map all produce
identical floating point trajectories.
"""

import math


def sigmoid(x, lam):
    """Logistic activation 1 / (1 + exp(-lam * x)).

    Two-branch form: never exponentiates a large positive argument, so it
    cannot overflow for any finite x.
    """
    z = lam * x
    if z >= 0.0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def dot_lr(weights, values):
    """Plain left-to-right accumulated dot product.

    Summation order is part of the cross-engine bit-equality contract; do
    not replace with pairwise or fused variants.
    """
    s = 0.0
    for w, v in zip(weights, values):
        s += w * v
    return s
