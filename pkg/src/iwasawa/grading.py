"""dim gr^m of the graded mod-p algebra: weighted commutative monomials in the generators."""

from __future__ import annotations

from .errors import ResourceCapError

DEFAULT_CAP = 64
BRUTE_FORCE_LIMIT = 12


def _weights(gt_or_weights):
    w = getattr(gt_or_weights, "weights", gt_or_weights)
    w = tuple(w)
    if any(x < 1 for x in w):
        raise ValueError("generator weights must be positive")
    return w


def graded_dims(gt, upto: int) -> list:
    """Coefficients of t^0..t^upto in prod_g 1/(1 - t^{w_g}), by integer DP."""
    if upto < 0:
        raise ValueError("degree must be nonnegative")
    coeffs = [1] + [0] * upto
    for w in _weights(gt):
        for m in range(w, upto + 1):
            coeffs[m] += coeffs[m - w]
    return coeffs


def graded_dim_omega(gt, m: int, cap: int = DEFAULT_CAP) -> int:
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m > cap:
        raise ResourceCapError(f"degree {m} is above the cap {cap}")
    return graded_dims(gt, m)[m]


def brute_force_count(gt, m: int, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """List every exponent vector of total weight m and count them."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m > limit:
        raise ResourceCapError(f"brute force is limited to m <= {limit}")
    w = _weights(gt)
    found = []

    def rec(k, rem, exps):
        if k == len(w):
            if rem == 0:
                found.append(tuple(exps))
            return
        for e in range(rem // w[k] + 1):
            exps.append(e)
            rec(k + 1, rem - e * w[k], exps)
            exps.pop()

    rec(0, m, [])
    assert len(set(found)) == len(found)
    return len(found)
