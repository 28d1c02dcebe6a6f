"""Pure-numpy fallback kernels.

Mirrors ``_cykernels`` bit for bit: ``np.bincount`` accumulates weights in
increasing row order, exactly like the compiled loops, so both backends
produce identical floating-point output on identical input.
"""

import numpy as np


def group_sums(values: np.ndarray, codes: np.ndarray, n_groups: int) -> np.ndarray:
    """Sum rows of ``values`` by group code. Returns an (n_groups, k) array."""
    out = np.empty((n_groups, values.shape[1]), dtype=np.float64)
    for j in range(values.shape[1]):
        out[:, j] = np.bincount(codes, weights=values[:, j], minlength=n_groups)
    return out


def demean(
    values: np.ndarray,
    codes: np.ndarray,
    n_groups: int,
    weights: np.ndarray | None = None,
) -> float:
    """Subtract (optionally weighted) group means from ``values`` in place.

    Returns the largest absolute subtracted mean. Empty groups are skipped.
    """
    if weights is None:
        sums = group_sums(values, codes, n_groups)
        denom = np.bincount(codes, minlength=n_groups).astype(np.float64)
    else:
        sums = group_sums(weights[:, None] * values, codes, n_groups)
        denom = np.bincount(codes, weights=weights, minlength=n_groups)
    nonempty = denom > 0.0
    means = np.zeros_like(sums)
    np.divide(sums, denom[:, None], out=means, where=nonempty[:, None])
    values -= means[codes]
    if not nonempty.any():
        return 0.0
    return float(np.abs(means[nonempty]).max())
