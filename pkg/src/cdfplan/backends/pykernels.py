"""Pure numpy implementations of the hot kernels.

The compiled module `cdfplan.backends._core` provides the same functions with
identical semantics; which one is active is decided in `cdfplan.backends`.
Results agree across backends to floating-point reduction-order differences
(~1e-15 relative), not bit-for-bit.
"""

import numpy as np

NAME = "python"


def two_link_clearance(q, l1, l2, centers, radii):
    """Minimum obstacle clearance for a batch of two-link configurations.

    q: (M, 2) joint angles. centers: (K, 2), radii: (K,). Returns (M,) array of
    min_k dist(center_k, arm segments) - radius_k, or +inf when K == 0.
    """
    q = np.asarray(q, dtype=np.float64)
    m = q.shape[0]
    if centers.shape[0] == 0:
        return np.full(m, np.inf)
    c1 = np.cos(q[:, 0])
    s1 = np.sin(q[:, 0])
    sum12 = q[:, 0] + q[:, 1]
    elbow = np.stack([l1 * c1, l1 * s1], axis=1)                      # (M, 2)
    tip = elbow + np.stack([l2 * np.cos(sum12), l2 * np.sin(sum12)], axis=1)

    d1 = _point_segment_dist(centers, np.zeros_like(elbow), elbow)    # (M, K)
    d2 = _point_segment_dist(centers, elbow, tip)
    clear = np.minimum(d1, d2) - radii[None, :]
    return clear.min(axis=1)


def _point_segment_dist(points, seg_a, seg_b):
    """Distances from K workspace points to M segments; returns (M, K)."""
    w = seg_b - seg_a                                                 # (M, 2)
    ww = np.einsum("mi,mi->m", w, w)                                  # (M,)
    rel = points[None, :, :] - seg_a[:, None, :]                      # (M, K, 2)
    t = np.einsum("mki,mi->mk", rel, w) / ww[:, None]
    np.clip(t, 0.0, 1.0, out=t)
    proj = seg_a[:, None, :] + t[:, :, None] * w[:, None, :]
    diff = points[None, :, :] - proj
    return np.sqrt(np.einsum("mki,mki->mk", diff, diff))


def angle_costs(q_t, q_next, q_f, grad, cdf_val, d_act, alpha1, alpha2):
    """Per-sample angle cost alpha1*theta1 + alpha2*theta2 for N candidate steps.

    q_next: (N, n) candidate next configurations. grad is the unit escape
    direction at q_t, or None when no obstacle term applies. theta1 is zeroed
    when the motion already points away from the contact set (theta1* < pi/2),
    when cdf_val >= d_act, or when cdf_val >= distance-to-goal. Zero-length
    motions get the maximum cost (alpha1 + alpha2) * pi.
    """
    v = q_next - q_t[None, :]
    nv = np.linalg.norm(v, axis=1)
    e = q_f - q_t
    ne = float(np.linalg.norm(e))
    degenerate = nv == 0.0
    with np.errstate(invalid="ignore", divide="ignore"):
        cos2 = (v @ e) / (nv * ne)
    theta2 = np.arccos(np.clip(cos2, -1.0, 1.0))
    if grad is None or cdf_val >= d_act or cdf_val >= ne:
        costs = alpha2 * theta2
    else:
        with np.errstate(invalid="ignore", divide="ignore"):
            cos1 = (v @ grad) / (nv * np.linalg.norm(grad))
        theta1 = np.arccos(np.clip(cos1, -1.0, 1.0))
        theta1 = np.where(theta1 < 0.5 * np.pi, 0.0, theta1)
        costs = alpha1 * theta1 + alpha2 * theta2
    if degenerate.any():
        costs = np.where(degenerate, (alpha1 + alpha2) * np.pi, costs)
    return costs


def exp_weights(costs, beta):
    """Softmin weights exp(-(c - min c) / beta); the min-shift cancels in ratios."""
    costs = np.asarray(costs, dtype=np.float64)
    return np.exp(-(costs - costs.min()) / beta)


def weighted_mean_cov(controls, weights, old_mean):
    """Weighted sample mean and covariance (deviations taken about old_mean)."""
    wsum = weights.sum()
    wmean = (weights @ controls) / wsum
    dev = controls - old_mean[None, :]
    wcov = (dev.T @ (dev * weights[:, None])) / wsum
    return wmean, wcov


def stage_cost_sums(configs, signed_d, q_start, q_f, q_min, q_max,
                    alpha_g, alpha_c, alpha_j, alpha_s, gamma, eps):
    """Composite rollout cost for N sampled control sequences.

    configs: (N, H, n) predicted configurations; signed_d: (N, H) distance-field
    values signed negative inside collision. Per predicted step h (1-based) the
    collision and joint-limit penalties are discounted by gamma**(h-1); the
    goal-error and stay penalties apply to the final configuration with
    discount gamma**(H-1).
    """
    n_samples, horizon, _ = configs.shape
    disc = gamma ** np.arange(horizon)
    col = np.maximum(0.0, -signed_d)
    under = np.maximum(0.0, q_min[None, None, :] - configs)
    over = np.maximum(0.0, configs - q_max[None, None, :])
    joint = np.sum((under + over) ** 2, axis=2)
    stage = (alpha_c * col + alpha_j * joint) @ disc
    q_last = configs[:, -1, :]
    goal = np.linalg.norm(q_last - q_f[None, :], axis=1)
    stay = 1.0 / (np.linalg.norm(q_last - q_start[None, :], axis=1) + eps)
    return stage + disc[-1] * (alpha_g * goal + alpha_s * stay)
