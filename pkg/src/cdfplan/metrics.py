"""Trajectory metrics shared by the planners and the benchmark harness."""

import numpy as np


def path_length(trajectory) -> float:
    """Total joint-space path length: sum of Euclidean step norms, in radians.

    A trajectory with zero or one configuration has length 0.
    """
    traj = np.asarray(trajectory, dtype=np.float64)
    if traj.ndim != 2:
        raise ValueError(f"trajectory must be 2-D (steps x joints), got shape {traj.shape}")
    if traj.shape[0] < 2:
        return 0.0
    return float(np.sum(np.linalg.norm(np.diff(traj, axis=0), axis=1)))
