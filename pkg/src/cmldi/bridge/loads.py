"""Moving train load on the deck track line.

The train is a row of 12 line-load patches (two per car), each with a
0.07 m wheel-rail contact length.  A patch is treated as its point
resultant (magnitude x contact length) distributed to the two bracketing
track nodes by linear shape functions; patches off the bridge contribute
nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cmldi.bridge.model import VERTICAL, FrameModel, dof_index
from cmldi.errors import InvalidInput

# Line-load magnitudes (N/m) for the 12 patches, front to back.
DEFAULT_PATCH_MAGNITUDES = (
    942857.0,
    938571.0,
    834285.0,
    831428.0,
    676428.0,
    675714.0,
    675714.0,
    676428.0,
    831428.0,
    834285.0,
    938571.0,
    942857.0,
)
DEFAULT_TRAIN_LENGTH = 74.0  # m, so a 115 m span gives a 189 m traverse
CONTACT_LENGTH = 0.07  # m


@dataclass(frozen=True)
class TrainLoad:
    patch_magnitudes: np.ndarray  # (12,) N/m
    patch_offsets: np.ndarray  # (12,) m behind the train head, increasing
    speed: float  # m/s
    contact_length: float = CONTACT_LENGTH

    def __post_init__(self):
        mags = np.asarray(self.patch_magnitudes, dtype=float).copy()
        offs = np.asarray(self.patch_offsets, dtype=float).copy()
        if mags.shape != (12,) or offs.shape != (12,):
            raise InvalidInput("a train load has exactly 12 patches")
        if np.any(mags <= 0.0):
            raise InvalidInput("patch magnitudes must be positive")
        if np.any(np.diff(offs) <= 0.0):
            raise InvalidInput("patch offsets must be strictly increasing")
        if offs[0] != 0.0:
            raise InvalidInput("the first patch defines the train head at offset 0")
        if self.speed <= 0.0:
            raise InvalidInput("speed must be positive")
        if self.contact_length <= 0.0:
            raise InvalidInput("contact length must be positive")
        mags.setflags(write=False)
        offs.setflags(write=False)
        object.__setattr__(self, "patch_magnitudes", mags)
        object.__setattr__(self, "patch_offsets", offs)

    @property
    def length(self) -> float:
        return float(self.patch_offsets[-1])

    def traverse_distance(self, span: float) -> float:
        return span + self.length

    def patch_resultants(self) -> np.ndarray:
        return self.patch_magnitudes * self.contact_length


def default_train(speed: float, length: float = DEFAULT_TRAIN_LENGTH) -> TrainLoad:
    """Symmetric 12-patch train with uniform patch spacing over ``length``."""
    offsets = np.linspace(0.0, length, 12)
    return TrainLoad(
        patch_magnitudes=np.array(DEFAULT_PATCH_MAGNITUDES),
        patch_offsets=offsets,
        speed=speed,
    )


def _track_x(model: FrameModel) -> np.ndarray:
    if not model.track_nodes:
        raise InvalidInput("model has no track line")
    return model.nodes[list(model.track_nodes), 0]


def assemble_moving_load(train: TrainLoad, t: float, model: FrameModel) -> np.ndarray:
    """Global nodal force vector at time t (downward loads, -z)."""
    if t < 0.0:
        raise InvalidInput("time must be non-negative")
    xs = _track_x(model)
    span = xs[-1]
    f = np.zeros(model.n_dof)
    resultants = train.patch_resultants()
    positions = train.speed * t - train.patch_offsets
    for pos, w in zip(positions, resultants):
        if pos < 0.0 or pos > span:
            continue
        j = int(np.clip(np.searchsorted(xs, pos, side="right") - 1, 0, xs.size - 2))
        xi = (pos - xs[j]) / (xs[j + 1] - xs[j])
        f[dof_index(model.track_nodes[j], VERTICAL)] -= w * (1.0 - xi)
        f[dof_index(model.track_nodes[j + 1], VERTICAL)] -= w * xi
    return f


def track_force_series(train: TrainLoad, model: FrameModel, times: np.ndarray) -> np.ndarray:
    """Force history on the track nodes only, shape (n_times, n_track).

    Row i equals the track-node slice of ``assemble_moving_load`` at
    times[i]; the dense global vector is never formed.
    """
    xs = _track_x(model)
    span = xs[-1]
    n_t = times.size
    F = np.zeros((n_t, xs.size))
    resultants = train.patch_resultants()
    for off, w in zip(train.patch_offsets, resultants):
        pos = train.speed * times - off
        on = (pos >= 0.0) & (pos <= span)
        if not np.any(on):
            continue
        p = pos[on]
        j = np.clip(np.searchsorted(xs, p, side="right") - 1, 0, xs.size - 2)
        xi = (p - xs[j]) / (xs[j + 1] - xs[j])
        rows = np.nonzero(on)[0]
        np.add.at(F, (rows, j), -w * (1.0 - xi))
        np.add.at(F, (rows, j + 1), -w * xi)
    return F
