"""Three-channel acceleration records and their on-disk CSV format."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from cmldi.errors import InvalidInput


@dataclass(frozen=True)
class SensorRecordSet:
    """Synchronized accelerations at A1, A2, A3.

    ``samples`` has shape (n_steps, 3); after peak normalization the
    values are dimensionless with global max |value| = 1.
    """

    dt: float
    samples: np.ndarray
    speed: float
    label: object | None = None  # DamageLabel once the pipeline attaches one

    def __post_init__(self):
        if self.dt <= 0.0:
            raise InvalidInput("dt must be positive")
        if self.speed <= 0.0:
            raise InvalidInput("speed must be positive")
        s = np.asarray(self.samples, dtype=float).copy()
        if s.ndim != 2 or s.shape[1] != 3:
            raise InvalidInput("samples must be (n_steps, 3)")
        s.setflags(write=False)
        object.__setattr__(self, "samples", s)

    @property
    def n_samples(self) -> int:
        return self.samples.shape[0]

    @property
    def duration(self) -> float:
        return self.n_samples * self.dt

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.n_samples) * self.dt


def normalize_peak(record: SensorRecordSet) -> SensorRecordSet:
    """Divide all channels by the single global max absolute value."""
    peak = float(np.max(np.abs(record.samples)))
    if peak == 0.0:
        raise InvalidInput("cannot normalize an all-zero record")
    return replace(record, samples=record.samples / peak)


def measured_snr_db(signal: np.ndarray, noise: np.ndarray) -> float:
    """Signal-to-noise ratio as the 10 log10 of the 2-norm ratio."""
    return float(10.0 * np.log10(np.linalg.norm(signal) / np.linalg.norm(noise)))


def add_gaussian_noise(record: SensorRecordSet, snr_db: float, seed: int) -> SensorRecordSet:
    """Add Gaussian noise rescaled so the norm-ratio SNR equals snr_db."""
    if not np.isfinite(snr_db):
        raise InvalidInput("snr_db must be finite")
    signal_norm = float(np.linalg.norm(record.samples))
    if signal_norm == 0.0:
        raise InvalidInput("record is all zero")
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal(record.samples.shape)
    noise *= (signal_norm / 10.0 ** (snr_db / 10.0)) / np.linalg.norm(noise)
    return replace(record, samples=record.samples + noise)


def save_record_csv(record: SensorRecordSet, path, sidecar: dict | None = None) -> None:
    """Write `t,a1,a2,a3` CSV (17 significant digits) plus a JSON sidecar."""
    path = Path(path)
    data = np.column_stack([record.times, record.samples])
    np.savetxt(path, data, fmt="%.17g", delimiter=",", header="t,a1,a2,a3", comments="")
    meta = {"dt": record.dt, "speed": record.speed}
    if sidecar:
        meta.update(sidecar)
    path.with_suffix(".json").write_text(json.dumps(meta, indent=1, sort_keys=True))


def load_record_csv(path) -> tuple[SensorRecordSet, dict]:
    path = Path(path)
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    if data.ndim == 1:
        data = data[None, :]
    meta_path = path.with_suffix(".json")
    if not meta_path.exists():
        raise InvalidInput(f"record sidecar {meta_path} is missing")
    meta = json.loads(meta_path.read_text())
    record = SensorRecordSet(dt=float(meta["dt"]), samples=data[:, 1:4], speed=float(meta["speed"]))
    return record, meta
