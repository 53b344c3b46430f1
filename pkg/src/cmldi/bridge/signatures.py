"""Modal signatures: the leading natural frequencies used as features."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from cmldi.errors import InvalidInput


@dataclass(frozen=True)
class ModalSignature:
    frequencies: np.ndarray  # Hz, ascending

    def __post_init__(self):
        f = np.atleast_1d(np.asarray(self.frequencies, dtype=float)).copy()
        if f.ndim != 1 or f.size == 0:
            raise InvalidInput("signature needs a 1-d frequency vector")
        if np.any(f <= 0.0):
            raise InvalidInput("frequencies must be positive")
        if np.any(np.diff(f) < 0.0):
            raise InvalidInput("frequencies must be non-decreasing")
        f.setflags(write=False)
        object.__setattr__(self, "frequencies", f)

    def __len__(self) -> int:
        return int(self.frequencies.size)


def perturb_frequencies(
    signature: ModalSignature, max_error_percent: int, seed: int
) -> ModalSignature:
    """Multiply each frequency by (1 + u), u uniform in +-max_error_percent,
    then re-sort.  Error levels follow the 0..7 percent study grid."""
    if max_error_percent not in range(0, 8):
        raise InvalidInput("max_error_percent must be an integer in 0..7")
    if max_error_percent == 0:
        return signature
    e = max_error_percent / 100.0
    rng = np.random.default_rng(seed)
    u = rng.uniform(-e, e, size=len(signature))
    return ModalSignature(frequencies=np.sort(signature.frequencies * (1.0 + u)))


def frequency_error_percent(f_observed, f_reference) -> np.ndarray:
    """Signed relative deviation of observed from reference frequencies, in %."""
    f_obs = np.asarray(f_observed, dtype=float)
    f_ref = np.asarray(f_reference, dtype=float)
    return (f_obs - f_ref) / f_ref * 100.0


def save_signature_csv(signature: ModalSignature, path, sidecar: dict | None = None):
    path = Path(path)
    path.write_text(",".join(f"{f:.17g}" for f in signature.frequencies) + "\n")
    if sidecar is not None:
        path.with_suffix(".json").write_text(json.dumps(sidecar, indent=1, sort_keys=True))


def load_signature_csv(path) -> tuple[ModalSignature, dict | None]:
    path = Path(path)
    values = np.array([float(v) for v in path.read_text().strip().split(",")])
    sidecar = None
    meta = path.with_suffix(".json")
    if meta.exists():
        sidecar = json.loads(meta.read_text())
    return ModalSignature(frequencies=values), sidecar
