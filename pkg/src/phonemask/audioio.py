"""WAV I/O and small level/rate helpers shared across the package.

All in-memory audio is float64 mono in [-1, 1]. Files are read from
16-bit PCM or float32 WAV and written as float32 WAV.
"""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

import numpy as np
from scipy.io import wavfile
from scipy.signal import resample_poly

from .errors import IngestError

SAMPLE_RATE = 48_000  # internal baseband rate
ULTRASONIC_RATE = 192_000  # internal modulated-signal rate


def read_wav_mono(path: str | Path) -> tuple[np.ndarray, int]:
    """Read a WAV file as float64 mono, returning (samples, sample_rate)."""
    path = Path(path)
    if not path.exists():
        raise IngestError(f"audio file not found: {path}")
    try:
        rate, data = wavfile.read(path)
    except Exception as exc:  # scipy raises bare ValueError on bad files
        raise IngestError(f"cannot decode {path}: {exc}") from exc
    if data.ndim > 1:
        if data.shape[1] != 1:
            raise IngestError(f"{path}: expected mono audio, got {data.shape[1]} channels")
        data = data[:, 0]
    if data.dtype == np.int16:
        samples = data.astype(np.float64) / 32768.0
    elif data.dtype == np.int32:
        samples = data.astype(np.float64) / 2147483648.0
    elif data.dtype in (np.float32, np.float64):
        samples = data.astype(np.float64)
    else:
        raise IngestError(f"{path}: unsupported sample format {data.dtype}")
    return samples, int(rate)


def write_wav(path: str | Path, samples: np.ndarray, sample_rate: int) -> None:
    """Write float audio as a float32 WAV."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    wavfile.write(path, sample_rate, np.asarray(samples, dtype=np.float32))


def resample_to(x: np.ndarray, rate_in: int, rate_out: int) -> np.ndarray:
    """Polyphase resampling between two integer rates."""
    if rate_in == rate_out:
        return np.asarray(x, dtype=np.float64)
    frac = Fraction(rate_out, rate_in)
    return resample_poly(np.asarray(x, dtype=np.float64), frac.numerator, frac.denominator)


def rms(x: np.ndarray) -> float:
    """Root-mean-square of a signal (0.0 for empty input)."""
    x = np.asarray(x)
    if x.size == 0:
        return 0.0
    return float(np.sqrt(np.mean(np.square(x))))


def dbfs(x: np.ndarray) -> float:
    """RMS level in dB relative to full scale; -inf for silence."""
    r = rms(x)
    if r <= 0.0:
        return -math.inf
    return 20.0 * math.log10(r)


def db_to_amplitude(db: float) -> float:
    return 10.0 ** (db / 20.0)


def amplitude_to_db(a: float) -> float:
    if a <= 0.0:
        return -math.inf
    return 20.0 * math.log10(a)


def peak_normalize(x: np.ndarray, headroom_db: float = 1.0) -> np.ndarray:
    """Scale so the peak sits `headroom_db` below full scale."""
    peak = float(np.max(np.abs(x))) if x.size else 0.0
    if peak == 0.0:
        return np.asarray(x, dtype=np.float64)
    return np.asarray(x, dtype=np.float64) * (db_to_amplitude(-headroom_db) / peak)
