"""Pitch-preserving time-scale modification (WSOLA).

``time_stretch(x, speed)`` shortens (speed > 1) or lengthens
(speed < 1) a signal without moving its pitch: output frames are
overlap-added on a fixed synthesis grid while the matching analysis
position is searched within a small tolerance for maximum waveform
similarity.
"""

from __future__ import annotations

import numpy as np

WINDOW_MS = 20.0
TOLERANCE_MS = 5.0


def _hann(n: int) -> np.ndarray:
    return 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(n) / n)


def time_stretch(x: np.ndarray, speed: float, sample_rate: int) -> np.ndarray:
    """Return x played at `speed` (len_out = len(x)/speed) with pitch kept."""
    x = np.asarray(x, dtype=np.float64)
    if speed <= 0.0:
        raise ValueError(f"speed must be positive, got {speed}")
    if speed == 1.0 or len(x) == 0:
        return x.copy()
    n_out = max(1, int(round(len(x) / speed)))

    win_len = int(round(sample_rate * WINDOW_MS / 1000.0))
    # degenerate inputs: too short for windowed OLA, fall back to a plain
    # linear-interpolation resample (duration exact, pitch shift accepted)
    if len(x) < 2 * win_len or n_out < win_len:
        src = np.linspace(0.0, len(x) - 1.0, n_out)
        return np.interp(src, np.arange(len(x)), x)

    hop = win_len // 2
    tol = int(round(sample_rate * TOLERANCE_MS / 1000.0))
    window = _hann(win_len)

    out = np.zeros(n_out + win_len)
    norm = np.zeros(n_out + win_len)

    # first frame is copied as-is; each later analysis frame is the candidate
    # near pos*speed that best continues the previously chosen frame
    out[:win_len] += window * x[:win_len]
    norm[:win_len] += window
    prev_continuation = x[hop : hop + hop]

    pos = hop
    while pos + win_len <= n_out and prev_continuation.size > 0:
        center = int(round(pos * speed))
        lo = max(0, center - tol)
        hi = min(len(x) - win_len, center + tol)
        if hi < lo:
            break
        segment = x[lo : hi + prev_continuation.size]
        scores = np.correlate(segment, prev_continuation, mode="valid")
        best_k = lo + int(np.argmax(scores))
        frame = x[best_k : best_k + win_len]
        out[pos : pos + win_len] += window * frame
        norm[pos : pos + win_len] += window
        prev_continuation = x[best_k + hop : best_k + hop + hop]
        pos += hop

    valid = norm > 1e-8
    out[valid] /= norm[valid]
    return out[:n_out]


def variable_resample(x: np.ndarray, rate_curve: np.ndarray) -> np.ndarray:
    """Resample with a per-sample playback rate (local pitch factor).

    ``rate_curve`` gives, for each output step, how fast the read head
    advances through x. Output ends when the read head leaves x.
    """
    x = np.asarray(x, dtype=np.float64)
    rate_curve = np.asarray(rate_curve, dtype=np.float64)
    positions = np.concatenate(([0.0], np.cumsum(rate_curve)))
    positions = positions[positions <= len(x) - 1]
    if positions.size == 0:
        return np.zeros(0)
    return np.interp(positions, np.arange(len(x)), x)
