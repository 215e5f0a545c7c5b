"""Autocorrelation pitch tracking for short speech segments.

Frames are 25 ms with a 10 ms hop. A frame is voiced when the peak of
its normalized autocorrelation inside the F0 search range exceeds
``VOICING_THRESHOLD``; the lag is refined by parabolic interpolation.
"""

from __future__ import annotations

import numpy as np

F0_MIN = 50.0
F0_MAX = 500.0
FRAME_MS = 25.0
HOP_MS = 10.0
VOICING_THRESHOLD = 0.3


def _frame_signal(x: np.ndarray, sample_rate: int) -> tuple[np.ndarray, int, int]:
    frame = int(round(sample_rate * FRAME_MS / 1000.0))
    hop = int(round(sample_rate * HOP_MS / 1000.0))
    if len(x) < frame:
        return np.empty((0, frame)), frame, hop
    n_frames = 1 + (len(x) - frame) // hop
    idx = np.arange(frame)[None, :] + hop * np.arange(n_frames)[:, None]
    return x[idx], frame, hop


def _frame_f0(frame: np.ndarray, sample_rate: int) -> float:
    """F0 of one frame in Hz, or 0.0 when unvoiced."""
    frame = frame - np.mean(frame)
    energy = float(np.dot(frame, frame))
    if energy <= 0.0:
        return 0.0
    ac = np.correlate(frame, frame, mode="full")[len(frame) - 1 :]
    ac = ac / ac[0]
    lag_min = int(sample_rate / F0_MAX)
    lag_max = min(int(sample_rate / F0_MIN), len(ac) - 2)
    if lag_max <= lag_min:
        return 0.0
    seg = ac[lag_min : lag_max + 1]
    k = int(np.argmax(seg)) + lag_min
    if ac[k] < VOICING_THRESHOLD:
        return 0.0
    # parabolic refinement around the autocorrelation peak
    if 0 < k < len(ac) - 1:
        y0, y1, y2 = ac[k - 1], ac[k], ac[k + 1]
        denom = y0 - 2.0 * y1 + y2
        delta = 0.5 * (y0 - y2) / denom if denom != 0.0 else 0.0
        delta = float(np.clip(delta, -0.5, 0.5))
    else:
        delta = 0.0
    return sample_rate / (k + delta)


def track_f0(x: np.ndarray, sample_rate: int) -> np.ndarray:
    """Frame-wise F0 contour in Hz; unvoiced frames are 0."""
    frames, _, _ = _frame_signal(np.asarray(x, dtype=np.float64), sample_rate)
    return np.array([_frame_f0(f, sample_rate) for f in frames])


def median_f0(x: np.ndarray, sample_rate: int) -> float:
    """Median F0 over voiced frames; 0.0 when nothing is voiced."""
    contour = track_f0(x, sample_rate)
    voiced = contour[contour > 0]
    if voiced.size == 0:
        return 0.0
    return float(np.median(voiced))


def is_voiced(x: np.ndarray, sample_rate: int) -> bool:
    """True when at least one third of the frames carry a detectable pitch."""
    contour = track_f0(x, sample_rate)
    if contour.size == 0:
        return False
    return float(np.mean(contour > 0)) >= 1.0 / 3.0
