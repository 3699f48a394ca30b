"""Fidelity measures between a cover and a stego video."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from tristeg.videoio import VideoSequence

PEAK = 255.0
INF = math.inf


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class QualityReport:
    per_frame_psnr: list[float]
    global_psnr: float
    mse: float
    changed_samples: int
    changed_fraction: float
    total_samples: int
    non_lsb_changes: int = 0
    per_frame_changed: list[int] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [
            f"global_psnr={_fmt(self.global_psnr)}",
            f"mse={self.mse:.4f}",
            f"changed_samples={self.changed_samples}",
            f"changed_fraction={self.changed_fraction:.4f}",
            f"total_samples={self.total_samples}",
            f"non_lsb_changes={self.non_lsb_changes}",
            "per_frame_psnr=" + ",".join(_fmt(v) for v in self.per_frame_psnr),
        ]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        d = asdict(self)
        d["global_psnr"] = _jsonable(self.global_psnr)
        d["per_frame_psnr"] = [_jsonable(v) for v in self.per_frame_psnr]
        d["mse"] = round(self.mse, 4)
        d["changed_fraction"] = round(self.changed_fraction, 4)
        return json.dumps(d)


def _fmt(v: float) -> str:
    return "inf" if math.isinf(v) else f"{v:.4f}"


def _jsonable(v: float):
    return "inf" if math.isinf(v) else round(v, 4)


def _planes(a: VideoSequence, b: VideoSequence) -> tuple[np.ndarray, np.ndarray]:
    if a.meta.bytes_per_frame != b.meta.bytes_per_frame or len(a.frames) != len(b.frames) \
            or (a.meta.width, a.meta.height, a.meta.colorspace) != (b.meta.width, b.meta.height, b.meta.colorspace):
        raise ShapeMismatch(
            f"videos differ in shape: {a.meta.width}x{a.meta.height} {a.meta.colorspace.name} "
            f"x{len(a.frames)} vs {b.meta.width}x{b.meta.height} {b.meta.colorspace.name} x{len(b.frames)}"
        )

    def stack(v):
        return np.frombuffer(b"".join(f.samples for f in v.frames), dtype=np.uint8).reshape(
            len(v.frames), v.meta.bytes_per_frame
        )

    return stack(a), stack(b)


def mse(a: VideoSequence, b: VideoSequence) -> float:
    x, y = _planes(a, b)
    d = x.astype(np.int32) - y.astype(np.int32)
    return float(np.mean(d * d))


def psnr(m: float) -> float:
    """PSNR in dB for peak 255; ``math.inf`` when ``m`` is zero."""
    if m < 0:
        raise ValueError("mean squared error cannot be negative")
    if m == 0:
        return INF
    return 10.0 * math.log10(PEAK * PEAK / m)


def lsb_diff_census(a: VideoSequence, b: VideoSequence) -> QualityReport:
    x, y = _planes(a, b)
    d = x.astype(np.int32) - y.astype(np.int32)
    sq = d * d
    per_frame_mse = sq.mean(axis=1)
    diff = x ^ y
    changed = diff != 0
    total = int(x.size)
    changed_samples = int(changed.sum())
    return QualityReport(
        per_frame_psnr=[psnr(float(m)) for m in per_frame_mse],
        global_psnr=psnr(float(sq.mean())),
        mse=float(sq.mean()),
        changed_samples=changed_samples,
        changed_fraction=changed_samples / total,
        total_samples=total,
        non_lsb_changes=int((changed & (diff != 1)).sum()),
        per_frame_changed=[int(c) for c in changed.sum(axis=1)],
    )
