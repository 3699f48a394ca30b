"""Masked triangular-encryption LSB steganography for lossless video."""

from tristeg._kernels import BACKEND
from tristeg.keycore import SecretKey, derive_schedule
from tristeg.metrics import QualityReport, lsb_diff_census, mse, psnr
from tristeg.stego import (
    BadKeyOrNoPayload,
    CapacityError,
    CorruptPayload,
    StegoError,
    TruncatedCarrier,
    capacity,
    embed,
    extract,
)
from tristeg.videoio import (
    Colorspace,
    Frame,
    VideoMeta,
    VideoSequence,
    read_ppm_dir,
    read_video,
    read_y4m,
    write_ppm_dir,
    write_video,
    write_y4m,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "SecretKey",
    "derive_schedule",
    "QualityReport",
    "lsb_diff_census",
    "mse",
    "psnr",
    "BadKeyOrNoPayload",
    "CapacityError",
    "CorruptPayload",
    "StegoError",
    "TruncatedCarrier",
    "capacity",
    "embed",
    "extract",
    "Colorspace",
    "Frame",
    "VideoMeta",
    "VideoSequence",
    "read_ppm_dir",
    "read_video",
    "read_y4m",
    "write_ppm_dir",
    "write_video",
    "write_y4m",
]
