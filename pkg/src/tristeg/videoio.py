"""Lossless video containers: YUV4MPEG2 streams and directories of P6 frames.

Frames are flat ``bytes`` of 8-bit samples, plane-ordered for YUV
(Y, then U, then V) and pixel-interleaved for RGB24. Y4M round trips are
byte-exact: unknown header tokens and per-frame parameters are kept verbatim.
"""

from __future__ import annotations

import enum
import io
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, Union

Y4M_MAGIC = b"YUV4MPEG2"
FRAME_TAG = b"FRAME"
PPM_NAME = "frame_{:06d}.ppm"
_PPM_RE = re.compile(r"^frame_(\d{6})\.ppm$")

Source = Union[bytes, bytearray, str, os.PathLike, BinaryIO]


class Colorspace(enum.Enum):
    C420 = "420"
    C444 = "444"
    MONO = "mono"
    RGB24 = "rgb24"


_Y4M_COLORSPACES = {
    "C420": Colorspace.C420,
    "C420jpeg": Colorspace.C420,
    "C420paldv": Colorspace.C420,
    "C420mpeg2": Colorspace.C420,
    "C444": Colorspace.C444,
    "Cmono": Colorspace.MONO,
}
_CANONICAL_TOKEN = {
    Colorspace.C420: "C420",
    Colorspace.C444: "C444",
    Colorspace.MONO: "Cmono",
}


class FormatError(ValueError):
    """A container could not be parsed or written. ``offset`` is the byte
    position of the problem when known."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


class MissingMagic(FormatError):
    pass


class MalformedToken(FormatError):
    pass


class TruncatedFrame(FormatError):
    pass


class NoFrames(FormatError):
    pass


class TrailingData(FormatError):
    pass


class NumberingGap(FormatError):
    pass


class DimensionMismatch(FormatError):
    pass


@dataclass(frozen=True)
class VideoMeta:
    width: int
    height: int
    frame_rate: tuple[int, int] = (25, 1)
    colorspace: Colorspace = Colorspace.C420
    extra_params: tuple[str, ...] = ()
    # verbatim Y4M header tokens from the source stream, used to reproduce it exactly
    header_tokens: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"frame size must be positive, got {self.width}x{self.height}")
        num, den = self.frame_rate
        if den < 1 or num < 0:
            raise ValueError(f"bad frame rate {num}:{den}")
        if self.colorspace is Colorspace.C420 and (self.width % 2 or self.height % 2):
            raise ValueError("C420 requires even width and height")
        object.__setattr__(self, "extra_params", tuple(self.extra_params))

    @property
    def bytes_per_frame(self) -> int:
        px = self.width * self.height
        if self.colorspace is Colorspace.C420:
            return px * 3 // 2
        if self.colorspace is Colorspace.MONO:
            return px
        return px * 3


@dataclass(frozen=True)
class Frame:
    samples: bytes
    # raw bytes between b"FRAME" and the newline, e.g. b"" or b" Ip"
    params: bytes = b""

    def __post_init__(self):
        object.__setattr__(self, "samples", bytes(self.samples))
        if self.params and not self.params.startswith(b" "):
            raise ValueError("frame params must start with a space")


@dataclass(frozen=True)
class VideoSequence:
    meta: VideoMeta
    frames: tuple[Frame, ...]

    def __post_init__(self):
        frames = tuple(
            f if isinstance(f, Frame) else Frame(bytes(f)) for f in self.frames
        )
        object.__setattr__(self, "frames", frames)
        if not frames:
            raise ValueError("a video needs at least one frame")
        size = self.meta.bytes_per_frame
        for i, f in enumerate(frames):
            if len(f.samples) != size:
                raise ValueError(
                    f"frame {i} has {len(f.samples)} samples, expected {size}"
                )

    @property
    def total_samples(self) -> int:
        return len(self.frames) * self.meta.bytes_per_frame

    def replace_samples(self, samples: list[bytes]) -> VideoSequence:
        """Same metadata and frame params, new sample buffers."""
        return VideoSequence(
            self.meta,
            tuple(Frame(s, f.params) for s, f in zip(samples, self.frames, strict=True)),
        )


# -- Y4M ---------------------------------------------------------------------


def _read_all(source: Source) -> bytes:
    if isinstance(source, (bytes, bytearray, memoryview)):
        return bytes(source)
    if isinstance(source, (str, os.PathLike)):
        return Path(source).read_bytes()
    return source.read()


def _parse_header_tokens(tokens: list[str], offset: int) -> VideoMeta:
    width = height = None
    rate = (25, 1)
    colorspace = Colorspace.C420
    extra = []
    pos = offset
    for tok in tokens:
        if not tok:
            raise MalformedToken("empty header token", pos)
        tag, value = tok[0], tok[1:]
        try:
            if tag == "W":
                width = int(value)
            elif tag == "H":
                height = int(value)
            elif tag == "F":
                num, den = value.split(":")
                rate = (int(num), int(den))
            elif tag == "C":
                if tok not in _Y4M_COLORSPACES:
                    raise MalformedToken(f"unsupported colorspace {tok!r}", pos)
                colorspace = _Y4M_COLORSPACES[tok]
            else:
                extra.append(tok)
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise MalformedToken(f"malformed header token {tok!r}", pos) from None
        pos += len(tok) + 1
    if width is None or height is None:
        raise MalformedToken("header lacks W or H", offset)
    try:
        return VideoMeta(width, height, rate, colorspace, tuple(extra), tuple(tokens))
    except ValueError as exc:
        raise MalformedToken(str(exc), offset) from None


def parse_y4m(data: bytes) -> VideoSequence:
    if not data.startswith(Y4M_MAGIC) or data[len(Y4M_MAGIC):len(Y4M_MAGIC) + 1] not in (b" ", b"\n"):
        raise MissingMagic("stream does not start with YUV4MPEG2", 0)
    nl = data.find(b"\n")
    if nl < 0:
        raise MalformedToken("unterminated header line", len(data))
    rest = data[len(Y4M_MAGIC):nl]
    try:
        text = rest.decode("ascii")
    except UnicodeDecodeError:
        raise MalformedToken("non-ASCII header", len(Y4M_MAGIC)) from None
    tokens = text[1:].split(" ") if text else []
    meta = _parse_header_tokens(tokens, len(Y4M_MAGIC) + 1)

    size = meta.bytes_per_frame
    frames = []
    pos = nl + 1
    while pos < len(data):
        if data[pos:pos + len(FRAME_TAG)] != FRAME_TAG:
            raise TrailingData("expected FRAME marker", pos)
        eol = data.find(b"\n", pos)
        if eol < 0:
            raise TruncatedFrame("unterminated FRAME line", pos)
        params = data[pos + len(FRAME_TAG):eol]
        if params and not params.startswith(b" "):
            raise MalformedToken("malformed FRAME line", pos)
        start = eol + 1
        if start + size > len(data):
            raise TruncatedFrame(
                f"frame {len(frames)} needs {size} bytes, {len(data) - start} remain", start
            )
        frames.append(Frame(data[start:start + size], params))
        pos = start + size
    if not frames:
        raise NoFrames("stream holds no frames", pos)
    return VideoSequence(meta, tuple(frames))


def read_y4m(source: Source) -> VideoSequence:
    return parse_y4m(_read_all(source))


def _header_line(meta: VideoMeta) -> bytes:
    tokens = meta.header_tokens
    if tokens is not None:
        try:
            reparsed = _parse_header_tokens(list(tokens), 0)
        except FormatError:
            reparsed = None
        if reparsed != meta:
            tokens = None
    if tokens is None:
        num, den = meta.frame_rate
        tokens = (
            f"W{meta.width}",
            f"H{meta.height}",
            f"F{num}:{den}",
            _CANONICAL_TOKEN[meta.colorspace],
            *meta.extra_params,
        )
    return b" ".join([Y4M_MAGIC, *(t.encode("ascii") for t in tokens)]) + b"\n"


def y4m_bytes(video: VideoSequence) -> bytes:
    if video.meta.colorspace is Colorspace.RGB24:
        raise FormatError("RGB24 video cannot be written as Y4M")
    parts = [_header_line(video.meta)]
    for f in video.frames:
        parts.append(FRAME_TAG + f.params + b"\n")
        parts.append(f.samples)
    return b"".join(parts)


def write_y4m(video: VideoSequence, sink: Union[str, os.PathLike, BinaryIO]) -> int:
    """Serialize ``video``; returns the number of bytes written."""
    data = y4m_bytes(video)
    if isinstance(sink, (str, os.PathLike)):
        Path(sink).write_bytes(data)
    else:
        sink.write(data)
    return len(data)


# -- PPM sequences -------------------------------------------------------------


def _ppm_fields(data: bytes, name: str) -> tuple[int, int, bytes]:
    if data[:2] != b"P6":
        raise FormatError(f"{name}: not a binary PPM (P6)", 0)
    pos = 2
    fields = []
    while len(fields) < 3:
        start = pos
        while pos < len(data) and (data[pos:pos + 1].isspace() or data[pos] == ord("#")):
            if data[pos] == ord("#"):
                eol = data.find(b"\n", pos)
                pos = len(data) if eol < 0 else eol
            pos += 1
        if pos == start:
            raise FormatError(f"{name}: malformed header", pos)
        digits = pos
        while pos < len(data) and data[pos:pos + 1].isdigit():
            pos += 1
        if pos == digits:
            raise FormatError(f"{name}: malformed header", pos)
        fields.append(int(data[digits:pos]))
    if pos >= len(data) or not data[pos:pos + 1].isspace():
        raise FormatError(f"{name}: header must end with one whitespace byte", pos)
    pos += 1
    width, height, maxval = fields
    if maxval != 255:
        raise FormatError(f"{name}: maxval {maxval} unsupported, need 255", pos)
    need = width * height * 3
    raster = data[pos:]
    if len(raster) < need:
        raise TruncatedFrame(f"{name}: raster needs {need} bytes, has {len(raster)}", pos)
    if len(raster) > need:
        raise TrailingData(f"{name}: {len(raster) - need} bytes after raster", pos + need)
    return width, height, raster


def read_ppm_dir(path: Union[str, os.PathLike]) -> VideoSequence:
    root = Path(path)
    if not root.is_dir():
        raise FormatError(f"{root} is not a directory")
    numbers = sorted(
        int(m.group(1)) for m in map(_PPM_RE.match, os.listdir(root)) if m
    )
    if not numbers:
        raise NoFrames(f"{root} holds no frame_NNNNNN.ppm files")
    for expected, got in enumerate(numbers, start=1):
        if got != expected:
            raise NumberingGap(f"{root}: frame {expected:06d} missing (next is {got:06d})")
    frames = []
    dims = None
    for n in numbers:
        name = PPM_NAME.format(n)
        width, height, raster = _ppm_fields((root / name).read_bytes(), name)
        if dims is None:
            dims = (width, height)
        elif dims != (width, height):
            raise DimensionMismatch(
                f"{name} is {width}x{height}, first frame is {dims[0]}x{dims[1]}"
            )
        frames.append(Frame(raster))
    meta = VideoMeta(dims[0], dims[1], (25, 1), Colorspace.RGB24)
    return VideoSequence(meta, tuple(frames))


def write_ppm_dir(video: VideoSequence, path: Union[str, os.PathLike]) -> int:
    """Write one P6 file per frame; returns the number of files written."""
    meta = video.meta
    if meta.colorspace is not Colorspace.RGB24:
        raise FormatError(f"PPM output needs RGB24, video is {meta.colorspace.name}")
    root = Path(path)
    try:
        root.mkdir(parents=True, exist_ok=True)
        stale = [
            name for name in os.listdir(root)
            if (m := _PPM_RE.match(name)) and not 1 <= int(m.group(1)) <= len(video.frames)
        ]
        if stale:
            raise FormatError(f"{root} already holds unrelated frame files, e.g. {stale[0]}")
        header = f"P6\n{meta.width} {meta.height}\n255\n".encode("ascii")
        for i, f in enumerate(video.frames, start=1):
            (root / PPM_NAME.format(i)).write_bytes(header + f.samples)
    except OSError as exc:
        raise FormatError(f"cannot write {root}: {exc}") from exc
    return len(video.frames)


# -- format dispatch -----------------------------------------------------------


def detect_format(path: Union[str, os.PathLike]) -> str:
    p = Path(path)
    if p.is_dir():
        return "ppmdir"
    return "y4m"


def read_video(path: Union[str, os.PathLike], fmt: str = "auto") -> VideoSequence:
    if fmt == "auto":
        fmt = detect_format(path)
    if fmt == "ppmdir":
        return read_ppm_dir(path)
    if fmt == "y4m":
        try:
            return read_y4m(path)
        except IsADirectoryError:
            raise FormatError(f"{path} is a directory, not a Y4M file") from None
    raise ValueError(f"unknown format {fmt!r}")


def write_video(video: VideoSequence, path: Union[str, os.PathLike], fmt: str = "auto") -> int:
    """Write as Y4M or PPM directory; ``auto`` picks Y4M for a ``.y4m`` suffix
    or a non-RGB video, else a PPM directory. Returns bytes or files written."""
    if fmt == "auto":
        p = Path(path)
        if p.suffix.lower() == ".y4m" or video.meta.colorspace is not Colorspace.RGB24:
            fmt = "y4m"
        else:
            fmt = "ppmdir"
    if fmt == "ppmdir":
        return write_ppm_dir(video, path)
    if fmt == "y4m":
        buf = io.BytesIO()
        write_y4m(video, buf)
        try:
            Path(path).write_bytes(buf.getvalue())
        except OSError as exc:
            raise FormatError(f"cannot write {path}: {exc}") from exc
        return len(buf.getvalue())
    raise ValueError(f"unknown format {fmt!r}")
