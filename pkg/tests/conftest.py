import random

import pytest

from tristeg.videoio import Colorspace, Frame, VideoMeta, VideoSequence


def make_video(width=16, height=16, frames=3, colorspace=Colorspace.C420, seed=0,
               extra=(), params=b""):
    rng = random.Random(seed)
    meta = VideoMeta(width, height, (25, 1), colorspace, tuple(extra))
    return VideoSequence(
        meta,
        tuple(Frame(rng.randbytes(meta.bytes_per_frame), params) for _ in range(frames)),
    )


def y4m_stream(header: bytes, payloads, frame_params=None) -> bytes:
    frame_params = frame_params or [b""] * len(payloads)
    body = b"".join(b"FRAME" + p + b"\n" + f for p, f in zip(frame_params, payloads))
    return header + body


def _fixtures():
    rng = random.Random(1234)
    return {
        "c420_16x16x3": y4m_stream(
            b"YUV4MPEG2 W16 H16 F25:1 C420\n", [rng.randbytes(384) for _ in range(3)]
        ),
        "c420jpeg_extra_tokens": y4m_stream(
            b"YUV4MPEG2 W8 H4 F30000:1001 Ip A1:1 C420jpeg XYSCSS=420JPEG\n",
            [rng.randbytes(48) for _ in range(4)],
        ),
        "c444_frame_params": y4m_stream(
            b"YUV4MPEG2 W4 H4 F24:1 C444\n",
            [rng.randbytes(48) for _ in range(6)],
            [b" Ip", b"", b" Ib XFOO=1", b"", b"", b" Xlast"],
        ),
        "mono_4x4x7": y4m_stream(
            b"YUV4MPEG2 W4 H4 F25:1 Cmono\n", [rng.randbytes(16) for _ in range(7)]
        ),
        "no_colorspace_token": y4m_stream(
            b"YUV4MPEG2 H6 W10 F50:1\n", [rng.randbytes(90) for _ in range(5)]
        ),
        "mono_odd_width": y4m_stream(
            b"YUV4MPEG2 W13 H9 F1:1 Cmono XCOMMENT=odd\n", [rng.randbytes(117) for _ in range(10)]
        ),
    }


Y4M_FIXTURES = _fixtures()


@pytest.fixture(params=sorted(Y4M_FIXTURES))
def y4m_fixture(request):
    return request.param, Y4M_FIXTURES[request.param]
