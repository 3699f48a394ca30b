import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import make_video, y4m_stream
from tristeg.videoio import (
    Colorspace,
    DimensionMismatch,
    FormatError,
    Frame,
    MalformedToken,
    MissingMagic,
    NoFrames,
    NumberingGap,
    TrailingData,
    TruncatedFrame,
    VideoMeta,
    VideoSequence,
    read_ppm_dir,
    read_video,
    read_y4m,
    write_ppm_dir,
    write_video,
    write_y4m,
    y4m_bytes,
)

TINY = b"YUV4MPEG2 W2 H2 F25:1 C420\n" + b"FRAME\n" + bytes(range(6))


def test_read_tiny():
    v = read_y4m(TINY)
    assert (v.meta.width, v.meta.height, v.meta.colorspace) == (2, 2, Colorspace.C420)
    assert v.meta.frame_rate == (25, 1)
    assert len(v.frames) == 1 and v.frames[0].samples == bytes(range(6))


def test_read_from_file_object_and_path(tmp_path):
    p = tmp_path / "t.y4m"
    p.write_bytes(TINY)
    assert read_y4m(io.BytesIO(TINY)) == read_y4m(p) == read_y4m(str(p))


def test_truncated_frame():
    with pytest.raises(TruncatedFrame) as exc:
        read_y4m(TINY[:-1])
    assert exc.value.offset == len(TINY) - 6
    assert "offset" in str(exc.value)


@pytest.mark.parametrize("data", [b"JUNK", b"", b"YUV4MPEG", b"YUV4MPEG2X W2 H2\n"])
def test_missing_magic(data):
    with pytest.raises(MissingMagic):
        read_y4m(data)


@pytest.mark.parametrize(
    "header",
    [
        b"YUV4MPEG2 W2 Hx F25:1\n",
        b"YUV4MPEG2 W2 H2 F25\n",
        b"YUV4MPEG2 W2  H2\n",
        b"YUV4MPEG2 W2\n",
        b"YUV4MPEG2 W2 H2 C422\n",
        b"YUV4MPEG2 W3 H2 C420\n",
        b"YUV4MPEG2 W2 H2 F25:0\n",
        b"YUV4MPEG2 W0 H2\n",
        b"YUV4MPEG2 W2 H2",
    ],
)
def test_malformed_header(header):
    with pytest.raises(MalformedToken):
        read_y4m(header + b"FRAME\n" + bytes(6))


def test_zero_frames():
    with pytest.raises(NoFrames):
        read_y4m(b"YUV4MPEG2 W2 H2\n")


def test_trailing_bytes_rejected():
    with pytest.raises(TrailingData) as exc:
        read_y4m(TINY + b"\x00")
    assert exc.value.offset == len(TINY)


def test_frame_line_must_be_separated():
    with pytest.raises(MalformedToken):
        read_y4m(b"YUV4MPEG2 W2 H2\nFRAMEX\n" + bytes(6))


def test_passthrough_is_byte_identical(y4m_fixture):
    _, data = y4m_fixture
    assert y4m_bytes(read_y4m(data)) == data


def test_round_trip_tiny():
    v = read_y4m(TINY)
    buf = io.BytesIO()
    assert write_y4m(v, buf) == len(TINY)
    assert buf.getvalue() == TINY
    assert read_y4m(buf.getvalue()) == v


def test_written_length_arithmetic():
    v = make_video(2, 2, 3, Colorspace.C420)
    # header "YUV4MPEG2 W2 H2 F25:1 C420\n" is 27 bytes, each frame "FRAME\n" + 6
    assert len(y4m_bytes(v)) == 27 + 3 * (6 + 6)


def test_mono_header_token():
    v = VideoSequence(VideoMeta(4, 1, colorspace=Colorspace.MONO), (Frame(b"abcd"),))
    data = y4m_bytes(v)
    assert data == b"YUV4MPEG2 W4 H1 F25:1 Cmono\nFRAME\nabcd"
    assert read_y4m(data) == v


def test_programmatic_round_trip_all_y4m_colorspaces():
    for cs in (Colorspace.C420, Colorspace.C444, Colorspace.MONO):
        v = make_video(6, 4, 2, cs, extra=("Ip", "XFOO=bar"), params=b" Ib")
        assert read_y4m(y4m_bytes(v)) == v


def test_rgb24_rejected_for_y4m():
    with pytest.raises(FormatError):
        y4m_bytes(make_video(2, 2, 1, Colorspace.RGB24))


def test_modified_meta_regenerates_header():
    v = read_y4m(b"YUV4MPEG2 H2 W2 Ip\nFRAME\n" + bytes(6))
    assert y4m_bytes(v).startswith(b"YUV4MPEG2 H2 W2 Ip\n")
    bigger = VideoSequence(
        VideoMeta(2, 4, v.meta.frame_rate, v.meta.colorspace, v.meta.extra_params,
                  v.meta.header_tokens),
        (Frame(bytes(12)),),
    )
    assert y4m_bytes(bigger).startswith(b"YUV4MPEG2 W2 H4 F25:1 C420 Ip\n")


@given(
    st.sampled_from(list(Colorspace)),
    st.integers(1, 12),
    st.integers(1, 12),
)
def test_bytes_per_frame(cs, w, h):
    if cs is Colorspace.C420:
        w, h = 2 * w, 2 * h
    meta = VideoMeta(w, h, colorspace=cs)
    expected = {Colorspace.C420: w * h * 3 // 2, Colorspace.C444: 3 * w * h,
                Colorspace.MONO: w * h, Colorspace.RGB24: 3 * w * h}[cs]
    assert meta.bytes_per_frame == expected
    with pytest.raises(ValueError):
        VideoSequence(meta, (Frame(bytes(expected + 1)),))


def test_sequence_needs_frames():
    with pytest.raises(ValueError):
        VideoSequence(VideoMeta(2, 2), ())


# -- PPM ----------------------------------------------------------------------


def ppm(w, h, raster, maxval=255, magic=b"P6"):
    return magic + f"\n{w} {h}\n{maxval}\n".encode() + raster


def test_read_single_ppm(tmp_path):
    (tmp_path / "frame_000001.ppm").write_bytes(ppm(2, 1, b"abcdef"))
    v = read_ppm_dir(tmp_path)
    assert v.meta.colorspace is Colorspace.RGB24
    assert v.meta.frame_rate == (25, 1)
    assert v.frames[0].samples == b"abcdef"


def test_ppm_header_comments(tmp_path):
    (tmp_path / "frame_000001.ppm").write_bytes(b"P6 # made by hand\n2 1\n# x\n255\nabcdef")
    assert read_ppm_dir(tmp_path).frames[0].samples == b"abcdef"


def test_ppm_numbering_gap(tmp_path):
    (tmp_path / "frame_000001.ppm").write_bytes(ppm(1, 1, b"abc"))
    (tmp_path / "frame_000003.ppm").write_bytes(ppm(1, 1, b"abc"))
    with pytest.raises(NumberingGap):
        read_ppm_dir(tmp_path)


def test_ppm_must_start_at_one(tmp_path):
    (tmp_path / "frame_000002.ppm").write_bytes(ppm(1, 1, b"abc"))
    with pytest.raises(NumberingGap):
        read_ppm_dir(tmp_path)


def test_ppm_dimension_mismatch(tmp_path):
    (tmp_path / "frame_000001.ppm").write_bytes(ppm(1, 1, b"abc"))
    (tmp_path / "frame_000002.ppm").write_bytes(ppm(2, 1, b"abcdef"))
    with pytest.raises(DimensionMismatch):
        read_ppm_dir(tmp_path)


@pytest.mark.parametrize(
    "content, err",
    [
        (ppm(1, 1, b"abc", maxval=65535), FormatError),
        (ppm(1, 1, b"abc", magic=b"P3"), FormatError),
        (ppm(1, 1, b"ab"), TruncatedFrame),
        (ppm(1, 1, b"abcd"), TrailingData),
        (b"P6\n1 1\n", FormatError),
    ],
)
def test_ppm_bad_files(tmp_path, content, err):
    (tmp_path / "frame_000001.ppm").write_bytes(content)
    with pytest.raises(err):
        read_ppm_dir(tmp_path)


def test_ppm_empty_dir(tmp_path):
    (tmp_path / "notes.txt").write_text("hi")
    with pytest.raises(NoFrames):
        read_ppm_dir(tmp_path)


def test_ppm_round_trip(tmp_path):
    v = make_video(5, 3, 2, Colorspace.RGB24)
    assert write_ppm_dir(v, tmp_path / "out") == 2
    names = sorted(p.name for p in (tmp_path / "out").iterdir())
    assert names == ["frame_000001.ppm", "frame_000002.ppm"]
    assert (tmp_path / "out" / "frame_000001.ppm").read_bytes().startswith(b"P6\n5 3\n255\n")
    assert read_ppm_dir(tmp_path / "out") == v


def test_ppm_write_rejects_yuv(tmp_path):
    with pytest.raises(FormatError):
        write_ppm_dir(make_video(), tmp_path)


def test_ppm_write_refuses_stale_frames(tmp_path):
    write_ppm_dir(make_video(2, 2, 3, Colorspace.RGB24), tmp_path)
    with pytest.raises(FormatError):
        write_ppm_dir(make_video(2, 2, 2, Colorspace.RGB24), tmp_path)


def test_ppm_write_unwritable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_bytes(b"x")
    with pytest.raises(FormatError):
        write_ppm_dir(make_video(2, 2, 1, Colorspace.RGB24), blocker / "sub")


def test_dispatch(tmp_path):
    yuv = make_video(4, 4, 2)
    rgb = make_video(3, 3, 2, Colorspace.RGB24)
    write_video(yuv, tmp_path / "a.y4m")
    write_video(rgb, tmp_path / "frames")
    assert read_video(tmp_path / "a.y4m") == yuv
    assert read_video(tmp_path / "frames") == rgb
    with pytest.raises(FormatError):
        write_video(rgb, tmp_path / "b.y4m")


def test_y4m_stream_helper_matches_writer():
    v = make_video(4, 2, 2, Colorspace.MONO)
    assert y4m_stream(b"YUV4MPEG2 W4 H2 F25:1 Cmono\n", [f.samples for f in v.frames]) == y4m_bytes(v)
