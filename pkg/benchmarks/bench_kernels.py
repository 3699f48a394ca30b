"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--width 640 --height 480 --frames 30]

Reports per-kernel timings and a full embed/extract on a random C420 video
at capacity.
"""

import argparse
import importlib
import os
import random
import sys
import timeit


def load_backend(pure: bool):
    os.environ["TRISTEG_PURE_PYTHON"] = "1" if pure else "0"
    for name in [m for m in sys.modules if m.startswith("tristeg")]:
        del sys.modules[name]
    return importlib.import_module("tristeg")


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def bench(pure, args):
    tristeg = load_backend(pure)
    from tristeg import _kernels
    from tristeg.stego import capacity, embed, extract
    from tristeg.videoio import Frame, VideoMeta, VideoSequence

    if pure is False and _kernels.BACKEND != "cython":
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return None
    rng = random.Random(0)
    meta = VideoMeta(args.width, args.height)
    video = VideoSequence(
        meta, tuple(Frame(rng.randbytes(meta.bytes_per_frame)) for _ in range(args.frames))
    )
    n = capacity(video)
    msg = rng.randbytes(n)
    bits = _kernels.unpack_bits(msg)
    buf = bytearray(video.frames[0].samples)
    tables = bytes(range(256))
    sel = bytes(rng.getrandbits(1) for _ in range(n))

    results = {
        "splitmix_keystream": best(lambda: _kernels.splitmix_keystream(1, n), args.repeat),
        "splitmix_lsbs": best(lambda: _kernels.splitmix_lsbs(1, n), args.repeat),
        "apply_tables": best(lambda: _kernels.apply_tables(msg, sel, tables, tables), args.repeat),
        "unpack_bits": best(lambda: _kernels.unpack_bits(msg), args.repeat),
        "pack_bits": best(lambda: _kernels.pack_bits(bits), args.repeat),
        "lsb_scatter (1 frame)": best(
            lambda: _kernels.lsb_scatter(buf, bits[: len(buf)]), args.repeat),
        "lsb_gather (1 frame)": best(lambda: _kernels.lsb_gather(buf, len(buf)), args.repeat),
    }
    stego = embed(video, msg, b"bench")
    results["embed (full)"] = best(lambda: embed(video, msg, b"bench"), args.repeat)
    results["extract (full)"] = best(lambda: extract(stego, b"bench"), args.repeat)
    return tristeg.BACKEND, n, results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--width", type=int, default=320)
    ap.add_argument("--height", type=int, default=240)
    ap.add_argument("--frames", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    native = bench(False, args)
    python = bench(True, args)
    print(f"video {args.width}x{args.height} C420 x{args.frames}, payload {python[1]} bytes")
    print(f"{'kernel':<24}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, t_py in python[2].items():
        if native is None:
            print(f"{name:<24}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        t_cy = native[2][name]
        print(f"{name:<24}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
