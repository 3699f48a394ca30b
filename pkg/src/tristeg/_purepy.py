"""Pure-Python kernels. Same contract as the compiled ``_core`` module."""

from __future__ import annotations

_M64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

_LSB_TABLE = bytes(i & 1 for i in range(256))
_CLEAR_TABLE = bytes(i & 0xFE for i in range(256))
_BIT_CHARS = bytes.maketrans(b"\x00\x01", b"01")
_UNPACKED = [bytes((b >> (7 - k)) & 1 for k in range(8)) for b in range(256)]


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def splitmix_keystream(seed: int, n: int) -> bytes:
    state = seed & _M64
    out = bytearray()
    for _ in range((n + 7) // 8):
        state = (state + GOLDEN_GAMMA) & _M64
        out += _mix(state).to_bytes(8, "big")
    return bytes(out[:n])


def splitmix_lsbs(seed: int, n: int) -> bytes:
    state = seed & _M64
    out = bytearray(n)
    for k in range(n):
        state = (state + GOLDEN_GAMMA) & _M64
        out[k] = _mix(state) & 1
    return bytes(out)


def apply_tables(data: bytes, selector: bytes, table0: bytes, table1: bytes) -> bytes:
    return bytes(
        table1[b] if s else table0[b] for b, s in zip(data, selector[: len(data)])
    )


def unpack_bits(data: bytes) -> bytes:
    return b"".join(_UNPACKED[b] for b in data)


def pack_bits(bits: bytes) -> bytes:
    if len(bits) % 8:
        raise ValueError("bit count must be a multiple of 8")
    if not bits:
        return b""
    return int(bytes(bits).translate(_BIT_CHARS), 2).to_bytes(len(bits) // 8, "big")


def lsb_scatter(samples: bytearray, bits: bytes) -> None:
    n = len(bits)
    if n > len(samples):
        raise ValueError("more bits than samples")
    cleared = bytes(samples[:n]).translate(_CLEAR_TABLE)
    samples[:n] = bytes(c | b for c, b in zip(cleared, bits))


def lsb_gather(samples: bytes, n: int) -> bytes:
    if n > len(samples):
        raise ValueError("more bits requested than samples")
    return bytes(samples[:n]).translate(_LSB_TABLE)
