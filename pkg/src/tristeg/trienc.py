"""Triangular encryption of bit blocks.

A block's difference triangle has the block itself as row 0 and each
following row as the pairwise XOR of adjacent bits of the row above. The
cipher block is read off the left edge (first bit of every row) or the
right edge (last bit of every row). Reading the left edge is multiplication
by the Pascal matrix mod 2, which is its own inverse over GF(2); the right
edge is the left edge of the reversed block.

Bit 0 of a block is the most significant bit of its source byte.
"""

from __future__ import annotations

from collections.abc import Sequence

from tristeg import _kernels

MAX_BLOCK_BITS = 64

Bits = Sequence[int]


class TriError(ValueError):
    pass


def _check(b: Bits) -> None:
    if not 1 <= len(b) <= MAX_BLOCK_BITS:
        raise TriError(f"block length must be 1..{MAX_BLOCK_BITS}, got {len(b)}")


def triangle_rows(b: Bits) -> list[list[int]]:
    _check(b)
    rows = [[x & 1 for x in b]]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([prev[j] ^ prev[j + 1] for j in range(len(prev) - 1)])
    return rows


def tri_left(b: Bits) -> list[int]:
    return [row[0] for row in triangle_rows(b)]


def tri_right(b: Bits) -> list[int]:
    return [row[-1] for row in triangle_rows(b)]


def tri_decrypt_block(c: Bits, edge: int) -> list[int]:
    """Invert a left (edge 0) or right (edge 1) readout."""
    if edge & 1:
        return tri_left(c)[::-1]
    return tri_left(c)


def byte_to_bits(value: int) -> list[int]:
    return [(value >> (7 - k)) & 1 for k in range(8)]


def bits_to_byte(bits: Bits) -> int:
    out = 0
    for x in bits:
        out = (out << 1) | (x & 1)
    return out


def _table(fn) -> bytes:
    return bytes(bits_to_byte(fn(byte_to_bits(v))) for v in range(256))


ENC_LEFT = _table(tri_left)
ENC_RIGHT = _table(tri_right)
DEC_LEFT = _table(lambda c: tri_decrypt_block(c, 0))
DEC_RIGHT = _table(lambda c: tri_decrypt_block(c, 1))


def _edges(data: bytes, edge: Bits) -> bytes:
    if len(edge) < len(data):
        raise TriError(f"need {len(data)} edge bits, got {len(edge)}")
    return edge if isinstance(edge, bytes) else bytes(edge[: len(data)])


def encrypt_bytes(data: bytes, edge: Bits) -> bytes:
    """Encrypt each byte as an 8-bit triangle block, edge[i] choosing its readout."""
    return _kernels.apply_tables(bytes(data), _edges(data, edge), ENC_LEFT, ENC_RIGHT)


def decrypt_bytes(data: bytes, edge: Bits) -> bytes:
    return _kernels.apply_tables(bytes(data), _edges(data, edge), DEC_LEFT, DEC_RIGHT)
