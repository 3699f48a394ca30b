"""Hide and recover payloads in the LSB plane of key-permuted video frames.

Embedding frames the payload behind a 14-byte header, masks the whole
stream with the key's XOR keystream, triangular-encrypts every byte, and
writes the cipher bits MSB-first into sample LSBs. Slots are visited frame
by frame in key-derived order, samples in storage order within a frame.
Extraction runs the same steps backwards.
"""

from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass

from tristeg import _kernels
from tristeg.keycore import SecretKey, derive_schedule, frame_permutation, mask
from tristeg.trienc import decrypt_bytes, encrypt_bytes
from tristeg.videoio import VideoSequence

MAGIC = b"TLSB"
VERSION = 0x01
FLAGS = 0x00
HEADER_SIZE = 14
HEADER_BITS = 8 * HEADER_SIZE
MAX_PAYLOAD = 0xFFFFFFFF

_HDR_FMT = ">4sBBII"


class StegoError(Exception):
    pass


class CapacityError(StegoError):
    def __init__(self, required_bits: int, available_bits: int):
        self.required_bits = required_bits
        self.available_bits = available_bits
        super().__init__(f"need {required_bits} bits, have {available_bits}")


class BadKeyOrNoPayload(StegoError):
    """Header magic/version did not decode: wrong key or nothing embedded."""


class CorruptPayload(StegoError):
    """Header decoded but the payload CRC-32 does not match."""


class TruncatedCarrier(StegoError):
    """The decoded length runs past the end of the carrier."""


def crc32(data: bytes) -> int:
    return zlib.crc32(data) & 0xFFFFFFFF


@dataclass(frozen=True)
class StegoHeader:
    payload_len: int
    crc32: int
    magic: bytes = MAGIC
    version: int = VERSION
    flags: int = FLAGS

    def pack(self) -> bytes:
        return struct.pack(_HDR_FMT, self.magic, self.version, self.flags,
                           self.payload_len, self.crc32)

    @classmethod
    def unpack(cls, raw: bytes) -> StegoHeader:
        if len(raw) != HEADER_SIZE:
            raise ValueError(f"header is {HEADER_SIZE} bytes, got {len(raw)}")
        magic, version, flags, length, crc = struct.unpack(_HDR_FMT, raw)
        return cls(length, crc, magic, version, flags)


def encode_header(payload: bytes) -> bytes:
    if len(payload) > MAX_PAYLOAD:
        raise ValueError(f"payload of {len(payload)} bytes exceeds the 32-bit length field")
    return StegoHeader(len(payload), crc32(payload)).pack()


def lsb_slots_used(message_len: int) -> int:
    return HEADER_BITS + 8 * message_len


def capacity(video: VideoSequence) -> int:
    total = video.total_samples
    if total < HEADER_BITS:
        return 0
    return (total - HEADER_BITS) // 8


class BitCursor:
    """Walks LSB slots: frames in ``order``, samples 0.. within each frame.

    ``position`` is ``(frame rank, sample index)``; rank indexes ``order``.
    """

    def __init__(self, buffers: list, order: list[int]):
        if sorted(order) != list(range(len(buffers))):
            raise ValueError("order must be a permutation of the frame indices")
        self.buffers = buffers
        self.order = list(order)
        self.position = (0, 0)

    @property
    def remaining(self) -> int:
        rank, idx = self.position
        left = sum(len(self.buffers[f]) for f in self.order[rank:])
        return left - idx

    def _segments(self, nbits: int):
        rank, idx = self.position
        while nbits:
            if rank >= len(self.order):
                raise TruncatedCarrier("ran out of LSB slots")
            buf = self.buffers[self.order[rank]]
            take = min(nbits, len(buf) - idx)
            yield buf, idx, take
            nbits -= take
            idx += take
            if idx == len(buf):
                rank, idx = rank + 1, 0
            self.position = (rank, idx)

    def write(self, bits: bytes) -> None:
        """Store a sequence of 0/1 bytes into successive LSBs."""
        done = 0
        for buf, idx, take in self._segments(len(bits)):
            view = memoryview(buf)[idx:idx + take]
            _kernels.lsb_scatter(view, bits[done:done + take])
            done += take

    def read(self, nbits: int) -> bytes:
        """Read ``nbits`` successive LSBs as 0/1 bytes."""
        parts = []
        for buf, idx, take in self._segments(nbits):
            parts.append(_kernels.lsb_gather(memoryview(buf)[idx:idx + take], take))
        return b"".join(parts)


def _schedule(key):
    return derive_schedule(key if isinstance(key, SecretKey) else SecretKey(key))


def embed(cover: VideoSequence, message: bytes, key: SecretKey | bytes | str) -> VideoSequence:
    """Hide ``message`` in ``cover``; returns the stego video."""
    sched = _schedule(key)
    message = bytes(message)
    need = lsb_slots_used(len(message))
    if need > cover.total_samples:
        raise CapacityError(need, cover.total_samples)

    stream = encode_header(message) + message
    masked = mask(stream, sched.seed_mask, 0)
    edges = _kernels.splitmix_lsbs(sched.seed_edge, len(stream))
    cipher = encrypt_bytes(masked, edges)

    buffers = [bytearray(f.samples) for f in cover.frames]
    cursor = BitCursor(buffers, frame_permutation(sched.seed_perm, len(buffers)))
    cursor.write(_kernels.unpack_bits(cipher))
    return cover.replace_samples([bytes(b) for b in buffers])


def extract(stego: VideoSequence, key: SecretKey | bytes | str) -> bytes:
    """Recover the payload hidden by :func:`embed` under the same key."""
    sched = _schedule(key)
    buffers = [f.samples for f in stego.frames]
    cursor = BitCursor(buffers, frame_permutation(sched.seed_perm, len(buffers)))
    if cursor.remaining < HEADER_BITS:
        raise BadKeyOrNoPayload("carrier is smaller than a header")

    edges = _kernels.splitmix_lsbs(sched.seed_edge, HEADER_SIZE)
    raw = decrypt_bytes(_kernels.pack_bits(cursor.read(HEADER_BITS)), edges)
    header = StegoHeader.unpack(mask(raw, sched.seed_mask, 0))
    if header.magic != MAGIC or header.version != VERSION:
        raise BadKeyOrNoPayload("bad key or no payload")

    nbits = 8 * header.payload_len
    if nbits > cursor.remaining:
        raise TruncatedCarrier(
            f"header declares {header.payload_len} bytes, carrier holds "
            f"{cursor.remaining // 8} more"
        )
    edges = _kernels.splitmix_lsbs(sched.seed_edge, HEADER_SIZE + header.payload_len)
    body = decrypt_bytes(_kernels.pack_bits(cursor.read(nbits)), edges[HEADER_SIZE:])
    payload = mask(body, sched.seed_mask, HEADER_SIZE)
    if crc32(payload) != header.crc32:
        raise CorruptPayload("payload CRC-32 mismatch")
    return payload
