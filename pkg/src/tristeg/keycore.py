"""Key material: passphrase hashing, SplitMix64 streams, masking and frame order.

Everything here is a pure function of its inputs. Multi-byte values are
serialized big-endian.
"""

from __future__ import annotations

from dataclasses import dataclass

from tristeg import _kernels

FNV64_OFFSET = 0xCBF29CE484222325
FNV64_PRIME = 0x100000001B3
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MAX_PASSPHRASE = 1024

_M64 = 0xFFFFFFFFFFFFFFFF

DOMAIN_MASK = 0x01
DOMAIN_PERM = 0x02
DOMAIN_EDGE = 0x03


class InvalidKey(ValueError):
    """Passphrase is empty or longer than MAX_PASSPHRASE bytes."""


def fnv1a64(data: bytes) -> int:
    h = FNV64_OFFSET
    for b in data:
        h = ((h ^ b) * FNV64_PRIME) & _M64
    return h


@dataclass(frozen=True)
class SecretKey:
    passphrase: bytes

    def __post_init__(self):
        if isinstance(self.passphrase, str):
            object.__setattr__(self, "passphrase", self.passphrase.encode("utf-8"))
        if not isinstance(self.passphrase, (bytes, bytearray)):
            raise InvalidKey("passphrase must be bytes or str")
        if not 1 <= len(self.passphrase) <= MAX_PASSPHRASE:
            raise InvalidKey(
                f"passphrase must be 1..{MAX_PASSPHRASE} bytes, got {len(self.passphrase)}"
            )
        object.__setattr__(self, "passphrase", bytes(self.passphrase))

    def __repr__(self) -> str:
        # never leak the passphrase into logs or tracebacks
        return f"SecretKey(<{len(self.passphrase)} bytes>)"


@dataclass(frozen=True)
class KeySchedule:
    seed_mask: int
    seed_perm: int
    seed_edge: int


def derive_schedule(key: SecretKey | bytes | str) -> KeySchedule:
    """Expand a passphrase into the three independent stream seeds."""
    if not isinstance(key, SecretKey):
        key = SecretKey(key)
    p = key.passphrase
    return KeySchedule(
        seed_mask=fnv1a64(p + bytes([DOMAIN_MASK])),
        seed_perm=fnv1a64(p + bytes([DOMAIN_PERM])),
        seed_edge=fnv1a64(p + bytes([DOMAIN_EDGE])),
    )


@dataclass(frozen=True)
class Prng64:
    """SplitMix64 state snapshot. Stepping returns a new snapshot."""

    state: int = 0

    def next(self) -> tuple[Prng64, int]:
        return prng_next(self)


def prng_next(p: Prng64) -> tuple[Prng64, int]:
    state = (p.state + GOLDEN_GAMMA) & _M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return Prng64(state), z ^ (z >> 31)


def keystream_bytes(seed: int, n: int) -> bytes:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _kernels.splitmix_keystream(seed, n)


def mask(data: bytes, seed: int, offset: int = 0) -> bytes:
    """XOR ``data`` against the keystream starting at byte ``offset``.

    Self-inverse: masking twice with the same seed and offset restores the input.
    """
    if offset < 0:
        raise ValueError("offset must be non-negative")
    if not data:
        return b""
    ks = _kernels.splitmix_keystream(seed, offset + len(data))[offset:]
    n = len(data)
    x = int.from_bytes(data, "big") ^ int.from_bytes(ks, "big")
    return x.to_bytes(n, "big")


def edge_bits(seed: int, n: int) -> list[int]:
    """One edge choice per block: LSB of each successive draw (0 left, 1 right)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_kernels.splitmix_lsbs(seed, n))


def frame_permutation(seed: int, frame_count: int) -> list[int]:
    if frame_count < 1:
        raise ValueError("frame_count must be at least 1")
    order = list(range(frame_count))
    p = Prng64(seed & _M64)
    for i in range(frame_count - 1, 0, -1):
        p, u = prng_next(p)
        j = u % (i + 1)
        order[i], order[j] = order[j], order[i]
    return order
