# cython: language_level=3
"""Compiled kernels. Contract mirrors ``tristeg._purepy`` exactly."""

from libc.stdint cimport uint64_t, uint8_t

cdef uint64_t GOLDEN_GAMMA = 0x9E3779B97F4A7C15ULL


cdef inline uint64_t _mix(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def splitmix_keystream(seed, Py_ssize_t n):
    cdef uint64_t state = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t z
    cdef Py_ssize_t i = 0, k
    cdef bytearray out = bytearray(n)
    cdef uint8_t[::1] view = out
    with nogil:
        while i < n:
            state = state + GOLDEN_GAMMA
            z = _mix(state)
            k = 0
            while k < 8 and i < n:
                view[i] = <uint8_t>(z >> (56 - 8 * k))
                i += 1
                k += 1
    return bytes(out)


def splitmix_lsbs(seed, Py_ssize_t n):
    cdef uint64_t state = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef Py_ssize_t i
    cdef bytearray out = bytearray(n)
    cdef uint8_t[::1] view = out
    with nogil:
        for i in range(n):
            state = state + GOLDEN_GAMMA
            view[i] = <uint8_t>(_mix(state) & 1)
    return bytes(out)


def apply_tables(const uint8_t[::1] data, const uint8_t[::1] selector,
                 const uint8_t[::1] table0, const uint8_t[::1] table1):
    cdef Py_ssize_t n = data.shape[0], i
    if selector.shape[0] < n:
        n = selector.shape[0]
    if table0.shape[0] != 256 or table1.shape[0] != 256:
        raise ValueError("tables must have 256 entries")
    cdef bytearray out = bytearray(n)
    cdef uint8_t[::1] view = out
    with nogil:
        for i in range(n):
            if selector[i]:
                view[i] = table1[data[i]]
            else:
                view[i] = table0[data[i]]
    return bytes(out)


def unpack_bits(const uint8_t[::1] data):
    cdef Py_ssize_t n = data.shape[0], i, k
    cdef bytearray out = bytearray(8 * n)
    cdef uint8_t[::1] view = out
    cdef uint8_t b
    with nogil:
        for i in range(n):
            b = data[i]
            for k in range(8):
                view[8 * i + k] = (b >> (7 - k)) & 1
    return bytes(out)


def pack_bits(const uint8_t[::1] bits):
    cdef Py_ssize_t n = bits.shape[0], i, k
    if n % 8:
        raise ValueError("bit count must be a multiple of 8")
    cdef bytearray out = bytearray(n // 8)
    cdef uint8_t[::1] view = out
    cdef uint8_t acc
    with nogil:
        for i in range(n // 8):
            acc = 0
            for k in range(8):
                acc = (acc << 1) | (bits[8 * i + k] & 1)
            view[i] = acc
    return bytes(out)


def lsb_scatter(uint8_t[::1] samples, const uint8_t[::1] bits):
    cdef Py_ssize_t n = bits.shape[0], i
    if n > samples.shape[0]:
        raise ValueError("more bits than samples")
    with nogil:
        for i in range(n):
            samples[i] = (samples[i] & 0xFE) | (bits[i] & 1)


def lsb_gather(const uint8_t[::1] samples, Py_ssize_t n):
    cdef Py_ssize_t i
    if n > samples.shape[0]:
        raise ValueError("more bits requested than samples")
    cdef bytearray out = bytearray(n)
    cdef uint8_t[::1] view = out
    with nogil:
        for i in range(n):
            view[i] = samples[i] & 1
    return bytes(out)
