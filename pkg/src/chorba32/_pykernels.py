"""Pure-Python CRC kernels.

Fallback backend mirroring the compiled extension in `_kernels.pyx`.
Every update function takes and returns the raw running CRC state
(reflected convention, no init/xorout applied) and matches the bitwise
oracle bit-for-bit on any input.

Word mechanics: 8-byte little-endian loads make the u64 bit index equal
the stream bit index, so "forward by k bits" is a left shift by k with
the overflow carried into later words.
"""

from __future__ import annotations

POLY_REFLECTED = 0xEDB88320
MASK32 = 0xFFFFFFFF
MASK64 = 0xFFFFFFFFFFFFFFFF

# forward bit offsets of the degree-64 scaled generator, measured from the
# leading term: 64 - e for e in {52,46,44,32,24,22,20,16,14,10,8,4,2,0}
_SCALED_G_SUB = (12, 18, 20, 32, 40, 42, 44, 48, 50, 54, 56, 60, 62)

# minimum input sizes before a stage hands the work down the chain
SMALL_MIN_BYTES = 64
SCALED_MIN_BYTES = 16


def bitwise_update(data, state):
    crc = state & MASK32
    for byte in data:
        crc ^= byte
        for _ in range(8):
            crc = (crc >> 1) ^ (POLY_REFLECTED & -(crc & 1))
    return crc


def sarwate_update(data, state, table):
    crc = state & MASK32
    for byte in data:
        crc = (crc >> 8) ^ table[(crc ^ byte) & 0xFF]
    return crc


def slice8_update(data, state, slice_tables, sarwate_table):
    crc = state & MASK32
    mv = memoryview(data)
    n = len(mv)
    p = 0
    t = slice_tables
    while n - p >= 8:
        x = int.from_bytes(mv[p : p + 4], "little") ^ crc
        y = int.from_bytes(mv[p + 4 : p + 8], "little")
        crc = (
            t[1792 + (x & 0xFF)]
            ^ t[1536 + ((x >> 8) & 0xFF)]
            ^ t[1280 + ((x >> 16) & 0xFF)]
            ^ t[1024 + (x >> 24)]
            ^ t[768 + (y & 0xFF)]
            ^ t[512 + ((y >> 8) & 0xFF)]
            ^ t[256 + ((y >> 16) & 0xFF)]
            ^ t[(y >> 24)]
        )
        p += 8
    return sarwate_update(mv[p:n], crc, sarwate_table)


def scaled_generator_update(data, state, table):
    """Degree-64 scaled-generator word engine, two-word carry window."""
    mv = memoryview(data)
    n = len(mv)
    if n < SCALED_MIN_BYTES:
        return sarwate_update(mv, state, table)
    crc = state & MASK32
    p = 0
    carry = 0
    w = int.from_bytes(mv[0:8], "little") ^ crc
    while True:
        # quotient cascade: q solves q + (sub-word shifts of q) = w
        q = w
        v = w
        while v:
            nv = 0
            for k in _SCALED_G_SUB:
                nv ^= v << k
            v = nv & MASK64
            q ^= v
        carry = q
        for k in _SCALED_G_SUB:
            carry ^= q >> (64 - k)
        p += 8
        if n - p < 16:
            break
        w = int.from_bytes(mv[p : p + 8], "little") ^ carry
    tail = bytearray(mv[p:n])
    t8 = int.from_bytes(tail[0:8], "little") ^ carry
    tail[0:8] = t8.to_bytes(8, "little")
    return sarwate_update(tail, 0, table)


def chorba_small_update(data, state, table):
    """Degree-300 five-term engine; reduction window lives in locals.

    Forward bit offsets {145, 183, 211, 300} land in carry words 2..5.
    """
    mv = memoryview(data)
    n = len(mv)
    if n < SMALL_MIN_BYTES:
        return scaled_generator_update(mv, state, table)
    crc = state & MASK32
    p = 0
    c1 = c2 = c3 = c4 = c5 = 0
    w = int.from_bytes(mv[0:8], "little") ^ crc
    while True:
        c1, c2, c3, c4, c5 = c2, c3, c4, c5, 0
        c2 ^= ((w << 17) ^ (w << 55)) & MASK64
        c3 ^= (w >> 47) ^ (w >> 9) ^ ((w << 19) & MASK64)
        c4 ^= (w >> 45) ^ ((w << 44) & MASK64)
        c5 ^= w >> 20
        p += 8
        if n - p < SMALL_MIN_BYTES:
            break
        w = int.from_bytes(mv[p : p + 8], "little") ^ c1
    tail = bytearray(mv[p:n])
    for i, c in enumerate((c1, c2, c3, c4, c5)):
        if c:
            t8 = int.from_bytes(tail[8 * i : 8 * i + 8], "little") ^ c
            tail[8 * i : 8 * i + 8] = t8.to_bytes(8, "little")
    return scaled_generator_update(tail, 0, table)


def _split_offsets(offsets):
    sub_shifts = tuple(8 * o for o in offsets if o < 8)
    big = tuple(o for o in offsets if o >= 8)
    return sub_shifts, big


def _cascade(w, sub_shifts):
    q = w
    v = w
    while v:
        nv = 0
        for s in sub_shifts:
            nv ^= v << s
        v = nv & MASK64
        q ^= v
    inj = 0
    for s in sub_shifts:
        inj ^= q >> (64 - s)
    return q, inj


def chorba_stream_update(buf, offsets, span, state, table):
    """Destructive byte-aligned engine: XOR carried words into the buffer.

    Returns the CRC of the original contents; the buffer is clobbered.
    """
    n = len(buf)
    guard = (span if span >= 8 else 8) + 8
    if n < span + 8 or n < guard:
        return chorba_small_update(buf, state, table)
    mv = memoryview(buf)
    w0 = int.from_bytes(mv[0:4], "little") ^ (state & MASK32)
    mv[0:4] = w0.to_bytes(4, "little")
    sub_shifts, big = _split_offsets(offsets)
    p = 0
    while p + guard <= n:
        w = int.from_bytes(mv[p : p + 8], "little")
        if sub_shifts:
            q, inj = _cascade(w, sub_shifts)
            if inj:
                t8 = int.from_bytes(mv[p + 8 : p + 16], "little") ^ inj
                mv[p + 8 : p + 16] = t8.to_bytes(8, "little")
        else:
            q = w
        for o in big:
            t8 = int.from_bytes(mv[p + o : p + o + 8], "little") ^ q
            mv[p + o : p + o + 8] = t8.to_bytes(8, "little")
        p += 8
    return chorba_small_update(mv[p:n], 0, table)


# the compiled backend specializes this plan (near carries in registers);
# here the generic engines already are the local-cache reference
_OFFSETS_118960 = (7, 11, 22, 14870)


def chorba_118960_stream_update(buf, state, table):
    return chorba_stream_update(buf, _OFFSETS_118960, 14870, state, table)


def chorba_118960_ring_update(data, state, table):
    return chorba_ring_update(data, _OFFSETS_118960, 14870, state, table)


def _ring_xor(ring, mask, pos, val):
    idx = pos & mask
    if idx + 8 <= len(ring):
        t8 = int.from_bytes(ring[idx : idx + 8], "little") ^ val
        ring[idx : idx + 8] = t8.to_bytes(8, "little")
    else:
        for i in range(8):
            ring[(idx + i) & mask] ^= (val >> (8 * i)) & 0xFF


def chorba_ring_update(data, offsets, span, state, table):
    """Non-destructive byte-aligned engine; carries live in a ring buffer.

    Ring length is a power of two >= span + 8, indexed by bitmask, zeroed
    on allocation; the input is never written.
    """
    mv = memoryview(data)
    n = len(mv)
    guard = (span if span >= 8 else 8) + 8
    if n < span + 8 or n < guard:
        return chorba_small_update(mv, state, table)
    ring_len = 16
    while ring_len < span + 8:
        ring_len <<= 1
    mask = ring_len - 1
    ring = bytearray(ring_len)
    ring[0:4] = (state & MASK32).to_bytes(4, "little")
    sub_shifts, big = _split_offsets(offsets)
    p = 0
    zero8 = bytes(8)
    while p + guard <= n:
        idx = p & mask  # 8-aligned: ring loads never wrap
        w = int.from_bytes(mv[p : p + 8], "little") ^ int.from_bytes(
            ring[idx : idx + 8], "little"
        )
        ring[idx : idx + 8] = zero8
        if sub_shifts:
            q, inj = _cascade(w, sub_shifts)
            if inj:
                _ring_xor(ring, mask, p + 8, inj)
        else:
            q = w
        for o in big:
            _ring_xor(ring, mask, p + o, q)
        p += 8
    tail = bytearray(mv[p:n])
    for i in range(len(tail)):
        tail[i] ^= ring[(p + i) & mask]
    return chorba_small_update(tail, 0, table)
