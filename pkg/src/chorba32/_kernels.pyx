# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled CRC kernels (little-endian hosts).

Mirrors `_pykernels` function for function; selected at import by
`_backend`.  Words are loaded little-endian so the u64 bit index equals
the stream bit index and "forward by k bits" is a left shift.
"""

from libc.stdint cimport int64_t, uint8_t, uint32_t, uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy


cdef inline uint64_t load64(const uint8_t *p) noexcept nogil:
    cdef uint64_t v
    memcpy(&v, p, 8)
    return v


cdef inline void xor_store64(uint8_t *p, uint64_t v) noexcept nogil:
    cdef uint64_t t
    memcpy(&t, p, 8)
    t ^= v
    memcpy(p, &t, 8)


cdef inline uint32_t load32(const uint8_t *p) noexcept nogil:
    cdef uint32_t v
    memcpy(&v, p, 4)
    return v


cdef uint32_t _bitwise(const uint8_t *p, Py_ssize_t n, uint32_t crc) noexcept nogil:
    cdef Py_ssize_t i
    cdef int b
    for i in range(n):
        crc ^= p[i]
        for b in range(8):
            crc = (crc >> 1) ^ (0xEDB88320u & (-(crc & 1)))
    return crc


cdef uint32_t _sarwate(const uint8_t *p, Py_ssize_t n, uint32_t crc,
                       const uint32_t *t) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(n):
        crc = (crc >> 8) ^ t[(crc ^ p[i]) & 0xFF]
    return crc


cdef uint32_t _scaled_generator(const uint8_t *p, Py_ssize_t n, uint32_t state,
                                const uint32_t *t) noexcept nogil:
    # degree-64 scaled generator; sub-word forward offsets
    # {12,18,20,32,40,42,44,48,50,54,56,60,62} plus 64
    cdef uint64_t w, q, v, carry, t8
    cdef Py_ssize_t pos = 0, r
    cdef uint8_t tail[16]
    if n < 16:
        return _sarwate(p, n, state, t)
    w = load64(p) ^ <uint64_t> state
    while True:
        q = w
        v = w
        while v != 0:
            v = ((v << 12) ^ (v << 18) ^ (v << 20) ^ (v << 32) ^ (v << 40)
                 ^ (v << 42) ^ (v << 44) ^ (v << 48) ^ (v << 50) ^ (v << 54)
                 ^ (v << 56) ^ (v << 60) ^ (v << 62))
            q ^= v
        carry = (q ^ (q >> 52) ^ (q >> 46) ^ (q >> 44) ^ (q >> 32) ^ (q >> 24)
                 ^ (q >> 22) ^ (q >> 20) ^ (q >> 16) ^ (q >> 14) ^ (q >> 10)
                 ^ (q >> 8) ^ (q >> 4) ^ (q >> 2))
        pos += 8
        if n - pos < 16:
            break
        w = load64(p + pos) ^ carry
    r = n - pos  # 8..15
    memcpy(tail, p + pos, r)
    memcpy(&t8, tail, 8)
    t8 ^= carry
    memcpy(tail, &t8, 8)
    return _sarwate(tail, r, 0, t)


cdef uint32_t _chorba_small(const uint8_t *p, Py_ssize_t n, uint32_t state,
                            const uint32_t *t) noexcept nogil:
    # five-term degree-300 polynomial; forward bit offsets {145,183,211,300}
    cdef uint64_t c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, w, t8
    cdef Py_ssize_t pos = 0, r, i
    cdef uint8_t tail[64]
    if n < 64:
        return _scaled_generator(p, n, state, t)
    w = load64(p) ^ <uint64_t> state
    while True:
        c1 = c2
        c2 = c3 ^ (w << 17) ^ (w << 55)
        c3 = c4 ^ (w >> 47) ^ (w >> 9) ^ (w << 19)
        c4 = c5 ^ (w >> 45) ^ (w << 44)
        c5 = w >> 20
        pos += 8
        if n - pos < 64:
            break
        w = load64(p + pos) ^ c1
    r = n - pos  # 56..63
    memcpy(tail, p + pos, r)
    memcpy(&t8, tail, 8); t8 ^= c1; memcpy(tail, &t8, 8)
    memcpy(&t8, tail + 8, 8); t8 ^= c2; memcpy(tail + 8, &t8, 8)
    memcpy(&t8, tail + 16, 8); t8 ^= c3; memcpy(tail + 16, &t8, 8)
    memcpy(&t8, tail + 24, 8); t8 ^= c4; memcpy(tail + 24, &t8, 8)
    memcpy(&t8, tail + 32, 8); t8 ^= c5; memcpy(tail + 32, &t8, 8)
    return _scaled_generator(tail, r, 0, t)


def bitwise_update(const unsigned char[::1] data, state):
    cdef Py_ssize_t n = data.shape[0]
    cdef uint32_t crc = <uint32_t> (state & 0xFFFFFFFF)
    if n == 0:
        return crc
    with nogil:
        crc = _bitwise(&data[0], n, crc)
    return crc


def sarwate_update(const unsigned char[::1] data, state,
                   const unsigned int[::1] table):
    cdef Py_ssize_t n = data.shape[0]
    cdef uint32_t crc = <uint32_t> (state & 0xFFFFFFFF)
    if n == 0:
        return crc
    with nogil:
        crc = _sarwate(&data[0], n, crc, <const uint32_t *> &table[0])
    return crc


def slice8_update(const unsigned char[::1] data, state,
                  const unsigned int[::1] slice_tables,
                  const unsigned int[::1] sarwate_table):
    cdef Py_ssize_t n = data.shape[0], pos = 0
    cdef uint32_t crc = <uint32_t> (state & 0xFFFFFFFF)
    cdef uint32_t x, y
    cdef const uint8_t *p
    cdef const uint32_t *t = <const uint32_t *> &slice_tables[0]
    if n == 0:
        return crc
    p = &data[0]
    with nogil:
        while n - pos >= 8:
            x = load32(p + pos) ^ crc
            y = load32(p + pos + 4)
            crc = (t[1792 + (x & 0xFF)] ^ t[1536 + ((x >> 8) & 0xFF)]
                   ^ t[1280 + ((x >> 16) & 0xFF)] ^ t[1024 + (x >> 24)]
                   ^ t[768 + (y & 0xFF)] ^ t[512 + ((y >> 8) & 0xFF)]
                   ^ t[256 + ((y >> 16) & 0xFF)] ^ t[y >> 24])
            pos += 8
        crc = _sarwate(p + pos, n - pos, crc,
                       <const uint32_t *> &sarwate_table[0])
    return crc


def scaled_generator_update(const unsigned char[::1] data, state,
                            const unsigned int[::1] table):
    cdef Py_ssize_t n = data.shape[0]
    cdef uint32_t crc = <uint32_t> (state & 0xFFFFFFFF)
    if n == 0:
        return crc
    with nogil:
        crc = _scaled_generator(&data[0], n, crc, <const uint32_t *> &table[0])
    return crc


def chorba_small_update(const unsigned char[::1] data, state,
                        const unsigned int[::1] table):
    cdef Py_ssize_t n = data.shape[0]
    cdef uint32_t crc = <uint32_t> (state & 0xFFFFFFFF)
    if n == 0:
        return crc
    with nogil:
        crc = _chorba_small(&data[0], n, crc, <const uint32_t *> &table[0])
    return crc


cdef inline uint64_t _cascade(uint64_t w, const int64_t *subs, int nsub) noexcept nogil:
    # quotient for sub-word offsets: q + sum(q << subs) == w (low 64 bits)
    cdef uint64_t q = w, v = w, nv
    cdef int j
    while v != 0:
        nv = 0
        for j in range(nsub):
            nv ^= v << subs[j]
        v = nv
        q ^= v
    return q


def chorba_stream_update(unsigned char[::1] buf, const long long[::1] offsets,
                         span, state, const unsigned int[::1] table):
    """Destructive byte-aligned engine; clobbers buf, returns the CRC."""
    cdef Py_ssize_t n = buf.shape[0]
    cdef Py_ssize_t spn = <Py_ssize_t> span
    cdef Py_ssize_t guard = (spn if spn >= 8 else 8) + 8
    cdef uint32_t st = <uint32_t> (state & 0xFFFFFFFF)
    cdef const uint32_t *t = <const uint32_t *> &table[0]
    cdef uint8_t *p
    cdef int64_t subs[8]
    cdef int64_t bigs[96]
    cdef int nsub = 0, nbig = 0, j
    cdef Py_ssize_t pos = 0
    cdef uint64_t w, q, inj
    cdef uint32_t w0
    if n == 0:
        return st
    p = &buf[0]
    if n < spn + 8 or n < guard:
        with nogil:
            st = _chorba_small(p, n, st, t)
        return st
    if offsets.shape[0] > 96:
        raise ValueError("too many offsets for the compiled engine")
    for j in range(offsets.shape[0]):
        if offsets[j] < 8:
            subs[nsub] = 8 * offsets[j]
            nsub += 1
        else:
            bigs[nbig] = offsets[j]
            nbig += 1
    with nogil:
        # fold the state into the first 4 bytes
        w0 = load32(p) ^ st
        memcpy(p, &w0, 4)
        while pos + guard <= n:
            w = load64(p + pos)
            if nsub > 0:
                q = _cascade(w, subs, nsub)
                inj = 0
                for j in range(nsub):
                    inj ^= q >> (64 - subs[j])
                xor_store64(p + pos + 8, inj)
            else:
                q = w
            for j in range(nbig):
                xor_store64(p + pos + bigs[j], q)
            pos += 8
        st = _chorba_small(p + pos, n - pos, 0, t)
    return st


cdef uint32_t _chorba_118960_stream(uint8_t *p, Py_ssize_t n, uint32_t state,
                                    const uint32_t *t) noexcept nogil:
    # local-cache variant: near cluster (bit offsets 56/88/176) carried in
    # registers, only the far term (byte 14870) touches the buffer
    cdef uint64_t c1 = 0, c2 = 0, c3 = 0, w, q
    cdef Py_ssize_t pos = 0
    if n < 14878:
        return _chorba_small(p, n, state, t)
    w = load64(p) ^ <uint64_t> state
    while True:
        q = w ^ (w << 56)
        c1 = c2 ^ (q >> 8) ^ (q << 24)
        c2 = c3 ^ (q >> 40) ^ (q << 48)
        c3 = q >> 16
        xor_store64(p + pos + 14870, q)
        pos += 8
        if pos + 14878 > n:
            break
        w = load64(p + pos) ^ c1
    xor_store64(p + pos, c1)
    xor_store64(p + pos + 8, c2)
    xor_store64(p + pos + 16, c3)
    return _chorba_small(p + pos, n - pos, 0, t)


def chorba_118960_stream_update(unsigned char[::1] buf, state,
                                const unsigned int[::1] table):
    cdef Py_ssize_t n = buf.shape[0]
    cdef uint32_t crc = <uint32_t> (state & 0xFFFFFFFF)
    if n == 0:
        return crc
    with nogil:
        crc = _chorba_118960_stream(&buf[0], n, crc, <const uint32_t *> &table[0])
    return crc


cdef inline void ring_xor64(uint8_t *ring, uint64_t mask, uint64_t pos,
                            uint64_t val, uint64_t ring_len) noexcept nogil:
    cdef uint64_t idx = pos & mask
    cdef uint64_t t
    cdef int i
    if idx + 8 <= ring_len:
        memcpy(&t, ring + idx, 8)
        t ^= val
        memcpy(ring + idx, &t, 8)
    else:
        for i in range(8):
            ring[(idx + i) & mask] ^= <uint8_t> ((val >> (8 * i)) & 0xFF)


def chorba_118960_ring_update(const unsigned char[::1] data, state,
                              const unsigned int[::1] table):
    """Local-cache non-destructive engine for the degree-118960 plan."""
    cdef Py_ssize_t n = data.shape[0]
    cdef uint32_t st = <uint32_t> (state & 0xFFFFFFFF)
    cdef const uint32_t *t = <const uint32_t *> &table[0]
    cdef const uint8_t *p
    cdef uint8_t *ring
    cdef uint8_t *tail
    cdef uint64_t mask = 16383, zero = 0
    cdef uint64_t c1 = 0, c2 = 0, c3 = 0, w, q
    cdef Py_ssize_t pos = 0, rem, i
    if n == 0:
        return st
    p = &data[0]
    if n < 14878:
        with nogil:
            st = _chorba_small(p, n, st, t)
        return st
    ring = <uint8_t *> calloc(16384, 1)
    if ring == NULL:
        raise MemoryError
    with nogil:
        memcpy(ring, &st, 4)
        w = load64(p) ^ load64(ring)
        memcpy(ring, &zero, 8)
        while True:
            q = w ^ (w << 56)
            c1 = c2 ^ (q >> 8) ^ (q << 24)
            c2 = c3 ^ (q >> 40) ^ (q << 48)
            c3 = q >> 16
            ring_xor64(ring, mask, pos + 14870, q, 16384)
            pos += 8
            if pos + 14878 > n:
                break
            w = load64(p + pos) ^ load64(ring + (pos & mask)) ^ c1
            memcpy(ring + (pos & mask), &zero, 8)
        ring_xor64(ring, mask, pos, c1, 16384)
        ring_xor64(ring, mask, pos + 8, c2, 16384)
        ring_xor64(ring, mask, pos + 16, c3, 16384)
        rem = n - pos
    tail = <uint8_t *> malloc(rem)
    if tail == NULL:
        free(ring)
        raise MemoryError
    with nogil:
        for i in range(rem):
            tail[i] = p[pos + i] ^ ring[(pos + i) & mask]
        st = _chorba_small(tail, rem, 0, t)
    free(tail)
    free(ring)
    return st


def chorba_ring_update(const unsigned char[::1] data, const long long[::1] offsets,
                       span, state, const unsigned int[::1] table):
    """Non-destructive byte-aligned engine; carries go into a ring buffer."""
    cdef Py_ssize_t n = data.shape[0]
    cdef Py_ssize_t spn = <Py_ssize_t> span
    cdef Py_ssize_t guard = (spn if spn >= 8 else 8) + 8
    cdef uint32_t st = <uint32_t> (state & 0xFFFFFFFF)
    cdef const uint32_t *t = <const uint32_t *> &table[0]
    cdef const uint8_t *p
    cdef uint8_t *ring
    cdef uint8_t *tail
    cdef uint64_t ring_len = 16, mask
    cdef int64_t subs[8]
    cdef int64_t bigs[96]
    cdef int nsub = 0, nbig = 0, j
    cdef Py_ssize_t pos = 0, rem, i
    cdef uint64_t w, q, inj, zero = 0
    if n == 0:
        return st
    p = &data[0]
    if n < spn + 8 or n < guard:
        with nogil:
            st = _chorba_small(p, n, st, t)
        return st
    if offsets.shape[0] > 96:
        raise ValueError("too many offsets for the compiled engine")
    for j in range(offsets.shape[0]):
        if offsets[j] < 8:
            subs[nsub] = 8 * offsets[j]
            nsub += 1
        else:
            bigs[nbig] = offsets[j]
            nbig += 1
    while ring_len < <uint64_t> (spn + 8):
        ring_len <<= 1
    mask = ring_len - 1
    ring = <uint8_t *> calloc(ring_len, 1)
    if ring == NULL:
        raise MemoryError
    rem = 0
    tail = NULL
    with nogil:
        memcpy(ring, &st, 4)  # fold the state into the stream head
        while pos + guard <= n:
            # ring loads at 8-aligned indices never wrap
            w = load64(p + pos) ^ load64(ring + (pos & mask))
            memcpy(ring + (pos & mask), &zero, 8)
            if nsub > 0:
                q = _cascade(w, subs, nsub)
                inj = 0
                for j in range(nsub):
                    inj ^= q >> (64 - subs[j])
                ring_xor64(ring, mask, pos + 8, inj, ring_len)
            else:
                q = w
            for j in range(nbig):
                ring_xor64(ring, mask, pos + bigs[j], q, ring_len)
            pos += 8
        rem = n - pos
    tail = <uint8_t *> malloc(rem if rem > 0 else 1)
    if tail == NULL:
        free(ring)
        raise MemoryError
    with nogil:
        for i in range(rem):
            tail[i] = p[pos + i] ^ ring[(pos + i) & mask]
        st = _chorba_small(tail, rem, 0, t)
    free(tail)
    free(ring)
    return st
