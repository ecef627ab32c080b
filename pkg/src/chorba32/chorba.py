"""Zero-polynomial CRC32 engines and the public checksum entry points.

A compiled plan turns a byte-aligned zero polynomial into forward XOR
offsets; the engines stream 8-byte words and push carried terms ahead,
either into the message itself (destructive) or into a power-of-two ring
buffer (non-destructive).  Non-byte-aligned polynomials get dedicated
register-window engines (chorba_small, the scaled generator).

Every engine honors the same running-state contract as the references:
engine(data, state) == crc32_bitwise(data, state).
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field

from . import crc_ref
from ._backend import kernels
from .gf2poly import (
    GENERATOR,
    MASK32,
    SparsePoly,
    is_zero_polynomial,
    reciprocal,
    scale_poly,
)

BYTE_ALIGNED = "byte_aligned"
BIT_SHIFT = "bit_shift"

STREAM_AHEAD = "stream_ahead"
RING_BUFFER = "ring_buffer"
LOCAL_CACHE = "local_cache"

MASK64 = 0xFFFFFFFFFFFFFFFF


class NotAZeroPolynomial(ValueError):
    """The polynomial is not divisible by the CRC32 generator."""


@dataclass(frozen=True)
class ChorbaPlan:
    """A compiled zero polynomial ready for the streaming engines.

    forward_offsets_bytes is exact for byte-aligned plans; bit-shift plans
    carry their exact distances in forward_offsets_bits only.
    """

    polynomial: SparsePoly
    degree_bits: int
    forward_offsets_bytes: tuple[int, ...]
    forward_offsets_bits: tuple[int, ...]
    span_bytes: int
    engine_class: str
    buffer_strategy: str
    _offsets_arr: array | None = field(repr=False, compare=False, default=None)


def make_plan(z: SparsePoly, strategy: str = RING_BUFFER) -> ChorbaPlan:
    """Compile a zero polynomial into forward offsets and an engine class.

    Byte-aligned polynomials (every exponent divisible by 8) may use any
    buffer strategy; others run in register-local windows and reject
    stream_ahead/ring_buffer.
    """
    if not is_zero_polynomial(z):
        raise NotAZeroPolynomial(f"not a zero polynomial: {z!r}")
    if len(z) < 2:
        raise NotAZeroPolynomial("a zero polynomial needs at least 2 terms")
    if strategy not in (STREAM_AHEAD, RING_BUFFER, LOCAL_CACHE):
        raise ValueError(f"unknown buffer strategy {strategy!r}")
    d = z.degree
    byte_aligned = all(e % 8 == 0 for e in z.exponents)
    if not byte_aligned and strategy in (STREAM_AHEAD, RING_BUFFER):
        raise ValueError(
            "bit-shift polynomials use register-local windows; "
            f"strategy {strategy!r} requires byte alignment"
        )
    bit_offsets = tuple(sorted(d - e for e in z.exponents if e != d))
    if byte_aligned:
        byte_offsets = tuple(k // 8 for k in bit_offsets)
        span = d // 8
    else:
        byte_offsets = ()
        span = (d + 7) // 8
    return ChorbaPlan(
        polynomial=z,
        degree_bits=d,
        forward_offsets_bytes=byte_offsets,
        forward_offsets_bits=bit_offsets,
        span_bytes=span,
        engine_class=BYTE_ALIGNED if byte_aligned else BIT_SHIFT,
        buffer_strategy=strategy,
        _offsets_arr=array("q", byte_offsets) if byte_aligned else None,
    )


def _published(exponents, k=3):
    # published Chorba polynomial lists are reciprocal-oriented; flip them
    # into the divisible-by-G form before scaling
    return scale_poly(reciprocal(SparsePoly(exponents)), k)


CHORBA_352 = _published((44, 39, 37, 28, 13, 12, 9, 7, 3, 1, 0))
CHORBA_SMALL = reciprocal(SparsePoly((300, 211, 183, 145, 0)))
CHORBA_46952 = scale_poly(SparsePoly((5869, 5835, 5821, 0)), 3)
CHORBA_118960 = _published((14870, 22, 11, 7, 0))
CHORBA_733112 = _published((91639, 49961, 0))
SCALED_GENERATOR = scale_poly(GENERATOR, 1)

PLAN_352 = make_plan(CHORBA_352)
PLAN_46952 = make_plan(CHORBA_46952)
PLAN_118960 = make_plan(CHORBA_118960)
PLAN_733112 = make_plan(CHORBA_733112)
PLAN_SMALL = make_plan(CHORBA_SMALL, LOCAL_CACHE)
PLAN_SCALED_GENERATOR = make_plan(SCALED_GENERATOR, LOCAL_CACHE)

NAMED_PLANS = {
    "chorba_352": PLAN_352,
    "chorba_46952": PLAN_46952,
    "chorba_118960": PLAN_118960,
    "chorba_733112": PLAN_733112,
    "chorba_small": PLAN_SMALL,
    "scaled_generator": PLAN_SCALED_GENERATOR,
}


def chorba_destructive(buf, plan: ChorbaPlan, state: int) -> int:
    """Reduce in place; returns the CRC of the original contents.

    The buffer is clobbered (contents unspecified afterwards).  Inputs
    shorter than span+8 bytes go entirely to the fallback chain.
    """
    if plan.engine_class != BYTE_ALIGNED:
        raise ValueError("destructive engine requires a byte-aligned plan")
    return kernels.chorba_stream_update(
        buf, plan._offsets_arr, plan.span_bytes, state, crc_ref.SARWATE_TABLE
    )


def chorba_nondestructive(data, plan: ChorbaPlan, state: int) -> int:
    """Ring-buffer engine; the input is read-only."""
    if plan.engine_class != BYTE_ALIGNED:
        raise ValueError("ring engine requires a byte-aligned plan")
    return kernels.chorba_ring_update(
        data, plan._offsets_arr, plan.span_bytes, state, crc_ref.SARWATE_TABLE
    )


def chorba_small(data, state: int = crc_ref.INIT) -> int:
    """Five-term degree-300 engine; reduction window held in locals."""
    return kernels.chorba_small_update(data, state, crc_ref.SARWATE_TABLE)


def crc32_scaled_generator(data, state: int = crc_ref.INIT) -> int:
    """Degree-64 scaled-generator engine, one word per iteration."""
    return kernels.scaled_generator_update(data, state, crc_ref.SARWATE_TABLE)


def chorba_bit_shift(data, plan: ChorbaPlan, state: int) -> int:
    """Generic shift/XOR window engine for any plan, any alignment.

    Pure-Python reference used in property tests; the named bit-shift
    plans have dedicated fast paths above.
    """
    mv = memoryview(data)
    n = len(mv)
    offsets = plan.forward_offsets_bits
    max_k = offsets[-1]
    nwords = (max_k >> 6) + 2  # window slots incl. the current word
    if n < 8 * nwords:
        return chorba_small(mv, state)
    sub = tuple(k for k in offsets if k < 64)
    big = tuple(k for k in offsets if k >= 64)
    window = [0] * nwords
    p = 0
    first = True
    while p + 8 * nwords <= n:
        w = int.from_bytes(mv[p : p + 8], "little") ^ window[0]
        if first:
            w ^= state & MASK32
            first = False
        if sub:
            # quotient cascade: sub-word offsets feed back into the word
            q = w
            v = w
            while v:
                nv = 0
                for k in sub:
                    nv ^= v << k
                v = nv & MASK64
                q ^= v
            inj = 0
            for k in sub:
                inj ^= q >> (64 - k)
            window[1] ^= inj
        else:
            q = w
        for k in big:
            t = k >> 6
            r = k & 63
            if r:
                window[t] ^= (q << r) & MASK64
                window[t + 1] ^= q >> (64 - r)
            else:
                window[t] ^= q
        window.pop(0)
        window.append(0)
        p += 8
    tail = bytearray(mv[p:n])
    for i, c in enumerate(window):
        if not c:
            continue
        lo = 8 * i
        chunk = tail[lo : lo + 8]
        t8 = int.from_bytes(chunk, "little") ^ (c & ((1 << (8 * len(chunk))) - 1))
        tail[lo : lo + 8] = t8.to_bytes(8, "little")[: len(chunk)]
    return chorba_small(tail, 0)


# crc32_auto dispatch thresholds (tunable configuration, not contract)
AUTO_SLICE8_MAX = 1 << 10  # below 1 KiB: slice-by-8
AUTO_SMALL_MAX = 4 << 20  # below 4 MiB: chorba_small path
AUTO_LARGE_PLAN = "chorba_118960"  # at or above: the dense high-degree plan

DESTRUCTIVE = "destructive"
NONDESTRUCTIVE = "nondestructive"


def _auto_update(data, state: int, mode: str) -> int:
    n = len(data)
    if n < AUTO_SLICE8_MAX:
        return crc_ref.crc32_slice8(data, state)
    if n < AUTO_SMALL_MAX:
        return chorba_small(data, state)
    plan = NAMED_PLANS[AUTO_LARGE_PLAN]
    if mode == DESTRUCTIVE:
        return chorba_destructive(data, plan, state)
    return chorba_nondestructive(data, plan, state)


def crc32_auto(data, mode: str = NONDESTRUCTIVE) -> int:
    """One-shot public checksum with length-based engine dispatch.

    Destructive mode requires a writable buffer and clobbers it.
    """
    if mode not in (DESTRUCTIVE, NONDESTRUCTIVE):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == DESTRUCTIVE and _is_readonly(data):
        raise TypeError("destructive mode requires a mutable buffer")
    return _auto_update(data, crc_ref.INIT, mode) ^ crc_ref.XOROUT


def _is_readonly(data) -> bool:
    if isinstance(data, (bytes, str)):
        return True
    if isinstance(data, memoryview):
        return data.readonly
    return False


class StreamingSession:
    """Incremental checksum: update over chunks, finalize once.

    Each chunk is dispatched independently by the crc32_auto policy (or a
    pinned algorithm).  Destructive sessions work on private copies, so
    caller chunks are never clobbered.  Single-owner; not for concurrent
    use.
    """

    def __init__(self, algorithm: str = "auto", mode: str = NONDESTRUCTIVE):
        base_update = _resolve_update(algorithm, mode)
        if mode == DESTRUCTIVE:
            self._update = lambda chunk, state: base_update(bytearray(chunk), state)
        else:
            self._update = base_update
        self._state = crc_ref.INIT
        self._finalized = False

    def update(self, chunk) -> None:
        if self._finalized:
            raise RuntimeError("update after finalize")
        self._state = self._update(chunk, self._state)

    def finalize(self) -> int:
        if self._finalized:
            raise RuntimeError("finalize called twice")
        self._finalized = True
        return self._state ^ crc_ref.XOROUT


ALGORITHM_IDS = (
    "bitwise",
    "sarwate",
    "slice8",
    "scaled_generator",
    "chorba_small",
    "chorba_352",
    "chorba_46952",
    "chorba_118960",
    "chorba_733112",
    "auto",
)

# ids that support the _d/_nd mode suffixes
MODAL_IDS = ("chorba_352", "chorba_46952", "chorba_118960", "chorba_733112", "auto")


def _resolve_update(algorithm: str, mode: str = NONDESTRUCTIVE):
    if mode not in (DESTRUCTIVE, NONDESTRUCTIVE):
        raise ValueError(f"unknown mode {mode!r}")
    if algorithm == "bitwise":
        return crc_ref.crc32_bitwise
    if algorithm == "sarwate":
        return crc_ref.crc32_sarwate
    if algorithm == "slice8":
        return crc_ref.crc32_slice8
    if algorithm == "scaled_generator":
        return crc32_scaled_generator
    if algorithm == "chorba_small":
        return chorba_small
    if algorithm == "auto":
        return lambda data, state: _auto_update(data, state, mode)
    if algorithm in NAMED_PLANS:
        plan = NAMED_PLANS[algorithm]
        if mode == DESTRUCTIVE:
            return lambda buf, state: chorba_destructive(buf, plan, state)
        return lambda data, state: chorba_nondestructive(data, plan, state)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def resolve_update(algorithm_id: str):
    """Map a stable algorithm id (optionally `_d`/`_nd` suffixed) to an update fn.

    Destructive updates mutate the buffer handed to them; callers own it.
    """
    base, mode = algorithm_id, NONDESTRUCTIVE
    if algorithm_id.endswith("_d"):
        base, mode = algorithm_id[:-2], DESTRUCTIVE
    elif algorithm_id.endswith("_nd"):
        base, mode = algorithm_id[:-3], NONDESTRUCTIVE
    if base not in ALGORITHM_IDS:
        raise ValueError(f"unknown algorithm {algorithm_id!r}")
    if mode == DESTRUCTIVE and base not in MODAL_IDS:
        raise ValueError(f"algorithm {base!r} has no destructive mode")
    return _resolve_update(base, mode)


def checksum(data, algorithm_id: str = "auto") -> int:
    """One-shot public checksum through any registered algorithm id."""
    return crc_ref.one_shot(resolve_update(algorithm_id), data)
