"""Reference CRC32 implementations: bitwise oracle, Sarwate, slice-by-8.

Convention (RFC-1952/zlib): reflected input and output bits, initial state
0xFFFFFFFF, final XOR 0xFFFFFFFF, generator 0x04C11DB7.  All functions here
are running-state updates; `one_shot` applies init/xorout.
"""

from __future__ import annotations

from array import array

from ._backend import kernels

POLY_REFLECTED = 0xEDB88320
INIT = 0xFFFFFFFF
XOROUT = 0xFFFFFFFF


def build_sarwate_table() -> array:
    """256-entry table: entry i = 8 bitwise steps on byte i from state 0."""
    table = array("I")
    for i in range(256):
        c = i
        for _ in range(8):
            c = (c >> 1) ^ (POLY_REFLECTED & -(c & 1))
        table.append(c)
    return table


def build_slice_tables() -> array:
    """Flat 8x256 table; table k entry i = entry i of table 0 fed k zero bytes."""
    t0 = build_sarwate_table()
    flat = array("I", t0)
    prev = t0
    for _ in range(7):
        cur = array("I", (t0[c & 0xFF] ^ (c >> 8) for c in prev))
        flat.extend(cur)
        prev = cur
    return flat


SARWATE_TABLE = build_sarwate_table()
SLICE_TABLES = build_slice_tables()


def crc32_bitwise(data, state: int = INIT) -> int:
    """Advance the reflected CRC state over data, one bit at a time."""
    return kernels.bitwise_update(data, state)


def crc32_sarwate(data, state: int = INIT) -> int:
    return kernels.sarwate_update(data, state, SARWATE_TABLE)


def crc32_slice8(data, state: int = INIT) -> int:
    return kernels.slice8_update(data, state, SLICE_TABLES, SARWATE_TABLE)


def one_shot(update, data) -> int:
    """Public checksum: update from INIT, then final XOR."""
    return update(data, INIT) ^ XOROUT


def crc_hex(value: int) -> str:
    """Checksum text rendering: 8 lowercase hex digits."""
    return format(value & 0xFFFFFFFF, "08x")
