"""Bit stream encodings for the CLI: ascii01, hex and packed.

hex and packed are MSB-first and zero-pad the final nibble/byte.
"""
from __future__ import annotations

from itertools import islice
from typing import Iterable, Iterator, Optional

from .errors import DSeqError

ENCODINGS = ("ascii01", "hex", "packed")
_CHUNK_BITS = 8192
_WHITESPACE = b" \t\r\n"


class DecodeError(DSeqError):
    def __init__(self, offset: int, msg: str):
        self.offset = offset
        super().__init__(f"byte offset {offset}: {msg}")


def _pack(bits: list[int], width: int) -> list[int]:
    """Group bits MSB-first into integers of `width` bits, zero-padding the tail."""
    out = []
    for i in range(0, len(bits), width):
        group = bits[i:i + width]
        v = 0
        for b in group:
            v = (v << 1) | b
        out.append(v << (width - len(group)))
    return out


def encode_chunks(bits: Iterable[int], mode: str = "ascii01") -> Iterator[bytes]:
    """Encode lazily; memory is bounded by the chunk size, not the stream length.

    Text encodings end with a newline.
    """
    if mode not in ENCODINGS:
        raise DSeqError(f"unknown encoding {mode!r}")
    it = iter(bits)
    while True:
        # chunk size is a multiple of 8 so padding only happens at the very end
        chunk = list(islice(it, _CHUNK_BITS))
        if not chunk:
            break
        if mode == "ascii01":
            yield bytes(48 + b for b in chunk)
        elif mode == "hex":
            yield "".join("%x" % v for v in _pack(chunk, 4)).encode()
        else:
            yield bytes(_pack(chunk, 8))
    if mode != "packed":
        yield b"\n"


def encode(bits: Iterable[int], mode: str = "ascii01") -> bytes:
    return b"".join(encode_chunks(bits, mode))


def decode(data: bytes, mode: str = "ascii01", nbits: Optional[int] = None) -> list[int]:
    """Decode bytes to a bit list. Whitespace is skipped in text encodings.

    `nbits` trims the zero padding that hex and packed add at the tail.
    """
    bits: list[int] = []
    if mode == "ascii01":
        for off, c in enumerate(data):
            if c in (48, 49):
                bits.append(c - 48)
            elif c not in _WHITESPACE:
                raise DecodeError(off, f"unexpected byte {bytes([c])!r} in ascii01 input")
    elif mode == "hex":
        for off, c in enumerate(data):
            if c in _WHITESPACE:
                continue
            try:
                v = int(chr(c), 16)
            except ValueError:
                raise DecodeError(off, f"unexpected byte {bytes([c])!r} in hex input") from None
            bits.extend((v >> s) & 1 for s in (3, 2, 1, 0))
    elif mode == "packed":
        for c in data:
            bits.extend((c >> s) & 1 for s in range(7, -1, -1))
    else:
        raise DSeqError(f"unknown encoding {mode!r}")
    if nbits is not None:
        if nbits > len(bits):
            raise DSeqError(f"input holds {len(bits)} bits, fewer than the declared {nbits}")
        bits = bits[:nbits]
    return bits
