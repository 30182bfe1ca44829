"""Order-5 PPMD byte model: span costs and whole-message compression.

The model assigns each byte -log2 of its coding probability given up to five
preceding bytes, escaping method-D style through shorter contexts down to a
uniform order -1, with counts updated adaptively as the pass proceeds.  Cost
queries mutate the adaptive counts, so give each document its own clone of a
trained model.  Compression (used to validate the model, not on the
extraction path) always starts from an untrained model.
"""

from __future__ import annotations

import struct

from ._engine import BACKEND, PpmCore

MAX_ORDER = 5

_HEADER = struct.Struct("<QQ")


class SpanOutOfBounds(ValueError):
    """A costing span does not lie inside its document."""


class DecodeCorrupt(ValueError):
    """A compressed blob is truncated or inconsistent."""


class PpmModel:
    """Adaptive byte model; wraps whichever engine was selected at import."""

    def __init__(self, core: PpmCore | None = None):
        self.core = core if core is not None else PpmCore(MAX_ORDER)

    @property
    def max_order(self) -> int:
        return self.core.max_order

    def prime(self, document: bytes) -> None:
        """Accumulate counts from one document (history resets per call)."""
        self.core.prime(document)

    def per_byte_costs(self, document: bytes) -> list[float]:
        """Adaptive coding cost in bits of every byte of the document."""
        return self.core.scan(document, collect=True)

    def clone(self) -> "PpmModel":
        return PpmModel(self.core.clone())

    def items(self):
        return self.core.items()

    @classmethod
    def from_items(cls, triples) -> "PpmModel":
        model = cls()
        model.core.load_items(triples)
        return model


def ppm_span_cost(document: bytes, span: tuple[int, int], model: PpmModel) -> float:
    """Bits to code document[start:end], contexts taken from the document.

    The whole document up to the span's end is processed adaptively (the
    model's counts are mutated); only the span bytes contribute to the
    returned cost.
    """
    start, end = span
    if not 0 <= start <= end <= len(document):
        raise SpanOutOfBounds(f"span {span} outside document of {len(document)} bytes")
    costs = model.core.scan(document[:end], collect=True)
    return sum(costs[start:end])


def ppm_compress(data: bytes) -> bytes:
    """Losslessly compress data with a fresh adaptive model."""
    payload, nbits = PpmCore(MAX_ORDER).encode(data)
    return _HEADER.pack(len(data), nbits) + payload


def ppm_decompress(blob: bytes) -> bytes:
    """Inverse of ppm_compress; raises DecodeCorrupt on truncated input."""
    if len(blob) < _HEADER.size:
        raise DecodeCorrupt("blob shorter than its header")
    n_bytes, nbits = _HEADER.unpack_from(blob)
    payload = blob[_HEADER.size :]
    if len(payload) != (nbits + 7) // 8:
        raise DecodeCorrupt(
            f"payload holds {len(payload)} bytes but header declares {nbits} bits"
        )
    return PpmCore(MAX_ORDER).decode(payload, nbits, n_bytes)


def compressed_bits_per_char(data: bytes) -> float:
    """Whole-message compression rate; 8.0 for empty input by convention."""
    if not data:
        return 8.0
    _, nbits = PpmCore(MAX_ORDER).encode(data)
    return nbits / len(data)
