"""Pure-Python PPM engine (order-5 byte contexts, method-D escape).

Reference implementation of the byte-model hot path; a compiled drop-in
replacement is preferred at import time when it built successfully.  Both
engines follow exactly the same update schedule and produce identical
bitstreams and per-byte costs:

  - contexts are stored in a trie keyed by the *reversed* context, so one
    root-to-depth walk per position visits the order-0..5 contexts at once;
  - escape method D: P(sym) = (2c-1)/(2n), P(escape) = d/(2n);
  - no exclusion of higher-order symbols at lower orders;
  - contexts that have never been seen escape for free (nothing is coded);
  - a final order -1 level is uniform over all 256 byte values;
  - update-all: after each byte, counts at every order 0..5 are incremented.
"""

from __future__ import annotations

from math import log2

BACKEND = "pure"
MAX_ORDER = 5

_TOTAL, _COUNTS, _EDGES = 0, 1, 2

_STATE_BITS = 32
_FULL = 1 << _STATE_BITS
_HALF = _FULL >> 1
_QUARTER = _FULL >> 2
_MASK = _FULL - 1


def _new_node():
    return [0, {}, {}]


class _BitWriter:
    def __init__(self):
        self.bits = []
        self.pending = 0

    def write(self, bit: int):
        self.bits.append(bit)
        while self.pending:
            self.bits.append(1 - bit)
            self.pending -= 1

    def to_bytes(self) -> tuple[bytes, int]:
        n = len(self.bits)
        out = bytearray((n + 7) // 8)
        for i, b in enumerate(self.bits):
            if b:
                out[i >> 3] |= 0x80 >> (i & 7)
        return bytes(out), n


class _BitReader:
    def __init__(self, data: bytes, nbits: int):
        self.data = data
        self.nbits = nbits
        self.pos = 0

    def read(self) -> int:
        if self.pos >= self.nbits:
            self.pos += 1
            return 0
        b = (self.data[self.pos >> 3] >> (7 - (self.pos & 7))) & 1
        self.pos += 1
        return b


class _Encoder:
    def __init__(self, writer: _BitWriter):
        self.low = 0
        self.high = _MASK
        self.w = writer

    def encode(self, cum_lo: int, cum_hi: int, total: int):
        rng = self.high - self.low + 1
        self.high = self.low + rng * cum_hi // total - 1
        self.low = self.low + rng * cum_lo // total
        while True:
            if self.high < _HALF:
                self.w.write(0)
            elif self.low >= _HALF:
                self.w.write(1)
                self.low -= _HALF
                self.high -= _HALF
            elif self.low >= _QUARTER and self.high < 3 * _QUARTER:
                self.w.pending += 1
                self.low -= _QUARTER
                self.high -= _QUARTER
            else:
                break
            self.low <<= 1
            self.high = (self.high << 1) | 1

    def finish(self):
        self.w.pending += 1
        self.w.write(0 if self.low < _QUARTER else 1)


class _Decoder:
    def __init__(self, reader: _BitReader):
        self.low = 0
        self.high = _MASK
        self.r = reader
        self.code = 0
        for _ in range(_STATE_BITS):
            self.code = (self.code << 1) | reader.read()

    def target(self, total: int) -> int:
        rng = self.high - self.low + 1
        return ((self.code - self.low + 1) * total - 1) // rng

    def consume(self, cum_lo: int, cum_hi: int, total: int):
        rng = self.high - self.low + 1
        self.high = self.low + rng * cum_hi // total - 1
        self.low = self.low + rng * cum_lo // total
        while True:
            if self.high < _HALF:
                pass
            elif self.low >= _HALF:
                self.low -= _HALF
                self.high -= _HALF
                self.code -= _HALF
            elif self.low >= _QUARTER and self.high < 3 * _QUARTER:
                self.low -= _QUARTER
                self.high -= _QUARTER
                self.code -= _QUARTER
            else:
                break
            self.low <<= 1
            self.high = (self.high << 1) | 1
            self.code = (self.code << 1) | self.r.read()


class PpmCore:
    """Order-5 PPMD byte model with shared cost/encode/decode walkers."""

    def __init__(self, max_order: int = MAX_ORDER):
        self.max_order = max_order
        self.root = _new_node()

    # -- trie plumbing ----------------------------------------------------

    def _context_path(self, data, i: int):
        """Existing context nodes for position i, order 0 upward."""
        path = [self.root]
        node = self.root
        for j in range(1, min(self.max_order, i) + 1):
            node = node[_EDGES].get(data[i - j])
            if node is None:
                break
            path.append(node)
        return path

    def _update(self, data, i: int, sym: int):
        node = self.root
        node[_COUNTS][sym] = node[_COUNTS].get(sym, 0) + 1
        node[_TOTAL] += 1
        for j in range(1, min(self.max_order, i) + 1):
            b = data[i - j]
            nxt = node[_EDGES].get(b)
            if nxt is None:
                nxt = _new_node()
                node[_EDGES][b] = nxt
            node = nxt
            node[_COUNTS][sym] = node[_COUNTS].get(sym, 0) + 1
            node[_TOTAL] += 1

    # -- the three walkers (same schedule, different payloads) ------------

    def scan(self, data: bytes, collect: bool = True):
        """Adaptive pass over data; per-byte costs in bits when collect."""
        costs = [] if collect else None
        for i, sym in enumerate(data):
            if collect:
                bits = 0.0
                coded = False
                for node in reversed(self._context_path(data, i)):
                    n = node[_TOTAL]
                    if n == 0:
                        continue
                    counts = node[_COUNTS]
                    c = counts.get(sym, 0)
                    if c:
                        bits += -log2((2.0 * c - 1.0) / (2.0 * n))
                        coded = True
                        break
                    bits += -log2(len(counts) / (2.0 * n))
                if not coded:
                    bits += 8.0
                costs.append(bits)
            self._update(data, i, sym)
        return costs

    def prime(self, data: bytes):
        self.scan(data, collect=False)

    def encode(self, data: bytes) -> tuple[bytes, int]:
        """Adaptive arithmetic coding of data; returns (payload, nbits)."""
        writer = _BitWriter()
        enc = _Encoder(writer)
        for i, sym in enumerate(data):
            coded = False
            for node in reversed(self._context_path(data, i)):
                n = node[_TOTAL]
                if n == 0:
                    continue
                counts = node[_COUNTS]
                d = len(counts)
                if sym in counts:
                    cum = 0
                    for s in sorted(counts):
                        if s == sym:
                            break
                        cum += 2 * counts[s] - 1
                    enc.encode(cum, cum + 2 * counts[sym] - 1, 2 * n)
                    coded = True
                    break
                enc.encode(2 * n - d, 2 * n, 2 * n)
            if not coded:
                enc.encode(sym, sym + 1, 256)
            self._update(data, i, sym)
        enc.finish()
        return writer.to_bytes()

    def decode(self, payload: bytes, nbits: int, n_symbols: int) -> bytes:
        dec = _Decoder(_BitReader(payload, nbits))
        out = bytearray()
        for i in range(n_symbols):
            sym = None
            for node in reversed(self._context_path(out, i)):
                n = node[_TOTAL]
                if n == 0:
                    continue
                counts = node[_COUNTS]
                d = len(counts)
                total = 2 * n
                target = dec.target(total)
                if target >= total - d:
                    dec.consume(total - d, total, total)
                    continue
                cum = 0
                for s in sorted(counts):
                    w = 2 * counts[s] - 1
                    if target < cum + w:
                        sym = s
                        dec.consume(cum, cum + w, total)
                        break
                    cum += w
                break
            if sym is None:
                sym = dec.target(256)
                dec.consume(sym, sym + 1, 256)
            self._update(out, i, sym)
            out.append(sym)
        return bytes(out)

    # -- persistence and copying ------------------------------------------

    def clone(self) -> "PpmCore":
        other = PpmCore(self.max_order)

        def copy(node):
            return [node[_TOTAL], dict(node[_COUNTS]), {
                b: copy(child) for b, child in node[_EDGES].items()
            }]

        other.root = copy(self.root)
        return other

    def items(self):
        """(context bytes in document order, symbol, count) triples, sorted."""
        out = []

        def visit(node, rev_path):
            ctx = bytes(reversed(rev_path))
            for sym in sorted(node[_COUNTS]):
                out.append((ctx, sym, node[_COUNTS][sym]))
            for b in sorted(node[_EDGES]):
                visit(node[_EDGES][b], rev_path + [b])

        visit(self.root, [])
        out.sort(key=lambda t: (len(t[0]), t[0], t[1]))
        return out

    def load_items(self, triples):
        for ctx, sym, count in triples:
            node = self.root
            for b in reversed(ctx):
                nxt = node[_EDGES].get(b)
                if nxt is None:
                    nxt = _new_node()
                    node[_EDGES][b] = nxt
                node = nxt
            node[_COUNTS][sym] = node[_COUNTS].get(sym, 0) + count
            node[_TOTAL] += count
