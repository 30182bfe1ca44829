# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled PPM engine; drop-in replacement for the pure-Python one.

Same trie layout (reversed-context walk), same method-D escape arithmetic,
same update-all schedule and the same 32-bit arithmetic coder, so bitstreams
and per-byte costs match the pure engine bit for bit.  Context nodes live in
flat arenas with intrusive sorted linked lists for counts and edges.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.math cimport log2
from libcpp.vector cimport vector
from libc.stdint cimport uint8_t, uint32_t, int32_t, uint64_t

BACKEND = "compiled"
MAX_ORDER = 5

cdef uint64_t FULL = (<uint64_t>1) << 32
cdef uint64_t HALF = FULL >> 1
cdef uint64_t QUARTER = FULL >> 2
cdef uint64_t MASK = FULL - 1


cdef struct Node:
    uint32_t total
    uint32_t distinct
    int32_t counts_head
    int32_t edges_head

cdef struct CEntry:
    uint8_t sym
    uint32_t count
    int32_t next

cdef struct EEntry:
    uint8_t b
    int32_t node
    int32_t next


cdef class _BitSink:
    cdef vector[uint8_t] data
    cdef uint64_t nbits
    cdef uint64_t pending

    def __cinit__(self):
        self.nbits = 0
        self.pending = 0

    cdef void put(self, int bit):
        self._raw(bit)
        while self.pending:
            self._raw(1 - bit)
            self.pending -= 1

    cdef void _raw(self, int bit):
        if (self.nbits & 7) == 0:
            self.data.push_back(0)
        if bit:
            self.data[self.data.size() - 1] |= <uint8_t>(0x80 >> (self.nbits & 7))
        self.nbits += 1


cdef class _BitSource:
    cdef const unsigned char* data
    cdef uint64_t nbits
    cdef uint64_t pos
    cdef object keepalive

    def __cinit__(self, bytes payload, uint64_t nbits):
        self.keepalive = payload
        self.data = payload
        self.nbits = nbits
        self.pos = 0

    cdef int read(self):
        cdef int b
        if self.pos >= self.nbits:
            self.pos += 1
            return 0
        b = (self.data[self.pos >> 3] >> (7 - (self.pos & 7))) & 1
        self.pos += 1
        return b


cdef class PpmCore:
    cdef vector[Node] nodes
    cdef vector[CEntry] cpool
    cdef vector[EEntry] epool
    cdef public int max_order

    def __cinit__(self, int max_order=MAX_ORDER):
        self.max_order = max_order
        self._push_node()

    cdef int32_t _push_node(self):
        cdef Node n
        n.total = 0
        n.distinct = 0
        n.counts_head = -1
        n.edges_head = -1
        self.nodes.push_back(n)
        return <int32_t>self.nodes.size() - 1

    cdef int32_t _edge_find(self, int32_t nid, uint8_t b):
        cdef int32_t e = self.nodes[nid].edges_head
        while e >= 0:
            if self.epool[e].b == b:
                return self.epool[e].node
            e = self.epool[e].next
        return -1

    cdef int32_t _edge_find_or_add(self, int32_t nid, uint8_t b):
        cdef int32_t child = self._edge_find(nid, b)
        cdef EEntry entry
        if child >= 0:
            return child
        child = self._push_node()
        entry.b = b
        entry.node = child
        entry.next = self.nodes[nid].edges_head
        self.epool.push_back(entry)
        self.nodes[nid].edges_head = <int32_t>self.epool.size() - 1
        return child

    cdef uint32_t _count_of(self, int32_t nid, uint8_t sym):
        cdef int32_t e = self.nodes[nid].counts_head
        while e >= 0:
            if self.cpool[e].sym == sym:
                return self.cpool[e].count
            if self.cpool[e].sym > sym:
                return 0
            e = self.cpool[e].next
        return 0

    cdef void _bump(self, int32_t nid, uint8_t sym, uint32_t by):
        # sorted insert keeps cumulative scans in ascending symbol order
        cdef int32_t e = self.nodes[nid].counts_head
        cdef int32_t prev = -1
        cdef CEntry entry
        while e >= 0 and self.cpool[e].sym < sym:
            prev = e
            e = self.cpool[e].next
        if e >= 0 and self.cpool[e].sym == sym:
            self.cpool[e].count += by
        else:
            entry.sym = sym
            entry.count = by
            entry.next = e
            self.cpool.push_back(entry)
            if prev < 0:
                self.nodes[nid].counts_head = <int32_t>self.cpool.size() - 1
            else:
                self.cpool[prev].next = <int32_t>self.cpool.size() - 1
            self.nodes[nid].distinct += 1
        self.nodes[nid].total += by

    cdef int _path(self, const unsigned char* data, Py_ssize_t i, int32_t* path):
        cdef int length = 1
        cdef int j
        cdef int32_t node = 0
        cdef int limit = self.max_order if self.max_order < i else <int>i
        path[0] = 0
        for j in range(1, limit + 1):
            node = self._edge_find(node, data[i - j])
            if node < 0:
                break
            path[length] = node
            length += 1
        return length

    cdef void _update(self, const unsigned char* data, Py_ssize_t i, uint8_t sym):
        cdef int32_t node = 0
        cdef int j
        cdef int limit = self.max_order if self.max_order < i else <int>i
        self._bump(0, sym, 1)
        for j in range(1, limit + 1):
            node = self._edge_find_or_add(node, data[i - j])
            self._bump(node, sym, 1)

    # -- public API mirroring the pure engine ------------------------------

    def scan(self, bytes data, collect=True):
        cdef const unsigned char* buf = data
        cdef Py_ssize_t i, size = len(data)
        cdef int32_t path[8]
        cdef int plen, p
        cdef uint8_t sym
        cdef uint32_t n, c
        cdef double bits
        cdef bint coded
        cdef bint want = bool(collect)
        costs = [] if want else None
        for i in range(size):
            sym = buf[i]
            if want:
                bits = 0.0
                coded = False
                plen = self._path(buf, i, path)
                for p in range(plen - 1, -1, -1):
                    n = self.nodes[path[p]].total
                    if n == 0:
                        continue
                    c = self._count_of(path[p], sym)
                    if c:
                        bits += -log2((2.0 * c - 1.0) / (2.0 * n))
                        coded = True
                        break
                    bits += -log2(self.nodes[path[p]].distinct / (2.0 * n))
                if not coded:
                    bits += 8.0
                costs.append(bits)
            self._update(buf, i, sym)
        return costs

    def prime(self, bytes data):
        self.scan(data, collect=False)

    def encode(self, bytes data):
        cdef const unsigned char* buf = data
        cdef Py_ssize_t i, size = len(data)
        cdef _BitSink sink = _BitSink()
        cdef uint64_t low = 0, high = MASK, rng
        cdef int32_t path[8]
        cdef int plen, p
        cdef uint8_t sym
        cdef uint32_t n, d, cum, w
        cdef int32_t e
        cdef bint coded
        cdef uint64_t c_lo, c_hi, total

        for i in range(size):
            sym = buf[i]
            coded = False
            plen = self._path(buf, i, path)
            for p in range(plen - 1, -1, -1):
                n = self.nodes[path[p]].total
                if n == 0:
                    continue
                d = self.nodes[path[p]].distinct
                total = 2 * <uint64_t>n
                cum = 0
                w = 0
                e = self.nodes[path[p]].counts_head
                while e >= 0 and self.cpool[e].sym < sym:
                    cum += 2 * self.cpool[e].count - 1
                    e = self.cpool[e].next
                if e >= 0 and self.cpool[e].sym == sym:
                    w = 2 * self.cpool[e].count - 1
                if w:
                    c_lo = cum
                    c_hi = cum + w
                    coded = True
                else:
                    c_lo = total - d
                    c_hi = total
                rng = high - low + 1
                high = low + rng * c_hi // total - 1
                low = low + rng * c_lo // total
                while True:
                    if high < HALF:
                        sink.put(0)
                    elif low >= HALF:
                        sink.put(1)
                        low -= HALF
                        high -= HALF
                    elif low >= QUARTER and high < 3 * QUARTER:
                        sink.pending += 1
                        low -= QUARTER
                        high -= QUARTER
                    else:
                        break
                    low <<= 1
                    high = (high << 1) | 1
                if coded:
                    break
            if not coded:
                rng = high - low + 1
                high = low + rng * (<uint64_t>sym + 1) // 256 - 1
                low = low + rng * <uint64_t>sym // 256
                while True:
                    if high < HALF:
                        sink.put(0)
                    elif low >= HALF:
                        sink.put(1)
                        low -= HALF
                        high -= HALF
                    elif low >= QUARTER and high < 3 * QUARTER:
                        sink.pending += 1
                        low -= QUARTER
                        high -= QUARTER
                    else:
                        break
                    low <<= 1
                    high = (high << 1) | 1
            self._update(buf, i, sym)
        sink.pending += 1
        sink.put(0 if low < QUARTER else 1)
        if sink.data.size():
            payload = PyBytes_FromStringAndSize(<const char*>sink.data.data(), sink.data.size())
        else:
            payload = b""
        return payload, sink.nbits

    def decode(self, bytes payload, nbits, n_symbols):
        cdef _BitSource src = _BitSource(payload, <uint64_t>nbits)
        cdef uint64_t low = 0, high = MASK, code = 0, rng, target
        cdef vector[uint8_t] out
        cdef Py_ssize_t i, size = <Py_ssize_t>n_symbols
        cdef int32_t path[8]
        cdef int plen, p, k
        cdef int sym
        cdef uint32_t n, d, cum, w
        cdef int32_t e
        cdef uint64_t c_lo, c_hi, total
        cdef const unsigned char* buf

        for k in range(32):
            code = (code << 1) | src.read()

        for i in range(size):
            buf = out.data()
            sym = -1
            plen = self._path(buf, i, path)
            for p in range(plen - 1, -1, -1):
                n = self.nodes[path[p]].total
                if n == 0:
                    continue
                d = self.nodes[path[p]].distinct
                total = 2 * <uint64_t>n
                rng = high - low + 1
                target = ((code - low + 1) * total - 1) // rng
                if target >= total - d:
                    c_lo = total - d
                    c_hi = total
                else:
                    cum = 0
                    e = self.nodes[path[p]].counts_head
                    while e >= 0:
                        w = 2 * self.cpool[e].count - 1
                        if target < cum + w:
                            sym = self.cpool[e].sym
                            break
                        cum += w
                        e = self.cpool[e].next
                    c_lo = cum
                    c_hi = cum + w
                high = low + rng * c_hi // total - 1
                low = low + rng * c_lo // total
                while True:
                    if high < HALF:
                        pass
                    elif low >= HALF:
                        low -= HALF
                        high -= HALF
                        code -= HALF
                    elif low >= QUARTER and high < 3 * QUARTER:
                        low -= QUARTER
                        high -= QUARTER
                        code -= QUARTER
                    else:
                        break
                    low <<= 1
                    high = (high << 1) | 1
                    code = (code << 1) | src.read()
                if sym >= 0:
                    break
            if sym < 0:
                rng = high - low + 1
                target = ((code - low + 1) * 256 - 1) // rng
                sym = <int>target
                high = low + rng * (target + 1) // 256 - 1
                low = low + rng * target // 256
                while True:
                    if high < HALF:
                        pass
                    elif low >= HALF:
                        low -= HALF
                        high -= HALF
                        code -= HALF
                    elif low >= QUARTER and high < 3 * QUARTER:
                        low -= QUARTER
                        high -= QUARTER
                        code -= QUARTER
                    else:
                        break
                    low <<= 1
                    high = (high << 1) | 1
                    code = (code << 1) | src.read()
            buf = out.data()
            self._update(buf, i, <uint8_t>sym)
            out.push_back(<uint8_t>sym)
        if out.size():
            return PyBytes_FromStringAndSize(<const char*>out.data(), out.size())
        return b""

    def clone(self):
        cdef PpmCore other = PpmCore(self.max_order)
        other.nodes = self.nodes
        other.cpool = self.cpool
        other.epool = self.epool
        return other

    def items(self):
        out = []
        stack = [(0, b"")]
        cdef int32_t nid, e
        while stack:
            nid, rev = stack.pop()
            ctx = bytes(reversed(rev))
            e = self.nodes[nid].counts_head
            while e >= 0:
                out.append((ctx, self.cpool[e].sym, self.cpool[e].count))
                e = self.cpool[e].next
            e = self.nodes[nid].edges_head
            while e >= 0:
                stack.append((self.epool[e].node, rev + bytes([self.epool[e].b])))
                e = self.epool[e].next
        out.sort(key=lambda t: (len(t[0]), t[0], t[1]))
        return out

    def load_items(self, triples):
        cdef int32_t node
        for ctx, sym, count in triples:
            node = 0
            for b in reversed(ctx):
                node = self._edge_find_or_add(node, <uint8_t>b)
            self._bump(node, <uint8_t>sym, <uint32_t>count)
