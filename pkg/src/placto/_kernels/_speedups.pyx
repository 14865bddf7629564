# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled rewrite kernels: window matching and breadth-first closure.

Same interface and semantics as placto._kernels.pure: words are bytes
objects (one letter per byte, values 1..255) and rules arrive
direction-expanded as (left, right, strict) variable-pattern triples.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize, PyBytes_GET_SIZE
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

backend_name = "cython"

cdef int MAX_PAT = 16
cdef int MAX_WORD = 255


cdef class RuleTable:
    """Preprocessed one-directional rewrite rules over variable patterns."""

    cdef int nrules
    cdef int* plen
    cdef int* nvars
    cdef unsigned char* pat
    cdef unsigned char* rep
    cdef unsigned char* strict
    cdef readonly tuple rules

    def __cinit__(self, rules):
        compiled = []
        for left, right, strict in rules:
            left, right, strict = tuple(left), tuple(right), tuple(strict)
            if len(left) != len(right):
                raise ValueError("patterns must have equal length")
            if not 0 < len(left) <= MAX_PAT:
                raise ValueError("pattern length out of range")
            nv = len(strict) + 1
            if nv > MAX_PAT:
                raise ValueError("too many pattern variables")
            for v in left + right:
                if not 0 <= v < nv:
                    raise ValueError(f"bad variable index {v}")
            compiled.append((len(left), nv, left, right, strict))
        self.rules = tuple(compiled)

        cdef int m = len(compiled)
        self.nrules = m
        self.plen = <int*> calloc(m if m else 1, sizeof(int))
        self.nvars = <int*> calloc(m if m else 1, sizeof(int))
        self.pat = <unsigned char*> calloc((m if m else 1) * MAX_PAT, 1)
        self.rep = <unsigned char*> calloc((m if m else 1) * MAX_PAT, 1)
        self.strict = <unsigned char*> calloc((m if m else 1) * MAX_PAT, 1)
        if not (self.plen and self.nvars and self.pat and self.rep and self.strict):
            raise MemoryError()
        cdef int i, k
        for i, (plen, nv, left, right, flags) in enumerate(compiled):
            self.plen[i] = plen
            self.nvars[i] = nv
            for k in range(plen):
                self.pat[i * MAX_PAT + k] = left[k]
                self.rep[i * MAX_PAT + k] = right[k]
            for k in range(nv - 1):
                self.strict[i * MAX_PAT + k] = 1 if flags[k] else 0

    def __dealloc__(self):
        if self.plen != NULL:
            free(self.plen)
        if self.nvars != NULL:
            free(self.nvars)
        if self.pat != NULL:
            free(self.pat)
        if self.rep != NULL:
            free(self.rep)
        if self.strict != NULL:
            free(self.strict)


cdef inline bint _try_rule(const unsigned char* w, Py_ssize_t pos, RuleTable t,
                           int r, unsigned char* vals) noexcept nogil:
    cdef int k, v
    cdef int plen = t.plen[r]
    cdef int nv = t.nvars[r]
    cdef const unsigned char* pat = t.pat + r * MAX_PAT
    cdef const unsigned char* st = t.strict + r * MAX_PAT
    cdef unsigned char a
    for k in range(nv):
        vals[k] = 0
    for k in range(plen):
        v = pat[k]
        a = w[pos + k]
        if vals[v] == 0:
            vals[v] = a
        elif vals[v] != a:
            return False
    for k in range(nv - 1):
        if st[k]:
            if vals[k] >= vals[k + 1]:
                return False
        else:
            if vals[k] > vals[k + 1]:
                return False
    return True


cdef int _expand(bytes word, RuleTable t, set seen, list queue, object target) except -1:
    """Append unseen one-step rewrites of `word` to `queue`, updating `seen`.

    Returns 1 as soon as a rewrite equals `target` (when target is not None).
    """
    cdef Py_ssize_t length = PyBytes_GET_SIZE(word)
    cdef const unsigned char* w = <const unsigned char*> PyBytes_AS_STRING(word)
    cdef unsigned char vals[16]
    cdef unsigned char buf[256]
    cdef int r, k, plen
    cdef Py_ssize_t pos
    cdef const unsigned char* rep
    cdef bytes rewritten
    if length > MAX_WORD:
        raise ValueError("word too long for the compiled kernel")
    memcpy(buf, w, length)
    for r in range(t.nrules):
        plen = t.plen[r]
        if plen > length:
            continue
        rep = t.rep + r * MAX_PAT
        for pos in range(length - plen + 1):
            if not _try_rule(w, pos, t, r, vals):
                continue
            for k in range(plen):
                buf[pos + k] = vals[rep[k]]
            rewritten = PyBytes_FromStringAndSize(<const char*> buf, length)
            for k in range(plen):
                buf[pos + k] = w[pos + k]
            if rewritten not in seen:
                seen.add(rewritten)
                queue.append(rewritten)
                if target is not None and rewritten == <bytes> target:
                    return 1
    return 0


def neighbors(bytes word, RuleTable table):
    """Words reachable from `word` by one rule application at one position."""
    cdef set seen = set()
    cdef list queue = []
    _expand(word, table, seen, queue, None)
    return seen


def closure(bytes word, RuleTable table):
    """Breadth-first reflexive-transitive closure of the one-step rewrites."""
    cdef set seen = {word}
    cdef list frontier = [word]
    cdef list nxt
    while frontier:
        nxt = []
        for w in frontier:
            _expand(<bytes> w, table, seen, nxt, None)
        frontier = nxt
    return seen


def is_equivalent(bytes u, bytes v, RuleTable table):
    """True iff v is reachable from u; searches breadth-first with early exit."""
    if u == v:
        return True
    if PyBytes_GET_SIZE(u) != PyBytes_GET_SIZE(v):
        return False
    cdef set seen = {u}
    cdef list frontier = [u]
    cdef list nxt
    while frontier:
        nxt = []
        for w in frontier:
            if _expand(<bytes> w, table, seen, nxt, v):
                return True
        frontier = nxt
    return False


def canonical(bytes word, RuleTable table):
    """Lexicographically least member of the closure."""
    return min(closure(word, table))
