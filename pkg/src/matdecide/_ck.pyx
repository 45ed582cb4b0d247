# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: free-word reduction and the identity-register
reachability closure. Contracts match matdecide._kernel_py exactly; the
fixpoint is confluent, so both backends return identical results.
"""

from libc.stdlib cimport malloc, realloc, free


cdef inline int ctz64(unsigned long long v):
    cdef int c = 0
    if (v & 0xFFFFFFFFULL) == 0:
        v >>= 32; c += 32
    if (v & 0xFFFFULL) == 0:
        v >>= 16; c += 16
    if (v & 0xFFULL) == 0:
        v >>= 8; c += 8
    if (v & 0xFULL) == 0:
        v >>= 4; c += 4
    if (v & 0x3ULL) == 0:
        v >>= 2; c += 2
    if (v & 0x1ULL) == 0:
        c += 1
    return c


def reduce_letters(letters):
    """Freely reduce a letter sequence (cancel adjacent x, -x pairs)."""
    cdef list src = list(letters)
    cdef Py_ssize_t m = len(src)
    if m == 0:
        return ()
    cdef long long *buf = <long long *> malloc(m * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t i
    cdef long long x
    try:
        for i in range(m):
            x = src[i]
            if top > 0 and buf[top - 1] == -x:
                top -= 1
            else:
                buf[top] = x
                top += 1
        return tuple(buf[i] for i in range(top))
    finally:
        free(buf)


def concat_reduce_letters(u, v):
    """Reduced concatenation of two already-reduced letter sequences."""
    cdef tuple tu = tuple(u)
    cdef tuple tv = tuple(v)
    cdef Py_ssize_t i = len(tu) - 1
    cdef Py_ssize_t j = 0
    cdef Py_ssize_t nv = len(tv)
    while i >= 0 and j < nv and <long long> tu[i] == -(<long long> tv[j]):
        i -= 1
        j += 1
    return tu[: i + 1] + tv[j:]


cdef struct Work:
    int *p
    int *q
    Py_ssize_t head
    Py_ssize_t size
    Py_ssize_t cap


cdef int work_push(Work *w, int p, int q) except -1:
    cdef int *np_
    cdef int *nq_
    if w.size == w.cap:
        w.cap = w.cap * 2 if w.cap else 1024
        np_ = <int *> realloc(w.p, w.cap * sizeof(int))
        nq_ = <int *> realloc(w.q, w.cap * sizeof(int))
        if np_ == NULL or nq_ == NULL:
            free(np_ if np_ != NULL else w.p)
            free(nq_ if nq_ != NULL else w.q)
            w.p = NULL
            w.q = NULL
            raise MemoryError()
        w.p = np_
        w.q = nq_
    w.p[w.size] = p
    w.q[w.size] = q
    w.size += 1
    return 0


cdef class _Closure:
    """Worklist fixpoint over bitset rows; see _kernel_py.dyck_closure."""

    cdef int n
    cdef Py_ssize_t words
    cdef unsigned long long *fwd
    cdef unsigned long long *bwd
    # CSR adjacency: incoming labeled edges per dst, outgoing per src
    cdef Py_ssize_t *in_off
    cdef long long *in_letter
    cdef int *in_src
    cdef Py_ssize_t *out_off
    cdef long long *out_letter
    cdef int *out_dst
    cdef Work work

    def __cinit__(self, int n_states, edges):
        self.n = n_states
        self.words = (n_states + 63) >> 6
        self.fwd = NULL
        self.bwd = NULL
        self.in_off = NULL
        self.in_letter = NULL
        self.in_src = NULL
        self.out_off = NULL
        self.out_letter = NULL
        self.out_dst = NULL
        self.work.p = NULL
        self.work.q = NULL
        self.work.head = 0
        self.work.size = 0
        self.work.cap = 0
        if n_states == 0:
            return
        self._alloc(edges)
        self._saturate()

    def __dealloc__(self):
        free(self.fwd)
        free(self.bwd)
        free(self.in_off)
        free(self.in_letter)
        free(self.in_src)
        free(self.out_off)
        free(self.out_letter)
        free(self.out_dst)
        free(self.work.p)
        free(self.work.q)

    cdef int _alloc(self, edges) except -1:
        cdef int n = self.n
        cdef Py_ssize_t nbits = n * self.words
        self.fwd = <unsigned long long *> malloc(nbits * sizeof(unsigned long long))
        self.bwd = <unsigned long long *> malloc(nbits * sizeof(unsigned long long))
        if self.fwd == NULL or self.bwd == NULL:
            raise MemoryError()
        cdef Py_ssize_t i
        for i in range(nbits):
            self.fwd[i] = 0
            self.bwd[i] = 0

        cdef list eps = []
        cdef list labeled = []
        cdef int src, dst
        cdef long long letter
        for e in edges:
            src = e[0]
            letter = e[1]
            dst = e[2]
            if src < 0 or src >= n or dst < 0 or dst >= n:
                raise ValueError("edge endpoint out of range")
            if letter == 0:
                eps.append((src, dst))
            else:
                labeled.append((src, letter, dst))

        cdef Py_ssize_t m = len(labeled)
        self.in_off = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
        self.out_off = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
        self.in_letter = <long long *> malloc((m if m else 1) * sizeof(long long))
        self.in_src = <int *> malloc((m if m else 1) * sizeof(int))
        self.out_letter = <long long *> malloc((m if m else 1) * sizeof(long long))
        self.out_dst = <int *> malloc((m if m else 1) * sizeof(int))
        if (self.in_off == NULL or self.out_off == NULL or self.in_letter == NULL
                or self.in_src == NULL or self.out_letter == NULL or self.out_dst == NULL):
            raise MemoryError()

        cdef Py_ssize_t k
        for i in range(n + 1):
            self.in_off[i] = 0
            self.out_off[i] = 0
        for src, letter, dst in labeled:
            self.in_off[dst + 1] += 1
            self.out_off[src + 1] += 1
        for i in range(n):
            self.in_off[i + 1] += self.in_off[i]
            self.out_off[i + 1] += self.out_off[i]
        cdef Py_ssize_t *in_pos = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
        cdef Py_ssize_t *out_pos = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
        if in_pos == NULL or out_pos == NULL:
            free(in_pos)
            free(out_pos)
            raise MemoryError()
        for i in range(n):
            in_pos[i] = self.in_off[i]
            out_pos[i] = self.out_off[i]
        for src, letter, dst in labeled:
            k = in_pos[dst]
            self.in_letter[k] = letter
            self.in_src[k] = src
            in_pos[dst] = k + 1
            k = out_pos[src]
            self.out_letter[k] = letter
            self.out_dst[k] = dst
            out_pos[src] = k + 1
        free(in_pos)
        free(out_pos)

        for src, dst in eps:
            self._add(src, dst)
        for i in range(n):
            self._add(<int> i, <int> i)
        return 0

    cdef inline int _add(self, int p, int q) except -1:
        cdef Py_ssize_t w = p * self.words + (q >> 6)
        cdef unsigned long long bit = (<unsigned long long> 1) << (q & 63)
        if self.fwd[w] & bit:
            return 0
        self.fwd[w] |= bit
        self.bwd[q * self.words + (p >> 6)] |= (<unsigned long long> 1) << (p & 63)
        work_push(&self.work, p, q)
        return 0

    cdef int _saturate(self) except -1:
        cdef int p, q, u, r, o, base
        cdef long long x
        cdef Py_ssize_t i, j, w
        cdef unsigned long long v
        while self.work.head < self.work.size:
            p = self.work.p[self.work.head]
            q = self.work.q[self.work.head]
            self.work.head += 1
            # wrap rule: u -x-> p with R(p,q) and q -(-x)-> v gives R(u,v)
            for i in range(self.in_off[p], self.in_off[p + 1]):
                x = self.in_letter[i]
                u = self.in_src[i]
                for j in range(self.out_off[q], self.out_off[q + 1]):
                    if self.out_letter[j] == -x:
                        self._add(u, self.out_dst[j])
            # transitivity, composing on both sides
            for w in range(self.words):
                v = self.fwd[q * self.words + w]
                base = <int> (w << 6)
                while v:
                    r = base + ctz64(v)
                    v &= v - 1
                    self._add(p, r)
            for w in range(self.words):
                v = self.bwd[p * self.words + w]
                base = <int> (w << 6)
                while v:
                    o = base + ctz64(v)
                    v &= v - 1
                    self._add(o, q)
        return 0

    def pairs(self):
        cdef set out = set()
        cdef Py_ssize_t i
        for i in range(self.work.size):
            out.add((self.work.p[i], self.work.q[i]))
        return out

    def row_intersects(self, int p, targets):
        cdef int q
        for t in targets:
            q = t
            if self.fwd[p * self.words + (q >> 6)] & ((<unsigned long long> 1) << (q & 63)):
                return True
        return False


def dyck_closure(int n_states, edges):
    """Least identity-reachability relation; see matdecide._kernel_py."""
    if n_states == 0:
        return set()
    return _Closure(n_states, edges).pairs()


def dyck_nonempty(int n_states, edges, int initial, accepting):
    """True iff some accepting state is identity-reachable from the initial one."""
    targets = list(accepting)
    if n_states == 0 or not targets:
        return False
    return _Closure(n_states, edges).row_intersects(initial, targets)
