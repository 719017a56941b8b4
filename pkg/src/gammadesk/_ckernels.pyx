# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation kernels; mirror of ``_kernels_py``."""

DEF MAXLEN = 64

DES_MASK, DES, MAJ, DD, DD0, DDINF, DESP, DDP = range(8)


cdef int _load(object seq, int *buf) except -1:
    cdef Py_ssize_t n = len(seq), i
    if n > MAXLEN:
        raise ValueError(f"word longer than {MAXLEN}")
    for i in range(n):
        buf[i] = seq[i]
    return <int>n


def stat_scan(word):
    cdef int w[MAXLEN]
    cdef int n = _load(word, w)
    cdef int i, cur
    cdef object mask = 0
    cdef long long bits = 0
    cdef int des = 0, maj = 0, desp, dd = 0, dd0 = 0, ddinf = 0, ddp = 0
    cdef bint above_inf, above_zero, falls
    for i in range(1, n):
        if w[i - 1] > w[i]:
            bits |= (<long long>1) << i
            des += 1
            maj += i
    desp = des - 1 if (n > 1 and (bits >> (n - 1)) & 1) else des
    for i in range(n):
        cur = w[i]
        above_inf = i == 0 or w[i - 1] > cur
        above_zero = i > 0 and w[i - 1] > cur
        if i < n - 1:
            falls = cur > w[i + 1]
            if falls and above_inf:
                dd += 1
                ddinf += 1
                if i + 1 != n - 1:
                    ddp += 1
            if falls and above_zero:
                dd0 += 1
        elif above_inf:
            ddinf += 1
    mask = bits
    return mask, des, maj, dd, dd0, ddinf, desp, ddp


cdef bint _place(const int *w, const int *p, int m, int *pos, int j, int hi) noexcept:
    cdef int i, q, wi, pj
    cdef bint ok
    if j < 0:
        return True
    pj = p[j]
    i = hi - 1
    while i >= j:
        wi = w[i]
        ok = True
        for q in range(j + 1, m):
            if (pj < p[q]) != (wi < w[pos[q]]):
                ok = False
                break
        if ok:
            pos[j] = i
            if _place(w, p, m, pos, j - 1, i):
                return True
        i -= 1
    return False


cdef bint _occurs_ending_at(const int *w, int end, const int *p, int m) noexcept:
    cdef int pos[MAXLEN]
    if m == 0:
        return True
    if end + 1 < m:
        return False
    pos[m - 1] = end
    return _place(w, p, m, pos, m - 2, end)


def occurs_at_end(word, pattern):
    cdef int w[MAXLEN]
    cdef int p[MAXLEN]
    cdef int n = _load(word, w)
    cdef int m = _load(pattern, p)
    return _occurs_ending_at(w, n - 1, p, m)


def contains(word, pattern):
    cdef int w[MAXLEN]
    cdef int p[MAXLEN]
    cdef int n = _load(word, w)
    cdef int m = _load(pattern, p)
    cdef int end
    for end in range(m - 1, n):
        if _occurs_ending_at(w, end, p, m):
            return True
    return False


cdef class _Search:
    cdef int n
    cdef int npat
    cdef int pat[16][MAXLEN]
    cdef int plen[16]
    cdef int prefix[MAXLEN]
    cdef int used[MAXLEN + 1]
    cdef list out

    cdef void extend(self, int depth, int first):
        cdef int v, lo, hi, k
        cdef bint bad
        if depth == self.n:
            self.out.append(tuple([self.prefix[k] for k in range(self.n)]))
            return
        if depth == 0 and first:
            lo = first
            hi = first
        else:
            lo = 1
            hi = self.n
        for v in range(lo, hi + 1):
            if self.used[v]:
                continue
            self.prefix[depth] = v
            bad = False
            for k in range(self.npat):
                if _occurs_ending_at(self.prefix, depth, self.pat[k], self.plen[k]):
                    bad = True
                    break
            if not bad:
                self.used[v] = 1
                self.extend(depth + 1, first)
                self.used[v] = 0


def avoiders(int n, patterns, int first=0):
    cdef _Search s = _Search()
    cdef int k, i
    pats = [tuple(p) for p in patterns]
    if len(pats) > 16:
        raise ValueError("at most 16 patterns")
    if n > MAXLEN - 1:
        raise ValueError(f"n larger than {MAXLEN - 1}")
    s.n = n
    s.npat = len(pats)
    for k in range(s.npat):
        s.plen[k] = _load(pats[k], s.pat[k])
    for i in range(MAXLEN + 1):
        s.used[i] = 0
    s.out = []
    if n >= 1 and (first == 0 or 1 <= first <= n):
        s.extend(0, first)
    return s.out
