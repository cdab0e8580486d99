# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical labeling kernel for graphs with at most 11 vertices.

Walks the same individualization/refinement tree as ``_canon_py`` and
returns the same maximum leaf certificate; see that module for the
definition.  Pruning here is limited to twin vertices and first-leaf
jumps, which is enough at this size.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    MAXN = 11
    SLOTS = 16

MAX_VERTICES = MAXN


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef struct Ctx:
    int n
    uint64_t rows[SLOTS]
    int have_first
    uint64_t first_cert
    uint64_t best_cert


cdef inline uint64_t leaf_cert(Ctx* c, int* order) nogil:
    cdef uint64_t cert = 0
    cdef int i, j, n = c.n
    cdef uint64_t row
    for i in range(n):
        row = c.rows[order[i]]
        for j in range(i + 1, n):
            cert = (cert << 1) | ((row >> order[j]) & 1)
    return cert


cdef void refine(Ctx* c, int* order, int* start, int* ncells) nogil:
    # order: vertices by position; start[k]: first position of cell k
    cdef int n = c.n
    cdef uint64_t cellmask[SLOTS]
    cdef uint64_t sig[SLOTS]
    cdef int newstart[SLOTS]
    cdef int k, p, q, s, e, nc, newnc, v
    cdef uint64_t key
    cdef int tv
    cdef uint64_t tk
    while True:
        nc = ncells[0]
        for k in range(nc):
            s = start[k]
            e = start[k + 1] if k + 1 < nc else n
            cellmask[k] = 0
            for p in range(s, e):
                cellmask[k] |= (<uint64_t>1) << order[p]
        for p in range(n):
            key = 0
            for k in range(nc):
                key = (key << 4) | <uint64_t>popcount(c.rows[order[p]] & cellmask[k])
            sig[p] = key
        newnc = 0
        for k in range(nc):
            s = start[k]
            e = start[k + 1] if k + 1 < nc else n
            # insertion sort of [s, e) by (sig, vertex)
            for p in range(s + 1, e):
                tv = order[p]
                tk = sig[p]
                q = p - 1
                while q >= s and (sig[q] > tk or (sig[q] == tk and order[q] > tv)):
                    order[q + 1] = order[q]
                    sig[q + 1] = sig[q]
                    q -= 1
                order[q + 1] = tv
                sig[q + 1] = tk
            newstart[newnc] = s
            newnc += 1
            for p in range(s + 1, e):
                if sig[p] != sig[p - 1]:
                    newstart[newnc] = p
                    newnc += 1
        if newnc == nc:
            return
        for k in range(newnc):
            start[k] = newstart[k]
        ncells[0] = newnc


cdef inline int twins(Ctx* c, int v, int w) nogil:
    return (c.rows[v] & ~((<uint64_t>1) << w)) == (c.rows[w] & ~((<uint64_t>1) << v))


cdef int search(Ctx* c, int* order, int* start, int ncells, int depth, int diverged) nogil:
    # returns depth to jump back to, or -1
    cdef int n = c.n
    cdef int k, s = -1, e = 0, p, q, v, i, skip, jump
    cdef int cand[SLOTS]
    cdef int ncand = 0
    cdef int corder[SLOTS]
    cdef int cstart[SLOTS]
    cdef int cn, child_div, explored = 0
    cdef uint64_t cert

    for k in range(ncells):
        e = start[k + 1] if k + 1 < ncells else n
        if e - start[k] > 1:
            s = start[k]
            break
    if s < 0:
        cert = leaf_cert(c, order)
        if not c.have_first:
            c.have_first = 1
            c.first_cert = cert
            c.best_cert = cert
            return -1
        if cert == c.first_cert:
            return diverged
        if cert > c.best_cert:
            c.best_cert = cert
        return -1

    for p in range(s, e):
        v = order[p]
        skip = 0
        for i in range(ncand):
            if twins(c, v, cand[i]):
                skip = 1
                break
        if not skip:
            cand[ncand] = v
            ncand += 1

    for i in range(ncand):
        v = cand[i]
        # individualize v: [v] then the rest of the cell, ascending
        for p in range(n):
            corder[p] = order[p]
        corder[s] = v
        q = s + 1
        for p in range(s, e):
            if order[p] != v:
                corder[q] = order[p]
                q += 1
        cn = 0
        for k in range(ncells):
            cstart[cn] = start[k]
            cn += 1
            if start[k] == s:
                cstart[cn] = s + 1
                cn += 1
        refine(c, corder, cstart, &cn)
        if diverged < 0 and explored:
            child_div = depth
        else:
            child_div = diverged
        jump = search(c, corder, cstart, cn, depth + 1, child_div)
        explored = 1
        if jump >= 0 and jump < depth:
            return jump
    return -1


cdef uint64_t certificate_rows(Ctx* c) nogil:
    cdef int order[SLOTS]
    cdef int start[SLOTS]
    cdef int ncells = 1
    cdef int i
    for i in range(c.n):
        order[i] = i
    start[0] = 0
    c.have_first = 0
    c.first_cert = 0
    c.best_cert = 0
    if c.n <= 1:
        return 0
    refine(c, order, start, &ncells)
    search(c, order, start, ncells, 0, -1)
    return c.best_cert


cdef void load_mask(Ctx* c, int n, uint64_t mask) nogil:
    cdef int i, j, k = 0
    c.n = n
    for i in range(n):
        c.rows[i] = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> k) & 1:
                c.rows[i] |= (<uint64_t>1) << j
                c.rows[j] |= (<uint64_t>1) << i
            k += 1


def certificate(int n, rows):
    """Maximum leaf certificate of the graph given by adjacency bitmasks."""
    cdef Ctx c
    cdef int i
    if n < 0 or n > MAXN:
        raise ValueError(f"compiled kernel supports 0..{MAXN} vertices, got {n}")
    if len(rows) != n:
        raise ValueError("row count does not match n")
    c.n = n
    for i in range(n):
        c.rows[i] = <uint64_t>rows[i]
    return certificate_rows(&c)


def certificate_of_mask(int n, uint64_t mask):
    cdef Ctx c
    if n < 0 or n > MAXN:
        raise ValueError(f"compiled kernel supports 0..{MAXN} vertices, got {n}")
    load_mask(&c, n, mask)
    return certificate_rows(&c)


def canon_range(int n, uint64_t lo, uint64_t hi):
    """Certificates of every labeled graph whose edge mask lies in [lo, hi)."""
    cdef Ctx c
    cdef uint64_t mask, cert, last = 0
    cdef int have_last = 0
    if n < 0 or n > MAXN:
        raise ValueError(f"compiled kernel supports 0..{MAXN} vertices, got {n}")
    found = set()
    mask = lo
    while mask < hi:
        with nogil:
            load_mask(&c, n, mask)
            cert = certificate_rows(&c)
        if not have_last or cert != last:
            found.add(cert)
            last = cert
            have_last = 1
        mask += 1
    return found
