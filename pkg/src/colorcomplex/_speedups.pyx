# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse elimination kernels.

Same algorithms as the pure fallback: exact rank by gcd-combination row
elimination and modular rank over a word-size prime.  Entries live in 64-bit
integers; the exact kernel returns -1 when entry growth would leave the safe
range, and the caller escalates to the arbitrary-precision pure kernel.
"""

from libc.stdlib cimport free, malloc, realloc

ctypedef long long i64

cdef i64 CAP = 2147483647  # entries kept within 31 bits so products fit in 62


cdef inline i64 c_abs(i64 x) noexcept nogil:
    return -x if x < 0 else x


cdef inline i64 c_gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    a = c_abs(a)
    b = c_abs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef struct Row:
    int* cols
    i64* vals
    int n
    int cap
    int dead


cdef struct IList:
    int* a
    int n
    int cap


cdef int ilist_push(IList* l, int x) noexcept nogil:
    cdef int newcap
    cdef int* na
    if l.n == l.cap:
        newcap = 8 if l.cap == 0 else l.cap * 2
        na = <int*> realloc(l.a, newcap * sizeof(int))
        if na == NULL:
            return -1
        l.a = na
        l.cap = newcap
    l.a[l.n] = x
    l.n += 1
    return 0


cdef struct Heap:
    i64* a
    int n
    int cap


cdef int heap_push(Heap* h, i64 x) noexcept nogil:
    cdef int newcap, i, parent
    cdef i64* na
    cdef i64 tmp
    if h.n == h.cap:
        newcap = 64 if h.cap == 0 else h.cap * 2
        na = <i64*> realloc(h.a, newcap * sizeof(i64))
        if na == NULL:
            return -1
        h.a = na
        h.cap = newcap
    h.a[h.n] = x
    i = h.n
    h.n += 1
    while i > 0:
        parent = (i - 1) >> 1
        if h.a[parent] <= h.a[i]:
            break
        tmp = h.a[parent]
        h.a[parent] = h.a[i]
        h.a[i] = tmp
        i = parent
    return 0


cdef i64 heap_pop(Heap* h) noexcept nogil:
    # caller checks h.n > 0
    cdef i64 top = h.a[0]
    cdef i64 tmp
    cdef int i = 0, child
    h.n -= 1
    h.a[0] = h.a[h.n]
    while True:
        child = 2 * i + 1
        if child >= h.n:
            break
        if child + 1 < h.n and h.a[child + 1] < h.a[child]:
            child += 1
        if h.a[i] <= h.a[child]:
            break
        tmp = h.a[i]
        h.a[i] = h.a[child]
        h.a[child] = tmp
        i = child
    return top


cdef int row_find(Row* r, int col) noexcept nogil:
    # binary search; returns index or -1
    cdef int lo = 0, hi = r.n - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if r.cols[mid] == col:
            return mid
        if r.cols[mid] < col:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


cdef struct Ctx:
    int nrows
    int ncols
    Row* rows
    int* colcount
    IList* collist
    Heap heap  # lazy (population << 32 | column) min-heap
    int* scratch_cols
    i64* scratch_vals
    int* cand
    int* seen  # stamp per row, dedupes collist entries
    int stamp
    int fail  # 0 ok, 1 overflow-bail, 2 out of memory


cdef int push_col(Ctx* c, int col) noexcept nogil:
    if c.colcount[col] > 0:
        return heap_push(&c.heap, (<i64> c.colcount[col] << 32) | <i64> col)
    return 0


cdef void ctx_free(Ctx* c) noexcept nogil:
    cdef int i
    if c.rows != NULL:
        for i in range(c.nrows):
            free(c.rows[i].cols)
            free(c.rows[i].vals)
        free(c.rows)
    if c.collist != NULL:
        for i in range(c.ncols):
            free(c.collist[i].a)
        free(c.collist)
    free(c.heap.a)
    free(c.colcount)
    free(c.scratch_cols)
    free(c.scratch_vals)
    free(c.cand)
    free(c.seen)


cdef int ctx_init(Ctx* c, int nrows, int ncols,
                  i64[::1] rr, i64[::1] cc, i64[::1] vv) noexcept nogil:
    cdef int i, r, nnz = <int> rr.shape[0]
    cdef Row* row
    c.nrows = nrows
    c.ncols = ncols
    c.fail = 0
    c.stamp = 0
    c.rows = NULL
    c.colcount = NULL
    c.collist = NULL
    c.heap.a = NULL
    c.heap.n = 0
    c.heap.cap = 0
    c.scratch_cols = NULL
    c.scratch_vals = NULL
    c.cand = NULL
    c.seen = NULL
    c.rows = <Row*> malloc(nrows * sizeof(Row))
    if c.rows == NULL:
        return -1
    for i in range(nrows):
        c.rows[i].cols = NULL
        c.rows[i].vals = NULL
        c.rows[i].n = 0
        c.rows[i].cap = 0
        c.rows[i].dead = 0
    c.collist = <IList*> malloc(ncols * sizeof(IList))
    if c.collist == NULL:
        return -1
    for i in range(ncols):
        c.collist[i].a = NULL
        c.collist[i].n = 0
        c.collist[i].cap = 0
    c.colcount = <int*> malloc(ncols * sizeof(int))
    c.scratch_cols = <int*> malloc(2 * ncols * sizeof(int))
    c.scratch_vals = <i64*> malloc(2 * ncols * sizeof(i64))
    c.cand = <int*> malloc(nrows * sizeof(int))
    c.seen = <int*> malloc(nrows * sizeof(int))
    if (c.colcount == NULL or c.scratch_cols == NULL or
            c.scratch_vals == NULL or c.cand == NULL or c.seen == NULL):
        return -1
    for i in range(ncols):
        c.colcount[i] = 0
    for i in range(nrows):
        c.seen[i] = 0
    # count per row, then fill (input sorted by row, col; no duplicates)
    for i in range(nnz):
        c.rows[<int> rr[i]].n += 1
    for r in range(nrows):
        if c.rows[r].n:
            c.rows[r].cap = c.rows[r].n
            c.rows[r].cols = <int*> malloc(c.rows[r].n * sizeof(int))
            c.rows[r].vals = <i64*> malloc(c.rows[r].n * sizeof(i64))
            if c.rows[r].cols == NULL or c.rows[r].vals == NULL:
                return -1
            c.rows[r].n = 0
    for i in range(nnz):
        row = &c.rows[<int> rr[i]]
        row.cols[row.n] = <int> cc[i]
        row.vals[row.n] = vv[i]
        row.n += 1
    for r in range(nrows):
        row = &c.rows[r]
        for i in range(row.n):
            c.colcount[row.cols[i]] += 1
            if ilist_push(&c.collist[row.cols[i]], r) < 0:
                return -1
    for i in range(ncols):
        if push_col(c, i) < 0:
            return -1
    return 0


cdef int pick_pivot_col(Ctx* c) noexcept nogil:
    # lowest-population live column; heap keys are stale until popped
    cdef i64 x
    cdef int col, cnt
    while c.heap.n:
        x = heap_pop(&c.heap)
        col = <int> (x & <i64> 0xffffffff)
        cnt = <int> (x >> 32)
        if c.colcount[col] == 0 or c.colcount[col] != cnt:
            continue
        return col
    return -1


cdef int collect_candidates(Ctx* c, int pc) noexcept nogil:
    # live rows holding column pc; compacts the column's row list and drops
    # duplicate ids (a row re-entering a column is appended a second time)
    cdef int i, r, out = 0, ncand = 0
    c.stamp += 1
    for i in range(c.collist[pc].n):
        r = c.collist[pc].a[i]
        if c.seen[r] == c.stamp:
            continue
        if c.rows[r].dead or row_find(&c.rows[r], pc) < 0:
            continue
        c.seen[r] = c.stamp
        c.collist[pc].a[out] = r
        out += 1
        c.cand[ncand] = r
        ncand += 1
    c.collist[pc].n = out
    return ncand


cdef int replace_row(Ctx* c, int r, int newlen) noexcept nogil:
    # move scratch into row r, maintaining colcount/collist diffs
    cdef Row* row = &c.rows[r]
    cdef int i = 0, j = 0, col
    while i < row.n or j < newlen:
        if j == newlen or (i < row.n and row.cols[i] < c.scratch_cols[j]):
            col = row.cols[i]
            c.colcount[col] -= 1
            if push_col(c, col) < 0:
                return -1
            i += 1
        elif i == row.n or c.scratch_cols[j] < row.cols[i]:
            col = c.scratch_cols[j]
            c.colcount[col] += 1
            if ilist_push(&c.collist[col], r) < 0:
                return -1
            if push_col(c, col) < 0:
                return -1
            j += 1
        else:
            i += 1
            j += 1
    if newlen > row.cap:
        free(row.cols)
        free(row.vals)
        row.cols = <int*> malloc(newlen * sizeof(int))
        row.vals = <i64*> malloc(newlen * sizeof(i64))
        if row.cols == NULL or row.vals == NULL:
            row.cap = 0
            row.n = 0
            return -1
        row.cap = newlen
    for i in range(newlen):
        row.cols[i] = c.scratch_cols[i]
        row.vals[i] = c.scratch_vals[i]
    row.n = newlen
    return 0


cdef int retire_pivot_row(Ctx* c, Row* prow) noexcept nogil:
    cdef int i
    prow.dead = 1
    for i in range(prow.n):
        c.colcount[prow.cols[i]] -= 1
        if push_col(c, prow.cols[i]) < 0:
            return -1
    prow.n = 0
    return 0


cdef int eliminate_exact(Ctx* c) noexcept nogil:
    cdef int rank = 0, pc, i, j, ncand, pr, r, out, pi, ri
    cdef Row* prow
    cdef Row* row
    cdef i64 p, b, g, mp, mb, nv, g2
    cdef int cur_unit, best_unit, better
    while True:
        pc = pick_pivot_col(c)
        if pc < 0:
            if c.fail:
                return -1
            break
        ncand = collect_candidates(c, pc)
        if ncand == 0:
            c.colcount[pc] = 0
            continue
        # pivot row: prefer unit entries, then short rows, then low id
        pr = c.cand[0]
        best_unit = c_abs(c.rows[pr].vals[row_find(&c.rows[pr], pc)]) != 1
        for i in range(1, ncand):
            r = c.cand[i]
            cur_unit = c_abs(c.rows[r].vals[row_find(&c.rows[r], pc)]) != 1
            better = 0
            if cur_unit < best_unit:
                better = 1
            elif cur_unit == best_unit:
                if c.rows[r].n < c.rows[pr].n:
                    better = 1
                elif c.rows[r].n == c.rows[pr].n and r < pr:
                    better = 1
            if better:
                pr = r
                best_unit = cur_unit
        prow = &c.rows[pr]
        p = prow.vals[row_find(prow, pc)]
        for i in range(ncand):
            r = c.cand[i]
            if r == pr:
                continue
            row = &c.rows[r]
            b = row.vals[row_find(row, pc)]
            g = c_gcd(p, b)
            mp = p / g
            mb = b / g
            if mp == -1:
                # scale the combination by -1; rank is unaffected
                mp = 1
                mb = -mb
            pi = 0
            ri = 0
            out = 0
            g2 = 0
            while ri < row.n or pi < prow.n:
                if pi == prow.n or (ri < row.n and row.cols[ri] < prow.cols[pi]):
                    nv = mp * row.vals[ri]
                    c.scratch_cols[out] = row.cols[ri]
                    ri += 1
                elif ri == row.n or prow.cols[pi] < row.cols[ri]:
                    nv = -mb * prow.vals[pi]
                    c.scratch_cols[out] = prow.cols[pi]
                    pi += 1
                else:
                    nv = mp * row.vals[ri] - mb * prow.vals[pi]
                    c.scratch_cols[out] = row.cols[ri]
                    ri += 1
                    pi += 1
                if nv:
                    c.scratch_vals[out] = nv
                    g2 = c_gcd(g2, nv)
                    out += 1
            if mp != 1 and g2 > 1:
                for j in range(out):
                    c.scratch_vals[j] /= g2
            for j in range(out):
                if c_abs(c.scratch_vals[j]) > CAP:
                    c.fail = 1
                    return -1
            if replace_row(c, r, out) < 0:
                c.fail = 2
                return -1
        if retire_pivot_row(c, prow) < 0:
            c.fail = 2
            return -1
        rank += 1
    return rank


cdef i64 inv_mod(i64 a, i64 p) noexcept nogil:
    # extended euclid; a nonzero mod p, p prime
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int eliminate_modp(Ctx* c, i64 p) noexcept nogil:
    cdef int rank = 0, pc, i, ncand, pr, r, out, pi, ri, better
    cdef Row* prow
    cdef Row* row
    cdef i64 piv, f, nv, pinv
    while True:
        pc = pick_pivot_col(c)
        if pc < 0:
            if c.fail:
                return -1
            break
        ncand = collect_candidates(c, pc)
        if ncand == 0:
            c.colcount[pc] = 0
            continue
        pr = c.cand[0]
        for i in range(1, ncand):
            r = c.cand[i]
            better = 0
            if c.rows[r].n < c.rows[pr].n:
                better = 1
            elif c.rows[r].n == c.rows[pr].n and r < pr:
                better = 1
            if better:
                pr = r
        prow = &c.rows[pr]
        piv = prow.vals[row_find(prow, pc)]
        pinv = inv_mod(piv, p)
        for i in range(ncand):
            r = c.cand[i]
            if r == pr:
                continue
            row = &c.rows[r]
            f = row.vals[row_find(row, pc)] * pinv % p
            pi = 0
            ri = 0
            out = 0
            while ri < row.n or pi < prow.n:
                if pi == prow.n or (ri < row.n and row.cols[ri] < prow.cols[pi]):
                    nv = row.vals[ri]
                    c.scratch_cols[out] = row.cols[ri]
                    ri += 1
                elif ri == row.n or prow.cols[pi] < row.cols[ri]:
                    nv = (-f * prow.vals[pi]) % p
                    if nv < 0:
                        nv += p
                    c.scratch_cols[out] = prow.cols[pi]
                    pi += 1
                else:
                    nv = (row.vals[ri] - f * prow.vals[pi]) % p
                    if nv < 0:
                        nv += p
                    c.scratch_cols[out] = row.cols[ri]
                    ri += 1
                    pi += 1
                if nv:
                    c.scratch_vals[out] = nv
                    out += 1
            if replace_row(c, r, out) < 0:
                c.fail = 2
                return -1
        if retire_pivot_row(c, prow) < 0:
            c.fail = 2
            return -1
        rank += 1
    return rank


cdef int modp_prepare(Ctx* c, i64 p) noexcept nogil:
    # reduce stored values into [0, p), dropping zeros in place
    cdef int r, i, out
    cdef Row* row
    cdef i64 v
    for r in range(c.nrows):
        row = &c.rows[r]
        out = 0
        for i in range(row.n):
            v = row.vals[i] % p
            if v < 0:
                v += p
            if v:
                row.cols[out] = row.cols[i]
                row.vals[out] = v
                out += 1
            else:
                c.colcount[row.cols[i]] -= 1
        row.n = out
    # dropped zeros shrank some column counts; refresh their heap keys
    for i in range(c.ncols):
        if push_col(c, i) < 0:
            c.fail = 2
            return -1
    return eliminate_modp(c, p)


def rank_exact_sparse(int nrows, int ncols, rows, cols, vals):
    """Exact rank of int64 triplets sorted by (row, col); -1 asks the caller
    to fall back to arbitrary precision."""
    cdef i64[::1] rr = rows
    cdef i64[::1] cc = cols
    cdef i64[::1] vv = vals
    cdef Ctx c
    cdef int result = -1
    cdef int ok
    if nrows == 0 or ncols == 0 or rr.shape[0] == 0:
        return 0
    with nogil:
        ok = ctx_init(&c, nrows, ncols, rr, cc, vv)
        if ok == 0:
            result = eliminate_exact(&c)
        ctx_free(&c)
    if ok != 0 or (result < 0 and c.fail == 2):
        raise MemoryError("kernel allocation failed")
    return result


def rank_mod_p_sparse(int nrows, int ncols, rows, cols, vals, long long p):
    """Rank over F_p of int64 triplets sorted by (row, col); p < 2**31."""
    cdef i64[::1] rr = rows
    cdef i64[::1] cc = cols
    cdef i64[::1] vv = vals
    cdef Ctx c
    cdef int result = -1
    cdef int ok
    if p < 2 or p > CAP:
        raise ValueError("p out of range for the compiled kernel")
    if nrows == 0 or ncols == 0 or rr.shape[0] == 0:
        return 0
    with nogil:
        ok = ctx_init(&c, nrows, ncols, rr, cc, vv)
        if ok == 0:
            result = modp_prepare(&c, p)
        ctx_free(&c)
    if ok != 0 or (result < 0 and c.fail == 2):
        raise MemoryError("kernel allocation failed")
    return result
