"""Pure-Python elimination kernels for exact and modular sparse rank.

The exact kernel eliminates with integer-preserving row combinations:
for pivot value p and target value b it replaces the target row by
(p/g)*row - (b/g)*pivot_row with g = gcd(p, b), so no fractions appear and
no exact-division precondition is needed.  Rows are plain dicts col -> value;
a lazy heap keyed by live column population picks the pivot column with the
fewest candidate rows, which keeps fill-in low on boundary matrices.

A classical fraction-free elimination on a dense array is provided for
small dense matrices; it serves as an independent algorithm for the same
quantity and is cross-checked against the sparse kernel in the tests.
"""

import heapq
from math import gcd


def rank_sparse_exact(nrows, ncols, triplets):
    """Rank over the rationals of an integer matrix given as (row, col, value)."""
    rows = [{} for _ in range(nrows)]
    for r, c, v in triplets:
        if v:
            rows[r][c] = rows[r].get(c, 0) + v
            if rows[r][c] == 0:
                del rows[r][c]
    colrows = {}
    for r, row in enumerate(rows):
        for c in row:
            colrows.setdefault(c, set()).add(r)
    heap = [(len(rs), c) for c, rs in colrows.items()]
    heapq.heapify(heap)

    def touch(c):
        rs = colrows.get(c)
        if rs:
            heapq.heappush(heap, (len(rs), c))

    rank = 0
    while heap:
        cnt, pc = heapq.heappop(heap)
        cand = colrows.get(pc)
        if not cand or len(cand) != cnt:
            continue  # stale heap entry
        pr = min(cand, key=lambda r: (abs(rows[r][pc]) != 1, len(rows[r]), r))
        prow = rows[pr]
        p = prow[pc]
        for r in [r for r in cand if r != pr]:
            row = rows[r]
            b = row[pc]
            g = gcd(p, b)
            mp = p // g
            mb = b // g
            if mp == -1:
                # scale the combination by -1; rank is unaffected
                mp = 1
                mb = -mb
            if mp == 1:
                for c2, pv in prow.items():
                    nv = row.get(c2, 0) - mb * pv
                    if nv:
                        if c2 not in row:
                            colrows.setdefault(c2, set()).add(r)
                            touch(c2)
                        row[c2] = nv
                    elif c2 in row:
                        del row[c2]
                        colrows[c2].discard(r)
                        touch(c2)
            else:
                newrow = {c2: mp * v for c2, v in row.items()}
                for c2, pv in prow.items():
                    nv = newrow.get(c2, 0) - mb * pv
                    if nv:
                        newrow[c2] = nv
                    else:
                        newrow.pop(c2, None)
                g2 = 0
                for v in newrow.values():
                    g2 = gcd(g2, v)
                    if g2 == 1:
                        break
                if g2 > 1:
                    for c2 in newrow:
                        newrow[c2] //= g2
                for c2 in row.keys() - newrow.keys():
                    colrows[c2].discard(r)
                    touch(c2)
                for c2 in newrow.keys() - row.keys():
                    colrows.setdefault(c2, set()).add(r)
                    touch(c2)
                rows[r] = newrow
        for c2 in prow:
            colrows[c2].discard(pr)
            touch(c2)
        rows[pr] = {}
        rank += 1
    return rank


def rank_sparse_mod_p(nrows, ncols, triplets, p):
    """Rank over the field with p elements; p must be prime."""
    rows = [{} for _ in range(nrows)]
    for r, c, v in triplets:
        v %= p
        if v:
            rows[r][c] = (rows[r].get(c, 0) + v) % p
            if rows[r][c] == 0:
                del rows[r][c]
    colrows = {}
    for r, row in enumerate(rows):
        for c in row:
            colrows.setdefault(c, set()).add(r)
    heap = [(len(rs), c) for c, rs in colrows.items()]
    heapq.heapify(heap)

    def touch(c):
        rs = colrows.get(c)
        if rs:
            heapq.heappush(heap, (len(rs), c))

    rank = 0
    while heap:
        cnt, pc = heapq.heappop(heap)
        cand = colrows.get(pc)
        if not cand or len(cand) != cnt:
            continue
        pr = min(cand, key=lambda r: (len(rows[r]), r))
        prow = rows[pr]
        pinv = pow(prow[pc], -1, p)
        for r in [r for r in cand if r != pr]:
            row = rows[r]
            f = row[pc] * pinv % p
            for c2, pv in prow.items():
                nv = (row.get(c2, 0) - f * pv) % p
                if nv:
                    if c2 not in row:
                        colrows.setdefault(c2, set()).add(r)
                        touch(c2)
                    row[c2] = nv
                elif c2 in row:
                    del row[c2]
                    colrows[c2].discard(r)
                    touch(c2)
        for c2 in prow:
            colrows[c2].discard(pr)
            touch(c2)
        rows[pr] = {}
        rank += 1
    return rank


def rank_dense_exact(nrows, ncols, triplets):
    """Fraction-free elimination on a dense list-of-lists; exact divisions only.

    Pivots take the lowest available row, then the lowest column, so the
    elimination order is reproducible.
    """
    m = [[0] * ncols for _ in range(nrows)]
    for r, c, v in triplets:
        m[r][c] += v
    rank = 0
    prev = 1
    for c in range(ncols):
        pr = None
        for r in range(rank, nrows):
            if m[r][c]:
                pr = r
                break
        if pr is None:
            continue
        if pr != rank:
            m[pr], m[rank] = m[rank], m[pr]
        piv = m[rank][c]
        top = m[rank]
        for r in range(rank + 1, nrows):
            mr = m[r]
            f = mr[c]
            # rows with f == 0 still rescale by piv/prev; the division stays exact
            for j in range(c + 1, ncols):
                mr[j] = (mr[j] * piv - f * top[j]) // prev
            mr[c] = 0
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank
