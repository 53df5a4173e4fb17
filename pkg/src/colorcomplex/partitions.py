"""Ordered set partitions of {1..n} and their cyclic equivalence classes.

A block is stored as a bitmask int: vertex v corresponds to bit v-1.  An
ordered partition is a tuple of disjoint nonzero bitmasks whose union is the
full mask (1 << n) - 1.  Bitmask storage caps n at MAX_N.

Cyclic classes identify an ordered partition with its left rotation up to a
sign: rotating (B_1, ..., B_m) to (B_2, ..., B_m, B_1) multiplies by
(-1)**(m-1).  The canonical representative of a class is the rotation whose
first block contains vertex 1.
"""

from functools import lru_cache
from itertools import permutations

from .errors import ParameterError, ResourceError, StructureError

MAX_N = 16


def check_n(n):
    """Validate a ground-set size for bitmask work."""
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")
    if n > MAX_N:
        raise ResourceError(f"n={n} exceeds the bitmask ceiling of {MAX_N}")


@lru_cache(maxsize=None)
def stirling2(n, m):
    """Number of partitions of an n-set into m unlabeled nonempty blocks."""
    if n < 0 or m < 0:
        raise ParameterError("stirling2 needs nonnegative arguments")
    if n == 0 and m == 0:
        return 1
    if n == 0 or m == 0 or m > n:
        return 0
    return m * stirling2(n - 1, m) + stirling2(n - 1, m - 1)


def enumerate_set_partitions(n, m):
    """Yield partitions of {1..n} into m blocks, blocks ordered by minimum.

    Order is deterministic: vertex v is assigned to the lowest-numbered
    existing block first, with "open a new block" tried last.  Because vertex
    1 opens the first block, blocks[0] always contains vertex 1.
    """
    check_n(n)
    if m < 1 or m > n:
        return

    blocks = []

    def rec(v):
        if v > n:
            if len(blocks) == m:
                yield tuple(blocks)
            return
        # prune: remaining vertices cannot open enough new blocks
        if len(blocks) + (n - v + 1) < m:
            return
        bit = 1 << (v - 1)
        for i in range(len(blocks)):
            blocks[i] |= bit
            yield from rec(v + 1)
            blocks[i] &= ~bit
        if len(blocks) < m:
            blocks.append(bit)
            yield from rec(v + 1)
            blocks.pop()

    yield from rec(1)


def enumerate_ordered_partitions(n, m):
    """Yield ordered partitions of {1..n} into m blocks, m! per unordered one."""
    for base in enumerate_set_partitions(n, m):
        yield from permutations(base)


def enumerate_cyclic_classes(n, m):
    """Yield canonical representatives of cyclic classes, (m-1)! per partition.

    The first block is pinned to the one containing vertex 1; the remaining
    blocks run through all arrangements.
    """
    for base in enumerate_set_partitions(n, m):
        head = base[0]
        for rest in permutations(base[1:]):
            yield (head,) + rest


def rotation_sign(m):
    """Sign picked up by one left rotation of an m-block ordered partition."""
    return 1 if m % 2 == 1 else -1


def rotate_left(blocks):
    return blocks[1:] + (blocks[0],)


def canonicalize(blocks):
    """Return (representative, sign) for the cyclic class of an ordered partition.

    The representative is the rotation whose first block contains vertex 1;
    sign satisfies [blocks] = sign * [representative] in the sign-twisted
    quotient.
    """
    m = len(blocks)
    for j, b in enumerate(blocks):
        if b & 1:
            break
    else:
        raise StructureError("no block contains vertex 1")
    if j == 0:
        return blocks, 1
    rep = blocks[j:] + blocks[:j]
    sign = rotation_sign(m) ** j
    return rep, sign


def orbit(blocks):
    """All rotations of an ordered partition paired with their signs.

    Entry (rot, s) satisfies [blocks] = s * [rot]; the orbit always has
    exactly m distinct rotations because blocks are pairwise distinct.
    """
    m = len(blocks)
    out = []
    cur = blocks
    sign = 1
    for _ in range(m):
        out.append((cur, sign))
        cur = rotate_left(cur)
        sign *= rotation_sign(m)
    return out


def is_partition_of(blocks, n):
    """True when blocks are disjoint, nonempty, and cover {1..n} exactly."""
    full = (1 << n) - 1
    seen = 0
    for b in blocks:
        if b == 0 or b & ~full or b & seen:
            return False
        seen |= b
    return seen == full


def format_partition(blocks):
    """Render blocks as '1,3|2|4' with vertices ascending inside each block."""
    parts = []
    for b in blocks:
        vs = []
        v = 1
        while b:
            if b & 1:
                vs.append(str(v))
            b >>= 1
            v += 1
        parts.append(",".join(vs))
    return "|".join(parts)


def parse_partition(text, n):
    """Inverse of format_partition; validates a full partition of {1..n}."""
    check_n(n)
    blocks = []
    for chunk in text.split("|"):
        mask = 0
        for tok in chunk.split(","):
            tok = tok.strip()
            if not tok.isdigit():
                raise StructureError(f"bad vertex token {tok!r}")
            v = int(tok)
            if not 1 <= v <= n:
                raise StructureError(f"vertex {v} outside 1..{n}")
            bit = 1 << (v - 1)
            if mask & bit:
                raise StructureError(f"vertex {v} repeated inside a block")
            mask |= bit
        blocks.append(mask)
    blocks = tuple(blocks)
    if not is_partition_of(blocks, n):
        raise StructureError(f"{text!r} is not a partition of 1..{n}")
    return blocks


def blocks_from_sets(sets):
    """Convert an iterable of vertex iterables to a bitmask tuple."""
    out = []
    for s in sets:
        mask = 0
        for v in s:
            mask |= 1 << (v - 1)
        out.append(mask)
    return tuple(out)


def sets_from_blocks(blocks):
    """Convert a bitmask tuple to a tuple of sorted vertex tuples."""
    out = []
    for b in blocks:
        vs = []
        v = 1
        while b:
            if b & 1:
                vs.append(v)
            b >>= 1
            v += 1
        out.append(tuple(vs))
    return tuple(out)
