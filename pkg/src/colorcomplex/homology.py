"""Homology dimensions in characteristic zero, plus representative cycles.

h_r = dim C_r - rank M_r - rank M_{r+1} where M_r is the boundary matrix
out of degree r.  With method="exact" the ranks are certified integer
computations; method="modular" replaces them by ranks over a random
word-size prime field, which is fast and almost always equal but only an
upper bound on h_r, so nothing modular is ever reported as certified.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .errors import ParameterError, StructureError
from .intmatrix import SparseIntMatrix, random_word_prime, rank_exact, rank_mod_p
from .jsonutil import canonical_json
from .partitions import check_n


@dataclass(frozen=True)
class DegreeDims:
    r: int
    basis: int
    rank_down: int
    rank_up: int
    h: int

    def to_json_dict(self):
        return {
            "r": self.r,
            "basis": self.basis,
            "rank_down": self.rank_down,
            "rank_up": self.rank_up,
            "h": self.h,
        }


@dataclass(frozen=True)
class HomologyReport:
    descriptor: dict
    degrees: tuple
    euler: int
    method: str
    prime: int | None

    def dims(self):
        return {d.r: d.h for d in self.degrees}

    def to_json_dict(self):
        return {
            "complex": self.descriptor,
            "degrees": [d.to_json_dict() for d in self.degrees],
            "euler": self.euler,
        }

    def to_json_text(self):
        return canonical_json(self.to_json_dict())


def _sign(r):
    return 1 if r % 2 == 0 else -1


def compute_ranks(matrices, rank_fn, jobs=1):
    """Rank every matrix in a {key: matrix} dict, optionally in parallel."""
    if jobs > 1:
        keys = list(matrices)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            vals = list(pool.map(lambda k: rank_fn(matrices[k]), keys))
        return dict(zip(keys, vals))
    return {k: rank_fn(m) for k, m in matrices.items()}


def homology_dims(cx, method="exact", prime=None, jobs=1, rng=None):
    """Full homology report for a built complex across degrees -1..n-2."""
    if method == "exact":
        rank_fn = rank_exact
        used_prime = None
    elif method == "modular":
        used_prime = prime if prime is not None else random_word_prime(rng)
        rank_fn = lambda m: rank_mod_p(m, used_prime)
    else:
        raise ParameterError(f"unknown method {method!r}")
    ranks = compute_ranks(cx.matrices, rank_fn, jobs=jobs)
    degrees = []
    euler = 0
    for r in cx.degrees():
        basis = cx.basis_size(r)
        down = ranks[r]
        up = ranks[r + 1]
        h = basis - down - up
        degrees.append(DegreeDims(r=r, basis=basis, rank_down=down, rank_up=up, h=h))
        euler += _sign(r) * h
    return HomologyReport(
        descriptor=cx.spec.descriptor(),
        degrees=tuple(degrees),
        euler=euler,
        method=method,
        prime=used_prime,
    )


def representative_cycle(n, subset):
    """Explicit cycle of the full cyclic complex attached to a subset of {2..n}.

    The subset joins vertex 1 in the head block; the remaining vertices run
    through all singleton arrangements, signed by permutation parity.
    Returns (r, chain) with r = n - |subset| - 2 and chain a {face: coeff}
    dict on canonical representatives.
    """
    check_n(n)
    a = sorted(set(subset))
    if any(not isinstance(v, int) or v < 2 or v > n for v in a):
        raise ParameterError(f"subset must lie inside 2..{n}, got {subset!r}")
    r = n - len(a) - 2
    if r < -1:
        raise ParameterError(f"subset of size {len(a)} leaves no valid degree")
    head = 1
    for v in a:
        head |= 1 << (v - 1)
    rest = [v for v in range(2, n + 1) if v not in a]
    chain = {}
    for perm in permutations(rest):
        inv = 0
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    inv += 1
        face = (head,) + tuple(1 << (v - 1) for v in perm)
        chain[face] = 1 if inv % 2 == 0 else -1
    return r, chain


def chain_vector(cx, r, chain):
    """Translate a {face: coeff} chain into a {column: coeff} vector."""
    idx = cx.index.get(r, {})
    vec = {}
    for face, coeff in chain.items():
        i = idx.get(face)
        if i is None:
            raise StructureError(
                f"chain face at degree {r} is not in the basis: {face!r}"
            )
        vec[i] = vec.get(i, 0) + coeff
    return {i: v for i, v in vec.items() if v}


def is_cycle(cx, r, chain):
    """Whether the boundary of the chain vanishes."""
    vec = chain_vector(cx, r, chain)
    return cx.boundary_matrix(r).apply(vec) == {}


def independent_mod_boundaries(cx, r, chains):
    """Whether the chains are jointly independent modulo boundaries from above.

    Checked by rank augmentation: appending the chain vectors as extra
    columns to M_{r+1} must raise its rank by exactly len(chains).
    """
    m = cx.boundary_matrix(r + 1)
    base_rank = rank_exact(m)
    trips = m.triplets()
    extra = []
    for j, chain in enumerate(chains):
        vec = chain_vector(cx, r, chain)
        for i, v in vec.items():
            extra.append((i, m.ncols + j, v))
    aug = SparseIntMatrix.from_triplets(m.nrows, m.ncols + len(chains), trips + extra)
    return rank_exact(aug) == base_rank + len(chains)
