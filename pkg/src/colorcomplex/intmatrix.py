"""Sparse integer matrices with exact and modular rank.

rank_exact is the certified path: all arithmetic is integer-exact, so the
result is the true rank over the rationals.  rank_mod_p computes the rank
over F_p, which can only undercount (a prime can divide a pivot), so modular
results are probabilistic accelerators, never certificates; rank_certified
runs both and reports whether the modular probe agreed.

Two backends provide the kernels: a compiled extension (built from
_speedups.pyx) and the pure-Python fallback in _pureelim.  Selection happens
at import: the compiled module is used when present unless the
COLORCOMPLEX_PURE environment variable is set; set_backend overrides at
runtime.  The compiled exact kernel works in 64-bit integers and bails out
to the pure kernel in the rare case entries outgrow its headroom.
"""

import os
import random

from . import _pureelim
from .errors import ParameterError, ResourceError, StructureError

try:
    from . import _speedups as _compiled
except ImportError:
    _compiled = None

_FORCED = None  # None = auto


def available_backends():
    out = ["pure"]
    if _compiled is not None:
        out.insert(0, "compiled")
    return out


def get_backend():
    if _FORCED is not None:
        return _FORCED
    if os.environ.get("COLORCOMPLEX_PURE"):
        return "pure"
    return "compiled" if _compiled is not None else "pure"


def set_backend(name):
    """Force 'compiled' or 'pure'; None restores automatic selection."""
    global _FORCED
    if name is None:
        _FORCED = None
        return
    if name not in ("compiled", "pure"):
        raise ParameterError(f"unknown backend {name!r}")
    if name == "compiled" and _compiled is None:
        raise ParameterError("compiled backend is not available")
    _FORCED = name


class SparseIntMatrix:
    """Immutable sparse matrix over the integers, 0-based indices internally.

    The text form is 1-based: a header line 'rows cols nnz' followed by one
    'row col value' line per entry in lexicographic order.
    """

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries):
        if nrows < 0 or ncols < 0:
            raise ParameterError("negative matrix dimension")
        clean = {}
        for (r, c), v in entries.items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise StructureError(f"entry ({r},{c}) outside {nrows}x{ncols}")
            if not isinstance(v, int):
                raise StructureError(f"non-integer entry {v!r}")
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparseIntMatrix is immutable")

    @classmethod
    def from_triplets(cls, nrows, ncols, triplets):
        """Build from (row, col, value) items; equal positions accumulate."""
        acc = {}
        for r, c, v in triplets:
            acc[(r, c)] = acc.get((r, c), 0) + v
        return cls(nrows, ncols, acc)

    @property
    def nnz(self):
        return len(self.entries)

    def triplets(self):
        return sorted((r, c, v) for (r, c), v in self.entries.items())

    def transpose(self):
        return SparseIntMatrix(
            self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ParameterError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                acc[key] = acc.get(key, 0) + v * w
        return SparseIntMatrix(self.nrows, other.ncols, acc)

    def apply(self, vec):
        """Multiply by a sparse column vector given as {col: value}."""
        out = {}
        for (r, c), v in self.entries.items():
            w = vec.get(c)
            if w:
                out[r] = out.get(r, 0) + v * w
        return {r: v for r, v in out.items() if v}

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SparseIntMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"SparseIntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"

    def to_text(self):
        lines = [f"{self.nrows} {self.ncols} {self.nnz}"]
        for r, c, v in self.triplets():
            lines.append(f"{r + 1} {c + 1} {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise StructureError("empty matrix text")
        try:
            nrows, ncols, nnz = map(int, lines[0].split())
        except ValueError:
            raise StructureError(f"bad header {lines[0]!r}")
        if len(lines) - 1 != nnz:
            raise StructureError(f"header claims {nnz} entries, found {len(lines) - 1}")
        entries = {}
        for ln in lines[1:]:
            try:
                r, c, v = map(int, ln.split())
            except ValueError:
                raise StructureError(f"bad entry line {ln!r}")
            if (r - 1, c - 1) in entries:
                raise StructureError(f"duplicate entry at ({r},{c})")
            entries[(r - 1, c - 1)] = v
        return cls(nrows, ncols, entries)


_COMPILED_MAX = 2**31 - 1


def _compiled_arrays(m):
    import numpy as np

    trips = m.triplets()
    rows = np.fromiter((t[0] for t in trips), dtype=np.int64, count=len(trips))
    cols = np.fromiter((t[1] for t in trips), dtype=np.int64, count=len(trips))
    vals = np.fromiter((t[2] for t in trips), dtype=np.int64, count=len(trips))
    return rows, cols, vals


def rank_exact(m, backend=None):
    """True rank over the rationals; always certified."""
    backend = backend or get_backend()
    if m.nrows == 0 or m.ncols == 0 or not m.entries:
        return 0
    if backend == "compiled" and _compiled is not None:
        if all(abs(v) <= _COMPILED_MAX for v in m.entries.values()):
            rows, cols, vals = _compiled_arrays(m)
            rank = _compiled.rank_exact_sparse(m.nrows, m.ncols, rows, cols, vals)
            if rank >= 0:
                return rank
        # entry growth exceeded the compiled headroom: escalate to exact bigints
    if (
        m.nrows < 256
        and m.ncols < 256
        and m.nnz >= 0.15 * m.nrows * m.ncols
    ):
        return _pureelim.rank_dense_exact(m.nrows, m.ncols, m.triplets())
    return _pureelim.rank_sparse_exact(m.nrows, m.ncols, m.triplets())


def rank_mod_p(m, p, backend=None):
    """Rank over F_p; a lower bound for the exact rank, usually equal."""
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    backend = backend or get_backend()
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if backend == "compiled" and _compiled is not None and p <= _COMPILED_MAX:
        rows, cols, vals = _compiled_arrays(m)
        rank = _compiled.rank_mod_p_sparse(m.nrows, m.ncols, rows, cols, vals, p)
        if rank >= 0:
            return rank
    return _pureelim.rank_sparse_mod_p(m.nrows, m.ncols, m.triplets(), p)


def rank_certified(m, prime=None, rng=None):
    """Run the modular probe, then the exact kernel.

    Returns (rank, modular_agreed, prime).  When the prime divides a pivot
    the modular probe undercounts; the exact pass catches that, which is the
    escalation path ([[2]] at p = 2 shows it off).
    """
    if prime is None:
        prime = random_word_prime(rng)
    probe = rank_mod_p(m, prime)
    exact = rank_exact(m)
    return exact, probe == exact, prime


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid for every 64-bit integer."""
    if not isinstance(n, int) or n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if any(n % p == 0 for p in small):
        return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_word_prime(rng=None, bits=30):
    """Random prime that fits comfortably in a machine word."""
    if bits < 3 or bits > 62:
        raise ParameterError("bits must be between 3 and 62")
    rng = rng or random.Random()
    for _ in range(10000):
        cand = rng.randrange(1 << (bits - 1), 1 << bits) | 1
        if is_prime(cand):
            return cand
    raise ResourceError("failed to find a prime; broken RNG?")
