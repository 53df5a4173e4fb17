"""Graded bases and boundary matrices for partition complexes of hypergraphs.

Five kinds are supported, all graded by degree r = (#blocks) - 2 over
r = -1 .. n-2:

- "lambda": ordered partitions in which some block contains an edge; the
  boundary merges adjacent blocks with alternating signs starting negative.
- "delta": cyclic classes with the same some-block-contains-an-edge
  predicate; the boundary gains a wraparound merge of the last block into
  the first.
- "delta-complement": cyclic classes in which no block contains an edge;
  boundary terms that violate the predicate are dropped (quotient behavior).
- "full-cyclic": every cyclic class, no predicate.
- "restricted": cyclic classes where no block contains any forbidden vertex
  set and, optionally, some block contains a required vertex set; terms that
  grow a forbidden set are dropped.

Cyclic classes are stored by their canonical representative (vertex 1 in the
first block); every boundary term is re-canonicalized and its sign folded in.
"""

from dataclasses import dataclass, field

from .errors import ParameterError, StructureError
from .hypergraphs import Hypergraph
from .intmatrix import SparseIntMatrix
from .jsonutil import canonical_json
from .partitions import (
    blocks_from_sets,
    canonicalize,
    check_n,
    enumerate_cyclic_classes,
    enumerate_ordered_partitions,
    format_partition,
    sets_from_blocks,
)

KINDS = ("lambda", "delta", "delta-complement", "full-cyclic", "restricted")
CYCLIC_KINDS = ("delta", "delta-complement", "full-cyclic", "restricted")


@dataclass(frozen=True)
class ComplexSpec:
    kind: str
    n: int
    hypergraph: Hypergraph | None = None
    forbidden: tuple = field(default_factory=tuple)  # bitmasks
    required: int = 0  # bitmask, 0 = none

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown complex kind {self.kind!r}")
        if self.kind in ("lambda", "delta", "delta-complement"):
            if self.hypergraph is None:
                raise ParameterError(f"kind {self.kind!r} needs a hypergraph")
            if self.hypergraph.n != self.n:
                raise ParameterError("hypergraph vertex count disagrees with n")
        else:
            if self.hypergraph is not None:
                raise ParameterError(f"kind {self.kind!r} takes no hypergraph")
        full = (1 << self.n) - 1
        for f in self.forbidden:
            if f == 0 or f & ~full:
                raise StructureError("forbidden set outside 1..n")
        if self.required and (self.required & ~full):
            raise StructureError("required set outside 1..n")
        if self.required and self.required in self.forbidden:
            raise StructureError("required set is also forbidden")
        if self.kind != "restricted" and (self.forbidden or self.required):
            raise ParameterError("forbidden/required only apply to 'restricted'")

    @classmethod
    def lambda_(cls, h):
        return cls("lambda", h.n, hypergraph=h)

    @classmethod
    def delta(cls, h):
        return cls("delta", h.n, hypergraph=h)

    @classmethod
    def delta_complement(cls, h):
        return cls("delta-complement", h.n, hypergraph=h)

    @classmethod
    def full_cyclic(cls, n):
        return cls("full-cyclic", n)

    @classmethod
    def restricted(cls, n, forbidden, required=None):
        fmasks = tuple(sorted(blocks_from_sets(forbidden)))
        rmask = blocks_from_sets([required])[0] if required else 0
        return cls("restricted", n, forbidden=fmasks, required=rmask)

    def descriptor(self):
        d = {"kind": self.kind, "n": self.n}
        if self.hypergraph is not None:
            d["hypergraph"] = self.hypergraph.to_json_dict()
        if self.kind == "restricted":
            d["forbidden"] = [list(s) for s in sets_from_blocks(self.forbidden)]
            d["required"] = (
                list(sets_from_blocks((self.required,))[0]) if self.required else None
            )
        return d

    def describe(self):
        bits = [self.kind, f"n={self.n}"]
        if self.hypergraph is not None:
            bits.append(f"{len(self.hypergraph.edges)} edges")
        if self.kind == "restricted":
            bits.append(
                "forbidden="
                + ";".join(
                    ",".join(map(str, s)) for s in sets_from_blocks(self.forbidden)
                )
            )
            if self.required:
                s = sets_from_blocks((self.required,))[0]
                bits.append("required=" + ",".join(map(str, s)))
        return " ".join(bits)


def face_passes(spec, blocks):
    """Whether an ordered partition is a face of the complex."""
    if spec.kind == "full-cyclic":
        return True
    if spec.kind == "restricted":
        for b in blocks:
            for f in spec.forbidden:
                if f & ~b == 0:
                    return False
        if spec.required:
            return any(spec.required & ~b == 0 for b in blocks)
        return True
    masks = spec.hypergraph.edge_masks
    hit = any(any(e & ~b == 0 for e in masks) for b in blocks)
    if spec.kind == "delta-complement":
        return not hit
    return hit  # lambda, delta


def _boundary_terms(kind, blocks):
    """Yield (partition, sign) terms of the boundary of one face."""
    m = len(blocks)
    if m < 2:
        return
    cyclic = kind in CYCLIC_KINDS
    for i in range(m - 1):
        merged = blocks[:i] + (blocks[i] | blocks[i + 1],) + blocks[i + 2 :]
        if cyclic:
            sign = 1 if i % 2 == 0 else -1
        else:
            sign = -1 if i % 2 == 0 else 1
        yield merged, sign
    if cyclic:
        merged = (blocks[0] | blocks[m - 1],) + blocks[1 : m - 1]
        yield merged, 1 if (m + 1) % 2 == 0 else -1


class ChainComplex:
    """Bases and boundary matrices of one complex, every degree materialized.

    boundary_matrix(r) maps degree r to degree r-1; it exists for
    r = -1 .. n-1, with the extremes having zero rows or columns so homology
    at the boundary degrees needs no special cases.
    """

    def __init__(self, spec, bases, matrices):
        self.spec = spec
        self.n = spec.n
        self.bases = bases
        self.index = {
            r: {f: i for i, f in enumerate(faces)} for r, faces in bases.items()
        }
        self.matrices = matrices

    def degrees(self):
        return range(-1, self.n - 1)

    def basis(self, r):
        return self.bases.get(r, [])

    def basis_size(self, r):
        return len(self.bases.get(r, ()))

    def boundary_matrix(self, r):
        m = self.matrices.get(r)
        if m is None:
            raise ParameterError(f"no boundary matrix at degree {r}")
        return m

    def verify_boundary_squared(self):
        """True when consecutive boundary maps compose to zero."""
        for r in range(0, self.n):
            prod = self.matrices[r - 1].matmul(self.matrices[r])
            if not prod.is_zero():
                return False
        return True

    def dump(self):
        """Golden-file text: per degree the basis, then the boundary triplets."""
        lines = [f"complex {canonical_json(self.spec.descriptor())}"]
        for r in self.degrees():
            faces = self.basis(r)
            lines.append(f"degree {r}")
            lines.append(f"basis {len(faces)}")
            for f in faces:
                lines.append(format_partition(f))
            m = self.matrices[r]
            lines.append(f"boundary {m.nrows} {m.ncols} {m.nnz}")
            for a, b, v in m.triplets():
                lines.append(f"{a + 1} {b + 1} {v}")
        return "\n".join(lines) + "\n"


def build_complex(spec):
    """Enumerate the bases and assemble all boundary matrices for a spec."""
    n = spec.n
    check_n(n)
    cyclic = spec.kind in CYCLIC_KINDS
    bases = {}
    for m in range(1, n + 1):
        r = m - 2
        if cyclic:
            gen = enumerate_cyclic_classes(n, m)
        else:
            gen = enumerate_ordered_partitions(n, m)
        bases[r] = [p for p in gen if face_passes(spec, p)]
    index = {r: {f: i for i, f in enumerate(faces)} for r, faces in bases.items()}
    matrices = {}
    for r in range(-1, n):
        rows = bases.get(r - 1, [])
        cols = bases.get(r, [])
        acc = {}
        for j, face in enumerate(cols):
            for term, sign in _boundary_terms(spec.kind, face):
                if cyclic:
                    term, extra = canonicalize(term)
                    sign *= extra
                i = index.get(r - 1, {}).get(term)
                if i is None:
                    if face_passes(spec, term):
                        raise StructureError(
                            "boundary term passes the face predicate "
                            "but is missing from the basis"
                        )
                    continue  # dropped by the quotient
                key = (i, j)
                acc[key] = acc.get(key, 0) + sign
        matrices[r] = SparseIntMatrix(len(rows), len(cols), acc)
    return ChainComplex(spec, bases, matrices)
