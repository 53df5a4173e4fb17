"""Chromatic polynomials of hypergraphs, exactly.

A proper coloring gives every edge at least two colors.  The defining
computation is inclusion-exclusion over edge subsets forced monochromatic:
chi_H(lambda) = sum over S of (-1)^|S| lambda^{c(S)} with c(S) counting
components after merging each edge of S.  Two further exact routes exist for
hypergraphs with too many edges for 2^|E| enumeration: summing falling
factorials over no-monochromatic-edge set partitions, and interpolating
brute-force counts.  All three agree and are cross-checked in the tests.
"""

from fractions import Fraction
from itertools import product

from .errors import DefinitionError, ParameterError, ResourceError
from .partitions import enumerate_set_partitions

_IE_EDGE_LIMIT = 20
_BRUTE_OP_LIMIT = 10**8


class IntPolynomial:
    """Dense integer polynomial, coefficients ascending from the constant."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def zero(cls):
        return cls([0])

    @classmethod
    def x_power(cls, k):
        return cls([0] * k + [1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return self.coeffs == (0,)

    def coeff(self, m):
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else 0

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + IntPolynomial([-c for c in other.coeffs])

    def __mul__(self, other):
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def to_json_dict(self):
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json_dict(cls, d):
        return cls(d["coeffs"])


def evaluate(p, x):
    return p.evaluate(x)


def scaled_derivative_at_zero(p, m):
    """|p^(m)(0)| / m!, i.e. the absolute coefficient of the degree-m term."""
    if not 0 <= m <= p.degree:
        raise ParameterError(f"m={m} outside 0..{p.degree}")
    return abs(p.coeff(m))


def _check_chromatic_input(h):
    if h.has_loop():
        raise DefinitionError(
            "a size-1 edge is monochromatic under every coloring; "
            "the chromatic polynomial is not defined"
        )


def _find(par, x):
    root = x
    while par[root] != root:
        root = par[root]
    while par[x] != root:
        par[x], x = root, par[x]
    return root


def _ie_poly(h):
    n = h.n
    edges = h.edges
    counts = [0] * (n + 1)

    def rec(i, par, comps, sign):
        if i == len(edges):
            counts[comps] += sign
            return
        rec(i + 1, par, comps, sign)
        par2 = list(par)
        c2 = comps
        vs = edges[i]
        r0 = _find(par2, vs[0])
        for w in vs[1:]:
            rw = _find(par2, w)
            if rw != r0:
                par2[rw] = r0
                c2 -= 1
        rec(i + 1, par2, c2, -sign)

    rec(0, list(range(n + 1)), n, 1)
    return IntPolynomial(counts)


def _falling_factorial(m):
    p = IntPolynomial([1])
    for i in range(m):
        p = p * IntPolynomial([-i, 1])
    return p


def _partitions_poly(h):
    # chi(lambda) = sum_m D_m * lambda(lambda-1)...(lambda-m+1), where D_m
    # counts partitions into m blocks with no block containing an edge
    n = h.n
    masks = h.edge_masks
    acc = IntPolynomial.zero()
    for m in range(1, n + 1):
        d = 0
        for part in enumerate_set_partitions(n, m):
            if not any(any(e & ~b == 0 for e in masks) for b in part):
                d += 1
        if d:
            acc = acc + IntPolynomial([d]) * _falling_factorial(m)
    return acc


def chromatic_brute(h, lam):
    """Count proper colorings with lam colors by exhaustive enumeration."""
    _check_chromatic_input(h)
    if not isinstance(lam, int) or lam < 0:
        raise ParameterError(f"lam must be a nonnegative integer, got {lam!r}")
    if lam**h.n > _BRUTE_OP_LIMIT:
        raise ResourceError(f"{lam}^{h.n} colorings exceed the brute-force bound")
    edges = h.edges
    count = 0
    for coloring in product(range(lam), repeat=h.n):
        ok = True
        for e in edges:
            c0 = coloring[e[0] - 1]
            if all(coloring[v - 1] == c0 for v in e[1:]):
                ok = False
                break
        if ok:
            count += 1
    return count


def _interpolation_poly(h):
    n = h.n
    if (n + 1) ** n * max(1, len(h.edges)) > _BRUTE_OP_LIMIT:
        raise ResourceError("interpolation would exceed the brute-force bound")
    ys = [chromatic_brute(h, lam) for lam in range(n + 1)]
    coeffs = [Fraction(0)] * (n + 1)
    for i, y in enumerate(ys):
        if y == 0:
            continue
        # Lagrange basis polynomial through the nodes 0..n
        basis = [Fraction(1)]
        denom = 1
        for j in range(n + 1):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                new[t] -= c * j
                new[t + 1] += c
            basis = new
            denom *= i - j
        for t, c in enumerate(basis):
            coeffs[t] += Fraction(y) * c / denom
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ResourceError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    return IntPolynomial(out)


def chromatic_hypergraph(h, method="auto"):
    """Chromatic polynomial of a hypergraph with all edges of size >= 2."""
    _check_chromatic_input(h)
    if method == "auto":
        if len(h.edges) <= _IE_EDGE_LIMIT:
            method = "inclusion-exclusion"
        elif h.n <= 12:
            method = "partitions"
        else:
            method = "interpolation"
    if method == "inclusion-exclusion":
        if len(h.edges) > _IE_EDGE_LIMIT + 4:
            raise ResourceError(
                f"{len(h.edges)} edges is too many for subset enumeration"
            )
        return _ie_poly(h)
    if method == "partitions":
        return _partitions_poly(h)
    if method == "interpolation":
        return _interpolation_poly(h)
    raise ParameterError(f"unknown method {method!r}")


def chromatic_deletion_contraction(h):
    """Independent chromatic computation for 2-uniform hypergraphs."""
    if any(len(e) != 2 for e in h.edges):
        raise ParameterError("deletion-contraction needs a 2-uniform hypergraph")
    memo = {}

    def rec(n, edges):
        if not edges:
            return IntPolynomial.x_power(n)
        key = (n, edges)
        got = memo.get(key)
        if got is not None:
            return got
        u, v = edges[0]
        deleted = edges[1:]
        # contract v into u, relabel to keep vertices consecutive
        relabel = {}
        nxt = 1
        for w in range(1, n + 1):
            if w == v:
                continue
            relabel[w] = nxt
            nxt += 1
        relabel[v] = relabel[u]
        contracted = set()
        for a, b in deleted:
            na, nb = relabel[a], relabel[b]
            if na != nb:
                contracted.add((min(na, nb), max(na, nb)))
        result = rec(n, deleted) - rec(n - 1, tuple(sorted(contracted)))
        memo[key] = result
        return result

    return rec(h.n, h.edges)
