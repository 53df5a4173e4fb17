"""Closed-form dimension checks against directly computed homology.

Each registry entry pairs a parameterized family of complexes with the
closed-form dimensions claimed for it, identified by a short id usable from
the command line (3.1, 3.2, 3.4, 3.5, 3.6, 4.1, 4.2, 5.1, 5.2, 5.3,
jonsson).  A check builds the complex, computes exact homology, and compares
degree by degree on the claimed range.

Verdicts: "pass"/"fail" for gated comparisons, "out-of-hypothesis" when the
parameters violate the claim's stated hypothesis (computed dims are still
reported), "info" for report-only checks (4.2, whose formula is compared
under both readings of an ambiguous product), and "error" when the build
exceeded a resource bound.  Identical configurations produce byte-identical
JSON reports.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

from .chromatic import (
    chromatic_deletion_contraction,
    chromatic_hypergraph,
    evaluate,
    scaled_derivative_at_zero,
)
from .complexes import ComplexSpec, build_complex
from .errors import ColorComplexError, ParameterError
from .homology import homology_dims
from .hypergraphs import (
    complete_graph,
    complete_uniform,
    contract_core,
    diagonal,
    star,
    vertex_star,
)
from .jsonutil import canonical_json


def binom(a, b):
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def expected_dims_vertex_star(n, k):
    """Block complex of all k-edges through vertex 1: binomial dims, then zero."""
    out = {r: binom(n - 1, r + 1) for r in range(-1, n - k)}
    for r in range(n - k, n - 1):
        out[r] = 0
    return out


def expected_dims_complete_complement(n, k):
    """Complement complex of the complete k-uniform family, upper degrees."""
    out = {}
    for r in range(n - k + 1, n - 1):
        out[r] = binom(n - 1, r + 1)
    out[n - k] = binom(n - 1, n - k - 1) + binom(n - 1, n - k + 1)
    return out


def expected_dims_complete_top(n, k):
    """Block complex of the complete k-uniform family at its top nonzero degree."""
    return {n - k - 1: binom(n, n - k)}


def expected_dims_complete_near_top(n):
    """(n-1)-uniform complete family: dims at degrees 0 and -1."""
    return {0: n, -1: 1}


def expected_dims_complete_two_below(n):
    """(n-2)-uniform complete family: dims at degrees -1..1."""
    return {r: binom(n, r + 1) for r in (-1, 0, 1)}


def expected_dims_full_star(n, k):
    """Star family covering all vertices: binomial dims, then zero."""
    out = {r: binom(n - k + 1, r + 1) for r in range(-1, n - k)}
    for r in range(n - k, n - 1):
        out[r] = 0
    return out


def expected_dims_diagonal_complement(n, k):
    """Complement complex of the diagonal family; degree -1 left unasserted."""
    out = {}
    for r in range(n - k, n - 1):
        out[r] = binom(n - 1, r + 1)
    for r in range(0, n - k):
        out[r] = (
            binom(n - 1, r + 1)
            - (n - k) * binom(n - k - 1, r)
            - binom(n - k, r + 1)
        )
    return out


def expected_dims_separated_pair(n):
    """Partitions never putting vertices 2 and 3 together: dims C(n-2, r)."""
    return {r: binom(n - 2, r) for r in range(-1, n - 1)}


def expected_dims_diagonal(n, k):
    """Block complex of the diagonal family on its stated range."""
    out = {-1: 1}
    for r in range(0, n - k):
        out[r] = (n - k) * binom(n - k - 1, r) + binom(n - k, r + 1)
    return out


@dataclass(frozen=True)
class TheoremCheck:
    theorem: str
    params: dict
    verdict: str
    expected: dict | None  # degree -> dim on the asserted range
    computed: dict
    notes: str

    def to_json_dict(self):
        return {
            "theorem": self.theorem,
            "params": dict(self.params),
            "verdict": self.verdict,
            "expected": (
                [[r, v] for r, v in sorted(self.expected.items())]
                if self.expected is not None
                else None
            ),
            "computed": [[r, v] for r, v in sorted(self.computed.items())],
            "notes": self.notes,
        }


def _compare(theorem, params, expected, computed, notes=""):
    mism = []
    for r in sorted(expected):
        got = computed.get(r)
        if got != expected[r]:
            mism.append(f"r={r}: expected {expected[r]}, computed {got}")
    verdict = "pass" if not mism else "fail"
    full_notes = "; ".join(x for x in [notes, "; ".join(mism)] if x)
    return TheoremCheck(theorem, params, verdict, expected, computed, full_notes)


def _ooh(theorem, params, computed, why):
    return TheoremCheck(
        theorem,
        params,
        "out-of-hypothesis",
        None,
        computed,
        f"{why}; computed dims reported without verdict",
    )


def _diagonal_in_hypothesis(n, k):
    return k > (n + 1) // 2


# ---------------------------------------------------------------------------
# registry


class _Entry:
    def __init__(self, description, param_keys, grid, specs, evaluate_check):
        self.description = description
        self.param_keys = param_keys
        self.grid = grid  # max_n -> list of param dicts
        self.specs = specs  # params -> list of ComplexSpec
        self.evaluate_check = evaluate_check  # (params, reports) -> TheoremCheck


def _dims_of(report):
    return report.dims()


def _check_3_1(params, reports):
    n, k = params["n"], params["k"]
    return _compare(
        "3.1", params, expected_dims_vertex_star(n, k), _dims_of(reports[0])
    )


def _check_3_2(params, reports):
    n, k = params["n"], params["k"]
    return _compare(
        "3.2", params, expected_dims_complete_complement(n, k), _dims_of(reports[0])
    )


def _check_3_4(params, reports):
    n, k = params["n"], params["k"]
    return _compare(
        "3.4", params, expected_dims_complete_top(n, k), _dims_of(reports[0])
    )


def _check_3_5(params, reports):
    n = params["n"]
    return _compare(
        "3.5", params, expected_dims_complete_near_top(n), _dims_of(reports[0])
    )


def _check_3_6(params, reports):
    n = params["n"]
    return _compare(
        "3.6", params, expected_dims_complete_two_below(n), _dims_of(reports[0])
    )


def _check_4_1(params, reports):
    n, k = params["n"], params["k"]
    return _compare("4.1", params, expected_dims_full_star(n, k), _dims_of(reports[0]))


def _check_4_2(params, reports):
    n, l, k = params["n"], params["l"], params["k"]
    computed = _dims_of(reports[0])
    h = star(n, k, covered=l)
    graph, _ = contract_core(h)
    chi = chromatic_deletion_contraction(graph)
    chi_f = scaled_derivative_at_zero(chi, n - l + 1)
    top = n - k - 1
    claimed_top = chi_f + (l - k - 1)
    lines = [
        f"chromatic factor {chi_f} from the core contraction",
        f"top degree r={top}: claimed {claimed_top}, computed {computed.get(top)}",
    ]
    middle = [r for r in range(max(l - k - 2, -1), top) if r >= l - k - 2]
    low = [r for r in range(-1, top) if r < l - k - 2]

    def prod_val(r):
        return (
            binom(n - k, r + 1)
            - binom(n - l + 1, top - r)
            + binom(n - l, top - r - 1) * chi_f
        )

    def sum_val(r):
        return (
            binom(n - k, r + 1)
            - binom(n - l + 1, top - r)
            + binom(n - l, top - r - 1)
            + chi_f
        )

    prod_ok = all(computed.get(r) == prod_val(r) for r in middle)
    sum_ok = all(computed.get(r) == sum_val(r) for r in middle)
    if prod_ok and sum_ok:
        match = "both"
    elif prod_ok:
        match = "product"
    elif sum_ok:
        match = "sum"
    else:
        match = "neither"
    lines.append(
        "middle range "
        + (f"r={middle[0]}..{middle[-1]}" if middle else "(empty)")
        + f": matching parse of the ambiguous product = {match}"
    )
    if middle and match == "neither":
        detail = ", ".join(
            f"r={r}: product {prod_val(r)}, sum {sum_val(r)}, computed {computed.get(r)}"
            for r in middle
        )
        lines.append(detail)
    low_ok = all(computed.get(r) == binom(n - k, r + 1) for r in low)
    if low:
        lines.append(f"low range r<{l - k - 2}: binomial match = {'yes' if low_ok else 'no'}")
    return TheoremCheck("4.2", params, "info", None, computed, "; ".join(lines))


def _check_5_1(params, reports):
    n, k = params["n"], params["k"]
    computed = _dims_of(reports[0])
    note = "edge-count parameter in the source statement is vestigial (unused)"
    if not _diagonal_in_hypothesis(n, k):
        return _ooh("5.1", params, computed, f"needs k > ceil(n/2), got k={k}, n={n}")
    return _compare(
        "5.1", params, expected_dims_diagonal_complement(n, k), computed, notes=note
    )


def _check_5_2(params, reports):
    n = params["n"]
    return _compare(
        "5.2", params, expected_dims_separated_pair(n), _dims_of(reports[0])
    )


def _check_5_3(params, reports):
    n, k = params["n"], params["k"]
    computed = _dims_of(reports[0])
    if not _diagonal_in_hypothesis(n, k):
        return _ooh("5.3", params, computed, f"needs k > ceil(n/2), got k={k}, n={n}")
    return _compare("5.3", params, expected_dims_diagonal(n, k), computed)


def _check_jonsson(params, reports):
    n = params["n"]
    computed = _dims_of(reports[0])
    chi = chromatic_hypergraph(complete_graph(n))
    top_dim = abs(evaluate(chi, -1)) - 1
    expected = {r: 0 for r in range(-1, n - 1)}
    expected[n - 3] = top_dim
    return _compare(
        "jonsson",
        params,
        expected,
        computed,
        notes=f"|chi(-1)|-1 = {top_dim} from the edge-subset chromatic oracle",
    )


def _grid_nk_all(max_n):
    return [
        {"n": n, "k": k} for n in range(3, max_n + 1) for k in range(2, n + 1)
    ]


def _grid_fixed(pairs):
    def grid(max_n):
        return [{"n": n, "k": k} for n, k in pairs if n <= max_n]

    return grid


THEOREMS = {
    "3.1": _Entry(
        "vertex-star block complex has binomial dims up to degree n-k-1, zero above",
        ("n", "k"),
        _grid_nk_all,
        lambda p: [ComplexSpec.delta(vertex_star(p["n"], p["k"]))],
        _check_3_1,
    ),
    "3.2": _Entry(
        "complement complex of the complete k-uniform family: binomial dims on the upper range",
        ("n", "k"),
        _grid_fixed([(5, 3), (6, 3), (6, 4), (7, 4), (7, 5)]),
        lambda p: [ComplexSpec.delta_complement(complete_uniform(p["n"], p["k"]))],
        _check_3_2,
    ),
    "3.4": _Entry(
        "complete k-uniform block complex: dim C(n, n-k) at degree n-k-1",
        ("n", "k"),
        _grid_nk_all,
        lambda p: [ComplexSpec.delta(complete_uniform(p["n"], p["k"]))],
        _check_3_4,
    ),
    "3.5": _Entry(
        "complete (n-1)-uniform block complex: dims (n, 1) at degrees (0, -1)",
        ("n",),
        lambda max_n: [{"n": n} for n in range(4, max_n + 1)],
        lambda p: [ComplexSpec.delta(complete_uniform(p["n"], p["n"] - 1))],
        _check_3_5,
    ),
    "3.6": _Entry(
        "complete (n-2)-uniform block complex: dims C(n, r+1) for r <= 1",
        ("n",),
        lambda max_n: [{"n": n} for n in range(4, max_n + 1)],
        lambda p: [ComplexSpec.delta(complete_uniform(p["n"], p["n"] - 2))],
        _check_3_6,
    ),
    "4.1": _Entry(
        "full-cover star block complex has dims C(n-k+1, r+1), zero above",
        ("n", "k"),
        _grid_fixed([(5, 3), (6, 3), (7, 3), (5, 4), (6, 4)]),
        lambda p: [ComplexSpec.delta(star(p["n"], p["k"]))],
        _check_4_1,
    ),
    "4.2": _Entry(
        "partial-cover star block complex vs the chromatic factor of the core "
        "contraction (report-only)",
        ("n", "l", "k"),
        lambda max_n: [
            {"n": n, "l": l, "k": k}
            for n, l, k in [(5, 4, 3), (6, 5, 3), (7, 5, 3)]
            if n <= max_n
        ],
        lambda p: [ComplexSpec.delta(star(p["n"], p["k"], covered=p["l"]))],
        _check_4_2,
    ),
    "5.1": _Entry(
        "complement complex of the diagonal family (hypothesis k > ceil(n/2))",
        ("n", "k"),
        _grid_fixed([(5, 4), (6, 4), (7, 5)]),
        lambda p: [ComplexSpec.delta_complement(diagonal(p["n"], p["k"]))],
        _check_5_1,
    ),
    "5.2": _Entry(
        "partitions separating vertices 2 and 3 have dims C(n-2, r)",
        ("n",),
        lambda max_n: [{"n": n} for n in range(4, max_n + 1)],
        lambda p: [ComplexSpec.restricted(p["n"], [(2, 3)])],
        _check_5_2,
    ),
    "5.3": _Entry(
        "diagonal block complex (hypothesis k > ceil(n/2))",
        ("n", "k"),
        _grid_fixed([(5, 4), (6, 4), (7, 5)]),
        lambda p: [ComplexSpec.delta(diagonal(p["n"], p["k"]))],
        _check_5_3,
    ),
    "jonsson": _Entry(
        "2-uniform ordered-partition complex concentrated at degree n-3 "
        "with dim |chi(-1)|-1",
        ("n",),
        lambda max_n: [{"n": n} for n in range(4, min(max_n, 6) + 1)],
        lambda p: [ComplexSpec.lambda_(complete_graph(p["n"]))],
        _check_jonsson,
    ),
}

GATING_VERDICTS = ("fail", "error")


@dataclass(frozen=True)
class SuiteReport:
    theorems: tuple
    max_n: int
    checks: tuple
    counts: dict
    ok: bool

    def to_json_dict(self):
        return {
            "theorems": list(self.theorems),
            "max_n": self.max_n,
            "checks": [c.to_json_dict() for c in self.checks],
            "counts": dict(self.counts),
            "ok": self.ok,
        }

    def to_json_text(self):
        return canonical_json(self.to_json_dict())

    def table(self):
        lines = []
        width = max([len(c.theorem) for c in self.checks] + [7])
        pwidth = max(
            [len(_params_str(c.params)) for c in self.checks] + [6]
        )
        for c in self.checks:
            line = (
                f"{c.theorem:<{width}}  {_params_str(c.params):<{pwidth}}  "
                f"{c.verdict:<17}"
            )
            if c.notes:
                line += f"  {c.notes}"
            lines.append(line.rstrip())
        summary = ", ".join(f"{v} {k}" for k, v in self.counts.items() if v)
        lines.append(f"summary: {summary or 'no checks'}")
        return "\n".join(lines)


def _params_str(params):
    return " ".join(f"{k}={params[k]}" for k in ("n", "l", "k") if k in params)


def run_suite(theorems=None, max_n=6, jobs=1, instance=None):
    """Run registry checks and collect one record per parameter instance.

    theorems: iterable of registry ids (default: all, in registry order).
    instance: explicit param dict applied to a single requested theorem,
    bypassing the default grid.
    """
    if theorems is None:
        ids = list(THEOREMS)
    else:
        ids = list(theorems)
        for t in ids:
            if t not in THEOREMS:
                raise ParameterError(
                    f"unknown theorem id {t!r}; known: {', '.join(THEOREMS)}"
                )
    if instance is not None and len(ids) != 1:
        raise ParameterError("an explicit instance needs exactly one theorem id")
    work = []
    for t in ids:
        entry = THEOREMS[t]
        if instance is not None:
            missing = [k for k in entry.param_keys if k not in instance]
            if missing:
                raise ParameterError(
                    f"theorem {t} needs parameters {entry.param_keys}, missing {missing}"
                )
            grid = [{k: instance[k] for k in entry.param_keys}]
        else:
            grid = entry.grid(max_n)
        for params in grid:
            work.append((t, params))

    # compute each distinct complex once
    spec_by_key = {}
    spec_errors = {}
    needed = []
    for t, params in work:
        entry = THEOREMS[t]
        try:
            specs = entry.specs(params)
        except ColorComplexError as exc:
            spec_errors[(t, canonical_json(params))] = str(exc)
            needed.append((t, params, None))
            continue
        keys = []
        for s in specs:
            key = canonical_json(s.descriptor())
            spec_by_key.setdefault(key, s)
            keys.append(key)
        needed.append((t, params, keys))

    def compute(key):
        try:
            return homology_dims(build_complex(spec_by_key[key]))
        except ColorComplexError as exc:
            return exc

    keys = sorted(spec_by_key)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = dict(zip(keys, pool.map(compute, keys)))
    else:
        reports = {k: compute(k) for k in keys}

    checks = []
    for t, params, rkeys in needed:
        entry = THEOREMS[t]
        if rkeys is None:
            msg = spec_errors[(t, canonical_json(params))]
            checks.append(TheoremCheck(t, params, "error", None, {}, msg))
            continue
        got = [reports[k] for k in rkeys]
        bad = [g for g in got if isinstance(g, Exception)]
        if bad:
            checks.append(TheoremCheck(t, params, "error", None, {}, str(bad[0])))
            continue
        checks.append(entry.evaluate_check(params, got))

    counts = {"pass": 0, "fail": 0, "out-of-hypothesis": 0, "info": 0, "error": 0}
    for c in checks:
        counts[c.verdict] += 1
    ok = counts["fail"] == 0 and counts["error"] == 0
    return SuiteReport(
        theorems=tuple(ids),
        max_n=max_n,
        checks=tuple(checks),
        counts=counts,
        ok=ok,
    )
