"""Shared fixtures: the acceptance corpus of complexes, built once per session.

Each corpus entry records which acceptance criterion it belongs to, the built
complex, the exact homology report, and how long the build plus rank
computation took (the wall-time budgets in the acceptance tests sum these).
Identical specs appearing under several criteria are computed once.
"""

import time
from dataclasses import dataclass

import pytest

from colorcomplex import ComplexSpec, build_complex
from colorcomplex.homology import homology_dims
from colorcomplex.hypergraphs import (
    complete_graph,
    complete_uniform,
    diagonal,
    star,
    vertex_star,
)
from colorcomplex.jsonutil import canonical_json


@dataclass
class Entry:
    criterion: str
    label: str
    spec: ComplexSpec
    cx: object
    report: object
    seconds: float


def _corpus_specs():
    out = []
    for n in range(3, 8):
        for k in range(2, n + 1):
            out.append(
                ("c1", f"vertex-star n={n} k={k}", ComplexSpec.delta(vertex_star(n, k)))
            )
    for n, k in [(5, 3), (6, 3), (6, 4), (7, 4), (7, 5)]:
        out.append(
            (
                "c2",
                f"complete-complement n={n} k={k}",
                ComplexSpec.delta_complement(complete_uniform(n, k)),
            )
        )
    for n in range(3, 8):
        for k in range(2, n + 1):
            out.append(
                ("c3", f"complete n={n} k={k}", ComplexSpec.delta(complete_uniform(n, k)))
            )
    for n in (4, 5, 6):
        for k in (n - 1, n - 2):
            out.append(
                ("c4", f"complete n={n} k={k}", ComplexSpec.delta(complete_uniform(n, k)))
            )
    for n, k in [(5, 3), (6, 3), (7, 3), (5, 4), (6, 4)]:
        out.append(("c5", f"star n={n} k={k}", ComplexSpec.delta(star(n, k))))
    out.append(("c6", "star n=7 l=5 k=3", ComplexSpec.delta(star(7, 3, covered=5))))
    for n, k in [(5, 4), (6, 4), (7, 5)]:
        out.append(("c7", f"diagonal n={n} k={k}", ComplexSpec.delta(diagonal(n, k))))
        out.append(
            (
                "c7",
                f"diagonal-complement n={n} k={k}",
                ComplexSpec.delta_complement(diagonal(n, k)),
            )
        )
    for n in (4, 5, 6):
        out.append(("c7", f"separated n={n}", ComplexSpec.restricted(n, [(2, 3)])))
    for n in (4, 5):
        out.append(
            ("c8", f"ordered-complete n={n}", ComplexSpec.lambda_(complete_graph(n)))
        )
    return out


class Corpus:
    def __init__(self, entries):
        self.entries = entries

    def by_criterion(self, c):
        return [e for e in self.entries if e.criterion == c]

    def seconds(self, c):
        return sum(e.seconds for e in self.by_criterion(c))

    def distinct(self):
        """One entry per distinct complex, first criterion wins."""
        seen = {}
        for e in self.entries:
            seen.setdefault(canonical_json(e.spec.descriptor()), e)
        return list(seen.values())

    def hypergraphs(self, max_n=None):
        """Distinct underlying hypergraphs, optionally capped by vertex count."""
        seen = {}
        for e in self.entries:
            h = e.spec.hypergraph
            if h is None or (max_n is not None and h.n > max_n):
                continue
            seen.setdefault((h.n, h.edges), h)
        return list(seen.values())


@pytest.fixture(scope="session")
def corpus():
    entries = []
    cache = {}
    for criterion, label, spec in _corpus_specs():
        key = canonical_json(spec.descriptor())
        got = cache.get(key)
        if got is None:
            t0 = time.perf_counter()
            cx = build_complex(spec)
            report = homology_dims(cx)
            got = (cx, report, time.perf_counter() - t0)
            cache[key] = got
        entries.append(Entry(criterion, label, spec, got[0], got[1], got[2]))
    return Corpus(entries)
