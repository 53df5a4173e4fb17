import json
import random
from itertools import combinations
from math import comb

import pytest

from colorcomplex.complexes import ComplexSpec, build_complex
from colorcomplex.errors import ParameterError, StructureError
from colorcomplex.homology import (
    chain_vector,
    compute_ranks,
    homology_dims,
    independent_mod_boundaries,
    is_cycle,
    representative_cycle,
)
from colorcomplex.hypergraphs import complete_uniform, diagonal
from colorcomplex.jsonutil import canonical_json
from colorcomplex.partitions import blocks_from_sets


def test_full_cyclic_dims_are_binomial():
    for n in range(2, 7):
        cx = build_complex(ComplexSpec.full_cyclic(n))
        report = homology_dims(cx)
        assert report.dims() == {r: comb(n - 1, r + 1) for r in range(-1, n - 1)}


def test_delta_complete_53_dims():
    cx = build_complex(ComplexSpec.delta(complete_uniform(5, 3)))
    report = homology_dims(cx)
    assert report.dims() == {-1: 1, 0: 5, 1: 10, 2: 0, 3: 0}


def test_delta_complement_diagonal_54():
    cx = build_complex(ComplexSpec.delta_complement(diagonal(5, 4)))
    report = homology_dims(cx)
    assert report.dims()[0] == 2


def test_euler_is_alternating_sum():
    cx = build_complex(ComplexSpec.full_cyclic(5))
    report = homology_dims(cx)
    total = sum((1 if d.r % 2 == 0 else -1) * d.h for d in report.degrees)
    assert report.euler == total
    # and it matches the alternating sum of face counts
    faces = sum((1 if r % 2 == 0 else -1) * cx.basis_size(r) for r in cx.degrees())
    assert report.euler == faces


def test_degree_records_are_consistent():
    cx = build_complex(ComplexSpec.delta(complete_uniform(5, 3)))
    report = homology_dims(cx)
    for d in report.degrees:
        assert d.basis == cx.basis_size(d.r)
        assert d.h == d.basis - d.rank_down - d.rank_up
        assert d.h >= 0


def test_report_json_round_trip_is_byte_identical():
    cx = build_complex(ComplexSpec.full_cyclic(4))
    report = homology_dims(cx)
    text = report.to_json_text()
    assert canonical_json(json.loads(text)) == text
    parsed = json.loads(text)
    assert set(parsed) == {"complex", "degrees", "euler"}


def test_modular_matches_exact_here():
    cx = build_complex(ComplexSpec.full_cyclic(4))
    exact = homology_dims(cx)
    fixed = homology_dims(cx, method="modular", prime=1073741789)
    seeded = homology_dims(cx, method="modular", rng=random.Random(11))
    assert fixed.dims() == exact.dims()
    assert seeded.dims() == exact.dims()
    assert fixed.method == "modular" and fixed.prime == 1073741789
    assert exact.method == "exact" and exact.prime is None
    # method and prime stay out of the serialized report
    assert "method" not in json.loads(fixed.to_json_text())


def test_homology_dims_rejects_unknown_method():
    cx = build_complex(ComplexSpec.full_cyclic(3))
    with pytest.raises(ParameterError):
        homology_dims(cx, method="floating")


def test_compute_ranks_parallel_agrees():
    cx = build_complex(ComplexSpec.full_cyclic(5))
    from colorcomplex.intmatrix import rank_exact

    assert compute_ranks(cx.matrices, rank_exact, jobs=1) == compute_ranks(
        cx.matrices, rank_exact, jobs=4
    )


def test_representative_cycle_smallest_cases():
    r, chain = representative_cycle(4, (2, 3, 4))
    assert r == -1
    assert chain == {blocks_from_sets([(1, 2, 3, 4)]): 1}

    r, chain = representative_cycle(4, (2,))
    assert r == 1
    assert chain == {
        blocks_from_sets([(1, 2), (3,), (4,)]): 1,
        blocks_from_sets([(1, 2), (4,), (3,)]): -1,
    }


def test_representative_cycle_validation():
    with pytest.raises(ParameterError):
        representative_cycle(4, (1, 2))  # vertex 1 is implicit, not allowed
    with pytest.raises(ParameterError):
        representative_cycle(4, (5,))
    with pytest.raises(ParameterError):
        representative_cycle(4, ("2",))


def test_representative_cycles_are_cycles():
    for n in (3, 4, 5):
        cx = build_complex(ComplexSpec.full_cyclic(n))
        others = range(2, n + 1)
        for size in range(0, n):
            for subset in combinations(others, size):
                r, chain = representative_cycle(n, subset)
                assert is_cycle(cx, r, chain)


def test_single_face_is_not_a_cycle():
    cx = build_complex(ComplexSpec.full_cyclic(4))
    chain = {blocks_from_sets([(1, 2), (3,), (4,)]): 1}
    assert not is_cycle(cx, 1, chain)


def test_chain_vector_unknown_face():
    cx = build_complex(ComplexSpec.full_cyclic(3))
    with pytest.raises(StructureError):
        chain_vector(cx, 1, {blocks_from_sets([(2,), (1,), (3,)]): 1})


def test_independence_of_cycle_family():
    n = 5
    cx = build_complex(ComplexSpec.full_cyclic(n))
    by_degree = {}
    for size in range(0, n):
        for subset in combinations(range(2, n + 1), size):
            r, chain = representative_cycle(n, subset)
            by_degree.setdefault(r, []).append(chain)
    for r, chains in by_degree.items():
        assert len(chains) == comb(n - 1, r + 1)
        assert independent_mod_boundaries(cx, r, chains)


def test_duplicated_chain_is_dependent():
    r, chain = representative_cycle(4, (2,))
    cx = build_complex(ComplexSpec.full_cyclic(4))
    assert independent_mod_boundaries(cx, r, [chain])
    assert not independent_mod_boundaries(cx, r, [chain, chain])
