import pytest

from dellac.configurations import (
    NotSymmetricError,
    enumerate_symmetric,
    inv_tilde,
)
from dellac.flags import (
    Family,
    InconsistencyError,
    IndexCollection,
    dim_orthogonal,
    dim_sp_even,
    dim_sp_even_via_correction,
    dim_sp_odd,
    dim_type_a,
    enumerate_collections,
    from_dellac,
    initiating_elements,
    ordering_less,
    ordering_position,
    s_statistic,
    to_dellac,
    validate_collection,
)

from oracles import brute_collections, config, literal_case_split_dims

I0 = IndexCollection(Family.SP_EVEN, 8, ({3}, {3, 7}, {1, 4, 7}, {1, 4, 6, 7}))

# Hand-evaluated cell dimensions for every size-3 type A collection; their
# multiset must reproduce the inversion distribution {0,1,1,2,2,2,3}.
TYPE_A_N3_DIMS = {
    (frozenset({1}), frozenset({1, 2})): 3,
    (frozenset({1}), frozenset({1, 3})): 2,
    (frozenset({2}), frozenset({1, 2})): 2,
    (frozenset({2}), frozenset({1, 3})): 0,
    (frozenset({2}), frozenset({2, 3})): 1,
    (frozenset({3}), frozenset({1, 3})): 1,
    (frozenset({3}), frozenset({2, 3})): 2,
}


class TestOrdering:
    def test_spec_examples(self):
        assert ordering_less(2, 1, 1, 3)
        assert ordering_less(3, 7, 2, 8)
        for n_ambient in (3, 6, 9):
            for k in range(1, n_ambient):
                assert ordering_less(k + 1, k, k, n_ambient)

    def test_full_order_k2_n8(self):
        ranked = sorted(range(1, 9), key=lambda x: ordering_position(x, 2, 8))
        assert ranked == [3, 4, 5, 6, 7, 8, 1, 2]

    def test_total_order(self):
        for k in (1, 3, 6):
            positions = [ordering_position(x, k, 7) for x in range(1, 8)]
            assert sorted(positions) == list(range(7))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            ordering_less(0, 1, 1, 4)
        with pytest.raises(ValueError):
            ordering_less(1, 2, 4, 4)


class TestSStatistic:
    def test_worked_example_values(self):
        assert s_statistic(7, 3, 2, 4) == 0
        assert s_statistic(1, 4, 3, 4) == 0
        assert s_statistic(1, 7, 3, 4) == 0
        assert s_statistic(4, 1, 4, 4) == 1
        assert s_statistic(4, 7, 4, 4) == 1
        assert s_statistic(4, 6, 4, 4) == 1

    def test_excluded_diagonal_raises(self):
        with pytest.raises(ValueError):
            s_statistic(3, 6, 2, 4)
        with pytest.raises(ValueError):
            s_statistic(1, 8, 1, 4)

    def test_range_checks(self):
        with pytest.raises(ValueError):
            s_statistic(9, 1, 2, 4)
        with pytest.raises(ValueError):
            s_statistic(1, 2, 5, 4)


class TestCollections:
    def test_i0_is_valid(self):
        assert validate_collection(I0) == []

    def test_size_violation(self):
        bad = IndexCollection(Family.SP_EVEN, 4, ({1}, {1, 2, 3}))
        assert any("I_2 has 3 elements" in p for p in validate_collection(bad))

    def test_chain_violation(self):
        bad = IndexCollection(Family.TYPE_A, 3, ({1}, {2, 3}))
        assert any("not contained" in p for p in validate_collection(bad))

    def test_isotropy_violation(self):
        bad = IndexCollection(Family.SP_EVEN, 4, ({1}, {1, 4}))
        assert any("forbidden pair" in p for p in validate_collection(bad))

    def test_middle_value_exempt_for_odd(self):
        ok = IndexCollection(Family.SP_ODD, 5, ({3}, {3, 4}))
        assert validate_collection(ok) == []

    def test_parity_mismatch_raises(self):
        with pytest.raises(ValueError):
            validate_collection(IndexCollection(Family.SP_EVEN, 5, ({1}, {1, 2})))
        with pytest.raises(ValueError):
            list(enumerate_collections(Family.SO_ODD, 4))

    def test_sp_odd_n3(self):
        got = list(enumerate_collections(Family.SP_ODD, 3))
        assert [c.sets for c in got] == [
            (frozenset({1}),),
            (frozenset({2}),),
            (frozenset({3}),),
        ]

    def test_type_a_n3(self):
        got = {c.sets for c in enumerate_collections(Family.TYPE_A, 3)}
        assert got == set(TYPE_A_N3_DIMS)

    def test_contains_worked_example(self):
        assert I0.sets in {c.sets for c in enumerate_collections(Family.SP_EVEN, 8)}

    @pytest.mark.parametrize(
        "family,n,count",
        [
            (Family.TYPE_A, 1, 1),
            (Family.TYPE_A, 4, 38),
            (Family.SP_EVEN, 6, 98),
            (Family.SO_EVEN, 6, 98),
            (Family.SP_ODD, 7, 267),
            (Family.SO_ODD, 7, 267),
            (Family.SP_ODD, 1, 1),
        ],
    )
    def test_counts(self, family, n, count):
        assert sum(1 for _ in enumerate_collections(family, n)) == count

    @pytest.mark.parametrize(
        "family,n",
        [(Family.TYPE_A, 4), (Family.SP_EVEN, 6), (Family.SP_ODD, 5)],
    )
    def test_against_subset_product_oracle(self, family, n):
        got = {c.sets for c in enumerate_collections(family, n)}
        want = set(
            brute_collections(n, family.chain_length(n), isotropy=not family.is_type_a)
        )
        assert got == want


class TestInitiating:
    def test_worked_example(self):
        assert initiating_elements(I0, 1) == frozenset({3})
        assert initiating_elements(I0, 2) == frozenset({7})
        assert initiating_elements(I0, 3) == frozenset({1, 4})
        assert initiating_elements(I0, 4) == frozenset({4, 6})

    def test_first_step_is_whole_set(self):
        col = IndexCollection(Family.TYPE_A, 3, ({2}, {1, 2}))
        assert initiating_elements(col, 1) == frozenset({2})


class TestTypeADimension:
    def test_hand_evaluated_table(self):
        for sets, want in TYPE_A_N3_DIMS.items():
            col = IndexCollection(Family.TYPE_A, 3, sets)
            assert dim_type_a(col) == want, sets

    def test_worked_example_partial(self):
        assert dim_type_a(I0) == 12

    def test_multiset_matches_inversions(self):
        dims = sorted(dim_type_a(c) for c in enumerate_collections(Family.TYPE_A, 3))
        assert dims == [0, 1, 1, 2, 2, 2, 3]

    def test_degree_subset(self):
        col = IndexCollection(Family.TYPE_A, 3, (frozenset({1}), frozenset({1, 2})))
        assert dim_type_a(col, degrees=[1]) == 2
        assert dim_type_a(col, degrees=[2]) == 1
        with pytest.raises(ValueError):
            dim_type_a(col, degrees=[3])

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            dim_type_a(IndexCollection(Family.TYPE_A, 3, ({1}, {2, 3})))


class TestEvenDimension:
    def test_worked_example_trace(self):
        trace = dim_sp_even(I0)
        assert trace.dims == (1, 4, 7, 9)
        assert trace.dimension == 9
        assert trace.excluded_pairs == ()
        assert trace.form_disagreements == ()
        first = trace.steps[0].disks
        assert len(first) == 1 and first[0].element == 3 and first[0].slots == 1

    def test_worked_example_correction_route(self):
        assert dim_sp_even_via_correction(I0) == 12 - 3 == 9

    def test_n2_values(self):
        one = IndexCollection(Family.SP_EVEN, 2, ({1},))
        two = IndexCollection(Family.SP_EVEN, 2, ({2},))
        assert dim_sp_even(one).dimension == 1
        assert dim_sp_even(two).dimension == 0
        assert dim_sp_even_via_correction(one) == 1
        assert dim_sp_even_via_correction(two) == 0

    def test_excluded_pair_lookup_is_recorded(self):
        col = IndexCollection(Family.SP_EVEN, 6, ({3}, {3, 4}, {1, 2, 4}))
        trace = dim_sp_even(col)
        assert (2, 4, 3) in trace.excluded_pairs
        assert trace.dimension == 4
        assert dim_sp_even_via_correction(col) == 4
        assert inv_tilde(to_dellac(col)) == 4

    def test_below_only_form_disagreement_is_recorded_not_raised(self):
        col = IndexCollection(Family.SP_EVEN, 6, ({2}, {2, 3}, {1, 2, 3}))
        trace = dim_sp_even(col)
        assert trace.form_disagreements == ((3, 3, 4),)
        assert trace.dimension == 7
        assert inv_tilde(to_dellac(col)) == 7

    def test_routes_agree_exhaustively(self):
        for n in (2, 4, 6):
            for col in enumerate_collections(Family.SP_EVEN, n):
                trace = dim_sp_even(col)
                assert trace.dims == tuple(sorted(trace.dims))
                assert trace.dimension == dim_sp_even_via_correction(col)
                assert trace.dimension == inv_tilde(to_dellac(col))

    def test_equals_literal_case_split_transcription(self):
        for n in (2, 4, 6):
            for col in enumerate_collections(Family.SP_EVEN, n):
                assert dim_sp_even(col).dims == literal_case_split_dims(col.sets, n)

    def test_trace_serialization(self):
        d = dim_sp_even(I0).to_dict()
        assert d["dims"] == [1, 4, 7, 9]
        assert d["steps"][3]["disks"][1]["s_values"].count(1) == 3

    def test_family_check(self):
        with pytest.raises(ValueError):
            dim_sp_even(IndexCollection(Family.SP_ODD, 5, ({1}, {1, 2})))


class TestOddDimension:
    def test_n3_values(self):
        dims = {
            tuple(sorted(col.sets[0])): dim_sp_odd(col)
            for col in enumerate_collections(Family.SP_ODD, 3)
        }
        assert dims == {(1,): 2, (2,): 0, (3,): 1}

    def test_top_cell_n5(self):
        col = IndexCollection(Family.SP_ODD, 5, ({1}, {1, 2}))
        assert dim_sp_odd(col) == 6

    def test_empty_chain(self):
        assert dim_sp_odd(IndexCollection(Family.SP_ODD, 1, ())) == 0

    @pytest.mark.parametrize("n", [1, 3, 5, 7])
    def test_matches_statistic_route(self, n):
        for col in enumerate_collections(Family.SP_ODD, n):
            assert dim_sp_odd(col) == inv_tilde(to_dellac(col))


class TestBijection:
    def test_worked_example_points(self):
        cfg = to_dellac(I0)
        assert set(cfg.points()) == {
            (1, 3), (2, 7), (3, 4), (3, 9), (4, 6), (4, 12),
            (1, 1), (2, 2),
            (8, 14), (7, 10), (6, 13), (6, 8), (5, 11), (5, 5), (8, 16), (7, 15),
        }

    def test_odd_middle_column(self):
        col = IndexCollection(Family.SP_ODD, 3, ({2},))
        assert to_dellac(col).row_to_col == (1, 1, 2, 2, 3, 3)

    def test_small_even(self):
        col = IndexCollection(Family.SP_EVEN, 2, ({1},))
        assert to_dellac(col).row_to_col == (1, 2, 1, 2)

    def test_empty_chain_n1(self):
        col = IndexCollection(Family.SP_ODD, 1, ())
        assert to_dellac(col).row_to_col == (1, 1)

    def test_rejects_type_a(self):
        with pytest.raises(ValueError):
            to_dellac(IndexCollection(Family.TYPE_A, 3, ({2}, {1, 2})))

    def test_from_dellac_worked_example(self):
        assert from_dellac(to_dellac(I0)) == I0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_roundtrip_both_directions(self, n):
        family = Family.SP_EVEN if n % 2 == 0 else Family.SP_ODD
        collections = list(enumerate_collections(family, n))
        images = []
        for col in collections:
            cfg = to_dellac(col)
            assert from_dellac(cfg, family) == col
            images.append(cfg)
        assert len(set(images)) == len(collections)
        assert set(images) == set(enumerate_symmetric(n))

    def test_from_dellac_requires_symmetric(self):
        with pytest.raises(NotSymmetricError):
            from_dellac(config((1, 1, 2, 3, 2, 3)))

    def test_from_dellac_family_parity(self):
        cfg = to_dellac(IndexCollection(Family.SP_EVEN, 2, ({1},)))
        with pytest.raises(ValueError):
            from_dellac(cfg, Family.SP_ODD)
        assert from_dellac(cfg, Family.SO_EVEN).family is Family.SO_EVEN


class TestOrthogonalDimension:
    def test_n3_values(self):
        dims = {
            tuple(sorted(col.sets[0])): dim_orthogonal(col)
            for col in enumerate_collections(Family.SO_ODD, 3)
        }
        assert dims == {(1,): 1, (2,): 0, (3,): 1}

    def test_n2_values(self):
        dims = [dim_orthogonal(c) for c in enumerate_collections(Family.SO_EVEN, 2)]
        assert dims == [0, 0]

    def test_requires_orthogonal_family(self):
        with pytest.raises(ValueError):
            dim_orthogonal(I0)
