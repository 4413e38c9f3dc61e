import pytest
from hypothesis import given
from hypothesis import strategies as st

from dellac.configurations import (
    DellacConfiguration,
    MalformedConfiguration,
    NotSymmetricError,
    central_reflection,
    classify_inversions,
    enumerate_dellac,
    enumerate_symmetric,
    inv,
    inv_prime,
    inv_tilde,
    inversions,
    is_symmetric,
    is_valid,
    validate_configuration,
)

from oracles import (
    DC3_FIGURE,
    SDC4_FIGURE,
    config,
    filtered_symmetric,
    orbit_inv_prime,
    orbit_inv_tilde,
    point_scan_inversions,
)

GENOCCHI = [1, 2, 7, 38, 295]

DC4 = list(enumerate_dellac(4))
SDC5 = list(enumerate_symmetric(5))


class TestValidation:
    def test_single_column(self):
        assert validate_configuration(config((1, 1))) == []

    def test_staircase_n3(self):
        assert validate_configuration(config((1, 2, 3, 1, 2, 3))) == []

    def test_overfull_column(self):
        problems = validate_configuration(config((1, 1, 1, 2, 3, 3)))
        assert any("column 1 has 3 points" in p for p in problems)
        assert any("column 2 has 1 points" in p for p in problems)

    def test_band_violation(self):
        # column 3 in row 2 breaks 3 <= 2
        problems = validate_configuration(config((1, 3, 1, 2, 2, 3)))
        assert any("row 2" in p and "band" in p for p in problems)

    def test_structural_errors_raise(self):
        with pytest.raises(MalformedConfiguration):
            validate_configuration(DellacConfiguration(2, (1, 2, 1)))
        with pytest.raises(MalformedConfiguration):
            validate_configuration(DellacConfiguration(2, (1, 2, 1, 5)))
        with pytest.raises(MalformedConfiguration):
            validate_configuration(DellacConfiguration(0, ()))

    def test_is_valid(self):
        assert is_valid(config((1, 2, 1, 2)))
        assert not is_valid(config((2, 1, 2, 1)))
        assert not is_valid(DellacConfiguration(2, (1,)))


class TestEnumerateDellac:
    @pytest.mark.parametrize("n,count", list(zip(range(1, 6), GENOCCHI)))
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_dellac(n)) == count

    def test_dc3_matches_figure(self):
        got = [cfg.row_to_col for cfg in enumerate_dellac(3)]
        assert sorted(got) == got, "output must be lexicographically sorted"
        assert set(got) == {rows for rows, _ in DC3_FIGURE}

    def test_all_valid_and_distinct(self):
        for n in range(1, 5):
            cfgs = list(enumerate_dellac(n))
            assert len(set(cfgs)) == len(cfgs)
            assert all(validate_configuration(c) == [] for c in cfgs)

    def test_prefix_partition_is_exact(self):
        full = [c.row_to_col for c in enumerate_dellac(4)]
        split = [
            c.row_to_col
            for first in (1,)
            for second in (1, 2)
            for c in enumerate_dellac(4, prefix=(first, second))
        ]
        assert split == full  # row 1 is forced into column 1

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            list(enumerate_dellac(0))
        with pytest.raises(ValueError):
            list(enumerate_dellac(3, prefix=(2,)))  # band violation
        with pytest.raises(ValueError):
            list(enumerate_dellac(3, prefix=(1, 1, 1)))  # overfull column


class TestReflection:
    def test_staircase_fixed(self):
        cfg = config((1, 2, 3, 1, 2, 3))
        assert central_reflection(cfg) == cfg

    def test_n2_fixed_points(self):
        assert central_reflection(config((1, 2, 1, 2))) == config((1, 2, 1, 2))
        assert central_reflection(config((1, 1, 2, 2))) == config((1, 1, 2, 2))

    @given(st.sampled_from(DC4))
    def test_involution(self, cfg):
        assert central_reflection(central_reflection(cfg)) == cfg

    @given(st.sampled_from(DC4))
    def test_band_preserved(self, cfg):
        assert validate_configuration(central_reflection(cfg)) == []

    @given(st.sampled_from(DC4))
    def test_inversion_count_invariant(self, cfg):
        assert inv(central_reflection(cfg)) == inv(cfg)


class TestEnumerateSymmetric:
    @pytest.mark.parametrize(
        "n,count",
        [(1, 1), (2, 2), (3, 3), (4, 10), (5, 21), (6, 98), (7, 267)],
    )
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_symmetric(n)) == count

    @pytest.mark.parametrize("n", range(1, 7))
    def test_equals_filtered_full_enumeration(self, n):
        assert list(enumerate_symmetric(n)) == filtered_symmetric(n)

    def test_all_symmetric_and_valid(self):
        for cfg in enumerate_symmetric(5):
            assert is_symmetric(cfg)
            assert validate_configuration(cfg) == []

    def test_sdc4_matches_figure(self):
        got = {cfg.row_to_col for cfg in enumerate_symmetric(4)}
        assert got == {rows for rows, _, _ in SDC4_FIGURE}


class TestInversions:
    def test_staircase_has_none(self):
        assert inversions(config((1, 1, 2, 2, 3, 3))) == ()

    def test_identity_staircase_n3(self):
        got = inversions(config((1, 2, 3, 1, 2, 3)))
        assert set(got) == {
            (((1, 4)), ((2, 2))),
            (((1, 4)), ((3, 3))),
            (((2, 5)), ((3, 3))),
        }

    @pytest.mark.parametrize("rows,count", DC3_FIGURE)
    def test_figure_counts(self, rows, count):
        assert inv(config(rows)) == count

    def test_dc3_distribution(self):
        got = sorted(inv(cfg) for cfg in enumerate_dellac(3))
        assert got == [0, 1, 1, 2, 2, 2, 3]

    @given(st.sampled_from(DC4))
    def test_matches_point_scan_oracle(self, cfg):
        assert set(inversions(cfg)) == point_scan_inversions(cfg)


class TestSymmetricStatistics:
    @pytest.mark.parametrize("rows,tilde,prime", SDC4_FIGURE)
    def test_sdc4_figure_values(self, rows, tilde, prime):
        cfg = config(rows)
        assert inv_tilde(cfg) == tilde
        assert inv_prime(cfg) == prime

    def test_identity_staircase_n3(self):
        cfg = config((1, 2, 3, 1, 2, 3))
        assert inv_tilde(cfg) == 2
        assert inv_prime(cfg) == 1

    def test_inversion_free_gives_zero(self):
        cfg = config((1, 1, 2, 2, 3, 3))
        assert inv_tilde(cfg) == 0
        assert inv_prime(cfg) == 0

    def test_requires_symmetric(self):
        lopsided = config((1, 1, 2, 3, 2, 3))
        assert not is_symmetric(lopsided)
        with pytest.raises(NotSymmetricError):
            inv_tilde(lopsided)
        with pytest.raises(NotSymmetricError):
            inv_prime(lopsided)

    @given(st.sampled_from(SDC5))
    def test_identity_and_evenness(self, cfg):
        cls = classify_inversions(cfg)
        assert cls.total == cls.self_symmetric + cls.paired
        assert cls.paired % 2 == 0
        assert inv(cfg) == inv_tilde(cfg) + inv_prime(cfg)

    @given(st.sampled_from(SDC5))
    def test_matches_orbit_oracle(self, cfg):
        assert inv_tilde(cfg) == orbit_inv_tilde(cfg)
        assert inv_prime(cfg) == orbit_inv_prime(cfg)

    def test_orbit_oracle_exhaustive_n6(self):
        for cfg in enumerate_symmetric(6):
            assert inv_tilde(cfg) == orbit_inv_tilde(cfg)
            assert inv_prime(cfg) == orbit_inv_prime(cfg)
