import numpy as np
import pytest

from herglotz import (
    BlockToeplitz,
    CoefficientSequence,
    DimensionError,
    NotPsdError,
    assemble,
    cross_block_bound_check,
    positivity_profile,
    random_realization,
    realization_coefficients,
    reversal_conjugate,
    reverse_blocks,
)


def fixture_sequence(seed, block_dim, state_dim, order):
    rlz = random_realization(seed, block_dim, state_dim)
    return realization_coefficients(rlz, order)


class TestCoefficientSequence:
    def test_from_scalars(self):
        seq = CoefficientSequence.from_scalars([1, 0.5, 0.25])
        assert seq.block_dim == 1
        assert seq.order == 2
        assert len(seq) == 3

    def test_truncated(self):
        seq = CoefficientSequence.from_scalars([1, 2, 3])
        assert seq.truncated(1).order == 1
        with pytest.raises(DimensionError):
            seq.truncated(7)

    def test_rejects_ragged_blocks(self):
        with pytest.raises(DimensionError):
            CoefficientSequence(np.ones((2, 2, 3)))

    def test_immutable_storage(self):
        seq = CoefficientSequence.from_scalars([1, 2])
        with pytest.raises(ValueError):
            seq.coefficients[0, 0, 0] = 9


class TestAssemble:
    def test_all_ones(self):
        bt = assemble(CoefficientSequence.from_scalars([1, 1]))
        assert np.array_equal(bt.dense, np.ones((2, 2)))

    def test_diagonal_takes_hermitian_part(self):
        bt = assemble(CoefficientSequence.from_scalars([1 + 2j, 1]))
        assert np.array_equal(bt.dense, np.ones((2, 2)))

    def test_layout_three_levels(self):
        bt = assemble(CoefficientSequence.from_scalars([1, 0.5, 0.25]))
        expected = np.array(
            [[1, 0.5, 0.25], [0.5, 1, 0.5], [0.25, 0.5, 1]], dtype=complex
        )
        assert np.array_equal(bt.dense, expected)

    def test_exactly_hermitian_for_random_blocks(self):
        rng = np.random.default_rng(7)
        c = rng.standard_normal((4, 3, 3)) + 1j * rng.standard_normal((4, 3, 3))
        bt = assemble(CoefficientSequence(c))
        assert np.array_equal(bt.dense, bt.dense.conj().T)
        assert bt.num_blocks == 4 and bt.block_dim == 3


class TestReversal:
    def test_symmetric_fixed_point(self):
        bt = assemble(CoefficientSequence.from_scalars([1, 2]))
        assert np.array_equal(reversal_conjugate(bt).dense, bt.dense)

    def test_raw_matrix_index_reversal(self):
        out = reverse_blocks(np.array([[1.0, 2.0], [3.0, 4.0]]), 1)
        assert np.array_equal(out, [[4.0, 3.0], [2.0, 1.0]])

    def test_blockwise_reversal_keeps_blocks_intact(self):
        dense = np.arange(16).reshape(4, 4).astype(float)
        out = reverse_blocks(dense, 2)
        assert np.array_equal(out[:2, :2], dense[2:, 2:])
        assert np.array_equal(out[:2, 2:], dense[2:, :2])

    def test_eigenvalues_preserved(self):
        seq = fixture_sequence(3, 2, 5, 4)
        bt = assemble(seq)
        rev = reversal_conjugate(bt)
        before = np.linalg.eigvalsh(bt.dense)
        after = np.linalg.eigvalsh(rev.dense)
        assert np.allclose(before, after, atol=1e-12)

    def test_size_mismatch_raises(self):
        with pytest.raises(DimensionError):
            reverse_blocks(np.eye(5), 2)


class TestPositivityProfile:
    def test_all_ones(self):
        reports = positivity_profile(CoefficientSequence.from_scalars([1, 1]), 1e-9)
        assert reports[0].min_eigenvalue == pytest.approx(1.0)
        assert reports[1].min_eigenvalue == pytest.approx(0.0, abs=1e-12)
        assert all(r.is_psd for r in reports)

    def test_identity_data(self):
        reports = positivity_profile(CoefficientSequence.from_scalars([1, 0]), 1e-9)
        assert [r.min_eigenvalue for r in reports] == pytest.approx([1.0, 1.0])

    def test_infeasible_level(self):
        reports = positivity_profile(CoefficientSequence.from_scalars([1, 2]), 1e-9)
        assert reports[1].min_eigenvalue == pytest.approx(-1.0)
        assert not reports[1].is_psd

    def test_min_eigenvalues_non_increasing(self):
        # leading principal submatrices interlace
        seq = fixture_sequence(11, 2, 6, 6)
        mins = [r.min_eigenvalue for r in positivity_profile(seq, 1e-9)]
        assert all(mins[n + 1] <= mins[n] + 1e-12 for n in range(len(mins) - 1))

    @pytest.mark.parametrize("seed", range(5))
    def test_realization_data_stays_psd(self, seed):
        rng = np.random.default_rng(seed)
        d = int(rng.integers(1, 4))
        h = int(rng.integers(1, 8))
        seq = fixture_sequence(seed, d, h, 6)
        assert all(r.min_eigenvalue >= -1e-8 for r in positivity_profile(seq, 1e-8))


class TestCrossBlockBound:
    def test_all_ones_equality_case(self):
        bt = assemble(CoefficientSequence.from_scalars([1, 1]))
        slack, = cross_block_bound_check(bt, [((0, 1), [1.0], [1.0])])
        assert slack == pytest.approx(0.0, abs=1e-12)

    def test_identity_unit_slack(self):
        bt = assemble(CoefficientSequence.from_scalars([1, 0]))
        slack, = cross_block_bound_check(bt, [((0, 1), [1.0], [1.0])])
        assert slack == pytest.approx(1.0)

    def test_direct_arithmetic(self):
        # raw PSD block matrix, not an assembled Toeplitz
        bt = BlockToeplitz(block_dim=1, num_blocks=2, dense=np.array([[2.0, 1.0], [1.0, 1.0]]))
        slack, = cross_block_bound_check(bt, [((0, 1), [1.0], [1.0])])
        assert slack == pytest.approx(1.0)

    def test_not_psd_contract_violation(self):
        bt = assemble(CoefficientSequence.from_scalars([1, 2]))
        with pytest.raises(NotPsdError):
            cross_block_bound_check(bt, [((0, 1), [1.0], [1.0])])

    def test_bad_block_index(self):
        bt = assemble(CoefficientSequence.from_scalars([1, 0]))
        with pytest.raises(DimensionError):
            cross_block_bound_check(bt, [((0, 5), [1.0], [1.0])])

    @pytest.mark.parametrize("seed", range(8))
    def test_random_psd_slacks_nonnegative(self, seed):
        rng = np.random.default_rng(300 + seed)
        d = int(rng.integers(1, 4))
        seq = fixture_sequence(seed, d, int(rng.integers(2, 8)), 5)
        bt = assemble(seq)
        samples = []
        for _ in range(5):
            l, j = rng.integers(0, bt.num_blocks, 2)
            v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            w = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            samples.append(((int(l), int(j)), v, w))
        slacks = cross_block_bound_check(bt, samples, tol=1e-8)
        assert all(s >= -1e-9 for s in slacks)
