import warnings

import pytest

from asympure import (
    IrrepLabel,
    binomial,
    highest_weight_certificate,
    kernel_series_rep,
    pieri_decompose,
    predict_map_analysis,
    series_exponents,
    source_target_dims,
    weyl_dimension,
)


class TestIrrepLabel:
    def test_rejects_bad_partitions(self):
        with pytest.raises(ValueError):
            IrrepLabel(1, 2, 2)
        with pytest.raises(ValueError):
            IrrepLabel(3, -1, 2)

    def test_fundamental_weight_conversion(self):
        # weight coordinates (c1, c2) are the partition (c1+c2, c2)
        label = IrrepLabel.from_fundamental(2, 6, 3)
        assert (label.lambda1, label.lambda2) == (9, 3)


class TestWeylDimension:
    @pytest.mark.parametrize(
        "n,l1,l2,expected",
        [
            (2, 1, 0, 3),    # standard representation
            (3, 1, 1, 6),    # second exterior power of C^4
            (1, 3, 0, 4),
            (1, 2, 1, 2),
            (2, 1, 1, 3),    # dual of the standard rep
            (2, 0, 0, 1),
        ],
    )
    def test_small_cases(self, n, l1, l2, expected):
        assert weyl_dimension(n, IrrepLabel(l1, l2, n)) == expected

    def test_9_3_via_dimension_sum_difference(self):
        # independent route: (9,3) is the one component of Sym^9 (x) Sym^3
        # missing from Sym^10 (x) Sym^2, so its dimension is the difference
        # of the two tensor-product dimensions
        tensor_93 = binomial(11, 2) * binomial(5, 2)
        tensor_10_2 = binomial(12, 2) * binomial(4, 2)
        assert (tensor_93, tensor_10_2) == (550, 396)
        assert weyl_dimension(2, IrrepLabel(9, 3, 2)) == tensor_93 - tensor_10_2 == 154

    def test_rejects_rank_mismatch(self):
        with pytest.raises(ValueError):
            weyl_dimension(3, IrrepLabel(2, 1, 2))

    def test_sl2_closed_form(self):
        for l1 in range(12):
            for l2 in range(l1 + 1):
                assert weyl_dimension(1, IrrepLabel(l1, l2, 1)) == l1 - l2 + 1


class TestPieri:
    def test_sl2_clebsch_gordan(self):
        dec = pieri_decompose(1, 2, 1)
        assert [(c.lambda1, c.lambda2) for c in dec.components] == [(3, 0), (2, 1)]
        assert dec.dimension() == 6

    def test_four_components(self):
        dec = pieri_decompose(2, 9, 3)
        assert len(dec.components) == 4
        assert dec.dimension() == 550

    def test_trivial_factor(self):
        dec = pieri_decompose(2, 0, 5)
        assert [(c.lambda1, c.lambda2) for c in dec.components] == [(5, 0)]
        assert dec.dimension() == 21

    def test_symmetric_in_A_B(self):
        for A in range(8):
            for B in range(8):
                lhs = pieri_decompose(2, A, B).components
                rhs = pieri_decompose(2, B, A).components
                assert lhs == rhs

    def test_dimension_sum_identity(self):
        # checked over the full acceptance range in test_acceptance
        for n in (1, 2, 3):
            for A in range(12):
                for B in range(12):
                    total = pieri_decompose(n, A, B).dimension()
                    assert total == binomial(A + n, n) * binomial(B + n, n)

    def test_multiplicity_one(self):
        labels = pieri_decompose(2, 7, 5).components
        assert len(set(labels)) == len(labels)


class TestCertificate:
    @pytest.mark.parametrize(
        "k,B,i,expected",
        [(1, 3, 0, 3), (1, 3, 2, 1), (2, 3, 2, 0), (2, 5, 1, 12), (3, 3, 0, 6)],
    )
    def test_examples(self, k, B, i, expected):
        assert highest_weight_certificate(2, k, B, i) == expected

    def test_rejects_out_of_range_index(self):
        with pytest.raises(ValueError):
            highest_weight_certificate(2, 1, 3, 4)

    def test_coverage_on_shared_components(self):
        # every index shared by source and target decompositions certifies
        for n in (1, 2):
            for k in (1, 2):
                for A in range(10):
                    for B in range(k, 10):
                        shared_top = min(min(A, B), min(A + k, B - k))
                        for i in range(shared_top + 1):
                            assert highest_weight_certificate(n, k, B, i) > 0


class TestPredict:
    def test_kernel_example(self):
        analysis = predict_map_analysis(2, 1, 9, 3)
        assert analysis.kernel_dim == 154
        assert analysis.cokernel_dim == 0
        assert [(c.lambda1, c.lambda2) for c in analysis.kernel_labels] == [(9, 3)]
        assert analysis.cokernel_labels == ()

    def test_cokernel_example(self):
        analysis = predict_map_analysis(2, 1, 2, 4)
        assert analysis.kernel_dim == 0
        assert analysis.cokernel_dim == 10
        assert [(c.lambda1, c.lambda2) for c in analysis.cokernel_labels] == [(3, 3)]

    def test_sl2_case_frozen_from_oracle(self):
        # golden recorded from the brute-force rank engine: the 5x8 matrix
        # for (n, k, A, B) = (1, 1, 3, 1) has rank 5
        analysis = predict_map_analysis(1, 1, 3, 1)
        assert analysis.kernel_dim == 3
        assert analysis.cokernel_dim == 0
        assert [(c.lambda1, c.lambda2) for c in analysis.kernel_labels] == [(3, 1)]

    def test_rejects_negative_target_exponent(self):
        with pytest.raises(ValueError):
            predict_map_analysis(2, 1, 3, 0)
        with pytest.raises(ValueError):
            predict_map_analysis(2, 2, 3, 1)

    def test_euler_consistency(self):
        for n in (1, 2, 3):
            for k in (1, 2):
                for A in range(10):
                    for B in range(k, 10):
                        analysis = predict_map_analysis(n, k, A, B)
                        src, tgt = source_target_dims(n, k, A, B)
                        assert analysis.kernel_dim - analysis.cokernel_dim == src - tgt

    def test_labels_disjoint(self):
        for A in range(8):
            for B in range(1, 8):
                analysis = predict_map_analysis(2, 1, A, B)
                overlap = set(analysis.kernel_labels) & set(analysis.cokernel_labels)
                assert not overlap


class TestKernelSeries:
    def test_exponent_schedule(self):
        assert series_exponents(2, 1, 2, 1, 5) == (9, 3)
        assert series_exponents(2, 2, 1, 3, 4) == (2, 11)

    def test_spot_value(self):
        rows = kernel_series_rep(2, 1, 2, 1, [5])
        assert rows == [(5, 154, 0)]

    def test_drops_infeasible_with_warning(self):
        with pytest.warns(UserWarning, match="dropped"):
            rows = kernel_series_rep(2, 1, 2, 1, range(1, 6))
        assert [m for m, _, _ in rows] == [3, 4, 5]

    def test_empty_range_raises(self):
        with pytest.raises(ValueError), warnings.catch_warnings():
            warnings.simplefilter("ignore")
            kernel_series_rep(2, 1, 1, 1, [1, 2])

    def test_rejects_nonpositive_coefficients(self):
        with pytest.raises(ValueError):
            kernel_series_rep(2, 1, 0, 1, range(3, 8))

    def test_balanced_case_is_small(self):
        # a1 = a2: both sides grow strictly slower than m^(2n-1)
        rows = kernel_series_rep(2, 1, 1, 1, range(4, 12))
        for m, kernel, cokernel in rows:
            assert kernel == m * m - 1  # single component (m-1, m-2)
            assert cokernel == 0
