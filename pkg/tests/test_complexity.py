import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmulticore.circuit import CheckpointSchedule, CircuitSpec, run_with_checkpoints
from qmulticore.complexity import (
    FluctuationCurve,
    distance_to_haar,
    fluctuation_curve,
    haar_probabilities,
    haar_reference,
    integrated_dh,
    lorenz,
    majorizes,
)
from qmulticore.topology import Architecture, Partition

from oracles import fluctuation_reference


@st.composite
def prob_vectors(draw, dim=None):
    size = dim if dim is not None else draw(st.integers(2, 12))
    raw = draw(
        st.lists(
            st.floats(0.0, 1.0, allow_nan=False),
            min_size=size,
            max_size=size,
        ).filter(lambda xs: sum(xs) > 1e-6)
    )
    arr = np.array(raw, dtype=float)
    return arr / arr.sum()


class TestLorenz:
    def test_uniform(self):
        curve = lorenz([0.25, 0.25, 0.25, 0.25])
        assert np.allclose(curve.cumulants, [0.25, 0.5, 0.75, 1.0], atol=1e-15)

    def test_delta(self):
        assert np.allclose(lorenz([1, 0, 0, 0]).cumulants, [1, 1, 1, 1], atol=1e-15)

    def test_hand_sorted_case(self):
        assert np.allclose(lorenz([0.2, 0.5, 0.3]).cumulants, [0.5, 0.8, 1.0], atol=1e-15)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            lorenz([0.6, 0.6, -0.2])

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            lorenz([0.3, 0.3])

    @given(prob_vectors())
    def test_bounded_by_uniform_and_delta(self, p):
        # every distribution majorizes the uniform one and is majorized by a delta
        curve = lorenz(p).cumulants
        uniform = np.arange(1, len(p) + 1) / len(p)
        assert np.all(curve >= uniform - 1e-12)
        assert np.all(curve <= 1 + 1e-12)
        assert np.all(np.diff(curve) >= -1e-15)  # nondecreasing
        assert np.all(np.diff(curve, 2) <= 1e-12)  # concave: increments shrink
        assert abs(curve[-1] - 1.0) < 1e-10


class TestMajorizes:
    def test_simple_dominance(self):
        assert majorizes([0.75, 0.25, 0, 0], [0.5, 0.5, 0, 0])

    def test_reflexive(self):
        p = [0.4, 0.3, 0.2, 0.1]
        assert majorizes(p, p)

    def test_hand_checked_pair_and_reverse(self):
        q = [0.6, 0.1, 0.3]
        p = [0.5, 0.4, 0.1]
        assert majorizes(q, p)       # F_q = (0.6, 0.9) >= F_p = (0.5, 0.9)
        assert not majorizes(p, q)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            majorizes([0.5, 0.5], [0.5, 0.3, 0.2])

    @given(prob_vectors(dim=6), prob_vectors(dim=6))
    def test_antisymmetry_up_to_permutation(self, p, q):
        if majorizes(q, p) and majorizes(p, q):
            assert np.allclose(
                np.sort(p)[::-1], np.sort(q)[::-1], atol=1e-10
            )

    @given(prob_vectors(dim=8))
    def test_delta_majorizes_everything(self, p):
        delta = np.zeros(8)
        delta[0] = 1.0
        uniform = np.full(8, 0.125)
        assert majorizes(delta, p)
        assert majorizes(p, uniform)


class TestFluctuationCurve:
    def test_identical_members_give_zero(self):
        p = [0.4, 0.3, 0.2, 0.1]
        curve = fluctuation_curve([p, p, p])
        assert np.allclose(curve.values, 0.0, atol=1e-15)

    def test_two_member_std_is_half_gap(self):
        # members with F(1) = 0.5 and 0.7: population std at k=1 is 0.1
        curve = fluctuation_curve([[0.5, 0.5], [0.7, 0.3]])
        assert abs(curve.values[0] - 0.1) < 1e-15
        assert abs(curve.values[-1]) < 1e-12  # cumulants all end at 1

    def test_rejects_singleton(self):
        with pytest.raises(ValueError):
            fluctuation_curve([[0.5, 0.5]])

    def test_rejects_unnormalized_member(self):
        with pytest.raises(ValueError):
            fluctuation_curve([[0.5, 0.5], [0.5, 0.4]])

    def test_matches_independent_reference_on_haar_states(self):
        rng = np.random.default_rng(42)
        ensemble = haar_probabilities(3, 100, rng)
        fast = fluctuation_curve(ensemble).values
        slow = fluctuation_reference(list(ensemble))
        assert np.max(np.abs(fast - slow)) < 1e-12

    def test_permutation_invariant(self):
        rng = np.random.default_rng(5)
        ensemble = haar_probabilities(4, 40, rng)
        shuffled = ensemble[rng.permutation(40)]
        assert np.allclose(
            fluctuation_curve(ensemble).values,
            fluctuation_curve(shuffled).values,
            atol=1e-12,
        )


class TestHaarReference:
    def test_one_qubit_closed_form(self):
        # p = (u, 1-u) with u uniform; F(1) = max(u, 1-u) ~ U(0.5, 1),
        # so std[F(1)] = sqrt(1/48)
        curve = haar_reference(1, num_samples=100_000, seed=8)
        assert abs(curve.values[0] - 1 / np.sqrt(48)) < 0.005
        assert abs(curve.values[1]) < 1e-12

    def test_deterministic_given_seed(self):
        a = haar_reference(5, 200, seed=31)
        b = haar_reference(5, 200, seed=31)
        assert np.array_equal(a.values, b.values)

    def test_rejects_bad_sample_count(self):
        with pytest.raises(ValueError):
            haar_reference(3, num_samples=1)

    @staticmethod
    def _bootstrap_se(probs, n_boot, rng):
        cumulants = np.cumsum(np.sort(probs, axis=1)[:, ::-1], axis=1)
        m = cumulants.shape[0]
        stds = np.empty((n_boot, cumulants.shape[1]))
        for b in range(n_boot):
            stds[b] = cumulants[rng.integers(0, m, m)].std(axis=0)
        return stds.std(axis=0)

    def test_disjoint_seeds_agree_within_estimator_error(self):
        seed_a, seed_b, samples = 101, 202, 1000
        curve_a = haar_reference(6, samples, seed_a).values
        curve_b = haar_reference(6, samples, seed_b).values
        boot = np.random.default_rng(9)
        se_a = self._bootstrap_se(
            haar_probabilities(6, samples, np.random.default_rng(seed_a)), 200, boot
        )
        se_b = self._bootstrap_se(
            haar_probabilities(6, samples, np.random.default_rng(seed_b)), 200, boot
        )
        bound = 3 * np.sqrt(se_a**2 + se_b**2) + 1e-12
        assert np.all(np.abs(curve_a - curve_b) <= bound)


class TestDistanceToHaar:
    def test_zero_for_identical(self):
        c = haar_reference(3, 50, seed=1)
        assert distance_to_haar(c, c) == 0.0

    def test_single_entry_difference(self):
        a = FluctuationCurve(np.zeros(16))
        values = np.zeros(16)
        values[5] = 0.1
        b = FluctuationCurve(values)
        assert abs(distance_to_haar(a, b) - 0.1) < 1e-15

    def test_uniform_offset_over_4096(self):
        a = FluctuationCurve(np.zeros(4096))
        b = FluctuationCurve(np.full(4096, 0.03))
        assert abs(distance_to_haar(a, b) - 1.92) < 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            distance_to_haar(FluctuationCurve(np.zeros(4)), FluctuationCurve(np.zeros(8)))

    def test_symmetry_and_triangle_inequality(self):
        rng = np.random.default_rng(77)
        x, y, z = (FluctuationCurve(rng.random(32)) for _ in range(3))
        assert distance_to_haar(x, y) == distance_to_haar(y, x)
        assert distance_to_haar(x, z) <= (
            distance_to_haar(x, y) + distance_to_haar(y, z) + 1e-12
        )

    def test_haar_ensembles_converge_with_sample_count(self):
        # bigger ensembles and references sit closer to each other
        small = distance_to_haar(
            fluctuation_curve(haar_probabilities(6, 10, np.random.default_rng(303))),
            haar_reference(6, 50, seed=304),
        )
        large = distance_to_haar(
            fluctuation_curve(haar_probabilities(6, 100, np.random.default_rng(305))),
            haar_reference(6, 1000, seed=306),
        )
        assert large < small

    def test_haar_ensemble_beats_shallow_circuits_at_six_qubits(self):
        ref = haar_reference(6, 1000, seed=301)
        haar_dh = distance_to_haar(
            fluctuation_curve(haar_probabilities(6, 100, np.random.default_rng(302))),
            ref,
        )
        schedule = CheckpointSchedule((200,))
        snaps = [
            run_with_checkpoints(
                CircuitSpec(Partition(3, 2), Architecture.RING, 10,
                            total_gates=200, seed=400 + i),
                schedule,
            )[0]
            for i in range(100)
        ]
        circuit_dh = distance_to_haar(fluctuation_curve(np.array(snaps)), ref)
        assert haar_dh < circuit_dh


class TestIntegratedDh:
    def test_constant_over_default_grid(self):
        points = [(g, 2.5) for g in range(200, 2001, 100)]
        assert abs(integrated_dh(points) - 2.5 * 1800) < 1e-9

    def test_triangle(self):
        assert abs(integrated_dh([(200, 1.0), (2000, 0.0)]) - 900.0) < 1e-12

    def test_two_trapezoids_by_hand(self):
        assert abs(integrated_dh([(200, 4.0), (300, 2.0), (400, 1.0)]) - 450.0) < 1e-12

    def test_rejects_short_input(self):
        with pytest.raises(ValueError):
            integrated_dh([(200, 1.0)])

    def test_rejects_unsorted_or_duplicate(self):
        with pytest.raises(ValueError):
            integrated_dh([(300, 1.0), (200, 2.0)])
        with pytest.raises(ValueError):
            integrated_dh([(200, 1.0), (200, 2.0)])

    @given(
        st.lists(st.floats(0, 10, allow_nan=False), min_size=3, max_size=8),
        st.lists(st.floats(0, 10, allow_nan=False), min_size=8, max_size=8),
        st.floats(0.1, 5),
    )
    @settings(max_examples=50)
    def test_linear_in_ordinates_and_additive_over_splits(self, ys, ys2, scale):
        xs = [100.0 * (i + 1) for i in range(len(ys))]
        points = list(zip(xs, ys))
        scaled = [(x, scale * y) for x, y in points]
        assert integrated_dh(scaled) == pytest.approx(
            scale * integrated_dh(points), rel=1e-9, abs=1e-9
        )
        if len(points) >= 4:
            mid = len(points) // 2
            left = integrated_dh(points[: mid + 1])
            right = integrated_dh(points[mid:])
            assert left + right == pytest.approx(integrated_dh(points), rel=1e-9, abs=1e-9)
