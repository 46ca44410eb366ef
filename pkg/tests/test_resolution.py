import random
from dataclasses import replace
from fractions import Fraction
from math import inf

import pytest

from src.jetlog.counting import CountQuery, count_points, jet_dimension_table
from src.jetlog.errors import (
    BadFixture,
    IncompleteTable,
    InvalidResolutionData,
    MissingStratum,
    NonIntegerExponent,
    NotIntegrable,
)
from src.jetlog.grothendieck import PT, MotivicElement, dim, specialize
from src.jetlog.jets import AffineScheme, AtLeast, ContactCondition, jet_equations
from src.jetlog.resolution import (
    Divisor,
    ResolutionData,
    deciding_divisors,
    downstairs_measure,
    enumerate_M,
    integrate,
    is_klt,
    is_lc,
    klt_margin,
    lct,
    main_theorem_check,
    measure_level_set,
    parse_subset_key,
    pivot_bound,
    required_cells,
    s_dim,
    s_element,
    subset_key,
    transformation_check,
    upstairs_measure,
)
from src.jetlog.symbolic import Ideal, Poly

XY = ("x", "y")
CUSP_JET_DIMS = [1, 2, 3, 4, 5, 7, 8]


def L(exp: int = 1, coeff: int = 1) -> MotivicElement:
    return MotivicElement.lefschetz(exp, coeff)


def random_stratum(rng: random.Random, top: int) -> MotivicElement:
    """A class of dimension <= top with a positive leading coefficient, or zero."""
    if rng.random() < 0.2:
        return MotivicElement.zero()
    degree = rng.randint(0, top)
    coeffs = [rng.randint(-3, 3) for _ in range(degree)] + [rng.randint(1, 3)]
    return MotivicElement.polynomial_in_L(coeffs)


def random_data(rng: random.Random) -> ResolutionData:
    d = 3
    count = rng.randint(1, 3)
    divisors = []
    for i in range(count):
        y, z = rng.randint(0, 4), rng.randint(0, 4)
        if y == 0 and z == 0:
            y = 1
        divisors.append(Divisor(f"D{i}", y, Fraction(rng.randint(0, 3)), z))
    strata = {}
    for mask in range(1 << count):
        subset = frozenset(i for i in range(count) if mask >> i & 1)
        strata[subset] = random_stratum(rng, d - len(subset))
    return ResolutionData(d=d, divisors=tuple(divisors), strata=strata)


def full_data(rng: random.Random) -> ResolutionData:
    """Like random_data, but every D_J° has dimension exactly d - |J|."""
    data = random_data(rng)
    strata = {}
    for subset in data.strata:
        degree = data.d - len(subset)
        coeffs = [rng.randint(-3, 3) for _ in range(degree)] + [rng.randint(1, 3)]
        strata[subset] = MotivicElement.polynomial_in_L(coeffs)
    return replace(data, strata=strata)


class TestResolutionData:
    def test_missing_empty_stratum(self):
        with pytest.raises(InvalidResolutionData):
            ResolutionData(d=2, divisors=(Divisor("E", 1, Fraction(1)),), strata={})

    def test_divisor_needs_y_or_z(self):
        with pytest.raises(InvalidResolutionData):
            ResolutionData(d=2, divisors=(Divisor("E", 0, Fraction(1)),), strata={frozenset(): L(2)})

    def test_discrepancy_must_match_index(self):
        half = Divisor("E", 1, Fraction(1, 2))
        with pytest.raises(InvalidResolutionData):
            ResolutionData(d=2, divisors=(half,), strata={frozenset(): L(2)})
        ResolutionData(d=2, divisors=(half,), strata={frozenset(): L(2)}, r=2)

    def test_stratum_dimension_bound(self):
        with pytest.raises(InvalidResolutionData):
            ResolutionData(
                d=2,
                divisors=(Divisor("E", 1, Fraction(1)),),
                strata={frozenset(): L(2), frozenset({0}): L(2)},
            )

    def test_leading_coefficient_positive(self):
        with pytest.raises(InvalidResolutionData):
            ResolutionData(d=2, divisors=(), strata={frozenset(): L(2, -1)})

    def test_unknown_divisor_index(self):
        with pytest.raises(InvalidResolutionData):
            ResolutionData(d=2, divisors=(), strata={frozenset(): L(2), frozenset({0}): L(1)})

    def test_subset_keys(self):
        assert subset_key({2, 0}) == "0,2"
        assert parse_subset_key("") == frozenset()
        assert parse_subset_key("1, 3") == frozenset({1, 3})
        with pytest.raises(InvalidResolutionData):
            parse_subset_key("a,b")

    def test_explicit_and_absent_strata(self, cusp_fixture):
        data = cusp_fixture.resolution
        assert data.stratum({0, 1}, required=True).is_zero()
        trimmed = replace(data, strata={k: v for k, v in data.strata.items() if k != frozenset({0, 1})})
        assert trimmed.stratum({0, 1}).is_zero()
        with pytest.raises(MissingStratum):
            trimmed.stratum({0, 1}, required=True)

    def test_spec_round_trip(self, cusp_fixture):
        data = cusp_fixture.resolution
        assert ResolutionData.from_spec(data.to_spec()) == data


class TestThresholds:
    def test_cusp_lct(self, cusp_fixture):
        assert lct(cusp_fixture.resolution) == Fraction(5, 6)
        assert deciding_divisors(cusp_fixture.resolution) == ["E3"]

    def test_point_lct(self, point_fixture):
        assert lct(point_fixture.resolution) == 2

    def test_no_divisor_over_y(self, cone_fixture):
        assert lct(replace(cone_fixture.resolution, divisors=(Divisor("E", 0, Fraction(0), 1),))) == float("inf")

    def test_boundary_is_lc_not_klt(self, point_fixture):
        data = point_fixture.resolution
        assert klt_margin(data, 2) == [0]
        assert not is_klt(data, 2)
        assert is_lc(data, 2)

    def test_cusp_below_and_above_threshold(self, cusp_fixture):
        data = cusp_fixture.resolution
        assert is_klt(data, Fraction(1, 2))
        assert not is_klt(data, 1)
        assert not is_lc(data, 1)

    def test_klt_implies_lc_and_shrinks_with_q(self):
        rng = random.Random(1618)
        for _ in range(200):
            data = random_data(rng)
            low = Fraction(rng.randint(0, 8), 4)
            high = low + Fraction(rng.randint(0, 8), 4)
            for q in (low, high):
                assert not is_klt(data, q) or is_lc(data, q)
            assert not is_klt(data, high) or is_klt(data, low)
            assert not is_lc(data, high) or is_lc(data, low)

    def test_klt_exactly_when_every_s_dim_is_below_d(self):
        rng = random.Random(4142)
        for _ in range(100):
            data = full_data(rng)
            q = Fraction(rng.randint(0, 12), 4)
            cells = [(e, n) for e in range(5) for n in range(4)]
            below = all(s_dim(data, q, e, n, m_shift=1) < data.d for e, n in cells)
            assert is_klt(data, q) == below


class TestLevelSets:
    def test_enumerate_M(self, cusp_fixture):
        data = cusp_fixture.resolution
        assert enumerate_M(data, [0, 3], 4, 0, m_shift=1) == [(1, 3), (2, 1)]
        assert enumerate_M(data, [2], 5, 0, m_shift=1) == [(1,)]
        assert enumerate_M(data, [2], 5, 0, m_shift=0) == []

    def test_enumerate_M_with_z(self, cone_fixture):
        data = cone_fixture.resolution
        assert enumerate_M(data, [0], 1, 2, m_shift=1) == [(2,)]
        assert enumerate_M(data, [0], 1, 1, m_shift=1) == []

    def test_negative_e(self, cone_fixture):
        with pytest.raises(ValueError):
            enumerate_M(cone_fixture.resolution, [0], 1, -1)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_axes_measure_matches_point_counts(self, axes_data, p):
        plane = AffineScheme.affine_space(XY)
        level = 3
        for m1 in range(4):
            for m2 in range(4 - m1):
                conditions = (
                    ContactCondition(Ideal(XY, (Poly.var("x", XY),)), m1),
                    ContactCondition(Ideal(XY, (Poly.var("y", XY),)), m2),
                )
                count = count_points(CountQuery(jet_equations(plane, level), conditions, p))
                expected = Fraction(count, p ** (2 * level))
                assert specialize(measure_level_set(axes_data, (m1, m2)), p) == expected

    def test_measure_rejects_bad_vectors(self, axes_data):
        with pytest.raises(ValueError):
            measure_level_set(axes_data, (1,))
        with pytest.raises(ValueError):
            measure_level_set(axes_data, (1, -1))

    def test_level_sets_add_up_to_their_union(self, axes_data):
        rng = random.Random(99)
        plane = AffineScheme.affine_space(XY)
        level = 3
        x_ideal = Ideal(XY, (Poly.var("x", XY),))
        y_ideal = Ideal(XY, (Poly.var("y", XY),))

        def measure(*conditions: ContactCondition, p: int) -> Fraction:
            count = count_points(CountQuery(jet_equations(plane, level), conditions, p))
            return Fraction(count, p ** (2 * level))

        for _ in range(6):
            p = rng.choice([3, 5])
            m1, top = rng.randint(0, 2), rng.randint(0, 2)
            x_exact = ContactCondition(x_ideal, m1)
            pieces = sum(
                (specialize(measure_level_set(axes_data, (m1, m2)), p) for m2 in range(top + 1)),
                Fraction(0),
            )
            tail = measure(x_exact, ContactCondition(y_ideal, AtLeast(top + 1)), p=p)
            assert pieces + tail == measure(x_exact, p=p)


class TestSDim:
    def test_cusp_values(self, cusp_fixture):
        data = cusp_fixture.resolution
        half = Fraction(1, 2)
        assert s_dim(data, half, 0, 0, m_shift=1) == Fraction(3, 2)
        assert s_dim(data, half, 0, 4, m_shift=1) == Fraction(-1, 2)
        assert s_dim(data, half, 0, 5, m_shift=1) == 0

    def test_matches_expanded_element(self):
        rng = random.Random(2718)
        for _ in range(100):
            data = random_data(rng)
            q = Fraction(rng.randint(0, 4), 2)
            n, e = rng.randint(0, 8), rng.randint(0, 8)
            assert s_dim(data, q, e, n) == dim(s_element(data, q, e, n))

    def test_missing_stratum_is_reported(self, cusp_fixture):
        data = cusp_fixture.resolution
        trimmed = replace(data, strata={k: v for k, v in data.strata.items() if k != frozenset({0, 1})})
        with pytest.raises(MissingStratum):
            s_dim(trimmed, 1, 0, 4, m_shift=1)


class TestIntegrate:
    def test_blowup_recovers_the_plane(self):
        data = ResolutionData(
            d=2,
            divisors=(Divisor("E", 1, Fraction(1)),),
            strata={
                frozenset(): MotivicElement.polynomial_in_L((-1, 0, 1)),
                frozenset({0}): MotivicElement.polynomial_in_L((1, 1)),
            },
        )
        assert integrate(data) == L(2)

    def test_divergent_weights(self, point_fixture):
        with pytest.raises(NotIntegrable):
            integrate(point_fixture.resolution, {"E": -1})

    def test_unknown_divisor(self, point_fixture):
        with pytest.raises(ValueError):
            integrate(point_fixture.resolution, {"F": 1})

    def test_truncation_cutoff(self, point_fixture):
        element = integrate(point_fixture.resolution, cutoff=-4)
        assert all(m.dim + e > -4 for (m, e) in element.terms)


class TestMainTheorem:
    @staticmethod
    def cusp_dims() -> dict[tuple[int, int], int]:
        return {(0, n): value for n, value in enumerate(CUSP_JET_DIMS)}

    def test_klt_at_one_half(self, cusp_fixture):
        pair = cusp_fixture.pair.derive(q=Fraction(1, 2))
        report = main_theorem_check(pair, cusp_fixture.resolution, self.cusp_dims())
        assert report.verdict
        assert report.resolution_verdict is True
        assert report.agree is True
        assert all(row.pivot_holds for row in report.rows)
        assert report.rows[0].s_dim == "3/2"
        assert report.rows[0].pivot_rhs == "3/2"

    def test_violated_at_one(self, cusp_fixture):
        pair = cusp_fixture.pair.derive(q=Fraction(1))
        report = main_theorem_check(pair, cusp_fixture.resolution, self.cusp_dims())
        assert not report.verdict
        assert report.first_violation == [0, 0]
        assert report.resolution_verdict is False
        assert report.agree is True

    def test_lc_mode_at_threshold(self, cusp_fixture):
        pair = cusp_fixture.pair.derive(q=Fraction(5, 6))
        report = main_theorem_check(pair, None, self.cusp_dims(), mode="lc")
        assert report.verdict
        assert report.resolution_verdict is None

    def test_incomplete_table(self, cusp_fixture):
        dims = self.cusp_dims()
        del dims[(0, 3)]
        with pytest.raises(IncompleteTable) as exc:
            main_theorem_check(cusp_fixture.pair, None, dims, n_max=6, e_max=0)
        assert exc.value.missing == [(0, 3)]

    def test_needs_the_hypothesis(self, cone_fixture):
        pair = replace(cone_fixture.pair, l=1, hypothesis_asserted=False)
        with pytest.raises(BadFixture):
            main_theorem_check(pair, None, {(0, 0): 2})

    def test_dimension_mismatch(self, cusp_fixture, cone_fixture):
        with pytest.raises(InvalidResolutionData):
            main_theorem_check(
                cusp_fixture.pair, replace(cone_fixture.resolution, d=3), self.cusp_dims()
            )

    def test_pivot_bound(self):
        assert pivot_bound(5, 2, Fraction(1, 2), 0, 4, 1) == Fraction(-1, 2)
        assert pivot_bound(float("-inf"), 2, Fraction(1, 2), 0, 4, 1) == float("-inf")

    def test_all_empty_strata_are_flagged(self, cone_fixture):
        pair = replace(cone_fixture.pair, l=2)
        dims = {cell: float("-inf") for cell in required_cells(3, 1, pair.theta)}
        report = main_theorem_check(pair, cone_fixture.resolution, dims)
        assert report.verdict
        assert any("hold vacuously" in w for w in report.warnings)

    def test_cone_cells_with_jets(self, cone_fixture):
        dims = {(0, 0): -inf, (0, 1): -inf, (0, 2): -inf, (1, 2): 4}
        report = main_theorem_check(cone_fixture.pair.derive(q=3), cone_fixture.resolution, dims)
        assert report.first_violation == [1, 2]
        assert report.agree is True
        assert not any("vacuously" in w for w in report.warnings)

    def test_empty_y_is_klt_for_every_q(self, a2_fixture):
        dims = jet_dimension_table(a2_fixture.pair, 2, 0, [2, 3, 5])
        assert set(dims.values()) == {-inf}
        rng = random.Random(8)
        for _ in range(10):
            q = Fraction(rng.randint(1, 40), rng.randint(1, 4))
            report = main_theorem_check(a2_fixture.pair.derive(q=q), a2_fixture.resolution, dims)
            assert report.verdict
            assert report.resolution_verdict is True
            assert report.agree is True


class TestTransformation:
    def test_point_blowup(self, point_fixture):
        report = transformation_check(
            point_fixture.pair, point_fixture.resolution, m_max=4, e_max=0, primes=[2, 3, 5]
        )
        assert report.equal
        assert report.summary() == "EQUAL at all primes"
        row = next(r for r in report.rows if r.prime == 3 and r.m == 2)
        assert row.downstairs == "8/81"

    def test_node(self, node_fixture):
        report = transformation_check(
            node_fixture.pair, node_fixture.resolution, m_max=3, e_max=0, primes=[3, 5]
        )
        assert report.equal
        row = next(r for r in report.rows if r.prime == 3 and r.m == 2)
        assert row.upstairs == "4/3"

    def test_cone_with_jacobian_order(self, cone_fixture):
        report = transformation_check(
            cone_fixture.pair, cone_fixture.resolution, m_max=2, e_max=1, primes=[3, 5]
        )
        assert report.equal

    def test_smooth_ambient_positive_e(self, point_fixture):
        assert downstairs_measure(point_fixture.pair, 1, 1, 3) == (Fraction(0), 2)
        assert upstairs_measure(point_fixture.resolution, 1, 1, 3) == 0

    def test_wrong_point_data_mismatches(self, point_fixture):
        wrong = replace(
            point_fixture.resolution,
            divisors=(Divisor("E", 1, Fraction(0)),),
        )
        report = transformation_check(point_fixture.pair, wrong, m_max=2, e_max=0, primes=[3])
        assert not report.equal
        assert report.summary() == "MISMATCH at primes 3"

    def test_fractional_weight(self, cone_fixture):
        with pytest.raises(NonIntegerExponent):
            downstairs_measure(replace(cone_fixture.pair, r=2), 0, 1, 3)

    def test_point_class_stratum(self):
        data = ResolutionData(
            d=0, divisors=(), strata={frozenset(): MotivicElement.of_class(PT)}
        )
        assert upstairs_measure(data, 0, 0, 5) == 1
