import random
from fractions import Fraction

import pytest

from src.jetlog.counting import (
    CountQuery,
    PointCounter,
    balanced_digits,
    bundle_ratio_check,
    count_points,
    enumerate_points,
    estimate_dimension,
    interpolate_counts,
    jet_dimension_table,
    least_squares_slope,
    linear_bound_check,
    stratum_count,
    stratum_query,
)
from src.jetlog.counting import engine
from src.jetlog.counting.engine import chunk_bounds, residue_block
from src.jetlog.errors import BudgetExceeded, DomainMismatch
from src.jetlog.jets import AffineScheme, AtLeast, ContactCondition, jet_equations
from src.jetlog.symbolic import Ideal, parse_poly

XY = ("x", "y")


def scheme(*texts: str, variables=XY) -> AffineScheme:
    return AffineScheme(len(variables), Ideal(variables, tuple(parse_poly(t, variables) for t in texts)))


def ideal(*texts: str, variables=XY) -> Ideal:
    return Ideal(variables, tuple(parse_poly(t, variables) for t in texts))


def query(s: AffineScheme, n: int, p: int, *conditions: ContactCondition) -> CountQuery:
    return CountQuery(jet_equations(s, n), conditions, p)


class TestCountPoints:
    def test_node_first_jets(self):
        assert count_points(query(scheme("x*y"), 1, 2)) == 8

    def test_origin_of_the_line(self):
        assert count_points(query(scheme("x", variables=("x",)), 2, 3)) == 1

    def test_exact_contact_with_the_origin(self):
        plane = AffineScheme.affine_space(XY)
        q = query(plane, 1, 3, ContactCondition(ideal("x", "y"), 1))
        assert count_points(q) == 8

    def test_affine_space(self):
        assert count_points(query(AffineScheme.affine_space(XY), 2, 3)) == 3**6

    def test_empty_scheme(self):
        assert count_points(query(scheme("1"), 0, 3)) == 0

    @pytest.mark.parametrize("p", [5, 7])
    def test_cusp_first_jets(self, p):
        # p^2 over the singular point, p over each of the p - 1 smooth points
        assert count_points(query(scheme("x^2 + y^3"), 1, p)) == 2 * p * p - p

    @pytest.mark.parametrize("q", [3, 4, 5, 8, 9])
    def test_node_closed_form(self, q):
        assert count_points(query(scheme("x*y"), 1, q)) == 3 * q * q - 2 * q

    def test_field_size_must_be_a_prime_power(self):
        with pytest.raises(DomainMismatch):
            query(scheme("x*y"), 1, 6)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            count_points(query(scheme("x^2 + y^3"), 3, 5), budget=10)

    def test_residue_scan_is_charged_before_it_starts(self):
        names = tuple(f"x{i}" for i in range(8))
        quadric = scheme(" + ".join(f"{v}^2" for v in names), variables=names)
        counter = PointCounter(query(quadric, 0, 13), budget=10**6, workers=1)
        with pytest.raises(BudgetExceeded) as info:
            counter.run()
        assert info.value.required == 13**8
        assert info.value.budget == 10**6

    def test_block_size_does_not_change_the_count(self, monkeypatch):
        q = query(scheme("x^2 + y^3"), 2, 5)
        expected = count_points(q)
        monkeypatch.setattr(engine, "BLOCK_ROWS", 7)
        assert count_points(q) == expected

    def test_residue_block_is_lexicographic(self):
        block = residue_block(3, 2, 2, 6)
        assert block.tolist() == [[0, 2], [1, 0], [1, 1], [1, 2]]

    def test_counter_reports_evaluations(self):
        counter = PointCounter(query(scheme("x*y"), 1, 3), budget=10**6, workers=1)
        counter.run()
        assert counter.evaluations > 0

    def test_workers_do_not_change_the_count(self):
        q = query(scheme("x^2 + y^3"), 2, 5)
        assert count_points(q, workers=2) == count_points(q, workers=1)

    def test_workers_split_the_remaining_budget(self):
        # 9 residues, then 9 more below the singular point (0, 0)
        q = query(scheme("x*y"), 2, 3)
        counter = PointCounter(q, budget=18, workers=1)
        counter.run()
        assert counter.evaluations == 18
        with pytest.raises(BudgetExceeded):
            PointCounter(q, budget=18, workers=2).run()

    def test_chunk_bounds(self):
        assert chunk_bounds(9, 2) == [(0, 4), (4, 9)]
        assert chunk_bounds(2, 4) == [(0, 1), (1, 2)]
        assert chunk_bounds(0, 3) == []


class TestAgainstEnumeration:
    CASES = [
        ("x*y", 2, 2, ()),
        ("x*y", 2, 3, ()),
        ("x^2 + y^3", 2, 2, ()),
        ("x^2 + y^3", 2, 3, ()),
        ("x^2 + y^2 - 1", 1, 5, ()),
        ("x*y", 2, 3, (("x", 1),)),
        ("x^2 + y^3", 2, 3, (("x", "y", AtLeast(2)),)),
        ("x^2 - y^2", 2, 3, (("x", 0), ("y", 1))),
        ("x*y", 1, 4, ()),
        ("x^2 + y^3", 2, 4, ()),
        ("x^2 + y^2 - 1", 1, 9, ()),
        ("x*y", 2, 4, (("x", 1),)),
        ("x^2 - y^3", 1, 8, (("x", "y", AtLeast(1)),)),
    ]

    @pytest.mark.parametrize("equation,n,q,spec", CASES)
    def test_recursive_matches_enumeration(self, equation, n, q, spec):
        conditions = [ContactCondition(ideal(*c[:-1]), c[-1]) for c in spec]
        target = query(scheme(equation), n, q, *conditions)
        assert count_points(target) == enumerate_points(target)

    def test_monotone_in_conditions(self):
        base = query(scheme("x*y"), 2, 3)
        narrowed = query(scheme("x*y"), 2, 3, ContactCondition(ideal("x"), AtLeast(1)))
        assert count_points(narrowed) <= count_points(base)

    def test_enumeration_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_points(query(scheme("x*y"), 2, 3), budget=5)


class TestRequirementSets:
    def test_exact_conditions_expand_by_inclusion_exclusion(self):
        q = query(AffineScheme.affine_space(XY), 2, 3, ContactCondition(ideal("x"), 1))
        sets = list(q.requirement_sets())
        assert [sign for sign, _ in sets] == [1, -1]
        assert [reqs[0][1] for _, reqs in sets] == [1, 2]

    def test_base_ideal_needs_full_precision(self):
        q = query(scheme("x*y"), 2, 3)
        ((sign, reqs),) = list(q.requirement_sets())
        assert sign == 1
        assert reqs[0][1] == 3


class TestDimension:
    def test_plane(self):
        estimate = estimate_dimension(jet_equations(AffineScheme.affine_space(XY), 1), (), [2, 3, 5])
        assert estimate.dim == 4
        assert estimate.poly == [0, 0, 0, 0, 1]
        assert estimate.consistent

    def test_node_first_jets(self):
        estimate = estimate_dimension(jet_equations(scheme("x*y"), 1), (), [3, 5, 7])
        assert estimate.dim == 2
        assert estimate.count_polynomial == [0, -2, 3]
        assert estimate.primes_used == [3, 5, 7]

    def test_empty_scheme(self):
        estimate = estimate_dimension(jet_equations(scheme("1"), 0), (), [3, 5, 7])
        assert estimate.dim == "-inf"
        assert estimate.poly == [0]
        assert estimate.dimension == float("-inf")

    def test_needs_three_primes(self):
        with pytest.raises(ValueError):
            interpolate_counts([3, 5], [9, 25])

    def test_distinct_primes(self):
        with pytest.raises(ValueError):
            interpolate_counts([3, 3, 5], [9, 9, 25])

    def test_inconsistent_counts(self):
        estimate = interpolate_counts([2, 3, 5], [1, 2, 100])
        assert not estimate.consistent
        assert estimate.dim == 2
        assert estimate.poly is None
        assert estimate.warnings

    def test_balanced_digits(self):
        assert balanced_digits(65, 5) == [0, -2, -2, 1]
        assert balanced_digits(0, 5) == []

    def test_balanced_digits_rescue_high_degree(self):
        # q^4 - q through too few primes for plain interpolation
        counts = [p**4 - p for p in (5, 7, 11)]
        estimate = interpolate_counts([5, 7, 11], counts)
        assert estimate.consistent
        assert estimate.poly == [0, -1, 0, 0, 1]


class TestChecks:
    def test_cone_bundle_ratio(self, cone_fixture):
        report = bundle_ratio_check(cone_fixture.pair, 1, range(3), 3)
        assert report.verdict
        assert [row.n for row in report.rows] == [1, 2]
        assert [row.in_regime for row in report.rows] == [False, True]
        assert report.rows[0].matches is None
        assert report.rows[1].ratio == "9"
        assert [row.count for row in report.rows] == [8, 72]

    def test_cone_stratum_counts_only_arc_truncations(self, cone_fixture):
        pair = cone_fixture.pair
        # nonzero gamma_1 on the cone, gamma_2 on the tangent plane B(gamma_1, .) = 0
        assert stratum_count(pair, 2, 1, 3, on_y=False) == 72
        assert stratum_count(pair, 2, 1, 5, on_y=False) == (5**2 - 1) * 5**2
        target = stratum_query(pair, 2, 1, on_y=False)
        assert target.system.level == 3
        assert target.fibre_dim == 3
        assert count_points(target.count_query(3)) == 72 * 3**3

    def test_unlifted_jets_overcount_the_cone_stratum(self, cone_fixture):
        # every 2-jet over the vertex with gamma_1 on the cone, arcs or not
        system = jet_equations(cone_fixture.scheme, 2)
        z = ContactCondition(cone_fixture.pair.z_ideal, 1)
        assert count_points(CountQuery(system, (z,), 3)) == 216

    def test_cusp_linear_bound(self, cusp_fixture):
        report = linear_bound_check(cusp_fixture.scheme, 0, 4, [5, 7, 11, 13], ambient=cusp_fixture.pair)
        assert report.verdict
        assert [row.dim for row in report.rows] == ["1", "2", "3", "4", "5"]
        assert report.slope == "1"

    def test_cusp_dimension_table(self, cusp_fixture):
        table = jet_dimension_table(cusp_fixture.pair, 2, 0, [5, 7, 11, 13])
        assert table == {(0, 0): 1, (0, 1): 2, (0, 2): 3}

    def test_stratum_count_on_smooth_plane(self, point_fixture):
        # the only 2-jet on the origin is the zero jet
        assert stratum_count(point_fixture.pair, 2, 0, 3) == 1
        assert stratum_count(point_fixture.pair, 2, 0, 3, y_order=1) == 8 * 3**2

    def test_least_squares_slope(self):
        assert least_squares_slope([(0, 1), (1, 3), (2, 5)]) == 2
        assert least_squares_slope([(0, 1)]) == Fraction(0)


class TestSmoothCounts:
    # graphs of polynomial maps, each isomorphic to an affine space
    GRAPHS = [
        (("x", "y"), "y - x^2", 1),
        (("x", "y"), "x - y^3 - y", 1),
        (("x", "y", "z"), "z - x*y", 2),
    ]
    FIELDS = [2, 3, 4, 5, 7, 8, 9]

    def test_graph_jets_fill_an_affine_space(self):
        rng = random.Random(2024)
        for _ in range(12):
            variables, equation, d = rng.choice(self.GRAPHS)
            q = rng.choice(self.FIELDS)
            n = rng.randint(0, 2)
            total = count_points(query(scheme(equation, variables=variables), n, q))
            assert total == q ** (d * (n + 1))

    @pytest.mark.parametrize("equation", ["x^2 + y^2 - 1", "x*y - 1"])
    def test_smooth_jets_form_a_bundle(self, equation):
        rng = random.Random(equation)
        for _ in range(6):
            q = rng.choice([3, 5, 7, 9])
            n = rng.randint(0, 2)
            low = count_points(query(scheme(equation), n, q))
            high = count_points(query(scheme(equation), n + 1, q))
            assert high == q * low
