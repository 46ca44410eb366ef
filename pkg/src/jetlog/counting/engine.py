"""t-adic point counting over finite fields.

A requirement "ord_t g(y(t), t) >= M" on jets y in (F_q[t]/t^P)^N is
solved one t-adic digit at a time. Residues y(0) in F_q^N are scanned
with numpy in fixed-size blocks; a surviving residue at which the active
constraints have a Jacobian of full row rank lifts in exactly
q^{N(P-1) - sum(M_i - 1)} ways. Every other survivor is expanded as
y = y0 + t*y' and each constraint is divided by the power of t it picks
up, which lowers both M_i and P.

The whole scan of F_q^N is charged against the budget before the first
block is built.
"""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from sympy import GF as SympyGF
from sympy.polys.matrices import DomainMatrix

from ..config import settings
from ..errors import BudgetExceeded
from ..logging import bind_run_id, get_run_id, logger
from ..symbolic import GF, Domain, Poly
from .query import CountQuery

T = "_t"
BLOCK_ROWS = 1 << 16


@dataclass(frozen=True)
class Constraint:
    poly: Poly  # over GF(q) in (*variables, T)
    order: int


def _truncate_t(g: Poly, m: int) -> Poly:
    return Poly(g.variables, {mono: c for mono, c in g.terms.items() if mono[-1] < m}, g.domain)


def _at_t0(g: Poly) -> Poly:
    return Poly(
        g.variables[:-1],
        {mono[:-1]: c for mono, c in g.terms.items() if mono[-1] == 0},
        g.domain,
    )


def _monic(g: Poly) -> Poly:
    lead = g.sorted_terms()[0][1]
    return g if lead == 1 else g.scalar(g.domain.inv(lead))


def _merge(constraints: Sequence[Constraint]) -> dict[Poly, int]:
    """Monic polynomial -> largest required order; ord >= a and >= b is ord >= max(a, b)."""
    merged: dict[Poly, int] = {}
    for c in constraints:
        if c.order <= 0 or c.poly.is_zero():
            continue
        g = _monic(c.poly)
        merged[g] = max(merged.get(g, 0), c.order)
    return merged


def normalise(constraints: Sequence[Constraint]) -> list[Constraint]:
    """Drop satisfied constraints, strip t-power factors and merge duplicates."""
    reduced: list[Constraint] = []
    for g, order in _merge(constraints).items():
        g = _truncate_t(g, order)
        if g.is_zero():
            continue
        v = min(mono[-1] for mono in g.terms)
        if v:
            g = Poly(
                g.variables, {mono[:-1] + (mono[-1] - v,): x for mono, x in g.terms.items()}, g.domain
            )
        reduced.append(Constraint(g, order - v))
    return [Constraint(g, order) for g, order in _merge(reduced).items()]


def residue_block(q: int, n_vars: int, start: int, stop: int) -> np.ndarray:
    """Rows ``start..stop-1`` of F_q^N in lexicographic order, as element codes."""
    index = np.arange(start, stop, dtype=np.int64)
    if n_vars == 0:
        return np.zeros((len(index), 0), dtype=np.int64)
    weights = q ** np.arange(n_vars - 1, -1, -1, dtype=np.int64)
    return (index[:, None] // weights) % q


def evaluate(poly: Poly, points: np.ndarray, domain: Domain) -> np.ndarray:
    """Evaluate a GF(q) polynomial at every row of ``points``."""
    field = domain.field
    powers: dict[tuple[int, int], np.ndarray] = {}

    def power(j: int, e: int) -> np.ndarray:
        if (j, e) not in powers:
            column = points[:, j]
            powers[(j, e)] = column if e == 1 else field.mul_arrays(power(j, e - 1), column)
        return powers[(j, e)]

    total = np.zeros(len(points), dtype=np.int64)
    for mono, coeff in poly.terms.items():
        term = np.full(len(points), int(coeff), dtype=np.int64)
        for j, e in enumerate(mono):
            if e:
                term = field.mul_arrays(term, power(j, e))
        total = field.add_arrays(total, term)
    return total


class _Lifter:
    def __init__(self, variables: Sequence[str], q: int, budget: int, spent: int = 0):
        self.variables = tuple(variables)
        self.ring = self.variables + (T,)
        self.q = q
        self.n_vars = len(self.variables)
        self.domain = GF(q)
        self.budget = budget
        self.evaluations = spent
        self._t = Poly.var(T, self.ring, self.domain)

    @property
    def residues(self) -> int:
        return self.q**self.n_vars

    def charge(self, amount: int) -> None:
        self.evaluations += amount
        if self.evaluations > self.budget:
            raise BudgetExceeded(self.evaluations, self.budget)

    def count(self, constraints: Sequence[Constraint], precision: int) -> int:
        constraints = normalise(constraints)
        if not constraints:
            return self.q ** (self.n_vars * precision)
        top = max(c.order for c in constraints)
        free = self.n_vars * (precision - top)
        return self.q**free * self.count_range(constraints, top, 0, self.residues)

    def count_range(
        self, constraints: Sequence[Constraint], precision: int, start: int, stop: int
    ) -> int:
        """Lifts of the residues with lexicographic index in ``start..stop-1``."""
        self.charge(stop - start)
        total = 0
        for low in range(start, stop, BLOCK_ROWS):
            points = residue_block(self.q, self.n_vars, low, min(stop, low + BLOCK_ROWS))
            total += self.lift(constraints, precision, self.survivors(constraints, points))
        return total

    def survivors(self, constraints: Sequence[Constraint], points: np.ndarray) -> np.ndarray:
        mask = np.ones(len(points), dtype=bool)
        for c in constraints:
            mask &= evaluate(_at_t0(c.poly), points, self.domain) == 0
            if not mask.any():
                break
        return points[mask]

    def lift(self, constraints: Sequence[Constraint], precision: int, residues: np.ndarray) -> int:
        if len(residues) == 0:
            return 0
        active = [c for c in constraints if c.order >= 2]
        regular = self.regular(active, residues)
        total = 0
        if regular.any():
            exponent = self.n_vars * (precision - 1) - sum(c.order - 1 for c in active)
            total += int(regular.sum()) * self.q**exponent
        for y0 in residues[~regular]:
            expanded = self.expand(constraints, tuple(int(v) for v in y0))
            total += self.count(expanded, precision - 1)
        return total

    def regular(self, active: Sequence[Constraint], residues: np.ndarray) -> np.ndarray:
        """Residues where the active constraints have a full-rank Jacobian."""
        k = len(active)
        if k == 0:
            return np.ones(len(residues), dtype=bool)
        if k > self.n_vars:
            return np.zeros(len(residues), dtype=bool)
        grads = np.stack(
            [
                np.stack(
                    [
                        evaluate(_at_t0(c.poly).derivative(v), residues, self.domain)
                        for v in self.variables
                    ],
                    axis=1,
                )
                for c in active
            ],
            axis=1,
        )
        if k == 1:
            return (grads[:, 0, :] != 0).any(axis=1)
        return np.array([self._full_rank(grads[s]) for s in range(len(residues))], dtype=bool)

    def _full_rank(self, matrix: np.ndarray) -> bool:
        k, n = matrix.shape
        rows = [[int(v) for v in row] for row in matrix]
        if self.domain.degree > 1:
            return self.domain.field.rank(rows) == k
        field = SympyGF(self.q)
        return DomainMatrix([[field(v) for v in row] for row in rows], (k, n), field).rank() == k

    def expand(self, constraints: Sequence[Constraint], y0: tuple[int, ...]) -> list[Constraint]:
        subs = {
            v: Poly.constant(c, self.ring, self.domain) + self._t * Poly.var(v, self.ring, self.domain)
            for v, c in zip(self.variables, y0, strict=True)
        }
        return [Constraint(c.poly.compose(subs, self.ring), c.order) for c in constraints]


def _count_chunk(
    variables: tuple[str, ...],
    q: int,
    budget: int,
    constraints: list[Constraint],
    precision: int,
    start: int,
    stop: int,
) -> tuple[int, int]:
    lifter = _Lifter(variables, q, budget)
    return lifter.count_range(constraints, precision, start, stop), lifter.evaluations


def chunk_bounds(size: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(size)`` into at most ``parts`` contiguous non-empty ranges."""
    edges = [size * i // parts for i in range(parts + 1)]
    return [(lo, hi) for lo, hi in zip(edges, edges[1:]) if hi > lo]


class PointCounter:
    """Exact F_q-point count of a CountQuery.

    With ``workers > 1`` the residues F_q^N are split into contiguous
    index ranges, each scanned and lifted in a process pool with an equal
    share of the remaining budget; partial counts are summed in range order.
    """

    def __init__(self, query: CountQuery, budget: int | None = None, workers: int | None = None):
        self.query = query
        self.budget = budget if budget is not None else settings.budget
        self.workers = workers if workers is not None else settings.workers
        self.evaluations = 0

    def run(self) -> int:
        query = self.query
        q = query.field_size
        domain = GF(q)
        ring = query.variables + (T,)
        total = 0
        for sign, requirements in query.requirement_sets():
            constraints = [
                Constraint(g.to_domain(domain).embed(ring), m)
                for ideal, m in requirements
                for g in ideal.gens
            ]
            total += sign * self._count(constraints, query.level + 1)
        logger.info(
            f"Counted {total} points at level {query.level} over F_{q} "
            f"({self.evaluations} residue evaluations)"
        )
        return total

    def _count(self, constraints: list[Constraint], precision: int) -> int:
        query = self.query
        q = query.field_size
        lifter = _Lifter(query.variables, q, self.budget, spent=self.evaluations)
        if self.workers <= 1:
            try:
                return lifter.count(constraints, precision)
            finally:
                self.evaluations = lifter.evaluations

        constraints = normalise(constraints)
        if not constraints:
            return q ** (lifter.n_vars * precision)
        top = max(c.order for c in constraints)
        remaining = self.budget - self.evaluations
        if lifter.residues > remaining:
            raise BudgetExceeded(self.evaluations + lifter.residues, self.budget)
        chunks = chunk_bounds(lifter.residues, self.workers)
        share = remaining // len(chunks)
        with ProcessPoolExecutor(
            max_workers=self.workers, initializer=bind_run_id, initargs=(get_run_id(),)
        ) as executor:
            futures = [
                executor.submit(_count_chunk, query.variables, q, share, constraints, top, lo, hi)
                for lo, hi in chunks
            ]
            results = [f.result() for f in futures]
        partial = 0
        for count, spent in results:
            partial += count
            self.evaluations += spent
        if self.evaluations > self.budget:
            raise BudgetExceeded(self.evaluations, self.budget)
        return q ** (lifter.n_vars * (precision - top)) * partial


def count_points(query: CountQuery, budget: int | None = None, workers: int | None = None) -> int:
    return PointCounter(query, budget, workers).run()
