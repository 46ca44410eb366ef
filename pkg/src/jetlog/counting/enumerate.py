"""Exhaustive enumeration of jet points, level by level.

This is the slow oracle for the t-adic counter. Jet coefficients are
assigned one level at a time in lexicographic order; the level-j equations
(and the level-j coefficients of every contact condition) only involve
variables of level <= j, so a failing prefix prunes its whole subtree.
"""

from __future__ import annotations

from itertools import product

from ..config import settings
from ..errors import BudgetExceeded
from ..jets import AtLeast, expand_ideal
from ..symbolic import GF, Poly
from .query import CountQuery


def enumerate_points(query: CountQuery, budget: int | None = None) -> int:
    budget = budget if budget is not None else settings.budget
    q = query.field_size
    domain = GF(q)
    n = query.level
    width = len(query.variables)

    vanish: list[list[Poly]] = [[] for _ in range(n + 1)]
    nonvanish: list[list[list[Poly]]] = [[] for _ in range(n + 1)]

    for j in range(n + 1):
        vanish[j].extend(eq.to_domain(domain) for eq in query.system.equations_at_level(j))

    for cond in query.conditions:
        coeffs = [c.to_domain(domain) for c in expand_ideal(cond.ideal, n)]
        gens = len(cond.ideal.gens)
        m = cond.order.m if isinstance(cond.order, AtLeast) else cond.order
        for j in range(n + 1):
            if j < m:
                vanish[j].extend(coeffs[g * (n + 1) + j] for g in range(gens))
        if not isinstance(cond.order, AtLeast):
            nonvanish[cond.order].append([coeffs[g * (n + 1) + cond.order] for g in range(gens)])

    values = [0] * (width * (n + 1))
    evaluations = 0

    def search(level: int) -> int:
        nonlocal evaluations
        if level > n:
            return 1
        found = 0
        for digits in product(range(q), repeat=width):
            evaluations += 1
            if evaluations > budget:
                raise BudgetExceeded(evaluations, budget)
            values[level * width : (level + 1) * width] = digits
            if any(eq.eval(values) for eq in vanish[level]):
                continue
            if not all(any(g.eval(values) for g in group) for group in nonvanish[level]):
                continue
            found += search(level + 1)
        values[level * width : (level + 1) * width] = [0] * width
        return found

    return search(0)
