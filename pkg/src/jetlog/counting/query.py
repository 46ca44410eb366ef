"""Count queries: a jet system, extra contact conditions and a finite field."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import product
from math import ceil

from ..errors import DomainMismatch
from ..jets import AtLeast, ContactCondition, JetSystem
from ..symbolic import Ideal, prime_power


@dataclass(frozen=True)
class CountQuery:
    system: JetSystem
    conditions: tuple[ContactCondition, ...] = ()
    field_size: int = 2

    def __post_init__(self):
        object.__setattr__(self, "conditions", tuple(self.conditions))
        prime_power(self.field_size)
        for cond in self.conditions:
            if cond.ideal.variables != self.system.base.variables:
                raise DomainMismatch(
                    f"Condition {cond} is not written in the base variables "
                    f"{self.system.base.variables}"
                )
            cond.validate(self.system.level)

    @property
    def level(self) -> int:
        return self.system.level

    @property
    def variables(self) -> tuple[str, ...]:
        return self.system.base.variables

    def requirement_sets(self) -> Iterator[tuple[int, list[tuple[Ideal, int]]]]:
        """Signed lists of "ord_I >= M" requirements whose signed counts sum to the answer.

        ord_I = m is rewritten as (ord_I >= m) minus (ord_I >= m + 1).
        """
        base: list[tuple[Ideal, int]] = []
        if not self.system.base.ideal.is_zero():
            base.append((self.system.base.ideal, self.level + 1))
        exact: list[tuple[Ideal, int]] = []
        for cond in self.conditions:
            if isinstance(cond.order, AtLeast):
                base.append((cond.ideal, ceil(cond.order.m)))
            else:
                exact.append((cond.ideal, cond.order))
        for flags in product((0, 1), repeat=len(exact)):
            sign = -1 if sum(flags) % 2 else 1
            bumped = [(ideal, m + flag) for (ideal, m), flag in zip(exact, flags, strict=True)]
            yield sign, base + bumped
