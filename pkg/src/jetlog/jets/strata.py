"""Contact conditions cutting out the strata L_n^e(lY) = L_n(lY) ∩ π_n(A_e).

A level-n jet on a singular X need not come from an arc, so π_n(A_e) is
counted through jets of a higher level. For a hypersurface X = V(f) whose
Z-ideal is the Jacobian ideal (df/dx_1, ..., df/dx_N, f) and n >= e, the
truncation

    {γ in L_{n+e}(X) : ord_Z γ = e}  ->  π_n(A_e)

is onto and every fibre is an affine space of dimension N*e: the t-adic
digits n+1 .. n+e of f(γ) do not see the last e digits of γ once the
gradient has order e, and Newton's lemma lifts every such (n+e)-jet to an
arc. On smooth X no lift is needed.
"""

from __future__ import annotations

from ..errors import PrecisionTooLow, StabilityViolation, UnsupportedShape
from ..logging import logger
from ..symbolic import ideal_power
from .contact import AtLeast, ContactCondition, Order
from .pair import PairSpec


def lift_levels(pair: PairSpec, e: int) -> int:
    """How many levels above n the stratum's jets are counted at."""
    if e == 0 or pair.x_is_smooth() or pair.x.ideal.is_zero():
        return 0
    if not pair.z_is_jacobian():
        raise UnsupportedShape(
            "Strata with e > 0 on singular X need a hypersurface with the Jacobian Z-ideal",
            details={"e": e, "z_ideal": str(pair.z_ideal)},
        )
    return e


def stratum_level(pair: PairSpec, n: int, e: int) -> int:
    return n + lift_levels(pair, e)


def fibre_dimension(pair: PairSpec, e: int) -> int:
    """Dimension of each fibre of the truncation onto L_n^e(lY)."""
    return pair.x.ambient_dim * lift_levels(pair, e)


def stratum_conditions(
    pair: PairSpec,
    n: int,
    e: int,
    y_order: Order | None = None,
    on_y: bool = True,
    force: bool = False,
) -> list[ContactCondition]:
    """Conditions on jets of the ambient space at level ``stratum_level(pair, n, e)``.

    Their n-truncations are exactly L_n^e(lY). By default the jet lies on
    lY (ord along a^l >= n + 1); ``y_order`` replaces that with any other
    order along a^l decided on n-jets, and ``on_y=False`` drops the Y
    condition entirely (the jets of A_e on X). On smooth X the Z-ideal is
    the unit ideal: e = 0 imposes nothing and e > 0 yields the
    unsatisfiable condition ord(1) = e, so the stratum is empty.
    """
    if n < pair.theta * e:
        if not force:
            raise StabilityViolation(
                f"Level n={n} is below theta*e={pair.theta * e}; the stratum is not stable",
                details={"n": n, "e": e, "theta": pair.theta},
            )
        logger.warning(f"Out-of-regime stratum n={n} < theta*e={pair.theta * e} (forced)")

    lift = lift_levels(pair, e)
    if lift and n < e:
        raise PrecisionTooLow(
            f"π_n(A_e) is only computed for n >= e; got n={n}, e={e}",
            details={"n": n, "e": e},
        )
    level = n + lift

    conditions: list[ContactCondition] = []
    if not pair.x.ideal.is_zero():
        conditions.append(ContactCondition(pair.x.ideal, AtLeast(level + 1)))
    if on_y:
        order = AtLeast(n + 1) if y_order is None else y_order
        y_condition = ContactCondition(ideal_power(pair.y_ideal, pair.l), order)
        y_condition.validate(n)
        conditions.append(y_condition)
    if not (pair.z_ideal.is_unit() and e == 0):
        conditions.append(ContactCondition(pair.z_ideal, e))
    if lift:
        logger.debug(f"Stratum n={n}, e={e} counted on {level}-jets")
    return conditions
