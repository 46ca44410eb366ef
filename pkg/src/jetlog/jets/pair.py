"""Pairs (X, qY) together with the Z-ideal of X and the stability level theta."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..config import policy_config
from ..errors import BadFixture, NotMonomial, UnsupportedShape
from ..logging import logger
from ..schemas.fixture import PairSpecModel
from ..symbolic import Ideal, ideal_power, monomial_membership_check, parse_polys
from .scheme import AffineScheme


def jacobian_z_ideal(s: AffineScheme) -> Ideal:
    """(df/dx_1, ..., df/dx_N, f) for a hypersurface V(f); valid for r = 1 only."""
    if not s.is_hypersurface():
        raise UnsupportedShape(
            f"Jacobian Z-ideal needs a hypersurface (one generator, dimension N-1); "
            f"got {len(s.ideal.gens)} generators, dimension {s.dim}. Supply z_ideal explicitly."
        )
    (f,) = s.ideal.gens
    return Ideal(s.variables, tuple(f.derivative(v) for v in s.variables) + (f,))


@dataclass(frozen=True)
class PairSpec:
    x: AffineScheme
    y_ideal: Ideal
    z_ideal: Ideal
    r: int = 1
    q: Fraction = Fraction(1)
    l: int = 1
    theta: int = 2
    # None: decide by the monomial check (False when it does not apply)
    hypothesis_asserted: bool | None = True
    supp_z: str = "smooth"

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q <= 0:
            raise BadFixture(f"q must be positive, got {self.q}")
        if self.l < 1 or self.r < 1 or self.theta < 1:
            raise BadFixture("l, r and theta must be >= 1")
        for name, ideal in (("y_ideal", self.y_ideal), ("z_ideal", self.z_ideal)):
            if ideal.variables != self.x.variables:
                raise BadFixture(f"{name} is not written in the variables of X")
        checked = self.hypothesis_check()
        if self.hypothesis_asserted is None:
            object.__setattr__(self, "hypothesis_asserted", bool(checked))
        elif checked is not None and checked != self.hypothesis_asserted:
            raise BadFixture(
                f"hypothesis_asserted={self.hypothesis_asserted} but the monomial check "
                f"says a^{self.l} in J^{self.theta} is {checked}"
            )

    @classmethod
    def from_model(cls, model: PairSpecModel) -> PairSpec:
        x = AffineScheme.from_spec(model.x)
        y_ideal = Ideal(x.variables, tuple(parse_polys(model.y_ideal, x.variables)))
        if model.z_ideal is None:
            z_ideal = Ideal.unit(x.variables)
        elif model.z_ideal == "jacobian":
            if model.r != 1:
                raise UnsupportedShape("The Jacobian Z-ideal is only available for r = 1")
            z_ideal = jacobian_z_ideal(x)
        else:
            z_ideal = Ideal(x.variables, tuple(parse_polys(model.z_ideal, x.variables)))
        return cls(
            x=x,
            y_ideal=y_ideal,
            z_ideal=z_ideal,
            r=model.r,
            q=Fraction(model.q),
            l=model.l,
            theta=policy_config.jets.theta if model.theta is None else model.theta,
            hypothesis_asserted=model.hypothesis_asserted,
            supp_z=model.supp_z,
        )

    @classmethod
    def smooth_ambient(cls, scheme: AffineScheme, q: Fraction | int = 1) -> PairSpec:
        """Y = scheme inside the affine space of its variables, Z the unit ideal."""
        return cls(
            x=AffineScheme.affine_space(scheme.variables),
            y_ideal=scheme.ideal,
            z_ideal=Ideal.unit(scheme.variables),
            q=Fraction(q),
        )

    @property
    def d(self) -> int:
        return self.x.dim

    def x_is_smooth(self) -> bool:
        return self.z_ideal.is_unit()

    def z_is_jacobian(self) -> bool:
        if not self.x.is_hypersurface():
            return False
        return set(self.z_ideal.gens) == set(jacobian_z_ideal(self.x).gens)

    def hypothesis_check(self) -> bool | None:
        """Decide a^l in J^theta when both sides are monomial, else None."""
        if self.y_ideal.is_zero() or self.z_ideal.is_unit():
            return True
        try:
            return monomial_membership_check(
                ideal_power(self.y_ideal, self.l), ideal_power(self.z_ideal, self.theta)
            )
        except NotMonomial:
            logger.debug("Hypothesis a^l in J^theta is not monomial; relying on assertion")
            return None

    def derive(
        self, *, q: Fraction | None = None, l: int | None = None, y_ideal: Ideal | None = None
    ) -> PairSpec:
        """Copy with another coefficient, scaling or Y; a new Y or l re-runs the check."""
        retarget = l is not None or y_ideal is not None
        return PairSpec(
            x=self.x,
            y_ideal=self.y_ideal if y_ideal is None else y_ideal,
            z_ideal=self.z_ideal,
            r=self.r,
            q=self.q if q is None else q,
            l=self.l if l is None else l,
            theta=self.theta,
            hypothesis_asserted=None if retarget else self.hypothesis_asserted,
            supp_z=self.supp_z,
        )
