"""Affine schemes and their jet systems.

A level-n jet of A^N is a tuple of truncated series
v(t) = v_0 + v_1 t + ... + v_n t^n, one per coordinate. Plugging these
into each generator and reading off the coefficients of t^0..t^n gives the
defining equations of L_n, graded by level: the coefficient of t^j only
involves jet variables of level <= j.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BadFixture
from ..schemas.fixture import SchemeSpec
from ..symbolic import QQ, Ideal, Poly, TruncatedSeries, parse_polys, series_substitute


def jet_variable(name: str, level: int) -> str:
    return f"{name}_{level}"


def jet_variables(base: tuple[str, ...], n: int) -> tuple[str, ...]:
    """Level-major ordering: x_0, y_0, x_1, y_1, ..."""
    return tuple(jet_variable(v, j) for j in range(n + 1) for v in base)


@dataclass(frozen=True)
class AffineScheme:
    ambient_dim: int
    ideal: Ideal
    expected_dim: int | None = None

    def __post_init__(self):
        if len(self.ideal.variables) != self.ambient_dim:
            raise BadFixture(
                f"Ideal has {len(self.ideal.variables)} variables, ambient dimension is "
                f"{self.ambient_dim}"
            )
        if self.expected_dim is not None and not 0 <= self.expected_dim <= self.ambient_dim:
            raise BadFixture(f"expected_dim {self.expected_dim} outside [0, {self.ambient_dim}]")

    @classmethod
    def from_spec(cls, spec: SchemeSpec) -> AffineScheme:
        variables = tuple(spec.variables or ())
        gens = parse_polys(spec.ideal, variables)
        return cls(spec.ambient_dim, Ideal(variables, tuple(gens)), spec.expected_dim)

    @classmethod
    def affine_space(cls, variables: tuple[str, ...]) -> AffineScheme:
        return cls(len(variables), Ideal.zero(variables), len(variables))

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ideal.variables

    @property
    def dim(self) -> int:
        """Declared dimension, else N minus the number of generators."""
        if self.expected_dim is not None:
            return self.expected_dim
        return self.ambient_dim - len(self.ideal.gens)

    def is_hypersurface(self) -> bool:
        return len(self.ideal.gens) == 1 and self.dim == self.ambient_dim - 1


@dataclass(frozen=True)
class JetSystem:
    level: int
    base: AffineScheme
    variables: tuple[str, ...]
    # generator-major: all coefficients of the first generator, then the next
    equations: tuple[Poly, ...]

    def equations_at_level(self, j: int) -> tuple[Poly, ...]:
        """Coefficients of t^j, one per generator."""
        width = self.level + 1
        return self.equations[j::width]

    def base_slice(self) -> tuple[Poly, ...]:
        """Level-0 equations rewritten in the base variables."""
        rename = {jet_variable(v, 0): v for v in self.base.variables}
        return tuple(
            Poly(
                self.base.variables,
                {
                    tuple(mono[self.variables.index(jv)] for jv in rename): c
                    for mono, c in eq.terms.items()
                },
                eq.domain,
            )
            for eq in self.equations_at_level(0)
        )


def generic_jet(variables: tuple[str, ...], n: int) -> list[TruncatedSeries]:
    """The series v(t) = sum_j v_j t^j for each base variable."""
    jvars = jet_variables(variables, n)
    return [
        TruncatedSeries(n, tuple(Poly.var(jet_variable(v, j), jvars, QQ) for j in range(n + 1)))
        for v in variables
    ]


def expand_ideal(ideal: Ideal, n: int) -> tuple[Poly, ...]:
    """Coefficients of t^0..t^n of every generator on the generic n-jet."""
    args = generic_jet(ideal.variables, n)
    out: list[Poly] = []
    for g in ideal.gens:
        out.extend(series_substitute(g, args, n).coeffs)
    return tuple(out)


def jet_equations(s: AffineScheme, n: int) -> JetSystem:
    if n < 0:
        raise ValueError(f"Jet level must be >= 0, got {n}")
    return JetSystem(n, s, jet_variables(s.variables, n), expand_ideal(s.ideal, n))
