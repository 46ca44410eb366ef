from .contact import (
    AtLeast,
    ContactCondition,
    Jet,
    Order,
    contact_order,
    divisor_order,
    truncate_jet,
)
from .pair import PairSpec, jacobian_z_ideal
from .scheme import (
    AffineScheme,
    JetSystem,
    expand_ideal,
    generic_jet,
    jet_equations,
    jet_variable,
    jet_variables,
)
from .strata import fibre_dimension, lift_levels, stratum_conditions, stratum_level

__all__ = [
    "AffineScheme",
    "AtLeast",
    "ContactCondition",
    "Jet",
    "JetSystem",
    "Order",
    "PairSpec",
    "contact_order",
    "divisor_order",
    "expand_ideal",
    "fibre_dimension",
    "generic_jet",
    "jacobian_z_ideal",
    "jet_equations",
    "jet_variable",
    "jet_variables",
    "lift_levels",
    "stratum_conditions",
    "stratum_level",
    "truncate_jet",
]
