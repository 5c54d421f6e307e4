"""Exact Bott-residue computation of the Pluecker degree of the Quot scheme R_d."""

from .fixed_points import FixedComponent, WeightVector, chow_rank, enumerate_components, euler_characteristic
from .localization import (
    NonGenericWeights,
    NonIntegralSum,
    alpha_restriction,
    beta_restriction,
    component_contribution,
    normal_euler_class,
    plucker_degree,
)
from .series import LinearForm, NonUnitError, TruncatedSeries
from .vafa import VIQuery, vi_invariant, vi_plucker_degree

__version__ = "0.1.0"
