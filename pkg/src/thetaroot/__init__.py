"""Leading root of the partial theta function and the enriched trees it counts."""

from .series import QSeries, TQSeries, XQSeries
from .theta import (
    PUBLISHED_XI0,
    A_refined,
    A_sigma,
    A_sigma_infinite,
    Atilde_refined,
    F_eval,
    Ftilde_eval,
    sokal_iteration,
    theta0,
    verify_identity_first,
    verify_identity_second,
    xi0,
    xi_fix1,
    xi_fix2,
    xi_via_theta,
)
from .asymptotics import GrowthEstimate, estimate_mu

__all__ = [
    "QSeries",
    "TQSeries",
    "XQSeries",
    "PUBLISHED_XI0",
    "A_refined",
    "A_sigma",
    "A_sigma_infinite",
    "Atilde_refined",
    "F_eval",
    "Ftilde_eval",
    "sokal_iteration",
    "theta0",
    "verify_identity_first",
    "verify_identity_second",
    "xi0",
    "xi_fix1",
    "xi_fix2",
    "xi_via_theta",
    "GrowthEstimate",
    "estimate_mu",
]
