"""Exact enumeration of vincular pattern occurrences on 231- and 321-avoiding permutations."""

from .closed_forms import TABLE, apply_transfer, closed_form_table, lookup, transfer_pattern
from .dyck import phi_321, phi_321_inv, phi_kratt, phi_kratt_inv, theta, theta_inverse, xi, xi_inverse
from .permutations import (
    AvoidanceClass,
    VincularPattern,
    avoids,
    enumerate_avoiders,
    occurrences,
    parse_pattern,
    total_occurrences,
)
from .poly import LaurentPoly
from .series import Series, make_B, make_C
from .statistics import StatDistribution, distribution, simion_schmidt
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"
