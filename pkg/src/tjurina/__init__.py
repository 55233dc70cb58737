"""k-th Milnor and Tjurina numbers of weighted homogeneous isolated singularities."""

from .gradedlin import (DimensionNotFinite, jet_oracle, milnor_hilbert_profile, mu_oracle,
                        quotient_dimension, tau_oracle)
from .invariants import (ClosedFormContext, jet_dim_closed, milnor_orlik, tangent_dim,
                         theorem_b_mu, theorem_b_tau)
from .parsing import parse_polynomial, parse_weights
from .wpoly import WeightSystem, WPolynomial, infer_weights, multiplicities

__version__ = "0.1.0"
