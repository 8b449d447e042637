"""Roots of one-sided quaternionic polynomials.

Isolated points and 2-spheres are found through the real basic polynomial,
told apart with the sphericity sum, and checked against Vieta-type
identities for products and sums over the roots.
"""

from .croots import ComplexRootCluster, SolverConfig, find_roots
from .errors import (ClusterError, DegenerateInputError, DomainError, NoConvergenceError,
                     PreconditionViolated, QuatVietaError, ResidualTooLargeError, SchemaError,
                     ZeroDivisorError, ZeroPolynomialError)
from .kernels import BACKEND
from .powers import power, qp_coeffs
from .qpoly import LEFT, RIGHT, QuatPolynomial, RealPolynomial, basic_polynomial, evaluate, normalize
from .quaternion import I, J, K, ONE, ZERO, Quaternion
from .solver import IsolatedRoot, RootSet, SphericalRoot, solve
from .vieta import VietaReport, vieta_report

__version__ = "0.1.0"
