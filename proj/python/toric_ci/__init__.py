"""Complete-intersection basis ideals of toric ideals.

Configurations are given as lists of integer rows; kernel vectors and bases
as lists of columns. Row and column indices are 0-based, except in search
reports, which follow the JSON schema of the command-line tool (1-based).
"""

import json
import os
from fractions import Fraction

from ._core import (
    Configuration,
    DimensionError,
    DomainError,
    InvalidBasis,
    InvalidConfiguration,
    NotHomogeneous,
    ToricCIError,
    binomials,
    bound_eval,
    bound_threshold,
    brute_force_violation,
    circuitize_basis,
    circuits,
    codim3_bound,
    convex_polygon,
    curve_ci_basis,
    cyclic_polytope,
    decagon_quadruples,
    decagon_sign_matrix,
    find_violation,
    is_complete_intersection,
    kernel_lattice,
    lattice_index,
    monomial_curve,
    run_verification,
)
from . import _core

DEFAULT_BUDGET = 100_000_000


def conformal_decomposition(cfg, v):
    """List of (Fraction, circuit) pairs summing to v, each circuit conformal to v."""
    return [(Fraction(num, den), w) for num, den, w in _core.conformal_decomposition(cfg, v)]


def search(cfg, mode="first-found", budget=None, jobs=1, seed=0, prune=True, supports=None):
    """Search for a complete-intersection basis ideal generated by circuits.

    Returns the report as a dict. ``budget`` defaults to $TORIC_CI_BUDGET or
    1e8 tested combinations; ``supports`` optionally restricts the candidate
    circuits to the given 0-based supports.
    """
    if budget is None:
        budget = int(os.environ.get("TORIC_CI_BUDGET", DEFAULT_BUDGET))
    if supports is not None:
        supports = [sorted(s) for s in supports]
    return json.loads(_core._search(cfg, mode, budget, jobs, seed, prune, supports))


def check_basis(cfg, columns):
    """CI verdict, witness and lattice index for a user-supplied kernel basis."""
    return json.loads(_core._check_basis(cfg, columns))


__all__ = [
    "Configuration",
    "DimensionError",
    "DomainError",
    "InvalidBasis",
    "InvalidConfiguration",
    "NotHomogeneous",
    "ToricCIError",
    "binomials",
    "bound_eval",
    "bound_threshold",
    "brute_force_violation",
    "check_basis",
    "circuitize_basis",
    "circuits",
    "codim3_bound",
    "conformal_decomposition",
    "convex_polygon",
    "curve_ci_basis",
    "cyclic_polytope",
    "decagon_quadruples",
    "decagon_sign_matrix",
    "find_violation",
    "is_complete_intersection",
    "kernel_lattice",
    "lattice_index",
    "monomial_curve",
    "run_verification",
    "search",
]
