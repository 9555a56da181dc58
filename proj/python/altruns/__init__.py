"""Exact counts of permutations by alternating runs, with cross-checks."""

import json

from ._altruns import (
    AltrunsError,
    ExactnessError,
    a_poly,
    available_checks,
    binomial,
    bona_ehrenborg_multiplicity,
    canfield_wilf_check,
    canfield_wilf_ratio,
    count_descents,
    count_runs,
    cvijovic_poly,
    derivative_poly,
    e_coeff,
    eulerian_oracle,
    eulerian_poly,
    knuth_identity_residual,
    p_coeff_closed_form,
    r_explicit,
    r_stanley,
    runs_poly,
    runs_table,
    stirling2,
    tangent_numbers,
    verify_json,
)


def verify(n_max=20, oracle_max=8, checks=()):
    """Run the verification suite and return the report as a dict."""
    return json.loads(verify_json(n_max, oracle_max, list(checks)))


__all__ = [
    "AltrunsError",
    "ExactnessError",
    "a_poly",
    "available_checks",
    "binomial",
    "bona_ehrenborg_multiplicity",
    "canfield_wilf_check",
    "canfield_wilf_ratio",
    "count_descents",
    "count_runs",
    "cvijovic_poly",
    "derivative_poly",
    "e_coeff",
    "eulerian_oracle",
    "eulerian_poly",
    "knuth_identity_residual",
    "p_coeff_closed_form",
    "r_explicit",
    "r_stanley",
    "runs_poly",
    "runs_table",
    "stirling2",
    "tangent_numbers",
    "verify",
]
