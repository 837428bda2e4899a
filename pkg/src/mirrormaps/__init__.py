"""Exact verification of integrality and positivity for the naive and
true mirror maps of lattice vector families.

The split: `lattice` holds configurations and their kernels, `monoid`
enumerates the exponent sets, `series` is the truncated power series
ring, `maps` builds the period series and both mirror maps, `polytope`
answers the Fano and reflexivity questions, `delaygue` hosts the
factorial-ratio criterion and the rank-one sequence conditions,
`checker` orchestrates everything into reports, and `inputdoc`,
`reports`, `plots`, `dataset`, `cli` are the file formats and front
end around it.
"""

from .checker import (CHECK_NAMES, DEFAULT_CHECKS, BatchResult, CheckOutcome,
                      CheckReport, CheckRequest, run_batch, run_check)
from .dataset import bundled_documents_dir, entries, get, verify
from .delaygue import (check_rank1_conditions, fano_criterion_agreement,
                       to_delaygue)
from .inputdoc import ParseError, load_request, parse_document, serialize_request
from .lattice import (InvalidConfigError, VectorConfig, kernel_basis,
                      validate_config)
from .maps import (collapse_to_generator, correction_factor,
                   correction_series, log_period, log_ratio,
                   naive_mirror_map, principal_period, quintic_config,
                   quintic_q_series, true_mirror_map)
from .monoid import (WeightFunctional, cone_sum_elements, free_monoid_basis,
                     negative_slot_elements, nonnegative_elements,
                     slot_bound_for_count, weight_bound_for_count)
from .polytope import (LatticePolytope, config_polytope, convex_hull,
                       is_fano, is_reflexive)
from .reports import (REPORT_FORMAT_VERSION, render_csv, render_json,
                      render_table)
from .series import GradedSeries, integrality_verdict, nonnegativity_verdict

__version__ = "0.1.0"

__all__ = [
    "BatchResult", "CHECK_NAMES", "CheckOutcome", "CheckReport",
    "CheckRequest", "DEFAULT_CHECKS", "GradedSeries", "InvalidConfigError",
    "LatticePolytope", "ParseError", "REPORT_FORMAT_VERSION",
    "VectorConfig", "WeightFunctional", "bundled_documents_dir",
    "check_rank1_conditions", "collapse_to_generator", "cone_sum_elements",
    "config_polytope", "convex_hull", "correction_factor",
    "correction_series", "entries", "fano_criterion_agreement",
    "free_monoid_basis", "get", "integrality_verdict", "is_fano",
    "is_reflexive", "kernel_basis", "load_request", "log_period",
    "log_ratio", "naive_mirror_map", "negative_slot_elements",
    "nonnegative_elements", "nonnegativity_verdict", "parse_document",
    "principal_period", "quintic_config", "quintic_q_series", "render_csv",
    "render_json", "render_table", "run_batch", "run_check",
    "serialize_request", "slot_bound_for_count", "to_delaygue",
    "true_mirror_map", "validate_config", "verify",
    "weight_bound_for_count",
]
