"""Closures, densities and closure roots of union-closed set families."""

from .analysis import (
    a_value,
    closure_tree,
    density_census,
    enumerate_union_closed,
    frankl_check,
    g_monotonicity_probe,
    g_value,
)
from .closure import (
    ClosureTrace,
    DensityReport,
    closure,
    closure_trace,
    density,
    density_report,
    iterated_closure,
    min_full_level,
    s_param,
)
from .constructions import (
    ConstructionSpec,
    chain_family,
    cube_plus_universe,
    interval_chain_family,
    lifted_family,
    loose_bound_family,
    path_family,
    path_upset,
)
from .oracles import CaseReport, classify_lifted, classify_path, verify_lifted, verify_path
from .relative import (
    RootCertificate,
    brute_force_closure_roots,
    covers_under_closure,
    has_closure_root,
    is_relative_subset,
    is_relative_transitive,
    minimal_members,
    relative_generated,
    relative_minimal_members,
    root_dominance_check,
    up_set_generated,
)
from .setcore import (
    FamilyStatistics,
    SetFamily,
    canonical_iso_form,
    family_from_sets,
    format_family,
    is_union_closed,
    is_up_set,
    make_family,
    parse_family,
    power_set_family,
    statistics,
)

__version__ = "0.1.0"
