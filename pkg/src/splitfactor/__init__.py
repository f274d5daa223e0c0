"""splitfactor: 2-switch factor multigraphs of split graphs.

Construct the factor multigraph of a split graph, enumerate and apply
2-switches, machine-check the structural laws the factor graph obeys
(induced-path degree/neighborhood chains, cycle length bound, terminal
position of simple edges, the diameter bound), and build the extremal
family that attains the bound.
"""

from .corpus import (
    CorpusSpec,
    corpus_size,
    exhaustive_corpus,
    generate,
    instance,
    instance_id,
    random_corpus,
    splitmix64,
)
from .extremal import (
    EXTREMAL_CHECK_NAMES,
    ExtremalInstance,
    build_extremal,
    expected_multiplicities,
    verify_extremal,
)
from .factor import (
    DiameterSummary,
    FactorGraph,
    build_by_enumeration,
    build_by_formula,
    format_multiplicity_listing,
    to_dot,
)
from .graph import (
    GraphError,
    Neighborhood,
    ParseError,
    SplitGraph,
    format_split_text,
    load_split_file,
    parse_split_text,
    recognize_split,
)
from .switches import TwoSwitch, apply_two_switch, enumerate_two_switches, two_switch_degree
from .verify import (
    CHECK_NAMES,
    CheckResult,
    InducedCycle,
    InducedPath,
    SweepSummary,
    VerificationReport,
    check_cycle_bound,
    check_diameter_bound,
    check_divisibility,
    check_p5_forbidden,
    check_path_structure,
    check_simple_edge_positions,
    enumerate_induced_cycles,
    enumerate_induced_paths,
    is_induced_cycle,
    is_induced_path,
    sweep,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "CHECK_NAMES",
    "CheckResult",
    "CorpusSpec",
    "DiameterSummary",
    "EXTREMAL_CHECK_NAMES",
    "ExtremalInstance",
    "FactorGraph",
    "GraphError",
    "InducedCycle",
    "InducedPath",
    "Neighborhood",
    "ParseError",
    "SplitGraph",
    "SweepSummary",
    "TwoSwitch",
    "VerificationReport",
    "apply_two_switch",
    "build_by_enumeration",
    "build_by_formula",
    "build_extremal",
    "check_cycle_bound",
    "check_diameter_bound",
    "check_divisibility",
    "check_p5_forbidden",
    "check_path_structure",
    "check_simple_edge_positions",
    "corpus_size",
    "enumerate_induced_cycles",
    "enumerate_induced_paths",
    "enumerate_two_switches",
    "exhaustive_corpus",
    "expected_multiplicities",
    "format_multiplicity_listing",
    "format_split_text",
    "generate",
    "instance",
    "instance_id",
    "is_induced_cycle",
    "is_induced_path",
    "load_split_file",
    "parse_split_text",
    "random_corpus",
    "recognize_split",
    "splitmix64",
    "sweep",
    "to_dot",
    "two_switch_degree",
    "verify_all",
    "verify_extremal",
    "__version__",
]
