"""Agreement supertrees for semi-labeled (internally labeled) trees.

The agreement question: given rooted trees over partially overlapping
label sets, possibly labeled on internal nodes (think taxonomies), is
there a supertree over the union of the labels whose restriction to each
input's label set reproduces that input exactly?  Multifurcations are
treated as hard facts: no refinement is allowed.

Main entry points:

    decide_agreement(profile)       normalize / construct / strip pipeline
    build_agreement_tree(profile)   the constructive algorithm itself
    brute_force_agreement(profile)  exhaustive oracle for small inputs
    verify_by_clusters / verify_by_embedding   independent output checks
"""

from agreetree.build import (BuildOutcome, BuildStats, build_agreement_tree,
                             decide_agreement, strip_synthetic)
from agreetree.decompose import (ExposureState, compute_successor,
                                 exposed_labels, initial_position, is_finer,
                                 is_good_partition, is_nice,
                                 is_valid_position, meet_partitions,
                                 successor_position)
from agreetree.displaygraph import DisplayGraph, SplitEvent
from agreetree.errors import AgreeTreeError
from agreetree.generate import (GeneratorConfig, generate_instance,
                                generate_profile, random_candidate)
from agreetree.labels import LabelTable
from agreetree.newick import (parse_newick, parse_profile_text,
                              read_profile_file, serialize_newick,
                              write_profile_file)
from agreetree.oracle import (brute_force_agreement, enumerate_candidates,
                              oracle_decide)
from agreetree.profile import (Profile, normalize_profile, restrict_profile,
                               trees_agree_on, validate_profile)
from agreetree.verify import (compute_embedding, verify_by_clusters,
                              verify_by_embedding)
from agreetree.xtree import XTree, restriction_clusters

__version__ = "0.1.0"

__all__ = [
    "AgreeTreeError", "BuildOutcome", "BuildStats", "DisplayGraph",
    "ExposureState", "GeneratorConfig", "LabelTable", "Profile",
    "SplitEvent", "XTree", "brute_force_agreement", "build_agreement_tree",
    "compute_embedding", "compute_successor", "decide_agreement",
    "enumerate_candidates", "exposed_labels", "generate_instance",
    "generate_profile", "initial_position", "is_finer", "is_good_partition",
    "is_nice", "is_valid_position", "meet_partitions", "normalize_profile",
    "oracle_decide", "parse_newick", "parse_profile_text", "random_candidate",
    "read_profile_file", "restrict_profile", "restriction_clusters",
    "serialize_newick", "strip_synthetic", "successor_position",
    "trees_agree_on", "validate_profile", "verify_by_clusters",
    "verify_by_embedding", "write_profile_file",
]
