"""Clique complexes, degree-condition collapses, certificates and random-model experiments."""

from .collapse import (
    CollapseCertificate,
    CollapseError,
    CollapseOutcome,
    CollapseStep,
    WorkingComplex,
    collapse_link_to_dim,
    collapse_to_dim,
    cone_collapse,
    elementary_collapse,
    expand_interval,
    find_free_faces,
    lift_steps,
)
from .complex import (
    CliqueComplex,
    FaceBudgetExceeded,
    Graph,
    build_graph,
    clique_complex,
    complete_graph,
    fingerprint,
    flag_closure,
    link,
    skeleton,
    star,
    vertex_degree_in,
    vsupp,
)
from .condition import ConditionReport, brute_force_condition, check_condition, core_prefilter
from .homology import (
    BoundaryMatrix,
    HomologyProfile,
    boundary_matrix,
    euler_characteristic,
    homology_profile,
    smith_normal_form,
)
from .relevant import (
    RelevantSubcomplex,
    check_intersection_bound,
    closure_partition,
    facet_adjacency_components,
)
from .sampler import SamplerConfig, derive_seed, sample_gnp, sample_xnp
from .verify import FingerprintMismatch, Verdict, verify_certificate

__version__ = "0.1.0"
