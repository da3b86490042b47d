"""Rainbow saturation toolkit: graphs, verifiers, constructions, search."""

from .canon import (
    CANON_MAX_VERTICES,
    automorphism_generators,
    canonical_code,
    canonical_labeling,
    edge_automorphism_group,
)
from .cliques import (
    RainbowCliqueQuery,
    clique_number,
    contains_rainbow_clique,
    contains_subgraph,
    contains_subgraph_using_edge,
    list_rainbow_cliques,
    rainbow_clique_number,
)
from .constructions import (
    alt_k5,
    ehm_graph,
    g_prime,
    g_prime_rainbow,
    g_semisat,
    gamma_rn,
    lambda2,
    lambda3,
    lambda3_alt,
    nonstab_assemble,
    nonstab_lambda,
    satk_upper,
    subdivision_gamma,
)
from .enumeration import enumerate_colorings, enumerate_graphs
from .errors import (
    BudgetExceededError,
    InfeasibleError,
    IntegrityError,
    ParameterError,
    ParseError,
    ResourceLimitError,
    RsatError,
)
from .families import (
    has_perfect_matching,
    in_family_F_doubleprime,
    in_family_Fhat,
    lemma2_conclusion,
    lemma2_hypothesis,
    max_matching_size,
    robust_clique_check,
)
from .graphs import (
    EdgeColoredGraph,
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    complete_join,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    load,
    monochromatic,
    parse,
    path_graph,
    petersen_graph,
    rainbow,
    save,
    serialize,
    star_graph,
)
from .reports import VerificationReport
from .saturation import (
    candidate_colors,
    is_k_sat,
    is_k_semisat,
    is_rainbow_saturated,
    is_rainbow_semisaturated,
    is_rfree,
    is_sat,
    is_weakly_rainbow_saturated,
)
from .search import (
    ResultCache,
    ResultRecord,
    SearchBudget,
    compute_f,
    compute_g_gprime,
    compute_sat,
    compute_sat_rainbow,
    naive_sat_rainbow,
    verify_record,
)

__version__ = "0.1.0"
