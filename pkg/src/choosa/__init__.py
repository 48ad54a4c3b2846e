"""List coloring, interval-list (gamma, mu) coloring and choosability on small graphs."""

from .graph import (
    DegeneracyResult,
    DimacsError,
    Graph,
    degeneracy_ordering,
    enumerate_graphs,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_maximal_outerplanar,
    gen_petersen,
    gen_random_tree,
    parse_dimacs,
    write_dimacs,
)
from .lists import (
    Coloring,
    IntervalList,
    ListAssignment,
    canonical_list_assignments,
    enumerate_interval_assignments,
    is_proper,
    respects_lists,
)
from .solvers import (
    SolveOptions,
    chromatic_number,
    exists_list_coloring,
    greedy_degeneracy_list_color,
    k_colorable,
)
from .choosability import (
    ChoosabilityVerdict,
    EnumerationCapExceeded,
    choice_number,
    gamma_mu_choice_number,
    is_k_choosable,
    is_k_gamma_mu_choosable,
)
