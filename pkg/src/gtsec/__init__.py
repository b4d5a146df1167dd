"""Security ordering of Gaussian tree models.

A Gaussian tree is a jointly Gaussian vector whose dependence structure is
an unrooted tree, with pairwise correlation equal to the product of edge
weights along the connecting path.  This package measures how well such a
model supports secret-key extraction between two parties facing a
single-vertex eavesdropper, and studies how that security depends on the
tree's shape:

- ``trees``: topologies, canonical codes, enumeration, leaf-edge queries;
- ``gaussian``: covariance, determinant, entropy, constrained sampling;
- ``security``: the maximin partial-correlation metric and its harnesses;
- ``posets``: the grafting move and the partial orders it induces;
- ``polynomials``: exact subtree polynomials, their grafting recursion,
  and the alpha/beta structure coefficients;
- ``leaders``: direct enumeration of poset leaders by anchored partitions;
- ``verify``: named sweeps over the quantitative claims;
- ``cli``: the ``gtsec`` command.
"""

from .gaussian import (
    WeightedTree,
    covariance_from_tree,
    determinant_closed_form,
    entropy,
    sample_weights,
    transfer_weights_cut_paste,
)
from .leaders import leader_census, leaders_partition, leaders_structural
from .polynomials import AlphaBeta, BiPoly, alpha_beta, rooted_poly, unrooted_poly, verify_recursion
from .posets import (
    Comparability,
    Poset,
    build_all_posets,
    build_poset,
    export_poset,
    graft,
    import_poset,
    is_comparable,
)
from .security import (
    SecurityReport,
    TripletScore,
    conditional_mi,
    explore_cut_paste,
    maximin_exhaustive,
    maximin_restricted,
    partial_correlation,
    verify_grafting_monotonicity,
)
from .trees import (
    CanonicalCode,
    EdgeRef,
    Tree,
    canonical_code,
    enumerate_trees,
    graftable_edges,
    is_lf,
    is_poset_leader,
    path,
    spider,
    star,
)

__version__ = "0.1.0"
