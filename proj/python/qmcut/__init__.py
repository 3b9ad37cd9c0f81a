"""Exact quantum max-d-cut values for complete multipartite graphs.

The heavy lifting lives in the compiled extension; this package re-exports
its functions. Partitions are plain lists of weakly decreasing positive ints.
"""

from ._core import (
    __version__,
    balanced_partition,
    clique_block_eigenvalue,
    closed_form,
    content_sum,
    dim_irrep,
    enumerate_partitions,
    eta_contents,
    eta_rows,
    full_spectrum,
    full_spectrum_graph,
    is_lr_filling,
    is_subpartition,
    iterated_lr,
    iterated_lr_direct,
    lr_coefficient,
    max_eigenvalue,
    max_eigenvalue_graph,
    minimal_lr_filling,
    solve,
    valid_tuples,
    verify_clique_spectrum,
    verify_complement_identity,
    weyl_dim,
    xi,
)

__all__ = [
    "__version__",
    "balanced_partition",
    "clique_block_eigenvalue",
    "closed_form",
    "content_sum",
    "dim_irrep",
    "enumerate_partitions",
    "eta_contents",
    "eta_rows",
    "full_spectrum",
    "full_spectrum_graph",
    "is_lr_filling",
    "is_subpartition",
    "iterated_lr",
    "iterated_lr_direct",
    "lr_coefficient",
    "max_eigenvalue",
    "max_eigenvalue_graph",
    "minimal_lr_filling",
    "solve",
    "valid_tuples",
    "verify_clique_spectrum",
    "verify_complement_identity",
    "weyl_dim",
    "xi",
]
