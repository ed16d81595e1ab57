"""Local antimagic labelings: verification, constructions, exact search and bound predictions.

Labelings are plain lists where ``labels[j]`` is the label of edge ``j`` in
``graph.edges`` order. Profiles and results are dictionaries.
"""

from ._lachi import (
    Graph,
    LachiError,
    add_pendant_edges,
    augment_and_label,
    augment_star_leaf,
    certify,
    check_pendant_lemma,
    chromatic_number,
    color_count,
    cycle,
    extract_profile,
    find_labeling_with_profile,
    induced_colors,
    is_local_antimagic,
    label_spider_2n,
    label_star,
    path,
    pendant_vertices,
    predict,
    run_experiment,
    solve,
    spider,
    star,
    wheel,
)

__all__ = [name for name in dir() if not name.startswith("_")]
