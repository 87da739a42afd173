"""Exact hypergraph Catalan numbers c_n^(k) and their asymptotics."""

from ._hypercat import (
    asymptotic_log,
    catalan,
    functional_equation_ok,
    gunnells_log,
    hypergraph_catalan,
    hypergraph_catalan_table,
    ratio_report,
    root_degree_count,
    star_count,
    verify_quick,
)

__all__ = [
    "asymptotic_log",
    "catalan",
    "functional_equation_ok",
    "gunnells_log",
    "hypergraph_catalan",
    "hypergraph_catalan_table",
    "ratio_report",
    "root_degree_count",
    "star_count",
    "verify_quick",
]
