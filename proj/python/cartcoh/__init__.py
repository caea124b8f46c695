"""Coherence checking for the free cartesian category."""

from ._cartcoh import (
    Arrow,
    CartcohError,
    Mode,
    Object,
    collapse_witness,
    degree,
    equal_in_cart,
    equal_via_normal_forms,
    graph_of,
    is_normal_form,
    normal_form,
    normalize,
    parse_arrow,
    parse_object,
    print_arrow,
    run_cli,
    synth_from_graph,
    typecheck,
)

__all__ = [
    "Arrow",
    "CartcohError",
    "Mode",
    "Object",
    "collapse_witness",
    "degree",
    "equal_in_cart",
    "equal_via_normal_forms",
    "graph_of",
    "is_normal_form",
    "normal_form",
    "normalize",
    "parse_arrow",
    "parse_object",
    "print_arrow",
    "run_cli",
    "synth_from_graph",
    "typecheck",
]
