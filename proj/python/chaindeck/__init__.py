"""Balanced path decompositions of complete digraphs and chain rule task sets."""

from chaindeck._core import (
    Decomposition,
    DirectedPath,
    LengthProfile,
    all_arcs,
    balanced_k,
    arc_count_ok,
    classify_eft,
    construct,
    construct_trivial,
    emit_decomposition,
    enumerate_profiles,
    extract_profile,
    generate_task_set,
    instantiate,
    list_supported,
    necessary_conditions,
    normalize_latex,
    parse_decomposition,
    parse_labeling,
    parse_profile,
    reverse_path,
    search,
    spectrum_histogram,
    taskset_to_json,
    taskset_to_latex,
    taskset_to_text,
    to_dot,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "DirectedPath",
    "LengthProfile",
    "all_arcs",
    "balanced_k",
    "arc_count_ok",
    "classify_eft",
    "construct",
    "construct_trivial",
    "emit_decomposition",
    "enumerate_profiles",
    "extract_profile",
    "generate_task_set",
    "instantiate",
    "list_supported",
    "necessary_conditions",
    "normalize_latex",
    "parse_decomposition",
    "parse_labeling",
    "parse_profile",
    "reverse_path",
    "search",
    "spectrum_histogram",
    "taskset_to_json",
    "taskset_to_latex",
    "taskset_to_text",
    "to_dot",
    "verify",
]
