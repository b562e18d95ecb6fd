"""Seifert surfaces, augmented links and volume bounds for knot diagrams."""

import json

from ._core import (
    V0,
    Diagram,
    DiagramError,
    InvariantError,
    LabelError,
    MultiComponentError,
    alternate,
    annotated_link,
    canonical,
    canonical_genus,
    clausen2,
    closed_braid,
    is_alternating,
    mirror,
    parse_pd,
    parse_pd_lines,
    pretzel,
    random_knot_diagram,
    seifert_dot,
    writhe,
)
from . import _core


def _diagram(d):
    return parse_pd(d) if isinstance(d, str) else d


def analyze(diagram):
    """Seifert circles, Seifert graph and canonical genus as a dict."""
    return json.loads(_core.analysis_json(_diagram(diagram)))


def pipeline(diagram, improve=True, target="K'", keep_zero_loops=True):
    """Full reduction, augmentation and bounds report as a dict."""
    return json.loads(_core.pipeline_json(_diagram(diagram), improve, target, keep_zero_loops))


__all__ = [
    "V0",
    "Diagram",
    "DiagramError",
    "InvariantError",
    "LabelError",
    "MultiComponentError",
    "alternate",
    "analyze",
    "annotated_link",
    "canonical",
    "canonical_genus",
    "clausen2",
    "closed_braid",
    "is_alternating",
    "mirror",
    "parse_pd",
    "parse_pd_lines",
    "pipeline",
    "pretzel",
    "random_knot_diagram",
    "seifert_dot",
    "writhe",
]
