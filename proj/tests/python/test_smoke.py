import math

import pytest

import knotvol

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


def test_parse_and_genus():
    d = knotvol.parse_pd(TREFOIL)
    assert d.num_crossings == 3
    assert d.num_components == 1
    assert knotvol.writhe(d) == -3
    assert knotvol.writhe(knotvol.mirror(d)) == 3
    assert knotvol.canonical_genus(d) == 1
    assert knotvol.is_alternating(d)


def test_analyze():
    report = knotvol.analyze(TREFOIL)
    assert report["genus"] == 1
    assert report["seifert_circles"] == 2
    assert knotvol.analyze("unknot")["genus"] == 0


def test_label_error():
    with pytest.raises(knotvol.LabelError):
        knotvol.parse_pd("X(1,4,2,7) X(3,6,4,1)")
    assert issubclass(knotvol.LabelError, knotvol.DiagramError)
    assert issubclass(knotvol.DiagramError, ValueError)


def test_pipeline_figure_eight():
    out = knotvol.pipeline(FIGURE_EIGHT)
    assert out["outcome"] == "hyperbolic"
    b = out["bounds"]
    assert (b["g"], b["A"], b["crossings_L"], b["crossings_L_improved"]) == (1, 2, 12, 8)
    assert out["roundtrip"]
    assert out["genus_one"]["class"] == "TwoBridge(2,2)"
    raw = knotvol.pipeline(FIGURE_EIGHT, improve=False)
    assert raw["link_improved"] is None


def test_pipeline_degenerate_and_target():
    out = knotvol.pipeline(TREFOIL)
    assert out["outcome"]["kind"] == "torus_2k"
    assert knotvol.annotated_link(knotvol.parse_pd(TREFOIL)) is None
    k = knotvol.pipeline(knotvol.pretzel([3, 3, 3]), target="K")
    assert k["target"] == "K" and k["roundtrip"]
    with pytest.raises(ValueError):
        knotvol.pipeline(FIGURE_EIGHT, target="L")


def test_annotated_link_reparses():
    text = knotvol.annotated_link(knotvol.parse_pd(FIGURE_EIGHT))
    roles = [line for line in text.splitlines() if line.startswith("#")]
    assert len(roles) == 3
    link = knotvol.parse_pd_lines(text)[0]
    assert link.num_components == 3
    assert link.num_crossings == 8


def test_random_diagrams_reproducible():
    a = knotvol.random_knot_diagram(11)
    b = knotvol.random_knot_diagram(11)
    assert a.pd() == b.pd()
    assert knotvol.alternate(a).num_crossings == a.num_crossings


def test_v0():
    assert math.isclose(knotvol.clausen2(math.pi / 3), knotvol.V0, rel_tol=0, abs_tol=1e-14)


def test_seifert_dot():
    dot = knotvol.seifert_dot(knotvol.parse_pd(FIGURE_EIGHT), "fig8")
    assert dot.startswith('graph "fig8" {')
    assert dot.count(" -- ") == 4
