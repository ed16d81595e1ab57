import pytest

import lachi

W4_LABELS = [1, 6, 5, 8, 7, 2, 4, 3]


def test_builders_and_colors():
    g = lachi.wheel(4)
    assert (g.vertex_count, g.edge_count) == (5, 8)
    colors = lachi.induced_colors(g, W4_LABELS)
    assert colors == [20, 11, 15, 11, 15]
    assert sum(colors) == 8 * 9
    assert lachi.is_local_antimagic(g, W4_LABELS)
    assert lachi.color_count(g, W4_LABELS) == 3


def test_graph_from_edges():
    g = lachi.Graph([(0, 1), (1, 2), (2, 3)], "p4")
    assert g.name == "p4"
    assert g.edges == [(0, 1), (1, 2), (2, 3)]
    assert lachi.pendant_vertices(g) == [0, 3]


def test_profile_and_predict():
    profile = lachi.extract_profile(lachi.wheel(4), W4_LABELS)
    assert [c["color"] for c in profile["classes"]] == [11, 15, 20]
    bounds = lachi.predict(profile, 3, 12)
    assert bounds["applicable"] and bounds["exact"] == 13
    assert not lachi.predict(profile, 1, 3)["applicable"]


def test_augment_and_certify():
    out = lachi.augment_and_label(lachi.wheel(4), W4_LABELS, 3, 12)
    assert out["local_antimagic"]
    assert lachi.induced_colors(out["graph"], out["labels"])[0] == 194
    assert lachi.certify(out["graph"], out["labels"]) == 13


def test_constructions():
    g, labels = lachi.label_spider_2n(10)
    assert lachi.color_count(g, labels) == 12
    g, labels = lachi.augment_star_leaf(3, 2, 3)
    assert lachi.color_count(g, labels) == 6


def test_solve():
    result = lachi.solve(lachi.spider([(2, 3)]))
    assert result["chi_la"] == 4
    assert result["exhaustive"]
    assert lachi.solve(lachi.spider([(2, 4)]), jobs=2)["chi_la"] == 6


def test_find_labeling_with_profile():
    g = lachi.wheel(4)
    labels = lachi.find_labeling_with_profile(g, [(11, 2), (15, 2), (20, 1)])
    assert labels is not None and lachi.is_local_antimagic(g, labels)
    assert lachi.find_labeling_with_profile(g, [(10, 2), (16, 2), (20, 1)]) is None


def test_run_experiment():
    g, labels = lachi.label_star(3)
    report = lachi.run_experiment(g, labels, 2, 3, use_solver=True)
    assert report["solver_value"] == 6 and report["consistent"]


def test_errors_carry_codes():
    with pytest.raises(lachi.LachiError) as info:
        lachi.solve(lachi.path(13))
    assert info.value.code == "TooLarge"
    with pytest.raises(lachi.LachiError) as info:
        lachi.Graph([(0, 1), (1, 0)])
    assert info.value.code == "DuplicateEdge"
    with pytest.raises(ValueError):
        lachi.is_local_antimagic(lachi.path(3), [1, 1])
