import pytest

import cubegroup

D4 = "gens: a b c\na: (b c)\n"
FIVE = (
    "gens: a b c d e\n"
    "a: (b d)\nb: (a c)\nc: (b d)\nd: (a c)\ne: (a c)(b d)\n"
)
D4_PERM = "a = (1 3)\nb = (1 2)(3 4)\nc = (1 4)(2 3)\n"


def test_d4_pipeline():
    g = cubegroup.DecoratedGraph.parse(D4)
    assert g.is_admissible()
    assert g.edge_partition() == ["angle b a c", "edge b c"]
    assert sorted(" ".join(r) for r in g.relators()) == [
        "a a", "a b a c", "b b", "b c b c", "c c",
    ]
    assert g.orbits() == [["a"], ["b", "c"]]
    assert g.decomposition_ordering() == ["a", "b", "c"]
    group = cubegroup.CubeGroup(g)
    assert group.order == 8
    assert group.cayley_dimension == 3
    assert group.normal_form(["b", "a", "c"]) == "100"
    with pytest.raises(cubegroup.NotADecomposition):
        group.normal_form(["a"], ordering=["b", "a", "c"])


def test_representation_matches_formula():
    g = cubegroup.DecoratedGraph.parse(FIVE)
    word = ["a", "e", "b", "c", "b", "d"]
    assert g.rho(word) == g.rho_via_formula(word)
    assert g.rho(["a", "b", "c", "d"]) == [[int(i == j) for j in range(5)] for i in range(5)]
    assert g.is_reducible()
    assert cubegroup.CubeGroup(g).order == 32


def test_round_trip_and_reverse_construction():
    g = cubegroup.DecoratedGraph.from_perm_group(D4_PERM)
    assert g == cubegroup.DecoratedGraph.parse(D4)
    assert g.involution("a") == "(b c)"
    assert cubegroup.DecoratedGraph.parse(g.serialize()) == g


def test_errors():
    with pytest.raises(cubegroup.ParseError):
        cubegroup.DecoratedGraph.parse("gens: a b\na: (a b)\n")
    bad = cubegroup.DecoratedGraph.parse("gens: a b c\na: (b c)\nb: (a c)\n")
    report = bad.admissibility()
    assert not report["admissible"]
    assert report["failures"][0]["kind"] == "NotFourPeriodic"
    with pytest.raises(cubegroup.CubeError):
        cubegroup.CubeGroup(bad)


def test_sweep():
    report = cubegroup.sweep(3, planar=True)
    assert report.admissible_count == 4
    assert report.passed()
    assert cubegroup.involution_count(4) == 10
