import pytest
from hypothesis import given, settings, strategies as st

import oracles
from procesi.partitions import core_quotient, is_symmetric, partitions_of
from procesi.rootlattice import (
    components_report,
    core_census,
    dihedral_census,
    enumerate_components,
    mckay_graph,
    norm,
    parse_group,
    partition_to_rootvector,
    reflect,
    symmetric_partition_to_rootvector,
    symmetric_core_census,
    weight,
)

GROUPS = ["cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "binary_dihedral:1",
          "binary_dihedral:2", "binary_dihedral:3"]


def test_parse_group():
    assert parse_group("cyclic:3") == ("cyclic", 3)
    assert parse_group("binary_dihedral:2") == ("binary_dihedral", 2)
    for bad in ("cyclic", "cyclic:0", "tetra:2", "cyclic:x"):
        with pytest.raises(ValueError):
            parse_group(bad)


def test_mckay_cyclic():
    g2 = mckay_graph("cyclic:2")
    assert g2.adjacency == ((0, 2), (2, 0))
    assert g2.delta == (1, 1)
    for ell in range(3, 8):
        A = mckay_graph(f"cyclic:{ell}").adjacency
        for i in range(ell):
            assert [j for j in range(ell) if A[i][j]] == sorted({(i - 1) % ell, (i + 1) % ell})
            assert sum(A[i]) == 2


def test_mckay_binary_dihedral_two():
    g = mckay_graph("binary_dihedral:2")
    assert g.vertices == ("0+", "0-", "1", "l+", "l-")
    assert g.delta == (1, 1, 2, 1, 1)
    centre = g.index("1")
    A = g.adjacency
    assert [sum(row) for row in A] == [1, 1, 4, 1, 1]
    assert all(A[i][centre] == 1 for i in range(5) if i != centre)


@pytest.mark.parametrize("group", GROUPS)
def test_mckay_kernel(group):
    g = mckay_graph(group)
    C = g.cartan()
    k = len(g.vertices)
    assert all(g.adjacency[i][j] == g.adjacency[j][i] for i in range(k) for j in range(k))
    assert all(sum(C[i][j] * g.delta[j] for j in range(k)) == 0 for i in range(k))


def test_reflect_examples():
    g = mckay_graph("cyclic:2")
    assert reflect(g, (1, 1), 1) == (1, 1)
    assert reflect(g, (1, 1), 0) == (2, 1)
    assert reflect(g, (0, 0), 1) == (0, 0)
    assert reflect(g, (0, 0), 0) == (1, 0)


@st.composite
def group_and_vector(draw, groups=GROUPS):
    group = draw(st.sampled_from(groups))
    g = mckay_graph(group)
    d = tuple(draw(st.integers(-4, 6)) for _ in g.vertices)
    return g, d


@given(group_and_vector())
@settings(deadline=None, max_examples=200)
def test_weight_matches_closed_form(gd):
    g, d = gd
    assert weight(g, d) == oracles.closed_form_weight(g.cartan(), d)


LOOPLESS = [x for x in GROUPS if x != "cyclic:1"]


@given(group_and_vector(LOOPLESS), st.data())
@settings(deadline=None, max_examples=200)
def test_weight_is_orbit_invariant(gd, data):
    g, d = gd
    i = data.draw(st.integers(0, len(g.vertices) - 1))
    assert weight(g, reflect(g, d, i)) == weight(g, d)


@given(group_and_vector(LOOPLESS), st.data())
@settings(deadline=None, max_examples=200)
def test_reflect_is_involution(gd, data):
    g, d = gd
    i = data.draw(st.integers(0, len(g.vertices) - 1))
    assert reflect(g, reflect(g, d, i), i) == d


def test_rank_one_self_loop_is_not_involution():
    # the single vertex is its own neighbour twice, so the affine shift accumulates
    g = mckay_graph("cyclic:1")
    assert g.adjacency == ((2,),)
    assert reflect(g, (3,), 0) == (4,)
    assert weight(g, (3,)) == 3
    assert weight(g, (4,)) == 4


def test_weight_examples():
    g2 = mckay_graph("cyclic:2")
    assert weight(g2, (1, 0)) == 0
    assert weight(g2, partition_to_rootvector((2, 2, 1), 2)) == 2
    for group in GROUPS:
        g = mckay_graph(group)
        for r in range(4):
            assert weight(g, tuple(r * x for x in g.delta)) == r


def test_norm_changes_under_reflection():
    # reflections preserve the weight, not the dimension-weighted size
    g2 = mckay_graph("cyclic:2")
    assert norm(g2, (0, 0)) == 0
    assert norm(g2, reflect(g2, (0, 0), 0)) == 1
    g3 = mckay_graph("cyclic:3")
    assert norm(g3, reflect(g3, (1, 0, 0), 1)) == 2


@pytest.mark.parametrize(
    "lam, ell, d",
    [((1,), 4, (1, 0, 0, 0)), ((2, 2, 1), 2, (3, 2)), ((4,), 5, (1, 1, 1, 1, 0)), ((), 3, (0, 0, 0))],
)
def test_partition_to_rootvector(lam, ell, d):
    assert partition_to_rootvector(lam, ell) == d


def test_partition_weight_is_number_of_removed_hooks():
    for n in range(0, 9):
        for lam in partitions_of(n):
            for ell in range(1, 7):
                g = mckay_graph(f"cyclic:{ell}")
                d = partition_to_rootvector(lam, ell)
                assert weight(g, d) == core_quotient(lam, ell).r
                assert weight(g, partition_to_rootvector(lam.conjugate(), ell)) == weight(g, d)


def _cores_oracle(ell, n):
    total = 0
    for m in range(n + 1):
        if (n - m) % ell:
            continue
        for lam in oracles.parts_of(m):
            if oracles.cores_by_removal(lam, ell) == {(lam, 0)}:
                total += 1
    return total


def test_component_count_matches_cores():
    for ell in range(1, 5):
        for n in range(0, 8):
            comps = enumerate_components(f"cyclic:{ell}", n)
            assert len(comps) == _cores_oracle(ell, n) == core_census(ell, n)
            assert all(w >= 0 for _, w in comps)


def test_components_n_zero():
    for group in GROUPS:
        comps = enumerate_components(group, 0)
        assert comps == [(tuple(0 for _ in mckay_graph(group).vertices), 0)]


def test_components_report_shape():
    rep = components_report("cyclic:3", 5)
    assert rep["group"] == "cyclic:3" and rep["n"] == 5
    assert len(rep["components"]) == 3
    assert {c["wt"] for c in rep["components"]} == {0, 1}
    assert set(rep["components"][0]["d"]) == {"tau^0", "tau^1", "tau^2"}


def test_symmetric_rootvector_has_even_weight():
    for n in range(0, 11):
        for lam in partitions_of(n):
            if not is_symmetric(lam):
                continue
            for l in (1, 2, 3):
                g = mckay_graph(f"binary_dihedral:{l}")
                d = symmetric_partition_to_rootvector(lam, l)
                assert norm(g, d) == n
                assert 2 * weight(g, d) == core_quotient(lam, 2 * l).r
    with pytest.raises(ValueError):
        symmetric_partition_to_rootvector((2,), 1)


def _symmetric_cores_oracle(l, n, modulus):
    total = 0
    for m in range(n + 1):
        if (n - m) % modulus:
            continue
        for lam in oracles.parts_of(m):
            if lam == oracles.conj(lam) and oracles.cores_by_removal(lam, 2 * l) == {(lam, 0)}:
                total += 1
    return total


def test_symmetric_core_census_against_oracle():
    for l in (1, 2):
        for n in range(0, 11):
            for modulus in (2 * l, 4 * l):
                assert symmetric_core_census(l, n, modulus) == _symmetric_cores_oracle(l, n, modulus)


def test_fixed_point_components_are_symmetric_cores_mod_4l():
    for l in (1, 2):
        for n in range(0, 11):
            c = dihedral_census(l, n)
            assert c["one_core_per_component"]
            assert c["fixed_point_components"] == c["symmetric_cores_mod_4l"]


def test_dihedral_census_values():
    # the full weight-zero census is larger than the symmetric core count
    c = dihedral_census(2, 8)
    assert {k: c[k] for k in ("components", "weight_zero", "fixed_point_components")} == {
        "components": 4,
        "weight_zero": 3,
        "fixed_point_components": 1,
    }
    assert c["symmetric_cores_mod_2l"] == 2 and c["symmetric_cores_mod_4l"] == 1
    c = dihedral_census(1, 10)
    assert c["symmetric_cores_mod_2l"] == 3 and c["symmetric_cores_mod_4l"] == 2
