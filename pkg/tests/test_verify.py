import pytest

from procesi.characters import CyclicSubgroupSpec, induce_product_with_cyclic
from procesi.macdonald import macdonald, mod_l_components
from procesi.partitions import core_quotient, dimension, is_symmetric, partitions_of
from procesi.symfunc import SymFunc, regular, schur
from procesi.verify import (
    SnMuModule,
    _branching_checks,
    typeA_lhs,
    typeA_rhs,
    typeD_decomposition,
    verify_edge_cases,
    verify_type_A,
    verify_type_D,
)


@pytest.mark.parametrize("lam", [(2,), (1, 1)])
def test_typeA_two_boxes(lam):
    lhs = typeA_lhs(lam, 2)
    assert lhs[0] == schur([2])
    assert lhs[1] == schur([1, 1])
    assert typeA_rhs(lam, 2) == lhs


def test_core_is_its_own_rhs():
    for lam, ell in [((2, 1), 2), ((3, 1, 1), 3), ((1,), 5)]:
        assert core_quotient(lam, ell).r == 0
        assert typeA_rhs(lam, ell) == typeA_lhs(lam, ell)


def test_rhs_total_is_regular():
    # summing over i collapses the cyclic twist: Ind of a regular module is regular
    for n in range(1, 8):
        for lam in partitions_of(n):
            for ell in (2, 3, 4):
                total = typeA_rhs(lam, ell).total()
                assert total == regular(n)


def test_rhs_three_one():
    rhs = typeA_rhs((3, 1), 2)
    assert rhs.total() == regular(4)
    assert sum(dimension(mu) * v for c in rhs.components for mu, v in c.terms.items()) == 24


def test_rhs_independent_of_summation_order():
    for lam in [(4, 2, 1), (3, 3, 1), (5, 2), (2, 2, 2, 1)]:
        n = sum(lam)
        for ell in (2, 3, 4):
            cq = core_quotient(lam, ell)
            comps = mod_l_components(macdonald(cq.core), ell).components
            spec = CyclicSubgroupSpec(n, ell, cq.g)
            out = []
            for i in range(ell):
                acc = SymFunc(n)
                for j in reversed(range(ell)):
                    acc = induce_product_with_cyclic(comps[j], i - j, spec) + acc
                out.append(acc)
            assert SnMuModule(n, ell, tuple(out)) == typeA_rhs(lam, ell)


def test_rhs_only_depends_on_core_and_size():
    # two partitions with the same core and size share the right-hand side
    for n in range(2, 8):
        for ell in (2, 3):
            by_core = {}
            for lam in partitions_of(n):
                by_core.setdefault(core_quotient(lam, ell).core, []).append(lam)
            for lams in by_core.values():
                first = typeA_rhs(lams[0], ell)
                assert all(typeA_rhs(lam, ell) == first for lam in lams[1:])


def test_verify_type_A_sweeps():
    rep = verify_type_A(4, 2)
    assert rep["summary"] == {"total": 5, "passed": 5, "failed": 0}
    assert [e["lambda"] for e in rep["per_lambda"]] == ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]
    for n in range(0, 6):
        rep = verify_type_A(n, 1)
        assert rep["summary"]["failed"] == 0
        assert all(e["r"] == n and e["core"] == "[]" for e in rep["per_lambda"])


def test_verify_type_A_parallel_matches_serial():
    assert verify_type_A(5, 3, jobs=2) == verify_type_A(5, 3, jobs=1)


def test_modules_are_genuine():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for ell in (2, 3, 5):
                assert typeA_lhs(lam, ell).is_genuine()
                assert typeA_rhs(lam, ell).is_genuine()


def test_module_diff_reports_first_difference():
    a = typeA_lhs((2,), 2)
    b = SnMuModule(2, 2, (schur([1, 1]), schur([2])))
    d = a.diff(b)
    assert d is not None and d["i"] == 0
    assert a.diff(a) is None


def test_typeD_trivial_branch():
    dec = typeD_decomposition((2, 1), 1)
    comps = mod_l_components(macdonald((2, 1)), 2)
    assert dec.parts["0+0-"] == comps[0]
    assert dec.parts["l+"] == dec.parts["l-"]
    assert dec.parts["l+"].scale(2) == comps[1]
    assert dec.weighted_total() == regular(3)


def test_typeD_computed_branch():
    rep = verify_type_D(8, 2)
    entry = next(e for e in rep["per_lambda"] if e["lambda"] == "[4,2,1,1]")
    assert entry["route2"] == "computed"
    assert entry["pass"]
    dec = typeD_decomposition((4, 2, 1, 1), 2)
    assert set(dec.parts) == {"0+0-", "1", "l+", "l-"}
    assert dec.weighted_total() == regular(8)


def test_typeD_rejects_non_symmetric():
    with pytest.raises(ValueError):
        typeD_decomposition((3, 1), 1)


def test_typeD_sweeps_small():
    for n in range(0, 7):
        for l in (1, 2):
            rep = verify_type_D(n, l)
            assert rep["summary"]["failed"] == 0
            assert rep["summary"]["total"] == sum(1 for lam in partitions_of(n) if is_symmetric(lam))


def test_edge_cases_four_two():
    rep = verify_edge_cases(4, 2)
    names = [e["lambda"] for e in rep["P_o"]]
    expected = [lam for lam in partitions_of(4) if core_quotient(lam, 2).g <= 1]
    assert len(names) == len(expected)
    assert all(e["pass"] for e in rep["P_o"])
    assert rep["summary"]["failed"] == 0 and rep["summary"]["blm_failed"] == 0


def test_edge_cases_three_three():
    rep = verify_edge_cases(3, 3)
    # every partition of 3 has empty 3-core
    assert [b["g"] for b in rep["BLM"]] == [0]
    assert all(b["pass"] for b in rep["BLM"])
    assert {e["lambda"] for e in rep["P_lt_ell"]} == {"[3]", "[2,1]", "[1,1,1]"}
    assert rep["summary"]["failed"] == 0


def test_edge_cases_non_prime_has_no_second_section():
    rep = verify_edge_cases(4, 4)
    assert "P_lt_ell" not in rep
    assert rep["summary"]["failed"] == 0


def test_branching_checks_small():
    for n in range(0, 9):
        for lam in partitions_of(n):
            for ell in range(2, 6):
                g = core_quotient(lam, ell).g
                branching, equal = _branching_checks(lam, ell, g)
                assert branching
                if g < ell and ell in (2, 3, 5):
                    assert equal


def test_equal_multiplicity_needs_prime_ell():
    assert _branching_checks((4, 2), 4, 2) == (True, False)
