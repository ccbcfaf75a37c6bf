import pytest
from hypothesis import given, settings, strategies as st

import oracles
from procesi.exactnum import CycInt, LaurentQT
from procesi.partitions import (
    Partition,
    beta_set,
    centralizer_order,
    conjugate,
    core_quotient,
    cores_of_size,
    dimension,
    fake_degree,
    format_partition,
    from_beta_set,
    half_weight_symmetric,
    hook_multiset,
    is_core,
    is_symmetric,
    n_statistic,
    parse_partition,
    partitions_of,
    phi_valuation,
    reflected_abacus,
)


@st.composite
def partitions(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    lams = partitions_of(n)
    return lams[draw(st.integers(0, len(lams) - 1))]


def test_partition_validation():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


@pytest.mark.parametrize(
    "text, parts",
    [("[2,2,1]", (2, 2, 1)), ("[]", ()), (" [ 3 , 1 ] ", (3, 1))],
)
def test_parse(text, parts):
    assert parse_partition(text) == parts


@pytest.mark.parametrize("text", ["[2,1,3]", "2,1", "[a]", "[0,1]"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text)


def test_format_round_trip():
    for lam in partitions_of(6):
        assert parse_partition(format_partition(lam)) == lam
    assert format_partition(()) == "[]"


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]


@pytest.mark.parametrize(
    "lam, expected", [((2, 2, 1), (3, 2)), ((), ()), ((5,), (1, 1, 1, 1, 1))]
)
def test_conjugate(lam, expected):
    assert conjugate(lam) == expected


@given(partitions())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam) == oracles.conj(lam)


@pytest.mark.parametrize(
    "lam, expected", [((2, 2, 1), [4, 3, 2, 1, 1]), ((1,), [1]), ((4,), [4, 3, 2, 1])]
)
def test_hook_multiset(lam, expected):
    assert hook_multiset(lam) == expected


@given(partitions())
def test_hooks_against_brute_force(lam):
    brute = sorted((oracles.hook(lam, i, j) for i, j in oracles.cells(lam)), reverse=True)
    assert hook_multiset(lam) == brute


@pytest.mark.parametrize("lam, expected", [((2, 2, 1), 4), ((7,), 0), ((1, 1, 1), 3)])
def test_n_statistic(lam, expected):
    assert n_statistic(lam) == expected


def test_dimension_and_centralizer():
    assert [dimension(lam) for lam in partitions_of(4)] == [1, 3, 2, 3, 1]
    assert centralizer_order((2, 2)) == 8
    assert centralizer_order((1, 1, 1)) == 6
    for n in range(1, 8):
        assert sum(dimension(lam) ** 2 for lam in partitions_of(n)) == oracles.z((1,) * n)


@pytest.mark.parametrize(
    "lam, ell, core, r",
    [((2, 2, 1), 2, (1,), 2), ((3, 1), 2, (), 2), ((4, 2, 1), 1, (), 7), ((), 5, (), 0)],
)
def test_core_quotient_examples(lam, ell, core, r):
    cq = core_quotient(lam, ell)
    assert (cq.core, cq.r, cq.g) == (core, r, len(core) and sum(core))


def test_core_quotient_against_rim_hook_removal():
    for n in range(11):
        for lam in partitions_of(n):
            for ell in range(2, 8):
                cq = core_quotient(lam, ell)
                assert oracles.cores_by_removal(tuple(lam), ell) == {(cq.core, cq.r)}
                assert cq.g + ell * cq.r == n
                assert cq.r == sum(p.size for p in cq.quotient)
                assert len(cq.quotient) == ell


def test_core_of_core():
    # j | ell: the j-core of the ell-core is the j-core
    for n in range(11):
        for lam in partitions_of(n):
            for ell in range(2, 8):
                c = core_quotient(lam, ell).core
                for j in range(2, ell + 1):
                    if ell % j == 0:
                        assert core_quotient(c, j).core == core_quotient(lam, j).core


@given(partitions(), st.integers(0, 4))
def test_beta_set_padding(lam, extra):
    k = len(lam) + extra
    assert from_beta_set(beta_set(lam, k)) == lam
    shifted = tuple(b + extra for b in beta_set(lam)) + tuple(range(extra - 1, -1, -1))
    assert beta_set(lam, k) == shifted


def test_cores():
    assert cores_of_size(2, 3) == ((2, 1),)
    assert cores_of_size(3, 4) == ((3, 1), (2, 1, 1))
    assert all(is_core(c, 3) for c in cores_of_size(3, 5))
    assert not is_core((3, 1), 2)


def test_is_symmetric():
    assert is_symmetric((2, 1))
    assert not is_symmetric((3, 1))
    assert is_symmetric((4, 2, 1, 1))
    assert is_symmetric(())


def test_abacus_reflection_gives_conjugate():
    for n in range(11):
        for lam in partitions_of(n):
            for ell in range(1, 7):
                assert from_beta_set(reflected_abacus(lam, ell)) == conjugate(lam)


def test_symmetric_weight_is_even():
    for n in range(13):
        for lam in partitions_of(n):
            if is_symmetric(lam):
                for l in (1, 2, 3):
                    h = half_weight_symmetric(lam, l)
                    assert 2 * h == core_quotient(lam, 2 * l).r
    with pytest.raises(ValueError):
        half_weight_symmetric((3, 1), 1)


@pytest.mark.parametrize(
    "lam, coeffs",
    [((3,), [1]), ((2, 1), [0, 1, 1]), ((1, 1, 1), [0, 0, 0, 1]), ((), [1])],
)
def test_fake_degree_examples(lam, coeffs):
    assert fake_degree(lam).coeffs == tuple(coeffs)


def test_fake_degree_properties():
    for n in range(9):
        for lam in partitions_of(n):
            F = fake_degree(lam)
            assert F.at_one() == dimension(lam)
            assert all(c >= 0 for c in F.coeffs)
            # lowest term sits in degree n(lam)
            assert next(i for i, c in enumerate(F.coeffs) if c) == n_statistic(lam)


def test_fake_degree_is_coinvariant_multiplicity():
    # graded multiplicities sum to dim^2 over all lambda: Hilbert series of coinvariants
    for n in range(1, 7):
        total = [0] * (n * (n - 1) // 2 + 1)
        for lam in partitions_of(n):
            for i, c in enumerate(fake_degree(lam).coeffs):
                total[i] += c * dimension(lam)
        # prod_{i<=n} (1 + q + ... + q^{i-1})
        expected = [1]
        for i in range(1, n + 1):
            new = [0] * (len(expected) + i - 1)
            for a, x in enumerate(expected):
                for b in range(i):
                    new[a + b] += x
            expected = new
        assert total == expected


@pytest.mark.parametrize("lam, j", [((2, 1), 3), ((5,), 2), ((5,), 5), ((2, 2, 1), 2)])
def test_phi_valuation_examples(lam, j):
    assert phi_valuation(lam, j) == 0


def test_phi_valuation_matches_root_evaluation():
    for n in range(1, 8):
        for lam in partitions_of(n):
            F = fake_degree(lam)
            for j in range(2, 8):
                vanishes = F.at_root(j, 1) == CycInt(j)
                assert vanishes == (phi_valuation(lam, j) > 0)


def test_fake_degree_nonvanishing_on_small_cores():
    for n in range(1, 9):
        for lam in partitions_of(n):
            for ell in range(2, 7):
                g = core_quotient(lam, ell).g
                prime = ell in (2, 3, 5, 7)
                if g <= 1 or (prime and g < ell):
                    F = fake_degree(lam)
                    assert all(F.at_root(ell, k) != CycInt(ell) for k in range(ell))


def test_fake_degree_mod_classes():
    F = fake_degree((2, 1))
    assert F.mod_classes(2) == (1, 1)
    assert F.mod_classes(3) == (0, 1, 1)
    assert F.poly == LaurentQT.from_q_coeffs([0, 1, 1])
