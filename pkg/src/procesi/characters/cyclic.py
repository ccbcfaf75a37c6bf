"""The cyclic subgroup generated by ``r`` disjoint ``ell``-cycles.

The generator fixes the first ``g`` points and cycles the remaining ones
in consecutive blocks of length ``ell``.  ``theta`` is the character sending
the generator to ``zeta_ell``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable

from ..exactnum import CycInt
from ..partitions import Partition, centralizer_order, partitions_of
from .symmetric import ClassFunction, character_value, cycles_to_perm

__all__ = [
    "CyclicSubgroupSpec",
    "power_cycle_type",
    "induce_from_cyclic",
    "cyclic_frobenius",
    "restriction_coeffs",
    "induce_product_with_cyclic",
]


@dataclass(frozen=True)
class CyclicSubgroupSpec:
    n: int
    ell: int
    g: int = 0

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be >= 1")
        if self.g < 0 or (self.n - self.g) < 0 or (self.n - self.g) % self.ell:
            raise ValueError(f"n - g = {self.n - self.g} is not a multiple of {self.ell}")

    @property
    def r(self) -> int:
        return (self.n - self.g) // self.ell

    @property
    def w(self) -> tuple[int, ...]:
        """The generator as a permutation of ``0..n-1``."""
        cycles = [
            range(self.g + b * self.ell, self.g + (b + 1) * self.ell) for b in range(self.r)
        ]
        return cycles_to_perm(self.n, cycles)


def _power_type(ell: int, r: int, g: int, i: int) -> Partition:
    d = gcd(i, ell)
    return Partition([ell // d] * (r * d) + [1] * g)


def power_cycle_type(spec: CyclicSubgroupSpec, i: int) -> Partition:
    """Cycle type of ``w**i``."""
    return _power_type(spec.ell, spec.r, spec.g, i)


@lru_cache(maxsize=None)
def _induced_values(ell: int, r: int, k: int) -> tuple[tuple[Partition, int], ...]:
    k %= ell
    by_type: dict[Partition, dict[int, int]] = {}
    for i in range(ell):
        mu = _power_type(ell, r, 0, i)
        by_type.setdefault(mu, {})
        by_type[mu][k * i] = by_type[mu].get(k * i, 0) + 1
    out = []
    for mu, powers in by_type.items():
        s = CycInt.from_powers(ell, powers) * centralizer_order(mu)
        v = s.exact_div(ell)
        if not v.is_rational():
            raise AssertionError(f"induced character not integral at {mu}")
        if v.to_int():
            out.append((mu, v.to_int()))
    return tuple(sorted(out))


def induce_from_cyclic(spec: CyclicSubgroupSpec, k: int) -> ClassFunction:
    """Character of ``Ind_C^{S_{r ell}} theta**k`` (requires ``g == 0``).

    Uses ``chi(mu) = z_mu / ell * sum_{i : type(w^i) = mu} zeta**(k i)``.
    With ``r == 0`` the group is trivial and only ``k = 0`` survives.
    """
    if spec.g != 0:
        raise ValueError("induce_from_cyclic expects g == 0")
    if spec.r == 0:
        return ClassFunction(0, {(): 1 if k % spec.ell == 0 else 0})
    return ClassFunction(spec.n, dict(_induced_values(spec.ell, spec.r, k)))


@lru_cache(maxsize=None)
def cyclic_frobenius(ell: int, r: int, k: int):
    """``Fr(Ind_C theta**k)`` in the Schur basis."""
    from ..symfunc import frobenius

    return frobenius(induce_from_cyclic(CyclicSubgroupSpec(ell * r, ell, 0), k % ell))


def induce_product_with_cyclic(V, k: int, spec: CyclicSubgroupSpec):
    """``Fr(Ind_{S_g x C}^{S_n}(V (x) theta**k))`` for a symmetric function ``V`` of degree ``g``."""
    from ..symfunc import induced_product

    if V.degree != spec.g:
        raise ValueError(f"V has degree {V.degree}, expected {spec.g}")
    if spec.r == 0:
        return V if k % spec.ell == 0 else V.scale(0)
    return induced_product(V, cyclic_frobenius(spec.ell, spec.r, k))


def restriction_coeffs(lam: Iterable[int], ell: int, g: int) -> dict[Partition, list[int]]:
    """Multiplicities ``a[mu][j]`` of ``V_mu (x) theta**j`` in ``Res_{S_g x C} V_lam``.

    Keys run over all partitions of ``g``; each value is a list of length ``ell``.
    """
    lam = Partition(lam)
    spec = CyclicSubgroupSpec(lam.size, ell, g)
    r = spec.r
    types = [_power_type(ell, r, 0, i) for i in range(ell)]
    rhos = partitions_of(g)
    gfact = factorial(g)
    out: dict[Partition, list[int]] = {}
    for mu in rhos:
        # c_i = sum_rho chi_mu(rho) chi_lam(rho + type_i) / z_rho, scaled by g!
        c = []
        for ty in types:
            acc = Fraction(0)
            for rho in rhos:
                a = character_value(mu, rho)
                if not a:
                    continue
                joined = Partition(sorted(tuple(rho) + tuple(ty), reverse=True))
                acc += Fraction(a * character_value(lam, joined), centralizer_order(rho))
            c.append(int(acc * gfact))
        row = []
        for j in range(ell):
            s = CycInt.from_powers(ell, [(-i * j, c[i]) for i in range(ell)])
            v = s.exact_div(ell * gfact)
            if not v.is_rational() or v.to_int() < 0:
                raise AssertionError(f"bad restriction multiplicity {v} for {lam}, {mu}, {j}")
            row.append(v.to_int())
        out[mu] = row
    return out
