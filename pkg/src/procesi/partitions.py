"""Partitions, hooks, abacus cores and quotients, fake degrees.

Cells are ``(row, column)`` pairs, 1-based, and the content of a cell is
``column - row``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from .exactnum import CycInt, LaurentQT, NotDivisible, _pdivmod, eval_at_roots

__all__ = [
    "Partition",
    "CoreQuotientData",
    "FakeDegree",
    "partitions_of",
    "parse_partition",
    "format_partition",
    "conjugate",
    "hook_multiset",
    "n_statistic",
    "beta_set",
    "from_beta_set",
    "core_quotient",
    "is_symmetric",
    "is_core",
    "fake_degree",
    "phi_valuation",
    "dimension",
    "centralizer_order",
    "cores_of_size",
    "reflected_abacus",
    "half_weight_symmetric",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Compares and hashes like the underlying tuple, so plain tuples can be
    used as dictionary keys interchangeably.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield i, j

    def hook(self, i: int, j: int) -> int:
        """Hook length of the cell ``(i, j)``."""
        arm = self[i - 1] - j
        leg = sum(1 for p in self[i:] if p >= j)
        return arm + leg + 1

    def __repr__(self):
        return f"Partition({format_partition(self)})"

    def __str__(self):
        return format_partition(self)


@dataclass(frozen=True)
class CoreQuotientData:
    core: Partition
    quotient: tuple[Partition, ...]
    r: int
    g: int


@dataclass(frozen=True)
class FakeDegree:
    """Fake degree polynomial, coefficients listed from ``q**0`` upwards."""

    coeffs: tuple[int, ...]

    @property
    def poly(self) -> LaurentQT:
        return LaurentQT.from_q_coeffs(self.coeffs)

    def at_one(self) -> int:
        return sum(self.coeffs)

    def mod_classes(self, ell: int) -> tuple[int, ...]:
        """``F(tau)`` in ``Z[mu_ell]``: coefficient sums by degree mod ``ell``."""
        out = [0] * ell
        for a, c in enumerate(self.coeffs):
            out[a % ell] += c
        return tuple(out)

    def at_root(self, ell: int, k: int = 1) -> CycInt:
        return eval_at_roots(self.poly, ell, k)


_PARTITION_RE = re.compile(r"^\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*\]\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"[2,2,1]"`` (``"[]"`` is the empty partition)."""
    m = _PARTITION_RE.match(text)
    if not m:
        raise ValueError(f"not a partition literal: {text!r}")
    body = m.group(1)
    parts = [int(x) for x in body.split(",")] if body else []
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return []
    return [Partition(p) for p in _partitions(n, n)]


def conjugate(lam: Iterable[int]) -> Partition:
    return Partition(lam).conjugate()


def hook_multiset(lam: Iterable[int]) -> list[int]:
    """Hook lengths of all cells, sorted decreasingly."""
    lam = Partition(lam)
    conj = lam.conjugate()
    return sorted(
        (lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in lam.cells()), reverse=True
    )


def n_statistic(lam: Iterable[int]) -> int:
    return sum(i * p for i, p in enumerate(lam))


def dimension(lam: Iterable[int]) -> int:
    """Dimension of the irreducible representation (hook length formula)."""
    lam = Partition(lam)
    return factorial(lam.size) // prod(hook_multiset(lam))


def centralizer_order(mu: Iterable[int]) -> int:
    """``z_mu = prod i**m_i * m_i!`` for the cycle type ``mu``."""
    mult: dict[int, int] = {}
    for p in mu:
        mult[p] = mult.get(p, 0) + 1
    return prod(i**m * factorial(m) for i, m in mult.items())


def is_symmetric(lam: Iterable[int]) -> bool:
    lam = Partition(lam)
    return lam == lam.conjugate()


# ---------------------------------------------------------------------------
# beta sets and the abacus


def beta_set(lam: Iterable[int], beads: int | None = None) -> tuple[int, ...]:
    """First-column hook lengths, padded to ``beads`` entries if given."""
    lam = tuple(lam)
    k = len(lam) if beads is None else beads
    if k < len(lam):
        raise ValueError("bead count smaller than the number of parts")
    padded = lam + (0,) * (k - len(lam))
    return tuple(p + k - i for i, p in enumerate(padded, start=1))


def from_beta_set(beads: Iterable[int]) -> Partition:
    bs = sorted(beads, reverse=True)
    if len(set(bs)) != len(bs) or (bs and bs[-1] < 0):
        raise ValueError(f"invalid beta set: {bs}")
    k = len(bs)
    return Partition(b - (k - i) for i, b in enumerate(bs, start=1))


def core_quotient(lam: Iterable[int], ell: int) -> CoreQuotientData:
    """``ell``-core and ``ell``-quotient via the ``ell``-runner abacus.

    The beta set is padded to a multiple of ``ell`` beads; quotient
    component ``i`` is read off runner ``i``.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    lam = Partition(lam)
    k = -(-len(lam) // ell) * ell
    beads = beta_set(lam, k)
    runners: list[list[int]] = [[] for _ in range(ell)]
    for b in beads:
        runners[b % ell].append(b // ell)
    core_beads = []
    quotient = []
    for r, levels in enumerate(runners):
        core_beads.extend(r + ell * h for h in range(len(levels)))
        quotient.append(from_beta_set(levels))
    core = from_beta_set(core_beads)
    weight = sum(p.size for p in quotient)
    assert core.size + ell * weight == lam.size
    return CoreQuotientData(core, tuple(quotient), weight, core.size)


def reflected_abacus(lam: Iterable[int], ell: int) -> tuple[int, ...]:
    """Beta set of the conjugate, read off the ``ell``-abacus of ``lam`` turned upside down.

    Positions ``0..M-1`` (``M`` a multiple of ``ell`` past the largest bead)
    are reversed and beads swapped with gaps, so runner ``i`` lands on
    runner ``ell - 1 - i``.
    """
    lam = Partition(lam)
    k = -(-len(lam) // ell) * ell
    beads = set(beta_set(lam, k))
    m = -(-(k + (lam[0] if lam else 0)) // ell) * ell
    return tuple(sorted((m - 1 - x for x in range(m) if x not in beads), reverse=True))


def half_weight_symmetric(lam: Iterable[int], l: int) -> int:
    """``r_{2l}(lam) / 2`` for symmetric ``lam``.

    Reflecting the ``2l``-abacus pairs runner ``i`` with runner ``2l - 1 - i``
    and conjugates the quotient component, so the weight splits into two
    equal halves; both facts are checked.
    """
    lam = Partition(lam)
    if not is_symmetric(lam):
        raise ValueError(f"{lam} is not symmetric")
    ell = 2 * l
    if from_beta_set(reflected_abacus(lam, ell)) != lam.conjugate():
        raise AssertionError("abacus reflection does not give the conjugate")
    quot = core_quotient(lam, ell).quotient
    for i in range(l):
        if quot[ell - 1 - i] != quot[i].conjugate():
            raise AssertionError(f"runners {i} and {ell - 1 - i} are not conjugate")
    return sum(quot[i].size for i in range(l))


def is_core(lam: Iterable[int], ell: int) -> bool:
    return ell not in hook_multiset(lam) if ell > 0 else False


@lru_cache(maxsize=None)
def cores_of_size(ell: int, n: int) -> tuple[Partition, ...]:
    return tuple(p for p in partitions_of(n) if core_quotient(p, ell).r == 0)


# ---------------------------------------------------------------------------
# fake degrees


def fake_degree(lam: Iterable[int]) -> FakeDegree:
    """``q**n(lam) * prod_{i<=n}(1-q**i) / prod_cells(1-q**h)``, divided exactly."""
    lam = Partition(lam)
    num = [1]
    for i in range(1, lam.size + 1):
        num = _mulbinom(num, i)
    den = [1]
    for h in hook_multiset(lam):
        den = _mulbinom(den, h)
    quo, rem = _pdivmod(num, den)
    if rem:
        raise NotDivisible(f"hook product does not divide for {lam}")
    coeffs = [0] * n_statistic(lam) + [int(c) for c in quo]
    if any(c < 0 for c in coeffs):
        raise AssertionError(f"negative fake-degree coefficient for {lam}")
    return FakeDegree(tuple(coeffs))


def _mulbinom(p: list, k: int) -> list:
    """Multiply dense ``p`` by ``1 - q**k``."""
    out = list(p) + [0] * k
    for i, c in enumerate(p):
        out[i + k] -= c
    return out


def phi_valuation(lam: Iterable[int], j: int) -> int:
    """Multiplicity of the ``j``-th cyclotomic factor in the fake degree."""
    if j < 2:
        raise ValueError("j must be >= 2")
    lam = Partition(lam)
    multiples = lam.size // j
    hooks = sum(1 for h in hook_multiset(lam) if h % j == 0)
    return multiples - hooks
