"""Characters of the symmetric group.

Irreducible characters come from the Murnaghan-Nakayama rule on beta sets.
Permutations are tuples of images on ``0..n-1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Callable, Iterable, Mapping

from ..exactnum import CycInt
from ..partitions import Partition, centralizer_order, partitions_of

__all__ = [
    "character_value",
    "character_table",
    "ClassFunction",
    "cycle_type",
    "perm_compose",
    "perm_inverse",
    "perm_power",
    "perm_order",
    "identity_perm",
    "cycles_to_perm",
    "perm_sign",
    "all_perms",
]


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama


@lru_cache(maxsize=None)
def _mn(beads: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Character value on a beta set; ``beads`` sorted ascending."""
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    present = set(beads)
    total = 0
    for idx, b in enumerate(beads):
        nb = b - k
        if nb < 0 or nb in present:
            continue
        # beads strictly between nb and b
        between = sum(1 for c in beads[:idx] if c > nb)
        new = tuple(sorted(beads[:idx] + (nb,) + beads[idx + 1:]))
        val = _mn(new, rest)
        if val:
            total += -val if between % 2 else val
    return total


def character_value(lam: Iterable[int], mu: Iterable[int]) -> int:
    """``chi_lam`` on the class of cycle type ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    k = len(lam)
    beads = tuple(sorted(p + k - i for i, p in enumerate(lam, start=1)))
    return _mn(beads, tuple(mu))


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    """``table[lam][mu] = chi_lam(mu)``."""
    parts = partitions_of(n)
    return {lam: {mu: character_value(lam, mu) for mu in parts} for lam in parts}


# ---------------------------------------------------------------------------
# class functions


def _conj(v):
    return v.conjugate() if isinstance(v, CycInt) else v


class ClassFunction:
    """A function on the conjugacy classes of ``S_n``.

    Values are ints, Fractions or :class:`CycInt`; missing classes are zero.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping | None = None):
        self.n = n
        vals = {}
        for mu, v in (values or {}).items():
            mu = Partition(mu)
            if mu.size != n:
                raise ValueError(f"class {mu} is not a partition of {n}")
            if isinstance(v, CycInt) and v.is_rational():
                v = v.to_int()
            if isinstance(v, Fraction) and v.denominator == 1:
                v = v.numerator
            vals[mu] = v
        self.values = vals

    @classmethod
    def irreducible(cls, lam: Iterable[int]) -> "ClassFunction":
        lam = Partition(lam)
        return cls(lam.size, character_table(lam.size)[lam])

    @classmethod
    def from_function(cls, n: int, f: Callable[[Partition], object]) -> "ClassFunction":
        return cls(n, {mu: f(mu) for mu in partitions_of(n)})

    @classmethod
    def regular(cls, n: int) -> "ClassFunction":
        return cls(n, {Partition([1] * n): factorial(n)})

    def __call__(self, mu) -> object:
        return self.values.get(Partition(mu), 0)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        keys = set(self.values) | set(other.values)
        return ClassFunction(self.n, {k: self(k) + other(k) for k in keys})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return self + other.scale(-1)

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.n, {k: v * c for k, v in self.values.items()})

    def __mul__(self, other):
        """Pointwise product (the Kronecker product of representations)."""
        if not isinstance(other, ClassFunction):
            return self.scale(other)
        self._check(other)
        return ClassFunction(
            self.n, {k: v * other(k) for k, v in self.values.items() if k in other.values}
        )

    __rmul__ = __mul__

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"degree mismatch {self.n} vs {other.n}")

    def inner(self, other: "ClassFunction"):
        """``<self, other> = sum_mu self(mu) conj(other(mu)) / z_mu``."""
        self._check(other)
        total = 0
        for mu, v in self.values.items():
            w = other(mu)
            if w:
                total = total + v * _conj(w) * Fraction(1, centralizer_order(mu))
        if isinstance(total, CycInt):
            if not total.is_rational():
                raise ValueError("inner product is not rational")
            total = total.to_int()
        if isinstance(total, Fraction) and total.denominator == 1:
            total = total.numerator
        return total

    def decompose(self) -> dict[Partition, object]:
        """Multiplicities of the irreducible characters (zeros dropped)."""
        out = {}
        for lam in partitions_of(self.n):
            m = self.inner(ClassFunction.irreducible(lam))
            if m:
                out[lam] = m
        return out

    def degree(self):
        return self(Partition([1] * self.n))

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self.values.values())

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return self.n == other.n and all(self(k) == other(k) for k in keys)

    def __repr__(self):
        body = ", ".join(f"{mu}: {v}" for mu, v in sorted(self.values.items()))
        return f"ClassFunction({self.n}, {{{body}}})"


# ---------------------------------------------------------------------------
# permutations


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def perm_compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """``a * b``: apply ``b`` first, then ``a``."""
    return tuple(a[i] for i in b)


def perm_inverse(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_power(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    if k < 0:
        a, k = perm_inverse(a), -k
    out = identity_perm(len(a))
    base = a
    while k:
        if k & 1:
            out = perm_compose(base, out)
        base = perm_compose(base, base)
        k >>= 1
    return out


def cycle_type(a: tuple[int, ...]) -> Partition:
    seen = [False] * len(a)
    lengths = []
    for i in range(len(a)):
        if not seen[i]:
            n = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = a[j]
                n += 1
            lengths.append(n)
    return Partition(sorted(lengths, reverse=True))


def perm_order(a: tuple[int, ...]) -> int:
    out = 1
    for c in cycle_type(a):
        out = out * c // gcd(out, c)
    return out


def perm_sign(a: tuple[int, ...]) -> int:
    ct = cycle_type(a)
    return -1 if sum(c - 1 for c in ct) % 2 else 1


def cycles_to_perm(n: int, cycles: Iterable[Iterable[int]]) -> tuple[int, ...]:
    """Build a permutation of ``0..n-1`` from disjoint cycles."""
    img = list(range(n))
    for cyc in cycles:
        cyc = list(cyc)
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    if sorted(img) != list(range(n)):
        raise ValueError("cycles are not disjoint")
    return tuple(img)


def all_perms(n: int):
    from itertools import permutations

    return permutations(range(n))
