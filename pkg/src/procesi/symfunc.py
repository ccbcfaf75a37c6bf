"""Homogeneous symmetric functions in the Schur and power-sum bases.

Coefficients may be ints, Fractions, :class:`LaurentQT` or :class:`RationalQ`;
anything supporting ring arithmetic with Fractions works.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .characters.symmetric import ClassFunction, character_table
from .exactnum import CycInt, LaurentQT, RationalQ
from .partitions import Partition, centralizer_order, format_partition, parse_partition, partitions_of

__all__ = [
    "SymFunc",
    "schur",
    "powersum",
    "schur_to_powersum",
    "powersum_to_schur",
    "induced_product",
    "kronecker",
    "frobenius",
    "frobenius_inverse",
    "plethysm_onemq",
    "regular",
]

SCHUR = "schur"
POWERSUM = "powersum"


@lru_cache(maxsize=None)
def _s_to_p(n: int) -> dict[Partition, dict[Partition, Fraction]]:
    table = character_table(n)
    out = {}
    for lam, row in table.items():
        out[lam] = {
            mu: Fraction(v, centralizer_order(mu)) for mu, v in row.items() if v
        }
    return out


@lru_cache(maxsize=None)
def _p_to_s(n: int) -> dict[Partition, dict[Partition, int]]:
    table = character_table(n)
    out: dict[Partition, dict[Partition, int]] = {mu: {} for mu in partitions_of(n)}
    for lam, row in table.items():
        for mu, v in row.items():
            if v:
                out[mu][lam] = v
    return out


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class SymFunc:
    """A homogeneous symmetric function of fixed degree.

    ``terms`` maps partitions of ``degree`` to coefficients in the named
    basis.  Instances are treated as immutable.
    """

    __slots__ = ("degree", "basis", "terms")

    def __init__(self, degree: int, basis: str = SCHUR, terms: Mapping | None = None):
        if basis not in (SCHUR, POWERSUM):
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            if lam.size != degree:
                raise ValueError(f"{lam} has size {lam.size}, expected {degree}")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.degree = degree
        self.basis = basis
        self.terms = {k: _norm(v) for k, v in clean.items() if v}

    # --- conversion -------------------------------------------------------

    def to_powersum(self) -> "SymFunc":
        if self.basis == POWERSUM:
            return self
        conv = _s_to_p(self.degree)
        out: dict[Partition, object] = {}
        for lam, c in self.terms.items():
            for mu, f in conv[lam].items():
                out[mu] = out.get(mu, 0) + c * f
        return SymFunc(self.degree, POWERSUM, out)

    def to_schur(self) -> "SymFunc":
        if self.basis == SCHUR:
            return self
        conv = _p_to_s(self.degree)
        out: dict[Partition, object] = {}
        for mu, c in self.terms.items():
            for lam, v in conv[mu].items():
                out[lam] = out.get(lam, 0) + c * v
        return SymFunc(self.degree, SCHUR, out)

    def to_basis(self, basis: str) -> "SymFunc":
        return self.to_schur() if basis == SCHUR else self.to_powersum()

    # --- linear structure -------------------------------------------------

    def coeff(self, lam) -> object:
        return self.terms.get(Partition(lam), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot add symmetric functions of different degrees")
        other = other.to_basis(self.basis)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(self.degree, self.basis, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return induced_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def map_coeffs(self, f: Callable) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {k: f(v) for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        a, b = self.to_schur().terms, other.to_schur().terms
        if set(a) != set(b):
            return False
        return all(a[k] == b[k] for k in a)

    def __hash__(self):
        return hash((self.degree, frozenset(self.to_schur().terms.items())))

    # --- display / serialization -----------------------------------------

    def __str__(self):
        letter = "s" if self.basis == SCHUR else "p"
        if not self.terms:
            return "0"
        pieces = []
        for lam in sorted(self.terms, reverse=True):
            c = self.terms[lam]
            base = f"{letter}{format_partition(lam)}"
            text = str(c)
            if text == "1":
                pieces.append(base)
            elif text == "-1":
                pieces.append("-" + base)
            elif _is_atom(c, text):
                pieces.append(f"{text}*{base}")
            else:
                pieces.append(f"({text})*{base}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"SymFunc({self.degree}, {self.basis}, {self})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"partition": format_partition(lam), "coeff": _coeff_to_json(self.terms[lam])}
                for lam in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        terms = {
            parse_partition(item["partition"]): _coeff_from_json(item["coeff"])
            for item in data["terms"]
        }
        return cls(int(data["degree"]), data["basis"], terms)


def _is_atom(c, text: str) -> bool:
    if isinstance(c, int):
        return True
    if isinstance(c, LaurentQT) and len(c) == 1:
        return True
    return " " not in text


def _coeff_to_json(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, LaurentQT):
        if c.is_integral():
            return {"laurent": c.to_json()}
        return {"laurent": [[a, b, str(v)] for (a, b), v in sorted(c.items())]}
    if isinstance(c, RationalQ):
        return {"shift": c.shift, "num": list(c.num), "den": list(c.den)}
    raise TypeError(f"cannot serialize coefficient {c!r}")


def _coeff_from_json(x):
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if "laurent" in x:
        return LaurentQT({(a, b): Fraction(c) for a, b, c in x["laurent"]})
    return RationalQ._raw(x["shift"], x["num"], x["den"])


# ---------------------------------------------------------------------------
# constructors


def schur(lam: Iterable[int], coeff=1) -> SymFunc:
    lam = Partition(lam)
    return SymFunc(lam.size, SCHUR, {lam: coeff})


def powersum(mu: Iterable[int], coeff=1) -> SymFunc:
    mu = Partition(mu)
    return SymFunc(mu.size, POWERSUM, {mu: coeff})


def regular(n: int) -> SymFunc:
    """``p_1**n``, the Frobenius image of the regular representation, in Schur form."""
    return powersum([1] * n).to_schur()


def schur_to_powersum(f: SymFunc) -> SymFunc:
    return f.to_powersum()


def powersum_to_schur(f: SymFunc) -> SymFunc:
    return f.to_schur()


# ---------------------------------------------------------------------------
# products


def induced_product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Ordinary product of symmetric functions (induction from a Young subgroup)."""
    fp, gp = f.to_powersum(), g.to_powersum()
    out: dict[Partition, object] = {}
    for mu, a in fp.terms.items():
        for nu, b in gp.terms.items():
            key = Partition(sorted(mu + nu, reverse=True))
            out[key] = out.get(key, 0) + a * b
    return SymFunc(f.degree + g.degree, POWERSUM, out).to_basis(f.basis)


def kronecker(f: SymFunc, g: SymFunc) -> SymFunc:
    """Internal product: pointwise product of the corresponding characters."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch {f.degree} vs {g.degree}")
    fp, gp = f.to_powersum(), g.to_powersum()
    out = {}
    for mu, a in fp.terms.items():
        b = gp.terms.get(mu)
        if b:
            out[mu] = a * b * centralizer_order(mu)
    return SymFunc(f.degree, POWERSUM, out).to_basis(f.basis)


# ---------------------------------------------------------------------------
# Frobenius characteristic


def frobenius(chi: ClassFunction) -> SymFunc:
    """``sum_mu chi(mu) p_mu / z_mu``, returned in the Schur basis."""
    out = {}
    for mu, v in chi.values.items():
        if isinstance(v, CycInt):
            v = v.to_int()
        out[mu] = Fraction(v, 1) / centralizer_order(mu)
    return SymFunc(chi.n, POWERSUM, out).to_schur()


def frobenius_inverse(f: SymFunc) -> ClassFunction:
    fp = f.to_powersum()
    return ClassFunction(
        f.degree, {mu: c * centralizer_order(mu) for mu, c in fp.terms.items()}
    )


# ---------------------------------------------------------------------------
# plethysm


def plethysm_onemq(lam: Iterable[int]) -> SymFunc:
    """``s_lam[Z/(1-q)]`` in the Schur basis with :class:`RationalQ` coefficients.

    Every ``p_k`` in the power-sum expansion becomes ``p_k / (1 - q**k)``.
    """
    lam = Partition(lam)
    out = {}
    for mu, c in _s_to_p(lam.size)[lam].items():
        den = LaurentQT.const(1)
        for k in mu:
            den = den * (1 - LaurentQT.monomial(k, 0))
        out[mu] = RationalQ(LaurentQT.const(c), den)
    return SymFunc(lam.size, POWERSUM, out).to_schur()
