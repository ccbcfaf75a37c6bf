"""Binary dihedral group of order ``4l``: character table and permutation model.

Group elements are written ``w^a`` or ``s w^a`` with ``0 <= a < 2l``, where
``w`` has order ``2l``, ``s**2 = w**l`` and ``s w s**-1 = w**-1``.
Irreducible characters are labelled ``"0+"``, ``"0-"``, ``"l+"``, ``"l-"``
and ``"1"``..``"l-1"`` for the two-dimensional ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm

from ..exactnum import CycInt
from ..partitions import centralizer_order
from .symmetric import (
    ClassFunction,
    cycle_type,
    cycles_to_perm,
    identity_perm,
    perm_compose,
    perm_inverse,
    perm_power,
)

__all__ = [
    "BinaryDihedralTable",
    "DihedralEmbedding",
    "build_dihedral_embedding",
    "induce_from_dihedral",
    "binary_dihedral_table",
    "dihedral_frobenius",
    "embedding_from_perms",
]


@dataclass(frozen=True)
class BDClass:
    label: str
    size: int
    kind: str  # "w" or "s"
    a: int  # representative is w^a or s w^a


class BinaryDihedralTable:
    """Character table of the binary dihedral group of order ``4l``.

    Values are :class:`CycInt` of order ``lcm(2l, 4)``.
    """

    def __init__(self, l: int):
        if l < 1:
            raise ValueError("l must be >= 1")
        self.l = l
        self.order = 4 * l
        self.N = lcm(2 * l, 4)
        classes = [BDClass("1", 1, "w", 0), BDClass("-1", 1, "w", l)]
        classes += [BDClass(f"w^{p}", 2, "w", p) for p in range(1, l)]
        classes += [BDClass("s", l, "s", 0), BDClass("sw", l, "s", 1)]
        self.classes = tuple(classes)
        self.irreps = ("0+", "0-") + tuple(str(k) for k in range(1, l)) + ("l+", "l-")

    def dim(self, chi: str) -> int:
        return 1 if chi in ("0+", "0-", "l+", "l-") else 2

    @property
    def dims(self) -> dict[str, int]:
        return {chi: self.dim(chi) for chi in self.irreps}

    def _z(self, k: int) -> CycInt:
        return CycInt.zeta(self.N, k)

    def element_value(self, chi: str, kind: str, a: int) -> CycInt:
        """Value of ``chi`` on ``w^a`` (kind ``"w"``) or ``s w^a`` (kind ``"s"``)."""
        l, N = self.l, self.N
        a %= 2 * l
        step = N // (2 * l)  # zeta_{2l} = zeta_N ** step
        one = CycInt.integer(N, 1)
        if chi in ("0+", "0-"):
            if kind == "w" or chi == "0+":
                return one
            return -one
        if chi in ("l+", "l-"):
            sign = -1 if a % 2 else 1
            if kind == "w":
                return one * sign
            if l % 2 == 0:
                base = -one
            else:
                base = self._z(N // 4)
            if chi == "l-":
                base = -base
            return base * sign
        k = int(chi)
        if kind == "s":
            return CycInt(N)
        return self._z(step * k * a) + self._z(-step * k * a)

    def value(self, chi: str, cls: str) -> CycInt:
        c = self.class_by_label(cls)
        return self.element_value(chi, c.kind, c.a)

    def class_by_label(self, label: str) -> BDClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(label)

    def class_of(self, kind: str, a: int) -> str:
        l = self.l
        a %= 2 * l
        if kind == "s":
            return "s" if a % 2 == 0 else "sw"
        if a == 0:
            return "1"
        if a == l:
            return "-1"
        return f"w^{min(a, 2 * l - a)}"

    def inner(self, chi1: str, chi2: str) -> int:
        total = CycInt(self.N)
        for c in self.classes:
            total = total + self.element_value(chi1, c.kind, c.a) * self.element_value(
                chi2, c.kind, c.a
            ).conjugate() * c.size
        return total.exact_div(self.order).to_int()

    def expand_induced(self, i: int) -> dict[str, int]:
        """Irreducible constituents of the character induced from ``tau_{2l}**i``."""
        l = self.l
        i %= 2 * l
        if i == 0:
            return {"0+": 1, "0-": 1}
        if i == l:
            return {"l+": 1, "l-": 1}
        return {str(min(i, 2 * l - i)): 1}

    def table(self) -> dict[str, dict[str, CycInt]]:
        return {chi: {c.label: self.value(chi, c.label) for c in self.classes} for chi in self.irreps}

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "order": self.N,
            "classes": [{"label": c.label, "size": c.size} for c in self.classes],
            "values": {
                chi: {k: list(v.coeffs) for k, v in row.items()} for chi, row in self.table().items()
            },
        }


@lru_cache(maxsize=None)
def binary_dihedral_table(l: int) -> BinaryDihedralTable:
    return BinaryDihedralTable(l)


@dataclass(frozen=True)
class DihedralEmbedding:
    """Binary dihedral group realized inside ``S_m`` with ``m = 2 l r``.

    ``elements`` lists ``(kind, a, perm)`` for the ``4l`` group elements.
    """

    l: int
    r: int
    w: tuple[int, ...]
    s_perm: tuple[int, ...]
    elements: tuple = field(repr=False)

    @property
    def m(self) -> int:
        return 2 * self.l * self.r

    def labeling(self) -> dict[tuple[int, ...], str]:
        table = binary_dihedral_table(self.l)
        return {perm: table.class_of(kind, a) for kind, a, perm in self.elements}


def _check_relations(l: int, w, s) -> tuple:
    m = len(w)
    ident = identity_perm(m)
    if perm_power(s, 4) != ident:
        raise AssertionError("s^4 != 1")
    if perm_power(s, 2) != perm_power(w, l):
        raise AssertionError("s^2 != w^l")
    if perm_compose(perm_compose(s, w), perm_inverse(s)) != perm_inverse(w):
        raise AssertionError("s w s^-1 != w^-1")
    elements = []
    for a in range(2 * l):
        wa = perm_power(w, a)
        elements.append(("w", a, wa))
        elements.append(("s", a, perm_compose(s, wa)))
    if len({e[2] for e in elements}) != 4 * l:
        raise AssertionError("generated group does not have order 4l")
    return tuple(elements)


def build_dihedral_embedding(l: int, r: int) -> DihedralEmbedding:
    """Pair the ``2l``-cycles of ``w`` and define ``s`` blockwise.

    On a block pair with ``w``-cycles ``(u_0 .. u_{2l-1})`` and
    ``(v_0 .. v_{2l-1})``: ``s(u_i) = v_{-i}`` and ``s(v_i) = u_{l-i}``.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    if r < 2 or r % 2:
        raise ValueError(f"r must be a positive even integer, got {r}")
    L = 2 * l
    m = L * r
    w = cycles_to_perm(m, [range(b * L, (b + 1) * L) for b in range(r)])
    s = list(range(m))
    for pair in range(r // 2):
        u0 = 2 * pair * L
        v0 = u0 + L
        for i in range(L):
            s[u0 + i] = v0 + (-i) % L
            s[v0 + i] = u0 + (l - i) % L
    s = tuple(s)
    return DihedralEmbedding(l, r, w, s, _check_relations(l, w, s))


def embedding_from_perms(l: int, w, s) -> DihedralEmbedding:
    """Wrap externally supplied generators after checking the relations."""
    w, s = tuple(w), tuple(s)
    m = len(w)
    return DihedralEmbedding(l, m // (2 * l), w, s, _check_relations(l, w, s))


def _induce(emb: DihedralEmbedding, chi) -> ClassFunction:
    table = binary_dihedral_table(emb.l)
    weights = table.expand_induced(chi) if isinstance(chi, int) else {chi: 1}
    sums: dict = {}
    for kind, a, perm in emb.elements:
        mu = cycle_type(perm)
        v = sum((table.element_value(c, kind, a) * m for c, m in weights.items()), CycInt(table.N))
        sums[mu] = sums.get(mu, CycInt(table.N)) + v
    out = {}
    for mu, s in sums.items():
        v = (s * centralizer_order(mu)).exact_div(4 * emb.l)
        if not v.is_rational():
            raise AssertionError(f"induced dihedral character not integral at {mu}")
        if v.to_int():
            out[mu] = v.to_int()
    return ClassFunction(emb.m, out)


def induce_from_dihedral(emb: DihedralEmbedding, chi) -> ClassFunction:
    """Character of ``Ind_N^{S_m} chi`` by class intersection over the ``4l`` elements.

    ``chi`` is an irreducible label or an integer ``i`` standing for the
    (possibly reducible) character induced from ``tau_{2l}**i``.
    """
    return _induce(emb, chi)


def dihedral_frobenius(l: int, r: int, chi):
    """``Fr(Ind_N chi)`` for the standard embedding, cached."""
    if isinstance(chi, int):
        chi = chi % (2 * l)
    return _dihedral_frobenius(l, r, chi)


@lru_cache(maxsize=None)
def _dihedral_frobenius(l, r, chi):
    from ..symfunc import frobenius

    return frobenius(_induce(build_dihedral_embedding(l, r), chi))
