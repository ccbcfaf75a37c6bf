"""Modified Macdonald polynomials and their mod-``ell`` weight components.

``H~_lam`` is evaluated with the combinatorial filling formula: a sum over
fillings of the diagram (French convention, row 0 at the bottom) weighted by
``q**inv * t**maj``.  Only standard fillings are enumerated; the monomial
coefficient of ``x**nu`` collects those whose reading word has inverse
descent set inside the partial sums of ``nu``.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .exactnum import LaurentQT, RationalQ
from .partitions import (
    Partition,
    dimension,
    fake_degree,
    format_partition,
    hook_multiset,
    n_statistic,
    parse_partition,
    partitions_of,
)
from .symfunc import SymFunc, plethysm_onemq

__all__ = [
    "DEFAULT_MAX_N",
    "ProcesiFiber",
    "ModLComponents",
    "FiberCache",
    "macdonald",
    "kostka",
    "monomial_to_schur",
    "specialize_tq_inverse",
    "mod_l_components",
    "coinvariant_graded_frobenius",
]

DEFAULT_MAX_N = 10


@dataclass(frozen=True)
class ProcesiFiber:
    """Schur expansion ``H~_lam = sum_mu K~_{mu,lam}(q,t) s_mu``."""

    lam: Partition
    schur_expansion: Mapping[Partition, LaurentQT]

    @property
    def n(self) -> int:
        return self.lam.size

    def coefficient(self, mu) -> LaurentQT:
        return self.schur_expansion.get(Partition(mu), LaurentQT())

    def as_symfunc(self) -> SymFunc:
        return SymFunc(self.n, "schur", dict(self.schur_expansion))

    def at_one(self) -> SymFunc:
        """Ungraded class (``q = t = 1``)."""
        return SymFunc(self.n, "schur", {mu: c.at_one() for mu, c in self.schur_expansion.items()})

    def to_json(self) -> dict:
        return {
            "partition": format_partition(self.lam),
            "coefficients": [
                {"mu": format_partition(mu), "terms": self.schur_expansion[mu].to_json()}
                for mu in sorted(self.schur_expansion, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ProcesiFiber":
        exp = {
            parse_partition(item["mu"]): LaurentQT.from_json(item["terms"])
            for item in data["coefficients"]
        }
        return cls(parse_partition(data["partition"]), exp)

    def __str__(self):
        return str(self.as_symfunc())


@dataclass(frozen=True)
class ModLComponents:
    """Integer Schur expansions of the ``ell`` weight spaces of a fiber."""

    ell: int
    components: tuple[SymFunc, ...]

    def __getitem__(self, i: int) -> SymFunc:
        return self.components[i % self.ell]

    def total(self) -> SymFunc:
        out = self.components[0]
        for c in self.components[1:]:
            out = out + c
        return out


# ---------------------------------------------------------------------------
# Kostka numbers and monomial -> Schur


@lru_cache(maxsize=None)
def _kostka(lam: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not lam else 0
    k = content[-1]
    rest = content[:-1]
    total = 0
    # remove a horizontal strip of size k from lam
    m = len(lam)

    def strips(i: int, left: int, acc: list):
        nonlocal total
        if i == m:
            if left == 0:
                total += _kostka(tuple(p for p in acc if p), rest)
            return
        lower = lam[i + 1] if i + 1 < m else 0
        for take in range(0, min(left, lam[i] - lower) + 1):
            acc.append(lam[i] - take)
            strips(i + 1, left - take, acc)
            acc.pop()

    strips(0, k, [])
    return total


def kostka(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return 0
    return _kostka(tuple(lam), tuple(mu))


def monomial_to_schur(n: int, coeffs: Mapping[Partition, object]) -> dict[Partition, object]:
    """Convert monomial-basis coefficients to Schur coefficients.

    Partitions are processed in decreasing lexicographic order, so the
    unitriangular Kostka matrix is inverted by back-substitution.
    """
    parts = partitions_of(n)  # lex decreasing
    out: dict[Partition, object] = {}
    for idx, nu in enumerate(parts):
        c = coeffs.get(nu, 0)
        for lam in parts[:idx]:
            a = out.get(lam)
            if a:
                k = kostka(lam, nu)
                if k:
                    c = c - a * k
        if c:
            out[nu] = c
    return out


# ---------------------------------------------------------------------------
# filling statistics


@lru_cache(maxsize=4)
def _all_perms(n: int) -> np.ndarray:
    """All permutations of ``0..n-1`` as rows of an int8 array."""
    perms = np.zeros((1, 0), dtype=np.int8)
    for k in range(n):
        m = perms.shape[0]
        out = np.empty((m * (k + 1), k + 1), dtype=np.int8)
        for pos in range(k + 1):
            block = out[pos * m:(pos + 1) * m]
            block[:, :pos] = perms[:, :pos]
            block[:, pos] = k
            block[:, pos + 1:] = perms[:, pos:]
        perms = out
    return perms


def _diagram_data(lam: Partition):
    """Reading-order indices, attacking pairs and descent data for ``lam``."""
    conj = lam.conjugate()
    rows = len(lam)
    index = {}
    idx = 0
    for i in range(rows - 1, -1, -1):
        for j in range(lam[i]):
            index[(i, j)] = idx
            idx += 1
    attacks = []
    for (i, j), a in index.items():
        for k in range(j + 1, lam[i]):
            attacks.append((a, index[(i, k)]))
        if i >= 1:
            for k in range(j):
                attacks.append((a, index[(i - 1, k)]))
    descents = []
    for (i, j), a in index.items():
        if i >= 1:
            leg = conj[j] - i - 1
            arm = lam[i] - j - 1
            descents.append((a, index[(i - 1, j)], leg, arm))
    return attacks, descents


def _filling_monomials(lam: Partition) -> dict[Partition, LaurentQT]:
    n = lam.size
    if n == 0:
        return {Partition(): LaurentQT.const(1)}
    P = _all_perms(n)
    attacks, descents = _diagram_data(lam)
    inv = np.zeros(P.shape[0], dtype=np.int32)
    maj = np.zeros(P.shape[0], dtype=np.int32)
    for a, b in attacks:
        inv += P[:, a] > P[:, b]
    for u, v, leg, arm in descents:
        d = P[:, u] > P[:, v]
        maj += d * (leg + 1)
        inv -= d * arm
    pos = np.argsort(P, axis=1)
    ides = np.zeros(P.shape[0], dtype=np.int64)
    for i in range(n - 1):
        ides |= (pos[:, i + 1] < pos[:, i]).astype(np.int64) << i
    assert inv.min() >= 0
    span_inv = int(inv.max()) + 1
    span_maj = int(maj.max()) + 1
    key = (ides * span_inv + inv) * span_maj + maj
    uniq, counts = np.unique(key, return_counts=True)
    u_maj = uniq % span_maj
    u_inv = (uniq // span_maj) % span_inv
    u_ides = uniq // (span_maj * span_inv)
    out = {}
    for nu in partitions_of(n):
        allowed = 0
        s = 0
        for p in nu[:-1]:
            s += p
            allowed |= 1 << (s - 1)
        mask = (u_ides & ~allowed) == 0
        terms: dict[tuple[int, int], int] = {}
        for a, b, c in zip(u_inv[mask].tolist(), u_maj[mask].tolist(), counts[mask].tolist()):
            terms[(a, b)] = terms.get((a, b), 0) + c
        out[nu] = LaurentQT(terms)
    return out


def _check_fiber(f: ProcesiFiber) -> None:
    lam, n = f.lam, f.n
    for mu, c in f.schur_expansion.items():
        if not c.is_polynomial() or any(not isinstance(v, int) or v < 0 for _, v in c.items()):
            raise AssertionError(f"coefficient of s{mu} in H~{lam} is not in N[q,t]: {c}")
        if c.at_one() != dimension(mu):
            raise AssertionError(f"q=t=1 coefficient of s{mu} in H~{lam} is not dim V_mu")
    if n:
        if f.coefficient([n]) != LaurentQT.const(1):
            raise AssertionError(f"coefficient of s({n}) in H~{lam} is not 1")
        top = LaurentQT.monomial(n_statistic(lam.conjugate()), n_statistic(lam))
        if f.coefficient([1] * n) != top:
            raise AssertionError(f"coefficient of s(1^n) in H~{lam} is not {top}")


# ---------------------------------------------------------------------------
# disk cache


class FiberCache:
    """One JSON file per partition; writes go through an atomic rename."""

    def __init__(self, directory):
        self.directory = Path(directory)

    def path(self, lam: Partition) -> Path:
        name = "H_" + ("_".join(str(p) for p in lam) or "empty") + ".json"
        return self.directory / name

    def get(self, lam: Partition) -> ProcesiFiber | None:
        p = self.path(lam)
        if not p.exists():
            return None
        try:
            with open(p, encoding="utf-8") as fh:
                f = ProcesiFiber.from_json(json.load(fh))
        except (OSError, ValueError, KeyError):
            return None
        return f if f.lam == lam else None

    def put(self, f: ProcesiFiber) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(f.to_json(), fh, sort_keys=True)
            os.replace(tmp, self.path(f.lam))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


_MEMO: dict[Partition, ProcesiFiber] = {}


def macdonald(lam: Iterable[int], cache: FiberCache | None = None, max_n: int = DEFAULT_MAX_N) -> ProcesiFiber:
    """``H~_lam`` in the Schur basis, with all structural invariants checked."""
    lam = Partition(lam)
    if lam in _MEMO:
        f = _MEMO[lam]
        if cache is not None and not cache.path(lam).exists():
            cache.put(f)
        return f
    if lam.size > max_n:
        raise ValueError(f"|lam| = {lam.size} exceeds the configured bound {max_n}")
    f = cache.get(lam) if cache is not None else None
    if f is None:
        mono = _filling_monomials(lam)
        f = ProcesiFiber(lam, monomial_to_schur(lam.size, mono))
        _check_fiber(f)
        if cache is not None:
            cache.put(f)
    else:
        _check_fiber(f)
    _MEMO[lam] = f
    return f


# ---------------------------------------------------------------------------
# specializations


def _star_rhs(lam: Partition) -> SymFunc:
    factor = LaurentQT.const(1)
    for h in hook_multiset(lam):
        factor = factor * (1 - LaurentQT.monomial(h, 0))
    scale = RationalQ(factor, LaurentQT.monomial(n_statistic(lam), 0))
    return plethysm_onemq(lam).scale(scale)


def specialize_tq_inverse(f: ProcesiFiber, check: bool = True) -> SymFunc:
    """``H~_lam(z; q, 1/q)`` with :class:`RationalQ` coefficients.

    With ``check`` the result is compared against
    ``prod_c (1 - q**h_c) / q**n(lam) * s_lam[Z/(1-q)]``.
    """
    out = SymFunc(
        f.n, "schur", {mu: RationalQ(c.t_to_q_inverse()) for mu, c in f.schur_expansion.items()}
    )
    if check and out != _star_rhs(f.lam):
        raise AssertionError(f"t = 1/q specialization of H~{f.lam} disagrees with the plethystic form")
    return out


def mod_l_components(f: ProcesiFiber, ell: int, sign: int = 1) -> ModLComponents:
    """Split by the weight ``(a - b) mod ell`` of ``q**a t**b``.

    ``sign=-1`` uses ``(b - a)`` instead; kept for the convention check.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    comps: list[dict] = [{} for _ in range(ell)]
    for mu, c in f.schur_expansion.items():
        for j, v in enumerate(c.weight_classes(ell)):
            if v:
                comps[(sign * j) % ell][mu] = v
    return ModLComponents(ell, tuple(SymFunc(f.n, "schur", d) for d in comps))


def coinvariant_graded_frobenius(n: int, check: bool = True) -> SymFunc:
    """``sum_mu F_mu(q) s_mu``, the graded class of the coinvariant algebra."""
    out = SymFunc(n, "schur", {mu: fake_degree(mu).poly for mu in partitions_of(n)})
    if check and n <= DEFAULT_MAX_N:
        H = macdonald([n] if n else [])
        spec = SymFunc(n, "schur", {mu: c.t_to_q_inverse() for mu, c in H.schur_expansion.items()})
        if spec != out:
            raise AssertionError("one-row fiber at t = 1/q differs from the fake-degree sum")
    return out
