"""Exact checks of the core-induction decompositions of Procesi fibers.

Type A compares the ``ell`` weight spaces of ``H~_lam`` with modules induced
from the fiber of the ``ell``-core.  Type D groups weight spaces modulo ``2l``
into isotypic parts for the binary dihedral group and recomputes them by
induction from its permutation model.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from typing import Callable, Iterable, Sequence

from .characters.cyclic import CyclicSubgroupSpec, cyclic_frobenius, induce_product_with_cyclic, restriction_coeffs
from .characters.dihedral import binary_dihedral_table, dihedral_frobenius
from .exactnum import CycInt
from .macdonald import FiberCache, ModLComponents, macdonald, mod_l_components
from .partitions import (
    Partition,
    core_quotient,
    fake_degree,
    format_partition,
    is_symmetric,
    partitions_of,
    phi_valuation,
)
from .symfunc import SymFunc, induced_product, kronecker, powersum, regular

__all__ = [
    "SnMuModule",
    "TypeDDecomposition",
    "typeA_lhs",
    "typeA_rhs",
    "weight_convention_check",
    "verify_type_A",
    "typeD_decomposition",
    "verify_type_D",
    "verify_edge_cases",
    "is_prime",
]


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class SnMuModule:
    """``sum_i [M_i (x) tau**i]`` for ``S_n x mu_ell``."""

    n: int
    ell: int
    components: tuple[SymFunc, ...]

    @classmethod
    def from_components(cls, comps: ModLComponents | Sequence[SymFunc], n: int) -> "SnMuModule":
        if isinstance(comps, ModLComponents):
            return cls(n, comps.ell, comps.components)
        comps = tuple(comps)
        return cls(n, len(comps), comps)

    def __getitem__(self, i: int) -> SymFunc:
        return self.components[i % self.ell]

    def __eq__(self, other):
        if not isinstance(other, SnMuModule):
            return NotImplemented
        return self.diff(other) is None

    def diff(self, other: "SnMuModule") -> dict | None:
        """First differing ``(i, mu)`` Schur coefficient, or ``None``."""
        if (self.n, self.ell) != (other.n, other.ell):
            return {"shape": [[self.n, self.ell], [other.n, other.ell]]}
        for i in range(self.ell):
            a, b = self.components[i].to_schur().terms, other.components[i].to_schur().terms
            for mu in sorted(set(a) | set(b), reverse=True):
                x, y = a.get(mu, 0), b.get(mu, 0)
                if x != y:
                    return {"i": i, "mu": format_partition(mu), "lhs": str(x), "rhs": str(y)}
        return None

    def total(self) -> SymFunc:
        out = self.components[0]
        for c in self.components[1:]:
            out = out + c
        return out

    def is_genuine(self) -> bool:
        """Every component has nonnegative integer Schur coefficients."""
        return all(
            isinstance(v, int) and v >= 0
            for c in self.components
            for v in c.to_schur().terms.values()
        )

    def times_group_ring(self, f: Sequence[int]) -> "SnMuModule":
        """Multiply by ``sum_k f[k] tau**k`` (cyclic convolution)."""
        out = []
        for i in range(self.ell):
            acc = SymFunc(self.n)
            for k, c in enumerate(f):
                if c:
                    acc = acc + self[i - k].scale(c)
            out.append(acc)
        return SnMuModule(self.n, self.ell, tuple(out))

    def to_json(self) -> list:
        return [c.to_schur().to_json() for c in self.components]


# ---------------------------------------------------------------------------
# type A


def _cache(cache_dir) -> FiberCache | None:
    return FiberCache(cache_dir) if cache_dir else None


def typeA_lhs(lam: Iterable[int], ell: int, cache_dir=None, sign: int = 1) -> SnMuModule:
    lam = Partition(lam)
    f = macdonald(lam, _cache(cache_dir))
    return SnMuModule.from_components(mod_l_components(f, ell, sign), lam.size)


def _induce_rhs(core_comps: Sequence[SymFunc], n: int, ell: int, g: int) -> SnMuModule:
    spec = CyclicSubgroupSpec(n, ell, g)
    out = []
    for i in range(ell):
        acc = SymFunc(n)
        for j, P in enumerate(core_comps):
            if P:
                acc = acc + induce_product_with_cyclic(P, i - j, spec)
        out.append(acc)
    return SnMuModule(n, ell, tuple(out))


def typeA_rhs(lam: Iterable[int], ell: int, cache_dir=None, sign: int = 1) -> SnMuModule:
    """Induce the weight spaces of the core fiber along ``S_g x C``."""
    lam = Partition(lam)
    cq = core_quotient(lam, ell)
    core_fiber = macdonald(cq.core, _cache(cache_dir))
    comps = mod_l_components(core_fiber, ell, sign).components
    return _induce_rhs(comps, lam.size, ell, cq.g)


@lru_cache(maxsize=None)
def weight_convention_check(ell: int, max_n: int = 8) -> dict[int, bool]:
    """Which weight signs make the one-row fibers match the induced modules.

    For ``lam = (n)`` the fiber is the coinvariant algebra and the right-hand
    side is built from cyclic induction; this pins the sign of the weight.
    """
    out = {}
    for sign in (1, -1):
        out[sign] = all(
            typeA_lhs([n], ell, sign=sign) == typeA_rhs([n], ell, sign=sign)
            for n in range(1, max_n + 1)
        )
    return out


def _typeA_entry(lam: Partition, ell: int, cache_dir=None) -> dict:
    cq = core_quotient(lam, ell)
    lhs = typeA_lhs(lam, ell, cache_dir)
    rhs = typeA_rhs(lam, ell, cache_dir)
    d = lhs.diff(rhs)
    entry = {
        "lambda": format_partition(lam),
        "core": format_partition(cq.core),
        "g": cq.g,
        "r": cq.r,
        "pass": d is None and lhs.is_genuine(),
    }
    if d is not None:
        entry["diff"] = d
        entry["lhs"] = lhs.to_json()
        entry["rhs"] = rhs.to_json()
    elif not lhs.is_genuine():
        entry["diff"] = {"reason": "negative coefficient"}
    return entry


def _pmap(fn: Callable, items: list, jobs: int = 1) -> list:
    if jobs is None or jobs <= 0:
        jobs = os.cpu_count() or 1
    if jobs == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


def _summary(entries: list[dict]) -> dict:
    passed = sum(1 for e in entries if e["pass"])
    return {"total": len(entries), "passed": passed, "failed": len(entries) - passed}


def verify_type_A(n: int, ell: int, cache_dir=None, jobs: int = 1) -> dict:
    """Check the type A decomposition for every partition of ``n``."""
    conv = weight_convention_check(ell, min(max(n, 1), 8))
    if not conv[1]:
        raise RuntimeError(f"weight convention check failed for ell={ell}; refusing to verify")
    entries = _pmap(partial(_typeA_entry, ell=ell, cache_dir=cache_dir), partitions_of(n), jobs)
    return {
        "params": {"check": "type-A", "n": n, "ell": ell},
        "per_lambda": entries,
        "summary": _summary(entries),
    }


# ---------------------------------------------------------------------------
# type D

ZERO_PAIR = "0+0-"


@dataclass(frozen=True)
class TypeDDecomposition:
    """Isotypic parts ``D_chi`` of a symmetric fiber for the binary dihedral group.

    The two characters ``0+`` and ``0-`` are only known through their sum,
    stored under the key ``"0+0-"``.
    """

    l: int
    n: int
    lam: Partition
    parts: dict

    def weighted_total(self) -> SymFunc:
        table = binary_dihedral_table(self.l)
        out = self.parts[ZERO_PAIR]
        for chi, f in self.parts.items():
            if chi != ZERO_PAIR:
                out = out + f.scale(table.dim(chi))
        return out

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "n": self.n,
            "lambda": format_partition(self.lam),
            "parts": {k: v.to_json() for k, v in sorted(self.parts.items())},
        }


def _halve(f: SymFunc) -> SymFunc:
    h = f.scale(Fraction(1, 2))
    if any(not isinstance(v, int) for v in h.terms.values()):
        raise AssertionError("weight space l is not divisible by two")
    return h


def _route_grouping(comps: ModLComponents, l: int) -> dict:
    parts = {ZERO_PAIR: comps[0]}
    for i in range(1, l):
        parts[str(i)] = comps[i]
    half = _halve(comps[l])
    parts["l+"] = half
    parts["l-"] = half
    return parts


def _route_induction(core_comps: Sequence[SymFunc], n: int, l: int, r: int) -> dict:
    L = 2 * l

    def ind(i: int) -> SymFunc:
        acc = SymFunc(n)
        for j, P in enumerate(core_comps):
            if P:
                acc = acc + induced_product(P, dihedral_frobenius(l, r, i - j))
        return acc

    parts = {ZERO_PAIR: ind(0)}
    for i in range(1, l):
        parts[str(i)] = ind(i)
    half = _halve(ind(l))
    parts["l+"] = half
    parts["l-"] = half
    assert len(core_comps) == L
    return parts


def _route_checks(lam: Partition, l: int, cache_dir=None) -> tuple[TypeDDecomposition, dict]:
    if not is_symmetric(lam):
        raise ValueError(f"{lam} is not symmetric")
    L = 2 * l
    n = lam.size
    cq = core_quotient(lam, L)
    if cq.r % 2:
        raise AssertionError(f"r_{L}({lam}) = {cq.r} is odd")
    comps = mod_l_components(macdonald(lam, _cache(cache_dir)), L)
    parts1 = _route_grouping(comps, l)
    checks = {
        "mirror_weights": all(comps[k] == comps[L - k] for k in range(1, L)),
        "l_parts_equal": parts1["l+"] == parts1["l-"],
    }
    dec = TypeDDecomposition(l, n, lam, parts1)
    checks["regular_total"] = dec.weighted_total() == regular(n)
    if cq.r == 0:
        checks["routes_agree"] = True
        route2 = "trivial (r = 0)"
        diff = None
    else:
        core_comps = mod_l_components(macdonald(cq.core, _cache(cache_dir)), L).components
        parts2 = _route_induction(core_comps, n, l, cq.r)
        diff = None
        for k in sorted(parts1):
            if parts1[k] != parts2[k]:
                diff = {"chi": k, "grouping": str(parts1[k]), "induction": str(parts2[k])}
                break
        checks["routes_agree"] = diff is None
        route2 = "computed"
    info = {"core": cq.core, "g": cq.g, "r": cq.r, "checks": checks, "route2": route2, "diff": diff}
    return dec, info


def typeD_decomposition(lam: Iterable[int], l: int, cache_dir=None) -> TypeDDecomposition:
    """Isotypic decomposition of a symmetric fiber, cross-checked by induction.

    Raises ``AssertionError`` if the two computation routes disagree.
    """
    dec, info = _route_checks(Partition(lam), l, cache_dir)
    bad = [k for k, v in info["checks"].items() if not v]
    if bad:
        raise AssertionError(f"type D checks failed for {format_partition(dec.lam)}: {bad}")
    return dec


def _typeD_entry(lam: Partition, l: int, cache_dir=None) -> dict:
    _, info = _route_checks(lam, l, cache_dir)
    entry = {
        "lambda": format_partition(lam),
        "core": format_partition(info["core"]),
        "g": info["g"],
        "r": info["r"],
        "route2": info["route2"],
        "checks": info["checks"],
        "pass": all(info["checks"].values()),
    }
    if info["diff"] is not None:
        entry["diff"] = info["diff"]
    return entry


def verify_type_D(n: int, l: int, cache_dir=None, jobs: int = 1) -> dict:
    lams = [lam for lam in partitions_of(n) if is_symmetric(lam)]
    entries = _pmap(partial(_typeD_entry, l=l, cache_dir=cache_dir), lams, jobs)
    return {
        "params": {"check": "type-D", "n": n, "l": l},
        "per_lambda": entries,
        "summary": _summary(entries),
    }


# ---------------------------------------------------------------------------
# edge cases


def _cyclic_induced(n: int, ell: int, g: int, k: int) -> SymFunc:
    """``Fr(Ind_C^{S_n} theta**k)`` where ``C`` fixes ``g`` points."""
    r = (n - g) // ell
    base = cyclic_frobenius(ell, r, k) if r else SymFunc(0, "schur", {(): 1 if k % ell == 0 else 0})
    if g == 0:
        return base
    return induced_product(powersum([1] * g).to_schur(), base)


def _coinvariant_module(n: int, ell: int) -> SnMuModule:
    return typeA_lhs([n] if n else [], ell)


def _kron_module(M: SnMuModule, lam: Partition) -> SnMuModule:
    s = SymFunc(lam.size, "schur", {lam: 1})
    return SnMuModule(M.n, M.ell, tuple(kronecker(c, s) for c in M.components))


def _spr_multiplicities(lam: Partition, ell: int, g: int) -> list[int]:
    """Multiplicity of ``theta**j`` in the restriction of ``V_lam`` to ``C``."""
    a = restriction_coeffs(lam, ell, g)
    out = [0] * ell
    for mu, row in a.items():
        d = 1  # mu is a partition of g <= 1
        for j, v in enumerate(row):
            out[j] += v * d
    return out


def _p_o_entry(lam: Partition, ell: int, cache_dir=None) -> dict:
    n = lam.size
    cq = core_quotient(lam, ell)
    g = cq.g
    F = fake_degree(lam)
    Fcls = list(F.mod_classes(ell))
    lhs = typeA_lhs(lam, ell, cache_dir)
    rhs = typeA_rhs(lam, ell, cache_dir)
    coinv = _coinvariant_module(n, ell)
    induced = SnMuModule(n, ell, tuple(_cyclic_induced(n, ell, g, i) for i in range(ell)))
    spr = _spr_multiplicities(lam, ell, g)
    spr_expected = [Fcls[(-j) % ell] for j in range(ell)]
    # projection formula: Ind(theta^i) (x) V_lam = Ind(theta^i * Res V_lam)
    projected = SnMuModule(
        n,
        ell,
        tuple(
            sum(
                (_cyclic_induced(n, ell, g, i + j).scale(spr[j]) for j in range(ell) if spr[j]),
                SymFunc(n),
            )
            for i in range(ell)
        ),
    )
    checks = {
        "decomposition": lhs == rhs,
        "coinvariant_is_induced": coinv == induced,
        "fake_degree_times_fiber": lhs.times_group_ring(Fcls) == _kron_module(coinv, lam),
        "restriction_is_fake_degree": spr == spr_expected,
        "projection_formula": _kron_module(induced, lam) == projected,
        "fake_degree_nonzero": all(F.at_root(ell, k) != CycInt(ell) for k in range(ell)),
        "phi_valuation_zero": all(phi_valuation(lam, j) == 0 for j in range(2, ell + 1) if ell % j == 0),
        "independent_route": lhs == induced and rhs == induced,
    }
    return {
        "lambda": format_partition(lam),
        "core": format_partition(cq.core),
        "g": g,
        "r": cq.r,
        "checks": checks,
        "pass": all(checks.values()),
    }


def _branching_checks(lam: Partition, ell: int, g: int) -> tuple[bool, bool]:
    """Fake-degree branching identity and the equal-multiplicity lemma."""
    a = restriction_coeffs(lam, ell, g)
    core = core_quotient(lam, ell).core
    total = [0] * ell
    for mu, row in a.items():
        Fm = fake_degree(mu).mod_classes(ell)
        for j, v in enumerate(row):
            if v:
                for k, c in enumerate(Fm):
                    total[(k - j) % ell] += v * c
    branching = list(fake_degree(lam).mod_classes(ell)) == total
    equal = all(len(set(row)) == 1 for mu, row in a.items() if mu != core)
    return branching, equal


def _p_lt_entry(lam: Partition, ell: int, cache_dir=None) -> dict:
    n = lam.size
    cq = core_quotient(lam, ell)
    F = fake_degree(lam)
    Fcls = list(F.mod_classes(ell))
    lhs = typeA_lhs(lam, ell, cache_dir)
    rhs = typeA_rhs(lam, ell, cache_dir)
    coinv_kron = _kron_module(_coinvariant_module(n, ell), lam)
    branching, equal = _branching_checks(lam, ell, cq.g)
    checks = {
        "decomposition": lhs == rhs,
        "fake_degree_branching": branching,
        "equal_multiplicities": equal,
        "fake_degree_nonzero": all(F.at_root(ell, k) != CycInt(ell) for k in range(ell)),
        "fake_degree_times_fiber": lhs.times_group_ring(Fcls) == coinv_kron,
        "fake_degree_times_rhs": rhs.times_group_ring(Fcls) == coinv_kron,
    }
    return {
        "lambda": format_partition(lam),
        "core": format_partition(cq.core),
        "g": cq.g,
        "r": cq.r,
        "checks": checks,
        "pass": all(checks.values()),
    }


def _blm(n: int, ell: int, g: int) -> bool:
    """Coinvariants of ``S_n`` induced from coinvariants of ``S_g``."""
    small = _coinvariant_module(g, ell).components
    return _induce_rhs(small, n, ell, g) == _coinvariant_module(n, ell)


def verify_edge_cases(n: int, ell: int, cache_dir=None, jobs: int = 1) -> dict:
    """Independent derivations for cores of size at most one and small cores."""
    lams = partitions_of(n)
    p_o = [lam for lam in lams if core_quotient(lam, ell).g <= 1]
    entries_o = _pmap(partial(_p_o_entry, ell=ell, cache_dir=cache_dir), p_o, jobs)
    report = {"params": {"check": "edge-cases", "n": n, "ell": ell}, "P_o": entries_o}
    all_entries = list(entries_o)
    if is_prime(ell):
        p_lt = [lam for lam in lams if core_quotient(lam, ell).g < ell]
        entries_lt = _pmap(partial(_p_lt_entry, ell=ell, cache_dir=cache_dir), p_lt, jobs)
        report["P_lt_ell"] = entries_lt
        all_entries += entries_lt
    gs = sorted({core_quotient(lam, ell).g for lam in lams if core_quotient(lam, ell).g < ell})
    blm = [{"g": g, "pass": _blm(n, ell, g)} for g in gs]
    report["BLM"] = blm
    summary = _summary(all_entries)
    summary["blm_failed"] = sum(1 for b in blm if not b["pass"])
    report["summary"] = summary
    return report
