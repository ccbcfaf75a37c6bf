"""McKay graphs, the affine reflection action on root vectors, and weights.

A root vector is a tuple of integers indexed by the vertices of the McKay
graph, in the order of :attr:`McKayGraph.vertices`; vertex 0 is the trivial
character.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .characters.dihedral import binary_dihedral_table
from .exactnum import CycInt
from .partitions import Partition, core_quotient, is_symmetric, partitions_of

__all__ = [
    "McKayGraph",
    "mckay_graph",
    "parse_group",
    "reflect",
    "weight",
    "norm",
    "partition_to_rootvector",
    "symmetric_partition_to_rootvector",
    "enumerate_components",
    "components_report",
    "WeightReductionError",
    "core_census",
    "symmetric_core_census",
    "dihedral_census",
]


class WeightReductionError(RuntimeError):
    """The reduction loop hit its cap or stopped away from a multiple of delta."""


@dataclass(frozen=True)
class McKayGraph:
    group: str
    vertices: tuple[str, ...]
    dims: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def delta(self) -> tuple[int, ...]:
        return self.dims

    def cartan(self) -> list[list[int]]:
        k = len(self.vertices)
        return [[2 * (i == j) - self.adjacency[i][j] for j in range(k)] for i in range(k)]

    def index(self, label: str) -> int:
        return self.vertices.index(label)


def parse_group(spec: str) -> tuple[str, int]:
    """``"cyclic:3"`` or ``"binary_dihedral:2"`` to ``(kind, parameter)``."""
    kind, _, param = spec.partition(":")
    kind = kind.strip().lower().replace("-", "_")
    if kind not in ("cyclic", "binary_dihedral") or not param.strip().isdigit():
        raise ValueError(f"bad group spec {spec!r}")
    p = int(param)
    if p < 1:
        raise ValueError("group parameter must be >= 1")
    return kind, p


def _cyclic_data(ell: int):
    """Vertices, dims, elements and a value function for ``mu_ell``."""
    verts = tuple(f"tau^{k}" for k in range(ell))
    elems = list(range(ell))

    def value(k: int, a: int) -> CycInt:
        return CycInt.zeta(ell, k * a)

    def std(a: int) -> CycInt:
        return CycInt.zeta(ell, a) + CycInt.zeta(ell, -a)

    return verts, (1,) * ell, elems, value, std, ell


def _dihedral_data(l: int):
    table = binary_dihedral_table(l)
    verts = table.irreps
    elems = [(kind, a) for kind in ("w", "s") for a in range(2 * l)]

    def value(chi: int, e) -> CycInt:
        return table.element_value(verts[chi], *e)

    std_parts = table.expand_induced(1)

    def std(e) -> CycInt:
        return sum((table.element_value(c, *e) * m for c, m in std_parts.items()), CycInt(table.N))

    return verts, tuple(table.dim(v) for v in verts), elems, value, std, table.N


@lru_cache(maxsize=None)
def mckay_graph(group: str) -> McKayGraph:
    """Adjacency ``<chi * chi_std, chi'>`` computed by summing over group elements."""
    kind, p = parse_group(group)
    verts, dims, elems, value, std, order = (_cyclic_data if kind == "cyclic" else _dihedral_data)(p)
    k = len(verts)
    size = len(elems)
    adj = []
    for i in range(k):
        row = []
        for j in range(k):
            total = CycInt(order)
            for e in elems:
                total = total + value(i, e) * std(e) * value(j, e).conjugate()
            row.append(total.exact_div(size).to_int())
        adj.append(tuple(row))
    g = McKayGraph(f"{kind}:{p}", tuple(verts), tuple(dims), tuple(adj))
    for i in range(k):
        if adj[i] != tuple(adj[j][i] for j in range(k)):
            raise AssertionError("McKay graph is not symmetric")
        if sum(adj[i][j] * dims[j] for j in range(k)) != 2 * dims[i]:
            raise AssertionError("dimension vector is not in the kernel of the Cartan matrix")
    return g


# ---------------------------------------------------------------------------
# the reflection action


def reflect(graph: McKayGraph, d: Sequence[int], i: int) -> tuple[int, ...]:
    """Apply the generator at vertex ``i`` (shifted by one at the trivial vertex)."""
    d = tuple(d)
    row = graph.adjacency[i]
    new = sum(row[j] * d[j] for j in range(len(d))) - d[i] + (1 if i == 0 else 0)
    return d[:i] + (new,) + d[i + 1:]


def norm(graph: McKayGraph, d: Sequence[int]) -> int:
    """Dimension-weighted size ``sum dim(chi) d_chi``."""
    return sum(a * b for a, b in zip(graph.dims, d))


def weight(graph: McKayGraph, d: Sequence[int]) -> int:
    """The integer ``r`` with ``d`` in the orbit of ``r * delta``.

    Repeatedly applies the lowest-index reflection that lowers its own
    coordinate; the endpoint must be a multiple of the dimension vector.
    """
    d = tuple(d)
    k = len(d)
    size = sum(abs(a) * b for a, b in zip(d, graph.dims))
    cap = 10 * (size + 1) * k * k
    for _ in range(cap):
        for i in range(k):
            nd = reflect(graph, d, i)
            if nd[i] < d[i]:
                d = nd
                break
        else:
            r, rem = divmod(d[0], graph.dims[0])
            if rem or any(a != r * b for a, b in zip(d, graph.dims)):
                raise WeightReductionError(f"reduction stopped at {d}, not a multiple of delta")
            return r
    raise WeightReductionError(f"no fixed point after {cap} steps")


# ---------------------------------------------------------------------------
# root vectors of monomial ideals


def partition_to_rootvector(lam: Iterable[int], ell: int) -> tuple[int, ...]:
    """Count cells by content ``(column - row) mod ell``."""
    lam = Partition(lam)
    d = [0] * ell
    for i, j in lam.cells():
        d[(j - i) % ell] += 1
    return tuple(d)


def symmetric_partition_to_rootvector(lam: Iterable[int], l: int) -> tuple[int, ...]:
    """Binary dihedral character of ``C[x, y] / I_lam`` for symmetric ``lam``.

    The cell in row ``i`` and column ``j`` is the monomial ``x**(j-1) y**(i-1)``.
    Off-diagonal mirror pairs span a representation induced from the cyclic
    subgroup; a diagonal monomial ``(xy)**a`` is ``0+`` or ``0-`` by parity of ``a``.
    """
    lam = Partition(lam)
    if not is_symmetric(lam):
        raise ValueError(f"{lam} is not symmetric")
    table = binary_dihedral_table(l)
    verts = table.irreps
    d = [0] * len(verts)
    for i, j in lam.cells():
        a, b = j - 1, i - 1
        if a == b:
            d[verts.index("0+" if a % 2 == 0 else "0-")] += 1
        elif a > b:
            for chi, m in table.expand_induced(a - b).items():
                d[verts.index(chi)] += m
    return tuple(d)


# ---------------------------------------------------------------------------
# enumeration


def _bounded_vectors(dims: Sequence[int], n: int):
    if not dims:
        if n == 0:
            yield ()
        return
    for a in range(n // dims[0] + 1):
        for rest in _bounded_vectors(dims[1:], n - a * dims[0]):
            yield (a,) + rest


def enumerate_components(group: str, n: int) -> list[tuple[tuple[int, ...], int]]:
    """All nonnegative ``d`` of dimension-weighted size ``n`` with ``wt(d) >= 0``."""
    graph = mckay_graph(group)
    out = []
    for d in _bounded_vectors(graph.dims, n):
        w = weight(graph, d)
        if w >= 0:
            out.append((d, w))
    return out


def components_report(group: str, n: int) -> dict:
    graph = mckay_graph(group)
    return {
        "group": graph.group,
        "n": n,
        "components": [
            {"d": dict(zip(graph.vertices, d)), "wt": w} for d, w in enumerate_components(group, n)
        ],
    }


def core_census(ell: int, n: int) -> int:
    """Number of ``ell``-cores of size at most ``n`` congruent to ``n`` mod ``ell``."""
    return sum(
        1
        for m in range(n % ell, n + 1, ell)
        for lam in partitions_of(m)
        if core_quotient(lam, ell).r == 0
    )


def symmetric_core_census(l: int, n: int, modulus: int) -> int:
    """Symmetric ``2l``-cores of size at most ``n`` congruent to ``n`` mod ``modulus``."""
    return sum(
        1
        for m in range(n % modulus, n + 1, modulus)
        for lam in partitions_of(m)
        if is_symmetric(lam) and core_quotient(lam, 2 * l).r == 0
    )


def dihedral_census(l: int, n: int) -> dict:
    """Compare binary dihedral components with symmetric ``2l``-cores.

    ``fixed_point_components`` counts distinct root vectors of symmetric
    monomial ideals of colength ``n``; ``cores_of_each`` maps each such vector
    to the set of ``2l``-cores that produce it.
    """
    group = f"binary_dihedral:{l}"
    comps = dict(enumerate_components(group, n))
    seen: dict[tuple[int, ...], set] = {}
    for lam in partitions_of(n):
        if is_symmetric(lam):
            d = symmetric_partition_to_rootvector(lam, l)
            if d not in comps:
                raise AssertionError(f"{lam} gives {d}, which has negative weight")
            seen.setdefault(d, set()).add(core_quotient(lam, 2 * l).core)
    return {
        "l": l,
        "n": n,
        "components": len(comps),
        "weight_zero": sum(1 for w in comps.values() if w == 0),
        "fixed_point_components": len(seen),
        "one_core_per_component": all(len(v) == 1 for v in seen.values()),
        "symmetric_cores_mod_2l": symmetric_core_census(l, n, 2 * l),
        "symmetric_cores_mod_4l": symmetric_core_census(l, n, 4 * l),
    }
