"""Characters of symmetric groups and of their cyclic and binary dihedral subgroups."""

from .symmetric import ClassFunction, character_table, character_value, cycle_type
from .cyclic import (
    CyclicSubgroupSpec,
    cyclic_frobenius,
    induce_from_cyclic,
    induce_product_with_cyclic,
    power_cycle_type,
    restriction_coeffs,
)
from .dihedral import (
    BinaryDihedralTable,
    DihedralEmbedding,
    binary_dihedral_table,
    build_dihedral_embedding,
    dihedral_frobenius,
    induce_from_dihedral,
)

__all__ = [
    "ClassFunction",
    "character_table",
    "character_value",
    "cycle_type",
    "CyclicSubgroupSpec",
    "cyclic_frobenius",
    "induce_from_cyclic",
    "induce_product_with_cyclic",
    "power_cycle_type",
    "restriction_coeffs",
    "BinaryDihedralTable",
    "DihedralEmbedding",
    "binary_dihedral_table",
    "build_dihedral_embedding",
    "dihedral_frobenius",
    "induce_from_dihedral",
]
