"""Exact character rings of finite groups: tables, lattices, biset operations and the kappa cokernel."""

from .catalog import catalog, construct_named
from .char_table import CharacterTable, ClassFunction, VirtualCharacter, character_table, galois_orbits
from .cyclotomic import CyclotomicValue
from .expr import evaluate
from .kappa import cokernel, detect, F_n_eval, member_im_kappa
from .perm_group import FiniteGroup, Permutation
from .genetic import genetic_basis, verify_rational

__all__ = [
    "catalog", "construct_named", "CharacterTable", "ClassFunction", "VirtualCharacter",
    "character_table", "galois_orbits", "CyclotomicValue", "evaluate", "cokernel", "detect",
    "F_n_eval", "member_im_kappa", "FiniteGroup", "Permutation", "genetic_basis", "verify_rational",
]
