"""Exact-arithmetic verification of branching laws for minimal
holomorphic representations restricted to symmetric subalgebras."""

from .roots import RootSystem, standard
from .hermitian import HermitianSetting, setting
from .chars import (branch, decompose_full, dominant_character,
                    full_character, weyl_dim)
from .parabolic import FactorStructure, ParabolicData, aq_ktypes, range_check
from .catalog import Catalog, CatalogError, load_catalog
from .verify import (VerificationReport, ambient_factor,
                     demonstrate_reducible_aq, fock_dimension_identity,
                     verify_nonhol_identification,
                     verify_nonhol_irreducibility, verify_pair)
from .seesaw import (GenuineCharacter, SeesawConfig, derive_branching,
                     seesaw_multiplicity, theta_lift)

__version__ = "0.1.0"

__all__ = [
    "RootSystem", "standard", "HermitianSetting", "setting",
    "branch", "decompose_full", "dominant_character", "full_character",
    "weyl_dim", "FactorStructure", "ParabolicData", "aq_ktypes",
    "range_check", "Catalog", "CatalogError", "load_catalog",
    "VerificationReport", "ambient_factor", "demonstrate_reducible_aq",
    "fock_dimension_identity", "verify_nonhol_identification",
    "verify_nonhol_irreducibility", "verify_pair",
    "GenuineCharacter", "SeesawConfig", "derive_branching",
    "seesaw_multiplicity", "theta_lift",
]
