"""Fusion systems of finite groups, double Burnside module arithmetic,
characteristic idempotents modulo p^k and degree-one transfer maps."""

from .burnside import (
    BisetGenerator,
    BurnsideElement,
    characteristic_biset,
    characteristic_idempotent,
    compose,
    epsilon,
    opposite,
    verify_characteristic,
)
from .catalog import CATALOG, catalog, catalog_group, parse_group, serialize_group
from .fusion import (
    FusionSystem,
    elementary_focal_subgroup,
    focal_subgroup,
    fusion_system,
    hyperfocal_subgroup,
    normalizer_subsystem,
    p_power_index_subsystem,
)
from .groups import FiniteGroup, GroupError, Subgroup, sylow_subgroup
from .transfer import group_verlagerung, h1_action, transfer_image_subgroup, transfer_map

__version__ = "0.1.0"

__all__ = [
    "BisetGenerator",
    "BurnsideElement",
    "CATALOG",
    "FiniteGroup",
    "FusionSystem",
    "GroupError",
    "Subgroup",
    "catalog",
    "catalog_group",
    "characteristic_biset",
    "characteristic_idempotent",
    "compose",
    "elementary_focal_subgroup",
    "epsilon",
    "focal_subgroup",
    "fusion_system",
    "group_verlagerung",
    "h1_action",
    "hyperfocal_subgroup",
    "normalizer_subsystem",
    "opposite",
    "p_power_index_subsystem",
    "parse_group",
    "serialize_group",
    "sylow_subgroup",
    "transfer_image_subgroup",
    "transfer_map",
    "verify_characteristic",
]
