"""Unit groups of group algebras of finite abelian groups over finite fields."""
from .decomposition import CyclicDecomposition
from .errors import CapacityError, InconsistencyError, InvalidInput, UnitlabError
from .field import Field, FieldElement, construct_field
from .group import AbelianGroup, construct_group, parse_group_spec, power_map_orbits, primary_split
from .mixed import evaluate, total_order, unit_group
from .modular import unit_group_modular
from .semisimple import unit_group_semisimple, wedderburn_degrees

__all__ = [
    "AbelianGroup",
    "CapacityError",
    "CyclicDecomposition",
    "Field",
    "FieldElement",
    "InconsistencyError",
    "InvalidInput",
    "UnitlabError",
    "construct_field",
    "construct_group",
    "evaluate",
    "parse_group_spec",
    "power_map_orbits",
    "primary_split",
    "total_order",
    "unit_group",
    "unit_group_modular",
    "unit_group_semisimple",
    "wedderburn_degrees",
]
