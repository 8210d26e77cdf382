"""Tame local mass formulas for permutation groups built from symmetric groups."""
from .counting import (TameCountingFunction, build_counting, perm_conductor, signed_conductor,
                       sum_compose, wreath_compose, zero_conductor)
from .errors import (IncompatibleCountingError, InvalidResidueError, MassformError,
                     ParseError, SizeCapError, StructureError)
from .expr import build_group, check_compat, parse_counting, parse_group
from .mass import (FormulaReport, check_mass_formula, frobenius_solutions, mass_by_image,
                   mass_by_product_type, mass_by_type, mass_by_wreath_type,
                   predicted_product_mass, predicted_wreath_mass, rational_character_table,
                   total_mass)
from .perm import (Permutation, PermGroup, direct_product, generate, symmetric_group,
                   wreath_product)
from .poly import MassPoly
from .ramtype import RamType, WreathType

__version__ = "0.1.0"
