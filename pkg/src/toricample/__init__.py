"""Tangent-bundle splitting types and positivity on smooth complete toric varieties."""
from .errors import (ConsistencyError, DivisorNotAmpleError, DocumentError, FanError,
                     LatticeError, ToricError, ValidationError)
from .fan import Fan, Wall, build_fan, enumerate_walls, is_complete, is_smooth
from .lattice import determinant, dual_basis, primitive, solve_unimodular
from .polytope import (LatticePolytope, all_two_faces_triangular, angle_sum_sign, anticanonical,
                       find_ample_divisor, is_divisor_ample, is_simplex, normal_fan,
                       polytope_from_divisor)
from .splitting import (PositivityClass, SplittingType, Verdict, associated_characters,
                        classify_tangent, splitting_type, wall_relation)
from .theorem import (canonical_surface_code, census, enumerate_smooth_surfaces,
                      is_projective_space_fan, verify_theorem)

__version__ = "0.1.0"
