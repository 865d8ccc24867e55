"""Exact-arithmetic combinatorics of spherical systems over finite root systems."""
from .rootsys import (RootSystem, build_root_system, cartan_eval, dual_weight,
                      fundamental_weights, parabolic_grading, sub_root_system,
                      weight_coords)
from .sphroots import (SphericalRoot, is_compatible, render_root, sp_of,
                       spherical_root, spherical_roots_of, spp_of)
from .system import (Color, ColorSet, SphericalSystem, colors, defect,
                     dimension, is_cuspidal, localize_s, localize_sigma,
                     make_system, negative_colors, validate)
from .quotient import (DistinguishedSubset, FreenessError, QuotientEdge,
                       QuotientLattice, classify, enumerate_distinguished,
                       is_distinguished, is_strongly_solvable,
                       projective_colors, quotient, quotient_lattice)
from .closure import (FaithfulCouple, GammaGroup, faithful_couples,
                      gamma_group, is_faithful, is_spherically_closed,
                      is_strict, loose_roots, omega_of, omega_of_color)
from .enumeration import (CensusReport, canonical_form, census,
                          enumerate_a_matrices, enumerate_systems)
from .serialize import (InvalidSystemError, SchemaError, emit_system,
                        parse_system, render_colors, render_dot, render_text)

__version__ = "0.1.0"
