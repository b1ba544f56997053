"""Finite quandles: construction, symmetry groups, orbit analysis,
coset realizations, regularity conditions and knot coloring counts."""

from .quandle import (AxiomViolation, ElementSymmetry, FiniteQuandle,
                      InvalidQuandleError, QuandleError, RangeError,
                      axiom_violations, validate)
from .groups import (CapExceeded, CosetSpace, CycleParseError, FiniteGroup,
                     GroupAutomorphism, GroupError, NotASubgroup,
                     NotAnAutomorphism, PermutationGroup, all_automorphisms,
                     close, compose, conjugacy_class, cosets, cycle_type,
                     fixed_subgroup, format_cycles, identity_perm, invert,
                     matrix_group_sl2, parse_cycles, parse_generator_lines)
from .constructions import (CocycleError, ConstructionError,
                            ConstructionRecord, NotAbelian, NotFixed,
                            alexander, cocycle_extension, conj_class,
                            conjugation, dihedral, phi_space,
                            power_cocycle, trivial, twisted_orbit_action,
                            unipotent_class_quandle, vedernikov)
from .symmetry import (ActionError, ConnectednessReport, CosetRealization,
                       HomReport, InterOrbitReport, OrbitDecomposition,
                       QuandleAction, SaturationChain, SbarReport, SignedWord,
                       TooLarge, aut, coset_realization, hom_check, inn,
                       inter_orbit_action, is_connected, is_homogeneous,
                       iso_search, op_group, orbits, open_subquandle_check,
                       random_transvection_word, saturate_forward,
                       saturate_mixed, sbar_hom, tr, tr_action_group,
                       tr_orbit)
from .regularity import (RegularityReport, SurveyResult, fixed_points,
                         implication_survey, isolated_connected_consequence,
                         regularity_report)
from .knots import (ColoringCount, Crossing, InconsistentArcs, KnotDiagram,
                    count_colorings, invariance_check, parse_braid, parse_pd)

__version__ = "0.1.0"
