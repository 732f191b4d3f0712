"""circal: exact black-box solvers for circular planar electrical networks.

Forward solvers (response and effective resistance matrices), the embedding
into the non-negative Grassmannian, the Temperley Lam model, the twist map,
and conductivity recovery with combinatorial grove/dimer oracles.
"""

from .errors import (BadCardinality, BadResistance, BadResponse, CircalError,
                     FormatError, Inconsistent, InvalidEmbedding, NonInteger,
                     NotConnected, NotMinimal, NotOdd, NotStandard,
                     RankDeficient, ScanExhausted, SingularInterior, TooLarge,
                     Underdetermined, VerificationFailed, ZeroColumn,
                     ZeroMinor)
from .forward import (effective_resistance_matrix, harmonic_extension,
                      kirchhoff_laplacian, response_matrix,
                      validate_response_properties)
from .grassmann import (minor, omega_from_resistance, omega_from_response,
                        plucker_vector, twist)
from .groves import (check_grove_plucker, enumerate_groves, grove_weight,
                     uncrossed_partition)
from .lam import (LamModel, boundary_measurement, enumerate_dimers,
                  face_weight, gauge_transform, is_minimal_model, k_gamma,
                  lam_strands, scott_labels)
from .network import (PlanarNetwork, dual_with_intersections, faces,
                      is_minimal, median_strands, validate_network)
from .recovery import (build_constraints, lam_weights_from_twist,
                       recover_from_resistance, recover_from_response,
                       solve_constraints)
from .symplectic import (ElementaryGenerator, check_totally_positive,
                         generator_matrix, lambda_form,
                         standard_decomposition)
from .temperley import expected_k, temperley_lam_model

__version__ = "0.1.0"
