"""Principal curvature line configurations around umbilics of spacelike
surfaces inside null hypersurfaces of Minkowski 4-space."""

__version__ = "0.1.0"

from .liecartan import (BdeOneJet, FiberCubic, FiberSingularity, UmbilicVerdict,
                        bde_one_jet_numeric, classify_surface, classify_umbilic,
                        cubic_from_jet, eigenvalues_at_root, lie_cartan_field,
                        numeric_linearization_check, real_roots,
                        reference_one_jet)
from .minkowski import causal_character, minkowski_dot, vec
from .surfaces import (GraphSurface, RotationSurface, SurfaceJet,
                       first_fundamental_form, immersion_point, xi_at)
from .theorem import ClosedFormVerdict, classify_closed_form, cross_validate
