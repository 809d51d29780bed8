"""Exact classification of rod complements in the 3-torus."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .lattice import (gcd3, unimodular_completion, plane_torus_embedded,
                      primitive_normal, UnimodularMatrix3)
from .rods import (Rod, RodPacking, ValidatedPacking, make_rod, rods_intersect,
                   validate_packing, direction_rank)
from .fibration import (QuotientTorus, ProjectedPoint, ProjectedGeodesic,
                        LineFamily, PointLattice, quotient, project_rod,
                        geodesic_normal_form)
from .isotopy import (Isotopic, NotIsotopic, Undecided, CellCertificate,
                      segment_clear, decide_linear_isotopy,
                      verify_isotopy_witness, verify_certificate)
from .classify import (GeometryVerdict, PlaneTorusWitness, SweptAnnulusWitness,
                       classify, plane_torus_witness, verify_verdict)
