"""
Exact computations with stability conditions, green paths and maximal green sequences.

Submodules
----------
exactmath    rational linear algebra, cones, Fourier-Motzkin, quadratic surds
quivercore   quivers, Euler form, g-vectors, initial seeds
mutation     seed mutation, maximal green sequences, chamber atlas
repmod       matrix representations, strings, Hom/Ext, submodules
walls        semistability cones and their stereographic pictures
paths        PL paths, crossings, nonlinear stability functions
hn           hom-orthogonal sequences, HN filtrations and types
linstab      linear central charges and the linearity decision
equivalence  the cross-validation harness
"""

from .exactmath import ConeHRep, Surd, cone_extreme_rays, dot, strict_lp_feasible
from .quivercore import (
    ExchangeSeed,
    Quiver,
    affine_a,
    b2,
    cyclic_a3,
    euler_pairing,
    g_from_dim,
    initial_seed,
    kronecker,
    linear_a,
)
from .mutation import MGS, chamber_atlas, enumerate_mgs, green_vertices, mutate
from .repmod import (
    Representation,
    StringSpec,
    direct_sum,
    enumerate_indecomposables,
    ext1_dim,
    hom_dim,
    image_and_quotient,
    is_exceptional,
    is_schurian,
    string_module,
    submodule_dimvecs,
)
from .walls import RenderSpec, Wall, in_D, in_H, in_int_D, render_svg, wall_of, wide_category
from .paths import (
    Crossing,
    NonlinearZ,
    PLPath,
    crossings,
    mu,
    slope_derivative,
    synthesize_path_from_mgs,
    validate_reddening,
    z_from_path,
)
from .hn import HNSystem, hn_filtration, hn_type, is_maximal_fho, is_weak_fho, t0, t1, torsion_pair
from .linstab import CentralCharge, is_semistable, is_stable, linearity_decide, slope, stable_set
from .equivalence import EquivalenceReport, verify

__version__ = "0.1.0"
