"""Simplicial models of configuration spaces on finite simplicial complexes."""
from .actions import (
    IsotropySubgroup,
    NotRegularError,
    SimplicialAction,
    action_from_generators,
    induced_action,
    is_regular,
    is_semiregular,
    isotropy_subgroup,
    orbit_partition,
    quotient_complex,
    regularity_witness,
    symmetric_group_action,
    trivial_action,
)
from .complex import (
    ComplexError,
    NotASubcomplexError,
    SimplicialComplex,
    build_from_facets,
    contains_simplex,
    euler_characteristic,
    f_vector,
    induced_subcomplex,
    is_full_subcomplex,
    is_subcomplex,
    minimal_nonfaces,
)
from .constructions import (
    NotFullWarning,
    barycentric_subdivision,
    complement_model,
    conf_model,
    conf_model_bs,
    fat_diagonal,
    is_power_simplex,
    ordered_power,
    simplicial_difference,
)
from .homology import chain_complex, homology_profile, smith_normal_form
from .labels import VertexLabel, atom, bary, orbit, tup
from .nerve import minimal_nonface_nerve, nerve_matches_difference, nerve_of_subcomplex_cover
