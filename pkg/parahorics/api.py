"""
A collection of commonly used parahorics functions and objects
"""
from __future__ import print_function, division, absolute_import

# Root data

from .rootsys import (root_system,
                      root_ref,
                      build_root_system,
                      parse_type,
                      pairing,
                      highest_root,
                      flag_dimension,
                      reflection_word,
                      weyl_group_order,
                      hyperspecial_count,
                      RootSystemError)

# Apartment

from .apartment import (apartment_point,
                        affine_weyl_element,
                        facet,
                        alcove_vertices,
                        vertex,
                        in_alcove,
                        reduce_to_alcove,
                        facet_of,
                        facet_interior_point,
                        barycenter,
                        random_alcove_point,
                        parse_fraction,
                        ApartmentError,
                        WalkLimitError,
                        AlcoveReductionWarning)

# Parahoric subgroups

from .parahoric import (parahoric_descriptor,
                        bounds_exponents,
                        descriptor,
                        iwahori,
                        contains,
                        is_subgroup_of_GA,
                        closed_fiber_parabolic,
                        levi_roots,
                        centralizer_roots,
                        reductive_quotient_roots,
                        is_maximal,
                        is_hyperspecial,
                        enumerate_maximal_classes,
                        hyperspecial_table,
                        ParahoricError)

# Local types

from .localtype import (local_type,
                        weight_of_local_rep,
                        local_rep_of_weight,
                        isotropy_order,
                        delta_pairing,
                        root_group_action,
                        LocalTypeError)

# Dimensions

from .dimension import (moduli_spec,
                        dimension_report,
                        e_theta,
                        centralizer_dim,
                        mu,
                        nu,
                        e_vertex,
                        mu_nu_table,
                        weil_h1_dim,
                        rep_space_dim,
                        moduli_dim,
                        fuchsian_signature,
                        orbifold_euler_characteristic,
                        is_hyperbolic,
                        hecke_fiber_dim,
                        adjoint_rank_oracle,
                        DimensionError,
                        GenusWarning)

# Parabolic line bundles

from .parabolic import (parabolic_line,
                        pardeg,
                        invariant_weights,
                        pardeg_from_cover,
                        ParabolicError)
