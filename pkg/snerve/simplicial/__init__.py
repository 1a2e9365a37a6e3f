from snerve.simplicial.sset import (TruncatedSSet, pull_back_cell, simplex_on, standard_simplex, sub_sset, horn,
                                    opposite_sset, validate_sset)
from snerve.simplicial.maps import (SSetMap, validate_map, identity_map, compose_maps, is_bijective, inverse_map,
                                    fiber)
from snerve.simplicial.limits import point, sset_power, binary_product, coproduct, pullback, projection
from snerve.simplicial.horn import horn_check, horn_maps, horn_fillers, relative_horn_check, leading_edge
from snerve.simplicial.iso import sset_iso, is_isomorphism
from snerve.simplicial.marking import MarkedSSet, mark_natural, mark_sharp, opposite_marked, validate_marked
