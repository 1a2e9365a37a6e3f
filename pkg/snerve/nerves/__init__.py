from snerve.nerves.ordinary import ordinary_nerve, ordinary_nerve_map, chain_objects, chain_arrow
from snerve.nerves.bead import BeadShape, enumerate_bead_shapes, bead_order, is_bead_shape
from snerve.nerves.coherent import (CoherentSimplex, chain_value, coherent_nerve, reindex_coherent,
                                    enumerate_coherent_simplices, check_boundary, nerve_of_functor,
                                    coherent_to_ordinary, opposite_nerve_bijection)
from snerve.nerves.relative import (DiagramSSet, RelNerveSimplex, relative_nerve, validate_diagram_sset,
                                    check_compatibility, reindex_rel, rel_simplex_as_maps, subset_order)
