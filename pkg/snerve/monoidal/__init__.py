from snerve.monoidal.monoidal import MonSCat, OperMorphism, SeqObject, validate_monoidal
from snerve.monoidal.operators import (delta_op, apply_cf, apply_cf_cells, c_face_functor, c_degeneracy_functor,
                                      check_generator_identities, c_simplicial_object, sequences, c_otimes,
                                      chosen_lift, check_split_cleavage, gr_comparison_functor,
                                      check_cotimes_gr_iso)
from snerve.monoidal.operadic import (OperadicNerve, operadic_nerve, check_operadic_fibration,
                                      check_monoidal_fibers, check_composite_certificate)
from snerve.monoidal.opposites import opposite_monoidal, monoidal_equal, check_op_theorems
