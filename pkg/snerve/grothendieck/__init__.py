from snerve.grothendieck.diagram import (DiagramSCat, constant_diagram, validate_diagram_scat, check_diagram,
                                         op_diagram)
from snerve.grothendieck.construction import GrArrow, GrCat, grothendieck, cocartesian_lift, fiberwise_op_split
from snerve.grothendieck.opfibration import (is_pcocartesian, is_opfibration, chosen_lift_report,
                                             projection_nerve_map, check_inner_fibration,
                                             check_cocartesian_edges, chosen_lift_edges, lift_edge,
                                             check_opfibration_nerve)
from snerve.grothendieck.comparison import gr_simplex_to_relnerve, relnerve_simplex_to_gr, check_gr_relnerve_iso
