from snerve.enriched.fincat import *
from snerve.enriched.scat import (SCat, validate_scat, opposite_scat, discrete_sset, discrete_scat, is_discrete,
                                  scat_power_list, scat_product, scat_power, terminal_scat, sub_scat,
                                  is_locally_kan, composition_table, scat_equal, empty_sset)
from snerve.enriched.functor import (SFunctor, validate_sfunctor, identity_sfunctor, compose_sfunctors,
                                     opposite_sfunctor, discrete_sfunctor, sfunctor_equal)
