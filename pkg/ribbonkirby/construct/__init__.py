from .casson import CassonSign, attach_casson_truncation  # noqa
from .complements import (  # noqa
    Handcuff,
    Rn_prime_layout,
    disc_complement_alt,
    disc_complement_necklace,
    disc_complement_Rn,
    disc_complement_Rn_prime,
    necklace_handcuffs,
    necklace_layout,
)
from .fixtures import Fixture, available_fixtures, load_fixture, symmetric_ribbon_fixture  # noqa
from .knots import (  # noqa
    EXTERIOR,
    MERIDIAN,
    connected_sum,
    pretzel,
    pretzel_layout,
    torus_2n,
    torus_2n_layout,
    twisted_band_unknot_sum,
    twisted_band_unknot_sum_layout,
    unknot,
)
from .morse import MorseBuilder, MorseLayout  # noqa
from .ribbon import BandSpec, ribbon_surgery, verify_unlink  # noqa
