from .fox import abelianization_onto_z, alexander_fox, over_arcs, wirtinger_presentation  # noqa
from .fundamental_group import check_standard_position, pi1  # noqa
from .homology import HomologySummary, describe, homology  # noqa
from .jones import bracket, jones, jones_in_t  # noqa
from .seifert import (  # noqa
    MAX_VOGEL_MOVES,
    RIGHT_TREFOIL_SIGNATURE,
    KnotInvariants,
    SeifertData,
    alexander_sig_det,
    braid_seifert_matrix,
    braid_word,
    braided,
    goeritz_determinant,
    goeritz_matrix,
    seifert_circles,
    seifert_data,
)
