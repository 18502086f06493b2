from .laurent import LaurentPoly, laurent_gcd, symmetrize_alexander  # noqa
from .matrices import (  # noqa
    IntMatrix,
    cokernel_summary,
    laurent_determinant,
    seifert_form_polynomial,
    signature_of_symmetric,
    smith_normal_form,
)
from .presentations import (  # noqa
    GroupPresentation,
    TietzeStatus,
    alexander_from_presentation,
    fox_derivative,
    fox_jacobian,
    tietze_simplify,
)
from .words import FreeWord  # noqa
