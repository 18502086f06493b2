from .canonical import canonical_form, isomorphic  # noqa
from .composites import composite_a, composite_b, unwind  # noqa
from .handles import cancel_1_2, slide_1_over_1, slide_2_over_2  # noqa
from .reidemeister import add_bigon, add_curl, remove_bigon, remove_curl, simplify, triangle  # noqa
from .scripts import (  # noqa
    Isotopy,
    MoveKind,
    MoveScript,
    MoveStep,
    ScriptRun,
    StepRecord,
    Verdict,
    apply,
    run_script,
    thm2_script,
)
