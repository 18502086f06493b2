from .checks import thm1_scenario, thm2_scenario, thm3_scenario, verify, verify_thm1, verify_thm2, verify_thm3  # noqa
from .documents import DiagramDocument, dumps_diagram, loads_diagram, read_diagram  # noqa
from .pdtext import parse_pd_text, serialize_pd_text  # noqa
from .scenarios import (  # noqa
    Check,
    CheckResult,
    CheckVerdict,
    ExecutionOrder,
    Outcome,
    Scenario,
    ScenarioContainer,
    ScenarioResult,
)
from .svg import RenderOptions, render_svg  # noqa
