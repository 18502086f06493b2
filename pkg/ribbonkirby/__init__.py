from .diagram import ComponentRole, HandleDiagram, validate  # noqa
from .errors import RibbonKirbyError  # noqa
