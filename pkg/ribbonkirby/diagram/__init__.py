from .faces import Face, crossing_pieces, faces, trace_faces  # noqa
from .model import (  # noqa
    Component,
    ComponentRole,
    Crossing,
    Geometry,
    HandleDiagram,
    Marker,
    RoleKind,
    Side,
    crossing_from_rays,
)
from .queries import (  # noqa
    crossings_between,
    linking_matrix,
    linking_number,
    mirror,
    reverse,
    reverse_all,
    writhe,
)
from .surgery import DiagramEditor, FingerResult  # noqa
from .validation import ValidityReport, Violation, validate  # noqa
