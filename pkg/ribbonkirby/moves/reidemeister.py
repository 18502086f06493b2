"""Reidemeister moves addressed by faces.

A face is named by one of its edges and the side of that edge it lies on.
"""
from ribbonkirby.diagram.model import HandleDiagram, Side
from ribbonkirby.diagram.surgery import DiagramEditor
from ribbonkirby.errors import PreconditionFailed, UnknownSite


def _editor(d: HandleDiagram, *edges: int) -> DiagramEditor:
    editor = DiagramEditor.from_diagram(d)
    for edge in edges:
        if edge not in editor.owners:
            raise UnknownSite(f"edge {edge}")
    return editor


def _face(editor: DiagramEditor, edge: int, side: Side, size: int, kind: str):
    face = editor.face_beside(edge, side)
    if face is None or len(face) != size:
        raise PreconditionFailed(kind, f"the face {side.value} of edge {edge} is not a {size}-gon")
    return face


def _done(editor: DiagramEditor) -> HandleDiagram:
    return editor.to_diagram()


def add_curl(d: HandleDiagram, edge: int, side: Side, sign: int) -> HandleDiagram:
    """R1+: a curl of the given sign on ``side`` of ``edge``."""
    if sign not in (1, -1):
        raise PreconditionFailed("R1+", f"a curl has sign ±1, got {sign}")
    editor = _editor(d, edge)
    editor.kink(edge, side, sign)
    return _done(editor)


def remove_curl(d: HandleDiagram, edge: int, side: Side) -> HandleDiagram:
    """R1-: remove the curl whose loop face lies on ``side`` of ``edge``."""
    editor = _editor(d, edge)
    face = _face(editor, edge, side, 1, "R1-")
    editor.remove_crossing(face.corners[0][0])
    return _done(editor)


def add_bigon(
    d: HandleDiagram, fixed: int, fixed_side: Side, pushed: int, pushed_side: Side, over: bool
) -> HandleDiagram:
    """R2+: push a finger of ``pushed`` over (or under) ``fixed`` through their common face."""
    editor = _editor(d, fixed, pushed)
    editor.finger(fixed, fixed_side, pushed, pushed_side, over, over)
    return _done(editor)


def remove_bigon(d: HandleDiagram, edge: int, side: Side) -> HandleDiagram:
    """R2-: pull apart the two strands of a bigon whose one strand is over at both corners."""
    editor = _editor(d, edge)
    face = _face(editor, edge, side, 2, "R2-")
    if face not in editor.reducible_bigons():
        raise PreconditionFailed("R2-", f"the bigon {side.value} of edge {edge} is a clasp")
    editor.remove_bigon(face)
    return _done(editor)


def triangle(d: HandleDiagram, edge: int, side: Side) -> HandleDiagram:
    """R3 on the triangle ``side`` of ``edge``."""
    editor = _editor(d, edge)
    editor.triangle_move(_face(editor, edge, side, 3, "R3"))
    return _done(editor)


def simplify(d: HandleDiagram) -> HandleDiagram:
    """Remove curls and reducible bigons greedily; the whitelisted ``reduce`` isotopy."""
    editor = DiagramEditor.from_diagram(d)
    if not editor.reduce_greedily():
        return d
    return editor.to_diagram()
