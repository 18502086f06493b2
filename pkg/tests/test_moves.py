import attr
import pytest
from eliot.testing import LoggedAction, LoggedMessage
from hypothesis import HealthCheck, given, reject, settings
from hypothesis import strategies as st

from ribbonkirby.cli_io.pdtext import parse_pd_text
from ribbonkirby.construct import (
    MERIDIAN,
    MorseBuilder,
    attach_casson_truncation,
    disc_complement_necklace,
    disc_complement_Rn_prime,
    load_fixture,
    pretzel,
    torus_2n,
)
from ribbonkirby.diagram import ComponentRole, DiagramEditor, Side, mirror, validate
from ribbonkirby.errors import BadParameter, PatternMismatch, PreconditionFailed, UnknownSite
from ribbonkirby.invariants import alexander_fox, alexander_sig_det, homology, jones
from ribbonkirby.moves import (
    MoveKind,
    MoveScript,
    MoveStep,
    Verdict,
    add_bigon,
    add_curl,
    apply,
    cancel_1_2,
    canonical_form,
    composite_a,
    composite_b,
    isomorphic,
    remove_bigon,
    remove_curl,
    run_script,
    simplify,
    slide_1_over_1,
    slide_2_over_2,
    thm2_script,
    triangle,
    unwind,
)
from tests.assertions import (
    assert_log_message_field_equals,
    assert_logged_action_failed,
    assert_logged_action_succeeded,
)
from tests.strategies import reidemeister_walks

SHIFTED_TREFOIL_PD = """\
component T role=plain edges=13,14,15,16,11,12
X 11 15 12 14 +
X 13 11 14 16 +
X 15 13 16 12 +
"""


def monogon_site(d):
    editor = DiagramEditor.from_diagram(d)
    return next(
        (edge, side)
        for edge in sorted(editor.owners)
        for side in Side
        if editor.face_beside(edge, side) is not None and len(editor.face_beside(edge, side)) == 1
    )


def round_pair(dotted=False, framings=(0, 0)):
    editor = DiagramEditor()
    roles = [ComponentRole.dotted()] * 2 if dotted else [ComponentRole.framed(f) for f in framings]
    edges = [editor.add_component(name, role) for name, role in zip("ab", roles)]
    return editor.to_diagram(), edges


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("side", list(Side))
def test_curl_round_trip(trefoil, sign, side):
    curled = add_curl(trefoil, 2, side, sign)

    assert validate(curled).is_valid
    assert len(curled.crossings) == 4
    assert not isomorphic(curled, trefoil)

    edge, loop_side = monogon_site(curled)
    assert isomorphic(remove_curl(curled, edge, loop_side), trefoil)


def test_curl_needs_a_sign(trefoil):
    with pytest.raises(PreconditionFailed):
        add_curl(trefoil, 1, Side.LEFT, 2)


def test_curl_removal_needs_a_monogon(trefoil):
    with pytest.raises(PreconditionFailed) as e:
        remove_curl(trefoil, 1, Side.LEFT)

    assert e.value.kind == "R1-"


def test_unknown_edge(trefoil):
    with pytest.raises(UnknownSite):
        add_curl(trefoil, 99, Side.LEFT, 1)


@pytest.mark.parametrize("over", [True, False])
def test_bigon_round_trip(trefoil, over):
    editor = DiagramEditor.from_diagram(trefoil)
    fixed_side, pushed_side = editor.common_face_sides(1, 3)[0]
    pushed = add_bigon(trefoil, 1, fixed_side, 3, pushed_side, over)

    assert validate(pushed).is_valid
    assert len(pushed.crossings) == 5

    bigon = DiagramEditor.from_diagram(pushed).reducible_bigons()[0]
    edge, direction = bigon.sides[0]
    assert isomorphic(remove_bigon(pushed, edge, Side.of_direction(direction)), trefoil)


def test_clasp_is_not_a_reducible_bigon():
    editor = DiagramEditor()
    a = editor.add_component("A", ComponentRole.plain())
    b = editor.add_component("B", ComponentRole.plain())
    result = editor.clasp(a, Side.LEFT, b, Side.LEFT, 1)
    d = editor.to_diagram()
    bigon = next(face for face in DiagramEditor.from_diagram(d).faces() if len(face) == 2)
    edge, direction = bigon.sides[0]

    assert result.west != result.east
    with pytest.raises(PreconditionFailed):
        remove_bigon(d, edge, Side.of_direction(direction))


def triangle_sites(d):
    for face in DiagramEditor.from_diagram(d).faces():
        if len(face) == 3:
            edge, direction = face.sides[0]
            yield edge, Side.of_direction(direction)


def test_triangle_move():
    d = MorseBuilder().cup(0, "K").cup(2, "K").cross(1, "/").cross(0, "/").cross(1, "/").cap(0).cap(0).build().diagram
    moved = []
    for edge, side in triangle_sites(d):
        try:
            moved.append(triangle(d, edge, side))
        except PreconditionFailed:
            pass

    assert moved
    for result in moved:
        assert validate(result).is_valid
        assert len(result.crossings) == 3
        assert jones(result) == jones(d)


def test_alternating_triangle_is_rejected(trefoil):
    edge, side = next(triangle_sites(trefoil))

    with pytest.raises(PreconditionFailed) as e:
        triangle(trefoil, edge, side)

    assert e.value.kind == "R3"


def test_simplify_undoes_curls_and_bigons(trefoil):
    d = add_curl(add_curl(trefoil, 3, Side.RIGHT, -1), 1, Side.LEFT, 1)

    assert isomorphic(simplify(d), trefoil)
    assert simplify(trefoil) is trefoil


def test_canonical_form_ignores_labels(trefoil):
    shifted = parse_pd_text(SHIFTED_TREFOIL_PD)

    assert canonical_form(shifted) == canonical_form(trefoil)
    assert isomorphic(shifted, trefoil)


def test_canonical_form_sees_chirality(trefoil):
    assert not isomorphic(trefoil, mirror(trefoil))


def test_canonical_form_ignores_markers(trefoil):
    assert canonical_form(attr.evolve(trefoil, markers=[])) == canonical_form(trefoil)


def test_canonical_form_sees_roles(trefoil):
    framed = attr.evolve(trefoil.components[0], role=ComponentRole.framed(1))

    assert canonical_form(attr.evolve(trefoil, components=[framed])) != canonical_form(trefoil)


def test_cancel_a_dotted_circle_against_its_meridian():
    editor = DiagramEditor()
    dotted = editor.add_component("D", ComponentRole.dotted())
    framed = editor.add_component("c", ComponentRole.framed(0))
    editor.clasp(dotted, Side.LEFT, framed, Side.LEFT, 1)
    d = cancel_1_2(editor.to_diagram(), "D", "c")

    assert not d.components
    assert not d.crossings


def test_cancel_slides_other_strands_off_along_the_handle(logger):
    editor = DiagramEditor()
    dotted = editor.add_component("D", ComponentRole.dotted())
    framed = editor.add_component("h", ComponentRole.framed(0))
    strand = editor.add_component("c", ComponentRole.framed(-1))
    meridian = editor.clasp(dotted, Side.LEFT, framed, Side.LEFT, 1)
    editor.clasp(meridian.fixed[0], Side.RIGHT, strand, Side.RIGHT, 1)
    d = cancel_1_2(editor.to_diagram(), "D", "h")

    assert [c.id for c in d.components] == ["c"]
    assert d.component("c").role == ComponentRole.framed(-1)
    assert not simplify(d).crossings

    logged_action = LoggedAction.of_type(logger.messages, "ribbonkirby:moves:cancel_reroute")[0]
    assert_log_message_field_equals(logged_action.start_message, "strands", ["c"])
    assert_log_message_field_equals(logged_action.end_message, "rerouted", 1)
    assert_logged_action_succeeded(logged_action)


def test_cancel_refuses_a_second_dotted_circle():
    editor = DiagramEditor()
    dotted = editor.add_component("D", ComponentRole.dotted())
    framed = editor.add_component("h", ComponentRole.framed(0))
    other = editor.add_component("E", ComponentRole.dotted())
    meridian = editor.clasp(dotted, Side.LEFT, framed, Side.LEFT, 1)
    editor.clasp(meridian.fixed[0], Side.RIGHT, other, Side.RIGHT, 1)

    with pytest.raises(PreconditionFailed, match="E meets"):
        cancel_1_2(editor.to_diagram(), "D", "h")


def test_cancel_needs_a_geometric_single_pass():
    with pytest.raises(PreconditionFailed) as e:
        cancel_1_2(disc_complement_Rn_prime(3), "L", "h")

    assert e.value.kind == "Cancel12"


def test_cancel_checks_roles():
    with pytest.raises(PreconditionFailed):
        cancel_1_2(disc_complement_Rn_prime(3), "h", "L")


def test_slide_adds_framings():
    d, (a, b) = round_pair(framings=(2, -1))
    slid = slide_2_over_2(d, "a", "b", a, Side.RIGHT, [], b, Side.RIGHT)

    assert validate(slid).is_valid
    assert slid.component("a").role == ComponentRole.framed(1)
    assert slid.component("b").role == ComponentRole.framed(-1)
    assert len(slid.components) == 2


def test_slide_over_itself():
    d, (a, _) = round_pair()

    with pytest.raises(PreconditionFailed):
        slide_2_over_2(d, "a", "a", a, Side.LEFT, [], a, Side.LEFT)


def test_slide_checks_site_owners():
    d, (a, b) = round_pair()

    with pytest.raises(PreconditionFailed):
        slide_2_over_2(d, "a", "b", b, Side.LEFT, [], b, Side.LEFT)

    with pytest.raises(UnknownSite):
        slide_2_over_2(d, "a", "b", 99, Side.LEFT, [], b, Side.LEFT)


def test_framed_slide_needs_framed_handles():
    d, (a, b) = round_pair(dotted=True)

    with pytest.raises(PreconditionFailed):
        slide_2_over_2(d, "a", "b", a, Side.LEFT, [], b, Side.LEFT)


def test_dotted_slide_needs_dotted_circles():
    d, (a, b) = round_pair()

    with pytest.raises(PreconditionFailed):
        slide_1_over_1(d, "a", "b", a, Side.LEFT, [], b, Side.LEFT)


def test_composites_check_their_pattern():
    d = disc_complement_Rn_prime(3)

    with pytest.raises(PatternMismatch):
        composite_a(d, "L", "h", "h")

    with pytest.raises(PatternMismatch):
        composite_a(d, "h", "L", "R")


def test_composite_a_slides_and_cancels_the_shared_circle():
    left = load_fixture("fig6a_left").diagram
    right = load_fixture("fig6a_right").diagram

    result = composite_a(left, "u", "h1", "h2")

    assert sorted(c.id for c in result.components) == ["h1", "v"]
    assert result.component("h1").role == ComponentRole.framed(0)
    assert canonical_form(result) == canonical_form(right)


def test_composite_b_merges_the_dotted_circles():
    left = load_fixture("fig6b_left").diagram
    right = load_fixture("fig6b_right").diagram

    result = composite_b(left, "u", "v", "hc")

    assert sorted(c.id for c in result.components) == ["g", "u"]
    assert canonical_form(result) == canonical_form(right)


def test_unwind_needs_a_dotted_circle(trefoil):
    with pytest.raises(PreconditionFailed):
        unwind(trefoil, "K", "K")


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_thm2_script_composition(n):
    script = thm2_script(n)
    kinds = [step.kind for step in script.steps]

    assert kinds[0] is MoveKind.COMPOSITE_A
    assert kinds.count(MoveKind.COMPOSITE_B) == n - 3
    assert kinds[-1] is MoveKind.UNWIND
    assert MoveKind.ISOTOPY not in kinds
    assert script.expected == canonical_form(disc_complement_Rn_prime(n, 0))


def test_thm2_script_needs_odd_n():
    with pytest.raises(BadParameter):
        thm2_script(4)


def test_script_document():
    script = thm2_script(5)

    assert MoveScript.loads(script.dumps()) == script


def test_move_kind_accepts_a_typographic_minus():
    assert MoveKind.parse("R1−") is MoveKind.R1_REMOVE


def test_failing_step_stops_the_replay(trefoil, logger):
    script = MoveScript(
        [
            MoveStep(MoveKind.R1_ADD, {"edge": 4, "side": "left", "sign": 1}),
            MoveStep(MoveKind.R2_REMOVE, {"edge": 1, "side": "left"}),
            MoveStep(MoveKind.ISOTOPY, {"name": "reduce"}),
        ],
        markers=["exterior"],
    )
    run = run_script(trefoil, script)

    assert run.verdict is Verdict.FAILED
    assert not run.succeeded
    assert [record.kind for record in run.trace] == [MoveKind.R1_ADD, MoveKind.R2_REMOVE]
    assert run.trace[-1].error is not None
    assert run.trace[0].markers == {"exterior": 1}
    assert len(run.final.crossings) == 4
    assert run.failure.startswith("step 1 (R2-)")

    logged_action = LoggedAction.of_type(logger.messages, "ribbonkirby:moves:run_script")[0]
    assert_log_message_field_equals(logged_action.start_message, "steps", 3)
    assert_log_message_field_equals(logged_action.end_message, "verdict", "failed")
    assert_logged_action_succeeded(logged_action)

    applied = LoggedAction.of_type(logger.messages, "ribbonkirby:moves:apply")
    assert_logged_action_succeeded(applied[0])
    assert_logged_action_failed(applied[1])

    logged_message = LoggedMessage.of_type(logger.messages, "ribbonkirby:moves:step_failed")[0]
    assert_log_message_field_equals(logged_message.message, "index", 1)


def test_unknown_isotopy_fails_the_step(trefoil):
    run = run_script(trefoil, MoveScript([MoveStep(MoveKind.ISOTOPY, {"name": "wiggle"})]))

    assert run.verdict is Verdict.FAILED


def test_missing_site_parameter_fails_the_step(trefoil):
    run = run_script(trefoil, MoveScript([MoveStep(MoveKind.R3, {"side": "left"})]))

    assert run.verdict is Verdict.FAILED
    assert "edge" in run.failure


def test_mismatch_verdict(trefoil):
    script = MoveScript([MoveStep(MoveKind.ISOTOPY, {"name": "rotate"})], canonical_form(mirror(trefoil)))
    run = run_script(trefoil, script)

    assert run.verdict is Verdict.MISMATCH
    assert run.final.geometry is None or run.final.geometry.stale


def test_replay_of_moves_that_fit(trefoil):
    script = MoveScript(
        [
            MoveStep(MoveKind.R1_ADD, {"edge": 4, "side": "right", "sign": -1}),
            MoveStep(MoveKind.ISOTOPY, {"name": "reduce"}),
        ],
        canonical_form(trefoil),
    )
    run = run_script(trefoil, script)

    assert run.verdict is Verdict.SUCCESS
    assert run.to_document()["final"] == trefoil.summary()


def test_apply_raises(trefoil):
    with pytest.raises(PreconditionFailed):
        apply(trefoil, MoveStep(MoveKind.UNWIND, {"dotted": "K", "framed": "K"}))


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(data=st.data())
def test_reidemeister_moves_keep_the_jones_polynomial(data):
    trefoil = torus_2n(3)
    walked = data.draw(reidemeister_walks(trefoil))

    assert validate(walked).is_valid
    assert jones(walked) == jones(trefoil)


WALK_SEEDS = {
    "trefoil": lambda: torus_2n(3),
    "left cinquefoil": lambda: torus_2n(-5),
    "pretzel": lambda: pretzel(3, -3, 2),
}


@pytest.mark.slow
@pytest.mark.parametrize("seed", sorted(WALK_SEEDS))
@settings(max_examples=3, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(data=st.data())
def test_long_walks_keep_jones_and_alexander(seed, data):
    start = WALK_SEEDS[seed]()
    walked = data.draw(reidemeister_walks(start, steps=500))

    assert validate(walked).is_valid
    assert jones(walked) == jones(start)
    assert alexander_sig_det(walked).alexander == alexander_sig_det(start).alexander
    assert alexander_fox(walked) == alexander_fox(start)


@settings(max_examples=10, deadline=None)
@given(data=st.data())
def test_simplify_after_curls_only(data):
    d = torus_2n(5)
    for _ in range(data.draw(st.integers(min_value=1, max_value=3))):
        edge = data.draw(st.sampled_from(list(d.edges)))
        d = add_curl(d, edge, data.draw(st.sampled_from(list(Side))), data.draw(st.sampled_from([1, -1])))

    assert isomorphic(simplify(d), torus_2n(5))


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 5, 7])
def test_thm2_replay(n):
    run = run_script(disc_complement_necklace(n), thm2_script(n))

    assert run.verdict is Verdict.SUCCESS, run.failure
    assert isomorphic(run.final, disc_complement_Rn_prime(n, 0))
    assert run.trace[-1].markers
    assert run.final.owners[run.final.marker(MERIDIAN).edge] == "L"


HANDLE_SEEDS = {
    "casson": lambda: attach_casson_truncation(disc_complement_Rn_prime(3), MERIDIAN, 2),
    "necklace": lambda: disc_complement_necklace(5),
}


def slide_sites(d):
    editor = DiagramEditor.from_diagram(d)
    framed = {c.id for c in d.framed}
    return [
        (editor.owners[e1], editor.owners[e2], e1, Side.of_direction(s1), e2, Side.of_direction(s2))
        for face in editor.faces()
        for e1, s1 in face.sides
        for e2, s2 in face.sides
        if {editor.owners[e1], editor.owners[e2]} <= framed and editor.owners[e1] != editor.owners[e2]
    ]


def cancelling_pairs(d):
    pairs = []
    for circle in d.dotted:
        for handle in d.framed:
            passes = [
                d.crossing_components(index).index(handle)
                for index in range(len(d.crossings))
                if set(d.crossing_components(index)) == {circle.id, handle.id}
            ]
            if sorted(passes) == [0, 1]:
                pairs.append((circle.id, handle.id))
    return pairs


@pytest.mark.slow
@settings(
    max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much]
)
@given(data=st.data())
def test_handle_moves_keep_the_homology_of_the_boundary(data):
    d = HANDLE_SEEDS[data.draw(st.sampled_from(sorted(HANDLE_SEEDS)))]()
    before = homology(d)
    try:
        if data.draw(st.booleans()):
            slid, over, start, start_side, target, target_side = data.draw(st.sampled_from(slide_sites(d)))
            moved = slide_2_over_2(d, slid, over, start, start_side, [], target, target_side)
        else:
            dotted, framed = data.draw(st.sampled_from(cancelling_pairs(d)))
            moved = cancel_1_2(d, dotted, framed)
    except PreconditionFailed:
        reject()

    assert validate(moved).is_valid
    after = homology(moved)
    assert after.boundary_h1 == before.boundary_h1
    assert after.h1 == before.h1
