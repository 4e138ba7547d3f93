"""Guard the designer-UI fixtures against drift.

The frontend test suite replays the committed fixtures through the UI's
session/scene/render code; this module regenerates the same data from the
core package (the single source of numerical truth) and fails if the
committed files no longer match. Regenerate with
`python3 frontend/scripts/make_fixtures.py`.
"""

import json
import pathlib

import pytest

from subdivkit import ControlPolygon, TensionProfile, parse_rational, parse_scene
from subdivkit.ops import interproximate_response, refine_scene

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"

pytestmark = pytest.mark.skipif(
    not FIXTURES.is_dir(), reason="frontend fixtures not present"
)


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_scene_fixture_parses_and_matches_session():
    scene = parse_scene(json.dumps(load("scene.json")))
    session = load("session.json")
    polygon = scene.polygons[0]
    assert [list(p) for p in polygon.polygon.points] == session["points"]
    assert polygon.profile is not None
    assert polygon.profile.interpolate == session["flags"]
    assert scene.steps == session["depth"]


def test_refined_fixture_matches_core_output():
    session = load("session.json")
    polygon = ControlPolygon([tuple(p) for p in session["points"]], topology="closed")
    profile = TensionProfile(
        vertex_alpha=[parse_rational(v) for v in session["vertexAlpha"]],
        edge_params=[(parse_rational(a), parse_rational(b)) for a, b in session["edgeParams"]],
        interpolate=session["flags"],
        default_params=(
            parse_rational(session["defaults"][0]),
            parse_rational(session["defaults"][1]),
        ),
    )
    fresh = interproximate_response(polygon, profile, session["N"], session["depth"])
    committed = load("refined.json")
    assert fresh == committed


def test_scene_refinement_agrees_with_interproximate_endpoint_data():
    # the CLI `refine` path and the /interproximate path share the engine
    scene = parse_scene(json.dumps(load("scene.json")))
    results = refine_scene(scene)
    refined = load("refined.json")
    assert [list(p) for p in results["design"].refined.points] == refined["points"]
    assert results["design"].flagged_levels == refined["flagged_indices"]
