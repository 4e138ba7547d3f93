"""Regenerate the designer test fixtures from the core package.

The equivalence chain the fixtures pin down: the session fixture exports to
the scene fixture; refining that scene (CLI path and service path share one
implementation) yields the refined fixture. The vitest suite replays the
UI side; tests/test_frontend_fixtures.py in the main suite replays the
core side and fails if the committed fixtures drift.

Run from the repository root:  python3 frontend/scripts/make_fixtures.py
"""

import json
import pathlib

from subdivkit import ControlPolygon, TensionProfile, parse_rational
from subdivkit.ops import interproximate_response

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"

POINTS = [
    [0.0, 0.0], [4.0, 0.0], [5.0, 5.0], [4.0, 10.0], [0.0, 10.0],
    [0.0, 8.0], [1.0, 8.0], [2.0, 5.0], [1.0, 2.0], [0.0, 2.0],
]
FLAGGED = {6, 7, 8}
APPROX = ("1/10", "-49/1152")
PINNED = ("0", "1/64")
N = 1
DEPTH = 4


def session_fixture():
    n = len(POINTS)
    return {
        "points": POINTS,
        "closed": True,
        "flags": [i in FLAGGED for i in range(n)],
        "vertexAlpha": ["0" if i in FLAGGED else APPROX[0] for i in range(n)],
        "edgeParams": [list(PINNED) if i in FLAGGED else list(APPROX) for i in range(n)],
        "defaults": list(APPROX),
        "family": "extended",
        "N": N,
        "depth": DEPTH,
    }


def scene_fixture(session):
    return {
        "schema": 1,
        "scheme": {
            "family": "extended",
            "N": N,
            "alpha": APPROX[0],
            "beta": APPROX[1],
        },
        "steps": DEPTH,
        "polygons": [
            {
                "id": "design",
                "topology": "closed",
                "points": POINTS,
                "profile": {
                    "vertex_alpha": session["vertexAlpha"],
                    "edge_params": session["edgeParams"],
                    "interpolate": session["flags"],
                    "default_params": session["defaults"],
                },
            }
        ],
        "exports": [{"format": "svg", "path": "design.svg", "ids": ["design"]}],
    }


def refined_fixture(session):
    polygon = ControlPolygon([tuple(p) for p in POINTS], topology="closed")
    profile = TensionProfile(
        vertex_alpha=[parse_rational(v) for v in session["vertexAlpha"]],
        edge_params=[
            (parse_rational(a), parse_rational(b)) for a, b in session["edgeParams"]
        ],
        interpolate=session["flags"],
        default_params=(parse_rational(APPROX[0]), parse_rational(APPROX[1])),
    )
    return interproximate_response(polygon, profile, N, DEPTH)


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    session = session_fixture()
    (FIXTURES / "session.json").write_text(json.dumps(session, indent=2) + "\n")
    (FIXTURES / "scene.json").write_text(json.dumps(scene_fixture(session), indent=2) + "\n")
    (FIXTURES / "refined.json").write_text(
        json.dumps(refined_fixture(session), indent=2) + "\n"
    )
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
