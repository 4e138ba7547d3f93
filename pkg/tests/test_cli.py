"""CLI surface: output formats, scene refinement, determinism."""

import json

import pytest

from subdivkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestMaskCommand:
    def test_symbolic_relaxed(self, capsys):
        code, out, _ = run_cli(capsys, "mask", "relaxed", "0")
        assert code == 0
        assert "(1/2)[2α, 1, 2-4α, 1, 2α]" in out

    def test_concrete_relaxed(self, capsys):
        code, out, _ = run_cli(capsys, "mask", "relaxed", "1", "--alpha", "0")
        assert code == 0
        assert "[0, -1/16, 0, 9/16, 1, 9/16, 0, -1/16, 0]" in out

    def test_midpoint_mask(self, capsys):
        code, out, _ = run_cli(capsys, "mask", "interpolatory", "0", "--beta", "0")
        assert code == 0
        assert "[0, 0, 1/2, 1, 1/2, 0, 0]" in out

    def test_json_mode_round_trips(self, capsys):
        code, out, _ = run_cli(capsys, "mask", "extended", "1", "--alpha", "1/16", "--beta=-1/48", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["alpha"] == "1/16"
        assert data["beta"] == "-1/48"
        assert len(data["fractions"]) == len(data["offsets"]) == 11

    def test_bad_family_is_usage_error(self, capsys):
        with pytest.raises(SystemExit):
            main(["mask", "cubic", "0"])


class TestAnalyzeCommand:
    def test_report_fields(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "relaxed", "0", "--alpha", "1/8", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["classification"] == "primal"
        assert data["generation_degree"] == 3
        assert data["reproduction_degree"] == 1
        assert data["support_width"] == 4
        assert data["continuity"]["certified_order"] == 2
        assert data["continuity"]["norm"] == "1/2"

    def test_extended_special_beta(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "extended", "1", "--alpha", "0", "--beta", "3/256", "--json"
        )
        data = json.loads(out)
        assert data["reproduction_degree"] == 5
        assert data["special_check"]["points"] == 5

    def test_uncertified_parameters_still_report_degrees(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "relaxed", "1", "--alpha", "1/2", "--json")
        data = json.loads(out)
        assert data["generation_degree"] == 3
        assert data["reproduction_degree"] == 3
        assert data["continuity"]["certified_order"] == -1


class TestRefineCommand:
    def scene_doc(self, tmp_path, steps=5):
        doc = {
            "schema": 1,
            "scheme": {"family": "relaxed", "N": 0, "alpha": "1/8"},
            "steps": steps,
            "polygons": [
                {"id": "square", "topology": "closed", "points": [[0, 0], [1, 0], [1, 1], [0, 1]]}
            ],
            "meshes": [
                {
                    "id": "grid",
                    "row_topology": "closed",
                    "col_topology": "closed",
                    "points": [
                        [[float(c), float(r), 0.0] for c in range(4)] for r in range(4)
                    ],
                }
            ],
            "exports": [
                {"format": "svg", "path": "square.svg", "ids": ["square"]},
                {"format": "obj", "path": "grid.obj", "ids": ["grid"]},
            ],
        }
        path = tmp_path / "scene.json"
        path.write_text(json.dumps(doc))
        return path

    def test_refine_writes_exports(self, tmp_path, capsys):
        scene = self.scene_doc(tmp_path, steps=3)
        out_dir = tmp_path / "out"
        code, out, _ = run_cli(capsys, "refine", str(scene), "--out-dir", str(out_dir))
        assert code == 0
        svg = (out_dir / "square.svg").read_text()
        refined_attr = svg.split('points="')[2].split('"')[0]
        assert len(refined_attr.split(" ")) == 32  # 4 * 2^3
        obj = (out_dir / "grid.obj").read_text()
        # closed 4x4 grid refined 3 times: 32x32 vertices
        assert sum(1 for l in obj.splitlines() if l.startswith("v ")) == 32 * 32

    def test_byte_identical_reruns(self, tmp_path, capsys):
        scene = self.scene_doc(tmp_path, steps=3)
        a_dir, b_dir = tmp_path / "a", tmp_path / "b"
        run_cli(capsys, "refine", str(scene), "--out-dir", str(a_dir))
        run_cli(capsys, "refine", str(scene), "--out-dir", str(b_dir))
        assert (a_dir / "square.svg").read_bytes() == (b_dir / "square.svg").read_bytes()
        assert (a_dir / "grid.obj").read_bytes() == (b_dir / "grid.obj").read_bytes()

    def test_scene_error_reported_with_path(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"schema": 1, "scheme": {"family": "nope", "N": 0}, "steps": 1}))
        code, _, err = run_cli(capsys, "refine", str(path))
        assert code == 2
        assert "/scheme/family" in err


class TestBasisCommand:
    def test_writes_svg(self, tmp_path, capsys):
        out = tmp_path / "basis.svg"
        code, _, _ = run_cli(
            capsys, "basis", "relaxed", "0", "--alpha", "1/8", "--steps", "4", "-o", str(out)
        )
        assert code == 0
        assert out.read_text().startswith("<?xml")
