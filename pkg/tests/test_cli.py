import json

import pytest

from cubeforge import MultiPoly, certify_theorem, theorem_from_json
from cubeforge.cli import main
from cubeforge.errors import ParseError
from cubeforge.parsing import parse_poly, print_poly


class TestParsePoly:
    def test_form_transcription(self):
        p = parse_poly("m^2 - 9*m*n - n^2", ("m", "n"))
        assert p == MultiPoly(("m", "n"), {(2, 0): 1, (1, 1): -9, (0, 2): -1})

    def test_parenthesized_negation(self):
        p = parse_poly("-(A^2) + 9*A*B + B^2", ("A", "B"))
        assert p == MultiPoly(("A", "B"), {(2, 0): -1, (1, 1): 9, (0, 2): 1})

    def test_double_plus_position(self):
        with pytest.raises(ParseError) as info:
            parse_poly("m++n", ("m", "n"))
        assert info.value.position == 3

    def test_juxtaposition_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("2m", ("m",))

    def test_symbolic_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("m^n", ("m", "n"))

    def test_unknown_variable(self):
        with pytest.raises(ParseError):
            parse_poly("m + q", ("m", "n"))

    def test_print_parse_identity(self):
        texts = [
            "m^2 - 9*m*n - n^2",
            "-80*x^3 - 360*x^2*y + 36*x^2*z + 191*y^3",
            "42",
            "0",
            "-m",
        ]
        for text in texts:
            variables = ("m", "n", "x", "y", "z")
            p = parse_poly(text, variables)
            assert parse_poly(print_poly(p), variables) == p


class TestCliExitCodes:
    def test_pell_success(self, capsys):
        assert main(["pell", "--form", "m^2 - 2*n^2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["gf_m"]["den"] == [1, -6, 1]
        assert payload["target"] == 1 and payload["kind"] == "constant"

    def test_pell_definite_is_input_error(self, capsys):
        assert main(["pell", "--form", "m^2 + n^2"]) == 2

    def test_parse_error(self, capsys):
        assert main(["pell", "--form", "m++n"]) == 2
        assert "position 3" in capsys.readouterr().err

    def test_forge_empty_seeds(self, capsys):
        assert main(["forge", "--a", "1", "--b", "1", "--search-bound", "2"]) == 1
        assert "EmptySeedSet" in capsys.readouterr().err

    def test_missing_subcommand(self, capsys):
        assert main([]) == 2

    def test_unknown_flag(self, capsys):
        assert main(["pell", "--nope", "1"]) == 2


class TestCliCommands:
    def test_eliminate_pythagorean(self, capsys):
        from cubeforge import divides

        assert (
            main(
                [
                    "eliminate",
                    "--x",
                    "m^2 - n^2",
                    "--y",
                    "2*m*n",
                    "--z",
                    "m^2 + n^2",
                ]
            )
            == 0
        )
        out = capsys.readouterr().out.strip()
        s = parse_poly(out, ("x", "y", "z"))
        assert divides(parse_poly("x^2 + y^2 - z^2", ("x", "y", "z")), s)

    def test_twist_default_base(self, capsys):
        assert main(["twist", "--matrix", "6,7,-9;6,-5,4;-8,-3,3"]) == 0
        out = capsys.readouterr().out.strip()
        assert out.startswith("-80*x^3")

    def test_findform(self, capsys):
        code = main(
            [
                "findform",
                "--degree",
                "2",
                "--target",
                "constant",
                "--gf",
                "1;1,-3,1",
                "--gf",
                "0,1;1,-3,1",
            ]
        )
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["C"] == 1 and data["degree"] == 2

    def test_findform_no_target(self, capsys):
        code = main(
            [
                "findform",
                "--degree",
                "2",
                "--target",
                "constant",
                "--gf",
                "1;1,-3,1",
                "--gf",
                "1;1,-3,1",
            ]
        )
        assert code == 1

    def test_verify_certified(self, tmp_path, capsys):
        theorem = {
            "a": 1,
            "b": -1,
            "c": 1,
            "rhs_kind": "alternating",
            "gfs": [
                {"num": [1, 53, 9], "den": [1, -82, -82, 1]},
                {"num": [2, -26, -12], "den": [1, -82, -82, 1]},
                {"num": [2, 8, -10], "den": [1, -82, -82, 1]},
            ],
            "certified_depth": 22,
            "provenance": {},
        }
        path = tmp_path / "theorem.json"
        path.write_text(json.dumps(theorem))
        assert main(["verify", "--file", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "certified, depth 22"

    def test_verify_refuted(self, tmp_path, capsys):
        theorem = {
            "a": 1,
            "b": -1,
            "c": 5,
            "rhs_kind": "constant",
            "gfs": [
                {"num": [1], "den": [1, -1]},
                {"num": [1], "den": [1, -1]},
                {"num": [1], "den": [1, -1]},
            ],
            "certified_depth": 0,
            "provenance": {},
        }
        path = tmp_path / "theorem.json"
        path.write_text(json.dumps(theorem))
        assert main(["verify", "--file", str(path)]) == 1
        assert "refuted at n=0" in capsys.readouterr().err

    def test_verify_malformed(self, tmp_path, capsys):
        path = tmp_path / "junk.json"
        path.write_text('{"a": 1}')
        assert main(["verify", "--file", str(path)]) == 2

    def test_forge_json_is_verifiable(self, tmp_path, capsys):
        assert main(["forge", "--a", "1", "--b", "-1", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload
        for item in payload:
            assert certify_theorem(theorem_from_json(item)).certified
        path = tmp_path / "theorems.json"
        path.write_text(json.dumps(payload))
        assert main(["verify", "--file", str(path)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == len(payload)
        assert all(line.startswith("certified, depth ") for line in lines)

    def test_forge_seed_file(self, tmp_path, capsys):
        path = tmp_path / "seeds.json"
        path.write_text(json.dumps([[9, 10, 12, 1]]))
        code = main(
            ["forge", "--a", "1", "--b", "-1", "--seed-file", str(path)]
        )
        assert code == 0
