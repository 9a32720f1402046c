import json
import subprocess
import sys

import pytest

from jointfix import dumps_instance, load_instance, parse_instance
from jointfix.cli import main
from jointfix.errors import AntisymmetryViolation, MissingAssignment, ParseError

CHAIN_DOC = {
    "elements": ["0", "1", "2"],
    "order": {"covers": [["0", "1"], ["1", "2"]]},
    "maps": {"f": {"0": "1", "1": "2", "2": "2"}, "id": {"0": "0", "1": "1", "2": "2"}},
}

JOINS_DOC = {
    "elements": ["{}", "{1}", "{2}", "{1,2}"],
    "order": {"covers": [["{}", "{1}"], ["{}", "{2}"], ["{1}", "{1,2}"], ["{2}", "{1,2}"]]},
    "maps": {
        "j1": {"{}": "{1}", "{1}": "{1}", "{2}": "{1,2}", "{1,2}": "{1,2}"},
        "j2": {"{}": "{2}", "{1}": "{1,2}", "{2}": "{2}", "{1,2}": "{1,2}"},
        "m2": {"{}": "{}", "{1}": "{}", "{2}": "{2}", "{1,2}": "{2}"},
    },
}


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="inst.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc), encoding="utf-8")
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    report = json.loads(out) if out.strip().startswith("{") else None
    return code, report, err


class TestLoad:
    def test_chain(self, write):
        inst = load_instance(write(CHAIN_DOC))
        assert inst.poset.leq("0", "2")
        assert inst.family.names == ("f", "id")

    def test_full_relation(self, write):
        doc = dict(CHAIN_DOC, order={"pairs": [[a, b] for a in "012" for b in "012" if a <= b]})
        assert load_instance(write(doc)).poset == load_instance(write(CHAIN_DOC, "b.json")).poset

    def test_cycle(self, write):
        doc = dict(CHAIN_DOC, order={"covers": [["0", "1"], ["1", "0"]]})
        with pytest.raises(AntisymmetryViolation) as exc:
            load_instance(write(doc))
        assert set(exc.value.pair) == {"0", "1"}

    def test_missing_assignment(self, write):
        doc = dict(CHAIN_DOC, maps={"f": {"0": "1", "1": "2"}})
        with pytest.raises(MissingAssignment, match="'2'"):
            load_instance(write(doc))

    def test_bad_json_located(self, write):
        with pytest.raises(ParseError, match="line 2"):
            load_instance(write('{\n  "elements": [,]\n}'))

    @pytest.mark.parametrize("doc, where", [
        ({"elements": "abc", "order": {"covers": []}, "maps": {}}, "elements"),
        ({"elements": ["a"], "order": {"edges": []}, "maps": {}}, "order"),
        ({"elements": ["a"], "order": {"covers": [["a"]]}, "maps": {}}, "order.covers[0]"),
        ({"elements": ["a"], "order": {"covers": []}, "maps": {}}, "maps"),
        ({"elements": ["a"], "order": {"covers": []}, "maps": {"f": {"a": 1}}}, "maps.f.a"),
    ])
    def test_field_paths(self, doc, where):
        with pytest.raises(ParseError) as exc:
            parse_instance(json.dumps(doc))
        assert exc.value.where == where


class TestCommands:
    def test_solve_join_translations(self, write, capsys):
        code, report, _ = run(capsys, "solve", write(JOINS_DOC), "--family", "j1,j2")
        assert code == 0
        assert report["fix_set"] == ["{1,2}"] and report["least"] == "{1,2}"
        assert report["method"] == "eq1-closure"
        assert report["per_seed"][0] == {
            "seed": "{}", "supremum": "{1,2}", "orbit": ["{1}", "{2}", "{1,2}"], "applications": 8}

    def test_solve_round_robin(self, write, capsys):
        code, report, _ = run(capsys, "solve", write(JOINS_DOC), "--family", "j1",
                              "--family", "j2", "--strategy", "round-robin")
        assert code == 0 and report["fix_set"] == ["{1,2}"]
        assert report["method"] == "round-robin"

    def test_solve_non_commutative(self, write, capsys):
        code, report, err = run(capsys, "solve", write(JOINS_DOC), "--family", "j1,m2")
        assert code == 1
        assert report["error"]["which"] == "not-commutative"
        assert report["error"]["witness"] == {"pair": ["j1", "m2"], "element": "{}"}
        assert "not-commutative" in err

    def test_solve_unsafe_runs_anyway(self, write, capsys):
        code, report, _ = run(capsys, "solve", write(JOINS_DOC), "--family", "j1,m2",
                              "--unsafe-skip-preconditions")
        assert code == 0 and report["preconditions"]["commutative"] is False

    def test_oracle_identity(self, write, capsys):
        code, report, _ = run(capsys, "oracle", write(CHAIN_DOC), "--family", "id")
        assert code == 0 and report["all_hold"]
        assert report["fix_set"] == ["0", "1", "2"]
        assert all(v["holds"] for v in report["verdicts"])

    def test_check(self, write, capsys):
        code, report, _ = run(capsys, "check", write(JOINS_DOC))
        props = report["properties"]
        assert code == 0
        assert props["complete_lattice"] and props["bottom"] == "{}"
        assert props["commutative"] == {"holds": False, "pair": ["j1", "m2"], "element": "{}"}
        assert props["maps"]["m2"]["isotone"]

    def test_kleene(self, write, capsys):
        code, report, _ = run(capsys, "kleene", write(CHAIN_DOC), "--map", "f")
        assert code == 0
        assert report["trace"] == ["0", "1", "2"] and report["steps"] == 2 and report["fixpoint"] == "2"

    def test_kleene_start(self, write, capsys):
        code, report, _ = run(capsys, "kleene", write(CHAIN_DOC), "--map", "f", "--start", "1")
        assert report["trace"] == ["1", "2"]

    def test_seeds(self, write, capsys):
        code, report, _ = run(capsys, "seeds", write(JOINS_DOC), "--map", "j1")
        assert code == 0 and report["fix_set"] == ["{1}", "{1,2}"]

    def test_unknown_flag(self, write, capsys):
        code, _, err = run(capsys, "solve", write(CHAIN_DOC), "--bogus")
        assert code == 2 and "usage" in err

    def test_missing_file(self, tmp_path, capsys):
        code, _, _ = run(capsys, "solve", str(tmp_path / "nope.json"))
        assert code == 2

    def test_unknown_map_name(self, write, capsys):
        code, _, _ = run(capsys, "kleene", write(CHAIN_DOC), "--map", "g")
        assert code == 2

    def test_parse_error_exit(self, write, capsys):
        code, _, err = run(capsys, "check", write("{oops"))
        assert code == 2 and "line 1" in err

    def test_gen_bad_spec(self, tmp_path, capsys):
        code, _, _ = run(capsys, "gen", "--kind", "powerset", "--n", "9", "-o", str(tmp_path / "x.json"))
        assert code == 2


class TestGen:
    def test_round_trip_is_byte_identical(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        assert main(["gen", "--kind", "random", "--n", "8", "--rng-seed", "11", "--count", "3",
                     "-o", str(out)]) == 0
        text = out.read_text(encoding="utf-8")
        inst = load_instance(out)
        assert dumps_instance(inst.poset, inst.family, inst.meta) == text
        assert inst.meta["generator"]["rng_seed"] == 11

    def test_gen_stdout(self, capsys):
        assert main(["gen", "--kind", "diamond-M3", "--strategy", "join-translations",
                     "--rng-seed", "3"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert list(doc) == ["elements", "order", "maps", "meta"]
        assert doc["order"]["covers"] == sorted(doc["order"]["covers"])

    def test_same_seed_same_bytes(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            main(["gen", "--kind", "powerset", "--n", "3", "--strategy", "join-translations",
                  "--count", "2", "--rng-seed", "42", "-o", str(path)])
        assert a.read_bytes() == b.read_bytes()


def test_module_entry_point(write):
    proc = subprocess.run([sys.executable, "-m", "jointfix", "solve", write(CHAIN_DOC), "--family", "f"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["fix_set"] == ["2"]
