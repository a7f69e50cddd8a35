import csv
import io
import json

import pytest

from heavyberge.bounds import BlueRedGraph
from heavyberge.cli import main
from heavyberge.detect import BergeWitness, verify_witness
from heavyberge.hypergraph import parse, serialize
from heavyberge.patterns import complete


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_q(tmp_path, capsys):
    out = tmp_path / "q.json"
    code, _, _ = run(capsys, "generate", "Q", "--n", 6, "--parts", 3, "--r", 3, "--t", 2, "--out", out)
    assert code == 0
    assert len(parse(out.read_text())) == 11
    report = json.loads((tmp_path / "q.json.report.json").read_text())
    assert report["size"] == report["predicted"] == 11
    assert report["freeness"] == {"pattern": "K4", "t": 2, "mode": "heavy", "free": True}


@pytest.mark.parametrize("argv,size", [
    (["sts", "--n", 7], 7),
    (["c2", "--n", 10, "--r", 3, "--t", 2], 36),
    (["turan", "--n", 7, "--parts", 3, "--r", 3], 12),
    (["c3", "--n", 12, "--t", 3], 60),
    (["packing", "--n", 7, "--r", 3, "--lam", 1], None),
    (["c4", "--n", 12, "--t", 4, "--pattern", "S2"], None),
])
def test_generate_to_stdout(capsys, argv, size):
    code, out, err = run(capsys, "generate", *argv)
    assert code == 0
    h = parse(out)
    report = json.loads(err)
    assert report["size"] == len(h)
    if size is not None:
        assert len(h) == size
    assert report["freeness"]["free"] is True


def test_generate_c1_from_seed_file(tmp_path, capsys):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps({"n": 2, "r": 2, "edges": [[0, 1]]}))
    code, out, _ = run(capsys, "generate", "c1", "--n", 6, "--seed-file", seed, "--t", 2)
    assert code == 0 and len(parse(out)) == 6


def test_generate_c3_from_seed_file(tmp_path, capsys):
    seed = tmp_path / "c4.json"
    seed.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]],
                                "matching": [[0, 1], [2, 3]]}))
    code, out, _ = run(capsys, "generate", "c3", "--n", 8, "--t", 4, "--seed-file", seed)
    assert code == 0 and len(parse(out)) == 4 * (2 * 4 - 2)


@pytest.mark.parametrize("argv", [
    ["generate", "sts", "--n", 8],
    ["generate", "Q", "--n", 6],
    ["generate", "c4", "--n", 10, "--t", 1, "--pattern", "S2"],
])
def test_generate_errors_exit_nonzero(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_generate_is_deterministic(tmp_path, capsys):
    outputs = []
    for name in ("a.json", "b.json"):
        run(capsys, "generate", "c2", "--n", 9, "--r", 3, "--t", 2, "--out", tmp_path / name)
        outputs.append((tmp_path / name).read_bytes() + (tmp_path / f"{name}.report.json").read_bytes())
    assert outputs[0] == outputs[1]


def test_check_fano_is_free(tmp_path, capsys, fano):
    path = tmp_path / "fano.json"
    path.write_text(serialize(fano))
    code, out, _ = run(capsys, "check", path, "--pattern", "S2", "--t", 2, "--mode", "heavy")
    assert code == 0 and out.strip() == "free"


def test_check_berge_triangle_is_contained(tmp_path, capsys, berge_triangle):
    path = tmp_path / "tri.json"
    path.write_text(serialize(berge_triangle))
    code, out, _ = run(capsys, "check", path, "--pattern", "K3", "--t", 2, "--mode", "berge")
    assert code == 1
    status, witness = out.strip().split("\n")
    assert status == "contained"
    w = BergeWitness.from_dict(json.loads(witness))
    assert verify_witness(berge_triangle, complete(3), 2, "berge", w)


def test_check_pattern_file(tmp_path, capsys, fan):
    host = tmp_path / "fan.json"
    host.write_text(serialize(fan))
    pattern = tmp_path / "cherry.json"
    pattern.write_text(json.dumps({"n": 3, "edges": [[0, 1], [0, 2]]}))
    code, _, _ = run(capsys, "check", host, "--pattern", pattern, "--t", 2)
    assert code == 1


@pytest.mark.parametrize("text", ['{"n": 3, "r": 3, "edges": [[0, 1]]}', "not json", '{"n": 3}'])
def test_check_malformed_exit_2(tmp_path, capsys, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    code, _, err = run(capsys, "check", path, "--pattern", "K3", "--t", 1)
    assert code == 2 and "ParseError" in err


def test_check_missing_file(tmp_path, capsys):
    code, _, _ = run(capsys, "check", tmp_path / "nope.json", "--pattern", "K3", "--t", 1)
    assert code == 2


def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "--n", 6, "--r", 3, "--t", 2, "--pattern", "K4")
    assert code == 0
    rows = [line.split() for line in out.strip().split("\n")[2:]]
    values = {(row[4], row[5]): int(row[6]) for row in rows}
    assert values[("upper", "symmetrization")] == 27
    assert values[("lower", "Q")] == 11
    lines = out.strip().split("\n")
    assert len({len(line) for line in lines[:2]}) == 1


def test_bounds_json_and_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "bounds", "--n", 6, "--r", 3, "--t", 2, "--pattern", "K4", "--format", "json")
    assert code == 0 and json.loads(out)["upper"]["symmetrization"] == 27
    figure = tmp_path / "bounds.png"
    code, out, _ = run(capsys, "bounds", "--n", 6, "--n-max", 10, "--r", 3, "--t", 2, "--pattern", "K4",
                       "--format", "csv", "--figure", figure)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and {int(r["n"]) for r in rows} == set(range(6, 11))
    assert figure.stat().st_size > 0


def test_bounds_bad_pattern(capsys):
    code, _, _ = run(capsys, "bounds", "--n", 6, "--r", 3, "--t", 2, "--pattern", "Z4")
    assert code == 2


def test_turan_exact(capsys):
    code, out, _ = run(capsys, "turan-exact", "--n", 5, "--r", 3, "--pattern", "S2", "--t", 2, "--mode", "heavy")
    data = json.loads(out)
    assert code == 0 and data["exhausted"] is True and data["value"] == 4
    assert "seconds" not in data
    assert len(parse(json.dumps(data["extremal"]))) == 4


def test_turan_exact_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "turan-exact", "--n", 5, "--r", 3, "--pattern", "S2", "--t", 1, "--timing")
    assert "seconds" in json.loads(out)


def test_symmetrize(tmp_path, capsys):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"n": 5, "blue": [[0, 1], [1, 2]], "red": [[2, 3], [0, 4]]}))
    final = tmp_path / "final.json"
    figure = tmp_path / "steps.png"
    code, out, _ = run(capsys, "symmetrize", "--input", g, "--k", 4, "--r", 3, "--t", 2,
                       "--final", final, "--figure", figure)
    assert code == 0
    data = json.loads(out)
    values = [data["g_initial"]] + [s["g_after"] for s in data["steps"]]
    assert values == sorted(values)
    result = BlueRedGraph.from_json(final.read_text())
    assert not (result.blue and result.red)
    assert figure.exists()


def test_symmetrize_rejects_clique(tmp_path, capsys):
    g = tmp_path / "k4.json"
    g.write_text(json.dumps({"n": 4, "blue": [[a, b] for a in range(4) for b in range(a + 1, 4)]}))
    code, _, err = run(capsys, "symmetrize", "--input", g, "--k", 4, "--r", 3, "--t", 2)
    assert code == 2 and "InputNotKkFree" in err


def test_selftest_subset(tmp_path, capsys):
    code, out, _ = run(capsys, "selftest", "--criteria", 3, 6, "--report-dir", tmp_path)
    assert code == 0
    assert out.count("[PASS]") == 2
    assert (tmp_path / "acceptance.csv").exists() and (tmp_path / "acceptance.png").exists()


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["generate", "nope"])
    assert info.value.code == 2
