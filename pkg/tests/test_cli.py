import json
from importlib.resources import as_file, files

import pytest

from galois_rules.cli import main

from conftest import load_data


@pytest.fixture()
def course_csv(tmp_path):
    p = tmp_path / "cours.csv"
    p.write_text(load_data("cours.csv"), encoding="utf-8")
    return p


@pytest.fixture()
def course_tax_file(tmp_path):
    p = tmp_path / "tax.txt"
    p.write_text(load_data("cours_taxonomy.txt"), encoding="utf-8")
    return p


class TestMine:
    def test_course_summary_and_artifacts(self, course_csv, tmp_path, capsys):
        out = tmp_path / "out"
        code = main(["mine", "--context", str(course_csv),
                     "--minsupp", "0.5", "--minconf", "1/2", "--out", str(out)])
        assert code == 0
        printed = capsys.readouterr().out
        assert "9 partial, 1 total" in printed
        for name in ["lattice.json", "lattice.dot", "rules.json", "rules.csv",
                     "mhier.json", "mhier.dot"]:
            assert (out / name).exists()
        data = json.loads((out / "rules.json").read_text(encoding="utf-8"))
        assert len(data["rules"]) == 10

    def test_summary_matches_recomputation_from_artifacts(self, course_csv, tmp_path, capsys):
        out = tmp_path / "out"
        main(["mine", "--context", str(course_csv), "--out", str(out)])
        capsys.readouterr()
        data = json.loads((out / "rules.json").read_text(encoding="utf-8"))
        totals = sum(1 for r in data["rules"] if r["status"] == "total")
        assert totals == 1 and len(data["rules"]) - totals == 9

    def test_empty_outcome_exits_zero(self, course_csv, tmp_path, capsys):
        code = main(["mine", "--context", str(course_csv), "--minsupp", "1",
                     "--minconf", "0.5", "--out", str(tmp_path / "o")])
        assert code == 0
        assert "0 partial, 0 total" in capsys.readouterr().out

    def test_missing_file_nonzero(self, tmp_path, capsys):
        code = main(["mine", "--context", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "o")])
        assert code != 0
        assert "error:" in capsys.readouterr().err

    def test_malformed_context_nonzero(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("R,p\na,7\n", encoding="utf-8")
        code = main(["mine", "--context", str(bad), "--out", str(tmp_path / "o")])
        assert code != 0

    def test_deterministic_artifacts(self, course_csv, tmp_path, capsys):
        out1, out2 = tmp_path / "a", tmp_path / "b"
        main(["mine", "--context", str(course_csv), "--out", str(out1)])
        main(["mine", "--context", str(course_csv), "--out", str(out2)])
        capsys.readouterr()
        for name in ["lattice.json", "rules.json", "rules.csv", "mhier.json"]:
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes()

    def test_cxt_format(self, tmp_path, capsys):
        doc = "B\n\n2\n2\n\na\nb\np\nq\nXX\nX.\n"
        p = tmp_path / "tiny.cxt"
        p.write_text(doc, encoding="utf-8")
        code = main(["mine", "--context", str(p), "--out", str(tmp_path / "o")])
        assert code == 0


class TestGeneralize:
    def test_walkthrough_seeds(self, course_csv, course_tax_file, tmp_path, capsys):
        out = tmp_path / "out"
        code = main(["generalize", "--context", str(course_csv),
                     "--taxonomy", str(course_tax_file), "--out", str(out),
                     "--seed", "Algorithmique=>Probabilité",
                     "--seed", "Algorithmique=>Algèbre"])
        assert code == 0
        data = json.loads((out / "hhier.json").read_text(encoding="utf-8"))
        (payload,) = data.values()
        pairs = {(tuple(n["premise"]), tuple(n["conclusion"])) for n in payload["nodes"]}
        assert (("Informatique",), ("Mathématique",)) in pairs
        assert (out / "hhier.dot").exists()

    def test_seed_with_no_generalization(self, tmp_path, capsys):
        ctx = tmp_path / "c.csv"
        ctx.write_text("R,p,q\na,1,1\nb,1,1\nc,0,0\n", encoding="utf-8")
        tax = tmp_path / "t.txt"
        tax.write_text("", encoding="utf-8")
        out = tmp_path / "out"
        code = main(["generalize", "--context", str(ctx), "--taxonomy", str(tax),
                     "--out", str(out), "--seed", "p=>q"])
        assert code == 0
        data = json.loads((out / "hhier.json").read_text(encoding="utf-8"))
        (payload,) = data.values()
        assert len(payload["nodes"]) == 1

    def test_unmatched_seed_nonzero(self, course_csv, course_tax_file, tmp_path, capsys):
        code = main(["generalize", "--context", str(course_csv),
                     "--taxonomy", str(course_tax_file), "--out", str(tmp_path / "o"),
                     "--seed", "Biologie=>QoS"])
        assert code != 0
        assert "no extracted rule" in capsys.readouterr().err

    def test_requires_taxonomy(self, course_csv, tmp_path, capsys):
        code = main(["generalize", "--context", str(course_csv),
                     "--out", str(tmp_path / "o"), "--seed", "Algèbre=>Algorithmique"])
        assert code != 0

    def test_seed_id_selector(self, course_csv, course_tax_file, tmp_path, capsys):
        out = tmp_path / "out"
        code = main(["generalize", "--context", str(course_csv),
                     "--taxonomy", str(course_tax_file), "--out", str(out),
                     "--seed-id", "0"])
        assert code == 0

    def test_bad_seed_id_nonzero(self, course_csv, course_tax_file, tmp_path, capsys):
        code = main(["generalize", "--context", str(course_csv),
                     "--taxonomy", str(course_tax_file), "--out", str(tmp_path / "o"),
                     "--seed-id", "999"])
        assert code != 0


class TestServe:
    def test_occupied_port_fails_nonzero(self, course_csv, capsys):
        import socket
        sock = socket.socket()
        sock.bind(("127.0.0.1", 0))
        port = sock.getsockname()[1]
        sock.listen(1)
        try:
            code = main(["serve", "--context", str(course_csv), "--port", str(port)])
        finally:
            sock.close()
        assert code != 0
