import json

from sgres.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "7,9,8,13")
        assert code == 0
        payload = json.loads(out)
        assert payload["class"] == "FourGenSymmetricNonCI"
        assert payload["data"]["alpha"] == [3, 3, 2, 2]
        assert payload["generators"] == [7, 9, 8, 13]

    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "7,9,10", "--text")
        assert code == 0
        assert "class: ThreeGenNonSymmetric" in out

    def test_unsupported_order_notes_permutation(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "5,6,7,9")
        assert code == 0
        payload = json.loads(out)
        assert payload["class"] == "Unsupported"
        assert "5,7,6,9" in payload["note"]

    def test_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "classify", "13,9,11,14")
        _, second, _ = run_cli(capsys, "classify", "13,9,11,14")
        assert first == second


class TestResolve:
    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "resolve", "7,9,10")
        assert code == 0
        payload = json.loads(out)
        assert payload["betti_degrees"] == [[0], [27, 28, 30], [37, 48]]
        assert payload["maps"][0]["entries"][0][0] == "x1^4 - x2^2*x3"

    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "resolve", "7,9,10", "--text")
        assert code == 0
        assert "phi_1" in out and "phi_2" in out


class TestInvariantCommands:
    def test_pf(self, capsys):
        code, out, _ = run_cli(capsys, "pf", "13,9,11,14")
        assert code == 0
        payload = json.loads(out)
        assert payload["pf_definition"] == [15, 30]
        assert payload["pf_betti"] == [15, 30]
        assert payload["match"] is True

    def test_frobenius(self, capsys):
        code, out, _ = run_cli(capsys, "frobenius", "7,9,8,13")
        assert code == 0
        payload = json.loads(out)
        assert payload["frobenius_definition"] == 19
        assert payload["frobenius_betti"] == 19

    def test_hilbert(self, capsys):
        code, out, _ = run_cli(capsys, "hilbert", "2,3", "--max-degree", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["series"] == [1, 0, 1, 1, 1, 1]
        assert payload["matches_membership"] is True
        assert payload["kpolynomial"]["string"] == "1 - z^6"

    def test_indisp(self, capsys):
        code, out, _ = run_cli(capsys, "indisp", "5,12,11,14")
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] is False
        assert payload["witnesses"] == [
            {"level": 2, "pair": [1, 6], "diff": 10, "in_semigroup": True}
        ]


class TestExitCodes:
    def test_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "classify", "7,x")
        assert code == 1
        assert "usage error" in err

    def test_invalid_semigroup(self, capsys):
        code, _, err = run_cli(capsys, "classify", "2,4")
        assert code == 1
        assert "gcd" in err

    def test_unsupported_dimension(self, capsys):
        code, _, err = run_cli(capsys, "resolve", "19,27,28,31,32")
        assert code == 2

    def test_unsupported_class(self, capsys):
        code, _, _ = run_cli(capsys, "resolve", "5,6,7,9")
        assert code == 2

    def test_missing_subcommand(self, capsys):
        assert run_cli(capsys, )[0] == 1


class TestScan:
    def test_jsonl(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "--gens-max", "8")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert {"generators", "class", "frobenius", "type"} <= set(records[0])
        by_gens = {tuple(r["generators"]): r for r in records}
        assert by_gens[(2, 3)]["class"] == "TwoGen"
        assert by_gens[(4, 5, 6)]["class"] == "ThreeGenSymmetricCI"

    def test_csv_header(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "--gens-max", "6", "--csv")
        assert code == 0
        header = out.splitlines()[0]
        assert header == "generators,class,frobenius,type,verdict,witness"

    def test_class_filter(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "--gens-max", "10", "--class", "TwoGen")
        assert code == 0
        for line in out.splitlines():
            assert json.loads(line)["class"] == "TwoGen"

    def test_komeda_scan(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "--komeda", "3:5,2:3,2:2,2:3,1:2")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert records
        assert all(r["class"] == "FourGenPseudosymmetric" for r in records)

    def test_bresinsky_scan(self, capsys):
        code, out, _ = run_cli(
            capsys, "scan", "--bresinsky", "1:2,1:2,1:1,1:2,1:1,1:1,1:1,1:2"
        )
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert records
        assert all(r["class"] == "FourGenSymmetricNonCI" for r in records)

    def test_bad_ranges(self, capsys):
        code, _, err = run_cli(capsys, "scan", "--komeda", "1:2,3")
        assert code == 1

    def test_permutation_search_reaches_role_order(self, capsys):
        code, out, _ = run_cli(
            capsys, "scan", "--gens-max", "9", "--class", "FourGenPseudosymmetric"
        )
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert any(sorted(r["generators"]) == [5, 6, 7, 9] for r in records)


class TestSelftest:
    def test_passes(self, capsys):
        code, out, _ = run_cli(capsys, "selftest")
        assert code == 0
        assert "FAIL" not in out
        assert "checks passed" in out
