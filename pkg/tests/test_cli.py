from suhash.cli import main


def test_bench_command(capsys, tmp_path):
    csv_path = tmp_path / "bench.csv"
    rc = main(
        [
            "bench",
            "--family",
            "multilinear",
            "--length",
            "32",
            "--trials",
            "2",
            "--repetitions",
            "2",
            "--seed",
            "3",
            "--csv",
            str(csv_path),
        ]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "family=multilinear" in out
    assert "rep 1:" in out
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0].startswith("family,")
    assert len(lines) == 3


def test_bench_cycles_warning_goes_to_stderr(capsys):
    rc = main(
        ["bench", "--family", "sax", "--length", "16", "--trials", "1", "--timer", "cycles"]
    )
    assert rc == 0
    captured = capsys.readouterr()
    assert "WARNING" in captured.err


def test_verify_quick(capsys, tmp_path):
    csv_path = tmp_path / "reports.csv"
    rc = main(["verify", "--quick", "--csv", str(csv_path)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "PASS" in out
    assert "FAIL" not in out.replace("FAILED", "")
    assert csv_path.read_text().startswith("family,")


def test_sizing_stinson_stdout_deterministic(capsys):
    args = ["sizing", "stinson", "--input-bits", "1024,65536", "--word-sizes", "8,16,32,64"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.splitlines()[0] == "input_bits,char_bits,family_bits,stinson_bits,ratio"


def test_sizing_cost_csv_file(tmp_path, capsys):
    csv_path = tmp_path / "cost.csv"
    rc = main(
        [
            "sizing",
            "cost",
            "--hash-bits",
            "32",
            "--cost-exponent",
            "1.5",
            "--max-char-bits",
            "80",
            "--csv",
            str(csv_path),
        ]
    )
    assert rc == 0
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "char_bits,cost_per_bit"
    assert len(lines) == 81
