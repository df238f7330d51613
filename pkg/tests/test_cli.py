import io
import json

from detpf.cli import main


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_list_prints_registry():
    code, text = run_cli("list")
    assert code == 0
    assert "main2" in text and "cauchy" in text
    assert len(text.strip().splitlines()) >= 38


def test_verify_symbolic_pass():
    code, text = run_cli("verify", "--name", "cauchy", "--param", "n=1", "--mode", "symbolic")
    assert code == 0
    assert "PASS" in text


def test_verify_json_output():
    code, text = run_cli(
        "verify", "--name", "special2", "--param", "n=2",
        "--mode", "numeric", "--trials", "3", "--seed", "4", "--bound", "12", "--json",
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["identity"] == "special2" and payload["passed"] is True
    assert payload["trials"] == 3 and payload["seed"] == 4


def test_verify_bad_inputs_exit_one():
    assert run_cli("verify", "--name", "nonsense")[0] == 1
    assert run_cli("verify", "--name", "cauchy", "--param", "bogus=3")[0] == 1
    assert run_cli("verify", "--name", "cauchy", "--param", "n")[0] == 1
    assert run_cli("wat")[0] == 1


def test_lr_triple():
    code, text = run_cli("lr", "--lambda", "[2,1]", "--mu", "[1,1]", "--nu", "[1]")
    assert code == 0 and text.strip() == "1"


def test_lr_rect_all_methods():
    code, text = run_cli(
        "lr", "--rect", "--n", "1", "--e", "2", "--f", "1",
        "--lambda", "[2,1]", "--mu", "[2]", "--method", "all",
    )
    assert code == 0 and text.strip() == "1"
    code, text = run_cli(
        "lr", "--rect", "--n", "1", "--e", "2", "--f", "1",
        "--lambda", "[2,1]", "--mu", "[1]", "--method", "all",
    )
    assert code == 0 and text.strip() == "0"


def test_lr_rect_single_methods():
    for method in ("oracle", "pfaffian", "theorem"):
        code, text = run_cli(
            "lr", "--rect", "--n", "1", "--e", "2", "--f", "1",
            "--lambda", "[2,1]", "--mu", "[2]", "--method", method,
        )
        assert code == 0 and text.strip() == "1"


def test_lr_usage_errors():
    assert run_cli("lr", "--lambda", "[1]", "--mu", "[1]")[0] == 1  # no --nu
    assert run_cli("lr", "--rect", "--lambda", "[1]", "--mu", "[1]")[0] == 1
    assert run_cli("lr", "--lambda", "1,2", "--mu", "[]", "--nu", "[]")[0] == 1


def test_schur_output():
    code, text = run_cli("schur", "--shape", "[1]", "--vars", "2")
    assert code == 0 and text.strip() == "1*x1 + 1*x2"
    # s_{21/1} = s_2 + s_11 = x1^2 + 2 x1 x2 + x2^2 in two variables
    code, text = run_cli("schur", "--shape", "[2,1]", "--inner", "[1]", "--vars", "2")
    assert code == 0 and text.strip() == "1*x1^2 + 2*x1*x2 + 1*x2^2"


def test_pf_from_json(tmp_path):
    path = tmp_path / "skew.json"
    path.write_text(
        json.dumps({"dim": 4, "upper": [[0, 1, "2"], [2, 3, "1/3"], [0, 3, "0"]]})
    )
    code, text = run_cli("pf", "--matrix", str(path))
    assert code == 0 and text.strip() == "2/3"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 2}))
    assert run_cli("pf", "--matrix", str(bad))[0] == 1
    assert run_cli("pf", "--matrix", str(tmp_path / "missing.json"))[0] == 1


def test_campaign_with_config_and_json(tmp_path):
    config = tmp_path / "c.cfg"
    config.write_text(
        "seed = 5\ntrials = 3\nbound = 15\n\n"
        "[identity]\nname = cauchy\nmode = symbolic\nn = 2\n\n"
        "[identity]\nname = special2\nn = 2\n"
    )
    report_path = tmp_path / "report.json"
    code, text = run_cli("campaign", "--config", str(config), "--json", str(report_path))
    assert code == 0
    assert "total 2, failed 0" in text
    payload = json.loads(report_path.read_text())
    assert len(payload) == 2

    # replay is byte-identical
    report2 = tmp_path / "report2.json"
    code, text2 = run_cli("campaign", "--config", str(config), "--json", str(report2))
    assert code == 0 and text == text2
    assert report_path.read_bytes() == report2.read_bytes()

    assert run_cli("campaign", "--config", str(tmp_path / "nope.cfg"))[0] == 1


def test_campaign_workers_flag(tmp_path):
    config = tmp_path / "c.cfg"
    config.write_text(
        "seed = 2\ntrials = 4\nbound = 12\n\n[identity]\nname = special2\nn = 2\n"
    )
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert run_cli("campaign", "--config", str(config), "--json", str(out1))[0] == 0
    assert run_cli(
        "campaign", "--config", str(config), "--json", str(out2), "--workers", "2"
    )[0] == 0
    assert out1.read_bytes() == out2.read_bytes()
