import json

import pytest

from scripts import qil_cli


def test_budget_success(tmp_path):

    out = tmp_path.joinpath("budget.json")
    code = qil_cli.main(["budget", "--scheme", "noon", "--n-photons", "1000", "--fidelity-target", "0.999",
                         "--out", str(out)])

    assert code == qil_cli.EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["schemes"]["noon"]["N_required"] == pytest.approx(3.55e5, rel=0.01)


def test_budget_regime_violation(tmp_path):
    """
    Tests that a budget outside P_sp <= 1 is still written but exits with the regime code
    """

    out = tmp_path.joinpath("budget.json")
    code = qil_cli.main(["budget", "--n-photons", "10", "--out", str(out)])

    assert code == qil_cli.EXIT_REGIME
    assert "noon" in json.loads(out.read_text())["regime_violations"]


def test_sweep_from_config_file(tmp_path):

    config = tmp_path.joinpath("sweep.cfg")
    config.write_text("# kappa only\nn_photons = 50\ngrid = 0.5:1.5:3\nquantities = kappa\n")
    out = tmp_path.joinpath("sweep.csv")

    code = qil_cli.main(["sweep", "--config", str(config), "--n-photons", "100", "--out", str(out)])

    assert code == qil_cli.EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "N,theta,N_theta,kappa"
    assert len(lines) == 4
    assert lines[1].startswith("100,")


def test_protocol(tmp_path):

    out = tmp_path.joinpath("teleport.json")
    code = qil_cli.main(["protocol", "teleport", "--scheme", "noon", "--n-photons", "4", "--chi-x", "1,1j",
                         "--out", str(out)])

    assert code == qil_cli.EXIT_OK
    assert json.loads(out.read_text())["fidelity"] >= 1 - 1e-9


def test_entangle_single_loss(tmp_path):

    out = tmp_path.joinpath("entangle.json")
    code = qil_cli.main(["entangle", "--scheme", "tf", "--n-photons", "6", "--single-loss", "--out", str(out)])

    assert code == qil_cli.EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["total_probability"] == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("argv", [["sweep", "--n-photons", "100"],
                                  ["entangle", "--scheme", "laser", "--n-photons", "4"],
                                  ["budget", "--n-photons", "-5"],
                                  ["protocol", "ghz", "--scheme", "noon", "--n-photons", "2", "--mode", "sampled"],
                                  ["budget", "--n-photons", "10", "--theta", "0.1", "--waist-ratio", "3",
                                   "--detuning-ratio", "0.05"]])
def test_invalid_input(argv):

    assert qil_cli.main(argv) == qil_cli.EXIT_INVALID


def test_invalid_config_file(tmp_path):

    config = tmp_path.joinpath("bad.cfg")
    config.write_text("scheme = noon\ncolour = red\n")

    assert qil_cli.main(["entangle", "--config", str(config)]) == qil_cli.EXIT_INVALID
    assert qil_cli.main(["entangle", "--config", str(tmp_path.joinpath("missing.cfg"))]) == qil_cli.EXIT_INVALID


def test_unwritable_output(tmp_path):

    assert qil_cli.main(["budget", "--n-photons", "1000", "--out", str(tmp_path)]) == qil_cli.EXIT_INVALID


def test_unknown_subcommand():

    with pytest.raises(SystemExit):
        qil_cli.main(["plot"])
