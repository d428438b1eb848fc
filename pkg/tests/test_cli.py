import io

import pytest

from beliefz import __version__
from beliefz.cli import build_parser, main

UPGRADES = "space naive\nupgrade {X1=heads, X2=heads}\nupgrade {X1=tails, X2=tails}\nupgrade {X1=heads}\n"


def invoke(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue().splitlines()


@pytest.fixture
def script(tmp_path):
    path = tmp_path / "upgrades.txt"
    path.write_text(UPGRADES)
    return str(path)


class TestScenarioRun:
    def test_tsv(self):
        code, lines = invoke("scenario-run")

        assert code == 0
        assert lines[0] == "stage\thypothesis\todds\tevidence"
        final = [line for line in lines if line.startswith("3\t")]
        assert [line.rsplit("\t", 1)[0] for line in final] == [
            "3\tX11\te",
            "3\tX10\t1",
            "3\tX01\te^3",
            "3\tX00\te^2",
        ]

    def test_pretty(self):
        code, lines = invoke("scenario-run", "--format", "pretty", "--family", "correlated")

        assert code == 0
        assert lines[0] == "correlated (symbolic)"
        assert lines[1].startswith("Time t")
        assert any(line.startswith("Odds for X00") and "g^3" in line for line in lines)
        assert lines[-1].split() == ["Most", "probable", "X11", "X11", "X00", "X11"]

    def test_numeric_gamma(self):
        code, lines = invoke("scenario-run", "--gamma", "1/1000")

        assert code == 0
        assert "3\tX01\t1/1000000000\t" in "\n".join(lines)

    def test_config_file(self, tmp_path):
        path = tmp_path / "scenario.yaml"
        path.write_text("family: dependent\n")

        code, lines = invoke("scenario-run", str(path), "--format", "pretty")

        assert code == 0
        assert lines[0] == "dependent (symbolic)"

    def test_flags_override_the_config_file(self, tmp_path):
        path = tmp_path / "scenario.yaml"
        path.write_text("family: dependent\ngamma: 1/10\n")

        code, lines = invoke("scenario-run", str(path), "--family", "independent", "--format", "pretty")

        assert code == 0
        assert lines[0] == "independent (gamma=1/10)"

    def test_missing_config(self, tmp_path, capsys):
        code, lines = invoke("scenario-run", str(tmp_path / "missing.yaml"))

        assert code == 2
        assert lines == []
        assert "beliefz scenario-run" in capsys.readouterr().err

    def test_invalid_gamma(self, capsys):
        code, _ = invoke("scenario-run", "--gamma", "2")

        assert code == 2
        assert "gamma" in capsys.readouterr().err


class TestScenarioCheck:
    @pytest.mark.parametrize("family", ["independent", "dependent", "correlated"])
    def test_fixtures_match(self, family):
        code, lines = invoke("scenario-check", "--family", family)

        assert code == 0
        assert lines == [f"{family}\tmatch"]

    @pytest.mark.parametrize("family", ["footnote4", "nosuch"], ids=["no fixture", "unknown"])
    def test_no_fixture(self, family, capsys):
        code, _ = invoke("scenario-check", "--family", family)

        assert code == 2
        assert family in capsys.readouterr().err


class TestVerify:
    def test_prop1(self):
        code, lines = invoke("verify-prop1", "--atoms", "3")

        assert code == 0
        assert lines[0] == "prop1\tatoms=3\tchecks=13\tpassed=13"
        assert "prop1\tK=#[0]\toperators=3" in lines

    @pytest.mark.parametrize(
        "argv",
        [
            ["--workers", "2", "verify-prop2", "--atoms", "3"],
            ["verify-prop2", "--atoms", "3", "--workers", "2"],
        ],
        ids=["before the command", "after the command"],
    )
    def test_workers(self, argv):
        code, lines = invoke(*argv)

        assert code == 0
        assert lines[0] == "prop2\tatoms=3\tchecks=13\tpassed=13"

    def test_too_many_atoms(self, capsys):
        code, _ = invoke("verify-prop3", "--atoms", "9")

        assert code == 2
        assert "exceeds the limit" in capsys.readouterr().err

    def test_postulates(self):
        code, lines = invoke("verify-postulates", "--atoms", "3", "--samples", "20", "--seed", "1")

        assert code == 0
        assert lines == [
            "lemma1\tatoms=3\tchecks=20\tpassed=20",
            "lemma2\tatoms=3\tchecks=20\tpassed=20",
        ]

    def test_postulates_need_samples(self):
        code, _ = invoke("verify-postulates", "--samples", "0")

        assert code == 2


class TestUpgradeRun:
    def test_run(self, script):
        code, lines = invoke("upgrade-run", script)

        assert code == 0
        assert lines[0] == "step 0\tupgrade -"
        assert lines[-1] == "  belief\t{X1=heads,X2=heads}"
        assert "step 3\tupgrade {X1=heads,X2=tails; X1=heads,X2=heads}" in lines

    def test_malformed_script(self, tmp_path, capsys):
        path = tmp_path / "broken.txt"
        path.write_text("upgrade {X1=heads}\nflip {X2=tails}\n")

        code, _ = invoke("upgrade-run", str(path))

        assert code == 2
        assert "line 2" in capsys.readouterr().err


class TestIteratedCheck:
    def test_conditioning_on_the_scenario(self):
        code, lines = invoke("iterated-check", "--postulate", "I2", "--family", "independent")

        assert code == 0
        assert lines[0] == "I2\tvacuous\t"

    def test_nested_evidence(self):
        code, lines = invoke(
            "iterated-check",
            "--postulate",
            "I1",
            "--policy",
            "upgrade",
            "--evidence",
            "{X1=heads}",
            "#[3]",
        )

        assert code == 0
        assert lines[0] == "I1\tholds\t"

    def test_literal_reading_fails(self):
        code, lines = invoke(
            "iterated-check", "--postulate", "I2", "--policy", "upgrade", "--reading", "literal"
        )

        assert code == 1
        assert lines[0].startswith("I2\tviolated\t")
        assert lines[-1] == "belief 3\t{X1=heads,X2=heads}"

    def test_factored_policy(self, script):
        code, lines = invoke("iterated-check", "--postulate", "I2", "--policy", "factored", "--script", script)

        assert code in (0, 1)
        assert lines[-1] == "belief 3\t{X1=heads,X2=tails}"

    def test_conditioning_on_disjoint_evidence(self):
        code, lines = invoke(
            "iterated-check", "--postulate", "I2", "--space", "naive", "--evidence", "#[0]", "{X1=heads}"
        )

        assert code == 0
        assert lines[0].startswith("I2\tinapplicable\t")
        assert lines[-1] == "belief 2\tundefined"

    def test_single_event(self, capsys):
        code, _ = invoke("iterated-check", "--postulate", "I1", "--space", "naive", "--evidence", "#[0]")

        assert code == 2
        assert "two pieces of evidence" in capsys.readouterr().err


class TestEnumerate:
    def test_every_belief_set(self):
        code, lines = invoke("enumerate", "--atoms", "3")

        assert code == 0
        assert len(lines) == 7
        assert "K=#[0]\tpreorders=3" in lines
        assert "K=#[0,1,2]\tpreorders=1" in lines

    def test_with_operators(self):
        code, lines = invoke("enumerate", "--atoms", "3", "--operators")

        assert code == 0
        assert "K=#[0]\tpreorders=3\toperators=3" in lines

    def test_one_belief_set(self):
        code, lines = invoke("enumerate", "--atoms", "3", "--belief", "#[0,1]")

        assert code == 0
        assert lines == ["K=#[0,1]\tpreorders=1"]


class TestParser:
    def test_help(self, capsys):
        assert main(["--help"]) == 0
        assert "scenario-run" in capsys.readouterr().out

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert __version__ in capsys.readouterr().out

    def test_unknown_command(self):
        assert main(["teleport"]) == 2

    def test_missing_command(self):
        assert main([]) == 2

    def test_defaults(self):
        args = build_parser().parse_args(["enumerate", "--atoms", "3"])

        assert args.workers == 1
        assert args.verbose is False
