import json
import unittest
from pathlib import Path

from _support import make_repo_tmpdir, sample_path

from abaplus.cli.actions import OutputFormat, RunConfig, Subcommand
from abaplus.cli.runner import engine_config_for, run
from abaplus.constants import EXIT_CAPACITY, EXIT_OK, EXIT_PARSE, EXIT_USAGE

NO_CONFIG = str(Path(__file__).resolve().parent / "_missing_config.toml")


def _config(subcommand, sample, **kwargs) -> RunConfig:
    kwargs.setdefault("config_path", NO_CONFIG)
    return RunConfig(subcommand, (sample_path(sample),), **kwargs)


class RunnerDispatchTests(unittest.TestCase):
    def test_check_reports_statistics(self):
        result = run(_config(Subcommand.CHECK, "f_d.aba", output_format=OutputFormat.JSON))
        self.assertEqual(result.exit_code, EXIT_OK)
        stats = json.loads(result.output)
        self.assertEqual(stats["assumptions"], 3)
        self.assertEqual(stats["rules"], 3)
        self.assertEqual(stats["sentences"], 6)  # includes _contrary_delta
        self.assertFalse(stats["flat"])
        self.assertEqual(stats["closed_sets"], 6)
        self.assertFalse(stats["language_preference"])

    def test_semantics_text(self):
        result = run(_config(Subcommand.SEMANTICS, "f_plus_z.aba", semantics=("preferred",)))
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.output, "preferred (plus): 1 extension(s)\n  {beta}  conclusions {beta,stay}\n")

    def test_semantics_all_lists_six_reports(self):
        result = run(_config(Subcommand.SEMANTICS, "f_z.aba", mode="plain", output_format=OutputFormat.JSON))
        docs = json.loads(result.output)
        self.assertEqual(
            [doc["semantics"] for doc in docs],
            ["admissible", "preferred", "complete", "stable", "grounded", "ideal"],
        )
        self.assertTrue(all(doc["mode"] == "plain" for doc in docs))

    def test_attacks_text(self):
        result = run(_config(Subcommand.ATTACKS, "f_plus_z.aba"))
        self.assertEqual(result.output, "{alpha} -> {beta}  [plain]\n{beta} -> {alpha}  [both, plain]\n")

    def test_axioms(self):
        result = run(_config(Subcommand.AXIOMS, "no_complete.aba", output_format=OutputFormat.JSON))
        verdicts = json.loads(result.output)
        self.assertEqual(verdicts[0]["subject"], "weak_contraposition")
        self.assertEqual(verdicts[0]["status"], "violated")
        self.assertEqual(verdicts[0]["witnesses"], [{"support": ["alpha", "gamma"], "assumption": "beta"}])

    def test_principles_single(self):
        result = run(_config(
            Subcommand.PRINCIPLES,
            "no_complete.aba",
            semantics=("preferred",),
            principle="3",
            output_format=OutputFormat.JSON,
        ))
        items = json.loads(result.output)
        self.assertEqual(len(items), 1)
        self.assertEqual(items[0]["semantics"], "preferred")
        self.assertEqual(items[0]["verdict"]["status"], "violated")

    def test_translate_paf(self):
        result = run(_config(Subcommand.TRANSLATE_PAF, "two_arguments.paf"))
        self.assertEqual(
            result.output,
            "assumption A\nassumption B\nrule _contrary_B <- A\nrule _contrary_A <- B\npref A <= B\n",
        )

    def test_compare_defaults_to_complete(self):
        result = run(_config(Subcommand.COMPARE, "divergence.aba", semantics=(), output_format=OutputFormat.JSON))
        doc = json.loads(result.output)
        self.assertEqual(doc["semantics"], "complete")
        columns = {column["column"]: column for column in doc["columns"]}
        self.assertEqual(columns["abaplus"]["extensions"], [["alpha", "epsilon"]])
        self.assertEqual(columns["paf-eli"]["extensions"], [["epsilon |- epsilon"]])


class RunnerErrorTests(unittest.TestCase):
    def test_missing_input_is_usage_error(self):
        result = run(RunConfig(Subcommand.CHECK, ("does-not-exist.aba",), config_path=NO_CONFIG))
        self.assertEqual(result.exit_code, EXIT_USAGE)
        self.assertIn("does-not-exist.aba", result.error)

    def test_unknown_names_are_usage_errors(self):
        for kwargs in ({"mode": "fancy"}, {"semantics": ("semi_stable",)}):
            result = run(_config(Subcommand.SEMANTICS, "f_z.aba", **kwargs))
            self.assertEqual(result.exit_code, EXIT_USAGE, kwargs)
        result = run(_config(Subcommand.PRINCIPLES, "f_z.aba", principle="9"))
        self.assertEqual(result.exit_code, EXIT_USAGE)

    def test_parse_error_reports_location(self):
        with make_repo_tmpdir() as tmp:
            path = Path(tmp) / "bad.aba"
            path.write_text("assumption a\nrule a <-\nbogus line\n", encoding="utf-8")
            result = run(RunConfig(Subcommand.SEMANTICS, (str(path),), config_path=NO_CONFIG))
        self.assertEqual(result.exit_code, EXIT_PARSE)
        self.assertIn(f"{path}:3: ", result.error)

    def test_assumption_cap_exceeded(self):
        result = run(_config(Subcommand.SEMANTICS, "f_z.aba", assumption_cap=1))
        self.assertEqual(result.exit_code, EXIT_CAPACITY)
        self.assertTrue(result.error.startswith(sample_path("f_z.aba")))
        self.assertIn("assumption cap", result.error)

    def test_engine_config_layers(self):
        with make_repo_tmpdir() as tmp:
            path = Path(tmp) / "config.toml"
            path.write_text("[engine]\nassumption_cap = 8\nsupport_cap = 100\n", encoding="utf-8")
            config = RunConfig(Subcommand.CHECK, ("x",), config_path=str(path), support_cap=50)
            engine = engine_config_for(config)
        self.assertEqual(engine.assumption_cap, 8)
        self.assertEqual(engine.support_cap, 50)


if __name__ == "__main__":
    unittest.main()
