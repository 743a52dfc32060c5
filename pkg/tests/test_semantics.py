import unittest

from _support import as_sets, load_sample, names

from abaplus.core.abstract import AAGraph, aa_extensions
from abaplus.core.attacks import Mode
from abaplus.core.config import EngineConfig
from abaplus.core.errors import FlatnessError, LimitError
from abaplus.core.semantics import (
    ALL_SEMANTICS,
    Enumerator,
    SemanticsName,
    defends,
    display_name,
    extensions,
    grounded_fixpoint,
    is_conflict_free,
)

NON_ADMISSIBLE = (
    SemanticsName.PREFERRED,
    SemanticsName.COMPLETE,
    SemanticsName.STABLE,
    SemanticsName.WELL_FOUNDED,
    SemanticsName.IDEAL,
)


class SemanticsNameTests(unittest.TestCase):
    def test_parse_aliases(self):
        self.assertIs(SemanticsName.parse("grounded"), SemanticsName.WELL_FOUNDED)
        self.assertIs(SemanticsName.parse("well-founded"), SemanticsName.WELL_FOUNDED)
        self.assertIs(SemanticsName.parse("Ideal"), SemanticsName.IDEAL)
        with self.assertRaises(ValueError):
            SemanticsName.parse("semi_stable")
        self.assertEqual(len(ALL_SEMANTICS), 6)

    def test_display_name(self):
        self.assertEqual(display_name(SemanticsName.WELL_FOUNDED, True), "grounded")
        self.assertEqual(display_name(SemanticsName.WELL_FOUNDED, False), "well_founded")
        self.assertEqual(display_name(SemanticsName.STABLE, True), "stable")


class PlainGoldenTests(unittest.TestCase):
    def test_f_z(self):
        e = Enumerator(load_sample("f_z.aba"), Mode.PLAIN)
        self.assertEqual(as_sets(e.report("preferred").extensions), names("alpha", "beta"))
        self.assertEqual(as_sets(e.report("stable").extensions), names("alpha", "beta"))
        self.assertEqual(as_sets(e.report("complete").extensions), names("", "alpha", "beta"))
        self.assertEqual(as_sets(e.report("grounded").extensions), names(""))
        self.assertEqual(as_sets(e.report("ideal").extensions), names(""))
        self.assertEqual(e.report("grounded").name, "grounded")

    def test_f_d(self):
        e = Enumerator(load_sample("f_d.aba"), Mode.PLAIN)
        self.assertEqual(as_sets(e.report("admissible").extensions), names("", "alpha", "beta", "beta delta"))
        self.assertEqual(as_sets(e.report("stable").extensions), names("beta delta"))
        self.assertEqual(as_sets(e.report("preferred").extensions), names("alpha", "beta delta"))
        self.assertEqual(as_sets(e.report("complete").extensions), names("beta delta"))
        self.assertEqual(as_sets(e.report("ideal").extensions), names(""))

    def test_f_d_well_founded_is_meet_of_complete(self):
        # Some write-ups of this framework list the empty set as well-founded.
        # That is its ideal extension; the only complete one is {beta, delta}.
        report = Enumerator(load_sample("f_d.aba"), Mode.PLAIN).report("well_founded")
        self.assertEqual(report.name, "well_founded")
        self.assertEqual(as_sets(report.extensions), names("beta delta"))
        self.assertEqual(report.flags, {"closed": True, "admissible": True})

    def test_three_cycle(self):
        e = Enumerator(load_sample("three_cycle.aba"), Mode.PLAIN)
        self.assertFalse(e.report("stable").exists)
        self.assertEqual(as_sets(e.report("complete").extensions), names(""))

    def test_four_assumptions(self):
        e = Enumerator(load_sample("four_assumptions.aba"), Mode.PLAIN)
        self.assertEqual(as_sets(e.report("stable").extensions), names("alpha gamma", "beta delta"))
        self.assertEqual(as_sets(e.report("grounded").extensions), names(""))
        self.assertEqual(as_sets(e.report("ideal").extensions), names(""))

    def test_classical_consistency_example(self):
        f = load_sample("classical.aba")
        for sem in NON_ADMISSIBLE:
            report = extensions(f, sem, Mode.PLAIN)
            self.assertEqual(as_sets(report.extensions), names(""), sem)
            self.assertEqual(report.conclusions_per_extension, (("p", "~p"),))


class PlusGoldenTests(unittest.TestCase):
    def _assert_unique(self, sample, expected, derived):
        e = Enumerator(load_sample(sample), Mode.PLUS)
        for sem in NON_ADMISSIBLE:
            report = e.report(sem)
            self.assertEqual(report.extensions, (expected,), (sample, sem))
            self.assertEqual(report.conclusions_per_extension, (derived,), (sample, sem))
            self.assertEqual(report.mode, "plus")

    def test_f_plus_z(self):
        self._assert_unique("f_plus_z.aba", ("beta",), ("beta", "stay"))

    def test_f_plus_d(self):
        self._assert_unique("f_plus_d.aba", ("beta", "delta"), ("beta", "delta", "stay"))

    def test_f_plus_c(self):
        self._assert_unique("f_plus_c.aba", ("beta", "gamma"), ("beta", "gamma", "stay"))

    def test_three_cycle(self):
        e = Enumerator(load_sample("three_cycle.aba"), Mode.PLUS)
        for sem in NON_ADMISSIBLE:
            self.assertEqual(as_sets(e.report(sem).extensions), names("alpha"), sem)

    def test_four_assumptions(self):
        e = Enumerator(load_sample("four_assumptions.aba"), Mode.PLUS)
        for sem in NON_ADMISSIBLE:
            self.assertEqual(as_sets(e.report(sem).extensions), names("alpha gamma"), sem)

    def test_no_complete(self):
        e = Enumerator(load_sample("no_complete.aba"), Mode.PLUS)
        complete = e.report("complete")
        self.assertFalse(complete.exists)
        self.assertEqual(complete.extensions, ())
        self.assertFalse(e.report("well_founded").exists)
        self.assertEqual(as_sets(e.report("preferred").extensions), names("alpha beta", "beta gamma"))
        self.assertEqual(as_sets(e.report("ideal").extensions), names("beta"))

    def test_divergence(self):
        report = extensions(load_sample("divergence.aba"), "complete", Mode.PLUS)
        self.assertEqual(as_sets(report.extensions), names("alpha epsilon"))

    def test_preference_aware_alias(self):
        report = extensions(load_sample("f_plus_z.aba"), "preferred", "preference_aware")
        self.assertEqual(report.extensions, (("beta",),))


class PredicateTests(unittest.TestCase):
    def test_conflict_free(self):
        f = load_sample("f_plus_z.aba")
        self.assertTrue(is_conflict_free(f, ["beta"]))
        self.assertFalse(is_conflict_free(f, ["alpha", "beta"]))
        self.assertFalse(is_conflict_free(f, ["alpha", "beta"], Mode.PLAIN))
        self.assertTrue(is_conflict_free(f, []))

    def test_defends(self):
        f = load_sample("f_plus_z.aba")
        self.assertTrue(defends(f, ["beta"], ["beta"]))
        self.assertFalse(defends(f, ["alpha"], ["alpha"]))
        self.assertTrue(defends(load_sample("f_z.aba"), ["alpha"], ["alpha"], Mode.PLAIN))

    def test_grounded_fixpoint(self):
        self.assertEqual(grounded_fixpoint(load_sample("f_plus_c.aba")), ("beta", "gamma"))
        self.assertEqual(grounded_fixpoint(load_sample("f_z.aba")), ())
        with self.assertRaises(FlatnessError):
            grounded_fixpoint(load_sample("f_plus_d.aba"))

    def test_assumption_cap(self):
        with self.assertRaises(LimitError):
            Enumerator(load_sample("four_assumptions.aba"), Mode.PLUS, EngineConfig(assumption_cap=3))


class AbstractTests(unittest.TestCase):
    def test_edgeless_graph(self):
        g = AAGraph.build(["x", "y"])
        self.assertEqual(aa_extensions(g, "stable"), [frozenset({"x", "y"})])
        self.assertEqual(aa_extensions(g, "grounded"), [frozenset({"x", "y"})])

    def test_mutual_attack(self):
        g = AAGraph.build(["x", "y"], [("x", "y"), ("y", "x")])
        self.assertEqual(aa_extensions(g, "preferred"), [frozenset({"x"}), frozenset({"y"})])
        self.assertEqual(aa_extensions(g, "complete"), [frozenset(), frozenset({"x"}), frozenset({"y"})])
        self.assertEqual(aa_extensions(g, "ideal"), [frozenset()])
        self.assertEqual(g.attackers_of("x"), ("y",))

    def test_odd_cycle(self):
        g = AAGraph.build(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")])
        self.assertEqual(aa_extensions(g, "stable"), [])
        self.assertEqual(aa_extensions(g, "preferred"), [frozenset()])

    def test_validation_and_cap(self):
        with self.assertRaises(ValueError):
            AAGraph.build(["x"], [("x", "y")])
        g = AAGraph.build(["x", "y", "z"])
        with self.assertRaises(LimitError):
            aa_extensions(g, "complete", EngineConfig(argument_cap=2))


if __name__ == "__main__":
    unittest.main()
