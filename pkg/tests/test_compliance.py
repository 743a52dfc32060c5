import random
import unittest

from _support import load_sample, random_framework

from abaplus.compliance import (
    Complement,
    Principle,
    Verdict,
    VerdictStatus,
    check_axiom_consistency,
    check_axiom_negation,
    check_contraposition,
    check_postulates,
    check_principle,
    check_wcp,
)
from abaplus.compliance.principles import is_directly_consistent, is_indirectly_consistent
from abaplus.core.deduction import support_families
from abaplus.core.framework import Framework, Rule
from abaplus.core.semantics import ALL_SEMANTICS
from abaplus.utils import is_subset


class VerdictTests(unittest.TestCase):
    def test_from_witnesses(self):
        self.assertIs(Verdict.from_witnesses("x", []).status, VerdictStatus.HOLDS)
        violated = Verdict.from_witnesses("x", [{"sentence": "p"}])
        self.assertFalse(violated.holds)
        self.assertEqual(violated.to_dict()["status"], "violated")
        self.assertEqual(violated.to_dict()["witnesses"], [{"sentence": "p"}])

    def test_complement_is_involutive(self):
        c = Complement()
        self.assertEqual(c("p"), "~p")
        self.assertEqual(c("~p"), "p")
        self.assertEqual(c(c("q")), "q")
        self.assertEqual(Complement(prefix="neg_")("neg_q"), "q")

    def test_principle_parse(self):
        self.assertIs(Principle.parse(3), Principle.MAXIMAL_ELEMENTS)
        self.assertIs(Principle.parse("5"), Principle.CLASSICAL_CONSISTENCY)
        self.assertIs(Principle.parse("empty-preferences"), Principle.EMPTY_PREFERENCES)
        with self.assertRaises(ValueError):
            Principle.parse("nope")


class AxiomTests(unittest.TestCase):
    def test_wcp_violated_on_no_complete(self):
        verdict = check_wcp(load_sample("no_complete.aba"))
        self.assertEqual(verdict.status, VerdictStatus.VIOLATED)
        self.assertEqual(verdict.witnesses, ({"support": ["alpha", "gamma"], "assumption": "beta"},))

    def test_wcp_holds_on_plus_c_but_contraposition_does_not(self):
        f = load_sample("f_plus_c.aba")
        self.assertTrue(check_wcp(f).holds)
        contraposition = check_contraposition(f)
        self.assertEqual(contraposition.status, VerdictStatus.VIOLATED)
        self.assertIn(
            {"support": ["alpha", "gamma"], "assumption": "beta", "member": "gamma"},
            contraposition.witnesses,
        )

    def test_divergence_satisfies_contraposition(self):
        f = load_sample("divergence.aba")
        self.assertTrue(check_contraposition(f).holds)
        self.assertTrue(check_wcp(f).holds)

    def test_axiom_of_consistency(self):
        verdict = check_axiom_consistency(load_sample("classical.aba"))
        self.assertEqual(verdict.status, VerdictStatus.VIOLATED)
        self.assertEqual(verdict.witnesses, ({"sentence": "p", "complement": "~p"},))
        self.assertTrue(check_axiom_consistency(load_sample("f_z.aba")).holds)

    def test_axiom_of_negation(self):
        f = Framework.build(["a"], {"a": "~p"}, rules=[Rule("p", ("a",))])
        self.assertFalse(check_axiom_negation(f).holds)
        witness = check_axiom_negation(f).witnesses[0]
        self.assertEqual(witness, {"sentence": "a", "support": ["a"]})

        g = Framework.build(["a"], {"a": "~a"})
        self.assertTrue(check_axiom_negation(g).holds)

    def test_contraposition_implies_wcp(self):
        rng = random.Random(5501)
        for _ in range(200):
            f = random_framework(rng, flat=None, max_assumptions=5, pref_density=0.3)
            if check_contraposition(f).holds:
                self.assertTrue(check_wcp(f).holds, f)

    def test_wcp_witnesses_recheck(self):
        rng = random.Random(5502)
        seen = 0
        for _ in range(200):
            f = random_framework(rng, flat=None, max_assumptions=5, pref_density=0.3)
            verdict = check_wcp(f)
            if verdict.holds:
                continue
            family = support_families(f)
            for witness in verdict.witnesses:
                seen += 1
                support = f.mask_of(witness["support"])
                beta = witness["assumption"]
                j = f.assumption_index[beta]
                self.assertIn(support, family.masks(f.contrary_of(beta)))
                lesser = support & f.strictly_below_masks[j]
                self.assertTrue(lesser)
                for i, alpha in enumerate(f.assumptions):
                    if not lesser >> i & 1 or f.strictly_below_masks[i] & lesser:
                        continue
                    allowed = (support & ~(1 << i)) | (1 << j)
                    self.assertFalse(
                        any(is_subset(s, allowed) for s in family.masks(f.contrary_of(alpha))),
                        (f, witness, alpha),
                    )
        self.assertGreater(seen, 0)


class PrincipleTests(unittest.TestCase):
    def test_postulates_on_plus_c(self):
        self.assertTrue(check_postulates(load_sample("f_plus_c.aba"), "complete").holds)
        self.assertTrue(check_postulates(load_sample("no_complete.aba"), "complete").holds)

    def test_consistency_predicates(self):
        f = load_sample("f_plus_z.aba")
        self.assertFalse(is_indirectly_consistent(f, ["alpha", "beta"]))
        self.assertTrue(is_indirectly_consistent(f, ["beta"]))
        self.assertTrue(is_directly_consistent(f, ["alpha", "beta"]))
        self.assertFalse(is_directly_consistent(f, ["alpha", "stay"]))

    def test_maximal_elements_violated_on_no_complete(self):
        f = load_sample("no_complete.aba")
        for sem in ("preferred", "ideal"):
            verdict = check_principle(f, Principle.MAXIMAL_ELEMENTS, sem)
            self.assertEqual(verdict.status, VerdictStatus.VIOLATED, sem)
        preferred = check_principle(f, 3, "preferred")
        self.assertIn(
            {"extension": ["alpha", "beta"], "maximal": ["beta", "gamma"], "missing": ["gamma"]},
            preferred.witnesses,
        )

    def test_maximal_elements_not_applicable(self):
        verdict = check_principle(load_sample("f_plus_c.aba"), 3, "preferred")
        self.assertEqual(verdict.status, VerdictStatus.NOT_APPLICABLE)
        self.assertIn("gamma", verdict.notes)

    def test_classical_consistency_violated(self):
        f = load_sample("classical.aba")
        for sem in ("complete", "stable", "preferred"):
            verdict = check_principle(f, Principle.CLASSICAL_CONSISTENCY, sem)
            self.assertEqual(verdict.witnesses, ({"extension": [], "sentence": "p"},), sem)

    def test_conflict_preservation_and_empty_preferences(self):
        f = load_sample("f_plus_z.aba")
        self.assertTrue(check_principle(f, 1, "stable").holds)
        self.assertTrue(check_principle(f, 2, "stable").holds)
        self.assertTrue(check_principle(f, 4, "complete").holds)

    def test_principles_on_random_frameworks(self):
        rng = random.Random(5503)
        for _ in range(200):
            f = random_framework(rng, flat=None, max_assumptions=5, pref_density=0.25)
            for sem in ALL_SEMANTICS:
                self.assertTrue(check_principle(f, Principle.RATIONALITY, sem).holds, (f, sem))
                self.assertTrue(check_principle(f, Principle.CONFLICT_PRESERVATION, sem).holds, (f, sem))
                self.assertTrue(check_principle(f, Principle.EMPTY_PREFERENCES, sem).holds, (f, sem))

    def test_maximal_elements_under_total_preference(self):
        rng = random.Random(5506)
        for _ in range(200):
            f = random_framework(rng, flat=None, max_assumptions=5, total_pref=True)
            for sem in ("complete", "stable", "well_founded"):
                verdict = check_principle(f, Principle.MAXIMAL_ELEMENTS, sem)
                self.assertNotEqual(verdict.status, VerdictStatus.VIOLATED, (f, sem, verdict))

    def test_total_preference_under_wcp(self):
        rng = random.Random(5504)
        checked = 0
        for _ in range(20000):
            f = random_framework(rng, flat=True, max_assumptions=5, max_rules=6, total_pref=True)
            if not check_wcp(f).holds:
                continue
            checked += 1
            for sem in ("preferred", "ideal"):
                verdict = check_principle(f, Principle.MAXIMAL_ELEMENTS, sem)
                self.assertNotEqual(verdict.status, VerdictStatus.VIOLATED, (f, sem, verdict))
            if checked == 200:
                break
        self.assertEqual(checked, 200)

    def test_consistency_and_negation_give_classical_consistency(self):
        rng = random.Random(5505)
        checked = 0
        for _ in range(4000):
            f = _classical_framework(rng)
            if not (check_axiom_consistency(f).holds and check_axiom_negation(f).holds):
                continue
            checked += 1
            for sem in ALL_SEMANTICS:
                self.assertTrue(check_principle(f, Principle.CLASSICAL_CONSISTENCY, sem).holds, (f, sem))
            if checked == 200:
                break
        self.assertEqual(checked, 200)


def _classical_framework(rng: random.Random) -> Framework:
    """Contraries are classical complements; most rules are facts."""
    n = rng.randint(1, 4)
    assumptions = [f"a{i}" for i in range(n)]
    atoms = ["p", "q"] + assumptions
    literals = atoms + [f"~{atom}" for atom in atoms]
    rules = []
    for _ in range(rng.randint(0, 5)):
        head = rng.choice(literals)
        if rng.random() < 0.7 or head not in assumptions:
            rules.append(Rule(head, ()))
        else:
            rules.append(Rule(head, (head,)))
    return Framework.build(assumptions, {a: f"~{a}" for a in assumptions}, rules)


if __name__ == "__main__":
    unittest.main()
