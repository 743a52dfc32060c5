"""Framework model, parsing, deduction, attacks and semantics."""
