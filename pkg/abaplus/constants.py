"""Constants shared across abaplus."""

# Reserved tokens.
TOP_MARKER = "⊤"
CONTRARY_PREFIX = "_contrary_"
COMPLEMENT_PREFIX = "~"

# Default engine limits (overridable via EngineConfig).
DEFAULT_ASSUMPTION_CAP = 16
DEFAULT_SUPPORT_CAP = 4096
DEFAULT_ORACLE_NODE_BUDGET = 200_000
DEFAULT_ARGUMENT_CAP = 16

# Process exit codes.
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3

# File directives.
FRAMEWORK_DIRECTIVES = ("assumption", "contrary", "rule", "pref", "lpref")
PAF_DIRECTIVES = ("arg", "att", "pref")

RULE_ARROW = "<-"
LEQ = "<="
LESS = "<"

ARGUMENT_TURNSTILE = "|-"
