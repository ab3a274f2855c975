VERSION = "0.1.0"

LOGDIR = "."
LOGDIR_ENV_VAR = "DYCKGEN_LOGDIR"


# Conventions
STEP_PLAQUETTE = "step-plaquette"
DOUBLE_STEP_DIAMOND = "double-step-diamond"


# Desk-scale guards
GUARD_ENV_VAR = "DYCKGEN_GUARD_OVERRIDE"
DEFAULT_DIRECT_DET_MAX_HEIGHT = 32
DEFAULT_ENUM_PARTITION_BUDGET = 36
DEFAULT_ORACLE_MAX_LEN = 24


# Generating-function methods
METHOD_DETERMINANT = "determinant"
METHOD_CONTINUED_FRACTION = "continued-fraction"
METHOD_CLUSTER_EXP = "cluster-exp"
METHOD_ORACLE = "oracle"
METHOD_CLUSTER_LOG = "cluster-log"

VERIFY_SUITES = ("determinants", "genfun", "duality", "recursions", "cluster", "touchdown")
