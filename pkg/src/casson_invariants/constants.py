DEFAULT_ENUMERATION_CAP = 10**6
# Smallest admissible enumeration: S^2(2,2,2)
MIN_ENUMERATION_CAP = 2 * 2 * 2
ENV_PREFIX = "CASSON"
DEFAULT_CONFIG_PATH = ".casson_invariants"


class FORMATS:
    PLAIN = "plain"
    JSON = "json"
    CSV = "csv"


ALL_FORMATS = (FORMATS.PLAIN, FORMATS.JSON, FORMATS.CSV)


class COMMANDS:
    SHS = "shs"
    SSF = "ssf"
    TWIST = "twist"
    EXPR = "expr"
    CENSUS = "census"
    VERIFY = "verify"
    SWEEP = "sweep"


class EXIT_CODES:
    OK = 0
    INVALID_INPUT = 2
    CHECK_FAILED = 3
    CAP_EXCEEDED = 4


SWEEP_COLUMNS = (
    "manifold",
    "lambda_psl",
    "lambda_sl",
    "h1",
    "h1_z2_order",
    "lambda_zero",
    "residual",
    "reducible",
    "dihedral",
    "klein",
    "total",
    "oracle_ok",
    "caveats",
)
