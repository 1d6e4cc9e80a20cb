from casson_invariants.constants import ALL_FORMATS, MIN_ENUMERATION_CAP

TRUE_SPELLINGS = ("1", "true", "yes", "on")
FALSE_SPELLINGS = ("0", "false", "no", "off")
LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


# Callbacks receive raw strings and must return the typed value.
def _parse_int(name: str, raw: str) -> int:
    try:
        return int(raw.strip())
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def cap_callback(cap: str) -> int:
    value = _parse_int("cap", cap)
    if value < MIN_ENUMERATION_CAP:
        raise ValueError(
            f"cap must be at least {MIN_ENUMERATION_CAP}, got {value}"
        )
    return value


def format_callback(output_format: str) -> str:
    output_format = output_format.strip().lower()
    if output_format not in ALL_FORMATS:
        raise ValueError(
            f"format must be one of {', '.join(ALL_FORMATS)}, "
            f"got {output_format!r}"
        )
    return output_format


def bool_callback(flag: str) -> bool:
    normalized = flag.strip().lower()
    if normalized in TRUE_SPELLINGS:
        return True
    if normalized in FALSE_SPELLINGS:
        return False
    raise ValueError(f"expected a boolean, got {flag!r}")


def bool_save_callback(flag: bool) -> str:
    return "true" if flag else "false"


def samples_callback(samples: str) -> int:
    value = _parse_int("abc_samples", samples)
    if value < 1:
        raise ValueError(f"abc_samples must be at least 1, got {value}")
    return value


def log_level_callback(log_level: str) -> str:
    # Does not set the log level, just checks that it is valid
    log_level = log_level.strip().upper()
    if log_level not in LOG_LEVELS:
        raise ValueError(f"Log level must be one of {', '.join(LOG_LEVELS)}")
    return log_level
