from casson_invariants.cli.config.config import JobConfig
from casson_invariants.cli.config.config_option import ConfigOption
from casson_invariants.cli.config.config_option_handler import (
    ConfigOptionHandler,
)

__all__ = ["ConfigOption", "ConfigOptionHandler", "JobConfig"]
