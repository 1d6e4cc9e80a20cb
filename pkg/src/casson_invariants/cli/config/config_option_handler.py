from __future__ import annotations

import configparser
import copy
from typing import Any

from casson_invariants.constants import DEFAULT_ENUMERATION_CAP, FORMATS
from casson_invariants.cli.config.callbacks import (
    bool_callback,
    bool_save_callback,
    cap_callback,
    format_callback,
    log_level_callback,
    samples_callback,
)
from casson_invariants.cli.config.config_option import ConfigOption


class ConfigOptionHandler:
    """Manages the configuration options of a job.

    ``_BASE_OPTIONS`` holds the options the tool understands. Each handler
    works on its own deep copy, so setting values never leaks between
    handlers. Options read from a file or a dictionary that the handler does
    not know are collected in ``unknown_options`` instead of failing.
    """

    _BASE_OPTIONS: tuple[ConfigOption, ...] = (
        ConfigOption[int](
            "cap",
            default=DEFAULT_ENUMERATION_CAP,
            callback=cap_callback,
            save_callback=str,
            section="oracle",
            env_var="CAP",
        ),
        ConfigOption[str](
            "format",
            default=FORMATS.PLAIN,
            callback=format_callback,
            section="output",
            env_var="FORMAT",
        ),
        ConfigOption[bool](
            "quiet",
            default=False,
            callback=bool_callback,
            save_callback=bool_save_callback,
            section="output",
            env_var="QUIET",
        ),
        ConfigOption[int](
            "abc_samples",
            default=1,
            callback=samples_callback,
            save_callback=str,
            section="sweep",
            env_var="ABC_SAMPLES",
        ),
        ConfigOption[str](
            "log_level",
            default="WARNING",
            callback=log_level_callback,
            section="logging",
            env_var="LOG_LEVEL",
        ),
        ConfigOption[str](
            "log_file",
            default=None,
            section="logging",
            env_var="LOG_FILE",
        ),
    )

    def __init__(self, prefix: str | None = None) -> None:
        """Initializes the class.

        Args:
            prefix (str | None): The prefix of the environment variables. If
                None, no prefix is used. Defaults to None.
        """
        # Copy the base options so the class attribute is never modified
        self.OPTIONS: list[ConfigOption] = list(
            copy.deepcopy(self._BASE_OPTIONS)
        )
        self.unknown_options: list[tuple[str, str]] = []
        self.option_reference = {
            option.name: option for option in self.OPTIONS
        }
        self.prefix = prefix
        if prefix is not None:
            for option in self.OPTIONS:
                option.set_prefix(prefix)

    def get_option(self, name: str) -> ConfigOption:
        """Gets an option by name.

        Args:
            name (str): The name of the option. Dashes are read as
                underscores, so command-line spellings work too.

        Raises:
            KeyError: If the option is not supported.

        Returns:
            ConfigOption: The option.
        """
        name = name.lower().replace("-", "_")
        try:
            return self.option_reference[name]
        except KeyError:
            raise KeyError(f"Option {name} is not supported.")

    def get_value(self, name: str) -> Any:
        """Gets the resolved value of an option.

        Args:
            name (str): The name of the option.

        Returns:
            Any: The value of the option.
        """
        return self.get_option(name).get_value()

    def set_value(self, name: str, value: Any) -> None:
        """Sets the value of an option.

        Args:
            name (str): The name of the option.
            value (Any): The raw or typed value.
        """
        self.get_option(name).set_value(value)

    def read_from_configparser(self, config: configparser.ConfigParser) -> None:
        """Sets the values found in a ``ConfigParser``.

        Args:
            config (configparser.ConfigParser): The parsed config file.

        Raises:
            ValueError: If a known option holds an invalid value.
        """
        for section in config.sections():
            for option in config.options(section):
                value = config.get(section, option)
                try:
                    self.set_value(option, value)
                except KeyError:
                    self.unknown_options.append((option, value))

    def read_from_dict(self, config: dict[str, Any]) -> None:
        """Sets the values found in a dictionary.

        Args:
            config (dict[str, Any]): Option names mapped to values.

        Raises:
            ValueError: If a known option holds an invalid value.
        """
        for option, value in config.items():
            if isinstance(value, (int, float)) and not isinstance(value, bool):
                value = str(value)
            elif isinstance(value, bool):
                value = bool_save_callback(value)
            try:
                self.set_value(option, value)
            except KeyError:
                self.unknown_options.append((option, str(value)))

    def save_to_configparser(
        self, config: configparser.ConfigParser | None = None
    ) -> configparser.ConfigParser:
        """Writes every explicitly set option into a ``ConfigParser``.

        Args:
            config (configparser.ConfigParser | None): The ConfigParser to
                write to. If None, a new one is created. Defaults to None.

        Returns:
            configparser.ConfigParser: The ConfigParser holding the options.
        """
        if config is None:
            config = configparser.ConfigParser()
        for option in self.OPTIONS:
            if option.value is None:
                continue
            if not config.has_section(option.section):
                config.add_section(option.section)
            config.set(option.section, option.name, option.convert())

        if self.unknown_options and not config.has_section("unknown"):
            config.add_section("unknown")
        for unknown_option, value in self.unknown_options:
            config.set("unknown", unknown_option, value)
        return config
