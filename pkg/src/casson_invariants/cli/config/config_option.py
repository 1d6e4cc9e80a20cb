from __future__ import annotations

import os
from typing import Callable, Generic, TypeVar, cast

T = TypeVar("T")


class ConfigOption(Generic[T]):
    """A single configuration option of a job.

    An option knows its name, its default, the section it is saved under in a
    config file and the environment variable that can supply it. Raw values
    arrive as strings (from a config file, a JSON job file, an environment
    variable or the command line) and are turned into typed values by the
    callback, which also validates them.
    """

    def __init__(
        self,
        name: str,
        default: T | None = None,
        callback: Callable[[str], T] | None = None,
        save_callback: Callable[[T], str] | None = None,
        section: str = "options",
        env_var: str | None = None,
        env_prefix: str | None = None,
    ) -> None:
        """Initializes the class.

        Args:
            name (str): The name of the option.
            default (T | None): The default value of the option. If None, the
                option has no default. Defaults to None.
            callback (Callable[[str], T] | None): Converts a raw string into
                the typed value, raising ``ValueError`` when the string is not
                acceptable. If None, the raw string is stored as is. Defaults
                to None.
            save_callback (Callable[[T], str] | None): Converts the typed value
                back into the string written to a config file. Must be given
                whenever ``callback`` changes the type. Defaults to None.
            section (str): The config file section of the option. Defaults to
                "options".
            env_var (str | None): Base name of the environment variable that
                can supply the option, e.g. "CAP". A prefix such as "CASSON"
                turns it into "CASSON_CAP". If None, the environment is not
                consulted. Defaults to None.
            env_prefix (str | None): The prefix of the environment variable.
                Defaults to None.
        """
        self.name = name
        self.default = default
        self.callback = callback
        self.save_callback = save_callback
        self.section = section
        self.env_var = env_var
        self.env_prefix = env_prefix
        self.value: T | None = None

    @property
    def env_key(self) -> str | None:
        """The full name of the environment variable, prefix included.

        Returns:
            str | None: The environment variable name, or None if the option
                cannot be set from the environment.
        """
        if self.env_var is None:
            return None
        elif self.env_prefix is None:
            return self.env_var
        else:
            return f"{self.env_prefix}_{self.env_var}"

    def set_value(self, value: str | T | None) -> None:
        """Sets the value of the option.

        Strings go through the callback; values that are already typed, such
        as integers coming from ``argparse``, are stored directly. None resets
        the option so that the environment and the default apply again.

        Args:
            value (str | T | None): The new value.

        Raises:
            ValueError: If the callback rejects the value.
        """
        if value is None:
            self.value = None
        elif isinstance(value, str) and self.callback is not None:
            self.value = self.callback(value)
        else:
            self.value = cast(T, value)

    def get_value(self) -> T | None:
        """Gets the value of the option, looking in order at:

        1. The value set on the option.
        2. The environment variable, if the option has one and it is set.
        3. The default.

        Raises:
            ValueError: If the environment variable holds an invalid value.

        Returns:
            T | None: The value, or None if nothing supplies one.
        """
        if self.value is not None:
            return self.value
        elif self.env_key is not None and (raw := os.getenv(self.env_key)):
            if self.callback is not None:
                return self.callback(raw)
            return cast(T, raw)
        return self.default

    def set_prefix(self, prefix: str) -> None:
        """Sets the prefix of the environment variable.

        Args:
            prefix (str): The prefix.
        """
        self.env_prefix = prefix

    def convert(self) -> str:
        """The value as the string written to a config file.

        Returns:
            str: The string form of the value.
        """
        value = self.get_value()
        if self.save_callback is not None and value is not None:
            return self.save_callback(value)
        return str(value)
