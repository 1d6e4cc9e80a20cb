from __future__ import annotations

import argparse
import configparser
import json
import os
from typing import Any

from casson_invariants.constants import (
    COMMANDS,
    DEFAULT_CONFIG_PATH,
    ENV_PREFIX,
)
from casson_invariants.cli.config.config_option_handler import (
    ConfigOptionHandler,
)

ALL_COMMANDS = (
    COMMANDS.SHS,
    COMMANDS.SSF,
    COMMANDS.TWIST,
    COMMANDS.EXPR,
    COMMANDS.CENSUS,
    COMMANDS.VERIFY,
    COMMANDS.SWEEP,
)
# Keys of a JSON job file that describe the job rather than an option
JOB_KEYS = ("command", "manifold", "orders", "max")
OPTION_FLAGS = (
    "cap",
    "format",
    "quiet",
    "abc_samples",
    "log_level",
    "log_file",
)


class JobConfig:
    """One invocation of the tool: what to compute and how to report it.

    The job part is the command together with either a manifold expression,
    the cone orders of a small Seifert space whose coefficients are still to
    be chosen, or the bound of a sweep. The option part lives in a
    ``ConfigOptionHandler``, so every option can come from a config file, a
    JSON job file, the environment or the command line. Later sources win:
    command-line flags override files, which override the environment, which
    overrides the defaults.
    """

    DEFAULT_CONFIG_PATH = DEFAULT_CONFIG_PATH
    DEFAULT_PREFIX = ENV_PREFIX

    def __init__(
        self,
        handler: ConfigOptionHandler,
        *,
        command: str | None = None,
        manifold: str | None = None,
        orders: tuple[int, int, int] | None = None,
        sweep_max: int | None = None,
    ) -> None:
        if command is not None and command not in ALL_COMMANDS:
            raise ValueError(
                f"command must be one of {', '.join(ALL_COMMANDS)}, "
                f"got {command!r}"
            )
        if orders is not None and len(orders) != 3:
            raise ValueError(f"expected three cone orders, got {orders}")
        if sweep_max is not None and sweep_max < 2:
            raise ValueError(f"sweep bound must be at least 2, got {sweep_max}")
        self.handler = handler
        self.command = command
        self.manifold = manifold
        self.orders = orders
        self.sweep_max = sweep_max

    @property
    def cap(self) -> int:
        return self.handler.get_value("cap")

    @property
    def output_format(self) -> str:
        return self.handler.get_value("format")

    @property
    def quiet(self) -> bool:
        return self.handler.get_value("quiet")

    @property
    def abc_samples(self) -> int:
        return self.handler.get_value("abc_samples")

    @property
    def log_level(self) -> str:
        return self.handler.get_value("log_level")

    @property
    def log_file(self) -> str | None:
        return self.handler.get_value("log_file")

    def get_value(self, option: str) -> Any:
        """Gets the value of an option.

        Args:
            option (str): The name of the option.

        Returns:
            Any: The value of the option.
        """
        return self.handler.get_value(option)

    def set_value(self, option: str, value: Any) -> None:
        """Sets the value of an option.

        Args:
            option (str): The name of the option.
            value (Any): The raw or typed value.
        """
        self.handler.set_value(option, value)

    @staticmethod
    def from_config_handler(
        handler: ConfigOptionHandler, **job: Any
    ) -> JobConfig:
        """Creates a ``JobConfig`` from a ``ConfigOptionHandler``.

        Args:
            handler (ConfigOptionHandler): The options.
            **job (Any): The job fields ``command``, ``manifold``, ``orders``
                and ``sweep_max``.

        Returns:
            JobConfig: The job.
        """
        return JobConfig(handler, **job)

    @staticmethod
    def from_file(file_path: str, prefix: str = "") -> JobConfig:
        """Creates a ``JobConfig`` holding the options of an INI file.

        Args:
            file_path (str): The path of the config file.
            prefix (str): The environment variable prefix. Defaults to
                "CASSON".

        Raises:
            ValueError: If the file does not exist or an option in it holds
                an invalid value.

        Returns:
            JobConfig: The job, with no command set.
        """
        if not os.path.isfile(file_path):
            raise ValueError(f"config file {file_path} not found")
        prefix = prefix or JobConfig.DEFAULT_PREFIX
        cparse = configparser.ConfigParser()
        cparse.read(file_path)
        handler = ConfigOptionHandler(prefix=prefix)
        handler.read_from_configparser(cparse)
        return JobConfig.from_config_handler(handler)

    @staticmethod
    def from_dict(config: dict[str, Any], prefix: str = "") -> JobConfig:
        """Creates a ``JobConfig`` from a dictionary mixing job keys
        (``command``, ``manifold``, ``orders``, ``max``) and options.

        Args:
            config (dict[str, Any]): The dictionary.
            prefix (str): The environment variable prefix. Defaults to
                "CASSON".

        Raises:
            ValueError: If the job or an option is invalid.

        Returns:
            JobConfig: The job. A manifold without a command is evaluated
                with ``expr``.
        """
        prefix = prefix or JobConfig.DEFAULT_PREFIX
        options = {k: v for k, v in config.items() if k not in JOB_KEYS}
        handler = ConfigOptionHandler(prefix=prefix)
        handler.read_from_dict(options)

        command = config.get("command")
        manifold = config.get("manifold")
        if command is None and manifold is not None:
            command = COMMANDS.EXPR
        orders = config.get("orders")
        sweep_max = config.get("max")
        return JobConfig.from_config_handler(
            handler,
            command=command,
            manifold=manifold,
            orders=tuple(int(n) for n in orders) if orders else None,
            sweep_max=int(sweep_max) if sweep_max is not None else None,
        )

    @staticmethod
    def from_job_file(file_path: str, prefix: str = "") -> JobConfig:
        """Creates a ``JobConfig`` from a JSON job file, e.g.
        ``{"manifold": "SSF(4,6,8;1,1,1)", "format": "json"}``.

        Args:
            file_path (str): The path of the job file.
            prefix (str): The environment variable prefix. Defaults to
                "CASSON".

        Raises:
            ValueError: If the file is not a JSON object or the job is
                invalid.

        Returns:
            JobConfig: The job.
        """
        with open(file_path, "r", encoding="utf-8") as f:
            data = json.load(f)
        if not isinstance(data, dict):
            raise ValueError(f"{file_path} does not hold a JSON object")
        return JobConfig.from_dict(data, prefix=prefix)

    @staticmethod
    def from_args(args: argparse.Namespace) -> JobConfig:
        """Creates a ``JobConfig`` from parsed command-line arguments.

        Options are read from ``--config`` first, or from
        ``.casson_invariants`` in the working directory when no path is given
        and that file exists. The JSON job file of the ``job`` command comes
        next and the flags themselves come last.

        Args:
            args (argparse.Namespace): The parsed arguments.

        Raises:
            ValueError: If the job or an option is invalid.

        Returns:
            JobConfig: The job.
        """
        if args.command == "job":
            job = JobConfig.from_job_file(args.job_file)
        else:
            job = JobConfig(
                ConfigOptionHandler(prefix=JobConfig.DEFAULT_PREFIX),
                **_job_from_args(args),
            )
        config_path = getattr(args, "config", None)
        default_path = JobConfig.DEFAULT_CONFIG_PATH
        if config_path is None and os.path.isfile(default_path):
            config_path = default_path
        if config_path is not None:
            file_handler = JobConfig.from_file(config_path).handler
            # Values set by the job file win over the config file
            for option in file_handler.OPTIONS:
                if job.handler.get_option(option.name).value is None:
                    job.set_value(option.name, option.value)
        # Flags go through the callbacks as strings so they are validated
        for flag in OPTION_FLAGS:
            value = getattr(args, flag, None)
            if value is not None:
                job.set_value(flag, str(value))
        return job

    def save_to_file(self, file_path: str) -> None:
        """Saves the explicitly set options of the job to an INI file that
        ``from_file`` and ``--config`` read back.

        Args:
            file_path (str): The path of the file.
        """
        config = self.handler.save_to_configparser()
        with open(file_path, "w") as f:
            config.write(f)


def _job_from_args(args: argparse.Namespace) -> dict[str, Any]:
    command = args.command
    job: dict[str, Any] = {"command": command}
    if command == COMMANDS.SHS:
        job["manifold"] = "SHS(" + ",".join(map(str, args.multiplicities)) + ")"
    elif command == COMMANDS.TWIST:
        job["manifold"] = f"TW({args.xi};{args.slope})"
    elif command == COMMANDS.EXPR:
        job["manifold"] = args.expression
    elif command in (COMMANDS.SSF, COMMANDS.CENSUS, COMMANDS.VERIFY):
        if args.abc is None:
            job["orders"] = tuple(args.orders)
        else:
            orders = ",".join(map(str, args.orders))
            coefficients = ",".join(map(str, args.abc))
            job["manifold"] = f"SSF({orders};{coefficients})"
    elif command == COMMANDS.SWEEP:
        job["sweep_max"] = args.max
    return job
