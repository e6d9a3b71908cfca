# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import logging
import logging.config
import typing
import re
import os

from importlib.resources import files


LOGGING_SEARCH_PATH: typing.List[str] = [
    "~/.fccsolve/logging.conf",
    "/etc/fccsolve/logging.conf",
]

_LEVEL_NAMES = "DEBUG|INFO|WARNING|ERROR|CRITICAL"


def parse_log_levels(
    log_levels: typing.Optional[typing.List[str]] = None,
) -> typing.Dict[str, int]:
    """
    Turns `LEVEL` and `LOGGER=LEVEL` options into a map of logger name to
    level. The root logger is stored under "root".
    """
    levels: typing.Dict[str, int] = {}

    for level in log_levels or []:
        if match := re.match(
            rf"^([A-Za-z0-9_.\-]+)=({_LEVEL_NAMES})$",
            level,
            flags=re.IGNORECASE,
        ):
            levels[match.group(1)] = getattr(logging, match.group(2).upper())

        elif match := re.match(
            rf"^({_LEVEL_NAMES})$",
            level,
            flags=re.IGNORECASE,
        ):
            levels["root"] = getattr(logging, match.group(1).upper())

        else:
            raise ValueError(
                f"Invalid log level format: {level}. Expected format: LOGGER=LEVEL or LEVEL. Options are [{_LEVEL_NAMES.replace('|', ', ')}]"
            )

    return levels


def configure_logging(
    log_levels: typing.Optional[typing.List[str]] = None,
):
    """
    Configures the logging settings for the application.
    """

    # Load the first logging configuration found, packaged one last
    logcfgs = LOGGING_SEARCH_PATH + [
        str(files("fccsolve.data") / "logging.conf")
    ]
    for cfg in logcfgs:
        fname = os.path.expanduser(cfg)
        if os.path.exists(fname):
            logging.config.fileConfig(fname, disable_existing_loggers=False)
            break

    levels = parse_log_levels(log_levels)

    console = logging.getHandlerByName("console")
    assert console, "console handler not found in logging configuration"

    root = logging.getLogger()
    root.setLevel(levels.pop("root", root.level))

    # Named loggers get their own level and write straight to the console
    for name, level in levels.items():
        logger = logging.getLogger(name)
        logger.setLevel(level)
        logger.propagate = False
        for h in list(logger.handlers):
            logger.removeHandler(h)
        logger.addHandler(console)
