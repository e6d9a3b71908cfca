# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import datetime
import logging
import traceback
import json


class SystemFormatter(logging.Formatter):
    """
    One line per record: UTC timestamps, and any exception folded into a
    JSON-encoded trace at the end of the line.
    """

    def format(self, record: logging.LogRecord) -> str:
        if self._fmt is None:
            return ""

        rc = super().format(record)

        if record.exc_info and record.exc_info[0]:
            exclass = record.exc_info[0].__name__
            exc = record.exc_info[1]

            trace = "".join(traceback.format_exception(*record.exc_info))
            rc = (
                f"{rc} : [EXCEPTION]"
                f" : [{record.filename}({record.lineno})]"
                f" : [{exclass}] [{exc}]"
                f" : [TRACE] {json.dumps(trace.replace(chr(10), '\\n'))}"
            )

        return rc

    def formatTime(self, record, datefmt=None) -> str:
        ct = datetime.datetime.fromtimestamp(record.created, tz=datetime.UTC)
        if datefmt:
            return ct.strftime(datefmt)
        return "%s.%03d" % (ct.strftime("%Y%m%dT%H%M%SZ"), record.msecs)

    def formatException(self, ei) -> str:
        return ""
