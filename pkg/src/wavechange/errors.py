"""Exception hierarchy for wavechange."""


class WavechangeError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedFilter(WavechangeError, ValueError):
    pass


class LengthNotDivisible(WavechangeError, ValueError):
    pass


class FilterMismatch(WavechangeError, ValueError):
    pass


class DegenerateWavelet(WavechangeError, ValueError):
    pass


class InvalidScales(WavechangeError, ValueError):
    pass


class DegenerateDesign(WavechangeError, ValueError):
    pass


class TooShort(WavechangeError, ValueError):
    pass


class TargetTooLarge(WavechangeError, ValueError):
    pass


class InsufficientData(WavechangeError, ValueError):
    pass


class ZeroEnergy(WavechangeError, ValueError):
    pass


class InvalidParams(WavechangeError, ValueError):
    pass


class InputNotFound(WavechangeError, FileNotFoundError):
    pass


class ParseError(WavechangeError, ValueError):
    """Malformed input row.

    ``row`` is the 1-based line number in the file (header is line 1) and
    ``field`` names the offending column.
    """

    def __init__(self, message, row=None, field=None):
        super().__init__(message)
        self.row = row
        self.field = field
        self.detail = message

    def __str__(self):
        where = []
        if self.row is not None:
            where.append(f"row {self.row}")
        if self.field is not None:
            where.append(f"field {self.field!r}")
        return f"{', '.join(where)}: {self.detail}" if where else self.detail
