from __future__ import annotations


class SymbolError(Exception):
    """Base class for every library error; `exit_code` is what the CLI returns."""

    exit_code: int = 8
    status_code: int = 422


class NotNondecreasing(SymbolError, ValueError):
    exit_code = 4


class LengthMismatch(SymbolError, ValueError):
    exit_code = 9


class NotInFamily(SymbolError):
    exit_code = 5


class NotNormalized(SymbolError):
    exit_code = 6


class CapExceeded(SymbolError):
    exit_code = 3
    status_code = 400

    def __init__(self, n: int, cap: int) -> None:
        super().__init__(f"n={n} exceeds the cap of {cap}; pass --unsafe-cap to lift it")
        self.n = n
        self.cap = cap


class UnknownCase(SymbolError):
    exit_code = 7
    status_code = 404


class NotStabilizable(SymbolError):
    """A leading entry that normalization must drop is nonzero."""

    exit_code = 10


class DecompositionError(SymbolError):
    """A decomposition broke one of its own invariants."""

    exit_code = 11


def check_cap(n: int, cap: int | None) -> None:
    if cap is not None and n > cap:
        raise CapExceeded(n, cap)
