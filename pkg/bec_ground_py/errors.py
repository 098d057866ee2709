"""Contains the error types raised across the package."""

# Python libraries
from enum import Enum


class ErrorCode(str, Enum):
    """Failure categories reported by builders, solvers and the runner."""

    NONFINITE_POTENTIAL = "NONFINITE_POTENTIAL"
    NONPOSITIVE_ITERATE = "NONPOSITIVE_ITERATE"
    INDEFINITE_JACOBIAN = "INDEFINITE_JACOBIAN"
    NO_CONVERGENCE = "NO_CONVERGENCE"
    DEGENERATE_BORDER = "DEGENERATE_BORDER"
    LINE_SEARCH_STALL = "LINE_SEARCH_STALL"
    NONTANGENT_STEP = "NONTANGENT_STEP"
    INVALID_SPEC = "INVALID_SPEC"
    INVALID_GRID = "INVALID_GRID"
    CONFIG_PARSE = "CONFIG_PARSE"


class BecGroundError(Exception):
    """Error carrying an ErrorCode so callers can react to the failure category."""

    def __init__(self, code: ErrorCode, message: str, iteration: int = None) -> object:
        """Creates a BecGroundError object.

        Args:
            code (ErrorCode): Failure category.
            message (str): Human-readable description.
            iteration (int, optional): Outer iteration during which the error happened. Defaults to None.

        Returns:
            object: Created BecGroundError object.
        """
        super().__init__(message)
        self.code = ErrorCode(code)
        self.message = message
        self.iteration = iteration

    def __str__(self) -> str:
        """Defines how the object is represented inside print statements.

        Returns:
            obj (str): Object representation
        """
        location = f" (iteration {self.iteration})" if self.iteration is not None else ""
        return f"{self.code.value}{location}: {self.message}"


class ConfigError(BecGroundError):
    """Error raised when a run configuration cannot be parsed or validated."""

    def __init__(self, message: str, field: str = None, line: int = None, column: int = None) -> object:
        """Creates a ConfigError object.

        Args:
            message (str): Human-readable description.
            field (str, optional): Dotted name of the offending configuration field. Defaults to None.
            line (int, optional): Line reported by the TOML parser. Defaults to None.
            column (int, optional): Column reported by the TOML parser. Defaults to None.

        Returns:
            object: Created ConfigError object.
        """
        if field is not None:
            message = f"'{field}': {message}"
        if line is not None:
            message = f"{message} (line {line}, column {column})"

        super().__init__(ErrorCode.CONFIG_PARSE, message)
        self.field = field
        self.line = line
        self.column = column
