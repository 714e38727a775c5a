"""Exception types shared across the workbench."""


class ConfigError(ValueError):
    """A parameter or configuration value is outside its valid range."""


class ParseError(ValueError):
    """A text document (program, instance file, config file) is malformed.

    line is 1-based when known, otherwise None.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EvaluationError(RuntimeError):
    """A fitness evaluation failed; carries the program that caused it."""

    def __init__(self, message: str, program=None):
        super().__init__(message)
        self.program = program
