class CuphCoverError(Exception):
    """Base class; `exit_code` is what the CLI returns for it."""

    exit_code = 1


class PreconditionError(CuphCoverError, ValueError):
    """An operation was called outside its precondition."""


class LimitExceededError(CuphCoverError):
    def __init__(self, limit_name: str, limit: int, actual: int):
        self.limit_name = limit_name
        self.limit = limit
        self.actual = actual
        super().__init__(f"{limit_name}={limit} exceeded (instance has {actual})")


class MalformedFileError(CuphCoverError, ValueError):
    def __init__(self, path: str, line: int, detail: str):
        self.path = path
        self.line = line
        self.detail = detail
        super().__init__(f"{path}:{line}: {detail}")


class ValidationFailure(CuphCoverError):
    """A cover or a computed bound failed its check."""

    exit_code = 2
