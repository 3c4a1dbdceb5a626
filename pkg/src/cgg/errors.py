class CggError(ValueError):
    """Invalid parameters or labels."""


class InfeasibleBlockError(CggError):
    """Requested block has the wrong far-arc parity for its direction."""


class ConstructionIntegrityError(RuntimeError):
    """Two clauses of a construction disagree on the same direction.

    Never raised for valid inputs; seeing it means the construction code is wrong.
    """


class ParseError(CggError):
    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class UnsupportedVersionError(ParseError):
    pass
