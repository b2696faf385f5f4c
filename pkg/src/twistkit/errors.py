"""Exception types raised by constructions and checkers."""


class WorkbenchError(Exception):
    """Base class for every error raised by twistkit."""


class DimensionMismatch(WorkbenchError, ValueError):
    pass


class MissingComponent(WorkbenchError):
    pass


class MissingPoint(MissingComponent):
    pass


class EmptySet(WorkbenchError, ValueError):
    pass


class NotIdempotent(WorkbenchError):
    pass


class NotPositive(WorkbenchError):
    pass


class NotCyclic(WorkbenchError):
    pass


class NotBooleanPointed(WorkbenchError):
    pass


class NotComplemented(WorkbenchError):
    pass


class NonUniqueComplement(WorkbenchError):
    pass


class BoundExceeded(WorkbenchError):
    pass


class GenerationExhausted(WorkbenchError):
    pass


class ParseError(WorkbenchError):
    def __init__(self, message, field=None, line=None):
        where = []
        if field is not None:
            where.append(f"field {field!r}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.field = field
        self.line = line


class _ReportError(WorkbenchError):
    """An error carrying the failing CheckReport that caused it."""

    def __init__(self, report):
        super().__init__(report.line())
        self.report = report


class AxiomFailure(_ReportError):
    pass


class ValidationError(_ReportError):
    pass
