class OMError(Exception):
    pass


class ValidationError(OMError):
    """Raised when circuit data violates the oriented matroid axioms."""

    def __init__(self, detail, report=None):
        if report is None and hasattr(detail, "summary"):
            detail, report = detail.summary(), detail
        super().__init__(detail)
        self.report = report


class ResourceLimit(OMError):
    """A configured size, count or time limit was hit."""


class CoLoopDeletion(OMError):
    pass


class LoopContraction(OMError):
    pass


class NotCorank2(OMError):
    pass
