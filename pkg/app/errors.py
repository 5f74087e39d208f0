from typing import Iterable, List, Optional


class ArtinError(Exception):
    """Base class for every error raised by the workbench."""


class NotationError(ArtinError):
    pass


class PresentationError(ArtinError):
    pass


class InfiniteAbelianizationError(ArtinError):
    def __init__(self, message: str = "infinite abelianization"):
        super().__init__(message)


class ScopeError(ArtinError):
    """Input lies outside what the algorithms here are meant to handle."""


class DefectError(ArtinError):
    pass


class CatalogError(ArtinError):
    def __init__(self, message: str, offenders: Optional[Iterable[str]] = None):
        self.offenders: List[str] = list(offenders or [])
        if self.offenders:
            message = f"{message}: {', '.join(self.offenders)}"
        super().__init__(message)


class AmbiguousMatchError(CatalogError):
    def __init__(self, message: str, batch: list):
        self.batch = batch
        super().__init__(message)


class CriterionError(ArtinError):
    def __init__(self, message: str = "criterion inapplicable"):
        super().__init__(message)


class DatasetError(ArtinError):
    def __init__(self, message: str, line_numbers: Optional[Iterable[int]] = None):
        self.line_numbers: List[int] = list(line_numbers or [])
        super().__init__(message)
