"""Gedeelde exceptions voor de TSSNet toolkit.

Module-specifieke fouten (checkpoint, layers, data loading) staan in de
module die ze raised; ze erven allemaal van TSSNetError.
"""


class TSSNetError(Exception):
    """Basis exception voor alle fouten uit de toolkit."""

    pass


class ShapeMismatchError(TSSNetError):
    """Exception wanneer vormen van tensors niet op elkaar aansluiten."""

    def __init__(self, message: str, expected=None, actual=None):
        self.expected = expected
        self.actual = actual
        if expected is not None or actual is not None:
            message = f"{message} (verwacht {expected}, kreeg {actual})"
        super().__init__(message)


class InvalidShapeError(TSSNetError):
    """Exception voor een vorm met nul of negatieve dimensies."""

    def __init__(self, shape):
        self.shape = tuple(shape)
        super().__init__(f"Ongeldige vorm {self.shape}: alle dimensies moeten >= 1 zijn.")


class OutOfBoundsError(TSSNetError):
    """Exception voor een lege of buiten de tensor vallende regio."""

    pass


class InvalidConfigError(TSSNetError):
    """Exception voor ongeldige configuratie of hyperparameters."""

    pass


class EmptyInputError(TSSNetError):
    """Exception wanneer een dataset of batch geen samples bevat."""

    pass


class TooShortError(TSSNetError):
    """Exception wanneer een tijdreeks te kort is voor de gevraagde operatie."""

    def __init__(self, message: str, length: int | None = None, required: int | None = None):
        self.length = length
        self.required = required
        if length is not None and required is not None:
            message = f"{message} (lengte {length}, minimaal {required})"
        super().__init__(message)


class DegenerateSampleError(TSSNetError):
    """Exception voor een constante reeks of sample waarop een correlatie niet bestaat."""

    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(message)
