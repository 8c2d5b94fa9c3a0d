class DoaMachineError(Exception):
    """
    Documentation:

        ---
        Description:
            Base class for every error raised by doamachine.
    """


class TooFewSensors(DoaMachineError, ValueError):
    pass


class DuplicatePosition(DoaMachineError, ValueError):
    pass


class IncommensurableDistances(DoaMachineError, ValueError):
    """
    Documentation:

        ---
        Description:
            No common rational scale exists for the pair distances within the denominator
            limit. check_identifiability turns this into the IdentifiableByIncommensurability
            verdict rather than letting it escape.
    """


class DomainError(DoaMachineError, ValueError):
    pass


class NotAmbiguous(DoaMachineError, ValueError):
    pass


class SearchSpaceTooLarge(DoaMachineError, ValueError):
    pass


class GridTooLarge(DoaMachineError, ValueError):
    pass


class LengthMismatch(DoaMachineError, ValueError):
    pass


class BudgetExceeded(DoaMachineError, ValueError):
    pass


class ZeroMagnitude(DoaMachineError, ValueError):
    pass


class LayoutFileError(DoaMachineError, ValueError):
    """
    Documentation:

        ---
        Description:
            A layout document could not be parsed or validated.

        ---
        Parameters:
            message : str
                Human readable diagnostic.
            field : str, default=None
                Name of the offending document field, if known.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = "field '{}': {}".format(field, message)
        super().__init__(message)
