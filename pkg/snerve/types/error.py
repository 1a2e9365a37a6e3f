class SnerveError(Exception):
    """Base exception class for errors raised by snerve."""


class CapError(SnerveError):
    """Exception raised when dimension caps disagree or are too small for a request."""


class SimplicialIdentityError(SnerveError):
    """Exception raised when a constructed object fails the simplicial identities."""


class FunctorialityError(SnerveError):
    """Exception raised when a functor or diagram does not strictly preserve identities and composites."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotQuasicategoryError(SnerveError):
    """Exception raised when inner horns up to dimension 2 do not fill."""


class NotLocallyKanError(SnerveError):
    """Exception raised when some hom complex fails a horn filler check."""


class ProvenanceError(SnerveError):
    """Exception raised when a Grothendieck construction has no originating diagram."""


class BaseCategoryError(SnerveError):
    """Exception raised for a non-discrete base or an arrow missing from the base."""


class MalformedSimplexError(SnerveError):
    """Exception raised when a relative nerve simplex violates its compatibility equations."""


class LevelError(SnerveError):
    """Exception raised when a sequence level does not match a monotone map."""


class SchemaError(SnerveError):
    """Exception raised for malformed documents and unknown fixture names."""
