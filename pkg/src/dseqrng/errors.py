"""Exception hierarchy shared by every module."""


class DSeqError(ValueError):
    """Base class for all validation errors raised by dseqrng."""


class InvalidModulusError(DSeqError):
    pass


class InvalidPrimeError(DSeqError):
    pass


class NotCoprimeError(DSeqError):
    def __init__(self, value, modulus, msg=None):
        self.value = value
        self.modulus = modulus
        super().__init__(msg or f"{value} is not coprime to {modulus}")


class EmptyInputError(DSeqError):
    pass


class NotMaximumLengthError(DSeqError):
    pass


class InvalidArgumentsError(DSeqError):
    pass
