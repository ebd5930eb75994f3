"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """Input violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """Operation refused because it would exceed a configured resource cap."""


class NoCertificateError(InvalidArgumentError):
    """Majorization fails, so no mixing certificate exists.

    Carries the first prefix index at which the majorization inequality
    is violated.
    """

    def __init__(self, prefix_index: int):
        self.prefix_index = prefix_index
        super().__init__(
            f"majorization fails at prefix {prefix_index}; no certificate exists"
        )


class NoProtocolError(InvalidArgumentError):
    """Requested transformation is infeasible, so no protocol can be built."""


class UnsupportedFormError(InvalidArgumentError):
    """Operator falls outside the restricted form this package supports."""
