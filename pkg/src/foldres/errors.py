"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when an operation is called outside its defined domain.

    Distinct from usage errors (bad CLI flags) so the command line can map
    the two to different exit codes.
    """
