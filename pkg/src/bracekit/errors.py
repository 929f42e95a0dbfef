"""Exception types.

InputError covers malformed or inconsistent user input (bad shapes, degree
mismatches, unknown names).  ResourceLimitError covers enumeration caps:
the request was well formed but factorially too large for the configured
limits.  WorkspaceError is an InputError raised while reading a workspace
file, carrying enough context to name the offending entry.
"""


class BracekitError(Exception):
    pass


class InputError(BracekitError, ValueError):
    pass


class ResourceLimitError(BracekitError, RuntimeError):
    pass


class WorkspaceError(InputError):
    pass
