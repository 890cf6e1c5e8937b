"""Shared exception types, mapped onto CLI exit codes."""


class InputError(Exception):
    """Malformed or inconsistent input (graph files, covers, parameters)."""


class SizeCapError(Exception):
    """Instance exceeds the size cap of an exact solver."""


class VerificationError(Exception):
    """A cover, certificate, or invariant failed verification."""


class ConstructionError(InputError):
    """A constructive generator was invoked outside its premises."""
