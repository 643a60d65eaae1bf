"""Exceptions shared across the package."""


class KoszulForgeError(Exception):
    """Base class for package errors."""


class InputError(KoszulForgeError, ValueError):
    """Malformed user input: bad graph spec, width mismatch, invalid flag."""


class ResourceCapError(KoszulForgeError, RuntimeError):
    """An explicit resource budget was exceeded (S-pairs, markings, sizes).

    This is a hard failure, never a silent truncation; the CLI maps it to
    exit code 2.
    """
