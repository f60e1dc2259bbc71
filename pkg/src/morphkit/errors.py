"""Exception types shared across the package.

The CLI maps these onto exit codes, so new error conditions should reuse or
subclass something here rather than raising bare ValueError.
"""

from __future__ import annotations


class MorphkitError(Exception):
    """Base class for all errors raised by this package."""


class BadMagicError(MorphkitError):
    """Binary input does not start with the expected magic bytes."""


class UnsupportedVersionError(MorphkitError):
    """Binary input declares a format version this build cannot read."""


class TruncatedDataError(MorphkitError):
    """Binary input is shorter (or longer) than its own header declares."""


class ChecksumMismatchError(MorphkitError):
    """Binary input fails its CRC32 check."""


class DafsaBuildError(MorphkitError):
    """Keys fed to the automaton builder were unsorted or duplicated."""

    def __init__(self, message: str, key_index: int):
        super().__init__(message)
        self.key_index = key_index


class CandidateExplosionError(MorphkitError):
    """Strict fuzzy expansion exceeded the occurrence bound."""

    def __init__(self, bound: int, occurrences: int):
        super().__init__(
            f"multi-rule expansion would exceed the bound: "
            f"{occurrences} occurrences > {bound} allowed"
        )
        self.bound = bound
        self.occurrences = occurrences


class DictionaryParseError(MorphkitError):
    """Malformed text-dictionary input."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CapacityError(MorphkitError):
    """Lemma or paradigm table outgrew its fixed-width id space."""


class DataCorruptionError(MorphkitError):
    """A compiled dictionary contains an undecodable payload."""


class RuleLoadError(MorphkitError):
    """Malformed guesser rule file."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TagMapError(MorphkitError):
    """Tag mapping is missing a category required by the loaded dictionary."""


class InvalidInputError(MorphkitError, ValueError):
    """A query word is empty or contains whitespace."""
