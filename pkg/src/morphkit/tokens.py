"""Pre-lookup classification of non-lexicon tokens (emails, URLs, dates...).

Patterns live in a data file, one `KIND <TAB> regex` line per class, file
order = priority. Every pattern is anchored with fullmatch, so a class can
never be assigned because of a substring hit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib.resources import files
from typing import Iterable

from .errors import MorphkitError

#: Kinds the default pattern set assigns, in priority order.
DEFAULT_KINDS = ("URL", "EMAIL", "DATE", "ORDINAL", "NUMBER")


@dataclass(frozen=True)
class TokenClass:
    kind: str
    canonical: str | None = None


class PatternError(MorphkitError):
    """Malformed token-pattern file."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _canonical_date(token: str) -> str:
    day, month, year = token.split(".")
    if len(year) == 2:
        year = ("20" if int(year) < 50 else "19") + year
    return f"{year}-{int(month):02d}-{int(day):02d}"


_CANONICALIZERS = {
    "EMAIL": str.lower,
    "DATE": _canonical_date,
    "NUMBER": lambda t: t.replace(",", "."),
    "ORDINAL": lambda t: t.rstrip("."),
}


class TokenClassifier:
    """Ordered whole-token matcher over the loaded pattern list."""

    def __init__(self, patterns: Iterable[tuple[str, str]]):
        self._patterns = [(kind, re.compile(regex)) for kind, regex in patterns]

    @classmethod
    def from_file(cls, path=None) -> "TokenClassifier":
        if path is None:
            path = files("morphkit").joinpath("data/token_patterns.tsv")
            text = path.read_text(encoding="utf-8")
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        patterns = []
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise PatternError("expected 'KIND<TAB>pattern'", line_no)
            kind, regex = fields
            try:
                re.compile(regex)
            except re.error as exc:
                raise PatternError(f"bad pattern for {kind}: {exc}", line_no) from exc
            patterns.append((kind, regex))
        return cls(patterns)

    def classify(self, token: str) -> TokenClass | None:
        """First matching class in priority order; None for ordinary words."""
        for kind, pattern in self._patterns:
            if pattern.fullmatch(token):
                normalize = _CANONICALIZERS.get(kind)
                return TokenClass(kind, normalize(token) if normalize else None)
        return None
