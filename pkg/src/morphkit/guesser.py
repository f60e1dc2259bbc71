"""Suffix-analogy guesser for words the lexicon does not know.

Rules pair an ending with the category and feature sets it predicts plus a
recipe for restoring the citation form. Separable verb prefixes are
stripped before matching and re-attached to the guessed lemma; the past
participle circumfix (ge-...-t) is covered by a prefix marked `drop`,
whose strip is never re-attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib.resources import files
from typing import Iterable

from .dictfmt import AnalysisRecord, Paradigm
from .errors import RuleLoadError


@dataclass(frozen=True)
class SuffixRule:
    suffix: str
    min_stem_length: int
    category: str
    feature_sets: tuple[tuple[str, ...], ...]
    strip: int
    append: str

    def lemma_for(self, stem: str) -> str:
        base = stem[: len(stem) - self.strip] if self.strip else stem
        return base + self.append


@dataclass(frozen=True)
class StrippedPrefix:
    text: str
    reattach: bool


class RuleTable:
    """Rules ordered longest suffix first, plus the strippable prefixes."""

    def __init__(self, rules: Iterable[SuffixRule], prefixes: Iterable[StrippedPrefix] = ()):
        self.rules = sorted(rules, key=lambda r: -len(r.suffix))
        self.prefixes = tuple(prefixes)

    def __len__(self) -> int:
        return len(self.rules)

    @property
    def categories(self) -> set[str]:
        return {rule.category for rule in self.rules}

    @property
    def suffixes(self) -> set[str]:
        return {rule.suffix for rule in self.rules}

    def matches(self, word: str) -> bool:
        """Cheap test whether any rule could fire on `word` (bare form only)."""
        return any(
            word.endswith(r.suffix) and len(word) - len(r.suffix) >= r.min_stem_length
            for r in self.rules
        )


def load_rules(source=None) -> RuleTable:
    """Load a rule table from a file path or use the packaged default.

    File format, tab separated, '#' starts a comment:
        suffix  min_stem  category  strip:append  feats,...|feats,...
        @prefix  string  reattach|drop
    """
    if source is None:
        text = files("morphkit").joinpath("data/suffix_rules.tsv").read_text("utf-8")
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()

    rules: list[SuffixRule] = []
    prefixes: list[StrippedPrefix] = []
    seen: set[tuple] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        fields = line.split("\t")
        if fields[0] == "@prefix":
            if len(fields) != 3 or fields[2] not in ("reattach", "drop"):
                raise RuleLoadError(
                    "prefix directive must be '@prefix<TAB>text<TAB>reattach|drop'",
                    line_no,
                )
            prefixes.append(StrippedPrefix(fields[1], fields[2] == "reattach"))
            continue
        if len(fields) != 5:
            raise RuleLoadError(
                "rule must be 'suffix<TAB>min_stem<TAB>category<TAB>strip:append<TAB>featsets'",
                line_no,
            )
        suffix, min_stem_text, category, rewrite, featsets_text = fields
        if not suffix:
            raise RuleLoadError("empty suffix", line_no)
        try:
            min_stem = int(min_stem_text)
        except ValueError as exc:
            raise RuleLoadError(f"bad min_stem {min_stem_text!r}", line_no) from exc
        if min_stem < 2:
            raise RuleLoadError(f"min_stem must be >= 2, got {min_stem}", line_no)
        if ":" not in rewrite:
            raise RuleLoadError("lemma rewrite must be 'strip:append'", line_no)
        strip_text, append = rewrite.split(":", 1)
        try:
            strip = int(strip_text)
        except ValueError as exc:
            raise RuleLoadError(f"bad strip count {strip_text!r}", line_no) from exc
        if strip < 0 or strip >= min_stem:
            raise RuleLoadError(
                f"strip must be within the guaranteed stem (0..{min_stem - 1})", line_no
            )
        feature_sets = []
        for chunk in featsets_text.split("|"):
            feats = tuple(f for f in chunk.split(",") if f)
            if not feats or len(feats) != len(chunk.split(",")):
                raise RuleLoadError(f"malformed feature list {chunk!r}", line_no)
            feature_sets.append(feats)
        key = (suffix, category, tuple(feature_sets))
        if key in seen:
            raise RuleLoadError(
                f"duplicate rule for ({suffix!r}, {category}, {featsets_text})", line_no
            )
        seen.add(key)
        rules.append(
            SuffixRule(suffix, min_stem, category, tuple(feature_sets), strip, append)
        )
    return RuleTable(rules, prefixes)


def guess(word: str, table: RuleTable) -> list[AnalysisRecord]:
    """Analogy guesses for `word`, longest suffix first; [] when none fire.

    The bare word is tried first, then each strippable prefix (at most one
    reattach prefix, optionally followed by the drop prefix), so that forms
    like separable-prefix participles still reach a suffix rule.
    """
    # (form to match, prefix re-attached to the lemma)
    attempts: list[tuple[str, str]] = [(word, "")]
    for prefix in table.prefixes:
        if prefix.reattach and word.startswith(prefix.text) and len(word) > len(prefix.text):
            attempts.append((word[len(prefix.text):], prefix.text))
    for form, lemma_prefix in list(attempts):
        for prefix in table.prefixes:
            if prefix.reattach or not form.startswith(prefix.text):
                continue
            if len(form) > len(prefix.text):
                attempts.append((form[len(prefix.text):], lemma_prefix))

    results: list[AnalysisRecord] = []
    emitted: set[tuple[str, str, tuple[str, ...]]] = set()
    for rule in table.rules:
        for form, lemma_prefix in attempts:
            if not form.endswith(rule.suffix):
                continue
            stem = form[: len(form) - len(rule.suffix)]
            if len(stem) < rule.min_stem_length:
                continue
            lemma = lemma_prefix + rule.lemma_for(stem)
            for feats in rule.feature_sets:
                key = (lemma, rule.category, feats)
                if key in emitted:
                    continue
                emitted.add(key)
                results.append(AnalysisRecord(lemma, Paradigm(rule.category, feats)))
    return results
