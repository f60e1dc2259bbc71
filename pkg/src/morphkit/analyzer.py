"""The word-analysis pipeline and its supporting tag mapping.

Stages run in a fixed order and the first one that produces results ends
the query: token classification, exact lookup, case-variant lookup, fuzzy
lookup through the replacement map, hyphen handling, suffix guessing.
Stopping at the first productive stage keeps correctly spelled lexicon
words free of substitution variants and guesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from importlib.resources import files
from typing import Iterator

from .dafsa import GERMAN_REPLACEMENTS, ReplacementMap
from .dictfmt import AnalysisRecord, CompiledDictionary, Paradigm
from .errors import InvalidInputError, TagMapError
from .guesser import RuleTable, guess, load_rules
from .tokens import TokenClassifier

TRUNC_JOINT = "-(TRUNC)"


class Source(str, Enum):
    LEXICON = "lexicon"
    EXPERIMENTAL = "experimental"
    GUESSER = "guesser"
    TOKEN_CLASS = "token_class"


_SOURCE_RANK = {
    Source.LEXICON: 0,
    Source.EXPERIMENTAL: 1,
    Source.GUESSER: 2,
    Source.TOKEN_CLASS: 3,
}


@dataclass(frozen=True)
class Analysis:
    """One reading of a query word, tagged with where it came from."""

    record: AnalysisRecord
    source: Source
    matched_surface: str

    @property
    def lemma(self) -> str:
        return self.record.lemma

    @property
    def paradigm(self) -> Paradigm:
        return self.record.paradigm

    def tsv_row(self, word: str) -> str:
        return "\t".join(
            (word, self.lemma, self.paradigm.text, self.source.value, self.matched_surface)
        )


STAGES = ("token_class", "exact", "case_variant", "fuzzy", "hyphen", "guesser")


@dataclass
class StageTrace:
    """Which stages a query went through; used by tests and the CLI."""

    attempted: list[str] = field(default_factory=list)
    productive: str | None = None
    dictionary_lookups: int = 0


class TagMap:
    """category -> STTS/PTB tag sets, with optional per-feature refinements.

    A refinement row ("V,ppast") replaces the category's base tags for any
    analysis carrying that feature; analyses without a refined feature fall
    back to the base row.
    """

    def __init__(
        self,
        base: dict[str, tuple[frozenset[str], frozenset[str]]],
        refinements: dict[tuple[str, str], tuple[frozenset[str], frozenset[str]]],
    ):
        self._base = base
        self._refinements = refinements

    @classmethod
    def from_file(cls, path=None) -> "TagMap":
        if path is None:
            text = files("morphkit").joinpath("data/tagmap.tsv").read_text("utf-8")
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        base: dict[str, tuple[frozenset[str], frozenset[str]]] = {}
        refinements: dict[tuple[str, str], tuple[frozenset[str], frozenset[str]]] = {}
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise TagMapError(
                    f"line {line_no}: expected 'category[,feature]<TAB>STTS<TAB>PTB'"
                )
            key, stts_text, ptb_text = fields
            stts = frozenset(t for t in stts_text.split(",") if t)
            ptb = frozenset(t for t in ptb_text.split(",") if t)
            if not stts or not ptb:
                raise TagMapError(f"line {line_no}: empty tag set for {key!r}")
            if "," in key:
                category, feature = key.split(",", 1)
                old = refinements.get((category, feature))
                if old:
                    stts, ptb = old[0] | stts, old[1] | ptb
                refinements[(category, feature)] = (stts, ptb)
            else:
                old = base.get(key)
                if old:
                    stts, ptb = old[0] | stts, old[1] | ptb
                base[key] = (stts, ptb)
        return cls(base, refinements)

    @property
    def categories(self) -> set[str]:
        return set(self._base)

    def validate_categories(self, categories) -> None:
        missing = sorted(set(categories) - set(self._base))
        if missing:
            raise TagMapError(
                "tag mapping has no entry for categories: " + ", ".join(missing)
            )

    def _tags_for(self, record: AnalysisRecord, which: int) -> frozenset[str]:
        category = record.paradigm.category
        refined: list[frozenset[str]] = []
        for feature in record.paradigm.features:
            hit = self._refinements.get((category, feature))
            if hit:
                refined.append(hit[which])
        if refined:
            out: frozenset[str] = frozenset()
            for tags in refined:
                out |= tags
            return out
        try:
            return self._base[category][which]
        except KeyError:
            raise TagMapError(f"no tag mapping for category {category!r}") from None

    def stts_for(self, record: AnalysisRecord) -> frozenset[str]:
        return self._tags_for(record, 0)

    def ptb_for(self, record: AnalysisRecord) -> frozenset[str]:
        return self._tags_for(record, 1)


class Analyzer:
    """Analysis front end over one main (and optionally one experimental)
    compiled dictionary. Read-only and safe for concurrent use."""

    def __init__(
        self,
        dictionary: CompiledDictionary,
        *,
        experimental: CompiledDictionary | None = None,
        tag_map: TagMap | None = None,
        replacements: ReplacementMap = GERMAN_REPLACEMENTS,
        rule_table: RuleTable | None = None,
        classifier: TokenClassifier | None = None,
        enable_tokens: bool = True,
        enable_fuzzy: bool = True,
        enable_guesser: bool = True,
    ):
        self.dictionary = dictionary
        self.experimental = experimental
        self.tag_map = tag_map or TagMap.from_file()
        self.replacements = replacements
        self.rule_table = rule_table if rule_table is not None else load_rules()
        self.classifier = classifier if classifier is not None else (
            TokenClassifier.from_file() if enable_tokens else None
        )
        if not enable_tokens:
            self.classifier = None
        self.enable_fuzzy = enable_fuzzy
        self.enable_guesser = enable_guesser
        self._validate_tag_coverage()

    def _validate_tag_coverage(self) -> None:
        categories = {p.category for p in self.dictionary.paradigms.entries}
        if self.experimental:
            categories |= {p.category for p in self.experimental.paradigms.entries}
        if self.enable_guesser:
            categories |= self.rule_table.categories
        if self.classifier:
            categories |= {kind for kind, _ in self.classifier._patterns}
        self.tag_map.validate_categories(categories)

    # -- pipeline ----------------------------------------------------------

    def analyze(self, word: str) -> list[Analysis]:
        """All readings of `word`; see the module docstring for the stages."""
        return self._run(word, None)

    def analyze_traced(self, word: str) -> tuple[list[Analysis], StageTrace]:
        trace = StageTrace()
        return self._run(word, trace), trace

    def _run(self, word: str, trace: StageTrace | None) -> list[Analysis]:
        if word is None or not word.strip():
            raise InvalidInputError("empty query word")
        word = word.strip()
        if any(ch.isspace() for ch in word):
            raise InvalidInputError(f"query word {word!r} contains whitespace")

        if self.classifier is not None:
            if trace is not None:
                trace.attempted.append("token_class")
            token = self.classifier.classify(word)
            if token is not None:
                if trace is not None:
                    trace.productive = "token_class"
                lemma = token.canonical if token.canonical is not None else word
                record = AnalysisRecord(lemma, Paradigm(token.kind))
                return [Analysis(record, Source.TOKEN_CLASS, word)]

        if trace is not None:
            trace.attempted.append("exact")
        results = self._lookup_both(word, trace)
        if results:
            if trace is not None:
                trace.productive = "exact"
            return self._finalize(results)

        if trace is not None:
            trace.attempted.append("case_variant")
        results = self._case_variant_stage(word, trace)
        if results:
            if trace is not None:
                trace.productive = "case_variant"
            return self._finalize(results)

        if self.enable_fuzzy:
            if trace is not None:
                trace.attempted.append("fuzzy")
            results = self._fuzzy_stage(word, trace)
            if results:
                if trace is not None:
                    trace.productive = "fuzzy"
                return self._finalize(results)

        if "-" in word:
            if trace is not None:
                trace.attempted.append("hyphen")
            results = self._hyphen_stage(word, trace)
            if results:
                if trace is not None:
                    trace.productive = "hyphen"
                return self._finalize(results)

        if self.enable_guesser:
            if trace is not None:
                trace.attempted.append("guesser")
            results = [
                Analysis(record, Source.GUESSER, word)
                for record in guess(word, self.rule_table)
            ]
            if results:
                if trace is not None:
                    trace.productive = "guesser"
                return self._finalize(results)

        return []

    def _lookup_both(self, surface: str, trace: StageTrace | None) -> list[Analysis]:
        if trace is not None:
            trace.dictionary_lookups += 1
        out = [
            Analysis(record, Source.LEXICON, surface)
            for record in self.dictionary.lookup(surface)
        ]
        if self.experimental is not None:
            if trace is not None:
                trace.dictionary_lookups += 1
            out.extend(
                Analysis(record, Source.EXPERIMENTAL, surface)
                for record in self.experimental.lookup(surface)
            )
        return out

    def _case_variants(self, word: str) -> list[str]:
        variants = []
        toggled = word[0].swapcase() + word[1:]
        if toggled != word:
            variants.append(toggled)
        lowered = word.lower()
        if lowered != word and lowered != toggled:
            variants.append(lowered)
        return variants

    def _case_variant_stage(self, word: str, trace: StageTrace | None) -> list[Analysis]:
        for variant in self._case_variants(word):
            results = self._lookup_both(variant, trace)
            if results:
                return results
        return []

    def _fuzzy_stage(self, word: str, trace: StageTrace | None) -> list[Analysis]:
        if trace is not None:
            trace.dictionary_lookups += 1
        out = [
            Analysis(record, Source.LEXICON, matched)
            for matched, record in self.dictionary.fuzzy_lookup(word, self.replacements)
        ]
        if self.experimental is not None:
            if trace is not None:
                trace.dictionary_lookups += 1
            out.extend(
                Analysis(record, Source.EXPERIMENTAL, matched)
                for matched, record in self.experimental.fuzzy_lookup(
                    word, self.replacements
                )
            )
        return out

    def _hyphen_stage(self, word: str, trace: StageTrace | None) -> list[Analysis]:
        segments = word.split("-")
        if len(segments) < 2 or any(not seg for seg in segments):
            return []
        final = segments[-1]
        sub = self._lookup_both(final, trace)
        if not sub:
            sub = self._case_variant_stage(final, trace)
        if not sub and self.enable_fuzzy:
            sub = self._fuzzy_stage(final, trace)
        head = segments[:-1]
        return [
            Analysis(
                AnalysisRecord(
                    TRUNC_JOINT.join(head + [analysis.record.lemma]),
                    analysis.record.paradigm,
                ),
                analysis.source,
                analysis.matched_surface,
            )
            for analysis in sub
        ]

    @staticmethod
    def _finalize(results: list[Analysis]) -> list[Analysis]:
        unique = {}
        for analysis in results:
            key = (
                analysis.source.value,
                analysis.lemma,
                analysis.paradigm.text,
                analysis.matched_surface,
            )
            unique.setdefault(key, analysis)
        return sorted(
            unique.values(),
            key=lambda a: (
                _SOURCE_RANK[a.source],
                a.lemma,
                a.paradigm.text,
                a.matched_surface,
            ),
        )

    # -- derived queries -----------------------------------------------------

    def lemmatize(self, word: str) -> list[str]:
        """Sorted distinct lemmas of analyze(word)."""
        return sorted({analysis.lemma for analysis in self.analyze(word)})

    def tags_stts(self, word: str) -> set[str]:
        out: set[str] = set()
        for analysis in self.analyze(word):
            out |= self.tag_map.stts_for(analysis.record)
        return out

    def tags_ptb(self, word: str) -> set[str]:
        out: set[str] = set()
        for analysis in self.analyze(word):
            out |= self.tag_map.ptb_for(analysis.record)
        return out

    def iter_lexicon(self) -> Iterator[str]:
        """Every distinct surface of the main dictionary, ascending."""
        return self.dictionary.surfaces()
