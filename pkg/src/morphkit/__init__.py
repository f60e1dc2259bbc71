"""German morphological analysis over a compact minimal-DAFSA dictionary."""

from .analyzer import Analysis, Analyzer, Source, TagMap
from .cache import AnalysisCache, CacheConfig, CacheStats
from .dafsa import Automaton, DafsaBuilder, GERMAN_REPLACEMENTS, ReplacementMap, build_from_sorted
from .dictfmt import (
    AnalysisRecord,
    CompiledDictionary,
    DictEntry,
    DictionaryStats,
    Paradigm,
    compile_entries,
    load_dictionary,
    parse_text_dictionary,
    save_dictionary,
)
from .guesser import RuleTable, SuffixRule, load_rules
from .tokens import TokenClass, TokenClassifier

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "AnalysisCache",
    "AnalysisRecord",
    "Analyzer",
    "Automaton",
    "CacheConfig",
    "CacheStats",
    "CompiledDictionary",
    "DafsaBuilder",
    "DictEntry",
    "DictionaryStats",
    "GERMAN_REPLACEMENTS",
    "Paradigm",
    "ReplacementMap",
    "RuleTable",
    "Source",
    "SuffixRule",
    "TagMap",
    "TokenClass",
    "TokenClassifier",
    "build_from_sorted",
    "compile_entries",
    "load_dictionary",
    "load_rules",
    "parse_text_dictionary",
    "save_dictionary",
]
