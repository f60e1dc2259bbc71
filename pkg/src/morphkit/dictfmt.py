"""Plain-text morphological dictionary parsing and binary compilation.

The text format is line oriented: an entry is a headword on its own line
followed by one analysis line per reading ("lemma CATEGORY,feat,..."),
entries separated by blank lines. Compilation interns lemmas and paradigms
into id tables and stores one automaton key per (surface, lemma, paradigm)
triple: the UTF-8 surface, a separator byte that cannot occur in UTF-8
text, then the two ids in fixed-width big-endian form so that enumeration
order equals (lemma_id, paradigm_id) order.
"""

from __future__ import annotations

import struct
import warnings
import zlib
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .dafsa import Automaton, ReplacementMap, build_from_sorted
from .errors import (
    BadMagicError,
    CapacityError,
    ChecksumMismatchError,
    DataCorruptionError,
    DictionaryParseError,
    TruncatedDataError,
    UnsupportedVersionError,
)

MAGIC = b"DEMD"
FORMAT_VERSION = 1

SEPARATOR = 0x1C  # ASCII file separator; illegal inside UTF-8 text
_SEP_BYTES = bytes([SEPARATOR])
_PAYLOAD_LEN = 6  # 4-byte lemma id + 2-byte paradigm id, big-endian

MAX_LEMMAS = 2**32 - 1
MAX_PARADIGMS = 2**16 - 1

_FILE_HEAD = struct.Struct("<4sH")
_STATS = struct.Struct("<QQQQ")
_U16 = struct.Struct("<H")
_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")
_CRC = struct.Struct("<I")


class DictionaryWarning(UserWarning):
    """Recoverable oddity in dictionary input (lenient mode, duplicates)."""


@dataclass(frozen=True)
class Paradigm:
    """Grammatical category plus the ordered inflection features."""

    category: str
    features: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "Paradigm":
        parts = text.split(",")
        return cls(parts[0], tuple(parts[1:]))

    @property
    def text(self) -> str:
        return ",".join((self.category,) + self.features)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class AnalysisRecord:
    """One (lemma, paradigm) reading of a surface form."""

    lemma: str
    paradigm: Paradigm


@dataclass
class DictEntry:
    surface: str
    analyses: list[AnalysisRecord]


@dataclass(frozen=True)
class DictionaryStats:
    entry_count: int
    surface_count: int
    lemma_count: int
    paradigm_count: int


class LemmaTable:
    """Dense 0-based interning table for lemma strings."""

    __slots__ = ("entries", "index")

    def __init__(self, entries: Iterable[str] = ()):
        self.entries: list[str] = list(entries)
        self.index: dict[str, int] = {s: i for i, s in enumerate(self.entries)}

    def intern(self, lemma: str) -> int:
        existing = self.index.get(lemma)
        if existing is not None:
            return existing
        if len(self.entries) >= MAX_LEMMAS:
            raise CapacityError(f"more than {MAX_LEMMAS} distinct lemmas")
        ident = len(self.entries)
        self.entries.append(lemma)
        self.index[lemma] = ident
        return ident

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, ident: int) -> str:
        return self.entries[ident]


class ParadigmTable:
    """Dense 0-based interning table for paradigms, keyed by their text."""

    __slots__ = ("entries", "index")

    def __init__(self, entries: Iterable[Paradigm] = ()):
        self.entries: list[Paradigm] = list(entries)
        self.index: dict[str, int] = {p.text: i for i, p in enumerate(self.entries)}

    def intern(self, paradigm: Paradigm) -> int:
        existing = self.index.get(paradigm.text)
        if existing is not None:
            return existing
        if len(self.entries) >= MAX_PARADIGMS:
            raise CapacityError(f"more than {MAX_PARADIGMS} distinct paradigms")
        ident = len(self.entries)
        self.entries.append(paradigm)
        self.index[paradigm.text] = ident
        return ident

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, ident: int) -> Paradigm:
        return self.entries[ident]


# -- text format -----------------------------------------------------------


def parse_text_dictionary(
    stream: TextIO | Iterable[str], *, strict: bool = True
) -> list[DictEntry]:
    """Parse the plain-text dictionary format into entries.

    In strict mode malformed blocks raise DictionaryParseError with the
    offending line number; in lenient mode the whole block is skipped with
    a DictionaryWarning.
    """
    entries: list[DictEntry] = []
    surface: str | None = None
    analyses: list[AnalysisRecord] = []
    seen: set[tuple[str, str]] = set()
    surface_line = 0
    skipping = False

    def fail(message: str, line_no: int) -> None:
        nonlocal skipping, surface
        if strict:
            raise DictionaryParseError(message, line_no)
        warnings.warn(
            f"line {line_no}: {message}; skipping block",
            DictionaryWarning,
            stacklevel=3,
        )
        surface = None
        analyses.clear()
        skipping = True

    def flush() -> None:
        nonlocal surface, skipping
        if surface is not None:
            if analyses:
                entries.append(DictEntry(surface, list(analyses)))
            else:
                fail("entry has no analysis lines", surface_line)
        surface = None
        analyses.clear()
        seen.clear()
        skipping = False

    line_no = 0
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            flush()
            continue
        if skipping:
            continue
        if surface is None:
            if any(ch.isspace() for ch in line):
                fail("analysis line before any headword", line_no)
                continue
            if chr(SEPARATOR) in line:
                fail("surface contains reserved separator byte 0x1C", line_no)
                continue
            surface = line
            surface_line = line_no
            continue
        fields = line.split()
        if len(fields) == 1:
            fail("analysis line without a paradigm field", line_no)
            continue
        if len(fields) != 2:
            fail("analysis line must be 'lemma paradigm'", line_no)
            continue
        lemma, paradigm_text = fields
        paradigm = Paradigm.parse(paradigm_text)
        if not paradigm.category:
            fail("paradigm has an empty category", line_no)
            continue
        key = (lemma, paradigm.text)
        if key in seen:
            warnings.warn(
                f"line {line_no}: duplicate analysis "
                f"'{lemma} {paradigm.text}' for '{surface}' dropped",
                DictionaryWarning,
                stacklevel=2,
            )
            continue
        seen.add(key)
        analyses.append(AnalysisRecord(lemma, paradigm))
    flush()
    return entries


def render_text_dictionary(entries: Iterable[DictEntry]) -> str:
    """Inverse of parse_text_dictionary (up to whitespace normalization)."""
    blocks = []
    for entry in entries:
        lines = [entry.surface]
        lines.extend(f"{a.lemma} {a.paradigm.text}" for a in entry.analyses)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


# -- integer encoding --------------------------------------------------------


def encode_entries(
    entries: Iterable[DictEntry],
) -> tuple[LemmaTable, ParadigmTable, list[bytes]]:
    """Intern lemmas/paradigms and derive the sorted automaton key set."""
    lemmas = LemmaTable()
    paradigms = ParadigmTable()
    keys: set[bytes] = set()
    for entry in entries:
        surface_bytes = entry.surface.encode("utf-8")
        if SEPARATOR in surface_bytes:
            raise DictionaryParseError(
                f"surface {entry.surface!r} contains reserved separator byte", 0
            )
        for record in entry.analyses:
            lemma_id = lemmas.intern(record.lemma)
            paradigm_id = paradigms.intern(record.paradigm)
            keys.add(
                surface_bytes
                + _SEP_BYTES
                + lemma_id.to_bytes(4, "big")
                + paradigm_id.to_bytes(2, "big")
            )
    return lemmas, paradigms, sorted(keys)


def decode_key(
    key: bytes, lemmas: LemmaTable, paradigms: ParadigmTable
) -> tuple[str, AnalysisRecord]:
    """Split an automaton key back into (surface, analysis)."""
    sep = key.find(SEPARATOR)
    if sep < 0 or len(key) != sep + 1 + _PAYLOAD_LEN:
        raise DataCorruptionError(f"malformed key payload in {key!r}")
    surface = key[:sep].decode("utf-8")
    return surface, _decode_payload(key, sep + 1, lemmas, paradigms)


def _decode_payload(
    key: bytes, offset: int, lemmas: LemmaTable, paradigms: ParadigmTable
) -> AnalysisRecord:
    if len(key) != offset + _PAYLOAD_LEN:
        raise DataCorruptionError(
            f"payload of {key!r} has {len(key) - offset} bytes, expected {_PAYLOAD_LEN}"
        )
    lemma_id = int.from_bytes(key[offset : offset + 4], "big")
    paradigm_id = int.from_bytes(key[offset + 4 : offset + 6], "big")
    if lemma_id >= len(lemmas) or paradigm_id >= len(paradigms):
        raise DataCorruptionError(
            f"payload ids ({lemma_id}, {paradigm_id}) out of table bounds"
        )
    return AnalysisRecord(lemmas[lemma_id], paradigms[paradigm_id])


# -- compiled dictionary ------------------------------------------------------


class CompiledDictionary:
    """Immutable compiled dictionary: automaton plus id tables."""

    def __init__(
        self,
        automaton: Automaton,
        lemmas: LemmaTable,
        paradigms: ParadigmTable,
        stats: DictionaryStats,
    ):
        self.automaton = automaton
        self.lemmas = lemmas
        self.paradigms = paradigms
        self.stats = stats

    # Queries ---------------------------------------------------------------

    def lookup(self, surface: str) -> list[AnalysisRecord]:
        """All analyses of `surface`, ascending (lemma_id, paradigm_id)."""
        prefix = surface.encode("utf-8") + _SEP_BYTES
        state = self.automaton._walk(prefix)
        if state is None:
            return []
        offset = len(prefix)
        return [
            _decode_payload(key, offset, self.lemmas, self.paradigms)
            for key in self.automaton._collect(state, prefix)
        ]

    def fuzzy_lookup(
        self, surface: str, replacements: ReplacementMap, **kwargs
    ) -> list[tuple[str, AnalysisRecord]]:
        """(matched_surface, analysis) pairs reachable from `surface` via
        the replacement map, ordered by matched key bytes."""
        pairs, _ = self.automaton.fuzzy_completions(
            surface + chr(SEPARATOR), replacements, **kwargs
        )
        out = []
        for matched_prefix, key in pairs:
            record = _decode_payload(key, len(matched_prefix), self.lemmas, self.paradigms)
            out.append((matched_prefix[:-1].decode("utf-8"), record))
        return out

    def surfaces(self) -> Iterator[str]:
        """Every distinct surface form exactly once, ascending byte order."""
        previous: bytes | None = None
        for key in self.automaton.completions(b""):
            sep = key.find(SEPARATOR)
            if sep < 0:
                raise DataCorruptionError(f"key without separator: {key!r}")
            surface = key[:sep]
            if surface != previous:
                previous = surface
                yield surface.decode("utf-8")

    def records(self) -> Iterator[tuple[str, AnalysisRecord]]:
        """Every (surface, analysis) pair in key order."""
        for key in self.automaton.completions(b""):
            yield decode_key(key, self.lemmas, self.paradigms)

    def recompute_stats(self) -> DictionaryStats:
        entry_count = 0
        surface_count = 0
        previous = None
        for key in self.automaton.completions(b""):
            entry_count += 1
            surface = key[: key.find(SEPARATOR)]
            if surface != previous:
                surface_count += 1
                previous = surface
        return DictionaryStats(
            entry_count, surface_count, len(self.lemmas), len(self.paradigms)
        )

    # Serialization ----------------------------------------------------------

    def to_bytes(self) -> bytes:
        parts = [
            _FILE_HEAD.pack(MAGIC, FORMAT_VERSION),
            _STATS.pack(
                self.stats.entry_count,
                self.stats.surface_count,
                self.stats.lemma_count,
                self.stats.paradigm_count,
            ),
            _U32.pack(len(self.lemmas)),
        ]
        for lemma in self.lemmas.entries:
            data = lemma.encode("utf-8")
            parts.append(_U16.pack(len(data)))
            parts.append(data)
        parts.append(_U16.pack(len(self.paradigms)))
        for paradigm in self.paradigms.entries:
            data = paradigm.text.encode("utf-8")
            parts.append(_U16.pack(len(data)))
            parts.append(data)
        blob = self.automaton.serialize()
        parts.append(_U64.pack(len(blob)))
        parts.append(blob)
        body = b"".join(parts)
        return body + _CRC.pack(zlib.crc32(body))

    @classmethod
    def from_bytes(cls, data: bytes) -> "CompiledDictionary":
        if len(data) < 4 or data[:4] != MAGIC:
            raise BadMagicError("not a compiled dictionary (bad magic)")
        if len(data) < _FILE_HEAD.size:
            raise TruncatedDataError("dictionary file shorter than its header")
        _, version = _FILE_HEAD.unpack_from(data)
        if version != FORMAT_VERSION:
            raise UnsupportedVersionError(f"unsupported dictionary version {version}")
        offset = _FILE_HEAD.size
        try:
            stats_values = _STATS.unpack_from(data, offset)
            offset += _STATS.size
            (lemma_count,) = _U32.unpack_from(data, offset)
            offset += _U32.size
            lemma_entries = []
            for _ in range(lemma_count):
                (length,) = _U16.unpack_from(data, offset)
                offset += _U16.size
                if offset + length > len(data):
                    raise TruncatedDataError("lemma table ends mid-string")
                lemma_entries.append(data[offset : offset + length].decode("utf-8"))
                offset += length
            (paradigm_count,) = _U16.unpack_from(data, offset)
            offset += _U16.size
            paradigm_entries = []
            for _ in range(paradigm_count):
                (length,) = _U16.unpack_from(data, offset)
                offset += _U16.size
                if offset + length > len(data):
                    raise TruncatedDataError("paradigm table ends mid-string")
                paradigm_entries.append(
                    Paradigm.parse(data[offset : offset + length].decode("utf-8"))
                )
                offset += length
            (blob_len,) = _U64.unpack_from(data, offset)
            offset += _U64.size
            if offset + blob_len > len(data):
                raise TruncatedDataError("automaton blob ends early")
            blob = data[offset : offset + blob_len]
            offset += blob_len
        except struct.error as exc:
            raise TruncatedDataError("dictionary file ends mid-section") from exc
        if len(data) != offset + _CRC.size:
            raise TruncatedDataError(
                f"dictionary file length {len(data)} != expected {offset + _CRC.size}"
            )
        (stored_crc,) = _CRC.unpack_from(data, offset)
        if zlib.crc32(data[:offset]) != stored_crc:
            raise ChecksumMismatchError("dictionary file failed CRC32 check")
        automaton = Automaton.deserialize(blob)
        return cls(
            automaton,
            LemmaTable(lemma_entries),
            ParadigmTable(paradigm_entries),
            DictionaryStats(*stats_values),
        )


def compile_entries(entries: Iterable[DictEntry]) -> CompiledDictionary:
    """Compile parsed entries into an immutable binary-ready dictionary."""
    entries = list(entries)
    lemmas, paradigms, keys = encode_entries(entries)
    automaton = build_from_sorted(keys)
    surfaces = {entry.surface for entry in entries if entry.analyses}
    stats = DictionaryStats(len(keys), len(surfaces), len(lemmas), len(paradigms))
    return CompiledDictionary(automaton, lemmas, paradigms, stats)


def save_dictionary(dictionary: CompiledDictionary, path) -> None:
    with open(path, "wb") as fh:
        fh.write(dictionary.to_bytes())


def load_dictionary(path) -> CompiledDictionary:
    with open(path, "rb") as fh:
        return CompiledDictionary.from_bytes(fh.read())
