"""Minimal deterministic acyclic finite-state automaton over byte strings.

The automaton is built incrementally from keys arriving in strictly
ascending byte order (Daciuk-style construction: a register of states keyed
by their right language keeps the machine minimal while only the path of
the most recent key is held unminimized). A frozen automaton is immutable
and safe for concurrent readers.

Substitution-tolerant traversal works on UTF-8 characters, not bytes: at
each character of the query the walker follows both the literal character
and every alternative the replacement map offers, matching multi-byte
characters edge by edge. Multi-character rewrite rules (ue -> ü, ß -> ss)
are applied before traversal by expanding the query into a bounded set of
candidates.
"""

from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    BadMagicError,
    CandidateExplosionError,
    ChecksumMismatchError,
    DafsaBuildError,
    TruncatedDataError,
    UnsupportedVersionError,
)

MAGIC = b"MDFA"
FORMAT_VERSION = 1

_HEADER = struct.Struct("<4sHHQQ")
_STATE_HEAD = struct.Struct("<BH")
_TRANSITION = struct.Struct("<BI")
_CRC = struct.Struct("<I")

# Default occurrence bound for multi-rule expansion: 8 occurrences means at
# most 2**8 candidate strings per query.
MAX_RULE_OCCURRENCES = 8


@dataclass(frozen=True)
class ReplacementMap:
    """Character substitutions tolerated during traversal.

    `single` maps one character to the alternative characters it may stand
    for inside the automaton walk. `multi` holds (pattern, replacement)
    rewrite rules applied to the query before traversal; they never take
    part in the walk itself.
    """

    single: dict[str, tuple[str, ...]] = field(default_factory=dict)
    multi: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        for src in self.single:
            if len(src) != 1:
                raise ValueError(f"single-map source {src!r} must be one character")
        for pattern, _ in self.multi:
            if not pattern:
                raise ValueError("multi-rule pattern must be non-empty")


#: ASCII fallback spellings used on non-German keyboards: u/o/a may stand
#: for their umlauts, digraphs rewrite to umlauts, and ss/ß are mutual.
GERMAN_REPLACEMENTS = ReplacementMap(
    single={"u": ("ü",), "o": ("ö",), "a": ("ä",)},
    multi=(("ue", "ü"), ("oe", "ö"), ("ae", "ä"), ("ss", "ß"), ("ß", "ss")),
)


class FuzzyResult(NamedTuple):
    matches: list[bytes]
    truncated: bool


class _Node:
    __slots__ = ("final", "edges", "serial")

    def __init__(self, serial: int):
        self.final = False
        self.edges: dict[int, _Node] = {}
        self.serial = serial


class DafsaBuilder:
    """Single-use incremental builder; feed keys in ascending byte order."""

    def __init__(self):
        self._serial = 0
        self._root = self._new_node()
        # _path[i] is the node reached after consuming _previous[:i].
        self._path: list[_Node] = [self._root]
        self._previous = b""
        self._register: dict[tuple, _Node] = {}
        self._count = 0
        self._finished = False

    def _new_node(self) -> _Node:
        self._serial += 1
        return _Node(self._serial)

    def add(self, key: bytes) -> None:
        if self._finished:
            raise DafsaBuildError("builder already finished", self._count)
        key = bytes(key)
        if self._count:
            if key == self._previous:
                raise DafsaBuildError(
                    f"duplicate key at index {self._count}: {key!r}", self._count
                )
            if key < self._previous:
                raise DafsaBuildError(
                    f"key at index {self._count} out of order: "
                    f"{key!r} < {self._previous!r}",
                    self._count,
                )
        prefix_len = 0
        limit = min(len(key), len(self._previous))
        while prefix_len < limit and key[prefix_len] == self._previous[prefix_len]:
            prefix_len += 1
        self._minimize(prefix_len)
        node = self._path[-1]
        for byte in key[prefix_len:]:
            child = self._new_node()
            node.edges[byte] = child
            self._path.append(child)
            node = child
        node.final = True
        self._previous = key
        self._count += 1

    def _minimize(self, down_to: int) -> None:
        # Replace-or-register the dangling suffix of the previous key,
        # deepest node first; below the cut every child is already minimal.
        while len(self._path) > down_to + 1:
            child = self._path.pop()
            parent = self._path[-1]
            signature = (
                child.final,
                tuple((b, t.serial) for b, t in child.edges.items()),
            )
            registered = self._register.get(signature)
            if registered is not None:
                parent.edges[self._previous[len(self._path) - 1]] = registered
            else:
                self._register[signature] = child

    def finish(self) -> "Automaton":
        if self._finished:
            raise DafsaBuildError("builder already finished", self._count)
        self._minimize(0)
        self._finished = True
        return Automaton._freeze(self._root, self._count)


def build_from_sorted(keys: Iterable[bytes]) -> "Automaton":
    """Build a minimal automaton from strictly ascending, duplicate-free keys."""
    builder = DafsaBuilder()
    for key in keys:
        builder.add(key)
    return builder.finish()


class Automaton:
    """Immutable minimal acyclic automaton; state 0 is the root.

    Transitions per state are stored as a byte->state dict whose insertion
    order is ascending by label, so iteration enumerates keys in byte order
    without re-sorting.
    """

    __slots__ = ("_final", "_edges", "key_count")

    def __init__(self, final: list[bool], edges: list[dict[int, int]], key_count: int):
        self._final = final
        self._edges = edges
        self.key_count = key_count

    @classmethod
    def _freeze(cls, root: _Node, key_count: int) -> "Automaton":
        # Canonical numbering: breadth-first from the root, transitions in
        # ascending label order. Depends only on automaton structure, which
        # makes serialization byte-identical for identical key sets.
        index = {id(root): 0}
        order = [root]
        cursor = 0
        while cursor < len(order):
            node = order[cursor]
            cursor += 1
            for _, child in sorted(node.edges.items()):
                if id(child) not in index:
                    index[id(child)] = len(order)
                    order.append(child)
        final = [node.final for node in order]
        edges = [
            {b: index[id(child)] for b, child in sorted(node.edges.items())}
            for node in order
        ]
        return cls(final, edges, key_count)

    # -- basic queries ----------------------------------------------------

    @property
    def state_count(self) -> int:
        return len(self._final)

    @property
    def edge_count(self) -> int:
        return sum(len(e) for e in self._edges)

    def __len__(self) -> int:
        return self.key_count

    def _walk(self, data: bytes, start: int = 0) -> int | None:
        edges = self._edges
        state = start
        for byte in data:
            nxt = edges[state].get(byte)
            if nxt is None:
                return None
            state = nxt
        return state

    def contains(self, key: bytes | str) -> bool:
        """Exact membership; replacement maps play no part here."""
        state = self._walk(_as_bytes(key))
        return state is not None and self._final[state]

    def __contains__(self, key: bytes | str) -> bool:
        return self.contains(key)

    def completions(self, prefix: bytes | str = b"") -> Iterator[bytes]:
        """All accepted keys starting with `prefix`, ascending byte order."""
        prefix = _as_bytes(prefix)
        state = self._walk(prefix)
        if state is None:
            return
        yield from self._enumerate(state, bytearray(prefix))

    def __iter__(self) -> Iterator[bytes]:
        return self.completions(b"")

    def _enumerate(self, state: int, buf: bytearray) -> Iterator[bytes]:
        if self._final[state]:
            yield bytes(buf)
        for byte, target in self._edges[state].items():
            buf.append(byte)
            yield from self._enumerate(target, buf)
            buf.pop()

    def _collect(self, state: int, prefix: bytes) -> list[bytes]:
        # Iterative subtree enumeration; hot path for dictionary lookups.
        out = []
        stack = [(state, prefix)]
        while stack:
            st, acc = stack.pop()
            if self._final[st]:
                out.append(acc)
            items = self._edges[st]
            if items:
                for byte, target in sorted(items.items(), reverse=True):
                    stack.append((target, acc + bytes([byte])))
        out.sort()
        return out

    # -- substitution-tolerant traversal ----------------------------------

    def fuzzy_lookup(
        self,
        query: str | bytes,
        replacements: ReplacementMap,
        *,
        max_occurrences: int = MAX_RULE_OCCURRENCES,
        strict: bool = False,
    ) -> FuzzyResult:
        """Accepted keys derivable from `query` via the replacement map.

        The query is first expanded through the multi-character rules
        (bounded; see `expand_candidates`), then each candidate is walked
        with per-character alternatives. The literal query, if accepted,
        is always among the matches.
        """
        text = _as_text(query)
        candidates, truncated = expand_candidates(
            text, replacements, max_occurrences=max_occurrences, strict=strict
        )
        matches: set[bytes] = set()
        for candidate in candidates:
            for state, matched in self._fuzzy_walk(candidate, replacements.single):
                if self._final[state]:
                    matches.add(matched)
        return FuzzyResult(sorted(matches), truncated)

    def fuzzy_completions(
        self,
        prefix: str | bytes,
        replacements: ReplacementMap,
        *,
        max_occurrences: int = MAX_RULE_OCCURRENCES,
        strict: bool = False,
    ) -> tuple[list[tuple[bytes, bytes]], bool]:
        """(matched_prefix, full_key) pairs for keys whose prefix is
        derivable from `prefix` via the replacement map."""
        text = _as_text(prefix)
        candidates, truncated = expand_candidates(
            text, replacements, max_occurrences=max_occurrences, strict=strict
        )
        seen: set[bytes] = set()
        results: list[tuple[bytes, bytes]] = []
        for candidate in candidates:
            for state, matched in self._fuzzy_walk(candidate, replacements.single):
                if matched in seen:
                    continue
                seen.add(matched)
                for key in self._collect(state, matched):
                    results.append((matched, key))
        results.sort(key=lambda pair: pair[1])
        return results, truncated

    def _fuzzy_walk(
        self, candidate: str, single: dict[str, tuple[str, ...]]
    ) -> list[tuple[int, bytes]]:
        """End states of every walk spelling `candidate` with per-character
        alternatives allowed; returns (state, matched key bytes) pairs."""
        options: list[tuple[bytes, ...]] = []
        for ch in candidate:
            alts = single.get(ch)
            if alts:
                options.append((ch.encode("utf-8"),) + tuple(a.encode("utf-8") for a in alts))
            else:
                options.append((ch.encode("utf-8"),))

        edges = self._edges
        results: list[tuple[int, bytes]] = []
        # Depth-first over character positions; each frame is a partial walk.
        stack: list[tuple[int, int, bytes]] = [(0, 0, b"")]
        n = len(options)
        while stack:
            state, pos, matched = stack.pop()
            if pos == n:
                results.append((state, matched))
                continue
            for opt in options[pos]:
                st = state
                for byte in opt:
                    nxt = edges[st].get(byte)
                    if nxt is None:
                        st = -1
                        break
                    st = nxt
                if st >= 0:
                    stack.append((st, pos + 1, matched + opt))
        return results

    # -- serialization -----------------------------------------------------

    def serialize(self) -> bytes:
        parts = [
            _HEADER.pack(MAGIC, FORMAT_VERSION, 0, self.key_count, self.state_count)
        ]
        for final, edges in zip(self._final, self._edges):
            parts.append(_STATE_HEAD.pack(1 if final else 0, len(edges)))
            for byte, target in edges.items():
                parts.append(_TRANSITION.pack(byte, target))
        body = b"".join(parts)
        return body + _CRC.pack(zlib.crc32(body))

    @classmethod
    def deserialize(cls, data: bytes) -> "Automaton":
        if len(data) < _HEADER.size or data[:4] != MAGIC:
            raise BadMagicError("not an automaton blob (bad magic)")
        _, version, _, key_count, state_count = _HEADER.unpack_from(data)
        if version != FORMAT_VERSION:
            raise UnsupportedVersionError(f"unsupported automaton version {version}")
        offset = _HEADER.size
        final: list[bool] = []
        edges: list[dict[int, int]] = []
        try:
            for _ in range(state_count):
                flag, count = _STATE_HEAD.unpack_from(data, offset)
                offset += _STATE_HEAD.size
                state_edges: dict[int, int] = {}
                for _ in range(count):
                    byte, target = _TRANSITION.unpack_from(data, offset)
                    offset += _TRANSITION.size
                    state_edges[byte] = target
                final.append(bool(flag))
                edges.append(state_edges)
        except struct.error as exc:
            raise TruncatedDataError("automaton blob ends mid-state") from exc
        if len(data) != offset + _CRC.size:
            raise TruncatedDataError(
                f"automaton blob length {len(data)} != expected {offset + _CRC.size}"
            )
        (stored_crc,) = _CRC.unpack_from(data, offset)
        if zlib.crc32(data[:offset]) != stored_crc:
            raise ChecksumMismatchError("automaton blob failed CRC32 check")
        for state_edges in edges:
            for target in state_edges.values():
                if target >= state_count:
                    raise TruncatedDataError(
                        f"transition target {target} out of range"
                    )
        if not final:
            # Never serialized this way, but keep the no-state corner sane.
            final, edges = [False], [{}]
        return cls(final, edges, key_count)


def expand_candidates(
    text: str,
    replacements: ReplacementMap,
    *,
    max_occurrences: int = MAX_RULE_OCCURRENCES,
    strict: bool = False,
) -> tuple[list[str], bool]:
    """Expand `text` through the multi-character rewrite rules.

    Every subset of pairwise non-overlapping rule occurrences is applied,
    yielding at most 2**max_occurrences candidates. Past the bound the
    expansion degrades to one greedy left-to-right application per rule and
    the result is flagged truncated; under `strict` it raises instead.
    The literal text is always the first candidate.
    """
    occurrences: list[tuple[int, int, str]] = []
    for pattern, replacement in replacements.multi:
        start = text.find(pattern)
        while start >= 0:
            occurrences.append((start, start + len(pattern), replacement))
            start = text.find(pattern, start + 1)
    if not occurrences:
        return [text], False

    if len(occurrences) > max_occurrences:
        if strict:
            raise CandidateExplosionError(max_occurrences, len(occurrences))
        fallback = {text}
        for pattern, replacement in replacements.multi:
            if pattern in text:
                fallback.add(text.replace(pattern, replacement))
        return sorted(fallback), True

    occurrences.sort()
    candidates = {text}
    n = len(occurrences)
    for mask in range(1, 1 << n):
        chosen = [occurrences[i] for i in range(n) if mask >> i & 1]
        ok = True
        prev_end = -1
        for start, end, _ in chosen:
            if start < prev_end:
                ok = False
                break
            prev_end = end
        if not ok:
            continue
        pieces = []
        cursor = 0
        for start, end, replacement in chosen:
            pieces.append(text[cursor:start])
            pieces.append(replacement)
            cursor = end
        pieces.append(text[cursor:])
        candidates.add("".join(pieces))
    ordered = sorted(candidates)
    ordered.remove(text)
    return [text] + ordered, False


def _as_bytes(value: bytes | str) -> bytes:
    if isinstance(value, str):
        return value.encode("utf-8")
    return bytes(value)


def _as_text(value: bytes | str) -> str:
    if isinstance(value, bytes):
        return value.decode("utf-8")
    return value
