"""Shared helpers for building randomized test dictionaries."""

from __future__ import annotations

import random

from morphkit.dictfmt import AnalysisRecord, DictEntry, Paradigm

CATEGORIES = ["NN", "V", "ADJ", "ADV", "ART"]
FEATURES = ["masc", "fem", "neut", "nom", "acc", "dat", "gen", "sing", "plu", "pos"]
ALPHABET = "abdegilmnorstuüöäß"


def random_surface(rng: random.Random, max_len: int = 12) -> str:
    return "".join(rng.choice(ALPHABET) for _ in range(rng.randint(2, max_len)))


def random_paradigm(rng: random.Random) -> Paradigm:
    n = rng.randint(0, 3)
    return Paradigm(rng.choice(CATEGORIES), tuple(rng.sample(FEATURES, n)))


def random_entries(rng: random.Random, count: int) -> list[DictEntry]:
    entries = []
    used = set()
    while len(entries) < count:
        surface = random_surface(rng)
        if surface in used:
            continue
        used.add(surface)
        analyses = []
        seen = set()
        for _ in range(rng.randint(1, 4)):
            record = AnalysisRecord(random_surface(rng, 8), random_paradigm(rng))
            key = (record.lemma, record.paradigm.text)
            if key not in seen:
                seen.add(key)
                analyses.append(record)
        entries.append(DictEntry(surface, analyses))
    return entries
