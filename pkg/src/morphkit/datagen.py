"""Deterministic generator of German-style inflection lexicons.

Regular weak-verb conjugation, strong adjective declension and a few noun
classes over real stems. Output is reproducible (no randomness in the
tables themselves), which keeps the bundled sample dictionary, scaled
compaction checks and benchmark word lists stable across runs.
"""

from __future__ import annotations

import random

from .dictfmt import AnalysisRecord, DictEntry, Paradigm

WEAK_VERB_STEMS = [
    "mach", "sag", "frag", "kauf", "spiel", "lern", "wohn", "hör", "koch",
    "brauch", "leb", "lieb", "such", "zeig", "stell", "arbeit", "antwort",
    "dank", "führ", "fühl", "glaub", "hoff", "hol", "kost", "lach", "leg",
    "mein", "merk", "pack", "prüf", "red", "reis", "schau", "schenk",
    "schick", "setz", "sorg", "spar", "stör", "tanz", "teil", "träum",
    "üb", "wart", "wünsch", "zahl", "zähl", "zeichn", "öffn", "bau",
    "bad", "atm", "rechn", "begegn", "erklär", "erzähl", "besuch",
    "bestell", "bezahl", "gehör", "gebrauch", "verkauf", "versuch",
    "verdien", "bemerk", "betracht", "bedeut", "beacht", "wechsel",
    "wander", "feier", "fütter", "lager", "steiger", "liefer", "förder",
    "änder", "äußer", "dauer", "trauer", "zauber", "kümmer", "hämmer",
    "kletter", "plauder", "ruder", "zitter", "flüster", "knurr", "schnurr",
    "klirr", "knall", "prall", "schall", "grill", "drück", "schmück",
    "pflück", "blick", "klick", "nick", "wink", "tank", "park", "land",
    "rett", "wett", "miet", "lös", "grüß", "küss", "putz", "heiz",
]

ADJECTIVE_STEMS = [
    "klein", "schnell", "langsam", "billig", "fleißig", "grün", "schön",
    "warm", "kalt", "laut", "hell", "weich", "hart", "frisch", "reich",
    "arm", "jung", "alt", "klug", "dumm", "breit", "schmal", "tief",
    "flach", "voll", "leer", "rund", "eckig", "glatt", "rau", "süß",
    "mild", "scharf", "zart", "grob", "fein", "dicht", "dünn", "schwer",
    "leicht", "stark", "schwach", "gesund", "krank", "wach", "froh",
    "traurig", "mutig", "bang", "stolz", "ehrlich", "falsch", "echt",
    "klar", "trüb", "kühl", "heiß", "nass", "sauber", "schmutzig",
    "ruhig", "unruhig", "freundlich", "höflich", "pünktlich", "gründlich",
]

#: (lemma, gender, pattern); patterns: fem_en (-ung/-heit/-keit plural in
#: -en), masc_strong / neut_strong (genitive -es, plural -e, dative plural
#: -en), masc_agent (-er nouns, plural identical, genitive -s).
NOUNS = [
    ("Zeitung", "fem", "fem_en"), ("Übung", "fem", "fem_en"),
    ("Meinung", "fem", "fem_en"), ("Ordnung", "fem", "fem_en"),
    ("Wohnung", "fem", "fem_en"), ("Rechnung", "fem", "fem_en"),
    ("Prüfung", "fem", "fem_en"), ("Lösung", "fem", "fem_en"),
    ("Erzählung", "fem", "fem_en"), ("Erklärung", "fem", "fem_en"),
    ("Freiheit", "fem", "fem_en"), ("Krankheit", "fem", "fem_en"),
    ("Wahrheit", "fem", "fem_en"), ("Schönheit", "fem", "fem_en"),
    ("Gesundheit", "fem", "fem_en"), ("Möglichkeit", "fem", "fem_en"),
    ("Schwierigkeit", "fem", "fem_en"), ("Fähigkeit", "fem", "fem_en"),
    ("Tag", "masc", "masc_strong"), ("Berg", "masc", "masc_strong"),
    ("Weg", "masc", "masc_strong"), ("Ort", "masc", "masc_strong"),
    ("Film", "masc", "masc_strong"), ("Tisch", "masc", "masc_strong"),
    ("Brief", "masc", "masc_strong"), ("Freund", "masc", "masc_strong"),
    ("Hund", "masc", "masc_strong"), ("Stein", "masc", "masc_strong"),
    ("Lehrer", "masc", "masc_agent"), ("Fahrer", "masc", "masc_agent"),
    ("Spieler", "masc", "masc_agent"), ("Arbeiter", "masc", "masc_agent"),
    ("Maler", "masc", "masc_agent"), ("Schüler", "masc", "masc_agent"),
    ("Käufer", "masc", "masc_agent"), ("Verkäufer", "masc", "masc_agent"),
    ("Jahr", "neut", "neut_strong"), ("Spiel", "neut", "neut_strong"),
    ("Ziel", "neut", "neut_strong"), ("Heft", "neut", "neut_strong"),
    ("Boot", "neut", "neut_strong"), ("Schiff", "neut", "neut_strong"),
    ("Werk", "neut", "neut_strong"), ("Ding", "neut", "neut_strong"),
]

SEPARABLE_PREFIXES = ["ab", "an", "auf", "aus", "ein", "mit", "nach", "vor", "zu"]

#: Unstressed prefixes whose participle takes no ge-.
INSEPARABLE_PREFIXES = ("be", "ge", "er", "ver", "zer", "ent", "emp", "miss")

_CASES = ("nom", "acc", "dat", "gen")

ADJECTIVE_STRONG_ENDINGS = {
    "er": (("masc", "nom", "sing"), ("fem", "dat", "sing"), ("fem", "gen", "sing"), ("gen", "plu")),
    "e": (("fem", "nom", "sing"), ("fem", "acc", "sing"), ("nom", "plu"), ("acc", "plu")),
    "em": (("masc", "dat", "sing"), ("neut", "dat", "sing")),
    "es": (("neut", "nom", "sing"), ("neut", "acc", "sing")),
    "en": (("masc", "acc", "sing"), ("masc", "gen", "sing"), ("neut", "gen", "sing"), ("dat", "plu")),
}


def _needs_epenthesis(stem: str) -> bool:
    # arbeit-est, red-et, öffn-et, atm-et; but lern-st, qualm-st.
    if stem[-1] in "td":
        return True
    return (
        stem[-1] in "mn"
        and len(stem) > 1
        and stem[-2] not in "aeiouäöüylrh"
        and stem[-2] not in "mn"
    )


def weak_verb_triples(stem: str, prefix: str = "") -> list[tuple[str, str, Paradigm]]:
    """(surface, lemma, paradigm) triples of one regular weak verb.

    Handles e-epenthesis (arbeitest), the sibilant second singular (tanzt,
    not tanzst), -el/-er infinitives (wandern) and ge-less participles of
    inseparable-prefix stems (besucht, abbestellt).
    """
    e = "e" if _needs_epenthesis(stem) else ""
    en = "n" if stem.endswith(("el", "er")) else "en"
    second = stem + e + ("t" if stem[-1] in "sßxz" else "st")
    base = prefix + stem
    lemma = base + en
    triples = []
    present = [
        (base + "e", "1per", "sing"),
        (prefix + second, "2per", "sing"),
        (base + e + "t", "3per", "sing"),
        (lemma, "1per", "plu"),
        (base + e + "t", "2per", "plu"),
        (lemma, "3per", "plu"),
    ]
    for surface, person, number in present:
        triples.append((surface, lemma, Paradigm("V", ("pres", person, number))))
    past = [
        ("", "1per", "sing"), ("st", "2per", "sing"), ("", "3per", "sing"),
        ("n", "1per", "plu"), ("t", "2per", "plu"), ("n", "3per", "plu"),
    ]
    for ending, person, number in past:
        triples.append(
            (base + e + "te" + ending, lemma, Paradigm("V", ("past", person, number)))
        )
    triples.append((lemma, lemma, Paradigm("V", ("inf",))))
    ge = "" if stem.startswith(INSEPARABLE_PREFIXES) else "ge"
    triples.append((prefix + ge + stem + e + "t", lemma, Paradigm("V", ("ppast",))))
    return triples


def present_participle(stem: str) -> str:
    en = "n" if stem.endswith(("el", "er")) else "en"
    return stem + en + "d"


def adjective_triples(stem: str, lemma: str | None = None) -> list[tuple[str, str, Paradigm]]:
    """Strong declension of one adjective plus its uninflected uses."""
    lemma = lemma or stem
    triples = [
        (stem, lemma, Paradigm("ADJ", ("pos", "<pred>"))),
        (stem, lemma, Paradigm("ADJ", ("pos", "<adv>"))),
    ]
    for ending, cells in ADJECTIVE_STRONG_ENDINGS.items():
        for cell in cells:
            triples.append((stem + ending, lemma, Paradigm("ADJ", ("pos",) + cell)))
    return triples


def noun_triples(lemma: str, gender: str, pattern: str) -> list[tuple[str, str, Paradigm]]:
    triples = []

    def add(surface, case, number):
        triples.append((surface, lemma, Paradigm("NN", (gender, case, number))))

    if pattern == "fem_en":
        for case in _CASES:
            add(lemma, case, "sing")
        for case in _CASES:
            add(lemma + "en", case, "plu")
    elif pattern in ("masc_strong", "neut_strong"):
        for case in ("nom", "acc", "dat"):
            add(lemma, case, "sing")
        add(lemma + "es", "gen", "sing")
        for case in ("nom", "acc", "gen"):
            add(lemma + "e", case, "plu")
        add(lemma + "en", "dat", "plu")
    elif pattern == "masc_agent":
        for case in ("nom", "acc", "dat"):
            add(lemma, case, "sing")
        add(lemma + "s", "gen", "sing")
        for case in ("nom", "acc", "gen"):
            add(lemma, case, "plu")
        add(lemma + "n", "dat", "plu")
    else:
        raise ValueError(f"unknown noun pattern {pattern!r}")
    return triples


def entries_from_triples(triples) -> list[DictEntry]:
    """Group (surface, lemma, paradigm) triples into dictionary entries,
    first-seen surface order, duplicate readings dropped."""
    by_surface: dict[str, DictEntry] = {}
    seen: set[tuple[str, str, str]] = set()
    for surface, lemma, paradigm in triples:
        key = (surface, lemma, paradigm.text)
        if key in seen:
            continue
        seen.add(key)
        entry = by_surface.get(surface)
        if entry is None:
            by_surface[surface] = DictEntry(surface, [AnalysisRecord(lemma, paradigm)])
        else:
            entry.analyses.append(AnalysisRecord(lemma, paradigm))
    return list(by_surface.values())


def _base_triples() -> list[tuple[str, str, Paradigm]]:
    triples = []
    for stem in WEAK_VERB_STEMS:
        triples.extend(weak_verb_triples(stem))
    for stem in ADJECTIVE_STEMS:
        triples.extend(adjective_triples(stem))
    for stem in WEAK_VERB_STEMS[:40]:
        participle = present_participle(stem)
        triples.extend(adjective_triples(participle, lemma=participle))
    for lemma, gender, pattern in NOUNS:
        triples.extend(noun_triples(lemma, gender, pattern))
    return triples


def sample_entries() -> list[DictEntry]:
    """The standard generated lexicon: verbs, adjectives (including the
    present-participle declensions of the first verb stems), nouns."""
    return entries_from_triples(_base_triples())


def scaled_entries(min_surfaces: int) -> list[DictEntry]:
    """At least `min_surfaces` distinct forms, grown by attaching separable
    prefixes to the verb stems and un- to the adjectives."""
    triples = _base_triples()

    def surfaces() -> int:
        return len({t[0] for t in triples})

    for prefix in SEPARABLE_PREFIXES:
        if surfaces() >= min_surfaces:
            break
        for stem in WEAK_VERB_STEMS:
            triples.extend(weak_verb_triples(stem, prefix))
        for stem in ADJECTIVE_STEMS:
            if surfaces() >= min_surfaces:
                break
            triples.extend(adjective_triples("un" + stem, lemma="un" + stem))
    if surfaces() < min_surfaces:
        raise ValueError(f"cannot grow lexicon to {min_surfaces} surfaces")
    return entries_from_triples(triples)


#: Size of the dictionary committed at data/sample_dict.txt.
SAMPLE_MIN_SURFACES = 4500


def sample_dictionary_text() -> str:
    """Exact text of the bundled sample dictionary (regenerable)."""
    from .dictfmt import render_text_dictionary

    return render_text_dictionary(scaled_entries(SAMPLE_MIN_SURFACES))


_DEUMLAUT = str.maketrans({"ü": "u", "ö": "o", "ä": "a"})


def bench_wordlist(surfaces: list[str], count: int, seed: int = 0) -> list[str]:
    """Mixed benchmark list: in-lexicon words, ASCII-fallback spellings of
    umlaut words, and out-of-vocabulary inventions."""
    rng = random.Random(seed)
    surface_set = set(surfaces)
    umlauted = [s for s in surfaces if any(c in s for c in "üöäß")]
    words = []
    syllables = ["bra", "kli", "mon", "zer", "flu", "gra", "ste", "pli", "dro", "twa"]
    endings = ["test", "ten", "tet", "te", "en", "st", "ung", "heit", "em", "endem"]
    while len(words) < count:
        roll = rng.random()
        if roll < 0.6:
            words.append(rng.choice(surfaces))
        elif roll < 0.8 and umlauted:
            word = rng.choice(umlauted)
            ascii_form = word.translate(_DEUMLAUT).replace("ß", "ss")
            words.append(ascii_form if ascii_form != word else word)
        else:
            invented = (
                rng.choice(syllables)
                + rng.choice(syllables)
                + rng.choice(endings)
            )
            if invented not in surface_set:
                words.append(invented)
    return words
