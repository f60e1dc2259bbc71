"""Fixture list for the token classifier: 200+ labelled cases.

Positives per class plus plain-word negatives; the expected label is what
the shipped pattern file must produce.
"""

EMAILS = [
    "anna.schmidt@example.de",
    "max@web.de",
    "info@firma-berlin.de",
    "j_mueller@uni-muenchen.de",
    "support@mail.example.com",
] + [f"user{i}@host{i}.org" for i in range(35)]

URLS = [
    "https://example.com/a?b=1",
    "http://www.spiegel.de",
    "https://de.wikipedia.org/wiki/Morphologie",
    "www.beispiel.de",
    "www.shop.example.com/artikel/42",
] + [f"https://site{i}.de/page/{i}" for i in range(35)]

DATES = [
    "24.12.2016",
    "1.1.2000",
    "01.01.99",
    "31.12.1999",
    "3.10.90",
    "15.06.2020",
] + [f"{d}.{m}.20{y:02d}" for d, m, y in zip(range(1, 29), list(range(1, 13)) * 3, range(28))]

NUMBERS = [
    "3,14",
    "42",
    "-7",
    "+12",
    "0,5",
    "1000",
    "2.5",
    "-0,01",
] + [str(i * 37) for i in range(1, 33)]

ORDINALS = ["24.", "1.", "3.", "12.", "31."] + [f"{i}." for i in range(4, 29)]

NEGATIVES = [
    "Haus",
    "gegangen",
    "grün",
    "U-Bahn",
    "Straße",
    "Rohrohrzucker",
    "foo@bar",          # no TLD
    "@example.de",      # empty local part
    "x24.12.2016",      # leading junk breaks whole-token anchoring
    "24.12.2016x",
    "32.12.2016",       # day out of range
    "24.13.2016",       # month out of range
    "0.1.2016",         # day zero
    "3,14x",
    "1.2.3.4.5",
    "-",
    "..",
    "httpx://nope",
]

LABELLED = (
    [(t, "EMAIL") for t in EMAILS]
    + [(t, "URL") for t in URLS]
    + [(t, "DATE") for t in DATES]
    + [(t, "NUMBER") for t in NUMBERS]
    + [(t, "ORDINAL") for t in ORDINALS]
    + [(t, None) for t in NEGATIVES]
)
