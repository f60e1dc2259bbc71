import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from importlib.resources import files

ACCEPTANCE_TITLES = {
    "a1": "paper example blocks, exact analyses",
    "a2": "replacement-map traversal (grun/gruen/Strasse)",
    "a3": "randomized DAFSA correctness vs oracles",
    "a4": "compaction on a 10,000-form lexicon",
    "a5": "throughput floor (>= 15,000 words/sec)",
    "a6": "cache transparency and bounds",
    "a7": "hyphen TRUNC lemmas",
    "a8": "token short-circuit",
    "a9": "guesser calibration (>= 80%)",
    "a10": "round-trip stability",
}

_acceptance_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py::test_a" not in report.nodeid:
        return
    match = re.search(r"::test_(a\d+)_", report.nodeid)
    if match:
        _acceptance_results[match.group(1)] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for key, title in ACCEPTANCE_TITLES.items():
        outcome = _acceptance_results.get(key)
        if outcome is None:
            continue
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{key.upper()} {status} - {title}")


def load_toy_entries():
    from morphkit.dictfmt import parse_text_dictionary

    text = files("morphkit").joinpath("data/toy_dict.txt").read_text("utf-8")
    return parse_text_dictionary(text.splitlines())


@pytest.fixture(scope="session")
def toy_entries():
    return load_toy_entries()


@pytest.fixture(scope="session")
def toy_dictionary(toy_entries):
    from morphkit.dictfmt import compile_entries

    return compile_entries(toy_entries)


@pytest.fixture(scope="session")
def toy_analyzer(toy_dictionary):
    from morphkit.analyzer import Analyzer

    return Analyzer(toy_dictionary)


@pytest.fixture(scope="session")
def sample_entries():
    from morphkit.datagen import SAMPLE_MIN_SURFACES, scaled_entries

    return scaled_entries(SAMPLE_MIN_SURFACES)


@pytest.fixture(scope="session")
def sample_dictionary(sample_entries):
    from morphkit.dictfmt import compile_entries

    return compile_entries(sample_entries)


@pytest.fixture(scope="session")
def sample_analyzer(sample_dictionary):
    from morphkit.analyzer import Analyzer

    return Analyzer(sample_dictionary)
