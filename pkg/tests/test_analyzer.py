import random

import pytest

from morphkit.analyzer import Analysis, Analyzer, Source, StageTrace, TagMap
from morphkit.dafsa import GERMAN_REPLACEMENTS
from morphkit.dictfmt import (
    AnalysisRecord,
    DictEntry,
    Paradigm,
    compile_entries,
)
from morphkit.errors import InvalidInputError, TagMapError

from oracles import substitution_variants
from util import random_entries

GERMAN_SINGLE = {"u": ("ü",), "o": ("ö",), "a": ("ä",)}
GERMAN_MULTI = [("ue", "ü"), ("oe", "ö"), ("ae", "ä"), ("ss", "ß"), ("ß", "ss")]


class TestAnalyze:
    def test_gegangen_three_lexicon_readings(self, toy_analyzer):
        results = toy_analyzer.analyze("gegangen")
        assert [(a.lemma, a.paradigm.text, a.source) for a in results] == [
            ("gegangen", "ADJ,pos,<adv>", Source.LEXICON),
            ("gegangen", "ADJ,pos,<pred>", Source.LEXICON),
            ("gehen", "V,ppast", Source.LEXICON),
        ]
        assert all(a.matched_surface == "gegangen" for a in results)

    def test_umlaut_fallback_spelling(self, toy_analyzer):
        results = toy_analyzer.analyze("grun")
        assert results
        assert {a.matched_surface for a in results} == {"grün"}
        assert {a.lemma for a in results} == {"grün"}

    def test_empty_input_rejected(self, toy_analyzer):
        with pytest.raises(InvalidInputError):
            toy_analyzer.analyze("")
        with pytest.raises(InvalidInputError):
            toy_analyzer.analyze("   ")

    def test_internal_whitespace_rejected(self, toy_analyzer):
        with pytest.raises(InvalidInputError):
            toy_analyzer.analyze("zwei wörter")

    def test_email_token_class(self, toy_analyzer):
        results = toy_analyzer.analyze("foo@bar.de")
        assert len(results) == 1
        analysis = results[0]
        assert analysis.source == Source.TOKEN_CLASS
        assert analysis.paradigm.category == "EMAIL"

    def test_exact_match_priority_no_fuzzy_pollution(self, toy_analyzer):
        # "grüne" is in the lexicon; a fuzzy walk could also reach it from
        # itself, but exact must win and return only verbatim matches.
        results = toy_analyzer.analyze("grüne")
        assert results
        assert all(a.matched_surface == "grüne" for a in results)
        assert all(a.source == Source.LEXICON for a in results)

    def test_case_variant_sentence_initial(self, toy_analyzer):
        results = toy_analyzer.analyze("haus")
        assert results
        assert {a.matched_surface for a in results} == {"Haus"}

    def test_case_variant_all_lowercase_fallback(self, toy_analyzer):
        results = toy_analyzer.analyze("GUT")
        assert results
        assert {a.matched_surface for a in results} == {"gut"}

    def test_unknown_word_returns_empty_not_error(self, toy_analyzer):
        assert toy_analyzer.analyze("qqq") == []

    def test_pipeline_determinism(self, toy_analyzer):
        for word in ("gegangen", "grun", "U-Bahn-Station", "brunztest", "foo@bar.de"):
            assert toy_analyzer.analyze(word) == toy_analyzer.analyze(word)

    def test_guesser_results_flagged(self, toy_analyzer):
        results = toy_analyzer.analyze("brunztest")
        assert results
        assert all(a.source == Source.GUESSER for a in results)

    def test_fuzzy_soundness_rederivable(self, sample_analyzer):
        queries = ["grun", "gruner", "schon", "schoner", "Ubung", "Ubungen",
                   "fleissig", "gruss", "grusse", "hore", "horst", "traumt"]
        for query in queries:
            for analysis in sample_analyzer.analyze(query):
                if analysis.source != Source.LEXICON:
                    continue
                variants = substitution_variants(query, GERMAN_SINGLE, GERMAN_MULTI)
                assert analysis.matched_surface in variants

    def test_tsv_row_contract(self, toy_analyzer):
        [row] = [a.tsv_row("grun") for a in toy_analyzer.analyze("grun")][:1]
        fields = row.split("\t")
        assert fields[0] == "grun"
        assert fields[1] == "grün"
        assert fields[3] == "lexicon"
        assert fields[4] == "grün"


class TestHyphen:
    def test_uban_station_composed_lemma(self, toy_analyzer):
        assert toy_analyzer.lemmatize("U-Bahn-Station") == [
            "U-(TRUNC)Bahn-(TRUNC)Station"
        ]

    def test_lone_hyphen_yields_nothing(self, toy_analyzer):
        assert toy_analyzer.analyze("-") == []

    def test_xy_zeit_one_analysis_per_reading(self, toy_analyzer, toy_dictionary):
        results = toy_analyzer.analyze("XY-Zeit")
        zeit = toy_dictionary.lookup("Zeit")
        assert len(results) == len(zeit)
        assert {a.lemma for a in results} == {"XY-(TRUNC)Zeit"}
        assert {a.paradigm.text for a in results} == {r.paradigm.text for r in zeit}
        assert {a.matched_surface for a in results} == {"Zeit"}

    def test_unanalyzable_final_segment_falls_through(self, toy_analyzer):
        # "qqq" resolves nowhere; the whole word then reaches the guesser,
        # which cannot match either -> empty.
        assert toy_analyzer.analyze("XY-qqq") == []

    def test_final_segment_case_variant(self, toy_analyzer):
        results = toy_analyzer.analyze("XY-zeit")
        assert results
        assert {a.lemma for a in results} == {"XY-(TRUNC)Zeit"}


class TestLemmatize:
    def test_gegangen(self, toy_analyzer):
        assert toy_analyzer.lemmatize("gegangen") == ["gegangen", "gehen"]

    def test_unknown_word_empty(self, toy_analyzer):
        assert toy_analyzer.lemmatize("qqq") == []

    def test_uban_trunc_lemma(self, toy_analyzer):
        assert toy_analyzer.lemmatize("U-Bahn") == ["U-(TRUNC)Bahn"]

    def test_equals_lemma_projection_of_analyze(self, toy_analyzer, sample_analyzer):
        words = ["gegangen", "grun", "geht", "brunztest", "U-Bahn-Station",
                 "machte", "Zeitungen", "kleinem", "qqq", "24.12.2016"]
        for analyzer in (toy_analyzer, sample_analyzer):
            for word in words:
                expected = sorted({a.lemma for a in analyzer.analyze(word)})
                assert analyzer.lemmatize(word) == expected


class TestTags:
    def test_nn_identity(self, toy_analyzer):
        assert toy_analyzer.tags_stts("Haus") == {"NN"}
        assert toy_analyzer.tags_ptb("Haus") == {"NN"}

    def test_gegangen_tagsets(self, toy_analyzer):
        assert toy_analyzer.tags_stts("gegangen") == {"ADJA", "ADJD", "VVPP"}
        assert toy_analyzer.tags_ptb("gegangen") == {"JJ", "VBN"}

    def test_untaggable_word_empty(self, toy_analyzer):
        assert toy_analyzer.tags_stts("qqq") == set()
        assert toy_analyzer.tags_ptb("qqq") == set()

    def test_verb_refinements(self, sample_analyzer):
        assert sample_analyzer.tags_stts("machte") == {"VVFIN"}
        assert "VVINF" in sample_analyzer.tags_stts("machen")
        assert sample_analyzer.tags_ptb("gemacht") == {"VBN"}

    def test_missing_category_fails_at_construction(self):
        entries = [DictEntry("blorp", [AnalysisRecord("blorp", Paradigm("XYZ"))])]
        with pytest.raises(TagMapError):
            Analyzer(compile_entries(entries))


class TestIterLexicon:
    def test_byte_order_enumeration(self):
        entries = [
            DictEntry("gegangen", [AnalysisRecord("gehen", Paradigm("V", ("ppast",)))]),
            DictEntry("Rohrohrzucker", [AnalysisRecord("Rohrohrzucker", Paradigm("NN"))]),
        ]
        analyzer = Analyzer(compile_entries(entries))
        assert list(analyzer.iter_lexicon()) == ["Rohrohrzucker", "gegangen"]

    def test_empty_dictionary(self):
        analyzer = Analyzer(compile_entries([]))
        assert list(analyzer.iter_lexicon()) == []

    def test_matches_source_text_oracle(self):
        rng = random.Random(17)
        entries = random_entries(rng, 1000)
        analyzer = Analyzer(compile_entries(entries), enable_tokens=False)
        expected = sorted({e.surface for e in entries}, key=str.encode)
        assert list(analyzer.iter_lexicon()) == expected


class TestStageTrace:
    def test_token_short_circuit_no_dictionary_lookup(self, toy_analyzer):
        results, trace = toy_analyzer.analyze_traced("24.12.2016")
        assert results[0].source == Source.TOKEN_CLASS
        assert trace.productive == "token_class"
        assert trace.dictionary_lookups == 0

    def test_exact_stage_trace(self, toy_analyzer):
        _, trace = toy_analyzer.analyze_traced("gegangen")
        assert trace.productive == "exact"
        assert trace.attempted == ["token_class", "exact"]

    def test_fuzzy_stage_trace(self, toy_analyzer):
        _, trace = toy_analyzer.analyze_traced("grun")
        assert trace.productive == "fuzzy"
        assert "exact" in trace.attempted and "case_variant" in trace.attempted

    def test_guesser_stage_trace(self, toy_analyzer):
        _, trace = toy_analyzer.analyze_traced("brunztest")
        assert trace.productive == "guesser"


@pytest.fixture()
def analyzer_with_experimental(toy_dictionary):
    experimental = compile_entries(
        [
            DictEntry("blubberte", [AnalysisRecord("blubbern", Paradigm("V", ("past", "3per", "sing")))]),
            DictEntry("gegangen", [AnalysisRecord("gegangen", Paradigm("NN", ("masc", "nom", "sing")))]),
        ]
    )
    return Analyzer(toy_dictionary, experimental=experimental)


class TestExperimental:
    def test_experimental_only_word(self, analyzer_with_experimental):
        results = analyzer_with_experimental.analyze("blubberte")
        assert results
        assert {a.source for a in results} == {Source.EXPERIMENTAL}

    def test_experimental_appended_after_main(self, analyzer_with_experimental):
        results = analyzer_with_experimental.analyze("gegangen")
        sources = [a.source for a in results]
        assert sources == [
            Source.LEXICON, Source.LEXICON, Source.LEXICON, Source.EXPERIMENTAL,
        ]

    def test_fuzzy_applies_to_experimental_too(self, toy_dictionary):
        experimental = compile_entries(
            [DictEntry("blübbern", [AnalysisRecord("blübbern", Paradigm("V", ("inf",)))])]
        )
        analyzer = Analyzer(toy_dictionary, experimental=experimental)
        results = analyzer.analyze("blubbern")
        assert results
        assert results[0].source == Source.EXPERIMENTAL
        assert results[0].matched_surface == "blübbern"


class TestToggles:
    def test_no_fuzzy(self, toy_dictionary):
        analyzer = Analyzer(toy_dictionary, enable_fuzzy=False)
        assert analyzer.analyze("grun") == []

    def test_no_guesser(self, toy_dictionary):
        analyzer = Analyzer(toy_dictionary, enable_guesser=False)
        assert analyzer.analyze("brunztest") == []

    def test_no_tokens_falls_through_to_lookup(self, toy_dictionary):
        analyzer = Analyzer(toy_dictionary, enable_tokens=False)
        assert analyzer.analyze("24.12.2016") == []
