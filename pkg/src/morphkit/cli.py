"""Command-line front end.

Subcommands: compile, analyze, lemmatize, tags, stats, bench. The
dictionary argument of the query commands falls back to the MORPHKIT_DICT
environment variable. Exit codes: 0 success, 1 usage, 2 data/parse
errors, 3 I/O errors. Timing output goes to stderr so that stdout stays
byte-identical across runs.
"""

from __future__ import annotations

import json
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import click

from .analyzer import Analyzer
from .cache import AnalysisCache, CacheConfig
from .dictfmt import (
    CompiledDictionary,
    load_dictionary,
    parse_text_dictionary,
    save_dictionary,
    compile_entries,
)
from .errors import MorphkitError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3


@click.group()
def cli():
    """German morphological analysis over compact compiled dictionaries."""


def _load(path: str | None) -> CompiledDictionary:
    if not path:
        raise click.UsageError(
            "no dictionary given (pass a path or set MORPHKIT_DICT)"
        )
    return load_dictionary(path)


def _build_analyzer(dictionary, experimental_path, no_fuzzy, no_guesser) -> Analyzer:
    experimental = load_dictionary(experimental_path) if experimental_path else None
    return Analyzer(
        dictionary,
        experimental=experimental,
        enable_fuzzy=not no_fuzzy,
        enable_guesser=not no_guesser,
    )


def _input_words(words: tuple[str, ...]) -> list[str]:
    if words:
        return list(words)
    return sys.stdin.read().split()


dict_argument = click.argument("dictionary", required=False, envvar="MORPHKIT_DICT")


@cli.command("compile")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("output_path", type=click.Path(dir_okay=False, writable=True))
@click.option("--strict/--lenient", default=True, show_default=True,
              help="Abort on malformed blocks, or skip them with a warning.")
@click.option("--experimental-input", type=click.Path(exists=True, dir_okay=False),
              help="Also compile this text dictionary as the experimental one.")
@click.option("--experimental-output", type=click.Path(dir_okay=False, writable=True),
              help="Where to write the experimental binary (default: OUTPUT.exp).")
def cmd_compile(input_path, output_path, strict, experimental_input, experimental_output):
    """Compile a plain-text dictionary into a binary."""
    with open(input_path, encoding="utf-8") as fh:
        entries = parse_text_dictionary(fh, strict=strict)
    dictionary = compile_entries(entries)
    save_dictionary(dictionary, output_path)
    for name, value in vars(dictionary.stats).items():
        click.echo(f"{name}\t{value}")
    if experimental_input:
        with open(experimental_input, encoding="utf-8") as fh:
            exp_entries = parse_text_dictionary(fh, strict=strict)
        exp = compile_entries(exp_entries)
        save_dictionary(exp, experimental_output or output_path + ".exp")
        for name, value in vars(exp.stats).items():
            click.echo(f"experimental_{name}\t{value}")


@cli.command("analyze")
@dict_argument
@click.argument("words", nargs=-1)
@click.option("--format", "fmt", type=click.Choice(["tsv", "jsonl"]), default="tsv",
              show_default=True)
@click.option("--no-fuzzy", is_flag=True, help="Disable the replacement-map stage.")
@click.option("--no-guesser", is_flag=True, help="Disable the suffix guesser.")
@click.option("--cache", "cache_size", type=int, default=0,
              help="LRU-cache analyses (0 disables).")
@click.option("--experimental", "experimental_path",
              type=click.Path(exists=True, dir_okay=False),
              help="Also consult this experimental dictionary.")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Analyze stdin tokens with this many threads, keeping order.")
def cmd_analyze(dictionary, words, fmt, no_fuzzy, no_guesser, cache_size,
                experimental_path, jobs):
    """Analyze words from the command line or stdin."""
    analyzer = _build_analyzer(_load(dictionary), experimental_path, no_fuzzy, no_guesser)
    tokens = _input_words(words)

    def analyze_one(word: str):
        return analyzer.analyze_traced(word)

    if cache_size > 0:
        cache = AnalysisCache(CacheConfig(capacity=cache_size))
        run = lambda w: cache.get_or_compute(w, analyze_one)
    else:
        run = analyze_one

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run, tokens))
    else:
        outcomes = [run(w) for w in tokens]

    for word, (analyses, trace) in zip(tokens, outcomes):
        if fmt == "tsv":
            for analysis in analyses:
                click.echo(analysis.tsv_row(word))
        else:
            click.echo(json.dumps({
                "v": 1,
                "word": word,
                "stage": trace.productive,
                "analyses": [
                    {
                        "lemma": a.lemma,
                        "paradigm": a.paradigm.text,
                        "source": a.source.value,
                        "matched_surface": a.matched_surface,
                    }
                    for a in analyses
                ],
            }, ensure_ascii=False))


@cli.command("lemmatize")
@dict_argument
@click.argument("words", nargs=-1)
@click.option("--format", "fmt", type=click.Choice(["tsv", "jsonl"]), default="tsv",
              show_default=True)
def cmd_lemmatize(dictionary, words, fmt):
    """Print the distinct lemmas of each word."""
    analyzer = Analyzer(_load(dictionary))
    for word in _input_words(words):
        lemmas = analyzer.lemmatize(word)
        if fmt == "tsv":
            for lemma in lemmas:
                click.echo(f"{word}\t{lemma}")
        else:
            click.echo(json.dumps({"v": 1, "word": word, "lemmas": lemmas},
                                  ensure_ascii=False))


@cli.command("tags")
@dict_argument
@click.argument("words", nargs=-1)
@click.option("--tagset", type=click.Choice(["stts", "ptb"]), default="stts",
              show_default=True)
@click.option("--format", "fmt", type=click.Choice(["tsv", "jsonl"]), default="tsv",
              show_default=True)
def cmd_tags(dictionary, words, tagset, fmt):
    """Print possible POS tags of each word."""
    analyzer = Analyzer(_load(dictionary))
    lookup = analyzer.tags_stts if tagset == "stts" else analyzer.tags_ptb
    for word in _input_words(words):
        tags = sorted(lookup(word))
        if fmt == "tsv":
            for tag in tags:
                click.echo(f"{word}\t{tag}")
        else:
            click.echo(json.dumps({"v": 1, "word": word, "tagset": tagset,
                                   "tags": tags}, ensure_ascii=False))


@cli.command("stats")
@dict_argument
@click.option("--plot", "plot_path", type=click.Path(dir_okay=False, writable=True),
              help="Render an entries-per-category figure to this file.")
def cmd_stats(dictionary, plot_path):
    """Print the stats block of a compiled dictionary."""
    d = _load(dictionary)
    for name, value in vars(d.stats).items():
        click.echo(f"{name}\t{value}")
    if plot_path:
        from .report import render_stats_figure

        counts: dict[str, int] = {}
        for _, record in d.records():
            category = record.paradigm.category
            counts[category] = counts.get(category, 0) + 1
        render_stats_figure(counts, plot_path)
        click.echo(f"figure\t{plot_path}")


@cli.command("bench")
@dict_argument
@click.argument("wordlist", type=click.Path(exists=True, dir_okay=False))
@click.option("--reps", type=int, default=5, show_default=True)
@click.option("--cache", "cache_size", type=int, default=0,
              help="LRU-cache analyses during the run (0 disables).")
@click.option("--no-fuzzy", is_flag=True)
@click.option("--no-guesser", is_flag=True)
@click.option("--plot", "plot_path", type=click.Path(dir_okay=False, writable=True),
              help="Render a per-repetition throughput figure to this file.")
def cmd_bench(dictionary, wordlist, reps, cache_size, no_fuzzy, no_guesser, plot_path):
    """Measure analysis throughput over a word list.

    Deterministic counts go to stdout; the timing lines go to stderr.
    """
    analyzer = _build_analyzer(_load(dictionary), None, no_fuzzy, no_guesser)
    with open(wordlist, encoding="utf-8") as fh:
        words = fh.read().split()
    if not words:
        raise MorphkitError(f"word list {wordlist} is empty")

    cache = AnalysisCache(CacheConfig(capacity=cache_size)) if cache_size > 0 else None
    rates = []
    total_analyses = 0
    for _ in range(reps):
        if cache is not None:
            cache.clear()
        count = 0
        start = time.perf_counter()
        if cache is not None:
            for word in words:
                count += len(cache.get_or_compute(word, analyzer.analyze))
        else:
            for word in words:
                count += len(analyzer.analyze(word))
        elapsed = time.perf_counter() - start
        rates.append(len(words) / elapsed)
        total_analyses = count

    median = statistics.median(rates)
    click.echo(f"words\t{len(words)}")
    click.echo(f"analyses\t{total_analyses}")
    click.echo(f"reps\t{reps}")
    click.echo(f"words_per_second_median\t{median:.0f}", err=True)
    for i, rate in enumerate(rates, start=1):
        click.echo(f"rep{i}_words_per_second\t{rate:.0f}", err=True)
    try:
        import resource

        peak_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        click.echo(f"peak_rss_kb\t{peak_kb}", err=True)
    except ImportError:
        pass
    if plot_path:
        from .report import render_bench_figure

        render_bench_figure(rates, median, plot_path)
        click.echo(f"figure\t{plot_path}")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except MorphkitError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DATA
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
