"""Command-line surface.

Subcommands wire the analysis pipeline onto system-definition files:
``validate`` checks the document and the system axioms, ``foata`` prints
normal forms, ``min-time`` and ``speedup`` report runtimes of a given
word, ``reach`` searches for the fastest schedule into a target state,
and ``pipeline-gen`` writes a bounded multi-stage pipeline benchmark.

Exit codes: 0 success, 1 domain negative (invalid system, unreachable
target, word not executable), 2 usage or document error, 3 state budget
exceeded.  stdout carries one report item per line in a stable order;
diagnostics go to stderr.
"""

import argparse
import re
import sys

from .errors import (
    MissingDuration,
    StateBudgetExceeded,
    SystemFileError,
    TraceTimeError,
    UnknownState,
)
from .scheduling import min_runtime, parallel_schedule, speedup_report
from .search import DEFAULT_MAX_STATES, bfs_min_time
from .sysfile import SystemFile, dump_document, load_system_file
from .systems import Marking, run_word, validate_axioms
from .traces import foata_form

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _parse_word(text: str, sf: SystemFile) -> tuple[str, ...]:
    """Split a word argument into letters.

    Letters are whitespace- or comma-separated names.  When every alphabet
    name is a single character, an unbroken token is also accepted and read
    character by character, so pipeline words can be written "abcabc".
    """
    tokens = [token for token in re.split(r"[,\s]+", text.strip()) if token]
    compact = all(len(name) == 1 for name in sf.alphabet.letters)
    letters: list[str] = []
    for token in tokens:
        if token in sf.alphabet:
            letters.append(token)
        elif compact:
            letters.extend(token)
        else:
            letters.append(token)  # let check_word report the unknown name
    return sf.alphabet.check_word(letters)


def _parse_state(text: str, sf: SystemFile):
    """A state argument: a state name for explicit systems, or a
    place:count list (for example "src:2,p1:1") for Petri nets."""
    if sf.kind == "explicit":
        if text not in set(sf.system.states):
            raise UnknownState(f"unknown state {text!r}")
        return text
    tokens = [token for token in re.split(r"[,\s]+", text.strip()) if token]
    tokens = [token for token in tokens if token != "(empty)"]
    counts: dict[str, int] = {}
    places = set(sf.system.places)
    for token in tokens:
        place, sep, count = token.rpartition(":")
        if not sep or not count.lstrip("-").isdigit():
            raise UnknownState(f"expected place:count, got {token!r}")
        if place not in places:
            raise UnknownState(f"unknown place {place!r}")
        value = int(count)
        if value < 0:
            raise UnknownState(f"negative count in {token!r}")
        counts[place] = counts.get(place, 0) + value
    return Marking(counts)


def _fmt_pairs(alphabet) -> str:
    pairs = sorted(
        alphabet.independent_pairs,
        key=lambda p: (alphabet.rank(p[0]), alphabet.rank(p[1])),
    )
    return "{" + ", ".join(f"({a},{b})" for a, b in pairs) + "}"


def _require_time(sf: SystemFile):
    if sf.time is None:
        raise MissingDuration('the file declares no "time" member')
    return sf.time


def cmd_validate(args) -> int:
    try:
        sf = load_system_file(args.file)
    except SystemFileError:
        raise
    except TraceTimeError as exc:
        print(f"{type(exc).__name__}: {exc}")
        return EXIT_DOMAIN
    if sf.kind == "petri":
        print(f"independence: {_fmt_pairs(sf.alphabet)}")
        print("ok")
        return EXIT_OK
    report = validate_axioms(sf.system)
    for violation in report.determinism:
        targets = ",".join(str(t) for t in violation.targets)
        print(f"determinism violation: state={violation.state} "
              f"letter={violation.letter} targets=[{targets}]")
    for violation in report.diamond:
        print(f"diamond violation: state={violation.state} "
              f"letters=({violation.first},{violation.second})")
    if not report.ok:
        return EXIT_DOMAIN
    print("ok")
    return EXIT_OK


def cmd_foata(args) -> int:
    sf = load_system_file(args.file)
    word = _parse_word(args.word, sf)
    form = foata_form(word, sf.alphabet)
    if form.steps:
        print(str(form))
    print(f"height: {form.height}")
    return EXIT_OK


def cmd_min_time(args) -> int:
    sf = load_system_file(args.file)
    tau = _require_time(sf)
    word = _parse_word(args.word, sf)
    print(f"t_par: {min_runtime(word, sf.alphabet, tau)}")
    if args.schedule:
        schedule = parallel_schedule(word, sf.alphabet, tau)
        for index, tick in enumerate(schedule.ticks, start=1):
            work = " ".join(f"{entry.letter}({entry.phase})" for entry in tick)
            print(f"t={index}: {work}")
    if args.from_state is not None:
        start = _parse_state(args.from_state, sf)
        reached = run_word(sf.system, start, word)
        if reached is None:
            print(f"word not executable from {args.from_state}")
            return EXIT_DOMAIN
        print(f"reached: {reached}")
    return EXIT_OK


def cmd_reach(args) -> int:
    sf = load_system_file(args.file)
    tau = _require_time(sf)
    target = _parse_state(args.target, sf)
    result = bfs_min_time(sf.system, tau, sf.system.initial, target,
                          max_states=args.max_states)
    if not result.found:
        print("unreachable")
        print(f"explored: {result.explored}")
        return EXIT_DOMAIN
    print(f"time: {result.time}")
    for index, tick in enumerate(result.schedule, start=1):
        print(f"t={index}: {' '.join(tick)}")
    print(f"explored: {result.explored}")
    return EXIT_OK


def cmd_speedup(args) -> int:
    sf = load_system_file(args.file)
    tau = _require_time(sf)
    word = _parse_word(args.word, sf)
    report = speedup_report(word, sf.alphabet, tau)
    print(f"T_1: {report.t_seq}")
    print(f"T_min: {report.t_par}")
    if report.ratio is None:
        print("ratio: n/a")
    else:
        print(f"ratio: {report.ratio} ≈ {float(report.ratio):.4f}")
    return EXIT_OK


def pipeline_document(stages: int, times: list[int], jobs: int) -> dict:
    """A bounded k-stage pipeline: a source place bounds how many jobs
    enter stage 1, inter-stage places hand work along, and a sink place
    collects finished jobs, keeping the state space finite."""
    names = [f"u_{i}" for i in range(1, stages + 1)]
    inner = [f"p_{i}" for i in range(1, stages)]
    places = ["src"] + inner + ["sink"]
    transitions = {}
    for index, name in enumerate(names):
        consume = places[index]
        produce = places[index + 1] if index + 1 < len(places) else "sink"
        transitions[name] = {"consume": {consume: 1}, "produce": {produce: 1}}
    return {
        "alphabet": names,
        "time": {name: tick for name, tick in zip(names, times)},
        "system": {
            "kind": "petri",
            "places": places,
            "initial_marking": {"src": jobs},
            "transitions": transitions,
        },
    }


def cmd_pipeline_gen(args, parser: argparse.ArgumentParser) -> int:
    try:
        times = [int(part) for part in args.times.split(",")]
    except ValueError:
        parser.error("--times must be a comma-separated list of integers")
    if args.stages < 1:
        parser.error("--stages must be at least 1")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    if len(times) != args.stages:
        parser.error("--times must list one duration per stage")
    if any(tick < 1 for tick in times):
        parser.error("stage durations must be positive")
    doc = pipeline_document(args.stages, times, args.jobs)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(dump_document(doc))
    print(f"wrote: {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracetime",
        description="Minimum parallel runtimes and schedules for systems of "
                    "instructions with declared independence and durations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a system file and the system axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("foata", help="print the Foata normal form and height of a word")
    p.add_argument("file")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_foata)

    p = sub.add_parser("min-time", help="minimum parallel runtime of a word")
    p.add_argument("file")
    p.add_argument("--word", required=True)
    p.add_argument("--from", dest="from_state", default=None, metavar="STATE",
                   help="also run the word from this state and report the result")
    p.add_argument("--schedule", action="store_true",
                   help="print the tick-by-tick schedule")
    p.set_defaults(func=cmd_min_time)

    p = sub.add_parser("reach", help="fastest schedule from the initial state to a target")
    p.add_argument("file")
    p.add_argument("--target", required=True,
                   help="state name, or place:count list for Petri systems")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES,
                   help="abort after exploring this many timed states")
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("speedup", help="sequential time, parallel time, and their ratio")
    p.add_argument("file")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_speedup)

    p = sub.add_parser("pipeline-gen", help="write a bounded pipeline benchmark file")
    p.add_argument("--stages", type=int, required=True)
    p.add_argument("--times", required=True, metavar="T1,...,TK")
    p.add_argument("--jobs", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_pipeline_gen, needs_parser=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "needs_parser", False):
            return args.func(args, parser)
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StateBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TraceTimeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
