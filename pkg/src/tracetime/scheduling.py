"""Minimum runtime of a fixed instruction sequence and the tick-by-tick
parallel schedule that realizes it.

The minimum number of ticks needed to run a word, given per-instruction
durations and an independence relation, is the Foata height of the
expanded word (each occurrence replaced by its duration in unit copies).
The Foata steps of that expansion, annotated with which tick starts,
continues, or completes each source occurrence, are the schedule itself.
Everything here is monoid-level: no system or start state is involved,
and whether the word actually runs from a given state is a separate
``run_word`` question.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .timed import Durations, duration
from .traces import IndependenceAlphabet, foata_levels


@dataclass(frozen=True)
class TickEntry:
    """One tick of work on one source occurrence.

    ``source_index`` is the position of the owning occurrence in the input
    word.  The first tick of an occurrence is a start and its last a
    completion; a one-tick occurrence is both at once.
    """

    letter: str
    source_index: int
    starts: bool
    completes: bool

    @property
    def phase(self) -> str:
        if self.starts and self.completes:
            return "start+complete"
        if self.starts:
            return "start"
        if self.completes:
            return "complete"
        return "run"


@dataclass(frozen=True)
class TickSchedule:
    """Ticks of pairwise-independent work; the tick count is the makespan."""

    alphabet: IndependenceAlphabet
    ticks: tuple[tuple[TickEntry, ...], ...]

    @property
    def makespan(self) -> int:
        return len(self.ticks)

    def letters_at(self, tick_index: int) -> tuple[str, ...]:
        return tuple(entry.letter for entry in self.ticks[tick_index])


def min_runtime(word: Sequence[str], alphabet: IndependenceAlphabet, tau: Durations) -> int:
    """Fewest ticks in which the word's trace can be executed."""
    word = alphabet.check_word(word)
    expanded = tuple(name for name in word for _ in range(duration(tau, name)))
    return max(foata_levels(expanded, alphabet), default=0)


def sequential_runtime(word: Sequence[str], tau: Durations) -> int:
    """Total ticks when everything runs one after the other."""
    return sum(duration(tau, name) for name in word)


def parallel_schedule(
    word: Sequence[str], alphabet: IndependenceAlphabet, tau: Durations
) -> TickSchedule:
    """The minimum-makespan schedule: tick k holds the letters of Foata
    step k of the expanded word, each attributed to its source occurrence.

    Attribution is by block structure: the copies of one occurrence sit
    consecutively in the expansion, and copies of one letter serialize, so
    the k-th group of duration(e) copies of e belongs to the k-th
    occurrence of e in the input word regardless of representative.
    """
    word = alphabet.check_word(word)
    expanded: list[str] = []
    tags: list[tuple[int, int, int]] = []  # (source index, copy number, full duration)
    for index, name in enumerate(word):
        full = duration(tau, name)
        for copy in range(1, full + 1):
            expanded.append(name)
            tags.append((index, copy, full))
    levels = foata_levels(expanded, alphabet)
    height = max(levels, default=0)
    groups: list[list[TickEntry]] = [[] for _ in range(height)]
    for name, level, (index, copy, full) in zip(expanded, levels, tags):
        groups[level - 1].append(
            TickEntry(name, index, starts=copy == 1, completes=copy == full)
        )
    ticks = tuple(
        tuple(sorted(group, key=lambda entry: alphabet.rank(entry.letter)))
        for group in groups
    )
    return TickSchedule(alphabet, ticks)


@dataclass(frozen=True)
class SpeedupReport:
    """Sequential time, minimum parallel time, and their exact ratio.
    ``ratio`` is None for the empty word (0/0 has no meaning)."""

    t_seq: int
    t_par: int
    ratio: Fraction | None

    @property
    def ratio_decimal(self) -> float | None:
        return None if self.ratio is None else float(self.ratio)


def speedup_report(
    word: Sequence[str], alphabet: IndependenceAlphabet, tau: Durations
) -> SpeedupReport:
    word = alphabet.check_word(word)
    t_seq = sequential_runtime(word, tau)
    t_par = min_runtime(word, alphabet, tau)
    ratio = Fraction(t_seq, t_par) if t_par else None
    return SpeedupReport(t_seq, t_par, ratio)
