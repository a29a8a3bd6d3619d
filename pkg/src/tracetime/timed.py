"""Integer durations and the micro-step semantics they induce.

A duration function assigns each instruction a positive number of ticks.
Expanding a word replaces each occurrence by that many unit-time copies,
which reduces timed questions to Foata analysis.  On the state side, a
timed state pairs a base state with the instructions currently in flight
and their progress; one micro-step is one tick of work on one
instruction.  Starting requires independence from everything in flight,
and an instruction that reaches its full duration folds into the base
state immediately, so only strictly partial progress is ever stored.
"""

from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

from .errors import InvalidDuration, MissingDuration, UndefinedCompletion, UnknownLetter
from .systems import State, SystemView, run_word
from .traces import IndependenceAlphabet, Trace, Word, trace_of

Durations = Mapping[str, int]


def duration(tau: Durations, letter: str) -> int:
    """Look up a duration, insisting it is a positive integer."""
    try:
        value = tau[letter]
    except KeyError:
        raise MissingDuration(f"no duration for letter {letter!r}") from None
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidDuration(f"duration of {letter!r} must be a positive integer, got {value!r}")
    return value


class TimeFunction:
    """Durations validated against an alphabet: full coverage, no foreign
    letters, every value at least one tick."""

    __slots__ = ("_durations", "_alphabet")

    def __init__(self, durations: Durations, alphabet: IndependenceAlphabet):
        checked = {}
        for letter, value in durations.items():
            if letter not in alphabet:
                raise UnknownLetter(f"duration given for unknown letter {letter!r}")
            checked[letter] = duration(durations, letter)
        for letter in alphabet.letters:
            if letter not in checked:
                raise MissingDuration(f"no duration for letter {letter!r}")
        self._durations = checked
        self._alphabet = alphabet

    @property
    def alphabet(self) -> IndependenceAlphabet:
        return self._alphabet

    def __getitem__(self, letter: str) -> int:
        try:
            return self._durations[letter]
        except KeyError:
            raise MissingDuration(f"no duration for letter {letter!r}") from None

    def __contains__(self, letter: str) -> bool:
        return letter in self._durations

    def as_dict(self) -> dict[str, int]:
        return dict(self._durations)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeFunction):
            return NotImplemented
        return self._durations == other._durations and self._alphabet == other._alphabet

    def __hash__(self) -> int:
        return hash((tuple(sorted(self._durations.items())), self._alphabet))

    def __repr__(self) -> str:
        return f"TimeFunction({self._durations!r})"


def expand_word(word: Sequence[str], tau: Durations) -> Word:
    """Replace each occurrence e by duration(e) consecutive copies of e."""
    return tuple(name for name in word for _ in range(duration(tau, name)))


def expand_trace(trace: Trace, tau: Durations) -> Trace:
    """The trace of the expanded representative.  This is a monoid
    homomorphism, so the choice of representative does not matter."""
    return trace_of(expand_word(trace.canonical, tau), trace.alphabet)


@dataclass(frozen=True)
class TimedState:
    """A base state plus in-flight instructions with partial progress.

    Entries are (letter, progress) with 1 <= progress < duration(letter),
    kept sorted by alphabet rank; the letters are pairwise independent and
    the base state can run all of them to completion.
    """

    base: Any
    in_flight: tuple[tuple[str, int], ...] = ()

    def letters(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.in_flight)

    def progress_of(self, letter: str) -> int | None:
        for name, progress in self.in_flight:
            if name == letter:
                return progress
        return None

    def __str__(self) -> str:
        flight = " ".join(f"{name}+{progress}" for name, progress in self.in_flight)
        return f"({self.base}; {flight})" if flight else f"({self.base})"


def embed(state: State) -> TimedState:
    """A plain state viewed as a timed state with nothing in flight."""
    return TimedState(state, ())


def normalize(
    base: State,
    raw_in_flight: Iterable[tuple[str, int]],
    view: SystemView,
    tau: Durations,
) -> TimedState:
    """Bring raw (letter, progress) entries into normal form.

    Entries at progress zero are dropped (nothing has happened yet) and
    entries at full duration fold into the base state by actually running
    the letter.  Folding order cannot matter on a valid system because the
    in-flight letters are pairwise independent; we fold in alphabet order.

    Raises UndefinedCompletion when the base state cannot absorb a
    completed letter or cannot run the remaining ones, which only happens
    for corrupted input or a system violating the commutation axioms.
    """
    alphabet = view.alphabet
    cleaned = []
    for name, progress in raw_in_flight:
        if name not in alphabet:
            raise UnknownLetter(f"unknown letter {name!r}")
        full = duration(tau, name)
        if not 0 <= progress <= full:
            raise ValueError(f"progress {progress} out of range 0..{full} for {name!r}")
        if progress > 0:
            cleaned.append((name, progress, full))
    cleaned.sort(key=lambda entry: alphabet.rank(entry[0]))
    for i, (a, _, _) in enumerate(cleaned):
        for b, _, _ in cleaned[i + 1:]:
            if alphabet.dependent(a, b):
                raise ValueError(f"in-flight letters {a!r} and {b!r} are not independent")
    folded = base
    keep = []
    for name, progress, full in cleaned:
        if progress == full:
            folded = view.step(folded, name)
            if folded is None:
                raise UndefinedCompletion(f"base state cannot absorb completed {name!r}")
        else:
            keep.append((name, progress))
    if run_word(view, folded, [name for name, _ in keep]) is None:
        raise UndefinedCompletion("base state cannot complete the remaining in-flight letters")
    return TimedState(folded, tuple(keep))


def micro_step(state: TimedState, letter: str, view: SystemView, tau: Durations) -> TimedState | None:
    """One tick of work on one instruction; None when the action is undefined.

    An in-flight letter advances by one tick (and folds into the base on
    its final tick).  A fresh letter may start when it is independent of
    everything in flight and the base state could run the whole enlarged
    in-flight set; a one-tick letter completes the moment it starts.
    """
    alphabet = view.alphabet
    if letter not in alphabet:
        raise UnknownLetter(f"unknown letter {letter!r}")
    names = state.letters()
    if letter in names:
        bumped = tuple(
            (name, progress + 1 if name == letter else progress)
            for name, progress in state.in_flight
        )
        return normalize(state.base, bumped, view, tau)
    if any(alphabet.dependent(letter, name) for name in names):
        return None
    enlarged = alphabet.sort_letters(names + (letter,))
    if run_word(view, state.base, enlarged) is None:
        return None
    return normalize(state.base, state.in_flight + ((letter, 1),), view, tau)


def run_micro_word(
    state: TimedState, word: Sequence[str], view: SystemView, tau: Durations
) -> TimedState | None:
    """Left fold of micro_step; None on the first undefined step."""
    word = view.alphabet.check_word(word)
    current = state
    for letter in word:
        current = micro_step(current, letter, view, tau)
        if current is None:
            return None
    return current
