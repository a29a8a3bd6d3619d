"""Words, traces, and Foata normal forms over an independence alphabet.

A trace is the equivalence class of a word under swaps of adjacent
independent letters.  Every trace is stored through its canonical
representative (the lexicographically least word in the class, with the
letter order taken from the alphabet's declaration order), so trace
equality is a plain sequence comparison.  The Foata normal form groups a
word into the fewest possible steps of pairwise-independent letters; its
height is the minimum number of unit-time parallel rounds needed to
execute the word.

All types here are immutable values and all functions are pure.
"""

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AlphabetMismatch, DuplicateLetter, ReflexivePair, UnknownLetter

Word = tuple[str, ...]


class IndependenceAlphabet:
    """A totally ordered set of instruction names plus an irreflexive
    symmetric independence relation between them.

    The declaration order of ``letters`` fixes the total order used by
    canonical forms and schedules; it is deliberately unrelated to the
    lexicographic order of the names themselves.  Pairs are normalized to
    unordered form: declaring ``(a, c)`` makes ``(c, a)`` independent too.
    """

    __slots__ = ("_letters", "_rank", "_pairs")

    def __init__(self, letters: Iterable[str], pairs: Iterable[Sequence[str]] = ()):
        letters = tuple(letters)
        rank: dict[str, int] = {}
        for name in letters:
            if name in rank:
                raise DuplicateLetter(f"letter {name!r} declared twice")
            rank[name] = len(rank)
        normalized = set()
        for pair in pairs:
            a, b = pair
            for name in (a, b):
                if name not in rank:
                    raise UnknownLetter(f"independence pair mentions unknown letter {name!r}")
            if a == b:
                raise ReflexivePair(f"pair ({a}, {b}) relates a letter to itself")
            normalized.add((a, b) if rank[a] < rank[b] else (b, a))
        self._letters = letters
        self._rank = rank
        self._pairs = frozenset(normalized)

    @property
    def letters(self) -> Word:
        return self._letters

    @property
    def independent_pairs(self) -> frozenset[tuple[str, str]]:
        """Unordered pairs, stored with the lower-ranked letter first."""
        return self._pairs

    def __contains__(self, name: str) -> bool:
        return name in self._rank

    def __len__(self) -> int:
        return len(self._letters)

    def rank(self, name: str) -> int:
        try:
            return self._rank[name]
        except KeyError:
            raise UnknownLetter(f"unknown letter {name!r}") from None

    def independent(self, a: str, b: str) -> bool:
        ra, rb = self.rank(a), self.rank(b)
        if ra == rb:
            return False
        key = (a, b) if ra < rb else (b, a)
        return key in self._pairs

    def dependent(self, a: str, b: str) -> bool:
        return not self.independent(a, b)

    def check_word(self, word: Sequence[str]) -> Word:
        """Return ``word`` as a tuple, raising UnknownLetter on foreign names."""
        word = tuple(word)
        for name in word:
            if name not in self._rank:
                raise UnknownLetter(f"unknown letter {name!r}")
        return word

    def sort_letters(self, names: Iterable[str]) -> Word:
        return tuple(sorted(names, key=self.rank))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndependenceAlphabet):
            return NotImplemented
        return self._letters == other._letters and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash((self._letters, self._pairs))

    def __repr__(self) -> str:
        pairs = sorted(self._pairs, key=lambda p: (self.rank(p[0]), self.rank(p[1])))
        return f"IndependenceAlphabet({list(self._letters)!r}, {pairs!r})"


def validate_alphabet(letters: Iterable[str], pairs: Iterable[Sequence[str]] = ()) -> IndependenceAlphabet:
    """Build an alphabet, rejecting reflexive pairs, unknown letters, and
    duplicate letter declarations."""
    return IndependenceAlphabet(letters, pairs)


@dataclass(frozen=True)
class Trace:
    """An equivalence class of words, held by its canonical representative."""

    alphabet: IndependenceAlphabet
    canonical: Word

    def __mul__(self, other: "Trace") -> "Trace":
        return trace_concat(self, other)

    def __len__(self) -> int:
        return len(self.canonical)

    def __str__(self) -> str:
        return " ".join(self.canonical) if self.canonical else "(empty)"


def _canonical_word(word: Word, alphabet: IndependenceAlphabet) -> Word:
    """Lexicographically least representative of the trace of ``word``.

    The representatives of a trace are exactly the linear extensions of the
    occurrence order (occurrence i precedes j when i < j in the word and
    their letters are dependent).  Greedily emitting the least-ranked
    available occurrence yields the least extension; occurrences of one
    letter are chained by self-dependence, so ties never arise.
    """
    n = len(word)
    ranks = [alphabet.rank(a) for a in word]
    pending = [0] * n
    succs: list[list[int]] = [[] for _ in range(n)]
    for j in range(n):
        for i in range(j):
            if alphabet.dependent(word[i], word[j]):
                pending[j] += 1
                succs[i].append(j)
    heap = [(ranks[j], j) for j in range(n) if pending[j] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, j = heapq.heappop(heap)
        out.append(word[j])
        for k in succs[j]:
            pending[k] -= 1
            if pending[k] == 0:
                heapq.heappush(heap, (ranks[k], k))
    return tuple(out)


def trace_of(word: Sequence[str], alphabet: IndependenceAlphabet) -> Trace:
    """The trace of ``word``: two words yield equal traces iff one can be
    turned into the other by swapping adjacent independent letters."""
    word = alphabet.check_word(word)
    return Trace(alphabet, _canonical_word(word, alphabet))


def trace_concat(t1: Trace, t2: Trace) -> Trace:
    """Concatenation of traces; independent of the chosen representatives."""
    if t1.alphabet != t2.alphabet:
        raise AlphabetMismatch("traces were built over different alphabets")
    return trace_of(t1.canonical + t2.canonical, t1.alphabet)


def are_parallel(t1: Trace, t2: Trace) -> bool:
    """True iff every letter of one trace is independent of every letter of
    the other.  Vacuously true when either trace is empty."""
    if t1.alphabet != t2.alphabet:
        raise AlphabetMismatch("traces were built over different alphabets")
    alphabet = t1.alphabet
    return all(
        alphabet.independent(a, b)
        for a in set(t1.canonical)
        for b in set(t2.canonical)
    )


@dataclass(frozen=True)
class FoataForm:
    """Steps F_1, ..., F_h of pairwise-independent letters; every letter of
    a step depends on some letter of the previous step.  The height h is
    the step count."""

    alphabet: IndependenceAlphabet
    steps: tuple[frozenset[str], ...]

    @property
    def height(self) -> int:
        return len(self.steps)

    def flatten(self) -> Word:
        """One representative word: steps in order, each step's letters in
        alphabet order.  Trace-equal to the word the form was built from."""
        return tuple(
            name for step in self.steps for name in self.alphabet.sort_letters(step)
        )

    def __str__(self) -> str:
        compact = all(len(name) == 1 for name in self.alphabet.letters)
        sep = "" if compact else " "
        return "".join(
            "[" + sep.join(self.alphabet.sort_letters(step)) + "]" for step in self.steps
        )


def foata_levels(word: Sequence[str], alphabet: IndependenceAlphabet) -> list[int]:
    """Per-occurrence step number: level(j) is one more than the highest
    level among earlier occurrences of letters dependent on letter j (zero
    when there are none).

    Levels of successive occurrences of one letter strictly increase, so a
    per-letter table of the last level seen is enough; O(|word| * |letters|).
    """
    word = alphabet.check_word(word)
    last: dict[str, int] = {}
    levels = []
    for name in word:
        lvl = 1 + max(
            (seen for other, seen in last.items() if alphabet.dependent(other, name)),
            default=0,
        )
        levels.append(lvl)
        last[name] = lvl
    return levels


def foata_form(word: Sequence[str], alphabet: IndependenceAlphabet) -> FoataForm:
    """Foata normal form of the trace of ``word``."""
    word = alphabet.check_word(word)
    levels = foata_levels(word, alphabet)
    height = max(levels, default=0)
    groups: list[set[str]] = [set() for _ in range(height)]
    for name, lvl in zip(word, levels):
        groups[lvl - 1].add(name)
    return FoataForm(alphabet, tuple(frozenset(g) for g in groups))


def foata_height(word: Sequence[str], alphabet: IndependenceAlphabet) -> int:
    """Number of Foata steps: the minimum parallel runtime of the word when
    every letter takes one tick."""
    return max(foata_levels(word, alphabet), default=0)
