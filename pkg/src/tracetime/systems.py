"""State spaces with a deterministic partial instruction action.

Two providers: an explicit transition table over named states, and Petri
nets whose states are markings.  A system is *asynchronous* when it is
deterministic and independent instructions commute (the diamond
property); ``validate_axioms`` checks both on a finite explicit system.
Petri nets get their independence relation derived from the structure
(two transitions are independent iff they touch no common place), which
makes the diamond property hold by construction.
"""

from collections import deque
from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Mapping, Protocol, Sequence

from .errors import (
    NondeterministicTransition,
    StateBudgetExceeded,
    UnknownLetter,
    UnknownPlace,
    UnknownState,
    UnknownTransition,
)
from .traces import IndependenceAlphabet

State = Hashable


class SystemView(Protocol):
    """The minimal capability bundle every system exposes: an alphabet, an
    initial state, and a deterministic partial step function."""

    @property
    def alphabet(self) -> IndependenceAlphabet: ...

    @property
    def initial(self) -> State: ...

    def step(self, state: State, letter: str) -> State | None: ...


class ExplicitSystem:
    """A finite transition table.

    Conflicting triples (same state and letter, different targets) are
    accepted at construction so that ``validate_axioms`` can report them;
    stepping through such a pair raises instead of guessing.
    """

    __slots__ = ("_alphabet", "_states", "_initial", "_triples", "_targets")

    def __init__(
        self,
        alphabet: IndependenceAlphabet,
        states: Iterable[State],
        initial: State,
        transitions: Iterable[tuple[State, str, State]],
    ):
        states = tuple(dict.fromkeys(states))
        known = set(states)
        if initial not in known:
            raise UnknownState(f"initial state {initial!r} is not declared")
        triples = []
        targets: dict[tuple[State, str], set[State]] = {}
        for src, letter, dst in transitions:
            if letter not in alphabet:
                raise UnknownLetter(f"transition uses unknown letter {letter!r}")
            for endpoint in (src, dst):
                if endpoint not in known:
                    raise UnknownState(f"transition endpoint {endpoint!r} is not declared")
            triples.append((src, letter, dst))
            targets.setdefault((src, letter), set()).add(dst)
        self._alphabet = alphabet
        self._states = states
        self._initial = initial
        self._triples = frozenset(triples)
        self._targets = {key: tuple(sorted(dsts, key=str)) for key, dsts in targets.items()}

    @property
    def alphabet(self) -> IndependenceAlphabet:
        return self._alphabet

    @property
    def states(self) -> tuple[State, ...]:
        return self._states

    @property
    def initial(self) -> State:
        return self._initial

    @property
    def transitions(self) -> frozenset[tuple[State, str, State]]:
        return self._triples

    def targets(self, state: State, letter: str) -> tuple[State, ...]:
        return self._targets.get((state, letter), ())

    def step(self, state: State, letter: str) -> State | None:
        if letter not in self._alphabet:
            raise UnknownLetter(f"unknown letter {letter!r}")
        found = self._targets.get((state, letter))
        if found is None:
            return None
        if len(found) > 1:
            raise NondeterministicTransition(
                f"state {state!r} has {len(found)} targets under {letter!r}"
            )
        return found[0]

    def __repr__(self) -> str:
        return (
            f"ExplicitSystem({len(self._states)} states, "
            f"{len(self._triples)} transitions, initial={self._initial!r})"
        )


class Marking:
    """An immutable token count per place; absent places hold zero."""

    __slots__ = ("_items",)

    def __init__(self, tokens: Mapping[str, int] = ()):
        items = []
        for place, count in sorted(dict(tokens).items()):
            if not isinstance(count, int) or isinstance(count, bool) or count < 0:
                raise ValueError(f"token count for {place!r} must be a nonnegative integer")
            if count:
                items.append((place, count))
        self._items = tuple(items)

    @property
    def tokens(self) -> dict[str, int]:
        return dict(self._items)

    def get(self, place: str) -> int:
        for name, count in self._items:
            if name == place:
                return count
        return 0

    def total(self) -> int:
        return sum(count for _, count in self._items)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Marking):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __str__(self) -> str:
        if not self._items:
            return "(empty)"
        return " ".join(f"{place}:{count}" for place, count in self._items)

    def __repr__(self) -> str:
        return f"Marking({dict(self._items)!r})"


def _check_arcs(arcs: Mapping[str, int], places: set[str], owner: str) -> dict[str, int]:
    checked = {}
    for place, weight in arcs.items():
        if place not in places:
            raise UnknownPlace(f"transition {owner!r} references unknown place {place!r}")
        if not isinstance(weight, int) or isinstance(weight, bool) or weight < 1:
            raise ValueError(f"arc weight for {owner!r} at {place!r} must be a positive integer")
        checked[place] = weight
    return checked


class PetriNet:
    """Places, transitions with consume/produce arc weights, and an initial
    marking.  The independence relation is always derived from the
    structure; callers cannot supply their own."""

    __slots__ = ("_places", "_transitions", "_initial", "_alphabet", "_touched")

    def __init__(
        self,
        places: Iterable[str],
        transitions: Mapping[str, tuple[Mapping[str, int], Mapping[str, int]]],
        initial_marking: Mapping[str, int] = (),
        letter_order: Sequence[str] | None = None,
    ):
        places = tuple(places)
        if len(set(places)) != len(places):
            raise ValueError("duplicate place name")
        place_set = set(places)
        names = tuple(letter_order) if letter_order is not None else tuple(transitions)
        if set(names) != set(transitions) or len(set(names)) != len(names):
            raise UnknownTransition("letter order must list each declared transition exactly once")
        checked: dict[str, tuple[dict[str, int], dict[str, int]]] = {}
        touched: dict[str, frozenset[str]] = {}
        for name in names:
            consume, produce = transitions[name]
            consume = _check_arcs(consume, place_set, name)
            produce = _check_arcs(produce, place_set, name)
            checked[name] = (consume, produce)
            touched[name] = frozenset(consume) | frozenset(produce)
        initial = Marking(dict(initial_marking))
        for place in initial.tokens:
            if place not in place_set:
                raise UnknownPlace(f"initial marking references unknown place {place!r}")
        pairs = [
            (a, b)
            for i, a in enumerate(names)
            for b in names[i + 1:]
            if not (touched[a] & touched[b])
        ]
        self._places = places
        self._transitions = checked
        self._initial = initial
        self._touched = touched
        self._alphabet = IndependenceAlphabet(names, pairs)

    @property
    def alphabet(self) -> IndependenceAlphabet:
        return self._alphabet

    @property
    def places(self) -> tuple[str, ...]:
        return self._places

    @property
    def transitions(self) -> dict[str, tuple[dict[str, int], dict[str, int]]]:
        return {name: (dict(c), dict(p)) for name, (c, p) in self._transitions.items()}

    @property
    def initial(self) -> Marking:
        return self._initial

    def touched(self, name: str) -> frozenset[str]:
        """All places read or written by the transition."""
        if name not in self._transitions:
            raise UnknownTransition(f"unknown transition {name!r}")
        return self._touched[name]

    def step(self, state: Marking, letter: str) -> Marking | None:
        return petri_step(self, state, letter)

    def __repr__(self) -> str:
        return f"PetriNet({len(self._places)} places, {len(self._transitions)} transitions)"


def petri_independence(net: PetriNet) -> frozenset[tuple[str, str]]:
    """Unordered pairs of transitions whose touched place sets are disjoint."""
    return net.alphabet.independent_pairs


def petri_step(net: PetriNet, marking: Marking, transition: str) -> Marking | None:
    """Fire a transition: defined iff the marking covers the consume weights;
    the result is marking - consume + produce."""
    if transition not in net._transitions:
        raise UnknownTransition(f"unknown transition {transition!r}")
    consume, produce = net._transitions[transition]
    tokens = marking.tokens
    for place, weight in consume.items():
        if tokens.get(place, 0) < weight:
            return None
    for place, weight in consume.items():
        tokens[place] = tokens[place] - weight
    for place, weight in produce.items():
        tokens[place] = tokens.get(place, 0) + weight
    return Marking(tokens)


def run_word(view: SystemView, start_state: State, word: Sequence[str]) -> State | None:
    """Left-to-right action of a word; None as soon as a step is undefined.
    On a valid asynchronous system the result depends only on the trace of
    the word, not on the representative."""
    word = view.alphabet.check_word(word)
    state = start_state
    for letter in word:
        state = view.step(state, letter)
        if state is None:
            return None
    return state


@dataclass(frozen=True)
class DeterminismViolation:
    state: Any
    letter: str
    targets: tuple


@dataclass(frozen=True)
class DiamondViolation:
    """(first, second) are independent and run in sequence from ``state``,
    but running second first cannot be completed to the same endpoint."""

    state: Any
    first: str
    second: str


@dataclass(frozen=True)
class AxiomReport:
    determinism: tuple[DeterminismViolation, ...]
    diamond: tuple[DiamondViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.determinism and not self.diamond


def validate_axioms(system: ExplicitSystem) -> AxiomReport:
    """Check the two asynchronous-system conditions on a finite explicit
    system: at most one target per (state, letter), and commutation of
    independent letters wherever both runs are started.

    Violations are report entries, never exceptions, so broken systems can
    be inspected.  On systems that are already nondeterministic the diamond
    check quantifies over all targets.
    """
    alphabet = system.alphabet
    determinism = [
        DeterminismViolation(state, letter, targets)
        for (state, letter), targets in sorted(
            system._targets.items(), key=lambda item: (str(item[0][0]), alphabet.rank(item[0][1]))
        )
        if len(targets) > 1
    ]
    ordered_pairs = sorted(
        (
            pair
            for unordered in alphabet.independent_pairs
            for pair in (unordered, unordered[::-1])
        ),
        key=lambda p: (alphabet.rank(p[0]), alphabet.rank(p[1])),
    )
    diamond = []
    for state in system.states:
        for a, b in ordered_pairs:
            broken = False
            for sa in system.targets(state, a):
                for sab in system.targets(sa, b):
                    closes = any(
                        sab in system.targets(sb, a) for sb in system.targets(state, b)
                    )
                    if not closes:
                        broken = True
            if broken:
                diamond.append(DiamondViolation(state, a, b))
    return AxiomReport(tuple(determinism), tuple(diamond))


def as_explicit(view: SystemView, max_states: int) -> ExplicitSystem:
    """Materialize the part of a system reachable from its initial state as
    an explicit transition table.  Raises StateBudgetExceeded instead of
    silently truncating when more than ``max_states`` states are reachable."""
    alphabet = view.alphabet
    seen: dict[State, None] = {view.initial: None}
    triples: list[tuple[State, str, State]] = []
    queue = deque([view.initial])
    while queue:
        state = queue.popleft()
        for letter in alphabet.letters:
            nxt = view.step(state, letter)
            if nxt is None:
                continue
            triples.append((state, letter, nxt))
            if nxt not in seen:
                if len(seen) >= max_states:
                    raise StateBudgetExceeded(
                        f"more than {max_states} reachable states"
                    )
                seen[nxt] = None
                queue.append(nxt)
    return ExplicitSystem(alphabet, tuple(seen), view.initial, triples)
