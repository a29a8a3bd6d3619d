"""Shortest parallel schedule to a target state, over all instruction
orders.

Timed states form a directed graph: one edge per tick, where a tick is a
nonempty set of pairwise-independent letters each doing one micro-step
(advancing an in-flight instruction or starting a fresh one).  All edges
have length one, so breadth-first search from the embedded source finds
the minimum number of ticks to reach the embedded target, and the
predecessor links give back an explicit schedule.
"""

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import StateBudgetExceeded, TargetNotReached
from .systems import State, SystemView
from .timed import Durations, TimedState, embed, micro_step

Tick = tuple[str, ...]

DEFAULT_MAX_STATES = 1_000_000


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a shortest-schedule search.  ``time`` is None when the
    target is unreachable; ``explored`` counts distinct timed states seen."""

    found: bool
    time: int | None
    schedule: tuple[Tick, ...]
    explored: int


def successors(
    state: TimedState, view: SystemView, tau: Durations, maximal_only: bool = False
) -> list[tuple[Tick, TimedState]]:
    """All one-tick moves from a timed state.

    Candidates are the in-flight letters (one more tick of work) plus every
    startable letter (independent of all in-flight work and well-formed to
    begin).  A tick is any nonempty pairwise-independent subset of the
    candidates whose letters apply in sequence; each intermediate
    micro-step must be defined.  The pairwise check is not redundant: a
    one-tick candidate folds into the base as soon as it is applied, after
    which a dependent letter would no longer be blocked.

    Ticks come out in ascending bitmask order over the rank-sorted
    candidates, which makes downstream searches deterministic.  With
    ``maximal_only`` only ticks not contained in a larger valid tick are
    kept; that is faster but not proven time-optimal for reaching a
    specific state, so it is off by default.
    """
    alphabet = view.alphabet
    in_flight = state.letters()
    startable = []
    for name in alphabet.letters:
        if name in in_flight:
            continue
        if any(alphabet.dependent(name, other) for other in in_flight):
            continue
        if micro_step(state, name, view, tau) is not None:
            startable.append(name)
    candidates = alphabet.sort_letters(in_flight + tuple(startable))
    count = len(candidates)
    independent = [
        [i != j and alphabet.independent(candidates[i], candidates[j]) for j in range(count)]
        for i in range(count)
    ]
    found: list[tuple[Tick, TimedState]] = []
    for mask in range(1, 1 << count):
        chosen = [i for i in range(count) if mask >> i & 1]
        if any(
            not independent[i][j] for k, i in enumerate(chosen) for j in chosen[k + 1:]
        ):
            continue
        current: TimedState | None = state
        for i in chosen:
            current = micro_step(current, candidates[i], view, tau)
            if current is None:
                break
        if current is not None:
            found.append((tuple(candidates[i] for i in chosen), current))
    if maximal_only:
        letter_sets = [set(tick) for tick, _ in found]
        found = [
            (tick, nxt)
            for (tick, nxt), letters in zip(found, letter_sets)
            if not any(letters < other for other in letter_sets)
        ]
    return found


def reconstruct_schedule(
    predecessors: Mapping[TimedState, tuple[TimedState | None, Tick | None]],
    target_vertex: TimedState,
) -> tuple[Tick, ...]:
    """Walk predecessor links back from the target and reverse them."""
    if target_vertex not in predecessors:
        raise TargetNotReached(f"no predecessor entry for {target_vertex}")
    ticks = []
    current = target_vertex
    while True:
        previous, tick = predecessors[current]
        if previous is None:
            break
        ticks.append(tick)
        current = previous
    return tuple(reversed(ticks))


def bfs_min_time(
    view: SystemView,
    tau: Durations,
    source_state: State,
    target_state: State,
    max_states: int = DEFAULT_MAX_STATES,
    maximal_only: bool = False,
) -> SearchResult:
    """Minimum number of ticks taking the system from source to target,
    plus a schedule realizing it.

    Level-by-level search over timed states starting at the embedded
    source; the embedded target's level is the answer.  Raises
    StateBudgetExceeded once more than ``max_states`` distinct timed states
    would be recorded, so an unbounded state space fails loudly instead of
    hanging.
    """
    source = embed(source_state)
    target = embed(target_state)
    predecessors: dict[TimedState, tuple[TimedState | None, Tick | None]] = {
        source: (None, None)
    }
    if source == target:
        return SearchResult(True, 0, (), 1)
    queue = deque([source])
    while queue:
        current = queue.popleft()
        for tick, nxt in successors(current, view, tau, maximal_only):
            if nxt in predecessors:
                continue
            if len(predecessors) >= max_states:
                raise StateBudgetExceeded(f"search exceeded {max_states} timed states")
            predecessors[nxt] = (current, tick)
            if nxt == target:
                schedule = reconstruct_schedule(predecessors, target)
                return SearchResult(True, len(schedule), schedule, len(predecessors))
            queue.append(nxt)
    return SearchResult(False, None, (), len(predecessors))


def replay_schedule(
    schedule: Sequence[Tick], source_state: State, view: SystemView, tau: Durations
) -> TimedState | None:
    """Apply each tick's letters in order through micro_step; None as soon
    as any step is undefined."""
    current: TimedState | None = embed(source_state)
    for tick in schedule:
        for letter in tick:
            current = micro_step(current, letter, view, tau)
            if current is None:
                return None
    return current
