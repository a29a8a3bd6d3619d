"""Shared oracles and random-instance generators for the test suite.

The oracles here deliberately avoid the library's algorithms: swap
closures enumerate trace classes directly, the height oracle is an
all-pairs chain DP, the tick oracle is an exhaustive assignment search,
and the reachability oracle is iterative-deepening DFS over tick
sequences.  They only share the micro-step semantics, which is tested on
its own.
"""

import itertools
from functools import lru_cache

import tracetime as tt

ABC = tt.validate_alphabet("abc", [("a", "c")])
PIPE_TAU = {"a": 3, "b": 1, "c": 2}


def pipeline_net(jobs: int) -> tt.PetriNet:
    """The three-stage pipeline bounded to ``jobs`` items: a source place
    feeds stage a, stages hand work along p1 and p2, finished work lands
    in a sink place."""
    return tt.PetriNet(
        ["src", "p1", "p2", "sink"],
        {
            "a": ({"src": 1}, {"p1": 1}),
            "b": ({"p1": 1}, {"p2": 1}),
            "c": ({"p2": 1}, {"sink": 1}),
        },
        {"src": jobs},
    )


def pipeline_done(jobs: int) -> tt.Marking:
    return tt.Marking({"sink": jobs})


# --- trace oracles ---------------------------------------------------------

def swap_closure(word, alphabet):
    """Every word reachable by swapping adjacent independent letters."""
    word = tuple(word)
    seen = {word}
    frontier = [word]
    while frontier:
        grown = []
        for current in frontier:
            for i in range(len(current) - 1):
                if alphabet.independent(current[i], current[i + 1]):
                    swapped = (
                        current[:i] + (current[i + 1], current[i]) + current[i + 2:]
                    )
                    if swapped not in seen:
                        seen.add(swapped)
                        grown.append(swapped)
        frontier = grown
    return seen


def closure_minimum(closure, alphabet):
    """Least word of a closure under the alphabet's rank order (which is
    declaration order, not name order)."""
    return min(closure, key=lambda w: tuple(alphabet.rank(name) for name in w))


def longest_chain_height(word, alphabet):
    """Length of the longest subsequence whose consecutive occurrences are
    dependent: an all-pairs DP, unlike the per-letter table in the library."""
    word = tuple(word)
    best = [1] * len(word)
    for j in range(len(word)):
        for i in range(j):
            if alphabet.dependent(word[i], word[j]) and best[i] + 1 > best[j]:
                best[j] = best[i] + 1
    return max(best, default=0)


def brute_force_min_ticks(word, alphabet):
    """Minimum tick count over all assignments of occurrences to ticks:
    each tick takes a nonempty pairwise-independent subset of the
    occurrences whose dependent predecessors are already done."""
    word = tuple(word)
    n = len(word)
    if n == 0:
        return 0
    dep = [[alphabet.dependent(word[i], word[j]) for j in range(n)] for i in range(n)]
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def solve(done):
        if done == full:
            return 0
        avail = [
            j
            for j in range(n)
            if not done >> j & 1
            and all(done >> i & 1 for i in range(j) if dep[i][j])
        ]
        best = None
        for bits in range(1, 1 << len(avail)):
            subset = [avail[k] for k in range(len(avail)) if bits >> k & 1]
            if any(
                dep[subset[x]][subset[y]]
                for x in range(len(subset))
                for y in range(x + 1, len(subset))
            ):
                continue
            made = done
            for j in subset:
                made |= 1 << j
            cost = solve(made) + 1
            if best is None or cost < best:
                best = cost
        return best

    return solve(0)


# --- timed-graph oracles ---------------------------------------------------

def tick_moves(state, view, tau):
    """Distinct one-tick successor states, enumerated from scratch:
    candidate letters are those with a defined micro-step, ticks are their
    pairwise-independent combinations."""
    alphabet = view.alphabet
    singles = [
        name
        for name in alphabet.letters
        if tt.micro_step(state, name, view, tau) is not None
    ]
    moves = []
    seen = set()
    for size in range(1, len(singles) + 1):
        for combo in itertools.combinations(singles, size):
            if any(
                alphabet.dependent(x, y) for x, y in itertools.combinations(combo, 2)
            ):
                continue
            current = state
            for name in combo:
                current = tt.micro_step(current, name, view, tau)
                if current is None:
                    break
            if current is not None and current not in seen:
                seen.add(current)
                moves.append(current)
    return moves


def iddfs_min_time(view, tau, source, target, max_depth=12):
    """Shortest tick count by iterative deepening over tick sequences.
    States already on the current path are skipped: a shortest sequence
    never revisits a state.  None when no sequence of length <= max_depth
    reaches the target."""
    start = tt.embed(source)
    goal = tt.embed(target)
    if start == goal:
        return 0

    def dfs(state, remaining, on_path):
        if remaining == 0:
            return state == goal
        if state == goal:
            return False  # a shorter route would have been found at a lower depth
        for nxt in tick_moves(state, view, tau):
            if nxt in on_path:
                continue
            on_path.add(nxt)
            if dfs(nxt, remaining - 1, on_path):
                return True
            on_path.discard(nxt)
        return False

    for depth in range(1, max_depth + 1):
        if dfs(start, depth, {start}):
            return depth
    return None


def layered_distances(view, tau, source, max_depth):
    """Tick distance of every timed state within max_depth of the source,
    by plain frontier expansion over tick_moves."""
    start = tt.embed(source)
    dist = {start: 0}
    frontier = [start]
    for depth in range(1, max_depth + 1):
        grown = []
        for state in frontier:
            for nxt in tick_moves(state, view, tau):
                if nxt not in dist:
                    dist[nxt] = depth
                    grown.append(nxt)
        frontier = grown
        if not frontier:
            break
    return dist


# --- random instances ------------------------------------------------------

def random_alphabet(rng, max_letters=5, pair_density=0.4):
    count = rng.randint(1, max_letters)
    letters = list("abcdefgh"[:count])
    rng.shuffle(letters)
    pairs = [
        pair
        for pair in itertools.combinations(letters, 2)
        if rng.random() < pair_density
    ]
    return tt.validate_alphabet(letters, pairs)


def random_word(rng, alphabet, max_len=10, min_len=0):
    length = rng.randint(min_len, max_len)
    return tuple(rng.choice(alphabet.letters) for _ in range(length))


def random_tau(rng, alphabet, max_ticks=3):
    return {name: rng.randint(1, max_ticks) for name in alphabet.letters}


def random_petri(rng, max_places=5, max_transitions=4, max_tokens=3):
    places = [f"p{i}" for i in range(rng.randint(2, max_places))]
    transitions = {}
    for i in range(rng.randint(1, max_transitions)):
        consume = {place: 1 for place in rng.sample(places, rng.randint(1, min(2, len(places))))}
        produce = {place: 1 for place in rng.sample(places, rng.randint(0, min(2, len(places))))}
        transitions[f"t{i}"] = (consume, produce)
    marking = {}
    for _ in range(rng.randint(1, max_tokens)):
        place = rng.choice(places)
        marking[place] = marking.get(place, 0) + 1
    return tt.PetriNet(places, transitions, marking)


def random_petri_explicit(rng, max_states=25, **kwargs):
    """A validated explicit system obtained by bounding a random net."""
    while True:
        net = random_petri(rng, **kwargs)
        try:
            system = tt.as_explicit(net, max_states)
        except tt.StateBudgetExceeded:
            continue
        if len(system.states) >= 2:
            return system


def random_valid_explicit(rng, max_states=8, max_letters=4, pair_density=0.3,
                          density=0.5, require_witness=False):
    """A random deterministic transition table that passes the axiom check.
    With ``require_witness`` the system must run some independent pair in
    sequence somewhere, so a diamond can be broken by mutation."""
    while True:
        count = rng.randint(2, max_letters)
        letters = list("abcd"[:count])
        pairs = [
            pair
            for pair in itertools.combinations(letters, 2)
            if rng.random() < pair_density
        ]
        alphabet = tt.validate_alphabet(letters, pairs)
        states = [f"s{i}" for i in range(rng.randint(2, max_states))]
        triples = [
            (src, letter, rng.choice(states))
            for src in states
            for letter in letters
            if rng.random() < density
        ]
        system = tt.ExplicitSystem(alphabet, states, states[0], triples)
        if not tt.validate_axioms(system).ok:
            continue
        if require_witness and not diamond_witnesses(system):
            continue
        return system


def diamond_witnesses(system):
    """Triples (state, a, b) with (a, b) independent and state.a.b defined."""
    alphabet = system.alphabet
    found = []
    for state in system.states:
        for a, b in alphabet.independent_pairs:
            for first, second in ((a, b), (b, a)):
                if tt.run_word(system, state, (first, second)) is not None:
                    found.append((state, first, second))
    return found


def random_runnable_word(rng, system, max_len=8):
    """A word generated by walking enabled letters, so run_word is defined."""
    state = system.initial
    word = []
    for _ in range(rng.randint(0, max_len)):
        enabled = [
            letter
            for letter in system.alphabet.letters
            if system.step(state, letter) is not None
        ]
        if not enabled:
            break
        letter = rng.choice(enabled)
        word.append(letter)
        state = system.step(state, letter)
    return tuple(word)
