"""Minimum parallel runtimes and explicit tick schedules for systems of
instructions with a declared independence relation and integer durations.

The trace layer canonicalizes instruction words up to commutation of
independent letters and computes Foata normal forms; the timed layer
expands instructions into unit micro-steps and tracks in-flight progress;
the scheduler turns a fixed word into its fastest tick-by-tick schedule;
and the search layer finds the fastest schedule into a target state over
all instruction orders.
"""

from .errors import (
    AlphabetMismatch,
    DuplicateLetter,
    InvalidDuration,
    MissingDuration,
    NondeterministicTransition,
    ReflexivePair,
    StateBudgetExceeded,
    SystemFileError,
    TargetNotReached,
    TraceTimeError,
    UndefinedCompletion,
    UnknownLetter,
    UnknownPlace,
    UnknownState,
    UnknownTransition,
)
from .scheduling import (
    SpeedupReport,
    TickEntry,
    TickSchedule,
    min_runtime,
    parallel_schedule,
    sequential_runtime,
    speedup_report,
)
from .search import (
    SearchResult,
    Tick,
    bfs_min_time,
    reconstruct_schedule,
    replay_schedule,
    successors,
)
from .sysfile import SystemFile, load_document, load_system_file
from .systems import (
    AxiomReport,
    DeterminismViolation,
    DiamondViolation,
    ExplicitSystem,
    Marking,
    PetriNet,
    SystemView,
    as_explicit,
    petri_independence,
    petri_step,
    run_word,
    validate_axioms,
)
from .timed import (
    TimedState,
    TimeFunction,
    embed,
    expand_trace,
    expand_word,
    micro_step,
    normalize,
    run_micro_word,
)
from .traces import (
    FoataForm,
    IndependenceAlphabet,
    Trace,
    Word,
    are_parallel,
    foata_form,
    foata_height,
    foata_levels,
    trace_concat,
    trace_of,
    validate_alphabet,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatch",
    "AxiomReport",
    "DeterminismViolation",
    "DiamondViolation",
    "DuplicateLetter",
    "ExplicitSystem",
    "FoataForm",
    "IndependenceAlphabet",
    "InvalidDuration",
    "Marking",
    "MissingDuration",
    "NondeterministicTransition",
    "PetriNet",
    "ReflexivePair",
    "SearchResult",
    "SpeedupReport",
    "StateBudgetExceeded",
    "SystemFile",
    "SystemFileError",
    "SystemView",
    "TargetNotReached",
    "Tick",
    "TickEntry",
    "TickSchedule",
    "TimeFunction",
    "TimedState",
    "Trace",
    "TraceTimeError",
    "UndefinedCompletion",
    "UnknownLetter",
    "UnknownPlace",
    "UnknownState",
    "UnknownTransition",
    "Word",
    "are_parallel",
    "as_explicit",
    "bfs_min_time",
    "embed",
    "expand_trace",
    "expand_word",
    "foata_form",
    "foata_height",
    "foata_levels",
    "load_document",
    "load_system_file",
    "micro_step",
    "min_runtime",
    "normalize",
    "parallel_schedule",
    "petri_independence",
    "petri_step",
    "reconstruct_schedule",
    "replay_schedule",
    "run_micro_word",
    "run_word",
    "sequential_runtime",
    "speedup_report",
    "successors",
    "trace_concat",
    "trace_of",
    "validate_alphabet",
    "validate_axioms",
]
