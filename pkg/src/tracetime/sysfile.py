"""Strict JSON document format for systems, independence, and durations.

A document has up to four members:

    alphabet      ordered list of instruction names (the total order)
    independence  list of two-element name lists; required for explicit
                  systems, forbidden for Petri nets (theirs is derived)
    time          optional map name -> positive integer tick count
    system        {"kind": "explicit", ...} or {"kind": "petri", ...}

Unknown members are rejected everywhere and markings must omit
zero-count places, so typos surface as errors instead of silent zeros.
Shape problems raise SystemFileError with the offending path; semantic
problems (unknown letters, reflexive pairs, bad durations) raise the
matching domain error with the path in its message.
"""

import json
from dataclasses import dataclass

from .errors import SystemFileError, UnknownLetter
from .systems import ExplicitSystem, PetriNet
from .timed import TimeFunction
from .traces import IndependenceAlphabet


@dataclass(frozen=True)
class SystemFile:
    """A parsed and validated system document."""

    kind: str
    alphabet: IndependenceAlphabet
    time: TimeFunction | None
    system: ExplicitSystem | PetriNet


def _require_keys(obj: dict, allowed: set[str], required: set[str], path: str) -> None:
    for key in obj:
        if key not in allowed:
            raise SystemFileError(f"unknown member {key!r}", path)
    for key in required:
        if key not in obj:
            raise SystemFileError(f"missing member {key!r}", path)


def _string_list(value, path: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
        raise SystemFileError("expected a list of strings", path)
    return value


def _positive_int(value, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise SystemFileError("expected a positive integer", path)
    return value


def _marking(value, places: set[str], path: str) -> dict[str, int]:
    if not isinstance(value, dict):
        raise SystemFileError("expected an object mapping places to counts", path)
    marking = {}
    for place, count in value.items():
        if place not in places:
            raise SystemFileError(f"unknown place {place!r}", path)
        if not isinstance(count, int) or isinstance(count, bool) or count < 1:
            raise SystemFileError(
                "counts must be positive integers (omit zero-count places)",
                f"{path}.{place}",
            )
        marking[place] = count
    return marking


def _load_explicit(obj: dict, alphabet: IndependenceAlphabet, path: str) -> ExplicitSystem:
    _require_keys(obj, {"kind", "states", "initial", "transitions"},
                  {"kind", "states", "initial", "transitions"}, path)
    states = _string_list(obj["states"], f"{path}.states")
    if len(set(states)) != len(states):
        raise SystemFileError("duplicate state name", f"{path}.states")
    if not isinstance(obj["initial"], str):
        raise SystemFileError("expected a state name", f"{path}.initial")
    if obj["initial"] not in set(states):
        raise SystemFileError(f"initial state {obj['initial']!r} is not declared", f"{path}.initial")
    if not isinstance(obj["transitions"], list):
        raise SystemFileError("expected a list of [state, letter, state] triples",
                              f"{path}.transitions")
    triples = []
    known = set(states)
    for index, entry in enumerate(obj["transitions"]):
        where = f"{path}.transitions[{index}]"
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not all(isinstance(part, str) for part in entry)
        ):
            raise SystemFileError("expected a [state, letter, state] triple", where)
        src, letter, dst = entry
        if src not in known:
            raise SystemFileError(f"unknown state {src!r}", where)
        if dst not in known:
            raise SystemFileError(f"unknown state {dst!r}", where)
        if letter not in alphabet:
            raise UnknownLetter(f"{where}: unknown letter {letter!r}")
        triples.append((src, letter, dst))
    return ExplicitSystem(alphabet, states, obj["initial"], triples)


def _load_petri(obj: dict, letters: list[str], path: str) -> PetriNet:
    _require_keys(obj, {"kind", "places", "initial_marking", "transitions"},
                  {"kind", "places", "initial_marking", "transitions"}, path)
    places = _string_list(obj["places"], f"{path}.places")
    if len(set(places)) != len(places):
        raise SystemFileError("duplicate place name", f"{path}.places")
    place_set = set(places)
    if not isinstance(obj["transitions"], dict):
        raise SystemFileError("expected an object mapping transition names to arcs",
                              f"{path}.transitions")
    if set(obj["transitions"]) != set(letters):
        raise SystemFileError(
            "transition names must match the alphabet exactly", f"{path}.transitions"
        )
    transitions = {}
    for name, arcs in obj["transitions"].items():
        where = f"{path}.transitions.{name}"
        if not isinstance(arcs, dict):
            raise SystemFileError("expected an object with consume and produce", where)
        _require_keys(arcs, {"consume", "produce"}, {"consume", "produce"}, where)
        consume = {}
        for place, weight in _arc_object(arcs["consume"], f"{where}.consume").items():
            if place not in place_set:
                raise SystemFileError(f"unknown place {place!r}", f"{where}.consume")
            consume[place] = weight
        produce = {}
        for place, weight in _arc_object(arcs["produce"], f"{where}.produce").items():
            if place not in place_set:
                raise SystemFileError(f"unknown place {place!r}", f"{where}.produce")
            produce[place] = weight
        transitions[name] = (consume, produce)
    marking = _marking(obj["initial_marking"], place_set, f"{path}.initial_marking")
    return PetriNet(places, transitions, marking, letter_order=letters)


def _arc_object(value, path: str) -> dict[str, int]:
    if not isinstance(value, dict):
        raise SystemFileError("expected an object mapping places to weights", path)
    return {place: _positive_int(weight, f"{path}.{place}") for place, weight in value.items()}


def load_document(doc) -> SystemFile:
    """Validate a parsed JSON document and build the library objects."""
    if not isinstance(doc, dict):
        raise SystemFileError("document root must be an object")
    _require_keys(doc, {"alphabet", "independence", "time", "system"},
                  {"alphabet", "system"}, "document")
    letters = _string_list(doc["alphabet"], "alphabet")
    system_obj = doc["system"]
    if not isinstance(system_obj, dict):
        raise SystemFileError("expected an object", "system")
    kind = system_obj.get("kind")
    if kind not in ("explicit", "petri"):
        raise SystemFileError('kind must be "explicit" or "petri"', "system.kind")

    if kind == "petri":
        if "independence" in doc:
            raise SystemFileError(
                "Petri systems derive independence from shared places; "
                "an explicit relation is not accepted",
                "independence",
            )
        system = _load_petri(system_obj, letters, "system")
        alphabet = system.alphabet
    else:
        if "independence" not in doc:
            raise SystemFileError("explicit systems must declare independence", "independence")
        if not isinstance(doc["independence"], list):
            raise SystemFileError("expected a list of two-element name lists", "independence")
        pairs = []
        for index, pair in enumerate(doc["independence"]):
            if not isinstance(pair, list) or len(pair) != 2 or not all(
                isinstance(part, str) for part in pair
            ):
                raise SystemFileError("expected a two-element name list",
                                      f"independence[{index}]")
            pairs.append((pair[0], pair[1]))
        alphabet = IndependenceAlphabet(letters, pairs)
        system = _load_explicit(system_obj, alphabet, "system")

    time = None
    if "time" in doc:
        if not isinstance(doc["time"], dict):
            raise SystemFileError("expected an object mapping letters to tick counts", "time")
        for letter, value in doc["time"].items():
            if not isinstance(value, int) or isinstance(value, bool):
                raise SystemFileError("tick counts must be integers", f"time.{letter}")
        time = TimeFunction(doc["time"], alphabet)
    return SystemFile(kind, alphabet, time, system)


def load_system_file(path) -> SystemFile:
    """Read and validate a system document from a JSON file."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemFileError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    return load_document(doc)


def dump_document(doc: dict) -> str:
    """Serialize a document dict with stable formatting (construction order
    is preserved, so identical inputs give byte-identical output)."""
    return json.dumps(doc, indent=2) + "\n"
