"""Simulated test-tube bench: labeled strand multisets and the six operations.

A TubeMachine hands out tubes and performs Append, Copy, Merge, Extract,
Detect, and Discard on them, charging one counter tick per call.  Tubes hold
multisets of symbolic strands even when extraction matches on nucleotides; the
tokens are the ground truth the simulator reasons about, and a codeword's base
sequence only ever decides membership, all of which keeps the two match modes
comparable strand for strand.

Physical accounting: Copy pours the source out into its copies (the source
ends empty), Merge pours sources into the destination, Extract pours the
source into its two output tubes, and Discard retires a tube for good.  The
machine tracks the total strand count across live tubes after every operation;
the high-water mark is the run's peak tube size.
"""

from __future__ import annotations

import dataclasses
from collections import Counter
from dataclasses import dataclass

from .codec import Codebook, Codeword, SoundnessError, Strand, render

MATCH_MODES = ("symbolic", "nucleotide")


class MachineFault(RuntimeError):
    """An operation that the bench cannot perform: bad append, retired tube, etc."""


@dataclass
class OpCounter:
    append: int = 0
    copy: int = 0
    merge: int = 0
    extract: int = 0
    detect: int = 0
    discard: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "append": self.append,
            "copy": self.copy,
            "merge": self.merge,
            "extract": self.extract,
            "detect": self.detect,
            "discard": self.discard,
        }

    def snapshot(self) -> "OpCounter":
        return dataclasses.replace(self)


class Tube:
    """A labeled multiset of strands (list-backed; order carries no meaning)."""

    __slots__ = ("label", "contents", "retired")

    def __init__(self, label: str, contents=()):
        self.label = label
        self.contents: list[Strand] = list(contents)
        self.retired = False

    def __len__(self) -> int:
        return len(self.contents)

    def counts(self) -> Counter:
        return Counter(self.contents)

    def to_json(self) -> list[list[list[int]]]:
        """Debug dump: one token-pair list per strand."""
        return [[[v, c] for v, c in strand] for strand in self.contents]

    def __repr__(self):
        state = "retired" if self.retired else f"{len(self.contents)} strands"
        return f"Tube({self.label!r}, {state})"


class TubeMachine:
    """One bench session: creates tubes, runs operations, keeps the books."""

    def __init__(self):
        self.counter = OpCounter()
        self._live_strands = 0
        self.peak_tube_size = 0

    def _credit(self, delta: int) -> None:
        self._live_strands += delta
        if self._live_strands > self.peak_tube_size:
            self.peak_tube_size = self._live_strands

    @staticmethod
    def _require_live(tube: Tube) -> None:
        if tube.retired:
            raise MachineFault(f"tube {tube.label!r} was discarded")

    def new_tube(self, label: str, contents=()) -> Tube:
        tube = Tube(label, contents)
        self._credit(len(tube.contents))
        return tube

    def append(self, tube: Tube, cw: Codeword) -> Tube:
        """Extend every strand in the tube with cw's (vertex, color) token."""
        self._require_live(tube)
        v = cw.vertex
        for s in tube.contents:
            if any(tok[0] == v for tok in s):
                raise MachineFault(f"append: strand already assigns vertex {v}")
        token = (v, cw.color)
        tube.contents = [s + (token,) for s in tube.contents]
        self.counter.append += 1
        return tube

    def copy(self, tube: Tube, count: int) -> list[Tube]:
        """Pour the tube into `count` identical copies; the source ends empty."""
        self._require_live(tube)
        if count < 1:
            raise ValueError(f"copy count must be at least 1, got {count}")
        src = tube.contents
        copies = [Tube(f"{tube.label}#{i}", src) for i in range(1, count + 1)]
        tube.contents = []
        self._credit((count - 1) * len(src))
        self.counter.copy += 1
        return copies

    def merge(self, dest: Tube, sources) -> Tube:
        """Pour every source into dest; sources end empty.  One counter tick."""
        self._require_live(dest)
        for src in sources:
            if src is dest:
                raise MachineFault("merge: tube cannot be merged into itself")
            self._require_live(src)
            dest.contents.extend(src.contents)
            src.contents = []
        self.counter.merge += 1
        return dest

    def extract(
        self,
        tube: Tube,
        cw: Codeword,
        match_mode: str = "symbolic",
        cb: Codebook | None = None,
    ) -> tuple[Tube, Tube]:
        """Partition the tube by cw into (matching, rest); the source ends empty.

        Symbolic mode tests token membership.  Nucleotide mode tests whether
        cw's base sequence occurs in the rendered strand, and is refused unless
        the codebook passed validation, since substring search on an unsafe
        codebook can disagree with token membership.
        """
        self._require_live(tube)
        if match_mode == "symbolic":
            token = (cw.vertex, cw.color)
            plus = [s for s in tube.contents if token in s]
            minus = [s for s in tube.contents if token not in s]
        elif match_mode == "nucleotide":
            if cb is None:
                raise SoundnessError("nucleotide extract needs a codebook")
            if not cb.validation().ok:
                raise SoundnessError("nucleotide extract refused: codebook failed validation")
            seq = cw.sequence
            plus, minus = [], []
            for s in tube.contents:
                (plus if seq in render(s, cb) else minus).append(s)
        else:
            raise ValueError(f"unknown match mode {match_mode!r}")
        tube.contents = []
        self.counter.extract += 1
        return (Tube(f"{tube.label}+", plus), Tube(f"{tube.label}-", minus))

    def detect(self, tube: Tube) -> bool:
        self._require_live(tube)
        self.counter.detect += 1
        return bool(tube.contents)

    def discard(self, tube: Tube) -> None:
        """Drop the tube's contents and retire it; later operations on it fault."""
        self._require_live(tube)
        self._credit(-len(tube.contents))
        tube.contents = []
        tube.retired = True
        self.counter.discard += 1
