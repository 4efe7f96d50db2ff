"""Permutations on {0..r-1} in one-line form, with cycle machinery.

Everything internal is 0-indexed: a Permutation stores the tuple images with
images[i] = sigma(i).  Human-facing cycle notation is 1-indexed with fixed
points written out, e.g. "(1 4 5 3)(2)(6 7)", matching the usual convention
for constellations.

Composition is (p * q)(i) = p(q(i)), i.e. q acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple


class LengthMismatch(ValueError):
    """Operands act on different numbers of points."""


@dataclass(frozen=True)
class CycleProfile:
    """Number and multiset of lengths of the disjoint cycles of a permutation."""

    cycle_count: int
    cycle_lengths: Tuple[int, ...]  # sorted ascending, sums to r

    def __post_init__(self):
        if self.cycle_count != len(self.cycle_lengths):
            raise ValueError("cycle_count does not match cycle_lengths")


class Permutation:
    """A bijection on {0..r-1}, stored as its one-line image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        r = len(images)
        if r < 1:
            raise ValueError("permutation must act on at least one point")
        seen = bytearray(r)
        for x in images:
            if not isinstance(x, int) or x < 0 or x >= r or seen[x]:
                raise ValueError(f"{images!r} is not a bijection on 0..{r - 1}")
            seen[x] = 1
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(range(r))

    @classmethod
    def full_cycle(cls, r: int) -> "Permutation":
        """The single r-cycle mapping i to i+1 mod r, i.e. (1 2 ... r)."""
        return cls([(i + 1) % r for i in range(r)])

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], r: int) -> "Permutation":
        """Build from 0-indexed disjoint cycles; unmentioned points stay fixed."""
        images = list(range(r))
        touched = bytearray(r)
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if x < 0 or x >= r:
                    raise ValueError(f"cycle element {x} outside 0..{r - 1}")
                if touched[x]:
                    raise ValueError(f"element {x} appears in two cycles")
                touched[x] = 1
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @classmethod
    def from_cycle_string(cls, text: str, r: "int | None" = None) -> "Permutation":
        """Parse 1-indexed cycle notation like "(1 4 5 3)(2)(6 7)".

        Elements may be separated by spaces or commas.  If r is omitted it is
        taken to be the largest element mentioned; if r is given, unmentioned
        elements are fixed points.
        """
        cycles: List[List[int]] = []
        depth = 0
        buf = ""
        current: List[int] = []
        for ch in text.strip():
            if ch == "(":
                if depth:
                    raise ValueError("nested '(' in cycle notation")
                depth = 1
                current = []
                buf = ""
            elif ch == ")":
                if not depth:
                    raise ValueError("unbalanced ')' in cycle notation")
                if buf:
                    current.append(int(buf))
                    buf = ""
                if not current:
                    raise ValueError("empty cycle '()'")
                cycles.append(current)
                depth = 0
            elif ch in " ,":
                if buf:
                    current.append(int(buf))
                    buf = ""
            elif ch.isdigit():
                if not depth:
                    raise ValueError(f"digit outside parentheses in {text!r}")
                buf += ch
            else:
                raise ValueError(f"unexpected character {ch!r} in cycle notation")
        if depth:
            raise ValueError("unbalanced '(' in cycle notation")
        mentioned = [x for cyc in cycles for x in cyc]
        if not mentioned and r is None:
            raise ValueError("cannot infer size from empty cycle notation")
        if min(mentioned, default=1) < 1:
            raise ValueError("cycle notation is 1-indexed; elements start at 1")
        size = max(mentioned, default=0) if r is None else r
        if max(mentioned, default=0) > size:
            raise ValueError(f"element {max(mentioned)} exceeds size {size}")
        return cls.from_cycles([[x - 1 for x in cyc] for cyc in cycles], size)

    # group operations ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def compose(self, other: "Permutation") -> "Permutation":
        """(self.compose(other))(i) = self(other(i))."""
        if len(self.images) != len(other.images):
            raise LengthMismatch(
                f"cannot compose permutations of sizes {len(self.images)} and {len(other.images)}"
            )
        s = self.images
        return Permutation([s[x] for x in other.images])

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    # cycle structure ---------------------------------------------------------

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles, each starting at its least element, ordered by it."""
        r = len(self.images)
        seen = bytearray(r)
        out = []
        for start in range(r):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = 1
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_profile(self) -> CycleProfile:
        lengths = sorted(len(c) for c in self.cycles())
        return CycleProfile(len(lengths), tuple(lengths))

    def to_cycle_string(self) -> str:
        """1-indexed cycle notation with explicit fixed points."""
        return "".join(
            "(" + " ".join(str(x + 1) for x in cyc) + ")" for cyc in self.cycles()
        )

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"


# enumeration ----------------------------------------------------------------


def _heap_raw(a: List[int], start: int = 0) -> Iterator[List[int]]:
    """Heap's algorithm over a[start:], yielding the SAME list after each swap.

    The first yield is the list in its initial order.  Callers must not store
    the yielded object; it is mutated in place.  Iterative form with an
    explicit counter array, so the stream can be consumed lazily.
    """
    yield a
    k = len(a) - start
    c = [0] * k
    i = 1
    while i < k:
        if c[i] < i:
            if i % 2 == 0:
                a[start], a[start + i] = a[start + i], a[start]
            else:
                a[start + c[i]], a[start + i] = a[start + i], a[start + c[i]]
            yield a
            c[i] += 1
            i = 1
        else:
            c[i] = 0
            i += 1


def heap_permutations(r: int) -> Iterator[Permutation]:
    """Yield each of the r! permutations of {0..r-1} exactly once.

    The order is deterministic for a given r (Heap's sequence of single
    transpositions, starting from the identity).
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    for a in _heap_raw(list(range(r))):
        yield Permutation(a)


# transitivity ----------------------------------------------------------------


def _orbit_size(image_rows: Sequence[Sequence[int]], r: int) -> int:
    """Size of the orbit of point 0 under the given image tables (BFS)."""
    seen = bytearray(r)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        i = stack.pop()
        for row in image_rows:
            j = row[i]
            if not seen[j]:
                seen[j] = 1
                count += 1
                stack.append(j)
    return count


def is_transitive(gens: Sequence[Permutation], r: int) -> bool:
    """True iff the group generated by gens acts transitively on {0..r-1}."""
    rows = []
    for g in gens:
        if len(g) != r:
            raise LengthMismatch(f"generator acts on {len(g)} points, expected {r}")
        rows.append(g.images)
    if not rows:
        return r == 1
    return _orbit_size(rows, r) == r
