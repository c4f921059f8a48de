"""Lattice paths weakly below the diagonal, and word statistics.

Paths use the step alphabet E = (1,0), D = (1,1), N = (0,1) and run from
(start_x, 0) to some (n, m) without ever rising above the line y = x.  A
path with exactly k diagonal steps from (r,0) to (n,m) belongs to the
Schroeder family schroeder(r; n, m, k); k = 0 gives the Catalan family.

Word statistics (descents, major index) are computed against an explicit
total order on the alphabet, carried by StepOrder for step words and by an
optional sort key for arbitrary words.  Positions are 1-based throughout,
so major_index("EN") under E > N is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .qseries import LaurentPoly, gf_from_exponents

EAST, DIAG, NORTH = "E", "D", "N"
STEPS = (EAST, DIAG, NORTH)


class NotComplementaryError(ValueError):
    """Shuffle components share letters, so they are not complementary."""


@dataclass(frozen=True)
class StepOrder:
    """A total order on the step alphabet, listed from smallest to largest."""

    ascending: tuple[str, str, str]

    def __post_init__(self):
        if sorted(self.ascending) != sorted(STEPS):
            raise ValueError(f"not a permutation of {STEPS}: {self.ascending}")

    @staticmethod
    def parse(text: str) -> "StepOrder":
        """Parse "E>D>N" (descending) or "E<D<N" (ascending) notation."""
        text = text.strip().replace(" ", "")
        if ">" in text and "<" not in text:
            letters = tuple(reversed(text.split(">")))
        elif "<" in text and ">" not in text:
            letters = tuple(text.split("<"))
        else:
            raise ValueError(f"cannot parse step order {text!r}")
        return StepOrder(letters)  # type: ignore[arg-type]

    def rank(self, step: str) -> int:
        return self.ascending.index(step)

    @property
    def east_above_north(self) -> bool:
        return self.rank(EAST) > self.rank(NORTH)

    def __str__(self) -> str:
        return ">".join(reversed(self.ascending))


ORDER_EDN = StepOrder.parse("E>D>N")
ORDER_END = StepOrder.parse("E>N>D")
ORDER_DEN = StepOrder.parse("D>E>N")
ORDER_NDE = StepOrder.parse("N>D>E")
ORDER_NED = StepOrder.parse("N>E>D")
ORDER_DNE = StepOrder.parse("D>N>E")

#: the three orders with E above N, then the three with E below N
ORDERS_E_ABOVE_N = (ORDER_EDN, ORDER_END, ORDER_DEN)
ORDERS_E_BELOW_N = (ORDER_NDE, ORDER_NED, ORDER_DNE)
ALL_ORDERS = ORDERS_E_ABOVE_N + ORDERS_E_BELOW_N


@dataclass(frozen=True)
class LatticePath:
    """An E/D/N step word starting at (start_x, 0), staying below y = x."""

    start_x: int
    steps: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.start_x < 0:
            raise ValueError("start abscissa must be nonnegative")
        x, y = self.start_x, 0
        for s in self.steps:
            if s == EAST:
                x += 1
            elif s == DIAG:
                x += 1
                y += 1
            elif s == NORTH:
                y += 1
            else:
                raise ValueError(f"unknown step {s!r}")
            if y > x:
                raise ValueError(f"path {''.join(self.steps)} rises above the diagonal")

    @staticmethod
    def from_word(word: str, start_x: int = 0) -> "LatticePath":
        return LatticePath(start_x, tuple(word))

    @property
    def word(self) -> str:
        return "".join(self.steps)

    @property
    def end(self) -> tuple[int, int]:
        e = self.steps.count(EAST)
        d = self.steps.count(DIAG)
        n = self.steps.count(NORTH)
        return (self.start_x + e + d, n + d)

    def diagonal_count(self) -> int:
        return self.steps.count(DIAG)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.word


def schroeder_family_nonempty(r: int, n: int, m: int, k: int) -> bool:
    """Whether any path from (r,0) to (n,m) with k diagonal steps exists."""
    return 0 <= k <= m <= n and 0 <= r and k <= n - r


def enumerate_schroeder(r: int, n: int, m: int, k: int) -> list[LatticePath]:
    """All paths from (r,0) to (n,m) with k diagonal steps, never above y=x.

    Emitted in lexicographic order of the step word under E < D < N.
    """
    if not schroeder_family_nonempty(r, n, m, k):
        return []
    east, diag, north = n - r - k, k, m - k
    out: list[LatticePath] = []
    word: list[str] = []

    def rec(e: int, d: int, nn: int, slack: int):
        if not (e or d or nn):
            out.append(LatticePath(r, tuple(word)))
            return
        if e:
            word.append(EAST)
            rec(e - 1, d, nn, slack + 1)
            word.pop()
        if d:
            word.append(DIAG)
            rec(e, d - 1, nn, slack)
            word.pop()
        if nn and slack > 0:
            word.append(NORTH)
            rec(e, d, nn - 1, slack - 1)
            word.pop()

    rec(east, diag, north, r)
    return out


def enumerate_catalan(r: int, n: int, m: int) -> list[LatticePath]:
    """All diagonal-free paths from (r,0) to (n,m), never above y = x."""
    return enumerate_schroeder(r, n, m, 0)


# -- word statistics ---------------------------------------------------------


def descent_set(word: Sequence, key: Callable | None = None) -> set[int]:
    """1-based positions i with word[i] > word[i+1] (compared via key)."""
    if key is None:
        key = lambda x: x
    return {i + 1 for i in range(len(word) - 1) if key(word[i]) > key(word[i + 1])}


def major_index(word: Sequence, key: Callable | None = None) -> int:
    """Sum of descent positions."""
    return sum(descent_set(word, key))


def path_descent_set(path: LatticePath, order: StepOrder) -> set[int]:
    return descent_set(path.steps, key=order.rank)


def path_major_index(path: LatticePath, order: StepOrder) -> int:
    return major_index(path.steps, key=order.rank)


def standardize(word: Sequence, key: Callable | None = None) -> tuple[int, ...]:
    """Relabel a multiset word with 1..len, ties broken left to right.

    Preserves the descent set of the input word.
    """
    if key is None:
        key = lambda x: x
    order = sorted(range(len(word)), key=lambda i: (key(word[i]), i))
    labels = [0] * len(word)
    for rank, pos in enumerate(order, start=1):
        labels[pos] = rank
    return tuple(labels)


def diagonal_reverse_labelling(path: LatticePath, order: StepOrder) -> tuple[int, ...]:
    """Bijective labels 1..len: smaller step types get smaller labels, ties
    within E and N increase left to right, ties within D decrease."""
    steps = path.steps
    ranked = sorted(
        range(len(steps)),
        key=lambda i: (order.rank(steps[i]), -i if steps[i] == DIAG else i),
    )
    labels = [0] * len(steps)
    for rank, pos in enumerate(ranked, start=1):
        labels[pos] = rank
    return tuple(labels)


def relabel_diagonals(path: LatticePath) -> tuple[str, ...]:
    """Replace the i-th diagonal step (left to right) by the distinct letter
    D<k-i+1>, so the k diagonal letters read Dk, ..., D1 along the path."""
    k = path.diagonal_count()
    out = []
    seen = 0
    for s in path.steps:
        if s == DIAG:
            seen += 1
            out.append(f"D{k - seen + 1}")
        else:
            out.append(s)
    return tuple(out)


def relabeled_step_key(order: StepOrder) -> Callable[[str], tuple[int, int]]:
    """Sort key for words over {E, N, D1..Dk}: the indexed diagonal letters
    occupy the D slot of the given order, sorted D1 < D2 < ... among themselves."""

    def key(letter: str) -> tuple[int, int]:
        if letter.startswith(DIAG) and len(letter) > 1:
            return (order.rank(DIAG), int(letter[1:]))
        return (order.rank(letter), 0)

    return key


def shuffles(*words: Sequence) -> set[tuple]:
    """All interleavings of words over pairwise disjoint letter sets."""
    tuples = [tuple(w) for w in words]
    seen: set = set()
    for w in tuples:
        letters = set(w)
        if letters & seen:
            raise NotComplementaryError(f"words share letters {letters & seen}")
        seen |= letters
    results: set[tuple] = set()
    prefix: list = []

    def rec(rests: list[tuple]):
        if all(not r for r in rests):
            results.add(tuple(prefix))
            return
        for i, r in enumerate(rests):
            if r:
                prefix.append(r[0])
                rests[i] = r[1:]
                rec(rests)
                rests[i] = r
                prefix.pop()

    rec(list(tuples))
    return results


def maj_gf_schroeder_enum(
    r: int, n: int, m: int, k: int, order: StepOrder, labelled: bool = False
) -> LaurentPoly:
    """Sum of q^maj over the family; with labelled=True the major index of
    the diagonal-reverse labelling is used instead of the plain step word."""
    paths = enumerate_schroeder(r, n, m, k)
    if labelled:
        return gf_from_exponents(
            major_index(diagonal_reverse_labelling(p, order)) for p in paths
        )
    return gf_from_exponents(path_major_index(p, order) for p in paths)
