"""Braid words, their permutations, and Seifert-surface genus of closures.

A word is stored as a tuple of signed generator indices: ``k > 0`` stands
for sigma_k and ``-k`` for its inverse. Strands are 1-indexed so that the
indices match the usual sigma_i subscripts.

Permutations compose left to right in word order: the permutation of
``u * v`` is "apply u, then v".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import PreconditionError


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}; ``images[k - 1]`` is the image of ``k``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self first, then other
        if len(self.images) != len(other.images):
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(other(self(k)) for k in range(1, len(self.images) + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class BraidWord:
    width: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.width < 2:
            raise ValueError(f"braid width must be at least 2, got {self.width}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.width - 1:
                raise ValueError(f"generator {x} out of range for B_{self.width}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.width != other.width:
            raise ValueError("cannot concatenate braids of different widths")
        return BraidWord(self.width, self.letters + other.letters)

    def generators(self) -> Iterator[tuple[int, int]]:
        """Yield (index, sign) pairs."""
        for x in self.letters:
            yield abs(x), (1 if x > 0 else -1)

    def mirror(self) -> "BraidWord":
        return BraidWord(self.width, tuple(-x for x in self.letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.width, tuple(-x for x in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def is_negative(self) -> bool:
        return all(x < 0 for x in self.letters)

    def to_list(self) -> list[int]:
        return list(self.letters)

    @classmethod
    def from_list(cls, width: int, letters: Iterable[int]) -> "BraidWord":
        return cls(width, tuple(letters))


def descending(width: int, top: int, bottom: int = 1, sign: int = 1) -> BraidWord:
    """sigma_top sigma_{top-1} ... sigma_bottom (empty when top < bottom)."""
    return BraidWord(width, tuple(sign * i for i in range(top, bottom - 1, -1)))


def permutation_of(word: BraidWord) -> Permutation:
    pos = list(range(1, word.width + 1))  # pos[k-1] = current position of strand k
    for i, _ in word.generators():
        for k, p in enumerate(pos):
            if p == i:
                pos[k] = i + 1
            elif p == i + 1:
                pos[k] = i
    return Permutation(tuple(pos))


def closure_component_count(word: BraidWord) -> int:
    return len(permutation_of(word).cycles())


def exponent_sum(word: BraidWord) -> int:
    return sum(s for _, s in word.generators())


def seifert_genus_of_coherent_closure(word: BraidWord) -> int:
    """Genus of the Seifert-algorithm surface of a positive or negative braid knot.

    For homogeneous braids of one sign this surface has minimal genus, so the
    result is the Seifert genus of the closure.
    """
    if not (word.is_positive() or word.is_negative()):
        raise PreconditionError("word mixes positive and negative letters", "mixed_sign")
    if closure_component_count(word) != 1:
        raise PreconditionError("closure is a link, not a knot", "multi_component")
    chi = word.width - len(word)
    return (1 - chi) // 2
