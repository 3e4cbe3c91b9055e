"""Free-group words and braid words.

Both are stored as tuples of nonzero signed integers: ``k`` is the k-th
generator (1-based), ``-k`` its inverse. Free reduction is applied on
construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence

from braidmono.exceptions import PresentationError


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for letter in letters:
        if letter == 0:
            raise PresentationError("0 is not a valid letter")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class FreeWord:
    """Freely reduced word in generators x1, x2, ... of a free group."""

    __slots__ = ("_letters",)

    def __init__(self, letters: Iterable[int] = ()) -> None:
        self._letters = _free_reduce(letters)

    @classmethod
    def generator(cls, k: int) -> FreeWord:
        if k < 1:
            raise PresentationError(f"generator index must be positive, got {k}")
        return cls((k,))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> FreeWord:
        """Build from (generator index, exponent) pairs."""
        letters: list[int] = []
        for k, e in pairs:
            letters.extend([k if e > 0 else -k] * abs(e))
        return cls(letters)

    @classmethod
    def parse(cls, text: str, prefix: str = "x") -> FreeWord:
        """Parse the formatted form, e.g. ``x1*x2^-1*x3^2``; ``1`` is the identity."""
        text = text.replace(" ", "")
        if text in ("", "1", "e"):
            return cls()
        letters: list[int] = []
        for factor in text.split("*"):
            base, _, power = factor.partition("^")
            if not base.startswith(prefix) or not base[len(prefix) :].isdigit():
                raise PresentationError(f"cannot parse word factor {factor!r}")
            k = int(base[len(prefix) :])
            e = int(power) if power else 1
            letters.extend([k if e > 0 else -k] * abs(e))
        return cls(letters)

    @property
    def letters(self) -> tuple[int, ...]:
        return self._letters

    def to_list(self) -> list[int]:
        return list(self._letters)

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self._letters)

    def __bool__(self) -> bool:
        return bool(self._letters)

    @property
    def is_identity(self) -> bool:
        return not self._letters

    @property
    def max_generator(self) -> int:
        return max((abs(a) for a in self._letters), default=0)

    def generators_used(self) -> set[int]:
        return {abs(a) for a in self._letters}

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self._letters + other._letters)

    def inverse(self) -> FreeWord:
        return FreeWord(-a for a in reversed(self._letters))

    def __invert__(self) -> FreeWord:
        return self.inverse()

    def __pow__(self, exponent: int) -> FreeWord:
        base = self if exponent >= 0 else self.inverse()
        return FreeWord(base._letters * abs(exponent))

    def conjugate_by(self, w: FreeWord) -> FreeWord:
        """w * self * w^-1."""
        return w * self * w.inverse()

    def exponent_sum(self, k: int) -> int:
        return sum(1 if a == k else -1 for a in self._letters if abs(a) == k)

    def exponent_vector(self, generator_count: int) -> list[int]:
        vector = [0] * generator_count
        for a in self._letters:
            vector[abs(a) - 1] += 1 if a > 0 else -1
        return vector

    def degree(self, degrees: Sequence[int]) -> int:
        """Image in Z under generator k -> degrees[k-1]."""
        return sum(degrees[abs(a) - 1] * (1 if a > 0 else -1) for a in self._letters)

    def cyclically_reduced(self) -> FreeWord:
        letters = list(self._letters)
        while len(letters) > 1 and letters[0] == -letters[-1]:
            letters = letters[1:-1]
        return FreeWord(letters)

    def canonical_cyclic(self) -> FreeWord:
        """Representative of the cyclic word of self up to rotation and inversion."""
        reduced = self.cyclically_reduced()._letters
        if not reduced:
            return FreeWord()
        inverse = tuple(-a for a in reversed(reduced))
        candidates = [
            word[i:] + word[:i] for word in (reduced, inverse) for i in range(len(word))
        ]
        return FreeWord(min(candidates, key=lambda w: (len(w), [(abs(a), -a) for a in w])))

    def substitute(self, images: Mapping[int, FreeWord]) -> FreeWord:
        """Replace generator k by images[k] (generators without an image are kept)."""
        out: list[int] = []
        for a in self._letters:
            image = images.get(abs(a))
            if image is None:
                out.append(a)
            elif a > 0:
                out.extend(image._letters)
            else:
                out.extend(-b for b in reversed(image._letters))
        return FreeWord(out)

    def format(self, prefix: str = "x") -> str:
        """Human-readable form such as ``x1*x2^-1*x3^2``."""
        if not self._letters:
            return "1"
        parts: list[str] = []
        k, run = self._letters[0], 0
        for a in self._letters + (0,):
            if a == k:
                run += 1
                continue
            power = run if k > 0 else -run
            parts.append(f"{prefix}{abs(k)}" + ("" if power == 1 else f"^{power}"))
            k, run = a, 1
        return "*".join(parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self._letters == other._letters

    def __hash__(self) -> int:
        return hash(("FreeWord", self._letters))

    def __repr__(self) -> str:
        return f"FreeWord({self.format()})"


def product_of_generators(d: int) -> FreeWord:
    """x1 * x2 * ... * xd."""
    return FreeWord(range(1, d + 1))


class BraidWord:
    """Word in the Artin generators s1 .. s(d-1) of the braid group on d strands.

    Letters are in composition order: the rightmost letter acts first.
    """

    __slots__ = ("_letters", "strands")

    def __init__(self, letters: Iterable[int], strands: int) -> None:
        if strands < 1:
            raise PresentationError(f"strand count must be positive, got {strands}")
        reduced = _free_reduce(letters)
        for a in reduced:
            if not 1 <= abs(a) <= strands - 1:
                raise PresentationError(f"letter {a} out of range for {strands} strands")
        self._letters = reduced
        self.strands = strands

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls((), strands)

    @classmethod
    def half_twist(cls, strands: int) -> BraidWord:
        """Positive half twist Delta, written (s1 s2 .. s(d-1)) (s1 .. s(d-2)) .. s1."""
        letters: list[int] = []
        for top in range(strands - 1, 0, -1):
            letters.extend(range(1, top + 1))
        return cls(letters, strands)

    @classmethod
    def full_twist(cls, strands: int) -> BraidWord:
        return cls.half_twist(strands) ** 2

    @property
    def letters(self) -> tuple[int, ...]:
        return self._letters

    def to_list(self) -> list[int]:
        return list(self._letters)

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self._letters)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self._letters)

    def _check(self, other: BraidWord) -> None:
        if other.strands != self.strands:
            raise PresentationError(f"strand mismatch: {self.strands} vs {other.strands}")

    def __mul__(self, other: BraidWord) -> BraidWord:
        self._check(other)
        return BraidWord(self._letters + other._letters, self.strands)

    def inverse(self) -> BraidWord:
        return BraidWord((-a for a in reversed(self._letters)), self.strands)

    def __pow__(self, exponent: int) -> BraidWord:
        base = self if exponent >= 0 else self.inverse()
        return BraidWord(base._letters * abs(exponent), self.strands)

    def conjugate_by(self, other: BraidWord) -> BraidWord:
        """other * self * other^-1."""
        return other * self * other.inverse()

    def permutation(self) -> tuple[int, ...]:
        """perm[k-1] = end position of the strand starting at position k (1-based)."""
        return braid_permutation(self)

    def format(self) -> str:
        if not self._letters:
            return "1"
        return " ".join(f"s{abs(a)}" + ("" if a > 0 else "^-1") for a in self._letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.strands == other.strands and self._letters == other._letters

    def __hash__(self) -> int:
        return hash(("BraidWord", self.strands, self._letters))

    def __repr__(self) -> str:
        return f"BraidWord({self.to_list()}, strands={self.strands})"


def braid_permutation(braid: BraidWord) -> tuple[int, ...]:
    """Permutation of strand positions induced by a braid."""
    position = list(range(1, braid.strands + 1))
    for a in reversed(braid.letters):
        i = abs(a)
        position = [i + 1 if p == i else i if p == i + 1 else p for p in position]
    return tuple(position)
