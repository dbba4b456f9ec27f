"""Signed permutations and their exact arithmetic.

A signed permutation of degree n is a bijection eta of {-n, ..., -1, 1, ..., n}
satisfying eta(-i) = -eta(i).  Only the images of 1..n are stored; images of
negative points are derived.  These bijections form the hyperoctahedral group
(the Weyl group of type B), of order 2^n * n!.

Composition convention, fixed once for the whole package: in a product
``a * b`` the right factor applies first, so ``(a * b)(i) == a(b(i))``.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DegreeMismatchError

#: Degrees are capped so every enumeration stays desk-scale.
MAX_DEGREE = 16

POS = "pos"
NEG = "neg"
INV = "inv"


class Fullness(enum.Enum):
    """Whether an element is a single signed cycle on all n points."""

    EVEN_FULL = "even-full"
    ODD_FULL = "odd-full"
    NOT_FULL = "not-full"


def _check_degree(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"degree must be a positive integer, got {n!r}")
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
    return n


@dataclass(frozen=True, order=True)
class SignedTransposition:
    """A reflection: positive swap (i j), negative swap (i -j), or flip (i -i).

    Positive and negative kinds store i < j; the inversion kind stores the
    flipped index in ``i`` with ``j == i``.
    """

    kind: str
    i: int
    j: int

    @classmethod
    def positive(cls, i: int, j: int) -> "SignedTransposition":
        if i == j:
            raise ValueError(f"positive transposition needs distinct indices, got {i}, {j}")
        i, j = sorted((i, j))
        return cls(POS, i, j)

    @classmethod
    def negative(cls, i: int, j: int) -> "SignedTransposition":
        if i == j:
            raise ValueError(f"negative transposition needs distinct indices, got {i}, {j}")
        i, j = sorted((i, j))
        return cls(NEG, i, j)

    @classmethod
    def inversion(cls, i: int) -> "SignedTransposition":
        return cls(INV, i, i)

    def __post_init__(self):
        if self.kind not in (POS, NEG, INV):
            raise ValueError(f"unknown transposition kind {self.kind!r}")
        if self.i < 1 or self.j < 1:
            raise ValueError(f"indices must be >= 1, got {self.i}, {self.j}")
        if self.kind == INV:
            if self.i != self.j:
                raise ValueError("inversion transposition stores a single index")
        elif self.i >= self.j:
            raise ValueError(f"expected i < j, got {self.i}, {self.j}")

    @property
    def is_inversion(self) -> bool:
        return self.kind == INV

    def psi(self) -> int:
        """Sign character: -1 on inversions, +1 on the other reflections."""
        return -1 if self.kind == INV else 1

    def apply(self, v: int) -> int:
        """Image of the signed point v under this transposition."""
        a = abs(v)
        if self.kind == INV:
            return -v if a == self.i else v
        if a == self.i:
            image = self.j if self.kind == POS else -self.j
        elif a == self.j:
            image = self.i if self.kind == POS else -self.i
        else:
            return v
        return image if v > 0 else -image

    def to_permutation(self, n: int) -> "SignedPermutation":
        """The transposition as an element of degree n."""
        _check_degree(n)
        if self.j > n:
            raise ValueError(f"index {self.j} out of range for degree {n}")
        return SignedPermutation(
            tuple(self.apply(v) for v in range(1, n + 1)), check=False
        )

    def __str__(self) -> str:
        if self.kind == POS:
            return f"({self.i} {self.j})"
        if self.kind == NEG:
            return f"({self.i} -{self.j})"
        return f"({self.i} -{self.i})"


def _normalize_minus(text: str) -> str:
    return text.replace("−", "-").replace("–", "-")


def parse_transposition(text: str) -> SignedTransposition:
    """Parse "(1 2)", "(1 -2)" or "(2 -2)"."""
    raw = _normalize_minus(text).strip()
    m = re.fullmatch(r"\(\s*(\d+)\s+(-?)\s*(\d+)\s*\)", raw)
    if m is None:
        raise ValueError(f"cannot parse transposition {text!r}")
    i, minus, j = int(m.group(1)), m.group(2), int(m.group(3))
    if not minus:
        return SignedTransposition.positive(i, j)
    if i == j:
        return SignedTransposition.inversion(i)
    return SignedTransposition.negative(i, j)


@dataclass(frozen=True)
class CycleType:
    """Conjugacy invariant: lengths of even cycles and of odd cycles."""

    even_parts: tuple[int, ...]
    odd_parts: tuple[int, ...]

    def __post_init__(self):
        if tuple(sorted(self.even_parts, reverse=True)) != self.even_parts:
            raise ValueError("even_parts must be sorted descending")
        if tuple(sorted(self.odd_parts, reverse=True)) != self.odd_parts:
            raise ValueError("odd_parts must be sorted descending")

    @property
    def degree(self) -> int:
        return sum(self.even_parts) + sum(self.odd_parts)

    def __str__(self) -> str:
        return f"({list(self.even_parts)}, {list(self.odd_parts)})"


def cycle_permutation(entries: Iterable[int], parity: int, n: int) -> "SignedPermutation":
    """Element mapping e_1 -> e_2 -> ... -> e_l -> parity * e_1.

    Entries are signed points with pairwise distinct absolute values; points
    outside the support are fixed.  This accepts any rotation or negation of
    a cycle, not just the canonical one.
    """
    entries = tuple(entries)
    if parity not in (1, -1):
        raise ValueError(f"parity must be +1 or -1, got {parity!r}")
    _check_degree(n)
    if not entries:
        raise ValueError("a cycle needs at least one entry")
    supp = [abs(e) for e in entries]
    if len(set(supp)) != len(supp):
        raise ValueError(f"entries must have distinct absolute values: {entries}")
    if max(supp) > n or min(supp) < 1 or any(e == 0 for e in entries):
        raise ValueError(f"entries out of range for degree {n}: {entries}")
    images = list(range(1, n + 1))
    l = len(entries)
    for k in range(l):
        src = entries[k]
        dst = entries[(k + 1) % l] * (parity if k == l - 1 else 1)
        if src > 0:
            images[src - 1] = dst
        else:
            images[-src - 1] = -dst
    return SignedPermutation(tuple(images), check=False)


@dataclass(frozen=True)
class SignedCycle:
    """One factor of the disjoint-cycle form, in canonical presentation.

    ``support`` starts at its minimum, which carries positive sign;
    ``entry_signs`` are the signs displayed on support[1:] in cycle notation
    (cumulative products of the step signs); ``parity`` is +1 for an even
    cycle and -1 for an odd one.
    """

    support: tuple[int, ...]
    entry_signs: tuple[int, ...]
    parity: int

    def __post_init__(self):
        if not self.support:
            raise ValueError("empty cycle")
        if len(self.entry_signs) != len(self.support) - 1:
            raise ValueError("need one entry sign per support element after the first")
        if any(s not in (1, -1) for s in self.entry_signs) or self.parity not in (1, -1):
            raise ValueError("signs must be +1 or -1")
        if len(set(self.support)) != len(self.support) or min(self.support) != self.support[0]:
            raise ValueError(f"support must be distinct and start at its minimum: {self.support}")
        if any(v < 1 for v in self.support):
            raise ValueError("support values must be positive")

    @classmethod
    def from_entries(cls, entries: Iterable[int], parity: int) -> "SignedCycle":
        """Canonicalize an arbitrary signed-entry presentation of a cycle."""
        entries = list(entries)
        if parity not in (1, -1):
            raise ValueError(f"parity must be +1 or -1, got {parity!r}")
        supp = [abs(e) for e in entries]
        if not entries or len(set(supp)) != len(supp) or 0 in entries:
            raise ValueError(f"bad cycle entries: {entries}")
        # Rotate the minimal absolute value to the front.  Each rotation
        # moves the head to the tail multiplied by the parity.
        k = supp.index(min(supp))
        rotated = entries[k:] + [e * parity for e in entries[:k]]
        # Negating every entry names the same permutation.
        if rotated[0] < 0:
            rotated = [-e for e in rotated]
        return cls(
            support=tuple(abs(e) for e in rotated),
            entry_signs=tuple(1 if e > 0 else -1 for e in rotated[1:]),
            parity=parity,
        )

    @property
    def length(self) -> int:
        return len(self.support)

    @property
    def is_even(self) -> bool:
        return self.parity == 1

    def entries(self) -> tuple[int, ...]:
        """Signed entries of the canonical presentation."""
        head = (self.support[0],)
        return head + tuple(s * v for s, v in zip(self.entry_signs, self.support[1:]))

    def step_signs(self) -> tuple[int, ...]:
        """Per-step signs whose running products give the entry signs and parity."""
        cumulative = (1,) + self.entry_signs + (self.parity,)
        return tuple(cumulative[k + 1] * cumulative[k] for k in range(self.length))

    def to_permutation(self, n: int) -> "SignedPermutation":
        return cycle_permutation(self.entries(), self.parity, n)

    def transposition_word(self) -> tuple[SignedTransposition, ...]:
        """A product of reflections equal to this cycle.

        An even cycle on support i_1..i_l expands to the chain
        (i_1 e1 i_2)(i_2 e2 i_3)...(i_{l-1} e i_l) with per-step signs; an odd
        cycle additionally picks up the flip (i_1 -i_1) on the left.
        """
        steps = self.step_signs()
        word = []
        if not self.is_even:
            word.append(SignedTransposition.inversion(self.support[0]))
        for k in range(self.length - 1):
            a, b = self.support[k], self.support[k + 1]
            if steps[k] == 1:
                word.append(SignedTransposition.positive(a, b))
            else:
                word.append(SignedTransposition.negative(a, b))
        return tuple(word)

    def __str__(self) -> str:
        body = " ".join(str(e) for e in self.entries())
        return f"({body}){'+' if self.is_even else '-'}"


@dataclass(frozen=True)
class NormalForm:
    """Factorization into sign flips times an unsigned permutation.

    ``flip_set`` lists the indices whose flip transpositions, applied after
    ``base``, reproduce the original element; ``base`` has all-positive
    images.
    """

    flip_set: frozenset[int]
    base: "SignedPermutation"

    def recompose(self) -> "SignedPermutation":
        images = tuple(
            -v if abs(v) in self.flip_set else v for v in self.base.images
        )
        return SignedPermutation(images, check=False)

    def inversion_word(self) -> tuple[SignedTransposition, ...]:
        return tuple(SignedTransposition.inversion(i) for i in sorted(self.flip_set))


class SignedPermutation:
    """An element of the degree-n hyperoctahedral group, stored as images of 1..n."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check:
            n = _check_degree(len(images))
            if sorted(abs(v) for v in images) != list(range(1, n + 1)):
                raise ValueError(
                    f"images must hit each of 1..{n} exactly once up to sign, got {images}"
                )
        object.__setattr__(self, "_images", images)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        _check_degree(n)
        return cls(tuple(range(1, n + 1)), check=False)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, v: int) -> int:
        """Image of the signed point v (negative arguments are derived)."""
        if v == 0 or abs(v) > self.degree:
            raise ValueError(f"point {v} out of range for degree {self.degree}")
        return self._images[v - 1] if v > 0 else -self._images[-v - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition; the right factor applies first."""
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        mine = self._images
        return SignedPermutation(
            tuple(mine[v - 1] if v > 0 else -mine[-v - 1] for v in other._images),
            check=False,
        )

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.degree
        for i, v in enumerate(self._images, start=1):
            if v > 0:
                inv[v - 1] = i
            else:
                inv[-v - 1] = -i
        return SignedPermutation(tuple(inv), check=False)

    def conjugate_by(self, g: "SignedPermutation") -> "SignedPermutation":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPermutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self._images)})"

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self._images, start=1))

    @property
    def is_unsigned(self) -> bool:
        """True when no image is negative, i.e. the element lies in the symmetric group."""
        return all(v > 0 for v in self._images)

    # -- sign structure --------------------------------------------------

    def flip_set(self) -> frozenset[int]:
        """Absolute values of the negative images."""
        return frozenset(-v for v in self._images if v < 0)

    def psi_sign(self) -> int:
        """(-1) to the number of negative images; multiplicative."""
        return -1 if sum(1 for v in self._images if v < 0) % 2 else 1

    def phi_project(self) -> "SignedPermutation":
        """Forget signs: the unsigned permutation i -> |eta(i)|, a group homomorphism."""
        return SignedPermutation(tuple(abs(v) for v in self._images), check=False)

    def normal_form(self) -> NormalForm:
        """Unique factorization as (sign flips) * (unsigned permutation)."""
        return NormalForm(flip_set=self.flip_set(), base=self.phi_project())

    # -- cycle structure -------------------------------------------------

    def cycles(self) -> tuple[SignedCycle, ...]:
        """Disjoint signed cycles covering 1..n, in canonical order.

        Orbits are traced from the smallest unvisited positive point by
        repeatedly applying the element; coming back to +start closes an even
        cycle, reaching -start closes an odd cycle.
        """
        n = self.degree
        seen = [False] * (n + 1)
        out = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            entries = [start]
            seen[start] = True
            x = self(start)
            while abs(x) != start:
                entries.append(x)
                seen[abs(x)] = True
                x = self(x)
            parity = 1 if x == start else -1
            out.append(
                SignedCycle(
                    support=tuple(abs(e) for e in entries),
                    entry_signs=tuple(1 if e > 0 else -1 for e in entries[1:]),
                    parity=parity,
                )
            )
        return tuple(out)

    def cycle_type(self) -> CycleType:
        cycles = self.cycles()
        return CycleType(
            even_parts=tuple(sorted((c.length for c in cycles if c.is_even), reverse=True)),
            odd_parts=tuple(sorted((c.length for c in cycles if not c.is_even), reverse=True)),
        )

    def classify_full_cycle(self) -> Fullness:
        """Even full, odd full, or not a single cycle on all points."""
        cycles = self.cycles()
        if len(cycles) != 1:
            return Fullness.NOT_FULL
        return Fullness.EVEN_FULL if cycles[0].is_even else Fullness.ODD_FULL

    # -- text forms --------------------------------------------------------

    def cycle_str(self) -> str:
        return "".join(str(c) for c in self.cycles())

    def two_row_str(self) -> str:
        width = max(len(str(v)) for v in self._images)
        top = " ".join(f"{i:>{width}}" for i in range(1, self.degree + 1))
        bottom = " ".join(f"{v:>{width}}" for v in self._images)
        return f"( {top} )\n( {bottom} )"

    @classmethod
    def from_cycle_str(cls, text: str, n: int | None = None) -> "SignedPermutation":
        """Parse cycle notation like "(1 2 -3 5 -4)+" or "(1 3)+(2)-".

        Signs prefix entries; each cycle carries a "+" or "-" parity suffix.
        Points not mentioned are fixed.  The degree defaults to the largest
        absolute value mentioned.
        """
        raw = _normalize_minus(text).strip()
        if not re.fullmatch(r"(?:\s*\([^()]*\)\s*[+-])+", raw):
            raise ValueError(f"cannot parse cycle notation {text!r}")
        pieces = re.findall(r"\(([^()]*)\)\s*([+-])", raw)
        parsed: list[tuple[list[int], int]] = []
        mentioned: set[int] = set()
        for body, sign in pieces:
            entries = [int(tok) for tok in body.split()]
            if not entries:
                raise ValueError(f"empty cycle in {text!r}")
            supp = {abs(e) for e in entries}
            if len(supp) != len(entries) or supp & mentioned:
                raise ValueError(f"repeated point in cycle notation {text!r}")
            mentioned |= supp
            parsed.append((entries, 1 if sign == "+" else -1))
        degree = n if n is not None else max(mentioned)
        if max(mentioned) > degree:
            raise ValueError(f"point {max(mentioned)} out of range for degree {degree}")
        result = cls.identity(degree)
        for entries, parity in parsed:
            result = result * cycle_permutation(entries, parity, degree)
        return result


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """Product a * b, with b applied first."""
    return a * b


def compose_word(word: Iterable[SignedTransposition], n: int) -> SignedPermutation:
    """Product of a reflection word given in notation order (rightmost applies first)."""
    result = SignedPermutation.identity(n)
    for t in word:
        result = result * t.to_permutation(n)
    return result


def from_transposition(t: SignedTransposition, n: int) -> SignedPermutation:
    """The reflection t as an element of degree n."""
    return t.to_permutation(n)


def all_transpositions(n: int) -> tuple[SignedTransposition, ...]:
    """Every reflection of degree n: n*(n-1) swaps plus n flips, n^2 in total."""
    _check_degree(n)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(SignedTransposition.positive(i, j))
            out.append(SignedTransposition.negative(i, j))
    out.extend(SignedTransposition.inversion(i) for i in range(1, n + 1))
    return tuple(out)


def positive_transpositions(n: int) -> tuple[SignedTransposition, ...]:
    _check_degree(n)
    return tuple(
        SignedTransposition.positive(i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    )


def all_elements(n: int) -> Iterator[SignedPermutation]:
    """Iterate the whole degree-n group, 2^n * n! elements."""
    _check_degree(n)
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(
                tuple(s * v for s, v in zip(signs, perm)), check=False
            )
