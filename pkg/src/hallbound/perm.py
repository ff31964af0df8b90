"""Permutations on {0, ..., n-1} with left-to-right composition.

A permutation is stored as its image tuple: p.images[x] is the image of x.
Composition is left-to-right throughout the library: (a * b)(x) = b(a(x)),
i.e. a acts first.  Conjugation x ** g is g^-1 * x * g and the commutator
[a, b] is a^-1 * b^-1 * a * b.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import DegreeMismatch

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Raw image-tuple product, a first then b."""
    return tuple(b[x] for x in a)


def _inv(a: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


class Permutation:
    """An immutable permutation of fixed degree."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        seen = [False] * n
        for v in imgs:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise ValueError(f"not a bijection on 0..{n - 1}: {imgs}")
            seen[v] = True
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Build from a list of cycles; points absent from all cycles are fixed."""
        images = list(range(degree))
        assigned: set[int] = set()
        for cycle in cycles:
            pts = list(cycle)
            for pt in pts:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} out of range for degree {degree}")
                if pt in assigned:
                    raise ValueError(f"point {pt} appears in two cycles")
                assigned.add(pt)
            for i, pt in enumerate(pts):
                images[pt] = pts[(i + 1) % len(pts)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"cannot compose degree {self.degree} with degree {other.degree}"
            )
        return Permutation(_mul(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(_inv(self.images))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = tuple(range(self.degree))
        base = self.images
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation(result)

    def conjugate(self, g: "Permutation") -> "Permutation":
        """self ** g = g^-1 * self * g."""
        return g.inverse() * self * g

    def commutator(self, other: "Permutation") -> "Permutation":
        return self.inverse() * other.inverse() * self * other

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycle decomposition, each cycle starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            pt = self.images[start]
            while pt != start:
                seen[pt] = True
                cycle.append(pt)
                pt = self.images[pt]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        lengths = [len(c) for c in self.cycles()]
        return math.lcm(*lengths) if lengths else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: the result maps x to b(a(x))."""
    return a * b


def parse_cycles(text: str, degree: int | None = None, offset: int = 0) -> Permutation:
    """Parse cycle notation like '(0 1 2)(3 4)' into a permutation.

    Points may be separated by spaces or commas.  With offset=1 the input is
    read as 1-based.  The degree is inferred from the largest point unless
    given explicitly.  '()' or an empty string denotes the identity.
    """
    stripped = text.strip()
    body = _CYCLE_RE.sub("", stripped).strip()
    if body:
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for match in _CYCLE_RE.finditer(stripped):
        inner = match.group(1).replace(",", " ").split()
        if not inner:
            continue
        try:
            pts = [int(tok) - offset for tok in inner]
        except ValueError as exc:
            raise ValueError(f"malformed cycle notation: {text!r}") from exc
        if any(pt < 0 for pt in pts):
            raise ValueError(f"point below {offset} in {text!r}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point inside a cycle: {text!r}")
        cycles.append(pts)
    needed = 1 + max((pt for c in cycles for pt in c), default=0)
    if degree is None:
        degree = needed
    elif needed > degree:
        raise ValueError(f"cycle notation needs degree {needed}, given {degree}")
    return Permutation.from_cycles(degree, cycles)


def format_cycles(p: Permutation, offset: int = 0) -> str:
    """Disjoint-cycle string for p; '()' for the identity."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join(
        "(" + " ".join(str(pt + offset) for pt in cycle) + ")" for cycle in cycles
    )
