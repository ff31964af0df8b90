"""Permutation groups backed by a deterministic stabilizer chain.

The chain uses the full ordered base (every point is a base point, taken in
increasing order unless a prefix is prescribed).  That costs a few trivial
levels but buys two structural guarantees used throughout the library:

  * a permutation fixing every base point is the identity, so sifting needs
    no base extension and membership is a single pass;
  * the level-k subgroup of the chain is exactly the pointwise stabilizer of
    the first k base points, which gives polynomial-time pointwise
    stabilizers, action kernels and minimal coset representatives.

Construction is deterministic: no randomization, fixed generator order,
orbit points processed in sorted order.  Schreier generators are processed
bottom-up in the classical way; a non-trivial sift residue is appended as a
new strong generator and the scan resumes at the residue's level.
"""

from __future__ import annotations

import itertools
import threading
from collections import deque
from typing import Callable, Iterable, Iterator, Sequence

from .config import enumeration_cap
from .errors import CapExceeded, DegreeMismatch, SubgroupError
from .perm import Permutation, _inv, _mul


class StabChain:
    """Stabilizer chain with the full ordered base."""

    def __init__(
        self,
        degree: int,
        generators: Sequence[tuple[int, ...]],
        base: Sequence[int] | None = None,
    ):
        self.degree = degree
        if base is None:
            self.base = tuple(range(degree))
        else:
            prefix = list(dict.fromkeys(base))
            if any(not 0 <= b < degree for b in prefix):
                raise ValueError("base point out of range")
            rest = [p for p in range(degree) if p not in set(prefix)]
            self.base = tuple(prefix + rest)
        identity = tuple(range(degree))
        self._identity = identity
        # master list of (strong generator, level); level = first index i in
        # base order with g[base[i]] != base[i]
        self._strong: list[tuple[tuple[int, ...], int]] = []
        for g in generators:
            if g != identity and all(s[0] != g for s in self._strong):
                self._strong.append((g, self._level_of(g)))
        self.transversal: list[dict[int, tuple[int, ...]]] = [
            {b: identity} for b in self.base
        ]
        self.transversal_inv: list[dict[int, tuple[int, ...]]] = [
            {b: identity} for b in self.base
        ]
        self._build()

    def _level_of(self, g: tuple[int, ...]) -> int:
        for i, b in enumerate(self.base):
            if g[b] != b:
                return i
        return len(self.base)

    def _gens_at(self, level: int) -> list[tuple[int, ...]]:
        return [g for g, lv in self._strong if lv >= level]

    def _rebuild_level(self, i: int) -> None:
        b = self.base[i]
        gens = self._gens_at(i)
        trans = {b: self._identity}
        queue = deque([b])
        while queue:
            pt = queue.popleft()
            u = trans[pt]
            for g in gens:
                img = g[pt]
                if img not in trans:
                    trans[img] = _mul(u, g)
                    queue.append(img)
        self.transversal[i] = trans
        self.transversal_inv[i] = {pt: _inv(u) for pt, u in trans.items()}

    def _sift(self, p: tuple[int, ...], start: int = 0) -> tuple[int, ...] | None:
        """Reduce p through levels >= start; None means p sifted to identity."""
        for i in range(start, len(self.base)):
            b = self.base[i]
            img = p[b]
            if img == b:
                continue
            u_inv = self.transversal_inv[i].get(img)
            if u_inv is None:
                return p
            p = _mul(p, u_inv)
        # full base: anything fixing every base point is the identity
        return None

    def _build(self) -> None:
        n = len(self.base)
        for i in range(n):
            self._rebuild_level(i)
        i = n - 1
        while i >= 0:
            self._rebuild_level(i)
            clean = True
            gens_i = self._gens_at(i)
            trans_i = self.transversal[i]
            for beta in sorted(trans_i):
                u = trans_i[beta]
                for x in gens_i:
                    v = _mul(u, x)
                    gamma = v[self.base[i]]
                    schreier = _mul(v, self.transversal_inv[i][gamma])
                    residue = self._sift(schreier, i + 1)
                    if residue is not None:
                        lv = self._level_of(residue)
                        self._strong.append((residue, lv))
                        for j in range(i + 1, lv + 1):
                            self._rebuild_level(j)
                        i = lv
                        clean = False
                        break
                if not clean:
                    break
            if clean:
                i -= 1

    def order(self) -> int:
        n = 1
        for trans in self.transversal:
            n *= len(trans)
        return n

    def contains(self, p: tuple[int, ...]) -> bool:
        return self._sift(p) is None

    def strong_generators(self) -> list[tuple[int, ...]]:
        return [g for g, _ in self._strong]

    def level_generators(self, level: int) -> list[tuple[int, ...]]:
        """Generators of the pointwise stabilizer of the first `level` base points."""
        return self._gens_at(level)

    def elements(self) -> Iterator[tuple[int, ...]]:
        """All elements, deterministically, as transversal products."""
        nontrivial = [
            sorted(self.transversal[i]) for i in range(len(self.base))
            if len(self.transversal[i]) > 1
        ]
        levels = [
            self.transversal[i] for i in range(len(self.base))
            if len(self.transversal[i]) > 1
        ]
        if not levels:
            yield self._identity
            return
        # deepest level first: the element is u_(k-1) * ... * u_0
        for choice in itertools.product(*reversed(nontrivial)):
            p = self._identity
            for idx, pt in enumerate(choice):
                p = _mul(p, levels[len(levels) - 1 - idx][pt])
            yield p

    def random_element(self, rng) -> tuple[int, ...]:
        """Uniformly random element via one transversal pick per level."""
        p = self._identity
        for i in range(len(self.base) - 1, -1, -1):
            trans = self.transversal[i]
            if len(trans) == 1:
                continue
            pt = rng.choice(sorted(trans))
            p = _mul(p, trans[pt])
        return p

    def min_coset_rep(self, c: tuple[int, ...]) -> tuple[int, ...]:
        """Lexicographically least element of (this group) * c.

        Requires the natural base 0..n-1: at level i the remaining freedom
        fixes all points below i, so greedily minimizing position i is exact.
        """
        if self.base != tuple(range(self.degree)):
            raise ValueError("min_coset_rep requires the natural base order")
        rep = c
        for i in range(self.degree):
            trans = self.transversal[i]
            if len(trans) == 1:
                continue
            best = min(trans, key=lambda pt: rep[pt])
            if best != i:
                rep = _mul(trans[best], rep)
        return rep


class PermGroup:
    """A finite permutation group given by generators on {0..degree-1}.

    Immutable; the stabilizer chain is built lazily (thread-safe) and cached.
    Equality and hashing go by (degree, generator tuple) so identically
    constructed handles share memoized structure results.
    """

    __slots__ = ("degree", "generators", "_chain", "_order", "_lock")

    def __init__(self, degree: int, generators: Iterable[Permutation]):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                raise TypeError(f"expected Permutation, got {type(g).__name__}")
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}"
                )
            if not g.is_identity and g.images not in seen:
                seen.add(g.images)
                gens.append(g)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_chain", None)
        object.__setattr__(self, "_order", None)
        object.__setattr__(self, "_lock", threading.Lock())

    def __setattr__(self, name, value):
        raise AttributeError("PermGroup is immutable")

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, [])

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    built = StabChain(
                        self.degree, [g.images for g in self.generators]
                    )
                    object.__setattr__(self, "_chain", built)
        return self._chain

    def order(self) -> int:
        if self._order is None:
            object.__setattr__(self, "_order", self.chain.order())
        return self._order

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(
                f"element degree {p.degree} != group degree {self.degree}"
            )
        return self.chain.contains(p.images)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return not self.generators

    def elements(self) -> Iterator[Permutation]:
        for images in self.chain.elements():
            yield Permutation(images)

    def element_list(self, cap: int | None = None) -> list[Permutation]:
        """All elements, guarded by the enumeration cap."""
        limit = enumeration_cap() if cap is None else cap
        n = self.order()
        if n > limit:
            raise CapExceeded(
                f"group of order {n} exceeds enumeration cap {limit}",
                needed=n,
                cap=limit,
            )
        return list(self.elements())

    def random_element(self, rng) -> Permutation:
        return Permutation(self.chain.random_element(rng))

    def orbit(self, point: int) -> list[int]:
        """Orbit of a point, BFS order starting at the point."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range")
        seen = {point}
        queue = deque([point])
        out = []
        while queue:
            pt = queue.popleft()
            out.append(pt)
            for g in self.generators:
                img = g(pt)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return out

    def orbits(self) -> list[list[int]]:
        """All orbits, each sorted, ordered by least point."""
        seen: set[int] = set()
        out = []
        for pt in range(self.degree):
            if pt not in seen:
                orb = self.orbit(pt)
                seen.update(orb)
                out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def stabilizer_order(self, point: int) -> int:
        return self.order() // len(self.orbit(point))

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            raise DegreeMismatch("degree mismatch in subgroup test")
        return all(other.contains(g) for g in self.generators)

    def same_group_as(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.generators))

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


def group_from_generators(degree: int, generators: Iterable[Permutation]) -> PermGroup:
    """Public constructor; validates degrees and drops identity generators."""
    return PermGroup(degree, generators)


def _require_subgroup(sub: PermGroup, ambient: PermGroup, label: str) -> None:
    if sub.degree != ambient.degree:
        raise DegreeMismatch(f"{label}: degree mismatch")
    if not sub.is_subgroup_of(ambient):
        raise SubgroupError(f"{label}: not a subgroup")


def conjugate_subgroup(sub: PermGroup, g: Permutation) -> PermGroup:
    return PermGroup(sub.degree, [h.conjugate(g) for h in sub.generators])


def is_normal(sub: PermGroup, ambient: PermGroup) -> bool:
    """True iff every ambient generator conjugates every sub generator into sub."""
    _require_subgroup(sub, ambient, "is_normal")
    for g in ambient.generators:
        for h in sub.generators:
            if not sub.contains(h.conjugate(g)):
                return False
    return True


def normal_closure(ambient: PermGroup, sub: PermGroup) -> PermGroup:
    """Smallest normal subgroup of ambient containing sub.

    Conjugates of current generators are adjoined in batches until stable;
    the chain is rebuilt once per batch.
    """
    _require_subgroup(sub, ambient, "normal_closure")
    if sub.is_trivial():
        return PermGroup.trivial(ambient.degree)
    current = PermGroup(ambient.degree, sub.generators)
    while True:
        fresh: list[Permutation] = []
        for g in ambient.generators:
            for h in current.generators:
                c = h.conjugate(g)
                if not current.contains(c) and all(c != f for f in fresh):
                    fresh.append(c)
        if not fresh:
            return current
        current = PermGroup(ambient.degree, current.generators + tuple(fresh))


def commutator_subgroup(a: PermGroup, b: PermGroup, ambient: PermGroup) -> PermGroup:
    """[A, B]: normal closure in <A, B> of all generator commutators."""
    _require_subgroup(a, ambient, "commutator_subgroup")
    _require_subgroup(b, ambient, "commutator_subgroup")
    joint = PermGroup(ambient.degree, a.generators + b.generators)
    seeds = []
    seen = set()
    for x in a.generators:
        for y in b.generators:
            c = x.commutator(y)
            if not c.is_identity and c.images not in seen:
                seen.add(c.images)
                seeds.append(c)
    return normal_closure(joint, PermGroup(ambient.degree, seeds))


def derived_subgroup(g: PermGroup) -> PermGroup:
    return commutator_subgroup(g, g, g)


def span(degree: int, perms: Iterable[Permutation]) -> PermGroup:
    """Generate a group from perms with a greedily reduced generating set."""
    current = PermGroup.trivial(degree)
    gens: list[Permutation] = []
    for p in perms:
        if not current.contains(p):
            gens.append(p)
            current = PermGroup(degree, gens)
    return current


def centralizer(ambient: PermGroup, sub: PermGroup, cap: int | None = None) -> PermGroup:
    """Centralizer of sub in ambient, by element filtering under the cap."""
    _require_subgroup(sub, ambient, "centralizer")
    if sub.is_trivial():
        return ambient
    hits = [
        x
        for x in ambient.element_list(cap)
        if all(x * s == s * x for s in sub.generators)
    ]
    result = span(ambient.degree, hits)
    if result.order() != len(hits):
        raise AssertionError("centralizer span lost elements")
    return result


def center(g: PermGroup, cap: int | None = None) -> PermGroup:
    return centralizer(g, g, cap)


def intersection(a: PermGroup, b: PermGroup, cap: int | None = None) -> PermGroup:
    """Intersection by enumerating the smaller group under the cap."""
    if a.degree != b.degree:
        raise DegreeMismatch("intersection: degree mismatch")
    small, big = (a, b) if a.order() <= b.order() else (b, a)
    hits = [x for x in small.element_list(cap) if big.contains(x)]
    result = span(a.degree, hits)
    if result.order() != len(hits):
        raise AssertionError("intersection span lost elements")
    return result


def pointwise_stabilizer(g: PermGroup, points: Sequence[int]) -> PermGroup:
    """Subgroup fixing every listed point, via a chain based at those points."""
    prefix = list(dict.fromkeys(points))
    if not prefix:
        return g
    chain = StabChain(g.degree, [p.images for p in g.generators], base=prefix)
    gens = [Permutation(images) for images in chain.level_generators(len(prefix))]
    return PermGroup(g.degree, gens)


def action_kernel(
    g: PermGroup, aux_count: int, aux_action: Callable[[Permutation], Sequence[int]]
) -> PermGroup:
    """Kernel of a homomorphism G -> Sym(aux_count) given on generators.

    aux_action(gen) must return the image list of the auxiliary permutation.
    The kernel is the pointwise stabilizer of the auxiliary points in the
    extended action on degree + aux_count points, so no coset enumeration is
    needed.
    """
    n = g.degree
    ext_gens = []
    for gen in g.generators:
        aux = tuple(aux_action(gen))
        if len(aux) != aux_count or sorted(aux) != list(range(aux_count)):
            raise ValueError("aux_action must return a permutation of the aux points")
        ext_gens.append(gen.images + tuple(n + a for a in aux))
    prefix = list(range(n, n + aux_count))
    chain = StabChain(n + aux_count, ext_gens, base=prefix)
    kernel_gens = []
    for images in chain.level_generators(aux_count):
        restricted = images[:n]
        if any(images[n + j] != n + j for j in range(aux_count)):
            raise AssertionError("kernel generator moves an auxiliary point")
        kernel_gens.append(Permutation(restricted))
    return PermGroup(n, kernel_gens)


# ---------------------------------------------------------------------------
# Block systems (used by the structured path for very large groups)


def minimal_block_system(g: PermGroup, alpha: int, beta: int) -> tuple[tuple[int, ...], ...]:
    """Finest G-invariant partition with alpha and beta in one block.

    Classical union-find refinement; requires a transitive group.
    """
    n = g.degree
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = deque()

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
            queue.append((x, y))

    union(alpha, beta)
    while queue:
        x, y = queue.popleft()
        for gen in g.generators:
            union(gen(x), gen(y))
    blocks: dict[int, list[int]] = {}
    for pt in range(n):
        blocks.setdefault(find(pt), []).append(pt)
    return tuple(tuple(sorted(b)) for b in sorted(blocks.values()))


def _join_partitions(
    p1: tuple[tuple[int, ...], ...], p2: tuple[tuple[int, ...], ...], n: int
) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p1, p2):
        for block in part:
            root = block[0]
            for pt in block[1:]:
                ra, rb = find(root), find(pt)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for pt in range(n):
        blocks.setdefault(find(pt), []).append(pt)
    return tuple(tuple(sorted(b)) for b in sorted(blocks.values()))


def block_systems(g: PermGroup, budget: int | None = None) -> list[tuple[tuple[int, ...], ...]]:
    """All non-trivial block systems of a transitive group.

    Every invariant partition is a join of the minimal ones, so the join
    closure of the minimal systems is complete.  A budget guards pathological
    lattices.
    """
    from .config import BLOCK_SYSTEM_BUDGET

    limit = BLOCK_SYSTEM_BUDGET if budget is None else budget
    if not g.is_transitive():
        raise ValueError("block systems require a transitive group")
    n = g.degree
    systems: dict[tuple[tuple[int, ...], ...], None] = {}
    for beta in range(1, n):
        system = minimal_block_system(g, 0, beta)
        if len(system) > 1 and len(system) < n:
            systems.setdefault(system, None)
    work = list(systems)
    while work:
        if len(systems) > limit:
            raise CapExceeded(
                f"block system lattice exceeds budget {limit}",
                needed=len(systems),
                cap=limit,
            )
        current = work.pop()
        for other in list(systems):
            joined = _join_partitions(current, other, n)
            if 1 < len(joined) < n and joined not in systems:
                systems[joined] = None
                work.append(joined)
    return sorted(systems, key=lambda s: (len(s), s))


def block_action_kernel(
    g: PermGroup, system: tuple[tuple[int, ...], ...]
) -> PermGroup:
    """Kernel of the action of g on the blocks of an invariant partition."""
    index_of = {}
    for i, block in enumerate(system):
        for pt in block:
            index_of[pt] = i

    def on_blocks(gen: Permutation) -> list[int]:
        images = [0] * len(system)
        for i, block in enumerate(system):
            images[i] = index_of[gen(block[0])]
        return images

    return action_kernel(g, len(system), on_blocks)
