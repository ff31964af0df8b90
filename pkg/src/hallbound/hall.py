"""Hall subgroup search and related checks.

A Hall pi-subgroup has pi-number order and pi'-number index.  The search has
two phases: a seeded randomized greedy growth (fast, may miss), then for
groups under the exhaustive cap a complete scan over subgroups generated by
Sylow systems.  The scan is exact: a subgroup of full pi-part order contains
a Sylow p-subgroup of the whole group for every p in pi and is generated by
one such choice per prime, and all Sylow p-subgroups are conjugate, so
fixing one reference factor and ranging over conjugates of the rest visits a
conjugate of every Hall pi-subgroup.  Absence proofs and the
no-nilpotent-Hall confirmation ride on the same scan.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field

from .config import DEFAULT_EXHAUSTIVE_SEARCH_CAP, SYLOW_COMBINATION_BUDGET, search_seed
from .errors import CapExceeded, DegreeMismatch, PreconditionError, SubgroupError
from .group import PermGroup, conjugate_subgroup, intersection, is_normal
from .perm import Permutation
from .primes import PrimeSet
from .quotient import quotient_by
from .radicals import sylow_subgroup
from .structure import is_nilpotent, is_simple, is_soluble


def is_hall_subgroup(sub: PermGroup, g: PermGroup, pi: PrimeSet) -> bool:
    """Order is a pi-number and index is a pi'-number; membership checked."""
    if sub.degree != g.degree:
        raise DegreeMismatch("is_hall_subgroup: degree mismatch")
    if not sub.is_subgroup_of(g):
        raise SubgroupError("is_hall_subgroup: not a subgroup")
    order = sub.order()
    index = g.order() // order
    return pi.is_pi_number(order) and pi.part_of(index) == 1


@dataclass(frozen=True)
class HallSearchResult:
    """Outcome of a Hall search: found / proven_absent / unknown."""

    status: str
    pi: PrimeSet
    subgroup: PermGroup | None
    budget_used: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == "found"


def _pi_part_of_element(x: Permutation, pi: PrimeSet) -> Permutation:
    """Power of x whose order is the pi-part of x's order."""
    return x ** pi.coprime_part_of(x.order())


def _greedy_phase(
    g: PermGroup, pi: PrimeSet, target: int, attempts: int, rng
) -> tuple[PermGroup | None, int]:
    """Randomized growth by pi-parts of random elements; seeded."""
    tried = 0
    for _ in range(attempts):
        current = PermGroup.trivial(g.degree)
        stale = 0
        while current.order() < target and stale < 40:
            tried += 1
            y = _pi_part_of_element(g.random_element(rng), pi)
            if y.is_identity or current.contains(y):
                stale += 1
                continue
            candidate = PermGroup(g.degree, current.generators + (y,))
            if pi.is_pi_number(candidate.order()):
                current = candidate
                stale = 0
            else:
                stale += 1
        if current.order() == target:
            return current, tried
    return None, tried


def _subgroup_conjugates(g: PermGroup, sub: PermGroup) -> list[PermGroup]:
    """Every conjugate of sub under g, via closure under generator conjugation.

    Conjugating by generators reaches conjugation by arbitrary elements, so
    the closure is the full conjugacy orbit.  Deterministic order: breadth
    first from sub with g's generators applied in order.
    """

    def key_of(s: PermGroup) -> frozenset:
        return frozenset(x.images for x in s.elements())

    found: dict[frozenset, PermGroup] = {key_of(sub): sub}
    queue = deque([sub])
    while queue:
        current = queue.popleft()
        for gen in g.generators:
            conj = conjugate_subgroup(current, gen)
            key = key_of(conj)
            if key not in found:
                found[key] = conj
                queue.append(conj)
    return list(found.values())


def _sylow_generated(g: PermGroup, pi: PrimeSet, target: int):
    """Yield every join of the reference Sylow system with conjugate factors.

    For each prime in pi dividing the order, take one Sylow subgroup; fix the
    largest as a reference and range over all conjugates of the others.  Any
    subgroup of order target is generated by one full Sylow p-subgroup of g
    per prime (their join divides target yet is divisible by every p-part),
    and conjugating it to contain the reference factor keeps its order, so
    every order-target subgroup has a conjugate among the yields.

    Branches are pruned as factors accumulate: each partial join lies inside
    any order-target subgroup containing the chosen factors, so a partial
    join whose order does not divide the target closes off every extension.
    Along the path realizing an actual order-target subgroup every partial
    join passes the filter, so pruning never loses a witness.
    """
    primes = [p for p in pi if g.order() % p == 0]
    sylows = {p: sylow_subgroup(g, p) for p in primes}
    fixed = max(primes, key=lambda p: (sylows[p].order(), p))
    rest = [p for p in primes if p != fixed]
    conjugate_lists = [_subgroup_conjugates(g, sylows[p]) for p in rest]
    total = math.prod(len(lst) for lst in conjugate_lists)
    if total > SYLOW_COMBINATION_BUDGET:
        raise CapExceeded(
            f"Sylow system scan needs {total} combinations",
            needed=total,
            cap=SYLOW_COMBINATION_BUDGET,
        )
    base = sylows[fixed]
    if not rest:
        yield base
        return

    def walk(gens: list, level: int):
        for factor in conjugate_lists[level]:
            candidate = PermGroup(g.degree, gens + list(factor.generators))
            if target % candidate.order() != 0:
                continue
            if level + 1 == len(conjugate_lists):
                yield candidate
            else:
                yield from walk(gens + list(factor.generators), level + 1)

    yield from walk(list(base.generators), 0)


def _sylow_scan(
    g: PermGroup, pi: PrimeSet, target: int
) -> tuple[PermGroup | None, int]:
    """First order-target subgroup from the Sylow system scan, or proof of none.

    Returns (witness, combinations examined); witness None means no subgroup
    of order target exists anywhere in g, by the completeness of the scan.
    """
    combinations = 0
    for candidate in _sylow_generated(g, pi, target):
        combinations += 1
        if candidate.order() == target:
            return candidate, combinations
    return None, combinations


def find_hall_subgroup(
    g: PermGroup,
    pi: PrimeSet,
    exhaustive: bool | None = None,
    attempts: int = 20,
) -> HallSearchResult:
    """Search for a Hall pi-subgroup.

    Phase one is seeded randomized greedy growth.  Phase two, entered when
    the greedy phase fails and the group is under the exhaustive cap (or
    exhaustive=True is forced), is the complete Sylow system scan, whose
    failure proves absence.  On soluble groups under the cap the result is
    therefore always found.
    """
    budget: dict = {}
    target = pi.part_of(g.order())
    if target == 1:
        return HallSearchResult(
            status="found", pi=pi, subgroup=PermGroup.trivial(g.degree), budget_used=budget
        )
    if target == g.order():
        return HallSearchResult(status="found", pi=pi, subgroup=g, budget_used=budget)
    rng = random.Random(search_seed())
    if exhaustive is not True:
        witness, tried = _greedy_phase(g, pi, target, attempts, rng)
        budget["random_growth_steps"] = tried
        if witness is not None:
            return HallSearchResult(
                status="found", pi=pi, subgroup=witness, budget_used=budget
            )
    if exhaustive is False:
        return HallSearchResult(status="unknown", pi=pi, subgroup=None, budget_used=budget)
    if exhaustive is None and g.order() > DEFAULT_EXHAUSTIVE_SEARCH_CAP:
        return HallSearchResult(status="unknown", pi=pi, subgroup=None, budget_used=budget)
    if g.order() > DEFAULT_EXHAUSTIVE_SEARCH_CAP:
        raise PreconditionError(
            f"exhaustive Hall search requires order <= {DEFAULT_EXHAUSTIVE_SEARCH_CAP}"
        )
    witness, combinations = _sylow_scan(g, pi, target)
    budget["sylow_combinations"] = combinations
    if witness is not None:
        return HallSearchResult(
            status="found", pi=pi, subgroup=witness, budget_used=budget
        )
    return HallSearchResult(status="proven_absent", pi=pi, subgroup=None, budget_used=budget)


@dataclass(frozen=True)
class HeredityReport:
    """Hall property inherited by a normal subgroup and its quotient."""

    intersection_is_hall: bool
    image_is_hall: bool

    @property
    def holds(self) -> bool:
        return self.intersection_is_hall and self.image_is_hall


def check_hall_heredity(
    g: PermGroup, hall: PermGroup, pi: PrimeSet, normal: PermGroup
) -> HeredityReport:
    """For normal N: H∩N is a Hall pi-subgroup of N and HN/N one of G/N."""
    if not is_hall_subgroup(hall, g, pi):
        raise PreconditionError("check_hall_heredity needs a genuine Hall subgroup")
    if not is_normal(normal, g):
        raise PreconditionError("check_hall_heredity needs a normal subgroup")
    meet = intersection(hall, normal)
    first = is_hall_subgroup(meet, normal, pi)
    q = quotient_by(g, normal)
    image = q.image_subgroup(hall)
    second = is_hall_subgroup(image, q.target, pi)
    return HeredityReport(intersection_is_hall=first, image_is_hall=second)


def confirm_no_nilpotent_hall_2p(simple_group: PermGroup, p: int) -> bool:
    """True iff the simple group has no nilpotent Hall {2,p}-subgroup.

    p must be an odd prime divisor of the order.  Every subgroup whose order
    is the full {2,p}-part has a conjugate among the Sylow system joins, and
    nilpotency is preserved by conjugation, so testing each full-order join
    for nilpotency decides the claim; no such subgroup at all also confirms
    it.
    """
    if p == 2:
        raise PreconditionError("p must be odd")
    if simple_group.order() % p != 0:
        raise PreconditionError(f"{p} does not divide the group order")
    if not is_simple(simple_group) or is_soluble(simple_group):
        raise PreconditionError("expected a non-abelian simple group")
    pi = PrimeSet([2, p])
    target = pi.part_of(simple_group.order())
    for candidate in _sylow_generated(simple_group, pi, target):
        if candidate.order() == target and is_nilpotent(candidate):
            return False
    return True
