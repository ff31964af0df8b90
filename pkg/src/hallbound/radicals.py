"""Radical subgroups, the layer, and height invariants.

The characteristic-subgroup tower: Sylow subgroups, pi-cores, the largest
normal p-soluble subgroup, the Fitting subgroup (product of p-cores), the
layer (product of subnormal quasisimple subgroups, computed through the
centralizer of the Fitting subgroup), their product, and the heights read
off iterated quotients.  Height computations return an explicit ascending
series as a certificate.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import PreconditionError
from .group import (
    PermGroup,
    center,
    centralizer,
    is_normal,
)
from .perm import Permutation
from .primes import PrimeSet, factorize, is_prime, prime_divisors
from .quotient import quotient_by
from .structure import (
    derived_series,
    is_nilpotent,
    is_soluble,
    minimal_normal_subgroups,
    normal_part,
    socle,
)


@functools.lru_cache(maxsize=None)
def sylow_subgroup(g: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup, grown greedily through normalizers.

    While the current p-subgroup P is not full, its normalizer in g contains
    a p-element outside P, and adjoining one keeps a p-group because P is
    normal in the extension.  The normalizer is found by element filtering,
    so this operation lives under the enumeration cap.  Deterministic: the
    lexicographically least usable element is adjoined at each step.
    """
    target = PrimeSet([p]).part_of(g.order())
    current = PermGroup.trivial(g.degree)
    if target == 1:
        return current
    elements = sorted(g.elements(), key=lambda x: x.images)
    while current.order() < target:
        adjoin = None
        if current.is_trivial():
            candidates = elements
        else:
            candidates = [
                x
                for x in elements
                if all(current.contains(h.conjugate(x)) for h in current.generators)
            ]
        for x in candidates:
            if current.contains(x):
                continue
            o = x.order()
            if o % p != 0:
                continue
            y = x ** (o // (p ** factorize(o)[p]))
            if current.contains(y):
                continue
            adjoin = y
            break
        if adjoin is None:
            raise AssertionError("Sylow growth stalled below the p-part")
        current = PermGroup(g.degree, current.generators + (adjoin,))
    if current.order() != target:
        raise AssertionError("Sylow subgroup overshot the p-part")
    return current


@functools.lru_cache(maxsize=None)
def pi_core(g: PermGroup, pi: PrimeSet) -> PermGroup:
    """Largest normal pi-subgroup.

    A nontrivial core contains a minimal normal pi-subgroup, so groups
    without one finish on that structural certificate alone; otherwise the
    core is grown by a closure sweep over the original domain.
    """
    if g.is_trivial() or pi.is_pi_number(g.order()):
        return g
    if not any(pi.is_pi_number(n.order()) for n in minimal_normal_subgroups(g)):
        return PermGroup.trivial(g.degree)
    return normal_part(
        g,
        lambda n: pi.is_pi_number(n.order()),
        seed_ok=lambda x: pi.is_pi_number(x.order()),
    )


def p_core(g: PermGroup, p: int) -> PermGroup:
    return pi_core(g, PrimeSet([p]))


def p_prime_core(g: PermGroup, p: int) -> PermGroup:
    """The largest normal subgroup of order prime to p."""
    return pi_core(g, PrimeSet([p]).complement_in(g.order()))


@functools.lru_cache(maxsize=None)
def p_soluble_radical(g: PermGroup, p: int) -> PermGroup:
    """Largest normal p-soluble subgroup.

    Ascends by alternating p'-core and p-core steps, each pulled back
    through the quotient by the part already found.  At the limit both
    cores of the quotient vanish, and a nontrivial p-soluble normal
    subgroup up there would contain a minimal normal subgroup lying inside
    one of them, so the limit is the whole radical.  Quotients are only
    ever taken by the accumulated radical, never by a small piece of it.
    """
    if g.is_trivial() or g.order() % p != 0 or is_soluble(g):
        return g
    prime = PrimeSet([p])
    current = PermGroup.trivial(g.degree)
    while current.order() < g.order():
        if current.is_trivial():
            q = None
            reduced = g
        else:
            q = quotient_by(g, current)
            reduced = q.target
        step = pi_core(reduced, prime.complement_in(reduced.order()))
        if step.is_trivial():
            step = pi_core(reduced, prime)
        if step.is_trivial():
            return current
        current = step if q is None else q.preimage_subgroup(step)
    return g


@functools.lru_cache(maxsize=None)
def is_p_soluble(g: PermGroup, p: int) -> bool:
    """Every composition factor is a p-group or a p'-group.

    Fast paths: p'-groups and soluble groups qualify outright; otherwise
    the group qualifies exactly when it equals its own p-soluble radical.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if g.order() % p != 0 or is_soluble(g):
        return True
    return p_soluble_radical(g, p).order() == g.order()


@functools.lru_cache(maxsize=None)
def fitting_subgroup(g: PermGroup) -> PermGroup:
    """Largest normal nilpotent subgroup: the product of all p-cores."""
    gens: list[Permutation] = []
    for p in prime_divisors(g.order()) if g.order() > 1 else ():
        gens.extend(p_core(g, p).generators)
    result = PermGroup(g.degree, gens)
    if not is_nilpotent(result) or not is_normal(result, g):
        raise AssertionError("Fitting subgroup failed its own invariants")
    return result


def _perfect_core(g: PermGroup) -> PermGroup:
    """Last term of the derived series."""
    return derived_series(g)[-1]


@functools.lru_cache(maxsize=None)
def layer(g: PermGroup) -> PermGroup:
    """Product of all subnormal quasisimple subgroups.

    Computed inside the centralizer C of the Fitting subgroup: the layer is
    the perfect core of the preimage of the socle of C/Z(C).  When C equals
    its center there are no components and the layer is trivial.
    """
    f = fitting_subgroup(g)
    c = centralizer(g, f)
    z = center(c)
    if z.order() == c.order():
        return PermGroup.trivial(g.degree)
    if z.is_trivial():
        # C/Z is C itself; skip the quotient and read the socle directly.
        soc = socle(c).socle
        return _perfect_core(soc)
    q = quotient_by(c, z)
    soc_quot = socle(q.target).socle
    pre = q.preimage_subgroup(soc_quot)
    e = _perfect_core(pre)
    return e


@functools.lru_cache(maxsize=None)
def generalized_fitting_subgroup(g: PermGroup) -> PermGroup:
    """Product of the Fitting subgroup and the layer."""
    f = fitting_subgroup(g)
    e = layer(g)
    result = PermGroup(g.degree, f.generators + e.generators)
    if not is_normal(result, g):
        raise AssertionError("generalized Fitting subgroup is not normal")
    return result


@dataclass(frozen=True)
class HeightCertificate:
    """An ascending normal series witnessing a height computation.

    series starts at the trivial group and ends at the whole group; height
    counts the computation's characteristic steps (series terms for Fitting
    kinds, p-factors for length kinds).
    """

    series: tuple[PermGroup, ...]
    height: int
    kind: str


def _ascending_tower(g: PermGroup, step, kind: str) -> HeightCertificate:
    """Iterate current -> preimage of step(G/current) until the whole group."""
    series = [PermGroup.trivial(g.degree)]
    current = series[0]
    while current.order() < g.order():
        if current.is_trivial():
            nxt = step(g)
        else:
            q = quotient_by(g, current)
            nxt = q.preimage_subgroup(step(q.target))
        if nxt.order() <= current.order():
            raise PreconditionError(
                f"{kind} series stalled at order {current.order()}; "
                "input violates the operation's hypothesis"
            )
        series.append(nxt)
        current = nxt
    return HeightCertificate(series=tuple(series), height=len(series) - 1, kind=kind)


def fitting_height(g: PermGroup) -> HeightCertificate:
    """Length of the ascending Fitting series; defined for soluble groups."""
    if not is_soluble(g):
        raise PreconditionError("Fitting height requires a soluble group")
    return _ascending_tower(g, fitting_subgroup, "fitting")


def generalized_fitting_height(g: PermGroup) -> HeightCertificate:
    """Steps of the ascending generalized Fitting series; 0 for the trivial group.

    The generalized Fitting subgroup of a nontrivial finite group is
    nontrivial, so the tower always terminates.
    """
    return _ascending_tower(g, generalized_fitting_subgroup, "generalized_fitting")


def p_length(g: PermGroup, p: int) -> HeightCertificate:
    """Number of p-factors in the alternating upper p-series.

    Requires a p-soluble group.  The series alternates largest-normal-p'-
    and largest-normal-p-quotient steps; each p-step is counted.
    """
    if not is_p_soluble(g, p):
        raise PreconditionError(f"p_length requires a {p}-soluble group")
    series = [PermGroup.trivial(g.degree)]
    current = series[0]
    count = 0
    while current.order() < g.order():
        # p'-step
        if current.is_trivial():
            nxt = p_prime_core(g, p)
        else:
            q = quotient_by(g, current)
            nxt = q.preimage_subgroup(p_prime_core(q.target, p))
        if nxt.order() > current.order():
            series.append(nxt)
            current = nxt
        if current.order() == g.order():
            break
        # p-step
        if current.is_trivial():
            nxt = p_core(g, p)
        else:
            q = quotient_by(g, current)
            nxt = q.preimage_subgroup(p_core(q.target, p))
        if nxt.order() <= current.order():
            raise AssertionError(
                "upper p-series stalled; group should have been p-soluble"
            )
        count += 1
        series.append(nxt)
        current = nxt
    kind = "two_length" if p == 2 else "p_length"
    return HeightCertificate(series=tuple(series), height=count, kind=kind)


def p_length_value(g: PermGroup, p: int) -> int:
    return p_length(g, p).height
