"""Quotients by normal subgroups, realized as coset actions.

The quotient map G -> G/N is the right-coset action of G on the cosets of N.
Each coset is named by its canonical representative: the lexicographically
least element of the coset under image-array order, computed greedily from
N's stabilizer chain without enumerating N.  Coset 0 is N itself (the least
element of a group is always the identity), so the target degree equals the
index and the map of the identity is the identity.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .config import DEFAULT_QUOTIENT_DEGREE_CAP
from .errors import CapExceeded, SubgroupError
from .group import PermGroup, is_normal
from .perm import Permutation, _mul


class QuotientMap:
    """The coset-action homomorphism for a normal subgroup N of G."""

    __slots__ = ("source", "kernel", "target", "coset_reps", "_index_of")

    def __init__(self, source: PermGroup, kernel: PermGroup, degree_cap: int | None = None):
        cap = DEFAULT_QUOTIENT_DEGREE_CAP if degree_cap is None else degree_cap
        if not is_normal(kernel, source):
            raise SubgroupError("quotient kernel must be normal in the source")
        index = source.order() // kernel.order()
        if index > cap:
            raise CapExceeded(
                f"quotient index {index} exceeds degree cap {cap}",
                needed=index,
                cap=cap,
            )
        nchain = kernel.chain
        identity = tuple(range(source.degree))
        reps: list[tuple[int, ...]] = [nchain.min_coset_rep(identity)]
        index_of: dict[tuple[int, ...], int] = {reps[0]: 0}
        queue = deque([0])
        gen_images = [g.images for g in source.generators]
        while queue:
            i = queue.popleft()
            base = reps[i]
            for g in gen_images:
                rep = nchain.min_coset_rep(_mul(base, g))
                if rep not in index_of:
                    index_of[rep] = len(reps)
                    reps.append(rep)
                    queue.append(len(reps) - 1)
        if len(reps) != index:
            raise AssertionError(
                f"coset walk found {len(reps)} cosets, index is {index}"
            )
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "kernel", kernel)
        object.__setattr__(self, "coset_reps", tuple(Permutation(r) for r in reps))
        object.__setattr__(self, "_index_of", index_of)
        target_gens = [self._image_images(g.images) for g in source.generators]
        object.__setattr__(
            self,
            "target",
            PermGroup(max(index, 1), [Permutation(t) for t in target_gens]),
        )

    def __setattr__(self, name, value):
        raise AttributeError("QuotientMap is immutable")

    def _image_images(self, x: tuple[int, ...]) -> tuple[int, ...]:
        nchain = self.kernel.chain
        index_of = self._index_of
        return tuple(
            index_of[nchain.min_coset_rep(_mul(rep.images, x))]
            for rep in self.coset_reps
        )

    @property
    def index(self) -> int:
        return len(self.coset_reps)

    def image(self, x: Permutation) -> Permutation:
        """Image of a source element in the coset action."""
        if not self.source.contains(x):
            raise SubgroupError("element is not in the quotient's source group")
        return Permutation(self._image_images(x.images))

    def image_subgroup(self, sub: PermGroup) -> PermGroup:
        """Image of a subgroup of the source."""
        if not sub.is_subgroup_of(self.source):
            raise SubgroupError("image_subgroup argument is not a subgroup of source")
        return PermGroup(self.target.degree, [self.image(g) for g in sub.generators])

    def preimage_of(self, t: Permutation) -> Permutation:
        """One source element mapping to t (the canonical rep of its coset).

        The cosets are numbered so that image(r_i) sends 0 to i; since elements
        with the same image at 0 lie in the same coset, agreeing at coset 0
        forces full agreement.
        """
        if not self.target.contains(t):
            raise SubgroupError("element is not in the quotient's target group")
        return self.coset_reps[t(0)]

    def preimage_subgroup(self, sub: PermGroup) -> PermGroup:
        """Full preimage of a subgroup of the target."""
        if not sub.is_subgroup_of(self.target):
            raise SubgroupError("preimage_subgroup argument is not a subgroup of target")
        gens = list(self.kernel.generators) + [
            self.preimage_of(t) for t in sub.generators
        ]
        result = PermGroup(self.source.degree, gens)
        expected = sub.order() * self.kernel.order()
        if result.order() != expected:
            raise AssertionError(
                f"preimage order {result.order()} != |sub| * |kernel| = {expected}"
            )
        return result


def quotient_by(source: PermGroup, kernel: PermGroup, degree_cap: int | None = None) -> QuotientMap:
    """Quotient map of a group by a normal subgroup."""
    return QuotientMap(source, kernel, degree_cap)


def factor_group(big: PermGroup, small: PermGroup) -> PermGroup:
    """The abstract factor big/small as a permutation group.

    For a trivial denominator the group itself is returned unchanged (same
    degree), which keeps internal series computations off the regular
    representation; public quotient maps always go through QuotientMap.
    """
    if small.is_trivial():
        return big
    return quotient_by(big, small).target
