"""Descending, exhaustive, separated Z-indexed filtrations stored at their jumps."""
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, Tuple

from src.linalg.subspace import Subspace, zero_subspace


@dataclass(frozen=True)
class Filtration:
    """
    Steps ``(jump, space)`` with jumps increasing. Fil^i is the space of the
    first listed jump >= i, and zero beyond the last jump.
    """

    ambient_dim: int
    steps: Tuple[Tuple[int, Subspace], ...]

    @classmethod
    def from_steps(cls, ambient_dim: int, steps: Iterable[Tuple[int, Subspace]]) -> 'Filtration':
        return cls(ambient_dim, tuple((int(j), space) for j, space in steps))

    @classmethod
    def normalized(cls, ambient_dim: int, candidates: Sequence[Tuple[int, Subspace]]) -> 'Filtration':
        """
        Reduce candidate steps (same interpolation rule, not necessarily
        strict) to the jump representation.
        """
        ordered = sorted(candidates, key=lambda item: item[0])
        kept = []
        for k, (j, space) in enumerate(ordered):
            following = ordered[k + 1][1] if k + 1 < len(ordered) else zero_subspace(ambient_dim)
            if space != following:
                kept.append((j, space))
        return cls(ambient_dim, tuple(kept))

    @property
    def jumps(self) -> Tuple[int, ...]:
        return tuple(j for j, _ in self.steps)

    def at(self, i: int) -> Subspace:
        for j, space in self.steps:
            if i <= j:
                return space
        return zero_subspace(self.ambient_dim)

    def weights(self) -> List[int]:
        """Jumps with multiplicity equal to the dimension drop, ascending."""
        out: List[int] = []
        for k, (j, space) in enumerate(self.steps):
            following = self.steps[k + 1][1].dim if k + 1 < len(self.steps) else 0
            out.extend([j] * (space.dim - following))
        return out

    def weight_multiset(self) -> Counter:
        return Counter(self.weights())

    def hodge_number(self) -> int:
        return sum(self.weights())

    def restrict(self, w: Subspace) -> 'Filtration':
        """Induced filtration Fil^i ∩ W, still in ambient coordinates."""
        return Filtration.normalized(self.ambient_dim, [(j, space.intersect(w)) for j, space in self.steps])

    def transform(self, ambient_dim: int, fn: Callable[[Subspace], Subspace]) -> 'Filtration':
        """Apply a lattice-preserving map to each step (e.g. coordinate change)."""
        return Filtration.normalized(ambient_dim, [(j, fn(space)) for j, space in self.steps])

    def violations(self) -> List[str]:
        problems = []
        if self.ambient_dim == 0:
            return problems
        if not self.steps:
            problems.append('filtration has no steps (not exhaustive)')
            return problems
        jumps = self.jumps
        if any(a >= b for a, b in zip(jumps, jumps[1:])):
            problems.append('filtration jumps are not strictly increasing')
        for j, space in self.steps:
            if space.ambient_dim != self.ambient_dim:
                problems.append('Fil^%d lives in dimension %d, expected %d' % (j, space.ambient_dim, self.ambient_dim))
                return problems
        spaces = [space for _, space in self.steps]
        for (j1, a), (j2, b) in zip(self.steps, self.steps[1:]):
            if not (b < a):
                problems.append('Fil^%d is not strictly contained in Fil^%d' % (j2, j1))
        if not spaces[0].is_full():
            problems.append('Fil^%d is not the whole space (not exhaustive)' % jumps[0])
        if spaces[-1].is_zero():
            problems.append('last listed step Fil^%d is zero' % jumps[-1])
        return problems
