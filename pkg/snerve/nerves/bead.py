"""
Bead shapes of finite ordered sets.

A bead shape of ``I = {i_0 < ... < i_m}`` is an ordered partition
``<I_0 | I_1 | ... | I_r>`` of I into nonempty blocks with
``I_0 = {i_0, i_m}``. It corresponds to the strictly increasing chain
``U_0 ⊂ U_1 ⊂ ... ⊂ U_r = I`` with ``U_t = I_0 ∪ ... ∪ I_t``.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from snerve.extras.combinatorics import nonempty_subsets, ordered_set_partitions

# A chain of subsets, each a sorted tuple.
SubsetChain = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class BeadShape:
    """
    Attributes:
    - ground (tuple): The sorted set I.
    - blocks (tuple): ``(I_0, ..., I_r)``, each a sorted tuple.
    """
    ground: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.blocks) - 1

    @property
    def endpoints(self) -> Tuple[int, int]:
        return self.ground[0], self.ground[-1]

    def chain(self) -> SubsetChain:
        out = []
        current: Tuple[int, ...] = ()
        for block in self.blocks:
            current = tuple(sorted(current + block))
            out.append(current)
        return tuple(out)

    @classmethod
    def from_chain(cls, chain: SubsetChain) -> 'BeadShape':
        blocks = [chain[0]] + [tuple(sorted(set(b) - set(a))) for a, b in zip(chain, chain[1:])]
        return cls(chain[-1], tuple(blocks))

    def map(self, fn) -> 'BeadShape':
        """Image under an order-reversing or order-preserving injection of the ground set."""
        return BeadShape(tuple(sorted(fn(v) for v in self.ground)),
                         tuple(tuple(sorted(fn(v) for v in block)) for block in self.blocks))

    def __str__(self):
        return '<' + '|'.join(''.join(str(v) for v in block) for block in self.blocks) + '>'


def is_bead_shape(shape: BeadShape) -> bool:
    ground = shape.ground
    if len(ground) < 2 or list(ground) != sorted(set(ground)):
        return False
    seen = [v for block in shape.blocks for v in block]
    return (all(shape.blocks) and sorted(seen) == list(ground)
            and shape.blocks[0] == (ground[0], ground[-1]))


def enumerate_bead_shapes(I: Sequence[int]) -> List[BeadShape]:
    """
    Every bead shape of I, sorted by dimension then lexicographically by blocks.

    Raises:
        ValueError: If ``|I| < 2``.

    Example:
        >>> [str(b) for b in enumerate_bead_shapes([0, 1, 2, 3])]
        ['<03|12>', '<03|1|2>', '<03|2|1>']
    """
    ground = tuple(sorted(set(I)))
    if len(ground) < 2:
        raise ValueError('bead shapes need at least two elements, got {}'.format(list(I)))
    ends = (ground[0], ground[-1])
    shapes = [BeadShape(ground, (ends,) + blocks) for blocks in ordered_set_partitions(ground[1:-1])]
    return sorted(shapes, key=lambda b: (b.dimension, b.blocks))


@lru_cache(maxsize=None)
def bead_order(n: int) -> Tuple[SubsetChain, ...]:
    """
    Canonical order of all bead chains of subsets of ``[n]``: by subset size,
    then bead dimension, then lexicographically. Coherent simplices store their
    values aligned with this order; every face of a bead is determined by
    beads earlier in it.
    """
    out = []
    for I in nonempty_subsets(range(n + 1)):
        if len(I) >= 2:
            out.extend(b.chain() for b in enumerate_bead_shapes(I))
    return tuple(out)


@lru_cache(maxsize=None)
def bead_position(n: int) -> dict:
    return {chain: r for r, chain in enumerate(bead_order(n))}
