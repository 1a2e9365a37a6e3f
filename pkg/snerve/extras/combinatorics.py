import itertools
from typing import Iterator, List, Sequence, Tuple

from scipy.special import comb

# A monotone map f: [m] -> [n] is stored as the tuple (f(0), ..., f(m)).
Monotone = Tuple[int, ...]


def monotone_maps(m: int, n: int) -> List[Monotone]:
    """
    Lists every monotone map [m] -> [n] in lexicographic order.

    Args:
        m (int): Dimension of the source, m >= 0.
        n (int): Dimension of the target, n >= 0.

    Returns:
        list: Tuples (f(0), ..., f(m)) with f(0) <= ... <= f(m) <= n.

    Example:
        >>> monotone_maps(1, 1)
        [(0, 0), (0, 1), (1, 1)]
    """
    return list(itertools.combinations_with_replacement(range(n + 1), m + 1))


def count_monotone_maps(m: int, n: int) -> int:
    """
    Number of monotone maps [m] -> [n], i.e. C(m + n + 1, m + 1).

    Example:
        >>> count_monotone_maps(1, 2)
        6
    """
    return int(comb(m + n + 1, m + 1, exact=True))


def compose_monotone(g: Monotone, f: Monotone) -> Monotone:
    """Returns g∘f for f: [m] -> [n] and g: [n] -> [l]."""
    return tuple(g[v] for v in f)


def identity_monotone(n: int) -> Monotone:
    return tuple(range(n + 1))


def coface(n: int, i: int) -> Monotone:
    """The coface δ_i: [n-1] -> [n] skipping i."""
    return tuple(j if j < i else j + 1 for j in range(n))


def codegeneracy(n: int, i: int) -> Monotone:
    """The codegeneracy σ_i: [n+1] -> [n] hitting i twice."""
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


def split_monotone(theta: Monotone, n: int) -> Tuple[Monotone, Tuple[int, ...]]:
    """
    Factors theta: [a] -> [n] as an injection after a surjection.

    Args:
        theta (tuple): The monotone map.
        n (int): Dimension of the target.

    Returns:
        tuple: (surjection [a] -> [p], image) where image is the sorted tuple of
        hit values, so that theta(v) = image[surjection(v)].
    """
    image = tuple(sorted(set(theta)))
    position = {v: k for k, v in enumerate(image)}
    return tuple(position[v] for v in theta), image


def decompose_monotone(f: Monotone, n: int) -> List[Tuple[str, int, int]]:
    """
    Writes f: [m] -> [n] as a composite of cofaces and codegeneracies.

    The result is a list of generators ``(kind, dim, i)`` to be applied right to
    left: f = g_0 ∘ g_1 ∘ ... ∘ g_last. ``('delta', d, i)`` is δ_i: [d-1] -> [d]
    and ``('sigma', d, i)`` is σ_i: [d+1] -> [d]. The surjective part comes
    first (rightmost), then the injective part.

    Example:
        >>> decompose_monotone((0, 0, 2), 2)
        [('delta', 2, 1), ('sigma', 1, 0)]
    """
    surjection, image = split_monotone(f, n)
    generators = []
    # injective part: [p] -> [n], cofaces for the missing values, ascending
    missing = [v for v in range(n + 1) if v not in image]
    dim = n
    for v in reversed(missing):
        generators.append(('delta', dim, v))
        dim -= 1
    # surjective part: [m] -> [p], codegeneracies for the repeats
    repeats = [j for j in range(len(surjection) - 1) if surjection[j] == surjection[j + 1]]
    target = len(image) - 1
    for j in reversed(repeats):
        generators.append(('sigma', target, surjection[j]))
        target += 1
    return generators


def generator_map(kind: str, dim: int, i: int) -> Monotone:
    if kind == 'delta':
        return coface(dim, i)
    return codegeneracy(dim, i)


def nonempty_subsets(ground: Sequence[int]) -> List[Tuple[int, ...]]:
    """Nonempty subsets of a sorted ground set, ordered by size then lexicographically."""
    out = []
    for size in range(1, len(ground) + 1):
        out.extend(itertools.combinations(ground, size))
    return out


def ordered_set_partitions(items: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """
    Yields every ordered partition of ``items`` into nonempty blocks.

    Blocks are sorted tuples; the empty sequence has exactly one (empty) ordered
    partition.
    """
    items = tuple(items)
    if not items:
        yield ()
        return
    for size in range(1, len(items) + 1):
        for first in itertools.combinations(items, size):
            rest = tuple(v for v in items if v not in first)
            for tail in ordered_set_partitions(rest):
                yield (first,) + tail


def fubini(n: int) -> int:
    """
    Number of ordered set partitions of an n-element set.

    Computed as the number of strictly increasing chains from the empty set to
    the full set in the Boolean lattice, via sum_k k! S(n, k).
    """
    return sum(_surjections(n, k) for k in range(n + 1))


def _surjections(n: int, k: int) -> int:
    """Number of surjections from an n-set onto a k-set (inclusion-exclusion)."""
    return sum((-1) ** j * int(comb(k, j, exact=True)) * (k - j) ** n for j in range(k + 1))
