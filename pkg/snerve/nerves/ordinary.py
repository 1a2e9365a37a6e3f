from typing import List, Tuple

from snerve.enriched.fincat import Arrow, FinCat, FinFunctor, Obj
from snerve.simplicial.maps import SSetMap
from snerve.simplicial.sset import TruncatedSSet

# A k-chain is stored as (x_0, f_1, ..., f_k) with f_i: x_{i-1} -> x_i.
Chain = Tuple


def chain_objects(D: FinCat, chain: Chain) -> List[Obj]:
    """``[x_0, ..., x_k]`` of a chain."""
    objects = [chain[0]]
    for f in chain[1:]:
        objects.append(D.tgt(f))
    return objects


def chain_arrow(D: FinCat, chain: Chain, i: int, j: int) -> Arrow:
    """The composite ``d_{ij}: x_i -> x_j`` of a chain, ``i <= j``."""
    if i == j:
        return D.identity(chain_objects(D, chain)[i])
    arrow = chain[i + 1]
    for f in chain[i + 2:j + 1]:
        arrow = D.compose(f, arrow)
    return arrow


def chain_from_arrows(D: FinCat, x0: Obj, arrows) -> Chain:
    return (x0,) + tuple(arrows)


def ordinary_nerve(D: FinCat, cap: int) -> TruncatedSSet:
    """
    The nerve of a finite category truncated at ``cap``.

    k-cells are composable chains ``(x_0, f_1, ..., f_k)``. ``d_0`` drops
    the first arrow, ``d_k`` the last, an interior ``d_i`` composes
    ``f_{i+1}∘f_i``, and ``s_i`` inserts the identity of ``x_i``.

    Example:
        >>> ordinary_nerve(cyclic_group_category(2), 3).counts()
        (1, 2, 4, 8)
    """
    cells = [[(x,) for x in D.objects]]
    for k in range(1, cap + 1):
        cells.append([c + (f,) for c in cells[-1] for f in D.arrows_from(_last(D, c))])

    def face_fn(k, i, c):
        if i == 0:
            return (D.tgt(c[1]),) + c[2:]
        if i == k:
            return c[:-1]
        return c[:i] + (D.compose(c[i + 1], c[i]),) + c[i + 2:]

    def degen_fn(k, i, c):
        x = c[0] if i == 0 else D.tgt(c[i])
        return c[:i + 1] + (D.identity(x),) + c[i + 1:]

    return TruncatedSSet.from_operators(cap, cells, face_fn, degen_fn, name='N({})'.format(D.name))


def _last(D: FinCat, chain: Chain) -> Obj:
    return chain[0] if len(chain) == 1 else D.tgt(chain[-1])


def ordinary_nerve_map(F: FinFunctor, source: TruncatedSSet, target: TruncatedSSet) -> SSetMap:
    """``N(F)`` between ordinary nerves."""
    def fn(k, c):
        return (F.on_objects[c[0]],) + tuple(F.on_arrows[f] for f in c[1:])

    return SSetMap.from_function(source, target, fn, name='N(F)')
