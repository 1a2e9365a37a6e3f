"""
Isomorphism search between truncated simplicial sets.

The search matches nondegenerate cells dimension by dimension, ascending.
A candidate image must be an unused nondegenerate cell of the same signature
whose boundary is the image of the source boundary. Once a dimension is
matched, degenerate cells follow from their Eilenberg-Zilber forms.
"""
import logging
from typing import Dict, Iterator, List, Optional

import numpy as np

from snerve.simplicial.maps import SSetMap, is_bijective, validate_map
from snerve.simplicial.sset import Cell, TruncatedSSet, pull_back_cell

logger = logging.getLogger(__name__)


def coface_signatures(X: TruncatedSSet) -> List[Dict[Cell, tuple]]:
    """
    For each cell, how often it occurs as the i-th face of a nondegenerate
    cell one dimension up, one column per i. Isomorphisms preserve it.
    """
    signatures = []
    for k in range(X.cap + 1):
        position = {x: r for r, x in enumerate(X.cells[k])}
        table = np.zeros((len(X.cells[k]), k + 2), dtype=np.int64)
        if k < X.cap:
            for z in X.nondegenerate(k + 1):
                for i in range(k + 2):
                    table[position[X.d(k + 1, i, z)], i] += 1
        signatures.append({x: tuple(table[r]) for x, r in position.items()})
    return signatures


def sset_iso(X: TruncatedSSet, Y: TruncatedSSet) -> Optional[SSetMap]:
    """
    Finds an isomorphism ``X -> Y`` or proves there is none within the cap.

    Args:
        X (TruncatedSSet): Source.
        Y (TruncatedSSet): Target.

    Returns:
        Optional[SSetMap]: A verified isomorphism, or None when the exhaustive
        search finds none (including on differing caps or cell counts).
    """
    if X.cap != Y.cap:
        return None
    if X.counts() != Y.counts() or X.nondegenerate_counts() != Y.nondegenerate_counts():
        return None
    cap = X.cap
    sig_x, sig_y = coface_signatures(X), coface_signatures(Y)
    nd_x = [X.nondegenerate(k) for k in range(cap + 1)]
    nd_y = [Y.nondegenerate(k) for k in range(cap + 1)]
    if any(sorted(sig_x[k][x] for x in nd_x[k]) != sorted(sig_y[k][y] for y in nd_y[k])
           for k in range(cap + 1)):
        return None
    nd_y_sets = [set(c) for c in nd_y]
    ez = [{x: X.ez_form(k, x) for x in X.cells[k] if X.is_degenerate(k, x)} for k in range(cap + 1)]

    assign: List[Dict[Cell, Cell]] = [{} for _ in range(cap + 1)]
    used: List[set] = [set() for _ in range(cap + 1)]
    steps = []
    for k in range(cap + 1):
        steps.extend((k, x) for x in nd_x[k])
        steps.append((k, None))

    def choose(k: int, x: Cell) -> Iterator[None]:
        if k == 0:
            pool = nd_y[0]
        else:
            target = tuple(assign[k - 1][f] for f in X.boundary(k, x))
            pool = [y for y in Y.cells_with_boundary(k, target) if y in nd_y_sets[k]]
        for y in pool:
            if y in used[k] or sig_y[k][y] != sig_x[k][x]:
                continue
            assign[k][x] = y
            used[k].add(y)
            yield
            used[k].discard(y)
            del assign[k][x]

    def close(k: int) -> Iterator[None]:
        added = []
        for x, (p, root, sigma) in ez[k].items():
            assign[k][x] = pull_back_cell(Y, assign[p][root], sigma, p)
            added.append(x)
        if len(set(assign[k].values())) == len(Y.cells[k]):
            yield
        for x in added:
            del assign[k][x]

    def step(index: int) -> Iterator[None]:
        k, x = steps[index]
        return close(k) if x is None else choose(k, x)

    stack = [step(0)]
    while stack:
        try:
            next(stack[-1])
        except StopIteration:
            stack.pop()
            continue
        if len(stack) < len(steps):
            stack.append(step(len(stack)))
            continue
        candidate = SSetMap(X, Y, [dict(a) for a in assign], name='iso')
        if is_bijective(candidate) and validate_map(candidate).ok:
            logger.debug('isomorphism %s -> %s found', X.name, Y.name)
            return candidate
    logger.debug('no isomorphism %s -> %s', X.name, Y.name)
    return None


def is_isomorphism(f: SSetMap) -> bool:
    return is_bijective(f) and validate_map(f).ok
