"""
Horn enumeration and filler search for truncated simplicial sets.
"""
import logging
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from snerve.extras.concurrency import parallel_map
from snerve.simplicial.maps import SSetMap
from snerve.simplicial.sset import Cell, TruncatedSSet, pull_back_cell
from snerve.types.enum import HornMode
from snerve.types.error import CapError
from snerve.types.report import Report

logger = logging.getLogger(__name__)

# A horn Λ^n_k -> X is the tuple of its faces (y_0, ..., y_n) with None at k.
HornFaces = Tuple[Optional[Cell], ...]


class _FaceIndex:
    """Cells of one dimension indexed by ``(i, d_i x)``."""

    def __init__(self, X: TruncatedSSet, k: int):
        self.by_face: Dict[Tuple[int, Cell], List[Cell]] = {}
        for x in X.cells[k]:
            for i in range(k + 1):
                self.by_face.setdefault((i, X.d(k, i, x)), []).append(x)

    def lookup(self, i: int, face: Cell) -> List[Cell]:
        return self.by_face.get((i, face), [])


def horn_maps(X: TruncatedSSet, n: int, k: int, index: _FaceIndex = None) -> Iterator[HornFaces]:
    """
    Yields every map ``Λ^n_k -> X`` as a face tuple, n >= 2.

    The faces satisfy ``d_i y_j = d_{j-1} y_i`` for ``i < j`` both different
    from ``k``; this is exactly the data of a map out of the horn.
    """
    if n < 2:
        raise ValueError('horns are enumerated for n >= 2')
    if index is None:
        index = _FaceIndex(X, n - 1)
    positions = [j for j in range(n + 1) if j != k]
    chosen: Dict[int, Cell] = {}

    def extend(step: int) -> Iterator[HornFaces]:
        if step == len(positions):
            yield tuple(chosen.get(j) for j in range(n + 1))
            return
        j = positions[step]
        earlier = positions[:step]
        if earlier:
            first = earlier[0]
            candidates = index.lookup(first, X.d(n - 1, j - 1, chosen[first]))
        else:
            candidates = X.cells[n - 1]
        for y in candidates:
            if all(X.d(n - 1, i, y) == X.d(n - 1, j - 1, chosen[i]) for i in earlier[1:]):
                chosen[j] = y
                yield from extend(step + 1)
        chosen.pop(j, None)

    yield from extend(0)


class _FillerIndex:
    """n-cells indexed by their faces with position k left out."""

    def __init__(self, X: TruncatedSSet, n: int, k: int):
        self.k = k
        self.table: Dict[tuple, List[Cell]] = {}
        for z in X.cells[n]:
            key = tuple(X.d(n, i, z) for i in range(n + 1) if i != k)
            self.table.setdefault(key, []).append(z)

    def fillers(self, faces: HornFaces) -> List[Cell]:
        key = tuple(y for i, y in enumerate(faces) if i != self.k)
        return self.table.get(key, [])


def horn_fillers(X: TruncatedSSet, n: int, k: int, faces: HornFaces) -> List[Cell]:
    """All n-cells of X whose faces away from k are ``faces``."""
    return _FillerIndex(X, n, k).fillers(faces)


def _horn_kinds(mode: HornMode, n: int) -> List[int]:
    if mode == HornMode.inner:
        return list(range(1, n))
    return list(range(n + 1))


def horn_check(X: TruncatedSSet, mode: HornMode = HornMode.inner, d: int = None,
               first_only: bool = False) -> Report:
    """
    Searches fillers for every horn ``Λ^n_k -> X`` with ``2 <= n <= d``.

    Parameters:
    - X (TruncatedSSet): The simplicial set.
    - mode (HornMode): ``inner`` for 0 < k < n only, ``all`` for every k.
    - d (int, optional): Highest horn dimension; defaults to the cap.
    - first_only (bool): Stop each horn kind at its first unfillable horn.

    Returns:
    - Report: one violation ``'Lambda^n_k'`` per unfillable horn, with the
      face tuple as witness. A note records that horns above ``d`` are unknown.

    Raises:
    - CapError: If ``d > X.cap``.

    Horns with n = 1 always fill by degeneracies and are not enumerated.
    """
    d = X.cap if d is None else d
    if d > X.cap:
        raise CapError('horn dimension {} exceeds cap {}'.format(d, X.cap))
    report = Report(subject='{} horns of {}'.format(HornMode(mode).name, X.name or 'sset'))
    jobs = [(n, k) for n in range(2, d + 1) for k in _horn_kinds(mode, n)]
    indexes = {n: _FaceIndex(X, n - 1) for n in range(2, d + 1)}

    def run(job):
        n, k = job
        fillers = _FillerIndex(X, n, k)
        missing = []
        for faces in horn_maps(X, n, k, indexes[n]):
            if not fillers.fillers(faces):
                missing.append(faces)
                if first_only:
                    break
        return missing

    for (n, k), missing in zip(jobs, parallel_map(run, jobs)):
        logger.debug('%s: Lambda^%d_%d has %d unfillable horn(s)', X.name, n, k, len(missing))
        for faces in missing:
            report.add('Lambda^{}_{}'.format(n, k), faces)
    if d < X.cap:
        report.notes.append('horns above dimension {} not checked'.format(d))
    report.notes.append('unknown beyond cap {}'.format(X.cap))
    return report


def relative_horn_check(p: SSetMap, d: int, kinds: Callable[[int], List[int]],
                        accept: Callable[[int, int, HornFaces], bool] = None,
                        first_only: bool = False) -> Report:
    """
    Lifting problems for ``p: X -> S`` against horn inclusions.

    For every horn ``h: Λ^n_k -> X`` with ``k in kinds(n)`` (and accepted by
    ``accept(n, k, faces)``) and every filler ``z`` of ``p∘h`` in S, some
    filler of ``h`` must map to ``z``.

    Raises:
        CapError: If ``d`` exceeds the cap of ``p``.
    """
    if d > p.cap:
        raise CapError('horn dimension {} exceeds cap {}'.format(d, p.cap))
    X, S = p.source, p.target
    report = Report(subject='relative horns of {}'.format(p.name or 'map'))
    for n in range(2, d + 1):
        index = _FaceIndex(X, n - 1)
        for k in kinds(n):
            top = _FillerIndex(X, n, k)
            bottom = _FillerIndex(S, n, k)
            for faces in horn_maps(X, n, k, index):
                if accept is not None and not accept(n, k, faces):
                    continue
                image = tuple(None if y is None else p(n - 1, y) for y in faces)
                over = {p(n, z) for z in top.fillers(faces)}
                for z in bottom.fillers(image):
                    if z not in over:
                        report.add('lift Lambda^{}_{}'.format(n, k), (faces, z))
                        if first_only:
                            break
    if d < p.cap:
        report.notes.append('horns above dimension {} not checked'.format(d))
    return report


def leading_edge(X: TruncatedSSet, n: int, faces: HornFaces) -> Cell:
    """The edge ``{0, 1}`` of a horn ``Λ^n_0``, read off its last face."""
    return pull_back_cell(X, faces[n], (0, 1), n - 1)
