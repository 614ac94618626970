"""Algorithm X for exact cover, streaming every solution.

Columns are the integers ``0..n_cols-1``; each row is a sequence of the
columns it covers.  Column selection is deterministic: fewest remaining
candidate rows, ties broken by the smaller column index.  Rows are tried in
increasing index order unless an ``rng`` is supplied, in which case the order
is shuffled at each branch (used for random sampling of covers).
"""

from __future__ import annotations

import random
from typing import Dict, Iterator, List, Optional, Sequence, Set


class ExactCover:
    def __init__(self, n_cols: int, rows: Sequence[Sequence[int]]):
        self.n_cols = n_cols
        self.rows: List[tuple] = [tuple(sorted(set(r))) for r in rows]
        self.col_rows: Dict[int, Set[int]] = {c: set() for c in range(n_cols)}
        for i, r in enumerate(self.rows):
            for c in r:
                if not 0 <= c < n_cols:
                    raise ValueError(f"row {i} covers unknown column {c}")
                self.col_rows[c].add(i)

    def solutions(self, rng: Optional[random.Random] = None) -> Iterator[List[int]]:
        """Yield each exact cover as a sorted list of row indices."""
        # working copy; the solver mutates it and restores it on backtrack
        cols = {c: set(rs) for c, rs in self.col_rows.items()}
        partial: List[int] = []
        yield from self._search(cols, partial, rng)

    def _search(self, cols, partial, rng):
        if not cols:
            yield sorted(partial)
            return
        col = min(cols, key=lambda c: (len(cols[c]), c))
        candidates = sorted(cols[col])
        if rng is not None:
            rng.shuffle(candidates)
        for r in candidates:
            partial.append(r)
            removed = self._select(cols, r)
            yield from self._search(cols, partial, rng)
            self._deselect(cols, r, removed)
            partial.pop()

    def _select(self, cols, r):
        removed = []
        for c in self.rows[r]:
            for r2 in cols[c]:
                for c2 in self.rows[r2]:
                    if c2 != c:
                        cols[c2].discard(r2)
            removed.append(cols.pop(c))
        return removed

    def _deselect(self, cols, r, removed):
        for c in reversed(self.rows[r]):
            cols[c] = removed.pop()
            for r2 in cols[c]:
                for c2 in self.rows[r2]:
                    if c2 != c:
                        cols[c2].add(r2)

    def first(self, rng: Optional[random.Random] = None) -> Optional[List[int]]:
        return next(self.solutions(rng), None)
