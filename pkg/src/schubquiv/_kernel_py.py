"""Pure-Python twin of the compiled counting kernel (see ``_ckernel.pyx``)."""

from __future__ import annotations

import time

from .errors import BudgetExceeded

_CHECK_EVERY = 1 << 16


def count_cells(candidates, contains, within, deadline=None):
    """
    Count assignments ``cell -> candidate mask`` such that, for every cell
    ``c``, the masks of the earlier cells in ``contains[c]`` are subsets of
    the chosen mask and the chosen mask is a subset of those in ``within[c]``.

    Cells are filled in list order; ``contains``/``within`` may only refer to
    earlier cells.  ``deadline`` is a ``time.monotonic()`` value.
    """
    ncell = len(candidates)
    if ncell == 0:
        return 1
    if any(not c for c in candidates):
        return 0
    chosen = [0] * ncell
    last = ncell - 1
    ticks = [0]

    def rec(c):
        cont = [chosen[d] for d in contains[c]]
        wth = [chosen[d] for d in within[c]]
        total = 0
        for t in candidates[c]:
            ok = True
            for m in cont:
                if m & ~t:
                    ok = False
                    break
            if ok:
                for m in wth:
                    if t & ~m:
                        ok = False
                        break
            if not ok:
                continue
            if c == last:
                total += 1
            else:
                chosen[c] = t
                total += rec(c + 1)
        ticks[0] += len(candidates[c])
        if deadline is not None and ticks[0] >= _CHECK_EVERY:
            ticks[0] = 0
            if time.monotonic() > deadline:
                raise BudgetExceeded("enumeration exceeded its wall-time budget")
        return total

    return rec(0)
