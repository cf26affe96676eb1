# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernel; same contract as ``_kernel_py.count_cells``."""

import time

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t

from .errors import BudgetExceeded

cnp.import_array()

cdef long long CHECK_EVERY = 1 << 22


def count_cells(candidates, contains, within, deadline=None):
    cdef Py_ssize_t ncell = len(candidates)
    if ncell == 0:
        return 1
    if any(not c for c in candidates):
        return 0

    cdef int bits = 1
    for cands in candidates:
        for m in cands:
            bits = max(bits, (<object>m).bit_length())
    cdef Py_ssize_t W = (bits + 63) // 64

    total_cands = sum(len(c) for c in candidates)
    words_np = np.zeros((total_cands, W), dtype=np.uint64)
    start_np = np.zeros(ncell, dtype=np.intp)
    end_np = np.zeros(ncell, dtype=np.intp)
    mask64 = (1 << 64) - 1
    cdef Py_ssize_t row = 0, c, w
    for c in range(ncell):
        start_np[c] = row
        for m in candidates[c]:
            for w in range(W):
                words_np[row, w] = (m >> (64 * w)) & mask64
            row += 1
        end_np[c] = row

    cont_ptr_np = np.zeros(ncell + 1, dtype=np.intp)
    with_ptr_np = np.zeros(ncell + 1, dtype=np.intp)
    cont_idx_np = np.array([d for c in range(ncell) for d in contains[c]] or [0], dtype=np.intp)
    with_idx_np = np.array([d for c in range(ncell) for d in within[c]] or [0], dtype=np.intp)
    for c in range(ncell):
        cont_ptr_np[c + 1] = cont_ptr_np[c] + len(contains[c])
        with_ptr_np[c + 1] = with_ptr_np[c] + len(within[c])

    cdef uint64_t[:, ::1] words = words_np
    cdef Py_ssize_t[::1] start = start_np
    cdef Py_ssize_t[::1] end = end_np
    cdef Py_ssize_t[::1] cont_ptr = cont_ptr_np
    cdef Py_ssize_t[::1] cont_idx = cont_idx_np
    cdef Py_ssize_t[::1] with_ptr = with_ptr_np
    cdef Py_ssize_t[::1] with_idx = with_idx_np
    cdef Py_ssize_t[::1] cursor = np.zeros(ncell, dtype=np.intp)

    cdef bint use_deadline = deadline is not None
    cdef double dl = deadline if use_deadline else 0.0
    cdef long long ticks = 0
    cdef object count = 0
    cdef long long local = 0
    cdef Py_ssize_t level = 0, t, k, d, last = ncell - 1
    cdef bint ok

    cursor[0] = start[0]
    while level >= 0:
        t = cursor[level]
        if t >= end[level]:
            level -= 1
            if level >= 0:
                cursor[level] += 1
            continue
        ticks += 1
        if use_deadline and ticks >= CHECK_EVERY:
            ticks = 0
            if time.monotonic() > dl:
                raise BudgetExceeded("enumeration exceeded its wall-time budget")
        ok = True
        for k in range(cont_ptr[level], cont_ptr[level + 1]):
            d = cursor[cont_idx[k]]
            for w in range(W):
                if words[d, w] & ~words[t, w]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for k in range(with_ptr[level], with_ptr[level + 1]):
                d = cursor[with_idx[k]]
                for w in range(W):
                    if words[t, w] & ~words[d, w]:
                        ok = False
                        break
                if not ok:
                    break
        if not ok:
            cursor[level] += 1
        elif level == last:
            local += 1
            if local >= (1 << 60):
                count += local
                local = 0
            cursor[level] += 1
        else:
            level += 1
            cursor[level] = start[level]
    return count + local
