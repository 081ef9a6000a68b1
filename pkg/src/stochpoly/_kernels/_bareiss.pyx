# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled lane of the hot enumeration kernel.

Same contract as the pure lane: iterate all size-``rank`` free-column
subsets of {A x = 1, x >= 0} in lexicographic order and report every subset
whose restricted system has a unique nonnegative solution. Elimination is
fraction-free Gauss-Jordan on C int64; entries are minors of the 0/1 input
system and stay far below the guard bound, but any subset that does exceed
it is handed back to the caller for an exact big-integer retry instead of
being trusted.
"""
from libc.stdlib cimport free, malloc

BACKEND = "compiled"

DEF GUARD = 1073741824  # 1 << 30, same bound as the pure lane


cdef inline long long llabs_(long long v) noexcept:
    return -v if v < 0 else v


def basic_feasible_solutions(a_rows, int rank, subset_limit=None):
    """Return (results, overflowed) over all C(ncols, rank) subsets.

    results: list of (free_cols tuple, den, numerators tuple) for subsets
    with a unique nonnegative solution. overflowed: list of free_cols tuples
    whose elimination tripped the int64 guard and must be re-solved exactly
    by the caller.
    """
    cdef int m = len(a_rows)
    cdef int nc = len(a_rows[0]) if m else 0
    cdef int r = rank
    cdef int w = r + 1
    if r < 0 or r > nc:
        raise ValueError("rank out of range")
    cdef long long limit = -1
    if subset_limit is not None:
        limit = subset_limit

    cdef long long *a = <long long *> malloc(m * nc * sizeof(long long))
    cdef long long *mat = <long long *> malloc(m * w * sizeof(long long))
    cdef int *fcols = <int *> malloc(r * sizeof(int))
    if a == NULL or mat == NULL or fcols == NULL:
        free(a); free(mat); free(fcols)
        raise MemoryError()

    cdef int i, j, col, piv, ii
    cdef long long pk, f, prev, den, v
    cdef bint alive, overflow, feasible
    cdef long long processed = 0

    results = []
    overflowed = []
    try:
        for i in range(m):
            row = a_rows[i]
            for j in range(nc):
                a[i * nc + j] = row[j]
        for j in range(r):
            fcols[j] = j

        while True:
            if limit >= 0 and processed >= limit:
                break
            processed += 1

            # load A[:, fcols] augmented with the all-ones right-hand side
            for i in range(m):
                for j in range(r):
                    mat[i * w + j] = a[i * nc + fcols[j]]
                mat[i * w + r] = 1

            alive = True
            overflow = False
            prev = 1
            for col in range(r):
                piv = -1
                for i in range(col, m):
                    if mat[i * w + col] != 0:
                        piv = i
                        break
                if piv < 0:
                    alive = False
                    break
                if piv != col:
                    for j in range(w):
                        v = mat[col * w + j]
                        mat[col * w + j] = mat[piv * w + j]
                        mat[piv * w + j] = v
                pk = mat[col * w + col]
                for i in range(m):
                    if i == col:
                        continue
                    f = mat[i * w + col]
                    for j in range(col + 1, w):
                        v = (pk * mat[i * w + j] - f * mat[col * w + j]) // prev
                        if llabs_(v) > GUARD:
                            overflow = True
                            break
                        mat[i * w + j] = v
                    if overflow:
                        break
                    mat[i * w + col] = 0
                if overflow:
                    break
                prev = pk
            if overflow:
                overflowed.append(tuple([fcols[j] for j in range(r)]))
            elif alive:
                den = prev
                feasible = True
                for i in range(r, m):
                    if mat[i * w + r] != 0:
                        feasible = False
                        break
                if feasible:
                    for i in range(r):
                        v = mat[i * w + r]
                        if v != 0 and (v > 0) != (den > 0):
                            feasible = False
                            break
                if feasible:
                    results.append(
                        (
                            tuple([fcols[j] for j in range(r)]),
                            den,
                            tuple([mat[i * w + r] for i in range(r)]),
                        )
                    )

            # advance to the next lexicographic combination
            ii = r - 1
            while ii >= 0 and fcols[ii] == nc - r + ii:
                ii -= 1
            if ii < 0:
                break
            fcols[ii] += 1
            for j in range(ii + 1, r):
                fcols[j] = fcols[j - 1] + 1
    finally:
        free(a)
        free(mat)
        free(fcols)
    return results, overflowed
