# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops; see _pure for the reference
implementations and the shared contract."""

from cpython.dict cimport PyDict_GetItem, PyDict_Next, PyDict_SetItem
from cpython.mem cimport PyMem_Free, PyMem_Malloc
from cpython.object cimport PyObject
from libc.string cimport memset

from fractions import Fraction


# step encoding shared with the pure fallback: 0=U, 1=D, 2=H, 3=L

cdef void _visit(long long *table, int n_max, int hdim, int depth, int level,
                 int last, int ud, int du, bint skew) noexcept nogil:
    table[((<long long>depth * (n_max + 1) + level) * hdim + ud) * hdim + du] += 1
    if depth == n_max:
        return
    if not (skew and last == 3):
        _visit(table, n_max, hdim, depth + 1, level + 1, 0, ud,
               du + (last == 1), skew)
    if level > 0:
        _visit(table, n_max, hdim, depth + 1, level - 1, 1,
               ud + (last == 0), du, skew)
    _visit(table, n_max, hdim, depth + 1, level, 2, ud, du, skew)
    if skew and level > 0 and last != 0:
        _visit(table, n_max, hdim, depth + 1, level - 1, 3, ud, du, skew)


def count_paths(int n_max, bint skew):
    """Tally every valid word of length <= n_max.

    Returns a dict mapping (length, end level, #UD, #DU) to the number of
    words with those values.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    cdef int hdim = n_max // 2 + 1
    cdef Py_ssize_t cells = (
        (<Py_ssize_t>(n_max + 1)) * (n_max + 1) * hdim * hdim
    )
    cdef long long *table = <long long *>PyMem_Malloc(cells * sizeof(long long))
    if table == NULL:
        raise MemoryError()
    memset(table, 0, cells * sizeof(long long))
    try:
        with nogil:
            _visit(table, n_max, hdim, 0, 0, -1, 0, 0, skew)
        counts = {}
        for depth in range(n_max + 1):
            for level in range(n_max + 1):
                for ud in range(hdim):
                    for du in range(hdim):
                        c = table[
                            ((<long long>depth * (n_max + 1) + level) * hdim
                             + ud) * hdim + du
                        ]
                        if c:
                            counts[(depth, level, ud, du)] = c
        return counts
    finally:
        PyMem_Free(table)


def poly_acc(dict dict_out, dict a, dict b, bint negate=False):
    """Accumulate the product a*b (negated if asked) into dict_out.

    Raw accumulation: zero coefficients are left in place, cleanup is the
    caller's job.  dict_out must not alias a or b.
    """
    cdef Py_ssize_t pos_a, pos_b
    cdef PyObject *pka
    cdef PyObject *pva
    cdef PyObject *pkb
    cdef PyObject *pvb
    cdef PyObject *pcur
    cdef object ka, va, key, term
    if len(a) > len(b):
        a, b = b, a
    pos_a = 0
    while PyDict_Next(a, &pos_a, &pka, &pva):
        ka = <object>pka
        va = <object>pva
        if negate:
            va = -va
        pos_b = 0
        while PyDict_Next(b, &pos_b, &pkb, &pvb):
            key = ka + <object>pkb
            term = va * <object>pvb
            pcur = PyDict_GetItem(dict_out, key)
            if pcur == NULL:
                PyDict_SetItem(dict_out, key, term)
            else:
                PyDict_SetItem(dict_out, key, (<object>pcur) + term)


def poly_mul(dict a, dict b):
    """Product of two term dicts with zero terms dropped and integral
    Fractions demoted to int."""
    cdef dict out = {}
    poly_acc(out, a, b)
    cdef dict res = {}
    for key, val in out.items():
        if type(val) is Fraction:
            if val.denominator == 1:
                val = val.numerator
        if val != 0:
            res[key] = val
    return res
