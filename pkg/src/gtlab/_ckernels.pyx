# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``."""
from array import array

ctypedef unsigned int mask_t


def join_below(const unsigned char[:] flags, int n):
    cdef Py_ssize_t size = 1 << n
    out = array("I", bytes(4 * size))
    cdef mask_t[:] tbl = out
    cdef Py_ssize_t a
    cdef int i
    cdef mask_t bit
    for a in range(size):
        tbl[a] = <mask_t>a if flags[a] else 0
    for i in range(n):
        bit = 1u << i
        for a in range(size):
            if a & bit:
                tbl[a] |= tbl[a ^ bit]
    return out


def meet_above(const unsigned char[:] flags, int n):
    cdef Py_ssize_t size = 1 << n
    cdef mask_t full = <mask_t>(size - 1)
    out = array("I", bytes(4 * size))
    cdef mask_t[:] tbl = out
    cdef Py_ssize_t a
    cdef int i
    cdef mask_t bit
    for a in range(size):
        tbl[a] = <mask_t>a if flags[a] else full
    for i in range(n):
        bit = 1u << i
        for a in range(size):
            if not (a & bit):
                tbl[a] &= tbl[a | bit]
    return out


def adherence_closure(const mask_t[:] members, int n):
    cdef Py_ssize_t size = 1 << n
    cdef mask_t full = <mask_t>(size - 1)
    out = array("I", bytes(4 * size))
    cdef mask_t[:] cl = out
    cdef Py_ssize_t a, k, m = members.shape[0]
    cdef mask_t away, u
    for a in range(size):
        away = 0
        for k in range(m):
            u = members[k]
            if not (u & <mask_t>a):
                away |= u
        cl[a] = full & ~away
    return out


def semi_open_flags(const mask_t[:] int_tbl, const mask_t[:] cl_tbl):
    cdef Py_ssize_t size = int_tbl.shape[0], a
    out = bytearray(size)
    cdef unsigned char[:] f = out
    for a in range(size):
        f[a] = 1 if not (<mask_t>a & ~cl_tbl[int_tbl[a]]) else 0
    return out


def semi_open_witness_flags(const mask_t[:] members, const mask_t[:] cl_tbl, int n):
    cdef Py_ssize_t size = 1 << n, a, k, m = members.shape[0]
    cdef mask_t e, am
    out = bytearray(size)
    cdef unsigned char[:] f = out
    for a in range(size):
        am = <mask_t>a
        for k in range(m):
            e = members[k]
            if (e & ~am) == 0 and (am & ~cl_tbl[e]) == 0:
                f[a] = 1
                break
    return out


def meet_fixed_flags(const mask_t[:] t1, const mask_t[:] t2):
    cdef Py_ssize_t size = t1.shape[0], a
    out = bytearray(size)
    cdef unsigned char[:] f = out
    for a in range(size):
        f[a] = 1 if (t1[a] & t2[a]) == <mask_t>a else 0
    return out


def contained_flags(const mask_t[:] inner, const mask_t[:] outer):
    cdef Py_ssize_t size = inner.shape[0], a
    out = bytearray(size)
    cdef unsigned char[:] f = out
    for a in range(size):
        f[a] = 1 if not (inner[a] & ~outer[a]) else 0
    return out


def fixed_flags(const mask_t[:] tbl):
    cdef Py_ssize_t size = tbl.shape[0], a
    out = bytearray(size)
    cdef unsigned char[:] f = out
    for a in range(size):
        f[a] = 1 if tbl[a] == <mask_t>a else 0
    return out


def complement_flags(const unsigned char[:] flags, int n):
    cdef Py_ssize_t size = 1 << n, a
    cdef Py_ssize_t full = size - 1
    out = bytearray(size)
    cdef unsigned char[:] f = out
    for a in range(size):
        f[a] = flags[full ^ a]
    return out


def flagged_members(const unsigned char[:] flags):
    cdef Py_ssize_t size = flags.shape[0], a, count = 0
    for a in range(size):
        if flags[a]:
            count += 1
    out = array("I", bytes(4 * count))
    cdef mask_t[:] m = out
    count = 0
    for a in range(size):
        if flags[a]:
            m[count] = <mask_t>a
            count += 1
    return out


def first_escape(const mask_t[:] tbl, const unsigned char[:] flags):
    cdef Py_ssize_t size = tbl.shape[0], s
    for s in range(size):
        if not flags[tbl[s]]:
            return s
    return -1


def union_closed_pair(const mask_t[:] members, const unsigned char[:] flags):
    cdef Py_ssize_t m = members.shape[0], i, j
    cdef mask_t a
    for i in range(m):
        a = members[i]
        for j in range(i, m):
            if not flags[a | members[j]]:
                return (a, members[j])
    return None
