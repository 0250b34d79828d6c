"""Pure-Python versions of the table kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same output. Tables are ``array('I')`` of length ``2**n`` indexed by
subset mask; membership flags are ``bytearray`` of the same length.
"""
from array import array


def join_below(flags, n):
    """For every mask A, the union of flagged masks contained in A (0 if none)."""
    size = 1 << n
    tbl = array("I", (a if flags[a] else 0 for a in range(size)))
    for i in range(n):
        bit = 1 << i
        for a in range(size):
            if a & bit:
                tbl[a] |= tbl[a ^ bit]
    return tbl


def meet_above(flags, n):
    """For every mask A, the intersection of flagged masks containing A (X if none)."""
    size = 1 << n
    full = size - 1
    tbl = array("I", (a if flags[a] else full for a in range(size)))
    for i in range(n):
        bit = 1 << i
        for a in range(size):
            if not a & bit:
                tbl[a] &= tbl[a | bit]
    return tbl


def adherence_closure(members, n):
    """cl[A] = points all of whose neighbourhoods in ``members`` meet A."""
    size = 1 << n
    full = size - 1
    out = array("I", bytes(4 * size))
    for a in range(size):
        away = 0
        for u in members:
            if not u & a:
                away |= u
        out[a] = full & ~away
    return out


def semi_open_flags(int_tbl, cl_tbl):
    return bytearray(
        1 if not a & ~cl_tbl[int_tbl[a]] else 0 for a in range(len(int_tbl))
    )


def semi_open_witness_flags(members, cl_tbl, n):
    """Flags A when some member E satisfies E <= A <= cl(E)."""
    size = 1 << n
    out = bytearray(size)
    for a in range(size):
        for e in members:
            if e & ~a == 0 and a & ~cl_tbl[e] == 0:
                out[a] = 1
                break
    return out


def meet_fixed_flags(t1, t2):
    return bytearray(1 if t1[a] & t2[a] == a else 0 for a in range(len(t1)))


def contained_flags(inner, outer):
    return bytearray(1 if not inner[a] & ~outer[a] else 0 for a in range(len(inner)))


def fixed_flags(tbl):
    return bytearray(1 if tbl[a] == a else 0 for a in range(len(tbl)))


def complement_flags(flags, n):
    full = (1 << n) - 1
    return bytearray(flags[full ^ a] for a in range(1 << n))


def flagged_members(flags):
    return array("I", (a for a in range(len(flags)) if flags[a]))


def first_escape(tbl, flags):
    """First mask S whose table value is not flagged, or -1."""
    for s in range(len(tbl)):
        if not flags[tbl[s]]:
            return s
    return -1


def union_closed_pair(members, flags):
    """First pair (i, j), i <= j, whose union is not flagged, or None."""
    m = len(members)
    for i in range(m):
        a = members[i]
        for j in range(i, m):
            if not flags[a | members[j]]:
                return (a, members[j])
    return None
