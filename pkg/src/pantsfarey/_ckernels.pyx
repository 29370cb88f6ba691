# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Farey graph kernels; same contract as ``_pykernels``.

Vertices are packed into one int64 key, so the box bound must stay below
``MAX_BOUND``; callers fall back to the pure kernels beyond it.
"""

from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

ctypedef long long i64

cdef i64 OFFSET = 1 << 30
cdef i64 STRIDE = 1LL << 31
MAX_BOUND = (1 << 30) - 1
cdef i64 NO_PARENT = -1


cdef inline i64 pack(i64 p, i64 q) nogil:
    return (p + OFFSET) * STRIDE + q


cdef inline i64 unpack_p(i64 key) nogil:
    return key // STRIDE - OFFSET


cdef inline i64 unpack_q(i64 key) nogil:
    return key % STRIDE


cdef inline i64 floor_div(i64 a, i64 b) nogil:
    # b > 0
    cdef i64 k = a / b
    if (a % b != 0) and (a < 0):
        k -= 1
    return k


cdef void base_solution(i64 p, i64 q, i64* r0, i64* s0) nogil:
    cdef i64 a = p, b = q, x0 = 1, y0 = 0, x1 = 0, y1 = 1, k, t
    if q == 0:
        r0[0] = 0
        s0[0] = 1
        return
    while b != 0:
        k = a / b
        t = a - k * b
        a = b
        b = t
        t = x0 - k * x1
        x0 = x1
        x1 = t
        t = y0 - k * y1
        y0 = y1
        y1 = t
    if a < 0:
        x0 = -x0
        y0 = -y0
    r0[0] = -y0
    s0[0] = x0


cdef void fill_neighbors(i64 p, i64 q, i64 bound, vector[i64]& out) nogil:
    cdef i64 r0, s0, klo, khi, k, r, s
    out.clear()
    if q == 0:
        for r in range(-bound, bound + 1):
            out.push_back(pack(r, 1))
        return
    base_solution(p, q, &r0, &s0)
    klo = -floor_div(bound + s0, q)
    khi = floor_div(bound - s0, q)
    k = klo
    while k <= khi:
        r = r0 + k * p
        s = s0 + k * q
        if s < 0:
            r = -r
            s = -s
        elif s == 0:
            r = 1
        if -bound <= r <= bound:
            out.push_back(pack(r, s))
        k += 1


def neighbors(i64 p, i64 q, i64 bound):
    cdef vector[i64] buf
    fill_neighbors(p, q, bound, buf)
    return [(unpack_p(k), unpack_q(k)) for k in buf]


cdef list trace(unordered_map[i64, i64]& parents, i64 v):
    cdef list path = []
    while v != NO_PARENT:
        path.append((unpack_p(v), unpack_q(v)))
        v = parents[v]
    return path


def bounded_distance(i64 ap, i64 aq, i64 bp, i64 bq, i64 bound, bint want_path=False):
    cdef i64 a = pack(ap, aq), b = pack(bp, bq), v, u, meet = NO_PARENT
    cdef unordered_map[i64, i64] par0, par1
    cdef vector[i64] front0, front1, nxt, nbrs
    cdef int side
    cdef size_t i, j
    if a == b:
        return 0, ([(ap, aq)] if want_path else None)
    par0[a] = NO_PARENT
    par1[b] = NO_PARENT
    front0.push_back(a)
    front1.push_back(b)
    with nogil:
        while front0.size() > 0 and front1.size() > 0 and meet == NO_PARENT:
            side = 0 if front0.size() <= front1.size() else 1
            nxt.clear()
            if side == 0:
                for i in range(front0.size()):
                    v = front0[i]
                    fill_neighbors(unpack_p(v), unpack_q(v), bound, nbrs)
                    for j in range(nbrs.size()):
                        u = nbrs[j]
                        if par0.count(u):
                            continue
                        par0[u] = v
                        if par1.count(u):
                            meet = u
                            break
                        nxt.push_back(u)
                    if meet != NO_PARENT:
                        break
                front0.swap(nxt)
            else:
                for i in range(front1.size()):
                    v = front1[i]
                    fill_neighbors(unpack_p(v), unpack_q(v), bound, nbrs)
                    for j in range(nbrs.size()):
                        u = nbrs[j]
                        if par1.count(u):
                            continue
                        par1[u] = v
                        if par0.count(u):
                            meet = u
                            break
                        nxt.push_back(u)
                    if meet != NO_PARENT:
                        break
                front1.swap(nxt)
    if meet == NO_PARENT:
        return -1, None
    left = trace(par0, meet)
    right = trace(par1, meet)
    path = left[::-1] + right[1:] if want_path else None
    return len(left) + len(right) - 2, path
