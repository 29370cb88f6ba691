"""Pure-Python Farey graph kernels.

Vertices are canonical ``(p, q)`` integer pairs (``q >= 0``, infinity is
``(1, 0)``). The bounded graph has vertex set ``|p| <= B, 0 <= q <= B``.
"""


def _egcd(a, b):
    # returns (g, x, y) with a*x + b*y = g
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return a, x0, y0


def _base_solution(p, q):
    """(r0, s0) with p*s0 - q*r0 == 1."""
    if q == 0:
        return 0, 1
    g, x, y = _egcd(p, q)
    if g < 0:
        x, y = -x, -y
    return -y, x


def _ceil_div(a, b):
    return -((-a) // b)


def neighbors(p, q, bound):
    """Farey neighbours of p/q inside the box ``|r| <= bound, s <= bound``."""
    out = []
    if q == 0:
        for r in range(-bound, bound + 1):
            out.append((r, 1))
        return out
    r0, s0 = _base_solution(p, q)
    klo = _ceil_div(-bound - s0, q)
    khi = (bound - s0) // q
    for k in range(klo, khi + 1):
        r = r0 + k * p
        s = s0 + k * q
        if s < 0:
            r, s = -r, -s
        elif s == 0:
            r = 1
        if -bound <= r <= bound:
            out.append((r, s))
    return out


def _trace(parents, v):
    path = []
    while v is not None:
        path.append(v)
        v = parents[v]
    return path


def bounded_distance(ap, aq, bp, bq, bound, want_path=False):
    """Bidirectional BFS distance between a and b in the bounded Farey graph.

    Returns ``(distance, path)``; ``distance`` is -1 when b is unreachable and
    ``path`` is None unless requested.
    """
    a = (ap, aq)
    b = (bp, bq)
    if a == b:
        return 0, ([a] if want_path else None)
    parents = ({a: None}, {b: None})
    fronts = [[a], [b]]
    while fronts[0] and fronts[1]:
        side = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        mine, other = parents[side], parents[1 - side]
        nxt = []
        for v in fronts[side]:
            for u in neighbors(v[0], v[1], bound):
                if u in mine:
                    continue
                mine[u] = v
                if u in other:
                    left = _trace(parents[0], u)
                    right = _trace(parents[1], u)
                    path = left[::-1] + right[1:] if want_path else None
                    return len(left) + len(right) - 2, path
                nxt.append(u)
        fronts[side] = nxt
    return -1, None
