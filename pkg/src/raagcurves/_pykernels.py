"""Pure-Python word kernels.  Same contract as the compiled ``_kernels``.

Letters are integer codes ``2*i + s`` where ``i`` indexes the vertex in
identifier order and ``s`` is 0 for exponent +1 and 1 for exponent -1.
``adj[i]`` is the bitmask of vertices adjacent (hence commuting) with ``i``.
In Coxeter flavor every code is even.
"""

BACKEND = "python"


def reduce_codes(codes, adj, coxeter):
    out = []
    for c in codes:
        v = c >> 1
        mask = adj[v]
        k = len(out) - 1
        cancelled = False
        while k >= 0:
            d = out[k]
            u = d >> 1
            if u == v:
                if coxeter or d != c:
                    del out[k]
                    cancelled = True
                break
            if not (mask >> u) & 1:
                break
            k -= 1
        if not cancelled:
            out.append(c)
    return out


def can_append(codes, c, adj, coxeter):
    """True iff appending ``c`` to the reduced word ``codes`` keeps it reduced."""
    v = c >> 1
    mask = adj[v]
    for k in range(len(codes) - 1, -1, -1):
        d = codes[k]
        u = d >> 1
        if u == v:
            return not (coxeter or d != c)
        if not (mask >> u) & 1:
            return True
    return True


def find_cancellation(codes, adj, coxeter):
    """Leftmost forbidden pattern ``v^e x v^-e`` (or ``v x v`` in Coxeter flavor).

    Returns the pair of positions or ``None`` when the word is reduced.
    """
    n = len(codes)
    for i in range(n):
        c = codes[i]
        v = c >> 1
        mask = adj[v]
        for j in range(i + 1, n):
            d = codes[j]
            u = d >> 1
            if u == v:
                if coxeter or d != c:
                    return (i, j)
                break
            if not (mask >> u) & 1:
                break
    return None


def normal_form_codes(codes, adj):
    """Lexicographically least word in the commutation class of a reduced word."""
    rest = list(codes)
    out = []
    while rest:
        allowed = -1
        best = -1
        best_pos = -1
        for k, c in enumerate(rest):
            v = c >> 1
            if (allowed >> v) & 1 and (best < 0 or c < best):
                best = c
                best_pos = k
            allowed &= adj[v]
            if not allowed:
                break
        out.append(best)
        del rest[best_pos]
    return out
