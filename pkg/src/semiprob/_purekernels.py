"""Pure-Python versions of the hot loops.  ``_speedups.pyx`` mirrors these
line for line; both take a flat row-major table (``flat[x*n + a] = x*a``)."""


def first_nonassociative(flat, n):
    """First (a, b, c) in lexicographic order with (ab)c != a(bc), or None."""
    for a in range(n):
        ra = a * n
        for b in range(n):
            rab = flat[ra + b] * n
            rb = b * n
            for c in range(n):
                if flat[rab + c] != flat[ra + flat[rb + c]]:
                    return (a, b, c)
    return None


def _consistent(t, n, a, b):
    # Check every triple that looks up cell (a, b) and is now fully defined.
    v = t[a * n + b]
    ra = a * n
    # (a, b, z): cell is (x, y)
    rv = v * n
    rb = b * n
    for z in range(n):
        vz = t[rv + z]
        bz = t[rb + z]
        if vz < 0 or bz < 0:
            continue
        abz = t[ra + bz]
        if abz >= 0 and abz != vz:
            return False
    for x in range(n):
        rx = x * n
        # (x, a, b): cell is (y, z)
        xa = t[rx + a]
        if xa >= 0:
            lhs = t[xa * n + b]
            rhs = t[rx + v]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
        for y in range(n):
            # (x, y, b) with xy = a: cell is (xy, z)
            if t[rx + y] == a:
                yb = t[y * n + b]
                if yb >= 0:
                    rhs = t[rx + yb]
                    if rhs >= 0 and rhs != v:
                        return False
            # (a, x, y) with xy = b: cell is (x', yz)
            if t[rx + y] == b:
                ax = t[ra + x]
                if ax >= 0:
                    lhs = t[ax * n + y]
                    if lhs >= 0 and lhs != v:
                        return False
    return True


def enumerate_tables(n, prefix=()):
    """All associative tables extending ``prefix`` (leading row-major cells),
    concatenated as bytes in lexicographic order."""
    cells = n * n
    t = [-1] * cells
    out = bytearray()
    start = len(prefix)
    for i, v in enumerate(prefix):
        t[i] = v
        if not _consistent(t, n, i // n, i % n):
            return bytes(out)
    if start == cells:
        out.extend(t)
        return bytes(out)
    i = start
    last = cells - 1
    while i >= start:
        v = t[i] + 1
        a, b = divmod(i, n)
        while v < n:
            t[i] = v
            if _consistent(t, n, a, b):
                break
            v += 1
        if v == n:
            t[i] = -1
            i -= 1
        elif i == last:
            out.extend(t)
        else:
            i += 1
    return bytes(out)
