"""Exact rank of small integer matrices."""


def rank(rows):
    """Rank over Q by fraction-free (Bareiss) elimination.

    ``rows`` is a list of equal-length integer lists; it is not modified.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
        prev = p
        r += 1
        if r == nrows:
            break
    return r
