"""Exact linear algebra over GF(p) or Q: ranks and incremental echelon forms."""


def rank(rows, field):
    """Rank of a dense matrix given as a list of rows."""
    p = field.p
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        row = [field(x * inv) for x in m[r]]
        m[r] = row
        for k in range(r + 1, len(m)):
            f = m[k][c]
            if f:
                if p:
                    m[k] = [(a - f * b) % p for a, b in zip(m[k], row)]
                else:
                    m[k] = [a - f * b for a, b in zip(m[k], row)]
        r += 1
        if r == len(m):
            break
    return r


class SparseEchelon:
    """Incrementally maintained echelon basis of sparse vectors ``{index: value}``.

    Pivots are the largest index of each stored row.
    """

    def __init__(self, field):
        self.field = field
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        field = self.field
        p = field.p
        v = dict(vec)
        out_done = {}
        while v:
            k = max(v)
            c = v[k]
            row = self.rows.get(k)
            if row is None:
                out_done.update(v)
                return out_done
            for kk, cc in row.items():
                nv = v.get(kk, 0) - c * cc
                if p:
                    nv %= p
                if nv:
                    v[kk] = nv
                else:
                    v.pop(kk, None)
        return out_done

    def add(self, vec):
        """Insert ``vec``; returns True iff it was independent of the stored rows."""
        r = self.reduce(vec)
        if not r:
            return False
        k = max(r)
        inv = self.field.inv(r[k])
        self.rows[k] = {kk: self.field(cc * inv) for kk, cc in r.items()}
        return True


def inverse(matrix, field):
    """Inverse of a square matrix by Gauss-Jordan; raises ValueError if singular."""
    n = len(matrix)
    m = [[field(x) for x in row] + [1 if r == c else 0 for c in range(n)] for r, row in enumerate(matrix)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = field.inv(m[c][c])
        m[c] = [field(x * inv) for x in m[c]]
        for r in range(n):
            f = m[r][c]
            if r != c and f:
                m[r] = [field(a - f * b) for a, b in zip(m[r], m[c])]
    return [row[n:] for row in m]


def row_echelon_from_right(rows, field):
    """Reduced row echelon form whose pivots are taken from the rightmost columns first.

    Returns (pivot columns, reduced rows); dependent rows are dropped.
    """
    m = [[field(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols - 1, -1, -1):
        piv = next((k for k in range(r, len(m)) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field(x * inv) for x in m[r]]
        for k in range(len(m)):
            f = m[k][c]
            if k != r and f:
                m[k] = [field(a - f * b) for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return pivots, m[:r]
