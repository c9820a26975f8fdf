"""Exact linear algebra over the integers.

Plain lists of Python ints throughout; intermediate growth is harmless and
nothing here ever touches floating point.  Matrices are row-major, and the
row space / kernel conventions are spelled out per function.
"""

from __future__ import annotations

from math import gcd


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def identity_matrix(n: int) -> list[list[int]]:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def mat_mul(a, b) -> list[list[int]]:
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    if ca != rb:
        if ra == 0 or cb == 0 or (ca == 0 and rb == 0):
            return [[0] * cb for _ in range(ra)]
        raise ValueError(f"shape mismatch {ra}x{ca} * {rb}x{cb}")
    out = []
    for row in a:
        acc = [0] * cb
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(cb):
                    acc[j] += x * brow[j]
        out.append(acc)
    return out


def mat_vec(a, v) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_add(a, b) -> list[list[int]]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b) -> list[list[int]]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_eq(a, b) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def transpose(a) -> list[list[int]]:
    return [list(col) for col in zip(*a)] if a else []


def hermite_normal_form(a):
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular, U*A = H, H in row echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    h = [list(r) for r in a]
    u = identity_matrix(rows)
    pivot_row = 0
    for col in range(cols):
        if pivot_row >= rows:
            break
        # euclidean elimination below pivot_row in this column
        while True:
            nonzero = [r for r in range(pivot_row, rows) if h[r][col]]
            if not nonzero:
                break
            r0 = min(nonzero, key=lambda r: abs(h[r][col]))
            if r0 != pivot_row:
                h[pivot_row], h[r0] = h[r0], h[pivot_row]
                u[pivot_row], u[r0] = u[r0], u[pivot_row]
            p = h[pivot_row][col]
            done = True
            for r in range(pivot_row + 1, rows):
                if h[r][col]:
                    q = h[r][col] // p
                    if q:
                        h[r] = [x - q * y for x, y in zip(h[r], h[pivot_row])]
                        u[r] = [x - q * y for x, y in zip(u[r], u[pivot_row])]
                    if h[r][col]:
                        done = False
            if done:
                break
        if h[pivot_row][col]:
            if h[pivot_row][col] < 0:
                h[pivot_row] = [-x for x in h[pivot_row]]
                u[pivot_row] = [-x for x in u[pivot_row]]
            p = h[pivot_row][col]
            for r in range(pivot_row):
                q = h[r][col] // p
                if q:
                    h[r] = [x - q * y for x, y in zip(h[r], h[pivot_row])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[pivot_row])]
            pivot_row += 1
    return h, u


def _pivot_columns(h):
    pivots = []
    for r, row in enumerate(h):
        for c, x in enumerate(row):
            if x:
                pivots.append((r, c))
                break
    return pivots


def integer_kernel(a) -> list[list[int]]:
    """Basis of the lattice {x : A x = 0}, one vector per row.

    Computed from the HNF of the transpose: rows of the transform whose image
    row vanishes form a basis of the kernel (they are part of a unimodular
    matrix, so the basis is primitive).
    """
    cols = len(a[0]) if a else 0
    if cols == 0:
        return []
    if not a:
        return identity_matrix(cols)
    h, u = hermite_normal_form(transpose(a))
    out = []
    for row_h, row_u in zip(h, u):
        if not any(row_h):
            out.append(list(row_u))
    return out


def solve_exact(a, b):
    """An integer solution x of A x = b, or None when there is none."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if len(b) != rows:
        raise ValueError("dimension mismatch")
    if cols == 0:
        return [] if not any(b) else None
    # x A^T = b as row vectors; with U A^T = H write x = z U, solve z H = b.
    h, u = hermite_normal_form(transpose(a))
    z = [0] * cols
    rem = list(b)
    for r, c in _pivot_columns(h):
        if rem[c] % h[r][c]:
            return None
        z[r] = rem[c] // h[r][c]
        if z[r]:
            rem = [x - z[r] * y for x, y in zip(rem, h[r])]
    if any(rem):
        return None
    x = [0] * cols
    for zi, urow in zip(z, u):
        if zi:
            x = [xv + zi * uv for xv, uv in zip(x, urow)]
    return x


def reduce_mod_lattice(x, basis):
    """Canonical representative of x modulo the lattice spanned by basis rows.

    Reduction against the HNF of the basis: at every pivot column the result
    lies in [0, pivot).  With a fixed basis this is a well-defined canonical
    form on cosets.
    """
    if not basis:
        return list(x)
    h, _ = hermite_normal_form(basis)
    out = list(x)
    for r, c in _pivot_columns(h):
        q = out[c] // h[r][c]
        if q:
            out = [v - q * w for v, w in zip(out, h[r])]
    return out


def det_exact(a) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unimodular(a) -> bool:
    return len(a) == (len(a[0]) if a else 0) and abs(det_exact(a)) == 1


def smith_normal_form(a):
    """Smith normal form: returns (D, S, T) with S*A*T = D diagonal,
    S and T unimodular, and each diagonal entry dividing the next."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [list(r) for r in a]
    s = identity_matrix(rows)
    t = identity_matrix(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in t:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):  # row_i -= q * row_j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        s[i] = [x - q * y for x, y in zip(s[i], s[j])]

    def add_col(i, j, q):  # col_i -= q * col_j
        for row in d:
            row[i] -= q * row[j]
        for row in t:
            row[i] -= q * row[j]

    def clear_block(k):
        """Make (k,k) the only nonzero in its row and column below/right of k."""
        while True:
            piv = None
            for i in range(k, rows):
                for j in range(k, cols):
                    if d[i][j] and (piv is None or abs(d[i][j]) < abs(d[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return False
            if piv[0] != k:
                swap_rows(k, piv[0])
            if piv[1] != k:
                swap_cols(k, piv[1])
            dirty = False
            for i in range(k + 1, rows):
                if d[i][k]:
                    add_row(i, k, d[i][k] // d[k][k])
                    dirty = dirty or bool(d[i][k])
            for j in range(k + 1, cols):
                if d[k][j]:
                    add_col(j, k, d[k][j] // d[k][k])
                    dirty = dirty or bool(d[k][j])
            if not dirty:
                return True

    k = 0
    while k < rows and k < cols:
        if not clear_block(k):
            break
        if d[k][k] < 0:
            d[k] = [-x for x in d[k]]
            s[k] = [-x for x in s[k]]
        k += 1
    def clear_2x2(i):
        """Euclidean dance on rows/cols i, i+1 only, until the block is
        diagonal with d[i][i] dividing d[i+1][i+1]."""
        while True:
            entries = [(r, c) for r in (i, i + 1) for c in (i, i + 1) if d[r][c]]
            if not entries:
                return
            r0, c0 = min(entries, key=lambda rc: abs(d[rc[0]][rc[1]]))
            if r0 != i:
                swap_rows(i, r0)
            if c0 != i:
                swap_cols(i, c0)
            if d[i + 1][i]:
                add_row(i + 1, i, d[i + 1][i] // d[i][i])
            if d[i][i + 1]:
                add_col(i + 1, i, d[i][i + 1] // d[i][i])
            if not d[i + 1][i] and not d[i][i + 1]:
                if d[i + 1][i + 1] % d[i][i] == 0:
                    return
                add_col(i, i + 1, -1)  # restart with the pair mixed

    # enforce the divisibility chain: mixing column i+1 into column i puts
    # d[i+1][i+1] below the diagonal, and the local 2x2 pass leaves gcd/lcm
    changed = True
    while changed:
        changed = False
        for i in range(min(rows, cols) - 1):
            x, y = d[i][i], d[i + 1][i + 1]
            if x and y and y % x:
                add_col(i, i + 1, -1)
                clear_2x2(i)
                for r in (i, i + 1):
                    if d[r][r] < 0:
                        d[r] = [-v for v in d[r]]
                        s[r] = [-v for v in s[r]]
                changed = True
    return d, s, t


def smith_or_hermite(a, form: str = "hermite"):
    """Either decomposition behind one name; `form` is "hermite" or "smith"."""
    if form == "hermite":
        return hermite_normal_form(a)
    if form == "smith":
        return smith_normal_form(a)
    raise ValueError(f"unknown form {form!r}")
