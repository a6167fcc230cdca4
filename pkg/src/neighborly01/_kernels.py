"""Numba kernels for the enumeration and classification hot paths.

Everything here works on int64 arrays and exact integer arithmetic:

* cone membership is a phase-1 simplex with integer (fraction-free)
  pivoting and Bland's rule; tableau entries are minors of 0/1 systems,
  so they stay tiny for d <= 16 and never approach int64 limits;
* the lexicographic-minimum searches (class representative, incidence
  certificate) share one column branch-and-bound with sorted-prefix
  lower-bound pruning and duplicate-column elimination;
* the hull is an incremental beneath-beyond insertion with integer
  hyperplane normals (cofactor cross products).

Callers validate inputs; kernels trust their preconditions.
"""

import numpy as np
from numba import njit

HULL_CAP = 4096
FACE_CAP = 1 << 15
FACE_TABLE_BITS = 17


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


# ---------------------------------------------------------------------------
# exact cone membership (phase-1 simplex, integer pivoting, Bland's rule)
# ---------------------------------------------------------------------------

@njit(cache=True)
def _cone_feasible(z, m, y, d, tab, obj, basis, support):
    """Is y in cone(z[:m])?  Generators are nonzero and dominated by y.

    tab/obj/basis/support are caller-provided scratch; tab must hold
    s x (m + s + 1) entries for s = popcount(y).  z is compacted in
    place by the presolve.
    """
    # presolve: a coordinate covered by exactly one generator forces its
    # coefficient to 1, which zeroes every generator overlapping it
    rem = y
    while True:
        if rem == 0:
            return True
        if m == 0:
            return False
        unit = -1
        for i in range(d):
            if not ((rem >> i) & 1):
                continue
            cnt = 0
            last = -1
            for j in range(m):
                if (z[j] >> i) & 1:
                    cnt += 1
                    last = j
                    if cnt > 1:
                        break
            if cnt == 0:
                return False
            if cnt == 1:
                unit = last
                break
        if unit < 0:
            break
        zs = z[unit]
        w = 0
        for j in range(m):
            if j != unit and (z[j] & zs) == 0:
                z[w] = z[j]
                w += 1
        m = w
        rem &= ~zs
    s = 0
    for i in range(d):
        if (rem >> i) & 1:
            support[s] = i
            s += 1
    total = m + s
    for i in range(s):
        bit = support[i]
        for j in range(m):
            tab[i, j] = (z[j] >> bit) & 1
        for k in range(s):
            tab[i, m + k] = 1 if k == i else 0
        tab[i, total] = 1
    # reduced costs for "minimize sum of artificials": basic columns at 0
    for j in range(m):
        acc = 0
        for i in range(s):
            acc += tab[i, j]
        obj[j] = -acc
    for k in range(s):
        obj[m + k] = 0
    obj[total] = -s
    for i in range(s):
        basis[i] = m + i
    delta = np.int64(1)
    while True:
        enter = -1
        for j in range(total):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        for i in range(s):
            if tab[i, enter] > 0:
                if leave < 0:
                    leave = i
                else:
                    lhs = tab[i, total] * tab[leave, enter]
                    rhs = tab[leave, total] * tab[i, enter]
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                        leave = i
        if leave < 0:
            raise RuntimeError("phase-1 simplex unbounded on bounded objective")
        piv = tab[leave, enter]
        for i in range(s):
            if i != leave:
                f = tab[i, enter]
                for k in range(total + 1):
                    tab[i, k] = (piv * tab[i, k] - f * tab[leave, k]) // delta
        f = obj[enter]
        for k in range(total + 1):
            obj[k] = (piv * obj[k] - f * tab[leave, k]) // delta
        delta = piv
        basis[leave] = enter
    return obj[total] == 0


@njit(cache=True)
def _no_edge_0y(yset, nset, y, extra, d, zbuf, tab, obj, basis, support):
    """True iff {0, y} is not an edge of conv(yset[:nset] + {0, extra})."""
    m = 0
    for i in range(nset):
        v = yset[i]
        if v != y and v != 0 and (v & y) == v:
            zbuf[m] = v
            m += 1
    if extra > 0 and extra != y and (extra & y) == extra:
        zbuf[m] = extra
        m += 1
    return _cone_feasible(zbuf, m, y, d, tab, obj, basis, support)


@njit(cache=True)
def _extend_ok(vals, v, d, yv, others, zbuf, tab, obj, basis, support):
    """Algorithm-1 test: conv(vals) 2-neighborly => is conv(vals + {v})?"""
    n = vals.shape[0]
    for i in range(n):
        yv[i] = vals[i] ^ v
    for i in range(n):
        if _no_edge_0y(yv, n, yv[i], np.int64(-1), d,
                       zbuf, tab, obj, basis, support):
            return False
    for i in range(n):
        x = vals[i]
        w = v ^ x
        m = 0
        for j in range(n):
            if j != i:
                others[m] = vals[j] ^ x
                m += 1
        for j in range(m):
            yy = others[j]
            if (w & yy) == w:
                if _no_edge_0y(others, m, yy, w, d,
                               zbuf, tab, obj, basis, support):
                    return False
    return True


@njit(cache=True)
def _extend_ok_alloc(vals, v, d):
    """Allocation-friendly wrapper for one-off calls."""
    n = vals.shape[0]
    width = n + 1 + d + 1
    tab = np.empty((d, width), np.int64)
    obj = np.empty(width, np.int64)
    basis = np.empty(d, np.int64)
    support = np.empty(d, np.int64)
    yv = np.empty(n, np.int64)
    others = np.empty(max(n - 1, 1), np.int64)
    zbuf = np.empty(n + 1, np.int64)
    return _extend_ok(vals, v, d, yv, others, zbuf, tab, obj, basis, support)


# ---------------------------------------------------------------------------
# lexicographic minimum of sorted rows under column permutation
# ---------------------------------------------------------------------------

@njit(cache=True)
def _bound_prunes(cand, best, shift, n):
    """True iff no completion of the sorted prefix `cand` beats `best`.

    `cand` holds the top bits of each eventual sorted value.  The values
    are distinct, so the j-th member of a run of equal prefixes ends up
    at least at prefix * 2^shift + j; the branch is dead when that
    floor already compares >= best.
    """
    run = np.int64(0)
    for i in range(n):
        if i > 0 and cand[i] == cand[i - 1]:
            run += 1
        else:
            run = 0
        if shift < 63 and run >> shift:
            return True  # run outgrows the suffix space: unreachable
        lo = (cand[i] << shift) + run
        if lo < best[i]:
            return False
        if lo > best[i]:
            return True
    return True


@njit(cache=True)
def _colperm_core(rows, ncols, best, budget,
                  ordrows, keys, used, cand_col, cand_keys, cand_rows,
                  cand_cnt, cand_left, cand_done, tried_sig):
    """Branch and bound over column orders minimizing the sorted row tuple.

    `best` is updated in place whenever a strictly smaller assignment
    completes; returns True if it improved.  cand_left must be -1 at
    every depth on entry (the walk restores that on exit).
    """
    n = rows.shape[0]
    improved = False
    nodes = 0
    for i in range(n):
        ordrows[0, i] = rows[i]
        keys[0, i] = 0
    used[0] = 0
    t = 0
    while t >= 0:
        if cand_left[t] < 0:
            # fresh node: enumerate surviving candidate columns
            cnt = 0
            ntried = 0
            shift = ncols - t - 1
            for c in range(ncols):
                if (used[t] >> c) & 1:
                    continue
                nodes += 1
                if nodes > budget:
                    raise RuntimeError("canonical-form search budget exceeded")
                src = ncols - 1 - c
                # duplicate transformed columns lead to identical subtrees
                if n <= 64:
                    sig = np.int64(0)
                    for i in range(n):
                        sig |= ((ordrows[t, i] >> src) & 1) << i
                    dup = False
                    for k in range(ntried):
                        if tried_sig[t, k] == sig:
                            dup = True
                            break
                    if dup:
                        continue
                    tried_sig[t, ntried] = sig
                    ntried += 1
                # stable split of each equal-key group: bit-0 rows first
                pos = 0
                i = 0
                while i < n:
                    j = i
                    while j < n and keys[t, j] == keys[t, i]:
                        j += 1
                    for k in range(i, j):
                        if ((ordrows[t, k] >> src) & 1) == 0:
                            cand_keys[t, cnt, pos] = keys[t, k] * 2
                            cand_rows[t, cnt, pos] = ordrows[t, k]
                            pos += 1
                    for k in range(i, j):
                        if ((ordrows[t, k] >> src) & 1) == 1:
                            cand_keys[t, cnt, pos] = keys[t, k] * 2 + 1
                            cand_rows[t, cnt, pos] = ordrows[t, k]
                            pos += 1
                    i = j
                if _bound_prunes(cand_keys[t, cnt], best, shift, n):
                    continue
                cand_col[t, cnt] = c
                cand_done[t, cnt] = False
                cnt += 1
            cand_cnt[t] = cnt
            cand_left[t] = cnt
        if cand_left[t] == 0:
            cand_left[t] = -1
            t -= 1
            continue
        # take the lexicographically smallest remaining branch first
        pick = -1
        for j in range(cand_cnt[t]):
            if cand_done[t, j]:
                continue
            if pick < 0:
                pick = j
                continue
            for i in range(n):
                if cand_keys[t, j, i] != cand_keys[t, pick, i]:
                    if cand_keys[t, j, i] < cand_keys[t, pick, i]:
                        pick = j
                    break
        cand_done[t, pick] = True
        cand_left[t] -= 1
        shift = ncols - t - 1
        # best may have shrunk since this candidate was generated
        if _bound_prunes(cand_keys[t, pick], best, shift, n):
            continue
        if t == ncols - 1:
            for i in range(n):
                best[i] = cand_keys[t, pick, i]
            improved = True
            continue
        for i in range(n):
            keys[t + 1, i] = cand_keys[t, pick, i]
            ordrows[t + 1, i] = cand_rows[t, pick, i]
        used[t + 1] = used[t] | (np.int64(1) << cand_col[t, pick])
        t += 1
    return improved


@njit(cache=True)
def _colperm_min(rows, ncols, best, budget):
    """Allocate scratch and run the column search once (certificates)."""
    n = rows.shape[0]
    ordrows = np.empty((ncols + 1, n), np.int64)
    keys = np.empty((ncols + 1, n), np.int64)
    used = np.empty(ncols + 1, np.int64)
    cand_col = np.empty((ncols, ncols), np.int64)
    cand_keys = np.empty((ncols, ncols, n), np.int64)
    cand_rows = np.empty((ncols, ncols, n), np.int64)
    cand_cnt = np.empty(ncols, np.int64)
    cand_left = np.full(ncols, -1, np.int64)
    cand_done = np.empty((ncols, ncols), np.bool_)
    tried_sig = np.empty((ncols, ncols), np.int64)
    return _colperm_core(rows, ncols, best, budget,
                         ordrows, keys, used, cand_col, cand_keys, cand_rows,
                         cand_cnt, cand_left, cand_done, tried_sig)


@njit(cache=True)
def _representative(vals, d, budget):
    """Lexicographically least polytope in the cube-symmetry class.

    The minimum always contains the origin, so the switch mask must be
    one of the vertices; the remaining freedom is the column order.
    """
    n = vals.shape[0]
    best = vals.copy()
    rows = np.empty(n, np.int64)
    pcs = np.empty(n, np.int64)
    ordrows = np.empty((d + 1, n), np.int64)
    keys = np.empty((d + 1, n), np.int64)
    used = np.empty(d + 1, np.int64)
    cand_col = np.empty((d, d), np.int64)
    cand_keys = np.empty((d, d, n), np.int64)
    cand_rows = np.empty((d, d, n), np.int64)
    cand_cnt = np.empty(d, np.int64)
    cand_left = np.full(d, -1, np.int64)
    cand_done = np.empty((d, d), np.bool_)
    tried_sig = np.empty((d, d), np.int64)
    # try bases with small popcount profiles first: they produce strong
    # incumbents that let the profile bound kill the remaining bases
    profiles = np.empty((n, n), np.int64)
    order = np.empty(n, np.int64)
    for bi in range(n):
        v = vals[bi]
        for i in range(n):
            profiles[bi, i] = _popcount(vals[i] ^ v)
        profiles[bi].sort()
        order[bi] = bi
    for i in range(1, n):
        j = i
        while j > 0:
            a = order[j]
            b = order[j - 1]
            less = False
            for k in range(n):
                if profiles[a, k] != profiles[b, k]:
                    less = profiles[a, k] < profiles[b, k]
                    break
            if not less:
                break
            order[j] = b
            order[j - 1] = a
            j -= 1
    for oi in range(n):
        bi = order[oi]
        v = vals[bi]
        for i in range(n):
            rows[i] = vals[i] ^ v
            pcs[i] = profiles[bi, i]
        # the i-th smallest image is at least the i-th smallest value
        # with that many ones, and images are distinct
        keep = False
        run = np.int64(0)
        for i in range(n):
            if i > 0 and pcs[i] == pcs[i - 1]:
                run += 1
            else:
                run = 0
            b = (np.int64(1) << pcs[i]) - 1 + run
            if b < best[i]:
                keep = True
                break
            if b > best[i]:
                break
        if not keep:
            continue
        _colperm_core(rows, d, best, budget,
                      ordrows, keys, used, cand_col, cand_keys, cand_rows,
                      cand_cnt, cand_left, cand_done, tried_sig)
    return best


# ---------------------------------------------------------------------------
# integer rank / determinant
# ---------------------------------------------------------------------------

@njit(cache=True)
def _bareiss_rank(m, nr, nc):
    """Rank over Q of an integer matrix; destroys m."""
    rank = 0
    prev = np.int64(1)
    row = 0
    for col in range(nc):
        piv = -1
        for r in range(row, nr):
            if m[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            for c in range(nc):
                tmp = m[row, c]
                m[row, c] = m[piv, c]
                m[piv, c] = tmp
        for r in range(row + 1, nr):
            for c in range(col + 1, nc):
                m[r, c] = (m[row, col] * m[r, c] - m[r, col] * m[row, c]) // prev
            m[r, col] = 0
        prev = m[row, col]
        row += 1
        rank += 1
        if row == nr:
            break
    return rank


@njit(cache=True)
def _rank_of_values(vals, n, d, scratch):
    """Affine rank of 0/1 points given as values; scratch is (n-1) x d."""
    if n <= 1:
        return 0
    for i in range(1, n):
        diff = vals[i] ^ vals[0]
        for c in range(d):
            bit = (diff >> (d - 1 - c)) & 1
            if bit and (vals[0] >> (d - 1 - c)) & 1:
                scratch[i - 1, c] = -1
            else:
                scratch[i - 1, c] = bit
    return _bareiss_rank(scratch, n - 1, d)


@njit(cache=True)
def _rank_of_mask(vals, mask, d, sub, scratch):
    """Affine rank of the subset of points selected by a vertex bitmask."""
    cnt = 0
    for i in range(vals.shape[0]):
        if (mask >> i) & 1:
            sub[cnt] = vals[i]
            cnt += 1
    return _rank_of_values(sub, cnt, d, scratch)


@njit(cache=True)
def _bareiss_det(m, k):
    """Determinant of an integer k x k matrix; destroys m."""
    sign = np.int64(1)
    prev = np.int64(1)
    for col in range(k):
        piv = -1
        for r in range(col, k):
            if m[r, col] != 0:
                piv = r
                break
        if piv < 0:
            return np.int64(0)
        if piv != col:
            sign = -sign
            for c in range(k):
                tmp = m[col, c]
                m[col, c] = m[piv, c]
                m[piv, c] = tmp
        for r in range(col + 1, k):
            for c in range(col + 1, k):
                m[r, c] = (m[col, col] * m[r, c] - m[r, col] * m[col, c]) // prev
            m[r, col] = 0
        prev = m[col, col]
    return sign * m[k - 1, k - 1]


# ---------------------------------------------------------------------------
# beneath-beyond hull
# ---------------------------------------------------------------------------

@njit(cache=True)
def _gcd(a, b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _hyperplane_through(coords, idxs, m, d, a_out, elim, minor, sub, sel, order):
    """Primitive normal of the hyperplane spanned by m points (indices).

    Differences are taken against the last point.  Returns the offset b;
    a_out[d] is set to 1 on success and 0 when the span is not a
    (d-1)-flat.  elim/minor are (>= m-1) x d scratch, sub is
    (d-1) x (d-1), sel and order are length-d and length >= m-1.
    """
    base = idxs[m - 1]
    nr = m - 1
    for i in range(nr):
        for c in range(d):
            elim[i, c] = coords[idxs[i], c] - coords[base, c]
            minor[i, c] = elim[i, c]
        order[i] = i
    # row-reduce the copy to locate d-1 independent difference rows
    rank = 0
    row = 0
    prev = np.int64(1)
    for col in range(d):
        piv = -1
        for r in range(row, nr):
            if minor[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            for c in range(d):
                tmp = minor[row, c]
                minor[row, c] = minor[piv, c]
                minor[piv, c] = tmp
            tmp2 = order[row]
            order[row] = order[piv]
            order[piv] = tmp2
        for r in range(row + 1, nr):
            for c in range(col + 1, d):
                minor[r, c] = (minor[row, col] * minor[r, c]
                               - minor[r, col] * minor[row, c]) // prev
            minor[r, col] = 0
        prev = minor[row, col]
        sel[rank] = order[row]
        row += 1
        rank += 1
        if row == nr:
            break
    if rank != d - 1:
        a_out[d] = 0
        return np.int64(0)
    # generalized cross product: a_j = (-1)^j det(selected rows minus col j)
    for j in range(d):
        for i in range(d - 1):
            cc = 0
            for c in range(d):
                if c != j:
                    sub[i, cc] = elim[sel[i], c]
                    cc += 1
        det = _bareiss_det(sub, d - 1)
        a_out[j] = det if j % 2 == 0 else -det
    b = np.int64(0)
    for c in range(d):
        b += a_out[c] * coords[base, c]
    g = np.int64(0)
    for c in range(d):
        g = _gcd(g, a_out[c])
    g = _gcd(g, b)
    if g > 1:
        for c in range(d):
            a_out[c] //= g
        b //= g
    a_out[d] = 1
    return b


@njit(cache=True)
def _hull(vals, d):
    """Facets of a full-dimensional 0/1-polytope (beneath-beyond).

    Returns (A, b, nf): normalized inequalities a.x <= b sorted
    lexicographically by (a, b).  vals is the ascending vertex list.
    """
    n = vals.shape[0]
    coords = np.empty((n, d), np.int64)
    for i in range(n):
        for c in range(d):
            coords[i, c] = (vals[i] >> (d - 1 - c)) & 1
    # greedy initial simplex: first d+1 affinely independent points
    simplex = np.empty(d + 1, np.int64)
    simplex[0] = 0
    nsimp = 1
    scratch = np.empty((d + 1, d), np.int64)
    sub_vals = np.empty(d + 2, np.int64)
    for i in range(1, n):
        if nsimp == d + 1:
            break
        for k in range(nsimp):
            sub_vals[k] = vals[simplex[k]]
        sub_vals[nsimp] = vals[i]
        if _rank_of_values(sub_vals, nsimp + 1, d, scratch) == nsimp:
            simplex[nsimp] = i
            nsimp += 1
    if nsimp != d + 1:
        raise RuntimeError("hull input is not full-dimensional")
    inserted = np.zeros(n, np.bool_)
    for k in range(d + 1):
        inserted[simplex[k]] = True
    fa = np.empty((HULL_CAP, d), np.int64)
    fb = np.empty(HULL_CAP, np.int64)
    fmask = np.empty(HULL_CAP, np.int64)
    alive = np.zeros(HULL_CAP, np.bool_)
    nf = 0
    # scratch for hyperplane fitting
    a_out = np.empty(d + 1, np.int64)
    elim = np.empty((n + 1, d), np.int64)
    minor = np.empty((n + 1, d), np.int64)
    sq = np.empty((d - 1, d - 1), np.int64)
    sel = np.empty(d, np.int64)
    order = np.empty(n + 1, np.int64)
    idxs = np.empty(n + 1, np.int64)
    for k in range(d + 1):
        m = 0
        for j in range(d + 1):
            if j != k:
                idxs[m] = simplex[j]
                m += 1
        b = _hyperplane_through(coords, idxs, m, d, a_out, elim, minor, sq, sel, order)
        if a_out[d] == 0:
            raise RuntimeError("degenerate initial simplex facet")
        apex = simplex[k]
        s = np.int64(0)
        for c in range(d):
            s += a_out[c] * coords[apex, c]
        if s > b:
            for c in range(d):
                a_out[c] = -a_out[c]
            b = -b
        for c in range(d):
            fa[nf, c] = a_out[c]
        fb[nf] = b
        alive[nf] = True
        nf += 1
    _refresh_masks(coords, inserted, n, d, fa, fb, fmask, alive, nf)
    visible = np.empty(HULL_CAP, np.int64)
    hidden = np.empty(HULL_CAP, np.int64)
    for p in range(n):
        if inserted[p]:
            continue
        nvis = 0
        nhid = 0
        on_any = False
        for f in range(nf):
            if not alive[f]:
                continue
            s = np.int64(0)
            for c in range(d):
                s += fa[f, c] * coords[p, c]
            if s > fb[f]:
                visible[nvis] = f
                nvis += 1
            elif s < fb[f]:
                hidden[nhid] = f
                nhid += 1
            else:
                fmask[f] |= np.int64(1) << p
        inserted[p] = True
        if nvis == 0:
            continue
        for vi in range(nvis):
            f = visible[vi]
            for hi in range(nhid):
                g = hidden[hi]
                ridge = fmask[f] & fmask[g]
                if _popcount(ridge) < d - 1:
                    continue
                m = 0
                for q in range(n):
                    if (ridge >> q) & 1:
                        idxs[m] = q
                        m += 1
                idxs[m] = p
                m += 1
                b = _hyperplane_through(coords, idxs, m, d, a_out,
                                        elim, minor, sq, sel, order)
                if a_out[d] == 0:
                    continue
                # supporting iff all inserted points fall on one side
                pos = False
                neg = False
                for q in range(n):
                    if not inserted[q]:
                        continue
                    s = np.int64(0)
                    for c in range(d):
                        s += a_out[c] * coords[q, c]
                    if s > b:
                        pos = True
                    elif s < b:
                        neg = True
                    if pos and neg:
                        break
                if pos and neg:
                    continue
                if pos:
                    for c in range(d):
                        a_out[c] = -a_out[c]
                    b = -b
                dup = False
                for f2 in range(nf):
                    if not alive[f2]:
                        continue
                    if fb[f2] != b:
                        continue
                    same = True
                    for c in range(d):
                        if fa[f2, c] != a_out[c]:
                            same = False
                            break
                    if same:
                        dup = True
                        break
                if dup:
                    continue
                if nf == HULL_CAP:
                    raise RuntimeError("hull facet capacity exceeded")
                for c in range(d):
                    fa[nf, c] = a_out[c]
                fb[nf] = b
                mk = np.int64(1) << p
                for q in range(n):
                    if inserted[q] and q != p:
                        s = np.int64(0)
                        for c in range(d):
                            s += a_out[c] * coords[q, c]
                        if s == b:
                            mk |= np.int64(1) << q
                fmask[nf] = mk
                alive[nf] = True
                nf += 1
        for vi in range(nvis):
            alive[visible[vi]] = False
    # compact, then sort facets lexicographically by (a, b)
    cnt = 0
    for f in range(nf):
        if alive[f]:
            if cnt != f:
                for c in range(d):
                    fa[cnt, c] = fa[f, c]
                fb[cnt] = fb[f]
            cnt += 1
    for i in range(1, cnt):
        j = i
        while j > 0:
            before = False
            after = False
            for c in range(d):
                if fa[j, c] != fa[j - 1, c]:
                    before = fa[j, c] < fa[j - 1, c]
                    after = True
                    break
            if not after:
                before = fb[j] < fb[j - 1]
            if not before:
                break
            for c in range(d):
                tmp = fa[j, c]
                fa[j, c] = fa[j - 1, c]
                fa[j - 1, c] = tmp
            tmpb = fb[j]
            fb[j] = fb[j - 1]
            fb[j - 1] = tmpb
            j -= 1
    return fa[:cnt].copy(), fb[:cnt].copy(), cnt


@njit(cache=True)
def _refresh_masks(coords, inserted, n, d, fa, fb, fmask, alive, nf):
    for f in range(nf):
        if not alive[f]:
            continue
        mk = np.int64(0)
        for q in range(n):
            if inserted[q]:
                s = np.int64(0)
                for c in range(d):
                    s += fa[f, c] * coords[q, c]
                if s == fb[f]:
                    mk |= np.int64(1) << q
        fmask[f] = mk


@njit(cache=True)
def _incidence_masks(vals, d, fa, fb, nf):
    """Vertex bitmask per facet over the full input point list."""
    n = vals.shape[0]
    masks = np.zeros(nf, np.int64)
    for f in range(nf):
        mk = np.int64(0)
        for j in range(n):
            s = np.int64(0)
            for c in range(d):
                s += fa[f, c] * ((vals[j] >> (d - 1 - c)) & 1)
            if s == fb[f]:
                mk |= np.int64(1) << j
        masks[f] = mk
    return masks


# ---------------------------------------------------------------------------
# face lattice from the incidence matrix
# ---------------------------------------------------------------------------

@njit(cache=True)
def _set_insert(table, bits, key):
    """Open-addressing insert of a positive key; True when newly added."""
    mask = (np.int64(1) << bits) - 1
    idx = np.int64((np.uint64(key) * np.uint64(0x9E3779B97F4A7C15))
                   >> np.uint64(64 - bits))
    while True:
        cur = table[idx]
        if cur == 0:
            table[idx] = key
            return True
        if cur == key:
            return False
        idx = (idx + 1) & mask


@njit(cache=True)
def _enumerate_face_masks(rows, nf, n):
    """Vertex masks of all nonempty proper faces (facets included).

    Breadth-first closure generation downward from the facet rows; the
    full polytope and the empty face are not emitted.
    """
    bits = FACE_TABLE_BITS if n > 16 else 14
    table = np.zeros(np.int64(1) << bits, np.int64)
    out = np.empty(FACE_CAP, np.int64)
    cnt = 0
    for f in range(nf):
        if rows[f] != 0 and _set_insert(table, bits, rows[f]):
            out[cnt] = rows[f]
            cnt += 1
    head = 0
    while head < cnt:
        cur = out[head]
        head += 1
        for f in range(nf):
            inter = cur & rows[f]
            if inter == 0 or inter == cur:
                continue
            cl = np.int64(-1)
            for g in range(nf):
                if (rows[g] & inter) == inter:
                    cl &= rows[g]
            if _set_insert(table, bits, cl):
                if cnt == FACE_CAP or 2 * cnt >= table.shape[0]:
                    raise RuntimeError("face capacity exceeded")
                out[cnt] = cl
                cnt += 1
    return out[:cnt].copy(), cnt


# ---------------------------------------------------------------------------
# whole-polytope classification and level extension
# ---------------------------------------------------------------------------

@njit(cache=True)
def _classify_one(vals, d, budget):
    """(affine rank, facet count, f-vector, canonical incidence rows).

    The last two come back empty when the polytope is not
    full-dimensional.  Certificate rows pack vertex j of the canonical
    column order into bit n-1-j, sorted ascending.
    """
    n = vals.shape[0]
    scratch = np.empty((max(n - 1, 1), d), np.int64)
    rank = _rank_of_values(vals, n, d, scratch)
    if rank < d:
        empty = np.empty(0, np.int64)
        return rank, 0, empty, empty
    fa, fb, nf = _hull(vals, d)
    rows = _incidence_masks(vals, d, fa, fb, nf)
    fmasks, cnt = _enumerate_face_masks(rows, nf, n)
    fvec = np.zeros(d, np.int64)
    sub = np.empty(n, np.int64)
    for i in range(cnt):
        dim = _rank_of_mask(vals, fmasks[i], d, sub, scratch)
        fvec[dim] += 1
    crows = np.empty(nf, np.int64)
    for f in range(nf):
        v = np.int64(0)
        for j in range(n):
            if (rows[f] >> j) & 1:
                v |= np.int64(1) << (n - 1 - j)
        crows[f] = v
    crows.sort()
    best = crows.copy()
    _colperm_min(crows, n, best, budget)
    return rank, nf, fvec, best


@njit(cache=True)
def _extensions_of(vals, d, budget):
    """Canonical forms of every 2-neighborly one-point extension of vals."""
    n = vals.shape[0]
    out = np.empty(((np.int64(1) << d) - n) * (n + 1), np.int64)
    cnt = 0
    width = n + 1 + d + 1
    tab = np.empty((d, width), np.int64)
    obj = np.empty(width, np.int64)
    basis = np.empty(d, np.int64)
    support = np.empty(d, np.int64)
    yv = np.empty(n, np.int64)
    others = np.empty(max(n - 1, 1), np.int64)
    zbuf = np.empty(n + 1, np.int64)
    newvals = np.empty(n + 1, np.int64)
    ptr = 0
    for v in range(np.int64(1) << d):
        if ptr < n and vals[ptr] == v:
            ptr += 1
            continue
        if not _extend_ok(vals, v, d, yv, others, zbuf, tab, obj, basis, support):
            continue
        k = 0
        for i in range(n):
            if vals[i] < v:
                newvals[k] = vals[i]
                k += 1
        newvals[k] = v
        k += 1
        for i in range(n):
            if vals[i] > v:
                newvals[k] = vals[i]
                k += 1
        rep = _representative(newvals, d, budget)
        base = cnt * (n + 1)
        for i in range(n + 1):
            out[base + i] = rep[i]
        cnt += 1
    return out[:cnt * (n + 1)].copy(), cnt


@njit(cache=True)
def _count_full_dim(flat, count, n, d):
    """How many of `count` packed n-vertex records span all of R^d."""
    vals = np.empty(n, np.int64)
    scratch = np.empty((max(n - 1, 1), d), np.int64)
    hits = 0
    for r in range(count):
        for i in range(n):
            vals[i] = flat[r * n + i]
        if _rank_of_values(vals, n, d, scratch) == d:
            hits += 1
    return hits


@njit(cache=True)
def _cone_member_alloc(z, y, d):
    """One-off cone membership (kernel twin of ratlin.cone_member)."""
    if y == 0:
        return True
    m0 = z.shape[0]
    zb = np.empty(m0, np.int64)
    m = 0
    for i in range(m0):
        if z[i] != 0 and (z[i] & y) == z[i]:
            zb[m] = z[i]
            m += 1
    width = m + d + 1
    tab = np.empty((d, width), np.int64)
    obj = np.empty(width, np.int64)
    basis = np.empty(d, np.int64)
    support = np.empty(d, np.int64)
    return _cone_feasible(zb, m, y, d, tab, obj, basis, support)
