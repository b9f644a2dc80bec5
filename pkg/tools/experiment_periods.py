"""Probe the quasi-polynomial period structure of average-norm sequences.

For each candidate modulus L, try to write the sequence as per-residue
polynomials mod L: value(n) = P_{n mod L}(n), solving exactly and
checking every remaining sample. Reports the smallest (L, degree) that
reproduces all samples.
"""

import sys

sys.path.insert(0, "src")

from gmpy2 import mpq

from polyavg import mu_sequence, parse_coefficient_set


def solve_exact(rows, rhs):
    """Gauss-Jordan over mpq; returns solution list or None if inconsistent/singular."""
    n_rows = len(rows)
    n_cols = len(rows[0])
    M = [[mpq(x) for x in row] + [mpq(y)] for row, y in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(n_rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
        if r == n_rows:
            break
    # inconsistency check
    for i in range(r, n_rows):
        if M[i][n_cols] != 0:
            return None
    sol = [mpq(0)] * n_cols
    for row_idx, c in enumerate(piv_cols):
        sol[c] = M[row_idx][n_cols]
    return sol


def try_shape(seq, L, deg):
    """Fit value(n) = P_{n mod L}(n) with deg(P_r) <= deg; check all samples."""
    ncols = L * (deg + 1)
    if len(seq) < ncols + 6:
        return None
    rows = []
    for n in range(ncols):
        row = [mpq(0)] * ncols
        r = n % L
        for j in range(deg + 1):
            row[r * (deg + 1) + j] = mpq(n) ** j
        rows.append(row)
    sol = solve_exact(rows, seq[:ncols])
    if sol is None:
        return None
    for n in range(len(seq)):
        r = n % L
        val = sum(sol[r * (deg + 1) + j] * mpq(n) ** j for j in range(deg + 1))
        if val != seq[n]:
            return None
    return sol


def probe(label, literal, alpha, n_max=84):
    T = parse_coefficient_set(literal)
    seq_g = mu_sequence(T, alpha, n_max)
    assert all(v.is_real() for v in seq_g), "sequence not real!"
    seq = [v.re for v in seq_g]
    for L in (1, 2, 3, 4, 6, 12):
        for deg in range(0, 2 * alpha + 2):
            if try_shape(seq, L, deg) is not None:
                print(f"{label} alpha={alpha}: fits with period L={L}, degree {deg}")
                return L, deg
    print(f"{label} alpha={alpha}: NO FIT up to L=12, degree {2*alpha+1}")
    return None


if __name__ == "__main__":
    probe("{1,2}", "{1,2}", 1)
    probe("{1,2}", "{1,2}", 2)
    probe("{1,2}", "{1,2}", 3)
    probe("{0,1}", "{0,1}", 3)
    probe("{1/2,-1/2,i}", "{1/2,-1/2,i}", 2)
    probe("{1/2,-1/2,i}", "{1/2,-1/2,i}", 3)
    probe("{-3,1,2}", "{-3,1,2}", 3)
    probe("{-3,1,2}", "{-3,1,2}", 4, n_max=100)
    probe("{-1,1}", "{-1,1}", 5)
    probe("{-1,0,1}", "{-1,0,1}", 5)
