"""Re-derive the zero-sum closed-form generating functions from the recursion.

The exponent-6 and exponent-8 closed forms for zero-element-sum sets are
frozen in ``polyavg.closedforms``.  This tool regenerates them from
scratch so the constants are auditable:

1. Every average is a rational combination of products of the set's
   power sums, with coefficients that do not depend on the set.  For a
   fixed exponent the possible products ("column monomials") form a
   small finite basis.
2. Sampling many zero-sum sets and solving the exact linear system per
   degree index recovers each monomial's coefficient sequence.
3. Each coefficient sequence is matched against a small family of
   candidate rational generating functions (denominators built from
   (1-x), (1+x), (1+x+x^2), (1+x^2)), with surplus samples as a check.

Run as:  python tools/derive_catalog.py
"""

import sys
from itertools import combinations_with_replacement

sys.path.insert(0, "src")

from gmpy2 import mpq

from polyavg import CoefficientSet, GaussianRational, mu_sequence, parse_gaussian

N_SAMPLES = 30  # degree indices 0..N_SAMPLES per set


# ---------------------------------------------------------------------------
# monomial basis: multisets of columns (a, b), excluding (0,0), (1,0), (0,1),
# with total a-sum = total b-sum = alpha
# ---------------------------------------------------------------------------

def column_monomials(alpha, zero_sum=True):
    """Bases of column products; zero-sum sets have no (1,0)/(0,1) columns."""
    excluded = {(0, 0)} | ({(1, 0), (0, 1)} if zero_sum else set())
    columns = [
        (a, b)
        for a in range(alpha + 1)
        for b in range(alpha + 1)
        if (a, b) not in excluded
    ]
    max_count = alpha if zero_sum else 2 * alpha
    out = []
    for count in range(1, max_count + 1):
        for combo in combinations_with_replacement(columns, count):
            if sum(a for a, _ in combo) == alpha and sum(b for _, b in combo) == alpha:
                out.append(tuple(sorted(combo)))
    return sorted(set(out))


def monomial_value(T, monomial):
    v = GaussianRational(1)
    for (a, b) in monomial:
        v = v * T.power_sum(a, b)
    return v / (T.d ** len(monomial))


# ---------------------------------------------------------------------------
# zero-sum sample pool
# ---------------------------------------------------------------------------

def sample_sets():
    pairs = ["1", "2", "3", "1/2", "3/2", "5/2", "i", "2i", "1+i", "1+2i",
             "2+i", "1/2+i", "3+i", "1+3i", "5", "2+3i"]
    triples = [("1", "2"), ("1", "3"), ("2", "3"), ("1", "4"), ("3", "4"),
               ("1/2", "1"), ("1/2", "2"), ("1", "5"), ("2", "5"), ("3", "5"),
               ("i", "1"), ("i", "2"), ("2i", "1"), ("i", "1/2"), ("1+i", "1"),
               ("1+i", "2"), ("i", "3"), ("2i", "3"), ("1+i", "1-i"), ("i", "1+i"),
               ("1/3", "1"), ("2/3", "1"), ("1/3", "2"), ("3i", "4")]
    quads = [("1", "-1", "2"), ("1", "-1", "i"), ("i", "-i", "2"), ("1", "i", "-1"),
             ("1", "2", "3"), ("1", "2", "-4"), ("1", "i", "2"), ("1", "i", "2i"),
             ("1/2", "1", "2"), ("1", "2", "4"), ("1", "3", "5"), ("i", "2i", "1")]
    # larger and less symmetric sets break the power-sum dependencies that
    # small or conjugation-symmetric sets satisfy
    big = [
        ("1", "2", "3", "4"), ("1", "2", "3", "5"), ("1", "2", "4", "7"),
        ("1", "i", "2", "3"), ("1", "2i", "3", "4"), ("1", "-2", "3", "i"),
        ("1", "1+i", "-2"), ("2", "1+i", "-1"), ("1", "2+i", "3i"),
        ("1+2i", "2", "-i"), ("3", "1-2i", "i"), ("1", "4i", "2+i"),
        ("1", "1+i", "2-i", "3"), ("i", "1+i", "2", "-3"),
        ("1", "2", "1+i", "2i"), ("1/2", "1+i", "2"), ("1", "1+2i", "-3+i"),
        ("2+i", "1-i", "3"), ("1", "2", "3+i", "i"), ("1", "i", "1-i", "2+3i"),
        ("1", "2", "3", "4", "5"), ("1", "2", "3", "4", "-11"),
        ("1", "-1", "2", "-2", "3"), ("1", "i", "-1", "-i", "2"),
        ("1", "2", "3", "i", "2i", "4"), ("1", "1+i", "2", "3-i", "4i"),
        ("1", "2", "3", "4", "5", "6"),
        ("1", "2", "3", "4", "5", "6", "7"),
        ("1", "2", "3", "4", "5", "6", "7", "8"),
        ("1/2", "1", "3/2", "2", "5/2", "3"),
    ]
    sets = []
    for tup in big:
        elems = [parse_gaussian(x) for x in tup]
        total = GaussianRational(0)
        for e in elems:
            total = total + e
        try:
            sets.append(CoefficientSet(elems + [-total]))
        except ValueError:
            pass
    for lit in pairs:
        a = parse_gaussian(lit)
        sets.append(CoefficientSet([a, -a]))
    for la, lb in triples:
        a, b = parse_gaussian(la), parse_gaussian(lb)
        try:
            sets.append(CoefficientSet([a, b, -(a + b)]))
        except ValueError:
            pass
    for la, lb, lc in quads:
        a, b, c = (parse_gaussian(x) for x in (la, lb, lc))
        try:
            sets.append(CoefficientSet([a, b, c, -(a + b + c)]))
        except ValueError:
            pass
    seen, out = set(), []
    for T in sets:
        key = frozenset(T.elements)
        if key not in seen:
            seen.add(key)
            out.append(T)
    return out


# ---------------------------------------------------------------------------
# exact linear algebra over mpq
# ---------------------------------------------------------------------------

def rref_solve(rows, rhs):
    """Solve an overdetermined consistent system; returns (solution, rank)."""
    n_cols = len(rows[0])
    M = [row[:] + [b] for row, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(M)):
        if M[i][n_cols] != 0:
            raise ArithmeticError("inconsistent system")
    sol = [mpq(0)] * n_cols
    for i, c in enumerate(piv_cols):
        sol[c] = M[i][n_cols]
    return sol, r


# ---------------------------------------------------------------------------
# rational generating-function reconstruction
# ---------------------------------------------------------------------------

def poly_mul(p, q):
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def candidate_denominators(alpha):
    base = [mpq(1)]
    one_minus = [mpq(1), mpq(-1)]
    one_plus = [mpq(1), mpq(1)]
    omega = [mpq(1), mpq(1), mpq(1)]      # 1 + x + x^2
    quart = [mpq(1), mpq(0), mpq(1)]      # 1 + x^2
    cands = []
    for a in range(1, alpha + 3):
        for b in range(0, 3):
            for c in range(0, 2):
                for e in range(0, 2):
                    den = base
                    for _ in range(a):
                        den = poly_mul(den, one_minus)
                    for _ in range(b):
                        den = poly_mul(den, one_plus)
                    for _ in range(c):
                        den = poly_mul(den, omega)
                    for _ in range(e):
                        den = poly_mul(den, quart)
                    cands.append((len(den) - 1, den))
    cands.sort(key=lambda t: (t[0], [str(x) for x in t[1]]))
    return cands


def reconstruct_gf(seq, alpha):
    """Smallest candidate denominator D with seq*D a short polynomial."""
    for deg_d, den in candidate_denominators(alpha):
        prod = [mpq(0)] * len(seq)
        for k in range(len(seq)):
            acc = mpq(0)
            for j in range(min(k, deg_d) + 1):
                acc += den[j] * seq[k - j]
            prod[k] = acc
        cutoff = deg_d + alpha + 1
        if cutoff >= len(seq) - 5:
            continue
        if all(prod[k] == 0 for k in range(cutoff, len(seq))):
            num = prod[:cutoff]
            while num and num[-1] == 0:
                num.pop()
            return num, den
    raise ArithmeticError("no candidate denominator matched")


# ---------------------------------------------------------------------------
# main derivation
# ---------------------------------------------------------------------------

def general_sample_sets():
    literals = [
        ("0", "1"), ("1", "2"), ("1", "3"), ("2", "3"), ("1", "-2"), ("1/2", "2"),
        ("0", "i"), ("1", "i"), ("1", "2i"), ("i", "2"), ("1+i", "1"), ("1+i", "2"),
        ("1", "1-i"), ("2+i", "1"), ("0", "1", "2"), ("1", "2", "3"), ("0", "1", "3"),
        ("1", "2", "4"), ("0", "1", "i"), ("1", "2", "i"), ("1", "i", "2i"),
        ("1", "1+i", "2"), ("0", "1", "1+i"), ("1", "2", "3", "4"), ("0", "1", "2", "3"),
        ("1", "i", "-1", "2"), ("1", "2", "1+i", "3"), ("0", "1", "2", "i"),
        ("1", "2", "3", "4", "5"), ("0", "1", "2", "3", "4"),
        ("1", "2", "3", "4", "i"), ("1", "2", "3", "4", "5", "6"),
        ("1/2", "3/2", "2", "3"), ("1/3", "1", "2"), ("1", "3", "1-2i"),
        ("2", "3i", "1+i"), ("1", "4", "2+3i"), ("0", "1/2", "1", "2"),
    ]
    out, seen = [], set()
    for tup in literals:
        elems = [parse_gaussian(x) for x in tup]
        T = CoefficientSet(elems)
        key = frozenset(T.elements)
        if key not in seen:
            seen.add(key)
            out.append(T)
    # include zero-sum samples as well: they are general sets too
    for T in sample_sets():
        key = frozenset(T.elements)
        if key not in seen:
            seen.add(key)
            out.append(T)
    return out


def derive(alpha, zero_sum=True):
    monomials = column_monomials(alpha, zero_sum)
    pool = sample_sets() if zero_sum else general_sample_sets()
    kind = "zero-sum" if zero_sum else "general"
    print(f"alpha={alpha} ({kind}): {len(monomials)} monomials, {len(pool)} sample sets")

    features, sequences = [], []
    for T in pool:
        phi = [monomial_value(T, M) for M in monomials]
        features.append(phi)
        sequences.append(mu_sequence(T, alpha, N_SAMPLES))

    # conjugating every element of a zero-sum set is a bijection that
    # preserves the averages and swaps each column (a, b) with (b, a), so
    # the universal coefficients of a monomial and its columnwise
    # conjugate are equal
    sym_rows = []
    index = {M: i for i, M in enumerate(monomials)}
    for M, i in index.items():
        Mc = tuple(sorted((b, a) for a, b in M))
        j = index[Mc]
        if i < j:
            row = [mpq(0)] * len(monomials)
            row[i], row[j] = mpq(1), mpq(-1)
            sym_rows.append(row)

    coeff_rows = []
    for n in range(N_SAMPLES + 1):
        rows, rhs = [], []
        for phi, seq in zip(features, sequences):
            val = seq[n]
            assert val.is_real()
            rows.append([p.re for p in phi])
            rhs.append(val.re)
            if any(p.im for p in phi):
                rows.append([p.im for p in phi])
                rhs.append(mpq(0))
        for row in sym_rows:
            rows.append(row)
            rhs.append(mpq(0))
        sol, rank = rref_solve(rows, rhs)
        if n == N_SAMPLES:
            print(f"  rank {rank} / {len(monomials)}")
        coeff_rows.append(sol)

    terms = []
    for idx, M in enumerate(monomials):
        seq = [coeff_rows[n][idx] for n in range(N_SAMPLES + 1)]
        if all(v == 0 for v in seq):
            continue
        num, den = reconstruct_gf(seq, alpha)
        terms.append((M, num, den))
    return terms


def render_terms(alpha, terms, zero_sum=True):
    family = "ZERO_SUM" if zero_sum else "GENERAL"
    print(f"# exponent {2 * alpha}, {family.lower().replace('_', '-')} sets: {len(terms)} terms")
    print(f"_{family}_MU{2 * alpha}_TERMS = [")
    for M, num, den in terms:
        num_s = "(" + ", ".join(f'"{v}"' for v in num) + ("," if len(num) == 1 else "") + ")"
        den_s = "(" + ", ".join(f'"{v}"' for v in den) + ("," if len(den) == 1 else "") + ")"
        print(f"    ({M!r}, {num_s}, {den_s}),")
    print("]")


def check(alpha, terms, literals):
    """Evaluate the derived GF for holdout sets and compare with the recursion."""
    from polyavg import parse_coefficient_set

    for lit in literals:
        T = parse_coefficient_set(lit)
        n_hi = 40
        expect = mu_sequence(T, alpha, n_hi)
        # series of sum of terms
        series = [GaussianRational(0)] * (n_hi + 1)
        for M, num, den in terms:
            scale = monomial_value(T, M)
            if not scale:
                continue
            coeffs = []
            for k in range(n_hi + 1):
                acc = GaussianRational(num[k]) if k < len(num) else GaussianRational(0)
                for j in range(1, min(k, len(den) - 1) + 1):
                    acc = acc - GaussianRational(den[j]) * coeffs[k - j]
                coeffs.append(acc)
            for k in range(n_hi + 1):
                series[k] = series[k] + coeffs[k] * scale
        ok = all(series[k] == expect[k] for k in range(n_hi + 1))
        print(f"  holdout {lit}: {'OK' if ok else 'MISMATCH'}")
        if not ok:
            for k in range(n_hi + 1):
                if series[k] != expect[k]:
                    print(f"    first mismatch at n={k}: {series[k]} vs {expect[k]}")
                    break


ZERO_SUM_HOLDOUTS = [
    "{-1,1}", "{-1,0,1}", "{-2,2}", "{-3,1,2}", "{1,i,-1-i}",
    "{-2,0,2}", "{-4,1,3}", "{-5,2,3}", "{1,2i,-1-2i}",
    "{3,i,-3-i}", "{1/2,3/2,-2}", "{1,-2,4,-3}", "{2,3,-1,-4}",
    "{1,1+i,-2,-i}", "height:2", "height:3",
]

GENERAL_HOLDOUTS = [
    "{0,1}", "{1,2}", "{0,i}", "{1/2,-1/2,i}", "{1,5}", "{2,3,5}",
    "{0,2i}", "{1+2i,3}", "{1,1+i,2-3i}", "{0,1,4}", "height:2",
    "{-1,1}", "{-1,0,1}", "{1,2,3,4,5,6,7}",
]

if __name__ == "__main__":
    for alpha in (1, 2):
        terms = derive(alpha, zero_sum=False)
        render_terms(alpha, terms, zero_sum=False)
        check(alpha, terms, GENERAL_HOLDOUTS)
    for alpha in (1, 2, 3, 4):
        terms = derive(alpha)
        render_terms(alpha, terms)
        check(alpha, terms, ZERO_SUM_HOLDOUTS)
