"""Independent reference computations in sympy.

These set the problems up from the defining identities with symbolic
unknowns and let sympy do the linear algebra, sharing no code with the
package.  Structure constants come in as ``{(i, j): {k: coeff}}`` with
1-based indices and sympy-compatible coefficients.
"""

import itertools

import sympy as sp


def tensor(n, products):
    c = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), terms in products.items():
        for k, v in terms.items():
            c[i - 1][j - 1][k - 1] = sp.nsimplify(v)
    return c


def mul(c, x, y):
    n = len(c)
    return [sp.expand(sum(x[i] * y[j] * c[i][j][k] for i in range(n) for j in range(n))) for k in range(n)]


def e(n, i):
    return [sp.Integer(1) if k == i - 1 else sp.Integer(0) for k in range(n)]


def left_symmetric_violations(c):
    n = len(c)
    out = []
    for a, b, d in itertools.product(range(1, n + 1), repeat=3):
        x, y, z = e(n, a), e(n, b), e(n, d)
        lhs = [p - q for p, q in zip(mul(c, mul(c, x, y), z), mul(c, x, mul(c, y, z)))]
        rhs = [p - q for p, q in zip(mul(c, mul(c, y, x), z), mul(c, y, mul(c, x, z)))]
        if any(sp.simplify(p - q) != 0 for p, q in zip(lhs, rhs)):
            out.append((a, b, d))
    return out


def novikov_violations(c):
    n = len(c)
    out = []
    for a, b, d in itertools.product(range(1, n + 1), repeat=3):
        x, y, z = e(n, a), e(n, b), e(n, d)
        if any(sp.simplify(p - q) != 0 for p, q in zip(mul(c, mul(c, x, y), z), mul(c, mul(c, x, z), y))):
            out.append((a, b, d))
    return out


def _theta_symbols(n):
    return sp.Matrix(n, n, lambda i, j: sp.Symbol(f"th_{i}_{j}"))


def cocycle_constraint_matrix(c):
    """Coefficient matrix of all basis-triple instances of the cocycle identity."""
    n = len(c)
    T = _theta_symbols(n)

    def th(u, v):
        return sp.expand((sp.Matrix([u]) * T * sp.Matrix(v))[0])

    eqs = []
    for a, b, d in itertools.product(range(1, n + 1), repeat=3):
        x, y, z = e(n, a), e(n, b), e(n, d)
        eqs.append(th(mul(c, x, y), z) - th(x, mul(c, y, z)) - th(mul(c, y, x), z) + th(y, mul(c, x, z)))
    syms = list(T)
    return sp.Matrix([[sp.diff(q, s) for s in syms] for q in eqs])


def dim_z2(c):
    n = len(c)
    return n * n - cocycle_constraint_matrix(c).rank()


def dim_b2(c):
    n = len(c)
    return sp.Matrix([[c[i][j][k] for i in range(n) for j in range(n)] for k in range(n)]).rank()


def annihilator_basis(c):
    n = len(c)
    x = sp.symbols(f"x0:{n}")
    eqs = []
    for j in range(1, n + 1):
        eqs += mul(c, list(x), e(n, j)) + mul(c, e(n, j), list(x))
    M = sp.Matrix([[sp.diff(q, s) for s in x] for q in eqs])
    return M.nullspace()


def derivation_dim(c):
    n = len(c)
    D = sp.Matrix(n, n, lambda a, b: sp.Symbol(f"d_{a}_{b}"))  # D(e_a) = sum_b D[a, b] e_b

    def apply(v):
        return [sum(v[a] * D[a, b] for a in range(n)) for b in range(n)]

    eqs = []
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        x, y = e(n, i), e(n, j)
        lhs = apply(mul(c, x, y))
        rhs = [p + q for p, q in zip(mul(c, apply(x), y), mul(c, x, apply(y)))]
        eqs += [sp.expand(p - q) for p, q in zip(lhs, rhs)]
    syms = list(D)
    M = sp.Matrix([[sp.diff(q, s) for s in syms] for q in eqs])
    return n * n - M.rank()


def span_dim(vectors):
    if not vectors:
        return 0
    return sp.Matrix(vectors).rank()


def power_chain_dims(c, steps):
    """dims of A^<1..steps> with A^<k> = sum_{p+q=k} A^<p> A^<q>."""
    n = len(c)
    chain = [[e(n, i) for i in range(1, n + 1)]]
    for k in range(2, steps + 1):
        vecs = []
        for p in range(1, k):
            for u in chain[p - 1]:
                for v in chain[k - p - 1]:
                    vecs.append(mul(c, u, v))
        vecs = [v for v in vecs if any(x != 0 for x in v)]
        basis = sp.Matrix(vecs).rref()[0] if vecs else sp.Matrix([])
        rows = [list(basis.row(r)) for r in range(basis.rows) if any(basis.row(r))] if vecs else []
        chain.append(rows)
    return [span_dim(x) for x in chain]


def from_algebra(A):
    """sympy tensor from a package Algebra (exact Gaussian rationals)."""
    def conv(x):
        return sp.Rational(x.re.numerator, x.re.denominator) + sp.I * sp.Rational(x.im.numerator, x.im.denominator)
    return [[[conv(x) for x in row] for row in plane] for plane in A.c]


def novikov_cocycle_rank(c):
    """Rank of the cocycle system together with the right-commutativity constraint on theta."""
    n = len(c)
    T = _theta_symbols(n)

    def th(u, v):
        return sp.expand((sp.Matrix([u]) * T * sp.Matrix(v))[0])

    eqs = list(cocycle_constraint_matrix(c) * sp.Matrix(list(T)))
    for a, b, d in itertools.product(range(1, n + 1), repeat=3):
        x, y, z = e(n, a), e(n, b), e(n, d)
        eqs.append(th(mul(c, x, y), z) - th(mul(c, x, z), y))
    syms = list(T)
    return sp.Matrix([[sp.diff(q, s) for s in syms] for q in eqs]).rank()


def from_algebra_matrix(m):
    """sympy entries of a package matrix."""
    def conv(x):
        return sp.Rational(x.re.numerator, x.re.denominator) + sp.I * sp.Rational(x.im.numerator, x.im.denominator)
    return [[conv(x) for x in row] for row in m]
