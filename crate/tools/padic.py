"""p-maximal orders and prime decomposition for small-degree number fields.

Round Two (Pohst-Zassenhaus): enlarge Z[theta] by the ring of multipliers of
the p-radical until it stabilises, then read off the (e, f) data from the
primitive idempotents of the Frobenius-fixed subalgebra of O/pO.
"""
from fractions import Fraction


def polymulmod(a, b, T):
    n = len(T) - 1
    prod = [Fraction(0)] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] -= c * T[i]
    return prod[:n]


def inverse(M):
    n = len(M)
    A = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [v * inv for v in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def vecmat(v, M):
    return [sum(v[i] * M[i][j] for i in range(len(v))) for j in range(len(M[0]))]


def hnf_rows(rows, n):
    """Integer row HNF; returns n independent rows spanning the same lattice."""
    A = [list(r) for r in rows]
    out = []
    col = 0
    for col in range(n):
        while True:
            nz = [r for r in A if r[col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda r: abs(r[col]))
            rest = []
            for r in A:
                if r is piv:
                    continue
                if r[col] != 0:
                    q = r[col] // piv[col]
                    r = [x - q * y for x, y in zip(r, piv)]
                rest.append(r)
            A = rest
            if all(r[col] == 0 for r in A):
                if piv[col] < 0:
                    piv = [-x for x in piv]
                out.append(piv)
                break
            A.append(piv)
        A = [r for r in A if any(r)]
    assert len(out) == n, "lattice not of full rank"
    return out


def kernel_mod_p(M, p):
    """Left kernel {v : v M = 0 mod p} of an r x c matrix."""
    r, c = len(M), len(M[0])
    A = [[M[i][j] % p for j in range(c)] + [int(i == k) for k in range(r)] for i in range(r)]
    row = 0
    for col in range(c):
        piv = next((i for i in range(row, r) if A[i][col] % p), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = pow(A[row][col], -1, p)
        A[row] = [(x * inv) % p for x in A[row]]
        for i in range(r):
            if i != row and A[i][col] % p:
                f = A[i][col]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[row])]
        row += 1
    return [A[i][c:] for i in range(row, r)]


def rank_mod_p(M, p):
    if not M:
        return 0
    return len(M) - len(kernel_mod_p(M, p))


class Order:
    def __init__(self, T, B):
        self.T, self.B, self.n = T, B, len(B)
        self.Binv = inverse(B)
        self.mt = [[None] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(self.n):
                prod = polymulmod(B[i], B[j], T)
                coords = vecmat(prod, self.Binv)
                assert all(x.denominator == 1 for x in coords), "basis is not a ring"
                self.mt[i][j] = [int(x) for x in coords]
        one = vecmat([Fraction(1)] + [Fraction(0)] * (self.n - 1), self.Binv)
        assert all(x.denominator == 1 for x in one)
        self.one = [int(x) for x in one]

    def mul(self, u, v, mod=None):
        n = self.n
        out = [0] * n
        for i in range(n):
            if u[i]:
                for j in range(n):
                    if v[j]:
                        c = u[i] * v[j]
                        row = self.mt[i][j]
                        for k in range(n):
                            out[k] += c * row[k]
        if mod:
            out = [x % mod for x in out]
        return out

    def power(self, u, e, p):
        result = [x % p for x in self.one]
        base = u
        while e:
            if e & 1:
                result = self.mul(result, base, p)
            base = self.mul(base, base, p)
            e >>= 1
        return result

    def radical(self, p):
        q = p
        while q < self.n:
            q *= p
        unit = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        F = [self.power(e, q, p) for e in unit]
        return kernel_mod_p(F, p)


def p_maximal(T, p):
    """Returns (order, v_p of index of Z[theta] in it)."""
    n = len(T) - 1
    B = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    O = Order(T, B)
    index_exp = 0
    while True:
        rad = O.radical(p)
        gens = [[p * int(i == j) for j in range(n)] for i in range(n)] + [list(v) for v in rad]
        H = hnf_rows(gens, n)
        Hinv = inverse(H)
        rows = []
        for i in range(n):
            e = [int(i == j) for j in range(n)]
            blocks = []
            for h in H:
                prod = O.mul(e, h)
                coords = vecmat(prod, Hinv)
                assert all(x.denominator == 1 for x in coords)
                blocks.extend(int(x) % p for x in coords)
            rows.append(blocks)
        U = kernel_mod_p(rows, p)
        if not U:
            return O, index_exp
        gens = [list(u) for u in U] + [[p * int(i == j) for j in range(n)] for i in range(n)]
        H2 = hnf_rows(gens, n)
        # new basis = H2 / p in old coordinates
        newB = [vecmat([Fraction(x, p) for x in h], O.B) for h in H2]
        index_exp += n - rank_of_pO(H2, p, n)
        O = Order(T, newB)


def rank_of_pO(H2, p, n):
    # [O' : O] = p^n / det(H2); det(H2) = product of diagonal entries
    det = 1
    for i, h in enumerate(H2):
        det *= h[i]
    k = 0
    while det % p == 0:
        det //= p
        k += 1
    return k


def decompose(T, p):
    """Returns (sorted list of (e, f), v_p(index of Z[theta]))."""
    O, index_exp = p_maximal(T, p)
    n = O.n
    unit = [[int(i == j) for j in range(n)] for i in range(n)]
    frob = [O.power(e, p, p) for e in unit]
    fixed = kernel_mod_p([[(frob[i][j] - unit[i][j]) % p for j in range(n)] for i in range(n)], p)
    idems = [O.one]
    for s in fixed:
        nxt = []
        for eps in idems:
            se = O.mul(s, eps, p)
            for lam in range(p):
                v = list(eps)
                for mu in range(p):
                    if mu == lam:
                        continue
                    diff = [(x - mu * y) % p for x, y in zip(se, eps)]
                    v = O.mul(v, diff, p)
                    inv = pow((lam - mu) % p, -1, p)
                    v = [(x * inv) % p for x in v]
                if any(v):
                    nxt.append(v)
        idems = nxt
    rad = O.radical(p)
    out = []
    for eps in idems:
        eA = [O.mul(eps, e, p) for e in unit]
        eJ = [O.mul(eps, r, p) for r in rad]
        ef = rank_mod_p(eA, p)
        e_part = rank_mod_p(eJ, p) if eJ else 0
        f = ef - e_part
        assert f > 0 and ef % f == 0
        out.append((ef // f, f))
    assert sum(e * f for e, f in out) == n
    return sorted(out), index_exp
