"""Root-system data for the three families of difference-operator cases.

Case "a": R reduced with long roots of squared length 2, difference
operators act on the weight lattice P(R), translations run over P(R_vee).
Case "b": the dual convention, both lattices P(R_vee), affine roots are
the coroots of the affine roots of case a.
Case "c": the nonreduced (Koornwinder) family on Z^n built from C_n with
long roots of squared length 4 and both lattices Q(R_vee) = Z^n.

All vectors are tuples of Fractions in the simple-root basis; the bilinear
form is given by the rational Gram matrix of the simple roots.
"""

from fractions import Fraction
from functools import lru_cache

__all__ = [
    "RootDatum",
    "AffineWeyl",
    "build_root_datum",
    "vec_add",
    "vec_sub",
    "vec_neg",
    "vec_scale",
]


# ---------------------------------------------------------------------------
# small exact linear algebra over Q

def vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vec_neg(x):
    return tuple(-a for a in x)


def vec_scale(c, x):
    c = Fraction(c)
    return tuple(c * a for a in x)


def mat_vec(M, v):
    return tuple(sum(r[k] * v[k] for k in range(len(v))) for r in M)


def mat_mul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n))
                       for j in range(n)) for i in range(n))


def mat_identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n))
                 for i in range(n))


def mat_solve(M, rhs_cols):
    """Solve M X = RHS by Gaussian elimination; RHS given as list of columns."""
    n = len(M)
    aug = [[Fraction(M[i][j]) for j in range(n)] +
           [Fraction(col[i]) for col in rhs_cols] for i in range(n)]
    w = n + len(rhs_cols)
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [tuple(aug[i][n + j] for i in range(n))
            for j in range(len(rhs_cols))]


def mat_inv(M):
    n = len(M)
    cols = mat_solve(M, [tuple(Fraction(int(i == j)) for i in range(n))
                         for j in range(n)])
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def mat_det(M):
    n = len(M)
    a = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def _cartan_and_lengths(ctype, n, case):
    """Cartan matrix A[i][j] = <alpha_j, alpha_i_vee> and |alpha_i|^2."""
    A = [[2 * int(i == j) for j in range(n)] for i in range(n)]
    if ctype == "a":
        for i in range(n - 1):
            A[i][i + 1] = A[i + 1][i] = -1
        lengths = [Fraction(2)] * n
    elif ctype == "b":
        if n < 2:
            raise ValueError("type b needs rank >= 2")
        for i in range(n - 1):
            A[i][i + 1] = A[i + 1][i] = -1
        A[n - 1][n - 2] = -2
        lengths = [Fraction(2)] * (n - 1) + [Fraction(1)]
    elif ctype == "c":
        for i in range(n - 1):
            A[i][i + 1] = A[i + 1][i] = -1
        if n >= 2:
            A[n - 2][n - 1] = -2
        if case == "c":
            lengths = [Fraction(2)] * (n - 1) + [Fraction(4)]
        else:
            lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
    elif ctype == "g":
        if n != 2:
            raise ValueError("type g has rank 2")
        A[0][1] = -3
        A[1][0] = -1
        lengths = [Fraction(2, 3), Fraction(2)]
    else:
        raise ValueError(f"unsupported type {ctype!r}")
    return tuple(tuple(row) for row in A), tuple(lengths)


class RootDatum:
    """One case of the theory: root system, lattices, affine root data."""

    def __init__(self, case, ctype, n):
        if case not in ("a", "b", "c"):
            raise ValueError(f"case must be a, b or c, got {case!r}")
        if case == "c" and ctype != "c":
            raise ValueError("case c is built on type c root systems")
        self.case = case
        self.ctype = ctype
        self.n = n
        self.cartan, self.lengths = _cartan_and_lengths(ctype, n, case)
        # Gram matrix of the simple roots
        self.gram = tuple(tuple(Fraction(self.cartan[i][j])
                                * self.lengths[i] / 2 for j in range(n))
                          for i in range(n))
        for i in range(n):
            for j in range(n):
                assert self.gram[i][j] == self.gram[j][i]
        self.zero = (Fraction(0),) * n
        self.simple_roots = tuple(
            tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
        self._build_weyl()
        self._build_roots()
        self._build_lattices()
        self._build_affine()
        self._omega = None

    # -- bilinear form -----------------------------------------------------

    def pair(self, x, y):
        G = self.gram
        n = self.n
        return sum(x[i] * sum(G[i][j] * y[j] for j in range(n))
                   for i in range(n))

    def norm2(self, x):
        return self.pair(x, x)

    def coroot(self, x):
        return vec_scale(Fraction(2) / self.norm2(x), x)

    # -- finite Weyl group -------------------------------------------------

    def _build_weyl(self):
        n = self.n
        gens = []
        for i in range(n):
            M = [[Fraction(int(r == k)) for k in range(n)] for r in range(n)]
            for k in range(n):
                M[i][k] -= self.cartan[i][k]
            gens.append(tuple(tuple(row) for row in M))
        self.simple_refl = tuple(gens)
        ident = mat_identity(n)
        elems = {ident: 0}
        order = [ident]
        words = {ident: ()}
        frontier = [ident]
        while frontier:
            nxt = []
            for M in frontier:
                for i, g in enumerate(gens):
                    P = mat_mul(g, M)
                    if P not in elems:
                        elems[P] = len(order)
                        order.append(P)
                        words[P] = (i,) + words[M]
                        nxt.append(P)
            frontier = nxt
        self.weyl = tuple(order)
        self.weyl_index = elems
        self.weyl_words = words
        self._inv_cache = {}
        self.identity_mat = ident

    def w_inv(self, M):
        r = self._inv_cache.get(M)
        if r is None:
            r = mat_inv(M)
            self._inv_cache[M] = r
        return r

    def w_length(self, M):
        return len(self.weyl_words[M])

    # -- roots -------------------------------------------------------------

    def _build_roots(self):
        roots = set(self.simple_roots)
        frontier = list(roots)
        while frontier:
            nxt = []
            for v in frontier:
                for g in self.simple_refl:
                    w = mat_vec(g, v)
                    if w not in roots:
                        roots.add(w)
                        nxt.append(w)
            frontier = nxt
        self.roots = tuple(sorted(roots))
        pos = [r for r in self.roots if self._root_sign(r) > 0]
        self.pos_roots = tuple(pos)
        self.pos_root_set = set(pos)
        self.neg_root_set = {vec_neg(r) for r in pos}
        self.phi = max(pos, key=lambda r: sum(r))
        self.marks = self.phi
        self.phi_vee = self.coroot(self.phi)
        # longest element: the one of maximal word length
        self.w0 = max(self.weyl, key=lambda M: len(self.weyl_words[M]))

    @staticmethod
    def _root_sign(r):
        for x in r:
            if x != 0:
                return 1 if x > 0 else -1
        return 0

    def w0_length_check(self):
        return len(self.weyl_words[self.w0]) == len(self.pos_roots)

    # -- lattices ----------------------------------------------------------

    def _build_lattices(self):
        n = self.n
        ident_cols = [tuple(Fraction(int(i == j)) for i in range(n))
                      for j in range(n)]
        # fundamental coweights pi'_j: <alpha_i, pi'_j> = delta_ij
        self.fund_coweights = tuple(mat_solve(self.gram, ident_cols))
        # fundamental weights omega_j: <omega_j, alpha_i_vee> = delta_ij
        self.fund_weights = tuple(mat_solve(self.cartan, ident_cols))
        self.coroots_basis = tuple(self.coroot(a) for a in self.simple_roots)
        if self.case == "a":
            self.L_basis = self.fund_weights
            self.Lp_basis = self.fund_coweights
        elif self.case == "b":
            self.L_basis = self.fund_coweights
            self.Lp_basis = self.fund_coweights
        else:
            self.L_basis = self.coroots_basis
            self.Lp_basis = self.coroots_basis
        self._L_mat = tuple(tuple(self.L_basis[j][i] for j in range(n))
                            for i in range(n))
        self._Lp_mat = tuple(tuple(self.Lp_basis[j][i] for j in range(n))
                             for i in range(n))
        self._L_inv = mat_inv(self._L_mat)
        self._Lp_inv = mat_inv(self._Lp_mat)

    def L_coords(self, v):
        return mat_vec(self._L_inv, v)

    def from_L_coords(self, coords):
        return mat_vec(self._L_mat, tuple(Fraction(c) for c in coords))

    def Lp_coords(self, v):
        return mat_vec(self._Lp_inv, v)

    def from_Lp_coords(self, coords):
        return mat_vec(self._Lp_mat, tuple(Fraction(c) for c in coords))

    def in_L(self, v):
        return all(c.denominator == 1 for c in self.L_coords(v))

    def in_Lp(self, v):
        return all(c.denominator == 1 for c in self.Lp_coords(v))

    # -- affine root system S1 (the indivisible roots) ---------------------

    def _build_affine(self):
        n = self.n
        if self.case == "a":
            self.delta = self.simple_roots
            self.a0 = (vec_neg(self.phi), Fraction(1))
            self.r1_vee = self.roots
        elif self.case == "b":
            self.delta = self.coroots_basis
            self.a0 = (vec_neg(self.phi_vee), Fraction(1))
            self.r1_vee = tuple(sorted({self.coroot(r) for r in self.roots}))
        else:
            self.delta = self.coroots_basis
            self.a0 = (vec_neg(self.phi_vee), Fraction(1, 2))
            self.r1_vee = tuple(sorted({self.coroot(r) for r in self.roots}))
        self.affine_simples = ((self.a0,) +
                               tuple((d, Fraction(0)) for d in self.delta))
        self.r1_vee_pos = tuple(r for r in self.r1_vee
                                if self._root_sign(r) > 0)
        self._r1_pos_set = set(self.r1_vee_pos)
        self._r1_set = set(self.r1_vee)
        # cone-expansion direction: <delta_i, rho_hat> = 1 for all i
        B = tuple(tuple(self.pair(self.delta[i], self.simple_roots[j])
                        for j in range(n)) for i in range(n))
        self.rho_hat = mat_solve(B, [tuple(Fraction(1) for _ in range(n))])[0]
        Dm = tuple(tuple(self.delta[j][i] for j in range(n))
                   for i in range(n))
        self._delta_inv = mat_inv(Dm)

    def const_step(self, x):
        """Spacing of the constants of affine roots in S1 with gradient x."""
        if self.case == "a":
            return Fraction(1)
        return self.norm2(x) / 2

    def aff_is_positive(self, a):
        x, r = a
        if r > 0:
            return True
        if r < 0:
            return False
        return x in self._r1_pos_set

    def aff_in_s1(self, a):
        x, r = a
        if x not in self._r1_set:
            return False
        return (Fraction(r) / self.const_step(x)).denominator == 1

    def height(self, v):
        return self.pair(v, self.rho_hat)

    def delta_coords(self, v):
        return mat_vec(self._delta_inv, v)

    def in_pos_cone(self, v, allow_zero=True):
        cs = self.delta_coords(v)
        if not all(c.denominator == 1 and c >= 0 for c in cs):
            return False
        return allow_zero or any(cs)

    def from_delta_coords(self, coords):
        v = self.zero
        for c, d in zip(coords, self.delta):
            v = vec_add(v, vec_scale(c, d))
        return v

    # -- orbits of affine roots (for multiplicity labels) -------------------

    def orbit_key(self, a):
        """W-orbit label of an affine root of S (or S1)."""
        x, r = a
        l2 = self.norm2(x)
        if self.case != "c":
            return f"len{l2}"
        if l2 == 2:
            return "O5"
        if l2 == 1:
            return "O1" if r.denominator == 1 else "O3"
        if l2 == 4:
            return "O2" if r % 2 == 0 else "O4"
        raise ValueError(f"not an affine root gradient: {x}")

    def s1_orbit_keys(self):
        """Orbit labels of S1 in a fixed order (used for variable naming)."""
        if self.case == "c":
            return [k for k in ("O1", "O3", "O5")
                    if k != "O5" or self.n >= 2]
        seen = []
        for i in range(self.n + 1):
            k = self.orbit_key(self.affine_simples[i])
            if k not in seen:
                seen.append(k)
        return seen

    # -- dominance ----------------------------------------------------------

    def dominant(self, v):
        return all(self.pair(v, a) >= 0 for a in self.simple_roots)

    def dominance_leq(self, mu, lam):
        """mu <= lam in the dominance order given by the cone over delta."""
        d = self.delta_coords(vec_sub(lam, mu))
        return all(c.denominator == 1 and c >= 0 for c in d)

    def dominant_in_orbit(self, v):
        cur = v
        while True:
            for a in self.simple_roots:
                if self.pair(cur, a) < 0:
                    cur = self.reflect(a, cur)
                    break
            else:
                return cur

    def reflect(self, root, v):
        return vec_sub(v, vec_scale(self.pair(self.coroot(root), v), root))

    def weyl_orbit(self, v):
        """Orbit of v with minimal-length representatives.

        Returns a list of (point, matrix) pairs; the matrix w of minimal
        length with w(v) = point.
        """
        start = v
        out = {start: self.identity_mat}
        frontier = [start]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.simple_refl:
                    q = mat_vec(g, p)
                    if q not in out:
                        out[q] = mat_mul(g, out[p])
                        nxt.append(q)
            frontier = nxt
        return list(out.items())

    def saturated_dominant_set(self, lam):
        """All dominant mu with mu <= lam, ordered by decreasing height."""
        if not self.dominant(lam):
            raise ValueError("weight must be dominant")
        hmax = self.height(lam)
        found = [lam]
        frontier = {lam}
        # walk down the cone layer by layer
        level = [self.zero]
        h = 0
        while level and h <= hmax:
            nxt = set()
            for x in level:
                for d in self.delta:
                    nxt.add(vec_add(x, d))
            level = [x for x in nxt if self.height(x) <= hmax]
            for x in level:
                mu = vec_sub(lam, x)
                if self.dominant(mu) and mu not in frontier:
                    frontier.add(mu)
                    found.append(mu)
            h += 1
        found.sort(key=lambda m: (-self.height(m), m))
        return found

    # -- special translation elements ---------------------------------------

    def minuscule_indices(self):
        """Indices j with mark 1 and fundamental coweight in L'."""
        out = []
        for j in range(self.n):
            if self.marks[j] == 1 and self.in_Lp(self.fund_coweights[j]):
                out.append(j)
        return out

    def minuscule_coweight(self, j):
        """Antidominant minuscule coweight w0(pi'_j)."""
        return mat_vec(self.w0, self.fund_coweights[j])

    def quasi_minuscule_coweight(self):
        """The antidominant quasi-minuscule coweight -phi_vee."""
        return vec_neg(self.phi_vee)

    # -- length-zero subgroup ------------------------------------------------

    def omega_group(self):
        if self._omega is not None:
            return self._omega
        n = self.n
        coords = [range(-2, 3)] * n
        cands = [()]
        for rng in coords:
            cands = [c + (k,) for c in cands for k in rng]
        lats = {self.from_Lp_coords(c) for c in cands}
        out = []
        for M in self.weyl:
            for lam in lats:
                if not self.in_Lp(lam):
                    continue
                u = AffineWeyl(self, M, lam)
                if u.length() == 0:
                    out.append(u)
        # index of the coroot lattice in L' equals the group order
        Qv = tuple(tuple(self.coroots_basis[j][i] for j in range(n))
                   for i in range(n))
        idx = abs(mat_det(mat_mul(self._Lp_inv, Qv)))
        assert idx.denominator == 1 and len(out) == idx, \
            f"length-zero subgroup has {len(out)} elements, expected {idx}"
        self._omega = out
        return out


class AffineWeyl:
    """Element w . t(lam') of the extended affine Weyl group."""

    __slots__ = ("datum", "mat", "trans")

    def __init__(self, datum, mat, trans):
        self.datum = datum
        self.mat = mat
        self.trans = trans

    @classmethod
    def identity(cls, datum):
        return cls(datum, datum.identity_mat, datum.zero)

    @classmethod
    def translation(cls, datum, lam):
        return cls(datum, datum.identity_mat, lam)

    @classmethod
    def simple_reflection(cls, datum, i):
        if i == 0:
            x, r = datum.a0
            return cls(datum, _reflection_matrix(datum, x),
                       vec_scale(r, datum.coroot(x)))
        return cls(datum, datum.simple_refl[i - 1], datum.zero)

    def key(self):
        return (self.mat, self.trans)

    def __eq__(self, other):
        return (isinstance(other, AffineWeyl) and self.mat == other.mat
                and self.trans == other.trans)

    def __hash__(self):
        return hash((self.mat, self.trans))

    def __mul__(self, other):
        # (w1 t(l1)) (w2 t(l2)) = w1 w2 t(w2^-1 l1 + l2)
        M2i = self.datum.w_inv(other.mat)
        return AffineWeyl(self.datum, mat_mul(self.mat, other.mat),
                          vec_add(mat_vec(M2i, self.trans), other.trans))

    def inv(self):
        Mi = self.datum.w_inv(self.mat)
        return AffineWeyl(self.datum, Mi,
                          vec_neg(mat_vec(self.mat, self.trans)))

    def act_vec(self, v):
        return mat_vec(self.mat, vec_add(v, self.trans))

    def act_aff(self, a):
        x, r = a
        return (mat_vec(self.mat, x), r - self.datum.pair(x, self.trans))

    def is_identity(self):
        return (self.mat == self.datum.identity_mat
                and self.trans == self.datum.zero)

    def _neg_count_for_gradient(self, x):
        """Affine roots in S1+ with gradient x sent to S1- by this element."""
        d = self.datum
        s = d.const_step(x)
        r_start = Fraction(0) if x in d._r1_pos_set else s
        p = d.pair(x, self.trans)
        q = (p - r_start) / s
        cnt = 0
        if q > 0:
            cnt += -(-q.numerator // q.denominator)  # ceil
        Mx = mat_vec(self.mat, x)
        if Mx not in d._r1_pos_set and q >= 0 and q.denominator == 1:
            cnt += 1
        return cnt

    def length(self):
        return sum(self._neg_count_for_gradient(x)
                   for x in self.datum.r1_vee)

    def inversion_set(self):
        """S1(w) = S1+ intersect w^-1(S1-), as explicit affine roots."""
        d = self.datum
        out = []
        for x in d.r1_vee:
            s = d.const_step(x)
            r_start = Fraction(0) if x in d._r1_pos_set else s
            p = d.pair(x, self.trans)
            Mx = mat_vec(self.mat, x)
            r = r_start
            while r < p:
                out.append((x, r))
                r += s
            if (p >= r_start and ((p - r_start) / s).denominator == 1
                    and Mx not in d._r1_pos_set):
                out.append((x, p))
        return out

    def reduced_word(self):
        """Decompose as omega . s_{i1} ... s_{il}; returns (omega, [i1..il])."""
        d = self.datum
        cur = self
        rev = []
        while True:
            for i in range(d.n + 1):
                a = d.affine_simples[i]
                img = cur.act_aff(a)
                if not d.aff_is_positive(img):
                    rev.append(i)
                    cur = cur * AffineWeyl.simple_reflection(d, i)
                    break
            else:
                break
        assert cur.length() == 0
        return cur, rev[::-1]


def _reflection_matrix(datum, root):
    n = datum.n
    cols = []
    for j in range(n):
        e = tuple(Fraction(int(i == j)) for i in range(n))
        cols.append(datum.reflect(root, e))
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def build_root_datum(case, ctype, rank):
    """Construct the root datum for one of the supported cases.

    case "c" takes ctype "c"; rank is the rank of the finite root system.
    """
    return RootDatum(case, ctype, rank)
