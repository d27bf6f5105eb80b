"""Exact matrix realizations of the simple Lie algebras of types A, B, C.

sl(n+1) is realized as traceless matrices; so(2n+1) and sp(2n) preserve
anti-diagonal bilinear forms, chosen so that the standard Borel subalgebra
consists of the upper-triangular members and the Cartan subalgebra of the
diagonal ones.  The basis is root-graded and ordered (Cartan part, positive
root vectors in the root system's order, negative root vectors).

Fundamental invariants are characteristic-polynomial coefficients, so every
evaluation is exact; their two-variable polarizations are computed by exact
interpolation at integer parameters and re-checked at a held-out point.
The bilinear form is the trace form of the defining representation, which
is proportional to the Killing form (sl(n+1): factor 2(n+1); so(2n+1):
2n-1; sp(2n): 2n+2) -- nothing here depends on the normalization.

Type D is not realized (its last fundamental invariant is a Pfaffian, not a
characteristic-polynomial coefficient); root-level coverage of type D lives
in :mod:`nullcone.roots` and :mod:`nullcone.shifts`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import linalg as la
from .roots import RootSystem, build_root_system

_SUPPORTED = {"A": range(1, 9), "B": range(2, 5), "C": range(3, 5)}


def _basis_cell(n: int, i: int, j: int, value=1):
    return tuple(
        tuple(value if (a, b) == (i, j) else 0 for b in range(n)) for a in range(n)
    )


def _intify(m):
    """Replace integral Fraction entries by plain ints (fast-path friendly)."""
    return tuple(
        tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in row)
        for row in m
    )


@lru_cache(maxsize=None)
def _inv_vandermonde(npoints: int):
    v = [[Fraction(t) ** k for k in range(npoints)] for t in range(npoints)]
    return la.inverse(v)


def interpolate_coeffs(values):
    """Coefficients of the polynomial with the given values at 0, 1, 2, ...."""
    inv = _inv_vandermonde(len(values))
    out = la.mat_vec(inv, [Fraction(v) for v in values])
    return tuple(int(c) if c.denominator == 1 else c for c in out)


def nilpotent_exp(m):
    """exp of a nilpotent matrix, exact."""
    n = len(m)
    out = la.identity(n)
    term = la.identity(n)
    k = 0
    while True:
        k += 1
        term = la.scale(Fraction(1, k), la.mul(term, m))
        if la.is_zero(term):
            return out
        out = la.add(out, term)
        if k > n:
            raise ValueError("matrix is not nilpotent")


class GroupElement:
    """An invertible matrix with a cached exact inverse."""

    __slots__ = ("mat", "inv")

    def __init__(self, mat, inv=None):
        self.mat = la.mat(mat)
        self.inv = la.inverse(mat) if inv is None else la.mat(inv)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(la.mul(self.mat, other.mat), la.mul(other.inv, self.inv))

    def conjugate(self, x):
        return la.mul(la.mul(self.mat, x), self.inv)


class MatrixLieAlgebra:
    """One exact matrix realization, with invariants and polarizations."""

    def __init__(self, family: str, rank: int):
        if family not in _SUPPORTED or rank not in _SUPPORTED[family]:
            raise ValueError(
                f"no matrix realization for {family}{rank}: supported are "
                "A1-A8, B2-B4, C3-C4"
            )
        self.rs: RootSystem = build_root_system(family, rank)
        self.family = family
        self.rank = rank
        self.size = {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank}[family]
        if family == "A":
            self.degrees = tuple(range(2, rank + 2))
        else:
            self.degrees = tuple(2 * i for i in range(1, rank + 1))
        self._build_basis()
        self.dim = len(self.basis)
        assert self.dim == self.rank + 2 * self.rs.num_positive
        assert sum(self.degrees) == self.borel_dim
        self._gram = None

    # -- construction -------------------------------------------------------

    def _build_basis(self):
        fam, n, N = self.family, self.rank, self.size
        self.h_basis = []
        pos, neg = {}, {}
        if fam == "A":
            for k in range(n):
                self.h_basis.append(
                    la.add(_basis_cell(N, k, k), _basis_cell(N, k + 1, k + 1, -1))
                )
            for root in self.rs.positive_roots:
                support = [k for k, c in enumerate(root) if c]
                lo, hi = support[0], support[-1]
                pos[root] = _basis_cell(N, lo, hi + 1)
                neg[root] = _basis_cell(N, hi + 1, lo)
        else:
            for k in range(n):
                self.h_basis.append(
                    la.add(_basis_cell(N, k, k), _basis_cell(N, N - 1 - k, N - 1 - k, -1))
                )
            for (i, j), vec in self._form_graded_cells().items():
                root = self._cell_root(i, j)
                vec = _intify(vec)
                (pos if i < j else neg)[root if i < j else tuple(-c for c in root)] = vec
            assert set(pos) == set(self.rs.positive_roots)
        self.pos_vectors = pos
        self.neg_vectors = neg
        self.basis = (
            list(self.h_basis)
            + [pos[r] for r in self.rs.positive_roots]
            + [neg[r] for r in self.rs.positive_roots]
        )
        for x in self.basis:
            assert self._in_form_algebra(x)

    def _form_matrix(self):
        n, N = self.rank, self.size
        j = [[0] * N for _ in range(N)]
        for i in range(N):
            if self.family == "B":
                j[i][N - 1 - i] = 1
            else:
                j[i][N - 1 - i] = 1 if i < n else -1
        return la.mat(j)

    def _in_form_algebra(self, x) -> bool:
        if self.family == "A":
            return la.trace(x) == 0
        j = self._form_matrix()
        return la.is_zero(la.add(la.mul(la.transpose(x), j), la.mul(j, x)))

    def _form_graded_cells(self) -> dict:
        """One basis vector per mirror pair of off-diagonal cells."""
        N = self.size
        j = self._form_matrix()
        out = {}
        for i in range(N):
            for k in range(N):
                if i == k:
                    continue
                mi, mk = N - 1 - k, N - 1 - i
                if (mi, mk) < (i, k):
                    continue  # mirror cell already handled
                candidates = []
                cells = [(i, k)] if (mi, mk) == (i, k) else [(i, k), (mi, mk)]
                rows = []
                for a in range(N):
                    for b in range(N):
                        row = []
                        for (ci, ck) in cells:
                            e = _basis_cell(N, ci, ck)
                            val = la.add(la.mul(la.transpose(e), j), la.mul(j, e))[a][b]
                            row.append(val)
                        rows.append(row)
                kern = la.nullspace(rows)
                if not kern:
                    continue
                assert len(kern) == 1
                coeffs = kern[0]
                scale = 1 / coeffs[0] if coeffs[0] != 0 else 1 / coeffs[-1]
                vec = la.zeros(N, N)
                for (ci, ck), c in zip(cells, coeffs):
                    vec = la.add(vec, _basis_cell(N, ci, ck, c * scale))
                out[(i, k)] = vec
        return out

    def _cell_root(self, i: int, k: int) -> tuple:
        """Simple-root coordinates of the cell (i, k)'s weight."""
        n, N = self.rank, self.size

        def d(pos, idx):  # e_idx coordinate of the diagonal unit at pos
            if pos == idx:
                return 1
            if pos == N - 1 - idx:
                return -1
            return 0

        e_coords = [d(i, t) - d(k, t) for t in range(n)]
        # change of basis from e-coordinates to simple-root coordinates
        rows = []
        for t in range(n):
            row = [0] * n
            for s in range(n):  # beta_s in e-coordinates
                if self.family == "B":
                    vals = [1 if u == s else (-1 if u == s + 1 else 0) for u in range(n)]
                    if s == n - 1:
                        vals = [1 if u == n - 1 else 0 for u in range(n)]
                else:
                    vals = [1 if u == s else (-1 if u == s + 1 else 0) for u in range(n)]
                    if s == n - 1:
                        vals = [2 if u == n - 1 else 0 for u in range(n)]
                row[s] = vals[t]
            rows.append(row)
        sol = la.solve(rows, e_coords)
        coords = tuple(int(x) for x in sol)
        assert all(Fraction(c) == s for c, s in zip(coords, sol))
        return coords

    # -- membership and components ------------------------------------------

    @property
    def borel_dim(self) -> int:
        return self.rs.borel_dim

    def in_algebra(self, x) -> bool:
        return self._in_form_algebra(x)

    def in_borel(self, x) -> bool:
        return self.in_algebra(x) and all(
            x[a][b] == 0 for a in range(self.size) for b in range(a)
        )

    def in_nilradical(self, x) -> bool:
        return self.in_borel(x) and all(x[a][a] == 0 for a in range(self.size))

    def in_cartan(self, x) -> bool:
        return self.in_algebra(x) and all(
            x[a][b] == 0 for a in range(self.size) for b in range(self.size) if a != b
        )

    def h_component(self, x):
        """Diagonal (Cartan) part of any algebra element."""
        return tuple(
            tuple(x[a][b] if a == b else 0 for b in range(self.size))
            for a in range(self.size)
        )

    def decompose(self, x):
        """x = x_0 + x_+ for x in the Borel subalgebra."""
        if not self.in_borel(x):
            raise ValueError("element is not in the standard Borel subalgebra")
        x0 = self.h_component(x)
        return x0, la.sub(x, x0)

    def coordinates(self, x):
        """Coordinates of x in the root-graded basis."""
        cols = [la.flatten(b) for b in self.basis]
        sol = la.solve(la.transpose(cols), la.flatten(x))
        if sol is None:
            raise ValueError("element is not in the algebra span")
        return sol

    # -- element predicates ---------------------------------------------------

    def is_nilpotent(self, x) -> bool:
        return la.is_zero(la.mat_pow(x, self.size))

    def centralizer_dim(self, x) -> int:
        cols = [la.flatten(la.commutator(x, b)) for b in self.basis]
        return self.dim - la.rank(la.transpose(cols))

    def is_regular_element(self, x) -> bool:
        """Regular = centralizer of minimal dimension (the rank)."""
        return self.centralizer_dim(x) == self.rank

    def regular_nilpotent(self):
        """Sum of the simple positive root vectors."""
        out = la.zeros(self.size, self.size)
        for root in self.rs.positive_roots:
            if self.rs.is_simple(root):
                out = la.add(out, self.pos_vectors[root])
        return out

    def root_value(self, root, t):
        """beta(t) for t in the Cartan subalgebra, via e-coordinates."""
        e = self._root_e_coords(root)
        diag = [t[a][a] for a in range(len(e))]
        return sum(c * d for c, d in zip(e, diag))

    def _root_e_coords(self, root):
        n = self.rank
        if self.family == "A":
            # e_i - e_j truncated to the first n diagonal slots
            support = [k for k, c in enumerate(root) if c]
            lo, hi = support[0], support[-1] + 1
            return [
                (1 if t == lo else 0) - (1 if t == hi else 0) for t in range(self.size)
            ][: self.size]
        out = [0] * n
        for s, c in enumerate(root):
            if self.family == "B":
                vec = [1 if u == s else (-1 if u == s + 1 else 0) for u in range(n)]
                if s == n - 1:
                    vec = [1 if u == n - 1 else 0 for u in range(n)]
            else:
                vec = [1 if u == s else (-1 if u == s + 1 else 0) for u in range(n)]
                if s == n - 1:
                    vec = [2 if u == n - 1 else 0 for u in range(n)]
            out = [o + c * v for o, v in zip(out, vec)]
        return out

    @property
    def height_element(self):
        """The Cartan element on which every simple root takes the value 1."""
        n = self.rank
        rows = []
        rhs = []
        simple = [
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
        ]
        for root in simple:
            rows.append([self.root_value(root, h) for h in self.h_basis])
            rhs.append(1)
        sol = la.solve(rows, rhs)
        out = la.zeros(self.size, self.size)
        for c, h in zip(sol, self.h_basis):
            out = la.add(out, la.scale(c, h))
        return out

    # -- invariants -----------------------------------------------------------

    def eval_all_p(self, x):
        """All fundamental invariants of x at once (char-poly coefficients)."""
        coeffs = la.char_poly(x)
        return tuple(coeffs[d - 1] for d in self.degrees)

    def eval_p(self, i: int, x):
        if not 1 <= i <= self.rank:
            raise ValueError(f"invariant index {i} out of range")
        return self.eval_all_p(x)[i - 1]

    def polarize_all(self, x, y, verify: bool = True):
        """Polarization coefficient lists of every invariant at (x, y).

        Entry i-1 lists (p_i^(0)(x,y), ..., p_i^(d_i)(x,y)), computed by
        interpolating t -> p_i(x + t y) at t = 0..d_i and, when ``verify``,
        re-checked at the held-out point t = d_max + 1.
        """
        dmax = self.degrees[-1]
        values = []
        for t in range(dmax + 1):
            values.append(self.eval_all_p(la.add(x, la.scale(t, y))))
        out = []
        for idx, d in enumerate(self.degrees):
            coeffs = interpolate_coeffs([values[t][idx] for t in range(d + 1)])
            out.append(tuple(coeffs))
        if verify:
            t = dmax + 1
            held = self.eval_all_p(la.add(x, la.scale(t, y)))
            for idx, coeffs in enumerate(out):
                total = sum(c * Fraction(t) ** k for k, c in enumerate(coeffs))
                if total != held[idx]:
                    raise ArithmeticError("polarization interpolation failed self-check")
        return tuple(out)

    def polarize(self, i: int, x, y, verify: bool = True):
        return self.polarize_all(x, y, verify=verify)[i - 1]

    def sigma(self, x, y, verify: bool = False):
        """The full polarization vector, length borel_dim + rank."""
        out = []
        for coeffs in self.polarize_all(x, y, verify=verify):
            out.extend(coeffs)
        return tuple(out)

    # -- gradients -------------------------------------------------------------

    def _gram_matrix(self):
        if self._gram is None:
            self._gram = tuple(
                tuple(la.trace(la.mul(a, b)) for b in self.basis) for a in self.basis
            )
        return self._gram

    def trace_form(self, x, y):
        return la.trace(la.mul(x, y))

    def gradient_matrices(self, x):
        """Matrices G_i with d p_i(x)(v) = trace(G_i v), from one char-poly pass."""
        _, aux = la.faddeev(x)
        return tuple(la.scale(-1, aux[d - 1]) for d in self.degrees)

    def directional_derivatives(self, x, v):
        """d/dt p_i(x + t v) at t = 0, for every invariant i."""
        return tuple(la.trace(la.mul(g, v)) for g in self.gradient_matrices(x))

    def directional_derivatives_interpolated(self, x, v):
        """Same derivatives by polynomial interpolation; independent route."""
        dmax = self.degrees[-1]
        values = [self.eval_all_p(la.add(x, la.scale(t, v))) for t in range(dmax + 1)]
        out = []
        for idx, d in enumerate(self.degrees):
            coeffs = interpolate_coeffs([values[t][idx] for t in range(d + 1)])
            out.append(coeffs[1] if len(coeffs) > 1 else Fraction(0))
        return tuple(out)

    def epsilon_all(self, x):
        """Trace-form gradients of every invariant at x, as algebra elements."""
        grads = self.gradient_matrices(x)
        gram = self._gram_matrix()
        out = []
        for g in grads:
            rhs = [la.trace(la.mul(g, b)) for b in self.basis]
            sol = la.solve(gram, rhs)
            eps = la.zeros(self.size, self.size)
            for c, b in zip(sol, self.basis):
                eps = la.add(eps, la.scale(c, b))
            out.append(eps)
        return tuple(out)

    def epsilon(self, i: int, x):
        return self.epsilon_all(x)[i - 1]

    def epsilon_polarize(self, i: int, x, y):
        """The d_i polarizations of the gradient of p_i at (x, y)."""
        d = self.degrees[i - 1]
        mats = [self.epsilon_all(la.add(x, la.scale(t, y)))[i - 1] for t in range(d)]
        n = self.size
        out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(d)]
        for a in range(n):
            for b in range(n):
                coeffs = interpolate_coeffs([m[a][b] for m in mats])
                for k in range(d):
                    out[k][a][b] = coeffs[k]
        return [la.mat(m) for m in out]

    def pencil_regularity_witness(self, x, y):
        """Sampled check that the pencil of (x, y) avoids non-regular elements.

        Returns None when the pencil is two-dimensional and x, y, x + t y
        are regular for t = 1..2*d_max, otherwise the offending parameter
        ('dim', 'x', 'y', or t).  The regularity part samples a Zariski-open
        condition and is therefore necessary but not sufficient; see
        borel_span.
        """
        if la.rank([la.flatten(x), la.flatten(y)]) != 2:
            return "dim"
        if not self.is_regular_element(x):
            return "x"
        if not self.is_regular_element(y):
            return "y"
        for t in range(1, 2 * self.degrees[-1] + 1):
            if not self.is_regular_element(la.add(x, la.scale(t, y))):
                return t
        return None

    def borel_span(self, x, y):
        """Span of all gradient polarizations at (x, y); see SpanReport.

        Precondition (sampled): every element of the pencil of (x, y) is
        regular; violations are rejected with the witness parameter.  The
        sample is necessary but not sufficient -- non-regular pencil members
        can hide at parameters outside the rational sample (even at
        irrational ones, which matter because regularity is meant over an
        algebraically closed field).  Pairs built from a triangular element
        with regular semisimple diagonal plus a nilpotent with nonzero
        simple-root coefficients have everywhere-regular pencils over any
        extension and are the intended inputs.
        """
        witness = self.pencil_regularity_witness(x, y)
        if witness is not None:
            raise ValueError(f"pencil regularity failed at {witness!r}")
        mats = []
        for i in range(1, self.rank + 1):
            mats.extend(self.epsilon_polarize(i, x, y))
        vectors = [la.flatten(m) for m in mats]
        return SpanReport(
            vectors=tuple(mats),
            dim=la.rank(vectors),
            in_borel=all(self.in_borel(m) for m in mats),
        )

    # -- group elements ----------------------------------------------------------

    def simple_reflection_rep(self, i: int) -> GroupElement:
        """Monomial representative of s_{beta_i} from its sl2 triple."""
        root = tuple(1 if j == i - 1 else 0 for j in range(self.rank))
        e = self.pos_vectors[root]
        f_raw = self.neg_vectors[root]
        h = la.commutator(e, f_raw)
        c = self.root_value(root, h)
        f = la.scale(Fraction(2, 1) / c, f_raw)
        ge = nilpotent_exp(e)
        gf = nilpotent_exp(la.scale(-1, f))
        m = la.mul(la.mul(ge, gf), ge)
        return GroupElement(m)

    def weyl_rep(self, word) -> GroupElement:
        out = GroupElement(la.identity(self.size))
        for i in word:
            out = out * self.simple_reflection_rep(i)
        return out

    def unipotent(self, coeffs: dict) -> GroupElement:
        """Product of exp(c * e_root) over the given positive roots."""
        out = GroupElement(la.identity(self.size))
        for root, c in coeffs.items():
            m = nilpotent_exp(la.scale(c, self.pos_vectors[tuple(root)]))
            out = out * GroupElement(m, nilpotent_exp(la.scale(-c, self.pos_vectors[tuple(root)])))
        return out

    def torus(self, params) -> GroupElement:
        """Diagonal group element from rank nonzero rational parameters."""
        n, N = self.rank, self.size
        diag = [Fraction(0)] * N
        for k in range(n):
            p = Fraction(params[k])
            if p == 0:
                raise ValueError("torus parameters must be nonzero")
            diag[k] = p
            diag[N - 1 - k] = 1 / p
        if self.family == "A":
            diag = [Fraction(params[k]) for k in range(n)] + [Fraction(1)]
        if self.family == "B":
            diag[n] = Fraction(1)
        m = tuple(
            tuple(diag[a] if a == b else 0 for b in range(N)) for a in range(N)
        )
        return GroupElement(m)

    # -- seeded element constructors ----------------------------------------------

    def random_element(self, rng, bound: int = 2, where: str = "g"):
        """Integer-coefficient combination of basis vectors, seeded by rng."""
        if where == "g":
            basis = self.basis
        elif where == "b":
            basis = list(self.h_basis) + [
                self.pos_vectors[r] for r in self.rs.positive_roots
            ]
        elif where == "u":
            basis = [self.pos_vectors[r] for r in self.rs.positive_roots]
        elif where == "h":
            basis = list(self.h_basis)
        else:
            raise ValueError(f"unknown subspace {where!r}")
        out = la.zeros(self.size, self.size)
        for b in basis:
            out = la.add(out, la.scale(rng.randint(-bound, bound), b))
        return out


class SpanReport:
    """Result of a gradient-span computation."""

    __slots__ = ("vectors", "dim", "in_borel")

    def __init__(self, vectors, dim, in_borel):
        self.vectors = vectors
        self.dim = dim
        self.in_borel = in_borel


@lru_cache(maxsize=None)
def build_algebra(family: str, rank: int) -> MatrixLieAlgebra:
    """Construct (and cache) the matrix realization of the given type."""
    return MatrixLieAlgebra(family, rank)
