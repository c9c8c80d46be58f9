"""Positive-definite quadratic forms in one to four variables.

An integral form is stored by its integer polynomial coefficients s_ij in a
fixed order: the diagonal s_11..s_nn first, then the off-diagonal s_ij
(i < j) lexicographically.  So a ternary form reads
(s11, s22, s33, s12, s13, s23) and f(x) = sum s_ii x_i^2 + sum s_ij x_i x_j.
The Gram matrix has G_ii = s_ii and G_ij = s_ij / 2, hence f(x) = x G x^T
with x a row vector; substituting x -> x w replaces G by w G w^T.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .ratmat import as_fraction_matrix, det_exact, mat_mul, transpose

_COEFF_COUNT = {1: 1, 3: 2, 6: 3, 10: 4}


def coefficient_pairs(n):
    """Index pairs (i, j), 1-based, in coefficient storage order."""
    diag = [(i, i) for i in range(1, n + 1)]
    off = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(diag + off)


class _PickleBySlots:
    """Pickle support for slotted immutable classes: state is the slot tuple,
    restored with object.__setattr__ so the immutability guard stays intact."""

    __slots__ = ()

    def __getstate__(self):
        return tuple(getattr(self, name) for name in self.__slots__)

    def __setstate__(self, state):
        for name, value in zip(self.__slots__, state):
            object.__setattr__(self, name, value)


class IntForm(_PickleBySlots):
    """An integral quadratic form in n variables (1 <= n <= 4)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) not in _COEFF_COUNT:
            raise ValueError(f"coefficient count {len(coeffs)} is not n(n+1)/2 for n <= 4")
        if not all(isinstance(c, int) for c in coeffs):
            raise ValueError("integral form needs integer coefficients")
        object.__setattr__(self, "n", _COEFF_COUNT[len(coeffs)])
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("IntForm is immutable")

    def coeff(self, i, j):
        """Polynomial coefficient s_ij (1-based, i <= j after swapping)."""
        if i > j:
            i, j = j, i
        if i == j:
            return self.coeffs[i - 1]
        pos = self.n
        for a in range(1, self.n + 1):
            for b in range(a + 1, self.n + 1):
                if (a, b) == (i, j):
                    return self.coeffs[pos]
                pos += 1
        raise IndexError((i, j))

    def __eq__(self, other):
        return isinstance(other, IntForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntForm", self.coeffs))

    def __repr__(self):
        return f"IntForm({list(self.coeffs)!r})"

    def __str__(self):
        return format_form(self)


class RatForm(_PickleBySlots):
    """A quadratic form with rational Gram matrix (n <= 4, possibly indefinite)."""

    __slots__ = ("n", "gram")

    def __init__(self, gram):
        gram = as_fraction_matrix(gram)
        n = len(gram)
        if not 1 <= n <= 4 or any(len(row) != n for row in gram):
            raise ValueError("gram matrix must be square, size 1..4")
        for i in range(n):
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, name, value):
        raise AttributeError("RatForm is immutable")

    @classmethod
    def from_form(cls, f):
        if isinstance(f, RatForm):
            return f
        return cls(gram_matrix(f))

    def poly_coeff(self, i, j):
        """Polynomial coefficient: G_ii on the diagonal, 2*G_ij off it."""
        if i == j:
            return self.gram[i - 1][i - 1]
        return 2 * self.gram[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, RatForm) and self.gram == other.gram

    def __hash__(self):
        return hash(("RatForm", self.gram))

    def __repr__(self):
        return f"RatForm({[list(r) for r in self.gram]!r})"


def gram_matrix(f):
    """Gram matrix of a form, as Fractions."""
    if isinstance(f, RatForm):
        return f.gram
    n = f.n
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = Fraction(f.coeffs[i])
    pos = n
    for i in range(n):
        for j in range(i + 1, n):
            g[i][j] = g[j][i] = Fraction(f.coeffs[pos], 2)
            pos += 1
    return tuple(tuple(row) for row in g)


def double_gram(f):
    """2 * Gram matrix of an integral form: an integer matrix."""
    n = f.n
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2 * f.coeffs[i]
    pos = n
    for i in range(n):
        for j in range(i + 1, n):
            g[i][j] = g[j][i] = f.coeffs[pos]
            pos += 1
    return tuple(tuple(row) for row in g)


def evaluate(f, x):
    """Value f(x) of the form on an integer or rational vector."""
    if isinstance(f, IntForm):
        n = f.n
        if len(x) != n:
            raise ValueError("vector length mismatch")
        total = 0
        for i in range(n):
            total += f.coeffs[i] * x[i] * x[i]
        pos = n
        for i in range(n):
            for j in range(i + 1, n):
                total += f.coeffs[pos] * x[i] * x[j]
                pos += 1
        return total
    g = f.gram
    n = f.n
    if len(x) != n:
        raise ValueError("vector length mismatch")
    total = Fraction(0)
    for i in range(n):
        row = g[i]
        total += row[i] * x[i] * x[i]
        for j in range(i + 1, n):
            total += 2 * row[j] * x[i] * x[j]
    return total


def gram_determinant(f):
    """Determinant of the Gram matrix, as an exact Fraction."""
    return det_exact(gram_matrix(f))


def is_positive_definite(f):
    """True iff all leading principal minors of the Gram matrix are positive."""
    if isinstance(f, IntForm):
        # integer minors of the doubled Gram matrix carry the same signs
        d = double_gram(f)
        if d[0][0] <= 0:
            return False
        if f.n == 1:
            return True
        m2 = d[0][0] * d[1][1] - d[0][1] * d[0][1]
        if m2 <= 0:
            return False
        if f.n == 2:
            return True
        m3 = (
            d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[1][2])
            - d[0][1] * (d[0][1] * d[2][2] - d[1][2] * d[0][2])
            + d[0][2] * (d[0][1] * d[1][2] - d[1][1] * d[0][2])
        )
        if m3 <= 0:
            return False
        if f.n == 3:
            return True
        total = 0
        for j in range(4):
            rows = [[d[i][k] for k in range(4) if k != j] for i in (1, 2, 3)]
            sub = (
                rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
                - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
                + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
            )
            total += (-1) ** j * d[0][j] * sub
        return total > 0
    g = gram_matrix(f)
    for k in range(1, f.n + 1):
        minor = tuple(row[:k] for row in g[:k])
        if det_exact(minor) <= 0:
            return False
    return True


def _sign_patterns(j):
    """Vectors v with v_j = 1, v_i in {-1,0,1} below j, zeros above (1-based j)."""
    if j == 1:
        return [(1,)]
    out = []
    base = [(-1, 0, 1)] * (j - 1)

    def rec(prefix, k):
        if k == j - 1:
            out.append(tuple(prefix) + (1,))
            return
        for s in base[k]:
            rec(prefix + [s], k + 1)

    rec([], 0)
    return out


def _diag_minimal(f):
    """Diagonal ordering plus the finite battery of minimality inequalities.

    For each j the value on every vector v with v_j = 1, entries in
    {-1,0,1} below j and zeros above must be at least s_jj; for n <= 4
    this finite check characterizes diagonals realizing successive minima.
    """
    n = f.n
    d = f.coeffs[:n]
    if d[0] <= 0:
        return False
    for i in range(n - 1):
        if d[i] > d[i + 1]:
            return False
    for j in range(2, n + 1):
        for v in _sign_patterns(j):
            vec = v + (0,) * (n - j)
            if evaluate(f, vec) < d[j - 1]:
                return False
    return True


def is_minkowski_reduced(f):
    """Reduced in the classical sense: minimal diagonal + nonpositive
    coefficients s_{i,i+1} on the first off-diagonal."""
    if not _diag_minimal(f):
        return False
    for i in range(1, f.n):
        if f.coeff(i, i + 1) > 0:
            return False
    return True


def is_eisenstein_reduced(f):
    """Ternary reduction with sign-class and boundary tie-break rules.

    On top of the minimal-diagonal inequalities: the off-diagonal
    coefficients are either all positive or all nonpositive, ties between
    equal diagonal entries order the off-diagonals, and boundary cases
    (a diagonal entry equal to the matching off-diagonal magnitude, or
    s11+s22 equal to |s12+s13+s23|) carry extra inequalities.
    """
    if f.n != 3:
        raise ValueError("sign-class reduction is defined for ternary forms")
    if not _diag_minimal(f):
        return False
    s11, s22, s33, s12, s13, s23 = f.coeffs
    off = {(1, 2): s12, (1, 3): s13, (2, 3): s23}
    positive = s12 > 0 and s13 > 0 and s23 > 0
    nonpositive = s12 <= 0 and s13 <= 0 and s23 <= 0
    if not (positive or nonpositive):
        return False
    if s11 == s22 and abs(s23) > abs(s13):
        return False
    if s22 == s33 and abs(s13) > abs(s12):
        return False
    diag = {1: s11, 2: s22, 3: s33}

    def o(i, j):
        return off[(i, j) if i < j else (j, i)]

    for i, j, k in itertools.permutations((1, 2, 3)):
        if diag[i] == abs(o(i, j)):
            if positive:
                if abs(o(i, k)) > 2 * abs(o(j, k)):
                    return False
            else:
                if o(i, k) != 0:
                    return False
    if not positive:
        if s11 + s22 == abs(s12 + s13 + s23) and 2 * s11 > abs(s12 + 2 * s13):
            return False
    return True


def direct_sum(f, g):
    """Orthogonal sum of two integral forms (total dimension <= 4)."""
    n = f.n + g.n
    if n > 4:
        raise ValueError("direct sum exceeds four variables")
    coeff = {}
    for i in range(1, f.n + 1):
        for j in range(i, f.n + 1):
            coeff[(i, j)] = f.coeff(i, j)
    for i in range(1, g.n + 1):
        for j in range(i, g.n + 1):
            coeff[(i + f.n, j + f.n)] = g.coeff(i, j)
    out = []
    for i, j in coefficient_pairs(n):
        out.append(coeff.get((i, j), 0))
    return IntForm(out)


def parse_form(text):
    """Parse a form from text.

    Accepts the explicit shape "N: s11 .. sNN s12 s13 .." or a bare list of
    coefficients whose count n(n+1)/2 determines the dimension (so the
    ternary shorthand "s11 s22 s33 s12 s13 s23" works as-is).
    """
    text = text.strip()
    if ":" in text:
        head, _, tail = text.partition(":")
        try:
            n = int(head.strip())
        except ValueError:
            raise ValueError(f"bad dimension prefix in {text!r}") from None
        parts = tail.split()
        if n not in (1, 2, 3, 4) or len(parts) != n * (n + 1) // 2:
            raise ValueError(f"dimension prefix and coefficient count disagree in {text!r}")
    else:
        parts = text.split()
        if len(parts) not in _COEFF_COUNT:
            raise ValueError(f"coefficient count {len(parts)} is not n(n+1)/2 for n <= 4")
    try:
        coeffs = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"non-integer coefficient in {text!r}") from None
    return IntForm(coeffs)


def format_form(f, explicit=False):
    """Render a form as text; ternary forms use the bare shorthand."""
    body = " ".join(str(c) for c in f.coeffs)
    if f.n == 3 and not explicit:
        return body
    return f"{f.n}: {body}"


class FormPair(_PickleBySlots):
    """An ordered pair of ternary quadratic forms over the rationals."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = RatForm.from_form(a)
        b = RatForm.from_form(b)
        if a.n != 3 or b.n != 3:
            raise ValueError("a pair consists of two ternary forms")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("FormPair is immutable")

    def value_at(self, h):
        """(A(h), B(h)) as exact rationals."""
        return evaluate(self.a, h), evaluate(self.b, h)

    def is_linearly_independent(self):
        """True iff the two Gram matrices are not proportional."""
        ga, gb = self.a.gram, self.b.gram
        entries = [(ga[i][j], gb[i][j]) for i in range(3) for j in range(i, 3)]
        anchor = next(((x, y) for x, y in entries if x or y), None)
        if anchor is None:
            return False
        ax, ay = anchor
        for x, y in entries:
            if x * ay != y * ax:
                return True
        return False

    def __eq__(self, other):
        return isinstance(other, FormPair) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash(("FormPair", self.a, self.b))

    def __repr__(self):
        return f"FormPair({self.a!r}, {self.b!r})"


class GroupElement(_PickleBySlots):
    """A pair (w, v): an invertible 3x3 substitution and an invertible 2x2 mixer."""

    __slots__ = ("w", "v")

    def __init__(self, w, v):
        w = as_fraction_matrix(w)
        v = as_fraction_matrix(v)
        if len(w) != 3 or any(len(r) != 3 for r in w):
            raise ValueError("w must be 3x3")
        if len(v) != 2 or any(len(r) != 2 for r in v):
            raise ValueError("v must be 2x2")
        if det_exact(w) == 0 or det_exact(v) == 0:
            raise ValueError("group element must be invertible")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.w == other.w and self.v == other.v

    def __hash__(self):
        return hash(("GroupElement", self.w, self.v))

    def __repr__(self):
        return f"GroupElement({[list(r) for r in self.w]!r}, {[list(r) for r in self.v]!r})"


def compose(g1, g2):
    """Group product: acting by compose(g1, g2) is acting by g2, then g1."""
    return GroupElement(mat_mul(g1.w, g2.w), mat_mul(g1.v, g2.v))


def act(g, pair):
    """Left action on pairs: substitute x -> x w in both forms, then mix them
    by v, i.e. (A, B) -> (r A' + s B', t A' + u B') for v = [[r, s], [t, u]]."""
    ga = mat_mul(mat_mul(g.w, pair.a.gram), transpose(g.w))
    gb = mat_mul(mat_mul(g.w, pair.b.gram), transpose(g.w))
    (r, s), (t, u) = g.v
    new_a = tuple(tuple(r * ga[i][j] + s * gb[i][j] for j in range(3)) for i in range(3))
    new_b = tuple(tuple(t * ga[i][j] + u * gb[i][j] for j in range(3)) for i in range(3))
    return FormPair(RatForm(new_a), RatForm(new_b))
