"""Ring structures attached to a pair of ternary quadratic forms.

A pair (A, B) of ternary forms carries a binary cubic 4*det(A*x - B*y).
The cubic determines a commutative ring on a rank-3 lattice <1, w1, w2>,
and the pair itself determines a commutative ring on a rank-4 lattice
<1, x1, x2, x3>: products of the rank-4 generators are pinned down by
requiring det[u | v | u*v] to agree with A(v)B(u) - A(u)B(v) for all u, v,
together with a normalization that fixes the translation freedom
xi -> xi + const.  This module computes both multiplication tables
exactly, characteristic and resolvent polynomials of ring elements,
the canonical pair attached to a quartic polynomial together with the
change of coordinates reaching it, rational isotropy tests, Hilbert
symbols, and the order-2/order-3 matrix symmetries of binary cubics.
"""

import functools
import math
from fractions import Fraction

from .forms import FormPair, GroupElement, RatForm, _PickleBySlots, act, evaluate
from .ratmat import (
    as_fraction_matrix,
    det_exact,
    identity,
    mat_mul,
    mat_scale,
    mat_sub,
    solve_exact,
)

_INDEX_PAIRS = ((1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))


class BinaryCubic(_PickleBySlots):
    """a*x^3 + b*x^2*y + c*x*y^2 + d*y^3 with exact rational coefficients."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryCubic is immutable")

    @property
    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def evaluate(self, x, y):
        x = Fraction(x)
        y = Fraction(y)
        return ((self.a * x + self.b * y) * x + self.c * y * y) * x + self.d * y * y * y

    @property
    def disc(self):
        """Discriminant of the dehomogenized cubic a*x^3 + b*x^2 + c*x + d."""
        a, b, c, d = self.coeffs
        return (
            18 * a * b * c * d
            - 4 * b**3 * d
            + b * b * c * c
            - 4 * a * c**3
            - 27 * a * a * d * d
        )

    def __eq__(self, other):
        return isinstance(other, BinaryCubic) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("BinaryCubic", self.coeffs))

    def __repr__(self):
        return f"BinaryCubic({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


class QuarticPoly(_PickleBySlots):
    """Monic x^4 + a3*x^3 + a2*x^2 + a1*x + a0 with exact rational coefficients."""

    __slots__ = ("a3", "a2", "a1", "a0")

    def __init__(self, a3, a2, a1, a0):
        object.__setattr__(self, "a3", Fraction(a3))
        object.__setattr__(self, "a2", Fraction(a2))
        object.__setattr__(self, "a1", Fraction(a1))
        object.__setattr__(self, "a0", Fraction(a0))

    def __setattr__(self, name, value):
        raise AttributeError("QuarticPoly is immutable")

    @property
    def coeffs(self):
        return (Fraction(1), self.a3, self.a2, self.a1, self.a0)

    def evaluate(self, x):
        x = Fraction(x)
        r = Fraction(1)
        for coef in (self.a3, self.a2, self.a1, self.a0):
            r = r * x + coef
        return r

    def shift(self, s):
        """The polynomial q(x + s), again monic quartic."""
        s = Fraction(s)
        out = [Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0)]
        # Horner on q(t) with t = x + s keeps everything exact.
        coeffs = self.coeffs
        out = [coeffs[0]]
        for coef in coeffs[1:]:
            nxt = [out[0]]
            for k in range(1, len(out)):
                nxt.append(out[k] + s * out[k - 1])
            nxt.append(s * out[-1] + coef)
            out = nxt
        return QuarticPoly(out[1], out[2], out[3], out[4])

    def __eq__(self, other):
        return isinstance(other, QuarticPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QuarticPoly", self.coeffs))

    def __repr__(self):
        return f"QuarticPoly({self.a3!r}, {self.a2!r}, {self.a1!r}, {self.a0!r})"


def _cubic_from_samples(at10, at01, at11, at1m1):
    """Reconstruct a binary cubic from values at (1,0), (0,1), (1,1), (1,-1)."""
    a = at10
    d = at01
    b = (at11 - at1m1) / 2 - d
    c = (at11 + at1m1) / 2 - a
    return BinaryCubic(a, b, c, d)


def det_binary_cubic(pair):
    """The binary cubic 4*det(A*x - B*y) of a pair, by interpolation."""
    ga = pair.a.gram
    gb = pair.b.gram
    return _cubic_from_samples(
        4 * det_exact(ga),
        -4 * det_exact(gb),
        4 * det_exact(mat_sub(ga, gb)),
        4 * det_exact([[ga[i][j] + gb[i][j] for j in range(3)] for i in range(3)]),
    )


def disc_pair(pair):
    """Discriminant of the pair: the discriminant of its binary cubic."""
    return det_binary_cubic(pair).disc


def transform_cubic(f, v):
    """The cubic f((x, y) @ v) for a 2x2 matrix v, row-vector convention."""
    (v00, v01), (v10, v11) = as_fraction_matrix(v)
    return _cubic_from_samples(
        f.evaluate(v00, v01),
        f.evaluate(v10, v11),
        f.evaluate(v00 + v10, v01 + v11),
        f.evaluate(v00 - v10, v01 - v11),
    )


def shift_cubic(f, s):
    """The cubic f(x + s*y, y): substitute x -> x + s in the dehomogenized view."""
    return transform_cubic(f, ((1, 0), (Fraction(s), 1)))


class CubicStructure(_PickleBySlots):
    """Multiplication table of the rank-3 ring <1, w1, w2> of a binary cubic.

    w1*w1 = -a*c + b*w1 - a*w2, w1*w2 = -a*d, w2*w2 = -b*d + d*w1 - c*w2.
    """

    __slots__ = ("cubic",)

    def __init__(self, cubic):
        object.__setattr__(self, "cubic", cubic)

    def __setattr__(self, name, value):
        raise AttributeError("CubicStructure is immutable")

    @property
    def table(self):
        a, b, c, d = self.cubic.coeffs
        return {
            (1, 1): (-a * c, b, -a),
            (1, 2): (-a * d, Fraction(0), Fraction(0)),
            (2, 2): (-b * d, d, -c),
        }

    def multiply(self, u, v):
        """Product of u0 + u1*w1 + u2*w2 and v0 + v1*w1 + v2*w2, as coordinates."""
        u0, u1, u2 = (Fraction(t) for t in u)
        v0, v1, v2 = (Fraction(t) for t in v)
        a, b, c, d = self.cubic.coeffs
        cross = u1 * v2 + u2 * v1
        w0 = u0 * v0 - u1 * v1 * a * c - cross * a * d - u2 * v2 * b * d
        w1 = u0 * v1 + u1 * v0 + u1 * v1 * b + u2 * v2 * d
        w2 = u0 * v2 + u2 * v0 - u1 * v1 * a - u2 * v2 * c
        return (w0, w1, w2)


def cubic_structure(cubic):
    """Rank-3 ring of a binary cubic."""
    return CubicStructure(cubic)


class QuarticStructure(_PickleBySlots):
    """Multiplication table of the rank-4 ring <1, x1, x2, x3> of a pair.

    table[(i, j)] lists the coordinates of xi*xj in the basis (1, x1, x2, x3);
    the normalization zeroes the x1- and x2-coordinates of x1*x2 and the
    x1-coordinate of x1*x3.
    """

    __slots__ = ("table",)

    def __init__(self, table):
        object.__setattr__(self, "table", dict(table))

    def __setattr__(self, name, value):
        raise AttributeError("QuarticStructure is immutable")

    def basis_product(self, i, j):
        return self.table[(min(i, j), max(i, j))]

    def multiply(self, u, v):
        """Product of two elements given as coordinates in (1, x1, x2, x3)."""
        u = tuple(Fraction(t) for t in u)
        v = tuple(Fraction(t) for t in v)
        out = [u[0] * v[0], Fraction(0), Fraction(0), Fraction(0)]
        for m in range(1, 4):
            out[m] += u[0] * v[m] + u[m] * v[0]
        for i in range(1, 4):
            for j in range(1, 4):
                w = u[i] * v[j]
                if not w:
                    continue
                row = self.basis_product(i, j)
                for m in range(4):
                    out[m] += w * row[m]
        return tuple(out)


def _pair_bilinear(x, y):
    """Per-basis-pair bilinear weights x_i*y_j + x_j*y_i (single term on i == j)."""
    vals = []
    for i, j in _INDEX_PAIRS:
        if i == j:
            vals.append(Fraction(x[i - 1] * y[i - 1]))
        else:
            vals.append(Fraction(x[i - 1] * y[j - 1] + x[j - 1] * y[i - 1]))
    return vals


@functools.lru_cache(maxsize=256)
def quartic_structure(pair):
    """Rank-4 ring of a pair of ternary forms, solved exactly.

    The nonconstant coordinates come from the linear system expressing
    det[u | v | u*v] = A(u)B(v) - A(v)B(u) over 36 evaluation points plus
    the three normalization rows; the constant coordinates then follow
    from associativity.  The finished table is re-verified associative.
    """
    pts = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1))
    vals = {p: pair.value_at(p) for p in pts}
    rows = []
    rhs = []
    for x in pts:
        ax, bx = vals[x]
        for y in pts:
            ay, by = vals[y]
            cof = (
                x[1] * y[2] - x[2] * y[1],
                x[2] * y[0] - x[0] * y[2],
                x[0] * y[1] - x[1] * y[0],
            )
            weights = _pair_bilinear(x, y)
            rows.append([Fraction(cof[m]) * w for m in range(3) for w in weights])
            rhs.append(ax * by - ay * bx)
    for m, pq in ((1, (1, 2)), (2, (1, 2)), (1, (1, 3))):
        row = [Fraction(0)] * 18
        row[(m - 1) * 6 + _INDEX_PAIRS.index(pq)] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(0))
    sol = solve_exact(rows, rhs)
    cons = {}
    for m in range(1, 4):
        for k, pq in enumerate(_INDEX_PAIRS):
            cons[(m, pq)] = sol[(m - 1) * 6 + k]

    def c(m, i, j):
        return cons[(m, (min(i, j), max(i, j)))]

    rows = []
    rhs = []
    for i in range(1, 4):
        for j in range(1, 4):
            for k in range(1, 4):
                for ell in range(1, 4):
                    row = [Fraction(0)] * 6
                    if ell == k:
                        row[_INDEX_PAIRS.index((min(i, j), max(i, j)))] += 1
                    if ell == i:
                        row[_INDEX_PAIRS.index((min(j, k), max(j, k)))] -= 1
                    val = Fraction(0)
                    for m in range(1, 4):
                        val += c(m, j, k) * c(ell, m, i) - c(m, i, j) * c(ell, m, k)
                    rows.append(row)
                    rhs.append(val)
                row = [Fraction(0)] * 6
                for m in range(1, 4):
                    row[_INDEX_PAIRS.index((min(m, k), max(m, k)))] += c(m, i, j)
                    row[_INDEX_PAIRS.index((min(m, i), max(m, i)))] -= c(m, j, k)
                rows.append(row)
                rhs.append(Fraction(0))
    const = solve_exact(rows, rhs)
    table = {}
    for k, pq in enumerate(_INDEX_PAIRS):
        table[pq] = (const[k], cons[(1, pq)], cons[(2, pq)], cons[(3, pq)])
    ring = QuarticStructure(table)
    basis = [
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    ]
    for u in basis[1:]:
        for v in basis[1:]:
            if ring.multiply(u, v) != ring.multiply(v, u):
                raise ArithmeticError("ring multiplication is not commutative")
            for w in basis[1:]:
                lhs = ring.multiply(ring.multiply(u, v), w)
                if lhs != ring.multiply(u, ring.multiply(v, w)):
                    raise ArithmeticError("ring multiplication is not associative")
    return ring


class GeneratorData(_PickleBySlots):
    """Characteristic polynomial of h0 + h1*x1 + h2*x2 + h3*x3 plus basis data.

    scale is 4*det(B(h)*Gram(A) - A(h)*Gram(B)); it is nonzero exactly when
    the four powers 1, g, g^2, g^3 of the element form a basis, and it equals
    the determinant of power_basis_matrix at the same (h0, h).
    """

    __slots__ = ("poly", "scale", "is_basis", "powers")

    def __init__(self, poly, scale, is_basis, powers):
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "is_basis", is_basis)
        object.__setattr__(self, "powers", powers)

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorData is immutable")

    def __repr__(self):
        return f"GeneratorData({self.poly!r}, scale={self.scale!r}, is_basis={self.is_basis!r})"


def _char_poly_4x4(m):
    """det(x*I - m) of a 4x4 rational matrix by trace recursion, as coefficients."""
    coeffs = [Fraction(1)]
    mk = [row[:] for row in m]
    for k in range(1, 5):
        ck = sum(mk[i][i] for i in range(4)) / k
        coeffs.append(-ck)
        if k < 4:
            for i in range(4):
                mk[i][i] -= ck
            mk = [list(row) for row in mat_mul(m, mk)]
    return coeffs


def generator_char_poly(pair, h0, h):
    """Characteristic polynomial of h0 + sum h_j*x_j in the rank-4 ring."""
    ring = quartic_structure(pair)
    alpha = (Fraction(h0), Fraction(h[0]), Fraction(h[1]), Fraction(h[2]))
    cols = [
        alpha,
        ring.multiply(alpha, (0, 1, 0, 0)),
        ring.multiply(alpha, (0, 0, 1, 0)),
        ring.multiply(alpha, (0, 0, 0, 1)),
    ]
    mult = [[cols[j][i] for j in range(4)] for i in range(4)]
    coeffs = _char_poly_4x4(mult)
    poly = QuarticPoly(coeffs[1], coeffs[2], coeffs[3], coeffs[4])
    qa, qb = pair.value_at(h)
    scale = 4 * det_exact(
        mat_sub(mat_scale(qb, pair.a.gram), mat_scale(qa, pair.b.gram))
    )
    powers = [alpha]
    for _ in range(2):
        powers.append(ring.multiply(powers[-1], alpha))
    return GeneratorData(poly, scale, scale != 0, tuple(powers))


def power_basis_matrix(pair, h0, h):
    """Rows: coordinates of g, g^2, g^3 in (x1, x2, x3) modulo constants.

    Its determinant equals generator_char_poly(pair, h0, h).scale exactly.
    """
    data = generator_char_poly(pair, h0, h)
    return tuple(tuple(p[1:]) for p in data.powers)


def resolvent(q):
    """Resolvent cubic x^3 - a2*x^2 + (a1*a3 - 4*a0)*x + (4*a0*a2 - a1^2 - a0*a3^2)."""
    a3, a2, a1, a0 = q.a3, q.a2, q.a1, q.a0
    return BinaryCubic(1, -a2, a1 * a3 - 4 * a0, 4 * a0 * a2 - a1 * a1 - a0 * a3 * a3)


def canonical_pair(q):
    """The distinguished pair whose cubic is the shifted resolvent of q.

    The first form is fixed; the second collects the coefficients of q.  The
    postcondition 4*det(A*x - B) = resolvent(q) at x + a2/3 is checked exactly.
    """
    a3, a2, a1, a0 = q.a3, q.a2, q.a1, q.a0
    half = Fraction(1, 2)
    ga = ((0, 0, half), (0, -1, 0), (half, 0, 0))
    gb = (
        (-1, -a3 / 2, -a2 / 6),
        (-a3 / 2, -2 * a2 / 3, -a1 / 2),
        (-a2 / 6, -a1 / 2, -a0),
    )
    pair = FormPair(RatForm(ga), RatForm(gb))
    if det_binary_cubic(pair) != shift_cubic(resolvent(q), a2 / 3):
        raise ArithmeticError("canonical pair postcondition failed")
    return pair


def transition_matrices(pair, h0, h):
    """Coordinate change (W, V) carrying the pair onto its canonical pair.

    Requires a generating element (nonzero scale).  The action identity
    act((W, V), pair) == canonical_pair(char poly) is verified exactly.
    """
    data = generator_char_poly(pair, h0, h)
    if not data.is_basis:
        raise ValueError("the chosen element does not generate a power basis")
    a3, a2 = data.poly.a3, data.poly.a2
    lower = ((1, 0, 0), (a3, 1, 0), (a2, a3, 1))
    m = tuple(tuple(p[1:]) for p in data.powers)
    w = mat_mul(as_fraction_matrix(lower), as_fraction_matrix(m))
    a, b, c, d = det_binary_cubic(pair).coeffs
    qa, qb = pair.value_at(h)
    prefactor = data.scale
    f1 = ((1, 0), ((c * qa - b * qb) / 3, 1))
    f2 = (
        (qb, -qa),
        (-c * qa * qb - d * qa * qa, -a * qb * qb - b * qa * qb),
    )
    v = mat_scale(Fraction(1) / prefactor, mat_mul(as_fraction_matrix(f1), as_fraction_matrix(f2)))
    target = canonical_pair(data.poly)
    if act(GroupElement(w, v), pair) != target:
        raise ArithmeticError("transition matrices fail to reach the canonical pair")
    return w, v


def resolvent_closed_form(pair, h):
    """Resolvent of the degree-one element with coordinates h, from the cubic.

    Expands (x - z)^3 + e2*(x - z)^2 + e1*(x - z) + e0 whose coefficients are
    polynomials in the cubic coefficients and A(h), B(h), then checks it equals
    the resolvent of the characteristic polynomial (constant term zero).
    """
    qa, qb = pair.value_at(h)
    if qa == 0 and qb == 0:
        raise ValueError("h must not annihilate both forms")
    a, b, c, d = det_binary_cubic(pair).coeffs
    data = generator_char_poly(pair, 0, h)
    z = (data.poly.a2 + c * qa - b * qb) / 3
    e2 = c * qa - b * qb
    e1 = b * d * qa * qa + (3 * a * d - b * c) * qa * qb + a * c * qb * qb
    e0 = (
        a * d * d * qa**3
        - (b * b * d - 2 * a * c * d) * qa * qa * qb
        + (a * c * c - 2 * a * b * d) * qa * qb * qb
        - a * a * d * qb**3
    )
    out = shift_cubic(BinaryCubic(1, e2, e1, e0), -z)
    if out != resolvent(data.poly):
        raise ArithmeticError("closed-form resolvent disagrees with the direct one")
    return out


def _divisors(n):
    """Positive divisors of a positive integer."""
    out = []
    high = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            if k * k != n:
                high.append(n // k)
        k += 1
    return out + high[::-1]


def has_rational_root_quartic(q):
    """Whether the monic rational quartic has a rational root (divisor scan)."""
    den = 1
    for coef in q.coeffs:
        den = den * coef.denominator // math.gcd(den, coef.denominator)
    ints = [int(coef * den) for coef in q.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    if ints[-1] == 0:
        return True
    lead, const = abs(ints[0]), abs(ints[-1])
    for p in _divisors(const):
        for qq in _divisors(lead):
            if math.gcd(p, qq) != 1:
                continue
            for r in (Fraction(p, qq), Fraction(-p, qq)):
                if q.evaluate(r) == 0:
                    return True
    return False


def anisotropic_over_Q(pair, h0, h):
    """Whether the pair is anisotropic over the rationals, via a generator.

    Requires the element h0 + sum h_j*x_j to generate a power basis; the pair
    is isotropic exactly when its characteristic polynomial has a rational root.
    """
    data = generator_char_poly(pair, h0, h)
    if not data.is_basis:
        raise ValueError("the chosen element does not generate a power basis")
    return not has_rational_root_quartic(data.poly)


def _unit_and_exponent(n, p):
    """Write the nonzero integer n as p^k * u with p not dividing u."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


def _legendre(u, p):
    """Legendre symbol of a unit u modulo an odd prime p, valued in {1, -1}."""
    r = pow(u % p, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def _is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def hilbert_symbol(a, b, v):
    """Local solvability index of z^2 = a*x^2 + b*y^2 at a prime v or infinity."""
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol needs nonzero arguments")
    if v == math.inf or v == "inf":
        return -1 if a < 0 and b < 0 else 1
    p = int(v)
    if not _is_prime(p):
        raise ValueError("place must be a prime or infinity")
    na = a.numerator * a.denominator
    nb = b.numerator * b.denominator
    alpha, u = _unit_and_exponent(na, p)
    beta, w = _unit_and_exponent(nb, p)
    if p == 2:
        e = ((u - 1) // 2) * ((w - 1) // 2)
        e += alpha * ((w * w - 1) // 8) + beta * ((u * u - 1) // 8)
        return -1 if e % 2 else 1
    out = 1
    if alpha % 2 and beta % 2 and (p - 1) // 2 % 2:
        out = -out
    if beta % 2 and _legendre(u, p) == -1:
        out = -out
    if alpha % 2 and _legendre(w, p) == -1:
        out = -out
    return out


def hilbert_product(a, b):
    """Product of hilbert_symbol(a, b, v) over infinity and all relevant primes."""
    a = Fraction(a)
    b = Fraction(b)
    n = 2 * abs(a.numerator * a.denominator * b.numerator * b.denominator)
    out = hilbert_symbol(a, b, math.inf)
    p = 2
    while n > 1:
        if n % p == 0:
            out *= hilbert_symbol(a, b, p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    return out


def _scaled_action_matches(f, v, u):
    """Whether det(v)^-1 * f((x, y) v) equals u * f, exactly."""
    dv = det_exact(v)
    if dv == 0:
        return False
    moved = transform_cubic(f, v)
    return moved.coeffs == tuple(dv * u * t for t in f.coeffs)


def cubic_automorphism_order2(f, root, u):
    """Order-2 matrix symmetry of a binary cubic at a simple rational root.

    root is a pair (p, q) with f(p, q) = 0; u is the nonzero similitude.
    Returns v with v^2 = u^2*I and det(v)^-1 * f((x,y)v) = u*f.
    """
    p3 = Fraction(root[0])
    q3 = Fraction(root[1])
    u = Fraction(u)
    if u == 0:
        raise ValueError("similitude must be nonzero")
    if p3 == 0 and q3 == 0:
        raise ValueError("root must be a nonzero vector")
    if f.evaluate(p3, q3) != 0:
        raise ValueError("not a root of the cubic")
    a, b, c, d = f.coeffs
    fx = 3 * a * p3 * p3 + 2 * b * p3 * q3 + c * q3 * q3
    fy = b * p3 * p3 + 2 * c * p3 * q3 + 3 * d * q3 * q3
    if fx == 0 and fy == 0:
        raise ValueError("multiple root")
    factor = p3 / fy if fy != 0 else -q3 / fx
    scale = u * factor
    v = (
        (scale * (b * p3 + c * q3), scale * (-3 * a * p3 - b * q3)),
        (scale * (c * p3 + 3 * d * q3), scale * (-b * p3 - c * q3)),
    )
    if mat_mul(v, v) != mat_scale(u * u, identity(2)):
        raise ArithmeticError("order-2 symmetry square check failed")
    if not _scaled_action_matches(f, v, u):
        raise ArithmeticError("order-2 symmetry scaling identity failed")
    return v


def _fraction_sqrt(x):
    """Exact square root of a nonnegative rational, or None."""
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn != x.numerator or rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)


def cubic_automorphism_order3(f, u):
    """Order-3 matrix symmetry of a binary cubic with square discriminant.

    Returns v with v^3 = u^3*I and det(v)^-1 * f((x,y)v) = u*f; requires the
    discriminant to be a nonzero rational square.
    """
    u = Fraction(u)
    if u == 0:
        raise ValueError("similitude must be nonzero")
    disc = f.disc
    if disc == 0:
        raise ValueError("cubic has a repeated root")
    delta = _fraction_sqrt(disc)
    if delta is None:
        raise ValueError("discriminant is not a rational square")
    a, b, c, d = f.coeffs
    t = 9 * a * d - b * c
    v = mat_scale(
        u / delta,
        (
            ((t - delta) / 2, b * b - 3 * a * c),
            (-c * c + 3 * b * d, -(t + delta) / 2),
        ),
    )
    cube = mat_mul(mat_mul(v, v), v)
    if cube != mat_scale(u**3, identity(2)):
        raise ArithmeticError("order-3 symmetry cube check failed")
    if not _scaled_action_matches(f, v, u):
        raise ArithmeticError("order-3 symmetry scaling identity failed")
    return v


def pair_fixing_witness_check(pair, w, v, u):
    """Whether (w, -v/u) fixes the pair under the group action, exactly."""
    u = Fraction(u)
    if u == 0:
        raise ValueError("similitude must be nonzero")
    mixer = mat_scale(Fraction(-1) / u, as_fraction_matrix(v))
    return act(GroupElement(w, mixer), pair) == pair
