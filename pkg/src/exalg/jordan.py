"""The exceptional Jordan algebra and the Freudenthal vector space.

Elements of the 27-dimensional Jordan algebra are kept in chart form:
three diagonal scalars chi1..chi3 and three octonions x1..x3, standing
for the hermitian 3x3 octonion matrix

    [[chi1, x3,       conj(x2)],
     [conj(x3), chi2, x1      ],
     [x2, conj(x1),   chi3    ]].

The chart is never materialized as a matrix; every operation (Jordan
product, Freudenthal cross, determinant, the derivation actions) is an
explicit formula on the chart coordinates.

The Freudenthal vector space stacks two Jordan elements and two
scalars, (X, Y, xi, eta); it carries the symmetric and skew inner
products and the cross operator `p_cross` whose components generate
the larger brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from exalg.cayley import DIM_SO8, NU, NU2, Octonion, PAIRS, apply_so8
from exalg.exact import (
    ZERO,
    ONE,
    DenseVector,
    GaussianRational,
    ScalarLike,
    gr,
)

_HALF = gr(Q(1, 2))
_THIRD = gr(Q(1, 3))
_QUARTER = gr(Q(1, 4))
_NEG_HALF = gr(Q(-1, 2))
_EIGHTH = gr(Q(1, 8))


def _cyc(i: int) -> int:
    # cyclic slot index: values 1..3, so _cyc(4) == 1
    return (i - 1) % 3 + 1


@dataclass(slots=True, unsafe_hash=True)
class JordanElement:
    """Chart form of a hermitian 3x3 octonion matrix."""

    chi1: GaussianRational
    chi2: GaussianRational
    chi3: GaussianRational
    x1: Octonion
    x2: Octonion
    x3: Octonion

    @staticmethod
    def of(
        chi1: ScalarLike,
        chi2: ScalarLike,
        chi3: ScalarLike,
        x1: Octonion | None = None,
        x2: Octonion | None = None,
        x3: Octonion | None = None,
    ) -> "JordanElement":
        z = Octonion.zero()
        return JordanElement(
            GaussianRational.of(chi1),
            GaussianRational.of(chi2),
            GaussianRational.of(chi3),
            x1 if x1 is not None else z,
            x2 if x2 is not None else z,
            x3 if x3 is not None else z,
        )

    @staticmethod
    def zero() -> "JordanElement":
        return _J_ZERO

    @staticmethod
    def unit() -> "JordanElement":
        return _J_UNIT

    @staticmethod
    def diag_unit(i: int) -> "JordanElement":
        """E_i: the i-th diagonal idempotent (i in 1..3, cyclically)."""
        return _E_UNITS[_cyc(i) - 1]

    @staticmethod
    def f_unit(i: int, value: Octonion) -> "JordanElement":
        """F_i(value): the chart with the i-th octonion slot filled."""
        i = _cyc(i)
        z = Octonion.zero()
        return JordanElement(
            ZERO,
            ZERO,
            ZERO,
            value if i == 1 else z,
            value if i == 2 else z,
            value if i == 3 else z,
        )

    def chi(self, i: int) -> GaussianRational:
        return (self.chi1, self.chi2, self.chi3)[_cyc(i) - 1]

    def x(self, i: int) -> Octonion:
        return (self.x1, self.x2, self.x3)[_cyc(i) - 1]

    def __add__(self, other: "JordanElement") -> "JordanElement":
        if self is _J_ZERO:
            return other
        if other is _J_ZERO:
            return self
        return JordanElement(
            self.chi1 + other.chi1,
            self.chi2 + other.chi2,
            self.chi3 + other.chi3,
            self.x1 + other.x1,
            self.x2 + other.x2,
            self.x3 + other.x3,
        )

    def __sub__(self, other: "JordanElement") -> "JordanElement":
        if other is _J_ZERO:
            return self
        return JordanElement(
            self.chi1 - other.chi1,
            self.chi2 - other.chi2,
            self.chi3 - other.chi3,
            self.x1 - other.x1,
            self.x2 - other.x2,
            self.x3 - other.x3,
        )

    def __neg__(self) -> "JordanElement":
        if self is _J_ZERO:
            return self
        return JordanElement(
            -self.chi1, -self.chi2, -self.chi3, -self.x1, -self.x2, -self.x3
        )

    def scale(self, factor: ScalarLike) -> "JordanElement":
        if self is _J_ZERO:
            return self
        f = GaussianRational.of(factor)
        if not (f.re.numerator or f.im.numerator):
            return _J_ZERO
        return JordanElement(
            f * self.chi1,
            f * self.chi2,
            f * self.chi3,
            self.x1.scale(f),
            self.x2.scale(f),
            self.x3.scale(f),
        )

    def trace(self) -> GaussianRational:
        return self.chi1 + self.chi2 + self.chi3

    @property
    def is_zero(self) -> bool:
        return (
            self.chi1.is_zero
            and self.chi2.is_zero
            and self.chi3.is_zero
            and self.x1.is_zero
            and self.x2.is_zero
            and self.x3.is_zero
        )

    def traceless(self) -> "JordanElement":
        """Project onto trace zero: subtract (tr/3) times the unit."""
        t = self.trace()
        if t.is_zero:
            return self
        return self - _J_UNIT.scale(t * _THIRD)


_J_ZERO = JordanElement(ZERO, ZERO, ZERO, Octonion.zero(), Octonion.zero(), Octonion.zero())
_J_UNIT = JordanElement(ONE, ONE, ONE, Octonion.zero(), Octonion.zero(), Octonion.zero())
_E_UNITS = (
    JordanElement.of(1, 0, 0),
    JordanElement.of(0, 1, 0),
    JordanElement.of(0, 0, 1),
)

#: Chart basis: E1, E2, E3, then F_i(e0..e7) for slots i = 1, 2, 3.
JORDAN_DIM = 27


def jordan_basis() -> tuple[JordanElement, ...]:
    return _J_BASIS


def jordan_mul(X: JordanElement, Y: JordanElement) -> JordanElement:
    """The Jordan product (symmetrized matrix product) in chart form."""
    if X is _J_ZERO or Y is _J_ZERO:
        return _J_ZERO
    c1 = X.chi1 * Y.chi1 + X.x2.inner(Y.x2) + X.x3.inner(Y.x3)
    c2 = X.chi2 * Y.chi2 + X.x3.inner(Y.x3) + X.x1.inner(Y.x1)
    c3 = X.chi3 * Y.chi3 + X.x1.inner(Y.x1) + X.x2.inner(Y.x2)
    f1 = (
        Y.x1.scale(X.chi2 + X.chi3)
        + X.x1.scale(Y.chi2 + Y.chi3)
        + (Y.x2 * X.x3).conj()
        + (X.x2 * Y.x3).conj()
    ).scale(_HALF)
    f2 = (
        Y.x2.scale(X.chi3 + X.chi1)
        + X.x2.scale(Y.chi3 + Y.chi1)
        + (Y.x3 * X.x1).conj()
        + (X.x3 * Y.x1).conj()
    ).scale(_HALF)
    f3 = (
        Y.x3.scale(X.chi1 + X.chi2)
        + X.x3.scale(Y.chi1 + Y.chi2)
        + (Y.x1 * X.x2).conj()
        + (X.x1 * Y.x2).conj()
    ).scale(_HALF)
    return JordanElement(c1, c2, c3, f1, f2, f3)


def jordan_inner(X: JordanElement, Y: JordanElement) -> GaussianRational:
    """The trace form (X, Y) = tr(X o Y)."""
    return (
        X.chi1 * Y.chi1
        + X.chi2 * Y.chi2
        + X.chi3 * Y.chi3
        + (X.x1.inner(Y.x1) + X.x2.inner(Y.x2) + X.x3.inner(Y.x3)) * 2
    )


def freudenthal_cross(X: JordanElement, Y: JordanElement) -> JordanElement:
    """The Freudenthal cross X x Y in chart form."""
    if X is _J_ZERO or Y is _J_ZERO:
        return _J_ZERO
    c1 = (X.chi2 * Y.chi3 + X.chi3 * Y.chi2) * _HALF - X.x1.inner(Y.x1)
    c2 = (X.chi3 * Y.chi1 + X.chi1 * Y.chi3) * _HALF - X.x2.inner(Y.x2)
    c3 = (X.chi1 * Y.chi2 + X.chi2 * Y.chi1) * _HALF - X.x3.inner(Y.x3)
    f1 = (
        X.x1.scale(-Y.chi1)
        + Y.x1.scale(-X.chi1)
        + (X.x2 * Y.x3).conj()
        + (Y.x2 * X.x3).conj()
    ).scale(_HALF)
    f2 = (
        X.x2.scale(-Y.chi2)
        + Y.x2.scale(-X.chi2)
        + (X.x3 * Y.x1).conj()
        + (Y.x3 * X.x1).conj()
    ).scale(_HALF)
    f3 = (
        X.x3.scale(-Y.chi3)
        + Y.x3.scale(-X.chi3)
        + (X.x1 * Y.x2).conj()
        + (Y.x1 * X.x2).conj()
    ).scale(_HALF)
    return JordanElement(c1, c2, c3, f1, f2, f3)


def trilinear(X: JordanElement, Y: JordanElement, Z: JordanElement) -> GaussianRational:
    """The symmetric trilinear form (X, Y, Z) = (X, Y x Z)."""
    return jordan_inner(X, freudenthal_cross(Y, Z))


def jdet(X: JordanElement) -> GaussianRational:
    """The cubic determinant det X = (X, X, X) / 3."""
    return trilinear(X, X, X) * _THIRD


@dataclass(slots=True, unsafe_hash=True)
class AntiHermitianA:
    """Anti-hermitian 3x3 octonion matrix with zero diagonal, in chart form.

    The chart stores the three independent octonion slots a1..a3; slot i
    occupies the same off-diagonal positions as the Jordan chart's x_i,
    with the transposed entry negated and conjugated.
    """

    a1: Octonion
    a2: Octonion
    a3: Octonion

    @staticmethod
    def zero() -> "AntiHermitianA":
        return _A_ZERO

    @staticmethod
    def unit(i: int, value: Octonion) -> "AntiHermitianA":
        """A_i(value): the chart with the i-th octonion slot filled."""
        i = _cyc(i)
        z = Octonion.zero()
        return AntiHermitianA(
            value if i == 1 else z,
            value if i == 2 else z,
            value if i == 3 else z,
        )

    def a(self, i: int) -> Octonion:
        return (self.a1, self.a2, self.a3)[_cyc(i) - 1]

    def __add__(self, other: "AntiHermitianA") -> "AntiHermitianA":
        if self is _A_ZERO:
            return other
        if other is _A_ZERO:
            return self
        return AntiHermitianA(self.a1 + other.a1, self.a2 + other.a2, self.a3 + other.a3)

    def __sub__(self, other: "AntiHermitianA") -> "AntiHermitianA":
        if other is _A_ZERO:
            return self
        return AntiHermitianA(self.a1 - other.a1, self.a2 - other.a2, self.a3 - other.a3)

    def __neg__(self) -> "AntiHermitianA":
        if self is _A_ZERO:
            return self
        return AntiHermitianA(-self.a1, -self.a2, -self.a3)

    def scale(self, factor: ScalarLike) -> "AntiHermitianA":
        if self is _A_ZERO:
            return self
        f = GaussianRational.of(factor)
        if not (f.re.numerator or f.im.numerator):
            return _A_ZERO
        return AntiHermitianA(self.a1.scale(f), self.a2.scale(f), self.a3.scale(f))

    @property
    def is_zero(self) -> bool:
        return self.a1.is_zero and self.a2.is_zero and self.a3.is_zero


_A_ZERO = AntiHermitianA(Octonion.zero(), Octonion.zero(), Octonion.zero())


def apply_hat(M: AntiHermitianA, X: JordanElement) -> JordanElement:
    """The commutator action X -> (M X - X M) / 2 in chart form."""
    if M is _A_ZERO or X is _J_ZERO:
        return _J_ZERO
    a1, a2, a3 = M.a1, M.a2, M.a3
    p1 = a1.inner(X.x1)
    p2 = a2.inner(X.x2)
    p3 = a3.inner(X.x3)
    f1 = (
        a1.scale(X.chi3 - X.chi2) - (X.x2 * a3).conj() + (a2 * X.x3).conj()
    ).scale(_HALF)
    f2 = (
        a2.scale(X.chi1 - X.chi3) - (X.x3 * a1).conj() + (a3 * X.x1).conj()
    ).scale(_HALF)
    f3 = (
        a3.scale(X.chi2 - X.chi1) - (X.x1 * a2).conj() + (a1 * X.x2).conj()
    ).scale(_HALF)
    return JordanElement(p3 - p2, p1 - p3, p2 - p1, f1, f2, f3)


def apply_tilde(T: JordanElement, X: JordanElement) -> JordanElement:
    """The multiplication operator X -> T o X."""
    return jordan_mul(T, X)


def delta_d(coords: DenseVector, X: JordanElement) -> JordanElement:
    """Derivation action of an so(8) element on the chart.

    The three octonion slots receive the element itself and its two
    triality twists respectively; the diagonal is annihilated.
    """
    if coords.dim != DIM_SO8:
        raise ValueError(f"expected 28 so(8) coordinates, got {coords.dim}")
    z = Octonion.zero()
    x1, x2, x3 = X.x1, X.x2, X.x3
    f1 = apply_so8(coords, x1) if not x1.is_zero else z
    f2 = apply_so8(NU.apply(coords), x2) if not x2.is_zero else z
    f3 = apply_so8(NU2.apply(coords), x3) if not x3.is_zero else z
    if f1 is z and f2 is z and f3 is z:
        return _J_ZERO
    return JordanElement(ZERO, ZERO, ZERO, f1, f2, f3)


def jd_coords(a: Octonion, b: Octonion) -> DenseVector:
    """so(8) pair coordinates of the rank-two rotation sum_{i!=j} a_i b_j G_ij."""
    out = [ZERO] * DIM_SO8
    if not (a.is_zero or b.is_zero):
        ac, bc = a.coeffs, b.coeffs
        for k, (i, j) in enumerate(PAIRS):
            v = ac[i] * bc[j] - ac[j] * bc[i]
            if v:
                out[k] = v
    return DenseVector(DIM_SO8, tuple(out))


def twisted_jd(
    a1: Octonion,
    b1: Octonion,
    a2: Octonion,
    b2: Octonion,
    a3: Octonion,
    b3: Octonion,
) -> DenseVector:
    """Slot-twisted sum of the rank-two rotations of three octonion pairs.

    The second and third pairs enter through the two triality twists,
    matching how the chart slots transform under the derivation action.
    """
    d = jd_coords(a1, b1)
    d2 = jd_coords(a2, b2)
    if not d2.is_zero:
        d = d + NU2.apply(d2)
    d3 = jd_coords(a3, b3)
    if not d3.is_zero:
        d = d + NU.apply(d3)
    return d


def vee_dm(A: JordanElement, B: JordanElement) -> tuple[DenseVector, AntiHermitianA]:
    """Rotation and anti-hermitian components of the vee operator.

    Both components ignore the traces of A and B.
    """
    if A.is_zero or B.is_zero:
        return DenseVector.zero(DIM_SO8), _A_ZERO
    d = twisted_jd(A.x1, B.x1, A.x2, B.x2, A.x3, B.x3)
    m1 = (
        B.x1.scale(A.chi2 - A.chi3)
        - A.x1.scale(B.chi2 - B.chi3)
        - (A.x2 * B.x3).conj()
        + (B.x2 * A.x3).conj()
    ).scale(_HALF)
    m2 = (
        B.x2.scale(A.chi3 - A.chi1)
        - A.x2.scale(B.chi3 - B.chi1)
        - (A.x3 * B.x1).conj()
        + (B.x3 * A.x1).conj()
    ).scale(_HALF)
    m3 = (
        B.x3.scale(A.chi1 - A.chi2)
        - A.x3.scale(B.chi1 - B.chi2)
        - (A.x1 * B.x2).conj()
        + (B.x1 * A.x2).conj()
    ).scale(_HALF)
    return d, AntiHermitianA(m1, m2, m3)


def vee(
    A: JordanElement, B: JordanElement
) -> tuple[DenseVector, AntiHermitianA, JordanElement]:
    """Decompose the operator [A~, B~] + (A o B - (A,B)/3 E)~.

    Returns the so(8) coordinates, the anti-hermitian chart, and the
    traceless Jordan chart of the three components.
    """
    if A.is_zero or B.is_zero:
        return DenseVector.zero(DIM_SO8), _A_ZERO, _J_ZERO
    d, m = vee_dm(A, B)
    t = jordan_mul(A, B) - _J_UNIT.scale(jordan_inner(A, B) * _THIRD)
    return d, m, t


@dataclass(slots=True, unsafe_hash=True)
class FreudenthalVector:
    """Element (X, Y, xi, eta) of the 56-dimensional Freudenthal space."""

    X: JordanElement
    Y: JordanElement
    xi: GaussianRational
    eta: GaussianRational

    @staticmethod
    def of(
        X: JordanElement | None = None,
        Y: JordanElement | None = None,
        xi: ScalarLike = 0,
        eta: ScalarLike = 0,
    ) -> "FreudenthalVector":
        return FreudenthalVector(
            X if X is not None else _J_ZERO,
            Y if Y is not None else _J_ZERO,
            GaussianRational.of(xi),
            GaussianRational.of(eta),
        )

    @staticmethod
    def zero() -> "FreudenthalVector":
        return _P_ZERO

    def __add__(self, other: "FreudenthalVector") -> "FreudenthalVector":
        return FreudenthalVector(
            self.X + other.X, self.Y + other.Y, self.xi + other.xi, self.eta + other.eta
        )

    def __sub__(self, other: "FreudenthalVector") -> "FreudenthalVector":
        return FreudenthalVector(
            self.X - other.X, self.Y - other.Y, self.xi - other.xi, self.eta - other.eta
        )

    def __neg__(self) -> "FreudenthalVector":
        return FreudenthalVector(-self.X, -self.Y, -self.xi, -self.eta)

    def scale(self, factor: ScalarLike) -> "FreudenthalVector":
        f = GaussianRational.of(factor)
        return FreudenthalVector(
            self.X.scale(f), self.Y.scale(f), f * self.xi, f * self.eta
        )

    @property
    def is_zero(self) -> bool:
        return (
            self.X.is_zero and self.Y.is_zero and self.xi.is_zero and self.eta.is_zero
        )


_P_ZERO = FreudenthalVector(_J_ZERO, _J_ZERO, ZERO, ZERO)

FREUDENTHAL_DIM = 56


def freudenthal_inner(P: FreudenthalVector, Q: FreudenthalVector) -> GaussianRational:
    """The symmetric inner product (P, Q)."""
    return (
        jordan_inner(P.X, Q.X)
        + jordan_inner(P.Y, Q.Y)
        + P.xi * Q.xi
        + P.eta * Q.eta
    )


def freudenthal_skew(P: FreudenthalVector, Q: FreudenthalVector) -> GaussianRational:
    """The symplectic form {P, Q}."""
    return (
        jordan_inner(P.X, Q.Y)
        - jordan_inner(Q.X, P.Y)
        + P.xi * Q.eta
        - Q.xi * P.eta
    )


def p_cross(
    P: FreudenthalVector, Q: FreudenthalVector
) -> tuple[
    DenseVector,
    AntiHermitianA,
    JordanElement,
    JordanElement,
    JordanElement,
    GaussianRational,
]:
    """Decompose the cross operator P x Q on the Freudenthal space.

    Returns the six chart components (so(8) coordinates, anti-hermitian
    chart, traceless Jordan chart, two Jordan elements, scalar) of the
    operator; the first three are the decomposition of its trace-free
    endomorphism part -(X v W + Z v Y)/2.
    """
    X, Y, xi, eta = P.X, P.Y, P.xi, P.eta
    Z, W, zeta, omega = Q.X, Q.Y, Q.xi, Q.eta
    d1, m1, t1 = vee(X, W)
    d2, m2, t2 = vee(Z, Y)
    d = (d1 + d2).scale(_NEG_HALF)
    m = (m1 + m2).scale(_NEG_HALF)
    t = (t1 + t2).scale(_NEG_HALF)
    a = (
        freudenthal_cross(Y, W).scale(_NEG_HALF)
        + Z.scale(_QUARTER * xi)
        + X.scale(_QUARTER * zeta)
    )
    b = (
        freudenthal_cross(X, Z).scale(_HALF)
        - W.scale(_QUARTER * eta)
        - Y.scale(_QUARTER * omega)
    )
    rho = (
        jordan_inner(X, W)
        + jordan_inner(Z, Y)
        - (xi * omega + zeta * eta) * 3
    ) * _EIGHTH
    return d, m, t, a, b, rho


def _build_jordan_basis() -> tuple[JordanElement, ...]:
    out = list(_E_UNITS)
    for slot in (1, 2, 3):
        for k in range(8):
            out.append(JordanElement.f_unit(slot, Octonion.basis(k)))
    return tuple(out)


_J_BASIS = _build_jordan_basis()
