"""The graded tower of bracket algebras over the octonion charts.

Four vector spaces stack on top of each other:

* 52 coordinates: pairs (D, M) of an so(8) coordinate vector and an
  anti-hermitian chart;
* 78 coordinates: triples (D, M, T) adding a traceless Jordan chart;
* 133 coordinates: sextuples (D, M, T, A, B, rho) adding two Jordan
  charts and a scalar;
* 248 coordinates: stacks (Phi, P, Q, r, s, u) adding two Freudenthal
  vectors and three scalars.

Each space carries an explicit Lie bracket given by closed chart-level
formulas (no operator composition, no solving), and each space embeds
into the next by zero extension so that the brackets restrict.  The
``flatten``/``unflatten`` pair fixes the coordinate order used by every
matrix built downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from exalg.cayley import DIM_SO8, NU, NU2, Octonion, apply_so8, so8_bracket
from exalg.exact import ZERO, DenseVector, GaussianRational, ScalarLike, gr
from exalg.jordan import (
    AntiHermitianA,
    FreudenthalVector,
    JordanElement,
    apply_hat,
    delta_d,
    freudenthal_cross,
    freudenthal_skew,
    jordan_inner,
    jordan_mul,
    p_cross,
    twisted_jd,
    vee,
    vee_dm,
)

DIM_R4 = 52
DIM_R6 = 78
DIM_R7 = 133
DIM_R8 = 248

_HALF = gr(Q(1, 2))
_THIRD = gr(Q(1, 3))
_TWO_THIRDS = gr(Q(2, 3))
_QUARTER = gr(Q(1, 4))
_NEG_QUARTER = gr(Q(-1, 4))
_EIGHTH = gr(Q(1, 8))
_NEG_EIGHTH = gr(Q(-1, 8))


@dataclass(slots=True, unsafe_hash=True)
class R4Element:
    """Pair (D, M): so(8) coordinates plus an anti-hermitian chart."""

    D: DenseVector
    M: AntiHermitianA

    def __post_init__(self) -> None:
        if self.D.dim != DIM_SO8:
            raise ValueError(f"D needs {DIM_SO8} coordinates, got {self.D.dim}")

    @staticmethod
    def of(
        D: DenseVector | None = None, M: AntiHermitianA | None = None
    ) -> "R4Element":
        return R4Element(
            D if D is not None else DenseVector.zero(DIM_SO8),
            M if M is not None else AntiHermitianA.zero(),
        )

    @staticmethod
    def zero() -> "R4Element":
        return _R4_ZERO

    def __add__(self, other: "R4Element") -> "R4Element":
        if self is _R4_ZERO:
            return other
        if other is _R4_ZERO:
            return self
        return R4Element(self.D + other.D, self.M + other.M)

    def __sub__(self, other: "R4Element") -> "R4Element":
        if other is _R4_ZERO:
            return self
        return R4Element(self.D - other.D, self.M - other.M)

    def __neg__(self) -> "R4Element":
        if self is _R4_ZERO:
            return self
        return R4Element(-self.D, -self.M)

    def scale(self, factor: ScalarLike) -> "R4Element":
        if self is _R4_ZERO:
            return self
        f = GaussianRational.of(factor)
        return R4Element(self.D.scale(f), self.M.scale(f))

    @property
    def is_zero(self) -> bool:
        if self is _R4_ZERO:
            return True
        return self.D.is_zero and self.M.is_zero

    def as_r6(self) -> "R6Element":
        return R6Element(self.D, self.M, JordanElement.zero())


@dataclass(slots=True, unsafe_hash=True)
class R6Element:
    """Triple (D, M, T) with T a traceless Jordan chart."""

    D: DenseVector
    M: AntiHermitianA
    T: JordanElement

    def __post_init__(self) -> None:
        if self.D.dim != DIM_SO8:
            raise ValueError(f"D needs {DIM_SO8} coordinates, got {self.D.dim}")
        if not self.T.trace().is_zero:
            raise ValueError("T must be traceless")

    @staticmethod
    def of(
        D: DenseVector | None = None,
        M: AntiHermitianA | None = None,
        T: JordanElement | None = None,
    ) -> "R6Element":
        return R6Element(
            D if D is not None else DenseVector.zero(DIM_SO8),
            M if M is not None else AntiHermitianA.zero(),
            T if T is not None else JordanElement.zero(),
        )

    @staticmethod
    def zero() -> "R6Element":
        return _R6_ZERO

    def __add__(self, other: "R6Element") -> "R6Element":
        if self is _R6_ZERO:
            return other
        if other is _R6_ZERO:
            return self
        return R6Element(self.D + other.D, self.M + other.M, self.T + other.T)

    def __sub__(self, other: "R6Element") -> "R6Element":
        if other is _R6_ZERO:
            return self
        return R6Element(self.D - other.D, self.M - other.M, self.T - other.T)

    def __neg__(self) -> "R6Element":
        if self is _R6_ZERO:
            return self
        return R6Element(-self.D, -self.M, -self.T)

    def scale(self, factor: ScalarLike) -> "R6Element":
        if self is _R6_ZERO:
            return self
        f = GaussianRational.of(factor)
        return R6Element(self.D.scale(f), self.M.scale(f), self.T.scale(f))

    @property
    def is_zero(self) -> bool:
        if self is _R6_ZERO:
            return True
        return self.D.is_zero and self.M.is_zero and self.T.is_zero

    def as_r7(self) -> "R7Element":
        return R7Element(
            self.D, self.M, self.T, JordanElement.zero(), JordanElement.zero(), ZERO
        )


@dataclass(slots=True, unsafe_hash=True)
class R7Element:
    """Sextuple (D, M, T, A, B, rho): the 133-coordinate algebra."""

    D: DenseVector
    M: AntiHermitianA
    T: JordanElement
    A: JordanElement
    B: JordanElement
    rho: GaussianRational

    def __post_init__(self) -> None:
        if self.D.dim != DIM_SO8:
            raise ValueError(f"D needs {DIM_SO8} coordinates, got {self.D.dim}")
        if not self.T.trace().is_zero:
            raise ValueError("T must be traceless")

    @staticmethod
    def of(
        D: DenseVector | None = None,
        M: AntiHermitianA | None = None,
        T: JordanElement | None = None,
        A: JordanElement | None = None,
        B: JordanElement | None = None,
        rho: ScalarLike = 0,
    ) -> "R7Element":
        z = JordanElement.zero()
        return R7Element(
            D if D is not None else DenseVector.zero(DIM_SO8),
            M if M is not None else AntiHermitianA.zero(),
            T if T is not None else z,
            A if A is not None else z,
            B if B is not None else z,
            GaussianRational.of(rho),
        )

    @staticmethod
    def zero() -> "R7Element":
        return _R7_ZERO

    def __add__(self, other: "R7Element") -> "R7Element":
        if self is _R7_ZERO:
            return other
        if other is _R7_ZERO:
            return self
        return R7Element(
            self.D + other.D,
            self.M + other.M,
            self.T + other.T,
            self.A + other.A,
            self.B + other.B,
            self.rho + other.rho,
        )

    def __sub__(self, other: "R7Element") -> "R7Element":
        if other is _R7_ZERO:
            return self
        return R7Element(
            self.D - other.D,
            self.M - other.M,
            self.T - other.T,
            self.A - other.A,
            self.B - other.B,
            self.rho - other.rho,
        )

    def __neg__(self) -> "R7Element":
        if self is _R7_ZERO:
            return self
        return R7Element(-self.D, -self.M, -self.T, -self.A, -self.B, -self.rho)

    def scale(self, factor: ScalarLike) -> "R7Element":
        if self is _R7_ZERO:
            return self
        f = GaussianRational.of(factor)
        return R7Element(
            self.D.scale(f),
            self.M.scale(f),
            self.T.scale(f),
            self.A.scale(f),
            self.B.scale(f),
            f * self.rho,
        )

    @property
    def is_zero(self) -> bool:
        if self is _R7_ZERO:
            return True
        return (
            self.D.is_zero
            and self.M.is_zero
            and self.T.is_zero
            and self.A.is_zero
            and self.B.is_zero
            and self.rho.is_zero
        )

    def as_r8(self) -> "R8Element":
        return R8Element(
            self, FreudenthalVector.zero(), FreudenthalVector.zero(), ZERO, ZERO, ZERO
        )


@dataclass(slots=True, unsafe_hash=True)
class R8Element:
    """Stack (Phi, P, Q, r, s, u): the full 248-coordinate algebra."""

    Phi: R7Element
    P: FreudenthalVector
    Q: FreudenthalVector
    r: GaussianRational
    s: GaussianRational
    u: GaussianRational

    @staticmethod
    def of(
        Phi: R7Element | None = None,
        P: FreudenthalVector | None = None,
        Q: FreudenthalVector | None = None,
        r: ScalarLike = 0,
        s: ScalarLike = 0,
        u: ScalarLike = 0,
    ) -> "R8Element":
        return R8Element(
            Phi if Phi is not None else R7Element.zero(),
            P if P is not None else FreudenthalVector.zero(),
            Q if Q is not None else FreudenthalVector.zero(),
            GaussianRational.of(r),
            GaussianRational.of(s),
            GaussianRational.of(u),
        )

    @staticmethod
    def zero() -> "R8Element":
        return _R8_ZERO

    def __add__(self, other: "R8Element") -> "R8Element":
        if self is _R8_ZERO:
            return other
        if other is _R8_ZERO:
            return self
        return R8Element(
            self.Phi + other.Phi,
            self.P + other.P,
            self.Q + other.Q,
            self.r + other.r,
            self.s + other.s,
            self.u + other.u,
        )

    def __sub__(self, other: "R8Element") -> "R8Element":
        if other is _R8_ZERO:
            return self
        return R8Element(
            self.Phi - other.Phi,
            self.P - other.P,
            self.Q - other.Q,
            self.r - other.r,
            self.s - other.s,
            self.u - other.u,
        )

    def __neg__(self) -> "R8Element":
        if self is _R8_ZERO:
            return self
        return R8Element(-self.Phi, -self.P, -self.Q, -self.r, -self.s, -self.u)

    def scale(self, factor: ScalarLike) -> "R8Element":
        if self is _R8_ZERO:
            return self
        f = GaussianRational.of(factor)
        return R8Element(
            self.Phi.scale(f),
            self.P.scale(f),
            self.Q.scale(f),
            f * self.r,
            f * self.s,
            f * self.u,
        )

    @property
    def is_zero(self) -> bool:
        if self is _R8_ZERO:
            return True
        return (
            self.Phi.is_zero
            and self.P.is_zero
            and self.Q.is_zero
            and self.r.is_zero
            and self.s.is_zero
            and self.u.is_zero
        )


_R4_ZERO = R4Element(DenseVector.zero(DIM_SO8), AntiHermitianA.zero())
_R6_ZERO = R6Element(DenseVector.zero(DIM_SO8), AntiHermitianA.zero(), JordanElement.zero())
_R7_ZERO = R7Element(
    DenseVector.zero(DIM_SO8),
    AntiHermitianA.zero(),
    JordanElement.zero(),
    JordanElement.zero(),
    JordanElement.zero(),
    ZERO,
)
_R8_ZERO = R8Element(
    _R7_ZERO, FreudenthalVector.zero(), FreudenthalVector.zero(), ZERO, ZERO, ZERO
)


def _rotate_slots(D: DenseVector, M: AntiHermitianA) -> AntiHermitianA:
    """Rotate each anti-hermitian slot by the matching triality twist."""
    if M.is_zero or D.is_zero:
        return AntiHermitianA.zero()
    z = Octonion.zero()
    a1 = apply_so8(D, M.a1) if not M.a1.is_zero else z
    a2 = apply_so8(NU.apply(D), M.a2) if not M.a2.is_zero else z
    a3 = apply_so8(NU2.apply(D), M.a3) if not M.a3.is_zero else z
    return AntiHermitianA(a1, a2, a3)


def _m_cross(M1: AntiHermitianA, M2: AntiHermitianA) -> AntiHermitianA:
    """Anti-hermitian part of the product of two anti-hermitian charts.

    Slot s collects half the conjugated difference of the cross products
    of the other two slots.
    """
    a1 = ((M2.a2 * M1.a3) - (M1.a2 * M2.a3)).conj().scale(_HALF)
    a2 = ((M2.a3 * M1.a1) - (M1.a3 * M2.a1)).conj().scale(_HALF)
    a3 = ((M2.a1 * M1.a2) - (M1.a1 * M2.a2)).conj().scale(_HALF)
    return AntiHermitianA(a1, a2, a3)


def _bracket4_parts(
    D1: DenseVector, M1: AntiHermitianA, D2: DenseVector, M2: AntiHermitianA
) -> tuple[DenseVector, AntiHermitianA]:
    D = so8_bracket(D1, D2)
    both_m = not (M1.is_zero or M2.is_zero)
    if both_m:
        D = D - twisted_jd(M1.a1, M2.a1, M1.a2, M2.a2, M1.a3, M2.a3)
    M = _rotate_slots(D1, M2) - _rotate_slots(D2, M1)
    if both_m:
        M = M + _m_cross(M1, M2)
    return D, M


def bracket4(d1: R4Element, d2: R4Element) -> R4Element:
    """Bracket of the 52-coordinate algebra."""
    D, M = _bracket4_parts(d1.D, d1.M, d2.D, d2.M)
    return R4Element(D, M)


def _act_on_jordan(
    D: DenseVector, M: AntiHermitianA, X: JordanElement
) -> JordanElement:
    """Derivation plus commutator action of a (D, M) pair on a chart."""
    return delta_d(D, X) + apply_hat(M, X)


def bracket6_parts(
    D1: DenseVector,
    M1: AntiHermitianA,
    T1: JordanElement,
    D2: DenseVector,
    M2: AntiHermitianA,
    T2: JordanElement,
) -> tuple[DenseVector, AntiHermitianA, JordanElement]:
    """Chart-level 78-coordinate bracket, valid for arbitrary Jordan T.

    The formulas never see the traces of T1 and T2 (the unit chart acts
    as zero and commutes with everything), so this is the extension of
    the bracket to non-traceless third slots.
    """
    D, M = _bracket4_parts(D1, M1, D2, M2)
    if not (T1.is_zero or T2.is_zero):
        dv, mv = vee_dm(T1, T2)
        D = D + dv
        M = M + mv
    T = _act_on_jordan(D1, M1, T2) - _act_on_jordan(D2, M2, T1)
    return D, M, T


def bracket6(phi1: R6Element, phi2: R6Element) -> R6Element:
    """Bracket of the 78-coordinate algebra."""
    D, M, T = bracket6_parts(phi1.D, phi1.M, phi1.T, phi2.D, phi2.M, phi2.T)
    return R6Element(D, M, T)


def _e7_row(f: R7Element, X: JordanElement, upper: bool) -> JordanElement:
    """One row of the 133-coordinate action on a Jordan chart.

    The upper row applies delta_d + hat + tilde + (2/3) rho; the lower
    row (the negative transpose with respect to the trace form) flips
    the tilde and rho signs.
    """
    if X.is_zero:
        return JordanElement.zero()
    out = _act_on_jordan(f.D, f.M, X)
    prod = jordan_mul(f.T, X)
    scaled = X.scale(_TWO_THIRDS * f.rho)
    if upper:
        return out + prod + scaled
    return out - prod - scaled


def bracket7(f1: R7Element, f2: R7Element) -> R7Element:
    """Bracket of the 133-coordinate algebra."""
    D, M, T = bracket6_parts(f1.D, f1.M, f1.T, f2.D, f2.M, f2.T)
    if not (f1.A.is_zero or f2.B.is_zero):
        dv, mv, tv = vee(f1.A, f2.B)
        D = D + dv.scale(2)
        M = M + mv.scale(2)
        T = T + tv.scale(2)
    if not (f2.A.is_zero or f1.B.is_zero):
        dv, mv, tv = vee(f2.A, f1.B)
        D = D - dv.scale(2)
        M = M - mv.scale(2)
        T = T - tv.scale(2)
    A = _e7_row(f1, f2.A, upper=True) - _e7_row(f2, f1.A, upper=True)
    B = _e7_row(f1, f2.B, upper=False) - _e7_row(f2, f1.B, upper=False)
    rho = jordan_inner(f1.A, f2.B) - jordan_inner(f1.B, f2.A)
    return R7Element(D, M, T, A, B, rho)


def bracket8(r1: R8Element, r2: R8Element) -> R8Element:
    """Bracket of the full 248-coordinate algebra."""
    f = bracket7(r1.Phi, r2.Phi)
    D, M, T, A, B, rho = f.D, f.M, f.T, f.A, f.B, f.rho
    if not (r1.P.is_zero or r2.Q.is_zero):
        d, m, t, a, b, rh = p_cross(r1.P, r2.Q)
        D = D + d
        M = M + m
        T = T + t
        A = A + a
        B = B + b
        rho = rho + rh
    if not (r2.P.is_zero or r1.Q.is_zero):
        d, m, t, a, b, rh = p_cross(r2.P, r1.Q)
        D = D - d
        M = M - m
        T = T - t
        A = A - a
        B = B - b
        rho = rho - rh
    P = (
        apply_r7(r1.Phi, r2.P)
        - apply_r7(r2.Phi, r1.P)
        + r2.P.scale(r1.r)
        - r1.P.scale(r2.r)
        + r2.Q.scale(r1.s)
        - r1.Q.scale(r2.s)
    )
    Qn = (
        apply_r7(r1.Phi, r2.Q)
        - apply_r7(r2.Phi, r1.Q)
        - r2.Q.scale(r1.r)
        + r1.Q.scale(r2.r)
        + r2.P.scale(r1.u)
        - r1.P.scale(r2.u)
    )
    rn = (
        _NEG_EIGHTH * freudenthal_skew(r1.P, r2.Q)
        + _EIGHTH * freudenthal_skew(r2.P, r1.Q)
        + r1.s * r2.u
        - r2.s * r1.u
    )
    sn = _QUARTER * freudenthal_skew(r1.P, r2.P) + (r1.r * r2.s - r2.r * r1.s) * 2
    un = _NEG_QUARTER * freudenthal_skew(r1.Q, r2.Q) - (r1.r * r2.u - r2.r * r1.u) * 2
    return R8Element(R7Element(D, M, T, A, B, rho), P, Qn, rn, sn, un)


def apply_r4(d: R4Element, X: JordanElement) -> JordanElement:
    """Action of a 52-coordinate element on a Jordan chart."""
    return _act_on_jordan(d.D, d.M, X)


def apply_r6(phi: R6Element, X: JordanElement) -> JordanElement:
    """Action of a 78-coordinate element on a Jordan chart."""
    return _act_on_jordan(phi.D, phi.M, X) + jordan_mul(phi.T, X)


def apply_r7(f: R7Element, P: FreudenthalVector) -> FreudenthalVector:
    """Action of a 133-coordinate element on a Freudenthal vector."""
    if f.is_zero or P.is_zero:
        return FreudenthalVector.zero()
    X, Y, xi, eta = P.X, P.Y, P.xi, P.eta
    Xn = (
        _act_on_jordan(f.D, f.M, X)
        + jordan_mul(f.T, X)
        - X.scale(_THIRD * f.rho)
        + freudenthal_cross(f.B, Y).scale(2)
        + f.A.scale(eta)
    )
    Yn = (
        freudenthal_cross(f.A, X).scale(2)
        + _act_on_jordan(f.D, f.M, Y)
        - jordan_mul(f.T, Y)
        + Y.scale(_THIRD * f.rho)
        + f.B.scale(xi)
    )
    xin = jordan_inner(f.A, Y) + f.rho * xi
    etan = jordan_inner(f.B, X) - f.rho * eta
    return FreudenthalVector(Xn, Yn, xin, etan)


_LEVEL_DIMS = {4: DIM_R4, 6: DIM_R6, 7: DIM_R7, 8: DIM_R8}


def _fv_m(M: AntiHermitianA) -> tuple[GaussianRational, ...]:
    return M.a1.coeffs + M.a2.coeffs + M.a3.coeffs


def _fv_jordan(X: JordanElement) -> tuple[GaussianRational, ...]:
    return (X.chi1, X.chi2, X.chi3) + X.x1.coeffs + X.x2.coeffs + X.x3.coeffs


def _fv_traceless(T: JordanElement) -> tuple[GaussianRational, ...]:
    # the third diagonal entry is determined by the first two
    return (T.chi1, T.chi2) + T.x1.coeffs + T.x2.coeffs + T.x3.coeffs


def _fv_p(P: FreudenthalVector) -> tuple[GaussianRational, ...]:
    return _fv_jordan(P.X) + _fv_jordan(P.Y) + (P.xi, P.eta)


def _fv_r7(f: R7Element) -> tuple[GaussianRational, ...]:
    return (
        f.D.entries
        + _fv_m(f.M)
        + _fv_traceless(f.T)
        + _fv_jordan(f.A)
        + _fv_jordan(f.B)
        + (f.rho,)
    )


def flatten(x: R4Element | R6Element | R7Element | R8Element) -> DenseVector:
    """Coordinate vector of an element in the canonical field order."""
    if isinstance(x, R4Element):
        return DenseVector(DIM_R4, x.D.entries + _fv_m(x.M))
    if isinstance(x, R6Element):
        return DenseVector(DIM_R6, x.D.entries + _fv_m(x.M) + _fv_traceless(x.T))
    if isinstance(x, R7Element):
        return DenseVector(DIM_R7, _fv_r7(x))
    if isinstance(x, R8Element):
        return DenseVector(
            DIM_R8, _fv_r7(x.Phi) + _fv_p(x.P) + _fv_p(x.Q) + (x.r, x.s, x.u)
        )
    raise TypeError(f"cannot flatten a {type(x).__name__}")


def _oct_at(e: tuple[GaussianRational, ...], k: int) -> Octonion:
    return Octonion(e[k : k + 8])


def _m_at(e: tuple[GaussianRational, ...], k: int) -> AntiHermitianA:
    return AntiHermitianA(_oct_at(e, k), _oct_at(e, k + 8), _oct_at(e, k + 16))


def _t_at(e: tuple[GaussianRational, ...], k: int) -> JordanElement:
    tau1, tau2 = e[k], e[k + 1]
    return JordanElement(
        tau1, tau2, -(tau1 + tau2), _oct_at(e, k + 2), _oct_at(e, k + 10), _oct_at(e, k + 18)
    )


def _jordan_at(e: tuple[GaussianRational, ...], k: int) -> JordanElement:
    return JordanElement(
        e[k], e[k + 1], e[k + 2], _oct_at(e, k + 3), _oct_at(e, k + 11), _oct_at(e, k + 19)
    )


def _p_at(e: tuple[GaussianRational, ...], k: int) -> FreudenthalVector:
    return FreudenthalVector(
        _jordan_at(e, k), _jordan_at(e, k + 27), e[k + 54], e[k + 55]
    )


def _r7_at(e: tuple[GaussianRational, ...]) -> R7Element:
    return R7Element(
        DenseVector(DIM_SO8, e[:DIM_SO8]),
        _m_at(e, 28),
        _t_at(e, 52),
        _jordan_at(e, 78),
        _jordan_at(e, 105),
        e[132],
    )


def unflatten(
    v: DenseVector, level: int
) -> R4Element | R6Element | R7Element | R8Element:
    """Rebuild an element from its coordinate vector at the given level."""
    try:
        expected = _LEVEL_DIMS[level]
    except KeyError:
        raise ValueError(f"unknown level {level}; expected one of 4, 6, 7, 8") from None
    if v.dim != expected:
        raise ValueError(f"level {level} needs {expected} coordinates, got {v.dim}")
    e = v.entries
    if level == 4:
        return R4Element(DenseVector(DIM_SO8, e[:DIM_SO8]), _m_at(e, 28))
    if level == 6:
        return R6Element(DenseVector(DIM_SO8, e[:DIM_SO8]), _m_at(e, 28), _t_at(e, 52))
    if level == 7:
        return _r7_at(e)
    return R8Element(
        _r7_at(e), _p_at(e, 133), _p_at(e, 189), e[245], e[246], e[247]
    )
