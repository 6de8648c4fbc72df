"""Finite Galilean and non-Galilean transformations.

Coordinate maps act on five-vectors ``(x1, x2, x3, x4, x5)``.  Spinor matrices
are the Lambda matrices that carry the Dirac field between frames, and the
kinematics helpers follow the inertial and rest masses through a
non-Galilean boost.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from galspin.clifford import GAMMA, METRIC, SPATIAL, build_derived_matrices, eps3
from galspin.errors import DegenerateFrame, InvalidMass, UnsupportedRotationAngle
from galspin.exact import HALF, I, INV_SQRT2, ONE, ZERO, ExactScalar, Matrix, PolyFrac, exact_sqrt, scalar, symbol
from galspin.report import CheckReport, equal_witness, zero_witness

I4 = Matrix.identity(4)
I3 = Matrix.identity(3)

REF_KIN = "inertial and rest mass under non-Galilean boosts"

# cos and sin of n*pi/4, n = 0..7
_C = [ONE, INV_SQRT2, ZERO, -INV_SQRT2, -ONE, -INV_SQRT2, ZERO, INV_SQRT2]
_S = [ZERO, INV_SQRT2, ONE, INV_SQRT2, ZERO, -INV_SQRT2, -ONE, -INV_SQRT2]


def _eighths(angle) -> int:
    """Angle given in units of pi; return n with angle = n*pi/4."""
    q = Fraction(angle) * 4
    if q.denominator != 1:
        raise UnsupportedRotationAngle(f"angle {angle}*pi has no closed form in Q(i, sqrt2)")
    return int(q) % 8


def exact_cos_sin(angle):
    n = _eighths(angle)
    return _C[n], _S[n]


def rotation_matrix(axis: int, angle) -> Matrix:
    """3x3 rotation by ``angle * pi`` about a coordinate axis (right-handed)."""
    c, s = exact_cos_sin(angle)
    i, j = [b for b in SPATIAL if b != axis]
    if axis == 2:
        i, j = j, i  # keep the (3,1) orientation for rotations about y
    r = {(axis - 1, axis - 1): ONE, (i - 1, i - 1): c, (j - 1, j - 1): c,
         (i - 1, j - 1): -s, (j - 1, i - 1): s}
    return Matrix((3, 3), r)


def _vec(v, n=3):
    v = [scalar(x) if not isinstance(x, (ExactScalar, PolyFrac)) else x for x in v]
    if len(v) != n:
        raise ValueError(f"expected {n} components, got {len(v)}")
    return v


def _dot(u, v):
    acc = ZERO
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


@dataclass(frozen=True)
class GalileanTransform:
    R: Matrix
    beta: tuple

    def __init__(self, R=None, beta=(0, 0, 0)):
        R = I3 if R is None else (R if isinstance(R, Matrix) else Matrix.from_rows(R))
        if R.transpose() * R != I3:
            raise ValueError("R is not orthogonal")
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "beta", tuple(_vec(beta)))

    def compose(self, first: "GalileanTransform") -> "GalileanTransform":
        """self after first."""
        Rb = self.R * Matrix.column(first.beta)
        return GalileanTransform(self.R * first.R, [Rb[i, 0] + self.beta[i] for i in range(3)])

    def inverse(self) -> "GalileanTransform":
        Rt = self.R.transpose()
        b = Rt * Matrix.column(self.beta)
        return GalileanTransform(Rt, [-b[i, 0] for i in range(3)])


@dataclass(frozen=True)
class NonGalileanTransform:
    tau: tuple

    def __init__(self, tau=(0, 0, 0)):
        object.__setattr__(self, "tau", tuple(_vec(tau)))


def apply_coordinate_map(t, x) -> list:
    x = _vec(x, 5)
    xs, x4, x5 = x[:3], x[3], x[4]
    if isinstance(t, GalileanTransform):
        Rx = t.R * Matrix.column(xs)
        Rx = [Rx[i, 0] for i in range(3)]
        b2 = _dot(t.beta, t.beta)
        out = [Rx[i] - t.beta[i] * x4 for i in range(3)]
        return out + [x4, x5 - _dot(Rx, t.beta) + HALF * b2 * x4]
    if isinstance(t, NonGalileanTransform):
        t2 = _dot(t.tau, t.tau)
        out = [xs[i] - t.tau[i] * x5 for i in range(3)]
        return out + [x4 - _dot(xs, t.tau) + HALF * t2 * x5, x5]
    raise TypeError(f"not a transformation: {t!r}")


def interval(x):
    """g_{mu nu} x^mu x^nu = -|x|^2 + 2 x4 x5."""
    return METRIC.dot(x, x)


# spinor matrices --------------------------------------------------------

def galilean_boost_matrix(beta) -> Matrix:
    """1 + (1/2) gamma^4 gamma^a beta_a; the series stops because (gamma^4)^2 = 0."""
    X = Matrix.zeros(4)
    for a, b in zip(SPATIAL, _vec(beta)):
        X = X + (GAMMA[4] * GAMMA[a]).scale(b)
    return I4 + X.scale(HALF)


def non_galilean_boost_matrix(tau) -> Matrix:
    X = Matrix.zeros(4)
    for a, t in zip(SPATIAL, _vec(tau)):
        X = X + (GAMMA[5] * GAMMA[a]).scale(t)
    return I4 + X.scale(HALF)


def rotation_generator(c: int) -> Matrix:
    """(1/2) eps^{abc} gamma^a gamma^b for fixed c; equals -i Sigma^c."""
    out = Matrix.zeros(4)
    for a in SPATIAL:
        for b in SPATIAL:
            e = eps3(a, b, c)
            if e:
                out = out + (GAMMA[a] * GAMMA[b]).scale(HALF * e)
    return out


def rotation_spinor_matrix(axis: int, angle) -> Matrix:
    """exp(angle*pi * rotation_generator(axis)) = cos - i sin Sigma^axis.

    The exponent squares to -1, so the series sums in closed form.  The vector
    rotation it induces on gamma^a is through twice the angle.
    """
    c, s = exact_cos_sin(angle)
    return I4.scale(c) + rotation_generator(axis).scale(s)


def spinor_transform_matrix(kind: str, param, axis: int = 3) -> Matrix:
    if kind == "rotation":
        return rotation_spinor_matrix(axis, param)
    if kind == "galilean_boost":
        return galilean_boost_matrix(param)
    if kind == "non_galilean_boost":
        return non_galilean_boost_matrix(param)
    raise ValueError(f"unknown transformation kind {kind!r}")


def inverse_boost(L: Matrix) -> Matrix:
    """Inverse of a unipotent boost matrix: 2 - L."""
    return I4.scale(2) - L


def _conj(L: Matrix, A: Matrix) -> Matrix:
    return inverse_boost(L) * A * L


def verify_gamma_conjugation(beta=None, tau=None) -> CheckReport:
    """Lambda^-1 gamma Lambda for both boost families with symbolic parameters.

    ``beta`` and ``tau`` are the lower-index parameters contracted with
    gamma^a in Lambda.  The upper-index components appearing on the right are
    beta^a = -beta_a.
    """
    beta = [symbol(f"b{a}") for a in SPATIAL] if beta is None else _vec(beta)
    tau = [symbol(f"t{a}") for a in SPATIAL] if tau is None else _vec(tau)
    rep = CheckReport("gamma conjugation")
    for label, par, near, far, L in (
        ("Galilean", beta, 4, 5, galilean_boost_matrix(beta)),
        ("non-Galilean", tau, 5, 4, non_galilean_boost_matrix(tau)),
    ):
        ref = "Lambda conjugation of gamma matrices" if label == "Galilean" else \
            "Lambda conjugation under the x4-x5 exchange"
        Linv = inverse_boost(L)
        rep.check(f"{label} Lambda inverse", ref, lambda L=L, Linv=Linv: equal_witness(Linv * L, I4))
        rep.check(f"{label} Lambda unipotent", ref, lambda L=L: zero_witness((L - I4) * (L - I4)))
        for a in SPATIAL:
            up = -par[a - 1]  # raise with g^{aa} = -1
            rhs = GAMMA[a] - GAMMA[near].scale(up)
            rep.check(f"{label} gamma{a}", ref,
                      lambda L=L, a=a, rhs=rhs: equal_witness(_conj(L, GAMMA[a]), rhs))
        rep.check(f"{label} gamma{near} fixed", ref,
                  lambda L=L, near=near: equal_witness(_conj(L, GAMMA[near]), GAMMA[near]))
        sq = _dot(par, par)
        rhs = GAMMA[far] + GAMMA[near].scale(HALF * sq)
        for a in SPATIAL:
            # beta_a gamma^a: the contraction of a lower parameter with an upper gamma
            rhs = rhs + GAMMA[a].scale(par[a - 1])
        rep.check(f"{label} gamma{far}", ref,
                  lambda L=L, far=far, rhs=rhs: equal_witness(_conj(L, GAMMA[far]), rhs))
    return rep


def verify_rotations() -> CheckReport:
    """Closed-form rotation matrices against the vector rotation of gamma^a."""
    rep = CheckReport("spinor rotations")
    dm = build_derived_matrices(GAMMA)
    for c in SPATIAL:
        rep.check(f"rotation generator {c} is -i Sigma{c}", "rotation matrix for the Dirac field",
                  lambda c=c: equal_witness(rotation_generator(c), dm.Sigma[c].scale(-I)))
        for n in range(8):
            angle = Fraction(n, 4)
            L = rotation_spinor_matrix(c, angle)
            Linv = rotation_spinor_matrix(c, -angle)

            def check(L=L, Linv=Linv, c=c, angle=angle):
                if Linv * L != I4:
                    return False, "inverse failed"
                R = rotation_matrix(c, -2 * angle)
                for a in SPATIAL:
                    rhs = Matrix.zeros(4)
                    for b in SPATIAL:
                        rhs = rhs + GAMMA[b].scale(R[b - 1, a - 1])
                    ok, w = equal_witness(Linv * GAMMA[a] * L, rhs)
                    if not ok:
                        return False, f"gamma{a}: {w}"
                return True, None
            rep.check(f"rotation axis {c} angle {angle}pi acts as vector rotation by twice the angle",
                      "rotation matrix for the Dirac field", check)
    return rep


# kinematics -------------------------------------------------------------

@dataclass(frozen=True)
class KinematicState:
    """Inertial mass m, rest mass m0, k and spatial momentum p.

    ``cbar`` follows from k^2 = 2 m m0 cbar^2 and the energy from the
    dispersion relation E = (p^2 + k^2) / 2m.  ``frame`` records whether the
    state was reached by a non-Galilean boost.
    """
    m: ExactScalar
    m0: ExactScalar
    k: ExactScalar
    p: tuple
    frame: str = "Galilean"

    @classmethod
    def make(cls, m, m0, k, p=(0, 0, 0), frame="Galilean") -> "KinematicState":
        m, m0, k = scalar(m), scalar(m0), scalar(k)
        if not m.is_real() or m.sign() == 0:
            raise InvalidMass(f"inertial mass must be a nonzero real number, got {m}")
        if not m0.is_real() or m0.sign() == 0:
            raise InvalidMass(f"rest mass must be a nonzero real number, got {m0}")
        return cls(m, m0, k, tuple(_vec(p)), frame)

    @classmethod
    def from_cbar(cls, m, k, cbar, p=(0, 0, 0)) -> "KinematicState":
        """Fix m, k and cbar; the rest mass follows as k^2 / (2 m cbar^2)."""
        m, k, cbar = scalar(m), scalar(k), scalar(cbar)
        return cls.make(m, k * k / (2 * m * cbar * cbar), k, p)

    @property
    def cbar_sq(self) -> ExactScalar:
        return self.k * self.k / (2 * self.m * self.m0)

    @property
    def cbar(self) -> ExactScalar:
        return exact_sqrt(self.cbar_sq)

    @property
    def E(self) -> ExactScalar:
        return (_dot(self.p, self.p) + self.k * self.k) / (2 * self.m)

    def p_lower(self) -> list:
        """Five-momentum (p, E/cbar, m cbar)."""
        cb = self.cbar
        return list(self.p) + [self.E / cb, self.m * cb]

    def c_sq(self, cbar_sq=None) -> ExactScalar:
        """c^2 from cbar^2 = c^2 m / m0 (rest energy m c^2 = m0 cbar^2)."""
        cb2 = self.cbar_sq if cbar_sq is None else scalar(cbar_sq)
        return cb2 * self.m0 / self.m

    def regime(self) -> str:
        return "equal masses, cbar = c" if self.m == self.m0 else "rest mass differs, cbar != c"


def mass_kinematics(ks: KinematicState, tau) -> KinematicState:
    """State seen from a frame reached by the non-Galilean boost ``tau``.

    The energy, cbar, m*m0 and k are unchanged; the momentum becomes
    p - tau E / cbar.
    """
    tau = _vec(tau)
    cb = ks.cbar
    cb2 = ks.cbar_sq
    E = ks.E
    m1 = ks.m - _dot(tau, ks.p) / cb + HALF * _dot(tau, tau) * E / cb2
    if not m1:
        raise DegenerateFrame("the boosted inertial mass vanishes")
    m01 = ks.m * ks.m0 / m1
    p1 = [ks.p[i] - tau[i] * E / cb for i in range(3)]
    frame = "non-Galilean" if any(tau) else ks.frame
    return KinematicState(m1, m01, ks.k, tuple(p1), frame)


def rest_mass_closed_form(ks: KinematicState, tau) -> ExactScalar:
    """m0' written directly in terms of m, m0, k, p and tau."""
    tau = _vec(tau)
    r = exact_sqrt(2 * ks.m0 / ks.m)
    k2 = ks.k * ks.k
    inner = (ONE - _dot(tau, ks.p) / ks.k * r
             + HALF * _dot(tau, tau) * (ONE + _dot(ks.p, ks.p) / k2) * ks.m0 / ks.m)
    return ks.m0 / inner


def boosted_five_momentum(ks: KinematicState, tau) -> list:
    """Lower five-momentum after the boost.

    Momenta transform like the derivatives, i.e. like the Galilean case with
    4 and 5 exchanged: p_a' = p_a - tau_a p4, p4' = p4,
    p5' = p5 - tau_a p_a + |tau|^2 p4 / 2.
    """
    tau = _vec(tau)
    p = ks.p_lower()
    t2 = _dot(tau, tau)
    pa = [p[a] - tau[a] * p[3] for a in range(3)]
    p5 = p[4] - _dot(tau, p[:3]) + HALF * t2 * p[3]
    return pa + [p[3], p5]


def verify_mass_kinematics(samples: int = 100, seed: int = 0) -> CheckReport:
    """Random non-Galilean boosts: m' m0' = m m0, the closed form for m0', E' = E.

    Half of the inputs have equal masses, the other half fix a rational cbar so
    that every square root involved stays in the number field.
    """
    from galspin.sampling import make_rng, rational, vector

    rng = make_rng(seed)
    rep = CheckReport("mass kinematics")
    ex = mass_kinematics(KinematicState.from_cbar(1, 1, 1, (1, 0, 0)), (1, 0, 0))
    rep.add("m = k = cbar = 1, p = tau = (1,0,0) gives m' = 1/2", REF_KIN, ex.m == HALF, f"m' = {ex.m}")
    bad = {"product": None, "closed form": None, "energy": None, "five-momentum": None}
    done = 0
    while done < samples:
        m = rational(rng, positive=True)
        k = rational(rng, positive=True)
        p, tau = vector(rng), vector(rng, bound=3)
        if done % 2:
            ks = KinematicState.from_cbar(m, k, rational(rng, positive=True), p)
        else:
            ks = KinematicState.make(m, m, k, p)
        try:
            b = mass_kinematics(ks, tau)
        except DegenerateFrame:
            continue
        done += 1
        tag = f"m={ks.m}, m0={ks.m0}, k={ks.k}, p={[str(x) for x in p]}, tau={[str(x) for x in tau]}"
        if b.m * b.m0 != ks.m * ks.m0 and bad["product"] is None:
            bad["product"] = tag
        if rest_mass_closed_form(ks, tau) != b.m0 and bad["closed form"] is None:
            bad["closed form"] = tag
        if b.E != ks.E and bad["energy"] is None:
            bad["energy"] = tag
        five = boosted_five_momentum(ks, tau)
        if five != list(b.p) + [ks.E / ks.cbar, b.m * ks.cbar] and bad["five-momentum"] is None:
            bad["five-momentum"] = tag
    names = {"product": "m' m0' = m m0", "closed form": "closed form for m0' agrees with the boost",
             "energy": "energy is unchanged by the boost",
             "five-momentum": "boosted five-momentum matches m' and p'"}
    for key, label in names.items():
        rep.add(f"{label} ({samples} random inputs)", REF_KIN, bad[key] is None,
                None if bad[key] is None else f"fails at {bad[key]}")
    return rep
