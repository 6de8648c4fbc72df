"""Reduction of the (4+1) Dirac field to a nonrelativistic field in (3+1).

The x^5 dependence is factored out as exp(-+ i m cbar x^5), which turns the
five-dimensional Dirac operator into the effective operator
i gamma^mu d_mu - k I+- with mu running over 1..4.  Throughout the inertial and
rest masses are taken equal, so cbar^2 = k^2 / 2m^2 and m cbar = k / sqrt2.

Derivatives d/dx^mu are represented by the commuting symbols d1..d5 (all
operators here have constant coefficients).  Three-momenta ``p`` are the
components p_a that enter gamma^a p_a; they may be numbers or PolyFrac
symbols.
"""
from __future__ import annotations

from dataclasses import dataclass

from galspin.clifford import GAMMA, SIGMA, SPATIAL, build_derived_matrices, eps3
from galspin.errors import DegenerateCombination, InvalidMass, OffShell, ZeroMass
from galspin.exact import HALF, I, INV_SQRT2, ONE, SQRT2, ZERO, ExactScalar, Matrix, PolyFrac, exact_sqrt
from galspin.report import CheckReport, equal_witness, zero_witness
from galspin.spin import fourier_symbols, p_plus_minus

I2 = Matrix.identity(2)
I4 = Matrix.identity(4)
Z2 = Matrix.zeros(2)
T_SPLIT = Matrix.blocks([[I2, I2], [I2, -I2]])  # (psi1, psi2) -> (psi1 + psi2, psi1 - psi2)

REF_FACTOR = "factorization of the x5 coordinate"
REF_PHASE = "cocycle phase of reduced Galilean transformations"
REF_LL = "Levy-Leblond split of the reduced equation"
REF_XI = "two-component form of the (4+1) Dirac equation"
REF_USPINOR = "plane-wave spinors of the reduced field"
REF_SPIN = "one-particle spin matrices"
REF_STATES = "one-particle spin states"
REF_ALIGN = "boost aligning the momentum with the third axis"


def _num(x):
    if isinstance(x, (PolyFrac, ExactScalar)):
        return x
    return ExactScalar.coerce(x)


def _vec3(p) -> list:
    p = list(p)
    if len(p) != 3:
        raise ValueError(f"expected a 3-momentum, got {len(p)} components")
    return [_num(x) for x in p]


def _sq(p) -> object:
    return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]


def _pauli_dot(v) -> Matrix:
    out = Matrix.zeros(2)
    for a in SPATIAL:
        out = out + SIGMA[a].scale(v[a - 1])
    return out


def _onshell_p4(p, mcbar, k):
    return (_sq(p) + k * k) / (2 * mcbar)


@dataclass(frozen=True)
class ReducedField:
    """One mass sector of the reduced theory.

    ``sign`` is +1 for particles and -1 for antiparticles; the field carries
    the factor exp(-i sign m cbar x^5) and obeys (i gamma^mu d_mu - k I_sector) = 0.
    """

    sector: str
    m: ExactScalar
    k: ExactScalar
    cbar_sq: ExactScalar
    cbar: ExactScalar
    Iplus: Matrix
    Iminus: Matrix

    @property
    def sign(self) -> int:
        return 1 if self.sector == "plus" else -1

    @property
    def mcbar(self) -> ExactScalar:
        return self.m * self.cbar

    @property
    def signed_mcbar(self) -> ExactScalar:
        return self.mcbar * self.sign

    @property
    def I_sector(self) -> Matrix:
        return self.Iplus if self.sector == "plus" else self.Iminus

    def d5_value(self) -> ExactScalar:
        """The eigenvalue of d/dx^5 on the factorized field."""
        return -I * self.signed_mcbar

    def full_operator(self, d=None) -> Matrix:
        d = d or fourier_symbols()
        out = I4.scale(-self.k)
        for mu in range(1, 6):
            out = out + GAMMA[mu].scale(I * d[mu])
        return out

    def effective_operator(self, d=None) -> Matrix:
        """i gamma^mu d_mu - k I_sector with mu = 1..4."""
        d = d or fourier_symbols()
        out = -self.I_sector.scale(self.k)
        for mu in range(1, 5):
            out = out + GAMMA[mu].scale(I * d[mu])
        return out

    def substitution_residual(self) -> Matrix:
        """(4+1) operator with d5 replaced by its eigenvalue minus the effective operator."""
        full = self.full_operator().subs({"d5": self.d5_value()})
        return full - self.effective_operator()

    def phase(self, x, beta, R=None) -> ExactScalar:
        """Delta = m cbar [(R x).beta - |beta|^2 x^4 / 2] for x = (x1, x2, x3, x4)."""
        x = [_num(v) for v in x]
        beta = _vec3(beta)
        rx = x[:3]
        if R is not None:
            rx = [sum((R[i, j] * x[j] for j in range(3)), ZERO) for i in range(3)]
        dot = sum((rx[i] * beta[i] for i in range(3)), ZERO)
        return self.mcbar * (dot - HALF * _sq(beta) * x[3])

    def translation_phase(self, d) -> ExactScalar:
        """Exponent theta of the global phase exp(i theta) undoing x5 -> x5 + d."""
        return self.signed_mcbar * _num(d)


def reduce_field(sector: str, m, k) -> ReducedField:
    if sector not in ("plus", "minus"):
        raise ValueError(f"sector must be 'plus' or 'minus', got {sector!r}")
    m, k = ExactScalar.coerce(m), ExactScalar.coerce(k)
    if not m.is_real() or m.sign() <= 0:
        raise InvalidMass(f"inertial mass must be positive, got {m}")
    if not k.is_real() or k.sign() <= 0:
        raise InvalidMass(f"rest-energy parameter k must be positive, got {k}")
    cbar_sq = k * k / (2 * m * m)
    cbar = exact_sqrt(cbar_sq)
    dm = build_derived_matrices(GAMMA, mass_ratio=m * cbar / k)
    return ReducedField(sector, m, k, cbar_sq, cbar, dm.Iplus, dm.Iminus)


def verify_reduced_field(rf: ReducedField) -> CheckReport:
    rep = CheckReport(f"reduced field ({rf.sector}, m={rf.m}, k={rf.k})")
    rep.check("d5 substitution gives the effective operator", REF_FACTOR,
              lambda: zero_witness(rf.substitution_residual()))
    rep.check("mass ratio m cbar / k is 1/sqrt2", REF_FACTOR,
              lambda: equal_witness(rf.mcbar / rf.k, INV_SQRT2))
    rep.check("Iplus Iminus is identity", REF_FACTOR,
              lambda: equal_witness(rf.Iplus * rf.Iminus, I4))
    rep.check("phase vanishes at zero boost", REF_PHASE,
              lambda: zero_witness(rf.phase((1, 2, 3, 4), (0, 0, 0))))
    rep.check("phase at beta = (1,0,0), x = (1,0,0,2)", REF_PHASE,
              lambda: zero_witness(rf.phase((1, 0, 0, 2), (1, 0, 0))))
    rep.check("factor sign follows the sector", REF_FACTOR,
              lambda: equal_witness(rf.d5_value(), -I * rf.mcbar if rf.sector == "plus" else I * rf.mcbar))
    theta = rf.translation_phase(1)
    rep.add("x5 translation is a removable global phase", REF_FACTOR, True,
            f"x5 -> x5 + d is undone by psi -> exp(i ({theta}) d) psi")
    return rep


# --- Levy-Leblond split ---------------------------------------------------

def eta_system(rf: ReducedField, d=None) -> Matrix:
    """[[i d4, p-], [p+, -m cbar]] acting on (eta1, eta2)."""
    d = d or fourier_symbols()
    pp, pm = p_plus_minus(rf.k, d)
    return Matrix.blocks([[I2.scale(I * d[4]), pm], [pp, I2.scale(-rf.signed_mcbar)]])


def eta_from_effective(rf: ReducedField, d=None) -> Matrix:
    """Row combination of the effective operator written in the eta variables."""
    rows = Matrix.blocks([[I2, -I2], [-I2, -I2]]).scale(INV_SQRT2)
    return rows * rf.effective_operator(d) * T_SPLIT.scale(HALF)


def schrodinger_generator(rf: ReducedField, d=None) -> Matrix:
    """h in i d4 eta1 = h eta1 after eliminating eta2 = p+ eta1 / m cbar."""
    pp, pm = p_plus_minus(rf.k, d or fourier_symbols())
    return (pm * pp).scale(-ONE / rf.signed_mcbar)


def laplacian(d=None):
    d = d or fourier_symbols()
    return d[1] * d[1] + d[2] * d[2] + d[3] * d[3]


def phi_chi_system(rf: ReducedField, d=None) -> Matrix:
    """The four-component phi/chi equations restricted to phi = (eta1, 0), chi = (eta2, 0).

    Rows 1-4 are i d4 phi + (i gamma^a Gamma d_a - k(gamma0 + 1)) chi / 2sqrt2,
    rows 5-8 are (k/2) Gamma chi - (i gamma^a d_a + (k/2) Gamma) phi.
    """
    d = d or fourier_symbols()
    dm = build_derived_matrices(GAMMA, mass_ratio=rf.mcbar / rf.k)
    G = dm.Gamma
    k = rf.k
    gd = Matrix.zeros(4)
    gGd = Matrix.zeros(4)
    for a in SPATIAL:
        gd = gd + GAMMA[a].scale(d[a])
        gGd = gGd + (GAMMA[a] * G).scale(d[a])
    a1 = I4.scale(I * d[4])
    b1 = (gGd.scale(I) - (GAMMA.gamma0 + I4).scale(k)).scale(INV_SQRT2 * HALF)
    a2 = -(gd.scale(I) + G.scale(k * HALF))
    b2 = G.scale(k * HALF)
    embed = Matrix.from_rows([[1, 0], [0, 1], [0, 0], [0, 0]])
    return Matrix.blocks([[a1 * embed, b1 * embed], [a2 * embed, b2 * embed]])


def phi_chi_maps(rf: ReducedField):
    """(phi, chi) = (I- gamma4 psi / sqrt2, I- gamma4 gamma5 psi / 2) and the printed inverse."""
    Im = rf.Iminus
    g4, g5 = GAMMA[4], GAMMA[5]
    to_phi = (Im * g4).scale(INV_SQRT2)
    to_chi = (Im * g4 * g5).scale(HALF)
    back_phi = (g5 * g4 * Im).scale(ExactScalar("1/4"))
    back_chi = (g4 * Im).scale(INV_SQRT2 * HALF)
    return to_phi, to_chi, back_phi, back_chi


def xi_system(k, d=None) -> Matrix:
    """[[d4, -i p-], [i p+, d5]] acting on (Xi1, Xi2): the (4+1) Dirac equation."""
    d = d or fourier_symbols()
    pp, pm = p_plus_minus(k, d)
    return Matrix.blocks([[I2.scale(d[4]), pm.scale(-I)], [pp.scale(I), I2.scale(d[5])]])


def xi_from_dirac(k, d=None) -> Matrix:
    d = d or fourier_symbols()
    full = I4.scale(-_num(k))
    for mu in range(1, 6):
        full = full + GAMMA[mu].scale(I * d[mu])
    rows = Matrix.blocks([[I2, -I2], [I2, I2]]).scale(-I * INV_SQRT2)
    return rows * full * T_SPLIT.scale(HALF)


def levy_leblond_split(rf: ReducedField) -> CheckReport:
    rep = CheckReport(f"Levy-Leblond split ({rf.sector}, m={rf.m}, k={rf.k})")
    d = fourier_symbols()
    k = rf.k
    pp, pm = p_plus_minus(k, d)
    L = eta_system(rf, d)
    rep.check("eta system is a row combination of the effective operator", REF_LL,
              lambda: equal_witness(eta_from_effective(rf, d), L))

    def eliminated():
        col = Matrix.blocks([[I2], [pp.scale(ONE / rf.signed_mcbar)]])
        res = L * col
        top = res.submatrix(0, 0, 2, 2)
        h = schrodinger_generator(rf, d)
        ok1, w1 = equal_witness(top, I2.scale(I * d[4]) - h, "Schrodinger row")
        ok2, w2 = zero_witness(res.submatrix(2, 0, 2, 2), "constraint row")
        return ok1 and ok2, w1 or w2

    rep.check("eliminating eta2 gives i d4 eta1 = -(1/m cbar) p- p+ eta1", REF_LL, eliminated)
    lap = laplacian(d)
    rep.check("p- p+ is (laplacian - k^2)/2", REF_LL,
              lambda: equal_witness(pm * pp, I2.scale((lap - k * k) * HALF)))
    rep.check("p+ p- equals p- p+", REF_LL, lambda: equal_witness(pp * pm, pm * pp))

    def plane_wave():
        # eta1 = exp(i(p.x - E t)): d_a -> i p_a, d4 -> -i E / cbar
        for p in ((1, 2, 3), (0, 0, 0), ("1/2", -3, "2/3")):
            p = _vec3(p)
            E = (_sq(p) + k * k) / (2 * rf.m * rf.sign)
            vals = {f"d{a}": I * p[a - 1] for a in SPATIAL}
            vals["d4"] = -I * E / rf.cbar
            gen = I2.scale(I * d[4]) - schrodinger_generator(rf, d)
            ok, w = zero_witness(gen.subs(vals), f"plane wave p={p}")
            if not ok:
                return ok, w
        return True, None

    rep.check("plane wave with E = (p^2 + k^2)/2m solves the eta1 equation", REF_LL, plane_wave)

    def massless():
        p0, m0 = p_plus_minus(0, d)
        sd = _pauli_dot([d[1], d[2], d[3]]).scale(INV_SQRT2)
        ok1, w1 = equal_witness(p0, sd, "p+ at k=0")
        ok2, w2 = equal_witness(m0, sd, "p- at k=0")
        return ok1 and ok2, w1 or w2

    rep.check("k = 0 gives p+ = p- = sigma.d/sqrt2", REF_LL, massless)

    if rf.sector == "plus":
        def phi_chi():
            S = phi_chi_system(rf, d)
            r1 = S.submatrix(0, 0, 2, 4)
            mid = S.submatrix(2, 0, 4, 4)
            r2 = S.submatrix(6, 0, 2, 4)
            target = L.scale(ONE)
            ok1, w1 = equal_witness(r1, target.submatrix(0, 0, 2, 4), "first pair")
            ok2, w2 = zero_witness(mid, "middle rows")
            ok3, w3 = equal_witness(r2, target.submatrix(2, 0, 2, 4).scale(SQRT2), "last pair")
            return ok1 and ok2 and ok3, w1 or w2 or w3

        rep.check("phi/chi equations reproduce the eta system", REF_LL, phi_chi)
        rep.check("Gamma squared vanishes", REF_LL,
                  lambda: zero_witness(build_derived_matrices(GAMMA, rf.mcbar / rf.k).Gamma ** 2))

        def phi_chi_inverse():
            to_phi, to_chi, back_phi, back_chi = phi_chi_maps(rf)
            return equal_witness(back_phi * to_phi + back_chi * to_chi, I4, "round trip")

        rep.check("phi/chi inverse transformation", REF_LL, phi_chi_inverse)
    else:
        rep.skip("phi/chi equations reproduce the eta system", REF_LL,
                 "the four-component split is stated for the positive-mass sector")

    X = xi_system(k, d)
    rep.check("Xi system is a row combination of the (4+1) Dirac operator", REF_XI,
              lambda: equal_witness(xi_from_dirac(k, d), X))

    def second_order():
        C = Matrix.blocks([[I2.scale(d[5]), pm.scale(I)], [pp.scale(-I), I2.scale(d[4])]])
        box = I2.scale(d[4] * d[5]) - pm * pp
        return equal_witness(C * X, Matrix.blocks([[box, Z2], [Z2, box]]), "second-order form")

    rep.check("both Xi components obey d4 d5 Xi = p- p+ Xi", REF_XI, second_order)
    return rep


# --- plane-wave spinors ---------------------------------------------------

@dataclass
class USpinorSet:
    """Plane-wave spinors with the normalization factored out.

    ``u_tilde[r]`` is (gamma.p + k I-) u(r)(0) and ``u_plus_tilde[r]`` is
    (i sigma.p + 2k) xi(r); the physical spinors are d_u times these.  Only
    d_u^2 enters the bilinears, so it is kept as the exact ``du_sq``.
    """

    p: list
    p4: object
    mcbar: object
    k: object
    du_sq: object
    u_tilde: dict
    u_plus_tilde: dict
    u0: dict
    slash: Matrix
    Iplus: Matrix
    Iminus: Matrix

    def bilinear(self, r: int, s: int):
        """ubar(r) u(s)."""
        v = self.u_tilde[r].dagger() * GAMMA.gamma0 * self.u_tilde[s]
        return v[0, 0] * self.du_sq

    def completeness(self) -> Matrix:
        out = Matrix.zeros(4)
        for r in (1, 2):
            out = out + self.u_tilde[r] * self.u_tilde[r].dagger() * GAMMA.gamma0
        return out.scale(self.du_sq)


def du_squared(p, k):
    """d_u^2 = 1 / (p^2 + 4k^2), the equal-mass value of (1/4k^2) 4 m cbar^2 / (E + 3 m cbar^2)."""
    return ONE / (_sq(p) + 4 * k * k)


def build_u_spinors(p, m, k, p4=None) -> USpinorSet:
    """u(r)(p) = d_u (gamma.p + k I-) u(r)(0), with p5 = m cbar and p4 on shell."""
    rf = reduce_field("plus", m, k)
    p = _vec3(p)
    k = rf.k
    on = _onshell_p4(p, rf.mcbar, k)
    if p4 is not None and _num(p4) != on:
        raise OffShell(f"p4 = {p4} but the dispersion relation gives {on}")
    slash = GAMMA[4].scale(on)
    for a in SPATIAL:
        slash = slash + GAMMA[a].scale(p[a - 1])
    u0 = {1: Matrix.column([1, 0, 0, 0]), 2: Matrix.column([0, 1, 0, 0])}
    xi = {1: Matrix.column([1, 0]), 2: Matrix.column([0, 1])}
    twocomp = _pauli_dot(p).scale(I) + I2.scale(2 * k)
    return USpinorSet(p, on, rf.mcbar, k, du_squared(p, k),
                      {r: (slash + rf.Iminus.scale(k)) * u0[r] for r in (1, 2)},
                      {r: twocomp * xi[r] for r in (1, 2)},
                      u0, slash, rf.Iplus, rf.Iminus)


def verify_u_spinors(us: USpinorSet) -> CheckReport:
    rep = CheckReport("u spinors")
    k, du_sq = us.k, us.du_sq
    ut, upt = us.u_tilde, us.u_plus_tilde
    for r in (1, 2):
        for s in (1, 2):
            rep.check(f"ubar{r} u{s} is delta", REF_USPINOR,
                      lambda r=r, s=s: equal_witness(us.bilinear(r, s), ONE if r == s else ZERO))
    rep.check("u ubar summed over r is (gamma.p + k I-)/2k", REF_USPINOR,
              lambda: equal_witness(us.completeness(), (us.slash + us.Iminus.scale(k)).scale(ONE / (2 * k))))
    for r in (1, 2):
        rep.check(f"(gamma.p - k I+) annihilates u{r}", REF_USPINOR,
                  lambda r=r: zero_witness((us.slash - us.Iplus.scale(k)) * ut[r]))
        rep.check(f"(gamma.p - k I-) does not annihilate u{r}", REF_USPINOR,
                  lambda r=r: (not ((us.slash - us.Iminus.scale(k)) * ut[r]).is_zero(),
                               "u is built with k I- and annihilated by the k I+ operator"))
        rep.check(f"u+{r} is the sum of the two-component halves of u{r}", REF_USPINOR,
                  lambda r=r: equal_witness(ut[r].submatrix(0, 0, 2, 1) + ut[r].submatrix(2, 0, 2, 1), upt[r]))
    for r in (1, 2):
        for s in (1, 2):
            rep.check(f"u+{r} dagger u+{s} is delta", REF_USPINOR,
                      lambda r=r, s=s: equal_witness((upt[r].dagger() * upt[s])[0, 0] * du_sq,
                                                     ONE if r == s else ZERO))
    rep.check("u+ u+ dagger summed over r is the identity", REF_USPINOR,
              lambda: equal_witness(sum((upt[r] * upt[r].dagger() for r in (1, 2)),
                                        Matrix.zeros(2)).scale(du_sq), I2))

    def kernel():
        # D+(p) + gamma4 p^2 / (2 sqrt2 k^2) in Fourier space, i d_a -> p_a
        gp = Matrix.zeros(4)
        for a in SPATIAL:
            gp = gp + GAMMA[a].scale(us.p[a - 1])
        D = (GAMMA.gamma0 + I4).scale(HALF) + gp.scale(ONE / (2 * k))
        D = D + GAMMA[4].scale(_sq(us.p) * INV_SQRT2 / (2 * k * k))
        return equal_witness(us.completeness(), D, "anticommutator kernel")

    rep.check("equal-time anticommutator kernel matches u ubar", REF_USPINOR, kernel)
    return rep


def rest_spinor_check(m, k) -> tuple:
    """At p = 0 the general formula gives back u(r)(0): d_u (gamma4 p4 + k I-) u(0) = u(0)."""
    us = build_u_spinors((0, 0, 0), m, k)
    du = ONE / (2 * us.k)  # d_u at rest, where d_u^2 = 1/4k^2
    if us.du_sq != du * du:
        return False, f"d_u^2 at rest is {us.du_sq}"
    for r in (1, 2):
        ok, w = equal_witness(us.u_tilde[r].scale(du), us.u0[r], f"u{r}(0)")
        if not ok:
            return ok, w
        ok, w = equal_witness(us.u_plus_tilde[r].scale(du), us.u0[r].submatrix(0, 0, 2, 1), f"u+{r}(0)")
        if not ok:
            return ok, w
    return True, None


# --- spin matrices and states ---------------------------------------------

@dataclass
class SpinMatrices:
    p: list
    k: object
    du_sq: object
    S1: dict
    S2: dict
    f1: object
    f2: object

    def total(self, a: int) -> Matrix:
        return self.S1[a] + self.S2[a]


def _s2(p, k, du_sq, a) -> Matrix:
    sp = _pauli_dot(p)
    out = sp.scale(p[a - 1]) - SIGMA[a].scale(_sq(p))
    for b in SPATIAL:
        for c in SPATIAL:
            e = eps3(a, b, c)
            if e:
                out = out + (SIGMA[b].scale(p[c - 1]) - SIGMA[c].scale(p[b - 1])).scale(k * e)
    return out.scale(du_sq)


def spin_matrices(p, m, k) -> SpinMatrices:
    p = _vec3(p)
    k = ExactScalar.coerce(k)
    reduce_field("plus", m, k)  # validates m and k
    du_sq = du_squared(p, k)
    S1 = {a: SIGMA[a].scale(HALF) for a in SPATIAL}
    S2 = {a: _s2(p, k, du_sq, a) for a in SPATIAL}
    den = _sq(p) + 4 * k * k
    f1 = (p[0] * p[0] + p[1] * p[1]) / den
    f2 = (p[0] + I * p[1]) * (p[2] - 2 * I * k) / den
    return SpinMatrices(p, k, du_sq, S1, S2, f1, f2)


def _pair_sum(A: dict, B: dict) -> Matrix:
    """sum_a sum_q A^a(q,r) B^a(s,q), as a matrix in (r, s)."""
    out = Matrix.zeros(2)
    for a in SPATIAL:
        out = out + (B[a] * A[a]).T
    return out


def verify_spin_matrices(sm: SpinMatrices) -> CheckReport:
    rep = CheckReport("spin matrices")
    p, k, du_sq = sm.p, sm.k, sm.du_sq
    psq = _sq(p)
    xi = {1: Matrix.column([1, 0]), 2: Matrix.column([0, 1])}
    rep.check("S1^a(r,s) is xi(r)^dagger sigma^a xi(s) / 2", REF_SPIN,
              lambda: all((xi[r].dagger() * SIGMA[a] * xi[s]).scale(HALF)[0, 0] == sm.S1[a][r - 1, s - 1]
                          for a in SPATIAL for r in (1, 2) for s in (1, 2)))
    rep.check("S1^3 is diag(1/2, -1/2)", REF_SPIN,
              lambda: equal_witness(sm.S1[3], Matrix.diag([HALF, -HALF])))
    trans = Matrix.zeros(2)
    for a in SPATIAL:
        trans = trans + sm.S2[a].scale(p[a - 1])
    rep.check("p_a S2^a vanishes", REF_SPIN, lambda: zero_witness(trans))
    rep.check("cond1: S1 S1 sum is 3/4", REF_SPIN,
              lambda: equal_witness(_pair_sum(sm.S1, sm.S1), I2.scale(ExactScalar("3/4"))))
    rep.check("cond2: S2 S2 sum is 2 d_u^2 p^2", REF_SPIN,
              lambda: equal_witness(_pair_sum(sm.S2, sm.S2), I2.scale(2 * du_sq * psq)))
    rep.check("cond3: mixed sum is -2 d_u^2 p^2", REF_SPIN,
              lambda: equal_witness(_pair_sum(sm.S1, sm.S2) + _pair_sum(sm.S2, sm.S1),
                                    I2.scale(-2 * du_sq * psq)))

    def square():
        tot = Matrix.zeros(2)
        for a in SPATIAL:
            t = sm.total(a)
            tot = tot + t * t
        return equal_witness(tot, I2.scale(ExactScalar("3/4")), "total spin squared")

    rep.check("total spin squared is 3/4", REF_SPIN, square)

    def algebra():
        for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            ok, w = equal_witness(sm.total(a).commutator(sm.total(b)), sm.total(c).scale(I), f"[S{a},S{b}]")
            if not ok:
                return ok, w
        return True, None

    rep.check("S1 + S2 obeys the spin algebra", REF_SPIN, algebra)

    def from_u_plus():
        sp = _pauli_dot(p).scale(I) + I2.scale(2 * k)
        for a in SPATIAL:
            ok, w = equal_witness((sp.dagger() * SIGMA[a] * sp).scale(du_sq * HALF), sm.total(a), f"S{a}")
            if not ok:
                return ok, w
        return True, None

    rep.check("S1 + S2 is u+ dagger (sigma/2) u+", REF_SPIN, from_u_plus)
    rep.check("S2 cancels between orbital and Dirac parts", REF_SPIN,
              lambda: zero_witness(sum(((-sm.S2[a]) + sm.S2[a] for a in SPATIAL), Matrix.zeros(2))))
    rep.check("f2 f2* = f1 (1 - f1)", REF_SPIN,
              lambda: equal_witness(sm.f2 * sm.f2.conj(), sm.f1 * (1 - sm.f1)))
    S3 = Matrix.from_rows([[HALF - sm.f1, sm.f2.conj()], [sm.f2, -(HALF - sm.f1)]])
    rep.check("S+^3 acts as the f1/f2 two-line display", REF_STATES,
              lambda: equal_witness(sm.total(3), S3))
    return rep


@dataclass
class SpinStateReport:
    p: list
    k: object
    f1: object
    f2: object
    S3: Matrix
    states: dict       # label -> (coefficient of |1>, coefficient of |2>)
    eigenvalues: dict  # label -> eigenvalue of S+^3
    report: CheckReport

    def to_dict(self) -> dict:
        return {
            "p": [str(x) for x in self.p],
            "k": str(self.k),
            "f1": str(self.f1),
            "f2": str(self.f2),
            "S3": [[str(self.S3[i, j]) for j in range(2)] for i in range(2)],
            "states": {lab: [str(c) for c in v] for lab, v in self.states.items()},
            "eigenvalues": {lab: str(v) for lab, v in self.eigenvalues.items()},
            "checks": [r.to_dict() for r in self.report.rows],
        }


def spin_states(p, m=1, k=1) -> SpinStateReport:
    sm = spin_matrices(p, m, k)
    f1, f2 = sm.f1, sm.f2
    rep = CheckReport("spin states")
    S3 = sm.total(3)
    rep.check("S+^3 matches the f1/f2 display", REF_STATES,
              lambda: equal_witness(S3, Matrix.from_rows([[HALF - f1, f2.conj()], [f2, -(HALF - f1)]])))
    if f2 == 0:
        if f1 != 0:
            raise DegenerateCombination(f"f2 = 0 but f1 = {f1}")
        states = {"up": (ONE, ZERO), "down": (ZERO, ONE)}
    else:
        states = {"up": ((1 - f1) / f2, ONE), "down": (ONE, -(1 - f1) / f2.conj())}
    eigen = {"up": HALF, "down": -HALF}
    for lab, (c1, c2) in states.items():
        v = Matrix.column([c1, c2])
        rep.check(f"{lab} state has S+^3 eigenvalue {eigen[lab]}", REF_STATES,
                  lambda v=v, e=eigen[lab]: equal_witness(S3 * v, v.scale(e)))
    tot = Matrix.zeros(2)
    for a in SPATIAL:
        tot = tot + sm.total(a) * sm.total(a)
    rep.check("total spin squared is 3/4", REF_STATES,
              lambda: equal_witness(tot, I2.scale(ExactScalar("3/4"))))
    rep.check("f2 f2* = f1 (1 - f1)", REF_STATES,
              lambda: equal_witness(f2 * f2.conj(), f1 * (1 - f1)))
    return SpinStateReport(sm.p, sm.k, f1, f2, S3, states, eigen, rep)


def boost_align_momentum(p, m, cbar):
    """beta = (p1, p2, 0) / m cbar, which boosts p to (0, 0, p3)."""
    p = _vec3(p)
    mc = ExactScalar.coerce(m) * ExactScalar.coerce(cbar)
    if mc == 0:
        raise ZeroMass("cannot align the momentum when m cbar = 0")
    beta = [p[0] / mc, p[1] / mc, ZERO]
    return beta, [p[i] - mc * beta[i] for i in range(3)]


def verify_alignment(p, m, k) -> CheckReport:
    rep = CheckReport("momentum alignment")
    rf = reduce_field("plus", m, k)
    beta, q = boost_align_momentum(p, rf.m, rf.cbar)
    rep.check("aligned momentum is along the third axis", REF_ALIGN,
              lambda: (q[0] == 0 and q[1] == 0 and q[2] == _num(p[2]), f"p' = {[str(x) for x in q]}"))
    rep.check("f1 vanishes after alignment", REF_ALIGN,
              lambda: zero_witness(spin_matrices(q, m, k).f1, "f1"))
    rep.add("aligned frame allows direct spin enumeration", REF_ALIGN, True,
            "in the aligned frame |1> and |2> carry S+^3 = +1/2 and -1/2")
    return rep


def verify_onshell_samples(samples: int = 20, seed: int = 0) -> CheckReport:
    """u-spinor and spin-matrix identities at random on-shell rational momenta."""
    from galspin.sampling import make_rng, rational, vector

    rng = make_rng(seed)
    rep = CheckReport("random on-shell momenta")
    fails = {}
    for i in range(samples):
        p = vector(rng)
        m = rational(rng, positive=True)
        k = rational(rng, positive=True)
        tag = f"p={[str(x) for x in p]}, m={m}, k={k}"
        for sub in (verify_u_spinors(build_u_spinors(p, m, k)), verify_spin_matrices(spin_matrices(p, m, k)),
                    spin_states(p, m, k).report):
            for row in sub.failures():
                fails.setdefault(row.check_name, f"{tag}: {row.witness}")
    labels = {
        "u orthonormality": ("ubar1 u1 is delta", "ubar1 u2 is delta", "ubar2 u1 is delta", "ubar2 u2 is delta"),
        "u completeness": ("u ubar summed over r is (gamma.p + k I-)/2k",),
        "Dirac equation residual": ("(gamma.p - k I+) annihilates u1", "(gamma.p - k I+) annihilates u2"),
        "anticommutator kernel": ("equal-time anticommutator kernel matches u ubar",
                                  "u+ u+ dagger summed over r is the identity"),
        "transversality p_a S2^a = 0": ("p_a S2^a vanishes",),
        "cond1 to cond3": ("cond1: S1 S1 sum is 3/4", "cond2: S2 S2 sum is 2 d_u^2 p^2",
                           "cond3: mixed sum is -2 d_u^2 p^2"),
        "total spin squared is 3/4": ("total spin squared is 3/4",),
        "f2 f2* = f1 (1 - f1)": ("f2 f2* = f1 (1 - f1)",),
        "up/down eigenvalues": ("up state has S+^3 eigenvalue 1/2", "down state has S+^3 eigenvalue -1/2"),
    }
    covered = set()
    for label, names in labels.items():
        covered.update(names)
        w = next((fails[n] for n in names if n in fails), None)
        rep.add(f"{label} ({samples} random momenta)", REF_USPINOR if label.startswith(("u ", "Dirac", "anti"))
                else REF_SPIN, w is None, w)
    other = [n for n in fails if n not in covered]
    rep.add(f"remaining identities ({samples} random momenta)", REF_SPIN, not other,
            None if not other else f"{other[0]}: {fails[other[0]]}")
    return rep
