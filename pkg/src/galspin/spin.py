"""The Galilean covariant spin operator and its relation to the Dirac spin.

The spin is built from the fifth row of the Pauli-Lubanski tensor,
S^a = P5^-1 W_{5a}, after solving for the coefficients of the general ansatz
S^a = A (W_{5a} - B W_54 p_a).
"""
from __future__ import annotations

from dataclasses import dataclass

from galspin.clifford import GAMMA, SIGMA, SPATIAL, INDICES, build_derived_matrices, eps3
from galspin.errors import ZeroMassSector
from galspin.exact import HALF, I, INV_SQRT2, ONE, ZERO, ExactScalar, Matrix, PolyFrac, symbol
from galspin.galilei import GeneratorSet, PauliLubanski, build_casimirs
from galspin.report import CheckReport, equal_witness, zero_witness
from galspin.transforms import galilean_boost_matrix, inverse_boost
from galspin.weyl import P, DiffOperator, commutator

REF_SPIN = "Galilean covariant spin operator"
REF_COEF = "coefficient system for the spin ansatz"
REF_REST = "boost to the rest frame"
REF_DIRAC = "covariant and Dirac spin operators"
REF_NONCONS = "nonconservation of the Dirac spin"

PSQ = P[1] * P[1] + P[2] * P[2] + P[3] * P[3]


@dataclass(frozen=True)
class SpinCoefficientSolution:
    branch: str  # "B_nonzero" or "B_zero"
    A: PolyFrac
    B: PolyFrac
    singular_at_rest: bool

    def residuals(self):
        """Both equations of the system, moved to one side."""
        A, B, p5 = self.A, self.B, P[5]
        return A * A * (p5 - B * PSQ) - A, A * A * B * p5 + A * B


def _singular_at_rest(f: PolyFrac) -> bool:
    """True if the denominator vanishes when the spatial momentum does."""
    rest = {"p1": 0, "p2": 0, "p3": 0}
    return not f.den.evaluate(rest)


def solve_spin_coefficients() -> list:
    """Solve A^2 (P5 - B P^2) = A and A^2 B P5 = -A B for A != 0.

    Dividing by A leaves A (P5 - B P^2) = 1 and B (A P5 + 1) = 0.  Either
    B = 0, so A = 1/P5, or A = -1/P5, which turns the first equation into
    B P^2 = 2 P5.
    """
    p5 = P[5]
    out = []
    A1 = -ONE / p5
    B1 = (p5 - A1.inv()) / PSQ  # from A (P5 - B P^2) = 1
    out.append(SpinCoefficientSolution("B_nonzero", A1, B1,
                                       _singular_at_rest(A1) or _singular_at_rest(B1)))
    A2 = ONE / p5
    B2 = PolyFrac.const(0)
    out.append(SpinCoefficientSolution("B_zero", A2, B2,
                                       _singular_at_rest(A2) or _singular_at_rest(B2)))
    return out


@dataclass
class SpinOperator:
    S: dict         # P5^-1 W_{5a}
    S_vector: dict  # J - P5^-1 (K x P)


def cross_KP(gs: GeneratorSet, a: int) -> DiffOperator:
    out = DiffOperator.zero()
    for b in SPATIAL:
        for c in SPATIAL:
            e = eps3(a, b, c)
            if e:
                out = out + (gs.K[b] * gs.P_up[c]).scale(e)
    return out


def build_spin_operator(gs: GeneratorSet, pl: PauliLubanski) -> SpinOperator:
    inv5 = ONE / P[5]
    S = {a: pl.W5[a].scale(inv5) for a in SPATIAL}
    Sv = {a: gs.J[a] - cross_KP(gs, a).scale(inv5) for a in SPATIAL}
    return SpinOperator(S, Sv)


def ansatz_spin(pl: PauliLubanski, gs: GeneratorSet, sol: SpinCoefficientSolution) -> dict:
    """S^a = A (W_{5a} - B W_54 p_a) for a coefficient solution.

    The momentum in the ansatz is the physical (lower-index) p_a.  With it the
    B != 0 branch is minus the spin rotated by pi about the momentum, which
    keeps the spin algebra; with P^a = -p_a that branch breaks it.
    """
    return {a: (pl.W5[a] - (pl.W5[4] * gs.P_low[a]).scale(sol.B)).scale(sol.A) for a in SPATIAL}


def verify_spin_coefficients(gs: GeneratorSet | None = None, pl: PauliLubanski | None = None) -> CheckReport:
    rep = CheckReport("spin coefficients")
    sols = solve_spin_coefficients()
    rep.add("two coefficient branches", REF_COEF, len(sols) == 2, ", ".join(s.branch for s in sols))
    for s in sols:
        r1, r2 = s.residuals()
        rep.check(f"branch {s.branch} solves the first equation", REF_COEF, lambda r1=r1: zero_witness(r1))
        rep.check(f"branch {s.branch} solves the second equation", REF_COEF, lambda r2=r2: zero_witness(r2))
    b1 = next(s for s in sols if s.branch == "B_nonzero")
    b0 = next(s for s in sols if s.branch == "B_zero")
    rep.add("branch B_nonzero coefficients", REF_COEF,
            b1.A == -ONE / P[5] and b1.B == 2 * P[5] / PSQ, f"A = {b1.A}, B = {b1.B}")
    rep.add("branch B_zero coefficients", REF_COEF, b0.A == ONE / P[5] and not b0.B, f"A = {b0.A}, B = {b0.B}")
    rep.add("branch B_nonzero singular at rest", REF_COEF, b1.singular_at_rest, f"denominator of B: {b1.B.den}")
    rep.add("branch B_zero regular at rest", REF_COEF, not b0.singular_at_rest)
    if gs is not None and pl is not None:
        # the ansatz itself obeys the spin algebra on both branches
        for s in sols:
            S = ansatz_spin(pl, gs, s)
            for a, b in ((1, 2), (2, 3), (3, 1)):
                c = 6 - a - b
                rep.check(f"branch {s.branch} operator [S^{a},S^{b}] = iS^{c}", REF_COEF,
                          lambda S=S, a=a, b=b, c=c: equal_witness(commutator(S[a], S[b]), S[c].scale(I)))
    return rep


def verify_spin_operator(gs: GeneratorSet, pl: PauliLubanski, so: SpinOperator) -> CheckReport:
    rep = CheckReport("spin operator")
    for a in SPATIAL:
        rep.check(f"S^{a} from W_5 equals J - P5^-1 (K x P)", REF_SPIN,
                  lambda a=a: equal_witness(so.S[a], so.S_vector[a]))
    for a in SPATIAL:
        for b in SPATIAL:
            if a < b:
                c = 6 - a - b
                rep.check(f"[S^{a},S^{b}] = i eps S", REF_SPIN,
                          lambda a=a, b=b, c=c: equal_witness(commutator(so.S[a], so.S[b]),
                                                              so.S[c].scale(I * eps3(a, b, c))))
    for a in SPATIAL:
        for mu in INDICES:
            rep.check(f"[S^{a},P^{mu}] vanishes", REF_SPIN,
                      lambda a=a, mu=mu: zero_witness(commutator(so.S[a], gs.P_up[mu])))
    for a in SPATIAL:
        for b in SPATIAL:
            def jr(a=a, b=b):
                rhs = DiffOperator.zero()
                for c in SPATIAL:
                    if eps3(a, b, c):
                        rhs = rhs + so.S[c].scale(I * eps3(a, b, c))
                return equal_witness(commutator(gs.J[a], so.S[b]), rhs)
            rep.check(f"[J^{a},S^{b}] = i eps S", REF_SPIN, jr)
            rep.check(f"[K^{a},S^{b}] vanishes", "boost invariance of the spin",
                      lambda a=a, b=b: zero_witness(commutator(gs.K[a], so.S[b])))
    # helicity: P_a S^a = P_a J^a
    hs = sum((gs.P_low[a] * so.S[a] for a in SPATIAL), DiffOperator.zero())
    hj = sum((gs.P_low[a] * gs.J[a] for a in SPATIAL), DiffOperator.zero())
    rep.check("helicity P_a S^a equals P_a J^a", "helicity", lambda: equal_witness(hs, hj))
    rep.extend(verify_i3_relation(gs, pl, so))
    return rep


def verify_i3_relation(gs: GeneratorSet, pl: PauliLubanski, so: SpinOperator) -> CheckReport:
    """Compare I3 with P5^2 S_a S^a and with P5^-2 S_a S^a; report which holds."""
    rep = CheckReport("I3 and the spin magnitude")
    cas = build_casimirs(gs, pl)
    # S_a S^a = g_ab S^a S^b = -sum (S^a)^2
    ss = DiffOperator.zero()
    for a in SPATIAL:
        ss = ss - so.S[a] * so.S[a]
    plus = ss.scale(P[5] * P[5])
    minus = ss.scale(ONE / (P[5] * P[5]))
    holds_plus = cas.I3 == plus
    holds_minus = cas.I3 == minus
    found = []
    if holds_plus:
        found.append("I3 = P5^2 S_a S^a")
    if holds_minus:
        found.append("I3 = P5^-2 S_a S^a")
    if not found:
        found.append("neither power of P5 relates I3 to S_a S^a")
    note = "; ".join(found) + f"; P5^-2 form {'holds' if holds_minus else 'does not hold'}"
    rep.add("I3 relation to S_a S^a", "third Casimir and the spin magnitude", holds_plus or holds_minus, note)
    return rep


# rest frame -----------------------------------------------------------------

@dataclass
class RestFrameBoost:
    G: Matrix  # 5x5, G[mu-1, lam-1] = G_mu^lam

    def apply(self, v):
        """G_mu^lam v_lam for a lower-index 5-vector (scalars or operators)."""
        out = []
        for mu in INDICES:
            acc = None
            for lam in INDICES:
                g = self.G[mu - 1, lam - 1]
                if not g:
                    continue
                t = v[lam - 1].scale(g) if isinstance(v[lam - 1], DiffOperator) else g * v[lam - 1]
                acc = t if acc is None else acc + t
            out.append(acc if acc is not None else (DiffOperator.zero() if isinstance(v[0], DiffOperator) else ZERO))
        return out


def rest_frame_boost(p=None) -> RestFrameBoost:
    """Galilean boost sending the lower momentum p to the rest frame.

    Its entries are those of the derivative transformation with
    beta_a = p_a / p5: G_a^b = delta, G_a^5 = G_4^a = -p_a/p5,
    G_4^5 = p^2 / (2 p5^2), G_4^4 = G_5^5 = 1.
    """
    if p is None:
        p = [P[mu] for mu in INDICES]
    p = [PolyFrac.coerce(x) for x in p]
    if not p[4]:
        raise ZeroMassSector("p5 = 0: no rest frame in the zero-mass sector")
    psq = p[0] * p[0] + p[1] * p[1] + p[2] * p[2]
    e = {}
    for a in SPATIAL:
        e[(a - 1, a - 1)] = 1
        e[(a - 1, 4)] = -p[a - 1] / p[4]
        e[(3, a - 1)] = -p[a - 1] / p[4]
    e[(3, 3)] = 1
    e[(4, 4)] = 1
    e[(3, 4)] = psq / (2 * p[4] * p[4])
    G = Matrix((5, 5), e)
    return RestFrameBoost(G.map(lambda v: v.to_scalar() if isinstance(v, PolyFrac) and v.is_constant() else v))


def verify_rest_frame(gs: GeneratorSet, pl: PauliLubanski) -> CheckReport:
    rep = CheckReport("rest frame")
    rb = rest_frame_boost()
    pvec = [P[mu] for mu in INDICES]
    pp = rb.apply(pvec)
    for a in SPATIAL:
        rep.check(f"P_{a}' vanishes", REF_REST, lambda a=a: zero_witness(pp[a - 1]))
    rep.check("P_4' is the rest energy", REF_REST, lambda: equal_witness(pp[3], P[4] - PSQ / (2 * P[5])))
    rep.check("P_5' = P_5", REF_REST, lambda: equal_witness(pp[4], P[5]))
    wp = rb.apply([pl.W5[mu] for mu in INDICES])
    rep.check("W_54' vanishes", REF_REST, lambda: zero_witness(wp[3]))
    for a in SPATIAL:
        rep.check(f"W_5{a}' = W_5{a}", REF_REST, lambda a=a: equal_witness(wp[a - 1], pl.W5[a]))
    rep.check("W_55' vanishes", REF_REST, lambda: zero_witness(wp[4]))
    # the printed orientation G_a^5 = -G_4^a would not annihilate P_a
    e = dict(rb.G.entries)
    for a in SPATIAL:
        e[(3, a - 1)] = P[a] / P[5]
    alt = RestFrameBoost(Matrix((5, 5), e)).apply(pvec)
    rep.add("opposite sign of G_4^a recorded", REF_REST, True,
            f"with G_4^a = +p_a/p5: P_4' = {alt[3]}")
    return rep


# relation to the Dirac spin -----------------------------------------------

def dirac_spin_parts(gs: GeneratorSet):
    """Spinor part and orbital part of J^a."""
    pairs = {1: (2, 3), 2: (3, 1), 3: (1, 2)}
    spin = {a: gs.spin[pairs[a]] for a in SPATIAL}
    orbital = {a: gs.orbital[pairs[a]] for a in SPATIAL}
    return spin, orbital


def sigma_conjugation(coefficient=ONE) -> dict:
    """Lambda^-1 Sigma^a Lambda - (Sigma^a + c i gamma^4 eps^{abc} gamma^b P^c / P5).

    Lambda is the Galilean boost with beta_a = p_a / p5.  Returns the residual
    for each a.
    """
    dm = build_derived_matrices(GAMMA)
    beta = [P[a] / P[5] for a in SPATIAL]
    L = galilean_boost_matrix(beta)
    Li = inverse_boost(L)
    out = {}
    for a in SPATIAL:
        lhs = Li * dm.Sigma[a] * L
        extra = Matrix.zeros(4)
        for b in SPATIAL:
            for c in SPATIAL:
                e = eps3(a, b, c)
                if e:
                    extra = extra + (GAMMA[4] * GAMMA[b]).scale(-P[c] / P[5] * e)  # P^c = -p_c
        out[a] = lhs - dm.Sigma[a] - extra.scale(I * coefficient)
    return out


def dirac_spin_relation(gs: GeneratorSet, pl: PauliLubanski | None = None, so: SpinOperator | None = None) -> CheckReport:
    rep = CheckReport("Dirac spin relation")
    if so is None:
        from galspin.galilei import build_pauli_lubanski
        pl = pl or build_pauli_lubanski(gs)
        so = build_spin_operator(gs, pl)
    dm = build_derived_matrices(GAMMA)
    spin, orbital = dirac_spin_parts(gs)
    inv5 = ONE / P[5]
    for a in SPATIAL:
        rep.check(f"spinor part of J^{a} is Sigma{a}/2", REF_DIRAC,
                  lambda a=a: equal_witness(spin[a], DiffOperator.coeff(dm.Sigma[a].scale(HALF))))
        rep.check(f"S^{a} = Dirac spin - P5^-1 (K x P) + J_0", REF_DIRAC,
                  lambda a=a: zero_witness(so.S[a] - spin[a] + cross_KP(gs, a).scale(inv5) - orbital[a]))
        rep.check(f"S^{a} equals Dirac spin at zero spatial momentum", REF_DIRAC,
                  lambda a=a: zero_witness((so.S[a] - spin[a]).subs({"p1": 0, "p2": 0, "p3": 0})))
    full = sigma_conjugation(ONE)
    half = sigma_conjugation(HALF)
    for a in SPATIAL:
        ok, w = zero_witness(full[a])
        hz, _ = zero_witness(half[a])
        note = w or f"holds with coefficient 1; coefficient 1/2 {'holds' if hz else 'leaves a residual'}"
        rep.add(f"Lambda^-1 Sigma{a} Lambda", "boost of the Dirac spin matrix", ok, note)
    return rep


# nonconservation witness -----------------------------------------------------

def _pauli_dot(vec) -> Matrix:
    out = Matrix.zeros(2)
    for a, v in zip(SPATIAL, vec):
        out = out + SIGMA[a].scale(v)
    return out


def fourier_symbols():
    """Commuting symbols d1..d5 standing for the derivatives d/dx^mu."""
    return {mu: symbol(f"d{mu}") for mu in INDICES}


def p_plus_minus(k, d=None):
    """p+- = (sigma^a d_a +- k) / sqrt2 as 2x2 matrices over the Fourier symbols."""
    d = d or fourier_symbols()
    sd = _pauli_dot([d[a] for a in SPATIAL])
    k = ExactScalar.coerce(k) if not isinstance(k, PolyFrac) else k
    I2 = Matrix.identity(2)
    return (sd + I2.scale(k)).scale(INV_SQRT2), (sd - I2.scale(k)).scale(INV_SQRT2)


@dataclass
class WitnessReport:
    report: CheckReport
    witness: str
    commutators: dict


def nonconservation_witness(k, mcbar) -> WitnessReport:
    """Dirac spin is conserved by the reduced evolution but not in (4+1).

    In (3+1) the evolution generator of Xi_1 is h = -(1/mcbar) p- p+, a scalar
    in spin space.  In (4+1) the first-order block operator
    [[d4, -i p-], [i p+, d5]] couples the two components through p+-, which
    do not commute with sigma.
    """
    k = ExactScalar.coerce(k)
    mcbar = ExactScalar.coerce(mcbar)
    rep = CheckReport("Dirac spin nonconservation")
    d = fourier_symbols()
    pp, pm = p_plus_minus(k, d)
    lap = d[1] * d[1] + d[2] * d[2] + d[3] * d[3]
    I2 = Matrix.identity(2)
    rep.check("p- p+ = (laplacian - k^2)/2", "second-order form of the reduced system",
              lambda: equal_witness(pm * pp, I2.scale((lap - k * k) * HALF)))
    h = (pm * pp).scale(-mcbar.inv())
    for a in SPATIAL:
        rep.check(f"[sigma{a}/2, h] vanishes in (3+1)", REF_NONCONS,
                  lambda a=a: zero_witness(SIGMA[a].scale(HALF).commutator(h)))
    E5 = Matrix.blocks([[I2.scale(d[4]), pm.scale(-I)], [pp.scale(I), I2.scale(d[5])]])
    comms = {}
    for a in SPATIAL:
        spin = Matrix.blocks([[SIGMA[a].scale(HALF), Matrix.zeros(2)], [Matrix.zeros(2), SIGMA[a].scale(HALF)]])
        comms[a] = spin.commutator(E5)
        nz = comms[a].first_nonzero()
        rep.add(f"[Sigma{a}/2, (4+1) block operator] nonzero", REF_NONCONS, nz is not None,
                None if nz is None else f"entry ({nz[0]},{nz[1]}) = {nz[2]}")
    rep.skip("field-integral form of d/dx4 of the Dirac spin", REF_NONCONS,
             "vanishes only if x5 is compactified or boundary conditions are imposed; not modeled")
    nz = comms[3].first_nonzero()
    witness = f"[Sigma3/2, E5] entry ({nz[0]},{nz[1]}) = {nz[2]}" if nz else "none"
    return WitnessReport(rep, witness, comms)
