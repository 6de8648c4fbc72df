"""Galilei generators in the single-particle momentum representation.

The symbols p1..p5 are the lower momentum components p_mu.  Upper components
follow from the metric: P^a = -p_a, P^4 = p5, P^5 = p4.  The position operator
is realized as ``x^mu = x_sign * i d/dp_mu`` and the rotation generators are

    M^{mu nu} = x^mu P^nu - x^nu P^mu + spin_sign * F^{mu nu}

with F^{mu nu} = -(i/4)[gamma^mu, gamma^nu].  Which signs reproduce the Galilei
algebra is not assumed; ``select_convention`` tries the four candidates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from galspin.clifford import GAMMA, INDICES, METRIC, SPATIAL, build_derived_matrices, eps3, eps5
from galspin.errors import ConventionRejected
from galspin.exact import I, ExactScalar
from galspin.report import CheckReport, equal_witness, zero_witness
from galspin.weyl import P, DiffOperator, commutator

REF_ALGEBRA = "Galilei Lie algebra commutators"
REF_EXTENSION = "commutators with the non-Galilean boost and central charge"
REF_CASIMIR = "Casimir invariants of the Galilei algebra"
REF_PL = "Pauli-Lubanski tensor"


@dataclass(frozen=True)
class SignConvention:
    x_sign: int = -1
    spin_sign: int = -1
    keep_x4: bool = True  # False drops every x^4 term (fixed time slice x^4 = 0)

    def label(self) -> str:
        s = f"x = {'-' if self.x_sign < 0 else '+'}i d/dp, spin {'-' if self.spin_sign < 0 else '+'}F"
        return s if self.keep_x4 else s + ", x4 = 0"


CANDIDATES = tuple(SignConvention(x, s) for x in (-1, 1) for s in (-1, 1))


def p_upper(mu: int):
    """P^mu as a rational function of the lower-index symbols."""
    if mu in SPATIAL:
        return -P[mu]
    return P[9 - mu]  # P^4 = p5, P^5 = p4


@dataclass
class GeneratorSet:
    convention: SignConvention
    P_up: dict
    P_low: dict
    X: dict
    orbital: dict
    spin: dict
    M: dict
    J: dict
    K: dict
    Ktilde: dict
    Qtilde: DiffOperator
    named: dict = field(default_factory=dict)

    def galilei(self) -> list:
        """(name, operator) for the 11 Galilei generators."""
        return [(n, self.named[n]) for n in GALILEI_NAMES]

    def extended(self) -> list:
        return [(n, self.named[n]) for n in GALILEI_NAMES + EXTENSION_NAMES]

    def __getitem__(self, name: str) -> DiffOperator:
        return self.named[name]


GALILEI_NAMES = (["P^1", "P^2", "P^3", "P_4", "P_5"] + [f"J^{a}" for a in SPATIAL]
                 + [f"K^{a}" for a in SPATIAL])
EXTENSION_NAMES = [f"Kt^{a}" for a in SPATIAL] + ["Qt"]


def build_generators(fixing: SignConvention | None = None, check: bool = True) -> GeneratorSet:
    """Generator set for the given convention, or the auto-selected one.

    With ``check`` the convention is screened by a few defining commutators and
    ``ConventionRejected`` is raised if any fails.
    """
    if fixing is None:
        return select_convention()
    gs = _build(fixing)
    if check:
        bad = _screen(gs)
        if bad:
            raise ConventionRejected(f"convention '{fixing.label()}' fails {', '.join(bad)}")
    return gs


def select_convention() -> GeneratorSet:
    for conv in CANDIDATES:
        gs = _build(conv)
        if not _screen(gs):
            return gs
    raise ConventionRejected("no candidate sign convention reproduces the Galilei algebra")


def _build(conv: SignConvention) -> GeneratorSet:
    dm = build_derived_matrices(GAMMA)
    P_low = {mu: DiffOperator.coeff(P[mu]) for mu in INDICES}
    P_up = {mu: DiffOperator.coeff(p_upper(mu)) for mu in INDICES}
    X = {mu: DiffOperator.deriv(mu).scale(I * conv.x_sign) for mu in INDICES}
    if not conv.keep_x4:
        X[4] = DiffOperator.zero()
    orbital, spin, M = {}, {}, {}
    for mu in INDICES:
        for nu in INDICES:
            if mu == nu:
                continue
            orb = X[mu] * P_up[nu] - X[nu] * P_up[mu]
            sp = DiffOperator.coeff(dm.F2[(mu, nu)].scale(conv.spin_sign))
            orbital[(mu, nu)], spin[(mu, nu)], M[(mu, nu)] = orb, sp, orb + sp
    J = {1: M[(2, 3)], 2: M[(3, 1)], 3: M[(1, 2)]}
    K = {a: M[(a, 4)] for a in SPATIAL}
    Kt = {a: M[(a, 5)] for a in SPATIAL}
    Qt = M[(4, 5)]
    named = {f"P^{a}": P_up[a] for a in SPATIAL}
    named["P_4"], named["P_5"] = P_low[4], P_low[5]
    for a in SPATIAL:
        named[f"J^{a}"], named[f"K^{a}"], named[f"Kt^{a}"] = J[a], K[a], Kt[a]
    named["Qt"] = Qt
    return GeneratorSet(conv, P_up, P_low, X, orbital, spin, M, J, K, Kt, Qt, named)


def _split(name: str):
    if name == "Qt":
        return "Qt", 0
    if name in ("P_4", "P_5"):
        return name, 0
    kind, idx = name.split("^")
    return kind, int(idx)


def _eps_sum(gs, a, b, family, coef):
    out = DiffOperator.zero()
    for c in SPATIAL:
        e = eps3(a, b, c)
        if e:
            out = out + family[c].scale(coef * e)
    return out


def expected_commutator(gs: GeneratorSet, x: str, y: str) -> DiffOperator:
    """Right-hand side of [x, y] from the Galilei table and its extension."""
    r = _rule(gs, x, y)
    if r is not None:
        return r
    r = _rule(gs, y, x)
    if r is not None:
        return -r
    return DiffOperator.zero()


def _rule(gs, x, y):
    (kx, a), (ky, b) = _split(x), _split(y)
    Pn = {c: gs.named[f"P^{c}"] for c in SPATIAL}
    if kx == "J" and ky in ("J", "K", "P", "Kt"):
        family = {"J": gs.J, "K": gs.K, "P": Pn, "Kt": gs.Ktilde}[ky]
        return _eps_sum(gs, a, b, family, I)
    if kx == "K" and ky == "P_4":
        return Pn[a].scale(I)
    if kx == "P" and ky == "K":
        return gs.named["P_5"].scale(I * METRIC(a, b))
    if kx == "P" and ky == "Kt":
        return gs.named["P_4"].scale(I * METRIC(a, b))
    if kx == "Kt" and ky == "P_5":
        return Pn[a].scale(I)
    if kx == "K" and ky == "Kt":
        return _eps_sum(gs, a, b, gs.J, -I) - gs.Qtilde.scale(I * METRIC(a, b))
    if kx == "Qt":
        if ky == "K":
            return gs.K[b].scale(I)
        if ky == "Kt":
            return gs.Ktilde[b].scale(-I)
        if ky == "P_5":
            return gs.named["P_5"].scale(I)
        if ky == "P_4":
            return gs.named["P_4"].scale(-I)
    return None


def _screen(gs) -> list:
    probes = [("J^1", "J^2"), ("J^1", "K^2"), ("K^1", "P_4"), ("P^1", "K^1"), ("K^1", "Kt^2")]
    return [f"[{x},{y}]" for x, y in probes
            if commutator(gs[x], gs[y]) != expected_commutator(gs, x, y)]


def verify_conventions() -> CheckReport:
    """Which sign choices reproduce the algebra, and that the x^4 term is needed."""
    rep = CheckReport("sign conventions")
    chosen = select_convention().convention
    rep.add("a candidate convention reproduces the algebra", REF_ALGEBRA, True, f"selected: {chosen.label()}")
    for conv in CANDIDATES:
        bad = _screen(_build(conv))
        rep.add(f"screening of '{conv.label()}'", REF_ALGEBRA, True,
                "accepted" if not bad else f"rejected by {', '.join(bad)}")
    dropped = SignConvention(chosen.x_sign, chosen.spin_sign, keep_x4=False)
    try:
        build_generators(dropped)
    except ConventionRejected as exc:
        rep.add("dropping the x4 term is rejected", REF_ALGEBRA, True, str(exc))
    else:
        rep.add("dropping the x4 term is rejected", REF_ALGEBRA, False, "the reduced generators were accepted")
    return rep


def verify_galilei_algebra(gs: GeneratorSet) -> CheckReport:
    """Every commutator among the 11 Galilei generators plus K~ and Q~."""
    rep = CheckReport("Galilei algebra")
    names = GALILEI_NAMES + EXTENSION_NAMES
    for x, y in combinations(names, 2):
        ref = REF_ALGEBRA if (x in GALILEI_NAMES and y in GALILEI_NAMES) else REF_EXTENSION
        rep.check(f"[{x},{y}]", ref,
                  lambda x=x, y=y: equal_witness(commutator(gs[x], gs[y]), expected_commutator(gs, x, y)))
    for (mu, nu), m in gs.M.items():
        if mu < nu:
            rep.check(f"M^{mu}{nu} antisymmetric", "antisymmetry of the rotation generators",
                      lambda mu=mu, nu=nu: zero_witness(gs.M[(mu, nu)] + gs.M[(nu, mu)]))
    return rep


# Pauli-Lubanski tensor ------------------------------------------------

@dataclass
class PauliLubanski:
    W5: dict        # lower-index W_{5 mu} from the epsilon definition
    W5_formula: dict  # the explicit component formulas

    def upper(self, mu: int) -> DiffOperator:
        out = DiffOperator.zero()
        for nu, g in METRIC.raise_index(mu):
            out = out + self.W5[nu].scale(g)
        return out


def w_tensor(gs: GeneratorSet, mu: int, nu: int) -> DiffOperator:
    """W_{mu nu} = 1/2 eps_{mu alpha beta rho nu} P^alpha M^{beta rho}."""
    out = DiffOperator.zero()
    half = ExactScalar("1/2")
    for al in INDICES:
        for be in INDICES:
            for rh in INDICES:
                e = eps5(mu, al, be, rh, nu)
                if e:
                    out = out + (gs.P_up[al] * gs.M[(be, rh)]).scale(half * e)
    return out


def build_pauli_lubanski(gs: GeneratorSet) -> PauliLubanski:
    W5 = {nu: w_tensor(gs, 5, nu) for nu in INDICES}
    formula = {}
    p5 = gs.P_low[5]
    for a in SPATIAL:
        cross = DiffOperator.zero()
        for b in SPATIAL:
            for c in SPATIAL:
                e = eps3(a, b, c)
                if e:
                    cross = cross + (gs.K[b] * gs.P_up[c]).scale(e)
        formula[a] = p5 * gs.J[a] - cross
    formula[4] = sum((gs.P_low[a] * gs.J[a] for a in SPATIAL), DiffOperator.zero())
    formula[5] = DiffOperator.zero()
    return PauliLubanski(W5, formula)


@dataclass
class CasimirSet:
    I1: DiffOperator
    I2: DiffOperator
    I3: DiffOperator
    rest_energy: DiffOperator


def build_casimirs(gs: GeneratorSet, pl: PauliLubanski) -> CasimirSet:
    I1 = DiffOperator.zero()
    I3 = DiffOperator.zero()
    for mu in INDICES:
        for nu, g in METRIC.raise_index(mu):
            I1 = I1 + (gs.P_low[mu] * gs.P_low[nu]).scale(g)
            I3 = I3 + (pl.W5[mu] * pl.W5[nu]).scale(g)
    psq = sum((P[a] * P[a] for a in SPATIAL), P[1] * 0)
    rest = DiffOperator.coeff(P[4] - psq / (2 * P[5]))
    return CasimirSet(I1, gs.P_low[5], I3, rest)


def verify_pauli_lubanski(gs: GeneratorSet, pl: PauliLubanski) -> CheckReport:
    rep = CheckReport("Pauli-Lubanski tensor")
    rep.check("W_55 vanishes", REF_PL, lambda: zero_witness(pl.W5[5]))
    for mu in (1, 2, 3, 4):
        rep.check(f"W_5{mu} epsilon definition equals component formula", REF_PL,
                  lambda mu=mu: equal_witness(pl.W5[mu], pl.W5_formula[mu]))
    return rep


def verify_casimirs(gs: GeneratorSet, pl: PauliLubanski, cas: CasimirSet) -> CheckReport:
    rep = CheckReport("Casimir invariants")
    for label, c in (("I1", cas.I1), ("I2", cas.I2), ("I3", cas.I3), ("rest energy", cas.rest_energy)):
        for name, g in gs.galilei():
            rep.check(f"[{label},{name}] vanishes", REF_CASIMIR,
                      lambda c=c, g=g: zero_witness(commutator(c, g)))
    # P^mu W_{5 mu} = 0
    rep.check("P^mu W_5mu vanishes", "transversality of W_5",
              lambda: zero_witness(sum((gs.P_up[mu] * pl.W5[mu] for mu in INDICES), DiffOperator.zero())))
    for s in INDICES:
        for mu in INDICES:
            rep.check(f"[P^{s},W_5{mu}] vanishes", "translation invariance of W_5",
                      lambda s=s, mu=mu: zero_witness(commutator(gs.P_up[s], pl.W5[mu])))
    for mu, nu in combinations(INDICES, 2):
        def rhs(mu=mu, nu=nu):
            out = DiffOperator.zero()
            for lam in INDICES:
                for rho in INDICES:
                    e = eps5(5, mu, nu, lam, rho)
                    if e:
                        out = out + (pl.upper(lam) * gs.P_up[rho]).scale(I * e)
            return out
        rep.check(f"[W_5{mu},W_5{nu}] closes on W_5 P", "commutators of W_5",
                  lambda mu=mu, nu=nu, rhs=rhs: equal_witness(commutator(pl.W5[mu], pl.W5[nu]), rhs()))
    # the non-Galilean boost: I1 still commutes, I2 does not
    for a in SPATIAL:
        rep.check(f"[I1,Kt^{a}] vanishes", "I1 invariance under non-Galilean boosts",
                  lambda a=a: zero_witness(commutator(cas.I1, gs.Ktilde[a])))
        c2 = commutator(cas.I2, gs.Ktilde[a])
        rep.add(f"[I2,Kt^{a}] nonzero", "I2 violated by non-Galilean boosts", not c2.is_zero(),
                f"[I2,Kt^{a}] = {c2}; equals -iP^{a}: {c2 == gs.named[f'P^{a}'].scale(-I)}")
    cq = commutator(cas.I1, gs.Qtilde)
    rep.add("[I1,Qt] recorded", "I1 and the central charge", True, f"[I1,Qt] = {cq}")
    return rep
