"""Galilean metric, gamma matrices and the spinor matrices built from them.

Indices run 1..5; 1..3 are spatial, 4 is the time-like null direction and 5
the mass-like one.  The matrices ``gamma[mu]`` are the upper-index gammas of
the chosen representation; lower indices are obtained by applying ``g``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from galspin.exact import HALF, I, INV_SQRT2, ExactScalar, Matrix, PolyFrac, symbol
from galspin.report import CheckReport, equal_witness, zero_witness

SPATIAL = (1, 2, 3)
INDICES = (1, 2, 3, 4, 5)


class GalileanMetric:
    """g_ab = -delta_ab, g_45 = g_54 = 1, every other entry 0.  g is its own inverse."""

    def __init__(self):
        self._g = {(a, a): -1 for a in SPATIAL}
        self._g[(4, 5)] = self._g[(5, 4)] = 1

    def __call__(self, mu: int, nu: int) -> int:
        return self._g.get((mu, nu), 0)

    upper = __call__

    def inverse(self, mu: int, nu: int) -> int:
        return self(mu, nu)

    def raise_index(self, mu: int) -> list:
        """Nonzero (nu, g^{mu nu}) pairs."""
        return [(nu, self(mu, nu)) for nu in INDICES if self(mu, nu)]

    def matrix(self) -> Matrix:
        return Matrix((5, 5), {(m - 1, n - 1): v for (m, n), v in self._g.items()})

    def dot(self, x, y):
        """g_{mu nu} x^mu y^nu for 5-vectors indexed 0..4."""
        acc = 0
        for (m, n), v in self._g.items():
            acc = acc + v * x[m - 1] * y[n - 1]
        return acc


METRIC = GalileanMetric()


def eps3(a: int, b: int, c: int) -> int:
    if len({a, b, c}) < 3:
        return 0
    return _perm_sign([a, b, c], [1, 2, 3])


def eps5(*idx) -> int:
    """Lower-index 5d Levi-Civita symbol with eps_{54123} = +1 (so eps_{54abc} = eps_abc)."""
    if len(set(idx)) < 5:
        return 0
    return _perm_sign(list(idx), [5, 4, 1, 2, 3])


def _perm_sign(seq, base) -> int:
    pos = [base.index(x) for x in seq]
    sign = 1
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            if pos[i] > pos[j]:
                sign = -sign
    return sign


def _m2(a, b, c, d) -> Matrix:
    return Matrix.from_rows([[a, b], [c, d]])


SIGMA = {
    1: _m2(0, 1, 1, 0),
    2: _m2(0, -I, I, 0),
    3: _m2(1, 0, 0, -1),
}
I2 = Matrix.identity(2)
I4 = Matrix.identity(4)
Z2 = Matrix.zeros(2)


def blockdiag(a: Matrix, b: Matrix) -> Matrix:
    return Matrix.blocks([[a, Matrix.zeros(a.shape[0])], [Matrix.zeros(a.shape[0]), b]])


@dataclass(frozen=True)
class GammaSet:
    gamma: dict
    gamma0: Matrix

    def __getitem__(self, mu: int) -> Matrix:
        return self.gamma[mu]

    def lower(self, mu: int) -> Matrix:
        out = Matrix.zeros(4)
        for nu, g in METRIC.raise_index(mu):
            out = out + self.gamma[nu].scale(g)
        return out

    def slash(self, p_lower) -> Matrix:
        """gamma^mu p_mu for a 5-vector of lower components (index 0..4)."""
        out = Matrix.zeros(4)
        for mu in INDICES:
            c = p_lower[mu - 1]
            if c:
                out = out + self.gamma[mu].scale(c)
        return out


def build_gamma_set() -> GammaSet:
    gamma = {}
    for a in SPATIAL:
        s = SIGMA[a].scale(I)
        gamma[a] = Matrix.blocks([[Z2, s], [s, Z2]])
    gamma[4] = Matrix.blocks([[I2, I2], [-I2, -I2]]).scale(INV_SQRT2)
    gamma[5] = Matrix.blocks([[I2, -I2], [I2, -I2]]).scale(INV_SQRT2)
    gamma0 = (gamma[4] + gamma[5]).scale(INV_SQRT2)
    return GammaSet(gamma, gamma0)


GAMMA = build_gamma_set()


def verify_clifford_relations(gs: GammaSet = GAMMA, g: GalileanMetric = METRIC) -> CheckReport:
    rep = CheckReport("clifford relations")
    for mu, nu in combinations_with_replacement(INDICES, 2):
        expected = I4.scale(2 * g(mu, nu))
        rep.check(f"anticommutator gamma{mu} gamma{nu}", "gamma anticommutation relations",
                  lambda mu=mu, nu=nu, e=expected: equal_witness(gs[mu].anticommutator(gs[nu]), e))
    return rep


@dataclass(frozen=True)
class DerivedMatrices:
    Sigma: dict
    SigmaTilde: dict
    F2: dict
    F3: dict
    Gamma: Matrix
    Iplus: Matrix
    Iminus: Matrix
    mass_ratio: object

    def spin(self, mu: int, nu: int) -> Matrix:
        """(i/4)[gamma^mu, gamma^nu] = -F^{mu nu}, the spinor part of M^{mu nu}."""
        return -self.F2[(mu, nu)]


def _f2(gs, mu, nu) -> Matrix:
    return gs[mu].commutator(gs[nu]).scale(ExactScalar(0, 0, "-1/4"))


def build_derived_matrices(gs: GammaSet = GAMMA, mass_ratio=None) -> DerivedMatrices:
    """Spin matrices, F tensors, Gamma and the projector-like I+ / I-.

    ``mass_ratio`` stands for m*cbar/k; by default it is the free symbol ``mu``.
    """
    if mass_ratio is None:
        mass_ratio = symbol("mu")
    g45 = gs[4] * gs[5] - gs[5] * gs[4]
    Sigma = {a: (gs[a] * g45).scale(I * HALF) for a in SPATIAL}
    for a in SPATIAL:
        if Sigma[a] != blockdiag(SIGMA[a], SIGMA[a]):
            raise AssertionError(f"Sigma{a} is not block-diagonal sigma{a}")
    SigmaTilde = {a: -(Sigma[a] * gs[5]) for a in SPATIAL}
    F2 = {(mu, nu): _f2(gs, mu, nu) for mu in INDICES for nu in INDICES}
    F3 = {}
    for rho in INDICES:
        for mu in INDICES:
            for nu in INDICES:
                F3[(rho, mu, nu)] = gs[rho] * F2[(mu, nu)] - gs[mu] * F2[(rho, nu)] - gs[nu] * F2[(rho, mu)]
    Gamma = (gs[4] - gs[5]).scale(INV_SQRT2) + F2[(4, 5)].scale(2 * I)
    ratio = PolyFrac.coerce(mass_ratio)
    Iplus = I4 - gs[5].scale(ratio)
    Iminus = I4 + gs[5].scale(ratio)
    return DerivedMatrices(Sigma, SigmaTilde, F2, F3, Gamma, Iplus, Iminus, mass_ratio)


def verify_derived_matrices(gs: GammaSet = GAMMA) -> CheckReport:
    rep = CheckReport("derived spinor matrices")
    dm = build_derived_matrices(gs)
    rep.check("gamma4 squared vanishes", "nilpotent gamma4", lambda: zero_witness(gs[4] * gs[4]))
    rep.check("gamma5 squared vanishes", "nilpotent gamma5", lambda: zero_witness(gs[5] * gs[5]))
    rep.check("gamma0 is diag(1,1,-1,-1)", "gamma0 representation",
              lambda: equal_witness(gs.gamma0, Matrix.diag([1, 1, -1, -1])))
    rep.check("gamma0 squared is identity", "gamma0 representation",
              lambda: equal_witness(gs.gamma0 * gs.gamma0, I4))
    rep.check("Gamma squared vanishes", "Gamma matrix of the reduced theory",
              lambda: zero_witness(dm.Gamma * dm.Gamma))
    for a in SPATIAL:
        rep.check(f"F^{a}44 vanishes", "spin part of the Galilean boost",
                  lambda a=a: zero_witness(dm.F3[(a, 4, 4)]))
        rep.check(f"Sigma{a} is blockdiag(sigma{a}, sigma{a})", "Dirac spin operator",
                  lambda a=a: equal_witness(dm.Sigma[a], blockdiag(SIGMA[a], SIGMA[a])))
    for a, b in ((1, 2), (2, 3), (3, 1)):
        c = 6 - a - b
        rep.check(f"Sigma{a} Sigma{b} commutator", "Pauli algebra of Sigma",
                  lambda a=a, b=b, c=c: equal_witness(dm.Sigma[a].commutator(dm.Sigma[b]),
                                                      dm.Sigma[c].scale(2 * I * eps3(a, b, c))))
    rep.check("Iplus Iminus is identity", "mass projectors I+ and I-",
              lambda: equal_witness(dm.Iplus * dm.Iminus, I4))
    for mu in INDICES:
        adj = gs.gamma0 * gs[mu].dagger() * gs.gamma0
        rel = "equals" if adj == gs[mu] else ("negates" if adj == -gs[mu] else "differs from")
        rep.add(f"gamma0 adjoint of gamma{mu}", "Dirac adjoint", adj == gs[mu] or adj == -gs[mu],
                f"gamma0 gamma{mu}^dagger gamma0 {rel} gamma{mu}")
    return rep
