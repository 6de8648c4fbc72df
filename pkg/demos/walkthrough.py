"""A short tour of galspin, from gamma matrices to Fock space.

Run with ``python demos/walkthrough.py``.  Every number printed is exact.
"""
from galspin import clifford, fock, galilei, reduction, spin, transforms
from galspin.exact import INV_SQRT2, ONE
from galspin.weyl import commutator, format_operator

# The five gamma matrices satisfy the Clifford algebra of the Galilean metric,
# in which gamma4 and gamma5 are null.
g4 = clifford.GAMMA[4]
print("gamma4 =")
print(g4)
print("gamma4 squared is zero:", (g4 * g4).is_zero())
print()

# Generators of the extended Galilei algebra act on momentum-space spinors.
gs = galilei.build_generators()
J1, J2 = gs.named["J^1"], gs.named["J^2"]
print("[J^1, J^2] =", format_operator(commutator(J1, J2)))
print()

# The spin operator built from the Pauli-Lubanski tensor.
pl = galilei.build_pauli_lubanski(gs)
rep = spin.verify_spin_operator(gs, pl, spin.build_spin_operator(gs, pl))
print(f"spin operator checks: {rep.passed} passed, {rep.failed} failed")
print()

# A non-Galilean boost changes the inertial mass but keeps m m0 fixed.
ks = transforms.KinematicState.from_cbar(1, 1, 1, (1, 0, 0))
after = transforms.mass_kinematics(ks, (1, 0, 0))
print(f"m = {ks.m}, m0 = {ks.m0}  ->  m' = {after.m}, m0' = {after.m0}")
print()

# In the reduced (3+1) theory the spin states at p = (3,4,0), k = 5/2.
st = reduction.spin_states((3, 4, 0), 1, "5/2")
print(f"f1 = {st.f1}, f2 = {st.f2}")
for label, (c1, c2) in st.states.items():
    print(f"  {label}: ({c1})|1> + ({c2})|2>")
print()

# Dirac spin commutes with the (3+1) evolution but not with the (4+1) one.
w = spin.nonconservation_witness(ONE, INV_SQRT2)
for row in w.report.rows:
    if "nonzero" in row.check_name:
        print(f"{row.check_name}: {row.witness}")
print()

# Second quantization on a single momentum: T-+ turns a particle into an
# antiparticle of the same momentum.
ctx = fock.build_fock_space([(3, 4, 0)], 1, "5/2")
print(f"Fock space with {ctx.nmodes} modes, dimension {ctx.dim}")
rep = fock.fock_report([(3, 4, 0)], 1, "5/2")
print(f"Fock checks: {rep.passed} passed, {rep.failed} failed, {rep.skipped} skipped")
