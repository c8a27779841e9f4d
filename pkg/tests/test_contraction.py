import itertools
from fractions import Fraction

import numpy as np
import pytest

import gtlie
from gtlie.contraction import (
    ContractedRep,
    EpsilonTable,
    PsiTable,
    contract_algebra,
    contract_rep,
    enumerate_binary_epsilon,
    enumerate_binary_psi,
    epsilon_from_rows,
    psi_from_rows,
    verify_epsilon,
    verify_psi,
    verify_rep_homomorphism,
)
from gtlie.errors import IncompatibleError, InputError, VerificationError
from gtlie.groups import AbelianGroup
from gtlie.gtrep import HighestWeight, build_representation

Z2 = AbelianGroup((2,))


def eps(rows):
    return epsilon_from_rows(Z2, rows)


def psi(rows):
    return psi_from_rows(Z2, rows)


@pytest.fixture(scope="module")
def sl3_setup():
    sl3 = gtlie.sl_algebra(3)
    gamma1 = gtlie.grading_from_automorphism(sl3, gtlie.auto_inner(3, 1))
    return sl3, gamma1


def test_verify_epsilon_examples():
    assert verify_epsilon(eps([[1, 1], [1, 0]])).ok
    assert verify_epsilon(eps([[1, 1], [1, 1]])).ok
    report = verify_epsilon(eps([[0, 1], [1, 0]]))
    assert not report.ok


def test_verify_epsilon_rejects_asymmetry_and_gaps():
    table = EpsilonTable(Z2, {((0,), (0,)): 1, ((0,), (1,)): 1, ((1,), (0,)): 0, ((1,), (1,)): 0})
    report = verify_epsilon(table)
    assert not report.ok and any(v[0] == "symmetry" for v in report.violations)
    with pytest.raises(InputError):
        verify_epsilon(EpsilonTable(Z2, {((0,), (0,)): 1}))


def test_binary_epsilon_solutions_z2():
    tables = enumerate_binary_epsilon(Z2)
    got = {t.as_tuple() for t in tables}  # (e00, e01, e10, e11)
    expected = {
        (0, 0, 0, 0),
        (0, 0, 0, 1),
        (1, 0, 0, 0),
        (1, 1, 1, 0),
        (1, 1, 1, 1),
    }
    assert got == {tuple(Fraction(x) for x in t) for t in expected}
    # the four published normal forms all appear
    for rows in ([[1, 1], [1, 0]], [[1, 0], [0, 0]], [[0, 0], [0, 1]], [[0, 0], [0, 0]]):
        assert eps(rows).as_tuple() in got


def test_binary_epsilon_matches_reduced_system_oracle():
    # independent oracle: the Z2 system reduces to
    # (e00 - e01) e01 = 0 = (e00 - e01) e11
    solutions = {t.as_tuple() for t in enumerate_binary_epsilon(Z2)}
    brute = set()
    for e00, e01, e11 in itertools.product((0, 1), repeat=3):
        if (e00 - e01) * e01 == 0 and (e00 - e01) * e11 == 0:
            brute.add(tuple(Fraction(x) for x in (e00, e01, e01, e11)))
    assert solutions == brute


def test_binary_epsilon_trivial_group():
    group = AbelianGroup((1,))
    tables = enumerate_binary_epsilon(group)
    assert [t.as_tuple() for t in tables] == [(Fraction(0),), (Fraction(1),)]


def test_enumeration_guard():
    with pytest.raises(InputError):
        enumerate_binary_epsilon(AbelianGroup((2, 2, 2)))  # 36 cells
    with pytest.raises(InputError):
        enumerate_binary_psi(epsilon_from_rows(AbelianGroup((4,)), np.ones((4, 4), dtype=int).tolist()))


def test_verify_psi_examples():
    canonical = eps([[1, 1], [1, 0]])
    for table in enumerate_binary_epsilon(Z2):
        rows = [[table.value((0,), (0,)), table.value((0,), (1,))],
                [table.value((1,), (0,)), table.value((1,), (1,))]]
        assert verify_psi(psi(rows), table).ok  # psi = eps always solves
    assert verify_psi(psi([[1, 1], [0, 1]]), canonical).ok
    report = verify_psi(psi([[1, 1], [1, 1]]), canonical)
    assert not report.ok


def test_binary_psi_solutions_reference_list():
    canonical = eps([[1, 1], [1, 0]])
    got = {t.as_tuple() for t in enumerate_binary_psi(canonical)}
    expected = {
        (1, 1, 1, 0),
        (1, 1, 0, 1),
        (1, 1, 0, 0),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 0, 0),
    }
    assert got == {tuple(Fraction(x) for x in t) for t in expected}
    assert len(got) == 6


def test_binary_psi_edge_epsilons():
    all_ones = eps([[1, 1], [1, 1]])
    sols = {t.as_tuple() for t in enumerate_binary_psi(all_ones)}
    assert tuple(Fraction(1) for _ in range(4)) in sols  # psi = eps present
    all_zero = eps([[0, 0], [0, 0]])
    zeros = tuple(Fraction(0) for _ in range(4))
    assert zeros in {t.as_tuple() for t in enumerate_binary_psi(all_zero)}
    with pytest.raises(VerificationError):
        enumerate_binary_psi(eps([[0, 1], [1, 0]]))


def test_contract_identity_and_abelian(sl3_setup):
    sl3, gamma1 = sl3_setup
    ones = contract_algebra(sl3, gamma1, eps([[1, 1], [1, 1]]))
    # all-ones epsilon: same brackets, just written in the adapted basis
    adapted = ones.adapted
    k = sl3.dim
    for a in range(k):
        for b in range(k):
            direct = gtlie.bracket(adapted[:, a], adapted[:, b], sl3)
            via_new = adapted @ ones.result.structure[a, b]
            assert np.abs(direct - via_new).max() == 0.0
    zero = contract_algebra(sl3, gamma1, eps([[0, 0], [0, 0]]))
    assert np.abs(zero.result.structure).max() == 0.0


def test_contract_heisenberg_pattern(sl3_setup):
    sl3, gamma1 = sl3_setup
    calg = contract_algebra(sl3, gamma1, eps([[0, 0], [0, 1]]))
    c = calg.result.structure
    labels = calg.labels
    for a in range(8):
        for b in range(8):
            block = np.abs(c[a, b]).max()
            if labels[a] == (1,) and labels[b] == (1,):
                continue  # the only block allowed to survive
            assert block == 0.0
    # [L1, L1] is nonzero and lands entirely in the now-central L0
    ones_block = [
        l for a in range(8) for b in range(8) for l in range(8)
        if labels[a] == (1,) and labels[b] == (1,) and c[a, b, l] != 0
    ]
    assert ones_block and all(labels[l] == (0,) for l in ones_block)
    assert gtlie.check_jacobi(calg.result).max_residual == 0.0


def test_contract_semidirect_pattern(sl3_setup):
    # eps = [[1,1],[1,0]]: only the L1 x L1 block is killed
    sl3, gamma1 = sl3_setup
    calg = contract_algebra(sl3, gamma1, eps([[1, 1], [1, 0]]))
    c = calg.result.structure
    labels = calg.labels
    for a in range(8):
        for b in range(8):
            if labels[a] == (1,) and labels[b] == (1,):
                assert np.abs(c[a, b]).max() == 0.0


def test_contract_all_binary_epsilons_jacobi_exact(sl3_setup):
    sl3, gamma1 = sl3_setup
    for table in enumerate_binary_epsilon(Z2):
        calg = contract_algebra(sl3, gamma1, table)
        assert gtlie.check_jacobi(calg.result).max_residual == 0.0


def test_contract_rejects_bad_inputs(sl3_setup):
    sl3, gamma1 = sl3_setup
    with pytest.raises(VerificationError):
        contract_algebra(sl3, gamma1, eps([[0, 1], [1, 0]]))
    bad_parts = {
        (0,): np.eye(8, dtype=complex)[:, :5],
        (1,): np.eye(8, dtype=complex)[:, 5:],
    }
    bad = gtlie.Grading(group=Z2, parts=bad_parts)
    with pytest.raises(VerificationError):
        contract_algebra(sl3, bad, eps([[1, 1], [1, 1]]))


@pytest.fixture(scope="module")
def rep_setup(sl3_setup):
    sl3, gamma1 = sl3_setup
    hw = HighestWeight(3, (1, 0, 0))
    rep = build_representation(hw)
    vgamma = gtlie.decompose_rep_space(gtlie.simulation_inner(hw, 3, 1))
    return sl3, gamma1, rep, vgamma


def test_contract_rep_identity(rep_setup):
    # psi = eps = all-ones reproduces the base representation matrices
    sl3, gamma1, rep, vgamma = rep_setup
    from gtlie.autos import rep_matrix_of, rep_sl_matrices

    table = eps([[1, 1], [1, 1]])
    crep = contract_rep(rep, vgamma, gamma1, psi([[1, 1], [1, 1]]), table)
    mats = rep_sl_matrices(rep)
    alabels, abasis = crep.labels, np.column_stack(
        [gamma1.parts[lab] for lab in sorted(gamma1.parts)]
    )
    vb = crep.vbasis
    for a in range(8):
        direct = np.linalg.solve(vb, rep_matrix_of(rep, abasis[:, a], mats) @ vb)
        assert np.abs(direct - crep.matrices[a]).max() <= 1e-12
    calg = contract_algebra(sl3, gamma1, table)
    assert verify_rep_homomorphism(crep, calg).max_residual <= 1e-12


def test_contract_rep_block_shape(rep_setup):
    # psi scales the V_j columns: X0 block-diagonal, X1 block-antidiagonal
    sl3, gamma1, rep, vgamma = rep_setup
    table = eps([[1, 1], [1, 0]])
    p = psi([[1, 1], [0, 1]])
    crep = contract_rep(rep, vgamma, gamma1, p, table)
    v0 = sum(1 for lab in crep.vlabels if lab == (0,))
    for a, lab in enumerate(crep.labels):
        m = crep.matrices[a]
        if lab == (0,):
            assert np.abs(m[v0:, :v0]).max() == 0.0 and np.abs(m[:v0, v0:]).max() == 0.0
        else:
            assert np.abs(m[:v0, :v0]).max() == 0.0 and np.abs(m[v0:, v0:]).max() == 0.0
    # psi_{1,0} = 0 kills the lower-left block of the odd operators
    odd = [crep.matrices[a] for a, lab in enumerate(crep.labels) if lab == (1,)]
    assert any(np.abs(m[:v0, v0:]).max() > 0 for m in odd)
    assert all(np.abs(m[v0:, :v0]).max() == 0.0 for m in odd)


def test_contract_rep_all_pairs(rep_setup):
    sl3, gamma1, rep, vgamma = rep_setup
    for table in enumerate_binary_epsilon(Z2):
        calg = contract_algebra(sl3, gamma1, table)
        for p in enumerate_binary_psi(table):
            crep = contract_rep(rep, vgamma, gamma1, p, table)
            report = verify_rep_homomorphism(crep, calg)
            assert report.ok and report.max_residual <= 1e-9


def test_contract_rep_rejects_incompatible(rep_setup):
    sl3, gamma1, rep, _ = rep_setup
    table = eps([[1, 1], [1, 1]])
    bad_v = gtlie.Grading(
        group=Z2,
        parts={
            (0,): np.eye(3, dtype=complex)[:, :1],
            (1,): np.eye(3, dtype=complex)[:, 1:],
        },
    )
    with pytest.raises(IncompatibleError):
        contract_rep(rep, bad_v, gamma1, psi([[1, 1], [1, 1]]), table)


def test_contract_rep_rejects_bad_psi(rep_setup):
    sl3, gamma1, rep, vgamma = rep_setup
    with pytest.raises(VerificationError):
        contract_rep(rep, vgamma, gamma1, psi([[1, 1], [1, 1]]), eps([[1, 1], [1, 0]]))


def test_homomorphism_check_catches_invalid_psi(rep_setup):
    # bypass the constructor guard and confirm the verifier sees the failure
    sl3, gamma1, rep, vgamma = rep_setup
    table = eps([[1, 1], [1, 0]])
    calg = contract_algebra(sl3, gamma1, table)
    good = contract_rep(rep, vgamma, gamma1, psi([[1, 1], [1, 0]]), table)
    bad_psi = psi([[1, 1], [1, 1]])
    scaled = []
    for a, lab in enumerate(good.labels):
        base = contract_rep(rep, vgamma, gamma1, psi([[1, 1], [1, 1]]), eps([[1, 1], [1, 1]])).matrices[a]
        m = base.copy()
        for col, vlab in enumerate(good.vlabels):
            m[:, col] *= complex(bad_psi.value(lab, vlab))
        scaled.append(m)
    tampered = ContractedRep(
        rep=rep, gamma=gamma1, vgamma=vgamma, eps=table, psi=bad_psi,
        labels=good.labels, vlabels=good.vlabels, vbasis=good.vbasis,
        matrices=tuple(scaled),
    )
    assert not verify_rep_homomorphism(tampered, calg).ok
