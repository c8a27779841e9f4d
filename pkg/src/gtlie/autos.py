"""Order-2 automorphisms of sl(n, C), gradings from their eigenspaces,
simulation matrices, contragredient machinery, and compatibility checks.

An automorphism g with g^k = Id grades the algebra by eigenvalue
(lambda = exp(2 pi i l / k) gets label l).  A *simulation matrix* of g on a
representation r is an invertible R with

    r(g(x)) = R r(x) R^{-1}   and   R^k = Id;

its eigenspace decomposition of the carrier space is then compatible with
the grading in the sense r(L_i) V_j subset of V_{i+j}.

Two constructions cover the order-2 cases:

  * inner  g = Ad_A with A = omega^eta(s) diag(I_{n-s}, -I_s):  R is the
    diagonal matrix with phases exp(i pi ((eta/n - 1) r_n - r_{n-s})) on
    the GT basis, rescaled once when the raw square is a nontrivial
    scalar (Schur freedom) so that R^2 = Id holds exactly;
  * outer  g: X -> -X^T:  R is the signed permutation J sending xi(m) to
    (-1)^{sum of entries} xi(m') with the reflected pattern m', which
    exists precisely when the weight is self-contragredient.  For other
    weights the doubled representation r + (-r^T) with the block-swap
    simulation matrix is the way out.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import (
    Grading,
    LieAlgebra,
    Report,
    matrix_to_coords,
    sl_basis_labels,
    sl_basis_matrices,
)
from .errors import InputError, VerificationError
from .groups import AbelianGroup
from .gtrep import (
    GeneratorRep,
    GTPattern,
    HighestWeight,
    build_representation,
    enumerate_patterns,
    row_sum,
)
from .linalg import DEFAULT_TOL, independent_columns, max_abs, span_residual


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Automorphism:
    """An automorphism of sl(n, C): X -> A X A^{-1} (inner) or
    X -> -A X^T A^{-1} (outer composed with an inner one)."""

    kind: str  # "inner" | "outer"
    matrix: np.ndarray
    order: int

    def __post_init__(self):
        if self.kind not in ("inner", "outer"):
            raise InputError(f"unknown automorphism kind {self.kind!r}")

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def apply(self, x: np.ndarray) -> np.ndarray:
        a = self.matrix
        y = np.asarray(x, dtype=complex)
        if self.kind == "outer":
            y = -y.T
        if _is_diagonal(a):
            d = np.diag(a)
            return y * np.outer(d, 1.0 / d)
        return np.linalg.solve(a.T, (a @ y).T).T


def _is_diagonal(a: np.ndarray) -> bool:
    return max_abs(a - np.diag(np.diag(a))) == 0.0


def eta(s: int) -> int:
    """Parity marker: 0 for even s, 1 for odd s."""
    return s % 2


def auto_inner(n: int, s: int) -> Automorphism:
    """The inner order-2 class representative Ad_A with
    A = omega^eta(s) diag(I_{n-s}, -I_s), omega = exp(i pi / n).

    s = 0 gives the identity automorphism (order 1).
    """
    if n < 2:
        raise InputError("need n >= 2")
    if not 0 <= s <= n // 2:
        raise InputError(f"s must satisfy 0 <= s <= {n // 2}, got {s}")
    omega = cmath.exp(1j * math.pi / n)
    diag = np.array([1.0] * (n - s) + [-1.0] * s, dtype=complex)
    a = (omega ** eta(s)) * np.diag(diag)
    return Automorphism(kind="inner", matrix=a, order=1 if s == 0 else 2)


def auto_outer(n: int) -> Automorphism:
    """The outer order-2 automorphism X -> -X^T."""
    if n < 2:
        raise InputError("need n >= 2")
    return Automorphism(kind="outer", matrix=np.eye(n, dtype=complex), order=2)


def action_on_sl(aut: Automorphism, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Matrix of the automorphism on sl(n) coordinates (canonical basis).

    Entries that are numerically integral are snapped so that the standard
    diagonal/outer representatives yield exact integer matrices.
    """
    n = aut.n
    mats = sl_basis_matrices(n)
    cols = [matrix_to_coords(n, aut.apply(m), tol) for m in mats]
    act = np.column_stack(cols)
    rounded = np.round(act)
    if max_abs(act - rounded) <= 1e-12 * max(1.0, max_abs(act)):
        return rounded
    return act


def grading_from_automorphism(
    algebra: LieAlgebra, aut: Automorphism, tol: float = DEFAULT_TOL
) -> Grading:
    """Eigenspace decomposition of the automorphism action, labelled by Z_k
    via lambda = exp(2 pi i l / k)."""
    k = algebra.dim
    n = aut.n
    if n * n - 1 != k:
        raise InputError(f"automorphism on {n}x{n} matrices does not act on dim {k}")
    act = action_on_sl(aut, tol)
    order = aut.order
    power = np.linalg.matrix_power(act, order)
    if max_abs(power - np.eye(k)) > tol:
        raise VerificationError(
            f"action matrix does not satisfy M^{order} = Id (residual {max_abs(power - np.eye(k)):.3g})"
        )
    powers = [np.eye(k, dtype=act.dtype)]
    for _ in range(order - 1):
        powers.append(powers[-1] @ act)
    parts = {}
    total = 0
    for l in range(order):
        if order == 2:
            proj = (powers[0] + powers[1]) / 2 if l == 0 else (powers[0] - powers[1]) / 2
        else:
            proj = sum(
                cmath.exp(-2j * math.pi * l * t / order) * powers[t] for t in range(order)
            ) / order
        basis = independent_columns(proj, tol)
        if basis.shape[1]:
            parts[(l,)] = basis.astype(complex)
        total += basis.shape[1]
    if total != k:
        raise VerificationError("automorphism action is defective: eigenspaces do not fill the algebra")
    return Grading(group=AbelianGroup((order,)), parts=parts)


# ---------------------------------------------------------------------------
# Simulation matrices
# ---------------------------------------------------------------------------


def _phase_to_complex(rho: Fraction) -> complex:
    rho = rho % 2
    table = {
        Fraction(0): 1.0 + 0.0j,
        Fraction(1): -1.0 + 0.0j,
        Fraction(1, 2): 1j,
        Fraction(3, 2): -1j,
    }
    if rho in table:
        return table[rho]
    return cmath.exp(1j * math.pi * float(rho))


@dataclass(frozen=True, eq=False)
class SimulationMatrix:
    """Invertible R with R^order = Id, stored in its most structured form.

    kind "diagonal": phases are exact rationals rho with entries
    exp(i pi rho); kind "signed_permutation": R e_c = signs[c] e_{perm[c]};
    kind "dense": explicit complex matrix.
    """

    order: int
    kind: str
    phases: tuple | None = None
    perm: tuple | None = None
    signs: tuple | None = None
    dense: np.ndarray | None = None

    @property
    def dim(self) -> int:
        if self.kind == "diagonal":
            return len(self.phases)
        if self.kind == "signed_permutation":
            return len(self.perm)
        return self.dense.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        if self.kind == "diagonal":
            return np.diag([_phase_to_complex(r) for r in self.phases])
        if self.kind == "signed_permutation":
            d = self.dim
            m = np.zeros((d, d), dtype=complex)
            for c in range(d):
                m[self.perm[c], c] = self.signs[c]
            return m
        return self.dense

    def inverse(self) -> np.ndarray:
        if self.kind == "diagonal":
            return np.diag([_phase_to_complex(-r) for r in self.phases])
        if self.kind == "signed_permutation":
            d = self.dim
            m = np.zeros((d, d), dtype=complex)
            for c in range(d):
                m[c, self.perm[c]] = 1.0 / self.signs[c]
            return m
        try:
            return np.linalg.inv(self.dense)
        except np.linalg.LinAlgError as exc:
            raise VerificationError("singular simulation matrix") from exc

    def power_residual(self) -> float:
        """Sup-norm distance of R^order from the identity."""
        m = np.linalg.matrix_power(self.matrix, self.order)
        return max_abs(m - np.eye(self.dim))


def rep_of_Xns(hw: HighestWeight, n: int, s: int) -> np.ndarray:
    """Diagonal matrix of the algebra element X with exp(X) = A_{n,s}.

    Eigenvalue on xi(m):

        i pi ( eta/n r_n + 2 sum_{t=1..s-1} (-1)^{t-1} r_{n-s+t}
               - r_{n-s} - (-1)^eta r_n ).

    The row-sum formula assumes s >= 1; for s = 0 the automorphism is the
    identity and the matrix is zero.
    """
    if hw.n != n:
        raise InputError(f"weight {hw} is not a weight of sl({n})")
    if not 0 <= s <= n // 2:
        raise InputError(f"s must satisfy 0 <= s <= {n // 2}, got {s}")
    pats = enumerate_patterns(hw)
    d = len(pats)
    if s == 0:
        return np.zeros((d, d), dtype=complex)
    e = eta(s)
    vals = []
    for p in pats:
        total = Fraction(e, n) * row_sum(p, n)
        total += 2 * sum((-1) ** (t - 1) * row_sum(p, n - s + t) for t in range(1, s))
        total -= row_sum(p, n - s)
        total -= (-1) ** e * row_sum(p, n)
        vals.append(1j * math.pi * float(total))
    return np.diag(vals)


def simulation_inner(hw: HighestWeight, n: int, s: int) -> SimulationMatrix:
    """Diagonal simulation matrix of Ad_{A_{n,s}} on the GT basis.

    Raw phases are exp(i pi ((eta/n - 1) r_n - r_{n-s})); when the raw
    matrix squares to a nontrivial scalar (allowed by Schur's lemma) all
    phases are shifted by the first one, making the leading entry the
    principal root +1 and forcing R^2 = Id exactly.
    """
    if hw.n != n:
        raise InputError(f"weight {hw} is not a weight of sl({n})")
    if not 0 <= s <= n // 2:
        raise InputError(f"s must satisfy 0 <= s <= {n // 2}, got {s}")
    pats = enumerate_patterns(hw)
    if s == 0:
        return SimulationMatrix(order=1, kind="diagonal", phases=tuple([Fraction(0)] * len(pats)))
    e = eta(s)
    phases = [
        ((Fraction(e, n) - 1) * row_sum(p, n) - row_sum(p, n - s)) % 2 for p in pats
    ]
    if any(r.denominator != 1 for r in phases):
        shift = phases[0]
        phases = [(r - shift) % 2 for r in phases]
        assert all(r.denominator == 1 for r in phases), "r_n must be constant over patterns"
    return SimulationMatrix(order=2, kind="diagonal", phases=tuple(phases))


# ---------------------------------------------------------------------------
# Contragredient representations and the outer simulation matrix J
# ---------------------------------------------------------------------------


def contragredient_weight(hw: HighestWeight) -> HighestWeight:
    """Weight of the representation X -> -r(X)^T: m'_i = m_1 - m_{n-i+1}."""
    top = hw.m[0]
    return HighestWeight(hw.n, tuple(top - hw.m[hw.n - 1 - i] for i in range(hw.n)))


def is_self_contragredient(hw: HighestWeight) -> bool:
    return contragredient_weight(hw) == hw


def pattern_conjugate(p: GTPattern) -> GTPattern:
    """The reflected pattern m'_{i,j} = m_{1,n} - m_{j-i+1,j}.

    It is a valid pattern of the contragredient weight; for a
    self-contragredient weight the map is an involution on the basis.
    """
    top = p.rows[0][0]
    rows = tuple(tuple(top - x for x in reversed(row)) for row in p.rows)
    q = GTPattern(rows)
    if not q.is_valid():
        raise VerificationError(f"conjugate of {p} violates betweenness")
    return q


def J_matrix(hw: HighestWeight) -> SimulationMatrix:
    """Signed permutation J xi(m) = (-1)^{sum m_{i,j}} xi(m') simulating the
    outer automorphism on a self-contragredient representation.

    J^2 is a scalar by Schur's lemma; when that scalar is -1 (possible for
    n = 2 and odd weights) the signs are multiplied by i once so that the
    returned matrix satisfies R^2 = Id.
    """
    if not is_self_contragredient(hw):
        raise InputError(f"weight {hw} is not self-contragredient; no J exists")
    pats = enumerate_patterns(hw)
    index = {p: i for i, p in enumerate(pats)}
    perm = []
    signs: list[complex] = []
    for p in pats:
        perm.append(index[pattern_conjugate(p)])
        signs.append(complex((-1) ** (p.entry_sum % 2)))
    square = {signs[c] * signs[perm[c]] for c in range(len(pats))}
    if len(square) != 1:
        raise VerificationError("J^2 is not scalar; pattern conjugation bug")
    if square == {complex(-1.0)}:
        signs = [1j * s for s in signs]
    return SimulationMatrix(order=2, kind="signed_permutation", perm=tuple(perm), signs=tuple(signs))


def doubled_rep(hw: HighestWeight):
    """The 2d-dimensional representation r + (-r^T) with its block-swap
    simulation matrix for the outer automorphism.

    Works for any weight; this is the compatible companion for weights
    that are not self-contragredient.
    """
    r0 = build_representation(hw)
    d = r0.dim
    gen = {}
    for (k, l), m in r0.gen.items():
        big = np.zeros((2 * d, 2 * d))
        big[:d, :d] = m
        big[d:, d:] = -m.T
        gen[(k, l)] = big
    swap = SimulationMatrix(
        order=2,
        kind="signed_permutation",
        perm=tuple(list(range(d, 2 * d)) + list(range(d))),
        signs=tuple([complex(1.0)] * (2 * d)),
    )
    return GeneratorRep(r0.n, gen), swap


# ---------------------------------------------------------------------------
# Wiring representations to algebra coordinates
# ---------------------------------------------------------------------------


def rep_sl_matrices(rep: GeneratorRep) -> list[np.ndarray]:
    """Representation matrices of the canonical sl(n) basis, in order."""
    return [rep.sl_label_matrix(lab) for lab in sl_basis_labels(rep.n)]


def rep_matrix_of(rep: GeneratorRep, coords, mats: list[np.ndarray] | None = None) -> np.ndarray:
    """Representation matrix of an algebra element given by coordinates."""
    if mats is None:
        mats = rep_sl_matrices(rep)
    coords = np.asarray(coords, dtype=complex)
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for c, m in zip(coords, mats):
        if c != 0:
            out = out + c * m
    return out


def verify_simulation(
    rep: GeneratorRep,
    aut: Automorphism,
    sim: SimulationMatrix,
    tol: float = DEFAULT_TOL,
) -> Report:
    """Check r(g(x)) = R r(x) R^{-1} on the sl basis and R^order = Id."""
    if sim.dim != rep.dim:
        raise InputError(f"simulation matrix dim {sim.dim} != rep dim {rep.dim}")
    r = sim.matrix
    rinv = sim.inverse()
    mats = rep_sl_matrices(rep)
    n = rep.n
    worst = 0.0
    violations = []
    for lab, base in zip(sl_basis_labels(n), sl_basis_matrices(n)):
        image = matrix_to_coords(n, aut.apply(base))
        lhs = rep_matrix_of(rep, image, mats)
        rhs = r @ rep.sl_label_matrix(lab) @ rinv
        res = max_abs(lhs - rhs)
        worst = max(worst, res)
        if res > tol:
            violations.append((lab, res))
    pw = sim.power_residual()
    worst = max(worst, pw)
    if pw > tol:
        violations.append(("power", pw))
    return Report(ok=not violations, max_residual=worst, violations=violations)


def decompose_rep_space(sim: SimulationMatrix, tol: float = DEFAULT_TOL) -> Grading:
    """Eigenspace decomposition of the carrier space, labelled by Z_order
    via lambda = exp(2 pi i l / order)."""
    k = sim.order
    group = AbelianGroup((k,))
    d = sim.dim
    parts: dict = {lab: [] for lab in group.elements()}

    def eigen_label(value: complex) -> tuple[int, ...]:
        ang = cmath.phase(value) / (2 * math.pi) * k
        l = int(round(ang)) % k
        if abs(value - cmath.exp(2j * math.pi * l / k)) > 1e-6:
            raise VerificationError(f"eigenvalue {value} is not a {k}-th root of unity")
        return (l,)

    if sim.kind == "diagonal":
        for c, rho in enumerate(sim.phases):
            l = (Fraction(rho % 2) * k / 2) % k
            if l.denominator != 1:
                raise VerificationError(f"phase pi*{rho} is not a {k}-th root of unity")
            vec = np.zeros(d, dtype=complex)
            vec[c] = 1.0
            parts[(int(l),)].append(vec)
    elif sim.kind == "signed_permutation" and k == 2:
        for c in range(d):
            q = sim.perm[c]
            if q == c:
                vec = np.zeros(d, dtype=complex)
                vec[c] = 1.0
                parts[eigen_label(sim.signs[c])].append(vec)
            elif q > c:
                for mu in (1.0, -1.0):
                    vec = np.zeros(d, dtype=complex)
                    vec[c] = mu
                    vec[q] = sim.signs[c]
                    parts[eigen_label(complex(mu))].append(vec)
    else:
        m = sim.matrix
        powers = [np.eye(d, dtype=complex)]
        for _ in range(k - 1):
            powers.append(powers[-1] @ m)
        for l in range(k):
            proj = sum(cmath.exp(-2j * math.pi * l * t / k) * powers[t] for t in range(k)) / k
            basis = independent_columns(proj, tol)
            parts[(l,)] = [basis[:, j] for j in range(basis.shape[1])]
    out = {lab: np.column_stack(vecs) for lab, vecs in parts.items() if vecs}
    grading = Grading(group=group, parts=out)
    if grading.total_dim != d:
        raise VerificationError("eigenspaces do not fill the carrier space")
    return grading


def check_compatibility(
    rep: GeneratorRep,
    gamma: Grading,
    vgamma: Grading,
    tol: float = DEFAULT_TOL,
) -> Report:
    """Definition check: r(X_i) V_j inside V_{i+j} for all labels i, j."""
    if gamma.group.orders != vgamma.group.orders:
        raise InputError(
            f"gradings live over different groups: {gamma.group} vs {vgamma.group}"
        )
    mats = rep_sl_matrices(rep)
    worst = 0.0
    violations = []
    for i, xpart in gamma.parts.items():
        for col in range(xpart.shape[1]):
            m = rep_matrix_of(rep, xpart[:, col], mats)
            for j, vpart in vgamma.parts.items():
                target = vgamma.part(vgamma.group.add(i, j))
                image = m @ vpart
                res = max(
                    (span_residual(image[:, b], target) for b in range(image.shape[1])),
                    default=0.0,
                )
                worst = max(worst, res)
                if res > tol:
                    violations.append((i, j, res))
    return Report(ok=not violations, max_residual=worst, violations=violations)


def find_simulation_matrix(
    rep: GeneratorRep, aut: Automorphism, tol: float = DEFAULT_TOL
) -> SimulationMatrix | None:
    """Solve the intertwiner equations r(g(x)) R = R r(x) for R directly.

    Returns a dense simulation matrix normalized to R^order = Id, or None
    when only R = 0 solves the system (no simulation matrix exists).
    """
    n, d = rep.n, rep.dim
    mats = rep_sl_matrices(rep)
    eye = np.eye(d)
    blocks = []
    for lab_matrix, m in zip(sl_basis_matrices(n), mats):
        image = matrix_to_coords(n, aut.apply(lab_matrix))
        a = rep_matrix_of(rep, image, mats)
        blocks.append(np.kron(a, eye) - np.kron(eye, m.T))
    system = np.vstack(blocks)
    _, svals, vh = np.linalg.svd(system)
    null = [vh[i].conj() for i in range(vh.shape[0]) if i >= len(svals) or svals[i] <= tol * max(1.0, svals[0])]
    for vec in null:
        r0 = vec.reshape(d, d)
        if np.linalg.matrix_rank(r0, tol=1e-9) < d:
            continue
        power = np.linalg.matrix_power(r0, aut.order)
        alpha = np.trace(power) / d
        if abs(alpha) < tol or max_abs(power - alpha * np.eye(d)) > 1e-6:
            continue
        scale = cmath.exp(-cmath.log(alpha) / aut.order)
        return SimulationMatrix(order=aut.order, kind="dense", dense=scale * r0)
    return None
