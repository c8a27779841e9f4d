"""JSON schemas for every exchanged object, with deterministic output.

Numbers are emitted as exact integer rationals where the object carries
them (epsilon/psi tables, diagonal phases) and as shortest-roundtrip
floats elsewhere; ``canonical_dumps`` fixes key order and separators so
repeated runs are byte-identical.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

import numpy as np

from .algebra import Grading, LieAlgebra
from .autos import SimulationMatrix
from .contraction import ContractedAlgebra, EpsilonTable, PsiTable, ScalarTable
from .errors import InputError
from .groups import AbelianGroup, label_str, parse_label
from .gtrep import GTPattern, HighestWeight, Representation


def canonical_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _num(z) -> float | list[float]:
    z = complex(z)
    if z.imag == 0.0:
        return z.real
    return [z.real, z.imag]


def _read_num(v) -> complex:
    if isinstance(v, (list, tuple)):
        return complex(v[0], v[1])
    return complex(v)


# -- algebra ----------------------------------------------------------------


def algebra_to_json(algebra: LieAlgebra) -> dict:
    k = algebra.dim
    constants = []
    for i in range(k):
        for j in range(k):
            for l in range(k):
                v = algebra.structure[i, j, l]
                if v != 0:
                    constants.append([i, j, l, v.real, v.imag])
    return {"dim": k, "basis": list(algebra.basis_names), "constants": constants}


def algebra_from_json(payload: dict) -> LieAlgebra:
    try:
        k = int(payload["dim"])
        names = tuple(str(x) for x in payload["basis"])
        structure = np.zeros((k, k, k), dtype=complex)
        for i, j, l, re, im in payload["constants"]:
            structure[int(i), int(j), int(l)] = complex(re, im)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed algebra JSON: {exc}") from exc
    if len(names) != k:
        raise InputError("basis name count does not match dim")
    return LieAlgebra(basis_names=names, structure=structure)


# -- grading ----------------------------------------------------------------


def grading_to_json(grading: Grading) -> dict:
    parts = {}
    for lab in grading.sorted_labels():
        mat = grading.parts[lab]
        parts[label_str(lab)] = [[_num(mat[r, c]) for r in range(mat.shape[0])] for c in range(mat.shape[1])]
    return {"group": list(grading.group.orders), "parts": parts}


def grading_from_json(payload: dict) -> Grading:
    try:
        group = AbelianGroup(tuple(int(n) for n in payload["group"]))
        parts = {}
        for key, vectors in payload["parts"].items():
            lab = group.check(parse_label(key))
            cols = [np.array([_read_num(x) for x in vec], dtype=complex) for vec in vectors]
            if cols:
                parts[lab] = np.column_stack(cols)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed grading JSON: {exc}") from exc
    if not parts:
        raise InputError("grading JSON has no nonempty parts")
    return Grading(group=group, parts=parts)


def grading_sha256(grading: Grading) -> str:
    return hashlib.sha256(canonical_dumps(grading_to_json(grading)).encode()).hexdigest()


# -- representation ---------------------------------------------------------


def rep_to_json(rep: Representation) -> dict:
    gens = {}
    for (k, l), m in rep.gen.items():
        gens[f"{k},{l}"] = [[float(x) for x in row] for row in np.asarray(m, dtype=float)]
    return {
        "n": rep.n,
        "highest_weight": list(rep.hw.m),
        "dim": rep.dim,
        "basis": [list(p.flatten()) for p in rep.patterns],
        "generators": gens,
    }


def _pattern_from_flat(n: int, flat) -> GTPattern:
    rows = []
    pos = 0
    for length in range(n, 0, -1):
        rows.append(tuple(int(x) for x in flat[pos : pos + length]))
        pos += length
    if pos != len(flat):
        raise InputError(f"flattened pattern of length {len(flat)} does not fit n={n}")
    return GTPattern(tuple(rows))


def rep_from_json(payload: dict) -> Representation:
    try:
        n = int(payload["n"])
        hw = HighestWeight(n, tuple(int(x) for x in payload["highest_weight"]))
        patterns = [_pattern_from_flat(n, flat) for flat in payload["basis"]]
        gen = {}
        for key, rows in payload["generators"].items():
            k, l = (int(x) for x in key.split(","))
            gen[(k, l)] = np.array(rows, dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed representation JSON: {exc}") from exc
    rep = Representation(hw, patterns, gen)
    if rep.dim != int(payload["dim"]) or rep.dim != len(patterns):
        raise InputError("representation JSON dimension mismatch")
    return rep


# -- simulation matrices ----------------------------------------------------


def simulation_to_json(sim: SimulationMatrix) -> dict:
    out = {"dim": sim.dim, "order": sim.order, "kind": sim.kind}
    if sim.kind == "diagonal":
        out["phases_pi"] = [[r.numerator, r.denominator] for r in sim.phases]
    elif sim.kind == "signed_permutation":
        out["perm"] = list(sim.perm)
        out["signs"] = [[s.real, s.imag] for s in sim.signs]
    else:
        out["matrix"] = [[[z.real, z.imag] for z in row] for row in sim.dense]
    return out


def simulation_from_json(payload: dict) -> SimulationMatrix:
    try:
        kind = payload["kind"]
        order = int(payload["order"])
        if kind == "diagonal":
            phases = tuple(Fraction(int(n), int(d)) for n, d in payload["phases_pi"])
            return SimulationMatrix(order=order, kind=kind, phases=phases)
        if kind == "signed_permutation":
            perm = tuple(int(p) for p in payload["perm"])
            signs = tuple(complex(re, im) for re, im in payload["signs"])
            return SimulationMatrix(order=order, kind=kind, perm=perm, signs=signs)
        if kind == "dense":
            dense = np.array(
                [[complex(re, im) for re, im in row] for row in payload["matrix"]],
                dtype=complex,
            )
            return SimulationMatrix(order=order, kind=kind, dense=dense)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed simulation-matrix JSON: {exc}") from exc
    raise InputError(f"unknown simulation-matrix kind {payload.get('kind')!r}")


# -- epsilon / psi tables ---------------------------------------------------


def table_to_json(table: ScalarTable) -> dict:
    values = []
    for i in table.group.elements():
        for j in table.group.elements():
            v = table.values[(i, j)]
            if not isinstance(v, Fraction):
                raise InputError("only rational tables are serialized")
            values.append([list(i), list(j), v.numerator, v.denominator])
    return {"group": list(table.group.orders), "values": values}


def _table_from_json(payload: dict, cls):
    try:
        group = AbelianGroup(tuple(int(n) for n in payload["group"]))
        values = {}
        for i, j, num, den in payload["values"]:
            values[(tuple(int(x) for x in i), tuple(int(x) for x in j))] = Fraction(
                int(num), int(den)
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed table JSON: {exc}") from exc
    return cls(group, values)


def epsilon_from_json(payload: dict) -> EpsilonTable:
    return _table_from_json(payload, EpsilonTable)


def psi_from_json(payload: dict) -> PsiTable:
    return _table_from_json(payload, PsiTable)


# -- contracted algebra with provenance -------------------------------------


def contracted_algebra_to_json(calg: ContractedAlgebra) -> dict:
    out = algebra_to_json(calg.result)
    out["contraction"] = {
        "grading_sha256": grading_sha256(calg.grading),
        "group": list(calg.eps.group.orders),
        "epsilon": table_to_json(calg.eps)["values"],
    }
    return out
