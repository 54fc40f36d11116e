"""Pauli operators, stabilizer sets, and the repeater / graph-state circuits.

Qubits are numbered 1..n throughout, matching the usual station numbering of
a repeater line.  Pauli operators are stored as a pair of GF(2) bit vectors
(X part, Z part) plus a sign in {+1, -1}; the gate set used here (H, CX, CZ,
X measurements) never produces imaginary phases, so a real sign suffices.
Per qubit the operator is read as X^x Z^z, i.e. both bits set means the
product XZ (= -iY, but Y never needs to be named in this representation).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "PauliOperator",
    "StabilizerSet",
    "CliffordGate",
    "Circuit",
    "Graph",
    "conjugate_pauli",
    "apply_circuit",
    "build_line_circuit",
    "graph_state_stabilizers",
    "main_stabilizers",
    "measure_x_and_reduce",
    "statevector_oracle",
    "groups_equal",
    "contains_signed",
    "byproduct_correction",
    "line_graph",
    "parse_graph_text",
]


class PauliOperator:
    """A signed n-qubit Pauli string in X/Z bit-pair form."""

    __slots__ = ("x", "z", "sign")

    def __init__(self, x_bits, z_bits, sign: int = 1):
        self.x = np.array(x_bits, dtype=np.uint8) % 2
        self.z = np.array(z_bits, dtype=np.uint8) % 2
        if self.x.shape != self.z.shape or self.x.ndim != 1:
            raise ValueError("x_bits and z_bits must be equal-length vectors")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.sign = int(sign)

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(np.zeros(n, np.uint8), np.zeros(n, np.uint8))

    @classmethod
    def from_support(cls, n: int, x_qubits: Iterable[int] = (),
                     z_qubits: Iterable[int] = (), sign: int = 1) -> "PauliOperator":
        """Build from 1-based qubit positions carrying X and Z factors."""
        x = np.zeros(n, np.uint8)
        z = np.zeros(n, np.uint8)
        for q in x_qubits:
            _check_index(q, n)
            x[q - 1] ^= 1
        for q in z_qubits:
            _check_index(q, n)
            z[q - 1] ^= 1
        return cls(x, z, sign)

    @classmethod
    def from_label(cls, label: str, sign: int = 1) -> "PauliOperator":
        """Parse a string of I/X/Z characters (one per qubit)."""
        x = np.zeros(len(label), np.uint8)
        z = np.zeros(len(label), np.uint8)
        for i, ch in enumerate(label.upper()):
            if ch == "X":
                x[i] = 1
            elif ch == "Z":
                z[i] = 1
            elif ch != "I":
                raise ValueError(f"unsupported Pauli letter {ch!r}")
        return cls(x, z, sign)

    # -- basic queries ------------------------------------------------

    @property
    def n_qubits(self) -> int:
        return self.x.size

    def is_identity(self) -> bool:
        return not self.x.any() and not self.z.any()

    def commutes_with(self, other: "PauliOperator") -> bool:
        if self.n_qubits != other.n_qubits:
            raise ValueError("operator lengths differ")
        sym = (int(np.dot(self.x, other.z)) + int(np.dot(self.z, other.x))) % 2
        return sym == 0

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        # Left-to-right convention: reordering Z^z1 past X^x2 per qubit
        # costs (-1)^(z1.x2).
        if self.n_qubits != other.n_qubits:
            raise ValueError("operator lengths differ")
        swaps = int(np.dot(self.z, other.x))
        sign = self.sign * other.sign * (-1 if swaps % 2 else 1)
        return PauliOperator(self.x ^ other.x, self.z ^ other.z, sign)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return (self.sign == other.sign
                and np.array_equal(self.x, other.x)
                and np.array_equal(self.z, other.z))

    def __hash__(self):
        return hash((self.sign, self.x.tobytes(), self.z.tobytes()))

    def copy(self) -> "PauliOperator":
        return PauliOperator(self.x.copy(), self.z.copy(), self.sign)

    def to_label(self) -> str:
        """I/X/Z string; raises if any qubit carries both X and Z."""
        if (self.x & self.z).any():
            raise ValueError("operator has an XZ factor, not expressible in {I,X,Z}")
        return "".join("X" if xb else ("Z" if zb else "I")
                       for xb, zb in zip(self.x, self.z))

    def __repr__(self):
        terms = []
        for i, (xb, zb) in enumerate(zip(self.x, self.z), start=1):
            if xb and zb:
                terms.append(f"XZ{i}")
            elif xb:
                terms.append(f"X{i}")
            elif zb:
                terms.append(f"Z{i}")
        body = "*".join(terms) if terms else "I"
        return ("+" if self.sign > 0 else "-") + body


def _check_index(q: int, n: int) -> None:
    if not 1 <= q <= n:
        raise IndexError(f"qubit {q} out of range 1..{n}")


@dataclass(frozen=True)
class CliffordGate:
    """One of H(q), CX(control, target), CZ(a, b)."""

    kind: str
    qubits: tuple

    def __post_init__(self):
        if self.kind not in ("H", "CX", "CZ"):
            raise ValueError(f"unknown gate kind {self.kind!r}")
        want = 1 if self.kind == "H" else 2
        if len(self.qubits) != want:
            raise ValueError(f"{self.kind} takes {want} qubit index(es)")
        if want == 2 and self.qubits[0] == self.qubits[1]:
            raise ValueError("two-qubit gate needs distinct qubits")


def H(q: int) -> CliffordGate:
    return CliffordGate("H", (q,))


def CX(control: int, target: int) -> CliffordGate:
    return CliffordGate("CX", (control, target))


def CZ(a: int, b: int) -> CliffordGate:
    return CliffordGate("CZ", (a, b))


def conjugate_pauli(gate: CliffordGate, p: PauliOperator) -> PauliOperator:
    """Return U p U^dagger for the given Clifford gate.

    Propagation rules (per qubit, X^x Z^z form):
      H:  swap x and z, sign gains (-1)^(x z)
      CZ: z_a ^= x_b, z_b ^= x_a, sign gains (-1)^(x_a x_b)
      CX: x_t ^= x_c, z_c ^= z_t, no sign change
    """
    n = p.n_qubits
    for q in gate.qubits:
        _check_index(q, n)
    out = p.copy()
    if gate.kind == "H":
        (q,) = gate.qubits
        i = q - 1
        if out.x[i] and out.z[i]:
            out.sign = -out.sign
        out.x[i], out.z[i] = out.z[i], out.x[i]
    elif gate.kind == "CZ":
        a, b = (q - 1 for q in gate.qubits)
        if out.x[a] and out.x[b]:
            out.sign = -out.sign
        out.z[a] ^= out.x[b]
        out.z[b] ^= out.x[a]
    else:  # CX
        c, t = (q - 1 for q in gate.qubits)
        out.x[t] ^= out.x[c]
        out.z[c] ^= out.z[t]
    return out


class StabilizerSet:
    """A list of independent, pairwise commuting signed Pauli generators."""

    def __init__(self, n_qubits: int, generators: Sequence[PauliOperator],
                 validate: bool = True):
        self.n_qubits = int(n_qubits)
        self.generators = [g.copy() for g in generators]
        for g in self.generators:
            if g.n_qubits != self.n_qubits:
                raise ValueError("generator length does not match n_qubits")
        if validate:
            self._validate()

    def _validate(self):
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if not gens[i].commutes_with(gens[j]):
                    raise ValueError(f"generators {i} and {j} anticommute")
        if symplectic_rank(self.symplectic_matrix()) != len(gens):
            raise ValueError("generators are not independent")

    def symplectic_matrix(self) -> np.ndarray:
        """Rows [x | z] over GF(2), one per generator."""
        if not self.generators:
            return np.zeros((0, 2 * self.n_qubits), np.uint8)
        return np.array([np.concatenate([g.x, g.z]) for g in self.generators],
                        dtype=np.uint8)

    def signs(self) -> np.ndarray:
        return np.array([g.sign for g in self.generators], dtype=np.int8)

    def copy(self) -> "StabilizerSet":
        return StabilizerSet(self.n_qubits, self.generators, validate=False)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"StabilizerSet(n={self.n_qubits}, gens={self.generators!r})"


def symplectic_rank(rows: np.ndarray) -> int:
    return _gf2_rank(rows.copy())


def _gf2_rank(m: np.ndarray) -> int:
    m = m.astype(np.uint8) % 2
    rank = 0
    rows, cols = m.shape
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if m[r, c]:
                pivot = r
                break
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in range(rows):
            if r != rank and m[r, c]:
                m[r] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def _echelon_with_signs(stabs: StabilizerSet):
    """Gaussian-eliminate generators to row echelon form, tracking signs.

    Row operations are Pauli multiplications, so the echelon generators
    still generate the same signed group.  Returns (ops, pivots) where
    ops is the echelon list of PauliOperator.
    """
    ops = [g.copy() for g in stabs.generators]
    n2 = 2 * stabs.n_qubits
    pivots = []
    row = 0
    for col in range(n2):
        pivot = None
        for r in range(row, len(ops)):
            vec = np.concatenate([ops[r].x, ops[r].z])
            if vec[col]:
                pivot = r
                break
        if pivot is None:
            continue
        ops[row], ops[pivot] = ops[pivot], ops[row]
        for r in range(len(ops)):
            if r == row:
                continue
            vec = np.concatenate([ops[r].x, ops[r].z])
            if vec[col]:
                ops[r] = ops[row] * ops[r]
        pivots.append(col)
        row += 1
        if row == len(ops):
            break
    return ops, pivots


def contains_signed(stabs: StabilizerSet, candidate: PauliOperator) -> bool:
    """Signed group membership: is candidate a product of the generators?"""
    ops, pivots = _echelon_with_signs(stabs)
    acc = PauliOperator.identity(stabs.n_qubits)
    vec = np.concatenate([candidate.x, candidate.z]).copy()
    for op, piv in zip(ops, pivots):
        if vec[piv]:
            acc = acc * op
            vec ^= np.concatenate([op.x, op.z])
    if vec.any():
        return False
    return acc.sign == candidate.sign


def groups_equal(a: StabilizerSet, b: StabilizerSet) -> bool:
    """Mutual signed membership: the two generator sets span the same group."""
    if a.n_qubits != b.n_qubits or len(a) != len(b):
        return False
    return all(contains_signed(a, g) for g in b.generators)


@dataclass
class Circuit:
    """Prepare-all-in-|+>, entangle with CZ, measure some qubits in X.

    channels maps a qubit to the gate index after which it crosses the
    transmission fiber; this matters only for noise placement, never for
    the ideal stabilizer evolution.
    """

    n_qubits: int
    gates: list = field(default_factory=list)
    measurements: list = field(default_factory=list)  # qubit indices, X basis
    channels: dict = field(default_factory=dict)      # qubit -> after-gate index

    def __post_init__(self):
        seen = set()
        for q in self.measurements:
            _check_index(q, self.n_qubits)
            if q in seen:
                raise ValueError(f"qubit {q} measured twice")
            seen.add(q)
        for q in self.channels:
            _check_index(q, self.n_qubits)


def plus_state_stabilizers(n: int) -> StabilizerSet:
    return StabilizerSet(
        n, [PauliOperator.from_support(n, x_qubits=[q]) for q in range(1, n + 1)],
        validate=False)


def apply_circuit(stabs: StabilizerSet, circuit: Circuit) -> StabilizerSet:
    """Conjugate every generator through the circuit's gate list."""
    gens = [g.copy() for g in stabs.generators]
    for gate in circuit.gates:
        gens = [conjugate_pauli(gate, g) for g in gens]
    return StabilizerSet(stabs.n_qubits, gens, validate=False)


def build_line_circuit(n: int, ordering: str = "sequential") -> Circuit:
    """Repeater line: |+>^n, CZ between neighbours, X-measure the interior.

    ordering "sequential" applies CZ(1,2), CZ(2,3), ...; "two-step" first
    applies the gates with odd control index, then those with even control.
    Every qubit except the first crosses one fiber segment, placed between
    its two entangling gates (after its only gate, for qubit n).
    """
    if n < 2:
        raise ValueError("a line needs at least 2 qubits")
    pairs = [(i, i + 1) for i in range(1, n)]
    if ordering == "sequential":
        ordered = pairs
    elif ordering == "two-step":
        ordered = [p for p in pairs if p[0] % 2 == 1] + [p for p in pairs if p[0] % 2 == 0]
    else:
        raise ValueError(f"unknown ordering {ordering!r}")
    gates = [CZ(a, b) for a, b in ordered]
    first_gate_of = {}
    for idx, (a, b) in enumerate(ordered):
        for q in (a, b):
            first_gate_of.setdefault(q, idx)
    channels = {q: first_gate_of[q] for q in range(2, n + 1)}
    return Circuit(n_qubits=n, gates=gates,
                   measurements=list(range(2, n)), channels=channels)


@dataclass
class Graph:
    """Simple undirected graph on vertices 1..n, optionally with party labels
    and per-edge transmission directions."""

    n_vertices: int
    edges: list = field(default_factory=list)          # sorted (a, b) tuples
    parties: dict = field(default_factory=dict)        # vertex -> label
    directions: dict = field(default_factory=dict)     # (a, b) -> head vertex

    def __post_init__(self):
        norm = []
        seen = set()
        for a, b in self.edges:
            _check_index(a, self.n_vertices)
            _check_index(b, self.n_vertices)
            if a == b:
                raise ValueError("self-loops are not allowed")
            e = (min(a, b), max(a, b))
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        self.edges = norm
        for v in self.parties:
            _check_index(v, self.n_vertices)
        for e, head in self.directions.items():
            if tuple(sorted(e)) not in seen:
                raise ValueError(f"direction given for missing edge {e}")
            if head not in e:
                raise ValueError("direction head must be an endpoint")

    def neighbours(self, v: int) -> list:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def party_vertices(self) -> list:
        return sorted(self.parties)


def line_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def graph_state_stabilizers(g: Graph) -> StabilizerSet:
    """One generator per vertex: X there, Z on every neighbour."""
    gens = []
    for v in range(1, g.n_vertices + 1):
        gens.append(PauliOperator.from_support(
            g.n_vertices, x_qubits=[v], z_qubits=g.neighbours(v)))
    return StabilizerSet(g.n_vertices, gens, validate=False)


def circuit_from_graph(g: Graph) -> Circuit:
    return Circuit(n_qubits=g.n_vertices, gates=[CZ(a, b) for a, b in g.edges])


def main_stabilizers(g: Graph, parties: Sequence[int]) -> list:
    """Per-party stabilizer: product of every-second graph-state generator
    walking from the party towards its neighbouring parties.

    Interior (non-party) vertices must lie on simple chains of degree 2,
    and the number of interior vertices on each chain must be even.
    """
    parties = sorted(set(parties))
    for p in parties:
        _check_index(p, g.n_vertices)
    party_set = set(parties)
    gens = graph_state_stabilizers(g).generators
    out = []
    for p in parties:
        chosen = {p}
        for first in g.neighbours(p):
            prev, cur = p, first
            steps = 0
            while cur not in party_set:
                deg = g.neighbours(cur)
                if len(deg) != 2:
                    raise ValueError(
                        f"interior vertex {cur} branches; main stabilizers "
                        "are defined along simple repeater chains only")
                steps += 1
                if steps % 2 == 0:
                    chosen.add(cur)
                nxt = deg[0] if deg[1] == prev else deg[1]
                prev, cur = cur, nxt
            if steps % 2 == 1:
                raise ValueError(
                    f"chain from party {p} towards {cur} has an odd number "
                    "of interior vertices ({steps}); even counts required")
        op = PauliOperator.identity(g.n_vertices)
        for v in sorted(chosen):
            op = op * gens[v - 1]
        out.append(op)
    return out


def measure_x_and_reduce(stabs: StabilizerSet, measured: Sequence[int],
                         outcomes: Sequence[int]):
    """Project onto X-basis outcomes on the measured qubits and drop them.

    outcomes are +1/-1, one per measured qubit.  Returns (reduced, byproduct)
    where reduced lives on the remaining qubits (in their original order) and
    byproduct is the Pauli correction on the remaining qubits that restores
    every canonical generator sign to +1.

    Raises ValueError when a prescribed outcome contradicts one that the
    stabilizer already determines.
    """
    measured = list(measured)
    outcomes = list(outcomes)
    if len(measured) != len(outcomes):
        raise ValueError("measured and outcomes must have equal length")
    if any(o not in (1, -1) for o in outcomes):
        raise ValueError("outcomes must be +1 or -1")
    n = stabs.n_qubits
    for q in measured:
        _check_index(q, n)
    if len(set(measured)) != len(measured):
        raise ValueError("duplicate measured qubit")
    if not measured:
        return stabs.copy(), PauliOperator.identity(n)

    gens = [g.copy() for g in stabs.generators]
    for q, out in zip(measured, outcomes):
        i = q - 1
        anti = [k for k, g in enumerate(gens) if g.z[i]]
        meas_op = PauliOperator.from_support(n, x_qubits=[q], sign=out)
        if anti:
            # Random outcome: keep one anticommuting generator's slot for
            # the measured operator, fix the rest by multiplication.
            keep = anti[0]
            for k in anti[1:]:
                gens[k] = gens[keep] * gens[k]
            gens[keep] = meas_op
            outcome_row = keep
        else:
            current = StabilizerSet(n, gens, validate=False)
            if contains_signed(current, meas_op):
                outcome_row = None
            elif contains_signed(current, PauliOperator(meas_op.x, meas_op.z,
                                                        -meas_op.sign)):
                raise ValueError(
                    f"outcome {out:+d} on qubit {q} contradicts the stabilizer")
            else:
                # X_q independent of a rank-deficient set: the measurement
                # simply adds it as a new generator.
                gens.append(meas_op)
                outcome_row = len(gens) - 1
        # Clear X_q from every other generator so the qubit factors out.
        for k in range(len(gens)):
            if k != outcome_row and gens[k].x[i]:
                gens[k] = meas_op * gens[k]

    measured_idx = {q - 1 for q in measured}
    keep_qubits = [q for q in range(1, n + 1) if q - 1 not in measured_idx]
    col = np.array([q - 1 for q in keep_qubits], dtype=int)
    reduced_gens = []
    for g in gens:
        support = set(np.flatnonzero(g.x | g.z).tolist())
        if support <= measured_idx:
            continue  # consumed outcome rows and identities
        if support & measured_idx:
            raise AssertionError("reduction left weight on a measured qubit")
        reduced_gens.append(PauliOperator(g.x[col], g.z[col], g.sign))
    reduced = StabilizerSet(len(keep_qubits),
                            _independent_subset(reduced_gens, len(keep_qubits)),
                            validate=False)
    return reduced, byproduct_correction(reduced)


def _independent_subset(gens: list, n_qubits: int) -> list:
    picked = []
    rows = np.zeros((0, 2 * n_qubits), np.uint8)
    for g in gens:
        cand = np.vstack([rows, np.concatenate([g.x, g.z])])
        if _gf2_rank(cand) > rows.shape[0]:
            rows = cand
            picked.append(g)
    return picked


def byproduct_correction(stabs: StabilizerSet) -> PauliOperator:
    """Pauli B such that conjugating by B makes every canonical generator
    sign +1 (B anticommutes exactly with the negative-sign ones).

    Solving [z | x] b = s over GF(2) always succeeds for an independent set.
    """
    ops, _ = _echelon_with_signs(stabs)
    ops = [g for g in ops if not g.is_identity()]
    n = stabs.n_qubits
    if not ops:
        return PauliOperator.identity(n)
    mat = np.array([np.concatenate([g.z, g.x]) for g in ops], dtype=np.uint8)
    rhs = np.array([0 if g.sign > 0 else 1 for g in ops], dtype=np.uint8)
    sol = _gf2_solve(mat, rhs)
    if sol is None:
        raise ValueError("inconsistent signs: no Pauli correction exists")
    return PauliOperator(sol[:n], sol[n:])


def _gf2_solve(a: np.ndarray, b: np.ndarray):
    a = a.copy() % 2
    b = b.copy() % 2
    rows, cols = a.shape
    pivot_cols = []
    row = 0
    for c in range(cols):
        pivot = None
        for r in range(row, rows):
            if a[r, c]:
                pivot = r
                break
        if pivot is None:
            continue
        a[[row, pivot]] = a[[pivot, row]]
        b[row], b[pivot] = b[pivot], b[row]
        for r in range(rows):
            if r != row and a[r, c]:
                a[r] ^= a[row]
                b[r] ^= b[row]
        pivot_cols.append(c)
        row += 1
        if row == rows:
            break
    for r in range(row, rows):
        if b[r]:
            return None
    sol = np.zeros(cols, np.uint8)
    for r, c in enumerate(pivot_cols):
        sol[c] = b[r]
    return sol


def apply_pauli_to_state(p: PauliOperator, vec: np.ndarray) -> np.ndarray:
    """(X^x Z^z)|i> = (-1)^(z.i) |i ^ x>, qubit 1 = most significant bit."""
    n = p.n_qubits
    dim = vec.size
    idx = np.arange(dim)
    xmask = 0
    zmask = 0
    for q in range(n):
        bit = 1 << (n - 1 - q)
        if p.x[q]:
            xmask |= bit
        if p.z[q]:
            zmask |= bit
    phases = np.where(_popcount(idx & zmask) % 2 == 1, -1.0, 1.0)
    out = np.zeros_like(vec)
    out[idx ^ xmask] = p.sign * phases * vec
    return out


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a.astype(np.uint64))


def statevector_oracle(stabs: StabilizerSet, max_qubits: int = 14) -> np.ndarray:
    """Dense amplitudes of the unique state fixed by a full-rank generator set.

    Applies the projector prod_i (1 + g_i)/2 to seed vectors until one
    survives.  Only meant as an independent cross-check at small sizes.
    """
    n = stabs.n_qubits
    if n > max_qubits:
        raise ValueError(f"statevector oracle limited to {max_qubits} qubits")
    if len(stabs.generators) != n:
        raise ValueError("oracle needs a full-rank stabilizer (one gen per qubit)")
    dim = 1 << n
    rng = np.random.default_rng(20230817)
    basis0 = np.zeros(dim, dtype=complex)
    basis0[0] = 1.0
    seeds = [np.ones(dim, dtype=complex), basis0]
    for _ in range(4):
        seeds.append(rng.normal(size=dim) + 1j * rng.normal(size=dim))
    for seed in seeds:
        vec = seed.copy()
        for g in stabs.generators:
            vec = 0.5 * (vec + apply_pauli_to_state(g, vec))
        norm = np.linalg.norm(vec)
        if norm > 1e-9:
            vec = vec / norm
            for g in stabs.generators:
                if np.linalg.norm(apply_pauli_to_state(g, vec) - vec) > 1e-9:
                    raise ValueError("generators admit no common +1 eigenstate")
            return vec
    raise ValueError("generators admit no common +1 eigenstate")


def parse_graph_text(text: str) -> Graph:
    """Edge-list format: first line N; then "i j" edge lines; optional
    "party i LABEL" lines; optional "dir i j" lines (transmission i -> j);
    '#' starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty graph description")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ValueError("first line must be the vertex count") from exc
    edges = []
    parties = {}
    directions = {}
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "party":
            if len(parts) != 3:
                raise ValueError(f"bad party line: {line!r}")
            parties[int(parts[1])] = parts[2]
        elif parts[0] == "dir":
            if len(parts) != 3:
                raise ValueError(f"bad dir line: {line!r}")
            a, b = int(parts[1]), int(parts[2])
            directions[(min(a, b), max(a, b))] = b
        elif len(parts) == 2:
            edges.append((int(parts[0]), int(parts[1])))
        else:
            raise ValueError(f"unrecognized line: {line!r}")
    return Graph(n, edges, parties, directions)
