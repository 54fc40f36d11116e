"""Failure-rate parameters, the discretized depolarizing/erasure model, and a
circuit-level Monte Carlo error injector.

Every circuit element (preparation, CZ gate, fiber channel, measurement)
carries a silent failure mode of strength f_u and a heralded one (e.g. a
missing detector click) of strength f_n.  On each qubit an element touches
it deposits, independently, an X error coin and a Z error coin.  When the
herald did not fire a coin lands with probability f_u/2; when it fired the
qubit is replaced by the completely mixed state and the coin probability is
1/2 + f_u/2, so that the unconditional coin probability is exactly
(f_u + f_n)/2 while the probability conditioned on no herald is exactly
f_u/2.  Those two values are what the closed forms in rates.py combine, so
under this convention simulation and formulas describe the same device.
Element noise is injected after the element's ideal action.

A measurement outcome is discarded (marked "?") when a noticed failure
occurred on its own qubit's path or on the path of a qubit it was entangled
with that was measured earlier; silent errors flip the outcome when an odd
number of them propagates there.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .pauli import Circuit

__all__ = [
    "FailureRates",
    "StationFlavoredRates",
    "ChannelParams",
    "transmission_loss",
    "depolarize_discretize",
    "NoisyElement",
    "NoisyCircuit",
    "compile_circuit",
    "noisy_line",
    "noisy_two_qubit_chain",
    "noisy_network",
    "McStationEstimate",
    "monte_carlo_station_rates",
]

_PROCESSES = ("p", "g", "t", "m")


@dataclass(frozen=True)
class FailureRates:
    """Per-process failure probabilities, unnoticed (u) and noticed (n)."""

    f_p_u: float = 0.0
    f_p_n: float = 0.0
    f_g_u: float = 0.0
    f_g_n: float = 0.0
    f_t_u: float = 0.0
    f_t_n: float = 0.0
    f_m_u: float = 0.0
    f_m_n: float = 0.0

    def __post_init__(self):
        for name, value in self.as_dict().items():
            if not 0.0 <= value <= 1.0 or np.isnan(value):
                raise ValueError(f"{name}={value!r} outside [0, 1]")
        for proc in _PROCESSES:
            u = getattr(self, f"f_{proc}_u")
            n = getattr(self, f"f_{proc}_n")
            if u + n > 1.0 + 1e-12:
                raise ValueError(f"f_{proc}_u + f_{proc}_n exceeds 1")

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in (
            "f_p_u", "f_p_n", "f_g_u", "f_g_n",
            "f_t_u", "f_t_n", "f_m_u", "f_m_n")}

    def replace(self, **kwargs) -> "FailureRates":
        return replace(self, **kwargs)

    def pair(self, proc: str) -> tuple:
        return getattr(self, f"f_{proc}_u"), getattr(self, f"f_{proc}_n")

    def outside_model_regime(self) -> bool:
        """True when any rate exceeds 1/2; the formulas stay defined but the
        model was not meant for that regime."""
        return any(v > 0.5 for v in self.as_dict().values())


@dataclass(frozen=True)
class StationFlavoredRates:
    """Separate rate sets for stationary (memory) and flying (photonic)
    qubits of a two-qubit repeater station."""

    stationary: FailureRates
    flying: FailureRates


@dataclass(frozen=True)
class ChannelParams:
    """Fiber segment: spacing, attenuation length, coupling loss."""

    l0_km: float
    l_att_km: float = 20.0
    f_c_n: float = 0.0

    def __post_init__(self):
        if self.l0_km < 0:
            raise ValueError("l0_km must be non-negative")
        if self.l_att_km <= 0:
            raise ValueError("l_att_km must be positive")
        if not 0.0 <= self.f_c_n <= 1.0:
            raise ValueError("f_c_n must be in [0, 1]")


def transmission_loss(c: ChannelParams) -> float:
    """Heralded loss probability of one fiber segment,
    1 - (1 - f_c_n) * exp(-l0 / l_att)."""
    return 1.0 - (1.0 - c.f_c_n) * float(np.exp(-c.l0_km / c.l_att_km))


def depolarize_discretize(f: float) -> dict:
    """Exact distribution over {I, X, Z, XZ} of one discretized failure.

    On failure (probability f) an X error occurs with chance 1/2 and,
    independently, a Z error with chance 1/2; the no-failure branch adds
    to the identity outcome.
    """
    if not 0.0 <= f <= 1.0:
        raise ValueError("f must be in [0, 1]")
    return {"I": 1.0 - 0.75 * f, "X": f / 4.0, "Z": f / 4.0, "XZ": f / 4.0}


@dataclass(frozen=True)
class NoisyElement:
    """One failure location: kind in {prep, cz, chan, meas, depol}."""

    kind: str
    qubits: tuple
    f_u: float
    f_n: float

    def __post_init__(self):
        if self.kind not in ("prep", "cz", "chan", "meas", "depol"):
            raise ValueError(f"unknown element kind {self.kind!r}")
        if self.kind == "cz" and len(self.qubits) != 2:
            raise ValueError("cz element needs two qubits")
        if self.kind != "cz" and len(self.qubits) != 1:
            raise ValueError(f"{self.kind} element needs one qubit")


@dataclass
class NoisyCircuit:
    """Temporally ordered failure locations plus the marking rule.

    measured lists qubits in measurement order; mark_sets[q] holds the
    element indices whose noticed failure discards q's outcome.
    """

    qubits: list
    elements: list
    measured: list
    mark_sets: dict = field(default_factory=dict)

    def __post_init__(self):
        known = set(self.qubits)
        for el in self.elements:
            for q in el.qubits:
                if q not in known:
                    raise ValueError(f"element touches unknown qubit {q!r}")
        for q in self.measured:
            if q not in known:
                raise ValueError(f"measured qubit {q!r} unknown")
        if not self.mark_sets:
            self.mark_sets = _default_mark_sets(self)

    def measurement_element(self, q) -> int:
        for i, el in enumerate(self.elements):
            if el.kind == "meas" and el.qubits[0] == q:
                return i
        raise ValueError(f"qubit {q!r} is not measured")


def _default_mark_sets(circ: NoisyCircuit) -> dict:
    """Own path plus the paths of earlier-measured gate partners."""
    touching = {q: set() for q in circ.qubits}
    for i, el in enumerate(circ.elements):
        for q in el.qubits:
            touching[q].add(i)
    order = {q: k for k, q in enumerate(circ.measured)}
    partners = {q: set() for q in circ.qubits}
    for el in circ.elements:
        if el.kind == "cz":
            a, b = el.qubits
            partners[a].add(b)
            partners[b].add(a)
    mark = {}
    for q in circ.measured:
        ids = set(touching[q])
        for u in partners[q]:
            if u in order and order[u] < order[q]:
                ids |= touching[u]
        mark[q] = frozenset(ids)
    return mark


def compile_circuit(circuit: Circuit, rates: FailureRates) -> NoisyCircuit:
    """Attach failure locations to a stabilizer circuit.

    Preparations come first, gates in circuit order with fiber channels
    spliced in after their marker gate, measurements last in the circuit's
    measurement order.
    """
    elements = []
    for q in range(1, circuit.n_qubits + 1):
        elements.append(NoisyElement("prep", (q,), rates.f_p_u, rates.f_p_n))
    chan_after = {}
    for q, gate_idx in circuit.channels.items():
        chan_after.setdefault(gate_idx, []).append(q)
    for idx, gate in enumerate(circuit.gates):
        if gate.kind != "CZ":
            raise ValueError("noise compilation supports CZ circuits only")
        elements.append(NoisyElement("cz", tuple(gate.qubits),
                                     rates.f_g_u, rates.f_g_n))
        for q in sorted(chan_after.get(idx, [])):
            elements.append(NoisyElement("chan", (q,), rates.f_t_u, rates.f_t_n))
    for q in circuit.measurements:
        elements.append(NoisyElement("meas", (q,), rates.f_m_u, rates.f_m_n))
    return NoisyCircuit(qubits=list(range(1, circuit.n_qubits + 1)),
                        elements=elements, measured=list(circuit.measurements))


def noisy_line(n: int, rates: FailureRates) -> NoisyCircuit:
    """Sequentially ordered repeater line with one qubit per station."""
    from .pauli import build_line_circuit
    return compile_circuit(build_line_circuit(n, "sequential"), rates)


def noisy_two_qubit_chain(stations: int, rates: StationFlavoredRates,
                          placement: str = "calibrated") -> NoisyCircuit:
    """Chain of stations holding one stationary and one flying qubit each.

    Station i prepares s_i and f_i, entangles them (pair gate), sends f_i
    down the fiber, then entangles the arriving f_{i-1} with s_i
    (connection gate) and measures f_{i-1} followed by s_i.  Qubit keys are
    "s{i}" and "f{i}".

    placement selects the gate-noise model:
      "calibrated": per-qubit gate noise where the connection gate's
        flying-side failures are always heralded and its stationary-side
        noise is silent; a stationary outcome is additionally discarded
        when the incoming flying qubit was lost at creation, in the fiber,
        or at its own readout (not at the connection gate).  This is the
        device the closed forms in rates.physical_rates_two_qubit describe.
      "symmetric": both gates carry silent and heralded per-qubit noise on
        both sides and all partner flags are inherited; a uniform variant
        kept for comparison.
    """
    if stations < 3:
        raise ValueError("need at least 3 stations")
    if placement not in ("calibrated", "symmetric"):
        raise ValueError(f"unknown placement {placement!r}")
    s_r, f_r = rates.stationary, rates.flying
    qubits = [f"s{i}" for i in range(1, stations + 1)]
    qubits += [f"f{i}" for i in range(1, stations)]
    els = []
    ids = {}

    def add(kind, qs, f_u, f_n, tag=None):
        els.append(NoisyElement(kind, qs, f_u, f_n))
        if tag:
            ids[tag] = len(els) - 1

    for i in range(1, stations + 1):
        s, f, f_prev = f"s{i}", f"f{i}", f"f{i-1}"
        add("prep", (s,), s_r.f_p_u, s_r.f_p_n, tag=f"prep_{s}")
        if i < stations:
            add("prep", (f,), f_r.f_p_u, f_r.f_p_n, tag=f"prep_{f}")
            add("cz", (s, f), 0.0, 0.0)
            add("depol", (s,), s_r.f_g_u, s_r.f_g_n, tag=f"pair_s_{i}")
            add("depol", (f,), f_r.f_g_u, f_r.f_g_n, tag=f"pair_f_{i}")
            add("chan", (f,), f_r.f_t_u, f_r.f_t_n, tag=f"chan_{f}")
        if i > 1:
            add("cz", (f_prev, s), 0.0, 0.0)
            if placement == "calibrated":
                add("depol", (s,), s_r.f_g_u, 0.0, tag=f"conn_s_{i}")
                add("depol", (f_prev,), 0.0, f_r.f_g_n, tag=f"conn_f_{i}")
            else:
                add("depol", (s,), s_r.f_g_u, s_r.f_g_n, tag=f"conn_s_{i}")
                add("depol", (f_prev,), f_r.f_g_u, f_r.f_g_n, tag=f"conn_f_{i}")
            add("meas", (f_prev,), f_r.f_m_u, f_r.f_m_n, tag=f"meas_{f_prev}")
            if 1 < i < stations:
                add("meas", (s,), s_r.f_m_u, s_r.f_m_n, tag=f"meas_{s}")

    measured = []
    for i in range(2, stations + 1):
        measured.append(f"f{i-1}")
        if i < stations:
            measured.append(f"s{i}")

    mark_sets = {}
    for i in range(1, stations):
        f = f"f{i}"
        own = [ids[f"prep_{f}"], ids[f"pair_f_{i}"], ids[f"chan_{f}"],
               ids[f"conn_f_{i+1}"], ids[f"meas_{f}"]]
        mark_sets[f] = frozenset(own)
    for i in range(2, stations):
        s, f_prev = f"s{i}", f"f{i-1}"
        own = [ids[f"prep_{s}"], ids[f"pair_s_{i}"], ids[f"meas_{s}"]]
        inherited = [ids[f"prep_{f_prev}"], ids[f"pair_f_{i-1}"],
                     ids[f"chan_{f_prev}"], ids[f"meas_{f_prev}"]]
        if placement == "symmetric":
            own.append(ids[f"conn_s_{i}"])
            inherited.append(ids[f"conn_f_{i}"])
        mark_sets[s] = frozenset(own + inherited)

    return NoisyCircuit(qubits=qubits, elements=els, measured=measured,
                        mark_sets=mark_sets)


def noisy_network(n_vertices: int, directed_edges: Sequence[tuple],
                  rates: FailureRates,
                  measured: Iterable[int] | None = None) -> NoisyCircuit:
    """Graph-state distribution circuit over a directed acyclic edge set.

    Each directed edge (u, v) means: v's qubit is prepared at u's station,
    entangled there with u via CZ, and then transmitted to v.  Vertices with
    no incoming edge are prepared at their own station.  measured defaults
    to every vertex with at least one incoming edge.
    """
    heads = {v for _, v in directed_edges}
    indeg = {v: 0 for v in range(1, n_vertices + 1)}
    out_edges = {v: [] for v in range(1, n_vertices + 1)}
    for u, v in directed_edges:
        if not (1 <= u <= n_vertices and 1 <= v <= n_vertices):
            raise ValueError(f"edge ({u}, {v}) out of range")
        indeg[v] += 1
        out_edges[u].append(v)
    if any(c > 1 for c in indeg.values()):
        raise ValueError("a qubit cannot be transmitted along two edges")
    if measured is None:
        measured = sorted(heads)
    measured = list(measured)

    # Topological station order.
    order = []
    ready = sorted(v for v in range(1, n_vertices + 1) if indeg[v] == 0)
    pending = dict(indeg)
    queue = list(ready)
    while queue:
        v = queue.pop(0)
        order.append(v)
        for w in sorted(out_edges[v]):
            pending[w] -= 1
            if pending[w] == 0:
                queue.append(w)
    if len(order) != n_vertices:
        raise ValueError("transmission directions contain a cycle")

    els = []
    for v in order:
        if indeg[v] == 0:
            els.append(NoisyElement("prep", (v,), rates.f_p_u, rates.f_p_n))
    for v in order:
        for w in sorted(out_edges[v]):
            if indeg[w] != 0:
                els.append(NoisyElement("prep", (w,), rates.f_p_u, rates.f_p_n))
            els.append(NoisyElement("cz", (v, w), rates.f_g_u, rates.f_g_n))
            els.append(NoisyElement("chan", (w,), rates.f_t_u, rates.f_t_n))
        if v in measured:
            els.append(NoisyElement("meas", (v,), rates.f_m_u, rates.f_m_n))

    meas_order = [v for v in order if v in set(measured)]
    return NoisyCircuit(qubits=list(range(1, n_vertices + 1)), elements=els,
                        measured=meas_order)


@dataclass(frozen=True)
class McStationEstimate:
    """Sampled station rates with binomial standard errors and provenance."""

    station: object
    f_u: float
    f_n: float
    se_u: float
    se_n: float
    trials: int
    seed: int


_CHUNK = 1 << 18


def monte_carlo_station_rates(circuit, rates: FailureRates | None = None, *,
                              station, trials: int, seed: int):
    """Estimate (f_u, f_n) of one or more measured stations by sampling.

    circuit is either a stabilizer Circuit (rates required; compiled with
    compile_circuit) or a prebuilt NoisyCircuit.  station is a qubit key or
    a list of keys; a single key returns a single estimate.  Results are
    reproducible from (seed, trials) and independent of chunking.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if isinstance(circuit, Circuit):
        if rates is None:
            raise ValueError("rates are required when passing a Circuit")
        noisy = compile_circuit(circuit, rates)
    elif isinstance(circuit, NoisyCircuit):
        noisy = circuit
    else:
        raise TypeError("circuit must be a Circuit or NoisyCircuit")

    single = not isinstance(station, (list, tuple))
    stations = [station] if single else list(station)
    meas_set = set(noisy.measured)
    for q in stations:
        if q not in meas_set:
            raise ValueError(f"station {q!r} is not measured in this circuit")

    n_elems = len(noisy.elements)
    qubit_index = {q: k for k, q in enumerate(noisy.qubits)}
    watch = {i for q in stations for i in noisy.mark_sets[q]}

    flips = {q: 0 for q in stations}
    unmarked = {q: 0 for q in stations}
    marked = {q: 0 for q in stations}

    n_chunks = (trials + _CHUNK - 1) // _CHUNK
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    done = 0
    for chunk_idx in range(n_chunks):
        size = min(_CHUNK, trials - done)
        done += size
        rng = np.random.default_rng(children[chunk_idx])
        xerr = np.zeros((len(noisy.qubits), size), dtype=bool)
        zerr = np.zeros_like(xerr)
        noticed = {}
        meas_flip = {}
        for eid, el in enumerate(noisy.elements):
            if el.kind == "cz":
                a, b = (qubit_index[q] for q in el.qubits)
                zerr[a] ^= xerr[b]
                zerr[b] ^= xerr[a]
            ntc = rng.random(size) < el.f_n
            if eid in watch:
                noticed[eid] = ntc
            # Coin probability f_u/2 without herald, 1/2 + f_u/2 with it:
            # unconditionally (f_u + f_n)/2, conditioned on no herald f_u/2.
            p_coin = np.where(ntc, 0.5 + 0.5 * el.f_u, 0.5 * el.f_u)
            for q in el.qubits:
                k = qubit_index[q]
                xerr[k] ^= rng.random(size) < p_coin
                zerr[k] ^= rng.random(size) < p_coin
            if el.kind == "meas" and el.qubits[0] in flips:
                meas_flip[el.qubits[0]] = zerr[qubit_index[el.qubits[0]]].copy()
        for q in stations:
            mark = np.zeros(size, dtype=bool)
            for eid in noisy.mark_sets[q]:
                if eid in noticed:
                    mark |= noticed[eid]
            ok = ~mark
            marked[q] += int(mark.sum())
            unmarked[q] += int(ok.sum())
            flips[q] += int((meas_flip[q] & ok).sum())

    out = []
    for q in stations:
        f_n_hat = marked[q] / trials
        se_n = float(np.sqrt(max(f_n_hat * (1 - f_n_hat), 1e-300) / trials))
        if unmarked[q] == 0:
            f_u_hat, se_u = float("nan"), float("nan")
        else:
            f_u_hat = flips[q] / unmarked[q]
            se_u = float(np.sqrt(max(f_u_hat * (1 - f_u_hat), 1e-300)
                                 / unmarked[q]))
        out.append(McStationEstimate(q, f_u_hat, f_n_hat, se_u, se_n,
                                     trials, seed))
    return out[0] if single else out
