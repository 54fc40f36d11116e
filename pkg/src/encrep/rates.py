"""Parity combinatorics and closed-form physical error rates of measured
repeater stations.

The unnoticed rate of a station is the probability that an odd number of
error events flips its X-measurement outcome, conditioned on the outcome not
being discarded; the noticed rate is the probability that the outcome is
marked "?" because some contributing loss was heralded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .noise import FailureRates, StationFlavoredRates

__all__ = [
    "p_even",
    "p_odd",
    "p_even_vec",
    "p_odd_vec",
    "DegreeProfile",
    "physical_rates_single",
    "physical_rates_two_qubit",
    "physical_rates_network",
    "first_order_rates",
]


def p_even(p: float, n: int) -> float:
    """Probability of an even number of events in n independent trials."""
    _check_prob(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    return 0.5 * (1.0 + (1.0 - 2.0 * p) ** n)


def p_odd(p: float, n: int) -> float:
    """Probability of an odd number of events in n independent trials."""
    _check_prob(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    return 0.5 * (1.0 - (1.0 - 2.0 * p) ** n)


def p_odd_vec(probs: Sequence[float]) -> float:
    """Odd-parity probability for independent events with unequal rates.

    Evaluated as (1 - prod_k (1 - 2 p_k)) / 2, which equals the exhaustive
    sum over all odd-weight event subsets at linear cost.
    """
    acc = 1.0
    for p in probs:
        _check_prob(p)
        acc *= 1.0 - 2.0 * p
    return 0.5 * (1.0 - acc)


def p_even_vec(probs: Sequence[float]) -> float:
    return 1.0 - p_odd_vec(probs)


def _check_prob(p: float) -> None:
    if not (0.0 <= p <= 1.0) or np.isnan(p):
        raise ValueError(f"probability out of range: {p!r}")


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex degrees with edge directions following the transmissions."""

    deg: int
    deg_in: int
    deg_out: int

    def __post_init__(self):
        if min(self.deg, self.deg_in, self.deg_out) < 0:
            raise ValueError("degrees must be non-negative")
        if self.deg != self.deg_in + self.deg_out:
            raise ValueError("deg must equal deg_in + deg_out")


LINE_PROFILE = DegreeProfile(2, 1, 1)


def physical_rates_network(r: FailureRates, d: DegreeProfile) -> tuple:
    """Station rates for a vertex of the given degree profile.

    Unnoticed flips reach the station from its own preparation, channel,
    gates and measurement, from everything upstream of each received qubit,
    and from the preparations of the qubits it sends on.  Noticed losses on
    the station's own path or on any received qubit's path mark the outcome.
    """
    f_u = p_odd_vec([
        p_odd(r.f_p_u / 2.0, 1 + d.deg_in),
        p_odd((r.f_p_n + r.f_p_u) / 2.0, d.deg_out),
        p_odd(r.f_g_u / 2.0, 1 + d.deg),
        p_odd(r.f_t_u / 2.0, 1 + d.deg_in),
        r.f_m_u / 2.0,
    ])
    f_n = 1.0 - ((1.0 - r.f_p_n) ** (1 + d.deg_in)
                 * (1.0 - r.f_g_n) ** (1 + d.deg)
                 * (1.0 - r.f_t_n) ** (1 + d.deg_in)
                 * (1.0 - r.f_m_n) ** (1 + d.deg_in))
    return f_u, f_n


def physical_rates_single(r: FailureRates) -> tuple:
    """Rates of a line-interior station (one qubit per station).

    This is the network formula at the line profile (deg 2, one in, one
    out); the two are required to agree bitwise, so one delegates.
    """
    return physical_rates_network(r, LINE_PROFILE)


def physical_rates_two_qubit(r: StationFlavoredRates) -> tuple:
    """Rates (f_q_s, f_q_f, f_l_s, f_l_f) for the two-qubit station layout.

    Each station keeps one stationary qubit and emits one flying qubit that
    is entangled locally on arrival; stationary outcomes are additionally
    discarded when the incoming flying qubit was lost before connection.
    """
    s, f = r.stationary, r.flying
    f_q_s = p_odd_vec([
        f.f_p_u / 2.0,
        f.f_g_u / 2.0,
        f.f_t_u / 2.0,
        s.f_p_u / 2.0,
        s.f_g_u / 2.0,
        s.f_g_u / 2.0,
        s.f_m_u / 2.0,
        (f.f_p_u + f.f_p_n) / 2.0,
    ])
    f_q_f = p_odd_vec([
        (s.f_p_u + s.f_p_n) / 2.0,
        f.f_p_u / 2.0,
        f.f_t_u / 2.0,
        f.f_g_u / 2.0,
        f.f_m_u / 2.0,
        (s.f_p_u + s.f_p_n) / 2.0,
        (s.f_g_u + s.f_g_n) / 2.0,
    ])
    f_l_s = 1.0 - ((1.0 - f.f_p_n) * (1.0 - f.f_g_n) * (1.0 - f.f_t_n)
                   * (1.0 - f.f_m_n) * (1.0 - s.f_p_n) * (1.0 - s.f_g_n)
                   * (1.0 - s.f_m_n))
    f_l_f = 1.0 - ((1.0 - f.f_p_n) * (1.0 - f.f_g_n) ** 2 * (1.0 - f.f_t_n)
                   * (1.0 - f.f_m_n))
    return f_q_s, f_q_f, f_l_s, f_l_f


def first_order_rates(r: FailureRates) -> tuple:
    """Leading-order expansion of the line-interior station rates.

    Good for operational errors well below a percent; the loss part is a
    poor approximation once transmissions exceed ten percent or so.
    """
    f_u = (1.5 * r.f_p_u + 0.5 * r.f_p_n + 1.5 * r.f_g_u
           + r.f_t_u + 0.5 * r.f_m_u)
    f_n = 2.0 * r.f_p_n + 3.0 * r.f_g_n + 2.0 * r.f_t_n + 2.0 * r.f_m_n
    return f_u, f_n
