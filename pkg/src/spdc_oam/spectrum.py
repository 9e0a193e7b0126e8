"""Pair OAM spectra over a truncated signal-index window.

A scenario fixes the pump mode and the projection family for both output
photons.  Only the conserving anti-diagonal l_i = l_p - l_s carries weight,
so the spectrum is a 1D profile indexed by l_s; probabilities are normalized
over the window and the clipped tail is estimated from the edge decay.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .modes import (DEFAULT_RING_RADIUS, DEFAULT_RING_WIDTH, LG, POV, ModeSpec)
from .overlap import RADIAL_QUADRATURE, coefficient
from .quadrature import QuadratureConfig

# a window is accepted only while the edge probability stays below this
# fraction of the peak probability
EDGE_PROBABILITY_LIMIT = 1e-6


class WindowTooSmallError(ValueError):
    """Edge probability above EDGE_PROBABILITY_LIMIT of the peak; widen
    l_window."""


def default_l_window(pump: ModeSpec) -> int:
    """Window wide enough for the 1e-6 edge contract at the default geometry.

    Gaussian-pump spectra decay slowly, roughly (4/9)^|l| on the tails, and
    need a far wider window than ring pumps do.
    """
    if pump.family == LG:
        return 20 + 4 * abs(pump.l)
    return max(8, abs(pump.l) + 10)


@dataclass(frozen=True)
class Scenario:
    """Pump mode plus projection families for the two output photons.

    ring_radius / ring_width set the geometry of ring-mode projections (and
    are ignored for LG projections).  normalize_projections switches the
    overlap amplitudes from the fixed-aperture (raw) convention to unit-norm
    projection modes.
    """
    pump: ModeSpec
    signal_family: str = LG
    idler_family: str = LG
    l_window: Optional[int] = None
    ring_radius: float = DEFAULT_RING_RADIUS
    ring_width: float = DEFAULT_RING_WIDTH
    normalize_projections: bool = False

    def __post_init__(self):
        for fam in (self.signal_family, self.idler_family):
            if fam not in (LG, POV):
                raise ValueError("projection family must be LG or POV, got %r" % (fam,))
        if self.l_window is not None and self.l_window < abs(self.pump.l) + 4:
            raise ValueError("l_window must be at least |l_p| + 4")
        if self.ring_radius <= 0 or self.ring_width <= 0:
            raise ValueError("ring geometry must be positive")

    @property
    def window(self) -> int:
        return self.l_window if self.l_window is not None else default_l_window(self.pump)

    def projection_spec(self, family: str, l: int) -> ModeSpec:
        if family == LG:
            return ModeSpec(LG, l, p=0, w0=1.0)
        return ModeSpec(POV, l, r0=self.ring_radius, w0=self.ring_width)

    def label(self) -> str:
        return "%s->%s,%s" % (self.pump.family, self.signal_family, self.idler_family)


def lg_to_lg(l_p: int, **kwargs) -> Scenario:
    """Gaussian-waist pump, both photons projected onto LG modes."""
    return Scenario(ModeSpec(LG, l_p), LG, LG, **kwargs)


def pov_to_lg(l_p: int, ring_radius: float = DEFAULT_RING_RADIUS,
              ring_width: float = DEFAULT_RING_WIDTH, **kwargs) -> Scenario:
    """Ring-mode pump, both photons projected onto LG modes."""
    pump = ModeSpec(POV, l_p, r0=ring_radius, w0=ring_width)
    return Scenario(pump, LG, LG, ring_radius=ring_radius, ring_width=ring_width, **kwargs)


def pov_to_pov(l_p: int, ring_radius: float = DEFAULT_RING_RADIUS,
               ring_width: float = DEFAULT_RING_WIDTH, **kwargs) -> Scenario:
    """Ring-mode pump, both photons projected onto ring modes."""
    pump = ModeSpec(POV, l_p, r0=ring_radius, w0=ring_width)
    return Scenario(pump, POV, POV, ring_radius=ring_radius, ring_width=ring_width, **kwargs)


@dataclass(frozen=True)
class SpectrumGrid:
    scenario: Scenario
    probs: Dict[Tuple[int, int], float] = field(compare=False)
    tail_mass: float = 0.0
    # sum of the un-normalized |C|^2 over the window; probs * raw_total
    # recovers the arbitrary-units weights
    raw_total: float = 1.0

    def probability(self, l_s: int, l_i: int) -> float:
        """Normalized pair probability; exactly 0 off the anti-diagonal."""
        return self.probs.get((l_s, l_i), 0.0)

    def anti_diagonal(self) -> List[Tuple[int, int, float]]:
        """(l_s, l_i, probability) along the conserving line, l_s ascending."""
        l_p = self.scenario.pump.l
        w = self.scenario.window
        return [(ls, l_p - ls, self.probs[(ls, l_p - ls)]) for ls in range(-w, w + 1)]


def build_spectrum(scenario: Scenario, quad: Optional[QuadratureConfig] = None) -> SpectrumGrid:
    """Evaluate and normalize |C(l_s, l_i)|^2 over the scenario window.

    Raises WindowTooSmallError when the edge probability exceeds 1e-6 of the
    peak.  The clipped tail mass is estimated by geometric extrapolation of
    the last two entries on each side.
    """
    if quad is None:
        quad = QuadratureConfig()
    l_p = scenario.pump.l
    w = scenario.window

    # each unordered projection pair is integrated once; the mirror entry
    # reuses the identical value, which keeps the exchange symmetry bitwise
    cache: Dict[Tuple[int, int], float] = {}
    raw: Dict[int, float] = {}
    same_family = scenario.signal_family == scenario.idler_family
    for ls in range(-w, w + 1):
        li = l_p - ls
        key = (min(ls, li), max(ls, li)) if same_family else (ls, li)
        if key not in cache:
            sig = scenario.projection_spec(scenario.signal_family, ls)
            idl = scenario.projection_spec(scenario.idler_family, li)
            c = coefficient(scenario.pump, sig, idl, quad,
                            method=RADIAL_QUADRATURE,
                            normalize_projections=scenario.normalize_projections)
            cache[key] = abs(c.value) ** 2
        raw[ls] = cache[key]

    peak = max(raw.values())
    if peak <= 0.0:
        raise ValueError("degenerate scenario: all pair probabilities vanish")
    edge = max(raw[-w], raw[w])
    if edge > EDGE_PROBABILITY_LIMIT * peak:
        raise WindowTooSmallError(
            "edge probability is %.2e of the peak (limit %g); increase l_window"
            % (edge / peak, EDGE_PROBABILITY_LIMIT))

    total = sum(raw[ls] for ls in range(-w, w + 1))

    def side_tail(edge_p: float, prev_p: float) -> float:
        if edge_p <= 0.0 or prev_p <= 0.0:
            return 0.0
        q = min(edge_p / prev_p, 0.9)
        return edge_p * q / (1.0 - q)

    tail = (side_tail(raw[-w], raw[-w + 1]) + side_tail(raw[w], raw[w - 1])) / total

    probs = {(ls, l_p - ls): raw[ls] / total for ls in range(-w, w + 1)}
    return SpectrumGrid(scenario=scenario, probs=probs, tail_mass=tail, raw_total=total)


def find_maxima(grid: SpectrumGrid) -> List[Tuple[Tuple[int, int], float]]:
    """Local maxima of the anti-diagonal profile, descending by probability.

    Plateau-aware: a run of equal values higher than both neighbors counts
    once per member, so the exact mirror ties of symmetric scenarios are all
    reported.  Equal probabilities are ordered by l_s ascending.
    """
    line = grid.anti_diagonal()
    probs = [p for (_, _, p) in line]
    n = len(probs)
    out = []
    i = 0
    while i < n:
        j = i
        while j + 1 < n and probs[j + 1] == probs[i]:
            j += 1
        left_ok = i == 0 or probs[i - 1] < probs[i]
        right_ok = j == n - 1 or probs[j + 1] < probs[i]
        if left_ok and right_ok and probs[i] > 0.0:
            for t in range(i, j + 1):
                ls, li, p = line[t]
                out.append(((ls, li), p))
        i = j + 1
    out.sort(key=lambda item: (-item[1], item[0][0]))
    return out


def global_maxima(grid: SpectrumGrid) -> List[Tuple[Tuple[int, int], float]]:
    """The top entries of find_maxima, keeping exact ties together."""
    maxima = find_maxima(grid)
    if not maxima:
        return []
    top = maxima[0][1]
    return [m for m in maxima if m[1] == top]


def secondary_maxima(grid: SpectrumGrid) -> List[Tuple[Tuple[int, int], float]]:
    """Local maxima that are not global ones."""
    maxima = find_maxima(grid)
    if not maxima:
        return []
    top = maxima[0][1]
    return [m for m in maxima if m[1] != top]


def spectrum_width(grid: SpectrumGrid) -> float:
    """Participation ratio 1 / sum p^2 of the anti-diagonal probabilities.

    Equals 1 for a single occupied mode and the mode count for a uniform
    profile, so it acts as an effective width of the spectrum.
    """
    return 1.0 / sum(p * p for (_, _, p) in grid.anti_diagonal())
