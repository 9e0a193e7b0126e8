"""Schmidt structure and entanglement entropy of the pair state.

At fixed pump OAM the two-photon state is already written in its Schmidt
form: the conserving anti-diagonal probabilities are the Schmidt weights and
the reduced density matrix of either photon is diagonal in the OAM basis.
The von Neumann entropy of those weights quantifies the entanglement, and an
entropy table over pump orders and projection scenarios summarizes how the
projection choice trades spectrum width against entanglement.

Published benchmark entropies for the three standard scenarios are kept here
so the calibration routine can report how close each convention choice comes
to them; they gate nothing but the documentation.
"""

import math
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .modes import DEFAULT_RING_RADIUS, DEFAULT_RING_WIDTH
from .quadrature import QuadratureConfig
from .spectrum import (Scenario, SpectrumGrid, WindowTooSmallError,
                       build_spectrum, lg_to_lg, pov_to_lg, pov_to_pov,
                       spectrum_width)

SCHMIDT_RANK_CUTOFF = 1e-14

LogBase = Union[str, float, int]


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Ordered Schmidt weights at fixed pump OAM.

    weights follow l_s ascending over the window; normalized records whether
    they were rescaled to unit sum.
    """
    l_p: int
    weights: Tuple[float, ...]
    normalized: bool

    def __post_init__(self):
        if any(w < 0.0 for w in self.weights):
            raise ValueError("Schmidt weights must be nonnegative")
        if self.normalized and self.weights:
            total = sum(self.weights)
            if abs(total - 1.0) > 1e-12:
                raise ValueError("normalized weights must sum to 1, got %r" % (total,))

    @property
    def rank(self) -> int:
        return sum(1 for w in self.weights if w > SCHMIDT_RANK_CUTOFF)

    @property
    def entangled(self) -> bool:
        return self.rank > 1


def schmidt_from_spectrum(grid: SpectrumGrid, normalized: bool = True) -> SchmidtDecomposition:
    """Read the Schmidt weights off the conserving anti-diagonal.

    normalized=False returns the arbitrary-units weights (the grid's raw
    |C|^2 values before the unit-sum rescale)."""
    line = grid.anti_diagonal()
    if not line:
        raise ValueError("empty anti-diagonal: degenerate scenario")
    if normalized:
        weights = tuple(p for (_, _, p) in line)
    else:
        weights = tuple(p * grid.raw_total for (_, _, p) in line)
    return SchmidtDecomposition(l_p=grid.scenario.pump.l, weights=weights, normalized=normalized)


def _log_divisor(log_base: LogBase) -> float:
    if log_base in ("e", "ln"):
        return 1.0
    base = float(log_base)
    if base <= 0.0 or base == 1.0:
        raise ValueError("log base must be positive and not 1")
    return math.log(base)


def von_neumann_entropy(decomp: SchmidtDecomposition, log_base: LogBase = "e",
                        normalize: bool = True) -> float:
    """S = -sum w log w over the Schmidt weights.

    normalize rescales the weights to unit sum first; without it the value
    inherits the arbitrary scale of the stored weights.  Zero weights
    contribute nothing (x log x -> 0).  log_base is 'e', 2, or any positive
    number d for log_d.
    """
    div = _log_divisor(log_base)
    weights = list(decomp.weights)
    if normalize:
        total = sum(weights)
        if total <= 0.0:
            raise ValueError("cannot normalize all-zero weights")
        weights = [w / total for w in weights]
    s = -sum(w * math.log(w) for w in weights if w > 0.0)
    return s / div


@dataclass(frozen=True)
class Convention:
    """Entropy and projection convention knobs exposed to calibration."""
    log_base: LogBase = "e"
    normalize_weights: bool = True
    ring_radius: float = DEFAULT_RING_RADIUS
    ring_width: float = DEFAULT_RING_WIDTH
    normalize_projections: bool = False

    def to_dict(self) -> Dict[str, object]:
        return {
            "log_base": self.log_base if isinstance(self.log_base, str) else float(self.log_base),
            "normalize_weights": self.normalize_weights,
            "ring_radius": self.ring_radius,
            "ring_width": self.ring_width,
            "normalize_projections": self.normalize_projections,
        }


SCENARIO_LABELS = ("LG->LG,LG", "POV->LG,LG", "POV->POV,POV")

# benchmark entropies (natural log, unit-sum weights) for pump orders 0..4;
# used by `calibrate` to score convention choices
REFERENCE_ENTROPIES: Dict[str, Tuple[float, ...]] = {
    "LG->LG,LG": (1.8537, 2.4014, 2.7030, 2.9133, 3.0683),
    "POV->LG,LG": (0.8850, 1.3921, 1.6016, 1.6998, 1.7469),
    "POV->POV,POV": (0.3662, 0.8165, 1.0025, 1.1361, 1.2397),
}
REFERENCE_L_P = (0, 1, 2, 3, 4)


def _scenarios_for(l_p: int, convention: Convention) -> Tuple[Scenario, Scenario, Scenario]:
    kw = dict(ring_radius=convention.ring_radius, ring_width=convention.ring_width,
              normalize_projections=convention.normalize_projections)
    return (lg_to_lg(l_p),
            pov_to_lg(l_p, **kw),
            pov_to_pov(l_p, **kw))


@dataclass(frozen=True)
class EntropyReport:
    """Entropy per (pump OAM, scenario) cell plus the convention metadata."""
    l_p_values: Tuple[int, ...]
    columns: Tuple[str, ...]
    cells: Tuple[Tuple[float, ...], ...]  # rows follow l_p_values
    convention: Convention
    widths: Tuple[Tuple[float, ...], ...] = field(default=(), compare=False)

    def to_dict(self) -> Dict[str, object]:
        return {
            "columns": list(self.columns),
            "rows": [{"l_p": lp, "entropies": list(row)}
                     for lp, row in zip(self.l_p_values, self.cells)],
            "convention": self.convention.to_dict(),
        }

    def to_text(self) -> str:
        head = "l_p  " + "  ".join("%-14s" % c for c in self.columns)
        lines = [head, "-" * len(head)]
        for lp, row in zip(self.l_p_values, self.cells):
            lines.append("%3d  " % lp + "  ".join("%-14.6g" % v for v in row))
        return "\n".join(lines)


def entropy_table(l_p_values: Iterable[int] = REFERENCE_L_P,
                  quad: Optional[QuadratureConfig] = None,
                  convention: Convention = Convention()) -> EntropyReport:
    """Entropy matrix over pump orders (rows) and the three standard
    projection scenarios (columns)."""
    if quad is None:
        quad = QuadratureConfig()
    l_p_values = tuple(l_p_values)
    cells: List[Tuple[float, ...]] = []
    widths: List[Tuple[float, ...]] = []
    for lp in l_p_values:
        row = []
        wrow = []
        for scen in _scenarios_for(lp, convention):
            grid = build_spectrum(scen, quad)
            decomp = schmidt_from_spectrum(grid, normalized=convention.normalize_weights)
            s = von_neumann_entropy(decomp, convention.log_base, convention.normalize_weights)
            if convention.normalize_weights:
                # the normalized entropy can never exceed log(rank)
                bound = math.log(decomp.rank) / _log_divisor(convention.log_base)
                assert s <= bound + 1e-9, "entropy %g above log-rank bound %g" % (s, bound)
            row.append(s)
            wrow.append(spectrum_width(grid))
        cells.append(tuple(row))
        widths.append(tuple(wrow))
    return EntropyReport(l_p_values=l_p_values, columns=SCENARIO_LABELS,
                         cells=tuple(cells), convention=convention,
                         widths=tuple(widths))


@dataclass(frozen=True)
class CalibrationEntry:
    convention: Convention
    max_rel_deviation: float
    per_column: Dict[str, float] = field(compare=False)

    def to_dict(self) -> Dict[str, object]:
        return {
            "convention": self.convention.to_dict(),
            "max_rel_deviation": self.max_rel_deviation,
            "per_column_max": dict(self.per_column),
        }


@dataclass(frozen=True)
class CalibrationReport:
    """Deviation of every scanned convention from the benchmark entropies,
    best first.

    A single convention ties all ring scenarios to one geometry, so the
    best overall entry is a compromise; per_column_best records how close
    each column alone can get, which is the honest answer when the
    benchmarks were produced with different constants per column.
    """
    entries: Tuple[CalibrationEntry, ...]
    best_table: EntropyReport

    @property
    def best(self) -> CalibrationEntry:
        return self.entries[0]

    def per_column_best(self) -> Dict[str, CalibrationEntry]:
        out = {}
        for label in SCENARIO_LABELS:
            out[label] = min(self.entries, key=lambda e: e.per_column[label])
        return out

    def to_dict(self) -> Dict[str, object]:
        per_col = {label: {"deviation": e.per_column[label],
                           "convention": e.convention.to_dict()}
                   for label, e in self.per_column_best().items()}
        return {
            "reference": {k: list(v) for k, v in REFERENCE_ENTROPIES.items()},
            "entries": [e.to_dict() for e in self.entries],
            "per_column_best": per_col,
            "best_table": self.best_table.to_dict(),
        }

    def to_text(self) -> str:
        lines = ["convention scan, best first (max relative deviation from benchmarks)"]
        for e in self.entries[:10]:
            c = e.convention
            lines.append("  base=%-3s wnorm=%-5s pnorm=%-5s r0=%-6g w0=%-6g -> %.4g"
                         % (c.log_base, c.normalize_weights, c.normalize_projections,
                            c.ring_radius, c.ring_width, e.max_rel_deviation))
        lines.append("")
        lines.append("closest single-column fits:")
        for label, e in self.per_column_best().items():
            c = e.convention
            lines.append("  %-13s dev %.4g at base=%s wnorm=%s pnorm=%s r0=%g w0=%g"
                         % (label, e.per_column[label], c.log_base,
                            c.normalize_weights, c.normalize_projections,
                            c.ring_radius, c.ring_width))
        lines.append("")
        lines.append("best convention table:")
        lines.append(self.best_table.to_text())
        return "\n".join(lines)


def calibrate(quad: Optional[QuadratureConfig] = None,
              log_bases: Sequence[LogBase] = ("e", 2),
              weight_normalizations: Sequence[bool] = (True, False),
              projection_normalizations: Sequence[bool] = (False, True),
              ring_radii: Sequence[float] = (0.2, 0.25, 0.3, 0.375),
              ring_widths: Sequence[float] = (0.4, 0.5, 0.6),
              l_p_values: Iterable[int] = REFERENCE_L_P) -> CalibrationReport:
    """Scan convention choices and score each against the benchmark table.

    The spectra depend only on (geometry, projection normalization); the
    entropy conventions reuse them, so the scan cost is dominated by the
    geometry grid.  Returns every scored convention, best first.
    """
    if quad is None:
        quad = QuadratureConfig()
    l_p_values = tuple(l_p_values)

    ref_rows = {lp: i for i, lp in enumerate(REFERENCE_L_P)}
    for lp in l_p_values:
        if lp not in ref_rows:
            raise ValueError("no benchmark row for l_p=%d" % lp)

    # cache grids: the LG column once, the POV columns per geometry and
    # projection convention; entropy knobs reuse them
    lg_grids = {lp: build_spectrum(lg_to_lg(lp), quad) for lp in l_p_values}

    def padded(scen: Scenario):
        # off-design geometries can spill past the default window; widen
        # until the edge contract is met again
        pad = 0
        while True:
            try:
                return build_spectrum(replace(scen, l_window=scen.window + pad), quad)
            except WindowTooSmallError:
                pad += 4
                if pad > 32:
                    raise

    def pov_grids(r0, w0, pnorm):
        out = {}
        for lp in l_p_values:
            kw = dict(ring_radius=r0, ring_width=w0, normalize_projections=pnorm)
            out[lp] = (padded(pov_to_lg(lp, **kw)),
                       padded(pov_to_pov(lp, **kw)))
        return out

    entries: List[CalibrationEntry] = []
    for pnorm in projection_normalizations:
        for r0 in ring_radii:
            for w0 in ring_widths:
                cached = pov_grids(r0, w0, pnorm)
                for base in log_bases:
                    for wnorm in weight_normalizations:
                        per_col = {}
                        for col, label in enumerate(SCENARIO_LABELS):
                            worst = 0.0
                            for lp in l_p_values:
                                grid = lg_grids[lp] if col == 0 else cached[lp][col - 1]
                                decomp = schmidt_from_spectrum(grid, normalized=wnorm)
                                s = von_neumann_entropy(decomp, base, wnorm)
                                ref = REFERENCE_ENTROPIES[label][ref_rows[lp]]
                                worst = max(worst, abs(s - ref) / ref)
                            per_col[label] = worst
                        conv = Convention(log_base=base, normalize_weights=wnorm,
                                          ring_radius=r0, ring_width=w0,
                                          normalize_projections=pnorm)
                        entries.append(CalibrationEntry(
                            convention=conv,
                            max_rel_deviation=max(per_col.values()),
                            per_column=per_col))

    entries.sort(key=lambda e: (e.max_rel_deviation,
                                str(e.convention.log_base),
                                not e.convention.normalize_weights,
                                e.convention.ring_radius,
                                e.convention.ring_width))
    best_table = entropy_table(l_p_values, quad, entries[0].convention)
    return CalibrationReport(entries=tuple(entries), best_table=best_table)
