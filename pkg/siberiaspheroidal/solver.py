"""
Siberia-Spheroidal - Combined solver for one (m, c) and a run of l values

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Sequence

from .angular.functions import AngularResult, angular_s1, eta_from_theta
from .coeffs.joining import JoiningFactor, joining_factor
from .coeffs.negative import with_branches
from .coeffs.normalization import NormalizationResult, normalize
from .coeffs.ratios import CoeffSet, d_ratios
from .core.errors import DomainError
from .core.precision import PrecisionContext, check_finite, check_size_parameter
from .eigen.spectrum import PROLATE_FACTOR, EigenRecord, eigenvalue_spectrum
from .radial.r1_search import R1SearchState, r1_search
from .radial.results import R1Fragment, RadialResult
from .radial.selector import SelectionOptions, select_radial
from .utils.logger import WarningCollector, WarningEvent, get_logger

logger = get_logger(__name__)


class SiberiaOblateSolver:
    """
    扁球波函数求解器 / Oblate spheroidal function solver

    对固定的 (m, c) 计算 l = m..m+l_count-1 的特征值、系数、径向与角函数。
    特征值与系数在首次使用时计算并缓存；径向函数按 ξ 计算。
    Eigenvalues and coefficient sets are computed on first use and cached, so
    several ξ values and angular grids share them.

    Args:
        m: 阶 / order, m ≥ 0
        c: 尺寸参数 / size parameter with c_r, c_i ≥ 0
        l_count: l 的个数 / number of l values
        mode: double / hybrid / extended
        minacc: 覆盖默认 minacc / override of the default minacc
        options: 径向方法开关 / radial method switches and windows
    """

    def __init__(
        self,
        m: int,
        c: complex,
        l_count: int,
        mode: str = "double",
        minacc: Optional[int] = None,
        options: Optional[SelectionOptions] = None,
        prolate_factor: float = PROLATE_FACTOR,
        warnings: Optional[WarningCollector] = None,
    ):
        if m < 0:
            raise DomainError(f"m must be non-negative, got {m}")
        if l_count < 1:
            raise DomainError(f"l_count must be at least 1, got {l_count}")
        self.m = int(m)
        self.c = check_size_parameter(c)
        self.l_count = int(l_count)
        self.ctx = PrecisionContext.for_mode(mode, self.c, minacc)
        self.options = options if options is not None else SelectionOptions()
        self.prolate_factor = prolate_factor
        self.warnings = warnings if warnings is not None else WarningCollector()
        self._records: Optional[List[EigenRecord]] = None
        self._coeffs: Dict[int, CoeffSet] = {}
        self._kappas: Dict[int, JoiningFactor] = {}
        self._norms: Dict[tuple, NormalizationResult] = {}

    def __repr__(self) -> str:
        return f"SiberiaOblateSolver(m={self.m}, c={self.c}, l_count={self.l_count}, mode={self.ctx.mode!r})"

    @property
    def l_values(self) -> range:
        return range(self.m, self.m + self.l_count)

    @property
    def records(self) -> List[EigenRecord]:
        if self._records is None:
            self._records = eigenvalue_spectrum(
                self.m, self.c, self.m + self.l_count - 1, self.ctx, self.warnings, self.prolate_factor,
            )
        return self._records

    def record(self, l: int) -> EigenRecord:
        if l not in self.l_values:
            raise DomainError(f"l={l} is outside {self.l_values.start}..{self.l_values.stop - 1}")
        return self.records[l - self.m]

    def coeffs(self, l: int) -> CoeffSet:
        if l not in self._coeffs:
            rec = self.record(l)
            self._coeffs[l] = d_ratios(self.m, l, self.c, rec.lam, ctx=self.ctx, naccre=rec.naccre)
        return self._coeffs[l]

    def normalization(self, l: int, scheme: str = "meixner_schafke") -> NormalizationResult:
        key = (l, scheme)
        if key not in self._norms:
            self._norms[key] = normalize(scheme, self.coeffs(l), self.ctx)
        return self._norms[key]

    def joining(self, l: int) -> JoiningFactor:
        if l not in self._kappas:
            found = with_branches(self.coeffs(l), self.ctx)
            self._coeffs[l] = found
            self._kappas[l] = joining_factor(self.m, l, self.c, found, self.normalization(l), self.ctx)
        return self._kappas[l]

    def check_normalization(self) -> None:
        """Meixner–Schäfke 精度低于 warn_digits 时发出警告 / Warn on weak Meixner–Schäfke sums"""
        for l in self.l_values:
            norm = self.normalization(l)
            if norm.accuracy_digits < self.options.warn_digits:
                self.warnings.add(WarningEvent(
                    "normalization_accuracy", self.m, l,
                    f"Meixner-Schafke normalization has {norm.accuracy_digits} digits for c={self.c}",
                ))

    def radial(self, xi: float) -> List[RadialResult]:
        """
        计算各 l 的 R⁽¹⁾、R⁽²⁾ / Radial functions of both kinds at ξ

        Raises:
            DomainError: ξ < 0 或 c = 0 / negative ξ or c = 0
        """
        check_finite(xi)
        if self.c == 0:
            raise DomainError("radial functions need c != 0")
        coeff_sets = {l: self.coeffs(l) for l in self.l_values}
        return select_radial(
            self.m, self.c, float(xi), self.records, coeff_sets, self.ctx, self.options, self.warnings, self._kappas,
        )

    def radial_first_kind(self, xi: float) -> Dict[int, R1Fragment]:
        """
        只计算 R⁽¹⁾ / R⁽¹⁾ alone for every l, with the η search carried across l

        Raises:
            DomainError: ξ ≤ 0 或 c = 0
        """
        check_finite(xi)
        if xi <= 0 or self.c == 0:
            raise DomainError("the first-kind search needs xi > 0 and c != 0")
        state = R1SearchState()
        out: Dict[int, R1Fragment] = {}
        for l in self.l_values:
            out[l], state = r1_search(self.m, l, self.c, float(xi), state, self.coeffs(l), self.ctx)
        return out

    def angular(
        self,
        eta_grid: Optional[Sequence[float]] = None,
        scheme: str = "meixner_schafke",
        theta: Optional[Sequence[float]] = None,
        derivatives: bool = True,
    ) -> List[AngularResult]:
        """
        计算各 l 的 S⁽¹⁾ / Angular functions for every l

        Args:
            eta_grid: η 网格 / η values in [-1, 1]
            theta: 或以弧度给出的 θ，η = cos θ / or arc-cosine arguments in radians
        """
        if (eta_grid is None) == (theta is None):
            raise DomainError("give exactly one of eta_grid and theta")
        grid = list(eta_grid) if eta_grid is not None else eta_from_theta(theta)
        self.check_normalization()
        out = []
        for l in self.l_values:
            norm = self.normalization(l, scheme)
            out.append(angular_s1(self.m, l, self.c, grid, self.coeffs(l), norm, self.ctx, derivatives))
        return out

    def diagnostics(self, radial: Optional[Sequence[RadialResult]] = None) -> List[Dict[str, Any]]:
        """
        每个 l 的诊断记录 / One diagnostics record per l

        包括项数、方法、η、损失记录、naccre、itestm 与配对位数。
        """
        by_l = {r.l: r for r in radial} if radial is not None else {}
        rows = []
        for l in self.l_values:
            rec = self.record(l)
            cs = self.coeffs(l)
            norm = self.normalization(l)
            row: Dict[str, Any] = {
                "m": self.m,
                "l": l,
                "naccre": rec.naccre,
                "itestm": cs.itestm,
                "pairing_digits": rec.pairing_digits,
                "paired_with": rec.paired_with,
                "prolate_like": rec.prolate_like,
                "eigen_source": rec.source,
                "terms_available": len(cs.values),
                "jsubms": norm.jsubms.digits_lost,
                "jsubmf": norm.jsubmf.digits_lost,
                "jsubflam": norm.jsubflam.digits_lost,
            }
            if cs.negative is not None:
                row["negative_d_loss"] = cs.jsub_neg.digits_lost
            if l in self._kappas:
                row["joining_loss"] = self._kappas[l].err.digits_lost
            found = by_l.get(l)
            if found is not None:
                row.update({
                    "method_r2": found.method_r2,
                    "eta_used": found.eta_used,
                    "eta_used_r2": found.eta_used_r2,
                    "acc_r1": found.acc_r1,
                    "acc_r2": found.acc_r2,
                    "wronskian_digits": found.wronskian_digits,
                })
                row.update({k: v for k, v in found.ledger.items() if k != "tried"})
                row["tried"] = found.ledger.get("tried", {})
            rows.append(row)
        return rows
