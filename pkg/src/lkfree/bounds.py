"""Closed-form counting bounds, evaluated as base-2 exponents."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

import mpmath

PREC_BITS = 128


class FormulaId(str, enum.Enum):
    MAIN_UPPER = "theorem_main_upper"
    COROLLARY_D = "corollary_d_bound"
    LINKGRAPH = "linkgraph_bound"
    QN_LOWER = "qn_lower_log"
    STEINER_LOWER = "steiner_lower_log"
    BARNES_G = "barnes_g_log"


class BoundError(ValueError):
    pass


@dataclass(frozen=True)
class LogBound:
    formula_id: FormulaId
    log2_value: mpmath.mpf
    params: dict = field(default_factory=dict)
    vacuous: bool = False

    def __float__(self):
        return float(self.log2_value)

    def to_dict(self) -> dict:
        return {
            "formula_id": self.formula_id.value,
            "params": self.params,
            "log2_value": mpmath.nstr(self.log2_value, 30),
            "vacuous": self.vacuous,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def admits(self, count: int) -> bool:
        """count <= 2^log2_value, compared exactly in log space."""
        if count <= 0:
            return True
        with mpmath.workprec(PREC_BITS):
            return mpmath.log(count, 2) <= self.log2_value


def _log2(x):
    return mpmath.log(x, 2)


def theorem_main_upper(n, r, k) -> LogBound:
    """2k n^(r-1) + n^(r-1) log n, for 3-good lists."""
    if not n >= k > r >= 2:
        raise BoundError(f"need n >= k > r >= 2, got n={n}, k={k}, r={r}")
    with mpmath.workprec(PREC_BITS):
        p = mpmath.mpf(n) ** (r - 1)
        val = 2 * k * p + p * _log2(n)
    return LogBound(FormulaId.MAIN_UPPER, val, {"n": n, "r": r, "k": k})


def corollary_d_bound(i, n, r, k) -> LogBound:
    """Exponent k n^(i-1) + n^(i-1) log n bounding d(r-i, n)."""
    if not 1 <= i <= r - 1:
        raise BoundError(f"need 1 <= i <= r-1, got i={i}, r={r}")
    if n < 1:
        raise BoundError("n must be positive")
    with mpmath.workprec(PREC_BITS):
        p = mpmath.mpf(n) ** (i - 1)
        val = k * p + p * _log2(n)
    return LogBound(FormulaId.COROLLARY_D, val, {"i": i, "n": n, "r": r, "k": k})


def linkgraph_bound(n, k) -> LogBound:
    """log2(2^k n) bounding d(r-1, n); just k once n <= k."""
    if n < 1:
        raise BoundError("n must be positive")
    with mpmath.workprec(PREC_BITS):
        val = mpmath.mpf(k) if n <= k else k + _log2(n)
    return LogBound(FormulaId.LINKGRAPH, val, {"n": n, "k": k})


def qn_lower_log(n) -> LogBound:
    """(n^2/27 - n^2/log n) log(n / log n); vacuous (0) wherever it is not positive."""
    if n < 2:
        raise BoundError("need n >= 2")
    with mpmath.workprec(PREC_BITS):
        ln = _log2(n)
        steps = mpmath.mpf(n) ** 2 / 27 - mpmath.mpf(n) ** 2 / ln
        val = steps * _log2(n / ln)
    if val <= 0:
        return LogBound(FormulaId.QN_LOWER, mpmath.mpf(0), {"n": n}, vacuous=True)
    return LogBound(FormulaId.QN_LOWER, val, {"n": n})


def steiner_lower_log(n, r) -> LogBound:
    """(n^(r-1) / (2 r^(r+1))) log n from the greedy partial Steiner count."""
    if not n >= r >= 2:
        raise BoundError("need n >= r >= 2")
    with mpmath.workprec(PREC_BITS):
        val = mpmath.mpf(n) ** (r - 1) / (2 * mpmath.mpf(r) ** (r + 1)) * _log2(n)
    return LogBound(FormulaId.STEINER_LOWER, val, {"n": n, "r": r})


def barnes_g_log(n) -> LogBound:
    """log2 of 1! 2! ... (n-1)! = G(n+1), summed exactly then logged."""
    if n < 2:
        raise BoundError("need n >= 2")
    prod, fact = 1, 1
    for m in range(1, n):
        fact *= m
        prod *= fact
    with mpmath.workprec(PREC_BITS):
        val = _log2(prod)
    return LogBound(FormulaId.BARNES_G, val, {"n": n})


def evaluate(formula_id, **params) -> LogBound:
    table = {
        FormulaId.MAIN_UPPER: theorem_main_upper,
        FormulaId.COROLLARY_D: corollary_d_bound,
        FormulaId.LINKGRAPH: linkgraph_bound,
        FormulaId.QN_LOWER: qn_lower_log,
        FormulaId.STEINER_LOWER: steiner_lower_log,
        FormulaId.BARNES_G: barnes_g_log,
    }
    return table[FormulaId(formula_id)](**params)
