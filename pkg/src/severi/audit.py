"""Anchor comparisons, cross-formula identity checks, integrality scans,
and known-discrepancy probes.

The probes deserve a word: two closed forms in circulation are
numerically inconsistent with values that are anchored independently
(the degree-3 rational cusp count 24, and the genus identities that the
two-path checks confirm).  The audit's job is to compute exactly what
those forms say and keep the disagreement reproducible -- a probe FAILs
only if the recorded discrepancy drifts or silently vanishes, which
would mean the evaluator no longer matches the form it is supposed to
evaluate.  Reports are deterministic: same engine version and degree
range, byte-identical body.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ._version import __version__
from .exact import (
    ExactScalar,
    WEIGHT_3D1_MINUS_2,
    WEIGHT_D1,
    WEIGHT_ONE,
    format_exact,
    is_integral,
    parse_exact,
)
from .engine import InvariantEngine, InvariantKind, integrality_expected


class CheckKind(str, Enum):
    ANCHOR = "ANCHOR"
    IDENTITY = "IDENTITY"
    INTEGRALITY = "INTEGRALITY"
    DISCREPANCY_PROBE = "DISCREPANCY_PROBE"


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INFO = "INFO"


@dataclass(frozen=True)
class AuditCheck:
    """One comparison: id code, degree, kind, expected/actual, status."""

    id: str
    degree: int
    kind: CheckKind
    actual: ExactScalar
    expected: ExactScalar | None = None
    status: CheckStatus = CheckStatus.PASS
    detail: str | None = None


@dataclass
class AuditReport:
    """Ordered check list plus summary; rendering is canonical."""

    d_max: int
    checks: list[AuditCheck] = field(default_factory=list)
    engine_version: str = __version__

    def __post_init__(self) -> None:
        if not self.checks:
            raise ValueError("an audit report must contain at least one check")

    @property
    def summary(self) -> dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for check in self.checks:
            counts[check.status.value] += 1
        return counts

    @property
    def has_blocking_failure(self) -> bool:
        """True if any ANCHOR or IDENTITY check failed (drives exit 1)."""
        return any(
            check.status is CheckStatus.FAIL
            and check.kind in (CheckKind.ANCHOR, CheckKind.IDENTITY)
            for check in self.checks
        )

    def to_json_obj(self) -> dict:
        return {
            "engine_version": self.engine_version,
            "d_max": self.d_max,
            "checks": [
                {
                    "id": check.id,
                    "degree": check.degree,
                    "kind": check.kind.value,
                    "expected": None
                    if check.expected is None
                    else format_exact(check.expected),
                    "actual": format_exact(check.actual),
                    "status": check.status.value,
                    "detail": check.detail,
                }
                for check in self.checks
            ],
            "summary": self.summary,
        }

    def to_text(self) -> str:
        lines = [
            f"severi audit (engine {self.engine_version}, degrees up to {self.d_max})",
            "",
        ]
        for check in self.checks:
            parts = [
                f"[{check.status.value}]",
                f"{check.kind.value:<17}",
                f"d={check.degree:<3}",
                f"{check.id:<28}",
                f"actual={format_exact(check.actual)}",
            ]
            if check.expected is not None:
                parts.append(f"expected={format_exact(check.expected)}")
            if check.detail:
                parts.append(f"({check.detail})")
            lines.append(" ".join(parts))
        counts = self.summary
        lines.append("")
        lines.append(
            f"summary: {counts['PASS']} PASS, {counts['FAIL']} FAIL, "
            f"{counts['INFO']} INFO"
        )
        return "\n".join(lines) + "\n"


def _require_min_degree(d_max: int, minimum: int = 3) -> None:
    if not isinstance(d_max, int) or isinstance(d_max, bool) or d_max < minimum:
        raise ValueError(f"audit requires d_max >= {minimum}, got {d_max!r}")


# Anchor table: the classical degree-3 cusp count plus the hand-derived
# low-degree values the engine must reproduce exactly.
_ANCHORS: tuple[tuple[InvariantKind, int, int], ...] = (
    (InvariantKind.N0, 1, 1),
    (InvariantKind.N0, 2, 1),
    (InvariantKind.N0, 3, 12),
    (InvariantKind.N0, 4, 620),
    (InvariantKind.N0, 5, 87304),
    (InvariantKind.N1, 3, 1),
    (InvariantKind.N1, 4, 225),
    (InvariantKind.N1, 5, 87192),
    (InvariantKind.K0, 3, 24),
    (InvariantKind.K1, 3, 0),
    (InvariantKind.K1, 4, 840),
    (InvariantKind.G0, 3, 3),
    (InvariantKind.G1, 4, 576),
)

# Recorded discrepancy artifacts.  The closed-form cusp count evaluates
# to -60 at degree 3 against the anchor 24; the ramification-identity
# residual is nonzero at every degree.  Values were frozen from an
# independent straight-line evaluation of the respective forms.
RECORDED_K0_PRINTED_D3 = ExactScalar(-60)
RECORDED_RAMIFICATION_RESIDUALS: dict[int, ExactScalar] = {
    d: parse_exact(text)
    for d, text in {
        4: "2015/2",
        5: "349216",
        6: "208311060",
        7: "200981112640",
        8: "295875803724200",
        9: "633268756795852800",
        10: "1894364316632897685120",
        11: "7667723864947258454073600",
        12: "40879222502403733748761507200",
    }.items()
}


def run_anchor_suite(engine: InvariantEngine, d_max: int) -> AuditReport:
    """Compare engine outputs against the anchor table, filtered to
    anchors of degree <= d_max.  Any mismatch is a FAIL."""
    _require_min_degree(d_max)
    checks = []
    for kind, d, expected_int in _ANCHORS:
        if d > d_max:
            continue
        expected = ExactScalar(expected_int)
        actual = engine.value(kind, d)
        checks.append(
            AuditCheck(
                id=f"anchor_{kind.value.lower()}_d{d}",
                degree=d,
                kind=CheckKind.ANCHOR,
                actual=actual,
                expected=expected,
                status=CheckStatus.PASS if actual == expected else CheckStatus.FAIL,
            )
        )
    return AuditReport(d_max=d_max, checks=checks)


# Hard integrality checks for the invariants that must be integers;
# the reportable-only trio (G1, OMEGA, M) is surfaced as INFO.
_CHECKED_INTEGRALITY = tuple(
    kind for kind in InvariantKind if integrality_expected(kind)
)
_INFO_INTEGRALITY = (InvariantKind.G1, InvariantKind.OMEGA, InvariantKind.M)


def run_identity_suite(engine: InvariantEngine, d_max: int) -> AuditReport:
    """Two-path equalities, the component-count identity, T-linearity on
    the fixed weight basis, and integrality scans, for 3 <= d <= d_max."""
    _require_min_degree(d_max)
    checks = []
    for d in range(3, d_max + 1):
        pairs = (
            ("k1_two_path", engine.k1(d), engine.k1_via_c2(d)),
            (
                "rcount_equals_nodes",
                engine.r_component_count(d),
                engine.reducible_fibre_count(d),
            ),
            ("g0_two_path", engine.g0(d), engine.g0_from_splitting_sum(d)),
            (
                "t_linearity",
                engine.t_op(WEIGHT_3D1_MINUS_2, d),
                3 * engine.t_op(WEIGHT_D1, d) - 2 * engine.t_op(WEIGHT_ONE, d),
            ),
        )
        for check_id, first, second in pairs:
            checks.append(
                AuditCheck(
                    id=check_id,
                    degree=d,
                    kind=CheckKind.IDENTITY,
                    actual=second,
                    expected=first,
                    status=CheckStatus.PASS if first == second else CheckStatus.FAIL,
                )
            )
        for kind in _CHECKED_INTEGRALITY:
            value = engine.value(kind, d)
            checks.append(
                AuditCheck(
                    id=f"integrality_{kind.value.lower()}",
                    degree=d,
                    kind=CheckKind.INTEGRALITY,
                    actual=value,
                    status=CheckStatus.PASS
                    if is_integral(value)
                    else CheckStatus.FAIL,
                )
            )
        for kind in _INFO_INTEGRALITY:
            value = engine.value(kind, d)
            checks.append(
                AuditCheck(
                    id=f"integrality_{kind.value.lower()}",
                    degree=d,
                    kind=CheckKind.INTEGRALITY,
                    actual=value,
                    status=CheckStatus.INFO,
                    detail="integral" if is_integral(value) else "non-integral",
                )
            )
    return AuditReport(d_max=d_max, checks=checks)


def run_discrepancy_probes(engine: InvariantEngine, d_max: int) -> AuditReport:
    """Reproduce the two documented inconsistencies.

    Probes report INFO while the discrepancy reproduces exactly; they
    FAIL only on evaluator drift (a changed or vanished value), never
    because the inconsistency itself is present.
    """
    _require_min_degree(d_max)
    checks = []

    actual = engine.k0_printed(3)
    drifted = actual != RECORDED_K0_PRINTED_D3
    checks.append(
        AuditCheck(
            id="k0_printed_vs_anchor",
            degree=3,
            kind=CheckKind.DISCREPANCY_PROBE,
            actual=actual,
            expected=RECORDED_K0_PRINTED_D3,
            status=CheckStatus.FAIL if drifted else CheckStatus.INFO,
            detail="closed form disagrees with assembly anchor 24",
        )
    )

    for d in range(4, d_max + 1):
        residual = engine.ramification_residual(d)
        recorded = RECORDED_RAMIFICATION_RESIDUALS.get(d)
        if recorded is not None:
            drifted = residual != recorded
            detail = "nonzero residual reproduces recorded value"
        else:
            # Beyond the recorded range only a vanishing residual is
            # suspicious: the probe certifies the inconsistency exists.
            drifted = residual == 0
            detail = "nonzero residual (no recorded value at this degree)"
        checks.append(
            AuditCheck(
                id="ramification_residual",
                degree=d,
                kind=CheckKind.DISCREPANCY_PROBE,
                actual=residual,
                expected=recorded,
                status=CheckStatus.FAIL if drifted else CheckStatus.INFO,
                detail=detail,
            )
        )
    return AuditReport(d_max=d_max, checks=checks)


def run_full_audit(engine: InvariantEngine, d_max: int) -> AuditReport:
    """All three suites in canonical order as a single report."""
    _require_min_degree(d_max)
    checks = (
        run_anchor_suite(engine, d_max).checks
        + run_identity_suite(engine, d_max).checks
        + run_discrepancy_probes(engine, d_max).checks
    )
    return AuditReport(d_max=d_max, checks=checks)


__all__ = [
    "AuditCheck",
    "AuditReport",
    "CheckKind",
    "CheckStatus",
    "RECORDED_RAMIFICATION_RESIDUALS",
    "RECORDED_K0_PRINTED_D3",
    "run_anchor_suite",
    "run_discrepancy_probes",
    "run_full_audit",
    "run_identity_suite",
]
