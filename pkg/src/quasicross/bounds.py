"""Feasibility predicates for quasi-cross lattice tilings.

Each rule is an executable necessary condition: when it triggers, no
perfect splitting (lattice tiling) with those parameters exists.  Rules
never rule out mere packings, and every ruled-out verdict carries the
arithmetic witness that triggered it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .splitting import QuasiCrossShape


@dataclass(frozen=True)
class DimensionBound:
    """Tilings need (2*k_plus*(k_minus+1) - k_minus^2)/(k_plus+k_minus) <= n."""

    ruled_out: bool
    value: Fraction


def dimension_bound(shape: QuasiCrossShape) -> DimensionBound:
    """Evaluate the dimension inequality exactly; ruled out when the
    rational left side exceeds n.  In particular every 2-D shape in scope
    is ruled out."""
    if shape.n < 2:
        raise ValueError("dimension bound applies to n >= 2")
    lhs = Fraction(
        2 * shape.k_plus * (shape.k_minus + 1) - shape.k_minus**2,
        shape.k_plus + shape.k_minus,
    )
    return DimensionBound(lhs > shape.n, lhs)


@dataclass(frozen=True)
class NegativeArmBound:
    """Tilings need k_minus <= n - 1."""

    ruled_out: bool
    limit: int


def negative_arm_bound(shape: QuasiCrossShape) -> NegativeArmBound:
    if shape.n < 2:
        raise ValueError("negative-arm bound applies to n >= 2")
    return NegativeArmBound(shape.k_minus > shape.n - 1, shape.n - 1)


def max_positive_arm(n: int) -> int:
    """Largest k_plus compatible with a tiling in dimension n >= 3 when
    k_minus > n/2 - 1: floor(3n^2/8) for even n, (3n^2-4n+1)/4 for odd n."""
    if n < 3:
        raise ValueError("max_positive_arm applies to n >= 3")
    if n % 2 == 0:
        return 3 * n * n // 8
    return (3 * n * n - 4 * n + 1) // 4


@dataclass(frozen=True)
class RuleCheck:
    name: str
    ruled_out: bool
    detail: str


@dataclass(frozen=True)
class FeasibilityReport:
    """Verdict plus the individual rule evaluations for one candidate
    (k_plus, k_minus, q) instance; a ruled-out verdict always has at
    least one triggered rule with its arithmetic witness."""

    k_plus: int
    k_minus: int
    q: int
    n: int | None
    ruled_out: bool
    rules: tuple[RuleCheck, ...]

    def triggered(self) -> tuple[RuleCheck, ...]:
        return tuple(r for r in self.rules if r.ruled_out)


def group_order_constraints(k_plus: int, k_minus: int, q: int) -> FeasibilityReport:
    """Necessary conditions on the order q of a cyclic group admitting a
    perfect splitting with arms (k_plus, k_minus).

    Rules: (a) k_plus+k_minus must divide q-1 (counting); (b) for
    consecutive arms (k, k-1), gcd(k, q) must exceed 1; (c) for arms
    (2^w, 2^w - 1), q must be a power of 2^(w+1).
    """
    if q < 2:
        raise ValueError("group order must be >= 2")
    if not 0 < k_minus < k_plus:
        raise ValueError("need 0 < k_minus < k_plus")
    span = k_plus + k_minus
    rules = []
    divisible = (q - 1) % span == 0
    n = (q - 1) // span if divisible else None
    rules.append(
        RuleCheck(
            "divisibility",
            not divisible,
            f"{span} {'divides' if divisible else 'does not divide'} {q}-1",
        )
    )
    if k_minus == k_plus - 1:
        g = gcd(k_plus, q)
        rules.append(
            RuleCheck(
                "gcd-consecutive-arms",
                g == 1,
                f"gcd({k_plus}, {q}) = {g}",
            )
        )
        w = k_plus.bit_length() - 1
        if k_plus == 1 << w:
            base = 1 << (w + 1)
            power = _is_power_of(q, base)
            rules.append(
                RuleCheck(
                    "two-power-order",
                    not power,
                    f"{q} {'is' if power else 'is not'} a power of {base}",
                )
            )
    ruled_out = any(r.ruled_out for r in rules)
    return FeasibilityReport(k_plus, k_minus, q, n, ruled_out, tuple(rules))


def _is_power_of(q: int, base: int) -> bool:
    while q > 1:
        if q % base:
            return False
        q //= base
    return q == 1


def instance_feasibility(k_plus: int, k_minus: int, q: int) -> FeasibilityReport:
    """All applicable rules for a survey instance: the group-order rules
    plus the shape bounds at n = (q-1)/(k_plus+k_minus) when n >= 2."""
    report = group_order_constraints(k_plus, k_minus, q)
    rules = list(report.rules)
    if report.n is not None and report.n >= 2:
        shape = QuasiCrossShape(k_plus, k_minus, report.n)
        dim = dimension_bound(shape)
        rules.append(
            RuleCheck("dimension", dim.ruled_out, f"{dim.value} vs n = {shape.n}")
        )
        arm = negative_arm_bound(shape)
        rules.append(
            RuleCheck(
                "negative-arm",
                arm.ruled_out,
                f"k_minus = {k_minus} vs n - 1 = {arm.limit}",
            )
        )
    ruled_out = any(r.ruled_out for r in rules)
    return FeasibilityReport(k_plus, k_minus, q, report.n, ruled_out, tuple(rules))
