"""Verification suites: every stated identity as an explicit |lhs - rhs| <= tol check."""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from . import cascade, constants, hardy
from .constants import ConstantId
from .hardy import SequenceKind

__all__ = ["Check", "VerifyResult", "SUITES", "run_suite", "run_suites"]


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    lhs: float
    rhs: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return abs(self.lhs - self.rhs) <= self.tolerance

    def as_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


@dataclass(frozen=True)
class VerifyResult:
    suite: str
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _constants_suite() -> list[Check]:
    checks = []
    for cid in (ConstantId.gamma, ConstantId.delta):
        for m1, m2 in itertools.combinations(sorted(constants.METHODS[cid]), 2):
            checks.append(Check(
                f"constants.{cid.value}.{m1}~{m2}",
                f"{cid.value}: {m1} agrees with {m2}",
                constants.constant(cid, m1).value, constants.constant(cid, m2).value, 2e-11,
            ))
    checks.append(Check("constants.e.series", "e series vs math.e",
                        constants.best("e"), math.e, 1e-15))
    checks.append(Check("constants.delta_star", "delta* = -e Ei(1) = -5.151464...",
                        constants.best("delta_star"), -5.151464, 5e-7))
    g, d, e = constants.best("gamma"), constants.best("delta"), math.e
    checks.append(Check("constants.hardy.series", "sigma_1 = delta/e + gamma",
                        constants.sigma(1), d / e + g, 1e-11))
    checks.append(Check("constants.hardy.integral", "int_0^1 (1 - e^-t)/t dt = delta/e + gamma",
                        constants.hardy_integral().value, d / e + g, 1e-11))
    for m in range(1, 5):
        checks.append(Check(
            f"constants.extended_hardy.m{m}", f"{m}! sigma_{m} = delta_{m}/e + E[U^{m}]",
            math.factorial(m) * constants.sigma(m),
            constants.delta_m(m) / e + constants.gumbel_moment(m), 1e-10,
        ))
        checks.append(Check(
            f"constants.sigma.m{m}", f"sigma_{m}: series vs Gumbel integral",
            constants.sigma(m), constants.sigma(m, "gumbel_integral"), 1e-12,
        ))
        checks.append(Check(
            f"constants.gumbel_moment.m{m}", f"E[U^{m}] closed form vs quadrature",
            constants.gumbel_moment(m), constants.gumbel_moment(m, "quadrature"), 1e-10,
        ))
    checks.append(Check("constants.delta_conditional_mean", "delta_1 = -E[U | U <= 0] = delta",
                        constants.delta_m(1), d, 1e-10))
    return checks


def _defining_sum(kind: SequenceKind, m: int) -> int:
    sign = -1 if kind is SequenceKind.B_star else 1
    total = Fraction(0)
    for i in range(1, m + 1):
        if kind is SequenceKind.A:
            inner = Fraction(1)
        else:
            inner = sum(Fraction(sign**j, math.factorial(j)) for j in range(i))
        total += inner / i
    value = total * math.factorial(m)
    assert value.denominator == 1
    return int(value)


_PUBLISHED_PREFIXES = {
    SequenceKind.A: [0, 1, 3, 11, 50, 274],
    SequenceKind.B: [0, 1, 4, 17, 84, 485],
    SequenceKind.B_star: [0, 1, 2, 7, 30, 159],
}


def _hardy_suite() -> list[Check]:
    checks = []
    for kind, listed in _PUBLISHED_PREFIXES.items():
        for m, v in enumerate(listed):
            checks.append(Check(f"hardy.seq.{kind.value}.{m}", f"{kind.value}_{m} published value",
                                hardy.sequence(kind, m), v, 0))
        mismatches = sum(hardy.sequence(kind, m) != _defining_sum(kind, m) for m in range(31))
        checks.append(Check(f"hardy.seq.{kind.value}.recurrence",
                            f"{kind.value}: recurrence equals defining sum for m <= 30 (mismatches)",
                            mismatches, 0, 0))
    e, g = math.e, constants.best("gamma")
    d, ds = constants.best("delta"), constants.best("delta_star")
    known = {
        (-1, 1): (d + e * g) / e**2,
        (1, 1): -(ds + e * g) / e**2,
        (-1, 2): (d + e * g - e + 1) / e**2,
    }
    for (u, k), v in known.items():
        checks.append(Check(f"hardy.mu_known.u{u:+d}.k{k}", f"mu_({u},{k}) closed value",
                            hardy.mu_direct(u, k), v, 1e-11))
    for u in (-1, 1):
        for k in range(1, 11):
            checks.append(Check(f"hardy.mu.u{u:+d}.k{k}", f"mu_({u},{k}) direct vs closed",
                                hardy.mu_direct(u, k), hardy.mu_closed(u, k), 1e-9))
    worst = max(
        abs(e * e * k * k * hardy.mu_direct(-1, k) - 1.0) * k / 3.0 for k in range(50, 201)
    )
    checks.append(Check("hardy.asymptotic.mu_minus",
                        "max_k k |e^2 k^2 mu_(-1,k) - 1| / 3 over k in [50, 200]", worst, 0.0, 1.0))
    rows = {r.quantity: r for r in hardy.asymptotic_report(20, k_min=10) if r.k == 10}
    checks.append(Check("hardy.asymptotic.limit_B", "(e H_10 - B_10/10!)/e^2 vs mu_(-1,1)",
                        rows["limit_B"].value, rows["limit_B"].limit, 1e-9))
    checks.append(Check("hardy.asymptotic.limit_B_star", "(e H_10 - e^2 B*_10/10!)/e^2 vs -mu_(1,1)",
                        rows["limit_B_star"].value, rows["limit_B_star"].limit, 1e-8))
    return checks


def _cascade_suite() -> list[Check]:
    checks = []
    for n in range(1, 11):
        published = float(cascade.TABLE1[n])
        value = cascade.pi_eval(n, "gil_pelaez").value
        if n % 2 == 0:
            checks.append(Check(f"cascade.table1.n{n}", f"Pi_{n} = 1/2", value, 0.5, 1e-12))
            continue
        # six printed digits are truncated: the value lies in [printed, printed + 1e-6)
        checks.append(Check(f"cascade.table1.n{n}", f"Pi_{n} within the 6-digit truncation window",
                            value, published + 5e-7, 5e-7))
    for n, digits in cascade.TABLE2.items():
        checks.append(Check(f"cascade.table2.n{n}", f"Pi_{n} vs published 50-digit value",
                            cascade.pi_eval(n, "gil_pelaez").value, float(digits), 5e-12))
    d, g = constants.best("delta"), constants.best("gamma")
    for n, target, name in ((3, d, "delta"), (5, g, "gamma")):
        for method in ("closed", "gil_pelaez", "survival_integral"):
            checks.append(Check(f"cascade.identify.n{n}.{method}", f"Pi_{n} ({method}) = {name}",
                                cascade.pi_eval(n, method).value, target, 2e-11))
    p7_sigma = cascade.pi7_closed("zeta_sigma")
    p7_delta = cascade.pi7_closed("delta_m")
    p7_gp = cascade.pi_eval(7, "gil_pelaez").value
    checks.append(Check("cascade.pi7.sigma~delta_m", "Pi_7: zeta/sigma form vs delta_m form",
                        p7_sigma, p7_delta, 2e-11))
    checks.append(Check("cascade.pi7.sigma~gp", "Pi_7: zeta/sigma form vs Gil-Pelaez",
                        p7_sigma, p7_gp, 2e-11))
    checks.append(Check("cascade.pi7.survival~gp", "Pi_7: survival integral vs Gil-Pelaez",
                        cascade.pi_eval(7, "survival_integral").value, p7_gp, 2e-9))
    for order in (4, 6):
        for p in cascade.recursion_check(order, [0.3, 0.5, 2.0, 3.0, 5.0]):
            checks.append(Check(f"cascade.recursion.o{order}.y{p.y:g}",
                                f"S_Z{order} closed form vs integral recursion at y={p.y:g}",
                                p.lhs, p.rhs, 1e-6))
    grid = np.linspace(-8.0, 8.0, 65)
    oracles = {
        1: lambda z: -math.expm1(-math.exp(z)),
        2: lambda z: 1.0 / (1.0 + math.exp(-z)),
        4: lambda z: 1.0 - cascade.survival_z(4, z),
    }
    for n, oracle in oracles.items():
        worst = max(abs(cascade.cdf_z_gil_pelaez(n, z).value - oracle(z)) for z in grid)
        checks.append(Check(f"cascade.gp_vs_closed.n{n}",
                            f"sup |F_Z{n} (Gil-Pelaez) - closed CDF| on 65-point grid", worst, 0.0, 1e-8))
    for n, target in ((3, d), (2, 0.5)):
        est = cascade.pi_eval(n, "monte_carlo", samples=10**7, seed=42)
        checks.append(Check(f"cascade.mc.n{n}", f"Monte Carlo Pi_{n} (seed 42, 1e7) within 4 sigma",
                            est.value, target, est.error_bound))
    ks10 = cascade.clt_report(10, grid).ks_distance
    ks40 = cascade.clt_report(40, grid).ks_distance
    checks.append(Check("cascade.clt.n10", "KS distance to normal limit, n=10", ks10, 0.0, 0.05))
    checks.append(Check("cascade.clt.n40", "KS distance to normal limit, n=40", ks40, 0.0, 0.05))
    checks.append(Check("cascade.clt.decreasing", "KS(n=40) bounded by KS(n=10)", ks40, 0.0, ks10))
    return checks


SUITES = {
    "constants": _constants_suite,
    "hardy": _hardy_suite,
    "cascade": _cascade_suite,
}


def run_suite(name: str) -> VerifyResult:
    return VerifyResult(name, SUITES[name]())


def run_suites(name: str = "all") -> list[VerifyResult]:
    names = list(SUITES) if name == "all" else [name]
    return [run_suite(n) for n in names]
