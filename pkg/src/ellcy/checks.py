"""Self-contained consistency suite behind the `check` CLI command.

Each check recomputes a headline identity by two independent routes (or
verifies a structural invariant) and compares exactly.  The suite is a
plain list of named callables so tests can fault-inject a generator and
assert that at least one dual-route comparison catches the corruption.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import forms, geometry, invariants
from .geometry import CurveClass, Gamma19Class
from .series import PrecisionError, QSeries


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _sample_series() -> list[QSeries]:
    """Fixed sample series exercising offsets, exp_den and cancellation."""
    return [
        QSeries([1, 24, 324, 3200], -1, 3),
        QSeries([2, 0, -5, 7], 0, 4),
        QSeries([Fraction(1, 2), 3], 2, 4),
        forms.eisenstein(4, 6),
        forms.delta(5),
        forms.eta_power(12, 5),
    ]


def check_ring_laws() -> CheckResult:
    fs = _sample_series()
    for f in fs:
        for g in fs:
            if f * g != g * f:
                return CheckResult("ring-laws", False,
                                   "multiplication is not commutative")
            for h in fs:
                lhs = (f * g) * h
                rhs = f * (g * h)
                if lhs.truncate(min(lhs.prec, rhs.prec)) != \
                        rhs.truncate(min(lhs.prec, rhs.prec)):
                    return CheckResult("ring-laws", False,
                                       "multiplication is not associative")
                d1 = f * (g + h)
                d2 = f * g + f * h
                p = min(d1.prec, d2.prec)
                if d1.truncate(p) != d2.truncate(p):
                    return CheckResult("ring-laws", False,
                                       "distributivity fails")
    return CheckResult("ring-laws", True)


def check_slice_partition(prec: int) -> CheckResult:
    f = forms.inverse_delta(prec)
    for m in (2, 3, 5):
        parts = f.slice(m, 0)
        for k in range(1, m):
            parts = parts + f.slice(m, k)
        if parts != f:
            return CheckResult("slice-partition", False,
                               f"slices mod {m} do not reassemble 1/Delta")
        if f.slice(m, 1).slice(m, 1) != f.slice(m, 1):
            return CheckResult("slice-partition", False,
                               f"slice mod {m} is not idempotent")
    return CheckResult("slice-partition", True)


def check_precision_honesty() -> CheckResult:
    f = forms.eisenstein(4, 5)
    try:
        f.coeff_at(5)
    except PrecisionError:
        pass
    else:
        return CheckResult("precision-honesty", False,
                           "coefficient past the bound did not error")
    try:
        f.coeff_at(7)
    except PrecisionError:
        return CheckResult("precision-honesty", True)
    return CheckResult("precision-honesty", False,
                       "coefficient past the bound did not error")


def check_pairing_determinant() -> CheckResult:
    det = geometry._det(geometry.pairing_matrix())
    if det != -1:
        return CheckResult("pairing-determinant", False, f"determinant {det}")
    return CheckResult("pairing-determinant", True)


def check_pushforward_kernel() -> CheckResult:
    """Pushforward kills exactly the orthogonal complement of {C'', E''}."""
    # spanning set of the rank-8 orthogonal complement: b0 = 0 and
    # 3a + sum b_i = 0
    complement = [Gamma19Class(1, (0, -3, 0, 0, 0, 0, 0, 0, 0))]
    for i in range(1, 8):
        b = [0] * 9
        b[i], b[i + 1] = 1, -1
        complement.append(Gamma19Class(0, tuple(b)))
    for gamma in complement:
        if not geometry.pushforward(gamma).is_zero():
            return CheckResult("pushforward-kernel", False,
                               f"complement class {gamma} survives")
    section = geometry.pushforward(Gamma19Class(0, (1, 0, 0, 0, 0, 0, 0, 0, 0)))
    fibre = geometry.pushforward(Gamma19Class(3, (-1,) * 9))
    if section != CurveClass(c=1) or fibre != CurveClass(e=1):
        return CheckResult("pushforward-kernel", False,
                           "C0 or the fibre class maps incorrectly")
    return CheckResult("pushforward-kernel", True)


def check_nl_vanishing() -> CheckResult:
    for h in range(6):
        for d1 in range(-4, 3):
            for d2 in range(-2, 3):
                disc = geometry.nl_discriminant(
                    geometry.K3_POLARIZATION,
                    geometry.NLIndex(h, (d1, d2)))
                nl = invariants.nl_number(h, d1, d2)
                if disc < 0 and nl != 0:
                    return CheckResult(
                        "nl-vanishing", False,
                        f"NL({h};{d1},{d2}) = {nl} despite discriminant {disc}")
    return CheckResult("nl-vanishing", True)


def check_theta_is_e4(prec: int) -> CheckResult:
    if forms.theta_e8(prec) != forms.eisenstein(4, prec):
        return CheckResult("theta-e8-equals-e4", False,
                           f"mismatch within {prec} terms")
    return CheckResult("theta-e8-equals-e4", True)


def check_e10_sigma9(nterms: int) -> CheckResult:
    """E10 = E4*E6 against the weight-10 divisor-sum expansion.

    The coefficient of q^n must equal -264*sigma_9(n); this pins the E10
    stream against an oracle that never touches the series product.
    """
    e10 = forms.eisenstein(10, nterms)
    for n in range(1, nterms):
        expected = -264 * forms.sigma(9, n)
        if e10.coeff_at(n) != expected:
            return CheckResult("e10-sigma9", False,
                               f"coefficient {n}: {e10.coeff_at(n)} vs "
                               f"divisor sum {expected}")
    return CheckResult("e10-sigma9", True)


def check_eta_additivity(nterms: int) -> CheckResult:
    """eta^12 * eta^12 must reproduce eta^24 = Delta exactly."""
    twelve = forms.eta_power(12, nterms)
    lhs = twelve * twelve
    rhs = forms.eta_power(24, nterms)
    p = min(lhs.prec, rhs.prec)
    if lhs.truncate(p) != rhs.truncate(p):
        return CheckResult("eta-power-additivity", False,
                           "eta^12 squared differs from eta^24")
    inv = forms.inverse_delta(nterms)
    for e, c in inv.terms():
        if c.denominator != 1 or c < 0:
            return CheckResult("eta-power-additivity", False,
                               f"1/Delta coefficient at {e} is {c}")
    return CheckResult("eta-power-additivity", True)


def check_fiber_routes(prec: int) -> CheckResult:
    closed = invariants.f_fiber_closed(prec)
    direct = invariants.gv_fiber_direct(prec - 1)
    for n in range(prec):
        a = closed.coeff_at(n - 1)
        b = direct.get(geometry.CurveClass(e=n, f=1))
        if a != b:
            return CheckResult("fiber-dual-route", False,
                               f"n={n}: closed {a} vs NL sum {b}")
    return CheckResult("fiber-dual-route", True)


def check_section_routes(prec: int) -> CheckResult:
    closed = invariants.f_section_closed(prec)
    conv = invariants.f_section_convolution(prec)
    for n in range(prec):
        e = Fraction(2 * n - 1, 2)
        if closed.coeff_at(e) != conv.coeff_at(e):
            return CheckResult(
                "section-dual-route", False,
                f"n={n}: closed {closed.coeff_at(e)} vs "
                f"convolution {conv.coeff_at(e)}")
    return CheckResult("section-dual-route", True)


def check_multifiber_routes(m: int, nmax: int) -> CheckResult:
    name = f"multifiber-dual-route-m{m}"
    sliced = invariants.f_multifiber_slice(m, nmax)
    direct = invariants.f_multifiber_direct(m, nmax)
    for n in range(nmax + 1):
        a = sliced.coeff_at(m * (n - m))
        b = direct.get(geometry.CurveClass(e=n, f=m))
        if a != b:
            return CheckResult(name, False,
                               f"n={n}: slice {a} vs NL sum {b}")
    return CheckResult(name, True)


def check_integrality(prec: int) -> CheckResult:
    streams = {
        "fiber": [invariants.f_fiber_closed(prec).coeff_at(n - 1)
                  for n in range(prec)],
        "section": [invariants.f_section_closed(prec)
                    .coeff_at(Fraction(2 * n - 1, 2)) for n in range(prec)],
        "multifiber-2": list(
            invariants.f_multifiber_direct(2, prec).entries.values()),
        "yau-zaslow": list(forms.yau_zaslow(prec).r),
    }
    for name, values in streams.items():
        for v in values:
            if Fraction(v).denominator != 1:
                return CheckResult("gv-integrality", False,
                                   f"{name} produced non-integer {v}")
    return CheckResult("gv-integrality", True)


def check_euler_hodge() -> CheckResult:
    data = geometry.euler_characteristic(8)
    ok = (data.deg_K_delta == 1056 and data.cusps == 192
          and data.e_delta == -672 and data.e_X == -480
          and geometry.hodge_consistency())
    return CheckResult("euler-hodge", ok,
                       "" if ok else f"got {data}")


def run_checks(prec: int = 16) -> list[CheckResult]:
    """Run the whole suite at the given term count."""
    return [
        check_ring_laws(),
        check_slice_partition(prec),
        check_precision_honesty(),
        check_pairing_determinant(),
        check_pushforward_kernel(),
        check_nl_vanishing(),
        check_theta_is_e4(prec),
        check_e10_sigma9(max(prec, 21)),
        check_eta_additivity(prec),
        check_fiber_routes(prec),
        check_section_routes(prec),
        check_multifiber_routes(2, prec),
        check_multifiber_routes(3, max(5, (2 * prec) // 3)),
        check_integrality(prec),
        check_euler_hodge(),
    ]
