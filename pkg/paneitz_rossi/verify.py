"""
The verification ledger behind ``verify-paper``.

Each check reproduces one closed-form or spectral claim about the Paneitz
blocks and records pass/fail plus a witness. Checks run independently: an
exception inside one becomes a failed entry, never an aborted run. The
lower-bound scan is exploratory and does not gate the exit code.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from typing import Any, Callable, Optional

from .arith.matrix import charpoly_exact, leading_minors
from .arith.rational import GaussianRational
from .arith.sturm import count_open_with_multiplicity
from .harmonic import (
    apply_box_b,
    apply_box_b_bar,
    apply_T,
    apply_Z1,
    apply_Z1bar,
    basis_Hpq,
    chain_basis,
    oracle_matrix,
)
from .rossi import (
    KNOWN_SHIFTED_DETERMINANTS,
    THREE_T2,
    band_coeff,
    build_balanced,
    build_symmetric,
    coeff_relation_check,
    det_shifted,
    eta_closed_form,
    eta_recurrence,
    known_shifted_determinant,
)
from .spectrum import (
    bound_scan,
    eigenvalues_numeric,
    face_agreement,
    interlacing_check,
    min_eigenvalue_vs_bracket,
    negative_count_exact,
    numeric_negative_count,
    parity_comparison,
)
from .types import SolverConfig, VerifyCheck, VerifyLedger
from .utils.format import log_debug
from .utils.serialize import poly_to_json

# Default caps; --k-max lowers every one of them.
DET_SHIFT_K = 6
MINOR_K = 12
ORACLE_K = 5
NEGATIVE_K = 30
HARMONIC_DEGREE = 8
CHAIN_K = 5
EMBEDDABLE_K = 30
INTERLACE_K = 15
COEFF_K = 20
SCAN_K = 20
BRACKET_K = 6

NEGATIVE_T = [Fraction(s, d) for d in (10, 3, 2) for s in (1, -1)] + [Fraction(9, 10), Fraction(-9, 10)]
INTERLACE_T = [0.3, 0.7]
SCAN_T = [Fraction(n, 20) for n in range(1, 20)]

CheckFn = Callable[[], tuple[bool, str, dict[str, Any]]]


def _cap(default: int, k_max: Optional[int]) -> int:
    return default if k_max is None else min(default, k_max)


def _run_check(name: str, fn: CheckFn, gating: bool = True) -> VerifyCheck:
    start = time.perf_counter()
    try:
        ok, detail, witness = fn()
    except Exception as exc:  # noqa: BLE001 - a crashing check is a failed check
        ok, detail, witness = False, f"{type(exc).__name__}: {exc}", {}
    elapsed = int((time.perf_counter() - start) * 1000)
    log_debug(f"{name}: {'pass' if ok else 'fail'} in {elapsed}ms")
    return VerifyCheck(
        name=name,
        status="pass" if ok else "fail",
        gating=gating,
        detail=detail,
        witness=witness,
        elapsed_ms=elapsed,
    )


# ─── Exact identities ────────────────────────────────────────────────────────


def check_shifted_determinants(k_cap: int) -> tuple[bool, str, dict[str, Any]]:
    for k in range(1, min(k_cap, max(KNOWN_SHIFTED_DETERMINANTS)) + 1):
        got = det_shifted(k, THREE_T2)
        want = known_shifted_determinant(k)
        if got != want:
            return False, f"det(P_{k} + 3t²I) differs from the published polynomial", {
                "k": k,
                "computed": poly_to_json(got),
                "published": poly_to_json(want),
                "difference": poly_to_json(got - want),
            }
    return True, f"k = 1..{k_cap}", {}


def check_minor_closed_form(k_cap: int) -> tuple[bool, str, dict[str, Any]]:
    for k in range(1, k_cap + 1):
        minors = leading_minors(build_balanced(k))
        for l, minor in enumerate(minors, start=1):
            want = eta_closed_form(k, l)
            if minor != want or eta_recurrence(k, l) != want:
                return False, f"η_{k},{l} mismatch", {
                    "k": k,
                    "l": l,
                    "minor": poly_to_json(minor),
                    "closed_form": poly_to_json(want),
                    "recurrence": poly_to_json(eta_recurrence(k, l)),
                }
    return True, f"1 ≤ l ≤ k ≤ {k_cap}", {}


def check_oracle(k_cap: int) -> tuple[bool, str, dict[str, Any]]:
    for k in range(1, k_cap + 1):
        oracle = oracle_matrix(k)
        closed = build_balanced(k)
        if oracle != closed:
            bad = [
                (i + 1, j + 1)
                for i in range(k)
                for j in range(k)
                if oracle[i, j] != closed[i, j]
            ]
            return False, f"k = {k}: {len(bad)} entries differ", {"k": k, "entries": bad}
    return True, f"k = 1..{k_cap}", {}


def check_harmonic_laws(degree: int) -> tuple[bool, str, dict[str, Any]]:
    i = GaussianRational.i()
    for total in range(degree + 1):
        for p in range(total + 1):
            q = total - p
            basis = basis_Hpq(p, q)
            if len(basis) != p + q + 1:
                return False, f"dim ℋ_{{{p},{q}}} = {len(basis)}", {"p": p, "q": q}
            for f in basis:
                if apply_box_b(f) != f.scale((p + 1) * q):
                    return False, f"□_b eigenvalue fails on ℋ_{{{p},{q}}}", {"p": p, "q": q}
                if apply_box_b_bar(f) != f.scale(p * (q + 1)):
                    return False, f"□̄_b eigenvalue fails on ℋ_{{{p},{q}}}", {"p": p, "q": q}
                if apply_box_b_bar(f) - apply_box_b(f) != apply_T(f).scale(-i):
                    return False, f"commutator fails on ℋ_{{{p},{q}}}", {"p": p, "q": q}
                for op, shift in ((apply_Z1, (-1, 1)), (apply_Z1bar, (1, -1))):
                    g = op(f)
                    if g.is_zero():
                        continue
                    if g.bidegree != (p + shift[0], q + shift[1]) or not g.is_harmonic():
                        return False, f"{op.__name__} leaves harmonics on ℋ_{{{p},{q}}}", {"p": p, "q": q}
    return True, f"p + q ≤ {degree}", {}


def check_chain(k_cap: int) -> tuple[bool, str, dict[str, Any]]:
    for k in range(1, k_cap + 1):
        chain = chain_basis(k)
        if not chain.is_orthogonal():
            return False, f"k = {k}: chain is not orthogonal", {"k": k}
        want = [band_coeff(k, 2 * i + 1) * band_coeff(k, 2 * i + 2) for i in range(1, k)]
        got = chain.norm_ratios()
        if got != want:
            return False, f"k = {k}: norm ratios differ", {"k": k, "got": [str(x) for x in got], "want": want}
        lower = [band_coeff(k, 2 * i - 1) * band_coeff(k, 2 * i) for i in range(2, k + 1)]
        if chain.lowering_ratios() != lower:
            return False, f"k = {k}: Z₁̄² ladder differs", {"k": k}
    return True, f"k = 1..{k_cap}", {}


def check_embeddable_limit(k_cap: int) -> tuple[bool, str, dict[str, Any]]:
    for k in range(1, k_cap + 1):
        rows = build_balanced(k).evaluate(0)
        for r in range(k):
            for c in range(k):
                value = rows[r][c]
                if r == c:
                    want = band_coeff(k, 2 * r + 2) * band_coeff(k, 2 * r + 3)
                    if value != want or value < 0:
                        return False, f"k = {k}: diagonal entry {r + 1} is {value}", {"k": k, "i": r + 1}
                elif value != 0:
                    return False, f"k = {k}: off-diagonal ({r + 1},{c + 1}) is {value}", {"k": k}
        sym = build_symmetric(k).evaluate(0.0)
        for r in range(k):
            for c in range(k):
                want = rows[r][c] if r == c else 0
                if sym[r, c] != want:
                    return False, f"k = {k}: symmetric face entry ({r + 1},{c + 1}) is {sym[r, c]}", {
                        "k": k,
                        "face": "symmetric",
                    }
    return True, f"k = 1..{k_cap}", {}


def check_coefficient_identity(k_cap: int) -> tuple[bool, str, dict[str, Any]]:
    for k in range(1, k_cap + 1):
        for l in range(-10, 2 * k + 11):
            if not coeff_relation_check(k, l):
                return False, f"c_{k}({l}) identity fails", {"k": k, "l": l}
    return True, f"k ≤ {k_cap}, −10 ≤ l ≤ 2k+10", {}


# ─── Spectral checks ─────────────────────────────────────────────────────────


def check_negative_count(k_cap: int, config: SolverConfig) -> tuple[bool, str, dict[str, Any]]:
    conclusive = 0
    inconclusive = 0
    for k in range(1, k_cap + 1):
        for t in NEGATIVE_T:
            cert = negative_count_exact(k, t)
            if cert.count != 1:
                return False, f"k = {k}, t = {t}: {cert.count} negative eigenvalues", {
                    "k": k,
                    "t": str(t),
                    "count": cert.count,
                    "minor_signs": cert.minor_signs,
                }
            count, ok = numeric_negative_count(eigenvalues_numeric(k, t, config), config.eig_rel_tol)
            if not ok:
                inconclusive += 1
                continue
            conclusive += 1
            if count != 1:
                return False, f"k = {k}, t = {t}: numeric count {count}", {"k": k, "t": str(t)}
    if conclusive == 0:
        return False, "no numerically conclusive case", {}
    detail = f"k ≤ {k_cap}, {len(NEGATIVE_T)} values of t; numeric agreement in {conclusive} cases"
    return True, detail, {"conclusive": conclusive, "inconclusive": inconclusive}


def check_minor_vs_sturm(k_cap: int) -> tuple[bool, str, dict[str, Any]]:
    for k in range(1, k_cap + 1):
        for t in (Fraction(1, 2), Fraction(-1, 3)):
            cert = negative_count_exact(k, t)
            char = charpoly_exact(build_balanced(k).evaluate(t))
            sturm = count_open_with_multiplicity(char, -math.inf, 0)
            if sturm != cert.count:
                return False, f"k = {k}, t = {t}: minors {cert.count}, Sturm {sturm}", {"k": k}
    return True, f"k = 1..{k_cap}", {}


def check_bracket_agreement(k_cap: int, config: SolverConfig) -> tuple[bool, str, dict[str, Any]]:
    for k in range(1, k_cap + 1):
        for t in (Fraction(1, 2), Fraction(9, 10)):
            result = min_eigenvalue_vs_bracket(k, t, config)
            if not result["agree"]:
                return False, f"k = {k}, t = {t}: numeric minimum outside the Sturm bracket", {
                    "k": k,
                    "t": str(t),
                    "numeric": result["numeric"],
                    "bracket": result["bracket"],
                }
    return True, f"k = 1..{k_cap}", {}


def check_faces(k_cap: int, config: SolverConfig) -> tuple[bool, str, dict[str, Any]]:
    for k in range(1, k_cap + 1):
        cmp = face_agreement(k, 0.6, config)
        if not cmp.agree:
            return False, (
                f"k = {k}: faces differ by {cmp.max_rel_diff:.2e}, asymmetry {cmp.max_asymmetry:.2e}"
            ), {"k": k}
    return True, f"k = 1..{k_cap} at t = 0.6", {}


def check_interlacing(k_cap: int, config: SolverConfig) -> tuple[bool, str, dict[str, Any]]:
    for k in range(2, k_cap + 1):
        for t in INTERLACE_T:
            for rec in interlacing_check(k, t, config):
                if not rec.passed:
                    return False, f"k = {k}, t = {t}, l = {rec.l}: violation {rec.max_violation:.2e}", {
                        "k": k,
                        "t": t,
                        "l": rec.l,
                    }
    return True, f"k ≤ {k_cap}, t ∈ {INTERLACE_T}", {}


def check_parity(k_cap: int, config: SolverConfig) -> tuple[bool, str, dict[str, Any]]:
    worst = 0.0
    for k in range(1, k_cap + 1):
        worst = max(worst, parity_comparison(k, 0.5, config).max_rel_diff)
    return worst <= config.eig_rel_tol, f"max relative difference {worst:.2e}", {"max_rel_diff": worst}


def check_bound_scan(k_cap: int, config: SolverConfig, jobs: int) -> tuple[bool, str, dict[str, Any]]:
    rows = bound_scan(k_cap, SCAN_T, jobs=jobs, config=config)
    violations = [{"k": r.k, "t": r.t, "margin": r.margin} for r in rows if not r.passed]
    detail = f"{len(rows) - len(violations)} of {len(rows)} cells satisfy min λ ≥ −3t²"
    return not violations, detail, {"violations": violations}


# ─── Ledger ──────────────────────────────────────────────────────────────────


def run_verification(
    k_max: Optional[int] = None,
    config: Optional[SolverConfig] = None,
    jobs: int = 1,
) -> VerifyLedger:
    """Run every check; ``k_max`` lowers each block-size cap."""
    cfg = config if config is not None else SolverConfig()
    degree = HARMONIC_DEGREE if k_max is None else min(HARMONIC_DEGREE, 2 * k_max)
    plan: list[tuple[str, CheckFn, bool]] = [
        ("coefficient identity", lambda: check_coefficient_identity(_cap(COEFF_K, k_max)), True),
        ("shifted determinants det(P_k + 3t²I)", lambda: check_shifted_determinants(_cap(DET_SHIFT_K, k_max)), True),
        ("leading minors η_k,l", lambda: check_minor_closed_form(_cap(MINOR_K, k_max)), True),
        ("embeddable limit t = 0", lambda: check_embeddable_limit(_cap(EMBEDDABLE_K, k_max)), True),
        ("harmonic laws on ℋ_p,q", lambda: check_harmonic_laws(degree), True),
        ("chain orthogonality and norms", lambda: check_chain(_cap(CHAIN_K, k_max)), True),
        ("oracle equals closed form", lambda: check_oracle(_cap(ORACLE_K, k_max)), True),
        ("exactly one negative eigenvalue", lambda: check_negative_count(_cap(NEGATIVE_K, k_max), cfg), True),
        ("minor signs agree with Sturm", lambda: check_minor_vs_sturm(_cap(BRACKET_K, k_max)), True),
        ("numeric minimum inside Sturm bracket", lambda: check_bracket_agreement(_cap(BRACKET_K, k_max), cfg), True),
        ("symmetric and balanced faces agree", lambda: check_faces(_cap(BRACKET_K, k_max), cfg), True),
        ("Cauchy interlacing", lambda: check_interlacing(_cap(INTERLACE_K, k_max), cfg), True),
        ("spectrum even in t", lambda: check_parity(_cap(BRACKET_K, k_max), cfg), False),
        ("lower bound −3t²", lambda: check_bound_scan(_cap(SCAN_K, k_max), cfg, jobs), False),
    ]
    return VerifyLedger(checks=[_run_check(name, fn, gating) for name, fn, gating in plan])
