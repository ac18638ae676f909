"""Exact verification of the subset-sum identity family.

Every identity here relates a factorial Grothendieck polynomial to a sum
over k-subsets S of [n] of restricted polynomials divided by the cross
product of (x_i - x_j) over i in S, j outside.  Verification clears all
denominators by multiplying both sides with the full Vandermonde product
V = prod_{i<j}(x_i - x_j), split per subset as

    V = sign(S) * cofactor(S) * cross(S)

with cofactor(S) the product of the two internal Vandermonde products of S
and its complement; the sign depends on the orientation of the cross
product ((x_i - x_j) for the Gustafson-Milne family, (x_j - x_i) for the
Feher-Nemethi-Rimanyi family).  Both sides then live in the polynomial
ring and are compared structurally; no rational-function arithmetic exists
anywhere in the package.

An optional randomized pre-check evaluates both cleared sides at seeded
random rational points first; a disagreement is a proof of failure and is
reported with the witness point, while agreement never replaces the
canonical comparison unless sampling-only mode was requested explicitly.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .grothendieck import g_tableau, restrict
from .poly import (
    Polynomial,
    RationalPoint,
    VariableUniverse,
    determinant,
    poly_prod,
    poly_sum,
    random_rational_point,
)
from .tableaux import Partition

_DEFAULT_FAST_TRIALS = 20


class PreconditionViolatedError(ValueError):
    """Parameters outside the asserted range of the identity."""


IDENTITY_TAGS = (
    "gm_type",
    "fnr_type",
    "vandermonde_lemma",
    "e_beta_recurrence",
    "good_general",
    "louck_general",
    "good_k_general",
    "classical_gm",
    "classical_good",
    "classical_louck",
    "classical_fnr",
)


# --------------------------------------------------------------------------
# subset bookkeeping and denominator clearing


@dataclass(frozen=True)
class SubsetTerm:
    """One subset's share of a cleared identity."""

    S: tuple[int, ...]
    complement: tuple[int, ...]
    sign: int
    cofactor: Polynomial


def _complement(S: Sequence[int], n: int) -> tuple[int, ...]:
    s = set(S)
    return tuple(j for j in range(1, n + 1) if j not in s)


def clear_denominator_gm(
    S: Sequence[int], n: int, k: int, universe: VariableUniverse
) -> tuple[int, Polynomial]:
    """Sign and cofactor with V = sign * cofactor * prod_{i in S, j notin S}(x_i - x_j).

    The sign is (-1)^{binom(k+1,2) + sum(S)} (a negated exponent has the
    same parity).
    """
    S = tuple(sorted(S))
    if len(S) != k:
        raise ValueError("|S| must equal k")
    sign = -1 if (k * (k + 1) // 2 + sum(S)) % 2 else 1
    cof = universe.vandermonde(S) * universe.vandermonde(_complement(S, n))
    return sign, cof


def clear_denominator_fnr(
    S: Sequence[int], n: int, k: int, universe: VariableUniverse
) -> tuple[int, Polynomial]:
    """Sign and cofactor with V = sign * cofactor * prod_{i in S, j notin S}(x_j - x_i);
    the sign is (-1)^{n k - binom(k,2) + sum(S)}."""
    S = tuple(sorted(S))
    if len(S) != k:
        raise ValueError("|S| must equal k")
    sign = -1 if (n * k + k * (k - 1) // 2 + sum(S)) % 2 else 1
    cof = universe.vandermonde(S) * universe.vandermonde(_complement(S, n))
    return sign, cof


def cross_product(
    S: Sequence[int], n: int, universe: VariableUniverse, *, reversed_sign: bool = False
) -> Polynomial:
    """prod over i in S, j in complement of (x_i - x_j), or (x_j - x_i) when reversed."""
    out = universe.one()
    for i in sorted(S):
        for j in _complement(S, n):
            d = universe.x(i) - universe.x(j)
            out = out * (-d if reversed_sign else d)
    return out


def subset_terms(
    n: int, k: int, universe: VariableUniverse, *, orientation: str = "gm"
) -> list[SubsetTerm]:
    clear = clear_denominator_gm if orientation == "gm" else clear_denominator_fnr
    out = []
    for S in combinations(range(1, n + 1), k):
        sign, cof = clear(S, n, k, universe)
        out.append(SubsetTerm(S=S, complement=_complement(S, n), sign=sign, cofactor=cof))
    return out


def _pmap(fn, items):
    """Ordered map honoring the GROTHENDIECK_THREADS cap (default 1)."""
    items = list(items)
    threads = int(os.environ.get("GROTHENDIECK_THREADS", "1") or "1")
    if threads <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: dict
    lhs: Polynomial
    rhs: Polynomial
    verdict: str
    witness: RationalPoint | None
    elapsed: float
    canonical: bool = True

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "verdict": self.verdict,
            "elapsed_ms": int(self.elapsed * 1000),
            "lhs_terms": self.lhs.num_terms,
            "rhs_terms": self.rhs.num_terms,
            "witness": self.witness.to_json_obj() if self.witness else None,
        }


def fast_check(
    lhs: Polynomial,
    rhs: Polynomial,
    universe: VariableUniverse,
    trials: int,
    seed: int = 0,
) -> RationalPoint | None:
    """Evaluate both sides at seeded random rational points with distinct x
    coordinates; return the first witness of disagreement, else None."""
    rng = random.Random(seed)
    for _ in range(trials):
        pt = random_rational_point(universe, rng, distinct_x=True)
        if lhs.eval_rational(pt) != rhs.eval_rational(pt):
            return pt
    return None


def _finish(identity, params, universe, lhs, rhs, started, opts) -> IdentityReport:
    fast_trials = opts.get("fast_trials", 0)
    fast_only = opts.get("fast_only", False)
    seed = opts.get("seed", 0)
    if fast_only and fast_trials <= 0:
        fast_trials = _DEFAULT_FAST_TRIALS
    witness = None
    canonical = True
    if fast_trials > 0:
        witness = fast_check(lhs, rhs, universe, fast_trials, seed)
    if witness is not None:
        verdict = "fail"
        canonical = False
    elif fast_only:
        verdict = "pass"
        canonical = False
    else:
        verdict = "pass" if lhs == rhs else "fail"
    return IdentityReport(
        identity=identity,
        params=params,
        lhs=lhs,
        rhs=rhs,
        verdict=verdict,
        witness=witness,
        elapsed=time.perf_counter() - started,
        canonical=canonical,
    )


def _as_lam(lam) -> tuple[int, ...]:
    lam = tuple(int(v) for v in lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
        raise PreconditionViolatedError(
            f"{lam} is not a weakly decreasing nonnegative sequence"
        )
    return lam


# --------------------------------------------------------------------------
# Gustafson-Milne family


def _one_plus_bx(universe: VariableUniverse, i: int) -> Polynomial:
    return universe.one() + universe.beta() * universe.x(i)


def gm_cleared_term(
    lam: Sequence[int],
    n: int,
    S: Sequence[int],
    universe: VariableUniverse,
    builder=g_tableau,
) -> Polynomial:
    """sign(S) * cofactor(S) * G_lam(x_S|y) * prod_{j notin S}(1+b x_j)^k."""
    k = len(lam)
    sign, cof = clear_denominator_gm(S, n, k, universe)
    g_s = restrict(builder, Partition(lam), S, universe)
    tail = poly_prod(
        universe, (_one_plus_bx(universe, j) ** k for j in _complement(S, n))
    )
    return g_s * tail * cof * sign


def _gm_sides(lam, n, builder):
    k = len(lam)
    if not 0 <= k <= n or n < 1:
        raise PreconditionViolatedError(f"need 0 <= k <= n, got k={k}, n={n}")
    lam1 = lam[0] if lam else 0
    U = VariableUniverse(n, max(lam1 + k - 1, 0))
    V = U.vandermonde(range(1, n + 1))
    if k and lam[-1] - n + k < 0:
        lhs = U.zero()
    else:
        shifted = tuple(part - n + k for part in lam)
        lhs = builder(shifted, n, universe=U) * V
    pw = {j: _one_plus_bx(U, j) ** k for j in range(1, n + 1)}

    def term(S):
        sign, cof = clear_denominator_gm(S, n, k, U)
        g_s = restrict(builder, Partition(lam), S, U)
        tail = poly_prod(U, (pw[j] for j in _complement(S, n)))
        return g_s * tail * cof * sign

    rhs = poly_sum(U, _pmap(term, combinations(range(1, n + 1), k)))
    return U, lhs, rhs


def verify_gm_type(lam: Sequence[int], n: int, *, builder=g_tableau, **opts) -> IdentityReport:
    """G_{(lam_i - n + k)}(x|y) = sum_S G_lam(x_S|y) prod_{j notin S}(1+b x_j)^k / cross(S).

    The left side is taken to be 0 when lam_k - n + k < 0 (the shifted shape
    is not a partition).  NOTE: with that convention the identity genuinely
    fails for beta != 0 -- the cleared right side equals a nonzero multiple
    of a beta power (already at lam=(0), n=2, k=1 it is -b*V) -- so such
    parameter sets report verdict "fail"; their beta=0 specialization, the
    classical statement, does pass.  See verify_classical.
    """
    started = time.perf_counter()
    lam = _as_lam(lam)
    U, lhs, rhs = _gm_sides(lam, n, builder)
    params = {"lam": list(lam), "n": n, "k": len(lam)}
    return _finish("gm_type", params, U, lhs, rhs, started, opts)


def verify_good_general(n: int, *, builder=g_tableau, **opts) -> IdentityReport:
    """1 = sum_i [x_i|y]^{n-1} prod_{j != i} (1+b x_j)/(x_i - x_j), cleared by V."""
    started = time.perf_counter()
    if n < 1:
        raise PreconditionViolatedError("n must be positive")
    U = VariableUniverse(n, max(n - 1, 0))
    lhs = U.vandermonde(range(1, n + 1))

    def term(S):
        (i,) = S
        sign, cof = clear_denominator_gm(S, n, 1, U)
        tail = poly_prod(U, (_one_plus_bx(U, j) for j in _complement(S, n)))
        return U.bracket_pow(i, n - 1) * tail * cof * sign

    rhs = poly_sum(U, _pmap(term, combinations(range(1, n + 1), 1)))
    return _finish("good_general", {"n": n}, U, lhs, rhs, started, opts)


def verify_louck_general(m: int, n: int, *, builder=g_tableau, **opts) -> IdentityReport:
    """h_{m-n+1}(x|y) = sum_i [x_i|y]^m prod_{j != i} (1+b x_j)/(x_i - x_j).

    The complete-homogeneous left side is realized as the single-row
    polynomial G_{(m-n+1)}(x|y); requires m >= n-1.
    """
    started = time.perf_counter()
    if n < 1 or m < n - 1:
        raise PreconditionViolatedError(f"need m >= n-1 >= 0, got m={m}, n={n}")
    U = VariableUniverse(n, m)
    V = U.vandermonde(range(1, n + 1))
    lhs = builder((m - n + 1,), n, universe=U) * V

    def term(S):
        (i,) = S
        sign, cof = clear_denominator_gm(S, n, 1, U)
        tail = poly_prod(U, (_one_plus_bx(U, j) for j in _complement(S, n)))
        return U.bracket_pow(i, m) * tail * cof * sign

    rhs = poly_sum(U, _pmap(term, combinations(range(1, n + 1), 1)))
    return _finish("louck_general", {"m": m, "n": n}, U, lhs, rhs, started, opts)


# --------------------------------------------------------------------------
# Feher-Nemethi-Rimanyi family


def fnr_cleared_term(
    lam: Sequence[int],
    m: int,
    n: int,
    S: Sequence[int],
    universe: VariableUniverse,
    builder=g_tableau,
) -> Polynomial:
    """sign(S) * cofactor(S) * G_lam(x_S|y) * prod_{i in S}(1+b x_i)^{n-k}
    * prod_{j notin S}[x_j|y]^m (cross product oriented (x_j - x_i))."""
    k = len(lam)
    sign, cof = clear_denominator_fnr(S, n, k, universe)
    g_s = restrict(builder, Partition(lam), S, universe)
    head = poly_prod(universe, (_one_plus_bx(universe, i) ** (n - k) for i in S))
    tail = poly_prod(universe, (universe.bracket_pow(j, m) for j in _complement(S, n)))
    return (g_s * head * cof * sign) * tail


def _fnr_sides(lam, m, n, builder):
    k = len(lam)
    if not 0 <= k <= n or n < 1:
        raise PreconditionViolatedError(f"need 0 <= k <= n, got k={k}, n={n}")
    if m < k:
        raise PreconditionViolatedError(f"need m >= k, got m={m}, k={k}")
    if lam and lam[0] > m - k:
        raise PreconditionViolatedError(
            f"identity asserted only for lam_1 <= m-k (got lam_1={lam[0]}, m-k={m - k})"
        )
    U = VariableUniverse(n, max(m + n - k - 1, 0))
    V = U.vandermonde(range(1, n + 1))
    mu = (m - k,) * (n - k) + tuple(lam)
    lhs = builder(mu, n, universe=U) * V
    powers = {i: _one_plus_bx(U, i) ** (n - k) for i in range(1, n + 1)}
    # brackets appear only for complement members, which exist only when k < n
    brackets = {j: U.bracket_pow(j, m) for j in range(1, n + 1)} if k < n else {}

    def term(S):
        sign, cof = clear_denominator_fnr(S, n, k, U)
        g_s = restrict(builder, Partition(lam), S, U)
        head = poly_prod(U, (powers[i] for i in S))
        tail = poly_prod(U, (brackets[j] for j in _complement(S, n)))
        # the bracket product is by far the largest factor; multiply it last
        return (g_s * head * cof * sign) * tail

    rhs = poly_sum(U, _pmap(term, combinations(range(1, n + 1), k)))
    return U, lhs, rhs


def verify_fnr_type(
    lam: Sequence[int], m: int, n: int, *, builder=g_tableau, **opts
) -> IdentityReport:
    """G_mu(x|y) = sum_S G_lam(x_S|y) prod_{i in S}(1+b x_i)^{n-k}
    prod_{j notin S}[x_j|y]^m / prod(x_j - x_i), with
    mu = (m-k,...,m-k, lam_1..lam_k) and lam_1 <= m-k required."""
    started = time.perf_counter()
    lam = _as_lam(lam)
    U, lhs, rhs = _fnr_sides(lam, m, n, builder)
    params = {"lam": list(lam), "m": m, "n": n, "k": len(lam)}
    return _finish("fnr_type", params, U, lhs, rhs, started, opts)


def verify_good_k_general(n: int, k: int, *, builder=g_tableau, **opts) -> IdentityReport:
    """1 = sum_S prod_{i in S}(1+b x_i)^{n-k} prod_{j notin S}[x_j|y]^k / prod(x_j - x_i)."""
    started = time.perf_counter()
    if not 0 <= k <= n or n < 1:
        raise PreconditionViolatedError(f"need 0 <= k <= n, got k={k}, n={n}")
    U = VariableUniverse(n, k)
    lhs = U.vandermonde(range(1, n + 1))
    powers = {i: _one_plus_bx(U, i) ** (n - k) for i in range(1, n + 1)}
    brackets = {j: U.bracket_pow(j, k) for j in range(1, n + 1)}

    def term(S):
        sign, cof = clear_denominator_fnr(S, n, k, U)
        head = poly_prod(U, (powers[i] for i in S))
        tail = poly_prod(U, (brackets[j] for j in _complement(S, n)))
        return head * tail * cof * sign

    rhs = poly_sum(U, _pmap(term, combinations(range(1, n + 1), k)))
    return _finish("good_k_general", {"n": n, "k": k}, U, lhs, rhs, started, opts)


# --------------------------------------------------------------------------
# determinant lemma and the deformed elementary symmetric recurrence


def verify_vandermonde_lemma(n: int, **opts) -> IdentityReport:
    """det([x_r|y]^{n-c} (1+b x_r)^{c-1})_{r,c} = prod_{i<j}(x_i - x_j)."""
    started = time.perf_counter()
    if n < 1:
        raise PreconditionViolatedError("n must be positive")
    U = VariableUniverse(n, max(n - 1, 0))
    rows = []
    for r in range(1, n + 1):
        opb = _one_plus_bx(U, r)
        rows.append([U.bracket_pow(r, n - c) * opb ** (c - 1) for c in range(1, n + 1)])
    lhs = determinant(rows)
    rhs = U.vandermonde(range(1, n + 1))
    return _finish("vandermonde_lemma", {"n": n}, U, lhs, rhs, started, opts)


def e_beta(k: int, n: int, universe: VariableUniverse | None = None) -> Polynomial:
    """Deformed elementary symmetric polynomial
    sum over k-subsets S of [n] of y_S * prod_{j notin S}(1 + b y_j);
    zero unless 0 <= k <= n, and e_k(y) at beta = 0."""
    U = universe if universe is not None else VariableUniverse(0, n)
    if n > U.n_y:
        raise ValueError(f"need n_y >= {n}")
    if k < 0 or k > n:
        return U.zero()
    terms = []
    for S in combinations(range(1, n + 1), k):
        inside = poly_prod(U, (U.y(j) for j in S))
        outside = poly_prod(
            U, (U.one() + U.beta() * U.y(j) for j in _complement(S, n))
        )
        terms.append(inside * outside)
    return poly_sum(U, terms)


def verify_e_beta_recurrence(k: int, n: int, **opts) -> IdentityReport:
    """E_k(Y_n) = (1 + b y_n) E_k(Y_{n-1}) + y_n E_{k-1}(Y_{n-1})."""
    started = time.perf_counter()
    if n < 1:
        raise PreconditionViolatedError("n must be positive")
    U = VariableUniverse(0, n)
    lhs = e_beta(k, n, U)
    rhs = (U.one() + U.beta() * U.y(n)) * e_beta(k, n - 1, U) + U.y(n) * e_beta(
        k - 1, n - 1, U
    )
    return _finish("e_beta_recurrence", {"k": k, "n": n}, U, lhs, rhs, started, opts)


# --------------------------------------------------------------------------
# classical specializations


def _classicalize(U: VariableUniverse, p: Polynomial, *, kill_y: bool = True) -> Polynomial:
    bindings: dict[str, int] = {"b": 0}
    if kill_y:
        bindings.update({f"y{j}": 0 for j in range(1, U.n_y + 1)})
    return p.substitute(bindings)


def verify_classical(which: str, params: dict, *, builder=g_tableau, **opts) -> IdentityReport:
    """beta = 0 (and y = 0) instances of the four classical identities.

    classical_gm / classical_fnr / classical_louck substitute into the
    cleared sides of the corresponding general verifier; classical_good
    additionally checks the reciprocal form 1 = sum_i prod_{j != i}
    (1 - x_i/x_j)^{-1} at seeded random rational points with distinct
    nonzero coordinates.
    """
    started = time.perf_counter()
    if which == "classical_gm":
        lam = _as_lam(params["lam"])
        n = params["n"]
        U, lhs, rhs = _gm_sides(lam, n, builder)
        lhs, rhs = _classicalize(U, lhs), _classicalize(U, rhs)
        out_params = {"lam": list(lam), "n": n, "k": len(lam)}
        return _finish(which, out_params, U, lhs, rhs, started, opts)
    if which == "classical_fnr":
        lam = _as_lam(params["lam"])
        m, n = params["m"], params["n"]
        U, lhs, rhs = _fnr_sides(lam, m, n, builder)
        lhs, rhs = _classicalize(U, lhs), _classicalize(U, rhs)
        out_params = {"lam": list(lam), "m": m, "n": n, "k": len(lam)}
        return _finish(which, out_params, U, lhs, rhs, started, opts)
    if which == "classical_louck":
        m, n = params["m"], params["n"]
        rep = verify_louck_general(m, n, builder=builder)
        U = rep.lhs.universe
        lhs, rhs = _classicalize(U, rep.lhs), _classicalize(U, rep.rhs)
        return _finish(which, {"m": m, "n": n}, U, lhs, rhs, started, opts)
    if which == "classical_good":
        n = params["n"]
        trials = params.get("trials", 100)
        seed = params.get("seed", opts.get("seed", 0))
        rep = verify_good_general(n, builder=builder)
        U = rep.lhs.universe
        lhs, rhs = _classicalize(U, rep.lhs), _classicalize(U, rep.rhs)
        witness = _good_reciprocal_witness(n, trials, seed)
        report = _finish(
            which, {"n": n, "trials": trials, "seed": seed}, U, lhs, rhs, started, opts
        )
        if witness is not None and report.verdict == "pass":
            report = IdentityReport(
                identity=which,
                params=report.params,
                lhs=lhs,
                rhs=rhs,
                verdict="fail",
                witness=witness,
                elapsed=time.perf_counter() - started,
                canonical=report.canonical,
            )
        return report
    raise PreconditionViolatedError(f"unknown classical identity {which!r}")


def _good_reciprocal_witness(n: int, trials: int, seed: int) -> RationalPoint | None:
    """Check 1 = sum_i prod_{j != i} 1/(1 - x_i/x_j) at random rational points."""
    rng = random.Random(seed)
    U = VariableUniverse(n, 0)
    for _ in range(trials):
        while True:
            pt = random_rational_point(U, rng, distinct_x=True)
            if all(v != 0 for v in pt.xs):
                break
        total = Fraction(0)
        for i in range(n):
            prod = Fraction(1)
            for j in range(n):
                if j != i:
                    prod /= 1 - Fraction(pt.xs[i], pt.xs[j])
            total += prod
        if total != 1:
            return pt
    return None


# --------------------------------------------------------------------------
# the default verification grid


def _weakly_decreasing(k: int, maxpart: int):
    return combinations_with_replacement(range(maxpart, -1, -1), k)


def grid_vandermonde(max_n: int = 5):
    return [("vandermonde_lemma", {"n": n}) for n in range(1, max_n + 1)]


def grid_gm_type(ns=(2, 3, 4), max_part: int = 3):
    cases = []
    for n in ns:
        for k in range(1, n + 1):
            for lam in _weakly_decreasing(k, max_part):
                cases.append(("gm_type", {"lam": list(lam), "n": n}))
    return cases


def grid_fnr_type(ns=(2, 3, 4), max_m: int = 4):
    cases = []
    for n in ns:
        for k in range(1, n + 1):
            for m in range(k, max_m + 1):
                for lam in _weakly_decreasing(k, m - k):
                    cases.append(("fnr_type", {"lam": list(lam), "m": m, "n": n}))
    return cases


def grid_corollaries():
    cases = []
    cases += [("good_general", {"n": n}) for n in range(1, 6)]
    cases += [
        ("louck_general", {"m": m, "n": n})
        for n in range(1, 5)
        for m in range(max(n - 1, 0), 6)
    ]
    cases += [
        ("good_k_general", {"n": n, "k": k}) for n in range(1, 6) for k in range(n + 1)
    ]
    cases += [
        ("e_beta_recurrence", {"k": k, "n": n})
        for n in range(1, 7)
        for k in range(n + 1)
    ]
    return cases


def grid_classical(seed: int = 0):
    cases = []
    for _, params in grid_gm_type():
        cases.append(("classical_gm", params))
    for _, params in grid_fnr_type():
        cases.append(("classical_fnr", params))
    cases += [
        ("classical_good", {"n": n, "trials": 100, "seed": seed}) for n in (2, 3, 4)
    ]
    cases.append(("classical_louck", {"m": 3, "n": 2}))
    return cases


def suite_cases(seed: int = 0):
    """The full default grid, in suite order."""
    return (
        grid_vandermonde()
        + grid_gm_type()
        + grid_fnr_type()
        + grid_corollaries()
        + grid_classical(seed)
    )


def run_case(identity: str, params: dict, **opts) -> IdentityReport:
    if identity == "gm_type":
        return verify_gm_type(params["lam"], params["n"], **opts)
    if identity == "fnr_type":
        return verify_fnr_type(params["lam"], params["m"], params["n"], **opts)
    if identity == "vandermonde_lemma":
        return verify_vandermonde_lemma(params["n"], **opts)
    if identity == "e_beta_recurrence":
        return verify_e_beta_recurrence(params["k"], params["n"], **opts)
    if identity == "good_general":
        return verify_good_general(params["n"], **opts)
    if identity == "louck_general":
        return verify_louck_general(params["m"], params["n"], **opts)
    if identity == "good_k_general":
        return verify_good_k_general(params["n"], params["k"], **opts)
    if identity.startswith("classical_"):
        return verify_classical(identity, params, **opts)
    raise PreconditionViolatedError(f"unknown identity {identity!r}")


def run_suite(*, seed: int = 0, fast_trials: int = 0, fast_only: bool = False):
    """Run the whole default grid; returns the reports in grid order."""
    reports = []
    for identity, params in suite_cases(seed):
        reports.append(
            run_case(
                identity, params, seed=seed, fast_trials=fast_trials, fast_only=fast_only
            )
        )
    return reports
