"""Numerical evaluation with rigorous absolute error bounds.

Every value returned here is a ValueWithError whose bound covers all series
truncation rigorously; float roundoff is covered by conservative
machine-epsilon allowances proportional to the accumulated absolute mass of
the summed terms (so the bounds stay honest under cutoff doubling).

Summation machinery, bottom up:

* hurwitz_tail(s, w): H(s,w) = sum_{j>=0} 1/(j+w)^s by a directly summed
  head plus the Euler-Maclaurin correction

      H(s,A) ~ A^(1-s)/(s-1) + A^(-s)/2 + sum_l B_{2l}/(2l)! (s)_{2l-1} A^(1-s-2l)

  started at A = w + J with J large enough that the first omitted Bernoulli
  term is below 1e-16 relative.  (j+w)^(-s) is completely monotone, so the
  remainder is bounded by that first omitted term, which enters the bound.

* tail_sum(s, x, n): T = sum_{m>n} x^m/m^s for an Nth root of unity x
  collapses over residue classes of m mod N to

      T = x^n N^(-s) sum_{c=1..N} x^c H(s, (n+c)/N),

  a finite combination of Hurwitz tails.

* eval_li(s, t, x, y): sum_{n<=n0} y^n n^(-t) T(s,x,n) is summed directly
  (T obtained for every n from one tail_sum at n0 plus a reverse running
  sum).  The remainder sum_{n>n0} collapses the same way: substituting the
  Euler-Maclaurin expansion of H into T and re-expanding (n+c)^(-sigma)
  binomially around n turns it into a rapidly convergent combination of
  higher-weight single tails sum_{n>n0} (xy)^n n^(-omega), i.e. tail_sum
  again.  Plain truncation of the n-sum would need ~1e10 terms for the
  hardest weight-3 shapes at 1e-10; this route needs a few hundred.

* eval_mt_direct: the independent ground truth.  A plain diagonal-major
  truncated double sum of the defining series (numpy-vectorized), with a
  color-independent integral-comparison tail bound.

Compensated summation: math.fsum (exactly rounded) combines all scalar
series; the oracle sums each anti-diagonal with numpy and fsum-combines the
diagonal subtotals in order, which keeps results deterministic and lets the
roundoff allowance assume worst-case sequential error within a diagonal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import fsum

import numpy as np

from .algebra import ONE, RootOfUnity, root_mul, root_value
from .decompose import Decomposition, MTIndex

_EPS = 2.220446049250313e-16

# B_2..B_16 drive the Euler-Maclaurin corrections (order up to 16); B_18
# only ever feeds the first-omitted-term remainder bound.
_BERNOULLI = {
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
}

# Internal tails of the eval_li acceleration layer always run at the
# highest stable order; the configured order governs the public tail_sum
# default and the expansion depth of the outer tail.
_LADDER_ORDER = 16


@dataclass(frozen=True)
class ValueWithError:
    """A complex double plus a rigorous absolute error bound."""

    value: complex
    error_bound: float

    def __post_init__(self) -> None:
        v = complex(self.value)
        object.__setattr__(self, "value", v)
        b = float(self.error_bound)
        object.__setattr__(self, "error_bound", b)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError("value must be finite")
        if not math.isfinite(b) or b < 0.0:
            raise ValueError("error bound must be finite and nonnegative")


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation knobs; all values validated at construction."""

    tolerance: float = 1e-10
    oracle_cutoff: int = 20000
    max_inner_terms: int = 200000
    euler_maclaurin_order: int = 8

    def __post_init__(self) -> None:
        if not (1e-13 <= self.tolerance):
            raise ValueError("tolerance must be >= 1e-13 (double precision floor)")
        if not isinstance(self.oracle_cutoff, int) or self.oracle_cutoff < 1:
            raise ValueError("oracle_cutoff must be a positive integer")
        if not isinstance(self.max_inner_terms, int) or self.max_inner_terms < 1:
            raise ValueError("max_inner_terms must be a positive integer")
        o = self.euler_maclaurin_order
        if not isinstance(o, int) or o < 2 or o % 2 or o > 16:
            raise ValueError("euler_maclaurin_order must be an even integer in 2..16")


DEFAULT_CONFIG = EvalConfig()


def _rising(s: int, k: int) -> int:
    return math.prod(range(s, s + k))


@lru_cache(maxsize=None)
def _em_params(s: int, half_order: int) -> tuple[tuple[float, ...], float, float]:
    """(correction coefficients, remainder coefficient, minimal EM start A)."""
    betas = tuple(
        float(_BERNOULLI[2 * l] * _rising(s, 2 * l - 1) / math.factorial(2 * l))
        for l in range(1, half_order + 1)
    )
    bhat = float(
        abs(_BERNOULLI[2 * half_order + 2])
        * _rising(s, 2 * half_order + 1)
        / math.factorial(2 * half_order + 2)
    )
    # First omitted term <= 1e-16 * leading term A^(1-s)/(s-1).
    a_min = (bhat * (s - 1) / 1e-16) ** (1.0 / (2 * half_order + 2))
    return betas, bhat, max(4.0, a_min)


def _hurwitz_direct(s: int, w: float) -> tuple[float, float]:
    # For large s the terms decay geometrically; no acceleration needed.
    parts = []
    acc = 0.0
    j = 0
    while True:
        term = (w + j) ** -s
        parts.append(term)
        acc += term
        j += 1
        bound = (w + j - 1) ** (1 - s) / (s - 1)
        if term == 0.0 or bound <= 1e-17 * acc:
            break
    return fsum(parts), bound + 4.0 * _EPS * acc


def hurwitz_tail(s: int, w: float, order: int = 8) -> tuple[float, float]:
    """H(s, w) = sum_{j>=0} (j+w)^(-s) with its truncation bound."""
    if not isinstance(s, int) or s < 2:
        raise ValueError("hurwitz_tail requires integer s >= 2")
    if not (w > 0.0):
        raise ValueError("hurwitz_tail requires w > 0")
    if s >= 30:
        return _hurwitz_direct(s, w)
    betas, bhat, a_min = _em_params(s, order // 2)
    extra = int(max(0.0, math.ceil(a_min - w)))
    head = fsum((w + j) ** -s for j in range(extra)) if extra else 0.0
    a = w + extra
    tail = a ** (1 - s) / (s - 1) + 0.5 * a**-s
    for i, beta in enumerate(betas):
        tail += beta * a ** -(s + 2 * i + 1)
    bound = bhat * a ** -(s + 2 * len(betas) + 1)
    return head + tail, bound + 4.0 * _EPS * (head + abs(tail))


def _pow_value(x: RootOfUnity, m: int) -> complex:
    return root_value(RootOfUnity(x.exponent * m, x.order))


def tail_sum(s: int, x: RootOfUnity, n: int, order: int = 8) -> ValueWithError:
    """T(s,x,n) = sum_{m>n} x^m / m^s via residue-class Hurwitz tails."""
    if not isinstance(s, int) or s < 2:
        raise ValueError("tail_sum requires integer s >= 2")
    if not isinstance(n, int) or n < 0:
        raise ValueError("tail_sum requires integer n >= 0")
    nn = x.order
    scale = float(nn) ** -s
    re, im = [], []
    bound = 0.0
    mass = 0.0
    for c in range(1, nn + 1):
        hz, hb = hurwitz_tail(s, (n + c) / nn, order)
        ph = _pow_value(x, c)
        re.append(ph.real * hz)
        im.append(ph.imag * hz)
        bound += hb
        mass += abs(hz)
    front = _pow_value(x, n)
    value = front * complex(fsum(re), fsum(im)) * scale
    return ValueWithError(value, scale * (bound + 8.0 * _EPS * mass))


def _li_once(
    s: int, t: int, x: RootOfUnity, y: RootOfUnity, n0: int, order: int
) -> tuple[complex, float]:
    nx, kx = x.order, x.exponent
    ny, ky = y.order, y.exponent
    z = root_mul(x, y)
    half = order // 2

    xv = [root_value(RootOfUnity(e, nx)) for e in range(nx)]
    yv = [root_value(RootOfUnity(e, ny)) for e in range(ny)]

    # Head: sum_{n<=n0} y^n n^(-t) T(s,x,n), T by reverse running sum.
    t_at_n0 = tail_sum(s, x, n0, order)
    t_run = t_at_n0.value
    re, im = [], []
    mass_head = 0.0
    for n in range(n0, 0, -1):
        g = yv[(ky * n) % ny] * t_run * float(n) ** -t
        re.append(g.real)
        im.append(g.imag)
        mass_head += abs(g)
        t_run = t_run + xv[(kx * n) % nx] * float(n) ** -s
    head = complex(fsum(re), fsum(im))
    # sum_{n<=n0} n^(-t) weights the per-n T error (EM bound plus the
    # running-sum roundoff, itself at most eps * sum |x^m m^-s|).
    hsum = 1.0 + math.log(n0) if t == 1 else 1.6449340668482266
    bound = (t_at_n0.error_bound + 8.0 * _EPS * 1.645) * hsum + 16.0 * _EPS * mass_head

    # Tail: expand T's Hurwitz pieces asymptotically, then (n+c)^(-sigma)
    # binomially around n; everything lands on single tails of weight
    # omega = t + sigma + j in the combined color z = x*y.
    betas, bhat, _ = _em_params(s, half)
    sigmas = [(s - 1, 1.0 / (s - 1)), (s, 0.5)]
    sigmas += [(s + 2 * l - 1, betas[l - 1]) for l in range(1, half + 1)]

    lam: dict[int, ValueWithError] = {}

    def lam_at(omega: int) -> ValueWithError:
        got = lam.get(omega)
        if got is None:
            got = lam[omega] = tail_sum(omega, z, n0, _LADDER_ORDER)
        return got

    nf = float(n0)
    tre, tim = [], []
    mass_tail = 0.0
    for sigma, coef in sigmas:
        pref = coef * float(nx) ** (sigma - s)
        apref = abs(pref)
        for c in range(1, nx + 1):
            xc = xv[(kx * c) % nx]
            cj = 1.0  # c^j
            binom = 1.0  # C(sigma+j-1, j)
            sign = 1.0
            j = 0
            while True:
                lv = lam_at(t + sigma + j)
                u = (cj * binom) * lv.value
                g = (pref * sign) * (xc * u)
                tre.append(g.real)
                tim.append(g.imag)
                mass_tail += abs(g)
                bound += apref * cj * binom * lv.error_bound
                j += 1
                sign = -sign
                binom *= (sigma + j - 1) / j
                cj *= c
                # Geometric majorant on the rest of the j-series; the term
                # ratio (sigma+j)/(j+1) * c/n0 decreases in j.
                omega = t + sigma + j
                lam_cap = cj * nf ** (1 - omega)  # c^j * bound scale, kept paired
                if lam_cap == 0.0:
                    break  # rest is below the subnormal floor
                major = apref * binom * lam_cap / (omega - 1)
                ratio = (sigma + j) / (j + 1) * (c / nf)
                if ratio < 0.5 and major / (1.0 - ratio) < 1e-18:
                    bound += major / (1.0 - ratio)
                    break
                if j > 2000:
                    raise RuntimeError("binomial re-expansion failed to converge")
    tail = complex(fsum(tre), fsum(tim))

    # Remainder of the asymptotic expansion of H inside T, summed over n>n0.
    bound += (
        float(nx) ** (2 * half + 2) * bhat * nf ** -(t + s + 2 * half) / (t + s + 2 * half)
    )

    value = head + tail
    bound += 32.0 * _EPS * (mass_head + mass_tail + abs(value))
    return value, bound


@lru_cache(maxsize=None)
def eval_li(
    s: int, t: int, x: RootOfUnity, y: RootOfUnity, cfg: EvalConfig = DEFAULT_CONFIG
) -> ValueWithError:
    """Li[s,t](x,y) = sum_{m>n>=1} x^m y^n / (m^s n^t) to cfg.tolerance.

    The returned bound is <= cfg.tolerance unless max_inner_terms capped the
    head length, in which case the bound reports what was actually achieved.
    """
    if not isinstance(s, int) or s < 2:
        raise ValueError("eval_li requires integer s >= 2")
    if not isinstance(t, int) or t < 1:
        raise ValueError("eval_li requires integer t >= 1")
    n0 = min(cfg.max_inner_terms, max(128, 16 * x.order))
    while True:
        value, bound = _li_once(s, t, x, y, n0, cfg.euler_maclaurin_order)
        if bound <= cfg.tolerance or n0 >= cfg.max_inner_terms:
            return ValueWithError(value, bound)
        n0 = min(2 * n0, cfg.max_inner_terms)


def _phase_table(root: RootOfUnity) -> np.ndarray:
    return np.array([_pow_value(root, j) for j in range(root.order)], dtype=np.complex128)


def _neg_int_pow(base: np.ndarray, e: int) -> np.ndarray:
    """base^(-e) for integer e >= 0 by binary exponentiation (fast path)."""
    if e == 0:
        return np.ones_like(base)
    b = 1.0 / base
    out = None
    while e:
        if e & 1:
            out = b.copy() if out is None else out * b
        e >>= 1
        if e:
            b = b * b
    return out


def oracle_tail_bound(p: int, q: int, r: int, cutoff: int) -> float:
    """Upper bound on sum_{m+n>cutoff} 1/(m^p n^q (m+n)^r).

    Splitting each anti-diagonal k at k/2 gives

        A(k) = sum_{m+n=k} 1/(m^p n^q)
             <= (2/k)^q psi_p(k/2) + (2/k)^p psi_q(k/2)

    with psi_e(M) = sum_{m<=M} m^(-e) bounded by M, 1+log M, or zeta(2)
    for e = 0, 1, >=2; summing A(k)/k^r over k > cutoff by integral
    comparison yields the closed forms below.  Valid (denominators
    positive) for every convergent index triple; color-independent.
    """
    kk = float(cutoff)

    def piece(e: int, b: int) -> float:
        w = b + r
        if e == 0:
            return 2.0 ** (b - 1) * kk ** (2.0 - w) / (w - 2.0)
        if e == 1:
            return 2.0**b * kk ** (1.0 - w) * ((1.0 + math.log(kk / 2.0)) / (w - 1.0) + (w - 1.0) ** -2.0)
        return 1.6449340668482266 * 2.0**b * kk ** (1.0 - w) / (w - 1.0)

    return piece(p, q) + piece(q, p)


def eval_mt_direct(
    index: MTIndex, alpha: RootOfUnity, beta: RootOfUnity, cfg: EvalConfig = DEFAULT_CONFIG
) -> ValueWithError:
    """Ground-truth oracle: truncated double sum of the defining series.

    Sums all (m, n) with m+n <= cfg.oracle_cutoff in diagonal-major order;
    the bound is the color-independent absolute tail plus a worst-case
    sequential roundoff allowance.
    """
    p, q, r = index.p, index.q, index.r
    cut = cfg.oracle_cutoff
    ta = _phase_table(alpha)
    tb = _phase_table(beta)
    na, nb = alpha.order, beta.order

    diag_re: list[float] = []
    diag_im: list[float] = []
    diag_abs: list[float] = []
    budget = 1 << 20
    k = 2
    while k <= cut:
        k_end = k
        count = 0
        while k_end <= cut and (count == 0 or count + k_end - 1 <= budget):
            count += k_end - 1
            k_end += 1
        kv = np.arange(k, k_end, dtype=np.int64)
        lens = kv - 1
        starts = np.zeros(len(kv), dtype=np.int64)
        np.cumsum(lens[:-1], out=starts[1:])
        total = int(lens.sum())
        kk = np.repeat(kv, lens)
        mm = np.arange(total, dtype=np.int64) - np.repeat(starts, lens) + 1
        nn = kk - mm
        mag = _neg_int_pow(mm.astype(np.float64), p) * _neg_int_pow(nn.astype(np.float64), q)
        inner = ta[np.mod(nn, na)] * mag
        seg = np.add.reduceat(inner, starts)
        segabs = np.add.reduceat(mag, starts)
        kf = _neg_int_pow(kv.astype(np.float64), r)
        contrib = seg * tb[np.mod(kv, nb)] * kf
        diag_re.extend(contrib.real.tolist())
        diag_im.extend(contrib.imag.tolist())
        diag_abs.extend((segabs * kf).tolist())
        k = k_end

    value = complex(fsum(diag_re), fsum(diag_im))
    mass = fsum(diag_abs)
    bound = oracle_tail_bound(p, q, r, cut) + _EPS * (cut + 64.0) * mass
    return ValueWithError(value, bound)


def eval_decomposition(d: Decomposition, cfg: EvalConfig = DEFAULT_CONFIG) -> ValueWithError:
    """Evaluate a decomposition term by term, combining in its term order."""
    re, im, eb = [], [], []
    mass = 0.0
    for term in d.terms:
        v = eval_li(term.s, term.t, term.x, term.y, cfg)
        c = term.coefficient
        re.append(c * v.value.real)
        im.append(c * v.value.imag)
        eb.append(c * v.error_bound)
        mass += c * abs(v.value)
    value = complex(fsum(re), fsum(im))
    return ValueWithError(value, fsum(eb) + 4.0 * _EPS * mass)


def zeta_const(s: int) -> ValueWithError:
    """zeta(s) for integer s >= 2."""
    return tail_sum(s, ONE, 0)


def pi_const() -> ValueWithError:
    return ValueWithError(complex(math.pi, 0.0), 1.3e-16)
