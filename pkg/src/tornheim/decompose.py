"""Exact decomposition of colored Tornheim double series.

The colored double series

    T(p,q,r; a,b) = sum_{m,n>=1} a^n b^(m+n) / (m^p n^q (m+n)^r)

rewrites, through the partial-fraction identity for 1/(x^p y^q), as an
integer combination of double polylogarithm values

    Li[s,t](x,y) = sum_{m>n>=1} x^m y^n / (m^s n^t),

namely

    T(p,q,r; a,b) = sum_{i=0}^{p-1} C(q+i-1, i) * Li[r+q+i, p-i](a*b, 1/a)
                  + sum_{j=0}^{q-1} C(p+j-1, j) * Li[r+p+j, q-j](b, a).

Subscript convention: the first subscript and the first argument of Li
belong to the outer summation index m.  (Some of the multiple-zeta-value
literature attaches them to the inner index instead; everything here,
including the bar notation below, follows the outer-first convention.)

The p = 0 and q = 0 boundary cases flow through the same loop: the
falling-factorial binomial convention makes every term but one vanish,
collapsing the sum to the single term the index substitution M = m+n
gives directly.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import RootOfUnity, binomial, root_inv, root_mul


@dataclass(frozen=True)
class MTIndex:
    """Exponent triple (p,q,r) of a Tornheim series, convergence-checked."""

    p: int
    q: int
    r: int

    def __post_init__(self) -> None:
        for name in ("p", "q", "r"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer")
        if self.p + self.q <= 0:
            raise ValueError("p+q>0 required")
        if self.p + self.r <= 1:
            raise ValueError("p+r>1 required")
        if self.q + self.r <= 1:
            raise ValueError("q+r>1 required")
        if self.p + self.q + self.r <= 2:
            raise ValueError("p+q+r>2 required")

    @property
    def weight(self) -> int:
        return self.p + self.q + self.r

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class PartialFractionTerm:
    """One term of the 1/(x^p y^q) expansion: coefficient / (v^e (x+y)^f).

    Exactly one of x_exp, y_exp is nonzero; it records which variable
    carries the power that is not on (x+y).
    """

    coefficient: int
    x_exp: int
    y_exp: int
    sum_exp: int

    @property
    def variable(self) -> str:
        return "x" if self.x_exp > 0 else "y"

    def evaluate(self, x: float, y: float) -> float:
        return self.coefficient / (x**self.x_exp * y**self.y_exp * (x + y) ** self.sum_exp)


def partial_fraction(p: int, q: int) -> list[PartialFractionTerm]:
    """Expand 1/(x^p y^q) into p+q terms in x-or-y times (x+y) powers.

    1/(x^p y^q) = sum_{i<p} C(q+i-1,i) / (x^(p-i) (x+y)^(q+i))
                + sum_{j<q} C(p+j-1,j) / (y^(q-j) (x+y)^(p+j))

    valid for positive integers p, q and reals x, y with x+y != 0.
    """
    if not isinstance(p, int) or not isinstance(q, int) or p < 1 or q < 1:
        raise ValueError("partial_fraction requires positive integers p, q")
    terms = []
    for i in range(p):
        terms.append(PartialFractionTerm(binomial(q + i - 1, i), p - i, 0, q + i))
    for j in range(q):
        terms.append(PartialFractionTerm(binomial(p + j - 1, j), 0, q - j, p + j))
    return terms


@dataclass(frozen=True)
class LiTerm:
    """coefficient * Li[s,t](x, y) with s on the outer index."""

    coefficient: int
    s: int
    t: int
    x: RootOfUnity
    y: RootOfUnity

    def __post_init__(self) -> None:
        if not isinstance(self.coefficient, int) or self.coefficient < 1:
            raise ValueError("coefficient must be a positive integer")
        if not isinstance(self.s, int) or self.s < 2:
            raise ValueError("outer exponent s must be an integer >= 2")
        if not isinstance(self.t, int) or self.t < 1:
            raise ValueError("inner exponent t must be a positive integer")

    @property
    def weight(self) -> int:
        return self.s + self.t

    def key(self) -> tuple:
        return (self.s, self.t, self.x, self.y)

    def text(self) -> str:
        body = f"Li[{self.s},{self.t}]({self.x},{self.y})"
        return body if self.coefficient == 1 else f"{self.coefficient}*{body}"

    def record(self) -> dict:
        return {
            "coeff": self.coefficient,
            "s": self.s,
            "t": self.t,
            "x": self.x.as_fraction_str(),
            "y": self.y.as_fraction_str(),
        }


def term_from_record(rec: dict) -> LiTerm:
    return LiTerm(
        int(rec["coeff"]),
        int(rec["s"]),
        int(rec["t"]),
        RootOfUnity.parse(rec["x"]),
        RootOfUnity.parse(rec["y"]),
    )


@dataclass(frozen=True)
class Decomposition:
    """An exact identity: the series at (index, alpha, beta) equals the terms."""

    index: MTIndex
    alpha: RootOfUnity
    beta: RootOfUnity
    terms: tuple[LiTerm, ...]

    def __post_init__(self) -> None:
        w = self.index.weight
        seen = set()
        for term in self.terms:
            if term.weight != w:
                raise ValueError(f"term {term.text()} breaks weight {w} conservation")
            k = term.key()
            if k in seen:
                raise ValueError(f"duplicate term key {k}; terms must be merged")
            seen.add(k)

    @property
    def weight(self) -> int:
        return self.index.weight

    def coefficient_sum(self) -> int:
        return sum(t.coefficient for t in self.terms)

    def to_text(self) -> str:
        return " + ".join(t.text() for t in self.terms)

    def to_records(self) -> list[dict]:
        return [t.record() for t in self.terms]


def expansion_terms(index: MTIndex, alpha: RootOfUnity, beta: RootOfUnity) -> list[LiTerm]:
    """Unmerged decomposition terms in display order.

    First family (increasing i, arguments (alpha*beta, 1/alpha)), then
    second family (increasing j, arguments (beta, alpha)).  Terms whose
    binomial coefficient vanishes are dropped.
    """
    p, q, r = index.p, index.q, index.r
    ab = root_mul(alpha, beta)
    ai = root_inv(alpha)
    out: list[LiTerm] = []
    for i in range(p):
        c = binomial(q + i - 1, i)
        if c:
            out.append(LiTerm(c, r + q + i, p - i, ab, ai))
    for j in range(q):
        c = binomial(p + j - 1, j)
        if c:
            out.append(LiTerm(c, r + p + j, q - j, beta, alpha))
    return out


def decompose(index: MTIndex, alpha: RootOfUnity, beta: RootOfUnity) -> Decomposition:
    """Exact rewrite of the colored double series into Li terms.

    Terms with identical (s, t, x, y) are merged by summing coefficients;
    the first occurrence fixes the display position.
    """
    merged: dict[tuple, int] = {}
    for term in expansion_terms(index, alpha, beta):
        k = term.key()
        merged[k] = merged.get(k, 0) + term.coefficient
    terms = tuple(LiTerm(c, s, t, x, y) for (s, t, x, y), c in merged.items())
    return Decomposition(index, alpha, beta, terms)


@dataclass(frozen=True)
class EulerTerm:
    """coefficient * zeta(s-or-sbar, t-or-tbar), the level-2 bar notation.

    zeta(sbar, tbar) = sum_{m>n>=1} (-1)^(m+n) / (m^s n^t)   <- Li(-1,-1)
    zeta(sbar, t)    = sum_{m>n>=1} (-1)^m     / (m^s n^t)   <- Li(-1, 1)
    zeta(s, tbar)    = sum_{m>n>=1} (-1)^n     / (m^s n^t)   <- Li( 1,-1)
    """

    coefficient: int
    s: int
    t: int
    s_bar: bool
    t_bar: bool

    def __post_init__(self) -> None:
        if not isinstance(self.coefficient, int) or self.coefficient < 1:
            raise ValueError("coefficient must be a positive integer")
        if self.s < 2 or self.t < 1:
            raise ValueError("need s >= 2 and t >= 1")

    @classmethod
    def from_li(cls, term: LiTerm) -> "EulerTerm":
        for root in (term.x, term.y):
            if root.order > 2:
                raise ValueError(
                    f"argument {root} has order {root.order} > 2; "
                    "bar notation requires arguments in {1, -1}"
                )
        return cls(term.coefficient, term.s, term.t, term.x.order == 2, term.y.order == 2)

    def key(self) -> tuple:
        return (self.s, self.t, self.s_bar, self.t_bar)

    def z_text(self) -> str:
        a = -self.s if self.s_bar else self.s
        b = -self.t if self.t_bar else self.t
        body = f"z({a},{b})"
        return body if self.coefficient == 1 else f"{self.coefficient}*{body}"

    def pretty(self) -> str:
        a = f"{self.s}̄" if self.s_bar else f"{self.s}"
        b = f"{self.t}̄" if self.t_bar else f"{self.t}"
        body = f"ζ({a},{b})"
        return body if self.coefficient == 1 else f"{self.coefficient}*{body}"


def to_level2(decomposition: Decomposition) -> list[EulerTerm]:
    """Map a decomposition whose arguments are all +-1 to bar notation."""
    return [EulerTerm.from_li(t) for t in decomposition.terms]


def r_decomposition(p: int, q: int, r: int) -> list[EulerTerm]:
    """Expansion of R(p,q,r) = sum (-1)^n / (m^p n^q (m+n)^r)."""
    from .algebra import MINUS_ONE, ONE

    return to_level2(decompose(MTIndex(p, q, r), MINUS_ONE, ONE))


def s_decomposition(p: int, q: int, r: int) -> list[EulerTerm]:
    """Expansion of S(p,q,r) = sum (-1)^(m+n) / (m^p n^q (m+n)^r)."""
    from .algebra import MINUS_ONE, ONE

    return to_level2(decompose(MTIndex(p, q, r), ONE, MINUS_ONE))
