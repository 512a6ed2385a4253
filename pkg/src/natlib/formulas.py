"""Closed-form counting formulas and exact parameter polynomials.

``ParamPoly`` is a multivariate polynomial over exact rationals in a tuple
of parameter symbols (q, q_L, q_R, alpha, beta, z, t, ...).  All divisions in
this module are exact and asserted to be so.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial

from .nat_core import Nat
from .perms import Permutation, imaj as _imaj, inv as _inv, std
from .trees import DKTree, Node, dk_vertices, lv_rv, subtree_counts, vertices

__all__ = [
    "ParamPoly",
    "q_int",
    "q_factorial",
    "q_binomial",
    "rising_factorial",
    "stirling2",
    "stirling2_q",
    "hook_formula",
    "q_hook_formula",
    "sigma_readings",
    "weight",
    "count_by_size",
    "count_by_size_and_hook",
    "bsg",
    "dk_hook_formula",
    "dk_geometric_size",
]

Exponent = tuple[int, ...]


class ParamPoly:
    """Immutable multivariate polynomial with Fraction coefficients."""

    __slots__ = ("symbols", "coeffs")

    def __init__(self, symbols: tuple[str, ...],
                 coeffs: dict[Exponent, Fraction] | None = None):
        self.symbols = tuple(symbols)
        clean: dict[Exponent, Fraction] = {}
        for expo, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                if len(expo) != len(self.symbols) or any(e < 0 for e in expo):
                    raise ValueError(f"bad exponent {expo} for symbols {symbols}")
                clean[tuple(expo)] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(value, symbols: tuple[str, ...] = ()) -> "ParamPoly":
        return ParamPoly(symbols, {(0,) * len(symbols): Fraction(value)})

    @staticmethod
    def var(symbol: str, symbols: tuple[str, ...] | None = None) -> "ParamPoly":
        symbols = symbols if symbols is not None else (symbol,)
        expo = tuple(1 if s == symbol else 0 for s in symbols)
        if symbol not in symbols:
            raise ValueError(f"{symbol} not among {symbols}")
        return ParamPoly(symbols, {expo: Fraction(1)})

    # -- helpers -----------------------------------------------------------

    def in_symbols(self, symbols: tuple[str, ...]) -> "ParamPoly":
        """Re-express over a (super)set of symbols."""
        if symbols == self.symbols:
            return self
        pos = []
        for s in self.symbols:
            if s not in symbols:
                if any(e[self.symbols.index(s)] for e in self.coeffs):
                    raise ValueError(f"cannot drop symbol {s}")
                pos.append(None)
            else:
                pos.append(symbols.index(s))
        coeffs: dict[Exponent, Fraction] = {}
        for expo, c in self.coeffs.items():
            new = [0] * len(symbols)
            for p, e in zip(pos, expo):
                if p is not None:
                    new[p] = e
            coeffs[tuple(new)] = coeffs.get(tuple(new), Fraction(0)) + c
        return ParamPoly(symbols, coeffs)

    @staticmethod
    def _aligned(a: "ParamPoly", b) -> tuple["ParamPoly", "ParamPoly"]:
        if not isinstance(b, ParamPoly):
            b = ParamPoly.constant(b)
        symbols = tuple(sorted(set(a.symbols) | set(b.symbols)))
        return a.in_symbols(symbols), b.in_symbols(symbols)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "ParamPoly":
        a, b = ParamPoly._aligned(self, other)
        coeffs = dict(a.coeffs)
        for expo, c in b.coeffs.items():
            coeffs[expo] = coeffs.get(expo, Fraction(0)) + c
        return ParamPoly(a.symbols, coeffs)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(self.symbols, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> "ParamPoly":
        return self + (-other if isinstance(other, ParamPoly) else -Fraction(other))

    def __rsub__(self, other) -> "ParamPoly":
        return (-self) + other

    def __mul__(self, other) -> "ParamPoly":
        a, b = ParamPoly._aligned(self, other)
        coeffs: dict[Exponent, Fraction] = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                expo = tuple(x + y for x, y in zip(e1, e2))
                coeffs[expo] = coeffs.get(expo, Fraction(0)) + c1 * c2
        return ParamPoly(a.symbols, coeffs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ParamPoly":
        if n < 0:
            raise ValueError("negative power")
        out = ParamPoly.constant(1, self.symbols)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.constant(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        a, b = ParamPoly._aligned(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        a = self.in_symbols(tuple(sorted(set(self.symbols))))
        return hash((a.symbols, frozenset(a.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- queries -----------------------------------------------------------

    def coefficient(self, **powers: int) -> Fraction:
        expo = tuple(powers.get(s, 0) for s in self.symbols)
        extra = set(powers) - set(self.symbols)
        if extra:
            raise KeyError(f"unknown symbols {extra}")
        return self.coeffs.get(expo, Fraction(0))

    def substitute(self, **values) -> "ParamPoly":
        """Substitute numbers (or polynomials) for some symbols."""
        out = ParamPoly.constant(0)
        for expo, c in self.coeffs.items():
            term = ParamPoly.constant(c)
            for s, e in zip(self.symbols, expo):
                if e == 0:
                    continue
                if s in values:
                    v = values[s]
                    v = v if isinstance(v, ParamPoly) else ParamPoly.constant(v)
                    term = term * v ** e
                else:
                    term = term * ParamPoly.var(s) ** e
            out = out + term
        return out

    def as_fraction(self) -> Fraction:
        if any(any(expo) for expo in self.coeffs):
            raise ValueError(f"{self} is not constant")
        return self.coeffs.get((0,) * len(self.symbols), Fraction(0))

    def degree(self, symbol: str) -> int:
        idx = self.symbols.index(symbol)
        return max((e[idx] for e in self.coeffs), default=0)

    def exact_div_univariate(self, divisor: "ParamPoly", symbol: str) -> "ParamPoly":
        """Exact division by a polynomial univariate in ``symbol``."""
        a, d = ParamPoly._aligned(self, divisor)
        idx = a.symbols.index(symbol)
        if any(e[i] for e in d.coeffs for i in range(len(a.symbols)) if i != idx):
            raise ValueError(f"divisor must be univariate in {symbol}")
        div = {e[idx]: c for e, c in d.coeffs.items()}
        if not div:
            raise ZeroDivisionError("division by zero polynomial")
        deg_d = max(div)
        lead = div[deg_d]
        rem = dict(a.coeffs)
        quot: dict[Exponent, Fraction] = {}
        while rem:
            deg_r = max(e[idx] for e in rem)
            if deg_r < deg_d:
                raise ValueError("inexact polynomial division")
            for expo in [e for e in rem if e[idx] == deg_r]:
                c = rem[expo] / lead
                q_expo = expo[:idx] + (deg_r - deg_d,) + expo[idx + 1:]
                quot[q_expo] = quot.get(q_expo, Fraction(0)) + c
                for dd, dc in div.items():
                    r_expo = expo[:idx] + (deg_r - deg_d + dd,) + expo[idx + 1:]
                    new = rem.get(r_expo, Fraction(0)) - c * dc
                    if new:
                        rem[r_expo] = new
                    else:
                        rem.pop(r_expo, None)
        return ParamPoly(a.symbols, quot)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for expo in sorted(self.coeffs):
            c = self.coeffs[expo]
            mono = "*".join(
                s if e == 1 else f"{s}^{e}"
                for s, e in zip(self.symbols, expo)
                if e
            )
            if mono:
                terms.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                terms.append(str(c))
        return " + ".join(terms)


# --------------------------------------------------------------------------
# q-combinatorics primitives
# --------------------------------------------------------------------------


def q_int(n: int, symbol: str = "q") -> ParamPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return ParamPoly((symbol,), {(i,): Fraction(1) for i in range(n)})


def q_factorial(n: int, symbol: str = "q") -> ParamPoly:
    out = ParamPoly.constant(1, (symbol,))
    for m in range(1, n + 1):
        out = out * q_int(m, symbol)
    return out


def q_binomial(n: int, k: int, symbol: str = "q") -> ParamPoly:
    """Gaussian binomial coefficient, by exact division of q-factorials."""
    if k < 0 or k > n:
        return ParamPoly.constant(0, (symbol,))
    num = q_factorial(n, symbol)
    num = num.exact_div_univariate(q_factorial(k, symbol), symbol)
    return num.exact_div_univariate(q_factorial(n - k, symbol), symbol)


def rising_factorial(x: ParamPoly, n: int) -> ParamPoly:
    """x^(n) = x (x+1) ... (x+n-1)."""
    out = ParamPoly.constant(1, x.symbols)
    for m in range(n):
        out = out * (x + m)
    return out


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


def stirling2_q(n: int, k: int, symbol: str = "q") -> ParamPoly:
    """q-Stirling number: partitions of {1..n} into k blocks, q marking the
    elements other than n in the block containing n.

    Grouping partitions by the number m of those elements gives
    sum_m C(n-1, m) q^m S(n-1-m, k-1).
    """
    if n == 0 and k == 0:
        return ParamPoly.constant(1, (symbol,))
    if n <= 0 or k <= 0 or k > n:
        return ParamPoly.constant(0, (symbol,))
    coeffs = {}
    for m in range(n):
        c = comb(n - 1, m) * stirling2(n - 1 - m, k - 1)
        if c:
            coeffs[(m,)] = Fraction(c)
    return ParamPoly((symbol,), coeffs)


# --------------------------------------------------------------------------
# Hook formulas
# --------------------------------------------------------------------------


def hook_formula(shape: Node) -> int:
    """|LV|! |RV|! / (prod EL over left children * prod ER over right ones)."""
    if not isinstance(shape, Node):
        raise ValueError("hook formula requires a non-empty tree")
    lv, rv = lv_rv(shape)
    counts = subtree_counts(shape)
    denom = 1
    for path, (el, er) in counts.items():
        if path.endswith("L"):
            denom *= el
        elif path.endswith("R"):
            denom *= er
    num = factorial(lv) * factorial(rv)
    assert num % denom == 0, "hook-formula division must be exact"
    return num // denom


def q_hook_formula(shape: Node) -> ParamPoly:
    """The q-analogue, a polynomial in (q_L, q_R); division is exact."""
    if not isinstance(shape, Node):
        raise ValueError("q-hook formula requires a non-empty tree")
    lv, rv = lv_rv(shape)
    counts = subtree_counts(shape)
    out = q_factorial(lv, "q_L").in_symbols(("q_L", "q_R")) * q_factorial(rv, "q_R")
    for path, (el, er) in counts.items():
        if path.endswith("L"):
            out = out.exact_div_univariate(q_int(el, "q_L"), "q_L")
        elif path.endswith("R"):
            out = out.exact_div_univariate(q_int(er, "q_R"), "q_R")
    return out


def sigma_readings(t: Nat) -> tuple[Permutation, Permutation]:
    """(sigma_L, sigma_R): postfix readings of the left and right labels.

    sigma_L reads, recursively, the left labels of the left subtree, then of
    the right subtree, then the root's own label if it is a left child;
    sigma_R is the mirror image.
    """
    left, right = t.left_label, t.right_label

    def read(node: Node, path: str, first: str, labels: dict[str, int],
             side: str, out: list[int]) -> None:
        children = [(node.left, "L"), (node.right, "R")]
        if first == "R":
            children.reverse()
        for child, step in children:
            if child is not None:
                read(child, path + step, first, labels, side, out)
        if path.endswith(side):
            out.append(labels[path])

    sigma_l: list[int] = []
    sigma_r: list[int] = []
    read(t.shape, "", "L", left, "L", sigma_l)
    read(t.shape, "", "R", right, "R", sigma_r)
    return tuple(sigma_l), tuple(sigma_r)


_STATISTICS = {"inv": _inv, "imaj": _imaj}


def weight(t: Nat, statistic: str) -> ParamPoly:
    """q_L^{S(sigma_L)} q_R^{S(sigma_R)} for S in {inv, imaj}."""
    stat = _STATISTICS[statistic]
    sigma_l, sigma_r = sigma_readings(t)
    return ParamPoly(("q_L", "q_R"), {(stat(sigma_l), stat(sigma_r)): Fraction(1)})


# --------------------------------------------------------------------------
# Counting by geometric size and hooks
# --------------------------------------------------------------------------


def count_by_size(i: int, j: int) -> ParamPoly:
    """(alpha, beta)-weighted number of NATs of geometric size i x j:
    sum_p (p-1)! (alpha+beta)^(p-1) S_{2,alpha}(i,p) S_{2,beta}(j,p)."""
    if i < 1 or j < 1:
        raise ValueError("size components must be >= 1")
    symbols = ("alpha", "beta")
    ab = ParamPoly.var("alpha", symbols) + ParamPoly.var("beta", symbols)
    out = ParamPoly.constant(0, symbols)
    for p in range(1, min(i, j) + 1):
        term = ParamPoly.constant(factorial(p - 1), symbols)
        term = term * rising_factorial(ab, p - 1)
        term = term * stirling2_q(i, p, "alpha").in_symbols(symbols)
        term = term * stirling2_q(j, p, "beta").in_symbols(symbols)
        out = out + term
    return out


def count_by_size_and_hook(i: int, j: int, p: int) -> int:
    """Number of NATs of geometric size i x j with hook number p."""
    if min(i, j, p) < 1:
        raise ValueError("arguments must be >= 1")
    return factorial(p - 1) * factorial(p) * stirling2(i, p) * stirling2(j, p)


# --------------------------------------------------------------------------
# The shuffle-type bilinear map
# --------------------------------------------------------------------------


def bsg(sigma: Permutation, mu: Permutation) -> list[Permutation]:
    """All words uv with std(u) = sigma.(m+1) and std(v) = mu.

    Here sigma.(m+1) is sigma with the letter m+1 appended; the result is a
    list of permutations of size m+n+1, in lexicographic order.
    """
    m, n = len(sigma), len(mu)
    pattern_u = tuple(sigma) + (m + 1,)
    total = m + n + 1
    out = []
    for subset in itertools.combinations(range(1, total + 1), m + 1):
        u = tuple(subset[p - 1] for p in pattern_u)
        rest = sorted(set(range(1, total + 1)) - set(subset))
        v = tuple(rest[p - 1] for p in mu)
        word = u + v
        assert std(word[:m + 1]) == pattern_u and std(word[m + 1:]) == tuple(mu)
        out.append(word)
    return sorted(out)


# --------------------------------------------------------------------------
# (d,k) hook formula
# --------------------------------------------------------------------------


def dk_geometric_size(shape: DKTree) -> tuple[int, ...]:
    """w_i = 1 + #{non-root vertices whose direction contains i}."""
    w = [1] * shape.d
    for path in dk_vertices(shape):
        if path:
            for i in path[-1]:
                w[i - 1] += 1
    return tuple(w)


def dk_hook_formula(shape: DKTree) -> int:
    """prod_i (w_i - 1)! / prod over children U, i in dir(U), of E_i(U)."""
    if not isinstance(shape, DKTree):
        raise ValueError("dk hook formula requires a non-empty tree")
    from .trees import dk_subtree_at

    w = dk_geometric_size(shape)
    num = 1
    for wi in w:
        num *= factorial(wi - 1)
    denom = 1
    for path in dk_vertices(shape):
        if not path:
            continue
        sub = dk_subtree_at(shape, path)
        for i in path[-1]:
            # U itself counts, since i is in U's own direction
            e_i = 1 + sum(1 for p in dk_vertices(sub) if p and i in p[-1])
            denom *= e_i
    assert num % denom == 0, "dk hook-formula division must be exact"
    return num // denom
