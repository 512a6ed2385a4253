"""Exact truncated multivariate power series with polynomial coefficients.

``TruncSeries`` is a quotient-ring element: variables with a total-degree cap
(and optional per-variable caps), coefficients being :class:`ParamPoly` so
that series may carry parameters (alpha, beta, z, ...).  All arithmetic is
exact over rationals; log/exp demand nilpotent arguments (hard errors
otherwise).  Derivatives are exact up to total degree ``order - 1``; use
:meth:`TruncSeries.truncate` before comparing series of different pedigree.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .formulas import ParamPoly
from .trees import directions as _directions

__all__ = [
    "TruncSeries",
    "pump",
    "solve_N",
    "solve_M",
    "closed_N_ab",
    "closed_hook_gf",
    "closed_hook_log_gf",
    "solve_N_dk",
    "solve_Bp_Op",
]

Exponent = tuple[int, ...]


class TruncSeries:
    """Immutable truncated power series; coefficients are ParamPoly."""

    __slots__ = ("variables", "order", "var_caps", "coeffs")

    def __init__(self, variables: tuple[str, ...], order: int,
                 coeffs: dict[Exponent, ParamPoly] | None = None,
                 var_caps: tuple[int, ...] | None = None):
        self.variables = tuple(variables)
        self.order = order
        self.var_caps = tuple(var_caps) if var_caps is not None else None
        if self.var_caps is not None and len(self.var_caps) != len(self.variables):
            raise ValueError("one cap per variable required")
        clean: dict[Exponent, ParamPoly] = {}
        for expo, poly in (coeffs or {}).items():
            if len(expo) != len(self.variables) or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent {expo}")
            if not self._within(expo):
                continue
            if not isinstance(poly, ParamPoly):
                poly = ParamPoly.constant(poly)
            if poly:
                clean[tuple(expo)] = poly
        self.coeffs = clean

    def _within(self, expo: Exponent) -> bool:
        if sum(expo) > self.order:
            return False
        if self.var_caps is not None and any(
            e > c for e, c in zip(expo, self.var_caps)
        ):
            return False
        return True

    def _context(self) -> tuple:
        return (self.variables, self.order, self.var_caps)

    def _like(self, coeffs: dict[Exponent, ParamPoly]) -> "TruncSeries":
        return TruncSeries(self.variables, self.order, coeffs, self.var_caps)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(value, variables: tuple[str, ...], order: int,
                 var_caps: tuple[int, ...] | None = None) -> "TruncSeries":
        if not isinstance(value, ParamPoly):
            value = ParamPoly.constant(value)
        zero = (0,) * len(variables)
        return TruncSeries(variables, order, {zero: value}, var_caps)

    @staticmethod
    def var(name: str, variables: tuple[str, ...], order: int,
            var_caps: tuple[int, ...] | None = None) -> "TruncSeries":
        expo = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name} not among {variables}")
        return TruncSeries(variables, order, {expo: ParamPoly.constant(1)}, var_caps)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            if other._context() != self._context():
                raise ValueError("incompatible series contexts")
            return other
        return TruncSeries.constant(other, self.variables, self.order, self.var_caps)

    def __add__(self, other) -> "TruncSeries":
        other = self._coerce(other)
        coeffs = dict(self.coeffs)
        for expo, poly in other.coeffs.items():
            coeffs[expo] = coeffs.get(expo, ParamPoly.constant(0)) + poly
        return self._like(coeffs)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return self._like({e: -p for e, p in self.coeffs.items()})

    def __sub__(self, other) -> "TruncSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self._like(
                {e: p * other for e, p in self.coeffs.items()}
            )
        other = self._coerce(other)
        coeffs: dict[Exponent, ParamPoly] = {}
        for e1, p1 in self.coeffs.items():
            for e2, p2 in other.coeffs.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                if not self._within(expo):
                    continue
                coeffs[expo] = coeffs.get(expo, ParamPoly.constant(0)) + p1 * p2
        return self._like(coeffs)

    def __rmul__(self, other) -> "TruncSeries":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            raise ValueError("negative power; use inverse()")
        out = TruncSeries.constant(1, self.variables, self.order, self.var_caps)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            other = self._coerce(other)
        if other._context() != self._context():
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        zero = ParamPoly.constant(0)
        return all(
            self.coeffs.get(k, zero) == other.coeffs.get(k, zero) for k in keys
        )

    def __hash__(self):
        raise TypeError("TruncSeries is not hashable")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- calculus ----------------------------------------------------------

    def partial_derivative(self, v: str) -> "TruncSeries":
        """d/dv; exact up to total degree order - 1."""
        idx = self.variables.index(v)
        coeffs: dict[Exponent, ParamPoly] = {}
        for expo, poly in self.coeffs.items():
            if expo[idx] == 0:
                continue
            new = expo[:idx] + (expo[idx] - 1,) + expo[idx + 1:]
            coeffs[new] = poly * expo[idx]
        return self._like(coeffs)

    def integral_from_zero(self, v: str) -> "TruncSeries":
        """Integral from 0 in v; terms pushed beyond the cap are dropped."""
        idx = self.variables.index(v)
        coeffs: dict[Exponent, ParamPoly] = {}
        for expo, poly in self.coeffs.items():
            new = expo[:idx] + (expo[idx] + 1,) + expo[idx + 1:]
            coeffs[new] = poly * Fraction(1, expo[idx] + 1)
        return self._like(coeffs)

    def constant_term(self) -> ParamPoly:
        return self.coeffs.get((0,) * len(self.variables), ParamPoly.constant(0))

    def is_nilpotent(self) -> bool:
        return not self.constant_term()

    def exp(self) -> "TruncSeries":
        """exp of a nilpotent series."""
        if not self.is_nilpotent():
            raise ValueError("exp requires a zero constant term")
        out = TruncSeries.constant(1, self.variables, self.order, self.var_caps)
        term = out
        bound = self._nilpotency_bound()
        for k in range(1, bound + 1):
            term = term * self * Fraction(1, k)
            out = out + term
        return out

    def log(self) -> "TruncSeries":
        """log of a series with constant term 1."""
        if self.constant_term() != ParamPoly.constant(1):
            raise ValueError("log requires constant term 1")
        g = self - 1
        out = TruncSeries.constant(0, self.variables, self.order, self.var_caps)
        term = TruncSeries.constant(1, self.variables, self.order, self.var_caps)
        bound = g._nilpotency_bound()
        for k in range(1, bound + 1):
            term = term * g
            out = out + term * Fraction((-1) ** (k + 1), k)
        return out

    def inverse(self) -> "TruncSeries":
        """1/f for f with an invertible (nonzero rational) constant term."""
        c = self.constant_term().as_fraction()
        if c == 0:
            raise ValueError("inverse requires a nonzero constant term")
        g = (self * Fraction(1, c)) - 1
        out = TruncSeries.constant(1, self.variables, self.order, self.var_caps)
        term = out
        bound = g._nilpotency_bound()
        for _ in range(bound):
            term = term * (-g)
            out = out + term
        return out * Fraction(1, c)

    def _nilpotency_bound(self) -> int:
        """Smallest m with (series minus constant)^m = 0 under truncation."""
        degrees = [sum(e) for e in self.coeffs if any(e)]
        if not degrees:
            return 0
        return self.order // min(degrees) + 1

    def compose_into_nilpotent(self, g: "TruncSeries", v: str) -> "TruncSeries":
        """Substitute the nilpotent series g for the variable v."""
        g = self._coerce(g)
        if not g.is_nilpotent():
            raise ValueError("composition requires a zero constant term")
        idx = self.variables.index(v)
        out = TruncSeries.constant(0, self.variables, self.order, self.var_caps)
        powers = [TruncSeries.constant(1, self.variables, self.order,
                                       self.var_caps)]
        for expo, poly in sorted(self.coeffs.items()):
            k = expo[idx]
            while len(powers) <= k:
                powers.append(powers[-1] * g)
            rest = expo[:idx] + (0,) + expo[idx + 1:]
            mono = TruncSeries(self.variables, self.order,
                               {rest: poly}, self.var_caps)
            out = out + mono * powers[k]
        return out

    # -- queries and reshaping --------------------------------------------

    def coefficient(self, **powers: int) -> ParamPoly:
        expo = tuple(powers.get(v, 0) for v in self.variables)
        extra = set(powers) - set(self.variables)
        if extra:
            raise KeyError(f"unknown variables {extra}")
        return self.coeffs.get(expo, ParamPoly.constant(0))

    def truncate(self, order: int,
                 var_caps: tuple[int, ...] | None = None) -> "TruncSeries":
        return TruncSeries(self.variables, order, self.coeffs,
                           var_caps if var_caps is not None else None)

    def map_coefficients(self, fn) -> "TruncSeries":
        return self._like({e: fn(p) for e, p in self.coeffs.items()})

    def substitute_params(self, **values) -> "TruncSeries":
        return self.map_coefficients(lambda p: p.substitute(**values))

    def restrict_zero(self, v: str) -> "TruncSeries":
        """Set variable v to 0 and drop it from the context."""
        idx = self.variables.index(v)
        variables = self.variables[:idx] + self.variables[idx + 1:]
        caps = None
        if self.var_caps is not None:
            caps = self.var_caps[:idx] + self.var_caps[idx + 1:]
        coeffs = {
            e[:idx] + e[idx + 1:]: p
            for e, p in self.coeffs.items()
            if e[idx] == 0
        }
        return TruncSeries(variables, self.order, coeffs, caps)

    def rename_variables(self, mapping: dict[str, str]) -> "TruncSeries":
        variables = tuple(mapping.get(v, v) for v in self.variables)
        return TruncSeries(variables, self.order, dict(self.coeffs),
                           self.var_caps)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0 + O(^{})".format(self.order + 1)
        terms = []
        for expo in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, expo) if e
            )
            poly = repr(self.coeffs[expo])
            if "+" in poly or "-" in poly:
                poly = f"({poly})"
            terms.append(f"{poly}*{mono}" if mono else poly)
        return " + ".join(terms) + f" + O(^{self.order + 1})"


# --------------------------------------------------------------------------
# The pumping function and fixed-point solvers
# --------------------------------------------------------------------------


def pump(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """B(f, g) = int_0^x int_0^y (d/dy f)(d/dx g)."""
    prod = f.partial_derivative("y") * g.partial_derivative("x")
    return prod.integral_from_zero("x").integral_from_zero("y")


def _solve_fixed_point(initial: TruncSeries, step, max_iter: int) -> TruncSeries:
    cur = initial
    for _ in range(max_iter + 2):
        nxt = step(cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise RuntimeError("fixed-point iteration failed to converge")


def solve_N(order: int) -> TruncSeries:
    """Doubly exponential counting series in (x, y): N = (1+int_x N)(1+int_y N)."""
    one = TruncSeries.constant(1, ("x", "y"), order)

    def step(n: TruncSeries) -> TruncSeries:
        return (one + n.integral_from_zero("x")) * (one + n.integral_from_zero("y"))

    return _solve_fixed_point(one, step, order)


def solve_M(order: int) -> TruncSeries:
    """Series with M = x + y + int int (d/dx M)(d/dy M); N = d/dx d/dy M."""
    xy = (TruncSeries.var("x", ("x", "y"), order)
          + TruncSeries.var("y", ("x", "y"), order))

    def step(m: TruncSeries) -> TruncSeries:
        prod = m.partial_derivative("x") * m.partial_derivative("y")
        return xy + prod.integral_from_zero("x").integral_from_zero("y")

    return _solve_fixed_point(xy, step, order)


def _exp_minus_one(v: str, variables: tuple[str, ...], order: int) -> TruncSeries:
    x = TruncSeries.var(v, variables, order)
    return x.exp() - 1


def closed_N_ab(order: int) -> TruncSeries:
    """Expansion of e^(ax+by) / (1 - (e^x-1)(e^y-1))^(a+b), a = alpha, b = beta."""
    variables = ("x", "y")
    alpha = ParamPoly.var("alpha", ("alpha", "beta"))
    beta = ParamPoly.var("beta", ("alpha", "beta"))
    x = TruncSeries.var("x", variables, order)
    y = TruncSeries.var("y", variables, order)
    numerator = (x * alpha + y * beta).exp()
    u = _exp_minus_one("x", variables, order) * _exp_minus_one("y", variables, order)
    one = TruncSeries.constant(1, variables, order)
    # (1-u)^-(alpha+beta) = exp(-(alpha+beta) log(1-u)), u nilpotent
    power = ((one - u).log() * (-(alpha + beta))).exp()
    return numerator * power


def closed_hook_gf(order: int) -> TruncSeries:
    """Expansion of z e^(ax+by) / (1 - z(e^x-1)(e^y-1))^(a+b)."""
    variables = ("x", "y")
    alpha = ParamPoly.var("alpha", ("alpha", "beta", "z"))
    beta = ParamPoly.var("beta", ("alpha", "beta", "z"))
    z = ParamPoly.var("z", ("alpha", "beta", "z"))
    x = TruncSeries.var("x", variables, order)
    y = TruncSeries.var("y", variables, order)
    numerator = (x * alpha + y * beta).exp() * z
    u = _exp_minus_one("x", variables, order) * _exp_minus_one("y", variables, order)
    one = TruncSeries.constant(1, variables, order)
    power = ((one - u * z).log() * (-(alpha + beta))).exp()
    return numerator * power


def closed_hook_log_gf(order: int) -> TruncSeries:
    """Expansion of -log(1 - z(e^x-1)(e^y-1)): the unrefined hook statistic."""
    variables = ("x", "y")
    z = ParamPoly.var("z")
    u = _exp_minus_one("x", variables, order) * _exp_minus_one("y", variables, order)
    one = TruncSeries.constant(1, variables, order)
    return -((one - u * z).log())


def solve_N_dk(d: int, k: int, order: int) -> TruncSeries:
    """Fixed point of N = prod over directions pi of (1 + int_pi N).

    Variables x1..xd; truncation is per-variable at ``order`` (total degree
    up to d * order), since coefficients of interest live in the box.
    """
    dirs = _directions(d, k)
    variables = tuple(f"x{i}" for i in range(1, d + 1))
    caps = (order,) * d
    one = TruncSeries.constant(1, variables, d * order, caps)

    def step(n: TruncSeries) -> TruncSeries:
        out = one
        for pi in dirs:
            term = n
            for i in pi:
                term = term.integral_from_zero(f"x{i}")
            out = out * (one + term)
        return out

    return _solve_fixed_point(one, step, d * order)


def solve_Bp_Op(order: int) -> tuple[TruncSeries, TruncSeries]:
    """Hook-statistic series over binary trees, two functional equations.

    Both live in (x, t): x marks vertices, t marks hooks.
      B_p = 1 + x t (1/(1 - x B_p))^2
      O_p = 1/(1 - x(O_p - 1)) * (1 + x t/(1 - x O_p))
    """
    variables = ("x", "t")
    caps = (order, order)
    total = 2 * order
    one = TruncSeries.constant(1, variables, total, caps)
    x = TruncSeries.var("x", variables, total, caps)
    t = TruncSeries.var("t", variables, total, caps)

    def step_b(b: TruncSeries) -> TruncSeries:
        return one + x * t * ((one - x * b).inverse()) ** 2

    def step_o(o: TruncSeries) -> TruncSeries:
        return ((one - x * (o - one)).inverse()
                * (one + x * t * (one - x * o).inverse()))

    b = _solve_fixed_point(one, step_b, total)
    o = _solve_fixed_point(one, step_o, total)
    return b, o


def phi_weight(w: tuple[int, ...], variables: tuple[str, ...],
               order: int, var_caps: tuple[int, ...] | None = None) -> TruncSeries:
    """The monomial prod x_i^(w_i) / w_i! attached to a geometric size."""
    coeff = Fraction(1)
    for wi in w:
        coeff /= factorial(wi)
    return TruncSeries(variables, order, {tuple(w): ParamPoly.constant(coeff)},
                       var_caps)
