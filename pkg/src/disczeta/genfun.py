"""Generating functions for discriminant strata and their stable limits.

The series built here (all truncated in t):

* ``zeta_series``     -- Z_X(t) = sum [Sym^n X] t^n.
* ``zeta_s_series``   -- Z^[s]_X(t) = sum over partitions with s parts of
  w_lambda t^(sum lambda): configurations supported on exactly s points.
* ``k_lt_a_nu``       -- K_(<a)nu(t): configurations of points with all
  unmarked multiplicities < a decorating a fixed pattern nu.
* ``kbar_nu``         -- Kbar_{1*nu}(t) = sum_j [wbar_{1^j nu}] t^j, closures.
* ``sym_s_series``    -- configurations with exactly s multiple points.
* ``zinv_lambda``     -- the inverse-zeta analogues graded by point count.
* densities and stable limits expressed through motivic zeta values.

Two t-gradings coexist and must not be mixed silently: configuration series
grade t by total multiplicity, the hypersurface series by number of points.
The one sanctioned bridge is the identity
``Z^[s](t) = zinv_{*^s}(t) * Z(t)``, used (and asserted) in the density
computations; see ``hyper_density``.

Coefficient of t^n never involves S_k with k > n, so truncation at N keeps
all symmetric-power generators at index <= N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import partitions as pt
from .errors import (
    DivergenceError,
    InputError,
    InternalCheckError,
    SymbolicEvaluationError,
)
from .models import COUNT, EULER, HODGE, MOTIVIC, Specialization, UVPoly, XModel, zeta_coeffs
from .motive import (
    GRADING_MULT,
    GRADING_POINTS,
    NEG_INF,
    LaurentL,
    MotivicClass,
    TruncSeries,
    eval_at_L_power,
)
from .partitions import GenPartition, int_partition

# ---------------------------------------------------------------------------
# universal classes of strata


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if k in (0, n):
        return 1 if k == n else 0
    if k > n or k < 0:
        return 0
    return _stirling2(n - 1, k - 1) + k * _stirling2(n - 1, k)


import itertools as _it


@lru_cache(maxsize=None)
def _w_profile(profile: tuple[int, ...]) -> MotivicClass:
    """[w_lambda] for any lambda with multiplicity profile ``profile``.

    Three routes, all equivalent to the signed sum over <<-chains:

    * all-distinct profiles (1,...,1): every merge of the formalization again
      has all parts distinct (distinct subsets of free generators have
      distinct sums), so the closure contributes Stirling numbers;
    * a single repeated value (c,): the closure of a free c-fold value runs
      over integer partitions of c;
    * mixed profiles: the product rule.  Configurations labeled a^c times
      configurations labeled by the rest decompose as the disjoint pattern
      plus collision strata, one for each choice of how many points of each
      remaining value land on distinct a-points.
    """
    if not profile:
        return MotivicClass.one()
    if all(m == 1 for m in profile):
        k = len(profile)
        acc = MotivicClass.sym(1)
        for _ in range(k - 1):
            acc = acc * MotivicClass.sym(1)
        for j in range(1, k):
            acc = acc - _stirling2(k, j) * _w_profile((1,) * j)
        return acc
    if len(profile) == 1:
        c = profile[0]
        acc = MotivicClass.sym(c)
        for k in range(1, c):
            for pi in pt.enumerate_k_parts(k, c):
                if sum(pi) == c:
                    acc = acc - _w_profile(_profile_of_ints(pi))
        return acc
    c, rest = profile[0], profile[1:]
    acc = _w_profile((c,)) * _w_profile(rest)
    for ks in _it.product(*[range(m + 1) for m in rest]):
        total = sum(ks)
        if not 1 <= total <= c:
            continue
        collided: list[int] = [] if total == c else [c - total]
        for m, k in zip(rest, ks):
            if k:
                collided.append(k)
            if m - k:
                collided.append(m - k)
        acc = acc - _w_profile(tuple(sorted(collided, reverse=True)))
    return acc


def _formalization_with_profile(profile: tuple[int, ...]) -> GenPartition:
    parts = []
    for i, m in enumerate(profile, start=1):
        parts.extend([pt.Part.gen(f"a{i}")] * m)
    return GenPartition.of(parts)


def w_class(lam: GenPartition | tuple[int, ...]) -> MotivicClass:
    """The open stratum [w_lambda] as a polynomial in S_1, S_2, ...

    Depends only on the multiplicity profile of lambda.
    """
    profile = lam if isinstance(lam, tuple) else pt.multiplicity_profile(lam)
    return _w_profile(tuple(sorted(profile, reverse=True)))


def w_class_from_chains(lam: GenPartition) -> MotivicClass:
    """Independent route to [w_lambda]: the signed sum over <<-chains."""
    acc = MotivicClass.zero()
    for chain in pt.ll_chains(lam):
        sign = -1 if (len(chain) - 1) % 2 else 1
        term = MotivicClass.sym_product(pt.multiplicity_profile(chain[-1]))
        acc = acc + sign * term
    return acc


def wbar_class(lam: GenPartition) -> MotivicClass:
    """The closed stratum [wbar_lambda] = sum of w_mu over the merge closure."""
    acc = MotivicClass.zero()
    for mu in pt.merge_closure(lam):
        acc = acc + _w_profile(pt.multiplicity_profile(mu))
    return acc


@lru_cache(maxsize=None)
def _w_image(X: XModel, spec: Specialization | None, profile: tuple[int, ...]):
    return X.specialize(_w_profile(profile), spec)


def w_of(X: XModel, profile: tuple[int, ...], spec: Specialization | None = None):
    """[w_lambda] specialized through an X-model."""
    return _w_image(X, spec, tuple(sorted(profile, reverse=True)))


# ---------------------------------------------------------------------------
# configuration series


def zeta_series(X: XModel, N: int, spec: Specialization | None = None) -> TruncSeries:
    """Z_X(t) truncated at order N."""
    return zeta_coeffs(X, N, spec)


def zeta_s_series(X: XModel, s: int, N: int, spec: Specialization | None = None) -> TruncSeries:
    """Z^[s]_X(t): the locus of Sym^n X supported on exactly s geometric points."""
    if s < 0:
        raise InputError("s must be >= 0")
    coeffs: list = [0] * (N + 1)
    for lam in pt.enumerate_k_parts(s, N):
        coeffs[sum(lam)] = coeffs[sum(lam)] + w_of(X, _profile_of_ints(lam), spec)
    return TruncSeries.from_coeffs(coeffs)


def _profile_of_ints(lam: tuple[int, ...]) -> tuple[int, ...]:
    return pt.multiplicity_profile(GenPartition.integers(lam)) if lam else ()


def k_lt_a_nu(
    X: XModel, nu, a: int, N: int, spec: Specialization | None = None
) -> TruncSeries:
    """K_(<a)nu(t): multiplicity-< a configurations decorating the pattern nu.

    nu must have all parts at least a (the recursion formalizes nu, which is
    only sound when its parts cannot collide with the small parts).
    """
    nu = int_partition(nu)
    if a < 2:
        raise InputError(f"a must be >= 2, got {a}")
    if any(p < a for p in nu):
        raise InputError(f"all parts of nu must be >= a={a}, got {nu}")
    return _k_profile(X, spec, _profile_of_ints(nu), a, N)


@lru_cache(maxsize=None)
def _k_profile(
    X: XModel, spec: Specialization | None, profile: tuple[int, ...], a: int, order: int
) -> TruncSeries:
    Z = zeta_series(X, order, spec)
    base = Z * Z.compose_power(a).inverse()
    if not profile:
        return base
    nu = _formalization_with_profile(profile)
    members = pt.add_lt_a(nu, a)
    numerator = base.scale(w_of(X, profile, spec))
    den = [0] * (order + 1)
    smaller: dict[tuple[tuple[int, ...], int], int] = {}
    for member, same in members:
        excess = pt.stats(member).total.coeff(pt.UNIT)
        if same:
            if excess <= order:
                den[excess] += 1
        else:
            prof2 = pt.multiplicity_profile(member)
            if not pt.leq_profiles(prof2, profile):
                raise InternalCheckError(
                    f"profiles {prof2} and {profile} are incomparable in the merge order"
                )
            key = (prof2, excess)
            smaller[key] = smaller.get(key, 0) + 1
    if den[0] != 1:
        raise InternalCheckError("denominator of the K-recursion lost its constant term 1")
    for (prof2, excess), count in smaller.items():
        term = _k_profile(X, spec, prof2, a, order).shift_up(excess).scale(count)
        numerator = numerator - term
    return numerator * TruncSeries.from_coeffs(den).inverse()


def kbar_nu(X: XModel, nu, N: int, spec: Specialization | None = None) -> TruncSeries:
    """Kbar_{1*nu}(t) = sum_j [wbar_{1^j nu}] t^j for nu with all parts >= 2.

    Peels the smallest part a of nu:
    Kbar_{1*(a nu')} = (Kbar_{1*nu'} - sum_{mu in S(nu',a)} K_(<a)mu
    t^(sum mu - sum nu')) / t^a, asserting that every negative power of t
    cancels.
    """
    nu = int_partition(nu)
    if any(p < 2 for p in nu):
        raise InputError(f"kbar_nu needs all parts >= 2, got {nu}")
    return _kbar_rec(X, spec, nu, N)


def _kbar_rec(
    X: XModel, spec: Specialization | None, nu: tuple[int, ...], order: int
) -> TruncSeries:
    if not nu:
        return zeta_series(X, order, spec)
    a, rest = nu[0], nu[1:]
    acc = _kbar_rec(X, spec, rest, order + a)
    total_rest = sum(rest)
    for mu in sorted(pt.s_set(rest, a)):
        excess = sum(mu) - total_rest
        K = _k_profile(X, spec, _profile_of_ints(mu), a, order + a)
        acc = acc - K.shift_up(excess)
    return acc.shift_down(a)


def kbar_abr_closed(
    X: XModel, a: int, b: int, r: int, N: int, spec: Specialization | None = None
) -> TruncSeries:
    """Closed form of Kbar_{1*(a b^r)}(t):

    t^(-a-rb) ( Z(t) - Z(t)/Z(t^b) * sum_{i<r} [Sym^i X] t^(bi)
                      - Z(t)/Z(t^a) * [Sym^r X] t^(rb) ).
    """
    if not (1 < a <= b) or r < 0:
        raise InputError(f"need 1 < a <= b and r >= 0, got a={a}, b={b}, r={r}")
    shift = a + r * b
    order = N + shift
    Z = zeta_series(X, order, spec)
    acc = Z
    ratio_b = Z * Z.compose_power(b).inverse()
    for i in range(r):
        acc = acc - ratio_b.scale(X.sym(i, spec)).shift_up(b * i)
    ratio_a = Z * Z.compose_power(a).inverse()
    acc = acc - ratio_a.scale(X.sym(r, spec)).shift_up(r * b)
    return acc.shift_down(shift)


def sym_s_series(X: XModel, s: int, N: int, spec: Specialization | None = None) -> TruncSeries:
    """sum_j [Sym^j_s X] t^j = Z^[s](t^2) Z(t) / Z(t^2): exactly s multiple points."""
    if s < 0:
        raise InputError("s must be >= 0")
    zs = zeta_s_series(X, s, N, spec)
    Z = zeta_series(X, N, spec)
    return zs.compose_power(2) * Z * Z.compose_power(2).inverse()


def zinv_lambda(
    X: XModel, lam: GenPartition, N_pts: int, spec: Specialization | None = None
) -> TruncSeries:
    """Z^-1_{X,lambda}(t) = sum over mu in Q of (-1)^||mu|| w_{lambda.mu} t^|lambda.mu|.

    The t-exponent counts points (not multiplicity); lambda.mu is the disjoint
    concatenation, so only the profiles are joined.
    """
    base_profile = pt.multiplicity_profile(lam)
    s0 = len(lam)
    if N_pts < 0:
        raise InputError("N_pts must be >= 0")
    coeffs: list = [0] * (N_pts + 1)
    for mu in pt.enumerate_Q(max(N_pts - s0, 0)):
        k = s0 + len(mu)
        if k > N_pts:
            continue
        sign = -1 if pt.q_distinct(mu) % 2 else 1
        prof = tuple(sorted(base_profile + _profile_of_ints(mu), reverse=True))
        coeffs[k] = coeffs[k] + sign * w_of(X, prof, spec)
    return TruncSeries.from_coeffs(coeffs, GRADING_POINTS)


# ---------------------------------------------------------------------------
# evaluation at powers of L, by target ring


class _Eval:
    __slots__ = ("value", "tail")

    def __init__(self, value, tail):
        self.value = value
        self.tail = tail


def _count_q(X: XModel, spec: Specialization | None) -> int:
    spec = spec or X.natural_spec()
    if spec.q is not None:
        return spec.q
    if X.kind == "counts":
        return X.params[0]
    raise InputError("count evaluation needs q")


def _eval_series(
    f: TruncSeries,
    X: XModel,
    spec: Specialization | None,
    m: int,
    cutoff: int,
    require_margin: bool = True,
) -> _Eval:
    """sum_n f_n L^(-mn) in the target ring, truncated at codimension cutoff."""
    target = (spec or X.natural_spec()).target
    d = X.dim
    if target == MOTIVIC:
        res = eval_at_L_power(f, m, d, cutoff, require_margin=require_margin)
        return _Eval(res.value, res.discarded_dim)
    if target == COUNT:
        q = _count_q(X, spec)
        if require_margin and m <= d:
            raise DivergenceError(f"evaluation at q^-{m} diverges for dimension {d}")
        total = Fraction(0)
        last = Fraction(0)
        for n, c in enumerate(f.coeffs):
            term = Fraction(c) / Fraction(q) ** (m * n)
            total += term
            if term:
                last = term
        return _Eval(total, abs(last))
    if target == HODGE:
        if require_margin and m <= d:
            raise DivergenceError(f"evaluation at (uv)^-{m} diverges for dimension {d}")
        total = UVPoly.from_int(0)
        dropped = NEG_INF
        for n, c in enumerate(f.coeffs):
            if isinstance(c, int):
                c = UVPoly.from_int(c)
            term = c * UVPoly.term(1, -m * n, -m * n)
            term, drop = term.truncate_below_weight(-2 * cutoff)
            dropped = max(dropped, drop)
            total = total + term
        return _Eval(total, dropped)
    raise SymbolicEvaluationError(
        f"the {target} target does not support evaluation at powers of L"
    )


def _truncate_value(value, X: XModel, spec: Specialization | None, cutoff: int):
    target = (spec or X.natural_spec()).target
    if target == MOTIVIC:
        kept, _ = value.truncate_below_dim(X.dim, -cutoff)
        return kept
    if target == HODGE:
        kept, _ = value.truncate_below_weight(-2 * cutoff)
        return kept
    return value


def _L_power_value(X: XModel, spec: Specialization | None, exp: int):
    """L^exp in the target ring."""
    target = (spec or X.natural_spec()).target
    if target == MOTIVIC:
        return MotivicClass.lefschetz(exp)
    if target == COUNT:
        return Fraction(_count_q(X, spec)) ** exp
    if target == HODGE:
        return UVPoly.term(1, exp, exp)
    raise SymbolicEvaluationError(f"no L-power in the {target} target")


# ---------------------------------------------------------------------------
# densities of singular divisors


@dataclass(frozen=True)
class HypersurfaceDensity:
    """A limiting density of divisors in a very positive linear system."""

    d: int
    s: int | None
    value: object
    expression: str
    codim_cutoff: int
    tail_indicator: object


def _star_profile(s: int) -> GenPartition:
    return GenPartition.of([pt.Part.gen("star")] * s) if s else GenPartition.empty()


def hyper_density(
    X: XModel, d: int, s: int, cutoff: int, spec: Specialization | None = None
) -> HypersurfaceDensity:
    """Limiting density of divisors with exactly s singular geometric points:
    zeta^[s]_X(d+1) / zeta_X(d+1).

    Computed two ways and cross-checked: through Z^[s] and Z evaluated at
    t = L^-(d+1), and through the point-graded inverse series zinv_{*^s}.
    """
    _check_hyper_args(X, d)
    if s < 0:
        raise InputError("s must be >= 0")
    # term k has dimension <= -k, so order cutoff+1 already covers the cutoff
    order = cutoff + 1
    Z = zeta_series(X, order, spec)
    E = zeta_s_series(X, s, order, spec) * Z.inverse()
    zi = zinv_lambda(X, _star_profile(s), order, spec)
    if E != zi.regraded(GRADING_MULT):
        raise InternalCheckError(
            "Z^[s] * Z^-1 disagrees with the point-graded inverse series zinv_{*^s}"
        )
    v1 = _eval_series(E, X, spec, d + 1, cutoff)
    v2 = _eval_series(zi, X, spec, d + 1, cutoff)
    if v1.value != v2.value:
        raise InternalCheckError("the two density pipelines evaluated differently")
    expr = f"zeta^[{s}]_X({d + 1})/zeta_X({d + 1})" if s else f"1/zeta_X({d + 1})"
    return HypersurfaceDensity(d, s, v1.value, expr, cutoff, v1.tail)


def hyper_ordered_density(
    X: XModel, d: int, s: int, cutoff: int, spec: Specialization | None = None
) -> HypersurfaceDensity:
    """Limiting density with a choice of s ordered singular points:
    [X^s - diagonal] / zeta_X(d+1) * (L^-(d+1) / (1 - L^-(d+1)))^s.
    """
    _check_hyper_args(X, d)
    if s < 0:
        raise InputError("s must be >= 0")
    m = d + 1
    inner = cutoff + s * d + 2
    w_img = w_of(X, (1,) * s, spec)
    zeta_inv = _eval_series(zeta_series(X, inner, spec).inverse(), X, spec, m, inner)
    target = (spec or X.natural_spec()).target
    if target == COUNT:
        q = Fraction(_count_q(X, spec))
        factor = (q**-m) / (1 - q**-m)
        value = w_img * factor**s * zeta_inv.value
    else:
        geom_coeffs = [0] + [1] * inner  # t + t^2 + ... = L^-m/(1 - L^-m) after eval
        geom = _eval_series(TruncSeries.from_coeffs(geom_coeffs), X, spec, m, inner).value
        value = zeta_inv.value
        for _ in range(s):
            value = value * geom
        value = w_img * value
        value = _truncate_value(value, X, spec, cutoff)
    expr = f"[X^{s}-diag]/zeta_X({m}) * (L^-{m}/(1-L^-{m}))^{s}"
    return HypersurfaceDensity(d, s, value, expr, cutoff, zeta_inv.tail)


def multi_point_density(
    X: XModel, d: int, m: int, cutoff: int, spec: Specialization | None = None
) -> HypersurfaceDensity:
    """Limiting density of divisors with no m-multiple point: 1/zeta_X(C(d+m-1, d))."""
    _check_hyper_args(X, d)
    if m < 2:
        raise InputError("m must be >= 2")
    arg = math.comb(d + m - 1, d)
    order = cutoff + 2
    res = _eval_series(zeta_series(X, order, spec).inverse(), X, spec, arg, cutoff)
    return HypersurfaceDensity(d, None, res.value, f"1/zeta_X({arg})", cutoff, res.tail)


def _check_hyper_args(X: XModel, d: int) -> None:
    if d < 1:
        raise InputError("hypersurface densities need d >= 1")
    if X.dim != d:
        raise InputError(f"model dimension {X.dim} does not match d={d}")


# ---------------------------------------------------------------------------
# stable limits of configuration series


@dataclass(frozen=True)
class LimitReport:
    """A stable-limit value with its cutoff, tail indicator and provenance."""

    value: object
    codim_cutoff: int
    tail_indicator: object
    normalization: str
    zeta_expression: str


def default_limit_order(cutoff: int) -> int:
    return 2 * cutoff + 8


def stable_limit(
    Y: TruncSeries,
    X: XModel,
    normalization: str = "Sym",
    cutoff: int = 10,
    spec: Specialization | None = None,
    expression: str = "E(M^-1) with E = Y/Z_X",
) -> LimitReport:
    """lim_j Y_j / [Sym^j X] (or / M^j): write Y = E * Z_X and evaluate E(M^-1).

    The Sym normalization is E(M^-1) itself; the M-power normalization
    multiplies by the stable symmetric-power class of X, which is only
    available for the rational models built in.
    """
    if normalization not in ("Sym", "M"):
        raise InputError("normalization must be 'Sym' or 'M'")
    if Y.grading != GRADING_MULT:
        raise InputError("stable limits apply to multiplicity-graded series")
    Z = zeta_series(X, Y.order, spec)
    E = Y * Z.inverse()
    res = _eval_converging(E, X, spec, cutoff)
    value = res.value
    if normalization == "M":
        value = value * _stable_sym_class(X, spec, cutoff)
        value = _truncate_value(value, X, spec, cutoff)
    label = "by M^j" if normalization == "M" else "by Sym^j"
    return LimitReport(value, cutoff, res.tail, label, expression)


def _eval_converging(E: TruncSeries, X: XModel, spec: Specialization | None, cutoff: int) -> _Eval:
    """Evaluate E at t = M^-1 = L^-dim, verifying decay over a tail window."""
    d = X.dim
    res = _eval_series(E, X, spec, max(d, 1), cutoff, require_margin=False)
    window = range(max(1, E.order - max(3, E.order // 4) + 1), E.order + 1)
    target = (spec or X.natural_spec()).target
    for n in window:
        c = E.coeffs[n]
        if target == MOTIVIC:
            if isinstance(c, int):
                dim_c = 0 if c else NEG_INF
            elif isinstance(c, LaurentL):
                dim_c = c.dimension()
            else:
                dim_c = c.dimension(d)
            if dim_c - d * n >= -cutoff:
                raise DivergenceError(
                    f"E(M^-1) does not visibly converge: term {n} has dimension {dim_c - d * n}"
                )
        elif target == COUNT:
            q = _count_q(X, spec)
            if abs(Fraction(c)) / Fraction(q) ** (d * n) >= Fraction(1, q**cutoff):
                raise DivergenceError(f"E(q^-d) does not visibly converge at term {n}")
        elif target == HODGE:
            if isinstance(c, UVPoly) and c.weight() - 2 * d * n >= -2 * cutoff:
                raise DivergenceError(f"E((uv)^-d) does not visibly converge at term {n}")
    return res


def _stable_sym_class(X: XModel, spec: Specialization | None, cutoff: int):
    """lim [Sym^n X]/M^n for the built-in rational models."""
    target = (spec or X.natural_spec()).target
    if X.kind == "affine" or (X.kind == "counts" and X.params[1] is None):
        return X.ring_one(spec)
    if X.kind in ("projline", "projspace"):
        top = 1 if X.kind == "projline" else X.params[0]
        if target == COUNT:
            q = Fraction(_count_q(X, spec))
            out = Fraction(1)
            for i in range(1, top + 1):
                out *= 1 / (1 - q**-i)
            return out
        if target == MOTIVIC:
            out = MotivicClass.one()
            for i in range(1, top + 1):
                geom = MotivicClass.from_laurent(
                    LaurentL.of({-i * k: 1 for k in range(cutoff // i + 1)})
                )
                out = out * geom
            kept, _ = out.truncate_below_dim(X.dim, -cutoff)
            return kept
    raise InputError(
        f"the M-power normalization needs the stable symmetric-power class, "
        f"which is not available for the {X.kind} model; use Sym"
    )


def distinct_nu_limit(
    X: XModel, nu, cutoff: int, spec: Specialization | None = None
) -> LimitReport:
    """lim_j [w_{1^j nu}]/[Sym^(j+sum nu) X] for nu with distinct parts all > 1:

    (w_nu / zeta_X(2d)) * L^(-d sum nu) / (1 + L^-d)^|nu|,
    cross-checked against the K_(<2)nu recursion.
    """
    nu = int_partition(nu)
    if any(p < 2 for p in nu):
        raise InputError(f"distinct_nu_limit needs all parts > 1, got {nu}")
    if len(set(nu)) != len(nu):
        raise InputError(f"distinct_nu_limit needs distinct parts, got {nu}")
    d = X.dim
    shift = d * sum(nu)
    inner_cutoff = cutoff + shift
    order = default_limit_order(inner_cutoff)
    Z = zeta_series(X, order, spec)
    one_plus_t = TruncSeries.from_coeffs([1, 1] + [0] * (order - 1))
    denom = TruncSeries.one(order)
    for _ in range(len(nu)):
        denom = denom * one_plus_t
    E_closed = Z.compose_power(2).inverse() * denom.inverse()
    E_closed = E_closed.scale(w_of(X, (1,) * len(nu), spec))
    E_rec = k_lt_a_nu(X, nu, 2, order, spec) * Z.inverse()
    if E_closed != E_rec:
        raise InternalCheckError(
            "closed form for K_(<2)nu with distinct nu disagrees with the recursion"
        )
    res = _eval_converging(E_closed, X, spec, inner_cutoff)
    value = res.value * _L_power_value(X, spec, -shift)
    value = _truncate_value(value, X, spec, cutoff)
    expr = f"(w_nu/zeta_X({2 * d})) * L^-{shift} / (1+L^-{d})^{len(nu)}"
    return LimitReport(value, cutoff, res.tail, "by Sym^(j+sum nu)", expr)
