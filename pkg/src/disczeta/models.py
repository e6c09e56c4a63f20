"""Concrete X-models and specializations.

An :class:`XModel` is the data needed to turn symbolic classes into concrete
values: a dimension plus one of several descriptions (affine space, the
projective line or space, finite-field point counts, an Euler characteristic,
a Hodge-Deligne polynomial, an explicit symmetric-power table, or the free
symbolic model in which [Sym^n X] stays the generator S_n).

A :class:`Specialization` names the target ring: motivic-L (Laurent in L),
count(q) (integers/rationals), euler (L -> 1) or hodge-deligne (L -> uv).
Each is a ring morphism on the classes we represent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError, InternalCheckError, ModelDataError
from .motive import LaurentL, MotivicClass, TruncSeries

MOTIVIC = "motivic-L"
COUNT = "count"
EULER = "euler"
HODGE = "hodge-deligne"


@dataclass(frozen=True)
class UVPoly:
    """Laurent polynomial in the Hodge-Deligne variables u, v (integer coefficients)."""

    c: tuple[tuple[tuple[int, int], int], ...]  # sorted (((p, q), coeff), ...), no zeros

    @staticmethod
    def of(mapping: dict[tuple[int, int], int]) -> "UVPoly":
        return UVPoly(tuple(sorted((m, v) for m, v in mapping.items() if v)))

    @staticmethod
    def term(coeff: int = 1, p: int = 0, q: int = 0) -> "UVPoly":
        return UVPoly.of({(p, q): coeff})

    @staticmethod
    def from_int(n: int) -> "UVPoly":
        return UVPoly.of({(0, 0): n})

    def _coerce(self, other) -> "UVPoly | None":
        if isinstance(other, UVPoly):
            return other
        if isinstance(other, int):
            return UVPoly.from_int(other)
        return None

    def __bool__(self):
        return bool(self.c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self.c)
        for m, v in o.c:
            acc[m] = acc.get(m, 0) + v
        return UVPoly.of(acc)

    __radd__ = __add__

    def __neg__(self):
        return UVPoly(tuple((m, -v) for m, v in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[tuple[int, int], int] = {}
        for (p1, q1), v1 in self.c:
            for (p2, q2), v2 in o.c:
                m = (p1 + p2, q1 + q2)
                acc[m] = acc.get(m, 0) + v1 * v2
        return UVPoly.of(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.c) == 1 and abs(self.c[0][1]) == 1:
                (p, q), v = self.c[0]
                return UVPoly.term(v if n % 2 else 1, p * n, q * n)
            raise InputError("negative powers only for unit monomials")
        out = UVPoly.from_int(1)
        base = self
        for _ in range(n):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def adams(self, r: int) -> "UVPoly":
        """Substitute u -> u^r, v -> v^r."""
        return UVPoly(tuple(sorted(((p * r, q * r), v) for (p, q), v in self.c)))

    def at_one(self) -> int:
        """Evaluate at u = v = 1 (the Euler characteristic of an E-polynomial)."""
        return sum(v for _, v in self.c)

    def weight(self) -> float:
        return max((p + q for (p, q), _ in self.c), default=float("-inf"))

    def truncate_below_weight(self, min_w: int) -> tuple["UVPoly", float]:
        kept = tuple(t for t in self.c if t[0][0] + t[0][1] >= min_w)
        dropped = max((p + q for (p, q), _ in self.c if p + q < min_w), default=float("-inf"))
        return UVPoly(kept), dropped

    def div_exact(self, n: int) -> "UVPoly":
        out = {}
        for m, v in self.c:
            if v % n:
                raise InternalCheckError(f"inexact division of E-polynomial by {n}")
            out[m] = v // n
        return UVPoly.of(out)

    def __str__(self):
        if not self.c:
            return "0"
        chunks = []
        for (p, q), v in sorted(self.c):
            bits = []
            if abs(v) != 1 or (p == 0 and q == 0):
                bits.append(str(abs(v)))
            if p:
                bits.append("u" if p == 1 else f"u^{p}")
            if q:
                bits.append("v" if q == 1 else f"v^{q}")
            body = "*".join(bits) if bits else "1"
            chunks.append(("-" if v < 0 else "+", body))
        sign, first = chunks[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def parse(text: str) -> "UVPoly":
        """Parse expressions like ``1+uv``, ``1 - 2u + u^2``, ``1+u*v``."""
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise InputError("empty Hodge-Deligne polynomial")
        s = s.replace("-", "+-")
        acc: dict[tuple[int, int], int] = {}
        for chunk in s.split("+"):
            if not chunk:
                continue
            sign = 1
            if chunk.startswith("-"):
                sign, chunk = -1, chunk[1:]
            m = re.match(r"^(\d+)?(u(\^\d+)?)?(v(\^\d+)?)?$", chunk)
            if not m or not chunk:
                raise InputError(f"cannot parse Hodge-Deligne term {chunk!r} in {text!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            p = 0 if not m.group(2) else (int(m.group(3)[1:]) if m.group(3) else 1)
            q = 0 if not m.group(4) else (int(m.group(5)[1:]) if m.group(5) else 1)
            key = (p, q)
            acc[key] = acc.get(key, 0) + sign * coeff
        return UVPoly.of(acc)


UV = UVPoly.term(1, 1, 1)


@dataclass(frozen=True)
class Specialization:
    """A motivic measure target: where classes get sent."""

    target: str = MOTIVIC
    q: int | None = None

    def __post_init__(self):
        if self.target not in (MOTIVIC, COUNT, EULER, HODGE):
            raise InputError(f"unknown specialization target {self.target!r}")
        if self.target == COUNT and self.q is not None and self.q < 2:
            raise InputError("count specialization needs a prime power q >= 2")

    @staticmethod
    def parse(text: str) -> "Specialization":
        text = text.strip()
        if text in (MOTIVIC, "motivic", "L"):
            return Specialization(MOTIVIC)
        if text in (EULER, HODGE, "hd"):
            return Specialization(EULER if text == EULER else HODGE)
        m = re.match(r"^count(?::q=(\d+))?$", text)
        if m:
            return Specialization(COUNT, int(m.group(1)) if m.group(1) else None)
        raise InputError(f"cannot parse specialization {text!r}")

    def __str__(self):
        if self.target == COUNT and self.q is not None:
            return f"count:q={self.q}"
        return self.target


def generalized_binomial(a: int, k: int) -> int:
    """Binomial coefficient C(a, k) for any integer a, k >= 0."""
    if k < 0:
        raise InputError("k must be >= 0")
    num = 1
    for i in range(k):
        num *= a - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    if num % den:
        raise InternalCheckError("binomial product not divisible by k!")
    return num // den


@dataclass(frozen=True)
class XModel:
    """A variety description rich enough to specialize the classes we build."""

    kind: str
    dim: int
    params: tuple = ()

    # -- constructors ------------------------------------------------------

    @staticmethod
    def affine_space(d: int) -> "XModel":
        if d < 0:
            raise InputError("dimension must be >= 0")
        return XModel("affine", d)

    @staticmethod
    def point() -> "XModel":
        return XModel.affine_space(0)

    @staticmethod
    def proj_line() -> "XModel":
        return XModel("projline", 1)

    @staticmethod
    def proj_space(n: int) -> "XModel":
        if n < 0:
            raise InputError("dimension must be >= 0")
        return XModel("projspace", n, (n,))

    @staticmethod
    def point_counts(q: int, counts=None, dim: int = 1) -> "XModel":
        """Counts N_r = #X(F_{q^r}).  ``counts=None`` means the affine-line
        default N_r = q^r; otherwise supply N_1..N_R explicitly."""
        if q < 2:
            raise InputError("q must be at least 2")
        ctuple = None if counts is None else tuple(int(n) for n in counts)
        if ctuple is not None and any(n < 0 for n in ctuple):
            raise InputError("point counts must be nonnegative")
        return XModel("counts", dim, (q, ctuple))

    @staticmethod
    def euler_char(chi: int) -> "XModel":
        return XModel("euler", 0, (chi,))

    @staticmethod
    def hodge_deligne(e, dim: int | None = None) -> "XModel":
        poly = UVPoly.parse(e) if isinstance(e, str) else e
        if dim is None:
            w = poly.weight()
            dim = 0 if w == float("-inf") else (int(w) + 1) // 2
        return XModel("hd", dim, (poly,))

    @staticmethod
    def sym_table(entries, dim: int) -> "XModel":
        table = tuple(entries)
        if not table or table[0] != LaurentL.from_int(1):
            raise InputError("a Sym table must start with Sym^0 = 1")
        return XModel("symtable", dim, (table,))

    @staticmethod
    def symbolic(dim: int = 1) -> "XModel":
        """The free model: [Sym^n X] stays the independent generator S_n."""
        return XModel("symbolic", dim)

    # -- specialization machinery ------------------------------------------

    def natural_spec(self) -> Specialization:
        return {
            "affine": Specialization(MOTIVIC),
            "projline": Specialization(MOTIVIC),
            "projspace": Specialization(MOTIVIC),
            "symtable": Specialization(MOTIVIC),
            "symbolic": Specialization(MOTIVIC),
            "counts": Specialization(COUNT, self.params[0] if self.kind == "counts" else None),
            "euler": Specialization(EULER),
            "hd": Specialization(HODGE),
        }[self.kind]

    def _sym_laurent(self, n: int) -> LaurentL:
        if self.kind == "affine":
            return LaurentL.term(1, self.dim * n)
        if self.kind == "projline":
            return LaurentL.of({k: 1 for k in range(n + 1)})
        if self.kind == "projspace":
            return _proj_space_sym(self.params[0], n)
        if self.kind == "symtable":
            table = self.params[0]
            if n >= len(table):
                raise ModelDataError(f"Sym table only covers n < {len(table)}, asked for {n}")
            return table[n]
        raise ModelDataError(f"{self.kind} model has no Laurent Sym classes")

    def sym(self, n: int, spec: Specialization | None = None):
        """[Sym^n X] in the target ring (the model's natural target by default)."""
        if n < 0:
            raise InputError("n must be >= 0")
        spec = spec or self.natural_spec()
        t = spec.target
        if self.kind == "symbolic":
            if t != MOTIVIC:
                raise InputError("the symbolic model only supports the motivic-L target")
            return MotivicClass.sym(n)
        if self.kind == "counts":
            if t != COUNT:
                raise InputError("a point-count model only supports the count target")
            if spec.q is not None and spec.q != self.params[0]:
                raise InputError(f"model has q={self.params[0]}, specialization asks q={spec.q}")
            return _count_sym(self, n)
        if self.kind == "euler":
            if t != EULER:
                raise InputError("an Euler-characteristic model only supports the euler target")
            return generalized_binomial(self.params[0] + n - 1, n)
        if self.kind == "hd":
            if t == HODGE:
                return _hd_sym(self, n)
            if t == EULER:
                return _hd_sym(self, n).at_one()
            raise InputError("a Hodge-Deligne model supports hodge-deligne or euler targets")
        # Laurent-backed kinds
        lau = self._sym_laurent(n)
        if t == MOTIVIC:
            return lau
        if t == COUNT:
            if spec.q is None:
                raise InputError("count specialization of an L-model needs an explicit q")
            return lau.substitute(spec.q)
        if t == EULER:
            return lau.substitute(1)
        if t == HODGE:
            return lau.substitute(UV)
        raise InputError(f"unsupported target {t!r}")

    def L_image(self, spec: Specialization | None = None):
        spec = spec or self.natural_spec()
        t = spec.target
        if t == MOTIVIC:
            return None  # keep LaurentL coefficients as they are
        if t == COUNT:
            q = spec.q if spec.q is not None else (self.params[0] if self.kind == "counts" else None)
            if q is None:
                raise InputError("count specialization needs q")
            return q
        if t == EULER:
            return 1
        if t == HODGE:
            return UV
        raise InputError(f"unsupported target {t!r}")

    def specialize(self, c: MotivicClass, spec: Specialization | None = None):
        """Ring-morphism image of a symbolic class: S_i -> [Sym^i X], L -> target."""
        spec = spec or self.natural_spec()
        return c.substitute_syms(lambda i: self.sym(i, spec), self.L_image(spec))

    def ring_one(self, spec: Specialization | None = None):
        return self.sym(0, spec)

    def label(self) -> str:
        if self.kind == "affine":
            return f"A^{self.dim}"
        if self.kind == "projline":
            return "P1"
        if self.kind == "projspace":
            return f"P{self.params[0]}"
        if self.kind == "counts":
            q, counts = self.params
            return f"counts:q={q}" + ("" if counts is None else f",N={list(counts)}")
        if self.kind == "euler":
            return f"euler:{self.params[0]}"
        if self.kind == "hd":
            return f"hd:{self.params[0]}"
        if self.kind == "symtable":
            return f"symtable(dim={self.dim})"
        return f"symbolic(dim={self.dim})"


@lru_cache(maxsize=None)
def _proj_space_sym(m: int, n: int) -> LaurentL:
    # coefficient of t^n in prod_{i=0..m} 1/(1 - L^i t)
    series = TruncSeries.one(n)
    for i in range(m + 1):
        g = TruncSeries.from_coeffs([LaurentL.term(1, i * k) for k in range(n + 1)])
        series = series * g
    return series.coeffs[n] if isinstance(series.coeffs[n], LaurentL) else LaurentL.from_int(series.coeffs[n])


def _model_counts(model: XModel, r: int) -> int:
    q, counts = model.params
    if counts is None:
        return q**r
    if r > len(counts):
        raise ModelDataError(f"point-count model provides N_r only for r <= {len(counts)}")
    return counts[r - 1]


@lru_cache(maxsize=None)
def _count_sym(model: XModel, n: int) -> int:
    # n*s_n = sum_{r=1..n} N_r s_{n-r}, from Z = exp(sum N_r t^r / r)
    syms = [1]
    for k in range(1, n + 1):
        acc = 0
        for r in range(1, k + 1):
            acc += _model_counts(model, r) * syms[k - r]
        if acc % k:
            raise ModelDataError(f"point counts are inconsistent: Sym^{k} is not an integer")
        val = acc // k
        if val < 0:
            raise ModelDataError(f"point counts are inconsistent: Sym^{k} is negative")
        syms.append(val)
    return syms[n]


@lru_cache(maxsize=None)
def _hd_sym(model: XModel, n: int) -> UVPoly:
    e = model.params[0]
    syms = [UVPoly.from_int(1)]
    for k in range(1, n + 1):
        acc = UVPoly.from_int(0)
        for r in range(1, k + 1):
            acc = acc + e.adams(r) * syms[k - r]
        syms.append(acc.div_exact(k))
    return syms[n]


def sym_class(X: XModel, n: int, spec: Specialization | None = None):
    """[Sym^n X] under the given specialization (module-level convenience)."""
    return X.sym(n, spec)


def specialize_class(c: MotivicClass, X: XModel, spec: Specialization | None = None):
    return X.specialize(c, spec)


def zeta_coeffs(X: XModel, N: int, spec: Specialization | None = None) -> TruncSeries:
    """Z_X(t) = sum [Sym^n X] t^n truncated at N, in the target ring."""
    if N < 0:
        raise InputError("truncation order must be >= 0")
    return TruncSeries.from_coeffs([X.sym(n, spec) for n in range(N + 1)])


def macdonald_check(chi: int, N: int) -> bool:
    """Euler-specialization identities for configuration spaces.

    Checks that the Euler zeta series is (1-t)^(-chi) and that the distinct-
    point series Z(t)/Z(t^2) has coefficients C(chi, j), i.e. equals (1+t)^chi.
    """
    X = XModel.euler_char(chi)
    z = zeta_coeffs(X, N)
    binom_neg = [generalized_binomial(chi + n - 1, n) for n in range(N + 1)]
    if list(z.coeffs) != binom_neg:
        return False
    conf = z * z.compose_power(2).inverse()
    binom_pos = [generalized_binomial(chi, j) for j in range(N + 1)]
    return list(conf.coeffs) == binom_pos


def stratification_check(U: XModel, Y: XModel, X: XModel, N: int, spec: Specialization | None = None) -> bool:
    """Z_X = Z_U * Z_Y to order N, for X stratified into U and Y."""
    if spec is None:
        spec = X.natural_spec()
    if X.kind == "counts" and U.kind == "counts" and Y.kind == "counts":
        for r in range(1, N + 1):
            if _model_counts(X, r) != _model_counts(U, r) + _model_counts(Y, r):
                raise ModelDataError(f"inconsistent stratification counts at r={r}")
    zx = zeta_coeffs(X, N, spec)
    zu = zeta_coeffs(U, N, spec)
    zy = zeta_coeffs(Y, N, spec)
    return zx == zu * zy


def product_with_line_check(X: XModel, N: int) -> bool:
    """#Sym^n(X x A^1) = q^n #Sym^n X for n <= N, via the exponential formula."""
    if X.kind != "counts":
        raise InputError("product_with_line_check needs a point-count model")
    q = X.params[0]
    counts = tuple(_model_counts(X, r) * q**r for r in range(1, N + 1))
    XL = XModel.point_counts(q, counts, dim=X.dim + 1)
    return all(XL.sym(n) == q**n * X.sym(n) for n in range(N + 1))


_MODEL_RE_COUNTS = re.compile(r"^counts:q=(\d+)(?:,N=\[([\d,\s]*)\])?(?:,d=(\d+))?$")


def parse_model(text: str) -> XModel:
    """Parse the CLI shorthand: A^d, P1, Pn, pt, counts:q=2,N=[2,4,8], euler:2,
    hd:1+uv, symbolic[:d]."""
    text = text.strip()
    if text == "pt":
        return XModel.point()
    m = re.match(r"^A\^?(\d+)$", text)
    if m:
        return XModel.affine_space(int(m.group(1)))
    m = re.match(r"^P(\d+)$", text)
    if m:
        n = int(m.group(1))
        return XModel.proj_line() if n == 1 else XModel.proj_space(n)
    m = _MODEL_RE_COUNTS.match(text)
    if m:
        q = int(m.group(1))
        counts = None
        if m.group(2) is not None:
            counts = [int(x) for x in m.group(2).split(",") if x.strip()] or []
        dim = int(m.group(3)) if m.group(3) else 1
        return XModel.point_counts(q, counts, dim)
    m = re.match(r"^euler:(-?\d+)$", text)
    if m:
        return XModel.euler_char(int(m.group(1)))
    m = re.match(r"^hd:(.+?)(?:,d=(\d+))?$", text)
    if m:
        return XModel.hodge_deligne(m.group(1), int(m.group(2)) if m.group(2) else None)
    m = re.match(r"^symbolic(?::(\d+))?$", text)
    if m:
        return XModel.symbolic(int(m.group(1)) if m.group(1) else 1)
    raise InputError(f"cannot parse X-model {text!r}")
