"""Closed-form tiling counts in exact arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .ferns import Fern, as_fern, partial_sum
from .products import hyperfactorial as H
from .products import hyperfactorial_skip as H2
from .products import PoleError, double_factorial, factorial_ratio, product_T, product_V


class ParameterError(ValueError):
    """Parameters outside a formula's stated range."""


QUARTERED_KINDS = ("Q", "Qp", "K", "Kp")


def macmahon(a: int, b: int, c: int) -> Fraction:
    if min(a, b, c) < 0:
        raise ParameterError("hexagon sides must be nonnegative")
    num = den = 1
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    return Fraction(num, den)


def _proctor_core(a: int, b: int, c: int) -> Fraction:
    if a < 0 or c < 0 or a > b:
        raise ParameterError(f"need 0 <= a <= b and c >= 0, got a={a}, b={b}, c={c}")
    val = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b - a + 2):
            val *= Fraction(c + i + j - 1, i + j - 1)
        for j in range(b - a + 2, b - a + i + 1):
            val *= Fraction(2 * c + i + j - 1, i + j - 1)
    return val


def proctor_count(a: int, b: int, c: int) -> Fraction:
    return _proctor_core(a, b, c)


def proctor_weighted_count(a: int, b: int, c: int) -> Fraction:
    # the single product runs over i = 1..a (its upper limit was calibrated on the oracle)
    core = _proctor_core(a, b, c)
    extra = prod((Fraction(2 * c + b - a + i, c + b - a + i) for i in range(1, a + 1)), start=Fraction(1))
    return Fraction(1, 2 ** a) * extra * core


def _pad_even(t: Fern) -> Fern:
    return t if len(t) % 2 == 0 else Fern(t.entries + (0,))


def quartered_count(kind: str, t) -> Fraction:
    """Q, Q', K or K' of a fern t (odd length is padded with a trailing 0)."""
    if kind not in QUARTERED_KINDS:
        raise ParameterError(f"unknown quartered kind {kind!r}")
    t = _pad_even(as_fern(t))
    l = len(t) // 2
    s = [partial_sum(t, k) for k in range(2 * l + 1)]
    e = t.even
    # shift of the "s_j + s_i" argument in the pair products
    shift = {"Q": 1, "Qp": 0, "K": 0, "Kp": -1}[kind]
    val = Fraction(1)
    if kind == "Q":
        val /= H2(2 * e + 1)
        for i in range(1, l + 1):
            val *= factorial_ratio(s[2 * i], s[2 * i - 1])
            val *= H2(2 * s[2 * i] + 1) * H2(2 * s[2 * i - 1] + 2)
    elif kind == "Qp":
        val /= 2 ** e * H2(2 * e + 1)
        for i in range(1, l + 1):
            val *= H2(2 * s[2 * i] + 1) * H2(2 * s[2 * i - 1])
    elif kind == "K":
        val /= H2(2 * e)
        for i in range(1, l + 1):
            val *= H2(2 * s[2 * i]) * H2(2 * s[2 * i - 1] + 1)
    else:
        val /= H2(2 * e)
        for i in range(1, l + 1):
            val *= _H2_or_one(2 * s[2 * i] - 1) * H2(2 * s[2 * i - 1])
    for i in range(1, 2 * l + 1):
        for j in range(i + 1, 2 * l + 1):
            diff = H(s[j] - s[i])
            summ = _H_or_pole(s[j] + s[i] + shift)
            if (j - i) % 2:
                val *= Fraction(diff, summ)
            else:
                val *= Fraction(summ, diff)
    return val


def _H2_or_one(n: int) -> int:
    # H2(-1) only appears when s = 0, where the empty-fern reading gives 1
    return 1 if n == -1 else H2(n)


def _H_or_pole(n: int) -> int:
    return 1 if n == -1 else H(n)


# -- halved hexagons with two ferns ------------------------------------------

FAMILIES = ("H1", "H2", "W1", "W2", "R1", "R2", "RW1", "RW2",
            "N1", "N2", "N3", "N4", "NR1", "NR2", "NR3", "NR4")


@dataclass(frozen=True)
class Params:
    x: int = 0
    y: int = 0
    z: int = 0
    a: Fern = Fern()
    b: Fern = Fern()

    def __post_init__(self):
        object.__setattr__(self, "a", as_fern(self.a))
        object.__setattr__(self, "b", as_fern(self.b))
        if min(self.x, self.y, self.z) < 0:
            raise ParameterError(f"x, y, z must be nonnegative: {self}")

    def replace(self, **kw) -> "Params":
        fields = dict(x=self.x, y=self.y, z=self.z, a=self.a, b=self.b)
        fields.update(kw)
        return Params(**fields)

    def __str__(self) -> str:
        return f"x={self.x} y={self.y} z={self.z} a=({self.a}) b=({self.b})"


@dataclass(frozen=True)
class Theorem:
    """One row of the product-formula table.

    ``upper``/``lower`` are (kind, a1 shift); which of the two splices
    carries the leading 0 and the trailing z depends on ``reversed_a``.
    ``pair`` picks the fern sums feeding the H2 block; ``h2`` holds the
    offsets of its two factors; ``delta`` shifts the H block; ``tail`` is
    ("TV", eT, vx, eV) or ("TT", e).  ``a1_floor`` clamps a1 from below in
    the power of two only.
    """

    y_exp: int
    a1_exp: int
    const_exp: int
    upper: tuple[str, int]
    lower: tuple[str, int]
    reversed_a: bool
    extra: str | None
    h2: tuple[int, int]
    delta: int
    tail: tuple
    a1_floor: int = 0


TABLE: dict[str, Theorem] = {
    "H1": Theorem(-1, 0, 0, ("Q", 0), ("Q", 0), False, None, (1, 1), 1, ("TV", 0, 3, -1)),
    "H2": Theorem(0, 0, 0, ("K", 0), ("K", 0), False, "dfact_down", (0, 0), 0, ("TV", -1, 3, -2)),
    "W1": Theorem(-2, 1, 0, ("Qp", 0), ("Qp", 0), False, "dfact_up", (1, 1), 0, ("TV", -1, 1, 0)),
    # printed prefactor 2^(a1-y-1) is short by a factor 2 when a1 = 0; calibrated as 2^(max(a1,1)-y-1)
    "W2": Theorem(-1, 1, -1, ("Kp", 0), ("Kp", 0), False, None, (0, 0), -1, ("TV", -2, 1, -1), 1),
    "R1": Theorem(-1, 0, 0, ("Q", 0), ("Q", 0), True, None, (1, 1), 1, ("TV", 0, 3, -1)),
    "R2": Theorem(0, 0, 0, ("K", 0), ("K", 0), True, "dfact_down", (0, 0), 0, ("TV", -1, 3, -2)),
    "RW1": Theorem(-2, 1, 0, ("Qp", 0), ("Qp", 0), True, "dfact_up", (1, 1), 0, ("TV", -1, 1, 0)),
    "RW2": Theorem(-1, 1, -1, ("Kp", 0), ("Kp", 0), True, None, (0, 0), -1, ("TV", -2, 1, -1), 1),
    "N1": Theorem(-1, 1, 0, ("Kp", 1), ("Q", 0), False, "fact_up", (2, 1), 1, ("TT", 0)),
    "N2": Theorem(-1, 1, 0, ("Qp", 0), ("K", 0), False, None, (1, 0), 0, ("TT", -1)),
    "N3": Theorem(-1, 0, 0, ("K", 0), ("Qp", 0), False, None, (0, 1), 0, ("TT", -1)),
    "N4": Theorem(-1, 0, 0, ("Q", -1), ("Kp", 0), False, "fact_down", (-1, 0), -1, ("TT", -2)),
    "NR1": Theorem(-1, 1, 0, ("Q", 0), ("Kp", 1), True, "fact_up", (1, 2), 1, ("TT", 0)),
    "NR2": Theorem(-1, 1, 0, ("K", 0), ("Qp", 0), True, None, (0, 1), 0, ("TT", -1)),
    "NR3": Theorem(-1, 0, 0, ("Qp", 0), ("K", 0), True, None, (1, 0), 0, ("TT", -1)),
    "NR4": Theorem(-1, 0, 0, ("Kp", 0), ("Q", -1), True, "fact_down", (0, -1), -1, ("TT", -2)),
}


@dataclass(frozen=True)
class Spliced:
    upper: Fern
    lower: Fern


def _lead_zero_part(a: Fern, x: int, y: int, b_merge: int, a1_shift: int) -> list[int]:
    """(0, a_1, ..., a_{A-1}, a_A + x + y + b_merge) with A = 2*floor((m+1)/2).

    An empty a is read as (0): both describe the same region, and it keeps A >= 2.
    """
    m = max(len(a), 1)
    A = 2 * ((m + 1) // 2)
    head = [a.entry(k) for k in range(1, A)]
    head[0] += a1_shift
    return [0] + head + [a.entry(A) + x + y + b_merge]


def _no_lead_part(a: Fern, x: int, y: int, b_merge: int, literal: bool = False) -> list[int]:
    """(a_1, ..., a_{A-1}, a_A + x + y + b_merge) with A = 2*ceil((m-1)/2) + 1."""
    m = len(a)
    c = -((1 - m) // 2)  # ceil((m-1)/2)
    A = (c if literal else 2 * c) + 1
    return [a.entry(k) for k in range(1, A)] + [a.entry(A) + x + y + b_merge]


def _b_index(n: int, upper_style: bool, literal: bool = False) -> int:
    if upper_style:
        return 2 * ((n + 1) // 2)
    c = -((1 - n) // 2)
    return (c if literal else 2 * c) + 1


def splice_arguments(tag: str, p: Params, literal_lower: bool = False) -> Spliced:
    """The two fern sequences fed to the quartered factors of a family's formula.

    ``literal_lower`` reproduces the alternative reading ceil((m-1)/2) without
    the factor 2 that appears in a few statements; the default is the reading
    confirmed by the tiling counts.
    """
    th = TABLE[tag]
    a, b, x, y, z = p.a, p.b, p.x, p.y, p.z
    if not th.reversed_a:
        Bu = _b_index(len(b), True)
        up = _lead_zero_part(a, x, y, b.entry(Bu), th.upper[1])
        up += [b.entry(k) for k in range(Bu - 1, 0, -1)]
        Bl = _b_index(len(b), False, literal_lower)
        lo = _no_lead_part(a, x, y, b.entry(Bl), literal_lower)
        lo += [b.entry(k) for k in range(Bl - 1, 0, -1)] + [z]
    else:
        Bu = _b_index(len(b), True)
        up = _no_lead_part(a, x, y, b.entry(Bu))
        up += [b.entry(k) for k in range(Bu - 1, 0, -1)]
        Bl = _b_index(len(b), False)
        lo = _lead_zero_part(a, x, y, b.entry(Bl), th.lower[1])
        lo += [b.entry(k) for k in range(Bl - 1, 0, -1)] + [z]
    if min(up + lo) < 0:
        raise PoleError(f"negative splice entry for {tag} at {p}: {up} / {lo}")
    return Spliced(Fern(tuple(up)), Fern(tuple(lo)))


def _extra_factor(kind: str | None, a: int, y: int) -> Fraction:
    if kind is None:
        return Fraction(1)
    if kind == "dfact_down":
        return Fraction(double_factorial(2 * a - 1), double_factorial(2 * a + 2 * y - 1))
    if kind == "dfact_up":
        return Fraction(double_factorial(2 * a + 2 * y - 1), double_factorial(2 * a - 1))
    if kind == "fact_up":
        return factorial_ratio(a + y, a)
    if kind == "fact_down":
        if a == 0:
            raise PoleError("(a-1)! with a = 0")
        return factorial_ratio(a - 1, a + y - 1)
    raise ValueError(kind)


def tail_factor(tag: str, p: Params) -> Fraction:
    th = TABLE[tag]
    x, y, z = p.x, p.y, p.z
    a, b = p.a.total, p.b.total
    if th.tail[0] == "TV":
        _, et, vx, ev = th.tail
        n1, n2 = 2 * a + b + 2 * y + z + et, b + 2 * y + z + ev
        return (product_T(x + 1, n1, y) * product_V(2 * x + 2 * a + vx, n2, y)
                / (product_T(1, n1, y) * product_V(2 * a + vx, n2, y)))
    _, e = th.tail
    n1, n2 = 2 * a + b + 2 * y + z + e, b + 2 * y + z + e
    return (product_T(x + 1, n1, y) * product_T(x + a + 1, n2, y)
            / (product_T(1, n1, y) * product_T(a + 1, n2, y)))


def halved_count(tag: str, p: Params, literal_lower: bool = False,
                 printed_prefactor: bool = False) -> Fraction:
    """Closed-form (weighted) tiling count of a halved hexagon with two ferns.

    ``printed_prefactor`` drops the a1 clamp of W2/RW2 and gives the value as
    originally stated, which is off by 2 at a1 = 0.
    """
    if tag not in TABLE:
        raise ParameterError(f"unknown family {tag!r}")
    th = TABLE[tag]
    x, y, z = p.x, p.y, p.z
    a, b = p.a.total, p.b.total
    a1 = p.a.entry(1)
    if th.reversed_a:
        P, Qs = p.a.even + p.b.odd, p.a.odd + p.b.even
    else:
        P, Qs = p.a.odd + p.b.odd, p.a.even + p.b.even
    sp = splice_arguments(tag, p, literal_lower)
    a1_eff = a1 if printed_prefactor else max(a1, th.a1_floor)
    val = Fraction(2) ** (th.y_exp * y + th.a1_exp * a1_eff + th.const_exp)
    val *= quartered_count(th.upper[0], sp.upper) * quartered_count(th.lower[0], sp.lower)
    val *= _extra_factor(th.extra, a, y)
    u, l = th.h2
    for arg in (2 * P + u, 2 * Qs + 2 * z + l, 2 * P + 2 * y + u, 2 * Qs + 2 * y + 2 * z + l):
        if arg < 0:
            raise PoleError(f"H2 of negative argument for {tag} at {p}")
    val *= Fraction(H2(2 * P + u) * H2(2 * Qs + 2 * z + l),
                    H2(2 * P + 2 * y + u) * H2(2 * Qs + 2 * y + 2 * z + l))
    d = th.delta
    if 2 * a + b + y + z + d < 0:
        raise PoleError(f"H of negative argument for {tag} at {p}")
    val *= Fraction(H(2 * a + b + 2 * y + z + d) * H(b + y + z),
                    H(2 * a + b + y + z + d) * H(b + z))
    val *= tail_factor(tag, p)
    return val


def halved_count_ratio_form(tag: str, p: Params, printed: bool = False) -> Fraction:
    """M(X_{x+y,0,z}) M(X_{0,y,z}) / M(X_{y,0,z}) times the T/V or T/T tail.

    ``printed=True`` uses X_{0,2y,z} for the middle factor, as originally
    displayed; that reading already fails at x = 0, where the tail is 1.
    """
    x, y = p.x, p.y
    mid = 2 * y if printed else y
    num = halved_count(tag, p.replace(x=x + y, y=0)) * halved_count(tag, p.replace(x=0, y=mid))
    den = halved_count(tag, p.replace(x=y, y=0))
    if den == 0:
        raise PoleError(f"vanishing denominator in ratio form of {tag} at {p}")
    return num / den * tail_factor(tag, p)


# -- symmetric hexagons with three ferns -------------------------------------

SYMMETRIC_KINDS = ("S1", "S2")

# factor families: (a1 even: floor-x factor, ceil-x factor), (a1 odd: same)
SYMMETRIC_PAIRS = {
    "S1": (("H2", "W1"), ("N4", "N1")),
    "S2": (("R2", "RW1"), ("NR4", "NR1")),
}


@dataclass(frozen=True)
class Factorization:
    prefactor: Fraction
    floor_factor: tuple[str, Params]
    ceil_factor: tuple[str, Params]


def symmetric_factorization(kind: str, p: Params) -> Factorization:
    """The two halved regions whose counts multiply to the symmetric count.

    The floor factor takes floor(x/2), ceil(y/2); the ceil factor the reverse.
    Its first fern entry is a1/2 for even a1, and (a1+1)/2 resp. (a1-1)/2 for odd.
    """
    if kind not in SYMMETRIC_KINDS:
        raise ParameterError(f"unknown symmetric kind {kind!r}")
    if (p.x - p.y) % 2:
        raise ParameterError(f"x and y must have the same parity, got x={p.x}, y={p.y}")
    a1 = p.a.entry(1)
    rest = p.a.entries[1:]
    even_pair, odd_pair = SYMMETRIC_PAIRS[kind]
    lo_x, hi_x = p.x // 2, (p.x + 1) // 2
    lo_y, hi_y = p.y // 2, (p.y + 1) // 2
    if a1 % 2 == 0:
        fam_f, fam_c = even_pair
        a_f = a_c = Fern((a1 // 2,) + rest)
    else:
        fam_f, fam_c = odd_pair
        a_f, a_c = Fern(((a1 + 1) // 2,) + rest), Fern(((a1 - 1) // 2,) + rest)
    pref = Fraction(2) ** (p.y + p.z + p.a.total + p.b.total - a1)
    return Factorization(pref,
                         (fam_f, Params(lo_x, hi_y, p.z, a_f, p.b)),
                         (fam_c, Params(hi_x, lo_y, p.z, a_c, p.b)))


def symmetric_count(kind: str, p: Params) -> Fraction:
    f = symmetric_factorization(kind, p)
    return f.prefactor * halved_count(*f.floor_factor) * halved_count(*f.ceil_factor)
