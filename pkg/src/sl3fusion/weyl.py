"""Finite, affine and extended affine Weyl groups of sl(3).

Weights are integer pairs in the fundamental-weight basis.  An element of the
extended affine Weyl group is stored canonically as ``(wbar, lam)`` and stands
for the product ``wbar * t_{-lam}``.  Everything here is exact integer (or
``Fraction``) arithmetic.
"""

from __future__ import annotations

import enum
import re
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple


class Weight(NamedTuple):
    """Integral weight ``c1*w1 + c2*w2`` of sl(3)."""

    c1: int
    c2: int

    def __add__(self, other):  # type: ignore[override]
        return Weight(self.c1 + other[0], self.c2 + other[1])

    def __sub__(self, other):
        return Weight(self.c1 - other[0], self.c2 - other[1])

    def __neg__(self):
        return Weight(-self.c1, -self.c2)

    def __mul__(self, k):  # type: ignore[override]
        return Weight(k * self.c1, k * self.c2)

    __rmul__ = __mul__

    def inner(self, other) -> Fraction:
        """Killing form; <w_i, alpha_j> = delta_ij."""
        return Fraction(inner3(self, other), 3)

    @property
    def triality(self) -> int:
        return (self.c1 + 2 * self.c2) % 3

    def in_root_lattice(self) -> bool:
        return self.triality == 0

    def root_coords(self) -> tuple[Fraction, Fraction]:
        """Coefficients ``(a, b)`` with ``self = a*alpha1 + b*alpha2``."""
        return (Fraction(2 * self.c1 + self.c2, 3), Fraction(self.c1 + 2 * self.c2, 3))

    def height(self) -> int:
        """Height ``a + b`` of a root-lattice weight."""
        if self.triality:
            raise ValueError(f"{self} is not in the root lattice")
        return self.c1 + self.c2

    def is_dominant(self) -> bool:
        return self.c1 >= 0 and self.c2 >= 0

    def conj(self) -> Weight:
        return Weight(self.c2, self.c1)

    def level(self) -> int:
        """``<lam, theta>``."""
        return self.c1 + self.c2

    def __str__(self) -> str:
        return f"({self.c1},{self.c2})"


def inner3(a, b) -> int:
    """Three times the inner product of two weights (always an integer)."""
    return 2 * a[0] * b[0] + a[0] * b[1] + a[1] * b[0] + 2 * a[1] * b[1]


ZERO = Weight(0, 0)
OMEGA1 = Weight(1, 0)
OMEGA2 = Weight(0, 1)
ALPHA1 = Weight(2, -1)
ALPHA2 = Weight(-1, 2)
THETA = Weight(1, 1)
RHO = Weight(1, 1)
POSITIVE_ROOTS = (ALPHA1, ALPHA2, THETA)

_WEIGHT_RE = re.compile(r"^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def parse_weight(text: str) -> Weight:
    m = _WEIGHT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse weight {text!r}")
    return Weight(int(m.group(1)), int(m.group(2)))


def from_root_coords(a: int, b: int) -> Weight:
    return Weight(2 * a - b, 2 * b - a)


def is_positive_root_combination(w: Weight) -> bool:
    """True iff ``w`` lies in the positive root cone Q+ (including 0)."""
    if w.triality:
        return False
    return 2 * w.c1 + w.c2 >= 0 and w.c1 + 2 * w.c2 >= 0


def dominant_weights(level: int) -> list[Weight]:
    """``P_+^level``: dominant weights with ``c1 + c2 <= level``."""
    return [Weight(a, b) for a in range(level + 1) for b in range(level + 1 - a)]


# ---------------------------------------------------------------------------
# finite Weyl group S_3

_S1 = ((-1, 0), (1, 1))
_S2 = ((1, 1), (0, -1))


def _matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


_ID = ((1, 0), (0, 1))
_MATRICES = (
    _ID,
    _S1,
    _S2,
    _matmul(_S1, _S2),
    _matmul(_S2, _S1),
    _matmul(_matmul(_S1, _S2), _S1),
)


class FiniteWeyl(enum.IntEnum):
    """The six elements of the Weyl group of sl(3); ``S12 = s1 s2``."""

    E = 0
    S1 = 1
    S2 = 2
    S12 = 3
    S21 = 4
    S121 = 5

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> FiniteWeyl:
        try:
            return cls(_LABELS.index(label))
        except ValueError:
            raise ValueError(f"unknown Weyl group element {label!r}") from None

    @property
    def matrix(self):
        return _MATRICES[self]

    @property
    def det(self) -> int:
        return _DETS[self]

    def __mul__(self, other):  # type: ignore[override]
        if not isinstance(other, FiniteWeyl):
            return NotImplemented
        return _MUL[self][other]

    def inverse(self) -> FiniteWeyl:
        return _INV[self]

    def act(self, lam) -> Weight:
        m = _MATRICES[self]
        return Weight(m[0][0] * lam[0] + m[0][1] * lam[1], m[1][0] * lam[0] + m[1][1] * lam[1])

    def dot(self, lam) -> Weight:
        """Shifted action ``w.lam = w(lam + rho) - rho``."""
        v = self.act(Weight(lam[0] + 1, lam[1] + 1))
        return Weight(v.c1 - 1, v.c2 - 1)

    def conj(self) -> FiniteWeyl:
        """Image under the Dynkin diagram flip s1 <-> s2."""
        return _CONJ[self]

    def __repr__(self) -> str:
        return self.label

    __str__ = __repr__


_LABELS = ("e", "s1", "s2", "s12", "s21", "s121")
_DETS = (1, -1, -1, 1, 1, -1)
_MUL = tuple(
    tuple(FiniteWeyl(_MATRICES.index(_matmul(_MATRICES[i], _MATRICES[j]))) for j in range(6))
    for i in range(6)
)
_INV = tuple(FiniteWeyl(_MUL[i].index(FiniteWeyl.E)) for i in range(6))
_CONJ = (
    FiniteWeyl.E,
    FiniteWeyl.S2,
    FiniteWeyl.S1,
    FiniteWeyl.S21,
    FiniteWeyl.S12,
    FiniteWeyl.S121,
)
WBAR = tuple(FiniteWeyl)
ROTATIONS = (FiniteWeyl.E, FiniteWeyl.S12, FiniteWeyl.S21)


def reflect_to_dominant(v: Weight) -> tuple[Weight, FiniteWeyl] | None:
    """Return ``(u, w)`` with ``u = w(v)`` dominant and strictly regular, or
    ``None`` if ``v`` lies on a wall of the Weyl chambers."""
    for w in WBAR:
        u = w.act(v)
        if u.c1 > 0 and u.c2 > 0:
            return u, w
    return None


def dominant_representative(v: Weight) -> Weight:
    """Unique dominant weight in the (unshifted) orbit of ``v``."""
    for w in WBAR:
        u = w.act(v)
        if u.c1 >= 0 and u.c2 >= 0:
            return u
    raise AssertionError(f"no dominant image of {v}")


# ---------------------------------------------------------------------------
# extended affine Weyl group

_ELEMENT_RE = re.compile(r"^\s*(e|s1|s2|s12|s21|s121)\s*(?:\*\s*t\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\])?\s*$")


class AffineElement(NamedTuple):
    """``wbar * t_{-lam}`` in the extended affine Weyl group."""

    wbar: FiniteWeyl
    lam: Weight

    @classmethod
    def make(cls, wbar, lam=(0, 0)) -> AffineElement:
        if isinstance(wbar, str):
            wbar = FiniteWeyl.from_label(wbar)
        return cls(FiniteWeyl(wbar), Weight(*lam))

    def __mul__(self, other):  # type: ignore[override]
        if not isinstance(other, AffineElement):
            return NotImplemented
        w1, l1 = self
        w2, l2 = other
        u = _INV[w2].act(l1)
        return AffineElement(_MUL[w1][w2], Weight(u.c1 + l2.c1, u.c2 + l2.c2))

    def inverse(self) -> AffineElement:
        return AffineElement(_INV[self.wbar], -self.wbar.act(self.lam))

    def __pow__(self, n: int) -> AffineElement:  # type: ignore[override]
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = out * base
        return out

    @property
    def det(self) -> int:
        return self.wbar.det

    @property
    def triality(self) -> int:
        return self.lam.triality

    def in_affine_weyl(self) -> bool:
        """Membership in the non-extended group W."""
        return self.lam.triality == 0

    def conj(self) -> AffineElement:
        return AffineElement(self.wbar.conj(), self.lam.conj())

    def sort_key(self):
        return (int(self.wbar), self.lam.c1, self.lam.c2)

    def label(self) -> str:
        if self == IDENTITY:
            return "e"
        return f"{self.wbar.label}*t[{-self.lam.c1},{-self.lam.c2}]"

    __str__ = label

    @classmethod
    def parse(cls, text: str) -> AffineElement:
        m = _ELEMENT_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse element {text!r}")
        w = FiniteWeyl.from_label(m.group(1))
        if m.group(2) is None:
            return cls(w, ZERO)
        return cls(w, Weight(-int(m.group(2)), -int(m.group(3))))


IDENTITY = AffineElement(FiniteWeyl.E, ZERO)


def translation(beta) -> AffineElement:
    """``t_beta`` (note the sign: stored as lam = -beta)."""
    return AffineElement(FiniteWeyl.E, Weight(-beta[0], -beta[1]))


def multiply(x: AffineElement, y: AffineElement) -> AffineElement:
    return x * y


def inverse(x: AffineElement) -> AffineElement:
    return x.inverse()


# Coxeter generators of W and the generator of A
W0 = AffineElement(FiniteWeyl.S121, THETA)
W1 = AffineElement(FiniteWeyl.S1, ZERO)
W2 = AffineElement(FiniteWeyl.S2, ZERO)
GENERATORS = (W0, W1, W2)
W10 = W1 * W0
W20 = W2 * W0


def gamma() -> AffineElement:
    """Generator ``t_{w1} s1 s2`` of the group A of diagram automorphisms."""
    return AffineElement(FiniteWeyl.S12, OMEGA2)


A_GROUP = (IDENTITY, gamma(), gamma() * gamma())


def word(indices) -> AffineElement:
    """Product of Coxeter generators, e.g. ``word("0121")``."""
    out = IDENTITY
    for i in indices:
        out = out * GENERATORS[int(i)]
    return out


def check_p(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"p must be an integer, got {p!r}")
    if p < 2 or p % 3 == 0:
        raise ValueError(f"invalid p={p}: need p >= 2 and p not divisible by 3")
    return p


def gamma_p(p: int) -> AffineElement:
    """``t_{(p-1) w1} gamma = t_{p w1} s1 s2``, generating A^[p]."""
    check_p(p)
    return translation(Weight(p - 1, 0)) * gamma()


def sigma_p(p: int, x: AffineElement) -> AffineElement:
    """Order-3 simple-current automorphism ``gamma x gamma_[p]^{-p}``."""
    return gamma() * x * gamma_p(p) ** (-p)


# ---------------------------------------------------------------------------
# the twisted log and the horizontal projection


def iota(y: AffineElement) -> Weight:
    """``3 lam + ybar^{-1}(rho) - rho``; always in the root lattice."""
    v = _INV[y.wbar].act(RHO)
    return Weight(3 * y.lam.c1 + v.c1 - 1, 3 * y.lam.c2 + v.c2 - 1)


class RationalWeight(NamedTuple):
    c1: Fraction
    c2: Fraction

    def __add__(self, other):  # type: ignore[override]
        return RationalWeight(self.c1 + other[0], self.c2 + other[1])


def horizontal_weight(y: AffineElement, kappa) -> RationalWeight:
    """Horizontal projection ``ybar . (-kappa lam)`` of ``y . k Lambda_0``."""
    kappa = Fraction(kappa)
    v = (-kappa * y.lam.c1 + 1, -kappa * y.lam.c2 + 1)
    m = y.wbar.matrix
    return RationalWeight(
        m[0][0] * v[0] + m[0][1] * v[1] - 1, m[1][0] * v[0] + m[1][1] * v[1] - 1
    )


def act_rational(w: FiniteWeyl, v) -> RationalWeight:
    m = w.matrix
    return RationalWeight(m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


# ---------------------------------------------------------------------------
# partition functions


@lru_cache(maxsize=None)
def kostant(beta: Weight) -> int:
    """Number of ways to write ``beta`` as k1*alpha1 + k2*alpha2 + k3*theta."""
    if Weight(*beta).triality:
        return 0
    a, b = (2 * beta[0] + beta[1]) // 3, (beta[0] + 2 * beta[1]) // 3
    if a < 0 or b < 0:
        return 0
    return min(a, b) + 1


@lru_cache(maxsize=None)
def refined_partition(mu: Weight, n: int = 3) -> int:
    """Partition count with every positive-root coefficient at most ``n - 1``."""
    if Weight(*mu).triality:
        return 0
    a, b = (2 * mu[0] + mu[1]) // 3, (mu[0] + 2 * mu[1]) // 3
    return sum(1 for k in range(n) if 0 <= a - k < n and 0 <= b - k < n)


# ---------------------------------------------------------------------------
# length


def _is_positive_root(v: Weight) -> bool:
    return 2 * v.c1 + v.c2 > 0 or (2 * v.c1 + v.c2 == 0 and v.c1 + 2 * v.c2 > 0)


def length(y: AffineElement) -> int:
    """Reduced word length in the generators w0, w1, w2 of W.

    Closed form: writing ``y = t_mu w`` with ``mu = -w(lam)``, each positive root
    contributes ``|<mu, a>|`` or ``|<mu, a> - 1|`` depending on the sign of
    ``w^{-1}(a)``.
    """
    if not y.in_affine_weyl():
        raise ValueError(f"{y.label()} is not in the affine Weyl group W")
    w = y.wbar
    mu = -w.act(y.lam)
    winv = _INV[w]
    total = 0
    for alpha in POSITIVE_ROOTS:
        pairing = inner3(mu, alpha) // 3
        if _is_positive_root(winv.act(alpha)):
            total += abs(pairing)
        else:
            total += abs(pairing - 1)
    return total


@lru_cache(maxsize=8)
def bfs_lengths(max_length: int) -> dict[AffineElement, int]:
    """Breadth-first search of the Cayley graph of W from the identity."""
    dist = {IDENTITY: 0}
    queue = deque([IDENTITY])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d == max_length:
            continue
        for g in GENERATORS:
            z = x * g
            if z not in dist:
                dist[z] = d + 1
                queue.append(z)
    return dist


# ---------------------------------------------------------------------------
# the dominant chamber


def is_dominant(y: AffineElement) -> bool:
    return iota(y).is_dominant()


def reduce_to_fundamental(y: AffineElement) -> tuple[AffineElement, FiniteWeyl]:
    """Unique ``(x, w)`` with ``y = x * w`` and ``x`` in the dominant chamber."""
    found = reflect_to_dominant(iota(y) + RHO)
    if found is None:
        raise AssertionError(f"iota({y.label()}) + rho is not regular")
    _, w = found
    # iota(y w^{-1}) = w . iota(y)
    x = y * AffineElement(_INV[w], ZERO)
    return x, w


def iota_preimage(nu: Weight, triality: int = 0) -> AffineElement | None:
    """The element ``z`` with ``iota(z) = nu`` and ``z.triality == triality``.

    Returns ``None`` when ``nu`` is not in the image of iota.
    """
    if nu.triality:
        return None
    for w in WBAR:
        v = _INV[w].act(RHO)
        a, b = nu.c1 + 1 - v.c1, nu.c2 + 1 - v.c2
        if a % 3 == 0 and b % 3 == 0:
            lam = Weight(a // 3, b // 3)
            if lam.triality == triality % 3:
                return AffineElement(w, lam)
    return None


def in_iota_image(nu: Weight) -> bool:
    """Triality-zero weights with ``nu + rho`` in 3P are not hit by iota."""
    if nu.triality:
        return False
    return not ((nu.c1 + 1) % 3 == 0 and (nu.c2 + 1) % 3 == 0)


def chamber_elements(max_length: int) -> list[AffineElement]:
    """Elements of the triality-zero chamber C of length <= max_length."""
    out = [x for x in bfs_lengths(max_length) if is_dominant(x)]
    return sorted(out, key=lambda x: (bfs_lengths(max_length)[x], x.sort_key()))


# ---------------------------------------------------------------------------
# the admissible alcove


def enumerate_extended_alcove(p: int) -> list[AffineElement]:
    """``A t_{-P_+^{p-1}}  u  A w0 t_{-P_+^{p-2}}``; 3 p^2 elements."""
    check_p(p)
    out = set()
    for a in A_GROUP:
        for lam in dominant_weights(p - 1):
            out.add(a * translation(-lam))
        for lam in dominant_weights(p - 2):
            out.add(a * W0 * translation(-lam))
    return sorted(out, key=AffineElement.sort_key)


def enumerate_alcove(p: int) -> list[AffineElement]:
    """Triality-zero part ``C_p`` of the admissible alcove; p^2 elements."""
    return [y for y in enumerate_extended_alcove(p) if y.in_affine_weyl()]


def in_alcove_by_walls(y: AffineElement, p: int) -> bool:
    """Direct membership test ``lam in P_{+,p}^{(ybar)}``."""
    w, lam = y
    if not lam.is_dominant():
        return False
    for i, alpha in ((0, ALPHA1), (1, ALPHA2)):
        if not _is_positive_root(w.act(alpha)) and lam[i] <= 0:
            return False
    if _is_positive_root(w.act(THETA)):
        return lam.level() < p
    return lam.level() <= p


def iter_window(radius: int) -> Iterator[Weight]:
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            yield Weight(a, b)
