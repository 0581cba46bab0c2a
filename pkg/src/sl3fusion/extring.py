"""The extended character ring: finite-module characters in Z[W~], their
products, structure constants and dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from . import charring
from .weyl import (
    A_GROUP,
    IDENTITY,
    OMEGA1,
    OMEGA2,
    RHO,
    W0,
    W1,
    W2,
    W10,
    W20,
    WBAR,
    AffineElement,
    FiniteWeyl,
    Weight,
    bfs_lengths,
    gamma,
    iota,
    iota_preimage,
    is_dominant,
    kostant,
    length,
    reduce_to_fundamental,
    translation,
    word,
)


class GroupRingElement:
    """Finite integer combination of elements of W~."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[AffineElement, int] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[AffineElement, int] = {}
        for g, c in items:
            if c:
                acc[g] = acc.get(g, 0) + c
        self._coeffs = {g: c for g, c in acc.items() if c}

    @classmethod
    def of(cls, g: AffineElement, c: int = 1) -> GroupRingElement:
        return cls({g: c})

    @property
    def coeffs(self) -> dict[AffineElement, int]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, g: AffineElement) -> int:
        return self._coeffs.get(g, 0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = GroupRingElement.of(IDENTITY, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def _coerce(self, other) -> GroupRingElement:
        if isinstance(other, GroupRingElement):
            return other
        if isinstance(other, int):
            return GroupRingElement.of(IDENTITY, other)
        if isinstance(other, AffineElement):
            return GroupRingElement.of(other)
        raise TypeError(f"cannot combine group-ring element with {type(other).__name__}")

    def __add__(self, other) -> GroupRingElement:
        other = self._coerce(other)
        return GroupRingElement(list(self.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement({g: -c for g, c in self.items()})

    def __sub__(self, other) -> GroupRingElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> GroupRingElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> GroupRingElement:
        if isinstance(other, int):
            return GroupRingElement({g: c * other for g, c in self.items()})
        other = self._coerce(other)
        acc: dict[AffineElement, int] = {}
        for g, c in self.items():
            for h, d in other.items():
                k = g * h
                acc[k] = acc.get(k, 0) + c * d
        return GroupRingElement(acc)

    def __rmul__(self, other) -> GroupRingElement:
        return self._coerce(other) * self

    def conj(self) -> GroupRingElement:
        return GroupRingElement({g.conj(): c for g, c in self.items()})

    def total(self) -> int:
        return sum(self._coeffs.values())

    def sorted_items(self) -> list[tuple[AffineElement, int]]:
        return sorted(self.items(), key=lambda gc: gc[0].sort_key())

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"{c}*{g.label()}" for g, c in self.sorted_items())


def ring_multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


# class element and the embedded sl(3) characters
F_CLASS = GroupRingElement({W0: 1, W1: 1, W2: 1})
F_PLUS_2 = F_CLASS + 2


def classical_element(lam: Weight) -> GroupRingElement:
    """``chi-bar_lam`` inside Z[W~] as ``sum m t_{-mu}``; central by W-invariance.

    Non-dominant ``lam`` is resolved through the shifted Weyl action.
    """
    sign, dom = charring.shifted_dominant(Weight(*lam))
    if not sign:
        return GroupRingElement()
    return GroupRingElement(
        {AffineElement(FiniteWeyl.E, mu): sign * m for mu, m in charring.character(dom).items()}
    )


# ---------------------------------------------------------------------------
# Verma characters


def verma_multiplicity(y: AffineElement, z: AffineElement) -> int:
    """``K_{iota(y) - iota(z)}`` on the coset of y, zero off it."""
    if (z * y.inverse()).triality:
        return 0
    return kostant(iota(y) - iota(z))


def verma_character_truncated(y: AffineElement, depth: int) -> GroupRingElement:
    """Terms ``K^y_z z`` with the root height of ``iota(y) - iota(z)`` at most ``depth``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    top = iota(y)
    out: dict[AffineElement, int] = {}
    for a in range(depth + 1):
        for b in range(depth + 1 - a):
            beta = Weight(2 * a - b, 2 * b - a)
            z = iota_preimage(top - beta, y.triality)
            if z is not None:
                out[z] = kostant(beta)
    return GroupRingElement(out)


# ---------------------------------------------------------------------------
# finite-module characters


@dataclass(frozen=True)
class ExtCharacter:
    base: AffineElement
    elem: GroupRingElement

    def multiplicity(self, z: AffineElement) -> int:
        return self.elem[z]


def _require_chamber(y: AffineElement) -> AffineElement:
    if not is_dominant(y):
        raise ValueError(f"{y.label()} is not in the dominant chamber (iota = {iota(y)})")
    return y


def multiplicity(y: AffineElement, z: AffineElement) -> int:
    """``m^y_z = m-bar^{iota(y)}_{iota(z)}`` on the coset of y."""
    _require_chamber(y)
    if (z * y.inverse()).triality:
        return 0
    return charring.weight_multiplicity(iota(y), iota(z))


@lru_cache(maxsize=None)
def _character_a(y: AffineElement) -> GroupRingElement:
    out: dict[AffineElement, int] = {}
    for nu, m in charring.character(iota(y)).items():
        z = iota_preimage(nu, y.triality)
        if z is not None:
            out[z] = m
    return GroupRingElement(out)


def ext_character_resolution(y: AffineElement) -> ExtCharacter:
    """Construction from the multiplicity map ``m^y_z``."""
    return ExtCharacter(y, _character_a(_require_chamber(y)))


_SHIFTS_EVEN = ((0, Weight(0, 0)), (1, Weight(-2, 0)), (2, Weight(0, -2)))
_SHIFTS_ODD = ((0, Weight(-1, -1)), (1, Weight(0, -1)), (2, Weight(-1, 0)))


@lru_cache(maxsize=None)
def _character_b(y: AffineElement) -> GroupRingElement:
    winv = y.wbar.inverse()
    g = gamma()
    powers = (IDENTITY, g, g.inverse())
    even = GroupRingElement()
    odd = GroupRingElement()
    for k, shift in _SHIFTS_EVEN:
        even = even + classical_element(y.lam + winv.dot(shift)) * powers[k]
    for k, shift in _SHIFTS_ODD:
        odd = odd + classical_element(y.lam + winv.dot(shift)) * powers[k]
    return even + F_PLUS_2 * odd


def ext_character_classical(y: AffineElement) -> ExtCharacter:
    """Construction through ordinary sl(3) characters and the class element."""
    return ExtCharacter(y, _character_b(_require_chamber(y)))


def ext_character(y: AffineElement) -> ExtCharacter:
    return ext_character_resolution(y)


def character_of(y: AffineElement) -> GroupRingElement:
    """``chi_y`` for any y, via ``chi_{x w} = det(w) chi_x``."""
    x, w = reduce_to_fundamental(y)
    return _character_a(x) * w.det


# ---------------------------------------------------------------------------
# products and structure constants


def _signed_reduce(u: AffineElement) -> tuple[AffineElement, int]:
    x, w = reduce_to_fundamental(u)
    return x, w.det


def structure_constant_direct(x: AffineElement, y: AffineElement, z: AffineElement) -> int:
    """``sum_w det(w) m^{iota(x)}_{iota(z w y^{-1})}``, zero off the grading."""
    for v in (x, y, z):
        _require_chamber(v)
    if (x.triality + y.triality - z.triality) % 3:
        return 0
    lam = iota(x)
    yinv = y.inverse()
    total = 0
    for w in WBAR:
        u = z * AffineElement(w, Weight(0, 0)) * yinv
        total += w.det * charring.weight_multiplicity(lam, iota(u))
    return total


def structure_constant_classical(x: AffineElement, y: AffineElement, z: AffineElement) -> int:
    """Classical tensor multiplicity on iota-images."""
    for v in (x, y, z):
        _require_chamber(v)
    if (x.triality + y.triality - z.triality) % 3:
        return 0
    return charring.tensor_multiplicity(iota(x), iota(y), iota(z))


def structure_constant(x: AffineElement, y: AffineElement, z: AffineElement) -> int:
    return structure_constant_direct(x, y, z)


def product_decomposition(x: AffineElement, y: AffineElement) -> dict[AffineElement, int]:
    """``chi_x chi_y = sum_u m^x_u chi_{u y}``, each term folded into the chamber."""
    _require_chamber(y)
    out: dict[AffineElement, int] = {}
    for u, m in _character_a(_require_chamber(x)).items():
        z, s = _signed_reduce(u * y)
        out[z] = out.get(z, 0) + s * m
    return _clean(out)


def product_decomposition_classical(x: AffineElement, y: AffineElement) -> dict[AffineElement, int]:
    """Same decomposition read off the classical tensor product of iota-images.

    Constituents outside the image of iota (``nu + rho`` in 3P) carry no label
    in the chamber and are dropped.
    """
    _require_chamber(x)
    _require_chamber(y)
    tri = (x.triality + y.triality) % 3
    out = {}
    for nu, n in charring.tensor_product(iota(x), iota(y)).items():
        z = iota_preimage(nu, tri)
        if z is not None:
            out[z] = n
    return _clean(out)


def _ext_height(z: AffineElement) -> int:
    return iota(z).height()


def decompose(elem: GroupRingElement) -> dict[AffineElement, int]:
    """Write ``elem`` as an integer combination of ``chi_z`` by repeatedly
    stripping the term with the highest iota-image."""
    rest = elem.coeffs
    out: dict[AffineElement, int] = {}
    while rest:
        top = max(rest, key=lambda z: (_ext_height(z), z.sort_key()))
        if not is_dominant(top):
            raise ValueError(f"not in the character ring: leading term {top.label()}")
        c = rest[top]
        out[top] = out.get(top, 0) + c
        for g, m in _character_a(top).items():
            left = rest.get(g, 0) - c * m
            if left:
                rest[g] = left
            else:
                rest.pop(g, None)
    return _clean(out)


def _clean(d: dict[AffineElement, int]) -> dict[AffineElement, int]:
    return {k: d[k] for k in sorted(d, key=AffineElement.sort_key) if d[k]}


# ---------------------------------------------------------------------------
# Pieri rules

F_ELEM = translation(-OMEGA1)  # t_{-w1}
F_STAR = translation(-OMEGA2)
F_WORDS = tuple(word(s) for s in ("", "1", "21", "121", "0121", "021", "2021"))
F_STAR_WORDS = tuple(word(s) for s in ("", "2", "12", "212", "0212", "012", "1012"))
GENERATOR_ELEMENTS = (W0, W20, W10)


def pieri_terms(j: int, y: AffineElement) -> list[tuple[AffineElement, int]]:
    """Unreduced Pieri pattern: (2,1,1,1) over ``e, w0, w1, w2`` for j = 0 and
    seven unit terms for j = 1, 2."""
    g = gamma()
    if j == 0:
        return [(y, 2), (W0 * y, 1), (W1 * y, 1), (W2 * y, 1)]
    if j == 1:
        return [(g * u * F_ELEM * y, 1) for u in F_WORDS]
    if j == 2:
        return [(g.inverse() * u * F_STAR * y, 1) for u in F_STAR_WORDS]
    raise ValueError(f"generator index must be 0, 1 or 2, got {j}")


def pieri_f(y: AffineElement, star: bool = False) -> list[tuple[AffineElement, int]]:
    """Seven-term pattern for ``chi_f chi_y`` (or ``chi_{f*} chi_y``)."""
    base, words = (F_STAR, F_STAR_WORDS) if star else (F_ELEM, F_WORDS)
    return [(u * base * y, 1) for u in words]


def reduce_terms(terms: Iterable[tuple[AffineElement, int]]) -> dict[AffineElement, int]:
    out: dict[AffineElement, int] = {}
    for u, m in terms:
        z, s = _signed_reduce(u)
        out[z] = out.get(z, 0) + s * m
    return _clean(out)


def pieri(j: int, y: AffineElement) -> dict[AffineElement, int]:
    """Decomposition of ``f_j chi_y`` with cancellations on KW orbits applied."""
    _require_chamber(y)
    return reduce_terms(pieri_terms(j, y))


# ---------------------------------------------------------------------------
# dimensions and conjugation


def dimension(y: AffineElement) -> int:
    """Sum of the multiplicities of ``chi_y``."""
    return _character_a(_require_chamber(y)).total()


def dimension_closed(y: AffineElement) -> int:
    """``(2 dim(iota(y)) + det(ybar)) / 3``."""
    num = 2 * charring.weyl_dimension(iota(_require_chamber(y))) + y.det
    if num % 3:
        raise AssertionError(f"non-integral dimension for {y.label()}")
    return num // 3


def conjugate(x):
    """Diagram involution on elements, group-ring elements and characters."""
    if isinstance(x, AffineElement):
        return x.conj()
    if isinstance(x, GroupRingElement):
        return x.conj()
    if isinstance(x, ExtCharacter):
        return ExtCharacter(x.base.conj(), x.elem.conj())
    raise TypeError(f"cannot conjugate {type(x).__name__}")


# ---------------------------------------------------------------------------
# generators f0, f1, f2

Monomial = tuple[int, int, int]  # (f0 degree <= 1, n1, n2)
Poly = dict[Monomial, int]


def _padd(a: Poly, b: Poly, c: int = 1) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def poly_times_generator(poly: Poly, j: int) -> Poly:
    """Multiply by ``f_j`` using ``f0^2 = 1 + 2 f0 + f1 + f2``."""
    out: Poly = {}
    for (e, n1, n2), c in poly.items():
        if j == 1:
            out = _padd(out, {(e, n1 + 1, n2): c})
        elif j == 2:
            out = _padd(out, {(e, n1, n2 + 1): c})
        elif e == 0:
            out = _padd(out, {(1, n1, n2): c})
        else:
            out = _padd(
                out,
                {(0, n1, n2): c, (1, n1, n2): 2 * c, (0, n1 + 1, n2): c, (0, n1, n2 + 1): c},
            )
    return out


@lru_cache(maxsize=8)
def _generator_table(max_length: int) -> dict[AffineElement, tuple]:
    lengths = bfs_lengths(max_length + 2)
    targets = {x for x, l in lengths.items() if l <= max_length and is_dominant(x)}
    known: dict[AffineElement, Poly] = {IDENTITY: {(0, 0, 0): 1}}
    frontier = [IDENTITY]
    while frontier and not targets <= known.keys():
        progressed = []
        for x in sorted(frontier, key=lambda v: (length(v), v.sort_key())):
            for j in (0, 1, 2):
                row = pieri(j, x)
                unknown = [z for z in row if z not in known]
                if len(unknown) != 1 or abs(row[unknown[0]]) != 1:
                    continue
                new = unknown[0]
                if length(new) > max_length + 2:
                    continue
                poly = poly_times_generator(known[x], j)
                for z, c in row.items():
                    if z != new:
                        poly = _padd(poly, known[z], -c)
                known[new] = {k: v * row[new] for k, v in poly.items()}
                progressed.append(new)
        frontier = progressed + [x for x in frontier if x not in progressed]
        if not progressed:
            break
    missing = targets - known.keys()
    if missing:
        raise AssertionError(f"generator induction stalled at {sorted(m.label() for m in missing)}")
    return {x: tuple(sorted(known[x].items())) for x in known}


def express_in_generators(y: AffineElement) -> Poly:
    """Integer polynomial ``sum c f0^e f1^n1 f2^n2`` (e <= 1) equal to ``chi_y``."""
    _require_chamber(y)
    if not y.in_affine_weyl():
        raise ValueError(f"{y.label()} has non-zero triality")
    n = length(y)
    return dict(_generator_table(max(n, 2))[y])


def evaluate_poly(poly: Poly) -> GroupRingElement:
    gens = [_character_a(g) for g in GENERATOR_ELEMENTS]
    cache: dict[tuple[int, int, int], GroupRingElement] = {}

    def power(k: Monomial) -> GroupRingElement:
        if k not in cache:
            e, n1, n2 = k
            if k == (0, 0, 0):
                cache[k] = GroupRingElement.of(IDENTITY)
            elif n2:
                cache[k] = power((e, n1, n2 - 1)) * gens[2]
            elif n1:
                cache[k] = power((e, n1 - 1, n2)) * gens[1]
            else:
                cache[k] = gens[0]
        return cache[k]

    out = GroupRingElement()
    for k, c in poly.items():
        out = out + power(k) * c
    return out


def format_poly(poly: Poly) -> str:
    parts = []
    for (e, n1, n2), c in sorted(poly.items()):
        mono = [f for f, k in (("f0", e), ("f1", n1), ("f2", n2)) for _ in range(k)]
        body = "*".join(mono) if mono else "1"
        parts.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(parts) if parts else "0"


__all__ = [
    "ExtCharacter",
    "F_CLASS",
    "GroupRingElement",
    "character_of",
    "classical_element",
    "conjugate",
    "decompose",
    "dimension",
    "dimension_closed",
    "evaluate_poly",
    "express_in_generators",
    "format_poly",
    "ext_character",
    "ext_character_classical",
    "ext_character_resolution",
    "multiplicity",
    "pieri",
    "pieri_f",
    "pieri_terms",
    "product_decomposition",
    "product_decomposition_classical",
    "reduce_terms",
    "ring_multiply",
    "structure_constant",
    "structure_constant_classical",
    "structure_constant_direct",
    "verma_character_truncated",
    "verma_multiplicity",
]
