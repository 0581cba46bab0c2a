"""Quantisation at k + 3 = 3/p: the dual set E_p, quantised characters,
admissible fusion tables and their simultaneous diagonalisation."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import charring
from .weyl import (
    A_GROUP,
    W0,
    WBAR,
    AffineElement,
    FiniteWeyl,
    Weight,
    check_p,
    dominant_weights,
    enumerate_alcove,
    enumerate_extended_alcove,
    gamma,
    iota,
    iota_preimage,
)

UNITARITY_TOL = 1e-8
ROUNDING_TOL = 1e-6


@dataclass(frozen=True)
class DualPoint:
    """A point of E_p with its sign choice and the hyperplanes through it."""

    mu: Weight
    epsilon: int
    hyperplanes: tuple[str, ...] = ()

    @property
    def on_hyperplane(self) -> str | None:
        return self.hyperplanes[0] if self.hyperplanes else None

    def __str__(self) -> str:
        return str(self.mu)


def _hyperplanes(mu: Weight, p: int) -> tuple[str, ...]:
    out = []
    if mu.c1 + 1 == p:
        out.append("alpha1")
    if mu.c2 + 1 == p:
        out.append("alpha2")
    if mu.c1 + mu.c2 + 2 == p:
        out.append("theta")
    return tuple(out)


def make_dual_point(mu: Weight, p: int) -> DualPoint:
    mu = Weight(*mu)
    if not (0 <= mu.c1 <= p - 1 and 0 <= mu.c2 <= p - 1):
        raise ValueError(f"{mu} is not in E_{p}")
    eps = 1 if mu.c1 + mu.c2 <= p - 2 else -1
    return DualPoint(mu, eps, _hyperplanes(mu, p))


@lru_cache(maxsize=None)
def _dual_set(p: int) -> tuple[DualPoint, ...]:
    return tuple(make_dual_point(Weight(a, b), p) for a in range(p) for b in range(p))


def dual_set(p: int) -> list[DualPoint]:
    """The p^2 points ``0 <= mu_i <= p - 1`` in lexicographic order."""
    return list(_dual_set(check_p(p)))


def hyperplane_points(p: int) -> list[DualPoint]:
    return [d for d in dual_set(p) if d.hyperplanes]


def _as_point(mu, p: int) -> DualPoint:
    return mu if isinstance(mu, DualPoint) else make_dual_point(mu, p)


# ---------------------------------------------------------------------------
# F(mu) and the quantised characters


def f_eval(mu, p: int) -> float:
    """``F(mu) = epsilon(mu) |R(mu)|``."""
    d = _as_point(mu, p)
    return d.epsilon * abs(charring.r_eval(d.mu, p))


def r_epsilon(mu, p: int) -> complex:
    """``R + conj(R) - epsilon |R|``; vanishes on the hyperplanes."""
    d = _as_point(mu, p)
    r = charring.r_eval(d.mu, p)
    return r + r.conjugate() - d.epsilon * abs(r)


_SHIFTS_EVEN = (Weight(0, 0), Weight(-2, 0), Weight(0, -2))
_SHIFTS_ODD = (Weight(-1, -1), Weight(0, -1), Weight(-1, 0))


def _shifted_terms(y: AffineElement, shifts) -> list[Weight]:
    winv = y.wbar.inverse()
    return [y.lam + winv.dot(s) for s in shifts]


def _phase(y: AffineElement, mu: Weight, p: int) -> complex:
    k = (p * mu.triality * y.lam.triality) % 3
    return cmath.exp(-2j * math.pi * k / 3)


def _require_extended_alcove(y: AffineElement, p: int) -> AffineElement:
    if y not in _extended_alcove_set(p):
        raise ValueError(f"{y.label()} is not in the admissible alcove for p={p}")
    return y


@lru_cache(maxsize=None)
def _extended_alcove_set(p: int) -> frozenset:
    return frozenset(enumerate_extended_alcove(p))


def q_char(y: AffineElement, mu, p: int) -> complex:
    """Quantised character ``chi_y^{(p)}(mu)`` from its six level-p pieces."""
    check_p(p)
    d = _as_point(mu, p)
    _require_extended_alcove(y, p)
    even = sum(charring.q_character_eval(v, d.mu, p) for v in _shifted_terms(y, _SHIFTS_EVEN))
    odd = sum(charring.q_character_eval(v, d.mu, p) for v in _shifted_terms(y, _SHIFTS_ODD))
    return _phase(y, d.mu, p) * (even + (f_eval(d, p) + 2) * odd)


def q_char_integrable(y: AffineElement, mu, p: int) -> complex:
    """Same value through the level-3p character of ``iota(y)`` corrected by
    ``r_epsilon`` times the three odd level-p pieces."""
    check_p(p)
    d = _as_point(mu, p)
    _require_extended_alcove(y, p)
    odd = sum(charring.q_character_eval(v, d.mu, p) for v in _shifted_terms(y, _SHIFTS_ODD))
    main = charring.q_character_eval(iota(y), d.mu, 3 * p)
    return _phase(y, d.mu, p) * (main - r_epsilon(d, p) * odd)


# ---------------------------------------------------------------------------
# fusion tables


@dataclass(frozen=True)
class FusionTable:
    """``n[x, y, z] = N^z_{x,y}`` over the ordered alcove ``labels``."""

    p: int
    labels: tuple[AffineElement, ...]
    n: np.ndarray = field(repr=False)

    def index(self, y: AffineElement) -> int:
        return self.labels.index(y)

    def matrix(self, y: AffineElement) -> np.ndarray:
        """Fusion matrix ``(N_y)_{x z} = N^z_{x,y}``."""
        return self.n[:, self.index(y), :]

    def row(self, x: AffineElement, y: AffineElement) -> dict[AffineElement, int]:
        i, j = self.index(x), self.index(y)
        return {z: int(c) for z, c in zip(self.labels, self.n[i, j]) if c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionTable):
            return NotImplemented
        return (
            self.p == other.p
            and self.labels == other.labels
            and np.array_equal(self.n, other.n)
        )

    __hash__ = None  # type: ignore[assignment]


def alcove_labels(p: int) -> tuple[AffineElement, ...]:
    return tuple(enumerate_alcove(p))


@lru_cache(maxsize=None)
def _fusion_table_kw(p: int) -> FusionTable:
    labels = alcove_labels(p)
    pos = {iota(z): k for k, z in enumerate(labels)}
    size = len(labels)
    n = np.zeros((size, size, size), dtype=np.int64)
    for i, x in enumerate(labels):
        for j, y in enumerate(labels):
            for nu, c in charring.integrable_fusion_row(iota(x), iota(y), 3 * p).items():
                k = pos.get(nu)
                if k is None:
                    if iota_preimage(nu) is not None:
                        raise AssertionError(f"iota-image {nu} outside C_{p}")
                    continue
                n[i, j, k] = c
    n.setflags(write=False)
    return FusionTable(p, labels, n)


def fusion_table(p: int) -> FusionTable:
    """Admissible fusion rules from Kac-Walton at shifted level 3p."""
    return _fusion_table_kw(check_p(p))


def fusion_constant_direct(x: AffineElement, y: AffineElement, z: AffineElement, p: int) -> int:
    """``sum_{w in t_{pQ} x| W} det(w) m^x_{z w y^{-1}}`` with the translation sum
    restricted to the support of the weight diagram of ``iota(x)``."""
    check_p(p)
    lam = iota(x)
    if (x.triality + y.triality - z.triality) % 3:
        return 0
    a_max, b_max = lam.root_coords()
    reach = float(max(a_max, b_max))
    yinv = y.inverse()
    ybar = y.wbar
    iyinv = iota(yinv)
    total = 0
    for w in WBAR:
        base = z * AffineElement(w, Weight(0, 0))
        # iota(base t_{p beta} y^-1) = ybar(iota(base) - 3p beta) + iota(y^-1)
        centre = iota(base) + ybar.inverse().act(iyinv)
        ca, cb = (float(c) / (3 * p) for c in centre.root_coords())
        k = int(math.ceil(2 * reach / (3 * p))) + 1
        for a in range(math.floor(ca) - k, math.ceil(ca) + k + 1):
            for b in range(math.floor(cb) - k, math.ceil(cb) + k + 1):
                beta = Weight(2 * a - b, 2 * b - a)
                u = base * AffineElement(FiniteWeyl.E, beta * p) * yinv
                total += w.det * charring.weight_multiplicity(lam, iota(u))
    return total


def fusion_table_direct(p: int) -> FusionTable:
    labels = alcove_labels(check_p(p))
    size = len(labels)
    n = np.zeros((size, size, size), dtype=np.int64)
    for i, x in enumerate(labels):
        for j, y in enumerate(labels):
            for k, z in enumerate(labels):
                n[i, j, k] = fusion_constant_direct(x, y, z, p)
    n.setflags(write=False)
    return FusionTable(p, labels, n)


# ---------------------------------------------------------------------------
# spectral data


@dataclass(frozen=True)
class EigenData:
    p: int
    labels: tuple[AffineElement, ...]
    duals: tuple[DualPoint, ...]
    chi: np.ndarray = field(repr=False)
    psi: np.ndarray = field(repr=False)
    psi1: np.ndarray = field(repr=False)

    def unitarity_defect(self) -> float:
        g = self.psi.conj().T @ self.psi
        h = self.psi @ self.psi.conj().T
        eye = np.eye(len(self.labels))
        return float(max(np.abs(g - eye).max(), np.abs(h - eye).max()))


def character_matrix(p: int) -> np.ndarray:
    labels = alcove_labels(check_p(p))
    duals = _dual_set(p)
    return np.array([[q_char(y, d, p) for d in duals] for y in labels])


@lru_cache(maxsize=None)
def _eigen_data(p: int) -> EigenData:
    labels = alcove_labels(p)
    duals = _dual_set(p)
    chi = character_matrix(p)
    psi1 = 1.0 / np.sqrt(np.sum(np.abs(chi) ** 2, axis=0))
    psi = chi * psi1[None, :]
    for arr in (chi, psi, psi1):
        arr.setflags(write=False)
    ed = EigenData(p, labels, duals, chi, psi, psi1)
    defect = ed.unitarity_defect()
    if defect > UNITARITY_TOL:
        raise ArithmeticError(f"eigenvector matrix for p={p} is not unitary (defect {defect:.3e})")
    return ed


def eigen_data(p: int) -> EigenData:
    return _eigen_data(check_p(p))


def pasquier_verlinde_raw(ed: EigenData) -> np.ndarray:
    """``sum_mu psi_x psi_y conj(psi_z) / psi_1`` as a complex tensor."""
    psi = ed.psi
    w = 1.0 / psi[0]
    return np.einsum("xm,ym,zm,m->xyz", psi, psi, psi.conj(), w)


def pasquier_verlinde(ed: EigenData) -> FusionTable:
    raw = pasquier_verlinde_raw(ed)
    rounded = np.rint(raw.real)
    defect = float(np.abs(raw - rounded).max())
    if defect >= ROUNDING_TOL:
        raise ArithmeticError(f"Pasquier-Verlinde values are not integral (defect {defect:.3e})")
    n = rounded.astype(np.int64)
    n.setflags(write=False)
    return FusionTable(ed.p, ed.labels, n)


def homomorphism_defect(table: FusionTable, ed: EigenData) -> float:
    """``max |chi_x chi_y - sum_z N^z_{x,y} chi_z|`` over all x, y and mu."""
    chi = ed.chi
    prod = chi[:, None, :] * chi[None, :, :]
    lin = np.einsum("xyz,zm->xym", table.n, chi)
    return float(np.abs(prod - lin).max())


def lemma_psi(y: AffineElement, d: DualPoint, p: int) -> complex:
    """Closed form of ``psi_y`` at a hyperplane point via the level-3p S-matrix."""
    s = charring.modular_s(iota(y), d.mu, 3 * p)
    if d.mu == Weight(p - 1, p - 1):
        return s
    return math.sqrt(3) * s


def sigma_level(k: int, lam: Weight) -> Weight:
    """Alcove automorphism ``s1 s2 (lam) + k w1`` of ``P_+^k``."""
    v = FiniteWeyl.S12.act(lam)
    return Weight(v.c1 + k, v.c2)


def coset_partners(p: int) -> list[tuple[AffineElement, AffineElement]]:
    """Pairs ``(y, y')`` of alcove elements equivalent under the right action of
    ``A^[p]``, built from the rotation of each leaf."""
    out = []
    g = gamma()
    for lam in dominant_weights(p - 1):
        base = AffineElement(FiniteWeyl.E, lam)
        for l in (1, 2):
            inv = _sigma_inverse(p - 1, lam, l)
            out.append((base, g**l * AffineElement(FiniteWeyl.E, inv)))
    for lam in dominant_weights(p - 2):
        base = W0 * AffineElement(FiniteWeyl.E, lam)
        for l in (1, 2):
            inv = _sigma_inverse(p - 2, lam, l)
            out.append((base, g ** (-l) * W0 * AffineElement(FiniteWeyl.E, inv)))
    return out


def _sigma_inverse(k: int, lam: Weight, l: int) -> Weight:
    v = lam
    for _ in range((-l) % 3):
        v = sigma_level(k, v)
    return v


__all__ = [
    "A_GROUP",
    "DualPoint",
    "EigenData",
    "FusionTable",
    "coset_partners",
    "dual_set",
    "eigen_data",
    "f_eval",
    "fusion_constant_direct",
    "fusion_table",
    "fusion_table_direct",
    "homomorphism_defect",
    "hyperplane_points",
    "lemma_psi",
    "make_dual_point",
    "pasquier_verlinde",
    "pasquier_verlinde_raw",
    "q_char",
    "q_char_integrable",
    "r_epsilon",
    "sigma_level",
]
