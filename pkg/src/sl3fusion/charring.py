"""Classical sl(3) characters, Kac-Walton fusion and integrable q-characters."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .weyl import (
    POSITIVE_ROOTS,
    RHO,
    ROTATIONS,
    THETA,
    WBAR,
    Weight,
    inner3,
    kostant,
    reflect_to_dominant,
)


def _require_dominant(lam: Weight) -> Weight:
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"weight {lam} is not dominant")
    return lam


@lru_cache(maxsize=None)
def weight_multiplicity(lam: Weight, mu: Weight) -> int:
    """Multiplicity of ``mu`` in the irrep of highest weight ``lam``
    (Kostant's alternating sum)."""
    lam = _require_dominant(lam)
    return sum(w.det * kostant(w.dot(lam) - mu) for w in WBAR)


@lru_cache(maxsize=None)
def _character(lam: Weight) -> tuple[tuple[Weight, int], ...]:
    # dominant weights below lam, then their W-orbits
    out: dict[Weight, int] = {}
    a_max = (2 * lam.c1 + lam.c2) // 3 + 1
    b_max = (lam.c1 + 2 * lam.c2) // 3 + 1
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            mu = Weight(lam.c1 - 2 * a + b, lam.c2 - 2 * b + a)
            if not mu.is_dominant():
                continue
            m = weight_multiplicity(lam, mu)
            if m:
                for w in WBAR:
                    out[w.act(mu)] = m
    return tuple(sorted(out.items()))


def character(lam: Weight) -> dict[Weight, int]:
    """Weight multiplicities of the irrep ``lam`` as a sparse map."""
    return dict(_character(_require_dominant(lam)))


def weyl_dimension(lam: Weight) -> int:
    lam = _require_dominant(lam)
    return (lam.c1 + 1) * (lam.c2 + 1) * (lam.c1 + lam.c2 + 2) // 2


def shifted_dominant(nu: Weight) -> tuple[int, Weight | None]:
    """Resolve ``nu`` through the shifted Weyl action: ``(det w, w.nu)`` with
    ``w.nu`` dominant, or ``(0, None)`` when ``nu + rho`` sits on a wall."""
    found = reflect_to_dominant(Weight(nu[0] + 1, nu[1] + 1))
    if found is None:
        return 0, None
    v, w = found
    return w.det, Weight(v.c1 - 1, v.c2 - 1)


def tensor_multiplicity(lam: Weight, mu: Weight, nu: Weight) -> int:
    """Classical Weyl-Steinberg formula for the multiplicity of ``nu`` in
    ``lam (x) mu``."""
    lam, mu, nu = (_require_dominant(v) for v in (lam, mu, nu))
    ch = _character(lam)
    chd = dict(ch)
    return sum(w.det * chd.get(w.dot(nu) - mu, 0) for w in WBAR)


def tensor_product(lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Full decomposition of ``lam (x) mu`` (Brauer-Klimyk)."""
    lam, mu = _require_dominant(lam), _require_dominant(mu)
    out: dict[Weight, int] = {}
    for kappa, m in _character(lam):
        sign, nu = shifted_dominant(mu + kappa)
        if sign:
            out[nu] = out.get(nu, 0) + sign * m
    return {nu: n for nu, n in sorted(out.items()) if n}


def decompose(char: dict[Weight, int]) -> dict[Weight, int]:
    """Split a W-invariant weight multiset into irreducible characters by
    repeatedly removing the character of a highest dominant weight."""
    rest = {k: v for k, v in char.items() if v}
    out: dict[Weight, int] = {}
    while rest:
        top = max(rest, key=lambda v: (v.c1 + v.c2, v.c1))
        if not top.is_dominant():
            raise ValueError(f"not a character: highest weight {top} is not dominant")
        c = rest[top]
        out[top] = out.get(top, 0) + c
        for k, m in _character(top):
            left = rest.get(k, 0) - c * m
            if left:
                rest[k] = left
            else:
                rest.pop(k, None)
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# integrable (Kac-Walton) fusion


@dataclass(frozen=True)
class FoldResult:
    weight: Weight | None
    sign: int


def fold_to_alcove(nu: Weight, h: int) -> FoldResult:
    """Reflect ``nu + rho`` into the level-(h-3) affine alcove."""
    if h < 2:
        raise ValueError(f"h must be >= 2, got {h}")
    v1, v2 = nu[0] + 1, nu[1] + 1
    sign = 1
    for _ in range(10 * h + 10 * (abs(v1) + abs(v2))):
        if v1 == 0 or v2 == 0 or v1 + v2 == h:
            return FoldResult(None, 0)
        if v1 < 0:
            v1, v2 = -v1, v1 + v2
        elif v2 < 0:
            v1, v2 = v1 + v2, -v2
        elif v1 + v2 > h:
            d = v1 + v2 - h
            v1, v2 = v1 - d, v2 - d
        else:
            return FoldResult(Weight(v1 - 1, v2 - 1), sign)
        sign = -sign
    raise AssertionError(f"folding of {nu} at h={h} did not terminate")


def _require_in_alcove(lam: Weight, h: int) -> Weight:
    lam = _require_dominant(lam)
    if lam.level() > h - 3:
        raise ValueError(f"weight {lam} is outside the level-{h - 3} alcove")
    return lam


@lru_cache(maxsize=None)
def _fusion_row(lam: Weight, mu: Weight, h: int) -> tuple[tuple[Weight, int], ...]:
    out: dict[Weight, int] = {}
    for kappa, m in _character(lam):
        f = fold_to_alcove(mu + kappa, h)
        if f.sign:
            out[f.weight] = out.get(f.weight, 0) + f.sign * m
    return tuple((nu, n) for nu, n in sorted(out.items()) if n)


def integrable_fusion_row(lam: Weight, mu: Weight, h: int) -> dict[Weight, int]:
    """Kac-Walton decomposition of ``lam x mu`` at shifted level ``h``."""
    lam, mu = _require_in_alcove(lam, h), _require_in_alcove(mu, h)
    return dict(_fusion_row(lam, mu, h))


def integrable_fusion(lam: Weight, mu: Weight, nu: Weight, h: int) -> int:
    nu = _require_in_alcove(nu, h)
    return integrable_fusion_row(lam, mu, h).get(nu, 0)


# ---------------------------------------------------------------------------
# q-characters and modular S


def _phase(n3: int, h: int, sign: int = -1) -> complex:
    """``exp(sign * 2 pi i * n3 / (3h))`` with the argument reduced exactly."""
    k = n3 % (3 * h)
    return cmath.exp(sign * 2j * math.pi * k / (3 * h))


@lru_cache(maxsize=None)
def _character_arrays(lam: Weight) -> tuple[np.ndarray, np.ndarray]:
    ch = _character(lam)
    weights = np.array([k for k, _ in ch], dtype=np.int64)
    mults = np.array([m for _, m in ch], dtype=np.float64)
    return weights, mults


def _dominant_q_character(lam: Weight, mu: Weight, h: int) -> complex:
    weights, mults = _character_arrays(lam)
    v = (mu[0] + 1, mu[1] + 1)
    n3 = (2 * v[0] + v[1]) * weights[:, 0] + (v[0] + 2 * v[1]) * weights[:, 1]
    k = np.mod(n3, 3 * h)
    return complex(np.sum(mults * np.exp(-2j * np.pi * k / (3 * h))))


def q_character_eval(nu: Weight, mu: Weight, h: int) -> complex:
    """``sum_mu' m^nu_mu' exp(-2 pi i <mu', mu + rho> / h)``, extended to
    non-dominant ``nu`` by the shifted Weyl action."""
    if h < 2:
        raise ValueError(f"h must be >= 2, got {h}")
    sign, dom = shifted_dominant(Weight(*nu))
    if not sign:
        return 0j
    return sign * _dominant_q_character(dom, Weight(*mu), h)


def modular_s(lam: Weight, mu: Weight, h: int) -> complex:
    """Kac-Peterson matrix ``(-i / (h sqrt 3)) sum_w det(w) e(-<w(lam+rho), mu+rho>/h)``."""
    a = Weight(lam[0] + 1, lam[1] + 1)
    b = Weight(mu[0] + 1, mu[1] + 1)
    total = sum(w.det * _phase(inner3(w.act(a), b), h) for w in WBAR)
    return -1j * total / (h * math.sqrt(3))


def r_eval(mu: Weight, p: int) -> complex:
    """``R(mu) = sum over rotations a of exp(-2 pi i <a(theta), mu + rho> / 3p)``."""
    b = Weight(mu[0] + 1, mu[1] + 1)
    return sum(_phase(inner3(a.act(THETA), b), 3 * p) for a in ROTATIONS)


def s_matrix(labels: list[Weight], duals: list[Weight], h: int) -> np.ndarray:
    return np.array([[modular_s(a, b, h) for b in duals] for a in labels])


__all__ = [
    "FoldResult",
    "POSITIVE_ROOTS",
    "RHO",
    "character",
    "decompose",
    "fold_to_alcove",
    "integrable_fusion",
    "integrable_fusion_row",
    "modular_s",
    "q_character_eval",
    "r_eval",
    "s_matrix",
    "shifted_dominant",
    "tensor_multiplicity",
    "tensor_product",
    "weight_multiplicity",
    "weyl_dimension",
]
