"""Named invariant suites reported by ``sl3fusion verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import admissible, charring, extring
from .weyl import (
    IDENTITY,
    W0,
    W10,
    W20,
    WBAR,
    AffineElement,
    Weight,
    bfs_lengths,
    enumerate_alcove,
    gamma,
    iota,
    is_dominant,
    length,
    reduce_to_fundamental,
    sigma_p,
)

NUMERIC_TOL = 1e-8


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    max_defect: float

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "max_defect": self.max_defect}


def _exact(name: str, mismatches: int) -> Check:
    return Check(name, mismatches == 0, float(mismatches))


def _numeric(name: str, defect: float, tol: float = NUMERIC_TOL) -> Check:
    return Check(name, defect < tol, defect)


def _random_element(rng: random.Random, radius: int = 4) -> AffineElement:
    return AffineElement(
        rng.choice(WBAR), Weight(rng.randint(-radius, radius), rng.randint(-radius, radius))
    )


def group_suite(p: int, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    assoc = inv = tlog = 0
    for _ in range(500):
        x, y, z = (_random_element(rng) for _ in range(3))
        assoc += (x * y) * z != x * (y * z)
        inv += x * x.inverse() != IDENTITY
        tlog += iota(x * y) != y.wbar.inverse().act(iota(x)) + iota(y)
    lengths = bfs_lengths(6)
    bad_len = sum(length(x) != d for x, d in lengths.items())
    alcove = enumerate_alcove(p)
    orbit = sum(sigma_p(p, sigma_p(p, sigma_p(p, x))) != x for x in alcove)
    image = {sigma_p(p, x) for x in alcove}
    reduce_bad = 0
    for _ in range(200):
        y = _random_element(rng)
        x, w = reduce_to_fundamental(y)
        reduce_bad += (not is_dominant(x)) or x * AffineElement(w, Weight(0, 0)) != y
    return [
        _exact("associativity", assoc),
        _exact("inverses", inv),
        _exact("twisted_log", tlog),
        _exact("length_vs_bfs", bad_len),
        _exact("alcove_size", abs(len(alcove) - p * p)),
        _exact("sigma_order_3", orbit + len(set(alcove) ^ image)),
        _exact("reduce_to_fundamental", reduce_bad),
    ]


def ring_suite(p: int, seed: int = 0) -> list[Check]:
    c0 = extring.ext_character(W0).elem
    rel = c0 * c0 - (1 + 2 * c0 + extring.ext_character(W10).elem + extring.ext_character(W20).elem)
    alcove = enumerate_alcove(p)
    cons = sum(
        extring.ext_character_resolution(y).elem != extring.ext_character_classical(y).elem
        for y in alcove
    )
    dims = sum(extring.dimension(y) != extring.dimension_closed(y) for y in alcove)
    pieri_bad = 0
    for y in alcove:
        for j, g in enumerate((W0, W20, W10)):
            pieri_bad += extring.pieri(j, y) != extring.product_decomposition(g, y)
    rng = random.Random(seed)
    sc_bad = 0
    for _ in range(60):
        x, y = rng.choice(alcove), rng.choice(alcove)
        row = extring.product_decomposition_classical(x, y)
        for z, n in row.items():
            sc_bad += extring.structure_constant_direct(x, y, z) != n
        sc_bad += extring.product_decomposition(x, y) != row
    return [
        _exact("f0_relation", len(rel)),
        _exact("constructions_agree", cons),
        _exact("dimension_routes", dims),
        _exact("pieri_vs_product", pieri_bad),
        _exact("structure_constant_routes", sc_bad),
    ]


def fusion_suite(p: int, seed: int = 0, samples: int = 300) -> list[Check]:
    table = admissible.fusion_table(p)
    labels = table.labels
    size = len(labels)
    one = labels.index(IDENTITY)
    conj = [labels.index(y.conj()) for y in labels]
    unit = int(np.abs(table.n[:, one, :] - np.eye(size, dtype=np.int64)).sum())
    duality = sum(
        table.n[i, j, one] != (1 if conj[i] == j else 0) for i in range(size) for j in range(size)
    )
    sig = [labels.index(sigma_p(p, y)) for y in labels]
    current = 0
    for i in range(size):
        for j in range(size):
            current += int((table.n[i, sig[j], sig] != table.n[i, j, :]).sum())
    comm = int((table.n != table.n.transpose(1, 0, 2)).sum())
    mats = [table.n[:, j, :] for j in range(size)]
    assoc = sum(
        int((mats[a] @ mats[b] != mats[b] @ mats[a]).sum()) for a in range(size) for b in range(size)
    )
    rng = random.Random(seed)
    triples = [(rng.randrange(size), rng.randrange(size), rng.randrange(size)) for _ in range(samples)]
    direct = sum(
        admissible.fusion_constant_direct(labels[i], labels[j], labels[k], p) != table.n[i, j, k]
        for i, j, k in triples
    )
    return [
        _exact("nonnegative", int((table.n < 0).sum())),
        _exact("unit_slice", unit),
        _exact("conjugation_duality", duality),
        _exact("commutative", comm),
        _exact("matrices_commute", assoc),
        _exact("simple_current", current),
        _exact("direct_route_sampled", direct),
    ]


def spectral_suite(p: int, seed: int = 0) -> list[Check]:
    table = admissible.fusion_table(p)
    ed = admissible.eigen_data(p)
    raw = admissible.pasquier_verlinde_raw(ed)
    pv_defect = float(np.abs(raw - np.rint(raw.real)).max())
    pv_equal = int((np.rint(raw.real).astype(np.int64) != table.n).sum())
    hp = admissible.hyperplane_points(p)
    col = {d.mu: k for k, d in enumerate(ed.duals)}
    r_def = max((abs(admissible.r_epsilon(d, p)) for d in hp), default=0.0)
    red = max(
        (
            abs(admissible.q_char(y, d, p) - charring.q_character_eval(iota(y), d.mu, 3 * p))
            for y in ed.labels
            for d in hp
        ),
        default=0.0,
    )
    lemma = max(
        (
            abs(ed.psi[i, col[d.mu]] - admissible.lemma_psi(y, d, p))
            for i, y in enumerate(ed.labels)
            for d in hp
        ),
        default=0.0,
    )
    alt = max(
        abs(admissible.q_char(y, d, p) - admissible.q_char_integrable(y, d, p))
        for y in ed.labels
        for d in ed.duals
    )
    return [
        _numeric("unitarity", ed.unitarity_defect()),
        _numeric("homomorphism", admissible.homomorphism_defect(table, ed)),
        _numeric("pasquier_verlinde_rounding", pv_defect, admissible.ROUNDING_TOL),
        _exact("pasquier_verlinde_table", pv_equal),
        _numeric("r_epsilon_hyperplanes", r_def),
        _numeric("hyperplane_reduction", red),
        _numeric("psi_closed_form", lemma),
        _numeric("alternative_evaluation", alt),
        _numeric("gamma_character", max(
            abs(admissible.q_char(gamma(), d, p) - np.exp(2j * np.pi * p * d.mu.triality / 3))
            for d in ed.duals
        )),
    ]


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "group": group_suite,
    "ring": ring_suite,
    "fusion": fusion_suite,
    "spectral": spectral_suite,
}
