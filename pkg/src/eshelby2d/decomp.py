"""Orthogonal irreducible decomposition of a 2D Eshelby tensor.

Every minor-symmetric ``M`` splits uniquely as::

    M_ijkl = lam d_ij d_kl + mu (d_ik d_jl + d_il d_jk)
             + v/2 (d_ik e_jl + d_il e_jk + d_jk e_il + d_jl e_ik)
             + d_ij D1_kl + d_kl D2_ij + D_ijkl

with ``d`` the Kronecker delta, ``e`` the 2D Levi-Civita symbol, ``D1, D2``
symmetric traceless and ``D`` totally symmetric traceless. 3 + 2 + 2 + 2 = 9
parameters, matching the 9 independent components of ``M``.

``v`` is a pseudo-scalar: under a reflection it changes sign.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import DELTA, LEVI_CIVITA, EshelbyTensor, symmetrize_minor
from .harmonic import ComplexRep, h2_project, h4_project, is_dev2, is_harm4

ISO_LAMBDA = np.einsum("ij,kl->ijkl", DELTA, DELTA)
ISO_MU = np.einsum("ik,jl->ijkl", DELTA, DELTA) + np.einsum("il,jk->ijkl", DELTA, DELTA)
SKEW = 0.5 * (np.einsum("ik,jl->ijkl", DELTA, LEVI_CIVITA)
              + np.einsum("il,jk->ijkl", DELTA, LEVI_CIVITA)
              + np.einsum("jk,il->ijkl", DELTA, LEVI_CIVITA)
              + np.einsum("jl,ik->ijkl", DELTA, LEVI_CIVITA))
for _c in (ISO_LAMBDA, ISO_MU, SKEW):
    _c.setflags(write=False)

DEV_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Decomposition:
    """The six parts ``(lam, mu, v, d1, d2, d)``."""

    lam: float
    mu: float
    v: float
    d1: np.ndarray
    d2: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        for name, shape in (("d1", (2, 2)), ("d2", (2, 2)), ("d", (2, 2, 2, 2))):
            a = np.array(getattr(self, name), dtype=float).reshape(shape)
            a.setflags(write=False)
            object.__setattr__(self, name, a)
        for name in ("lam", "mu", "v"):
            object.__setattr__(self, name, float(getattr(self, name)))
        scale = max(1.0, float(np.abs(self.d1).max()), float(np.abs(self.d2).max()))
        if not (is_dev2(self.d1, DEV_TOL * scale) and is_dev2(self.d2, DEV_TOL * scale)):
            raise ValueError("d1 and d2 must be symmetric and traceless")
        if not is_harm4(self.d):
            raise ValueError("d must lie in the harmonic space H^4")

    @classmethod
    def zero(cls):
        return cls(0.0, 0.0, 0.0, np.zeros((2, 2)), np.zeros((2, 2)), np.zeros((2, 2, 2, 2)))

    def allclose(self, other, atol=1e-13):
        return (abs(self.lam - other.lam) <= atol and abs(self.mu - other.mu) <= atol
                and abs(self.v - other.v) <= atol
                and np.allclose(self.d1, other.d1, rtol=0, atol=atol)
                and np.allclose(self.d2, other.d2, rtol=0, atol=atol)
                and np.allclose(self.d, other.d, rtol=0, atol=atol))


def _lower_order_parts(lam, mu, v, d1, d2):
    return (lam * ISO_LAMBDA + mu * ISO_MU + v * SKEW
            + np.einsum("ij,kl->ijkl", DELTA, d1) + np.einsum("kl,ij->ijkl", DELTA, d2))


def decompose(M: EshelbyTensor) -> Decomposition:
    a = M.array
    tr_iikk = np.einsum("iikk->", a)
    tr_ikik = np.einsum("ikik->", a)
    full_trace = tr_iikk  # M_kkll
    lam = 0.375 * tr_iikk - 0.25 * tr_ikik
    mu = 0.25 * tr_ikik - 0.125 * tr_iikk
    v = 0.25 * np.einsum("ij,ikjk->", LEVI_CIVITA, a)
    d1 = 0.5 * np.einsum("kkij->ij", a) - 0.25 * full_trace * DELTA
    d2 = 0.5 * np.einsum("ijkk->ij", a) - 0.25 * full_trace * DELTA
    d = a - _lower_order_parts(lam, mu, v, d1, d2)
    return Decomposition(lam, mu, v, d1, d2, d)


def reconstruct(dec: Decomposition) -> EshelbyTensor:
    a = _lower_order_parts(dec.lam, dec.mu, dec.v, dec.d1, dec.d2) + dec.d
    return EshelbyTensor._trusted(symmetrize_minor(a))


def complex_rep(dec: Decomposition) -> ComplexRep:
    return ComplexRep(h2_project(dec.d1), h2_project(dec.d2), h4_project(dec.d))
