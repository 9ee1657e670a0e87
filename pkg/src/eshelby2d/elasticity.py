"""2D elasticity tensors as the major-symmetric special case.

Major symmetry ``C_ijkl = C_klij`` forces ``v = 0`` and ``D1 = D2`` in the
Eshelby decomposition, leaving two scalars ``(lam, mu)``, one H^2 part
``E2 := D1`` and one H^4 part ``E4 := D``. The five invariants are::

    (lam, mu, I1 = |E2|^2, I2 = |E4|^2, I3 = Re(z1^2 conj z2))

where ``z1, z2`` are the complex coordinates of ``E2, E4``, so
``I3 = sqrt(2) E2_ij E4_ijkl E2_kl`` (same normalization as ``J4``). The
scalar pair is taken to be ``(lam, mu)``; any two independent isotropic
linear scalars would span the same information.
"""

import numpy as np

from .algebra import (EshelbyTensor, SymmetryViolation, as_tensor4, minor_deviation,
                      symmetrize_minor)
from .decomp import decompose
from .invariants import SQRT2

INTERNAL_TOL = 1e-10


class InternalSymmetryBreach(RuntimeError):
    """Decomposition of a major-symmetric tensor produced ``v != 0`` or ``D1 != D2``."""


def _mirror_all(s):
    s[1, 0] = s[0, 1]
    s[:, :, 1, 0] = s[:, :, 0, 1]
    # major: copy upper (ij) <= (kl) block onto the lower one
    pairs = ((0, 0), (0, 1), (1, 1))
    for p, (i, j) in enumerate(pairs):
        for (k, l) in pairs[:p]:
            s[i, j, k, l] = s[k, l, i, j]
    s[1, 0] = s[0, 1]
    s[:, :, 1, 0] = s[:, :, 0, 1]
    return s


def major_deviation(a):
    return float(np.max(np.abs(a - a.transpose(2, 3, 0, 1))))


class ElasticityTensor(EshelbyTensor):
    """Eshelby tensor that also has the major symmetry."""

    __slots__ = ()

    def _check_extra(self, a):
        dev = major_deviation(a)
        if dev > 0.0:
            raise SymmetryViolation(dev, "major")

    @staticmethod
    def _canonicalize(a):
        # chained pair averages: exact on already symmetric input
        a = symmetrize_minor(a)
        return _mirror_all(0.5 * (a + a.transpose(2, 3, 0, 1)))


def to_elasticity(raw, tol=0.0):
    """Validate minor and major symmetry within ``tol``; average over all images."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    a = as_tensor4(raw)
    dev_minor = minor_deviation(a)
    dev_major = major_deviation(a)
    if max(dev_minor, dev_major) > tol:
        what = "minor" if dev_minor >= dev_major else "major"
        raise SymmetryViolation(max(dev_minor, dev_major), what)
    return ElasticityTensor._trusted(ElasticityTensor._canonicalize(a))


def random_elasticity(seed):
    """Six independent entries uniform on [-1, 1]."""
    rng = np.random.default_rng(seed)
    vals = rng.uniform(-1.0, 1.0, size=6)
    pairs = ((0, 0), (0, 1), (1, 1))
    a = np.zeros((2, 2, 2, 2))
    n = 0
    for p, (i, j) in enumerate(pairs):
        for (k, l) in pairs[p:]:
            a[i, j, k, l] = vals[n]
            n += 1
    return ElasticityTensor._trusted(_mirror_all(a))


def elasticity_decomposition(C):
    dec = decompose(C)
    scale = max(1.0, C.max_abs())
    if abs(dec.v) > INTERNAL_TOL * scale:
        raise InternalSymmetryBreach(f"v = {dec.v:.3g} for a major-symmetric tensor")
    gap = float(np.max(np.abs(dec.d1 - dec.d2)))
    if gap > INTERNAL_TOL * scale:
        raise InternalSymmetryBreach(f"|D1 - D2| = {gap:.3g} for a major-symmetric tensor")
    return dec


def elasticity_invariants(C):
    """``(lam, mu, I1, I2, I3)`` of an elasticity tensor."""
    dec = elasticity_decomposition(C)
    e2, e4 = dec.d1, dec.d
    return np.array([
        dec.lam,
        dec.mu,
        np.einsum("ij,ij->", e2, e2),
        np.einsum("ijkl,ijkl->", e4, e4),
        SQRT2 * np.einsum("ij,ijkl,kl->", e2, e4, e2),
    ])
