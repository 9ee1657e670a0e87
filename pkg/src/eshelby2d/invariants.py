"""The ten-invariant isotropic basis J1..J10 and related identities.

Normalization. With the orthonormal bases of H^2 and H^4, the cubic
contraction ``D1_ij D_ijkl D1_kl`` equals ``Re(z1^2 conj(z3)) / sqrt(2)``.
The cubic invariants here are defined by the complex forms::

    J4 = Re(z1^2 conj z3) = sqrt(2) D1_ij D_ijkl D1_kl
    J5 = Re(z2^2 conj z3) = sqrt(2) D2_ij D_ijkl D2_kl
    J7 = Re(z1 z2 conj z3) = sqrt(2) D1_ij D_ijkl D2_kl

which is the normalization under which ``J4 = H^2 K cos(2 t1 - t3)`` and the
syzygies for J11..J16 hold. The quadratic ones need no factor.

The fourth-order contractions ``A:D:D:B`` (``A_ij D_ijkl D_klpq B_pq``)
satisfy, for A, B in H^2, ``A:D:D:B = (|D|^2 / 2) A.B``; hence::

    D1:D:D:D1 = J1 J3 / 2,  D2:D:D:D2 = J2 J3 / 2,  D1:D:D:D2 = J3 J6 / 2.
"""

from dataclasses import dataclass, fields
import math

import numpy as np

from .decomp import Decomposition, complex_rep, decompose
from .harmonic import ComplexRep, h2_embed, h4_embed

SQRT2 = math.sqrt(2.0)

#: polynomial degree of J1..J10 in the components of M
DEGREES = (2, 2, 2, 3, 3, 2, 3, 1, 1, 1)

#: coefficients c in ``A:D:D:B = c * (product of basis invariants)``
EXAMPLE1_COEFFS = (0.5, 0.5, 0.5)


@dataclass(frozen=True)
class InvariantVector:
    j1: float
    j2: float
    j3: float
    j4: float
    j5: float
    j6: float
    j7: float
    j8: float
    j9: float
    j10: float

    degrees = DEGREES

    def as_array(self):
        return np.array([getattr(self, f.name) for f in fields(self)])

    def as_dict(self):
        return {f.name: float(getattr(self, f.name)) for f in fields(self)}

    def __getitem__(self, n):
        """1-based access, ``iv[4]`` is J4."""
        if not 1 <= n <= 10:
            raise IndexError(n)
        return getattr(self, f"j{n}")


@dataclass(frozen=True)
class DerivedInvariants:
    j11: float
    j12: float
    j13: float
    j14: float
    j15: float
    j16: float

    def as_array(self):
        return np.array([getattr(self, f.name) for f in fields(self)])

    def as_dict(self):
        return {f.name: float(getattr(self, f.name)) for f in fields(self)}


@dataclass(frozen=True)
class PolarConfig:
    """Norms and angles of the deviatoric parts, plus optional scalars."""

    H: float = 0.0
    L: float = 0.0
    K: float = 0.0
    theta1: float = 0.0
    theta2: float = 0.0
    theta3: float = 0.0
    lam: float = 0.0
    mu: float = 0.0
    v: float = 0.0

    def __post_init__(self):
        if min(self.H, self.L, self.K) < 0:
            raise ValueError("H, L, K must be nonnegative")
        if not all(math.isfinite(getattr(self, f.name)) for f in fields(self)):
            raise ValueError("PolarConfig entries must be finite")

    def rep(self):
        return ComplexRep(self.H * complex(math.cos(self.theta1), math.sin(self.theta1)),
                          self.L * complex(math.cos(self.theta2), math.sin(self.theta2)),
                          self.K * complex(math.cos(self.theta3), math.sin(self.theta3)))

    def decomposition(self):
        r = self.rep()
        return Decomposition(self.lam, self.mu, self.v,
                             h2_embed(r.z1), h2_embed(r.z2), h4_embed(r.z3))


def invariant_basis(dec: Decomposition) -> InvariantVector:
    """J1..J10 by direct index contraction."""
    d1, d2, d = dec.d1, dec.d2, dec.d
    return InvariantVector(
        float(np.einsum("ij,ij->", d1, d1)),
        float(np.einsum("ij,ij->", d2, d2)),
        float(np.einsum("ijkl,ijkl->", d, d)),
        SQRT2 * float(np.einsum("ij,ijkl,kl->", d1, d, d1)),
        SQRT2 * float(np.einsum("ij,ijkl,kl->", d2, d, d2)),
        float(np.einsum("ij,ij->", d1, d2)),
        SQRT2 * float(np.einsum("ij,ijkl,kl->", d1, d, d2)),
        dec.lam, dec.mu, dec.v,
    )


def invariant_basis_complex(rep: ComplexRep, lam=0.0, mu=0.0, v=0.0) -> InvariantVector:
    z1, z2, z3 = rep.as_tuple()
    c3 = z3.conjugate()
    return InvariantVector(
        abs(z1) ** 2, abs(z2) ** 2, abs(z3) ** 2,
        (z1 * z1 * c3).real, (z2 * z2 * c3).real,
        (z1 * z2.conjugate()).real, (z1 * z2 * c3).real,
        float(lam), float(mu), float(v),
    )


def tensor_invariants(M) -> InvariantVector:
    return invariant_basis(decompose(M))


def derived_invariants(iv: InvariantVector) -> DerivedInvariants:
    J1, J2, J3, J4, J5, J6, J7 = (iv[n] for n in range(1, 8))
    return DerivedInvariants(
        J6 * J6 * J3 - J7 * J7,
        J1 * J7 - J4 * J6,
        J1 * J3 * J6 - J4 * J7,
        J5 * J6 - J2 * J7,
        J2 * J3 * J6 - J5 * J7,
        0.5 * (J1 * J5 - J2 * J4),
    )


def trig_invariants(cfg: PolarConfig):
    """J1..J7 from norms and angles, as a length-7 array."""
    H, L, K = cfg.H, cfg.L, cfg.K
    t1, t2, t3 = cfg.theta1, cfg.theta2, cfg.theta3
    return np.array([
        H * H, L * L, K * K,
        H * H * K * math.cos(2 * t1 - t3),
        L * L * K * math.cos(2 * t2 - t3),
        H * L * math.cos(t1 - t2),
        H * K * L * math.cos(t1 + t2 - t3),
    ])


def trig_derived(cfg: PolarConfig) -> DerivedInvariants:
    H, L, K = cfg.H, cfg.L, cfg.K
    t1, t2, t3 = cfg.theta1, cfg.theta2, cfg.theta3
    s1 = math.sin(2 * t1 - t3)
    s2 = math.sin(2 * t2 - t3)
    s12 = math.sin(t1 - t2)
    s123 = math.sin(t1 + t2 - t3)
    return DerivedInvariants(
        H**2 * L**2 * K**2 * s1 * s2,
        H**3 * L * K * s1 * s12,
        H**3 * L * K**2 * s1 * s123,
        H * L**3 * K * s2 * s12,
        H * L**3 * K**2 * s2 * s123,
        H**2 * L**2 * K * s12 * s123,
    )


def syzygy_residuals(cfg: PolarConfig):
    """Polynomial form minus trig form for J11..J16, as a length-6 array."""
    poly = derived_invariants(invariant_basis(cfg.decomposition())).as_array()
    return poly - trig_derived(cfg).as_array()


def _ddot_chain(a, d, b):
    return float(np.einsum("ij,ijkl,klpq,pq->", a, d, d, b))


def example1_residuals(M):
    """Residuals of the three quartic identities ``A:D:D:B = c J J``."""
    dec = decompose(M)
    iv = invariant_basis(dec)
    c1, c2, c3 = EXAMPLE1_COEFFS
    return np.array([
        _ddot_chain(dec.d1, dec.d, dec.d1) - c1 * iv.j1 * iv.j3,
        _ddot_chain(dec.d2, dec.d, dec.d2) - c2 * iv.j2 * iv.j3,
        _ddot_chain(dec.d1, dec.d, dec.d2) - c3 * iv.j3 * iv.j6,
    ])


_HALF_PI = math.pi / 2

_WITNESSES = {
    1: (PolarConfig(H=1.0), PolarConfig(H=2.0)),
    2: (PolarConfig(L=1.0), PolarConfig(L=2.0)),
    3: (PolarConfig(K=1.0), PolarConfig(K=2.0)),
    # 2*t1 - t3 = 0 vs pi
    4: (PolarConfig(H=1.0, K=1.0), PolarConfig(H=1.0, K=1.0, theta1=_HALF_PI)),
    # 2*t2 - t3 = 0 vs pi
    5: (PolarConfig(L=1.0, K=1.0), PolarConfig(L=1.0, K=1.0, theta2=_HALF_PI)),
    # t1 - t2 = 0 vs pi/2
    6: (PolarConfig(H=1.0, L=1.0), PolarConfig(H=1.0, L=1.0, theta1=_HALF_PI)),
    7: (PolarConfig(H=1.0, L=1.0, K=1.0, theta1=math.pi / 2, theta3=3 * math.pi / 4),
        PolarConfig(H=1.0, L=1.0, K=1.0, theta1=3 * math.pi / 2, theta3=11 * math.pi / 4)),
}


def irreducibility_witness(s):
    """Pair of configurations on which only ``J_s`` (among J1..J7) differs."""
    if s not in _WITNESSES:
        raise ValueError(f"witness index must be in 1..7, got {s!r}")
    return _WITNESSES[s]
