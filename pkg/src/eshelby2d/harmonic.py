"""Irreducible spaces H^2 and H^4, their orthonormal bases and complex coordinates.

Each space is two-dimensional, so a harmonic tensor is identified with one
complex number: real part along ``E1`` (or ``EE1``), imaginary part along
``E2`` (or ``EE2``). A rotation by ``t`` multiplies the H^2 coordinate by
``exp(2it)`` and the H^4 coordinate by ``exp(4it)``; the reflection
``diag(1, -1)`` conjugates both.
"""

from dataclasses import dataclass
import cmath
import math

import numpy as np

from .algebra import GroupElement

_S2 = math.sqrt(2.0) / 2.0
_S8 = math.sqrt(8.0) / 8.0


def _unit4(plus, minus):
    t = np.zeros((2, 2, 2, 2))
    for idx in plus:
        t[tuple(int(c) - 1 for c in idx)] = _S8
    for idx in minus:
        t[tuple(int(c) - 1 for c in idx)] = -_S8
    return t


E1 = _S2 * np.array([[1.0, 0.0], [0.0, -1.0]])
E2 = _S2 * np.array([[0.0, 1.0], [1.0, 0.0]])
EE1 = _unit4(["1111", "2222"], ["1122", "1212", "2112", "2121", "1221", "2211"])
EE2 = _unit4(["1112", "1121", "1211", "2111"], ["2221", "2212", "2122", "1222"])
for _c in (E1, E2, EE1, EE2):
    _c.setflags(write=False)

HARM4_RTOL = 1e-10


def h2_project(S):
    S = np.asarray(S, dtype=float)
    return complex(np.sum(S * E1), np.sum(S * E2))


def h2_embed(z):
    z = complex(z)
    return z.real * E1 + z.imag * E2


def h4_project(T):
    T = np.asarray(T, dtype=float)
    return complex(np.sum(T * EE1), np.sum(T * EE2))


def h4_embed(z):
    z = complex(z)
    return z.real * EE1 + z.imag * EE2


def is_dev2(S, tol=0.0):
    S = np.asarray(S, dtype=float)
    return S.shape == (2, 2) and abs(S[0, 1] - S[1, 0]) <= tol and abs(S[0, 0] + S[1, 1]) <= tol


def harm4_residual(T):
    """Norm of the part of ``T`` orthogonal to span{EE1, EE2}."""
    T = np.asarray(T, dtype=float)
    return float(np.linalg.norm((T - h4_embed(h4_project(T))).ravel()))


def is_harm4(T, rtol=HARM4_RTOL):
    T = np.asarray(T, dtype=float)
    scale = max(1.0, float(np.linalg.norm(T.ravel())))
    return T.shape == (2, 2, 2, 2) and harm4_residual(T) <= rtol * scale


def _arg(z):
    # atan2 branch: (-pi, pi]; atan2(-0.0, x<0) would give -pi
    a = math.atan2(z.imag, z.real)
    return math.pi if a == -math.pi else a


@dataclass(frozen=True)
class ComplexRep:
    """Complex coordinates of the deviatoric parts ``(D1, D2, D)``."""

    z1: complex = 0j
    z2: complex = 0j
    z3: complex = 0j

    def __post_init__(self):
        for name in ("z1", "z2", "z3"):
            z = complex(getattr(self, name))
            if not cmath.isfinite(z):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, z)

    H = property(lambda self: abs(self.z1))
    L = property(lambda self: abs(self.z2))
    K = property(lambda self: abs(self.z3))
    theta1 = property(lambda self: _arg(self.z1))
    theta2 = property(lambda self: _arg(self.z2))
    theta3 = property(lambda self: _arg(self.z3))

    def as_tuple(self):
        return (self.z1, self.z2, self.z3)

    def conjugate(self):
        return ComplexRep(self.z1.conjugate(), self.z2.conjugate(), self.z3.conjugate())


# rotation weights of the three slots
WEIGHTS = (2, 2, 4)


def complex_action(g: GroupElement, rep: ComplexRep) -> ComplexRep:
    """Action of ``g`` on ``(z1, z2, z3)``: conjugate if reflecting, then rotate."""
    if g.reflect:
        rep = rep.conjugate()
    t = g.angle
    return ComplexRep(*(z * cmath.exp(1j * w * t) for z, w in zip(rep.as_tuple(), WEIGHTS)))
