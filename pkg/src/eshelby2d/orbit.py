"""Orbit equivalence under SO(2) and O(2).

Equivalence is decided by exhibiting an explicit group element that maps one
tensor onto the other. Invariant comparison is only a necessary-condition
filter. Since every irreducible part has even rotation weight, ``Q(t)`` and
``Q(t + pi)`` act identically, and recovered angles are meaningful mod pi.
"""

from dataclasses import dataclass, field
import cmath
import math

import numpy as np
from scipy.optimize import minimize_scalar

from . import _kernels
from .algebra import TWO_PI, GroupElement, REFLECTION, group_apply
from .decomp import complex_rep, decompose
from .harmonic import WEIGHTS
from .invariants import DEGREES, invariant_basis

SO2 = "so2"
O2 = "o2"

DEFAULT_TOL = 1e-8
DEFAULT_RTOL = 1e-8
DEFAULT_ATOL = 1e-10
DEFAULT_GRID = 720

# slot order for candidate angles: z3 (weight 4) first, then z1, z2
_LADDER = (2, 0, 1)


def _check_group(group):
    group = str(group).lower()
    if group not in (SO2, O2):
        raise ValueError(f"group must be 'so2' or 'o2', got {group!r}")
    return group


@dataclass(frozen=True)
class AlignmentResult:
    found: bool
    element: GroupElement = None
    residual: float = math.inf

    def as_dict(self):
        return {
            "found": self.found,
            "witness": None if self.element is None else
            {"angle": self.element.angle, "reflect": self.element.reflect},
            "residual": self.residual,
        }


def distance(M1, M2):
    return float(np.linalg.norm((M1.array - M2.array).ravel()))


def _candidate_angles(rep1, rep2, scale):
    """Angles t with rep1 rotated by t matching rep2 in at least one slot."""
    zero = 1e-14 * scale
    a = rep1.as_tuple()
    b = rep2.as_tuple()
    angles = []
    for m in _LADDER:
        if abs(a[m]) <= zero:
            continue
        w = WEIGHTS[m]
        base = cmath.phase(b[m] / a[m]) if abs(b[m]) > zero else 0.0
        for n in range(w):
            angles.append(((base + TWO_PI * n) / w) % TWO_PI)
    if not angles:
        angles.append(0.0)
    return angles


def align(M1, M2, group=O2, tol=DEFAULT_TOL):
    """Find ``g`` in the group with ``g * M1 == M2`` within Frobenius distance ``tol``."""
    group = _check_group(group)
    if tol <= 0:
        raise ValueError("tol must be positive")
    dec1, dec2 = decompose(M1), decompose(M2)
    rep1, rep2 = complex_rep(dec1), complex_rep(dec2)
    scale = max(1.0, M1.norm(), M2.norm())
    scalars_ok = abs(dec1.lam - dec2.lam) <= tol and abs(dec1.mu - dec2.mu) <= tol

    branches = [False] if group == SO2 else [False, True]
    best = AlignmentResult(False, None, math.inf)
    for reflect in branches:
        # v is a pseudo-scalar: it flips with the reflection
        v_ok = abs((-dec1.v if reflect else dec1.v) - dec2.v) <= tol
        src = rep1.conjugate() if reflect else rep1
        for t in _candidate_angles(src, rep2, scale):
            g = GroupElement(t, reflect)
            r = distance(group_apply(g, M1), M2)
            if scalars_ok and v_ok and r <= tol:
                return AlignmentResult(True, g, r)
            if r < best.residual:
                best = AlignmentResult(False, g, r)
    return AlignmentResult(False, None, best.residual)


def _rotation_matrices(angles, reflect):
    c, s = np.cos(angles), np.sin(angles)
    Q = np.empty((len(angles), 2, 2))
    Q[:, 0, 0], Q[:, 0, 1], Q[:, 1, 0], Q[:, 1, 1] = c, -s, s, c
    if reflect:
        Q = Q @ REFLECTION
    return np.ascontiguousarray(Q)


def orbit_residuals(angles, reflect, M1, M2):
    """``|Q(t) * M1 - M2|`` for every angle ``t`` (optionally after the reflection)."""
    Qs = _rotation_matrices(np.asarray(angles, dtype=float), reflect)
    return _kernels.impl.orbit_residuals(Qs, np.ascontiguousarray(M1.array),
                                         np.ascontiguousarray(M2.array))


def brute_force_align(M1, M2, grid_size=DEFAULT_GRID, tol=1e-6, group=O2):
    """Grid search over the group followed by golden-section refinement.

    Ties on the grid go to the smallest angle, rotations before reflections.
    """
    group = _check_group(group)
    if grid_size < 8:
        raise ValueError("grid_size must be at least 8")
    angles = TWO_PI * np.arange(grid_size) / grid_size
    branches = [False] if group == SO2 else [False, True]
    res = np.concatenate([orbit_residuals(angles, r, M1, M2) for r in branches])
    idx = int(np.argmin(res))
    reflect = branches[idx // grid_size]
    t0 = angles[idx % grid_size]
    best_t, best_r = t0, float(res[idx])

    h = TWO_PI / grid_size

    def f(t):
        return float(orbit_residuals([t], reflect, M1, M2)[0])

    fa, fc = f(t0 - h), f(t0 + h)
    if best_r > 0.0 and best_r < fa and best_r < fc:
        opt = minimize_scalar(f, bracket=(t0 - h, t0, t0 + h), method="golden",
                              options={"xtol": 1e-15})
        if opt.fun < best_r:
            best_t, best_r = float(opt.x), float(opt.fun)
    if best_r <= tol:
        return AlignmentResult(True, GroupElement(best_t, reflect), best_r)
    return AlignmentResult(False, None, best_r)


def invariants_match(iv1, iv2, group=O2, rtol=DEFAULT_RTOL, atol=DEFAULT_ATOL,
                     norms=None):
    """Necessary condition for orbit equivalence.

    With ``norms=(|M1|, |M2|)`` each ``J_i`` is first divided by
    ``|M|**deg_i``, which makes the comparison scale-free.
    """
    group = _check_group(group)
    a, b = iv1.as_array(), iv2.as_array()
    if norms is not None:
        deg = np.array(DEGREES, dtype=float)
        n1, n2 = (max(float(n), 1e-300) for n in norms)
        a, b = a / n1**deg, b / n2**deg
    if group == O2:
        a, b = a.copy(), b.copy()
        a[9], b[9] = abs(a[9]), abs(b[9])
    return bool(np.all(np.abs(a - b) <= atol + rtol * np.maximum(np.abs(a), np.abs(b))))


def check_equivalence(M1, M2, group=O2, tol=DEFAULT_TOL, rtol=DEFAULT_RTOL,
                      atol=DEFAULT_ATOL, normalize_degree=False):
    """Invariant filter then alignment; returns ``(verdict, AlignmentResult or None)``."""
    iv1 = invariant_basis(decompose(M1))
    iv2 = invariant_basis(decompose(M2))
    norms = (M1.norm(), M2.norm()) if normalize_degree else None
    if not invariants_match(iv1, iv2, group, rtol, atol, norms):
        return False, None
    result = align(M1, M2, group, tol)
    return result.found, result


def equivalent(M1, M2, group=O2, tol=DEFAULT_TOL, rtol=DEFAULT_RTOL, atol=DEFAULT_ATOL):
    return check_equivalence(M1, M2, group, tol, rtol, atol)[0]


INVARIANT = "invariant"
SIGN_FLIP = "sign-flip"
NEITHER = "neither"
AUDIT_THRESHOLD = 1e-8


@dataclass
class AuditReport:
    rotation_deviation: list
    rotation: list
    reflection: list
    samples: int
    seed: int
    reflection_deviation: list = field(default_factory=list)

    def as_dict(self):
        return {
            "samples": self.samples,
            "seed": self.seed,
            "invariants": [
                {"name": f"j{n + 1}",
                 "rotation_max_rel_deviation": self.rotation_deviation[n],
                 "rotation": self.rotation[n],
                 "reflection": self.reflection[n],
                 "reflection_rel_deviation": self.reflection_deviation[n]}
                for n in range(10)
            ],
        }


def audit_action(M, samples=100, seed=0):
    """Measure how each of J1..J10 transforms under rotations and the reflection."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    base = invariant_basis(decompose(M)).as_array()
    denom = 1.0 + np.abs(base)
    dev = np.zeros(10)
    for t in rng.uniform(0.0, TWO_PI, size=samples):
        J = invariant_basis(decompose(group_apply(GroupElement(t), M))).as_array()
        dev = np.maximum(dev, np.abs(J - base) / denom)
    Jr = invariant_basis(decompose(group_apply(GroupElement.reflection(), M))).as_array()
    same = np.abs(Jr - base) / denom
    flip = np.abs(Jr + base) / denom
    reflection = [INVARIANT if s <= AUDIT_THRESHOLD else SIGN_FLIP if f <= AUDIT_THRESHOLD
                  else NEITHER for s, f in zip(same, flip)]
    rotation = [INVARIANT if d <= AUDIT_THRESHOLD else NEITHER for d in dev]
    return AuditReport(dev.tolist(), rotation, reflection, int(samples), int(seed),
                       same.tolist())


def chiral_partner(M):
    """Reflect the deviatoric parts of ``M`` but keep ``lam, mu, v``.

    The result has exactly the same J1..J10 as ``M``. Because ``v`` flips
    under the true reflection, it is O(2)-equivalent to ``M`` only when the
    deviatoric configuration is itself mirror-symmetric or ``v == 0``.
    """
    from .decomp import Decomposition, reconstruct
    from .algebra import act

    dec = decompose(M)
    r = GroupElement.reflection()
    return reconstruct(Decomposition(dec.lam, dec.mu, dec.v,
                                     act(r, dec.d1), act(r, dec.d2), act(r, dec.d)))
