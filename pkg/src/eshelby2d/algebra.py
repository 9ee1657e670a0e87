"""Fixed-size 2D fourth-order tensors and the action of O(2) on them.

Components are stored 0-based as ``(2, 2, 2, 2)`` float arrays. In the 1-based
convention used throughout the docs, component ``(i, j, k, l)`` sits at flat
offset ``8(i-1) + 4(j-1) + 2(k-1) + (l-1)``, i.e. plain C order.
"""

from dataclasses import dataclass
import math

import numpy as np

from . import _kernels

TWO_PI = 2.0 * math.pi

DELTA = np.eye(2)
LEVI_CIVITA = np.array([[0.0, 1.0], [-1.0, 0.0]])
REFLECTION = np.diag([1.0, -1.0])


class SymmetryViolation(ValueError):
    """Input tensor breaks a required index symmetry by more than the tolerance."""

    def __init__(self, deviation, what="minor"):
        self.deviation = float(deviation)
        self.what = what
        super().__init__(f"{what} symmetry violated: max deviation {self.deviation:.6g}")


def flat_offset(i, j, k, l):
    """Flat position of the 1-based component ``(i, j, k, l)``."""
    return 8 * (i - 1) + 4 * (j - 1) + 2 * (k - 1) + (l - 1)


def as_tensor4(components):
    a = np.asarray(components, dtype=float)
    if a.size != 16:
        raise ValueError(f"expected 16 components, got {a.size}")
    a = a.reshape(2, 2, 2, 2)
    if not np.all(np.isfinite(a)):
        raise ValueError("tensor components must be finite")
    return a


def minor_deviation(a):
    return float(max(np.max(np.abs(a - a.transpose(1, 0, 2, 3))),
                     np.max(np.abs(a - a.transpose(0, 1, 3, 2)))))


def _mirror_minor(s):
    # copy the (1,2) slots onto the (2,1) slots so the symmetry is bit-exact
    s[1, 0] = s[0, 1]
    s[:, :, 1, 0] = s[:, :, 0, 1]
    return s


def symmetrize_minor(a):
    """Average over the four minor-symmetry images, stored bit-exactly symmetric.

    Done as two chained pair averages, so exactly symmetric input comes back
    unchanged bit for bit.
    """
    a = as_tensor4(a)
    a = 0.5 * (a + a.transpose(1, 0, 2, 3))
    return _mirror_minor(0.5 * (a + a.transpose(0, 1, 3, 2)))


class EshelbyTensor:
    """Minor-symmetric 2D fourth-order tensor, immutable.

    The constructor demands exact minor symmetry; use
    :func:`validate_minor_symmetry` for data that is only approximately
    symmetric.
    """

    __slots__ = ("_a",)

    def __init__(self, components):
        a = np.array(as_tensor4(components))
        dev = minor_deviation(a)
        if dev > 0.0:
            raise SymmetryViolation(dev)
        self._check_extra(a)
        a.setflags(write=False)
        self._a = a

    def _check_extra(self, a):
        pass

    @classmethod
    def _trusted(cls, a):
        obj = cls.__new__(cls)
        a = np.array(a, dtype=float)
        a.setflags(write=False)
        obj._a = a
        return obj

    @property
    def array(self):
        """Read-only ``(2, 2, 2, 2)`` view of the components."""
        return self._a

    @property
    def flat(self):
        return self._a.reshape(16).copy()

    def __getitem__(self, idx):
        return self._a[idx]

    def norm(self):
        return float(np.linalg.norm(self._a.ravel()))

    def max_abs(self):
        return float(np.max(np.abs(self._a)))

    def __add__(self, other):
        return type(self)._trusted(self._a + other.array)

    def __sub__(self, other):
        return type(self)._trusted(self._a - other.array)

    def __mul__(self, scalar):
        return type(self)._trusted(float(scalar) * self._a)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, EshelbyTensor) and np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash(self._a.tobytes())

    def __repr__(self):
        return f"{type(self).__name__}({self.flat.tolist()!r})"


def validate_minor_symmetry(raw, tol=0.0):
    """Check minor symmetry of ``raw`` within ``tol`` and canonicalize it.

    Raises
    ------
    SymmetryViolation
        If ``|M[i,j,k,l] - M[j,i,k,l]|`` or ``|M[i,j,k,l] - M[i,j,l,k]|``
        exceeds ``tol`` anywhere.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    a = as_tensor4(raw)
    dev = minor_deviation(a)
    if dev > tol:
        raise SymmetryViolation(dev)
    return EshelbyTensor._trusted(symmetrize_minor(a))


@dataclass(frozen=True)
class GroupElement:
    """Element of O(2) in normal form ``Q(angle)`` or ``Q(angle) @ diag(1, -1)``."""

    angle: float = 0.0
    reflect: bool = False

    def __post_init__(self):
        a = math.fmod(float(self.angle), TWO_PI)
        if a < 0.0:
            a += TWO_PI
        if a >= TWO_PI:
            a = 0.0
        object.__setattr__(self, "angle", a)
        object.__setattr__(self, "reflect", bool(self.reflect))

    @classmethod
    def rotation(cls, angle):
        return cls(angle, False)

    @classmethod
    def reflection(cls):
        return cls(0.0, True)

    @property
    def matrix(self):
        c, s = math.cos(self.angle), math.sin(self.angle)
        q = np.array([[c, -s], [s, c]])
        return q @ REFLECTION if self.reflect else q

    @property
    def det(self):
        return -1 if self.reflect else 1

    def __matmul__(self, other):
        """Composition ``self ∘ other`` (apply ``other`` first)."""
        # diag(1,-1) Q(b) = Q(-b) diag(1,-1)
        b = -other.angle if self.reflect else other.angle
        return GroupElement(self.angle + b, self.reflect != other.reflect)

    def inverse(self):
        if self.reflect:
            return self  # reflections are involutions
        return GroupElement(-self.angle, False)


IDENTITY = GroupElement()


def random_group_element(rng, reflect=None):
    """Uniform angle; ``reflect`` drawn with probability 1/2 unless given."""
    angle = rng.uniform(0.0, TWO_PI)
    if reflect is None:
        reflect = bool(rng.integers(2))
    return GroupElement(angle, reflect)


def act(g, T):
    """Apply ``g`` to an arbitrary 2D tensor array of order 1 to 4."""
    Q = g.matrix if isinstance(g, GroupElement) else np.asarray(g, dtype=float)
    T = np.asarray(T, dtype=float)
    if T.ndim == 4:
        return _kernels.impl.act4(np.ascontiguousarray(Q), np.ascontiguousarray(T))
    letters = "abcd"[: T.ndim]
    out = "ijkl"[: T.ndim]
    spec = ",".join(f"{o}{a}" for o, a in zip(out, letters)) + f",{letters}->{out}"
    return np.einsum(spec, *([Q] * T.ndim), T)


def group_apply(g, M):
    """Return ``g * M`` with components ``Q_ia Q_jb Q_kc Q_ld M_abcd``."""
    out = act(g, M.array)
    return type(M)._trusted(_canonical_like(M, out))


def _canonical_like(M, a):
    a = symmetrize_minor(a)
    canon = getattr(type(M), "_canonicalize", None)
    return canon(a) if canon is not None else a


def random_eshelby(seed):
    """Deterministic random tensor, 9 independent entries uniform on [-1, 1]."""
    rng = np.random.default_rng(seed)
    vals = rng.uniform(-1.0, 1.0, size=(3, 3))
    pairs = ((0, 0), (0, 1), (1, 1))
    a = np.zeros((2, 2, 2, 2))
    for p, (i, j) in enumerate(pairs):
        for q, (k, l) in enumerate(pairs):
            a[i, j, k, l] = vals[p, q]
    return EshelbyTensor._trusted(_mirror_minor(a))
