"""Hot inner loops, each in a numba and a pure-numpy flavour.

The numba path is used when numba imports cleanly and the environment
variable ``ESHELBY2D_NO_NUMBA`` is unset or ``0``. Both flavours are always
importable as ``numpy_impl`` / ``numba_impl`` so tests and benchmarks can
compare them directly.
"""

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_AVAILABLE = numba is not None
USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("ESHELBY2D_NO_NUMBA", "0") in ("", "0")


# --- pure numpy -----------------------------------------------------------

def _act4_numpy(Q, M):
    return np.einsum("ia,jb,kc,ld,abcd->ijkl", Q, Q, Q, Q, M, optimize=True)


def _act4_batch_numpy(Qs, M):
    return np.einsum("nia,njb,nkc,nld,abcd->nijkl", Qs, Qs, Qs, Qs, M, optimize=True)


def _orbit_residuals_numpy(Qs, M1, M2):
    diff = _act4_batch_numpy(Qs, M1) - M2[None]
    return np.sqrt(np.einsum("nijkl,nijkl->n", diff, diff))


def _has_proper_subsolution_numpy(w, weights, solutions):
    # solutions: (n, m) array of all nonzero solutions within the search box
    below = np.all(solutions <= w, axis=1) & np.any(solutions != w, axis=1)
    return bool(below.any())


def _enumerate_solutions_numpy(weights, bound):
    m = len(weights)
    grids = np.indices((bound + 1,) * m).reshape(m, -1).T
    total = grids.sum(axis=1)
    ok = (total >= 1) & (total <= bound) & (grids @ weights == 0)
    return grids[ok]


numpy_impl = SimpleNamespace(
    act4=_act4_numpy,
    act4_batch=_act4_batch_numpy,
    orbit_residuals=_orbit_residuals_numpy,
    has_proper_subsolution=_has_proper_subsolution_numpy,
    enumerate_solutions=_enumerate_solutions_numpy,
)


# --- numba ----------------------------------------------------------------

if NUMBA_AVAILABLE:
    njit = numba.njit(cache=True, nogil=True)

    @njit
    def _act4_into(Q, M, out):
        # contract one index at a time: 4 * 32 flops instead of 16 * 16 * 4
        t1 = np.empty((2, 2, 2, 2))
        t2 = np.empty((2, 2, 2, 2))
        for i in range(2):
            for b in range(2):
                for c in range(2):
                    for d in range(2):
                        t1[i, b, c, d] = Q[i, 0] * M[0, b, c, d] + Q[i, 1] * M[1, b, c, d]
        for i in range(2):
            for j in range(2):
                for c in range(2):
                    for d in range(2):
                        t2[i, j, c, d] = Q[j, 0] * t1[i, 0, c, d] + Q[j, 1] * t1[i, 1, c, d]
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    for d in range(2):
                        t1[i, j, k, d] = Q[k, 0] * t2[i, j, 0, d] + Q[k, 1] * t2[i, j, 1, d]
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    for l in range(2):
                        out[i, j, k, l] = Q[l, 0] * t1[i, j, k, 0] + Q[l, 1] * t1[i, j, k, 1]

    @njit
    def _act4_numba(Q, M):
        out = np.empty((2, 2, 2, 2))
        _act4_into(Q, M, out)
        return out

    @njit
    def _act4_batch_numba(Qs, M):
        n = Qs.shape[0]
        out = np.empty((n, 2, 2, 2, 2))
        for t in range(n):
            _act4_into(Qs[t], M, out[t])
        return out

    @njit
    def _orbit_residuals_numba(Qs, M1, M2):
        n = Qs.shape[0]
        res = np.empty(n)
        tmp = np.empty((2, 2, 2, 2))
        for t in range(n):
            _act4_into(Qs[t], M1, tmp)
            acc = 0.0
            for i in range(2):
                for j in range(2):
                    for k in range(2):
                        for l in range(2):
                            d = tmp[i, j, k, l] - M2[i, j, k, l]
                            acc += d * d
            res[t] = np.sqrt(acc)
        return res

    @njit
    def _has_proper_subsolution_jit(w, solutions):
        n, m = solutions.shape
        for r in range(n):
            below = True
            same = True
            for c in range(m):
                if solutions[r, c] > w[c]:
                    below = False
                    break
                if solutions[r, c] != w[c]:
                    same = False
            if below and not same:
                return True
        return False

    def _has_proper_subsolution_numba(w, weights, solutions):
        return bool(_has_proper_subsolution_jit(np.asarray(w, dtype=np.int64),
                                                np.asarray(solutions, dtype=np.int64)))

    @njit
    def _enumerate_solutions_jit(weights, bound):
        m = weights.shape[0]
        cap = (bound + 1) ** m
        out = np.empty((cap, m), dtype=np.int64)
        cur = np.zeros(m, dtype=np.int64)
        count = 0
        for _ in range(cap):
            total = 0
            dot = 0
            for c in range(m):
                total += cur[c]
                dot += cur[c] * weights[c]
            if total >= 1 and total <= bound and dot == 0:
                out[count] = cur
                count += 1
            # odometer increment, last component fastest (matches np.indices order)
            c = m - 1
            while c >= 0:
                cur[c] += 1
                if cur[c] <= bound:
                    break
                cur[c] = 0
                c -= 1
        return out[:count]

    def _enumerate_solutions_numba(weights, bound):
        return _enumerate_solutions_jit(np.asarray(weights, dtype=np.int64), int(bound))

    numba_impl = SimpleNamespace(
        act4=_act4_numba,
        act4_batch=_act4_batch_numba,
        orbit_residuals=_orbit_residuals_numba,
        has_proper_subsolution=_has_proper_subsolution_numba,
        enumerate_solutions=_enumerate_solutions_numba,
    )
else:  # pragma: no cover
    numba_impl = None


impl = numba_impl if USE_NUMBA else numpy_impl


def backend_name():
    return "numba" if impl is numba_impl else "numpy"
