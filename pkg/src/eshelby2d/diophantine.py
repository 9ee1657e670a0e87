"""Exponent equations of the invariant monomials.

A monomial ``z1^d conj(z1)^e z2^f conj(z2)^g z3^j conj(z3)^k`` is rotation
invariant iff ``(d - e) + (f - g) + 2(j - k) = 0``. The irreducible
nonnegative solutions of that equation generate the basis invariants.
"""

from typing import NamedTuple

import numpy as np

from . import _kernels

ESHELBY_WEIGHTS = (1, -1, 1, -1, 2, -2)
ELASTICITY_WEIGHTS = (1, -1, 2, -2)


class InfeasibleSolution(ValueError):
    pass


class DiophantineSolution(NamedTuple):
    d: int
    e: int
    f: int
    g: int
    j: int
    k: int

    @classmethod
    def of(cls, *values):
        if len(values) == 1:
            values = tuple(values[0])
        w = cls(*(int(x) for x in values))
        if min(w) < 0:
            raise InfeasibleSolution(f"negative exponent in {tuple(w)}")
        if not w.feasible():
            raise InfeasibleSolution(f"{tuple(w)} violates (d-e)+(f-g)+2(j-k)=0")
        return w

    def feasible(self):
        return (self.d - self.e) + (self.f - self.g) + 2 * (self.j - self.k) == 0

    def sum(self):
        return self.d + self.e + self.f + self.g + self.j + self.k

    def conjugate(self):
        return DiophantineSolution(self.e, self.d, self.g, self.f, self.k, self.j)

    def __add__(self, other):
        return DiophantineSolution(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        return DiophantineSolution(*(a - b for a, b in zip(self, other)))


class ElasticitySolution(NamedTuple):
    c: int
    d: int
    e: int
    f: int

    def feasible(self):
        return self.c - self.d + 2 * (self.e - self.f) == 0


W = {
    "w1": DiophantineSolution(1, 1, 0, 0, 0, 0),
    "w2": DiophantineSolution(0, 0, 1, 1, 0, 0),
    "w3": DiophantineSolution(0, 0, 0, 0, 1, 1),
    "w4": DiophantineSolution(2, 0, 0, 0, 0, 1),
    "w5": DiophantineSolution(0, 0, 2, 0, 0, 1),
    "w6": DiophantineSolution(1, 0, 0, 1, 0, 0),
    "w7": DiophantineSolution(1, 0, 1, 0, 0, 1),
    "w8": DiophantineSolution(0, 1, 1, 0, 0, 0),
    "w9": DiophantineSolution(0, 1, 0, 1, 1, 0),
    "w10": DiophantineSolution(0, 2, 0, 0, 1, 0),
    "w11": DiophantineSolution(0, 0, 0, 2, 1, 0),
}
NAMES = {w: name for name, w in W.items()}

ELASTICITY_W = {
    "w1": ElasticitySolution(1, 1, 0, 0),
    "w2": ElasticitySolution(0, 0, 1, 1),
    "w3": ElasticitySolution(2, 0, 0, 1),
    "w4": ElasticitySolution(0, 2, 1, 0),
}


def irreducible_solutions(weights, bound):
    """All irreducible nonzero solutions of ``weights . x = 0`` with ``sum(x) <= bound``.

    A solution is reducible when some nonzero solution lies strictly below it
    componentwise (the difference is then a solution too). Checked
    exhaustively against every solution in the box.
    """
    weights = np.asarray(weights, dtype=np.int64)
    sols = _kernels.impl.enumerate_solutions(weights, int(bound))
    keep = [row for row in sols
            if not _kernels.impl.has_proper_subsolution(row, weights, sols)]
    return sorted(tuple(int(x) for x in row) for row in keep)


def enumerate_irreducible(bound=6):
    if bound < 2:
        raise ValueError("bound must be at least 2")
    return {DiophantineSolution(*w) for w in irreducible_solutions(ESHELBY_WEIGHTS, bound)}


def elasticity_irreducible(bound=6):
    return {ElasticitySolution(*w) for w in irreducible_solutions(ELASTICITY_WEIGHTS, bound)}


def _reduce_step(w):
    d, e, f, g, j, k = w
    if j == k:
        if j >= 1:
            return W["w3"]
        if d == e:
            return W["w1"] if d >= 1 else W["w2"]
        # d - e = g - f
        return W["w6"] if d > e else W["w8"]
    # j > k here; then e + g >= 2
    for name in ("w9", "w10", "w11"):
        if min(w - W[name]) >= 0:
            return W[name]
    raise AssertionError(f"no admissible summand for {tuple(w)}")  # unreachable


def reduce_solution(w):
    """Write a feasible exponent vector as a sum of ``w1..w11``.

    Returns the parts as a list (a multiset); the order is the order in which
    they were peeled off.
    """
    w = DiophantineSolution.of(w)
    if w.j < w.k:
        return [p.conjugate() for p in reduce_solution(w.conjugate())]
    parts = []
    while w.sum() > 0:
        if w.j < w.k:
            parts.extend(p.conjugate() for p in reduce_solution(w.conjugate()))
            break
        p = _reduce_step(w)
        parts.append(p)
        w = w - p
    return parts


def random_feasible(rng, max_sum=50):
    """Random feasible nonzero exponent vector with component sum <= ``max_sum``."""
    while True:
        x = rng.integers(0, max_sum // 3 + 1, size=5)
        # solve for k from the equation, keep if nonnegative and integral
        d, e, f, g, j = (int(t) for t in x)
        num = d - e + f - g + 2 * j
        if num % 2 or num < 0:
            continue
        w = DiophantineSolution(d, e, f, g, j, num // 2)
        if 0 < w.sum() <= max_sum:
            return w if rng.integers(2) else w.conjugate()
