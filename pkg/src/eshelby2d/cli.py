"""Command-line interface: ``eshelby2d <subcommand> ...``.

Exit codes: 0 success, 1 I/O or parse failure, 2 symmetry validation
failure, 3 "not equivalent" (``equivalent`` only).
"""

import argparse
import os
import sys

from . import diophantine as dio
from . import io
from .algebra import GroupElement, SymmetryViolation, group_apply, random_eshelby
from .decomp import decompose, reconstruct
from .elasticity import elasticity_invariants, random_elasticity, ElasticityTensor
from .invariants import DEGREES, derived_invariants, invariant_basis
from .orbit import (DEFAULT_ATOL, DEFAULT_GRID, DEFAULT_RTOL, DEFAULT_TOL, align,
                    audit_action, brute_force_align, check_equivalence)

EXIT_OK = 0
EXIT_IO = 1
EXIT_SYMMETRY = 2
EXIT_NOT_EQUIVALENT = 3


def _default_seed():
    try:
        return int(os.environ.get("ESHELBY2D_SEED", "0"))
    except ValueError:
        return 0


def _emit(obj, output=None):
    text = io.dumps(obj)
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_decompose(args):
    M = io.read_tensor(args.input, args.sym_tol)
    _emit({"decomposition": io.decomposition_to_dict(decompose(M))}, args.output)
    return EXIT_OK


def _cmd_reconstruct(args):
    dec = io.decomposition_from_dict(io.read_json(args.input))
    _emit(io.tensor_to_dict(reconstruct(dec)), args.output)
    return EXIT_OK


def _cmd_invariants(args):
    M = io.read_tensor(args.input, args.sym_tol)
    iv = invariant_basis(decompose(M))
    values = iv.as_dict()
    if args.normalize_degree:
        n = M.norm()
        values = {k: (x / n**deg if n > 0 else 0.0)
                  for (k, x), deg in zip(values.items(), DEGREES)}
    report = {"invariants": values}
    if args.derived:
        report["derived"] = derived_invariants(iv).as_dict()
    if isinstance(M, ElasticityTensor):
        keys = ("lambda", "mu", "i1", "i2", "i3")
        report["elasticity"] = dict(zip(keys, elasticity_invariants(M).tolist()))
    _emit(report, args.output)
    return EXIT_OK


def _witness(result):
    if result is None or result.element is None:
        return None
    return {"angle": result.element.angle, "reflect": result.element.reflect}


def _cmd_equivalent(args):
    A = io.read_tensor(args.a, args.sym_tol)
    B = io.read_tensor(args.b, args.sym_tol)
    verdict, result = check_equivalence(A, B, args.group, args.tol, args.rtol, args.atol,
                                        args.normalize_degree)
    _emit({"equivalence": {
        "equivalent": verdict,
        "group": args.group,
        "witness": _witness(result) if verdict else None,
        "residual": None if result is None else result.residual,
    }}, args.output)
    return EXIT_OK if verdict else EXIT_NOT_EQUIVALENT


def _cmd_align(args):
    A = io.read_tensor(args.a, args.sym_tol)
    B = io.read_tensor(args.b, args.sym_tol)
    if args.brute_force:
        result = brute_force_align(A, B, args.grid, tol=args.tol, group=args.group)
    else:
        result = align(A, B, args.group, args.tol)
    _emit({"alignment": {
        "found": result.found,
        "group": args.group,
        "method": "brute-force" if args.brute_force else "analytic",
        "witness": _witness(result),
        "residual": result.residual,
    }}, args.output)
    return EXIT_OK


def _cmd_transform(args):
    M = io.read_tensor(args.input, args.sym_tol)
    _emit(io.tensor_to_dict(group_apply(GroupElement(args.angle, args.reflect), M)),
          args.output)
    return EXIT_OK


def _cmd_audit(args):
    M = io.read_tensor(args.input, args.sym_tol)
    _emit({"audit": audit_action(M, args.samples, args.seed).as_dict()}, args.output)
    return EXIT_OK


def _paper_order(w):
    name = dio.NAMES.get(w)
    return (0, int(name[1:]), ()) if name else (1, 0, tuple(w))


def _named(w):
    return {"name": dio.NAMES.get(w), "w": list(w)}


def _cmd_diophantine(args):
    if args.action == "enumerate":
        sols = sorted(dio.enumerate_irreducible(args.bound), key=_paper_order)
        report = {"equation": "(d-e)+(f-g)+2(j-k)=0", "bound": args.bound,
                  "solutions": [_named(w) for w in sols]}
    elif args.action == "reduce":
        try:
            w = dio.DiophantineSolution.of(int(x) for x in args.solution.split(","))
        except (TypeError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        parts = dio.reduce_solution(w)
        report = {"solution": list(w), "reduction": [_named(p) for p in parts]}
    else:
        sols = sorted(dio.elasticity_irreducible(args.bound))
        report = {"equation": "c-d+2(e-f)=0", "bound": args.bound,
                  "solutions": [list(w) for w in sols]}
    _emit({"diophantine": report}, args.output)
    return EXIT_OK


def _cmd_random(args):
    seed = _default_seed() if args.seed is None else args.seed
    M = random_elasticity(seed) if args.symmetry == io.ELASTICITY else random_eshelby(seed)
    _emit(io.tensor_to_dict(M), args.output)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="eshelby2d", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--output", "-o", help="write JSON here instead of stdout")
        sp.add_argument("--sym-tol", type=float, default=1e-12,
                        help="symmetry tolerance when loading tensors (default 1e-12)")
        return sp

    sp = add("decompose", _cmd_decompose, "irreducible decomposition of a tensor")
    sp.add_argument("--input", required=True)

    sp = add("reconstruct", _cmd_reconstruct, "tensor from a decomposition report")
    sp.add_argument("--input", required=True)

    sp = add("invariants", _cmd_invariants, "the ten basis invariants")
    sp.add_argument("--input", required=True)
    sp.add_argument("--derived", action="store_true", help="also print J11..J16")
    sp.add_argument("--normalize-degree", action="store_true",
                    help="divide J_i by |M|**deg(J_i)")

    sp = add("equivalent", _cmd_equivalent, "orbit equivalence test (exit 3 if not)")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--group", choices=("so2", "o2"), default="o2")
    sp.add_argument("--rtol", type=float, default=DEFAULT_RTOL)
    sp.add_argument("--atol", type=float, default=DEFAULT_ATOL)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL,
                    help="Frobenius residual accepted for the witness")
    sp.add_argument("--normalize-degree", action="store_true")

    sp = add("align", _cmd_align, "find g with g*A = B")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--group", choices=("so2", "o2"), default="o2")
    sp.add_argument("--brute-force", action="store_true")
    sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
    sp.add_argument("--tol", type=float, default=None)

    sp = add("transform", _cmd_transform, "apply Q(angle) [after the reflection] to a tensor")
    sp.add_argument("--input", required=True)
    sp.add_argument("--angle", type=float, required=True)
    sp.add_argument("--reflect", action="store_true")

    sp = add("audit", _cmd_audit, "classify invariant behaviour under O(2)")
    sp.add_argument("--input", required=True)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=None)

    sp = add("diophantine", _cmd_diophantine, "exponent equation solutions")
    dsub = sp.add_subparsers(dest="action", required=True)
    e = dsub.add_parser("enumerate")
    e.add_argument("--bound", type=int, default=6)
    r = dsub.add_parser("reduce")
    r.add_argument("--solution", required=True, help="d,e,f,g,j,k")
    el = dsub.add_parser("elasticity")
    el.add_argument("--bound", type=int, default=6)

    sp = add("random", _cmd_random, "write a random tensor file")
    sp.add_argument("--seed", type=int, default=None,
                    help="default: $ESHELBY2D_SEED or 0")
    sp.add_argument("--symmetry", choices=(io.ESHELBY, io.ELASTICITY), default=io.ESHELBY)
    return p


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_IO
    if getattr(args, "command", None) == "align" and args.tol is None:
        args.tol = 1e-6 if args.brute_force else DEFAULT_TOL
    if getattr(args, "command", None) == "audit" and args.seed is None:
        args.seed = _default_seed()
    try:
        return args.func(args)
    except SymmetryViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYMMETRY
    except (io.TensorFileError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
