"""Command line front end.

Exit codes: 0 success, 1 an identity failed, 2 bad usage, 3 internal
divisibility error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import classical, nonsym, pairing, spherical, vector
from .errors import BC1Error, NonDivisible
from .multiplicity import Multiplicity, parse_number
from .records import PolyRecord, components_of, dumps_csv, dumps_json
from .transport import gamma
from .verdict import OperatorVerdict

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
FAMILIES = ("E", "P", "M", "N", "monic", "spherical")
SUITES = ("eigen", "ortho", "matrix", "shift", "transmute", "spherical")
DEFAULT_K_SET = ((0, 1), (1, 1), (2, 1), (1, 2), (3, 2))


class UsageError(Exception):
    pass


def int_range(text: str):
    """``"5"`` -> [5]; ``"-3:3"`` -> [-3, ..., 3] (inclusive)."""
    text = str(text)
    if ":" in text.lstrip("-"):
        head = text[0] if text.startswith("-") else ""
        lo, hi = (text[len(head):].split(":", 1))
        lo, hi = int(head + lo), int(hi)
        if hi < lo:
            raise argparse.ArgumentTypeError(f"empty range {text}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _multiplicity(args, scale=None):
    mode = getattr(args, "mode", None)
    try:
        return Multiplicity(parse_number(args.k1), parse_number(args.k2),
                            scale=scale or getattr(args, "scale", 1) or 1, mode=mode)
    except (BC1Error, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _params(args):
    if args.alpha is not None or args.beta is not None:
        if args.alpha is None or args.beta is None:
            raise UsageError("--alpha and --beta go together")
        return classical.JacobiParams(parse_number(args.alpha), parse_number(args.beta))
    return classical.JacobiParams.from_multiplicity(_multiplicity(args))


# --- compute ---

def cmd_compute(args) -> int:
    fam = args.family
    records = []
    index = args.N if fam in ("M", "N", "monic") else args.n
    if index is None:
        raise UsageError(f"family {fam} needs --{'N' if fam in ('M', 'N', 'monic') else 'n'}")
    for i in index:
        if fam == "spherical":
            if args.m is None:
                raise UsageError("family spherical needs --m")
            k = spherical.doubled_multiplicity(args.m)
            obj = spherical.spherical_function(args.m, i)
            params = {"m": args.m, "n": i, "eigenvalue": spherical.spherical_eigenvalue(args.m, i)}
            records.append(PolyRecord(fam, (k.k1, k.k2), 2, params, components_of(obj)))
            continue
        if fam == "N":
            p = _params(args)
            if i < 0:
                raise UsageError("N must be nonnegative")
            obj = classical.build_N_family(p, i)
            records.append(PolyRecord(fam, None, 1, {"alpha": p.alpha, "beta": p.beta, "N": i},
                                      components_of(obj)))
            continue
        k = _multiplicity(args)
        if not k.exact:
            raise UsageError("compute needs exact (nonnegative integer) k1, k2")
        if fam in ("M", "monic") and i < 0:
            raise UsageError("N must be nonnegative")
        if fam == "E":
            obj, params = nonsym.gram_schmidt_E(k, i), {"n": i}
        elif fam == "P":
            obj, params = gamma(nonsym.gram_schmidt_E(k, i)), {"n": i}
        elif fam == "M":
            obj, params = vector.build_M(k, i), {"N": i}
        else:
            obj, params = classical.monic_from_M(k, i), {"N": i}
        records.append(PolyRecord(fam, (k.k1, k.k2), k.scale, params, components_of(obj)))
    text = dumps_json(records) if args.format == "json" else dumps_csv(records)
    _emit(text, args.out)
    return EXIT_OK


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- verify ---

def _k_list(args):
    if args.k1 is None and args.k2 is None:
        return [Multiplicity(*k) for k in DEFAULT_K_SET]
    if args.k1 is None or args.k2 is None:
        raise UsageError("--k1 and --k2 go together")
    return [_multiplicity(args)]


def _suite_cases(suite, args):
    """Yield (case_id, anchor, thunk) triples for one suite."""
    tol = args.tol
    if suite == "eigen":
        for k in _k_list(args):
            for n in range(-args.range, args.range + 1):
                yield (f"eigen/{k.label()}/{n:+03d}", "cherednik eigenvalue law",
                       lambda k=k, n=n: _retol(nonsym.eigen_check(k, n), tol))
            for n in range(0, args.range + 1):
                yield (f"eigen/{k.label()}/sub{n:02d}", "subleading coefficient of E(n+1)",
                       lambda k=k, n=n: _retol(nonsym.subleading_check(k, n), tol))
    elif suite == "ortho":
        for k in _k_list(args):
            yield (f"ortho/{k.label()}", "Gram-Schmidt orthogonality of E(n,k)",
                   lambda k=k: _retol(nonsym.orthogonality_check(k, args.range), tol))
    elif suite == "matrix":
        yield ("matrix/weight", "U W U^T = 2 diag(1-x, 1+x)", classical.weight_diagonalization_check)
        for k in _k_list(args):
            if not k.exact:
                raise UsageError("matrix suite needs exact k")
            b = args.N if args.N is not None else 6
            yield (f"matrix/{k.label()}/example", "P(0), P(1) and their eigenvalues",
                   lambda k=k: vector.example_check(k))
            yield (f"matrix/{k.label()}/forms", "two forms of the transported operator agree",
                   lambda k=k: vector.form_equivalence_check(k, 10))
            yield (f"matrix/{k.label()}/family", "C_N, matrix orthogonality, D M = M Lambda",
                   lambda k=k, b=b: vector.matrix_family_check(k, b))
            yield (f"matrix/{k.label()}/monic", "monic family uniqueness",
                   lambda k=k, b=b: classical.monic_uniqueness_check(k, b))
            yield (f"matrix/{k.label()}/decomp", "E(-N), E(N+1) from classical Jacobi polynomials",
                   lambda k=k, b=b: classical.decomposition_check(k, b))
            yield (f"matrix/{k.label()}/frakD", "conjugated operator and its eigenvalue matrix",
                   lambda k=k: classical.frak_D_conjugation_check(k))
            yield (f"matrix/{k.label()}/square", "centred square of D_k diagonalized by U",
                   lambda k=k: classical.square_diagonalization_check(k))
    elif suite == "shift":
        if args.alpha is not None or args.beta is not None:
            plist = [_params(args)]
        else:
            plist = [classical.JacobiParams(Fraction(a), Fraction(b))
                     for a, b in (("3/2", "1/2"), ("5/2", "1/2"), ("7/2", "3/2"))]
        top = args.N if args.N is not None else 12
        for p in plist:
            for N in range(top + 1):
                yield (f"shift/({p.alpha},{p.beta})/{N:02d}", "Jacobi shift identities",
                       lambda p=p, N=N: classical.shift_check(p, N))
                yield (f"shift/({p.alpha},{p.beta})/frak{N:02d}", "frakD N = N frakL",
                       lambda p=p, N=N: classical.frak_D_check(p, N))
    elif suite == "transmute":
        ks = _k_list(args) if args.k1 is not None else [Multiplicity(1, 1), Multiplicity(0, 1)]
        for k in ks:
            yield (f"transmute/{k.label()}", "D_k' d/dx = d/dx D_k",
                   lambda k=k: classical.transmute_check(k, degree=args.degree or 8))
    elif suite == "spherical":
        ms = [args.m] if args.m is not None else [1, 2, 3, 4, 5]
        for m in ms:
            yield (f"spherical/m{m}", "Q_m + I equals the doubled-root-system operator",
                   lambda m=m: spherical.identification_check(m, args.degree or 10))


def _retol(v: OperatorVerdict, tol):
    if tol is None or v.status == "exact":
        return v
    status = "tolerance" if v.residual <= tol else "fail"
    return OperatorVerdict(v.identity, status, v.residual, v.detail, v.data)


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    cases = []
    for s in suites:
        cases.extend(_suite_cases(s, args))
    results = []
    for case_id, anchor, thunk in cases:
        t0 = time.perf_counter()
        verdict = thunk()
        results.append((case_id, anchor, verdict, time.perf_counter() - t0))
    results.sort(key=lambda r: r[0])
    ok = all(v.holds for _, _, v, _ in results)
    if args.format == "json":
        payload = [{"case": c, "identity": v.identity, "anchor": a, "status": v.status,
                    "residual": v.residual, "detail": v.detail, "seconds": round(dt, 6)}
                   for c, a, v, dt in results]
        _emit(json.dumps({"ok": ok, "results": payload}, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{'PASS' if v.holds else 'FAIL'}  {c:<32} {v.status:<9} residual={v.residual:.3g}"
                 f"  {dt * 1000:8.1f} ms  [{a}]" + (f"  ({v.detail})" if v.detail else "")
                 for c, a, v, dt in results]
        passed = sum(v.holds for _, _, v, _ in results)
        lines.append(f"{passed}/{len(results)} identities hold")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


# --- crosscheck ---

def cmd_crosscheck(args) -> int:
    k = _multiplicity(args)
    if not k.exact:
        raise UsageError("crosscheck needs integer k1, k2")
    tol = args.tol if args.tol is not None else 1e-10
    worst, where = pairing.crosscheck(k.k1, k.k2, args.degree or 12)
    ok = worst <= tol
    print(f"{'PASS' if ok else 'FAIL'} k={k.label()} degree={args.degree or 12} "
          f"max relative deviation={worst:.3e} at exponents {where} (tol {tol:g})")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="bc1jacobi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_k=True):
        p.add_argument("--k1", default="1" if default_k else None)
        p.add_argument("--k2", default="1" if default_k else None)
        p.add_argument("--mode", choices=("exact", "float"), default=None)
        p.add_argument("--tol", type=float, default=None)

    c = sub.add_parser("compute", help="compute a polynomial family")
    common(c)
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--n", type=int_range, default=None, help="index or inclusive range a:b")
    c.add_argument("--N", type=int_range, default=None)
    c.add_argument("--scale", type=int, choices=(1, 2), default=1)
    c.add_argument("--alpha", default=None)
    c.add_argument("--beta", default=None)
    c.add_argument("--m", type=int, default=None)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run identity checks")
    common(v, default_k=False)
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--range", type=int, default=8)
    v.add_argument("--N", type=int, default=None)
    v.add_argument("--alpha", default=None)
    v.add_argument("--beta", default=None)
    v.add_argument("--m", type=int, default=None)
    v.add_argument("--degree", type=int, default=None)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("crosscheck", help="exact vs quadrature pairing")
    common(x)
    x.add_argument("--degree", type=int, default=12)
    x.set_defaults(func=cmd_crosscheck)
    return parser


_VALUE_FLAGS = ("--n", "--N", "--k1", "--k2", "--alpha", "--beta")


def _glue_values(argv):
    # argparse rejects values like "-1:3" or "-1/2" as option-looking tokens
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except NonDivisible as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, BC1Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
