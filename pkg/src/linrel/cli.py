"""Command line front end: ``linrel analyze|rootspace|kronecker|chain|verify``.

Exit status is 0 on success, 1 when a verification fails and 2 for bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .docio import DocumentError, from_document, parse_point, scalar_text
from .exact import ParseError, format_scalar
from .harness import SUITES, HarnessConfig, replay, run_all, transcript
from .pencil import MatrixPencil, kronecker_structure, pencil_to_relation
from .poly import format_poly
from .rootspace import INF, extract_singular_chain, kernel_sequence, singular_chain_space
from .spectrum import proper_point_spectrum
from .subspace import DimensionError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _vec(v):
    return [format_scalar(c) for c in v]


def _basis(U):
    return [_vec(b) for b in U.basis]


def _vec_text(v):
    return "(" + ", ".join(format_scalar(c) for c in v) + ")"


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        obj = from_document(doc) if isinstance(doc, dict) and ("relation" in doc or "pencil" in doc) else None
    except (DocumentError, DimensionError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if obj is None and not (isinstance(doc, dict) and "check" in doc):
        raise InputError(f"{path}: document needs a 'relation' or 'pencil' key")
    return doc, obj


def _relation(obj):
    return pencil_to_relation(obj) if isinstance(obj, MatrixPencil) else obj


def _approx_roots(p):
    if len(p) <= 1:
        return []
    import sympy

    s = sympy.Symbol("s")
    coeffs = [sympy.Rational(c.re.numerator, c.re.denominator)
              + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator) for c in reversed(p)]
    return [str(sympy.N(r, 8)) for r in sympy.Poly(coeffs, s).nroots()]


def _kronecker_dict(ks):
    return {"rows": ks.rows, "cols": ks.cols, "n0": ks.n0, "alpha": list(ks.alpha),
            "epsilon": list(ks.epsilon), "eta": list(ks.eta),
            "regular_charpoly": [format_scalar(c) for c in ks.regular_charpoly()]}


def _kronecker_lines(ks):
    return [f"pencil {ks.rows}x{ks.cols}",
            f"  regular part n0 = {ks.n0}, det(sE_r - F_r) = {format_poly(ks.regular_charpoly())}",
            f"  alpha   = {list(ks.alpha)}",
            f"  epsilon = {list(ks.epsilon)}",
            f"  eta     = {list(ks.eta)}"]


def analyze(doc, obj):
    out = {}
    lines = []
    if obj is not None:
        A = _relation(obj)
        parts = {k: U.dim for k, U in A.parts().items()}
        rc = singular_chain_space(A)
        rep = proper_point_spectrum(A)
        out["space_dim"] = A.space_dim
        out["parts"] = parts
        out["singular_chain_space"] = _basis(rc)
        out["spectrum"] = {
            "proper_eigenvalues": [{"lambda": scalar_text(lam), "root_space_dim": d}
                                   for lam, d in rep.proper_eigenvalues],
            "full_spectrum_flag": rep.full_spectrum_flag,
            "singular_chain_dim": rep.singular_chain_dim,
            "residual_polynomial": [format_scalar(c) for c in rep.residual_polynomial],
            "residual_roots_approx": _approx_roots(rep.residual_polynomial),
        }
        lines.append(f"relation in C^{A.space_dim}, graph dimension {A.dim}")
        lines.append("  " + "  ".join(f"dim {k} = {d}" for k, d in parts.items()))
        lines.append(f"R_c: dimension {rc.dim}")
        lines += [f"  {_vec_text(b)}" for b in rc.basis]
        eig = ", ".join(f"{scalar_text(lam)} (dim R = {d})" for lam, d in rep.proper_eigenvalues) or "none"
        lines.append(f"proper eigenvalues: {eig}")
        if not rep.residual_is_one:
            lines.append(f"  plus the roots of {format_poly(rep.residual_polynomial)} "
                         f"(approx. {', '.join(out['spectrum']['residual_roots_approx'])})")
        lines.append(f"every point of C u {{inf}} is an eigenvalue: {'yes' if rep.full_spectrum_flag else 'no'}")
        if isinstance(obj, MatrixPencil):
            ks = kronecker_structure(obj)
            out["kronecker"] = _kronecker_dict(ks)
            lines += _kronecker_lines(ks)
    status = EXIT_OK
    if isinstance(doc, dict) and "check" in doc:
        try:
            ok, detail = replay(doc)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"cannot replay check: {exc}") from None
        out["check"] = {"name": doc["check"], "ok": ok, "detail": detail}
        lines.append(f"check {doc['check']}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))
        status = EXIT_OK if ok else EXIT_FAIL
    return out, lines, status


def rootspace(obj, lam):
    A = _relation(obj)
    seq = kernel_sequence(A, lam)
    R = seq[-1]
    rc = singular_chain_space(A)
    out = {"lambda": scalar_text(lam), "dim": R.dim, "basis": _basis(R),
           "kernel_dims": [K.dim for K in seq], "equals_singular_chain_space": R == rc}
    name = "R_inf" if lam is INF else f"R_{scalar_text(lam)}"
    lines = [f"{name}: dimension {R.dim} (kernel dimensions {out['kernel_dims']})"]
    lines += [f"  {_vec_text(b)}" for b in R.basis]
    lines.append(f"{name} = R_c: {'yes' if out['equals_singular_chain_space'] else 'no'}")
    return out, lines


def kronecker(obj):
    if not isinstance(obj, MatrixPencil):
        from .pencil import relation_to_pencil

        obj = relation_to_pencil(obj)
    ks = kronecker_structure(obj)
    return _kronecker_dict(ks), _kronecker_lines(ks)


def chain(obj):
    A = _relation(obj)
    ch = extract_singular_chain(A)
    if ch is None:
        return {"chain": None}, ["R_c = {0}: no singular chain"]
    pairs = [{"x": _vec(x), "y": _vec(y)} for x, y in ch.pairs()]
    lines = [f"singular chain of length {len(ch)} (solution freedom {ch.freedom})"]
    lines += [f"  ({_vec_text(x)}, {_vec_text(y)})" for x, y in ch.pairs()]
    return {"chain": {"vectors": [_vec(v) for v in ch.vectors], "pairs": pairs, "verified": ch.verify(A)}}, lines


def _emit(args, out, lines):
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print("\n".join(lines))


def _parser():
    p = argparse.ArgumentParser(prog="linrel", description="Exact analysis of linear relations and matrix pencils.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="parts, R_c, proper spectrum (and Kronecker structure for pencils)")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")

    r = sub.add_parser("rootspace", help="basis of a root space")
    r.add_argument("--lambda", dest="lam", required=True, help="scalar such as 1/2-i, or inf")
    r.add_argument("file")
    r.add_argument("--json", action="store_true")

    k = sub.add_parser("kronecker", help="Kronecker block structure")
    k.add_argument("file")
    k.add_argument("--json", action="store_true")

    c = sub.add_parser("chain", help="a singular chain witness")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="randomized verification suites")
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-dim", type=int, default=5)
    v.add_argument("--suite", action="append", choices=sorted(SUITES), help="run only this suite (repeatable)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="add wall-clock times to the report")
    v.add_argument("--json", action="store_true")
    return p


def _verify(args):
    try:
        cfg = HarnessConfig(trials=args.trials, seed=args.seed, max_dim=args.max_dim, workers=args.workers)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    results = run_all(cfg, args.suite)
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({"config": {"trials": cfg.trials, "seed": cfg.seed, "max_dim": cfg.max_dim},
                          "ok": ok, "suites": [r.to_dict() for r in results]}, indent=2))
    else:
        print(transcript(results, timing=args.timing))
        for r in results:
            for f in r.failures:
                print(f"counterexample ({r.name}, trial {f['trial']}, check {f['check']}):")
                print(json.dumps(f))
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        doc, obj = _load(args.file)
        if args.command == "analyze":
            out, lines, status = analyze(doc, obj)
            _emit(args, out, lines)
            return status
        if obj is None:
            raise InputError(f"{args.file}: document needs a 'relation' or 'pencil' key")
        if args.command == "rootspace":
            try:
                lam = parse_point(args.lam)
            except ParseError as exc:
                raise InputError(f"--lambda: {exc}") from None
            out, lines = rootspace(obj, lam)
        elif args.command == "kronecker":
            out, lines = kronecker(obj)
        else:
            out, lines = chain(obj)
        _emit(args, out, lines)
        return EXIT_OK
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
