"""The `gpi` command-line tool.

Machine output is JSON on stdout; diagnostics go to stderr.  Exit codes:
0 success/affirmative, 1 negative answer or failed verification, 2 bad
input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import certs
from .dsl import ParseError, parse_expr, parse_file, parse_word
from .freealg import DeclarationError, FreePoly, multihomogeneous_components
from .genmat import eval_poly, eval_word_closed
from .groups import GroupError, cyclic_group, default_grading
from .identity import (ContractError, GeneratorError, GeneratorKind,
                       identity_witness)
from .rewrite import (JCombination, NoExpressionError, NotCongruentError,
                      RewriteChain, congruence_chain, express_in_J,
                      verify_chain, verify_combination)
from .z3reduce import (ReductionCertificate, ReductionError, enumerate_reduced,
                       reduce_type1, reduce_type2, verify_certificate)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


class _CliInputError(Exception):
    pass


def _emit(doc) -> None:
    sys.stdout.write(certs.dumps(doc))


def _diag(msg: str) -> None:
    print(f"gpi: {msg}", file=sys.stderr)


def _witness_json(w) -> dict:
    terms = [{"coeff": c,
              "vars": [[k, a + 1, b + 1, e] for (k, a, b), e in m]}
             for m, c in sorted(w.value.terms.items())]
    return {"row": w.row + 1, "col": w.col + 1, "value": terms}


def _load(path: str):
    try:
        return parse_file(path)
    except OSError as exc:
        raise _CliInputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except (ParseError, GroupError, DeclarationError, GeneratorError) as exc:
        raise _CliInputError(f"{path}: {exc}") from exc


def _need_poly(parsed, path: str) -> FreePoly:
    if parsed.poly is None:
        raise _CliInputError(f"{path}: no 'poly:' line")
    return parsed.poly


# --- subcommands --------------------------------------------------------------

def cmd_check(args) -> int:
    p = _need_poly(_load(args.file), args.file)
    w = identity_witness(p)
    if w is None:
        _emit({"identity": True})
        return EXIT_OK
    _emit({"identity": False, "witness": _witness_json(w)})
    return EXIT_NEGATIVE


def cmd_eval(args) -> int:
    parsed = _load(args.file)
    ctx = parsed.ctx
    if args.word is not None:
        if args.word.isdigit():
            p = _need_poly(parsed, args.file)
            support = p.support()
            idx = int(args.word)
            if not (0 <= idx < len(support)):
                raise _CliInputError(
                    f"word index {idx} out of range (support has {len(support)})")
            mat = eval_word_closed(ctx, support[idx])
        else:
            try:
                w = parse_word(ctx, args.word)
            except ParseError as exc:
                raise _CliInputError(f"--word: {exc}") from exc
            mat = eval_word_closed(ctx, w)
    else:
        mat = eval_poly(_need_poly(parsed, args.file))
    _emit(certs.matrix_to_json(mat))
    return EXIT_OK


def _word_arg(ctx, text: str, flag: str):
    try:
        return parse_word(ctx, text)
    except ParseError as exc:
        raise _CliInputError(f"{flag}: {exc}") from exc


def cmd_congruent(args) -> int:
    parsed = _load(args.file)
    ctx = parsed.ctx
    m = _word_arg(ctx, args.m, "--m") if args.m else parsed.word_m
    n = _word_arg(ctx, args.n, "--n") if args.n else parsed.word_n
    if m is None or n is None:
        raise _CliInputError("both monomials are required (--m/--n or m:/n: lines)")
    try:
        chain = congruence_chain(ctx, m, n)
    except ContractError as exc:
        raise _CliInputError(str(exc)) from exc
    except NotCongruentError as exc:
        _emit({"congruent": False, "reason": str(exc)})
        return EXIT_NEGATIVE
    _emit(certs.chain_to_json(chain))
    return EXIT_OK


def cmd_express(args) -> int:
    p = _need_poly(_load(args.file), args.file)
    try:
        comb = express_in_J(p)
    except ContractError as exc:
        raise _CliInputError(str(exc)) from exc
    except NoExpressionError as exc:
        doc = {"expressed": False, "reason": str(exc)}
        if exc.witness is not None:
            doc["witness"] = _witness_json(exc.witness)
        _emit(doc)
        return EXIT_NEGATIVE
    _emit(certs.jcomb_to_json(comb))
    return EXIT_OK


def cmd_z3reduce(args) -> int:
    parsed = _load(args.file)
    gen = parsed.generator
    if gen is None:
        raise _CliInputError(f"{args.file}: no generator (type:/h1:/... lines)")
    if args.type is not None and gen.kind.value != args.type:
        raise _CliInputError(
            f"file declares a type-{gen.kind.value} generator, --type {args.type} given")
    try:
        if gen.kind is GeneratorKind.TYPE1:
            cert = reduce_type1(gen)
        else:
            cert = reduce_type2(gen)
    except ReductionError as exc:
        raise _CliInputError(str(exc)) from exc
    _emit(certs.reduction_to_json(cert))
    return EXIT_OK


def cmd_enum_reduced(args) -> int:
    try:
        group = cyclic_group(args.order)
        grading = default_grading(group)
        gens = enumerate_reduced(grading, max_part_len=args.max_len)
    except (GroupError, ValueError) as exc:
        raise _CliInputError(str(exc)) from exc
    if args.json:
        _emit([{"kind": g.kind.value, "parts": [list(p) for p in g.parts],
                "vars": {str(k): d for k, d in sorted(g.ctx.degrees.items())}}
               for g in gens])
    else:
        _emit({"count": len(gens),
               "by_kind": {str(k.value): sum(1 for g in gens if g.kind is k)
                           for k in GeneratorKind}})
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.cert, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise _CliInputError(f"cannot read {args.cert}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise _CliInputError(f"{args.cert}: not valid JSON: {exc}") from exc
    try:
        cert = certs.certificate_from_json(doc)
    except (certs.CertificateFormatError, GroupError, DeclarationError,
            GeneratorError, KeyError, TypeError, ValueError) as exc:
        raise _CliInputError(f"{args.cert}: {exc}") from exc
    if isinstance(cert, RewriteChain):
        ok = verify_chain(cert)
    elif isinstance(cert, JCombination):
        ok = verify_combination(cert)
    elif isinstance(cert, ReductionCertificate):
        ok = verify_certificate(cert)
    else:  # pragma: no cover - certificate_from_json is exhaustive
        raise _CliInputError(f"{args.cert}: unknown certificate object")
    _emit({"valid": ok, "kind": doc.get("kind")})
    return EXIT_OK if ok else EXIT_NEGATIVE


# --- corpus runner ------------------------------------------------------------

_EXPECTATIONS = ("identity", "non-identity", "congruent", "reducible")


def _cert_path(entry_file: str) -> str:
    base, _ = os.path.splitext(entry_file)
    return base + ".cert.json"


def _run_entry(entry: dict) -> dict:
    path = entry.get("file")
    expected = entry.get("expected")
    report = {"file": path, "expected": expected}
    if not isinstance(path, str) or expected not in _EXPECTATIONS:
        report.update(status="error", detail="malformed manifest entry")
        return report
    if not os.path.exists(path):
        report.update(status="error", detail="file not found")
        return report
    try:
        parsed = parse_file(path)
    except (ParseError, GroupError, DeclarationError, GeneratorError) as exc:
        report.update(status="error", detail=str(exc))
        return report

    try:
        if expected == "identity":
            p = parsed.poly
            if p is None:
                report.update(status="error", detail="no 'poly:' line")
                return report
            w = identity_witness(p)
            if w is not None:
                report.update(status="fail", detail="not an identity",
                              witness=_witness_json(w))
                return report
            report["status"] = "pass"
            if p.is_multihomogeneous() and not p.is_zero():
                comb = express_in_J(p)
                cert = certs.jcomb_to_json(comb)
                with open(_cert_path(path), "w", encoding="utf-8") as fh:
                    fh.write(certs.dumps(cert))
                report["certificate"] = _cert_path(path)
        elif expected == "non-identity":
            p = parsed.poly
            if p is None:
                report.update(status="error", detail="no 'poly:' line")
                return report
            w = identity_witness(p)
            if w is None:
                report.update(status="fail", detail="is an identity")
            else:
                report.update(status="pass", witness=_witness_json(w))
        elif expected == "congruent":
            if parsed.word_m is None or parsed.word_n is None:
                report.update(status="error", detail="missing m:/n: lines")
                return report
            chain = congruence_chain(parsed.ctx, parsed.word_m, parsed.word_n)
            if not verify_chain(chain):
                report.update(status="fail", detail="chain does not verify")
                return report
            with open(_cert_path(path), "w", encoding="utf-8") as fh:
                fh.write(certs.dumps(certs.chain_to_json(chain)))
            report.update(status="pass", certificate=_cert_path(path))
        else:  # reducible
            gen = parsed.generator
            if gen is None:
                report.update(status="error", detail="no generator lines")
                return report
            cert = (reduce_type1 if gen.kind is GeneratorKind.TYPE1
                    else reduce_type2)(gen)
            if not verify_certificate(cert):
                report.update(status="fail", detail="certificate does not verify")
                return report
            with open(_cert_path(path), "w", encoding="utf-8") as fh:
                fh.write(certs.dumps(certs.reduction_to_json(cert)))
            report.update(status="pass", certificate=_cert_path(path))
    except (ContractError, NotCongruentError, NoExpressionError,
            ReductionError) as exc:
        report.update(status="fail", detail=str(exc))
    return report


def cmd_corpus(args) -> int:
    try:
        with open(args.manifest, encoding="utf-8") as fh:
            manifest = json.load(fh)
    except OSError as exc:
        raise _CliInputError(f"cannot read {args.manifest}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise _CliInputError(f"{args.manifest}: not valid JSON: {exc}") from exc
    if not isinstance(manifest, list):
        raise _CliInputError(f"{args.manifest}: manifest must be a JSON list")
    base = os.path.dirname(os.path.abspath(args.manifest))
    entries = []
    for raw in manifest:
        entry = dict(raw) if isinstance(raw, dict) else {"file": None}
        if isinstance(entry.get("file"), str) and not os.path.isabs(entry["file"]):
            entry["file"] = os.path.join(base, entry["file"])
        entries.append(entry)
    reports = [_run_entry(e) for e in entries]
    failures = sum(1 for r in reports if r.get("status") != "pass")
    _emit({"entries": reports, "total": len(reports), "failures": failures})
    for r in reports:
        status = r.get("status", "error").upper()
        _diag(f"{status}: {r.get('file')} ({r.get('expected')})")
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


# --- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gpi",
                                 description="graded polynomial identities "
                                             "of generic matrix algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether poly is a graded identity")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="evaluate at generic matrices")
    p.add_argument("file")
    p.add_argument("--word", help="support index or monomial expression")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("congruent", help="certified congruence chain for two monomials")
    p.add_argument("file")
    p.add_argument("--m")
    p.add_argument("--n")
    p.set_defaults(func=cmd_congruent)

    p = sub.add_parser("express", help="express an identity in the generator ideal")
    p.add_argument("file")
    p.set_defaults(func=cmd_express)

    p = sub.add_parser("z3reduce", help="reduce a generator to short parts (order 3)")
    p.add_argument("file")
    p.add_argument("--type", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_z3reduce)

    p = sub.add_parser("enum-reduced", help="enumerate reduced generator instances")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--order", type=int, default=3,
                   help="cyclic group order (default 3)")
    p.add_argument("--json", action="store_true",
                   help="emit the full list instead of counts")
    p.set_defaults(func=cmd_enum_reduced)

    p = sub.add_parser("verify", help="replay and verify a certificate file")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="run a manifest of expected results")
    p.add_argument("manifest")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliInputError as exc:
        _diag(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
