"""Command-line surface.

Exit status discipline (stable): 0 = claim verified / prime found,
1 = claim refuted / nothing found, 2 = usage or parse error.  All numeric
flags take arbitrary-length decimal strings.  Signs are spelled s (terms
k*2^n + 1) and r (terms k*2^n - 1).
"""

import argparse
import json
import sys

from coverscope import algebraic, cover, dataset, disqualify
from coverscope.cover import Candidate, CertificateFormatError, VerificationError


def _arg_int(text, what, minimum=None, odd=False):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be a decimal integer") from None
    if minimum is not None and value < minimum:
        raise argparse.ArgumentTypeError(f"{what} must be >= {minimum}")
    if odd and value % 2 == 0:
        raise argparse.ArgumentTypeError(f"{what} must be odd")
    return value


def _odd_k(text):
    return _arg_int(text, "k", minimum=1, odd=True)


def _sign(text):
    signs = {"s": 1, "r": -1}
    if text not in signs:
        raise argparse.ArgumentTypeError("sign must be s (k*2^n + 1) or r (k*2^n - 1)")
    return signs[text]


def _cover_list(text):
    parts = [p for p in text.split(",") if p]
    if not parts:
        raise argparse.ArgumentTypeError("cover must list at least one divisor")
    return tuple(_arg_int(p, "cover divisor", minimum=3) for p in parts)


def _positive(text):
    return _arg_int(text, "value", minimum=1)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="coverscope",
        description="Verify Sierpinski/Riesel claims from covers, algebraic "
        "factor families, and prime searches.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output mode"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="verify one cover claim")
    p.add_argument("--k", type=_odd_k, required=True)
    p.add_argument("--sign", type=_sign, required=True)
    p.add_argument("--cover", type=_cover_list, required=True, metavar="D1,D2,...")
    p.add_argument(
        "--partial",
        choices=(algebraic.PREDICATE_MOD4_NE_2, algebraic.PREDICATE_ODD),
        help="treat the cover as partial, valid on this exponent condition",
    )
    p.add_argument("--root", type=_positive, help="root with k = root^4 (s) or root^2 (r)")
    p.add_argument("--audit-n", type=_positive, help="audit depth (default 10*L, partial 200)")
    p.add_argument("--out", help="write the certificate JSON to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "verify-dataset", parents=[common], help="verify every corpus record"
    )
    p.add_argument("--corpus", help=f"corpus file (default: ${dataset.ENV_CORPUS} or bundled)")
    p.set_defaults(func=cmd_verify_dataset)

    p = sub.add_parser(
        "disqualify", parents=[common], help="hunt the first prime in one sequence"
    )
    p.add_argument("--k", type=_odd_k, required=True)
    p.add_argument("--sign", type=_sign, required=True)
    p.add_argument("--max-n", type=_positive, default=disqualify.DEFAULT_SINGLE_N_MAX)
    p.add_argument(
        "--verbose", action="store_true", help="keep per-exponent primality results"
    )
    p.set_defaults(func=cmd_disqualify)

    p = sub.add_parser(
        "survey", parents=[common], help="disqualification table over a k range"
    )
    p.add_argument("--from", dest="k_min", type=_odd_k, required=True)
    p.add_argument("--to", dest="k_max", type=_odd_k, required=True)
    p.add_argument("--sign", type=_sign, required=True)
    p.add_argument("--max-n", type=_positive, default=disqualify.DEFAULT_SURVEY_N_MAX)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser(
        "family", parents=[common], help="derive k + 2*i*P with the same cover"
    )
    p.add_argument("--k", type=_odd_k, required=True)
    p.add_argument("--sign", type=_sign, required=True)
    p.add_argument("--cover", type=_cover_list, required=True, metavar="D1,D2,...")
    p.add_argument("--i", type=_positive, required=True)
    p.add_argument("--out", help="write the derived certificate JSON to this file")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser(
        "audit", parents=[common], help="re-check an emitted certificate file"
    )
    p.add_argument("file", help="certificate JSON produced by verify")
    p.add_argument("--audit-n", type=_positive, help="witness audit depth (default 10*L)")
    p.set_defaults(func=cmd_audit)
    return parser


def _emit_certificate(doc, args):
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.format == "json":
        sys.stdout.write(text)


def _cover_summary(cert, audit_n):
    lines = [
        f"verified: k={cert.candidate.k} ({cert.candidate.sign_name})",
        "entries (d, b, c): "
        + " ".join(f"({e.d},{e.b},{e.c})" for e in cert.entries),
        f"L = {cert.lcm}",
        "residues claimed per divisor: "
        + " ".join(
            f"{e.d}:{n}" for e, n in zip(cert.entries, cert.witness_counts)
        ),
    ]
    composite = [e.d for e, p in zip(cert.entries, cert.divisor_primality) if not p]
    if composite:
        lines.append(f"warning: composite divisors in cover: {composite}")
    lines.append(f"audited n = 1..{audit_n}: every term has a proper cover factor")
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    candidate = Candidate(args.k, args.sign)
    if args.partial or args.root:
        if not (args.partial and args.root):
            raise ValueError("--partial and --root must be given together")
        case = _algebraic_case(args)
        n_max = args.audit_n or dataset.DEFAULT_COVERLESS_N_MAX
        cert = algebraic.build_algebraic_certificate(case, n_max)
        _emit_certificate(algebraic.certificate_to_dict(cert), args)
        if args.format == "text":
            partial = cert.partial
            sys.stdout.write(
                f"verified: k={candidate.k} ({candidate.sign_name}), "
                f"kind={case.kind}, root={case.root}\n"
                f"partial cover exhaustive for '{partial.predicate}' residues, "
                f"L = {partial.lcm}\n"
                f"algebraic factor checked for the remaining n up to {n_max}\n"
            )
        return 0
    cert = cover.verify_cover(candidate, args.cover)
    audit_n = args.audit_n or 10 * cert.lcm
    if not cover.audit_certificate(cert, audit_n):
        n_bad = cover.first_audit_failure(cert, audit_n)
        sys.stderr.write(f"audit failed at n={n_bad}\n")
        return 1
    _emit_certificate(cover.certificate_to_dict(cert), args)
    if args.format == "text":
        sys.stdout.write(_cover_summary(cert, audit_n))
    return 0


def _algebraic_case(args):
    if args.sign == 1 and args.partial == algebraic.PREDICATE_MOD4_NE_2:
        case = algebraic.FourthPowerCase(args.root, args.cover)
    elif args.sign == -1 and args.partial == algebraic.PREDICATE_ODD:
        case = algebraic.SquareCase(args.root, args.cover)
    else:
        raise ValueError(
            "supported partial-cover forms: sign s with mod4ne2 (k = root^4) "
            "or sign r with odd (k = root^2)"
        )
    if case.k != args.k:
        raise ValueError(f"k does not equal root^{4 if case.sign == 1 else 2}")
    return case


def cmd_verify_dataset(args):
    path = args.corpus or dataset.default_corpus_path()
    records = dataset.load_corpus(path)
    report = dataset.verify_corpus(records)
    if args.format == "json":
        sys.stdout.write(json.dumps(dataset.report_to_dict(report), indent=2) + "\n")
    else:
        sys.stdout.write(dataset.report_to_text(report))
    return 0 if report.ok else 1


def cmd_disqualify(args):
    record = disqualify.first_prime_exponent(
        Candidate(args.k, args.sign), args.max_n, verbose=args.verbose
    )
    if args.format == "json":
        sys.stdout.write(json.dumps(disqualify.record_to_dict(record), indent=2) + "\n")
    else:
        sys.stdout.write(disqualify.records_to_text([record]))
    return 0 if record.disqualified else 1


def cmd_survey(args):
    records = disqualify.survey_range(args.k_min, args.k_max, args.sign, args.max_n)
    if args.format == "json":
        docs = [disqualify.record_to_dict(r) for r in records]
        sys.stdout.write(json.dumps(docs, indent=2) + "\n")
    else:
        sys.stdout.write(disqualify.records_to_text(records))
    return 0


def cmd_family(args):
    candidate = Candidate(args.k, args.sign)
    sibling = cover.generate_family(candidate, args.cover, args.i)
    cert = cover.verify_cover(sibling, args.cover)
    _emit_certificate(cover.certificate_to_dict(cert), args)
    if args.format == "text":
        sys.stdout.write(f"family member i={args.i}: k' = {sibling.k}\n")
        sys.stdout.write(_cover_summary(cert, cert.lcm))
    return 0


def cmd_audit(args):
    with open(args.file, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    if "kind" in doc:
        cert = algebraic.certificate_from_dict(doc)
        problem = algebraic.check_certificate_facts(cert)
        scope = f"partial cover + factors to n={cert.audited_n_max}"
    else:
        cert = cover.certificate_from_dict(doc)
        problem = cover.check_certificate_facts(cert)
        if problem is None:
            audit_n = args.audit_n or 10 * cert.lcm
            n_bad = cover.first_audit_failure(cert, audit_n)
            if n_bad is not None:
                problem = f"witness fails at n={n_bad}"
            scope = f"divisibility facts + witnesses to n={audit_n}"
        else:
            scope = "divisibility facts"
    if problem is not None:
        sys.stderr.write(f"audit FAILED: {problem}\n")
        return 1
    if args.format == "json":
        sys.stdout.write(json.dumps({"ok": True, "k": str(cert.candidate.k)}) + "\n")
    else:
        sys.stdout.write(f"audit ok: k={cert.candidate.k} ({scope})\n")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (CertificateFormatError, dataset.CorpusError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except VerificationError as exc:
        sys.stderr.write(f"not verified: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
