"""Command-line entry point: ``padic-thue <command> ...``.

Exit codes: 0 success, 1 failed verification, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import p31, skolem
from .certificate import Check, dumps, envelope, make_check, to_jsonable
from .errors import HenselError, InconclusiveError, InconsistentCertificate, PadicThueError
from .integer_kernel import RationalInterval, icbrt, mod_pow
from .polynomial import IntPoly, hensel_lift, poly_eval_mod, roots_mod_p
from .strassman import ValuationProfile, strassman_bound


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    prime: int = skolem.DEFAULT_PRIME
    precision: int = skolem.DEFAULT_PRECISION
    bound: int = p31.DEFAULT_BOUND
    fmt: str = "text"
    out: str | None = None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _valuation_list(text: str) -> list:
    out = []
    for t in text.split(","):
        t = t.strip().lower()
        if t in ("inf", "oo", "infinity"):
            out.append(math.inf)
        else:
            try:
                out.append(int(t))
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad valuation {t!r}")
    return out


def _norm(text: str) -> int:
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError("norm must be +1 or -1")


def _common_options(defaults: bool) -> argparse.ArgumentParser:
    # subcommand copies use SUPPRESS so they don't clobber values given
    # before the subcommand name
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=d(skolem.DEFAULT_PRIME))
    common.add_argument("--precision", type=int, default=d(skolem.DEFAULT_PRECISION),
                        help="working precision exponent k (modulus p^k), 2..12")
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default=d("text"))
    common.add_argument("--out", default=d(None), help="write output to this path")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-thue",
        description="Skolem-method solver for 2x^3 - y^3 = +-1 with P31-set applications.",
        parents=[_common_options(True)],
    )
    common = _common_options(False)
    sub = parser.add_subparsers(dest="command", required=True)

    vp = sub.add_parser("verify-paper", parents=[common], help="run every check and print a claim table")
    vp.add_argument("--bound", type=int, default=p31.DEFAULT_BOUND)

    st = sub.add_parser("solve-thue", parents=[common], help="certify all solutions of 2x^3 - y^3 = norm")
    st.add_argument("--norm", type=_norm, default=1)

    pp = sub.add_parser("p31", help="P31-set utilities")
    psub = pp.add_subparsers(dest="p31_command", required=True)
    pv = psub.add_parser("validate", parents=[common])
    pv.add_argument("elements", type=int, nargs="+")
    pf = psub.add_parser("family", parents=[common])
    fsub = pf.add_subparsers(dest="family", required=True)
    c1 = fsub.add_parser("claim1", parents=[common])
    c1.add_argument("--a", type=int, required=True)
    c2 = fsub.add_parser("claim2", parents=[common])
    c2.add_argument("--a", type=int, required=True)
    c2.add_argument("--b", type=int, required=True)
    pe = psub.add_parser("extend", parents=[common])
    pe.add_argument("elements", type=int, nargs="+")
    pe.add_argument("--bound", type=int, default=p31.DEFAULT_BOUND)

    tc = sub.add_parser("tricube", parents=[common], help="search cubic-triangular numbers")
    tc.add_argument("--bound", type=int, default=p31.DEFAULT_BOUND)

    pa = sub.add_parser("padic", help="p-adic utilities")
    asub = pa.add_subparsers(dest="padic_command", required=True)
    ph = asub.add_parser("hensel", parents=[common])
    ph.add_argument("--poly", type=_int_list, required=True, help="coefficients c0,c1,...,cd")
    ph.add_argument("--prec", type=int, default=None, help="lift precision (defaults to --precision)")
    ph.add_argument("--root", type=int, default=None, help="lift only this root mod p")
    ps = asub.add_parser("strassman", parents=[common])
    ps.add_argument("--valuations", type=_valuation_list, required=True, help="v0,v1,... ('inf' for zero)")
    ps.add_argument("--tail", choices=("linear", "zero"), default="linear")
    ps.add_argument("--tail-slope", type=Fraction, default=Fraction(1))
    ps.add_argument("--tail-intercept", type=Fraction, default=Fraction(0))
    return parser


# --------------------------------------------------------------------------
# commands; each returns (exit code, json document, text lines)


def _show(value) -> str:
    """Short ASCII rendering; exact rationals are shown as decimals."""
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    if isinstance(value, str) and "/" in value:
        try:
            return f"{float(Fraction(value)):.10g}"
        except ValueError:
            return value
    if isinstance(value, (Fraction, RationalInterval)):
        return _show(to_jsonable(value))
    return str(value)


def _check_lines(checks: list[Check]) -> list[str]:
    width = max((len(c.name) for c in checks), default=10)
    return [f"  {c.status.upper():<9} {c.name:<{width}}  {_show(c.value)}" for c in checks]


def cmd_solve_thue(cfg: RunConfig, norm: int):
    cert = skolem.solve_thue(norm, cfg.prime, cfg.precision)
    lines = [f"equation: {cert.equation}   p = {cert.prime}, k = {cert.precision}"]
    lines += _check_lines(cert.checks)
    lines.append(f"surviving residues mod {cert.prime - 1}: {cert.surviving_residues}")
    for rep in cert.residue_reports:
        vals = ",".join("inf" if v == math.inf else str(v) for v in rep.profile.valuations)
        lines.append(f"  r={rep.residue:<3} v(lambda)=[{vals}] bound={rep.bound} "
                     f"integer zeros={rep.integer_zeros} shifted={[str(s) for s, _, _ in rep.shifted_zeros]} "
                     f"-> {rep.verdict}")
    lines.append("integer solutions (x, y): " + ", ".join(f"({x}, {y})" for x, y in sorted(cert.integer_solutions)))
    lines.append("positive solutions: " + (", ".join(f"({x}, {y})" for x, y in sorted(cert.positive_solutions)) or "none"))
    for d in cert.divergences:
        lines.append(f"  CORRECTED {d.claim}: paper {d.paper_value} -> computed {d.computed_value}")
    return (0 if cert.passed else 1), cert.to_json(), lines


def _kernel_checks() -> list[Check]:
    checks = [
        make_check(f"table_{b}^30_mod_961", mod_pow(b, 30, 961), v, {"base": b})
        for b, v in skolem.PAPER_POWER_TABLE.items()
    ]
    checks.append(make_check("roots_mod_31", roots_mod_p(skolem.THETA_POLY, 31), [3, 6, 19]))
    checks.append(make_check("f(3)", skolem.THETA_POLY(3), 2 * 31))
    checks.append(make_check("f(6)", skolem.THETA_POLY(6), 11 * 31))
    checks.append(make_check("f'(3), f'(6)", [skolem.THETA_POLY.derivative()(3), skolem.THETA_POLY.derivative()(6)],
                             [48, 147]))
    return checks


def cmd_verify_paper(cfg: RunConfig):
    sections: list[tuple[str, list[Check]]] = [("modular kernel", _kernel_checks())]
    plus = skolem.solve_thue(1, cfg.prime, cfg.precision)
    minus = skolem.solve_thue(-1, cfg.prime, cfg.precision)
    sections.append(("theorem: 2x^3 - y^3 = 1", plus.checks + [
        make_check("positive_solutions", sorted(plus.positive_solutions), [(1, 1)]),
        make_check("integer_solutions", sorted(plus.integer_solutions), [(0, -1), (1, 1)]),
    ]))
    sections.append(("companion: 2x^3 - y^3 = -1", [
        make_check("certificate_passes", minus.passed, True),
        make_check("integer_solutions", sorted(minus.integer_solutions), [(-1, -1), (0, 1)]),
    ]))

    base = p31.P31Set([1, 2, 13])
    fam = [
        make_check("{1,2,13}_is_P31", p31.validate_p31(base)[0], True),
        make_check("claim1_family_a<=200", all(p31.validate_p31(p31.family_claim1(a))[0] for a in range(2, 201)), True),
        make_check("claim2_family_b<=30",
                   all(p31.validate_p31(p31.family_claim2(a, b))[0] for b in range(2, 31) for a in range(1, b)), True),
    ]
    sections.append(("claims", fam))
    report = p31.search_extensions(base, cfg.bound)
    proof1 = p31.prove_nonextendible(plus)
    sections.append(("corollary: {1,2,13} non-extendible", proof1.checks + [
        make_check("extension_search", report.survivors, [], {"bound": cfg.bound}),
    ]))
    proof2 = p31.reduce_cubic_triangular(plus, minus)
    tri = p31.search_cubic_triangular(cfg.bound)
    sections.append(("corollary: unique cubic-triangular n", proof2.checks + [
        make_check("cubic_triangular_search", tri, [1], {"bound": cfg.bound}),
    ]))

    all_checks = [c for _, cs in sections for c in cs]
    ok = all(c.passed for c in all_checks)
    lines = [f"verify-paper  p = {cfg.prime}, k = {cfg.precision}, search bound = {cfg.bound}"]
    for title, cs in sections:
        lines.append(f"[{title}]")
        lines += _check_lines(cs)
    lines.append("[divergences from the published computation]")
    for d in plus.divergences:
        lines.append(f"  CORRECTED {d.claim}: paper {d.paper_value} -> computed {d.computed_value}")
        lines.append(f"            {d.note}")
    passed = sum(c.passed for c in all_checks)
    lines.append(f"{passed}/{len(all_checks)} checks passed, {len(plus.divergences)} corrected")
    doc = envelope("verify-paper", {
        "prime": cfg.prime,
        "precision": cfg.precision,
        "bound": cfg.bound,
        "sections": [{"title": t, "checks": [c.to_json() for c in cs]} for t, cs in sections],
        "checks": [c.to_json() for c in all_checks],
        "divergences_from_paper": [d.to_json() for d in plus.divergences],
        "status": "pass" if ok else "fail",
    })
    return (0 if ok else 1), doc, lines


def cmd_p31_validate(cfg: RunConfig, elements):
    s = p31.P31Set(elements)
    ok, bad = p31.validate_p31(s)
    if ok:
        lines = [f"{s}: valid P31-set"]
    else:
        prod = bad[0] * bad[1] * bad[2] + 1
        lines = [f"{s}: not a P31-set; {bad[0]}*{bad[1]}*{bad[2]}+1 = {prod} is not a cube"]
    doc = envelope("p31_validate", {"elements": list(s.elements), "valid": ok,
                                    "first_failure": list(bad) if bad else None})
    return (0 if ok else 1), doc, lines


def cmd_p31_family(cfg: RunConfig, which, a, b):
    s = p31.family_claim1(a) if which == "claim1" else p31.family_claim2(a, b)
    x, y, z = s.elements
    prod = x * y * z + 1
    root, exact = icbrt(prod)
    ok = p31.validate_p31(s)[0]
    lines = [f"{which}: {s}, product + 1 = {prod} = {root}^3" if exact else f"{which}: {s}, product + 1 = {prod}"]
    doc = envelope("p31_family", {"family": which, "a": a, "b": b, "elements": list(s.elements),
                                  "product_plus_one": prod, "cube_root": root if exact else None, "valid": ok})
    return (0 if ok else 1), doc, lines


def cmd_p31_extend(cfg: RunConfig, elements, bound):
    s = p31.P31Set(elements)
    report = p31.search_extensions(s, bound)
    lines = [f"extensions of {s} with y <= {bound}: tested {report.tested}, survivors {report.survivors or 'none'}"]
    for (xi, xj), count in report.failing_pair_counts().items():
        lines.append(f"  {count} candidates first fail on {xi}*{xj}*y+1")
    return 0, report.to_json(), lines


def cmd_tricube(cfg: RunConfig, bound):
    found = p31.search_cubic_triangular(bound)
    proof = p31.reduce_cubic_triangular(skolem.solve_thue(1, cfg.prime, cfg.precision),
                                        skolem.solve_thue(-1, cfg.prime, cfg.precision))
    doc = envelope("tricube", {"bound": bound, "indices": found, "proof": proof.to_json()})
    return (0 if proof.passed else 1), doc, [str(n) for n in found]


def cmd_hensel(cfg: RunConfig, coeffs, prec, root):
    f = IntPoly(coeffs)
    k = prec if prec is not None else cfg.precision
    if root is not None and poly_eval_mod(f, root, cfg.prime) != 0:
        raise ValueError(f"{root} is not a root of {f} mod {cfg.prime}")
    candidates = [root % cfg.prime] if root is not None else roots_mod_p(f, cfg.prime)
    lifts, lines = [], [f"f = {f}, p = {cfg.prime}, k = {k}"]
    code = 0
    for x0 in candidates:
        try:
            y = hensel_lift(f, cfg.prime, x0, k)
        except HenselError as e:
            lifts.append({"root_mod_p": x0, "lift": None, "error": str(e)})
            lines.append(f"  {x0}: {e}")
            code = 1
            continue
        lifts.append({"root_mod_p": x0, "lift": y.residue,
                      "f_at_lift_mod_pk": poly_eval_mod(f, y.residue, y.modulus)})
        lines.append(f"  {x0} -> {y.residue} mod {cfg.prime}^{k}")
    if not candidates:
        lines.append("  no roots mod p")
    doc = envelope("hensel", {"poly": list(f.coeffs), "prime": cfg.prime, "precision": k, "lifts": lifts})
    return code, doc, lines


def cmd_strassman(cfg: RunConfig, valuations, tail, slope, intercept):
    prof = ValuationProfile(valuations, None,
                            slope if tail == "linear" else None, intercept)
    try:
        bound = strassman_bound(prof)
    except InconclusiveError as e:
        doc = envelope("strassman", {"profile": prof.to_json(), "bound": None, "error": str(e)})
        return 1, doc, [f"inconclusive: {e}"]
    doc = envelope("strassman", {"profile": prof.to_json(), "bound": bound})
    return 0, doc, [f"at most {bound} zeros in Z_p", str(bound)]


def _dispatch(args, cfg: RunConfig):
    c = args.command
    if c == "verify-paper":
        return cmd_verify_paper(cfg)
    if c == "solve-thue":
        return cmd_solve_thue(cfg, args.norm)
    if c == "tricube":
        return cmd_tricube(cfg, args.bound)
    if c == "p31":
        if args.p31_command == "validate":
            return cmd_p31_validate(cfg, args.elements)
        if args.p31_command == "family":
            return cmd_p31_family(cfg, args.family, args.a, getattr(args, "b", None))
        return cmd_p31_extend(cfg, args.elements, args.bound)
    if c == "padic":
        if args.padic_command == "hensel":
            return cmd_hensel(cfg, args.poly, args.prec, args.root)
        return cmd_strassman(cfg, args.valuations, args.tail, args.tail_slope, args.tail_intercept)
    raise UsageError(f"unknown command {c}")


_LIST_FLAGS = ("--poly", "--valuations")


def _glue_list_flags(argv: list[str]) -> list[str]:
    # "--poly -1,3,3,1" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _LIST_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_list_flags(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    cfg = RunConfig(args.command, args.prime, args.precision,
                    getattr(args, "bound", p31.DEFAULT_BOUND), args.fmt, args.out)
    if not 2 <= cfg.precision <= 12:
        print("error: --precision must be in [2, 12]", file=sys.stderr)
        return 2
    if getattr(args, "bound", 1) < 1:
        print("error: --bound must be >= 1", file=sys.stderr)
        return 2
    try:
        code, doc, lines = _dispatch(args, cfg)
    except (InconclusiveError, InconsistentCertificate) as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return 1
    except (ValueError, PadicThueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = dumps(doc) if cfg.fmt == "json" else "\n".join(lines) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
