"""Command-line interface.

Every subcommand builds a JSON-able report
``{"command", "inputs", "result", "paper_refs", "status"}`` and renders it
either as a key/value table (default) or as JSON (``--json``).  Exit codes:
0 ok, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from . import arith, charnum, curvature, homalg, torpedo, verify
from .arith import DomainError
from .curvature import FieldKind
from .verify import to_jsonable

OK, VERIFICATION_FAILURE, BAD_INPUT = "ok", "verification_failure", "bad_input"
EXIT_CODES = {OK: 0, VERIFICATION_FAILURE: 1, BAD_INPUT: 2}


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)
    text: str = ""

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class BadInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadInput(message)


# -- argument types ----------------------------------------------------------


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive_rational(text: str) -> Fraction:
    v = _rational(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def _field(text: str) -> FieldKind:
    try:
        return FieldKind.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def parse_homology(text: str) -> homalg.IntegralHomology:
    """``wu``, ``sphere:N``, or per-degree groups ``rank[:t1,t2]`` joined by ';'.

    Example: ``1;0;0:2;0;0;1`` is Z, 0, Z/2, 0, 0, Z.
    """
    t = text.strip().lower()
    if t == "wu":
        return homalg.wu_homology()
    if t.startswith("sphere:") or (t.startswith("s") and t[1:].isdigit()):
        n = int(t.split(":", 1)[1] if ":" in t else t[1:])
        if n < 1:
            raise DomainError("sphere dimension must be >= 1")
        return homalg.sphere_homology(n)
    groups = []
    try:
        for part in t.split(";"):
            rank, _, tors = part.partition(":")
            groups.append(homalg.AbelianGroupInvariants(int(rank), tuple(_int_list(tors))))
    except ValueError as exc:
        raise DomainError(f"cannot parse homology {text!r}: {exc}") from None
    return homalg.IntegralHomology(tuple(groups))


def _homology_dict(H: homalg.IntegralHomology) -> dict:
    return {str(k): str(g) for k, g in enumerate(H.groups)}


# -- handlers ----------------------------------------------------------------
# each returns (inputs, result, paper_refs) or (inputs, result, refs, status)


def _constants_dict(cc: curvature.CurvatureConstants) -> dict:
    return {"c_fiber": cc.c_fiber, "b": cc.b, "a": cc.a}


def cmd_berger(a):
    p = curvature.BergerParams(a.field, a.n, a.s, a.t)
    inputs = {"field": a.field.name, "n": a.n, "s": a.s, "t": a.t}
    return inputs, {"scal": curvature.scal_berger(p)}, ["Berger metric scalar curvature"]


def cmd_double(a):
    p = curvature.DoubleConnectionParams(a.field, a.n, a.m, a.s, a.u, a.t)
    inputs = {"field": a.field.name, "n": a.n, "m": a.m, "s": a.s, "u": a.u, "t": a.t}
    result: dict[str, Any] = {"scal": curvature.scal_double_connection(p)}
    refs = ["scalar curvature of invariant metrics on sphere bundles"]
    if a.lam is not None:
        inputs["lambda"] = a.lam
        try:
            lhs, rhs = curvature.global_scaling_check(p, a.lam)
        except AssertionError as exc:
            return inputs, {"error": str(exc)}, refs, VERIFICATION_FAILURE
        result.update(scaled_scal=lhs, scal_over_lambda=rhs)
        refs.append("global scaling of connection metrics")
    return inputs, result, refs


def cmd_constants(a):
    cc = curvature.constants(a.field, a.n)
    result = _constants_dict(cc)
    result["c_kn"] = curvature.sphere_scal(a.field.k * a.n)
    return {"field": a.field.name, "n": a.n}, result, ["curvature constants of the Hopf fibrations"]


def cmd_region(a):
    p = curvature.region_problem_from(a.field, a.n, a.m)
    rep = curvature.solve_region(p)
    result: dict[str, Any] = {
        "problem": {"a_x": p.a_x, "a_y": p.a_y, "b_x": p.b_x, "b_y": p.b_y, "c": p.c},
        "region": rep.status.value,
        "witness": list(rep.witness) if rep.witness else None,
        "convex": rep.convex,
    }
    inputs: dict[str, Any] = {"field": a.field.name, "n": a.n, "m": a.m}
    if a.x is not None or a.y is not None:
        if a.x is None or a.y is None:
            raise DomainError("--x and --y must be given together")
        inputs.update(x=a.x, y=a.y)
        result["contains"] = curvature.region_contains(p, a.x, a.y)
    return inputs, result, ["positivity region of invariant metrics"]


def cmd_dimension(a):
    d = curvature.invariant_metric_dimension(a.field, a.n, a.m)
    return ({"field": a.field.name, "n": a.n, "m": a.m}, {"dimension": d},
            ["classification of invariant metrics"])


def cmd_torpedo(a):
    prof = torpedo.make_torpedo(a.k, a.delta, a.grid)
    samples, min_scal = torpedo.rotsym_scal(prof)
    bound = (a.k - 1) * (a.k - 2) / float(a.delta) ** 2
    result = {
        "R": prof.R,
        "cap_end": prof.cap_end,
        "flat_start": prof.flat_start,
        "min_scal": min_scal,
        "bound": bound,
        "bound_holds": min_scal >= bound - torpedo.TOL,
    }
    if a.samples:
        result["samples"] = [
            {"r": s.r, "f": s.f, "df": s.df, "ddf": s.ddf, "scal": sc}
            for s, (_, sc) in zip(prof.samples, samples)
        ]
    status = OK if result["bound_holds"] else VERIFICATION_FAILURE
    return ({"k": a.k, "delta": a.delta, "grid": a.grid}, result,
            ["torpedo metric definition"], status)


def cmd_wu_bounds(a):
    disc, family = curvature.wu_curvature_bounds()
    return {}, {"disc_bound": disc, "family_bound": family}, ["Wu manifold connection metrics"]


def _manifold(text: str) -> charnum.Manifold:
    return charnum.parse_manifold(text)


def cmd_s_number(a):
    d = _manifold(a.manifold)
    k = a.k if a.k is not None else d.dim // 4
    return ({"manifold": str(d), "k": k}, {"s": charnum.s_number(d, k)},
            ["s-numbers of generators of the oriented cobordism ring"])


def cmd_chern(a):
    d = _manifold(a.manifold)
    cv = charnum.chern_total(d)
    return {"manifold": str(d)}, {"classes": cv.format(), "total": cv.total().format()}, []


def cmd_pontryagin(a):
    d = _manifold(a.manifold)
    pv = charnum.pontryagin_total(d)
    return {"manifold": str(d)}, {"classes": pv.format(), "total": pv.total().format()}, []


def cmd_signature(a):
    d = _manifold(a.manifold)
    return {"manifold": str(d)}, {"signature": charnum.signature(d)}, ["the Omega_8 lattice"]


def cmd_generators(a):
    combo = charnum.generator_search(a.k)
    achieved = sum(c * charnum.s_number(d, a.k) for c, d in combo)
    target = charnum.generator_target(a.k)
    result = {
        "combination": [{"coefficient": c, "manifold": str(d)} for c, d in combo],
        "achieved": achieved,
        "target": target,
    }
    status = OK if achieved == target else VERIFICATION_FAILURE
    return ({"k": a.k}, result, ["generators of the torsion-free oriented cobordism ring"], status)


def cmd_omega8(a):
    rep = charnum.omega8_report()
    result = {
        "hp2_coeffs": {"cp4": rep.cp4_coeff, "cp2*cp2": rep.cp2xcp2_coeff},
        "index": rep.index,
        "invariants": {k: {"signature": s, "s2": v} for k, (s, v) in rep.invariants.items()},
    }
    return {}, result, ["the Omega_8 lattice"]


def cmd_gcd_binom(a):
    return {"n": a.n}, {"gcd": arith.gcd_row_binomials(a.n)}, ["gcd of binomial coefficients"]


def cmd_d_odd(a):
    return ({"k": a.k}, {"d": arith.restricted_gcd_d(a.k), "d_2k+1": arith.gcd_row_binomials(2 * a.k + 1)},
            ["gcd of binomial coefficients"])


def cmd_prime_power(a):
    c = arith.prime_power_classify(a.n)
    return {"n": a.n}, {"classification": str(c), "p": c.p, "exponent": c.exponent}, []


def cmd_snf(a):
    A = homalg.IntMatrix.parse(a.matrix)
    U, D, V = homalg.smith_normal_form(A)
    result = {"U": U.format(), "D": D.format(), "V": V.format(),
              "cokernel": str(homalg.cokernel_invariants(A))}
    return {"matrix": A.format()}, result, ["homology of the Wu manifold"]


def cmd_cokernel(a):
    A = homalg.IntMatrix.parse(a.matrix)
    g = homalg.cokernel_invariants(A)
    return ({"matrix": A.format()},
            {"group": str(g), "free_rank": g.free_rank, "torsion": list(g.torsion)}, [])


def cmd_betti(a):
    H = parse_homology(a.homology)
    f = homalg.parse_field(a.field)
    return ({"homology": _homology_dict(H), "field": a.field},
            {"betti": homalg.betti_over_field(H, f)}, [])


def cmd_semichar(a):
    H = parse_homology(a.homology)
    f = homalg.parse_field(a.field)
    m = a.m if a.m is not None else (H.top - 1) // 2
    return ({"homology": _homology_dict(H), "field": a.field, "m": m},
            {"kappa": homalg.semi_characteristic(H, f, m)}, ["semi-characteristic"])


def cmd_lmp(a):
    H = parse_homology(a.homology)
    return ({"homology": _homology_dict(H)}, {"difference": homalg.lmp_difference(H)},
            ["semi-characteristic", "homology of the Wu manifold"])


def cmd_hilbert(a):
    s = homalg.hilbert_series(a.degrees, a.N)
    return ({"degrees": a.degrees, "N": a.N}, {"coefficients": list(s.coefficients)},
            ["Hilbert-Poincare series"])


def cmd_wall(a):
    return {"N": a.N}, {"degrees": homalg.wall_generator_degrees(a.N)}, ["Wall's polynomial algebra"]


def cmd_thom(a):
    return ({"N": a.N}, {"degrees": homalg.thom_generator_degrees(a.N)},
            ["Thom's unoriented cobordism ring"])


def cmd_paper_check(a):
    claims = verify.paper_check(seed=a.seed)
    by_criterion = {}
    for n, (title, _) in verify.CRITERIA.items():
        mine = [c for c in claims if c.criterion == n]
        by_criterion[str(n)] = {"title": title, "passed": all(c.passed for c in mine)}
    ok = all(c.passed for c in claims)
    result = {
        "claims": [c.as_dict() for c in claims],
        "criteria": by_criterion,
        "passed": sum(c.passed for c in claims),
        "failed": sum(not c.passed for c in claims),
    }
    refs = sorted({c.ref for c in claims})
    return {"seed": a.seed}, result, refs, OK if ok else VERIFICATION_FAILURE


def sweep_grid(p: curvature.RegionProblem, grid: int) -> list[Fraction]:
    """Dyadic logarithmic grid ``x_max * 2^-i`` for i = grid-1 .. 0."""
    vertex_scales = [b / a for a, b in ((p.a_x, p.b_x), (p.a_y, p.b_y)) if a > 0 and b > 0]
    x_max = max(vertex_scales) if vertex_scales else Fraction(10)
    return [x_max / 2 ** (grid - 1 - i) for i in range(grid)]


def sweep_rows(kind: FieldKind, n: int, m: int, grid: int) -> list[tuple[Fraction, Fraction, int]]:
    p = curvature.region_problem_from(kind, n, m)
    pts = sweep_grid(p, grid)
    return [(x, y, int(curvature.region_contains(p, x, y))) for x in pts for y in pts]


def _csv(rows) -> str:
    lines = ["x,y,feasible"]
    lines += [f"{float(x):.12g},{float(y):.12g},{f}" for x, y, f in rows]
    return "\n".join(lines) + "\n"


def cmd_sweep(a):
    if a.grid < 2:
        raise DomainError("--grid must be >= 2")
    rows = sweep_rows(a.field, a.n, a.m, a.grid)
    result = {"rows": len(rows), "feasible": sum(r[2] for r in rows), "csv": _csv(rows)}
    return ({"field": a.field.name, "n": a.n, "m": a.m, "grid": a.grid}, result,
            ["positivity region of invariant metrics"])


# -- parser ------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--output", help="write output to this path instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--timestamps", action="store_true", help="add a generation timestamp")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="psc-cobordism", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    group = ""

    def leaf(sub, name: str, fn: Callable, help: str):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=fn, command_name=f"{group} {name}".strip())
        return p

    def field_nm(p, m=True):
        p.add_argument("--field", type=_field, required=True, help="R, C or H")
        p.add_argument("--n", type=int, required=True)
        if m:
            p.add_argument("--m", type=int, required=True)

    group = "curvature"
    g = groups.add_parser("curvature", help="curvature of invariant metrics")
    sub = g.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    p = leaf(sub, "berger", cmd_berger, "scal of the Berger metric g_{s,t}")
    field_nm(p, m=False)
    p.add_argument("--s", type=_positive_rational, required=True)
    p.add_argument("--t", type=_positive_rational, required=True)
    p = leaf(sub, "double", cmd_double, "scal of s g_KP + g_{u,t}")
    field_nm(p)
    for name in ("s", "u", "t"):
        p.add_argument(f"--{name}", type=_positive_rational, required=True)
    p.add_argument("--lambda", dest="lam", type=_positive_rational, help="also check global scaling")
    p = leaf(sub, "constants", cmd_constants, "c_k, b_{k,n}, a_{k,n}")
    field_nm(p, m=False)
    p = leaf(sub, "region", cmd_region, "solve the positivity region")
    field_nm(p)
    p.add_argument("--x", type=_positive_rational)
    p.add_argument("--y", type=_positive_rational)
    p = leaf(sub, "dimension", cmd_dimension, "dimension of invariant forms")
    field_nm(p)
    p = leaf(sub, "torpedo", cmd_torpedo, "build a torpedo profile and its scal")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--delta", type=_positive_rational, default=Fraction(1))
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--samples", action="store_true", help="include per-sample values")
    leaf(sub, "wu-bounds", cmd_wu_bounds, "scal bounds on the Wu manifold pieces")

    group = "charnum"
    g = groups.add_parser("charnum", help="characteristic numbers")
    sub = g.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    p = leaf(sub, "s-number", cmd_s_number, "s-number of a manifold")
    p.add_argument("--manifold", required=True, help="cp4, h_2_3, hp2, cp2*cp2, ...")
    p.add_argument("--k", type=int)
    for name, fn, help in (
        ("chern", cmd_chern, "total Chern class"),
        ("pontryagin", cmd_pontryagin, "total Pontryagin class"),
        ("signature", cmd_signature, "signature (dimension <= 8)"),
    ):
        p = leaf(sub, name, fn, help)
        p.add_argument("--manifold", required=True)
    p = leaf(sub, "generators", cmd_generators, "generator of degree 4k")
    p.add_argument("--k", type=int, required=True)
    leaf(sub, "omega8", cmd_omega8, "HP^2 in the basis of Omega_8")

    group = "arith"
    g = groups.add_parser("arith", help="binomial gcds and prime powers")
    sub = g.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    leaf(sub, "gcd-binom", cmd_gcd_binom, "gcd of C(n, j), 0 < j < n").add_argument(
        "--n", type=int, required=True)
    leaf(sub, "d-odd", cmd_d_odd, "restricted gcd for 2k+1").add_argument(
        "--k", type=int, required=True)
    leaf(sub, "prime-power", cmd_prime_power, "classify n as a prime power").add_argument(
        "--n", type=int, required=True)

    group = "homalg"
    g = groups.add_parser("homalg", help="integer homological algebra")
    sub = g.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    for name, fn, help in (("snf", cmd_snf, "Smith normal form"),
                           ("cokernel", cmd_cokernel, "cokernel invariants")):
        leaf(sub, name, fn, help).add_argument("--matrix", required=True, help='e.g. "1,1;-1,1"')
    p = leaf(sub, "betti", cmd_betti, "Betti numbers over a field")
    p.add_argument("--homology", required=True, help="wu, sphere:N, or '1;0;0:2;0;0;1'")
    p.add_argument("--field", default="Q", help="Q or F<p>")
    p = leaf(sub, "semichar", cmd_semichar, "semi-characteristic")
    p.add_argument("--homology", required=True)
    p.add_argument("--field", default="Q")
    p.add_argument("--m", type=int)
    p = leaf(sub, "lmp", cmd_lmp, "kappa(Q) - kappa(F_2)")
    p.add_argument("--homology", required=True)
    p = leaf(sub, "hilbert", cmd_hilbert, "Hilbert series of a polynomial algebra")
    p.add_argument("--degrees", type=_int_list, required=True)
    p.add_argument("--N", type=int, required=True)
    leaf(sub, "wall-degrees", cmd_wall, "Wall generator degrees").add_argument("--N", type=int, required=True)
    leaf(sub, "thom-degrees", cmd_thom, "Thom generator degrees").add_argument("--N", type=int, required=True)

    group = ""
    leaf(groups, "paper-check", cmd_paper_check, "re-derive every published number")
    p = leaf(groups, "sweep-region", cmd_sweep, "CSV table of the positivity region")
    field_nm(p)
    p.add_argument("--grid", type=int, default=64)
    return parser


# -- rendering ---------------------------------------------------------------


def _table(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for key, value in report["inputs"].items():
        lines.append(f"  {key} = {_flat(value)}")
    result = report["result"]
    if "claims" in result:
        for c in result["claims"]:
            mark = "PASS" if c["passed"] else "FAIL"
            lines.append(f"[{mark}] ({c['criterion']}) {c['claim']}: {_flat(c['computed'])}")
        lines.append(f"passed {result['passed']}, failed {result['failed']}")
    else:
        for key, value in result.items():
            if key == "csv":
                continue
            lines.append(f"{key}: {_flat(value)}")
    lines.append(f"status: {report['status']}")
    return "\n".join(lines) + "\n"


def _flat(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=False)
    return str(value)


def run(argv: list[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
    except BadInput as exc:
        return CommandResult(BAD_INPUT, {"error": str(exc)}, f"error: {exc}\n")
    except SystemExit as exc:  # --help
        return CommandResult(OK if not exc.code else BAD_INPUT, {}, "")

    try:
        out = args.handler(args)
    except (DomainError, torpedo.ProfileError, ArithmeticError) as exc:
        payload = {"command": args.command_name, "error": str(exc), "status": "fail"}
        return CommandResult(BAD_INPUT, payload, f"error: {exc}\n")
    inputs, result, refs = out[:3]
    status = out[3] if len(out) > 3 else OK
    report = {
        "command": args.command_name,
        "inputs": to_jsonable(inputs),
        "result": to_jsonable(result),
        "paper_refs": refs,
        "status": "ok" if status == OK else "fail",
    }
    if args.timestamps:
        report["generated_at"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    if args.json:
        text = json.dumps(report, indent=2) + "\n"
    elif "csv" in result:
        text = result["csv"]
    else:
        text = _table(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        text = ""
    return CommandResult(status, report, text)


def main(argv: Optional[list[str]] = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if res.status == BAD_INPUT else sys.stdout
    stream.write(res.text)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
