"""Command-line interface: ``umbra <command> ...``.

Exit codes: 0 success, 1 a verification identity failed, 2 bad input, 3 a
mathematical precondition does not hold (the precondition is named on stderr).
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io as _io
import os
import sys
from fractions import Fraction

from . import io, lifted, oracles, sheffer, verify
from .config import TENSOR_DEGREE, default_degree
from .errors import DimensionError, PreconditionError
from .families import (
    MONOMIAL,
    P_BASIS,
    PolyInBasis,
    bf_eval_P,
    bf_from_A,
    from_P,
    poly_eval,
    to_P,
)
from .series1d import PowerSeries1D, ps_comp_inverse, ps_compose, ps_mul, ps_reciprocal
from .symtensor import SiteSpace, SymTensor, st_eval_power, st_sym_product
from .tenseries import VectorTensorSeries

BINOMIAL_NAMES = ("falling", "rising", "abel", "laguerre-binomial", "charlier-binomial", "monomial")
SHEFFER_NAMES = ("hermite", "charlier", "laguerre")


class InputError(Exception):
    """Bad command-line input; exit code 2."""


# -- helpers ------------------------------------------------------------------


def _degree(args, fallback: int) -> int:
    if getattr(args, "degree", None) is not None:
        if args.degree < 1:
            raise InputError("--degree must be >= 1")
        return args.degree
    return default_degree(fallback)


def _explicit_degree(args) -> int | None:
    """Degree from ``--degree`` or ``UMBRA_DEGREE``; ``None`` when neither is set."""
    if getattr(args, "degree", None) is not None:
        return _degree(args, 1)
    return default_degree() if os.environ.get("UMBRA_DEGREE") else None


def _fmt(args, natural: str) -> str:
    return args.output or natural


def _vector(text: str | None, m: int | None = None, name: str = "vector") -> tuple[Fraction, ...] | None:
    if text is None:
        return None
    v = tuple(io.parse_fraction_list(text))
    if m is not None and len(v) != m:
        raise InputError(f"{name} has {len(v)} entries, expected {m}")
    return v


def _site_space(args, *vectors) -> SiteSpace:
    """Sites from ``--sites``, else inferred from the first given vector, else one site."""
    sites = getattr(args, "sites", None)
    if sites is not None:
        return io.parse_sites(sites)
    for v in vectors:
        if v is not None:
            return SiteSpace(len(io.parse_fraction_list(v)))
    return SiteSpace(getattr(args, "m", None) or 1)


def _tensor_out(t: SymTensor, fmt: str) -> str:
    if t.order == 0:
        return str(t.value())
    dense = t.to_json(dense=True)
    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["sites", "value"])
        for k, v in dense["coeffs"].items():
            w.writerow([k, v])
        return buf.getvalue().rstrip("\n")
    return io.dumps(dense)


def _value_out(value: Fraction, fmt: str, **context) -> str:
    if fmt == "json":
        return io.dumps({**{k: str(v) if isinstance(v, Fraction) else v for k, v in context.items()},
                         "value": str(value)})
    return str(value)


def _binomial(args, m: int, degree: int):
    """A binomial family from ``--family`` or ``--a-series`` (1-D coefficients or a tensor series)."""
    src = getattr(args, "a_series", None)
    if src is not None:
        obj = io.load_json(src) if src.strip().startswith("{") or _is_json_object_file(src) else None
        if isinstance(obj, dict) and "maps" in obj:
            A = VectorTensorSeries.from_json(obj)
            if A.m != m and getattr(args, "sites", None) is not None:
                raise InputError(f"series has m={A.m} but the sites give m={m}")
            return bf_from_A(A, name="custom")
        coeffs = io.parse_fraction_list(src)
        a = PowerSeries1D.from_coeffs(coeffs, max(degree, len(coeffs) - 1)).truncate(degree)
        return lifted.lift_binomial(a, m, degree, name="custom").family
    name = args.family
    if name not in BINOMIAL_NAMES:
        raise InputError(f"unknown binomial family {name!r}; choose from {', '.join(BINOMIAL_NAMES)}")
    return lifted.named(name, m, degree, Fraction(args.alpha)).family


def _is_json_object_file(path: str) -> bool:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().lstrip().startswith("{")
    except OSError:
        return False


# -- commands --------------------------------------------------------------------


def cmd_eval(args) -> int:
    space = _site_space(args, args.omega, args.xi)
    m = space.m
    omega = _vector(args.omega, m, "--omega") or (Fraction(0),) * m
    xi = _vector(args.xi, m, "--xi")
    n = args.n
    if n < 0:
        raise InputError("--n must be >= 0")
    degree = max(_degree(args, TENSOR_DEGREE), n, 1)
    if args.family in SHEFFER_NAMES:
        t = sheffer.named(args.family, space, degree).S(omega, n)
    else:
        t = bf_eval_P(_binomial(args, m, degree), omega, n)
    fmt = _fmt(args, "json")
    if xi is not None:
        print(_value_out(st_eval_power(t, xi), fmt, family=args.family, n=n))
    else:
        print(_tensor_out(t, fmt))
    return 0


def _series_arg(text: str, degree: int | None) -> PowerSeries1D:
    coeffs = io.parse_fraction_list(text)
    if not coeffs:
        raise InputError("empty coefficient list")
    return PowerSeries1D.from_coeffs(coeffs, degree if degree is not None else len(coeffs) - 1)


def cmd_series(args) -> int:
    degree = _explicit_degree(args)
    f = _series_arg(args.coeffs, degree)
    if args.op in ("mul", "compose"):
        if args.other is None:
            raise InputError(f"series {args.op} needs --other")
        g = _series_arg(args.other, degree if degree is not None else f.degree)
        if g.degree != f.degree:
            d = min(f.degree, g.degree)
            f, g = f.truncate(d), g.truncate(d)
        out = ps_mul(f, g) if args.op == "mul" else ps_compose(f, g)
    elif args.op == "inverse":
        out = ps_comp_inverse(f)
    else:
        out = ps_reciprocal(f)
    if _fmt(args, "csv") == "json":
        print(io.dumps(out.to_json()))
    else:
        print(io.csv_line(out.coeffs))
    return 0


def _tensor_arg(text: str) -> SymTensor:
    obj = io.load_json(text)
    return SymTensor.from_json(obj)


def cmd_tensor(args) -> int:
    fmt = _fmt(args, "json")
    if args.op == "product":
        if args.b is None:
            raise InputError("tensor product needs --b")
        print(_tensor_out(st_sym_product(_tensor_arg(args.a), _tensor_arg(args.b)), fmt))
        return 0
    if args.xi is None:
        raise InputError("tensor eval needs --xi")
    t = _tensor_arg(args.a)
    print(_value_out(st_eval_power(t, _vector(args.xi, t.m, "--xi")), fmt))
    return 0


def cmd_family(args) -> int:
    space = _site_space(args, getattr(args, "omega", None))
    degree = _degree(args, TENSOR_DEGREE)
    if args.op == "build":
        fam = _binomial(args, space.m, degree)
        print(io.dumps(fam.to_json()))
        return 0
    if args.op == "eval":
        fam = _binomial(args, space.m, max(degree, args.n))
        omega = _vector(args.omega, space.m, "--omega") or (Fraction(0),) * space.m
        t = bf_eval_P(fam, omega, args.n)
        xi = _vector(args.xi, space.m, "--xi")
        fmt = _fmt(args, "json")
        print(_value_out(st_eval_power(t, xi), fmt, n=args.n) if xi is not None else _tensor_out(t, fmt))
        return 0
    # convert
    p = PolyInBasis.from_json(io.load_json(args.poly))
    fam = _binomial(args, p.m, max(degree, p.degree))
    if args.to not in (MONOMIAL, P_BASIS):
        raise InputError("--to must be 'monomial' or 'P'")
    out = to_P(fam, p) if args.to == P_BASIS else from_P(fam, to_P(fam, p), MONOMIAL)
    result = out.to_json()
    if args.omega is not None:
        omega = _vector(args.omega, p.m, "--omega")
        result["value"] = str(poly_eval(fam, p, omega))
    print(io.dumps(result))
    return 0


def cmd_lifted(args) -> int:
    fmt_default = "csv" if args.op == "table" else "json"
    fmt = _fmt(args, fmt_default)
    if args.op == "choose":
        gamma = io.parse_int_list(args.gamma)
        t = lifted.binom_choose(gamma, args.n)
        if args.box is not None:
            box = io.parse_int_list(args.box)
            if any(s < 1 or s > len(gamma) for s in box):
                raise InputError("--box sites must lie in 1..m")
            print(_value_out(lifted.restrict_to_box(t, box), fmt, n=args.n))
        else:
            print(_tensor_out(t, fmt))
        return 0
    degree = max(_degree(args, TENSOR_DEGREE), args.n or 0, 1)
    a = lifted.named_series(args.family, degree, Fraction(args.alpha))
    if args.op == "table":
        rows = [oracles.onedim_sheffer_poly(a, n) for n in range(degree + 1)]
        if fmt == "json":
            print(io.dumps({"family": args.family, "degree": degree, "p": [[str(c) for c in row] for row in rows]}))
        else:
            print("n," + ",".join(f"t^{j}" for j in range(degree + 1)))
            for n, row in enumerate(rows):
                print(f"{n}," + io.csv_line(list(row) + [0] * (degree - n)))
        return 0
    # eval: <P^(n)(omega), xi^n> by the partition formula, checked against the tensor route
    space = _site_space(args, args.omega, args.xi)
    omega = _vector(args.omega, space.m, "--omega")
    xi = _vector(args.xi, space.m, "--xi")
    if omega is None or xi is None:
        raise InputError("lifted eval needs --omega and --xi")
    spec = lifted.lift_binomial(a, space.m, degree, name=args.family)
    value = lifted.lifted_eval_partition(spec, omega, xi, args.n)
    tensor_value = st_eval_power(spec.P(omega, args.n), xi)
    if value != tensor_value:
        print(f"partition formula {value} disagrees with tensor route {tensor_value}", file=sys.stderr)
        return 1
    print(_value_out(value, fmt, family=args.family, n=args.n))
    return 0


def _emit_reports(reports, fmt: str) -> int:
    if fmt == "json":
        print(io.dumps([res for rep in reports for res in rep.to_json()]))
    else:
        for rep in reports:
            for line in rep.lines():
                print(line)
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_sheffer(args) -> int:
    space = _site_space(args, args.omega, getattr(args, "xi", None))
    degree = _degree(args, 5)
    if args.op == "eval":
        fam = sheffer.named(args.family, space, max(degree, args.n))
        omega = _vector(args.omega, space.m, "--omega") or (Fraction(0),) * space.m
        t = fam.S(omega, args.n)
        xi = _vector(args.xi, space.m, "--xi")
        fmt = _fmt(args, "json")
        print(_value_out(st_eval_power(t, xi), fmt, family=args.family, n=args.n) if xi is not None
              else _tensor_out(t, fmt))
        return 0
    if args.op == "check":
        rep = verify.suite_sheffer(degree=degree, seed=args.seed, families=(args.family,), space=space)
    else:
        rep = verify.Report("orthogonality", {"family": args.family, "m": space.m, "seed": args.seed})
        verify.orthogonality_checks(rep, args.family, space, verify.sampling.rng(args.seed),
                                    max_n=min(degree, 3), tau_n=degree)
    return _emit_reports([rep], _fmt(args, "json"))


def _suite_kwargs(fn, args) -> dict:
    params = inspect.signature(fn).parameters
    kw = {}
    if args.m is not None:
        for key in ("m", "max_m"):
            if key in params:
                kw[key] = args.m
    if args.degree is not None or _explicit_degree(args) is not None:
        if "degree" in params:
            kw["degree"] = _degree(args, TENSOR_DEGREE)
    if args.family is not None:
        if "family" in params:
            kw["family"] = args.family
        elif "families" in params:
            kw["families"] = (args.family,)
        else:
            raise InputError(f"suite {fn.__name__[6:]!r} does not take --family")
    if args.alpha is not None and "alpha" in params:
        kw["alpha"] = Fraction(args.alpha)
    if "seed" in params:
        kw["seed"] = args.seed
    if args.instances is not None:
        for key in ("instances", "pairs"):
            if key in params:
                kw[key] = args.instances
    return kw


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        fn = verify.SUITES[name]
        reports.append(fn(**_suite_kwargs(fn, args)))
    return _emit_reports(reports, _fmt(args, "text"))


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", type=int, default=None,
                        help="truncation degree N (default: UMBRA_DEGREE or a per-command default)")
    common.add_argument("--output", choices=("json", "csv", "text"), default=None, help="output format")

    p = argparse.ArgumentParser(prog="umbra", description="Exact umbral calculus on finitely many sites.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def family_opts(q, default="falling"):
        q.add_argument("--family", default=default)
        q.add_argument("--alpha", default="1", help="parameter of the Abel family")
        q.add_argument("--sites", help="site weights: JSON {m, weights}, a weight list, a site count, or a file")

    q = sub.add_parser("eval", parents=[common], help="evaluate P^(n)(omega) or S^(n)(omega)")
    family_opts(q)
    q.add_argument("--a-series", dest="a_series")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--omega")
    q.add_argument("--xi", help="pair with xi^n instead of printing the tensor")
    q.set_defaults(func=cmd_eval)

    q = sub.add_parser("series", parents=[common], help="one-variable truncated power series")
    q.add_argument("op", choices=("mul", "compose", "inverse", "reciprocal"))
    q.add_argument("--coeffs", required=True, help="coefficients f_0,f_1,... (inline or file)")
    q.add_argument("--other", help="second operand: g for f*g, inner series g for f(g)")
    q.set_defaults(func=cmd_series)

    q = sub.add_parser("tensor", parents=[common], help="symmetric tensors")
    q.add_argument("op", choices=("product", "eval"))
    q.add_argument("--a", required=True, help="tensor JSON (inline or file)")
    q.add_argument("--b", help="second tensor for the symmetric product")
    q.add_argument("--xi", help="test vector for <F, xi^n>")
    q.set_defaults(func=cmd_tensor)

    q = sub.add_parser("family", parents=[common], help="binomial-type families")
    q.add_argument("op", choices=("build", "eval", "convert"))
    family_opts(q)
    q.add_argument("--a-series", dest="a_series", help="1-D coefficients or a vector tensor series JSON")
    q.add_argument("--n", type=int, default=0)
    q.add_argument("--omega")
    q.add_argument("--xi")
    q.add_argument("--poly", help="polynomial JSON {basis, m, coeffs} for convert")
    q.add_argument("--to", default=P_BASIS, help="target basis for convert: P or monomial")
    q.set_defaults(func=cmd_family)

    q = sub.add_parser("lifted", parents=[common], help="diagonally lifted families")
    q.add_argument("op", choices=("eval", "table", "choose"))
    family_opts(q)
    q.add_argument("--n", type=int, default=0)
    q.add_argument("--omega")
    q.add_argument("--xi")
    q.add_argument("--gamma", help="0/1 or integer configuration for choose")
    q.add_argument("--box", help="sites of a box for the restriction mass")
    q.set_defaults(func=cmd_lifted)

    q = sub.add_parser("sheffer", parents=[common], help="lifted Sheffer families")
    q.add_argument("op", choices=("eval", "check", "orth"))
    family_opts(q, default="hermite")
    q.add_argument("--n", type=int, default=0)
    q.add_argument("--omega")
    q.add_argument("--xi")
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_sheffer)

    q = sub.add_parser("verify", parents=[common], help="run an identity suite")
    q.add_argument("--suite", required=True, choices=tuple(verify.SUITES) + ("all",))
    q.add_argument("--family")
    q.add_argument("--alpha")
    q.add_argument("--m", type=int)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--instances", type=int)
    q.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sheffer" and args.family not in SHEFFER_NAMES:
        parser.error(f"--family must be one of {', '.join(SHEFFER_NAMES)}")
    try:
        return args.func(args)
    except PreconditionError as exc:
        detail = f" ({exc.detail})" if exc.detail else ""
        print(f"umbra: precondition violated: {exc.precondition}{detail}", file=sys.stderr)
        return 3
    except (InputError, DimensionError, ValueError, OSError) as exc:
        print(f"umbra: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
