"""Identity suites: each runs a family of exact checks and reports one line per identity.

A report entry is ``{identity, parameters, status, witness}``; the witness holds
the first failing input (``None`` when everything passed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, combinations, product
from math import comb, factorial
from typing import Any, Callable, Iterable

from . import lifted, oracles, sampling, sheffer
from .errors import PreconditionError
from .families import (
    MONOMIAL,
    P_BASIS,
    S_BASIS,
    PolyInBasis,
    ShiftInvariantOp,
    bf_from_A,
    bf_lower,
    bf_monomial_to_P,
    bf_P_to_monomial,
    bf_shift,
    binomial_identity_holds,
    boole_shift,
    bt3_lowering,
    op_apply,
    op_from_action,
    op_invert,
    op_J_product,
    op_shift,
    poly_eval,
    poly_expand,
    shift_monomial_coeffs,
)
from .series1d import expm1_series, half_square_series, identity_series, neg_log1m_series, ps_compose
from .symtensor import SiteSpace, SymTensor, annihilate, multisets, pairing, st_eval_power, st_from_power
from .tenseries import (
    ScalarTensorSeries,
    identity_vseries,
    lift,
    ts_scalar_mul,
    ts_scalar_reciprocal,
    ts_scalar_vector_compose,
    ts_vector_compose,
    ts_vector_inverse,
)


def _js(x: Any) -> Any:
    """JSON-friendly rendering of witnesses."""
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_js(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _js(v) for k, v in x.items()}
    return x


@dataclass
class CheckResult:
    identity: str
    parameters: dict
    status: str = "PASS"
    witness: Any = None
    instances: int = 0

    def line(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{self.status} {self.identity} [{params}] ({self.instances} checks)"

    def to_json(self) -> dict:
        return {"identity": self.identity, "parameters": self.parameters, "status": self.status,
                "witness": _js(self.witness)}


@dataclass
class Report:
    suite: str
    parameters: dict
    results: list[CheckResult] = field(default_factory=list)
    _index: dict = field(default_factory=dict)

    def check(self, identity: str, ok: bool, witness: Callable[[], Any] | Any = None, **params):
        key = identity
        res = self._index.get(key)
        if res is None:
            res = CheckResult(identity, {**self.parameters, **params})
            self._index[key] = res
            self.results.append(res)
        res.instances += 1
        if not ok and res.status == "PASS":
            res.status = "FAIL"
            res.witness = witness() if callable(witness) else witness
        return ok

    @property
    def passed(self) -> bool:
        return all(r.status == "PASS" for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.results]


def _subsets(m: int) -> Iterable[tuple[int, ...]]:
    sites = range(1, m + 1)
    return chain.from_iterable(combinations(sites, k) for k in range(1, m + 1))


def _random_weights(r, m):
    return tuple(Fraction(r.randint(1, 6), r.randint(1, 3)) for _ in range(m))


# -- 1. formal tensor series algebra -------------------------------------------


def suite_appendix(m: int = 2, degree: int = 4, instances: int = 50, seed: int = 0) -> Report:
    rep = Report("appendix", {"m": m, "degree": degree, "seed": seed})
    r = sampling.rng(seed)
    unit = ScalarTensorSeries.unit(m, degree)
    ident = identity_vseries(m, degree)
    for i in range(instances):
        F = sampling.scalar_series(r, m, degree, const=sampling.rational(r, nonzero=True))
        G = ts_scalar_reciprocal(F)
        rep.check("scalar reciprocal F * (1/F) == 1", ts_scalar_mul(F, G) == unit and ts_scalar_mul(G, F) == unit,
                  lambda: {"F": F})

        A = sampling.vector_series(r, m, degree)
        B = ts_vector_inverse(A)
        rep.check("compositional inverse A o B == B o A == id",
                  ts_vector_compose(A, B) == ident and ts_vector_compose(B, A) == ident, lambda: {"A": A})

        H = sampling.scalar_series(r, m, degree)
        A2 = sampling.vector_series(r, m, degree)
        B2 = sampling.vector_series(r, m, degree)
        C2 = sampling.vector_series(r, m, degree)
        AB = ts_vector_compose(A2, B2)
        lhs = ts_scalar_vector_compose(ts_scalar_vector_compose(H, A2), B2)
        rhs = ts_scalar_vector_compose(H, AB)
        rep.check("associativity (F o A) o B == F o (A o B)", lhs == rhs, lambda: {"F": H, "A": A2, "B": B2})
        rep.check("associativity (A o B) o C == A o (B o C)",
                  ts_vector_compose(AB, C2) == ts_vector_compose(A2, ts_vector_compose(B2, C2)),
                  lambda: {"A": A2, "B": B2, "C": C2})

        if i < 5:
            xi = sampling.vector(r, m)
            ray = oracles.compose_ray(A2, B2, xi)
            per_degree = [AB[n].eval_power(xi) for n in range(1, degree + 1)]
            ok = all(per_degree[n - 1][x] == ray[x].coeffs[n] for n in range(1, degree + 1) for x in range(m))
            rep.check("vector composition matches ray expansion", ok, lambda: {"A": A2, "B": B2, "xi": xi})
            sray = oracles.scalar_compose_ray(H, A2, xi)
            HA = ts_scalar_vector_compose(H, A2)
            rep.check("scalar composition matches ray expansion",
                      all(st_eval_power(HA.terms[n], xi) == sray.coeffs[n] for n in range(degree + 1)),
                      lambda: {"F": H, "A": A2, "xi": xi})
    return rep


# -- 2. binomial families ------------------------------------------------------------


def _random_monic(r, m, degree):
    return sampling.vector_series(r, m, degree, monic=True)


def suite_binomial(family: str = "falling", m: int = 2, degree: int = 5, seed: int = 0, alpha=1,
                   trials: int = 3) -> Report:
    params = {"family": family, "m": m, "degree": degree, "seed": seed}
    if family == "abel":
        params["alpha"] = str(Fraction(alpha))
    rep = Report("binomial", params)
    r = sampling.rng(seed)
    if family == "random":
        fam = bf_from_A(_random_monic(r, m, degree), name="random")
        spec = None
    else:
        spec = lifted.named(family, m, degree, alpha)
        fam = spec.family

    for _ in range(trials):
        omega, zeta = sampling.vector(r, m), sampling.vector(r, m)
        for n in range(degree + 1):
            rep.check("binomial identity P(omega+zeta) == sum C(n,k) P^(k)(omega) (.) P^(n-k)(zeta)", binomial_identity_holds(fam, omega, zeta, n),
                      lambda: {"omega": omega, "zeta": zeta, "n": n})

    zeta, eta = sampling.vector(r, m, nonzero=True), sampling.vector(r, m, nonzero=True)
    for k in range(degree + 1):
        for c in multisets(m, k):
            p = PolyInBasis.single(MONOMIAL, SymTensor(k, m, {c: 1}))
            lhs = bf_lower(fam, zeta, bf_shift(fam, eta, p))
            rhs = bf_shift(fam, eta, bf_lower(fam, zeta, p))
            rep.check("Q(zeta) commutes with shifts", lhs.same_as(rhs),
                      lambda: {"zeta": zeta, "eta": eta, "basis_poly": p})
            rep.check("Q(zeta) = sum <B_k zeta, D^k>/k!",
                      bt3_lowering(fam, zeta, p).same_as(bf_lower(fam, zeta, p)),
                      lambda: {"zeta": zeta, "basis_poly": p})
    rep.check("stored B is the compositional inverse of A", fam.B == ts_vector_inverse(fam.A))
    if spec is not None:
        rep.check("B_k = b_k D_k^* from the inverse 1-D series", fam.B == lift(spec.q, m))

    for _ in range(trials):
        omega, xi = sampling.vector(r, m), sampling.vector(r, m)
        for n in range(degree + 1):
            val = st_eval_power(fam.P(omega, n), xi)
            ok = val == oracles.generating_coefficient(fam.A, omega, xi, n)
            if spec is not None:
                ok = ok and val == oracles.lifted_generating_coefficient(spec.a, omega, xi, n)
            rep.check("P generating-function coefficients", ok, lambda: {"omega": omega, "xi": xi, "n": n})

    one = PolyInBasis.single(MONOMIAL, SymTensor.scalar(1, m))
    rep.check("Q(zeta) 1 == 0", bf_lower(fam, zeta, one).same_as(PolyInBasis.zero(MONOMIAL, m, 0)))
    xi = sampling.vector(r, m)
    lin = PolyInBasis.single(MONOMIAL, SymTensor.from_vector(xi))
    rep.check("Q(zeta) <., xi> == <zeta, xi>",
              bf_lower(fam, zeta, lin).same_as(PolyInBasis.single(MONOMIAL, SymTensor.scalar(pairing(zeta, xi), m))))
    return rep


# -- 3. basis change ---------------------------------------------------------------------


def basis_families(m: int, degree: int, seed: int = 0):
    r = sampling.rng(seed + 1000)
    fams = [lifted.named(n, m, degree).family for n in ("falling", "rising", "laguerre-binomial")]
    fams.append(lifted.named("abel", m, degree, 1).family)
    fams.append(bf_from_A(_random_monic(r, m, degree), name="random"))
    return fams


def suite_basis(m: int = 2, degree: int = 5, instances: int = 100, seed: int = 0) -> Report:
    rep = Report("basis", {"m": m, "degree": degree, "seed": seed})
    r = sampling.rng(seed)
    fams = basis_families(m, degree, seed)
    for i in range(instances):
        fam = fams[i % len(fams)]
        d = r.randint(0, degree)
        pm = sampling.poly(r, MONOMIAL, m, d)
        pp = sampling.poly(r, P_BASIS, m, d)
        to_p = bf_monomial_to_P(fam, pm)
        rep.check("P_to_monomial o monomial_to_P == id", bf_P_to_monomial(fam, to_p).same_as(pm),
                  lambda: {"family": fam.name, "p": pm})
        rep.check("monomial_to_P o P_to_monomial == id",
                  bf_monomial_to_P(fam, bf_P_to_monomial(fam, pp)).same_as(pp), lambda: {"family": fam.name, "p": pp})
        omega = sampling.vector(r, m)
        rep.check("conversion preserves values", poly_eval(fam, pm, omega) == poly_eval(fam, to_p, omega),
                  lambda: {"family": fam.name, "p": pm, "omega": omega})
    return rep


# -- 4. operator calculus ------------------------------------------------------------------


def suite_operators(m: int = 2, degree: int = 4, pairs: int = 50, seed: int = 0) -> Report:
    rep = Report("operators", {"m": m, "degree": degree, "seed": seed})
    r = sampling.rng(seed)
    fams = basis_families(m, degree, seed)
    for i in range(pairs):
        fam = fams[i % len(fams)]
        S = sampling.operator(r, m, degree)
        T = sampling.operator(r, m, degree)
        p = sampling.poly(r, P_BASIS, m, degree)
        ST = op_J_product(S, T)
        TS = op_J_product(T, S)
        lhs = op_apply(ST, fam, p)
        rhs = op_apply(S, fam, op_apply(T, fam, p))
        rep.check("J(ST) == JS (.) JT", lhs.same_as(rhs), lambda: {"family": fam.name, "S": S, "T": T, "p": p})
        rep.check("shift-invariant operators commute",
                  ST == TS and rhs.same_as(op_apply(T, fam, op_apply(S, fam, p))),
                  lambda: {"family": fam.name, "S": S, "T": T, "p": p})
        rep.check("J-coordinates read back from the action",
                  op_from_action(fam, lambda q: op_apply(T, fam, q)) == T, lambda: {"family": fam.name, "T": T})

        pm = sampling.poly(r, MONOMIAL, m, r.randint(0, degree))
        expanded = poly_expand(fam, pm)
        omega = sampling.vector(r, m)
        rep.check("polynomial expansion reconstructs p",
                  expanded.same_as(bf_monomial_to_P(fam, pm)) and poly_eval(fam, expanded, omega) == poly_eval(fam, pm, omega),
                  lambda: {"family": fam.name, "p": pm})

        if S.G[0].value() != 0:
            inv = op_invert(S)
            ok = op_J_product(S, inv) == ShiftInvariantOp.unit(m, degree)
            ok = ok and op_apply(inv, fam, op_apply(S, fam, p)).same_as(p)
            rep.check("op_invert inverts when T1 != 0", ok, lambda: {"S": S})
        S0 = ShiftInvariantOp(m, (SymTensor.scalar(0, m),) + S.G[1:])
        try:
            op_invert(S0)
            raised = False
        except PreconditionError:
            raised = True
        one = PolyInBasis.single(P_BASIS, SymTensor.scalar(1, m), degree)
        killed = op_apply(S0, fam, one).same_as(PolyInBasis.zero(P_BASIS, m, 0))
        rep.check("op_invert refuses when T1 == 0 (and T kills 1)", raised and killed, lambda: {"S": S0})

        zeta, eta = sampling.vector(r, m), sampling.vector(r, m)
        rep.check("J(E(zeta)) reproduces the shift",
                  op_apply(op_shift(fam, zeta), fam, p).same_as(bf_shift(fam, zeta, p)),
                  lambda: {"family": fam.name, "zeta": zeta, "p": p})
        s = tuple(a + b for a, b in zip(zeta, eta))
        rep.check("E(zeta) E(eta) == E(zeta + eta)",
                  bf_shift(fam, zeta, bf_shift(fam, eta, pm)).same_as(bf_shift(fam, s, pm)),
                  lambda: {"zeta": zeta, "eta": eta, "p": pm})
        rep.check("Boole's formula matches the binomial expansion",
                  boole_shift(zeta, pm).same_as(shift_monomial_coeffs(zeta, pm)), lambda: {"zeta": zeta, "p": pm})
    return rep


# -- 5. falling factorials ------------------------------------------------------------------


def suite_falling(max_m: int = 3, degree: int = 5, seed: int = 0, choose_m: int = 5, choose_n: int = 4) -> Report:
    rep = Report("falling", {"max_m": max_m, "degree": degree, "seed": seed})
    r = sampling.rng(seed)
    for m in range(1, max_m + 1):
        fam = lifted.falling(m, degree).family
        ris = lifted.rising(m, degree).family
        for omega in (sampling.vector(r, m), sampling.integer_masses(r, m)):
            for n in range(degree + 1):
                prod_form = lifted.falling_factorial_product(omega, n)
                rec_form = lifted.falling_factorial_recurrence(omega, n)
                rep.check("product formula == recurrence == generic construction",
                          prod_form == rec_form == fam.P(omega, n), lambda: {"omega": omega, "n": n})
                rep.check("rising factorial == (-1)^n (-omega)_n == lifted -log(1-u)",
                          lifted.rising_factorial(omega, n) == ris.P(omega, n), lambda: {"omega": omega, "n": n})
    for m in range(1, choose_m + 1):
        for gamma in product((0, 1), repeat=m):
            for n in range(choose_n + 1):
                t = lifted.binom_choose(gamma, n)
                rep.check("binom_choose equals the sum over n-subsets", t == lifted.simple_choose(gamma, n),
                          lambda: {"gamma": gamma, "n": n})
                for box in _subsets(m):
                    mass = sum(gamma[s - 1] for s in box)
                    rep.check("restriction mass == C(gamma(box), n)", lifted.restrict_to_box(t, box) == comb(mass, n),
                              lambda: {"gamma": gamma, "box": box, "n": n})
    return rep


# -- 6. restriction corollary -------------------------------------------------------------


UNIT_VOLUME_WEIGHTS = {1: (1,), 2: (Fraction(1, 2), Fraction(1, 2)), 3: (Fraction(1, 2), Fraction(1, 2), 1)}


def suite_restriction(families=("falling", "rising", "laguerre-binomial"), max_m: int = 3, degree: int = 5,
                      seed: int = 0, instances: int = 3) -> Report:
    rep = Report("restriction", {"max_m": max_m, "degree": degree, "seed": seed})
    r = sampling.rng(seed)
    for name in families:
        a = lifted.named_series(name, degree)
        polys = [oracles.onedim_sheffer_poly(a, n) for n in range(degree + 1)]
        for m in range(1, max_m + 1):
            space = SiteSpace(m, UNIT_VOLUME_WEIGHTS.get(m, ()))
            fam = lifted.named(name, m, degree).family
            for _ in range(instances):
                eta = sampling.integer_masses(r, m)
                for n in range(degree + 1):
                    P = fam.P(eta, n)
                    for box in _subsets(m):
                        if space.volume(box) != 1:
                            continue
                        count = sum(eta[s - 1] for s in box)
                        rep.check("(P^(n)(eta))(box^n) == p_n(eta(box))",
                                  lifted.restrict_to_box(P, box) == oracles.poly_at(polys[n], count),
                                  lambda: {"family": name, "eta": eta, "box": box, "n": n})
    return rep


# -- 7. Sheffer suite ---------------------------------------------------------------------


def sheffer_families(space: SiteSpace, degree: int, seed: int = 0, random_pairs: int = 2):
    r = sampling.rng(seed + 2000)
    out = [sheffer.named(n, space, degree) for n in ("hermite", "charlier", "laguerre")]
    for i in range(random_pairs):
        a = sampling.series1d(r, degree, const=0, linear=1)
        c = sampling.series1d(r, degree, const=0)
        out.append(sheffer.sh_lift(a, c, space, degree, name=f"random-{i}"))
    return out


def suite_sheffer(m: int = 3, degree: int = 5, seed: int = 0, random_pairs: int = 2, families=None,
                  space: SiteSpace | None = None) -> Report:
    r = sampling.rng(seed)
    if space is None:
        space = SiteSpace(m, _random_weights(r, m))
    m = space.m
    rep = Report("sheffer", {"m": m, "degree": degree, "seed": seed})
    if families:
        fams = [sheffer.named(n, space, degree) for n in families]
    else:
        fams = sheffer_families(space, degree, seed, random_pairs)
    for fam in fams:
        omega, zeta, xi = sampling.vector(r, m), sampling.vector(r, m), sampling.vector(r, m)
        d = fam.lifted
        for n in range(degree + 1):
            w = lambda: {"family": fam.name, "omega": omega, "zeta": zeta, "n": n}
            rep.check("Sheffer identity S(omega+zeta) == sum C(n,k) S^(k)(omega) (.) P^(n-k)(zeta)",
                      sheffer.sh_binomial_identity_check(fam, omega, zeta, n), w)
            rep.check("kappa inversion P == sum C(n,k) kappa^(k) (.) S^(n-k)",
                      sheffer.kappa_inversion_check(fam, omega, n), w)
            rep.check("kappa and rho are exponential reciprocals", sheffer.reciprocity_check(fam, n), w)
            rep.check("rho by partitions == rho by series",
                      fam.rho[n] == sheffer.rho_from_tau(fam.base, fam.tau)[n], w)
            rep.check("S generating-function coefficients",
                      st_eval_power(fam.S(omega, n), xi)
                      == oracles.lifted_generating_coefficient(d.a, omega, xi, n, d.c, space.weights),
                      lambda: {"family": fam.name, "omega": omega, "xi": xi, "n": n})
        p = sampling.poly(r, S_BASIS, m, degree, density=0.6)
        low = sheffer.sh_lower(fam, zeta, p)
        expect = PolyInBasis(S_BASIS, m, tuple(annihilate(zeta, f) for f in p.coeffs[1:]))
        rep.check("lowering law on S-polynomials", low.same_as(expect), lambda: {"family": fam.name, "p": p})
        Tp = sheffer.sh_T_apply(fam, p)
        rep.check("T maps S-coefficients to the same P-coefficients", Tp.same_as(p.relabel(P_BASIS)),
                  lambda: {"family": fam.name, "p": p})
        back = sheffer.sh_T_inverse_apply(fam, Tp)
        rep.check("T^{-1} T == id", back.same_as(sheffer.S_to_P(fam, p)), lambda: {"family": fam.name, "p": p})
        for _ in range(2):
            eta = sampling.integer_masses(r, m)
            for box in _subsets(m):
                vol = space.volume(box)
                count = sum(eta[s - 1] for s in box)
                for n in range(degree + 1):
                    poly1d = oracles.onedim_sheffer_poly(d.a, n, d.c, vol)
                    rep.check("box restriction == 1-D Sheffer polynomial at eta(box)",
                              lifted.restrict_to_box(fam.S(eta, n), box) == oracles.poly_at(poly1d, count),
                              lambda: {"family": fam.name, "eta": eta, "box": box, "n": n})
        if fam.name == "charlier":
            ff = lifted.falling(m, degree).family
            s_total = space.integral(xi)
            for n in range(degree + 1):
                lhs = st_eval_power(fam.S(omega, n), xi)
                rhs = sum((comb(n, k) * (-s_total) ** k * st_eval_power(ff.P(omega, n - k), xi) for k in range(n + 1)),
                          Fraction(0))
                back_rhs = sum((comb(n, k) * s_total**k * st_eval_power(fam.S(omega, n - k), xi) for k in range(n + 1)),
                               Fraction(0))
                rep.check("Charlier in falling factorials and back",
                          lhs == rhs and st_eval_power(ff.P(omega, n), xi) == back_rhs,
                          lambda: {"omega": omega, "xi": xi, "n": n})
    return rep


# -- 8. one-dimensional reductions -----------------------------------------------------------


def suite_reductions(degree: int = 6, seed: int = 0) -> Report:
    rep = Report("reductions", {"degree": degree, "seed": seed})
    r = sampling.rng(seed)
    # Hermite: xi with <xi, xi>_w = 1
    for space, xi in ((SiteSpace(1), (1,)), (SiteSpace(2), (Fraction(3, 5), Fraction(4, 5))),
                      (SiteSpace(2, (Fraction(1, 4), 1)), (Fraction(6, 5), Fraction(4, 5)))):
        assert space.l2(xi, xi) == 1
        fam = sheffer.hermite(space, degree)
        d = fam.lifted
        for _ in range(2):
            omega = sampling.vector(r, space.m)
            t = pairing(omega, xi)
            for n in range(degree + 1):
                s_n = oracles.onedim_sheffer_poly(identity_series(degree), n, d.c, 1)
                rep.check("Hermite S^(n) along unit xi == s_n(<omega, xi>)",
                          st_eval_power(fam.S(omega, n), xi) == oracles.poly_at(s_n, t),
                          lambda: {"omega": omega, "xi": xi, "n": n})
    one = SiteSpace(1)
    ch = sheffer.charlier(one, 2)
    lb = lifted.laguerre_binomial(1, 2)
    for t in range(-3, 6):
        rep.check("Charlier S^(2)(t) == t^2 - 3t + 1", ch.S((t,), 2)[(1, 1)] == t * t - 3 * t + 1, {"t": t})
        rep.check("binomial Laguerre p_2(t) == t^2 - 2t", lb.P((t,), 2)[(1, 1)] == t * t - 2 * t, {"t": t})
    return rep


# -- 9. orthogonality ---------------------------------------------------------------------------


def orthogonality_checks(rep: Report, name: str, space: SiteSpace, r, max_n: int = 3, tau_n: int = 4) -> Report:
    """Inner products of rank-one S-polynomials and the tau/moment match on one site space."""
    m = space.m
    fam = sheffer.named(name, space, max(max_n, tau_n, 1))
    spec = sheffer.MeasureSpec(sheffer.MATCHING_MEASURE[fam.name], space)
    xi, psi = sampling.vector(r, m), sampling.vector(r, m)
    label = ("gamma inner product == n! sum over cycles" if name == "laguerre"
             else f"{name} inner product == delta n! (xi, psi)_w^n")
    for j in range(max_n + 1):
        for n in range(max_n + 1):
            p = PolyInBasis.single(S_BASIS, st_from_power(xi, j))
            q = PolyInBasis.single(S_BASIS, st_from_power(psi, n))
            val = sheffer.orth_inner(fam, spec, p, q)
            if j != n:
                expect = Fraction(0)
            elif name == "laguerre":
                expect = factorial(n) * sheffer.cycle_sum(space, xi, psi, n)
            else:
                expect = factorial(n) * space.l2(xi, psi) ** n
            rep.check(label, val == expect,
                      lambda: {"family": name, "weights": space.weights, "xi": xi, "psi": psi, "j": j, "n": n})
    for n in range(tau_n + 1):
        rep.check(f"{name} tau^(n) == moment tensor", fam.tau_tensor(n) == sheffer.moment_tensor(spec, n),
                  lambda: {"family": name, "weights": space.weights, "n": n})
    return rep


def suite_orthogonality(families=("hermite", "charlier", "laguerre"), max_m: int = 2, max_n: int = 3,
                        tau_n: int = 4, seed: int = 0, space: SiteSpace | None = None) -> Report:
    rep = Report("orthogonality", {"max_m": max_m, "max_n": max_n, "seed": seed})
    r = sampling.rng(seed)
    for name in families:
        spaces = [space] if space is not None else [SiteSpace(m, _random_weights(r, m)) for m in range(1, max_m + 1)]
        for sp in spaces:
            orthogonality_checks(rep, name, sp, r, max_n, tau_n)
    return rep


# -- 10. combinatorial evaluators ---------------------------------------------------------------


def suite_combinatorial(m: int = 3, partition_n: int = 6, permutation_n: int = 4, seed: int = 0) -> Report:
    rep = Report("combinatorial", {"m": m, "partition_n": partition_n, "permutation_n": permutation_n, "seed": seed})
    r = sampling.rng(seed)
    N = partition_n
    space = SiteSpace(m, _random_weights(r, m))
    for name in ("falling", "rising", "laguerre-binomial", "abel"):
        spec = lifted.named(name, m, N)
        omega, xi = sampling.vector(r, m), sampling.vector(r, m)
        for n in range(N + 1):
            gen = oracles.lifted_generating_coefficient(spec.a, omega, xi, n)
            rep.check("partition formula (set partitions) == generating function",
                      lifted.lifted_eval_partition(spec, omega, xi, n) == gen,
                      lambda: {"family": name, "omega": omega, "xi": xi, "n": n})
            rep.check("partition formula (block types) == generating function",
                      lifted.lifted_eval_partition(spec, omega, xi, n, "types") == gen,
                      lambda: {"family": name, "omega": omega, "xi": xi, "n": n})
            if name == "laguerre-binomial":
                rep.check("ordered-block formula == generating function",
                          lifted.ordered_block_sum(omega, xi, n) == gen, lambda: {"omega": omega, "xi": xi, "n": n})
    pairs = [("hermite", identity_series(N), half_square_series(N)),
             ("charlier", lifted.falling_series(N), expm1_series(N)),
             ("laguerre", lifted.laguerre_binomial_series(N), neg_log1m_series(N))]
    for i in range(2):
        pairs.append((f"random-{i}", sampling.series1d(r, N, const=0, linear=1), sampling.series1d(r, N, const=0)))
    for name, a, c in pairs:
        data = sheffer.LiftedData(a, c, -ps_compose(c, a), space)
        omega, xi = sampling.vector(r, m), sampling.vector(r, m)
        for n in range(N + 1):
            gen = oracles.lifted_generating_coefficient(a, omega, xi, n, c, space.weights)
            rep.check("marked-partition formula == generating function",
                      sheffer.marked_partition_eval(data, omega, xi, n) == gen,
                      lambda: {"family": name, "omega": omega, "xi": xi, "n": n})
            if name == "laguerre" and n <= permutation_n:
                rep.check("marked-permutation formula == generating function",
                          sheffer.marked_permutation_eval(space, omega, xi, n) == gen,
                          lambda: {"omega": omega, "xi": xi, "n": n})
    return rep


SUITES = {
    "appendix": suite_appendix,
    "binomial": suite_binomial,
    "basis": suite_basis,
    "operators": suite_operators,
    "falling": suite_falling,
    "restriction": suite_restriction,
    "sheffer": suite_sheffer,
    "reductions": suite_reductions,
    "orthogonality": suite_orthogonality,
    "combinatorial": suite_combinatorial,
}
