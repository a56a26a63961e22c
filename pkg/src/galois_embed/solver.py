"""Obstructions and constructive solutions of the embedding problems.

A record carries a certificate: a list of exact checks.  Each check names its
arguments as anchors ("@psi3", "@f_star", ...) that the verifier rebuilds from
the input quartic, the case data, t and the record parameters, so a record
cannot verify unless its identities hold for the values it claims.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .elliptic import Curve, family, is_cm_j, j_invariant, psi3
from .errors import (
    DegenerateParameter,
    GaloisEmbedError,
    InvalidInput,
    Obstructed,
    SearchBudgetExceeded,
    UnsupportedCase,
)
from .exactmath import (
    MPoly,
    UniPoly,
    factor_small,
    is_square,
    mresultant,
    same_square_class,
    tschirnhaus,
)
from .quadforms import (
    DEFAULT_HEIGHT_BUDGET,
    BinaryForm,
    ObstructionReport,
    conic_parametrize,
    conic_point,
    involution_C,
    rationals_by_height,
    symbol_report,
)
from .quartic import GaloisCase, chain_holds, classify, even_form, lemma_conditions, validate

X = UniPoly((0, 1))
C2_CURVE = (Fraction(-6), Fraction(-13, 4))
DEFAULT_SCAN = 2000  # parameter values tried before giving up on `count`


# --------------------------------------------------------------------------
# obstruction
# --------------------------------------------------------------------------

def obstruction(case, budget=None):
    label = case.label
    if label in ("C2", "S3"):
        note = "trivial obstruction" if label == "C2" else "split extension, trivial obstruction"
        return ObstructionReport(label, "trivial", note=note)
    if label == "C2xC2":
        d1, _ = case.data
        return symbol_report(label, d1, 3, budget, note="(delta1, 3)")
    if label == "D4":
        a, d = case.data
        if a == 0:
            return ObstructionReport(label, "trivial", note="a = 0")
        return symbol_report(label, 3 * (a * a + 12 * d * d), 2 * a, budget, note="(3(a^2+12d^2), 2a)")
    return ObstructionReport(label, "unsupported", note="S4 construction not implemented")


# --------------------------------------------------------------------------
# certificates
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    kind: str
    label: str
    args: dict
    values: dict = field(default_factory=dict, compare=False)


def _resolve(arg, env):
    if isinstance(arg, str) and arg.startswith("@"):
        return env[arg[1:]]
    return arg


def _shape(p):
    _, fac = factor_small(p)
    return sorted(q.degree for q, e in fac for _ in range(e))


def _run_check(kind, v):
    if kind == "PolynomialIdentity":
        return v["lhs"] == v["rhs"]
    if kind == "TschirnhausIdentity":
        return tschirnhaus(v["source"], v["transform"]) == v["target"].monic()
    if kind == "TschirnhausChain":
        return chain_holds(v["chain"]) and v["chain"][0][0] == v["start"].monic() and v["chain"][-1][0] == v["end"]
    if kind == "SquarefreeClassEqual":
        return same_square_class(v["value"], v["cls"])
    if kind == "FactorizationShape":
        return _shape(v["poly"]) == list(v["shape"])
    if kind == "LemmaConditions":
        if v["mode"] == "even":
            p = v["poly"]
            if p.degree != 4 or p[3] or p[1] or p.lc != 1:
                return False
            return lemma_conditions(p[2], p[0]) and classify(validate(v["group_source"])).label == "D4"
        src, tgt = v["source"], v["target"]
        return src.degree == tgt.degree == 3 and _shape(src) == [3] and _shape(tgt) == [3]
    raise ValueError(f"unknown check kind {kind}")


def make_check(kind, label, env, **args):
    values = {k: _resolve(a, env) for k, a in args.items()}
    return Check(kind, label, args, values)


def check_passes(check, env):
    try:
        resolved = {k: _resolve(a, env) for k, a in check.args.items()}
    except KeyError:
        return False
    for k, val in check.values.items():
        if k in resolved and resolved[k] != val:
            return False
    return bool(_run_check(check.kind, resolved))


REQUIRED_KINDS = {
    "C2": {"FactorizationShape", "SquarefreeClassEqual"},
    "C2xC2": {"FactorizationShape", "SquarefreeClassEqual"},
    "S3": {"TschirnhausIdentity", "PolynomialIdentity", "LemmaConditions", "FactorizationShape"},
    "D4": {"TschirnhausIdentity", "PolynomialIdentity", "LemmaConditions"},
}


@dataclass
class SolutionRecord:
    case: GaloisCase
    t: Fraction | None
    curve: Curve
    j: Fraction
    non_cm: bool
    certificate: list
    params: dict = field(default_factory=dict)
    index: int = 0

    @property
    def twist_note(self):
        return ("up to a quadratic twist; proper solutions may need a twist d with "
                "sqrt(d(x1^3+Ax1+B)) outside Q(x(E[3])), not verified here")


# --------------------------------------------------------------------------
# anchor environments
# --------------------------------------------------------------------------

@lru_cache(maxsize=1)
def s3_sign():
    """epsilon with B(t0) = epsilon * b_* n^3, derived from Res_t(A(t) - x, B(t) - y).

    On the printed root n the quadratic a_*^2 n^2 + 9 b_* n - 3 a_* = 0 gives
    x^2 - 3x = -9 b_* n^3 for x = a_* n^2; so if Res = c(x^2 - 3x) + k y then
    y = 9 c b_* n^3 / k.
    """
    t, x, y = MPoly.variables("t", "x", "y")
    P = mresultant(-3 * (t + 1) - x, (t + 1) * (t + 2) - y, "t")
    c = P.terms.get((0, 2, 0), Fraction(0))
    k = P.terms.get((0, 0, 1), Fraction(0))
    rest = P - c * (x * x - 3 * x) - k * y
    if c == 0 or k == 0 or rest:
        raise AssertionError(f"unexpected resultant {P}")
    eps = 9 * c / k
    if eps not in (1, -1):
        raise AssertionError(f"resultant gives epsilon = {eps}")
    return int(eps)


def s3_star(a, b, r):
    """(a_*(r), b_*(r)); r may be a rational or a UniPoly in r."""
    a, b = Fraction(a), Fraction(b)
    if not isinstance(r, UniPoly):
        r = Fraction(r)
    a_s = (3 * a * r * r - a * a + 9 * b * r) / 3
    b_s = (-18 * a * a * r * r + 27 * b * r**3 - 2 * a**3 - 27 * a * b * r - 27 * b * b) / 27
    return a_s, b_s


def d4_forms(a, d):
    """(a_*, d_*) as BinaryForms in (n, m): A n^2 + B m^2 + C n m."""
    a, d = Fraction(a), Fraction(d)
    a_star = BinaryForm(a**3 + 9 * a * d * d, a, -(2 * a * a + 12 * d * d))
    d_star = BinaryForm(3 * d**3, -d, a * d)
    return a_star, d_star


def _add_forms(P, Q, k=1):
    return BinaryForm(P.A + k * Q.A, P.B + k * Q.B, P.C + k * Q.C)


def d4_curve_data(t):
    """A(t), D(t) and the transform y(x) taking psi3(E_{t,D4}) to 9(x^4 + A x^2 - 3D^2)."""
    t = Fraction(t)
    A = -6 * (t - 12) * (t + 24)
    D = 3 * t * (t - 12)
    T = UniPoly((-t * (t - 12) / 8, Fraction(-1, 12), 1 / (24 * (t * t + 12 * t + 144))))
    return A, D, T


def _base_env(t, curve):
    env = {"psi3": psi3(curve)}
    if t is not None:
        env["t"] = t
    return env


def build_env(case, t, curve, params, f):
    """Anchors recomputed from scratch: used both to build and to verify."""
    env = _base_env(t, curve)
    env["f"] = f.monic()
    label = case.label
    if label == "C2":
        quad = [p for p, _ in factor_small(env["psi3"])[1] if p.degree == 2]
        env["quad_disc"] = (quad[0][1] ** 2 - 4 * quad[0][0]) if quad else Fraction(0)
        env["minus3"] = Fraction(-3)
    elif label == "C2xC2":
        env["s_t"] = t * t - 6 * t - 3
        env["delta1"] = Fraction(case.data[0])
    elif label == "S3":
        a, b = case.data
        r, n, kappa = params["r"], params["n"], params["kappa"]
        a_s, b_s = s3_star(a, b, r)
        eps = s3_sign()
        env["f3"] = UniPoly((b, a, 0, 1))
        env["T_r"] = UniPoly((Fraction(2, 3) * a * n, r * n, n))
        env["f_star"] = UniPoly((b_s * n**3, a_s * n * n, 0, 1))
        env["A_t"] = -3 * (t + 1)
        env["B_t"] = (t + 1) * (t + 2)
        env["a_star_n2"] = a_s * n * n
        env["eps_b_star_n3"] = eps * b_s * n**3
        cubic = [p for p, _ in factor_small(env["psi3"])[1] if p.degree == 3]
        env["psi3_cubic"] = cubic[0] if cubic else UniPoly((1,))
        env["T_lin"] = UniPoly((kappa * (t + 1) / 4, Fraction(kappa, 4)))
    elif label == "D4":
        a, d = case.data
        n, m = params["n"], params["m"]
        a_form, d_form = d4_forms(a, d)
        a_s, d_s = a_form(n, m), d_form(n, m)
        A, D, T = d4_curve_data(t)
        env["even"] = UniPoly((-3 * d * d, 0, a, 0, 1))
        env["T_nm"] = UniPoly((0, m, 0, n))
        env["f_star"] = UniPoly((-3 * d_s * d_s, 0, a_s, 0, 1))
        env["A_t"] = A
        env["a_star"] = a_s
        env["D_t"] = D
        env["d_star"] = d_s
        env["psi_star"] = UniPoly((-3 * D * D, 0, A, 0, 1))
        env["T_t"] = T
    return env


def _certificate(case, env, chain=()):
    label = case.label
    if label == "C2":
        return [
            make_check("FactorizationShape", "psi3 = linear * linear * quadratic", env,
                       poly="@psi3", shape=(1, 1, 2)),
            make_check("SquarefreeClassEqual", "quadratic factor has discriminant -3 mod squares", env,
                       value="@quad_disc", cls="@minus3"),
        ]
    if label == "C2xC2":
        return [
            make_check("SquarefreeClassEqual", "t^2 - 6t - 3 ~ delta1", env, value="@s_t", cls="@delta1"),
            make_check("FactorizationShape", "psi3 = quadratic * quadratic", env, poly="@psi3", shape=(2, 2)),
        ]
    if label == "S3":
        return [
            make_check("TschirnhausIdentity", "f_* is a Tschirnhaus transform of the cubic", env,
                       source="@f3", transform="@T_r", target="@f_star"),
            make_check("LemmaConditions", "cubic and its transform are irreducible", env,
                       mode="cubic", source="@f3", target="@f_star"),
            make_check("PolynomialIdentity", "A(t) = a_* n^2", env, lhs="@A_t", rhs="@a_star_n2"),
            make_check("PolynomialIdentity", "B(t) = eps b_* n^3", env, lhs="@B_t", rhs="@eps_b_star_n3"),
            make_check("FactorizationShape", "psi3 = linear * cubic", env, poly="@psi3", shape=(1, 3)),
            make_check("TschirnhausIdentity", "linear change of the psi3 cubic gives f_*", env,
                       source="@psi3_cubic", transform="@T_lin", target="@f_star"),
        ]
    if label == "D4":
        checks = []
        if chain:
            checks.append(Check("TschirnhausChain", "f transforms to its even form",
                                {"chain": list(chain), "start": "@f", "end": "@even"},
                                {"start": env["f"], "end": env["even"]}))
        checks += [
            make_check("TschirnhausIdentity", "beta = n alpha^3 + m alpha takes the even form to f_*", env,
                       source="@even", transform="@T_nm", target="@f_star"),
            make_check("PolynomialIdentity", "A(t) = a_*(n, m)", env, lhs="@A_t", rhs="@a_star"),
            make_check("PolynomialIdentity", "D(t) = d_*(n, m)", env, lhs="@D_t", rhs="@d_star"),
            make_check("LemmaConditions", "x^4 + A x^2 - 3D^2 satisfies the non-square conditions", env,
                       mode="even", poly="@psi_star", group_source="@psi3"),
            make_check("TschirnhausIdentity", "psi3 transforms to x^4 + A x^2 - 3D^2", env,
                       source="@psi3", transform="@T_t", target="@psi_star"),
        ]
        return checks
    raise UnsupportedCase(label)


def _emit(case, f, t, curve, params, index, chain=()):
    env = build_env(case, t, curve, params, f)
    cert = _certificate(case, env, chain)
    j = j_invariant(curve)
    rec = SolutionRecord(case, t, curve, j, not is_cm_j(j), cert, dict(params), index)
    if not verify_certificate(rec, f):
        raise AssertionError(f"record at t = {t} failed its own certificate")
    return rec


# --------------------------------------------------------------------------
# verification
# --------------------------------------------------------------------------

def verify_certificate(record, f):
    """Replay every check from freshly computed anchors; True iff all pass."""
    try:
        v = validate(f)
        case = classify(v)
        if case != record.case:
            return False
        label = case.label
        if label not in REQUIRED_KINDS:
            return False
        if record.t is None:
            if label != "C2" or (record.curve.A, record.curve.B) != C2_CURVE:
                return False
        elif record.curve != family(label, record.t):
            return False
        j = j_invariant(record.curve)
        if record.j != j or record.non_cm != (not is_cm_j(j)):
            return False
        env = build_env(case, record.t, record.curve, record.params, v.f)
        kinds = {c.kind for c in record.certificate}
        if not REQUIRED_KINDS[label] <= kinds:
            return False
        if label == "D4" and even_form(v.f) is None and "TschirnhausChain" not in kinds:
            return False
        return all(check_passes(c, env) for c in record.certificate)
    except (GaloisEmbedError, ArithmeticError, KeyError, ValueError):
        return False


# --------------------------------------------------------------------------
# case solvers
# --------------------------------------------------------------------------

def _nonzero_rationals():
    it = rationals_by_height()
    next(it)
    return it


def _collect(candidates, count, scan):
    """Take records from a generator of (index, builder) pairs, skipping degenerate, CM and repeated j."""
    out, seen = [], set()
    for i, build in enumerate(candidates):
        if len(out) >= count or i >= scan:
            break
        try:
            rec = build()
        except DegenerateParameter:
            continue
        if rec is None or not rec.non_cm or rec.j in seen:
            continue
        seen.add(rec.j)
        out.append(rec)
    return out


def solve_C2(f, count=1, scan=DEFAULT_SCAN):
    v = validate(f)
    case = classify(v)
    if case.label != "C2":
        raise InvalidInput("input is not in the C2 case")

    def candidates():
        yield lambda: _emit(case, v.f, None, Curve(*C2_CURVE), {"explicit": True}, 0)
        for k, t in enumerate(_nonzero_rationals(), start=1):
            yield lambda t=t, k=k: _emit(case, v.f, t, family("C2", t), {}, k)

    return _collect(candidates(), count, scan)


def c2xc2_parametrization(delta1, height_budget=DEFAULT_HEIGHT_BUDGET):
    """Rational map r -> (u, s) on u^2 - delta1 s^2 = 12, with t = u + 3."""
    Q = BinaryForm(1, -Fraction(delta1))
    pt = conic_point(Q, 12, height_budget)
    if pt is None:
        return None
    return conic_parametrize(Q, 12, pt)


def solve_C2xC2(f, count=1, ts=None, height_budget=DEFAULT_HEIGHT_BUDGET, scan=DEFAULT_SCAN):
    v = validate(f)
    case = classify(v)
    if case.label != "C2xC2":
        raise InvalidInput("input is not in the C2xC2 case")
    report = obstruction(case)
    if report.global_symbol == -1:
        raise Obstructed(report)

    def candidates():
        if ts is not None:
            for k, t in enumerate(ts):
                yield lambda t=Fraction(t), k=k: _emit(case, v.f, t, family("C2xC2", t), {}, k)
            return
        param = c2xc2_parametrization(case.data[0], height_budget)
        if param is None:
            raise SearchBudgetExceeded("conic u^2 - delta1 s^2 = 12 has no point")
        for k, r in enumerate(_r_sequence()):
            def build(r=r, k=k):
                p = param(r)
                if p is None:
                    raise DegenerateParameter("line meets the conic only at the base point")
                t = p[0] + 3
                return _emit(case, v.f, t, family("C2xC2", t), {"r": r}, k)
            yield build

    return _collect(candidates(), count, scan)


def _r_sequence():
    """None (the base point, r = infinity) first, then 0, 1, -1, 2, -2, 1/2, ..."""
    yield None
    yield from rationals_by_height()


def _poly_sqrt(R):
    """S with S^2 = R and positive leading coefficient, or None."""
    if R.is_zero() or R.degree % 2:
        return None
    lead = is_square(R.lc)
    if lead is None:
        return None
    k = R.degree // 2
    S = UniPoly([0] * k + [lead])
    for i in range(k - 1, -1, -1):
        S = S + UniPoly([0] * i + [(R - S * S)[k + i] / (2 * lead)])
    return S if S * S == R else None


@lru_cache(maxsize=64)
def s3_branch(a, b):
    """Polynomial square root of 81 b_*(r)^2 + 12 a_*(r)^3 in r, if there is one.

    Evaluating it (instead of taking |sqrt|) keeps the + sign on one
    algebraic branch, so t(r) is a single rational function of r.
    """
    a_s, b_s = s3_star(a, b, UniPoly((0, 1)))
    return _poly_sqrt(81 * b_s * b_s + 12 * a_s**3)


def s3_record(case, f, r, index=0):
    a, b = case.data
    r = Fraction(r)
    a_s, b_s = s3_star(a, b, r)
    if a_s == 0:
        raise DegenerateParameter(f"a_*({r}) = 0")
    S = s3_branch(a, b)
    w = S(r) if S is not None else is_square(81 * b_s * b_s + 12 * a_s**3)
    if w is None:
        raise AssertionError("radicand 81 b_*^2 + 12 a_*^3 is not a square")
    for root in ((-9 * b_s + w) / (2 * a_s * a_s), (-9 * b_s - w) / (2 * a_s * a_s)):
        n = root
        t = -a_s * n * n / 3 - 1
        if n == 0 or t in (0, -1):
            continue
        try:
            curve = family("S3", t)
        except DegenerateParameter:
            continue
        # sign of the linear change x -> kappa (x + t + 1) / 4 on the psi3 cubic
        for kappa in (1, -1):
            params = {"r": r, "n": n, "kappa": kappa}
            env = build_env(case, t, curve, params, f)
            if tschirnhaus(env["psi3_cubic"], env["T_lin"]) == env["f_star"]:
                return _emit(case, f, t, curve, params, index)
        raise AssertionError("no linear change matches the psi3 cubic")
    raise DegenerateParameter(f"r = {r} gives a degenerate t")


def solve_S3(f, count=1, rs=None, scan=DEFAULT_SCAN):
    v = validate(f)
    case = classify(v)
    if case.label != "S3":
        raise InvalidInput("input is not in the S3 case")
    seq = rs if rs is not None else rationals_by_height()

    def candidates():
        for k, r in enumerate(seq):
            yield lambda r=r, k=k: s3_record(case, v.f, r, k)

    return _collect(candidates(), count, scan)


def d4_conic(a, d):
    """Q' = a_* + 2 d_*, and Q1728 = 1728 (a_* + 6 d_*) whose value-1 conic is searched."""
    a_form, d_form = d4_forms(a, d)
    Qp = _add_forms(a_form, d_form, 2)
    Q6 = _add_forms(a_form, d_form, 6)
    Q1728 = Q6.scaled(1728)
    return Qp, Q1728


def d4_t_from_point(a, d, n, m):
    a_form, d_form = d4_forms(a, d)
    return (1728 - a_form(n, m) - 2 * d_form(n, m)) / 144


def d4_record(case, f, p, Qp, Q1728, index=0, chain=(), r=None):
    a, d = case.data
    # p lies on Q1728 = 1, i.e. on Q = -1 for Q = -Q1728
    n, m = involution_C(Qp, -Q1728, p)
    t = d4_t_from_point(a, d, n, m)
    curve = family("D4", t)
    params = {"n": n, "m": m, "conic_point": tuple(p)}
    if r is not None:
        params["r"] = r
    return _emit(case, f, t, curve, params, index, chain)


def solve_D4(f, count=1, base=None, pencil=None, rs=None,
             height_budget=DEFAULT_HEIGHT_BUDGET, scan=DEFAULT_SCAN):
    v = validate(f)
    case = classify(v)
    if case.label != "D4":
        raise InvalidInput("input is not in the D4 case")
    report = obstruction(case)
    if report.global_symbol == -1:
        raise Obstructed(report)
    a, d = case.data
    Qp, Q1728 = d4_conic(a, d)
    if base is None:
        base = conic_point(Q1728, 1, height_budget)
        if base is None:
            # cannot happen when the symbol is +1
            raise AssertionError("unobstructed D4 conic without a point")
    w0, w1 = pencil if pencil is not None else (None, None)
    param = conic_parametrize(Q1728, 1, base, w0, w1)
    seq = rs if rs is not None else _r_sequence()
    chain = case.even_chain

    def candidates():
        for k, r in enumerate(seq):
            def build(r=r, k=k):
                p = param(r)
                if p is None:
                    raise DegenerateParameter("line meets the conic only at the base point")
                return d4_record(case, v.f, p, Qp, Q1728, k, chain, r)
            yield build

    return _collect(candidates(), count, scan)


def solve(f, count=1, height_budget=DEFAULT_HEIGHT_BUDGET, scan=DEFAULT_SCAN):
    """Classify, compute the obstruction and, if it vanishes, build `count` records.

    Returns (case, report, records); raises Obstructed or UnsupportedCase.
    """
    v = validate(f)
    case = classify(v)
    report = obstruction(case)
    if report.global_symbol == "unsupported":
        raise UnsupportedCase("S4: construction out of scope")
    if report.global_symbol == -1:
        raise Obstructed(report)
    if case.label == "C2":
        recs = solve_C2(v, count, scan=scan)
    elif case.label == "C2xC2":
        recs = solve_C2xC2(v, count, height_budget=height_budget, scan=scan)
    elif case.label == "S3":
        recs = solve_S3(v, count, scan=scan)
    else:
        recs = solve_D4(v, count, height_budget=height_budget, scan=scan)
    return case, report, recs


# --------------------------------------------------------------------------
# JSON
# --------------------------------------------------------------------------

def encode_value(v):
    """Tagged JSON form of the exact values that appear in certificates."""
    if isinstance(v, UniPoly):
        return {"poly": [str(c) for c in v.descending()], "text": str(v)}
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction)):
        return {"rational": str(Fraction(v))}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    raise TypeError(f"cannot encode {type(v).__name__}")


def decode_value(v):
    if isinstance(v, dict):
        if "poly" in v:
            return UniPoly.from_descending([Fraction(c) for c in v["poly"]])
        if "rational" in v:
            return Fraction(v["rational"])
        raise ValueError(f"unknown tagged value {v}")
    if isinstance(v, list):
        return tuple(decode_value(x) for x in v)
    return v


def _decode_arg(name, v):
    out = decode_value(v)
    if name == "chain":
        return [tuple(step) for step in out]
    return out


def case_to_json(case):
    return {"label": case.label, "payload": case.payload_json(), "field": case.field_description()}


def record_to_json(rec):
    return {
        "index": rec.index,
        "case": case_to_json(rec.case),
        "t": None if rec.t is None else str(rec.t),
        "curve": {"A": str(rec.curve.A), "B": str(rec.curve.B)},
        "j": str(rec.j),
        "non_cm": rec.non_cm,
        "params": {k: encode_value(v) for k, v in rec.params.items()},
        "certificate": [
            {
                "kind": c.kind,
                "label": c.label,
                "args": {k: encode_value(a) for k, a in c.args.items()},
                "values": {k: encode_value(a) for k, a in c.values.items()},
            }
            for c in rec.certificate
        ],
        "twist_note": rec.twist_note,
    }


def record_from_json(data, f):
    """Rebuild a record; the GaloisCase is recomputed from f and must match the stored label."""
    case = classify(validate(f))
    if case.label != data["case"]["label"]:
        raise InvalidInput("record case does not match the input polynomial")
    cert = [
        Check(
            c["kind"],
            c["label"],
            {k: _decode_arg(k, a) for k, a in c["args"].items()},
            {k: _decode_arg(k, a) for k, a in c["values"].items()},
        )
        for c in data["certificate"]
    ]
    return SolutionRecord(
        case=case,
        t=None if data["t"] is None else Fraction(data["t"]),
        curve=Curve(Fraction(data["curve"]["A"]), Fraction(data["curve"]["B"])),
        j=Fraction(data["j"]),
        non_cm=bool(data["non_cm"]),
        certificate=cert,
        params={k: decode_value(v) for k, v in data["params"].items()},
        index=int(data.get("index", 0)),
    )
