"""One-parameter unitary groups over the principal units of Q_p.

A unitary operator is U = I + V with |V| < 1 and V spectrally
certified.  A certified generator A with spectrum in Z_p and |A| <= 1
produces the group

    U(s) = (1+z)^A = sum_i (1+z)^(lambda_i) E_i,   s = 1 + z,

which satisfies U(s1 s2) = U(s1) U(s2) and the Lipschitz bound
|U(s1) - U(s2)| <= |s1 - s2|.  The converse direction recovers the
generator from the single value U(1+p):

    A = log(I + V) / log(1+p),   V = U(1+p) - I,

implemented on V's certificate (applying lambda -> log(1+lambda)/log(1+p)
to the eigenvalues, which provably loses exactly one digit to the final
division) with the operator log series kept as an independent
cross-check path.

Certification of V with |V| < 1: V's reduction is the zero matrix, so
the distinct-residue criterion cannot apply directly.  V is factored as
p^w V' with w the minimal entry valuation; V' has a unit entry, is
certified the usual way, and the eigenvalues are scaled back while the
projectors are shared.  V = 0 gets the trivial certificate (eigenvalue
0, projector I).  Anything else is refused.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PadicInt, Valuation
from .errors import (
    CertificationFailed,
    InsufficientPrecision,
    NormTooLarge,
    NotPrincipal,
    NotPrincipalSpectrum,
    PrimeMismatch,
    Refusal,
    SpectrumNotInPZp,
)
from .functions import (
    SeriesBudget,
    _vp_factorial,
    _ceil_log,
    is_principal_unit,
    pexp,
    principal_power,
    truncation_length,
    zeta_of,
    _plog_terms,
)
from .linalg import PadicMatrix
from .spectral import StrongNormalCertificate, certify_strongly_normal

__all__ = [
    "UnitaryOperator",
    "OneParamGroup",
    "GroupCheck",
    "make_unitary",
    "stone_recover",
    "generator_log_series",
    "additive_reparam",
]


class UnitaryOperator:
    """U = I + V together with the spectral certificate of V.

    The spectrum of U is the pushforward of V's under phi(x) = 1 + x and
    consists of principal units.
    """

    __slots__ = ("matrix", "v", "cert")

    def __init__(self, matrix: PadicMatrix, v: PadicMatrix, cert: StrongNormalCertificate):
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "cert", cert)

    def __setattr__(self, name, value):
        raise AttributeError("UnitaryOperator is immutable")

    def unit_spectrum(self) -> list[PadicInt]:
        """sigma(U) = {1 + lambda : lambda in sigma(V)}."""
        return [lam + 1 for lam in self.cert.eigenvalues]

    def to_dict(self) -> dict:
        return {"matrix": self.matrix.to_dict(), "certificate": self.cert.to_dict()}

    def __repr__(self):
        spectrum = [u.residue for u in self.unit_spectrum()]
        return (
            f"UnitaryOperator(n={self.matrix.n}, p={self.matrix.p}, "
            f"spectrum={spectrum})"
        )


def _small_norm_certificate(v: PadicMatrix, err=NormTooLarge) -> StrongNormalCertificate:
    """Certify a matrix with |V| < 1 through the p^w V' factorization."""
    if v.is_zero():
        return StrongNormalCertificate(
            v,
            [PadicInt.zero(v.p, v.prec)],
            [PadicMatrix.identity(v.n, v.p, v.prec)],
        )
    w = v.op_norm().value
    if w < 1:
        raise err(f"|V| = 1: entry {_first_unit_entry(v)} is a unit")
    if v.prec - w < 1:
        raise InsufficientPrecision(
            f"scaling out p^{w} leaves no digits at precision {v.prec}"
        )
    v1 = v.divide_exact_scalar(PadicInt(v.p**w, v.p, v.prec))
    try:
        cert1 = certify_strongly_normal(v1)
    except Refusal as e:
        raise CertificationFailed(
            f"scaled part V/p^{w} is not certifiable: {e}"
        ) from e
    scale = PadicInt(v.p**w, v.p, v1.prec)
    eigenvalues = [scale * lam for lam in cert1.eigenvalues]
    cert = StrongNormalCertificate(v, eigenvalues, cert1.projectors)
    cert.verify()
    return cert


def _first_unit_entry(v: PadicMatrix):
    for i in range(v.n):
        for j in range(v.n):
            if v.entry(i, j).is_unit():
                return (i, j)
    return None


def make_unitary(v: PadicMatrix) -> UnitaryOperator:
    """Wrap I + V as a unitary operator; requires |V| < 1 and V certifiable."""
    cert = _small_norm_certificate(v, err=NormTooLarge)
    u = PadicMatrix.identity(v.n, v.p, v.prec) + v
    return UnitaryOperator(u, v, cert)


@dataclass(frozen=True)
class GroupCheck:
    """Outcome of a quantitative valuation check.

    ``observed`` is the valuation actually measured, ``required`` the
    valuation the claim demands; the check passes when observed covers
    required.  Truthy on pass, and ``margin`` reports the slack.
    """

    check: str
    observed: Valuation
    required: int

    @property
    def ok(self) -> bool:
        return self.observed.value >= self.required

    @property
    def margin(self) -> int:
        return self.observed.value - self.required

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "observed_valuation": self.observed.value,
            "observed_exact": self.observed.is_finite,
            "required_valuation": self.required,
            "pass": self.ok,
        }


class OneParamGroup:
    """A certified generator A, evaluable at any principal unit s.

    All eigenvalues of A lie in Z_p and |A| <= 1, so s -> s^A lands in
    the unitary operators for every principal s.
    """

    __slots__ = ("cert", "budget")

    def __init__(self, cert: StrongNormalCertificate, budget: SeriesBudget):
        object.__setattr__(self, "cert", cert)
        object.__setattr__(self, "budget", budget)

    def __setattr__(self, name, value):
        raise AttributeError("OneParamGroup is immutable")

    @property
    def generator(self) -> PadicMatrix:
        return self.cert.matrix

    @property
    def p(self) -> int:
        return self.cert.p

    def _coerce_unit(self, s) -> PadicInt:
        if isinstance(s, int):
            s = PadicInt(s, self.p, self.budget.target)
        if s.p != self.p:
            raise PrimeMismatch(f"s has p={s.p}, group has p={self.p}")
        if not is_principal_unit(s):
            raise NotPrincipal(f"s = {s!r} is not congruent to 1 mod p")
        return s

    # -- the group -------------------------------------------------------

    def evaluate(self, s) -> UnitaryOperator:
        """U(s) = s^A by functional calculus on the generator.

        Each eigenvalue contributes (1+z)^(lambda_i) through its Mahler
        series; the projectors are untouched.  U(1) = I exactly.
        """
        s = self._coerce_unit(s)
        z = s - 1
        powers = [
            principal_power(z, lam, self.budget) for lam in self.cert.eigenvalues
        ]
        u = None
        for val, e in zip(powers, self.cert.projectors):
            term = val * e
            u = term if u is None else u + term
        v = u - PadicMatrix.identity(u.n, self.p, u.prec)
        cert = StrongNormalCertificate(
            v, [w - 1 for w in powers], self.cert.projectors
        )
        return UnitaryOperator(u, v, cert)

    def evaluate_mahler(self, s) -> PadicMatrix:
        """U(s) by the operator Mahler series sum_n z^n P_n(A).

        Independent of the spectral route above: the binomial matrices
        P_n(A) are built by the recurrence P_n = P_{n-1} (A - (n-1)I)/n
        at extended working precision.  Exists as the dual evaluation
        path; the two must agree at target precision.
        """
        s = self._coerce_unit(s)
        z = s - 1
        p = self.p
        a = self.generator
        out_prec = min(self.budget.target, s.prec, a.prec)
        if z.is_zero():
            return PadicMatrix.identity(a.n, p, out_prec)
        v_z = z.valuation().value
        m = truncation_length(v_z, self.budget)
        w0 = self.budget.working + _vp_factorial(m, p)
        a_w = a.lift_to(w0) if a.prec < w0 else a.truncate_to(w0)
        z_w = z.lift_to(w0) if z.prec < w0 else z.truncate_to(w0)
        ident = PadicMatrix.identity(a.n, p, w0)
        acc = ident
        coeff = ident
        zpow = PadicInt.one(p, w0)
        for n in range(1, m + 1):
            coeff = (coeff @ (a_w - (n - 1) * ident)).divide_exact_scalar(n)
            zpow = zpow * z_w
            acc = acc + zpow * coeff
        return acc.truncate_to(min(out_prec, acc.prec))

    def verify_group_law(self, s1, s2) -> GroupCheck:
        """Check U(s1 s2) = U(s1) U(s2) at target-minus-guard digits."""
        s1, s2 = self._coerce_unit(s1), self._coerce_unit(s2)
        lhs = self.evaluate(s1 * s2).matrix
        rhs = self.evaluate(s1).matrix @ self.evaluate(s2).matrix
        required = max(
            1, min(self.budget.target - self.budget.guard, lhs.prec, rhs.prec)
        )
        return GroupCheck("group-law", (lhs - rhs).op_norm(), required)

    def lipschitz_check(self, s1, s2) -> GroupCheck:
        """Check the modulus-of-continuity bound |U(s1)-U(s2)| <= |s1-s2|."""
        s1, s2 = self._coerce_unit(s1), self._coerce_unit(s2)
        diff = self.evaluate(s1).matrix - self.evaluate(s2).matrix
        required = min((s1 - s2).valuation().value, diff.prec)
        return GroupCheck("lipschitz", diff.op_norm(), required)

    def digit_limit_approx(self, s, n: int) -> PadicMatrix:
        """U(1+p) raised to the first n+1 base-p digits of zeta(s).

        Writing s = (1+p)^zeta and cutting zeta after its p^n digit gives
        an integer exponent; the result converges to evaluate(s) with
        error valuation at least digit_truncation_error(n, p).
        """
        if n < 0:
            raise ValueError("n must be >= 0")
        s = self._coerce_unit(s)
        zeta = zeta_of(s, self.budget)
        digits = zeta.digits()
        top = min(n, len(digits) - 1)
        exponent = sum(d * self.p**j for j, d in enumerate(digits[: top + 1]))
        base = self.evaluate(1 + self.p).matrix
        return base**exponent

    def additive_evaluate(self, z) -> UnitaryOperator:
        """W(z) = e^(pzA) via the reparametrization s = e^(pz), z in Z_p.

        Additivity W(z1 + z2) = W(z1) W(z2) follows from the group law.
        """
        if isinstance(z, int):
            z = PadicInt(z, self.p, self.budget.target)
        if z.p != self.p:
            raise PrimeMismatch(f"z has p={z.p}, group has p={self.p}")
        s = additive_reparam(z, self.budget)
        return self.evaluate(s)

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "certificate": self.cert.to_dict(),
            "budget": self.budget.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "OneParamGroup":
        return cls(
            StrongNormalCertificate.from_dict(d["certificate"]),
            SeriesBudget.from_dict(d["budget"]),
        )

    def __repr__(self):
        return f"OneParamGroup(generator={self.generator!r}, budget={self.budget})"


def additive_reparam(z: PadicInt, budget: SeriesBudget) -> PadicInt:
    """s = e^(pz): the principal unit entered by the additive parameter z."""
    pz = PadicInt(z.p, z.p, z.prec) * z
    return pexp(pz, budget)


def stone_recover(u1p: PadicMatrix, budget: SeriesBudget) -> OneParamGroup:
    """Recover the generator A from the single group value U(1+p).

    Requires U(1+p) = I + V with the spectrum of V in pZ_p (checked on
    the lifted eigenvalues, not assumed).  The generator is

        A = log(I + V) / log(1+p) = sum_i log(1+lambda_i)/log(1+p) E_i,

    computed on V's certificate; the division by log(1+p), a valuation-1
    scalar, costs exactly one digit.  Then evaluate(A, 1+p) reproduces
    U(1+p), since (1+p)^(log(1+lam)/log(1+p)) = 1 + lam.
    """
    n = u1p.n
    v = u1p - PadicMatrix.identity(n, u1p.p, u1p.prec)
    if not v.is_zero() and v.op_norm().value < 1:
        raise NotPrincipalSpectrum(
            "U(1+p) - I has norm 1, so the spectrum of U(1+p) is not "
            "principal and no generator in the supported class exists"
        )
    cert_v = _small_norm_certificate(v, err=NotPrincipalSpectrum)
    for lam in cert_v.eigenvalues:
        val = lam.valuation()
        if val.is_finite and val.value < 1:
            raise SpectrumNotInPZp(
                f"eigenvalue {lam!r} of U(1+p) - I is a unit"
            )
    a_eigen = []
    for lam in cert_v.eigenvalues:
        if lam.is_zero():
            a_eigen.append(PadicInt.zero(u1p.p, lam.prec))
        else:
            a_eigen.append(zeta_of(lam + 1, budget))
    a = None
    for ae, e in zip(a_eigen, cert_v.projectors):
        term = ae * e
        a = term if a is None else a + term
    cert_a = StrongNormalCertificate(a, a_eigen, cert_v.projectors)
    cert_a.verify()
    return OneParamGroup(cert_a, budget)


def generator_log_series(u1p: PadicMatrix, budget: SeriesBudget) -> PadicMatrix:
    """The generator by the operator log series: the cross-check path.

    Sums (1/log(1+p)) sum_k (-1)^(k-1) V^k / k directly in matrices,
    sharing nothing with the eigenvalue route in stone_recover.
    """
    p = u1p.p
    n = u1p.n
    v = u1p - PadicMatrix.identity(n, p, u1p.prec)
    if v.is_zero():
        return PadicMatrix.zeros(n, p, min(budget.target, max(u1p.prec - 1, 1)))
    vv = v.op_norm().value
    if vv < 1:
        raise NotPrincipalSpectrum("U(1+p) - I has norm 1")
    k = 1
    while k * vv - _ceil_log(p, k + 1) + 1 < budget.working:
        k += 1
    trunc = k
    w0 = budget.working + _ceil_log(p, trunc + 1)
    v_w = v.lift_to(w0) if v.prec < w0 else v.truncate_to(w0)
    acc = PadicMatrix.zeros(n, p, w0)
    vpow = PadicMatrix.identity(n, p, w0)
    for j in range(1, trunc + 1):
        vpow = vpow @ v_w
        term = vpow.divide_exact_scalar(j)
        acc = acc + term if j % 2 == 1 else acc - term
    log_unit = _plog_terms(PadicInt(p, p, w0), budget)
    a = acc.divide_exact_scalar(log_unit)
    return a.truncate_to(min(budget.target, max(u1p.prec - 1, 1), a.prec))
