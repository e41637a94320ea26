"""Spectral certificates: eigenvalues, idempotents, functional calculus.

A matrix A over Z_p whose reduction mod p has n distinct eigenvalues in
F_p decomposes as A = sum_i lambda_i E_i where the lambda_i are the
Hensel lifts of the residue eigenvalues and the E_i are the Lagrange
idempotents

    E_i = prod_{j != i} (A - lambda_j I) / (lambda_i - lambda_j).

Every divisor lambda_i - lambda_j is a unit (the residues are distinct),
so the construction costs no precision.  The certificate carries the
eigenvalues and projectors and backs the projection-valued measure
E(S) = sum_{i in S} E_i and the functional calculus
phi(A) = sum_i phi(lambda_i) E_i with |phi(A)| <= max |phi(lambda_i)|.

Reductions that are scalar, fail to split over F_p, or have repeated
residue eigenvalues are refused with a specific exception: the repeated
case would need an invariant-subspace lifting scheme that this package
deliberately does not guess at.
"""

from __future__ import annotations

from .core import PadicInt, Valuation
from .errors import (
    CertificationFailed,
    DegenerateReduction,
    DimensionMismatch,
    RepeatedResidueEigenvalue,
    ResidueEigenvalueDeficit,
)
from .linalg import PadicMatrix, hensel_lift_root, vector_norm

__all__ = [
    "StrongNormalCertificate",
    "certify_strongly_normal",
    "spectral_measure",
    "functional_calculus",
    "verify_orthogonality",
]


class StrongNormalCertificate:
    """A verified spectral decomposition A = sum lambda_i E_i.

    ``eigenvalues`` and ``projectors`` run in parallel; the projectors
    are orthogonal idempotents of norm 1 summing to the identity.  The
    certificate precision is the minimum precision over the matrix and
    all certificate data, and every stored identity holds as an exact
    congruence at that precision (see :meth:`verify`).
    """

    __slots__ = ("matrix", "eigenvalues", "projectors")

    def __init__(self, matrix: PadicMatrix, eigenvalues, projectors):
        eigenvalues = tuple(eigenvalues)
        projectors = tuple(projectors)
        if len(eigenvalues) != len(projectors):
            raise DimensionMismatch("one projector per eigenvalue required")
        if not eigenvalues:
            raise ValueError("certificate needs at least one spectral point")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "eigenvalues", eigenvalues)
        object.__setattr__(self, "projectors", projectors)

    def __setattr__(self, name, value):
        raise AttributeError("certificate is immutable")

    @property
    def p(self) -> int:
        return self.matrix.p

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def precision(self) -> int:
        return min(
            [self.matrix.prec]
            + [e.prec for e in self.eigenvalues]
            + [e.prec for e in self.projectors]
        )

    def verify(self) -> None:
        """Re-check every certificate identity; raise CertificationFailed.

        Checks, all as exact congruences at certificate precision:
        E_i E_j = 0 for i != j, E_i^2 = E_i, sum E_i = I,
        sum lambda_i E_i = A, and |E_i| = 1.
        """
        d = self.precision
        ident = PadicMatrix.identity(self.n, self.p, d)
        total = PadicMatrix.zeros(self.n, self.p, d)
        recon = PadicMatrix.zeros(self.n, self.p, d)
        for i, (lam, e) in enumerate(zip(self.eigenvalues, self.projectors)):
            if e.op_norm() != Valuation.exact(0):
                raise CertificationFailed(f"projector {i} does not have norm 1")
            if not (e @ e).congruent(e, d):
                raise CertificationFailed(f"projector {i} is not idempotent")
            for j in range(i + 1, len(self.projectors)):
                prod = e @ self.projectors[j]
                if not prod.congruent(
                    PadicMatrix.zeros(self.n, self.p, prod.prec), d
                ):
                    raise CertificationFailed(
                        f"projectors {i} and {j} are not orthogonal"
                    )
            total = total + e
            recon = recon + lam * e
        if not total.congruent(ident, d):
            raise CertificationFailed("projectors do not sum to the identity")
        if not recon.congruent(self.matrix, d):
            raise CertificationFailed(
                "sum lambda_i E_i does not reconstruct the matrix"
            )

    # -- spectral operations ------------------------------------------

    def spectral_measure(self, subset) -> PadicMatrix:
        """E(S) = sum_{i in S} E_i for a subset S of spectral indices.

        Subsets of a finite spectrum are exactly its open-closed sets, so
        this is the full projection-valued measure: E({}) = 0, E(all) = I,
        and E is additive on disjoint subsets.
        """
        idx = sorted(set(subset))
        if idx and (idx[0] < 0 or idx[-1] >= len(self.eigenvalues)):
            raise IndexError(f"spectral index out of range: {idx}")
        acc = PadicMatrix.zeros(self.n, self.p, self.precision)
        for i in idx:
            acc = acc + self.projectors[i]
        return acc

    def functional_calculus(self, phi) -> PadicMatrix:
        """phi(A) = sum_i phi(lambda_i) E_i for any map on the spectrum.

        ``phi`` may return PadicInt or int.  The norm bound
        |phi(A)| <= max_i |phi(lambda_i)| holds by construction.
        """
        acc = None
        for lam, e in zip(self.eigenvalues, self.projectors):
            val = phi(lam)
            if isinstance(val, int):
                val = PadicInt(val, self.p, lam.prec)
            term = val * e
            acc = term if acc is None else acc + term
        return acc

    def verify_orthogonality(self, vec) -> bool:
        """Check |f| = sup_i |E_i f| for one vector f.

        Singletons suffice: the sup over arbitrary subsets is attained on
        a singleton in the ultrametric.
        """
        if len(vec) != self.n:
            raise DimensionMismatch(f"vector length {len(vec)} vs {self.n}")
        lhs = vector_norm(vec)
        rhs = min(vector_norm(e.matvec(vec)) for e in self.projectors)
        return lhs == rhs

    # -- serialization --------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.to_dict(),
            "eigenvalues": [e.to_dict() for e in self.eigenvalues],
            "projectors": [e.to_dict() for e in self.projectors],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "StrongNormalCertificate":
        return cls(
            PadicMatrix.from_dict(d["matrix"]),
            [PadicInt.from_dict(e) for e in d["eigenvalues"]],
            [PadicMatrix.from_dict(e) for e in d["projectors"]],
        )

    def __repr__(self):
        ev = [e.residue for e in self.eigenvalues]
        return (
            f"StrongNormalCertificate(n={self.n}, p={self.p}, "
            f"prec={self.precision}, eigenvalues={ev})"
        )


def certify_strongly_normal(a: PadicMatrix, check: bool = True) -> StrongNormalCertificate:
    """Certify a matrix whose reduction has n distinct residue eigenvalues.

    Refuses scalar reductions (DegenerateReduction), characteristic
    polynomials that do not split over F_p (ResidueEigenvalueDeficit),
    and repeated residue eigenvalues (RepeatedResidueEigenvalue).  On
    success the certificate is re-verified before being returned.
    """
    ahat = a.reduction()
    if ahat.is_scalar():
        raise DegenerateReduction(
            "reduction mod p is a scalar matrix; the distinct-eigenvalue "
            "criterion cannot apply"
        )
    residue_roots = ahat.eigenvalues()
    total = sum(m for _, m in residue_roots)
    if total < a.n:
        raise ResidueEigenvalueDeficit(
            f"residue characteristic polynomial has only {total} roots in "
            f"F_{a.p} counted with multiplicity, needs {a.n}"
        )
    repeated = [r for r, m in residue_roots if m > 1]
    if repeated:
        raise RepeatedResidueEigenvalue(
            f"residue eigenvalues {repeated} are repeated; lifting an "
            "invariant subspace is unsupported"
        )
    f = a.char_poly()
    eigenvalues = [
        hensel_lift_root(f, r, a.prec) for r, _ in sorted(residue_roots)
    ]
    ident = PadicMatrix.identity(a.n, a.p, a.prec)
    projectors = []
    for i, lam_i in enumerate(eigenvalues):
        num = None
        den = PadicInt.one(a.p, a.prec)
        for j, lam_j in enumerate(eigenvalues):
            if j == i:
                continue
            factor = a - lam_j * ident
            num = factor if num is None else num @ factor
            den = den * (lam_i - lam_j)
        # den is a unit: residues of the eigenvalues are pairwise distinct
        projectors.append(num * den.inverse())
    cert = StrongNormalCertificate(a, eigenvalues, projectors)
    if check:
        cert.verify()
    return cert


def spectral_measure(cert: StrongNormalCertificate, subset) -> PadicMatrix:
    return cert.spectral_measure(subset)


def functional_calculus(cert: StrongNormalCertificate, phi) -> PadicMatrix:
    return cert.functional_calculus(phi)


def verify_orthogonality(cert: StrongNormalCertificate, vec) -> bool:
    return cert.verify_orthogonality(vec)
