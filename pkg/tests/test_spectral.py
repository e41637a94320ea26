"""Certificates, projection-valued measure, functional calculus."""

from itertools import combinations
from random import Random

import pytest

from padicspectral import (
    PadicInt,
    PadicMatrix,
    StrongNormalCertificate,
    Valuation,
    certify_strongly_normal,
    functional_calculus,
    spectral_measure,
    verify_orthogonality,
)
from padicspectral.errors import (
    CertificationFailed,
    DegenerateReduction,
    DimensionMismatch,
    RepeatedResidueEigenvalue,
    ResidueEigenvalueDeficit,
)
from padicspectral.sampling import sample_certifiable_matrix, sample_padic

PRIMES = [3, 5, 7]


def test_diagonal_example():
    a = PadicMatrix.diagonal([2, 4], 5, 32)
    cert = certify_strongly_normal(a)
    assert [e.residue for e in cert.eigenvalues] == [2, 4]
    assert cert.projectors[0] == PadicMatrix.diagonal([1, 0], 5, 32)
    assert cert.projectors[1] == PadicMatrix.diagonal([0, 1], 5, 32)


def test_companion_example():
    a = PadicMatrix([[0, 1], [2, 1]], 5, 32)
    cert = certify_strongly_normal(a)
    residues = sorted(e.residue % 5 for e in cert.eigenvalues)
    assert residues == [2, 4]  # eigenvalues 2 and -1
    # E for eigenvalue 2 is (A + I)/3, entries 3^{-1} [[1,1],[2,2]]
    i2 = next(i for i, e in enumerate(cert.eigenvalues) if e.residue % 5 == 2)
    e2 = cert.projectors[i2]
    inv3 = PadicInt(3, 5, 32).inverse()
    expected = PadicMatrix(
        [[inv3, inv3], [2 * inv3, 2 * inv3]], 5, 32
    )
    assert e2 == expected
    assert (e2 @ e2) == e2
    assert (a @ e2) == 2 * e2


def test_refusals():
    with pytest.raises(DegenerateReduction):
        certify_strongly_normal(PadicMatrix.identity(2, 5, 32))
    with pytest.raises(DegenerateReduction):
        certify_strongly_normal(PadicMatrix.zeros(2, 5, 32))
    with pytest.raises(DegenerateReduction):
        # scalar residue with non-scalar deeper digits is still degenerate
        certify_strongly_normal(PadicMatrix([[1, 5], [0, 1]], 5, 32))
    with pytest.raises(ResidueEigenvalueDeficit):
        # companion matrix of x^2 + x + 1, irreducible mod 5
        certify_strongly_normal(PadicMatrix([[0, -1], [1, -1]], 5, 32))
    with pytest.raises(RepeatedResidueEigenvalue):
        # companion matrix of x^2 - x - 1, double root 3 mod 5
        certify_strongly_normal(PadicMatrix([[0, 1], [1, 1]], 5, 32))


@pytest.mark.parametrize("p", PRIMES)
def test_idempotent_algebra_random(p):
    rng = Random(1500 + p)
    prec = 32
    for _ in range(8):
        n = rng.randrange(2, min(p, 5) + 1)
        a = sample_certifiable_matrix(rng, p, prec, n)
        cert = certify_strongly_normal(a)
        d = cert.precision
        ident = PadicMatrix.identity(n, p, d)
        zero = PadicMatrix.zeros(n, p, d)
        total = zero
        recon = zero
        for lam, e in zip(cert.eigenvalues, cert.projectors):
            assert (e @ e).congruent(e, d)
            assert e.op_norm() == Valuation.exact(0)
            total = total + e
            recon = recon + lam * e
        for e, f in combinations(cert.projectors, 2):
            assert (e @ f).congruent(zero, d)
        assert total.congruent(ident, d)
        assert recon.congruent(a, d)
        # eigen relation A E_i = lam_i E_i
        for lam, e in zip(cert.eigenvalues, cert.projectors):
            assert (a @ e).congruent(lam * e, d)


def test_spectral_measure():
    rng = Random(9)
    a = sample_certifiable_matrix(rng, 7, 24, 3)
    cert = certify_strongly_normal(a)
    ident = PadicMatrix.identity(3, 7, cert.precision)
    assert cert.spectral_measure(range(3)).congruent(ident, cert.precision)
    assert cert.spectral_measure([]).is_zero()
    # finite additivity over every pair of disjoint subsets of a 3-point spectrum
    indices = {0, 1, 2}
    subsets = [
        frozenset(c) for k in range(4) for c in combinations(indices, k)
    ]
    for s1 in subsets:
        for s2 in subsets:
            if s1 & s2:
                continue
            lhs = cert.spectral_measure(s1 | s2)
            rhs = cert.spectral_measure(s1) + cert.spectral_measure(s2)
            assert lhs.congruent(rhs, cert.precision)
    with pytest.raises(IndexError):
        cert.spectral_measure([3])
    assert spectral_measure(cert, [0]) == cert.projectors[0]


def test_functional_calculus_basics():
    a = PadicMatrix([[0, 1], [2, 1]], 5, 32)
    cert = certify_strongly_normal(a)
    assert cert.functional_calculus(lambda lam: lam).congruent(a, 32)
    ident = PadicMatrix.identity(2, 5, 32)
    assert cert.functional_calculus(lambda lam: 1).congruent(ident, 32)
    assert cert.functional_calculus(lambda lam: lam * lam).congruent(a @ a, 32)
    assert functional_calculus(cert, lambda lam: lam + 1).congruent(a + ident, 32)


@pytest.mark.parametrize("p", PRIMES)
def test_functional_calculus_norm_bound(p):
    # |phi(A)| <= sup |phi(lambda_i)| on random polynomials
    rng = Random(1600 + p)
    a = sample_certifiable_matrix(rng, p, 24, 2)
    cert = certify_strongly_normal(a)
    for _ in range(25):
        coeffs = [sample_padic(rng, p, 24) for _ in range(4)]

        def phi(lam, cs=coeffs):
            acc = PadicInt.zero(lam.p, lam.prec)
            for c in reversed(cs):
                acc = acc * lam + c
            return acc

        bound = min(phi(lam).valuation() for lam in cert.eigenvalues)
        assert cert.functional_calculus(phi).op_norm() >= bound


def test_spectrum_pushforward():
    # certifying phi(A) finds exactly {phi(lambda_i)} when residues stay distinct
    a = PadicMatrix([[0, 1], [2, 1]], 5, 32)
    cert = certify_strongly_normal(a)
    squared = cert.functional_calculus(lambda lam: lam * lam)
    cert2 = certify_strongly_normal(squared)
    expected = sorted((lam * lam).residue for lam in cert.eigenvalues)
    assert [e.residue for e in cert2.eigenvalues] == expected
    # and the projectors are reused: phi does not move the idempotents
    for e in cert.projectors:
        assert any(e.congruent(f, cert2.precision) for f in cert2.projectors)


def test_functional_calculus_composition():
    # psi(phi(A)) via one certificate == certify(phi(A)) then apply psi
    a = PadicMatrix([[0, 1], [2, 1]], 5, 32)
    cert = certify_strongly_normal(a)

    def phi(lam):
        return lam * lam

    def psi(mu):
        return mu * mu * mu + mu + 7

    direct = cert.functional_calculus(lambda lam: psi(phi(lam)))
    staged = certify_strongly_normal(
        cert.functional_calculus(phi)
    ).functional_calculus(psi)
    assert direct.congruent(staged, 32)


@pytest.mark.parametrize("p", PRIMES)
def test_orthogonality_identity(p):
    rng = Random(1700 + p)
    a = sample_certifiable_matrix(rng, p, 24, 2)
    cert = certify_strongly_normal(a)
    for _ in range(100):
        vec = [sample_padic(rng, p, 24) for _ in range(2)]
        assert cert.verify_orthogonality(vec)
    assert cert.verify_orthogonality([PadicInt.zero(p, 24)] * 2)
    e1 = [PadicInt.one(p, 24), PadicInt.zero(p, 24)]
    assert verify_orthogonality(cert, e1)
    with pytest.raises(DimensionMismatch):
        cert.verify_orthogonality([PadicInt.one(p, 24)])


def test_verify_catches_corruption():
    a = PadicMatrix([[0, 1], [2, 1]], 5, 32)
    cert = certify_strongly_normal(a)
    bad = StrongNormalCertificate(
        a, cert.eigenvalues, [cert.projectors[0], cert.projectors[0]]
    )
    with pytest.raises(CertificationFailed):
        bad.verify()
    swapped = StrongNormalCertificate(
        a, tuple(reversed(cert.eigenvalues)), cert.projectors
    )
    with pytest.raises(CertificationFailed):
        swapped.verify()


def test_certificate_serialization():
    a = PadicMatrix([[0, 1], [2, 1]], 5, 32)
    cert = certify_strongly_normal(a)
    back = StrongNormalCertificate.from_dict(cert.to_dict())
    assert back.matrix == a
    assert back.eigenvalues == cert.eigenvalues
    assert back.projectors == cert.projectors
    back.verify()
