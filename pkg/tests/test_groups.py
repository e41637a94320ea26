"""Unitary operators, group evaluation, Stone recovery, additive form."""

from random import Random

import pytest

from padicspectral import (
    OneParamGroup,
    PadicInt,
    PadicMatrix,
    SeriesBudget,
    additive_reparam,
    certify_strongly_normal,
    digit_truncation_error,
    generator_log_series,
    make_unitary,
    pexp,
    stone_recover,
)
from padicspectral.errors import (
    CertificationFailed,
    NormTooLarge,
    NotPrincipal,
    NotPrincipalSpectrum,
)
from padicspectral.sampling import (
    sample_certifiable_matrix,
    sample_group,
    sample_in_pzp,
    sample_padic,
    sample_principal_unit,
)

PRIMES = [3, 5, 7]
BUDGETS = {p: SeriesBudget.auto(32, p) for p in PRIMES}


def _tol(budget, *mats):
    return max(1, min([budget.target - budget.guard] + [m.prec for m in mats]))


def test_make_unitary_examples():
    u0 = make_unitary(PadicMatrix.zeros(2, 5, 32))
    assert u0.matrix == PadicMatrix.identity(2, 5, 32)
    assert [x.residue for x in u0.unit_spectrum()] == [1]

    u1 = make_unitary(PadicMatrix.diagonal([5, 10], 5, 32))
    assert sorted(x.residue % 125 for x in u1.unit_spectrum()) == [6, 11]

    # V = 5 * [[0,1],[2,1]]: sigma(U) = {1 + 5*2, 1 - 5} = {11, -4}
    u2 = make_unitary(PadicMatrix([[0, 5], [10, 5]], 5, 32))
    got = sorted(x.residue % 5**4 for x in u2.unit_spectrum())
    assert got == sorted(x % 5**4 for x in (11, -4))
    u2.cert.verify()


def test_make_unitary_refusals():
    with pytest.raises(NormTooLarge):
        make_unitary(PadicMatrix([[1, 0], [0, 5]], 5, 32))
    with pytest.raises(CertificationFailed):
        # scaled part is scalar: p * 2I
        make_unitary(PadicMatrix.diagonal([10, 10], 5, 32))
    with pytest.raises(CertificationFailed):
        # scaled part has an irreducible residue characteristic polynomial
        make_unitary(PadicMatrix([[0, -5], [5, -5]], 5, 32))


def test_evaluate_diagonal_example():
    b = BUDGETS[5]
    g = OneParamGroup(
        certify_strongly_normal(PadicMatrix.diagonal([0, 1], 5, 32)), b
    )
    u = g.evaluate(6)
    assert u.matrix.congruent(PadicMatrix.diagonal([1, 6], 5, 32), u.matrix.prec)
    # eigenvalue exponents 0 and 1 push the spectrum to {1, 6}
    assert sorted(x.residue % 25 for x in u.unit_spectrum()) == [1, 6]


@pytest.mark.parametrize("p", PRIMES)
def test_evaluate_at_one_is_identity(p):
    rng = Random(1800 + p)
    g = sample_group(rng, p, 32, 2, BUDGETS[p])
    u = g.evaluate(1)
    assert u.matrix == PadicMatrix.identity(2, p, u.matrix.prec)


def test_evaluate_rejects_non_principal():
    g = OneParamGroup(
        certify_strongly_normal(PadicMatrix.diagonal([0, 1], 5, 32)), BUDGETS[5]
    )
    with pytest.raises(NotPrincipal):
        g.evaluate(2)


@pytest.mark.parametrize("p", PRIMES)
def test_dual_path_agreement(p):
    b = BUDGETS[p]
    rng = Random(1900 + p)
    for _ in range(6):
        n = rng.randrange(2, min(p, 4) + 1)
        g = sample_group(rng, p, 32, n, b)
        s = sample_principal_unit(rng, p, 32)
        spectral = g.evaluate(s).matrix
        mahler = g.evaluate_mahler(s)
        assert spectral.congruent(mahler, _tol(b, spectral, mahler))


@pytest.mark.parametrize("p", PRIMES)
def test_group_law(p):
    b = BUDGETS[p]
    rng = Random(2000 + p)
    g = sample_group(rng, p, 32, 2, b)
    assert g.verify_group_law(1, 1).ok
    for _ in range(10):
        s1 = sample_principal_unit(rng, p, 32)
        s2 = sample_principal_unit(rng, p, 32)
        chk = g.verify_group_law(s1, s2)
        assert chk.ok and chk.margin >= 0


def test_group_law_example_pair():
    g = OneParamGroup(
        certify_strongly_normal(PadicMatrix([[0, 1], [2, 1]], 5, 32)), BUDGETS[5]
    )
    assert g.verify_group_law(6, 26).ok  # s1 s2 = 156


@pytest.mark.parametrize("p", PRIMES)
def test_lipschitz(p):
    b = BUDGETS[p]
    rng = Random(2100 + p)
    g = sample_group(rng, p, 32, 2, b)
    for _ in range(10):
        s1 = sample_principal_unit(rng, p, 32)
        s2 = sample_principal_unit(rng, p, 32)
        assert g.lipschitz_check(s1, s2).ok
    same = sample_principal_unit(rng, p, 32)
    chk = g.lipschitz_check(same, same)
    assert chk.ok and not chk.observed.is_finite


def test_lipschitz_example():
    g = OneParamGroup(
        certify_strongly_normal(PadicMatrix([[0, 1], [2, 1]], 5, 32)), BUDGETS[5]
    )
    chk = g.lipschitz_check(6, 31)  # |6 - 31| = 5^{-2}
    assert chk.required == 2 and chk.ok


@pytest.mark.parametrize("p", PRIMES)
def test_unitarity_closure(p):
    # |U(s) - I| <= |s - 1| < 1
    b = BUDGETS[p]
    rng = Random(2200 + p)
    g = sample_group(rng, p, 32, 2, b)
    for _ in range(10):
        s = sample_principal_unit(rng, p, 32)
        u = g.evaluate(s)
        assert u.v.op_norm() >= (s - 1).valuation().cap(u.v.prec)


def test_stone_diagonal_example():
    b = BUDGETS[5]
    g = stone_recover(PadicMatrix.diagonal([1, 6], 5, 32), b)
    expected = PadicMatrix.diagonal([0, 1], 5, g.generator.prec)
    assert g.generator.congruent(expected, g.generator.prec)


def test_stone_identity():
    g = stone_recover(PadicMatrix.identity(2, 5, 32), BUDGETS[5])
    assert g.generator.is_zero()
    u = g.evaluate(6)
    assert u.matrix == PadicMatrix.identity(2, 5, u.matrix.prec)


def test_stone_refuses_norm_one():
    with pytest.raises(NotPrincipalSpectrum):
        stone_recover(PadicMatrix([[1, 1], [0, 6]], 5, 32), BUDGETS[5])


def test_stone_refuses_uncertifiable_principal_part():
    # V/p is the companion of x^2 - x - 1 with its double residue root 3
    v = 5 * PadicMatrix([[0, 1], [1, 1]], 5, 32)
    u1p = PadicMatrix.identity(2, 5, 32) + v
    with pytest.raises(CertificationFailed):
        stone_recover(u1p, BUDGETS[5])


@pytest.mark.parametrize("p", PRIMES)
def test_stone_roundtrip(p):
    b = BUDGETS[p]
    rng = Random(2300 + p)
    tol = b.target - b.guard - 1  # one digit paid to the log(1+p) division
    for _ in range(4):
        n = rng.randrange(2, min(p, 4) + 1)
        g = sample_group(rng, p, 32, n, b)
        u1p = g.evaluate(1 + p).matrix
        rec = stone_recover(u1p, b)
        a, a_rec = g.generator, rec.generator
        d = min(tol, a_rec.prec, a.prec)
        assert a_rec.congruent(a.truncate_to(a_rec.prec).lift_to(a_rec.prec), d)
        # and the recovered group reproduces U(1+p)
        again = rec.evaluate(1 + p).matrix
        assert again.congruent(u1p.truncate_to(again.prec), min(tol, again.prec))


@pytest.mark.parametrize("p", PRIMES)
def test_generator_log_series_cross_check(p):
    b = BUDGETS[p]
    rng = Random(2400 + p)
    g = sample_group(rng, p, 32, 2, b)
    u1p = g.evaluate(1 + p).matrix
    via_series = generator_log_series(u1p, b)
    via_spectrum = stone_recover(u1p, b).generator
    d = min(b.target - b.guard - 1, via_series.prec, via_spectrum.prec)
    assert via_series.congruent(via_spectrum, d)
    assert generator_log_series(
        PadicMatrix.identity(2, p, 32), b
    ).is_zero()


def test_digit_limit_at_one_plus_p():
    # zeta(1+p) = 1 has digits (1, 0, 0, ...): every cut reproduces U(1+p)
    g = OneParamGroup(
        certify_strongly_normal(PadicMatrix([[0, 1], [2, 1]], 5, 32)), BUDGETS[5]
    )
    u1p = g.evaluate(6).matrix
    for n in (0, 1, 4):
        approx = g.digit_limit_approx(6, n)
        assert approx.congruent(u1p.truncate_to(approx.prec), approx.prec)


@pytest.mark.parametrize("p", PRIMES)
def test_digit_limit_convergence(p):
    b = BUDGETS[p]
    rng = Random(2500 + p)
    g = sample_group(rng, p, 32, 2, b)
    s = sample_principal_unit(rng, p, 32)
    reference = g.evaluate(s).matrix
    for n in (0, 2, 5, 9):
        err = (g.digit_limit_approx(s, n) - reference).op_norm()
        assert err.value >= digit_truncation_error(n, p)
    # once the bound passes the tracked precision the cut is exact
    deep = g.digit_limit_approx(s, b.target)
    assert deep.congruent(reference.truncate_to(deep.prec), deep.prec)


def test_additive_examples():
    b = BUDGETS[5]
    g = OneParamGroup(
        certify_strongly_normal(PadicMatrix.diagonal([0, 1], 5, 32)), b
    )
    w0 = g.additive_evaluate(0)
    assert w0.matrix == PadicMatrix.identity(2, 5, w0.matrix.prec)
    # diagonal action: W(z) = diag(1, e^(pz))
    z = PadicInt(3, 5, 32)
    w = g.additive_evaluate(z)
    ez = pexp(PadicInt(5, 5, 32) * z, b)
    expected = PadicMatrix.diagonal([PadicInt.one(5, ez.prec), ez], 5, ez.prec)
    assert w.matrix.congruent(expected, _tol(b, w.matrix, expected))


@pytest.mark.parametrize("p", PRIMES)
def test_additivity(p):
    b = BUDGETS[p]
    rng = Random(2600 + p)
    g = sample_group(rng, p, 32, 2, b)
    for _ in range(8):
        z1 = sample_padic(rng, p, 32)
        z2 = sample_padic(rng, p, 32)
        lhs = g.additive_evaluate(z1 + z2).matrix
        rhs = g.additive_evaluate(z1).matrix @ g.additive_evaluate(z2).matrix
        assert lhs.congruent(rhs, _tol(b, lhs, rhs))


@pytest.mark.parametrize("p", PRIMES)
def test_additive_reparam_is_principal(p):
    b = BUDGETS[p]
    rng = Random(2700 + p)
    for _ in range(10):
        z = sample_padic(rng, p, 32)
        s = additive_reparam(z, b)
        assert s.reduce_mod_p() == 1


def test_group_serialization_roundtrip():
    b = BUDGETS[5]
    g = OneParamGroup(
        certify_strongly_normal(PadicMatrix([[0, 1], [2, 1]], 5, 32)), b
    )
    back = OneParamGroup.from_dict(g.to_dict())
    assert back.generator == g.generator
    assert back.budget == b
    s = PadicInt(31, 5, 32)
    assert back.evaluate(s).matrix == g.evaluate(s).matrix


def test_group_check_reporting():
    g = OneParamGroup(
        certify_strongly_normal(PadicMatrix([[0, 1], [2, 1]], 5, 32)), BUDGETS[5]
    )
    chk = g.verify_group_law(6, 26)
    d = chk.to_dict()
    assert d["pass"] is True
    assert d["check"] == "group-law"
    assert d["observed_valuation"] >= d["required_valuation"]
    assert bool(chk) is chk.ok


@pytest.mark.parametrize("p", PRIMES)
def test_pushforward_certificate_of_evaluate(p):
    # sigma(U(s)) = {(1+z)^lambda_i}; V(s) certificate data stays coherent
    b = BUDGETS[p]
    rng = Random(2800 + p)
    g = sample_group(rng, p, 32, 2, b)
    s = sample_principal_unit(rng, p, 32)
    u = g.evaluate(s)
    assert u.matrix.congruent(
        PadicMatrix.identity(2, p, u.v.prec) + u.v, u.v.prec
    )
    recon = u.cert.functional_calculus(lambda lam: lam)
    assert recon.congruent(u.v.truncate_to(recon.prec), recon.prec)
    u.cert.verify()
    # the spectrum of a unitary operator consists of principal units
    assert all(x.reduce_mod_p() == 1 for x in u.unit_spectrum())


@pytest.mark.parametrize("p", PRIMES)
def test_dual_path_on_recovered_generator(p):
    # recovered eigenvalues collide mod p: the hard case for the exact
    # divisions inside the operator Mahler recurrence
    b = BUDGETS[p]
    rng = Random(4000 + p)
    g = sample_group(rng, p, 32, 2, b)
    rec = stone_recover(g.evaluate(1 + p).matrix, b)
    s = sample_principal_unit(rng, p, 32)
    spectral = rec.evaluate(s).matrix
    mahler = rec.evaluate_mahler(s)
    assert spectral.congruent(mahler, _tol(b, spectral, mahler))


def test_full_dimension_at_p7():
    # n = p distinct residues is the widest certifiable case
    rng = Random(2900)
    b = BUDGETS[7]
    a = sample_certifiable_matrix(rng, 7, 32, 7)
    g = OneParamGroup(certify_strongly_normal(a), b)
    assert g.verify_group_law(
        sample_principal_unit(rng, 7, 32), sample_principal_unit(rng, 7, 32)
    ).ok
    u1p = g.evaluate(8).matrix
    rec = stone_recover(u1p, b).generator
    d = min(b.target - b.guard - 1, rec.prec)
    assert rec.congruent(a, d)
