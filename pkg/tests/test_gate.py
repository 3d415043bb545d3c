from random import Random

import pytest

from magnuslie import (HypothesisReport, Presentation, WeightScheme,
                       check_relator_hypotheses, free_reduce,
                       group_commutator, leading_lie_form, parse_word,
                       random_word, word_multiply, invert_word)

COMM = group_commutator((1,), (2,))


def test_accepts_commutator_relator():
    pres = Presentation(m=2, n=1, u=COMM, v=(3,), e=3)
    report = check_relator_hypotheses(pres, 8)
    assert report.accepted
    assert not report.inconclusive
    assert report.d == 2
    assert report.rho.coords == {(0, 1): 1}
    assert report.content == 1
    assert report.chosen_e == 3
    assert report.failures == ()


def test_rejects_proper_power():
    pres = Presentation(m=1, n=1, u=(1, 1), v=(2,))
    report = check_relator_hypotheses(pres, 8)
    assert not report.accepted
    assert report.d == 1
    assert report.rho.coords == {(0,): 2}
    assert report.content == 2
    assert report.chosen_e == 2  # defaulted to d + 1
    assert any("content 2" in f for f in report.failures)


def test_rejects_trivial_v():
    pres = Presentation(m=2, n=1, u=COMM, v=())
    report = check_relator_hypotheses(pres, 8)
    assert not report.accepted
    assert any("v is the trivial word" in f for f in report.failures)
    # the u analysis still runs
    assert report.d == 2 and report.content == 1


def test_rejects_u_outside_x_factor():
    pres = Presentation(m=2, n=1, u=(1, 3), v=(3,))
    report = check_relator_hypotheses(pres, 8)
    assert not report.accepted
    assert any("x-generators" in f for f in report.failures)
    assert report.d is None and report.rho is None


def test_rejects_e_not_above_d():
    pres = Presentation(m=2, n=1, u=COMM, v=(3,), e=2)
    report = check_relator_hypotheses(pres, 8)
    assert not report.accepted
    assert any("must exceed" in f for f in report.failures)


def test_inconclusive_when_cutoff_below_degree():
    pres = Presentation(m=2, n=1, u=COMM, v=(3,), e=3)
    report = check_relator_hypotheses(pres, 1)
    assert report.inconclusive
    assert not report.accepted
    assert report.d is None
    assert any("not certified" in f for f in report.failures)


def test_accepted_iff_no_failures():
    cases = [
        Presentation(m=2, n=1, u=COMM, v=(3,), e=3),
        Presentation(m=1, n=1, u=(1, 1), v=(2,)),
        Presentation(m=2, n=1, u=COMM, v=()),
        Presentation(m=2, n=1, u=(), v=(3,)),
        Presentation(m=2, n=2, u=(1,), v=(3, 4)),
    ]
    for pres in cases:
        report = check_relator_hypotheses(pres, 8)
        assert report.accepted == (not report.failures)


def test_scaling_detector():
    scheme = WeightScheme(2, 1, 1)
    base_words = [COMM, group_commutator(COMM, (1,)), (1,)]
    for base in base_words:
        baseline = check_relator_hypotheses(
            Presentation(m=2, n=1, u=base, v=(3,)), 10)
        assert baseline.accepted and baseline.content == 1
        for k in (2, 3):
            powered = ()
            for _ in range(k):
                powered = word_multiply(powered, base)
            report = check_relator_hypotheses(
                Presentation(m=2, n=1, u=powered, v=(3,)), 10)
            assert not report.accepted
            assert report.d == baseline.d
            assert report.content == k
            assert report.rho == baseline.rho.with_scheme(report.rho.scheme).scale(k)


def test_leading_form_of_full_relator_matches_rho():
    # u v^-1 has the same leading form as u: the v part sits deeper
    pres = Presentation(m=2, n=1, u=COMM, v=(3,), e=3)
    report = check_relator_hypotheses(pres, 8)
    relator = word_multiply(pres.u, invert_word(pres.v))
    scheme = report.rho.scheme
    assert scheme == WeightScheme(2, 1, 3)
    d, form = leading_lie_form(relator, scheme, 8)
    assert d == report.d
    assert form == report.rho


def test_stability_on_random_accepted_inputs():
    rng = Random(17)
    scheme_a = WeightScheme(2, 0, 1)
    found = 0
    while found < 20:
        u = random_word(rng, scheme_a, 8)
        v_len = rng.randrange(1, 4)
        v = free_reduce([3] * v_len, WeightScheme(2, 1, 1))
        pres = Presentation(m=2, n=1, u=u, v=v)
        report = check_relator_hypotheses(pres, 8)
        if not report.accepted:
            continue
        found += 1
        relator = word_multiply(u, invert_word(v))
        d, form = leading_lie_form(relator, report.rho.scheme, 8)
        assert (d, form) == (report.d, report.rho)


def test_determinism():
    pres = Presentation(m=2, n=1, u=COMM, v=(3,), e=3)
    assert check_relator_hypotheses(pres, 8) == check_relator_hypotheses(pres, 8)


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation(m=0, n=1, u=(1,), v=(2,))
    with pytest.raises(ValueError):
        Presentation(m=1, n=1, u=(1, -1), v=(2,))  # not reduced
    with pytest.raises(ValueError):
        Presentation(m=1, n=1, u=(5,), v=(2,))  # out of range
    with pytest.raises(ValueError):
        Presentation(m=1, n=1, u=(1,), v=(2,), e=0)
