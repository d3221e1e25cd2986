import random

import pytest

from skeincalc.cyclotomic import CycInt, CycNum, from_int, ring_modulus, root
from skeincalc.errors import UnsupportedPrimeError
from skeincalc.skein import (
    A_power,
    SkeinElem,
    chebyshev_e,
    delta,
    eta,
    eta_squared,
    hopf_bracket,
    kappa,
    kappa_exponent,
    omega,
    phase_pinned,
    plane_eval,
    quantum_int,
    twist,
)

from oracles import hopf_state_sum, random_skein


def test_delta_examples():
    # p=5: A = zeta20^2, delta = -zeta20^4 - zeta20^-4
    assert delta(5) == -(root(20, 4) + root(20, -4))
    # p=7: A = zeta14
    assert delta(7) == -(root(14, 2) + root(14, -2))
    for p in (5, 7, 11):
        assert delta(p) ** 2 - 1 == quantum_int(p, 3)


def test_quantum_int_examples():
    for p in (5, 7, 11):
        assert quantum_int(p, 1) == 1
        assert quantum_int(p, 2) == A_power(p, 2) + A_power(p, -2)
        assert quantum_int(p, 2) == -delta(p)
        assert quantum_int(p, 3) == delta(p) ** 2 - 1


def test_chebyshev_recursion_and_degrees():
    for p in (5, 7):
        z = SkeinElem(p, [0, 1])
        assert chebyshev_e(p, 0) == SkeinElem(p, [1])
        assert chebyshev_e(p, 1) == z
        assert chebyshev_e(p, 2) == z * z - 1
        for k in range(2, 8):
            assert chebyshev_e(p, k) == z * chebyshev_e(p, k - 1) - chebyshev_e(p, k - 2)
            assert chebyshev_e(p, k).degree == k


def test_plane_eval_examples():
    for p in (5, 7):
        assert plane_eval(SkeinElem(p, [0, 1])) == delta(p)
        assert plane_eval(chebyshev_e(p, 2)) == quantum_int(p, 3)


def test_plane_eval_chebyshev_induction():
    # e_k at the loop value is (-1)^k [k+1]
    for p in (5, 7, 11):
        for k in range((p - 3) // 2 + 1):
            want = quantum_int(p, k + 1) * (1 if k % 2 == 0 else -1)
            assert plane_eval(chebyshev_e(p, k)) == want


def test_omega_displays():
    assert omega(3) == SkeinElem(3, [1])
    d = delta(5)
    assert omega(5) == SkeinElem(5, [1, d])
    d = delta(7)
    assert omega(7) == SkeinElem(7, [2 - d * d, d, d * d - 1])
    for p in (5, 7, 11, 13):
        assert omega(p).degree == (p - 3) // 2


def test_plane_eval_omega_is_sum_of_squares():
    for p in (5, 7, 11):
        total = from_int(ring_modulus(p), 0)
        for k in range((p - 3) // 2 + 1):
            total = total + quantum_int(p, k + 1) ** 2
        assert plane_eval(omega(p)) == total


def test_twist_displays():
    # constants are fixed by the twist
    for p in (5, 7):
        assert twist(SkeinElem(p, [1]), -1) == SkeinElem(p, [1])
        assert twist(SkeinElem(p, [1]), 5) == SkeinElem(p, [1])
    d = delta(5)
    assert twist(omega(5), -1) == SkeinElem(5, [1, -(A_power(5, -3) * d)])
    d = delta(7)
    A6, A11 = A_power(7, 6), A_power(7, 11)
    want = SkeinElem(7, [1 + A6 - A6 * d * d, -(A11 * d), A6 * (d * d - 1)])
    assert twist(omega(7), -1) == want


def test_twist_round_trip_randomized():
    rng = random.Random(12)
    for p in (5, 7):
        for _ in range(20):
            x = random_skein(rng, p)
            assert twist(twist(x, 1), -1) == x
            assert twist(twist(x, -2), 2) == x


def test_twist_is_linear():
    rng = random.Random(13)
    for _ in range(10):
        x, y = random_skein(rng, 5), random_skein(rng, 5)
        assert twist(x + y, -1) == twist(x, -1) + twist(y, -1)


def test_hopf_bracket_examples():
    for p in (5, 7):
        assert hopf_bracket(p, 0) == 1
        A = A_power(p, 1)
        assert hopf_bracket(p, 1) == A ** 5 + A
        assert hopf_bracket(p, 1) == -(A ** 3) * delta(p)
        assert hopf_bracket(p, 2) == A ** 12 + A ** 8 + A ** 4 + 1


def test_hopf_bracket_vs_state_sum_oracle():
    for p in (5, 7):
        for n in range(5):
            assert hopf_bracket(p, n) == hopf_state_sum(p, n)


def test_hopf_bracket_vs_twist_route():
    # n +1-framed fibers are one positive full twist applied to z^n
    for p in (5, 7, 11):
        for n in range(11):
            zn = SkeinElem(p, [0] * n + [1])
            assert plane_eval(twist(zn, 1)) == CycNum(hopf_bracket(p, n), p, 0)


def test_eta_exact_values():
    assert eta(5) == CycNum(CycInt(20, [0, 2, 0, 1, 0, 1, 0, -3]), 5, 1)
    assert eta(7) == CycNum(CycInt(14, [-2, 0, -1, -2, 2, 1]), 7, 1)
    with pytest.raises(UnsupportedPrimeError):
        eta(11)


def test_eta_squared_consistency():
    for p in (5, 7):
        assert eta(p) ** 2 == eta_squared(p)
    # self-checking postcondition at a prime without a pinned sign
    for p in (5, 7, 11):
        total = from_int(ring_modulus(p), 0)
        for k in range((p - 3) // 2 + 1):
            total = total + quantum_int(p, k + 1) ** 2
        assert eta_squared(p) * total == 1


def test_eta_satisfies_sphere_constraint():
    # +1-surgery on the unknot is a weight-one sphere: eta * <t omega> = kappa
    for p in (5, 7):
        g = plane_eval(twist(omega(p), 1))
        assert eta(p) * g == CycNum(kappa(p), p, 0)


def test_kappa_values_and_identity():
    assert kappa(5) == root(20, -1)
    assert kappa(7) == A_power(7, 4)
    for p in (5, 7, 11, 13):
        assert kappa(p) ** 2 == A_power(p, kappa_exponent(p))
    assert phase_pinned(5) and phase_pinned(7)
    assert not phase_pinned(11)


def test_skein_json_round_trip():
    rng = random.Random(3)
    x = random_skein(rng, 5)
    assert SkeinElem.from_json(x.to_json()) == x
    data = x.to_json()
    assert data.keys() == {"p", "coeffs"}
