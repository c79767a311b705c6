import json
from fractions import Fraction

import pytest

from factgraph.core import new_semigroup
from factgraph.errors import FitFailure
from factgraph.graphs import minimal_presentation
from factgraph.quasipoly import (
    Quasipolynomial,
    default_fit_start,
    fit,
    fit_succeeds,
    load_sequence_csv,
    minimal_period,
    predicted_leading_coefficient,
    quasipoly_to_json,
    table_oracle,
    verify_degree_period_claims,
)


def alternating(n: int) -> int:
    # degree 2 with period-2 coefficients: n^2 on even n, 3n + 1 on odd n
    return n * n if n % 2 == 0 else 3 * n + 1


def test_fit_recovers_synthetic_quasipolynomial():
    q = fit(alternating, 2, 2, 0)
    assert q.degree == 2
    assert q.coeffs[0] == (Fraction(0), Fraction(0), Fraction(1))
    assert q.coeffs[1] == (Fraction(1), Fraction(3), Fraction(0))
    for n in range(40):
        assert q(n) == alternating(n)
    assert q.leading(0) == 1 and q.leading(1) == 0
    assert not q.is_zero_on(1)


def test_fit_failure_carries_witness():
    with pytest.raises(FitFailure) as exc:
        fit(alternating, 2, 1, 0)
    assert exc.value.residue in (0, 1)
    assert alternating(exc.value.witness) is not None
    assert not fit_succeeds(alternating, 2, 1, 0)
    assert fit_succeeds(alternating, 2, 2, 0)


def test_fit_degree_is_trimmed():
    q = fit(lambda n: 5 * n, 3, 4, 0)  # true degree 1, asked for 4
    assert q.degree == 1
    assert all(q.coeffs[r] == (Fraction(0), Fraction(5)) for r in range(3))


def test_fit_input_validation():
    with pytest.raises(ValueError):
        fit(alternating, 0, 2, 0)
    with pytest.raises(ValueError):
        fit(alternating, 2, -1, 0)


def test_minimal_period_refolds():
    q = fit(alternating, 6, 2, 0)  # period 6 stated, true period 2
    p, folded = minimal_period(q)
    assert p == 2
    assert folded.period == 2
    for n in range(30):
        assert folded(n) == alternating(n)
    # an aperiodic-in-6 function keeps its period
    q2 = fit(lambda n: n % 3, 3, 0, 0)
    assert minimal_period(q2)[0] == 3


def test_predicted_leading_coefficients():
    S = new_semigroup((6, 9, 20))
    assert predicted_leading_coefficient(S, "count") == Fraction(1, 2160)
    assert predicted_leading_coefficient(S, "support-edges") == Fraction(1, 9331200)
    assert predicted_leading_coefficient(S, "trade-edges", 2) == Fraction(1, 1080)
    T = new_semigroup((6, 10, 15))
    assert predicted_leading_coefficient(T, "trade-edges", 2) == Fraction(1, 900)
    with pytest.raises(ValueError):
        predicted_leading_coefficient(S, "trade-edges")
    with pytest.raises(ValueError):
        predicted_leading_coefficient(S, "nonsense")


def test_denumerant_fit_golden():
    S = new_semigroup((6, 9, 20))
    q = fit(S.count_factorizations, 180, 2, 181)
    assert q.degree == 2
    assert all(q.leading(r) == Fraction(1, 2160) for r in range(180))
    T = new_semigroup((4, 6))
    qt = fit(T.count_factorizations, 12, 1, 24)
    assert all(qt.leading(r) == Fraction(1, 12) for r in range(0, 12, 2))
    assert all(qt.is_zero_on(r) for r in range(1, 12, 2))


def test_verify_degree_period_claims_passes():
    S = new_semigroup((6, 10, 15))
    rho = minimal_presentation(S)
    report = verify_degree_period_claims(S, rho)
    assert report.passed, "\n".join(report.lines())
    assert len(report.checks) == 9  # three checks per counting function
    assert all(line.startswith("[PASS]") for line in report.lines())


def test_default_fit_start_past_betti(s=None):
    S = new_semigroup((6, 9, 20))
    rho = minimal_presentation(S)
    start = default_fit_start(S, rho)
    assert start > max(rho.betti_values)
    assert start > S.frobenius_reduced


def test_csv_roundtrip(tmp_path):
    path = tmp_path / "seq.csv"
    path.write_text("n,value\n0,1\n1,3/2\n2,4\n")
    table = load_sequence_csv(str(path))
    assert table == {0: Fraction(1), 1: Fraction(3, 2), 2: Fraction(4)}
    oracle = table_oracle(table)
    assert oracle(1) == Fraction(3, 2)
    with pytest.raises(ValueError):
        oracle(5)


def test_quasipoly_json_uses_rational_strings():
    q = Quasipolynomial(2, 1, {0: (Fraction(1, 3), Fraction(2)), 1: (Fraction(0), Fraction(0))}, 0)
    payload = quasipoly_to_json(q)
    assert payload["coeffs"]["0"] == ["1/3", "2"]
    json.dumps(payload)
