import json

import pytest

import hopfwit

Q = {"kind": "Q"}
GF2 = {"kind": "GFp", "p": 2}


def kc2(field):
    return hopfwit.group_algebra(hopfwit.cyclic_group_table(2), field)


def test_group_algebra_passes_hopf_checks():
    rep = hopfwit.check("hopf", kc2(Q))
    assert rep["ok"]


def test_integral_exists_over_q_and_not_over_gf2():
    w = hopfwit.solve("integral", kc2(Q))
    assert w is not None
    entries = w["data"]["entries"]
    assert entries == [["1/2"], ["1/2"]]
    assert hopfwit.solve("integral", kc2(GF2)) is None


def test_solve_then_verify_round_trip():
    h = kc2(Q)
    w = hopfwit.solve("integral", h)
    rep = hopfwit.verify("integral", h, w)
    assert rep["ok"]


def test_verify_rejects_mismatched_context():
    w = hopfwit.solve("integral", kc2(Q))
    other = hopfwit.sweedler_h4(Q)
    with pytest.raises(ValueError):
        hopfwit.verify("integral", other, w)


def test_sweedler_h4_has_no_normalized_integral():
    h4 = hopfwit.sweedler_h4(Q)
    assert hopfwit.check("hopf", h4)["ok"]
    assert hopfwit.solve("integral", h4) is None
    assert hopfwit.solve("dual_integral", h4) is None


def test_theta_on_the_yetter_drinfeld_entwining():
    e = hopfwit.yetter_drinfeld_entwining(kc2(Q))
    assert hopfwit.check("entwining", e)["ok"]
    th = hopfwit.solve("theta", e)
    assert th is not None
    assert th["data"]["entries"] == [["1", "0", "0", "1"], ["0", "0", "0", "0"]]


def test_transport_between_total_integral_and_theta():
    h = kc2(Q)
    relhopf = {"L": h, "A": h, "coactionA": {"dim": 2, "rho": _regular_coaction(h)}}
    phi = hopfwit.solve("total_integral", relhopf)
    assert phi is not None
    theta = hopfwit.transport("totalintegral_to_theta", relhopf, phi)
    assert theta["tag"] == "theta"
    back = hopfwit.transport("theta_to_totalintegral", relhopf, theta)
    assert back["tag"] == "total_integral"


def _regular_coaction(h):
    # the regular coaction of a group algebra: rho = comultiplication matrix
    n = h["dim"]
    rho = [["0"] * n for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                rho[j * n + k][i] = h["comult"][i][j][k]
    return rho


def test_catalog_subset_passes():
    rep = hopfwit.catalog("hopf/kC2")
    assert rep["ok"]
    assert any(r["entry"] == "hopf/kC2/GF2" and r["solver"] == "integral" and
               r["outcome"] == "NotExists" for r in rep["results"])


def test_catalog_entry_names_listed():
    names = hopfwit.catalog_entries()
    assert "hopf/H4/Q" in names
    assert "ext/F2u" in names
