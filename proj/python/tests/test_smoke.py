import json

import numpy as np
import pytest

import orbitcalc


def test_su2_algebra():
    a = orbitcalc.builtin("su2")
    assert a.dim == 3
    assert a.structure_constant(0, 1, 2) == pytest.approx(-1.0)
    e = np.eye(3, dtype=complex)
    assert np.allclose(a.bracket(e[0], e[1]), -e[2])
    assert a.killing(e[2], e[2]).real == pytest.approx(2.0)
    assert all(ok for ok, _ in a.check().values())


def test_root_system():
    rs = orbitcalc.root_system("su3")
    assert rs.rank == 2
    assert rs.num_roots == 6
    assert np.array_equal(rs.cartan_matrix, [[2, -1], [-1, 2]])
    assert max(rs.triple_residuals()) < 1e-9
    h, e, f = rs.triple(0)
    assert np.allclose(f, -np.conj(e))


def test_irrep_matches_oracles():
    rs = orbitcalc.root_system("su3")
    r = orbitcalc.build_irrep(rs, [1, 1])
    assert r.dim == 8 == orbitcalc.weyl_dimension(rs, [1, 1])
    computed = {tuple(w): m for w, m in r.weights}
    oracle = orbitcalc.freudenthal_multiplicities(rs, [1, 1])
    assert computed == oracle
    for m in r.matrices:
        assert np.allclose(m, -m.conj().T)


def test_orbit():
    d = orbitcalc.orbit(orbitcalc.root_system("su3"), [1, 0])
    assert (d["dim_k"], d["dim_m"]) == (4, 4)
    assert d["passed"]
    assert np.allclose(d["labels"], [1, 0], atol=1e-7)
    assert np.allclose(d["lowering_norms"], d["labels"], atol=1e-7)


@pytest.mark.parametrize(
    "name,labels,dim_q",
    [("su2", [1], 3), ("su2", [4], 3), ("su3", [1, 1], 8), ("su2+su2", [1, 0], 3), ("su3", [0, 0], 0)],
)
def test_verify(name, labels, dim_q):
    d = orbitcalc.verify(orbitcalc.root_system(name), labels)
    assert d["verdict"]
    assert d["dim_Q"] == d["dim_g_lambda"] == dim_q
    assert all(w["passed"] for w in d["witnesses"])
    assert d["trivial"] == (dim_q == 0)


def test_bimodule_skipped_over_budget():
    d = orbitcalc.verify(orbitcalc.root_system("su3"), [1, 1], budget=10)
    assert d["dim_bimodule"] is None
    assert d["verdict"]


def test_errors():
    rs = orbitcalc.root_system("su3")
    with pytest.raises(orbitcalc.InvalidWeight):
        orbitcalc.build_irrep(rs, [1])
    with pytest.raises(orbitcalc.SpecError):
        orbitcalc.builtin("e8")
    with pytest.raises(orbitcalc.OrbitcalcError):
        orbitcalc.algebra_from_json("{")


def test_json_roundtrip():
    a = orbitcalc.builtin("so5")
    b = orbitcalc.algebra_from_json(a.to_json())
    assert b.dim == 10
    doc = json.loads(a.to_json())
    assert doc["dim"] == 10
