import pytest

from topeorth.cycles import SymmetricCycle, find_cycle_with_witness
from topeorth.errors import ValidationFailure
from topeorth.instances import arrangement_instance
from topeorth.signvec import SignVector
from topeorth.verify import ExperimentPlan, PlanError, negative_controls, run_experiment

P = SignVector.parse


def test_worked_pair(cube):
    plan = ExperimentPlan(cube(5), cube(6), first_topes=[P("+-+-+")], second_topes=[P("+-+-+-")])
    res = run_experiment(plan)
    (pair,) = res.pairs
    assert pair["h1"] == [1, -1, -5, 10, -5, -1, 1]
    assert pair["h2"] == [1, 0, -3, 0, 3, 0, -1]
    assert pair["orthogonal"] and pair["raw_value"] == pair["hh_value"] == 0
    assert pair["span1"] == {"member": True, "k": [1, 3], "coefficients": ["-2/3", "5/3"]}
    assert pair["anomalies"] == []


def test_hypercube_sweep(cube):
    res = run_experiment(ExperimentPlan(cube(5), cube(6)))
    assert res.pairs_total == 32 * 64
    assert res.pairs_tested > 0 and res.violations == 0
    assert res.pairs_tested + res.pairs_skipped == res.pairs_total
    assert res.passed and not res.control


def test_equal_parity_finds_witness(cube):
    res = run_experiment(ExperimentPlan(cube(5), cube(7), parity_enforced=False))
    assert res.control and res.passed
    assert res.nonzero
    assert all("nonzero_product" in p["anomalies"] for p in res.nonzero)


def test_min_q_three_control(cube):
    res = negative_controls(ExperimentPlan(cube(3), cube(6), min_q=3))
    assert res.anomalous
    flagged = {a for p in res.anomalous for a in p["anomalies"]}
    assert "first:vertex_count" in flagged


def test_min_q_one_degenerate(cube):
    _, c3 = cube(3)
    res = negative_controls(ExperimentPlan(cube(3), cube(6), min_q=1, first_topes=[c3[0]]))
    assert res.pairs_tested == 64
    assert all(p["orthogonal"] and "degenerate" in p["anomalies"] for p in res.pairs)


def test_plan_validation(cube):
    with pytest.raises(PlanError, match="parity"):
        run_experiment(ExperimentPlan(cube(4), cube(6)))
    with pytest.raises(PlanError, match="s < t"):
        run_experiment(ExperimentPlan(cube(6), cube(5)))
    with pytest.raises(PlanError, match="odd"):
        run_experiment(ExperimentPlan(cube(5), cube(6), min_q=4))
    with pytest.raises(PlanError):
        negative_controls(ExperimentPlan(cube(5), cube(6)))
    h6, c6 = cube(6)
    broken = SymmetricCycle(h6, c6.vertices[:6] + tuple(c6.vertices[:6]))
    with pytest.raises(ValidationFailure):
        run_experiment(ExperimentPlan(cube(5), (h6, broken)))


def test_order_independent(cube):
    h5, _ = cube(5)
    h6, _ = cube(6)
    a = run_experiment(ExperimentPlan(cube(5), cube(6), first_topes=list(h5.topes),
                                      second_topes=list(h6.topes)))
    b = run_experiment(ExperimentPlan(cube(5), cube(6), first_topes=list(reversed(h5.topes)),
                                      second_topes=list(reversed(h6.topes))))
    assert a.pairs == b.pairs and a.counts() == b.counts()


@pytest.mark.parametrize("first, second", [((3, 5), (3, 6)), ((4, 5), (4, 6)), ((4, 7), (4, 8))])
def test_realizable_sweeps(first, second):
    sides = []
    for d, n in (first, second):
        inst = arrangement_instance(d, n, seed=0)
        sides.append((inst, find_cycle_with_witness(inst, 5)))
    res = run_experiment(ExperimentPlan(*sides))
    assert res.pairs_tested > 0 and res.violations == 0


def test_report_formats(cube):
    res = run_experiment(ExperimentPlan(cube(5), cube(6)))
    js = res.to_json()
    assert js.endswith("\n") and '"violations": 0' in js
    rows = res.to_csv().splitlines()
    assert rows[0].startswith("tope1,tope2,s,t,q1,q2,f1,f2")
    assert len(rows) == res.pairs_tested + 1


HYPERCUBE_PAIRS = [(s, t) for s in range(3, 9) for t in range(s + 1, 9) if (t - s) % 2]


@pytest.mark.parametrize("s, t", HYPERCUBE_PAIRS)
def test_no_violations_hypercube_family(cube, s, t):
    res = run_experiment(ExperimentPlan(cube(s), cube(t)))
    assert res.violations == 0


@pytest.mark.parametrize("first, second", [((3, 5), (4, 8)), ((4, 7), (3, 8)), ((4, 5), (4, 8))])
def test_no_violations_realizable_family(first, second):
    sides = []
    for d, n in (first, second):
        inst = arrangement_instance(d, n, seed=1)
        sides.append((inst, find_cycle_with_witness(inst, 5)))
    res = run_experiment(ExperimentPlan(*sides))
    assert res.pairs_tested > 0 and res.violations == 0
