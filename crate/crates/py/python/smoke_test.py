"""Smoke test for the pbei extension module.

Build and install first, e.g. `maturin develop --release` in crates/py.
"""

import json

import pbei


def main():
    k3 = pbei.complete_ideal(3)
    assert k3.generators() == ["x1*x2 - y1*y2", "x1*x3 - y1*y3", "x2*x3 - y2*y3"]
    assert k3.hilbert_numerator() == [1, 0, -3, 0, 3, 0, -1]
    assert k3.hilbert_numerator("lex") == k3.hilbert_numerator()
    assert k3.hilbert_function(6) == [1, 6, 18, 38, 66, 102, 146]
    assert k3.krull_dim() == 3

    k4 = pbei.complete_ideal(4)
    assert k4.hilbert_numerator() == pbei.closed_form_numerator(4)
    assert pbei.extremal_betti(4) == 3
    assert pbei.predicted_invariants(5)["pd"] == 7

    table = k3.betti()
    assert table.entries() == {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1}
    assert (table.reg(), table.pd(), table.depth()) == (3, 3, 3)
    assert table.alternating_sum() == [1, 0, -3, 0, 3, 0, -1]

    tri = pbei.graph_ideal(3, [(1, 2), (2, 3), (1, 3)])
    assert tri == k3
    assert tri.contains("x1*x2 - y1*y2")
    assert not tri.contains("x1")

    ring_ideal = pbei.Ideal(3, ["x1*x2 - y1*y2", "x1*x3 - y1*y3", "x2*x3 - y2*y3"])
    assert ring_ideal == k3
    p13 = pbei.complete_ideal(3, "prime:1,3")
    assert k3.colon("x1*y3 - x3*y1") == p13

    try:
        pbei.complete_ideal(3, "nonsense")
    except ValueError as e:
        assert "unknown ideal kind" in str(e)
    else:
        raise AssertionError("expected ValueError")

    report = json.loads(pbei.verify(3, 3, "HP-CLOSED,FIXTURE-7"))
    assert report["summary"] == {"pass": 2, "fail": 0, "skipped": 0}
    poisoned = json.loads(pbei.verify(4, 4, "HP-CLOSED", poison=True))
    assert poisoned["summary"]["fail"] == 1

    print("smoke test ok")


if __name__ == "__main__":
    main()
