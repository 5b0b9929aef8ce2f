import json

import stabcond


def test_torus_counts():
    m = stabcond.build("zd", 2, 2, d=2)
    assert stabcond.gsd(m) == (4, 4, 4)
    big = stabcond.build("zd", 3, 3, d=4)
    assert stabcond.gsd(big) == (16, 16, None)


def test_condense_keeps_degeneracy():
    m = stabcond.build("zd", 3, 3, d=4)
    job = {"lattice": {"width": 3, "height": 3, "wrap_x": True, "wrap_y": True},
           "region": {"box": [0, 0, 1, 1]}, "labels": ["e2m2"]}
    out = stabcond.condense(m, json.dumps(job))
    assert stabcond.gsd(out)[0] == 16


def test_surface_code_distance():
    m = stabcond.build("zd_boundaries", 3, 3, lattice="disk",
                       sides=("rough", "rough", "smooth", "smooth"))
    r = stabcond.distance(m, 4)
    assert r["gsd"] == "2" and r["d_X"] == 4 and r["d_Z"] == 3 and r["certified"]


def test_lagrangians_and_errors():
    assert len(stabcond.lagrangian_subgroups("dz4")) == 3
    try:
        stabcond.contract_network('{"theories": [], "nodes": [], "links": []}')
    except ValueError:
        pass
    else:
        raise AssertionError("empty network accepted")
