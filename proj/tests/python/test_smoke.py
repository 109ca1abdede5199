import os

import pytest

import dignet

DATA = os.environ.get("DIGNET_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def vdc_net():
    return dignet.net_from_matrices([[[1, 0], [0, 1]], [[0, 1], [1, 0]]], b=2)


def test_net_construction():
    net = vdc_net()
    assert (net.b, net.s, net.m, net.n) == (2, 2, 2, 2)
    assert net.point_count == 4
    assert net.point(1) == [[1, 0], [0, 1]]  # (1/2, 1/4)


def test_t_value_all_methods():
    net = vdc_net()
    assert dignet.t_value(net) == 0
    assert dignet.t_value(net, method="alg1") == 0
    assert dignet.t_value(net, method="alg2") == 0
    assert dignet.t_value(net, method="oracle") == 0


def test_weight_enumerator():
    net = vdc_net()
    full = dignet.weight_enumerator(net, full=True)
    assert full["coeffs"] == [1, 0, 0, 2, 1]
    assert full["scale"] == 4
    trunc = dignet.weight_enumerator(net)
    assert trunc["coeffs"] == [1, 0, 0]
    assert dignet.dual_minimum_weight(net) == 3


def test_group_nets():
    spec = dignet.GroupSpec([2, 3])
    assert spec.order == 6 and spec.exponent == 6
    # symbol 1 decodes to (1,0), an order-2 element, so the identity matrix
    # under-generates: 4 distinct points with multiplicity 9, and t reflects
    # the multiset
    net = dignet.net_from_matrices([[[1, 0], [0, 1]]], group=[2, 3])
    assert net.point_count == 36
    t = dignet.t_value(net)
    assert t == 2
    assert t == dignet.t_value(net, method="oracle")
    # symbol 3 decodes to (1,1), a generator of the whole group: full grid
    full = dignet.net_from_matrices([[[3, 0], [0, 3]]], group=[2, 3])
    assert dignet.t_value(full) == 0


def test_projection_and_worst_projection():
    net = vdc_net()
    proj = net.project([1])
    assert proj.s == 1
    coords, t = dignet.worst_projection(net, 2)
    assert t == 0 and coords == [1, 2]


def test_lower_bound_vs_oracle():
    net = vdc_net()
    pts = net.points()
    assert dignet.lower_bound(pts, b=2, m=2) == 0
    assert dignet.oracle_t(pts, 2, 2) == 0


def test_sobol_net():
    path = os.path.join(DATA, "joe-kuo-d6.txt")
    net = dignet.sobol_net(path, 5, 5)
    assert net.point_count == 32
    t = dignet.t_value(net)
    assert 0 <= t <= 5
    assert t == dignet.t_value(net, method="oracle")


def test_load_net_file():
    net = dignet.load_net(os.path.join(DATA, "vdc.json"))
    assert dignet.t_value(net) == 0


def test_errors_are_typed():
    with pytest.raises(dignet.DignetError):
        dignet.net_from_matrices([[[2, 0], [0, 1]]], b=2)
    with pytest.raises(dignet.DignetError):
        dignet.t_value(vdc_net(), method="nope")
