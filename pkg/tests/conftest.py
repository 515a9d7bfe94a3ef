import pytest

from racgk.graphs import Graph


def complete_graph(n):
    labels = ["v%d" % i for i in range(n)]
    return Graph(labels, [(labels[i], labels[j])
                          for i in range(n) for j in range(i + 1, n)])


def edgeless_graph(n):
    return Graph(["v%d" % i for i in range(n)], [])


def path_graph(n):
    labels = ["v%d" % i for i in range(n)]
    return Graph(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def cycle_graph(n):
    labels = ["v%d" % i for i in range(n)]
    return Graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def petersen_graph():
    outer = ["o%d" % i for i in range(5)]
    inner = ["i%d" % i for i in range(5)]
    edges = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    edges += [(outer[i], inner[i]) for i in range(5)]
    return Graph(outer + inner, edges)


def graph_suite():
    """The ten-graph verification suite with known clique counts."""
    return [
        ("K1", complete_graph(1), 2),
        ("K2", complete_graph(2), 4),
        ("K3", complete_graph(3), 8),
        ("E2", edgeless_graph(2), 3),
        ("E3", edgeless_graph(3), 4),
        ("P3", path_graph(3), 6),
        ("P4", path_graph(4), 8),
        ("C4", cycle_graph(4), 9),
        ("C5", cycle_graph(5), 11),
        ("Petersen", petersen_graph(), 26),
    ]


@pytest.fixture(params=graph_suite(), ids=lambda t: t[0])
def suite_entry(request):
    return request.param
