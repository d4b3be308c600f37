import numpy as np
import pytest

from groverwalk import named_graph, read_edge_list, unitary_cayley, write_edge_list
from groverwalk.graphs import Graph

# criterion number -> list of (title, passed, detail) from the acceptance module
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


def acceptance_lines() -> list[str]:
    lines = []
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        ok = all(p for _, p, _ in parts)
        title = parts[0][0]
        details = [("FAIL " if not p else "") + d for _, p, d in parts if d]
        suffix = f" [{'; '.join(details)}]" if details else ""
        lines.append(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}{suffix}")
    return lines


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines():
            terminalreporter.write_line(line)


def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def random_tree_edges(n, seed):
    rng = np.random.default_rng(seed)
    return [(int(rng.integers(0, v)), v) for v in range(1, n)]


def barbell_edges():
    # two K4's on {0..3} and {6..9} joined through 4 - 5
    k4a = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    k4b = [(u + 6, v + 6) for u, v in k4a]
    return k4a + k4b + [(3, 4), (4, 5), (5, 6)]


def _edge_text(n, edges):
    return f"{n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges)


@pytest.fixture(scope="session")
def file_graphs(tmp_path_factory):
    """Non-regular graphs ingested through the edge-list reader."""
    d = tmp_path_factory.mktemp("edge_lists")
    specs = {
        "P3": (3, path_edges(3)),
        "P5": (5, path_edges(5)),
        "tree9": (9, random_tree_edges(9, seed=7)),
        "barbell": (10, barbell_edges()),
    }
    out = {}
    for name, (n, edges) in specs.items():
        p = d / f"{name}.txt"
        p.write_text(_edge_text(n, edges), encoding="ascii")
        out[name] = read_edge_list(p)
    star = named_graph("complete_bipartite", [1, 4])
    write_edge_list(star, d / "star.txt")
    out["star"] = read_edge_list(d / "star.txt")
    return out


def regular_corpus() -> dict[str, Graph]:
    return {
        "K2": named_graph("complete", [2]),
        "K3": named_graph("complete", [3]),
        "K4": named_graph("complete", [4]),
        "C4": named_graph("cycle", [4]),
        "C5": named_graph("cycle", [5]),
        "C6": named_graph("cycle", [6]),
        "C8": named_graph("cycle", [8]),
        "K33": named_graph("complete_bipartite", [3]),
        "K222": named_graph("complete_tripartite", [2]),
        "H33": named_graph("hamming", [3, 3]),
        "UC9": unitary_cayley(9),
        "UC10": unitary_cayley(10),
        "UC12": unitary_cayley(12),
    }


@pytest.fixture(scope="session")
def corpus(file_graphs) -> dict[str, Graph]:
    return {**regular_corpus(), **file_graphs}
