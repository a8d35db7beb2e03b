"""Smoke test for the `szeged` extension module.

Build and install it first:

    pip install --no-build-isolation -e crates/py
    python python/smoke_test.py
"""

from fractions import Fraction

import szeged


def revised_edge_szeged(n, edges):
    """Sz*_e straight from the definition, as an independent check."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def bfs(s):
        dist = {s: 0}
        queue = [s]
        for x in queue:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    d = {v: bfs(v) for v in range(n)}
    total = Fraction(0)
    for u, v in edges:
        mu = mv = m0 = 0
        for x, y in edges:
            du = min(d[u][x], d[u][y])
            dv = min(d[v][x], d[v][y])
            if du < dv:
                mu += 1
            elif dv < du:
                mv += 1
            else:
                m0 += 1
        total += Fraction(2 * mu + m0, 2) * Fraction(2 * mv + m0, 2)
    return total


def main():
    c3 = szeged.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert c3.index() == Fraction(27, 4)
    assert c3.girth() == 3
    assert set(c3.indices()) == set(szeged.INDICES)

    p4 = szeged.Graph.family("path n=4")
    assert p4.index("Sz_e_star") == Fraction(19, 4)
    assert p4.girth() is None

    g = szeged.Graph.family("extremal n=16 d=14")
    assert (g.n, g.diameter(), g.girth()) == (16, 14, 3)
    assert szeged.Graph.from_graph6(g.graph6()) == g
    assert g.index() == revised_edge_szeged(g.n, g.edges())

    report = g.decompose()
    assert report["direct"]["exact"] == report["from_szeged"]["exact"]

    # triangle with a rooted path u3 u2 u1 u0 at vertex 0 and two pendants at u1
    h = szeged.Graph(8, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (4, 7)])
    t = h.transform("shift_pendants k=1")
    assert t["actual_delta"]["exact"] == "24/4" and t["agrees"]

    r = szeged.pair("longest_diameter n=16")
    assert r["actual_delta"]["exact"] == "-95/4" and r["agrees"]

    s = szeged.minimize(9, 4, workers=2)
    assert s["minimum"]["exact"] == "329/4"
    best = szeged.Graph.from_graph6(s["minimizers"][0]["graph6"])
    assert best.index() == revised_edge_szeged(best.n, best.edges())

    try:
        szeged.Graph(3, [(0, 1)])
    except szeged.SzegedError as e:
        assert "Disconnected" in str(e)
    else:
        raise AssertionError("disconnected graph accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
