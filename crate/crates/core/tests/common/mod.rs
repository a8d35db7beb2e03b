//! Reference computations written straight from the definitions, sharing
//! no code with the library. Slow but obviously correct.

#![allow(dead_code)]

use std::collections::VecDeque;

pub type Edges = Vec<(usize, usize)>;

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

pub fn distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let adj = adjacency(n, edges);
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &adj[x] {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    distances(n, edges)[0].iter().all(|&d| d != usize::MAX)
}

pub fn diameter(n: usize, edges: &[(usize, usize)]) -> usize {
    distances(n, edges).iter().flatten().copied().max().unwrap_or(0)
}

/// Every index value the checks need, in quarters where halves can occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Values {
    pub wiener: i64,
    pub edge_wiener_min: i64,
    pub edge_wiener_line: i64,
    pub szeged: i64,
    pub revised_szeged_q: i64,
    pub edge_szeged: i64,
    pub revised_edge_szeged_q: i64,
}

pub fn values(n: usize, edges: &[(usize, usize)]) -> Values {
    let d = distances(n, edges);
    let m = edges.len();
    let wiener = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).map(|(u, v)| d[u][v] as i64).sum();
    let ev = |e: (usize, usize), w: usize| d[e.0][w].min(d[e.1][w]);
    let mut edge_wiener_min = 0;
    for i in 0..m {
        for j in i + 1..m {
            let (e, f) = (edges[i], edges[j]);
            edge_wiener_min += ev(e, f.0).min(ev(e, f.1)) as i64;
        }
    }
    // distances in the line graph, by BFS over edges sharing an endpoint
    let mut edge_wiener_line = 0;
    for s in 0..m {
        let mut dist = vec![usize::MAX; m];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for y in 0..m {
                let (a, b) = (edges[x], edges[y]);
                let touch = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
                if touch && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        edge_wiener_line += dist[s + 1..].iter().sum::<usize>() as i64;
    }
    let (mut szeged, mut revised_szeged_q, mut edge_szeged, mut revised_edge_szeged_q) = (0, 0, 0, 0);
    for &(u, v) in edges {
        let (mut nu, mut nv, mut n0) = (0i64, 0i64, 0i64);
        for w in 0..n {
            match d[u][w].cmp(&d[v][w]) {
                std::cmp::Ordering::Less => nu += 1,
                std::cmp::Ordering::Greater => nv += 1,
                std::cmp::Ordering::Equal => n0 += 1,
            }
        }
        szeged += nu * nv;
        revised_szeged_q += (2 * nu + n0) * (2 * nv + n0);
        let (mut mu, mut mv, mut m0) = (0i64, 0i64, 0i64);
        for &f in edges {
            let (du, dv) = (ev(f, u), ev(f, v));
            match du.cmp(&dv) {
                std::cmp::Ordering::Less => mu += 1,
                std::cmp::Ordering::Greater => mv += 1,
                std::cmp::Ordering::Equal => m0 += 1,
            }
        }
        edge_szeged += mu * mv;
        revised_edge_szeged_q += (2 * mu + m0) * (2 * mv + m0);
    }
    Values { wiener, edge_wiener_min, edge_wiener_line, szeged, revised_szeged_q, edge_szeged, revised_edge_szeged_q }
}

/// `Σ (2m_u + m_0)(2m_v + m_0)`, i.e. four times the revised edge Szeged index.
pub fn revised_edge_szeged_q(n: usize, edges: &[(usize, usize)]) -> i64 {
    values(n, edges).revised_edge_szeged_q
}

/// `m³ − Σ (m_u − m_v)²`, i.e. four times the right-hand side of the
/// square-sum identity, computed from the oracle's partitions.
pub fn square_sum_q(n: usize, edges: &[(usize, usize)]) -> i64 {
    let d = distances(n, edges);
    let ev = |e: (usize, usize), w: usize| d[e.0][w].min(d[e.1][w]);
    let m = edges.len() as i64;
    let mut s = 0;
    for &(u, v) in edges {
        let (mut mu, mut mv) = (0i64, 0i64);
        for &f in edges {
            let (du, dv) = (ev(f, u), ev(f, v));
            if du < dv {
                mu += 1;
            } else if dv < du {
                mv += 1;
            }
        }
        s += (mu - mv) * (mu - mv);
    }
    m * m * m - s
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize, blocked: &[bool]) -> String {
    let mut kids: Vec<String> =
        adj[v].iter().filter(|&&w| w != parent && !blocked[w]).map(|&w| ahu(adj, w, v, blocked)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical form of a tree: the smallest AHU string over all roots.
pub fn tree_canon(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    let blocked = vec![false; n];
    (0..n).map(|r| ahu(&adj, r, usize::MAX, &blocked)).min().unwrap()
}

/// Canonical form of a unicyclic graph: strip leaves to find the cycle,
/// encode each hanging tree by AHU, and take the least reading of the
/// cyclic sequence over rotations and reflections.
pub fn unicyclic_canon(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &w in &adj[v] {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let on_cycle: Vec<bool> = removed.iter().map(|r| !r).collect();
    let start = (0..n).find(|&v| on_cycle[v]).expect("a cycle");
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut at = start;
    loop {
        let next = *adj[at].iter().find(|&&w| on_cycle[w] && w != prev && !(cycle.len() == 1 && w == prev)).unwrap();
        if next == start {
            break;
        }
        cycle.push(next);
        prev = at;
        at = next;
        if cycle.len() > n {
            panic!("cycle walk did not close");
        }
    }
    let codes: Vec<String> = cycle.iter().map(|&c| ahu(&adj, c, usize::MAX, &on_cycle)).collect();
    let g = codes.len();
    let mut best: Option<Vec<String>> = None;
    for r in 0..g {
        for rev in [false, true] {
            let seq: Vec<String> =
                (0..g).map(|k| if rev { codes[(r + g - k) % g].clone() } else { codes[(r + k) % g].clone() }).collect();
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
        }
    }
    format!("{g}:{}", best.unwrap().join(","))
}

/// Calls `f` on every labelled connected graph on `n` vertices with `n`
/// edges, running over all `n`-subsets of the possible edges.
pub fn for_each_labelled_unicyclic<F: FnMut(&[(usize, usize)])>(n: usize, mut f: F) {
    let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut chosen = Vec::with_capacity(n);
    fn rec<F: FnMut(&[(usize, usize)])>(all: &[(usize, usize)], from: usize, n: usize, chosen: &mut Vec<(usize, usize)>, f: &mut F) {
        if chosen.len() == n {
            if connected_uf(n, chosen) {
                f(chosen);
            }
            return;
        }
        for i in from..all.len() {
            if all.len() - i < n - chosen.len() {
                break;
            }
            chosen.push(all[i]);
            rec(all, i + 1, n, chosen, f);
            chosen.pop();
        }
    }
    rec(&all, 0, n, &mut chosen, &mut f);
}

fn connected_uf(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut comps = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps == 1
}

/// Line printed by every acceptance check.
pub fn verdict(criterion: usize, title: &str, pass: bool, detail: &str) {
    println!("criterion {criterion} [{}] {title}: {detail}", if pass { "PASS" } else { "FAIL" });
}
