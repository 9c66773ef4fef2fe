//! Canonical example spaces used by tests and the `corpus` CLI runner.

use std::collections::BTreeSet;

use crate::cubulation::{walls_from_graph, CubeComplex, Graph, Wall, WalledSpace};

/// `n` collinear points with the `n-1` threshold walls between them;
/// wall i's positive side is everything past position i.
pub fn path_space(n: usize) -> WalledSpace {
    let points: Vec<String> = (0..n).map(|i| format!("P{i}")).collect();
    let walls = (0..n.saturating_sub(1))
        .map(|i| Wall { name: format!("w{i}"), positive: (i + 1..n).collect() })
        .collect();
    WalledSpace { points, walls }
}

/// m×n lattice points with the coordinate threshold walls; the dual
/// complex is the m×n grid.
pub fn grid_space(m: usize, n: usize) -> WalledSpace {
    let mut points = Vec::new();
    for i in 0..m {
        for j in 0..n {
            points.push(format!("{i},{j}"));
        }
    }
    let at = |i: usize, j: usize| i * n + j;
    let mut walls = Vec::new();
    for t in 1..m {
        let positive: BTreeSet<usize> =
            (t..m).flat_map(|i| (0..n).map(move |j| at(i, j))).collect();
        walls.push(Wall { name: format!("x{t}"), positive });
    }
    for t in 1..n {
        let positive: BTreeSet<usize> =
            (0..m).flat_map(|i| (t..n).map(move |j| at(i, j))).collect();
        walls.push(Wall { name: format!("y{t}"), positive });
    }
    WalledSpace { points, walls }
}

/// Center point and three one-point legs; each wall cuts off one leg
/// and its positive side contains the center.
pub fn tripod_space() -> WalledSpace {
    let points = vec!["C".into(), "A".into(), "B".into(), "D".into()];
    let walls = (0..3)
        .map(|w| Wall {
            name: format!("w{w}"),
            positive: (0..4).filter(|&p| p != w + 1).collect(),
        })
        .collect();
    WalledSpace { points, walls }
}

/// Seven of the eight octants of three coordinate walls; the missing
/// all-positive corner is restored by the cubical completion.
pub fn seven_octants() -> WalledSpace {
    let points: Vec<String> = (0u32..7).map(|p| format!("O{p}")).collect();
    let walls = (0..3)
        .map(|w| Wall {
            name: format!("w{w}"),
            positive: (0..7usize).filter(|p| (p >> w) & 1 == 1).collect(),
        })
        .collect();
    WalledSpace { points, walls }
}

/// 1-skeleton of the d-cube, vertices named by their bit strings.
pub fn hypercube_graph(d: usize) -> Graph {
    let name = |v: usize| {
        (0..d).map(|i| if (v >> i) & 1 == 1 { '1' } else { '0' }).collect::<String>()
    };
    let mut pairs = Vec::new();
    for v in 0..1usize << d {
        for i in 0..d {
            let u = v ^ (1 << i);
            if v < u {
                pairs.push((name(v), name(u)));
            }
        }
    }
    Graph::from_edge_pairs(&pairs)
}

/// Edge graph of a complex, vertices named by orientation strings.
pub fn complex_graph(cc: &CubeComplex) -> Graph {
    let pairs: Vec<(String, String)> = cc
        .edges()
        .iter()
        .map(|&(u, v, _)| (cc.vertices()[u].to_string(), cc.vertices()[v].to_string()))
        .collect();
    Graph::from_edge_pairs(&pairs)
}

/// The walled spaces exercised across the test suites.
pub fn walled_spaces() -> Vec<WalledSpace> {
    vec![
        path_space(2),
        path_space(4),
        grid_space(2, 2),
        grid_space(3, 4),
        tripod_space(),
        seven_octants(),
        walls_from_graph(&hypercube_graph(3)).unwrap(),
    ]
}

/// Cubulations of `walled_spaces`.
pub fn complexes() -> Vec<CubeComplex> {
    walled_spaces()
        .iter()
        .map(|ws| CubeComplex::median_closure(ws.derive_system().unwrap(), &ws.regions()).unwrap())
        .collect()
}
