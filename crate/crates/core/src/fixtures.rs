//! Small reference graphs, labellings and set families with known properties.
//!
//! Vertex `vi` of a description is index `i - 1`, named `"i"`.

use crate::clutter::{validate_clutter, Clutter};
use crate::graph::Graph;
use crate::labelling::Labelling;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    let edges: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edges(n, &edges).expect("fixture edges are valid")
}

/// Labels written as digit strings, e.g. `"234"`.
fn labels(k: usize, words: &[&str]) -> Labelling {
    let labels = words
        .iter()
        .map(|w| w.chars().map(|c| c.to_digit(10).expect("digit label")).collect())
        .collect();
    Labelling::new(k, labels).expect("fixture labels have k symbols")
}

/// Hexagon `1-2-3-4-5-6` with vertex 7 on `5` and `6` and chords `2-6`, `3-5`.
/// Its minimum dominating sets are `{1,5} {2,5} {3,6} {4,6} {5,6}` at distance 1
/// and the singletons `2 3 5 6 7` at distance 2.
pub fn domination_example() -> Graph {
    graph(
        7,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (6, 7), (7, 5), (2, 6), (3, 5)],
    )
}

/// The distance-1 γ-graph of [`domination_example`], vertices named by their sets.
pub fn domination_example_gamma1() -> Graph {
    let names = ["15", "25", "36", "46", "56"].map(String::from).to_vec();
    Graph::with_names(names, &[(0, 1), (0, 4), (1, 4), (4, 2), (4, 3), (2, 3)]).unwrap()
}

/// `K_{2,3}` with parts `{2,4}` and `{1,3,5}`, plus vertex 6 pendant on 4.
pub fn k23_with_pendant() -> Graph {
    graph(6, &[(6, 4), (4, 1), (1, 2), (2, 5), (5, 4), (2, 3), (3, 4)])
}

/// The four minimally unlabellable graphs on five vertices:
/// `K_{2,3}`; `K_2` joined to three independent vertices (the fan `F_{3,2}`);
/// `K_{2,3}` with one edge inside the larger part; `K_5` minus an edge.
pub fn five_vertex_minimal() -> [Graph; 4] {
    [
        graph(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
        graph(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
        graph(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4)]),
        graph(
            5,
            &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (4, 5)],
        ),
    ]
}

/// The four minimally unlabellable graphs on six vertices; the last is the wheel `W_6`.
pub fn six_vertex_minimal() -> [Graph; 4] {
    [
        graph(6, &[(6, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 2), (6, 5)]),
        graph(6, &[(4, 2), (2, 1), (1, 3), (3, 4), (4, 6), (6, 5), (5, 1), (2, 3)]),
        graph(6, &[(1, 2), (2, 5), (5, 4), (4, 1), (1, 3), (3, 6), (5, 6), (6, 4)]),
        graph(
            6,
            &[(6, 3), (3, 1), (1, 2), (2, 5), (5, 4), (5, 6), (6, 4), (4, 1), (2, 4), (4, 3)],
        ),
    ]
}

const HEXAGON_WITH_HUB: [(usize, usize); 8] = [(1, 2), (2, 4), (4, 6), (6, 5), (5, 3), (3, 1), (3, 7), (7, 4)];

/// Hexagon `1-2-4-6-5-3` with vertex 7 joined to the opposite corners 3 and 4.
pub fn seven_vertex_labellable_a() -> (Graph, Labelling) {
    (
        graph(7, &HEXAGON_WITH_HUB),
        labels(3, &["234", "245", "123", "145", "126", "146", "135"]),
    )
}

/// [`seven_vertex_labellable_a`] with the extra edge `7-6`.
pub fn seven_vertex_labellable_b() -> (Graph, Labelling) {
    let mut e = HEXAGON_WITH_HUB.to_vec();
    e.push((7, 6));
    (
        graph(7, &e),
        labels(3, &["245", "235", "246", "356", "126", "136", "346"]),
    )
}

/// [`seven_vertex_labellable_a`] with the extra edge `2-6`: minimally unlabellable.
pub fn seven_vertex_minimal() -> Graph {
    let mut e = HEXAGON_WITH_HUB.to_vec();
    e.push((2, 6));
    graph(7, &e)
}

/// Hexagon `2-3-4-5-6-7` with vertex 1 joined to 2 and 6.
pub fn hexagon_with_ear() -> (Graph, Labelling) {
    (
        graph(7, &[(2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 2), (2, 1), (1, 6)]),
        labels(3, &["234", "123", "135", "145", "456", "246", "126"]),
    )
}

/// `{123, 124}` on `[4]`.
pub fn small_family() -> Clutter {
    validate_clutter(4, &[vec![1, 2, 3], vec![1, 2, 4]]).unwrap()
}

/// Five 4-sets on `[8]` whose blocker has ten 2-sets.
pub fn larger_family() -> Clutter {
    validate_clutter(
        8,
        &[
            vec![1, 2, 3, 4],
            vec![1, 2, 3, 5],
            vec![1, 2, 4, 6],
            vec![2, 3, 5, 7],
            vec![3, 5, 7, 8],
        ],
    )
    .unwrap()
}
