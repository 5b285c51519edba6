//! Local subgraphs and the locally foresty / locally nonforesty predicates.

use crate::error::Result;
use crate::graph::{BitIter, Graph, SmallGraph};

/// `L(v)`: the subgraph induced by the open neighborhood of `v`, with the
/// neighbors relabeled in ascending order.
pub fn local_subgraph(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let nb: Vec<usize> = g.neighbors(v).collect();
    g.induced_subgraph(&nb)
}

/// Acyclicity by edge count: a graph is a forest iff `e = n - components`.
pub fn is_forest(g: &Graph) -> bool {
    g.size() + g.components().len() == g.order()
}

/// Every local subgraph contains a cycle. Holds vacuously on the empty graph.
pub fn is_locally_nonforesty(g: &Graph) -> bool {
    (0..g.order()).all(|v| !is_forest(&local_subgraph(g, v).expect("vertex in range")))
}

/// Every local subgraph is a forest.
pub fn is_locally_foresty(g: &Graph) -> bool {
    (0..g.order()).all(|v| is_forest(&local_subgraph(g, v).expect("vertex in range")))
}

/// Vertices that are the hub of some wheel, i.e. whose neighborhood carries a
/// cycle. Found by depth-first search for a back edge inside `N(v)`, without
/// building the local subgraph or counting edges.
pub fn wheel_hubs(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| cycle_in_neighborhood(g, v).is_some()).collect()
}

/// A cycle (as a vertex sequence) among the neighbors of `hub`, if any.
pub fn cycle_in_neighborhood(g: &Graph, hub: usize) -> Option<Vec<usize>> {
    let nb: Vec<usize> = g.neighbors(hub).collect();
    let inside = |u: usize| g.has_edge(hub, u);
    let mut parent: Vec<Option<usize>> = vec![None; g.order()];
    let mut visited = vec![false; g.order()];

    for &root in &nb {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        // explicit stack of (vertex, neighbor iterator position)
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(root, g.neighbors(root).filter(|&w| inside(w)).collect())];
        while let Some((u, pending)) = stack.last_mut() {
            let u = *u;
            let Some(w) = pending.pop() else {
                stack.pop();
                continue;
            };
            if Some(w) == parent[u] {
                continue;
            }
            if visited[w] {
                // back edge u-w closes a cycle w .. u
                let mut cyc = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x]?;
                    cyc.push(x);
                }
                return Some(cyc);
            }
            visited[w] = true;
            parent[w] = Some(u);
            stack.push((w, g.neighbors(w).filter(|&y| inside(y)).collect()));
        }
    }
    None
}

// Bit-row versions used on the enumeration hot path.

#[inline]
fn mask_components(g: &SmallGraph, set: u64) -> usize {
    let mut left = set;
    let mut comps = 0;
    while left != 0 {
        let mut frontier = left & left.wrapping_neg();
        let mut comp = frontier;
        while frontier != 0 {
            let mut next = 0;
            for u in BitIter(frontier) {
                next |= g.row(u);
            }
            frontier = next & set & !comp;
            comp |= frontier;
        }
        left &= !comp;
        comps += 1;
    }
    comps
}

#[inline]
fn mask_edges(g: &SmallGraph, set: u64) -> usize {
    BitIter(set).map(|u| (g.row(u) & set).count_ones() as usize).sum::<usize>() / 2
}

pub(crate) fn small_local_has_cycle(g: &SmallGraph, v: usize) -> bool {
    let nb = g.row(v);
    let k = nb.count_ones() as usize;
    let e = mask_edges(g, nb);
    // acyclic iff e = k - components
    e + mask_components(g, nb) > k
}

pub(crate) fn small_is_locally_nonforesty(g: &SmallGraph) -> bool {
    (0..g.order()).all(|v| small_local_has_cycle(g, v))
}

/// `L(v)` is a triangle plus an isolated vertex.
pub(crate) fn small_local_is_c3_plus_k1(g: &SmallGraph, v: usize) -> bool {
    let nb = g.row(v);
    if nb.count_ones() != 4 {
        return false;
    }
    let inner: Vec<u32> = BitIter(nb).map(|u| (g.row(u) & nb).count_ones()).collect();
    let mut sorted = inner;
    sorted.sort_unstable();
    sorted == [0, 2, 2, 2]
}

/// Every local subgraph is isomorphic to `C3 + K1`.
pub fn every_local_is_c3_plus_k1(g: &Graph) -> bool {
    match SmallGraph::from_graph(g) {
        Ok(s) => (0..s.order()).all(|v| small_local_is_c3_plus_k1(&s, v)),
        Err(_) => (0..g.order()).all(|v| {
            let l = local_subgraph(g, v).expect("vertex in range");
            let mut d = l.degrees();
            d.sort_unstable();
            d == [0, 2, 2, 2]
        }),
    }
}
