//! Vertex connectivity via unit-capacity flows, and block decomposition.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Residual network of the vertex-split digraph: vertex `v` becomes
/// `in(v) = 2v` and `out(v) = 2v + 1` joined by a unit arc, and each edge
/// `uv` becomes arcs `out(u) -> in(v)` and `out(v) -> in(u)`.
struct SplitNetwork {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u8>,
    initial: Vec<u8>,
}

const NONE: usize = usize::MAX;

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let nodes = 2 * g.order();
        let mut net = SplitNetwork {
            head: vec![NONE; nodes],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
        };
        for v in 0..g.order() {
            net.arc(2 * v, 2 * v + 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v);
            net.arc(2 * v + 1, 2 * u);
        }
        net.initial = net.cap.clone();
        net
    }

    fn arc(&mut self, a: usize, b: usize) {
        for (from, to, c) in [(a, b, 1), (b, a, 0)] {
            self.to.push(to);
            self.cap.push(c);
            self.next.push(self.head[from]);
            self.head[from] = self.to.len() - 1;
        }
    }

    /// Number of internally disjoint `s`-`t` paths, capped at `limit`.
    fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.initial);
        let (src, sink) = (2 * s + 1, 2 * t);
        let nodes = self.head.len();
        let mut via = vec![NONE; nodes];
        let mut queue = Vec::with_capacity(nodes);
        let mut flow = 0;
        while flow < limit {
            via.fill(NONE);
            queue.clear();
            queue.push(src);
            via[src] = NONE - 1;
            let mut qi = 0;
            'bfs: while qi < queue.len() {
                let x = queue[qi];
                qi += 1;
                let mut e = self.head[x];
                while e != NONE {
                    let y = self.to[e];
                    if self.cap[e] > 0 && via[y] == NONE {
                        via[y] = e;
                        if y == sink {
                            break 'bfs;
                        }
                        queue.push(y);
                    }
                    e = self.next[e];
                }
            }
            if via[sink] == NONE {
                break;
            }
            let mut y = sink;
            while y != src {
                let e = via[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Smallest local connectivity over the pairs that certify `κ(G)`:
/// a minimum-degree vertex `v` against each non-neighbor, and each
/// non-adjacent pair inside `N(v)`. Stops as soon as the value drops below
/// `floor`. Assumes `g` is not complete.
fn min_over_certifying_pairs(g: &Graph, mut best: usize, floor: usize) -> usize {
    let n = g.order();
    let v = (0..n).min_by_key(|&u| g.degree(u)).expect("nonempty");
    let mut net = SplitNetwork::new(g);
    for w in 0..n {
        if w != v && !g.has_edge(v, w) {
            best = best.min(net.disjoint_paths(v, w, best));
            if best < floor {
                return best;
            }
        }
    }
    let nb: Vec<usize> = g.neighbors(v).collect();
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(net.disjoint_paths(x, y, best));
                if best < floor {
                    return best;
                }
            }
        }
    }
    best
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * n.saturating_sub(1) / 2
}

/// `κ(G)`: `n - 1` for complete graphs, otherwise the size of a minimum
/// vertex cut. Zero for disconnected graphs and for `K1`.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if is_complete(g) {
        return Ok(n - 1);
    }
    Ok(min_over_certifying_pairs(g, g.min_degree(), 0))
}

/// `|G| > k` and `κ(G) >= k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.order() <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.min_degree() < k {
        return false;
    }
    is_complete(g) || min_over_certifying_pairs(g, k, k) >= k
}

/// Blocks and cut vertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each ascending; sorted lexicographically.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// Block order `m` mapped to the number of blocks of that order.
    pub histogram: BTreeMap<usize, usize>,
}

impl BlockDecomposition {
    /// Number of blocks of order `m`.
    pub fn count_of_order(&self, m: usize) -> usize {
        self.histogram.get(&m).copied().unwrap_or(0)
    }

    /// Blocks containing `v`.
    pub fn blocks_at(&self, v: usize) -> usize {
        self.blocks.iter().filter(|b| b.binary_search(&v).is_ok()).count()
    }

    /// Tab-separated listing: `block` lines, one `cut_vertices` line and one
    /// `t` line per block order.
    pub fn to_tsv(&self) -> String {
        let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        for b in &self.blocks {
            out.push_str(&format!("block\t{}\n", join(b)));
        }
        out.push_str(&format!("cut_vertices\t{}\n", join(&self.cut_vertices)));
        for (m, t) in &self.histogram {
            out.push_str(&format!("t\t{m}\t{t}\n"));
        }
        out
    }
}

/// Low-point depth-first search with an explicit edge stack.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    // frame: (vertex, parent, next neighbor index)
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    let mut timer = 1;
    let mut root_children = 0;

    while let Some(&mut (u, parent, ref mut idx)) = frames.last_mut() {
        if *idx < adj[u].len() {
            let w = adj[u][*idx];
            *idx += 1;
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((u, w));
                if u == 0 {
                    root_children += 1;
                }
                frames.push((w, u, 0));
            } else if w != parent && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
            continue;
        }
        frames.pop();
        if parent == usize::MAX {
            continue;
        }
        low[parent] = low[parent].min(low[u]);
        if low[u] >= disc[parent] {
            if parent != 0 {
                is_cut[parent] = true;
            }
            let mut block = Vec::new();
            while let Some((a, b)) = edge_stack.pop() {
                block.push(a);
                block.push(b);
                if (a, b) == (parent, u) {
                    break;
                }
            }
            block.sort_unstable();
            block.dedup();
            blocks.push(block);
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }

    blocks.sort();
    let mut histogram = BTreeMap::new();
    for b in &blocks {
        *histogram.entry(b.len()).or_insert(0) += 1;
    }
    Ok(BlockDecomposition { blocks, cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(), histogram })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k4_and_bridge() -> Graph {
        let k4 = Graph::complete(4).unwrap();
        let mut edges = k4.disjoint_union(&k4).unwrap().edges();
        edges.push((3, 4));
        Graph::from_edges(8, &edges).unwrap()
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::complete(5).unwrap()), Ok(4));
        assert_eq!(vertex_connectivity(&Graph::cycle(8).unwrap()), Ok(2));
        assert_eq!(vertex_connectivity(&Graph::petersen()), Ok(3));
        assert_eq!(vertex_connectivity(&Graph::empty(1).unwrap()), Ok(0));
        assert_eq!(vertex_connectivity(&Graph::empty(3).unwrap()), Ok(0));
        assert_eq!(vertex_connectivity(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph));
        assert_eq!(vertex_connectivity(&Graph::path(5).unwrap()), Ok(1));
    }

    #[test]
    fn k_connected_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_k_connected(&k4, 3));
        assert!(!is_k_connected(&k4, 4));
        let bridged = two_k4_and_bridge();
        assert!(is_k_connected(&bridged, 1));
        assert!(!is_k_connected(&bridged, 2));
        assert!(is_k_connected(&Graph::empty(1).unwrap(), 0));
        assert!(!is_k_connected(&Graph::empty(1).unwrap(), 1));
        assert!(is_k_connected(&Graph::petersen(), 3));
        assert!(!is_k_connected(&Graph::petersen(), 4));
    }

    #[test]
    fn block_examples() {
        let d = block_decomposition(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(d.cut_vertices.is_empty());

        let d = block_decomposition(&Graph::path(5).unwrap()).unwrap();
        assert_eq!(d.blocks.len(), 4);
        assert_eq!(d.count_of_order(2), 4);
        assert_eq!(d.cut_vertices, vec![1, 2, 3]);

        let d = block_decomposition(&two_k4_and_bridge()).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3], vec![3, 4], vec![4, 5, 6, 7]]);
        assert_eq!(d.cut_vertices, vec![3, 4]);
        assert_eq!(d.to_tsv(), "block\t0 1 2 3\nblock\t3 4\nblock\t4 5 6 7\ncut_vertices\t3 4\nt\t2\t1\nt\t4\t2\n");

        let d = block_decomposition(&Graph::empty(1).unwrap()).unwrap();
        assert!(d.blocks.is_empty());
        assert_eq!(block_decomposition(&Graph::empty(2).unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn bowtie_root_is_cut_vertex() {
        // two triangles sharing vertex 0
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.cut_vertices, vec![0]);
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(d.blocks_at(0), 2);
    }
}
