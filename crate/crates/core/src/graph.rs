//! Dense undirected simple graphs stored as per-vertex bit rows.
//!
//! [`Graph`] has growable rows and backs everything outside the enumeration
//! oracle. [`SmallGraph`] is the fixed-width (order <= 64) variant used by the
//! canonical labeler and the enumerator.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted by [`Graph`].
pub const MAX_ORDER: usize = 4096;

/// Largest order accepted by [`SmallGraph`].
pub const SMALL_MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        let words = order.div_ceil(64);
        Ok(Graph { order, words, rows: vec![0; order * words] })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for u in 0..order {
            for v in u + 1..order {
                g.set(u, v);
            }
        }
        Ok(g)
    }

    /// The cycle 0-1-...-(n-1)-0. Orders below 3 give a path.
    pub fn cycle(order: usize) -> Result<Self> {
        let mut g = Graph::path(order)?;
        if order >= 3 {
            g.set(0, order - 1);
        }
        Ok(g)
    }

    pub fn path(order: usize) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for v in 1..order {
            g.set(v - 1, v);
        }
        Ok(g)
    }

    /// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("static edge list")
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.set(u, v);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        let ones: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        ones / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Bit row of `v`: bit `u` of word `u / 64` is set iff `u` is a neighbor.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| BitIter(w).map(move |b| i * 64 + b))
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Subgraph induced by `vertices`, relabeled to `0..len` in ascending
    /// vertex order. Duplicates in `vertices` are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut set: Vec<usize> = vertices.to_vec();
        set.sort_unstable();
        set.dedup();
        for &v in &set {
            self.check_vertex(v)?;
        }
        let mut h = Graph::empty(set.len())?;
        for (i, &u) in set.iter().enumerate() {
            for (j, &v) in set.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.set(i, j);
                }
            }
        }
        Ok(h)
    }

    /// `self + other`; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.order;
        let mut g = Graph::empty(off + other.order)?;
        for (u, v) in self.edges() {
            g.set(u, v);
        }
        for (u, v) in other.edges() {
            g.set(u + off, v + off);
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.order {
            for v in 0..other.order {
                g.set(u, self.order + v);
            }
        }
        Ok(g)
    }

    /// Connected components as ascending vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut comps = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True for order 1 as well; false for the empty graph.
    pub fn is_connected(&self) -> bool {
        self.order > 0 && self.components().len() == 1
    }

    /// Human-readable edge list: `"n m"` then one `"u v"` line per edge.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.order, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::EdgeList("missing header".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::EdgeList(format!("header announces {m} edges, found {}", edges.len())));
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.size() != m {
            return Err(Error::EdgeList("duplicate edges".into()));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList(format!("malformed line {line:?}"))),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.order, self.edges())
    }
}

/// Iterator over set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Fixed-width graph with a single `u64` row per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    order: usize,
    rows: [u64; SMALL_MAX_ORDER],
}

impl SmallGraph {
    pub fn empty(order: usize) -> Result<Self> {
        if order > SMALL_MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: SMALL_MAX_ORDER });
        }
        Ok(SmallGraph { order, rows: [0; SMALL_MAX_ORDER] })
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        let mut s = SmallGraph::empty(g.order())?;
        for v in 0..g.order() {
            s.rows[v] = g.row(v).first().copied().unwrap_or(0);
        }
        Ok(s)
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.order).expect("order <= 64");
        for (u, v) in self.edges() {
            g.set(u, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn size(&self) -> usize {
        self.rows[..self.order].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Panics if `u == v` or either endpoint is out of range.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.order && v < self.order);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            out.extend(BitIter(self.rows[u] >> u >> 1).map(|d| (u, u + 1 + d)));
        }
        out
    }

    /// Appends a vertex adjacent to the vertices in `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> SmallGraph {
        let mut g = *self;
        let v = g.order;
        assert!(v < SMALL_MAX_ORDER);
        debug_assert!(neighbors >> v == 0);
        g.order += 1;
        g.rows[v] = neighbors;
        for u in BitIter(neighbors) {
            g.rows[u] |= 1 << v;
        }
        g
    }

    /// Deletes `v`, shifting later vertices down by one.
    pub fn without_vertex(&self, v: usize) -> SmallGraph {
        let low = (1u64 << v) - 1;
        let squeeze = |r: u64| (r & low) | ((r >> 1) & !low);
        let mut g = SmallGraph { order: self.order - 1, rows: [0; SMALL_MAX_ORDER] };
        for u in 0..self.order {
            if u != v {
                g.rows[if u < v { u } else { u - 1 }] = squeeze(self.rows[u]);
            }
        }
        g
    }

    /// Relabels so that new vertex `i` is old vertex `lab[i]`.
    pub fn permuted(&self, lab: &[usize]) -> SmallGraph {
        let mut pos = [0usize; SMALL_MAX_ORDER];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = SmallGraph { order: self.order, rows: [0; SMALL_MAX_ORDER] };
        for (i, &v) in lab.iter().enumerate() {
            let mut r = 0u64;
            for u in BitIter(self.rows[v]) {
                r |= 1 << pos[u];
            }
            g.rows[i] = r;
        }
        g
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({}, {:?})", self.order, self.edges())
    }
}
