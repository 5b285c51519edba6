//! Canonical labeling for graphs of order at most 16.
//!
//! Partition refinement by neighbor counts, individualization of the first
//! smallest non-singleton cell, and a depth-first search over the resulting
//! tree keeping the leaf with the smallest adjacency code. Automorphisms found
//! at leaves prune the tree: equivalent subtrees are abandoned, and children
//! of first-path nodes in a known orbit are skipped.

use crate::graph::{BitIter, SmallGraph};

pub const CANON_MAX_ORDER: usize = 16;

/// Upper triangle in column order `(0,1), (0,2), (1,2), (0,3), ...`, first
/// pair most significant. Fits in 120 bits for order 16.
pub type Code = u128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub graph: SmallGraph,
    pub code: Code,
    /// `lab[i]` is the input vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
}

/// Adjacency code of `g` under the labeling `lab`.
pub fn code_under(g: &SmallGraph, lab: &[usize]) -> Code {
    let mut code: Code = 0;
    for j in 1..lab.len() {
        let row = g.row(lab[j]);
        for &li in &lab[..j] {
            code = (code << 1) | (row >> li & 1) as Code;
        }
    }
    code
}

/// Code of `g` under its own labeling.
pub fn identity_code(g: &SmallGraph) -> Code {
    let lab: Vec<usize> = (0..g.order()).collect();
    code_under(g, &lab)
}

pub fn canonical_form(g: &SmallGraph) -> Canonical {
    let n = g.order();
    assert!(n <= CANON_MAX_ORDER, "canonical labeling supports order <= {CANON_MAX_ORDER}");
    if n == 0 {
        return Canonical { graph: *g, code: 0, lab: Vec::new() };
    }
    let mut search =
        Search { g, n, first: None, best: None, first_path: Vec::new(), path: Vec::new(), orbits: Vec::new() };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    search.descend(vec![all], true);
    let best = search.best.expect("search reaches at least one leaf");
    let lab: Vec<usize> = best.lab[..n].iter().map(|&v| v as usize).collect();
    Canonical { graph: g.permuted(&lab), code: best.code, lab }
}

pub fn canonical_code(g: &SmallGraph) -> Code {
    canonical_form(g).code
}

pub fn are_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b)
}

/// Refines an ordered partition (cells as vertex masks) until every vertex of
/// a cell has the same number of neighbors in each cell. Cells split in
/// ascending order of their count signature, so the result is equivariant.
pub(crate) fn refine(g: &SmallGraph, cells: &mut Vec<u64>) {
    let mut scratch: Vec<(u64, usize)> = Vec::with_capacity(16);
    loop {
        let before = cells.len();
        if before == g.order() {
            return;
        }
        let mut next = Vec::with_capacity(g.order());
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            scratch.clear();
            for v in BitIter(cell) {
                let row = g.row(v);
                let sig = cells.iter().fold(0u64, |s, &c| (s << 4) | (row & c).count_ones() as u64);
                scratch.push((sig, v));
            }
            scratch.sort_unstable();
            let mut cur = 0u64;
            let mut cur_sig = scratch[0].0;
            for &(sig, v) in &scratch {
                if sig != cur_sig {
                    next.push(cur);
                    cur = 0;
                    cur_sig = sig;
                }
                cur |= 1 << v;
            }
            next.push(cur);
        }
        *cells = next;
        if cells.len() == before {
            return;
        }
    }
}

struct Leaf {
    lab: [u8; CANON_MAX_ORDER],
    code: Code,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a SmallGraph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<usize>,
    path: Vec<usize>,
    /// Union-find parents, one array per first-path depth, over the
    /// automorphisms found so far that fix that prefix pointwise.
    orbits: Vec<[u8; CANON_MAX_ORDER]>,
}

impl Search<'_> {
    /// Returns `Some(depth)` to unwind to the ancestor at `depth`.
    fn descend(&mut self, mut cells: Vec<u64>, on_first_path: bool) -> Option<usize> {
        refine(self.g, &mut cells);
        if cells.len() == self.n {
            return self.leaf(&cells);
        }
        let depth = self.path.len();
        let (target_idx, target) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");

        let mut explored = 0u64;
        for v in BitIter(target) {
            if on_first_path && explored != 0 && self.in_explored_orbit(depth, v, explored) {
                continue;
            }
            let child_first = on_first_path && explored == 0;
            explored |= 1 << v;
            let mut child = cells.clone();
            child[target_idx] = 1 << v;
            child.insert(target_idx + 1, target & !(1 << v));
            self.path.push(v);
            let jump = self.descend(child, child_first);
            self.path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn in_explored_orbit(&mut self, depth: usize, v: usize, explored: u64) -> bool {
        let Some(uf) = self.orbits.get_mut(depth) else {
            return false;
        };
        let root = find(uf, v);
        BitIter(explored).any(|u| find(uf, u) == root)
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let mut lab = [0u8; CANON_MAX_ORDER];
        for (i, c) in cells.iter().enumerate() {
            lab[i] = c.trailing_zeros() as u8;
        }
        let order: Vec<usize> = lab[..self.n].iter().map(|&v| v as usize).collect();
        let code = code_under(self.g, &order);

        let Some(first) = &self.first else {
            self.first_path = self.path.clone();
            let mut ident = [0u8; CANON_MAX_ORDER];
            for (i, x) in ident.iter_mut().enumerate() {
                *x = i as u8;
            }
            self.orbits = vec![ident; self.first_path.len() + 1];
            self.first = Some(Leaf { lab, code, path: self.path.clone() });
            self.best = Some(Leaf { lab, code, path: self.path.clone() });
            return None;
        };
        if code == first.code {
            let (flab, fpath) = (first.lab, first.path.clone());
            self.record_automorphism(&flab, &lab);
            return Some(common_prefix(&self.path, &fpath));
        }
        let best = self.best.as_ref().expect("set with first");
        if code < best.code {
            self.best = Some(Leaf { lab, code, path: self.path.clone() });
            return None;
        }
        if code == best.code {
            let (blab, bpath) = (best.lab, best.path.clone());
            self.record_automorphism(&blab, &lab);
            return Some(common_prefix(&self.path, &bpath));
        }
        None
    }

    /// `from[i] -> to[i]` is an automorphism.
    fn record_automorphism(&mut self, from: &[u8; CANON_MAX_ORDER], to: &[u8; CANON_MAX_ORDER]) {
        let mut perm = [0u8; CANON_MAX_ORDER];
        for i in 0..self.n {
            perm[from[i] as usize] = to[i];
        }
        for level in 0..self.orbits.len() {
            if level > 0 {
                let v = self.first_path[level - 1];
                if perm[v] as usize != v {
                    break;
                }
            }
            let uf = &mut self.orbits[level];
            for (x, &px) in perm[..self.n].iter().enumerate() {
                let (a, b) = (find(uf, x), find(uf, px as usize));
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    uf[hi] = lo as u8;
                }
            }
        }
    }
}

fn find(uf: &mut [u8; CANON_MAX_ORDER], mut x: usize) -> usize {
    while uf[x] as usize != x {
        let p = uf[x] as usize;
        uf[x] = uf[p];
        x = p;
    }
    x
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
