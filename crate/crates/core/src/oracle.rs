//! Isomorph-free enumeration of small graphs and the minimality certificates
//! built on it.
//!
//! Generation is canonical augmentation by vertices: a graph of order `j + 1`
//! is accepted as a child of its canonical parent when deleting the new vertex
//! gives the same isomorphism class as deleting the vertex in last canonical
//! position. All accepted copies of a class then share one parent, and the
//! children of each parent are deduplicated by canonical code. Nothing outside
//! the current parent is kept in memory.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::{canonical_form, identity_code, Code, CANON_MAX_ORDER};
use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::{Graph, SmallGraph};
use crate::graph6::serialize_graph6;
use crate::properties::{small_is_locally_nonforesty, small_local_is_c3_plus_k1};

pub const ORACLE_MAX_ORDER: usize = CANON_MAX_ORDER;

/// Default order range accepted by [`verify_minimality`].
pub const CERTIFIED_ORDERS: std::ops::RangeInclusive<usize> = 8..=10;

/// Order range accepted by [`lemma1_scan`].
pub const LEMMA1_ORDERS: std::ops::RangeInclusive<usize> = 5..=12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalPredicate {
    None,
    LocallyNonforesty,
    /// Every local subgraph is a triangle plus an isolated vertex.
    LocalEqC3PlusK1,
}

impl LocalPredicate {
    fn holds(self, g: &SmallGraph) -> bool {
        match self {
            LocalPredicate::None => true,
            LocalPredicate::LocallyNonforesty => small_is_locally_nonforesty(g),
            LocalPredicate::LocalEqC3PlusK1 => (0..g.order()).all(|v| small_local_is_c3_plus_k1(g, v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub order: usize,
    pub max_edges: usize,
    /// Required minimum degree of completed graphs; 0 means none.
    pub min_degree_final: usize,
    /// Degree cap enforced throughout generation; `None` means unbounded.
    pub max_degree: Option<usize>,
    /// Required vertex connectivity of completed graphs; 0 means none.
    pub connectivity: usize,
    pub local_predicate: LocalPredicate,
}

impl EnumerationSpec {
    /// All graphs of the given order.
    pub fn new(order: usize) -> Self {
        EnumerationSpec {
            order,
            max_edges: order * order.saturating_sub(1) / 2,
            min_degree_final: 0,
            max_degree: None,
            connectivity: 0,
            local_predicate: LocalPredicate::None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order > ORACLE_MAX_ORDER {
            return Err(Error::OrderOutOfDomain { n: self.order, min: 0, max: ORACLE_MAX_ORDER });
        }
        let complete = self.order * self.order.saturating_sub(1) / 2;
        if self.max_edges > complete {
            return Err(Error::InvalidParameter(format!(
                "max_edges {} exceeds {complete} for order {}",
                self.max_edges, self.order
            )));
        }
        Ok(())
    }

    fn accepts_completed(&self, g: &SmallGraph) -> bool {
        (self.connectivity == 0 || is_k_connected(&g.to_graph(), self.connectivity)) && self.local_predicate.holds(g)
    }
}

/// Augmentation tree restricted by edge budget, degree cap and minimum
/// final degree. Every rule here is hereditary along canonical deletions,
/// so no completed graph meeting the constraints loses its ancestor chain.
struct Generator {
    n: usize,
    max_edges: usize,
    max_degree: usize,
    min_degree: usize,
}

impl Generator {
    fn new(spec: &EnumerationSpec) -> Self {
        Generator {
            n: spec.order,
            max_edges: spec.max_edges,
            max_degree: spec.max_degree.unwrap_or(usize::MAX).min(spec.order.saturating_sub(1)),
            min_degree: spec.min_degree_final,
        }
    }

    /// Can `g` (order `j`) still be extended to a graph of order `n` with at
    /// most `max_edges` edges, maximum degree at most `max_degree` and minimum
    /// degree at least `min_degree`? Applied to induced subgraphs of such a
    /// graph it always answers yes.
    fn feasible(&self, g: &SmallGraph) -> bool {
        let j = g.order();
        let rem = self.n - j;
        let edges = g.size();
        if edges > self.max_edges {
            return false;
        }
        let mut deficit = 0;
        for v in 0..j {
            let d = g.degree(v);
            if d > self.max_degree {
                return false;
            }
            let need = self.min_degree.saturating_sub(d);
            if need > rem {
                return false;
            }
            deficit += need;
        }
        // each new vertex reaches at most max_degree of the current ones
        if deficit > rem * self.max_degree.min(j) {
            return false;
        }
        // new vertices carry at least rem * min_degree degree, `deficit` of
        // which is cross edges; the rest pairs up among themselves
        let among_new = (rem * self.min_degree).saturating_sub(deficit).div_ceil(2);
        edges + deficit + among_new <= self.max_edges
    }

    /// Calls `f` with the canonical form and code of each accepted child.
    fn children(&self, parent: &SmallGraph, parent_code: Code, mut f: impl FnMut(SmallGraph, Code)) {
        let j = parent.order();
        let parent_max = parent.max_degree();
        let mut seen: HashSet<Code> = HashSet::new();
        let top = self.max_degree.min(j);
        for nbrs in 0u64..(1u64 << j) {
            let deg = nbrs.count_ones() as usize;
            if deg > top {
                continue;
            }
            // the canonical deletion removes a vertex of maximum degree;
            // neighbors of the new vertex gain one
            let others_max =
                crate::graph::BitIter(nbrs).map(|u| parent.degree(u) + 1).max().unwrap_or(0).max(parent_max);
            if deg < others_max {
                continue;
            }
            let child = parent.with_vertex(nbrs);
            if !self.feasible(&child) {
                continue;
            }
            let canon = canonical_form(&child);
            let last = canon.lab[j];
            let accept = last == j || {
                let reduced = child.without_vertex(last);
                canonical_form(&reduced).code == parent_code
            };
            if accept && seen.insert(canon.code) {
                f(canon.graph, canon.code);
            }
        }
    }

    fn root(&self) -> (SmallGraph, Code) {
        (SmallGraph::empty(0).expect("order 0"), 0)
    }

    /// Depth-first walk below `node`, reporting completed graphs.
    fn walk(&self, node: &SmallGraph, code: Code, cancel: &AtomicBool, out: &mut impl FnMut(&SmallGraph)) {
        if node.order() == self.n {
            if node.min_degree() >= self.min_degree {
                out(node);
            }
            return;
        }
        if cancel.load(Ordering::Relaxed) {
            return;
        }
        self.children(node, code, |child, child_code| self.walk(&child, child_code, cancel, out));
    }

    /// Nodes of the given order, in deterministic order.
    fn frontier(&self, order: usize) -> Vec<(SmallGraph, Code)> {
        fn rec(gen: &Generator, node: SmallGraph, code: Code, order: usize, acc: &mut Vec<(SmallGraph, Code)>) {
            if node.order() == order {
                acc.push((node, code));
                return;
            }
            gen.children(&node, code, |c, cc| rec(gen, c, cc, order, acc));
        }
        let (root, code) = self.root();
        let mut acc = Vec::new();
        rec(self, root, code, order, &mut acc);
        acc
    }
}

/// Calls `visitor` once per isomorphism class meeting every constraint of
/// `spec`, with the class's canonical form. Returns the number of calls.
pub fn enumerate_graphs(spec: &EnumerationSpec, mut visitor: impl FnMut(&SmallGraph)) -> Result<u64> {
    spec.validate()?;
    let gen = Generator::new(spec);
    let (root, code) = gen.root();
    let never = AtomicBool::new(false);
    let mut count = 0;
    gen.walk(&root, code, &never, &mut |g: &SmallGraph| {
        if spec.accepts_completed(g) {
            count += 1;
            visitor(g);
        }
    });
    Ok(count)
}

#[derive(Debug, Clone, Default)]
struct Tally {
    examined: u64,
    matched: u64,
    best: Option<(Code, SmallGraph)>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.examined += other.examined;
        self.matched += other.matched;
        if let Some((c, g)) = other.best {
            if self.best.as_ref().is_none_or(|(b, _)| c < *b) {
                self.best = Some((c, g));
            }
        }
    }
}

/// Parallel walk: the tree is cut at a fixed order and the subtrees are
/// mapped independently; counts add and the smallest matching code wins, so
/// the outcome does not depend on the worker count.
fn parallel_tally(
    gen: &Generator,
    jobs: Option<usize>,
    cancel: &AtomicBool,
    matches: impl Fn(&SmallGraph) -> bool + Sync,
) -> Result<Tally> {
    let split = gen.n.saturating_sub(3).max(gen.n.min(1));
    let frontier = gen.frontier(split);
    let work = || {
        frontier
            .par_iter()
            .map(|(node, code)| {
                let mut t = Tally::default();
                gen.walk(node, *code, cancel, &mut |g: &SmallGraph| {
                    t.examined += 1;
                    if matches(g) {
                        t.matched += 1;
                        let c = identity_code(g);
                        if t.best.as_ref().is_none_or(|(b, _)| c < *b) {
                            t.best = Some((c, *g));
                        }
                    }
                });
                t
            })
            .collect::<Vec<_>>()
    };
    let parts = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };
    let mut total = Tally::default();
    for p in parts {
        total.absorb(p);
    }
    Ok(total)
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Permit orders above the certified range (up to the oracle cap).
    pub allow_uncertified_order: bool,
    /// Setting this flag stops the search; the report is then uncertified.
    pub cancel: Option<Arc<AtomicBool>>,
}

#[derive(Debug, Clone)]
pub struct MinimalityReport {
    pub k: usize,
    pub n: usize,
    pub budget: usize,
    /// Completed graphs (order `n`, size within budget, degree bounds met)
    /// tested against connectivity and the local predicate.
    pub graphs_examined: u64,
    /// Canonically smallest qualifying graph, if any.
    pub qualifying_witness: Option<Graph>,
    pub elapsed: Duration,
    /// The search space was exhausted.
    pub certified: bool,
}

impl MinimalityReport {
    /// `key: value` lines, stable across runs except `elapsed_ms`.
    pub fn to_key_values(&self) -> String {
        let formula = formulas::f(self.k, self.n).map(|r| r.value.to_string()).unwrap_or_else(|_| "-".into());
        let mut s = format!(
            "k: {}\nn: {}\nbudget: {}\nformula: {}\ngraphs_examined: {}\n",
            self.k, self.n, self.budget, formula, self.graphs_examined
        );
        match &self.qualifying_witness {
            Some(w) => {
                s.push_str(&format!("witness: {}\nwitness_size: {}\n", serialize_graph6(w), w.size()));
            }
            None => s.push_str("witness: none\n"),
        }
        s.push_str(&format!("certified: {}\nelapsed_ms: {}\n", self.certified, self.elapsed.as_millis()));
        s
    }

    /// A witness strictly below the closed-form minimum.
    pub fn contradicts_formula(&self) -> bool {
        match (&self.qualifying_witness, formulas::f(self.k, self.n)) {
            (Some(w), Ok(f)) => w.size() < f.value,
            _ => false,
        }
    }
}

fn minimality_generator(k: usize, n: usize, budget: usize, pruned: bool) -> Generator {
    let mut spec = EnumerationSpec::new(n);
    spec.max_edges = budget.min(spec.max_edges);
    if pruned {
        // locally nonforesty forces δ >= 3 (a local subgraph with a cycle has
        // at least three vertices); k-connected forces δ >= k
        let min_deg = k.max(3);
        spec.min_degree_final = min_deg;
        // the other n - 1 vertices hold at least (n - 1) * min_deg of the
        // 2 * budget degree total
        spec.max_degree = Some((2 * budget).saturating_sub((n - 1) * min_deg));
    }
    Generator::new(&spec)
}

fn qualifies(k: usize) -> impl Fn(&SmallGraph) -> bool + Sync {
    move |g: &SmallGraph| is_k_connected(&g.to_graph(), k) && small_is_locally_nonforesty(g)
}

/// Exhaustively searches order-`n` graphs with at most `budget` edges for a
/// `k`-connected locally nonforesty graph.
pub fn verify_minimality(k: usize, n: usize, budget: usize, opts: &VerifyOptions) -> Result<MinimalityReport> {
    if !matches!(k, 1 | 2 | 4) {
        return Err(if k == 3 { Error::UnsupportedK3 } else { Error::UnsupportedK(k) });
    }
    let max = if opts.allow_uncertified_order { ORACLE_MAX_ORDER } else { *CERTIFIED_ORDERS.end() };
    if n < *CERTIFIED_ORDERS.start() || n > max {
        return Err(Error::OrderOutOfDomain { n, min: *CERTIFIED_ORDERS.start(), max });
    }
    let start = Instant::now();
    let gen = minimality_generator(k, n, budget, true);
    let local_flag = AtomicBool::new(false);
    let cancel = opts.cancel.as_deref().unwrap_or(&local_flag);
    let tally = parallel_tally(&gen, opts.jobs, cancel, qualifies(k))?;
    Ok(MinimalityReport {
        k,
        n,
        budget,
        graphs_examined: tally.examined,
        qualifying_witness: tally.best.map(|(_, g)| g.to_graph()),
        elapsed: start.elapsed(),
        certified: !cancel.load(Ordering::Relaxed),
    })
}

/// Counts isomorphism classes of 4-regular graphs of order `n` in which every
/// local subgraph is `C3 + K1`.
pub fn lemma1_scan(n: usize) -> Result<u64> {
    lemma1_scan_with(n, None)
}

pub fn lemma1_scan_with(n: usize, jobs: Option<usize>) -> Result<u64> {
    if !LEMMA1_ORDERS.contains(&n) {
        return Err(Error::OrderOutOfDomain { n, min: *LEMMA1_ORDERS.start(), max: *LEMMA1_ORDERS.end() });
    }
    let gen = Generator::new(&lemma1_spec(n));
    let never = AtomicBool::new(false);
    let pred = LocalPredicate::LocalEqC3PlusK1;
    Ok(parallel_tally(&gen, jobs, &never, |g| pred.holds(g))?.matched)
}

fn lemma1_spec(n: usize) -> EnumerationSpec {
    EnumerationSpec {
        order: n,
        max_edges: 2 * n,
        min_degree_final: 4,
        max_degree: Some(4),
        connectivity: 0,
        local_predicate: LocalPredicate::LocalEqC3PlusK1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    fn count(spec: &EnumerationSpec) -> u64 {
        enumerate_graphs(spec, |_| {}).unwrap()
    }

    #[test]
    fn small_orders_match_known_counts() {
        let known = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &c) in known.iter().enumerate() {
            assert_eq!(count(&EnumerationSpec::new(n)), c, "order {n}");
        }
    }

    #[test]
    fn edge_budget_and_degree_filters() {
        // graphs on 5 vertices with at most 2 edges: empty, K2, 2K2, P3
        let mut spec = EnumerationSpec::new(5);
        spec.max_edges = 2;
        assert_eq!(count(&spec), 4);

        let mut cubic = EnumerationSpec::new(8);
        cubic.max_degree = Some(3);
        cubic.min_degree_final = 3;
        assert_eq!(count(&cubic), 6);

        assert!(enumerate_graphs(&EnumerationSpec::new(17), |_| {}).is_err());
        let mut bad = EnumerationSpec::new(4);
        bad.max_edges = 7;
        assert!(bad.validate().is_err());
    }

    #[test]
    fn visitor_receives_canonical_forms() {
        let mut seen = HashSet::new();
        enumerate_graphs(&EnumerationSpec::new(5), |g| {
            assert_eq!(canonical_code(g), identity_code(g));
            assert!(seen.insert(identity_code(g)));
        })
        .unwrap();
        assert_eq!(seen.len(), 34);
    }

    #[test]
    fn connectivity_and_predicate_filters() {
        let mut spec = EnumerationSpec::new(5);
        spec.connectivity = 1;
        assert_eq!(count(&spec), 21);
        spec.local_predicate = LocalPredicate::LocallyNonforesty;
        // K5 and K5 - e
        assert_eq!(count(&spec), 2);
    }

    fn witness_codes(k: usize, n: usize, budget: usize, pruned: bool) -> Vec<Code> {
        let gen = minimality_generator(k, n, budget, pruned);
        let (root, code) = gen.root();
        let never = AtomicBool::new(false);
        let ok = qualifies(k);
        let mut out = Vec::new();
        gen.walk(&root, code, &never, &mut |g: &SmallGraph| {
            if g.size() <= budget && ok(g) {
                out.push(identity_code(g));
            }
        });
        out.sort_unstable();
        out
    }

    #[test]
    fn degree_pruning_is_sound() {
        let pruned = witness_codes(1, 8, 14, true);
        let unpruned = witness_codes(1, 8, 14, false);
        assert!(!pruned.is_empty());
        assert_eq!(pruned, unpruned);
        assert!(witness_codes(1, 8, 12, false).is_empty());
    }

    #[test]
    fn lemma1_small_orders() {
        assert_eq!(lemma1_scan(5), Ok(0));
        assert_eq!(lemma1_scan(8), Ok(1));
        assert_eq!(lemma1_scan(9), Ok(0));
        assert!(lemma1_scan(4).is_err() && lemma1_scan(13).is_err());
    }

    #[test]
    fn four_regular_order_nine() {
        let spec = EnumerationSpec {
            order: 9,
            max_edges: 18,
            min_degree_final: 4,
            max_degree: Some(4),
            connectivity: 0,
            local_predicate: LocalPredicate::None,
        };
        assert_eq!(count(&spec), 16);
    }

    #[test]
    fn verify_rejects_bad_input() {
        let o = VerifyOptions::default();
        assert_eq!(verify_minimality(3, 8, 10, &o).unwrap_err(), Error::UnsupportedK3);
        assert!(verify_minimality(5, 8, 10, &o).is_err());
        assert!(verify_minimality(2, 7, 10, &o).is_err());
        assert!(verify_minimality(2, 11, 10, &o).is_err());
    }

    #[test]
    fn cancelled_search_is_uncertified() {
        let flag = Arc::new(AtomicBool::new(true));
        let o = VerifyOptions { cancel: Some(flag), ..Default::default() };
        let r = verify_minimality(2, 8, 13, &o).unwrap();
        assert!(!r.certified);
    }
}
