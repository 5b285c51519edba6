//! Extremal constructions: chains of four-port blocks for `k` in `{1, 2, 4}`
//! and Harary graphs for larger `k`.
//!
//! A family member of order `n = 4b + r` has `b` blocks. Block 1 is the
//! residue gadget (`A = K4`, `B1`, `C1`, `D1` or `D2`) on vertices
//! `0..4 + r`; blocks `2..=b` are copies of `K4` on the following groups of
//! four vertices with ports `x, y, z, w` in that order. Blocks are linked by
//! `z_i y_{i+1}` (cyclically for `k >= 2`, as a path for `k = 1`) and, for
//! `k = 4`, also by `w_i x_{i+1}`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::canon::Code;
use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::Graph;
use crate::oracle::{enumerate_graphs, EnumerationSpec};
use crate::properties::is_locally_nonforesty;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetName {
    A,
    B1,
    C1,
    D1,
    D2,
}

impl GadgetName {
    pub const ALL: [GadgetName; 5] = [GadgetName::A, GadgetName::B1, GadgetName::C1, GadgetName::D1, GadgetName::D2];

    /// Required `(order, size)`. Any other size would break the family's
    /// total edge count.
    pub fn order_size(self) -> (usize, usize) {
        match self {
            GadgetName::A => (4, 6),
            GadgetName::B1 => (5, 9),
            GadgetName::C1 => (6, 11),
            GadgetName::D1 => (7, 13),
            GadgetName::D2 => (7, 12),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GadgetName::A => "A",
            GadgetName::B1 => "B1",
            GadgetName::C1 => "C1",
            GadgetName::D1 => "D1",
            GadgetName::D2 => "D2",
        }
    }

    /// Gadget placed at block 1 for residue `n mod 4`.
    pub fn for_residue(r: usize, context: Context) -> GadgetName {
        match (r % 4, context) {
            (0, _) => GadgetName::A,
            (1, _) => GadgetName::B1,
            (2, _) => GadgetName::C1,
            (_, Context::K4) => GadgetName::D1,
            _ => GadgetName::D2,
        }
    }

    pub fn allowed_in(self, context: Context) -> bool {
        match self {
            GadgetName::D1 => context == Context::K4,
            GadgetName::D2 => context != Context::K4,
            _ => true,
        }
    }
}

impl fmt::Display for GadgetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GadgetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GadgetName::ALL
            .into_iter()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown gadget {s:?}")))
    }
}

/// Construction family a gadget is validated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Context {
    K4,
    K2,
    K1,
}

impl Context {
    pub const ALL: [Context; 3] = [Context::K4, Context::K2, Context::K1];

    pub fn connectivity(self) -> usize {
        match self {
            Context::K4 => 4,
            Context::K2 => 2,
            Context::K1 => 1,
        }
    }

    pub fn from_connectivity(k: usize) -> Result<Context> {
        match k {
            4 => Ok(Context::K4),
            2 => Ok(Context::K2),
            1 => Ok(Context::K1),
            3 => Err(Error::UnsupportedK3),
            _ => Err(Error::UnsupportedK(k)),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Context::K4 => "k4",
            Context::K2 => "k2",
            Context::K1 => "k1",
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Context {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Context::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown context {s:?}")))
    }
}

/// A small block with attachment ports `[x, y, z, w]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    pub ports: [usize; 4],
    pub name: GadgetName,
    pub context: Context,
}

impl Gadget {
    /// `A = K4` with ports `0, 1, 2, 3`.
    pub fn k4(context: Context) -> Gadget {
        Gadget { graph: Graph::complete(4).expect("K4"), ports: [0, 1, 2, 3], name: GadgetName::A, context }
    }

    pub fn x(&self) -> usize {
        self.ports[0]
    }

    pub fn y(&self) -> usize {
        self.ports[1]
    }

    pub fn z(&self) -> usize {
        self.ports[2]
    }

    pub fn w(&self) -> usize {
        self.ports[3]
    }

    /// Checks the structural invariants and the assembled family at two and
    /// three blocks.
    pub fn validate(&self) -> Result<()> {
        let (order, size) = self.name.order_size();
        let fail = |why: String| Err(Error::Catalog(format!("{} {}: {why}", self.name, self.context)));
        if (self.graph.order(), self.graph.size()) != (order, size) {
            return fail(format!("expected order {order} and size {size}"));
        }
        if !self.name.allowed_in(self.context) {
            return fail("gadget not used in this context".into());
        }
        let [x, y, z, w] = self.ports;
        if self.ports.iter().any(|&p| p >= order) || x == y || x == z || x == w || y == z || y == w || z == w {
            return fail(format!("ports {:?} are not distinct vertices", self.ports));
        }
        if self.name == GadgetName::A && (self.graph != Graph::complete(4)? || self.ports != [0, 1, 2, 3]) {
            return fail("A must be K4 with ports 0 1 2 3".into());
        }
        if !assembles(self) {
            return fail("assembled family fails the size, connectivity or local checks".into());
        }
        Ok(())
    }

    /// Catalog stanza: name, context, `n m`, edge lines, ports.
    pub fn to_stanza(&self) -> String {
        let mut s = format!("name {}\ncontext {}\n", self.name, self.context);
        s.push_str(&self.graph.to_edge_list());
        let [x, y, z, w] = self.ports;
        s.push_str(&format!("ports {x} {y} {z} {w}\n"));
        s
    }

    pub fn parse_stanza(text: &str) -> Result<Gadget> {
        let bad = |why: &str| Error::Catalog(why.to_string());
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.len() < 4 {
            return Err(bad("stanza too short"));
        }
        let name: GadgetName = lines[0].strip_prefix("name ").ok_or_else(|| bad("expected `name`"))?.trim().parse()?;
        let context: Context =
            lines[1].strip_prefix("context ").ok_or_else(|| bad("expected `context`"))?.trim().parse()?;
        let last = lines[lines.len() - 1];
        let ports: Vec<usize> = last
            .strip_prefix("ports ")
            .ok_or_else(|| bad("expected `ports`"))?
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| bad("malformed port")))
            .collect::<Result<_>>()?;
        let ports: [usize; 4] = ports.try_into().map_err(|_| bad("expected four ports"))?;
        let graph = Graph::parse_edge_list(&lines[2..lines.len() - 1].join("\n"))?;
        Ok(Gadget { graph, ports, name, context })
    }
}

/// Vertex layout of a family member.
struct Layout {
    gadget_order: usize,
    blocks: usize,
}

impl Layout {
    fn order(&self) -> usize {
        self.gadget_order + 4 * (self.blocks - 1)
    }

    /// Port `p` (0 = x .. 3 = w) of block `i` (0-based).
    fn port(&self, gadget: &Gadget, i: usize, p: usize) -> usize {
        if i == 0 {
            gadget.ports[p]
        } else {
            self.gadget_order + 4 * (i - 1) + p
        }
    }
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const W: usize = 3;

/// Block 1 is `gadget`, blocks `2..=blocks` are `K4`.
pub fn assemble(gadget: &Gadget, blocks: usize) -> Result<Graph> {
    if blocks < 2 {
        return Err(Error::InvalidParameter("a family member needs at least two blocks".into()));
    }
    let layout = Layout { gadget_order: gadget.graph.order(), blocks };
    let mut g = Graph::empty(layout.order())?;
    for (u, v) in gadget.graph.edges() {
        g.add_edge(u, v)?;
    }
    for i in 1..blocks {
        let base = layout.port(gadget, i, X);
        for a in 0..4 {
            for b in a + 1..4 {
                g.add_edge(base + a, base + b)?;
            }
        }
    }
    let links = match gadget.context {
        Context::K1 => blocks - 1,
        _ => blocks,
    };
    for i in 0..links {
        let next = (i + 1) % blocks;
        g.add_edge(layout.port(gadget, i, Z), layout.port(gadget, next, Y))?;
        if gadget.context == Context::K4 {
            g.add_edge(layout.port(gadget, i, W), layout.port(gadget, next, X))?;
        }
    }
    Ok(g)
}

fn family_member_ok(g: &Graph, k: usize) -> bool {
    match formulas::f(k, g.order()) {
        Ok(f) => g.size() == f.value && is_locally_nonforesty(g) && is_k_connected(g, k),
        Err(_) => false,
    }
}

fn assembles(gadget: &Gadget) -> bool {
    let k = gadget.context.connectivity();
    [2, 3].into_iter().all(|b| assemble(gadget, b).is_ok_and(|g| family_member_ok(&g, k)))
}

/// Searches every graph of the gadget's order and size, smallest canonical
/// code first, and every port tuple in lexicographic order, for the first
/// one whose assembled family checks out at two and three blocks.
pub fn search_gadget(name: GadgetName, context: Context) -> Result<Gadget> {
    if name == GadgetName::A {
        return Err(Error::InvalidParameter("A is K4 and needs no search".into()));
    }
    if !name.allowed_in(context) {
        return Err(Error::InvalidParameter(format!("{name} is not used in context {context}")));
    }
    let (order, size) = name.order_size();
    let mut spec = EnumerationSpec::new(order);
    spec.max_edges = size;
    let mut candidates: Vec<(Code, Graph)> = Vec::new();
    enumerate_graphs(&spec, |g| {
        if g.size() == size {
            candidates.push((crate::canon::identity_code(g), g.to_graph()));
        }
    })?;
    candidates.sort_by_key(|(code, _)| *code);

    for (_, graph) in candidates {
        for x in 0..order {
            for y in (0..order).filter(|&y| y != x) {
                for z in (0..order).filter(|&z| z != x && z != y) {
                    for w in (0..order).filter(|&w| w != x && w != y && w != z) {
                        let gadget = Gadget { graph: graph.clone(), ports: [x, y, z, w], name, context };
                        if assembles(&gadget) {
                            return Ok(gadget);
                        }
                    }
                }
            }
        }
    }
    Err(Error::GadgetNotFound { name: name.to_string(), context: context.to_string() })
}

/// Gadgets keyed by name and context, stored as blank-line separated stanzas.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GadgetCatalog {
    pub gadgets: Vec<Gadget>,
}

impl GadgetCatalog {
    /// Parses and validates every stanza.
    pub fn parse(text: &str) -> Result<GadgetCatalog> {
        let mut gadgets = Vec::new();
        let mut current = String::new();
        for line in text.lines().chain(std::iter::once("")) {
            if line.trim().starts_with('#') {
                continue;
            }
            if line.trim().is_empty() {
                if !current.trim().is_empty() {
                    let g = Gadget::parse_stanza(&current)?;
                    g.validate()?;
                    if gadgets.iter().any(|o: &Gadget| o.name == g.name && o.context == g.context) {
                        return Err(Error::Catalog(format!("duplicate stanza {} {}", g.name, g.context)));
                    }
                    gadgets.push(g);
                }
                current.clear();
            } else {
                current.push_str(line);
                current.push('\n');
            }
        }
        Ok(GadgetCatalog { gadgets })
    }

    pub fn to_text(&self) -> String {
        self.gadgets.iter().map(Gadget::to_stanza).collect::<Vec<_>>().join("\n")
    }

    pub fn get(&self, name: GadgetName, context: Context) -> Option<&Gadget> {
        self.gadgets.iter().find(|g| g.name == name && g.context == context)
    }

    /// Runs the search for every non-`A` gadget in every context it is used in.
    pub fn search_all() -> Result<GadgetCatalog> {
        let mut gadgets = Vec::new();
        for context in Context::ALL {
            for name in [GadgetName::B1, GadgetName::C1, GadgetName::D1, GadgetName::D2] {
                if name.allowed_in(context) {
                    gadgets.push(search_gadget(name, context)?);
                }
            }
        }
        Ok(GadgetCatalog { gadgets })
    }
}

const BUNDLED_CATALOG: &str = include_str!("../data/gadgets.txt");

/// The catalog shipped with the crate, validated on first use.
pub fn bundled_catalog() -> Result<&'static GadgetCatalog> {
    static CATALOG: OnceLock<Result<GadgetCatalog>> = OnceLock::new();
    CATALOG.get_or_init(|| GadgetCatalog::parse(BUNDLED_CATALOG)).as_ref().map_err(Clone::clone)
}

/// Residue gadget for block 1, `K4` included.
pub fn gadget(name: GadgetName, context: Context) -> Result<Gadget> {
    if name == GadgetName::A {
        return Ok(Gadget::k4(context));
    }
    bundled_catalog()?
        .get(name, context)
        .cloned()
        .ok_or_else(|| Error::Catalog(format!("no stanza for {name} {context}")))
}

/// Family member of order `n >= 8` with `f(k, n)` edges for `k` in
/// `{1, 2, 4}`; re-verified before returning.
pub fn build_extremal(k: usize, n: usize) -> Result<Graph> {
    let context = Context::from_connectivity(k)?;
    if n < formulas::MIN_ORDER {
        return Err(Error::OrderOutOfDomain { n, min: formulas::MIN_ORDER, max: crate::graph::MAX_ORDER });
    }
    let name = GadgetName::for_residue(n % 4, context);
    let g = assemble(&gadget(name, context)?, n / 4)?;
    let expected = formulas::f(k, n)?.value;
    if g.order() != n || g.size() != expected {
        return Err(Error::ConstructionFailed(format!(
            "k={k} n={n}: got order {} size {}, expected size {expected}",
            g.order(),
            g.size()
        )));
    }
    if !is_locally_nonforesty(&g) {
        return Err(Error::ConstructionFailed(format!("k={k} n={n}: not locally nonforesty")));
    }
    if !is_k_connected(&g, k) {
        return Err(Error::ConstructionFailed(format!("k={k} n={n}: not {k}-connected")));
    }
    Ok(g)
}

/// Harary graph `H(k, n)`: circulant jumps `1..=k/2`, plus diameters when
/// `k` is odd (for odd `n`, the edges `i ~ i + (n+1)/2` for `0 <= i <= (n-1)/2`).
/// Has `⌈kn/2⌉` edges.
pub fn harary(k: usize, n: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("Harary graphs need k >= 2, got {k}")));
    }
    if n <= k {
        return Err(Error::OrderOutOfDomain { n, min: k + 1, max: crate::graph::MAX_ORDER });
    }
    let mut edges = Vec::with_capacity((k * n).div_ceil(2));
    for jump in 1..=k / 2 {
        for i in 0..n {
            edges.push((i, (i + jump) % n));
        }
    }
    if k % 2 == 1 {
        if n.is_multiple_of(2) {
            for i in 0..n / 2 {
                edges.push((i, i + n / 2));
            }
        } else {
            for i in 0..=(n - 1) / 2 {
                edges.push((i, (i + n.div_ceil(2)) % n));
            }
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    debug_assert_eq!(g.size(), (k * n).div_ceil(2));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{block_decomposition, vertex_connectivity};
    use crate::properties::every_local_is_c3_plus_k1;

    #[test]
    fn residue_selects_gadget() {
        assert_eq!(GadgetName::for_residue(8, Context::K4), GadgetName::A);
        assert_eq!(GadgetName::for_residue(9, Context::K2), GadgetName::B1);
        assert_eq!(GadgetName::for_residue(10, Context::K1), GadgetName::C1);
        assert_eq!(GadgetName::for_residue(11, Context::K4), GadgetName::D1);
        assert_eq!(GadgetName::for_residue(11, Context::K1), GadgetName::D2);
    }

    #[test]
    fn four_connected_order_8() {
        let g = build_extremal(4, 8).unwrap();
        assert_eq!(g.size(), 16);
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert!(every_local_is_c3_plus_k1(&g));
    }

    #[test]
    fn two_connected_order_12() {
        let g = build_extremal(2, 12).unwrap();
        assert_eq!(g.size(), 21);
        assert!(vertex_connectivity(&g).unwrap() >= 2);
    }

    #[test]
    fn connected_order_8_is_two_k4_and_a_bridge() {
        let g = build_extremal(1, 8).unwrap();
        assert_eq!(g.size(), 13);
        let d = block_decomposition(&g).unwrap();
        assert_eq!((d.count_of_order(4), d.count_of_order(2)), (2, 1));
        assert!(is_locally_nonforesty(&g) && g.is_connected());
    }

    #[test]
    fn connected_order_12_block_structure() {
        let g = build_extremal(1, 12).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!((d.count_of_order(4), d.count_of_order(2)), (3, 2));
        assert_eq!(d.cut_vertices.len(), 4);
    }

    #[test]
    fn bad_parameters() {
        assert_eq!(build_extremal(3, 12), Err(Error::UnsupportedK3));
        assert!(build_extremal(5, 12).is_err());
        assert!(build_extremal(2, 7).is_err());
        assert!(harary(6, 6).is_err());
        assert!(harary(1, 6).is_err());
        assert!(search_gadget(GadgetName::D1, Context::K2).is_err());
        assert!(search_gadget(GadgetName::D2, Context::K4).is_err());
        assert!(search_gadget(GadgetName::A, Context::K4).is_err());
    }

    #[test]
    fn harary_examples() {
        let h = harary(6, 10).unwrap();
        assert_eq!(h.size(), 30);
        assert!(h.degrees().iter().all(|&d| d == 6));
        let h = harary(6, 13).unwrap();
        assert_eq!(h.size(), 39);
        assert!(is_locally_nonforesty(&h));
        let h = harary(7, 12).unwrap();
        assert_eq!(h.size(), 42);
        assert_eq!(vertex_connectivity(&h), Ok(7));
        let h = harary(7, 13).unwrap();
        assert_eq!(h.size(), 46);
        assert_eq!(vertex_connectivity(&h), Ok(7));
        assert_eq!(harary(6, 7).unwrap(), Graph::complete(7).unwrap());
    }

    #[test]
    fn stanza_round_trip() {
        let g = Gadget::k4(Context::K2);
        let text = g.to_stanza();
        assert_eq!(text, "name A\ncontext k2\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\nports 0 1 2 3\n");
        assert_eq!(Gadget::parse_stanza(&text).unwrap(), g);
        g.validate().unwrap();
        assert!(Gadget::parse_stanza("name Q\ncontext k2\n4 0\nports 0 1 2 3").is_err());
    }

    #[test]
    fn catalog_rejects_invalid_ports() {
        let mut g = Gadget::k4(Context::K4);
        g.ports = [0, 0, 1, 2];
        assert!(g.validate().is_err());
        let text = Gadget::k4(Context::K4).to_stanza().replace("ports 0 1 2 3", "ports 3 1 2 0");
        assert!(GadgetCatalog::parse(&text).is_err());
    }

    #[test]
    fn bundled_catalog_matches_search() {
        let bundled = bundled_catalog().unwrap();
        assert_eq!(bundled, &GadgetCatalog::search_all().unwrap());
        assert_eq!(bundled.gadgets.len(), 9);
        let b1 = &bundled.get(GadgetName::B1, Context::K4).unwrap().graph;
        let mut degrees = b1.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![3, 3, 4, 4, 4]);
        assert!(!b1.has_edge(0, 1));
    }
}
