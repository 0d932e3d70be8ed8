//! Edge and triad statistics of `g1 ⊛ g2` in closed form, brute-force
//! enumeration of the same statistics, and the balance classifier for the
//! second factor.
//!
//! Marks are canonical marks of the factor graphs; the duplicate `a_i`
//! carries the mark of `u_i`, and the counts `N1±` range over the `n1`
//! duplicate vertices, the only vertices of `DG1` incident to join edges.

use crate::graph::{Sign, SignedGraph};
use crate::products::{add_vertex_corona, duplication, ProductLayout, Slot};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SignCount {
    pub positive: u64,
    pub negative: u64,
}

impl SignCount {
    pub fn total(&self) -> u64 {
        self.positive + self.negative
    }

    fn add(&mut self, s: Sign) {
        if s.is_pos() {
            self.positive += 1;
        } else {
            self.negative += 1;
        }
    }

    fn times(&self, k: u64) -> SignCount {
        SignCount { positive: self.positive * k, negative: self.negative * k }
    }
}

impl std::ops::Add for SignCount {
    type Output = SignCount;

    fn add(self, o: SignCount) -> SignCount {
        SignCount { positive: self.positive + o.positive, negative: self.negative + o.negative }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EdgeStats {
    /// `|DE±|`.
    pub duplication: SignCount,
    /// `|E2±|`.
    pub second: SignCount,
    /// Edges inside the `n1` copies, `|U(G1)| |E2±|`.
    pub copies: SignCount,
    /// `N1±`, marks of the duplicate vertices.
    pub first_marks: SignCount,
    /// `N2±`.
    pub second_marks: SignCount,
    pub join: SignCount,
    pub total: SignCount,
}

fn sign_count(g: &SignedGraph) -> SignCount {
    SignCount { positive: g.count_edges(Sign::Pos) as u64, negative: g.count_edges(Sign::Neg) as u64 }
}

fn mark_count(g: &SignedGraph) -> SignCount {
    let m = g.canonical_marking();
    SignCount { positive: m.count(Sign::Pos) as u64, negative: m.count(Sign::Neg) as u64 }
}

/// Edge statistics from the factor graphs alone.
pub fn edge_stats_formula(g1: &SignedGraph, g2: &SignedGraph) -> EdgeStats {
    let mu = g1.canonical_marking();
    let mut dup = SignCount::default();
    for (u, v, _) in g1.edges() {
        // a_u u_v and a_v u_u
        dup.add(mu.get(u) * mu.get(v));
        dup.add(mu.get(u) * mu.get(v));
    }
    let second = sign_count(g2);
    let copies = second.times(g1.order() as u64);
    let (n1, n2) = (mark_count(g1), mark_count(g2));
    let join = SignCount {
        positive: n1.positive * n2.positive + n1.negative * n2.negative,
        negative: n1.positive * n2.negative + n1.negative * n2.positive,
    };
    EdgeStats {
        duplication: dup,
        second,
        copies,
        first_marks: n1,
        second_marks: n2,
        join,
        total: dup + copies + join,
    }
}

/// Edge statistics by classifying every edge of the built product.
pub fn enumerate_edge_stats(g1: &SignedGraph, g2: &SignedGraph) -> EdgeStats {
    let (product, layout) = add_vertex_corona(g1, g2);
    let mut stats = EdgeStats {
        first_marks: mark_count(g1),
        second_marks: mark_count(g2),
        ..EdgeStats::default()
    };
    for (u, v, s) in product.edges() {
        stats.total.add(s);
        match (layout.slot(u), layout.slot(v)) {
            (Slot::Copy { copy: c, .. }, Slot::Copy { .. }) => {
                stats.copies.add(s);
                if c == 0 {
                    stats.second.add(s);
                }
            }
            (Slot::Copy { .. }, _) | (_, Slot::Copy { .. }) => stats.join.add(s),
            _ => stats.duplication.add(s),
        }
    }
    stats
}

/// Triangles by number of negative edges: `t[i]` counts `T_i`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TriadCounts {
    pub t: [u64; 4],
}

impl TriadCounts {
    pub fn total(&self) -> u64 {
        self.t.iter().sum()
    }

    fn times(&self, k: u64) -> TriadCounts {
        TriadCounts { t: self.t.map(|x| x * k) }
    }
}

impl std::ops::Add for TriadCounts {
    type Output = TriadCounts;

    fn add(self, o: TriadCounts) -> TriadCounts {
        TriadCounts { t: std::array::from_fn(|i| self.t[i] + o.t[i]) }
    }
}

/// Edges of one sign split by the marks of their endpoints.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MarkPairCounts {
    pub both_positive: u64,
    pub mixed: u64,
    pub both_negative: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TriadStats {
    /// Triangles of `DG1`.
    pub duplication: TriadCounts,
    /// Triangles inside the copies, `|U(G1)| |T_i(G2)|`.
    pub copies: TriadCounts,
    /// Triangles `a_i v_j v_k` through a duplicate vertex.
    pub apex: TriadCounts,
    pub total: TriadCounts,
}

/// Edge classes `|E2+|` and `|E2-|` of `g` by endpoint marks.
pub fn edge_mark_classes(g: &SignedGraph) -> (MarkPairCounts, MarkPairCounts) {
    let mu = g.canonical_marking();
    let (mut pos, mut neg) = (MarkPairCounts::default(), MarkPairCounts::default());
    for (u, v, s) in g.edges() {
        let class = if s.is_pos() { &mut pos } else { &mut neg };
        match (mu.get(u), mu.get(v)) {
            (Sign::Pos, Sign::Pos) => class.both_positive += 1,
            (Sign::Neg, Sign::Neg) => class.both_negative += 1,
            _ => class.mixed += 1,
        }
    }
    (pos, neg)
}

/// Triad statistics from the factor graphs alone.
pub fn triad_stats_formula(g1: &SignedGraph, g2: &SignedGraph) -> TriadStats {
    let duplication = enumerate_triads(&duplication(g1));
    let copies = enumerate_triads(g2).times(g1.order() as u64);
    let marks = mark_count(g1);
    let (np, nm) = (marks.positive, marks.negative);
    let (p, n) = edge_mark_classes(g2);
    let apex = TriadCounts {
        t: [
            np * p.both_positive + nm * p.both_negative,
            np * (p.mixed + n.both_positive) + nm * (p.mixed + n.both_negative),
            np * (p.both_negative + n.mixed) + nm * (p.both_positive + n.mixed),
            np * n.both_negative + nm * n.both_positive,
        ],
    };
    TriadStats { duplication, copies, apex, total: duplication + copies + apex }
}

/// `|T(DG1)| + |U(G1)| (|T(G2)| + |E2|)`.
pub fn total_triads_formula(g1: &SignedGraph, g2: &SignedGraph) -> u64 {
    let t2 = enumerate_triads(g2).total();
    enumerate_triads(&duplication(g1)).total() + g1.order() as u64 * (t2 + g2.size() as u64)
}

/// Every triangle of `g` classified by its number of negative edges.
pub fn enumerate_triads(g: &SignedGraph) -> TriadCounts {
    let mut counts = TriadCounts::default();
    for (u, v, s) in g.edges() {
        for &(w, s2) in g.neighbors(v) {
            if w <= v {
                continue;
            }
            if let Some(s3) = g.edge_sign(u, w) {
                let negatives = [s, s2, s3].iter().filter(|x| !x.is_pos()).count();
                counts.t[negatives] += 1;
            }
        }
    }
    counts
}

/// Triad statistics by enumerating the triangles of the built product.
pub fn enumerate_triad_stats(g1: &SignedGraph, g2: &SignedGraph) -> TriadStats {
    let (product, layout) = add_vertex_corona(g1, g2);
    classify_product_triads(&product, &layout)
}

fn classify_product_triads(product: &SignedGraph, layout: &ProductLayout) -> TriadStats {
    let mut stats = TriadStats::default();
    for (u, v, s) in product.edges() {
        for &(w, s2) in product.neighbors(v) {
            if w <= v {
                continue;
            }
            let Some(s3) = product.edge_sign(u, w) else { continue };
            let negatives = [s, s2, s3].iter().filter(|x| !x.is_pos()).count();
            let copies = [u, v, w].iter().filter(|&&x| matches!(layout.slot(x), Slot::Copy { .. })).count();
            let bucket = match copies {
                0 => &mut stats.duplication,
                3 => &mut stats.copies,
                _ => &mut stats.apex,
            };
            bucket.t[negatives] += 1;
            stats.total.t[negatives] += 1;
        }
    }
    stats
}

/// Edges of the second factor that unbalance the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolatingEdge {
    /// Type 1: positive edge joining opposite marks.
    PositiveOppositeMarks,
    /// Type 2: negative edge joining two positive marks.
    NegativePositiveMarks,
    /// Type 3: negative edge joining two negative marks.
    NegativeNegativeMarks,
}

impl ViolatingEdge {
    pub fn number(self) -> u8 {
        match self {
            ViolatingEdge::PositiveOppositeMarks => 1,
            ViolatingEdge::NegativePositiveMarks => 2,
            ViolatingEdge::NegativeNegativeMarks => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnbalanceReport {
    /// Edge types present in the second factor, ascending.
    pub types: Vec<ViolatingEdge>,
    /// The second factor itself is unbalanced, so every product is.
    pub second_unbalanced: bool,
}

impl UnbalanceReport {
    /// The product is balanced exactly when no edge type occurs.
    pub fn predicts_balanced(&self) -> bool {
        self.types.is_empty()
    }
}

pub fn unbalance_criteria(g2: &SignedGraph) -> UnbalanceReport {
    let mu = g2.canonical_marking();
    let mut types = Vec::new();
    for (u, v, s) in g2.edges() {
        let t = match (s, mu.get(u), mu.get(v)) {
            (Sign::Pos, a, b) if a != b => ViolatingEdge::PositiveOppositeMarks,
            (Sign::Neg, Sign::Pos, Sign::Pos) => ViolatingEdge::NegativePositiveMarks,
            (Sign::Neg, Sign::Neg, Sign::Neg) => ViolatingEdge::NegativeNegativeMarks,
            _ => continue,
        };
        types.push(t);
    }
    types.sort_unstable();
    types.dedup();
    UnbalanceReport { types, second_unbalanced: !g2.is_balanced() }
}
