//! Non-cospectral equienergetic pairs `g ⊛ h1`, `g ⊛ h2` from inputs with
//! equal coronals and equal energies, and an exhaustive search for such inputs.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{char_poly, coronal, Coronal, IntPolynomial};
use crate::graph::{Marking, Sign, SignedGraph};
use crate::products::add_vertex_corona;

use super::energy;

const INPUT_ENERGY_TOL: f64 = 1e-8;
const PRODUCT_ENERGY_TOL: f64 = 1e-6;

/// A failed hypothesis of the construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Inadmissible {
    OrderMismatch { first: usize, second: usize },
    /// Adjacency coronals under the canonical markings differ. `both_regular`
    /// is set when the inputs are regular of one common degree.
    CoronalMismatch { first: Coronal, second: Coronal, both_regular: bool },
    EnergyMismatch { first: f64, second: f64 },
    Cospectral,
}

impl fmt::Display for Inadmissible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inadmissible::OrderMismatch { first, second } => {
                write!(f, "orders differ ({first} vs {second})")
            }
            Inadmissible::CoronalMismatch { first, second, both_regular } => {
                write!(
                    f,
                    "coronals differ: ({})/({}) vs ({})/({})",
                    first.numerator, first.denominator, second.numerator, second.denominator
                )?;
                if *both_regular {
                    write!(f, " although both inputs are regular of the same degree")?;
                }
                Ok(())
            }
            Inadmissible::EnergyMismatch { first, second } => {
                write!(f, "energies differ ({first} vs {second})")
            }
            Inadmissible::Cospectral => write!(f, "inputs are cospectral"),
        }
    }
}

fn adjacency_coronal(h: &SignedGraph) -> Coronal {
    coronal(&h.adjacency(), &h.canonical_marking()).expect("marking has graph order")
}

/// Every violated hypothesis, in a fixed order.
pub fn admissibility(h1: &SignedGraph, h2: &SignedGraph) -> Result<Vec<Inadmissible>> {
    let mut bad = Vec::new();
    if h1.order() != h2.order() {
        bad.push(Inadmissible::OrderMismatch { first: h1.order(), second: h2.order() });
    }
    let (c1, c2) = (adjacency_coronal(h1), adjacency_coronal(h2));
    if c1 != c2 {
        let r1 = h1.regularity().degree_regular;
        let both_regular = r1.is_some() && r1 == h2.regularity().degree_regular;
        bad.push(Inadmissible::CoronalMismatch { first: c1, second: c2, both_regular });
    }
    let (e1, e2) = (energy(h1)?.energy, energy(h2)?.energy);
    if (e1 - e2).abs() > INPUT_ENERGY_TOL {
        bad.push(Inadmissible::EnergyMismatch { first: e1, second: e2 });
    }
    if char_poly(&h1.adjacency()) == char_poly(&h2.adjacency()) {
        bad.push(Inadmissible::Cospectral);
    }
    Ok(bad)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquienergeticReport {
    pub input_energy: f64,
    pub energy_first: f64,
    pub energy_second: f64,
    pub first_char_poly: IntPolynomial,
    pub second_char_poly: IntPolynomial,
}

impl EquienergeticReport {
    pub fn energy_gap(&self) -> f64 {
        (self.energy_first - self.energy_second).abs()
    }

    pub fn equienergetic(&self) -> bool {
        self.energy_gap() <= PRODUCT_ENERGY_TOL
    }

    pub fn non_cospectral(&self) -> bool {
        self.first_char_poly != self.second_char_poly
    }

    pub fn holds(&self) -> bool {
        self.equienergetic() && self.non_cospectral()
    }
}

#[derive(Debug, Clone)]
pub struct EquienergeticPair {
    pub first: SignedGraph,
    pub second: SignedGraph,
    pub report: EquienergeticReport,
}

/// Builds `g ⊛ h1` and `g ⊛ h2` and measures them.
pub fn equienergetic_product_pair(
    g: &SignedGraph,
    h1: &SignedGraph,
    h2: &SignedGraph,
) -> Result<EquienergeticPair> {
    let bad = admissibility(h1, h2)?;
    if !bad.is_empty() {
        return Err(Error::NotAdmissible(bad));
    }
    let (first, _) = add_vertex_corona(g, h1);
    let (second, _) = add_vertex_corona(g, h2);
    let report = EquienergeticReport {
        input_energy: energy(h1)?.energy,
        energy_first: energy(&first)?.energy,
        energy_second: energy(&second)?.energy,
        first_char_poly: char_poly(&first.adjacency()),
        second_char_poly: char_poly(&second.adjacency()),
    };
    Ok(EquienergeticPair { first, second, report })
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub max_order: usize,
    /// Connected unlabeled graphs scanned.
    pub underlying_graphs: usize,
    /// Switching classes of signings scanned.
    pub switching_classes: usize,
    /// Pairs of distinct spectra sharing an energy.
    pub equal_energy_spectra: usize,
    /// One admissible `(h1, h2)` per (spectrum, spectrum, coronal) triple.
    pub pairs: Vec<(SignedGraph, SignedGraph)>,
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0u32;
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                if frontier >> u & 1 == 1 {
                    next |= 1 << v;
                }
                if frontier >> v & 1 == 1 {
                    next |= 1 << u;
                }
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == (1u32 << n) - 1
}

/// One representative edge mask per isomorphism class of connected graphs on `n` vertices.
fn connected_graphs(n: usize) -> Vec<u32> {
    let pairs = pair_list(n);
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let images: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| index[&(p[u].min(p[v]), p[u].max(p[v]))])
                .collect()
        })
        .collect();
    let mut seen = vec![false; 1 << pairs.len()];
    let mut reps = Vec::new();
    for mask in 0..1u32 << pairs.len() {
        if seen[mask as usize] || !connected(n, &pairs, mask) {
            continue;
        }
        reps.push(mask);
        for image in &images {
            let mut m = 0u32;
            for (k, &t) in image.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    m |= 1 << t;
                }
            }
            seen[m as usize] = true;
        }
    }
    reps
}

/// One signing per switching class: edges of a BFS spanning tree stay positive.
fn switching_classes(n: usize, edges: &[(usize, usize)]) -> Vec<SignedGraph> {
    let mut in_tree = vec![false; edges.len()];
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut queue = vec![0];
    while let Some(u) = queue.pop() {
        for (k, &(a, b)) in edges.iter().enumerate() {
            let w = if a == u { b } else if b == u { a } else { continue };
            if !reached[w] {
                reached[w] = true;
                in_tree[k] = true;
                queue.push(w);
            }
        }
    }
    let free: Vec<usize> = (0..edges.len()).filter(|&k| !in_tree[k]).collect();
    (0..1u32 << free.len())
        .map(|bits| {
            let mut signs = vec![Sign::Pos; edges.len()];
            for (b, &k) in free.iter().enumerate() {
                if bits >> b & 1 == 1 {
                    signs[k] = Sign::Neg;
                }
            }
            let list = edges.iter().zip(signs).map(|(&(u, v), s)| (u, v, s));
            SignedGraph::new(n, list).expect("valid edge list")
        })
        .collect()
}

/// Distinct adjacency coronals over every switching of `h`, with a witness each.
fn coronals_over_switchings(h: &SignedGraph) -> Vec<(Coronal, SignedGraph)> {
    let n = h.order();
    let mut out: Vec<(Coronal, SignedGraph)> = Vec::new();
    for bits in 0..1u32 << n.saturating_sub(1) {
        let theta: Vec<Sign> =
            (0..n).map(|v| if v > 0 && bits >> (v - 1) & 1 == 1 { Sign::Neg } else { Sign::Pos }).collect();
        let s = h.switch(&Marking::new(theta)).expect("marking has graph order");
        let c = adjacency_coronal(&s);
        if !out.iter().any(|(d, _)| *d == c) {
            out.push((c, s));
        }
    }
    out
}

struct SpectrumGroup {
    energy: f64,
    poly: IntPolynomial,
    members: Vec<SignedGraph>,
}

/// Exhaustive scan of connected signed graphs on at most `max_order` vertices
/// for admissible equienergetic inputs.
pub fn search_equienergetic_pairs(max_order: usize) -> Result<SearchOutcome> {
    assert!(max_order <= 7, "search is exhaustive and sized for small orders");
    let mut outcome = SearchOutcome {
        max_order,
        underlying_graphs: 0,
        switching_classes: 0,
        equal_energy_spectra: 0,
        pairs: Vec::new(),
    };
    for n in 1..=max_order {
        let pairs = pair_list(n);
        let mut groups: Vec<SpectrumGroup> = Vec::new();
        let mut by_poly: HashMap<IntPolynomial, usize> = HashMap::new();
        for mask in connected_graphs(n) {
            outcome.underlying_graphs += 1;
            let edges: Vec<(usize, usize)> =
                (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pairs[k]).collect();
            for h in switching_classes(n, &edges) {
                outcome.switching_classes += 1;
                let poly = char_poly(&h.adjacency());
                match by_poly.get(&poly) {
                    Some(&i) => groups[i].members.push(h),
                    None => {
                        by_poly.insert(poly.clone(), groups.len());
                        groups.push(SpectrumGroup { energy: energy(&h)?.energy, poly, members: vec![h] });
                    }
                }
            }
        }
        groups.sort_by(|a, b| a.energy.total_cmp(&b.energy));

        let mut coronal_cache: HashMap<usize, Vec<(Coronal, SignedGraph)>> = HashMap::new();
        let mut coronals_of = |i: usize, groups: &[SpectrumGroup]| {
            coronal_cache
                .entry(i)
                .or_insert_with(|| {
                    let mut all: Vec<(Coronal, SignedGraph)> = Vec::new();
                    for h in &groups[i].members {
                        for (c, s) in coronals_over_switchings(h) {
                            if !all.iter().any(|(d, _)| *d == c) {
                                all.push((c, s));
                            }
                        }
                    }
                    all
                })
                .clone()
        };
        for i in 0..groups.len() {
            for j in i + 1..groups.len() {
                if groups[j].energy - groups[i].energy > INPUT_ENERGY_TOL {
                    break;
                }
                debug_assert!(groups[i].poly != groups[j].poly);
                outcome.equal_energy_spectra += 1;
                let left = coronals_of(i, &groups);
                let right = coronals_of(j, &groups);
                for (c, h1) in &left {
                    if let Some((_, h2)) = right.iter().find(|(d, _)| d == c) {
                        outcome.pairs.push((h1.clone(), h2.clone()));
                    }
                }
            }
        }
    }
    Ok(outcome)
}
