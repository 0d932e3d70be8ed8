//! Duplication signed graphs and the two duplication corona products.
//!
//! A product of `g1` (order `n1`) and `g2` (order `n2`) has `n1 (2 + n2)`
//! vertices laid out as
//!
//! ```text
//! u_1 .. u_n1 | a_1 .. a_n1 | W_1 | W_2 | ... | W_n2
//! ```
//!
//! where `W_j = {v_j^1, ..., v_j^n1}` collects the `j`-th vertex of every
//! copy of `g2`. Join edges carry the sign `mu1(u_i) mu2(v_j)` taken from the
//! canonical markings of the two factors, which makes the adjacency matrix
//! equal to the block matrix
//!
//! ```text
//! [ 0        A(G1mu)       0          ]
//! [ A(G1mu)  0             mu2^T (x) phi1 ]
//! [ 0        mu2 (x) phi1  A(G2) (x) I ]
//! ```

use crate::error::{Error, Result};
use crate::graph::{Marking, Sign, SignedGraph};

/// Vertex positions inside a corona product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductLayout {
    pub n1: usize,
    pub n2: usize,
}

/// Role of a product vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    /// `u_i`, an original vertex of `g1`.
    Original(usize),
    /// `a_i`, the duplicate of `u_i`.
    Duplicate(usize),
    /// `v_j^i`: vertex `j` of the `i`-th copy of `g2`.
    Copy { copy: usize, vertex: usize },
}

impl ProductLayout {
    pub fn order(&self) -> usize {
        self.n1 * (2 + self.n2)
    }

    pub fn original(&self, i: usize) -> usize {
        i
    }

    pub fn duplicate(&self, i: usize) -> usize {
        self.n1 + i
    }

    /// Position of `v_j^i` (vertex `j` of copy `i`).
    pub fn copy_vertex(&self, copy: usize, vertex: usize) -> usize {
        2 * self.n1 + vertex * self.n1 + copy
    }

    pub fn slot(&self, index: usize) -> Slot {
        let n1 = self.n1;
        if index < n1 {
            Slot::Original(index)
        } else if index < 2 * n1 {
            Slot::Duplicate(index - n1)
        } else {
            let k = index - 2 * n1;
            Slot::Copy { copy: k % n1, vertex: k / n1 }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoronaKind {
    /// Copy `i` joined to the duplicate vertex `a_i`.
    AddVertex,
    /// Copy `i` joined to the original vertex `u_i`.
    Vertex,
}

/// `D(g)`: vertices `u_0..u_{n-1}` then `a_0..a_{n-1}`; every edge `u_i u_j` of `g`
/// is replaced by `a_i u_j` and `a_j u_i`, both signed `mu(u_i) mu(u_j)`.
pub fn duplication(g: &SignedGraph) -> SignedGraph {
    let n = g.order();
    let mu = g.canonical_marking();
    let edges = g.edges().flat_map(|(i, j, _)| {
        let s = mu.get(i) * mu.get(j);
        [(n + i, j, s), (n + j, i, s)]
    });
    SignedGraph::new(2 * n, edges).expect("duplication edges are simple")
}

fn corona(g1: &SignedGraph, g2: &SignedGraph, kind: CoronaKind) -> (SignedGraph, ProductLayout) {
    let layout = ProductLayout { n1: g1.order(), n2: g2.order() };
    let mu1 = g1.canonical_marking();
    let mu2 = g2.canonical_marking();
    let mut edges: Vec<(usize, usize, Sign)> = duplication(g1).edges().collect();
    for copy in 0..layout.n1 {
        for (x, y, s) in g2.edges() {
            edges.push((layout.copy_vertex(copy, x), layout.copy_vertex(copy, y), s));
        }
        let hub = match kind {
            CoronaKind::AddVertex => layout.duplicate(copy),
            CoronaKind::Vertex => layout.original(copy),
        };
        for j in 0..layout.n2 {
            edges.push((hub, layout.copy_vertex(copy, j), mu1.get(copy) * mu2.get(j)));
        }
    }
    let g = SignedGraph::new(layout.order(), edges).expect("corona edges are simple");
    (g, layout)
}

/// Duplication add-vertex corona `g1 ⊛ g2`.
pub fn add_vertex_corona(g1: &SignedGraph, g2: &SignedGraph) -> (SignedGraph, ProductLayout) {
    corona(g1, g2, CoronaKind::AddVertex)
}

/// Duplication vertex corona `g1 ⊚ g2`.
pub fn vertex_corona(g1: &SignedGraph, g2: &SignedGraph) -> (SignedGraph, ProductLayout) {
    corona(g1, g2, CoronaKind::Vertex)
}

pub fn corona_product(
    g1: &SignedGraph,
    g2: &SignedGraph,
    kind: CoronaKind,
) -> (SignedGraph, ProductLayout) {
    corona(g1, g2, kind)
}

/// Explicit switching isomorphism from `g1 ⊛ g2` onto `g1 ⊚ g2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingWitness {
    /// `bijection[x]` is the image of add-vertex-corona vertex `x`.
    pub bijection: Vec<usize>,
    pub switching: Marking,
}

/// Swaps `u_i <-> a_i`, fixes every copy vertex, switches by the all-positive
/// marking, and checks that the result is exactly `g1 ⊚ g2`.
pub fn switching_iso_witness(g1: &SignedGraph, g2: &SignedGraph) -> Result<SwitchingWitness> {
    let (star, layout) = add_vertex_corona(g1, g2);
    let (circ, _) = vertex_corona(g1, g2);
    let bijection: Vec<usize> = (0..layout.order())
        .map(|x| match layout.slot(x) {
            Slot::Original(i) => layout.duplicate(i),
            Slot::Duplicate(i) => layout.original(i),
            Slot::Copy { .. } => x,
        })
        .collect();
    let switching = Marking::all_positive(layout.order());
    let image = star.relabel(&bijection)?.switch(&switching)?;
    if image != circ {
        let missing = circ.edges().find(|&(u, v, s)| image.edge_sign(u, v) != Some(s));
        return Err(Error::WitnessMismatch(format!(
            "relabelled product differs from vertex corona (first differing edge {missing:?})"
        )));
    }
    Ok(SwitchingWitness { bijection, switching })
}
