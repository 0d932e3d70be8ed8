//! Signed graphs, markings, switching and structural balance.
//!
//! Vertices are `0..n`. Edges are stored once, keyed by `(min, max)`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn is_pos(self) -> bool {
        self == Sign::Pos
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Neg
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_pos() { "+" } else { "-" })
    }
}

/// A `±1` label per vertex. Its diagonal form squares to the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Marking(Vec<Sign>);

impl Marking {
    pub fn new(values: Vec<Sign>) -> Self {
        Marking(values)
    }

    pub fn all_positive(n: usize) -> Self {
        Marking(vec![Sign::Pos; n])
    }

    /// Fails unless every entry is `+1` or `-1`.
    pub fn from_values(values: &[i64]) -> Option<Self> {
        values.iter().map(|&v| Sign::from_value(v)).collect::<Option<Vec<_>>>().map(Marking)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Sign {
        self.0[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.iter().map(|s| s.value()).collect()
    }

    pub fn count(&self, s: Sign) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }
}

/// Which graph matrix: adjacency `A`, Laplacian `L = D - A`, or signless Laplacian `Q = D + A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphMatrix {
    A,
    L,
    Q,
}

impl fmt::Display for GraphMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphMatrix::A => "A",
            GraphMatrix::L => "L",
            GraphMatrix::Q => "Q",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityReport {
    pub degree_regular: Option<usize>,
    pub net_regular: Option<i64>,
    pub co_regular_pair: Option<(usize, i64)>,
}

/// Outcome of the balance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Balance {
    /// `sigma(uv) = mu(u) mu(v)` for every edge.
    Balanced(Marking),
    /// `edge` closes the negative cycle `cycle` (vertex sequence, closing edge implied).
    Unbalanced { edge: (usize, usize), cycle: Vec<usize> },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced(_))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), Sign>,
    adj: Vec<Vec<(usize, Sign)>>,
}

impl SignedGraph {
    /// Builds a simple signed graph; loops, repeated pairs and out-of-range
    /// endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut map = BTreeMap::new();
        for (u, v, s) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let key = (u.min(v), u.max(v));
            if map.insert(key, s).is_some() {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
        }
        Ok(Self::from_map(n, map))
    }

    fn from_map(n: usize, edges: BTreeMap<(usize, usize), Sign>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (&(u, v), &s) in &edges {
            adj[u].push((v, s));
            adj[v].push((u, s));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SignedGraph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_map(n, BTreeMap::new())
    }

    /// All-positive path on `n` vertices (`path(2)` is `K2`).
    pub fn path(n: usize) -> Self {
        Self::positive(n, (1..n).map(|i| (i - 1, i)))
    }

    /// All-positive cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::positive(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        Self::positive(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// All-positive star `K(1,leaves)` with center `0`.
    pub fn star(leaves: usize) -> Self {
        Self::positive(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    fn positive(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> Self {
        let map = pairs.map(|(u, v)| ((u.min(v), u.max(v)), Sign::Pos)).collect();
        Self::from_map(n, map)
    }

    /// Same underlying graph; edge `k` (in sorted order) is negative iff bit `k` of `mask` is set.
    pub fn with_signs(&self, mask: u64) -> Self {
        let map = self
            .edges
            .keys()
            .enumerate()
            .map(|(k, &e)| (e, if mask >> k & 1 == 1 { Sign::Neg } else { Sign::Pos }))
            .collect();
        Self::from_map(self.n, map)
    }

    /// Every sign assignment of the underlying graph.
    pub fn all_signings(&self) -> impl Iterator<Item = SignedGraph> + '_ {
        assert!(self.size() < 64);
        (0..1u64 << self.size()).map(move |mask| self.with_signs(mask))
    }

    pub fn negated(&self) -> Self {
        let map = self.edges.iter().map(|(&e, &s)| (e, -s)).collect();
        Self::from_map(self.n, map)
    }

    pub fn disjoint_union(&self, other: &SignedGraph) -> Self {
        let off = self.n;
        let map = self
            .edges
            .iter()
            .map(|(&e, &s)| (e, s))
            .chain(other.edges.iter().map(|(&(u, v), &s)| ((u + off, v + off), s)))
            .collect();
        Self::from_map(self.n + other.n, map)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v, sign)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.edges.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    pub fn edge_sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn positive_degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|(_, s)| s.is_pos()).count()
    }

    pub fn negative_degree(&self, v: usize) -> usize {
        self.degree(v) - self.positive_degree(v)
    }

    /// `d+ - d-`.
    pub fn signed_degree(&self, v: usize) -> i64 {
        self.positive_degree(v) as i64 - self.negative_degree(v) as i64
    }

    pub fn count_edges(&self, s: Sign) -> usize {
        self.edges.values().filter(|&&x| x == s).count()
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for (u, v, s) in self.edges() {
            m[(u, v)] = s.value();
            m[(v, u)] = s.value();
        }
        m
    }

    pub fn laplacian(&self) -> IntMatrix {
        self.degree_plus(-1)
    }

    pub fn signless_laplacian(&self) -> IntMatrix {
        self.degree_plus(1)
    }

    fn degree_plus(&self, adj_sign: i64) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for v in 0..self.n {
            m[(v, v)] = self.degree(v) as i64;
        }
        for (u, v, s) in self.edges() {
            m[(u, v)] = adj_sign * s.value();
            m[(v, u)] = adj_sign * s.value();
        }
        m
    }

    pub fn matrix(&self, which: GraphMatrix) -> IntMatrix {
        match which {
            GraphMatrix::A => self.adjacency(),
            GraphMatrix::L => self.laplacian(),
            GraphMatrix::Q => self.signless_laplacian(),
        }
    }

    /// Product of incident edge signs; isolated vertices get `+1`.
    pub fn canonical_marking(&self) -> Marking {
        Marking(
            self.adj
                .iter()
                .map(|list| list.iter().fold(Sign::Pos, |acc, &(_, s)| acc * s))
                .collect(),
        )
    }

    fn check_len(&self, m: &Marking) -> Result<()> {
        if m.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: m.len() });
        }
        Ok(())
    }

    /// The graph with every edge `uv` re-signed to `m(u) m(v)`.
    pub fn mu_signed(&self, m: &Marking) -> Result<Self> {
        self.check_len(m)?;
        let map = self.edges.keys().map(|&(u, v)| ((u, v), m.get(u) * m.get(v))).collect();
        Ok(Self::from_map(self.n, map))
    }

    /// Every edge sign multiplied by `theta(u) theta(v)`.
    pub fn switch(&self, theta: &Marking) -> Result<Self> {
        self.check_len(theta)?;
        let map = self
            .edges
            .iter()
            .map(|(&(u, v), &s)| ((u, v), theta.get(u) * s * theta.get(v)))
            .collect();
        Ok(Self::from_map(self.n, map))
    }

    /// Breadth-first propagation of `mu(v) = sigma(uv) mu(u)`, roots marked `+1`
    /// in increasing vertex order.
    pub fn balance(&self) -> Balance {
        let mut mark: Vec<Option<Sign>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if mark[root].is_some() {
                continue;
            }
            mark[root] = Some(Sign::Pos);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let mu = mark[u].unwrap();
                for &(v, s) in &self.adj[u] {
                    let want = s * mu;
                    match mark[v] {
                        None => {
                            mark[v] = Some(want);
                            parent[v] = u;
                            queue.push_back(v);
                        }
                        Some(have) if have != want => {
                            let cycle = tree_cycle(&parent, u, v);
                            return Balance::Unbalanced { edge: (u.min(v), u.max(v)), cycle };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Balance::Balanced(Marking(mark.into_iter().map(Option::unwrap).collect()))
    }

    pub fn is_balanced(&self) -> bool {
        self.balance().is_balanced()
    }

    pub fn regularity(&self) -> RegularityReport {
        fn uniform<T: PartialEq + Copy>(mut it: impl Iterator<Item = T>) -> Option<T> {
            let first = it.next()?;
            it.all(|x| x == first).then_some(first)
        }
        let degree_regular = uniform((0..self.n).map(|v| self.degree(v)));
        let net_regular = uniform((0..self.n).map(|v| self.signed_degree(v)));
        let co_regular_pair = degree_regular.zip(net_regular);
        RegularityReport { degree_regular, net_regular, co_regular_pair }
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &(v, _) in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let map = self
            .edges()
            .filter(|&(u, v, _)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v, s)| {
                let (a, b) = (index[u], index[v]);
                ((a.min(b), a.max(b)), s)
            })
            .collect();
        Self::from_map(vertices.len(), map)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: perm.len() });
        }
        Self::new(self.n, self.edges().map(|(u, v, s)| (perm[u], perm[v], s)))
    }
}

fn tree_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let to_root = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = to_root(u);
    let pv = to_root(v);
    // strip the shared tail above the lowest common ancestor
    let mut common = 0;
    while common < pu.len().min(pv.len())
        && pu[pu.len() - 1 - common] == pv[pv.len() - 1 - common]
    {
        common += 1;
    }
    let mut cycle: Vec<usize> = pu[..=pu.len() - common].to_vec();
    cycle.extend(pv[..pv.len() - common].iter().rev());
    cycle
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}; ", self.n)?;
        for (i, (u, v, s)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}{s}{v}")?;
        }
        f.write_str(")")
    }
}
