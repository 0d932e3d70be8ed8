//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#![allow(clippy::needless_range_loop)]

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use signed_corona::exact::roots::real_roots;
use signed_corona::exact::{
    char_poly, coronal, product_char_poly_a, product_char_poly_l, product_char_poly_q, IntPolynomial,
};
use signed_corona::graph::{GraphMatrix, Marking, Sign, SignedGraph};
use signed_corona::products::{add_vertex_corona, duplication, switching_iso_witness, vertex_corona};
use signed_corona::spectra::{
    corollary_coregular_spectrum, corollary_star_spectrum, eig_sym, equienergetic_product_pair,
    is_integral, search_equienergetic_pairs, signed_star, spectrum, Inadmissible,
};
use signed_corona::structure::{
    edge_stats_formula, enumerate_edge_stats, enumerate_triad_stats, total_triads_formula,
    triad_stats_formula, unbalance_criteria, ViolatingEdge,
};
use signed_corona::Error;

const MATRICES: [GraphMatrix; 3] = [GraphMatrix::A, GraphMatrix::L, GraphMatrix::Q];

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> SignedGraph {
    let n = rng.gen_range(1..=max_n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((i, j, if rng.gen_bool(0.5) { Sign::Neg } else { Sign::Pos }));
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

fn random_marking(rng: &mut ChaCha8Rng, n: usize) -> Marking {
    Marking::new((0..n).map(|_| if rng.gen_bool(0.5) { Sign::Neg } else { Sign::Pos }).collect())
}

fn signings(graphs: &[SignedGraph]) -> Vec<SignedGraph> {
    graphs.iter().flat_map(|g| g.all_signings()).collect()
}

fn first_factors() -> Vec<SignedGraph> {
    signings(&[
        SignedGraph::empty(1),
        SignedGraph::path(2),
        SignedGraph::path(3),
        SignedGraph::cycle(3),
        SignedGraph::cycle(4),
    ])
}

fn second_factors() -> Vec<SignedGraph> {
    signings(&[SignedGraph::empty(1), SignedGraph::path(2), SignedGraph::cycle(3), SignedGraph::star(2)])
}

fn regular_first_factors() -> Vec<SignedGraph> {
    let two_k2 = SignedGraph::path(2).disjoint_union(&SignedGraph::path(2));
    signings(&[SignedGraph::empty(1), SignedGraph::path(2), SignedGraph::cycle(3), SignedGraph::cycle(4), two_k2])
}

/// Signings of small regular graphs that are co-regular.
fn coregular_pool() -> Vec<SignedGraph> {
    let c3 = SignedGraph::cycle(3);
    let bases = [
        SignedGraph::empty(1),
        SignedGraph::empty(2),
        SignedGraph::path(2),
        c3.clone(),
        SignedGraph::cycle(4),
        SignedGraph::cycle(5),
        SignedGraph::cycle(6),
        SignedGraph::complete(4),
        SignedGraph::complete(5),
        SignedGraph::path(2).disjoint_union(&SignedGraph::path(2)),
        c3.disjoint_union(&c3),
    ];
    signings(&bases).into_iter().filter(|g| g.regularity().co_regular_pair.is_some()).collect()
}

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }
}

type Criterion = (u8, &'static str, fn(&mut Outcome));

fn adjacency_identity(o: &mut Outcome) {
    for g1 in first_factors() {
        for g2 in second_factors() {
            let (prod, _) = add_vertex_corona(&g1, &g2);
            let ok = product_char_poly_a(&g1, &g2) == char_poly(&prod.adjacency());
            o.check(ok, || format!("A identity fails for {g1:?} and {g2:?}"));
        }
    }
}

fn laplacian_identities(o: &mut Outcome) {
    for g1 in regular_first_factors() {
        for g2 in second_factors() {
            let (prod, _) = add_vertex_corona(&g1, &g2);
            let l = product_char_poly_l(&g1, &g2).unwrap() == char_poly(&prod.laplacian());
            let q = product_char_poly_q(&g1, &g2).unwrap() == char_poly(&prod.signless_laplacian());
            o.check(l && q, || format!("L/Q identity fails for {g1:?} and {g2:?}"));
        }
    }
}

fn switching_isomorphism(o: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let g1 = random_graph(&mut rng, 4);
        let g2 = random_graph(&mut rng, 4);
        let (star, _) = add_vertex_corona(&g1, &g2);
        let (circ, _) = vertex_corona(&g1, &g2);
        match switching_iso_witness(&g1, &g2) {
            Ok(w) => {
                let image = star.relabel(&w.bijection).unwrap().switch(&w.switching).unwrap();
                o.check(image == circ, || format!("witness image differs for {g1:?}, {g2:?}"));
            }
            Err(e) => o.check(false, || format!("witness failed: {e}")),
        }
        for m in MATRICES {
            let ok = char_poly(&star.matrix(m)) == char_poly(&circ.matrix(m));
            o.check(ok, || format!("{m} char polys differ for {g1:?}, {g2:?}"));
        }
    }
}

fn derived_graph_balance(o: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let g = random_graph(&mut rng, 8);
        let mu = g.mu_signed(&g.canonical_marking()).unwrap();
        o.check(mu.is_balanced(), || format!("mu-signed graph unbalanced: {g:?}"));
        let d = duplication(&g);
        o.check(d.is_balanced(), || format!("duplication unbalanced: {g:?}"));
        for comp in d.components() {
            let low = spectrum(&d.induced(&comp), GraphMatrix::L).unwrap().smallest().unwrap();
            o.check(low.abs() <= 1e-8, || format!("component Laplacian minimum {low} for {g:?}"));
        }
    }
}

fn tables(o: &mut Outcome) {
    for g1 in first_factors() {
        for g2 in second_factors() {
            o.check(edge_stats_formula(&g1, &g2) == enumerate_edge_stats(&g1, &g2), || {
                format!("edge table differs for {g1:?}, {g2:?}")
            });
            let t = triad_stats_formula(&g1, &g2);
            o.check(t == enumerate_triad_stats(&g1, &g2), || format!("triad table differs for {g1:?}, {g2:?}"));
            o.check(t.total.total() == total_triads_formula(&g1, &g2), || "total triad formula".into());
        }
    }
    let (p2, c3) = (SignedGraph::path(2), SignedGraph::cycle(3));
    o.check(enumerate_edge_stats(&p2, &c3).total.total() == 14, || "P2*C3 edge count".into());
    o.check(enumerate_triad_stats(&p2, &c3).total.total() == 8, || "P2*C3 triad count".into());
    let p3 = SignedGraph::path(3);
    let p2neg = p2.negated();
    let (prod, _) = add_vertex_corona(&p3, &p2neg);
    let (prod_circ, _) = vertex_corona(&p3, &p2neg);
    let crit = unbalance_criteria(&p2neg);
    o.check(p2neg.is_balanced(), || "negative P2 should be balanced".into());
    o.check(!prod.is_balanced() && !prod_circ.is_balanced(), || "P3*P2 should be unbalanced".into());
    o.check(crit.types == vec![ViolatingEdge::NegativeNegativeMarks], || format!("criteria {:?}", crit.types));
}

fn corollaries(o: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let pool = coregular_pool();
    for _ in 0..50 {
        let g1 = random_graph(&mut rng, 4);
        let g2 = &pool[rng.gen_range(0..pool.len())];
        let assembled = corollary_coregular_spectrum(&g1, g2).unwrap();
        let direct = spectrum(&add_vertex_corona(&g1, g2).0, GraphMatrix::A).unwrap();
        o.check(assembled.matches(&direct, 1e-8), || format!("co-regular corollary for {g1:?}, {g2:?}"));
    }
    for _ in 0..50 {
        let base = random_graph(&mut rng, 4);
        let g1 = base.mu_signed(&random_marking(&mut rng, base.order())).unwrap();
        let n2 = rng.gen_range(1..=5);
        let center = if rng.gen_bool(0.5) { Sign::Neg } else { Sign::Pos };
        let assembled = corollary_star_spectrum(&g1, n2, center).unwrap();
        let direct = spectrum(&add_vertex_corona(&g1, &signed_star(n2, center)).0, GraphMatrix::A).unwrap();
        o.check(assembled.matches(&direct, 1e-8), || format!("star corollary for {g1:?}, n2={n2}, {center}"));
    }
    let k1 = SignedGraph::empty(1);
    let want = |v: &[f64]| signed_corona::Spectrum::new(v.to_vec(), Some(GraphMatrix::A));
    let s = corollary_coregular_spectrum(&k1, &SignedGraph::cycle(3)).unwrap();
    o.check(s.matches(&want(&[3.0, 0.0, -1.0, -1.0, -1.0]), 1e-8), || format!("K1*C3 gave {:?}", s.eigenvalues));
    let s = corollary_star_spectrum(&k1, 1, Sign::Pos).unwrap();
    o.check(s.matches(&want(&[2.0, 0.0, -1.0, -1.0]), 1e-8), || format!("K1*K11 gave {:?}", s.eigenvalues));
}

fn coronal_catalog(o: &mut Outcome) {
    for g in coregular_pool() {
        let (_, k) = g.regularity().co_regular_pair.unwrap();
        let c = coronal(&g.adjacency(), &g.canonical_marking()).unwrap();
        let ok = c.numerator == IntPolynomial::from_i64s(&[g.order() as i64])
            && c.denominator == IntPolynomial::from_i64s(&[-k, 1]);
        o.check(ok, || format!("co-regular coronal {}/{} for {g:?}", c.numerator, c.denominator));
    }
    for n in 1..=6usize {
        for star in SignedGraph::star(n).all_signings() {
            let mu = star.canonical_marking();
            let m = mu.get(0).value();
            let ni = n as i64;
            let p = IntPolynomial::from_i64s(&[2 * ni * m, ni + 1]);
            let f = IntPolynomial::from_i64s(&[-ni, 0, 1]);
            let c = coronal(&star.adjacency(), &mu).unwrap();
            o.check(c.same_function(&p, &f), || format!("star coronal for {star:?}"));
            // for n = 1 the formula is not in lowest terms: it reduces to 2/(x - mu)
            let canonical = if n == 1 {
                c.numerator == IntPolynomial::from_i64s(&[2]) && c.denominator == IntPolynomial::from_i64s(&[-m, 1])
            } else {
                c.numerator == p && c.denominator == f
            };
            o.check(canonical, || format!("star canonical form {}/{}", c.numerator, c.denominator));
        }
    }
}

fn integrality(o: &mut Outcome) {
    let mut graphs = first_factors();
    graphs.extend(second_factors());
    graphs.extend(coregular_pool());
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        graphs.push(random_graph(&mut rng, 7));
    }
    for g in &graphs {
        let exact = is_integral(g);
        let s = spectrum(g, GraphMatrix::A).unwrap();
        let numeric = s.eigenvalues.iter().all(|x| (x - x.round()).abs() < 1e-7);
        o.check(exact.is_some() == numeric, || format!("integrality disagrees for {g:?}"));
    }
    o.check(is_integral(&SignedGraph::cycle(3)) == Some(vec![2, -1, -1]), || "C3 integral".into());
    o.check(is_integral(&SignedGraph::star(2)).is_none(), || "K12 not integral".into());
}

fn equienergetic(o: &mut Outcome) {
    let search = search_equienergetic_pairs(6).unwrap();
    println!(
        "  search: {} connected graphs, {} switching classes, {} equal-energy spectrum pairs, {} admissible pairs",
        search.underlying_graphs,
        search.switching_classes,
        search.equal_energy_spectra,
        search.pairs.len()
    );
    o.check(!search.pairs.is_empty(), || "no admissible pair on at most 6 vertices".into());
    let bases = [SignedGraph::empty(1), SignedGraph::path(2), SignedGraph::cycle(3)];
    for (h1, h2) in &search.pairs {
        for g in &bases {
            match equienergetic_product_pair(g, h1, h2) {
                Ok(pair) => o.check(pair.report.holds(), || format!("products differ: {:?}", pair.report)),
                Err(e) => o.check(false, || format!("pair {h1:?}, {h2:?} rejected: {e}")),
            }
        }
    }
    let c3 = SignedGraph::cycle(3);
    let guard = equienergetic_product_pair(&SignedGraph::path(2), &c3, &c3.negated());
    let rejected = matches!(
        &guard,
        Err(Error::NotAdmissible(r)) if r.len() == 1 && matches!(r[0], Inadmissible::CoronalMismatch { .. })
    );
    o.check(rejected, || format!("guard case not rejected: {guard:?}"));
}

fn eigensolver(o: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let n = rng.gen_range(1..=20);
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = rng.gen_range(-5..=5);
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        let exact = char_poly(&signed_corona::IntMatrix::from_rows(&m));
        let mf: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        let s = eig_sym(&mf).unwrap();
        let mut roots = real_roots(&exact, 1e-12);
        roots.reverse();
        let ok = roots.len() == n && s.eigenvalues.iter().zip(&roots).all(|(a, b)| (a - b).abs() <= 1e-8);
        o.check(ok, || format!("eigenvalues differ from exact roots for n={n}"));
        let trace: i64 = (0..n).map(|i| m[i][i]).sum();
        o.check((s.sum() - trace as f64).abs() <= 1e-9, || format!("trace identity n={n}"));
        let frob = (m.iter().flatten().map(|&x| (x * x) as f64).sum::<f64>()).sqrt();
        let from_eigs = s.eigenvalues.iter().map(|x| x * x).sum::<f64>().sqrt();
        o.check((frob - from_eigs).abs() <= 1e-9, || format!("Frobenius identity n={n}"));
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "adjacency product identity, exhaustive small sweep", adjacency_identity),
        (2, "Laplacian and signless Laplacian identities, regular first factors", laplacian_identities),
        (3, "switching isomorphism of the two products, 200 random pairs", switching_isomorphism),
        (4, "balance of mu-signed and duplication graphs, 500 random graphs", derived_graph_balance),
        (5, "edge and triad tables against enumeration", tables),
        (6, "co-regular and star corollary spectra", corollaries),
        (7, "coronal catalog for co-regular graphs and signed stars", coronal_catalog),
        (8, "exact integrality against rounding", integrality),
        (9, "equienergetic non-cospectral products", equienergetic),
        (10, "Jacobi eigensolver against exact characteristic polynomials", eigensolver),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let mut o = Outcome { failures: Vec::new() };
        run(&mut o);
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {id:>2}: {verdict}  {name} ({:.1?})", start.elapsed());
        for f in &o.failures {
            println!("    {f}");
        }
        failed += usize::from(!o.failures.is_empty());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
