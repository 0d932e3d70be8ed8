//! Command-line front end. `run` returns the process exit code: `0` on
//! success or PASS, `1` on FAIL, `2` on usage, input or hypothesis errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::exact::{coronal, verify_theorem};
use crate::format::{parse_graph, write_graph, write_product};
use crate::graph::{Balance, GraphMatrix, SignedGraph};
use crate::products::{corona_product, duplication, CoronaKind};
use crate::spectra::{self, format_real};
use crate::structure::{
    edge_stats_formula, enumerate_edge_stats, enumerate_triad_stats, triad_stats_formula,
    unbalance_criteria, SignCount, TriadCounts,
};

#[derive(Parser, Debug)]
#[command(name = "signed-corona", version, about = "Duplication corona products of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixArg {
    A,
    L,
    Q,
}

impl From<MatrixArg> for GraphMatrix {
    fn from(m: MatrixArg) -> Self {
        match m {
            MatrixArg::A => GraphMatrix::A,
            MatrixArg::L => GraphMatrix::L,
            MatrixArg::Q => GraphMatrix::Q,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    AddVertex,
    Vertex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues of A, L or Q, one per line, descending
    Spectrum {
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        matrix: MatrixArg,
        file: PathBuf,
    },
    /// Balance witness marking or a negative cycle
    Balance { file: PathBuf },
    /// Canonical marking
    Marking { file: PathBuf },
    /// Duplication signed graph
    Duplicate { file: PathBuf },
    /// Duplication corona product with its vertex layout
    Corona {
        #[arg(long, value_enum)]
        kind: KindArg,
        g1: PathBuf,
        g2: PathBuf,
    },
    /// Edge and triad statistics, closed form against enumeration
    Stats { g1: PathBuf, g2: PathBuf },
    /// Reduced coronal P/F (ascending coefficients)
    Coronal {
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        matrix: MatrixArg,
        file: PathBuf,
    },
    /// Exact check of a product characteristic-polynomial identity
    Verify {
        #[arg(long, value_enum, ignore_case = true)]
        theorem: MatrixArg,
        g1: PathBuf,
        g2: PathBuf,
    },
    /// Energy and adjacency spectrum
    Energy { file: PathBuf },
    /// Exact integrality test
    Integral { file: PathBuf },
    /// Equienergetic non-cospectral products G ⊛ H1 and G ⊛ H2
    Equienergetic { g: PathBuf, h1: PathBuf, h2: PathBuf },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("write failed: {e}"))
    }
}

fn load(path: &Path) -> Result<SignedGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn one_based(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Spectrum { matrix, file } => {
            let g = load(&file)?;
            write!(out, "{}", spectra::spectrum(&g, matrix.into())?)?;
        }
        Command::Balance { file } => match load(&file)?.balance() {
            Balance::Balanced(m) => {
                writeln!(out, "balanced")?;
                writeln!(out, "marking: {}", marking_text(m.signs()))?;
            }
            Balance::Unbalanced { edge, cycle } => {
                writeln!(out, "unbalanced")?;
                writeln!(out, "edge: {}", one_based([edge.0, edge.1]))?;
                writeln!(out, "cycle: {}", one_based(cycle))?;
            }
        },
        Command::Marking { file } => {
            let g = load(&file)?;
            writeln!(out, "{}", marking_text(g.canonical_marking().signs()))?;
        }
        Command::Duplicate { file } => {
            write!(out, "{}", write_graph(&duplication(&load(&file)?)))?;
        }
        Command::Corona { kind, g1, g2 } => {
            let kind = match kind {
                KindArg::AddVertex => CoronaKind::AddVertex,
                KindArg::Vertex => CoronaKind::Vertex,
            };
            let (g, layout) = corona_product(&load(&g1)?, &load(&g2)?, kind);
            write!(out, "{}", write_product(&g, &layout))?;
        }
        Command::Stats { g1, g2 } => return stats(&load(&g1)?, &load(&g2)?, out),
        Command::Coronal { matrix, file } => {
            let g = load(&file)?;
            let c = coronal(&g.matrix(matrix.into()), &g.canonical_marking())?;
            writeln!(out, "P: {}", c.numerator.to_ascending_string())?;
            writeln!(out, "F: {}", c.denominator.to_ascending_string())?;
            writeln!(out, "# ({}) / ({})", c.numerator, c.denominator)?;
        }
        Command::Verify { theorem, g1, g2 } => {
            let (g1, g2) = (load(&g1)?, load(&g2)?);
            let check = match verify_theorem(theorem.into(), &g1, &g2) {
                Err(Error::NotRegular) => {
                    return Err(Failure::usage(format!(
                        "the {} identity assumes a degree-regular first factor; G1 is not regular",
                        GraphMatrix::from(theorem)
                    )))
                }
                other => other?,
            };
            writeln!(out, "formula: {}", check.formula.to_ascending_string())?;
            writeln!(out, "direct:  {}", check.direct.to_ascending_string())?;
            let pass = check.holds();
            writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
            return Ok(if pass { 0 } else { 1 });
        }
        Command::Energy { file } => {
            let report = spectra::energy(&load(&file)?)?;
            writeln!(out, "energy: {}", format_real(report.energy))?;
            write!(out, "{}", report.spectrum)?;
        }
        Command::Integral { file } => match spectra::is_integral(&load(&file)?) {
            Some(values) => {
                writeln!(out, "integral")?;
                for v in values {
                    writeln!(out, "{v}")?;
                }
            }
            None => writeln!(out, "not integral")?,
        },
        Command::Equienergetic { g, h1, h2 } => {
            let (g, h1, h2) = (load(&g)?, load(&h1)?, load(&h2)?);
            let pair = match spectra::equienergetic_product_pair(&g, &h1, &h2) {
                Err(Error::NotAdmissible(reasons)) => {
                    writeln!(out, "inputs not admissible:")?;
                    for r in reasons {
                        writeln!(out, "  {r}")?;
                    }
                    writeln!(out, "FAIL")?;
                    return Ok(1);
                }
                other => other?,
            };
            let r = &pair.report;
            writeln!(out, "input energy: {}", format_real(r.input_energy))?;
            writeln!(out, "energy G*H1:  {}", format_real(r.energy_first))?;
            writeln!(out, "energy G*H2:  {}", format_real(r.energy_second))?;
            writeln!(out, "char poly G*H1: {}", r.first_char_poly.to_ascending_string())?;
            writeln!(out, "char poly G*H2: {}", r.second_char_poly.to_ascending_string())?;
            writeln!(out, "cospectral: {}", if r.non_cospectral() { "no" } else { "yes" })?;
            writeln!(out, "{}", if r.holds() { "PASS" } else { "FAIL" })?;
            return Ok(if r.holds() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn marking_text(signs: &[crate::graph::Sign]) -> String {
    signs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

struct Table<'a> {
    out: &'a mut dyn Write,
    mismatches: usize,
}

impl Table<'_> {
    fn row(&mut self, name: &str, f: u64, e: u64) -> std::io::Result<()> {
        let verdict = if f == e { "formula = enumeration" } else { "MISMATCH" };
        if f != e {
            self.mismatches += 1;
        }
        writeln!(self.out, "{name:<24} {f:>8} {e:>8}  {verdict}")
    }

    fn signs(&mut self, name: &str, f: SignCount, e: SignCount) -> std::io::Result<()> {
        self.row(&format!("{name} +"), f.positive, e.positive)?;
        self.row(&format!("{name} -"), f.negative, e.negative)?;
        self.row(&format!("{name} total"), f.total(), e.total())
    }

    fn triads(&mut self, name: &str, f: TriadCounts, e: TriadCounts) -> std::io::Result<()> {
        for i in 0..4 {
            self.row(&format!("{name} T{i}"), f.t[i], e.t[i])?;
        }
        self.row(&format!("{name} total"), f.total(), e.total())
    }
}

fn stats(g1: &SignedGraph, g2: &SignedGraph, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut t = Table { out, mismatches: 0 };
    let (ef, ee) = (edge_stats_formula(g1, g2), enumerate_edge_stats(g1, g2));
    writeln!(t.out, "{:<24} {:>8} {:>8}", "edges", "formula", "enum")?;
    t.signs("duplication", ef.duplication, ee.duplication)?;
    t.signs("copies", ef.copies, ee.copies)?;
    t.signs("join", ef.join, ee.join)?;
    t.signs("all", ef.total, ee.total)?;
    let (n1, n2) = (ef.first_marks, ef.second_marks);
    writeln!(t.out, "N1: +{} -{}  N2: +{} -{}", n1.positive, n1.negative, n2.positive, n2.negative)?;

    let (tf, te) = (triad_stats_formula(g1, g2), enumerate_triad_stats(g1, g2));
    writeln!(t.out, "{:<24} {:>8} {:>8}", "triads", "formula", "enum")?;
    t.triads("duplication", tf.duplication, te.duplication)?;
    t.triads("copies", tf.copies, te.copies)?;
    t.triads("apex", tf.apex, te.apex)?;
    t.triads("all", tf.total, te.total)?;

    writeln!(t.out, "edge total: {}", ee.total.total())?;
    writeln!(t.out, "triad total: {}", te.total.total())?;
    let crit = unbalance_criteria(g2);
    let types: Vec<String> = crit.types.iter().map(|t| t.number().to_string()).collect();
    let listed = if types.is_empty() { "none".to_string() } else { types.join(" ") };
    writeln!(t.out, "unbalancing edge types in G2: {listed}")?;
    if crit.second_unbalanced {
        writeln!(t.out, "warning: G2 is unbalanced, so the product is unbalanced")?;
    }
    writeln!(t.out, "product balanced: {}", if crit.predicts_balanced() { "yes" } else { "no" })?;
    Ok(if t.mismatches == 0 { 0 } else { 1 })
}
