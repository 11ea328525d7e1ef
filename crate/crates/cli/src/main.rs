//! `cofree`: exact computations in the free 2-associative bialgebra on trees.
//!
//! Every verb prints plain text, or JSON with `--json`. Exit code 0 means
//! success, 2 a usage or parse error and 3 a failed internal identity.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cofree::bialgebra::{antipode, coproduct, format_tensor2, primitive_basis, Coproduct, FreeModel, Tensor2};
use cofree::binfty::{check_rijk_sampled, expand_decorated, free_compose_mpq, mpq_in_2as, BInftyElement, FreeTwoAs};
use cofree::free2as::{
    basis_to_json, element_to_json, format_element, parse_element, product, Basis, DecoratedTree, FreeElement, Tag,
    DEFAULT_GENERATOR,
};
use cofree::homology;
use cofree::linear::{format_rational, rational, LinComb, Rational};
use cofree::projector::{e_free, omega, StructureIso};
use cofree::tensor::theta;
use cofree::trees::{enumerate, schroeder, schroeder_series_check, PlanarTree};
use cofree::{free2as, Error};

#[derive(Parser, Debug)]
#[command(name = "cofree", version, about = "Exact computations with 2-associative algebras on planar trees")]
struct Cli {
    /// Largest degree any input or output may reach.
    #[arg(long, global = true, default_value_t = 6)]
    degree_bound: usize,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// `single` accepts only the generator `x`; `decorated` accepts any labels.
    #[arg(long, global = true, value_enum, default_value_t = GeneratorMode::Decorated)]
    generator_mode: GeneratorMode,

    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GeneratorMode {
    Single,
    Decorated,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Product {
    Star,
    Dot,
}

impl From<Product> for Tag {
    fn from(p: Product) -> Tag {
        match p {
            Product::Star => Tag::Star,
            Product::Dot => Tag::Dot,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Delta,
    Delta2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Planar rooted trees.
    #[command(subcommand)]
    Trees(TreesCmd),
    /// Product of two elements.
    Mul {
        #[arg(long, value_enum)]
        op: Product,
        a: String,
        b: String,
    },
    /// Coproduct of an element.
    Coprod {
        #[arg(long, value_enum, default_value_t = Which::Delta)]
        which: Which,
        a: String,
    },
    /// Antipode for the Hopf structure (*, Δ).
    Antipode { a: String },
    /// Primitive elements.
    #[command(subcommand)]
    Prim(PrimCmd),
    /// Apply the idempotent e onto primitives.
    Project { a: String },
    /// The dot-tagged part ω(t) of e(t*).
    Omega {
        #[arg(short = 't', long = "tree")]
        tree: String,
    },
    /// The operation M_pq on elements, or on decorated trees with --free.
    Mpq(MpqArgs),
    /// Sampled identity checks.
    #[command(subcommand)]
    Check(CheckCmd),
    /// The isomorphism with the cofree coalgebra on primitives.
    #[command(subcommand)]
    Iso(IsoCmd),
    /// The morphism θ into the shuffle algebra on one letter.
    Theta { a: String },
    /// Homology ranks of the b′ complex.
    Homology {
        #[arg(long, value_enum)]
        product: Product,
        #[arg(short = 'd')]
        degree: usize,
    },
    /// Generating series identities.
    #[command(subcommand)]
    Series(SeriesCmd),
}

#[derive(Subcommand, Debug)]
enum TreesCmd {
    /// List the trees with n leaves in canonical order.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
    },
    /// The number of trees with n + 1 leaves.
    Schroeder {
        #[arg(short = 'n')]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum PrimCmd {
    /// A basis of the primitives of degree n.
    Basis {
        #[arg(short = 'n')]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct MpqArgs {
    #[arg(short = 'p', required_unless_present = "expand")]
    p: Option<usize>,
    #[arg(short = 'q', required_unless_present = "expand")]
    q: Option<usize>,
    /// Compose decorated trees in the free B∞-algebra instead.
    #[arg(long)]
    free: bool,
    /// Instead write M(t) for one decorated tree as a composite of the generating operations.
    #[arg(long)]
    expand: bool,
    /// The p left arguments followed by the q right arguments, or the tree for --expand.
    #[arg(allow_hyphen_values = true)]
    args: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    /// The relation R_ijk on seeded random inputs; the degree bound limits i + j + k.
    Rijk {
        #[arg(short = 'i')]
        i: usize,
        #[arg(short = 'j')]
        j: usize,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
}

#[derive(Subcommand, Debug)]
enum IsoCmd {
    /// Check F∘G = J and G∘F = Id in every degree up to n.
    Roundtrip {
        #[arg(short = 'n')]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesCmd {
    /// Check the Schröder and Hilbert series identities to the given order.
    Check {
        #[arg(long)]
        order: usize,
    },
}

/// What a verb prints: text lines and the equivalent JSON value.
struct Report {
    text: String,
    json: Value,
}

/// Failure of a check that must hold, reported with exit code 3.
fn inconsistent(what: impl Into<String>) -> Error {
    Error::Consistency(what.into())
}

struct Context {
    bound: usize,
    mode: GeneratorMode,
    seed: u64,
}

impl Context {
    fn bounded(&self, degree: usize) -> Result<(), Error> {
        if degree > self.bound {
            return Err(Error::DegreeBound { degree, bound: self.bound });
        }
        Ok(())
    }

    fn check_labels<'a>(&self, labels: impl IntoIterator<Item = &'a free2as::Label>) -> Result<(), Error> {
        if self.mode == GeneratorMode::Single {
            if let Some(l) = labels.into_iter().find(|l| &***l != DEFAULT_GENERATOR) {
                return Err(Error::NotSingleGenerator(l.to_string()));
            }
        }
        Ok(())
    }

    fn element(&self, s: &str) -> Result<FreeElement, Error> {
        let x = parse_element(s)?;
        for b in x.basis() {
            self.bounded(b.degree())?;
            self.check_labels(b.labels())?;
        }
        Ok(x)
    }

    fn decorated(&self, s: &str) -> Result<DecoratedTree, Error> {
        let t: DecoratedTree = s.parse()?;
        self.bounded(t.degree())?;
        self.check_labels(t.labels())?;
        Ok(t)
    }

    fn output(&self, x: &FreeElement) -> Result<Report, Error> {
        if let Some(b) = x.basis().find(|b| b.degree() > self.bound) {
            self.bounded(b.degree())?;
        }
        Ok(element_report(x))
    }
}

fn element_report(x: &FreeElement) -> Report {
    Report { text: format_element(x), json: json!(element_to_json(x)) }
}

fn factor_json(b: &Basis) -> Value {
    let t = basis_to_json(b, &rational(1));
    json!({ "tree": t.tree, "tag": t.tag, "labels": t.labels })
}

fn tensor_report(x: &Tensor2) -> Report {
    let terms: Vec<Value> = x
        .iter()
        .map(|((a, b), c)| json!({ "coeff": format_rational(c), "factors": [factor_json(a), factor_json(b)] }))
        .collect();
    Report { text: format_tensor2(x), json: Value::Array(terms) }
}

fn binfty_report(x: &BInftyElement) -> Report {
    let terms: Vec<Value> = x
        .iter()
        .map(|(t, c)| {
            json!({
                "coeff": format_rational(c),
                "tree": t.tree().encode(),
                "labels": t.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let text = if x.is_zero() { "0".to_string() } else { x.to_string() };
    Report { text, json: Value::Array(terms) }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let ctx = Context { bound: cli.degree_bound, mode: cli.generator_mode, seed: cli.seed };
    match &cli.command {
        Command::Trees(TreesCmd::Enumerate { n }) => {
            ctx.bounded(*n)?;
            let trees = enumerate(*n)?;
            let codes: Vec<String> = trees.iter().map(PlanarTree::encode).collect();
            Ok(Report { text: codes.join("\n"), json: json!({ "degree": n, "trees": codes }) })
        }
        Command::Trees(TreesCmd::Schroeder { n }) => {
            let c = schroeder(*n).to_string();
            Ok(Report { text: c.clone(), json: json!({ "n": n, "count": c }) })
        }
        Command::Mul { op, a, b } => {
            let (x, y) = (ctx.element(a)?, ctx.element(b)?);
            ctx.output(&product((*op).into(), &x, &y))
        }
        Command::Coprod { which, a } => {
            let which = match which {
                Which::Delta => Coproduct::Delta,
                Which::Delta2 => Coproduct::DeltaSecond,
            };
            Ok(tensor_report(&coproduct(which, &ctx.element(a)?)))
        }
        Command::Antipode { a } => ctx.output(&antipode(&ctx.element(a)?)),
        Command::Prim(PrimCmd::Basis { n }) => {
            ctx.bounded(*n)?;
            let basis = primitive_basis(*n);
            let text: Vec<String> = basis.iter().map(format_element).collect();
            let terms: Vec<Value> = basis.iter().map(|p| json!(element_to_json(p))).collect();
            Ok(Report { text: text.join("\n"), json: json!({ "degree": n, "basis": terms }) })
        }
        Command::Project { a } => ctx.output(&e_free(&ctx.element(a)?)),
        Command::Omega { tree } => ctx.output(&omega(&ctx.decorated(tree)?)?),
        Command::Mpq(args) => mpq(&ctx, args),
        Command::Check(CheckCmd::Rijk { i, j, k, trials }) => {
            if *i == 0 || *j == 0 || *k == 0 {
                return Err(Error::InvalidArgument("R_ijk needs i, j, k >= 1".into()));
            }
            ctx.bounded(i + j + k)?;
            if !check_rijk_sampled(*i, *j, *k, ctx.seed, *trials)? {
                return Err(inconsistent(format!("R_{i}{j}{k} fails for seed {}", ctx.seed)));
            }
            Ok(Report {
                text: format!("R_{i}{j}{k} holds on {trials} samples (seed {})", ctx.seed),
                json: json!({ "relation": [i, j, k], "seed": ctx.seed, "trials": trials, "holds": true }),
            })
        }
        Command::Iso(IsoCmd::Roundtrip { n }) => roundtrip(&ctx, *n),
        Command::Theta { a } => {
            let x = ctx.element(a)?;
            let mut per_degree: std::collections::BTreeMap<usize, Rational> = Default::default();
            for (b, c) in x.iter() {
                *per_degree.entry(b.degree()).or_insert_with(|| rational(0)) +=
                    c * Rational::from_integer(theta(b)?);
            }
            let text = match per_degree.len() {
                1 => format_rational(per_degree.values().next().unwrap()),
                _ => per_degree
                    .iter()
                    .map(|(d, v)| format!("{d}: {}", format_rational(v)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            let json: serde_json::Map<String, Value> =
                per_degree.iter().map(|(d, v)| (d.to_string(), json!(format_rational(v)))).collect();
            Ok(Report { text, json: Value::Object(json) })
        }
        Command::Homology { product, degree } => {
            let r = homology::report((*product).into(), *degree, ctx.bound)?;
            let text = r.ranks.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            Ok(Report { text, json: json!(r) })
        }
        Command::Series(SeriesCmd::Check { order }) => {
            let schroeder_ok = schroeder_series_check(*order);
            let hilbert_ok = free2as::generating_series_check(*order);
            if !(schroeder_ok && hilbert_ok) {
                return Err(inconsistent(format!(
                    "series identities fail to order {order} (schroeder {schroeder_ok}, hilbert {hilbert_ok})"
                )));
            }
            Ok(Report {
                text: format!("series identities hold to order {order}"),
                json: json!({ "order": order, "schroeder": true, "hilbert": true }),
            })
        }
    }
}

fn mpq(ctx: &Context, args: &MpqArgs) -> Result<Report, Error> {
    if args.expand {
        let [t] = args.args.as_slice() else {
            return Err(Error::InvalidArgument("--expand takes exactly one tree".into()));
        };
        let expr = expand_decorated(&ctx.decorated(t)?)?;
        let value = expr.evaluate()?;
        let want: BInftyElement = LinComb::from_basis(ctx.decorated(t)?);
        if value != want {
            return Err(inconsistent(format!("expansion of {t} evaluates to {value}")));
        }
        return Ok(Report {
            text: expr.to_string(),
            json: json!({ "expression": expr.to_string(), "operations": expr.operation_count() }),
        });
    }
    let (p, q) = (args.p.unwrap_or(0), args.q.unwrap_or(0));
    if args.args.len() != p + q {
        return Err(Error::InvalidArgument(format!("expected p + q = {} arguments, found {}", p + q, args.args.len())));
    }
    if args.free {
        let trees = args.args.iter().map(|s| ctx.decorated(s)).collect::<Result<Vec<_>, _>>()?;
        ctx.bounded(trees.iter().map(DecoratedTree::degree).sum())?;
        let (l, r) = trees.split_at(p);
        return Ok(binfty_report(&free_compose_mpq(l, r)?));
    }
    let xs = args.args.iter().map(|s| ctx.element(s)).collect::<Result<Vec<_>, _>>()?;
    let (l, r) = xs.split_at(p);
    ctx.output(&mpq_in_2as(&FreeTwoAs, l, r)?)
}

fn roundtrip(ctx: &Context, n: usize) -> Result<Report, Error> {
    ctx.bounded(n)?;
    let model = FreeModel::unital_infinitesimal();
    let mut iso = StructureIso::new(&model, n)?;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for d in 0..=n {
        let fg = iso.check_fg_is_j(d)?;
        let gf = iso.check_gf_is_id(d)?;
        if !(fg && gf) {
            return Err(inconsistent(format!("structure maps fail in degree {d} (FG=J {fg}, GF=Id {gf})")));
        }
        let dim = iso.index().basis(d).len();
        let prim = iso.primitive_dimension(d);
        lines.push(format!("degree {d}: dim {dim}, primitives {prim}, FG=J ok, GF=Id ok"));
        rows.push(json!({ "degree": d, "dimension": dim, "primitives": prim, "fg_is_j": fg, "gf_is_id": gf }));
    }
    Ok(Report { text: lines.join("\n"), json: Value::Array(rows) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string(&report.json).expect("JSON values always serialize"));
            } else {
                println!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// 2 for bad input, 3 for an identity that failed to hold.
fn exit_code(e: &Error) -> u8 {
    if e.is_usage() {
        2
    } else {
        3
    }
}
