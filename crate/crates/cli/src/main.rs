//! Command-line front end for the `lambda_operad` library.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on invalid
//! input (with a position-annotated message for syntax errors).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lambda_operad::presentation::{phi, psi};
use lambda_operad::trees::{enumerate_labeled_trees, enumerate_unlabeled_trees};
use lambda_operad::verify::{Suite, Universe};
use lambda_operad::{
    operad, BracketCombination, BracketExpr, Error, Fault, LabelMode, Operad, Rational,
    TreeCombination, VertexRef, WeightedTree,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "lambda-operad", version, about = "Exact computations with λ-deformed operads of weighted rooted trees")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// S ∘_{v,λ} T.
    Compose {
        #[arg(short = 'S', value_name = "TREE")]
        s: String,
        /// Vertex of S: a label, or a preorder index when S is unlabeled.
        #[arg(short = 'v', value_name = "VERTEX")]
        v: String,
        #[arg(short = 'T', value_name = "TREE")]
        t: String,
        /// Specialize λ to this rational value.
        #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// T ←_λ S.
    Arrow {
        #[arg(short = 'T', value_name = "TREE")]
        t: String,
        #[arg(short = 'S', value_name = "TREE")]
        s: String,
        #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Σ_v T ∘_{v,λ} S over all vertices of T.
    Circsum {
        #[arg(short = 'T', value_name = "TREE")]
        t: String,
        #[arg(short = 'S', value_name = "TREE")]
        s: String,
        #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Right Butcher product T ↙ S.
    Butcher {
        #[arg(short = 'T', value_name = "TREE")]
        t: String,
        #[arg(short = 'S', value_name = "TREE")]
        s: String,
    },
    /// Graded NAP composition; prints 0 when |T| differs from |v|.
    Nap {
        #[arg(short = 'S', value_name = "TREE")]
        s: String,
        #[arg(short = 'v', value_name = "VERTEX")]
        v: String,
        #[arg(short = 'T', value_name = "TREE")]
        t: String,
    },
    /// Rewrite a tree as a combination of bracket expressions.
    Psi {
        #[arg(short = 'T', value_name = "TREE")]
        t: String,
    },
    /// Evaluate a bracket expression to a combination of trees.
    Phi {
        #[arg(short = 'e', value_name = "EXPR")]
        e: String,
        #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// List trees with n vertices.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        /// Comma-separated weights of vertices 1..n (labeled trees).
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["unlabeled", "wmax"])]
        weights: Option<Vec<u64>>,
        /// One tree per isomorphism class, weights up to --wmax.
        #[arg(long)]
        unlabeled: bool,
        #[arg(long, default_value_t = 1)]
        wmax: u64,
    },
    /// Number of labeled trees with n vertices, per weight vector up to --wmax.
    Dims {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 1)]
        wmax: u64,
    },
    /// Run verification suites.
    Check {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        wmax: Option<u64>,
        /// Run against a deliberately broken composition.
        #[arg(long, value_enum)]
        inject: Option<FaultArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Assoc,
    Deform,
    Spec,
    Iso,
    Morph,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    NonMinimalPlusOne,
    PlusOne,
    SlotHeight,
    NonMinimalMinusOne,
    FirstEdge,
    Graft,
}

impl From<FaultArg> for Fault {
    fn from(f: FaultArg) -> Fault {
        match f {
            FaultArg::NonMinimalPlusOne => Fault::NonMinimalExponentPlusOne,
            FaultArg::PlusOne => Fault::ExponentPlusOne,
            FaultArg::SlotHeight => Fault::SlotHeightInExponent,
            FaultArg::NonMinimalMinusOne => Fault::NonMinimalExponentMinusOne,
            FaultArg::FirstEdge => Fault::FirstEdgeExponentPlusOne,
            FaultArg::Graft => Fault::GraftExponentPlusOne,
        }
    }
}

enum Failure {
    Input(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn tree(text: &str) -> Result<WeightedTree, Failure> {
    Ok(text.parse::<WeightedTree>()?)
}

fn vertex(s: &WeightedTree, v: &str) -> Result<VertexRef, Failure> {
    if s.mode() == LabelMode::Labeled {
        return Ok(s.find(v)?);
    }
    let index: usize = v
        .parse()
        .map_err(|_| Failure::Input(format!("unlabeled S: -v must be a preorder index, got {v:?}")))?;
    s.vertices()
        .nth(index)
        .ok_or_else(|| Failure::Input(format!("S has no vertex with index {index}")))
}

fn lambda_value(text: &Option<String>) -> Result<Option<Rational>, Failure> {
    text.as_deref()
        .map(|l| l.parse::<Rational>().map_err(Failure::from))
        .transpose()
}

fn print_trees(c: &TreeCombination, lambda: &Option<Rational>, json: bool) {
    let c = match lambda {
        Some(x) => c.specialize(x),
        None => c.clone(),
    };
    if json {
        println!("{}", c.to_json());
    } else {
        println!("{c}");
    }
}

fn print_brackets(c: &BracketCombination, json: bool) {
    if json {
        println!("{}", c.to_json());
    } else {
        println!("{c}");
    }
}

fn print_tree(t: Option<&WeightedTree>, json: bool) {
    match (t, json) {
        (Some(t), false) => println!("{t}"),
        (None, false) => println!("0"),
        (Some(t), true) => println!("{}", TreeCombination::basis(t.clone()).to_json()),
        (None, true) => println!("{}", TreeCombination::zero().to_json()),
    }
}

fn execute(cli: Cli) -> Result<(), Failure> {
    let op = Operad::new();
    let json = cli.json;
    match cli.command {
        Command::Compose { s, v, t, lambda } => {
            let lambda = lambda_value(&lambda)?;
            let (s, t) = (tree(&s)?, tree(&t)?);
            let c = op.compose_lambda(&s, vertex(&s, &v)?, &t)?;
            print_trees(&c, &lambda, json);
        }
        Command::Arrow { t, s, lambda } => {
            let lambda = lambda_value(&lambda)?;
            print_trees(&op.arrow(&tree(&t)?, &tree(&s)?)?, &lambda, json);
        }
        Command::Circsum { t, s, lambda } => {
            let lambda = lambda_value(&lambda)?;
            print_trees(&op.circ_sum(&tree(&t)?, &tree(&s)?)?, &lambda, json);
        }
        Command::Butcher { t, s } => {
            let out = operad::butcher_product(&tree(&t)?, &tree(&s)?)?;
            print_tree(Some(&out.canonicalize()), json);
        }
        Command::Nap { s, v, t } => {
            let (s, t) = (tree(&s)?, tree(&t)?);
            match operad::nap_compose(&s, vertex(&s, &v)?, &t) {
                Ok(out) => print_tree(Some(&out), json),
                Err(Error::WeightMismatch { .. }) => print_tree(None, json),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Psi { t } => print_brackets(&psi(&op, &tree(&t)?)?, json),
        Command::Phi { e, lambda } => {
            let lambda = lambda_value(&lambda)?;
            let e: BracketExpr = e.parse()?;
            print_trees(&phi(&op, &e)?, &lambda, json);
        }
        Command::Enumerate { n, weights, unlabeled, wmax } => {
            let trees = if unlabeled {
                enumerate_unlabeled_trees(n, wmax)
            } else {
                let weights = weights.unwrap_or_else(|| vec![wmax.max(1); n]);
                enumerate_labeled_trees(n, &weights)?
            };
            if json {
                let list: Vec<String> = trees.iter().map(|t| t.to_string()).collect();
                println!("{}", json!({ "count": trees.len(), "trees": list }));
            } else {
                for t in &trees {
                    println!("{t}");
                }
            }
        }
        Command::Dims { n, wmax } => dims(n, wmax, json)?,
        Command::Check { suite, nmax, wmax, inject } => {
            let op = match inject {
                Some(f) => Operad::with_fault(f.into()),
                None => op,
            };
            let suites = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Assoc => vec![Suite::Assoc],
                SuiteArg::Deform => vec![Suite::Deform],
                SuiteArg::Spec => vec![Suite::Spec],
                SuiteArg::Iso => vec![Suite::Iso],
                SuiteArg::Morph => vec![Suite::Morph],
            };
            let mut reports = Vec::new();
            for check in suites.into_iter().flat_map(Suite::checks) {
                let mut u: Universe = check.default_universe();
                if let Some(n) = nmax {
                    u.n_max = n;
                }
                if let Some(w) = wmax {
                    u.w_max = w;
                }
                let r = check.run(&op, &u);
                if !json {
                    println!("{r}");
                }
                reports.push(r);
            }
            let passed = reports.iter().all(|r| r.passed());
            if json {
                let list: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                println!("{}", json!({ "passed": passed, "reports": list }));
            }
            if !passed {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn dims(n: usize, wmax: u64, json: bool) -> Result<(), Failure> {
    if n == 0 {
        return Err(Error::EmptyTree.into());
    }
    let exponent = u32::try_from(n - 1).map_err(|_| Failure::Input("n too large".into()))?;
    let per_vector = (n as u128)
        .checked_pow(exponent)
        .ok_or_else(|| Failure::Input("n too large".into()))?;
    let mut components = Vec::new();
    let mut w = vec![1u64; n];
    'vectors: loop {
        components.push(w.clone());
        for k in (0..n).rev() {
            if w[k] < wmax {
                w[k] += 1;
                w[k + 1..].iter_mut().for_each(|x| *x = 1);
                continue 'vectors;
            }
        }
        break;
    }
    if json {
        let list: Vec<_> = components
            .iter()
            .map(|w| json!({ "weights": w, "count": per_vector.to_string() }))
            .collect();
        println!("{}", json!({ "labeled_trees": per_vector.to_string(), "components": list }));
    } else {
        println!("{per_vector}");
        if wmax > 1 {
            for w in &components {
                let text: Vec<String> = w.iter().map(u64::to_string).collect();
                println!("({}): {per_vector}", text.join(","));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
