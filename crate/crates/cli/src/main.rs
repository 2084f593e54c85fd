//! Batch command-line interface: basis elements, change of basis, Schur
//! products, tableau enumeration, the row-filling bijections, the positivity
//! verification sweep, and the stable-limit probe.
//!
//! Output is canonical JSON on stdout (aligned text with `--table` where it
//! applies). Exit codes: 0 on success, 1 on verification failure, 2 on
//! argument or parse errors.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use polybases::basis::{basis_element, stable_limit_probe, BasisCache, BasisId, Method};
use polybases::bijection::{column_fill, left_row_fill, right_row_fill, to_revssyt, Run};
use polybases::composition::{Partition, StrongComposition, WeakComposition};
use polybases::expansion::{expand_generic, expand_positive, relation, verify_poset, Relation};
use polybases::lr::{product_expansion_with_certificates, ProductCertificates};
use polybases::polynomial::{BasisExpansion, Polynomial};
use polybases::tableau::{enumerate, Model, ReverseSsyt, SkylineFilling};

#[derive(Parser)]
#[command(
    name = "polybases",
    version,
    about = "Polynomial bases indexed by weak compositions: elements, expansions, Schur products, tableaux, bijections and verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the monomial expansion of one basis element.
    Basis(BasisArgs),
    /// Expand a basis element in another basis (positively along the
    /// poset, by triangular elimination otherwise).
    Expand(ExpandArgs),
    /// Expand the product of a basis element with a Schur polynomial.
    Product(ProductArgs),
    /// List all tableaux of a model for a shape.
    Enumerate(EnumerateArgs),
    /// Run the row-filling bijections on a reverse SSYT.
    Biject(BijectArgs),
    /// Sweep every ordered pair of bases for positivity and witnesses.
    Verify(VerifyArgs),
    /// Probe stable limits by finite-variable truncation.
    Stable(StableArgs),
}

#[derive(Args)]
struct BasisArgs {
    /// Basis id: monomial, monomial_slide, fundamental_slide, particle,
    /// atom, qkey, qkey1, key, schur, quasi_schur.
    #[arg(long)]
    id: String,
    /// Weak composition (partition for schur, strong composition for
    /// quasi_schur), comma-separated.
    #[arg(long)]
    index: String,
    /// Number of variables; required for schur and quasi_schur.
    #[arg(long)]
    n: Option<usize>,
    /// Alternative description: default, dominance_sum, slides, skyline,
    /// tableau, lswap_atoms, qlswap_qkeys, bruhat_atoms.
    #[arg(long, default_value = "default")]
    method: String,
    /// Emit the full polynomial schema {"nvars":..,"terms":..} instead of
    /// the coefficient map.
    #[arg(long)]
    schema: bool,
    /// Aligned text instead of JSON.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    /// Weak composition, comma-separated.
    #[arg(long)]
    index: String,
    /// Aligned text instead of JSON.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct ProductArgs {
    /// Basis id: atom, qkey or particle.
    #[arg(long)]
    id: String,
    /// Weak composition of length n, comma-separated.
    #[arg(long)]
    index: String,
    /// Partition, comma-separated.
    #[arg(long)]
    lambda: String,
    /// Number of variables of the Schur factor; must equal the index length.
    #[arg(long)]
    n: usize,
    /// Include the certificate tableaux.
    #[arg(long)]
    witnesses: bool,
    /// Aligned text instead of JSON.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Model id: ASSF, FSSF, MSSF, LSSF, QSSF, qKT, qKT1, QqKT.
    #[arg(long)]
    model: String,
    /// Shape as a weak composition, comma-separated.
    #[arg(long)]
    index: String,
}

#[derive(Args)]
struct BijectArgs {
    /// Reverse SSYT as JSON {"shape":[..],"rows":[[..],..]}, inline or a
    /// path to a file holding it.
    #[arg(long)]
    input: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    max_weight: u32,
    #[arg(long, default_value_t = 4)]
    max_len: usize,
}

#[derive(Args)]
struct StableArgs {
    #[arg(long)]
    id: String,
    /// Weak composition, comma-separated.
    #[arg(long)]
    index: String,
    /// Largest number of prepended zeros to probe.
    #[arg(long, default_value_t = 4)]
    m: usize,
}

/// Errors that should exit with code 2 (bad arguments or unparsable input).
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Basis(args) => cmd_basis(args),
        Command::Expand(args) => cmd_expand(args),
        Command::Product(args) => cmd_product(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Biject(args) => cmd_biject(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Stable(args) => cmd_stable(args),
    };
    match outcome {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization")
    );
}

fn polynomial_table(p: &Polynomial) -> String {
    let mut out = String::new();
    let width = p
        .iter()
        .map(|(e, _)| e.to_string().len())
        .max()
        .unwrap_or(1);
    for (e, c) in p.iter() {
        writeln!(out, "{:width$}  {}", e.to_string(), c).expect("string write");
    }
    out
}

fn expansion_table(e: &BasisExpansion) -> String {
    let mut out = String::new();
    let width = e
        .iter()
        .map(|(b, _)| b.to_string().len())
        .max()
        .unwrap_or(1);
    for (b, c) in e.iter() {
        writeln!(out, "{:width$}  {}", b.to_string(), c).expect("string write");
    }
    out
}

fn cmd_basis(args: BasisArgs) -> Result<ExitCode, UsageError> {
    let id = BasisId::from_str(&args.id)?;
    let method = Method::from_str(&args.method)?;
    let polynomial = match id {
        BasisId::Schur => {
            let lambda = Partition::from_str(&args.index)?;
            let n = args.n.ok_or("schur requires --n")?;
            polybases::schur_polynomial(&lambda, n)
        }
        BasisId::QuasiSchur => {
            let weak = WeakComposition::from_str(&args.index)?;
            if weak.parts().contains(&0) {
                return Err("quasi_schur takes a strong composition".into());
            }
            let alpha = StrongComposition::new(weak.parts().to_vec());
            let n = args.n.ok_or("quasi_schur requires --n")?;
            polybases::quasi_schur_polynomial(&alpha, n)?
        }
        _ => {
            let index = WeakComposition::from_str(&args.index)?;
            if let Some(n) = args.n {
                if n != index.len() {
                    return Err(format!(
                        "--n {n} disagrees with the index length {}",
                        index.len()
                    )
                    .into());
                }
            }
            basis_element(id, &index, method)?
        }
    };
    if args.table {
        print!("{}", polynomial_table(&polynomial));
    } else if args.schema {
        print_json(&polynomial);
    } else {
        // The monomial expansion as a coefficient map.
        let mut map = BasisExpansion::new();
        for (e, c) in polynomial.iter() {
            map.add(e, c);
        }
        print_json(&map);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_expand(args: ExpandArgs) -> Result<ExitCode, UsageError> {
    let from = BasisId::from_str(&args.from)?;
    let to = BasisId::from_str(&args.to)?;
    if !from.is_composition_indexed() || !to.is_composition_indexed() {
        return Err("expand works on the composition-indexed bases".into());
    }
    let index = WeakComposition::from_str(&args.index)?;
    let coefficients = match relation(from, to) {
        Relation::Above | Relation::Equal => {
            expand_positive(from, to, &index).expect("relation checked")
        }
        _ => expand_generic(from, to, &index, &mut BasisCache::new()),
    };
    if args.table {
        print!("{}", expansion_table(&coefficients));
    } else {
        print_json(&coefficients);
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ProductOutput {
    coefficients: BasisExpansion,
    witnesses: ProductCertificates,
}

fn cmd_product(args: ProductArgs) -> Result<ExitCode, UsageError> {
    let id = BasisId::from_str(&args.id)?;
    let index = WeakComposition::from_str(&args.index)?;
    let lambda = Partition::from_str(&args.lambda)?;
    if args.n != index.len() {
        return Err(format!(
            "--n {} disagrees with the index length {}",
            args.n,
            index.len()
        )
        .into());
    }
    let (coefficients, certificates) = product_expansion_with_certificates(id, &index, &lambda)?;
    if args.table {
        print!("{}", expansion_table(&coefficients));
    } else if args.witnesses {
        print_json(&ProductOutput {
            coefficients,
            witnesses: certificates,
        });
    } else {
        print_json(&coefficients);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode, UsageError> {
    let model = Model::from_str(&args.model)?;
    let shape = WeakComposition::from_str(&args.index)?;
    print_json(&enumerate(model, &shape));
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct BijectOutput {
    input: ReverseSsyt,
    column_fill: SkylineFilling,
    left_row_fill: SkylineFilling,
    left_runs: Vec<Run>,
    right_row_fill: SkylineFilling,
    right_runs: Vec<Run>,
    /// Top-justified column-sorted image of the right row-filling; equals
    /// the input.
    revssyt_of_right: ReverseSsyt,
}

fn cmd_biject(args: BijectArgs) -> Result<ExitCode, UsageError> {
    let text = if args.input.trim_start().starts_with('{') {
        args.input.clone()
    } else {
        std::fs::read_to_string(&args.input)?
    };
    let input = ReverseSsyt::from_json(&text)?;
    let (left, left_runs) = left_row_fill(&input);
    let (right, right_runs) = right_row_fill(&input);
    let output = BijectOutput {
        column_fill: column_fill(&input),
        revssyt_of_right: to_revssyt(&right),
        input,
        left_row_fill: left,
        left_runs,
        right_row_fill: right,
        right_runs,
    };
    print_json(&output);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, UsageError> {
    let report = verify_poset(args.max_weight, args.max_len);
    let passed = report.passed();
    print_json(&report);
    if passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_stable(args: StableArgs) -> Result<ExitCode, UsageError> {
    let id = BasisId::from_str(&args.id)?;
    let index = WeakComposition::from_str(&args.index)?;
    let report = stable_limit_probe(id, &index, args.m)?;
    print_json(&report);
    Ok(ExitCode::SUCCESS)
}
