//! Command-line entry point: ideal files in, human-readable or JSON
//! reports out.
//!
//! Exit codes: 0 success, 1 usage error, 2 file/parse error, 3
//! computation too large, 4 internal invariant violation.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::error::Error;
use crate::family::family_rank_scan;
use crate::gi::{parse_gi, write_gi};
use crate::ideal::GradedIdeal;
use crate::koszul::{betti_table, np_check, NpCheck};
use crate::parse::parse_poly;
use crate::scalar::{FieldElement, FieldSpec};
use crate::syzygy::{
    involvement_witness, phi_image, syz2_verdict, syzygies_contained_in, InvolvementResult,
    PhiReport, Syz2Kind,
};
use crate::varieties::{generate, CatalogSpec};

#[derive(Parser)]
#[command(
    name = "syzkit",
    about = "Koszul cohomology, graded Betti tables and second syzygy schemes in exact arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a catalog variety and write it as a .gi file
    Gen {
        /// twisted-cubic | rnc:<d> | scroll:<e1>,<e2> | veronese |
        /// hyperelliptic-g2 | elliptic-quintic
        catalog: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Q or Fp:<prime>
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Hilbert function of the quotient ring
    Hilbert {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        tmax: usize,
    },
    /// Graded Betti table dim K_{p,q}
    Betti {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        pmax: usize,
        #[arg(long)]
        qmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check property (N_p) up to a q bound
    Np {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        p: usize,
        #[arg(long, default_value_t = 3)]
        qmax: usize,
    },
    /// Image of phi: K_{2,1} (x) V^dual -> I_2
    Phi {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Syz_2 verdict via the surjectivity / containing-ideal criteria
    Verdict {
        #[arg(short, long)]
        input: PathBuf,
        /// Context ideal Z with I_{Z,2} inside I_2 (may repeat)
        #[arg(long)]
        context: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Search for a linear syzygy involving a given quadric
    Involved {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        quadric: String,
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Are all linear syzygies of Y supported on the quadrics of Z?
    Contain {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short = 'z', long)]
        context: PathBuf,
    },
    /// Sampled rank scan over a one-parameter family
    Family {
        #[arg(short, long)]
        input: PathBuf,
        /// Comma-separated sample values, e.g. 0,1,-1,2,5
        #[arg(long)]
        samples: String,
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::ComputationTooLarge { .. } => 3,
        Error::FileFormat { .. }
        | Error::Io(_)
        | Error::SyntaxError { .. }
        | Error::InhomogeneousError(..)
        | Error::UnknownVariable(..)
        | Error::NotAPrime(_)
        | Error::SpecializationError(..)
        | Error::GenerationFailed(_)
        | Error::NotAQuadricInIdeal
        | Error::NotASubideal => 2,
        // remaining variants indicate a bug in the tool
        _ => 4,
    }
}

fn parse_field_arg(s: &str) -> Result<FieldSpec, Error> {
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = s.strip_prefix("Fp:") {
        let p: u64 = p.parse().map_err(|_| Error::FileFormat {
            line: None,
            msg: format!("bad prime in field spec '{s}'"),
        })?;
        return FieldSpec::prime_field(p);
    }
    Err(Error::FileFormat { line: None, msg: format!("field must be Q or Fp:<prime>, got '{s}'") })
}

fn load_ideal(path: &PathBuf) -> Result<GradedIdeal, Error> {
    let text = fs::read_to_string(path)?;
    parse_gi(&text)?.into_ideal()
}

fn dispatch(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Gen { catalog, seed, field, output } => {
            let field = parse_field_arg(&field)?;
            let spec = CatalogSpec::parse(&catalog, seed)?;
            let cat = generate(spec, field)?;
            let comment = match cat.seed_used {
                Some(s) => format!("syzkit gen {catalog} (seed {s})"),
                None => format!("syzkit gen {catalog}"),
            };
            fs::write(&output, write_gi(&cat.ideal, Some(&comment)))?;
            println!(
                "wrote {} ({} generators, P^{}, field {})",
                output.display(),
                cat.ideal.generators().len(),
                cat.ideal.context().top_var(),
                cat.ideal.context().field,
            );
            if let Some(s) = cat.seed_used {
                println!("seed used: {s}");
            }
            Ok(())
        }
        Command::Hilbert { input, tmax } => {
            let ideal = load_ideal(&input)?;
            println!("t   dim (Sym^t / I_t)");
            for t in 0..=tmax {
                println!("{t:<3} {}", ideal.hilbert_quotient(t)?);
            }
            Ok(())
        }
        Command::Betti { input, pmax, qmax, json } => {
            let ideal = load_ideal(&input)?;
            let table = betti_table(&ideal, pmax, qmax)?;
            if json {
                let entries: Vec<_> = table
                    .entries
                    .iter()
                    .map(|(&(p, q), &dim)| json!({"p": p, "q": q, "dim": dim}))
                    .collect();
                println!(
                    "{}",
                    json!({"pmax": pmax, "qmax": qmax, "entries": entries})
                );
            } else {
                print!("{table}");
            }
            Ok(())
        }
        Command::Np { input, p, qmax } => {
            let ideal = load_ideal(&input)?;
            match np_check(&ideal, p, qmax)? {
                NpCheck::Holds { p, qmax } => {
                    println!("(N_{p}) holds up to qmax = {qmax} (not a certificate beyond)");
                }
                NpCheck::FailsAt { i, q, dim } => {
                    println!("(N_{p}) fails at (i, q) = ({i}, {q}): dim K_{{{i},{q}}} = {dim}");
                }
                NpCheck::NotQuadraticallyGenerated => {
                    println!("(N_{p}) fails: ideal needs generators beyond degree 2");
                }
            }
            Ok(())
        }
        Command::Phi { input, json } => {
            let ideal = load_ideal(&input)?;
            let phi = phi_image(&ideal)?;
            if json {
                println!("{}", phi_json(&phi));
            } else {
                println!("dim Im(phi) = {}, dim I_2 = {}", phi.dim_image, phi.dim_i2);
                println!("surjective: {}", phi.surjective);
                for q in &phi.complement_basis {
                    println!("uninvolved quadric: {q}");
                }
            }
            Ok(())
        }
        Command::Verdict { input, context, json } => {
            let ideal = load_ideal(&input)?;
            let contexts = context
                .iter()
                .map(load_ideal)
                .collect::<Result<Vec<_>, _>>()?;
            let ctx_refs: Vec<&GradedIdeal> = contexts.iter().collect();
            let report = syz2_verdict(&ideal, &ctx_refs)?;
            let kind = match report.kind {
                Syz2Kind::EqualsSelf => "EQUALS_SELF",
                Syz2Kind::EqualsContaining { .. } => "EQUALS_CONTAINING",
                Syz2Kind::Inconclusive => "INCONCLUSIVE",
            };
            if json {
                let polys: Vec<String> =
                    report.syzygy_ideal_deg2.iter().map(|p| p.to_string()).collect();
                println!(
                    "{}",
                    json!({
                        "kind": kind,
                        "lemma": report.lemma,
                        "syzygy_ideal_deg2": polys,
                        "assumed_hypotheses": report.assumed_hypotheses,
                    })
                );
            } else {
                match report.kind {
                    Syz2Kind::EqualsSelf => println!(
                        "EQUALS_SELF (Lemma: phi surjective); dim Im(phi)={} = dim I_2",
                        report.phi.dim_image
                    ),
                    Syz2Kind::EqualsContaining { context_index } => {
                        println!(
                            "EQUALS_CONTAINING: degree-2 syzygy ideal equals I_{{Z,2}} (dim {}); \
                             {} quadric(s) of I_2 uninvolved [context {}]",
                            report.phi.dim_image,
                            report.phi.dim_i2 - report.phi.dim_image,
                            context[context_index].display()
                        );
                        for h in &report.assumed_hypotheses {
                            println!("assumed: {h}");
                        }
                    }
                    Syz2Kind::Inconclusive => println!(
                        "INCONCLUSIVE: dim Im(phi)={} < dim I_2={} and no context ideal explains it",
                        report.phi.dim_image, report.phi.dim_i2
                    ),
                }
                println!("degree-2 syzygy ideal basis:");
                for p in &report.syzygy_ideal_deg2 {
                    println!("  {p}");
                }
            }
            Ok(())
        }
        Command::Involved { input, quadric, trials, seed } => {
            let ideal = load_ideal(&input)?;
            let q = parse_poly(&quadric, ideal.context())?;
            println!("trials: {trials}, seed: {seed}");
            match involvement_witness(&ideal, &q, trials, seed)? {
                InvolvementResult::WitnessFound { witness, functional, trial } => {
                    println!("WitnessFound (trial {trial}); verified contract(gamma, lambda) = Q");
                    println!(
                        "lambda = [{}]",
                        functional
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    for (j, qj) in witness.quadrics.iter().enumerate() {
                        if !qj.is_zero() {
                            println!("  ({j}, {qj})");
                        }
                    }
                }
                InvolvementResult::NotInPhiImage => {
                    println!("NotInPhiImage: Q lies outside Im(phi); no syzygy can involve it");
                }
                InvolvementResult::NoWitnessFound { trials } => {
                    println!(
                        "NoWitnessFound after {trials} trials (NOT a proof of non-involvement)"
                    );
                }
            }
            Ok(())
        }
        Command::Contain { input, context } => {
            let y = load_ideal(&input)?;
            let z = load_ideal(&context)?;
            let contained = syzygies_contained_in(&y, &z)?;
            println!(
                "all linear syzygies of Y supported on I_{{Z,2}}: {}",
                contained
            );
            Ok(())
        }
        Command::Family { input, samples, random, seed, json } => {
            let text = fs::read_to_string(&input)?;
            let family = parse_gi(&text)?.into_family()?;
            let field = family.context.field;
            let sample_points = samples
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| parse_sample(s.trim(), field))
                .collect::<Result<Vec<_>, _>>()?;
            let scan = family_rank_scan(&family, &sample_points, random, seed)?;
            if json {
                eprintln!("seed: {seed}");
                let rows: Vec<_> = scan
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "t": r.t.to_string(),
                            "h2": r.hilbert_2,
                            "h3": r.hilbert_3,
                            "k21": r.dim_k21,
                            "dim_phi": r.dim_phi_image,
                        })
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(rows));
            } else {
                println!("seed: {seed}");
                println!("t          h2   h3   k21  dim_phi");
                for r in &scan.rows {
                    println!(
                        "{:<10} {:<4} {:<4} {:<4} {:<4}{}",
                        r.t.to_string(),
                        r.hilbert_2,
                        r.hilbert_3,
                        r.dim_k21,
                        r.dim_phi_image,
                        if r.random { "  (random)" } else { "" }
                    );
                }
                println!(
                    "hilbert and K_21 data constant across samples: {}",
                    scan.betti_data_constant
                );
                println!("max dim Im(phi): {}", scan.max_dim_phi_image);
                if scan.drops.is_empty() {
                    println!("no samples drop below the maximum");
                } else {
                    for &i in &scan.drops {
                        println!(
                            "dim Im(phi) drops at t = {} (consistent with lower semicontinuity)",
                            scan.rows[i].t
                        );
                    }
                }
            }
            Ok(())
        }
    }
}

fn phi_json(phi: &PhiReport) -> serde_json::Value {
    let complement: Vec<String> = phi.complement_basis.iter().map(|p| p.to_string()).collect();
    json!({
        "dim_image": phi.dim_image,
        "dim_I2": phi.dim_i2,
        "surjective": phi.surjective,
        "complement": complement,
    })
}

fn parse_sample(s: &str, field: FieldSpec) -> Result<FieldElement, Error> {
    let bad = || Error::FileFormat { line: None, msg: format!("bad sample value '{s}'") };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    FieldElement::from_ratio(num, den, field)
}
