//! Batch command-line front end: load a presentation, run arithmetic,
//! centralizer, center and separation queries, or the property suite.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or parse error.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skewpbw::commutant::{center_direct, centralizer_kernel, centralizer_sep_basis};
use skewpbw::funalg::{per_set, sep_set, Permutation};
use skewpbw::io::{element_from_json, element_to_value, graded_basis_doc, subspace_basis_doc};
use skewpbw::pbw::AssocOutcome;
use skewpbw::verify::run_all;
use skewpbw::{Error, MultiIndex, Presentation};

#[derive(Parser)]
#[command(name = "skewpbw", version, about = "Exact arithmetic and commutant bases for skew PBW extensions over functions on a finite set")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Sep,
    Kernel,
    Direct,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a presentation file: structure, invertible constants,
    /// Leibniz rule, associativity.
    Check {
        presentation: PathBuf,
    },
    /// Multiply two element literals and print the normal form.
    Mul {
        presentation: PathBuf,
        /// Element literal, e.g. '{"(0,1)": ["1", "1"]}'
        a: String,
        /// Element literal.
        b: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        strict: bool,
    },
    /// Degree-bounded basis of the centralizer of the coefficient algebra.
    Centralizer {
        presentation: PathBuf,
        #[arg(long = "max-deg", default_value_t = 4)]
        max_deg: u32,
        /// `sep` needs a quasi-commutative presentation; `kernel` always works.
        #[arg(long, value_enum, default_value_t = Method::Kernel)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        strict: bool,
    },
    /// Degree-bounded basis of the center.
    Center {
        presentation: PathBuf,
        #[arg(long = "max-deg", default_value_t = 4)]
        max_deg: u32,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        strict: bool,
        /// Accepted for config parity; the computation is deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Moved and fixed points of `tau^alpha`.
    Sep {
        presentation: PathBuf,
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        strict: bool,
    },
    /// Run the randomized property suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::NotAssociative(_) | Error::NonInvertibleConstant { .. } => 1u8,
                _ => 2u8,
            };
            ExitCode::from(code)
        }
    }
}

fn load(path: &PathBuf, strict: bool) -> Result<Presentation, Error> {
    let text = std::fs::read_to_string(path)?;
    skewpbw::io::presentation_from_json(&text, strict)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Check { presentation } => cmd_check(&presentation),
        Command::Mul { presentation, a, b, format, strict } => {
            let p = load(&presentation, strict)?;
            let fa = element_from_json(&a, p.n(), p.omega_size())?;
            let fb = element_from_json(&b, p.n(), p.omega_size())?;
            let product = p.mul(&fa, &fb)?;
            match format {
                Format::Text => println!("{product}"),
                Format::Json => println!("{}", element_to_value(&product)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Centralizer { presentation, max_deg, method, format, strict } => {
            let p = load(&presentation, strict)?;
            let doc = match method {
                Method::Sep => {
                    let gb = centralizer_sep_basis(&p, max_deg)?;
                    graded_basis_doc(&gb)
                }
                Method::Kernel => {
                    let sb = centralizer_kernel(&p, max_deg)?;
                    subspace_basis_doc("kernel", &sb)
                }
                Method::Direct => {
                    return Err(Error::Parse(
                        "method `direct` computes the center; use the center command".into(),
                    ))
                }
            };
            let doc = attach_rule(doc, &p);
            emit_basis(&doc, format, &p);
            Ok(ExitCode::SUCCESS)
        }
        Command::Center { presentation, max_deg, method, format, strict, seed: _ } => {
            if method != Method::Direct {
                return Err(Error::Parse("the center command only supports --method direct".into()));
            }
            let p = load(&presentation, strict)?;
            let sb = center_direct(&p, max_deg)?;
            let doc = subspace_basis_doc("direct", &sb);
            emit_basis(&doc, format, &p);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sep { presentation, alpha, format, strict } => {
            let p = load(&presentation, strict)?;
            let alpha = MultiIndex::parse(&alpha)?;
            let sep = sep_set(p.taus(), &alpha)?;
            let per = per_set(p.taus(), &alpha)?;
            match format {
                Format::Text => {
                    println!("Sep^{alpha}(Omega) = {}", render_point_set(&sep));
                    println!("Per^{alpha}(Omega) = {}", render_point_set(&per));
                }
                Format::Json => {
                    let doc = json!({
                        "alpha": alpha.to_string(),
                        "sep": sep.iter().collect::<Vec<_>>(),
                        "per": per.iter().collect::<Vec<_>>(),
                    });
                    println!("{doc}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { seed } => {
            let reports = run_all(seed);
            let mut all_passed = true;
            for r in &reports {
                println!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.details);
                for note in &r.notes {
                    println!("  note: {note}");
                }
                all_passed &= r.passed;
            }
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn cmd_check(path: &PathBuf) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(path)?;
    // Distinguish malformed JSON (usage error) from invalid data
    // (validation failure).
    let p = match skewpbw::io::presentation_from_json(&text, false) {
        Ok(p) => p,
        Err(e @ Error::Parse(_)) | Err(e @ Error::Io(_)) => return Err(e),
        Err(e) => {
            println!("FAIL structure: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    println!("PASS structure: permutations, invertible constants, remainder shapes");

    let mut failed = false;
    match p.leibniz_check() {
        Ok(()) => println!("PASS leibniz: all derivations satisfy the twisted rule"),
        Err(i) => {
            println!("FAIL leibniz: derivation {} violates the twisted rule", i + 1);
            failed = true;
        }
    }
    match p.associativity_check(3) {
        AssocOutcome::Pass => {
            println!("PASS associativity: generator, indicator and random triples agree")
        }
        AssocOutcome::Counterexample { left, mid, right } => {
            println!("FAIL associativity: ({left}) * ({mid}) * ({right}) depends on bracketing");
            failed = true;
        }
    }
    println!(
        "quasi-commutative: {}",
        if p.is_quasi_commutative() { "yes" } else { "no" }
    );
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn render_point_set(set: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

/// For quasi-commutative presentations the output also carries the
/// symbolic vanishing rule, with the residue-class description of the
/// separation sets whenever the generated permutation group is cyclic.
fn attach_rule(mut doc: Value, p: &Presentation) -> Value {
    if !p.is_quasi_commutative() {
        return doc;
    }
    let mut rule = json!({
        "statement": "f_alpha = 0 on Sep^alpha(Omega)",
    });
    if let Some(cyclic) = cyclic_structure(p) {
        rule["cyclic"] = json!({
            "generator_exponents": cyclic.exponents,
            "order": cyclic.order,
            "sep_by_residue": cyclic
                .sep_by_residue
                .iter()
                .map(|s| s.iter().collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        });
    }
    doc["rule"] = rule;
    doc
}

struct CyclicStructure {
    exponents: Vec<u64>,
    order: u64,
    sep_by_residue: Vec<BTreeSet<usize>>,
}

/// Enumerates the subgroup generated by the `tau_i`; when it is cyclic,
/// expresses each `tau_i` as a power of one generator so the separation
/// set of `tau^alpha` only depends on `sum_i k_i alpha_i` modulo the order.
fn cyclic_structure(p: &Presentation) -> Option<CyclicStructure> {
    const CAP: usize = 5040;
    let gens: Vec<&Permutation> = (0..p.n()).map(|i| p.tau(i)).collect();
    let identity = Permutation::identity(p.omega_size());
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.image().to_vec()]);
    let mut elements = vec![identity];
    let mut frontier = vec![0usize];
    while let Some(idx) = frontier.pop() {
        for g in &gens {
            let next = g.compose(&elements[idx]);
            if seen.insert(next.image().to_vec()) {
                if elements.len() >= CAP {
                    return None;
                }
                elements.push(next);
                frontier.push(elements.len() - 1);
            }
        }
    }
    let order = elements.len();
    let generator = elements.iter().find(|g| {
        let mut power = (*g).clone();
        let mut k = 1;
        while !power.is_identity() {
            power = g.compose(&power);
            k += 1;
        }
        k == order
    })?;
    let mut log: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut sep_by_residue = Vec::with_capacity(order);
    let mut power = Permutation::identity(p.omega_size());
    for k in 0..order {
        log.insert(power.image().to_vec(), k as u64);
        sep_by_residue.push(power.moved_points());
        power = generator.compose(&power);
    }
    let exponents = gens.iter().map(|g| log[&g.image().to_vec()]).collect();
    Some(CyclicStructure { exponents, order: order as u64, sep_by_residue })
}

fn emit_basis(doc: &Value, format: Format, p: &Presentation) {
    match format {
        Format::Json => println!("{doc}"),
        Format::Text => {
            println!("method: {}", doc["method"].as_str().unwrap_or("?"));
            println!("max degree: {}", doc["max_degree"]);
            let basis = doc["basis"].as_array().map(Vec::as_slice).unwrap_or(&[]);
            println!("dimension: {}", basis.len());
            for entry in basis {
                if let Some(alpha) = entry.get("alpha") {
                    let coeffs: Vec<String> = entry["coeff"]
                        .as_array()
                        .map(|a| {
                            a.iter().map(|v| v.as_str().unwrap_or("?").to_string()).collect()
                        })
                        .unwrap_or_default();
                    println!("  alpha {}: [{}]", alpha.as_str().unwrap_or("?"), coeffs.join(", "));
                } else if let Ok(f) =
                    skewpbw::io::element_from_value(entry, p.n(), p.omega_size())
                {
                    println!("  {f}");
                }
            }
            if let Some(rule) = doc.get("rule") {
                println!("rule: {}", rule["statement"].as_str().unwrap_or("?"));
                if let Some(cyclic) = rule.get("cyclic") {
                    println!(
                        "  tau^alpha = g^(k . alpha mod {}), k = {}",
                        cyclic["order"], cyclic["generator_exponents"]
                    );
                    if let Some(rows) = cyclic["sep_by_residue"].as_array() {
                        for (t, row) in rows.iter().enumerate() {
                            println!("  residue {t}: Sep = {row}");
                        }
                    }
                }
            }
        }
    }
}
