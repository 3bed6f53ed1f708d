//! Command-line front end. Every command prints one JSON object.
//!
//! Exit codes: `0` success, `1` invalid input, `2` failed internal
//! verification.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Result, TropError};
use crate::geometry::{proj_column_space, proj_row_space, ClosedConvexSet};
use crate::green::{
    d_class_witness, j_factorization, r_class_of, related, witness_z, GreenRelation,
};
use crate::ideals::{
    decompose, ideal_compare, ideal_contains, ideal_from_generators, principal_ideal_of,
    IdealDescriptor,
};
use crate::matrix::TropMatrix;
use crate::sampling::Profile;
use crate::structure::{
    group_type_of_h, idempotent_form, idempotent_in_h, is_idempotent, regular_witness,
    subgroup_element, SubgroupFamily,
};
use crate::verify::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "trop2",
    version,
    about = "Structure of the 2x2 max-plus matrix monoid"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Column/row spaces, R- and L-class shapes and idempotent form of a matrix
    Classify {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Decide a Green's relation or preorder between two matrices
    Relate {
        /// R, L, H, D, J, leqR, leqL or leqJ
        relation: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// A matrix Z with PC(Z) = M and PR(Z) = N
    Witness {
        #[arg(long = "M", allow_hyphen_values = true)]
        m: String,
        #[arg(long = "N", allow_hyphen_values = true)]
        n: String,
    },
    /// The idempotent of the H-class R_M n L_N, if any
    Idempotent {
        #[arg(long = "M", allow_hyphen_values = true)]
        m: String,
        #[arg(long = "N", allow_hyphen_values = true)]
        n: String,
    },
    /// A matrix Y with A Y A = A
    Regular {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Group type of the maximal subgroup at R_M n L_N
    Subgroup {
        #[arg(long = "M", allow_hyphen_values = true)]
        m: String,
        #[arg(long = "N", allow_hyphen_values = true)]
        n: String,
    },
    /// Two-sided ideal queries
    Ideal {
        #[command(subcommand)]
        action: IdealAction,
    },
    /// Run a seeded verification suite
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        suite: String,
        /// dense-rational, with-neginf or boundary
        #[arg(long)]
        profile: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum IdealAction {
    /// Whether the ideal with descriptor D contains A
    Contains {
        descriptor: String,
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Descriptor of the principal ideal generated by A
    Principal {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Compare two descriptors under inclusion
    Compare { first: String, second: String },
    /// Descriptor of the ideal generated by the given matrices
    Generate {
        #[arg(required = true, allow_hyphen_values = true)]
        matrices: Vec<String>,
    },
    /// Enclosing principal ideal and the J-class removed from it
    Decompose { descriptor: String },
}

fn matrix_arg(s: &str) -> Result<TropMatrix> {
    let m = TropMatrix::from_json_str(s)?;
    m.require_two_by_two()?;
    Ok(m)
}

fn set_arg(s: &str) -> Result<ClosedConvexSet> {
    s.parse()
}

fn classify(a: &TropMatrix) -> Result<Value> {
    let pc = proj_column_space(a)?;
    let pr = proj_row_space(a)?;
    let form = if is_idempotent(a) {
        Some(idempotent_form(a)?.name())
    } else {
        None
    };
    Ok(json!({
        "pc": pc.to_string(),
        "pr": pr.to_string(),
        "rclass": r_class_of(a)?.name(),
        "lclass": r_class_of(&a.transpose())?.name(),
        "iso_type": pc.iso_type().to_string(),
        "diameter": pc.diameter().to_string(),
        "idempotent": form.is_some(),
        "form": form,
        "unit": a.is_monomial(),
        "principal_ideal": principal_ideal_of(a)?.to_string(),
    }))
}

fn relate(rel: GreenRelation, a: &TropMatrix, b: &TropMatrix) -> Result<Value> {
    let holds = related(rel, a, b)?;
    let mut out = json!({ "relation": rel.to_string(), "holds": holds });
    if holds {
        match rel {
            GreenRelation::D | GreenRelation::J => {
                out["witness"] = d_class_witness(a, b)?.to_json()
            }
            GreenRelation::LeqJ => {
                if let Some((x, y)) = j_factorization(a, b)? {
                    out["factors"] = json!({ "x": x.to_json(), "y": y.to_json() });
                }
            }
            _ => {}
        }
    }
    Ok(out)
}

fn subgroup(m: &ClosedConvexSet, n: &ClosedConvexSet) -> Result<Value> {
    let group = group_type_of_h(m, n)?;
    let e = idempotent_in_h(m, n)
        .ok_or_else(|| TropError::NoIdempotent(m.to_string(), n.to_string()))?;
    let families = SubgroupFamily::for_h_class(m, n)
        .unwrap_or_default()
        .iter()
        .map(|f| {
            let zero = crate::semiring::rat(0);
            Ok(json!({ "family": f.name(), "at_zero": subgroup_element(f, &zero)?.to_json() }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "group": group.to_string(), "idempotent": e.to_json(), "families": families }))
}

fn ideal(action: &IdealAction) -> Result<Value> {
    Ok(match action {
        IdealAction::Contains { descriptor, matrix } => {
            let d: IdealDescriptor = descriptor.parse()?;
            json!({ "contains": ideal_contains(&d, &matrix_arg(matrix)?)? })
        }
        IdealAction::Principal { matrix } => {
            json!({ "descriptor": principal_ideal_of(&matrix_arg(matrix)?)?.to_string() })
        }
        IdealAction::Compare { first, second } => {
            let (d1, d2): (IdealDescriptor, IdealDescriptor) = (first.parse()?, second.parse()?);
            let order = match ideal_compare(&d1, &d2) {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            json!({ "order": order })
        }
        IdealAction::Generate { matrices } => {
            let gs = matrices
                .iter()
                .map(|m| matrix_arg(m))
                .collect::<Result<Vec<_>>>()?;
            json!({ "descriptor": ideal_from_generators(&gs)?.to_string() })
        }
        IdealAction::Decompose { descriptor } => {
            let d: IdealDescriptor = descriptor.parse()?;
            let (p, removed) = decompose(&d);
            json!({
                "principal": p.to_string(),
                "removed": removed.map(|t| t.to_string()),
                "is_principal": d.is_principal(),
            })
        }
    })
}

/// Outcome of one command: exit code and the JSON printed to stdout.
pub struct Outcome {
    pub code: i32,
    pub output: Value,
}

fn execute(cmd: &Command) -> Result<Outcome> {
    let ok = |output| Outcome { code: 0, output };
    Ok(match cmd {
        Command::Classify { matrix } => ok(classify(&matrix_arg(matrix)?)?),
        Command::Relate { relation, a, b } => {
            ok(relate(relation.parse()?, &matrix_arg(a)?, &matrix_arg(b)?)?)
        }
        Command::Witness { m, n } => {
            let z = witness_z(&set_arg(m)?, &set_arg(n)?)?;
            ok(json!({ "z": z.to_json() }))
        }
        Command::Idempotent { m, n } => {
            let e = idempotent_in_h(&set_arg(m)?, &set_arg(n)?);
            ok(json!({ "exists": e.is_some(), "idempotent": e.map(|e| e.to_json()) }))
        }
        Command::Regular { matrix } => {
            let y = regular_witness(&matrix_arg(matrix)?)?;
            ok(json!({ "y": y.to_json(), "verified": true }))
        }
        Command::Subgroup { m, n } => ok(subgroup(&set_arg(m)?, &set_arg(n)?)?),
        Command::Ideal { action } => ok(ideal(action)?),
        Command::Verify {
            samples,
            seed,
            suite,
            profile,
        } => {
            let suite: Suite = suite.parse()?;
            let profile = profile.as_deref().map(str::parse::<Profile>).transpose()?;
            let samples = usize::try_from(*samples).map_err(|_| {
                TropError::InvalidParameters(format!("sample count {samples} is too large"))
            })?;
            let report = run_suite(suite, samples, *seed, profile)?;
            let code = if report.ok() { 0 } else { 2 };
            Outcome {
                code,
                output: serde_json::to_value(&report).expect("report serializes"),
            }
        }
    })
}

fn error_outcome(e: &TropError) -> Outcome {
    let code = if matches!(e, TropError::VerificationFailed(_)) {
        2
    } else {
        1
    };
    let mut output = json!({ "error": e.to_string() });
    if let TropError::Parse {
        position, expected, ..
    } = e
    {
        output["position"] = json!(position);
        output["expected"] = json!(expected);
    }
    Outcome { code, output }
}

/// Parses `argv` (including the program name) and runs the command.
/// Help and version requests print plain text with exit code 0.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => (0, e.to_string()),
                _ => (1, json!({ "error": e.to_string().trim_end() }).to_string()),
            };
        }
    };
    let outcome = execute(&cli.command).unwrap_or_else(|e| error_outcome(&e));
    (outcome.code, outcome.output.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value) {
        let (code, out) = run(std::iter::once("trop2").chain(args.iter().copied()));
        (
            code,
            serde_json::from_str(&out).unwrap_or_else(|_| panic!("not JSON: {out}")),
        )
    }

    #[test]
    fn classify_interval_matrix() {
        let (code, v) = call(&["classify", r#"[["0","0"],["1","2"]]"#]);
        assert_eq!(code, 0);
        assert_eq!(v["pc"], "[1,2]");
        assert_eq!(v["pr"], "[0,1]");
        assert_eq!(v["rclass"], "interval");
        assert_eq!(v["idempotent"], false);
        assert_eq!(v["principal_ideal"], "closed:interval:1");
    }

    #[test]
    fn relate_j() {
        let (code, v) = call(&[
            "relate",
            "J",
            r#"[["0","0"],["1","2"]]"#,
            r#"[["0","0"],["5","6"]]"#,
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["holds"], true);
        assert!(v["witness"].is_array());
        let (_, v) = call(&[
            "relate",
            "R",
            r#"[["0","0"],["1","2"]]"#,
            r#"[["0","0"],["5","6"]]"#,
        ]);
        assert_eq!(v["holds"], false);
    }

    #[test]
    fn set_commands() {
        let (code, v) = call(&["idempotent", "--M", "[1,3]", "--N", "[-3,-1]"]);
        assert_eq!(code, 0);
        assert_eq!(v["idempotent"], json!([["0", "-3"], ["1", "0"]]));
        let (_, v) = call(&["idempotent", "--M", "{-inf}", "--N", "{+inf}"]);
        assert_eq!(v["exists"], false);
        let (code, v) = call(&["witness", "--M", "[0,2]", "--N", "[5,7]"]);
        assert_eq!(code, 0);
        assert!(v["z"].is_array());
        let (code, _) = call(&["witness", "--M", "[0,2]", "--N", "[5,8]"]);
        assert_eq!(code, 1);
        let (code, v) = call(&["subgroup", "--M", "[1,3]", "--N", "[-3,-1]"]);
        assert_eq!(code, 0);
        assert_eq!(v["group"], "reals-times-s2");
        assert_eq!(v["families"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn ideal_commands() {
        let (_, v) = call(&["ideal", "compare", "open:3", "closed:interval:3"]);
        assert_eq!(v["order"], "less");
        let (_, v) = call(&["ideal", "decompose", "openline"]);
        assert_eq!(v["principal"], "closed:halfinf");
        let (_, v) = call(&[
            "ideal",
            "generate",
            r#"[["0","0"],["1","2"]]"#,
            r#"[["0","-inf"],["-inf","0"]]"#,
        ]);
        assert_eq!(v["descriptor"], "closed:fullline");
        let (_, v) = call(&["ideal", "contains", "open:3", r#"[["0","0"],["0","2"]]"#]);
        assert_eq!(v["contains"], true);
    }

    #[test]
    fn errors_are_json() {
        let (code, v) = call(&["classify", r#"[["0","x"],["1","2"]]"#]);
        assert_eq!(code, 1);
        assert_eq!(v["position"], 1);
        let (code, v) = call(&["classify", "--bogus"]);
        assert_eq!(code, 1);
        assert!(v["error"].is_string());
        let (code, _) = call(&["relate", "Q", r#"[["0"]]"#, r#"[["0"]]"#]);
        assert_eq!(code, 1);
        let (code, _) = call(&["classify", r#"[["0"]]"#]);
        assert_eq!(code, 1);
        let (code, _) = call(&[
            "verify",
            "--samples",
            "0",
            "--seed",
            "1",
            "--suite",
            "duality",
        ]);
        assert_eq!(code, 1);
    }

    #[test]
    fn verify_reports_counts() {
        let (code, v) = call(&[
            "verify",
            "--samples",
            "300",
            "--seed",
            "42",
            "--suite",
            "duality",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["passed"], 300);
        assert_eq!(v["failed"], 0);
        assert_eq!(v["rng"], "ChaCha8");
        let (code, v) = call(&[
            "verify",
            "--samples",
            "50",
            "--seed",
            "1",
            "--suite",
            "regularity",
            "--profile",
            "boundary",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["profile"], "boundary");
    }

    #[test]
    fn verification_failure_exits_two() {
        assert_eq!(
            error_outcome(&TropError::VerificationFailed("x".into())).code,
            2
        );
        assert_eq!(error_outcome(&TropError::NotSquare).code, 1);
    }
}
