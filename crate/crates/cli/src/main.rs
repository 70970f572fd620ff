use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use schrodinger_core::annihilators::{annihilator_slice, central_ideal_slice, compare_slices};
use schrodinger_core::blocks::{bgg_check, classify, ext_table, findim_projective};
use schrodinger_core::central::{casimir, center_basis, hc_homomorphism, verify_central};
use schrodinger_core::verma::{simple_character, singular_vectors, verma};
use schrodinger_core::weyl::{tensor_with_m, weyl_intertwiner};
use schrodinger_core::{parse_element, Error, QSlice, QWeight, Rational, Scalar, Weight};

#[derive(Parser)]
#[command(name = "schrodinger", version, about = "Exact computations for the Schrödinger algebra")]
struct Cli {
    /// Report errors as JSON on stderr.
    #[arg(long, global = true)]
    json_errors: bool,
    #[command(subcommand)]
    command: Command,
}

fn rational(s: &str) -> Result<Rational, String> {
    Rational::parse_exact(s).ok_or_else(|| format!("`{s}` is not an integer or fraction p/q"))
}

#[derive(clap::Args)]
struct WeightArgs {
    /// Value of the weight on h.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    hw: Rational,
    /// Value of the weight on z.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    charge: Rational,
}

impl WeightArgs {
    fn weight(&self) -> QWeight {
        Weight::new(self.hw.clone(), self.charge.clone())
    }
}

#[derive(Subcommand)]
enum Command {
    /// PBW normal form of an expression.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The Casimir element.
    Casimir {
        #[arg(long)]
        verify: bool,
    },
    /// Basis of the center up to a degree.
    Center {
        #[arg(long, default_value_t = 3)]
        degree: u32,
    },
    /// Harish-Chandra image of a weight-zero element.
    Hc {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Verma module data.
    Verma {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[arg(long, conflicts_with_all = ["singular", "simple"])]
        character: bool,
        /// Singular vectors in weight space i.
        #[arg(long, value_name = "I", conflicts_with = "simple")]
        singular: Option<usize>,
        /// Character of the simple quotient.
        #[arg(long)]
        simple: bool,
    },
    /// Block classification.
    Block {
        #[command(flatten)]
        weight: WeightArgs,
        /// Print the quiver as a DOT digraph.
        #[arg(long)]
        dot: bool,
    },
    /// Ext¹ table between simples λ − i h∨, 0 ≤ i ≤ range.
    Ext {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[arg(long, default_value_t = 3)]
        range: usize,
    },
    /// BGG reciprocity check.
    Bgg {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Layers of the projective cover of a finite-dimensional simple.
    Findim {
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Tensor product of M with an sl₂ Verma module.
    Weyl {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        charge: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Degree-bounded slice of the annihilator of a Verma module.
    Ann {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        /// Compare with the centrally generated slice.
        #[arg(long)]
        compare: bool,
    },
}

enum Output {
    Text(String),
    Json(Value),
}

fn weight_json(w: &QWeight) -> Value {
    json!({ "h": w.h.to_string(), "z": w.z.to_string() })
}

fn slice_json(s: &QSlice) -> Value {
    json!({ "dim": s.dim(), "basis": s.basis.iter().map(|u| u.to_string()).collect::<Vec<_>>() })
}

fn execute(command: Command) -> Result<Output, Error> {
    Ok(match command {
        Command::Nf { expr } => Output::Text(parse_element::<Rational>(&expr)?.to_string()),
        Command::Casimir { verify } => {
            let c = casimir::<Rational>();
            if verify {
                Output::Text(format!("central: {}", verify_central(&c)))
            } else {
                Output::Text(c.to_string())
            }
        }
        Command::Center { degree } => {
            let basis = center_basis::<Rational>(degree)?;
            Output::Json(json!(basis.iter().map(|u| u.to_string()).collect::<Vec<_>>()))
        }
        Command::Hc { expr } => Output::Text(hc_homomorphism(&parse_element::<Rational>(&expr)?)?.to_string()),
        Command::Verma { weight, depth, singular, simple, .. } => {
            let l = weight.weight();
            if simple {
                Output::Json(json!(simple_character(&l, depth)))
            } else if let Some(i) = singular {
                let m = verma(&l, depth);
                let vectors = singular_vectors(&m, i)?;
                let vectors: Vec<Vec<String>> =
                    vectors.iter().map(|v| v.iter().map(|c| c.to_string()).collect()).collect();
                Output::Json(json!({ "space": i, "labels": m.labels(i), "vectors": vectors }))
            } else {
                Output::Json(json!(verma(&l, depth).character()))
            }
        }
        Command::Block { weight, dot } => {
            let b = classify(&weight.weight());
            if dot {
                Output::Text(b.quiver.to_dot().trim_end().to_string())
            } else {
                Output::Json(json!({
                    "weight": weight_json(&b.weight),
                    "block_type": b.block_type.name(),
                    "dot_partner": weight_json(&b.dot_partner),
                    "central_character": b.central_character.theta.to_string(),
                    "primitive_ideal_count": b.primitive_ideal_count.to_string(),
                    "quiver": serde_json::to_value(&b.quiver).expect("quiver serializes"),
                }))
            }
        }
        Command::Ext { weight, depth, range } => {
            let table = ext_table(&weight.weight(), range, depth)?;
            let map: Map<String, Value> = table.into_iter().map(|((i, j), d)| (format!("{i},{j}"), json!(d))).collect();
            Output::Json(Value::Object(map))
        }
        Command::Bgg { weight, k, depth } => {
            let holds = bgg_check(&weight.weight(), k, depth)?;
            Output::Json(json!({ "weight": weight_json(&weight.weight()), "k": k, "depth": depth, "holds": holds }))
        }
        Command::Findim { i, depth } => {
            Output::Json(serde_json::to_value(findim_projective::<Rational>(i, depth)).expect("table serializes"))
        }
        Command::Weyl { charge, a, depth } => {
            let t = tensor_with_m(&a, depth, &charge)?;
            let hom = weyl_intertwiner(&a, depth, &charge)?;
            Output::Json(json!({
                "top": weight_json(t.top()),
                "character": t.character(),
                "verma_character": verma(t.top(), depth).character(),
                "intertwiners": hom.dim,
            }))
        }
        Command::Ann { weight, degree, compare } => {
            let l = weight.weight();
            let ann = annihilator_slice(&l, degree)?;
            if compare {
                Output::Json(json!({
                    "comparison": compare_slices(&l, degree)?.to_string(),
                    "annihilator": slice_json(&ann),
                    "central": slice_json(&central_ideal_slice(&l, degree)),
                }))
            } else {
                Output::Json(slice_json(&ann))
            }
        }
    })
}

fn report(json_errors: bool, kind: &str, message: &str) {
    if json_errors {
        eprintln!("{}", json!({ "error": { "kind": kind, "message": message } }));
    } else {
        eprintln!("error: {message}");
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let json_errors = std::env::args().any(|a| a == "--json-errors");
            if json_errors {
                report(true, "usage", e.render().to_string().trim());
            } else {
                eprint!("{}", e.render());
            }
            return ExitCode::from(2);
        }
    };
    let text = match execute(cli.command) {
        Ok(Output::Text(s)) => s,
        Ok(Output::Json(v)) => serde_json::to_string_pretty(&v).expect("json value serializes"),
        Err(e) => {
            report(cli.json_errors, e.kind(), &e.to_string());
            return ExitCode::from(if e.is_parse() { 2 } else { 1 });
        }
    };
    // A closed pipe downstream is not an error of ours.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::SUCCESS
}
