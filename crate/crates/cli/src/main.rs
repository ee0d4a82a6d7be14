use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use freeprod::classifier::{
    classify_overlap, classify_power_commutator, full_pipeline, ClassifierConfig,
};
use freeprod::conjugacy::{are_conjugate, classify_inverse_conjugate};
use freeprod::harness::render::{
    case_json, inverse_conjugacy_json, overlap_json, pipeline_json, wicks_json, witness_json,
    word_json,
};
use freeprod::harness::sweep::klein4_c2;
use freeprod::harness::worked_example::paper_example_check;
use freeprod::harness::{run_theorem_sweep, shipped_config, SweepConfig};
use freeprod::wicks::{find_wicks_form, is_commutator, WicksConfig, DEFAULT_MAX_LEN};
use freeprod::{load_group, ElementOrder, GroupContext, Word};
use serde_json::{json, Value};

mod render;

#[derive(Parser)]
#[command(
    name = "freeprod",
    version,
    about = "Computations in free products of finite groups"
)]
struct Cli {
    /// Group description file (JSON).
    #[arg(long, global = true)]
    group: Option<PathBuf>,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(flatten)]
    bounds: Bounds,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Bounds {
    /// Longest cyclic representative accepted by the Wicks search.
    #[arg(long, global = true)]
    max_wicks_len: Option<usize>,
    /// Torsion length bound for the classifier's fallback search.
    #[arg(long, global = true)]
    max_torsion_len: Option<usize>,
    /// Longest swept root word.
    #[arg(long, global = true)]
    max_word_len: Option<usize>,
    /// Largest swept exponent.
    #[arg(long, global = true)]
    max_exponent: Option<usize>,
    /// Witness length bound of the exhaustive commutator oracle.
    #[arg(long, global = true)]
    max_witness_len: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word.
    Normalize { word: String },
    /// Product of words.
    Mul {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Inverse of a word.
    Inv { word: String },
    /// Integer power of a word.
    Pow {
        word: String,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Primitive root and exponent.
    Root { word: String },
    /// Element order.
    Order { word: String },
    /// Conjugacy test with witness `C⁻¹·u·C = v`.
    Conj { u: String, v: String },
    /// Split an element conjugate to its inverse.
    InvConj { word: String },
    /// Decide whether a word is a commutator.
    IsCommutator { word: String },
    /// Classify a commutator that is a proper power. Without `--m` the primitive root
    /// and exponent are extracted first.
    Classify {
        word: String,
        #[arg(long)]
        m: Option<i64>,
    },
    /// Classify an overlap of `X` inside `V^m` at a position.
    Overlap {
        v: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        pos: usize,
    },
    /// Run a theorem sweep: a shipped configuration by name, or the `--group` file with
    /// the bound flags.
    Sweep {
        name: Option<String>,
        /// Also write the JSON-lines report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the worked fourth-power example over Klein4 ∗ C2.
    PaperExample,
}

/// Failure with its exit code: 1 for domain errors, 2 for usage and input errors.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<freeprod::Error>() {
            Some(
                freeprod::Error::BadLetter(_)
                | freeprod::Error::GroupFile(_)
                | freeprod::Error::InvalidFactor { .. }
                | freeprod::Error::NoFactors,
            ) => 2,
            Some(_) => 1,
            None => 2,
        };
        Failure { code, error }
    }
}

impl From<freeprod::Error> for Failure {
    fn from(e: freeprod::Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

enum Output {
    Json(Value),
    /// Already formatted text, identical in both modes.
    Text {
        json: String,
        human: String,
    },
}

impl Cli {
    fn context(&self) -> Result<GroupContext, Failure> {
        let path = self
            .group
            .as_ref()
            .ok_or_else(|| anyhow!("this command needs --group <file>"))?;
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        load_group(&text)
            .with_context(|| format!("loading {}", path.display()))
            .map_err(Failure::from)
    }

    fn classifier(&self) -> ClassifierConfig {
        ClassifierConfig {
            wicks: WicksConfig {
                max_len: self.bounds.max_wicks_len.unwrap_or(DEFAULT_MAX_LEN),
            },
            fallback_torsion_len: self.bounds.max_torsion_len,
        }
    }
}

fn parse(ctx: &GroupContext, text: &str) -> Result<Word, Failure> {
    ctx.parse_word(text)
        .with_context(|| format!("parsing word `{text}`"))
        .map_err(Failure::from)
}

fn order_json(o: ElementOrder) -> Value {
    match o {
        ElementOrder::Finite(n) => json!(n),
        ElementOrder::Infinite => json!("infinite"),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if let Command::PaperExample = cli.command {
        let ctx = match &cli.group {
            Some(_) => cli.context()?,
            None => klein4_c2(),
        };
        let report = paper_example_check(&ctx)?.into_result()?;
        return Ok(Output::Json(report.to_json(&ctx)));
    }
    if let Command::Sweep { name, out } = &cli.command {
        return sweep(cli, name.as_deref(), out.as_ref());
    }

    let ctx = cli.context()?;
    let w = |x: &Word| word_json(&ctx, x);
    let value = match &cli.command {
        Command::Normalize { word } => json!({ "word": w(&parse(&ctx, word)?) }),
        Command::Mul { words } => {
            let parsed = words
                .iter()
                .map(|s| parse(&ctx, s))
                .collect::<Result<Vec<_>, _>>()?;
            json!({ "product": w(&ctx.product(parsed.iter())) })
        }
        Command::Inv { word } => json!({ "inverse": w(&ctx.inverse(&parse(&ctx, word)?)) }),
        Command::Pow { word, k } => {
            json!({ "power": w(&ctx.power(&parse(&ctx, word)?, *k)), "k": k })
        }
        Command::Root { word } => {
            let (root, k) = ctx.primitive_root(&parse(&ctx, word)?)?;
            json!({ "root": w(&root), "exponent": k })
        }
        Command::Order { word } => {
            json!({ "order": order_json(ctx.order_of(&parse(&ctx, word)?)) })
        }
        Command::Conj { u, v } => {
            let (u, v) = (parse(&ctx, u)?, parse(&ctx, v)?);
            match are_conjugate(&ctx, &u, &v) {
                Some(c) => {
                    let back = ctx.product([&ctx.inverse(&c.witness), &u, &c.witness]);
                    json!({ "conjugate": true, "C": w(&c.witness), "verified": back == v })
                }
                None => json!({ "conjugate": false }),
            }
        }
        Command::InvConj { word } => {
            let b = parse(&ctx, word)?;
            let case = classify_inverse_conjugate(&ctx, &b)?;
            case.verify(&ctx, &b)?;
            let mut v = inverse_conjugacy_json(&ctx, &case);
            v["verified"] = json!(true);
            v
        }
        Command::IsCommutator { word } => {
            let u = parse(&ctx, word)?;
            let cfg = cli.classifier().wicks;
            match is_commutator(&ctx, &u, &cfg)? {
                Some(witness) => {
                    let mut v = witness_json(&ctx, &witness);
                    v["is_commutator"] = json!(true);
                    v["verified"] = json!(true);
                    if let Some(form) = find_wicks_form(&ctx, &u, &cfg)? {
                        v["wicks"] = wicks_json(&ctx, &form);
                    }
                    v
                }
                None => json!({ "is_commutator": false }),
            }
        }
        Command::Classify { word, m } => {
            let u = parse(&ctx, word)?;
            let cfg = cli.classifier();
            match m {
                Some(m) => {
                    let cases = classify_power_commutator(&ctx, &u, *m, &cfg)?;
                    json!({
                        "V": w(&u),
                        "m": m,
                        "cases": cases.iter().map(|c| case_json(&ctx, c)).collect::<Vec<_>>(),
                        "verified": true,
                    })
                }
                None => {
                    let res = full_pipeline(&ctx, &u, &cfg)?
                        .ok_or(freeprod::Error::NotACommutatorPower)?;
                    pipeline_json(&ctx, &res)
                }
            }
        }
        Command::Overlap { v, m, x, pos } => {
            let (v, x) = (parse(&ctx, v)?, parse(&ctx, x)?);
            let case = classify_overlap(&ctx, &v, *m, &x, *pos)?;
            case.verify(&ctx, &v, *m, &x, *pos)?;
            let mut out = overlap_json(&ctx, &case);
            out["verified"] = json!(true);
            out
        }
        Command::Sweep { .. } | Command::PaperExample => unreachable!("handled above"),
    };
    Ok(Output::Json(value))
}

fn sweep(cli: &Cli, name: Option<&str>, out: Option<&PathBuf>) -> Result<Output, Failure> {
    let mut cfg = match (name, &cli.group) {
        (Some(name), None) => {
            shipped_config(name).ok_or_else(|| anyhow!("unknown sweep configuration `{name}`"))?
        }
        (name, Some(path)) => {
            let label = name
                .map(str::to_string)
                .or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()))
                .unwrap_or_else(|| "custom".into());
            SweepConfig::new(&label, cli.context()?)
        }
        (None, None) => {
            return Err(anyhow!("sweep needs a configuration name or --group <file>").into())
        }
    };
    let b = &cli.bounds;
    cfg.max_word_len = b.max_word_len.unwrap_or(cfg.max_word_len);
    cfg.max_exponent = b.max_exponent.unwrap_or(cfg.max_exponent);
    cfg.oracle_witness_len = b.max_witness_len.unwrap_or(cfg.oracle_witness_len);
    cfg.wicks_max_len = b.max_wicks_len.unwrap_or(cfg.wicks_max_len);
    cfg.fallback_torsion_len = b.max_torsion_len.or(cfg.fallback_torsion_len);

    let report = run_theorem_sweep(&cfg);
    let jsonl = report.to_jsonl();
    if let Some(path) = out {
        std::fs::write(path, &jsonl).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Output::Text {
        json: jsonl,
        human: report.summary_table(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Json(v)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("serializable")
                );
            } else {
                print!("{}", render::human(&v));
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Text { json, human }) => {
            print!("{}", if cli.json { json } else { human });
            ExitCode::SUCCESS
        }
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
