//! Exhaustive desk-scale check of the classification over a sample group.
//!
//! Report format: one JSON object per line. The first line has `"kind": "header"`,
//! one `"kind": "record"` line follows per `(V, m)` pair in `(|V|, lex, m)` order, and
//! a final `"kind": "summary"` line carries case counts and the failures list.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use super::enumerate::fully_cyclically_reduced_words;
use super::oracle::commutator_oracle_batch;
use super::render::{case_json, witness_json, word_json};
use crate::classifier::{classify_power_commutator, ClassifierConfig, TheoremCase};
use crate::factor::FactorGroup;
use crate::wicks::{is_commutator, CommutatorWitness, WicksConfig};
use crate::word::{GroupContext, Word};

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub name: String,
    pub group: GroupContext,
    pub max_word_len: usize,
    pub max_exponent: usize,
    pub oracle_witness_len: usize,
    /// Torsion bound for the classifier's fallback search; `None` uses `|V^m| + 2`.
    pub fallback_torsion_len: Option<usize>,
    pub wicks_max_len: usize,
    /// Extra words swept on top of the enumeration (fully cyclically reduced
    /// representatives are taken).
    pub pinned: Vec<Word>,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(name: &str, group: GroupContext) -> Self {
        Self {
            name: name.to_string(),
            group,
            max_word_len: 4,
            max_exponent: 6,
            oracle_witness_len: 8,
            fallback_torsion_len: None,
            wicks_max_len: crate::wicks::DEFAULT_MAX_LEN,
            pinned: Vec::new(),
            seed: 0,
        }
    }

    fn classifier_config(&self) -> ClassifierConfig {
        ClassifierConfig {
            wicks: WicksConfig {
                max_len: self.wicks_max_len,
            },
            fallback_torsion_len: self.fallback_torsion_len,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleVerdict {
    Found,
    NotFound,
}

#[derive(Debug, Clone)]
pub struct SweepRecord {
    pub v: Word,
    pub m: usize,
    pub power: Word,
    pub root: Word,
    pub root_exponent: usize,
    pub witness: Option<CommutatorWitness>,
    pub oracle: OracleVerdict,
    pub cases: Vec<TheoremCase>,
    pub verified: bool,
    pub failure: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub name: String,
    pub group: GroupContext,
    pub header: Value,
    pub records: Vec<SweepRecord>,
    pub case_counts: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn commutator_count(&self) -> usize {
        self.records.iter().filter(|r| r.witness.is_some()).count()
    }

    /// Tags of every case in the report.
    pub fn tags(&self) -> HashSet<&'static str> {
        self.records
            .iter()
            .flat_map(|r| r.cases.iter().map(TheoremCase::tag))
            .collect()
    }

    pub fn record(&self, v: &Word, m: usize) -> Option<&SweepRecord> {
        self.records.iter().find(|r| &r.v == v && r.m == m)
    }

    fn record_json(&self, r: &SweepRecord) -> Value {
        let ctx = &self.group;
        json!({
            "kind": "record",
            "v": word_json(ctx, &r.v),
            "m": r.m,
            "power": word_json(ctx, &r.power),
            "root": word_json(ctx, &r.root),
            "root_exponent": r.root_exponent,
            "commutator": r.witness.is_some(),
            "witness": r.witness.as_ref().map(|w| witness_json(ctx, w)),
            "oracle": match r.oracle { OracleVerdict::Found => "found", OracleVerdict::NotFound => "not_found" },
            "cases": r.cases.iter().map(|c| case_json(ctx, c)).collect::<Vec<_>>(),
            "verified": r.verified,
            "failure": r.failure,
        })
    }

    pub fn summary_json(&self) -> Value {
        json!({
            "kind": "summary",
            "name": self.name,
            "records": self.records.len(),
            "commutators": self.commutator_count(),
            "case_counts": self.case_counts,
            "failures": self.failures,
        })
    }

    /// The machine-readable report: header, records, summary; one JSON object per line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.to_string());
        out.push('\n');
        for r in &self.records {
            out.push_str(&self.record_json(r).to_string());
            out.push('\n');
        }
        out.push_str(&self.summary_json().to_string());
        out.push('\n');
        out
    }

    /// Human summary table.
    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "sweep {} over {}: {} records, {} commutator powers, {} failures\n",
            self.name,
            self.group.name(),
            self.records.len(),
            self.commutator_count(),
            self.failures.len()
        );
        out.push_str(&format!("{:<10} {:>8}\n", "case", "count"));
        for (tag, count) in &self.case_counts {
            out.push_str(&format!("{tag:<10} {count:>8}\n"));
        }
        for f in &self.failures {
            out.push_str(&format!("FAILURE {f}\n"));
        }
        out
    }
}

fn sweep_words(cfg: &SweepConfig) -> Vec<Word> {
    let ctx = &cfg.group;
    let mut words: Vec<Word> = fully_cyclically_reduced_words(ctx, cfg.max_word_len).collect();
    for p in &cfg.pinned {
        let rep = ctx.cyclic_reduce(p).representative;
        if !rep.is_identity() && !words.contains(&rep) {
            words.push(rep);
        }
    }
    words
}

/// For every enumerated `V` and `m ∈ 2..=max_exponent`: decide whether `V^m` is a
/// commutator, cross-check against the exhaustive oracle, classify and verify.
pub fn run_theorem_sweep(cfg: &SweepConfig) -> SweepReport {
    let ctx = &cfg.group;
    let ccfg = cfg.classifier_config();
    let pairs: Vec<(Word, usize)> = sweep_words(cfg)
        .into_iter()
        .flat_map(|v| (2..=cfg.max_exponent).map(move |m| (v.clone(), m)))
        .collect();

    let targets: HashSet<Word> = pairs
        .iter()
        .map(|(v, m)| ctx.power(v, *m as i64))
        .filter(|p| p.len() <= 4 * cfg.oracle_witness_len)
        .collect();
    let oracle = commutator_oracle_batch(ctx, &targets, cfg.oracle_witness_len);

    let records: Vec<SweepRecord> = pairs
        .par_iter()
        .map(|(v, m)| {
            let power = ctx.power(v, *m as i64);
            let (root, root_exponent) = ctx.primitive_root(v).expect("v is nontrivial");
            let oracle_verdict = if oracle.contains_key(&power) {
                OracleVerdict::Found
            } else {
                OracleVerdict::NotFound
            };
            let mut rec = SweepRecord {
                v: v.clone(),
                m: *m,
                power: power.clone(),
                root,
                root_exponent,
                witness: None,
                oracle: oracle_verdict,
                cases: Vec::new(),
                verified: false,
                failure: None,
            };
            match is_commutator(ctx, &power, &ccfg.wicks) {
                Err(e) => rec.failure = Some(format!("is_commutator: {e}")),
                Ok(None) => {
                    rec.verified = true;
                    if oracle_verdict == OracleVerdict::Found {
                        rec.verified = false;
                        rec.failure =
                            Some("oracle found a commutator but the Wicks search did not".into());
                    }
                }
                Ok(Some(w)) => {
                    let within =
                        w.x.len() <= cfg.oracle_witness_len && w.y.len() <= cfg.oracle_witness_len;
                    if within && oracle_verdict == OracleVerdict::NotFound {
                        rec.failure = Some(
                            "witness within the oracle bound but the oracle found none".into(),
                        );
                    }
                    rec.witness = Some(w);
                    match classify_power_commutator(ctx, v, *m as i64, &ccfg) {
                        Ok(cases) if cases.is_empty() => {
                            rec.failure = Some("classify: no case found".into());
                        }
                        Ok(cases) => {
                            rec.cases = cases;
                            rec.verified = rec.failure.is_none();
                        }
                        Err(e) => rec.failure = Some(format!("classify: {e}")),
                    }
                }
            }
            rec
        })
        .collect();

    let mut case_counts = BTreeMap::new();
    let mut failures = Vec::new();
    for r in &records {
        for c in &r.cases {
            *case_counts.entry(c.tag().to_string()).or_insert(0) += 1;
        }
        if let Some(f) = &r.failure {
            failures.push(format!("{} m={}: {f}", ctx.format_word(&r.v), r.m));
        }
    }
    let header = json!({
        "kind": "header",
        "name": cfg.name,
        "group": ctx.name(),
        "max_word_len": cfg.max_word_len,
        "max_exponent": cfg.max_exponent,
        "oracle_witness_len": cfg.oracle_witness_len,
        "fallback_torsion_len": cfg.fallback_torsion_len,
        "wicks_max_len": cfg.wicks_max_len,
        "pinned": cfg.pinned.iter().map(|w| word_json(ctx, w)).collect::<Vec<_>>(),
        "seed": cfg.seed,
    });
    SweepReport {
        name: cfg.name.clone(),
        group: ctx.clone(),
        header,
        records,
        case_counts,
        failures,
    }
}

/// `Klein4 ∗ C2`, the group of the worked fourth-power example. The `C2` factor has
/// elements `1, c`.
pub fn klein4_c2() -> GroupContext {
    let c2 = FactorGroup::from_table(
        "C2",
        vec!["1".into(), "c".into()],
        vec![vec![0, 1], vec![1, 0]],
    )
    .expect("C2 table");
    GroupContext::new(vec![FactorGroup::klein4(), c2]).expect("nontrivial factors")
}

pub fn s3_c2() -> GroupContext {
    GroupContext::new(vec![
        FactorGroup::symmetric3(),
        FactorGroup::cyclic(2).expect("C2"),
    ])
    .expect("nontrivial factors")
}

/// `x c y c xy c`: the fourth-power example whose square is a product of three
/// involutions.
pub fn worked_example_word(ctx: &GroupContext) -> Word {
    ctx.parse_word("0.x 1.c 0.y 1.c 0.xy 1.c")
        .expect("word over Klein4*C2")
}

/// The six standard sweep configurations.
pub fn shipped_configs() -> Vec<SweepConfig> {
    let cyc = |o: &[usize]| GroupContext::cyclic(o).expect("cyclic factors");
    let k4c2 = klein4_c2();
    let mut k4 = SweepConfig::new("k4c2", k4c2.clone());
    k4.pinned = vec![worked_example_word(&k4c2)];
    k4.wicks_max_len = 36;
    vec![
        SweepConfig::new("c2c2", cyc(&[2, 2])),
        SweepConfig::new("c2c3", cyc(&[2, 3])),
        SweepConfig::new("c3c3", cyc(&[3, 3])),
        SweepConfig::new("c2c2c2", cyc(&[2, 2, 2])),
        k4,
        SweepConfig::new("s3c2", s3_c2()),
    ]
}

/// Sweeps over factors without elements of even order.
pub fn odd_torsion_configs() -> Vec<SweepConfig> {
    let cyc = |o: &[usize]| GroupContext::cyclic(o).expect("cyclic factors");
    let mut c3c5 = SweepConfig::new("c3c5", cyc(&[3, 5]));
    c3c5.oracle_witness_len = 6;
    vec![SweepConfig::new("c3c3", cyc(&[3, 3])), c3c5]
}

pub fn shipped_config(name: &str) -> Option<SweepConfig> {
    shipped_configs()
        .into_iter()
        .chain(odd_torsion_configs())
        .find(|c| c.name == name)
}
