//! JSON renderings of the crate's result types. Words are rendered in the text syntax
//! of [`GroupContext::format_word`]; object keys are emitted in sorted order.

use serde_json::{json, Map, Value};

use crate::classifier::{OverlapCase, PipelineResult, TheoremCase};
use crate::conjugacy::InverseConjugacyCase;
use crate::factor::FactorElement;
use crate::wicks::{CommutatorWitness, WicksForm, WicksPattern};
use crate::word::{GroupContext, Word};

pub fn word_json(ctx: &GroupContext, w: &Word) -> Value {
    Value::String(ctx.format_word(w))
}

pub fn letter_json(ctx: &GroupContext, l: FactorElement) -> Value {
    if l.is_identity() {
        Value::String(format!(
            "{}.{}",
            l.factor,
            ctx.factor(l.factor).element_name(0)
        ))
    } else {
        Value::String(ctx.format_letter(l))
    }
}

fn opt_letter_json(ctx: &GroupContext, l: &Option<FactorElement>) -> Value {
    l.map_or(Value::Null, |l| letter_json(ctx, l))
}

pub fn witness_json(ctx: &GroupContext, w: &CommutatorWitness) -> Value {
    json!({
        "X": word_json(ctx, &w.x),
        "Y": word_json(ctx, &w.y),
        "commutator": word_json(ctx, &w.commutator(ctx)),
    })
}

pub fn case_json(ctx: &GroupContext, case: &TheoremCase) -> Value {
    let mut obj = Map::new();
    obj.insert("tag".into(), json!(case.tag()));
    obj.insert("clause".into(), json!(case.clause().to_string()));
    for (name, w) in case.words() {
        obj.insert(name.into(), word_json(ctx, w));
    }
    if let TheoremCase::Factor { letter, x, y, .. } = case {
        obj.insert("i".into(), json!(letter.factor));
        obj.insert("letter".into(), letter_json(ctx, *letter));
        obj.insert("x".into(), letter_json(ctx, *x));
        obj.insert("y".into(), letter_json(ctx, *y));
    }
    Value::Object(obj)
}

pub fn wicks_json(ctx: &GroupContext, form: &WicksForm) -> Value {
    let w = |x: &Word| word_json(ctx, x);
    let arr = |xs: &[Option<FactorElement>]| {
        Value::Array(xs.iter().map(|l| opt_letter_json(ctx, l)).collect())
    };
    let mut obj = match &form.pattern {
        WicksPattern::OneVar { x, a1, a2, c } => json!({
            "X": w(x),
            "a1": letter_json(ctx, *a1),
            "a2": letter_json(ctx, *a2),
            "c": letter_json(ctx, *c),
            "i": a1.factor,
        }),
        WicksPattern::TwoVar { x, y, a, i } => json!({
            "X": w(x),
            "Y": w(y),
            "a": arr(a),
            "i": i,
        }),
        WicksPattern::ThreeVar {
            x,
            y,
            z,
            a,
            i,
            b,
            j,
        } => json!({
            "X": w(x),
            "Y": w(y),
            "Z": w(z),
            "a": arr(a),
            "b": arr(b),
            "i": i,
            "j": j,
        }),
    };
    let map = obj.as_object_mut().expect("object");
    map.insert("form".into(), json!(form.pattern.tag()));
    map.insert("locator".into(), w(&form.locator));
    obj
}

pub fn overlap_json(ctx: &GroupContext, case: &OverlapCase) -> Value {
    let w = |x: &Word| word_json(ctx, x);
    let mut obj = match case {
        OverlapCase::VeryLong { x1, a, b, .. } => json!({"X1": w(x1), "A": w(a), "B": w(b)}),
        OverlapCase::Long { x1, x2, x3, .. } => json!({"X1": w(x1), "X2": w(x2), "X3": w(x3)}),
        OverlapCase::Medium1 { x1, x2, t1, .. } => json!({"X1": w(x1), "X2": w(x2), "T1": w(t1)}),
        OverlapCase::Medium2 { x1, x2, s2, s3, .. } => {
            json!({"X1": w(x1), "X2": w(x2), "S2": w(s2), "S3": w(s3)})
        }
        OverlapCase::Short { v2, v3, .. } => json!({"V2": w(v2), "V3": w(v3)}),
    };
    let map = obj.as_object_mut().expect("object");
    map.insert("case".into(), json!(case.tag()));
    map.insert("n".into(), json!(case.n()));
    obj
}

pub fn inverse_conjugacy_json(ctx: &GroupContext, case: &InverseConjugacyCase) -> Value {
    match case {
        InverseConjugacyCase::FactorCase { w, letter, c } => json!({
            "case": "FactorCase",
            "W": word_json(ctx, w),
            "i": letter.factor,
            "letter": letter_json(ctx, *letter),
            "c": letter_json(ctx, *c),
        }),
        InverseConjugacyCase::InvolutionPair { d, e } => json!({
            "case": "InvolutionPair",
            "D": word_json(ctx, d),
            "E": word_json(ctx, e),
        }),
    }
}

pub fn pipeline_json(ctx: &GroupContext, res: &PipelineResult) -> Value {
    let cases = |cs: &[TheoremCase]| Value::Array(cs.iter().map(|c| case_json(ctx, c)).collect());
    json!({
        "root": word_json(ctx, &res.root),
        "m": res.exponent,
        "cases": cases(&res.cases),
        "witness": witness_json(ctx, &res.witness),
        "alternatives": res.alternatives.iter().map(|alt| json!({
            "root": word_json(ctx, &alt.root),
            "m": alt.exponent,
            "cases": cases(&alt.cases),
        })).collect::<Vec<_>>(),
        "verified": true,
    })
}
