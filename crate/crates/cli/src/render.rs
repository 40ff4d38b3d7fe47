//! Human-readable reports. Elements are shown by their shortest word.

use std::fmt::Write;

use altlab::algebra::RecognizedLanguage;
use altlab::chains::{Chain, ChainFamily};
use altlab::deciders::{BSchema, ClassificationReport, Logic, Verdict, Violation};
use altlab::oracle::{BundleCheck, WitnessBundle};
use altlab::LetterSet;

fn name(l: &RecognizedLanguage, s: usize) -> String {
    l.monoid().name(s)
}

pub fn chain(l: &RecognizedLanguage, c: &Chain) -> String {
    let parts: Vec<String> = c.0.iter().map(|&s| name(l, s)).collect();
    format!("({})", parts.join(","))
}

pub fn monoid(l: &RecognizedLanguage) -> String {
    let m = l.monoid();
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", m.size());
    for s in m.elements() {
        let _ = writeln!(
            out,
            "  {s}: {}{}",
            name(l, s),
            if l.accepting[s] { "  (accepting)" } else { "" }
        );
    }
    let letters: Vec<String> = l
        .alphabet()
        .letters()
        .iter()
        .enumerate()
        .map(|(a, c)| format!("{c} -> {}", l.morphism.letter_image(a)))
        .collect();
    let _ = writeln!(out, "letters: {}", letters.join(", "));
    let _ = writeln!(out, "multiplication:");
    let width = m.elements().map(|s| s.to_string().len()).max().unwrap_or(1);
    for s in m.elements() {
        let row: Vec<String> = m.elements().map(|t| format!("{:>width$}", m.mul(s, t))).collect();
        let _ = writeln!(out, "  {:>width$} | {}", s, row.join(" "));
    }
    if let Some(order) = &l.order {
        let strict: Vec<String> = order
            .pairs()
            .into_iter()
            .filter(|(s, t)| s != t)
            .map(|(s, t)| format!("{} <= {}", name(l, s), name(l, t)))
            .collect();
        let _ = write!(out, "order: {}", if strict.is_empty() { "equality".into() } else { strict.join(", ") });
    }
    out.trim_end().to_string()
}

pub fn family(l: &RecognizedLanguage, f: &ChainFamily, only: Option<LetterSet>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "length {}: {} passes, {} maximal sets, rank bound {}",
        f.length(),
        f.iterations(),
        f.total_sets(),
        f.rank_bound().symbolic()
    );
    for b in LetterSet::all_by_size(l.alphabet().len()) {
        if only.is_some_and(|o| o != b) {
            continue;
        }
        let _ = writeln!(out, "{}:", l.alphabet().render_subset(b));
        let space = f.space();
        for stored in f.sets(b) {
            let chains: Vec<String> = space.chains(&stored.set).iter().map(|c| chain(l, c)).collect();
            let _ = writeln!(out, "  {{{}}}  [{}]", chains.join(" "), stored.derivation.kind());
        }
    }
    out.trim_end().to_string()
}

pub fn schemas(l: &RecognizedLanguage, per: &[(LetterSet, Vec<BSchema>)]) -> String {
    let mut out = String::new();
    for (b, list) in per {
        let _ = writeln!(out, "{}: {} schemas", l.alphabet().render_subset(*b), list.len());
        for s in list {
            let _ = writeln!(
                out,
                "  ({}, {}, {})  r1={} r1'={}",
                name(l, s.s1),
                name(l, s.s2),
                name(l, s.s2p),
                name(l, s.witness.r1),
                name(l, s.witness.r1p)
            );
        }
    }
    out.trim_end().to_string()
}

fn violation(l: Option<&RecognizedLanguage>, v: &Violation) -> String {
    let show = |s: usize| match l {
        Some(l) => name(l, s),
        None => s.to_string(),
    };
    let vars: Vec<String> = v.elements.iter().map(|(k, &s)| format!("{k}={}", show(s))).collect();
    let mut out = format!("{}: {} fails for {}", v.equation, v.relation, vars.join(" "));
    if let (Some(lhs), Some(rhs)) = (v.lhs, v.rhs) {
        let _ = write!(out, " (lhs {}, rhs {})", show(lhs), show(rhs));
    }
    if let Some(b) = &v.alphabet {
        let _ = write!(out, " over {b}");
    }
    out
}

pub fn report(l: &RecognizedLanguage, r: &ClassificationReport) -> String {
    let mut out = String::new();
    for (class, verdict) in &r.verdicts {
        let _ = write!(out, "{:<8} {}", class.name(), if verdict.decision { "yes" } else { "no" });
        if let Some(v) = &verdict.violation {
            let _ = write!(out, "   {}", violation(Some(l), v));
        }
        out.push('\n');
    }
    let _ = write!(out, "monoid size {}, level-3 rank bound {}", r.monoid_size, r.level3_rank_bound);
    out
}

pub fn separation(v: &Verdict, logic: Logic) -> String {
    let name = match logic {
        Logic::Sigma2 => "Sigma2",
        Logic::Pi2 => "Pi2",
    };
    match &v.violation {
        None => format!("{name}-separable: yes"),
        Some(x) => format!("{name}-separable: no   {}", violation(None, x)),
    }
}

pub fn bundle(l: &RecognizedLanguage, b: &WitnessBundle, check: &BundleCheck) -> String {
    let mut out = format!(
        "chain {} over {} at rank {}\n",
        chain(l, &b.chain),
        l.alphabet().render_subset(b.alphabet),
        b.rank
    );
    for (j, w) in b.words.iter().enumerate() {
        let _ = writeln!(out, "  w{} ({} letters): {}", j + 1, w.len(), l.alphabet().render(w));
    }
    for f in &b.flags {
        let _ = writeln!(out, "  note: {f}");
    }
    match check {
        BundleCheck::Passed => out.push_str("verified"),
        BundleCheck::Failed(d) => out.push_str(&format!("verification failed: {d}")),
    }
    out
}
