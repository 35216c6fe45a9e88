//! Report rendering. Outputs are deterministic: identical inputs produce
//! byte-identical reports.

use std::fmt::Write as _;

use cgel_core::align::align_tree_tokens;
use cgel_core::compare::ComparisonReport;
use cgel_core::conllu::ConlluSentence;
use cgel_core::functions::FunctionHierarchy;
use cgel_core::heads::extract_heads;
use cgel_core::metrics::entropy;
use cgel_core::tree::{census, CgelTree};
use cgel_core::AlignmentOptions;

pub fn stats_tsv(trees: &[CgelTree]) -> String {
    let c = census(trees.iter());
    let mut out = String::new();
    let _ = writeln!(out, "trees\t{}", c.trees);
    let _ = writeln!(out, "tokens\t{}", c.lexemes);
    let _ = writeln!(out, "gaps\t{}", c.gaps);
    match entropy(c.pos.values().copied()) {
        Ok(h) => {
            let _ = writeln!(out, "h_pos_bits\t{h:.2}");
        }
        Err(_) => {
            let _ = writeln!(out, "h_pos_bits\tn/a (no tokens)");
        }
    }
    let _ = writeln!(out, "#\tsection\tlabel\tcount");
    for (tag, n) in &c.pos {
        let _ = writeln!(out, "\tpos\t{tag}\t{n}");
    }
    if c.gaps > 0 {
        let _ = writeln!(out, "\tpos\tGAP\t{}", c.gaps);
    }
    for (cat, n) in &c.categories {
        let _ = writeln!(out, "\tcategory\t{cat}\t{n}");
    }
    let hierarchy = FunctionHierarchy::standard();
    for (func, n) in &c.functions {
        let branch = hierarchy
            .top_branch(*func)
            .map(|b| b.to_string())
            .unwrap_or_else(|_| "retired".to_string());
        let _ = writeln!(out, "\tfunction\t{func}\t{n}\t{branch}");
    }
    out
}

pub fn stats_json(trees: &[CgelTree]) -> anyhow::Result<String> {
    let c = census(trees.iter());
    let hierarchy = FunctionHierarchy::standard();
    let pos: serde_json::Map<String, serde_json::Value> = c
        .pos
        .iter()
        .map(|(k, v)| (k.as_str().to_string(), (*v).into()))
        .collect();
    let categories: serde_json::Map<String, serde_json::Value> = c
        .categories
        .iter()
        .map(|(k, v)| (k.to_string(), (*v).into()))
        .collect();
    let functions: serde_json::Map<String, serde_json::Value> = c
        .functions
        .iter()
        .map(|(k, v)| {
            let branch = hierarchy
                .top_branch(*k)
                .map(|b| b.to_string())
                .unwrap_or_else(|_| "retired".to_string());
            (
                k.as_str().to_string(),
                serde_json::json!({ "count": v, "branch": branch }),
            )
        })
        .collect();
    let value = serde_json::json!({
        "trees": c.trees,
        "tokens": c.lexemes,
        "gaps": c.gaps,
        "h_pos_bits": entropy(c.pos.values().copied()).ok(),
        "pos": pos,
        "categories": categories,
        "functions": functions,
    });
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

pub fn compare_tsv(r: &ComparisonReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "trees\t{}", r.trees);
    let _ = writeln!(out, "cgel_tokens\t{}", r.cgel_tokens);
    let _ = writeln!(out, "cgel_gaps\t{}", r.cgel_gaps);
    if let Some(h) = r.h_cgel_pos {
        let _ = writeln!(out, "h_cgel_pos\t{h:.2}");
    }
    let _ = writeln!(out, "ud_tokens\t{}", r.ud_tokens);
    let _ = writeln!(out, "ud_matched\t{}", r.ud_matched);
    if let Some(f) = r.ud_matched_fraction() {
        let _ = writeln!(out, "ud_matched_pct\t{:.1}", f * 100.0);
    }
    if let Some(h) = r.h_given_ud {
        let _ = writeln!(out, "h_pos_given_ud\t{h:.2}");
    }
    if r.ptb_tokens > 0 {
        let _ = writeln!(out, "ptb_tokens\t{}", r.ptb_tokens);
        let _ = writeln!(out, "ptb_matched\t{}", r.ptb_matched);
        if let Some(h) = r.h_given_ptb {
            let _ = writeln!(out, "h_pos_given_ptb\t{h:.2}");
        }
    }
    if r.head_total > 0 {
        let _ = writeln!(
            out,
            "head_agreement\t{:.1}\t{}/{}",
            r.head_agreement_fraction().unwrap_or(0.0) * 100.0,
            r.head_agree,
            r.head_total
        );
    }
    for (deprel, (agree, total)) in &r.head_by_deprel {
        let pct = if *total > 0 {
            *agree as f64 / *total as f64 * 100.0
        } else {
            0.0
        };
        let _ = writeln!(out, "\thead_by_deprel\t{deprel}\t{pct:.1}\t{agree}/{total}");
    }
    for (kind, (matched, total)) in &r.gaps_by_kind {
        let _ = writeln!(out, "\tgap_alignment\t{kind}\t{matched}/{total}");
    }
    let _ = writeln!(out, "unmatched_gaps\t{}", r.unmatched_gaps);
    for ((x, y), n) in &r.confusion_ud.counts {
        let _ = writeln!(out, "\tconfusion_ud\t{x}\t{y}\t{n}");
    }
    for ((x, y), n) in &r.confusion_ptb.counts {
        let _ = writeln!(out, "\tconfusion_ptb\t{x}\t{y}\t{n}");
    }
    out
}

pub fn compare_json(r: &ComparisonReport) -> anyhow::Result<String> {
    let confusion = |j: &cgel_core::metrics::JointCounts<String, String>| {
        j.counts
            .iter()
            .map(|((x, y), n)| serde_json::json!({ "cgel": x, "other": y, "count": n }))
            .collect::<Vec<_>>()
    };
    let by_deprel: serde_json::Map<String, serde_json::Value> = r
        .head_by_deprel
        .iter()
        .map(|(k, (a, t))| {
            (
                k.clone(),
                serde_json::json!({ "agree": a, "total": t }),
            )
        })
        .collect();
    let gaps: serde_json::Map<String, serde_json::Value> = r
        .gaps_by_kind
        .iter()
        .map(|(k, (m, t))| {
            (
                k.clone(),
                serde_json::json!({ "matched": m, "total": t }),
            )
        })
        .collect();
    let value = serde_json::json!({
        "trees": r.trees,
        "cgel_tokens": r.cgel_tokens,
        "cgel_gaps": r.cgel_gaps,
        "h_cgel_pos": r.h_cgel_pos.map(round2),
        "ud": {
            "tokens": r.ud_tokens,
            "matched": r.ud_matched,
            "matched_pct": r.ud_matched_fraction().map(|f| round2(f * 100.0)),
            "h_pos_given_ud": r.h_given_ud.map(round2),
            "confusion": confusion(&r.confusion_ud),
        },
        "ptb": {
            "tokens": r.ptb_tokens,
            "matched": r.ptb_matched,
            "h_pos_given_ptb": r.h_given_ptb.map(round2),
            "confusion": confusion(&r.confusion_ptb),
        },
        "head_agreement": {
            "agree": r.head_agree,
            "total": r.head_total,
            "by_deprel": by_deprel,
        },
        "gap_alignment": {
            "by_kind": gaps,
            "unmatched_gaps": r.unmatched_gaps,
        },
    });
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

/// One row per token on both sides: sent_id, side, index, form, partner.
pub fn alignment_tsv(
    pairs: &[(&CgelTree, &ConlluSentence)],
    options: &AlignmentOptions,
) -> String {
    let mut out = String::new();
    for (tree, sentence) in pairs {
        let forms = sentence.forms();
        let alignment = align_tree_tokens(tree, &forms, options);
        let lexemes = tree.lexeme_forms();
        let partner_of_cgel = |i: usize| -> String {
            let covered: Vec<String> = alignment
                .pairs
                .iter()
                .filter(|p| p.cgel == i)
                .map(|p| (p.other + 1).to_string())
                .collect();
            if covered.is_empty() {
                "-".to_string()
            } else {
                covered.join(",")
            }
        };
        for (i, form) in lexemes.iter().enumerate() {
            let _ = writeln!(
                out,
                "{}\tcgel\t{}\t{}\t{}",
                tree.id,
                i + 1,
                form,
                partner_of_cgel(i)
            );
        }
        for (j, form) in forms.iter().enumerate() {
            let partner = alignment
                .pairs
                .iter()
                .find(|p| p.other == j)
                .map(|p| (p.cgel + 1).to_string())
                .unwrap_or_else(|| "-".to_string());
            let _ = writeln!(out, "{}\tud\t{}\t{}\t{}", tree.id, j + 1, form, partner);
        }
    }
    out
}

pub fn heads_tsv(trees: &[CgelTree]) -> anyhow::Result<String> {
    let mut out = String::new();
    for tree in trees {
        let graph = extract_heads(tree)
            .map_err(|e| anyhow::anyhow!("{}: {e}", tree.id))?;
        for (i, form) in tree.lexeme_forms().iter().enumerate() {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", tree.id, i + 1, form, graph.heads[i]);
        }
    }
    Ok(out)
}

pub fn heads_json(trees: &[CgelTree]) -> anyhow::Result<String> {
    let mut items = Vec::new();
    for tree in trees {
        let graph = extract_heads(tree)
            .map_err(|e| anyhow::anyhow!("{}: {e}", tree.id))?;
        let tokens: Vec<serde_json::Value> = tree
            .lexeme_forms()
            .iter()
            .enumerate()
            .map(|(i, form)| {
                serde_json::json!({
                    "index": i + 1,
                    "form": form,
                    "head": graph.heads[i],
                })
            })
            .collect();
        items.push(serde_json::json!({ "sent_id": tree.id, "tokens": tokens }));
    }
    Ok(serde_json::to_string_pretty(&serde_json::Value::Array(items))? + "\n")
}
