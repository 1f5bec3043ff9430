use serde_json::{json, Value};

use postlie::catalog::{self, Group};
use postlie::interchange;
use postlie::postlie::certificate::{Certificate, Verdict};
use postlie::postlie::{
    embedding_report, existence_table, induced_bracket, nonexistence_certificate, pa_from_rb,
    pa_search, rb_from_decomposition, rb_kernels, verify_pa, verify_rb, CellStatus,
    DoubleEmbedding, RBOperator, SearchOptions,
};
use postlie::scalar;
use postlie::{Error, LieAlgebra, Subspace};

use crate::input::{self, CliResult, Failure};

pub const OK: i32 = 0;
pub const NEGATIVE: i32 = 1;
pub const UNKNOWN: i32 = 2;

/// Result of a command: exit code plus text and JSON renderings.
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    fn new(code: i32, text: String, json: Value) -> Self {
        Self { code, text, json }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn group_name(g: Group) -> &'static str {
    match g {
        Group::PerfectUpTo8 => "perfect-dim<=8",
        Group::PerfectDim9 => "perfect-dim9",
        Group::Auxiliary => "auxiliary",
    }
}

fn subspace_json(s: &Subspace) -> Value {
    Value::Array(
        s.basis_vectors()
            .map(|v| Value::Array(v.iter().map(|c| Value::String(scalar::format(c))).collect()))
            .collect(),
    )
}

fn one_based(s: &Subspace) -> String {
    let vecs: Vec<String> = s
        .basis_vectors()
        .map(|v| {
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != scalar::zero())
                .map(|(i, c)| {
                    if *c == scalar::one() {
                        format!("e{}", i + 1)
                    } else {
                        format!("{}*e{}", scalar::format(c), i + 1)
                    }
                })
                .collect();
            terms.join("+")
        })
        .collect();
    format!("span{{{}}}", vecs.join(", "))
}

pub fn catalog_list() -> CliResult<Outcome> {
    let mut text = format!(
        "{:<14} {:>3} {:>6} {:>7}  {:<15} {}\n",
        "id", "dim", "center", "perfect", "group", "description"
    );
    let mut rows = Vec::new();
    for e in catalog::entries() {
        let note = if e.is_data_incomplete() {
            " (external data)"
        } else {
            ""
        };
        text.push_str(&format!(
            "{:<14} {:>3} {:>6} {:>7}  {:<15} {}{}\n",
            e.id,
            e.expected_dim,
            e.expected_center_dim,
            yes_no(e.expected_perfect),
            group_name(e.group),
            e.description,
            note
        ));
        rows.push(json!({
            "id": e.id,
            "dim": e.expected_dim,
            "center_dim": e.expected_center_dim,
            "perfect": e.expected_perfect,
            "group": group_name(e.group),
            "description": e.description,
            "buildable": !e.is_data_incomplete(),
        }));
    }
    Ok(Outcome::new(OK, text, Value::Array(rows)))
}

pub fn catalog_show(id: &str) -> CliResult<Outcome> {
    let e = catalog::entry(id)?;
    let mut text = format!("{}: {}\n", e.id, e.description);
    text.push_str(&format!(
        "dim {}, center dim {}, perfect {}\n",
        e.expected_dim,
        e.expected_center_dim,
        yes_no(e.expected_perfect)
    ));
    let mut j = json!({
        "id": e.id,
        "description": e.description,
        "dim": e.expected_dim,
        "center_dim": e.expected_center_dim,
        "perfect": e.expected_perfect,
        "group": group_name(e.group),
    });
    if let Some(src) = e.source {
        text.push_str(&format!(
            "table labels: {}{}\n",
            src.turkowski,
            src.alev.map(|a| format!(" / {a}")).unwrap_or_default()
        ));
        j["labels"] = json!({"turkowski": src.turkowski, "alev": src.alev});
    }
    if e.is_data_incomplete() {
        text.push_str("structure constants are not bundled; supply them as an external file\n");
        j["buildable"] = json!(false);
        return Ok(Outcome::new(OK, text, j));
    }
    let g = catalog::build(id)?;
    j["buildable"] = json!(true);
    j["algebra"] =
        serde_json::to_value(interchange::algebra_to_document(&g)).expect("serializable");
    text.push_str("brackets:\n");
    for (i, jj, k, c) in g.brackets().nonzero_entries().filter(|(i, j, _, _)| i < j) {
        text.push_str(&format!(
            "  [e{},e{}] has {} at e{}\n",
            i + 1,
            jj + 1,
            scalar::format(c),
            k + 1
        ));
    }
    let md = g.metadata();
    for (name, s) in [
        ("levi", &md.levi),
        ("radical", &md.radical),
        ("nilradical", &md.nilradical),
    ] {
        if let Some(s) = s {
            text.push_str(&format!("{name}: {}\n", one_based(s)));
        }
    }
    if let Some(m) = &md.modules {
        text.push_str(&format!("modules: {m}\n"));
    }
    Ok(Outcome::new(OK, text, j))
}

pub fn catalog_export(id: &str, out: Option<&str>) -> CliResult<Outcome> {
    let g = catalog::build(id)?;
    let doc = interchange::algebra_to_document(&g);
    let body = interchange::to_json(&doc);
    let text = match out {
        Some(path) => {
            input::write_or_print(Some(path), &body)?;
            format!("wrote {path}\n")
        }
        None => body,
    };
    Ok(Outcome::new(
        OK,
        text,
        serde_json::to_value(doc).expect("serializable"),
    ))
}

pub fn check_jacobi(src: &str) -> CliResult<Outcome> {
    let t = input::load_brackets(src)?;
    let res = postlie::algebra::jacobi_residual(&t);
    Ok(match res.first_violation() {
        None => Outcome::new(
            OK,
            "Jacobi identity holds\n".into(),
            json!({"jacobi": true}),
        ),
        Some((i, j, k)) => Outcome::new(
            NEGATIVE,
            format!(
                "Jacobi identity fails for (e{}, e{}, e{})\n",
                i + 1,
                j + 1,
                k + 1
            ),
            json!({"jacobi": false, "violation": [i + 1, j + 1, k + 1]}),
        ),
    })
}

pub fn invariants(src: &str) -> CliResult<Outcome> {
    let g = input::load_algebra(src)?;
    let fp = catalog::fingerprint(&g);
    let class = g.nilpotency_class().ok();
    let matches = catalog::identify(&g);
    let facts = [
        ("perfect", fp.perfect),
        ("solvable", fp.solvable),
        ("nilpotent", fp.nilpotent),
        ("semisimple", fp.semisimple),
        ("simple", g.is_simple()),
        ("reductive", g.is_reductive()),
        ("complete", g.is_complete()),
    ];
    let mut text = format!("dim: {}\n", fp.dim);
    text.push_str(&format!("derived series dims: {:?}\n", fp.derived_dims));
    text.push_str(&format!("lower central series dims: {:?}\n", fp.lcs_dims));
    text.push_str(&format!("center dim: {}\n", fp.center_dim));
    text.push_str(&format!("radical dim: {}\n", fp.radical_dim));
    text.push_str(&format!("Killing form rank: {}\n", fp.killing_rank));
    if let Some(c) = class {
        text.push_str(&format!("nilpotency class: {c}\n"));
    }
    for (name, v) in facts {
        text.push_str(&format!("{name}: {}\n", yes_no(v)));
    }
    text.push_str(&format!(
        "catalog fingerprint matches: {}\n",
        if matches.is_empty() {
            "none".into()
        } else {
            matches.join(", ")
        }
    ));
    let mut j = json!({
        "dim": fp.dim,
        "derived_dims": fp.derived_dims,
        "lcs_dims": fp.lcs_dims,
        "center_dim": fp.center_dim,
        "radical_dim": fp.radical_dim,
        "killing_rank": fp.killing_rank,
        "nilpotency_class": class,
        "fingerprint_matches": matches,
    });
    for (name, v) in facts {
        j[name] = json!(v);
    }
    Ok(Outcome::new(OK, text, j))
}

pub fn verify_pa_cmd(g: &str, n: &str, prod: &str) -> CliResult<Outcome> {
    let (g, n, p) = (
        input::load_algebra(g)?,
        input::load_algebra(n)?,
        input::load_product(prod)?,
    );
    let r = verify_pa(&p, &g, &n)?;
    let mut text = String::new();
    for (name, v) in [
        ("axiom 1", r.axiom1),
        ("axiom 2", r.axiom2),
        ("axiom 3", r.axiom3),
        ("L is a representation", r.l_is_rep),
        ("L(x) are derivations", r.l_in_der),
    ] {
        text.push_str(&format!("{name}: {}\n", if v { "pass" } else { "fail" }));
    }
    if let Some(f) = &r.first_failure {
        text.push_str(&format!("{f}\n"));
    }
    text.push_str(if r.holds() {
        "post-Lie structure: yes\n"
    } else {
        "post-Lie structure: no\n"
    });
    let j = json!({
        "axiom1": r.axiom1,
        "axiom2": r.axiom2,
        "axiom3": r.axiom3,
        "l_is_rep": r.l_is_rep,
        "l_in_der": r.l_in_der,
        "first_failure": r.first_failure.as_ref().map(|f| json!({"axiom": f.axiom.number(), "indices": f.indices})),
        "post_lie": r.holds(),
    });
    Ok(Outcome::new(if r.holds() { OK } else { NEGATIVE }, text, j))
}

fn operator(op: &str, weight: Option<&str>) -> CliResult<RBOperator> {
    let (m, file_weight) = input::load_operator(op)?;
    let w = match weight {
        Some(t) => scalar::parse(t).map_err(|e| Failure::Usage(format!("--weight: {e}")))?,
        None => file_weight.unwrap_or_else(scalar::one),
    };
    Ok(RBOperator::new(m, w))
}

pub fn verify_rb_cmd(n: &str, op: &str, weight: Option<&str>) -> CliResult<Outcome> {
    let n = input::load_algebra(n)?;
    let r = operator(op, weight)?;
    let ok = verify_rb(&r, &n)?;
    let w = scalar::format(r.weight());
    let mut text = format!(
        "Rota-Baxter identity of weight {w}: {}\n",
        if ok { "holds" } else { "fails" }
    );
    let mut j = json!({"weight": w, "rota_baxter": ok});
    if ok && *r.weight() == scalar::one() {
        let (k0, k1) = rb_kernels(&r, &n)?;
        text.push_str(&format!(
            "ker R = {}\nker(R+id) = {}\n",
            one_based(&k0),
            one_based(&k1)
        ));
        j["ker_r"] = subspace_json(&k0);
        j["ker_r_plus_id"] = subspace_json(&k1);
    }
    Ok(Outcome::new(if ok { OK } else { NEGATIVE }, text, j))
}

pub fn verify_embedding_cmd(g: &str, n: &str, phi: &str) -> CliResult<Outcome> {
    let (g, n) = (input::load_algebra(g)?, input::load_algebra(n)?);
    let (j1, j2) = input::load_embedding(phi)?;
    let report = match embedding_report(&DoubleEmbedding { j1, j2 }, &g, &n) {
        Err(Error::NotSemisimple) => {
            return Ok(Outcome::new(
                UNKNOWN,
                "criterion needs a semisimple n; not applicable\n".into(),
                json!({"applicable": false}),
            ))
        }
        other => other?,
    };
    let text = format!(
        "homomorphism: {}\ninjective: {}\nj1 - j2 bijective: {}\n",
        yes_no(report.homomorphism),
        yes_no(report.injective),
        yes_no(report.difference_bijective)
    );
    let j = json!({
        "applicable": true,
        "homomorphism": report.homomorphism,
        "injective": report.injective,
        "difference_bijective": report.difference_bijective,
        "holds": report.holds(),
    });
    Ok(Outcome::new(
        if report.holds() { OK } else { NEGATIVE },
        text,
        j,
    ))
}

pub fn derive_pa_from_rb(
    n: &str,
    op: &str,
    weight: Option<&str>,
    out: Option<&str>,
) -> CliResult<Outcome> {
    let n = input::load_algebra(n)?;
    let r = operator(op, weight)?;
    let p = match pa_from_rb(&r, &n) {
        Ok(p) => p,
        Err(e @ (Error::UnverifiedOperator | Error::WeightNotOne(_))) => {
            return Ok(Outcome::new(
                NEGATIVE,
                format!("{e}\n"),
                json!({"error": e.to_string()}),
            ))
        }
        Err(e) => return Err(e.into()),
    };
    let doc = interchange::product_to_document(p.tensor());
    emit_document(doc, out)
}

fn emit_document(doc: interchange::InterchangeDocument, out: Option<&str>) -> CliResult<Outcome> {
    let body = interchange::to_json(&doc);
    let text = match out {
        Some(path) => {
            input::write_or_print(Some(path), &body)?;
            format!("wrote {path}\n")
        }
        None => body,
    };
    Ok(Outcome::new(
        OK,
        text,
        serde_json::to_value(doc).expect("serializable"),
    ))
}

pub fn derive_induced(n: &str, prod: &str, out: Option<&str>) -> CliResult<Outcome> {
    let n = input::load_algebra(n)?;
    let p = input::load_product(prod)?;
    let ind = induced_bracket(&p, &n)?;
    match ind.algebra {
        Some(g) => {
            let mut o = emit_document(interchange::algebra_to_document(&g), out)?;
            let ids = catalog::identify(&g);
            if !ids.is_empty() && out.is_some() {
                o.text
                    .push_str(&format!("fingerprint matches: {}\n", ids.join(", ")));
            }
            Ok(o)
        }
        None => {
            let v = postlie::algebra::jacobi_residual(&ind.tensor)
                .first_violation()
                .expect("non-Lie");
            let idx = [v.0 + 1, v.1 + 1, v.2 + 1];
            Ok(Outcome::new(
                NEGATIVE,
                format!(
                    "induced bracket is not a Lie bracket: Jacobi fails for (e{}, e{}, e{})\n",
                    idx[0], idx[1], idx[2]
                ),
                json!({"jacobi": false, "violation": idx}),
            ))
        }
    }
}

pub fn derive_rb_from_decomposition(
    n: &str,
    n1: &str,
    n2: &str,
    out: Option<&str>,
) -> CliResult<Outcome> {
    let n = input::load_algebra(n)?;
    let d = n.dim();
    let s1 = Subspace::coordinate(d, &input::parse_indices(n1, d)?);
    let s2 = Subspace::coordinate(d, &input::parse_indices(n2, d)?);
    match rb_from_decomposition(&n, &s1, &s2) {
        Ok(r) => emit_document(
            interchange::operator_to_document(r.matrix(), Some(r.weight())),
            out,
        ),
        Err(e @ (Error::NotSubalgebra | Error::NotComplementary)) => Ok(Outcome::new(
            NEGATIVE,
            format!("{e}\n"),
            json!({"error": e.to_string()}),
        )),
        Err(e) => Err(e.into()),
    }
}

fn certificate_outcome(cert: &Certificate) -> Outcome {
    let mut text = String::new();
    let mut j = json!({"verdict": cert.verdict.label(), "trace": cert.trace});
    let code = match &cert.verdict {
        Verdict::ExistsWitness(w) => {
            text.push_str(&format!("exists (strategy {})\n", w.strategy.as_str()));
            let doc = interchange::product_to_document(w.product.tensor());
            j["strategy"] = json!(w.strategy.as_str());
            j["matching"] = json!(format!("{:?}", w.matching).to_lowercase());
            j["product"] = serde_json::to_value(&doc).expect("serializable");
            if let Some(r) = &w.operator {
                j["operator"] = serde_json::to_value(interchange::operator_to_document(
                    r.matrix(),
                    Some(r.weight()),
                ))
                .expect("serializable");
            }
            if w.matching == postlie::postlie::WitnessMatch::Fingerprint {
                text.push_str("witness g matches the requested g by fingerprint only\n");
                j["witness_g"] = serde_json::to_value(interchange::algebra_to_document(&w.g))
                    .expect("serializable");
            }
            text.push_str("product:\n");
            for (a, b, c, v) in w.product.tensor().nonzero_entries() {
                text.push_str(&format!(
                    "  e{}.e{} has {} at e{}\n",
                    a + 1,
                    b + 1,
                    scalar::format(v),
                    c + 1
                ));
            }
            OK
        }
        Verdict::NotExists { rule, citation } => {
            text.push_str(&format!("not-exists: {rule}\n{citation}\n"));
            j["rule"] = json!(rule);
            j["citation"] = json!(citation);
            NEGATIVE
        }
        Verdict::Unknown { reason } => {
            text.push_str(&format!("unknown: {reason}\n"));
            j["reason"] = json!(reason);
            UNKNOWN
        }
    };
    text.push_str("trace:\n");
    for t in &cert.trace {
        text.push_str(&format!("  {t}\n"));
    }
    Outcome::new(code, text, j)
}

pub fn search_pa(g: &str, n: &str, grid_height: u32, budget: u64) -> CliResult<Outcome> {
    let (g, n) = (input::load_algebra(g)?, input::load_algebra(n)?);
    let opts = SearchOptions {
        grid_height,
        budget,
        ..SearchOptions::default()
    };
    Ok(certificate_outcome(&pa_search(&g, &n, &opts)?))
}

pub fn rules(g: &str, n: &str) -> CliResult<Outcome> {
    let (g, n): (LieAlgebra, LieAlgebra) = (input::load_algebra(g)?, input::load_algebra(n)?);
    Ok(certificate_outcome(&nonexistence_certificate(&g, &n)?))
}

pub fn table() -> CliResult<Outcome> {
    let t = existence_table()?;
    let cells: Vec<Value> = t
        .cells
        .iter()
        .map(|c| {
            let mut v = json!({
                "g": c.g.short(),
                "n": c.n.short(),
                "published": c.mark.symbol(),
                "status": c.status.label(),
                "annotation": c.annotation(),
                "notes": c.notes,
            });
            match &c.status {
                CellStatus::Witness { id, witness } => {
                    v["witness"] = json!(id);
                    v["dim"] = json!(witness.g.dim());
                }
                CellStatus::NotExists { rule, scope } => {
                    v["rule"] = json!(rule);
                    v["scope"] = json!(format!("{scope:?}").to_lowercase());
                }
                CellStatus::Unknown { reason } => v["reason"] = json!(reason),
            }
            if let Some(r) = &c.representative {
                v["representative"] = json!({"g": r.g, "n": r.n, "fired": r.fired});
            }
            v
        })
        .collect();
    Ok(Outcome::new(OK, t.render(), json!({ "cells": cells })))
}
