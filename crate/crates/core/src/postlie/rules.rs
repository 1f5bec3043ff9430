//! Non-existence rules. Each rule states sufficient structural conditions
//! on `(g, n)` under which no post-Lie structure exists; every condition is
//! computed from the structure constants.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::postlie::certificate::{Certificate, Verdict};
use crate::representation;
use crate::subspace::Subspace;

/// Structural facts about one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub dim: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub two_step_nilpotent: bool,
    pub solvable: bool,
    pub perfect: bool,
    pub semisimple: bool,
    pub simple: bool,
    pub reductive: bool,
    pub complete: bool,
    pub center_dim: usize,
    pub centroid_dim: usize,
    /// `g = s x| V` with `s` simple and `V` a nonzero abelian radical that is
    /// absolutely irreducible under `g`.
    pub simple_levi_irreducible_radical: bool,
}

impl Profile {
    pub fn of(g: &LieAlgebra) -> Profile {
        let semisimple = g.is_semisimple();
        Profile {
            dim: g.dim(),
            abelian: g.is_abelian(),
            nilpotent: g.is_nilpotent(),
            two_step_nilpotent: g.is_two_step_nilpotent(),
            solvable: g.is_solvable(),
            perfect: g.is_perfect(),
            semisimple,
            simple: g.is_simple(),
            reductive: g.is_reductive(),
            complete: g.is_complete(),
            center_dim: g.center().dim(),
            centroid_dim: if semisimple { g.centroid_dim() } else { 0 },
            simple_levi_irreducible_radical: simple_levi_irreducible_radical(g),
        }
    }
}

fn simple_levi_irreducible_radical(g: &LieAlgebra) -> bool {
    let rad = g.solvable_radical();
    if rad.is_zero() || rad.is_full() {
        return false;
    }
    let Ok(r) = g.restrict(&rad) else {
        return false;
    };
    if !r.is_abelian() {
        return false;
    }
    if !g.quotient(&rad).is_ok_and(|q| q.is_simple()) {
        return false;
    }
    match restricted_adjoint(g, &rad) {
        Some(mats) => representation::is_absolutely_irreducible(&mats, rad.dim()),
        None => false,
    }
}

/// Matrices of `ad(e_i)` restricted to an ideal, in the ideal's basis.
fn restricted_adjoint(g: &LieAlgebra, ideal: &Subspace) -> Option<Vec<Matrix>> {
    let basis: Vec<Vec<_>> = ideal.basis_vectors().map(<[_]>::to_vec).collect();
    let m = basis.len();
    let mut out = Vec::with_capacity(g.dim());
    for i in 0..g.dim() {
        let ad = g.ad(i);
        let mut cols = Vec::with_capacity(m);
        for b in &basis {
            cols.push(ideal.coordinates(&ad.mul_vec(b))?);
        }
        out.push(Matrix::from_fn(m, m, |r, c| cols[c][r].clone()));
    }
    Some(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rule {
    pub id: &'static str,
    pub citation: &'static str,
    /// The hypotheses are exactly membership of `g` and `n` in classes of
    /// the existence table, so the rule decides a whole cell.
    pub class_wide: bool,
}

pub const RULES: [Rule; 12] = [
    Rule { id: "R1", citation: "no post-Lie structure exists when g is perfect and n is abelian", class_wide: true },
    Rule { id: "R2", citation: "no post-Lie structure exists when g is perfect and n is 2-step nilpotent", class_wide: false },
    Rule {
        id: "R3",
        citation: "no post-Lie structure exists when g is perfect and n is solvable non-nilpotent",
        class_wide: true,
    },
    Rule {
        id: "R4",
        citation: "no post-Lie structure exists when g is perfect and n is reductive with a 1-dimensional center",
        class_wide: false,
    },
    Rule { id: "R5", citation: "no post-Lie structure exists when g is perfect and n is complete non-perfect", class_wide: true },
    Rule { id: "R6", citation: "no post-Lie structure exists when g is abelian and n is perfect", class_wide: true },
    Rule {
        id: "R7",
        citation: "no post-Lie structure exists when g is nilpotent non-abelian and n is perfect",
        class_wide: true,
    },
    Rule {
        id: "R8",
        citation: "no post-Lie structure exists when g is semisimple and n is perfect non-semisimple",
        class_wide: true,
    },
    Rule { id: "R9", citation: "no post-Lie structure exists when g is perfect non-semisimple and n = sl3", class_wide: false },
    Rule {
        id: "R10",
        citation: "no post-Lie structure exists when g is perfect non-semisimple and n = sl2 + sl2",
        class_wide: false,
    },
    Rule {
        id: "R11",
        citation: "no post-Lie structure exists when g = s x| V with s simple and V an irreducible abelian s-module, and n is semisimple",
        class_wide: false,
    },
    Rule {
        id: "R12",
        citation: "no post-Lie structure exists when g is sl2 x| V(2), sl2 x| V(3) or sl2 x| n3 and n is nilpotent",
        class_wide: false,
    },
];

pub fn rule(id: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.id == id)
}

/// Named hypotheses of a rule evaluated on the pair.
pub fn conditions(rule: &Rule, g: &Profile, n: &Profile) -> Vec<(&'static str, bool)> {
    let g_per_nss = g.perfect && !g.semisimple;
    match rule.id {
        "R1" => vec![("g perfect", g.perfect), ("n abelian", n.abelian)],
        "R2" => vec![
            ("g perfect", g.perfect),
            ("n 2-step nilpotent", n.two_step_nilpotent),
        ],
        "R3" => vec![
            ("g perfect", g.perfect),
            ("n solvable", n.solvable),
            ("n not nilpotent", !n.nilpotent),
        ],
        "R4" => vec![
            ("g perfect", g.perfect),
            ("n reductive", n.reductive),
            ("dim Z(n) = 1", n.center_dim == 1),
        ],
        "R5" => vec![
            ("g perfect", g.perfect),
            ("n complete", n.complete),
            ("n not perfect", !n.perfect),
        ],
        "R6" => vec![("g abelian", g.abelian), ("n perfect", n.perfect)],
        "R7" => vec![
            ("g nilpotent", g.nilpotent),
            ("g not abelian", !g.abelian),
            ("n perfect", n.perfect),
        ],
        "R8" => vec![
            ("g semisimple", g.semisimple),
            ("n perfect", n.perfect),
            ("n not semisimple", !n.semisimple),
        ],
        "R9" => vec![
            ("g perfect non-semisimple", g_per_nss),
            ("n simple", n.simple),
            ("dim n = 8", n.dim == 8),
        ],
        "R10" => vec![
            ("g perfect non-semisimple", g_per_nss),
            ("n semisimple", n.semisimple),
            ("dim n = 6", n.dim == 6),
            ("n has two simple ideals", n.centroid_dim == 2),
        ],
        "R11" => vec![
            ("g perfect non-semisimple", g_per_nss),
            (
                "g = simple x| irreducible abelian radical",
                g.simple_levi_irreducible_radical,
            ),
            ("n semisimple", n.semisimple),
        ],
        // The perfect non-semisimple algebras of dimension 5 and 6 are
        // exactly the three named in the citation.
        "R12" => vec![
            ("g perfect non-semisimple", g_per_nss),
            ("dim g in {5, 6}", g.dim == 5 || g.dim == 6),
            ("n nilpotent", n.nilpotent),
        ],
        _ => Vec::new(),
    }
}

/// Runs R1..R12 in order; the first rule whose hypotheses all hold decides.
pub fn nonexistence_certificate(g: &LieAlgebra, n: &LieAlgebra) -> Result<Certificate> {
    if g.dim() != n.dim() {
        return Err(Error::DimensionMismatch {
            expected: n.dim(),
            found: g.dim(),
        });
    }
    let pg = Profile::of(g);
    let pn = Profile::of(n);
    Ok(certificate_from_profiles(&pg, &pn))
}

pub fn certificate_from_profiles(pg: &Profile, pn: &Profile) -> Certificate {
    let mut trace = vec![describe("g", pg), describe("n", pn)];
    for r in &RULES {
        let conds = conditions(r, pg, pn);
        let fired = conds.iter().all(|(_, v)| *v);
        let parts: Vec<String> = conds
            .iter()
            .map(|(name, v)| format!("{name}: {v}"))
            .collect();
        trace.push(format!(
            "{}: {} -> {}",
            r.id,
            parts.join(", "),
            if fired { "fires" } else { "no" }
        ));
        if fired {
            return Certificate {
                verdict: Verdict::NotExists {
                    rule: r.id.to_string(),
                    citation: r.citation.to_string(),
                },
                trace,
            };
        }
    }
    Certificate {
        verdict: Verdict::Unknown {
            reason: "no rule applies".into(),
        },
        trace,
    }
}

fn describe(name: &str, p: &Profile) -> String {
    format!(
        "{name}: dim={} abelian={} nilpotent={} 2-step={} solvable={} perfect={} semisimple={} simple={} reductive={} complete={} center={}",
        p.dim,
        p.abelian,
        p.nilpotent,
        p.two_step_nilpotent,
        p.solvable,
        p.perfect,
        p.semisimple,
        p.simple,
        p.reductive,
        p.complete,
        p.center_dim
    )
}
