//! The 8x8 existence table for post-Lie structures on pairs `(g, n)` sorted
//! by structural class.
//!
//! Checkmark cells are backed by explicit products that are re-verified on
//! every call; dash cells cite a rule whose hypotheses cover the class pair
//! and are confirmed on a representative pair where one exists.

use std::fmt::Write as _;

use crate::algebra::{sl3, LieAlgebra};
use crate::catalog;
use crate::constructions::direct_sum;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::postlie::certificate::{Strategy, Witness, WitnessMatch};
use crate::postlie::fixtures::{self, Fixture};
use crate::postlie::product::{induced_bracket, PAProduct};
use crate::postlie::rota_baxter::{pa_from_rb, rb_from_decomposition};
use crate::postlie::rules::{certificate_from_profiles, rule, Profile};
use crate::scalar::{int, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraClass {
    Abelian,
    /// Nilpotent, not abelian.
    Nilpotent,
    /// Solvable, not nilpotent.
    Solvable,
    Simple,
    /// Semisimple, not simple.
    Semisimple,
    /// Reductive, neither semisimple nor abelian.
    Reductive,
    /// Complete, not perfect.
    Complete,
    /// Perfect, not semisimple.
    Perfect,
}

impl AlgebraClass {
    pub const ALL: [AlgebraClass; 8] = [
        AlgebraClass::Abelian,
        AlgebraClass::Nilpotent,
        AlgebraClass::Solvable,
        AlgebraClass::Simple,
        AlgebraClass::Semisimple,
        AlgebraClass::Reductive,
        AlgebraClass::Complete,
        AlgebraClass::Perfect,
    ];

    pub fn short(self) -> &'static str {
        match self {
            AlgebraClass::Abelian => "abe",
            AlgebraClass::Nilpotent => "nil",
            AlgebraClass::Solvable => "sol",
            AlgebraClass::Simple => "sim",
            AlgebraClass::Semisimple => "sem",
            AlgebraClass::Reductive => "red",
            AlgebraClass::Complete => "com",
            AlgebraClass::Perfect => "per",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraClass::Abelian => "abelian",
            AlgebraClass::Nilpotent => "nilpotent non-abelian",
            AlgebraClass::Solvable => "solvable non-nilpotent",
            AlgebraClass::Simple => "simple",
            AlgebraClass::Semisimple => "semisimple non-simple",
            AlgebraClass::Reductive => "reductive non-semisimple",
            AlgebraClass::Complete => "complete non-perfect",
            AlgebraClass::Perfect => "perfect non-semisimple",
        }
    }

    pub fn from_short(s: &str) -> Option<AlgebraClass> {
        Self::ALL.into_iter().find(|c| c.short() == s)
    }

    /// Classes overlap: `r2` is both solvable non-nilpotent and complete.
    pub fn contains(self, p: &Profile) -> bool {
        match self {
            AlgebraClass::Abelian => p.abelian,
            AlgebraClass::Nilpotent => p.nilpotent && !p.abelian,
            AlgebraClass::Solvable => p.solvable && !p.nilpotent,
            AlgebraClass::Simple => p.simple,
            AlgebraClass::Semisimple => p.semisimple && !p.simple,
            AlgebraClass::Reductive => p.reductive && !p.semisimple && !p.abelian,
            AlgebraClass::Complete => p.complete && !p.perfect,
            AlgebraClass::Perfect => p.perfect && !p.semisimple,
        }
    }

    fn index(self) -> usize {
        Self::ALL.iter().position(|c| *c == self).expect("listed")
    }
}

/// Classes whose members are all perfect.
const PERFECT_CLASSES: [AlgebraClass; 3] = [
    AlgebraClass::Simple,
    AlgebraClass::Semisimple,
    AlgebraClass::Perfect,
];

/// Published entry of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectedMark {
    Check,
    Dash,
    Open,
}

impl ExpectedMark {
    pub fn symbol(self) -> &'static str {
        match self {
            ExpectedMark::Check => "✓",
            ExpectedMark::Dash => "−",
            ExpectedMark::Open => "?",
        }
    }
}

// Rows are g, columns are n, both in `AlgebraClass::ALL` order.
const MARKS: [&str; 8] = [
    "YYYNNNYN", "YYYNNNYN", "YYYYYYYY", "NNNYNNNN", "NNNNYNNN", "YYYN?YYY", "YYYYYYYY", "N?N??YNY",
];

pub fn expected_mark(g: AlgebraClass, n: AlgebraClass) -> ExpectedMark {
    match MARKS[g.index()].as_bytes()[n.index()] {
        b'Y' => ExpectedMark::Check,
        b'N' => ExpectedMark::Dash,
        _ => ExpectedMark::Open,
    }
}

/// Scope of a non-existence verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleScope {
    /// The rule's hypotheses hold for every pair in the cell.
    Class,
    /// The rule only fired on the representative pair.
    Representative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellStatus {
    Witness {
        id: &'static str,
        witness: Box<Witness>,
    },
    NotExists {
        rule: &'static str,
        scope: RuleScope,
    },
    Unknown {
        reason: String,
    },
}

impl CellStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CellStatus::Witness { .. } => "exists",
            CellStatus::NotExists { .. } => "not-exists",
            CellStatus::Unknown { .. } => "unknown",
        }
    }
}

/// A representative pair for a cell and the outcome of the rule engine on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub g: String,
    pub n: String,
    pub fired: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub g: AlgebraClass,
    pub n: AlgebraClass,
    pub mark: ExpectedMark,
    pub status: CellStatus,
    pub representative: Option<Representative>,
    pub notes: Vec<String>,
}

impl Cell {
    /// Short annotation such as `✓ zero:sl2`, `− R1` or `?`.
    pub fn annotation(&self) -> String {
        match &self.status {
            CellStatus::Witness { id, .. } => format!("✓ {id}"),
            CellStatus::NotExists {
                rule,
                scope: RuleScope::Class,
            } => format!("− {rule}"),
            CellStatus::NotExists {
                rule,
                scope: RuleScope::Representative,
            } => format!("− {rule}*"),
            CellStatus::Unknown { .. } => "?".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceTable {
    pub cells: Vec<Cell>,
}

impl ExistenceTable {
    pub fn cell(&self, g: AlgebraClass, n: AlgebraClass) -> &Cell {
        &self.cells[g.index() * 8 + n.index()]
    }

    pub fn render(&self) -> String {
        let width = self
            .cells
            .iter()
            .map(|c| c.annotation().chars().count())
            .max()
            .unwrap_or(1)
            .max(3);
        let mut out = String::new();
        let _ = write!(out, "{:<5}", "g\\n");
        for c in AlgebraClass::ALL {
            let _ = write!(out, " | {:<width$}", c.short());
        }
        out.push('\n');
        for g in AlgebraClass::ALL {
            let _ = write!(out, "{:<5}", g.short());
            for n in AlgebraClass::ALL {
                let _ = write!(out, " | {:<width$}", self.cell(g, n).annotation());
            }
            out.push('\n');
        }
        out.push('\n');
        for c in AlgebraClass::ALL {
            let _ = writeln!(out, "{} = {}", c.short(), c.name());
        }
        out.push_str("* rule verified on the representative pair only\n");
        out
    }
}

/// The class-wide rule whose hypotheses hold on the whole cell, if any.
pub fn covering_rule(g: AlgebraClass, n: AlgebraClass) -> Option<&'static str> {
    use AlgebraClass::*;
    let perfect_g = PERFECT_CLASSES.contains(&g);
    let perfect_n = PERFECT_CLASSES.contains(&n);
    let id = match (g, n) {
        _ if perfect_g && n == Abelian => "R1",
        _ if perfect_g && n == Solvable => "R3",
        _ if perfect_g && n == Complete => "R5",
        (Abelian, _) if perfect_n => "R6",
        (Nilpotent, _) if perfect_n => "R7",
        (Simple | Semisimple, Perfect) => "R8",
        _ => return None,
    };
    debug_assert!(rule(id).is_some_and(|r| r.class_wide));
    Some(id)
}

struct Built {
    id: &'static str,
    g: LieAlgebra,
    n: LieAlgebra,
    product: PAProduct,
    decomposition: Option<(Subspace, Subspace)>,
    operator: Option<crate::postlie::rota_baxter::RBOperator>,
}

fn cat(id: &str) -> LieAlgebra {
    catalog::build(id).expect("catalog entry")
}

fn zero(id: &'static str, alg: &str) -> Built {
    let a = cat(alg);
    Built {
        id,
        product: PAProduct::zero(a.dim()),
        g: a.clone(),
        n: a,
        decomposition: None,
        operator: None,
    }
}

fn from_fixture(f: Fixture) -> Built {
    Built {
        id: f.id,
        g: f.g,
        n: f.n,
        product: f.product,
        decomposition: None,
        operator: f.operator,
    }
}

/// Product `{R x, y}` for `R = -(projection onto n2 along n1)`, with `g`
/// the induced algebra.
fn split(id: &'static str, n: LieAlgebra, n1: Subspace, n2: Subspace) -> Built {
    let r = rb_from_decomposition(&n, &n1, &n2).expect("decomposition");
    let product = pa_from_rb(&r, &n).expect("verified operator");
    let g = induced_bracket(&product, &n)
        .expect("dim")
        .algebra
        .expect("Lie");
    Built {
        id,
        g,
        n,
        product,
        decomposition: Some((n1, n2)),
        operator: Some(r),
    }
}

/// Coordinate split with `n2` spanned by the basis vectors in `mask`.
fn coordinate_split(id: &'static str, alg: &str, mask: &[usize]) -> Built {
    let n = cat(alg);
    let d = n.dim();
    let rest: Vec<usize> = (0..d).filter(|i| !mask.contains(i)).collect();
    split(
        id,
        n,
        Subspace::coordinate(d, &rest),
        Subspace::coordinate(d, mask),
    )
}

fn table_product(
    id: &'static str,
    g: &str,
    n: &str,
    entries: &[(usize, usize, usize, i64)],
) -> Built {
    let (g, n) = (cat(g), cat(n));
    let product = PAProduct::from_table(g.dim(), entries).expect("table");
    Built {
        id,
        g,
        n,
        product,
        decomposition: None,
        operator: None,
    }
}

fn sum(id: &'static str, a: Built, b: Built) -> Built {
    Built {
        id,
        g: direct_sum(&a.g, &b.g),
        n: direct_sum(&a.n, &b.n),
        product: a.product.direct_sum(&b.product),
        decomposition: None,
        operator: None,
    }
}

fn e(i: usize, j: usize) -> Matrix {
    Matrix::from_fn(2, 2, |r, c| if (r, c) == (i, j) { int(1) } else { int(0) })
}

/// `g = gl2`, `n` abelian, `x . y = xy` (matrix product).
fn gl2_matrix_product() -> Built {
    let basis = [e(0, 0), e(0, 1), e(1, 0), e(1, 1)];
    let g = LieAlgebra::from_matrix_basis(&basis)
        .expect("gl2")
        .with_name("gl2");
    let coords = |m: &Matrix| -> Vec<Scalar> { m.entries().to_vec() };
    let mut entries = Vec::new();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            for (k, c) in coords(&a.mul(b)).into_iter().enumerate() {
                if c != int(0) {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    let product = PAProduct::new(crate::tensor::Tensor3::from_entries(4, entries));
    Built {
        id: "matrix:gl2",
        g,
        n: LieAlgebra::abelian(4),
        product,
        decomposition: None,
        operator: None,
    }
}

fn abelian_on_n3() -> Built {
    coordinate_split("split:n3", "n3", &[0])
}

fn solvable_on_abelian() -> Built {
    table_product("lsa:r2", "r2", "abelian_2", &[(2, 1, 1, -1)])
}

fn abelian_on_r2() -> Built {
    coordinate_split("split:r2", "r2", &[0])
}

/// Upper triangular `sl3` split into strictly upper triangular and diagonal parts.
fn nilpotent_on_borel() -> Built {
    let n = cat("b3");
    split(
        "split:b3",
        n,
        Subspace::coordinate(5, &[0, 1, 2]),
        Subspace::coordinate(5, &[3, 4]),
    )
}

/// `sl3` = maximal parabolic + 2-dimensional complement `span{e5, e6 - e8}`.
fn complete_on_sl3() -> Built {
    let n = sl3();
    let mut v = vec![int(0); 8];
    v[5] = int(1);
    v[7] = int(-1);
    let n2 = Subspace::span(
        8,
        [Subspace::coordinate(8, &[4]).basis().row(0).to_vec(), v],
    )
    .expect("span");
    split(
        "split:sl3",
        n,
        Subspace::coordinate(8, &[0, 1, 2, 3, 6, 7]),
        n2,
    )
}

/// `sl2 + sl2` as `span{e1,e3,e4,e6}` + `span{e2+e6, e5}`; the induced algebra is `r2+r2+r2`.
fn complete_on_sl2_sl2() -> Built {
    let n = cat("sl2_sl2");
    let mut v = vec![int(0); 6];
    v[1] = int(1);
    v[5] = int(1);
    let mut w = vec![int(0); 6];
    w[4] = int(1);
    let n2 = Subspace::span(6, [v, w]).expect("span");
    split(
        "split:sl2+sl2",
        n,
        Subspace::coordinate(6, &[0, 2, 3, 5]),
        n2,
    )
}

fn registered(g: AlgebraClass, n: AlgebraClass) -> Option<Built> {
    use AlgebraClass::*;
    Some(match (g, n) {
        (Abelian, Abelian) => zero("zero:abelian_2", "abelian_2"),
        (Abelian, Nilpotent) => abelian_on_n3(),
        (Abelian, Solvable) | (Abelian, Complete) => abelian_on_r2(),

        (Nilpotent, Abelian) => table_product("heis:n3", "n3", "abelian_3", &[(1, 2, 3, 1)]),
        (Nilpotent, Nilpotent) => zero("zero:n3", "n3"),
        (Nilpotent, Solvable) => coordinate_split("split:n3_r2", "n3_r2", &[3]),
        (Nilpotent, Complete) => nilpotent_on_borel(),

        (Solvable, Abelian) | (Complete, Abelian) => solvable_on_abelian(),
        (Solvable, Nilpotent) => sum("sum:lsa+n3", solvable_on_abelian(), abelian_on_n3()),
        (Solvable, Solvable) => zero("zero:n3_r2", "n3_r2"),
        (Solvable, Simple) => coordinate_split("split:sl2", "sl2", &[0]),
        (Solvable, Semisimple) => coordinate_split("split:sl2_sl2", "sl2_sl2", &[0, 3]),
        (Solvable, Reductive) => coordinate_split("split:sl2_c1", "sl2_c1", &[0]),
        (Solvable, Complete) => coordinate_split("split:sl2_r2/1", "sl2_r2", &[0]),
        (Solvable, Perfect) => from_fixture(fixtures::solvable_on_perfect()),

        (Simple, Simple) => zero("zero:sl2", "sl2"),
        (Semisimple, Semisimple) => zero("zero:sl2_sl2", "sl2_sl2"),

        (Reductive, Abelian) => gl2_matrix_product(),
        (Reductive, Nilpotent) => sum("sum:gl2+n3", gl2_matrix_product(), abelian_on_n3()),
        (Reductive, Solvable) => sum("sum:gl2+r2", gl2_matrix_product(), abelian_on_r2()),
        (Reductive, Reductive) => zero("zero:sl2_c1", "sl2_c1"),
        (Reductive, Complete) => coordinate_split("split:sl2_r2/4", "sl2_r2", &[3]),
        (Reductive, Perfect) => from_fixture(fixtures::reductive_on_perfect()),

        (Complete, Nilpotent) => table_product(
            "grid:r2_r2",
            "r2_r2",
            "n3_c1",
            &[
                (2, 1, 1, -1),
                (2, 1, 3, 1),
                (2, 2, 4, 1),
                (2, 3, 3, -1),
                (2, 4, 4, -1),
                (3, 2, 3, -1),
                (3, 4, 3, 1),
                (4, 2, 4, -1),
                (4, 4, 4, 1),
            ],
        ),
        (Complete, Solvable) => zero("zero:r2", "r2"),
        (Complete, Simple) => complete_on_sl3(),
        (Complete, Semisimple) => complete_on_sl2_sl2(),
        (Complete, Reductive) => table_product("grid:sl2_r2", "sl2_r2", "sl2_c2", &[(5, 4, 4, -1)]),
        (Complete, Complete) => zero("zero:sl2_r2", "sl2_r2"),
        (Complete, Perfect) => from_fixture(fixtures::complete_on_perfect()),

        (Perfect, Reductive) => from_fixture(fixtures::perfect_on_reductive()),
        (Perfect, Perfect) => zero("zero:L5_1", "L5_1"),
        _ => return None,
    })
}

/// Pairs of equal dimension used to exercise the rule engine on dash and
/// open cells. Names are catalog ids or `+`-joined direct sums of them.
fn representative(g: AlgebraClass, n: AlgebraClass) -> Option<(&'static str, &'static str)> {
    use AlgebraClass::*;
    Some(match (g, n) {
        (Abelian, Simple) => ("abelian_3", "sl2"),
        (Abelian, Semisimple) => ("abelian_6", "sl2_sl2"),
        (Abelian, Reductive) => ("abelian_4", "sl2_c1"),
        (Abelian, Perfect) => ("abelian_5", "L5_1"),
        (Nilpotent, Simple) => ("n3", "sl2"),
        (Nilpotent, Semisimple) => ("n3_c3", "sl2_sl2"),
        (Nilpotent, Reductive) => ("n3_c1", "sl2_c1"),
        (Nilpotent, Perfect) => ("n5", "L5_1"),
        (Simple, Abelian) => ("sl2", "abelian_3"),
        (Simple, Nilpotent) => ("sl2", "n3"),
        (Simple, Solvable) => ("sl2", "r2_c1"),
        (Simple, Reductive) => ("sl3", "sl2_sl2+abelian_2"),
        (Simple, Complete) => ("sl3", "sl2+b3"),
        (Simple, Perfect) => ("sl3", "L8_21"),
        (Semisimple, Abelian) => ("sl2_sl2", "abelian_6"),
        (Semisimple, Nilpotent) => ("sl2_sl2", "n3_c3"),
        (Semisimple, Solvable) => ("sl2_sl2", "r2_r2_r2"),
        (Semisimple, Reductive) => ("sl2_sl2_sl2", "sl3_c1"),
        (Semisimple, Complete) => ("sl2_sl2_sl2", "sl2+r2_r2_r2"),
        (Semisimple, Perfect) => ("sl2_sl2_sl2", "L9_59"),
        (Reductive, Simple) => ("sl2_sl2+abelian_2", "sl3"),
        (Reductive, Semisimple) => ("sl2_sl2+abelian_3", "sl2_sl2_sl2"),
        (Perfect, Abelian) => ("L5_1", "abelian_5"),
        (Perfect, Nilpotent) => ("L5_1", "f23"),
        (Perfect, Solvable) => ("L5_1", "n3_r2"),
        (Perfect, Simple) => ("L8_21", "sl3"),
        (Perfect, Semisimple) => ("L6_4", "sl2_sl2"),
        (Perfect, Complete) => ("L5_1", "sl2_r2"),
        _ => return None,
    })
}

/// Builds a `+`-joined direct sum of catalog algebras.
fn build_sum(desc: &str) -> LieAlgebra {
    let mut parts = desc.split('+').map(cat);
    let first = parts.next().expect("nonempty");
    parts.fold(first, |acc, p| direct_sum(&acc, &p))
}

fn rule_on(g: &str, n: &str) -> (Profile, Profile, Option<&'static str>) {
    let (pg, pn) = (Profile::of(&build_sum(g)), Profile::of(&build_sum(n)));
    let cert = certificate_from_profiles(&pg, &pn);
    let fired = cert.rule().and_then(rule).map(|r| r.id);
    (pg, pn, fired)
}

fn witness_cell(g: AlgebraClass, n: AlgebraClass, b: Built) -> (CellStatus, Vec<String>) {
    let mut notes = Vec::new();
    let witness = Witness {
        product: b.product,
        g: b.g,
        n: b.n,
        strategy: Strategy::Registered,
        matching: WitnessMatch::Exact,
        operator: b.operator,
        decomposition: b.decomposition,
    };
    if !witness.reverify().unwrap_or(false) {
        return (
            CellStatus::Unknown {
                reason: format!("registered product {} fails verification", b.id),
            },
            notes,
        );
    }
    let (pg, pn) = (Profile::of(&witness.g), Profile::of(&witness.n));
    if !g.contains(&pg) || !n.contains(&pn) {
        return (
            CellStatus::Unknown {
                reason: format!("registered pair {} is not in the cell", b.id),
            },
            notes,
        );
    }
    notes.push(format!("dim {}", witness.g.dim()));
    (
        CellStatus::Witness {
            id: b.id,
            witness: Box::new(witness),
        },
        notes,
    )
}

fn rule_cell(
    g: AlgebraClass,
    n: AlgebraClass,
    mark: ExpectedMark,
) -> (CellStatus, Option<Representative>, Vec<String>) {
    let mut notes = Vec::new();
    let rep = representative(g, n).map(|(gid, nid)| {
        let (pg, pn, fired) = rule_on(gid, nid);
        if !g.contains(&pg) || !n.contains(&pn) {
            notes.push(format!("representative ({gid}, {nid}) is not in the cell"));
        }
        Representative {
            g: gid.into(),
            n: nid.into(),
            fired,
        }
    });
    if rep.is_none() {
        notes.push("no representative pair of equal dimension in the catalog".into());
    }
    if mark == ExpectedMark::Open {
        if let Some(id) = rep.as_ref().and_then(|r| r.fired) {
            notes.push(format!("{id} fires on the representative pair only"));
        }
        return (
            CellStatus::Unknown {
                reason: "open".into(),
            },
            rep,
            notes,
        );
    }
    if let Some(id) = covering_rule(g, n) {
        return (
            CellStatus::NotExists {
                rule: id,
                scope: RuleScope::Class,
            },
            rep,
            notes,
        );
    }
    match rep.as_ref().and_then(|r| r.fired) {
        Some(id) => (
            CellStatus::NotExists {
                rule: id,
                scope: RuleScope::Representative,
            },
            rep,
            notes,
        ),
        None => (
            CellStatus::Unknown {
                reason: "no rule applies".into(),
            },
            rep,
            notes,
        ),
    }
}

/// Computes every cell. Witnesses are re-verified and their classes
/// recomputed; nothing is taken from stored data.
pub fn existence_table() -> Result<ExistenceTable> {
    let mut cells = Vec::with_capacity(64);
    for g in AlgebraClass::ALL {
        for n in AlgebraClass::ALL {
            let mark = expected_mark(g, n);
            let (status, representative, notes) = match registered(g, n) {
                Some(b) => {
                    let (s, notes) = witness_cell(g, n, b);
                    (s, None, notes)
                }
                None => rule_cell(g, n, mark),
            };
            cells.push(Cell {
                g,
                n,
                mark,
                status,
                representative,
                notes,
            });
        }
    }
    Ok(ExistenceTable { cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_shape() {
        let opens: Vec<_> = AlgebraClass::ALL
            .iter()
            .flat_map(|&g| AlgebraClass::ALL.iter().map(move |&n| (g, n)))
            .filter(|&(g, n)| expected_mark(g, n) == ExpectedMark::Open)
            .collect();
        assert_eq!(opens.len(), 4);
        assert_eq!(
            expected_mark(AlgebraClass::Perfect, AlgebraClass::Abelian),
            ExpectedMark::Dash
        );
    }

    #[test]
    fn covering_rules() {
        use AlgebraClass::*;
        assert_eq!(covering_rule(Perfect, Abelian), Some("R1"));
        assert_eq!(covering_rule(Abelian, Semisimple), Some("R6"));
        assert_eq!(covering_rule(Simple, Perfect), Some("R8"));
        assert_eq!(covering_rule(Perfect, Nilpotent), None);
    }
}
