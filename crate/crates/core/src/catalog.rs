//! Catalog of named Lie algebras: the complex perfect non-semisimple Lie
//! algebras of dimension at most 9 together with the auxiliary algebras
//! used as ingredients and as test partners.
//!
//! Every perfect entry is built as `sl2 x| r` (possibly plus an extra `sl2`
//! summand) with `sl2` on `e1, e2, e3` and the radical on the remaining
//! basis vectors. Ids are stable public names; the perfect entries use the
//! Turkowski label of the row.

use std::path::Path;
use std::sync::OnceLock;

use crate::algebra::{self, LieAlgebra, Metadata};
use crate::constructions::{direct_sum, semidirect_product};
use crate::error::{Error, Result};
use crate::interchange;
use crate::representation::{self, FreeNilpotentPreset, Representation};
use crate::subspace::Subspace;

/// Summands of the radical in an `sl2 x| r` recipe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalPiece {
    /// The abelian irreducible module `V(n)`.
    Module(usize),
    /// Heisenberg `n3 = V(2) + V(1)`, `[e1,e2]=e3`.
    N3,
    /// Free-nilpotent `f_{2,3}` on `V(2)`.
    F23,
    /// Free-nilpotent `f_{3,2}` on `V(3)`.
    F32,
    /// `A_{6,4}`: `[e1,e4]=e5, [e2,e3]=-e5, [e3,e4]=e6` on `V(2)+V(2)+2V(1)`.
    A64,
}

/// Basic named algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ingredient {
    Sl2,
    Sl3,
    N3,
    N5,
    F23,
    F32,
    A64,
    R2,
    /// Upper triangular matrices in `sl3`.
    BorelSl3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    Abelian(usize),
    Named(Ingredient),
    DirectSum(&'static [Recipe]),
    Sl2Semidirect(&'static [RadicalPiece]),
    /// Structure constants must be supplied from an external classification.
    External,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    /// Rows of the classification of perfect non-semisimple algebras of
    /// dimension at most 8.
    PerfectUpTo8,
    /// Rows of the dimension-9 classification.
    PerfectDim9,
    Auxiliary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableSource {
    pub turkowski: &'static str,
    pub alev: Option<&'static str>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub group: Group,
    pub recipe: Recipe,
    pub expected_dim: usize,
    pub expected_center_dim: usize,
    pub expected_perfect: bool,
    pub source: Option<TableSource>,
}

impl CatalogEntry {
    pub fn is_data_incomplete(&self) -> bool {
        self.recipe == Recipe::External
    }
}

#[allow(clippy::too_many_arguments)]
const fn perfect(
    id: &'static str,
    description: &'static str,
    group: Group,
    recipe: Recipe,
    dim: usize,
    center: usize,
    turkowski: &'static str,
    alev: Option<&'static str>,
) -> CatalogEntry {
    CatalogEntry {
        id,
        description,
        group,
        recipe,
        expected_dim: dim,
        expected_center_dim: center,
        expected_perfect: true,
        source: Some(TableSource { turkowski, alev }),
    }
}

const fn aux(
    id: &'static str,
    description: &'static str,
    recipe: Recipe,
    dim: usize,
    center: usize,
    perfect: bool,
) -> CatalogEntry {
    CatalogEntry {
        id,
        description,
        group: Group::Auxiliary,
        recipe,
        expected_dim: dim,
        expected_center_dim: center,
        expected_perfect: perfect,
        source: None,
    }
}

use Group::{PerfectDim9 as D9, PerfectUpTo8 as D8};
use RadicalPiece::{Module as V, A64 as PA64, F23 as PF23, F32 as PF32, N3 as PN3};

const SL2: Recipe = Recipe::Named(Ingredient::Sl2);
const R2: Recipe = Recipe::Named(Ingredient::R2);
const L5_1: Recipe = Recipe::Sl2Semidirect(&[V(2)]);
const L6_1: Recipe = Recipe::Sl2Semidirect(&[V(3)]);
const L6_2: Recipe = Recipe::Sl2Semidirect(&[PN3]);

pub static ENTRIES: &[CatalogEntry] = &[
    perfect("L5_1", "sl2 x| V(2)", D8, L5_1, 5, 0, "L5,1", Some("L5")),
    perfect(
        "L6_4",
        "sl2 x| V(3)",
        D8,
        L6_1,
        6,
        0,
        "L6,4 ~ L6,1",
        Some("L6,1"),
    ),
    perfect("L6_2", "sl2 x| n3", D8, L6_2, 6, 1, "L6,2", Some("L6,3")),
    perfect(
        "L7_6",
        "sl2 x| V(4)",
        D8,
        Recipe::Sl2Semidirect(&[V(4)]),
        7,
        0,
        "L7,6",
        Some("L7,1"),
    ),
    perfect(
        "L7_7",
        "sl2 x| (V(2)+V(2))",
        D8,
        Recipe::Sl2Semidirect(&[V(2), V(2)]),
        7,
        0,
        "L7,7",
        Some("L7,2"),
    ),
    perfect(
        "sl2_L5_1",
        "sl2 + (sl2 x| V(2))",
        D8,
        Recipe::DirectSum(&[SL2, L5_1]),
        8,
        0,
        "sl2+L5,1",
        Some("sl2+L5"),
    ),
    perfect(
        "L8_21",
        "sl2 x| V(5)",
        D8,
        Recipe::Sl2Semidirect(&[V(5)]),
        8,
        0,
        "L8,21",
        Some("L8,1"),
    ),
    perfect(
        "L8_22",
        "sl2 x| (V(2)+V(3))",
        D8,
        Recipe::Sl2Semidirect(&[V(2), V(3)]),
        8,
        0,
        "L8,22",
        Some("L8,2"),
    ),
    perfect(
        "L8_13_0",
        "sl2 x| (V(2)+n3)",
        D8,
        Recipe::Sl2Semidirect(&[V(2), PN3]),
        8,
        1,
        "L8,13 (eps=0)",
        Some("L8,13"),
    ),
    perfect(
        "L8_15",
        "sl2 x| f23",
        D8,
        Recipe::Sl2Semidirect(&[PF23]),
        8,
        0,
        "L8,15",
        Some("L8,18"),
    ),
    perfect(
        "L8_13_1",
        "sl2 x|_phi n5",
        D8,
        Recipe::External,
        8,
        1,
        "L8,13^1 ~ L8,13^-1",
        Some("L8,15"),
    ),
    perfect(
        "L8_19",
        "sl2 x|_psi n5",
        D8,
        Recipe::External,
        8,
        1,
        "L8,19",
        Some("L8,16"),
    ),
    perfect(
        "sl2_L6_1",
        "sl2 + (sl2 x| V(3))",
        D9,
        Recipe::DirectSum(&[SL2, L6_1]),
        9,
        0,
        "sl2+L6,1",
        None,
    ),
    perfect(
        "sl2_L6_2",
        "sl2 + (sl2 x| n3)",
        D9,
        Recipe::DirectSum(&[SL2, L6_2]),
        9,
        1,
        "sl2+L6,2",
        None,
    ),
    perfect(
        "L9_59",
        "sl2 x| V(6)",
        D9,
        Recipe::Sl2Semidirect(&[V(6)]),
        9,
        0,
        "L9,59",
        None,
    ),
    perfect(
        "L9_60",
        "sl2 x| (V(2)+V(4))",
        D9,
        Recipe::Sl2Semidirect(&[V(2), V(4)]),
        9,
        0,
        "L9,60",
        None,
    ),
    perfect(
        "L9_61",
        "sl2 x| (V(3)+V(3))",
        D9,
        Recipe::Sl2Semidirect(&[V(3), V(3)]),
        9,
        0,
        "L9,61",
        None,
    ),
    perfect(
        "L9_63",
        "sl2 x| (V(2)+V(2)+V(2))",
        D9,
        Recipe::Sl2Semidirect(&[V(2), V(2), V(2)]),
        9,
        0,
        "L9,63",
        None,
    ),
    perfect(
        "L9_58",
        "sl2 x| (V(3)+n3)",
        D9,
        Recipe::Sl2Semidirect(&[V(3), PN3]),
        9,
        1,
        "L9,58",
        None,
    ),
    perfect(
        "L9_37",
        "sl2 x| (n3+n3)",
        D9,
        Recipe::Sl2Semidirect(&[PN3, PN3]),
        9,
        2,
        "L9,37 ~ L9,42",
        None,
    ),
    perfect(
        "L9_62",
        "sl2 x| f32",
        D9,
        Recipe::Sl2Semidirect(&[PF32]),
        9,
        0,
        "L9,62",
        None,
    ),
    perfect(
        "L9_41",
        "sl2 x| A64",
        D9,
        Recipe::Sl2Semidirect(&[PA64]),
        9,
        2,
        "L9,41",
        None,
    ),
    aux("abelian_1", "C", Recipe::Abelian(1), 1, 1, false),
    aux("abelian_2", "C^2", Recipe::Abelian(2), 2, 2, false),
    aux("abelian_3", "C^3", Recipe::Abelian(3), 3, 3, false),
    aux("abelian_4", "C^4", Recipe::Abelian(4), 4, 4, false),
    aux("abelian_5", "C^5", Recipe::Abelian(5), 5, 5, false),
    aux("abelian_6", "C^6", Recipe::Abelian(6), 6, 6, false),
    aux("abelian_7", "C^7", Recipe::Abelian(7), 7, 7, false),
    aux("abelian_8", "C^8", Recipe::Abelian(8), 8, 8, false),
    aux("abelian_9", "C^9", Recipe::Abelian(9), 9, 9, false),
    aux("sl2", "sl2", SL2, 3, 0, true),
    aux("sl3", "sl3", Recipe::Named(Ingredient::Sl3), 8, 0, true),
    aux(
        "sl2_sl2",
        "sl2 + sl2",
        Recipe::DirectSum(&[SL2, SL2]),
        6,
        0,
        true,
    ),
    aux(
        "sl2_sl2_sl2",
        "sl2 + sl2 + sl2",
        Recipe::DirectSum(&[SL2, SL2, SL2]),
        9,
        0,
        true,
    ),
    aux(
        "sl2_c1",
        "sl2 + C",
        Recipe::DirectSum(&[SL2, Recipe::Abelian(1)]),
        4,
        1,
        false,
    ),
    aux(
        "sl2_c2",
        "sl2 + C^2",
        Recipe::DirectSum(&[SL2, Recipe::Abelian(2)]),
        5,
        2,
        false,
    ),
    aux(
        "sl2_sl2_c1",
        "sl2 + sl2 + C",
        Recipe::DirectSum(&[SL2, SL2, Recipe::Abelian(1)]),
        7,
        1,
        false,
    ),
    aux(
        "sl3_c1",
        "sl3 + C",
        Recipe::DirectSum(&[Recipe::Named(Ingredient::Sl3), Recipe::Abelian(1)]),
        9,
        1,
        false,
    ),
    aux("r2", "r2", Recipe::Named(Ingredient::R2), 2, 0, false),
    aux("n3", "n3", Recipe::Named(Ingredient::N3), 3, 1, false),
    aux("n5", "n5", Recipe::Named(Ingredient::N5), 5, 1, false),
    aux("f23", "f23", Recipe::Named(Ingredient::F23), 5, 2, false),
    aux("f32", "f32", Recipe::Named(Ingredient::F32), 6, 3, false),
    aux("A64", "A64", Recipe::Named(Ingredient::A64), 6, 2, false),
    aux(
        "n3_r2",
        "n3 + r2",
        Recipe::DirectSum(&[Recipe::Named(Ingredient::N3), Recipe::Named(Ingredient::R2)]),
        5,
        1,
        false,
    ),
    aux(
        "n5_c1",
        "n5 + C",
        Recipe::DirectSum(&[Recipe::Named(Ingredient::N5), Recipe::Abelian(1)]),
        6,
        2,
        false,
    ),
    aux(
        "n3_c3",
        "n3 + C^3",
        Recipe::DirectSum(&[Recipe::Named(Ingredient::N3), Recipe::Abelian(3)]),
        6,
        4,
        false,
    ),
    aux(
        "sl2_r2",
        "sl2 + r2",
        Recipe::DirectSum(&[SL2, Recipe::Named(Ingredient::R2)]),
        5,
        0,
        false,
    ),
    aux(
        "r2_c1",
        "r2 + C",
        Recipe::DirectSum(&[R2, Recipe::Abelian(1)]),
        3,
        1,
        false,
    ),
    aux(
        "r2_r2",
        "r2 + r2",
        Recipe::DirectSum(&[R2, R2]),
        4,
        0,
        false,
    ),
    aux(
        "r2_r2_r2",
        "r2 + r2 + r2",
        Recipe::DirectSum(&[R2, R2, R2]),
        6,
        0,
        false,
    ),
    aux(
        "b3",
        "Borel subalgebra of sl3",
        Recipe::Named(Ingredient::BorelSl3),
        5,
        0,
        false,
    ),
    aux(
        "n3_c1",
        "n3 + C",
        Recipe::DirectSum(&[Recipe::Named(Ingredient::N3), Recipe::Abelian(1)]),
        4,
        2,
        false,
    ),
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))
}

/// Ids of the rows of both classification tables (including stubs).
pub fn perfect_ids() -> impl Iterator<Item = &'static str> {
    ENTRIES
        .iter()
        .filter(|e| e.group != Group::Auxiliary)
        .map(|e| e.id)
}

/// Ids of every entry that can be built from recipes alone.
pub fn buildable_ids() -> impl Iterator<Item = &'static str> {
    ENTRIES
        .iter()
        .filter(|e| !e.is_data_incomplete())
        .map(|e| e.id)
}

/// Builds a catalog algebra from its recipe.
pub fn build(id: &str) -> Result<LieAlgebra> {
    let e = entry(id)?;
    if e.is_data_incomplete() {
        return Err(Error::ExternalConstantsRequired(id.to_string()));
    }
    let part = build_recipe(&e.recipe)?;
    Ok(part.into_algebra(e))
}

/// Like [`build`], but data-incomplete entries are read from
/// `<dir>/<id>.json` in the interchange format and checked against the
/// entry's recorded invariants.
pub fn build_with_external(id: &str, dir: &Path) -> Result<LieAlgebra> {
    let e = entry(id)?;
    if !e.is_data_incomplete() {
        return build(id);
    }
    let path = dir.join(format!("{id}.json"));
    let text = std::fs::read_to_string(&path)
        .map_err(|_| Error::ExternalConstantsRequired(id.to_string()))?;
    let g = interchange::algebra_from_json(&text)?;
    check_against_entry(e, &g)?;
    Ok(g.with_name(id))
}

/// Checks dimension, center dimension and perfectness against the entry.
pub fn check_against_entry(e: &CatalogEntry, g: &LieAlgebra) -> Result<()> {
    let mismatch = |detail: String| Error::CatalogMismatch {
        id: e.id.to_string(),
        detail,
    };
    if g.dim() != e.expected_dim {
        return Err(mismatch(format!(
            "dimension {} != {}",
            g.dim(),
            e.expected_dim
        )));
    }
    let z = g.center().dim();
    if z != e.expected_center_dim {
        return Err(mismatch(format!(
            "center dimension {z} != {}",
            e.expected_center_dim
        )));
    }
    if g.is_perfect() != e.expected_perfect {
        return Err(mismatch(format!("perfect = {}", g.is_perfect())));
    }
    Ok(())
}

/// Built algebra with index sets of its named subspaces.
struct Part {
    algebra: LieAlgebra,
    levi: Vec<usize>,
    radical: Vec<usize>,
    nilradical: Option<Vec<usize>>,
    modules: Option<String>,
}

impl Part {
    fn into_algebra(self, e: &CatalogEntry) -> LieAlgebra {
        let n = self.algebra.dim();
        let metadata = Metadata {
            name: Some(e.id.to_string()),
            levi: Some(Subspace::coordinate(n, &self.levi)),
            radical: Some(Subspace::coordinate(n, &self.radical)),
            nilradical: self.nilradical.map(|idx| Subspace::coordinate(n, &idx)),
            modules: self.modules,
        };
        self.algebra.with_metadata(metadata)
    }
}

fn build_recipe(recipe: &Recipe) -> Result<Part> {
    match *recipe {
        Recipe::Abelian(n) => Ok(Part {
            algebra: LieAlgebra::abelian(n),
            levi: vec![],
            radical: (0..n).collect(),
            nilradical: Some((0..n).collect()),
            modules: None,
        }),
        Recipe::Named(i) => Ok(named(i)),
        Recipe::DirectSum(parts) => {
            let mut acc: Option<Part> = None;
            for p in parts {
                let p = build_recipe(p)?;
                acc = Some(match acc {
                    None => p,
                    Some(a) => {
                        let off = a.algebra.dim();
                        let shift = |v: Vec<usize>| v.into_iter().map(|i| i + off);
                        Part {
                            algebra: direct_sum(&a.algebra, &p.algebra),
                            levi: a.levi.into_iter().chain(shift(p.levi)).collect(),
                            radical: a.radical.into_iter().chain(shift(p.radical)).collect(),
                            nilradical: match (a.nilradical, p.nilradical) {
                                (Some(x), Some(y)) => Some(x.into_iter().chain(shift(y)).collect()),
                                _ => None,
                            },
                            modules: p.modules.or(a.modules),
                        }
                    }
                });
            }
            acc.ok_or_else(|| Error::Format("empty direct sum".into()))
        }
        Recipe::Sl2Semidirect(pieces) => {
            let (r, rho) = radical_with_action(pieces)?;
            let n = 3 + r.dim();
            let names: Vec<String> = pieces.iter().map(piece_name).collect();
            Ok(Part {
                algebra: semidirect_product(&algebra::sl2(), &rho, &r)?,
                levi: vec![0, 1, 2],
                radical: (3..n).collect(),
                nilradical: Some((3..n).collect()),
                modules: Some(names.join("+")),
            })
        }
        Recipe::External => Err(Error::ExternalConstantsRequired("recipe".into())),
    }
}

fn piece_name(p: &RadicalPiece) -> String {
    match p {
        RadicalPiece::Module(n) => format!("V({n})"),
        RadicalPiece::N3 => "n3".into(),
        RadicalPiece::F23 => "f23".into(),
        RadicalPiece::F32 => "f32".into(),
        RadicalPiece::A64 => "A64".into(),
    }
}

/// The radical `r` as a Lie algebra and the `sl2`-action on it.
pub fn radical_with_action(pieces: &[RadicalPiece]) -> Result<(LieAlgebra, Representation)> {
    let mut acc: Option<(LieAlgebra, Representation)> = None;
    for p in pieces {
        let (r, rho) = piece(*p)?;
        acc = Some(match acc {
            None => (r, rho),
            Some((ar, arho)) => (direct_sum(&ar, &r), arho.direct_sum(&rho)?),
        });
    }
    acc.ok_or_else(|| Error::Format("empty radical".into()))
}

fn piece(p: RadicalPiece) -> Result<(LieAlgebra, Representation)> {
    let v = representation::sl2_module;
    Ok(match p {
        RadicalPiece::Module(n) => (LieAlgebra::abelian(n), v(n)?),
        RadicalPiece::N3 => (n3(), v(2)?.direct_sum(&v(1)?)?),
        RadicalPiece::F23 => {
            let ext = representation::free_nilpotent_extension(&v(2)?, FreeNilpotentPreset::F23)?;
            (FreeNilpotentPreset::F23.algebra(), ext)
        }
        RadicalPiece::F32 => {
            let ext = representation::free_nilpotent_extension(&v(3)?, FreeNilpotentPreset::F32)?;
            (FreeNilpotentPreset::F32.algebra(), ext)
        }
        RadicalPiece::A64 => {
            let act = v(2)?
                .direct_sum(&v(2)?)?
                .direct_sum(&v(1)?)?
                .direct_sum(&v(1)?)?;
            (a64(), act)
        }
    })
}

fn n3() -> LieAlgebra {
    LieAlgebra::from_table(3, &[(1, 2, 3, 1)])
        .expect("n3")
        .with_name("n3")
}

fn a64() -> LieAlgebra {
    LieAlgebra::from_table(6, &[(1, 4, 5, 1), (2, 3, 5, -1), (3, 4, 6, 1)])
        .expect("A64")
        .with_name("A64")
}

fn named(i: Ingredient) -> Part {
    let nil = |algebra: LieAlgebra| {
        let n = algebra.dim();
        Part {
            algebra,
            levi: vec![],
            radical: (0..n).collect(),
            nilradical: Some((0..n).collect()),
            modules: None,
        }
    };
    let simple = |algebra: LieAlgebra| {
        let n = algebra.dim();
        Part {
            algebra,
            levi: (0..n).collect(),
            radical: vec![],
            nilradical: Some(vec![]),
            modules: None,
        }
    };
    match i {
        Ingredient::Sl2 => simple(algebra::sl2()),
        Ingredient::Sl3 => simple(algebra::sl3()),
        Ingredient::N3 => nil(n3()),
        Ingredient::N5 => nil(LieAlgebra::from_table(5, &[(1, 2, 5, 1), (3, 4, 5, 1)])
            .expect("n5")
            .with_name("n5")),
        Ingredient::F23 => nil(FreeNilpotentPreset::F23.algebra()),
        Ingredient::F32 => nil(FreeNilpotentPreset::F32.algebra()),
        Ingredient::A64 => nil(a64()),
        Ingredient::BorelSl3 => {
            let b = algebra::sl3()
                .restrict(&Subspace::coordinate(8, &[0, 1, 2, 6, 7]))
                .expect("subalgebra");
            Part {
                algebra: b.with_name("b3"),
                levi: vec![],
                radical: (0..5).collect(),
                nilradical: Some(vec![0, 1, 2]),
                modules: None,
            }
        }
        Ingredient::R2 => Part {
            algebra: LieAlgebra::from_table(2, &[(1, 2, 1, 1)])
                .expect("r2")
                .with_name("r2"),
            levi: vec![],
            radical: vec![0, 1],
            nilradical: Some(vec![0]),
            modules: None,
        },
    }
}

/// Isomorphism invariants. Different fingerprints certify non-isomorphism;
/// equal fingerprints do not certify isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dims: Vec<usize>,
    pub lcs_dims: Vec<usize>,
    pub center_dim: usize,
    pub killing_rank: usize,
    pub perfect: bool,
    pub solvable: bool,
    pub nilpotent: bool,
    pub semisimple: bool,
    pub radical_dim: usize,
}

pub fn fingerprint(g: &LieAlgebra) -> Fingerprint {
    let derived = g.derived_series();
    let lcs = g.lower_central_series();
    let dims = |s: &[Subspace]| s.iter().map(Subspace::dim).collect::<Vec<_>>();
    Fingerprint {
        dim: g.dim(),
        derived_dims: dims(&derived),
        lcs_dims: dims(&lcs),
        center_dim: g.center().dim(),
        killing_rank: g.killing_rank(),
        perfect: derived.get(1).is_some_and(Subspace::is_full),
        solvable: derived.last().is_some_and(Subspace::is_zero),
        nilpotent: lcs.last().is_some_and(Subspace::is_zero),
        semisimple: g.is_semisimple(),
        radical_dim: g.solvable_radical().dim(),
    }
}

fn catalog_fingerprints() -> &'static [(&'static str, Fingerprint)] {
    static CACHE: OnceLock<Vec<(&'static str, Fingerprint)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        buildable_ids()
            .map(|id| {
                (
                    id,
                    fingerprint(&build(id).expect("buildable catalog entry")),
                )
            })
            .collect()
    })
}

/// Catalog ids whose fingerprint equals that of `g`.
pub fn identify(g: &LieAlgebra) -> Vec<&'static str> {
    let fp = fingerprint(g);
    catalog_fingerprints()
        .iter()
        .filter(|(_, f)| *f == fp)
        .map(|(id, _)| *id)
        .collect()
}

/// Groups of buildable catalog ids sharing a fingerprint (size at least 2).
pub fn fingerprint_collisions() -> Vec<Vec<&'static str>> {
    let mut groups: Vec<(Fingerprint, Vec<&'static str>)> = Vec::new();
    for (id, fp) in catalog_fingerprints() {
        match groups.iter_mut().find(|(f, _)| f == fp) {
            Some((_, ids)) => ids.push(id),
            None => groups.push((fp.clone(), vec![id])),
        }
    }
    groups
        .into_iter()
        .map(|(_, ids)| ids)
        .filter(|ids| ids.len() > 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    #[test]
    fn l5_1_matches_the_published_bracket_table() {
        let expected = LieAlgebra::from_table(
            5,
            &[
                (1, 2, 3, 1),
                (1, 3, 1, -2),
                (1, 5, 4, 1),
                (2, 3, 2, 2),
                (2, 4, 5, 1),
                (3, 4, 4, 1),
                (3, 5, 5, -1),
            ],
        )
        .unwrap();
        let g = build("L5_1").unwrap();
        assert!(g.same_brackets(&expected));
        assert_eq!(
            g.bracket(&unit_vector(5, 1), &unit_vector(5, 3)).unwrap(),
            unit_vector(5, 4)
        );
    }

    #[test]
    fn l6_2_matches_the_heisenberg_semidirect_table() {
        let expected = LieAlgebra::from_table(
            6,
            &[
                (1, 2, 3, 1),
                (1, 3, 1, -2),
                (1, 5, 4, 1),
                (2, 3, 2, 2),
                (2, 4, 5, 1),
                (3, 4, 4, 1),
                (3, 5, 5, -1),
                (4, 5, 6, 1),
            ],
        )
        .unwrap();
        assert!(build("L6_2").unwrap().same_brackets(&expected));
        assert_eq!(
            build("L6_2").unwrap().center(),
            Subspace::coordinate(6, &[5])
        );
    }

    #[test]
    fn stubs_need_external_constants() {
        assert_eq!(
            build("L8_13_1").unwrap_err(),
            Error::ExternalConstantsRequired("L8_13_1".into())
        );
        assert_eq!(
            build("L8_19").unwrap_err(),
            Error::ExternalConstantsRequired("L8_19".into())
        );
        assert_eq!(
            build("nope").unwrap_err(),
            Error::UnknownCatalogId("nope".into())
        );
    }

    #[test]
    fn abelian_entry_is_zero() {
        let g = build("abelian_3").unwrap();
        assert_eq!(g.dim(), 3);
        assert!(g.is_abelian());
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = ENTRIES.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), ENTRIES.len());
        assert_eq!(perfect_ids().count(), 22);
    }

    #[test]
    fn n3_plus_r2_fingerprint() {
        let fp = fingerprint(&build("n3_r2").unwrap());
        assert_eq!(fp.dim, 5);
        assert_eq!(fp.derived_dims, vec![5, 2, 0]);
        assert_eq!(fp.center_dim, 1);
        assert!(!fp.nilpotent);
        assert_eq!(fp.killing_rank, 1);
    }
}
