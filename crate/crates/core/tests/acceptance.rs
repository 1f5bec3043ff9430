//! One line per acceptance criterion; the test fails if any criterion does.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use postlie::algebra::sl2;
use postlie::catalog::{self, Group};
use postlie::constructions::semidirect_product;
use postlie::interchange;
use postlie::linalg::Matrix;
use postlie::postlie::fixtures;
use postlie::postlie::rules::nonexistence_certificate;
use postlie::postlie::{
    existence_table, induced_bracket, pa_from_rb, pa_linear_space, pa_search,
    rb_from_decomposition, rb_kernels, verify_pa, verify_rb, AlgebraClass, CellStatus, PAProduct,
    ExpectedMark, RBOperator, SearchOptions, Strategy as SearchStrategy,
};
use postlie::representation::sl2_module;
use postlie::scalar::{int, Scalar};
use postlie::{LieAlgebra, Subspace};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    check(t < limit, format!("took {t:?}, limit {limit:?}"))
}

fn cat(id: &str) -> LieAlgebra {
    catalog::build(id).unwrap()
}

fn diag(d: &[i64]) -> Matrix {
    Matrix::diagonal(&d.iter().map(|&v| int(v)).collect::<Vec<Scalar>>())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rows: Vec<_> = catalog::entries()
        .iter()
        .filter(|e| e.group != Group::Auxiliary)
        .collect();
    check(
        rows.iter()
            .filter(|e| e.group == Group::PerfectUpTo8)
            .count()
            == 12,
        "12 rows up to dimension 8",
    )?;
    check(
        rows.iter()
            .filter(|e| e.group == Group::PerfectDim9)
            .count()
            == 10,
        "10 rows of dimension 9",
    )?;
    let buildable: Vec<_> = rows.iter().filter(|e| !e.is_data_incomplete()).collect();
    check(buildable.len() == 20, "20 buildable rows")?;
    for (id, z) in common::TABLE_CENTERS {
        let g = cat(id);
        check(g.jacobi_residual().is_zero(), format!("{id}: Jacobi"))?;
        check(
            g.is_perfect() && !g.is_semisimple(),
            format!("{id}: perfect, not semisimple"),
        )?;
        check(
            g.center().dim() == z,
            format!("{id}: center {} != {z}", g.center().dim()),
        )?;
    }
    within(start, Duration::from_secs(1))
}

fn criterion_2() -> Outcome {
    for id in catalog::perfect_ids().filter(|id| !catalog::entry(id).unwrap().is_data_incomplete())
    {
        let g = cat(id);
        check(
            g.restrict(&g.solvable_radical()).unwrap().is_nilpotent(),
            format!("{id}: radical"),
        )?;
        if catalog::entry(id).unwrap().group == Group::PerfectDim9 {
            let nil = g
                .metadata()
                .nilradical
                .clone()
                .ok_or(format!("{id}: no nilradical"))?;
            let class = g
                .restrict(&nil)
                .unwrap()
                .nilpotency_class()
                .map_err(|e| e.to_string())?;
            check(class <= 2, format!("{id}: nilradical class {class}"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for f in fixtures::all() {
        let r = verify_pa(&f.product, &f.g, &f.n).unwrap();
        check(r.axiom1 && r.axiom2 && r.axiom3, f.id)?;
    }
    let l5 = cat("L5_1");
    let p43 = pa_from_rb(&RBOperator::weight_one(diag(&[0, -1, -1, 0, 0])), &l5).unwrap();
    let p45 = pa_from_rb(&RBOperator::weight_one(diag(&[0, 0, 0, -1, -1])), &l5).unwrap();
    check(
        p43 == fixtures::solvable_on_perfect().product,
        "product from the first operator",
    )?;
    check(
        p45 == fixtures::reductive_on_perfect().product,
        "product from the second operator",
    )?;
    let g = induced_bracket(&p43, &l5)
        .unwrap()
        .algebra
        .ok_or("induced bracket not Lie")?;
    let expected = LieAlgebra::from_table(5, &[(1, 5, 4, 1), (2, 3, 2, -2)]).unwrap();
    check(g.same_brackets(&expected), "induced bracket")?;
    check(
        catalog::identify(&g).contains(&"n3_r2"),
        "fingerprint n3 + r2",
    )
}

fn criterion_4() -> Outcome {
    let l5 = cat("L5_1");
    let c = |ix: &[usize]| Subspace::coordinate(5, ix);
    for (d, k) in [
        ([0, -1, -1, 0, 0], (c(&[0, 3, 4]), c(&[1, 2]))),
        ([0, 0, 0, -1, -1], (c(&[0, 1, 2]), c(&[3, 4]))),
    ] {
        let r = RBOperator::weight_one(diag(&d));
        check(verify_rb(&r, &l5).unwrap(), format!("{d:?} at weight 1"))?;
        check(rb_kernels(&r, &l5).unwrap() == k, format!("{d:?} kernels"))?;
        check(
            verify_rb(&r.complement(), &l5).unwrap(),
            format!("-(R+id) for {d:?}"),
        )?;
        check(
            rb_from_decomposition(&l5, &k.0, &k.1).unwrap() == r,
            format!("{d:?} from its kernels"),
        )?;
    }
    Ok(())
}

fn subset_checks(trace: &[String]) -> Option<u64> {
    let line = trace
        .iter()
        .find(|l| l.starts_with("S2: subset") && l.contains("subset checks"))?;
    line.split(" after ")
        .nth(1)?
        .split_whitespace()
        .next()?
        .parse()
        .ok()
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for f in [
        fixtures::solvable_on_perfect(),
        fixtures::reductive_on_perfect(),
    ] {
        let c = pa_search(&f.g, &f.n, &SearchOptions::default()).unwrap();
        let w = c.witness().ok_or(format!("{}: no witness", f.id))?;
        check(
            w.strategy == SearchStrategy::Decomposition,
            format!("{}: strategy", f.id),
        )?;
        let k = subset_checks(&c.trace).ok_or("no subset count")?;
        check(k <= 32, format!("{}: {k} subset checks", f.id))?;
    }
    for id in catalog::buildable_ids() {
        let g = cat(id);
        let c = pa_search(&g, &g, &SearchOptions::default()).unwrap();
        let w = c.witness().ok_or(format!("({id}, {id}): no witness"))?;
        check(
            w.product == PAProduct::zero(g.dim()),
            format!("({id}, {id}): nonzero product"),
        )?;
    }
    within(start, Duration::from_secs(5))
}

fn criterion_6() -> Outcome {
    let pairs = [
        ("R1", "L5_1", "abelian_5"),
        ("R2", "L6_2", "n5_c1"),
        ("R3", "L5_1", "n3_r2"),
        ("R4", "L7_6", "sl2_sl2_c1"),
        ("R5", "L5_1", "sl2_r2"),
        ("R6", "abelian_5", "L5_1"),
        ("R7", "n5", "L5_1"),
        ("R8", "sl2_sl2", "L6_4"),
        ("R9", "L8_21", "sl3"),
        ("R10", "L6_4", "sl2_sl2"),
        ("R11", "L9_59", "sl2_sl2_sl2"),
        ("R12", "L5_1", "f23"),
    ];
    for (rule, g, n) in pairs {
        let c = nonexistence_certificate(&cat(g), &cat(n)).unwrap();
        check(
            c.rule() == Some(rule),
            format!("({g}, {n}): {:?} instead of {rule}", c.rule()),
        )?;
    }
    let t = existence_table().unwrap();
    let mut witnessed = 0;
    for cell in &t.cells {
        let name = format!("({}, {})", cell.g.short(), cell.n.short());
        match cell.mark {
            ExpectedMark::Open => check(
                matches!(cell.status, CellStatus::Unknown { .. }),
                format!("{name} should be unknown"),
            )?,
            ExpectedMark::Check => {
                let CellStatus::Witness { witness, .. } = &cell.status else {
                    return Err(format!("{name} has no witness"));
                };
                check(witness.reverify().unwrap(), format!("{name} witness fails"))?;
                witnessed += 1;
            }
            ExpectedMark::Dash => check(
                !matches!(cell.status, CellStatus::Witness { .. }),
                format!("{name} witnessed"),
            )?,
        }
    }
    check(witnessed == 34, format!("{witnessed} witnessed cells"))?;
    check(
        t.cell(AlgebraClass::Perfect, AlgebraClass::Abelian)
            .annotation()
            == "− R1",
        "(per, abe)",
    )
}

fn run_property<S: proptest::strategy::Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    run_property(prop::collection::vec(1usize..5, 1..4), |dims| {
        let mut rho = sl2_module(dims[0]).unwrap();
        for &d in &dims[1..] {
            rho = rho.direct_sum(&sl2_module(d).unwrap()).unwrap();
        }
        let g = semidirect_product(&sl2(), &rho, &LieAlgebra::abelian(rho.dim())).unwrap();
        prop_assert_eq!(g.is_perfect(), !dims.contains(&1));
        Ok(())
    })?;
    let ids = [
        "sl2", "r2", "n3", "n3_r2", "L5_1", "sl2_r2", "f23", "sl2_sl2",
    ];
    run_property((0usize..ids.len(), 0u32..512), |(which, mask)| {
        let n = cat(ids[which]);
        let d = n.dim();
        let on: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).collect();
        let off: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 0).collect();
        let (n1, n2) = (Subspace::coordinate(d, &off), Subspace::coordinate(d, &on));
        if !n.is_subalgebra(&n1).unwrap() || !n.is_subalgebra(&n2).unwrap() {
            return Ok(());
        }
        let p = pa_from_rb(&rb_from_decomposition(&n, &n1, &n2).unwrap(), &n).unwrap();
        let g = induced_bracket(&p, &n).unwrap().algebra.unwrap();
        let r = verify_pa(&p, &g, &n).unwrap();
        prop_assert!(r.holds() && r.l_is_rep && r.l_in_der);
        Ok(())
    })?;
    let vecs = || prop::collection::vec(prop::collection::vec(-2i64..3, 5), 0..=4);
    run_property((vecs(), vecs()), |(a, b)| {
        let sp = |rows: &[Vec<i64>]| {
            Subspace::span(
                5,
                rows.iter()
                    .map(|r| r.iter().map(|&v| int(v)).collect::<Vec<_>>()),
            )
            .unwrap()
        };
        let (u, w) = (sp(&a), sp(&b));
        let (s, i) = (u.sum(&w).unwrap(), u.intersection(&w).unwrap());
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains_subspace(&u) && u.contains_subspace(&i));
        prop_assert_eq!(u.annihilator().annihilator(), u);
        Ok(())
    })?;
    run_property(
        prop::collection::vec((0usize..4, 0usize..4, 0usize..4, -9i64..10, 1i64..7), 0..20),
        |entries| {
            let t = postlie::Tensor3::from_entries(
                4,
                entries
                    .into_iter()
                    .map(|(i, j, k, p, q)| (i, j, k, postlie::scalar::ratio(p, q))),
            );
            let text = interchange::to_json(&interchange::product_to_document(&t));
            prop_assert_eq!(
                interchange::document_to_product(&interchange::parse_document(&text).unwrap())
                    .unwrap(),
                t
            );
            Ok(())
        },
    )?;
    within(start, Duration::from_secs(30))
}

fn criterion_8() -> Outcome {
    for n in 1..=4usize {
        let a = LieAlgebra::abelian(n);
        let dim = pa_linear_space(&a, &a).unwrap().dimension();
        let expected = n * n * (n + 1) / 2;
        check(
            dim == Some(expected),
            format!("n = {n}: {dim:?} != {expected}"),
        )?;
        check(
            common::solution_dimension(&a, &a) == Some(expected),
            format!("n = {n}: oracle disagrees"),
        )?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("catalog integrity", criterion_1),
        ("radical nilpotency", criterion_2),
        ("post-Lie examples", criterion_3),
        ("Rota-Baxter suite", criterion_4),
        ("search", criterion_5),
        ("rule engine and table", criterion_6),
        ("property suites", criterion_7),
        ("linear-space sanity", criterion_8),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {}: PASS {name}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
