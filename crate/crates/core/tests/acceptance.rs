//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use skew_brace::catalog::{self, DigroupName, SignChoice};
use skew_brace::format::{emit_dgt, parse_dgt};
use skew_brace::ideal_algebra::{center, center_elementwise, commutator_ideal, lattice_ops};
use skew_brace::semidirect::{check_equivalences, idempotent_endomorphisms, InnerDecomposition};
use skew_brace::ybe::solution_from_brace;
use skew_brace::{ElementMap, IdealSet, Limits, SetSolution};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s3c6_example() -> Outcome {
    let text = emit_dgt(&catalog::s3c6().map_err(|e| e.to_string())?);
    let d = parse_dgt(&text).map_err(|e| e.to_string())?;
    ensure(d.is_skew_brace(), || "axiom oracle says not a brace".into())?;
    ensure(
        d.is_skew_brace_via_lambda(&Limits::default()) == Ok(true),
        || "λ oracle says not a brace".into(),
    )?;
    let decs = idempotent_endomorphisms(&d, &Limits::default()).map_err(|e| e.to_string())?;
    let nontrivial: Vec<&InnerDecomposition> = decs.iter().filter(|x| !x.is_trivial()).collect();
    ensure(nontrivial.len() == 1, || {
        format!("{} nontrivial decompositions", nontrivial.len())
    })?;
    let dec = nontrivial[0];
    ensure(
        dec.subdigroup() == [0, 3] && dec.ideal().elements() == [0, 4, 5],
        || {
            format!(
                "B = {:?}, I = {:?}",
                dec.subdigroup(),
                dec.ideal().elements()
            )
        },
    )?;
    let act = dec.extract_action().map_err(|e| e.to_string())?;
    let trivial = |m: &[ElementMap]| m.iter().all(ElementMap::is_identity);
    ensure(!trivial(act.phi_star()), || "φ* is trivial".into())?;
    ensure(trivial(act.phi_circ()), || "φ∘ is nontrivial".into())?;
    ensure(!trivial(act.lambda()), || "Λ is trivial".into())
}

fn s3c6_lambda() -> Outcome {
    let d = catalog::s3c6().map_err(|e| e.to_string())?;
    let conj_23 = [0, 2, 1, 3, 5, 4];
    for a in 0..6 {
        let l = d.lambda_map(a).map_err(|e| e.to_string())?;
        let expected: Vec<usize> = if matches!(a, 1..=3) {
            conj_23.to_vec()
        } else {
            (0..6).collect()
        };
        ensure(l.images() == expected.as_slice(), || {
            format!("λ_{a} = {l}, expected {expected:?}")
        })?;
    }
    Ok(())
}

fn eight_rows() -> Outcome {
    let expected = [true, false, false, false, true, false, true, true];
    let mut problems = Vec::new();
    for row in 1..=8 {
        let act = SignChoice::from_row(row)
            .unwrap()
            .action(2, 3)
            .map_err(|e| e.to_string())?;
        let oracle = act
            .outer_product()
            .map_err(|e| e.to_string())?
            .is_skew_brace();
        let criterion = act
            .brace_condition(&Limits::default())
            .map_err(|e| e.to_string())?
            .holds();
        if criterion != oracle {
            problems.push(format!("row {row}: criterion {criterion}, oracle {oracle}"));
        }
        if oracle != expected[row - 1] {
            problems.push(format!(
                "row {row}: brace = {oracle}, table says {}",
                if expected[row - 1] { "Yes" } else { "No" }
            ));
        }
    }
    ensure(problems.is_empty(), || problems.join("; "))
}

fn signed_order_12() -> Outcome {
    let d = catalog::digroup(&DigroupName::Signed {
        y_order: 4,
        k_order: 3,
    })
    .map_err(|e| e.to_string())?;
    ensure(d.is_skew_brace(), || "ℤ/4 ⋉ ℤ/3 is not a brace".into())?;
    let e = ElementMap::new(12, (0..12).map(|p| (p / 3) * 3).collect()).unwrap();
    let dec = InnerDecomposition::from_endomorphism(&d, &e).map_err(|e| e.to_string())?;
    let act = dec.extract_action().map_err(|e| e.to_string())?;
    let sign = |y: usize, k: usize| if y.is_multiple_of(2) { k } else { (3 - k) % 3 };
    for y in 0..4 {
        for k in 0..3 {
            ensure(act.phi_star()[y].apply(k) == sign(y, k), || {
                format!("φ*_{y}({k})")
            })?;
        }
        ensure(act.phi_circ()[y].is_identity(), || {
            format!("φ∘_{y} nontrivial")
        })?;
        ensure(act.lambda()[y].is_identity(), || {
            format!("Λ_{y} nontrivial")
        })?;
    }
    let alpha = dec.alpha_isomorphism().map_err(|e| e.to_string())?;
    let expected: Vec<usize> = (0..12).map(|p| (p / 3) * 3 + sign(p / 3, p % 3)).collect();
    ensure(alpha.images() == expected.as_slice(), || {
        format!("α = {alpha}")
    })?;
    let outer = act.outer_product().map_err(|e| e.to_string())?;
    ensure(
        outer.is_skew_brace() && outer.is_morphism_to(&d, &alpha) == Ok(true),
        || "α is not a brace isomorphism".into(),
    )
}

fn roundtrips() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (n, d) in common::enumerated().iter().enumerate() {
        for dec in idempotent_endomorphisms(d, &limits).map_err(|e| e.to_string())? {
            if dec.is_trivial() {
                continue;
            }
            checked += 1;
            if let Err(e) = dec.alpha_isomorphism() {
                failures.push(format!("digroup #{n}: {e}"));
                continue;
            }
            let act = dec.extract_action().map_err(|e| e.to_string())?;
            let outer = act.outer_product().map_err(|e| e.to_string())?;
            for a in 0..act.order() {
                for b in 0..act.order() {
                    if !act
                        .lambda_product_formula(&outer, act.unpair(a), act.unpair(b))
                        .agrees()
                    {
                        failures.push(format!("digroup #{n}: λ closed form at ({a}, {b})"));
                    }
                }
            }
        }
    }
    ensure(checked > 0 && failures.is_empty(), || {
        format!(
            "{} failures of {checked}: {}",
            failures.len(),
            failures.join("; ")
        )
    })
}

fn oracle_equivalences() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    for (n, d) in common::corpus().iter().enumerate() {
        if d.is_skew_brace_via_lambda(&limits) != Ok(d.is_skew_brace()) {
            failures.push(format!("digroup #{n}: oracles disagree"));
        }
    }
    for (n, act) in common::actions().iter().enumerate() {
        let oracle = act
            .outer_product()
            .map_err(|e| e.to_string())?
            .is_skew_brace();
        let criterion = act
            .brace_condition(&limits)
            .map_err(|e| e.to_string())?
            .holds();
        let split = act
            .split_brace_condition(&limits)
            .map_err(|e| e.to_string())?
            .holds();
        if criterion != oracle || split != criterion {
            failures.push(format!(
                "action #{n}: oracle {oracle}, criterion {criterion}, split {split}"
            ));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn ideal_laws() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    for (n, d) in common::braces().iter().enumerate() {
        let ideals = d.ideals(&limits).map_err(|e| e.to_string())?;
        let comm = |i: &IdealSet, j: &IdealSet| {
            commutator_ideal(d, i, j, &limits).map_err(|e| e.to_string())
        };
        for i in &ideals {
            for j in &ideals {
                if comm(i, j)? != comm(j, i)? {
                    failures.push(format!("#{n}: [I,J] ≠ [J,I]"));
                }
                // fails unless I*J = I∘J setwise and is an ideal
                lattice_ops(d, i, j).map_err(|e| e.to_string())?;
                for k in &ideals {
                    let jk = lattice_ops(d, j, k).map_err(|e| e.to_string())?.join;
                    let rhs = lattice_ops(d, &comm(i, j)?, &comm(i, k)?)
                        .map_err(|e| e.to_string())?
                        .join;
                    if comm(i, &jk)? != rhs {
                        failures.push(format!("#{n}: distributivity"));
                    }
                }
            }
        }
        let z = center(d, &limits).map_err(|e| e.to_string())?;
        if z.elements() != center_elementwise(d).map_err(|e| e.to_string())?.as_slice() {
            failures.push(format!("#{n}: centers differ"));
        }
        if !comm(&z, &d.full_ideal())?.is_trivial() {
            failures.push(format!("#{n}: [Z,D] nontrivial"));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn eight_conditions() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    for (n, d) in common::corpus()
        .iter()
        .enumerate()
        .filter(|(_, d)| d.order() <= 6)
    {
        let subs = d.subdigroups(&limits).map_err(|e| e.to_string())?;
        let ideals = d.ideals(&limits).map_err(|e| e.to_string())?;
        for b in &subs {
            for i in &ideals {
                let r = check_equivalences(d, b, i.elements()).map_err(|e| e.to_string())?;
                if !r.all_agree() {
                    failures.push(format!(
                        "#{n}: B = {b:?}, I = {:?}: {:?}",
                        i.elements(),
                        r.conditions
                    ));
                }
            }
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn yang_baxter() -> Outcome {
    let mut failures = Vec::new();
    let mut braces = common::braces();
    braces.push(catalog::s3c6().map_err(|e| e.to_string())?);
    for (n, d) in braces.iter().enumerate() {
        let r = solution_from_brace(d).map_err(|e| e.to_string())?;
        if !r.braid_check() || !r.nondegeneracy_check() {
            failures.push(format!("brace #{n}"));
        }
    }
    for n in 1..=6 {
        if !SetSolution::flip(n).braid_check() || !SetSolution::flip(n).nondegeneracy_check() {
            failures.push(format!("flip on {n}"));
        }
        if n >= 2 && SetSolution::identity(n).nondegeneracy_check() {
            failures.push(format!("identity on {n} is nondegenerate"));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn component_formulas() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    for d in common::corpus() {
        for dec in idempotent_endomorphisms(&d, &limits).map_err(|e| e.to_string())? {
            for &b in dec.subdigroup() {
                for &i1 in dec.ideal().elements() {
                    checked += 1;
                    if let Err(e) = dec.component_formulas(b, i1) {
                        failures.push(e.to_string());
                    }
                }
            }
        }
    }
    ensure(checked > 0 && failures.is_empty(), || failures.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(fn() -> Outcome, u64); 10] = [
        (s3c6_example, 1),
        (s3c6_lambda, 1),
        (eight_rows, 1),
        (signed_order_12, 1),
        (roundtrips, 60),
        (oracle_equivalences, 60),
        (ideal_laws, 60),
        (eight_conditions, 60),
        (yang_baxter, 10),
        (component_formulas, 10),
    ];
    let mut failed = 0;
    for (n, (check, seconds)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(*seconds), || {
                format!("took {elapsed:.2?}, bound {seconds} s")
            })
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS ({elapsed:.2?})", n + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL ({elapsed:.2?}): {msg}", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
