//! End-to-end acceptance gate. Each numbered criterion prints exactly one
//! PASS/FAIL line; the test fails if any criterion fails. Budgets are chosen
//! so the whole gate stays desk-scale (minutes, not hours).

use qaffine::bipoly::BiPoly;
use qaffine::rmatrix::{
    closed_form_r11_c, closed_form_roots, component_scalars_c, difference_identity,
    duality_identity, equal_up_to_unit, fundamental_module, solve_rnor, yang_baxter_at, Unit,
};
use qaffine::root::{AffineType, Family};
use qaffine::umodule::Twist;
use qaffine::verify::{
    check_filtration, check_kernel_intersection_c, check_pole_reducibility,
    reducibility_witnesses_c, tensor_chain,
};
use qaffine::rmatrix::NormalizedR;
use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::{Arc, Mutex, OnceLock};

/// The expensive exact solves are shared across criteria (the inversion and
/// functional-equation checks revisit the pairs whose denominators were
/// already computed).
fn solved(t: AffineType, k: usize, l: usize) -> Arc<NormalizedR> {
    type Cache = Mutex<HashMap<(Family, usize, usize, usize), Arc<NormalizedR>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    map.entry((t.family, t.n, k, l))
        .or_insert_with(|| Arc::new(solve_rnor(t, k, l)))
        .clone()
}

fn pairs(t: AffineType) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in t.fundamental_indices() {
        for l in t.fundamental_indices() {
            if k <= l {
                out.push((k, l));
            }
        }
    }
    out
}

fn check_denominator_closed_form(t: AffineType, k: usize, l: usize) -> Result<(), String> {
    let r = solved(t, k, l);
    if !r.unfactored.is_one() {
        return Err(format!("{t:?} ({k},{l}): unit-root scan left a nontrivial factor"));
    }
    let mut got = r.poles.clone();
    let mut want = closed_form_roots(t, k, l);
    got.sort();
    want.sort();
    if got != want {
        return Err(format!("{t:?} ({k},{l}): poles {got:?} != closed form {want:?}"));
    }
    Ok(())
}

fn criterion_01() -> Result<String, String> {
    let mut count = 0;
    for n in 2..=5 {
        let t = AffineType::new(Family::A, n);
        for (k, l) in pairs(t) {
            check_denominator_closed_form(t, k, l)?;
            count += 1;
        }
    }
    Ok(format!("type A denominators match closed form for {count} pairs, n=2..5"))
}

fn criterion_02() -> Result<String, String> {
    let mut count = 0;
    for n in 2..=3 {
        let t = AffineType::new(Family::C, n);
        for (k, l) in pairs(t) {
            check_denominator_closed_form(t, k, l)?;
            count += 1;
        }
    }
    Ok(format!("type C denominators match closed form for {count} pairs, n=2..3"))
}

fn criterion_03() -> Result<String, String> {
    for n in 2..=3 {
        let t = AffineType::new(Family::C, n);
        let r = solved(t, 1, 1);
        if !r.mat.sub(&closed_form_r11_c(n)).is_zero() {
            return Err(format!("C n={n}: solved R11 differs from the explicit matrix"));
        }
        for k in 1..=n {
            for (w, got, want) in component_scalars_c(n, k) {
                if got != want {
                    return Err(format!("C n={n} k={k}: component scalar at {w:?} mismatch"));
                }
            }
        }
    }
    Ok("explicit symplectic vector R-matrix and component scalars match, n=2..3".into())
}

fn criterion_04() -> Result<String, String> {
    let types = [
        AffineType::new(Family::A, 2),
        AffineType::new(Family::A, 3),
        AffineType::new(Family::C, 2),
        AffineType::new(Family::C, 3),
    ];
    let mut count = 0;
    for t in types {
        for k in t.fundamental_indices() {
            let rep = fundamental_module(t, k)
                .twist(&Twist::neg_s_pow(3))
                .check_relations();
            if !rep.ok() {
                return Err(format!("{t:?} k={k}: {:?}", rep.failures));
            }
            count += 1;
            for l in t.fundamental_indices() {
                let (m, _) = tensor_chain(t, &[(k, 0), (l, 3)]);
                if m.dim() > 150 {
                    continue;
                }
                let rep = m.check_relations();
                if !rep.ok() {
                    return Err(format!("{t:?} ({k},{l}): {:?}", rep.failures));
                }
                count += 1;
            }
        }
    }
    for (t, factors) in [
        (AffineType::new(Family::A, 3), vec![(1, 0), (2, 3), (1, -1)]),
        (AffineType::new(Family::C, 2), vec![(1, 0), (2, 1), (1, 4)]),
    ] {
        let (m, _) = tensor_chain(t, &factors);
        let rep = m.check_relations();
        if !rep.ok() {
            return Err(format!("{t:?} {factors:?}: {:?}", rep.failures));
        }
        count += 1;
    }
    Ok(format!("defining relations hold on {count} twisted modules and tensors"))
}

fn criterion_05() -> Result<String, String> {
    let triples = [
        (AffineType::new(Family::A, 2), 1, 1, 1),
        (AffineType::new(Family::A, 3), 1, 2, 1),
        (AffineType::new(Family::C, 2), 1, 1, 1),
    ];
    let mut count = 0;
    for (t, a, b, c) in triples {
        for w in [2, 3] {
            if !yang_baxter_at(t, a, b, c, w) {
                return Err(format!("{t:?} ({a},{b},{c}) at w={w}: braid relation fails"));
            }
            count += 1;
        }
    }
    Ok(format!("Yang-Baxter hexagon holds for {count} (triple, twist) instances"))
}

fn budgeted_pairs() -> Vec<(AffineType, usize, usize)> {
    let mut out = Vec::new();
    for t in [
        AffineType::new(Family::A, 2),
        AffineType::new(Family::A, 3),
        AffineType::new(Family::C, 2),
        AffineType::new(Family::C, 3),
    ] {
        for (k, l) in pairs(t) {
            let d = fundamental_module(t, k).dim() * fundamental_module(t, l).dim();
            if d <= 100 {
                out.push((t, k, l));
            }
        }
    }
    out
}

fn criterion_06() -> Result<String, String> {
    let set = budgeted_pairs();
    for &(t, k, l) in &set {
        let rkl = solved(t, k, l);
        let rlk = solved(t, l, k);
        let composed = rlk.substitute_inverse(Unit::one()).compose(&rkl.mat);
        if !composed.sub(&qaffine::linalg::Op::identity(rkl.mat.rows)).is_zero() {
            return Err(format!("{t:?} ({k},{l}): inversion identity fails"));
        }
    }
    Ok(format!("R(z) composed with the swapped R(1/z) is the identity on {} pairs", set.len()))
}

/// `z`-degree reversal combined with the bar involution on coefficients.
fn reversed_bar(d: &BiPoly) -> BiPoly {
    let top = d.max_z().unwrap();
    let mut out = BiPoly::zero();
    for (e, c) in d.iter() {
        out.add_term(top - e, &c.bar());
    }
    out
}

fn criterion_07() -> Result<String, String> {
    // Exact reversal symmetry of the solved denominators.
    for (t, k, l) in budgeted_pairs() {
        let dkl = solved(t, k, l).denominator.clone();
        let dlk = solved(t, l, k).denominator.clone();
        if !equal_up_to_unit(&dkl, &reversed_bar(&dlk)) {
            return Err(format!("{t:?} ({k},{l}): denominator reversal symmetry fails"));
        }
    }
    // Series-level functional equations at order 8, with the unit slack solved
    // for rather than assumed.
    let order = 8;
    let mut count = 0;
    for n in 2..=5 {
        let t = AffineType::new(Family::A, n);
        for i in t.fundamental_indices() {
            for j in t.fundamental_indices() {
                if duality_identity(t, i, j, order).is_none() {
                    return Err(format!("{t:?} ({i},{j}): duality functional equation fails"));
                }
                if difference_identity(t, i, j, order).is_none() {
                    return Err(format!("{t:?} ({i},{j}): difference functional equation fails"));
                }
                count += 1;
            }
        }
    }
    for n in 2..=3 {
        let t = AffineType::new(Family::C, n);
        for i in t.fundamental_indices() {
            for j in t.fundamental_indices() {
                if duality_identity(t, i, j, order).is_none() {
                    return Err(format!("{t:?} ({i},{j}): duality functional equation fails"));
                }
                if difference_identity(t, i, j, order).is_none() {
                    return Err(format!("{t:?} ({i},{j}): difference functional equation fails"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("reversal symmetry and both functional equations hold ({count} index pairs, order {order})"))
}

fn criterion_08() -> Result<String, String> {
    for n in 2..=4 {
        let t = AffineType::new(Family::A, n);
        for i in 1..n {
            let fr = check_filtration(t, i);
            if !fr.report.ok() {
                return Err(format!("A n={n} i={i}: filtration fails: {:?}", fr.report));
            }
            if n == 4 && i == 2 && fr.dims != vec![5, 3, 1] {
                return Err(format!("A n=4 i=2: kernel dims {:?} != [5, 3, 1]", fr.dims));
            }
        }
    }
    for n in 2..=3 {
        let t = AffineType::new(Family::C, n);
        for i in 1..=n {
            let fr = check_filtration(t, i);
            if !fr.report.ok() {
                return Err(format!("C n={n} i={i}: filtration fails: {:?}", fr.report));
            }
            let item = check_kernel_intersection_c(n, i);
            if !item.pass {
                return Err(format!("C n={n} i={i}: kernel intersection: {}", item.detail));
            }
        }
    }
    Ok("kernel filtrations terminate in the highest line with the predicted dims".into())
}

fn criterion_09() -> Result<String, String> {
    let mut count = 0;
    for t in [
        AffineType::new(Family::A, 2),
        AffineType::new(Family::A, 3),
        AffineType::new(Family::C, 2),
    ] {
        let bound = 2 * (t.n as i64 + 2);
        for i in t.fundamental_indices() {
            for j in t.fundamental_indices() {
                let rep = check_pole_reducibility(t, i, j, bound);
                if !rep.ok() {
                    return Err(format!("{t:?} ({i},{j}): {rep:?}"));
                }
                count += 1;
            }
        }
    }
    for (k, l) in pairs(AffineType::new(Family::C, 2)) {
        // The witness construction is stated for k >= l.
        let rep = reducibility_witnesses_c(2, l, k);
        if !rep.ok() {
            return Err(format!("C n=2 witnesses ({l},{k}): {rep:?}"));
        }
    }
    let rep = reducibility_witnesses_c(3, 1, 1);
    if !rep.ok() {
        return Err(format!("C n=3 witnesses (1,1): {rep:?}"));
    }
    Ok(format!("denominator roots coincide with tensor reducibility points ({count} pairs)"))
}

fn criterion_10() -> Result<String, String> {
    use qaffine::crystal::share_chamber;
    use qaffine::fund_a::build_crystal_a;
    use qaffine::fund_c::build_crystal_c;
    for t in [
        AffineType::new(Family::A, 2),
        AffineType::new(Family::A, 3),
        AffineType::new(Family::C, 2),
        AffineType::new(Family::C, 3),
    ] {
        for k in t.fundamental_indices() {
            let b = match t.family {
                Family::A => build_crystal_a(t.n, k),
                Family::C => build_crystal_c(t.n, k),
            };
            b.verify_invariants();
            if !b.is_simple() || !b.is_connected() {
                return Err(format!("{t:?} k={k}: crystal not simple/connected"));
            }
        }
    }
    if build_crystal_c(2, 2).len() != 5 || build_crystal_c(3, 2).len() != 14 {
        return Err("symplectic column counts wrong".into());
    }
    for (t, b1, b2) in [
        (AffineType::new(Family::A, 3), build_crystal_a(3, 1), build_crystal_a(3, 2)),
        (AffineType::new(Family::C, 2), build_crystal_c(2, 1), build_crystal_c(2, 2)),
    ] {
        let tens = b1.tensor(&b2);
        tens.verify_invariants();
        let m2 = b2.len();
        for node in 0..tens.len() {
            let (i1, i2) = (node / m2, node % m2);
            let expected = b1.is_extremal(i1)
                && b2.is_extremal(i2)
                && share_chamber(t, &b1.wt[i1], &b2.wt[i2]);
            if tens.is_extremal(node) != expected {
                return Err(format!("{t:?}: extremal criterion fails at node {node}"));
            }
        }
    }
    Ok("crystal axioms, simplicity, counts, and the extremal tensor criterion hold".into())
}

fn criterion_11() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qaffine"))
            .args(["verify", "selftest"])
            .output()
            .expect("failed to spawn CLI")
    };
    let (a, b) = (run(), run());
    if !a.status.success() || !b.status.success() {
        return Err(format!(
            "selftest exit codes: {:?} / {:?}; stderr: {}",
            a.status.code(),
            b.status.code(),
            String::from_utf8_lossy(&a.stderr)
        ));
    }
    if a.stdout != b.stdout {
        return Err("two selftest runs produced different bytes".into());
    }
    Ok("two selftest runs succeed and are byte-identical".into())
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Result<String, String>)> = vec![
        ("01 type A denominators", criterion_01),
        ("02 type C denominators", criterion_02),
        ("03 explicit R and component scalars", criterion_03),
        ("04 defining relations", criterion_04),
        ("05 Yang-Baxter", criterion_05),
        ("06 inversion", criterion_06),
        ("07 functional equations", criterion_07),
        ("08 kernel filtrations", criterion_08),
        ("09 poles vs reducibility", criterion_09),
        ("10 crystal suite", criterion_10),
        ("11 determinism", criterion_11),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|e| Err(format!("panicked: {e:?}")));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                println!("[FAIL] {name}: {detail} ({secs:.1}s)");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
