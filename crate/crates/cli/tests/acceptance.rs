//! One line per acceptance criterion; exits nonzero if any fails.

use hyparr_core::arrangement::{
    is_nondegenerate, make_cox_a, make_cox_b, make_m_catalan, random_deformation_a,
    random_deformation_b, DeformationType, RandomOffsets,
};
use hyparr_core::exactmath::{int, ints, Scalar};
use hyparr_core::expansion::{
    deletion_restriction_check, to_binomial_basis, verify_type_a_expansion,
    verify_type_b_expansion, zaslavsky_check, BasisKind,
};
use hyparr_core::ffcount::{ff_oracle_check, POINT_LIMIT};
use hyparr_core::poset::char_poly;
use hyparr_core::regions::{
    enumerate_regions, exhaustive_sign_vectors, level_profile, mcatalan_level_count,
};
use hyparr_core::{samples, Arrangement, Polynomial, Sign};
use num::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn profile_of(arr: &Arrangement) -> Vec<u64> {
    level_profile(arr).counts().to_vec()
}

fn int_coeffs(values: &[i64]) -> Vec<Scalar> {
    ints(values)
}

fn falling(n: i64, step: i64, start: i64) -> Polynomial {
    (0..n).fold(Polynomial::from_ints(&[1]), |acc, j| {
        &acc * &Polynomial::linear(int(start + step * j))
    })
}

fn random_a_set() -> Vec<Arrangement> {
    (0..50u64)
        .map(|i| {
            let n = 2 + (i % 3) as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + i);
            random_deformation_a(n, &RandomOffsets::default(), &mut rng).unwrap()
        })
        .collect()
}

fn random_b_set() -> Vec<Arrangement> {
    (0..30u64)
        .map(|i| {
            let n = 1 + (i % 3) as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(2000 + i);
            random_deformation_b(n, &RandomOffsets::default(), &mut rng).unwrap()
        })
        .collect()
}

fn coxeter_set() -> Vec<Arrangement> {
    let mut v: Vec<Arrangement> = (2..=5).map(|n| make_cox_a(n).unwrap()).collect();
    v.extend((1..=4).map(|n| make_cox_b(n).unwrap()));
    v
}

fn criterion_1() -> Check {
    let arr = samples::type_a_example();
    let chi = char_poly(&arr);
    ensure(chi == Polynomial::from_ints(&[0, 6, -5, 1]), || format!("chi = {chi}"))?;
    let p = profile_of(&arr);
    ensure(p == [0, 2, 4, 6], || format!("profile {p:?}"))?;
    let e = to_binomial_basis(&chi, BasisKind::StandardBinomial);
    ensure(e.coeffs == int_coeffs(&[0, 2, -4, 6]), || format!("expansion {e}"))?;
    let report = verify_type_a_expansion(&arr).map_err(|e| e.to_string())?;
    ensure(report.pass(), || "verify_type_a_expansion failed".into())?;
    Ok(format!("chi = {chi}, (r1,r2,r3) = (2,4,6), {e}"))
}

fn criterion_2() -> Check {
    let arr = samples::type_b_example();
    let chi = char_poly(&arr);
    ensure(chi == Polynomial::from_ints(&[5, -4, 1]), || format!("chi = {chi}"))?;
    let p = profile_of(&arr);
    ensure(p == [2, 0, 8], || format!("profile {p:?}"))?;
    let e = to_binomial_basis(&chi, BasisKind::ShiftedHalf);
    ensure(e.coeffs == int_coeffs(&[2, 0, 8]), || format!("expansion {e}"))?;
    let report = verify_type_b_expansion(&arr).map_err(|e| e.to_string())?;
    ensure(report.pass(), || "verify_type_b_expansion failed".into())?;
    Ok(format!("chi = {chi}, (r0,r1,r2) = (2,0,8), {e}"))
}

fn criterion_3() -> Check {
    let arr = samples::level_example();
    let chi = char_poly(&arr);
    ensure(chi == Polynomial::from_ints(&[4, -4, 1]), || format!("chi = {chi}"))?;
    let p = profile_of(&arr);
    ensure(p == [1, 2, 6], || format!("profile {p:?}"))?;
    let z = zaslavsky_check(&arr);
    ensure(z.pass && z.region_count == 9 && z.signed_chi_at_minus_one == int(9), || format!("{z:?}"))?;
    Ok(format!("chi = {chi}, profile (1,2,6), zaslavsky 9 = 9"))
}

fn criterion_4() -> Check {
    for n in 2..=5usize {
        let arr = make_cox_a(n).unwrap();
        let chi = char_poly(&arr);
        ensure(chi == falling(n as i64, 1, 0), || format!("Cox_A({n}): chi = {chi}"))?;
        let p = profile_of(&arr);
        let fact: u64 = (1..=n as u64).product();
        ensure(p[n] == fact && p.iter().sum::<u64>() == fact, || format!("Cox_A({n}): profile {p:?}"))?;
    }
    for n in 1..=4usize {
        let arr = make_cox_b(n).unwrap();
        let chi = char_poly(&arr);
        ensure(chi == falling(n as i64, 2, 1), || format!("Cox_B({n}): chi = {chi}"))?;
        let p = profile_of(&arr);
        let count: u64 = (1..=n as u64).product::<u64>() << n;
        ensure(p[n] == count && p.iter().sum::<u64>() == count, || format!("Cox_B({n}): profile {p:?}"))?;
    }
    Ok("Cox_A(2..5) and Cox_B(1..4) exact".into())
}

fn criterion_5() -> Check {
    let set = random_a_set();
    for (i, arr) in set.iter().enumerate() {
        let r = verify_type_a_expansion(arr).map_err(|e| format!("#{i}: {e}"))?;
        ensure(r.pass() && r.expansion.has_integer_coeffs(), || format!("#{i}: {arr}"))?;
    }
    Ok(format!("{} seeded type-A deformations pass", set.len()))
}

fn criterion_6() -> Check {
    let set = random_b_set();
    for (i, arr) in set.iter().enumerate() {
        let r = verify_type_b_expansion(arr).map_err(|e| format!("#{i}: {e}"))?;
        ensure(r.pass() && r.expansion.has_integer_coeffs(), || format!("#{i}: {arr}"))?;
    }
    Ok(format!("{} seeded type-B deformations pass", set.len()))
}

fn criterion_7() -> Check {
    let mut all = vec![samples::type_a_example(), samples::type_b_example(), samples::level_example()];
    all.extend(coxeter_set());
    all.extend(random_a_set());
    all.extend(random_b_set());
    let (mut ff_checked, mut exhaustive_checked, mut skipped_primes) = (0, 0, 0);
    for (i, arr) in all.iter().enumerate() {
        let rows = deletion_restriction_check(arr).map_err(|e| format!("#{i}: {e}"))?;
        ensure(rows.iter().all(|r| r.pass), || format!("#{i}: deletion-restriction fails for {arr}"))?;

        let plan = ff_oracle_check(arr, 2).map_err(|e| format!("#{i}: {e}"))?;
        ensure(plan.all_agree(), || format!("#{i}: finite-field counts disagree: {plan:?}"))?;
        if plan.is_partial() {
            // only acceptable when the next prime would exceed the point limit
            let q = plan.checks.last().map_or(2, |c| c.q);
            ensure((q as f64).powi(arr.dim() as i32) * 2.0 > POINT_LIMIT as f64, || {
                format!("#{i}: too few primes: {plan:?}")
            })?;
        } else {
            ff_checked += 1;
        }
        skipped_primes += plan.skipped.len();

        if arr.len() <= 12 {
            let brute: Vec<Vec<Sign>> =
                exhaustive_sign_vectors(arr).unwrap().into_iter().map(|p| p.0).collect();
            let inc: Vec<Vec<Sign>> = enumerate_regions(arr).into_iter().map(|r| r.signs).collect();
            ensure(brute == inc, || format!("#{i}: exhaustive enumeration differs for {arr}"))?;
            exhaustive_checked += 1;
        }
    }
    Ok(format!(
        "{} arrangements: deletion-restriction all; finite field on {ff_checked} \
         ({skipped_primes} primes skipped for dividing a minor); exhaustive on {exhaustive_checked}",
        all.len()
    ))
}

fn criterion_8() -> Check {
    let mut parts = Vec::new();
    for (n, m) in [(2usize, 1usize), (2, 2), (3, 1)] {
        let p = profile_of(&make_m_catalan(n, m).unwrap());
        ensure(p[0] == 0, || format!("C_{{{n},[{m}]}}: r_0 = {}", p[0]))?;
        for (k, &count) in p.iter().enumerate().skip(1) {
            let want = mcatalan_level_count(n as u64, m as u64, k as u64).map_err(|e| e.to_string())?;
            ensure(BigInt::from(count) == want, || {
                format!("C_{{{n},[{m}]}}: r_{k} = {count} but formula gives {want}")
            })?;
        }
        parts.push(format!("({n},{m}) {:?}", &p[1..]));
    }
    Ok(parts.join(", "))
}

fn criterion_9() -> Check {
    let mut count = 0;
    for i in 0..20u64 {
        let n = 3 + (i % 2) as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(3000 + i);
        let arr = random_deformation_a(n, &RandomOffsets::default(), &mut rng).unwrap();
        count += restriction_closure(&arr, DeformationType::A)?;
    }
    for i in 0..20u64 {
        let n = 2 + (i % 2) as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(4000 + i);
        let arr = random_deformation_b(n, &RandomOffsets::default(), &mut rng).unwrap();
        count += restriction_closure(&arr, DeformationType::B)?;
    }
    Ok(format!("40 arrangements, {count} restrictions non-degenerate"))
}

fn restriction_closure(arr: &Arrangement, kind: DeformationType) -> Result<usize, String> {
    for i in 0..arr.len() {
        let (r, _) = arr.restrict(i).map_err(|e| e.to_string())?;
        let report = is_nondegenerate(&r, kind);
        ensure(r.dim() + 1 == arr.dim() && report.is_ok(), || {
            format!("{arr} restricted to H{}: {report}", i + 1)
        })?;
    }
    Ok(arr.len())
}

fn criterion_10() -> Check {
    let exe = env!("CARGO_BIN_EXE_hyparr");
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let a = dir.join("example_a.json");
    let a = a.to_str().unwrap();
    let tmp = std::env::temp_dir().join(format!("hyparr-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).map_err(|e| e.to_string())?;
    let run = |args: &[&str]| Command::new(exe).args(args).output().map_err(|e| e.to_string());

    let mut outputs = Vec::new();
    for round in 0..2 {
        let svg = tmp.join(format!("a{round}.svg"));
        let mut bytes = Vec::new();
        for args in [
            vec!["chi", a, "--basis=binomial"],
            vec!["levels", a, "--regions"],
            vec!["verify", a, "--theorem=A"],
            vec!["verify", a, "--theorem=A", "--json"],
        ] {
            let o = run(&args)?;
            ensure(o.status.code() == Some(0), || format!("{args:?} exited {:?}", o.status.code()))?;
            bytes.push(o.stdout);
        }
        let o = run(&["render", a, "--output", svg.to_str().unwrap()])?;
        ensure(o.status.success(), || "render failed".into())?;
        bytes.push(std::fs::read(&svg).map_err(|e| e.to_string())?);
        outputs.push(bytes);
    }
    ensure(outputs[0] == outputs[1], || "outputs differ between runs".into())?;
    let chi_line = String::from_utf8_lossy(&outputs[0][0]).lines().next().unwrap_or("").to_string();
    ensure(chi_line == "t^3 - 5t^2 + 6t", || format!("chi printed {chi_line:?}"))?;

    let cut = tmp.join("cut.json");
    std::fs::write(
        &cut,
        r#"{"ambient_dim": 3, "hyperplanes": [
            {"normal": [0, 1, -1], "offset": "0"},
            {"normal": [1, 0, -1], "offset": "1"},
            {"normal": [1, 0, -1], "offset": "0"}], "kind": "typeA"}"#,
    )
    .map_err(|e| e.to_string())?;
    let o = run(&["verify", cut.to_str().unwrap(), "--theorem=A"])?;
    let stderr = String::from_utf8_lossy(&o.stderr).to_string();
    ensure(o.status.code() == Some(3) && stderr.contains("degenerate: missing direction (1,2)"), || {
        format!("degenerate input: status {:?}, stderr {stderr:?}", o.status.code())
    })?;

    let bad = tmp.join("bad.json");
    std::fs::write(&bad, r#"{"ambient_dim": 3, "hyperplanes": [{"normal": [1, "x", 0], "offset": "0"}]}"#)
        .map_err(|e| e.to_string())?;
    let o = run(&["verify", bad.to_str().unwrap(), "--theorem=A"])?;
    ensure(o.status.code() == Some(2), || format!("malformed input exited {:?}", o.status.code()))?;

    for t in ["A", "zaslavsky", "deletion-restriction", "ff"] {
        let o = run(&["verify", a, "--theorem", t, "--json"])?;
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
        ensure(v["pass"].as_bool() == Some(o.status.code() == Some(0)), || {
            format!("--theorem={t}: pass flag and exit status disagree")
        })?;
    }
    let _ = std::fs::remove_dir_all(&tmp);
    Ok("chi, levels, verify, render byte-stable; exit statuses 0/2/3 as specified".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "golden example A", criterion_1),
        (2, "golden example B", criterion_2),
        (3, "golden planar level example", criterion_3),
        (4, "Coxeter base cases", criterion_4),
        (5, "type-A expansion on 50 random deformations", criterion_5),
        (6, "type-B expansion on 30 random deformations", criterion_6),
        (7, "oracle triangulation", criterion_7),
        (8, "m-Catalan level formula", criterion_8),
        (9, "restriction closure", criterion_9),
        (10, "CLI contract", criterion_10),
    ];
    let started = Instant::now();
    let mut failed = 0;
    for (id, name, run) in criteria {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {id:>2} PASS  {name} ({secs:.1}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name} ({secs:.1}s): {detail}");
            }
        }
    }
    println!(
        "acceptance: {} of 10 criteria pass in {:.1}s",
        10 - failed,
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
