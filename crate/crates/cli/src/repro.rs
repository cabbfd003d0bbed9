//! The full reproduction run: every acceptance criterion, one JSON record
//! each. Heavy ranks (the eleven- and twelve-letter groups and B:8) only
//! run behind `--extended`.

use std::path::PathBuf;

use num::BigRational;
use serde::Serialize;

use coxstat::analysis::{
    self, build_involution, lift_involution_classical, rational_string, witness_families,
    DescentClassMode,
};
use coxstat::bigcox::{enumerate_group, CoxeterMatrix, GenericStatistic, DEFAULT_ENUM_CAP};
use coxstat::enumerate::{materialize, run_with_threads, GroupUniverse};
use coxstat::groups::{Family, GenSet, GroupDescriptor, SignedPermutation};
use coxstat::posets::FiniteGradedPoset;
use coxstat::statistics::Statistic;
use coxstat::Result;

use crate::common::emit;

const CAP: u64 = 1 << 33;

#[derive(Serialize)]
struct CriterionOutcome {
    id: u32,
    name: String,
    status: &'static str,
    details: serde_json::Value,
}

#[derive(Serialize)]
struct Report {
    extended: bool,
    all_pass: bool,
    criteria: Vec<CriterionOutcome>,
}

fn outcome(id: u32, name: &str, pass: bool, details: serde_json::Value) -> CriterionOutcome {
    CriterionOutcome {
        id,
        name: name.to_string(),
        status: if pass { "pass" } else { "fail" },
        details,
    }
}

fn descriptor(family: Family, window: usize) -> GroupDescriptor {
    GroupDescriptor::new(family, window).unwrap()
}

fn pair(d: GroupDescriptor, f: &str, g: &str) -> Result<(GroupUniverse, Statistic, Statistic)> {
    Ok((
        GroupUniverse::with_cap(d, CAP)?,
        Statistic::resolve(d, f)?,
        Statistic::resolve(d, g)?,
    ))
}

fn criterion_1(extended: bool) -> Result<CriterionOutcome> {
    let stated: &[usize] = if extended {
        &[1, 3, 5, 9, 15, 21, 29, 39, 49, 51, 63]
    } else {
        &[1, 3, 5, 9, 15, 21, 29, 39, 49]
    };
    let top = if extended { 12 } else { 10 };
    let mut computed = Vec::new();
    for window in 2..=top {
        let d = descriptor(Family::A, window);
        let (u, len, maj) = pair(d, "len", "maj")?;
        computed.push(analysis::diff_image(&u, |w| len.eval(w), |w| maj.eval(w)).len());
    }
    let pass = computed == stated;
    Ok(outcome(
        1,
        "difference-image sequence in type A",
        pass,
        serde_json::json!({
            "stated": stated,
            "computed": computed,
            "note": if pass { "" } else {
                "computed values diverge from the stated tail; \
                 the computed values are certified by dual-route tests"
            },
        }),
    ))
}

fn criterion_2() -> Result<CriterionOutcome> {
    let mut sizes = Vec::new();
    let mut pass = true;
    for n in 1..=7usize {
        let d = descriptor(Family::A, n + 1);
        let (u, len, maj) = pair(d, "len", "maj")?;
        let size = analysis::sum_image(&u, |w| len.eval(w), |w| maj.eval(w)).len();
        pass &= size == if n == 1 { 2 } else { n * (n + 1) - 1 };
        sizes.push(size);
    }
    let mut witness_pass = true;
    for n in 2..=7 {
        witness_pass &= witness_families(n)?.verify().all_pass();
    }
    Ok(outcome(
        2,
        "sum-image counts and witness families in type A",
        pass && witness_pass,
        serde_json::json!({"sum_image_sizes": sizes, "witness_claims_pass": witness_pass}),
    ))
}

fn criterion_3() -> Result<CriterionOutcome> {
    let mut pass = true;
    let mut sizes = Vec::new();
    for n in 2..=5usize {
        let d = descriptor(Family::B, n);
        let (u, len, nmaj) = pair(d, "len", "nmaj")?;
        let size = analysis::sum_image(&u, |w| len.eval(w), |w| nmaj.eval(w)).len();
        pass &= size == if n == 2 { 5 } else { 2 * n * n - 1 };
        sizes.push(size);
        if n >= 3 {
            let diff_b = analysis::diff_image(&u, |w| len.eval(w), |w| nmaj.eval(w));
            let a = descriptor(Family::A, n);
            let (ua, la, ma) = pair(a, "len", "maj")?;
            let diff_a = analysis::diff_image(&ua, |w| la.eval(w), |w| ma.eval(w));
            pass &= diff_b == diff_a;
        }
    }
    Ok(outcome(
        3,
        "type B sum images and difference-image transport",
        pass,
        serde_json::json!({"sum_image_sizes": sizes}),
    ))
}

fn criterion_4(extended: bool) -> Result<CriterionOutcome> {
    let stated: &[usize] = if extended {
        &[3, 7, 15, 25, 39, 55, 75]
    } else {
        &[3, 7, 15, 25, 39, 55]
    };
    let top = if extended { 8 } else { 7 };
    let mut computed = Vec::new();
    for n in 2..=top {
        let d = descriptor(Family::B, n);
        let (u, len, fmaj) = pair(d, "len", "fmaj")?;
        computed.push(analysis::diff_image(&u, |w| len.eval(w), |w| fmaj.eval(w)).len());
    }
    Ok(outcome(
        4,
        "flag-major difference-image sequence in type B",
        computed == stated,
        serde_json::json!({"stated": stated, "computed": computed}),
    ))
}

fn criterion_5() -> Result<CriterionOutcome> {
    let (ub, fmaj, len_b) = pair(descriptor(Family::B, 3), "fmaj", "len")?;
    let b = analysis::ratio_sum_check(&ub, |w| fmaj.eval(w), |w| len_b.eval(w));
    let (ud, dmaj_u, len_d) = pair(descriptor(Family::D, 4), "Dmaj", "len")?;
    let d = analysis::ratio_sum_check(&ud, |w| dmaj_u.eval(w), |w| len_d.eval(w));
    let rational = |n: i64, den: i64| BigRational::new(n.into(), den.into());
    let pass = b.forward == rational(22303, 420)
        && b.backward == rational(14731, 280)
        && !b.equal
        && d.forward == rational(6451033, 27720)
        && d.backward == rational(829573, 3465)
        && !d.equal;
    Ok(outcome(
        5,
        "exact ratio sums on B:3 and D:4",
        pass,
        serde_json::json!({
            "B3": [rational_string(&b.forward), rational_string(&b.backward)],
            "D4": [rational_string(&d.forward), rational_string(&d.backward)],
        }),
    ))
}

fn symmetry_cases() -> Vec<(GroupDescriptor, &'static str, bool)> {
    let mut cases = Vec::new();
    for n in 2..=6 {
        cases.push((descriptor(Family::A, n), "maj", true));
    }
    for n in 2..=4 {
        cases.push((descriptor(Family::B, n), "nmaj", true));
    }
    for n in 4..=5 {
        cases.push((descriptor(Family::D, n), "dmaj", true));
    }
    cases.push((descriptor(Family::B, 3), "fmaj", false));
    cases.push((descriptor(Family::D, 4), "Dmaj", false));
    cases
}

fn criterion_6() -> Result<CriterionOutcome> {
    let mut pass = true;
    let mut rows = Vec::new();
    for (d, name, expected) in symmetry_cases() {
        let (u, f, len) = pair(d, name, "len")?;
        let symmetric = analysis::is_symmetric_pair(&u, |w| f.eval(w), |w| len.eval(w));
        pass &= symmetric == expected;
        rows.push(serde_json::json!({
            "group": d.to_string(), "stat": name,
            "symmetric": symmetric, "expected": expected,
        }));
    }
    Ok(outcome(6, "symmetric pairs", pass, serde_json::json!(rows)))
}

fn criterion_7() -> Result<CriterionOutcome> {
    let mut pass = true;
    for n in 2..=6usize {
        let d = descriptor(Family::A, n);
        let (u, maj, len) = pair(d, "maj", "len")?;
        let iota = build_involution(&u, |w| maj.eval(w), |w| len.eval(w))?;
        let fv = materialize(d, CAP, |w| maj.eval(w))?;
        let gv = materialize(d, CAP, |w| len.eval(w))?;
        pass &= iota.exchanges(&fv, &gv);
    }
    let lift_cases = [
        (descriptor(Family::B, 2), "nmaj"),
        (descriptor(Family::B, 3), "nmaj"),
        (descriptor(Family::B, 4), "nmaj"),
        (descriptor(Family::D, 4), "dmaj"),
        (descriptor(Family::D, 5), "dmaj"),
    ];
    for (d, name) in lift_cases {
        let n = d.window();
        let model = descriptor(Family::A, n);
        let (um, maj, len) = pair(model, "maj", "len")?;
        let base = build_involution(&um, |w| maj.eval(w), |w| len.eval(w))?;
        let lifted = lift_involution_classical(d, (1..n).collect::<GenSet>(), &base, CAP)?;
        let stat = Statistic::resolve(d, name)?;
        let fv = materialize(d, CAP, |w| stat.eval(w))?;
        let gv = materialize(d, CAP, |w| w.length() as i64)?;
        pass &= lifted.exchanges(&fv, &gv);
    }
    for (d, name, expected) in symmetry_cases() {
        let (u, f, len) = pair(d, name, "len")?;
        let built = build_involution(&u, |w| f.eval(w), |w| len.eval(w));
        pass &= match built {
            Ok(iota) => {
                let fv = materialize(d, CAP, |w| f.eval(w))?;
                let gv = materialize(d, CAP, |w| len.eval(w))?;
                expected && iota.exchanges(&fv, &gv)
            }
            Err(coxstat::Error::NotSymmetric) => !expected,
            Err(_) => false,
        };
    }
    Ok(outcome(
        7,
        "involution synthesis, lifts and the symmetry equivalence",
        pass,
        serde_json::json!({}),
    ))
}

fn criterion_8() -> Result<CriterionOutcome> {
    let d = descriptor(Family::A, 4);
    let f = Statistic::resolve(d, "induced:maj:{s1,s2}:right")?;
    let listed: &[(&str, i64)] = &[
        ("1,4,2,3", 3),
        ("2,1,4,3", 2),
        ("4,1,2,3", 2),
        ("2,4,1,3", 3),
        ("4,2,1,3", 4),
        ("1,4,3,2", 4),
        ("3,1,4,2", 3),
        ("4,1,3,2", 3),
        ("3,4,1,2", 4),
        ("4,3,1,2", 5),
        ("2,4,3,1", 5),
        ("3,2,4,1", 4),
        ("4,2,3,1", 4),
        ("3,4,2,1", 5),
        ("4,3,2,1", 6),
    ];
    let mut pass = true;
    for (text, expected) in listed {
        let w = SignedPermutation::parse(d, text)?;
        pass &= f.eval(&w) == *expected;
    }
    // boundary rules
    let u = GroupUniverse::with_cap(d, CAP)?;
    let subset = GenSet::from_iter([1usize, 2]);
    coxstat::enumerate::Splittable::scan(&u, 0, u.order(), &mut |w: &SignedPermutation| {
        if listed.iter().any(|(t, _)| &w.to_string() == t) {
            return;
        }
        if w.value(4) == 4 {
            pass &= f.eval(w) == coxstat::statistics::maj(w) as i64;
        } else {
            let fact = coxstat::groups::parabolic_decompose(w, subset).unwrap();
            pass &= fact.parabolic().is_identity() && f.eval(w) == w.length() as i64;
        }
    });
    Ok(outcome(
        8,
        "worked induced statistic on the four-letter group",
        pass,
        serde_json::json!({"listed_values": listed.len()}),
    ))
}

fn criterion_9() -> Result<CriterionOutcome> {
    let mut pass = true;
    for n in 2..=6usize {
        let d = descriptor(Family::A, n);
        let len = Statistic::length(d);
        let majstar = Statistic::resolve(d, "majstar")?;
        pass &= coxstat::analysis::descent_classes_equidistributed(
            d,
            DescentClassMode::Descents,
            CAP,
            |w| len.eval(w),
            |w| majstar.eval(w),
        )?
        .is_ok();
        let (u, maj, _) = pair(d, "maj", "len")?;
        let lhs = analysis::joint_distribution(&u, |w| len.eval(w), |w| maj.eval(w));
        let rhs = analysis::joint_distribution(&u, |w| majstar.eval(w), |w| maj.eval(w));
        pass &= lhs == rhs;
    }
    for n in 2..=4usize {
        let d = descriptor(Family::B, n);
        let len = Statistic::length(d);
        let nmajstar = Statistic::resolve(d, "nmajstar")?;
        pass &= coxstat::analysis::descent_classes_equidistributed(
            d,
            DescentClassMode::DescentsAndNegatives,
            CAP,
            |w| len.eval(w),
            |w| nmajstar.eval(w),
        )?
        .is_ok();
        let (u, fmaj, _) = pair(d, "fmaj", "len")?;
        let lhs = analysis::joint_distribution(&u, |w| len.eval(w), |w| fmaj.eval(w));
        let rhs = analysis::joint_distribution(&u, |w| nmajstar.eval(w), |w| fmaj.eval(w));
        pass &= lhs == rhs;
    }
    Ok(outcome(
        9,
        "descent-class equidistributions and bivariate identities",
        pass,
        serde_json::json!({}),
    ))
}

fn criterion_10() -> Result<CriterionOutcome> {
    let chain = FiniteGradedPoset::chain(8)?;
    let f: Vec<i64> = vec![0, 3, 1, 6, 5, 4, 2, 7];
    let rho = chain.rank_vector();
    let ratio = analysis::ratio_sum_check(&chain, |&i| f[i as usize], |&i| rho[i as usize]);
    let symmetric = analysis::is_symmetric_pair(&chain, |&i| f[i as usize], |&i| rho[i as usize]);
    Ok(outcome(
        10,
        "eight-chain ratio equality without symmetry",
        ratio.equal && !symmetric,
        serde_json::json!({
            "ratio": rational_string(&ratio.forward),
            "symmetric": symmetric,
        }),
    ))
}

fn criterion_11() -> Result<CriterionOutcome> {
    let mut pass = true;
    let mut rows = Vec::new();
    let cases: &[(&str, u64, &str)] = &[
        ("I2:5", 10, "induced:len:{s1,s2}:right"),
        ("H3", 120, "induced:maj:{s1,s2}:right"),
        ("F4", 1152, "induced:fmaj:{s1,s2,s3}:right"),
        ("E6", 51840, "induced:maj:{s3,s4,s5,s6}:right"),
    ];
    for (preset, order, stat_name) in cases {
        let grp = std::sync::Arc::new(enumerate_group(
            &CoxeterMatrix::preset(preset)?,
            DEFAULT_ENUM_CAP,
        )?);
        let order_ok = grp.order() == *order;
        let length = analysis::distribution(grp.as_ref(), |&i| grp.length(i) as i64);
        let reciprocal = length.is_reciprocal();
        let stat = GenericStatistic::resolve(&grp, stat_name)?;
        let induced = analysis::distribution(grp.as_ref(), |&i| stat.eval(i));
        let equal = induced == length;
        pass &= order_ok && reciprocal && equal;
        rows.push(serde_json::json!({
            "preset": preset, "order": grp.order(),
            "reciprocal": reciprocal, "induced_equidistributed": equal,
        }));
    }
    Ok(outcome(
        11,
        "generic engine inductions through E6",
        pass,
        serde_json::json!(rows),
    ))
}

fn criterion_12() -> Result<CriterionOutcome> {
    let (value, consistent) = crate::verify::probe_d4()?;
    Ok(outcome(
        12,
        "two-route D:4 sum-image probe",
        consistent,
        serde_json::json!({
            "computed": value,
            "stated_in_source": 3,
            "formula_value": 23,
        }),
    ))
}

fn determinism_blob() -> Result<String> {
    let mut out = String::new();
    for window in 2..=8usize {
        let d = descriptor(Family::A, window);
        let (u, len, maj) = pair(d, "len", "maj")?;
        let analysis = analysis::image_analysis(&u, |w| len.eval(w), |w| maj.eval(w));
        out.push_str(&format!(
            "A:{window} {:?} {:?} {} {}\n",
            analysis.image_diff,
            analysis.image_sum,
            analysis.k_plus(),
            analysis.k_minus()
        ));
    }
    for window in 2..=6usize {
        let d = descriptor(Family::B, window);
        let (u, len, nmaj) = pair(d, "len", "nmaj")?;
        let with_nmaj = analysis::image_analysis(&u, |w| len.eval(w), |w| nmaj.eval(w));
        let fmaj = Statistic::resolve(d, "fmaj")?;
        let with_fmaj = analysis::image_analysis(&u, |w| len.eval(w), |w| fmaj.eval(w));
        out.push_str(&format!(
            "B:{window} {:?} {:?}\n",
            with_nmaj.image_sum, with_fmaj.image_diff
        ));
    }
    Ok(out)
}

fn criterion_13() -> Result<CriterionOutcome> {
    let reference = run_with_threads(1, determinism_blob)?;
    let mut pass = true;
    for threads in [2usize, 4, 8] {
        pass &= run_with_threads(threads, determinism_blob)? == reference;
    }
    Ok(outcome(
        13,
        "bit-identical sweep outputs at 1, 2, 4 and 8 workers",
        pass,
        serde_json::json!({
            "parallel_build": cfg!(feature = "parallel"),
        }),
    ))
}

pub fn run(extended: bool, out: &Option<PathBuf>) -> Result<bool> {
    let criteria = vec![
        criterion_1(extended)?,
        criterion_2()?,
        criterion_3()?,
        criterion_4(extended)?,
        criterion_5()?,
        criterion_6()?,
        criterion_7()?,
        criterion_8()?,
        criterion_9()?,
        criterion_10()?,
        criterion_11()?,
        criterion_12()?,
        criterion_13()?,
    ];
    let all_pass = criteria.iter().all(|c| c.status == "pass");
    let report = Report {
        extended,
        all_pass,
        criteria,
    };
    emit(
        out,
        &format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
    )?;
    Ok(all_pass)
}
