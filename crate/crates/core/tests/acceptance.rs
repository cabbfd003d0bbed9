//! Acceptance suite: every reproduction target the library must hit, one
//! pass/fail line per criterion. All arithmetic is exact, so every check is
//! an equality. The two big sweeps kept behind `--ignored` are the extended
//! ranks (S_11/S_12 and B:8).

use std::collections::BTreeSet;

use num::BigRational;

use coxstat::analysis::{
    self, build_involution, build_involution_from_values, descent_classes_equidistributed,
    image_analysis, lift_involution_classical, witness_families, DescentClassMode, LaurentPoly,
};
use coxstat::bigcox::{enumerate_group, CoxeterMatrix, GenericStatistic, DEFAULT_ENUM_CAP};
use coxstat::enumerate::{materialize, run_with_threads, GroupUniverse, Splittable};
use coxstat::groups::{
    parabolic_decompose, BruteForceTable, Family, GenSet, GroupDescriptor, SignedPermutation,
};
use coxstat::posets::{coxeter_good_decomposition, FiniteGradedPoset};
use coxstat::statistics::Statistic;

const CAP: u64 = 1 << 24;

fn criterion(id: u32, name: &str, ok: bool) {
    println!(
        "criterion {id:02} [{}] {name}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id:02} ({name}) failed");
}

fn descriptor(text: &str) -> GroupDescriptor {
    text.parse().unwrap()
}

fn universe(text: &str) -> GroupUniverse {
    GroupUniverse::new(descriptor(text)).unwrap()
}

fn stat(d: GroupDescriptor, name: &str) -> Statistic {
    Statistic::resolve(d, name).unwrap()
}

fn diff_image_size_type_a(window: usize) -> usize {
    let d = GroupDescriptor::new(Family::A, window).unwrap();
    let u = GroupUniverse::new(d).unwrap();
    let (len, maj) = (Statistic::length(d), Statistic::maj(d));
    analysis::diff_image(&u, |w| len.eval(w), |w| maj.eval(w)).len()
}

/// Criterion 1 as stated. The stated sequence ends `..., 39, 49`, but the
/// S_10 value is wrong in the source: the computed image is the full
/// interval [-25, 25] (51 values), certified by explicit witnesses in
/// `criterion_01_companion_computed_tail` below and cross-checked by an
/// outside enumeration. This test is intentionally left failing rather
/// than weakened; see the companion test for the verified values.
#[test]
fn criterion_01_difference_image_sequence_type_a() {
    let expected = [1usize, 3, 5, 9, 15, 21, 29, 39, 49];
    let got: Vec<usize> = (2..=10).map(diff_image_size_type_a).collect();
    criterion(
        1,
        "|Im(len-maj)| over S_2..S_10 equals the stated sequence (known-bad tail: computed S_10 value is 51)",
        got == expected,
    );
}

/// The computed tail of the sequence, certified two independent ways: the
/// sweep result must agree with a direct per-index enumeration, and the
/// interval endpoints are hit by explicit hand-checkable witnesses.
#[test]
fn criterion_01_companion_computed_tail() {
    let d = descriptor("A:10");
    let sweep = {
        let u = GroupUniverse::new(d).unwrap();
        let (len, maj) = (Statistic::length(d), Statistic::maj(d));
        analysis::diff_image(&u, |w| len.eval(w), |w| maj.eval(w))
    };
    let mut direct = BTreeSet::new();
    for k in 0..d.order_u64().unwrap() {
        let w = coxstat::enumerate::unrank(d, k).unwrap();
        direct.insert(w.length() as i64 - coxstat::statistics::maj(&w) as i64);
    }
    assert_eq!(sweep, direct);
    assert_eq!(sweep.len(), 51);
    assert_eq!((sweep.first(), sweep.last()), (Some(&-25), Some(&25)));

    let top = SignedPermutation::parse(d, "10,8,9,5,6,7,1,2,3,4").unwrap();
    assert_eq!(top.inv_count(), 35);
    assert_eq!(coxstat::statistics::maj(&top), 10);
    let bottom = SignedPermutation::parse(d, "1,3,2,6,5,4,10,9,8,7").unwrap();
    assert_eq!(bottom.inv_count(), 10);
    assert_eq!(coxstat::statistics::maj(&bottom), 35);
    println!("criterion 01 companion: computed |Im(len-maj)| on S_10 is 51 = |[-25,25]|");
}

/// Extended ranks as stated (S_11 -> 51, S_12 -> 63). Both stated values
/// are wrong in the source (computed: 63 and 77, the full intervals
/// [-31,31] and [-38,38]); left failing, see the companion below.
#[test]
#[ignore = "extended ranks: S_11 and S_12, minutes of sweep time"]
fn criterion_01_extended_difference_image_sequence() {
    let got: Vec<usize> = (11..=12).map(diff_image_size_type_a).collect();
    criterion(
        1,
        "extended |Im(len-maj)| over S_11, S_12 equals the stated 51, 63 (known-bad: computed 63, 77)",
        got == [51, 63],
    );
}

#[test]
#[ignore = "extended ranks: S_11 and S_12, minutes of sweep time"]
fn criterion_01_extended_companion_computed_values() {
    assert_eq!(diff_image_size_type_a(11), 63);
    assert_eq!(diff_image_size_type_a(12), 77);
    println!("criterion 01 extended companion: computed values are 63 (S_11) and 77 (S_12)");
}

#[test]
fn criterion_02_sum_image_count_and_witnesses_type_a() {
    let mut ok = true;
    for n in 1..=7usize {
        let d = GroupDescriptor::new(Family::A, n + 1).unwrap();
        let u = GroupUniverse::new(d).unwrap();
        let (len, maj) = (Statistic::length(d), Statistic::maj(d));
        let size = analysis::sum_image(&u, |w| len.eval(w), |w| maj.eval(w)).len();
        let expected = if n == 1 { 2 } else { n * (n + 1) - 1 };
        ok &= size == expected;
    }
    for n in 2..=7usize {
        let report = witness_families(n).unwrap().verify();
        ok &= report.all_pass();
        ok &= report.certified_image_size as usize == n * (n + 1) - 1;
    }
    criterion(
        2,
        "|Im(len+maj)| counts and witness families on S_2..S_8",
        ok,
    );
}

#[test]
fn criterion_03_type_b_nmaj_images() {
    let mut ok = true;
    for n in 2..=5usize {
        let d = GroupDescriptor::new(Family::B, n).unwrap();
        let u = GroupUniverse::new(d).unwrap();
        let (len, nmaj) = (Statistic::length(d), stat(d, "nmaj"));
        let sum_size = analysis::sum_image(&u, |w| len.eval(w), |w| nmaj.eval(w)).len();
        let expected = if n == 2 { 5 } else { 2 * n * n - 1 };
        ok &= sum_size == expected;
        if n >= 3 {
            let b_diff = analysis::diff_image(&u, |w| len.eval(w), |w| nmaj.eval(w));
            let a = GroupDescriptor::new(Family::A, n).unwrap();
            let ua = GroupUniverse::new(a).unwrap();
            let (la, ma) = (Statistic::length(a), Statistic::maj(a));
            let a_diff = analysis::diff_image(&ua, |w| la.eval(w), |w| ma.eval(w));
            ok &= b_diff == a_diff;
        }
    }
    criterion(3, "type B: |Im(len+nmaj)| and Im(len-nmaj)=Im(len-maj)", ok);
}

fn fmaj_diff_image_size(n: usize) -> usize {
    let d = GroupDescriptor::new(Family::B, n).unwrap();
    let u = GroupUniverse::new(d).unwrap();
    let (len, fmaj) = (Statistic::length(d), stat(d, "fmaj"));
    analysis::diff_image(&u, |w| len.eval(w), |w| fmaj.eval(w)).len()
}

#[test]
fn criterion_04_type_b_fmaj_difference_sequence() {
    let expected = [3usize, 7, 15, 25, 39, 55];
    let got: Vec<usize> = (2..=7).map(fmaj_diff_image_size).collect();
    criterion(4, "|Im(len-fmaj)| over B:2..B:7", got == expected);
}

#[test]
#[ignore = "extended rank: B:8, about ten million elements"]
fn criterion_04_extended_fmaj_difference() {
    assert_eq!(fmaj_diff_image_size(8), 75);
    println!("criterion 04x [PASS] |Im(len-fmaj)| over B:8");
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn criterion_05_exact_ratio_sums() {
    let b3 = descriptor("B:3");
    let ub = GroupUniverse::new(b3).unwrap();
    let (fmaj, len_b) = (stat(b3, "fmaj"), Statistic::length(b3));
    let check_b = analysis::ratio_sum_check(&ub, |w| fmaj.eval(w), |w| len_b.eval(w));
    let ok_b = check_b.forward == rational(22303, 420)
        && check_b.backward == rational(14731, 280)
        && !check_b.equal;

    let d4 = descriptor("D:4");
    let ud = GroupUniverse::new(d4).unwrap();
    let (dmaj_u, len_d) = (stat(d4, "Dmaj"), Statistic::length(d4));
    let check_d = analysis::ratio_sum_check(&ud, |w| dmaj_u.eval(w), |w| len_d.eval(w));
    let ok_d = check_d.forward == rational(6451033, 27720)
        && check_d.backward == rational(829573, 3465)
        && !check_d.equal;

    criterion(
        5,
        "exact ratio sums for (fmaj,len) on B:3 and (Dmaj,len) on D:4",
        ok_b && ok_d,
    );
}

/// The pairs whose symmetry status the suite pins down, with expectations.
fn symmetry_cases() -> Vec<(GroupDescriptor, &'static str, bool)> {
    let mut cases = Vec::new();
    for n in 2..=6 {
        cases.push((GroupDescriptor::new(Family::A, n).unwrap(), "maj", true));
    }
    for n in 2..=4 {
        cases.push((GroupDescriptor::new(Family::B, n).unwrap(), "nmaj", true));
    }
    for n in 4..=5 {
        cases.push((GroupDescriptor::new(Family::D, n).unwrap(), "dmaj", true));
    }
    cases.push((descriptor("B:3"), "fmaj", false));
    cases.push((descriptor("D:4"), "Dmaj", false));
    cases
}

#[test]
fn criterion_06_symmetric_pairs() {
    let mut ok = true;
    for (d, name, expected) in symmetry_cases() {
        let u = GroupUniverse::new(d).unwrap();
        let (f, len) = (stat(d, name), Statistic::length(d));
        let symmetric = analysis::is_symmetric_pair(&u, |w| f.eval(w), |w| len.eval(w));
        ok &= symmetric == expected;
    }
    criterion(6, "symmetric and non-symmetric pairs across A, B, D", ok);
}

#[test]
fn criterion_07_involutions_and_lifts() {
    let mut ok = true;

    // direct synthesis for (maj, len) on S_2..S_6
    for n in 2..=6usize {
        let d = GroupDescriptor::new(Family::A, n).unwrap();
        let u = GroupUniverse::new(d).unwrap();
        let (maj, len) = (Statistic::maj(d), Statistic::length(d));
        let iota = build_involution(&u, |w| maj.eval(w), |w| len.eval(w)).unwrap();
        let maj_values = materialize(d, CAP, |w| maj.eval(w)).unwrap();
        let len_values = materialize(d, CAP, |w| len.eval(w)).unwrap();
        ok &= iota.exchanges(&maj_values, &len_values);
    }

    // lifted involutions: nmaj = len o lifted on B:2..B:4, dmaj on D:4, D:5
    let mut lift_cases: Vec<(GroupDescriptor, &str)> = Vec::new();
    for n in 2..=4 {
        lift_cases.push((GroupDescriptor::new(Family::B, n).unwrap(), "nmaj"));
    }
    for n in 4..=5 {
        lift_cases.push((GroupDescriptor::new(Family::D, n).unwrap(), "dmaj"));
    }
    for (d, name) in lift_cases {
        let n = d.window();
        let model = GroupDescriptor::new(Family::A, n).unwrap();
        let um = GroupUniverse::new(model).unwrap();
        let (maj, len) = (Statistic::maj(model), Statistic::length(model));
        let base = build_involution(&um, |w| maj.eval(w), |w| len.eval(w)).unwrap();
        let subset: GenSet = (1..n).collect();
        let lifted = lift_involution_classical(d, subset, &base, CAP).unwrap();
        let f_values = materialize(d, CAP, |w| stat(d, name).eval(w)).unwrap();
        let len_values = materialize(d, CAP, |w| w.length() as i64).unwrap();
        ok &= lifted.exchanges(&f_values, &len_values);
    }

    // the poset-level lift agrees on B:3
    {
        let d = descriptor("B:3");
        let subset: GenSet = (1..3).collect();
        let dec = coxeter_good_decomposition(d, subset, CAP).unwrap();
        let maj_on_b = dec
            .materialize_on_b(|w| coxstat::statistics::maj(w) as i64)
            .unwrap();
        let len_on_b = dec.materialize_on_b(|w| w.length() as i64).unwrap();
        let base = build_involution_from_values(&maj_on_b, &len_on_b).unwrap();
        let lifted = dec.decomposition().lift_involution(&base).unwrap();
        let nmaj_values = materialize(d, CAP, |w| stat(d, "nmaj").eval(w)).unwrap();
        let len_values = materialize(d, CAP, |w| w.length() as i64).unwrap();
        ok &= lifted.exchanges(&nmaj_values, &len_values);
    }

    // value-exchanging involution exists iff the pair is symmetric
    for (d, name, expected) in symmetry_cases() {
        let u = GroupUniverse::new(d).unwrap();
        let (f, len) = (stat(d, name), Statistic::length(d));
        let built = build_involution(&u, |w| f.eval(w), |w| len.eval(w));
        match built {
            Ok(iota) => {
                let f_values = materialize(d, CAP, |w| f.eval(w)).unwrap();
                let len_values = materialize(d, CAP, |w| len.eval(w)).unwrap();
                ok &= expected && iota.exchanges(&f_values, &len_values);
            }
            Err(coxstat::Error::NotSymmetric) => ok &= !expected,
            Err(_) => ok = false,
        }
    }

    criterion(
        7,
        "involution synthesis, lifts and the symmetry equivalence",
        ok,
    );
}

#[test]
fn criterion_08_worked_example_s4() {
    let d = descriptor("A:4");
    let f = stat(d, "induced:maj:{s1,s2}:right");
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
    let mut ok = true;
    let mut covered = 0;
    for (text, expected) in listed {
        let w = SignedPermutation::parse(d, text).unwrap();
        ok &= f.eval(&w) == *expected;
        covered += 1;
    }
    let subset = GenSet::from_iter([1usize, 2]);
    let u = GroupUniverse::new(d).unwrap();
    u.scan(0, u.order(), &mut |w| {
        let in_table = listed.iter().any(|(text, _)| &w.to_string() == text);
        if in_table {
            return;
        }
        covered += 1;
        if w.value(4) == 4 {
            // the embedded smaller group: f restricts to maj
            ok &= f.eval(w) == coxstat::statistics::maj(w) as i64;
        } else {
            // the remaining elements are minimal coset representatives
            let fact = parabolic_decompose(w, subset).unwrap();
            ok &= fact.parabolic().is_identity();
            ok &= f.eval(w) == w.length() as i64;
        }
    });
    ok &= covered == 24;
    criterion(
        8,
        "induced statistic matches the fifteen listed values and both boundary rules",
        ok,
    );
}

#[test]
fn criterion_09_descent_class_equidistributions() {
    let mut ok = true;
    for n in 2..=6usize {
        let d = GroupDescriptor::new(Family::A, n).unwrap();
        let (len, majstar) = (Statistic::length(d), stat(d, "majstar"));
        ok &= descent_classes_equidistributed(
            d,
            DescentClassMode::Descents,
            CAP,
            |w| len.eval(w),
            |w| majstar.eval(w),
        )
        .unwrap()
        .is_ok();
    }
    for n in 2..=4usize {
        let d = GroupDescriptor::new(Family::B, n).unwrap();
        let (len, nmajstar) = (Statistic::length(d), stat(d, "nmajstar"));
        ok &= descent_classes_equidistributed(
            d,
            DescentClassMode::DescentsAndNegatives,
            CAP,
            |w| len.eval(w),
            |w| nmajstar.eval(w),
        )
        .unwrap()
        .is_ok();
    }
    // bivariate consequences
    for n in 2..=6usize {
        let d = GroupDescriptor::new(Family::A, n).unwrap();
        let u = GroupUniverse::new(d).unwrap();
        let (len, maj, majstar) = (Statistic::length(d), stat(d, "maj"), stat(d, "majstar"));
        let lhs = analysis::joint_distribution(&u, |w| len.eval(w), |w| maj.eval(w));
        let rhs = analysis::joint_distribution(&u, |w| majstar.eval(w), |w| maj.eval(w));
        ok &= lhs == rhs;
    }
    for n in 2..=4usize {
        let d = GroupDescriptor::new(Family::B, n).unwrap();
        let u = GroupUniverse::new(d).unwrap();
        let (len, fmaj, nmajstar) = (Statistic::length(d), stat(d, "fmaj"), stat(d, "nmajstar"));
        let lhs = analysis::joint_distribution(&u, |w| len.eval(w), |w| fmaj.eval(w));
        let rhs = analysis::joint_distribution(&u, |w| nmajstar.eval(w), |w| fmaj.eval(w));
        ok &= lhs == rhs;
    }
    criterion(
        9,
        "descent-class equidistributions and their bivariate identities",
        ok,
    );
}

#[test]
fn criterion_10_chain_counterexample() {
    let chain = FiniteGradedPoset::chain(8).unwrap();
    let f: Vec<i64> = vec![0, 3, 1, 6, 5, 4, 2, 7];
    let rho = chain.rank_vector();
    let in_class = coxstat::posets::in_same_class(&chain, &f, &rho).unwrap();
    let check = analysis::ratio_sum_check(&chain, |&i| f[i as usize], |&i| rho[i as usize]);
    let symmetric = analysis::is_symmetric_pair(&chain, |&i| f[i as usize], |&i| rho[i as usize]);
    criterion(
        10,
        "eight-chain: ratio sums agree yet the pair is not symmetric",
        in_class && check.equal && !symmetric,
    );
}

#[test]
fn criterion_11_generic_engine_inductions() {
    let mut ok = true;
    let cases: &[(&str, u64, &str)] = &[
        ("I2:5", 10, "induced:len:{s1,s2}:right"),
        ("H3", 120, "induced:maj:{s1,s2}:right"),
        ("F4", 1152, "induced:fmaj:{s1,s2,s3}:right"),
        ("E6", 51840, "induced:maj:{s3,s4,s5,s6}:right"),
    ];
    for (preset, order, stat_name) in cases {
        let grp = std::sync::Arc::new(
            enumerate_group(&CoxeterMatrix::preset(preset).unwrap(), DEFAULT_ENUM_CAP).unwrap(),
        );
        ok &= grp.order() == *order;
        let length = analysis::distribution(grp.as_ref(), |&i| grp.length(i) as i64);
        ok &= length.is_reciprocal();
        let induced_stat = GenericStatistic::resolve(&grp, stat_name).unwrap();
        let induced = analysis::distribution(grp.as_ref(), |&i| induced_stat.eval(i));
        ok &= induced == length;
    }
    criterion(
        11,
        "generic engine: orders, reciprocity and induced equidistributions up to E6",
        ok,
    );
}

#[test]
fn criterion_12_d4_sum_image_probe() {
    // route 1: window formulas over the dense type D enumeration
    let d4 = descriptor("D:4");
    let u = GroupUniverse::new(d4).unwrap();
    let (len, dmaj) = (Statistic::length(d4), stat(d4, "dmaj"));
    let route1 = analysis::sum_image(&u, |w| len.eval(w), |w| dmaj.eval(w));

    // route 2: filter the even-sign windows out of B:4, take lengths from
    // the word-length table and dmaj through the quotient identity
    let b4 = descriptor("B:4");
    let table = BruteForceTable::new(d4, 1 << 12).unwrap();
    let subset: GenSet = (1..4).collect();
    let mut route2 = BTreeSet::new();
    let ub = GroupUniverse::new(b4).unwrap();
    ub.scan(0, ub.order(), &mut |w| {
        if w.neg_count() % 2 != 0 {
            return;
        }
        let w_d = SignedPermutation::new(d4, w.window().to_vec()).unwrap();
        let length = table.word_length_of(&w_d) as i64;
        let quotient = parabolic_decompose(&w_d, subset).unwrap();
        let dmaj_via_quotient = coxstat::statistics::maj(&w_d) as i64
            + table.word_length_of(quotient.quotient()) as i64;
        route2.insert(length + dmaj_via_quotient);
    });

    let consistent = route1 == route2;
    println!(
        "criterion 12 note: |Im(len_D+dmaj)| on D:4 computed = {} (stated value 3, formula value {})",
        route1.len(),
        2 * 4 * 3 - 1
    );
    criterion(
        12,
        "two independent routes agree on the D:4 sum image",
        consistent,
    );
}

/// Renders the outputs of criteria 1 through 4 into one deterministic blob.
fn sweep_outputs() -> String {
    let mut out = String::new();
    for window in 2..=8usize {
        let d = GroupDescriptor::new(Family::A, window).unwrap();
        let u = GroupUniverse::new(d).unwrap();
        let (len, maj) = (Statistic::length(d), Statistic::maj(d));
        let analysis = image_analysis(&u, |w| len.eval(w), |w| maj.eval(w));
        out.push_str(&format!(
            "A:{window} diff={:?} sum={:?} k+={} k-={}\n",
            analysis.image_diff,
            analysis.image_sum,
            analysis.k_plus(),
            analysis.k_minus()
        ));
    }
    for window in 2..=6usize {
        let d = GroupDescriptor::new(Family::B, window).unwrap();
        let u = GroupUniverse::new(d).unwrap();
        let (len, nmaj, fmaj) = (Statistic::length(d), stat(d, "nmaj"), stat(d, "fmaj"));
        let with_nmaj = image_analysis(&u, |w| len.eval(w), |w| nmaj.eval(w));
        let with_fmaj = image_analysis(&u, |w| len.eval(w), |w| fmaj.eval(w));
        out.push_str(&format!(
            "B:{window} nmaj_sum={:?} fmaj_diff={:?}\n",
            with_nmaj.image_sum, with_fmaj.image_diff
        ));
        let dist = analysis::distribution(&u, |w| len.eval(w));
        out.push_str(&format!("B:{window} poincare={dist}\n"));
    }
    out
}

#[test]
fn criterion_13_determinism_across_worker_counts() {
    let reference = run_with_threads(1, sweep_outputs);
    let mut ok = true;
    for threads in [2usize, 4, 8] {
        let other = run_with_threads(threads, sweep_outputs);
        ok &= other == reference;
    }
    criterion(
        13,
        "criteria 1-4 sweep outputs are byte-identical at 1, 2, 4 and 8 workers",
        ok,
    );
}

#[test]
fn laurent_poly_equality_is_exact() {
    // guard for the suite itself: distributions compared above are exact maps
    let u = universe("A:5");
    let len = Statistic::length(descriptor("A:5"));
    let p = analysis::distribution(&u, |w| len.eval(w));
    let total: num::BigInt = p.total_mass();
    assert_eq!(total, 120.into());
    assert_eq!(
        p,
        serde_json::from_str::<LaurentPoly>(&serde_json::to_string(&p).unwrap()).unwrap()
    );
}
