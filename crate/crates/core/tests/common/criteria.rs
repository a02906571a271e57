//! One check per acceptance criterion. Each returns a short summary on
//! success and a description of the first failure otherwise.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pushout::chain_core::{
    pad_equivalence, trivial_equivalence, GradedMorphism, HomotopyEquivalence,
};
use pushout::homology::{homology_effective, homology_via_equivalence, is_divisibility_chain, smith_normal_form, AbelianGroup, IntMatrix};
use pushout::pipeline::{ses1, ses2};
use pushout::simplicial::builders::{circle, degree_map, join, mapping_cone_space, sphere, suspension_space, wedge};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::oracle;
use super::random::{mutate, random_complex, random_ses, Leg};
use super::{corpus, efhm, exhaustive, reductions_of, window};

pub type Outcome = Result<String, String>;

fn within(start: Instant, budget: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    if t > budget {
        Err(format!("{what} took {t:.2?}, budget {budget:?}"))
    } else {
        Ok(t)
    }
}

/// Homology through the pipeline's equivalence equals the oracle on `C(P)`.
pub fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut compared = 0;
    let instances = corpus();
    for (name, p) in &instances {
        let e = efhm(p);
        let cp = p.space().normalized_chain_complex().map_err(|e| e.to_string())?;
        for n in window(p.space()) {
            let via = homology_via_equivalence(&e.equivalence, n);
            let direct = oracle::homology(&cp, n);
            if via != direct {
                return Err(format!("{name}, H_{n}: pipeline {via}, oracle {direct}"));
            }
            compared += 1;
        }
    }
    let t = within(start, Duration::from_secs(10), "corpus run")?;
    Ok(format!("{} instances, {compared} degrees, {t:.2?}", instances.len()))
}

fn expect(name: &str, got: &AbelianGroup, free: usize, torsion: &[i64]) -> Result<(), String> {
    let want = AbelianGroup { free_rank: free, torsion: torsion.iter().map(|&d| BigInt::from(d)).collect() };
    if *got == want {
        Ok(())
    } else {
        Err(format!("{name}: got {got}, expected {want}"))
    }
}

fn pipeline_homology(p: &pushout::simplicial::PushoutSpace, n: i32) -> AbelianGroup {
    homology_via_equivalence(&efhm(p).equivalence, n)
}

/// Textbook homology groups of the classical instances.
pub fn classical_values() -> Outcome {
    let mut checks = 0;
    let mut check = |name: &str, p: &pushout::simplicial::PushoutSpace, n: i32, free: usize, torsion: &[i64]| {
        checks += 1;
        let cp = p.space().normalized_chain_complex().map_err(|e| e.to_string())?;
        expect(&format!("{name} (oracle) H_{n}"), &oracle::homology(&cp, n), free, torsion)?;
        expect(&format!("{name} (pipeline) H_{n}"), &pipeline_homology(p, n), free, torsion)
    };
    for n in 0..=3 {
        let s = suspension_space(&sphere(n).into_arc()).unwrap();
        check(&format!("suspension of S{n}"), &s, n as i32 + 1, 1, &[])?;
    }
    let s1 = circle(1).into_arc();
    let w = wedge(&s1, &s1, 0, 0).unwrap();
    check("wedge S1 S1", &w, 1, 2, &[])?;
    let w = wedge(&s1, &sphere(2).into_arc(), 0, 0).unwrap();
    check("wedge S1 S2", &w, 1, 1, &[])?;
    check("wedge S1 S2", &w, 2, 1, &[])?;
    let j = join(&s1, &s1).unwrap();
    check("join S1 S1", &j, 1, 0, &[])?;
    check("join S1 S1", &j, 2, 0, &[])?;
    check("join S1 S1", &j, 3, 1, &[])?;
    for k in 2..=5 {
        let c = mapping_cone_space(&degree_map(k)).unwrap();
        check(&format!("cofiber of degree {k}"), &c, 1, 0, &[k as i64])?;
        check(&format!("cofiber of degree {k}"), &c, 2, 0, &[])?;
    }
    Ok(format!("{checks} group values"))
}

/// Every reduction from the corpus runs passes exhaustively; 50 seeded
/// single-entry mutations are all caught.
pub fn reduction_suite() -> Outcome {
    let config = exhaustive();
    let mut pool = Vec::new();
    for (name, p) in corpus() {
        for (what, r) in reductions_of(&efhm(&p)) {
            let report = r.verify(&config);
            if report.sampled || !report.passed() {
                return Err(format!("{name}, {what}: {:?}", report.violations.first()));
            }
            pool.push((format!("{name}, {what}"), r));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x0dd_ba11);
    let (mut tried, mut caught) = (0, 0);
    while tried < 50 {
        let (name, r) = &pool[rng.gen_range(0..pool.len())];
        let leg = [Leg::F, Leg::G, Leg::H][rng.gen_range(0..3)];
        let Some((bad, how)) = mutate(r, leg, &mut rng) else { continue };
        tried += 1;
        if bad.verify(&config).passed() {
            return Err(format!("mutation {how} of {name} went unnoticed"));
        }
        caught += 1;
    }
    Ok(format!("{} reductions verified exhaustively, {caught}/{tried} mutations detected", pool.len()))
}

/// d² = 0, sequence identities, χ a chain map and the comparison round trips.
pub fn structural_identities() -> Outcome {
    let mut complexes = 0;
    for (name, p) in corpus() {
        let e = efhm(&p);
        let cp = p.space().normalized_chain_complex().map_err(|e| e.to_string())?;
        let cyl = p.cylinder().space().normalized_chain_complex().map_err(|e| e.to_string())?;
        for (what, c) in [
            ("C(P)", &cp),
            ("C(X × I)", &cyl),
            ("rc", &e.rc),
            ("ds", &e.ds),
            ("sds", &e.sds),
            ("cone2", e.cone2_of_chi.complex()),
            ("big", e.equivalence.big()),
            ("effective", e.equivalence.right()),
        ] {
            complexes += 1;
            if !c.is_d_squared_zero() {
                return Err(format!("{name}: d² ≠ 0 on {what}"));
            }
        }
        let s = &e.ses;
        let id = |c| GradedMorphism::identity(c);
        let comp = |a: &GradedMorphism, b: &GradedMorphism| GradedMorphism::compose(a, b).unwrap();
        let sum = comp(s.i(), s.rho()).add(&comp(s.sigma(), s.j())).unwrap();
        let identities = [
            ("jσ", comp(s.j(), s.sigma()).differences(&id(s.a())).is_empty()),
            ("ρi", comp(s.rho(), s.i()).differences(&id(s.c())).is_empty()),
            ("iρ + σj", sum.differences(&id(s.b())).is_empty()),
            ("ji", comp(s.j(), s.i()).is_zero()),
            ("i chain map", s.i().chain_map_violations().is_empty()),
            ("j chain map", s.j().chain_map_violations().is_empty()),
            ("χ chain map", e.chi.chain_map_violations().is_empty()),
            ("fw chain map", e.comparison.0.chain_map_violations().is_empty()),
            ("bw chain map", e.comparison.1.chain_map_violations().is_empty()),
            ("fw∘bw", comp(&e.comparison.0, &e.comparison.1).differences(&id(s.b())).is_empty()),
            (
                "bw∘fw",
                comp(&e.comparison.1, &e.comparison.0).differences(&id(e.cone2_of_chi.complex())).is_empty(),
            ),
        ];
        if let Some((what, _)) = identities.iter().find(|(_, ok)| !ok) {
            return Err(format!("{name}: {what} fails"));
        }
    }
    Ok(format!("{complexes} complexes, all identities exhaustive"))
}

fn maybe_padded(rng: &mut StdRng, c: &std::sync::Arc<pushout::chain_core::ChainComplex>) -> HomotopyEquivalence {
    let trivial = trivial_equivalence(c);
    if rng.gen_bool(0.5) {
        let k = random_complex(rng, "k", 2, 2);
        pad_equivalence(&trivial, &k).unwrap()
    } else {
        trivial
    }
}

/// ses1 recovers H(A) and ses2 recovers H(B) on random split sequences.
pub fn ses_correctness() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5e5_5e5);
    let mut degrees = 0;
    for case in 0..25 {
        let ses = random_ses(&mut rng, 4, 3).ses;
        let (eq_a, eq_b, eq_c) = (maybe_padded(&mut rng, ses.a()), maybe_padded(&mut rng, ses.b()), maybe_padded(&mut rng, ses.c()));
        let e1 = ses1(&ses, &eq_b, &eq_c).map_err(|e| format!("case {case}: ses1: {e}"))?;
        let e2 = ses2(&ses, &eq_a, &eq_c).map_err(|e| format!("case {case}: ses2: {e}"))?;
        for n in -1..=5 {
            let (ha, hb, hc) = (oracle::homology(ses.a(), n), oracle::homology(ses.b(), n), oracle::homology(ses.c(), n));
            let got1 = homology_via_equivalence(&e1, n);
            let got2 = homology_via_equivalence(&e2, n);
            if got1 != ha {
                return Err(format!("case {case}, H_{n}: ses1 gives {got1}, H(A) = {ha}"));
            }
            if got2 != hb {
                return Err(format!("case {case}, H_{n}: ses2 gives {got2}, H(B) = {hb}"));
            }
            if hb != ha.direct_sum(&hc) {
                return Err(format!("case {case}, H_{n}: H(B) = {hb} is not H(A) ⊕ H(C)"));
            }
            degrees += 1;
        }
    }
    let t = within(start, Duration::from_secs(5), "25 sequences")?;
    Ok(format!("25 sequences, {degrees} degree checks, {t:.2?}"))
}

fn random_matrix(rng: &mut StdRng, max: usize) -> oracle::Matrix {
    let (r, c) = (rng.gen_range(1..=max), rng.gen_range(1..=max));
    if rng.gen_bool(0.3) {
        // low rank: a product through a thin middle
        let k = rng.gen_range(1..=r.min(c));
        let a: oracle::Matrix = (0..r).map(|_| (0..k).map(|_| rng.gen_range(-4..=4)).collect()).collect();
        let b: oracle::Matrix = (0..k).map(|_| (0..c).map(|_| rng.gen_range(-4..=4)).collect()).collect();
        return (0..r).map(|i| (0..c).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect();
    }
    let scale = *[1, 2, 6].get(rng.gen_range(0..3)).unwrap();
    (0..r).map(|_| (0..c).map(|_| scale * rng.gen_range(-9..=9)).collect()).collect()
}

fn to_int_matrix(m: &oracle::Matrix) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    IntMatrix::from_rows(&rows)
}

/// Divisibility chain on 200 random matrices, invariant factors against the
/// reference elimination, and products of invariant factors against
/// determinantal divisors up to 6 × 6.
pub fn snf_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5af);
    let mut minors = 0;
    for case in 0..200 {
        let m = random_matrix(&mut rng, 8);
        let form = smith_normal_form(&to_int_matrix(&m));
        if !is_divisibility_chain(&form.diagonal) {
            return Err(format!("case {case}: no divisibility chain in {:?}", form.diagonal));
        }
        let reference: Vec<BigInt> = oracle::invariant_factors(&m).into_iter().map(BigInt::from).collect();
        if form.nonzero() != reference.as_slice() {
            return Err(format!("case {case}: {:?} vs reference {reference:?}", form.nonzero()));
        }
        if m.len() <= 6 && m[0].len() <= 6 {
            let mut product = BigInt::from(1);
            for k in 1..=m.len().min(m[0].len()) {
                product *= &form.diagonal[k - 1];
                let divisor = BigInt::from(oracle::determinantal_divisor(&m, k));
                if product != divisor {
                    return Err(format!("case {case}: d_1⋯d_{k} = {product}, gcd of {k}-minors = {divisor}"));
                }
                minors += 1;
            }
        }
    }
    Ok(format!("200 matrices, {minors} determinantal divisors"))
}

pub const JOIN_DESCRIPTION: &str = "tests/data/join_s1_s1.toml";
pub const JOIN_GOLDEN: &str = "tests/data/join_s1_s1.expected";

fn binary(args: &[&str], dir: &Path) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_pushout")).args(args).current_dir(dir).output().unwrap();
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

/// Golden report for the join of two circles and the exit-code contract.
pub fn cli_contract() -> Outcome {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let golden = std::fs::read_to_string(root.join(JOIN_GOLDEN)).map_err(|e| e.to_string())?;
    let (out, err, code) = binary(&[JOIN_DESCRIPTION, "homology", "s3", "0..4"], root);
    if code != 0 || out != golden {
        return Err(format!("golden mismatch (exit {code}):\n{out}{err}"));
    }
    let (again, _, _) = binary(&[JOIN_DESCRIPTION, "homology", "s3", "0..4"], root);
    if again != out {
        return Err("repeated run differs".into());
    }
    let cases: [(&str, &[&str], i32); 5] = [
        ("tests/data/malformed.toml", &["homology", "x", "0..1"], 2),
        ("tests/data/join_s1_s1.toml", &["homology", "missing", "0..1"], 2),
        ("tests/data/bad_table.toml", &["homology", "p", "0..1"], 2),
        ("tests/data/tampered.toml", &["verify", "t"], 1),
        ("tests/data/join_s1_s1.toml", &["verify", "s3"], 0),
    ];
    for (file, rest, want) in cases {
        let mut args = vec![file];
        args.extend_from_slice(rest);
        let (_, err, code) = binary(&args, root);
        if code != want {
            return Err(format!("{} exited {code}, expected {want}: {err}", args.join(" ")));
        }
    }
    Ok("golden output byte-exact, 5 exit-code cases".into())
}

/// `homology_effective` on the library side must agree with the oracle on
/// every corpus complex; used as a sanity check of the oracle itself.
pub fn oracle_agrees_with_library() -> Outcome {
    for (name, p) in corpus() {
        let cp = p.space().normalized_chain_complex().map_err(|e| e.to_string())?;
        for n in window(p.space()) {
            if homology_effective(&cp, n) != oracle::homology(&cp, n) {
                return Err(format!("{name}, H_{n}"));
            }
        }
    }
    Ok("agree".into())
}
