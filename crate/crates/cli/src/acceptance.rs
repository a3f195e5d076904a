//! Acceptance criteria, shared between `kittab selftest` and the
//! integration test suite. Each criterion returns a one-line summary on
//! success or a diagnostic on failure.

use kittab_core::generic::{generic_kitt, verify_deformation, verify_specialization};
use kittab_core::ideal::{buchberger, reduce, s_polynomial, Ideal};
use kittab_core::kitt::{
    kitt_ideal, kitt_identity_suite, kitt_recursive_large_r, kitt_recursive_small_r,
    residual_check, KittInput,
};
use kittab_core::koszul::KoszulElement;
use kittab_core::matrix::PolyMatrix;
use kittab_core::module::FreeVector;
use kittab_core::oracle::{monomial_dimension_oracle, syzygy_complete_up_to_degree};
use kittab_core::poly::RingOps;
use kittab_core::text::parse_poly;
use kittab_core::{Field, Height, MonomialOrder, PolyRing, Polynomial, RingRef, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::Write;

type Outcome = Result<String, String>;

fn qq(vars: &[&str]) -> RingRef {
    PolyRing::new(
        Field::Rational,
        vars.iter().map(|s| s.to_string()).collect(),
        MonomialOrder::GrevLex,
    )
    .unwrap()
}

fn fp(p: u32, vars: &[&str]) -> RingRef {
    PolyRing::new(
        Field::Prime(p),
        vars.iter().map(|s| s.to_string()).collect(),
        MonomialOrder::GrevLex,
    )
    .unwrap()
}

fn pp(ring: &RingRef, s: &str) -> Polynomial {
    parse_poly(ring, s).unwrap()
}

fn ideal(ring: &RingRef, gens: &[&str]) -> Ideal {
    Ideal::new(ring, gens.iter().map(|g| pp(ring, g)).collect())
}

// ---------------------------------------------------------------------------
// criterion 1: the two-generator generic Kitt examples, exact
// ---------------------------------------------------------------------------

pub fn criterion1() -> Outcome {
    let r = qq(&["x", "y"]);
    let f = vec![pp(&r, "x^2 + y"), pp(&r, "x^5")];
    let (ext, gk) = generic_kitt(&f, 2).map_err(|e| e.to_string())?;
    let s = ext.extended();
    let expect = ideal(
        s,
        &[
            "x^5*U22 + x^2*U12 + y*U12",
            "x^5*U21 + x^2*U11 + y*U11",
            "U12*U21 - U11*U22",
        ],
    );
    if !gk.ideal.equals(&expect).map_err(|e| e.to_string())? {
        return Err("generic Kitt of (x^2+y, x^5) differs from the expected ideal".into());
    }

    let f2 = vec![pp(&r, "x^2 + y"), pp(&r, "x^5 + x^2 + y")];
    let (ext2, gk2) = generic_kitt(&f2, 2).map_err(|e| e.to_string())?;
    let s2 = ext2.extended();
    let expect2 = ideal(
        s2,
        &[
            "x^5*U22 + x^2*U22 + y*U22 + x^2*U12 + y*U12",
            "x^5*U21 + x^2*U21 + y*U21 + x^2*U11 + y*U11",
            "U12*U21 - U11*U22",
        ],
    );
    if !gk2.ideal.equals(&expect2).map_err(|e| e.to_string())? {
        return Err("generic Kitt of (x^2+y, x^5+x^2+y) differs from the expected ideal".into());
    }
    if gk.ideal.equals(&gk2.ideal).map_err(|e| e.to_string())? {
        return Err("the two generic Kitts are unexpectedly ideal-equal".into());
    }
    Ok("both displayed generic Kitts reproduced; inequality confirmed".into())
}

// ---------------------------------------------------------------------------
// criterion 2: the monomial-curve colon example over QQ
// ---------------------------------------------------------------------------

fn curve_a(ring: &RingRef) -> Ideal {
    ideal(
        ring,
        &[
            "x2^3 - x1*x3^2",
            "x0*x2^2 - x1^2*x3",
            "x1^3 - x0^2*x2",
        ],
    )
}

pub fn criterion2() -> Outcome {
    let r = qq(&["x0", "x1", "x2", "x3"]);
    let a = curve_a(&r);
    let m = ideal(&r, &["x0", "x1", "x2", "x3"]);
    let i = a.colon(&m).map_err(|e| e.to_string())?;
    let quartic = pp(&r, "x1^2*x2^2 - x0*x1*x2*x3");
    if !i.contains_poly(&quartic).map_err(|e| e.to_string())? {
        return Err("colon a : (x0..x3) misses the quartic generator".into());
    }
    let expect_i = a.sum_polys(std::slice::from_ref(&quartic));
    if !i.equals(&expect_i).map_err(|e| e.to_string())? {
        return Err("a : (x0..x3) is not a + (quartic)".into());
    }
    let j = a.colon(&i).map_err(|e| e.to_string())?;
    if !j.equals(&m).map_err(|e| e.to_string())? {
        return Err("a : I is not the maximal ideal (x0..x3)".into());
    }
    match j.dimension().height {
        Height::Finite(4) => {}
        h => return Err(format!("ht(a : I) = {:?}, expected 4", h)),
    }
    Ok("quartic recovered, a : I = (x0,x1,x2,x3), ht = 4".into())
}

// ---------------------------------------------------------------------------
// criterion 3 (slow): height gap over F_32003
// ---------------------------------------------------------------------------

pub fn criterion3() -> Outcome {
    let r = fp(32003, &["x0", "x1", "x2", "x3"]);
    let a = curve_a(&r);
    let quartic = pp(&r, "x1^2*x2^2 - x0*x1*x2*x3");
    let f: Vec<Polynomial> = a
        .gens()
        .iter()
        .cloned()
        .chain(std::iter::once(quartic))
        .collect();
    // a_j = f_j: identity on the first three rows, zero fourth row
    let ring = r.clone();
    let mut entries = Vec::new();
    for i in 0..4 {
        for j in 0..3 {
            entries.push(if i == j { ring.one() } else { ring.zero() });
        }
    }
    let phi = PolyMatrix::new(&ring, 4, 3, entries).map_err(|e| e.to_string())?;
    let input = KittInput::new(f.clone(), a.gens().to_vec(), phi).map_err(|e| e.to_string())?;
    let kitt = kitt_ideal(&input).map_err(|e| e.to_string())?.ideal;
    match kitt.dimension().height {
        Height::Finite(4) => {}
        h => return Err(format!("ht(Kitt(a,I)) = {:?}, expected 4", h)),
    }
    let (_, gk) = generic_kitt(&f, 3).map_err(|e| e.to_string())?;
    match gk.ideal.dimension().height {
        Height::Finite(3) => {}
        h => return Err(format!("ht(generic Kitt) = {:?}, expected 3", h)),
    }
    Ok("ht(Kitt(a,I)) = 4 while ht(generic Kitt, s=3) = 3".into())
}

// ---------------------------------------------------------------------------
// criterion 4 (slow): strict containment Kitt ⊊ a : I over F_32003
// ---------------------------------------------------------------------------

/// The pinned 4×4 specialization matrix with row degrees (2, 2, 1, 1),
/// generated once from ChaCha8 seed 905 and frozen here.
pub fn pinned_m(ring: &RingRef) -> PolyMatrix {
    let degree_two_rows = 2usize;
    let mut rng = ChaCha8Rng::seed_from_u64(905);
    let vars: Vec<Polynomial> = (0..4).map(|i| ring.var(i)).collect();
    let mut entries = Vec::with_capacity(16);
    for row in 0..4 {
        let deg = if row < degree_two_rows { 2 } else { 1 };
        for _ in 0..4 {
            let mut e = ring.zero();
            if deg == 1 {
                for v in &vars {
                    let c: i64 = rng.gen_range(1..32003);
                    e = e.add(&v.scalar_mul(&ring.field().from_i64(c)));
                }
            } else {
                for a in 0..4 {
                    for b in a..4 {
                        let c: i64 = rng.gen_range(1..32003);
                        e = e.add(
                            &vars[a]
                                .mul(&vars[b])
                                .scalar_mul(&ring.field().from_i64(c)),
                        );
                    }
                }
            }
            entries.push(e);
        }
    }
    PolyMatrix::new(ring, 4, 4, entries).unwrap()
}

pub fn criterion4() -> Outcome {
    let r = fp(32003, &["x1", "x2", "x3", "x4"]);
    // I = (x3, x4) · (x1, x2^2 - x3*x4)
    let f = vec![
        pp(&r, "x1*x3"),
        pp(&r, "x1*x4"),
        pp(&r, "x2^2*x3 - x3^2*x4"),
        pp(&r, "x2^2*x4 - x3*x4^2"),
    ];
    let i = Ideal::new(&r, f.clone());
    let m = pinned_m(&r);
    let a = m.row_vec_mul(&f).map_err(|e| e.to_string())?;
    let a_ideal = Ideal::new(&r, a.clone());
    let res = residual_check(&a_ideal, &i, 4).map_err(|e| e.to_string())?;
    let algebraic = res
        .find("algebraic")
        .map(|c| c.verdict == Verdict::Pass)
        .unwrap_or(false);
    if !algebraic {
        return Err(format!(
            "pinned matrix does not give a 4-residual intersection: {}",
            res
        ));
    }
    let input = KittInput::new(f, a, m).map_err(|e| e.to_string())?;
    let suite = kitt_identity_suite(&input).map_err(|e| e.to_string())?;
    if !suite.passed() {
        return Err(format!("identity suite failed: {}", suite));
    }
    if !suite
        .notes
        .iter()
        .any(|n| n == "kitt-equals-colon: false")
    {
        return Err("expected Kitt(a,I) to be strictly smaller than a : I".into());
    }
    Ok("4-residual intersection confirmed; Kitt(a,I) strictly inside a : I".into())
}

// ---------------------------------------------------------------------------
// randomized corpus shared by criteria 5 and 6
// ---------------------------------------------------------------------------

fn random_poly(rng: &mut ChaCha8Rng, ring: &RingRef, max_deg: u32, max_terms: usize) -> Polynomial {
    let n = ring.nvars();
    loop {
        let mut p = ring.zero();
        let terms = rng.gen_range(1..=max_terms);
        for _ in 0..terms {
            let mut mono = ring.one();
            let mut budget = max_deg;
            for v in 0..n {
                let e = rng.gen_range(0..=budget);
                budget -= e;
                if e > 0 {
                    mono = mono.mul(&ring.var(v).pow(e));
                }
            }
            let c: i64 = *[-3, -2, -1, 1, 2, 3].get(rng.gen_range(0..6)).unwrap();
            p = p.add(&mono.scalar_mul(&ring.field().from_i64(c)));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_phi_entry(rng: &mut ChaCha8Rng, ring: &RingRef) -> Polynomial {
    match rng.gen_range(0..4) {
        0 => ring.zero(),
        1 => ring.constant_i64(rng.gen_range(1..=2)),
        _ => random_poly(rng, ring, 1, 1),
    }
}

pub fn corpus(seed: u64, count: usize) -> Vec<KittInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let var_sets: [&[&str]; 3] = [&["x"], &["x", "y"], &["x", "y", "z"]];
    let mut out = Vec::new();
    while out.len() < count {
        let vars = var_sets[rng.gen_range(0..3)];
        let ring = qq(vars);
        let r = rng.gen_range(1..=3usize);
        let s = rng.gen_range(1..=3usize);
        let f: Vec<Polynomial> = (0..r).map(|_| random_poly(&mut rng, &ring, 3, 2)).collect();
        let entries: Vec<Polynomial> = (0..r * s)
            .map(|_| random_phi_entry(&mut rng, &ring))
            .collect();
        let phi = match PolyMatrix::new(&ring, r, s, entries) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let a = match phi.row_vec_mul(&f) {
            Ok(a) => a,
            Err(_) => continue,
        };
        match KittInput::new(f, a, phi) {
            Ok(input) => out.push(input),
            Err(_) => continue,
        }
    }
    out
}

// ---------------------------------------------------------------------------
// criterion 5: specialization collapse on the randomized corpus
// ---------------------------------------------------------------------------

pub fn criterion5() -> Outcome {
    let inputs = corpus(20260824, 22);
    for (idx, input) in inputs.iter().enumerate() {
        let report = verify_specialization(input).map_err(|e| format!("instance {}: {}", idx, e))?;
        if !report.passed() {
            return Err(format!("instance {} failed: {}", idx, report));
        }
    }
    Ok(format!(
        "specialize(generic Kitt) = direct Kitt on {} randomized instances",
        22
    ))
}

// ---------------------------------------------------------------------------
// criterion 6: the identity suite on the randomized corpus
// ---------------------------------------------------------------------------

fn check_instance_identities(idx: usize, input: &KittInput) -> Result<(), String> {
    let fail = |msg: &str| Err::<(), String>(format!("instance {}: {}", idx, msg));
    let ring = input.ring().clone();

    let suite = kitt_identity_suite(input).map_err(|e| format!("instance {}: {}", idx, e))?;
    if !suite.passed() {
        return fail(&format!("identity suite: {}", suite));
    }

    let kitt = kitt_ideal(input)
        .map_err(|e| format!("instance {}: {}", idx, e))?
        .ideal;

    // recursions, whenever the arity precondition holds
    if input.r() <= input.s() {
        let rec = kitt_recursive_small_r(input).map_err(|e| format!("instance {}: {}", idx, e))?;
        if !rec.equals(&kitt).map_err(|e| e.to_string())? {
            return fail("small-arity recursion disagrees with the direct Kitt");
        }
    }
    if input.r() >= input.s() {
        let rec = kitt_recursive_large_r(input).map_err(|e| format!("instance {}: {}", idx, e))?;
        if !rec.equals(&kitt).map_err(|e| e.to_string())? {
            return fail("large-arity recursion disagrees with the direct Kitt");
        }
    }

    // Kitt(a, a) = (1)
    let f = input.f().to_vec();
    let self_input = KittInput::new(f.clone(), f.clone(), PolyMatrix::identity(&ring, f.len()))
        .map_err(|e| e.to_string())?;
    if kitt_ideal(&self_input)
        .map_err(|e| e.to_string())?
        .ideal
        .is_proper()
    {
        return fail("Kitt(a, a) is not the unit ideal");
    }

    // Kitt(0, I) = 0 : I
    let zero_input = KittInput::new(f.clone(), vec![], PolyMatrix::zero(&ring, f.len(), 0))
        .map_err(|e| e.to_string())?;
    let kitt0 = kitt_ideal(&zero_input).map_err(|e| e.to_string())?.ideal;
    let ann = Ideal::zero(&ring)
        .colon(&input.i_ideal())
        .map_err(|e| e.to_string())?;
    if !kitt0.equals(&ann).map_err(|e| e.to_string())? {
        return fail("Kitt(0, I) differs from 0 : I");
    }

    // generator-set independence: redundant extra generator
    if input.r() >= 2 {
        let mut f_ext = f.clone();
        f_ext.push(f[0].add(&f[1]));
        let mut entries = Vec::new();
        for i in 0..f.len() {
            for j in 0..input.s() {
                entries.push(input.phi().get(i, j).clone());
            }
        }
        entries.extend((0..input.s()).map(|_| ring.zero()));
        let phi_ext = PolyMatrix::new(&ring, f.len() + 1, input.s(), entries)
            .map_err(|e| e.to_string())?;
        let ext_input =
            KittInput::new(f_ext, input.a().to_vec(), phi_ext).map_err(|e| e.to_string())?;
        let k2 = kitt_ideal(&ext_input).map_err(|e| e.to_string())?.ideal;
        if !k2.equals(&kitt).map_err(|e| e.to_string())? {
            return fail("appending a redundant generator changed the Kitt ideal");
        }
    }

    // permutation independence: reverse f with reversed Phi rows, and
    // reverse a with reversed Phi columns
    let rev_rows: Vec<usize> = (0..input.r()).rev().collect();
    let rev_cols: Vec<usize> = (0..input.s()).rev().collect();
    let f_rev: Vec<Polynomial> = rev_rows.iter().map(|&i| f[i].clone()).collect();
    let mut entries = Vec::new();
    for &i in &rev_rows {
        for j in 0..input.s() {
            entries.push(input.phi().get(i, j).clone());
        }
    }
    let phi_rev =
        PolyMatrix::new(&ring, input.r(), input.s(), entries).map_err(|e| e.to_string())?;
    let perm_input =
        KittInput::new(f_rev, input.a().to_vec(), phi_rev).map_err(|e| e.to_string())?;
    let k3 = kitt_ideal(&perm_input).map_err(|e| e.to_string())?.ideal;
    if !k3.equals(&kitt).map_err(|e| e.to_string())? {
        return fail("permuting the generators of I changed the Kitt ideal");
    }
    let a_rev: Vec<Polynomial> = rev_cols.iter().map(|&j| input.a()[j].clone()).collect();
    let phi_colrev = input.phi().select_columns(&rev_cols);
    let perm_a_input =
        KittInput::new(f.clone(), a_rev, phi_colrev).map_err(|e| e.to_string())?;
    let k4 = kitt_ideal(&perm_a_input).map_err(|e| e.to_string())?.ideal;
    if !k4.equals(&kitt).map_err(|e| e.to_string())? {
        return fail("permuting the generators of a changed the Kitt ideal");
    }
    Ok(())
}

pub fn criterion6() -> Outcome {
    let inputs = corpus(20260824, 22);
    for (idx, input) in inputs.iter().enumerate() {
        check_instance_identities(idx, input)?;
    }
    Ok(format!(
        "identity suite, recursions, and independence hold on {} instances",
        22
    ))
}

// ---------------------------------------------------------------------------
// criterion 7: deformation verification within the guaranteed range
// ---------------------------------------------------------------------------

pub fn criterion7() -> Outcome {
    let r = qq(&["x", "y"]);
    let a = ideal(&r, &["x^2", "y^2"]);
    let i = ideal(&r, &["x", "y"]);
    let report = verify_deformation(&a, &i, 2).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(format!("linkage instance failed: {}", report));
    }
    let skipped = report.checks.iter().any(|c| c.verdict == Verdict::Skipped);
    if skipped {
        return Err("linkage instance unexpectedly skipped a check".into());
    }

    let r3 = qq(&["x", "y", "z"]);
    let a3 = ideal(&r3, &["x^2 + z*y", "2*x*y", "z*x + y^2"]);
    let i3 = ideal(&r3, &["x", "y"]);
    let report3 = verify_deformation(&a3, &i3, 3).map_err(|e| e.to_string())?;
    if !report3.passed() {
        return Err(format!("s = ht+1 instance failed: {}", report3));
    }
    if report3.checks.iter().any(|c| c.verdict == Verdict::Skipped) {
        return Err("s = ht+1 instance unexpectedly skipped a check".into());
    }
    Ok("deformation verified for the linkage and the s = ht+1 instances".into())
}

// ---------------------------------------------------------------------------
// criterion 8: kernel correctness against independent oracles
// ---------------------------------------------------------------------------

fn random_koszul_element(
    rng: &mut ChaCha8Rng,
    ring: &RingRef,
    r: usize,
    homogeneous: Option<usize>,
) -> KoszulElement {
    let mut e = KoszulElement::zero(ring, r);
    for _ in 0..rng.gen_range(1..=3usize) {
        let mask: u64 = match homogeneous {
            Some(d) => {
                // random subset of cardinality d
                let mut m = 0u64;
                while (m.count_ones() as usize) < d {
                    m |= 1 << rng.gen_range(0..r);
                }
                m
            }
            None => rng.gen_range(0..(1u64 << r)),
        };
        let p = random_poly(rng, ring, 2, 2);
        e = e
            .add(&KoszulElement::basis(ring, r, mask).wedge(&KoszulElement::scalar(r, &p)).unwrap())
            .unwrap();
    }
    e
}

pub fn criterion8() -> Outcome {
    // (a) every computed Gröbner basis sends all S-polynomials to zero
    let gb_cases: Vec<(RingRef, Vec<&str>)> = vec![
        (qq(&["x", "y"]), vec!["x^2 - y", "x*y - 1"]),
        (qq(&["x", "y", "z"]), vec!["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]),
        (fp(32003, &["x", "y"]), vec!["x^3 - y^2", "x*y^2 - x"]),
        (qq(&["x", "y"]), vec!["x^4 - 2*x*y", "y^3 - x"]),
    ];
    for (ring, gens) in &gb_cases {
        let gens: Vec<Polynomial> = gens.iter().map(|g| pp(ring, g)).collect();
        let gb = buchberger(ring, &gens);
        for i in 0..gb.len() {
            for j in (i + 1)..gb.len() {
                let s = s_polynomial(&gb[i], &gb[j]);
                if !reduce(&s, &gb).is_zero() {
                    return Err(format!(
                        "S-polynomial of basis elements {} and {} does not reduce to zero",
                        i, j
                    ));
                }
            }
        }
    }

    // (b) syzygy completeness against the degree-bounded oracle (D = 6)
    let syz_cases: Vec<(RingRef, Vec<&str>)> = vec![
        (qq(&["x", "y"]), vec!["x^2 + y", "x^5"]),
        (qq(&["x", "y"]), vec!["x^2", "x*y", "y^2"]),
        (qq(&["x", "y", "z"]), vec!["x*y - z", "y*z - x", "x*z - y"]),
        (qq(&["x"]), vec!["x^2", "x^3 + x"]),
    ];
    for (ring, gens) in &syz_cases {
        let family: Vec<FreeVector> = gens
            .iter()
            .map(|g| FreeVector::new(ring, vec![pp(ring, g)]).unwrap())
            .collect();
        match syzygy_complete_up_to_degree(&family, 6) {
            Ok(true) => {}
            Ok(false) => return Err(format!("syzygy basis incomplete for {:?}", gens)),
            Err(e) => return Err(e.to_string()),
        }
    }

    // (c) ∂² = 0 and the Leibniz rule on 100 random Koszul elements
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..100 {
        let vars: &[&str] = if trial % 2 == 0 { &["x", "y"] } else { &["x", "y", "z"] };
        let ring = qq(vars);
        let r = rng.gen_range(2..=3usize);
        let f: Vec<Polynomial> = (0..r).map(|_| random_poly(&mut rng, &ring, 2, 2)).collect();
        let e = random_koszul_element(&mut rng, &ring, r, None);
        let dd = e
            .differential(&f)
            .and_then(|d| d.differential(&f))
            .map_err(|e| e.to_string())?;
        if !dd.is_zero() {
            return Err(format!("∂∘∂ ≠ 0 on trial {}", trial));
        }
        let da = rng.gen_range(0..=r);
        let db = rng.gen_range(0..=(r - da));
        let a = random_koszul_element(&mut rng, &ring, r, Some(da));
        let b = random_koszul_element(&mut rng, &ring, r, Some(db));
        let lhs = a
            .wedge(&b)
            .and_then(|w| w.differential(&f))
            .map_err(|e| e.to_string())?;
        let term1 = a
            .differential(&f)
            .and_then(|d| d.wedge(&b))
            .map_err(|e| e.to_string())?;
        let term2 = a
            .wedge(&b.differential(&f).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let rhs = if da % 2 == 0 {
            term1.add(&term2).map_err(|e| e.to_string())?
        } else {
            term1.add(&term2.neg()).map_err(|e| e.to_string())?
        };
        if lhs != rhs {
            return Err(format!("Leibniz rule fails on trial {}", trial));
        }
    }

    // (d) dimension against the brute-force subset oracle
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    for trial in 0..20 {
        let nv = rng.gen_range(1..=4usize);
        let names: Vec<&str> = ["x", "y", "z", "w"][..nv].to_vec();
        let ring = qq(&names);
        let k = rng.gen_range(1..=4usize);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| {
                let mut m = ring.one();
                loop {
                    for v in 0..nv {
                        m = m.mul(&ring.var(v).pow(rng.gen_range(0..=2)));
                    }
                    if !m.is_constant() {
                        return m;
                    }
                }
            })
            .collect();
        let i = Ideal::new(&ring, gens);
        let expected = monomial_dimension_oracle(&i).map_err(|e| e.to_string())?;
        let got = i.dimension().dim;
        if expected != got {
            return Err(format!(
                "dimension mismatch on trial {}: oracle {}, computed {}",
                trial, expected, got
            ));
        }
    }

    Ok("S-pairs, syzygy completeness, DG identities, and dimension all verified".into())
}

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

pub const CRITERIA: &[(&str, fn() -> Outcome, bool)] = &[
    ("1: generic Kitt examples", criterion1, false),
    ("2: colon example over QQ", criterion2, false),
    ("3: height gap over F_32003", criterion3, true),
    ("4: strict containment over F_32003", criterion4, true),
    ("5: specialization collapse", criterion5, false),
    ("6: identity suite", criterion6, false),
    ("7: deformation verification", criterion7, false),
    ("8: kernel correctness", criterion8, false),
];

pub fn run_all(slow: bool, out: &mut impl Write) -> bool {
    let mut all_ok = true;
    for (name, f, is_slow) in CRITERIA {
        if *is_slow && !slow {
            writeln!(out, "criterion {}: skipped (slow tier)", name).ok();
            continue;
        }
        match f() {
            Ok(msg) => {
                writeln!(out, "criterion {}: pass — {}", name, msg).ok();
            }
            Err(msg) => {
                all_ok = false;
                writeln!(out, "criterion {}: FAIL — {}", name, msg).ok();
            }
        }
    }
    all_ok
}
