//! The Kitt ideal Kitt(𝔞, I) = ⟨Γ·Z⟩_r and its executable identities.

use crate::error::{Error, Result};
use crate::ideal::{DimensionResult, Height, Ideal};
use crate::koszul::{cycles, cycles_mod, CycleBasis, KoszulElement};
use crate::matrix::{combinations, PolyMatrix};
use crate::module::{fitting_zero, Lifter};
use crate::poly::{PolyRing, Polynomial, RingOps, RingRef};
use crate::report::VerificationReport;

/// The triple (a, f, Φ) with [a] = [f]·Φ, verified at construction.
#[derive(Clone, Debug)]
pub struct KittInput {
    f: Vec<Polynomial>,
    a: Vec<Polynomial>,
    phi: PolyMatrix,
}

impl KittInput {
    pub fn new(f: Vec<Polynomial>, a: Vec<Polynomial>, phi: PolyMatrix) -> Result<KittInput> {
        let first = f
            .first()
            .ok_or_else(|| Error::precondition("I needs at least one generator"))?;
        let ring = first.ring().clone();
        for p in f.iter().chain(a.iter()) {
            if !PolyRing::same(p.ring(), &ring) {
                return Err(Error::RingMismatch("mixed rings in Kitt input".into()));
            }
        }
        if phi.rows() != f.len() || phi.cols() != a.len() {
            return Err(Error::domain(format!(
                "Phi must be {}x{}, got {}x{}",
                f.len(),
                a.len(),
                phi.rows(),
                phi.cols()
            )));
        }
        let image = phi.row_vec_mul(&f)?;
        for (j, (aj, im)) in a.iter().zip(&image).enumerate() {
            if aj.sub(im) != ring.zero() {
                return Err(Error::precondition(format!(
                    "a_{} does not equal the Phi-combination of f",
                    j + 1
                )));
            }
        }
        Ok(KittInput { f, a, phi })
    }

    /// Construct by lifting a through f (Φ computed, not supplied).
    pub fn lift(f: Vec<Polynomial>, a: Vec<Polynomial>) -> Result<KittInput> {
        let first = f
            .first()
            .ok_or_else(|| Error::precondition("I needs at least one generator"))?;
        let ring = first.ring().clone();
        let lifter = Lifter::new(&f)?;
        let mut entries = vec![ring.zero(); f.len() * a.len()];
        for (j, aj) in a.iter().enumerate() {
            let col = lifter.lift(aj).ok_or_else(|| {
                Error::precondition(format!("a_{} is not a member of (f)", j + 1))
            })?;
            for (i, c) in col.into_iter().enumerate() {
                entries[i * a.len() + j] = c;
            }
        }
        let phi = PolyMatrix::new(&ring, f.len(), a.len(), entries)?;
        KittInput::new(f, a, phi)
    }

    pub fn ring(&self) -> &RingRef {
        self.f[0].ring()
    }

    pub fn f(&self) -> &[Polynomial] {
        &self.f
    }

    pub fn a(&self) -> &[Polynomial] {
        &self.a
    }

    pub fn phi(&self) -> &PolyMatrix {
        &self.phi
    }

    pub fn r(&self) -> usize {
        self.f.len()
    }

    pub fn s(&self) -> usize {
        self.a.len()
    }

    pub fn i_ideal(&self) -> Ideal {
        Ideal::new(self.ring(), self.f.clone())
    }

    pub fn a_ideal(&self) -> Ideal {
        Ideal::new(self.ring(), self.a.clone())
    }

    /// ζ_j = Σ_i Φ_ij·e_i, 0-indexed column.
    pub fn zeta(&self, j: usize) -> KoszulElement {
        let ring = self.ring().clone();
        let r = self.r();
        let mut z = KoszulElement::zero(&ring, r);
        for i in 0..r {
            let c = self.phi.get(i, j);
            if !c.is_zero() {
                z = z
                    .add(&KoszulElement::generator(&ring, r, i).scale(c))
                    .unwrap();
            }
        }
        z
    }

    /// The sub-input using the listed columns of Φ (and of a).
    pub fn select_columns(&self, cols: &[usize]) -> KittInput {
        KittInput {
            f: self.f.clone(),
            a: cols.iter().map(|&j| self.a[j].clone()).collect(),
            phi: self.phi.select_columns(cols),
        }
    }
}

/// One harvested generator with its provenance.
#[derive(Clone, Debug)]
pub struct KittGenerator {
    /// Column subset L, 0-indexed, strictly increasing.
    pub subset: Vec<usize>,
    /// Index of the cycle generator in Z_{r−|L|}.
    pub cycle_index: usize,
    pub poly: Polynomial,
}

#[derive(Clone, Debug)]
pub struct KittResult {
    pub ideal: Ideal,
    pub generators: Vec<KittGenerator>,
}

fn kitt_strata(
    input: &KittInput,
    cycle_basis: &mut dyn FnMut(usize) -> Result<CycleBasis>,
) -> Result<KittResult> {
    let ring = input.ring().clone();
    let (r, s) = (input.r(), input.s());
    let mut gens = Vec::new();
    for k in 0..=s.min(r) {
        let z = cycle_basis(r - k)?;
        if z.generators.is_empty() {
            continue;
        }
        for subset in combinations(s, k) {
            let mut gamma = KoszulElement::scalar(r, &ring.one());
            for &j in &subset {
                gamma = gamma.wedge(&input.zeta(j))?;
            }
            for (ci, zgen) in z.generators.iter().enumerate() {
                let top = gamma.wedge(zgen)?.top_coefficient();
                if !top.is_zero() {
                    gens.push(KittGenerator {
                        subset: subset.clone(),
                        cycle_index: ci,
                        poly: top,
                    });
                }
            }
        }
    }
    let ideal = Ideal::new(&ring, gens.iter().map(|g| g.poly.clone()).collect());
    Ok(KittResult {
        ideal,
        generators: gens,
    })
}

/// Kitt(𝔞,I): for every L ⊆ {1..s} with |L| = k ≤ min(s,r) and every
/// generator z of Z_{r−k}(f;R), the coefficient of e_1∧…∧e_r in
/// ζ_{L_1}∧…∧ζ_{L_k}∧z.
pub fn kitt_ideal(input: &KittInput) -> Result<KittResult> {
    let f = input.f.clone();
    kitt_strata(input, &mut |i| cycles(&f, i))
}

/// Kitt over R/b of the images of (a, f, Φ), returned as lifts to R.
pub fn kitt_ideal_mod(input: &KittInput, b: &Ideal) -> Result<KittResult> {
    let f = input.f.clone();
    let b = b.clone();
    kitt_strata(input, &mut |i| cycles_mod(&f, i, &b))
}

/// Right-hand side of the small-arity recursion (r ≤ s):
/// 𝔞 + Fitt_0(I/𝔞) + Σ_{|T| = r−2} Kitt(a_T, I).
pub fn kitt_recursive_small_r(input: &KittInput) -> Result<Ideal> {
    let (r, s) = (input.r(), input.s());
    if r > s {
        return Err(Error::domain("small-arity recursion requires r <= s"));
    }
    let mut gens = input.a.clone();
    gens.extend(fitting_zero(&input.f, &input.phi)?.gens().iter().cloned());
    if r >= 2 {
        for cols in combinations(s, r - 2) {
            let sub = input.select_columns(&cols);
            gens.extend(
                kitt_ideal(&sub)?
                    .ideal
                    .gens()
                    .iter()
                    .cloned(),
            );
        }
    }
    Ok(Ideal::new(input.ring(), gens))
}

/// Right-hand side of the large-arity recursion (r ≥ s):
/// Σ_i Kitt((a with a_i omitted), I) + coefficients of ζ_1∧…∧ζ_s∧Z_{r−s}.
pub fn kitt_recursive_large_r(input: &KittInput) -> Result<Ideal> {
    let (r, s) = (input.r(), input.s());
    if r < s {
        return Err(Error::domain("large-arity recursion requires r >= s"));
    }
    let ring = input.ring().clone();
    let mut gens = Vec::new();
    for omit in 0..s {
        let cols: Vec<usize> = (0..s).filter(|&j| j != omit).collect();
        let sub = input.select_columns(&cols);
        gens.extend(kitt_ideal(&sub)?.ideal.gens().iter().cloned());
    }
    let mut gamma = KoszulElement::scalar(r, &ring.one());
    for j in 0..s {
        gamma = gamma.wedge(&input.zeta(j))?;
    }
    for z in cycles(&input.f, r - s)?.generators {
        let top = gamma.wedge(&z)?.top_coefficient();
        if !top.is_zero() {
            gens.push(top);
        }
    }
    Ok(Ideal::new(&ring, gens))
}

/// Colon 𝔞 :_R I where 𝔞 may be zero; I must be nonzero.
pub fn colon_by_i(a: &Ideal, i: &Ideal) -> Result<Ideal> {
    a.colon(i)
}

/// Containment, radical, Fitting, and monotonicity verdicts for a Kitt
/// instance; monotonicity is judged against supplied comparison inputs
/// (skipped when none apply).
pub fn kitt_identity_suite_with(
    input: &KittInput,
    comparisons: &[KittInput],
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("kitt identity suite");
    let kitt = kitt_ideal(input)?.ideal;
    let a_ideal = input.a_ideal();
    let i_ideal = input.i_ideal();

    // 𝔞 ⊆ Kitt
    let mut witness = String::new();
    let mut ok = true;
    for (j, aj) in input.a.iter().enumerate() {
        if !kitt.contains_poly(aj)? {
            ok = false;
            witness = format!("a_{} not in Kitt", j + 1);
            break;
        }
    }
    report.record("a-in-kitt", ok, witness);

    // Kitt ⊆ 𝔞 : I, and radical equality in both directions
    let colon = a_ideal.colon(&i_ideal)?;
    let mut witness = String::new();
    let mut ok = true;
    for g in kitt.gens() {
        if !colon.contains_poly(g)? {
            ok = false;
            witness = format!("Kitt generator {} not in a:I", g);
            break;
        }
    }
    report.record("kitt-in-colon", ok, witness);

    let mut witness = String::new();
    let mut ok = true;
    for g in colon.gens() {
        if !kitt.radical_member(g)? {
            ok = false;
            witness = format!("colon generator {} not in radical of Kitt", g);
            break;
        }
    }
    for g in kitt.gens() {
        if !colon.radical_member(g)? {
            ok = false;
            witness = format!("Kitt generator {} not in radical of a:I", g);
            break;
        }
    }
    report.record("radical-equality", ok, witness);

    // Fitt_0(I/𝔞) ⊆ Kitt
    let fitt = fitting_zero(&input.f, &input.phi)?;
    let mut witness = String::new();
    let mut ok = true;
    for g in fitt.gens() {
        if !kitt.contains_poly(g)? {
            ok = false;
            witness = format!("Fitt_0 generator {} not in Kitt", g);
            break;
        }
    }
    report.record("fitt0-in-kitt", ok, witness);

    // monotonicity against comparison inputs
    let mut applicable = 0usize;
    let mut ok = true;
    let mut witness = String::new();
    for (ci, cmp) in comparisons.iter().enumerate() {
        if !PolyRing::same(cmp.ring(), input.ring()) {
            continue;
        }
        let cmp_a = cmp.a_ideal();
        let cmp_i = cmp.i_ideal();
        if cmp_a.equals(&a_ideal)? && i_ideal.contains_ideal(&cmp_i)? {
            // 𝔞 ⊆ I₁ ⊆ I ⇒ Kitt(𝔞,I) ⊆ Kitt(𝔞,I₁)
            applicable += 1;
            let other = kitt_ideal(cmp)?.ideal;
            if !other.contains_ideal(&kitt)? {
                ok = false;
                witness = format!("comparison {}: Kitt(a,I) not inside Kitt(a,I1)", ci);
                break;
            }
        } else if cmp_i.equals(&i_ideal)? && a_ideal.contains_ideal(&cmp_a)? {
            // 𝔞₁ ⊆ 𝔞 ⇒ Kitt(𝔞₁,I) ⊆ Kitt(𝔞,I)
            applicable += 1;
            let other = kitt_ideal(cmp)?.ideal;
            if !kitt.contains_ideal(&other)? {
                ok = false;
                witness = format!("comparison {}: Kitt(a1,I) not inside Kitt(a,I)", ci);
                break;
            }
        }
    }
    if applicable == 0 {
        report.skip("monotonicity", "no applicable comparison inputs");
    } else {
        report.record("monotonicity", ok, witness);
    }

    report.note(format!(
        "kitt-equals-colon: {}",
        kitt.equals(&colon)?
    ));
    Ok(report)
}

pub fn kitt_identity_suite(input: &KittInput) -> Result<VerificationReport> {
    kitt_identity_suite_with(input, &[])
}

/// With I ∩ b = 0, the image of Kitt in R/b equals the Kitt of the images,
/// compared as K + b vs Kitt-mod-b + b.
pub fn quotient_image_kitt(input: &KittInput, b: &Ideal) -> Result<VerificationReport> {
    let i_ideal = input.i_ideal();
    if !b.is_zero_ideal() {
        let meet = i_ideal.intersect(b)?;
        if !meet.is_zero_ideal() {
            return Err(Error::precondition("I ∩ b must be zero"));
        }
    }
    let mut report = VerificationReport::new("quotient image of Kitt");
    let k = kitt_ideal(input)?.ideal;
    let k_mod = kitt_ideal_mod(input, b)?.ideal;
    let lhs = k.sum(b);
    let rhs = k_mod.sum(b);
    let ok = lhs.equals(&rhs)?;
    report.record(
        "image-equals-kitt-of-images",
        ok,
        if ok {
            String::new()
        } else {
            "K + b differs from Kitt-mod-b + b".to_string()
        },
    );
    Ok(report)
}

/// For a regular f₀ ∈ 𝔞, the image of Kitt modulo (f₀) equals the Kitt
/// computed over R/(f₀).
pub fn kitt_specialization_check(input: &KittInput, f0: &Polynomial) -> Result<VerificationReport> {
    let a_ideal = input.a_ideal();
    if !a_ideal.contains_poly(f0)? {
        return Err(Error::precondition("f0 must lie in a"));
    }
    let principal = Ideal::new(input.ring(), vec![f0.clone()]);
    let ann = Ideal::zero(input.ring()).colon(&principal)?;
    if !ann.is_zero_ideal() {
        return Err(Error::precondition("f0 must be a nonzerodivisor"));
    }
    let mut report = VerificationReport::new("kitt specialization mod f0");
    let k = kitt_ideal(input)?.ideal;
    let k_mod = kitt_ideal_mod(input, &principal)?.ideal;
    let ok = k.sum(&principal).equals(&k_mod.sum(&principal))?;
    report.record(
        "kitt-image-mod-f0",
        ok,
        if ok {
            String::new()
        } else {
            "image of Kitt differs from Kitt over R/(f0)".to_string()
        },
    );
    Ok(report)
}

fn height_str(d: &DimensionResult) -> String {
    match d.height {
        Height::Finite(h) => h.to_string(),
        Height::Infinite => "infinite".to_string(),
    }
}

fn height_at_least(d: &DimensionResult, bound: usize) -> bool {
    match d.height {
        Height::Finite(h) => h >= bound,
        Height::Infinite => true,
    }
}

/// Residual-intersection test: J = 𝔞:I with ht(J) ≥ s (algebraic) and
/// ht(I+J) ≥ s+1 (geometric). All verdicts are height-based.
pub fn residual_check(a: &Ideal, i: &Ideal, s: usize) -> Result<VerificationReport> {
    if !i.contains_ideal(a)? {
        return Err(Error::precondition("a must be contained in I"));
    }
    if a.gens().len() > s {
        return Err(Error::precondition(format!(
            "a has {} generators, more than s = {}",
            a.gens().len(),
            s
        )));
    }
    let mut report = VerificationReport::new("residual intersection check");
    let j = a.colon(i)?;
    let dim_j = j.dimension();
    report.note(format!("ht(J) = {}", height_str(&dim_j)));
    let proper = j.is_proper();
    let algebraic = proper && height_at_least(&dim_j, s);
    report.record(
        "algebraic",
        algebraic,
        if algebraic {
            String::new()
        } else if !proper {
            "J is the unit ideal".to_string()
        } else {
            format!("ht(J) = {} < s = {}", height_str(&dim_j), s)
        },
    );
    let sum = i.sum(&j);
    let dim_sum = sum.dimension();
    report.note(format!("ht(I+J) = {}", height_str(&dim_sum)));
    let geometric = algebraic && height_at_least(&dim_sum, s + 1);
    report.record(
        "geometric",
        geometric,
        if geometric {
            String::new()
        } else {
            format!("ht(I+J) = {} < s+1 = {}", height_str(&dim_sum), s + 1)
        },
    );
    report.note("height-based".to_string());
    Ok(report)
}

/// G_s condition via Fitting ideals: ht(Fitt_i(I)) ≥ i+1 for 1 ≤ i ≤ s−1,
/// where Fitt_i(I) is the (r−i)×(r−i) minor ideal of the syzygy matrix of
/// I's generators.
pub fn g_condition(i: &Ideal, s: usize) -> Result<bool> {
    if !i.is_proper() {
        return Err(Error::precondition("I must be proper"));
    }
    let ring = i.ring().clone();
    let gens = i.gens();
    if gens.is_empty() {
        return Ok(true);
    }
    let r = gens.len();
    let vecs: Vec<crate::module::FreeVector> = gens
        .iter()
        .map(|g| crate::module::FreeVector::new(&ring, vec![g.clone()]).unwrap())
        .collect();
    let syz = crate::module::syzygies(&vecs)?;
    let mut entries = Vec::new();
    for row in 0..r {
        for sy in &syz {
            entries.push(sy.entry(row).clone());
        }
    }
    let pres = PolyMatrix::new(&ring, r, syz.len(), entries)?;
    for idx in 1..s {
        let fitt = pres.minors_clamped(r as isize - idx as isize);
        if !height_at_least(&fitt.dimension(), idx + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::text::parse_poly;

    fn qring2() -> RingRef {
        PolyRing::new(
            Field::Rational,
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn ci_link(r: &RingRef) -> KittInput {
        // I = (x, y), a = (x^2, y^2), Phi = [[x,0],[0,y]]
        let f = vec![r.var(0), r.var(1)];
        let a = vec![r.var(0).pow(2), r.var(1).pow(2)];
        let phi = PolyMatrix::new(r, 2, 2, vec![r.var(0), r.zero(), r.zero(), r.var(1)]).unwrap();
        KittInput::new(f, a, phi).unwrap()
    }

    #[test]
    fn input_verifies_phi() {
        let r = qring2();
        let f = vec![r.var(0), r.var(1)];
        let a = vec![r.var(0).pow(2)];
        let bad = PolyMatrix::new(&r, 2, 1, vec![r.var(1), r.zero()]).unwrap();
        assert!(KittInput::new(f.clone(), a.clone(), bad).is_err());
        let lifted = KittInput::lift(f, a).unwrap();
        assert_eq!(lifted.s(), 1);
        assert!(KittInput::lift(vec![qring2().var(0)], vec![qring2().var(1)]).is_err());
    }

    #[test]
    fn kitt_of_a_equals_a_is_unit() {
        let r = qring2();
        let f = vec![r.var(0), r.var(1)];
        let phi = PolyMatrix::identity(&r, 2);
        let input = KittInput::new(f.clone(), f, phi).unwrap();
        let k = kitt_ideal(&input).unwrap();
        assert!(!k.ideal.is_proper());
    }

    #[test]
    fn kitt_of_zero_is_annihilator_colon() {
        let r = qring2();
        let f = vec![r.var(0)];
        let phi = PolyMatrix::zero(&r, 1, 0);
        let input = KittInput::new(f, vec![], phi).unwrap();
        let k = kitt_ideal(&input).unwrap();
        assert!(k.ideal.is_zero_ideal()); // 0 : (x) = 0 in a domain
    }

    #[test]
    fn kitt_of_unit_i_is_a() {
        // I = (1) with r = 1: Kitt(a, (1)) = a
        let r = qring2();
        let f = vec![r.one()];
        let a = vec![r.var(0), r.var(1).pow(2)];
        let phi = PolyMatrix::new(&r, 1, 2, a.clone()).unwrap();
        let input = KittInput::new(f, a.clone(), phi).unwrap();
        let k = kitt_ideal(&input).unwrap();
        assert!(k.ideal.equals(&Ideal::new(&r, a)).unwrap());
    }

    #[test]
    fn linkage_instance_equals_colon() {
        let r = qring2();
        let input = ci_link(&r);
        let k = kitt_ideal(&input).unwrap().ideal;
        let j = input.a_ideal().colon(&input.i_ideal()).unwrap();
        assert!(k.equals(&j).unwrap()); // s = 2 <= g+1 = 3 forces equality
        let report = kitt_identity_suite(&input).unwrap();
        assert!(report.passed());
        assert!(report
            .notes
            .iter()
            .any(|n| n == "kitt-equals-colon: true"));
    }

    #[test]
    fn generator_set_independence() {
        let r = qring2();
        let input = ci_link(&r);
        let k = kitt_ideal(&input).unwrap().ideal;
        // append redundant generator f3 = f1 + f2 with a zero row in Phi
        let f2 = vec![r.var(0), r.var(1), r.var(0).add(&r.var(1))];
        let phi2 = PolyMatrix::new(
            &r,
            3,
            2,
            vec![r.var(0), r.zero(), r.zero(), r.var(1), r.zero(), r.zero()],
        )
        .unwrap();
        let input2 = KittInput::new(f2, input.a().to_vec(), phi2).unwrap();
        let k2 = kitt_ideal(&input2).unwrap().ideal;
        assert!(k.equals(&k2).unwrap());
        // permute f with permuted rows of Phi
        let f3 = vec![r.var(1), r.var(0)];
        let phi3 = PolyMatrix::new(&r, 2, 2, vec![r.zero(), r.var(1), r.var(0), r.zero()]).unwrap();
        let input3 = KittInput::new(f3, input.a().to_vec(), phi3).unwrap();
        let k3 = kitt_ideal(&input3).unwrap().ideal;
        assert!(k.equals(&k3).unwrap());
    }

    #[test]
    fn recursive_formulas_match_direct() {
        let r = qring2();
        let input = ci_link(&r); // r = s = 2: both recursions apply
        let k = kitt_ideal(&input).unwrap().ideal;
        let small = kitt_recursive_small_r(&input).unwrap();
        assert!(small.equals(&k).unwrap());
        let large = kitt_recursive_large_r(&input).unwrap();
        assert!(large.equals(&k).unwrap());
    }

    #[test]
    fn recursion_arity_errors() {
        let r = qring2();
        // r = 2, s = 1
        let f = vec![r.var(0), r.var(1)];
        let a = vec![r.var(0).pow(2)];
        let phi = PolyMatrix::new(&r, 2, 1, vec![r.var(0), r.zero()]).unwrap();
        let input = KittInput::new(f, a, phi).unwrap();
        assert!(kitt_recursive_small_r(&input).is_err());
        let k = kitt_ideal(&input).unwrap().ideal;
        assert!(kitt_recursive_large_r(&input).unwrap().equals(&k).unwrap());
    }

    #[test]
    fn mu_one_equality() {
        // I = a + (g): Kitt = a : I exactly when I/a is cyclic
        let r = qring2();
        let f = vec![r.var(0).pow(2), r.var(1).pow(3), r.var(0).mul(&r.var(1))];
        let a = vec![r.var(0).pow(2), r.var(1).pow(3)];
        let input = KittInput::lift(f, a).unwrap();
        let k = kitt_ideal(&input).unwrap().ideal;
        let j = input.a_ideal().colon(&input.i_ideal()).unwrap();
        assert!(k.equals(&j).unwrap());
    }

    #[test]
    fn quotient_image_trivial_and_error() {
        let r = qring2();
        let input = ci_link(&r);
        let b0 = Ideal::zero(&r);
        assert!(quotient_image_kitt(&input, &b0).unwrap().passed());
        let b = Ideal::new(&r, vec![r.var(1)]); // I ∩ (y) = (y·x, y) ∩ ... ≠ 0
        assert!(quotient_image_kitt(&input, &b).is_err());
    }

    #[test]
    fn specialization_mod_regular_element() {
        let r3 = PolyRing::new(
            Field::Rational,
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        // I = (x, y), a = (x^2, y^2 + z·x)
        let f = vec![r3.var(0), r3.var(1)];
        let a = vec![
            r3.var(0).pow(2),
            r3.var(1).pow(2).add(&r3.var(2).mul(&r3.var(0))),
        ];
        let input = KittInput::lift(f, a.clone()).unwrap();
        let report = kitt_specialization_check(&input, &a[0]).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn residual_check_linkage() {
        let r = qring2();
        let input = ci_link(&r);
        let report = residual_check(&input.a_ideal(), &input.i_ideal(), 2).unwrap();
        assert_eq!(
            report.find("algebraic").unwrap().verdict,
            crate::report::Verdict::Pass
        );
        assert_eq!(
            report.find("geometric").unwrap().verdict,
            crate::report::Verdict::Fail
        );
        // a = I: J = (1) improper
        let i = input.i_ideal();
        let rep2 = residual_check(&i, &i, 2).unwrap();
        assert_eq!(
            rep2.find("algebraic").unwrap().verdict,
            crate::report::Verdict::Fail
        );
        // a not inside I
        let a_out = Ideal::new(&r, vec![r.var(0).add(&r.one())]);
        assert!(residual_check(&a_out, &i, 1).is_err());
    }

    #[test]
    fn g_condition_examples() {
        let r = qring2();
        let ci = Ideal::new(&r, vec![r.var(0), r.var(1)]);
        assert!(g_condition(&ci, 3).unwrap());
        let principal = Ideal::new(&r, vec![r.var(0).pow(2)]);
        assert!(g_condition(&principal, 5).unwrap());
        let unit = Ideal::new(&r, vec![r.one()]);
        assert!(g_condition(&unit, 2).is_err());
    }

    #[test]
    fn sandwich_on_lifted_instance() {
        let r = qring2();
        let f = vec![
            parse_poly(&r, "x^2 + y").unwrap(),
            parse_poly(&r, "x^5").unwrap(),
        ];
        let phi = PolyMatrix::new(&r, 2, 2, vec![r.var(0), r.zero(), r.zero(), r.var(1)]).unwrap();
        let a = phi.row_vec_mul(&f).unwrap();
        let input = KittInput::new(f, a, phi).unwrap();
        let k = kitt_ideal(&input).unwrap().ideal;
        let a_ideal = input.a_ideal();
        let j = a_ideal.colon(&input.i_ideal()).unwrap();
        assert!(k.contains_ideal(&a_ideal).unwrap());
        assert!(j.contains_ideal(&k).unwrap());
    }
}
