//! Generic extensions R[U_ij], the s-generic Kitt ideal, the generic
//! s-residual, specialization, and composite deformation verification.

use crate::error::{Error, Result};
use crate::ideal::{extend_append, Height, Ideal};
use crate::kitt::{kitt_ideal, residual_check, KittInput, KittResult};
use crate::matrix::PolyMatrix;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial, RingOps, RingRef};
use crate::report::VerificationReport;

/// S = R[U_11..U_rs] with α_j = Σ_i f_i·U_ij and Ψ = [U_ij].
#[derive(Clone, Debug)]
pub struct GenericExtension {
    base: RingRef,
    extended: RingRef,
    r: usize,
    s: usize,
    f_ext: Vec<Polynomial>,
    alpha: Vec<Polynomial>,
    psi: PolyMatrix,
}

/// U-variable names: `U{i}{j}` while both indices stay single-digit,
/// `U{i}_{j}` beyond that; 1-indexed, row-major.
pub fn u_var_name(r: usize, s: usize, i: usize, j: usize) -> String {
    if r <= 9 && s <= 9 {
        format!("U{}{}", i + 1, j + 1)
    } else {
        format!("U{}_{}", i + 1, j + 1)
    }
}

impl GenericExtension {
    pub fn new(f: &[Polynomial], s: usize) -> Result<GenericExtension> {
        let first = f
            .first()
            .ok_or_else(|| Error::precondition("generic extension needs generators"))?;
        if s == 0 {
            return Err(Error::precondition("generic extension needs s >= 1"));
        }
        let base = first.ring().clone();
        let r = f.len();
        let n = base.nvars();
        let mut names = Vec::with_capacity(r * s);
        for i in 0..r {
            for j in 0..s {
                names.push(u_var_name(r, s, i, j));
            }
        }
        let extended = extend_append(&base, &names, MonomialOrder::GrevLex)?;
        let id: Vec<usize> = (0..n).collect();
        let f_ext: Vec<Polynomial> = f.iter().map(|p| p.inject(&extended, &id)).collect();
        let mut psi_entries = Vec::with_capacity(r * s);
        for i in 0..r {
            for j in 0..s {
                psi_entries.push(extended.var(n + i * s + j));
            }
        }
        let psi = PolyMatrix::new(&extended, r, s, psi_entries)?;
        let alpha = psi.row_vec_mul(&f_ext)?;
        Ok(GenericExtension {
            base,
            extended,
            r,
            s,
            f_ext,
            alpha,
            psi,
        })
    }

    pub fn base(&self) -> &RingRef {
        &self.base
    }

    pub fn extended(&self) -> &RingRef {
        &self.extended
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn f_ext(&self) -> &[Polynomial] {
        &self.f_ext
    }

    pub fn alpha(&self) -> &[Polynomial] {
        &self.alpha
    }

    pub fn psi(&self) -> &PolyMatrix {
        &self.psi
    }

    /// The triple (α, f, Ψ) over S.
    pub fn kitt_input(&self) -> KittInput {
        KittInput::new(self.f_ext.clone(), self.alpha.clone(), self.psi.clone())
            .expect("alpha = f·Psi by construction")
    }

    pub fn lift_poly(&self, p: &Polynomial) -> Result<Polynomial> {
        if !PolyRing::same(p.ring(), &self.base) {
            return Err(Error::RingMismatch("lift from a different base ring".into()));
        }
        let id: Vec<usize> = (0..self.base.nvars()).collect();
        Ok(p.inject(&self.extended, &id))
    }

    pub fn lift_ideal(&self, i: &Ideal) -> Result<Ideal> {
        let gens = i
            .gens()
            .iter()
            .map(|g| self.lift_poly(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.extended, gens))
    }

    fn check_phi(&self, phi: &PolyMatrix) -> Result<()> {
        if phi.rows() != self.r || phi.cols() != self.s {
            return Err(Error::domain(format!(
                "specialization matrix must be {}x{}",
                self.r, self.s
            )));
        }
        if !PolyRing::same(phi.ring(), &self.base) {
            return Err(Error::RingMismatch(
                "specialization matrix outside the base ring".into(),
            ));
        }
        Ok(())
    }

    /// The sequence x = U_11 − c_11, …, U_rs − c_rs in canonical (i,j)
    /// row-major order, as elements of S.
    pub fn x_sequence(&self, phi: &PolyMatrix) -> Result<Vec<Polynomial>> {
        self.check_phi(phi)?;
        let n = self.base.nvars();
        let mut xs = Vec::with_capacity(self.r * self.s);
        for i in 0..self.r {
            for j in 0..self.s {
                let u = self.extended.var(n + i * self.s + j);
                xs.push(u.sub(&self.lift_poly(phi.get(i, j))?));
            }
        }
        Ok(xs)
    }

    /// Substitute U_ij ↦ c_ij, the isomorphism S/(x) ≅ R.
    pub fn specialize_poly(&self, p: &Polynomial, phi: &PolyMatrix) -> Result<Polynomial> {
        self.check_phi(phi)?;
        if !PolyRing::same(p.ring(), &self.extended) {
            return Err(Error::RingMismatch("specializing outside the extension".into()));
        }
        let n = self.base.nvars();
        let mut images: Vec<Polynomial> = (0..n).map(|i| self.base.var(i)).collect();
        for i in 0..self.r {
            for j in 0..self.s {
                images.push(phi.get(i, j).clone());
            }
        }
        p.substitute(&self.base, &images)
    }

    pub fn specialize_ideal(&self, k: &Ideal, phi: &PolyMatrix) -> Result<Ideal> {
        let gens = k
            .gens()
            .iter()
            .map(|g| self.specialize_poly(g, phi))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.base, gens))
    }
}

/// Kitt^g(s, f) over S.
pub fn generic_kitt(f: &[Polynomial], s: usize) -> Result<(GenericExtension, KittResult)> {
    let ext = GenericExtension::new(f, s)?;
    let result = kitt_ideal(&ext.kitt_input())?;
    Ok((ext, result))
}

/// R(s, f) = (α) :_S I·S.
pub fn generic_residual(f: &[Polynomial], s: usize) -> Result<(GenericExtension, Ideal)> {
    let ext = GenericExtension::new(f, s)?;
    let alpha_ideal = Ideal::new(ext.extended(), ext.alpha().to_vec());
    let i_ext = Ideal::new(ext.extended(), ext.f_ext().to_vec());
    let residual = alpha_ideal.colon(&i_ext)?;
    Ok((ext, residual))
}

/// Per-element regularity of `x_seq` on S/K: for each k,
/// colon(K + (x_1..x_{k−1}), (x_k)) = K + (x_1..x_{k−1}), plus properness
/// of K + (x).
pub fn regular_sequence_check(x_seq: &[Polynomial], k: &Ideal) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("regular sequence check");
    let ring = k.ring().clone();
    let mut acc = k.clone();
    let mut failed = false;
    for (idx, x) in x_seq.iter().enumerate() {
        let name = format!("regular-{}", idx + 1);
        if failed {
            report.skip(name, "earlier element already failed");
            continue;
        }
        let principal = Ideal::new(&ring, vec![x.clone()]);
        let colon = acc.colon(&principal)?;
        let ok = colon.equals(&acc)?;
        report.record(
            name,
            ok,
            if ok {
                String::new()
            } else {
                format!("zerodivisor at position {}", idx + 1)
            },
        );
        if !ok {
            failed = true;
        }
        acc = acc.sum_polys(std::slice::from_ref(x));
    }
    let proper = acc.is_proper();
    report.record(
        "proper",
        proper,
        if proper {
            String::new()
        } else {
            "K + (x) is the unit ideal".to_string()
        },
    );
    Ok(report)
}

/// Specialization collapse: specialize(Kitt^g(s,f), Φ) = Kitt(𝔞,I),
/// both sides computed independently.
pub fn verify_specialization(input: &KittInput) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("specialization of the generic Kitt");
    let direct = kitt_ideal(input)?.ideal;
    if input.s() == 0 {
        report.record("specialize-equals-direct", true, "s = 0: no generic variables");
        return Ok(report);
    }
    let (ext, gk) = generic_kitt(input.f(), input.s())?;
    let specialized = ext.specialize_ideal(&gk.ideal, input.phi())?;
    let ok = specialized.equals(&direct)?;
    report.record(
        "specialize-equals-direct",
        ok,
        if ok {
            String::new()
        } else {
            "specialized generic Kitt differs from the direct Kitt".to_string()
        },
    );
    Ok(report)
}

fn height_of(i: &Ideal) -> Height {
    i.dimension().height
}

fn height_display(h: &Height) -> String {
    match h {
        Height::Finite(v) => v.to_string(),
        Height::Infinite => "infinite".to_string(),
    }
}

fn height_at_least(h: &Height, bound: usize) -> bool {
    match h {
        Height::Finite(v) => *v >= bound,
        Height::Infinite => true,
    }
}

/// Composite deformation verification at the graded/global level.
pub fn verify_deformation(a: &Ideal, i: &Ideal, s: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("deformation verification");
    report.note("graded-global verification".to_string());

    let ht_i = height_of(i);
    report.note(format!("ht(I) = {}", height_display(&ht_i)));
    let within = match ht_i {
        Height::Finite(h) => s <= h + 1,
        Height::Infinite => false,
    };
    if !within {
        report.skip(
            "hypothesis",
            format!("s = {} exceeds ht(I) + 1; outside the guaranteed range", s),
        );
        return Ok(report);
    }

    match residual_check(a, i, s) {
        Err(e) => {
            report.record("residual", false, format!("precondition: {}", e));
            return Ok(report);
        }
        Ok(res) => {
            let ok = res
                .find("algebraic")
                .map(|c| c.verdict == crate::report::Verdict::Pass)
                .unwrap_or(false);
            report.record(
                "residual",
                ok,
                if ok {
                    String::new()
                } else {
                    "a : I is not an s-residual intersection".to_string()
                },
            );
            if !ok {
                return Ok(report);
            }
        }
    }

    let f = i.gens().to_vec();
    let input = match KittInput::lift(f.clone(), a.gens().to_vec()) {
        Ok(inp) => inp,
        Err(e) => {
            report.record("lift", false, format!("{}", e));
            return Ok(report);
        }
    };

    // (1) the base identity: Kitt(a, I) = a : I
    let j = a.colon(i)?;
    let kitt = kitt_ideal(&input)?.ideal;
    let ok1 = kitt.equals(&j)?;
    report.record(
        "kitt-equals-colon",
        ok1,
        if ok1 {
            String::new()
        } else {
            "Kitt(a,I) differs from a : I".to_string()
        },
    );

    // (2) generic Kitt vs generic residual over S
    let (ext, gk) = generic_kitt(&f, s)?;
    let (_, gres) = generic_residual(&f, s)?;
    let ht_gk = height_of(&gk.ideal);
    report.note(format!("ht(generic kitt) = {}", height_display(&ht_gk)));
    let ok2 = gk.ideal.equals(&gres)? && height_at_least(&ht_gk, s);
    report.record(
        "generic-kitt-equals-generic-residual",
        ok2,
        if ok2 {
            String::new()
        } else {
            "generic Kitt and generic residual disagree over S".to_string()
        },
    );

    // (3) the specialization sequence is regular on S/Kitt^g
    let xs = ext.x_sequence(input.phi())?;
    let reg = regular_sequence_check(&xs, &gk.ideal)?;
    let ok3 = reg.passed();
    report.record(
        "x-regular-on-generic-kitt",
        ok3,
        if ok3 {
            String::new()
        } else {
            let culprit = reg
                .checks
                .iter()
                .find(|c| c.verdict == crate::report::Verdict::Fail)
                .map(|c| c.name.clone())
                .unwrap_or_default();
            format!("regularity fails at {}", culprit)
        },
    );

    // (4) collapse of the generic residual along x
    let spec_res = ext.specialize_ideal(&gres, input.phi())?;
    let lifted = ext.lift_ideal(&kitt)?;
    let lhs = gres.sum_polys(&xs);
    let rhs = lifted.sum_polys(&xs);
    let ok4 = lhs.equals(&rhs)? && spec_res.equals(&j)?;
    report.record(
        "residual-collapse",
        ok4,
        if ok4 {
            String::new()
        } else {
            "generic residual does not collapse onto a : I along x".to_string()
        },
    );

    Ok(report)
}

/// Heights of Kitt(𝔞,I), 𝔞:I, Kitt^g(s,f), and R(s,f), with the bound
/// ht(R(s,f)) ≤ s asserted for nonzero f.
pub fn height_report(f: &[Polynomial], a: &[Polynomial], s: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("height report");
    report.note("graded-global verification".to_string());
    let input = KittInput::lift(f.to_vec(), a.to_vec())?;
    let kitt = kitt_ideal(&input)?.ideal;
    report.note(format!(
        "ht(kitt) = {}",
        height_display(&height_of(&kitt))
    ));
    let j = input.a_ideal().colon(&input.i_ideal())?;
    report.note(format!("ht(colon) = {}", height_display(&height_of(&j))));
    let (_, gk) = generic_kitt(f, s)?;
    report.note(format!(
        "ht(generic kitt) = {}",
        height_display(&height_of(&gk.ideal))
    ));
    let (_, gres) = generic_residual(f, s)?;
    let ht_res = height_of(&gres);
    report.note(format!(
        "ht(generic residual) = {}",
        height_display(&ht_res)
    ));
    let f_nonzero = f.iter().any(|p| !p.is_zero());
    if f_nonzero {
        let ok = match ht_res {
            Height::Finite(h) => h <= s,
            Height::Infinite => false,
        };
        report.record(
            "generic-residual-height-bound",
            ok,
            if ok {
                String::new()
            } else {
                format!("ht(R(s,f)) exceeds s = {}", s)
            },
        );
    } else {
        report.skip("generic-residual-height-bound", "f is zero");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::text::parse_poly;

    fn qring2() -> RingRef {
        PolyRing::new(
            Field::Rational,
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn example_generic_kitt_two_generators() {
        let r = qring2();
        let f = vec![
            parse_poly(&r, "x^2 + y").unwrap(),
            parse_poly(&r, "x^5").unwrap(),
        ];
        let (ext, gk) = generic_kitt(&f, 2).unwrap();
        let s = ext.extended();
        let expect = Ideal::new(
            s,
            vec![
                parse_poly(s, "x^5*U22 + x^2*U12 + y*U12").unwrap(),
                parse_poly(s, "x^5*U21 + x^2*U11 + y*U11").unwrap(),
                parse_poly(s, "U12*U21 - U11*U22").unwrap(),
            ],
        );
        assert!(gk.ideal.equals(&expect).unwrap());

        let f2 = vec![
            parse_poly(&r, "x^2 + y").unwrap(),
            parse_poly(&r, "x^5 + x^2 + y").unwrap(),
        ];
        let (ext2, gk2) = generic_kitt(&f2, 2).unwrap();
        let gk2_in_ext = Ideal::new(
            s,
            gk2.ideal
                .gens()
                .iter()
                .map(|g| g.inject_by_name(s).unwrap())
                .collect(),
        );
        assert!(PolyRing::same(ext2.extended(), ext2.extended()));
        assert!(!gk.ideal.equals(&gk2_in_ext).unwrap());
    }

    #[test]
    fn principal_generic_kitt() {
        let r = PolyRing::new(Field::Rational, vec!["x".into()], MonomialOrder::GrevLex).unwrap();
        let f = vec![r.var(0)];
        let (ext, gk) = generic_kitt(&f, 1).unwrap();
        let s = ext.extended();
        // degree-1 harvest: the 1x1 minor U11 of Psi; equals the residual
        // (x*U11) : (x) since s = 1 is within the linkage range
        let expect = Ideal::new(s, vec![parse_poly(s, "U11").unwrap()]);
        assert!(gk.ideal.equals(&expect).unwrap());

        let (_, res) = generic_residual(&f, 1).unwrap();
        assert!(res.equals(&expect).unwrap());
        assert!(res.contains_poly(&parse_poly(s, "x*U11").unwrap()).unwrap());
    }

    #[test]
    fn specialization_examples() {
        let r = qring2();
        let f = vec![
            parse_poly(&r, "x^2 + y").unwrap(),
            parse_poly(&r, "x^5").unwrap(),
        ];
        let (ext, gk) = generic_kitt(&f, 2).unwrap();
        // identity Phi: a = I, so the specialized ideal is (1)
        let phi = PolyMatrix::identity(&r, 2);
        let spec = ext.specialize_ideal(&gk.ideal, &phi).unwrap();
        assert!(!spec.is_proper());
    }

    #[test]
    fn specialization_roundtrip_random_phi() {
        let r = qring2();
        let f = vec![
            parse_poly(&r, "x^2 + y").unwrap(),
            parse_poly(&r, "x^5").unwrap(),
        ];
        let phi = PolyMatrix::new(
            &r,
            2,
            2,
            vec![r.var(0), r.zero(), r.zero(), r.var(0)],
        )
        .unwrap();
        let a = phi.row_vec_mul(&f).unwrap();
        let input = KittInput::new(f, a, phi).unwrap();
        let report = verify_specialization(&input).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn x_sequence_regular_on_zero_ideal() {
        let r = qring2();
        let f = vec![r.var(0), r.var(1)];
        let ext = GenericExtension::new(&f, 2).unwrap();
        let phi = PolyMatrix::new(
            &r,
            2,
            2,
            vec![r.var(0), r.zero(), r.zero(), r.var(1)],
        )
        .unwrap();
        let xs = ext.x_sequence(&phi).unwrap();
        assert_eq!(xs.len(), 4);
        let report = regular_sequence_check(&xs, &Ideal::zero(ext.extended())).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn zerodivisor_detected() {
        let r = qring2();
        let f = vec![r.var(0), r.var(1)];
        let ext = GenericExtension::new(&f, 2).unwrap();
        let s = ext.extended();
        let u11 = s.var(r.nvars());
        let k = Ideal::new(s, vec![u11.clone()]);
        let report = regular_sequence_check(&[u11], &k).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn deformation_linkage_instance() {
        let r = qring2();
        let a = Ideal::new(&r, vec![r.var(0).pow(2), r.var(1).pow(2)]);
        let i = Ideal::new(&r, vec![r.var(0), r.var(1)]);
        let report = verify_deformation(&a, &i, 2).unwrap();
        assert!(report.passed(), "{}", report);
        // outside the hypothesis range: skipped verdict
        let rep2 = verify_deformation(&a, &i, 4).unwrap();
        assert_eq!(
            rep2.find("hypothesis").unwrap().verdict,
            crate::report::Verdict::Skipped
        );
    }

    #[test]
    fn height_report_principal() {
        let r = PolyRing::new(Field::Rational, vec!["x".into()], MonomialOrder::GrevLex).unwrap();
        let f = vec![r.var(0)];
        let a = vec![r.var(0).pow(2)];
        let report = height_report(&f, &a, 1).unwrap();
        assert!(report.passed());
        assert!(report
            .notes
            .iter()
            .any(|n| n == "ht(generic residual) = 1"));
    }
}
