//! Exhaustive families of genus-2 quintics and the machinery to scan them.
//!
//! A template fixes some coefficients and leaves wildcards ranging over the
//! whole field; instances are enumerated lexicographically over the wildcard
//! values (leftmost wildcard most significant).  Each separable instance is
//! classified by the matrix criterion and, when the size guard allows,
//! cross-checked against the zeta oracle.

use crate::cartier::{classify_ss_g2, SsClass};
use crate::curve::CurveModel;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::field::{FieldElement, FieldSpec};
use crate::par;
use crate::poly::Poly;
use crate::zeta::{self, LPolynomial, Slope, ENUM_GUARD};

/// Hard cap on the number of template instances.
pub const SCAN_GUARD: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub enum Slot {
    Fixed(FieldElement),
    Wild,
}

/// A coefficient template like "1,0,0,*,0,1" over a fixed field.
#[derive(Clone, Debug)]
pub struct FamilyTemplate {
    spec: FieldSpec,
    slots: Vec<Slot>,
}

impl FamilyTemplate {
    pub fn new(spec: FieldSpec, slots: Vec<Slot>) -> Result<Self> {
        if slots.is_empty() {
            return Err(Error::Parse("empty template".into()));
        }
        let t = FamilyTemplate { spec, slots };
        if t.instance_count()? > SCAN_GUARD {
            return Err(Error::SizeGuardExceeded(t.instance_count()?));
        }
        Ok(t)
    }

    /// Parses "c,c,*,c" where each fixed slot uses the element syntax.
    pub fn parse(spec: &FieldSpec, s: &str) -> Result<Self> {
        let slots = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok == "*" {
                    Ok(Slot::Wild)
                } else {
                    Ok(Slot::Fixed(spec.parse_element(tok)?))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        FamilyTemplate::new(spec.clone(), slots)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn wildcards(&self) -> usize {
        self.slots.iter().filter(|s| matches!(s, Slot::Wild)).count()
    }

    pub fn instance_count(&self) -> Result<u64> {
        let mut n: u64 = 1;
        for _ in 0..self.wildcards() {
            n = n.checked_mul(self.spec.q()).ok_or(Error::FieldTooLarge)?;
        }
        Ok(n)
    }

    /// The idx-th instance in canonical order: wildcard values are the
    /// base-q digits of idx, leftmost wildcard most significant.
    pub fn instance(&self, idx: u64) -> Poly {
        let q = self.spec.q();
        let w = self.wildcards();
        let mut digits = vec![0u64; w];
        let mut v = idx;
        for d in digits.iter_mut().rev() {
            *d = v % q;
            v /= q;
        }
        let mut next = 0;
        let coeffs = self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Fixed(c) => c.clone(),
                Slot::Wild => {
                    let c = self.spec.from_index(digits[next]);
                    next += 1;
                    c
                }
            })
            .collect();
        Poly::new(self.spec.clone(), coeffs)
    }
}

/// Outcome for one family member.
#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub poly: Poly,
    /// None when the instance degenerates (degree drop or inseparable).
    pub skip_reason: Option<&'static str>,
    pub classification: Option<SsClass>,
    pub l_poly: Option<LPolynomial>,
    pub slopes: Option<Vec<Slope>>,
    /// Matrix verdict vs zeta verdict; None when zeta was out of guard.
    pub agreement: Option<bool>,
}

/// Classifies one quintic instance; `zeta_exts` carries prebuilt extensions
/// and character tables for k = 1, 2 when the oracle is in range.
fn evaluate_instance(
    template_deg: usize,
    poly: Poly,
    zeta_exts: Option<&[(Extension, Vec<i8>)]>,
) -> InstanceReport {
    let mut report = InstanceReport {
        poly: poly.clone(),
        skip_reason: None,
        classification: None,
        l_poly: None,
        slopes: None,
        agreement: None,
    };
    if poly.degree() != Some(template_deg) {
        report.skip_reason = Some("degree_drop");
        return report;
    }
    let curve = match CurveModel::new(poly) {
        Ok(c) => c,
        Err(Error::Inseparable) => {
            report.skip_reason = Some("inseparable");
            return report;
        }
        Err(_) => {
            report.skip_reason = Some("invalid_model");
            return report;
        }
    };
    let class = classify_ss_g2(&curve).expect("genus-2 quintic");
    report.classification = Some(class);
    if let Some(exts) = zeta_exts {
        let counts: Vec<u64> = exts
            .iter()
            .map(|(ext, chi)| zeta::count_points_in(&curve, ext, chi))
            .collect();
        let l = zeta::l_polynomial_from_counts(curve.spec().q(), curve.genus(), &counts)
            .expect("counts from enumeration are consistent");
        let slopes = zeta::newton_slopes(&l, curve.spec().p()).expect("q is a power of p");
        let half = Slope::new(1, 2);
        let ss_zeta = slopes.iter().all(|s| *s == half);
        report.agreement = Some(class.is_supersingular() == ss_zeta);
        report.l_poly = Some(l);
        report.slopes = Some(slopes);
    }
    report
}

/// Builds the k = 1..=genus extensions when the oracle is within the guard.
pub fn zeta_extensions(spec: &FieldSpec, genus: usize) -> Result<Option<Vec<(Extension, Vec<i8>)>>> {
    let mut size: u64 = 1;
    for _ in 0..genus {
        size = match size.checked_mul(spec.q()) {
            Some(s) => s,
            None => return Ok(None),
        };
    }
    if size > ENUM_GUARD {
        return Ok(None);
    }
    let mut exts = Vec::with_capacity(genus);
    for k in 1..=genus as u32 {
        let ext = Extension::new(spec, k)?;
        let chi = ext.quadratic_character_table();
        exts.push((ext, chi));
    }
    Ok(Some(exts))
}

/// Runs a template scan in canonical order.  Quintic templates only: the
/// matrix classification is the genus-2 one.
pub fn scan_template(template: &FamilyTemplate) -> Result<Vec<InstanceReport>> {
    let deg = template.slots.len() - 1;
    if deg != 5 {
        return Err(Error::Unsupported(format!(
            "scan templates must describe quintics (6 coefficients), got degree {deg}"
        )));
    }
    let exts = zeta_extensions(&template.spec, 2)?;
    let total = template.instance_count()?;
    let reports = par::map_range(total, |idx| {
        evaluate_instance(deg, template.instance(idx), exts.as_deref())
    });
    Ok(reports)
}

/// Summary counters for a scan.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ScanSummary {
    pub total: u64,
    pub separable: u64,
    pub supersingular: u64,
    pub superspecial: u64,
    pub disagreements: u64,
}

pub fn summarize(reports: &[InstanceReport]) -> ScanSummary {
    let mut s = ScanSummary {
        total: reports.len() as u64,
        ..Default::default()
    };
    for r in reports {
        if r.skip_reason.is_some() {
            continue;
        }
        s.separable += 1;
        match r.classification {
            Some(SsClass::SupersingularNotSuperspecial) => s.supersingular += 1,
            Some(SsClass::Superspecial) => {
                s.supersingular += 1;
                s.superspecial += 1;
            }
            _ => {}
        }
        if r.agreement == Some(false) {
            s.disagreements += 1;
        }
    }
    s
}

/// Result of the exhaustive check of the supersingularity rule for
/// f = a5 x^5 + a3 x^3 + a2 x^2 + a1 x + a0 (a4 = 0, a5 != 0).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RuleSweepSummary {
    pub members: u64,
    pub separable: u64,
    pub supersingular: u64,
    pub superspecial_hits: u64,
    /// Members where the matrix verdict differs from the a1 = a2 = 0 rule.
    pub rule_violations: u64,
    /// Members where the matrix verdict differs from the zeta oracle.
    pub zeta_disagreements: u64,
    /// Structural oracle failures (functional equation, slope symmetry,
    /// positivity); must stay zero.
    pub oracle_failures: u64,
}

/// Exhaustive sweep of the a4 = 0 quintic family over the given field,
/// verifying the supersingularity rule and (optionally) oracle agreement
/// on every separable member.
pub fn rule_sweep(spec: &FieldSpec, with_zeta: bool) -> Result<RuleSweepSummary> {
    let q = spec.q();
    let exts = if with_zeta {
        zeta_extensions(spec, 2)?
    } else {
        None
    };
    let total = (q - 1) * q * q * q * q; // a5 != 0
    let partials = par::map_range(total, |idx| {
        let mut v = idx;
        let a0 = spec.from_index(v % q);
        v /= q;
        let a1 = spec.from_index(v % q);
        v /= q;
        let a2 = spec.from_index(v % q);
        v /= q;
        let a3 = spec.from_index(v % q);
        v /= q;
        let a5 = spec.from_index(1 + v % (q - 1));
        let rule_ss = a1.is_zero() && a2.is_zero();
        let f = Poly::new(spec.clone(), vec![a0, a1, a2, a3, spec.zero(), a5]);
        let mut out = RuleSweepSummary {
            members: 1,
            ..Default::default()
        };
        let curve = match CurveModel::new(f) {
            Ok(c) => c,
            Err(_) => return out,
        };
        out.separable = 1;
        let class = classify_ss_g2(&curve).expect("genus-2 quintic");
        match class {
            SsClass::SupersingularNotSuperspecial => out.supersingular = 1,
            SsClass::Superspecial => {
                out.supersingular = 1;
                out.superspecial_hits = 1;
            }
            SsClass::NotSupersingular => {}
        }
        if class.is_supersingular() != rule_ss {
            out.rule_violations = 1;
        }
        if let Some(exts) = exts.as_deref() {
            let counts: Vec<u64> = exts
                .iter()
                .map(|(ext, chi)| zeta::count_points_in(&curve, ext, chi))
                .collect();
            match zeta::l_polynomial_from_counts(q, 2, &counts) {
                Ok(l) => {
                    let slopes =
                        zeta::newton_slopes(&l, spec.p()).expect("q is a power of p");
                    // slope multiset symmetric under s -> 1 - s
                    let mut mirrored: Vec<Slope> =
                        slopes.iter().map(|s| Slope::new(1, 1) - s).collect();
                    mirrored.sort();
                    if mirrored != slopes || l.eval_one() <= 0 {
                        out.oracle_failures = 1;
                    }
                    let half = Slope::new(1, 2);
                    let ss_zeta = slopes.iter().all(|s| *s == half);
                    if ss_zeta != class.is_supersingular() {
                        out.zeta_disagreements = 1;
                    }
                }
                Err(_) => out.oracle_failures = 1,
            }
        }
        out
    });
    let mut sum = RuleSweepSummary::default();
    for p in partials {
        sum.members += p.members;
        sum.separable += p.separable;
        sum.supersingular += p.supersingular;
        sum.superspecial_hits += p.superspecial_hits;
        sum.rule_violations += p.rule_violations;
        sum.zeta_disagreements += p.zeta_disagreements;
        sum.oracle_failures += p.oracle_failures;
    }
    Ok(sum)
}

/// Exhaustive check of the determinant identity over the field: all
/// (a1, a2, a3, a5 != 0) tuples.
pub fn det_identity_sweep(spec: &FieldSpec) -> Result<u64> {
    let q = spec.q();
    let total = q * q * q * (q - 1);
    let failures = par::sum_range(total, |idx| {
        let mut v = idx;
        let a1 = spec.from_index(v % q);
        v /= q;
        let a2 = spec.from_index(v % q);
        v /= q;
        let a3 = spec.from_index(v % q);
        v /= q;
        let a5 = spec.from_index(1 + v);
        match crate::cartier::det_identity_check(spec, &a1, &a2, &a3, &a5) {
            Ok(true) => 0,
            _ => 1,
        }
    });
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn template_enumeration_is_lexicographic() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let t = FamilyTemplate::parse(&f3, "*,0,0,*,0,1").unwrap();
        assert_eq!(t.wildcards(), 2);
        assert_eq!(t.instance_count().unwrap(), 9);
        // leftmost wildcard is most significant
        let p0 = t.instance(0);
        let p1 = t.instance(1);
        let p3 = t.instance(3);
        assert!(p0.coeff(0).is_zero() && p0.coeff(3).is_zero());
        assert!(p1.coeff(0).is_zero() && p1.coeff(3) == f3.one());
        assert!(p3.coeff(0) == f3.one() && p3.coeff(3).is_zero());
    }

    #[test]
    fn scan_of_the_one_parameter_family_over_f9() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let t = FamilyTemplate::parse(&f9, "1,0,0,*,0,1").unwrap();
        let reports = scan_template(&t).unwrap();
        let s = summarize(&reports);
        assert_eq!(s.total, 9);
        assert_eq!(s.separable, 9);
        assert_eq!(s.supersingular, 9);
        assert_eq!(s.superspecial, 0);
        assert_eq!(s.disagreements, 0);
        for r in &reports {
            assert_eq!(r.classification, Some(SsClass::SupersingularNotSuperspecial));
        }
    }

    #[test]
    fn scan_records_degenerate_members() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        // a5 wild: a5 = 0 drops the degree
        let t = FamilyTemplate::parse(&f3, "1,0,0,1,0,*").unwrap();
        let reports = scan_template(&t).unwrap();
        assert_eq!(reports.len(), 3);
        assert_eq!(reports[0].skip_reason, Some("degree_drop"));
        assert!(reports[1].skip_reason.is_none());
    }

    #[test]
    fn non_quintic_templates_rejected() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let t = FamilyTemplate::parse(&f3, "1,*,0,1").unwrap();
        assert!(matches!(scan_template(&t), Err(Error::Unsupported(_))));
    }

    #[test]
    fn rule_sweep_f3_matches_hand_count() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let s = rule_sweep(&f3, true).unwrap();
        assert_eq!(s.members, 162); // 2 * 81
        assert_eq!(s.rule_violations, 0);
        assert_eq!(s.zeta_disagreements, 0);
        assert_eq!(s.superspecial_hits, 0);
        assert_eq!(s.oracle_failures, 0);
        assert!(s.separable > 0 && s.supersingular > 0);
    }

    #[test]
    fn det_identity_sweep_f3() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(det_identity_sweep(&f3).unwrap(), 0);
    }
}
