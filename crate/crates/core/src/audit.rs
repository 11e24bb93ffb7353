//! Per-group audit: moduli dimension, the special-subvariety dimension and
//! their comparison, plus the emptiness and cyclic-locus side checks.

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;

use crate::chars::{character_of, det_character, dim_invariant_cubics, dim_special_subvariety};
use crate::groups::{EigenProfile, MatrixGroup};
use crate::invariants::{reynolds_basis, InvariantSpace};
use crate::linalg::commutant_dimension;
use crate::smoothprobe::{probe_nonempty, Certificate, ProbeConfig, ProbeOutcome};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum CyclicLocus {
    CertifiedYes(String),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NonEmpty {
    Certified { certificate: Certificate },
    Inconclusive,
    EmptyCertified { reason: String },
}

impl NonEmpty {
    pub fn is_certified(&self) -> bool {
        matches!(self, NonEmpty::Certified { .. })
    }

    pub fn is_empty_certified(&self) -> bool {
        matches!(self, NonEmpty::EmptyCertified { .. })
    }
}

/// An element whose eigenvalues rule out a smooth invariant cubic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub class: String,
    pub element_order: u32,
    pub profile: String,
    pub condition: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub seed: u64,
    pub trials: usize,
    pub primes: Vec<u64>,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub group_id: String,
    pub order: usize,
    pub projectively_faithful: bool,
    pub dim_u: usize,
    pub commutant_dim: usize,
    /// Present only when some smooth invariant member is certified.
    pub dim_moduli: Option<usize>,
    pub dim_special: u64,
    pub criterion_holds: Option<bool>,
    pub cyclic_locus: CyclicLocus,
    pub liftability_violations: Vec<Violation>,
    pub nonempty: NonEmpty,
    pub provenance: Provenance,
}

fn fractions(pairs: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut v = pairs.to_vec();
    v.sort_unstable();
    v
}

/// Eigenvalue conditions that any element of a group fixing a smooth cubic
/// must satisfy, for elements of order 2, 4 and 5.
pub fn liftability_violation(p: &EigenProfile) -> Option<String> {
    let f = p.fractions();
    let (one, half) = ((0, 1), (1, 2));
    match p.order() {
        2 => {
            let ok = f == fractions(&[one, one, one, one, half]) || f == fractions(&[one, one, one, half, half]);
            (!ok).then(|| "order 2 needs eigenvalue -1 with multiplicity 1 or 2".to_string())
        }
        4 => {
            let bad = f == fractions(&[one, one, one, one, (1, 4)]) || f == fractions(&[one, one, one, one, (3, 4)]);
            bad.then(|| "order 4 may not be a reflection by a fourth root of unity".to_string())
        }
        5 => {
            let ok = f == fractions(&[one, (1, 5), (2, 5), (3, 5), (4, 5)]);
            (!ok).then(|| "order 5 needs all five fifth roots of unity as eigenvalues".to_string())
        }
        _ => None,
    }
}

pub fn liftability_check(g: &MatrixGroup) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for class in g.classes() {
        let p = g.eigen_profile(class.representative)?;
        if let Some(condition) = liftability_violation(&p) {
            out.push(Violation {
                class: class.label.clone(),
                element_order: class.element_order,
                profile: p.to_string(),
                condition,
            });
        }
    }
    Ok(out)
}

/// Membership in the cyclic locus, by an element that is a scalar multiple
/// of a conjugate of `Diag(ζ3, 1, 1, 1, 1)` or by a split variable.
///
/// The element test is insensitive to scalars, so it is run on `G` itself
/// rather than on `G·⟨ζ3⟩`.
pub fn cyclic_locus_flag(g: &MatrixGroup, space: &InvariantSpace) -> Result<CyclicLocus> {
    for class in g.classes() {
        let p = g.eigen_profile(class.representative)?;
        if p.is_cyclic_cubic_type() {
            return Ok(CyclicLocus::CertifiedYes(format!(
                "class {} has eigenvalues {p}, a scalar times Diag(E(3), 1, 1, 1, 1)",
                class.label
            )));
        }
    }
    if let Some(i) = space.split_variable() {
        return Ok(CyclicLocus::CertifiedYes(format!("x{i} occurs in the invariants only as x{i}^3")));
    }
    Ok(CyclicLocus::Unknown)
}

/// `dim U^G - dim C(G)`, when a smooth member is certified.
pub fn dim_moduli(g: &MatrixGroup, space: &InvariantSpace, nonempty: &NonEmpty) -> Result<Option<usize>> {
    if !g.is_projectively_faithful() {
        return Err(Error::NotProjectivelyFaithful);
    }
    if !nonempty.is_certified() {
        return Ok(None);
    }
    let c = commutant_dimension(g.generators());
    Ok(Some(space.dim().checked_sub(c).ok_or_else(|| {
        Error::Inconsistent(format!("{} invariants but commutant of dimension {c}", space.dim()))
    })?))
}

pub fn check_criterion(id: &str, g: &MatrixGroup, config: &ProbeConfig) -> Result<AuditReport> {
    if !g.is_projectively_faithful() {
        return Err(Error::NotProjectivelyFaithful);
    }
    let chi = character_of(g);
    let space = reynolds_basis(g)?;
    let by_characters = dim_invariant_cubics(&chi)?;
    if by_characters != space.dim() as u64 {
        return Err(Error::Inconsistent(format!(
            "{id}: {} invariant cubics by averaging, {by_characters} from the character",
            space.dim()
        )));
    }
    let commutant_dim = commutant_dimension(g.generators());
    let norm = chi.norm()?.count()?;
    if norm != commutant_dim as u64 {
        return Err(Error::Inconsistent(format!(
            "{id}: commutant has dimension {commutant_dim} but <chi, chi> = {norm}"
        )));
    }
    let det = det_character(g, &chi)?;
    let dim_special = dim_special_subvariety(&chi, &det)?;
    let liftability_violations = liftability_check(g)?;

    let mut primes = Vec::new();
    let nonempty = if space.dim() == 0 {
        NonEmpty::EmptyCertified { reason: "no invariant cubic forms".into() }
    } else if let Some(v) = liftability_violations.first() {
        NonEmpty::EmptyCertified { reason: format!("class {} with eigenvalues {}: {}", v.class, v.profile, v.condition) }
    } else if let Some(i) = space.cone_point() {
        NonEmpty::EmptyCertified {
            reason: format!("x{i} occurs in no invariant, so every member is singular at the coordinate point e{i}"),
        }
    } else {
        match probe_nonempty(&space, config)? {
            ProbeOutcome::NonEmptyCertified(certificate) => {
                primes.push(certificate.prime);
                NonEmpty::Certified { certificate }
            }
            ProbeOutcome::Inconclusive { primes: tried, .. } => {
                primes = tried;
                NonEmpty::Inconclusive
            }
        }
    };
    let dim_moduli = dim_moduli(g, &space, &nonempty)?;
    Ok(AuditReport {
        group_id: id.to_string(),
        order: g.order(),
        projectively_faithful: true,
        dim_u: space.dim(),
        commutant_dim,
        dim_moduli,
        dim_special,
        criterion_holds: dim_moduli.map(|m| m as u64 == dim_special),
        cyclic_locus: cyclic_locus_flag(g, &space)?,
        liftability_violations,
        nonempty,
        provenance: Provenance {
            seed: config.seed,
            trials: config.trials,
            primes,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
    })
}

impl AuditReport {
    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    /// `dim_M` and `dim_Z` as they appear in lattice annotations, e.g. `2 < 3`.
    pub fn annotation(&self) -> String {
        match self.dim_moduli {
            None => format!("- / {}", self.dim_special),
            Some(m) => {
                let rel = match (m as u64).cmp(&self.dim_special) {
                    std::cmp::Ordering::Less => "<",
                    std::cmp::Ordering::Equal => "=",
                    std::cmp::Ordering::Greater => ">",
                };
                format!("{m} {rel} {}", self.dim_special)
            }
        }
    }
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".to_string(), T::to_string)
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonempty = match &self.nonempty {
            NonEmpty::Certified { certificate: c } => {
                format!("certified (smooth sample {} over F_{}, seed {})", c.trial, c.prime, c.seed)
            }
            NonEmpty::Inconclusive => "inconclusive".to_string(),
            NonEmpty::EmptyCertified { reason } => format!("empty: {reason}"),
        };
        let cyclic = match &self.cyclic_locus {
            CyclicLocus::CertifiedYes(r) => format!("yes: {r}"),
            CyclicLocus::Unknown => "unknown".to_string(),
        };
        let rows = [
            ("group", self.group_id.clone()),
            ("order", self.order.to_string()),
            ("projectively faithful", self.projectively_faithful.to_string()),
            ("invariant cubics", self.dim_u.to_string()),
            ("commutant", self.commutant_dim.to_string()),
            ("dim M", opt(&self.dim_moduli)),
            ("dim Z", self.dim_special.to_string()),
            ("criterion", opt(&self.criterion_holds)),
            ("cyclic locus", cyclic),
            ("nonempty", nonempty),
            ("violations", self.liftability_violations.len().to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in rows {
            writeln!(f, "{k:<width$}  {v}")?;
        }
        for v in &self.liftability_violations {
            writeln!(f, "  class {} {}: {}", v.class, v.profile, v.condition)?;
        }
        Ok(())
    }
}

/// One conjugacy class of subgroups with its audit.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeNode {
    pub node: usize,
    pub type_name: String,
    pub order: usize,
    pub conjugates: usize,
    pub report: AuditReport,
}

/// Audits every subgroup generated by at most two elements, one per
/// conjugacy class, in fingerprint order.
pub fn lattice_report(g: &MatrixGroup, config: &ProbeConfig) -> Result<Vec<LatticeNode>> {
    let subgroups = g.subgroups_two_generated()?;
    subgroups
        .par_iter()
        .enumerate()
        .map(|(node, s)| {
            let type_name = s.fingerprint.type_name();
            let h = s.to_group(g)?;
            let report = check_criterion(&type_name, &h, config)?;
            Ok(LatticeNode { node, type_name, order: s.members.len(), conjugates: s.conjugates, report })
        })
        .collect()
}

pub fn lattice_csv(nodes: &[LatticeNode]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Input(format!("csv: {e}"));
    w.write_record(["node", "order", "type", "dim_M", "dim_Z", "criterion"]).map_err(io)?;
    for n in nodes {
        w.write_record([
            n.node.to_string(),
            n.order.to_string(),
            n.type_name.clone(),
            n.report.dim_moduli.map_or(String::new(), |m| m.to_string()),
            n.report.dim_special.to_string(),
            n.report.criterion_holds.map_or(String::new(), |c| c.to_string()),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Input(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn lattice_table(nodes: &[LatticeNode]) -> String {
    let header = ["node", "type", "order", "conjugates", "dim U", "commutant", "dim M vs dim Z"];
    let rows: Vec<[String; 7]> = nodes
        .iter()
        .map(|n| {
            [
                n.node.to_string(),
                n.type_name.clone(),
                n.order.to_string(),
                n.conjugates.to_string(),
                n.report.dim_u.to_string(),
                n.report.commutant_dim.to_string(),
                n.report.annotation(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for r in &rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let parts: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(header.to_vec(), &mut out);
    for r in &rows {
        line(r.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Cyclotomic;
    use crate::groups::Limits;
    use crate::linalg::Matrix;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    fn audit(gens: Vec<Matrix>) -> AuditReport {
        let g = MatrixGroup::generate(&gens, Limits::default()).unwrap();
        check_criterion("test", &g, &ProbeConfig::default()).unwrap()
    }

    #[test]
    fn violations() {
        let p = EigenProfile::from_exponents(2, &[1, 1, 1, 0, 0]);
        assert!(liftability_violation(&p).is_some());
        let p = EigenProfile::from_exponents(5, &[0, 1, 2, 3, 4]);
        assert!(liftability_violation(&p).is_none());
        let p = EigenProfile::from_exponents(4, &[1, 0, 0, 0, 0]);
        assert!(liftability_violation(&p).is_some());
        let p = EigenProfile::from_exponents(4, &[1, 2, 0, 0, 0]);
        assert!(liftability_violation(&p).is_none());
    }

    #[test]
    fn trivial_and_fermat_cyclic() {
        let r = audit(vec![Matrix::identity(5)]);
        assert_eq!((r.dim_moduli, r.dim_special), (Some(10), 15));
        assert_eq!(r.criterion_holds, Some(false));
        assert_eq!(r.cyclic_locus, CyclicLocus::Unknown);
        let one = Cyclotomic::one;
        let r = audit(vec![Matrix::diag(&[z(3, 1), one(), one(), one(), one()])]);
        assert_eq!(r.dim_moduli, Some(4));
        assert!(matches!(r.cyclic_locus, CyclicLocus::CertifiedYes(_)));
    }

    #[test]
    fn bad_involution_is_empty() {
        let one = Cyclotomic::one;
        let m = -one();
        let r = audit(vec![Matrix::diag(&[m.clone(), m.clone(), m.clone(), one(), one()])]);
        assert!(r.nonempty.is_empty_certified());
        assert_eq!(r.dim_moduli, None);
        assert_eq!(r.criterion_holds, None);
        assert_eq!(r.liftability_violations.len(), 1);
    }

    #[test]
    fn json_is_stable() {
        let r = audit(vec![Matrix::identity(5)]);
        let a = r.to_json();
        assert_eq!(a, audit(vec![Matrix::identity(5)]).to_json());
        let keys: Vec<&str> = a.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
