//! Type labels for complement data, the toric defect criterion, and golden
//! verification of the eight named exceptional configurations.
//!
//! A complement of index r on a surface germ gets a two-index label: 𝔸ₘⁿ
//! and 𝔻ₘⁿ for the regular families supported on a connected singular
//! curve, and 𝔼rₘⁿ for the exceptional families.  The subscript m counts
//! reduced exceptional divisors on a minimal log terminal resolution, the
//! superscript n counts reduced boundary components.  The golden
//! configurations (four cones, two fibrations, two degenerate cases) are
//! shipped as dual-graph fixtures and re-verified numerically: crepant
//! multiplicities, pairing identities, δ counts, trivial-complement
//! indices, and the boundedness constant c.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Multiplicity, Rational, REGULAR_INDICES};
use crate::curve::Boundary;
use crate::error::SurfError;
use crate::graph::{
    crepant_discrepancies, delta_invariant, log_canonical_status, pairing, CrepantResult,
    DeltaInvariant, DualGraph, LogCanonicalStatus, Role,
};

// ---------------------------------------------------------------------------
// Type labels.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    A,
    D,
    E1,
    E2,
    E3,
    E4,
    E6,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TypeLabel {
    pub family: Family,
    pub m: u32,
    pub n: u32,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::A => "A",
            Family::D => "D",
            Family::E1 => "E1",
            Family::E2 => "E2",
            Family::E3 => "E3",
            Family::E4 => "E4",
            Family::E6 => "E6",
        };
        write!(f, "{}_{}^{}", fam, self.m, self.n)
    }
}

/// Input data for labelling: supplied, not inferred, because m refers to a
/// minimal log terminal resolution the caller has chosen.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplementDatum {
    /// Complement index r.
    pub index: u32,
    /// Reduced irreducible boundary components (n).
    pub n_reduced: u32,
    /// Reduced exceptional divisors on a minimal lt resolution (m).
    pub m_exceptional: u32,
    pub lcs_connected: bool,
    /// Arithmetic genus of the locus of log canonical singularities, when
    /// the locus is a curve.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lcs_genus: Option<u8>,
    /// Whether the reduced boundary support is a connected singular curve.
    pub support_singular_connected: bool,
    /// Global pair (complete surface) rather than a germ.
    pub global: bool,
    pub klt: bool,
}

/// Label the datum, enforcing the classification constraints.
pub fn type_label(d: &ComplementDatum) -> Result<TypeLabel, SurfError> {
    if !REGULAR_INDICES.contains(&d.index) {
        return Err(SurfError::NotRegularIndex(d.index));
    }
    if d.klt && (d.n_reduced != 0 || d.m_exceptional != 0) {
        return Err(SurfError::InvalidLabel(
            "klt complements have no reduced components: n = m = 0".into(),
        ));
    }
    if let Some(g) = d.lcs_genus {
        if g > 1 {
            return Err(SurfError::InvalidLabel(
                "locus of log canonical singularities has genus 0 or 1".into(),
            ));
        }
        if d.n_reduced == 0 && d.m_exceptional == 0 {
            return Err(SurfError::InvalidLabel(
                "a genus is declared but the locus of log canonical \
                 singularities is empty"
                    .into(),
            ));
        }
    }
    let family = match d.index {
        1 if d.support_singular_connected => Family::A,
        1 => Family::E1,
        2 if d.support_singular_connected => Family::D,
        2 => Family::E2,
        3 => Family::E3,
        4 => Family::E4,
        6 => Family::E6,
        _ => unreachable!("regular indices checked above"),
    };
    let exceptional_family = !matches!(family, Family::A | Family::D);
    if exceptional_family {
        let total = d.n_reduced + d.m_exceptional;
        if total > 2 {
            return Err(SurfError::InvalidLabel(format!(
                "exceptional families require n + m <= 2, got {total}"
            )));
        }
        if total == 2 && !d.global {
            return Err(SurfError::InvalidLabel(
                "n + m = 2 occurs only for global pairs".into(),
            ));
        }
    }
    if d.lcs_genus == Some(1) {
        let elliptic_e1 =
            family == Family::E1 && d.m_exceptional == 1 && d.n_reduced == 0;
        let wheel_a = family == Family::A && d.n_reduced >= 1;
        if !(elliptic_e1 || wheel_a) {
            return Err(SurfError::InvalidLabel(
                "a genus-1 locus occurs only for E1 with m = 1, n = 0 or for \
                 wheels in the A family"
                    .into(),
            ));
        }
    }
    Ok(TypeLabel {
        family,
        m: d.m_exceptional,
        n: d.n_reduced,
    })
}

// ---------------------------------------------------------------------------
// Toric criterion.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ToricCheck {
    /// rho − (Σ bᵢ − 2); zero exactly in the formally toric case.
    pub defect: Rational,
    pub formally_toric: bool,
}

pub fn toric_defect(rho: u32, boundary: &Boundary) -> Result<ToricCheck, SurfError> {
    let defect =
        Rational::from_integer(i64::from(rho)) - (boundary.degree() - Rational::from_integer(2));
    if defect.is_negative() {
        return Err(SurfError::NegativeDefect(format!(
            "rho = {rho} is below the boundary degree bound: defect {defect}"
        )));
    }
    Ok(ToricCheck {
        formally_toric: defect.is_zero(),
        defect,
    })
}

// ---------------------------------------------------------------------------
// Regular vs exceptional indices.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regularity {
    Regular,
    Exceptional,
}

pub fn regular_or_exceptional(min_index: u32) -> Regularity {
    assert!(min_index >= 1, "complement indices are positive");
    if REGULAR_INDICES.contains(&min_index) {
        Regularity::Regular
    } else {
        Regularity::Exceptional
    }
}

// ---------------------------------------------------------------------------
// Golden configuration verification.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckLine {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConfigReport {
    pub case: String,
    pub checks: Vec<CheckLine>,
    pub passed: bool,
}

impl fmt::Display for ConfigReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case {}:", self.case)?;
        for c in &self.checks {
            let mark = if c.passed { "ok " } else { "FAIL" };
            writeln!(f, "  [{mark}] {}: {}", c.label, c.detail)?;
        }
        write!(
            f,
            "  => {}",
            if self.passed { "verified" } else { "MISMATCH" }
        )
    }
}

struct CaseGolden {
    name: &'static str,
    fixture: &'static str,
    /// Expected crepant multiplicities by exceptional vertex id.
    crepant: &'static [(&'static str, (i64, i64))],
    /// Expected (K+B)·V for the ambient vertices.
    pairings: &'static [(&'static str, (i64, i64))],
    /// Index of the trivial complement, where the case states one.
    trivial_complement: Option<u32>,
    /// Boundedness constant c and the vertex whose multiplicity attains
    /// 1 − c on the polytope boundary.
    c: Option<(i64, i64, &'static str)>,
    /// Second reading of an ambiguous description; must fail the pairing
    /// sign conditions.
    alt_fixture: Option<&'static str>,
}

const CASES: &[CaseGolden] = &[
    CaseGolden {
        name: "a21",
        fixture: include_str!("../fixtures/v1/a21.json"),
        crepant: &[],
        pairings: &[("C1", (-1, 7)), ("C2", (-1, 7)), ("D1", (-2, 7))],
        trivial_complement: None,
        c: None,
        alt_fixture: None,
    },
    CaseGolden {
        name: "a22",
        fixture: include_str!("../fixtures/v1/a22.json"),
        crepant: &[("Sig", (3, 7))],
        pairings: &[("C1", (-2, 21)), ("C2", (-1, 21)), ("D1", (-2, 21))],
        trivial_complement: None,
        c: Some((1, 21, "C2")),
        alt_fixture: None,
    },
    CaseGolden {
        name: "a23",
        fixture: include_str!("../fixtures/v1/a23.json"),
        crepant: &[("Sig", (13, 21))],
        pairings: &[("C1", (-1, 14)), ("C2", (-1, 42)), ("D1", (-1, 14))],
        trivial_complement: None,
        c: Some((1, 14, "C2")),
        alt_fixture: None,
    },
    CaseGolden {
        name: "a24",
        fixture: include_str!("../fixtures/v1/a24.json"),
        crepant: &[("E1", (19, 28)), ("E2", (4, 7)), ("E3", (2, 7))],
        pairings: &[("C1", (-3, 28)), ("C2", (-1, 14)), ("D1", (-3, 28))],
        trivial_complement: None,
        c: None,
        alt_fixture: Some(include_str!("../fixtures/v1/a24_alt.json")),
    },
    CaseGolden {
        name: "a25",
        fixture: include_str!("../fixtures/v1/a25.json"),
        crepant: &[
            ("E1", (11, 14)),
            ("E2", (9, 14)),
            ("E3", (3, 7)),
            ("E4", (3, 14)),
        ],
        pairings: &[("C1", (0, 1)), ("C2", (0, 1)), ("D1", (0, 1))],
        trivial_complement: Some(14),
        c: Some((1, 7, "C1")),
        alt_fixture: None,
    },
    CaseGolden {
        name: "a26",
        fixture: include_str!("../fixtures/v1/a26.json"),
        crepant: &[("E1", (3, 7)), ("E2", (4, 7)), ("E3", (2, 7))],
        pairings: &[("C1", (0, 1)), ("C2", (0, 1))],
        trivial_complement: Some(7),
        c: Some((1, 7, "C1")),
        alt_fixture: None,
    },
    CaseGolden {
        name: "i21",
        fixture: include_str!("../fixtures/v1/i21.json"),
        crepant: &[("Sig", (1, 4))],
        pairings: &[("C1", (-1, 14)), ("C2", (-1, 14)), ("L", (-1, 28))],
        trivial_complement: None,
        c: Some((3, 28, "C1")),
        alt_fixture: None,
    },
    CaseGolden {
        name: "i22",
        fixture: include_str!("../fixtures/v1/i22.json"),
        crepant: &[("E1", (3, 7)), ("E2", (2, 7)), ("E3", (4, 7))],
        pairings: &[("C1", (0, 1)), ("C2", (0, 1)), ("E4", (0, 1))],
        trivial_complement: Some(7),
        c: Some((1, 7, "C1")),
        alt_fixture: None,
    },
];

pub fn case_names() -> Vec<&'static str> {
    CASES.iter().map(|c| c.name).collect()
}

fn normalize_name(name: &str) -> String {
    name.chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

/// The shipped fixture for a named case ("a21", ..., "i22"), plus the
/// alternative a24 reading as "a24alt".
pub fn embedded_fixture(name: &str) -> Option<&'static str> {
    let norm = normalize_name(name);
    if norm == "a24alt" {
        return CASES
            .iter()
            .find(|c| c.name == "a24")
            .and_then(|c| c.alt_fixture);
    }
    CASES.iter().find(|c| c.name == norm).map(|c| c.fixture)
}

/// Boundary and crepant multiplicities as pairing coefficients.
fn full_coefficients(
    g: &DualGraph,
    crepant: &CrepantResult,
) -> BTreeMap<String, Rational> {
    g.vertices
        .iter()
        .map(|v| {
            let coeff = match v.role {
                Role::Ambient => v.mult.as_ref().expect("validated").value().clone(),
                Role::Exceptional => crepant
                    .multiplicity_of(&v.id)
                    .expect("solved")
                    .clone(),
            };
            (v.id.clone(), coeff)
        })
        .collect()
}

fn ambient_pairings(g: &DualGraph) -> Result<Vec<(String, Rational)>, SurfError> {
    let crepant = crepant_discrepancies(g)?;
    let coeffs = full_coefficients(g, &crepant);
    g.vertices
        .iter()
        .filter(|v| v.role == Role::Ambient)
        .map(|v| Ok((v.id.clone(), pairing(g, &coeffs, &v.id)?)))
        .collect()
}

fn with_mult(g: &DualGraph, id: &str, value: Rational) -> Result<DualGraph, SurfError> {
    let mut g = g.clone();
    let v = g
        .vertices
        .iter_mut()
        .find(|v| v.id == id)
        .ok_or_else(|| SurfError::InvalidGraph(format!("unknown vertex {id:?}")))?;
    v.mult = Some(Multiplicity::new(value)?);
    Ok(g)
}

fn push(checks: &mut Vec<CheckLine>, label: &str, passed: bool, detail: String) {
    checks.push(CheckLine {
        label: label.into(),
        passed,
        detail,
    });
}

fn rational_of(pair: (i64, i64)) -> Rational {
    Rational::new(pair.0, pair.1)
}

/// Verify the named configuration's stated numerics on the given graph.
pub fn verify_exceptional_config(
    name: &str,
    g: &DualGraph,
) -> Result<ConfigReport, SurfError> {
    let norm = normalize_name(name);
    let golden = CASES
        .iter()
        .find(|c| c.name == norm)
        .ok_or_else(|| SurfError::UnknownConfig(name.to_string()))?;
    g.validate()?;
    let mut checks = Vec::new();

    let crepant = crepant_discrepancies(g)?;
    push(
        &mut checks,
        "sub-boundary",
        crepant.sub_boundary.is_empty(),
        format!("negative multiplicities: {:?}", crepant.sub_boundary),
    );
    for (id, expect) in golden.crepant {
        let expect = rational_of(*expect);
        let got = crepant.multiplicity_of(id);
        let ok = got == Some(&expect);
        push(
            &mut checks,
            &format!("crepant {id}"),
            ok,
            match got {
                Some(v) => format!("{v} (want {expect})"),
                None => "missing".to_string(),
            },
        );
    }

    let pairings = ambient_pairings(g)?;
    for (id, expect) in golden.pairings {
        let expect = rational_of(*expect);
        let got = pairings.iter().find(|(pid, _)| pid == id).map(|(_, v)| v);
        let ok = got == Some(&expect);
        push(
            &mut checks,
            &format!("pairing {id}"),
            ok,
            match got {
                Some(v) => format!("(K+B)·{id} = {v} (want {expect})"),
                None => "missing".to_string(),
            },
        );
    }
    let nef = pairings.iter().all(|(_, v)| *v <= Rational::zero());
    push(
        &mut checks,
        "anti-nef",
        nef,
        "every pairing is nonpositive".into(),
    );

    match delta_invariant(g)? {
        DeltaInvariant::Finite(d) => {
            push(&mut checks, "delta", d == 2, format!("delta = {d} (want 2)"));
        }
        DeltaInvariant::Infinite => {
            push(&mut checks, "delta", false, "delta is infinite (want 2)".into());
        }
    }

    let status = log_canonical_status(g)?;
    let want = LogCanonicalStatus::KawamataLT {
        epsilon: Rational::new(1, 7),
    };
    push(
        &mut checks,
        "log terminal",
        status == want,
        format!("{status}"),
    );

    if let Some(n) = golden.trivial_complement {
        let zero = pairings.iter().all(|(_, v)| v.is_zero());
        let coeffs = full_coefficients(g, &crepant);
        let integral = coeffs.values().all(|b| {
            (b.clone() * Rational::from_integer(i64::from(n))).is_integer()
        });
        push(
            &mut checks,
            &format!("trivial {n}-complement"),
            zero && integral,
            format!(
                "K+B trivial: {zero}; multiplicities in (1/{n})Z: {integral}"
            ),
        );
    }

    if let Some((cn, cd, raise_id)) = golden.c {
        let c = Rational::new(cn, cd);
        let ok = c_binding(g, raise_id, &c)?;
        push(
            &mut checks,
            "constant c",
            ok,
            format!("multiplicity of {raise_id} maxes out at 1 - {c}"),
        );
    }

    constraint_checks(&norm, g, &crepant, &mut checks);

    if let Some(alt) = golden.alt_fixture {
        let alt_graph = DualGraph::from_json(alt)?;
        let alt_pairings = ambient_pairings(&alt_graph)?;
        let violated = alt_pairings.iter().any(|(_, v)| *v > Rational::zero());
        push(
            &mut checks,
            "alternative reading",
            violated,
            "second reading violates the pairing sign and is rejected".into(),
        );
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(ConfigReport {
        case: golden.name.to_string(),
        checks,
        passed,
    })
}

/// The defining property of c in its degenerate form: raising the named
/// multiplicity to 1 − c lands exactly on the boundary of the polytope of
/// log canonical, anti-nef boundaries (some pairing reaches 0), while any
/// further increase leaves it.
fn c_binding(g: &DualGraph, raise_id: &str, c: &Rational) -> Result<bool, SurfError> {
    let max = Rational::one() - c.clone();
    let at_max = with_mult(g, raise_id, max)?;
    let crepant = crepant_discrepancies(&at_max)?;
    let lc = crepant
        .entries
        .iter()
        .all(|e| !e.log_discrepancy.is_negative());
    let pairings = ambient_pairings(&at_max)?;
    let nef = pairings.iter().all(|(_, v)| *v <= Rational::zero());
    let binds = pairings.iter().any(|(_, v)| v.is_zero());

    let beyond = Rational::one() - c.clone() / Rational::from_integer(2);
    let past = with_mult(g, raise_id, beyond)?;
    let broken = match ambient_pairings(&past) {
        Ok(p) => p.iter().any(|(_, v)| *v > Rational::zero()),
        Err(SurfError::CrepantSingular) => true,
        Err(e) => return Err(e),
    };
    Ok(lc && nef && binds && broken)
}

/// The per-case degree constraints stated with the cone configurations.
fn constraint_checks(
    name: &str,
    g: &DualGraph,
    _crepant: &CrepantResult,
    checks: &mut Vec<CheckLine>,
) {
    let mult = |id: &str| -> Rational {
        g.vertices
            .iter()
            .find(|v| v.id == id)
            .and_then(|v| v.mult.as_ref())
            .map(|m| m.value().clone())
            .expect("ambient vertex present")
    };
    match name {
        "a21" => {
            // 1 < 2d ≤ 3 − b₁ − b₂ for the degree-2 component.
            let lhs = Rational::from_integer(2) * mult("D1");
            let hi = Rational::from_integer(3) - mult("C1") - mult("C2");
            let ok = Rational::one() < lhs && lhs <= hi;
            push(
                checks,
                "degree window",
                ok,
                format!("1 < {lhs} <= {hi}"),
            );
        }
        "a22" => {
            let lhs = Rational::from_integer(2) * mult("C1") + mult("C2");
            let ok = lhs <= Rational::new(8, 3);
            push(checks, "degree bound", ok, format!("2b1 + b2 = {lhs} <= 8/3"));
        }
        "a23" => {
            let lhs = Rational::from_integer(3) * mult("C1") + mult("C2");
            let ok = lhs <= Rational::new(7, 2);
            push(checks, "degree bound", ok, format!("3b1 + b2 = {lhs} <= 7/2"));
        }
        _ => {}
    }
}

/// Verify a named case against its shipped fixture.
pub fn verify_case(name: &str) -> Result<ConfigReport, SurfError> {
    let fixture = embedded_fixture(name)
        .ok_or_else(|| SurfError::UnknownConfig(name.to_string()))?;
    let g = DualGraph::from_json(fixture)?;
    verify_exceptional_config(name, &g)
}

/// Verify all eight shipped cases.
pub fn verify_all_cases() -> Result<Vec<ConfigReport>, SurfError> {
    case_names().into_iter().map(verify_case).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(index: u32) -> ComplementDatum {
        ComplementDatum {
            index,
            n_reduced: 0,
            m_exceptional: 0,
            lcs_connected: true,
            lcs_genus: None,
            support_singular_connected: false,
            global: false,
            klt: false,
        }
    }

    #[test]
    fn label_families() {
        let duval_hyperplane = ComplementDatum {
            index: 1,
            n_reduced: 2,
            m_exceptional: 3,
            support_singular_connected: true,
            ..datum(1)
        };
        let l = type_label(&duval_hyperplane).unwrap();
        assert_eq!(l.family, Family::A);
        assert_eq!(l.to_string(), "A_3^2");

        let kodaira_wheel = ComplementDatum {
            index: 1,
            n_reduced: 5,
            support_singular_connected: true,
            lcs_genus: Some(1),
            ..datum(1)
        };
        let l = type_label(&kodaira_wheel).unwrap();
        assert_eq!(l.family, Family::A);
        assert_eq!(l.to_string(), "A_0^5");

        let concurrent_lines = ComplementDatum {
            index: 2,
            n_reduced: 1,
            m_exceptional: 1,
            support_singular_connected: true,
            ..datum(2)
        };
        let l = type_label(&concurrent_lines).unwrap();
        assert_eq!(l.family, Family::D);
        assert_eq!(l.to_string(), "D_1^1");

        let smooth_support = ComplementDatum {
            index: 1,
            n_reduced: 1,
            support_singular_connected: false,
            global: false,
            ..datum(1)
        };
        assert_eq!(type_label(&smooth_support).unwrap().family, Family::E1);

        assert_eq!(type_label(&datum(3)).unwrap().family, Family::E3);
        assert_eq!(type_label(&datum(4)).unwrap().family, Family::E4);
        assert_eq!(type_label(&datum(6)).unwrap().family, Family::E6);
    }

    #[test]
    fn label_constraints() {
        assert!(matches!(
            type_label(&datum(5)),
            Err(SurfError::NotRegularIndex(5))
        ));

        let too_many = ComplementDatum {
            n_reduced: 2,
            m_exceptional: 1,
            ..datum(3)
        };
        assert!(type_label(&too_many).is_err());

        let two_local = ComplementDatum {
            n_reduced: 1,
            m_exceptional: 1,
            global: false,
            ..datum(3)
        };
        assert!(type_label(&two_local).is_err());
        let two_global = ComplementDatum {
            global: true,
            ..two_local
        };
        assert!(type_label(&two_global).is_ok());

        let klt_with_reduced = ComplementDatum {
            klt: true,
            n_reduced: 1,
            ..datum(1)
        };
        assert!(type_label(&klt_with_reduced).is_err());

        // Genus 1 on an E3 locus is out.
        let bad_genus = ComplementDatum {
            n_reduced: 1,
            lcs_genus: Some(1),
            ..datum(3)
        };
        assert!(type_label(&bad_genus).is_err());

        // The elliptic-singularity shape: E1 with m = 1.
        let elliptic = ComplementDatum {
            m_exceptional: 1,
            lcs_genus: Some(1),
            ..datum(1)
        };
        assert_eq!(type_label(&elliptic).unwrap().to_string(), "E1_1^0");

        // Genus on an empty locus.
        let phantom = ComplementDatum {
            lcs_genus: Some(0),
            ..datum(1)
        };
        assert!(type_label(&phantom).is_err());
    }

    #[test]
    fn toric_examples() {
        let m = |p, q| Multiplicity::new_i64(p, q).unwrap();
        let three_lines = Boundary::from_mults(vec![m(1, 1); 3]);
        let t = toric_defect(1, &three_lines).unwrap();
        assert!(t.formally_toric);
        assert!(t.defect.is_zero());

        let two_lines = Boundary::from_mults(vec![m(1, 1); 2]);
        let t = toric_defect(1, &two_lines).unwrap();
        assert!(!t.formally_toric);
        assert_eq!(t.defect, Rational::one());

        // Wheels with rho = n − 2.
        for n in 3..=12 {
            let wheel = Boundary::from_mults(vec![m(1, 1); n as usize]);
            let t = toric_defect(n - 2, &wheel).unwrap();
            assert!(t.formally_toric, "n = {n}");
        }

        let overfull = Boundary::from_mults(vec![m(1, 1); 4]);
        assert!(toric_defect(1, &overfull).is_err());
    }

    #[test]
    fn regularity_split() {
        for r in [1, 2, 3, 4, 6] {
            assert_eq!(regular_or_exceptional(r), Regularity::Regular);
        }
        for r in [5, 7, 8, 9, 10, 14, 57] {
            assert_eq!(regular_or_exceptional(r), Regularity::Exceptional);
        }
    }

    #[test]
    fn all_golden_cases_verify() {
        for report in verify_all_cases().unwrap() {
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn alt_reading_is_rejected() {
        let alt = DualGraph::from_json(embedded_fixture("a24alt").unwrap()).unwrap();
        let pairings = ambient_pairings(&alt).unwrap();
        let c1 = pairings.iter().find(|(id, _)| id == "C1").unwrap();
        assert_eq!(c1.1, Rational::new(1, 7));
    }

    #[test]
    fn unknown_case_errors() {
        let g = DualGraph::from_json(embedded_fixture("a21").unwrap()).unwrap();
        assert!(matches!(
            verify_exceptional_config("z99", &g),
            Err(SurfError::UnknownConfig(_))
        ));
    }

    #[test]
    fn verify_detects_tampering() {
        // Swap one multiplicity in a21 and watch the pairing checks fail.
        let mut g = DualGraph::from_json(embedded_fixture("a21").unwrap()).unwrap();
        g.vertices[0].mult = Some(Multiplicity::new_i64(1, 2).unwrap());
        let report = verify_exceptional_config("a21", &g).unwrap();
        assert!(!report.passed);
        assert!(report.checks.iter().any(|c| !c.passed));
    }
}
