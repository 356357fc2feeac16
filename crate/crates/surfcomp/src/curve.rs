//! Numerical n-complement criteria on proper curves.
//!
//! The test on each component is
//!   (2g − 2) + r + Σⱼ contrib(bⱼ, n) ≤ 0,
//! where r counts the implied reduced intersection points with neighbouring
//! components and contrib folds reduced multiplicities into the integral
//! part: contrib(1, n) = 1 and contrib(b, n) = ⌊(n+1)b⌋/n for b < 1.

use serde::{Deserialize, Serialize};

use crate::arith::{floor_shift, Multiplicity, Rational};
use crate::error::SurfError;

/// Adjacency pattern of the components.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveShape {
    Irreducible,
    Chain,
    Wheel,
}

/// Weighted marked points on a single component.  Intersection points with
/// neighbour components are implied and never listed here.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Boundary {
    pub entries: Vec<BoundaryPoint>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub label: String,
    pub mult: Multiplicity,
}

impl Boundary {
    pub fn new(entries: Vec<(String, Multiplicity)>) -> Result<Self, SurfError> {
        let b = Boundary {
            entries: entries
                .into_iter()
                .map(|(label, mult)| BoundaryPoint { label, mult })
                .collect(),
        };
        b.validate()?;
        Ok(b)
    }

    /// Unlabeled construction helper; labels are generated as p1, p2, ...
    pub fn from_mults(mults: Vec<Multiplicity>) -> Self {
        Boundary {
            entries: mults
                .into_iter()
                .enumerate()
                .map(|(i, mult)| BoundaryPoint {
                    label: format!("p{}", i + 1),
                    mult,
                })
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<(), SurfError> {
        let mut labels: Vec<&str> = self.entries.iter().map(|e| e.label.as_str()).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(SurfError::InvalidCurve(
                "duplicate boundary point label".into(),
            ));
        }
        Ok(())
    }

    pub fn degree(&self) -> Rational {
        self.entries
            .iter()
            .fold(Rational::zero(), |acc, e| acc + e.mult.value().clone())
    }

    pub fn mults(&self) -> impl Iterator<Item = &Multiplicity> {
        self.entries.iter().map(|e| &e.mult)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CurveComponent {
    pub genus: u32,
    #[serde(default)]
    pub boundary: Boundary,
}

/// A proper curve presented as components with implied adjacency.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CurveConfig {
    pub shape: CurveShape,
    pub components: Vec<CurveComponent>,
}

impl CurveConfig {
    pub fn irreducible(genus: u32, boundary: Boundary) -> Self {
        CurveConfig {
            shape: CurveShape::Irreducible,
            components: vec![CurveComponent { genus, boundary }],
        }
    }

    pub fn chain(boundaries: Vec<Boundary>) -> Self {
        CurveConfig {
            shape: CurveShape::Chain,
            components: boundaries
                .into_iter()
                .map(|boundary| CurveComponent { genus: 0, boundary })
                .collect(),
        }
    }

    pub fn wheel(boundaries: Vec<Boundary>) -> Self {
        CurveConfig {
            shape: CurveShape::Wheel,
            components: boundaries
                .into_iter()
                .map(|boundary| CurveComponent { genus: 0, boundary })
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<(), SurfError> {
        match self.shape {
            CurveShape::Irreducible => {
                if self.components.len() != 1 {
                    return Err(SurfError::InvalidCurve(format!(
                        "irreducible curve must have exactly 1 component, got {}",
                        self.components.len()
                    )));
                }
            }
            CurveShape::Chain => {
                if self.components.is_empty() {
                    return Err(SurfError::InvalidCurve("chain needs >= 1 component".into()));
                }
            }
            CurveShape::Wheel => {
                if self.components.len() < 2 {
                    return Err(SurfError::InvalidCurve(
                        "wheel needs >= 2 components (a 1-wheel is an irreducible genus-1 curve)"
                            .into(),
                    ));
                }
            }
        }
        for c in &self.components {
            if c.genus >= 2 {
                return Err(SurfError::GenusTooLarge(c.genus));
            }
            c.boundary.validate()?;
        }
        Ok(())
    }

    /// Count of implied reduced intersection points for component i.
    fn neighbor_points(&self, i: usize) -> u32 {
        let len = self.components.len();
        match self.shape {
            CurveShape::Irreducible => 0,
            CurveShape::Chain => {
                if len == 1 {
                    0
                } else if i == 0 || i == len - 1 {
                    1
                } else {
                    2
                }
            }
            // A wheel of two components meets in two points, so every wheel
            // component sees 2 regardless of length.
            CurveShape::Wheel => 2,
        }
    }
}

/// Contribution of a single multiplicity to the degree test: +1 for a
/// reduced point, ⌊(n+1)b⌋/n otherwise.
fn contribution(b: &Multiplicity, n: u32) -> Rational {
    if b.is_reduced() {
        Rational::one()
    } else {
        floor_shift(b, n)
    }
}

/// Modified degree of `K + ⌊B⌋ + ⌊(n+1){B}⌋/n` on component `i`.
fn component_degree(config: &CurveConfig, i: usize, n: u32) -> Rational {
    let c = &config.components[i];
    let mut deg = Rational::from_integer(2 * i64::from(c.genus) - 2)
        + Rational::from_integer(i64::from(config.neighbor_points(i)));
    for b in c.boundary.mults() {
        deg = deg + contribution(b, n);
    }
    deg
}

/// True iff the curve carries an n-complement: the shifted log degree is
/// non-positive on every component.
pub fn complement_exists(config: &CurveConfig, n: u32) -> Result<bool, SurfError> {
    assert!(n >= 1, "complement index must be positive");
    config.validate()?;
    Ok((0..config.components.len())
        .all(|i| component_degree(config, i, n) <= Rational::zero()))
}

/// Smallest n ≤ bound with an n-complement, if any.
pub fn minimal_complement_index(
    config: &CurveConfig,
    bound: u32,
) -> Result<Option<u32>, SurfError> {
    config.validate()?;
    for n in 1..=bound {
        if complement_exists(config, n)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Report produced by [`one_not_two`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OneNotTwoReport {
    /// 1-complementary but not 2-complementary.
    pub one_not_two: bool,
    /// Whether some end component has all fractional multiplicities in ℤ/3
    /// with modified degree (at n=1) exactly 1.  Diagnostic only: the shape
    /// is necessary under the adjunction hypotheses of the source statement
    /// but not for arbitrary chains.
    pub end_component_third_shape: bool,
    /// n = 4 complement exists.
    pub four_complement: bool,
    /// n = 6 complement exists.
    pub six_complement: bool,
}

/// Decide whether a chain is 1- but not 2-complementary, with the follow-up
/// facts the degeneration analysis needs (existence of 4- and 6-complements,
/// and whether an end component carries only third-integral multiplicities
/// summing, with its neighbour point, to exactly 1).
pub fn one_not_two(config: &CurveConfig) -> Result<OneNotTwoReport, SurfError> {
    if config.shape != CurveShape::Chain {
        return Err(SurfError::NotAChain);
    }
    config.validate()?;
    let one = complement_exists(config, 1)?;
    let two = complement_exists(config, 2)?;
    let one_not_two = one && !two;

    let third = Rational::new(1, 3);
    let end_indices: Vec<usize> = if config.components.len() == 1 {
        vec![0]
    } else {
        vec![0, config.components.len() - 1]
    };
    let end_component_third_shape = end_indices.into_iter().any(|i| {
        let c = &config.components[i];
        let all_thirds = c
            .boundary
            .mults()
            .all(|b| (b.value().clone() / third.clone()).is_integer());
        let modified = component_degree(config, i, 1);
        // Degree of (K + neighbour points + B)|_end + 2 is deg B + r; the
        // bullet asks for the fractional part summing to 1 on that end.
        let frac_deg = c
            .boundary
            .mults()
            .filter(|b| !b.is_reduced())
            .fold(Rational::zero(), |acc, b| acc + b.value().clone());
        all_thirds && frac_deg == Rational::one() && modified <= Rational::zero()
    });

    Ok(OneNotTwoReport {
        one_not_two,
        end_component_third_shape,
        four_complement: complement_exists(config, 4)?,
        six_complement: complement_exists(config, 6)?,
    })
}

/// n-complement criterion on ℙᵈ with the boundary spread over generic
/// hyperplanes: Σ ⌊(n+1)bᵢ⌋/n ≤ d + 1.
pub fn pd_complement_exists(d: u32, boundary: &Boundary, n: u32) -> Result<bool, SurfError> {
    assert!(d >= 1 && n >= 1);
    if let Some(b) = boundary.mults().find(|b| b.is_reduced()) {
        return Err(SurfError::InvalidCurve(format!(
            "hyperplane multiplicity must be < 1, got {b}"
        )));
    }
    let total = boundary
        .mults()
        .fold(Rational::zero(), |acc, b| acc + floor_shift(b, n));
    Ok(total <= Rational::from_integer(i64::from(d) + 1))
}

/// The effectivity precondition for the ℙᵈ criterion: Σ bᵢ ≤ d + 1.
pub fn pd_ec_check(d: u32, boundary: &Boundary) -> bool {
    boundary.degree() <= Rational::from_integer(i64::from(d) + 1)
}

/// Galois orbits of marked points on an irreducible rational curve, each
/// orbit carrying one multiplicity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrbitBoundary {
    pub orbits: Vec<Orbit>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Orbit {
    pub size: u32,
    pub mult: Multiplicity,
}

impl OrbitBoundary {
    pub fn new(orbits: Vec<(u32, Multiplicity)>) -> Result<Self, SurfError> {
        if orbits.iter().any(|(s, _)| *s == 0) {
            return Err(SurfError::InvalidCurve("orbit of size 0".into()));
        }
        Ok(OrbitBoundary {
            orbits: orbits
                .into_iter()
                .map(|(size, mult)| Orbit { size, mult })
                .collect(),
        })
    }

    pub fn degree(&self) -> Rational {
        self.orbits.iter().fold(Rational::zero(), |acc, o| {
            acc + o.mult.value() * &Rational::from_integer(i64::from(o.size))
        })
    }
}

/// Degree convention for the raised boundary B⁺ in the invariant search.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeConvention {
    /// deg B⁺ = 2 exactly (K + B⁺ ≡ 0 on the curve).
    #[default]
    Exact2,
    /// deg B⁺ ≤ 2 (K + B⁺ anti-effective permitted).
    AtMost2,
}

/// Decide whether an orbit-constant n-complement exists: an assignment
/// b⁺ ∈ (ℤ/n) ∩ [0,1] per orbit, with b⁺ ≥ ⌊b⌋ + ⌊(n+1){b}⌋/n, whose total
/// degree meets the convention.
pub fn invariant_complement_exists(
    orbits: &OrbitBoundary,
    n: u32,
    convention: DegreeConvention,
) -> bool {
    assert!(n >= 1);
    // Work over k = n·b⁺ ∈ {ceil(n·lb), ..., n}; the target degree becomes
    // Σ size·k = 2n (or ≤ 2n).
    let n_rat = Rational::from_integer(i64::from(n));
    let lows: Vec<i64> = orbits
        .orbits
        .iter()
        .map(|o| {
            let lb = contribution(&o.mult, n);
            // ceil(n·lb): lb has denominator dividing n so this is exact.
            let scaled = &lb * &n_rat;
            let num = scaled.numer().clone();
            let den = scaled.denom().clone();
            let q = (&num + &den - num_bigint::BigInt::from(1)) / den;
            use num_traits::ToPrimitive;
            q.to_i64().expect("orbit bound fits i64")
        })
        .collect();
    if lows.iter().any(|&lo| lo > i64::from(n)) {
        return false;
    }
    let target = 2 * i64::from(n);
    let sizes: Vec<i64> = orbits.orbits.iter().map(|o| i64::from(o.size)).collect();

    fn search(
        i: usize,
        acc: i64,
        lows: &[i64],
        sizes: &[i64],
        n: i64,
        target: i64,
        exact: bool,
    ) -> bool {
        if acc > target {
            return false;
        }
        if i == lows.len() {
            return if exact { acc == target } else { acc <= target };
        }
        // Maximum the remaining orbits can still add.
        let mut max_rest = 0;
        for j in i..lows.len() {
            max_rest += sizes[j] * n;
        }
        if exact && acc + max_rest < target {
            return false;
        }
        for k in lows[i]..=n {
            if search(i + 1, acc + sizes[i] * k, lows, sizes, n, target, exact) {
                return true;
            }
        }
        false
    }

    search(
        0,
        0,
        &lows,
        &sizes,
        i64::from(n),
        target,
        convention == DegreeConvention::Exact2,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: i64, q: i64) -> Multiplicity {
        Multiplicity::new_i64(p, q).unwrap()
    }

    fn irr(mults: &[(i64, i64)]) -> CurveConfig {
        CurveConfig::irreducible(
            0,
            Boundary::from_mults(mults.iter().map(|&(p, q)| m(p, q)).collect()),
        )
    }

    #[test]
    fn irreducible_examples() {
        let c = irr(&[(1, 2), (1, 2), (1, 2), (1, 2)]);
        assert!(complement_exists(&c, 2).unwrap());
        let c = irr(&[(1, 2), (2, 3), (5, 6)]);
        assert!(!complement_exists(&c, 5).unwrap());
        assert!(complement_exists(&c, 6).unwrap());
    }

    #[test]
    fn wheel_and_genus_one() {
        let w = CurveConfig::wheel(vec![Boundary::default(); 3]);
        assert!(complement_exists(&w, 1).unwrap());

        let g1 = CurveConfig::irreducible(1, Boundary::default());
        assert!(complement_exists(&g1, 7).unwrap());
        let g1b = CurveConfig::irreducible(1, Boundary::from_mults(vec![m(1, 2)]));
        assert!(!complement_exists(&g1b, 1).unwrap());
    }

    #[test]
    fn genus_two_rejected() {
        let c = CurveConfig::irreducible(2, Boundary::default());
        assert!(matches!(
            complement_exists(&c, 1),
            Err(SurfError::GenusTooLarge(2))
        ));
    }

    #[test]
    fn minimal_indices() {
        assert_eq!(
            minimal_complement_index(&irr(&[(1, 2), (2, 3), (5, 6)]), 66).unwrap(),
            Some(6)
        );
        assert_eq!(
            minimal_complement_index(&irr(&[(2, 3), (2, 3), (2, 3)]), 66).unwrap(),
            Some(3)
        );
        assert_eq!(minimal_complement_index(&irr(&[]), 66).unwrap(), Some(1));
        // Degree 2 all reduced: every n works, so minimal is 1.
        let two_ones = irr(&[(1, 1), (1, 1)]);
        assert_eq!(minimal_complement_index(&two_ones, 66).unwrap(), Some(1));
    }

    #[test]
    fn chain_neighbor_counts() {
        // Two empty components: each end sees one reduced point, so the
        // degree is −1 per component for every n.
        let two = CurveConfig::chain(vec![Boundary::default(), Boundary::default()]);
        assert!(complement_exists(&two, 1).unwrap());
        // Three components, middle sees two points: degree 0 exactly.
        let three = CurveConfig::chain(vec![Boundary::default(); 3]);
        assert!(complement_exists(&three, 1).unwrap());
    }

    #[test]
    fn one_not_two_report() {
        // End component {1/3, 2/3} plus one neighbour point: degree is 0 at
        // n = 1 and 1/2 at n = 2.
        let c = CurveConfig::chain(vec![
            Boundary::from_mults(vec![m(1, 3), m(2, 3)]),
            Boundary::default(),
        ]);
        let rep = one_not_two(&c).unwrap();
        assert!(rep.one_not_two);
        assert!(rep.end_component_third_shape);
        assert!(rep.four_complement);
        assert!(rep.six_complement);

        let c = CurveConfig::chain(vec![Boundary::default(), Boundary::default()]);
        let rep = one_not_two(&c).unwrap();
        assert!(!rep.one_not_two);

        let c = CurveConfig::chain(vec![Boundary::from_mults(vec![m(1, 2), m(1, 2)])]);
        assert!(!one_not_two(&c).unwrap().one_not_two);

        assert!(one_not_two(&irr(&[])).is_err());
    }

    #[test]
    fn one_not_two_shape_is_diagnostic_not_theorem() {
        // Six sixth... six thirds: 1-complementary (all floors drop), not
        // 2-complementary (six halves), yet the fractional degree on the end
        // is 2, not 1.  The shape flag must come back false while the main
        // predicate is true.
        let c = CurveConfig::chain(vec![Boundary::from_mults(vec![m(1, 3); 6])]);
        let rep = one_not_two(&c).unwrap();
        assert!(rep.one_not_two);
        assert!(!rep.end_component_third_shape);
        assert!(rep.four_complement && rep.six_complement);
    }

    #[test]
    fn pd_checks() {
        let b = Boundary::from_mults(vec![m(1, 2); 4]);
        assert!(pd_complement_exists(1, &b, 2).unwrap());
        let b = Boundary::from_mults(vec![m(6, 7); 3]);
        assert!(pd_complement_exists(2, &b, 7).unwrap());
        let b = Boundary::from_mults(vec![m(5, 6); 4]);
        assert!(!pd_complement_exists(2, &b, 1).unwrap());
        // Reduced hyperplanes are out of scope for the shifted-floor test.
        let b = Boundary::from_mults(vec![m(1, 1)]);
        assert!(pd_complement_exists(2, &b, 1).is_err());
    }

    #[test]
    fn pd_ec() {
        let b = Boundary::from_mults(vec![m(6, 7), m(6, 7), m(2, 3), m(1, 2)]);
        assert!(pd_ec_check(2, &b));
        let b = Boundary::from_mults(vec![m(1, 1); 3]);
        assert!(!pd_ec_check(1, &b));
        assert!(pd_ec_check(3, &Boundary::default()));
    }

    #[test]
    fn invariant_complements() {
        let o = OrbitBoundary::new(vec![(2, m(1, 3)), (3, m(1, 3))]).unwrap();
        assert!(!invariant_complement_exists(&o, 3, DegreeConvention::Exact2));
        // The relaxed convention admits (1/3, 1/3) itself.
        assert!(invariant_complement_exists(&o, 3, DegreeConvention::AtMost2));

        let o = OrbitBoundary::new(vec![(1, m(1, 2)); 4]).unwrap();
        assert!(invariant_complement_exists(&o, 2, DegreeConvention::Exact2));

        let o = OrbitBoundary::new(vec![(2, m(1, 2)), (1, m(0, 1))]).unwrap();
        assert!(invariant_complement_exists(&o, 1, DegreeConvention::Exact2));

        // A reduced orbit point forces b+ = 1 there.
        let o = OrbitBoundary::new(vec![(3, m(1, 1))]).unwrap();
        assert!(!invariant_complement_exists(&o, 5, DegreeConvention::Exact2));
        let o = OrbitBoundary::new(vec![(2, m(1, 1))]).unwrap();
        assert!(invariant_complement_exists(&o, 5, DegreeConvention::Exact2));
    }
}
