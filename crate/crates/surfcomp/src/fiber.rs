//! Log minimal models of genus-1 degenerations: the multiplicative wheels
//! ₘI_b and the eight additive shapes I_b*, II, II*, III, III*, IV, IV*.
//!
//! A model describes the central fiber as it sits on the (possibly
//! singular) surface: a smooth genus-1 curve, a one-node rational curve,
//! a wheel of rational curves, or a chain of rational components carrying
//! point decorations.  A decoration is the singularity of the surface at a
//! marked point of the component: a Du Val chain A_i of (−2)-curves, or a
//! single (−k)-curve with k ≥ 3.  Classification matches the decoration
//! pattern; every accepted model resolves to a dual graph whose
//! intersection matrix is negative semidefinite with a one-dimensional
//! kernel spanned by the fiber class.

use serde::{Deserialize, Serialize};

use crate::arith::Multiplicity;
use crate::curve::Boundary;
use crate::error::SurfError;
use crate::graph::{DualGraph, Edge, GraphCurve, Role};

/// Surface singularity at a marked point of a central component.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decoration {
    /// A_i: chain of i (−2)-curves, crossed at one end.
    Duval(u32),
    /// Single (−k)-curve, k ≥ 3 (k = 2 is Du Val and must be written so).
    Simple(u32),
}

impl Decoration {
    /// Multiplicity the point contributes to the different on the
    /// component: A_i gives i/(i+1), a single (−k)-curve gives (k−1)/k.
    pub fn different(&self) -> Multiplicity {
        let (p, q) = match *self {
            Decoration::Duval(i) => (i64::from(i), i64::from(i) + 1),
            Decoration::Simple(k) => (i64::from(k) - 1, i64::from(k)),
        };
        Multiplicity::new_i64(p, q).expect("in (0,1)")
    }

    fn validate(&self) -> Result<(), SurfError> {
        match *self {
            Decoration::Duval(0) => Err(SurfError::InvalidFiber(
                "duval decoration needs length at least 1".into(),
            )),
            Decoration::Simple(k) if k < 3 => Err(SurfError::InvalidFiber(
                "simple decoration needs self-intersection -3 or less; \
                 a single (-2)-curve is duval 1"
                    .into(),
            )),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChainComponent {
    pub self_int: i64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub decorations: Vec<Decoration>,
}

/// The central fiber.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Central {
    /// Smooth genus-1 curve.
    SmoothGenusOne,
    /// Irreducible rational curve with one node.
    CartesianLeaf,
    /// Cycle of `size` ≥ 2 smooth rational (−2)-curves.  Optional
    /// per-component multiplicities must all agree with the model's.
    Wheel {
        size: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        multiplicities: Option<Vec<u32>>,
    },
    /// Chain of decorated rational components.
    Chain { components: Vec<ChainComponent> },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiberModel {
    pub multiplicity: u32,
    pub central: Central,
    /// When true, internal undecorated (−1)-components of a chain are
    /// contracted before classification.
    #[serde(default)]
    pub ambient_smooth: bool,
}

impl FiberModel {
    pub fn from_json(text: &str) -> Result<Self, SurfError> {
        let f: FiberModel = serde_json::from_str(text)?;
        Ok(f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum KodairaType {
    #[serde(rename = "mi")]
    MI { m: u32, b: u32 },
    Istar { b: u32 },
    II,
    IIstar,
    III,
    IIIstar,
    IV,
    IVstar,
}

impl std::fmt::Display for KodairaType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            KodairaType::MI { m: 1, b } => write!(f, "I_{b}"),
            KodairaType::MI { m, b } => write!(f, "{m}I_{b}"),
            KodairaType::Istar { b } => write!(f, "I_{b}*"),
            KodairaType::II => write!(f, "II"),
            KodairaType::IIstar => write!(f, "II*"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IIIstar => write!(f, "III*"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IVstar => write!(f, "IV*"),
        }
    }
}

/// Complement index of K + C near the fiber.
pub fn complement_index(t: KodairaType) -> u32 {
    match t {
        KodairaType::MI { .. } => 1,
        KodairaType::Istar { .. } => 2,
        KodairaType::II | KodairaType::IIstar => 6,
        KodairaType::III | KodairaType::IIIstar => 4,
        KodairaType::IV | KodairaType::IVstar => 3,
    }
}

/// Boundary induced on the central curve by adjunction.  Empty for the
/// multiplicative types.
pub fn fiber_different(t: KodairaType) -> Boundary {
    let mults: &[(i64, i64)] = match t {
        KodairaType::MI { .. } => &[],
        KodairaType::Istar { .. } => &[(1, 2), (1, 2), (1, 2), (1, 2)],
        KodairaType::II | KodairaType::IIstar => &[(1, 2), (2, 3), (5, 6)],
        KodairaType::III | KodairaType::IIIstar => &[(1, 2), (3, 4), (3, 4)],
        KodairaType::IV | KodairaType::IVstar => &[(2, 3), (2, 3), (2, 3)],
    };
    Boundary::from_mults(
        mults
            .iter()
            .map(|&(p, q)| Multiplicity::new_i64(p, q).expect("in (0,1]"))
            .collect(),
    )
}

fn contract_internal_minus_ones(components: &mut Vec<ChainComponent>) {
    loop {
        let interior = (1..components.len().saturating_sub(1)).find(|&i| {
            components[i].self_int == -1 && components[i].decorations.is_empty()
        });
        let Some(i) = interior else { return };
        components.remove(i);
        components[i - 1].self_int += 1;
        components[i].self_int += 1;
    }
}

fn classify_chain(components: &[ChainComponent]) -> Result<KodairaType, SurfError> {
    let unrecognized =
        || SurfError::InvalidFiber("decoration pattern matches no fiber type".into());
    match components {
        [] => Err(SurfError::InvalidFiber("empty chain".into())),
        [c] => {
            let mut dec = c.decorations.clone();
            dec.sort();
            use Decoration::{Duval, Simple};
            match (c.self_int, dec.as_slice()) {
                (-1, [Duval(1), Simple(3), Simple(6)]) => Ok(KodairaType::II),
                (-1, [Duval(1), Simple(4), Simple(4)]) => Ok(KodairaType::III),
                (-1, [Simple(3), Simple(3), Simple(3)]) => Ok(KodairaType::IV),
                (-2, [Duval(1), Duval(2), Duval(5)]) => Ok(KodairaType::IIstar),
                (-2, [Duval(1), Duval(3), Duval(3)]) => Ok(KodairaType::IIIstar),
                (-2, [Duval(2), Duval(2), Duval(2)]) => Ok(KodairaType::IVstar),
                (-2, [Duval(1), Duval(1), Duval(1), Duval(1)]) => {
                    Ok(KodairaType::Istar { b: 0 })
                }
                _ => Err(unrecognized()),
            }
        }
        _ => {
            // I_b*, b ≥ 1: b+1 components of self-intersection −2; each end
            // carries two A_1 points, the interior none.
            let ok = components.iter().all(|c| c.self_int == -2)
                && components
                    .first()
                    .is_some_and(|c| c.decorations == [Decoration::Duval(1); 2])
                && components
                    .last()
                    .is_some_and(|c| c.decorations == [Decoration::Duval(1); 2])
                && components[1..components.len() - 1]
                    .iter()
                    .all(|c| c.decorations.is_empty());
            if ok {
                Ok(KodairaType::Istar {
                    b: components.len() as u32 - 1,
                })
            } else {
                Err(unrecognized())
            }
        }
    }
}

/// Classify a model, normalizing first when the ambient surface is
/// declared smooth along the fiber.
pub fn classify_fiber(f: &FiberModel) -> Result<KodairaType, SurfError> {
    if f.multiplicity == 0 {
        return Err(SurfError::InvalidFiber("multiplicity must be positive".into()));
    }
    match &f.central {
        Central::SmoothGenusOne => Ok(KodairaType::MI {
            m: f.multiplicity,
            b: 0,
        }),
        Central::CartesianLeaf => Ok(KodairaType::MI {
            m: f.multiplicity,
            b: 1,
        }),
        Central::Wheel {
            size,
            multiplicities,
        } => {
            if *size < 2 {
                return Err(SurfError::InvalidFiber(
                    "wheel needs at least 2 components; one component is the \
                     one-node model"
                        .into(),
                ));
            }
            if let Some(ms) = multiplicities {
                if ms.len() != *size as usize {
                    return Err(SurfError::InvalidFiber(
                        "wheel multiplicity list length mismatch".into(),
                    ));
                }
                if ms.iter().any(|&m| m != f.multiplicity) {
                    return Err(SurfError::InvalidFiber(
                        "wheel multiplicities must be uniform and equal the \
                         fiber multiplicity"
                            .into(),
                    ));
                }
            }
            Ok(KodairaType::MI {
                m: f.multiplicity,
                b: *size,
            })
        }
        Central::Chain { components } => {
            if f.multiplicity != 1 {
                return Err(SurfError::InvalidFiber(
                    "decorated fibers are reduced: multiplicity must be 1".into(),
                ));
            }
            for c in components {
                for d in &c.decorations {
                    d.validate()?;
                }
            }
            let mut comps = components.clone();
            if f.ambient_smooth {
                contract_internal_minus_ones(&mut comps);
            }
            classify_chain(&comps)
        }
    }
}

/// Minimal resolution of the model as a dual graph of fiber components,
/// all exceptional (the configuration contracts to the fiber's image).
pub fn resolved_graph(f: &FiberModel) -> Result<DualGraph, SurfError> {
    classify_fiber(f)?;
    let exc = |id: String, self_int: i64, genus: u32, nodes: u32| GraphCurve {
        id,
        role: Role::Exceptional,
        self_int,
        genus,
        nodes,
        mult: None,
    };
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    match &f.central {
        Central::SmoothGenusOne => vertices.push(exc("c0".into(), 0, 1, 0)),
        Central::CartesianLeaf => vertices.push(exc("c0".into(), 0, 0, 1)),
        Central::Wheel { size, .. } => {
            let b = *size as usize;
            for i in 0..b {
                vertices.push(exc(format!("c{i}"), -2, 0, 0));
            }
            if b == 2 {
                edges.push(Edge {
                    a: "c0".into(),
                    b: "c1".into(),
                    mult: 2,
                });
            } else {
                for i in 0..b {
                    edges.push(Edge {
                        a: format!("c{i}"),
                        b: format!("c{}", (i + 1) % b),
                        mult: 1,
                    });
                }
            }
        }
        Central::Chain { components } => {
            let mut comps = components.clone();
            if f.ambient_smooth {
                contract_internal_minus_ones(&mut comps);
            }
            for (i, c) in comps.iter().enumerate() {
                vertices.push(exc(format!("c{i}"), c.self_int, 0, 0));
                if i > 0 {
                    edges.push(Edge {
                        a: format!("c{}", i - 1),
                        b: format!("c{i}"),
                        mult: 1,
                    });
                }
                for (j, d) in c.decorations.iter().enumerate() {
                    match *d {
                        Decoration::Duval(len) => {
                            for k in 0..len {
                                let id = format!("c{i}d{j}e{k}");
                                vertices.push(exc(id.clone(), -2, 0, 0));
                                let prev = if k == 0 {
                                    format!("c{i}")
                                } else {
                                    format!("c{i}d{j}e{}", k - 1)
                                };
                                edges.push(Edge {
                                    a: prev,
                                    b: id,
                                    mult: 1,
                                });
                            }
                        }
                        Decoration::Simple(k) => {
                            let id = format!("c{i}d{j}e0");
                            vertices.push(exc(id.clone(), -(i64::from(k)), 0, 0));
                            edges.push(Edge {
                                a: format!("c{i}"),
                                b: id,
                                mult: 1,
                            });
                        }
                    }
                }
            }
        }
    }
    let g = DualGraph { vertices, edges };
    g.validate()?;
    Ok(g)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiberReport {
    pub kodaira: KodairaType,
    pub complement_index: u32,
    pub different: Boundary,
    pub resolved_graph: DualGraph,
}

pub fn fiber_report(f: &FiberModel) -> Result<FiberReport, SurfError> {
    let kodaira = classify_fiber(f)?;
    Ok(FiberReport {
        kodaira,
        complement_index: complement_index(kodaira),
        different: fiber_different(kodaira),
        resolved_graph: resolved_graph(f)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::curve::{minimal_complement_index, CurveConfig};
    use crate::graph::{definiteness, is_contractible, Definiteness};

    fn chain(comps: Vec<ChainComponent>) -> FiberModel {
        FiberModel {
            multiplicity: 1,
            central: Central::Chain { components: comps },
            ambient_smooth: false,
        }
    }

    fn comp(self_int: i64, decorations: Vec<Decoration>) -> ChainComponent {
        ChainComponent {
            self_int,
            decorations,
        }
    }

    fn wheel(m: u32, size: u32) -> FiberModel {
        FiberModel {
            multiplicity: m,
            central: Central::Wheel {
                size,
                multiplicities: None,
            },
            ambient_smooth: false,
        }
    }

    use Decoration::{Duval, Simple};

    fn catalog() -> Vec<(FiberModel, KodairaType)> {
        vec![
            (
                FiberModel {
                    multiplicity: 1,
                    central: Central::SmoothGenusOne,
                    ambient_smooth: false,
                },
                KodairaType::MI { m: 1, b: 0 },
            ),
            (
                FiberModel {
                    multiplicity: 3,
                    central: Central::CartesianLeaf,
                    ambient_smooth: false,
                },
                KodairaType::MI { m: 3, b: 1 },
            ),
            (wheel(2, 3), KodairaType::MI { m: 2, b: 3 }),
            (wheel(1, 2), KodairaType::MI { m: 1, b: 2 }),
            (wheel(5, 7), KodairaType::MI { m: 5, b: 7 }),
            (
                chain(vec![comp(-2, vec![Duval(1); 4])]),
                KodairaType::Istar { b: 0 },
            ),
            (
                chain(vec![
                    comp(-2, vec![Duval(1), Duval(1)]),
                    comp(-2, vec![]),
                    comp(-2, vec![Duval(1), Duval(1)]),
                ]),
                KodairaType::Istar { b: 2 },
            ),
            (
                chain(vec![comp(-1, vec![Duval(1), Simple(3), Simple(6)])]),
                KodairaType::II,
            ),
            (
                chain(vec![comp(-1, vec![Simple(4), Duval(1), Simple(4)])]),
                KodairaType::III,
            ),
            (
                chain(vec![comp(-1, vec![Simple(3); 3])]),
                KodairaType::IV,
            ),
            (
                chain(vec![comp(-2, vec![Duval(5), Duval(1), Duval(2)])]),
                KodairaType::IIstar,
            ),
            (
                chain(vec![comp(-2, vec![Duval(3), Duval(3), Duval(1)])]),
                KodairaType::IIIstar,
            ),
            (
                chain(vec![comp(-2, vec![Duval(2); 3])]),
                KodairaType::IVstar,
            ),
        ]
    }

    #[test]
    fn classification_catalog() {
        for (model, expected) in catalog() {
            assert_eq!(classify_fiber(&model).unwrap(), expected, "{expected}");
        }
    }

    #[test]
    fn complement_indices() {
        assert_eq!(complement_index(KodairaType::MI { m: 5, b: 2 }), 1);
        assert_eq!(complement_index(KodairaType::Istar { b: 4 }), 2);
        assert_eq!(complement_index(KodairaType::II), 6);
        assert_eq!(complement_index(KodairaType::IIstar), 6);
        assert_eq!(complement_index(KodairaType::III), 4);
        assert_eq!(complement_index(KodairaType::IIIstar), 4);
        assert_eq!(complement_index(KodairaType::IV), 3);
        assert_eq!(complement_index(KodairaType::IVstar), 3);
    }

    #[test]
    fn different_tables() {
        assert!(fiber_different(KodairaType::MI { m: 2, b: 3 }).is_empty());
        let m = |p, q| Multiplicity::new_i64(p, q).unwrap();
        assert_eq!(
            fiber_different(KodairaType::Istar { b: 1 }).mults().cloned().collect::<Vec<_>>(),
            vec![m(1, 2); 4]
        );
        assert_eq!(
            fiber_different(KodairaType::II).mults().cloned().collect::<Vec<_>>(),
            vec![m(1, 2), m(2, 3), m(5, 6)]
        );
        assert_eq!(
            fiber_different(KodairaType::IVstar).mults().cloned().collect::<Vec<_>>(),
            vec![m(2, 3); 3]
        );
    }

    #[test]
    fn different_sums_to_two_on_additive_types() {
        for t in [
            KodairaType::Istar { b: 0 },
            KodairaType::II,
            KodairaType::IIstar,
            KodairaType::III,
            KodairaType::IIIstar,
            KodairaType::IV,
            KodairaType::IVstar,
        ] {
            assert_eq!(fiber_different(t).degree(), Rational::from_integer(2), "{t}");
        }
    }

    #[test]
    fn index_coherence_with_curve_criteria() {
        // The boundary induced on the rational central curve must admit its
        // first complement exactly at the type's index.
        for t in [
            KodairaType::Istar { b: 2 },
            KodairaType::II,
            KodairaType::IIstar,
            KodairaType::III,
            KodairaType::IIIstar,
            KodairaType::IV,
            KodairaType::IVstar,
        ] {
            let config = CurveConfig::irreducible(0, fiber_different(t));
            assert_eq!(
                minimal_complement_index(&config, 66).unwrap(),
                Some(complement_index(t)),
                "{t}"
            );
        }
        // Multiplicative types: genus-1 curve and wheels admit a 1-complement.
        let smooth = CurveConfig::irreducible(1, Boundary::default());
        assert_eq!(minimal_complement_index(&smooth, 66).unwrap(), Some(1));
        let wheel3 = CurveConfig::wheel(vec![Boundary::default(); 3]);
        assert_eq!(minimal_complement_index(&wheel3, 66).unwrap(), Some(1));
    }

    #[test]
    fn resolved_graphs_are_semidefinite_of_corank_one() {
        for (model, t) in catalog() {
            let g = resolved_graph(&model).unwrap();
            assert_eq!(
                definiteness(&g).unwrap(),
                Definiteness::NegativeSemidefinite { kernel_dim: 1 },
                "{t}"
            );
            assert!(!is_contractible(&g).unwrap(), "{t}");
        }
    }

    #[test]
    fn starred_graphs_have_affine_sizes() {
        // II* resolves to the 9-vertex affine E8 tree, III* to 8 vertices,
        // IV* to 7, I_b* to b+5.
        let sizes = [
            (chain(vec![comp(-2, vec![Duval(1), Duval(2), Duval(5)])]), 9),
            (chain(vec![comp(-2, vec![Duval(1), Duval(3), Duval(3)])]), 8),
            (chain(vec![comp(-2, vec![Duval(2); 3])]), 7),
            (chain(vec![comp(-2, vec![Duval(1); 4])]), 5),
            (
                chain(vec![
                    comp(-2, vec![Duval(1), Duval(1)]),
                    comp(-2, vec![Duval(1), Duval(1)]),
                ]),
                6,
            ),
        ];
        for (model, n) in sizes {
            assert_eq!(resolved_graph(&model).unwrap().vertices.len(), n);
        }
    }

    #[test]
    fn normalization_contracts_internal_minus_ones() {
        // Blowing up the node between the two components of I_1* gives
        // (−3, −1, −3); declaring the ambient smooth undoes it.
        let blown = FiberModel {
            multiplicity: 1,
            central: Central::Chain {
                components: vec![
                    comp(-3, vec![Duval(1), Duval(1)]),
                    comp(-1, vec![]),
                    comp(-3, vec![Duval(1), Duval(1)]),
                ],
            },
            ambient_smooth: true,
        };
        assert_eq!(classify_fiber(&blown).unwrap(), KodairaType::Istar { b: 1 });
        let kept = FiberModel {
            ambient_smooth: false,
            ..blown
        };
        assert!(classify_fiber(&kept).is_err());
    }

    #[test]
    fn rejections() {
        // Non-reduced decorated fiber.
        let mut ii = chain(vec![comp(-1, vec![Duval(1), Simple(3), Simple(6)])]);
        ii.multiplicity = 2;
        assert!(classify_fiber(&ii).is_err());

        // One-component wheel.
        assert!(classify_fiber(&wheel(1, 1)).is_err());

        // Non-uniform wheel multiplicities.
        let bad_wheel = FiberModel {
            multiplicity: 2,
            central: Central::Wheel {
                size: 3,
                multiplicities: Some(vec![2, 2, 3]),
            },
            ambient_smooth: false,
        };
        assert!(classify_fiber(&bad_wheel).is_err());

        // A (−2)-curve spelled as a simple decoration.
        let spelled = chain(vec![comp(-1, vec![Simple(2), Simple(3), Simple(6)])]);
        assert!(classify_fiber(&spelled).is_err());

        // Wrong multiset.
        let wrong = chain(vec![comp(-1, vec![Duval(1), Simple(3), Simple(5)])]);
        assert!(classify_fiber(&wrong).is_err());

        // Right multiset on the wrong central curve.
        let swapped = chain(vec![comp(-2, vec![Duval(1), Simple(3), Simple(6)])]);
        assert!(classify_fiber(&swapped).is_err());

        // Zero multiplicity.
        assert!(classify_fiber(&wheel(0, 3)).is_err());
    }

    #[test]
    fn report_round_trip() {
        let model = wheel(2, 3);
        let rep = fiber_report(&model).unwrap();
        assert_eq!(rep.kodaira, KodairaType::MI { m: 2, b: 3 });
        assert_eq!(rep.complement_index, 1);
        assert!(rep.different.is_empty());
        assert_eq!(rep.resolved_graph.vertices.len(), 3);
        let text = serde_json::to_string(&rep).unwrap();
        let back: FiberReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);

        let json = r#"{
            "multiplicity": 1,
            "central": {
                "kind": "chain",
                "components": [
                    {"self_int": -1,
                     "decorations": [{"duval": 1}, {"simple": 3}, {"simple": 6}]}
                ]
            }
        }"#;
        let f = FiberModel::from_json(json).unwrap();
        assert_eq!(classify_fiber(&f).unwrap(), KodairaType::II);
    }

    #[test]
    fn display_names() {
        assert_eq!(KodairaType::MI { m: 1, b: 3 }.to_string(), "I_3");
        assert_eq!(KodairaType::MI { m: 2, b: 3 }.to_string(), "2I_3");
        assert_eq!(KodairaType::Istar { b: 0 }.to_string(), "I_0*");
        assert_eq!(KodairaType::IIstar.to_string(), "II*");
    }
}
