//! Weighted dual-graph engine for SNC curve configurations on a surface:
//! intersection matrices, contractibility, crepant-pullback discrepancies,
//! log-canonicity thresholds, minimal log discrepancies, the δ count of
//! low-discrepancy divisors, ADE recognition, and local adjunction formulas.
//!
//! Graphs describe a configuration that is already resolved: vertices are
//! smooth-model curves (exceptional, or ambient boundary components carrying
//! a multiplicity), and every unit of edge multiplicity is one transverse
//! intersection point.  A nodal self-intersection is carried on the vertex
//! as `nodes`, never as a self-loop.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Multiplicity, Rational};
use crate::error::SurfError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Exceptional,
    Ambient,
}

/// A curve vertex of the dual graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphCurve {
    pub id: String,
    pub role: Role,
    pub self_int: i64,
    #[serde(default)]
    pub genus: u32,
    /// Nodes of the curve itself (each adds 1 to the arithmetic genus).
    #[serde(default)]
    pub nodes: u32,
    /// Boundary multiplicity; required for ambient vertices, absent for
    /// exceptional ones (the solver produces theirs).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Multiplicity>,
}

impl GraphCurve {
    /// Arithmetic genus.
    pub fn pa(&self) -> i64 {
        i64::from(self.genus) + i64::from(self.nodes)
    }

    /// K·E = 2pₐ − 2 − E².
    pub fn canonical_degree(&self) -> i64 {
        2 * self.pa() - 2 - self.self_int
    }
}

/// Edge between two distinct vertices; `mult` transverse crossings.
/// Serialized as the triple [id_a, id_b, mult].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(from = "(String, String, u32)", into = "(String, String, u32)")]
pub struct Edge {
    pub a: String,
    pub b: String,
    pub mult: u32,
}

impl From<(String, String, u32)> for Edge {
    fn from((a, b, mult): (String, String, u32)) -> Self {
        Edge { a, b, mult }
    }
}

impl From<Edge> for (String, String, u32) {
    fn from(e: Edge) -> Self {
        (e.a, e.b, e.mult)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DualGraph {
    pub vertices: Vec<GraphCurve>,
    #[serde(default)]
    pub edges: Vec<Edge>,
}

impl DualGraph {
    pub fn from_json(text: &str) -> Result<Self, SurfError> {
        let g: DualGraph = serde_json::from_str(text)?;
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<(), SurfError> {
        let mut seen = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if v.id.is_empty() {
                return Err(SurfError::InvalidGraph("empty vertex id".into()));
            }
            if seen.insert(v.id.clone(), i).is_some() {
                return Err(SurfError::InvalidGraph(format!(
                    "duplicate vertex id {:?}",
                    v.id
                )));
            }
            match v.role {
                Role::Ambient if v.mult.is_none() => {
                    return Err(SurfError::InvalidGraph(format!(
                        "ambient vertex {:?} lacks a multiplicity",
                        v.id
                    )));
                }
                Role::Exceptional if v.mult.is_some() => {
                    return Err(SurfError::InvalidGraph(format!(
                        "exceptional vertex {:?} must not carry a multiplicity",
                        v.id
                    )));
                }
                _ => {}
            }
        }
        for e in &self.edges {
            if e.a == e.b {
                return Err(SurfError::InvalidGraph(format!(
                    "self-loop at {:?}: encode a node via the vertex's `nodes` field",
                    e.a
                )));
            }
            if e.mult == 0 {
                return Err(SurfError::InvalidGraph("edge of multiplicity 0".into()));
            }
            for id in [&e.a, &e.b] {
                if !seen.contains_key(id) {
                    return Err(SurfError::InvalidGraph(format!(
                        "edge references unknown vertex {id:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    fn exceptional_indices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| self.vertices[i].role == Role::Exceptional)
            .collect()
    }

    /// Total intersection number between two distinct vertices.
    pub fn crossings(&self, i: usize, j: usize) -> i64 {
        let (a, b) = (&self.vertices[i].id, &self.vertices[j].id);
        self.edges
            .iter()
            .filter(|e| (&e.a == a && &e.b == b) || (&e.a == b && &e.b == a))
            .map(|e| i64::from(e.mult))
            .sum()
    }

    /// Every transverse intersection point as an index pair, with one entry
    /// per unit of multiplicity; self-nodes appear as (i, i).
    pub fn node_points(&self) -> Vec<(usize, usize)> {
        let by_id: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.as_str(), i))
            .collect();
        let mut pts = Vec::new();
        for e in &self.edges {
            let (i, j) = (by_id[e.a.as_str()], by_id[e.b.as_str()]);
            for _ in 0..e.mult {
                pts.push((i, j));
            }
        }
        for (i, v) in self.vertices.iter().enumerate() {
            for _ in 0..v.nodes {
                pts.push((i, i));
            }
        }
        pts
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra on small symmetric integer matrices.
// ---------------------------------------------------------------------------

/// Determinant by fraction-free (Bareiss) elimination.
fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Rank by exact Gaussian elimination.
fn rank(m: &[Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, piv);
        let inv = a[row][col].recip();
        for j in col..cols {
            let v = &a[row][j] * &inv;
            a[row][j] = v;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..cols {
                    let v = &a[r][j] - &f * &a[row][j];
                    a[r][j] = v;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Coefficients c₁..cₙ of det(λI − M) = λⁿ + c₁λⁿ⁻¹ + … + cₙ
/// (Faddeev–LeVerrier).
fn char_poly(m: &[Vec<BigInt>]) -> Vec<BigRational> {
    let n = m.len();
    let a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut coeffs = Vec::with_capacity(n);
    // mk starts as A, and is updated as mk = A·(mk + c·I).
    let mut mk = a.clone();
    for k in 1..=n {
        let trace: BigRational = (0..n).map(|i| mk[i][i].clone()).sum();
        let c = -trace / BigRational::from_integer(BigInt::from(k as i64));
        coeffs.push(c.clone());
        if k == n {
            break;
        }
        let mut shifted = mk.clone();
        for (i, row) in shifted.iter_mut().enumerate().take(n) {
            row[i] = &row[i] + &c;
        }
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for (l, sh) in shifted.iter().enumerate() {
                    s += &a[i][l] * &sh[j];
                }
                next[i][j] = s;
            }
        }
        mk = next;
    }
    coeffs
}

/// Solve M x = rhs exactly; None when M is singular.
fn solve(m: &[Vec<BigInt>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            row.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .chain(std::iter::once(r.clone()))
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for j in col..=n {
            let v = &a[col][j] * &inv;
            a[col][j] = v;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..=n {
                    let v = &a[r][j] - &f * &a[col][j];
                    a[r][j] = v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

// ---------------------------------------------------------------------------
// Intersection matrix, contractibility, definiteness.
// ---------------------------------------------------------------------------

/// Intersection matrix over the exceptional vertices, in their order of
/// appearance.
pub fn intersection_matrix(g: &DualGraph) -> Result<Vec<Vec<i64>>, SurfError> {
    g.validate()?;
    let exc = g.exceptional_indices();
    if exc.is_empty() {
        return Err(SurfError::InvalidGraph(
            "no exceptional vertices to intersect".into(),
        ));
    }
    let n = exc.len();
    let mut m = vec![vec![0i64; n]; n];
    for (r, &i) in exc.iter().enumerate() {
        for (c, &j) in exc.iter().enumerate() {
            m[r][c] = if r == c {
                g.vertices[i].self_int
            } else {
                g.crossings(i, j)
            };
        }
    }
    Ok(m)
}

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Negative definiteness by leading principal minors: the k-th must have
/// sign (−1)^k.
pub fn is_contractible(g: &DualGraph) -> Result<bool, SurfError> {
    let m = to_big(&intersection_matrix(g)?);
    Ok(negative_definite(&m))
}

fn negative_definite(m: &[Vec<BigInt>]) -> bool {
    let n = m.len();
    for k in 1..=n {
        let sub: Vec<Vec<BigInt>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        let d = determinant(&sub);
        let ok = if k % 2 == 0 {
            d.is_positive()
        } else {
            d.is_negative()
        };
        if !ok {
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Definiteness {
    NegativeDefinite,
    /// All eigenvalues ≤ 0 with a nontrivial kernel.
    NegativeSemidefinite { kernel_dim: usize },
    Indefinite,
}

/// Exact definiteness of the exceptional intersection matrix.  A symmetric
/// matrix has all eigenvalues ≤ 0 iff every coefficient of det(λI − M) is
/// ≥ 0; the kernel dimension is n − rank.
pub fn definiteness(g: &DualGraph) -> Result<Definiteness, SurfError> {
    let m = to_big(&intersection_matrix(g)?);
    Ok(definiteness_of(&m))
}

fn definiteness_of(m: &[Vec<BigInt>]) -> Definiteness {
    let coeffs = char_poly(m);
    if coeffs.iter().any(|c| c.is_negative()) {
        return Definiteness::Indefinite;
    }
    let kernel_dim = m.len() - rank(m);
    if kernel_dim == 0 {
        Definiteness::NegativeDefinite
    } else {
        Definiteness::NegativeSemidefinite { kernel_dim }
    }
}

// ---------------------------------------------------------------------------
// Crepant discrepancies.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CrepantEntry {
    pub id: String,
    /// Boundary multiplicity d of the crepant pullback.
    pub multiplicity: Rational,
    /// Log discrepancy a = 1 − d.
    pub log_discrepancy: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct CrepantResult {
    pub entries: Vec<CrepantEntry>,
    /// Vertices whose solved multiplicity is negative (sub-boundary).
    pub sub_boundary: Vec<String>,
}

impl CrepantResult {
    pub fn multiplicity_of(&self, id: &str) -> Option<&Rational> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .map(|e| &e.multiplicity)
    }
}

/// Solve (K + Σ dⱼEⱼ + Σ bₖCₖ)·Eᵢ = 0 for the exceptional multiplicities dⱼ.
/// With no exceptional vertices the result is empty (nothing to solve).
pub fn crepant_discrepancies(g: &DualGraph) -> Result<CrepantResult, SurfError> {
    g.validate()?;
    let exc = g.exceptional_indices();
    if exc.is_empty() {
        return Ok(CrepantResult::default());
    }
    let n = exc.len();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (r, &i) in exc.iter().enumerate() {
        for (c, &j) in exc.iter().enumerate() {
            m[r][c] = BigInt::from(if r == c {
                g.vertices[i].self_int
            } else {
                g.crossings(i, j)
            });
        }
    }
    // rhs_i = −K·Eᵢ − Σₖ bₖ(Cₖ·Eᵢ)
    let rhs: Vec<BigRational> = exc
        .iter()
        .map(|&i| {
            let mut r = BigRational::from_integer(BigInt::from(
                -g.vertices[i].canonical_degree(),
            ));
            for (k, v) in g.vertices.iter().enumerate() {
                if v.role == Role::Ambient {
                    let b = v.mult.as_ref().expect("validated").value().as_big();
                    r -= b * BigRational::from_integer(BigInt::from(g.crossings(k, i)));
                }
            }
            r
        })
        .collect();
    let Some(sol) = solve(&m, &rhs) else {
        return Err(SurfError::CrepantSingular);
    };
    let entries: Vec<CrepantEntry> = exc
        .iter()
        .zip(sol)
        .map(|(&i, d)| {
            let d = Rational::from_big(d);
            CrepantEntry {
                id: g.vertices[i].id.clone(),
                log_discrepancy: Rational::one() - d.clone(),
                multiplicity: d,
            }
        })
        .collect();
    let sub_boundary = entries
        .iter()
        .filter(|e| e.multiplicity.is_negative())
        .map(|e| e.id.clone())
        .collect();
    Ok(CrepantResult {
        entries,
        sub_boundary,
    })
}

// ---------------------------------------------------------------------------
// Log-canonicity, mld, δ.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum LogCanonicalStatus {
    #[serde(rename = "kawamata-log-terminal")]
    KawamataLT { epsilon: Rational },
    LogCanonicalNotKlt,
    NotLogCanonical,
}

impl fmt::Display for LogCanonicalStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogCanonicalStatus::KawamataLT { epsilon } => {
                write!(f, "kawamata log terminal (epsilon = {epsilon})")
            }
            LogCanonicalStatus::LogCanonicalNotKlt => write!(f, "log canonical, not klt"),
            LogCanonicalStatus::NotLogCanonical => write!(f, "not log canonical"),
        }
    }
}

/// Log discrepancy of every graph divisor: 1 − b for ambient, 1 − d for
/// exceptional, in vertex order.
fn divisor_discrepancies(g: &DualGraph) -> Result<Vec<Rational>, SurfError> {
    let crepant = crepant_discrepancies(g)?;
    g.vertices
        .iter()
        .map(|v| match v.role {
            Role::Ambient => Ok(Rational::one()
                - v.mult.as_ref().expect("validated").value().clone()),
            Role::Exceptional => crepant
                .entries
                .iter()
                .find(|e| e.id == v.id)
                .map(|e| e.log_discrepancy.clone())
                .ok_or_else(|| SurfError::InvalidGraph("missing solve entry".into())),
        })
        .collect()
}

/// min over divisor discrepancies, node sums a_i + a_j, and 2, the infimum
/// over the configuration's divisors plus all toroidal divisors above it
/// (a point free of divisors contributes 2, a free point of one divisor
/// a + 1, a node k₁a₁ + k₂a₂; for nonnegative a the minima are a, a₁ + a₂,
/// and 2).
fn discrepancy_infimum(g: &DualGraph) -> Result<Rational, SurfError> {
    let a = divisor_discrepancies(g)?;
    let mut min = Rational::from_integer(2);
    for v in &a {
        min = min.min(v.clone());
    }
    for (i, j) in g.node_points() {
        min = min.min(&a[i] + &a[j]);
    }
    Ok(min)
}

pub fn log_canonical_status(g: &DualGraph) -> Result<LogCanonicalStatus, SurfError> {
    let a = divisor_discrepancies(g)?;
    if a.iter().any(|x| x.is_negative()) {
        return Ok(LogCanonicalStatus::NotLogCanonical);
    }
    let mu = discrepancy_infimum(g)?;
    if mu.is_zero() {
        Ok(LogCanonicalStatus::LogCanonicalNotKlt)
    } else {
        Ok(LogCanonicalStatus::KawamataLT { epsilon: mu })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "mld", rename_all = "kebab-case", content = "value")]
pub enum MldResult {
    Value(Rational),
    NotLogCanonical,
}

/// Minimal log discrepancy over all centers on the surface.
pub fn mld(g: &DualGraph) -> Result<MldResult, SurfError> {
    let a = divisor_discrepancies(g)?;
    if a.iter().any(|x| x.is_negative()) {
        return Ok(MldResult::NotLogCanonical);
    }
    Ok(MldResult::Value(discrepancy_infimum(g)?))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "delta", rename_all = "kebab-case", content = "count")]
pub enum DeltaInvariant {
    Finite(u64),
    Infinite,
}

const DELTA_THRESHOLD: (i64, i64) = (1, 7);

/// Count the divisors with log discrepancy ≤ 1/7: the configuration's own
/// curves plus the toroidal tower over every node.  Divisors over a node
/// with discrepancies (a₁, a₂) are indexed by coprime weight pairs
/// (k₁, k₂), kᵢ ≥ 1, with discrepancy k₁a₁ + k₂a₂; free points only
/// generate a + k > 1/7 and never contribute.  The count is infinite
/// exactly when a node combines a zero discrepancy with one ≤ 1/7.
pub fn delta_invariant(g: &DualGraph) -> Result<DeltaInvariant, SurfError> {
    let a = divisor_discrepancies(g)?;
    if a.iter().any(|x| x.is_negative()) {
        return Err(SurfError::InvalidGraph(
            "delta is defined for log canonical configurations only".into(),
        ));
    }
    let threshold = Rational::new(DELTA_THRESHOLD.0, DELTA_THRESHOLD.1);
    let mut count: u64 = a.iter().filter(|x| **x <= threshold).count() as u64;
    for (i, j) in g.node_points() {
        let (a1, a2) = (&a[i], &a[j]);
        if (a1.is_zero() && *a2 <= threshold) || (a2.is_zero() && *a1 <= threshold) {
            return Ok(DeltaInvariant::Infinite);
        }
        if a1.is_zero() || a2.is_zero() {
            // The nonzero side exceeds the threshold, so every tower value
            // k₁a₁ + k₂a₂ ≥ that side does too.
            continue;
        }
        let mut k1 = 1i64;
        loop {
            let base = Rational::from_integer(k1) * a1.clone() + a2.clone();
            if base > threshold {
                break;
            }
            let mut k2 = 1i64;
            loop {
                let val = Rational::from_integer(k1) * a1.clone()
                    + Rational::from_integer(k2) * a2.clone();
                if val > threshold {
                    break;
                }
                if k1.gcd(&k2) == 1 {
                    count += 1;
                }
                k2 += 1;
            }
            k1 += 1;
        }
    }
    Ok(DeltaInvariant::Finite(count))
}

// ---------------------------------------------------------------------------
// ADE recognition.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", content = "length")]
pub enum DuValKind {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
    NonDuVal,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SingularityClass {
    #[serde(flatten)]
    pub kind: DuValKind,
    /// True exactly for E₆, E₇, E₈.
    pub exceptional_flag: bool,
}

/// Recognize the exceptional subgraph as an ADE tree of (−2)-curves.
/// Anything else (wrong self-intersections, cycles, multi-edges,
/// disconnectedness, branch patterns outside ADE) is NonDuVal.
pub fn classify_duval(g: &DualGraph) -> Result<SingularityClass, SurfError> {
    g.validate()?;
    let exc = g.exceptional_indices();
    for &i in &exc {
        let v = &g.vertices[i];
        if v.genus != 0 || v.nodes != 0 {
            return Err(SurfError::InvalidGraph(format!(
                "vertex {:?} must be a smooth rational curve",
                v.id
            )));
        }
    }
    let non_duval = Ok(SingularityClass {
        kind: DuValKind::NonDuVal,
        exceptional_flag: false,
    });
    if exc.is_empty() {
        return non_duval;
    }
    if exc.iter().any(|&i| g.vertices[i].self_int != -2) {
        return non_duval;
    }
    let n = exc.len();
    let pos: HashMap<usize, usize> = exc.iter().enumerate().map(|(r, &i)| (i, r)).collect();
    let mut adj = vec![vec![]; n];
    let mut edge_count = 0usize;
    for (i, j) in g.node_points() {
        let (Some(&r), Some(&c)) = (pos.get(&i), pos.get(&j)) else {
            continue;
        };
        adj[r].push(c);
        adj[c].push(r);
        edge_count += 1;
    }
    // A tree has n−1 edges; more means a cycle or double edge.
    if edge_count != n - 1 {
        return non_duval;
    }
    // Connectivity.
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return non_duval;
    }
    let degree: Vec<usize> = adj.iter().map(|l| l.len()).collect();
    if degree.iter().any(|&d| d > 3) {
        return non_duval;
    }
    let branches: Vec<usize> = (0..n).filter(|&v| degree[v] == 3).collect();
    let class = match branches.len() {
        0 => DuValKind::A(n as u32),
        1 => {
            let b = branches[0];
            // Arm lengths from the branch vertex.
            let mut arms: Vec<u32> = adj[b]
                .iter()
                .map(|&start| {
                    let mut len = 1u32;
                    let mut prev = b;
                    let mut cur = start;
                    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms[..] {
                [1, 1, k] => DuValKind::D(k + 3),
                [1, 2, 2] => DuValKind::E6,
                [1, 2, 3] => DuValKind::E7,
                [1, 2, 4] => DuValKind::E8,
                _ => DuValKind::NonDuVal,
            }
        }
        _ => DuValKind::NonDuVal,
    };
    Ok(SingularityClass {
        kind: class,
        exceptional_flag: matches!(class, DuValKind::E6 | DuValKind::E7 | DuValKind::E8),
    })
}

// ---------------------------------------------------------------------------
// Adjunction helpers.
// ---------------------------------------------------------------------------

/// Multiplicity of the different at a point of local index l crossed by a
/// curve of multiplicity (m−1)/m: the combined value is (lm − 1)/(lm).
pub fn adjunction_mult(l: u32, m: u32) -> Rational {
    assert!(l >= 1 && m >= 1);
    let lm = i64::from(l) * i64::from(m);
    Rational::new(lm - 1, lm)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Different {
    pub value: Rational,
    /// True when the adjunction is not log canonical at the point.
    pub exceeds_one: bool,
}

/// Different multiplicity at a point of index m where curves of
/// multiplicities dᵢ cross with local intersection numbers kᵢ:
/// (m−1)/m + Σ kᵢdᵢ/m.
pub fn different_at_point(m: u32, crossings: &[(u32, Multiplicity)]) -> Different {
    assert!(m >= 1);
    let m_rat = Rational::from_integer(i64::from(m));
    let mut value = Rational::new(i64::from(m) - 1, i64::from(m));
    for (k, d) in crossings {
        assert!(*k >= 1);
        value = value
            + Rational::from_integer(i64::from(*k)) * d.value().clone() / m_rat.clone();
    }
    // Monotonicity: the different dominates each crossing multiplicity.
    for (_, d) in crossings {
        debug_assert!(value >= *d.value());
    }
    let exceeds_one = value > Rational::one();
    Different { value, exceeds_one }
}

/// (K + Σ coeffⱼ·Vⱼ)·V_test with explicit coefficients for every vertex.
pub fn pairing(
    g: &DualGraph,
    coeffs: &BTreeMap<String, Rational>,
    test_vertex: &str,
) -> Result<Rational, SurfError> {
    g.validate()?;
    let t = g
        .index_of(test_vertex)
        .ok_or_else(|| SurfError::InvalidGraph(format!("unknown vertex {test_vertex:?}")))?;
    let mut total = Rational::from_integer(g.vertices[t].canonical_degree());
    for (j, v) in g.vertices.iter().enumerate() {
        let Some(c) = coeffs.get(&v.id) else {
            return Err(SurfError::InvalidGraph(format!(
                "no coefficient for vertex {:?}",
                v.id
            )));
        };
        let inter = if j == t {
            g.vertices[t].self_int
        } else {
            g.crossings(j, t)
        };
        total = total + c.clone() * Rational::from_integer(inter);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exc(id: &str, self_int: i64) -> GraphCurve {
        GraphCurve {
            id: id.into(),
            role: Role::Exceptional,
            self_int,
            genus: 0,
            nodes: 0,
            mult: None,
        }
    }

    fn amb(id: &str, self_int: i64, p: i64, q: i64) -> GraphCurve {
        GraphCurve {
            id: id.into(),
            role: Role::Ambient,
            self_int,
            genus: 0,
            nodes: 0,
            mult: Some(Multiplicity::new_i64(p, q).unwrap()),
        }
    }

    fn edge(a: &str, b: &str, k: u32) -> Edge {
        Edge {
            a: a.into(),
            b: b.into(),
            mult: k,
        }
    }

    fn chain_of_minus_two(n: usize) -> DualGraph {
        let vertices = (0..n).map(|i| exc(&format!("E{i}"), -2)).collect();
        let edges = (0..n.saturating_sub(1))
            .map(|i| edge(&format!("E{i}"), &format!("E{}", i + 1), 1))
            .collect();
        DualGraph { vertices, edges }
    }

    #[test]
    fn matrix_examples() {
        let g = chain_of_minus_two(1);
        assert_eq!(intersection_matrix(&g).unwrap(), vec![vec![-2]]);
        let g = chain_of_minus_two(2);
        assert_eq!(
            intersection_matrix(&g).unwrap(),
            vec![vec![-2, 1], vec![1, -2]]
        );
    }

    fn d_tilde_4() -> DualGraph {
        let mut vertices = vec![exc("center", -2)];
        let mut edges = Vec::new();
        for i in 0..4 {
            vertices.push(exc(&format!("leg{i}"), -2));
            edges.push(edge("center", &format!("leg{i}"), 1));
        }
        DualGraph { vertices, edges }
    }

    #[test]
    fn contractibility() {
        assert!(is_contractible(&chain_of_minus_two(3)).unwrap());
        let zero_curve = DualGraph {
            vertices: vec![exc("E", 0)],
            edges: vec![],
        };
        assert!(!is_contractible(&zero_curve).unwrap());
        assert!(!is_contractible(&d_tilde_4()).unwrap());
        assert_eq!(
            definiteness(&d_tilde_4()).unwrap(),
            Definiteness::NegativeSemidefinite { kernel_dim: 1 }
        );
        assert_eq!(
            definiteness(&chain_of_minus_two(4)).unwrap(),
            Definiteness::NegativeDefinite
        );
        let plus = DualGraph {
            vertices: vec![exc("E", 1)],
            edges: vec![],
        };
        assert_eq!(definiteness(&plus).unwrap(), Definiteness::Indefinite);
    }

    #[test]
    fn definiteness_agrees_with_minor_test() {
        // Exhaustive small check: chains with varying self-intersections.
        for s0 in -3..=0i64 {
            for s1 in -3..=0i64 {
                let g = DualGraph {
                    vertices: vec![exc("A", s0), exc("B", s1)],
                    edges: vec![edge("A", "B", 1)],
                };
                let nd = is_contractible(&g).unwrap();
                let cls = definiteness(&g).unwrap();
                assert_eq!(nd, cls == Definiteness::NegativeDefinite, "{s0},{s1}");
            }
        }
    }

    #[test]
    fn crepant_single_curve() {
        // (−m)-curve crossed once by ambient b: d = (m−2)/m + b/m.
        let g = DualGraph {
            vertices: vec![exc("E", -3), amb("C", 1, 6, 7)],
            edges: vec![edge("E", "C", 1)],
        };
        let r = crepant_discrepancies(&g).unwrap();
        assert_eq!(r.multiplicity_of("E").unwrap(), &Rational::new(13, 21));
        assert_eq!(r.entries[0].log_discrepancy, Rational::new(8, 21));
        assert!(r.sub_boundary.is_empty());
    }

    #[test]
    fn crepant_chain() {
        let g = DualGraph {
            vertices: vec![exc("E1", -2), exc("E2", -2), amb("C", 1, 6, 7)],
            edges: vec![edge("E1", "E2", 1), edge("C", "E1", 1)],
        };
        let r = crepant_discrepancies(&g).unwrap();
        assert_eq!(r.multiplicity_of("E1").unwrap(), &Rational::new(4, 7));
        assert_eq!(r.multiplicity_of("E2").unwrap(), &Rational::new(2, 7));
    }

    #[test]
    fn crepant_duval_is_zero() {
        let r = crepant_discrepancies(&chain_of_minus_two(3)).unwrap();
        for e in &r.entries {
            assert!(e.multiplicity.is_zero());
            assert_eq!(e.log_discrepancy, Rational::one());
        }
    }

    #[test]
    fn crepant_sub_boundary_flag() {
        // A (−1)-curve with no boundary solves to d = −1 (discrepancy 2).
        let g = DualGraph {
            vertices: vec![exc("E", -1)],
            edges: vec![],
        };
        let r = crepant_discrepancies(&g).unwrap();
        assert_eq!(r.multiplicity_of("E").unwrap(), &Rational::new(-1, 1));
        assert_eq!(r.sub_boundary, vec!["E".to_string()]);
    }

    #[test]
    fn crepant_fiber_type_rejected() {
        assert!(matches!(
            crepant_discrepancies(&d_tilde_4()),
            Err(SurfError::CrepantSingular)
        ));
    }

    #[test]
    fn status_and_mld() {
        let duval = chain_of_minus_two(1);
        assert_eq!(
            log_canonical_status(&duval).unwrap(),
            LogCanonicalStatus::KawamataLT {
                epsilon: Rational::one()
            }
        );

        let g = DualGraph {
            vertices: vec![exc("E1", -2), exc("E2", -2), amb("C", 1, 6, 7)],
            edges: vec![edge("E1", "E2", 1), edge("C", "E1", 1)],
        };
        assert_eq!(
            log_canonical_status(&g).unwrap(),
            LogCanonicalStatus::KawamataLT {
                epsilon: Rational::new(1, 7)
            }
        );
        assert_eq!(mld(&g).unwrap(), MldResult::Value(Rational::new(1, 7)));

        let reduced = DualGraph {
            vertices: vec![amb("C", 0, 1, 1)],
            edges: vec![],
        };
        assert_eq!(
            log_canonical_status(&reduced).unwrap(),
            LogCanonicalStatus::LogCanonicalNotKlt
        );

        // (−1)-curve with no boundary: discrepancy 2 everywhere relevant.
        let smooth = DualGraph {
            vertices: vec![exc("E", -1)],
            edges: vec![],
        };
        assert_eq!(mld(&smooth).unwrap(), MldResult::Value(Rational::from_integer(2)));

        let bare = DualGraph {
            vertices: vec![amb("C", 2, 6, 7)],
            edges: vec![],
        };
        assert_eq!(mld(&bare).unwrap(), MldResult::Value(Rational::new(1, 7)));
    }

    #[test]
    fn delta_examples() {
        // Two reduced curves crossing: a zero-discrepancy node.
        let g = DualGraph {
            vertices: vec![amb("C1", 0, 1, 1), amb("C2", 0, 1, 1)],
            edges: vec![edge("C1", "C2", 1)],
        };
        assert_eq!(delta_invariant(&g).unwrap(), DeltaInvariant::Infinite);

        assert_eq!(
            delta_invariant(&chain_of_minus_two(3)).unwrap(),
            DeltaInvariant::Finite(0)
        );

        let pair = DualGraph {
            vertices: vec![amb("C1", 1, 6, 7), amb("C2", 1, 6, 7)],
            edges: vec![edge("C1", "C2", 1)],
        };
        // Node (1/7, 1/7): towers need k₁+k₂ ≤ 1, impossible.
        assert_eq!(
            delta_invariant(&pair).unwrap(),
            DeltaInvariant::Finite(2)
        );

        // Node (1/21, 3/7): ambient a=1/21 with k ≤ ... 1/21·k + 3/7 > 1/7
        // immediately; but (1/21, 1/21) self-node style pair gives towers.
        let fine = DualGraph {
            vertices: vec![amb("C1", 1, 20, 21), amb("C2", 1, 20, 21)],
            edges: vec![edge("C1", "C2", 1)],
        };
        // a = 1/21 each; k₁ + k₂ ≤ 3: (1,1), (1,2), (2,1) → 3 towers + 2.
        assert_eq!(
            delta_invariant(&fine).unwrap(),
            DeltaInvariant::Finite(5)
        );

        // A reduced curve alone: one divisor at a = 0, no nodes, finite.
        let lone = DualGraph {
            vertices: vec![amb("C", 0, 1, 1)],
            edges: vec![],
        };
        assert_eq!(delta_invariant(&lone).unwrap(), DeltaInvariant::Finite(1));
    }

    #[test]
    fn duval_classes() {
        let a3 = classify_duval(&chain_of_minus_two(3)).unwrap();
        assert_eq!(a3.kind, DuValKind::A(3));
        assert!(!a3.exceptional_flag);

        // E8: path of 7 with a branch on the third vertex.
        let mut g = chain_of_minus_two(7);
        g.vertices.push(exc("branch", -2));
        g.edges.push(edge("E2", "branch", 1));
        let e8 = classify_duval(&g).unwrap();
        assert_eq!(e8.kind, DuValKind::E8);
        assert!(e8.exceptional_flag);

        // E7: path of 6, branch on third.
        let mut g = chain_of_minus_two(6);
        g.vertices.push(exc("branch", -2));
        g.edges.push(edge("E2", "branch", 1));
        assert_eq!(classify_duval(&g).unwrap().kind, DuValKind::E7);

        // E6: path of 5, branch on middle.
        let mut g = chain_of_minus_two(5);
        g.vertices.push(exc("branch", -2));
        g.edges.push(edge("E2", "branch", 1));
        assert_eq!(classify_duval(&g).unwrap().kind, DuValKind::E6);

        // D4: star.
        let mut g = chain_of_minus_two(3);
        g.vertices.push(exc("branch", -2));
        g.edges.push(edge("E1", "branch", 1));
        assert_eq!(classify_duval(&g).unwrap().kind, DuValKind::D(4));

        let mut bad = chain_of_minus_two(3);
        bad.vertices[1].self_int = -3;
        assert_eq!(classify_duval(&bad).unwrap().kind, DuValKind::NonDuVal);

        // Cycle.
        let mut wheel = chain_of_minus_two(3);
        wheel.edges.push(edge("E0", "E2", 1));
        assert_eq!(classify_duval(&wheel).unwrap().kind, DuValKind::NonDuVal);

        // Disconnected.
        let two = DualGraph {
            vertices: vec![exc("A", -2), exc("B", -2)],
            edges: vec![],
        };
        assert_eq!(classify_duval(&two).unwrap().kind, DuValKind::NonDuVal);

        // The degree-4 star is a fiber shape, not a Du Val tree.
        assert_eq!(
            classify_duval(&d_tilde_4()).unwrap().kind,
            DuValKind::NonDuVal
        );
    }

    #[test]
    fn adjunction_values() {
        assert_eq!(adjunction_mult(1, 1), Rational::zero());
        assert_eq!(adjunction_mult(2, 1), Rational::new(1, 2));
        assert_eq!(adjunction_mult(3, 2), Rational::new(5, 6));
    }

    #[test]
    fn different_values() {
        let m = |p, q| Multiplicity::new_i64(p, q).unwrap();
        assert_eq!(different_at_point(1, &[]).value, Rational::zero());
        assert_eq!(different_at_point(2, &[(1, m(0, 1))]).value, Rational::new(1, 2));
        let d = different_at_point(2, &[(1, m(6, 7))]);
        assert_eq!(d.value, Rational::new(13, 14));
        assert!(!d.exceeds_one);
        let over = different_at_point(2, &[(3, m(6, 7))]);
        assert!(over.exceeds_one);
    }

    #[test]
    fn pairing_examples() {
        let g = DualGraph {
            vertices: vec![
                exc("C2", -1),
                amb("C1", 1, 6, 7),
                exc("Ea", -2),
                exc("Eb", -2),
            ],
            edges: vec![
                edge("C2", "C1", 1),
                edge("C2", "Ea", 1),
                edge("C2", "Eb", 1),
            ],
        };
        let coeffs: BTreeMap<String, Rational> = [
            ("C2".to_string(), Rational::new(6, 7)),
            ("C1".to_string(), Rational::new(6, 7)),
            ("Ea".to_string(), Rational::new(3, 7)),
            ("Eb".to_string(), Rational::new(4, 7)),
        ]
        .into_iter()
        .collect();
        assert_eq!(pairing(&g, &coeffs, "C2").unwrap(), Rational::zero());

        let lone = chain_of_minus_two(1);
        let zero: BTreeMap<String, Rational> =
            [("E0".to_string(), Rational::zero())].into_iter().collect();
        assert_eq!(pairing(&lone, &zero, "E0").unwrap(), Rational::zero());

        let zero_curve = DualGraph {
            vertices: vec![exc("E", 0)],
            edges: vec![],
        };
        let c: BTreeMap<String, Rational> =
            [("E".to_string(), Rational::zero())].into_iter().collect();
        assert_eq!(
            pairing(&zero_curve, &c, "E").unwrap(),
            Rational::from_integer(-2)
        );
    }

    #[test]
    fn validation_errors() {
        let missing_mult = DualGraph {
            vertices: vec![GraphCurve {
                id: "C".into(),
                role: Role::Ambient,
                self_int: 0,
                genus: 0,
                nodes: 0,
                mult: None,
            }],
            edges: vec![],
        };
        assert!(missing_mult.validate().is_err());

        let self_loop = DualGraph {
            vertices: vec![exc("E", -2)],
            edges: vec![edge("E", "E", 1)],
        };
        assert!(self_loop.validate().is_err());

        let dangling = DualGraph {
            vertices: vec![exc("E", -2)],
            edges: vec![edge("E", "F", 1)],
        };
        assert!(dangling.validate().is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "vertices": [
                {"id": "E1", "role": "exceptional", "self_int": -2},
                {"id": "C", "role": "ambient", "self_int": 1, "mult": "6/7"}
            ],
            "edges": [["E1", "C", 1]]
        }"#;
        let g = DualGraph::from_json(text).unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges[0].mult, 1);
        let again = serde_json::to_string(&g).unwrap();
        let g2 = DualGraph::from_json(&again).unwrap();
        assert_eq!(g, g2);
    }
}
