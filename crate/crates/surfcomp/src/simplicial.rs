//! The incidence space of a boundary: divisors are vertices, components of
//! pairwise intersections are edges, components of triple intersections are
//! triangles, and so on.  In dimension at most 2 the space decides between
//! a point, a segment, a circle, or a genuine surface piece, and that
//! shape controls how the boundary can degenerate.
//!
//! Two components of the same intersection are distinct simplices with the
//! same vertex set, distinguished by a tag.  The space is a Δ-complex, not
//! an abstract simplicial complex: a wheel of two curves meeting twice is
//! a circle made of two parallel edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SurfError;

/// One component of an intersection of boundary divisors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Stratum {
    /// The divisors the component lies on; l + 1 ids give an l-simplex.
    pub on: Vec<String>,
    /// Distinguishes multiple components of the same intersection.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub tag: String,
}

/// Raw boundary stratum data.  Vertices are implied by the divisor list;
/// `strata` holds the intersections (dimension 1 and up).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Stratification {
    pub divisors: Vec<String>,
    #[serde(default)]
    pub strata: Vec<Stratum>,
    /// Dimension of the ambient variety; simplex dimensions are capped at
    /// one less.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_dim: Option<u32>,
}

impl Stratification {
    pub fn from_json(text: &str) -> Result<Self, SurfError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Simplex {
    /// Sorted, distinct vertex indices into the divisor list.
    pub vertices: Vec<usize>,
    pub tag: String,
    /// Indices into the previous dimension, one per omitted vertex in
    /// order of omission; empty for vertices.
    pub faces: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialSpace {
    pub divisor_ids: Vec<String>,
    /// dims[l] lists the l-simplices.
    pub dims: Vec<Vec<Simplex>>,
    pub ambient_dim: Option<u32>,
}

impl SimplicialSpace {
    /// Number of simplices in each dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.dims.iter().map(Vec::len).collect()
    }
}

/// Dimension of the incidence space; the empty space has dimension −∞.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Reg {
    MinusInfinity,
    Dim(u32),
}

impl fmt::Display for Reg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reg::MinusInfinity => write!(f, "-infinity"),
            Reg::Dim(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Reg {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Reg::MinusInfinity => s.serialize_str("-infinity"),
            Reg::Dim(d) => s.serialize_u32(*d),
        }
    }
}

impl<'de> Deserialize<'de> for Reg {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u32),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(n) => Ok(Reg::Dim(n)),
            Repr::Text(t) if t == "-infinity" => Ok(Reg::MinusInfinity),
            Repr::Text(t) => Err(D::Error::custom(format!(
                "expected a dimension or \"-infinity\", got {t:?}"
            ))),
        }
    }
}

/// Assemble the space, computing face relations by vertex-set inclusion.
pub fn build_complex(s: &Stratification) -> Result<SimplicialSpace, SurfError> {
    let mut index_of = BTreeMap::new();
    for (i, id) in s.divisors.iter().enumerate() {
        if id.is_empty() {
            return Err(SurfError::InvalidComplex("empty divisor id".into()));
        }
        if index_of.insert(id.clone(), i).is_some() {
            return Err(SurfError::InvalidComplex(format!(
                "duplicate divisor id {id:?}"
            )));
        }
    }

    let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new()];
    for (i, id) in s.divisors.iter().enumerate() {
        let _ = id;
        by_dim[0].push(Simplex {
            vertices: vec![i],
            tag: String::new(),
            faces: Vec::new(),
        });
    }

    let mut seen = BTreeSet::new();
    let mut resolved: Vec<(Vec<usize>, String)> = Vec::new();
    for st in &s.strata {
        let mut verts = Vec::with_capacity(st.on.len());
        for id in &st.on {
            let &i = index_of.get(id).ok_or_else(|| {
                SurfError::InvalidComplex(format!("stratum on unknown divisor {id:?}"))
            })?;
            verts.push(i);
        }
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != st.on.len() {
            return Err(SurfError::InvalidComplex(format!(
                "stratum {:?} repeats a divisor",
                st.on
            )));
        }
        if verts.len() < 2 {
            return Err(SurfError::InvalidComplex(
                "one-divisor strata are the vertices and come from the \
                 divisor list"
                    .into(),
            ));
        }
        if let Some(n) = s.ambient_dim {
            if verts.len() as u32 > n {
                return Err(SurfError::InvalidComplex(format!(
                    "a {}-simplex exceeds the ambient dimension bound {} - 1",
                    verts.len() - 1,
                    n
                )));
            }
        }
        if !seen.insert((verts.clone(), st.tag.clone())) {
            return Err(SurfError::InvalidComplex(format!(
                "duplicate stratum {:?} with tag {:?}",
                st.on, st.tag
            )));
        }
        resolved.push((verts, st.tag.clone()));
    }

    resolved.sort_by_key(|(v, _)| v.len());
    for (verts, tag) in resolved {
        let l = verts.len() - 1;
        while by_dim.len() <= l {
            by_dim.push(Vec::new());
        }
        let mut faces = Vec::with_capacity(verts.len());
        for omit in 0..verts.len() {
            let mut sub = verts.clone();
            sub.remove(omit);
            let candidates: Vec<usize> = by_dim[l - 1]
                .iter()
                .enumerate()
                .filter(|(_, sx)| sx.vertices == sub)
                .map(|(i, _)| i)
                .collect();
            match candidates.len() {
                0 => {
                    return Err(SurfError::InvalidComplex(format!(
                        "stratum {verts:?} is missing its face {sub:?}"
                    )))
                }
                1 => faces.push(candidates[0]),
                _ => {
                    return Err(SurfError::InvalidComplex(format!(
                        "face {sub:?} of {verts:?} is ambiguous: the \
                         intersection has several components and cannot \
                         carry a higher stratum"
                    )))
                }
            }
        }
        by_dim[l].push(Simplex {
            vertices: verts,
            tag,
            faces,
        });
    }

    while by_dim.len() > 1 && by_dim.last().is_some_and(Vec::is_empty) {
        by_dim.pop();
    }
    if by_dim.len() == 1 && by_dim[0].is_empty() {
        by_dim.clear();
    }
    Ok(SimplicialSpace {
        divisor_ids: s.divisors.clone(),
        dims: by_dim,
        ambient_dim: s.ambient_dim,
    })
}

/// Top dimension carrying a simplex.
pub fn reg(c: &SimplicialSpace) -> Reg {
    match c.dims.iter().rposition(|d| !d.is_empty()) {
        Some(l) => Reg::Dim(l as u32),
        None => Reg::MinusInfinity,
    }
}

/// Euler characteristic and the topological genus q = 2 − χ.
pub fn euler_genus(c: &SimplicialSpace) -> (i64, i64) {
    let chi: i64 = c
        .dims
        .iter()
        .enumerate()
        .map(|(l, sxs)| {
            let n = sxs.len() as i64;
            if l % 2 == 0 {
                n
            } else {
                -n
            }
        })
        .sum();
    (chi, 2 - chi)
}

/// Connected components of the underlying 1-skeleton.
pub fn connected_components(c: &SimplicialSpace) -> usize {
    let nv = c.dims.first().map_or(0, Vec::len);
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    if let Some(edges) = c.dims.get(1) {
        for e in edges {
            let (a, b) = (e.vertices[0], e.vertices[1]);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    (0..nv).filter(|&v| find(&mut parent, v) == v).count()
}

/// Local manifold-with-boundary test, defined through dimension 2.
///
/// Dimension 0 is a finite set of points and always passes.  Dimension 1
/// requires every vertex to meet at most two edge ends.  Dimension 2
/// requires every edge to lie on at most two triangles and every vertex
/// link to be a single path or cycle.  Connectivity is deliberately not
/// part of the test; see `connected_components`.
pub fn is_manifold_with_boundary(c: &SimplicialSpace) -> Result<bool, SurfError> {
    match reg(c) {
        Reg::MinusInfinity | Reg::Dim(0) => Ok(true),
        Reg::Dim(1) => {
            let nv = c.dims[0].len();
            let mut degree = vec![0usize; nv];
            for e in &c.dims[1] {
                degree[e.vertices[0]] += 1;
                degree[e.vertices[1]] += 1;
            }
            Ok(degree.iter().all(|&d| d <= 2))
        }
        Reg::Dim(2) => {
            let mut edge_load = vec![0usize; c.dims[1].len()];
            for t in &c.dims[2] {
                for &e in &t.faces {
                    edge_load[e] += 1;
                }
            }
            if edge_load.iter().any(|&n| n > 2) {
                return Ok(false);
            }
            for v in 0..c.dims[0].len() {
                if !link_is_path_or_cycle(c, v) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Reg::Dim(d) => Err(SurfError::InvalidComplex(format!(
            "the manifold test covers dimensions up to 2, got {d}"
        ))),
    }
}

/// The link of a vertex in a 2-complex: one node per incident edge, one
/// arc per incident triangle joining its two edges through the vertex.
fn link_is_path_or_cycle(c: &SimplicialSpace, v: usize) -> bool {
    let mut node_of_edge = BTreeMap::new();
    for (i, e) in c.dims[1].iter().enumerate() {
        if e.vertices.contains(&v) {
            let n = node_of_edge.len();
            node_of_edge.insert(i, n);
        }
    }
    if node_of_edge.is_empty() {
        return true;
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); node_of_edge.len()];
    for t in &c.dims[2] {
        if !t.vertices.contains(&v) {
            continue;
        }
        let at_v: Vec<usize> = t
            .faces
            .iter()
            .filter(|&&e| c.dims[1][e].vertices.contains(&v))
            .map(|&e| node_of_edge[&e])
            .collect();
        debug_assert_eq!(at_v.len(), 2);
        adj[at_v[0]].push(at_v[1]);
        adj[at_v[1]].push(at_v[0]);
    }
    if adj.iter().any(|n| n.len() > 2) {
        return false;
    }
    // Single path or cycle means connected.
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Star subdivision at the barycenter of one simplex, for complexes of
/// dimension at most 2.  Subdividing a vertex is the identity; an edge is
/// split in two and every triangle over it in two; a triangle is split in
/// three.  All reported invariants are preserved.
pub fn subdivide(
    c: &SimplicialSpace,
    dim: usize,
    index: usize,
) -> Result<SimplicialSpace, SurfError> {
    if c.dims.len() > 3 {
        return Err(SurfError::InvalidComplex(
            "subdivision is implemented for dimensions up to 2".into(),
        ));
    }
    let sx = c
        .dims
        .get(dim)
        .and_then(|d| d.get(index))
        .ok_or_else(|| {
            SurfError::InvalidComplex(format!("no simplex at dimension {dim}, index {index}"))
        })?;
    if dim == 0 {
        return Ok(c.clone());
    }

    let id = |v: usize| c.divisor_ids[v].clone();
    let mut divisors = c.divisor_ids.clone();
    let mut k = 0usize;
    let w = loop {
        let cand = format!("bc{k}");
        if !divisors.contains(&cand) {
            break cand;
        }
        k += 1;
    };
    divisors.push(w.clone());

    let mut strata: Vec<Stratum> = Vec::new();
    let keep = |vs: &[usize], tag: &str, strata: &mut Vec<Stratum>| {
        strata.push(Stratum {
            on: vs.iter().map(|&v| c.divisor_ids[v].clone()).collect(),
            tag: tag.to_string(),
        });
    };

    match dim {
        1 => {
            let (a, b) = (sx.vertices[0], sx.vertices[1]);
            for (i, e) in c.dims[1].iter().enumerate() {
                if i != index {
                    keep(&e.vertices, &e.tag, &mut strata);
                }
            }
            strata.push(Stratum {
                on: vec![id(a), w.clone()],
                tag: format!("{}.0", sx.tag),
            });
            strata.push(Stratum {
                on: vec![w.clone(), id(b)],
                tag: format!("{}.1", sx.tag),
            });
            if let Some(tris) = c.dims.get(2) {
                for t in tris {
                    if !t.faces.contains(&index) {
                        keep(&t.vertices, &t.tag, &mut strata);
                        continue;
                    }
                    let &apex = t
                        .vertices
                        .iter()
                        .find(|&&v| v != a && v != b)
                        .expect("a triangle over an edge has a third vertex");
                    strata.push(Stratum {
                        on: vec![w.clone(), id(apex)],
                        tag: format!("{}.m", t.tag),
                    });
                    strata.push(Stratum {
                        on: vec![id(a), w.clone(), id(apex)],
                        tag: format!("{}.0", t.tag),
                    });
                    strata.push(Stratum {
                        on: vec![w.clone(), id(b), id(apex)],
                        tag: format!("{}.1", t.tag),
                    });
                }
            }
        }
        2 => {
            for e in &c.dims[1] {
                keep(&e.vertices, &e.tag, &mut strata);
            }
            for (i, t) in c.dims[2].iter().enumerate() {
                if i != index {
                    keep(&t.vertices, &t.tag, &mut strata);
                }
            }
            let vs = &sx.vertices;
            for &v in vs {
                strata.push(Stratum {
                    on: vec![id(v), w.clone()],
                    tag: String::new(),
                });
            }
            for omit in 0..3 {
                let mut on: Vec<String> =
                    vs.iter().enumerate().filter(|&(i, _)| i != omit).map(|(_, &v)| id(v)).collect();
                on.push(w.clone());
                strata.push(Stratum {
                    on,
                    tag: format!("{}.{omit}", sx.tag),
                });
            }
        }
        _ => {
            return Err(SurfError::InvalidComplex(
                "subdivision is implemented for dimensions up to 2".into(),
            ))
        }
    }

    build_complex(&Stratification {
        divisors,
        strata,
        ambient_dim: c.ambient_dim,
    })
}

/// Everything the space reports, in one struct.  `manifold` is absent
/// above dimension 2 where the test is out of scope.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplexReport {
    pub reg: Reg,
    pub chi: i64,
    pub q: i64,
    pub components: usize,
    pub manifold: Option<bool>,
}

pub fn complex_report(c: &SimplicialSpace) -> ComplexReport {
    let (chi, q) = euler_genus(c);
    ComplexReport {
        reg: reg(c),
        chi,
        q,
        components: connected_components(c),
        manifold: is_manifold_with_boundary(c).ok(),
    }
}

// ---------------------------------------------------------------------------
// Stock spaces.
// ---------------------------------------------------------------------------

/// n generic lines in the plane: every pair meets once, no triple points.
/// The space is the complete graph on n vertices.
pub fn lines_in_general_position(n: usize) -> Stratification {
    let divisors: Vec<String> = (1..=n).map(|i| format!("l{i}")).collect();
    let mut strata = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            strata.push(Stratum {
                on: vec![divisors[i].clone(), divisors[j].clone()],
                tag: String::new(),
            });
        }
    }
    Stratification {
        divisors,
        strata,
        ambient_dim: Some(2),
    }
}

/// A wheel of n curves, each meeting the next: the circle.  For n = 2 the
/// two curves meet in two points and the circle has two parallel edges.
pub fn wheel_circle(n: usize) -> Stratification {
    assert!(n >= 2, "a wheel needs at least two components here");
    let divisors: Vec<String> = (1..=n).map(|i| format!("c{i}")).collect();
    let strata = if n == 2 {
        vec![
            Stratum {
                on: vec![divisors[0].clone(), divisors[1].clone()],
                tag: "p0".into(),
            },
            Stratum {
                on: vec![divisors[0].clone(), divisors[1].clone()],
                tag: "p1".into(),
            },
        ]
    } else {
        (0..n)
            .map(|i| Stratum {
                on: vec![divisors[i].clone(), divisors[(i + 1) % n].clone()],
                tag: String::new(),
            })
            .collect()
    };
    Stratification {
        divisors,
        strata,
        ambient_dim: Some(2),
    }
}

/// A chain of n curves: the segment (a point for n = 1).
pub fn chain_segment(n: usize) -> Stratification {
    assert!(n >= 1);
    let divisors: Vec<String> = (1..=n).map(|i| format!("c{i}")).collect();
    let strata = (0..n.saturating_sub(1))
        .map(|i| Stratum {
            on: vec![divisors[i].clone(), divisors[i + 1].clone()],
            tag: String::new(),
        })
        .collect();
    Stratification {
        divisors,
        strata,
        ambient_dim: Some(2),
    }
}

/// The icosahedron surface: 12 vertices, 30 edges, 20 triangles.
pub fn icosahedron() -> Stratification {
    const FACES: [[usize; 3]; 20] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 6, 2],
        [2, 6, 7],
        [2, 7, 3],
        [3, 7, 8],
        [3, 8, 4],
        [4, 8, 9],
        [4, 9, 5],
        [5, 9, 10],
        [5, 10, 1],
        [1, 10, 6],
        [6, 11, 7],
        [7, 11, 8],
        [8, 11, 9],
        [9, 11, 10],
        [10, 11, 6],
    ];
    let divisors: Vec<String> = (0..12).map(|i| format!("v{i}")).collect();
    let mut edge_set = BTreeSet::new();
    for f in &FACES {
        for (a, b) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
            edge_set.insert((a.min(b), a.max(b)));
        }
    }
    let mut strata: Vec<Stratum> = edge_set
        .into_iter()
        .map(|(a, b)| Stratum {
            on: vec![divisors[a].clone(), divisors[b].clone()],
            tag: String::new(),
        })
        .collect();
    strata.extend(FACES.iter().map(|f| Stratum {
        on: f.iter().map(|&v| divisors[v].clone()).collect(),
        tag: String::new(),
    }));
    Stratification {
        divisors,
        strata,
        ambient_dim: Some(3),
    }
}

/// The boundary of a tetrahedron: the smallest triangulated 2-sphere.
pub fn tetrahedron_sphere() -> Stratification {
    let divisors: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
    let mut strata = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            strata.push(Stratum {
                on: vec![divisors[i].clone(), divisors[j].clone()],
                tag: String::new(),
            });
        }
    }
    for omit in 0..4 {
        strata.push(Stratum {
            on: (0..4).filter(|&v| v != omit).map(|v| divisors[v].clone()).collect(),
            tag: String::new(),
        });
    }
    Stratification {
        divisors,
        strata,
        ambient_dim: Some(3),
    }
}
