//! Serialization of cell data: the JSON listing format, OFF meshes and the
//! summary report.
//!
//! Rationals in JSON are `"p/q"` strings; index sets are 1-based.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linalg::{format_rat, Perm, QuadExt, Rat, RatVec};
use crate::lattice::proj_matrix;
use crate::limits::{check_n, Limits};
use crate::voronoi::{
    cell_volume_sq, facets, k_faces_with, rhombus_decomposition, simplex_decomposition_with,
    voronoi_vertices_with, Rhombus,
};

/// Largest `n` whose vertex count `2^{n+1} − 2` fits the report.
pub const MAX_REPORT_N: usize = 62;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub n: usize,
    pub vertex_count: u64,
    pub facet_count: u64,
    #[serde(with = "rat_string")]
    pub volume_sq: Rat,
    pub rhombus_count: u64,
    /// Only present when the simplex decomposition was actually built.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub simplex_count: Option<u64>,
}

mod rat_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exact_linalg::{format_rat, parse_rat, Rat};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// Counts and squared volume. Vertices and simplices are enumerated when
/// within `limits`; larger vertex counts use the closed form.
pub fn cell_report(n: usize, limits: &Limits) -> Result<CellReport> {
    check_n(n)?;
    if n > MAX_REPORT_N {
        return Err(Error::CapExceeded {
            what: "cell report",
            n,
            cap: MAX_REPORT_N,
        });
    }
    let vertex_count = if n <= limits.subset {
        voronoi_vertices_with(n, limits)?.len() as u64
    } else {
        (1u64 << (n + 1)) - 2
    };
    let facet_count = if n <= limits.subset {
        facets(n)?.len() as u64
    } else {
        (n * (n + 1)) as u64
    };
    let simplex_count = if n <= limits.factorial {
        Some(simplex_decomposition_with(n, limits)?.len() as u64)
    } else {
        None
    };
    Ok(CellReport {
        n,
        vertex_count,
        facet_count,
        volume_sq: cell_volume_sq(n)?,
        rhombus_count: rhombus_decomposition(n, false)?.len() as u64,
        simplex_count,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ListingKind {
    Vertices,
    Facets,
    Faces,
    Rhombi,
    Simplices,
}

impl ListingKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ListingKind::Vertices => "vertices",
            ListingKind::Facets => "facets",
            ListingKind::Faces => "faces",
            ListingKind::Rhombi => "rhombi",
            ListingKind::Simplices => "simplices",
        }
    }
}

fn one_based(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().map(|g| g + 1).collect()
}

fn zero_based(v: &[usize]) -> Result<Vec<usize>> {
    v.iter()
        .map(|&g| {
            g.checked_sub(1)
                .ok_or_else(|| Error::Parse("indices are 1-based".into()))
        })
        .collect()
}

/// A face `translate + R_J`; `excluded` is `J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceItem {
    pub dim: usize,
    pub translate: RatVec,
    pub excluded: Vec<usize>,
}

impl FaceItem {
    pub fn from_rhombus(r: &Rhombus) -> Self {
        FaceItem {
            dim: r.dim(),
            translate: r.translate().clone(),
            excluded: one_based(r.excluded()),
        }
    }

    pub fn to_rhombus(&self, n: usize) -> Result<Rhombus> {
        Rhombus::new(n, self.translate.clone(), zero_based(&self.excluded)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetItem {
    pub i: usize,
    pub j: usize,
    pub normal: RatVec,
    pub vertices: Vec<RatVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhombusItem {
    pub index: usize,
    pub translate: RatVec,
    pub generators: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexItem {
    pub perm: Vec<usize>,
    pub vertices: Vec<RatVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Items {
    Vertices(Vec<RatVec>),
    Facets(Vec<FacetItem>),
    Faces(Vec<FaceItem>),
    Rhombi(Vec<RhombusItem>),
    Simplices(Vec<SimplexItem>),
}

impl Items {
    pub fn kind(&self) -> ListingKind {
        match self {
            Items::Vertices(_) => ListingKind::Vertices,
            Items::Facets(_) => ListingKind::Facets,
            Items::Faces(_) => ListingKind::Faces,
            Items::Rhombi(_) => ListingKind::Rhombi,
            Items::Simplices(_) => ListingKind::Simplices,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Items::Vertices(v) => v.len(),
            Items::Facets(v) => v.len(),
            Items::Faces(v) => v.len(),
            Items::Rhombi(v) => v.len(),
            Items::Simplices(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `{"n": …, "kind": …, "items": […]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Listing {
    pub n: usize,
    pub items: Items,
}

#[derive(Serialize, Deserialize)]
struct RawListing {
    n: usize,
    kind: ListingKind,
    items: serde_json::Value,
}

impl Listing {
    pub fn vertices(n: usize, limits: &Limits) -> Result<Self> {
        Ok(Listing {
            n,
            items: Items::Vertices(voronoi_vertices_with(n, limits)?),
        })
    }

    pub fn facets(n: usize, limits: &Limits) -> Result<Self> {
        crate::limits::check_cap("facet listing", n, limits.subset)?;
        let items = facets(n)?
            .into_iter()
            .map(|f| FacetItem {
                i: f.i + 1,
                j: f.j + 1,
                normal: f.normal(),
                vertices: f.vertices(),
            })
            .collect();
        Ok(Listing {
            n,
            items: Items::Facets(items),
        })
    }

    pub fn faces(n: usize, k: usize, limits: &Limits) -> Result<Self> {
        let items = k_faces_with(n, k, limits)?
            .iter()
            .map(FaceItem::from_rhombus)
            .collect();
        Ok(Listing {
            n,
            items: Items::Faces(items),
        })
    }

    pub fn rhombi(n: usize, flipped: bool) -> Result<Self> {
        let items = rhombus_decomposition(n, flipped)?
            .into_iter()
            .enumerate()
            .map(|(j, r)| RhombusItem {
                index: j + 1,
                translate: r.translate().clone(),
                generators: r.generator_indices().iter().map(|g| g + 1).collect(),
            })
            .collect();
        Ok(Listing {
            n,
            items: Items::Rhombi(items),
        })
    }

    pub fn simplices(n: usize, limits: &Limits) -> Result<Self> {
        let simplices = simplex_decomposition_with(n, limits)?;
        let items = Perm::all(n + 1)
            .into_iter()
            .zip(simplices)
            .map(|(p, s)| SimplexItem {
                perm: p.one_based(),
                vertices: s.vertices().to_vec(),
            })
            .collect();
        Ok(Listing {
            n,
            items: Items::Simplices(items),
        })
    }

    pub fn to_json(&self) -> String {
        let items = match &self.items {
            Items::Vertices(v) => serde_json::to_value(v),
            Items::Facets(v) => serde_json::to_value(v),
            Items::Faces(v) => serde_json::to_value(v),
            Items::Rhombi(v) => serde_json::to_value(v),
            Items::Simplices(v) => serde_json::to_value(v),
        }
        .expect("listing items serialize");
        let raw = RawListing {
            n: self.n,
            kind: self.items.kind(),
            items,
        };
        serde_json::to_string(&raw).expect("listing serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawListing = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let parse = |e: serde_json::Error| Error::Parse(e.to_string());
        let items = match raw.kind {
            ListingKind::Vertices => Items::Vertices(serde_json::from_value(raw.items).map_err(parse)?),
            ListingKind::Facets => Items::Facets(serde_json::from_value(raw.items).map_err(parse)?),
            ListingKind::Faces => Items::Faces(serde_json::from_value(raw.items).map_err(parse)?),
            ListingKind::Rhombi => Items::Rhombi(serde_json::from_value(raw.items).map_err(parse)?),
            ListingKind::Simplices => {
                Items::Simplices(serde_json::from_value(raw.items).map_err(parse)?)
            }
        };
        Ok(Listing { n: raw.n, items })
    }

    /// One line per item.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.items {
            Items::Vertices(v) => {
                for x in v {
                    let _ = writeln!(out, "{x}");
                }
            }
            Items::Facets(v) => {
                for f in v {
                    let _ = writeln!(
                        out,
                        "F({},{}) normal {} vertices {}",
                        f.i,
                        f.j,
                        f.normal,
                        f.vertices.len()
                    );
                }
            }
            Items::Faces(v) => {
                for f in v {
                    let _ = writeln!(out, "{} + R_{}", f.translate, index_set(&f.excluded));
                }
            }
            Items::Rhombi(v) => {
                for r in v {
                    let _ = writeln!(
                        out,
                        "R_{}: {} + span{}",
                        r.index,
                        r.translate,
                        index_set(&r.generators)
                    );
                }
            }
            Items::Simplices(v) => {
                for s in v {
                    let verts: Vec<String> = s.vertices.iter().map(|x| x.to_string()).collect();
                    let _ = writeln!(out, "{}: {}", index_list(&s.perm), verts.join(" "));
                }
            }
        }
        out
    }
}

fn index_set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn index_list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|g| g.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    /// Coordinates of `R^{n+1}`.
    Ambient,
    /// `M_proj` image in `R^n`.
    Projected,
}

/// Decimal with 12 significant digits, trailing zeros removed.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

type Point3 = [QuadExt; 3];

fn sub3(a: &Point3, b: &Point3) -> Point3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn dot3(a: &Point3, b: &Point3) -> QuadExt {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

fn cross3(a: &Point3, b: &Point3) -> Point3 {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

/// Indices of `pts` in counterclockwise order seen from the tip of `normal`,
/// starting from the first point. Exact; `pts` must be a convex polygon.
fn angular_order(pts: &[Point3], normal: &Point3) -> Vec<usize> {
    let d = normal[0].radicand();
    let k = QuadExt::from_rat(Rat::from_integer((pts.len() as i64).into()), d);
    let mut c = [QuadExt::zero(d), QuadExt::zero(d), QuadExt::zero(d)];
    for p in pts {
        for t in 0..3 {
            c[t] = &c[t] + &p[t];
        }
    }
    let c = [&c[0] / &k, &c[1] / &k, &c[2] / &k];
    let rel: Vec<Point3> = pts.iter().map(|p| sub3(p, &c)).collect();
    let r = rel[0].clone();
    let half = |q: &Point3| {
        let s = dot3(&cross3(&r, q), normal).signum();
        let t = dot3(&r, q).signum();
        if s > 0 || (s == 0 && t > 0) {
            0
        } else {
            1
        }
    };
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| {
        if a == b {
            return Ordering::Equal;
        }
        if a == 0 {
            return Ordering::Less;
        }
        if b == 0 {
            return Ordering::Greater;
        }
        let (ha, hb) = (half(&rel[a]), half(&rel[b]));
        ha.cmp(&hb).then_with(|| {
            match dot3(&cross3(&rel[a], &rel[b]), normal).signum() {
                1 => Ordering::Less,
                -1 => Ordering::Greater,
                _ => Ordering::Equal,
            }
        })
    });
    idx
}

fn rat_point(v: &RatVec, d: u64) -> Point3 {
    let get = |k: usize| QuadExt::from_rat(v.as_slice().get(k).cloned().unwrap_or_else(Rat::zero), d);
    [get(0), get(1), get(2)]
}

/// OFF text for `n ∈ {2, 3}`.
///
/// `n = 2` is one hexagonal face; its ambient frame keeps the three
/// coordinates, the projected frame pads `z = 0`. `n = 3` gives 12
/// quadrilaterals; the ambient frame writes a `4OFF` file. Each face is
/// ordered counterclockwise about its outward normal (the plane normal `1`
/// for the hexagon), measured in the `M_proj` frame.
pub fn off_mesh(n: usize, frame: Frame) -> Result<String> {
    if n != 2 && n != 3 {
        return Err(Error::InvalidArgument(format!("meshes exist for n = 2 or 3, got {n}")));
    }
    let verts = crate::voronoi::voronoi_vertices(n)?;
    let m = proj_matrix(n)?;
    let projected: Vec<Vec<QuadExt>> = verts.iter().map(|v| m.mul_vec(v)).collect::<Result<_>>()?;

    let mut faces: Vec<Vec<usize>> = Vec::new();
    if n == 2 {
        let pts: Vec<Point3> = verts.iter().map(|v| rat_point(v, 3)).collect();
        let one = QuadExt::from_rat(Rat::from_integer(1.into()), 3);
        let order = angular_order(&pts, &[one.clone(), one.clone(), one]);
        faces.push(order);
    } else {
        let proj3 = |v: &RatVec| -> Result<Point3> {
            let img = m.mul_vec(v)?;
            Ok([img[0].clone(), img[1].clone(), img[2].clone()])
        };
        for f in facets(3)? {
            let fv = f.vertices();
            let idx: Vec<usize> = fv
                .iter()
                .map(|v| verts.binary_search(v).expect("facet vertex is a cell vertex"))
                .collect();
            let pts: Vec<Point3> = fv.iter().map(proj3).collect::<Result<_>>()?;
            let normal = proj3(&f.normal())?;
            faces.push(angular_order(&pts, &normal).into_iter().map(|k| idx[k]).collect());
        }
    }
    let mut edges = BTreeSet::new();
    for f in &faces {
        for (a, b) in f.iter().zip(f.iter().cycle().skip(1)) {
            edges.insert((*a.min(b), *a.max(b)));
        }
    }

    let mut out = String::new();
    let header = if n == 3 && frame == Frame::Ambient { "4OFF" } else { "OFF" };
    let _ = writeln!(out, "{header}");
    let _ = writeln!(out, "{} {} {}", verts.len(), faces.len(), edges.len());
    for (v, p) in verts.iter().zip(&projected) {
        let coords: Vec<f64> = match frame {
            Frame::Ambient => v.to_f64(),
            Frame::Projected => {
                let mut c: Vec<f64> = p.iter().map(QuadExt::to_f64).collect();
                c.resize(3, 0.0);
                c
            }
        };
        let parts: Vec<String> = coords.into_iter().map(format_sig12).collect();
        let _ = writeln!(out, "{}", parts.join(" "));
    }
    for f in &faces {
        let parts: Vec<String> = f.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(out, "{} {}", f.len(), parts.join(" "));
    }
    Ok(out)
}

/// Plain-text form of a [`CellReport`].
pub fn report_text(r: &CellReport) -> String {
    let mut out = format!(
        "n {}\nvertices {}\nfacets {}\nvolume^2 {}\nrhombi {}\n",
        r.n,
        r.vertex_count,
        r.facet_count,
        format_rat(&r.volume_sq),
        r.rhombus_count
    );
    if let Some(s) = r.simplex_count {
        let _ = writeln!(out, "simplices {s}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::int;

    #[test]
    fn report_values() {
        let r = cell_report(3, &Limits::default()).unwrap();
        assert_eq!((r.vertex_count, r.facet_count, r.volume_sq.clone()), (14, 12, int(4)));
        assert_eq!(r.simplex_count, Some(24));
        let r1 = cell_report(1, &Limits::default()).unwrap();
        assert_eq!((r1.vertex_count, r1.facet_count, r1.volume_sq), (2, 2, int(2)));
        assert!(cell_report(0, &Limits::default()).is_err());
        let big = cell_report(20, &Limits::default()).unwrap();
        assert_eq!(big.vertex_count, (1 << 21) - 2);
        assert_eq!(big.simplex_count, None);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"volume_sq\":\"4\""));
        assert_eq!(serde_json::from_str::<CellReport>(&json).unwrap(), r);
    }

    #[test]
    fn json_round_trip() {
        let lim = Limits::default();
        let listings = [
            Listing::vertices(2, &lim).unwrap(),
            Listing::facets(3, &lim).unwrap(),
            Listing::faces(4, 2, &lim).unwrap(),
            Listing::rhombi(3, false).unwrap(),
            Listing::rhombi(3, true).unwrap(),
            Listing::simplices(2, &lim).unwrap(),
        ];
        for l in listings {
            let back = Listing::from_json(&l.to_json()).unwrap();
            assert_eq!(back, l);
        }
        let v = Listing::vertices(2, &lim).unwrap().to_json();
        assert!(v.contains(r#"["2/3","-1/3","-1/3"]"#));
        assert!(v.starts_with(r#"{"n":2,"kind":"vertices","items":["#));
    }

    #[test]
    fn faces_convert_back() {
        for r in crate::voronoi::k_faces(3, 1).unwrap() {
            assert_eq!(FaceItem::from_rhombus(&r).to_rhombus(3).unwrap(), r);
        }
    }

    #[test]
    fn rhombi_text() {
        let t = Listing::rhombi(3, false).unwrap().to_text();
        assert_eq!(t.lines().count(), 4);
        assert!(t.starts_with("R_1: (0, 0, 0, 0) + span{2,3,4}"));
    }

    #[test]
    fn sig_digits() {
        assert_eq!(format_sig12(0.0), "0");
        assert_eq!(format_sig12(-0.0), "0");
        assert_eq!(format_sig12(2.0 / 3.0), "0.666666666667");
        assert_eq!(format_sig12(-0.5), "-0.5");
        assert_eq!(format_sig12(1.0), "1");
        assert_eq!(format_sig12(123.456), "123.456");
    }

    fn parse_off(s: &str) -> (Vec<Vec<f64>>, Vec<Vec<usize>>) {
        let mut lines = s.lines();
        lines.next();
        let counts: Vec<usize> = lines.next().unwrap().split(' ').map(|x| x.parse().unwrap()).collect();
        let verts = (0..counts[0])
            .map(|_| lines.next().unwrap().split(' ').map(|x| x.parse().unwrap()).collect())
            .collect();
        let faces = (0..counts[1])
            .map(|_| lines.next().unwrap().split(' ').skip(1).map(|x| x.parse().unwrap()).collect())
            .collect();
        (verts, faces)
    }

    #[test]
    fn meshes() {
        let hex = off_mesh(2, Frame::Ambient).unwrap();
        assert!(hex.starts_with("OFF\n6 1 6\n"));
        let rd = off_mesh(3, Frame::Projected).unwrap();
        assert!(rd.starts_with("OFF\n14 12 24\n"));
        let (verts, faces) = parse_off(&rd);
        assert!(faces.iter().all(|f| f.len() == 4));
        // float check of orientation: (b−a)×(c−b) points away from the origin
        for f in &faces {
            let p: Vec<&Vec<f64>> = f.iter().map(|&k| &verts[k]).collect();
            let u: Vec<f64> = (0..3).map(|t| p[1][t] - p[0][t]).collect();
            let w: Vec<f64> = (0..3).map(|t| p[2][t] - p[1][t]).collect();
            let nrm = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]];
            let c: f64 = (0..3).map(|t| nrm[t] * (p[0][t] + p[2][t])).sum();
            assert!(c > 0.0);
        }
        assert!(off_mesh(3, Frame::Ambient).unwrap().starts_with("4OFF\n14 12 24\n"));
        let (pv, _) = parse_off(&off_mesh(2, Frame::Projected).unwrap());
        assert!(pv.iter().all(|v| v.len() == 3 && v[2] == 0.0));
        assert!(off_mesh(4, Frame::Ambient).is_err());
        assert_eq!(off_mesh(3, Frame::Projected).unwrap(), rd);
    }
}
