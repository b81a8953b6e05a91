//! Exact-arithmetic geometric objects, intersection predicates, and strip
//! decomposition.
//!
//! All coordinates are arbitrary-precision rationals, so boundary cases
//! (tangent disks, touching squares) are decided deterministically. Tangency
//! counts as intersection throughout. Strips of irrational height √3 are
//! handled by comparing squares: y ≥ k√3 is decided from signs and y² vs 3k².

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;

pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rational_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GeometryError {
    #[error("objects {0} and {1} are of different kind families and cannot be intersected")]
    MixedKinds(usize, usize),
    #[error("instance of kind {0} has no 2-D extent")]
    NotTwoDimensional(ShapeKind),
    #[error("object {id}: {reason}")]
    InvalidObject { id: usize, reason: String },
    #[error("object ids must be 0..n-1 in order; found {found} at position {position}")]
    NonSequentialIds { found: usize, position: usize },
    #[error("object {id} has kind {actual} but the instance is of kind {expected}")]
    KindMismatch {
        id: usize,
        actual: ShapeKind,
        expected: ShapeKind,
    },
    #[error("coloring covers {coloring} objects but the instance has {instance}")]
    ColoringSizeMismatch { coloring: usize, instance: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    UnitDisk,
    Disk,
    UnitSquare,
    Square,
    Interval,
}

impl ShapeKind {
    pub fn is_two_dimensional(self) -> bool {
        self != ShapeKind::Interval
    }

    fn family(self) -> u8 {
        match self {
            ShapeKind::UnitDisk | ShapeKind::Disk => 0,
            ShapeKind::UnitSquare | ShapeKind::Square => 1,
            ShapeKind::Interval => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ShapeKind::UnitDisk => "unit-disk",
            ShapeKind::Disk => "disk",
            ShapeKind::UnitSquare => "unit-square",
            ShapeKind::Square => "square",
            ShapeKind::Interval => "interval",
        }
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Point {
        Point { x, y }
    }
}

/// One geometric object. Unit disks have radius 1 and unit squares half-side
/// 1 (side length 2, the square analog of a radius-1 disk); the non-unit
/// variants carry their own radius or half-side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeoShape {
    UnitDisk { center: Point },
    Disk { center: Point, radius: Rational },
    UnitSquare { center: Point },
    Square { center: Point, half_side: Rational },
    Interval { lo: Rational, hi: Rational },
}

impl GeoShape {
    pub fn kind(&self) -> ShapeKind {
        match self {
            GeoShape::UnitDisk { .. } => ShapeKind::UnitDisk,
            GeoShape::Disk { .. } => ShapeKind::Disk,
            GeoShape::UnitSquare { .. } => ShapeKind::UnitSquare,
            GeoShape::Square { .. } => ShapeKind::Square,
            GeoShape::Interval { .. } => ShapeKind::Interval,
        }
    }

    pub fn center(&self) -> Option<&Point> {
        match self {
            GeoShape::UnitDisk { center }
            | GeoShape::Disk { center, .. }
            | GeoShape::UnitSquare { center }
            | GeoShape::Square { center, .. } => Some(center),
            GeoShape::Interval { .. } => None,
        }
    }

    /// Radius for disks, half-side for squares.
    pub fn extent(&self) -> Option<Rational> {
        match self {
            GeoShape::UnitDisk { .. } | GeoShape::UnitSquare { .. } => Some(rational_int(1)),
            GeoShape::Disk { radius, .. } => Some(radius.clone()),
            GeoShape::Square { half_side, .. } => Some(half_side.clone()),
            GeoShape::Interval { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeoObject {
    pub id: usize,
    pub shape: GeoShape,
}

impl GeoObject {
    fn validate(&self) -> Result<(), GeometryError> {
        match &self.shape {
            GeoShape::Disk { radius, .. } if !radius.is_positive() => {
                Err(GeometryError::InvalidObject {
                    id: self.id,
                    reason: "radius must be positive".into(),
                })
            }
            GeoShape::Square { half_side, .. } if !half_side.is_positive() => {
                Err(GeometryError::InvalidObject {
                    id: self.id,
                    reason: "half-side must be positive".into(),
                })
            }
            GeoShape::Interval { lo, hi } if lo > hi => Err(GeometryError::InvalidObject {
                id: self.id,
                reason: "interval needs lo <= hi".into(),
            }),
            _ => Ok(()),
        }
    }
}

/// Homogeneous collection of geometric objects; object ids are 0..n-1 and
/// double as vertex ids of the derived intersection graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricInstance {
    kind: ShapeKind,
    objects: Vec<GeoObject>,
}

impl GeometricInstance {
    pub fn new(
        kind: ShapeKind,
        objects: Vec<GeoObject>,
    ) -> Result<GeometricInstance, GeometryError> {
        for (position, obj) in objects.iter().enumerate() {
            if obj.id != position {
                return Err(GeometryError::NonSequentialIds {
                    found: obj.id,
                    position,
                });
            }
            if obj.shape.kind() != kind {
                return Err(GeometryError::KindMismatch {
                    id: obj.id,
                    actual: obj.shape.kind(),
                    expected: kind,
                });
            }
            obj.validate()?;
        }
        Ok(GeometricInstance { kind, objects })
    }

    /// Builds a unit-disk instance from center points.
    pub fn unit_disks(centers: Vec<Point>) -> GeometricInstance {
        let objects = centers
            .into_iter()
            .enumerate()
            .map(|(id, center)| GeoObject {
                id,
                shape: GeoShape::UnitDisk { center },
            })
            .collect();
        GeometricInstance::new(ShapeKind::UnitDisk, objects).expect("ids are sequential")
    }

    /// Builds a unit-square instance (half-side 1) from center points.
    pub fn unit_squares(centers: Vec<Point>) -> GeometricInstance {
        let objects = centers
            .into_iter()
            .enumerate()
            .map(|(id, center)| GeoObject {
                id,
                shape: GeoShape::UnitSquare { center },
            })
            .collect();
        GeometricInstance::new(ShapeKind::UnitSquare, objects).expect("ids are sequential")
    }

    /// Builds an interval instance from (lo, hi) pairs.
    pub fn intervals(
        ranges: Vec<(Rational, Rational)>,
    ) -> Result<GeometricInstance, GeometryError> {
        let objects = ranges
            .into_iter()
            .enumerate()
            .map(|(id, (lo, hi))| GeoObject {
                id,
                shape: GeoShape::Interval { lo, hi },
            })
            .collect();
        GeometricInstance::new(ShapeKind::Interval, objects)
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[GeoObject] {
        &self.objects
    }

    pub fn object(&self, id: usize) -> &GeoObject {
        &self.objects[id]
    }
}

/// Closed intersection test. Disk-like objects intersect iff the squared
/// center distance is at most the squared radius sum; square-like iff both
/// coordinate gaps are at most the half-side sum; intervals iff they overlap.
pub fn intersects(a: &GeoObject, b: &GeoObject) -> Result<bool, GeometryError> {
    if a.shape.kind().family() != b.shape.kind().family() {
        return Err(GeometryError::MixedKinds(a.id, b.id));
    }
    Ok(match (&a.shape, &b.shape) {
        (GeoShape::Interval { lo: la, hi: ha }, GeoShape::Interval { lo: lb, hi: hb }) => {
            la.max(lb) <= ha.min(hb)
        }
        _ => {
            let ca = a.shape.center().expect("2-D object");
            let cb = b.shape.center().expect("2-D object");
            let ea = a.shape.extent().expect("2-D object");
            let eb = b.shape.extent().expect("2-D object");
            let reach = ea + eb;
            let dx = (&ca.x - &cb.x).abs();
            let dy = (&ca.y - &cb.y).abs();
            if a.shape.kind().family() == 0 {
                &dx * &dx + &dy * &dy <= &reach * &reach
            } else {
                dx <= reach && dy <= reach
            }
        }
    })
}

/// Intersection graph of the instance: one vertex per object, an edge for
/// every intersecting pair. Exact all-pairs tests; when every coordinate
/// fits a common denominator the comparisons run on scaled integers, which
/// is the same predicate evaluated faster.
pub fn build_intersection_graph(inst: &GeometricInstance) -> Graph {
    let n = inst.len();
    let mut edges = Vec::new();
    if let Some(scaled) = try_scale(inst) {
        for i in 0..n {
            for j in (i + 1)..n {
                if scaled[i].intersects(&scaled[j]) {
                    edges.push((i, j));
                }
            }
        }
    } else {
        for i in 0..n {
            for j in (i + 1)..n {
                if intersects(&inst.objects[i], &inst.objects[j]).expect("homogeneous instance") {
                    edges.push((i, j));
                }
            }
        }
    }
    Graph::new(n, &edges).expect("ids in range, no self-loops")
}

enum ScaledShape {
    Disk { x: i64, y: i64, r: i64 },
    Square { x: i64, y: i64, h: i64 },
    Interval { lo: i64, hi: i64 },
}

impl ScaledShape {
    fn intersects(&self, other: &ScaledShape) -> bool {
        match (self, other) {
            (
                ScaledShape::Disk {
                    x: xa,
                    y: ya,
                    r: ra,
                },
                ScaledShape::Disk {
                    x: xb,
                    y: yb,
                    r: rb,
                },
            ) => {
                let dx = (xa - xb) as i128;
                let dy = (ya - yb) as i128;
                let reach = (ra + rb) as i128;
                dx * dx + dy * dy <= reach * reach
            }
            (
                ScaledShape::Square {
                    x: xa,
                    y: ya,
                    h: ha,
                },
                ScaledShape::Square {
                    x: xb,
                    y: yb,
                    h: hb,
                },
            ) => {
                let reach = ha + hb;
                (xa - xb).abs() <= reach && (ya - yb).abs() <= reach
            }
            (
                ScaledShape::Interval { lo: la, hi: ha },
                ScaledShape::Interval { lo: lb, hi: hb },
            ) => la.max(lb) <= ha.min(hb),
            _ => unreachable!("instances are homogeneous"),
        }
    }
}

/// Rescales all coordinates to integers over the common denominator, if the
/// denominator and magnitudes stay small enough for overflow-free i128
/// arithmetic. Exact: values are multiplied by lcm/denominator.
fn try_scale(inst: &GeometricInstance) -> Option<Vec<ScaledShape>> {
    use num_integer::Integer;
    use num_traits::One;

    const MAX_SCALE: i64 = 1_000_000_000;
    const MAX_MAGNITUDE: i64 = 1 << 40;

    let mut lcm = BigInt::one();
    let limit = BigInt::from(MAX_SCALE);
    let mut fold = |r: &Rational| -> Option<()> {
        lcm = lcm.lcm(r.denom());
        (lcm <= limit).then_some(())
    };
    for obj in &inst.objects {
        match &obj.shape {
            GeoShape::Interval { lo, hi } => {
                fold(lo)?;
                fold(hi)?;
            }
            shape => {
                let c = shape.center().expect("2-D object");
                fold(&c.x)?;
                fold(&c.y)?;
                fold(&shape.extent().expect("2-D object"))?;
            }
        }
    }
    let scale = |r: &Rational| -> Option<i64> {
        let v = (r.numer() * (&lcm / r.denom())).to_i64()?;
        (v.abs() <= MAX_MAGNITUDE).then_some(v)
    };
    inst.objects
        .iter()
        .map(|obj| {
            Some(match &obj.shape {
                GeoShape::Interval { lo, hi } => ScaledShape::Interval {
                    lo: scale(lo)?,
                    hi: scale(hi)?,
                },
                GeoShape::UnitDisk { center } => ScaledShape::Disk {
                    x: scale(&center.x)?,
                    y: scale(&center.y)?,
                    r: scale(&rational_int(1))?,
                },
                GeoShape::Disk { center, radius } => ScaledShape::Disk {
                    x: scale(&center.x)?,
                    y: scale(&center.y)?,
                    r: scale(radius)?,
                },
                GeoShape::UnitSquare { center } => ScaledShape::Square {
                    x: scale(&center.x)?,
                    y: scale(&center.y)?,
                    h: scale(&rational_int(1))?,
                },
                GeoShape::Square { center, half_side } => ScaledShape::Square {
                    x: scale(&center.x)?,
                    y: scale(&center.y)?,
                    h: scale(half_side)?,
                },
            })
        })
        .collect()
}

/// Vertical extent of the center points (0 for at most one object).
pub fn instance_height(inst: &GeometricInstance) -> Result<Rational, GeometryError> {
    if !inst.kind().is_two_dimensional() {
        return Err(GeometryError::NotTwoDimensional(inst.kind()));
    }
    let mut ys = inst
        .objects
        .iter()
        .map(|o| &o.shape.center().expect("2-D object").y);
    let Some(first) = ys.next() else {
        return Ok(Rational::zero());
    };
    let mut min = first.clone();
    let mut max = first.clone();
    for y in ys {
        if y < &min {
            min = y.clone();
        }
        if y > &max {
            max = y.clone();
        }
    }
    Ok(max - min)
}

/// Strip height: the literal irrational √3, or an exact rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StripHeight {
    SqrtThree,
    Exact(Rational),
}

impl StripHeight {
    pub fn exact(value: Rational) -> StripHeight {
        assert!(value.is_positive(), "strip height must be positive");
        StripHeight::Exact(value)
    }
}

impl fmt::Display for StripHeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StripHeight::SqrtThree => f.write_str("sqrt3"),
            StripHeight::Exact(r) => write!(f, "{r}"),
        }
    }
}

/// Compares a rational value against k·√3 exactly, via signs and squares
/// (equality is only possible at 0 = 0 since √3 is irrational).
pub fn cmp_with_sqrt3_multiple(value: &Rational, k: i64) -> Ordering {
    match (value.is_negative(), k < 0) {
        (false, true) => Ordering::Greater,
        (true, false) => Ordering::Less,
        (false, false) => {
            if value.is_zero() {
                if k == 0 {
                    Ordering::Equal
                } else {
                    Ordering::Less
                }
            } else if k == 0 {
                Ordering::Greater
            } else {
                (value * value).cmp(&rational_int(3 * k * k))
            }
        }
        // Both negative: comparison of magnitudes, reversed.
        (true, true) => rational_int(3 * k * k).cmp(&(value * value)),
    }
}

/// `value ≤ √3`, decided exactly.
pub fn le_sqrt3(value: &Rational) -> bool {
    cmp_with_sqrt3_multiple(value, 1) != Ordering::Greater
}

/// Index of the half-open strip [i·h, (i+1)·h) containing `y - origin`.
pub fn strip_index(y: &Rational, origin: &Rational, height: &StripHeight) -> i64 {
    let shifted = y - origin;
    match height {
        StripHeight::Exact(h) => {
            let q = (&shifted / h).floor();
            q.to_integer().to_i64().expect("strip index fits in i64")
        }
        StripHeight::SqrtThree => {
            // Start from a clamped float estimate and correct it exactly.
            let approx = shifted.to_f64().unwrap_or(0.0) / 3.0f64.sqrt();
            let seed = if approx.is_finite() {
                approx.clamp(-1e15, 1e15).floor() as i64
            } else {
                0
            };
            let mut i = seed;
            while cmp_with_sqrt3_multiple(&shifted, i) == Ordering::Less {
                i -= 1;
            }
            while cmp_with_sqrt3_multiple(&shifted, i + 1) != Ordering::Less {
                i += 1;
            }
            i
        }
    }
}

/// Per-vertex strip assignment for a 2-D instance.
#[derive(Clone, Debug)]
pub struct StripDecomposition {
    pub height: StripHeight,
    pub origin: Rational,
    pub strip_of: Vec<i64>,
}

impl StripDecomposition {
    /// Decomposes with origin at the minimum center y, so strip indices are
    /// non-negative and translation invariant.
    pub fn compute(
        inst: &GeometricInstance,
        height: StripHeight,
    ) -> Result<StripDecomposition, GeometryError> {
        if !inst.kind().is_two_dimensional() {
            return Err(GeometryError::NotTwoDimensional(inst.kind()));
        }
        let origin = inst
            .objects()
            .iter()
            .map(|o| o.shape.center().expect("2-D object").y.clone())
            .min()
            .unwrap_or_else(Rational::zero);
        let strip_of = inst
            .objects()
            .iter()
            .map(|o| strip_index(&o.shape.center().expect("2-D object").y, &origin, &height))
            .collect();
        Ok(StripDecomposition {
            height,
            origin,
            strip_of,
        })
    }
}
