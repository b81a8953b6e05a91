//! Plain-text formats. All are line-based, whitespace-separated, LF-ended,
//! with a versioned header line:
//!
//! ```text
//! cfgeo-graph v1        cfgeo-coloring v1      cfgeo-instance v1
//! n <N>                 palette <k>            shape <kind>
//! e <u> <v>             c <v> <color>          object <id> <x> <y> [<extent>]
//! ...                   ...                    object <id> <lo> <hi>   (intervals)
//!
//! cfgeo-1in3 v1         cfgeo-chain v1
//! vars <n>              m <M>
//! clause <a> <b> <c>
//! ```
//!
//! Numbers are integers, `p/q` rationals, or finite decimals; writers emit
//! canonical reduced rationals. Lines starting with `#` are comments; the
//! gadget writer uses them to annotate vertex roles (`# role <v> <label>`).

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::coloring::PartialColoring;
use crate::generators::GadgetGraph;
use crate::geometry::{GeoObject, GeoShape, GeometricInstance, Point, Rational, ShapeKind};
use crate::graph::Graph;
use crate::reduction::Formula1in3;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header `{expected}`")]
    BadHeader { line: usize, expected: &'static str },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
}

fn invalid(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Invalid {
        line,
        message: message.into(),
    }
}

/// Parses an integer, `p/q` rational, or finite decimal.
pub fn parse_number(s: &str) -> Result<Rational, String> {
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.chars().all(|c| c.is_ascii_digit())
            || frac.is_empty()
            || !frac.chars().all(|c| c.is_ascii_digit())
        {
            return Err(format!("bad decimal {s:?}"));
        }
        let combined: BigInt = format!(
            "{}{}",
            if whole_digits.is_empty() {
                "0"
            } else {
                whole_digits
            },
            frac
        )
        .parse()
        .map_err(|_| format!("bad decimal {s:?}"))?;
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let value = Rational::new(combined, scale);
        return Ok(if negative { -value } else { value });
    }
    let int: BigInt = s.parse().map_err(|_| format!("bad integer {s:?}"))?;
    Ok(Rational::from_integer(int))
}

/// Canonical text for a rational: `p` or `p/q` with q > 1.
pub fn format_number(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

const GRAPH_HEADER: &str = "cfgeo-graph v1";
const COLORING_HEADER: &str = "cfgeo-coloring v1";
const INSTANCE_HEADER: &str = "cfgeo-instance v1";
const FORMULA_HEADER: &str = "cfgeo-1in3 v1";
const CHAIN_HEADER: &str = "cfgeo-chain v1";

/// Splits into (line number, trimmed content), skipping blanks and comments.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    expected: &'static str,
) -> Result<(), ParseError> {
    match lines.next() {
        Some((_, line)) if line == expected => Ok(()),
        Some((line, _)) => Err(ParseError::BadHeader { line, expected }),
        None => Err(ParseError::BadHeader { line: 1, expected }),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{GRAPH_HEADER}\nn {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Graph plus `# role <v> <label>` annotations.
pub fn write_gadget_graph(gg: &GadgetGraph) -> String {
    let mut out = write_graph(&gg.graph);
    for (v, role) in gg.roles.iter().enumerate() {
        out.push_str(&format!("# role {v} {role}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, GRAPH_HEADER)?;
    let (line_no, n_line) = lines
        .next()
        .ok_or_else(|| invalid(2, "missing `n <N>` line"))?;
    let n: usize = match n_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", n] => n
            .parse()
            .map_err(|_| invalid(line_no, format!("bad vertex count {n:?}")))?,
        _ => return Err(invalid(line_no, "expected `n <N>`")),
    };
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["e", u, v] => {
                let u: usize = u
                    .parse()
                    .map_err(|_| invalid(line_no, format!("bad endpoint {u:?}")))?;
                let v: usize = v
                    .parse()
                    .map_err(|_| invalid(line_no, format!("bad endpoint {v:?}")))?;
                edges.push((u, v));
            }
            _ => return Err(invalid(line_no, "expected `e <u> <v>`")),
        }
    }
    Graph::new(n, &edges).map_err(|e| invalid(0, e.to_string()))
}

pub fn write_coloring(c: &PartialColoring) -> String {
    let mut out = format!("{COLORING_HEADER}\npalette {}\n", c.palette_size());
    for (v, color) in c.colored_vertices() {
        out.push_str(&format!("c {v} {color}\n"));
    }
    out
}

/// A parsed coloring file; pair it with a graph size to get a
/// [`PartialColoring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFile {
    pub palette: usize,
    pub assignments: Vec<(usize, usize)>,
}

impl ColoringFile {
    pub fn into_partial_coloring(self, n: usize) -> Result<PartialColoring, String> {
        let mut assignment = vec![None; n];
        for (v, color) in self.assignments {
            if v >= n {
                return Err(format!("vertex {v} out of range for {n} vertices"));
            }
            if assignment[v].is_some() {
                return Err(format!("vertex {v} is colored twice"));
            }
            assignment[v] = Some(color);
        }
        PartialColoring::new(self.palette, assignment).map_err(|e| e.to_string())
    }
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, COLORING_HEADER)?;
    let (line_no, palette_line) = lines
        .next()
        .ok_or_else(|| invalid(2, "missing `palette <k>` line"))?;
    let palette: usize = match palette_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["palette", k] => k
            .parse()
            .map_err(|_| invalid(line_no, format!("bad palette size {k:?}")))?,
        _ => return Err(invalid(line_no, "expected `palette <k>`")),
    };
    let mut assignments = Vec::new();
    for (line_no, line) in lines {
        match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["c", v, color] => {
                let v: usize = v
                    .parse()
                    .map_err(|_| invalid(line_no, format!("bad vertex {v:?}")))?;
                let color: usize = color
                    .parse()
                    .map_err(|_| invalid(line_no, format!("bad color {color:?}")))?;
                assignments.push((v, color));
            }
            _ => return Err(invalid(line_no, "expected `c <v> <color>`")),
        }
    }
    Ok(ColoringFile {
        palette,
        assignments,
    })
}

fn kind_from_str(s: &str) -> Option<ShapeKind> {
    Some(match s {
        "unit-disk" => ShapeKind::UnitDisk,
        "disk" => ShapeKind::Disk,
        "unit-square" => ShapeKind::UnitSquare,
        "square" => ShapeKind::Square,
        "interval" => ShapeKind::Interval,
        _ => return None,
    })
}

pub fn write_instance(inst: &GeometricInstance) -> String {
    let mut out = format!("{INSTANCE_HEADER}\nshape {}\n", inst.kind());
    for obj in inst.objects() {
        match &obj.shape {
            GeoShape::Interval { lo, hi } => {
                out.push_str(&format!(
                    "object {} {} {}\n",
                    obj.id,
                    format_number(lo),
                    format_number(hi)
                ));
            }
            GeoShape::UnitDisk { center } | GeoShape::UnitSquare { center } => {
                out.push_str(&format!(
                    "object {} {} {}\n",
                    obj.id,
                    format_number(&center.x),
                    format_number(&center.y)
                ));
            }
            GeoShape::Disk { center, radius } => {
                out.push_str(&format!(
                    "object {} {} {} {}\n",
                    obj.id,
                    format_number(&center.x),
                    format_number(&center.y),
                    format_number(radius)
                ));
            }
            GeoShape::Square { center, half_side } => {
                out.push_str(&format!(
                    "object {} {} {} {}\n",
                    obj.id,
                    format_number(&center.x),
                    format_number(&center.y),
                    format_number(half_side)
                ));
            }
        }
    }
    out
}

pub fn parse_instance(text: &str) -> Result<GeometricInstance, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, INSTANCE_HEADER)?;
    let (line_no, shape_line) = lines
        .next()
        .ok_or_else(|| invalid(2, "missing `shape <kind>` line"))?;
    let kind = match shape_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["shape", k] => {
            kind_from_str(k).ok_or_else(|| invalid(line_no, format!("unknown shape kind {k:?}")))?
        }
        _ => return Err(invalid(line_no, "expected `shape <kind>`")),
    };
    let mut objects = Vec::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.first() != Some(&"object") {
            return Err(invalid(line_no, "expected `object ...`"));
        }
        let id: usize = fields
            .get(1)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| invalid(line_no, "bad object id"))?;
        let num = |idx: usize| -> Result<Rational, ParseError> {
            let field = fields
                .get(idx)
                .ok_or_else(|| invalid(line_no, "missing number field"))?;
            parse_number(field).map_err(|e| invalid(line_no, e))
        };
        let shape = match kind {
            ShapeKind::Interval => {
                expect_fields(line_no, &fields, 4)?;
                GeoShape::Interval {
                    lo: num(2)?,
                    hi: num(3)?,
                }
            }
            ShapeKind::UnitDisk => {
                expect_fields(line_no, &fields, 4)?;
                GeoShape::UnitDisk {
                    center: Point::new(num(2)?, num(3)?),
                }
            }
            ShapeKind::UnitSquare => {
                expect_fields(line_no, &fields, 4)?;
                GeoShape::UnitSquare {
                    center: Point::new(num(2)?, num(3)?),
                }
            }
            ShapeKind::Disk => {
                expect_fields(line_no, &fields, 5)?;
                GeoShape::Disk {
                    center: Point::new(num(2)?, num(3)?),
                    radius: num(4)?,
                }
            }
            ShapeKind::Square => {
                expect_fields(line_no, &fields, 5)?;
                GeoShape::Square {
                    center: Point::new(num(2)?, num(3)?),
                    half_side: num(4)?,
                }
            }
        };
        objects.push(GeoObject { id, shape });
    }
    GeometricInstance::new(kind, objects).map_err(|e| invalid(0, e.to_string()))
}

fn expect_fields(line_no: usize, fields: &[&str], count: usize) -> Result<(), ParseError> {
    if fields.len() != count {
        return Err(invalid(
            line_no,
            format!("expected {count} fields, got {}", fields.len()),
        ));
    }
    Ok(())
}

pub fn write_formula(phi: &Formula1in3) -> String {
    let mut out = format!("{FORMULA_HEADER}\nvars {}\n", phi.var_count());
    for triple in phi.clauses() {
        out.push_str(&format!(
            "clause {} {} {}\n",
            triple[0], triple[1], triple[2]
        ));
    }
    out
}

pub fn parse_formula(text: &str) -> Result<Formula1in3, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, FORMULA_HEADER)?;
    let (line_no, vars_line) = lines
        .next()
        .ok_or_else(|| invalid(2, "missing `vars <n>` line"))?;
    let vars: usize = match vars_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["vars", n] => n
            .parse()
            .map_err(|_| invalid(line_no, format!("bad variable count {n:?}")))?,
        _ => return Err(invalid(line_no, "expected `vars <n>`")),
    };
    let mut clauses = Vec::new();
    for (line_no, line) in lines {
        match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["clause", a, b, c] => {
                let parse = |s: &str| -> Result<usize, ParseError> {
                    s.parse()
                        .map_err(|_| invalid(line_no, format!("bad variable {s:?}")))
                };
                clauses.push([parse(a)?, parse(b)?, parse(c)?]);
            }
            _ => return Err(invalid(line_no, "expected `clause <a> <b> <c>`")),
        }
    }
    Formula1in3::new(vars, clauses).map_err(|e| invalid(0, e.to_string()))
}

pub fn write_chain(m: usize) -> String {
    format!("{CHAIN_HEADER}\nm {m}\n")
}

pub fn parse_chain(text: &str) -> Result<usize, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, CHAIN_HEADER)?;
    let (line_no, m_line) = lines
        .next()
        .ok_or_else(|| invalid(2, "missing `m <M>` line"))?;
    match m_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["m", m] => m
            .parse()
            .map_err(|_| invalid(line_no, format!("bad chain length {m:?}"))),
        _ => Err(invalid(line_no, "expected `m <M>`")),
    }
}
