//! Matrix files, region exports and SVG plots.
//!
//! Matrices are stored as JSON `{"n": 3, "re": [[..]], "im": [[..]]}` or as
//! CSV with one `a+bi` cell per entry. Every float is written with 17
//! significant digits, so both formats round-trip bit-exactly.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::engine::{Certificate, RankRangeResult};
use crate::error::{Error, Result};
use crate::geometry::{ConvexRegion, HalfPlane, RegionKind};
use crate::linalg::{ComplexMatrix, C64};

/// Supported matrix encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Json,
    Csv,
}

impl MatrixFormat {
    /// Format implied by a file extension (`.json` or `.csv`).
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()).map(|e| e.to_ascii_lowercase()).as_deref() {
            Some("json") => Ok(MatrixFormat::Json),
            Some("csv") => Ok(MatrixFormat::Csv),
            _ => Err(Error::Parse(format!("cannot infer matrix format of {}", path.display()))),
        }
    }
}

/// `{:.16e}`: 17 significant digits.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// JSON formatter writing every float with 17 significant digits.
struct ExactFloats;

impl serde_json::ser::Formatter for ExactFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt_f64(value).as_bytes())
    }
}

fn to_json_exact<T: Serialize>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, ExactFloats);
    value.serialize(&mut ser).map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(buf).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

/// A square matrix in one of the supported encodings.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFile {
    pub format: MatrixFormat,
    pub matrix: ComplexMatrix,
}

impl MatrixFile {
    pub fn read(path: &Path) -> Result<Self> {
        let format = MatrixFormat::from_path(path)?;
        let text = fs::read_to_string(path)?;
        let matrix = match format {
            MatrixFormat::Json => matrix_from_json(&text)?,
            MatrixFormat::Csv => matrix_from_csv(&text)?,
        };
        Ok(MatrixFile { format, matrix })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let text = match self.format {
            MatrixFormat::Json => matrix_to_json(&self.matrix)?,
            MatrixFormat::Csv => matrix_to_csv(&self.matrix),
        };
        fs::write(path, text)?;
        Ok(())
    }
}

/// Reads a matrix, choosing the format from the extension.
pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    Ok(MatrixFile::read(path)?.matrix)
}

/// Writes a matrix, choosing the format from the extension.
pub fn write_matrix(path: &Path, matrix: &ComplexMatrix) -> Result<()> {
    MatrixFile { format: MatrixFormat::from_path(path)?, matrix: matrix.clone() }.write(path)
}

pub fn matrix_to_json(m: &ComplexMatrix) -> Result<String> {
    let rows = |f: fn(&C64) -> f64| (0..m.rows()).map(|i| m.row(i).iter().map(f).collect()).collect();
    let doc = MatrixJson { n: m.rows(), re: rows(|z| z.re), im: rows(|z| z.im) };
    to_json_exact(&doc)
}

pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let doc: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let n = doc.n;
    if n == 0 {
        return Err(Error::Parse("matrix must have n ≥ 1".into()));
    }
    if doc.re.len() != n || doc.im.len() != n || doc.re.iter().chain(&doc.im).any(|r| r.len() != n) {
        return Err(Error::Parse(format!("re and im must both be {n}x{n}")));
    }
    let data = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| C64::new(doc.re[i][j], doc.im[i][j])).collect();
    ComplexMatrix::new(n, n, data)
}

#[derive(Debug, Serialize, Deserialize)]
struct RectJson {
    rows: usize,
    cols: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

/// `{"rows": r, "cols": c, "re": [[..]], "im": [[..]]}` for any shape, used
/// for isometries.
pub fn rect_matrix_to_json(m: &ComplexMatrix) -> Result<String> {
    let rows = |f: fn(&C64) -> f64| (0..m.rows()).map(|i| m.row(i).iter().map(f).collect()).collect();
    to_json_exact(&RectJson { rows: m.rows(), cols: m.cols(), re: rows(|z| z.re), im: rows(|z| z.im) })
}

pub fn rect_matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let doc: RectJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let (r, c) = (doc.rows, doc.cols);
    if doc.re.len() != r || doc.im.len() != r || doc.re.iter().chain(&doc.im).any(|row| row.len() != c) {
        return Err(Error::Parse(format!("re and im must both be {r}x{c}")));
    }
    let data = (0..r).flat_map(|i| (0..c).map(move |j| (i, j))).map(|(i, j)| C64::new(doc.re[i][j], doc.im[i][j])).collect();
    ComplexMatrix::new(r, c, data)
}

/// `a+bi` with 17 significant digits in each part.
pub fn format_complex(z: C64) -> String {
    let im = fmt_f64(z.im);
    if im.starts_with('-') {
        format!("{}{}i", fmt_f64(z.re), im)
    } else {
        format!("{}+{}i", fmt_f64(z.re), im)
    }
}

/// Parses `a+bi`, `a-bi`, `a`, `bi`.
pub fn parse_complex(cell: &str) -> Result<C64> {
    let s = cell.trim();
    let bad = || Error::Parse(format!("invalid complex number {cell:?}"));
    let parse = |t: &str| t.parse::<f64>().map_err(|_| bad());
    let Some(body) = s.strip_suffix('i') else {
        return Ok(C64::new(parse(s)?, 0.0));
    };
    let bytes = body.as_bytes();
    // the split is the last sign not opening the string or an exponent
    let split = (1..bytes.len()).rev().find(|&p| (bytes[p] == b'+' || bytes[p] == b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    match split {
        Some(p) => {
            let im = &body[p..];
            let im = if im == "+" || im == "-" { format!("{im}1") } else { im.to_string() };
            Ok(C64::new(parse(&body[..p])?, parse(&im)?))
        }
        None => {
            let im = if body.is_empty() || body == "+" || body == "-" { format!("{body}1") } else { body.to_string() };
            Ok(C64::new(0.0, parse(&im)?))
        }
    }
}

pub fn matrix_to_csv(m: &ComplexMatrix) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&z| format_complex(z)).collect();
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("ascii output")
}

pub fn matrix_from_csv(text: &str) -> Result<ComplexMatrix> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut rows: Vec<Vec<C64>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        rows.push(record.iter().map(parse_complex).collect::<Result<_>>()?);
    }
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse("CSV matrix must be square and nonempty".into()));
    }
    ComplexMatrix::new(n, n, rows.into_iter().flatten().collect())
}

/// Certificate part of a [`RegionExport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum CertificatePayload {
    Empty { angles: Vec<f64> },
    Witness { mu: (f64, f64), rows: usize, cols: usize, re: Vec<f64>, im: Vec<f64> },
    Approximate,
}

/// A computed region with its generating half-planes and certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionExport {
    pub kind: RegionKind,
    pub vertices: Vec<(f64, f64)>,
    /// `(angle, offset)` of each half-plane.
    pub planes: Vec<(f64, f64)>,
    pub certificate: CertificatePayload,
}

impl RegionExport {
    pub fn new(region: &ConvexRegion, planes: &[HalfPlane], certificate: CertificatePayload) -> Self {
        RegionExport {
            kind: region.kind(),
            vertices: region.vertices().iter().map(|z| (z.re, z.im)).collect(),
            planes: planes.iter().map(|p| (p.angle(), p.offset())).collect(),
            certificate,
        }
    }

    pub fn from_result(result: &RankRangeResult) -> Self {
        let certificate = match &result.certificate {
            Certificate::EmptyCertificate { angles } => CertificatePayload::Empty { angles: angles.clone() },
            Certificate::NonEmptyWitness { mu, isometry } => {
                let x = isometry.matrix();
                CertificatePayload::Witness {
                    mu: (mu.re, mu.im),
                    rows: x.rows(),
                    cols: x.cols(),
                    re: x.data().iter().map(|z| z.re).collect(),
                    im: x.data().iter().map(|z| z.im).collect(),
                }
            }
            Certificate::Approximate => CertificatePayload::Approximate,
        };
        RegionExport::new(&result.region, &result.planes, certificate)
    }

    pub fn region(&self) -> Result<ConvexRegion> {
        let v: Vec<C64> = self.vertices.iter().map(|&(x, y)| C64::new(x, y)).collect();
        ConvexRegion::from_parts(self.kind, &v)
            .ok_or_else(|| Error::Parse(format!("{} region cannot have {} vertices", self.kind.name(), v.len())))
    }

    pub fn to_json(&self) -> Result<String> {
        to_json_exact(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// One record per line: `kind`, `vertex`, `plane`, `certificate`,
    /// then `angle`, `mu` and `isometry` records for the certificate.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        let mut put = |rec: Vec<String>| w.write_record(&rec).expect("writing to memory");
        put(vec!["kind".into(), self.kind.name().into()]);
        for &(x, y) in &self.vertices {
            put(vec!["vertex".into(), fmt_f64(x), fmt_f64(y)]);
        }
        for &(t, h) in &self.planes {
            put(vec!["plane".into(), fmt_f64(t), fmt_f64(h)]);
        }
        match &self.certificate {
            CertificatePayload::Empty { angles } => {
                put(vec!["certificate".into(), "Empty".into()]);
                for &t in angles {
                    put(vec!["angle".into(), fmt_f64(t)]);
                }
            }
            CertificatePayload::Witness { mu, rows, cols, re, im } => {
                put(vec!["certificate".into(), "Witness".into(), rows.to_string(), cols.to_string()]);
                put(vec!["mu".into(), fmt_f64(mu.0), fmt_f64(mu.1)]);
                for i in 0..*rows {
                    for j in 0..*cols {
                        let idx = i * cols + j;
                        put(vec!["isometry".into(), i.to_string(), j.to_string(), fmt_f64(re[idx]), fmt_f64(im[idx])]);
                    }
                }
            }
            CertificatePayload::Approximate => put(vec!["certificate".into(), "Approximate".into()]),
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("ascii output")
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let num = |s: Option<&str>| -> Result<f64> {
            s.ok_or_else(|| Error::Parse("missing field".into()))?.parse().map_err(|_| Error::Parse("bad number".into()))
        };
        let int = |s: Option<&str>| -> Result<usize> {
            s.ok_or_else(|| Error::Parse("missing field".into()))?.parse().map_err(|_| Error::Parse("bad integer".into()))
        };
        let mut kind = None;
        let mut vertices = Vec::new();
        let mut planes = Vec::new();
        let mut cert_kind: Option<String> = None;
        let mut shape = (0, 0);
        let mut angles = Vec::new();
        let mut mu = (0.0, 0.0);
        let mut entries: Vec<(usize, usize, f64, f64)> = Vec::new();
        for record in reader.records() {
            let r = record.map_err(|e| Error::Parse(e.to_string()))?;
            match r.get(0) {
                Some("kind") => {
                    let name = r.get(1).unwrap_or("");
                    kind = Some(RegionKind::parse(name).ok_or_else(|| Error::Parse(format!("unknown kind {name:?}")))?);
                }
                Some("vertex") => vertices.push((num(r.get(1))?, num(r.get(2))?)),
                Some("plane") => planes.push((num(r.get(1))?, num(r.get(2))?)),
                Some("certificate") => {
                    cert_kind = r.get(1).map(str::to_string);
                    if cert_kind.as_deref() == Some("Witness") {
                        shape = (int(r.get(2))?, int(r.get(3))?);
                    }
                }
                Some("angle") => angles.push(num(r.get(1))?),
                Some("mu") => mu = (num(r.get(1))?, num(r.get(2))?),
                Some("isometry") => entries.push((int(r.get(1))?, int(r.get(2))?, num(r.get(3))?, num(r.get(4))?)),
                other => return Err(Error::Parse(format!("unknown record {other:?}"))),
            }
        }
        let certificate = match cert_kind.as_deref() {
            Some("Empty") => CertificatePayload::Empty { angles },
            Some("Approximate") | None => CertificatePayload::Approximate,
            Some("Witness") => {
                let (rows, cols) = shape;
                let mut re = vec![0.0; rows * cols];
                let mut im = vec![0.0; rows * cols];
                for (i, j, a, b) in entries {
                    if i >= rows || j >= cols {
                        return Err(Error::Parse("isometry entry out of range".into()));
                    }
                    re[i * cols + j] = a;
                    im[i * cols + j] = b;
                }
                CertificatePayload::Witness { mu, rows, cols, re, im }
            }
            Some(other) => return Err(Error::Parse(format!("unknown certificate {other:?}"))),
        };
        let kind = kind.ok_or_else(|| Error::Parse("missing kind record".into()))?;
        Ok(RegionExport { kind, vertices, planes, certificate })
    }
}

/// Spectral radius estimate `‖A^{2^j}‖^{1/2^j}` (Gelfand's formula), with
/// rescaling at each squaring.
pub fn spectral_radius_estimate(a: &ComplexMatrix) -> f64 {
    let mut m = a.clone();
    let mut log_scale = 0.0;
    let mut power = 1.0;
    for _ in 0..12 {
        let s = m.frobenius_norm();
        if s == 0.0 {
            return 0.0;
        }
        m = m.scale_real(1.0 / s);
        log_scale += s.ln() / power;
        m = &m * &m;
        power *= 2.0;
    }
    let s = m.frobenius_norm();
    if s == 0.0 {
        return 0.0;
    }
    (log_scale + s.ln() / power).exp()
}

const VIEW: f64 = 800.0;
const MARGIN: f64 = 0.1 * VIEW;

/// SVG drawing of a region in an 800×800 viewport with 10% margin, with
/// both axes and, when `unit_circle` is set, the unit circle for reference.
/// Exactly one element carries `class="region"`.
pub fn region_svg(region: &ConvexRegion, unit_circle: bool) -> String {
    let pts = region.vertices();
    let (mut lo, mut hi) = (C64::new(f64::INFINITY, f64::INFINITY), C64::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
    let mut include = |z: C64| {
        lo = C64::new(lo.re.min(z.re), lo.im.min(z.im));
        hi = C64::new(hi.re.max(z.re), hi.im.max(z.im));
    };
    pts.iter().for_each(|&z| include(z));
    include(C64::new(0.0, 0.0));
    if unit_circle {
        include(C64::new(-1.0, -1.0));
        include(C64::new(1.0, 1.0));
    }
    let span = (hi.re - lo.re).max(hi.im - lo.im).max(1e-12);
    let mid = (lo + hi) / 2.0;
    let scale = (VIEW - 2.0 * MARGIN) / span;
    let map = |z: C64| (VIEW / 2.0 + (z.re - mid.re) * scale, VIEW / 2.0 - (z.im - mid.im) * scale);
    let (ox, oy) = map(C64::new(0.0, 0.0));

    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#);
    let _ = writeln!(s, r#"  <rect width="800" height="800" fill="white"/>"#);
    let _ = writeln!(s, r#"  <line class="axis" x1="0" y1="{oy:.3}" x2="800" y2="{oy:.3}" stroke="gray" stroke-width="1"/>"#);
    let _ = writeln!(s, r#"  <line class="axis" x1="{ox:.3}" y1="0" x2="{ox:.3}" y2="800" stroke="gray" stroke-width="1"/>"#);
    if unit_circle {
        let _ = writeln!(
            s,
            r#"  <circle class="reference" cx="{ox:.3}" cy="{oy:.3}" r="{:.3}" fill="none" stroke="lightgray" stroke-dasharray="4 4"/>"#,
            scale
        );
    }
    match region {
        ConvexRegion::Empty => {
            let _ = writeln!(s, r#"  <text class="region" x="400" y="400" text-anchor="middle">Empty</text>"#);
        }
        ConvexRegion::Point(p) => {
            let (x, y) = map(*p);
            let _ = writeln!(s, r#"  <circle class="region" cx="{x:.3}" cy="{y:.3}" r="4" fill="steelblue"/>"#);
        }
        ConvexRegion::Segment(a, b) => {
            let (x1, y1) = map(*a);
            let (x2, y2) = map(*b);
            let _ = writeln!(
                s,
                r#"  <line class="region" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="steelblue" stroke-width="3"/>"#
            );
        }
        ConvexRegion::Polygon(v) => {
            let coords: Vec<String> = v.iter().map(|&z| map(z)).map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
            let _ = writeln!(
                s,
                r#"  <polygon class="region" points="{}" fill="steelblue" fill-opacity="0.4" stroke="steelblue"/>"#,
                coords.join(" ")
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn json_roundtrip_is_bit_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let mut m = ComplexMatrix::random_gaussian(4, 4, &mut rng);
        m[(0, 0)] = c(1e-300, -5e300);
        m[(1, 2)] = c(0.1 + 0.2, -0.0);
        let back = matrix_from_json(&matrix_to_json(&m).unwrap()).unwrap();
        for (a, b) in m.data().iter().zip(back.data()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn csv_roundtrip_is_bit_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        let m = ComplexMatrix::random_gaussian(3, 3, &mut rng);
        let back = matrix_from_csv(&matrix_to_csv(&m)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rect_json_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        let m = ComplexMatrix::random_gaussian(5, 2, &mut rng);
        assert_eq!(rect_matrix_from_json(&rect_matrix_to_json(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn complex_cells() {
        assert_eq!(parse_complex("1.5-2e-3i").unwrap(), c(1.5, -2e-3));
        assert_eq!(parse_complex("-1e+2+3.0i").unwrap(), c(-100.0, 3.0));
        assert_eq!(parse_complex("4").unwrap(), c(4.0, 0.0));
        assert_eq!(parse_complex("-2i").unwrap(), c(0.0, -2.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("1-i").unwrap(), c(1.0, -1.0));
        assert!(parse_complex("abc").is_err());
        assert_eq!(format_complex(c(1.0, -0.5)), "1.0000000000000000e0-5.0000000000000000e-1i");
    }

    #[test]
    fn malformed_json_rejected() {
        assert!(matrix_from_json(r#"{"n": 2, "re": [[1, 2]], "im": [[0, 0]]}"#).is_err());
        assert!(matrix_from_json("not json").is_err());
        assert!(matrix_from_csv("1,2\n3\n").is_err());
    }

    fn sample_exports() -> Vec<RegionExport> {
        let square = ConvexRegion::Polygon(vec![c(1.0, -1.0), c(1.0, 1.0), c(-1.0, 1.0), c(-1.0, -1.0)]);
        let planes = vec![HalfPlane::new(0.0, 2.0), HalfPlane::new(1.0, 2.5)];
        vec![
            RegionExport::new(&square, &planes, CertificatePayload::Approximate),
            RegionExport::new(&ConvexRegion::Empty, &planes, CertificatePayload::Empty { angles: vec![0.0, 2.0943951023931957] }),
            RegionExport::new(
                &ConvexRegion::Point(c(0.1, 0.2)),
                &planes,
                CertificatePayload::Witness { mu: (0.1, 0.2), rows: 2, cols: 1, re: vec![0.6, 0.8], im: vec![0.0, -0.0] },
            ),
            RegionExport::new(&ConvexRegion::Segment(c(0.0, 0.0), c(1.0 / 3.0, 0.0)), &[], CertificatePayload::Approximate),
        ]
    }

    #[test]
    fn region_export_roundtrips() {
        for e in sample_exports() {
            assert_eq!(RegionExport::from_csv(&e.to_csv()).unwrap(), e);
            assert_eq!(RegionExport::from_json(&e.to_json().unwrap()).unwrap(), e);
            let vertex_rows = e.to_csv().lines().filter(|l| l.starts_with("vertex")).count();
            assert_eq!(vertex_rows, e.region().unwrap().vertices().len());
        }
    }

    #[test]
    fn svg_has_one_region_element() {
        for e in sample_exports() {
            let svg = region_svg(&e.region().unwrap(), true);
            assert_eq!(svg.matches(r#"class="region""#).count(), 1);
            assert_eq!(svg.matches(r#"class="axis""#).count(), 2);
            assert_eq!(svg.matches(r#"class="reference""#).count(), 1);
        }
        let svg = region_svg(&ConvexRegion::Point(c(10.0, 0.0)), false);
        assert_eq!(svg.matches(r#"class="reference""#).count(), 0);
        assert!(svg.contains(r#"<circle class="region""#));
    }

    #[test]
    fn spectral_radius_examples() {
        let d = ComplexMatrix::from_diag(&[c(0.0, 3.0), c(1.0, 0.0)]);
        assert!((spectral_radius_estimate(&d) - 3.0).abs() < 1e-3);
        let jordan = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(spectral_radius_estimate(&jordan), 0.0);
    }
}
