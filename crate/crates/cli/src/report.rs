//! Reports printed by the commands, as JSON or as plain text. Both forms
//! are rendered from the same structs so they always carry the same numbers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use graded_basic_core::cayley_bacharach::CbCheck;
use graded_basic_core::shrinking::{PointCertificate, ShrinkStep, UnipotentTransform};
use graded_basic_core::{BettiTable, CbReport, Field};
use serde::{Deserialize, Serialize};

use crate::formats::SectionFile;

pub trait Report: Serialize {
    fn text(&self) -> String;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn render<R: Report>(report: &R, format: Format) -> String {
    match format {
        Format::Text => report.text(),
        Format::Json => crate::formats::to_json_string(report),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    /// `betti[i][j] = β_{i,j}`, nonzero entries only.
    pub betti: BTreeMap<String, BTreeMap<String, usize>>,
    pub a_degrees: Vec<i64>,
    pub b_degrees: Vec<i64>,
    pub num_points: usize,
    pub stabilization_degree: i64,
}

impl BettiReport {
    pub fn new(table: &BettiTable, num_points: usize) -> Self {
        let mut betti: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
        for (&(i, j), &b) in &table.entries {
            betti.entry(i.to_string()).or_default().insert(j.to_string(), b);
        }
        Self {
            betti,
            a_degrees: table.a_degrees.clone(),
            b_degrees: table.b_degrees.clone(),
            num_points,
            stabilization_degree: table.sigma,
        }
    }

    fn entries(&self) -> BTreeMap<(usize, i64), usize> {
        let mut out = BTreeMap::new();
        for (i, row) in &self.betti {
            for (j, &b) in row {
                if let (Ok(i), Ok(j)) = (i.parse(), j.parse()) {
                    out.insert((i, j), b);
                }
            }
        }
        out
    }
}

impl Report for BettiReport {
    /// Macaulay layout: column `i`, row `j - i`.
    fn text(&self) -> String {
        let entries = self.entries();
        let max_i = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = entries.keys().map(|&(i, j)| j - i as i64).collect();
            r.sort();
            r.dedup();
            r
        };
        let (lo, hi) = (rows.first().copied().unwrap_or(0), rows.last().copied().unwrap_or(0));
        let cell = |v: usize| if v == 0 { ".".to_string() } else { v.to_string() };
        let width = entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(1);
        let mut out = String::new();
        let _ = write!(out, "{:>7}", "");
        for i in 0..=max_i {
            let _ = write!(out, " {:>width$}", i);
        }
        out.push('\n');
        let _ = write!(out, "{:>7}", "total:");
        for i in 0..=max_i {
            let t: usize = entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum();
            let _ = write!(out, " {:>width$}", t);
        }
        out.push('\n');
        for row in lo..=hi {
            let _ = write!(out, "{:>7}", format!("{row}:"));
            for i in 0..=max_i {
                let v = entries.get(&(i, row + i as i64)).copied().unwrap_or(0);
                let _ = write!(out, " {:>width$}", cell(v));
            }
            out.push('\n');
        }
        let _ = writeln!(out, "generator degrees: {:?}", self.b_degrees);
        let _ = writeln!(out, "syzygy degrees: {:?}", self.a_degrees);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub degree: i64,
    pub satisfied: bool,
    /// A point whose removal loses a condition on forms of this degree.
    pub witness: Option<usize>,
}

impl From<&CbCheck> for DegreeCheck {
    fn from(c: &CbCheck) -> Self {
        Self { degree: c.degree, satisfied: c.satisfied, witness: c.witness }
    }
}

fn check_lines(out: &mut String, checks: &[DegreeCheck]) {
    let _ = writeln!(out, "degree  CB   witness");
    for c in checks {
        let w = c.witness.map_or("-".to_string(), |w| w.to_string());
        let _ = writeln!(out, "{:>6}  {:<4} {}", c.degree, if c.satisfied { "yes" } else { "no" }, w);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CbIndexReport {
    pub cb_index: i64,
    pub per_degree: Vec<DegreeCheck>,
}

impl Report for CbIndexReport {
    fn text(&self) -> String {
        let mut out = format!("cb_index = {}\n", self.cb_index);
        check_lines(&mut out, &self.per_degree);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CbCheckReport {
    pub degree: i64,
    pub satisfied: bool,
    pub witness: Option<usize>,
}

impl Report for CbCheckReport {
    fn text(&self) -> String {
        match self.witness {
            Some(w) if !self.satisfied => format!("false (degree {}, witness point {w})\n", self.degree),
            _ => format!("{} (degree {})\n", self.satisfied, self.degree),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub cb_index: i64,
    pub a_min: i64,
    pub a_max: i64,
    pub lower: i64,
    pub upper: i64,
    pub bound_holds: bool,
    pub a_degrees: Vec<i64>,
    pub b_degrees: Vec<i64>,
    pub per_degree: Vec<DegreeCheck>,
}

impl From<&CbReport> for BoundsReport {
    fn from(r: &CbReport) -> Self {
        Self {
            cb_index: r.cb_index,
            a_min: r.a_min,
            a_max: r.a_max,
            lower: r.a_min - 3,
            upper: r.a_max - 3,
            bound_holds: r.bound_holds,
            a_degrees: r.betti.a_degrees.clone(),
            b_degrees: r.betti.b_degrees.clone(),
            per_degree: r.per_degree.iter().map(DegreeCheck::from).collect(),
        }
    }
}

impl Report for BoundsReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "cb_index = {}", self.cb_index);
        let _ = writeln!(out, "syzygy degrees = {:?}", self.a_degrees);
        let _ = writeln!(out, "generator degrees = {:?}", self.b_degrees);
        let _ = writeln!(
            out,
            "bound: {} <= {} <= {}  {}",
            self.lower,
            self.cb_index,
            self.upper,
            if self.bound_holds { "holds" } else { "VIOLATED" }
        );
        check_lines(&mut out, &self.per_degree);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberEntry {
    pub point: usize,
    pub coords: Vec<String>,
    pub mu: usize,
    /// Dimension of the span of the given sections in the fiber.
    pub width: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuReport {
    pub points: Vec<FiberEntry>,
}

impl Report for MuReport {
    fn text(&self) -> String {
        let mut out = String::from("point  mu  width  coords\n");
        for e in &self.points {
            let w = e.width.map_or("-".to_string(), |w| w.to_string());
            let _ = writeln!(out, "{:>5}  {:>2}  {:>5}  ({})", e.point, e.mu, w, e.coords.join(":"));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FittingEntry {
    pub point: usize,
    pub mu: usize,
    /// Whether every `(r - i)`-minor of the presentation vanishes at the point.
    pub in_locus: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FittingReport {
    pub index: usize,
    pub points: Vec<FittingEntry>,
}

impl Report for FittingReport {
    fn text(&self) -> String {
        let mut out = format!("Fitting ideal {}\npoint  mu  in_locus\n", self.index);
        for e in &self.points {
            let _ = writeln!(out, "{:>5}  {:>2}  {}", e.point, e.mu, e.in_locus);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub point: usize,
    pub mu: usize,
    pub required: usize,
    pub width: usize,
    pub holds: bool,
}

impl From<&PointCertificate> for CertificateEntry {
    fn from(c: &PointCertificate) -> Self {
        Self { point: c.point, mu: c.mu, required: c.required, width: c.width, holds: c.holds() }
    }
}

fn certificate_lines(out: &mut String, cert: &[CertificateEntry]) {
    let _ = writeln!(out, "point  mu  required  width  ok");
    for c in cert {
        let _ = writeln!(
            out,
            "{:>5}  {:>2}  {:>8}  {:>5}  {}",
            c.point,
            c.mu,
            c.required,
            c.width,
            if c.holds { "yes" } else { "NO" }
        );
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundEntry {
    pub point: usize,
    /// 0-based index of the section that absorbed a multiple of the first.
    pub section: usize,
    pub lambda: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepEntry {
    pub dehomogenizer: String,
    /// `λ_2 .. λ_u`.
    pub coefficients: Vec<String>,
    /// `λ_j L^(a_j - a_1)` for `j = 2 .. u`.
    pub multipliers: Vec<String>,
    pub rounds: Vec<RoundEntry>,
}

impl StepEntry {
    pub fn new<F: Field>(field: &F, step: &ShrinkStep<F::Elem>) -> Self {
        Self {
            dehomogenizer: step.dehomogenizer.format(field),
            coefficients: step.coefficients.iter().map(|c| field.format(c)).collect(),
            multipliers: step.multipliers.iter().map(|r| r.format(field)).collect(),
            rounds: step
                .rounds
                .iter()
                .map(|r| RoundEntry { point: r.point, section: r.section, lambda: field.format(&r.lambda) })
                .collect(),
        }
    }
}

fn step_lines(out: &mut String, step: &StepEntry) {
    let _ = writeln!(out, "L = {}", step.dehomogenizer);
    if step.rounds.is_empty() {
        let _ = writeln!(out, "no modification needed");
    }
    for r in &step.rounds {
        let _ = writeln!(out, "point {}: s[{}] += {} * L^(a[{}] - a[0]) * s[0]", r.point, r.section, r.lambda, r.section);
    }
    for (k, m) in step.multipliers.iter().enumerate() {
        let _ = writeln!(out, "r[{}] = {}", k + 1, m);
    }
}

fn section_lines(out: &mut String, sections: &[SectionFile]) {
    for s in sections {
        let _ = writeln!(out, "degree {}: ({})", s.degree, s.coords.join(", "));
    }
}

pub fn transform_strings<F: Field>(field: &F, t: &UnipotentTransform<F::Elem>) -> Vec<Vec<String>> {
    (0..t.size()).map(|i| (0..t.size()).map(|j| t.entry(i, j).format(field)).collect()).collect()
}

fn transform_lines(out: &mut String, t: &[Vec<String>]) {
    let width = t.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in t {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "[ {} ]", cells.join("  "));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShrinkReport {
    pub step: StepEntry,
    pub sections: Vec<SectionFile>,
    pub certificate: Vec<CertificateEntry>,
    pub ok: bool,
}

impl Report for ShrinkReport {
    fn text(&self) -> String {
        let mut out = String::new();
        step_lines(&mut out, &self.step);
        let _ = writeln!(out, "new sections:");
        section_lines(&mut out, &self.sections);
        certificate_lines(&mut out, &self.certificate);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicReport {
    pub transform: Vec<Vec<String>>,
    pub steps: Vec<StepEntry>,
    pub sections: Vec<SectionFile>,
    pub certificate: Vec<CertificateEntry>,
    pub ok: bool,
}

impl Report for BasicReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for (k, s) in self.steps.iter().enumerate() {
            let _ = writeln!(out, "step {}:", k + 1);
            step_lines(&mut out, s);
        }
        let _ = writeln!(out, "transform:");
        transform_lines(&mut out, &self.transform);
        let _ = writeln!(out, "sections:");
        section_lines(&mut out, &self.sections);
        certificate_lines(&mut out, &self.certificate);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreReport {
    pub section: SectionFile,
    pub transform: Vec<Vec<String>>,
    pub certificate: Vec<CertificateEntry>,
    pub ok: bool,
}

impl Report for SerreReport {
    fn text(&self) -> String {
        let mut out = String::from("section:\n");
        section_lines(&mut out, std::slice::from_ref(&self.section));
        let _ = writeln!(out, "transform:");
        transform_lines(&mut out, &self.transform);
        certificate_lines(&mut out, &self.certificate);
        out
    }
}

impl Report for crate::formats::PointsFile {
    fn text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let c: Vec<String> = p
                .iter()
                .map(|s| match s {
                    crate::formats::Scalar::Text(t) => t.clone(),
                    crate::formats::Scalar::Int(n) => n.to_string(),
                })
                .collect();
            let _ = writeln!(out, "({})", c.join(":"));
        }
        out
    }
}
