//! JSON files exchanged with the command line tools. Scalars travel as
//! strings such as `"3/7"` so that nothing is rounded; plain JSON integers
//! are accepted on input as well.

use std::fs;
use std::path::Path;

use graded_basic_core::{Field, HomogPoly, ModulePresentation, PointSet, ProjPoint, Section};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Text(String),
    Int(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsFile {
    pub points: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub num_vars: usize,
    pub row_twists: Vec<i64>,
    #[serde(default)]
    pub col_twists: Vec<i64>,
    #[serde(default)]
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionFile {
    pub degree: i64,
    pub coords: Vec<String>,
}

/// A sections file holds either one section or a list of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SectionsFile {
    One(SectionFile),
    Many(Vec<SectionFile>),
}

impl SectionsFile {
    pub fn into_vec(self) -> Vec<SectionFile> {
        match self {
            SectionsFile::One(s) => vec![s],
            SectionsFile::Many(v) => v,
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let ctx = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| CliError::input(&ctx, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(&ctx, e))
}

pub fn parse_scalar<F: Field>(field: &F, s: &Scalar, ctx: &str) -> Result<F::Elem, CliError> {
    match s {
        Scalar::Int(n) => Ok(field.from_i64(*n)),
        Scalar::Text(t) => field.parse(t.trim()).map_err(|e| CliError::input(ctx, e)),
    }
}

pub fn points_from_file<F: Field>(field: &F, file: &PointsFile, ctx: &str) -> Result<PointSet<F::Elem>, CliError> {
    let mut pts = Vec::with_capacity(file.points.len());
    for (i, coords) in file.points.iter().enumerate() {
        let here = format!("{ctx}: points[{i}]");
        let c = coords
            .iter()
            .enumerate()
            .map(|(k, s)| parse_scalar(field, s, &format!("{here}[{k}]")))
            .collect::<Result<Vec<_>, _>>()?;
        pts.push(ProjPoint::new(field, c).map_err(|e| CliError::input(&here, e))?);
    }
    PointSet::new(pts).map_err(|e| CliError::input(ctx, e))
}

pub fn load_points<F: Field>(field: &F, path: &Path) -> Result<PointSet<F::Elem>, CliError> {
    let file: PointsFile = read_json(path)?;
    points_from_file(field, &file, &path.display().to_string())
}

fn parse_poly<F: Field>(
    field: &F,
    n: usize,
    text: &str,
    degree: i64,
    ctx: &str,
) -> Result<HomogPoly<F::Elem>, CliError> {
    let p = HomogPoly::parse(field, n, text).map_err(|e| CliError::input(ctx, e))?;
    if p.is_zero() {
        return Ok(HomogPoly::zero(n, degree.max(0) as u32));
    }
    if i64::from(p.degree()) != degree {
        return Err(CliError::input(ctx, format!("expected degree {degree}, found {}", p.degree())));
    }
    Ok(p)
}

pub fn module_from_file<F: Field>(
    field: &F,
    file: &ModuleFile,
    ctx: &str,
) -> Result<ModulePresentation<F::Elem>, CliError> {
    let (a, b) = (&file.row_twists, &file.col_twists);
    if b.is_empty() && file.entries.is_empty() {
        return Ok(ModulePresentation::free(file.num_vars, a.clone()));
    }
    if file.entries.len() != a.len() {
        return Err(CliError::input(ctx, format!("entries has {} rows, row_twists has {}", file.entries.len(), a.len())));
    }
    let mut entries = Vec::with_capacity(a.len());
    for (i, row) in file.entries.iter().enumerate() {
        if row.len() != b.len() {
            return Err(CliError::input(
                format!("{ctx}: entries[{i}]"),
                format!("has {} entries, col_twists has {}", row.len(), b.len()),
            ));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, t)| parse_poly(field, file.num_vars, t, b[j] - a[i], &format!("{ctx}: entries[{i}][{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        entries.push(parsed);
    }
    ModulePresentation::new(file.num_vars, a.clone(), b.clone(), entries).map_err(|e| CliError::input(ctx, e))
}

pub fn load_module<F: Field>(field: &F, path: &Path) -> Result<ModulePresentation<F::Elem>, CliError> {
    let file: ModuleFile = read_json(path)?;
    module_from_file(field, &file, &path.display().to_string())
}

pub fn sections_from_file<F: Field>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    files: &[SectionFile],
    ctx: &str,
) -> Result<Vec<Section<F::Elem>>, CliError> {
    let mut out = Vec::with_capacity(files.len());
    for (k, s) in files.iter().enumerate() {
        let here = format!("{ctx}: sections[{k}]");
        if s.coords.len() != m.num_generators() {
            return Err(CliError::input(
                &here,
                format!("has {} coordinates, the module has {} generators", s.coords.len(), m.num_generators()),
            ));
        }
        let coords = s
            .coords
            .iter()
            .zip(m.row_twists())
            .enumerate()
            .map(|(i, (t, &a))| parse_poly(field, m.num_vars(), t, s.degree - a, &format!("{here}.coords[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let sec = Section::new(s.degree, coords);
        sec.validate(m).map_err(|e| CliError::input(&here, e))?;
        out.push(sec);
    }
    if out.windows(2).any(|w| w[0].degree() > w[1].degree()) {
        return Err(CliError::input(ctx, "sections must be listed by ascending degree"));
    }
    Ok(out)
}

pub fn load_sections<F: Field>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    path: &Path,
) -> Result<Vec<Section<F::Elem>>, CliError> {
    let file: SectionsFile = read_json(path)?;
    sections_from_file(field, m, &file.into_vec(), &path.display().to_string())
}

pub fn section_to_file<F: Field>(field: &F, s: &Section<F::Elem>) -> SectionFile {
    SectionFile { degree: s.degree(), coords: s.coords().iter().map(|c| c.format(field)).collect() }
}

pub fn module_to_file<F: Field>(field: &F, m: &ModulePresentation<F::Elem>) -> ModuleFile {
    ModuleFile {
        num_vars: m.num_vars(),
        row_twists: m.row_twists().to_vec(),
        col_twists: m.col_twists().to_vec(),
        entries: (0..m.num_generators())
            .map(|i| (0..m.num_relations()).map(|j| m.entry(i, j).format(field)).collect())
            .collect(),
    }
}

pub fn points_to_file<F: Field, P: AsRef<[F::Elem]>>(field: &F, points: &[P]) -> PointsFile {
    PointsFile {
        points: points
            .iter()
            .map(|p| p.as_ref().iter().map(|c| Scalar::Text(field.format(c))).collect())
            .collect(),
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}
