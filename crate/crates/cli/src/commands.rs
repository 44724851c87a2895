//! Command bodies, generic over the coefficient field. Each returns a
//! report; the binary decides how to print it and which exit code to use.

use graded_basic_core::cayley_bacharach::{cb_scan, check_cb};
use graded_basic_core::shrinking::widths;
use graded_basic_core::{
    basic_elements, betti_table, fiber, find_nonvanishing_linear_form, fitting_vanishes_at, section_images_in_fiber,
    serre_section, shrink_once, verify_bounds, Field, ModulePresentation, PointSet, Section,
};
use rayon::prelude::*;

use crate::error::CliError;
use crate::formats::section_to_file;
use crate::report::*;

pub fn betti<F: Field + Sync>(field: &F, z: &PointSet<F::Elem>) -> Result<BettiReport, CliError>
where
    F::Elem: Send + Sync,
{
    Ok(BettiReport::new(&betti_table(field, z)?, z.len()))
}

pub fn cb_index<F: Field + Sync>(field: &F, z: &PointSet<F::Elem>) -> Result<CbIndexReport, CliError>
where
    F::Elem: Send + Sync,
{
    let scan = cb_scan(field, z)?;
    Ok(CbIndexReport { cb_index: scan.len() as i64 - 2, per_degree: scan.iter().map(DegreeCheck::from).collect() })
}

pub fn cb_check<F: Field + Sync>(field: &F, z: &PointSet<F::Elem>, degree: i64) -> Result<CbCheckReport, CliError>
where
    F::Elem: Send + Sync,
{
    if z.len() < 2 {
        return Err(graded_basic_core::Error::TooFewPoints { required: 2, found: z.len() }.into());
    }
    let c = check_cb(field, z, degree)?;
    Ok(CbCheckReport { degree: c.degree, satisfied: c.satisfied, witness: c.witness })
}

pub fn bounds<F: Field + Sync>(field: &F, z: &PointSet<F::Elem>) -> Result<BoundsReport, CliError>
where
    F::Elem: Send + Sync,
{
    Ok(BoundsReport::from(&verify_bounds(field, z)?))
}

pub fn mu<F: Field + Sync>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    z: &PointSet<F::Elem>,
    sections: Option<&[Section<F::Elem>]>,
) -> Result<MuReport, CliError>
where
    F::Elem: Send + Sync,
{
    let points = z
        .points()
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let l = find_nonvanishing_linear_form(field, &[p])?;
            let (mu, width) = match sections {
                Some(s) => {
                    let imgs = section_images_in_fiber(field, m, s, p.coords(), &l)?;
                    (imgs.mu, Some(imgs.width))
                }
                None => (fiber(field, m, p.coords(), &l)?.mu, None),
            };
            let coords = p.coords().iter().map(|c| field.format(c)).collect();
            Ok(FiberEntry { point: i, coords, mu, width })
        })
        .collect::<Result<Vec<_>, graded_basic_core::Error>>()?;
    Ok(MuReport { points })
}

pub fn fitting<F: Field + Sync>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    z: &PointSet<F::Elem>,
    index: usize,
) -> Result<FittingReport, CliError>
where
    F::Elem: Send + Sync,
{
    let points = z
        .points()
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let l = find_nonvanishing_linear_form(field, &[p])?;
            let mu = fiber(field, m, p.coords(), &l)?.mu;
            let in_locus = fitting_vanishes_at(field, m, index, p.coords(), &l)?;
            Ok(FittingEntry { point: i, mu, in_locus })
        })
        .collect::<Result<Vec<_>, graded_basic_core::Error>>()?;
    Ok(FittingReport { index, points })
}

fn default_weights<F: Field + Sync>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    z: &PointSet<F::Elem>,
    weights: Option<&[usize]>,
) -> Result<Vec<usize>, CliError>
where
    F::Elem: Send + Sync,
{
    match weights {
        Some(w) if w.len() != z.len() => {
            Err(CliError::input("--weights", format!("{} weights for {} points", w.len(), z.len())))
        }
        Some(w) => Ok(w.to_vec()),
        None => par_widths(field, m, sections, z),
    }
}

/// Width of `sections` at each point, one dehomogenizer per point.
pub fn par_widths<F: Field + Sync>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    z: &PointSet<F::Elem>,
) -> Result<Vec<usize>, CliError>
where
    F::Elem: Send + Sync,
{
    let out = z
        .points()
        .par_iter()
        .map(|p| widths(field, m, sections, std::slice::from_ref(p)).map(|w| w[0]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(out)
}

/// Recomputes widths independently of the certificate the algorithm produced.
fn recheck<F: Field + Sync>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    z: &PointSet<F::Elem>,
    cert: &[CertificateEntry],
) -> Result<bool, CliError>
where
    F::Elem: Send + Sync,
{
    let w = par_widths(field, m, sections, z)?;
    Ok(cert.iter().all(|c| c.holds && w[c.point] == c.width))
}

pub fn shrink<F: Field + Sync>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    z: &PointSet<F::Elem>,
    weights: Option<&[usize]>,
) -> Result<ShrinkReport, CliError>
where
    F::Elem: Send + Sync,
{
    let w = default_weights(field, m, sections, z, weights)?;
    let out = shrink_once(field, m, sections, z.points(), &w)?;
    let certificate: Vec<CertificateEntry> = out.certificate.iter().map(CertificateEntry::from).collect();
    let ok = recheck(field, m, &out.sections, z, &certificate)?;
    Ok(ShrinkReport {
        step: StepEntry::new(field, &out.step),
        sections: out.sections.iter().map(|s| section_to_file(field, s)).collect(),
        certificate,
        ok,
    })
}

pub fn basic<F: Field + Sync>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    z: &PointSet<F::Elem>,
    weights: Option<&[usize]>,
    t: usize,
) -> Result<BasicReport, CliError>
where
    F::Elem: Send + Sync,
{
    let w = default_weights(field, m, sections, z, weights)?;
    let out = basic_elements(field, m, sections, z.points(), &w, t)?;
    let certificate: Vec<CertificateEntry> = out.certificate.iter().map(CertificateEntry::from).collect();
    let ok = recheck(field, m, &out.sections, z, &certificate)?;
    Ok(BasicReport {
        transform: transform_strings(field, &out.transform),
        steps: out.steps.iter().map(|s| StepEntry::new(field, s)).collect(),
        sections: out.sections.iter().map(|s| section_to_file(field, s)).collect(),
        certificate,
        ok,
    })
}

pub fn serre<F: Field + Sync>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    z: &PointSet<F::Elem>,
) -> Result<SerreReport, CliError>
where
    F::Elem: Send + Sync,
{
    let out = serre_section(field, m, sections, z.points())?;
    let certificate: Vec<CertificateEntry> = out.certificate.iter().map(CertificateEntry::from).collect();
    let ok = recheck(field, m, std::slice::from_ref(&out.section), z, &certificate)?;
    Ok(SerreReport {
        section: section_to_file(field, &out.section),
        transform: transform_strings(field, &out.transform),
        certificate,
        ok,
    })
}
