//! The Cayley-Bacharach property and index of a reduced point set.
//!
//! `Z` satisfies `CB_l` when every form of degree `l` vanishing on `Z ∖ {q}`
//! also vanishes at `q`, for every `q ∈ Z`. Since the forms vanishing on
//! `Z ∖ {q}` always contain those vanishing on `Z`, this is the rank equality
//! `rank Eval_l(Z) = rank Eval_l(Z ∖ {q})`.

use alloc::vec::Vec;

use crate::betti::{betti_table, evaluation_matrix, BettiTable};
use crate::error::Error;
use crate::field::Field;
use crate::point::PointSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbCheck {
    pub degree: i64,
    pub satisfied: bool,
    /// First point `q` whose removal changes the rank.
    pub witness: Option<usize>,
}

pub fn check_cb<F: Field>(field: &F, z: &PointSet<F::Elem>, l: i64) -> Result<CbCheck, Error> {
    if l < 0 {
        return Err(Error::InvalidArgument(alloc::format!("degree {l} is negative")));
    }
    let ev = evaluation_matrix(field, z.num_vars(), z.points(), l as u32).matrix;
    let full = field.rank(&ev);
    for q in 0..z.len() {
        let keep: Vec<usize> = (0..z.len()).filter(|&k| k != q).collect();
        if field.rank(&ev.select_rows(&keep)) != full {
            return Ok(CbCheck { degree: l, satisfied: false, witness: Some(q) });
        }
    }
    Ok(CbCheck { degree: l, satisfied: true, witness: None })
}

pub fn satisfies_cb<F: Field>(field: &F, z: &PointSet<F::Elem>, l: i64) -> Result<bool, Error> {
    Ok(check_cb(field, z, l)?.satisfied)
}

/// `CB_0, CB_1, ..` up to and including the first failure.
pub fn cb_scan<F: Field>(field: &F, z: &PointSet<F::Elem>) -> Result<Vec<CbCheck>, Error> {
    if z.len() < 2 {
        return Err(Error::TooFewPoints { required: 2, found: z.len() });
    }
    let mut out = Vec::new();
    for l in 0.. {
        let c = check_cb(field, z, l)?;
        let done = !c.satisfied;
        out.push(c);
        if done {
            break;
        }
    }
    Ok(out)
}

/// The largest `l` such that `Z` satisfies `CB_l`, or `-1` if `CB_0` fails.
pub fn cb_index<F: Field>(field: &F, z: &PointSet<F::Elem>) -> Result<i64, Error> {
    Ok(cb_scan(field, z)?.len() as i64 - 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbReport {
    pub cb_index: i64,
    pub a_min: i64,
    pub a_max: i64,
    pub bound_holds: bool,
    pub per_degree: Vec<CbCheck>,
    pub betti: BettiTable,
}

/// Computes `CB(Z)` and the syzygy degrees `a_1 ≤ .. ≤ a_t` of `I_Z`
/// separately and checks `a_1 - 3 ≤ CB(Z) ≤ a_t - 3`.
pub fn verify_bounds<F: Field>(field: &F, z: &PointSet<F::Elem>) -> Result<CbReport, Error> {
    let per_degree = cb_scan(field, z)?;
    let cb_index = per_degree.len() as i64 - 2;
    let betti = betti_table(field, z)?;
    let (Some(&a_min), Some(&a_max)) = (betti.a_degrees.iter().min(), betti.a_degrees.iter().max())
    else {
        return Err(Error::Internal("no first syzygies in the Betti table".into()));
    };
    let bound_holds = a_min - 3 <= cb_index && cb_index <= a_max - 3;
    Ok(CbReport { cb_index, a_min, a_max, bound_holds, per_degree, betti })
}
