//! Subset enumeration spread over threads with rayon. Results are identical to the
//! sequential versions in the core crate.

use matroid_torsion::tutte::grothendieck_tutte_from_table;
use matroid_torsion::{Error, GTPoly, RealizedMatroid, Result, Subset, SubsetTable};
use rayon::prelude::*;

pub fn subset_table(m: &RealizedMatroid) -> Result<SubsetTable> {
    let n = m.len();
    let cap = m.limits().max_ground;
    if n > cap {
        return Err(Error::GroundTooLarge { size: n, cap });
    }
    let infos = (0..1u32 << n)
        .into_par_iter()
        .map(|bits| m.subset_info(Subset::from_bits(bits)))
        .collect::<Result<Vec<_>>>()?;
    SubsetTable::from_infos(n, infos)
}

pub fn grothendieck_tutte(m: &RealizedMatroid) -> Result<GTPoly> {
    Ok(grothendieck_tutte_from_table(&subset_table(m)?))
}
