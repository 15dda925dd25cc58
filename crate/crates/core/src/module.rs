//! Finitely generated modules over the supported PIDs, classified by free rank and
//! invariant factors, and explicit coordinates for the torsion of a cokernel.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::ring::{ResidueSystem, RingElement, RingKind};
use crate::snf::smith_normal_form;
use crate::subset::Subset;

/// Default cap on the number of elements [`enumerate_torsion`] will materialize.
pub const DEFAULT_TORSION_BOUND: u64 = 1_000_000;

/// Isomorphism class `R^k ⊕ R/(d₁) ⊕ … ⊕ R/(dₘ)` with `d₁ | … | dₘ`.
///
/// Entries of the chain are normalized non-units, so two classes are isomorphic
/// exactly when they compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleClass {
    free_rank: usize,
    torsion: Vec<RingElement>,
}

impl ModuleClass {
    /// The class of the zero module, the unit of the Grothendieck ring.
    pub fn zero_module() -> Self {
        ModuleClass::default()
    }

    pub fn free(rank: usize) -> Self {
        ModuleClass { free_rank: rank, torsion: Vec::new() }
    }

    /// Builds a class from arbitrary nonzero cyclic orders; the chain is recomputed.
    pub fn from_cyclic(free_rank: usize, orders: &[RingElement]) -> Result<Self> {
        if orders.iter().any(RingElement::is_zero) {
            return Err(Error::DivisionByZero);
        }
        Ok(ModuleClass { free_rank, torsion: invariant_factors(orders) })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_chain(&self) -> &[RingElement] {
        &self.torsion
    }

    pub fn is_zero_module(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// The class of the torsion submodule.
    pub fn torsion_part(&self) -> ModuleClass {
        ModuleClass { free_rank: 0, torsion: self.torsion.clone() }
    }

    pub fn ring(&self) -> Option<RingKind> {
        self.torsion.first().map(RingElement::ring)
    }

    /// `|tor(M)|`, the product of the norms of the chain. Always finite for the
    /// supported rings.
    pub fn torsion_cardinality(&self) -> BigInt {
        self.torsion.iter().map(RingElement::norm).product()
    }

    pub fn direct_sum(&self, other: &ModuleClass) -> ModuleClass {
        let torsion = if other.torsion.is_empty() {
            self.torsion.clone()
        } else if self.torsion.is_empty() {
            other.torsion.clone()
        } else {
            let mut all = self.torsion.clone();
            all.extend(other.torsion.iter().cloned());
            invariant_factors(&all)
        };
        ModuleClass { free_rank: self.free_rank + other.free_rank, torsion }
    }
}

/// `torsion_cardinality` as a free function.
pub fn torsion_cardinality(class: &ModuleClass) -> BigInt {
    class.torsion_cardinality()
}

pub fn direct_sum(a: &ModuleClass, b: &ModuleClass) -> ModuleClass {
    a.direct_sum(b)
}

/// Non-unit invariant factors of `⊕ R/(dᵢ)`, via the SNF of the diagonal matrix.
fn invariant_factors(orders: &[RingElement]) -> Vec<RingElement> {
    let Some(first) = orders.first() else {
        return Vec::new();
    };
    let ring = first.ring();
    let n = orders.len();
    let mut m = RMatrix::zeros(ring, n, n);
    for (i, d) in orders.iter().enumerate() {
        m[(i, i)] = d.clone();
    }
    smith_normal_form(&m).diag.into_iter().filter(|d| !d.is_zero() && !d.is_unit()).collect()
}

fn wrap_element(d: &RingElement) -> String {
    if d.re().is_zero() || d.om().is_zero() {
        alloc::format!("{d}")
    } else {
        alloc::format!("({d})")
    }
}

impl fmt::Display for ModuleClass {
    /// `[0]`, `[R]`, `[R^2]`, `[R/2]`, `[R/(1+i)]`, `[R ⊕ R/2 ⊕ R/(2+2i)]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero_module() {
            return f.write_str("[0]");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(String::from("R")),
            k => parts.push(alloc::format!("R^{k}")),
        }
        for d in &self.torsion {
            parts.push(alloc::format!("R/{}", wrap_element(d)));
        }
        write!(f, "[{}]", parts.join(" ⊕ "))
    }
}

/// Coordinates for `M = R^d / (columns)`.
///
/// With `L · N · R' = diag(e₁, …, e_ρ, 0, …)` the map `x ↦ Lx` identifies `M` with
/// `⊕ R/(e_k) ⊕ R^{d−ρ}`. The torsion generators are the columns of `L⁻¹` at the
/// positions of the non-unit `e_k`; the matching rows of `L` read off coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionPresentation {
    ambient: usize,
    chain: Vec<RingElement>,
    /// Lifts in `R^d` of the cyclic generators `g_j`.
    generators: Vec<Vec<RingElement>>,
    /// Row `j` of `L` for the `j`-th torsion summand.
    torsion_rows: Vec<Vec<RingElement>>,
    /// Rows of `L` for the unit summands; their coordinates carry no information.
    unit_rows: usize,
    /// Rows of `L` for the free summands.
    free_rows: Vec<Vec<RingElement>>,
    residues: Vec<ResidueSystem>,
}

impl TorsionPresentation {
    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn chain(&self) -> &[RingElement] {
        &self.chain
    }

    pub fn generators(&self) -> &[Vec<RingElement>] {
        &self.generators
    }

    pub fn residue_systems(&self) -> &[ResidueSystem] {
        &self.residues
    }

    pub fn cardinality(&self) -> BigInt {
        self.residues.iter().map(ResidueSystem::cardinality).product()
    }

    /// Coordinates of the class of `v ∈ R^d` in `tor(M)`, reduced mod the chain.
    /// `None` if the class of `v` is not torsion.
    pub fn torsion_coordinates(&self, v: &[RingElement]) -> Option<Vec<RingElement>> {
        if self.free_rows.iter().any(|row| !dot(row, v).is_zero()) {
            return None;
        }
        Some(self.torsion_rows.iter().zip(&self.residues).map(|(row, rs)| rs.reduce(&dot(row, v))).collect())
    }

    /// Coordinates of `v` in the free quotient `M / tor(M) ≅ R^k`.
    pub fn free_coordinates(&self, v: &[RingElement]) -> Vec<RingElement> {
        self.free_rows.iter().map(|row| dot(row, v)).collect()
    }

    /// Whether `v` lies in the submodule spanned by the relation columns.
    pub fn is_relation(&self, v: &[RingElement]) -> bool {
        self.torsion_coordinates(v).is_some_and(|c| c.iter().all(RingElement::is_zero))
    }

    /// Number of unit invariant factors dropped from the presentation.
    pub fn unit_summands(&self) -> usize {
        self.unit_rows
    }
}

fn dot(row: &[RingElement], v: &[RingElement]) -> RingElement {
    debug_assert_eq!(row.len(), v.len());
    let ring = row.first().map_or(RingKind::Integers, RingElement::ring);
    row.iter().zip(v).fold(RingElement::zero(ring), |acc, (a, b)| &acc + &(a * b))
}

/// Class and torsion coordinates of `R^d / (generators)`.
pub fn cokernel_class(
    ring: RingKind,
    ambient_rank: usize,
    generators: &[Vec<RingElement>],
) -> Result<(ModuleClass, TorsionPresentation)> {
    let m = RMatrix::from_columns(ring, ambient_rank, generators)?;
    let snf = smith_normal_form(&m);
    let rank = snf.rank();
    let mut chain = Vec::new();
    let mut gens = Vec::new();
    let mut torsion_rows = Vec::new();
    let mut unit_rows = 0;
    for k in 0..rank {
        let d = &snf.diag[k];
        if d.is_unit() {
            unit_rows += 1;
            continue;
        }
        chain.push(d.clone());
        gens.push(snf.left_inv.column(k));
        torsion_rows.push(snf.left.row(k).to_vec());
    }
    let free_rows = (rank..ambient_rank).map(|k| snf.left.row(k).to_vec()).collect();
    let residues = chain.iter().map(ResidueSystem::new).collect::<Result<Vec<_>>>()?;
    let class = ModuleClass { free_rank: ambient_rank - rank, torsion: chain.clone() };
    let pres = TorsionPresentation {
        ambient: ambient_rank,
        chain,
        generators: gens,
        torsion_rows,
        unit_rows,
        free_rows,
        residues,
    };
    Ok((class, pres))
}

/// Every element of `tor(M)` as a residue tuple `(r₁ mod d₁, …, rₘ mod dₘ)`, in
/// mixed-radix order (last coordinate fastest).
pub fn enumerate_torsion(p: &TorsionPresentation, bound: u64) -> Result<Vec<Vec<RingElement>>> {
    let card = p.cardinality();
    let count = card.to_u64().filter(|&c| c <= bound).ok_or_else(|| Error::TorsionTooLarge {
        set: Subset::EMPTY,
        cardinality: card.clone(),
        bound,
    })?;
    Ok((0..count).map(|i| residue_tuple(&p.residues, i)).collect())
}

/// Decodes a mixed-radix index into a residue tuple.
pub fn residue_tuple(residues: &[ResidueSystem], mut index: u64) -> Vec<RingElement> {
    let mut out = alloc::vec![RingElement::zero(RingKind::Integers); residues.len()];
    for (slot, rs) in out.iter_mut().zip(residues).rev() {
        let radix = rs.cardinality().to_u64().expect("radix fits in u64");
        *slot = rs.element(index % radix);
        index /= radix;
    }
    out
}

/// Inverse of [`residue_tuple`]; the tuple must already be reduced.
pub fn residue_index(residues: &[ResidueSystem], tuple: &[RingElement]) -> u64 {
    residues.iter().zip(tuple).fold(0u64, |acc, (rs, x)| {
        let radix = rs.cardinality().to_u64().expect("radix fits in u64");
        acc * radix + rs.index_of(x)
    })
}

impl ModuleClass {
    /// `true` if the class is `(0, [])`; the multiplicative identity test used by
    /// the Grothendieck ring.
    pub fn is_one(&self) -> bool {
        self.is_zero_module()
    }
}

impl From<&TorsionPresentation> for ModuleClass {
    fn from(p: &TorsionPresentation) -> Self {
        ModuleClass { free_rank: 0, torsion: p.chain.clone() }
    }
}
