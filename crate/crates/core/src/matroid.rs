//! Matroids realized by a matrix over one of the supported rings.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::module::{cokernel_class, ModuleClass, TorsionPresentation, DEFAULT_TORSION_BOUND};
use crate::report::{CheckReport, Outcome};
use crate::ring::{RingElement, RingKind};
use crate::snf::smith_normal_form;
use crate::subset::{Subset, MAX_GROUND};

/// Size limits applied to enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for which all `2^n` subsets are materialized.
    pub max_ground: usize,
    /// Largest `|tor(A)|` that will be enumerated elementwise.
    pub torsion_bound: u64,
    /// Largest number of poset nodes that will be materialized.
    pub node_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_ground: 24, torsion_bound: DEFAULT_TORSION_BOUND, node_budget: 100_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Loop,
    Coloop,
    Ordinary,
}

/// `M(A) = R^d / (fixed ∪ {v_i : i ∈ A})`.
///
/// `fixed` holds relations imposed on every `M(A)`: contracted columns and, for
/// instances whose `M(∅)` has torsion, the relations defining that torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizedMatroid {
    ring: RingKind,
    ambient: usize,
    columns: Vec<Vec<RingElement>>,
    /// Original 1-based label of each current ground element.
    labels: Vec<usize>,
    fixed: Vec<Vec<RingElement>>,
    /// Generic rank of `fixed`.
    base_rank: usize,
    limits: Limits,
}

impl RealizedMatroid {
    /// The matroid `A ↦ R^d / (columns in A)` of a `d × n` matrix, `d ≥ 1`.
    pub fn realize(matrix: &RMatrix) -> Result<Self> {
        if matrix.rows() == 0 {
            return Err(Error::EmptyMatrix);
        }
        Self::from_parts(matrix.ring(), matrix.rows(), matrix.columns(), Vec::new(), Limits::default())
    }

    /// `M(∅) = R^d / (c_k e_{d−m+k})`: the chain sits on the last `m` coordinates,
    /// and the columns of `matrix` are arbitrary vectors of `R^d`.
    pub fn with_torsion_at_empty(matrix: &RMatrix, chain: &[RingElement]) -> Result<Self> {
        if matrix.rows() == 0 {
            return Err(Error::EmptyMatrix);
        }
        let d = matrix.rows();
        if chain.len() > d {
            return Err(Error::DimensionMismatch { expected: d, found: chain.len() });
        }
        let ring = matrix.ring();
        let mut fixed = Vec::with_capacity(chain.len());
        for (k, c) in chain.iter().enumerate() {
            if c.is_zero() {
                return Err(Error::DivisionByZero);
            }
            if c.ring() != ring {
                return Err(Error::RingMismatch);
            }
            let mut col = alloc::vec![RingElement::zero(ring); d];
            col[d - chain.len() + k] = c.clone();
            fixed.push(col);
        }
        Self::from_parts(ring, d, matrix.columns(), fixed, Limits::default())
    }

    fn from_parts(
        ring: RingKind,
        ambient: usize,
        columns: Vec<Vec<RingElement>>,
        fixed: Vec<Vec<RingElement>>,
        limits: Limits,
    ) -> Result<Self> {
        let n = columns.len();
        if n > limits.max_ground.min(MAX_GROUND) {
            return Err(Error::GroundTooLarge { size: n, cap: limits.max_ground.min(MAX_GROUND) });
        }
        let (base, _) = cokernel_class(ring, ambient, &fixed)?;
        let labels = (1..=n).collect();
        Ok(RealizedMatroid { ring, ambient, columns, labels, fixed, base_rank: ambient - base.free_rank(), limits })
    }

    pub fn with_limits(mut self, limits: Limits) -> Result<Self> {
        let cap = limits.max_ground.min(MAX_GROUND);
        if self.columns.len() > cap {
            return Err(Error::GroundTooLarge { size: self.columns.len(), cap });
        }
        self.limits = limits;
        Ok(self)
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn ring(&self) -> RingKind {
        self.ring
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    /// Size of the ground set.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.columns.len())
    }

    pub fn column(&self, i: usize) -> &[RingElement] {
        &self.columns[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Renders a subset with the original 1-based labels.
    pub fn label_set(&self, a: Subset) -> String {
        let parts: Vec<String> = a.iter().map(|i| alloc::format!("{}", self.labels[i])).collect();
        alloc::format!("{{{}}}", parts.join(","))
    }

    fn check_subset(&self, a: Subset) -> Result<()> {
        match a.iter().find(|&i| i >= self.columns.len()) {
            Some(index) => Err(Error::IndexOutOfRange { index, len: self.columns.len() }),
            None => Ok(()),
        }
    }

    fn generators(&self, a: Subset) -> Vec<Vec<RingElement>> {
        let mut gens = self.fixed.clone();
        gens.extend(a.iter().map(|i| self.columns[i].clone()));
        gens
    }

    /// `M(A)` with coordinates on its torsion.
    pub fn module_of(&self, a: Subset) -> Result<(ModuleClass, TorsionPresentation)> {
        self.check_subset(a)?;
        cokernel_class(self.ring, self.ambient, &self.generators(a))
    }

    /// Class of `M(A)` together with `rk(A)`.
    pub fn subset_info(&self, a: Subset) -> Result<(ModuleClass, usize)> {
        let (class, _) = self.module_of(a)?;
        let rank = self.rank_from_class(&class);
        Ok((class, rank))
    }

    fn rank_from_class(&self, class: &ModuleClass) -> usize {
        self.ambient - class.free_rank() - self.base_rank
    }

    /// Rank of `A` in the generic matroid.
    pub fn generic_rank(&self, a: Subset) -> Result<usize> {
        Ok(self.subset_info(a)?.1)
    }

    /// `r = rk(E)`.
    pub fn rank(&self) -> usize {
        self.generic_rank(self.ground()).expect("ground set is in range")
    }

    /// All independent sets of the generic matroid, by increasing size, each level
    /// sorted by bitmask.
    pub fn independents(&self) -> Vec<Subset> {
        let mut out = alloc::vec![Subset::EMPTY];
        let mut level = alloc::vec![Subset::EMPTY];
        let n = self.columns.len();
        while !level.is_empty() {
            let mut next = Vec::new();
            for &a in &level {
                let start = a.iter().last().map_or(0, |m| m + 1);
                for b in start..n {
                    let cand = a.with(b);
                    // every facet must already be independent
                    if cand.iter().any(|x| x != b && level.binary_search(&cand.without(x)).is_err()) {
                        continue;
                    }
                    if self.generic_rank(cand).expect("in range") == cand.len() {
                        next.push(cand);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().copied());
            level = next;
        }
        out
    }

    pub fn element_kind(&self, i: usize) -> Result<ElementKind> {
        self.check_subset(Subset::singleton(i))?;
        if self.generic_rank(Subset::singleton(i))? == 0 {
            return Ok(ElementKind::Loop);
        }
        let full = self.ground();
        if self.generic_rank(full.without(i))? + 1 == self.generic_rank(full)? {
            return Ok(ElementKind::Coloop);
        }
        Ok(ElementKind::Ordinary)
    }

    /// `M \ i`: the column is dropped.
    pub fn delete(&self, i: usize) -> Result<Self> {
        self.check_subset(Subset::singleton(i))?;
        let mut out = self.clone();
        out.columns.remove(i);
        out.labels.remove(i);
        Ok(out)
    }

    /// `M / i`, with `(M / i)(A) = M(A ∪ {i})`.
    pub fn contract(&self, i: usize) -> Result<Self> {
        self.check_subset(Subset::singleton(i))?;
        let mut out = self.clone();
        let col = out.columns.remove(i);
        out.labels.remove(i);
        out.fixed.push(col);
        let (base, _) = cokernel_class(out.ring, out.ambient, &out.fixed)?;
        out.base_rank = out.ambient - base.free_rank();
        Ok(out)
    }

    /// `M′(A) = M(∅) / (tor(∅) + ψ[A])`, realized on the free quotient of `M(∅)`.
    pub fn torsion_free_quotient(&self) -> Result<Self> {
        let (_, p) = cokernel_class(self.ring, self.ambient, &self.fixed)?;
        let columns: Vec<_> = self.columns.iter().map(|v| p.free_coordinates(v)).collect();
        let mut out = Self::from_parts(self.ring, self.ambient - self.base_rank, columns, Vec::new(), self.limits)?;
        out.labels = self.labels.clone();
        Ok(out)
    }

    /// Whether `M(∅)` is torsion-free.
    pub fn empty_is_torsion_free(&self) -> bool {
        self.module_of(Subset::EMPTY).map(|(c, _)| c.is_torsion_free()).unwrap_or(false)
    }

    /// Whether `M(E) = 0`.
    pub fn full_is_zero(&self) -> bool {
        self.module_of(self.ground()).map(|(c, _)| c.is_zero_module()).unwrap_or(false)
    }

    /// Recomputes `M(A∪b)`, `M(A∪c)` and `M(A∪{b,c})` both directly and as one-step
    /// quotients of `M(A)` (resp. of `M(A∪b)`, `M(A∪c)`), and compares the classes.
    pub fn axiom_consistency_check(&self, a: Subset, b: usize, c: usize) -> Result<CheckReport> {
        self.check_subset(a.with(b).with(c))?;
        let mut report = CheckReport::new(alloc::format!(
            "axiom square A={} b={} c={}",
            self.label_set(a),
            self.labels[b],
            self.labels[c]
        ));
        if a.contains(b) || a.contains(c) || b == c {
            report.push("preconditions", Outcome::Skipped(String::from("need b, c distinct and outside A")));
            return Ok(report);
        }
        let ab = a.with(b);
        let ac = a.with(c);
        for (label, base, extra) in
            [("M(A∪b)", a, b), ("M(A∪c)", a, c), ("M(A∪bc) via b", ab, c), ("M(A∪bc) via c", ac, b)]
        {
            let (direct, _) = self.module_of(base.with(extra))?;
            let reversed = self.reversed_order_class(base.with(extra))?;
            let quotient = self.one_step_quotient(base, extra)?;
            report.expect(label, direct == quotient && direct == reversed, || {
                alloc::format!("direct {direct}, reversed order {reversed}, one-step quotient {quotient}")
            });
        }
        Ok(report)
    }

    fn reversed_order_class(&self, a: Subset) -> Result<ModuleClass> {
        let mut gens = self.generators(a);
        gens.reverse();
        Ok(cokernel_class(self.ring, self.ambient, &gens)?.0)
    }

    /// `M(A) / (image of v_b)`, computed in the SNF coordinates of `M(A)`.
    fn one_step_quotient(&self, a: Subset, b: usize) -> Result<ModuleClass> {
        let gens = self.generators(a);
        let m = RMatrix::from_columns(self.ring, self.ambient, &gens)?;
        let snf = smith_normal_form(&m);
        let mut rels: Vec<Vec<RingElement>> = Vec::new();
        for (k, e) in snf.diag.iter().enumerate().take(snf.rank()) {
            let mut col = alloc::vec![RingElement::zero(self.ring); self.ambient];
            col[k] = e.clone();
            rels.push(col);
        }
        rels.push(snf.left.mul_vec(&self.columns[b]));
        Ok(cokernel_class(self.ring, self.ambient, &rels)?.0)
    }
}

/// Class and rank of `M(A)` for every `A ⊆ E`, indexed by bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTable {
    n: usize,
    rank: usize,
    infos: Vec<(ModuleClass, usize)>,
}

impl SubsetTable {
    pub fn build(m: &RealizedMatroid) -> Result<Self> {
        let infos = Subset::all(m.len()).map(|a| m.subset_info(a)).collect::<Result<Vec<_>>>()?;
        Self::from_infos(m.len(), infos)
    }

    /// Assembles a table from per-mask results computed elsewhere (e.g. in parallel).
    pub fn from_infos(n: usize, infos: Vec<(ModuleClass, usize)>) -> Result<Self> {
        if infos.len() != 1usize << n {
            return Err(Error::DimensionMismatch { expected: 1usize << n, found: infos.len() });
        }
        let rank = infos.last().map_or(0, |(_, r)| *r);
        Ok(SubsetTable { n, rank, infos })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// `r = rk(E)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self, a: Subset) -> &ModuleClass {
        &self.infos[a.bits() as usize].0
    }

    pub fn rank_of(&self, a: Subset) -> usize {
        self.infos[a.bits() as usize].1
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank_of(a) == a.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, &ModuleClass, usize)> + '_ {
        self.infos.iter().enumerate().map(|(i, (c, r))| (Subset::from_bits(i as u32), c, *r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use RingKind::*;

    fn running_example() -> RealizedMatroid {
        let g = |a, b| RingElement::new(Gaussian, a, b);
        let m = RMatrix::from_rows(Gaussian, vec![vec![g(1, 0), g(1, 1)], vec![g(1, 1), g(0, 0)]]).unwrap();
        RealizedMatroid::realize(&m).unwrap()
    }

    #[test]
    fn running_example_structure() {
        let m = running_example();
        let g = |a, b| RingElement::new(Gaussian, a, b);
        assert_eq!(m.module_of(Subset::singleton(1)).unwrap().0, ModuleClass::from_cyclic(1, &[g(1, 1)]).unwrap());
        assert_eq!(m.module_of(Subset::full(2)).unwrap().0, ModuleClass::from_cyclic(0, &[g(2, 0)]).unwrap());
        assert_eq!(m.rank(), 2);
        assert_eq!(m.independents().len(), 4);
        assert_eq!(m.element_kind(0).unwrap(), ElementKind::Coloop);
        let c = m.contract(0).unwrap();
        assert_eq!(c.module_of(Subset::EMPTY).unwrap().0, ModuleClass::free(1));
        assert_eq!(c.module_of(Subset::singleton(0)).unwrap().0, ModuleClass::from_cyclic(0, &[g(2, 0)]).unwrap());
        assert_eq!(c.rank(), 1);
        assert!(m.axiom_consistency_check(Subset::EMPTY, 0, 1).unwrap().passed());
        assert!(matches!(m.module_of(Subset::singleton(5)), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn loops_and_empty() {
        let m = RealizedMatroid::realize(&RMatrix::from_ints(Integers, &[&[0], &[0]]).unwrap()).unwrap();
        assert_eq!(m.element_kind(0).unwrap(), ElementKind::Loop);
        assert_eq!(m.independents(), [Subset::EMPTY]);
        assert!(RealizedMatroid::realize(&RMatrix::zeros(Integers, 0, 0)).is_err());
        let m = RealizedMatroid::realize(&RMatrix::from_ints(Integers, &[&[2]]).unwrap()).unwrap();
        let (c, _) = m.module_of(Subset::singleton(0)).unwrap();
        assert_eq!(c.torsion_cardinality(), 2.into());
    }

    #[test]
    fn torsion_at_empty_and_quotient() {
        // M(∅) = Z ⊕ Z/2, one column (1, 1)
        let mat = RMatrix::from_ints(Integers, &[&[1], &[1]]).unwrap();
        let m = RealizedMatroid::with_torsion_at_empty(&mat, &[RingElement::from_int(Integers, 2)]).unwrap();
        assert!(!m.empty_is_torsion_free());
        assert_eq!(m.rank(), 1);
        assert_eq!(
            m.module_of(Subset::singleton(0)).unwrap().0,
            ModuleClass::from_cyclic(0, &[RingElement::from_int(Integers, 2)]).unwrap()
        );
        let q = m.torsion_free_quotient().unwrap();
        assert_eq!(q.ambient_rank(), 1);
        assert!(q.empty_is_torsion_free());
        assert_eq!(q.module_of(Subset::singleton(0)).unwrap().0, ModuleClass::zero_module());
    }
}
