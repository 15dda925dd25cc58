//! The poset of torsions: pairs `(A, l)` with `A` independent and `l ∈ tor(A)^∨`,
//! covered by `(A ∪ b, h)` exactly when `π_{A,b}^∨(h) = l`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groth::phi;
use crate::matroid::{RealizedMatroid, SubsetTable};
use crate::module::{residue_index, residue_tuple, TorsionPresentation};
use crate::report::{CheckReport, Outcome};
use crate::ring::{ResidueSystem, RingElement, RingKind};
use crate::subset::Subset;
use crate::tutte::GrothFVector;

/// Search steps allowed per pair of components when looking for an isomorphism.
pub const ISOMORPHISM_STEP_BUDGET: u64 = 5_000_000;

/// A node `(A, l)`. `dual` holds `(h₁, …, hₘ)`, the functional
/// `x ↦ Σ h_j x_j / d_j` on the cyclic decomposition of `tor(A)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosetNode {
    pub set: Subset,
    pub dual: Vec<RingElement>,
}

impl PosetNode {
    pub fn rank(&self) -> usize {
        self.set.len()
    }
}

/// A finite graded poset given by its cover relations.
///
/// `lower[v]` lists the lower covers of `v`. For posets built from a matroid it is
/// ordered by the removed element, position `p` removing the `p`-th element of the
/// node's set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionPoset {
    ring: RingKind,
    labels: Vec<usize>,
    nodes: Vec<PosetNode>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl TorsionPoset {
    /// Assembles a poset from nodes and `(lower, upper)` cover pairs.
    pub fn from_parts(
        ring: RingKind,
        labels: Vec<usize>,
        nodes: Vec<PosetNode>,
        covers: &[(usize, usize)],
    ) -> Result<Self> {
        let n = nodes.len();
        let mut lower = alloc::vec![Vec::new(); n];
        for &(lo, hi) in covers {
            for idx in [lo, hi] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, len: n });
                }
            }
            if nodes[hi].rank() != nodes[lo].rank() + 1 {
                return Err(Error::Internal(alloc::format!("cover {lo} -> {hi} does not raise the rank by one")));
            }
            lower[hi].push(lo);
        }
        Ok(Self::with_lower(ring, labels, nodes, lower))
    }

    fn with_lower(ring: RingKind, labels: Vec<usize>, nodes: Vec<PosetNode>, lower: Vec<Vec<usize>>) -> Self {
        let mut upper = alloc::vec![Vec::new(); nodes.len()];
        for (hi, los) in lower.iter().enumerate() {
            for &lo in los {
                upper[lo].push(hi);
            }
        }
        TorsionPoset { ring, labels, nodes, lower, upper }
    }

    pub fn ring(&self) -> RingKind {
        self.ring
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn nodes(&self) -> &[PosetNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn rank_of(&self, v: usize) -> usize {
        self.nodes[v].rank()
    }

    /// Largest node rank.
    pub fn rank(&self) -> usize {
        self.nodes.iter().map(PosetNode::rank).max().unwrap_or(0)
    }

    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.lower[v]
    }

    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.upper[v]
    }

    /// All `(lower, upper)` cover pairs, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> =
            self.lower.iter().enumerate().flat_map(|(hi, los)| los.iter().map(move |&lo| (lo, hi))).collect();
        out.sort_unstable();
        out
    }

    /// Nodes without lower covers.
    pub fn minima(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.lower[v].is_empty()).collect()
    }

    /// `(A | h₁, …, hₘ)` with the original element labels; `e` for the trivial group.
    pub fn node_label(&self, v: usize) -> String {
        let node = &self.nodes[v];
        let set: Vec<String> = node.set.iter().map(|i| alloc::format!("{}", self.labels[i])).collect();
        let dual = if node.dual.is_empty() {
            String::from("e")
        } else {
            node.dual.iter().map(|x| alloc::format!("{x}")).collect::<Vec<_>>().join(", ")
        };
        alloc::format!("({{{}}} | {dual})", set.join(","))
    }

    /// All nodes `≤ v`, including `v`.
    pub fn downset(&self, v: usize) -> Vec<usize> {
        self.closure(v, &self.lower)
    }

    /// All nodes `≥ v`, including `v`.
    pub fn upset(&self, v: usize) -> Vec<usize> {
        self.closure(v, &self.upper)
    }

    fn closure(&self, v: usize, adj: &[Vec<usize>]) -> Vec<usize> {
        let mut seen = alloc::collections::BTreeSet::new();
        let mut stack = alloc::vec![v];
        seen.insert(v);
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Whether `a ≤ b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        if self.rank_of(a) > self.rank_of(b) {
            return false;
        }
        self.downset(b).binary_search(&a).is_ok()
    }

    /// The induced subposet on `ids` (sorted), renumbered in that order.
    pub fn subposet(&self, ids: &[usize]) -> TorsionPoset {
        let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let nodes = ids.iter().map(|&v| self.nodes[v].clone()).collect();
        let lower = ids.iter().map(|&v| self.lower[v].iter().filter_map(|w| index.get(w).copied()).collect()).collect();
        Self::with_lower(self.ring, self.labels.clone(), nodes, lower)
    }
}

/// `π_{A,b}^∨` in coordinates: `l_j = Σ_k c_{jk} h_k mod d_j` with
/// `c_{jk} = d_j y_{jk} / d'_k`, where `y_{j·}` are the coordinates of `g_j` in `tor(A∪b)`.
#[derive(Clone, Debug)]
pub struct DualMap {
    coeffs: Vec<Vec<RingElement>>,
    target: Vec<ResidueSystem>,
}

impl DualMap {
    /// The dual of `tor(A) → tor(B)` for presentations of `M(A)` and `M(B)`, `A ⊂ B`.
    pub fn new(small: &TorsionPresentation, big: &TorsionPresentation) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(small.chain().len());
        for (g, d) in small.generators().iter().zip(small.chain()) {
            let y = big
                .torsion_coordinates(g)
                .ok_or_else(|| Error::Internal(String::from("image of a torsion generator is not torsion")))?;
            let row = y
                .iter()
                .zip(big.chain())
                .map(|(yk, dk)| {
                    (d * yk)
                        .exact_div(dk)
                        .ok_or_else(|| Error::Internal(alloc::format!("pairing {d}·{yk}/{dk} is not integral")))
                })
                .collect::<Result<Vec<_>>>()?;
            coeffs.push(row);
        }
        Ok(DualMap { coeffs, target: small.residue_systems().to_vec() })
    }

    pub fn apply(&self, h: &[RingElement]) -> Vec<RingElement> {
        self.coeffs
            .iter()
            .zip(&self.target)
            .map(|(row, rs)| {
                let ring = rs.modulus().ring();
                let s = row.iter().zip(h).fold(RingElement::zero(ring), |acc, (c, x)| &acc + &(c * x));
                rs.reduce(&s)
            })
            .collect()
    }
}

/// `π_{A,b}^∨(h)` for `h ∈ tor(A∪b)^∨`, with `A∪b` independent.
pub fn dual_pushforward(m: &RealizedMatroid, a: Subset, b: usize, h: &[RingElement]) -> Result<Vec<RingElement>> {
    let big = a.with(b);
    if a.contains(b) || m.generic_rank(big)? != big.len() {
        return Err(Error::NotIndependent(big));
    }
    let (_, pa) = m.module_of(a)?;
    let (_, pb) = m.module_of(big)?;
    if h.len() != pb.chain().len() {
        return Err(Error::DimensionMismatch { expected: pb.chain().len(), found: h.len() });
    }
    let h: Vec<_> = h.iter().zip(pb.residue_systems()).map(|(x, rs)| rs.reduce(x)).collect();
    Ok(DualMap::new(&pa, &pb)?.apply(&h))
}

struct Block {
    set: Subset,
    offset: usize,
    size: usize,
    presentation: TorsionPresentation,
}

/// Materializes `Gr M`. Nodes are grouped by set (by size, then bitmask), each
/// block in mixed-radix order of the residue tuples.
pub fn build_poset(m: &RealizedMatroid) -> Result<TorsionPoset> {
    let limits = m.limits();
    let mut blocks: Vec<Block> = Vec::new();
    let mut by_set: BTreeMap<Subset, usize> = BTreeMap::new();
    let mut total = BigInt::zero();
    for a in m.independents() {
        let (_, p) = m.module_of(a)?;
        let card = p.cardinality();
        let size = card.to_u64().filter(|&c| c <= limits.torsion_bound).ok_or_else(|| Error::TorsionTooLarge {
            set: a,
            cardinality: card.clone(),
            bound: limits.torsion_bound,
        })?;
        total += &card;
        if total > BigInt::from(limits.node_budget) {
            return Err(Error::NodeBudgetExceeded { nodes: total, budget: limits.node_budget });
        }
        let offset = blocks.last().map_or(0, |b| b.offset + b.size);
        by_set.insert(a, blocks.len());
        blocks.push(Block { set: a, offset, size: size as usize, presentation: p });
    }

    let mut nodes = Vec::new();
    for block in &blocks {
        let rs = block.presentation.residue_systems();
        nodes.extend((0..block.size as u64).map(|i| PosetNode { set: block.set, dual: residue_tuple(rs, i) }));
    }

    let mut lower = alloc::vec![Vec::new(); nodes.len()];
    for block in &blocks {
        let elements: Vec<usize> = block.set.iter().collect();
        for &b in &elements {
            let small = &blocks[by_set[&block.set.without(b)]];
            let map = DualMap::new(&small.presentation, &block.presentation)?;
            let rs = small.presentation.residue_systems();
            for v in block.offset..block.offset + block.size {
                let l = map.apply(&nodes[v].dual);
                lower[v].push(small.offset + residue_index(rs, &l) as usize);
            }
        }
    }

    // composing the covers in either order must reach the same node
    for block in &blocks {
        let elements: Vec<usize> = block.set.iter().collect();
        for v in block.offset..block.offset + block.size {
            for p in 0..elements.len() {
                for q in p + 1..elements.len() {
                    // removing the p-th element shifts later positions down by one
                    let via_p = lower[lower[v][p]][q - 1];
                    let via_q = lower[lower[v][q]][p];
                    if via_p != via_q {
                        return Err(Error::Internal(alloc::format!(
                            "pushforwards from {} to {} depend on the order",
                            block.set,
                            block.set.without(elements[p]).without(elements[q])
                        )));
                    }
                }
            }
        }
    }

    Ok(TorsionPoset::with_lower(m.ring(), m.labels().to_vec(), nodes, lower))
}

/// Node sets of the connected components of the Hasse diagram, each sorted, ordered
/// by smallest node.
pub fn component_ids(p: &TorsionPoset) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for v in 0..n {
        for &w in p.lower_covers(v) {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

pub fn poset_components(p: &TorsionPoset) -> Vec<TorsionPoset> {
    component_ids(p).iter().map(|ids| p.subposet(ids)).collect()
}

/// `(f_{−1}, …, f_{r−1})`: number of nodes of each rank.
pub fn poset_f_vector(p: &TorsionPoset) -> Vec<BigInt> {
    let mut f = alloc::vec![BigInt::zero(); p.rank() + 1];
    for node in p.nodes() {
        f[node.rank()] += 1;
    }
    f
}

/// Simpliciality of each component, and pairwise isomorphism of the components.
pub fn verify_simplicial(p: &TorsionPoset) -> CheckReport {
    let mut report = CheckReport::new("poset of torsions is simplicial");
    let comps = component_ids(p);
    for (c, ids) in comps.iter().enumerate() {
        let minima: Vec<_> = ids.iter().copied().filter(|&v| p.lower_covers(v).is_empty()).collect();
        report.expect(
            alloc::format!("component {c}: unique minimum"),
            minima.len() == 1 && p.rank_of(minima[0]) == 0,
            || alloc::format!("minima {minima:?}"),
        );
        let mut bad_cover = None;
        let mut bad_interval = None;
        for &v in ids {
            let set = p.nodes()[v].set;
            let mut below: Vec<Subset> = p.lower_covers(v).iter().map(|&w| p.nodes()[w].set).collect();
            below.sort();
            let mut expected: Vec<Subset> = set.iter().map(|a| set.without(a)).collect();
            expected.sort();
            if below != expected && bad_cover.is_none() {
                bad_cover = Some(v);
            }
            let down = p.downset(v);
            let mut sets: Vec<Subset> = down.iter().map(|&w| p.nodes()[w].set).collect();
            sets.sort();
            sets.dedup();
            let boolean = down.len() == 1usize << set.len()
                && sets.len() == down.len()
                && sets.iter().all(|s| s.is_subset_of(set));
            if !boolean && bad_interval.is_none() {
                bad_interval = Some(v);
            }
        }
        report.expect(
            alloc::format!("component {c}: one lower cover per removed element"),
            bad_cover.is_none(),
            || alloc::format!("fails at {}", p.node_label(bad_cover.unwrap_or_default())),
        );
        report.expect(alloc::format!("component {c}: lower intervals are Boolean"), bad_interval.is_none(), || {
            alloc::format!("fails at {}", p.node_label(bad_interval.unwrap_or_default()))
        });
    }
    for c in 1..comps.len() {
        let label = alloc::format!("component {c} isomorphic to component 0");
        match graded_isomorphism(p, &comps[0], &comps[c], ISOMORPHISM_STEP_BUDGET) {
            Some(true) => report.push(label, Outcome::Pass),
            Some(false) => report.push(label, Outcome::Fail(String::from("no graded isomorphism exists"))),
            None => report.push(label, Outcome::Fail(String::from("isomorphism search exceeded its step budget"))),
        }
    }
    report
}

/// Consistency of `Gr M` with the matroid: component count `= |tor(∅)|` and
/// rank counts `= φ` of the Grothendieck f-vector.
pub fn verify_poset_against_matroid(m: &RealizedMatroid, p: &TorsionPoset) -> Result<CheckReport> {
    let mut report = CheckReport::new("poset of torsions matches the matroid");
    let (empty, _) = m.module_of(Subset::EMPTY)?;
    let components = component_ids(p).len();
    let expected = empty.torsion_cardinality();
    report.expect("component count = |tor(∅)|", BigInt::from(components) == expected, || {
        alloc::format!("{components} components, |tor(∅)| = {expected}")
    });
    let f = GrothFVector::from_table(&SubsetTable::build(m)?);
    let numeric: Vec<BigInt> = f.entries().iter().map(phi).collect();
    let counted = poset_f_vector(p);
    report.expect("poset f-vector = φ(Grothendieck f-vector)", counted == numeric, || {
        alloc::format!("poset {counted:?}, matroid {numeric:?}")
    });
    Ok(report)
}

/// Whether two posets are isomorphic as graded posets. `None` if the search
/// exceeds [`ISOMORPHISM_STEP_BUDGET`].
pub fn posets_isomorphic(p: &TorsionPoset, q: &TorsionPoset) -> Option<bool> {
    let shift = p.len();
    let mut nodes = p.nodes.clone();
    nodes.extend(q.nodes.iter().cloned());
    let mut lower = p.lower.clone();
    lower.extend(q.lower.iter().map(|ls| ls.iter().map(|&w| w + shift).collect()));
    let union = TorsionPoset::with_lower(p.ring, p.labels.clone(), nodes, lower);
    let a: Vec<usize> = (0..shift).collect();
    let b: Vec<usize> = (shift..union.len()).collect();
    graded_isomorphism(&union, &a, &b, ISOMORPHISM_STEP_BUDGET)
}

/// Searches for a rank- and cover-preserving bijection between two components.
/// `None` if the step budget runs out first.
pub fn graded_isomorphism(p: &TorsionPoset, a: &[usize], b: &[usize], budget: u64) -> Option<bool> {
    let signature = |ids: &[usize]| {
        let mut s: Vec<(usize, usize, usize)> =
            ids.iter().map(|&v| (p.rank_of(v), p.lower_covers(v).len(), p.upper_covers(v).len())).collect();
        s.sort_unstable();
        s
    };
    if a.len() != b.len() || signature(a) != signature(b) {
        return Some(false);
    }
    if a.is_empty() {
        return Some(true);
    }
    // `a` is sorted by index, which is non-decreasing in rank for built posets;
    // sort explicitly so every node comes after its lower covers
    let mut order: Vec<usize> = a.to_vec();
    order.sort_by_key(|&v| (p.rank_of(v), v));
    let in_b: alloc::collections::BTreeSet<usize> = b.iter().copied().collect();

    let mut image: BTreeMap<usize, usize> = BTreeMap::new();
    let mut used: alloc::collections::BTreeSet<usize> = alloc::collections::BTreeSet::new();
    let mut stack: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut steps = 0u64;

    let candidates = |u: usize, image: &BTreeMap<usize, usize>, used: &alloc::collections::BTreeSet<usize>| {
        let pool: Vec<usize> = match p.lower_covers(u).first() {
            None => b.iter().copied().filter(|&v| p.lower_covers(v).is_empty()).collect(),
            Some(w) => p.upper_covers(image[w]).to_vec(),
        };
        let mut out: Vec<usize> = pool
            .into_iter()
            .filter(|v| in_b.contains(v) && !used.contains(v))
            .filter(|&v| {
                p.rank_of(v) == p.rank_of(u)
                    && p.lower_covers(v).len() == p.lower_covers(u).len()
                    && p.upper_covers(v).len() == p.upper_covers(u).len()
                    && p.lower_covers(u).iter().all(|w| p.lower_covers(v).contains(&image[w]))
            })
            .collect();
        // try set-preserving images first
        out.sort_by_key(|&v| (p.nodes()[v].set != p.nodes()[u].set, v));
        out
    };

    stack.push((candidates(order[0], &image, &used), 0));
    loop {
        steps += 1;
        if steps > budget {
            return None;
        }
        let depth = stack.len() - 1;
        let u = order[depth];
        if let Some(prev) = image.remove(&u) {
            used.remove(&prev);
        }
        let (cands, next) = stack.last_mut().expect("stack is non-empty");
        if *next >= cands.len() {
            stack.pop();
            if stack.is_empty() {
                return Some(false);
            }
            continue;
        }
        let v = cands[*next];
        *next += 1;
        image.insert(u, v);
        used.insert(v);
        if depth + 1 == order.len() {
            return Some(true);
        }
        let c = candidates(order[depth + 1], &image, &used);
        stack.push((c, 0));
    }
}
