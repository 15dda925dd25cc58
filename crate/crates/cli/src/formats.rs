//! JSON documents for the computed objects, and Graphviz export of posets.
//!
//! Integers are written as decimal strings and ring elements in their display
//! form (`"1+i"`, `"-2w"`), so values of any size survive a round trip.

use std::fmt::Write as _;

use matroid_torsion::poset::PosetNode;
use matroid_torsion::{
    CheckReport, GTPoly, GrothElement, HilbertSeries, IntPoly, IntPoly2, ModuleClass, Outcome, RingElement, RingKind,
    Subset, TorsionPoset,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

fn int(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("not an integer: {s:?}"))
}

fn ring(s: &str) -> Result<RingKind, String> {
    s.parse().map_err(|_| format!("unknown ring {s:?}"))
}

fn element(r: RingKind, s: &str) -> Result<RingElement, String> {
    RingElement::parse(r, s).map_err(|e| e.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDto {
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

impl ClassDto {
    pub fn new(c: &ModuleClass) -> Self {
        ClassDto { free_rank: c.free_rank(), torsion: c.torsion_chain().iter().map(ToString::to_string).collect() }
    }

    pub fn parse(&self, r: RingKind) -> Result<ModuleClass, String> {
        let chain = self.torsion.iter().map(|s| element(r, s)).collect::<Result<Vec<_>, _>>()?;
        ModuleClass::from_cyclic(self.free_rank, &chain).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrothTermDto {
    pub class: ClassDto,
    pub coeff: String,
}

/// `Σ coeff·[class]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrothDto {
    pub text: String,
    pub terms: Vec<GrothTermDto>,
}

impl GrothDto {
    pub fn new(e: &GrothElement) -> Self {
        GrothDto {
            text: e.to_string(),
            terms: e.terms().map(|(c, k)| GrothTermDto { class: ClassDto::new(c), coeff: k.to_string() }).collect(),
        }
    }

    pub fn parse(&self, r: RingKind) -> Result<GrothElement, String> {
        let mut e = GrothElement::zero();
        for t in &self.terms {
            e.add_term(t.class.parse(r)?, int(&t.coeff)?);
        }
        Ok(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GTTermDto {
    pub x: u32,
    pub y: u32,
    pub coeff: GrothDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GTPolyDto {
    pub ring: String,
    pub text: String,
    pub terms: Vec<GTTermDto>,
}

impl GTPolyDto {
    pub fn new(p: &GTPoly, r: RingKind) -> Self {
        GTPolyDto {
            ring: r.name().to_string(),
            text: p.to_string(),
            terms: p
                .sorted_terms()
                .into_iter()
                .map(|((x, y), c)| GTTermDto { x, y, coeff: GrothDto::new(c) })
                .collect(),
        }
    }

    pub fn parse(&self) -> Result<GTPoly, String> {
        let r = ring(&self.ring)?;
        let mut p = GTPoly::zero();
        for t in &self.terms {
            p.add_term((t.x, t.y), &t.coeff.parse(r)?);
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntTermDto {
    pub x: u32,
    pub y: u32,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPoly2Dto {
    pub text: String,
    pub terms: Vec<IntTermDto>,
}

impl IntPoly2Dto {
    pub fn new(p: &IntPoly2) -> Self {
        let mut terms: Vec<IntTermDto> =
            p.terms().map(|(&(x, y), c)| IntTermDto { x, y, coeff: c.to_string() }).collect();
        terms.sort_by_key(|t| std::cmp::Reverse((t.x + t.y, t.x)));
        IntPoly2Dto { text: p.to_string(), terms }
    }

    pub fn parse(&self) -> Result<IntPoly2, String> {
        let terms = self.terms.iter().map(|t| Ok(((t.x, t.y), int(&t.coeff)?))).collect::<Result<Vec<_>, String>>()?;
        Ok(IntPoly2::from_terms(terms))
    }
}

/// Coefficients of a univariate polynomial, constant term first.
pub fn poly_coeffs(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub fn parse_poly(coeffs: &[String]) -> Result<IntPoly, String> {
    Ok(IntPoly::new(coeffs.iter().map(|s| int(s)).collect::<Result<Vec<_>, _>>()?))
}

/// `numerator / (1 − t)^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertDto {
    pub text: String,
    pub numerator: Vec<String>,
    pub exponent: usize,
}

impl HilbertDto {
    pub fn new(h: &HilbertSeries) -> Self {
        HilbertDto { text: h.to_string(), numerator: poly_coeffs(h.numerator()), exponent: h.exponent() }
    }

    pub fn parse(&self) -> Result<HilbertSeries, String> {
        Ok(HilbertSeries::new(parse_poly(&self.numerator)?, self.exponent))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDto {
    pub label: String,
    /// Original element labels.
    pub set: Vec<usize>,
    pub dual: Vec<String>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDto {
    pub ring: String,
    pub labels: Vec<usize>,
    pub nodes: Vec<NodeDto>,
    /// `[lower, upper]` pairs of node indices.
    pub covers: Vec<[usize; 2]>,
}

impl PosetDto {
    pub fn new(p: &TorsionPoset) -> Self {
        let labels = p.labels().to_vec();
        let nodes = p
            .nodes()
            .iter()
            .enumerate()
            .map(|(v, n)| NodeDto {
                label: p.node_label(v),
                set: n.set.iter().map(|i| labels[i]).collect(),
                dual: n.dual.iter().map(ToString::to_string).collect(),
                rank: n.rank(),
            })
            .collect();
        PosetDto {
            ring: p.ring().name().to_string(),
            labels,
            nodes,
            // grouped by upper node, keeping each node's lower-cover order
            covers: (0..p.len()).flat_map(|hi| p.lower_covers(hi).iter().map(move |&lo| [lo, hi])).collect(),
        }
    }

    pub fn parse(&self) -> Result<TorsionPoset, String> {
        let r = ring(&self.ring)?;
        let position = |label: usize| {
            self.labels.iter().position(|&l| l == label).ok_or_else(|| format!("unknown element label {label}"))
        };
        let nodes = self
            .nodes
            .iter()
            .map(|n| {
                let set = n.set.iter().map(|&l| position(l)).collect::<Result<Vec<_>, _>>()?;
                let dual = n.dual.iter().map(|s| element(r, s)).collect::<Result<Vec<_>, _>>()?;
                Ok(PosetNode { set: Subset::from_elements(set), dual })
            })
            .collect::<Result<Vec<_>, String>>()?;
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        TorsionPoset::from_parts(r, self.labels.clone(), nodes, &covers).map_err(|e| e.to_string())
    }
}

/// Hasse diagram, minimum at the bottom.
pub fn poset_to_dot(p: &TorsionPoset) -> String {
    let mut out = String::from("digraph torsion_poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for v in 0..p.len() {
        let label = p.node_label(v).replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  n{v} [label=\"{label}\"];").unwrap();
    }
    for rank in 0..=p.rank() {
        let same: Vec<String> = (0..p.len()).filter(|&v| p.rank_of(v) == rank).map(|v| format!("n{v};")).collect();
        if same.len() > 1 {
            writeln!(out, "  {{ rank=same; {} }}", same.join(" ")).unwrap();
        }
    }
    for (lo, hi) in p.covers() {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItemDto {
    pub label: String,
    /// `pass`, `fail` or `skipped`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDto {
    pub name: String,
    pub passed: bool,
    pub items: Vec<CheckItemDto>,
}

impl ReportDto {
    pub fn new(r: &CheckReport) -> Self {
        let items = r
            .items
            .iter()
            .map(|i| {
                let (status, detail) = match &i.outcome {
                    Outcome::Pass => ("pass", None),
                    Outcome::Fail(d) => ("fail", Some(d.clone())),
                    Outcome::Skipped(d) => ("skipped", Some(d.clone())),
                };
                CheckItemDto { label: i.label.clone(), status: status.to_string(), detail }
            })
            .collect();
        ReportDto { name: r.name.clone(), passed: r.passed(), items }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteDoc {
    pub grothendieck_tutte: GTPolyDto,
    pub tutte: IntPoly2Dto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVectorDoc {
    pub ring: String,
    /// `f_{−1}, …, f_{r−1}`.
    pub grothendieck_f: Vec<GrothDto>,
    pub grothendieck_h: Vec<GrothDto>,
    pub f: Vec<String>,
    pub h: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertDoc {
    pub components: usize,
    pub face_module: HilbertDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticDoc {
    pub ring: String,
    pub tutte: IntPoly2Dto,
    /// Constant term first.
    pub series: Vec<String>,
    pub series_text: String,
    pub euler_characteristic: String,
}
