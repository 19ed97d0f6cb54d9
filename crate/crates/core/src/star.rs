//! Projection of a root system onto the weight plane of an a2 subsystem.
//!
//! Each root γ is sent to its a2-weight `(⟨γ, α^∨⟩, ⟨γ, β^∨⟩)`. For the hosts
//! of the exceptional series the weights fall on thirteen points: the origin
//! (the reduced structure algebra), the six a2 roots (the hexagon) and six
//! tips, each carrying one copy of a rank-3 Jordan algebra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::exact::{dot, Rational};
use crate::roots::{AlgebraLabel, RootSystem};
use crate::{Error, Result};

pub type Weight = (i64, i64);

/// Tip weights in counter-clockwise order starting at ω₁.
pub const TIP_WEIGHTS: [Weight; 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Weights of α, α+β, β, -α, -α-β, -β.
pub const HEXAGON_WEIGHTS: [Weight; 6] = [(2, -1), (1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bucket {
    Center,
    Hexagon,
    Tip(Weight),
}

impl Bucket {
    pub fn label(&self) -> String {
        match self {
            Bucket::Center => "center".into(),
            Bucket::Hexagon => "hexagon".into(),
            Bucket::Tip((a, b)) => format!("tip({a},{b})"),
        }
    }
}

/// Two roots of equal length at 120 degrees, spanning an a2 subsystem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Choice {
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
}

impl A2Choice {
    /// `{α, β, α+β}` and their negatives.
    pub fn roots(&self) -> Vec<Vec<Rational>> {
        let sum: Vec<Rational> = self.alpha.iter().zip(&self.beta).map(|(a, b)| a + b).collect();
        let neg = |v: &Vec<Rational>| v.iter().map(|x| -x).collect::<Vec<_>>();
        vec![self.alpha.clone(), self.beta.clone(), sum.clone(), neg(&self.alpha), neg(&self.beta), neg(&sum)]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartCounts {
    pub center: usize,
    pub hexagon: usize,
    pub tips: [usize; 6],
}

impl ChartCounts {
    pub fn total(&self) -> usize {
        self.center + self.hexagon + self.tips.iter().sum::<usize>()
    }
}

#[derive(Clone, Debug)]
pub struct MagicStarChart {
    host: AlgebraLabel,
    choice: A2Choice,
    roots: Vec<Vec<Rational>>,
    weights: Vec<Weight>,
    classes: Vec<Bucket>,
    buckets: BTreeMap<Weight, Vec<usize>>,
}

/// Outcome of the a2 search: the first valid choice under root ordering
/// and how many ordered candidate pairs passed validation.
#[derive(Clone, Debug)]
pub struct A2Search {
    pub chart: MagicStarChart,
    pub validated: usize,
    pub candidates: usize,
    /// Every validated choice produced the same bucket counts.
    pub counts_agree: bool,
}

/// Integer table of `2(γ_i, γ_j)/(γ_j, γ_j)` over all roots, plus the
/// index of each reflection `s_j(γ_i)` and each root's squared length.
struct PairingTable {
    n: usize,
    values: Vec<i64>,
    reflections: Vec<usize>,
    lengths: Vec<Rational>,
}

impl PairingTable {
    fn new(rs: &RootSystem) -> Result<PairingTable> {
        let roots = rs.roots();
        let n = roots.len();
        let lengths: Vec<Rational> = roots.iter().map(|r| dot(r, r)).collect();
        let two = Rational::from_int(2);
        let mut values = Vec::with_capacity(n * n);
        let mut reflections = Vec::with_capacity(n * n);
        for g in roots {
            for (a, len) in roots.iter().zip(&lengths) {
                let p = &two * &dot(g, a) / len;
                let p = p.to_i64().ok_or_else(|| Error::Precondition(format!("non-integral pairing {p}")))?;
                values.push(p);
                let image = rs.reflect(g, a);
                reflections.push(rs.index_of(&image).ok_or_else(|| Error::NotARoot(rs.label().to_string()))?);
            }
        }
        Ok(PairingTable { n, values, reflections, lengths })
    }

    fn get(&self, gamma: usize, alpha: usize) -> i64 {
        self.values[gamma * self.n + alpha]
    }

    fn reflect(&self, gamma: usize, alpha: usize) -> usize {
        self.reflections[gamma * self.n + alpha]
    }
}

type Classified = (Vec<Weight>, Vec<Bucket>, BTreeMap<Weight, Vec<usize>>);

fn classify(rs: &RootSystem, table: &PairingTable, a: usize, b: usize) -> Result<Classified> {
    let choice = A2Choice { alpha: rs.roots()[a].clone(), beta: rs.roots()[b].clone() };
    let mut hexagon = BTreeSet::new();
    for r in choice.roots() {
        let idx = rs.index_of(&r).ok_or_else(|| Error::Classification("α+β is not a root".into()))?;
        hexagon.insert(idx);
    }
    let n = rs.roots().len();
    let mut weights = Vec::with_capacity(n);
    let mut classes = Vec::with_capacity(n);
    let mut buckets: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for k in 0..n {
        let w = (table.get(k, a), table.get(k, b));
        let class = if hexagon.contains(&k) {
            Bucket::Hexagon
        } else if w == (0, 0) {
            Bucket::Center
        } else if TIP_WEIGHTS.contains(&w) {
            Bucket::Tip(w)
        } else {
            return Err(Error::Classification(format!("root {k} has weight {w:?}")));
        };
        weights.push(w);
        classes.push(class);
        buckets.entry(w).or_default().push(k);
    }
    Ok((weights, classes, buckets))
}

fn validate(table: &PairingTable, buckets: &BTreeMap<Weight, Vec<usize>>) -> Result<()> {
    let tip = |w: &Weight| buckets.get(w).map_or(0, Vec::len);
    let first = tip(&TIP_WEIGHTS[0]);
    if first == 0 || TIP_WEIGHTS.iter().any(|w| tip(w) != first) {
        return Err(Error::Classification("tips are empty or unequal".into()));
    }
    if let Some(center) = buckets.get(&(0, 0)) {
        let mut inside = vec![false; table.n];
        center.iter().for_each(|&k| inside[k] = true);
        if center.iter().any(|&i| center.iter().any(|&j| !inside[table.reflect(i, j)])) {
            return Err(Error::Classification("center roots are not closed".into()));
        }
    }
    Ok(())
}

fn is_a2_pair(table: &PairingTable, a: usize, b: usize) -> bool {
    a != b && table.get(a, b) == -1 && table.get(b, a) == -1 && table.lengths[a] == table.lengths[b]
}

/// Projects every root onto the weight plane of `choice` and buckets it.
pub fn project(rs: &RootSystem, choice: &A2Choice) -> Result<MagicStarChart> {
    let table = PairingTable::new(rs)?;
    let a = rs.index_of(&choice.alpha).ok_or_else(|| Error::NotARoot(rs.label().to_string()))?;
    let b = rs.index_of(&choice.beta).ok_or_else(|| Error::NotARoot(rs.label().to_string()))?;
    if !is_a2_pair(&table, a, b) {
        return Err(Error::Classification("choice is not an a2 pair".into()));
    }
    let (weights, classes, buckets) = classify(rs, &table, a, b)?;
    Ok(MagicStarChart {
        host: rs.label(),
        choice: choice.clone(),
        roots: rs.roots().to_vec(),
        weights,
        classes,
        buckets,
    })
}

/// Exhaustive search over ordered root pairs in root order.
///
/// Pairs of either length are tried; a pair counts as valid when every
/// weight is legal, the six tips are nonempty and equal, and the center
/// roots close under reflection.
pub fn find_a2(rs: &RootSystem) -> Result<A2Search> {
    let table = PairingTable::new(rs)?;
    let n = rs.roots().len();
    let mut first: Option<MagicStarChart> = None;
    let mut first_counts: Option<ChartCounts> = None;
    let mut validated = 0;
    let mut candidates = 0;
    let mut counts_agree = true;
    for a in 0..n {
        for b in 0..n {
            if !is_a2_pair(&table, a, b) {
                continue;
            }
            candidates += 1;
            let Ok((weights, classes, buckets)) = classify(rs, &table, a, b) else {
                continue;
            };
            if validate(&table, &buckets).is_err() {
                continue;
            }
            validated += 1;
            let counts = bucket_counts(&buckets);
            match &first_counts {
                None => {
                    first_counts = Some(counts);
                    first = Some(MagicStarChart {
                        host: rs.label(),
                        choice: A2Choice { alpha: rs.roots()[a].clone(), beta: rs.roots()[b].clone() },
                        roots: rs.roots().to_vec(),
                        weights,
                        classes,
                        buckets,
                    });
                }
                Some(c) => counts_agree &= *c == counts,
            }
        }
    }
    let chart = first.ok_or_else(|| Error::NoMagicStar(rs.label().to_string()))?;
    Ok(A2Search { chart, validated, candidates, counts_agree })
}

pub fn chart_counts(chart: &MagicStarChart) -> ChartCounts {
    bucket_counts(&chart.buckets)
}

fn bucket_counts(buckets: &BTreeMap<Weight, Vec<usize>>) -> ChartCounts {
    let len = |w: &Weight| buckets.get(w).map_or(0, Vec::len);
    ChartCounts {
        center: len(&(0, 0)),
        hexagon: HEXAGON_WEIGHTS.iter().map(len).sum(),
        tips: TIP_WEIGHTS.map(|w| len(&w)),
    }
}

impl MagicStarChart {
    pub fn host(&self) -> AlgebraLabel {
        self.host
    }

    pub fn choice(&self) -> &A2Choice {
        &self.choice
    }

    pub fn counts(&self) -> ChartCounts {
        chart_counts(self)
    }

    /// Root indices per weight.
    pub fn buckets(&self) -> &BTreeMap<Weight, Vec<usize>> {
        &self.buckets
    }

    /// `(root, weight, bucket)` in root order.
    pub fn rows(&self) -> impl Iterator<Item = (&[Rational], Weight, Bucket)> {
        self.roots.iter().zip(&self.weights).zip(&self.classes).map(|((r, w), c)| (r.as_slice(), *w, *c))
    }

    pub fn center_roots(&self) -> Vec<&[Rational]> {
        self.rows().filter(|(_, _, c)| *c == Bucket::Center).map(|(r, _, _)| r).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartFormat {
    Csv,
    Svg,
}

pub fn emit_chart(chart: &MagicStarChart, format: ChartFormat) -> String {
    match format {
        ChartFormat::Csv => emit_csv(chart),
        ChartFormat::Svg => emit_svg(chart),
    }
}

fn emit_csv(chart: &MagicStarChart) -> String {
    let mut out = String::from("root;weight_a;weight_b;bucket\n");
    for (root, (a, b), class) in chart.rows() {
        let coords: Vec<String> = root.iter().map(Rational::to_string).collect();
        let _ = writeln!(out, "{};{a};{b};{}", coords.join(","), class.label());
    }
    out
}

/// Decimal rendering with twelve significant digits.
fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.starts_with("-0") && s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// Planar position of weight `a·ω₁ + b·ω₂` with α₁ = (1, 0), α₂ at 120°.
pub fn weight_position((a, b): Weight) -> (f64, f64) {
    let s3 = 3f64.sqrt();
    let (w1, w2) = ((0.5, s3 / 6.0), (0.0, s3 / 3.0));
    (a as f64 * w1.0 + b as f64 * w2.0, a as f64 * w1.1 + b as f64 * w2.1)
}

fn emit_svg(chart: &MagicStarChart) -> String {
    const SCALE: f64 = 220.0;
    const MID: f64 = 300.0;
    let px = |w: Weight| {
        let (x, y) = weight_position(w);
        (MID + SCALE * x, MID - SCALE * y)
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 600 600" width="600" height="600">"#);
    let _ = writeln!(out, "  <title>Magic Star of {}</title>", chart.host);
    for tri in [[TIP_WEIGHTS[0], TIP_WEIGHTS[2], TIP_WEIGHTS[4]], [TIP_WEIGHTS[1], TIP_WEIGHTS[3], TIP_WEIGHTS[5]]] {
        let pts: Vec<String> = tri
            .iter()
            .map(|&w| {
                let (x, y) = px(w);
                format!("{},{}", sig12(x), sig12(y))
            })
            .collect();
        let _ = writeln!(out, r##"  <polygon points="{}" fill="none" stroke="#bbbbbb"/>"##, pts.join(" "));
    }
    for (w, members) in &chart.buckets {
        let (x, y) = px(*w);
        let fill = match chart.classes[members[0]] {
            Bucket::Center => "#d62728",
            Bucket::Hexagon => "#1f77b4",
            Bucket::Tip(_) => "#2ca02c",
        };
        let _ = writeln!(
            out,
            r#"  <g class="weight" data-a="{}" data-b="{}"><circle cx="{}" cy="{}" r="9" fill="{fill}"/><text x="{}" y="{}" font-size="14">{}</text></g>"#,
            w.0,
            w.1,
            sig12(x),
            sig12(y),
            sig12(x + 12.0),
            sig12(y - 10.0),
            members.len()
        );
    }
    out.push_str("</svg>\n");
    out
}
