//! The quotient metric `ϱ(π(x),π(y)) = N(⊖x⊕y) + N(⊖y⊕x)` on `G/H` and its
//! audits.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gyro::report::{CheckReport, ReportBuilder};
use crate::gyro::Strategy;
use crate::sets::finite::FinSubset;
use crate::subgyro::chain::chain_intersection;

use super::coset::CosetSpace;
use super::dyadic::Dyadic;
use super::prenorm::FinitePrenorm;

/// Ground pseudometric on `G` used for balls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `d₂(x,y) = N(⊖x⊕y) + N(⊖y⊕x)`.
    TwoSided,
    /// `d(x,y) = |N(x) − N(y)|`.
    AbsPrinted,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::TwoSided => "two_sided",
            Variant::AbsPrinted => "abs_printed",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "two_sided" => Ok(Variant::TwoSided),
            "abs_printed" => Ok(Variant::AbsPrinted),
            other => Err(Error::Malformed(format!("unknown variant {other:?}"))),
        }
    }
}

/// `ϱ` tabulated over coset pairs, computed from canonical representatives.
#[derive(Debug, Clone)]
pub struct QuotientMetric<'a> {
    space: CosetSpace<'a>,
    prenorm: FinitePrenorm<'a>,
    variant: Variant,
    table: Vec<Dyadic>,
}

pub const SYMMETRY: &str = "symmetry";
pub const TRIANGLE: &str = "triangle";
pub const ZERO_IFF_SAME: &str = "zero-iff-same-coset";
pub const REPRESENTATIVES: &str = "representative-independence";
pub const GYROTRIANGLE: &str = "gyrotriangle";

/// Tabulates `ϱ` and audits it exhaustively.
pub fn quotient_metric<'a>(
    space: &CosetSpace<'a>,
    prenorm: &FinitePrenorm<'a>,
    variant: Variant,
) -> Result<(QuotientMetric<'a>, CheckReport)> {
    let family = prenorm.family();
    let h = chain_intersection(family.algebra(), family.chain())?;
    if h != *space.subgroup() {
        return Err(Error::Precondition(format!(
            "the chain limits to {h} but the coset space is built on {}",
            space.subgroup()
        )));
    }
    let m = space.len();
    let mut table = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            let (x, y) = (space.representative(p), space.representative(q));
            table.push(rho_elements(prenorm, x, y));
        }
    }
    let metric = QuotientMetric {
        space: space.clone(),
        prenorm: prenorm.clone(),
        variant,
        table,
    };
    let report = metric.audit();
    Ok((metric, report))
}

fn rho_elements(prenorm: &FinitePrenorm<'_>, x: usize, y: usize) -> Dyadic {
    let g = prenorm.model();
    prenorm.n(g.add(g.neg(x), y)) + prenorm.n(g.add(g.neg(y), x))
}

impl<'a> QuotientMetric<'a> {
    pub fn space(&self) -> &CosetSpace<'a> {
        &self.space
    }

    pub fn prenorm(&self) -> &FinitePrenorm<'a> {
        &self.prenorm
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// `ϱ(p, q)` for coset indices.
    pub fn rho(&self, p: usize, q: usize) -> Dyadic {
        self.table[p * self.space.len() + q]
    }

    /// `ϱ(π(x), π(y))` for elements.
    pub fn rho_of(&self, x: usize, y: usize) -> Dyadic {
        self.rho(self.space.project(x), self.space.project(y))
    }

    fn audit(&self) -> CheckReport {
        let g = self.space.model();
        let n = g.order();
        let m = self.space.len();
        let mut rep = ReportBuilder::new(format!("quotient-{}", self.variant), Strategy::Exhaustive, 0.0);
        let rep_label = |p: usize| g.label_of(self.space.representative(p)).to_string();
        let lab = |x: usize| g.label_of(x).to_string();
        let nv = self.prenorm.values();

        for p in 0..m {
            for q in 0..m {
                rep.add_tuples(1);
                let d = self.rho(p, q);
                if d != self.rho(q, p) {
                    rep.fail(SYMMETRY, vec![rep_label(p), rep_label(q)]);
                }
                if d.is_zero() != (p == q) {
                    rep.fail_with(ZERO_IFF_SAME, vec![rep_label(p), rep_label(q)], format!("rho = {d}"));
                }
                for r in 0..m {
                    rep.add_tuples(1);
                    if d > self.rho(p, r) + self.rho(r, q) {
                        rep.fail(TRIANGLE, vec![rep_label(p), rep_label(q), rep_label(r)]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                rep.add_tuples(1);
                let direct = nv[g.add(g.neg(x), y)] + nv[g.add(g.neg(y), x)];
                if direct != self.rho_of(x, y) {
                    rep.fail_with(
                        REPRESENTATIVES,
                        vec![lab(x), lab(y)],
                        format!("{direct} from these representatives, {} from canonical ones", self.rho_of(x, y)),
                    );
                }
            }
        }
        for x in 0..n {
            let nx = g.neg(x);
            for y in 0..n {
                let lhs = g.add(nx, y);
                for z in 0..n {
                    rep.add_tuples(1);
                    let a = g.add(nx, z);
                    let b = g.add(g.neg(z), y);
                    let gb = g.gyr_at(nx, z, b);
                    let expanded = g.add(a, gb);
                    let direct_ok = nv[lhs] <= nv[a] + nv[b];
                    let via_ok = nv[expanded] <= nv[a] + nv[gb];
                    if expanded != lhs || direct_ok != via_ok || !direct_ok {
                        rep.fail_with(
                            GYROTRIANGLE,
                            vec![lab(x), lab(y), lab(z)],
                            format!("expansion {} vs {}, direct {direct_ok}, expanded {via_ok}", lab(expanded), lab(lhs)),
                        );
                    }
                }
            }
        }
        rep.finish()
    }

    /// `coset_i,coset_j,rho` rows over all ordered coset pairs, labelled by
    /// canonical representatives.
    pub fn to_csv(&self) -> String {
        let g = self.space.model();
        let mut out = String::from("coset_i,coset_j,rho\n");
        for p in 0..self.space.len() {
            for q in 0..self.space.len() {
                out.push_str(&format!(
                    "{},{},{}\n",
                    csv_field(g.label_of(self.space.representative(p))),
                    csv_field(g.label_of(self.space.representative(q))),
                    self.rho(p, q)
                ));
            }
        }
        out
    }

    /// Rows `(label_i, label_j, rho)` in CSV order.
    pub fn rows(&self) -> Vec<(String, String, Dyadic)> {
        let g = self.space.model();
        let m = self.space.len();
        (0..m * m)
            .map(|k| {
                let (p, q) = (k / m, k % m);
                (
                    g.label_of(self.space.representative(p)).to_string(),
                    g.label_of(self.space.representative(q)).to_string(),
                    self.rho(p, q),
                )
            })
            .collect()
    }

    /// Ground pseudometric of the selected variant.
    pub fn ground(&self, x: usize, y: usize) -> Dyadic {
        match self.variant {
            Variant::TwoSided => rho_elements(&self.prenorm, x, y),
            Variant::AbsPrinted => self.prenorm.n(x).abs_diff(self.prenorm.n(y)),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// The two sides of the ball correspondence at one centre and radius.
#[derive(Debug, Clone)]
pub struct BallComparison {
    /// `B(x,ε) = {y : d(x,y) < ε}` for the ground pseudometric.
    pub ball: FinSubset,
    /// `π⁻¹(B*(π(x),ε))`.
    pub preimage: FinSubset,
    pub report: CheckReport,
}

pub const BALL: &str = "ball-correspondence";

/// Compares `B(x,ε)` with `π⁻¹(B*(π(x),ε))`. A mismatch is a violation for
/// the two-sided variant and an informational counterexample for the
/// printed one.
pub fn ball_correspondence(metric: &QuotientMetric<'_>, x: usize, eps: &BigRational) -> Result<BallComparison> {
    let g = metric.space().model();
    if x >= g.order() {
        return Err(Error::IndexOutOfRange { index: x, order: g.order() });
    }
    let n = g.order();
    let ball = FinSubset::from_predicate(n, |y| metric.ground(x, y).cmp_rational(eps).is_lt());
    let px = metric.space().project(x);
    let near = (0..metric.space().len()).filter(|&q| metric.rho(px, q).cmp_rational(eps).is_lt());
    let preimage = metric.space().preimage(near);
    let mut rep = ReportBuilder::new(format!("ball-{}", metric.variant()), Strategy::Exhaustive, 0.0);
    rep.add_tuples(n as u64);
    if ball != preimage {
        let witness = vec![
            g.label_of(x).to_string(),
            crate::rational::format_rational(eps),
            ball.display_with(g),
            preimage.display_with(g),
        ];
        let detail = format!(
            "B({},{}) = {} but the preimage of the quotient ball is {}",
            g.label_of(x),
            crate::rational::format_rational(eps),
            ball.display_with(g),
            preimage.display_with(g)
        );
        match metric.variant() {
            Variant::TwoSided => rep.fail_with(BALL, witness, detail),
            Variant::AbsPrinted => rep.counterexample(BALL, witness, detail),
        }
    }
    Ok(BallComparison {
        ball,
        preimage,
        report: rep.finish(),
    })
}

/// Radii worth probing at `x`: every distinct value of the ground
/// pseudometric and of `ϱ` from `x`, each midpoint between consecutive
/// values, and one value beyond the largest.
pub fn probe_radii(metric: &QuotientMetric<'_>, x: usize) -> Vec<BigRational> {
    let g = metric.space().model();
    let px = metric.space().project(x);
    let mut vals: Vec<Dyadic> = (0..g.order())
        .map(|y| metric.ground(x, y))
        .chain((0..metric.space().len()).map(|q| metric.rho(px, q)))
        .collect();
    vals.sort();
    vals.dedup();
    let half = BigRational::new(1.into(), 2.into());
    let mut out = Vec::new();
    for w in vals.windows(2) {
        out.push((w[0].to_rational() + w[1].to_rational()) * &half);
    }
    for v in &vals {
        if !v.is_zero() {
            out.push(v.to_rational());
        }
    }
    out.push(vals.last().map(|v| v.to_rational()).unwrap_or_default() + BigRational::from_integer(1.into()));
    out.sort();
    out.dedup();
    out
}
