//! Core-intermediate-peripheral index: the angle of a node's oriented
//! loading from the peripheral axis, its 10° bin and class, and the
//! network-level fraction tuple and label.

mod kcore;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{CipError, Result};

pub use kcore::{coreness, k_core};

/// A CIP angle in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CipAngle {
    pub degrees: f64,
    /// Both loadings were negative and the point was reflected through the
    /// origin before measuring.
    pub reflected: bool,
}

/// Angle of `(p_load, c_load)` measured from the peripheral axis:
/// counter-clockwise in quadrants I and II, clockwise (negative) in
/// quadrant IV. Quadrant III points are reflected into quadrant I.
pub fn cip_index(p_load: f64, c_load: f64) -> Result<CipAngle> {
    if p_load == 0.0 && c_load == 0.0 {
        return Err(CipError::Domain("CIP index of the zero vector".into()));
    }
    if !p_load.is_finite() || !c_load.is_finite() {
        return Err(CipError::Domain(format!(
            "non-finite loadings ({p_load}, {c_load})"
        )));
    }
    let reflected = p_load < 0.0 && c_load < 0.0;
    let (p, c) = if reflected {
        (-p_load, -c_load)
    } else {
        (p_load, c_load)
    };
    Ok(CipAngle {
        degrees: c.atan2(p).to_degrees(),
        reflected,
    })
}

/// 10° bins: `<0`, `[0,10)` .. `[80,90)`, `>=90`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bin {
    Negative,
    /// `[10k, 10k + 10)` for `k` in `0..=8`.
    Decade(u8),
    NinetyPlus,
}

impl Bin {
    pub fn all() -> impl Iterator<Item = Bin> {
        std::iter::once(Bin::Negative)
            .chain((0..9).map(Bin::Decade))
            .chain(std::iter::once(Bin::NinetyPlus))
    }
}

impl fmt::Display for Bin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bin::Negative => f.write_str("<0"),
            Bin::Decade(k) => write!(f, "{}..{}", 10 * k, 10 * k + 10),
            Bin::NinetyPlus => f.write_str(">=90"),
        }
    }
}

impl Serialize for Bin {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn bin_of(angle_deg: f64) -> Bin {
    if angle_deg < 0.0 {
        Bin::Negative
    } else if angle_deg >= 90.0 {
        Bin::NinetyPlus
    } else {
        Bin::Decade((angle_deg / 10.0).floor().min(8.0) as u8)
    }
}

/// Node classes. Variant order is the tie-break precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NodeClass {
    Core,
    Intermediate,
    Peripheral,
}

impl NodeClass {
    pub const ALL: [NodeClass; 3] = [
        NodeClass::Core,
        NodeClass::Intermediate,
        NodeClass::Peripheral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NodeClass::Core => "Core",
            NodeClass::Intermediate => "Intermediate",
            NodeClass::Peripheral => "Peripheral",
        }
    }
}

impl fmt::Display for NodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify_node(bin: Bin) -> NodeClass {
    match bin {
        Bin::Decade(8) | Bin::NinetyPlus => NodeClass::Core,
        Bin::Negative | Bin::Decade(0) => NodeClass::Peripheral,
        Bin::Decade(_) => NodeClass::Intermediate,
    }
}

/// Per-node CIP result.
#[derive(Debug, Clone, PartialEq)]
pub struct CipRecord {
    pub node: String,
    /// Internal node index.
    pub index: usize,
    pub p_load: f64,
    pub c_load: f64,
    pub angle_deg: f64,
    pub quadrant_reflected: bool,
    pub bin: Bin,
    pub class: NodeClass,
    /// Betweenness, kept for rank tie-breaks.
    pub bwc: f64,
}

impl CipRecord {
    pub fn new(node: &str, index: usize, p_load: f64, c_load: f64, bwc: f64) -> Result<Self> {
        let angle = cip_index(p_load, c_load)?;
        let bin = bin_of(angle.degrees);
        Ok(Self {
            node: node.to_string(),
            index,
            p_load,
            c_load,
            angle_deg: angle.degrees,
            quadrant_reflected: angle.reflected,
            bin,
            class: classify_node(bin),
            bwc,
        })
    }
}

/// Class counts over a network, reported as fractions in
/// `[core, intermediate, peripheral]` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinsFractionTuple {
    pub core: usize,
    pub intermediate: usize,
    pub peripheral: usize,
}

impl BinsFractionTuple {
    pub fn total(&self) -> usize {
        self.core + self.intermediate + self.peripheral
    }

    pub fn count(&self, class: NodeClass) -> usize {
        match class {
            NodeClass::Core => self.core,
            NodeClass::Intermediate => self.intermediate,
            NodeClass::Peripheral => self.peripheral,
        }
    }

    pub fn fraction(&self, class: NodeClass) -> f64 {
        self.count(class) as f64 / self.total() as f64
    }

    pub fn fractions(&self) -> [f64; 3] {
        NodeClass::ALL.map(|c| self.fraction(c))
    }
}

pub fn bins_fraction_tuple(records: &[CipRecord]) -> Result<BinsFractionTuple> {
    if records.is_empty() {
        return Err(CipError::Domain(
            "bins-fraction tuple of an empty node set".into(),
        ));
    }
    let mut t = BinsFractionTuple {
        core: 0,
        intermediate: 0,
        peripheral: 0,
    };
    for r in records {
        match r.class {
            NodeClass::Core => t.core += 1,
            NodeClass::Intermediate => t.intermediate += 1,
            NodeClass::Peripheral => t.peripheral += 1,
        }
    }
    Ok(t)
}

/// `"<Class>-heavy"` when one class holds at least half the nodes,
/// otherwise `"<Top1>/<Top2>-heavy"` for the two largest classes.
/// Equal counts rank Core before Intermediate before Peripheral.
pub fn classify_network(t: &BinsFractionTuple) -> String {
    let mut classes = NodeClass::ALL;
    classes.sort_by(|a, b| t.count(*b).cmp(&t.count(*a)).then(a.cmp(b)));
    let top = classes[0];
    if 2 * t.count(top) >= t.total() {
        format!("{top}-heavy")
    } else {
        format!("{}/{}-heavy", top, classes[1])
    }
}

/// Orders records most-core first: descending angle, then descending
/// betweenness, then label.
pub fn rank_nodes(records: &mut [CipRecord]) {
    records.sort_by(|a, b| {
        b.angle_deg
            .total_cmp(&a.angle_deg)
            .then(b.bwc.total_cmp(&a.bwc))
            .then_with(|| label_order(&a.node, &b.node))
    });
}

/// Numeric comparison when both labels are integers, lexicographic
/// otherwise.
pub fn label_order(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.cmp(b),
    }
}
