//! Bars and barcodes, plus the plain-text barcode file format.
//!
//! A barcode file holds one bar per line as `<dim> <birth> <death>`, with
//! `inf` for an infinite death. Blank lines and lines starting with `#` are
//! ignored. Bars read from a file receive ids `0, 1, 2, ...` in line order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interval::{format_endpoint, parse_endpoint, Interval};

/// Identifier of a bar, unique within its barcode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarId(pub usize);

impl fmt::Display for BarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bar {
    pub id: BarId,
    pub dim: usize,
    pub interval: Interval,
}

impl Bar {
    #[inline]
    pub fn birth(&self) -> f64 {
        self.interval.birth()
    }

    #[inline]
    pub fn death(&self) -> f64 {
        self.interval.death()
    }
}

/// Total order on bars by `(dim, birth, death, id)`.
pub fn bar_order(a: &Bar, b: &Bar) -> Ordering {
    a.dim
        .cmp(&b.dim)
        .then(a.birth().total_cmp(&b.birth()))
        .then(a.death().total_cmp(&b.death()))
        .then(a.id.cmp(&b.id))
}

/// A finite multiset of bars, each tagged with a homology dimension.
///
/// Bars are stored sorted by id; the order carries no meaning beyond lookup.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Barcode {
    bars: Vec<Bar>,
}

impl Barcode {
    /// Builds a barcode assigning ids `0..n` in iteration order.
    pub fn new<I>(bars: I) -> Self
    where
        I: IntoIterator<Item = (usize, Interval)>,
    {
        let bars = bars
            .into_iter()
            .enumerate()
            .map(|(i, (dim, interval))| Bar {
                id: BarId(i),
                dim,
                interval,
            })
            .collect();
        Barcode { bars }
    }

    /// Sorts by `(dim, birth, death)` and then assigns ids `0..n`, so the
    /// barcode round-trips through its text form unchanged.
    pub fn canonical<I>(bars: I) -> Self
    where
        I: IntoIterator<Item = (usize, Interval)>,
    {
        let mut bars: Vec<(usize, Interval)> = bars.into_iter().collect();
        bars.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then(a.1.birth().total_cmp(&b.1.birth()))
                .then(a.1.death().total_cmp(&b.1.death()))
        });
        Barcode::new(bars)
    }

    /// Builds a barcode from bars with caller-chosen ids.
    pub fn from_bars(mut bars: Vec<Bar>) -> Result<Self> {
        bars.sort_by_key(|b| b.id);
        if let Some(w) = bars.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateBarId(w[0].id));
        }
        Ok(Barcode { bars })
    }

    pub fn empty() -> Self {
        Barcode::default()
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Bar> {
        self.bars.iter()
    }

    pub fn get(&self, id: BarId) -> Option<&Bar> {
        self.bars
            .binary_search_by_key(&id, |b| b.id)
            .ok()
            .map(|i| &self.bars[i])
    }

    pub fn contains_id(&self, id: BarId) -> bool {
        self.get(id).is_some()
    }

    pub fn ids(&self) -> impl Iterator<Item = BarId> + '_ {
        self.bars.iter().map(|b| b.id)
    }

    pub fn in_dim(&self, dim: usize) -> impl Iterator<Item = &Bar> + '_ {
        self.bars.iter().filter(move |b| b.dim == dim)
    }

    /// Sorted list of the dimensions that occur.
    pub fn dims(&self) -> Vec<usize> {
        let mut dims: Vec<usize> = self.bars.iter().map(|b| b.dim).collect();
        dims.sort_unstable();
        dims.dedup();
        dims
    }

    /// Keeps only the bars satisfying `keep`, preserving ids.
    pub fn filter<F>(&self, mut keep: F) -> Barcode
    where
        F: FnMut(&Bar) -> bool,
    {
        Barcode {
            bars: self.bars.iter().filter(|b| keep(b)).copied().collect(),
        }
    }

    /// Bars sorted by `(dim, birth, death, id)`.
    pub fn sorted_bars(&self) -> Vec<Bar> {
        let mut bars = self.bars.clone();
        bars.sort_by(bar_order);
        bars
    }

    /// Multiset of `(dim, interval)` pairs as a sorted list; two barcodes
    /// are equal as multisets iff these agree.
    pub fn multiset(&self) -> Vec<(usize, f64, f64)> {
        self.sorted_bars()
            .into_iter()
            .map(|b| (b.dim, b.birth(), b.death()))
            .collect()
    }

    pub fn same_multiset(&self, other: &Barcode) -> bool {
        self.multiset() == other.multiset()
    }

    /// Text form: one `<dim> <birth> <death>` line per bar, ordered by
    /// `(dim, birth, death, id)`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for bar in self.sorted_bars() {
            out.push_str(&format!(
                "{} {} {}\n",
                bar.dim,
                format_endpoint(bar.birth()),
                format_endpoint(bar.death())
            ));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut bars = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(err(format!(
                    "expected `<dim> <birth> <death>`, found {} fields",
                    fields.len()
                )));
            }
            let dim = fields[0]
                .parse::<usize>()
                .map_err(|_| err(format!("bad dimension `{}`", fields[0])))?;
            let birth = parse_endpoint(fields[1])
                .filter(|b| b.is_finite())
                .ok_or_else(|| err(format!("bad birth `{}`", fields[1])))?;
            let death = parse_endpoint(fields[2])
                .ok_or_else(|| err(format!("bad death `{}`", fields[2])))?;
            let interval = Interval::new(birth, death).map_err(|e| err(e.to_string()))?;
            bars.push((dim, interval));
        }
        Ok(Barcode::new(bars))
    }
}

impl FromStr for Barcode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Barcode::parse(s)
    }
}

impl<'a> IntoIterator for &'a Barcode {
    type Item = &'a Bar;
    type IntoIter = std::slice::Iter<'a, Bar>;

    fn into_iter(self) -> Self::IntoIter {
        self.bars.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(b: f64, d: f64) -> Interval {
        Interval::new(b, d).unwrap()
    }

    #[test]
    fn parse_skips_comments_and_blank_lines() {
        let text = "# header\n0 0 inf\n\n  0 1 2\n1 0.5 0.75\n";
        let barcode = Barcode::parse(text).unwrap();
        assert_eq!(barcode.len(), 3);
        assert_eq!(barcode.get(BarId(0)).unwrap().interval, iv(0.0, f64::INFINITY));
        assert_eq!(barcode.get(BarId(2)).unwrap().dim, 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Barcode::parse("0 0 1\n0 2 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(matches!(Barcode::parse("0 1").unwrap_err(), Error::Parse { line: 1, .. }));
        assert!(Barcode::parse("-1 0 1").is_err());
        assert!(Barcode::parse("0 inf inf").is_err());
    }

    #[test]
    fn text_is_sorted() {
        let barcode = Barcode::new([(1, iv(0.0, 1.0)), (0, iv(1.0, 2.0)), (0, iv(0.0, f64::INFINITY))]);
        assert_eq!(barcode.to_text(), "0 0 inf\n0 1 2\n1 0 1\n");
    }

    #[test]
    fn canonical_round_trips() {
        let barcode = Barcode::canonical([(0, iv(1.0, 2.0)), (0, iv(0.0, f64::INFINITY))]);
        assert_eq!(Barcode::parse(&barcode.to_text()).unwrap(), barcode);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let bar = Bar {
            id: BarId(3),
            dim: 0,
            interval: iv(0.0, 1.0),
        };
        assert_eq!(
            Barcode::from_bars(vec![bar, bar]).unwrap_err(),
            Error::DuplicateBarId(BarId(3))
        );
    }
}
