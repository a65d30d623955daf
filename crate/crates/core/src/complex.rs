//! Simplicial complexes, vertex functions and lower-star filtrations.
//!
//! Complex file: one simplex per line as whitespace-separated vertex
//! indices; every face of a listed simplex is added automatically.
//! Vertex-value file: one `<vertex-index> <value>` pair per line. Both
//! formats ignore blank lines and lines starting with `#`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};

/// A simplex as a strictly increasing list of vertex indices.
pub type Simplex = Vec<usize>;

/// A finite abstract simplicial complex, closed under taking faces.
///
/// Simplices are stored sorted by `(dimension, vertex list)`; a simplex is
/// addressed by its index in that order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
}

fn by_dim_then_lex(a: &Simplex, b: &Simplex) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl SimplicialComplex {
    /// Builds the downward closure of the given simplices. Vertex lists may
    /// be unsorted but must not repeat a vertex.
    pub fn from_simplices<I, S>(simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        let mut all: BTreeSet<Simplex> = BTreeSet::new();
        for s in simplices {
            let mut s = s.as_ref().to_vec();
            if s.is_empty() {
                return Err(Error::InvalidSimplex("empty simplex".into()));
            }
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidSimplex(format!("repeated vertex in {s:?}")));
            }
            if all.contains(&s) {
                continue;
            }
            add_faces(&s, &mut all);
        }
        let mut simplices: Vec<Simplex> = all.into_iter().collect();
        simplices.sort_by(by_dim_then_lex);
        let index = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(SimplicialComplex { simplices, index })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut simplices = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let simplex = line
                .split_whitespace()
                .map(|tok| tok.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Parse {
                    line: lineno + 1,
                    message: format!("expected vertex indices, found `{line}`"),
                })?;
            simplices.push(simplex);
        }
        SimplicialComplex::from_simplices(simplices).map_err(|e| match e {
            Error::InvalidSimplex(message) => Error::Parse { line: 0, message },
            other => other,
        })
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, idx: usize) -> &[usize] {
        &self.simplices[idx]
    }

    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        self.index.get(simplex).copied()
    }

    /// Dimension of the simplex at `idx`.
    pub fn dim_of(&self, idx: usize) -> usize {
        self.simplices[idx].len() - 1
    }

    /// Largest simplex dimension; 0 for the empty complex.
    pub fn dimension(&self) -> usize {
        self.simplices.last().map_or(0, |s| s.len() - 1)
    }

    /// Sorted vertex indices.
    pub fn vertices(&self) -> Vec<usize> {
        self.simplices
            .iter()
            .take_while(|s| s.len() == 1)
            .map(|s| s[0])
            .collect()
    }

    /// Indices of the simplices of dimension `dim`, in `(dim, lex)` order.
    pub fn of_dim(&self, dim: usize) -> std::ops::Range<usize> {
        let start = self.simplices.partition_point(|s| s.len() < dim + 1);
        let end = self.simplices.partition_point(|s| s.len() < dim + 2);
        start..end
    }

    /// Indices of the codimension-one faces of the simplex at `idx`.
    pub fn boundary(&self, idx: usize) -> Vec<usize> {
        let s = &self.simplices[idx];
        if s.len() == 1 {
            return Vec::new();
        }
        (0..s.len())
            .map(|skip| {
                let face: Simplex = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                self.index[&face]
            })
            .collect()
    }
}

fn add_faces(s: &[usize], all: &mut BTreeSet<Simplex>) {
    if !all.insert(s.to_vec()) || s.len() == 1 {
        return;
    }
    for skip in 0..s.len() {
        let face: Simplex = s
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect();
        add_faces(&face, all);
    }
}

/// Real values on vertices.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VertexFunction {
    values: BTreeMap<usize, f64>,
}

impl VertexFunction {
    pub fn new<I>(values: I) -> Self
    where
        I: IntoIterator<Item = (usize, f64)>,
    {
        VertexFunction {
            values: values.into_iter().collect(),
        }
    }

    /// Values for vertices `0, 1, 2, ...` in order.
    pub fn from_slice(values: &[f64]) -> Self {
        VertexFunction::new(values.iter().copied().enumerate())
    }

    pub fn get(&self, vertex: usize) -> Option<f64> {
        self.values.get(&vertex).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.values.iter().map(|(&v, &x)| (v, x))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
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
            let [vertex, value] = fields[..] else {
                return Err(err(format!("expected `<vertex> <value>`, found `{line}`")));
            };
            let vertex = vertex
                .parse::<usize>()
                .map_err(|_| err(format!("bad vertex index `{vertex}`")))?;
            let value = value
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| err(format!("bad value `{value}`")))?;
            if values.insert(vertex, value).is_some() {
                return Err(err(format!("vertex {vertex} given twice")));
            }
        }
        Ok(VertexFunction { values })
    }

    /// Lower-star value of a simplex: the maximum over its vertices.
    pub fn simplex_value(&self, simplex: &[usize]) -> Result<f64> {
        simplex.iter().try_fold(f64::NEG_INFINITY, |acc, &v| {
            self.get(v)
                .map(|x| acc.max(x))
                .ok_or(Error::MissingVertexValue(v))
        })
    }
}

/// Checks `upper(v) >= lower(v)` on every vertex of `complex`.
pub fn check_bounds(
    complex: &SimplicialComplex,
    upper: &VertexFunction,
    lower: &VertexFunction,
) -> Result<()> {
    let mut violations = Vec::new();
    for v in complex.vertices() {
        let hi = upper.get(v).ok_or(Error::MissingVertexValue(v))?;
        let lo = lower.get(v).ok_or(Error::MissingVertexValue(v))?;
        if hi < lo {
            violations.push(v);
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::BoundViolation(violations))
    }
}

/// How simplices with equal values are ordered. Both policies put faces
/// before cofaces and yield the same barcodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// `(value, dimension, vertex list)`.
    #[default]
    Lexicographic,
    /// `(value, dimension, reversed vertex-list order)`.
    ReverseLexicographic,
}

/// Lower-star filtration of a complex by a vertex function.
#[derive(Debug, Clone)]
pub struct Filtration<'a> {
    complex: &'a SimplicialComplex,
    values: Vec<f64>,
    order: Vec<usize>,
    position: Vec<usize>,
}

impl<'a> Filtration<'a> {
    pub fn new(complex: &'a SimplicialComplex, f: &VertexFunction, tie: TieBreak) -> Result<Self> {
        let values = complex
            .simplices()
            .iter()
            .map(|s| f.simplex_value(s))
            .collect::<Result<Vec<f64>>>()?;
        let mut order: Vec<usize> = (0..complex.len()).collect();
        order.sort_by(|&a, &b| {
            values[a]
                .total_cmp(&values[b])
                .then(complex.dim_of(a).cmp(&complex.dim_of(b)))
                .then_with(|| match tie {
                    TieBreak::Lexicographic => a.cmp(&b),
                    TieBreak::ReverseLexicographic => b.cmp(&a),
                })
        });
        let mut position = vec![0; order.len()];
        for (pos, &idx) in order.iter().enumerate() {
            position[idx] = pos;
        }
        Ok(Filtration {
            complex,
            values,
            order,
            position,
        })
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    /// Value of the simplex at index `idx`.
    pub fn value(&self, idx: usize) -> f64 {
        self.values[idx]
    }

    /// Simplex indices in filtration order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of the simplex at `idx` in filtration order.
    pub fn position(&self, idx: usize) -> usize {
        self.position[idx]
    }

    /// Simplices of dimension `dim` in filtration order.
    pub fn of_dim(&self, dim: usize) -> Vec<usize> {
        self.order
            .iter()
            .copied()
            .filter(|&i| self.complex.dim_of(i) == dim)
            .collect()
    }
}

/// Lower-star filtration with the default tie-break.
pub fn build_filtration<'a>(
    complex: &'a SimplicialComplex,
    f: &VertexFunction,
) -> Result<Filtration<'a>> {
    Filtration::new(complex, f, TieBreak::default())
}
