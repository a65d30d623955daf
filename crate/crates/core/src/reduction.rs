//! Sparse column reduction over GF(2).
//!
//! A column is a strictly increasing list of row indices; its low is the
//! last entry. Columns are reduced in the order they are pushed.

/// Symmetric difference of two sorted columns.
pub fn add_columns(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Left-to-right reduction with a low-to-column lookup table.
#[derive(Debug, Clone, Default)]
pub struct Reducer {
    reduced: Vec<Vec<usize>>,
    column_with_low: Vec<Option<usize>>,
}

impl Reducer {
    /// A reducer for columns whose entries are below `n_rows`.
    pub fn new(n_rows: usize) -> Self {
        Reducer {
            reduced: Vec::new(),
            column_with_low: vec![None; n_rows],
        }
    }

    /// Reduces `column` against the columns pushed so far and returns its
    /// low, or `None` if it reduces to zero.
    pub fn push(&mut self, mut column: Vec<usize>) -> Option<usize> {
        debug_assert!(column.windows(2).all(|w| w[0] < w[1]));
        while let Some(&low) = column.last() {
            match self.column_with_low[low] {
                Some(c) => column = add_columns(&column, &self.reduced[c]),
                None => break,
            }
        }
        let low = column.last().copied();
        if let Some(low) = low {
            self.column_with_low[low] = Some(self.reduced.len());
            self.reduced.push(column);
        }
        low
    }

    /// Whether some reduced column has its low at `row`.
    pub fn is_pivot(&self, row: usize) -> bool {
        self.column_with_low[row].is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_difference() {
        assert_eq!(add_columns(&[0, 2, 5], &[2, 3, 5, 7]), vec![0, 3, 7]);
        assert_eq!(add_columns(&[1], &[1]), Vec::<usize>::new());
    }

    #[test]
    fn triangle_boundary() {
        // rows: vertices 0,1,2; columns: edges 01, 02, 12
        let mut r = Reducer::new(3);
        assert_eq!(r.push(vec![0, 1]), Some(1));
        assert_eq!(r.push(vec![0, 2]), Some(2));
        assert_eq!(r.push(vec![1, 2]), None);
        assert!(r.is_pivot(1) && r.is_pivot(2) && !r.is_pivot(0));
    }
}
