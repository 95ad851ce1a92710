//! Gaussian elimination over GF(q).

use crate::field::{Field, FieldElement};

pub type Matrix = Vec<Vec<FieldElement>>;

/// Reduced row echelon form: the nonzero rows and their pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn row_reduce(field: &Field, matrix: &[Vec<FieldElement>]) -> Echelon {
    let mut rows: Matrix = matrix.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = field.inv(rows[rank][col]).expect("pivot is nonzero");
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, p));
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Echelon { rows, pivots }
}

pub fn rank(field: &Field, matrix: &[Vec<FieldElement>]) -> usize {
    row_reduce(field, matrix).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let f = Field::new(5).unwrap();
        let e = |i| f.element(i).unwrap();
        assert_eq!(rank(&f, &[]), 0);
        assert_eq!(rank(&f, &[vec![e(0), e(0)]]), 0);
        let m = vec![
            vec![e(1), e(2), e(3)],
            vec![e(2), e(4), e(2)],
            vec![e(3), e(1), e(0)],
        ];
        // row3 = row1 + row2
        assert_eq!(rank(&f, &m), 2);
        let ech = row_reduce(&f, &m);
        assert_eq!(ech.pivots, vec![0, 2]);
        assert_eq!(ech.rows[0][0], f.one());
        assert_eq!(ech.rows[1][0], f.zero());
    }
}
