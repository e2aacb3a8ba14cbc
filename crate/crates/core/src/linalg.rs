//! Dense exact linear algebra over a field.

use crate::field::Field;

/// A growing set of linearly independent vectors kept in echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// `v` reduced against the stored rows.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        debug_assert_eq!(v.len(), self.dim);
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (k, r) in row.iter().enumerate().skip(*p) {
                if !r.is_zero() {
                    v[k] = v[k].sub(&c.mul(r));
                }
            }
        }
        v
    }

    /// Adds `v` if it is independent of the stored rows; reports whether it was.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        // Keep earlier rows reduced at the new pivot so `reduce` stays a
        // single pass in insertion order.
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (k, x) in v.iter().enumerate().skip(p) {
                    if !x.is_zero() {
                        row[k] = row[k].sub(&c.mul(x));
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: Vec<F>) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank<F: Field>(dim: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> usize {
    let mut e = Echelon::new(dim);
    for v in vectors {
        e.insert(v);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// Basis of the null space `{a : sum_k a_k * cols[k] = 0}` for column
/// vectors of length `rows`.
pub fn kernel<F: Field>(rows: usize, cols: &[Vec<F>]) -> Vec<Vec<F>> {
    let c = cols.len();
    // Row-major copy of the matrix.
    let mut m: Vec<Vec<F>> = (0..rows)
        .map(|i| cols.iter().map(|col| col[i].clone()).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..c {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][col].inv();
        for x in m[r].iter_mut().skip(col) {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (k, x) in pivot_row.iter().enumerate().skip(col) {
                if !x.is_zero() {
                    row[k] = row[k].sub(&f.mul(x));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let mut is_pivot = vec![false; c];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..c).filter(|&k| !is_pivot[k]) {
        let mut v = vec![F::zero(); c];
        v[free] = F::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = m[i][free].neg();
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn q(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| Q::from_i64(x)).collect()
    }

    #[test]
    fn echelon_detects_dependence() {
        let mut e = Echelon::new(3);
        assert!(e.insert(q(&[1, 2, 3])));
        assert!(e.insert(q(&[0, 1, 1])));
        assert!(!e.insert(q(&[2, 5, 7])));
        assert!(e.contains(q(&[1, 3, 4])));
        assert!(e.insert(q(&[0, 0, 5])));
        assert!(e.is_full());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let cols = vec![q(&[1, 0]), q(&[0, 1]), q(&[1, 1]), q(&[2, 0])];
        let ker = kernel(2, &cols);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in 0..2 {
                let s = cols
                    .iter()
                    .zip(v)
                    .fold(Q::zero(), |acc, (c, a)| acc.add(&c[row].mul(a)));
                assert!(s.is_zero());
            }
        }
        assert_eq!(rank(4, ker), 2);
    }
}
