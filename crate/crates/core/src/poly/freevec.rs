use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::field::Field;

use super::polynomial::Polynomial;
use super::universe::VarUniverse;

/// An element of a free module whose basis is indexed by labels `L`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeVector<F: Field, L: Ord + Clone> {
    uni: Arc<VarUniverse>,
    coords: BTreeMap<L, Polynomial<F>>,
}

impl<F: Field, L: Ord + Clone> FreeVector<F, L> {
    pub fn zero(uni: &Arc<VarUniverse>) -> Self {
        FreeVector {
            uni: uni.clone(),
            coords: BTreeMap::new(),
        }
    }

    pub fn from_coords(
        uni: &Arc<VarUniverse>,
        coords: impl IntoIterator<Item = (L, Polynomial<F>)>,
    ) -> Self {
        let mut v = Self::zero(uni);
        for (l, p) in coords {
            v.add_at(l, &p);
        }
        v
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        &self.uni
    }

    pub fn add_at(&mut self, label: L, p: &Polynomial<F>) {
        if p.is_zero() {
            return;
        }
        let sum = match self.coords.get(&label) {
            Some(q) => q + p,
            None => p.clone(),
        };
        if sum.is_zero() {
            self.coords.remove(&label);
        } else {
            self.coords.insert(label, sum);
        }
    }

    pub fn get(&self, label: &L) -> Option<&Polynomial<F>> {
        self.coords.get(label)
    }

    pub fn coords(&self) -> impl Iterator<Item = (&L, &Polynomial<F>)> {
        self.coords.iter()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, p) in &other.coords {
            out.add_at(l.clone(), p);
        }
        out
    }

    pub fn neg(&self) -> Self {
        FreeVector {
            uni: self.uni.clone(),
            coords: self.coords.iter().map(|(l, p)| (l.clone(), -p)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, p: &Polynomial<F>) -> Self {
        Self::from_coords(
            &self.uni,
            self.coords.iter().map(|(l, q)| (l.clone(), p * q)),
        )
    }

    /// Relabels the basis; coefficients of labels that collide are summed.
    pub fn map_labels<M: Ord + Clone>(&self, f: impl Fn(&L) -> (M, bool)) -> FreeVector<F, M> {
        let mut out = FreeVector::zero(&self.uni);
        for (l, p) in &self.coords {
            let (m, negate) = f(l);
            if negate {
                out.add_at(m, &-p);
            } else {
                out.add_at(m, p);
            }
        }
        out
    }

    /// The image `sum_l coord_l * image(l)` under a module map to the ring.
    pub fn apply(&self, image: impl Fn(&L) -> Polynomial<F>) -> Polynomial<F> {
        self.coords
            .iter()
            .fold(Polynomial::zero(&self.uni), |acc, (l, p)| {
                &acc + &(p * &image(l))
            })
    }

    /// Graded degree when `label_degree(l) + deg(coord_l)` is constant over
    /// all coordinates and each coordinate is homogeneous.
    pub fn degree(&self, label_degree: impl Fn(&L) -> u32) -> Option<u32> {
        let mut d = None;
        for (l, p) in &self.coords {
            let e = p.homogeneous_degree()? + label_degree(l);
            match d {
                None => d = Some(e),
                Some(x) if x != e => return None,
                _ => {}
            }
        }
        d
    }
}

impl<F: Field, L: Ord + Clone + fmt::Display> fmt::Display for FreeVector<F, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|(l, p)| format!("{l} <- {p}"))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

impl<F: Field, L: Ord + Clone + fmt::Display> fmt::Debug for FreeVector<F, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn zero_coordinates_are_dropped() {
        let u = VarUniverse::standard(2);
        let x = Polynomial::<Q>::x(&u, 1);
        let mut v: FreeVector<Q, u8> = FreeVector::zero(&u);
        v.add_at(1, &x);
        v.add_at(1, &-&x);
        assert!(v.is_zero());
        v.add_at(2, &x);
        assert_eq!(v.degree(|_| 2), Some(3));
        assert_eq!(v.apply(|_| Polynomial::y(&u, 1)).to_string(), "x1*y1");
        assert_eq!(v.to_string(), "2 <- x1");
    }
}
