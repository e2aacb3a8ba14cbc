use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

pub type Exps = SmallVec<[u16; 32]>;

/// A monomial as a dense exponent vector over a universe, with its total
/// degree and a 64-bit support mask cached for fast divisibility tests.
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: Exps,
    deg: u32,
    mask: u64,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

fn mask_of(exps: &[u16]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
            mask: 0,
        }
    }

    pub fn from_exps(exps: Exps) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        let mask = mask_of(&exps);
        Monomial { exps, deg, mask }
    }

    pub fn from_slice(exps: &[u16]) -> Self {
        Self::from_exps(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, idx: usize, exp: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[idx] = exp;
        m.deg = exp as u32;
        if exp > 0 {
            m.mask = 1 << (idx % 64);
        }
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, idx: usize) -> u16 {
        self.exps[idx]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Indices of the variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg
            && self.mask & !other.mask == 0
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exps = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial::from_exps(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exps(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::from_exps(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.mask & other.mask == 0 {
            return true;
        }
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponent vector re-indexed into another universe. `map[i]` is the
    /// target index of source variable `i`; `None` requires a zero exponent.
    pub(crate) fn remap(&self, map: &[Option<usize>], target_len: usize) -> Option<Monomial> {
        let mut exps: Exps = SmallVec::from_elem(0, target_len);
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            exps[map[i]?] = e;
        }
        Some(Monomial::from_exps(exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let a = Monomial::from_slice(&[1, 0, 2]);
        let b = Monomial::from_slice(&[1, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b).unwrap(), Monomial::from_slice(&[0, 1, 1]));
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.gcd(&b), a);
    }

    #[test]
    fn coprimality() {
        let a = Monomial::from_slice(&[1, 0, 0]);
        let b = Monomial::from_slice(&[0, 2, 1]);
        assert!(a.is_coprime(&b));
        assert!(!b.is_coprime(&b));
    }

    #[test]
    fn mask_survives_more_than_64_variables() {
        let mut e = vec![0u16; 70];
        e[66] = 1;
        let a = Monomial::from_slice(&e);
        let mut f = vec![0u16; 70];
        f[2] = 1;
        let b = Monomial::from_slice(&f);
        // Same mask bit, different variables.
        assert!(!a.divides(&b));
        assert!(!a.is_coprime(&a));
        assert!(a.is_coprime(&b));
    }
}
