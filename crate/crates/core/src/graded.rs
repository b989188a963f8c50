use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer polynomial in `q`, where `q^k` counts cells of complex dimension
/// `k` (topological degree `2k`, so `q` plays the role of `t^2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GradedPoly {
    coeffs: Vec<i64>,
}

impl GradedPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        GradedPoly { coeffs }
    }

    /// Builds the count polynomial of a list of degrees.
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut coeffs = Vec::new();
        for d in degrees {
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        GradedPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// One cell in each dimension `0..=n`.
    pub fn is_chain(&self) -> bool {
        !self.coeffs.is_empty() && self.coeffs.iter().all(|&c| c == 1)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `q^k * self`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        GradedPoly::new(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        GradedPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{a}q^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_predicates() {
        let p = GradedPoly::new(vec![1, 1, 1, 0, 0]);
        assert_eq!(p.coeffs(), &[1, 1, 1]);
        assert!(p.is_chain());
        assert!(p.is_palindromic());
        let q = GradedPoly::new(vec![1, 2, 3, 3, 2, 1]);
        assert!(!q.is_chain());
        assert!(q.is_palindromic());
        let r = GradedPoly::new(vec![1, 1, 2, 3]);
        assert!(!r.is_palindromic());
        assert!(!GradedPoly::default().is_chain());
    }

    #[test]
    fn display() {
        assert_eq!(GradedPoly::new(vec![1, 1, 2]).to_string(), "1 + q + 2q^2");
        assert_eq!(GradedPoly::new(vec![0, 1]).to_string(), "q");
        assert_eq!(GradedPoly::default().to_string(), "0");
    }

    #[test]
    fn shift_and_add() {
        let p = GradedPoly::from_degrees([0, 1, 1, 2]);
        assert_eq!(p.coeffs(), &[1, 2, 1]);
        assert_eq!(
            p.shifted(1).add(&GradedPoly::new(vec![1])).coeffs(),
            &[1, 1, 2, 1]
        );
    }
}
