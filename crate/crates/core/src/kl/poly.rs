use std::fmt;

/// Integer polynomial in `q`, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KLPolynomial {
    coeffs: Vec<i64>,
}

impl KLPolynomial {
    pub fn zero() -> Self {
        KLPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KLPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        KLPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add_assign_shifted(&mut self, other: &KLPolynomial, shift: usize, scale: i64) {
        if other.is_zero() || scale == 0 {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() + shift {
            self.coeffs.resize(other.coeffs.len() + shift, 0);
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[k + shift] += scale * c;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn mul(&self, other: &KLPolynomial) -> KLPolynomial {
        if self.is_zero() || other.is_zero() {
            return KLPolynomial::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        KLPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for KLPolynomial {
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
                write!(f, "{}", if c < 0 { "-" } else { "+" })?;
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
