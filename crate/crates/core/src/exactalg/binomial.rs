use num_traits::Zero;

use super::{factorial, int, is_integer, Poly, Rational};

/// `(t + shift)(t + shift - 1)...(t + shift - k + 1)`.
pub fn falling_factorial(shift: i64, k: usize) -> Poly {
    (0..k as i64).map(|j| Poly::t_plus(shift - j)).product()
}

/// `binom(t + shift, k)` as a polynomial in `t`.
pub fn binomial_poly(shift: i64, k: usize) -> Poly {
    falling_factorial(shift, k).scale(&Rational::new(1.into(), factorial(k as u64)))
}

/// `binom(g(t), k)` for a polynomial argument.
pub fn binomial_of(g: &Poly, k: usize) -> Poly {
    let num: Poly = (0..k as i64)
        .map(|j| g - &Poly::constant(int(j)))
        .product();
    num.scale(&Rational::new(1.into(), factorial(k as u64)))
}

/// A polynomial written as `sum_j c_j * binom(t, j)`.
///
/// The coefficients are the forward differences of the polynomial at `t = 0`,
/// so the polynomial is integer-valued exactly when every `c_j` is an integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BinomialPoly {
    coeffs: Vec<Rational>,
}

impl BinomialPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BinomialPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Converts from the monomial basis via the forward-difference table of
    /// the values at `t = 0, ..., deg`.
    pub fn from_monomial(p: &Poly) -> Self {
        let Some(deg) = p.degree() else {
            return BinomialPoly::default();
        };
        let mut diffs: Vec<Rational> = (0..=deg as i64).map(|n| p.eval_int(n)).collect();
        let mut out = Vec::with_capacity(deg + 1);
        for _ in 0..=deg {
            out.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        BinomialPoly::from_coeffs(out)
    }

    pub fn to_monomial(&self) -> Poly {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| binomial_poly(0, j).scale(c))
            .sum()
    }

    /// Index and value of the first non-integer coefficient, if any.
    pub fn first_fractional(&self) -> Option<(usize, &Rational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !is_integer(c))
    }

    pub fn is_integral(&self) -> bool {
        self.first_fractional().is_none()
    }
}

/// `binom(t,2) - binom(t,1)` style rendering.
impl std::fmt::Display for BinomialPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use num_traits::{One, Signed};
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sep}binom(t,{j})")?;
            } else {
                write!(f, "{sep}{mag}*binom(t,{j})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Monomial to binomial basis conversion.
pub fn to_binomial_basis(p: &Poly) -> BinomialPoly {
    BinomialPoly::from_monomial(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    #[test]
    fn binomial_poly_examples() {
        assert_eq!(binomial_poly(0, 2), Poly::from_coeffs(vec![rat(0, 1), rat(-1, 2), rat(1, 2)]));
        assert_eq!(binomial_poly(-1, 1), Poly::t_plus(-1));
        assert_eq!(binomial_poly(0, 0), Poly::one());
    }

    #[test]
    fn binomial_basis_examples() {
        assert_eq!(to_binomial_basis(&Poly::one()).coeffs(), &[int(1)]);
        assert_eq!(
            to_binomial_basis(&binomial_poly(0, 2)).coeffs(),
            &[int(0), int(0), int(1)]
        );
        let t2 = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(to_binomial_basis(&t2).coeffs(), &[int(0), int(1), int(2)]);
        assert!(to_binomial_basis(&Poly::zero()).coeffs().is_empty());
    }

    #[test]
    fn fractional_coefficient_detected() {
        let half_t = Poly::t().scale(&rat(1, 2));
        let b = to_binomial_basis(&half_t);
        assert_eq!(b.first_fractional(), Some((1, &rat(1, 2))));
    }

    #[test]
    fn binomial_of_linear_argument() {
        assert_eq!(binomial_of(&Poly::t_plus(-3), 4), binomial_poly(-3, 4));
    }

    #[test]
    fn display() {
        let b = to_binomial_basis(&Poly::from_coeffs(vec![rat(0, 1), rat(-3, 2), rat(1, 2)]));
        assert_eq!(b.to_string(), "binom(t,2) - binom(t,1)");
    }
}
