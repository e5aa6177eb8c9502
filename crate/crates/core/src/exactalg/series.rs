use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::{binomial_of, factorial, Poly, Rational};
use crate::error::{Error, Result};

/// Truncated power series in several commuting variables with coefficients
/// in `Q[t]`.
///
/// Each variable carries its own truncation degree; terms whose exponent
/// exceeds a bound are never stored. Binary operations truncate to the
/// componentwise minimum of the operands' bounds, so every stored
/// coefficient is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    bounds: Vec<u32>,
    terms: HashMap<Vec<u32>, Poly>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesFn {
    /// `exp(h)`; `h` must have zero constant term.
    Exp,
    /// `log(h)`; `h` must have constant term 1.
    Log,
    /// `h^g(t)` for a polynomial exponent `g`; `h` must have constant term 1.
    PowT,
}

impl Series {
    pub fn zero(bounds: Vec<u32>) -> Self {
        assert!(!bounds.is_empty(), "a series needs at least one variable");
        Series {
            bounds,
            terms: HashMap::new(),
        }
    }

    pub fn constant(bounds: Vec<u32>, c: Poly) -> Self {
        let n = bounds.len();
        Series::monomial(bounds, vec![0; n], c)
    }

    pub fn one(bounds: Vec<u32>) -> Self {
        Series::constant(bounds, Poly::one())
    }

    /// `c * u^exponent`, or zero when the exponent is out of bounds.
    pub fn monomial(bounds: Vec<u32>, exponent: Vec<u32>, c: Poly) -> Self {
        let mut s = Series::zero(bounds);
        assert_eq!(exponent.len(), s.bounds.len());
        if !c.is_zero() && s.in_bounds(&exponent) {
            s.terms.insert(exponent, c);
        }
        s
    }

    /// Univariate series `sum_k coeffs[k] x^k` truncated at `bound`.
    pub fn univariate(bound: u32, coeffs: &[Rational]) -> Self {
        let mut s = Series::zero(vec![bound]);
        for (k, c) in coeffs.iter().enumerate().take(bound as usize + 1) {
            s.add_term(vec![k as u32], Poly::constant(c.clone()));
        }
        s
    }

    pub fn variable_count(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Poly)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Terms sorted by exponent, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(&[u32], &Poly)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn in_bounds(&self, exponent: &[u32]) -> bool {
        exponent.len() == self.bounds.len()
            && exponent.iter().zip(&self.bounds).all(|(e, b)| e <= b)
    }

    /// Adds `c * u^exponent` in place; out-of-bounds terms are dropped.
    pub fn add_term(&mut self, exponent: Vec<u32>, c: Poly) {
        if c.is_zero() || !self.in_bounds(&exponent) {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Exact coefficient of `u^exponent`.
    pub fn coefficient(&self, exponent: &[u32]) -> Result<Poly> {
        if !self.in_bounds(exponent) {
            return Err(Error::OutOfBounds {
                exponent: exponent.to_vec(),
                bounds: self.bounds.clone(),
            });
        }
        Ok(self.terms.get(exponent).cloned().unwrap_or_else(Poly::zero))
    }

    pub fn constant_term(&self) -> Poly {
        self.terms
            .get(&vec![0; self.bounds.len()])
            .cloned()
            .unwrap_or_else(Poly::zero)
    }

    pub fn truncate(&self, bounds: &[u32]) -> Series {
        assert_eq!(bounds.len(), self.bounds.len());
        let bounds: Vec<u32> = bounds.iter().zip(&self.bounds).map(|(a, b)| *a.min(b)).collect();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().zip(&bounds).all(|(x, b)| x <= b))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Series { bounds, terms }
    }

    fn common_bounds(&self, other: &Series) -> Vec<u32> {
        assert_eq!(
            self.bounds.len(),
            other.bounds.len(),
            "series with different variable counts"
        );
        self.bounds
            .iter()
            .zip(&other.bounds)
            .map(|(a, b)| *a.min(b))
            .collect()
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut out = self.truncate(&self.common_bounds(other));
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            bounds: self.bounds.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Poly) -> Series {
        let mut out = Series::zero(self.bounds.clone());
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &Series) -> Series {
        let bounds = self.common_bounds(other);
        let mut out = Series::zero(bounds);
        let mut exp = vec![0u32; out.bounds.len()];
        for (ea, ca) in &self.terms {
            if !ea.iter().zip(&out.bounds).all(|(x, b)| x <= b) {
                continue;
            }
            'inner: for (eb, cb) in &other.terms {
                for (k, slot) in exp.iter_mut().enumerate() {
                    let s = ea[k] + eb[k];
                    if s > out.bounds[k] {
                        continue 'inner;
                    }
                    *slot = s;
                }
                out.add_term(exp.clone(), ca * cb);
            }
        }
        out
    }

    /// The single coefficient `[u^exponent] (a * b)` without forming the
    /// product.
    pub fn coefficient_of_product(a: &Series, b: &Series, exponent: &[u32]) -> Result<Poly> {
        let bounds = a.common_bounds(b);
        if exponent.len() != bounds.len() || exponent.iter().zip(&bounds).any(|(e, b)| e > b) {
            return Err(Error::OutOfBounds {
                exponent: exponent.to_vec(),
                bounds,
            });
        }
        let mut acc = Poly::zero();
        let mut rest = vec![0u32; exponent.len()];
        'outer: for (ea, ca) in &a.terms {
            for k in 0..exponent.len() {
                match exponent[k].checked_sub(ea[k]) {
                    Some(r) => rest[k] = r,
                    None => continue 'outer,
                }
            }
            if let Some(cb) = b.terms.get(&rest) {
                acc = &acc + &(ca * cb);
            }
        }
        Ok(acc)
    }

    pub fn pow_int(&self, n: u32) -> Series {
        (0..n).fold(Series::one(self.bounds.clone()), |acc, _| acc.mul(self))
    }

    /// Specializes `t` to an integer; coefficients become constants.
    pub fn eval_t(&self, n: i64) -> Series {
        let mut out = Series::zero(self.bounds.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), Poly::constant(c.eval_int(n)));
        }
        out
    }

    fn max_total_degree(&self) -> u32 {
        self.bounds.iter().sum()
    }
}

/// `exp`, `log`, or `h^g(t)` of a truncated series, computed from the
/// nilpotent part `h - h(0)`: every power series in it terminates once the
/// power exceeds the total truncation degree.
pub fn series_exp_log_pow(h: &Series, mode: SeriesFn, exponent: &Poly) -> Result<Series> {
    let c0 = h.constant_term();
    let expected = match mode {
        SeriesFn::Exp => Poly::zero(),
        SeriesFn::Log | SeriesFn::PowT => Poly::one(),
    };
    if c0 != expected {
        return Err(Error::BadConstantTerm {
            expected: if mode == SeriesFn::Exp { "0" } else { "1" },
            found: c0.to_string(),
        });
    }
    let bounds = h.bounds.clone();
    let nilpotent = h.sub(&Series::constant(bounds.clone(), c0));
    let mut out = match mode {
        SeriesFn::Log => Series::zero(bounds.clone()),
        SeriesFn::Exp | SeriesFn::PowT => Series::one(bounds.clone()),
    };
    let mut power = Series::one(bounds);
    for k in 1..=h.max_total_degree() as usize {
        power = power.mul(&nilpotent);
        if power.is_zero() {
            break;
        }
        let c = match mode {
            SeriesFn::Exp => Poly::constant(Rational::new(1.into(), factorial(k as u64))),
            SeriesFn::Log => {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                Poly::constant(Rational::new(sign.into(), (k as i64).into()))
            }
            SeriesFn::PowT => binomial_of(exponent, k),
        };
        out = out.add(&power.scale(&c));
    }
    Ok(out)
}

impl Series {
    /// `true` iff every coefficient is a constant polynomial equal to the
    /// corresponding coefficient of `other`.
    pub fn same_terms(&self, other: &Series) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .all(|(e, c)| other.terms.get(e).is_some_and(|d| d == c))
    }
}
