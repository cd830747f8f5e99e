//! Sparse multivariate polynomials in the monomial basis, for writing
//! closed-form test geometry.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::bernstein::{BernsteinPoly, PolyError};
use crate::geometry::HyperRect;

/// Sparse power-basis polynomial with `f64` coefficients keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerPoly {
    dim: usize,
    terms: BTreeMap<Vec<usize>, f64>,
}

impl PowerPoly {
    pub fn zero(dim: usize) -> Self {
        PowerPoly { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: f64) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(vec![0; dim], c);
        p
    }

    /// The coordinate `x_k`.
    pub fn var(dim: usize, k: usize) -> Self {
        assert!(k < dim, "variable index out of range");
        let mut e = vec![0; dim];
        e[k] = 1;
        let mut p = Self::zero(dim);
        p.add_term(e, 1.0);
        p
    }

    /// All coordinates `x_0, ..., x_{dim-1}`.
    pub fn vars(dim: usize) -> Vec<Self> {
        (0..dim).map(|k| Self::var(dim, k)).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_term(&mut self, exponent: Vec<usize>, c: f64) {
        assert_eq!(exponent.len(), self.dim);
        let v = self.terms.entry(exponent).or_insert(0.0);
        *v += c;
        if *v == 0.0 {
            self.terms.retain(|_, v| *v != 0.0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut p = Self::zero(self.dim);
        for (e, &c) in &self.terms {
            p.add_term(e.clone(), c * s);
        }
        p
    }

    pub fn powi(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(self.dim, 1.0), |acc, _| &acc * self)
    }

    /// Highest exponent per axis.
    pub fn degree(&self) -> Vec<usize> {
        let mut deg = vec![0; self.dim];
        for e in self.terms.keys() {
            for (d, &k) in deg.iter_mut().zip(e) {
                *d = (*d).max(k);
            }
        }
        deg
    }

    /// Dense coefficient tensor over `degree()`, axis 0 fastest.
    pub fn dense(&self) -> Vec<f64> {
        let deg = self.degree();
        let size: usize = deg.iter().map(|n| n + 1).product();
        let mut out = vec![0.0; size];
        for (e, &c) in &self.terms {
            let mut flat = 0;
            let mut stride = 1;
            for (k, &i) in e.iter().enumerate() {
                flat += i * stride;
                stride *= deg[k] + 1;
            }
            out[flat] += c;
        }
        out
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dim);
        self.terms.iter().map(|(e, &c)| c * e.iter().zip(x).map(|(&k, &v)| v.powi(k as i32)).product::<f64>()).sum()
    }

    pub fn to_bernstein(&self, domain: HyperRect<f64>) -> Result<BernsteinPoly<f64>, PolyError> {
        BernsteinPoly::from_power(self.degree(), domain, &self.dense())
    }
}

impl Add for &PowerPoly {
    type Output = PowerPoly;
    fn add(self, rhs: &PowerPoly) -> PowerPoly {
        assert_eq!(self.dim, rhs.dim);
        let mut p = self.clone();
        for (e, &c) in &rhs.terms {
            p.add_term(e.clone(), c);
        }
        p
    }
}

impl Sub for &PowerPoly {
    type Output = PowerPoly;
    fn sub(self, rhs: &PowerPoly) -> PowerPoly {
        self + &(-rhs)
    }
}

impl Neg for &PowerPoly {
    type Output = PowerPoly;
    fn neg(self) -> PowerPoly {
        self.scale(-1.0)
    }
}

impl Mul for &PowerPoly {
    type Output = PowerPoly;
    fn mul(self, rhs: &PowerPoly) -> PowerPoly {
        assert_eq!(self.dim, rhs.dim);
        let mut p = PowerPoly::zero(self.dim);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                p.add_term(a.iter().zip(b).map(|(i, j)| i + j).collect(), ca * cb);
            }
        }
        p
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for PowerPoly {
            type Output = PowerPoly;
            fn $f(self, rhs: PowerPoly) -> PowerPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<f64> for PowerPoly {
            type Output = PowerPoly;
            fn $f(self, rhs: f64) -> PowerPoly {
                let c = PowerPoly::constant(self.dim, rhs);
                (&self).$f(&c)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for PowerPoly {
    type Output = PowerPoly;
    fn neg(self) -> PowerPoly {
        self.scale(-1.0)
    }
}
