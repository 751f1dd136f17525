//! Ordered parameter scans over the local dimension.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// Odd dimensions in `[min, max]`, optionally restricted to primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimRange {
    pub min: usize,
    pub max: usize,
    pub prime_only: bool,
}

impl DimRange {
    pub fn new(min: usize, max: usize, prime_only: bool) -> Self {
        Self {
            min,
            max,
            prime_only,
        }
    }

    pub fn dims(&self) -> Result<Vec<usize>> {
        let start = self.min.max(3) | 1;
        let dims: Vec<usize> = (start..=self.max)
            .step_by(2)
            .filter(|&d| !self.prime_only || is_prime(d))
            .collect();
        if dims.is_empty() {
            Err(Error::EmptyRange)
        } else {
            Ok(dims)
        }
    }
}

/// Evaluates `f` on every dimension in parallel; output is in input order.
pub fn scan<T, F>(dims: &[usize], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync,
{
    dims.par_iter().map(|&d| f(d)).collect()
}
