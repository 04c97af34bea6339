//! Goresky–MacPherson perversities.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// The four standard perversities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StandardPerversity {
    Zero,
    LowerMiddle,
    UpperMiddle,
    Top,
}

impl StandardPerversity {
    pub const ALL: [StandardPerversity; 4] =
        [StandardPerversity::Zero, StandardPerversity::LowerMiddle, StandardPerversity::UpperMiddle, StandardPerversity::Top];

    pub fn name(self) -> &'static str {
        match self {
            StandardPerversity::Zero => "zero",
            StandardPerversity::LowerMiddle => "lower-middle",
            StandardPerversity::UpperMiddle => "upper-middle",
            StandardPerversity::Top => "top",
        }
    }

    /// `p_k` for `k >= 2`.
    pub fn value(self, k: usize) -> i64 {
        let c = k as i64 - 2;
        match self {
            StandardPerversity::Zero => 0,
            StandardPerversity::LowerMiddle => c / 2,
            StandardPerversity::UpperMiddle => (c + 1) / 2,
            StandardPerversity::Top => c,
        }
    }

    pub fn for_dim(self, n: usize) -> Perversity {
        Perversity { n, values: (2..=n).map(|k| self.value(k)).collect() }
    }
}

impl fmt::Display for StandardPerversity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StandardPerversity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardPerversity::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::UnknownPerversity(s.to_string()))
    }
}

/// A perversity `p_2, ..., p_n` for an `n`-dimensional space, with `p_2 = 0`
/// and `p_k <= p_{k+1} <= p_k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perversity {
    n: usize,
    values: Vec<i64>,
}

impl Perversity {
    /// Validates `values = [p_2, ..., p_n]`. Dimensions below 2 take no values.
    pub fn new(values: Vec<i64>, n: usize) -> Result<Self> {
        let expected = n.saturating_sub(1);
        if values.len() != expected {
            return Err(Error::PerversityLength { n, len: values.len() });
        }
        if let Some(&first) = values.first() {
            if first != 0 {
                return Err(Error::PerversityGrowth { k: 2 });
            }
        }
        for (i, w) in values.windows(2).enumerate() {
            let step = w[1] - w[0];
            if !(0..=1).contains(&step) {
                return Err(Error::PerversityGrowth { k: i + 3 });
            }
        }
        Ok(Perversity { n, values })
    }

    pub fn standard(kind: StandardPerversity, n: usize) -> Self {
        kind.for_dim(n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p_2, ..., p_n`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `p_k`; zero for `k < 2`.
    ///
    /// # Panics
    /// If `k > n`.
    pub fn p(&self, k: usize) -> i64 {
        if k < 2 {
            return 0;
        }
        assert!(k <= self.n, "p_{k} undefined for dimension {}", self.n);
        self.values[k - 2]
    }

    /// `q_k = (k - 2) - p_k`.
    pub fn complementary(&self) -> Self {
        Perversity { n: self.n, values: (2..=self.n).map(|k| (k as i64 - 2) - self.p(k)).collect() }
    }

    /// The same sequence seen on a space of dimension `m <= n`, as needed on links.
    pub fn restrict(&self, m: usize) -> Self {
        assert!(m <= self.n, "cannot extend a perversity");
        Perversity { n: m, values: self.values[..m.saturating_sub(1)].to_vec() }
    }

    /// The standard perversity this one equals, if any.
    pub fn as_standard(&self) -> Option<StandardPerversity> {
        StandardPerversity::ALL.into_iter().find(|s| s.for_dim(self.n) == *self)
    }

    /// Parses `zero | lower-middle | upper-middle | top | custom:<p_2,...,p_n>`.
    pub fn parse(spec: &str, n: usize) -> Result<Self> {
        if let Some(rest) = spec.strip_prefix("custom:") {
            let values = if rest.trim().is_empty() {
                Vec::new()
            } else {
                rest.split(',')
                    .map(|v| v.trim().parse::<i64>().map_err(|_| Error::UnknownPerversity(spec.to_string())))
                    .collect::<Result<Vec<_>>>()?
            };
            return Perversity::new(values, n);
        }
        Ok(spec.parse::<StandardPerversity>()?.for_dim(n))
    }

    /// Canonical spelling, inverse of [`Perversity::parse`].
    pub fn spelling(&self) -> String {
        match self.as_standard() {
            Some(s) if self.n >= 2 => s.name().to_string(),
            _ => {
                let vals: Vec<String> = self.values.iter().map(|v| format!("{v}")).collect();
                format!("custom:{}", vals.join(","))
            }
        }
    }
}

impl fmt::Display for Perversity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spelling())
    }
}
