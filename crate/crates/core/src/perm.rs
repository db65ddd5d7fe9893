//! Permutations of `{0, …, n-1}` stored as image sequences.
//!
//! Points are 0-based everywhere inside the crate; cycle notation read or
//! written by this module uses 1-based labels.
//!
//! Composition applies the right factor first: `p.compose(&q)` maps
//! `i ↦ p(q(i))`. Two permutations `π` and `σ` intersect exactly when
//! `π.compose(&σ.inverse())` has a fixed point.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A bijection on `{0, …, degree-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroDegree)
    } else if n > u16::MAX as usize {
        Err(Error::DegreeTooLarge(n))
    } else {
        Ok(())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n)?;
        Ok(Permutation {
            images: (0..n as u16).collect(),
        })
    }

    /// Builds a permutation from its image sequence, validating bijectivity.
    pub fn from_images<I>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<usize> = images.into_iter().collect();
        let n = images.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotABijection(n));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Caller guarantees `images` is a bijection of `0..images.len()`.
    pub(crate) fn from_raw(images: Vec<u16>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x as usize)
        });
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// Image of point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, k: u64) -> Permutation {
        let mut result = Permutation {
            images: (0..self.degree() as u16).collect(),
        };
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        result
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x as usize)
            .count()
    }

    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i != x as usize)
    }

    /// True when `self` and `other` agree on at least one point, i.e. when
    /// `self · other⁻¹` has a fixed point.
    pub fn intersects(&self, other: &Permutation) -> bool {
        self.agreement_count(other) > 0
    }

    /// Number of points on which `self` and `other` agree; equals the number
    /// of fixed points of `self · other⁻¹`.
    pub fn agreement_count(&self, other: &Permutation) -> usize {
        self.images.iter().zip(&other.images).filter(|(a, b)| a == b).count()
    }

    /// All cycles including fixed points, each rotated to start at its
    /// minimum, ordered by minimum.
    pub fn all_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Non-trivial cycles in canonical order (0-based points).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.all_cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// Cycle lengths, fixed points included, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.all_cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// Least `k ≥ 1` with `self^k = id`.
    pub fn order(&self) -> u64 {
        self.all_cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Parses cycle notation with 1-based labels, e.g. `"(1 2)(3 4 5)"`.
    ///
    /// Labels inside a cycle may be separated by whitespace or commas. The
    /// empty string and `"()"` denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        check_degree(degree)?;
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        let bytes = text.as_bytes();
        let mut pos = 0;
        let malformed = |position: usize, message: &str| Error::MalformedCycles {
            position,
            message: message.to_string(),
        };
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(malformed(pos, "expected '('"));
            }
            pos += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',') {
                    pos += 1;
                }
                if pos == bytes.len() {
                    return Err(malformed(pos, "unterminated cycle"));
                }
                if bytes[pos] == b')' {
                    pos += 1;
                    break;
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(malformed(pos, "expected a point label"));
                }
                let label: usize = text[start..pos]
                    .parse()
                    .map_err(|_| malformed(start, "label does not fit in an integer"))?;
                if label == 0 || label > degree {
                    return Err(Error::LabelOutOfRange { label, degree });
                }
                if used[label - 1] {
                    return Err(Error::RepeatedLabel(label));
                }
                used[label - 1] = true;
                cycle.push(label - 1);
            }
            for (k, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(k + 1) % cycle.len()] as u16;
            }
        }
        Ok(Permutation { images })
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Same as [`Permutation::compose`]; panics on a degree mismatch.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

/// Canonical cycle text: cycles rotated to their minimum, sorted by minimum,
/// fixed points omitted, identity rendered as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
