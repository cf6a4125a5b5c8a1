//! Kraft sums and prefix-free binary codes built by walking a binary tree.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KraftError {
    #[error("codeword length at position {0} must be positive")]
    ZeroLength(usize),
    #[error("lengths must be non-decreasing (position {0})")]
    Unsorted(usize),
    #[error("lengths violate the Kraft inequality: sum = {0}")]
    Violated(KraftSum),
}

/// Exact value of `Σ 2^-l_i` as an integer part plus binary fraction digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KraftSum {
    whole: u64,
    /// `fraction[j]` is the coefficient of `2^-(j+1)`; no trailing zeros.
    fraction: Vec<bool>,
}

impl KraftSum {
    /// Sums by counting terms per length and carrying towards the root, so
    /// the cost is linear in the number of terms plus the largest length.
    pub fn of(lengths: &[usize]) -> Result<Self, KraftError> {
        if let Some(i) = lengths.iter().position(|&l| l == 0) {
            return Err(KraftError::ZeroLength(i));
        }
        let max = lengths.iter().copied().max().unwrap_or(0);
        let mut count = vec![0u64; max + 1];
        for &l in lengths {
            count[l] += 1;
        }
        let mut fraction = vec![false; max];
        let mut carry = 0u64;
        for l in (1..=max).rev() {
            let total = count[l] + carry;
            fraction[l - 1] = total % 2 == 1;
            carry = total / 2;
        }
        while fraction.last() == Some(&false) {
            fraction.pop();
        }
        Ok(Self { whole: carry, fraction })
    }

    /// `Σ 2^-l_i ≤ 1`.
    pub fn is_satisfied(&self) -> bool {
        self.whole == 0 || (self.whole == 1 && self.fraction.is_empty())
    }

    /// Reduced fraction `(numerator, denominator)`.
    pub fn as_fraction(&self) -> (BigUint, BigUint) {
        let mut num = BigUint::from(self.whole);
        for &bit in &self.fraction {
            num = (num << 1u32) + u32::from(bit);
        }
        let den = BigUint::from(1u32) << self.fraction.len();
        (num, den)
    }
}

impl fmt::Display for KraftSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.as_fraction();
        write!(f, "{num}/{den}")
    }
}

/// Codewords `b_1..b_n` in the order of the input lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixCode {
    codewords: Vec<Vec<bool>>,
    tree_steps: usize,
}

impl PrefixCode {
    pub fn codewords(&self) -> &[Vec<bool>] {
        &self.codewords
    }

    pub fn codeword(&self, i: usize) -> &[bool] {
        &self.codewords[i]
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.codewords.iter().map(Vec::len).collect()
    }

    /// Tree edges walked (down or up) while building the code.
    pub fn tree_steps(&self) -> usize {
        self.tree_steps
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }
}

pub fn codeword_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Builds a prefix-free code with the given non-decreasing lengths.
///
/// The current root-to-leaf path is kept as a bit stack. The first leaf is
/// reached by first children only. For each further leaf we climb until we
/// leave a node through its first child (the only nodes that are still
/// unsaturated on the path), take its second child, and extend with first
/// children down to the requested depth.
pub fn build_prefix_code(lengths: &[usize]) -> Result<PrefixCode, KraftError> {
    let sum = KraftSum::of(lengths)?;
    if let Some(i) = lengths.windows(2).position(|w| w[0] > w[1]) {
        return Err(KraftError::Unsorted(i + 1));
    }
    if !sum.is_satisfied() {
        return Err(KraftError::Violated(sum));
    }

    let mut codewords = Vec::with_capacity(lengths.len());
    let mut path: Vec<bool> = Vec::new();
    let mut steps = 0;
    for (i, &len) in lengths.iter().enumerate() {
        if i > 0 {
            loop {
                match path.pop() {
                    Some(true) => steps += 1,
                    Some(false) => {
                        steps += 2;
                        path.push(true);
                        break;
                    }
                    // every node on the path is saturated
                    None => return Err(KraftError::Violated(sum)),
                }
            }
        }
        steps += len - path.len();
        path.resize(len, false);
        codewords.push(path.clone());
    }
    Ok(PrefixCode {
        codewords,
        tree_steps: steps,
    })
}

/// No codeword is a prefix of another (equal codewords count as prefixes).
pub fn is_prefix_free<C: AsRef<[bool]>>(codewords: &[C]) -> bool {
    let mut sorted: Vec<&[bool]> = codewords.iter().map(AsRef::as_ref).collect();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| !w[1].starts_with(w[0]))
}
