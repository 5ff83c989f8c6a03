//! Walsh-Hadamard transforms in natural (Hadamard) and sequency order.
//!
//! Both orderings use the unitary `1/√N` scaling, so every transform here is
//! its own inverse and preserves the Euclidean norm. Index bit `b` of a
//! coefficient position is bit `b` of its binary expansion (`k = k_{n-1}…k_0`).
//!
//! The natural-to-sequency map sends natural row `s` to its zero-crossing count
//! `g`, where `g_{n-1} = s_0` and `g_k = s_0 ⊕ s_1 ⊕ … ⊕ s_{n-1-k}`.

use std::fmt;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Default cap on the bit-width accepted by the brute-force oracles.
pub const DEFAULT_BRUTE_FORCE_BOUND: u32 = 20;

/// Which domain a coefficient vector lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    /// Time-domain samples.
    Time,
    /// Walsh coefficients indexed by natural (Hadamard) row.
    Natural,
    /// Walsh coefficients indexed by sequency.
    Sequency,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::Time => "time",
            Order::Natural => "natural",
            Order::Sequency => "sequency",
        })
    }
}

/// A real vector of power-of-two length tagged with its domain.
#[derive(Clone, Debug, PartialEq)]
pub struct Coefficients {
    values: Vec<f64>,
    order: Order,
}

impl Coefficients {
    pub fn new(values: Vec<f64>, order: Order) -> Result<Self> {
        bit_width(values.len())?;
        Ok(Self { values, order })
    }

    /// Time-domain samples.
    pub fn time(values: Vec<f64>) -> Result<Self> {
        Self::new(values, Order::Time)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `n` such that `len() == 2^n`.
    pub fn bits(&self) -> u32 {
        self.values.len().trailing_zeros()
    }

    pub fn norm(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn expect_order(&self, allowed: &[Order]) -> Result<()> {
        if allowed.contains(&self.order) {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                expected: allowed[0],
                found: self.order,
            })
        }
    }
}

/// An `n`-bit index `s`, `0 ≤ s < 2^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SequencyIndex {
    value: u64,
    bits: u32,
}

impl SequencyIndex {
    pub fn new(value: u64, bits: u32) -> Result<Self> {
        if bits == 0 || bits > 63 || value >> bits != 0 {
            return Err(Error::IndexOutOfRange { index: value, bits });
        }
        Ok(Self { value, bits })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    fn bit(self, k: u32) -> u64 {
        (self.value >> k) & 1
    }
}

/// Returns `n` with `len == 2^n`, or a sizing error.
pub fn bit_width(len: usize) -> Result<u32> {
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { len });
    }
    Ok(len.trailing_zeros())
}

/// Sequency (zero-crossing count) of natural-order Walsh row `s`.
///
/// Bit `k` of the result is the XOR of the low `n - k` bits of `s`, so the
/// most significant result bit is `s_0` and the least significant is the
/// parity of all of `s`.
pub fn sequency_of(idx: SequencyIndex) -> u64 {
    let n = idx.bits();
    let mut g = 0u64;
    let mut prefix = 0u64;
    for j in 0..n {
        // prefix = s_0 ⊕ … ⊕ s_j lands on bit n-1-j
        prefix ^= idx.bit(j);
        g |= prefix << (n - 1 - j);
    }
    g
}

/// Partial sequencies `Z_1(s(1)), Z_2(s(2)), …, Z_n(s(n))` produced by the
/// doubling recursion `Z_m = 2·Z_{m-1} + (s_0 ⊕ … ⊕ s_{m-1})`, where `s(m)`
/// keeps the `m` low bits of `s`. The last entry equals [`sequency_of`].
pub fn sequency_recursion(idx: SequencyIndex) -> Vec<u64> {
    let mut trace = Vec::with_capacity(idx.bits() as usize);
    let mut z = 0u64;
    let mut parity = 0u64;
    for m in 0..idx.bits() {
        parity ^= idx.bit(m);
        z = 2 * z + parity;
        trace.push(z);
    }
    trace
}

/// Counts sign changes of `F(k) = (-1)^{s·k}` over `k = 0…2^n-1` by direct
/// enumeration, as `½ Σ |F(k+1) − F(k)|`.
pub fn zero_crossings_bruteforce(idx: SequencyIndex) -> Result<u64> {
    zero_crossings_bruteforce_bounded(idx, DEFAULT_BRUTE_FORCE_BOUND)
}

pub fn zero_crossings_bruteforce_bounded(idx: SequencyIndex, bound: u32) -> Result<u64> {
    let n = idx.bits();
    if n > bound {
        return Err(Error::BruteForceBound { bits: n, bound });
    }
    let s = idx.value();
    let signs: Vec<i64> = (0..1u64 << n)
        .map(|k| if (s & k).count_ones() % 2 == 0 { 1 } else { -1 })
        .collect();
    Ok(count_sign_changes(&signs))
}

/// `½ Σ |F(k+1) − F(k)|` for a ±1 sequence.
pub fn count_sign_changes(signs: &[i64]) -> u64 {
    let twice: i64 = signs.windows(2).map(|w| (w[1] - w[0]).abs()).sum();
    (twice / 2) as u64
}

/// The natural-to-sequency index permutation and its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencyPermutation {
    /// `forward[s]` is the sequency of natural row `s`.
    pub forward: Vec<usize>,
    /// `inverse[g]` is the natural row with sequency `g`.
    pub inverse: Vec<usize>,
}

impl SequencyPermutation {
    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// Natural row index with sequency `g`, using `s_k = g_{n-k} ⊕ g_{n-k-1}`
/// with `g_n = 0`.
pub fn natural_index_of(g: u64, bits: u32) -> u64 {
    let bit = |k: u32| if k >= bits { 0 } else { (g >> k) & 1 };
    (0..bits).fold(0u64, |s, k| s | ((bit(bits - k) ^ bit(bits - k - 1)) << k))
}

pub fn natural_to_sequency_perm(bits: u32) -> Result<SequencyPermutation> {
    if bits == 0 {
        return Err(Error::ZeroWidth);
    }
    let len = 1usize << bits;
    let forward: Vec<usize> = (0..len as u64)
        .map(|s| sequency_of(SequencyIndex { value: s, bits }) as usize)
        .collect();
    let inverse: Vec<usize> = (0..len as u64)
        .map(|g| natural_index_of(g, bits) as usize)
        .collect();
    Ok(SequencyPermutation { forward, inverse })
}

/// In-place unitary fast Walsh-Hadamard transform in natural order.
///
/// Radix-2 butterflies with doubling stride, followed by one `1/√N` scaling
/// pass. Applying it twice returns the input.
pub fn fwht_in_place(data: &mut [f64]) -> Result<()> {
    bit_width(data.len())?;
    let len = data.len();
    let mut half = 1;
    while half < len {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
    let scale = 1.0 / (len as f64).sqrt();
    data.iter_mut().for_each(|x| *x *= scale);
    Ok(())
}

/// Sequency-ordered transform of a raw slice: natural transform, then move
/// natural row `s` to position `sequency_of(s)`.
pub fn sequency_transform(data: &[f64]) -> Result<Vec<f64>> {
    let bits = bit_width(data.len())?;
    let mut natural = data.to_vec();
    fwht_in_place(&mut natural)?;
    if bits == 0 {
        return Ok(natural);
    }
    let perm = natural_to_sequency_perm(bits)?;
    let mut out = vec![0.0; data.len()];
    for (s, &g) in perm.forward.iter().enumerate() {
        out[g] = natural[s];
    }
    Ok(out)
}

/// Inverse of [`sequency_transform`]: undo the reordering, then apply the
/// natural transform.
pub fn inverse_sequency_transform(data: &[f64]) -> Result<Vec<f64>> {
    let bits = bit_width(data.len())?;
    let mut natural = if bits == 0 {
        data.to_vec()
    } else {
        let perm = natural_to_sequency_perm(bits)?;
        perm.forward.iter().map(|&g| data[g]).collect()
    };
    fwht_in_place(&mut natural)?;
    Ok(natural)
}

/// Natural-order Walsh-Hadamard transform.
///
/// Time-domain input yields natural-order coefficients. With `inverse` set the
/// input must be natural-order coefficients and the result is time-domain; the
/// arithmetic is identical either way.
pub fn fwht_natural(v: &Coefficients, inverse: bool) -> Result<Coefficients> {
    let (from, to) = if inverse {
        (Order::Natural, Order::Time)
    } else {
        (Order::Time, Order::Natural)
    };
    v.expect_order(&[from])?;
    let mut values = v.values.clone();
    fwht_in_place(&mut values)?;
    Coefficients::new(values, to)
}

/// Sequency-ordered Walsh-Hadamard transform (time ↔ sequency).
pub fn wht_sequency(v: &Coefficients, inverse: bool) -> Result<Coefficients> {
    if inverse {
        v.expect_order(&[Order::Sequency])?;
        Coefficients::new(inverse_sequency_transform(&v.values)?, Order::Time)
    } else {
        v.expect_order(&[Order::Time])?;
        Coefficients::new(sequency_transform(&v.values)?, Order::Sequency)
    }
}

/// Dense sequency-ordered Walsh-Hadamard matrix, row-major, with entries
/// `(1/√N)·(-1)^{Σ_r k_{n-1-r}(j_r ⊕ j_{r+1})}` and `j_n = 0`.
///
/// Built straight from the closed-form sign rule; meant as an oracle.
pub fn sequency_matrix(bits: u32) -> Result<Vec<Vec<f64>>> {
    sequency_matrix_bounded(bits, DEFAULT_BRUTE_FORCE_BOUND)
}

pub fn sequency_matrix_bounded(bits: u32, bound: u32) -> Result<Vec<Vec<f64>>> {
    if bits > bound {
        return Err(Error::BruteForceBound { bits, bound });
    }
    let len = 1usize << bits;
    let scale = 1.0 / (len as f64).sqrt();
    let bit = |x: usize, r: u32| if r >= bits { 0 } else { (x >> r) & 1 };
    Ok((0..len)
        .map(|k| {
            (0..len)
                .map(|j| {
                    let exponent: usize = (0..bits)
                        .map(|r| bit(k, bits - 1 - r) & (bit(j, r) ^ bit(j, r + 1)))
                        .sum();
                    if exponent % 2 == 0 {
                        scale
                    } else {
                        -scale
                    }
                })
                .collect()
        })
        .collect())
}

/// Discrete Fourier coefficients `F̂_k = (1/√N) Σ_m f_m e^{-2πikm/N}`, the
/// same unitary scaling as the Walsh coefficients.
pub fn dft_spectrum(v: &Coefficients) -> Result<Vec<Complex64>> {
    v.expect_order(&[Order::Time])?;
    let len = v.len();
    let mut buffer: Vec<Complex64> = v.values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(len).process(&mut buffer);
    let scale = 1.0 / (len as f64).sqrt();
    buffer.iter_mut().for_each(|c| *c *= scale);
    Ok(buffer)
}
