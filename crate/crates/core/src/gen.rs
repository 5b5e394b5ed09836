//! Reproducible random strings from a splitmix64 stream.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Result, SagpError};
use crate::text::Text;

/// `len` symbols drawn uniformly from `0..sigma`.
pub fn random_symbols(len: usize, sigma: usize, seed: u64) -> Result<Vec<u64>> {
    if sigma == 0 {
        return Err(SagpError::EmptyAlphabet);
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    Ok((0..len).map(|_| rng.next_u64() % sigma as u64).collect())
}

pub fn random_text(len: usize, sigma: usize, seed: u64) -> Result<Text> {
    random_symbols(len, sigma, seed).map(|s| Text::from_symbols(&s))
}

/// Letters `a..z` when `sigma <= 26`, space-separated integers otherwise.
pub fn render(symbols: &[u64], sigma: usize) -> String {
    if sigma <= 26 {
        symbols.iter().map(|&s| (b'a' + s as u8) as char).collect()
    } else {
        symbols.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
    }
}
