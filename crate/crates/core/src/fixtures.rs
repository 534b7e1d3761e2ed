//! Stored Betti table of `R/I_{K_7}`, checked against a SHA-256 digest on load.

use sha2::{Digest, Sha256};

use crate::betti::BettiTable;
use crate::error::{Error, Result};

pub const K7_BETTI: &str = include_str!("../data/k7_betti.txt");
pub const K7_BETTI_SHA256: &str =
    "235980af731b2914af6a9b8461607de4976307e312648de3c287f564b11f54df";

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Parses `i j beta` lines; `#` starts a comment.
pub fn parse_betti_table(text: &str, arity: usize) -> Result<BettiTable> {
    let mut table = BettiTable::new(arity);
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed: Option<Vec<u64>> = fields.iter().map(|f| f.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[i, j, b]) if j >= i => {
                if table.get(i as usize, j as usize) != 0 {
                    return Err(Error::Fixture(format!(
                        "line {}: duplicate entry ({i}, {j})",
                        lineno + 1
                    )));
                }
                table.set(i as usize, j as usize, b);
            }
            _ => {
                return Err(Error::Fixture(format!(
                    "line {}: expected `i j beta` with j >= i",
                    lineno + 1
                )))
            }
        }
    }
    Ok(table)
}

/// Verifies the digest of `text` and parses it.
pub fn load_checked(text: &str, sha256: &str, arity: usize) -> Result<BettiTable> {
    let actual = sha256_hex(text.as_bytes());
    if actual != sha256 {
        return Err(Error::Fixture(format!(
            "checksum mismatch: expected {sha256}, got {actual}"
        )));
    }
    parse_betti_table(text, arity)
}

/// The `K_7` table in 14 variables.
pub fn k7_betti_table() -> Result<BettiTable> {
    load_checked(K7_BETTI, K7_BETTI_SHA256, 14)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_loads_with_expected_totals() {
        let t = k7_betti_table().unwrap();
        let totals: Vec<u64> = (0..=11).map(|i| t.total(i)).collect();
        assert_eq!(
            totals,
            vec![1, 21, 455, 1925, 4256, 6111, 6160, 4466, 2289, 784, 161, 15]
        );
        assert_eq!((t.pd(), t.reg(), t.depth()), (Some(11), Some(3), Some(3)));
    }

    #[test]
    fn tampering_is_detected() {
        let tampered = K7_BETTI.replace("11 14 15", "11 14 16");
        assert!(matches!(
            load_checked(&tampered, K7_BETTI_SHA256, 14),
            Err(Error::Fixture(_))
        ));
        assert!(parse_betti_table("1 2\n", 4).is_err());
        assert!(parse_betti_table("2 1 5\n", 4).is_err());
        assert!(parse_betti_table("1 2 3\n1 2 3\n", 4).is_err());
    }
}
