//! Fibonacci numbers with `F_1 = 1`, `F_2 = 2` and greedy Zeckendorf
//! decomposition.

use crate::error::{Error, Result};

/// Largest index whose Fibonacci value fits in a `u64`.
pub const MAX_INDEX: usize = 92;

/// Largest start value accepted anywhere in the crate.
pub const MAX_VALUE: u64 = 1 << 62;

const fn build_table() -> [u64; MAX_INDEX + 1] {
    let mut t = [0u64; MAX_INDEX + 1];
    t[1] = 1;
    t[2] = 2;
    let mut i = 3;
    while i <= MAX_INDEX {
        t[i] = t[i - 1] + t[i - 2];
        i += 1;
    }
    t
}

/// `FIB[i] = F_i`; entry 0 is unused.
pub static FIB: [u64; MAX_INDEX + 1] = build_table();

/// Returns `F_i`.
pub fn fib_value(i: usize) -> Result<u64> {
    if i == 0 || i > MAX_INDEX {
        return Err(Error::IndexOutOfRange(i));
    }
    Ok(FIB[i])
}

/// Unchecked lookup for engine hot paths. Indices stored in a
/// [`GameState`](crate::GameState) are always in range.
#[inline]
pub(crate) fn fib(i: u8) -> u64 {
    FIB[i as usize]
}

pub(crate) fn check_value(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::StartTooSmall { n, min: 1 });
    }
    if n > MAX_VALUE {
        return Err(Error::ValueTooLarge(n));
    }
    Ok(())
}

/// Largest `l` with `F_l <= n`.
pub fn max_index_for(n: u64) -> Result<usize> {
    check_value(n)?;
    // FIB is increasing from index 1, so the partition point over 1.. is the
    // count of values <= n.
    Ok(FIB[1..].partition_point(|&f| f <= n))
}

/// Zeckendorf decomposition of `n` as ascending Fibonacci indices.
pub fn zeckendorf(n: u64) -> Result<Vec<u8>> {
    let mut rest = n;
    let mut top = max_index_for(n)?;
    let mut out = Vec::new();
    while rest > 0 {
        while FIB[top] > rest {
            top -= 1;
        }
        out.push(top as u8);
        rest -= FIB[top];
        // the next summand can be at most F_{top-2}
        top = top.saturating_sub(2).max(1);
    }
    out.reverse();
    Ok(out)
}

/// `Z(n)`: number of summands in the Zeckendorf decomposition of `n`.
pub fn z_count(n: u64) -> Result<usize> {
    Ok(zeckendorf(n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        assert_eq!(fib_value(1).unwrap(), 1);
        assert_eq!(fib_value(2).unwrap(), 2);
        assert_eq!(fib_value(6).unwrap(), 13);
        assert_eq!(fib_value(10).unwrap(), 89);
        for i in 3..=MAX_INDEX {
            assert_eq!(FIB[i], FIB[i - 1] + FIB[i - 2]);
        }
        assert!(fib_value(0).is_err());
        assert!(matches!(
            fib_value(MAX_INDEX + 1),
            Err(Error::IndexOutOfRange(93))
        ));
    }

    #[test]
    fn max_index_examples() {
        assert_eq!(max_index_for(1).unwrap(), 1);
        assert_eq!(max_index_for(2).unwrap(), 2);
        assert_eq!(max_index_for(10).unwrap(), 5);
        assert_eq!(max_index_for(100).unwrap(), 10);
        assert_eq!(max_index_for(89).unwrap(), 10);
        assert_eq!(max_index_for(88).unwrap(), 9);
    }

    #[test]
    fn guard_rejects_large_and_zero() {
        assert!(matches!(max_index_for(0), Err(Error::StartTooSmall { .. })));
        assert!(matches!(
            max_index_for(MAX_VALUE + 1),
            Err(Error::ValueTooLarge(_))
        ));
        let l = max_index_for(MAX_VALUE).unwrap();
        assert!(FIB[l] <= MAX_VALUE && MAX_VALUE < FIB[l + 1]);
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(zeckendorf(1).unwrap(), vec![1]);
        assert_eq!(zeckendorf(4).unwrap(), vec![1, 3]);
        assert_eq!(zeckendorf(10).unwrap(), vec![2, 5]);
        assert_eq!(zeckendorf(100).unwrap(), vec![3, 5, 10]);
        assert_eq!(z_count(1).unwrap(), 1);
        assert_eq!(z_count(10).unwrap(), 2);
        assert_eq!(z_count(100).unwrap(), 3);
        assert_eq!(zeckendorf(MAX_VALUE).unwrap().iter().map(|&i| FIB[i as usize]).sum::<u64>(), MAX_VALUE);
    }

    #[test]
    fn max_index_bracket_up_to_a_million() {
        for n in 1..=1_000_000u64 {
            let l = max_index_for(n).unwrap();
            assert!(FIB[l] <= n && n < FIB[l + 1], "n={n}");
        }
    }
}
