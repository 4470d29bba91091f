/// Binomial coefficient with `C(n, k) = 0` whenever `k < 0`, `n < 0` or
/// `k > n`. Panics if the value does not fit in `u64`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn edge_cases() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(-1, -1), 0);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}
