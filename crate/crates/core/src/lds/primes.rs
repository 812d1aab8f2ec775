const PRIME_TABLE_LEN: usize = 1024;

const fn first_primes() -> [u32; PRIME_TABLE_LEN] {
    let mut table = [0u32; PRIME_TABLE_LEN];
    let mut found = 0;
    let mut candidate = 2u32;
    while found < PRIME_TABLE_LEN {
        let mut is_prime = true;
        let mut i = 0;
        while i < found {
            let p = table[i];
            if p * p > candidate {
                break;
            }
            if candidate.is_multiple_of(p) {
                is_prime = false;
                break;
            }
            i += 1;
        }
        if is_prime {
            table[found] = candidate;
            found += 1;
        }
        candidate += 1;
    }
    table
}

pub(crate) static PRIMES: [u32; PRIME_TABLE_LEN] = first_primes();

/// The `j`th prime, 1-based (`nth_prime(1) == Some(2)`), from the embedded table.
pub fn nth_prime(j: usize) -> Option<u32> {
    j.checked_sub(1).and_then(|i| PRIMES.get(i).copied())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Smallest prime `p >= max(d, 2)`.
pub fn first_prime_geq(d: u64) -> u64 {
    let mut p = d.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}
